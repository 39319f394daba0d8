//! Physical constants and the 1+1D metric.
//!
//! Metric convention: g_ik = diag{c², −1}, g^ik = diag{c⁻², −1}, with
//! coordinates x⁰ = t, x¹ = x. The Compton length λ = ħ/(mc) is stored
//! so that every formula uses exactly the same derived value.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    m: f64,
    c: f64,
    hbar: f64,
    lambda: f64,
}

impl PhysicalConstants {
    pub fn new(m: f64, c: f64, hbar: f64) -> Result<Self> {
        if !(m > 0.0) {
            return Err(Error::NonPositive { name: "m", value: m });
        }
        if !(c > 0.0) {
            return Err(Error::NonPositive { name: "c", value: c });
        }
        if !(hbar > 0.0) {
            return Err(Error::NonPositive { name: "hbar", value: hbar });
        }
        Ok(Self { m, c, hbar, lambda: hbar / (m * c) })
    }

    /// Natural units m = ħ = c = 1 (λ = 1).
    pub fn natural_units() -> Self {
        Self { m: 1.0, c: 1.0, hbar: 1.0, lambda: 1.0 }
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// λ = ħ/(mc), exactly as stored.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Rest angular frequency mc²/ħ = c/λ.
    pub fn omega_rest(&self) -> f64 {
        self.c / self.lambda
    }

    /// g_kk diagonal (lower indices): {c², −1}.
    pub fn g_lower(&self) -> [f64; 2] {
        [self.c * self.c, -1.0]
    }

    /// g^kk diagonal (upper indices): {c⁻², −1}.
    pub fn g_upper(&self) -> [f64; 2] {
        [1.0 / (self.c * self.c), -1.0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_is_derived() {
        let k = PhysicalConstants::new(2.0, 3.0, 5.0).unwrap();
        assert_eq!(k.lambda(), 5.0 / 6.0);
        assert_eq!(k.omega_rest(), 3.0 / (5.0 / 6.0));
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(PhysicalConstants::new(0.0, 1.0, 1.0).is_err());
        assert!(PhysicalConstants::new(1.0, -1.0, 1.0).is_err());
        assert!(PhysicalConstants::new(1.0, 1.0, f64::NAN).is_err());
    }
}
