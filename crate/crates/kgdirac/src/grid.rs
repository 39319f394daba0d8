//! Periodic uniform grid and spectral calculus.
//!
//! Sample points x_j = −L/2 + j·dx, wavenumbers κ_k = 2π·k̃/L with the
//! standard signed DFT index k̃ (Nyquist at −n/2). Mode amplitudes are
//! defined against the physical coordinate, ψ(x_j) = Σ_k ψ̂_k e^{iκ_k x_j},
//! so spectra line up with closed-form fields; the −L/2 origin shift folds
//! into an exact (−1)^k factor on each amplitude.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Grid {
    n: usize,
    length: f64,
    dx: f64,
    kappas: Vec<f64>,
    points: Vec<f64>,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for Grid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Grid")
            .field("n", &self.n)
            .field("length", &self.length)
            .field("dx", &self.dx)
            .finish()
    }
}

impl PartialEq for Grid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.length == other.length
    }
}

impl Grid {
    pub fn new(n: usize, length: f64) -> Result<Self> {
        if n < 4 || n % 2 != 0 {
            return Err(Error::BadGridSize { n });
        }
        if !(length > 0.0) {
            return Err(Error::NonPositive { name: "L", value: length });
        }
        let dx = length / n as f64;
        let two_pi = 2.0 * std::f64::consts::PI;
        let kappas: Vec<f64> = (0..n)
            .map(|k| {
                let signed = if k <= n / 2 - 1 { k as f64 } else { k as f64 - n as f64 };
                two_pi * signed / length
            })
            .collect();
        let points: Vec<f64> = (0..n).map(|j| -length / 2.0 + j as f64 * dx).collect();
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(n);
        let inv = planner.plan_fft_inverse(n);
        Ok(Self { n, length, dx, kappas, points, fwd, inv })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn kappas(&self) -> &[f64] {
        &self.kappas
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Index of the unpaired Nyquist mode κ = −(n/2)·2π/L.
    pub fn nyquist_index(&self) -> usize {
        self.n / 2
    }

    /// Index of `kappa` among the grid modes, or an error if it is not one.
    pub fn mode_index(&self, kappa: f64) -> Result<usize> {
        let dk = 2.0 * std::f64::consts::PI / self.length;
        let tol = 1e-9 * dk.max(1.0);
        self.kappas
            .iter()
            .position(|&k| (k - kappa).abs() < tol)
            .ok_or(Error::OffGridWavenumber { kappa })
    }

    fn check_len(&self, field: &[Complex64]) -> Result<()> {
        if field.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: field.len() });
        }
        Ok(())
    }

    /// Samples → mode amplitudes (κ-indexed like `kappas`).
    pub fn to_spectrum(&self, field: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_len(field)?;
        let mut buf = field.to_vec();
        self.fwd.process(&mut buf);
        let scale = 1.0 / self.n as f64;
        for (k, v) in buf.iter_mut().enumerate() {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            *v *= sign * scale;
        }
        Ok(buf)
    }

    /// Mode amplitudes → samples.
    pub fn from_spectrum(&self, spectrum: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_len(spectrum)?;
        let mut buf = spectrum.to_vec();
        for (k, v) in buf.iter_mut().enumerate() {
            if k % 2 != 0 {
                *v = -*v;
            }
        }
        self.inv.process(&mut buf);
        Ok(buf)
    }

    /// Diagonal action of `symbol(κ)` in Fourier space. The symbol must be
    /// finite at every grid mode; the first offending κ is reported.
    pub fn apply_multiplier<F>(&self, field: &[Complex64], symbol: F) -> Result<Vec<Complex64>>
    where
        F: Fn(f64) -> Complex64,
    {
        let mut spec = self.to_spectrum(field)?;
        for (v, &kappa) in spec.iter_mut().zip(&self.kappas) {
            let s = symbol(kappa);
            if !s.re.is_finite() || !s.im.is_finite() {
                return Err(Error::SingularSymbol { kappa, denom: 0.0 });
            }
            *v *= s;
        }
        self.from_spectrum(&spec)
    }

    /// Spectral ∂₁. Exact for band-limited fields; the unpaired Nyquist
    /// mode is zeroed (its iκ action has no conjugate partner).
    pub fn spatial_derivative(&self, field: &[Complex64]) -> Result<Vec<Complex64>> {
        let ny = self.nyquist_index();
        let mut spec = self.to_spectrum(field)?;
        for (k, v) in spec.iter_mut().enumerate() {
            if k == ny {
                *v = Complex64::new(0.0, 0.0);
            } else {
                *v *= Complex64::new(0.0, self.kappas[k]);
            }
        }
        self.from_spectrum(&spec)
    }

    /// Spectral ∂₁∂₁ (−κ² multiplier, Nyquist zeroed to match two
    /// applications of `spatial_derivative`).
    pub fn second_derivative(&self, field: &[Complex64]) -> Result<Vec<Complex64>> {
        let ny = self.nyquist_index();
        let mut spec = self.to_spectrum(field)?;
        for (k, v) in spec.iter_mut().enumerate() {
            if k == ny {
                *v = Complex64::new(0.0, 0.0);
            } else {
                *v *= -self.kappas[k] * self.kappas[k];
            }
        }
        self.from_spectrum(&spec)
    }
}

/// max_j |a_j − b_j| over complex arrays.
pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// max_j |a_j|.
pub fn max_abs(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Relative sup-norm error with the 1e−30 floor on the reference scale.
pub fn rel_error(diff: f64, reference: f64) -> f64 {
    diff / reference.max(1e-30)
}
