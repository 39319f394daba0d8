//! Frequency-branch mode decomposition of Klein-Gordon Cauchy data.
//!
//! Each wavenumber splits into an e^{−iωt} branch (a₊) and an e^{+iωt}
//! branch (a₋) with ω = dispersion(κ). The split is fixed by
//! a± = (ψ̂ ± i·∂₀ψ̂/ω)/2, which reproduces (ψ̂, ∂₀ψ̂) exactly:
//! ψ̂ = a₊ + a₋ and ∂₀ψ̂ = −iω(a₊ − a₋).

use num_complex::Complex64;

use crate::constants::PhysicalConstants;
use crate::error::Result;
use crate::grid::Grid;

/// ω(κ) = c·sqrt(κ² + λ⁻²); ω ≥ c/λ > 0, even in κ.
pub fn dispersion(kappa: f64, constants: &PhysicalConstants) -> f64 {
    let inv_l = 1.0 / constants.lambda();
    constants.c() * (kappa * kappa + inv_l * inv_l).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// e^{−iωt} (positive frequency).
    Plus,
    /// e^{+iωt} (negative frequency).
    Minus,
}

impl Branch {
    /// The factor multiplying ψ̂ under ∂₀ on this branch: ∓iω.
    pub fn d0_factor(&self, omega: f64) -> Complex64 {
        match self {
            Branch::Plus => Complex64::new(0.0, -omega),
            Branch::Minus => Complex64::new(0.0, omega),
        }
    }

    /// Phase advance over dt: e^{∓iω·dt}.
    pub fn phase(&self, omega: f64, dt: f64) -> Complex64 {
        (self.d0_factor(omega) * dt).exp()
    }
}

/// Per-wavenumber branch amplitudes of a scalar state at a reference time.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeDecomposition {
    pub t: f64,
    pub a_plus: Vec<Complex64>,
    pub a_minus: Vec<Complex64>,
}

impl ModeDecomposition {
    pub fn zero(n: usize, t: f64) -> Self {
        Self { t, a_plus: vec![Complex64::default(); n], a_minus: vec![Complex64::default(); n] }
    }

    /// Branch split of sampled Cauchy data (ψ, ∂₀ψ).
    pub fn from_cauchy(
        psi: &[Complex64],
        dpsi_dt: &[Complex64],
        t: f64,
        grid: &Grid,
        constants: &PhysicalConstants,
    ) -> Result<Self> {
        let psi_hat = grid.to_spectrum(psi)?;
        let d_hat = grid.to_spectrum(dpsi_dt)?;
        let i = Complex64::new(0.0, 1.0);
        let mut a_plus = Vec::with_capacity(grid.n());
        let mut a_minus = Vec::with_capacity(grid.n());
        for (k, &kappa) in grid.kappas().iter().enumerate() {
            let omega = dispersion(kappa, constants);
            a_plus.push(0.5 * (psi_hat[k] + i * d_hat[k] / omega));
            a_minus.push(0.5 * (psi_hat[k] - i * d_hat[k] / omega));
        }
        Ok(Self { t, a_plus, a_minus })
    }

    /// Amplitudes advanced to time `t` (exact per-mode phases).
    pub fn at_time(&self, t: f64, grid: &Grid, constants: &PhysicalConstants) -> Self {
        let dt = t - self.t;
        let a_plus = self
            .a_plus
            .iter()
            .zip(grid.kappas())
            .map(|(a, &k)| a * Branch::Plus.phase(dispersion(k, constants), dt))
            .collect();
        let a_minus = self
            .a_minus
            .iter()
            .zip(grid.kappas())
            .map(|(a, &k)| a * Branch::Minus.phase(dispersion(k, constants), dt))
            .collect();
        Self { t, a_plus, a_minus }
    }

    /// Render (ψ, ∂₀ψ) samples at the decomposition's own time.
    pub fn render(
        &self,
        grid: &Grid,
        constants: &PhysicalConstants,
    ) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
        let n = grid.n();
        let mut psi_hat = vec![Complex64::default(); n];
        let mut d_hat = vec![Complex64::default(); n];
        for (k, &kappa) in grid.kappas().iter().enumerate() {
            let omega = dispersion(kappa, constants);
            psi_hat[k] = self.a_plus[k] + self.a_minus[k];
            d_hat[k] = Branch::Plus.d0_factor(omega) * self.a_plus[k]
                + Branch::Minus.d0_factor(omega) * self.a_minus[k];
        }
        Ok((grid.from_spectrum(&psi_hat)?, grid.from_spectrum(&d_hat)?))
    }

    /// Sum of |a₊|² + |a₋|² (propagation invariant).
    pub fn branch_norm_sq(&self) -> f64 {
        self.a_plus.iter().chain(&self.a_minus).map(|a| a.norm_sqr()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::max_abs_diff;

    #[test]
    fn dispersion_examples() {
        let nu = PhysicalConstants::natural_units();
        assert!((dispersion(0.0, &nu) - 1.0).abs() < 1e-15);
        assert!((dispersion(1.0, &nu) - 2f64.sqrt()).abs() < 1e-15);
        assert!((dispersion(-1.0, &nu) - dispersion(1.0, &nu)).abs() < 1e-16);
    }

    #[test]
    fn pure_plus_mode_splits_cleanly() {
        let nu = PhysicalConstants::natural_units();
        let grid = Grid::new(32, 8.0).unwrap();
        let k_idx = 3;
        let kappa = grid.kappas()[k_idx];
        let omega = dispersion(kappa, &nu);
        let psi: Vec<Complex64> =
            grid.points().iter().map(|&x| Complex64::new(0.0, kappa * x).exp()).collect();
        let dpsi: Vec<Complex64> =
            psi.iter().map(|v| v * Complex64::new(0.0, -omega)).collect();
        let modes = ModeDecomposition::from_cauchy(&psi, &dpsi, 0.0, &grid, &nu).unwrap();
        for (k, a) in modes.a_plus.iter().enumerate() {
            let want = if k == k_idx { 1.0 } else { 0.0 };
            assert!((a.norm() - want).abs() < 1e-12, "a_plus[{k}] = {a}");
        }
        for a in &modes.a_minus {
            assert!(a.norm() < 1e-12);
        }
    }

    #[test]
    fn standing_wave_is_branch_symmetric() {
        let nu = PhysicalConstants::natural_units();
        let grid = Grid::new(32, 8.0).unwrap();
        let kappa = grid.kappas()[2];
        let psi: Vec<Complex64> =
            grid.points().iter().map(|&x| Complex64::new((kappa * x).cos(), 0.0)).collect();
        let dpsi = vec![Complex64::default(); 32];
        let modes = ModeDecomposition::from_cauchy(&psi, &dpsi, 0.0, &grid, &nu).unwrap();
        for (ap, am) in modes.a_plus.iter().zip(&modes.a_minus) {
            assert!((ap - am).norm() < 1e-13);
        }
    }

    #[test]
    fn zero_state_zero_modes() {
        let nu = PhysicalConstants::natural_units();
        let grid = Grid::new(16, 4.0).unwrap();
        let z = vec![Complex64::default(); 16];
        let modes = ModeDecomposition::from_cauchy(&z, &z, 0.0, &grid, &nu).unwrap();
        assert!(modes.branch_norm_sq() == 0.0);
    }

    #[test]
    fn roundtrip_random_cauchy_data() {
        let nu = PhysicalConstants::natural_units();
        let grid = Grid::new(64, 16.0).unwrap();
        // deterministic pseudo-random band-limited data
        let mut psi_hat = vec![Complex64::default(); 64];
        let mut d_hat = vec![Complex64::default(); 64];
        for k in 0..10 {
            let s = (k as f64 * 0.7).sin();
            let c = (k as f64 * 1.3).cos();
            psi_hat[k] = Complex64::new(s, c);
            psi_hat[63 - k] = Complex64::new(c * 0.5, -s);
            d_hat[k] = Complex64::new(-c, s * 0.2);
            d_hat[63 - k] = Complex64::new(s * 0.1, c);
        }
        let psi = grid.from_spectrum(&psi_hat).unwrap();
        let dpsi = grid.from_spectrum(&d_hat).unwrap();
        let modes = ModeDecomposition::from_cauchy(&psi, &dpsi, 0.5, &grid, &nu).unwrap();
        let (p2, d2) = modes.render(&grid, &nu).unwrap();
        let scale = crate::grid::max_abs(&psi).max(crate::grid::max_abs(&dpsi));
        assert!(max_abs_diff(&psi, &p2) / scale < 1e-12);
        assert!(max_abs_diff(&dpsi, &d2) / scale < 1e-12);
    }
}
