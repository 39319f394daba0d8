//! The scalar ↔ spinor change of variables.
//!
//! Forward: ψ_D = L(w, ∂, λ)ψ with the two-component first-order operator
//!
//!   L(w,∂,λ) = ( √w₊ + iλ√w₋ ∂₊ ,  √w₋ + iλ√w₊ ∂₋ )ᵀ,   ∂± = c⁻¹∂₀ ± ∂₁.
//!
//! Inverse: ψ is recovered through Q̂ = (w₁ + iλw∂₁)⁻¹, a Fourier multiplier
//! with symbol 1/(w₁ − λwκ) and a real singular wavenumber κ* = w₁/(λw).
//!
//! The commonly printed reconstruction carries a plus sign,
//! ψ = ½Q̂(√w₊ψ₊ + √w₋ψ₋); the plane-wave oracle shows the combination that
//! Q̂ actually inverts is ½(√w₊ψ₊ − √w₋ψ₋) = (w₁ − λwκ)ψ on both frequency
//! branches. Both variants are implemented ([`Variant`]); the corrected one
//! is the default and the printed one is kept as a documented regression.
//! The companion ∂₀ψ reconstruction verifies as printed (see DEVIATIONS.md).

use num_complex::Complex64;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::fields::{ScalarState, SpinorModes, SpinorState, WVector};
use crate::grid::Grid;
use crate::lorentz::GammaRepresentation;
use crate::modes::{dispersion, Branch};

/// Which printed-vs-corrected form of a deviant formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Oracle-corrected form (the one that passes its identity test).
    Corrected,
    /// Form exactly as commonly printed.
    PaperExact,
}

/// Default guard band around the Q̂ singularity.
pub const EPS_SINGULAR: f64 = 1e-6;

/// Fourier symbol of Q̂ for a given w, with singularity bookkeeping.
#[derive(Debug, Clone, Copy)]
pub struct QSymbol {
    w1: f64,
    lambda_w: f64,
    eps: f64,
}

impl QSymbol {
    pub fn new(w: &WVector, constants: &PhysicalConstants, eps: f64) -> Self {
        Self { w1: w.w1(), lambda_w: constants.lambda() * w.norm(), eps }
    }

    /// The singular wavenumber κ* = w₁/(λw) (infinite for null w).
    pub fn singular_kappa(&self) -> f64 {
        self.w1 / self.lambda_w
    }

    pub fn denominator(&self, kappa: f64) -> f64 {
        self.w1 - self.lambda_w * kappa
    }

    /// Fail if any grid mode sits inside the guard band.
    pub fn validate(&self, grid: &Grid) -> Result<()> {
        for &kappa in grid.kappas() {
            let denom = self.denominator(kappa);
            if denom.abs() <= self.eps {
                return Err(Error::SingularSymbol { kappa, denom });
            }
        }
        Ok(())
    }

    pub fn value(&self, kappa: f64) -> Complex64 {
        Complex64::new(1.0 / self.denominator(kappa), 0.0)
    }
}

/// Action of the two L components on an exponential e^{p₀t + p₁x}:
/// [√w₊ + iλ√w₋(p₀/c + p₁), √w₋ + iλ√w₊(p₀/c − p₁)].
pub fn l_factors(
    w: &WVector,
    p0: Complex64,
    p1: Complex64,
    constants: &PhysicalConstants,
) -> [Complex64; 2] {
    let il = Complex64::new(0.0, constants.lambda());
    let sp = w.w_plus().sqrt();
    let sm = w.w_minus().sqrt();
    let dplus = p0 / constants.c() + p1;
    let dminus = p0 / constants.c() - p1;
    [sp + il * sm * dplus, sm + il * sp * dminus]
}

/// ψ_D = L(w,∂,λ)ψ on a grid state. Samples are built from the Cauchy
/// samples (spectral ∂₁), the declaration from the scalar branch content.
pub fn spinorize(
    state: &ScalarState,
    w: &WVector,
    grid: &Grid,
    constants: &PhysicalConstants,
) -> Result<SpinorState> {
    let c = constants.c();
    let il = Complex64::new(0.0, constants.lambda());
    let sp = w.w_plus().sqrt();
    let sm = w.w_minus().sqrt();
    let d1 = grid.spatial_derivative(&state.psi)?;
    let n = grid.n();
    let mut psi_plus = Vec::with_capacity(n);
    let mut psi_minus = Vec::with_capacity(n);
    for j in 0..n {
        let dplus = state.dpsi_dt[j] / c + d1[j];
        let dminus = state.dpsi_dt[j] / c - d1[j];
        psi_plus.push(sp * state.psi[j] + il * sm * dplus);
        psi_minus.push(sm * state.psi[j] + il * sp * dminus);
    }
    let mut modes = SpinorModes::zero(n, state.t);
    for (k, &kappa) in grid.kappas().iter().enumerate() {
        let omega = dispersion(kappa, constants);
        let ik = Complex64::new(0.0, kappa);
        let f_pos = l_factors(w, Branch::Plus.d0_factor(omega), ik, constants);
        let f_neg = l_factors(w, Branch::Minus.d0_factor(omega), ik, constants);
        modes.pos[k] = [f_pos[0] * state.modes.a_plus[k], f_pos[1] * state.modes.a_plus[k]];
        modes.neg[k] = [f_neg[0] * state.modes.a_minus[k], f_neg[1] * state.modes.a_minus[k]];
    }
    Ok(SpinorState { t: state.t, psi_plus, psi_minus, modes })
}

/// Inverse transform: recover (ψ, ∂₀ψ) from (ψ₊, ψ₋).
///
/// Timelike w uses the explicit Q̂ formulas (the `variant` selects the
/// reconstruction sign; the ∂₀ψ formula is as printed). Null w (where the
/// printed ∂₀ψ formula divides by √w₊√w₋ = 0) uses the equivalent per-mode
/// 2×2 inversion of the L relations, whose determinant carries the same
/// singular factor (w₁ − λwκ).
pub fn scalarize(
    state: &SpinorState,
    w: &WVector,
    grid: &Grid,
    constants: &PhysicalConstants,
    variant: Variant,
) -> Result<ScalarState> {
    let q = QSymbol::new(w, constants, EPS_SINGULAR);
    if w.is_null() {
        if variant == Variant::PaperExact {
            return Err(Error::Config(
                "paper-exact inverse is undefined for null w (division by sqrt(wـ±) = 0)".into(),
            ));
        }
        return scalarize_null(state, w, grid, constants);
    }
    q.validate(grid)?;
    let c = constants.c();
    let l = constants.lambda();
    let sp = w.w_plus().sqrt();
    let sm = w.w_minus().sqrt();
    let plus_hat = grid.to_spectrum(&state.psi_plus)?;
    let minus_hat = grid.to_spectrum(&state.psi_minus)?;
    let n = grid.n();
    let mut psi_hat = vec![Complex64::default(); n];
    let mut d0_hat = vec![Complex64::default(); n];
    let i = Complex64::new(0.0, 1.0);
    for (k, &kappa) in grid.kappas().iter().enumerate() {
        let qk = q.value(kappa);
        let sign = match variant {
            Variant::Corrected => -1.0,
            Variant::PaperExact => 1.0,
        };
        psi_hat[k] = 0.5 * qk * (sp * plus_hat[k] + sign * sm * minus_hat[k]);
        // c⁻¹∂₀ψ = −i(1 − c⁻¹w₀Q̂)/(2λ√w₋)·ψ₊ − i(1 + c⁻¹w₀Q̂)/(2λ√w₊)·ψ₋
        let w0_q = w.w0() / c * qk;
        let term_p = (plus_hat[k] - w0_q * plus_hat[k]) / (2.0 * l * sm);
        let term_m = (minus_hat[k] + w0_q * minus_hat[k]) / (2.0 * l * sp);
        d0_hat[k] = -i * c * (term_p + term_m);
    }
    let psi = grid.from_spectrum(&psi_hat)?;
    let dpsi = grid.from_spectrum(&d0_hat)?;
    ScalarState::from_cauchy(psi, dpsi, state.t, grid, constants)
}

fn scalarize_null(
    state: &SpinorState,
    w: &WVector,
    grid: &Grid,
    constants: &PhysicalConstants,
) -> Result<ScalarState> {
    let c = constants.c();
    let l = constants.lambda();
    let sp = w.w_plus().sqrt();
    let sm = w.w_minus().sqrt();
    let il = Complex64::new(0.0, l);
    let plus_hat = grid.to_spectrum(&state.psi_plus)?;
    let minus_hat = grid.to_spectrum(&state.psi_minus)?;
    let n = grid.n();
    let mut psi_hat = vec![Complex64::default(); n];
    let mut d0_hat = vec![Complex64::default(); n];
    for (k, &kappa) in grid.kappas().iter().enumerate() {
        // per-mode L relations as a 2×2 system in (ψ̂, ∂₀ψ̂):
        //   ψ̂₊ = (√w₊ − λκ√w₋)ψ̂ + (iλ√w₋/c)∂₀ψ̂
        //   ψ̂₋ = (√w₋ + λκ√w₊)ψ̂ + (iλ√w₊/c)∂₀ψ̂
        let a11 = Complex64::new(sp - l * kappa * sm, 0.0);
        let a12 = il * sm / c;
        let a21 = Complex64::new(sm + l * kappa * sp, 0.0);
        let a22 = il * sp / c;
        let det = a11 * a22 - a12 * a21;
        if det.norm() <= 2.0 * l / c * EPS_SINGULAR {
            return Err(Error::SingularSymbol { kappa, denom: det.norm() });
        }
        psi_hat[k] = (a22 * plus_hat[k] - a12 * minus_hat[k]) / det;
        d0_hat[k] = (a11 * minus_hat[k] - a21 * plus_hat[k]) / det;
    }
    let psi = grid.from_spectrum(&psi_hat)?;
    let dpsi = grid.from_spectrum(&d0_hat)?;
    ScalarState::from_cauchy(psi, dpsi, state.t, grid, constants)
}

/// Representation-independent projector form of the forward transform:
/// ψ_D = [Π₋(√w₊ + iλ√w₋∂₊) + Π₊(√w₋ + iλ√w₊∂₋)] (ψ, ψ)ᵀ with
/// Π± = ½(1 ± cγ⁰γ¹). In the standard representation this reduces to
/// [`spinorize`] exactly.
pub fn projector_spinorize(
    state: &ScalarState,
    w: &WVector,
    gamma: &GammaRepresentation,
    grid: &Grid,
    constants: &PhysicalConstants,
) -> Result<SpinorState> {
    let pi_plus = gamma.projector(1.0, constants);
    let pi_minus = gamma.projector(-1.0, constants);
    let apply = |m: &[[Complex64; 2]; 2], s: Complex64| -> [Complex64; 2] {
        [m[0][0] * s + m[0][1] * s, m[1][0] * s + m[1][1] * s]
    };
    let n = grid.n();
    let mut modes = SpinorModes::zero(n, state.t);
    for (k, &kappa) in grid.kappas().iter().enumerate() {
        let omega = dispersion(kappa, constants);
        let ik = Complex64::new(0.0, kappa);
        for (branch_amp, store) in [
            (state.modes.a_plus[k], Branch::Plus),
            (state.modes.a_minus[k], Branch::Minus),
        ] {
            let f = l_factors(w, store.d0_factor(omega), ik, constants);
            let s1 = f[0] * branch_amp;
            let s2 = f[1] * branch_amp;
            let a = apply(&pi_minus, s1);
            let b = apply(&pi_plus, s2);
            let total = [a[0] + b[0], a[1] + b[1]];
            match store {
                Branch::Plus => modes.pos[k] = total,
                Branch::Minus => modes.neg[k] = total,
            }
        }
    }
    SpinorState::from_modes(modes, grid)
}

/// Relative round-trip defect of scalarize∘spinorize against the identity,
/// over both Cauchy fields.
pub fn roundtrip_error(
    state: &ScalarState,
    w: &WVector,
    grid: &Grid,
    constants: &PhysicalConstants,
) -> Result<f64> {
    let back = scalarize(&spinorize(state, w, grid, constants)?, w, grid, constants, Variant::Corrected)?;
    let scale = state.scale().max(1e-30);
    let e_psi = crate::grid::max_abs_diff(&back.psi, &state.psi);
    let e_d = crate::grid::max_abs_diff(&back.dpsi_dt, &state.dpsi_dt);
    Ok(e_psi.max(e_d) / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::plane_wave;
    use crate::grid::max_abs_diff;
    use crate::modes::ModeDecomposition;

    fn nu() -> PhysicalConstants {
        PhysicalConstants::natural_units()
    }

    #[test]
    fn rest_mode_spinorizes_to_twice_psi() {
        let grid = Grid::new(32, 8.0).unwrap();
        let k = nu();
        let w = WVector::rest(&k);
        let s = plane_wave(Complex64::new(1.0, 0.0), 0.0, Branch::Plus, 0.0, &grid, &k).unwrap();
        let d = spinorize(&s, &w, &grid, &k).unwrap();
        for j in 0..grid.n() {
            assert!((d.psi_plus[j] - 2.0 * s.psi[j]).norm() < 1e-12);
            assert!((d.psi_minus[j] - 2.0 * s.psi[j]).norm() < 1e-12);
        }
    }

    #[test]
    fn kappa_one_spinor_amplitudes() {
        let grid = Grid::new(64, 8.0 * std::f64::consts::PI).unwrap();
        let k = nu();
        let w = WVector::rest(&k);
        let kappa = 1.0;
        let s = plane_wave(Complex64::new(1.0, 0.0), kappa, Branch::Plus, 0.0, &grid, &k).unwrap();
        let d = spinorize(&s, &w, &grid, &k).unwrap();
        let r2 = 2.0_f64.sqrt();
        for j in 0..grid.n() {
            assert!((d.psi_plus[j] - r2 * s.psi[j]).norm() < 1e-11);
            assert!((d.psi_minus[j] - (2.0 + r2) * s.psi[j]).norm() < 1e-11);
        }
    }

    #[test]
    fn evanescent_spinorization_closed_form() {
        // ψ = e^x, w = w∘: ψ₊ = (1+i)e^x, ψ₋ = (1−i)e^x
        let k = nu();
        let w = WVector::rest(&k);
        let fam = crate::fields::EvanescentFamily::new(1.0, 0.0, 1.0, &k).unwrap();
        let f = crate::analytic::AnalyticScalar::evanescent(&fam);
        let sp = crate::analytic::AnalyticSpinor::from_scalar(&f, &w, &k);
        let jets = sp.component_jets_at(0.0, &[0.0, 0.4]);
        for (i, x) in [0.0f64, 0.4].into_iter().enumerate() {
            let e = x.exp();
            assert!((jets.plus.v[i] - Complex64::new(e, e)).norm() < 1e-13);
            assert!((jets.minus.v[i] - Complex64::new(e, -e)).norm() < 1e-13);
        }
    }

    #[test]
    fn zero_state_spinorizes_to_zero() {
        let grid = Grid::new(16, 4.0).unwrap();
        let k = nu();
        let w = WVector::boosted_rest(0.3, &k);
        let z = ScalarState::zero(0.0, &grid);
        let d = spinorize(&z, &w, &grid, &k).unwrap();
        assert_eq!(d.scale(), 0.0);
    }

    #[test]
    fn roundtrip_on_two_branch_superposition() {
        let grid = Grid::new(64, 16.0 * std::f64::consts::PI).unwrap();
        let k = nu();
        let w = WVector::boosted_rest(0.3, &k);
        let mut modes = ModeDecomposition::zero(grid.n(), 0.0);
        for i in 0..10 {
            let s = (i as f64 * 0.9).sin();
            let c = (i as f64 * 1.7).cos();
            modes.a_plus[i] = Complex64::new(s, c * 0.4);
            modes.a_minus[grid.n() - 1 - i] = Complex64::new(c * 0.2, -s * 0.6);
        }
        let state = ScalarState::from_modes(modes, &grid, &k).unwrap();
        let err = roundtrip_error(&state, &w, &grid, &k).unwrap();
        assert!(err < 1e-9, "roundtrip error {err}");
    }

    #[test]
    fn printed_variant_fails_on_generic_state() {
        let grid = Grid::new(64, 16.0 * std::f64::consts::PI).unwrap();
        let k = nu();
        let w = WVector::boosted_rest(0.3, &k);
        let mut modes = ModeDecomposition::zero(grid.n(), 0.0);
        modes.a_plus[3] = Complex64::new(1.0, 0.0);
        modes.a_minus[5] = Complex64::new(0.5, 0.5);
        let state = ScalarState::from_modes(modes, &grid, &k).unwrap();
        let spinor = spinorize(&state, &w, &grid, &k).unwrap();
        let back = scalarize(&spinor, &w, &grid, &k, Variant::PaperExact).unwrap();
        let err = max_abs_diff(&back.psi, &state.psi) / state.scale();
        assert!(err > 0.1, "printed variant unexpectedly close: {err}");
    }

    #[test]
    fn rest_w_is_singular_at_zero_mode() {
        let grid = Grid::new(32, 8.0).unwrap();
        let k = nu();
        let w = WVector::rest(&k);
        let s = plane_wave(Complex64::new(1.0, 0.0), 0.0, Branch::Plus, 0.0, &grid, &k).unwrap();
        let spinor = spinorize(&s, &w, &grid, &k).unwrap();
        match scalarize(&spinor, &w, &grid, &k, Variant::Corrected) {
            Err(Error::SingularSymbol { kappa, .. }) => assert!(kappa.abs() < 1e-12),
            other => panic!("expected SingularSymbol, got {other:?}"),
        }
    }

    #[test]
    fn null_w_scalarize_recovers_state() {
        let grid = Grid::new(64, 16.0 * std::f64::consts::PI).unwrap();
        let k = nu();
        let w = WVector::new(1.0, -1.0, &k).unwrap(); // null, w1 != 0
        let mut modes = ModeDecomposition::zero(grid.n(), 0.0);
        modes.a_plus[2] = Complex64::new(0.8, 0.1);
        modes.a_minus[4] = Complex64::new(-0.3, 0.5);
        let state = ScalarState::from_modes(modes, &grid, &k).unwrap();
        let spinor = spinorize(&state, &w, &grid, &k).unwrap();
        let back = scalarize(&spinor, &w, &grid, &k, Variant::Corrected).unwrap();
        let scale = state.scale();
        assert!(max_abs_diff(&back.psi, &state.psi) / scale < 1e-10);
        assert!(max_abs_diff(&back.dpsi_dt, &state.dpsi_dt) / scale < 1e-10);
    }
}
