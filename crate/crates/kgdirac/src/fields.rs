//! State types for the scalar (Klein-Gordon) and spinor (Dirac) systems,
//! plus the solution families used throughout the verification suite.
//!
//! A grid state carries two layers of data that constructors keep in sync:
//! rendered Cauchy samples and a declared per-mode frequency-branch content.
//! Every Cauchy pair (ψ, ∂₀ψ) extends to a solution, so "equation
//! satisfaction" of raw samples is vacuous; the residual diagnostics in
//! [`crate::dynamics`] instead measure (a) whether the declared mode content
//! solves the system algebraically and (b) whether the samples match the
//! declaration. Mutating samples without refreshing the declaration is how
//! tests inject off-shell perturbations.

use num_complex::Complex64;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::grid::{max_abs, Grid};
use crate::modes::{dispersion, Branch, ModeDecomposition};

/// Constant timelike-or-null covector w_l parameterizing the duality.
///
/// Light-cone components w± = c⁻¹w₀ ± w₁ must both be non-negative so the
/// square roots in the spinorization operator stay real; this is exactly
/// "timelike or null with w₀ > 0". The norm is w = sqrt(w₊w₋) = sqrt(w_k w^k).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WVector {
    w0: f64,
    w1: f64,
    w_plus: f64,
    w_minus: f64,
    norm: f64,
}

impl WVector {
    pub fn new(w0: f64, w1: f64, constants: &PhysicalConstants) -> Result<Self> {
        let w_plus = w0 / constants.c() + w1;
        let w_minus = w0 / constants.c() - w1;
        if !(w0 > 0.0) || w_plus < 0.0 || w_minus < 0.0 {
            return Err(Error::SpacelikeW { w0, w1 });
        }
        Ok(Self { w0, w1, w_plus, w_minus, norm: (w_plus * w_minus).sqrt() })
    }

    /// w∘ = (1, 0).
    pub fn rest(constants: &PhysicalConstants) -> Self {
        Self::new(1.0, 0.0, constants).expect("rest w is timelike")
    }

    /// Unit-norm boosted w: (cosh χ, sinh χ) scaled for general c so that
    /// w± = e^{±χ}/c and the norm is c⁻¹.
    pub fn boosted_rest(chi: f64, constants: &PhysicalConstants) -> Self {
        let c = constants.c();
        Self::new(chi.cosh(), chi.sinh() / c, constants).expect("boosted rest w is timelike")
    }

    pub fn w0(&self) -> f64 {
        self.w0
    }

    pub fn w1(&self) -> f64 {
        self.w1
    }

    pub fn w_plus(&self) -> f64 {
        self.w_plus
    }

    pub fn w_minus(&self) -> f64 {
        self.w_minus
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn is_null(&self) -> bool {
        self.norm <= 1e-14 * (self.w_plus + self.w_minus)
    }

    /// Contravariant components w^l = g^{lk} w_k.
    pub fn upper(&self, constants: &PhysicalConstants) -> [f64; 2] {
        let gu = constants.g_upper();
        [gu[0] * self.w0, gu[1] * self.w1]
    }

    /// Exact light-cone boost: w̃± = e^{±χ} w±.
    pub fn boost(&self, chi: f64, constants: &PhysicalConstants) -> Self {
        let w_plus = chi.exp() * self.w_plus;
        let w_minus = (-chi).exp() * self.w_minus;
        let w0 = constants.c() * (w_plus + w_minus) / 2.0;
        let w1 = (w_plus - w_minus) / 2.0;
        Self { w0, w1, w_plus, w_minus, norm: (w_plus * w_minus).sqrt() }
    }
}

/// Cauchy data of the scalar system on a grid, with its declared
/// frequency-branch decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarState {
    pub t: f64,
    pub psi: Vec<Complex64>,
    pub dpsi_dt: Vec<Complex64>,
    pub modes: ModeDecomposition,
}

impl ScalarState {
    pub fn zero(t: f64, grid: &Grid) -> Self {
        let z = vec![Complex64::default(); grid.n()];
        Self { t, psi: z.clone(), dpsi_dt: z, modes: ModeDecomposition::zero(grid.n(), t) }
    }

    /// Build from sampled (ψ, ∂₀ψ); the declaration is the branch split of
    /// the samples, so the state is on-shell by construction.
    pub fn from_cauchy(
        psi: Vec<Complex64>,
        dpsi_dt: Vec<Complex64>,
        t: f64,
        grid: &Grid,
        constants: &PhysicalConstants,
    ) -> Result<Self> {
        let modes = ModeDecomposition::from_cauchy(&psi, &dpsi_dt, t, grid, constants)?;
        Ok(Self { t, psi, dpsi_dt, modes })
    }

    /// Build from declared modes; samples are rendered from them.
    pub fn from_modes(
        modes: ModeDecomposition,
        grid: &Grid,
        constants: &PhysicalConstants,
    ) -> Result<Self> {
        let (psi, dpsi_dt) = modes.render(grid, constants)?;
        Ok(Self { t: modes.t, psi, dpsi_dt, modes })
    }

    /// Sup magnitude over both Cauchy fields.
    pub fn scale(&self) -> f64 {
        max_abs(&self.psi).max(max_abs(&self.dpsi_dt))
    }

    /// Field jets from the Cauchy samples. Space derivatives are spectral;
    /// ∂₀∂₀ψ is closed on-shell via c²(∂₁∂₁ψ − ψ/λ²) and ∂₀∂₁ψ = ∂₁(∂₀ψ).
    pub fn jets(&self, grid: &Grid, constants: &PhysicalConstants) -> Result<FieldJets> {
        let d1 = grid.spatial_derivative(&self.psi)?;
        let d11 = grid.second_derivative(&self.psi)?;
        let d01 = grid.spatial_derivative(&self.dpsi_dt)?;
        let c2 = constants.c() * constants.c();
        let inv_l2 = 1.0 / (constants.lambda() * constants.lambda());
        let d00: Vec<Complex64> =
            d11.iter().zip(&self.psi).map(|(dxx, v)| c2 * (dxx - v * inv_l2)).collect();
        Ok(FieldJets {
            v: self.psi.clone(),
            d0: self.dpsi_dt.clone(),
            d1,
            d00,
            d01,
            d11,
        })
    }
}

/// Jets (value and derivatives through second order) of one complex field
/// sampled over the grid points. Index order: d01 = ∂₀∂₁.
#[derive(Debug, Clone)]
pub struct FieldJets {
    pub v: Vec<Complex64>,
    pub d0: Vec<Complex64>,
    pub d1: Vec<Complex64>,
    pub d00: Vec<Complex64>,
    pub d01: Vec<Complex64>,
    pub d11: Vec<Complex64>,
}

impl FieldJets {
    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }

    pub fn conj(&self) -> FieldJets {
        let c = |v: &Vec<Complex64>| v.iter().map(|z| z.conj()).collect();
        FieldJets {
            v: c(&self.v),
            d0: c(&self.d0),
            d1: c(&self.d1),
            d00: c(&self.d00),
            d01: c(&self.d01),
            d11: c(&self.d11),
        }
    }
}

/// Declared per-mode content of a spinor state: one free 2-vector per
/// frequency branch per wavenumber. The 2-vectors are unconstrained, so a
/// declaration need not solve the Dirac system; that is what makes the
/// Dirac residual a real check.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorModes {
    pub t: f64,
    /// e^{−iωt} branch amplitudes [component +, component −].
    pub pos: Vec<[Complex64; 2]>,
    /// e^{+iωt} branch amplitudes.
    pub neg: Vec<[Complex64; 2]>,
}

impl SpinorModes {
    pub fn zero(n: usize, t: f64) -> Self {
        Self { t, pos: vec![[Complex64::default(); 2]; n], neg: vec![[Complex64::default(); 2]; n] }
    }

    pub fn at_time(&self, t: f64, grid: &Grid, constants: &PhysicalConstants) -> Self {
        let dt = t - self.t;
        let advance = |amps: &Vec<[Complex64; 2]>, branch: Branch| -> Vec<[Complex64; 2]> {
            amps.iter()
                .zip(grid.kappas())
                .map(|(a, &k)| {
                    let ph = branch.phase(dispersion(k, constants), dt);
                    [a[0] * ph, a[1] * ph]
                })
                .collect()
        };
        Self { t, pos: advance(&self.pos, Branch::Plus), neg: advance(&self.neg, Branch::Minus) }
    }

    /// Render component samples (ψ₊, ψ₋) at the declaration's own time.
    pub fn render(&self, grid: &Grid) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
        let n = grid.n();
        let mut plus_hat = vec![Complex64::default(); n];
        let mut minus_hat = vec![Complex64::default(); n];
        for k in 0..n {
            plus_hat[k] = self.pos[k][0] + self.neg[k][0];
            minus_hat[k] = self.pos[k][1] + self.neg[k][1];
        }
        Ok((grid.from_spectrum(&plus_hat)?, grid.from_spectrum(&minus_hat)?))
    }

    pub fn norm_sq(&self) -> f64 {
        self.pos
            .iter()
            .chain(&self.neg)
            .map(|a| a[0].norm_sqr() + a[1].norm_sqr())
            .sum()
    }
}

/// Spinor state: component samples (ψ₊, ψ₋) plus declared mode content.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorState {
    pub t: f64,
    pub psi_plus: Vec<Complex64>,
    pub psi_minus: Vec<Complex64>,
    pub modes: SpinorModes,
}

impl SpinorState {
    pub fn zero(t: f64, grid: &Grid) -> Self {
        let z = vec![Complex64::default(); grid.n()];
        Self { t, psi_plus: z.clone(), psi_minus: z, modes: SpinorModes::zero(grid.n(), t) }
    }

    pub fn from_modes(modes: SpinorModes, grid: &Grid) -> Result<Self> {
        let (psi_plus, psi_minus) = modes.render(grid)?;
        Ok(Self { t: modes.t, psi_plus, psi_minus, modes })
    }

    /// Declare sampled component fields as living entirely on one branch.
    /// No Dirac relation between the components is imposed; this is the
    /// entry point for deliberately off-shell spinor data.
    pub fn from_components_on_branch(
        psi_plus: Vec<Complex64>,
        psi_minus: Vec<Complex64>,
        branch: Branch,
        t: f64,
        grid: &Grid,
    ) -> Result<Self> {
        let plus_hat = grid.to_spectrum(&psi_plus)?;
        let minus_hat = grid.to_spectrum(&psi_minus)?;
        let mut modes = SpinorModes::zero(grid.n(), t);
        for k in 0..grid.n() {
            let amp = [plus_hat[k], minus_hat[k]];
            match branch {
                Branch::Plus => modes.pos[k] = amp,
                Branch::Minus => modes.neg[k] = amp,
            }
        }
        Ok(Self { t, psi_plus, psi_minus, modes })
    }

    /// Swap the two components (samples and declaration alike). Applied to
    /// a κ≠0 solution this produces an off-shell pair.
    pub fn swapped(&self) -> Self {
        let swap = |v: &Vec<[Complex64; 2]>| v.iter().map(|a| [a[1], a[0]]).collect();
        Self {
            t: self.t,
            psi_plus: self.psi_minus.clone(),
            psi_minus: self.psi_plus.clone(),
            modes: SpinorModes {
                t: self.modes.t,
                pos: swap(&self.modes.pos),
                neg: swap(&self.modes.neg),
            },
        }
    }

    pub fn scale(&self) -> f64 {
        max_abs(&self.psi_plus).max(max_abs(&self.psi_minus))
    }

    /// Jets of both components from the declared mode content (time
    /// derivatives algebraic per branch, space derivatives per mode).
    pub fn jets(&self, grid: &Grid, constants: &PhysicalConstants) -> Result<SpinorJets> {
        let component = |comp: usize| -> Result<FieldJets> {
            let n = grid.n();
            let mut v_hat = vec![Complex64::default(); n];
            let mut d0_hat = vec![Complex64::default(); n];
            let mut d1_hat = vec![Complex64::default(); n];
            let mut d00_hat = vec![Complex64::default(); n];
            let mut d01_hat = vec![Complex64::default(); n];
            let mut d11_hat = vec![Complex64::default(); n];
            for (k, &kappa) in grid.kappas().iter().enumerate() {
                let omega = dispersion(kappa, constants);
                let f_pos = Branch::Plus.d0_factor(omega);
                let f_neg = Branch::Minus.d0_factor(omega);
                let ik = Complex64::new(0.0, kappa);
                let u = self.modes.pos[k][comp];
                let w = self.modes.neg[k][comp];
                let value = u + w;
                let d0 = f_pos * u + f_neg * w;
                v_hat[k] = value;
                d0_hat[k] = d0;
                d1_hat[k] = ik * value;
                d00_hat[k] = f_pos * f_pos * u + f_neg * f_neg * w;
                d01_hat[k] = ik * d0;
                d11_hat[k] = ik * ik * value;
            }
            Ok(FieldJets {
                v: grid.from_spectrum(&v_hat)?,
                d0: grid.from_spectrum(&d0_hat)?,
                d1: grid.from_spectrum(&d1_hat)?,
                d00: grid.from_spectrum(&d00_hat)?,
                d01: grid.from_spectrum(&d01_hat)?,
                d11: grid.from_spectrum(&d11_hat)?,
            })
        };
        Ok(SpinorJets { plus: component(0)?, minus: component(1)? })
    }
}

#[derive(Debug, Clone)]
pub struct SpinorJets {
    pub plus: FieldJets,
    pub minus: FieldJets,
}

/// ψ = a·e^κ with κ(t,x) = u₀t + u₁x; real solutions require
/// u_l u^l = −1/λ².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvanescentFamily {
    pub a: f64,
    pub u0: f64,
    pub u1: f64,
}

impl EvanescentFamily {
    pub fn new(a: f64, u0: f64, u1: f64, constants: &PhysicalConstants) -> Result<Self> {
        let gu = constants.g_upper();
        let norm = gu[0] * u0 * u0 + gu[1] * u1 * u1;
        let required = -1.0 / (constants.lambda() * constants.lambda());
        if (norm - required).abs() > 1e-9 * required.abs() {
            return Err(Error::InvalidFamily { norm, required });
        }
        Ok(Self { a, u0, u1 })
    }

    /// Static profile u = (0, ±1/λ).
    pub fn static_profile(a: f64, sign: f64, constants: &PhysicalConstants) -> Self {
        Self { a, u0: 0.0, u1: sign / constants.lambda() }
    }

    /// Boost of the static profile by rapidity η: u = (c sinh η, cosh η)/λ.
    pub fn boosted_profile(a: f64, eta: f64, constants: &PhysicalConstants) -> Self {
        let l = constants.lambda();
        Self { a, u0: constants.c() * eta.sinh() / l, u1: eta.cosh() / l }
    }

    /// Covector components u_l.
    pub fn u_lower(&self) -> [f64; 2] {
        [self.u0, self.u1]
    }

    /// Contravariant components u^l.
    pub fn u_upper(&self, constants: &PhysicalConstants) -> [f64; 2] {
        let gu = constants.g_upper();
        [gu[0] * self.u0, gu[1] * self.u1]
    }
}

/// Exact plane-wave solution a·e^{i(κx − ωt)} (branch +) or a·e^{i(κx + ωt)}
/// (branch −) rendered onto the grid; κ must be a grid mode.
pub fn plane_wave(
    a: Complex64,
    kappa: f64,
    branch: Branch,
    t: f64,
    grid: &Grid,
    constants: &PhysicalConstants,
) -> Result<ScalarState> {
    grid.mode_index(kappa)?;
    let omega = dispersion(kappa, constants);
    let d0f = branch.d0_factor(omega);
    let psi: Vec<Complex64> = grid
        .points()
        .iter()
        .map(|&x| a * (Complex64::new(0.0, kappa * x) + d0f * t).exp())
        .collect();
    let dpsi: Vec<Complex64> = psi.iter().map(|v| v * d0f).collect();
    ScalarState::from_cauchy(psi, dpsi, t, grid, constants)
}

/// Gaussian envelope times e^{iκ₀x}, projected onto one frequency branch.
/// σ must be resolved (≥ 4·dx) and non-wrapping (≤ L/8).
pub fn gaussian_packet(
    x0: f64,
    sigma: f64,
    kappa0: f64,
    branch: Branch,
    t: f64,
    grid: &Grid,
    constants: &PhysicalConstants,
) -> Result<ScalarState> {
    if !(sigma >= 4.0 * grid.dx() && sigma <= grid.length() / 8.0) {
        return Err(Error::UnresolvedSigma { sigma, dx: grid.dx(), length: grid.length() });
    }
    let profile: Vec<Complex64> = grid
        .points()
        .iter()
        .map(|&x| {
            let env = (-(x - x0) * (x - x0) / (2.0 * sigma * sigma)).exp();
            Complex64::new(0.0, kappa0 * x).exp() * env
        })
        .collect();
    let hat = grid.to_spectrum(&profile)?;
    let mut modes = ModeDecomposition::zero(grid.n(), t);
    match branch {
        Branch::Plus => modes.a_plus = hat,
        Branch::Minus => modes.a_minus = hat,
    }
    ScalarState::from_modes(modes, grid, constants)
}

/// Closed-form real solution of the evanescent family (analytic backend).
pub fn evanescent_state(family: &EvanescentFamily) -> crate::analytic::AnalyticScalar {
    crate::analytic::AnalyticScalar::evanescent(family)
}

/// Plane-wave spinor: one code path with spinorization applied to the
/// plane-wave scalar, so the two agree exactly by construction.
pub fn plane_wave_spinor(
    a: Complex64,
    kappa: f64,
    branch: Branch,
    w: &WVector,
    t: f64,
    grid: &Grid,
    constants: &PhysicalConstants,
) -> Result<SpinorState> {
    let scalar = plane_wave(a, kappa, branch, t, grid, constants)?;
    crate::duality::spinorize(&scalar, w, grid, constants)
}

/// On-shell closure of the Dirac system solved for the time derivatives:
/// ∂₀ψ₊ = c(∂₁ψ₊ − iψ₋/λ), ∂₀ψ₋ = −c(∂₁ψ₋ + iψ₊/λ).
///
/// Computed from the component samples; for declarations that do not solve
/// the system this is garbage-in-garbage-out by design (the declared time
/// derivative is the one observables use).
pub fn spinor_time_derivative(
    state: &SpinorState,
    grid: &Grid,
    constants: &PhysicalConstants,
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    let c = constants.c();
    let i_over_l = Complex64::new(0.0, 1.0 / constants.lambda());
    let d1_plus = grid.spatial_derivative(&state.psi_plus)?;
    let d1_minus = grid.spatial_derivative(&state.psi_minus)?;
    let d0_plus: Vec<Complex64> = d1_plus
        .iter()
        .zip(&state.psi_minus)
        .map(|(dp, m)| c * (dp - i_over_l * m))
        .collect();
    let d0_minus: Vec<Complex64> = d1_minus
        .iter()
        .zip(&state.psi_plus)
        .map(|(dm, p)| -c * (dm + i_over_l * p))
        .collect();
    Ok((d0_plus, d0_minus))
}
