//! γ-matrix algebra and transformation-law checks.
//!
//! All covariance checks operate on single modes in closed form — boosting a
//! fixed-time lattice would need spacetime interpolation and contaminate the
//! residuals with it. Boost conventions follow the light-cone scalings
//! w̃± = e^{±χ}w±, ∂̃± = e^{±χ}∂±; covectors therefore map by Λᵀ and
//! contravariant 2-vectors by g⁻¹Λᵀg (see [`boost_vector`]).

use num_complex::Complex64;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::fields::WVector;
use crate::modes::{dispersion, Branch};

pub type Mat2 = [[Complex64; 2]; 2];

pub fn mat_identity() -> Mat2 {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::default();
    [[one, zero], [zero, one]]
}

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[Complex64::default(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn mat_add(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[Complex64::default(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][j] + b[i][j];
        }
    }
    out
}

pub fn mat_sub(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[Complex64::default(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][j] - b[i][j];
        }
    }
    out
}

pub fn mat_scale(s: Complex64, a: &Mat2) -> Mat2 {
    let mut out = *a;
    for row in out.iter_mut() {
        for v in row.iter_mut() {
            *v *= s;
        }
    }
    out
}

pub fn mat_max_abs(a: &Mat2) -> f64 {
    a.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn mat_vec(a: &Mat2, v: &[Complex64; 2]) -> [Complex64; 2] {
    [a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]]
}

pub fn mat_det(a: &Mat2) -> Complex64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

/// Entrywise residual of γ^lγ^k + γ^kγ^l = 2g^{kl}·1.
pub fn clifford_residual(gamma0: &Mat2, gamma1: &Mat2, constants: &PhysicalConstants) -> f64 {
    let g = constants.g_upper();
    let gam = [gamma0, gamma1];
    let mut worst = 0.0f64;
    for l in 0..2 {
        for k in 0..2 {
            let anti = mat_add(&mat_mul(gam[l], gam[k]), &mat_mul(gam[k], gam[l]));
            let target = if l == k {
                mat_scale(Complex64::new(2.0 * g[l], 0.0), &mat_identity())
            } else {
                [[Complex64::default(); 2]; 2]
            };
            worst = worst.max(mat_max_abs(&mat_sub(&anti, &target)));
        }
    }
    worst
}

/// A pair of 2×2 γ-matrices satisfying the Clifford relation for the
/// metric g^kl = diag{c⁻², −1}.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaRepresentation {
    gamma0: Mat2,
    gamma1: Mat2,
}

impl GammaRepresentation {
    pub fn new(gamma0: Mat2, gamma1: Mat2, constants: &PhysicalConstants) -> Result<Self> {
        let residual = clifford_residual(&gamma0, &gamma1, constants);
        if residual > 1e-12 {
            return Err(Error::NonCliffordGamma { residual });
        }
        Ok(Self { gamma0, gamma1 })
    }

    /// The representation with diagonal pseudo-scalar cγ⁰γ¹ = diag(−1, +1):
    /// γ⁰ = c⁻¹·offdiag(1,1), γ¹ = offdiag(1,−1).
    pub fn standard(constants: &PhysicalConstants) -> Self {
        let zero = Complex64::default();
        let inv_c = Complex64::new(1.0 / constants.c(), 0.0);
        let one = Complex64::new(1.0, 0.0);
        Self {
            gamma0: [[zero, inv_c], [inv_c, zero]],
            gamma1: [[zero, one], [-one, zero]],
        }
    }

    /// Conjugated representation γ̃ = UγU⁻¹ (U must be invertible).
    pub fn conjugated(&self, u: &Mat2, constants: &PhysicalConstants) -> Result<Self> {
        let det = mat_det(u);
        if det.norm() < 1e-14 {
            return Err(Error::Config("singular change-of-basis matrix".into()));
        }
        let inv = mat_scale(
            1.0 / det,
            &[[u[1][1], -u[0][1]], [-u[1][0], u[0][0]]],
        );
        Self::new(
            mat_mul(&mat_mul(u, &self.gamma0), &inv),
            mat_mul(&mat_mul(u, &self.gamma1), &inv),
            constants,
        )
    }

    pub fn gamma0(&self) -> &Mat2 {
        &self.gamma0
    }

    pub fn gamma1(&self) -> &Mat2 {
        &self.gamma1
    }

    /// Lowered γ₀ = g₀₀γ⁰ = c²γ⁰.
    pub fn gamma0_lower(&self, constants: &PhysicalConstants) -> Mat2 {
        mat_scale(Complex64::new(constants.c() * constants.c(), 0.0), &self.gamma0)
    }

    /// Pseudo-scalar matrix cγ⁰γ¹ (squares to the identity).
    pub fn pseudo_scalar(&self, constants: &PhysicalConstants) -> Mat2 {
        mat_scale(Complex64::new(constants.c(), 0.0), &mat_mul(&self.gamma0, &self.gamma1))
    }

    /// Projector Π± = ½(1 ± cγ⁰γ¹); `sign` is +1.0 or −1.0.
    pub fn projector(&self, sign: f64, constants: &PhysicalConstants) -> Mat2 {
        let ps = self.pseudo_scalar(constants);
        mat_scale(
            Complex64::new(0.5, 0.0),
            &mat_add(&mat_identity(), &mat_scale(Complex64::new(sign, 0.0), &ps)),
        )
    }

    pub fn clifford_defect(&self, constants: &PhysicalConstants) -> f64 {
        clifford_residual(&self.gamma0, &self.gamma1, constants)
    }
}

/// Coordinate boost x̃⁰ = x⁰coshχ + c⁻¹x¹sinhχ, x̃¹ = x¹coshχ + cx⁰sinhχ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostMap {
    pub chi: f64,
}

impl BoostMap {
    pub fn lambda(&self, constants: &PhysicalConstants) -> [[f64; 2]; 2] {
        let c = constants.c();
        let (sh, ch) = (self.chi.sinh(), self.chi.cosh());
        [[ch, sh / c], [c * sh, ch]]
    }

    pub fn det(&self, constants: &PhysicalConstants) -> f64 {
        let m = self.lambda(constants);
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// ‖Λᵀ g Λ − g‖ with g = diag{c², −1}.
    pub fn metric_residual(&self, constants: &PhysicalConstants) -> f64 {
        let m = self.lambda(constants);
        let g = constants.g_lower();
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                let mut s = 0.0;
                for k in 0..2 {
                    s += m[k][i] * g[k] * m[k][j];
                }
                let target = if i == j { g[i] } else { 0.0 };
                worst = worst.max((s - target).abs());
            }
        }
        worst
    }
}

/// Light-cone boost of w (norm-preserving by construction).
pub fn boost_w(w: &WVector, chi: f64, constants: &PhysicalConstants) -> WVector {
    w.boost(chi, constants)
}

/// Boost of an on-shell (κ, ω) wave covector: the light-cone frequencies
/// ω/c ∓ κ scale by e^{±χ}. For the rest mode this gives ω′ = c·coshχ·ω/c,
/// κ′ = −(ω/c)sinhχ.
pub fn boost_mode(
    kappa: f64,
    omega: f64,
    chi: f64,
    constants: &PhysicalConstants,
) -> Result<(f64, f64)> {
    let on_shell = dispersion(kappa, constants);
    if (omega - on_shell).abs() > 1e-9 * on_shell {
        return Err(Error::OffShellMode { kappa, omega });
    }
    let c = constants.c();
    let mu_p = omega / c - kappa;
    let mu_m = omega / c + kappa;
    let mu_p2 = chi.exp() * mu_p;
    let mu_m2 = (-chi).exp() * mu_m;
    Ok(((mu_m2 - mu_p2) / 2.0, c * (mu_p2 + mu_m2) / 2.0))
}

/// Boost of a contravariant 2-vector, consistent with the covector rule
/// above: ṽ⁰ = coshχ·v⁰ − c⁻¹sinhχ·v¹, ṽ¹ = −c·sinhχ·v⁰ + coshχ·v¹.
pub fn boost_vector(v: [f64; 2], chi: f64, constants: &PhysicalConstants) -> [f64; 2] {
    let c = constants.c();
    let (sh, ch) = (chi.sinh(), chi.cosh());
    [ch * v[0] - sh * v[1] / c, -c * sh * v[0] + ch * v[1]]
}

/// Spinor boost S(χ) = exp(−cγ⁰γ¹·χ/2). Since (cγ⁰γ¹)² = 1 this is
/// cosh(χ/2)·1 − sinh(χ/2)·cγ⁰γ¹; in the standard representation it is
/// diag(e^{χ/2}, e^{−χ/2}).
pub fn spinor_boost(chi: f64, gamma: &GammaRepresentation, constants: &PhysicalConstants) -> Mat2 {
    let ps = gamma.pseudo_scalar(constants);
    mat_add(
        &mat_scale(Complex64::new((chi / 2.0).cosh(), 0.0), &mat_identity()),
        &mat_scale(Complex64::new(-(chi / 2.0).sinh(), 0.0), &ps),
    )
}

/// Symbols of ∂± on a single mode of the given branch.
fn lightcone_symbols(
    kappa: f64,
    branch: Branch,
    constants: &PhysicalConstants,
) -> (Complex64, Complex64) {
    let omega = dispersion(kappa, constants);
    let p0 = branch.d0_factor(omega);
    let p1 = Complex64::new(0.0, kappa);
    (p0 / constants.c() + p1, p0 / constants.c() - p1)
}

/// L with explicit (possibly complex) square-root components and ∂± symbols.
fn l_vector(sq_wp: Complex64, sq_wm: Complex64, s_p: Complex64, s_m: Complex64, lambda: f64) -> [Complex64; 2] {
    let il = Complex64::new(0.0, lambda);
    [sq_wp + il * sq_wm * s_p, sq_wm + il * sq_wp * s_m]
}

fn rel2(lhs: &[Complex64; 2], rhs: &[Complex64; 2]) -> f64 {
    let scale = rhs[0].norm().max(rhs[1].norm()).max(1e-30);
    ((lhs[0] - rhs[0]).norm().max((lhs[1] - rhs[1]).norm())) / scale
}

/// Boost law for the spinorization operator: L(w̃, ∂̃, λ) applied to the
/// boosted mode must equal S(χ)·L(w, ∂, λ) applied to the original.
pub fn check_l_covariance(
    w: &WVector,
    kappa: f64,
    branch: Branch,
    chi: f64,
    constants: &PhysicalConstants,
) -> f64 {
    let l = constants.lambda();
    let (s_p, s_m) = lightcone_symbols(kappa, branch, constants);
    let wt = w.boost(chi, constants);
    let lhs = l_vector(
        Complex64::new(wt.w_plus().sqrt(), 0.0),
        Complex64::new(wt.w_minus().sqrt(), 0.0),
        chi.exp() * s_p,
        (-chi).exp() * s_m,
        l,
    );
    let gamma = GammaRepresentation::standard(constants);
    let s_mat = spinor_boost(chi, &gamma, constants);
    let orig = l_vector(
        Complex64::new(w.w_plus().sqrt(), 0.0),
        Complex64::new(w.w_minus().sqrt(), 0.0),
        s_p,
        s_m,
        l,
    );
    let rhs = mat_vec(&s_mat, &orig);
    rel2(&lhs, &rhs)
}

/// Space-reflection law: with w± and ∂± swapped, L̃ = cγ⁰·L.
pub fn check_space_reflection(
    w: &WVector,
    kappa: f64,
    branch: Branch,
    constants: &PhysicalConstants,
) -> f64 {
    let l = constants.lambda();
    let (s_p, s_m) = lightcone_symbols(kappa, branch, constants);
    let sq_wp = Complex64::new(w.w_plus().sqrt(), 0.0);
    let sq_wm = Complex64::new(w.w_minus().sqrt(), 0.0);
    let lhs = l_vector(sq_wm, sq_wp, s_m, s_p, l);
    let gamma = GammaRepresentation::standard(constants);
    let c_gamma0 = mat_scale(Complex64::new(constants.c(), 0.0), gamma.gamma0());
    let rhs = mat_vec(&c_gamma0, &l_vector(sq_wp, sq_wm, s_p, s_m, l));
    rel2(&lhs, &rhs)
}

/// Time-reflection law: w̃± = e^{±iπ}w∓ and ∂̃± = e^{±iπ}∂∓ (square roots
/// phase-tracked, √(e^{±iπ}w) = e^{±iπ/2}√w), giving L̃ = e^{iπ/2}γ¹·L.
pub fn check_time_reflection(
    w: &WVector,
    kappa: f64,
    branch: Branch,
    constants: &PhysicalConstants,
) -> f64 {
    let l = constants.lambda();
    let i = Complex64::new(0.0, 1.0);
    let (s_p, s_m) = lightcone_symbols(kappa, branch, constants);
    let sq_wp = Complex64::new(w.w_plus().sqrt(), 0.0);
    let sq_wm = Complex64::new(w.w_minus().sqrt(), 0.0);
    let lhs = l_vector(i * sq_wm, -i * sq_wp, -s_m, -s_p, l);
    let gamma = GammaRepresentation::standard(constants);
    let rhs_mat = mat_scale(i, gamma.gamma1());
    let rhs = mat_vec(&rhs_mat, &l_vector(sq_wp, sq_wm, s_p, s_m, l));
    rel2(&lhs, &rhs)
}

/// Conjugation law tying the spinor map to the coordinate map:
/// S(χ) γ^l S(χ)⁻¹ = Λ^l_s γ^s entrywise. (Stated with S on the left —
/// the orientation consistent with the light-cone conventions above; see
/// DEVIATIONS.md for the sign discussion.)
pub fn check_gamma_conjugation(
    chi: f64,
    gamma: &GammaRepresentation,
    constants: &PhysicalConstants,
) -> f64 {
    let s = spinor_boost(chi, gamma, constants);
    let s_inv = spinor_boost(-chi, gamma, constants);
    let lam = BoostMap { chi }.lambda(constants);
    let gam = [gamma.gamma0(), gamma.gamma1()];
    let mut worst = 0.0f64;
    for l in 0..2 {
        let lhs = mat_mul(&mat_mul(&s, gam[l]), &s_inv);
        let rhs = mat_add(
            &mat_scale(Complex64::new(lam[l][0], 0.0), gam[0]),
            &mat_scale(Complex64::new(lam[l][1], 0.0), gam[1]),
        );
        let scale = mat_max_abs(&rhs).max(1e-30);
        worst = worst.max(mat_max_abs(&mat_sub(&lhs, &rhs)) / scale);
    }
    worst
}

/// Clifford-relation defect of γ̃^l = T^l_s γ^s for a linear coordinate map
/// T. Zero for isometries of g; order-one for non-orthogonal maps — the
/// documented negative test.
pub fn clifford_violation_of_map(
    t_map: [[f64; 2]; 2],
    gamma: &GammaRepresentation,
    constants: &PhysicalConstants,
) -> f64 {
    let combine = |l: usize| -> Mat2 {
        mat_add(
            &mat_scale(Complex64::new(t_map[l][0], 0.0), gamma.gamma0()),
            &mat_scale(Complex64::new(t_map[l][1], 0.0), gamma.gamma1()),
        )
    };
    clifford_residual(&combine(0), &combine(1), constants)
}

/// Covariance of the spinor current on plane waves: the current of the
/// boosted mode (with boosted w) equals the boosted current 2-vector.
pub fn check_current_covariance(
    kappa: f64,
    branch: Branch,
    chi: f64,
    w: &WVector,
    constants: &PhysicalConstants,
) -> f64 {
    let l = constants.lambda();
    let c = constants.c();
    let (s_p, s_m) = lightcone_symbols(kappa, branch, constants);
    let f = l_vector(
        Complex64::new(w.w_plus().sqrt(), 0.0),
        Complex64::new(w.w_minus().sqrt(), 0.0),
        s_p,
        s_m,
        l,
    );
    let j = [
        (f[0].norm_sqr() + f[1].norm_sqr()) / c,
        -f[0].norm_sqr() + f[1].norm_sqr(),
    ];
    let wt = w.boost(chi, constants);
    let ft = l_vector(
        Complex64::new(wt.w_plus().sqrt(), 0.0),
        Complex64::new(wt.w_minus().sqrt(), 0.0),
        chi.exp() * s_p,
        (-chi).exp() * s_m,
        l,
    );
    let jt = [
        (ft[0].norm_sqr() + ft[1].norm_sqr()) / c,
        -ft[0].norm_sqr() + ft[1].norm_sqr(),
    ];
    let expect = boost_vector(j, chi, constants);
    let scale = expect[0].abs().max(expect[1].abs()).max(1e-30);
    ((jt[0] - expect[0]).abs().max((jt[1] - expect[1]).abs())) / scale
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu() -> PhysicalConstants {
        PhysicalConstants::natural_units()
    }

    #[test]
    fn standard_rep_satisfies_clifford_exactly() {
        let g = GammaRepresentation::standard(&nu());
        assert!(g.clifford_defect(&nu()) < 1e-15);
    }

    #[test]
    fn pseudo_scalar_is_diagonal_in_standard_rep() {
        let g = GammaRepresentation::standard(&nu());
        let ps = g.pseudo_scalar(&nu());
        assert!((ps[0][0] - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        assert!((ps[1][1] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(ps[0][1].norm() < 1e-15 && ps[1][0].norm() < 1e-15);
    }

    #[test]
    fn projectors_complete_orthogonal_idempotent() {
        let k = nu();
        let g = GammaRepresentation::standard(&k);
        let pp = g.projector(1.0, &k);
        let pm = g.projector(-1.0, &k);
        assert!(mat_max_abs(&mat_sub(&mat_add(&pp, &pm), &mat_identity())) < 1e-15);
        assert!(mat_max_abs(&mat_mul(&pp, &pm)) < 1e-15);
        assert!(mat_max_abs(&mat_sub(&mat_mul(&pp, &pp), &pp)) < 1e-14);
        assert!(mat_max_abs(&mat_sub(&mat_mul(&pm, &pm), &pm)) < 1e-14);
    }

    #[test]
    fn spinor_boost_diagonal_factors() {
        let k = nu();
        let g = GammaRepresentation::standard(&k);
        let s = spinor_boost(1.0, &g, &k);
        assert!((s[0][0].re - 0.5_f64.exp()).abs() < 1e-14);
        assert!((s[1][1].re - (-0.5_f64).exp()).abs() < 1e-14);
        assert!((mat_det(&s) - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        let s0 = spinor_boost(0.0, &g, &k);
        assert!(mat_max_abs(&mat_sub(&s0, &mat_identity())) < 1e-15);
    }

    #[test]
    fn spinor_boost_group_law() {
        let k = nu();
        let g = GammaRepresentation::standard(&k);
        let a = spinor_boost(0.4, &g, &k);
        let b = spinor_boost(0.9, &g, &k);
        let ab = mat_mul(&a, &b);
        let c = spinor_boost(1.3, &g, &k);
        assert!(mat_max_abs(&mat_sub(&ab, &c)) < 1e-12);
    }

    #[test]
    fn boost_mode_rest_example_and_group_law() {
        let k = nu();
        let (kp, op) = boost_mode(0.0, 1.0, 0.5, &k).unwrap();
        assert!((op - 0.5_f64.cosh()).abs() < 1e-14);
        assert!((kp + 0.5_f64.sinh()).abs() < 1e-14);
        // mass shell preserved
        assert!((op - dispersion(kp, &k)).abs() < 1e-12);
        // identity and composition
        let (k0, o0) = boost_mode(0.7, dispersion(0.7, &k), 0.0, &k).unwrap();
        assert!((k0 - 0.7).abs() < 1e-14 && (o0 - dispersion(0.7, &k)).abs() < 1e-14);
        let (k1, o1) = boost_mode(0.7, dispersion(0.7, &k), 0.3, &k).unwrap();
        let (k2, _) = boost_mode(k1, o1, 0.6, &k).unwrap();
        let (k12, _) = boost_mode(0.7, dispersion(0.7, &k), 0.9, &k).unwrap();
        assert!((k2 - k12).abs() < 1e-12);
        assert!(boost_mode(0.7, 3.0, 0.1, &k).is_err());
    }

    #[test]
    fn boost_map_is_isometry() {
        let k = PhysicalConstants::new(1.0, 3.0, 1.0).unwrap();
        let b = BoostMap { chi: 0.8 };
        assert!((b.det(&k) - 1.0).abs() < 1e-13);
        assert!(b.metric_residual(&k) < 1e-12);
    }

    #[test]
    fn w_norm_invariant_under_boost() {
        let k = nu();
        let w = WVector::boosted_rest(0.2, &k);
        for chi in [-2.0, -0.7, 0.0, 1.1, 2.0] {
            let wt = boost_w(&w, chi, &k);
            assert!((wt.norm() - w.norm()).abs() < 1e-12);
        }
    }

    #[test]
    fn conjugation_holds_for_boosts_fails_for_non_isometry() {
        let k = nu();
        let g = GammaRepresentation::standard(&k);
        assert!(check_gamma_conjugation(0.0, &g, &k) < 1e-15);
        assert!(check_gamma_conjugation(0.4, &g, &k) < 1e-12);
        let boost = BoostMap { chi: 0.4 }.lambda(&k);
        assert!(clifford_violation_of_map(boost, &g, &k) < 1e-12);
        let stretch = [[2.0, 0.0], [0.0, 1.0]];
        assert!(clifford_violation_of_map(stretch, &g, &k) > 0.1);
    }

    #[test]
    fn reflection_laws_hold_per_mode() {
        let k = nu();
        let w = WVector::boosted_rest(0.5, &k);
        for branch in [Branch::Plus, Branch::Minus] {
            for kappa in [0.0, 1.0, -2.5] {
                assert!(check_space_reflection(&w, kappa, branch, &k) < 1e-14);
                assert!(check_time_reflection(&w, kappa, branch, &k) < 1e-14);
            }
        }
    }

    #[test]
    fn l_covariance_rest_mode() {
        let k = nu();
        let w = WVector::rest(&k);
        assert!(check_l_covariance(&w, 0.0, Branch::Plus, 0.7, &k) < 1e-13);
        assert!(check_l_covariance(&w, 0.0, Branch::Plus, 0.0, &k) < 1e-15);
    }

    #[test]
    fn current_covariance_rest_mode() {
        let k = nu();
        let w = WVector::rest(&k);
        // boosted rest current must be (8coshχ, −8sinhχ)
        let chi = 0.5;
        assert!(check_current_covariance(0.0, Branch::Plus, chi, &w, &k) < 1e-12);
    }
}
