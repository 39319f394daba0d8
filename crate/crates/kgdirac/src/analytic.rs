//! Closed-form field backend with exact derivatives.
//!
//! Every solution family the suite needs — plane waves on either frequency
//! branch, real evanescent profiles, and their superpositions — is a sum of
//! complex exponentials a·e^{p₀t + p₁x}. Derivatives of an atom are exact
//! multiplications by p₀/p₁, so identity tests on this backend carry no
//! discretization error at all. The wave-equation constraint for an atom is
//! λ²(c⁻²p₀² − p₁²) + 1 = 0, covering e^{i(κx∓ωt)} and real e^{u·x} alike.

use num_complex::Complex64;

use crate::constants::PhysicalConstants;

use crate::fields::{EvanescentFamily, FieldJets, SpinorJets, WVector};
use crate::modes::{dispersion, Branch};

/// One complex exponential a·e^{p₀t + p₁x}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpAtom {
    pub amp: Complex64,
    pub p0: Complex64,
    pub p1: Complex64,
}

impl ExpAtom {
    fn value(&self, t: f64, x: f64) -> Complex64 {
        self.amp * (self.p0 * t + self.p1 * x).exp()
    }
}

/// Point jet of a scalar field through second order.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ScalarJet {
    pub v: Complex64,
    pub d0: Complex64,
    pub d1: Complex64,
    pub d00: Complex64,
    pub d01: Complex64,
    pub d11: Complex64,
}

/// Closed-form scalar field (sum of exponential atoms).
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticScalar {
    pub atoms: Vec<ExpAtom>,
}

impl AnalyticScalar {
    pub fn plane_wave(
        a: Complex64,
        kappa: f64,
        branch: Branch,
        constants: &PhysicalConstants,
    ) -> Self {
        let omega = dispersion(kappa, constants);
        Self {
            atoms: vec![ExpAtom {
                amp: a,
                p0: branch.d0_factor(omega),
                p1: Complex64::new(0.0, kappa),
            }],
        }
    }

    pub fn evanescent(family: &EvanescentFamily) -> Self {
        Self {
            atoms: vec![ExpAtom {
                amp: Complex64::new(family.a, 0.0),
                p0: Complex64::new(family.u0, 0.0),
                p1: Complex64::new(family.u1, 0.0),
            }],
        }
    }

    pub fn superpose(parts: &[AnalyticScalar]) -> Self {
        Self { atoms: parts.iter().flat_map(|p| p.atoms.iter().copied()).collect() }
    }

    /// Exact jet at a spacetime point.
    pub fn jet(&self, t: f64, x: f64) -> ScalarJet {
        let mut j = ScalarJet::default();
        for atom in &self.atoms {
            let v = atom.value(t, x);
            j.v += v;
            j.d0 += atom.p0 * v;
            j.d1 += atom.p1 * v;
            j.d00 += atom.p0 * atom.p0 * v;
            j.d01 += atom.p0 * atom.p1 * v;
            j.d11 += atom.p1 * atom.p1 * v;
        }
        j
    }

    /// Jets sampled at fixed time over a set of points.
    pub fn jets_at(&self, t: f64, xs: &[f64]) -> FieldJets {
        let mut jets = FieldJets {
            v: Vec::with_capacity(xs.len()),
            d0: Vec::with_capacity(xs.len()),
            d1: Vec::with_capacity(xs.len()),
            d00: Vec::with_capacity(xs.len()),
            d01: Vec::with_capacity(xs.len()),
            d11: Vec::with_capacity(xs.len()),
        };
        for &x in xs {
            let j = self.jet(t, x);
            jets.v.push(j.v);
            jets.d0.push(j.d0);
            jets.d1.push(j.d1);
            jets.d00.push(j.d00);
            jets.d01.push(j.d01);
            jets.d11.push(j.d11);
        }
        jets
    }

    /// Wave-equation defect per unit amplitude: max over atoms of
    /// |λ²(c⁻²p₀² − p₁²) + 1| (zero for genuine solutions).
    pub fn kg_residual(&self, constants: &PhysicalConstants) -> f64 {
        let l2 = constants.lambda() * constants.lambda();
        let c2 = constants.c() * constants.c();
        self.atoms
            .iter()
            .map(|a| (l2 * (a.p0 * a.p0 / c2 - a.p1 * a.p1) + 1.0).norm())
            .fold(0.0, f64::max)
    }
}

/// Closed-form two-component spinor field.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSpinor {
    pub atoms: Vec<SpinorAtom>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorAtom {
    pub amp: [Complex64; 2],
    pub p0: Complex64,
    pub p1: Complex64,
}

impl AnalyticSpinor {
    /// Spinorization of a closed-form scalar: per atom, the operator acts
    /// as multiplication, ψ± = (√w± + iλ√w∓(p₀/c ± p₁))·a.
    pub fn from_scalar(scalar: &AnalyticScalar, w: &WVector, constants: &PhysicalConstants) -> Self {
        let atoms = scalar
            .atoms
            .iter()
            .map(|a| {
                let f = crate::duality::l_factors(w, a.p0, a.p1, constants);
                SpinorAtom { amp: [f[0] * a.amp, f[1] * a.amp], p0: a.p0, p1: a.p1 }
            })
            .collect();
        Self { atoms }
    }

    pub fn component_jets_at(&self, t: f64, xs: &[f64]) -> SpinorJets {
        let comp = |idx: usize| -> FieldJets {
            let scalar = AnalyticScalar {
                atoms: self
                    .atoms
                    .iter()
                    .map(|a| ExpAtom { amp: a.amp[idx], p0: a.p0, p1: a.p1 })
                    .collect(),
            };
            scalar.jets_at(t, xs)
        };
        SpinorJets { plus: comp(0), minus: comp(1) }
    }
}
