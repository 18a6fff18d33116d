//! The Weyl-algebra presentation of `U(n)/J_c` in types B and D.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::ideals::kostant::ScalarAssignment;
use crate::ideals::lemmas::{AMode, Setup};
use crate::report::Report;
use crate::rootsys::{Root, RootSystem};
use crate::uea::{Element, Uea};
use crate::{Error, Scalar};

/// `p = σ(P_α)`, `q = a_scalar·q_base` with `q_base = σ(P_γ)`,
/// `γ = ε_i+ε_{i+1}−α`.
#[derive(Clone, Debug)]
pub struct WeylPair {
    pub alpha: Root,
    pub gamma: Root,
    pub p: Element,
    pub q_base: Element,
    /// `a_{α,γ}` of the P-level identity.
    pub a_alpha_gamma: Scalar,
    pub a_scalar: Scalar,
}

impl WeylPair {
    pub fn q(&self) -> Element {
        self.q_base.scale(&self.a_scalar)
    }
}

#[derive(Clone, Debug)]
pub struct WeylPresentation {
    pub pairs: Vec<WeylPair>,
    pub c: ScalarAssignment,
    /// Certificates: one instance per pair identity and per cross relation.
    pub report: Report,
    uea: Uea,
}

impl WeylPresentation {
    pub fn uea(&self) -> &Uea {
        &self.uea
    }

    pub fn to_json(&self) -> Value {
        let pairs: Vec<Value> = self
            .pairs
            .iter()
            .map(|w| {
                json!({
                    "alpha": w.alpha,
                    "gamma": w.gamma,
                    "p": self.uea.to_json(&w.p),
                    "q_base": self.uea.to_json(&w.q_base),
                    "a_alpha_gamma": w.a_alpha_gamma,
                    "a_scalar": w.a_scalar,
                })
            })
            .collect();
        json!({ "c": self.c, "pairs": pairs, "report": self.report.to_json() })
    }
}

/// Builds `p_α, q_α` for every odd `i` and `α ∈ R_i∖B` and certifies
/// `[p_α, q_α] = a·a_{α,γ}·P_{β_i}P_{β_{i−2}}` with `a·a_{α,γ}·c_{β_i}c_{β_{i−2}} = 1`
/// together with `[p_α,p_γ] = [q_α,q_γ] = [p_α,q_γ] = 0` (α ≠ γ) as exact
/// identities in `U(n)`.
///
/// ```
/// use kcascade::{kostant_cascade, weyl_presentation, RootSystem, Scalar, ScalarAssignment, TypeLabel};
/// let b3 = RootSystem::new(TypeLabel::B, 3).unwrap();
/// let c = ScalarAssignment::new(kostant_cascade(&b3).roots.into_iter().map(|b| (b, Scalar::one())).collect());
/// let w = weyl_presentation(&c, &b3).unwrap();
/// assert_eq!(w.pairs.len(), 3);
/// assert!(w.report.ok());
/// ```
pub fn weyl_presentation(c: &ScalarAssignment, sys: &RootSystem) -> Result<WeylPresentation, Error> {
    c.validate(sys)?;
    let st = Setup::new(sys)?;
    let cval = |b: &Root| c.get(b);
    let mut pairs = Vec::new();
    for i in (1..sys.rank()).step_by(2) {
        let beta = Root::sum(i, i + 1);
        for a in sys.row_set(i) {
            if st.casc.contains(&a) {
                continue;
            }
            let g = sys
                .sub(&beta, &a)
                .ok_or_else(|| Error::Consistency(format!("{beta}−{a} is not a root")))?;
            let aag = st.a_for(&a, &g, AMode::P)?;
            let mut central = &aag * &cval(&beta);
            if i > 1 {
                central = &central * &cval(&Root::sum(i - 2, i - 1));
            }
            let a_scalar = central
                .inv()
                .ok_or_else(|| Error::Inadmissible(format!("central product vanishes on row {i}")))?;
            pairs.push(WeylPair {
                alpha: a,
                gamma: g,
                p: st.p[&a].clone(),
                q_base: st.p[&g].clone(),
                a_alpha_gamma: aag,
                a_scalar,
            });
        }
    }

    let mut report = Report::new("weyl");
    report.detail("pairs", pairs.len());
    for w in &pairs {
        report.instances += 1;
        let i = w.alpha.i;
        let lhs = st.uea.commutator(&w.p, &w.q());
        let rhs = st.central_rhs(i, 1).scale(&(&w.a_scalar * &w.a_alpha_gamma));
        if lhs != rhs {
            report.violation(format!("[p_{}, q_{}] ≠ a·a_(α,γ)·P·P", w.alpha, w.alpha));
        }
        let mut val = &(&w.a_scalar * &w.a_alpha_gamma) * &cval(&Root::sum(i, i + 1));
        if i > 1 {
            val = &val * &cval(&Root::sum(i - 2, i - 1));
        }
        if !val.is_one() {
            report.violation(format!("[p_{}, q_{}] evaluates to {val} at c", w.alpha, w.alpha));
        }
        report.constant("a", format!("{},{}", w.alpha, w.gamma), w.a_alpha_gamma.clone());
        report.constant("a_scalar", w.alpha.to_string(), w.a_scalar.clone());
    }

    let mut cross = Vec::new();
    for (x, u) in pairs.iter().enumerate() {
        for (y, v) in pairs.iter().enumerate() {
            if x < y {
                cross.push(("p", u, "p", v, u.p.clone(), v.p.clone()));
                cross.push(("q", u, "q", v, u.q(), v.q()));
            }
            if x != y {
                cross.push(("p", u, "q", v, u.p.clone(), v.q()));
            }
        }
    }
    let parts: Vec<Report> = cross
        .par_iter()
        .map(|(s, u, t, v, x, y)| {
            let mut r = Report::new("weyl");
            r.instances = 1;
            if !st.uea.commutator(x, y).is_zero() {
                r.violation(format!("[{s}_{}, {t}_{}] ≠ 0", u.alpha, v.alpha));
            }
            r
        })
        .collect();
    let report = parts.into_iter().fold(report, Report::merge);
    Ok(WeylPresentation { pairs, c: c.clone(), report, uea: st.uea })
}
