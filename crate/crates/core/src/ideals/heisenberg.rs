//! The reduction `r: U(n) ↠ U(ñ_e) ⊗ A_s` through the two-row Heisenberg
//! ideal `k` (types B and D).
//!
//! `k` is spanned by the root vectors of rows 1 and 2 except `e_{β₂}`,
//! `β₂ = ε₁−ε₂`; its center is `e_{β₁}`, `β₁ = ε₁+ε₂`. `A_s = U(k)/(e_{β₁} − c₁)`
//! is realized by a bracket table whose `β₁`-brackets land on the unit, and
//! `ñ_e` is spanned by the rows `> 2` together with `e = e_{β₂}`. Both factors
//! live in one table with vanishing cross brackets, so its enveloping algebra
//! is the tensor product.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::central::canonical_generator;
use crate::liealg::structure_constants;
use crate::linalg::solve;
use crate::report::Report;
use crate::rootsys::{Root, RootSystem, TypeLabel};
use crate::uea::{Element, LieTable, Uea, Word};
use crate::{Error, Scalar};

#[derive(Clone, Debug, Serialize)]
pub struct HeisenbergReport {
    #[serde(rename = "type")]
    pub type_label: TypeLabel,
    pub rank: u32,
    pub c1: Scalar,
    pub dim_k: usize,
    pub expected_dim_k: usize,
    /// `θ(e_x)` for every `x ∈ ñ_e`, in the target algebra.
    pub theta: BTreeMap<String, Value>,
    /// `r(σ(P_{β₂}))`.
    pub image: Value,
    pub report: Report,
}

impl HeisenbergReport {
    /// `r(σ(P_{β₂})) = c₁·e` held and every certificate passed.
    pub fn verified(&self) -> bool {
        self.report.ok() && self.dim_k == self.expected_dim_k
    }
}

/// Builds `r` and checks `r(σ(P_{β₂})) = c₁·(e ⊗ 1)`, that `r` respects all
/// brackets of generators, and `dim k = 4n−7` (D) / `4n−5` (B).
///
/// ```
/// use kcascade::{heisenberg_reduction, RootSystem, Scalar, TypeLabel};
/// let b3 = RootSystem::new(TypeLabel::B, 3).unwrap();
/// let h = heisenberg_reduction(&b3, &Scalar::one()).unwrap();
/// assert_eq!(h.dim_k, 7);
/// assert!(h.verified());
/// ```
pub fn heisenberg_reduction(sys: &RootSystem, c1: &Scalar) -> Result<HeisenbergReport, Error> {
    let t = sys.type_label();
    let n = sys.rank();
    if !matches!(t, TypeLabel::B | TypeLabel::D) || n < 3 {
        return Err(Error::Unsupported("Heisenberg reduction needs type B or D of rank >= 3".into()));
    }
    if c1.is_zero() {
        return Err(Error::Inadmissible("c1 must be nonzero".into()));
    }
    let sc = structure_constants(sys)?;
    let b1 = Root::sum(1, 2);
    let b2 = Root::diff(1, 2);
    let roots = sys.positive_roots();
    let k: Vec<Root> = roots.iter().filter(|r| r.row() <= 2 && **r != b2).copied().collect();
    let kp: Vec<Root> = k.iter().filter(|r| **r != b1).copied().collect();
    let ne: Vec<Root> = roots.iter().filter(|r| r.row() > 2 || **r == b2).copied().collect();
    let expected_dim_k = (4 * n - if t == TypeLabel::D { 7 } else { 5 }) as usize;

    // target generators: ñ_e then k'
    let gens: Vec<Root> = ne.iter().chain(&kp).copied().collect();
    let idx: BTreeMap<Root, u16> = gens.iter().enumerate().map(|(a, r)| (*r, a as u16)).collect();
    let in_ne = |a: usize| a < ne.len();
    let table = LieTable::new(
        gens.iter().enumerate().map(|(a, r)| if in_ne(a) { format!("e({r})") } else { format!("k({r})") }).collect(),
        gens.iter().map(|r| serde_json::to_value(r).unwrap()).collect(),
        gens.iter().map(|r| sys.coords(r)).collect(),
        |a, b| {
            if in_ne(a) != in_ne(b) {
                return Vec::new();
            }
            let nab = sc.get(&gens[a], &gens[b]);
            if nab.is_zero() {
                return Vec::new();
            }
            let s = sys.add(&gens[a], &gens[b]).unwrap();
            if s == b1 {
                vec![(None, &nab * c1)]
            } else {
                vec![(Some(idx[&s]), nab)]
            }
        },
    );
    let tgt = Uea::from_table(table);
    let gen = |r: &Root| tgt.gen(idx[r] as usize);

    let mut report = Report::new("heisenberg");
    let mut theta = BTreeMap::new();
    let mut images: Vec<Element> = vec![Element::zero(); roots.len()];
    for r in &kp {
        images[sys.index_of(r).unwrap()] = gen(r);
    }
    images[sys.index_of(&b1).unwrap()] = Element::scalar(c1.clone());

    let b1c = sys.coords(&b1);
    for x in &ne {
        // quadratic words in k' of weight wt(x)+β₁
        let target: Vec<i32> = sys.coords(x).iter().zip(&b1c).map(|(p, q)| p + q).collect();
        let mut cands: Vec<Element> = Vec::new();
        for (s, u) in kp.iter().enumerate() {
            for v in &kp[s..] {
                let w: Vec<i32> = sys.coords(u).iter().zip(sys.coords(v)).map(|(p, q)| p + q).collect();
                if w == target {
                    let mut word: Word = vec![idx[u], idx[v]];
                    word.sort_unstable();
                    cands.push(Element::word(word, Scalar::one()));
                }
            }
        }
        // [θ, ē_δ] = N_{x,δ} ē_{x+δ} for every δ ∈ k'
        let mut rows: BTreeMap<(usize, Word), (Vec<Scalar>, Scalar)> = BTreeMap::new();
        for (d, delta) in kp.iter().enumerate() {
            let nxd = sc.get(x, delta);
            if !nxd.is_zero() {
                let s = sys.add(x, delta).unwrap();
                let row = rows.entry((d, vec![idx[&s]])).or_insert_with(|| (vec![Scalar::zero(); cands.len()], Scalar::zero()));
                row.1 += &nxd;
            }
            for (m, cand) in cands.iter().enumerate() {
                let br = tgt.commutator(cand, &gen(delta));
                for (w, c) in br.terms() {
                    let row = rows
                        .entry((d, w.clone()))
                        .or_insert_with(|| (vec![Scalar::zero(); cands.len()], Scalar::zero()));
                    row.0[m] += c;
                }
            }
        }
        let th = if cands.is_empty() {
            if rows.values().any(|(_, b)| !b.is_zero()) {
                return Err(Error::Consistency(format!("no θ ansatz for {x}")));
            }
            Element::zero()
        } else if rows.is_empty() {
            Element::zero()
        } else {
            let (a, b): (Vec<Vec<Scalar>>, Vec<Scalar>) = rows.into_values().unzip();
            let (sol, nullity) =
                solve(&a, &b).ok_or_else(|| Error::Consistency(format!("θ({x}): linear system inconsistent")))?;
            if nullity > 0 {
                report.violation(format!("θ({x}) is not unique (nullity {nullity})"));
            }
            cands.iter().zip(&sol).fold(Element::zero(), |acc, (m, s)| acc.add(&m.scale(s)))
        };
        // θ correctness: ad_{e_x} = ad_{θ(x)} on k'
        for delta in &kp {
            report.instances += 1;
            let want = match sys.add(x, delta) {
                Some(s) => gen(&s).scale(&sc.get(x, delta)),
                None => Element::zero(),
            };
            if tgt.commutator(&th, &gen(delta)) != want {
                report.violation(format!("[θ({x}), k({delta})] ≠ ad_{x}"));
            }
        }
        theta.insert(x.to_string(), tgt.to_json(&th));
        images[sys.index_of(x).unwrap()] = gen(x).add(&th);
    }

    // r respects the brackets of n
    for (a, x) in roots.iter().enumerate() {
        for (b, y) in roots.iter().enumerate().skip(a + 1) {
            report.instances += 1;
            let lhs = tgt.commutator(&images[a], &images[b]);
            let nxy = sc.get(x, y);
            let rhs = if nxy.is_zero() {
                Element::zero()
            } else {
                images[sys.index_of(&sys.add(x, y).unwrap()).unwrap()].scale(&nxy)
            };
            if lhs != rhs {
                report.violation(format!("r([e({x}), e({y})]) ≠ [r e({x}), r e({y})]"));
            }
        }
    }

    let un = Uea::new(sys);
    let sp = un.symmetrize(&canonical_generator(&b2, sys)?);
    let mut image = Element::zero();
    for (w, c) in sp.terms() {
        let factors: Vec<Element> = w.iter().map(|&g| images[g as usize].clone()).collect();
        image = image.add(&tgt.product(&factors).scale(c));
    }
    report.instances += 1;
    if image != gen(&b2).scale(c1) {
        report.violation(format!("r(σ(P_{b2})) = {} ≠ c1·e", tgt.render(&image)));
    }
    if k.len() != expected_dim_k {
        report.violation(format!("dim k = {} ≠ {expected_dim_k}", k.len()));
    }
    report.detail("dim_k", k.len());

    Ok(HeisenbergReport {
        type_label: t,
        rank: n,
        c1: c1.clone(),
        dim_k: k.len(),
        expected_dim_k,
        theta,
        image: tgt.to_json(&image),
        report,
    })
}
