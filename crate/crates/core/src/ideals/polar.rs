//! Polarizations of `n` at Kostant forms (types B and D).

use serde::Serialize;

use crate::ideals::kostant::KostantForm;
use crate::liealg::structure_constants;
use crate::linalg::rank;
use crate::report::Report;
use crate::rootsys::{Root, RootSystem, TypeLabel};
use crate::{Error, Scalar};

/// `β_f(e_α, e_γ) = f([e_α, e_γ])`, indexed by the positive roots in order.
pub fn bilinear_form_matrix(sys: &RootSystem, f: &KostantForm) -> Result<Vec<Vec<Scalar>>, Error> {
    let sc = structure_constants(sys)?;
    let roots = sys.positive_roots();
    Ok(roots
        .iter()
        .map(|a| {
            roots
                .iter()
                .map(|g| match sys.add(a, g) {
                    Some(s) => &sc.get(a, g) * &f.value(&s),
                    None => Scalar::zero(),
                })
                .collect()
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct PolarizationReport {
    /// Roots spanning `p`.
    pub generators: Vec<Root>,
    pub dim_p: usize,
    pub dim_n: usize,
    pub rank_form: usize,
    pub subalgebra: bool,
    pub isotropic: bool,
    pub maximal: bool,
    pub report: Report,
}

impl PolarizationReport {
    pub fn ok(&self) -> bool {
        self.subalgebra && self.isotropic && self.maximal
    }
}

/// `p = ⟨e_α : α ∉ M⟩` with `M` the union of the even rows, certified to be
/// a subalgebra, isotropic for `β_f`, and of dimension `dim n − rank β_f / 2`.
///
/// ```
/// use kcascade::{kostant_cascade, polarization, KostantForm, RootSystem, Scalar, TypeLabel};
/// let d4 = RootSystem::new(TypeLabel::D, 4).unwrap();
/// let f = KostantForm::new(kostant_cascade(&d4).roots.into_iter().map(|b| (b, Scalar::from(3))).collect());
/// let p = polarization(&d4, &f).unwrap();
/// assert_eq!(p.dim_p, 8);
/// assert!(p.ok());
/// ```
pub fn polarization(sys: &RootSystem, f: &KostantForm) -> Result<PolarizationReport, Error> {
    if !matches!(sys.type_label(), TypeLabel::B | TypeLabel::D) {
        return Err(Error::Unsupported("polarizations are constructed for types B and D".into()));
    }
    f.validate(sys)?;
    let sc = structure_constants(sys)?;
    let roots = sys.positive_roots();
    let p: Vec<Root> = roots.iter().filter(|r| r.row() % 2 == 1).copied().collect();
    let form = bilinear_form_matrix(sys, f)?;
    let rank_form = rank(&form);
    let mut report = Report::new("polarization");
    let (mut subalgebra, mut isotropic) = (true, true);
    for a in &p {
        for g in &p {
            report.instances += 1;
            let n = sc.get(a, g);
            if n.is_zero() {
                continue;
            }
            let s = sys.add(a, g).unwrap();
            if !p.contains(&s) {
                subalgebra = false;
                report.violation(format!("[e({a}), e({g})] leaves p"));
            }
            if !f.value(&s).is_zero() {
                isotropic = false;
                report.violation(format!("f([e({a}), e({g})]) ≠ 0"));
            }
        }
    }
    let maximal = 2 * p.len() + rank_form == 2 * roots.len();
    if !maximal {
        report.violation(format!("dim p = {} but dim n − rank/2 = {}", p.len(), roots.len() - rank_form / 2));
    }
    Ok(PolarizationReport {
        dim_p: p.len(),
        dim_n: roots.len(),
        generators: p,
        rank_form,
        subalgebra,
        isotropic,
        maximal,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::kostant_cascade;

    #[test]
    fn form_is_skew_and_m_counts() {
        let d4 = RootSystem::new(TypeLabel::D, 4).unwrap();
        let f = KostantForm::new(kostant_cascade(&d4).roots.into_iter().map(|b| (b, Scalar::from(2))).collect());
        let m = bilinear_form_matrix(&d4, &f).unwrap();
        for (a, row) in m.iter().enumerate() {
            for (g, x) in row.iter().enumerate() {
                assert_eq!(*x, -m[g][a].clone());
            }
        }
        let p = polarization(&d4, &f).unwrap();
        let m_count = d4.row_set(2).len() + d4.row_set(4).len();
        assert_eq!(p.dim_p, 12 - m_count);
    }

    #[test]
    fn zero_form_rejected() {
        let b3 = RootSystem::new(TypeLabel::B, 3).unwrap();
        assert!(polarization(&b3, &KostantForm::default()).is_err());
    }
}
