//! Rank stability of the generators and the product formula for `c_β`.

use serde::Serialize;

use crate::central::canonical_generator;
use crate::ideals::kostant::{c_from_xi, KostantForm};
use crate::report::Report;
use crate::rootsys::{kostant_cascade, Root, RootKind, RootSystem};
use crate::{Error, Scalar};

/// `ξ_β` computed in `sys_n` is term-identical to `ξ_β` computed in `sys_n1`
/// (root variables are rank-independent, so no re-indexing is needed).
///
/// ```
/// use kcascade::{stability_check, Root, RootSystem, TypeLabel};
/// let d4 = RootSystem::new(TypeLabel::D, 4).unwrap();
/// let d5 = RootSystem::new(TypeLabel::D, 5).unwrap();
/// assert!(stability_check(&Root::sum(3, 4), &d4, &d5).unwrap());
/// assert!(!stability_check(&Root::diff(1, 2), &d4, &d5).unwrap());
/// ```
pub fn stability_check(beta: &Root, sys_n: &RootSystem, sys_n1: &RootSystem) -> Result<bool, Error> {
    if sys_n.type_label() != sys_n1.type_label() || sys_n.rank() >= sys_n1.rank() {
        return Err(Error::Domain("need the same type and a larger second rank".into()));
    }
    for s in [sys_n, sys_n1] {
        if !kostant_cascade(s).contains(beta) {
            return Err(Error::Domain(format!("{beta} is not in the cascade of {}{}", s.type_label(), s.rank())));
        }
    }
    Ok(canonical_generator(beta, sys_n)? == canonical_generator(beta, sys_n1)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct CProductEntry {
    pub beta: Root,
    pub c: Scalar,
    /// `∏_{j≤k} ξ(ε_{2j−1}+ε_{2j})`, i.e. `col(β′) ≥ col(β)`.
    pub product_j_le_k: Scalar,
    /// `∏_{j≥k} ξ(ε_{2j−1}+ε_{2j})`, i.e. `col(β′) ≤ col(β)`.
    pub product_j_ge_k: Scalar,
}

#[derive(Clone, Debug, Serialize)]
pub struct CProductReport {
    pub entries: Vec<CProductEntry>,
    /// `c_β = ∏_{col(β′) ≥ col(β)} f(e_{β′})` for every β.
    pub col_ge_matches: bool,
    /// `c_β = ∏_{col(β′) ≤ col(β)} f(e_{β′})` for every β (the inequality as printed).
    pub col_le_matches: bool,
    pub report: Report,
}

/// Compares `c_{ε_{2k−1}+ε_{2k}}` with both readings of the product formula.
/// Violations are recorded against the `j ≤ k` reading.
///
/// ```
/// use kcascade::{c_product_check, kostant_cascade, KostantForm, RootSystem, Scalar, TypeLabel};
/// let d6 = RootSystem::new(TypeLabel::D, 6).unwrap();
/// let f = KostantForm::new(kostant_cascade(&d6).roots.into_iter().map(|b| (b, Scalar::from(2))).collect());
/// let r = c_product_check(&f, &d6).unwrap();
/// assert!(r.col_ge_matches && !r.col_le_matches);
/// ```
pub fn c_product_check(f: &KostantForm, sys: &RootSystem) -> Result<CProductReport, Error> {
    let c = c_from_xi(f, sys)?;
    let sums: Vec<Root> =
        kostant_cascade(sys).roots.into_iter().filter(|b| b.kind == RootKind::Sum).collect();
    if sums.is_empty() {
        return Err(Error::Unsupported(format!("{} has no roots ε_(2k−1)+ε_2k in its cascade", sys.type_label())));
    }
    let prod = |it: &mut dyn Iterator<Item = &Root>| it.fold(Scalar::one(), |acc, b| &acc * &f.value(b));
    let mut report = Report::new("c_product");
    let mut entries = Vec::new();
    for (k, b) in sums.iter().enumerate() {
        report.instances += 1;
        let e = CProductEntry {
            beta: *b,
            c: c.get(b),
            product_j_le_k: prod(&mut sums[..=k].iter()),
            product_j_ge_k: prod(&mut sums[k..].iter()),
        };
        if e.c != e.product_j_le_k {
            report.violation(format!("c({b}) = {} ≠ ∏_(j≤k) = {}", e.c, e.product_j_le_k));
        }
        entries.push(e);
    }
    let col_ge_matches = entries.iter().all(|e| e.c == e.product_j_le_k);
    let col_le_matches = entries.iter().all(|e| e.c == e.product_j_ge_k);
    report.detail("col_ge_matches", col_ge_matches);
    report.detail("col_le_matches", col_le_matches);
    Ok(CProductReport { entries, col_ge_matches, col_le_matches, report })
}
