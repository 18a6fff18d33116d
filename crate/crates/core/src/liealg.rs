//! Matrix realization of the positive root vectors and the structure
//! constants of `n` derived from it.
//!
//! Rows and columns carry the signed labels `1..n, 0, −n..−1` (0 only for B,
//! and only `1..n+1` for A).

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::rootsys::{Root, RootKind, RootSystem, TypeLabel};
use crate::{Error, Scalar};

/// A sparse matrix with signed labels.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MatrixRep {
    pub size: usize,
    pub entries: BTreeMap<(i32, i32), Scalar>,
}

impl Serialize for MatrixRep {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(i32, i32, &Scalar)> =
            self.entries.iter().map(|(&(r, c), x)| (r, c, x)).collect();
        v.serialize(s)
    }
}

impl MatrixRep {
    pub fn zero(size: usize) -> MatrixRep {
        MatrixRep { size, entries: BTreeMap::new() }
    }

    pub fn add_entry(&mut self, r: i32, c: i32, v: Scalar) {
        let e = self.entries.entry((r, c)).or_default();
        *e += &v;
        if e.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: i32, c: i32) -> Scalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &Scalar) -> MatrixRep {
        let mut out = MatrixRep::zero(self.size);
        if k.is_zero() {
            return out;
        }
        for (&(r, c), v) in &self.entries {
            out.entries.insert((r, c), v * k);
        }
        out
    }

    pub fn mul(&self, o: &MatrixRep) -> Result<MatrixRep, Error> {
        if self.size != o.size {
            return Err(Error::Dimension(format!("{} vs {}", self.size, o.size)));
        }
        let mut by_row: BTreeMap<i32, Vec<(i32, &Scalar)>> = BTreeMap::new();
        for (&(r, c), v) in &o.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = MatrixRep::zero(self.size);
        for (&(r, k), x) in &self.entries {
            for &(c, y) in by_row.get(&k).map(Vec::as_slice).unwrap_or(&[]) {
                out.add_entry(r, c, x * y);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, o: &MatrixRep) -> MatrixRep {
        let mut out = self.clone();
        for (&(r, c), v) in &o.entries {
            out.add_entry(r, c, -v);
        }
        out
    }

    pub fn transpose(&self) -> MatrixRep {
        let mut out = MatrixRep::zero(self.size);
        for (&(r, c), v) in &self.entries {
            out.entries.insert((c, r), v.clone());
        }
        out
    }

    /// The scalar `k` with `self = k·o`, if any (`o` nonzero).
    pub fn ratio_to(&self, o: &MatrixRep) -> Option<Scalar> {
        let (&key, pivot) = o.entries.iter().next()?;
        let k = self.get(key.0, key.1) / pivot;
        (o.scale(&k) == *self).then_some(k)
    }
}

/// `[x, y] = xy − yx`.
///
/// ```
/// use kcascade::{bracket_matrices, root_vector_matrix, Root, RootSystem, TypeLabel};
/// let d3 = RootSystem::new(TypeLabel::D, 3).unwrap();
/// let x = root_vector_matrix(&d3, &Root::diff(1, 2)).unwrap();
/// let y = root_vector_matrix(&d3, &Root::diff(2, 3)).unwrap();
/// let z = root_vector_matrix(&d3, &Root::diff(1, 3)).unwrap();
/// assert_eq!(bracket_matrices(&x, &y).unwrap(), z);
/// ```
pub fn bracket_matrices(x: &MatrixRep, y: &MatrixRep) -> Result<MatrixRep, Error> {
    Ok(x.mul(y)?.sub(&y.mul(x)?))
}

/// The root vector `e_α` as a matrix.
pub fn root_vector_matrix(sys: &RootSystem, a: &Root) -> Result<MatrixRep, Error> {
    if !sys.contains(a) {
        return Err(Error::Domain(format!("{a} is not a positive root")));
    }
    let mut m = MatrixRep::zero(sys.labels().len());
    let (i, j) = (a.i as i32, a.j() as i32);
    let one = Scalar::one;
    match (sys.type_label(), a.kind) {
        (TypeLabel::A, _) => m.add_entry(i, j, one()),
        (_, RootKind::Diff) => {
            m.add_entry(i, j, one());
            m.add_entry(-j, -i, -one());
        }
        (TypeLabel::C, RootKind::Sum) => {
            m.add_entry(i, -j, one());
            m.add_entry(j, -i, one());
        }
        (_, RootKind::Sum) => {
            m.add_entry(i, -j, one());
            m.add_entry(j, -i, -one());
        }
        (_, RootKind::Double) => m.add_entry(i, -i, one()),
        (_, RootKind::Single) => {
            m.add_entry(i, 0, Scalar::sqrt2());
            m.add_entry(0, -i, -Scalar::sqrt2());
        }
    }
    Ok(m)
}

/// Gram matrix of the invariant form (B, D symmetric; C skew).
pub fn gram_matrix(sys: &RootSystem) -> Option<MatrixRep> {
    let n = sys.rank() as i32;
    let mut g = MatrixRep::zero(sys.labels().len());
    match sys.type_label() {
        TypeLabel::A => return None,
        TypeLabel::B | TypeLabel::D => {
            for i in 1..=n {
                g.add_entry(i, -i, Scalar::one());
                g.add_entry(-i, i, Scalar::one());
            }
            if sys.type_label() == TypeLabel::B {
                g.add_entry(0, 0, Scalar::one());
            }
        }
        TypeLabel::C => {
            for i in 1..=n {
                g.add_entry(i, -i, Scalar::one());
                g.add_entry(-i, i, -Scalar::one());
            }
        }
    }
    Some(g)
}

/// `β(u, xv) + β(xu, v) = 0` for all basis vectors, i.e. `Gx + xᵀG = 0`.
/// Always true for type A (no form).
pub fn preserves_form(sys: &RootSystem, x: &MatrixRep) -> bool {
    let Some(g) = gram_matrix(sys) else { return true };
    let lhs = g.mul(x).unwrap();
    let rhs = x.transpose().mul(&g).unwrap();
    lhs.sub(&rhs.scale(&-Scalar::one())).is_zero()
}

/// Strictly upper triangular in label order.
pub fn is_strictly_upper(sys: &RootSystem, x: &MatrixRep) -> bool {
    x.entries.keys().all(|&(r, c)| sys.label_pos(r) < sys.label_pos(c))
}

/// `N_{α,γ}` with `[e_α, e_γ] = N_{α,γ} e_{α+γ}`; absent pairs are zero.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub table: BTreeMap<(Root, Root), Scalar>,
}

impl StructureConstants {
    pub fn get(&self, a: &Root, g: &Root) -> Scalar {
        self.table.get(&(*a, *g)).cloned().unwrap_or_default()
    }
}

impl Serialize for StructureConstants {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(String, String, &Scalar)> =
            self.table.iter().map(|((a, g), x)| (a.to_string(), g.to_string(), x)).collect();
        v.serialize(s)
    }
}

/// Brackets every ordered pair of positive root vectors.
///
/// ```
/// use kcascade::{structure_constants, Root, RootSystem, Scalar, TypeLabel};
/// let d4 = RootSystem::new(TypeLabel::D, 4).unwrap();
/// let sc = structure_constants(&d4).unwrap();
/// assert_eq!(sc.get(&Root::diff(2, 3), &Root::diff(3, 4)), Scalar::one());
/// assert!(sc.get(&Root::diff(1, 2), &Root::sum(1, 2)).is_zero());
/// ```
pub fn structure_constants(sys: &RootSystem) -> Result<StructureConstants, Error> {
    let mats: Vec<MatrixRep> =
        sys.positive_roots().iter().map(|r| root_vector_matrix(sys, r)).collect::<Result<_, _>>()?;
    let mut table = BTreeMap::new();
    for (x, a) in sys.positive_roots().iter().enumerate() {
        for (y, g) in sys.positive_roots().iter().enumerate() {
            let br = bracket_matrices(&mats[x], &mats[y])?;
            if br.is_zero() {
                continue;
            }
            let s = sys.add(a, g).ok_or_else(|| {
                Error::Consistency(format!("[e_{a}, e_{g}] ≠ 0 but {a}+{g} is not a root"))
            })?;
            let k = br.ratio_to(&mats[sys.index_of(&s).unwrap()]).ok_or_else(|| {
                Error::Consistency(format!("[e_{a}, e_{g}] is not proportional to e_{s}"))
            })?;
            table.insert((*a, *g), k);
        }
    }
    Ok(StructureConstants { table })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_systems() -> Vec<RootSystem> {
        let mut v = Vec::new();
        for t in [TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D] {
            for n in 2..=5 {
                v.push(RootSystem::new(t, n).unwrap());
            }
        }
        v
    }

    #[test]
    fn realization_lies_in_n_and_preserves_form() {
        for s in all_systems() {
            for r in s.positive_roots() {
                let m = root_vector_matrix(&s, r).unwrap();
                assert!(is_strictly_upper(&s, &m), "{r}");
                assert!(preserves_form(&s, &m), "{}{} {r}", s.type_label(), s.rank());
            }
        }
    }

    #[test]
    fn short_root_matrix() {
        let b3 = RootSystem::new(TypeLabel::B, 3).unwrap();
        let m = root_vector_matrix(&b3, &Root::single(2)).unwrap();
        assert_eq!(m.get(2, 0), Scalar::sqrt2());
        assert_eq!(m.get(0, -2), -Scalar::sqrt2());
        assert_eq!(m.entries.len(), 2);
    }

    #[test]
    fn constants_are_rational_and_antisymmetric() {
        for s in all_systems() {
            let sc = structure_constants(&s).unwrap();
            for ((a, g), k) in &sc.table {
                assert!(k.is_rational());
                assert_eq!(sc.get(g, a), -k);
                assert!(s.add(a, g).is_some());
            }
        }
    }

    #[test]
    fn realized_signs() {
        let b4 = RootSystem::new(TypeLabel::B, 4).unwrap();
        let sc = structure_constants(&b4).unwrap();
        // the global sign of this realization is opposite to the one quoted in the literature
        assert_eq!(sc.get(&Root::diff(1, 3), &Root::sum(2, 3)), Scalar::from(-1));
        assert_eq!(sc.get(&Root::single(1), &Root::single(2)), Scalar::from(-2));
        assert_eq!(sc.get(&Root::diff(1, 2), &Root::single(2)), Scalar::from(1));
    }

    #[test]
    fn bracket_dimension_mismatch() {
        assert!(bracket_matrices(&MatrixRep::zero(3), &MatrixRep::zero(4)).is_err());
    }
}
