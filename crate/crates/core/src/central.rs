//! The matrix `U` of root variables, the minors `Δ_α`, the Pfaffians `P_α`
//! and the canonical central generators `ξ_β`.

use std::collections::BTreeMap;

use crate::linalg;
use crate::poly::{skew_matrix, CommutingPoly, SymbolicMatrix};
use crate::rootsys::{index_sets, kostant_cascade, Root, RootKind, RootSystem, TypeLabel, Weight};
use crate::{Error, Scalar};

fn x(r: Root) -> CommutingPoly {
    CommutingPoly::var(r)
}

/// Entry `U_{a,b}` of the root-variable matrix.
pub fn u_entry(sys: &RootSystem, a: i32, b: i32) -> CommutingPoly {
    let t = sys.type_label();
    let zero = CommutingPoly::zero;
    match (a.signum(), b.signum()) {
        (1, 1) if a < b => x(Root::diff(a as u32, b as u32)),
        (-1, -1) if t != TypeLabel::A && -b < -a => x(Root::diff((-b) as u32, (-a) as u32)).neg(),
        (1, -1) if t != TypeLabel::A => {
            let j = -b;
            match t {
                TypeLabel::C if a == j => x(Root::double(a as u32)).scale(&Scalar::from(2)),
                TypeLabel::C => x(Root::sum(a as u32, j as u32)),
                _ if a < j => x(Root::sum(a as u32, j as u32)),
                _ if a > j => x(Root::sum(j as u32, a as u32)).neg(),
                _ => zero(),
            }
        }
        (1, 0) if t == TypeLabel::B => x(Root::single(a as u32)),
        (0, -1) if t == TypeLabel::B => x(Root::single((-b) as u32)).neg(),
        _ => zero(),
    }
}

/// The full matrix `U`, labels in the order `1..n, 0, −n..−1`.
///
/// ```
/// use kcascade::{matrix_u, CommutingPoly, Root, RootSystem, TypeLabel};
/// let d2 = RootSystem::new(TypeLabel::D, 2).unwrap();
/// let u = matrix_u(&d2);
/// let x = CommutingPoly::var(Root::sum(1, 2));
/// assert_eq!(u.get(1, -2), Some(&x));
/// assert_eq!(u.get(2, -1), Some(&x.neg()));
/// ```
pub fn matrix_u(sys: &RootSystem) -> SymbolicMatrix {
    let labels = sys.labels();
    SymbolicMatrix::new(labels.clone(), labels, |a, b| u_entry(sys, a, b))
}

/// `Δ_α`: the minor of `U` on rows `R(α)` and columns `C(α)`.
pub fn minor_delta(alpha: &Root, sys: &RootSystem) -> Result<CommutingPoly, Error> {
    let s = index_sets(alpha, sys)?;
    if s.r_set.is_empty() {
        return Err(Error::Domain(format!("{alpha}: empty index sets")));
    }
    SymbolicMatrix::new(s.r_set, s.c_set, |a, b| u_entry(sys, a, b)).det()
}

/// The cascade root `β` with `Δ_α = P_α ξ_β` (B/D): `ε_i+ε_{i+1}` for odd
/// `i = row(α)`, `ε_{i−1}+ε_i` for even `i`.
pub fn factor_root(alpha: &Root) -> Root {
    let i = alpha.row();
    if i % 2 == 1 {
        Root::sum(i, i + 1)
    } else {
        Root::sum(i - 1, i)
    }
}

/// `P_α` for `α ∈ Φ⁺∖B` in types B and D, normalized so that
/// `Δ_α = P_α·ξ_β` exactly with `β = factor_root(α)`.
///
/// `P_α` is, up to sign, the Pfaffian of the submatrix of `U` on rows
/// `−C(α)` and columns `C(α)` (skew-symmetric about the antidiagonal).
pub fn p_alpha(alpha: &Root, sys: &RootSystem) -> Result<CommutingPoly, Error> {
    if !matches!(sys.type_label(), TypeLabel::B | TypeLabel::D) {
        return Err(Error::Unsupported(format!("P_α in type {}", sys.type_label())));
    }
    let s = index_sets(alpha, sys)?;
    let mut rows: Vec<i32> = s.c_set.iter().map(|c| -c).collect();
    sys.sort_labels(&mut rows);
    let pf = SymbolicMatrix::new(rows, s.c_set.clone(), |a, b| u_entry(sys, a, b)).pfaffian()?;
    let delta = SymbolicMatrix::new(s.r_set, s.c_set, |a, b| u_entry(sys, a, b)).det()?;
    let xi = canonical_generator(&factor_root(alpha), sys)?;
    let p = delta
        .div_exact(&xi)
        .ok_or_else(|| Error::Consistency(format!("Δ_{alpha} is not divisible by ξ_{}", factor_root(alpha))))?;
    if p != pf && p != pf.neg() {
        return Err(Error::Consistency(format!("Δ_{alpha}/ξ_β ≠ ±Pf(U_α)")));
    }
    Ok(p)
}

/// Label for the Pfaffian generators: `ε_k` rows, the short column, or the
/// `ε_a − ε_n` column.
#[derive(Clone, Copy, PartialEq)]
enum Lbl {
    Eps(u32),
    Zero,
    Minus(u32),
}

fn pf_entry(a: Lbl, b: Lbl) -> CommutingPoly {
    match (a, b) {
        (Lbl::Eps(p), Lbl::Eps(q)) => x(Root::sum(p, q)),
        (Lbl::Eps(p), Lbl::Zero) => x(Root::single(p)),
        (Lbl::Eps(p), Lbl::Minus(n)) => x(Root::diff(p, n)),
        _ => unreachable!("special labels come last"),
    }
}

fn eps(k: u32) -> Vec<Lbl> {
    (1..=k).map(Lbl::Eps).collect()
}

/// The skew matrix whose Pfaffian is `ξ_β`, for Pfaffian-type generators.
fn pfaffian_labels(beta: &Root, sys: &RootSystem) -> Option<Vec<Lbl>> {
    let n = sys.rank();
    match (sys.type_label(), beta.kind) {
        (TypeLabel::B | TypeLabel::D, RootKind::Sum) => Some(eps(beta.j())),
        (TypeLabel::B, RootKind::Single) => Some([eps(n), vec![Lbl::Zero]].concat()),
        (TypeLabel::D, RootKind::Diff) if n.is_multiple_of(2) && beta.i == n - 1 => {
            Some([eps(n - 1), vec![Lbl::Minus(n)]].concat())
        }
        _ => None,
    }
}

/// Pfaffian of the skew matrix on `1..k` with entries `x_{ε_a+ε_b}`, with an
/// index removed.
fn pf_sums(idx: &[u32]) -> CommutingPoly {
    let l: Vec<Lbl> = idx.iter().map(|&k| Lbl::Eps(k)).collect();
    skew_matrix(&l, pf_entry).pfaffian_skew().expect("even size")
}

/// `ξ_{ε_{i−1}−ε_i}` for even `i`:
/// `Σ_{j=i..n} (Σ_s v_s x_{ε_s−ε_j})(Σ_t v_t x_{ε_t+ε_j})`, plus
/// `(Σ_s v_s x_{ε_s})²/4` in type B, with `v_s = (−1)^{s+1} Pf(M_{ŝ})`.
fn even_row_generator(i: u32, sys: &RootSystem) -> CommutingPoly {
    let n = sys.rank();
    let v: Vec<CommutingPoly> = (1..i)
        .map(|s| {
            let rest: Vec<u32> = (1..i).filter(|&k| k != s).collect();
            let sign = if s % 2 == 1 { 1 } else { -1 };
            pf_sums(&rest).scale(&Scalar::from(sign))
        })
        .collect();
    let mut out = CommutingPoly::zero();
    for j in i..=n {
        let mut lm = CommutingPoly::zero();
        let mut lp = CommutingPoly::zero();
        for s in 1..i {
            lm = lm.add(&v[s as usize - 1].mul(&x(Root::diff(s, j))));
            lp = lp.add(&v[s as usize - 1].mul(&x(Root::sum(s, j))));
        }
        out = out.add(&lm.mul(&lp));
    }
    if sys.type_label() == TypeLabel::B {
        let mut l = CommutingPoly::zero();
        for s in 1..i {
            l = l.add(&v[s as usize - 1].mul(&x(Root::single(s))));
        }
        out = out.add(&l.mul(&l).scale(&Scalar::ratio(1, 4)));
    }
    out
}

/// The canonical generator `ξ_β ∈ S(n)^N` for a cascade root `β`.
///
/// ```
/// use kcascade::{canonical_generator, CommutingPoly, Root, RootSystem, TypeLabel};
/// let d4 = RootSystem::new(TypeLabel::D, 4).unwrap();
/// let xi = canonical_generator(&Root::sum(3, 4), &d4).unwrap();
/// let v = |i, j| CommutingPoly::var(Root::sum(i, j));
/// let want = v(1, 2).mul(&v(3, 4)).sub(&v(1, 3).mul(&v(2, 4))).add(&v(1, 4).mul(&v(2, 3)));
/// assert_eq!(xi, want);
/// ```
pub fn canonical_generator(beta: &Root, sys: &RootSystem) -> Result<CommutingPoly, Error> {
    if !kostant_cascade(sys).contains(beta) {
        return Err(Error::Domain(format!("{beta} is not in the cascade")));
    }
    let u = |rows: Vec<i32>, cols: Vec<i32>| {
        SymbolicMatrix::new(rows, cols, |a, b| u_entry(sys, a, b)).det()
    };
    match (sys.type_label(), beta.kind) {
        (TypeLabel::A, _) => {
            let (i, big) = (beta.i as i32, sys.dim() as i32);
            u((1..=i).collect(), (big - i + 1..=big).collect())
        }
        (TypeLabel::C, _) => {
            let i = beta.i as i32;
            u((1..=i).collect(), (-i..=-1).collect())
        }
        (_, RootKind::Diff) if pfaffian_labels(beta, sys).is_none() => Ok(even_row_generator(beta.j(), sys)),
        _ => {
            let l = pfaffian_labels(beta, sys).expect("Pfaffian-type generator");
            skew_matrix(&l, pf_entry).pfaffian_skew()
        }
    }
}

/// The displayed determinant whose value is `±ξ_β²`, for the Pfaffian-type
/// generators (odd-row sums, `ξ_{ε_n}` for B with n odd, `ξ_{ε_{n−1}−ε_n}`
/// for D with n even): the skew matrix with its columns reversed.
pub fn bordered_display(beta: &Root, sys: &RootSystem) -> Option<SymbolicMatrix> {
    let l = pfaffian_labels(beta, sys)?;
    let mut m = skew_matrix(&l, pf_entry);
    for row in &mut m.entries {
        row.reverse();
    }
    m.cols.reverse();
    Some(m)
}

/// `ξ_β² = ±det(display)` for every Pfaffian-type generator of the system.
/// Returns the number of generators checked.
pub fn square_root_check(sys: &RootSystem) -> Result<usize, Error> {
    let mut k = 0;
    for beta in kostant_cascade(sys).roots {
        let Some(m) = bordered_display(&beta, sys) else { continue };
        let xi = canonical_generator(&beta, sys)?;
        let sq = xi.mul(&xi);
        let d = m.det()?;
        if d != sq && d != sq.neg() {
            return Err(Error::Consistency(format!("ξ_{beta}² ≠ ±det")));
        }
        k += 1;
    }
    Ok(k)
}

/// The weight `ϖ_β` of `ξ_β`.
///
/// ```
/// use kcascade::{expected_weight, Root, RootSystem, TypeLabel, Weight};
/// let c3 = RootSystem::new(TypeLabel::C, 3).unwrap();
/// assert_eq!(expected_weight(&Root::double(2), &c3).unwrap(), Weight(vec![2, 2, 0]));
/// ```
pub fn expected_weight(beta: &Root, sys: &RootSystem) -> Result<Weight, Error> {
    if !kostant_cascade(sys).contains(beta) {
        return Err(Error::Domain(format!("{beta} is not in the cascade")));
    }
    let (dim, n) = (sys.dim(), sys.rank());
    let w = |terms: Vec<(u32, i32)>| Weight::from_terms(dim, &terms);
    Ok(match (sys.type_label(), beta.kind) {
        (TypeLabel::A, _) => {
            let big = dim as u32;
            w((1..=beta.i).flat_map(|k| [(k, 1), (big - k + 1, -1)]).collect())
        }
        (TypeLabel::C, _) => w((1..=beta.i).map(|k| (k, 2)).collect()),
        (TypeLabel::D, RootKind::Diff) if n % 2 == 0 && beta.i == n - 1 => {
            w((1..n).map(|k| (k, 1)).chain([(n, -1)]).collect())
        }
        (_, RootKind::Diff) => w((1..=beta.i).map(|k| (k, 2)).collect()),
        _ => w((1..=beta.max_index()).map(|k| (k, 1)).collect()),
    })
}

/// Jacobian `∂ξ_β/∂x_γ` (`β, γ` in the cascade) at the point `x_γ = point[γ]`
/// on the cascade and 0 elsewhere; returns its determinant.
pub fn jacobian_check(sys: &RootSystem, point: &BTreeMap<Root, Scalar>) -> Result<Scalar, Error> {
    let casc = kostant_cascade(sys).roots;
    let val = |r: &Root| point.get(r).cloned().unwrap_or_default();
    let mut jac = Vec::new();
    for b in &casc {
        let xi = canonical_generator(b, sys)?;
        jac.push(casc.iter().map(|g| xi.derivative(g).eval(val)).collect::<Vec<_>>());
    }
    Ok(linalg::det(&jac))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(t: TypeLabel, n: u32) -> RootSystem {
        RootSystem::new(t, n).unwrap()
    }

    #[test]
    fn u_is_antidiagonal_skew_for_bd() {
        for (t, n) in [(TypeLabel::B, 3), (TypeLabel::D, 4), (TypeLabel::B, 2)] {
            let s = sys(t, n);
            let u = matrix_u(&s);
            for &a in &u.rows {
                for &b in &u.cols {
                    assert_eq!(u.get(a, b).unwrap(), &u.get(-b, -a).unwrap().neg(), "{t}{n} {a},{b}");
                }
            }
        }
        let b2 = sys(TypeLabel::B, 2);
        assert_eq!(u_entry(&b2, 1, 0), x(Root::single(1)));
        assert_eq!(u_entry(&b2, 0, -1), x(Root::single(1)).neg());
    }

    #[test]
    fn c2_generator() {
        let c2 = sys(TypeLabel::C, 2);
        let xi = canonical_generator(&Root::double(2), &c2).unwrap();
        let s = x(Root::sum(1, 2));
        let want = s.mul(&s).sub(&x(Root::double(1)).mul(&x(Root::double(2))).scale(&Scalar::from(4)));
        assert_eq!(xi, want);
    }

    #[test]
    fn d3_even_row_generator_is_a1() {
        let d3 = sys(TypeLabel::D, 3);
        let xi = canonical_generator(&Root::diff(1, 2), &d3).unwrap();
        let want = x(Root::diff(1, 2)).mul(&x(Root::sum(1, 2))).add(&x(Root::diff(1, 3)).mul(&x(Root::sum(1, 3))));
        assert_eq!(xi, want);
    }

    #[test]
    fn normalization_terms() {
        // e_{ε1+ε2} e_{ε3+ε4} … with coefficient 1
        let d6 = sys(TypeLabel::D, 6);
        let xi = canonical_generator(&Root::sum(5, 6), &d6).unwrap();
        assert!(xi.coeff(&[Root::sum(1, 2), Root::sum(3, 4), Root::sum(5, 6)]).is_one());
        let xi = canonical_generator(&Root::diff(5, 6), &d6).unwrap();
        assert!(xi.coeff(&[Root::sum(1, 2), Root::sum(3, 4), Root::diff(5, 6)]).is_one());
        let b5 = sys(TypeLabel::B, 5);
        let xi = canonical_generator(&Root::single(5), &b5).unwrap();
        assert!(xi.coeff(&[Root::sum(1, 2), Root::sum(3, 4), Root::single(5)]).is_one());
    }

    #[test]
    fn minors_of_examples() {
        let d5 = sys(TypeLabel::D, 5);
        let d = minor_delta(&Root::sum(1, 3), &d5).unwrap();
        assert_eq!(d, x(Root::sum(1, 3)).mul(&x(Root::sum(1, 2))).neg());
        assert_eq!(p_alpha(&Root::sum(1, 3), &d5).unwrap(), x(Root::sum(1, 3)).neg());
        let a7 = sys(TypeLabel::A, 7);
        let d = minor_delta(&Root::diff(3, 4), &a7).unwrap();
        assert_eq!(d.len(), 6);
        assert_eq!(d.weight(&a7).unwrap(), Weight(vec![1, 1, 1, -1, 0, 0, -1, -1]));
    }

    #[test]
    fn square_roots() {
        assert_eq!(square_root_check(&sys(TypeLabel::D, 4)).unwrap(), 3);
        assert_eq!(square_root_check(&sys(TypeLabel::B, 3)).unwrap(), 2);
    }

    #[test]
    fn generator_weights_match_table() {
        for (t, n) in [(TypeLabel::A, 5), (TypeLabel::B, 4), (TypeLabel::C, 3), (TypeLabel::D, 5), (TypeLabel::D, 4)] {
            let s = sys(t, n);
            for b in kostant_cascade(&s).roots {
                let xi = canonical_generator(&b, &s).unwrap();
                assert_eq!(xi.weight(&s).unwrap(), expected_weight(&b, &s).unwrap(), "{t}{n} {b}");
            }
        }
    }

    #[test]
    fn jacobian_nonsingular() {
        let d4 = sys(TypeLabel::D, 4);
        let pt: BTreeMap<Root, Scalar> =
            kostant_cascade(&d4).roots.into_iter().zip([2, -3, 5, 7]).map(|(r, v)| (r, Scalar::from(v))).collect();
        assert!(!jacobian_check(&d4, &pt).unwrap().is_zero());
    }
}
