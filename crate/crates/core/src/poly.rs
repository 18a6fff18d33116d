//! Polynomials in commuting root variables `x_α`, and labelled matrices over
//! them with determinants and Pfaffians.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde_json::{json, Value};

use crate::rootsys::{Root, RootSystem, Weight};
use crate::{Error, Scalar};

/// Sorted multiset of variables.
pub type Monomial = Vec<Root>;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct CommutingPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

fn merge(a: &[Root], b: &[Root]) -> Monomial {
    let mut v = Vec::with_capacity(a.len() + b.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    v.sort_unstable();
    v
}

/// `a / b` as multisets, if `b ⊆ a`.
fn mono_div(a: &[Root], b: &[Root]) -> Option<Monomial> {
    let mut out = Vec::with_capacity(a.len());
    let mut j = 0;
    for x in a {
        if j < b.len() && b[j] == *x {
            j += 1;
        } else if j < b.len() && b[j] < *x {
            return None;
        } else {
            out.push(*x);
        }
    }
    (j == b.len()).then_some(out)
}

/// Lexicographic order on exponent vectors (variables ordered by `Root`).
fn lex(a: &[Root], b: &[Root]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            // the smaller variable has the larger exponent on the side where it occurs
            (Some(x), Some(y)) => return y.cmp(x),
        }
    }
}

impl CommutingPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn var(r: Root) -> Self {
        Self::monomial(vec![r], Scalar::one())
    }

    pub fn monomial(mut m: Monomial, c: Scalar) -> Self {
        m.sort_unstable();
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[Root]) -> Scalar {
        let mut m = m.to_vec();
        m.sort_unstable();
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Vec::len);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        CommutingPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                *acc.entry(merge(m1, m2)).or_default() += &(c1 * c2);
            }
        }
        CommutingPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().max_by(|a, b| lex(a.0, b.0))
    }

    /// `self / q` when `q` divides `self` exactly.
    ///
    /// ```
    /// use kcascade::{CommutingPoly, Root};
    /// let (x, y) = (CommutingPoly::var(Root::diff(1, 2)), CommutingPoly::var(Root::sum(1, 2)));
    /// let p = x.add(&y).mul(&x.sub(&y));
    /// assert_eq!(p.div_exact(&x.add(&y)), Some(x.sub(&y)));
    /// assert_eq!(p.div_exact(&x), None);
    /// ```
    pub fn div_exact(&self, q: &Self) -> Option<Self> {
        let (lq, cq) = q.leading()?;
        let (lq, cq) = (lq.clone(), cq.clone());
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some((lp, cp)) = rem.leading() {
            let m = mono_div(lp, &lq)?;
            let t = Self::monomial(m, cp / &cq);
            rem = rem.sub(&t.mul(q));
            quo = quo.add(&t);
        }
        Some(quo)
    }

    /// The `k` with `self = k·o`, if any (`o` nonzero).
    pub fn ratio_to(&self, o: &Self) -> Option<Scalar> {
        let (m, c) = o.terms.iter().next()?;
        let k = self.coeff(m) / c;
        (o.scale(&k) == *self).then_some(k)
    }

    /// Substitute `x_α ↦ val(α)`.
    pub fn eval(&self, val: impl Fn(&Root) -> Scalar) -> Scalar {
        let mut cache: HashMap<Root, Scalar> = HashMap::new();
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for r in m {
                let v = cache.entry(*r).or_insert_with(|| val(r));
                t *= &*v;
                if t.is_zero() {
                    break;
                }
            }
            acc += &t;
        }
        acc
    }

    /// `∂/∂x_r`.
    pub fn derivative(&self, r: &Root) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let k = m.iter().filter(|x| *x == r).count();
            if k == 0 {
                continue;
            }
            let pos = m.iter().position(|x| x == r).unwrap();
            let mut m2 = m.clone();
            m2.remove(pos);
            out.add_term(m2, &(c * &Scalar::from(k as i64)));
        }
        out
    }

    /// Variables that occur.
    pub fn variables(&self) -> Vec<Root> {
        let mut v: Vec<Root> = self.terms.keys().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Common weight of all terms.
    pub fn weight(&self, sys: &RootSystem) -> Result<Weight, Error> {
        let mut found: Option<Weight> = None;
        for m in self.terms.keys() {
            let mut w = Weight::zero(sys.dim());
            for r in m {
                w.add_scaled(&sys.coords(r), 1);
            }
            match &found {
                None => found = Some(w),
                Some(f) if *f != w => return Err(Error::Domain("polynomial is not weight-homogeneous".into())),
                _ => {}
            }
        }
        found.ok_or_else(|| Error::Domain("zero polynomial has no weight".into()))
    }

    /// `{"commutative":true,"terms":[{"mono":[[Root,exp],…],"coeff":Scalar},…]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut mono = Vec::new();
                let mut i = 0;
                while i < m.len() {
                    let e = m[i..].iter().take_while(|r| **r == m[i]).count();
                    mono.push(json!([m[i], e]));
                    i += e;
                }
                json!({"mono": mono, "coeff": c})
            })
            .collect();
        json!({"commutative": true, "terms": terms})
    }
}

impl fmt::Display for CommutingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_rational() && c.a() < &num::BigRational::from_integer(0.into());
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut parts = Vec::new();
            if !mag.is_one() || m.is_empty() {
                parts.push(if mag.is_rational() { mag.to_string() } else { format!("({mag})") });
            }
            let mut i = 0;
            while i < m.len() {
                let e = m[i..].iter().take_while(|r| **r == m[i]).count();
                parts.push(if e > 1 { format!("x({})^{e}", m[i]) } else { format!("x({})", m[i]) });
                i += e;
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for CommutingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A matrix over [`CommutingPoly`] with signed row and column labels.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicMatrix {
    pub rows: Vec<i32>,
    pub cols: Vec<i32>,
    pub entries: Vec<Vec<CommutingPoly>>,
}

impl SymbolicMatrix {
    pub fn new(rows: Vec<i32>, cols: Vec<i32>, entry: impl Fn(i32, i32) -> CommutingPoly) -> Self {
        let entries = rows.iter().map(|&r| cols.iter().map(|&c| entry(r, c)).collect()).collect();
        SymbolicMatrix { rows, cols, entries }
    }

    /// Unlabelled matrix (labels `1..m`).
    pub fn from_rows(entries: Vec<Vec<CommutingPoly>>) -> Self {
        let m = entries.len() as i32;
        let k = entries.first().map_or(0, Vec::len) as i32;
        SymbolicMatrix { rows: (1..=m).collect(), cols: (1..=k).collect(), entries }
    }

    pub fn size(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn get(&self, r: i32, c: i32) -> Option<&CommutingPoly> {
        let i = self.rows.iter().position(|&x| x == r)?;
        let j = self.cols.iter().position(|&x| x == c)?;
        Some(&self.entries[i][j])
    }

    /// Submatrix on the given labels.
    pub fn submatrix(&self, rows: &[i32], cols: &[i32]) -> Option<Self> {
        let ri: Vec<usize> = rows.iter().map(|r| self.rows.iter().position(|x| x == r)).collect::<Option<_>>()?;
        let ci: Vec<usize> = cols.iter().map(|c| self.cols.iter().position(|x| x == c)).collect::<Option<_>>()?;
        let entries = ri.iter().map(|&i| ci.iter().map(|&j| self.entries[i][j].clone()).collect()).collect();
        Some(SymbolicMatrix { rows: rows.to_vec(), cols: cols.to_vec(), entries })
    }

    /// Determinant by Laplace expansion with memoized complementary minors.
    ///
    /// ```
    /// use kcascade::{CommutingPoly, Root, SymbolicMatrix};
    /// let x = CommutingPoly::var(Root::diff(1, 2));
    /// let m = SymbolicMatrix::from_rows(vec![vec![x.clone(), CommutingPoly::one()], vec![CommutingPoly::one(), x.clone()]]);
    /// assert_eq!(m.det().unwrap(), x.mul(&x).sub(&CommutingPoly::one()));
    /// ```
    pub fn det(&self) -> Result<CommutingPoly, Error> {
        let (m, k) = self.size();
        if m != k {
            return Err(Error::Dimension(format!("{m}×{k} is not square")));
        }
        if m > 24 {
            return Err(Error::Unsupported(format!("{m}×{m} determinant")));
        }
        let mut memo = HashMap::new();
        Ok(self.det_rec(0, (1u32 << m) - 1, &mut memo))
    }

    fn det_rec(&self, row: usize, cols: u32, memo: &mut HashMap<u32, CommutingPoly>) -> CommutingPoly {
        if cols == 0 {
            return CommutingPoly::one();
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc = CommutingPoly::zero();
        let mut sign = 1i64;
        for j in 0..self.cols.len() {
            if cols & (1 << j) == 0 {
                continue;
            }
            let e = &self.entries[row][j];
            if !e.is_zero() {
                let minor = self.det_rec(row + 1, cols & !(1 << j), memo);
                if !minor.is_zero() {
                    acc = acc.add(&e.mul(&minor).scale(&Scalar::from(sign)));
                }
            }
            sign = -sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// `K_{a,b} = −K_{m+1−b, m+1−a}` for all entries.
    pub fn is_antidiagonal_skew(&self) -> bool {
        let (m, k) = self.size();
        if m != k {
            return false;
        }
        (0..m).all(|a| (0..m).all(|b| self.entries[a][b] == self.entries[m - 1 - b][m - 1 - a].neg()))
    }

    pub fn is_skew(&self) -> bool {
        let (m, k) = self.size();
        m == k && (0..m).all(|a| (0..m).all(|b| self.entries[a][b] == self.entries[b][a].neg()))
    }

    /// Pfaffian of a matrix skew-symmetric about the antidiagonal: the usual
    /// Pfaffian after reversing the column order.
    ///
    /// ```
    /// use kcascade::{CommutingPoly, Root, SymbolicMatrix};
    /// let x = CommutingPoly::var(Root::sum(1, 2));
    /// let m = SymbolicMatrix::from_rows(vec![vec![x.clone(), CommutingPoly::zero()], vec![CommutingPoly::zero(), x.neg()]]);
    /// assert_eq!(m.pfaffian().unwrap(), x);
    /// ```
    pub fn pfaffian(&self) -> Result<CommutingPoly, Error> {
        if !self.is_antidiagonal_skew() {
            return Err(Error::NotSkew);
        }
        let mut rev = self.clone();
        rev.cols.reverse();
        for row in &mut rev.entries {
            row.reverse();
        }
        rev.pfaffian_skew()
    }

    /// Pfaffian of a skew-symmetric matrix, by expansion along the first row.
    pub fn pfaffian_skew(&self) -> Result<CommutingPoly, Error> {
        let (m, _) = self.size();
        if !self.is_skew() {
            return Err(Error::NotSkew);
        }
        if m % 2 == 1 {
            return Err(Error::Dimension(format!("odd size {m}")));
        }
        if m > 24 {
            return Err(Error::Unsupported(format!("{m}×{m} Pfaffian")));
        }
        let mut memo = HashMap::new();
        Ok(self.pf_rec((1u32 << m) - 1, &mut memo))
    }

    fn pf_rec(&self, set: u32, memo: &mut HashMap<u32, CommutingPoly>) -> CommutingPoly {
        if set == 0 {
            return CommutingPoly::one();
        }
        if let Some(p) = memo.get(&set) {
            return p.clone();
        }
        let i = set.trailing_zeros() as usize;
        let rest = set & !(1 << i);
        let mut acc = CommutingPoly::zero();
        let mut sign = 1i64;
        for j in i + 1..self.rows.len() {
            if rest & (1 << j) == 0 {
                continue;
            }
            let e = &self.entries[i][j];
            if !e.is_zero() {
                let sub = self.pf_rec(rest & !(1 << j), memo);
                if !sub.is_zero() {
                    acc = acc.add(&e.mul(&sub).scale(&Scalar::from(sign)));
                }
            }
            sign = -sign;
        }
        memo.insert(set, acc.clone());
        acc
    }
}

/// Skew-symmetric matrix on `labels` with `M_{ab} = entry(a, b)` above the diagonal.
pub fn skew_matrix<L: Copy>(labels: &[L], entry: impl Fn(L, L) -> CommutingPoly) -> SymbolicMatrix {
    let m = labels.len();
    let mut entries = vec![vec![CommutingPoly::zero(); m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let e = entry(labels[a], labels[b]);
            entries[b][a] = e.neg();
            entries[a][b] = e;
        }
    }
    SymbolicMatrix::from_rows(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32, j: u32) -> CommutingPoly {
        CommutingPoly::var(Root::sum(i, j))
    }

    #[test]
    fn pfaffian_4x4() {
        let m = skew_matrix(&[1u32, 2, 3, 4], x);
        let pf = m.pfaffian_skew().unwrap();
        let want = x(1, 2).mul(&x(3, 4)).sub(&x(1, 3).mul(&x(2, 4))).add(&x(1, 4).mul(&x(2, 3)));
        assert_eq!(pf, want);
        assert_eq!(pf.mul(&pf), m.det().unwrap());
    }

    #[test]
    fn pfaffian_squares_to_det_6x6() {
        let m = skew_matrix(&[1u32, 2, 3, 4, 5, 6], x);
        let pf = m.pfaffian_skew().unwrap();
        assert_eq!(pf.len(), 15);
        assert_eq!(pf.mul(&pf), m.det().unwrap());
    }

    #[test]
    fn odd_and_non_skew_rejected() {
        let m = skew_matrix(&[1u32, 2, 3], x);
        assert!(matches!(m.pfaffian_skew(), Err(Error::Dimension(_))));
        let n = SymbolicMatrix::from_rows(vec![vec![x(1, 2), x(1, 3)], vec![x(1, 3), x(1, 2)]]);
        assert_eq!(n.pfaffian(), Err(Error::NotSkew));
    }

    #[test]
    fn division_and_derivative() {
        let (a, b) = (x(1, 2), x(3, 4));
        let p = a.mul(&a).mul(&b).add(&a.scale(&Scalar::from(3)));
        assert_eq!(p.div_exact(&a), Some(a.mul(&b).add(&CommutingPoly::constant(Scalar::from(3)))));
        assert_eq!(p.derivative(&Root::sum(1, 2)), a.mul(&b).scale(&Scalar::from(2)).add(&CommutingPoly::constant(Scalar::from(3))));
        assert!(p.div_exact(&b).is_none());
    }

    #[test]
    fn eval_at_point() {
        let p = x(1, 2).mul(&x(3, 4)).sub(&x(1, 3));
        let v = p.eval(|r| if *r == Root::sum(1, 3) { Scalar::zero() } else { Scalar::from(r.i as i64 + 1) });
        assert_eq!(v, Scalar::from(8));
    }
}
