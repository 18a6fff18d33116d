//! Classical root systems, the row/col coordinates, Kostant cascades and the
//! index sets R(α), C(α) that select minors of the root-vector matrix.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "A" | "a" => Ok(TypeLabel::A),
            "B" | "b" => Ok(TypeLabel::B),
            "C" | "c" => Ok(TypeLabel::C),
            "D" | "d" => Ok(TypeLabel::D),
            _ => Err(Error::Parse(format!("type `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootKind {
    /// ε_i − ε_j
    Diff,
    /// ε_i + ε_j
    Sum,
    /// 2ε_i
    Double,
    /// ε_i
    Single,
}

/// A positive root named by its ε-coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub kind: RootKind,
    pub i: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub j: Option<u32>,
}

impl Root {
    pub fn diff(i: u32, j: u32) -> Root {
        assert!(0 < i && i < j, "ε_{i}−ε_{j} is not positive");
        Root { kind: RootKind::Diff, i, j: Some(j) }
    }

    pub fn sum(i: u32, j: u32) -> Root {
        assert!(0 < i && i != j, "ε_{i}+ε_{j}");
        Root { kind: RootKind::Sum, i: i.min(j), j: Some(i.max(j)) }
    }

    pub fn double(i: u32) -> Root {
        assert!(i > 0);
        Root { kind: RootKind::Double, i, j: None }
    }

    pub fn single(i: u32) -> Root {
        assert!(i > 0);
        Root { kind: RootKind::Single, i, j: None }
    }

    /// Second index (0 for double/single).
    pub fn j(&self) -> u32 {
        self.j.unwrap_or(0)
    }

    /// Coefficients on ε_1..ε_dim.
    pub fn coords(&self, dim: usize) -> Vec<i32> {
        let mut v = vec![0; dim];
        let (i, j) = (self.i as usize - 1, self.j() as usize);
        match self.kind {
            RootKind::Diff => {
                v[i] += 1;
                v[j - 1] -= 1;
            }
            RootKind::Sum => {
                v[i] += 1;
                v[j - 1] += 1;
            }
            RootKind::Double => v[i] += 2,
            RootKind::Single => v[i] += 1,
        }
        v
    }

    pub fn row(&self) -> u32 {
        self.i
    }

    /// `col(ε_i+ε_j) = −j`, `col(2ε_i) = −i`, `col(ε_i−ε_j) = j`, `col(ε_i) = 0`.
    pub fn col(&self) -> i32 {
        match self.kind {
            RootKind::Diff => self.j() as i32,
            RootKind::Sum => -(self.j() as i32),
            RootKind::Double => -(self.i as i32),
            RootKind::Single => 0,
        }
    }

    /// Largest ε-index involved.
    pub fn max_index(&self) -> u32 {
        self.i.max(self.j())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RootKind::Diff => write!(f, "e{}-e{}", self.i, self.j()),
            RootKind::Sum => write!(f, "e{}+e{}", self.i, self.j()),
            RootKind::Double => write!(f, "2e{}", self.i),
            RootKind::Single => write!(f, "e{}", self.i),
        }
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Root {
    type Err = Error;

    /// `"ei+ej"`, `"ei-ej"`, `"2ei"`, `"ei"` (1-based).
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("root `{s}`"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let idx = |x: &str| -> Result<u32, Error> {
            let n: u32 = x.strip_prefix('e').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            Ok(n)
        };
        if t.is_empty() {
            return Err(bad());
        }
        if let Some(rest) = t.strip_prefix('2') {
            return Ok(Root::double(idx(rest)?));
        }
        if let Some(p) = t[1..].find(['+', '-']).map(|p| p + 1) {
            let (i, j) = (idx(&t[..p])?, idx(&t[p + 1..])?);
            return match &t[p..=p] {
                "+" if i != j => Ok(Root::sum(i, j)),
                "-" if i < j => Ok(Root::diff(i, j)),
                _ => Err(bad()),
            };
        }
        Ok(Root::single(idx(&t)?))
    }
}

/// Integer coordinates on ε_1..ε_dim.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(dim: usize) -> Weight {
        Weight(vec![0; dim])
    }

    pub fn add_scaled(&mut self, other: &[i32], k: i32) {
        for (x, y) in self.0.iter_mut().zip(other) {
            *x += k * y;
        }
    }

    /// `Σ_{k∈ks} c·ε_k`.
    pub fn from_terms(dim: usize, terms: &[(u32, i32)]) -> Weight {
        let mut w = Weight::zero(dim);
        for &(k, c) in terms {
            w.0[k as usize - 1] += c;
        }
        w
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}e{}", k + 1)?;
            } else {
                write!(f, "{sign}{mag}e{}", k + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Positive roots of a classical system, listed in the PBW order used
/// throughout: height ascending, ties broken by the coordinate vector in
/// descending lexicographic order.
///
/// `rank` is the Lie rank; type A of rank r lives in sl_{r+1}, so it has
/// r+1 ε-coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    type_label: TypeLabel,
    rank: u32,
    positive: Vec<Root>,
    simple: Vec<Root>,
    index: HashMap<Root, usize>,
    by_coords: HashMap<Vec<i32>, Root>,
}

impl PartialEq for RootSystem {
    fn eq(&self, o: &Self) -> bool {
        self.type_label == o.type_label && self.rank == o.rank
    }
}

impl RootSystem {
    /// ```
    /// use kcascade::{RootSystem, TypeLabel};
    /// let b2 = RootSystem::new(TypeLabel::B, 2).unwrap();
    /// let names: Vec<String> = b2.positive_roots().iter().map(|r| r.to_string()).collect();
    /// assert_eq!(names, ["e1-e2", "e2", "e1", "e1+e2"]);
    /// ```
    pub fn new(type_label: TypeLabel, rank: u32) -> Result<RootSystem, Error> {
        let min = if type_label == TypeLabel::D { 2 } else { 1 };
        if rank < min || rank > 64 {
            return Err(Error::Unsupported(format!("{type_label}{rank}")));
        }
        let n = rank;
        let dim = if type_label == TypeLabel::A { n + 1 } else { n };
        let mut roots = Vec::new();
        for i in 1..=dim {
            for j in i + 1..=dim {
                roots.push(Root::diff(i, j));
            }
        }
        if type_label != TypeLabel::A {
            for i in 1..=n {
                for j in i + 1..=n {
                    roots.push(Root::sum(i, j));
                }
            }
        }
        match type_label {
            TypeLabel::B => roots.extend((1..=n).map(Root::single)),
            TypeLabel::C => roots.extend((1..=n).map(Root::double)),
            _ => {}
        }
        let mut simple: Vec<Root> = (1..dim).map(|i| Root::diff(i, i + 1)).collect();
        match type_label {
            TypeLabel::A => {}
            TypeLabel::B => simple.push(Root::single(n)),
            TypeLabel::C => simple.push(Root::double(n)),
            TypeLabel::D => simple.push(Root::sum(n - 1, n)),
        }
        let d = dim as usize;
        let height = |r: &Root| -> u32 { height(type_label, n, r) };
        roots.sort_by(|x, y| {
            height(x)
                .cmp(&height(y))
                .then_with(|| y.coords(d).cmp(&x.coords(d)))
        });
        let index = roots.iter().enumerate().map(|(k, r)| (*r, k)).collect();
        let by_coords = roots.iter().map(|r| (r.coords(d), *r)).collect();
        Ok(RootSystem { type_label, rank, positive: roots, simple, index, by_coords })
    }

    pub fn type_label(&self) -> TypeLabel {
        self.type_label
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Number of ε-coordinates.
    pub fn dim(&self) -> usize {
        match self.type_label {
            TypeLabel::A => self.rank as usize + 1,
            _ => self.rank as usize,
        }
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    pub fn len(&self) -> usize {
        self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn root(&self, k: usize) -> Root {
        self.positive[k]
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn is_simple(&self, r: &Root) -> bool {
        self.simple.contains(r)
    }

    pub fn coords(&self, r: &Root) -> Vec<i32> {
        r.coords(self.dim())
    }

    pub fn height(&self, r: &Root) -> u32 {
        height(self.type_label, self.rank, r)
    }

    /// The positive root with the given coordinates, if any.
    pub fn root_with_coords(&self, v: &[i32]) -> Option<Root> {
        self.by_coords.get(v).copied()
    }

    /// `α+γ` when it is a positive root.
    pub fn add(&self, a: &Root, g: &Root) -> Option<Root> {
        let mut v = self.coords(a);
        for (x, y) in v.iter_mut().zip(self.coords(g)) {
            *x += y;
        }
        self.root_with_coords(&v)
    }

    /// `α−γ` when it is a positive root.
    pub fn sub(&self, a: &Root, g: &Root) -> Option<Root> {
        let mut v = self.coords(a);
        for (x, y) in v.iter_mut().zip(self.coords(g)) {
            *x -= y;
        }
        self.root_with_coords(&v)
    }

    /// Whether `v` is a root (positive or negative).
    pub fn is_root_vector(&self, v: &[i32]) -> bool {
        if self.by_coords.contains_key(v) {
            return true;
        }
        let neg: Vec<i32> = v.iter().map(|x| -x).collect();
        self.by_coords.contains_key(&neg)
    }

    /// `R_i = {α : row(α) = i}`.
    pub fn row_set(&self, i: u32) -> Vec<Root> {
        self.positive.iter().filter(|r| r.row() == i).copied().collect()
    }

    /// Matrix labels in the order 1..n, 0, −n..−1 (0 only for B; no
    /// negatives for A).
    pub fn labels(&self) -> Vec<i32> {
        let n = self.rank as i32;
        match self.type_label {
            TypeLabel::A => (1..=n + 1).collect(),
            TypeLabel::B => (1..=n).chain(std::iter::once(0)).chain(-n..=-1).collect(),
            TypeLabel::C | TypeLabel::D => (1..=n).chain(-n..=-1).collect(),
        }
    }

    /// Position of a label in [`labels`](Self::labels).
    pub fn label_pos(&self, x: i32) -> usize {
        let n = self.rank as i32;
        let p = if x > 0 {
            x - 1
        } else if x == 0 {
            n
        } else {
            2 * n + 1 + x + if self.type_label == TypeLabel::B { 1 } else { 0 }
        };
        p as usize
    }

    pub fn sort_labels(&self, v: &mut [i32]) {
        v.sort_by_key(|&x| self.label_pos(x));
    }
}

fn height(t: TypeLabel, n: u32, r: &Root) -> u32 {
    let (i, j) = (r.i, r.j());
    match (t, r.kind) {
        (_, RootKind::Diff) => j - i,
        (TypeLabel::B, RootKind::Sum) => 2 * n + 2 - i - j,
        (TypeLabel::B, RootKind::Single) => n + 1 - i,
        (TypeLabel::C, RootKind::Sum) => 2 * n + 1 - i - j,
        (TypeLabel::C, RootKind::Double) => 2 * (n - i) + 1,
        (TypeLabel::D, RootKind::Sum) => 2 * n - i - j,
        _ => unreachable!("{r} in {t}"),
    }
}

/// An ordered cascade of positive roots plus its non-simple part B∖Δ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cascade {
    #[serde(rename = "type")]
    pub type_label: TypeLabel,
    pub rank: u32,
    pub roots: Vec<Root>,
    pub nonsimple: Vec<Root>,
}

impl Cascade {
    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }

    pub fn is_nonsimple(&self, r: &Root) -> bool {
        self.nonsimple.contains(r)
    }
}

/// The Kostant cascade in increasing row, with ε_{2i−1}−ε_{2i} listed before
/// ε_{2i−1}+ε_{2i}.
///
/// ```
/// use kcascade::{kostant_cascade, RootSystem, TypeLabel};
/// let b3 = RootSystem::new(TypeLabel::B, 3).unwrap();
/// let c = kostant_cascade(&b3);
/// assert_eq!(format!("{:?}", c.roots), "[e1-e2, e1+e2, e3]");
/// ```
pub fn kostant_cascade(sys: &RootSystem) -> Cascade {
    let n = sys.rank();
    let mut roots = Vec::new();
    match sys.type_label() {
        TypeLabel::A => {
            let big = n + 1;
            for k in 1..=big / 2 {
                roots.push(Root::diff(k, big - k + 1));
            }
        }
        TypeLabel::C => roots.extend((1..=n).map(Root::double)),
        TypeLabel::B | TypeLabel::D => {
            for k in 1..=n / 2 {
                roots.push(Root::diff(2 * k - 1, 2 * k));
                roots.push(Root::sum(2 * k - 1, 2 * k));
            }
            if sys.type_label() == TypeLabel::B && n % 2 == 1 {
                roots.push(Root::single(n));
            }
        }
    }
    let nonsimple = roots.iter().filter(|r| !sys.is_simple(r)).copied().collect();
    Cascade { type_label: sys.type_label(), rank: n, roots, nonsimple }
}

/// Neither β−β′ nor β+β′ is a root, for all pairs.
pub fn is_strongly_orthogonal(roots: &[Root], sys: &RootSystem) -> bool {
    for (k, a) in roots.iter().enumerate() {
        for b in &roots[k + 1..] {
            let (x, y) = (sys.coords(a), sys.coords(b));
            let s: Vec<i32> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
            let d: Vec<i32> = x.iter().zip(&y).map(|(p, q)| p - q).collect();
            if sys.is_root_vector(&s) || sys.is_root_vector(&d) {
                return false;
            }
        }
    }
    true
}

/// A truncated ℤ₂-linear order on {0} ∪ {±ε_k}, stored as its decreasing
/// sequence of symbols: `k > 0` is +ε_k, `k < 0` is −ε_k, `0` is zero.
///
/// For type A only +ε_k symbols occur (the order is on the ε_k themselves).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSpec(pub Vec<i32>);

impl OrderSpec {
    /// `ε_1 ≻ … ≻ ε_n ≻ 0 ≻ −ε_n ≻ … ≻ −ε_1` (without the zero part for A).
    pub fn standard(t: TypeLabel, n: u32) -> OrderSpec {
        let n = n as i32;
        let mut v: Vec<i32> = (1..=n).collect();
        if t != TypeLabel::A {
            v.push(0);
            v.extend((1..=n).rev().map(|k| -k));
        }
        OrderSpec(v)
    }

    /// Parses `"e1>e3>e4>e2"`, `"e1>e2>0>-e2>-e1"`; a trailing `...` is ignored.
    pub fn parse(s: &str) -> Result<OrderSpec, Error> {
        let bad = || Error::Parse(format!("order `{s}`"));
        let mut out = Vec::new();
        for tok in s.split(['>', ',']) {
            let t: String = tok.chars().filter(|c| !c.is_whitespace()).collect();
            if t.is_empty() || t.chars().all(|c| c == '.' || c == '…') {
                continue;
            }
            if t == "0" {
                out.push(0);
                continue;
            }
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            let k: i32 = body.strip_prefix('e').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if k <= 0 {
                return Err(bad());
            }
            out.push(sign * k);
        }
        if out.is_empty() {
            return Err(bad());
        }
        Ok(OrderSpec(out))
    }

    /// Symbols strictly above 0, in decreasing order, after validation.
    fn positive_half(&self, t: TypeLabel) -> Result<Vec<i32>, Error> {
        let bad = |m: &str| Error::Domain(format!("order {:?}: {m}", self.0));
        let s = &self.0;
        if t == TypeLabel::A {
            if s.iter().any(|&x| x <= 0) {
                return Err(bad("type A orders use +ε_k symbols only"));
            }
            let mut seen = s.clone();
            seen.sort();
            seen.dedup();
            if seen.len() != s.len() {
                return Err(bad("repeated symbol"));
            }
            return Ok(s.clone());
        }
        let half: Vec<i32> = match s.iter().position(|&x| x == 0) {
            Some(p) => {
                let (pos, rest) = (&s[..p], &s[p + 1..]);
                let mirror: Vec<i32> = pos.iter().rev().map(|x| -x).collect();
                if !rest.is_empty() && rest != mirror.as_slice() {
                    return Err(bad("not ℤ₂-linear: −1 must reverse the order"));
                }
                if s[p + 1..].contains(&0) {
                    return Err(bad("repeated 0"));
                }
                pos.to_vec()
            }
            // a full order without 0 (type D): split at the middle when it mirrors
            None => {
                let (pos, rest) = s.split_at(s.len() / 2);
                let mirror: Vec<i32> = pos.iter().rev().map(|x| -x).collect();
                if s.len().is_multiple_of(2) && rest == mirror.as_slice() {
                    pos.to_vec()
                } else {
                    s.clone()
                }
            }
        };
        let mut abs: Vec<i32> = half.iter().map(|x| x.abs()).collect();
        abs.sort();
        abs.dedup();
        if abs.len() != half.len() {
            return Err(bad("not ℤ₂-linear: ε_k and −ε_k both above 0"));
        }
        if t == TypeLabel::D {
            if let Some(&last) = half.last() {
                if last < 0 {
                    return Err(bad("type D: the minimal positive element must be +ε_k"));
                }
            }
        }
        Ok(half)
    }
}

/// A root with arbitrary signs, as produced by a non-standard order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedRoot(pub BTreeMap<u32, i32>);

impl SignedRoot {
    fn from_terms(terms: &[(i32, i32)]) -> SignedRoot {
        let mut m = BTreeMap::new();
        for &(sym, c) in terms {
            *m.entry(sym.unsigned_abs()).or_insert(0) += c * sym.signum();
        }
        m.retain(|_, v| *v != 0);
        SignedRoot(m)
    }

    /// The standard positive root with these coordinates, if it is one.
    pub fn to_root(&self) -> Option<Root> {
        let t: Vec<(u32, i32)> = self.0.iter().map(|(&k, &v)| (k, v)).collect();
        match t.as_slice() {
            [(i, 2)] => Some(Root::double(*i)),
            [(i, 1)] => Some(Root::single(*i)),
            [(i, 1), (j, 1)] => Some(Root::sum(*i, *j)),
            [(i, 1), (j, -1)] => Some(Root::diff(*i, *j)),
            _ => None,
        }
    }
}

impl fmt::Display for SignedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&k, &c) in &self.0 {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}e{k}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The cascade produced by the N_k recursion on a truncated order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCascade {
    #[serde(rename = "type")]
    pub type_label: TypeLabel,
    pub roots: Vec<SignedRoot>,
}

impl OrderCascade {
    /// Standard positive roots, or `None` if some root is not one.
    pub fn standard_roots(&self) -> Option<Vec<Root>> {
        self.roots.iter().map(SignedRoot::to_root).collect()
    }

    /// As a [`Cascade`] of `sys` (non-simple part computed against `sys`).
    pub fn to_cascade(&self, sys: &RootSystem) -> Option<Cascade> {
        let roots = self.standard_roots()?;
        if roots.iter().any(|r| !sys.contains(r)) {
            return None;
        }
        let nonsimple = roots.iter().filter(|r| !sys.is_simple(r)).copied().collect();
        Some(Cascade { type_label: sys.type_label(), rank: sys.rank(), roots, nonsimple })
    }
}

/// Runs the N_k recursion on the symbols of `order`.
///
/// ```
/// use kcascade::{cascade_from_order, OrderSpec, TypeLabel};
/// let o = OrderSpec::parse("e1>e3>e4>e2").unwrap();
/// let c = cascade_from_order(TypeLabel::A, &o).unwrap();
/// assert_eq!(format!("{:?}", c.roots), "[e1-e2, e3-e4]");
/// ```
pub fn cascade_from_order(t: TypeLabel, order: &OrderSpec) -> Result<OrderCascade, Error> {
    let mut rest = order.positive_half(t)?;
    let mut roots = Vec::new();
    match t {
        TypeLabel::A => {
            while rest.len() >= 2 {
                let i = rest.remove(0);
                let j = rest.pop().unwrap();
                roots.push(SignedRoot::from_terms(&[(i, 1), (j, -1)]));
            }
        }
        TypeLabel::C => {
            for i in rest {
                roots.push(SignedRoot::from_terms(&[(i, 2)]));
            }
        }
        TypeLabel::B | TypeLabel::D => {
            while rest.len() >= 2 {
                let i = rest.remove(0);
                let j = rest.remove(0);
                roots.push(SignedRoot::from_terms(&[(i, 1), (j, 1)]));
            }
        }
    }
    Ok(OrderCascade { type_label: t, roots })
}

/// The sets A(α), B(α), R(α), C(α) attached to a root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSets {
    /// A(α) as displayed (restricted to roots of the system).
    pub a_set: Vec<Root>,
    pub b_set: Vec<Root>,
    /// Row labels, in matrix order.
    pub r_set: Vec<i32>,
    /// Column labels, in matrix order.
    pub c_set: Vec<i32>,
}

/// ```
/// use kcascade::{index_sets, Root, RootSystem, TypeLabel};
/// let d6 = RootSystem::new(TypeLabel::D, 6).unwrap();
/// let s = index_sets(&Root::diff(4, 6), &d6).unwrap();
/// assert_eq!(s.r_set, [1, 2, 3, 4]);
/// assert_eq!(s.c_set, [6, -4, -2, -1]);
/// ```
pub fn index_sets(alpha: &Root, sys: &RootSystem) -> Result<IndexSets, Error> {
    if !sys.contains(alpha) {
        return Err(Error::Domain(format!("{alpha} is not a positive root of {}{}", sys.type_label(), sys.rank())));
    }
    let casc = kostant_cascade(sys);
    let a_set = literal_a_set(alpha, sys);
    let (b_set, mut r_set, mut c_set): (Vec<Root>, Vec<i32>, Vec<i32>) = match sys.type_label() {
        TypeLabel::A | TypeLabel::C => {
            let mut b = vec![*alpha];
            b.extend(casc.roots.iter().filter(|g| g.row() < alpha.row()));
            let r = b.iter().map(|g| g.row() as i32).collect();
            let c = b.iter().map(|g| g.col()).collect();
            (b, r, c)
        }
        TypeLabel::B | TypeLabel::D => {
            if casc.contains(alpha) {
                return Err(Error::Domain(format!("{alpha} lies in the cascade; minors are defined on Φ⁺∖B")));
            }
            let b: Vec<Root> =
                casc.nonsimple.iter().filter(|g| g.row() <= alpha.row()).copied().collect();
            let mut r: Vec<i32> = Vec::new();
            for g in &b {
                r.push(g.row() as i32);
                r.push(-g.col());
            }
            let mut c: Vec<i32> = r.iter().map(|x| -x).collect();
            c.push(alpha.col());
            let i = alpha.row() as i32;
            let drop = if i % 2 == 0 { -i + 1 } else { -i - 1 };
            c.retain(|&x| x != drop);
            (b, r, c)
        }
    };
    for v in [&mut r_set, &mut c_set] {
        sys.sort_labels(v);
        v.dedup();
    }
    if r_set.len() != c_set.len() {
        return Err(Error::Domain(format!(
            "{alpha}: rows {r_set:?} and columns {c_set:?} do not give a square minor"
        )));
    }
    Ok(IndexSets { a_set, b_set, r_set, c_set })
}

fn keep(sys: &RootSystem, v: impl IntoIterator<Item = Option<Root>>) -> Vec<Root> {
    let mut out: Vec<Root> = v.into_iter().flatten().filter(|r| sys.contains(r)).collect();
    out.sort_by_key(|r| sys.index_of(r));
    out.dedup();
    out
}

fn diff(i: u32, j: u32) -> Option<Root> {
    (0 < i && i < j).then(|| Root::diff(i, j))
}

fn sum(i: u32, j: u32) -> Option<Root> {
    (0 < i && 0 < j && i != j).then(|| Root::sum(i, j))
}

/// A(α) exactly as displayed for the type.
pub fn literal_a_set(alpha: &Root, sys: &RootSystem) -> Vec<Root> {
    let (i, j) = (alpha.i, alpha.j());
    let n = sys.rank();
    let row_j = || sys.row_set(j).into_iter().map(Some).collect::<Vec<_>>();
    match (sys.type_label(), alpha.kind) {
        (TypeLabel::A, RootKind::Diff) => {
            let big = n + 1;
            if j < big - i + 1 {
                keep(sys, (j + 1..=big - i + 1).map(|k| diff(j, k)))
            } else if j > big - i + 1 {
                keep(sys, (big - j + 1..i).map(|k| diff(k, i)))
            } else {
                Vec::new()
            }
        }
        (TypeLabel::C, RootKind::Diff) => {
            let mut v: Vec<Option<Root>> = (i..j).map(|k| sum(k, j)).collect();
            v.extend(row_j());
            keep(sys, v)
        }
        (TypeLabel::C, RootKind::Sum) => keep(sys, (i..j).map(|k| diff(k, j))),
        (TypeLabel::B | TypeLabel::D, RootKind::Diff) => {
            let mut v = row_j();
            if i % 2 == 0 {
                v.extend((i + 1..j).map(|k| sum(k, j)));
                v.push(sum(i - 1, j));
                v.push(diff(i - 1, i));
            } else {
                v.extend((i + 1..n).map(|k| sum(k, j)));
            }
            keep(sys, v)
        }
        (TypeLabel::B | TypeLabel::D, RootKind::Sum) => {
            let mut v: Vec<Option<Root>> = (i + 1..j).map(|k| diff(k, j)).collect();
            if i > 1 {
                v.push(diff(i - 1, j));
            }
            if i % 2 == 0 {
                v.push(diff(i - 1, i));
            }
            keep(sys, v)
        }
        (TypeLabel::B, RootKind::Single) => keep(sys, (i + 1..=n).map(|k| Some(Root::single(k)))),
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(t: TypeLabel, n: u32) -> RootSystem {
        RootSystem::new(t, n).unwrap()
    }

    #[test]
    fn counts() {
        for n in 1..=8u32 {
            assert_eq!(sys(TypeLabel::A, n).len() as u32, n * (n + 1) / 2);
            assert_eq!(sys(TypeLabel::B, n).len() as u32, n * n);
            assert_eq!(sys(TypeLabel::C, n).len() as u32, n * n);
            if n >= 2 {
                assert_eq!(sys(TypeLabel::D, n).len() as u32, n * (n - 1));
            }
        }
        assert!(RootSystem::new(TypeLabel::D, 1).is_err());
    }

    #[test]
    fn heights_match_simple_root_expansion() {
        // express every root in simple roots by repeatedly subtracting simple roots
        for t in [TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D] {
            for n in 2..=6 {
                let s = sys(t, n);
                for r in s.positive_roots() {
                    let mut cur = *r;
                    let mut h = 1;
                    while !s.is_simple(&cur) {
                        cur = s.simple_roots().iter().find_map(|a| s.sub(&cur, a)).unwrap();
                        h += 1;
                    }
                    assert_eq!(s.height(r), h, "{t}{n} {r}");
                }
            }
        }
    }

    #[test]
    fn closure_under_addition() {
        for t in [TypeLabel::B, TypeLabel::C, TypeLabel::D] {
            let s = sys(t, 4);
            for a in s.positive_roots() {
                for g in s.positive_roots() {
                    let v: Vec<i32> =
                        s.coords(a).iter().zip(s.coords(g)).map(|(x, y)| x + y).collect();
                    if s.is_root_vector(&v) {
                        assert!(s.root_with_coords(&v).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn row_and_col() {
        assert_eq!(Root::diff(4, 6).row(), 4);
        assert_eq!(Root::diff(4, 6).col(), 6);
        assert_eq!(Root::sum(1, 2).col(), -2);
        assert_eq!(Root::double(3).col(), -3);
        assert_eq!(Root::single(3).col(), 0);
    }

    #[test]
    fn root_syntax() {
        for s in ["e1-e2", "e3+e4", "2e5", "e7"] {
            assert_eq!(s.parse::<Root>().unwrap().to_string(), s);
        }
        assert_eq!("e4+e2".parse::<Root>().unwrap(), Root::sum(2, 4));
        for s in ["e2-e1", "e0", "x1", "e1+e1", "3e1"] {
            assert!(s.parse::<Root>().is_err(), "{s}");
        }
    }

    #[test]
    fn simple_roots_d4() {
        let s = sys(TypeLabel::D, 4);
        assert_eq!(format!("{:?}", s.simple_roots()), "[e1-e2, e2-e3, e3-e4, e3+e4]");
    }

    #[test]
    fn cascade_a4_nonsimple() {
        let c = kostant_cascade(&sys(TypeLabel::A, 4));
        assert_eq!(c.roots, [Root::diff(1, 5), Root::diff(2, 4)]);
        assert_eq!(c.nonsimple, c.roots);
        // sl_4: the middle root ε2−ε3 is simple
        let c = kostant_cascade(&sys(TypeLabel::A, 3));
        assert_eq!(c.nonsimple, [Root::diff(1, 4)]);
    }

    #[test]
    fn strong_orthogonality_all_types() {
        for t in [TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D] {
            for n in 1..=8 {
                let Ok(s) = RootSystem::new(t, n) else { continue };
                let c = kostant_cascade(&s);
                assert!(is_strongly_orthogonal(&c.roots, &s), "{t}{n}");
            }
        }
    }

    #[test]
    fn order_validation() {
        let bad = OrderSpec::parse("e1>-e1>0").unwrap();
        assert!(cascade_from_order(TypeLabel::B, &bad).is_err());
        let asym = OrderSpec::parse("e1>e2>0>-e1>-e2").unwrap();
        assert!(cascade_from_order(TypeLabel::C, &asym).is_err());
        let dmin = OrderSpec::parse("e1>-e2>0").unwrap();
        assert!(cascade_from_order(TypeLabel::D, &dmin).is_err());
        assert!(cascade_from_order(TypeLabel::B, &dmin).is_ok());
        assert!(cascade_from_order(TypeLabel::A, &OrderSpec(vec![1, -2])).is_err());
        // type D orders carry no 0
        let d = OrderSpec::parse("e1>e2>-e2>-e1").unwrap();
        assert_eq!(format!("{:?}", cascade_from_order(TypeLabel::D, &d).unwrap().roots), "[e1+e2]");
    }

    #[test]
    fn order_with_signs_gives_signed_roots() {
        let o = OrderSpec::parse("e2>-e1>e3>0").unwrap();
        let c = cascade_from_order(TypeLabel::B, &o).unwrap();
        assert_eq!(format!("{:?}", c.roots), "[-e1+e2]");
        assert_eq!(c.standard_roots(), None);
    }

    #[test]
    fn index_sets_examples() {
        let a7 = sys(TypeLabel::A, 7);
        let s = index_sets(&Root::diff(3, 4), &a7).unwrap();
        assert_eq!(s.r_set, [1, 2, 3]);
        assert_eq!(s.c_set, [4, 7, 8]);

        let d5 = sys(TypeLabel::D, 5);
        let s = index_sets(&Root::sum(1, 3), &d5).unwrap();
        assert_eq!(s.b_set, [Root::sum(1, 2)]);
        assert_eq!(s.r_set, [1, 2]);
        assert_eq!(s.c_set, [-3, -1]);

        let d4 = sys(TypeLabel::D, 4);
        assert!(index_sets(&Root::sum(1, 2), &d4).is_err());
    }

    #[test]
    fn square_minors_on_domain() {
        for (t, n) in [(TypeLabel::B, 3), (TypeLabel::B, 5), (TypeLabel::D, 4), (TypeLabel::D, 7)] {
            let s = sys(t, n);
            let c = kostant_cascade(&s);
            for a in s.positive_roots().iter().filter(|a| !c.contains(a)) {
                let x = index_sets(a, &s).unwrap();
                assert_eq!(x.r_set.len(), x.c_set.len());
            }
        }
    }
}
