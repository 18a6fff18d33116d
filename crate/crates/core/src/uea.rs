//! The enveloping algebra of a finite-dimensional graded Lie algebra in PBW
//! normal form.
//!
//! A PBW monomial is a nondecreasing [`Word`] of generator indices; the
//! generator order is the total order of the table (for `n`, the root order of
//! [`RootSystem`]). Products are normalized by the rewriting rule
//! `e_b e_a → e_a e_b + [e_b, e_a]` for `b > a`.
//!
//! Brackets may also produce the unit, which lets the same engine run
//! quotients such as a Heisenberg algebra with its center set to a scalar.

use std::collections::HashMap;
use std::fmt;

use serde_json::{json, Value};

use crate::liealg::structure_constants;
use crate::poly::CommutingPoly;
use crate::rootsys::{Root, RootSystem, Weight};
use crate::{Error, Scalar};

/// Nondecreasing sequence of generator indices.
pub type Word = Vec<u16>;

type Terms = HashMap<Word, Scalar>;

/// `[x_a, x_b] = Σ k·x_h`, `h = None` standing for the unit.
pub type Bracket = Vec<(Option<u16>, Scalar)>;

/// Generators, their weights and the bracket table.
#[derive(Clone, Debug)]
pub struct LieTable {
    names: Vec<String>,
    json: Vec<Value>,
    weights: Vec<Vec<i32>>,
    bracket: Vec<Vec<Bracket>>,
}

impl LieTable {
    /// `bracket(a, b)` is queried for every ordered pair.
    pub fn new(
        names: Vec<String>,
        json: Vec<Value>,
        weights: Vec<Vec<i32>>,
        mut bracket: impl FnMut(usize, usize) -> Bracket,
    ) -> LieTable {
        let k = names.len();
        assert!(k < u16::MAX as usize);
        assert_eq!(json.len(), k);
        assert_eq!(weights.len(), k);
        let bracket = (0..k)
            .map(|a| (0..k).map(|b| bracket(a, b).into_iter().filter(|(_, c)| !c.is_zero()).collect()).collect())
            .collect();
        LieTable { names, json, weights, bracket }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, k: usize) -> &str {
        &self.names[k]
    }

    pub fn bracket(&self, a: usize, b: usize) -> &Bracket {
        &self.bracket[a][b]
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.bracket[a][b].is_empty()
    }

    pub fn weight(&self, k: usize) -> &[i32] {
        &self.weights[k]
    }
}

/// An element of the enveloping algebra: PBW words with nonzero coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Element {
    terms: Terms,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn scalar(c: Scalar) -> Element {
        let mut e = Element::zero();
        e.add_term(Vec::new(), c);
        e
    }

    pub fn one() -> Element {
        Element::scalar(Scalar::one())
    }

    pub fn word(w: Word, c: Scalar) -> Element {
        debug_assert!(w.windows(2).all(|p| p[0] <= p[1]));
        let mut e = Element::zero();
        e.add_term(w, c);
        e
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

    pub fn coeff(&self, w: &[u16]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Terms sorted by (degree, word).
    pub fn terms(&self) -> Vec<(&Word, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        v
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        add_into(&mut self.terms, w, &c);
    }

    pub fn add(&self, o: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            add_into(&mut out.terms, w.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            add_into(&mut out.terms, w.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> Element {
        if k.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    /// The `k` with `self = k·o`, if one exists (`o` nonzero).
    pub fn ratio_to(&self, o: &Element) -> Option<Scalar> {
        let (w, c) = o.terms().into_iter().next_back()?;
        let k = self.coeff(w) / c;
        (o.scale(&k) == *self).then_some(k)
    }

    /// Every coefficient lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(Scalar::is_rational)
    }
}

fn add_into(t: &mut Terms, w: Word, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match t.entry(w) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.terms().iter().map(|(w, c)| format!("{c}*{w:?}")).collect();
        write!(f, "{}", if v.is_empty() { "0".to_string() } else { v.join(" + ") })
    }
}

/// Memoized normal-form multiplication for one batch of work.
struct Session<'a> {
    t: &'a LieTable,
    memo: HashMap<(Word, u16), Terms>,
}

impl<'a> Session<'a> {
    fn new(t: &'a LieTable) -> Self {
        Session { t, memo: HashMap::new() }
    }

    /// `w · x_g` in normal form.
    fn mul_gen(&mut self, w: &[u16], g: u16) -> Terms {
        if w.last().is_none_or(|&l| l <= g) {
            let mut v = w.to_vec();
            v.push(g);
            return HashMap::from([(v, Scalar::one())]);
        }
        if let Some(r) = self.memo.get(&(w.to_vec(), g)) {
            return r.clone();
        }
        let (u, a) = (&w[..w.len() - 1], w[w.len() - 1]);
        // u·a·g = (u·g)·a + u·[a, g]. Full-length terms are sorted insertions and
        // every bracket term loses a letter, so the recursion is well founded.
        let mut out = Terms::new();
        for (w2, c) in self.mul_gen(u, g) {
            for (w3, c2) in self.mul_gen(&w2, a) {
                add_into(&mut out, w3, &(&c * &c2));
            }
        }
        for (h, k) in self.t.bracket[a as usize][g as usize].clone() {
            match h {
                Some(h) => {
                    for (w2, c) in self.mul_gen(u, h) {
                        add_into(&mut out, w2, &(&c * &k));
                    }
                }
                None => add_into(&mut out, u.to_vec(), &k),
            }
        }
        self.memo.insert((w.to_vec(), g), out.clone());
        out
    }

    fn mul_words(&mut self, x: &[u16], y: &[u16]) -> Terms {
        let mut cur: Terms = HashMap::from([(x.to_vec(), Scalar::one())]);
        for &g in y {
            let mut next = Terms::new();
            for (w, c) in cur {
                for (w2, c2) in self.mul_gen(&w, g) {
                    add_into(&mut next, w2, &(&c * &c2));
                }
            }
            cur = next;
        }
        cur
    }

    fn mul(&mut self, x: &Element, y: &Element) -> Element {
        let mut out = Terms::new();
        for (wx, cx) in &x.terms {
            for (wy, cy) in &y.terms {
                let k = cx * cy;
                for (w, c) in self.mul_words(wx, wy) {
                    add_into(&mut out, w, &(&c * &k));
                }
            }
        }
        Element { terms: out }
    }

    /// Average of all orderings of the multiset `m` (sorted).
    fn sym(&mut self, m: &[u16], cache: &mut HashMap<Word, Element>) -> Element {
        if m.len() <= 1 {
            return Element::word(m.to_vec(), Scalar::one());
        }
        // factors commuting with the whole multiset factor out of the average
        let (free, rest): (Vec<u16>, Vec<u16>) = m.iter().partition(|&&a| {
            m.iter().all(|&b| self.t.commute(a as usize, b as usize))
        });
        if !free.is_empty() {
            let inner = self.sym_block(&rest, cache);
            return self.mul(&Element::word(free, Scalar::one()), &inner);
        }
        self.sym_block(m, cache)
    }

    fn sym_block(&mut self, m: &[u16], cache: &mut HashMap<Word, Element>) -> Element {
        if m.len() <= 1 {
            return Element::word(m.to_vec(), Scalar::one());
        }
        if let Some(e) = cache.get(m) {
            return e.clone();
        }
        // σ(M) = (1/|M|) Σ_{distinct a} mult(a) · x_a · σ(M − a)
        let mut acc = Element::zero();
        let mut k = 0;
        while k < m.len() {
            let a = m[k];
            let mult = m[k..].iter().take_while(|&&b| b == a).count();
            let mut sub = m.to_vec();
            sub.remove(k);
            let tail = self.sym_block(&sub, cache);
            let prod = self.mul(&Element::word(vec![a], Scalar::one()), &tail);
            acc = acc.add(&prod.scale(&Scalar::from(mult as i64)));
            k += mult;
        }
        let out = acc.scale(&Scalar::ratio(1, m.len() as i64));
        cache.insert(m.to_vec(), out.clone());
        out
    }
}

/// An enveloping algebra: a [`LieTable`] plus, for `U(n)`, its root system.
#[derive(Clone, Debug)]
pub struct Uea {
    table: LieTable,
    sys: Option<RootSystem>,
}

impl Uea {
    /// `U(n)` for the positive part of `sys`, with brackets read off the
    /// matrix realization.
    pub fn new(sys: &RootSystem) -> Uea {
        let sc = structure_constants(sys).expect("matrix realization closes under brackets");
        let roots = sys.positive_roots().to_vec();
        let table = LieTable::new(
            roots.iter().map(|r| format!("e({r})")).collect(),
            roots.iter().map(|r| serde_json::to_value(r).unwrap()).collect(),
            roots.iter().map(|r| sys.coords(r)).collect(),
            |a, b| {
                let k = sc.get(&roots[a], &roots[b]);
                if k.is_zero() {
                    return Vec::new();
                }
                let s = sys.add(&roots[a], &roots[b]).unwrap();
                vec![(Some(sys.index_of(&s).unwrap() as u16), k)]
            },
        );
        Uea { table, sys: Some(sys.clone()) }
    }

    pub fn from_table(table: LieTable) -> Uea {
        Uea { table, sys: None }
    }

    pub fn table(&self) -> &LieTable {
        &self.table
    }

    pub fn system(&self) -> Option<&RootSystem> {
        self.sys.as_ref()
    }

    pub fn gen(&self, k: usize) -> Element {
        Element::word(vec![k as u16], Scalar::one())
    }

    /// The root vector `e_α`.
    pub fn root(&self, a: &Root) -> Element {
        let sys = self.sys.as_ref().expect("root-labelled algebra");
        self.gen(sys.index_of(a).unwrap_or_else(|| panic!("{a} is not a positive root")))
    }

    /// Product in normal form.
    ///
    /// ```
    /// use kcascade::{Root, RootSystem, TypeLabel, Uea};
    /// let a2 = RootSystem::new(TypeLabel::A, 2).unwrap();
    /// let u = Uea::new(&a2);
    /// let (x, y, z) = (u.root(&Root::diff(1, 2)), u.root(&Root::diff(2, 3)), u.root(&Root::diff(1, 3)));
    /// assert_eq!(u.multiply(&y, &x), u.multiply(&x, &y).sub(&z));
    /// ```
    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        Session::new(&self.table).mul(x, y)
    }

    /// Left-to-right product of a list.
    pub fn product(&self, xs: &[Element]) -> Element {
        let mut s = Session::new(&self.table);
        xs.iter().fold(Element::one(), |acc, x| s.mul(&acc, x))
    }

    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        let mut s = Session::new(&self.table);
        s.mul(x, y).sub(&s.mul(y, x))
    }

    /// Symmetrization of a polynomial in commuting root variables.
    pub fn symmetrize(&self, p: &CommutingPoly) -> Element {
        let sys = self.sys.as_ref().expect("root-labelled algebra");
        let mut s = Session::new(&self.table);
        let mut cache = HashMap::new();
        let mut out = Element::zero();
        for (mono, c) in p.terms() {
            let mut w: Word = mono
                .iter()
                .map(|r| sys.index_of(r).unwrap_or_else(|| panic!("{r} not in system")) as u16)
                .collect();
            w.sort_unstable();
            out = out.add(&s.sym(&w, &mut cache).scale(c));
        }
        out
    }

    /// Symmetrization of a single multiset of generators.
    pub fn symmetrize_word(&self, w: &[u16]) -> Element {
        let mut w = w.to_vec();
        w.sort_unstable();
        Session::new(&self.table).sym(&w, &mut HashMap::new())
    }

    /// The principal symbol read back as a commuting polynomial (top degree only).
    pub fn principal_symbol(&self, x: &Element) -> CommutingPoly {
        let sys = self.sys.as_ref().expect("root-labelled algebra");
        let d = x.degree();
        let mut p = CommutingPoly::zero();
        for (w, c) in x.terms() {
            if w.len() == d {
                let mono: Vec<Root> = w.iter().map(|&k| sys.root(k as usize)).collect();
                p = p.add(&CommutingPoly::monomial(mono, c.clone()));
            }
        }
        p
    }

    /// Common weight of all terms.
    pub fn weight(&self, x: &Element) -> Result<Weight, Error> {
        let dim = self.table.weights.first().map_or(0, Vec::len);
        let mut found: Option<Weight> = None;
        for (w, _) in x.terms() {
            let mut acc = Weight::zero(dim);
            for &g in w {
                acc.add_scaled(&self.table.weights[g as usize], 1);
            }
            match &found {
                None => found = Some(acc),
                Some(f) if *f != acc => {
                    return Err(Error::Domain("element is not weight-homogeneous".into()));
                }
                _ => {}
            }
        }
        found.ok_or_else(|| Error::Domain("zero element has no weight".into()))
    }

    /// Commutes with every simple root vector (for `U(n)`), or with every
    /// generator (other tables).
    pub fn is_central(&self, z: &Element) -> bool {
        let gens: Vec<usize> = match &self.sys {
            Some(sys) => sys.simple_roots().iter().map(|r| sys.index_of(r).unwrap()).collect(),
            None => (0..self.table.len()).collect(),
        };
        let mut s = Session::new(&self.table);
        gens.into_iter().all(|g| {
            let e = self.gen(g);
            s.mul(z, &e) == s.mul(&e, z)
        })
    }

    /// Human-readable form, terms sorted by degree then word.
    pub fn render(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in x.terms().into_iter().enumerate() {
            let neg = c.is_rational() && c.a() < &num::BigRational::from_integer(0.into());
            let mag = if neg { -c.clone() } else { c.clone() };
            if k > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || w.is_empty() {
                parts.push(if mag.is_rational() { mag.to_string() } else { format!("({mag})") });
            }
            let mut i = 0;
            while i < w.len() {
                let e = w[i..].iter().take_while(|&&b| b == w[i]).count();
                let name = self.table.name(w[i] as usize);
                parts.push(if e > 1 { format!("{name}^{e}") } else { name.to_string() });
                i += e;
            }
            out.push_str(&parts.join("*"));
        }
        out
    }

    /// `[{"mono":[[gen, exp],…],"coeff":Scalar},…]`.
    pub fn to_json(&self, x: &Element) -> Value {
        let v: Vec<Value> = x
            .terms()
            .into_iter()
            .map(|(w, c)| {
                let mut mono = Vec::new();
                let mut i = 0;
                while i < w.len() {
                    let e = w[i..].iter().take_while(|&&b| b == w[i]).count();
                    mono.push(json!([self.table.json[w[i] as usize], e]));
                    i += e;
                }
                json!({"mono": mono, "coeff": c})
            })
            .collect();
        Value::Array(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::TypeLabel;

    fn u(t: TypeLabel, n: u32) -> (RootSystem, Uea) {
        let s = RootSystem::new(t, n).unwrap();
        let u = Uea::new(&s);
        (s, u)
    }

    #[test]
    fn identity_and_disjoint_roots() {
        let (_, d4) = u(TypeLabel::D, 4);
        let x = d4.root(&Root::diff(1, 2));
        let y = d4.root(&Root::diff(3, 4));
        assert_eq!(d4.multiply(&Element::one(), &x), x);
        let xy = d4.multiply(&x, &y);
        assert_eq!(xy.len(), 1);
        assert_eq!(d4.multiply(&y, &x), xy);
    }

    #[test]
    fn commutators_of_root_vectors() {
        let (_, b2) = u(TypeLabel::B, 2);
        let c = b2.commutator(&b2.root(&Root::single(1)), &b2.root(&Root::single(2)));
        assert_eq!(c, b2.root(&Root::sum(1, 2)).scale(&Scalar::from(-2)));
        let (_, d4) = u(TypeLabel::D, 4);
        let c = d4.commutator(&d4.root(&Root::diff(1, 3)), &d4.root(&Root::sum(2, 3)));
        assert_eq!(c, d4.root(&Root::sum(1, 2)).scale(&Scalar::from(-1)));
        let x = d4.root(&Root::diff(2, 3));
        assert!(d4.commutator(&x, &x).is_zero());
    }

    #[test]
    fn centrality_of_simple_cases() {
        let (_, d5) = u(TypeLabel::D, 5);
        assert!(d5.is_central(&d5.root(&Root::sum(1, 2))));
        let (_, a3) = u(TypeLabel::A, 3);
        assert!(!a3.is_central(&a3.root(&Root::diff(2, 3))));
    }

    #[test]
    fn symmetrize_degree_two() {
        let (_, a2) = u(TypeLabel::A, 2);
        let (x, y) = (Root::diff(1, 2), Root::diff(2, 3));
        let p = CommutingPoly::monomial(vec![x, y], Scalar::one());
        let got = a2.symmetrize(&p);
        let (ex, ey) = (a2.root(&x), a2.root(&y));
        let want = a2.multiply(&ex, &ey).add(&a2.multiply(&ey, &ex)).scale(&Scalar::ratio(1, 2));
        assert_eq!(got, want);
    }

    #[test]
    fn symmetrize_matches_brute_force_average() {
        let (s, b3) = u(TypeLabel::B, 3);
        let idx = |r: Root| s.index_of(&r).unwrap() as u16;
        let w = [idx(Root::single(1)), idx(Root::single(1)), idx(Root::single(2)), idx(Root::diff(2, 3))];
        let mut perms = Vec::new();
        permute(&w, &mut vec![], &mut vec![false; w.len()], &mut perms);
        let mut acc = Element::zero();
        for p in &perms {
            let xs: Vec<Element> = p.iter().map(|&g| b3.gen(g as usize)).collect();
            acc = acc.add(&b3.product(&xs));
        }
        let brute = acc.scale(&Scalar::ratio(1, perms.len() as i64));
        assert_eq!(b3.symmetrize_word(&w), brute);
    }

    fn permute(w: &[u16], cur: &mut Vec<u16>, used: &mut Vec<bool>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == w.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..w.len() {
            if !used[k] {
                used[k] = true;
                cur.push(w[k]);
                permute(w, cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }

    #[test]
    fn weights_add() {
        let (_, d4) = u(TypeLabel::D, 4);
        let x = d4.root(&Root::sum(1, 2));
        assert_eq!(d4.weight(&x).unwrap(), Weight(vec![1, 1, 0, 0]));
        let y = d4.multiply(&d4.root(&Root::diff(3, 4)), &d4.root(&Root::diff(1, 3)));
        assert_eq!(d4.weight(&y).unwrap(), Weight(vec![1, 0, 0, -1]));
        assert!(d4.weight(&x.add(&d4.root(&Root::diff(1, 2)))).is_err());
    }

    #[test]
    fn unit_brackets() {
        // Heisenberg algebra [p, q] = 1
        let t = LieTable::new(
            vec!["p".into(), "q".into()],
            vec![json!("p"), json!("q")],
            vec![vec![], vec![]],
            |a, b| match (a, b) {
                (0, 1) => vec![(None, Scalar::one())],
                (1, 0) => vec![(None, -Scalar::one())],
                _ => vec![],
            },
        );
        let h = Uea::from_table(t);
        let (p, q) = (h.gen(0), h.gen(1));
        assert_eq!(h.commutator(&p, &q), Element::one());
        // q p² = p² q − 2p
        let pp = h.multiply(&p, &p);
        assert_eq!(h.multiply(&q, &pp), h.multiply(&pp, &q).sub(&p.scale(&Scalar::from(2))));
    }

    #[test]
    fn render_and_json() {
        let (_, a2) = u(TypeLabel::A, 2);
        let x = a2.multiply(&a2.root(&Root::diff(2, 3)), &a2.root(&Root::diff(1, 2)));
        assert_eq!(a2.render(&x), "-e(e1-e3) + e(e1-e2)*e(e2-e3)");
        let j = a2.to_json(&x).to_string();
        assert!(j.starts_with(r#"[{"coeff":{"a":"-1","b":"0"},"mono":[[{"i":1,"j":3,"kind":"diff"},1]]}"#), "{j}");
    }
}
