//! Kostant forms `f_ξ = Σ ξ(β) e*_β` and the scalars `c_β` of the ideals
//! `J_c = ⟨P_β − c_β⟩`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::central::canonical_generator;
use crate::rootsys::{kostant_cascade, Root, RootKind, RootSystem, TypeLabel};
use crate::{Error, Scalar};

fn parse_map(v: &Value) -> Result<BTreeMap<Root, Scalar>, Error> {
    let bad = || Error::Parse(format!("scalar map {v}"));
    let mut out = BTreeMap::new();
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let s: Scalar = serde_json::from_value(x.clone()).map_err(|_| bad())?;
                out.insert(k.parse::<Root>()?, s);
            }
        }
        Value::Array(a) => {
            for pair in a {
                let (r, s): (Value, Scalar) = serde_json::from_value(pair.clone()).map_err(|_| bad())?;
                let r = match r {
                    Value::String(t) => t.parse::<Root>()?,
                    other => serde_json::from_value(other).map_err(|_| bad())?,
                };
                out.insert(r, s);
            }
        }
        _ => return Err(bad()),
    }
    Ok(out)
}

fn pairs(m: &BTreeMap<Root, Scalar>) -> Vec<(Root, Scalar)> {
    m.iter().map(|(r, s)| (*r, s.clone())).collect()
}

/// `ξ: B → ℚ(√2)`, nonzero on `B∖Δ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KostantForm {
    pub xi: BTreeMap<Root, Scalar>,
}

/// The scalars `c_β` attached to the canonical generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScalarAssignment {
    pub c: BTreeMap<Root, Scalar>,
}

macro_rules! assignment_impls {
    ($t:ident, $f:ident) => {
        impl $t {
            pub fn new(m: BTreeMap<Root, Scalar>) -> Self {
                $t { $f: m }
            }

            pub fn get(&self, r: &Root) -> Scalar {
                self.$f.get(r).cloned().unwrap_or_default()
            }

            /// Accepts `{"e1+e2":"2",…}` or `[[Root, Scalar],…]`.
            pub fn from_json(v: &Value) -> Result<Self, Error> {
                Ok($t { $f: parse_map(v)? })
            }
        }

        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                pairs(&self.$f).serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let v = Value::deserialize(d)?;
                $t::from_json(&v).map_err(serde::de::Error::custom)
            }
        }
    };
}

assignment_impls!(KostantForm, xi);
assignment_impls!(ScalarAssignment, c);

impl KostantForm {
    /// Checks support on the cascade and nonvanishing on `B∖Δ`.
    pub fn validate(&self, sys: &RootSystem) -> Result<(), Error> {
        let casc = kostant_cascade(sys);
        if let Some(r) = self.xi.keys().find(|r| !casc.contains(r)) {
            return Err(Error::Domain(format!("{r} is not a cascade root")));
        }
        if let Some(b) = casc.nonsimple.iter().find(|b| self.get(b).is_zero()) {
            return Err(Error::Inadmissible(format!("ξ({b}) = 0 on B∖Δ")));
        }
        Ok(())
    }

    /// `f_ξ(e_α)`: `ξ(α)` on the cascade, 0 elsewhere.
    pub fn value(&self, a: &Root) -> Scalar {
        self.get(a)
    }
}

impl ScalarAssignment {
    /// Nonzero on `B∖Δ`.
    pub fn validate(&self, sys: &RootSystem) -> Result<(), Error> {
        let casc = kostant_cascade(sys);
        if let Some(r) = self.c.keys().find(|r| !casc.contains(r)) {
            return Err(Error::Domain(format!("{r} is not a cascade root")));
        }
        if let Some(b) = casc.nonsimple.iter().find(|b| self.get(b).is_zero()) {
            return Err(Error::Inadmissible(format!("c({b}) = 0 on B∖Δ")));
        }
        Ok(())
    }
}

/// `c_β = ξ_β(f_ξ)`.
///
/// ```
/// use kcascade::{c_from_xi, KostantForm, Root, RootSystem, Scalar, TypeLabel};
/// let d4 = RootSystem::new(TypeLabel::D, 4).unwrap();
/// let f = KostantForm::new([(Root::sum(1, 2), 2), (Root::sum(3, 4), 5), (Root::diff(1, 2), 1), (Root::diff(3, 4), 1)]
///     .into_iter().map(|(r, v)| (r, Scalar::from(v))).collect());
/// let c = c_from_xi(&f, &d4).unwrap();
/// assert_eq!(c.get(&Root::sum(3, 4)), Scalar::from(10));
/// ```
pub fn c_from_xi(f: &KostantForm, sys: &RootSystem) -> Result<ScalarAssignment, Error> {
    f.validate(sys)?;
    let mut c = BTreeMap::new();
    for b in kostant_cascade(sys).roots {
        let xi = canonical_generator(&b, sys)?;
        c.insert(b, xi.eval(|r| f.value(r)));
    }
    Ok(ScalarAssignment { c })
}

fn div(num: &Scalar, den: &Scalar, what: &Root) -> Result<Scalar, Error> {
    if den.is_zero() {
        return Err(Error::Inadmissible(format!("division by zero reconstructing ξ({what})")));
    }
    Ok(num / den)
}

/// Reconstructs `ξ` from the scalars `c_β`.
///
/// ```
/// use kcascade::{xi_from_c, Root, RootSystem, Scalar, ScalarAssignment, TypeLabel};
/// let d4 = RootSystem::new(TypeLabel::D, 4).unwrap();
/// let c = ScalarAssignment::new([(Root::sum(1, 2), 2), (Root::diff(1, 2), 6), (Root::sum(3, 4), 4), (Root::diff(3, 4), 4)]
///     .into_iter().map(|(r, v)| (r, Scalar::from(v))).collect());
/// let xi = xi_from_c(&c, &d4).unwrap();
/// assert_eq!(xi.get(&Root::diff(1, 2)), Scalar::from(3));
/// ```
pub fn xi_from_c(c: &ScalarAssignment, sys: &RootSystem) -> Result<KostantForm, Error> {
    let casc = kostant_cascade(sys);
    if let Some(r) = c.c.keys().find(|r| !casc.contains(r)) {
        return Err(Error::Domain(format!("{r} is not a cascade root")));
    }
    let n = sys.rank();
    let mut xi = BTreeMap::new();
    match sys.type_label() {
        TypeLabel::A | TypeLabel::C => {
            let two = if sys.type_label() == TypeLabel::C { 2 } else { 1 };
            let mut prev = Scalar::one();
            for (k, b) in casc.roots.iter().enumerate() {
                let ck = c.get(b);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                xi.insert(*b, div(&(&ck * &Scalar::from(sign)), &(&prev * &Scalar::from(two)), b)?);
                prev = ck;
            }
        }
        TypeLabel::B | TypeLabel::D => {
            let sum_c = |k: u32| if k == 0 { Scalar::one() } else { c.get(&Root::sum(2 * k - 1, 2 * k)) };
            for b in &casc.roots {
                let v = match b.kind {
                    RootKind::Sum => {
                        let k = b.j() / 2;
                        div(&c.get(b), &sum_c(k - 1), b)?
                    }
                    RootKind::Diff if sys.type_label() == TypeLabel::D && n.is_multiple_of(2) && b.i == n - 1 => {
                        div(&c.get(b), &sum_c(n / 2 - 1), b)?
                    }
                    RootKind::Diff => {
                        let k = b.j() / 2;
                        div(&c.get(b), &(&sum_c(k) * &sum_c(k - 1)), b)?
                    }
                    RootKind::Single => div(&c.get(b), &sum_c((n - 1) / 2), b)?,
                    RootKind::Double => unreachable!(),
                };
                xi.insert(*b, v);
            }
        }
    }
    Ok(KostantForm { xi })
}
