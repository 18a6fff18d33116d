//! Exact elements of the field ℚ(√2).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// `a + b·√2` with `a`, `b` rational.
///
/// ```
/// use kcascade::Scalar;
/// let r2 = Scalar::sqrt2();
/// assert_eq!(&r2 * &r2, Scalar::from(2));
/// assert_eq!(Scalar::from(3).inv().unwrap(), Scalar::ratio(1, 3));
/// ```
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Scalar { a, b }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from(1)
    }

    pub fn sqrt2() -> Self {
        Scalar { a: BigRational::zero(), b: BigRational::one() }
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn rational(a: BigRational) -> Self {
        Scalar { a, b: BigRational::zero() }
    }

    /// Rational part.
    pub fn a(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of √2.
    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `Some(q)` when the value is the rational `q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    /// Galois conjugate `a − b√2`.
    pub fn conj(&self) -> Self {
        Scalar { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a² − 2b²`; zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Scalar { a: c.a / &n, b: c.b / n })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Parses `"p/q"`, `"p"`, `"p/q+r/s*sqrt2"` or `"r/s*sqrt2"`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("scalar `{s}`"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let (ra, rb) = match t.find("sqrt2") {
            None => (t.as_str(), None),
            Some(pos) => {
                let head = &t[..pos];
                let head = head.strip_suffix('*').unwrap_or(head);
                // split the √2 coefficient off the rational part at the last sign
                let split = head
                    .char_indices()
                    .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
                    .map(|(i, _)| i)
                    .next_back();
                match split {
                    Some(i) => (&head[..i], Some(&head[i..])),
                    None => ("0", Some(head)),
                }
            }
        };
        let q = |x: &str| -> Result<BigRational, Error> {
            let x = x.strip_prefix('+').unwrap_or(x);
            match x {
                "" => Ok(BigRational::one()),
                "-" => Ok(-BigRational::one()),
                _ => x.parse::<BigRational>().map_err(|_| bad()),
            }
        };
        let a = q(ra)?;
        let b = match rb {
            Some(x) => q(x)?,
            None => BigRational::zero(),
        };
        Ok(Scalar { a, b })
    }
}

fn fmt_q(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_q(&self.a)),
            (true, false) => write!(f, "{}*sqrt2", fmt_q(&self.b)),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}*sqrt2", fmt_q(&self.a), sign, fmt_q(&self.b.abs()))
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::rational(BigRational::from_integer(v.into()))
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::rational(v)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}

binop!(Add, add, |x, y| Scalar { a: &x.a + &y.a, b: &x.b + &y.b });
binop!(Sub, sub, |x, y| Scalar { a: &x.a - &y.a, b: &x.b - &y.b });
binop!(Mul, mul, |x, y| {
    if x.b.is_zero() && y.b.is_zero() {
        return Scalar::rational(&x.a * &y.a);
    }
    let two = BigRational::from_integer(2.into());
    Scalar { a: &x.a * &y.a + two * &x.b * &y.b, b: &x.a * &y.b + &x.b * &y.a }
});
binop!(Div, div, |x, y| x * &y.inv().expect("division by zero scalar"));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.a += &o.a;
        if !o.b.is_zero() {
            self.b += &o.b;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.a -= &o.a;
        if !o.b.is_zero() {
            self.b -= &o.b;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a, b: -self.b }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    a: String,
    b: String,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Repr { a: fmt_q(&self.a), b: fmt_q(&self.b) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Either {
            Pair(Repr),
            Text(String),
        }
        match Either::deserialize(d)? {
            Either::Pair(r) => {
                let a = r.a.parse().map_err(D::Error::custom)?;
                let b = r.b.parse().map_err(D::Error::custom)?;
                Ok(Scalar { a, b })
            }
            Either::Text(t) => Scalar::parse(&t).map_err(D::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(Scalar::sqrt2().pow(2), Scalar::from(2));
        assert!(Scalar::sqrt2().pow(3).as_rational().is_none());
    }

    #[test]
    fn inverse_of_irrational() {
        let x = Scalar::parse("1+1*sqrt2").unwrap();
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Scalar::one());
        assert_eq!(y, Scalar::parse("-1+sqrt2").unwrap());
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "-3/4", "7", "1/2*sqrt2", "-2-3/5*sqrt2", "5+sqrt2"] {
            let x = Scalar::parse(s).unwrap();
            assert_eq!(Scalar::parse(&x.to_string()).unwrap(), x, "{s}");
        }
        assert_eq!(Scalar::parse("6/4").unwrap().to_string(), "3/2");
        assert!(Scalar::parse("x").is_err());
    }

    #[test]
    fn json_is_reduced_pair() {
        let x = Scalar::parse("-2/4+3*sqrt2").unwrap();
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, r#"{"a":"-1/2","b":"3"}"#);
        let back: Scalar = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
        let text: Scalar = serde_json::from_str("\"2/3\"").unwrap();
        assert_eq!(text, Scalar::ratio(2, 3));
    }
}
