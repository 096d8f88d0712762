//! Exact scalars over a prime field 𝔽_p or the rationals ℚ.
//!
//! A [`Field`] is a small descriptor; a [`Scalar`] carries enough of it
//! (the modulus, or the fact that it is rational) to do arithmetic on its
//! own. Mixing scalars from different fields is a logic error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted for 𝔽_p. Products of two residues fit in a u128.
pub const MAX_PRIME: u64 = u32::MAX as u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Field {
    #[serde(rename = "Fp")]
    Fp { p: u64 },
    #[serde(rename = "Q")]
    Q,
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p > MAX_PRIME {
            return Err(Error::InvalidField(format!("{p} exceeds the largest supported modulus")));
        }
        Ok(Field::Fp { p })
    }

    pub fn rationals() -> Field {
        Field::Q
    }

    /// The modulus for a prime field, `None` for ℚ.
    pub fn characteristic(&self) -> Option<u64> {
        match *self {
            Field::Fp { p } => Some(p),
            Field::Q => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Field::Fp { p } => Scalar::Fp {
                value: v.rem_euclid(p as i64) as u64,
                p,
            },
            Field::Q => Scalar::Q(Box::new(BigRational::from_integer(BigInt::from(v)))),
        }
    }

    /// Interprets `num/den` in this field. Fails when `den` vanishes.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::InvalidScalar("zero denominator".into()));
        }
        match *self {
            Field::Fp { p } => {
                let pb = BigInt::from(p);
                let n = num.mod_floor(&pb).to_u64().unwrap();
                let d = den.mod_floor(&pb).to_u64().unwrap();
                if d == 0 {
                    return Err(Error::InvalidScalar(format!(
                        "denominator {den} vanishes modulo {p}"
                    )));
                }
                let s = Scalar::Fp { value: n, p };
                Ok(&s * &Scalar::Fp { value: d, p }.inverse())
            }
            Field::Q => Ok(Scalar::Q(Box::new(BigRational::new(num.clone(), den.clone())))),
        }
    }

    /// Parses a decimal integer or a `num/den` string.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::InvalidScalar(format!("cannot parse scalar {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        self.from_ratio(&num, &den)
    }

    /// All elements of a prime field in the fixed order 0 < 1 < … < p−1.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        match *self {
            Field::Fp { p } => Ok((0..p).map(|value| Scalar::Fp { value, p }).collect()),
            Field::Q => Err(Error::NonFiniteField),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Fp { p }, Scalar::Fp { p: q, .. }) => p == q,
            (Field::Q, Scalar::Q(_)) => true,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Fp { p } => write!(f, "F{p}"),
            Field::Q => write!(f, "Q"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Residues are stored in `0..p`; rationals are kept
/// in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Fp { value: u64, p: u64 },
    Q(Box<BigRational>),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { value, .. } => *value == 0,
            Scalar::Q(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { value, .. } => *value == 1,
            Scalar::Q(r) => r.is_one(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Fp { p, .. } => Field::Fp { p: *p },
            Scalar::Q(_) => Field::Q,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inverse(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Fp { value, p } => {
                let (g, x, _) = ext_gcd(*value as i128, *p as i128);
                debug_assert_eq!(g, 1);
                Scalar::Fp {
                    value: x.rem_euclid(*p as i128) as u64,
                    p: *p,
                }
            }
            Scalar::Q(r) => Scalar::Q(Box::new(r.recip())),
        }
    }

    /// Canonical JSON form: residues as integers, rationals as `"num/den"`.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Fp { value, .. } => serde_json::Value::from(*value),
            Scalar::Q(_) => serde_json::Value::from(self.to_string()),
        }
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { value, .. } => write!(f, "{value}"),
            Scalar::Q(r) => {
                let (n, d) = (r.numer(), r.denom());
                debug_assert!(d.is_positive());
                write!(f, "{n}/{d}")
            }
        }
    }
}

fn mixed(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalars from different fields: {:?} and {:?}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => Scalar::Fp {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(a.as_ref() + b.as_ref())),
            _ => mixed(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => Scalar::Fp {
                value: ((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64,
                p: *p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(a.as_ref() - b.as_ref())),
            _ => mixed(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => Scalar::Fp {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(a.as_ref() * b.as_ref())),
            _ => mixed(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Fp { value, p } => Scalar::Fp {
                value: (p - value) % p,
                p: *p,
            },
            Scalar::Q(a) => Scalar::Q(Box::new(-a.as_ref())),
        }
    }
}
