//! Exact scalars over the rationals and over prime fields.
//!
//! A [`FieldDescriptor`] names the ground field and a [`Scalar`] is a single
//! element of it in canonical form: reduced fractions for `Q`, residues in
//! `0..p` for `F<p>`. Equality is structural, so two scalars compare equal iff
//! they denote the same element of the same field.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest prime characteristic (exclusive) the toolkit accepts.
pub const MAX_CHARACTERISTIC: u32 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// The ground field: `Q` (characteristic 0) or `F_p` for a prime `p < 2^16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldDescriptor {
    characteristic: u32,
}

impl FieldDescriptor {
    pub const RATIONALS: FieldDescriptor = FieldDescriptor { characteristic: 0 };

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    /// The prime field `F_p`. Fails unless `p` is a prime below `2^16`.
    pub fn prime(p: u32) -> Result<Self> {
        if p >= MAX_CHARACTERISTIC || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "characteristic {p} is not a prime below 2^16"
            )));
        }
        Ok(FieldDescriptor { characteristic: p })
    }

    pub fn kind(&self) -> FieldKind {
        if self.characteristic == 0 {
            FieldKind::Rationals
        } else {
            FieldKind::PrimeField
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic != 0
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            p => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// The element `num / den`. Fails when `den` vanishes in this field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        let inv = d
            .inverse()
            .ok_or_else(|| Error::DivisionByZero(format!("{num}/{den} in {self}")))?;
        Ok(self.from_i64(num) * inv)
    }

    /// Lifts a rational into this field (reduction mod p for prime fields).
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self.characteristic {
            0 => Ok(Scalar::Rational(q.clone())),
            p => {
                let m = BigInt::from(p);
                let reduce = |x: &BigInt| -> u32 {
                    let r = ((x % &m) + &m) % &m;
                    u32::try_from(r).expect("residue fits in u32")
                };
                let num = Scalar::Residue { value: reduce(q.numer()), modulus: p };
                let den = Scalar::Residue { value: reduce(q.denom()), modulus: p };
                let inv = den
                    .inverse()
                    .ok_or_else(|| Error::DivisionByZero(format!("{q} in {self}")))?;
                Ok(num * inv)
            }
        }
    }

    /// All elements `0, 1, …, p-1` of a prime field, in order.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        match self.characteristic {
            0 => Err(Error::InfiniteField),
            p => Ok((0..p).map(|v| Scalar::Residue { value: v, modulus: p }).collect()),
        }
    }

    /// Parses a scalar written as `"n"`, `"n/d"` (rationals) or a decimal
    /// residue (prime fields). Prime-field input may also be a fraction; it is
    /// reduced modulo `p`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid scalar {s:?} for field {self}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(bad());
        }
        self.from_rational(&BigRational::new(num, den))
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Self::RATIONALS);
        }
        let p = s
            .strip_prefix('F')
            .and_then(|rest| rest.parse::<u32>().ok())
            .ok_or_else(|| Error::Parse(format!("invalid field {s:?}; expected Q or F<p>")))?;
        Self::prime(p)
    }
}

impl Serialize for FieldDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldDescriptor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`FieldDescriptor`] in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::RATIONALS,
            Scalar::Residue { modulus, .. } => FieldDescriptor { characteristic: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value as u64, (*modulus - 2) as u64, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    /// `self / rhs`, `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inverse().map(|inv| self * &inv)
    }

    /// Integer value of a rational scalar with denominator 1, or the residue.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => i64::try_from(q.numer()).ok(),
            Scalar::Rational(_) => None,
            Scalar::Residue { value, .. } => Some(*value as i64),
        }
    }

    fn same_field(&self, rhs: &Scalar) {
        assert_eq!(
            self.field(),
            rhs.field(),
            "scalar arithmetic across fields {} and {}",
            self.field(),
            rhs.field()
        );
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((*a as u64 + *modulus as u64 - *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Scalar {
    /// Sign-aware check used when printing symbolic combinations.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }
}
