//! Exact coefficient arithmetic over the rationals and over prime fields.
//!
//! A [`FieldSpec`] selects the coefficient field; a [`FieldScalar`] is an
//! element of it, kept in canonical form at all times (rationals in lowest
//! terms with positive denominator, residues reduced into `[0, p)`).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum SpecInner {
    Rationals,
    PrimeField(u64),
}

/// Selector for the coefficient field: the rationals, or `F_p` for a prime
/// `p` checked at construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldSpec(SpecInner);

impl FieldSpec {
    /// The field of rational numbers.
    pub fn rationals() -> Self {
        FieldSpec(SpecInner::Rationals)
    }

    /// The prime field `F_p`. Primality is checked by trial division; the
    /// modulus must satisfy `2 <= p < 2^31` so products fit in `u64`.
    pub fn prime_field(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::PrimeOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec(SpecInner::PrimeField(p)))
    }

    /// Parses the CLI field selector: `"Q"` or `"Fp=<p>"`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Self::rationals());
        }
        if let Some(rest) = t.strip_prefix("Fp=") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::parse(3, format!("invalid prime modulus '{rest}'")))?;
            return Self::prime_field(p);
        }
        Err(Error::parse(
            0,
            format!("unknown field '{t}' (expected 'Q' or 'Fp=<p>')"),
        ))
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.0, SpecInner::Rationals)
    }

    /// The characteristic: 0 for the rationals, `p` for `F_p`.
    pub fn characteristic(&self) -> u64 {
        match self.0 {
            SpecInner::Rationals => 0,
            SpecInner::PrimeField(p) => p,
        }
    }

    /// The prime modulus, if this is a prime field.
    pub fn prime(&self) -> Option<u64> {
        match self.0 {
            SpecInner::Rationals => None,
            SpecInner::PrimeField(p) => Some(p),
        }
    }

    /// Zero element of this field.
    pub fn zero(&self) -> FieldScalar {
        FieldScalar::from_integer(*self, 0)
    }

    /// Unit element of this field.
    pub fn one(&self) -> FieldScalar {
        FieldScalar::from_integer(*self, 1)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            SpecInner::Rationals => write!(f, "Q"),
            SpecInner::PrimeField(p) => write!(f, "Fp={p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Repr {
    Rational(BigRational),
    Residue(u64),
}

/// An element of the coefficient field selected by a [`FieldSpec`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldScalar {
    spec: FieldSpec,
    repr: Repr,
}

impl FieldScalar {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn from_integer(spec: FieldSpec, value: i64) -> Self {
        match spec.0 {
            SpecInner::Rationals => FieldScalar {
                spec,
                repr: Repr::Rational(BigRational::from_integer(BigInt::from(value))),
            },
            SpecInner::PrimeField(p) => {
                let r = value.rem_euclid(p as i64) as u64;
                FieldScalar {
                    spec,
                    repr: Repr::Residue(r),
                }
            }
        }
    }

    pub fn from_bigint(spec: FieldSpec, value: BigInt) -> Self {
        match spec.0 {
            SpecInner::Rationals => FieldScalar {
                spec,
                repr: Repr::Rational(BigRational::from_integer(value)),
            },
            SpecInner::PrimeField(p) => {
                let m = BigInt::from(p);
                let mut r = value % &m;
                if r.is_negative() {
                    r += &m;
                }
                FieldScalar {
                    spec,
                    repr: Repr::Residue(r.to_u64().expect("reduced residue fits u64")),
                }
            }
        }
    }

    /// `num/den` as a field element. Over a prime field both parts are
    /// reduced and the quotient is taken there.
    pub fn from_ratio(spec: FieldSpec, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = Self::from_integer(spec, num);
        let d = Self::from_integer(spec, den);
        n.mul(&d.inv()?)
    }

    pub fn from_big_ratio(spec: FieldSpec, num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match spec.0 {
            SpecInner::Rationals => Ok(FieldScalar {
                spec,
                repr: Repr::Rational(BigRational::new(num, den)),
            }),
            SpecInner::PrimeField(_) => {
                let n = Self::from_bigint(spec, num);
                let d = Self::from_bigint(spec, den);
                n.mul(&d.inv()?)
            }
        }
    }

    /// Parses the scalar text format: `a/b` or `a` over the rationals,
    /// a decimal integer (reduced on parse) over a prime field. A leading
    /// sign is accepted in both cases.
    pub fn parse(spec: FieldSpec, text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::parse(0, "empty scalar"));
        }
        let (num_str, den_str) = match t.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (t, None),
        };
        let num: BigInt = num_str
            .parse()
            .map_err(|_| Error::parse(0, format!("malformed integer '{num_str}'")))?;
        match den_str {
            None => Ok(Self::from_bigint(spec, num)),
            Some(d) => {
                if !spec.is_rationals() {
                    return Err(Error::parse(
                        num_str.len(),
                        "prime-field scalars are plain integers",
                    ));
                }
                let den: BigInt = d
                    .parse()
                    .map_err(|_| Error::parse(num_str.len() + 1, format!("malformed integer '{d}'")))?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Self::from_big_ratio(spec, num, den)?)
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_zero(),
            Repr::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_one(),
            Repr::Residue(r) => *r == 1,
        }
    }

    /// True for a negative rational; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_negative(),
            Repr::Residue(_) => false,
        }
    }

    /// The underlying rational, if this scalar lives over the rationals.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            Repr::Residue(_) => None,
        }
    }

    /// The residue in `[0, p)`, if this scalar lives over a prime field.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Rational(_) => None,
            Repr::Residue(r) => Some(*r),
        }
    }

    fn require_same_spec(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.require_same_spec(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            (Repr::Residue(a), Repr::Residue(b)) => {
                let p = self.spec.characteristic();
                Repr::Residue((a + b) % p)
            }
            _ => unreachable!("spec equality implies matching representations"),
        };
        Ok(FieldScalar {
            spec: self.spec,
            repr,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.require_same_spec(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            (Repr::Residue(a), Repr::Residue(b)) => {
                let p = self.spec.characteristic();
                Repr::Residue(a * b % p)
            }
            _ => unreachable!("spec equality implies matching representations"),
        };
        Ok(FieldScalar {
            spec: self.spec,
            repr,
        })
    }

    pub fn neg(&self) -> Self {
        let repr = match &self.repr {
            Repr::Rational(a) => Repr::Rational(-a),
            Repr::Residue(a) => {
                let p = self.spec.characteristic();
                Repr::Residue(if *a == 0 { 0 } else { p - a })
            }
        };
        FieldScalar {
            spec: self.spec,
            repr,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rational(a) => Repr::Rational(a.recip()),
            Repr::Residue(a) => {
                let p = self.spec.characteristic();
                Repr::Residue(mod_pow(*a, p - 2, p))
            }
        };
        Ok(FieldScalar {
            spec: self.spec,
            repr,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    /// Exact `k`-th power; `k` may be negative (then `self` must be nonzero).
    /// `0^0` is defined as 1.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            if self.is_zero() {
                return Err(Error::ZeroToNegativePower);
            }
            return self.inv()?.pow_unsigned(k.unsigned_abs());
        }
        self.pow_unsigned(k as u64)
    }

    fn pow_unsigned(&self, mut k: u64) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = FieldScalar::from_integer(self.spec, 1);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Magnitude over the rationals; identity over a prime field.
    pub fn abs(&self) -> Self {
        match &self.repr {
            Repr::Rational(a) => FieldScalar {
                spec: self.spec,
                repr: Repr::Rational(a.abs()),
            },
            Repr::Residue(_) => self.clone(),
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Residue(r) => write!(f, "{r}"),
        }
    }
}
