//! Exact scalars: arbitrary-precision rationals and prime fields GF(p).
//!
//! Every scalar knows its field. Arithmetic between scalars of different
//! fields is a programming error and panics; validating that user input
//! lives over a single field happens once, at the parsing boundary.
//!
//! Canonical text forms: rationals print as `n` (denominator 1) or `n/d`
//! with d > 0 and gcd(n, d) = 1; GF(p) elements print as the least
//! nonnegative residue. Parsing accepts any integer (reduced mod p) and, for
//! rationals, any `n/d` with d nonzero; the canonical form is restored on
//! output, so serialize(parse(s)) normalizes s.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient field: the rationals or a prime field GF(p) with p < 2^16.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// Prime field of the given characteristic.
    Gf(u64),
}

impl Field {
    /// Validates the field descriptor: GF moduli must be prime and < 2^16.
    pub fn validate(self) -> Result<Field> {
        match self {
            Field::Rational => Ok(self),
            Field::Gf(p) => {
                if p >= 1 << 16 {
                    return Err(Error::ModulusTooLarge(p));
                }
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                Ok(self)
            }
        }
    }

    /// The field characteristic: 0 for the rationals, p for GF(p).
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Gf(p) => p,
        }
    }

    /// Errors out on characteristic 2; used by every halving consumer.
    pub fn reject_characteristic_two(self) -> Result<()> {
        if self.characteristic() == 2 {
            Err(Error::CharacteristicTwo)
        } else {
            Ok(())
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::zero()),
            Field::Gf(p) => Scalar::Gf { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::one()),
            Field::Gf(p) => Scalar::Gf { value: 1 % p, modulus: p },
        }
    }

    /// Embeds a signed integer into the field.
    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Gf(p) => {
                let p_i = p as i128;
                let r = ((n as i128 % p_i) + p_i) % p_i;
                Scalar::Gf { value: r as u64, modulus: p }
            }
        }
    }

    /// Parses a scalar literal in this field. Rationals accept `n` or `n/d`;
    /// GF(p) accepts any integer literal and reduces it mod p.
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let bad = |reason| Error::BadScalar { literal: s.to_string(), reason };
        match self {
            Field::Rational => {
                let r = BigRational::from_str(s)
                    .map_err(|_| bad("expected an integer or numerator/denominator"))?;
                Ok(Scalar::Rat(r))
            }
            Field::Gf(p) => {
                if s.contains('/') {
                    return Err(bad("prime-field values must be integers"));
                }
                let n = BigInt::from_str(s).map_err(|_| bad("expected an integer"))?;
                let p_big = BigInt::from(p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                let (_, digits) = r.to_u64_digits();
                let value = digits.first().copied().unwrap_or(0);
                Ok(Scalar::Gf { value, modulus: p })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Gf(p) => write!(f, "gf {p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Gf { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Gf { modulus, .. } => Field::Gf(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Gf { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Gf { value, modulus } => *value == 1 % *modulus,
        }
    }

    fn same_field(&self, other: &Scalar, op: &str) {
        assert!(
            self.field() == other.field(),
            "scalar {op} across distinct fields ({} vs {})",
            self.field(),
            other.field()
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.same_field(other, "addition");
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Gf { value: a, modulus: p }, Scalar::Gf { value: b, .. }) => {
                Scalar::Gf { value: (a + b) % p, modulus: *p }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.same_field(other, "subtraction");
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Gf { value: a, modulus: p }, Scalar::Gf { value: b, .. }) => {
                Scalar::Gf { value: (a + p - b) % p, modulus: *p }
            }
            _ => unreachable!(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.same_field(other, "multiplication");
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Gf { value: a, modulus: p }, Scalar::Gf { value: b, .. }) => {
                // p < 2^16, so the product of two residues fits in u64.
                Scalar::Gf { value: (a * b) % p, modulus: *p }
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Gf { value, modulus: p } => {
                Scalar::Gf { value: (p - value) % p, modulus: *p }
            }
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Gf { value, modulus: p } => Scalar::Gf {
                value: mod_inverse(*value, *p),
                modulus: *p,
            },
        })
    }

    /// Exact division; panics on division by zero (internal invariant).
    pub fn div(&self, other: &Scalar) -> Scalar {
        let inv = other.inv().expect("exact division by zero");
        self.mul(&inv)
    }

    /// Divides by two. Callers must have rejected characteristic 2.
    pub fn halve(&self) -> Scalar {
        let two = self.field().from_i64(2);
        let inv = two
            .inv()
            .expect("halving requested over a field of characteristic 2");
        self.mul(&inv)
    }
}

/// Inverse of a mod p via the extended Euclidean algorithm.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "attempted to invert a multiple of the modulus");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Gf { value, .. } => write!(f, "{value}"),
        }
    }
}
