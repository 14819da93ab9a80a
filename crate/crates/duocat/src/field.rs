//! Exact scalar arithmetic over the rationals or a prime field.
//!
//! Every computation in this crate is exact: rationals are arbitrary-precision
//! `BigRational`s kept in lowest terms with positive denominator, prime-field
//! residues live in `[0, p)`. There is no rounding anywhere, and mixing
//! scalars of different fields is an error rather than a coercion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

use crate::error::Error;

/// Field descriptor fixed for a whole verification session.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    /// The rational numbers.
    Q,
    /// The prime field of the given characteristic.
    Fp(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "GF({p})"),
        }
    }
}

/// A single exact scalar. The field it belongs to is tracked by the
/// containing matrix, not by the element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Q(BigRational),
    Fp(u64),
}

impl Field {
    pub fn zero(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Fp(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::one()),
            Field::Fp(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => Scalar::Fp(n.rem_euclid(*p as i64) as u64),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(x) => x.is_zero(),
            Scalar::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(x) => x.is_one(),
            Scalar::Fp(x) => *x == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (Field::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x - y),
            (Field::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 + (*p - *y) as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        // 1 and -1 dominate the matrices seen here; skip the gcd work for them.
        if self.is_one(a) {
            return b.clone();
        }
        if self.is_one(b) {
            return a.clone();
        }
        match (self, a, b) {
            (Field::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (Field::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Q, Scalar::Q(x)) => Scalar::Q(-x),
            (Field::Fp(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, Error> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (self, a) {
            (Field::Q, Scalar::Q(x)) => Ok(Scalar::Q(x.recip())),
            (Field::Fp(p), Scalar::Fp(x)) => Ok(Scalar::Fp(mod_inv(*x, *p))),
            _ => panic!("scalar/field mismatch"),
        }
    }

    /// Renders a scalar in the wire format: `"n"` or `"n/d"` for rationals,
    /// `"r mod p"` for prime-field residues.
    pub fn render(&self, a: &Scalar) -> String {
        match (self, a) {
            (Field::Q, Scalar::Q(x)) => {
                if x.denom().is_one() {
                    format!("{}", x.numer())
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            (Field::Fp(p), Scalar::Fp(x)) => format!("{x} mod {p}"),
            _ => panic!("scalar/field mismatch"),
        }
    }

    /// Parses the wire format accepted by [`Field::render`]. For prime fields
    /// a bare integer is also accepted and reduced mod p; a rational literal
    /// `n/d` is mapped through the modular inverse of `d`.
    pub fn parse(&self, s: &str) -> Result<Scalar, Error> {
        let s = s.trim();
        match self {
            Field::Q => {
                if let Some((n, d)) = s.split_once('/') {
                    let n: BigInt = n
                        .trim()
                        .parse()
                        .map_err(|_| Error::BadScalar(s.to_string()))?;
                    let d: BigInt = d
                        .trim()
                        .parse()
                        .map_err(|_| Error::BadScalar(s.to_string()))?;
                    if d.is_zero() {
                        return Err(Error::BadScalar(s.to_string()));
                    }
                    Ok(Scalar::Q(BigRational::new(n, d)))
                } else {
                    let n: BigInt = s.parse().map_err(|_| Error::BadScalar(s.to_string()))?;
                    Ok(Scalar::Q(BigRational::from_integer(n)))
                }
            }
            Field::Fp(p) => {
                let body = match s.split_once(" mod ") {
                    Some((r, m)) => {
                        let m: u64 = m.trim().parse().map_err(|_| Error::BadScalar(s.into()))?;
                        if m != *p {
                            return Err(Error::FieldMismatch);
                        }
                        r.trim().to_string()
                    }
                    None => s.to_string(),
                };
                let reduce = |n: i128| -> u64 { n.rem_euclid(*p as i128) as u64 };
                if let Some((n, d)) = body.split_once('/') {
                    let n: i128 = n.trim().parse().map_err(|_| Error::BadScalar(s.into()))?;
                    let d: i128 = d.trim().parse().map_err(|_| Error::BadScalar(s.into()))?;
                    let d = reduce(d);
                    if d == 0 {
                        return Err(Error::BadScalar(s.to_string()));
                    }
                    Ok(Scalar::Fp(
                        ((reduce(n) as u128 * mod_inv(d, *p) as u128) % *p as u128) as u64,
                    ))
                } else {
                    let n: i128 = body.parse().map_err(|_| Error::BadScalar(s.into()))?;
                    Ok(Scalar::Fp(reduce(n)))
                }
            }
        }
    }

    /// Converts a rational scalar into this field (used by the `--field`
    /// override). Fails if the denominator vanishes mod p.
    pub fn convert_rational(&self, x: &BigRational) -> Result<Scalar, Error> {
        match self {
            Field::Q => Ok(Scalar::Q(x.clone())),
            Field::Fp(p) => {
                let p_big = BigInt::from(*p);
                let n = x.numer().mod_floor_u64(&p_big);
                let d = x.denom().mod_floor_u64(&p_big);
                if d == 0 {
                    return Err(Error::BadScalar(format!("{x} has no image mod {p}")));
                }
                Ok(Scalar::Fp(
                    ((n as u128 * mod_inv(d, *p) as u128) % *p as u128) as u64,
                ))
            }
        }
    }

    pub fn is_prime_ok(&self) -> bool {
        match self {
            Field::Q => true,
            Field::Fp(p) => is_prime(*p),
        }
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, p: &BigInt) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: &BigInt) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(p);
        let (_, digits) = m.to_u64_digits();
        if digits.is_empty() {
            0
        } else {
            digits[0]
        }
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended euclid; p is prime and a != 0 mod p
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible mod p");
    t.rem_euclid(p as i128) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
