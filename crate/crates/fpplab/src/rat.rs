//! Exact rational helpers used throughout the crate.
//!
//! All passage times, weights and distances are `BigRational`; geodesic
//! tie detection and the interval checks in the verifiers are exact
//! claims that float arithmetic would corrupt.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Rational from an integer pair, `q != 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    BigRational::from_integer(BigInt::from(p))
}

pub fn rzero() -> Rat {
    BigRational::zero()
}

pub fn rone() -> Rat {
    BigRational::one()
}

/// Floor of a rational as a BigInt (towards negative infinity).
pub fn floor_int(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// Floor as i64; the lattice workspaces are desk-scale so this never
/// overflows in practice.
pub fn floor_i64(r: &Rat) -> i64 {
    floor_int(r).to_i64().expect("lattice coordinate out of i64 range")
}

/// Smallest integer strictly greater than `r`.
pub fn strict_ceil_i64(r: &Rat) -> i64 {
    let f = r.floor();
    if &f == r {
        floor_i64(r) + 1
    } else {
        floor_i64(&r.ceil())
    }
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

/// Canonical text form: `p` for integers, `p/q` otherwise, reduced.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse the canonical `p` / `p/q` form.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mk_err = || Error::Malformed(format!("invalid rational: {s:?}"));
    match s.split_once('/') {
        None => {
            let p: BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(BigRational::from_integer(p))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| mk_err())?;
            let q: BigInt = q.trim().parse().map_err(|_| mk_err())?;
            if q.is_zero() {
                return Err(mk_err());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

pub fn big_to_u64(n: &BigUint) -> Option<u64> {
    n.to_u64()
}

/// Multinomial coefficient (sum k_i)! / prod k_i! via iterated binomials.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total: u64 = 0;
    for &k in parts {
        for j in 1..=k {
            total += 1;
            acc = acc * BigUint::from(total) / BigUint::from(j);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_format_roundtrip() {
        for s in ["0", "-3", "7/2", "-5/4", "10"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(format_rat(&parse_rat("4/2").unwrap()), "2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
    }

    #[test]
    fn strict_ceil() {
        assert_eq!(strict_ceil_i64(&rat(5, 1)), 6);
        assert_eq!(strict_ceil_i64(&rat(9, 2)), 5);
        assert_eq!(strict_ceil_i64(&rat(-9, 2)), -4);
    }

    #[test]
    fn multinomial_small() {
        assert_eq!(multinomial(&[3, 1]), BigUint::from(4u32));
        assert_eq!(multinomial(&[2, 1]), BigUint::from(3u32));
        assert_eq!(multinomial(&[2, 2]), BigUint::from(6u32));
        assert_eq!(multinomial(&[1, 1, 1]), BigUint::from(6u32));
    }
}
