//! Exact arithmetic: arbitrary precision rationals and cyclotomic fields.

mod cyclotomic;

pub use cyclotomic::{
    cyclotomic_polynomial, euler_phi, max_conductor, set_max_conductor, CycNum,
    DEFAULT_MAX_CONDUCTOR,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type BigRat = BigRational;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRat::new(p, q))
        }
        None => Ok(BigRat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Textual `p/q` form (`p` alone for integers).
pub fn fmt_rat(r: &BigRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Returns the integer value of `r` if it is integral.
pub fn rat_to_int(r: &BigRat) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let r = parse_rat("6/-4").unwrap();
        assert_eq!(fmt_rat(&r), "-3/2");
        assert!(r.denom() > &BigInt::zero());
        assert_eq!(parse_rat(" 7 ").unwrap(), int(7));
        assert_eq!(parse_rat("1/0"), Err(Error::DivisionByZero));
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn integral_check() {
        assert_eq!(rat_to_int(&rat(8, 4)), Some(BigInt::from(2)));
        assert_eq!(rat_to_int(&rat(1, 2)), None);
    }
}
