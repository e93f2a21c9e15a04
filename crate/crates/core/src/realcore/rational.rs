use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `2^-k` as an exact rational.
pub fn pow2_neg(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << k as usize)
}

/// Smallest `k >= 0` with `|r| <= 2^k`.
pub fn bits(r: &Rational) -> u32 {
    let c = r.abs().ceil().to_integer();
    if c <= BigInt::one() {
        0
    } else {
        (c - BigInt::one()).bits() as u32
    }
}

/// Nearest multiple of `2^-k`; the rounding error is at most `2^-(k+1)`.
pub fn round_dyadic(q: &Rational, k: u32) -> Rational {
    let scale = BigInt::one() << k as usize;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let scaled = q * Rational::from_integer(scale.clone()) + half;
    Rational::new(scaled.floor().to_integer(), scale)
}

/// A rational upper bound for `sqrt(r)`, exceeding it by at most `2^-7`.
/// Negative inputs are treated as zero.
pub fn sqrt_upper(r: &Rational) -> Rational {
    sqrt_upper_within(r, 8)
}

/// A rational upper bound for `sqrt(r)`, exceeding it by at most `2^(1-k)`.
pub fn sqrt_upper_within(r: &Rational, k: u32) -> Rational {
    if !r.is_positive() {
        return Rational::zero();
    }
    let shift = 2 * k as usize;
    let scaled = (r * Rational::from_integer(BigInt::one() << shift)).ceil().to_integer();
    let root = scaled.sqrt() + BigInt::one();
    Rational::new(root, BigInt::one() << (shift / 2))
}

/// Parses `-?[0-9]+(/[1-9][0-9]*)?`. Decimal points and exponents are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("malformed rational literal {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            let ok = d.bytes().all(|b| b.is_ascii_digit()) && !d.is_empty() && !d.starts_with('0');
            if !ok {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
    };
    Ok(Rational::new(n, d))
}

/// Serializes as `num/den` in lowest terms.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}
