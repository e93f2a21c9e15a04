use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::memo::Memo;
use super::rational::{bits, format_rational, pow2_neg, round_dyadic, Rational};
use super::seq::CRealSeq;
use crate::{Error, Result};

/// A computable real: `approx(n)` is a rational within `2^-n` of the value.
///
/// Approximations are memoized per precision; oracles are deterministic, so
/// the same `n` always yields the same rational.
#[derive(Clone)]
pub struct CReal {
    oracle: Arc<Memo<u32, Rational>>,
}

/// Outcome of a soft comparison at a given precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// `x < y` holds for certain.
    Less,
    /// `x > y` holds for certain.
    Greater,
    /// `|x - y| <= 2^-n+2`.
    Within,
}

impl CReal {
    pub fn new(f: impl Fn(u32) -> Result<Rational> + Send + Sync + 'static) -> Self {
        CReal {
            oracle: Memo::new(move |n: &u32| f(*n)),
        }
    }

    pub fn approx(&self, n: u32) -> Result<Rational> {
        self.oracle.get(&n)
    }

    pub fn from_rational(q: Rational) -> Self {
        CReal::new(move |_| Ok(q.clone()))
    }

    pub fn zero() -> Self {
        CReal::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        CReal::from_rational(Rational::one())
    }

    /// An upper bound on `|x|`, from `|approx(0)| + 1`.
    pub fn magnitude_bound(&self) -> Result<Rational> {
        Ok(self.approx(0)?.abs() + Rational::one())
    }

    pub fn add(&self, other: &CReal) -> CReal {
        let (x, y) = (self.clone(), other.clone());
        CReal::new(move |n| {
            let s = x.approx(n + 2)? + y.approx(n + 2)?;
            Ok(round_dyadic(&s, n + 2))
        })
    }

    pub fn sub(&self, other: &CReal) -> CReal {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CReal {
        let x = self.clone();
        CReal::new(move |n| Ok(-x.approx(n)?))
    }

    pub fn abs(&self) -> CReal {
        let x = self.clone();
        CReal::new(move |n| Ok(x.approx(n)?.abs()))
    }

    pub fn scale(&self, q: &Rational) -> CReal {
        if q.is_zero() {
            return CReal::zero();
        }
        let (x, q) = (self.clone(), q.clone());
        let shift = bits(&q) + 1;
        CReal::new(move |n| {
            let v = &q * x.approx(n + shift)?;
            Ok(round_dyadic(&v, n + 1))
        })
    }

    /// Product; input precisions are shifted by magnitude bounds taken from
    /// `approx(0)`.
    pub fn mul(&self, other: &CReal) -> CReal {
        let (x, y) = (self.clone(), other.clone());
        CReal::new(move |n| {
            let bx = x.magnitude_bound()?;
            let by = y.magnitude_bound()?;
            // |xy - x'y'| <= |x||y - y'| + |y'||x - x'|, with |y'| <= by + 1
            let px = n + 2 + bits(&(by + Rational::one()));
            let py = n + 2 + bits(&bx);
            let v = x.approx(px)? * y.approx(py)?;
            Ok(round_dyadic(&v, n + 2))
        })
    }

    pub fn square(&self) -> CReal {
        self.mul(self)
    }

    /// Sum of finitely many reals.
    pub fn sum(terms: Vec<CReal>) -> CReal {
        if terms.is_empty() {
            return CReal::zero();
        }
        let shift = 1 + bits(&Rational::from_integer(BigInt::from(terms.len())));
        CReal::new(move |n| {
            let mut s = Rational::zero();
            for t in &terms {
                s += t.approx(n + shift)?;
            }
            Ok(round_dyadic(&s, n + 1))
        })
    }

    /// Square root of a nonnegative real. Fails with [`Error::NegativeSqrt`]
    /// at evaluation time when the input is certainly negative.
    pub fn sqrt(&self) -> CReal {
        let x = self.clone();
        CReal::new(move |n| {
            let p = 2 * n + 2;
            let q = x.approx(p)?;
            if q < -pow2_neg(p) {
                return Err(Error::NegativeSqrt {
                    precision: p,
                    approx: format_rational(&q),
                });
            }
            if !q.is_positive() {
                return Ok(Rational::zero());
            }
            // |sqrt x - sqrt q| <= sqrt|x - q| <= 2^-(n+1); integer root adds < 2^-(n+1)
            let k = (n + 1) as usize;
            let scaled = (q * Rational::from_integer(BigInt::one() << (2 * k)))
                .floor()
                .to_integer();
            Ok(Rational::new(scaled.sqrt(), BigInt::one() << k))
        })
    }

    /// Effective limit: for all `k >= modulus(n)`, `|x_k - lim| <= 2^-(n+1)`
    /// is the caller's contract.
    pub fn limit(xs: CRealSeq, modulus: impl Fn(u32) -> usize + Send + Sync + 'static) -> CReal {
        CReal::new(move |n| xs.at(modulus(n + 1))?.approx(n + 1))
    }

    /// Soft comparison; never claims an order that does not hold.
    pub fn compare(&self, other: &CReal, n: u32) -> Result<Comparison> {
        let d = self.approx(n + 1)? - other.approx(n + 1)?;
        let eps = pow2_neg(n);
        Ok(if d < -eps.clone() {
            Comparison::Less
        } else if d > eps {
            Comparison::Greater
        } else {
            Comparison::Within
        })
    }
}

impl From<Rational> for CReal {
    fn from(q: Rational) -> Self {
        CReal::from_rational(q)
    }
}

impl fmt::Debug for CReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.approx(20) {
            Ok(q) => write!(f, "CReal(~{} ±2^-20)", format_rational(&q)),
            Err(e) => write!(f, "CReal(<{e}>)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realcore::{int, rat};
    use proptest::prelude::*;

    fn within(q: &Rational, x: &Rational, n: u32) -> bool {
        (q - x).abs() <= pow2_neg(n)
    }

    /// sqrt(2) by rational interval bisection: independent of `CReal::sqrt`.
    fn sqrt2_oracle() -> CReal {
        CReal::new(|n| {
            let (mut lo, mut hi) = (int(1), int(2));
            while &hi - &lo > pow2_neg(n) {
                let mid = (&lo + &hi) / int(2);
                if &mid * &mid <= int(2) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            Ok(lo)
        })
    }

    #[test]
    fn constants() {
        assert_eq!(CReal::from_rational(rat(1, 3)).approx(10).unwrap(), rat(1, 3));
        assert_eq!(CReal::from_rational(int(0)).approx(50).unwrap(), int(0));
        assert_eq!(CReal::from_rational(rat(-7, 2)).approx(0).unwrap(), rat(-7, 2));
    }

    #[test]
    fn arithmetic_examples() {
        let s = CReal::from(rat(1, 3)).add(&CReal::from(rat(1, 6)));
        assert!(within(&s.approx(20).unwrap(), &rat(1, 2), 20));
        let p = CReal::from(int(2)).mul(&CReal::from(int(3)));
        assert!(within(&p.approx(10).unwrap(), &int(6), 10));
        let r2 = sqrt2_oracle();
        let two = r2.mul(&r2);
        assert!(within(&two.approx(30).unwrap(), &int(2), 30));
    }

    #[test]
    fn sqrt_examples() {
        let s = CReal::from(int(4)).sqrt();
        assert!(within(&s.approx(20).unwrap(), &int(2), 20));
        let z = CReal::zero().sqrt();
        assert!(within(&z.approx(40).unwrap(), &int(0), 40));
        let r = CReal::from(int(2)).sqrt().approx(10).unwrap();
        assert!(r >= rat(141406, 100000) && r <= rat(141504, 100000));
        // agreement with the independent Newton enclosure
        let n = sqrt2_oracle().approx(40).unwrap();
        let m = CReal::from(int(2)).sqrt().approx(40).unwrap();
        assert!((n - m).abs() <= pow2_neg(39));
    }

    #[test]
    fn sqrt_of_negative_fails() {
        let e = CReal::from(rat(-1, 100)).sqrt().approx(5).unwrap_err();
        assert!(matches!(e, Error::NegativeSqrt { .. }));
        // tiny negative noise within the precision is tolerated
        let tiny = CReal::new(|n| Ok(-pow2_neg(n + 1)));
        assert!(tiny.sqrt().approx(10).is_ok());
    }

    #[test]
    fn limit_examples() {
        let xs = CRealSeq::from_fn(|k| Ok(CReal::from(int(1) - pow2_neg(k as u32))));
        let lim = CReal::limit(xs, |n| n as usize + 1);
        assert!(within(&lim.approx(10).unwrap(), &int(1), 10));

        let fives = CRealSeq::from_fn(|_| Ok(CReal::from(int(5))));
        assert_eq!(CReal::limit(fives, |_| 0).approx(7).unwrap(), int(5));

        // partial sums of 4^-i; the tail after k terms is (4/3) 4^-k
        let geo = CRealSeq::from_fn(|k| {
            let mut s = int(0);
            for i in 0..k {
                s += pow2_neg(2 * i as u32);
            }
            Ok(CReal::from(s))
        });
        let lim = CReal::limit(geo, |n| n as usize + 2);
        assert!(within(&lim.approx(20).unwrap(), &rat(4, 3), 20));
    }

    #[test]
    fn compare_examples() {
        let c = CReal::zero().compare(&CReal::one(), 5).unwrap();
        assert_eq!(c, Comparison::Less);
        let t = CReal::from(rat(1, 3));
        assert_eq!(t.compare(&t, 20).unwrap(), Comparison::Within);
        let c = sqrt2_oracle().compare(&CReal::from(rat(3, 2)), 10).unwrap();
        assert_eq!(c, Comparison::Less);
        let c = CReal::from(int(2)).sqrt().compare(&CReal::from(rat(3, 2)), 10).unwrap();
        assert_eq!(c, Comparison::Less);
    }

    #[test]
    fn memo_is_pure() {
        let x = CReal::from(int(2)).sqrt();
        let a = x.approx(33).unwrap();
        let b = x.approx(33).unwrap();
        assert_eq!(a, b);
    }

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-1_000_000i64..=1_000_000, 1i64..=1_000_000).prop_map(|(n, d)| rat(n, d))
    }

    fn consistent(x: &CReal) -> bool {
        let ps = [0u32, 5, 10, 20, 35, 40];
        ps.iter().all(|&n| {
            ps.iter().all(|&m| {
                let d = (x.approx(n).unwrap() - x.approx(m).unwrap()).abs();
                d <= pow2_neg(n) + pow2_neg(m)
            })
        })
    }

    proptest! {
        #[test]
        fn rational_arithmetic_is_sound(p in arb_rat(), q in arb_rat()) {
            let (x, y) = (CReal::from(p.clone()), CReal::from(q.clone()));
            prop_assert!(within(&x.add(&y).approx(40).unwrap(), &(&p + &q), 40));
            prop_assert!(within(&x.sub(&y).approx(40).unwrap(), &(&p - &q), 40));
            prop_assert!(within(&x.mul(&y).approx(40).unwrap(), &(&p * &q), 40));
        }

        #[test]
        fn derived_reals_are_consistent(p in arb_rat(), q in arb_rat()) {
            let (x, y) = (CReal::from(p.clone()), CReal::from(q.clone()));
            prop_assert!(consistent(&x.add(&y)));
            prop_assert!(consistent(&x.mul(&y)));
            prop_assert!(consistent(&x.scale(&q)));
            prop_assert!(consistent(&x.abs().sqrt()));
            prop_assert!(consistent(&x.mul(&y).abs().sqrt().mul(&y)));
        }
    }
}
