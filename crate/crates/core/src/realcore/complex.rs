use super::creal::CReal;
use super::rational::Rational;
use crate::Result;

/// A computable complex number as a pair of computable reals. Each part of
/// `approx(n)` is within `2^-n` of the true part.
#[derive(Clone, Debug)]
pub struct ComplexCReal {
    pub re: CReal,
    pub im: CReal,
}

impl ComplexCReal {
    pub fn new(re: CReal, im: CReal) -> Self {
        ComplexCReal { re, im }
    }

    pub fn from_real(re: CReal) -> Self {
        ComplexCReal { re, im: CReal::zero() }
    }

    pub fn approx(&self, n: u32) -> Result<(Rational, Rational)> {
        Ok((self.re.approx(n)?, self.im.approx(n)?))
    }

    pub fn add(&self, o: &ComplexCReal) -> ComplexCReal {
        ComplexCReal::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &ComplexCReal) -> ComplexCReal {
        ComplexCReal::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &ComplexCReal) -> ComplexCReal {
        ComplexCReal::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }

    pub fn conj(&self) -> ComplexCReal {
        ComplexCReal::new(self.re.clone(), self.im.neg())
    }

    /// `|z|^2`.
    pub fn norm_sq(&self) -> CReal {
        self.re.square().add(&self.im.square())
    }

    pub fn abs(&self) -> CReal {
        self.norm_sq().sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realcore::{int, pow2_neg};
    use num_traits::Signed;

    #[test]
    fn gaussian_integer_product() {
        // (1 + 2i)(3 - i) = 5 + 5i
        let a = ComplexCReal::new(CReal::from(int(1)), CReal::from(int(2)));
        let b = ComplexCReal::new(CReal::from(int(3)), CReal::from(int(-1)));
        let (re, im) = a.mul(&b).approx(30).unwrap();
        assert!((re - int(5)).abs() <= pow2_neg(30));
        assert!((im - int(5)).abs() <= pow2_neg(30));
        let m = a.conj().mul(&a).re.approx(30).unwrap();
        assert!((m - int(5)).abs() <= pow2_neg(30));
        let r = ComplexCReal::new(CReal::from(int(3)), CReal::from(int(4))).abs();
        assert!((r.approx(20).unwrap() - int(5)).abs() <= pow2_neg(20));
    }
}
