//! Exact rational functions in `q` and the `q`-integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{rational_to_f64, Poly};
use crate::error::{Error, Result};

/// A quotient `num / den` kept in lowest terms with a monic denominator, so
/// two equal functions always have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading().cloned().expect("nonzero denominator");
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_i64(c: i64) -> Self {
        Self::from_poly(Poly::from_i64(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(Poly::q())
    }

    /// `((q - 1) / (q + 1))^2`, the deformation parameter of the cubic relations.
    pub fn c_squared() -> Self {
        let c = Self::new(Poly::from_i64_coeffs(&[-1, 1]), Poly::from_i64_coeffs(&[1, 1]))
            .expect("q + 1 is nonzero");
        &c * &c
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Integer powers; negative exponents invert.
    pub fn powi(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(RationalFunction {
            num: base.num.pow(e.unsigned_abs()),
            den: base.den.pow(e.unsigned_abs()),
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::reduced(self.num.scale(c), self.den.clone())
    }

    pub fn eval_rational(&self, at: &BigRational) -> Result<BigRational> {
        let d = self.den.eval_rational(at);
        if d.is_zero() {
            return Err(Error::Pole {
                point: at.to_string(),
            });
        }
        Ok(self.num.eval_rational(at) / d)
    }

    pub fn eval_complex(&self, at: Complex64) -> Result<Complex64> {
        let d = self.den.eval_complex(at);
        if d.norm() == 0.0 {
            return Err(Error::Pole {
                point: at.to_string(),
            });
        }
        Ok(self.num.eval_complex(at) / d)
    }

    /// Constant term value when the function is a constant.
    pub fn as_constant(&self) -> Option<f64> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(0.0),
            (Some(0), Some(0)) => Some(rational_to_f64(&self.num.coeffs()[0])),
            _ => None,
        }
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// The `q`-integer `[d]_q = (1 - q^d) / (1 - q)` for a nonzero integer `d`.
///
/// It removes the `1 - q^d` denominators of the seminormal matrix entries,
/// which keeps them finite at `q = 1` where `[d]_1 = d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QInteger {
    d: i64,
    as_function: RationalFunction,
}

impl QInteger {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("q-integer index must be nonzero".into()));
        }
        let k = d.unsigned_abs() as usize;
        let ones = Poly::from_coeffs(vec![BigRational::one(); k]);
        let as_function = if d > 0 {
            RationalFunction::from_poly(ones)
        } else {
            // [-k]_q = -q^{-k} (1 + q + ... + q^{k-1})
            RationalFunction::new(-&ones, Poly::monomial(BigRational::one(), k))?
        };
        Ok(QInteger { d, as_function })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn as_function(&self) -> &RationalFunction {
        &self.as_function
    }

    /// Floating evaluation, exact in the sense of never dividing by `1 - q`.
    pub fn value(d: i64, q: Complex64) -> Complex64 {
        let k = d.unsigned_abs();
        let mut sum = Complex64::new(0.0, 0.0);
        let mut pw = Complex64::new(1.0, 0.0);
        for _ in 0..k {
            sum += pw;
            pw *= q;
        }
        if d >= 0 {
            sum
        } else {
            -sum / q.powi(k as i32)
        }
    }
}
