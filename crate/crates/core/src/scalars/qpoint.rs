//! Specialization points for the parameter `q`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::rational_to_f64;
use crate::error::{Error, Result};

/// Tolerance of the float root-of-unity test `|q^k - 1| < ROOT_TOL`.
pub const ROOT_TOL: f64 = 1e-12;

/// A value of `q`: exact rational or double-precision complex.
#[derive(Clone, Debug, PartialEq)]
pub enum QValue {
    Exact(BigRational),
    Float(Complex64),
}

impl QValue {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            QValue::Exact(r) => Complex64::new(rational_to_f64(r), 0.0),
            QValue::Float(z) => *z,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, QValue::Exact(_))
    }

    /// True when the value is real and strictly positive.
    pub fn is_positive_real(&self) -> bool {
        match self {
            QValue::Exact(r) => r.is_positive(),
            QValue::Float(z) => z.im == 0.0 && z.re > 0.0,
        }
    }
}

impl From<f64> for QValue {
    fn from(x: f64) -> Self {
        QValue::Float(Complex64::new(x, 0.0))
    }
}

impl From<Complex64> for QValue {
    fn from(z: Complex64) -> Self {
        QValue::Float(z)
    }
}

impl From<BigRational> for QValue {
    fn from(r: BigRational) -> Self {
        QValue::Exact(r)
    }
}

impl From<i64> for QValue {
    fn from(c: i64) -> Self {
        QValue::Exact(BigRational::from_integer(BigInt::from(c)))
    }
}

impl FromStr for QValue {
    type Err = Error;

    /// Accepts `p/r` or an integer (exact), a decimal literal (float), or
    /// `a+bi` / `bi` (complex float).
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty q value".into()));
        }
        let bad = || Error::Parse(format!("cannot parse q value {s:?}"));
        if let Some(body) = t.strip_suffix('i') {
            // find the sign that separates the real and imaginary parts,
            // skipping a leading sign and exponent signs
            let bytes = body.as_bytes();
            let split = (1..bytes.len())
                .rev()
                .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
            let (re, im) = match split {
                Some(k) => (&body[..k], &body[k..]),
                None => ("0", body),
            };
            let im = match im {
                "" | "+" => "1",
                "-" => "-1",
                other => other,
            };
            let re: f64 = re.parse().map_err(|_| bad())?;
            let im: f64 = im.parse().map_err(|_| bad())?;
            return Ok(QValue::Float(Complex64::new(re, im)));
        }
        if let Some((p, r)) = t.split_once('/') {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let r: BigInt = r.parse().map_err(|_| bad())?;
            if r.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            return Ok(QValue::Exact(BigRational::new(p, r)));
        }
        if let Ok(k) = t.parse::<BigInt>() {
            return Ok(QValue::Exact(BigRational::from_integer(k)));
        }
        let x: f64 = t.parse().map_err(|_| bad())?;
        if !x.is_finite() {
            return Err(bad());
        }
        Ok(QValue::Float(Complex64::new(x, 0.0)))
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QValue::Exact(r) if r.is_integer() => write!(f, "{}", r.numer()),
            QValue::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            QValue::Float(z) if z.im == 0.0 => write!(f, "{:?}", z.re),
            QValue::Float(z) => {
                let sign = if z.im < 0.0 { '-' } else { '+' };
                write!(f, "{:?}{}{:?}i", z.re, sign, z.im.abs())
            }
        }
    }
}

/// Outcome of the admissibility test, with the reason on rejection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissibility {
    pub admissible: bool,
    pub reason: Option<String>,
}

impl Admissibility {
    fn ok() -> Self {
        Admissibility {
            admissible: true,
            reason: None,
        }
    }

    fn reject(reason: impl Into<String>) -> Self {
        Admissibility {
            admissible: false,
            reason: Some(reason.into()),
        }
    }
}

/// `q` is admissible for `n` when `q != 0`, `q != -1` and `q^k != 1` for `1 <= k <= n`.
pub fn is_admissible(q: &QValue, n: usize) -> Admissibility {
    match q {
        QValue::Exact(r) => {
            if r.is_zero() {
                return Admissibility::reject("q = 0 is excluded");
            }
            if *r == -BigRational::one() {
                return Admissibility::reject("q = -1 forbidden by f-generator definition");
            }
            // the only rational roots of unity are 1 and -1
            if r.is_one() && n >= 1 {
                return Admissibility::reject("q is a 1-th root of unity");
            }
            Admissibility::ok()
        }
        QValue::Float(z) => {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Admissibility::reject("q is not finite");
            }
            if z.norm() < ROOT_TOL {
                return Admissibility::reject("q = 0 is excluded");
            }
            if (z + 1.0).norm() < ROOT_TOL {
                return Admissibility::reject("q = -1 forbidden by f-generator definition");
            }
            let mut pw = Complex64::new(1.0, 0.0);
            for k in 1..=n {
                pw *= z;
                if (pw - 1.0).norm() < ROOT_TOL {
                    return Admissibility::reject(format!("q is a {k}-th root of unity"));
                }
            }
            Admissibility::ok()
        }
    }
}

/// An admissible specialization point for algebras on `n_context` letters.
#[derive(Clone, Debug, PartialEq)]
pub struct QPoint {
    value: QValue,
    n_context: usize,
}

impl QPoint {
    pub fn new(value: impl Into<QValue>, n_context: usize) -> Result<Self> {
        let value = value.into();
        let verdict = is_admissible(&value, n_context);
        if !verdict.admissible {
            return Err(Error::Inadmissible {
                reason: verdict.reason.unwrap_or_default(),
            });
        }
        Ok(QPoint { value, n_context })
    }

    pub fn parse(text: &str, n_context: usize) -> Result<Self> {
        Self::new(text.parse::<QValue>()?, n_context)
    }

    pub fn value(&self) -> &QValue {
        &self.value
    }

    pub fn to_complex(&self) -> Complex64 {
        self.value.to_complex()
    }

    pub fn n_context(&self) -> usize {
        self.n_context
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}
