use std::fmt;

use super::{ExactError, Rat, Scalar, UniPoly};

/// Element of ℚ(t) in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(UniPoly::zero()));
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead = den.leading().expect("nonzero").recip();
        Ok(RatFunc {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        let m = UniPoly::monomial(<Rat as Scalar>::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc {
                num: UniPoly::one(),
                den: m,
            }
        }
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    /// Order of the pole at `t = 0`: positive for a pole, negative for a zero
    /// of that multiplicity.
    pub fn pole_order_at_zero(&self) -> Result<i64, ExactError> {
        let n = self.num.ord_at_zero().ok_or(ExactError::ZeroFunction)?;
        let d = self.den.ord_at_zero().expect("denominator is nonzero");
        Ok(d as i64 - n as i64)
    }

    /// Value at `t = 0` of the reduced function.
    pub fn eval_at_zero(&self) -> Result<Rat, ExactError> {
        let d0 = self.den.coeff(0);
        if Scalar::is_zero(&d0) {
            let order = self.pole_order_at_zero().expect("a zero function has denominator 1");
            return Err(ExactError::PoleAtZero { order });
        }
        Ok(self.num.coeff(0) / d0)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(<Rat as Scalar>::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0)),
            _ => None,
        }
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num.add(&rhs.num), self.den.clone()).expect("nonzero denominator");
        }
        Self::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
        .expect("nonzero denominator")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero denominator")
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()).expect("nonzero numerator"))
        }
    }
}

impl From<Rat> for RatFunc {
    fn from(c: Rat) -> Self {
        Self::constant(c)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

/// `num` when the denominator is 1, otherwise `(num)/(den)` with parentheses
/// dropped around single-term parts.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn part(p: &UniPoly) -> String {
            let terms = p.coeffs().iter().filter(|c| !Scalar::is_zero(*c)).count();
            let s = p.to_string();
            if terms > 1 || s.contains('/') {
                format!("({s})")
            } else {
                s
            }
        }
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", part(&self.num), part(&self.den))
        }
    }
}
