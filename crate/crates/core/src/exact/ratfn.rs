//! Rational functions in α: the coefficient field ℚ(α).

use super::{AlphaPoly, ExactError, Rat};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// An element of ℚ(α) in canonical form: `gcd(num, den) = 1`, `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlphaRat {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl AlphaRat {
    /// Builds `num/den` in canonical form. Errors on a zero denominator.
    pub fn new(num: AlphaPoly, den: AlphaPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: AlphaPoly, den: AlphaPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return AlphaRat {
                num: AlphaPoly::zero(),
                den: AlphaPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, r1) = num.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.div_rem(&g);
        debug_assert!(r2.is_zero());
        let lc = den.leading().unwrap().clone();
        if lc.is_one() {
            AlphaRat { num, den }
        } else {
            let inv = lc.inv().unwrap();
            AlphaRat {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        AlphaRat {
            num: AlphaPoly::zero(),
            den: AlphaPoly::one(),
        }
    }

    pub fn one() -> Self {
        AlphaRat {
            num: AlphaPoly::one(),
            den: AlphaPoly::one(),
        }
    }

    pub fn from_poly(p: AlphaPoly) -> Self {
        AlphaRat {
            num: p,
            den: AlphaPoly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        AlphaRat::from_poly(AlphaPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        AlphaRat::from_rat(Rat::from(n))
    }

    /// The monomial α.
    pub fn alpha() -> Self {
        AlphaRat::from_poly(AlphaPoly::alpha())
    }

    pub fn num(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn den(&self) -> &AlphaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return AlphaRat::zero();
        }
        AlphaRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Exact specialization at a rational α. Errors when the denominator
    /// vanishes there (pole).
    pub fn evaluate_at(&self, a: &Rat) -> Result<Rat, ExactError> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return Err(ExactError::Pole(a.clone(), self.den.clone()));
        }
        Ok(&self.num.eval(a) / &d)
    }

    /// Numerator/denominator pair scaled to coprime integer coefficients.
    /// The denominator stays positive-leading (it is monic before scaling).
    /// Used for display.
    fn integer_form(&self) -> (AlphaPoly, AlphaPoly) {
        if self.num.is_zero() {
            return (AlphaPoly::zero(), AlphaPoly::one());
        }
        use num_bigint::BigInt;
        use num_integer::Integer;
        let l1 = self.num.coeff_denominator_lcm();
        let l2 = self.den.coeff_denominator_lcm();
        let l = l1.lcm(&l2);
        let lr = Rat::from_bigint(l);
        let n = self.num.scale(&lr);
        let d = self.den.scale(&lr);
        let one = BigInt::from(1);
        let g = n.int_content(&one).gcd(&d.int_content(&one));
        let ginv = Rat::from_bigint(g).inv().unwrap();
        (n.scale(&ginv), d.scale(&ginv))
    }
}

impl Add for &AlphaRat {
    type Output = AlphaRat;
    fn add(self, rhs: &AlphaRat) -> AlphaRat {
        AlphaRat::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &AlphaRat {
    type Output = AlphaRat;
    fn sub(self, rhs: &AlphaRat) -> AlphaRat {
        AlphaRat::normalized(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &AlphaRat {
    type Output = AlphaRat;
    fn mul(self, rhs: &AlphaRat) -> AlphaRat {
        if self.is_zero() || rhs.is_zero() {
            return AlphaRat::zero();
        }
        AlphaRat::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &AlphaRat {
    type Output = AlphaRat;
    fn div(self, rhs: &AlphaRat) -> AlphaRat {
        assert!(!rhs.is_zero(), "division by zero in ℚ(α)");
        AlphaRat::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &AlphaRat {
    type Output = AlphaRat;
    fn neg(self) -> AlphaRat {
        AlphaRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl AddAssign<&AlphaRat> for AlphaRat {
    fn add_assign(&mut self, rhs: &AlphaRat) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for AlphaRat {
    /// Renders `p(α)/q(α)` with integer coefficients, e.g. `-1/(α+3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.integer_form();
        let multi = |p: &AlphaPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if d.is_one() {
            return write!(f, "{}", n);
        }
        if multi(&n) {
            write!(f, "({})", n)?;
        } else {
            write!(f, "{}", n)?;
        }
        // the denominator may stay bare only when re-parsing is
        // unambiguous: a plain integer, or a power of α with unit
        // coefficient ("2α" would re-parse as (…/2)·α)
        let bare = !multi(&d)
            && (d.degree() == Some(0) || d.leading().map_or(false, |c| c.is_one()));
        if bare {
            write!(f, "/{}", d)
        } else {
            write!(f, "/({})", d)
        }
    }
}

impl fmt::Debug for AlphaRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
