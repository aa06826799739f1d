//! Dense univariate polynomials in α over the rationals.

use super::Rat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in α with rational coefficients, indexed by degree.
///
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlphaPoly {
    coeffs: Vec<Rat>,
}

impl AlphaPoly {
    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        AlphaPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = AlphaPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial α.
    pub fn alpha() -> Self {
        AlphaPoly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    /// c·α^d
    pub fn monomial(c: Rat, d: usize) -> Self {
        if c.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        AlphaPoly { coeffs }
    }

    /// a·α + b
    pub fn linear(a: impl Into<Rat>, b: impl Into<Rat>) -> Self {
        let mut p = AlphaPoly {
            coeffs: vec![b.into(), a.into()],
        };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = AlphaPoly { coeffs };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, Rat::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, c: &Rat) -> AlphaPoly {
        if c.is_zero() {
            return AlphaPoly::zero();
        }
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, a: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + c;
        }
        acc
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, divisor: &AlphaPoly) -> (AlphaPoly, AlphaPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() * &lead_inv;
            let shift = rd - dd;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let delta = c * &factor;
                rem.coeffs[i + shift] -= &delta;
            }
            rem.trim();
            quot[shift] = factor;
        }
        (AlphaPoly::from_coeffs(quot), rem)
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    ///
    /// Exactness over speed: degrees stay small (< 60) at desk scale.
    pub fn gcd(&self, other: &AlphaPoly) -> AlphaPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.make_monic();
        a
    }

    fn make_monic(&mut self) {
        if let Some(lc) = self.leading() {
            if !lc.is_one() {
                let inv = lc.inv().unwrap();
                for c in &mut self.coeffs {
                    *c *= &inv;
                }
            }
        }
    }

    /// Common denominator of all coefficients.
    pub fn coeff_denominator_lcm(&self) -> num_bigint::BigInt {
        use num_integer::Integer;
        use num_traits::One;
        let mut l = num_bigint::BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        l
    }

    /// Gcd of the (integer) numerators after scaling by `mult`.
    pub fn int_content(&self, mult: &num_bigint::BigInt) -> num_bigint::BigInt {
        use num_integer::Integer;
        use num_traits::Zero;
        let mut g = num_bigint::BigInt::zero();
        for c in &self.coeffs {
            let scaled = c * &Rat::from_bigint(mult.clone());
            debug_assert!(num_traits::One::is_one(scaled.denom()));
            g = g.gcd(scaled.numer());
        }
        g
    }
}

impl Add for &AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) + &rhs.coeff(i));
        }
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl Sub for &AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) - &rhs.coeff(i));
        }
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl Mul for &AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for AlphaPoly {
    /// Renders highest degree first, e.g. `2α^2-α+3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit_mag = mag.is_one();
            if d == 0 || !unit_mag {
                write!(f, "{}", mag)?;
            }
            match d {
                0 => {}
                1 => write!(f, "α")?,
                _ => write!(f, "α^{}", d)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> AlphaPoly {
        AlphaPoly::from_coeffs(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    #[test]
    fn arithmetic_and_trim() {
        let a = p(&[1, 1]); // α+1
        let b = p(&[-1, 1]); // α-1
        assert_eq!(&a * &b, p(&[-1, 0, 1])); // α²-1
        assert_eq!(&a - &a, AlphaPoly::zero());
        assert_eq!((&a + &b).degree(), Some(1));
    }

    #[test]
    fn div_rem_exact() {
        let prod = p(&[-1, 0, 1]);
        let (q, r) = prod.div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[2]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[-1, 0, 1]) * &p(&[2, 2]); // (α²-1)·2(α+1)
        let b = &p(&[1, 1]) * &p(&[3]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[0]).gcd(&p(&[0])), AlphaPoly::zero());
    }

    #[test]
    fn eval_horner() {
        let a = p(&[1, 2, 1]); // (α+1)²
        assert_eq!(a.eval(&Rat::from(2)), Rat::from(9));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[3, -1, 2]).to_string(), "2α^2-α+3");
        assert_eq!(p(&[0, 1]).to_string(), "α");
        assert_eq!(p(&[-1, -1]).to_string(), "-α-1");
        assert_eq!(AlphaPoly::zero().to_string(), "0");
    }
}
