//! Laurent polynomials in `t` with arbitrary-precision integer coefficients.
//!
//! Stored densely: `coeffs[k]` is the coefficient of `t^(low + k)`. The first
//! and last entries are always nonzero, and the zero polynomial is the empty
//! vector with `low == 0`, so derived equality is equality of canonical forms.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: exp,
            coeffs: vec![c],
        }
    }

    /// `t^exp`.
    pub fn t_pow(exp: i32) -> Self {
        Self::monomial(1, exp)
    }

    /// `1 - t^exp`.
    pub fn one_minus_t_pow(exp: i32) -> Self {
        Self::one() - Self::t_pow(exp)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i32, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low) as usize + 1];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::normalized(low, coeffs)
    }

    /// Dense constructor: `coeffs[k]` multiplies `t^(low + k)`.
    pub fn from_dense(low: i32, coeffs: Vec<BigInt>) -> Self {
        Self::normalized(low, coeffs)
    }

    fn normalized(mut low: i32, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        if lead_zeros > 0 {
            coeffs.drain(..lead_zeros);
            low += lead_zeros as i32;
        }
        LaurentPoly { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    /// If this is a single term `c * t^e`, returns `(e, c)`.
    pub fn as_monomial(&self) -> Option<(i32, &BigInt)> {
        (self.coeffs.len() == 1).then(|| (self.low, &self.coeffs[0]))
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + shift,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `t -> t^k` for a positive `k`.
    pub fn substitute_t_pow(&self, k: i32) -> Self {
        assert!(k > 0, "substitution t -> t^k needs k > 0");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Value at `t = 0`; `None` when a negative power of `t` is present.
    pub fn at_zero(&self) -> Option<BigInt> {
        if self.low < 0 {
            None
        } else {
            Some(self.coeff(0))
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Exact quotient `self / divisor`, failing when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Both operands shifted to have a nonzero constant term; the quotient
        // of such polynomials, if it exists in the Laurent ring, is a polynomial.
        let num = &self.coeffs;
        let den = &divisor.coeffs;
        if den.len() > num.len() {
            return Err(self.not_divisible(divisor));
        }
        let mut rem: Vec<BigInt> = num.clone();
        let qlen = num.len() - den.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        let lead = den.last().unwrap();
        for k in (0..qlen).rev() {
            let top = &rem[k + den.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(self.not_divisible(divisor));
            }
            for (j, d) in den.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(self.not_divisible(divisor));
        }
        Ok(Self::normalized(self.low - divisor.low, quot))
    }

    fn not_divisible(&self, divisor: &LaurentPoly) -> Error {
        Error::NotDivisible {
            numerator: self.to_string(),
            divisor: divisor.to_string(),
        }
    }

    /// Rendering without spaces, as used for coefficients inside larger
    /// expressions: `1-t`, `t^-1+2+t^3`.
    pub fn compact(&self) -> String {
        self.render(false)
    }

    /// True when rendering needs parentheses as a factor.
    pub fn needs_parens(&self) -> bool {
        self.num_terms() > 1
    }

    fn render(&self, spaced: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg, spaced) {
                (0, true, _) => out.push('-'),
                (0, false, _) => {}
                (_, true, true) => out.push_str(" - "),
                (_, false, true) => out.push_str(" + "),
                (_, true, false) => out.push('-'),
                (_, false, false) => out.push('+'),
            }
            let tpart = match e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            if tpart.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&tpart);
            } else {
                out.push_str(&format!("{mag}*{tpart}"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// `t^-1 + 2 + t^3`, increasing exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.render(true))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

fn add_into(lhs: &LaurentPoly, rhs: &LaurentPoly, sign: i8) -> LaurentPoly {
    if rhs.is_zero() {
        return lhs.clone();
    }
    if lhs.is_zero() {
        return if sign > 0 { rhs.clone() } else { -rhs };
    }
    let low = lhs.low.min(rhs.low);
    let high = lhs.high_degree().unwrap().max(rhs.high_degree().unwrap());
    let mut coeffs = vec![BigInt::zero(); (high - low) as usize + 1];
    for (k, c) in lhs.coeffs.iter().enumerate() {
        coeffs[(lhs.low - low) as usize + k] += c;
    }
    for (k, c) in rhs.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(rhs.low - low) as usize + k];
        if sign > 0 {
            *slot += c;
        } else {
            *slot -= c;
        }
    }
    LaurentPoly::normalized(low, coeffs)
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_into(self, rhs, 1)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_into(self, rhs, -1)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::normalized(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl SubAssign<LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self = &*self - &rhs;
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, x| acc * x)
    }
}

/// Shorthand for building small polynomials in tests and tables:
/// `lp(&[(0, 1), (1, -1)])` is `1 - t`.
pub fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let a = lp(&[(0, 1), (1, -1)]);
        let b = lp(&[(0, 1), (1, 1)]);
        assert_eq!(&a * &b, lp(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn unit_cancellation() {
        assert_eq!(LaurentPoly::t_pow(-1) * LaurentPoly::t_pow(1), LaurentPoly::one());
    }

    #[test]
    fn product_of_geometric_factors() {
        let p = LaurentPoly::one_minus_t_pow(1) * LaurentPoly::one_minus_t_pow(2);
        assert_eq!(p, lp(&[(0, 1), (1, -1), (2, -1), (3, 1)]));
    }

    #[test]
    fn exact_division_examples() {
        let one_minus_t = LaurentPoly::one_minus_t_pow(1);
        assert_eq!(
            LaurentPoly::one_minus_t_pow(2).exact_div(&one_minus_t).unwrap(),
            lp(&[(0, 1), (1, 1)])
        );
        assert_eq!(one_minus_t.exact_div(&one_minus_t).unwrap(), LaurentPoly::one());
        let num = lp(&[(1, 1), (3, -1)]);
        assert_eq!(
            num.exact_div(&LaurentPoly::one_minus_t_pow(2)).unwrap(),
            LaurentPoly::t_pow(1)
        );
    }

    #[test]
    fn exact_division_rejects_remainders() {
        let err = lp(&[(0, 1), (1, 1)]).exact_div(&LaurentPoly::one_minus_t_pow(1));
        assert!(matches!(err, Err(Error::NotDivisible { .. })));
        let err = LaurentPoly::constant(3).exact_div(&LaurentPoly::constant(2));
        assert!(matches!(err, Err(Error::NotDivisible { .. })));
        assert!(matches!(
            LaurentPoly::one().exact_div(&LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn division_by_negative_powers() {
        let a = lp(&[(-2, 3), (0, -3)]);
        let b = lp(&[(-3, 1), (-1, -1)]);
        assert_eq!(a.exact_div(&b).unwrap(), LaurentPoly::monomial(3, 1));
    }

    #[test]
    fn rendering() {
        assert_eq!(lp(&[(-1, 1), (0, 2), (3, 1)]).to_string(), "t^-1 + 2 + t^3");
        assert_eq!(lp(&[(0, 1), (1, -1)]).to_string(), "1 - t");
        assert_eq!(lp(&[(0, 1), (1, -1)]).compact(), "1-t");
        assert_eq!(lp(&[(2, -3)]).to_string(), "-3*t^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn canonical_form_strips_zeros() {
        let p = LaurentPoly::from_dense(-2, vec![0.into(), 0.into(), 1.into(), 0.into()]);
        assert_eq!(p, LaurentPoly::one());
        assert_eq!(p.low_degree(), Some(0));
        assert_eq!(lp(&[(1, 1), (1, -1)]), LaurentPoly::zero());
    }
}
