//! Sparse multivariate Laurent polynomials over `Z[t, 1/t]`.
//!
//! Every polynomial carries the [`VarSet`] it was built over; arithmetic
//! between polynomials over different variable sets is a programming error
//! and panics.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Signed};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Exponent vector, one signed entry per declared variable.
pub type Exponent = Vec<i32>;

/// Ordered, named list of variables.
#[derive(Clone)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VarSet(names.into_iter().map(Into::into).collect())
    }

    /// `x1, ..., xn`.
    pub fn x(n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    /// `y1, ..., ym`.
    pub fn y(m: usize) -> Self {
        Self::new((1..=m).map(|i| format!("y{i}")))
    }

    /// `x1, ..., xn, y1, ..., ym`.
    pub fn xy(n: usize, m: usize) -> Self {
        Self::new(
            (1..=n)
                .map(|i| format!("x{i}"))
                .chain((1..=m).map(|j| format!("y{j}"))),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarSet {}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct XPoly {
    vars: VarSet,
    terms: BTreeMap<Exponent, LaurentPoly>,
}

impl XPoly {
    pub fn zero(vars: &VarSet) -> Self {
        XPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, LaurentPoly::one())
    }

    pub fn constant(vars: &VarSet, c: LaurentPoly) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    /// The variable with 0-based index `i`.
    pub fn var(vars: &VarSet, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, LaurentPoly::one())
    }

    pub fn monomial(vars: &VarSet, exp: Exponent, c: LaurentPoly) -> Self {
        assert_eq!(exp.len(), vars.len(), "exponent length must match variable count");
        let mut p = Self::zero(vars);
        p.add_term(exp, c);
        p
    }

    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, LaurentPoly)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponent, LaurentPoly)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> LaurentPoly {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Adds `c * x^exp` in place.
    pub fn add_term(&mut self, exp: Exponent, c: LaurentPoly) {
        debug_assert_eq!(exp.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The value if this polynomial has only a constant term (or is zero).
    pub fn as_constant(&self) -> Option<LaurentPoly> {
        match self.terms.len() {
            0 => Some(LaurentPoly::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        XPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x * c))
                .collect(),
        }
    }

    /// Multiplies by `x^shift`.
    pub fn mul_monomial(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.nvars());
        XPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exp(e, shift), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every exponent, collecting colliding terms.
    pub fn map_exponents(&self, mut f: impl FnMut(&[i32]) -> Exponent) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// Re-expresses over `target`; `mapping[i]` is the index in `target` of
    /// variable `i` of `self`.
    pub fn embed(&self, target: &VarSet, mapping: &[usize]) -> Self {
        assert_eq!(mapping.len(), self.nvars());
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &x) in e.iter().enumerate() {
                ne[mapping[i]] += x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Re-expresses over `target` by matching variable names. Panics if a
    /// variable that actually occurs is missing from `target`.
    pub fn embed_by_name(&self, target: &VarSet) -> Self {
        let mapping: Vec<usize> = (0..self.nvars())
            .map(|i| {
                let name = self.vars.name(i);
                target.index_of(name).unwrap_or_else(|| {
                    assert!(
                        self.terms.keys().all(|e| e[i] == 0),
                        "variable {name} missing from target set"
                    );
                    usize::MAX
                })
            })
            .collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &x) in e.iter().enumerate() {
                if x != 0 {
                    ne[mapping[i]] += x;
                }
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&[i32], &LaurentPoly) -> bool) -> Self {
        XPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, c)| keep(e, c))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps the terms of total degree at most `cap`.
    pub fn truncate_degree(&self, cap: i32) -> Self {
        self.filter(|e, _| e.iter().sum::<i32>() <= cap)
    }

    /// Product with terms of total degree above `cap` discarded.
    pub fn mul_truncated(&self, rhs: &XPoly, cap: i32) -> XPoly {
        self.assert_same_vars(rhs);
        let mut out = XPoly::zero(&self.vars);
        for (ea, ca) in &self.terms {
            let da: i32 = ea.iter().sum();
            for (eb, cb) in &rhs.terms {
                if da + eb.iter().sum::<i32>() <= cap {
                    out.add_term(add_exp(ea, eb), ca * cb);
                }
            }
        }
        out
    }

    /// Total degrees `(min, max)` over the terms.
    pub fn degree_range(&self) -> Option<(i32, i32)> {
        let degs = self.terms.keys().map(|e| e.iter().sum::<i32>());
        degs.fold(None, |acc, d| match acc {
            None => Some((d, d)),
            Some((lo, hi)) => Some((lo.min(d), hi.max(d))),
        })
    }

    /// Largest exponent of variable `i` (0 for the zero polynomial).
    pub fn max_exponent(&self, i: usize) -> i32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn min_exponent(&self, i: usize) -> i32 {
        self.terms.keys().map(|e| e[i]).min().unwrap_or(0)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exchanges variables `i` and `j` (0-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        self.map_exponents(|e| {
            let mut e = e.to_vec();
            e.swap(i, j);
            e
        })
    }

    /// Divides every coefficient exactly by `c`.
    pub fn exact_div_scalar(&self, c: &LaurentPoly) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, x) in &self.terms {
            terms.insert(e.clone(), x.exact_div(c)?);
        }
        Ok(XPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Exact quotient by `x_i - x_j` (0-based, `i != j`).
    ///
    /// Terms are grouped by their exponents outside `{i, j}` together with
    /// `e_i + e_j`; each group is a binary form and is divided by synthetic
    /// division from the top `x_i`-degree down. The final carry is the
    /// remainder and must vanish.
    pub fn exact_div_linear(&self, i: usize, j: usize) -> Result<Self> {
        assert!(i != j && i < self.nvars() && j < self.nvars());
        type Group = BTreeMap<i32, LaurentPoly>;
        let mut groups: BTreeMap<(Exponent, i32), Group> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            key[i] = 0;
            key[j] = 0;
            groups
                .entry((key, e[i] + e[j]))
                .or_default()
                .insert(e[i], c.clone());
        }
        let mut out = XPoly::zero(&self.vars);
        for ((rest, total), group) in groups {
            let top = *group.keys().next_back().unwrap();
            let bottom = *group.keys().next().unwrap();
            // carry = q_{k-1} = c_k + q_k; quotient term q_k * x_i^k x_j^(total-1-k).
            let mut carry = LaurentPoly::zero();
            for k in (bottom..=top).rev() {
                if let Some(c) = group.get(&k) {
                    carry += c;
                }
                if k == bottom {
                    break;
                }
                if !carry.is_zero() {
                    let mut e = rest.clone();
                    e[i] = k - 1;
                    e[j] = total - k;
                    out.add_term(e, carry.clone());
                }
            }
            if !carry.is_zero() {
                return Err(Error::NotDivisible {
                    numerator: self.to_string(),
                    divisor: format!("{} - {}", self.vars.name(i), self.vars.name(j)),
                });
            }
        }
        Ok(out)
    }

    /// Exact quotient by `divisor`, which must be a nonzero constant, a
    /// single term, or `c * (x_i - x_j)` with `c` a Laurent polynomial in `t`.
    pub fn exact_div(&self, divisor: &XPoly) -> Result<Self> {
        self.assert_same_vars(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let terms: Vec<_> = divisor.terms.iter().collect();
        if terms.len() == 1 {
            let (e, c) = terms[0];
            let neg: Vec<i32> = e.iter().map(|x| -x).collect();
            return self.exact_div_scalar(c).map(|q| q.mul_monomial(&neg));
        }
        if terms.len() == 2 {
            let (e0, c0) = terms[0];
            let (e1, c1) = terms[1];
            let unit = |e: &[i32]| {
                let nz: Vec<usize> = (0..e.len()).filter(|&k| e[k] != 0).collect();
                (nz.len() == 1 && e[nz[0]] == 1).then(|| nz[0])
            };
            if let (Some(a), Some(b)) = (unit(e0), unit(e1)) {
                if c0 == &(-c1) {
                    // divisor = c1 * (x_b - x_a)
                    return self.exact_div_scalar(c1)?.exact_div_linear(b, a);
                }
            }
        }
        Err(Error::UnsupportedDivisor(divisor.to_string()))
    }

    fn assert_same_vars(&self, other: &XPoly) {
        assert!(
            self.vars == other.vars,
            "variable sets differ: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    fn render_monomial(&self, e: &[i32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| {
                if x == 1 {
                    self.vars.name(i).to_string()
                } else {
                    format!("{}^{}", self.vars.name(i), x)
                }
            })
            .collect();
        parts.join("*")
    }
}

pub(crate) fn add_exp(a: &[i32], b: &[i32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl fmt::Display for XPoly {
    /// Terms in decreasing lexicographic order: `(1-t)*x1^2*x2 - t*x2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = self.render_monomial(e);
            let (neg, body) = match c.as_monomial() {
                Some((_, x)) if x.is_negative() => (true, (-c).compact()),
                _ if c.needs_parens() && (!mono.is_empty() || self.terms.len() > 1) => (false, format!("({})", c.compact())),
                _ => (false, c.compact()),
            };
            let sep = match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            f.write_str(sep)?;
            if mono.is_empty() {
                f.write_str(&body)?;
            } else if c.as_monomial().is_some_and(|(e, x)| e == 0 && x.abs().is_one()) {
                f.write_str(&mono)?;
            } else {
                write!(f, "{body}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly[{}]({})", self.vars.names().join(","), self)
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        self.assert_same_vars(rhs);
        let mut out = XPoly::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exp(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<XPoly> for XPoly {
            type Output = XPoly;
            fn $method(self, rhs: XPoly) -> XPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&XPoly> for XPoly {
            type Output = XPoly;
            fn $method(self, rhs: &XPoly) -> XPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<XPoly> for &XPoly {
            type Output = XPoly;
            fn $method(self, rhs: XPoly) -> XPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&XPoly> for XPoly {
    fn add_assign(&mut self, rhs: &XPoly) {
        self.assert_same_vars(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl AddAssign<XPoly> for XPoly {
    fn add_assign(&mut self, rhs: XPoly) {
        self.assert_same_vars(&rhs);
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&XPoly> for XPoly {
    fn sub_assign(&mut self, rhs: &XPoly) {
        self.assert_same_vars(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::lp;

    fn x2() -> VarSet {
        VarSet::x(2)
    }

    fn mono(vars: &VarSet, e: &[i32]) -> XPoly {
        XPoly::monomial(vars, e.to_vec(), LaurentPoly::one())
    }

    #[test]
    fn divide_difference_of_squares() {
        let v = x2();
        let num = mono(&v, &[2, 0]) - mono(&v, &[0, 2]);
        let d = mono(&v, &[1, 0]) - mono(&v, &[0, 1]);
        assert_eq!(num.exact_div(&d).unwrap(), mono(&v, &[1, 0]) + mono(&v, &[0, 1]));
    }

    #[test]
    fn divide_zero_numerator() {
        let v = x2();
        let num = mono(&v, &[1, 1]) - mono(&v, &[1, 1]);
        assert!(num.exact_div_linear(0, 1).unwrap().is_zero());
    }

    #[test]
    fn divide_hand_factorization() {
        let v = x2();
        let num = mono(&v, &[2, 1]) - mono(&v, &[1, 2]);
        assert_eq!(num.exact_div_linear(0, 1).unwrap(), mono(&v, &[1, 1]));
    }

    #[test]
    fn laurent_exponents_divide() {
        let v = x2();
        // (x1/x2 - x2/x1) = (x1 - x2)(x1 + x2)/(x1 x2)
        let num = mono(&v, &[1, -1]) - mono(&v, &[-1, 1]);
        let q = num.exact_div_linear(0, 1).unwrap();
        assert_eq!(q, mono(&v, &[0, -1]) + mono(&v, &[-1, 0]));
    }

    #[test]
    fn non_divisible_is_reported() {
        let v = x2();
        let num = mono(&v, &[2, 0]) + mono(&v, &[0, 2]);
        assert!(matches!(num.exact_div_linear(0, 1), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn division_with_t_coefficient() {
        let v = x2();
        let c = lp(&[(0, 1), (1, -1)]);
        let d = (mono(&v, &[1, 0]) - mono(&v, &[0, 1])).scale(&c);
        let q = mono(&v, &[3, 0]) + mono(&v, &[1, 2]);
        assert_eq!((&q * &d).exact_div(&d).unwrap(), q);
    }

    #[test]
    fn rendering() {
        let v = x2();
        let p = mono(&v, &[2, 1]).scale(&lp(&[(0, 1), (1, -1)]))
            - mono(&v, &[0, 1]).scale(&LaurentPoly::t_pow(1))
            + XPoly::one(&v);
        assert_eq!(p.to_string(), "(1-t)*x1^2*x2 - t*x2 + 1");
        assert_eq!(mono(&v, &[-1, 0]).to_string(), "x1^-1");
    }
}
