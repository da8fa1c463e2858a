//! Finite linear combinations of basis functions indexed by partitions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// Schur functions.
    S,
    /// Modified Hall-Littlewood functions `Q'`.
    Qp,
    Q,
    P,
}

impl Basis {
    pub fn label(self) -> &'static str {
        match self {
            Basis::S => "S",
            Basis::Qp => "Qp",
            Basis::Q => "Q",
            Basis::P => "P",
        }
    }

    /// Symbol used in text rendering (`Q'` for the modified family).
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Qp => "Q'",
            b => b.label(),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Basis::S),
            "Qp" | "Q'" | "qp" => Ok(Basis::Qp),
            "Q" => Ok(Basis::Q),
            "P" => Ok(Basis::P),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// `sum_lambda coeffs[lambda] * B_lambda`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    basis: Basis,
    coeffs: BTreeMap<Partition, LaurentPoly>,
}

impl BasisExpansion {
    pub fn zero(basis: Basis) -> Self {
        BasisExpansion {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn single(basis: Basis, lambda: Partition) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(lambda, LaurentPoly::one());
        e
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, LaurentPoly)>,
    {
        let mut e = Self::zero(basis);
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, LaurentPoly> {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> BTreeMap<Partition, LaurentPoly> {
        self.coeffs
    }

    /// Terms in increasing lexicographic order of partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> + '_ {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, lambda: Partition, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &BasisExpansion, c: &LaurentPoly) {
        assert_eq!(self.basis, other.basis, "adding expansions in different bases");
        for (p, x) in &other.coeffs {
            self.add_term(p.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.basis);
        out.add_scaled(self, c);
        out
    }

    /// Same coefficients, relabelled basis.
    pub fn relabel(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Partition, &LaurentPoly) -> LaurentPoly) -> Self {
        Self::from_terms(self.basis, self.coeffs.iter().map(|(p, c)| (p.clone(), f(p, c))))
    }
}

impl fmt::Display for BasisExpansion {
    /// `S[2,1] + t*S[3]`; multi-term coefficients are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let sym = self.basis.symbol();
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            let (neg, mag) = match c.as_monomial() {
                Some((_, k)) if k.is_negative() => (true, -c),
                _ => (false, c.clone()),
            };
            let sep = match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            f.write_str(sep)?;
            if !mag.is_one() {
                if mag.needs_parens() {
                    write!(f, "({})*", mag.compact())?;
                } else {
                    write!(f, "{}*", mag.compact())?;
                }
            }
            write!(f, "{sym}{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lp;
    use crate::partition::part;

    #[test]
    fn rendering() {
        let e = BasisExpansion::from_terms(
            Basis::S,
            [(part(&[3]), lp(&[(1, 1)])), (part(&[2, 1]), LaurentPoly::one())],
        );
        assert_eq!(e.to_string(), "S[2,1] + t*S[3]");
        let e = BasisExpansion::from_terms(
            Basis::Qp,
            [(part(&[2]), lp(&[(1, 1)])), (part(&[1, 1]), lp(&[(0, -1), (1, 1)]))],
        );
        assert_eq!(e.to_string(), "(-1+t)*Q'[1,1] + t*Q'[2]");
        let e = BasisExpansion::from_terms(Basis::Qp, [(Partition::empty(), lp(&[(0, -1)]))]);
        assert_eq!(e.to_string(), "-Q'[]");
        assert_eq!(BasisExpansion::zero(Basis::P).to_string(), "0");
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut e = BasisExpansion::single(Basis::S, part(&[1]));
        e.add_term(part(&[1]), lp(&[(0, -1)]));
        assert!(e.is_zero());
    }
}
