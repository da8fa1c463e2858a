//! Virtual alphabets: formal differences of finite multisets of monomial
//! letters, and Schur functions evaluated on them by Jacobi-Trudi.

use std::fmt;

use crate::algebra::{Exponent, LaurentPoly, VarSet, XPoly};
use crate::error::{Error, Result};
use crate::partition::{t_binomial, t_factorial, Partition};
use crate::report::Comparison;

/// A letter `t^tpow * x^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub tpow: i32,
    pub exp: Exponent,
}

impl Letter {
    pub fn new(tpow: i32, exp: Exponent) -> Self {
        Letter { tpow, exp }
    }

    /// `t^a` over `nvars` variables.
    pub fn t_power(nvars: usize, a: i32) -> Self {
        Letter::new(a, vec![0; nvars])
    }

    /// The variable with 0-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        Letter::new(0, exp)
    }

    pub fn mul(&self, other: &Letter) -> Letter {
        Letter::new(
            self.tpow + other.tpow,
            self.exp.iter().zip(&other.exp).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn pow(&self, k: i32) -> Letter {
        Letter::new(self.tpow * k, self.exp.iter().map(|e| e * k).collect())
    }

    /// Total degree in the variables.
    pub fn degree(&self) -> i32 {
        self.exp.iter().sum()
    }

    pub fn to_xpoly(&self, vars: &VarSet) -> XPoly {
        XPoly::monomial(vars, self.exp.clone(), LaurentPoly::t_pow(self.tpow))
    }
}

/// `plus - minus`, as multisets of letters over a fixed variable set.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    vars: VarSet,
    plus: Vec<Letter>,
    minus: Vec<Letter>,
}

impl Alphabet {
    pub fn new(vars: &VarSet, plus: Vec<Letter>, minus: Vec<Letter>) -> Self {
        let mut a = Alphabet {
            vars: vars.clone(),
            plus,
            minus,
        };
        a.normalize();
        a
    }

    pub fn empty(vars: &VarSet) -> Self {
        Self::new(vars, Vec::new(), Vec::new())
    }

    /// Every variable of `vars`, once.
    pub fn of_vars(vars: &VarSet) -> Self {
        let n = vars.len();
        Self::new(vars, (0..n).map(|i| Letter::var(n, i)).collect(), Vec::new())
    }

    /// The variables with the given 0-based indices.
    pub fn of_indices(vars: &VarSet, indices: impl IntoIterator<Item = usize>) -> Self {
        let n = vars.len();
        Self::new(vars, indices.into_iter().map(|i| Letter::var(n, i)).collect(), Vec::new())
    }

    /// The one-letter alphabet `t^a`.
    pub fn t_power(vars: &VarSet, a: i32) -> Self {
        Self::new(vars, vec![Letter::t_power(vars.len(), a)], Vec::new())
    }

    pub fn letter(vars: &VarSet, l: Letter) -> Self {
        Self::new(vars, vec![l], Vec::new())
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn plus(&self) -> &[Letter] {
        &self.plus
    }

    pub fn minus(&self) -> &[Letter] {
        &self.minus
    }

    pub fn is_positive(&self) -> bool {
        self.minus.is_empty()
    }

    /// Cancels letters occurring on both sides; sorts both multisets.
    fn normalize(&mut self) {
        self.plus.sort();
        self.minus.sort();
        let (mut p, mut m) = (Vec::new(), Vec::new());
        let (mut i, mut j) = (0, 0);
        while i < self.plus.len() && j < self.minus.len() {
            match self.plus[i].cmp(&self.minus[j]) {
                std::cmp::Ordering::Less => {
                    p.push(self.plus[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    m.push(self.minus[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        p.extend_from_slice(&self.plus[i..]);
        m.extend_from_slice(&self.minus[j..]);
        self.plus = p;
        self.minus = m;
    }

    fn assert_same_vars(&self, other: &Alphabet) {
        assert!(self.vars == other.vars, "alphabets over different variables");
    }

    pub fn add(&self, other: &Alphabet) -> Alphabet {
        self.assert_same_vars(other);
        let mut plus = self.plus.clone();
        plus.extend(other.plus.iter().cloned());
        let mut minus = self.minus.clone();
        minus.extend(other.minus.iter().cloned());
        Alphabet::new(&self.vars, plus, minus)
    }

    pub fn neg(&self) -> Alphabet {
        Alphabet::new(&self.vars, self.minus.clone(), self.plus.clone())
    }

    pub fn sub(&self, other: &Alphabet) -> Alphabet {
        self.add(&other.neg())
    }

    /// Product of alphabets: power sums multiply.
    pub fn mul(&self, other: &Alphabet) -> Alphabet {
        self.assert_same_vars(other);
        let prod = |a: &[Letter], b: &[Letter]| -> Vec<Letter> {
            a.iter().flat_map(|x| b.iter().map(move |y| x.mul(y))).collect()
        };
        let mut plus = prod(&self.plus, &other.plus);
        plus.extend(prod(&self.minus, &other.minus));
        let mut minus = prod(&self.plus, &other.minus);
        minus.extend(prod(&self.minus, &other.plus));
        Alphabet::new(&self.vars, plus, minus)
    }

    /// `A (1 - t)`: each letter `l` becomes `l - t l`.
    pub fn times_one_minus_t(&self) -> Alphabet {
        let one_minus_t = Alphabet::t_power(&self.vars, 0).sub(&Alphabet::t_power(&self.vars, 1));
        self.mul(&one_minus_t)
    }

    /// Re-expresses the letters over `target`, matching variables by name.
    pub fn embed(&self, target: &VarSet) -> Alphabet {
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| target.index_of(n).unwrap_or_else(|| panic!("variable {n} missing from target")))
            .collect();
        let mv = |l: &Letter| {
            let mut e = vec![0; target.len()];
            for (k, &x) in l.exp.iter().enumerate() {
                e[map[k]] += x;
            }
            Letter::new(l.tpow, e)
        };
        Alphabet::new(
            target,
            self.plus.iter().map(mv).collect(),
            self.minus.iter().map(mv).collect(),
        )
    }

    /// Parses expressions such as `x1+x2`, `1-x1-x2`, `t^2-x1`, `X*(1-t)`.
    ///
    /// Grammar: sums and differences of products of atoms; an atom is a
    /// nonnegative integer (that many letters `1`), `t`, a variable name of
    /// `vars`, `X` (all variables named `x..`), `Y` (all named `y..`), or a
    /// parenthesized expression. `^k` (k may be negative) raises a
    /// one-letter atom to a power.
    pub fn parse(s: &str, vars: &VarSet) -> Result<Alphabet> {
        let tokens = tokenize(s)?;
        let mut p = Parser {
            tokens,
            pos: 0,
            vars,
        };
        let a = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!("unexpected trailing input in {s:?}")));
        }
        Ok(a)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |l: &Letter| l.to_xpoly(&self.vars).to_string();
        if self.plus.is_empty() && self.minus.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for l in &self.plus {
            if !first {
                f.write_str(" + ")?;
            }
            f.write_str(&show(l))?;
            first = false;
        }
        for l in &self.minus {
            f.write_str(if first { "-" } else { " - " })?;
            f.write_str(&show(l))?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Int(text.parse().map_err(|_| Error::Parse(format!("bad integer {text}")))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    vars: &'a VarSet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Alphabet> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Alphabet> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Alphabet> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let k = match self.peek() {
            Some(Tok::Int(k)) => *k,
            _ => return Err(Error::Parse("expected an exponent after '^'".into())),
        };
        self.pos += 1;
        let k = if neg { -k } else { k } as i32;
        match (base.plus.as_slice(), base.minus.as_slice()) {
            ([l], []) => Ok(Alphabet::letter(self.vars, l.pow(k))),
            _ => Err(Error::Parse("only single letters can be raised to a power".into())),
        }
    }

    fn atom(&mut self) -> Result<Alphabet> {
        let n = self.vars.len();
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of alphabet expression".into()))?;
        self.pos += 1;
        match tok {
            Tok::Int(k) => Ok(Alphabet::new(
                self.vars,
                vec![Letter::t_power(n, 0); k as usize],
                Vec::new(),
            )),
            Tok::Ident(name) if name == "t" => Ok(Alphabet::t_power(self.vars, 1)),
            Tok::Ident(name) if name == "X" || name == "Y" => {
                let prefix = name.to_ascii_lowercase();
                let idx: Vec<usize> = (0..n)
                    .filter(|&i| {
                        let v = self.vars.name(i);
                        v.starts_with(&prefix) && v[1..].chars().all(|c| c.is_ascii_digit())
                    })
                    .collect();
                Ok(Alphabet::of_indices(self.vars, idx))
            }
            Tok::Ident(name) => match self.vars.index_of(&name) {
                Some(i) => Ok(Alphabet::letter(self.vars, Letter::var(n, i))),
                None => Err(Error::Parse(format!("unknown variable {name}"))),
            },
            Tok::Sym('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(inner)
            }
            Tok::Sym(c) => Err(Error::Parse(format!("unexpected {c:?}"))),
        }
    }
}

/// `h_0(A), ..., h_d(A)` from `sigma_z(A) = prod_b (1 - z b) / prod_a (1 - z a)`.
pub fn complete_functions(a: &Alphabet, d: usize) -> Vec<XPoly> {
    let vars = a.vars();
    let mut h = vec![XPoly::zero(vars); d + 1];
    h[0] = XPoly::one(vars);
    for l in a.plus() {
        let lp = l.to_xpoly(vars);
        for k in 1..=d {
            let prev = &h[k - 1] * &lp;
            h[k] += &prev;
        }
    }
    for l in a.minus() {
        let lp = l.to_xpoly(vars);
        for k in (1..=d).rev() {
            let prev = &h[k - 1] * &lp;
            h[k] -= &prev;
        }
    }
    h
}

/// `det(M)` for a square matrix of polynomials, by expansion along rows with
/// memoization over the set of used columns.
pub fn determinant(m: &[Vec<XPoly>], vars: &VarSet) -> XPoly {
    let k = m.len();
    if k == 0 {
        return XPoly::one(vars);
    }
    let mut dp: Vec<Option<XPoly>> = vec![None; 1 << k];
    dp[0] = Some(XPoly::one(vars));
    for mask in 0usize..(1 << k) {
        let Some(cur) = dp[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        if row == k {
            dp[mask] = Some(cur);
            continue;
        }
        for (j, entry) in m[row].iter().enumerate() {
            if mask & (1 << j) != 0 || entry.is_zero() {
                continue;
            }
            let higher = (mask >> (j + 1)).count_ones();
            let mut term = &cur * entry;
            if higher % 2 == 1 {
                term = -term;
            }
            let slot = &mut dp[mask | (1 << j)];
            match slot {
                Some(acc) => *acc += &term,
                None => *slot = Some(term),
            }
        }
    }
    dp[(1 << k) - 1].take().unwrap_or_else(|| XPoly::zero(vars))
}

/// Jacobi-Trudi determinant `det(h_{lambda_i - i + j})` from precomputed
/// complete functions (`h.len() > lambda_1 + l(lambda)` is sufficient).
pub fn schur_from_complete(lambda: &Partition, h: &[XPoly], vars: &VarSet) -> XPoly {
    let l = lambda.len();
    let entry = |i: usize, j: usize| {
        let k = lambda.part(i) as i64 - i as i64 + j as i64;
        if k < 0 {
            XPoly::zero(vars)
        } else {
            h.get(k as usize).cloned().unwrap_or_else(|| panic!("complete function h_{k} not supplied"))
        }
    };
    let m: Vec<Vec<XPoly>> = (0..l).map(|i| (0..l).map(|j| entry(i, j)).collect()).collect();
    determinant(&m, vars)
}

/// `S_lambda(A)`.
pub fn schur_eval(lambda: &Partition, a: &Alphabet) -> XPoly {
    let d = lambda.part(0) + lambda.len();
    let h = complete_functions(a, d);
    schur_from_complete(lambda, &h, a.vars())
}

/// `R(y, X) = prod_{x in X} (y - x)` for a positive alphabet `X`.
pub fn resultant(y: &Letter, x: &Alphabet) -> Result<XPoly> {
    if !x.is_positive() {
        return Err(Error::PreconditionViolation("resultant needs a positive alphabet".into()));
    }
    let vars = x.vars();
    let yp = y.to_xpoly(vars);
    Ok(x.plus().iter().fold(XPoly::one(vars), |acc, l| &acc * &(&yp - &l.to_xpoly(vars))))
}

/// `prod_{a in A, b in B} (a - b)`.
pub fn resultant_alphabets(a: &Alphabet, b: &Alphabet) -> Result<XPoly> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::PreconditionViolation("resultant needs positive alphabets".into()));
    }
    let vars = a.vars();
    let mut acc = XPoly::one(vars);
    for x in a.plus() {
        for y in b.plus() {
            acc = &acc * &(&x.to_xpoly(vars) - &y.to_xpoly(vars));
        }
    }
    Ok(acc)
}

/// `S_{beta^alpha + nu, zeta}(A - B) = S_zeta(-B) S_nu(A) prod (a - b)` with
/// `alpha = |A|`, `beta = |B|`.
pub fn berele_regev_check(nu: &Partition, zeta: &Partition, a: &Alphabet, b: &Alphabet) -> Result<Comparison> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::PreconditionViolation("A and B must be positive alphabets".into()));
    }
    let (alpha, beta) = (a.plus().len(), b.plus().len());
    if nu.len() > alpha || zeta.part(0) > beta {
        return Err(Error::PreconditionViolation(format!(
            "need l(nu) <= {alpha} and zeta_1 <= {beta}"
        )));
    }
    let mut parts: Vec<usize> = (0..alpha).map(|i| beta + nu.part(i)).collect();
    parts.extend_from_slice(zeta.parts());
    let big = Partition::new(parts)?;
    let lhs = schur_eval(&big, &a.sub(b));
    let rhs = &(&schur_eval(zeta, &b.neg()) * &schur_eval(nu, a)) * &resultant_alphabets(a, b)?;
    Ok(Comparison::new(format!("S{big}(A-B)"), lhs, rhs))
}

/// `S_nu(A - B) = 0` whenever `nu ⊇ (beta+1)^(alpha+1)`; returns whether the
/// evaluation vanishes.
pub fn berele_regev_vanishing(nu: &Partition, a: &Alphabet, b: &Alphabet) -> Result<bool> {
    let (alpha, beta) = (a.plus().len(), b.plus().len());
    if !a.is_positive() || !b.is_positive() || !nu.contains(&Partition::rectangle(beta + 1, alpha + 1)) {
        return Err(Error::PreconditionViolation(format!(
            "{nu} must contain ({})^({})",
            beta + 1,
            alpha + 1
        )));
    }
    Ok(schur_eval(nu, &a.sub(b)).is_zero())
}

/// `(t;t)_beta e_beta(A / (1-t))`, a polynomial.
///
/// Each plus letter `a` contributes `e_j(a/(1-t)) = t^{C(j,2)} a^j / (t;t)_j`
/// and each minus letter `b` contributes `e_j(-b/(1-t)) = (-b)^j / (t;t)_j`.
/// Products are accumulated in the normalization `(t;t)_d [z^d]`, where they
/// combine through t-binomial coefficients.
pub fn cleared_elementary(a: &Alphabet, beta: usize) -> XPoly {
    let vars = a.vars();
    let mut acc: Vec<XPoly> = (0..=beta)
        .map(|d| if d == 0 { XPoly::one(vars) } else { XPoly::zero(vars) })
        .collect();
    let letters = a
        .plus()
        .iter()
        .map(|l| (l, true))
        .chain(a.minus().iter().map(|l| (l, false)));
    for (l, positive) in letters {
        let lx = l.to_xpoly(vars);
        // cleared series of the single letter
        let single: Vec<XPoly> = (0..=beta)
            .map(|j| {
                let p = lx.pow(j as u32);
                let c2 = (j * j.saturating_sub(1) / 2) as i32;
                if positive {
                    p.scale(&LaurentPoly::t_pow(c2))
                } else if j % 2 == 1 {
                    -p
                } else {
                    p
                }
            })
            .collect();
        let mut next = vec![XPoly::zero(vars); beta + 1];
        for (d, slot) in next.iter_mut().enumerate() {
            for j in 0..=d {
                if acc[d - j].is_zero() {
                    continue;
                }
                let binom = t_binomial(d as i64, j as i64).expect("in range");
                *slot += &(&acc[d - j] * &single[j]).scale(&binom);
            }
        }
        acc = next;
    }
    acc.swap_remove(beta)
}

/// `(t;t)_beta`, the factor cleared by [`cleared_elementary`].
pub fn clearing_factor(beta: usize) -> LaurentPoly {
    t_factorial(beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lp;
    use crate::partition::part;

    fn ab() -> (VarSet, Alphabet, Alphabet) {
        let v = VarSet::new(["a", "b"]);
        let a = Alphabet::parse("a", &v).unwrap();
        let b = Alphabet::parse("b", &v).unwrap();
        (v, a, b)
    }

    fn p(v: &VarSet, s: &str) -> XPoly {
        // small helper: polynomial of an alphabet's plus-minus letters summed
        let a = Alphabet::parse(s, v).unwrap();
        let mut out = XPoly::zero(v);
        for l in a.plus() {
            out += &l.to_xpoly(v);
        }
        for l in a.minus() {
            out -= &l.to_xpoly(v);
        }
        out
    }

    #[test]
    fn complete_function_examples() {
        let v = VarSet::x(1);
        let h = complete_functions(&Alphabet::of_vars(&v), 3);
        assert_eq!(h[3], XPoly::monomial(&v, vec![3], LaurentPoly::one()));
        let h = complete_functions(&Alphabet::parse("1-x1", &v).unwrap(), 2);
        assert_eq!(h[1], p(&v, "1-x1"));
        assert_eq!(h[2], p(&v, "1-x1"));
        let (v, a, b) = ab();
        let h = complete_functions(&a.sub(&b), 2);
        assert_eq!(h[2], &p(&v, "a*a") - &p(&v, "a*b"));
    }

    #[test]
    fn schur_eval_examples() {
        let (v, a, b) = ab();
        let s11 = schur_eval(&part(&[1, 1]), &a.sub(&b));
        assert_eq!(s11, -(&p(&v, "b") * &p(&v, "a-b")));
        assert_eq!(schur_eval(&Partition::empty(), &Alphabet::empty(&v)), XPoly::one(&v));
        assert!(schur_eval(&part(&[1]), &Alphabet::empty(&v)).is_zero());
    }

    #[test]
    fn rectangle_is_resultant() {
        let v = VarSet::new(["a1", "a2", "b1"]);
        let a = Alphabet::parse("a1+a2", &v).unwrap();
        let b = Alphabet::parse("b1", &v).unwrap();
        let lhs = schur_eval(&part(&[1, 1]), &a.sub(&b));
        let rhs = &p(&v, "a1-b1") * &p(&v, "a2-b1");
        assert_eq!(lhs, rhs);
        assert_eq!(resultant_alphabets(&a, &b).unwrap(), rhs);
    }

    #[test]
    fn resultant_examples() {
        let v = VarSet::x(2);
        let one = Letter::t_power(2, 0);
        let x1 = Alphabet::of_indices(&v, [0]);
        assert_eq!(resultant(&one, &x1).unwrap(), p(&v, "1-x1"));
        let t = Letter::t_power(2, 1);
        assert_eq!(
            resultant(&t, &Alphabet::of_vars(&v)).unwrap(),
            &p(&v, "t-x1") * &p(&v, "t-x2")
        );
        assert!(resultant(&t, &Alphabet::parse("1-x1", &v).unwrap()).is_err());
    }

    #[test]
    fn hook_schur_examples() {
        let (_, a, b) = ab();
        assert!(berele_regev_check(&Partition::empty(), &part(&[1]), &a, &b).unwrap().holds());
        assert!(berele_regev_check(&part(&[1]), &Partition::empty(), &a, &b).unwrap().holds());
        assert!(berele_regev_vanishing(&part(&[2, 2]), &a, &b).unwrap());
        assert!(berele_regev_check(&part(&[1, 1]), &Partition::empty(), &a, &b).is_err());
    }

    #[test]
    fn parsing() {
        let v = VarSet::xy(2, 1);
        let a = Alphabet::parse("X*(1-t)", &v).unwrap();
        assert_eq!(a.plus().len(), 2);
        assert_eq!(a.minus().len(), 2);
        assert!(a.minus().iter().all(|l| l.tpow == 1));
        let b = Alphabet::parse("t^2-x1", &v).unwrap();
        assert_eq!(b.plus(), &[Letter::t_power(3, 2)]);
        let c = Alphabet::parse("X + Y + t^-1*X*Y - X*Y", &v).unwrap();
        assert_eq!(c.plus().len(), 5);
        assert_eq!(c.minus().len(), 2);
        assert_eq!(Alphabet::parse("1-1", &v).unwrap(), Alphabet::empty(&v));
        assert!(Alphabet::parse("z1", &v).is_err());
        assert!(Alphabet::parse("(x1+x2)^2", &v).is_err());
        assert!(Alphabet::parse("x1+", &v).is_err());
    }

    #[test]
    fn cleared_elementary_small() {
        // (t;t)_1 e_1(A/(1-t)) = sum of letters
        let v = VarSet::x(2);
        let a = Alphabet::parse("t^2-x1-x2", &v).unwrap();
        assert_eq!(cleared_elementary(&a, 1), p(&v, "t^2-x1-x2"));
        // single positive letter: (t;t)_2 e_2(a/(1-t)) = t a^2
        let one = Alphabet::parse("x1", &v).unwrap();
        assert_eq!(
            cleared_elementary(&one, 2),
            XPoly::monomial(&v, vec![2, 0], lp(&[(1, 1)]))
        );
    }
}
