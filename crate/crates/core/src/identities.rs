//! Generating-function identities truncated by degree, the function
//! `theta`, the scalar products on dominant monomials and by constant
//! terms, and the symmetrizer normalization counterexample.

use std::collections::{BTreeMap, HashMap};

use crate::alphabet::Alphabet;
use crate::algebra::{LaurentPoly, VarSet, XPoly};
use crate::basis::{Basis, BasisExpansion};
use crate::error::{Error, Result};
use crate::hall_littlewood::{aleph, p_poly, q_poly, qprime_indexed};
use crate::partition::{b_poly, n_skew, n_stat, partitions_bounded, IntVector, Partition};

/// Partitions of size at most `cap` with at most `n` parts.
fn partitions_within(cap: usize, n: usize) -> Vec<Partition> {
    (0..=cap).flat_map(|k| partitions_bounded(k, k, n)).collect()
}
use crate::report::Comparison;
use crate::symmetrize::{defq_image, defq_normalization};

/// A polynomial in which only terms of total degree `<= cap` are meaningful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    cap: i32,
    value: XPoly,
}

impl TruncatedSeries {
    pub fn new(value: XPoly, cap: i32) -> Self {
        TruncatedSeries {
            value: value.truncate_degree(cap),
            cap,
        }
    }

    pub fn one(vars: &VarSet, cap: i32) -> Self {
        Self::new(XPoly::one(vars), cap)
    }

    pub fn cap(&self) -> i32 {
        self.cap
    }

    pub fn value(&self) -> &XPoly {
        &self.value
    }

    pub fn into_value(self) -> XPoly {
        self.value
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cap = self.cap.min(other.cap);
        TruncatedSeries {
            value: self.value.mul_truncated(&other.value, cap),
            cap,
        }
    }

    pub fn mul_poly(&self, p: &XPoly) -> TruncatedSeries {
        TruncatedSeries {
            value: self.value.mul_truncated(p, self.cap),
            cap: self.cap,
        }
    }
}

/// `sigma_1(A) = prod_{a in A} (1 - a)^{-1}` up to total degree `cap`.
///
/// Plus letters need positive degree (each contributes a geometric series);
/// minus letters contribute the finite factor `1 - b` and need degree
/// `>= 0`.
pub fn sigma1_series(a: &Alphabet, cap: i32) -> Result<TruncatedSeries> {
    let vars = a.vars();
    let mut acc = TruncatedSeries::one(vars, cap);
    for l in a.plus() {
        let d = l.degree();
        if d <= 0 {
            return Err(Error::NonTerminating(l.to_xpoly(vars).to_string()));
        }
        let lx = l.to_xpoly(vars);
        let mut geo = XPoly::one(vars);
        let mut pw = XPoly::one(vars);
        for _ in 0..cap / d {
            pw = &pw * &lx;
            geo += &pw;
        }
        acc = acc.mul_poly(&geo);
    }
    for l in a.minus() {
        if l.degree() < 0 {
            return Err(Error::NonTerminating(l.to_xpoly(vars).to_string()));
        }
        acc = acc.mul_poly(&(&XPoly::one(vars) - &l.to_xpoly(vars)));
    }
    Ok(acc)
}

/// `P_lambda` in the first `n` variables (offset `offset`) of `vars`.
struct PTable {
    vars: VarSet,
    cache: HashMap<(Partition, usize, usize), XPoly>,
}

impl PTable {
    fn new(vars: &VarSet) -> Self {
        PTable {
            vars: vars.clone(),
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, lambda: &Partition, offset: usize, n: usize) -> XPoly {
        let key = (lambda.clone(), offset, n);
        if let Some(p) = self.cache.get(&key) {
            return p.clone();
        }
        let local = VarSet::x(n);
        let mapping: Vec<usize> = (offset..offset + n).collect();
        let p = p_poly(lambda, &local).embed(&self.vars, &mapping);
        self.cache.insert(key, p.clone());
        p
    }
}

/// `theta(lambda, mu) = t^{n(lambda/mu) - |mu|}`, as its exponent.
pub fn theta_exponent(lambda: &Partition, mu: &Partition) -> i64 {
    n_skew(lambda, mu) - mu.size() as i64
}

/// The same exponent as `n(lambda) + n(mu) - sum_i lambda~_i mu~_i`.
pub fn theta_exponent_alt(lambda: &Partition, mu: &Partition) -> i64 {
    let (lc, mc) = (lambda.conjugate(), mu.conjugate());
    let dot: usize = (0..lc.len().max(mc.len())).map(|i| lc.part(i) * mc.part(i)).sum();
    n_stat(lambda) + n_stat(mu) - dot as i64
}

pub fn theta(lambda: &Partition, mu: &Partition) -> LaurentPoly {
    LaurentPoly::t_pow(theta_exponent(lambda, mu) as i32)
}

/// `sigma_1(X + XY(1-t)) = sum_{lambda, mu ⊆ lambda} P_lambda(X) P_mu(Y) b_mu ℵ(lambda/mu)`
/// up to total degree `cap`, with `nx` and `ny` variables.
pub fn sigmaxy_check(nx: usize, ny: usize, cap: usize) -> Result<Comparison> {
    let vars = VarSet::xy(nx, ny);
    let a = Alphabet::parse("X + X*Y*(1-t)", &vars)?;
    let lhs = sigma1_series(&a, cap as i32)?.into_value();
    let mut table = PTable::new(&vars);
    let mut rhs = XPoly::zero(&vars);
    for lambda in partitions_within(cap, nx) {
        let px = table.get(&lambda, 0, nx);
        for (mu, c) in sigmaxy_coefficient(&lambda).terms() {
            if mu.len() > ny || lambda.size() + mu.size() > cap {
                continue;
            }
            let py = table.get(mu, nx, ny);
            rhs += &(&px * &py).scale(c);
        }
    }
    Ok(Comparison::new(
        format!("sigma_1(X + XY(1-t)), |X| = {nx}, |Y| = {ny}, degree <= {cap}"),
        lhs,
        rhs,
    ))
}

/// Coefficient of `P_lambda(X)` in `sigma_1(X + XY(1-t))`, in the `P` basis of `Y`.
pub fn sigmaxy_coefficient(lambda: &Partition) -> BasisExpansion {
    BasisExpansion::from_terms(
        Basis::P,
        lambda.subpartitions().into_iter().map(|mu| {
            let c = &b_poly(&mu) * &aleph(lambda, &mu);
            (mu, c)
        }),
    )
}

/// `sigma_1(X + Y + (1/t - 1)XY) = sum_{lambda, mu} theta(lambda, mu) P_lambda(X) P_mu(Y)`
/// up to total degree `cap`.
pub fn warnaar_check(nx: usize, ny: usize, cap: usize) -> Result<Comparison> {
    let vars = VarSet::xy(nx, ny);
    let a = Alphabet::parse("X + Y + t^-1*X*Y - X*Y", &vars)?;
    let lhs = sigma1_series(&a, cap as i32)?.into_value();
    let mut table = PTable::new(&vars);
    let mut rhs = XPoly::zero(&vars);
    for lambda in partitions_within(cap, nx) {
        let px = table.get(&lambda, 0, nx);
        for mu in partitions_within(cap - lambda.size(), ny) {
            let py = table.get(&mu, nx, ny);
            rhs += &(&px * &py).scale(&theta(&lambda, &mu));
        }
    }
    Ok(Comparison::new(
        format!("sigma_1(X + Y + (1/t - 1)XY), |X| = {nx}, |Y| = {ny}, degree <= {cap}"),
        lhs,
        rhs,
    ))
}

fn sigma1_minus_x(vars: &VarSet) -> XPoly {
    (0..vars.len()).fold(XPoly::one(vars), |acc, i| &acc * &(&XPoly::one(vars) - &XPoly::var(vars, i)))
}

/// `sum_mu t^{-|mu|} Q_mu(X) ℵ(lambda/mu) = sigma_1(-X) sum_mu theta(lambda, mu) P_mu(X)`
/// with `n` variables, up to degree `cap`.
pub fn warnaar3_check(lambda: &Partition, n: usize, cap: usize) -> Result<Comparison> {
    let vars = VarSet::x(n);
    let mut lhs = XPoly::zero(&vars);
    for mu in lambda.subpartitions() {
        if mu.len() > n || mu.size() > cap {
            continue;
        }
        let c = &LaurentPoly::t_pow(-(mu.size() as i32)) * &aleph(lambda, &mu);
        lhs += &q_poly(&mu, &vars).scale(&c);
    }
    let mut sum = XPoly::zero(&vars);
    for mu in partitions_within(cap, n) {
        sum += &p_poly(&mu, &vars).scale(&theta(lambda, &mu));
    }
    let rhs = sum.mul_truncated(&sigma1_minus_x(&vars), cap as i32);
    Ok(Comparison::new(
        format!("theta expansion for {lambda}, n = {n}, degree <= {cap}"),
        lhs.truncate_degree(cap as i32),
        rhs,
    ))
}

/// Coefficients `c_mu`, polynomials over a common variable set.
pub type CoefficientFamily = BTreeMap<Partition, XPoly>;

/// `c_w` for `w` in `Z^n`: `sum_kappa [Q'_kappa] Q'_w * c_kappa`.
pub fn extend_coefficients(c: &CoefficientFamily, w: &IntVector, cvars: &VarSet) -> XPoly {
    if let Some(p) = w.as_partition() {
        return c.get(&p).cloned().unwrap_or_else(|| XPoly::zero(cvars));
    }
    let mut out = XPoly::zero(cvars);
    for (kappa, k) in qprime_indexed(w).terms() {
        if let Some(ck) = c.get(kappa) {
            out += &ck.scale(k);
        }
    }
    out
}

/// `sigma_1(-X) sum_mu c_mu P_mu(X) = sum_lambda sum_{v in {0,1}^n} (-1)^{|v|} c_{lambda - v} P_lambda(X)`
/// up to degree `cap` in `X`; the `c_mu` live over `cvars`.
pub fn prodx_check(c: &CoefficientFamily, cvars: &VarSet, n: usize, cap: usize) -> Comparison {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend(cvars.names().iter().cloned());
    let vars = VarSet::new(names);
    let cmap: Vec<usize> = (n..n + cvars.len()).collect();
    let lift = |p: &XPoly| p.embed(&vars, &cmap);
    let xdeg_ok = |e: &[i32]| e[..n].iter().sum::<i32>() <= cap as i32;
    let mut table = PTable::new(&vars);

    let mut sum = XPoly::zero(&vars);
    for (mu, cm) in c {
        if mu.len() <= n && mu.size() <= cap {
            sum += &(&table.get(mu, 0, n) * &lift(cm));
        }
    }
    let xs = VarSet::x(n);
    let s1 = sigma1_minus_x(&xs).embed(&vars, &(0..n).collect::<Vec<_>>());
    let lhs = (&sum * &s1).filter(|e, _| xdeg_ok(e));

    let mut rhs = XPoly::zero(&vars);
    for lambda in partitions_within(cap, n) {
        let padded = lambda.padded(n).unwrap();
        let mut coeff = XPoly::zero(cvars);
        for bits in 0u32..(1 << n) {
            let w: Vec<i32> = (0..n).map(|i| padded.0[i] - ((bits >> i) & 1) as i32).collect();
            let cw = extend_coefficients(c, &IntVector(w), cvars);
            if bits.count_ones() % 2 == 0 {
                coeff += &cw;
            } else {
                coeff -= &cw;
            }
        }
        if !coeff.is_zero() {
            rhs += &(&table.get(&lambda, 0, n) * &lift(&coeff));
        }
    }
    Comparison::new(format!("sigma_1(-X) sum c_mu P_mu(X), n = {n}, degree <= {cap}"), lhs, rhs)
}

/// Expansion of `x^v` over dominant monomials modulo the straightening
/// relations; identical to the `Q'` expansion of `Q'_v`.
pub fn reduce_monomial(v: &IntVector) -> BTreeMap<Partition, LaurentPoly> {
    if v.sum() < 0 {
        return BTreeMap::new();
    }
    if let Some(p) = v.as_partition() {
        return BTreeMap::from([(p, LaurentPoly::one())]);
    }
    qprime_indexed(v).into_coeffs()
}

/// `((f, g)) = sum_lambda f_lambda g_lambda b_lambda` on dominant monomials.
pub fn dominant_scalar(f: &BTreeMap<Partition, LaurentPoly>, g: &BTreeMap<Partition, LaurentPoly>) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for (lambda, a) in f {
        if let Some(b) = g.get(lambda) {
            acc += &(&(a * b) * &b_poly(lambda));
        }
    }
    acc
}

/// `theta(lambda, x^w)` extended linearly through [`reduce_monomial`].
pub fn theta_monomial(lambda: &Partition, w: &IntVector) -> LaurentPoly {
    reduce_monomial(w)
        .iter()
        .map(|(kappa, c)| c * &theta(lambda, kappa))
        .sum()
}

fn add_reduced(acc: &mut BTreeMap<Partition, LaurentPoly>, v: &IntVector, c: &LaurentPoly) {
    for (kappa, k) in reduce_monomial(v) {
        let entry = acc.entry(kappa).or_default();
        *entry += &(&k * c);
    }
    acc.retain(|_, c| !c.is_zero());
}

/// Vectors `a` in `N^n` with `|a| <= total`.
fn bounded_vectors(n: usize, total: usize) -> Vec<Vec<i32>> {
    fn rec(n: usize, left: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k as i32);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, total, &mut Vec::new(), &mut out);
    out
}

/// `x^lambda t^{-|lambda|} / prod (1 - t/x_i)`, reduced; terms of negative
/// degree vanish, so only `|a| <= |lambda|` contribute.
pub fn theta_left_series(lambda: &IntVector) -> BTreeMap<Partition, LaurentPoly> {
    let size = lambda.sum();
    let mut acc = BTreeMap::new();
    for a in bounded_vectors(lambda.len(), size.max(0) as usize) {
        let da: i32 = a.iter().sum();
        let v: Vec<i32> = lambda.0.iter().zip(&a).map(|(x, y)| x - y).collect();
        add_reduced(&mut acc, &IntVector(v), &LaurentPoly::t_pow(da - size as i32));
    }
    acc
}

/// `x^mu / prod (1 - 1/x_i)`, reduced.
pub fn theta_right_series(mu: &IntVector) -> BTreeMap<Partition, LaurentPoly> {
    let size = mu.sum();
    let mut acc = BTreeMap::new();
    for b in bounded_vectors(mu.len(), size.max(0) as usize) {
        let v: Vec<i32> = mu.0.iter().zip(&b).map(|(x, y)| x - y).collect();
        add_reduced(&mut acc, &IntVector(v), &LaurentPoly::one());
    }
    acc
}

fn scalar(label: String, lhs: LaurentPoly, rhs: LaurentPoly) -> Comparison {
    let vars = VarSet::new(Vec::<String>::new());
    Comparison::new(label, XPoly::constant(&vars, lhs), XPoly::constant(&vars, rhs))
}

/// `sum_{v in {0,1}^n} (-1)^{|v|} theta(lambda, mu - v)`.
pub fn theta_signed_sum(lambda: &Partition, mu: &IntVector) -> LaurentPoly {
    let n = mu.len();
    let mut acc = LaurentPoly::zero();
    for bits in 0u32..(1 << n) {
        let w: Vec<i32> = (0..n).map(|i| mu.0[i] - ((bits >> i) & 1) as i32).collect();
        let th = theta_monomial(lambda, &IntVector(w));
        if bits.count_ones() % 2 == 0 {
            acc += &th;
        } else {
            acc -= &th;
        }
    }
    acc
}

/// `theta(lambda, mu) prod_i (1 - t^{nu_i - i + 1})`, `nu_i` the part of
/// index `mu_i` of the conjugate of `lambda`.
pub fn theta_product_form(lambda: &Partition, mu: &Partition) -> LaurentPoly {
    let conj = lambda.conjugate();
    let mut acc = theta(lambda, mu);
    for (i, &m) in mu.parts().iter().enumerate() {
        acc *= &LaurentPoly::one_minus_t_pow(conj.part(m - 1) as i32 - i as i32);
    }
    acc
}

/// Signed sum against the product form, over `n` variables.
pub fn theta4_check(lambda: &Partition, mu: &Partition, n: usize) -> Result<Comparison> {
    let mv = mu
        .padded(n)
        .ok_or_else(|| Error::PreconditionViolation(format!("l({mu}) exceeds n = {n}")))?;
    Ok(scalar(
        format!("signed theta sum for ({lambda}, {mu}), n = {n}"),
        theta_signed_sum(lambda, &mv),
        theta_product_form(lambda, mu),
    ))
}

/// The theta scalar-product identity for `(lambda, mu)` in `n` variables, with
/// its intermediate steps:
/// 1. `((x^lambda t^{-|lambda|}/prod(1 - t/x_i), x^mu/prod(1 - 1/x_i))) = theta(lambda, mu)`;
/// 2. `((x^lambda t^{-|lambda|}/prod(1 - t/x_i), x^mu))` equals the signed theta sum;
/// 3. the signed sum equals its product form;
/// 4. the product form equals `theta t^{-n(lambda/mu)} b_mu ℵ(lambda/mu)`.
pub fn theta_scalar_check(lambda: &Partition, mu: &Partition, n: usize) -> Result<Vec<Comparison>> {
    let lv = lambda
        .padded(n)
        .ok_or_else(|| Error::PreconditionViolation(format!("l({lambda}) exceeds n = {n}")))?;
    let mv = mu
        .padded(n)
        .ok_or_else(|| Error::PreconditionViolation(format!("l({mu}) exceeds n = {n}")))?;
    let left = theta_left_series(&lv);
    let right = theta_right_series(&mv);
    let th = theta(lambda, mu);
    let step1 = scalar(
        format!("scalar product = theta({lambda}, {mu})"),
        dominant_scalar(&left, &right),
        th.clone(),
    );
    let signed = theta_signed_sum(lambda, &mv);
    let step2 = scalar(
        format!("pairing with x^{mu} = signed theta sum"),
        dominant_scalar(&left, &BTreeMap::from([(mu.clone(), LaurentPoly::one())])),
        signed.clone(),
    );
    let product = theta_product_form(lambda, mu);
    let step3 = scalar("signed theta sum = product form".into(), signed, product.clone());
    let via_aleph = &(&th * &LaurentPoly::t_pow(-(n_skew(lambda, mu) as i32))) * &(&b_poly(mu) * &aleph(lambda, mu));
    let step4 = scalar("product form = theta b_mu ℵ / t^n(λ/μ)".into(), product, via_aleph);
    Ok(vec![step1, step2, step3, step4])
}

/// `CT( f(x) g(1/x_n, ..., 1/x_1) prod_{i<j} (1 - x_i/x_j)/(1 - t x_i/x_j) )`.
///
/// After multiplying out the finite part, the constant term of
/// `x^e prod_{i<j} (1 - t x_i/x_j)^{-1}` is the sum of `t^{sum k}` over the
/// `k_ij >= 0` with `sum_{i < m <= j} k_ij = e_m + ... + e_n` for
/// `m = 2..n` (and `|e| = 0`); these are enumerated exactly.
pub fn ct_scalar(f: &XPoly, g: &XPoly) -> LaurentPoly {
    assert!(f.vars() == g.vars(), "both arguments must share variables");
    let vars = f.vars();
    let n = vars.len();
    let g_rev = g.map_exponents(|e| (0..n).map(|k| -e[n - 1 - k]).collect());
    let mut h = f * &g_rev;
    for i in 0..n {
        for j in i + 1..n {
            let mut e = vec![0; n];
            e[i] = 1;
            e[j] = -1;
            h = &h * &(&XPoly::one(vars) - &XPoly::monomial(vars, e, LaurentPoly::one()));
        }
    }
    let mut acc = LaurentPoly::zero();
    for (e, c) in h.terms() {
        if e.iter().sum::<i32>() != 0 {
            continue;
        }
        let k = kernel_constant_term(e);
        if !k.is_zero() {
            acc += &(c * &k);
        }
    }
    acc
}

/// Constant term of `x^e prod_{i<j} (1 - t x_i/x_j)^{-1}`.
fn kernel_constant_term(e: &[i32]) -> LaurentPoly {
    let n = e.len();
    let mut need = vec![0i64; n];
    let mut s = 0i64;
    for m in (1..n).rev() {
        s += e[m] as i64;
        need[m] = s;
    }
    if need.iter().any(|&x| x < 0) {
        return LaurentPoly::zero();
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    fn rec(pairs: &[(usize, usize)], idx: usize, need: &mut [i64], tdeg: i32, acc: &mut BTreeMap<i32, i64>) {
        if idx == pairs.len() {
            if need.iter().all(|&x| x == 0) {
                *acc.entry(tdeg).or_default() += 1;
            }
            return;
        }
        let (i, j) = pairs[idx];
        // boundary i+1 is last crossed by pairs starting at i; once those are
        // placed it must be exhausted
        let cap = (i + 1..=j).map(|m| need[m]).min().unwrap();
        for k in 0..=cap {
            for b in &mut need[i + 1..=j] {
                *b -= k;
            }
            let last_from_i = idx + 1 == pairs.len() || pairs[idx + 1].0 != i;
            if !last_from_i || need[i + 1] == 0 {
                rec(pairs, idx + 1, need, tdeg + k as i32, acc);
            }
            for b in &mut need[i + 1..=j] {
                *b += k;
            }
        }
    }
    let mut counts = BTreeMap::new();
    rec(&pairs, 0, &mut need, 0, &mut counts);
    LaurentPoly::from_terms(counts)
}

/// The symmetrizer-normalization note in two variables.
#[derive(Clone, Debug)]
pub struct DefqNote {
    /// Kernel relation, image of `x^{02}`, the displayed `tQ_20 + (t-1)Q_11`,
    /// and the straightening of `Q'_{02}`.
    pub comparisons: Vec<Comparison>,
    /// Normalized image of `x^{02}` minus `tQ_20 + (t-1)Q_11`.
    pub difference: XPoly,
    /// Minor of the coefficients of `x^{20}`, `x^{11}` in the two
    /// polynomials; nonzero means they are not proportional.
    pub minor: LaurentPoly,
}

impl DefqNote {
    pub fn holds(&self) -> bool {
        self.comparisons.iter().all(Comparison::holds) && !self.difference.is_zero() && !self.minor.is_zero()
    }
}

pub fn defq_counterexample_check() -> DefqNote {
    let vars = VarSet::x(2);
    let m = |e: [i32; 2]| XPoly::monomial(&vars, e.to_vec(), LaurentPoly::one());
    let t = LaurentPoly::t_pow(1);
    let one_minus_t = LaurentPoly::one_minus_t_pow(1);

    let img02 = defq_image(&[0, 2]);
    let relation = &(&img02 - &defq_image(&[2, 0]).scale(&t)) + &defq_image(&[1, 1]).scale(&one_minus_t);
    let mut comparisons = vec![Comparison::new(
        "(x^02 - t x^20 + (1-t) x^11)(1 - t x2/x1) pi_omega = 0",
        relation,
        XPoly::zero(&vars),
    )];
    let displayed = &(&(&m([2, 0]) + &m([1, 1])) + &m([0, 2])).scale(&t) - &m([1, 1]);
    comparisons.push(Comparison::new("x^02 (1 - t x2/x1) pi_omega", img02.clone(), displayed));

    let combo = &q_poly(&Partition::new(vec![2]).unwrap(), &vars).scale(&t)
        + &q_poly(&Partition::new(vec![1, 1]).unwrap(), &vars).scale(&-&one_minus_t);
    let closed_form = &(&(&m([2, 0]) + &m([1, 1])) + &m([0, 2])).scale(&(&t - &LaurentPoly::t_pow(2)))
        + &m([1, 1]).scale(&(&(&t - &LaurentPoly::one()) * &crate::algebra::lp(&[(0, 1), (1, -1), (3, 1)])));
    comparisons.push(Comparison::new("t Q_20 + (t-1) Q_11", combo.clone(), closed_form));

    let straight = qprime_indexed(&IntVector(vec![0, 2]));
    let expected = BasisExpansion::from_terms(
        Basis::Qp,
        [
            (Partition::new(vec![2]).unwrap(), t.clone()),
            (Partition::new(vec![1, 1]).unwrap(), -&one_minus_t),
        ],
    );
    let as_poly = |e: &BasisExpansion| {
        let mut out = XPoly::zero(&vars);
        for (p, c) in e.terms() {
            let mut exp: Vec<i32> = p.parts().iter().map(|&x| x as i32).collect();
            exp.resize(2, 0);
            out.add_term(exp, c.clone());
        }
        out
    };
    comparisons.push(Comparison::new("Q'_02 in the Q' basis", as_poly(&straight), as_poly(&expected)));

    let (num, den) = defq_normalization(2, 1);
    let normalized = img02.scale(&num).exact_div_scalar(&den).expect("exact normalization");
    let difference = &normalized - &combo;
    let minor = &(&normalized.coeff(&[2, 0]) * &combo.coeff(&[1, 1])) - &(&normalized.coeff(&[1, 1]) * &combo.coeff(&[2, 0]));
    DefqNote {
        comparisons,
        difference,
        minor,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lp;
    use crate::partition::{part, partitions_up_to};

    #[test]
    fn sigma1_examples() {
        let v = VarSet::x(1);
        let s = sigma1_series(&Alphabet::of_vars(&v), 3).unwrap();
        assert_eq!(s.value().num_terms(), 4);
        let s = sigma1_series(&Alphabet::parse("x1 - t*x1", &v).unwrap(), 2).unwrap();
        assert_eq!(s.value().coeff(&[2]), lp(&[(0, 1), (1, -1)]));
        assert_eq!(s.value().coeff(&[1]), lp(&[(0, 1), (1, -1)]));
        assert!(matches!(
            sigma1_series(&Alphabet::parse("t", &v).unwrap(), 2),
            Err(Error::NonTerminating(_))
        ));
    }

    #[test]
    fn sigma_xy_one_by_one_matches_cauchy() {
        // sigma_1(XY(1-t)) = sum Q_mu(Y) P_mu(X)
        let vars = VarSet::xy(1, 1);
        let lhs = sigma1_series(&Alphabet::parse("X*Y*(1-t)", &vars).unwrap(), 4).unwrap();
        let mut rhs = XPoly::zero(&vars);
        for k in 0..=2usize {
            let mu = Partition::new(if k == 0 { vec![] } else { vec![k] }).unwrap();
            let px = p_poly(&mu, &VarSet::x(1)).embed(&vars, &[0]);
            let qy = q_poly(&mu, &VarSet::x(1)).embed(&vars, &[1]);
            rhs += &(&px * &qy);
        }
        assert_eq!(lhs.into_value(), rhs);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&Partition::empty(), &Partition::empty()), LaurentPoly::one());
        let l = part(&[3, 1]);
        assert_eq!(theta(&l, &Partition::empty()), LaurentPoly::t_pow(n_stat(&l) as i32));
        assert_eq!(theta_exponent(&l, &part(&[2])), theta_exponent_alt(&l, &part(&[2])));
        assert_eq!(theta(&Partition::empty(), &part(&[1])), LaurentPoly::one());
    }

    #[test]
    fn sigmaxy_examples() {
        let e = sigmaxy_coefficient(&part(&[4, 2]));
        assert_eq!(e.len(), 12);
        let omt = |k: i32| LaurentPoly::one_minus_t_pow(k);
        assert_eq!(e.coeff(&Partition::empty()), LaurentPoly::t_pow(2));
        assert_eq!(e.coeff(&part(&[1])), &LaurentPoly::t_pow(1) * &omt(2));
        assert_eq!(e.coeff(&part(&[1, 1])), &(&LaurentPoly::t_pow(1) * &omt(1)) * &omt(2));
        assert_eq!(e.coeff(&part(&[4, 2])), &omt(1) * &omt(1));
        assert_eq!(sigmaxy_coefficient(&Partition::empty()), BasisExpansion::single(Basis::P, Partition::empty()));
        assert!(sigmaxy_check(2, 2, 5).unwrap().holds());
    }

    #[test]
    fn two_alphabet_examples() {
        let c = warnaar_check(1, 1, 0).unwrap();
        assert!(c.holds());
        assert_eq!(c.lhs, XPoly::one(&VarSet::xy(1, 1)));
        assert!(warnaar_check(1, 1, 4).unwrap().holds());
        assert!(warnaar_check(2, 1, 4).unwrap().holds());
    }

    #[test]
    fn three_parameter_examples() {
        assert!(warnaar3_check(&Partition::empty(), 1, 4).unwrap().holds());
        assert!(warnaar3_check(&part(&[1]), 1, 4).unwrap().holds());
        assert!(warnaar3_check(&part(&[2, 1]), 2, 5).unwrap().holds());
    }

    #[test]
    fn prodx_examples() {
        let none = VarSet::new(Vec::<String>::new());
        let delta = CoefficientFamily::from([(Partition::empty(), XPoly::one(&none))]);
        assert!(prodx_check(&delta, &none, 1, 3).holds());
        let y = VarSet::y(1);
        let c: CoefficientFamily = partitions_up_to(4)
            .into_iter()
            .map(|mu| {
                let q = q_poly(&mu, &VarSet::x(1)).embed(&y, &[0]);
                (mu, q)
            })
            .collect();
        assert!(prodx_check(&c, &y, 2, 4).holds());
    }

    #[test]
    fn reduce_examples() {
        let r = reduce_monomial(&IntVector(vec![0, 2]));
        assert_eq!(r.get(&part(&[2])), Some(&lp(&[(1, 1)])));
        assert_eq!(r.get(&part(&[1, 1])), Some(&lp(&[(0, -1), (1, 1)])));
        assert_eq!(reduce_monomial(&IntVector(vec![2, 1])), BTreeMap::from([(part(&[2, 1]), LaurentPoly::one())]));
        assert!(reduce_monomial(&IntVector(vec![1, -1])).is_empty());
    }

    #[test]
    fn dominant_scalar_examples() {
        let one = |p: &[usize]| BTreeMap::from([(part(p), LaurentPoly::one())]);
        assert_eq!(dominant_scalar(&one(&[2, 1]), &one(&[2, 1])), lp(&[(0, 1), (1, -2), (2, 1)]));
        assert!(dominant_scalar(&one(&[2]), &one(&[1, 1])).is_zero());
        let f = BTreeMap::from([(part(&[2]), lp(&[(0, 2)])), (part(&[1, 1]), lp(&[(1, 1)]))]);
        let g = BTreeMap::from([(part(&[2]), lp(&[(0, 1)])), (part(&[1, 1]), lp(&[(0, 3)]))]);
        // 2 b_2 + 3t b_11
        let expected = &lp(&[(0, 2), (1, -2)]) + &(&lp(&[(1, 3)]) * &(&lp(&[(0, 1), (1, -1)]) * &lp(&[(0, 1), (2, -1)])));
        assert_eq!(dominant_scalar(&f, &g), expected);
    }

    #[test]
    fn theta_scalar_examples() {
        for (l, m, n) in [(vec![], vec![], 1), (vec![2], vec![1], 2), (vec![2, 1], vec![2, 1], 3)] {
            for c in theta_scalar_check(&part(&l), &part(&m), n).unwrap() {
                assert!(c.holds(), "{}: {} vs {}", c.label, c.lhs, c.rhs);
            }
        }
    }

    #[test]
    fn ct_scalar_examples() {
        let v1 = VarSet::x(1);
        let q1 = q_poly(&part(&[1]), &v1);
        assert_eq!(ct_scalar(&q1, &XPoly::var(&v1, 0)), lp(&[(0, 1), (1, -1)]));
        assert_eq!(ct_scalar(&XPoly::one(&v1), &XPoly::one(&v1)), LaurentPoly::one());
        let v2 = VarSet::x(2);
        let q2 = q_poly(&part(&[2]), &v2);
        assert!(ct_scalar(&q2, &XPoly::monomial(&v2, vec![1, 1], LaurentPoly::one())).is_zero());
        let q11 = q_poly(&part(&[1, 1]), &v2);
        assert_eq!(ct_scalar(&q11, &XPoly::monomial(&v2, vec![1, 1], LaurentPoly::one())), b_poly(&part(&[1, 1])));
    }

    #[test]
    fn defq_note() {
        let note = defq_counterexample_check();
        for c in &note.comparisons {
            assert!(c.holds(), "{}: {} vs {}", c.label, c.lhs, c.rhs);
        }
        assert!(!note.difference.is_zero());
        assert!(!note.minor.is_zero());
        assert!(note.holds());
    }
}
