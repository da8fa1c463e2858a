//! The families `Q'`, `Q`, `P`; skew `Q'` and its value at the alphabet `1`;
//! the argument shifts `X + 1`, `X - 1`, `t^r - X`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::alphabet::{cleared_elementary, complete_functions, resultant, schur_from_complete, Alphabet, Letter};
use crate::algebra::{LaurentPoly, VarSet, XPoly};
use crate::basis::{Basis, BasisExpansion};
use crate::error::{Error, Result};
use crate::partition::{b_poly, n_skew, n_stat, t_binomial, t_binomial_or_zero, IntVector, Partition};
use crate::report::Comparison;
use crate::symmetrize::{cup_kernel, vandermonde};
use crate::tableaux::{aleph_weight, charge_tableau, enumerate_plane_partitions, enumerate_ssyt_by_weight};

fn qprime_cache() -> &'static Mutex<HashMap<Partition, BasisExpansion>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, BasisExpansion>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Q'_mu = sum_T t^{charge T} S_{shape T}` over tableaux of weight `mu`.
pub fn qprime_schur(mu: &Partition) -> BasisExpansion {
    if let Some(e) = qprime_cache().lock().unwrap().get(mu) {
        return e.clone();
    }
    let mut e = BasisExpansion::zero(Basis::S);
    for t in enumerate_ssyt_by_weight(mu.parts()) {
        let ch = charge_tableau(&t).expect("weight is a partition");
        e.add_term(t.shape(), LaurentPoly::t_pow(ch as i32));
    }
    qprime_cache().lock().unwrap().insert(mu.clone(), e.clone());
    e
}

/// Expansion in the `Q'` basis of a Schur expansion, by back-substitution
/// from the lexicographically smallest partition (each `Q'_lambda` is
/// `S_lambda` plus terms indexed by partitions dominating `lambda`).
pub fn schur_to_qprime(e: &BasisExpansion) -> BasisExpansion {
    assert_eq!(e.basis(), Basis::S);
    let mut rem = e.clone();
    let mut out = BasisExpansion::zero(Basis::Qp);
    loop {
        let Some((lambda, c)) = rem.terms().next().map(|(l, c)| (l.clone(), c.clone())) else {
            break;
        };
        rem.add_scaled(&qprime_schur(&lambda), &-&c);
        out.add_term(lambda, c);
    }
    out
}

pub fn qprime_to_schur(e: &BasisExpansion) -> BasisExpansion {
    assert_eq!(e.basis(), Basis::Qp);
    let mut out = BasisExpansion::zero(Basis::S);
    for (lambda, c) in e.terms() {
        out.add_scaled(&qprime_schur(lambda), c);
    }
    out
}

/// Schur expansion of `Q'_u` computed from `x^u prod_{i<j} (1 - t x_i/x_j)^{-1}`.
pub fn qprime_kernel_schur(u: &IntVector) -> BasisExpansion {
    cup_kernel(u)
}

fn indexed_cache() -> &'static Mutex<HashMap<IntVector, BasisExpansion>> {
    static CACHE: OnceLock<Mutex<HashMap<IntVector, BasisExpansion>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Q'_u` for any `u` in `Z^n`, expanded over `Q'_lambda`, lambda a partition.
pub fn qprime_indexed(u: &IntVector) -> BasisExpansion {
    if let Some(e) = indexed_cache().lock().unwrap().get(u) {
        return e.clone();
    }
    let e = schur_to_qprime(&qprime_kernel_schur(u));
    indexed_cache().lock().unwrap().insert(u.clone(), e.clone());
    e
}

/// Basis change between `S` and `Q'`, or between `Q` and `P`.
pub fn convert(e: &BasisExpansion, target: Basis) -> Result<BasisExpansion> {
    use Basis::*;
    match (e.basis(), target) {
        (a, b) if a == b => Ok(e.clone()),
        (S, Qp) => Ok(schur_to_qprime(e)),
        (Qp, S) => Ok(qprime_to_schur(e)),
        (Q, P) => Ok(e.map_coeffs(|l, c| c * &b_poly(l)).relabel(P)),
        (P, Q) => {
            let mut out = BasisExpansion::zero(Q);
            for (l, c) in e.terms() {
                out.add_term(l.clone(), c.exact_div(&b_poly(l))?);
            }
            Ok(out)
        }
        (a, b) => Err(Error::UnsupportedConversion {
            from: a.to_string(),
            to: b.to_string(),
        }),
    }
}

/// `sum_lambda c_lambda S_lambda(A)`.
pub fn eval_schur_expansion(e: &BasisExpansion, a: &Alphabet) -> XPoly {
    assert_eq!(e.basis(), Basis::S);
    let d = e.terms().map(|(l, _)| l.size()).max().unwrap_or(0);
    let h = complete_functions(a, d);
    let mut out = XPoly::zero(a.vars());
    for (lambda, c) in e.terms() {
        out += &schur_from_complete(lambda, &h, a.vars()).scale(c);
    }
    out
}

/// `Q'_lambda(A)`.
pub fn qprime_eval(lambda: &Partition, a: &Alphabet) -> XPoly {
    eval_schur_expansion(&qprime_schur(lambda), a)
}

/// `Q_lambda(A) = Q'_lambda(A (1 - t))`.
pub fn q_eval(lambda: &Partition, a: &Alphabet) -> XPoly {
    qprime_eval(lambda, &a.times_one_minus_t())
}

/// `P_lambda(A) = Q_lambda(A) / b_lambda`.
pub fn p_eval(lambda: &Partition, a: &Alphabet) -> Result<XPoly> {
    q_eval(lambda, a).exact_div_scalar(&b_poly(lambda))
}

/// `Q_lambda(x_1..x_n)` for the variables of `vars`.
pub fn q_poly(lambda: &Partition, vars: &VarSet) -> XPoly {
    if lambda.len() > vars.len() {
        return XPoly::zero(vars);
    }
    q_eval(lambda, &Alphabet::of_vars(vars))
}

/// `P_lambda(x_1..x_n)`; zero when `l(lambda) > n`.
pub fn p_poly(lambda: &Partition, vars: &VarSet) -> XPoly {
    if lambda.len() > vars.len() {
        return XPoly::zero(vars);
    }
    p_eval(lambda, &Alphabet::of_vars(vars)).expect("b_lambda divides Q_lambda")
}

/// Evaluates an expansion in any basis on an alphabet.
pub fn eval_expansion(e: &BasisExpansion, a: &Alphabet) -> Result<XPoly> {
    match e.basis() {
        Basis::S => Ok(eval_schur_expansion(e, a)),
        Basis::Qp => Ok(eval_schur_expansion(&qprime_to_schur(e), a)),
        Basis::Q | Basis::P => {
            let mut out = XPoly::zero(a.vars());
            for (l, c) in e.terms() {
                let v = if e.basis() == Basis::Q { q_eval(l, a) } else { p_eval(l, a)? };
                out += &v.scale(c);
            }
            Ok(out)
        }
    }
}

/// `ℵ(lambda/mu) = b_mu^{-1} t^{n(lambda/mu)} prod_{i=1}^{l(mu)} (1 - t^{nu_i - i + 1})`
/// with `nu_i` the part of index `mu_i` of the conjugate of `lambda`; zero
/// unless `mu ⊆ lambda`.
pub fn aleph(lambda: &Partition, mu: &Partition) -> LaurentPoly {
    if !lambda.contains(mu) {
        return LaurentPoly::zero();
    }
    let conj = lambda.conjugate();
    let mut num = LaurentPoly::t_pow(n_skew(lambda, mu) as i32);
    for (i, &m) in mu.parts().iter().enumerate() {
        let nu = conj.part(m - 1) as i32;
        num *= &LaurentPoly::one_minus_t_pow(nu - i as i32);
    }
    num.exact_div(&b_poly(mu)).expect("b_mu divides the product")
}

/// `ℵ(lambda/mu)` by columns: a column with `alpha` boxes ending a row of
/// `mu` and `beta` boxes of `lambda/mu` contributes
/// `t^{C(beta,2)} [alpha+beta, alpha]`.
pub fn aleph_column_rule(lambda: &Partition, mu: &Partition) -> LaurentPoly {
    if !lambda.contains(mu) {
        return LaurentPoly::zero();
    }
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let mut acc = LaurentPoly::one();
    for j in 0..lambda.part(0) {
        let alpha = mc.part(j) - mc.part(j + 1);
        let beta = lc.part(j) - mc.part(j);
        let c2 = (beta * beta.saturating_sub(1) / 2) as i32;
        acc *= &(LaurentPoly::t_pow(c2) * t_binomial_or_zero((alpha + beta) as i64, alpha as i64));
    }
    acc
}

/// `Q'_lambda(X + 1) = sum_{mu ⊆ lambda} ℵ(lambda/mu) Q'_mu(X)`.
pub fn add_one(lambda: &Partition) -> BasisExpansion {
    BasisExpansion::from_terms(
        Basis::Qp,
        lambda.subpartitions().into_iter().map(|mu| {
            let c = aleph(lambda, &mu);
            (mu, c)
        }),
    )
}

/// `Q'_lambda(X - 1)`: in each block of `m_i` parts equal to `i`, `alpha_i`
/// parts become `i - 1`, with coefficient `prod (-1)^{alpha_i} [m_i, alpha_i]`.
pub fn sub_one(lambda: &Partition) -> BasisExpansion {
    let mult = lambda.multiplicities();
    let sizes: Vec<usize> = (1..mult.len()).filter(|&i| mult[i] > 0).collect();
    let mut out = BasisExpansion::zero(Basis::Qp);
    fn rec(
        sizes: &[usize],
        mult: &[usize],
        idx: usize,
        parts: &mut Vec<usize>,
        coeff: LaurentPoly,
        out: &mut BasisExpansion,
    ) {
        if idx == sizes.len() {
            let mut p = parts.clone();
            p.sort_unstable_by(|a, b| b.cmp(a));
            out.add_term(Partition::new(p).unwrap(), coeff);
            return;
        }
        let i = sizes[idx];
        let m = mult[i];
        for alpha in 0..=m {
            let base = parts.len();
            parts.extend(std::iter::repeat(i).take(m - alpha));
            parts.extend(std::iter::repeat(i - 1).take(alpha));
            let mut c = &coeff * &t_binomial(m as i64, alpha as i64).unwrap();
            if alpha % 2 == 1 {
                c = -c;
            }
            rec(sizes, mult, idx + 1, parts, c, out);
            parts.truncate(base);
        }
    }
    rec(&sizes, &mult, 0, &mut Vec::new(), LaurentPoly::one(), &mut out);
    out
}

/// Composes a `Q'`-linear map given on basis elements with an expansion.
pub fn apply_qprime_map(e: &BasisExpansion, f: impl Fn(&Partition) -> BasisExpansion) -> BasisExpansion {
    assert_eq!(e.basis(), Basis::Qp);
    let mut out = BasisExpansion::zero(Basis::Qp);
    for (l, c) in e.terms() {
        out.add_scaled(&f(l), c);
    }
    out
}

/// Fresh variable names `prefix1..prefixm` not clashing with `vars`.
fn fresh_names(vars: &VarSet, m: usize) -> Vec<String> {
    let mut prefix = String::from("u");
    while vars.names().iter().any(|n| n.starts_with(&prefix)) {
        prefix.push('_');
    }
    (1..=m).map(|j| format!("{prefix}{j}")).collect()
}

/// `Q'_{lambda/mu}(X)`: the coefficient of `Q'_mu(Y)` in `Q'_lambda(X + Y)`.
///
/// `Y` has `|mu|` fresh variables, so that every Schur function of degree
/// `|mu|` survives in `Y`. The part of `Q'_lambda(X + Y)` of degree `|mu|`
/// in `Y` is expanded in Schur functions of `Y` (by the bialternant
/// read-off), then converted to the `Q'` basis.
pub fn skew_qprime(lambda: &Partition, mu: &Partition, x: &Alphabet) -> XPoly {
    let xvars = x.vars().clone();
    if !lambda.contains(mu) {
        return XPoly::zero(&xvars);
    }
    let m = mu.size();
    if m == 0 {
        return qprime_eval(lambda, x);
    }
    let n = xvars.len();
    let mut names: Vec<String> = xvars.names().to_vec();
    names.extend(fresh_names(&xvars, m));
    let all = VarSet::new(names);
    let a = x.embed(&all).add(&Alphabet::of_indices(&all, n..n + m));
    let f = qprime_eval(lambda, &a).filter(|e, _| e[n..].iter().sum::<i32>() == m as i32);

    let yvars = VarSet::new(all.names()[n..].to_vec());
    let vdm = vandermonde(&yvars).embed(&all, &(n..n + m).collect::<Vec<_>>());
    let alt = &f * &vdm;
    let rho: Vec<i32> = (0..m).rev().map(|k| k as i32).collect();
    let mut by_shape: HashMap<Partition, XPoly> = HashMap::new();
    for (e, c) in alt.terms() {
        let ye = &e[n..];
        if !ye.windows(2).all(|w| w[0] > w[1]) {
            continue;
        }
        let kappa: Vec<i32> = ye.iter().zip(&rho).map(|(a, b)| a - b).collect();
        let kappa = Partition::from_ints(&kappa).expect("polynomial in y");
        by_shape
            .entry(kappa)
            .or_insert_with(|| XPoly::zero(&xvars))
            .add_term(e[..n].to_vec(), c.clone());
    }
    let mut out = XPoly::zero(&xvars);
    for (kappa, cx) in by_shape {
        let coeff = schur_to_qprime(&BasisExpansion::single(Basis::S, kappa)).coeff(mu);
        if !coeff.is_zero() {
            out += &cx.scale(&coeff);
        }
    }
    out
}

/// `sum` over plane partitions of shape `lambda` in letters `1..n` of the
/// ℵ weight.
pub fn plane_partition_qprime(lambda: &Partition, n: usize) -> XPoly {
    let vars = VarSet::x(n);
    let mut out = XPoly::zero(&vars);
    for pp in enumerate_plane_partitions(lambda, n) {
        out += &aleph_weight(&pp, &vars);
    }
    out
}

/// Splits `lambda` as `[n^k + nu, zeta]` with `zeta_1 < n`.
pub fn decompose(lambda: &Partition, n: usize) -> (usize, Partition, Partition) {
    let k = lambda.parts().iter().filter(|&&p| p >= n).count();
    let nu = Partition::new(lambda.parts()[..k].iter().map(|p| p - n).collect()).unwrap();
    let zeta = Partition::new(lambda.parts()[k..].to_vec()).unwrap();
    (k, nu, zeta)
}

/// `Q'_lambda(t^r - X) = t^{n(nu) + r|nu|} prod_{i=r}^{k+r-1} R(t^i, X) Q'_zeta(t^{k+r} - X)`
/// for `X = {x_1..x_n}`.
pub fn one_minus_x_factorization(lambda: &Partition, r: usize, n: usize) -> Result<Comparison> {
    if n == 0 {
        return Err(Error::PreconditionViolation("need at least one variable".into()));
    }
    let vars = VarSet::x(n);
    let x = Alphabet::of_vars(&vars);
    let (k, nu, zeta) = decompose(lambda, n);
    let lhs = qprime_eval(lambda, &Alphabet::t_power(&vars, r as i32).sub(&x));
    let mut rhs = XPoly::constant(
        &vars,
        LaurentPoly::t_pow((n_stat(&nu) + (r * nu.size()) as i64) as i32),
    );
    for i in r..k + r {
        rhs = &rhs * &resultant(&Letter::t_power(n, i as i32), &x)?;
    }
    rhs = &rhs * &qprime_eval(&zeta, &Alphabet::t_power(&vars, (k + r) as i32).sub(&x));
    Ok(Comparison::new(
        format!("Q'{lambda}(t^{r} - X), n = {n}"),
        lhs,
        rhs,
    ))
}

/// `t^{n(lambda)} (1 - x)(1 - x/t)...(1 - x t^{1 - l(lambda)})`.
pub fn principal_specialization(lambda: &Partition, x: &Letter, vars: &VarSet) -> XPoly {
    let mut acc = XPoly::constant(vars, LaurentPoly::t_pow(n_stat(lambda) as i32));
    for i in 0..lambda.len() {
        let shifted = Letter::new(x.tpow - i as i32, x.exp.clone());
        acc = &acc * &(&XPoly::one(vars) - &shifted.to_xpoly(vars));
    }
    acc
}

/// The closed form against `Q'_lambda` evaluated on the alphabet `1 - x`.
pub fn principal_specialization_check(lambda: &Partition, x: &Letter, vars: &VarSet) -> Comparison {
    let a = Alphabet::t_power(vars, 0).sub(&Alphabet::letter(vars, x.clone()));
    Comparison::new(
        format!("Q'{lambda}(1 - x)"),
        qprime_eval(lambda, &a),
        principal_specialization(lambda, x, vars),
    )
}

/// `Q'_{2^k + nu, 1^beta}(1 - x1 - x2)` against
/// `t^{n(nu)} prod_{i<k} (t^i - x1)(t^i - x2) (t;t)_beta e_beta((t^k - x1 - x2)/(1-t))`.
pub fn two_letter_factorization(k: usize, nu: &Partition, beta: usize) -> Result<Comparison> {
    if nu.len() > k {
        return Err(Error::PreconditionViolation(format!("l({nu}) must not exceed k = {k}")));
    }
    let vars = VarSet::x(2);
    let x = Alphabet::of_vars(&vars);
    let mut parts: Vec<usize> = (0..k).map(|i| 2 + nu.part(i)).collect();
    parts.extend(std::iter::repeat(1).take(beta));
    let lambda = Partition::new(parts)?;
    let lhs = qprime_eval(&lambda, &Alphabet::t_power(&vars, 0).sub(&x));
    let mut rhs = XPoly::constant(&vars, LaurentPoly::t_pow(n_stat(nu) as i32));
    for i in 0..k {
        rhs = &rhs * &resultant(&Letter::t_power(2, i as i32), &x)?;
    }
    rhs = &rhs * &cleared_elementary(&Alphabet::t_power(&vars, k as i32).sub(&x), beta);
    Ok(Comparison::new(format!("Q'{lambda}(1 - x1 - x2)"), lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lp;
    use crate::partition::{part, partitions_up_to};

    #[test]
    fn qprime_examples() {
        assert_eq!(qprime_schur(&part(&[2, 1])).to_string(), "S[2,1] + t*S[3]");
        assert_eq!(qprime_schur(&part(&[1])).to_string(), "S[1]");
        assert_eq!(qprime_schur(&part(&[1, 1])).to_string(), "S[1,1] + t*S[2]");
        assert_eq!(qprime_schur(&Partition::empty()).to_string(), "S[]");
    }

    #[test]
    fn indexed_examples() {
        let e = qprime_indexed(&IntVector(vec![0, 2]));
        assert_eq!(e.to_string(), "(-1+t)*Q'[1,1] + t*Q'[2]");
        assert_eq!(qprime_indexed(&IntVector(vec![2, 1])), BasisExpansion::single(Basis::Qp, part(&[2, 1])));
        assert!(qprime_indexed(&IntVector(vec![1, 1, -1])).is_zero());
    }

    #[test]
    fn conversions_round_trip() {
        let e = BasisExpansion::from_terms(Basis::S, [(part(&[2, 1]), lp(&[(0, 1)])), (part(&[1, 1, 1]), lp(&[(2, 3)]))]);
        assert_eq!(qprime_to_schur(&schur_to_qprime(&e)), e);
        let q = BasisExpansion::single(Basis::Q, part(&[2, 1]));
        let p = convert(&q, Basis::P).unwrap();
        assert_eq!(p.coeff(&part(&[2, 1])), b_poly(&part(&[2, 1])));
        assert_eq!(convert(&p, Basis::Q).unwrap(), q);
        assert!(convert(&q, Basis::S).is_err());
        let bad = BasisExpansion::single(Basis::P, part(&[1]));
        assert!(matches!(convert(&bad, Basis::Q), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn q_and_p_examples() {
        let v = VarSet::x(1);
        assert_eq!(q_poly(&part(&[1]), &v), XPoly::monomial(&v, vec![1], lp(&[(0, 1), (1, -1)])));
        assert_eq!(p_poly(&part(&[1]), &v), XPoly::var(&v, 0));
        assert!(p_poly(&part(&[1, 1]), &v).is_zero());
    }

    #[test]
    fn aleph_worked_example() {
        let lambda = part(&[4, 4, 3, 2, 2, 2, 1]);
        let mu = part(&[2, 2, 1, 1]);
        let num = LaurentPoly::t_pow(13)
            * LaurentPoly::one_minus_t_pow(6)
            * LaurentPoly::one_minus_t_pow(5)
            * LaurentPoly::one_minus_t_pow(5)
            * LaurentPoly::one_minus_t_pow(4);
        let expected = num.exact_div(&b_poly(&mu)).unwrap();
        assert_eq!(aleph(&lambda, &mu), expected);
        assert_eq!(aleph_column_rule(&lambda, &mu), expected);
        assert_eq!(aleph(&lambda, &lambda), LaurentPoly::one());
        assert_eq!(aleph(&part(&[2, 2, 1]), &Partition::empty()), LaurentPoly::t_pow(4));
        assert!(aleph(&part(&[2]), &part(&[1, 1])).is_zero());
    }

    #[test]
    fn add_one_worked_example() {
        let e = add_one(&part(&[2, 2, 1]));
        let expect = [
            (vec![], lp(&[(4, 1)])),
            (vec![1], lp(&[(2, 1), (3, 1), (4, 1)])),
            (vec![2], lp(&[(1, 1), (2, 1)])),
            (vec![1, 1], lp(&[(1, 1), (2, 1), (3, 1)])),
            (vec![2, 1], lp(&[(0, 1), (1, 2), (2, 1)])),
            (vec![1, 1, 1], lp(&[(1, 1)])),
            (vec![2, 2], lp(&[(0, 1)])),
            (vec![2, 1, 1], lp(&[(0, 1), (1, 1)])),
            (vec![2, 2, 1], lp(&[(0, 1)])),
        ];
        assert_eq!(e.len(), 9);
        for (p, c) in expect {
            assert_eq!(e.coeff(&part(&p)), c, "{p:?}");
        }
        assert_eq!(add_one(&Partition::empty()), BasisExpansion::single(Basis::Qp, Partition::empty()));
    }

    #[test]
    fn sub_one_examples() {
        assert_eq!(sub_one(&part(&[1])).to_string(), "-Q'[] + Q'[1]");
        let e = sub_one(&part(&[2, 2]));
        assert_eq!(e.coeff(&part(&[2, 1])), lp(&[(0, -1), (1, -1)]));
        assert_eq!(e.coeff(&part(&[1, 1])), LaurentPoly::one());
        let round = apply_qprime_map(&add_one(&part(&[2, 1])), sub_one);
        assert_eq!(round, BasisExpansion::single(Basis::Qp, part(&[2, 1])));
    }

    #[test]
    fn shifts_match_alphabet_evaluation() {
        let vars = VarSet::x(3);
        let x = Alphabet::of_vars(&vars);
        let plus = x.add(&Alphabet::t_power(&vars, 0));
        let minus = x.sub(&Alphabet::t_power(&vars, 0));
        for lambda in partitions_up_to(4) {
            assert_eq!(
                qprime_eval(&lambda, &plus),
                eval_expansion(&add_one(&lambda), &x).unwrap(),
                "{lambda} + 1"
            );
            assert_eq!(
                qprime_eval(&lambda, &minus),
                eval_expansion(&sub_one(&lambda), &x).unwrap(),
                "{lambda} - 1"
            );
        }
    }

    #[test]
    fn skew_examples() {
        let vars = VarSet::x(2);
        let x = Alphabet::of_vars(&vars);
        let lambda = part(&[2, 1]);
        assert_eq!(skew_qprime(&lambda, &Partition::empty(), &x), qprime_eval(&lambda, &x));
        assert_eq!(skew_qprime(&lambda, &lambda, &x), XPoly::one(&vars));
        let empty = VarSet::new(Vec::<String>::new());
        let one = Alphabet::t_power(&empty, 0);
        assert_eq!(
            skew_qprime(&lambda, &part(&[1]), &one),
            XPoly::constant(&empty, aleph(&lambda, &part(&[1])))
        );
    }

    #[test]
    fn plane_partition_examples() {
        let f = plane_partition_qprime(&part(&[2, 1]), 3);
        assert_eq!(f.coeff(&[1, 1, 1]), lp(&[(0, 2), (1, 1)]));
        assert_eq!(f.coeff(&[3, 0, 0]), lp(&[(1, 1)]));
        assert_eq!(f.coeff(&[2, 1, 0]), lp(&[(0, 1), (1, 1)]));
        assert_eq!(f, qprime_eval(&part(&[2, 1]), &Alphabet::of_vars(&VarSet::x(3))));
        let v = VarSet::x(2);
        assert_eq!(plane_partition_qprime(&part(&[1]), 2), &XPoly::var(&v, 0) + &XPoly::var(&v, 1));
    }

    #[test]
    fn factorization_examples() {
        assert!(one_minus_x_factorization(&part(&[1]), 0, 1).unwrap().holds());
        assert!(one_minus_x_factorization(&part(&[2, 2, 1, 1]), 0, 2).unwrap().holds());
        assert!(one_minus_x_factorization(&part(&[3, 2]), 0, 2).unwrap().holds());
        assert_eq!(decompose(&part(&[3, 2]), 2), (2, part(&[1]), Partition::empty()));
    }

    #[test]
    fn principal_specialization_examples() {
        let v = VarSet::x(1);
        let x = Letter::var(1, 0);
        for lambda in [part(&[2, 1]), part(&[1]), part(&[3, 1, 1])] {
            assert!(principal_specialization_check(&lambda, &x, &v).holds(), "{lambda}");
        }
        let expected = &(&XPoly::constant(&v, lp(&[(1, 1)])) * &(&XPoly::one(&v) - &x.to_xpoly(&v)))
            * &(&XPoly::one(&v) - &Letter::new(-1, vec![1]).to_xpoly(&v));
        assert_eq!(principal_specialization(&part(&[2, 1]), &x, &v), expected);
        let none = VarSet::new(Vec::<String>::new());
        let t3 = Letter::t_power(0, 3);
        assert!(principal_specialization_check(&part(&[2, 1]), &t3, &none).holds());
    }

    #[test]
    fn two_letter_examples() {
        assert!(two_letter_factorization(1, &Partition::empty(), 0).unwrap().holds());
        assert!(two_letter_factorization(0, &Partition::empty(), 1).unwrap().holds());
        assert!(two_letter_factorization(1, &part(&[1]), 1).unwrap().holds());
        assert!(two_letter_factorization(0, &part(&[1]), 1).is_err());
    }
}
