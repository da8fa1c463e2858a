//! Operators on Laurent polynomials in `x_1..x_n`: the transpositions `s_i`,
//! the isobaric divided differences `pi_i`, the symmetrizer `pi_omega`,
//! truncation, and the operator "truncate then symmetrize" applied to
//! `x^u * prod_{i<j} (1 - t x_i/x_j)^{-1}`.
//!
//! Operators act on the right and indices `i` are 1-based, as in
//! `f pi_i = (x_i f - x_{i+1} f^{s_i}) / (x_i - x_{i+1})`.

use crate::algebra::{Exponent, LaurentPoly, VarSet, XPoly};
use crate::basis::{Basis, BasisExpansion};
use crate::error::{Error, Result};
use crate::partition::{IntVector, Partition};

fn check_index(f: &XPoly, i: usize) -> Result<()> {
    let n = f.nvars();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// `f^{s_i}`: exchanges `x_i` and `x_{i+1}`.
pub fn swap_si(f: &XPoly, i: usize) -> Result<XPoly> {
    check_index(f, i)?;
    Ok(f.swap_vars(i - 1, i))
}

/// `f pi_i` by the quotient formula, with an exact division.
pub fn pi_i(f: &XPoly, i: usize) -> Result<XPoly> {
    check_index(f, i)?;
    let (a, b) = (i - 1, i);
    let xa = XPoly::var(f.vars(), a);
    let xb = XPoly::var(f.vars(), b);
    let num = &(&xa * f) - &(&xb * &f.swap_vars(a, b));
    num.exact_div_linear(a, b)
}

/// `f pi_i` term by term: `x^v pi_i` is a signed run of monomials between
/// `x^v` and its image under `s_i`.
pub fn pi_i_expanded(f: &XPoly, i: usize) -> Result<XPoly> {
    check_index(f, i)?;
    let (a, b) = (i - 1, i);
    let mut out = XPoly::zero(f.vars());
    for (e, c) in f.terms() {
        let (p, q) = (e[a], e[b]);
        let mut put = |pa: i32, pb: i32, c: LaurentPoly| {
            let mut e2 = e.clone();
            e2[a] = pa;
            e2[b] = pb;
            out.add_term(e2, c);
        };
        if p >= q {
            for k in 0..=(p - q) {
                put(p - k, q + k, c.clone());
            }
        } else {
            for k in 1..(q - p) {
                put(p + k, q - k, -c);
            }
        }
    }
    Ok(out)
}

/// Reduced word `s1 (s2 s1) (s3 s2 s1) ...` of the longest permutation of
/// `n` letters.
pub fn longest_word(n: usize) -> Vec<usize> {
    (1..n).flat_map(|k| (1..=k).rev()).collect()
}

/// Applies `pi_{w[0]}`, then `pi_{w[1]}`, ...
pub fn pi_word(f: &XPoly, word: &[usize]) -> Result<XPoly> {
    word.iter().try_fold(f.clone(), |g, &i| pi_i(&g, i))
}

/// `f pi_omega` as a product of `pi_i` along [`longest_word`].
pub fn pi_omega(f: &XPoly) -> XPoly {
    pi_word(f, &longest_word(f.nvars())).expect("indices in range and divisions exact")
}

/// All permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], sign: i32, out: &mut Vec<(Vec<usize>, i32)>) {
        let n = used.len();
        if cur.len() == n {
            out.push((cur.clone(), sign));
            return;
        }
        for v in 0..n {
            if !used[v] {
                // inversions created with the values still unused and smaller
                let inv = (0..v).filter(|&w| !used[w]).count();
                used[v] = true;
                cur.push(v);
                rec(cur, used, if inv % 2 == 0 { sign } else { -sign }, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], 1, &mut out);
    out
}

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(vars: &VarSet) -> XPoly {
    let n = vars.len();
    let mut acc = XPoly::one(vars);
    for i in 0..n {
        for j in i + 1..n {
            acc = &acc * &(&XPoly::var(vars, i) - &XPoly::var(vars, j));
        }
    }
    acc
}

fn rho(n: usize) -> Vec<i32> {
    (0..n).rev().map(|k| k as i32).collect()
}

/// `f pi_omega` by the summation formula
/// `sum_sigma (f / prod_{i<j} (1 - x_j/x_i))^sigma`, computed as the
/// alternant of `f x^rho` divided exactly by the Vandermonde product.
pub fn pi_omega_summation(f: &XPoly) -> XPoly {
    let n = f.nvars();
    let g = f.mul_monomial(&rho(n));
    let mut alt = XPoly::zero(f.vars());
    for (perm, sign) in signed_permutations(n) {
        // variable k goes to position perm[k]
        let moved = g.map_exponents(|e| {
            let mut out = vec![0; n];
            for (k, &x) in e.iter().enumerate() {
                out[perm[k]] = x;
            }
            out
        });
        if sign > 0 {
            alt += &moved;
        } else {
            alt -= &moved;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            alt = alt.exact_div_linear(i, j).expect("alternant divisible by x_i - x_j");
        }
    }
    alt
}

/// `v >= 0`: every suffix sum `v_k + ... + v_n` is nonnegative.
pub fn is_nonneg_suffix(v: &[i32]) -> bool {
    let mut s = 0i64;
    for &x in v.iter().rev() {
        s += x as i64;
        if s < 0 {
            return false;
        }
    }
    true
}

/// Keeps the terms `x^v` with `v >= 0`.
pub fn truncate_nonneg(f: &XPoly) -> XPoly {
    f.filter(|e, _| is_nonneg_suffix(e))
}

/// The terms of `x^u prod_{i<j} (1 - t x_i/x_j)^{-1}` that survive
/// truncation, enumerated directly.
///
/// The term indexed by exponents `k_ij` has suffix sums
/// `S_m(u) - sum_{i < m <= j} k_ij`, so it survives exactly when `|u| >= 0`
/// and those sums are nonnegative for `m = 2..n`. The admissible `k_ij` form
/// a finite set; `S_m(u)` may exceed `|u|` (e.g. `u = (-3,2,1,1)`).
pub fn kernel_terms(vars: &VarSet, u: &[i32]) -> XPoly {
    let n = u.len();
    assert_eq!(n, vars.len(), "exponent length must match variable count");
    let mut out = XPoly::zero(vars);
    if u.iter().map(|&x| x as i64).sum::<i64>() < 0 {
        return out;
    }
    // budget[m] for boundary m (positions m..n form the suffix), m = 1..n-1
    let mut budget = vec![0i64; n];
    let mut s = 0i64;
    for m in (1..n).rev() {
        s += u[m] as i64;
        budget[m] = s;
    }
    if budget.iter().any(|&b| b < 0) {
        return out;
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    fn rec(
        pairs: &[(usize, usize)],
        idx: usize,
        budget: &mut [i64],
        exp: &mut Exponent,
        tdeg: i32,
        out: &mut XPoly,
    ) {
        if idx == pairs.len() {
            out.add_term(exp.clone(), LaurentPoly::t_pow(tdeg));
            return;
        }
        let (i, j) = pairs[idx];
        let cap = (i + 1..=j).map(|m| budget[m]).min().unwrap();
        for k in 0..=cap {
            for b in &mut budget[i + 1..=j] {
                *b -= k;
            }
            exp[i] += k as i32;
            exp[j] -= k as i32;
            rec(pairs, idx + 1, budget, exp, tdeg + k as i32, out);
            exp[i] -= k as i32;
            exp[j] += k as i32;
            for b in &mut budget[i + 1..=j] {
                *b += k;
            }
        }
    }
    rec(&pairs, 0, &mut budget, &mut u.to_vec(), 0, &mut out);
    out
}

/// `x^u prod_{i<j} (1 - t x_i/x_j)^{-1}` with every geometric factor expanded
/// to order `order`, before any truncation.
pub fn kernel_expansion_naive(vars: &VarSet, u: &[i32], order: usize) -> XPoly {
    let n = u.len();
    let mut acc = XPoly::monomial(vars, u.to_vec(), LaurentPoly::one());
    for i in 0..n {
        for j in i + 1..n {
            let geo = XPoly::from_terms(
                vars,
                (0..=order as i32).map(|k| {
                    let mut e = vec![0; n];
                    e[i] = k;
                    e[j] = -k;
                    (e, LaurentPoly::t_pow(k))
                }),
            );
            acc = &acc * &geo;
        }
    }
    acc
}

/// Largest suffix sum `S_m(u)`, `m = 2..n`: no `k_ij` above it can survive
/// truncation.
pub fn kernel_order_bound(u: &[i32]) -> usize {
    let mut s = 0i64;
    let mut best = 0i64;
    for &x in u[1..].iter().rev() {
        s += x as i64;
        best = best.max(s);
    }
    best as usize
}

/// Coefficients of `S_lambda` (lambda weakly decreasing, last entry possibly
/// negative) in a symmetric Laurent polynomial, read from the strictly
/// decreasing exponents of `g * a_rho`.
pub fn schur_readoff_generalized(g: &XPoly) -> Vec<(Vec<i32>, LaurentPoly)> {
    let n = g.nvars();
    let r = rho(n);
    let alt = g * &vandermonde(g.vars());
    alt.terms()
        .rev()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] > w[1]))
        .map(|(e, c)| (e.iter().zip(&r).map(|(a, b)| a - b).collect(), c.clone()))
        .collect()
}

/// Schur expansion of a symmetric polynomial, with the convention
/// `S_v = 0` when `v_n < 0`.
pub fn schur_readoff(g: &XPoly) -> BasisExpansion {
    BasisExpansion::from_terms(
        Basis::S,
        schur_readoff_generalized(g)
            .into_iter()
            .filter(|(l, _)| l.last().is_none_or(|&x| x >= 0))
            .map(|(l, c)| (Partition::from_ints(&l).expect("decreasing and nonnegative"), c)),
    )
}

/// `f ⋒`: truncation, symmetrization, Schur read-off.
pub fn cup(f: &XPoly) -> BasisExpansion {
    schur_readoff(&pi_omega(&truncate_nonneg(f)))
}

/// `x^u prod_{i<j} (1 - t x_i/x_j)^{-1} ⋒` in the Schur basis.
pub fn cup_kernel(u: &IntVector) -> BasisExpansion {
    let vars = VarSet::x(u.len());
    if u.is_empty() {
        return BasisExpansion::single(Basis::S, Partition::empty());
    }
    schur_readoff(&pi_omega(&kernel_terms(&vars, u.entries())))
}

/// Straightening of `S_v`: while some `v_i < v_{i+1}`, use
/// `S_v = -S_{.., v_{i+1}-1, v_i+1, ..}` (zero when `v_{i+1} = v_i + 1`);
/// finally `S_v = 0` if `v_n < 0`. Returns the sign and the partition.
pub fn straighten(v: &[i32]) -> Option<(i32, Partition)> {
    let mut v = v.to_vec();
    let mut sign = 1;
    while let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] < v[i + 1]) {
        if v[i + 1] == v[i] + 1 {
            return None;
        }
        let (a, b) = (v[i], v[i + 1]);
        v[i] = b - 1;
        v[i + 1] = a + 1;
        sign = -sign;
    }
    if v.last().is_some_and(|&x| x < 0) {
        return None;
    }
    Some((sign, Partition::from_ints(&v).expect("sorted and nonnegative")))
}

/// Schur expansion of `f` obtained by straightening every monomial that
/// survives truncation.
pub fn straighten_polynomial(f: &XPoly) -> BasisExpansion {
    let mut out = BasisExpansion::zero(Basis::S);
    for (e, c) in truncate_nonneg(f).terms() {
        if let Some((sign, lambda)) = straighten(e) {
            out.add_term(lambda, if sign > 0 { c.clone() } else { -c });
        }
    }
    out
}

/// `x^v prod_{i<j} (1 - t x_j/x_i) pi_omega`, without normalization.
pub fn defq_image(v: &[i32]) -> XPoly {
    let n = v.len();
    let vars = VarSet::x(n);
    let mut f = XPoly::monomial(&vars, v.to_vec(), LaurentPoly::one());
    for i in 0..n {
        for j in i + 1..n {
            let mut e = vec![0; n];
            e[j] = 1;
            e[i] = -1;
            let factor = &XPoly::one(&vars) - &XPoly::monomial(&vars, e, LaurentPoly::t_pow(1));
            f = &f * &factor;
        }
    }
    pi_omega(&f)
}

/// Normalizing factor `(1-t)^n / ((1-t)...(1-t^{m0}))`, as numerator and
/// denominator.
pub fn defq_normalization(n: usize, m0: usize) -> (LaurentPoly, LaurentPoly) {
    (
        LaurentPoly::one_minus_t_pow(1).pow(n as u32),
        crate::partition::t_factorial(m0),
    )
}

/// `Q_lambda(x_1..x_n)` through the symmetrizer formula; `n = v.len()`.
pub fn defq_operator(v: &IntVector) -> Result<XPoly> {
    let lambda = v
        .as_partition()
        .ok_or_else(|| Error::NotAPartition(v.entries().iter().map(|&x| x as i64).collect()))?;
    let n = v.len();
    let m0 = n - lambda.len();
    let (num, den) = defq_normalization(n, m0);
    defq_image(v.entries()).scale(&num).exact_div_scalar(&den)
}
