//! Partitions, integer vectors and the statistics built on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros. Ordered lexicographically on its parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Accepts an integer vector that must be a partition (negative or
    /// increasing entries are rejected; trailing zeros are fine).
    pub fn from_ints(v: &[i32]) -> Result<Self> {
        if v.iter().any(|&x| x < 0) {
            return Err(Error::NotAPartition(v.iter().map(|&x| x as i64).collect()));
        }
        Self::new(v.iter().map(|&x| x as usize).collect())
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `k^m`: `m` parts equal to `k`.
    pub fn rectangle(k: usize, m: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k; m])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect())
    }

    /// `m[i]` = number of parts equal to `i`, for `i >= 1` (`m[0]` unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Zero-padded to length `n` as a signed vector; `None` if longer than `n`.
    pub fn padded(&self, n: usize) -> Option<IntVector> {
        (self.len() <= n).then(|| {
            let mut v: Vec<i32> = self.0.iter().map(|&p| p as i32).collect();
            v.resize(n, 0);
            IntVector(v)
        })
    }

    /// `mu ⊆ self`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions contained in `self`, in lexicographic order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()).unwrap());
                return;
            }
            for p in 0..=cap.min(outer[i]) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Concatenation `[self, tail]`; fails unless the result is a partition.
    pub fn concat(&self, tail: &Partition) -> Result<Partition> {
        let mut v = self.0.clone();
        v.extend_from_slice(&tail.0);
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `4,4,3,2,2,2,1`, `[2,1]`, `1^2 2^3` (part^multiplicity), or `0`/`[]`
    /// for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let bad = || Error::Parse(format!("invalid partition '{s}'"));
        let mut parts = Vec::new();
        if s.contains('^') {
            for tok in s.split_whitespace() {
                let (part, mult) = tok.split_once('^').ok_or_else(bad)?;
                let part: usize = part.parse().map_err(|_| bad())?;
                let mult: usize = mult.parse().map_err(|_| bad())?;
                parts.extend(std::iter::repeat(part).take(mult));
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
        } else {
            for tok in s.split([',', ' ']).filter(|t| !t.is_empty()) {
                parts.push(tok.trim().parse().map_err(|_| bad())?);
            }
        }
        Partition::new(parts)
    }
}

/// Builds a partition from a literal slice; panics when not a partition.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal is a partition")
}

/// Element of `Z^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntVector(pub Vec<i32>);

impl IntVector {
    pub fn new(v: Vec<i32>) -> Self {
        IntVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().map(|&x| x as i64).sum()
    }

    /// `sum_{i >= k} v_i` for `k = 0..n` (0-based), i.e. all suffix sums.
    pub fn suffix_sums(&self) -> Vec<i64> {
        let mut out = vec![0; self.0.len()];
        let mut acc = 0i64;
        for i in (0..self.0.len()).rev() {
            acc += self.0[i] as i64;
            out[i] = acc;
        }
        out
    }

    /// The partition with these entries, if they form one.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::from_ints(&self.0).ok()
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl FromStr for IntVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("invalid integer vector '{s}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
    }
}

/// `n(lambda) = sum_i (i-1) lambda_i`.
pub fn n_stat(lambda: &Partition) -> i64 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| (i * p) as i64)
        .sum()
}

/// `n(lambda/mu) = sum_i d_i (d_i - 1) / 2` with `d_i = lambda~_i - mu~_i`;
/// defined for any pair of partitions.
pub fn n_skew(lambda: &Partition, mu: &Partition) -> i64 {
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let width = lc.len().max(mc.len());
    (0..width)
        .map(|i| {
            let d = lc.part(i) as i64 - mc.part(i) as i64;
            d * (d - 1) / 2
        })
        .sum()
}

/// `b_lambda = prod_i prod_{j=1}^{m_i} (1 - t^j)` over part sizes `i >= 1`.
pub fn b_poly(lambda: &Partition) -> LaurentPoly {
    lambda
        .multiplicities()
        .iter()
        .skip(1)
        .flat_map(|&m| 1..=m)
        .map(|j| LaurentPoly::one_minus_t_pow(j as i32))
        .product()
}

/// `(t; t)_k = (1 - t)(1 - t^2)...(1 - t^k)`.
pub fn t_factorial(k: usize) -> LaurentPoly {
    (1..=k).map(|j| LaurentPoly::one_minus_t_pow(j as i32)).product()
}

/// Gaussian binomial `[m choose k]_t`, computed as an exact quotient of
/// products. `OutOfRange` unless `0 <= k <= m`.
pub fn t_binomial(m: i64, k: i64) -> Result<LaurentPoly> {
    if k < 0 || k > m {
        return Err(Error::OutOfRange { m, k });
    }
    let num: LaurentPoly = (0..k)
        .map(|i| LaurentPoly::one_minus_t_pow((m - i) as i32))
        .product();
    num.exact_div(&t_factorial(k as usize))
}

/// `[m choose k]_t`, or zero outside `0 <= k <= m` (the convention used in
/// strip sums).
pub fn t_binomial_or_zero(m: i64, k: i64) -> LaurentPoly {
    t_binomial(m, k).unwrap_or_default()
}

/// `[k1 + ... + kr; k1, ..., kr]_t`.
pub fn t_multinomial(ks: &[usize]) -> LaurentPoly {
    let total: usize = ks.iter().sum();
    let den: LaurentPoly = ks.iter().map(|&k| t_factorial(k)).product();
    t_factorial(total)
        .exact_div(&den)
        .expect("t-multinomial coefficients are polynomials")
}

/// `mu ⊆ lambda`.
pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu)
}

/// `lambda/mu` is a vertical strip: `mu ⊆ lambda` and at most one box per row.
pub fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| lambda.part(i) - mu.part(i) <= 1)
}

/// `lambda/mu` is a horizontal strip: `lambda_i >= mu_i >= lambda_{i+1}`.
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| mu.part(i) >= lambda.part(i + 1))
}

/// `v >= u` iff every suffix sum of `v - u` is nonnegative.
pub fn zvec_order_geq(v: &IntVector, u: &IntVector) -> Result<bool> {
    if v.len() != u.len() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: u.len(),
        });
    }
    let mut acc = 0i64;
    for i in (0..v.len()).rev() {
        acc += v.0[i] as i64 - u.0[i] as i64;
        if acc < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `v >= 0` in the suffix-sum order.
pub fn is_nonneg(v: &[i32]) -> bool {
    let mut acc = 0i64;
    for &x in v.iter().rev() {
        acc += x as i64;
        if acc < 0 {
            return false;
        }
    }
    true
}

/// All partitions of `n`, in lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in lexicographic order.
pub fn partitions_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    fn rec(rest: usize, cap: usize, len_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if len_left == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, len_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions of size at most `max_size`, smallest first.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}
