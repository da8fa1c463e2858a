//! Semistandard tableaux, the charge statistic, and plane partitions.
//!
//! Tableaux are stored in English convention: `rows[0]` is the longest row,
//! rows weakly increase left to right and columns strictly increase from
//! `rows[0]` downwards. The French picture (longest row at the bottom) is
//! `rows` read in reverse order.
//!
//! The reading word reads every row left to right, starting from the last
//! (shortest) row and ending with `rows[0]`. With this convention the
//! superstandard tableau of weight `mu` reads `... 3^mu3 2^mu2 1^mu1`, the
//! word of charge zero.

use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentPoly, VarSet, XPoly};
use crate::error::{Error, Result};
use crate::hall_littlewood::aleph;
use crate::partition::{is_horizontal_strip, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates shape, row and column conditions; entries must be positive.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let ok_shape = rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let ok_rows = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let ok_cols = rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        let ok_entries = rows.iter().flatten().all(|&x| x >= 1);
        if ok_shape && ok_rows && ok_cols && ok_entries {
            Ok(Tableau { rows })
        } else {
            Err(Error::PreconditionViolation(format!(
                "not a semistandard tableau: {rows:?}"
            )))
        }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Rows listed bottom-up for the French picture.
    pub fn french_rows(&self) -> Vec<Vec<usize>> {
        self.rows.iter().rev().cloned().collect()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows shrink")
    }

    /// Multiplicity of each letter `1..=max`.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut w = vec![0; max];
        for &x in self.rows.iter().flatten() {
            w[x - 1] += 1;
        }
        w
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

fn weight_is_dominant(weight: &[usize]) -> bool {
    weight.windows(2).all(|w| w[0] >= w[1])
}

/// Charge of a word of dominant weight, by standard subword extraction.
///
/// Repeatedly: scan from the right end for a `1`, then leftwards (cyclically)
/// for a `2`, a `3`, ... up to the largest letter still present. Each time the
/// scan wraps around, the index increases by one; the charge of the subword is
/// the sum of the indices. The subword is removed and the process repeats.
pub fn charge(word: &[usize]) -> Result<usize> {
    if word.iter().any(|&x| x == 0) {
        return Err(Error::PreconditionViolation("letters must be positive".into()));
    }
    let max = word.iter().copied().max().unwrap_or(0);
    let mut weight = vec![0usize; max];
    for &x in word {
        weight[x - 1] += 1;
    }
    if !weight_is_dominant(&weight) {
        return Err(Error::NonDominantWeight(weight));
    }
    let n = word.len();
    let mut used = vec![false; n];
    let mut remaining = weight;
    let mut total = 0;
    while remaining.first().is_some_and(|&c| c > 0) {
        let top = remaining.iter().take_while(|&&c| c > 0).count();
        // first 1 from the right
        let mut pos = (0..n)
            .rev()
            .find(|&p| !used[p] && word[p] == 1)
            .expect("weight says a 1 remains");
        used[pos] = true;
        remaining[0] -= 1;
        let mut index = 0;
        for letter in 2..=top {
            let mut p = pos;
            let mut wrapped = false;
            loop {
                if p == 0 {
                    p = n - 1;
                    wrapped = true;
                } else {
                    p -= 1;
                }
                if !used[p] && word[p] == letter {
                    break;
                }
            }
            if wrapped {
                index += 1;
            }
            total += index;
            used[p] = true;
            remaining[letter - 1] -= 1;
            pos = p;
        }
    }
    Ok(total)
}

pub fn charge_tableau(t: &Tableau) -> Result<usize> {
    charge(&t.reading_word())
}

/// Partitions `lambda ⊇ mu` with `lambda/mu` a horizontal strip of `k` boxes,
/// optionally inside `bound`.
pub fn horizontal_strip_extensions(mu: &Partition, k: usize, bound: Option<&Partition>) -> Vec<Partition> {
    fn rec(
        mu: &Partition,
        bound: Option<&Partition>,
        i: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let base = mu.part(i);
        if i > mu.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).unwrap());
            }
            return;
        }
        let mut cap = if i == 0 { base + left } else { mu.part(i - 1) };
        if let Some(b) = bound {
            cap = cap.min(b.part(i));
        }
        if cap < base {
            return;
        }
        for len in base..=cap.min(base + left) {
            cur.push(len);
            rec(mu, bound, i + 1, left - (len - base), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(mu, bound, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Builds the tableau whose letter `i + 1` fills `chain[i+1] / chain[i]`.
fn tableau_from_chain(chain: &[Partition]) -> Tableau {
    let shape = chain.last().unwrap();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    for (letter, pair) in chain.windows(2).enumerate() {
        for (r, row) in rows.iter_mut().enumerate() {
            for _ in pair[0].part(r)..pair[1].part(r) {
                row.push(letter + 1);
            }
        }
    }
    Tableau { rows }
}

fn ssyt_rec(
    weight: &[usize],
    shape: Option<&Partition>,
    chain: &mut Vec<Partition>,
    out: &mut Vec<Tableau>,
) {
    let k = chain.len() - 1;
    if k == weight.len() {
        if shape.is_none_or(|s| chain.last().unwrap() == s) {
            out.push(tableau_from_chain(chain));
        }
        return;
    }
    let current = chain.last().unwrap().clone();
    for next in horizontal_strip_extensions(&current, weight[k], shape) {
        debug_assert!(is_horizontal_strip(&next, &current));
        chain.push(next);
        ssyt_rec(weight, shape, chain, out);
        chain.pop();
    }
}

/// Semistandard tableaux of the given shape and weight (`weight[i]` copies of
/// letter `i + 1`).
pub fn enumerate_ssyt(shape: &Partition, weight: &[usize]) -> Vec<Tableau> {
    if shape.size() != weight.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut out = Vec::new();
    ssyt_rec(weight, Some(shape), &mut vec![Partition::empty()], &mut out);
    out
}

/// Semistandard tableaux of the given weight, all shapes.
pub fn enumerate_ssyt_by_weight(weight: &[usize]) -> Vec<Tableau> {
    let mut out = Vec::new();
    ssyt_rec(weight, None, &mut vec![Partition::empty()], &mut out);
    out.sort();
    out
}

/// A plane partition of shape `chain[0]` in letters `1..=n`: the letter `i`
/// occupies `chain[i-1] / chain[i]`, and `chain[n]` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlanePartitionLayers {
    chain: Vec<Partition>,
}

impl PlanePartitionLayers {
    pub fn new(chain: Vec<Partition>) -> Result<Self> {
        let valid = !chain.is_empty()
            && chain.last().unwrap().is_empty()
            && chain.windows(2).all(|w| w[0].contains(&w[1]));
        if valid {
            Ok(PlanePartitionLayers { chain })
        } else {
            Err(Error::PreconditionViolation(format!(
                "not a decreasing chain ending at the empty partition: {chain:?}"
            )))
        }
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn shape(&self) -> &Partition {
        &self.chain[0]
    }

    /// Number of letters.
    pub fn letters(&self) -> usize {
        self.chain.len() - 1
    }

    /// Filling in English convention: entry = letter occupying the box.
    pub fn filling(&self) -> Vec<Vec<usize>> {
        let shape = self.shape();
        (0..shape.len())
            .map(|r| {
                (0..shape.part(r))
                    .map(|c| {
                        // letter i holds the boxes of chain[i-1] not in chain[i]
                        (1..self.chain.len())
                            .find(|&i| self.chain[i].part(r) <= c)
                            .unwrap()
                    })
                    .collect()
            })
            .collect()
    }
}

/// All plane partitions of shape `shape` in letters `1..=n`.
pub fn enumerate_plane_partitions(shape: &Partition, n: usize) -> Vec<PlanePartitionLayers> {
    fn rec(n: usize, chain: &mut Vec<Partition>, out: &mut Vec<PlanePartitionLayers>) {
        let last = chain.last().unwrap().clone();
        if chain.len() == n {
            chain.push(Partition::empty());
            out.push(PlanePartitionLayers { chain: chain.clone() });
            chain.pop();
            return;
        }
        for inner in last.subpartitions() {
            chain.push(inner);
            rec(n, chain, out);
            chain.pop();
        }
    }
    if n == 0 {
        return if shape.is_empty() {
            vec![PlanePartitionLayers {
                chain: vec![Partition::empty()],
            }]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    rec(n, &mut vec![shape.clone()], &mut out);
    out
}

/// `prod_i aleph(chain[i-1]/chain[i]) * x_i^{|chain[i-1]/chain[i]|}` with
/// `x_i` the `i`-th variable of `vars`.
pub fn aleph_weight(pp: &PlanePartitionLayers, vars: &VarSet) -> XPoly {
    assert!(pp.letters() <= vars.len(), "not enough variables for the plane partition");
    let mut coeff = LaurentPoly::one();
    let mut exp = vec![0i32; vars.len()];
    for (i, pair) in pp.chain.windows(2).enumerate() {
        coeff *= &aleph(&pair[0], &pair[1]);
        exp[i] = (pair[0].size() - pair[1].size()) as i32;
    }
    XPoly::monomial(vars, exp, coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    /// Brute force: every filling of the diagram with letters of the weight,
    /// checked for semistandardness.
    fn brute_force_count(shape: &Partition, weight: &[usize]) -> usize {
        let cells = shape.size();
        let n = weight.len();
        let mut count = 0;
        let mut fill = vec![1usize; cells];
        loop {
            let mut w = vec![0; n];
            for &x in &fill {
                w[x - 1] += 1;
            }
            if w == weight {
                let mut rows = Vec::new();
                let mut k = 0;
                for &len in shape.parts() {
                    rows.push(fill[k..k + len].to_vec());
                    k += len;
                }
                if Tableau::new(rows).is_ok() {
                    count += 1;
                }
            }
            // odometer
            let mut i = 0;
            while i < cells && fill[i] == n {
                fill[i] = 1;
                i += 1;
            }
            if i == cells {
                break;
            }
            fill[i] += 1;
        }
        count
    }

    #[test]
    fn ssyt_counts_match_brute_force() {
        assert_eq!(enumerate_ssyt(&part(&[2, 1]), &[2, 1]).len(), 1);
        assert_eq!(enumerate_ssyt(&part(&[3]), &[2, 1]).len(), 1);
        assert_eq!(enumerate_ssyt(&part(&[1, 1, 1]), &[2, 1]).len(), 0);
        for (shape, weight) in [
            (part(&[2, 1]), vec![2, 1]),
            (part(&[3]), vec![2, 1]),
            (part(&[2, 1]), vec![1, 1, 1]),
            (part(&[3, 2]), vec![2, 2, 1]),
            (part(&[2, 2, 1]), vec![1, 2, 2]),
            (part(&[3, 1, 1]), vec![2, 1, 1, 1]),
        ] {
            assert_eq!(
                enumerate_ssyt(&shape, &weight).len(),
                brute_force_count(&shape, &weight),
                "shape {shape} weight {weight:?}"
            );
        }
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&[2, 1]).unwrap(), 0);
        assert_eq!(charge(&[1, 2]).unwrap(), 1);
        assert_eq!(charge(&[3, 2, 1]).unwrap(), 0);
        assert_eq!(charge(&[1, 2, 3]).unwrap(), 3);
        assert!(matches!(charge(&[2, 2, 1]), Err(Error::NonDominantWeight(_))));
    }

    #[test]
    fn charge_on_tableaux() {
        let row = &enumerate_ssyt(&part(&[3]), &[2, 1])[0];
        assert_eq!(row.reading_word(), vec![1, 1, 2]);
        assert_eq!(charge_tableau(row).unwrap(), 1);
        let hook = &enumerate_ssyt(&part(&[2, 1]), &[2, 1])[0];
        assert_eq!(hook.reading_word(), vec![2, 1, 1]);
        assert_eq!(charge_tableau(hook).unwrap(), 0);
        let superstandard = &enumerate_ssyt(&part(&[3, 2, 2]), &[3, 2, 2])[0];
        assert_eq!(charge_tableau(superstandard).unwrap(), 0);
    }

    #[test]
    fn tableau_validation() {
        assert!(Tableau::new(vec![vec![1, 1], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        let t = Tableau::new(vec![vec![1, 1, 2], vec![2]]).unwrap();
        assert_eq!(t.shape(), part(&[3, 1]));
        assert_eq!(t.weight(), vec![2, 2]);
        assert_eq!(t.french_rows(), vec![vec![2], vec![1, 1, 2]]);
    }

    #[test]
    fn plane_partition_counts() {
        assert_eq!(enumerate_plane_partitions(&part(&[1]), 2).len(), 2);
        assert_eq!(enumerate_plane_partitions(&part(&[2, 1]), 1).len(), 1);
        // two one-letter fillings plus three two-letter fillings
        assert_eq!(enumerate_plane_partitions(&part(&[2, 1]), 2).len(), 5);
    }

    #[test]
    fn plane_partition_filling() {
        let pp = PlanePartitionLayers::new(vec![part(&[2, 1]), part(&[1]), Partition::empty()]).unwrap();
        assert_eq!(pp.filling(), vec![vec![2, 1], vec![1]]);
        assert!(PlanePartitionLayers::new(vec![part(&[1]), part(&[2]), Partition::empty()]).is_err());
    }

    #[test]
    fn aleph_weights() {
        let vars = VarSet::x(2);
        let single = PlanePartitionLayers::new(vec![part(&[2, 1]), Partition::empty(), Partition::empty()]).unwrap();
        assert_eq!(
            aleph_weight(&single, &vars),
            XPoly::monomial(&vars, vec![3, 0], LaurentPoly::t_pow(1))
        );
        let two = PlanePartitionLayers::new(vec![part(&[2, 1]), part(&[1]), Partition::empty()]).unwrap();
        assert_eq!(
            aleph_weight(&two, &vars),
            XPoly::monomial(&vars, vec![2, 1], crate::algebra::lp(&[(0, 1), (1, 1)]))
        );
        let top_empty = PlanePartitionLayers::new(vec![part(&[2]), part(&[2]), Partition::empty()]).unwrap();
        assert_eq!(aleph_weight(&top_empty, &vars), XPoly::monomial(&vars, vec![0, 2], LaurentPoly::one()));
    }
}
