use hlkit::algebra::lp;
use hlkit::format::{expansion_from_json, expansion_to_json, xpoly_from_json, xpoly_to_json};
use hlkit::partition::{n_skew, n_stat, partitions_up_to, t_binomial, zvec_order_geq};
use hlkit::symmetrize::{pi_i, pi_omega, pi_omega_summation, pi_word};
use hlkit::tableaux::charge;
use hlkit::{Basis, BasisExpansion, IntVector, LaurentPoly, Partition, VarSet, XPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..6, -20i64..20), 0..5).prop_map(|t| lp(&t))
}

fn big_laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..4, any::<i64>()), 0..4).prop_map(|t| {
        LaurentPoly::from_terms(t.into_iter().map(|(e, c)| (e, BigInt::from(c) * BigInt::from(c))))
    })
}

fn xpoly(n: usize, max_deg: i32) -> impl Strategy<Value = XPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), laurent()), 1..5).prop_map(move |terms| {
        let vars = VarSet::x(n);
        let mut f = XPoly::zero(&vars);
        for (mut e, c) in terms {
            // keep total degree <= max_deg
            while e.iter().sum::<i32>() > max_deg {
                let i = e.iter().position(|&x| x > 0).unwrap();
                e[i] -= 1;
            }
            f.add_term(e, c);
        }
        f
    })
}

fn small_partition(max: usize) -> impl Strategy<Value = Partition> {
    let all = partitions_up_to(max);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

/// One elementary Knuth move at position `i`, if its pattern applies.
fn knuth_move(w: &mut [usize], i: usize, kind: bool) {
    if i + 2 >= w.len() {
        return;
    }
    let (a, b, c) = (w[i], w[i + 1], w[i + 2]);
    if kind {
        // y x z <-> y z x when x < y <= z
        if (b < a && a <= c) || (c < a && a <= b) {
            w.swap(i + 1, i + 2);
        }
    } else {
        // x z y <-> z x y when x <= y < z
        if (a <= c && c < b) || (b <= c && c < a) {
            w.swap(i, i + 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn laurent_exact_division(a in big_laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn xpoly_ring_axioms(f in xpoly(3, 3), g in xpoly(3, 3), h in xpoly(3, 2)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn xpoly_exact_division(f in xpoly(3, 4), c in laurent(), i in 0usize..3, j in 0usize..3, e in prop::collection::vec(-2i32..3, 3)) {
        prop_assume!(!c.is_zero() && i != j);
        let vars = f.vars().clone();
        let linear = (&XPoly::var(&vars, i) - &XPoly::var(&vars, j)).scale(&c);
        prop_assert_eq!((&f * &linear).exact_div(&linear).unwrap(), f.clone());
        let mono = XPoly::monomial(&vars, e, c);
        prop_assert_eq!((&f * &mono).exact_div(&mono).unwrap(), f);
    }

    #[test]
    fn zvec_order_is_partial(
        u in prop::collection::vec(-3i32..4, 3),
        v in prop::collection::vec(-3i32..4, 3),
        w in prop::collection::vec(-3i32..4, 3),
    ) {
        let (u, v, w) = (IntVector(u), IntVector(v), IntVector(w));
        prop_assert!(zvec_order_geq(&u, &u).unwrap());
        if zvec_order_geq(&u, &v).unwrap() && zvec_order_geq(&v, &u).unwrap() {
            prop_assert_eq!(&u, &v);
        }
        if zvec_order_geq(&u, &v).unwrap() && zvec_order_geq(&v, &w).unwrap() {
            prop_assert!(zvec_order_geq(&u, &w).unwrap());
        }
    }

    #[test]
    fn pi_i_idempotent_and_absorbs_pi_omega(f in xpoly(4, 6), i in 1usize..4) {
        let once = pi_i(&f, i).unwrap();
        prop_assert_eq!(pi_i(&once, i).unwrap(), once);
        let full = pi_omega(&f);
        prop_assert_eq!(pi_i(&full, i).unwrap(), full);
    }

    #[test]
    fn braid_relations(f in xpoly(4, 5), i in 1usize..3) {
        prop_assert_eq!(pi_word(&f, &[i, i + 1, i]).unwrap(), pi_word(&f, &[i + 1, i, i + 1]).unwrap());
    }

    #[test]
    fn pi_omega_two_ways(f in xpoly(4, 6)) {
        prop_assert_eq!(pi_omega(&f), pi_omega_summation(&f));
    }

    #[test]
    fn charge_is_plactic_invariant(
        mu in small_partition(7),
        shuffle in prop::collection::vec(any::<u32>(), 8),
        moves in prop::collection::vec((0usize..8, any::<bool>()), 0..30),
    ) {
        let mut w: Vec<usize> = mu.parts().iter().enumerate().flat_map(|(i, &m)| std::iter::repeat(i + 1).take(m)).collect();
        prop_assume!(w.len() >= 3);
        for (k, s) in shuffle.iter().enumerate() {
            let j = (*s as usize) % w.len();
            let k = k % w.len();
            w.swap(k, j);
        }
        let before = charge(&w).unwrap();
        let len = w.len();
        for (i, kind) in moves {
            knuth_move(&mut w, i % (len - 2), kind);
        }
        prop_assert_eq!(charge(&w).unwrap(), before);
    }

    #[test]
    fn json_round_trip(terms in prop::collection::vec((small_partition(6), big_laurent()), 0..6), basis in 0usize..4) {
        let basis = [Basis::S, Basis::Qp, Basis::Q, Basis::P][basis];
        let e = BasisExpansion::from_terms(basis, terms);
        let text = expansion_to_json(&e).to_string();
        prop_assert_eq!(expansion_from_json(&serde_json::from_str(&text).unwrap()).unwrap(), e);
    }

    #[test]
    fn xpoly_json_round_trip(f in xpoly(3, 4)) {
        prop_assert_eq!(xpoly_from_json(&xpoly_to_json(&f)).unwrap(), f);
    }
}

#[test]
fn conjugation_is_an_involution() {
    for l in partitions_up_to(12) {
        assert_eq!(l.conjugate().conjugate(), l);
    }
}

#[test]
fn theta_exponent_identity() {
    let all = partitions_up_to(8);
    for l in &all {
        let lc = l.conjugate();
        for m in &all {
            let mc = m.conjugate();
            let dot: usize = (0..lc.len().max(mc.len())).map(|i| lc.part(i) * mc.part(i)).sum();
            assert_eq!(n_skew(l, m) - m.size() as i64, n_stat(l) + n_stat(m) - dot as i64, "{l} {m}");
        }
    }
}

#[test]
fn t_binomial_symmetry_and_pascal() {
    for m in 1..=10i64 {
        for a in 0..=m {
            assert_eq!(t_binomial(m, a).unwrap(), t_binomial(m, m - a).unwrap());
            if a >= 1 && a < m {
                let rhs = &t_binomial(m - 1, a - 1).unwrap() + &(&LaurentPoly::t_pow(a as i32) * &t_binomial(m - 1, a).unwrap());
                assert_eq!(t_binomial(m, a).unwrap(), rhs);
            }
        }
    }
}
