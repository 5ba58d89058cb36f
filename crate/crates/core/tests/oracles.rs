//! Library routines checked against the independent oracles in `common`.

mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use borcherds_magnus::algebra::Alphabet;
use borcherds_magnus::km::{build_irreducible, is_prenilpotent, real_roots, Gcm};
use borcherds_magnus::lie::{bch, lyndon_words_over, LieSeries};
use borcherds_magnus::models::{
    h3_gcm, j_coefficients, partitions_upto, simple_multiplicities, two_one, vprime_character,
};
use borcherds_magnus::Scalar;
use common::{lower, product, rat, torus, upper};

#[test]
fn lyndon_counts_follow_witt() {
    for k in 1..=3u32 {
        let letters: Vec<u32> = (0..k).collect();
        for n in 1..=8 {
            assert_eq!(lyndon_words_over(&letters, n).len() as u64, common::witt_count(k as u64, n as u64), "k={k} n={n}");
        }
    }
}

#[test]
fn j_matches_e6_route_far_out() {
    let lib = j_coefficients(14);
    let oracle: Vec<BigInt> = common::j_via_e6(14).into_iter().map(BigInt::from).collect();
    assert_eq!(lib, oracle);
}

#[test]
fn partitions_and_two_one_match_counting() {
    let p = common::partitions(40);
    assert_eq!(partitions_upto(40), p.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
    for k in 0..=40 {
        assert_eq!(two_one(k), BigInt::from(common::two_one(k)), "k={k}");
    }
}

#[test]
fn bch_of_generators_matches_formula() {
    let alph = Arc::new(Alphabet::plain(&["x", "y"]));
    let x = LieSeries::generator(&alph, 0, Scalar::one(), 4).unwrap();
    let y = LieSeries::generator(&alph, 1, Scalar::one(), 4).unwrap();
    let got = common::Series::from_poly(&bch(&x, &y, 4).unwrap().to_polynomial(), 4);
    let want = common::bch_degree4(&common::Series::from_poly(&x.to_polynomial(), 4), &common::Series::from_poly(&y.to_polynomial(), 4));
    assert_eq!(got, want);
    assert_eq!(got.terms[&vec![0, 1]], rat(1, 2));
    assert_eq!(got.terms[&vec![0, 0, 1]], rat(1, 12));
}

#[test]
fn sl2_highest_weight_modules_have_unit_strings() {
    for m in 0..=6 {
        let oracle = common::weyl_kac_dims(&[vec![2]], &[m], m + 2, &[(vec![1], 1)]);
        for (b, d) in &oracle {
            assert_eq!(*d, i64::from(b[0] <= m), "m={m} β={b:?}");
        }
        let v = build_irreducible(&Gcm::sl2("1"), &[m], m as usize + 2).unwrap();
        for (b, d) in v.weight_dims() {
            assert_eq!(d as i64, oracle[&b]);
        }
    }
}

#[test]
fn h3_module_weight_spaces_match_character() {
    let a = h3_gcm();
    let roots = vec![(vec![1, 0], 1), (vec![0, 1], 1), (vec![1, 1], 1)];
    let oracle = common::weyl_kac_dims(a.rows(), &[1, 1], 2, &roots);
    assert_eq!(oracle[&vec![1, 1]], 2);
    assert_eq!(oracle[&vec![2, 0]], 0);
    assert_eq!(oracle[&vec![0, 2]], 0);
    let lib = build_irreducible(&a, &[1, 1], 2).unwrap().weight_dims();
    for (b, d) in &oracle {
        assert_eq!(lib.get(b).copied().unwrap_or(0) as i64, *d, "β={b:?}");
    }
}

#[test]
fn h3_prenilpotence_matches_weyl_group_search() {
    let a = h3_gcm();
    let real = real_roots(&a, 40);
    let mut roots: Vec<Vec<i64>> = real_roots(&a, 12).roots().cloned().collect();
    roots.extend(roots.clone().into_iter().map(|r| r.into_iter().map(|x| -x).collect::<Vec<_>>()));
    let mut both = [0, 0];
    for (p, x) in roots.iter().enumerate() {
        for y in &roots[p + 1..] {
            let lib = is_prenilpotent(&a, &real, x, y).unwrap();
            let brute = common::prenilpotent_brute(a.rows(), x, y, 16);
            assert_eq!(lib, brute, "α={x:?} β={y:?}");
            both[usize::from(lib)] += 1;
        }
    }
    assert!(both[0] > 0 && both[1] > 0);
    assert!(!is_prenilpotent(&a, &real, &[1, 0], &[0, 1]).unwrap());
    assert!(is_prenilpotent(&a, &real, &[1, 0], &[0, -1]).unwrap());
}

#[test]
fn gnome_character_matches_product_expansion() {
    let ours = common::gnome_product(|a, b| common::two_one(1 + a * b));
    let lib = vprime_character(12, 12);
    for (&(a, b), v) in &ours {
        assert_eq!(lib[a][b], BigInt::from(*v), "<{a},{b}>");
    }
    for (&(a, b), v) in &ours {
        assert_eq!(ours.get(&(b, a)).copied().unwrap_or(*v), *v, "<{a},{b}> is not mirrored");
    }
    let heads = common::string_heads(&ours);
    for (&(l, n), &m) in &heads {
        assert!(n < l || m >= 0, "<{l},{n}>");
    }
    let simple = simple_multiplicities(3, 11).unwrap();
    for (&(l, n), m) in &simple {
        if let Some(&h) = heads.get(&(l, n)) {
            assert_eq!(*m, BigInt::from(h));
        }
    }
    // ⟨2,2⟩ carries no new highest weight vector
    assert!(simple[&(2, 2)].is_zero());
    assert!(simple_multiplicities(6, 8).is_ok());
}

#[test]
fn sl2_matrix_forms_of_the_torus_and_weyl_relations() {
    let (s, t, u) = (rat(2, 3), rat(-5, 7), rat(3, 1));
    let ti = t.recip();
    // F(−t) E(s) F(t) = E(−t⁻¹) F(−t² s) E(t⁻¹)
    let lhs = product(&[lower(&-&t), upper(&s), lower(&t)]);
    let fixed = product(&[upper(&-&ti), lower(&-(&t * &t * &s)), upper(&ti)]);
    let printed = product(&[upper(&-&ti), lower(&-(&t * &t * &s)), upper(&-&t)]);
    assert_eq!(lhs, fixed);
    assert_ne!(lhs, printed);
    // T(s) E(u) T(s)⁻¹ = E(s² u), and the printed exponent 1 fails
    let conj = product(&[torus(&s), upper(&u), torus(&s.recip())]);
    assert_eq!(conj, upper(&(&s * &s * &u)));
    assert_ne!(conj, upper(&(&s * &u)));
    let conj = product(&[torus(&s), lower(&u), torus(&s.recip())]);
    assert_eq!(conj, lower(&(&u / (&s * &s))));
    assert_ne!(conj, lower(&(&u / &s)));
    // w̃ = E(1) F(−1) E(1) swaps the root groups with a sign
    let one = num_rational::BigRational::one();
    let w = product(&[upper(&one), lower(&-&one), upper(&one)]);
    let wi = product(&[upper(&-&one), lower(&one), upper(&-&one)]);
    assert_eq!(product(&[w.clone(), upper(&u), wi.clone()]), lower(&-&u));
    assert_eq!(product(&[w, torus(&s), wi]), torus(&s.recip()));
}
