use std::sync::Arc;

use proptest::prelude::*;

use borcherds_magnus::action::{KmLetter, KmWord};
use borcherds_magnus::algebra::Alphabet;
use borcherds_magnus::lie::{bch, exp, is_lie, log, lyndon_words, LieJson, LieSeries};
use borcherds_magnus::magnus::MagnusElement;
use borcherds_magnus::models::{build_monster, Caps, ModelSpec};
use borcherds_magnus::verify::compare_action;
use borcherds_magnus::Scalar;

const N: usize = 5;

fn alphabet() -> Arc<Alphabet> {
    Arc::new(Alphabet::plain(&["x", "y"]))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Scalar::ratio(p, q))
}

/// A Lie series with a coefficient on every Lyndon word of length ≤ N over two letters.
fn series() -> impl Strategy<Value = LieSeries> {
    let alph = alphabet();
    let words: Vec<_> = (1..=N).flat_map(|d| lyndon_words(&alph, d)).map(|w| w.word().clone()).collect();
    prop::collection::vec(scalar(), words.len()).prop_map(move |cs| {
        LieSeries::from_coords(&alph, words.iter().cloned().zip(cs).collect::<Vec<_>>(), N).unwrap()
    })
}

fn monster() -> &'static ModelSpec {
    static M: std::sync::OnceLock<ModelSpec> = std::sync::OnceLock::new();
    M.get_or_init(|| build_monster(Caps { max_block: Some(2), ..Caps::monster() }).unwrap())
}

fn km_word() -> impl Strategy<Value = KmWord> {
    let rows: Vec<_> = monster().table.rows().iter().map(|r| (r.label.clone(), r.kind)).collect();
    prop::collection::vec((0..rows.len(), scalar(), prop::sample::select(vec![(2, 1), (-1, 1), (1, 3)])), 1..4).prop_map(
        move |ls| {
            KmWord::new(
                ls.into_iter()
                    .map(|(i, u, (p, q))| match rows[i].1 {
                        borcherds_magnus::action::RowKind::H => KmLetter::torus(&rows[i].0, Scalar::ratio(p, q)),
                        _ if u.is_zero() => KmLetter::exp(&rows[i].0, Scalar::one()),
                        _ => KmLetter::exp(&rows[i].0, u),
                    })
                    .collect(),
            )
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn magnus_associative(a in series(), b in series(), c in series()) {
        let (a, b, c) = (MagnusElement::from_log(a), MagnusElement::from_log(b), MagnusElement::from_log(c));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn magnus_inverse(a in series()) {
        let a = MagnusElement::from_log(a);
        prop_assert!(a.mul(&a.inv()).unwrap().is_identity());
        prop_assert!(a.inv().mul(&a).unwrap().is_identity());
    }

    #[test]
    fn log_inverts_exp(a in series()) {
        prop_assert_eq!(log(&exp(&a, N), N).unwrap(), a);
    }

    #[test]
    fn bch_associative(a in series(), b in series(), c in series()) {
        let left = bch(&bch(&a, &b, N).unwrap(), &c, N).unwrap();
        let right = bch(&a, &bch(&b, &c, N).unwrap(), N).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn bch_stays_lie(a in series(), b in series()) {
        prop_assert!(is_lie(&bch(&a, &b, N).unwrap().to_polynomial()));
    }

    #[test]
    fn bracket_bilinear_and_antisymmetric(a in series(), b in series(), c in series(), k in scalar()) {
        let lhs = a.scale(&k).add(&b).unwrap().bracket(&c).unwrap();
        let rhs = a.bracket(&c).unwrap().scale(&k).add(&b.bracket(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.bracket(&b).unwrap(), b.bracket(&a).unwrap().neg());
    }

    #[test]
    fn jacobi(a in series(), b in series(), c in series()) {
        let t1 = a.bracket(&b.bracket(&c).unwrap()).unwrap();
        let t2 = b.bracket(&c.bracket(&a).unwrap()).unwrap();
        let t3 = c.bracket(&a.bracket(&b).unwrap()).unwrap();
        prop_assert!(t1.add(&t2).unwrap().add(&t3).unwrap().is_zero());
    }

    #[test]
    fn lie_json_round_trip(a in series()) {
        let text = serde_json::to_string(&a.to_json()).unwrap();
        let back: LieJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(LieSeries::from_json(&alphabet(), &back).unwrap(), a);
    }

    #[test]
    fn scalar_text_round_trip(s in scalar()) {
        prop_assert_eq!(s.to_string().parse::<Scalar>().unwrap(), s.clone());
        prop_assert_eq!(serde_json::from_str::<Scalar>(&serde_json::to_string(&s).unwrap()).unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn word_times_inverse_acts_trivially(w in km_word()) {
        let m = monster();
        let cmp = compare_action(&w.concat(&w.inverse().unwrap()), &KmWord::identity(), &m.table, &m.alphabet).unwrap();
        prop_assert!(cmp.equal);
    }

    #[test]
    fn adjoint_action_preserves_brackets(w in km_word(), i in 0usize..8, j in 0usize..8) {
        let m = monster();
        let g = m.group().unwrap();
        let ids: Vec<_> = m.alphabet.ids().collect();
        let n = m.caps.truncation;
        let a = LieSeries::generator(&m.alphabet, ids[i % ids.len()], Scalar::one(), n).unwrap();
        let b = LieSeries::generator(&m.alphabet, ids[j % ids.len()], Scalar::int(2), n).unwrap();
        let (Ok(ga), Ok(gb), Ok(gab)) = (g.ad(&w, &a), g.ad(&w, &b), g.ad(&w, &a.bracket(&b).unwrap())) else {
            return Err(TestCaseError::reject("left the window"));
        };
        prop_assert!(is_lie(&ga.to_polynomial()));
        prop_assert_eq!(gab, ga.bracket(&gb).unwrap());
    }
}
