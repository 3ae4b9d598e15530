use proptest::prelude::*;
use qshap_core::check::all_passed;
use qshap_core::hochschild::{euler_characteristic_matches, homology_dims, AlgebraKind, HochschildSetup, ModuleKind};
use qshap_core::quotient::{free_dims, verma_dims, FreeQuotient, IrreducibleModule};
use qshap_core::scalar::bracket;
use qshap_core::tensor::TensorModule;
use qshap_core::{
    CartanDatum, Combination, CyclotomicField, FreeAlgebra, FreeElement, LaurentRing, MultiDegree, ScalarRing,
    VermaModule, Weight, Word,
};

const PRESETS: [&str; 4] = ["A1", "A1xA1", "A2", "B2"];

fn field(name: &str, l: u32) -> FreeAlgebra<CyclotomicField> {
    FreeAlgebra::new(CyclotomicField::new(l).unwrap(), CartanDatum::preset(name).unwrap())
}

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..rank, 0..=max_len).prop_map(|v| Word::new(&v))
}

/// A preset index together with words over its index set.
fn preset_words(n: usize, max_len: usize) -> impl Strategy<Value = (usize, Vec<Word>)> {
    (0..PRESETS.len()).prop_flat_map(move |p| {
        let rank = CartanDatum::preset(PRESETS[p]).unwrap().rank();
        (Just(p), prop::collection::vec(word(rank, max_len), n))
    })
}

fn weight(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-4i64..=4, rank).prop_map(Weight::new)
}

fn combo<R: ScalarRing>(ring: &R, words: &[Word], coeffs: &[i64]) -> FreeElement<R::Elem> {
    let mut out = Combination::new();
    for (w, c) in words.iter().zip(coeffs) {
        out.add_term(ring, w.clone(), ring.from_int(*c));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn form_is_symmetric((p, ws) in preset_words(2, 4)) {
        let alg = field(PRESETS[p], 5);
        let (x, y) = (&ws[0], &ws[1]);
        prop_assert_eq!(alg.form_s_words(x, y), alg.form_s_words(y, x));
    }

    #[test]
    fn form_is_bilinear((p, ws) in preset_words(3, 3), a in -3i64..=3, b in -3i64..=3) {
        let alg = field(PRESETS[p], 7);
        let ring = alg.ring();
        let x = combo(ring, &ws[..2], &[a, b]);
        let y = alg.monomial(&ws[2]);
        let expected = ring.add(
            &ring.mul(&ring.from_int(a), &alg.form_s_words(&ws[0], &ws[2])),
            &ring.mul(&ring.from_int(b), &alg.form_s_words(&ws[1], &ws[2])),
        );
        prop_assert_eq!(alg.form_s_rec(&x, &y), expected);
    }

    #[test]
    fn form_is_a_bialgebra_pairing((p, ws) in preset_words(2, 2)) {
        let alg = field(PRESETS[p], 5);
        let ring = alg.ring();
        let (x, y) = (&ws[0], &ws[1]);
        let xy = Combination::basis(ring, vec![x.clone(), y.clone()]);
        for z in Word::all_with_content(&x.concat(y).content(alg.rank())) {
            let lhs = alg.form_s_words(&x.concat(y), &z);
            let rhs = alg.form_s_tensor(&xy, &alg.coproduct(&alg.monomial(&z))).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn coproduct_is_coassociative((p, ws) in preset_words(1, 4)) {
        let alg = field(PRESETS[p], 5);
        let ring = alg.ring();
        let d = alg.coproduct(&alg.monomial(&ws[0]));
        let mut left = Combination::new();
        let mut right = Combination::new();
        for (k, c) in &d {
            for (a, c2) in &alg.coproduct(&alg.monomial(&k[0])) {
                left.add_term(ring, vec![a[0].clone(), a[1].clone(), k[1].clone()], ring.mul(c, c2));
            }
            for (b, c2) in &alg.coproduct(&alg.monomial(&k[1])) {
                right.add_term(ring, vec![k[0].clone(), b[0].clone(), b[1].clone()], ring.mul(c, c2));
            }
        }
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(alg.iterated_coproduct(&alg.monomial(&ws[0]), 3), left);
    }

    #[test]
    fn s_map_is_multiplicative((p, ws) in preset_words(2, 3)) {
        let alg = field(PRESETS[p], 5);
        let (x, y) = (alg.monomial(&ws[0]), alg.monomial(&ws[1]));
        let lhs = alg.s_map(&alg.multiply(&x, &y));
        let rhs = alg.dual_multiply(&alg.s_map(&x), &alg.s_map(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contravariant_form_perm_matches_rec((p, ws) in preset_words(1, 4), seed in 0u64..1000) {
        let alg = field(PRESETS[p], 7);
        let rank = alg.rank();
        let lam = Weight::new((0..rank).map(|i| ((seed as i64 + 3 * i as i64) % 9) - 4).collect());
        let v = VermaModule::new(alg, lam).unwrap();
        let x = &ws[0];
        for y in Word::all_with_content(&x.content(rank)) {
            prop_assert_eq!(v.form_perm(x, &y).unwrap(), v.form_words(x, &y));
        }
    }

    #[test]
    fn epsilon_is_adjoint_to_theta((p, ws) in preset_words(1, 3), i in 0usize..2) {
        let alg = field(PRESETS[p], 5);
        let i = i % alg.rank();
        let v = VermaModule::new(alg.clone(), Weight::new(vec![1; alg.rank()])).unwrap();
        let x = &ws[0];
        for y in Word::all_with_content(&x.content(alg.rank()).add_letter(i)) {
            let lhs = v.form_words(&x.prepend(i), &y);
            let rhs = v.form_rec(&v.algebra().monomial(x), &v.epsilon_word(i, &y));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn adjdelta_vanishes((p, ws) in preset_words(2, 3), i in 0usize..2, j in 0usize..2, lam in weight(2)) {
        let alg = field(PRESETS[p], 7);
        let (i, j) = (i % alg.rank(), j % alg.rank());
        let lam = Weight::new(lam.values()[..alg.rank()].to_vec());
        // a homogeneous element: all words of one content
        let nu = ws[0].content(alg.rank());
        let ring = alg.ring();
        let words = Word::all_with_content(&nu);
        let coeffs: Vec<i64> = (0..words.len()).map(|k| k as i64 - 1).collect();
        let x = combo(ring, &words, &coeffs);
        prop_assert!(alg.adjdelta_residual(i, j, &lam, &x).unwrap().is_zero());
    }

    #[test]
    fn tensor_action_is_a_module_action((p, ws) in preset_words(4, 2), lam in weight(2), mu in weight(2)) {
        let alg = field(PRESETS[p], 5);
        let rank = alg.rank();
        let ws2 = [Weight::new(lam.values()[..rank].to_vec()), Weight::new(mu.values()[..rank].to_vec())];
        let t = TensorModule::new(alg.clone(), &ws2).unwrap();
        let ring = alg.ring();
        let m = Combination::basis(ring, vec![ws[2].clone(), ws[3].clone()]);
        let (x, y) = (alg.monomial(&ws[0]), alg.monomial(&ws[1]));
        let lhs = t.f_action(&alg.multiply(&x, &y), &m);
        let rhs = t.f_action(&x, &t.f_action(&y, &m));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn twisted_tensor_product_is_associative((p, ws) in preset_words(6, 2)) {
        let alg = field(PRESETS[p], 5);
        let ring = alg.ring();
        let t = |a: &Word, b: &Word| Combination::basis(ring, vec![a.clone(), b.clone()]);
        let (a, b, c) = (t(&ws[0], &ws[1]), t(&ws[2], &ws[3]), t(&ws[4], &ws[5]));
        let lhs = alg.tensor_multiply(&alg.tensor_multiply(&a, &b).unwrap(), &c).unwrap();
        let rhs = alg.tensor_multiply(&a, &alg.tensor_multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_an_algebra_map((p, ws) in preset_words(2, 3)) {
        let alg = field(PRESETS[p], 5);
        let (x, y) = (alg.monomial(&ws[0]), alg.monomial(&ws[1]));
        let lhs = alg.coproduct(&alg.multiply(&x, &y));
        let rhs = alg.tensor_multiply(&alg.coproduct(&x), &alg.coproduct(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_forms_agree((p, ws) in preset_words(1, 4), lam in weight(2)) {
        let alg = FreeAlgebra::new(LaurentRing, CartanDatum::preset(PRESETS[p]).unwrap());
        let rank = alg.rank();
        let v = VermaModule::new(alg.clone(), Weight::new(lam.values()[..rank].to_vec())).unwrap();
        let x = &ws[0];
        for y in Word::all_with_content(&x.content(rank)) {
            prop_assert_eq!(alg.form_s_perm(x, &y).unwrap(), alg.form_s_words(x, &y));
            prop_assert_eq!(v.form_perm(x, &y).unwrap(), v.form_words(x, &y));
        }
    }

    #[test]
    fn coaction_matches_commutators_in_laurent_mode((p, ws) in preset_words(1, 3), lam in weight(2)) {
        let alg = FreeAlgebra::new(LaurentRing, CartanDatum::preset(PRESETS[p]).unwrap());
        let v = VermaModule::new(alg.clone(), Weight::new(lam.values()[..alg.rank()].to_vec())).unwrap();
        prop_assert_eq!(v.coaction_word(&ws[0]), v.coaction_via_commutators_word(&ws[0]).unwrap());
    }
}

#[test]
fn verma_form_on_one_letter_is_a_bracket() {
    let alg = field("A2", 7);
    let ring = alg.ring().clone();
    for a in -5..=5 {
        let v = VermaModule::new(alg.clone(), Weight::new(vec![a, 0])).unwrap();
        assert_eq!(v.form_words(&Word::letter(0), &Word::letter(0)), bracket(&ring, a));
    }
}

#[test]
fn quotient_dims_agree_with_gram_ranks() {
    for name in ["A1", "A2", "B2"] {
        let alg = field(name, 5);
        let q = FreeQuotient::new(alg.clone(), 4).unwrap();
        for row in free_dims(&alg, 4) {
            let b = q.basis(&row.nu).unwrap();
            assert_eq!((b.dim(), b.ambient_dim(), b.kernel_dim()), (row.quotient, row.ambient, row.kernel()));
        }
        let v = VermaModule::new(alg.clone(), Weight::new(vec![1; alg.rank()])).unwrap();
        let l = IrreducibleModule::new(v.clone(), 4).unwrap();
        for row in verma_dims(&v, 4) {
            assert_eq!(l.basis(&row.nu).unwrap().dim(), row.quotient);
        }
    }
}

#[test]
fn irreducible_modules_satisfy_the_relations() {
    for (name, lam) in [("A1", vec![2]), ("A2", vec![1, 0]), ("B2", vec![1, 1])] {
        let alg = field(name, 5);
        let l = IrreducibleModule::new(VermaModule::new(alg, Weight::new(lam)).unwrap(), 4).unwrap();
        assert!(all_passed(&l.u_relation_checks().unwrap()), "{name}");
        assert!(all_passed(&l.singular_vector_check().unwrap()), "{name}");
    }
}

#[test]
fn euler_characteristics_match() {
    let alg = field("A2", 5);
    for (a, m) in [
        (AlgebraKind::Free, ModuleKind::Verma),
        (AlgebraKind::Free, ModuleKind::Irreducible),
        (AlgebraKind::Quotient, ModuleKind::Irreducible),
    ] {
        let s = HochschildSetup::new(alg.clone(), &[Weight::new(vec![1, 1])], a, m, 3).unwrap();
        for nu in MultiDegree::up_to_depth(2, 3) {
            let c = s.build_complex(&nu).unwrap();
            assert!(c.d_squared_is_zero(alg.ring()).unwrap(), "{a:?} {m:?} {nu}");
            assert!(euler_characteristic_matches(&homology_dims(alg.ring(), &c)));
        }
    }
    let bad = HochschildSetup::new(alg.clone(), &[Weight::new(vec![1, 1])], AlgebraKind::Quotient, ModuleKind::Verma, 3);
    assert!(matches!(bad, Err(qshap_core::Error::NotAQuotientModule)));
}

#[test]
fn free_complex_is_acyclic_over_verma_modules() {
    let alg = field("B2", 7);
    let s = HochschildSetup::new(alg.clone(), &[Weight::new(vec![2, -1])], AlgebraKind::Free, ModuleKind::Verma, 3)
        .unwrap();
    for h in s.homology_table().unwrap() {
        assert_eq!(h.homology_dim, usize::from(h.r == 0 && h.nu.is_zero()), "{} {}", h.r, h.nu);
    }
}
