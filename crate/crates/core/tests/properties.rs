use num_bigint::BigInt;
use proptest::prelude::*;
use rectsym_core::coefficients::{lr_oracle, Engine};
use rectsym_core::partitions::{add_rectangle, all_partitions_of, Partition, SignedSequence};
use rectsym_core::powersum::{p_to_schur, schur_to_p};
use rectsym_core::schur::{expand_in_schur, schur_poly, verify_inverse_lemma, verify_translation_lemma};
use rectsym_core::symmetries::{apply_rule, rect_complement, reduce_kronecker, SymmetryRule, Verdict};

fn partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(|w| {
        let ps = all_partitions_of(w);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

fn partition_of(w: usize) -> impl Strategy<Value = Partition> {
    let ps = all_partitions_of(w);
    (0..ps.len()).prop_map(move |i| ps[i].clone())
}

fn signed(n: usize) -> impl Strategy<Value = SignedSequence> {
    proptest::collection::vec(-3i32..=3, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        SignedSequence::new(v)
    })
}

fn kron_triple(max: usize) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (0..=max).prop_flat_map(|n| (partition_of(n), partition_of(n), partition_of(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_and_complement_are_involutions(p in partition(10), extra_w in 0u32..3, extra_h in 0usize..3) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        let (w, h) = (p.first() + extra_w, p.len() + extra_h);
        let c = rect_complement(&p, w, h).unwrap();
        prop_assert_eq!(c.weight() + p.weight(), w as usize * h);
        prop_assert_eq!(rect_complement(&c, w, h).unwrap(), p);
    }

    #[test]
    fn rectangle_translation_adds(p in partition(8), a in -2i64..=2, b in -2i64..=2, n in 0usize..4) {
        let step = add_rectangle(&p, a, n).and_then(|q| add_rectangle(&q, b, n));
        if let Some(q) = step {
            prop_assert_eq!(add_rectangle(&p, a + b, n), Some(q));
        }
    }

    #[test]
    fn schur_lemmas(lam in signed(3), k in -3i32..=3) {
        prop_assert!(verify_translation_lemma(&lam, k).unwrap());
        prop_assert!(verify_inverse_lemma(&lam).unwrap());
    }

    #[test]
    fn products_expand_with_lr_coefficients(lam in partition(4), mu in partition(3)) {
        let n = (lam.len() + mu.len()).max(1);
        let prod = &schur_poly(&lam.to_signed(n).unwrap(), n).unwrap() * &schur_poly(&mu.to_signed(n).unwrap(), n).unwrap();
        let expansion = expand_in_schur(&prod).unwrap();
        let (shift, terms) = expansion.partition_terms();
        prop_assert_eq!(shift, 0);
        for (nu, c) in terms {
            prop_assert_eq!(c, lr_oracle(&lam, &mu, &nu));
        }
    }

    #[test]
    fn power_sum_round_trip(lam in partition(7)) {
        let back = p_to_schur(&schur_to_p(&lam)).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert_eq!(back.get(&lam), Some(&BigInt::from(1)));
    }

    #[test]
    fn kronecker_is_symmetric((a, b, c) in kron_triple(6)) {
        let mut e = Engine::new();
        let g = e.kronecker(&a, &b, &c);
        prop_assert_eq!(&e.kronecker(&b, &a, &c), &g);
        prop_assert_eq!(&e.kronecker(&c, &b, &a), &g);
        prop_assert_eq!(&e.kronecker(&a, &b.conjugate(), &c.conjugate()), &g);
        prop_assert!(g >= BigInt::from(0));
    }

    #[test]
    fn kronecker_box_preserves_value((a, b, c) in kron_triple(6), dl in 0u32..2, dm in 0u32..2, dn in 0u32..2) {
        let rule = SymmetryRule::KronBox { l: a.first() + dl, m: b.first() + dm, n: c.first() + dn };
        let mut e = Engine::new();
        let g = e.kronecker(&a, &b, &c);
        match apply_rule(&rule, &[a, b, c]).unwrap().verdict {
            Verdict::Transformed(img) => {
                let w = img[0].weight();
                if w <= 9 {
                    prop_assert_eq!(e.kronecker(&img[0], &img[1], &img[2]), g);
                }
            }
            Verdict::Vanishes => prop_assert_eq!(g, BigInt::from(0)),
        }
    }

    #[test]
    fn reduction_never_increases_weight((a, b, c) in kron_triple(7)) {
        let r = reduce_kronecker(&a, &b, &c).unwrap();
        prop_assert!(r.weight_after <= r.weight_before);
        prop_assert_eq!(r.is_identity(), r.weight_after == r.weight_before);
        let best = r.candidates.iter().map(|c| c.weight.unwrap_or(0)).min().unwrap();
        prop_assert_eq!(r.weight_after, best.min(r.weight_before));
    }

    #[test]
    fn lr_box_preserves_value(lam in partition(3), mu in partition(3), dn in 0usize..2) {
        let mut e = Engine::new();
        for nu in all_partitions_of(lam.weight() + mu.weight()) {
            let n = nu.len() + dn;
            let rule = SymmetryRule::LrBox { l: lam.first(), m: mu.first(), n };
            let ix = [lam.clone(), mu.clone(), nu.clone()];
            let c = e.lr(&lam, &mu, &nu);
            match apply_rule(&rule, &ix).unwrap().verdict {
                Verdict::Transformed(img) => prop_assert_eq!(e.lr(&img[0], &img[1], &img[2]), c),
                Verdict::Vanishes => prop_assert_eq!(c, BigInt::from(0)),
            }
        }
    }
}
