use flagorbits::branching::{lr_coefficient, Partition};
use flagorbits::classifier::{mwz_classify_a, mwz_classify_c};
use flagorbits::fforacle::count_triple_orbits;
use flagorbits::liecomb::{
    bruhat_double_cosets, Composition, GroupDatum, ParabolicSpec, SymplecticComposition,
};
use proptest::prelude::*;

fn composition(n: usize) -> impl Strategy<Value = Composition> {
    let all: Vec<Composition> = Composition::all(n).into_iter().filter(|c| c.is_proper()).collect();
    proptest::sample::select(all)
}

fn symplectic(n: usize) -> impl Strategy<Value = SymplecticComposition> {
    let all: Vec<SymplecticComposition> =
        SymplecticComposition::all(n).into_iter().filter(|c| c.is_proper()).collect();
    proptest::sample::select(all)
}

fn partition(max: u32, rows: usize) -> impl Strategy<Value = Partition> {
    let all: Vec<Partition> = (0..=max).flat_map(|k| Partition::all(k, rows)).collect();
    proptest::sample::select(all)
}

fn shuffled(c: &Composition, seed: usize) -> Composition {
    let mut parts = c.parts().to_vec();
    let len = parts.len();
    parts.rotate_left(seed % len);
    if seed % 2 == 1 {
        parts.reverse();
    }
    Composition::new(parts).unwrap()
}

proptest! {
    #[test]
    fn mwz_a_invariant_under_permutations(
        n in 3usize..=6,
        seed in 0usize..64,
        idx in proptest::collection::vec(0usize..1000, 3),
    ) {
        let all: Vec<Composition> = Composition::all(n).into_iter().filter(|c| c.is_proper()).collect();
        let t: Vec<&Composition> = idx.iter().map(|i| &all[i % all.len()]).collect();
        let base = mwz_classify_a(t[0], t[1], t[2]).unwrap();
        let (a, b, c) = (shuffled(t[0], seed), shuffled(t[1], seed / 2), shuffled(t[2], seed / 4));
        for v in [
            mwz_classify_a(&b, &a, &c).unwrap(),
            mwz_classify_a(&c, &b, &a).unwrap(),
            mwz_classify_a(&a, &c, &b).unwrap(),
        ] {
            prop_assert_eq!(v.finite, base.finite);
            prop_assert_eq!(&v.matched_rows, &base.matched_rows);
        }
    }

    #[test]
    fn mwz_c_invariant_under_slot_order(a in symplectic(3), b in symplectic(3), c in symplectic(3)) {
        let base = mwz_classify_c(&a, &b, &c).unwrap();
        for v in [
            mwz_classify_c(&b, &a, &c).unwrap(),
            mwz_classify_c(&c, &a, &b).unwrap(),
            mwz_classify_c(&b, &c, &a).unwrap(),
        ] {
            prop_assert_eq!(v.finite, base.finite);
            prop_assert_eq!(&v.matched_rows, &base.matched_rows);
        }
    }

    #[test]
    fn bruhat_counts_are_symmetric(a in composition(5), b in composition(5)) {
        let pa = ParabolicSpec::gl(a);
        let pb = ParabolicSpec::gl(b);
        let ab = bruhat_double_cosets(&pa, &pb).unwrap();
        let ba = bruhat_double_cosets(&pb, &pa).unwrap();
        prop_assert_eq!(ab.count, ba.count);
        prop_assert_eq!(ab.representatives.len(), ab.count);
    }

    #[test]
    fn lr_is_symmetric(a in partition(4, 4), b in partition(4, 4), seed in 0usize..100) {
        let targets = Partition::all(a.size() + b.size(), 8);
        let c = &targets[seed % targets.len()];
        prop_assert_eq!(lr_coefficient(c, &a, &b), lr_coefficient(c, &b, &a));
    }
}

#[test]
fn bruhat_exact_for_sp6_maximal_pairs() {
    let g = GroupDatum::sp(3);
    let siegel = ParabolicSpec::sp(SymplecticComposition::siegel(3));
    let line = ParabolicSpec::sp(SymplecticComposition::new(vec![1], Some(4)).unwrap());
    for (a, b) in [(&siegel, &siegel), (&siegel, &line), (&line, &line)] {
        let want = bruhat_double_cosets(a, b).unwrap().count as u64;
        let got = count_triple_orbits(g, &[a.clone(), b.clone()], 2, 10_000_000).unwrap().orbits;
        assert_eq!(got, want, "{a} × {b}");
    }
}

#[test]
fn sp6_weyl_group_order() {
    let b = ParabolicSpec::borel(GroupDatum::sp(3));
    assert_eq!(bruhat_double_cosets(&b, &b).unwrap().count, 48);
}

#[test]
fn spy_4_3_is_bounded_in_odd_characteristic() {
    let g = GroupDatum::sp(2);
    let line = ParabolicSpec::sp(SymplecticComposition::new(vec![1], Some(2)).unwrap());
    let triple = [line.clone(), line.clone(), line];
    let v = mwz_classify_c(
        triple[0].shape().as_c().unwrap(),
        triple[1].shape().as_c().unwrap(),
        triple[2].shape().as_c().unwrap(),
    )
    .unwrap();
    assert!(v.finite);
    let at3 = count_triple_orbits(g, &triple, 3, 10_000_000).unwrap().orbits;
    let at5 = count_triple_orbits(g, &triple, 5, 10_000_000).unwrap().orbits;
    assert_eq!((at3, at5), (18, 18));
}
