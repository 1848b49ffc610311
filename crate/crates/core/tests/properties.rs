use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use xcomplex::enumerate::DEFAULT_BRUTEFORCE_CAP;
use xcomplex::presentation::builders::{disk, library, sphere};
use xcomplex::presentation::{CrossedTerm, CrossedWord, Letter, ModuleElt, ModuleTerm, OwnedAttach, Sign, Word};
use xcomplex::selfcheck::random;
use xcomplex::{
    count_homotopies_from, count_homs, count_homs_bruteforce, enumerate_homs, homotopy_classes, homotopy_target,
    invariant_ia, suite, wedge, CWPresentation, ExactRational, FiniteCrossedComplex, Homotopy1,
};

fn instance(seed: u64) -> (CWPresentation, FiniteCrossedComplex) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coefficients = random::small_coefficients();
    let a = coefficients[(seed % coefficients.len() as u64) as usize].clone();
    let p = random::presentation(&mut rng, a.len() + 1);
    (p, a)
}

fn word_from(bits: &[(usize, bool)], gens: usize) -> Word {
    Word(bits.iter().map(|&(g, pos)| if pos { Letter::pos(g % gens) } else { Letter::neg(g % gens) }).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn search_matches_brute_force(seed in any::<u64>()) {
        let (p, a) = instance(seed);
        prop_assert_eq!(count_homs(&p, &a).unwrap(), count_homs_bruteforce(&p, &a, DEFAULT_BRUTEFORCE_CAP).unwrap());
    }

    #[test]
    fn conjugating_a_relator_keeps_the_count(seed in any::<u64>(), u in prop::collection::vec((0usize..8, any::<bool>()), 0..4)) {
        let (p, a) = instance(seed);
        prop_assume!(p.cell_count(2) > 0 && p.cell_count(1) > 0 && p.cell_count(3) == 0);
        let c = (seed as usize / 7) % p.cell_count(2);
        let u = word_from(&u, p.cell_count(1));
        let q = p.with_attach2(c, p.attach2()[c].conjugated_by(&u));
        prop_assert_eq!(count_homs(&p, &a).unwrap(), count_homs(&q, &a).unwrap());
    }

    #[test]
    fn wedge_multiplies_counts(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (p, a) = instance(s1);
        let mut rng = ChaCha8Rng::seed_from_u64(s2);
        let q = random::presentation(&mut rng, a.len() + 1);
        let pq = wedge(&p, &q);
        prop_assert_eq!(count_homs(&pq, &a).unwrap(), count_homs(&p, &a).unwrap() * count_homs(&q, &a).unwrap());
        prop_assert_eq!(invariant_ia(&pq, &a).unwrap(), invariant_ia(&p, &a).unwrap() * invariant_ia(&q, &a).unwrap());
    }

    #[test]
    fn disk_wedge_scales_by_group_order(seed in any::<u64>(), n in 2usize..6) {
        let (p, a) = instance(seed);
        let q = wedge(&p, &disk(n).unwrap());
        prop_assert_eq!(count_homs(&q, &a).unwrap(), count_homs(&p, &a).unwrap() * BigUint::from(a.size_at(n).unwrap()));
        prop_assert_eq!(invariant_ia(&q, &a).unwrap(), invariant_ia(&p, &a).unwrap());
    }

    #[test]
    fn cells_above_the_kill_dimension_are_ignored(seed in any::<u64>(), coef in -3i64..4) {
        let (p, a) = instance(seed);
        let n = a.len() + 2;
        let junk = if p.cell_count(n - 1) > 0 {
            ModuleElt(vec![ModuleTerm { coef, twist: Word::empty(), gen: 0 }])
        } else {
            ModuleElt::zero()
        };
        let attach = if n == 3 {
            OwnedAttach::Crossed(CrossedWord::empty())
        } else {
            OwnedAttach::Module(junk)
        };
        let q = p.with_cell(n, attach).unwrap();
        prop_assert_eq!(count_homs(&q, &a).unwrap(), count_homs(&p, &a).unwrap());
    }

    #[test]
    fn cell_order_does_not_matter(seed in any::<u64>()) {
        let (p, a) = instance(seed);
        prop_assert_eq!(count_homs(&p.reversed(), &a).unwrap(), count_homs(&p, &a).unwrap());
    }

    #[test]
    fn targets_are_morphisms_on_random_instances(seed in any::<u64>()) {
        let (p, a) = instance(seed);
        let homs = enumerate_homs(&p, &a).unwrap();
        let per = count_homotopies_from(&p, &a, 1);
        prop_assume!(BigUint::from(homs.len()) * &per <= BigUint::from(20_000u32));
        let classes = homotopy_classes(&p, &a).unwrap();
        prop_assert_eq!(classes.sizes.iter().sum::<usize>(), homs.len());
        for f in &homs {
            let id = Homotopy1::identity(f.clone(), &p, &a);
            prop_assert_eq!(&homotopy_target(&a, &p, &id).unwrap(), f);
            for data in xcomplex::homotopy::HomotopiesFrom::new(&p, &a) {
                let g = homotopy_target(&a, &p, &Homotopy1 { source: f.clone(), data }).unwrap();
                let i = homs.binary_search(&g).unwrap();
                prop_assert_eq!(classes.class_of[i], classes.class_of[homs.binary_search(f).unwrap()]);
            }
        }
    }
}

#[test]
fn circle_classes_count_pi1() {
    let s1 = sphere(1).unwrap();
    for a in suite::extended_suite() {
        assert_eq!(homotopy_classes(&s1, &a).unwrap().count(), a.pi1().unwrap().order(), "{a}");
    }
}

#[test]
fn peiffer_block_three_cell_counts_like_a_wedged_three_sphere() {
    // c (u ▷ c) c⁻¹ ((r u) ▷ c)⁻¹ is trivial in the free crossed module, so
    // the 3-cell is attached as if by a constant map
    let p = sphere(1).unwrap().with_cell(2, OwnedAttach::Word(Word(vec![Letter::pos(0), Letter::pos(0)]))).unwrap();
    let u = Word(vec![Letter::pos(0)]);
    let ru = p.attach2()[0].concat(&u);
    let block = CrossedWord(vec![
        CrossedTerm { conj: Word::empty(), gen: 0, sign: Sign::Pos },
        CrossedTerm { conj: u, gen: 0, sign: Sign::Pos },
        CrossedTerm { conj: Word::empty(), gen: 0, sign: Sign::Neg },
        CrossedTerm { conj: ru, gen: 0, sign: Sign::Neg },
    ]);
    let q = p.with_cell(3, OwnedAttach::Crossed(block)).unwrap();
    for a in [suite::l3_z4(), suite::l3_twisted()] {
        let spherical = count_homs(&wedge(&p, &sphere(3).unwrap()), &a).unwrap();
        assert_eq!(count_homs(&q, &a).unwrap(), spherical, "{a}");
        assert_eq!(count_homs_bruteforce(&q, &a, DEFAULT_BRUTEFORCE_CAP).unwrap(), count_homs(&q, &a).unwrap());
    }
}

#[test]
fn library_invariants_are_unchanged_by_disks() {
    for a in suite::standard_suite() {
        for p in library() {
            let i = invariant_ia(&p, &a).unwrap();
            for n in 2..=4 {
                assert_eq!(invariant_ia(&wedge(&p, &disk(n).unwrap()), &a).unwrap(), i);
            }
            assert!(i > ExactRational::zero());
        }
    }
}
