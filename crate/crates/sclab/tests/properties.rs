//! Invariant and property tests: the algebraic laws behind the
//! constructions, checked on random instances and on the witness family.

mod support;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sclab::atoms::{atom_count, atoms, syntactic_semigroup_size};
use sclab::ops::{boolean_op, concat, direct_product, BoolOp};
use sclab::transform::{default_semigroup_budget, generate_semigroup, Transformation};
use sclab::witness::{
    boolean_witness_pair, dialect, universal_witness, PartialPermutation, MASTER_ALPHABET,
};
use sclab::{fixtures, Alphabet, Dfa, StateSet};

use support::{concat_member, member_over, random_dfa, random_nfa, residual_count, words_over};

fn witness(n: usize, pi: &str) -> Dfa {
    dialect(
        &universal_witness(n).unwrap(),
        &PartialPermutation::parse(pi).unwrap(),
    )
    .unwrap()
}

// ---- core automata ----

#[test]
fn minimize_is_idempotent() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let d = random_dfa(&mut rng, 8, 4);
        let once = d.minimize();
        assert_eq!(once.minimize(), once);
    }
}

#[test]
fn completion_preserves_the_language() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..40 {
        let d = random_dfa(&mut rng, 5, 2); // over a subset of {a,b}
        let gamma = Alphabet::new(['a', 'b', 'c']).unwrap();
        let completed = d.complete(&gamma).unwrap();
        for word in words_over(&['a', 'b', 'c'], 6) {
            let expected = member_over(&d, &word);
            assert_eq!(member_over(&completed, &word), expected);
            // words using a foreign letter are rejected outright
            if word.iter().any(|&c| !d.alphabet().contains(c)) {
                assert!(!expected);
            }
        }
    }
}

#[test]
fn completion_does_not_change_the_effective_alphabet() {
    let mut rng = StdRng::seed_from_u64(13);
    let gamma = Alphabet::new(['a', 'b', 'c', 'd']).unwrap();
    for _ in 0..60 {
        let d = random_dfa(&mut rng, 6, 3);
        let completed = d.complete(&gamma).unwrap();
        assert_eq!(
            completed.effective_alphabet().names(),
            d.effective_alphabet().names()
        );
    }
}

#[test]
fn determinization_agrees_with_direct_simulation() {
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..50 {
        let nfa = random_nfa(&mut rng, 4, 2);
        let dfa = nfa.determinize().unwrap();
        for word in words_over(&nfa.alphabet().names(), 8) {
            let indices: Vec<usize> = word
                .iter()
                .map(|&c| nfa.alphabet().position_of(c).unwrap())
                .collect();
            assert_eq!(
                nfa.accepts(&indices).unwrap(),
                dfa.accepts(&indices).unwrap()
            );
        }
    }
}

#[test]
fn complexity_is_invariant_under_letter_renaming() {
    let mut rng = StdRng::seed_from_u64(15);
    let renamings = ["d,c,b,a", "b,c,d,a", "c,a,d,b"];
    for _ in 0..40 {
        let d = random_dfa(&mut rng, 6, 4);
        for pi in renamings {
            let renamed = dialect(&d, &PartialPermutation::parse(pi).unwrap()).unwrap();
            assert_eq!(renamed.quotient_complexity(), d.quotient_complexity());
        }
    }
}

// ---- transformations ----

fn arb_transformation(max_n: usize) -> impl Strategy<Value = Transformation> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n)
            .prop_map(|images| Transformation::from_images(images).unwrap())
    })
}

fn arb_transformation_triple(max_n: usize) -> impl Strategy<Value = (Transformation, Transformation, Transformation)> {
    (1..=max_n).prop_flat_map(|n| {
        let one = proptest::collection::vec(0..n, n)
            .prop_map(|images| Transformation::from_images(images).unwrap());
        (one.clone(), one.clone(), one)
    })
}

proptest! {
    #[test]
    fn composition_is_associative(
        (s, t, u) in arb_transformation_triple(6)
    ) {
        let left = s.compose(&t).unwrap().compose(&u).unwrap();
        let right = s.compose(&t.compose(&u).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn set_images_distribute_over_union(
        t in arb_transformation(6),
        raw_p in proptest::collection::vec(any::<bool>(), 6),
        raw_r in proptest::collection::vec(any::<bool>(), 6),
    ) {
        let n = t.degree();
        let p = StateSet::from_states(n, (0..n).filter(|&q| raw_p[q]));
        let r = StateSet::from_states(n, (0..n).filter(|&q| raw_r[q]));
        let mut union = p.clone();
        union.union_with(&r);

        let mut image_union = t.apply_to_set(&p);
        image_union.union_with(&t.apply_to_set(&r));
        prop_assert_eq!(t.apply_to_set(&union), image_union);
    }

    #[test]
    fn permutations_are_exactly_the_bijections(t in arb_transformation(6)) {
        let mut sorted = t.images().to_vec();
        sorted.sort_unstable();
        let is_bijection = sorted == (0..t.degree()).collect::<Vec<_>>();
        prop_assert_eq!(t.is_permutation(), is_bijection);

        // permutations preserve set cardinality, non-permutations shrink
        // some set
        let full = StateSet::full(t.degree());
        prop_assert_eq!(t.apply_to_set(&full).len() == t.degree(), is_bijection);
    }
}

#[test]
fn witness_generators_fill_the_transformation_monoid() {
    for n in 3..=6usize {
        let gens = [
            Transformation::cycle(n, &(0..n).collect::<Vec<_>>()).unwrap(),
            Transformation::transposition(n, 0, 1).unwrap(),
            Transformation::point(n, n - 1, 0).unwrap(),
        ];
        let sg = generate_semigroup(&gens, default_semigroup_budget(n)).unwrap();
        assert_eq!(sg.len(), n.pow(n as u32));
    }
}

#[test]
fn closures_never_exceed_the_monoid_size() {
    let mut rng = StdRng::seed_from_u64(16);
    for _ in 0..30 {
        let n = rng.gen_range(1..=5usize);
        let gens: Vec<Transformation> = (0..rng.gen_range(1..=3))
            .map(|_| {
                Transformation::from_images((0..n).map(|_| rng.gen_range(0..n)).collect())
                    .unwrap()
            })
            .collect();
        let sg = generate_semigroup(&gens, default_semigroup_budget(n)).unwrap();
        assert!(sg.len() <= n.pow(n as u32));
    }
}

// ---- witnesses ----

#[test]
fn every_master_letter_is_effective_in_the_witness() {
    for n in 3..=8 {
        let u = universal_witness(n).unwrap();
        assert_eq!(u.effective_alphabet().names(), vec!['a', 'b', 'c', 'd']);
    }
}

#[test]
fn dialects_substitute_languages_letter_for_letter() {
    // a word is in the dialect exactly when its preimage under the renaming
    // is in the original
    let dialects = ["b,a,-,d", "a,b,-,c", "a,b", "d,c,b,a"];
    for n in 3..=4 {
        let u = universal_witness(n).unwrap();
        for pi_text in dialects {
            let pi = PartialPermutation::parse(pi_text).unwrap();
            let image = dialect(&u, &pi).unwrap();
            for word in words_over(&image.alphabet().names(), 6) {
                let preimage: Vec<char> = word
                    .iter()
                    .map(|&c| {
                        let i = (0..4).find(|&i| pi.target(i) == Some(c)).unwrap();
                        MASTER_ALPHABET[i]
                    })
                    .collect();
                assert_eq!(member_over(&image, &word), member_over(&u, &preimage));
            }
        }
    }
}

#[test]
fn total_injective_dialects_preserve_complexity() {
    for n in 3..=6 {
        let u = universal_witness(n).unwrap();
        for pi in ["d,c,b,a", "b,a,d,c", "a,b,c,d"] {
            let pi = PartialPermutation::parse(pi).unwrap();
            assert!(pi.is_total());
            let renamed = dialect(&u, &pi).unwrap();
            assert_eq!(renamed.quotient_complexity(), n);
        }
    }
}

#[test]
fn union_witnesses_have_private_letters_on_both_sides() {
    for (m, n) in [(3, 3), (4, 5)] {
        let (l, r) = boolean_witness_pair(BoolOp::Union, m, n).unwrap();
        let left_only: Vec<char> = l
            .alphabet()
            .names()
            .into_iter()
            .filter(|&c| !r.alphabet().contains(c))
            .collect();
        let right_only: Vec<char> = r
            .alphabet()
            .names()
            .into_iter()
            .filter(|&c| !l.alphabet().contains(c))
            .collect();
        assert_eq!(left_only, vec!['c']);
        assert_eq!(right_only, vec!['d']);
    }
}

// ---- language operations ----

#[test]
fn kappa_commutes_for_symmetric_operations() {
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..20 {
        let l = random_dfa(&mut rng, 4, 3);
        let r = random_dfa(&mut rng, 4, 3);
        for op in [
            BoolOp::Union,
            BoolOp::SymmetricDifference,
            BoolOp::Intersection,
        ] {
            assert_eq!(
                boolean_op(&l, &r, op).state_count(),
                boolean_op(&r, &l, op).state_count()
            );
        }
    }
}

#[test]
fn private_letters_reach_the_sink_rows() {
    // in the union product, the right-private letter d walks the left side
    // into its sink while the left-private letter c does the same on the
    // right
    for n in [3usize, 4] {
        let (l, r) = boolean_witness_pair(BoolOp::Union, n, n).unwrap();
        let product = direct_product(&l, &r, BoolOp::Union);
        let d_pos = product.dfa.alphabet().position_of('d').unwrap();
        let c_pos = product.dfa.alphabet().position_of('c').unwrap();
        let start = product.dfa.initial();
        assert_eq!(product.labels[start].left, Some(0));
        assert_eq!(product.labels[start].right, Some(0));

        let after_d = product.dfa.step(start, d_pos);
        assert_eq!(product.labels[after_d].left, None);
        assert_eq!(product.labels[after_d].right, Some(0));

        let after_c = product.dfa.step(start, c_pos);
        assert_eq!(product.labels[after_c].left, Some(0));
        assert_eq!(product.labels[after_c].right, None);
    }
}

#[test]
fn subsets_with_equal_heads_are_separated_by_the_cycle_letter() {
    // two reachable subsets with the same left part and different right
    // parts are told apart by pumping the right automaton's cycle letter b
    let (l, r) = sclab::witness::product_witness_pair(3, 3).unwrap();
    let m = l.state_count();
    let n = r.state_count();
    let det = sclab::ops::concat_nfa(&l, &r).determinization(1000).unwrap();
    let b = det.dfa.alphabet().position_of('b').unwrap();

    let mut checked = 0;
    for (i, s1) in det.subsets.iter().enumerate() {
        for (j, s2) in det.subsets.iter().enumerate().skip(i + 1) {
            let left1: Vec<usize> = s1.iter().filter(|&q| q < m).collect();
            let left2: Vec<usize> = s2.iter().filter(|&q| q < m).collect();
            if left1 != left2 {
                continue;
            }
            let q = (0..n)
                .find(|&q| s1.contains(m + q) != s2.contains(m + q))
                .expect("distinct subsets with equal heads differ on the right");
            let word = vec![b; n - 1 - q];
            let (mut p1, mut p2) = (i, j);
            for &x in &word {
                p1 = det.dfa.step(p1, x);
                p2 = det.dfa.step(p2, x);
            }
            assert_ne!(
                det.dfa.is_final(p1),
                det.dfa.is_final(p2),
                "b^{} fails to separate {s1:?} from {s2:?}",
                n - 1 - q
            );
            checked += 1;
        }
    }
    assert!(checked > 50, "expected many same-head pairs, saw {checked}");
}

#[test]
fn concat_complexity_matches_the_residual_oracle() {
    let l = fixtures::ends_with_b();
    let r = fixtures::ends_with_c();
    let result = concat(&l, &r).unwrap();
    // the result's own alphabet is the full union here, so counting
    // residuals over it is exact
    assert_eq!(result.alphabet().names(), vec!['a', 'b', 'c']);
    let oracle = residual_count(
        |w| concat_member(&l, &r, w),
        &['a', 'b', 'c'],
        5,
        5,
    );
    assert_eq!(result.state_count(), oracle);
}

// ---- atoms & semigroup ----

#[test]
fn every_short_word_falls_into_exactly_one_nonempty_atom() {
    for d in [witness(3, "a,b,c"), fixtures::ends_with_b()] {
        let minimal = d.normalize();
        let report = atoms(&d).unwrap();
        for word in words_over(&minimal.alphabet().names(), 5) {
            let indices: Vec<usize> = word
                .iter()
                .map(|&c| minimal.alphabet().position_of(c).unwrap())
                .collect();
            let profile = StateSet::from_states(
                minimal.state_count(),
                (0..minimal.state_count())
                    .filter(|&q| minimal.is_final(minimal.walk(q, &indices).unwrap())),
            );
            let hits: Vec<_> = report
                .profiles
                .iter()
                .filter(|p| p.subset == profile)
                .collect();
            assert_eq!(hits.len(), 1);
            assert!(hits[0].nonempty, "word {word:?} lands in an empty atom");
        }
    }
}

#[test]
fn atom_counts_cap_at_two_to_the_n() {
    let mut rng = StdRng::seed_from_u64(18);
    for _ in 0..25 {
        let d = random_dfa(&mut rng, 5, 3);
        let n = d.quotient_complexity();
        assert!(atom_count(&d).unwrap() <= 1 << n);
    }
    // and the witness reaches the cap, including one size past the
    // full-report acceptance grid
    for n in 3..=5 {
        assert_eq!(atom_count(&witness(n, "a,b,c")).unwrap(), 1 << n);
    }
}

#[test]
fn semigroup_size_agrees_with_word_action_enumeration() {
    // every transformation induced by a nonempty word of length <= 8 shows
    // up in the closure, and vice versa at n = 3 the counts coincide
    let d = witness(3, "a,b,c");
    let mut actions: HashSet<Vec<usize>> = HashSet::new();
    let mut layer: Vec<Vec<usize>> = vec![(0..3).collect()];
    for _ in 0..8 {
        let mut next = Vec::new();
        for action in &layer {
            for x in 0..3 {
                let stepped: Vec<usize> = action.iter().map(|&q| d.step(q, x)).collect();
                if actions.insert(stepped.clone()) {
                    next.push(stepped);
                }
            }
        }
        layer = next;
    }
    assert_eq!(actions.len(), syntactic_semigroup_size(&d).unwrap());
}

#[test]
#[ignore = "slow: larger sweeps past the default grids"]
fn bounds_hold_well_past_the_default_grids() {
    let (l, r) = boolean_witness_pair(BoolOp::Union, 8, 8).unwrap();
    assert_eq!(boolean_op(&l, &r, BoolOp::Union).state_count(), 8 * 8 + 8 + 8 + 1);

    let (l, r) = sclab::witness::product_witness_pair(6, 6).unwrap();
    assert_eq!(concat(&l, &r).unwrap().state_count(), 6 * 64 + 32);

    assert_eq!(
        sclab::ops::star(&witness(10, "a,b")).unwrap().state_count(),
        512 + 256
    );
    assert_eq!(
        sclab::ops::reverse(&witness(10, "a,b,c")).unwrap().state_count(),
        1024
    );
    assert_eq!(
        syntactic_semigroup_size(&witness(7, "a,b,c")).unwrap(),
        823_543
    );
}

#[test]
fn quotients_of_the_single_letter_dialect() {
    // rebasing the single-letter witness at any state leaves an automaton
    // of full complexity
    for n in 3..=6 {
        let d = witness(n, "a");
        assert_eq!(d.alphabet().names(), vec!['a']);
        for q in 0..n {
            assert_eq!(d.with_initial(q).unwrap().quotient_complexity(), n);
        }
    }
}
