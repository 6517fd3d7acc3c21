use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use extorder::activity::{self, TutteMethod};
use extorder::antimatroid::{self, Antimatroid, SetFamily};
use extorder::check;
use extorder::corpus;
use extorder::io::{self, Spec};
use extorder::jd;
use extorder::{external, GroundOrder, Matroid, Subset};

fn matrix(p: i64, max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(0..p, c), r)
    })
}

fn ordered(m: Matroid) -> impl Strategy<Value = Matroid> {
    let n = m.universe();
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |seq| m.with_order(GroundOrder::from_sequence(seq).unwrap()).unwrap())
}

fn ternary_matroid() -> impl Strategy<Value = Matroid> {
    matrix(3, 3, 6).prop_flat_map(|x| ordered(Matroid::linear(3, &x).unwrap()))
}

fn binary_matroid() -> impl Strategy<Value = Matroid> {
    matrix(2, 4, 6).prop_flat_map(|x| ordered(Matroid::linear(2, &x).unwrap()))
}

fn antimatroid_of_size(max: usize) -> impl Strategy<Value = Antimatroid> {
    (1..=max, any::<u64>()).prop_map(|(n, seed)| {
        corpus::random_antimatroid(&mut ChaCha8Rng::seed_from_u64(seed), n)
    })
}

fn ok(o: check::Outcome) -> Result<(), TestCaseError> {
    o.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn matroid_sweeps(m in ternary_matroid()) {
        ok(check::matroid_invariants(&m))?;
        ok(check::activity_invariants(&m))?;
        ok(check::contraction_circuit_lemma(&m))?;
    }

    #[test]
    fn external_order_sweeps(m in binary_matroid()) {
        let eo = external::build(&m).unwrap();
        ok(check::external_invariants(&eo))?;
        ok(check::lemma_sweep(eo.lattice()))?;
        ok(check::jd_invariants(eo.lattice(), 12))?;
    }

    #[test]
    fn external_order_of_ternary_matroids(m in ternary_matroid()) {
        let eo = external::build(&m).unwrap();
        ok(check::external_invariants(&eo))?;
        ok(check::antimatroid_invariants(eo.antimatroid()))?;
    }

    #[test]
    fn tutte_ignores_order(m in binary_matroid(), seq in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let n = m.universe();
        let seq: Vec<usize> = seq.into_iter().filter(|&x| x < n).collect();
        let other = m.with_order(GroundOrder::from_sequence(seq).unwrap()).unwrap();
        prop_assert_eq!(
            activity::tutte(&m, TutteMethod::Activity),
            activity::tutte(&other, TutteMethod::Activity)
        );
    }

    #[test]
    fn antimatroid_sweeps(a in antimatroid_of_size(8)) {
        ok(check::antimatroid_invariants(&a))?;
        let l = jd::lattice_from_antimatroid(&a);
        ok(check::lemma_sweep(&l))?;
        ok(check::jd_invariants(&l, 12))?;
        let v = l.verify_join_distributive().unwrap();
        prop_assert!(v.is_join_distributive());
    }

    #[test]
    fn t_map_inverts_the_lattice(a in antimatroid_of_size(7)) {
        let l = jd::lattice_from_antimatroid(&a);
        let back = l.t_map().unwrap();
        prop_assert_eq!(back.feasible_sets().len(), a.feasible_sets().len());
        let used = a.family().with_ground(a.family().union_of_members()).unwrap();
        prop_assert_eq!(jd::compress_family(back.family()), jd::compress_family(&used));
    }

    #[test]
    fn minors_of_small_antimatroids(a in antimatroid_of_size(5)) {
        ok(check::minor_invariants(&a))?;
    }

    #[test]
    fn json_round_trip(a in antimatroid_of_size(8)) {
        let text = io::antimatroid_json(&a);
        let Spec::Antimatroid(b) = io::parse_spec(&text).unwrap().spec else {
            return Err(TestCaseError::fail("not an antimatroid"));
        };
        prop_assert_eq!(&b, &a);
        prop_assert_eq!(io::antimatroid_json(&b), text);
    }

    #[test]
    fn blocker_is_an_involution(seed in any::<u64>(), n in 1usize..=8) {
        let c = corpus::random_clutter(&mut ChaCha8Rng::seed_from_u64(seed), n);
        ok(check::blocker_involution(&c))?;
    }

    #[test]
    fn extension_map_detects_antimatroids(n in 1usize..=4, bits in prop::collection::vec(any::<bool>(), 16)) {
        let ground = Subset::full(n);
        let members: Vec<Subset> = ground
            .subsets()
            .zip(bits)
            .filter(|(s, keep)| s.is_empty() || *keep)
            .map(|(s, _)| s)
            .collect();
        let f = SetFamily::new(ground, members).unwrap();
        if antimatroid::is_greedoid(&f) {
            prop_assert_eq!(
                antimatroid::extension_map_injective(&f),
                antimatroid::verify_antimatroid(&f).is_antimatroid()
            );
        }
    }
}
