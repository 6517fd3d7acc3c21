use extorder::activity::{self, TutteMethod};
use extorder::antimatroid::{self, blocker, Antimatroid, Clutter, RootedKind, RootedSet, SetFamily};
use extorder::jd::{self, LatticeKind};
use extorder::{external, fixtures, minors, GroundOrder, Matroid, Subset};

fn s(xs: &[usize]) -> Subset {
    xs.iter().map(|x| x - 1).collect()
}

fn sets(words: &[&[usize]]) -> Vec<Subset> {
    words.iter().map(|w| s(w)).collect()
}

fn rs(xs: &[usize], r: usize) -> RootedSet {
    RootedSet::new(s(xs), r - 1)
}

#[test]
fn fig1_matroid() {
    let m = fixtures::fig1();
    assert!(!m.is_independent(s(&[1, 4])));
    assert!(m.is_independent(s(&[3, 4])));
    assert_eq!((m.rank(m.ground()), m.rank(s(&[1, 4]))), (2, 1));
    assert_eq!(m.closure(s(&[1])), s(&[1, 4]));
    assert_eq!(m.circuits(), sets(&[&[1, 4], &[1, 2, 3], &[2, 3, 4]]));
    assert_eq!(m.bases(), sets(&[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]]));
    assert_eq!(m.basic_circuit(s(&[3, 4]), 1).unwrap(), s(&[2, 3, 4]));
    assert_eq!(m.basic_bond(s(&[3, 4]), 3).unwrap(), s(&[1, 2, 4]));
    assert_eq!(m.contract(s(&[1])).unwrap().circuits(), sets(&[&[4], &[2, 3]]));
    assert_eq!(m.delete(s(&[4])).unwrap().circuits(), sets(&[&[1, 2, 3]]));
    for (forbidden, basis) in [(s(&[]), s(&[3, 4])), (s(&[4]), s(&[2, 3])), (s(&[3, 4]), s(&[1, 2]))] {
        assert_eq!(m.lex_max_basis(forbidden), basis);
    }
}

#[test]
fn fig1_activities() {
    let m = fixtures::fig1();
    let r = activity::activity_report(&m, s(&[2, 3]));
    assert_eq!((r.ep, r.ea), (s(&[4]), s(&[1])));
    assert_eq!(activity::active_chain(&m, s(&[3, 4]), 3).unwrap(), s(&[1, 2]));
    assert_eq!(activity::active_chain(&m, s(&[1, 2]), 1).unwrap(), Subset::EMPTY);
    let t = activity::tutte(&m, TutteMethod::CorankNullity);
    assert_eq!(t.to_string(), "x^2 + xy + y^2 + x + y");
    assert_eq!(activity::tutte(&Matroid::uniform(0, 1).unwrap(), TutteMethod::Activity).to_string(), "y");
    assert_eq!(activity::tutte(&Matroid::uniform(1, 1).unwrap(), TutteMethod::Activity).to_string(), "x");
}

#[test]
fn fig1_antimatroid() {
    let f = Antimatroid::new(fixtures::fig1_passive_family()).unwrap();
    assert_eq!(f.rooted_circuits(), &[rs(&[1, 4], 1), rs(&[1, 2, 3], 1), rs(&[2, 3, 4], 2)]);
    for c in [rs(&[4], 4), rs(&[3], 3), rs(&[1, 2, 4], 1)] {
        assert!(f.rooted_cocircuits().contains(&c), "{c:?}");
    }
    assert_eq!(f.feasible_extensions(Subset::EMPTY).unwrap(), s(&[3, 4]));
    assert_eq!(f.feasible_extensions(s(&[2, 4])).unwrap(), s(&[1, 3]));
    let mut indep = f.independents().to_vec();
    indep.sort_unstable();
    assert_eq!(indep, fixtures::fig1().independents());
    assert_eq!(f.circuit_stems(0), Clutter::new(sets(&[&[4], &[2, 3]])).unwrap());
    assert_eq!(blocker(&f.circuit_stems(0)), Clutter::new(sets(&[&[2, 4], &[3, 4]])).unwrap());
    assert_eq!(minors::extending_elements(&f), s(&[1]));
    let rebuilt = antimatroid::check_rooted_axioms(RootedKind::Circuit, f.rooted_circuits(), f.ground()).unwrap();
    assert_eq!(&rebuilt, f.family());
    let bad = antimatroid::check_rooted_axioms(RootedKind::Circuit, &[rs(&[1, 2], 1), rs(&[1], 1)], Subset::full(2));
    assert!(bad.is_err());
}

#[test]
fn u24ce_example() {
    let f = Antimatroid::new(fixtures::u24ce()).unwrap();
    let trace = f.family().trace(s(&[1, 2]));
    assert_eq!(trace.members(), sets(&[&[], &[1], &[2], &[1, 2]]));
    for c in [rs(&[1, 2, 3], 1), rs(&[1, 2, 4], 2)] {
        assert!(f.rooted_circuits().contains(&c), "{c:?}");
    }
    let l = jd::lattice_from_antimatroid(&f);
    assert!(jd::is_matroidal(&l).matroidal);
    let m = jd::matroid_from_lattice(&l).unwrap();
    assert_eq!(m.bases(), Matroid::uniform(2, 4).unwrap().bases());
    assert_eq!(jd::confluent_ordering(&f).unwrap(), None);
    assert_eq!(minors::extending_elements(&f), Subset::EMPTY);
    assert_eq!(jd::classify_antimatroid(&f).unwrap().kind, LatticeKind::MjdNotEo);
}

#[test]
fn jdb_example() {
    let f = Antimatroid::new(fixtures::jdb()).unwrap();
    let l = jd::lattice_from_antimatroid(&f);
    assert_eq!((l.len(), l.edges().len()), (12, 17));
    for c in [rs(&[2], 2), rs(&[1], 1), rs(&[2, 3], 3)] {
        assert!(f.rooted_cocircuits().contains(&c), "{c:?}");
    }
    assert!(!jd::is_matroidal(&l).matroidal);
    let from_hasse = jd::classify(&fixtures::jdb_presentation()).unwrap();
    assert_eq!(from_hasse.kind, LatticeKind::JdOnly);
    let t = extorder::lattice::t_map(&extorder::lattice::Lattice::new(&fixtures::jdb_presentation()).unwrap()).unwrap();
    assert_eq!(t.family(), &fixtures::jdb());
}

#[test]
fn external_order_of_fig1() {
    let eo = external::build(&fixtures::fig1()).unwrap();
    assert_eq!(eo.upper_covers(s(&[3, 4])).unwrap(), vec![(2, s(&[2, 4])), (3, s(&[2, 3]))]);
    assert_eq!(eo.upper_covers(s(&[2, 4])).unwrap(), vec![(1, s(&[4])), (3, s(&[1, 2]))]);
    assert_eq!(eo.min_passive_lower_cover(s(&[1])).unwrap(), s(&[1, 2]));
    assert_eq!(eo.meet_join(s(&[1, 3]), s(&[1, 2])).unwrap(), (s(&[2, 3]), s(&[1])));
    let flats = eo.flats_projection().unwrap();
    assert_eq!(flats[eo.element_of(s(&[1])).unwrap()], s(&[1, 4]));
    let x = eo.lattice().index_of(s(&[4])).unwrap();
    assert_eq!(eo.lattice().element_sets(x).i, s(&[2, 3]));
    let rev = GroundOrder::from_sequence(vec![3, 2, 1, 0]).unwrap();
    assert!(jd::verify_snelling(eo.lattice(), &rev).is_ok());
    assert!(jd::is_confluent_order(eo.antimatroid(), &rev));
}

#[test]
fn small_orders() {
    let eo = external::build(&Matroid::uniform(1, 2).unwrap()).unwrap();
    assert_eq!(eo.antimatroid().feasible_sets(), sets(&[&[], &[2], &[1, 2]]));
    let loops = external::build(&Matroid::uniform(0, 3).unwrap()).unwrap();
    assert_eq!(loops.independents(), &[Subset::EMPTY]);
    let internal = external::internal_order(&Matroid::free(2).unwrap()).unwrap();
    assert_eq!(internal.len(), 1);
    let boolean = SetFamily::new(Subset::full(3), Subset::full(3).subsets()).unwrap();
    let b = Antimatroid::new(boolean).unwrap();
    assert!(b.rooted_circuits().is_empty());
    assert_eq!(jd::confluent_ordering(&b).unwrap(), Some(GroundOrder::identity(3)));
}

#[test]
fn minor_correspondence_examples() {
    let m = fixtures::fig1();
    let r = minors::correspondence_check(&m, s(&[4])).unwrap();
    assert!(r.deletion && r.sandwich_lower && r.sandwich_upper);
    let r = minors::correspondence_check(&m, s(&[3])).unwrap();
    assert!(r.sandwich_lower && r.sandwich_upper);
    assert!(minors::correspondence_check(&m, Subset::EMPTY).unwrap().holds());
    let r = minors::correspondence_check(&m, s(&[2, 3])).unwrap();
    assert_eq!(r.failures(), vec!["feasible contraction"]);
}
