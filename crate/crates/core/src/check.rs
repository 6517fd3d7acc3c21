//! Invariant sweeps over matroids, antimatroids, lattices and external
//! orders. Each sweep returns the first violated statement as a message.

use std::collections::{HashMap, HashSet};

use crate::activity::{self, TutteMethod};
use crate::antimatroid::{self, blocker, Antimatroid, Clutter, RootedKind};
use crate::error::Result;
use crate::external::{self, ExternalOrder};
use crate::jd::{self, JDLattice, LatticeKind};
use crate::lattice::{Lattice, LatticePresentation};
use crate::matroid::Matroid;
use crate::minors;
use crate::subset::{GroundOrder, Subset};

pub type Outcome = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn internal<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Largest ground size for which sweeps use dense tables over `2^E`.
pub const DENSE_LIMIT: usize = 16;

/// Interiors of every subset of the ground, by dynamic programming over
/// subsets: a set is its own interior when feasible, and otherwise its
/// interior is the union of the interiors of its one-element deletions.
struct Interiors {
    ground: Subset,
    table: Vec<Subset>,
}

impl Interiors {
    fn new(a: &Antimatroid) -> Self {
        let ground = a.ground();
        let elems: Vec<usize> = ground.iter().collect();
        let mut table = vec![Subset::EMPTY; 1 << elems.len()];
        for k in 1..table.len() {
            let set: Subset = elems
                .iter()
                .enumerate()
                .filter(|&(i, _)| k >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            table[k] = if a.is_feasible(set) {
                set
            } else {
                (0..elems.len())
                    .filter(|i| k >> i & 1 == 1)
                    .fold(Subset::EMPTY, |acc, i| acc.union(table[k & !(1 << i)]))
            };
        }
        Interiors { ground, table }
    }

    fn of(&self, s: Subset) -> Subset {
        self.table[s.intersection(self.ground).compress(self.ground)]
    }
}

/// The lattice lemmas relating `T(x)`, `I(x)`, meets, joins and rooted
/// circuits, checked over all pairs of elements and all pairs of label sets.
pub fn lemma_sweep(l: &JDLattice) -> Outcome {
    let a = l.antimatroid();
    ensure!(a.ground().len() <= DENSE_LIMIT, "ground too large for an exhaustive sweep");
    let int = Interiors::new(a);
    let meet = |x: Subset, y: Subset| int.of(x.intersection(y));
    let sets: Vec<_> = (0..l.len()).map(|x| l.element_sets(x)).collect();

    let mut by_i: HashMap<Subset, Subset> = HashMap::new();
    for s in &sets {
        if let Some(prev) = by_i.insert(s.i, s.t) {
            return Err(format!("I takes the value {} at both {prev} and {}", s.i, s.t));
        }
    }
    let mut free: Vec<Subset> = a.independents().to_vec();
    free.sort_unstable();
    let mut images: Vec<Subset> = by_i.keys().copied().collect();
    images.sort_unstable();
    ensure!(free == images, "I(x) ranges over {images:?}, free sets are {free:?}");

    for sx in &sets {
        for sy in &sets {
            let leq = sx.t.is_subset(sy.t);
            ensure!(
                sx.t.is_disjoint(sy.i) == leq,
                "T({}) ∩ I({}) empty is {} but x ≤ y is {leq}",
                sx.t,
                sy.t,
                !leq
            );
            if leq {
                ensure!(
                    sx.i.is_subset(sy.i.union(sy.t)),
                    "I({}) = {} escapes I ∪ T of {}",
                    sx.t,
                    sx.i,
                    sy.t
                );
            }
        }
    }

    for (&i, &xi) in &by_i {
        for (&j, &xj) in &by_i {
            if i.is_subset(j) {
                ensure!(xj.is_subset(xi), "{i} ⊆ {j} but x_{i} = {xi} is not above x_{j} = {xj}");
            }
            let m = meet(xi, xj);
            let k = sets.iter().find(|s| s.t == m).expect("meet is feasible").i;
            ensure!(k.is_subset(i.union(j)), "I(x_{i} ∧ x_{j}) = {k} escapes {}", i.union(j));
        }
    }

    let labels = l.labels();
    let top = l.element(l.top());
    let x_of: HashMap<Subset, Subset> = labels
        .subsets()
        .map(|s| {
            let x = by_i
                .iter()
                .filter(|(i, _)| i.is_subset(s))
                .fold(top, |acc, (_, &x)| meet(acc, x));
            (s, x)
        })
        .collect();
    for (&p, &xp) in &x_of {
        for (&q, &xq) in &x_of {
            let join = xp.union(xq);
            ensure!(
                join.is_subset(x_of[&p.intersection(q)]),
                "x_{p} ∨ x_{q} is not below x_{}",
                p.intersection(q)
            );
            ensure!(
                meet(xp, xq).is_subset(x_of[&p.union(q)]),
                "x_{p} ∧ x_{q} is not below x_{}",
                p.union(q)
            );
        }
    }

    let circuits = a.rooted_circuits();
    for s in &sets {
        let rebuilt: Subset = a
            .ground()
            .difference(s.i)
            .iter()
            .filter(|&r| {
                !circuits
                    .iter()
                    .any(|c| c.root == r && c.set.is_subset(s.i.with(r)))
            })
            .collect();
        ensure!(rebuilt == s.t, "T reconstructed from I = {} is {rebuilt}, stored {}", s.i, s.t);
    }
    Ok(())
}

/// Root obstruction: `a ∈ Γ(A)` iff `a ∉ A` and every rooted circuit at `a`
/// meets `A`, for every feasible `A`.
pub fn root_obstruction(a: &Antimatroid) -> Outcome {
    for &f in a.feasible_sets() {
        let ext = internal(a.feasible_extensions(f))?;
        for r in a.ground().iter() {
            let blocked = a
                .rooted_circuits()
                .iter()
                .any(|c| c.root == r && c.stem().is_disjoint(f));
            let predicted = !f.contains(r) && !blocked;
            ensure!(ext.contains(r) == predicted, "root obstruction fails for {} at {f}", r + 1);
        }
    }
    Ok(())
}

/// Blocker duality between circuit stems and cocircuit stems at each element.
pub fn blocker_duality(a: &Antimatroid) -> Outcome {
    for x in a.ground().iter() {
        let c = a.circuit_stems(x);
        let d = a.cocircuit_stems(x);
        ensure!(blocker(&c) == d, "blocker of circuit stems at {} is not the cocircuit stems", x + 1);
        ensure!(blocker(&d) == c, "blocker of cocircuit stems at {} is not the circuit stems", x + 1);
    }
    Ok(())
}

pub fn blocker_involution(c: &Clutter) -> Outcome {
    let b = blocker(c);
    ensure!(blocker(&b) == *c, "b(b({c:?})) = {:?}", blocker(&b));
    Ok(())
}

/// Structural checks on one antimatroid: circuit and cocircuit axioms,
/// reconstruction, unions of cocircuits, root obstruction, blocker duality,
/// the hereditary independent sets and injectivity of `Γ`.
pub fn antimatroid_invariants(a: &Antimatroid) -> Outcome {
    let g = a.ground();
    let cs = antimatroid::check_rooted_axioms(RootedKind::Circuit, a.rooted_circuits(), g)
        .map_err(|v| format!("rooted circuits: {v}"))?;
    ensure!(&cs == a.family(), "feasible sets rebuilt from circuits differ");
    let ds = antimatroid::check_rooted_axioms(RootedKind::Cocircuit, a.rooted_cocircuits(), g)
        .map_err(|v| format!("rooted cocircuits: {v}"))?;
    ensure!(&ds == a.family(), "feasible sets rebuilt from cocircuits differ");
    for &f in a.feasible_sets() {
        let ends = a.endpoints(f);
        let covered = ends.iter().all(|e| {
            a.rooted_cocircuits()
                .iter()
                .any(|d| d.root == e && d.set.is_subset(f))
        });
        let union = a
            .rooted_cocircuits()
            .iter()
            .filter(|d| ends.contains(d.root) && d.set.is_subset(f))
            .fold(Subset::EMPTY, |acc, d| acc.union(d.set));
        ensure!(covered && union == f, "{f} is not a union of cocircuits rooted at its endpoints");
    }
    root_obstruction(a)?;
    blocker_duality(a)?;
    let free: HashSet<Subset> = a.independents().iter().copied().collect();
    for &i in a.independents() {
        for x in i.iter() {
            ensure!(free.contains(&i.without(x)), "{} is not free although {i} is", i.without(x));
        }
    }
    ensure!(antimatroid::extension_map_injective(a.family()), "Γ is not injective");
    Ok(())
}

/// Matroid axioms seen through the oracle: basis exchange against basic
/// circuits and bonds, rank and closure axioms, the dual and Gale dominance.
pub fn matroid_invariants(m: &Matroid) -> Outcome {
    let g = m.ground();
    let bases: HashSet<Subset> = m.bases().iter().copied().collect();
    for &b in m.bases() {
        for x in g.difference(b).iter() {
            let c = internal(m.basic_circuit(b, x))?;
            for y in b.iter() {
                let bond = internal(m.basic_bond(b, y))?;
                let exch = bases.contains(&b.without(y).with(x));
                ensure!(
                    c.contains(y) == bond.contains(x) && bond.contains(x) == exch,
                    "exchange of {} for {} in {b} disagrees with the basic circuit and bond",
                    y + 1,
                    x + 1
                );
            }
        }
    }
    if g.len() <= 7 {
        let subsets: Vec<Subset> = g.subsets().collect();
        let rank: HashMap<Subset, usize> = subsets.iter().map(|&s| (s, m.rank(s))).collect();
        let dual = m.dual().dual();
        for &s in &subsets {
            ensure!(rank[&s] <= s.len(), "rank of {s} exceeds its size");
            ensure!(
                m.is_independent(s) == dual.is_independent(s),
                "double dual disagrees on {s}"
            );
            let cl = m.closure(s);
            ensure!(s.is_subset(cl) && m.closure(cl) == cl, "closure of {s} is not extensive and idempotent");
            for &t in &subsets {
                if s.is_subset(t) {
                    ensure!(rank[&s] <= rank[&t], "rank decreases from {s} to {t}");
                    ensure!(cl.is_subset(m.closure(t)), "closure is not monotone on {s} ⊆ {t}");
                }
                ensure!(
                    rank[&s.union(t)] + rank[&s.intersection(t)] <= rank[&s] + rank[&t],
                    "rank is not submodular on {s}, {t}"
                );
            }
        }
        let flats = m.flats();
        for &f in flats {
            for &h in flats {
                let meet = f.intersection(h);
                ensure!(flats.contains(&meet), "{f} ∩ {h} is not a flat");
                ensure!(flats.contains(&m.closure(f.union(h))), "closure of {f} ∪ {h} is not a flat");
            }
        }
    }
    let ord = m.order();
    let desc = |b: Subset| -> Vec<usize> {
        let mut v: Vec<usize> = b.iter().map(|x| ord.position(x)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    let top = desc(m.lex_max_basis(Subset::EMPTY));
    for &b in m.bases() {
        ensure!(
            top.iter().zip(desc(b)).all(|(p, q)| *p >= q),
            "lexicographically greatest basis does not dominate {b}"
        );
    }
    Ok(())
}

/// Tutte polynomial by both methods, the basis and independent-set counts,
/// EP injectivity, flat decomposition, and classical activities of bases.
pub fn activity_invariants(m: &Matroid) -> Outcome {
    let by_activity = activity::tutte(m, TutteMethod::Activity);
    let by_rank = activity::tutte(m, TutteMethod::CorankNullity);
    ensure!(by_activity == by_rank, "Tutte by activities {by_activity} differs from corank-nullity {by_rank}");
    ensure!(by_activity.evaluate(1, 1) == m.bases().len() as i64, "T(1,1) is not the basis count");
    ensure!(
        by_activity.evaluate(2, 1) == m.independents().len() as i64,
        "T(2,1) is not the independent-set count"
    );
    let ord = m.order();
    let mut seen = HashMap::new();
    for &i in m.independents() {
        let ep = internal(activity::external_passive(m, i))?;
        if let Some(prev) = seen.insert(ep, i) {
            return Err(format!("{prev} and {i} share the passive set {ep}"));
        }
        let f = m.closure(i);
        let local = internal(activity::external_passive(&internal(m.restrict(f))?, i))?;
        ensure!(
            ep == local.union(m.ground().difference(f)),
            "passive set of {i} does not decompose along its closure"
        );
    }
    for &b in m.bases() {
        let report = activity::activity_report(m, b);
        let mut ea = Subset::EMPTY;
        for x in m.ground().difference(b).iter() {
            if ord.min_of(internal(m.basic_circuit(b, x))?) == Some(x) {
                ea = ea.with(x);
            }
        }
        let mut ia = Subset::EMPTY;
        for y in b.iter() {
            if ord.min_of(internal(m.basic_bond(b, y))?) == Some(y) {
                ia = ia.with(y);
            }
        }
        ensure!(
            report.ea == ea && report.ia == ia,
            "activities of basis {b} are ({}, {}), classically ({ea}, {ia})",
            report.ea,
            report.ia
        );
    }
    Ok(())
}

/// Compares sets as words read from their largest element down, a proper
/// prefix being smaller. This is the order in which the greedy basis is
/// lexicographically maximal.
pub fn descending_cmp(ord: &GroundOrder, a: Subset, b: Subset) -> std::cmp::Ordering {
    let wa: Vec<usize> = ord.sorted(a).iter().rev().map(|&x| ord.position(x)).collect();
    let wb: Vec<usize> = ord.sorted(b).iter().rev().map(|&x| ord.position(x)).collect();
    wa.cmp(&wb)
}

/// Properties of the generalized external order of `eo.matroid()`.
pub fn external_invariants(eo: &ExternalOrder) -> Outcome {
    let m = eo.matroid();
    let l = eo.lattice();
    let ord = m.order();
    let verdict = antimatroid::verify_antimatroid(eo.antimatroid().family());
    ensure!(verdict.is_antimatroid(), "passive sets do not form an antimatroid: {:?}", verdict.witness());
    ensure!(
        l.rank(l.top()) == m.ground().difference(m.loops()).len(),
        "height {} differs from the number of non-loops",
        l.rank(l.top())
    );
    for &i in eo.independents() {
        let ep = internal(eo.passive(i))?;
        let x = internal(eo.element_of(i))?;
        ensure!(l.rank(x) == ep.len(), "rank of {i} is not |EP|");
        for a in m.ground().difference(ep).iter() {
            ensure!(
                eo.antimatroid().is_feasible(ep.with(a)) == i.contains(a),
                "EP({i}) ∪ {} feasibility disagrees with membership",
                a + 1
            );
        }
        ensure!(m.lex_max_basis(ep) == i, "{i} is not the lex-maximal basis avoiding {ep}");
        internal(eo.upper_covers(i))?;
        if !ep.is_empty() {
            internal(eo.min_passive_lower_cover(i))?;
        }
    }
    for &i in eo.independents() {
        for &j in eo.independents() {
            if internal(eo.leq(i, j))? {
                ensure!(
                    descending_cmp(ord, i, j).is_ge(),
                    "{i} ≤ {j} but {i} is lexicographically smaller"
                );
            }
        }
    }
    let bases = m.bases();
    for &b1 in bases {
        for &b2 in bases {
            let classical = |b: Subset| -> Result<Subset> {
                let mut ep = Subset::EMPTY;
                for x in m.ground().difference(b).iter() {
                    if ord.min_of(m.basic_circuit(b, x)?) != Some(x) {
                        ep = ep.with(x);
                    }
                }
                Ok(ep)
            };
            let (p1, p2) = (internal(classical(b1))?, internal(classical(b2))?);
            ensure!(
                internal(eo.leq(b1, b2))? == p1.is_subset(p2),
                "order on bases {b1}, {b2} disagrees with classical passive sets"
            );
            ensure!(
                internal(eo.las_vergnas_leq(b2, b1))? == internal(eo.leq(b1, b2))?,
                "order on bases {b1}, {b2} is not the reversed classical order"
            );
        }
    }
    internal(eo.boolean_partition())?;
    internal(eo.flats_projection())?;
    meet_join_against_bounds(eo)?;
    let class = internal(jd::classify_antimatroid(eo.antimatroid()))?;
    ensure!(class.kind == LatticeKind::Eo, "external order classified as {}", class.kind);
    jd::verify_snelling(l, &ord.reversed()).map_err(|v| format!("reversed order is not a snelling: {v}"))?;
    Ok(())
}

/// Meets and joins through lex-maximal bases against tables derived from the
/// Hasse diagram alone.
pub fn meet_join_against_bounds(eo: &ExternalOrder) -> Outcome {
    let l = eo.lattice();
    let abstract_lattice = internal(Lattice::new(&l.to_presentation()))?;
    for x in 0..l.len() {
        for y in 0..l.len() {
            let (i, j) = (eo.independent(x), eo.independent(y));
            let (m, jn) = internal(eo.meet_join(i, j))?;
            ensure!(
                m == eo.independent(abstract_lattice.meet(x, y))
                    && jn == eo.independent(abstract_lattice.join(x, y)),
                "meet/join of {i}, {j} disagree with the Hasse diagram"
            );
        }
    }
    Ok(())
}

/// Confluent lex monotonicity, the matroidal test against the exchange axiom
/// and, for small lattices, that every S_n EL-labeling is a natural one.
pub fn jd_invariants(l: &JDLattice, rigidity_limit: usize) -> Outcome {
    let class = internal(jd::classify_antimatroid(l.antimatroid()))?;
    let independents: Vec<Subset> = (0..l.len()).map(|x| l.element_sets(x).i).collect();
    ensure!(
        class.matroidal == jd::satisfies_independence_axioms(&independents),
        "matroidal test disagrees with the exchange axiom"
    );
    if let Some(ord) = &class.order {
        for x in 0..l.len() {
            for y in 0..l.len() {
                if l.leq(x, y) {
                    let (ix, iy) = (independents[x], independents[y]);
                    ensure!(
                        ord.lex_cmp_prefix_large(ix, iy).is_le(),
                        "I = {ix} below I = {iy} is lexicographically larger under {ord:?}"
                    );
                }
            }
        }
    }
    if l.len() <= rigidity_limit {
        snelling_rigidity(l)?;
    }
    Ok(())
}

/// Orders of the labels under which every rooted circuit has its root last.
pub fn confluent_orders(a: &Antimatroid) -> Vec<GroundOrder> {
    fn extend(
        a: &Antimatroid,
        rest: Subset,
        placed: Subset,
        seq: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rest.is_empty() {
            out.push(seq.clone());
            return;
        }
        for x in rest.iter() {
            let ready = a
                .rooted_circuits()
                .iter()
                .all(|c| c.root != x || c.stem().is_subset(placed));
            if ready {
                seq.push(x);
                extend(a, rest.without(x), placed.with(x), seq, out);
                seq.pop();
            }
        }
    }
    let labels = a.family().union_of_members();
    let n = a.ground().last().map_or(0, |x| x + 1);
    let prefix: Vec<usize> = Subset::full(n).difference(labels).iter().collect();
    let mut out = Vec::new();
    extend(a, labels, Subset::full(n).difference(labels), &mut prefix.clone(), &mut out);
    out.into_iter()
        .map(|s| GroundOrder::from_sequence(s).expect("permutation"))
        .collect()
}

/// Labelings found by exhaustive search are exactly the natural labelings
/// under confluent orders.
pub fn snelling_rigidity(l: &JDLattice) -> Outcome {
    let found: HashSet<Vec<usize>> = jd::snelling_search(l).into_iter().collect();
    let labels = l.labels();
    let mut natural = HashSet::new();
    for ord in confluent_orders(l.antimatroid()) {
        jd::verify_snelling(l, &ord).map_err(|v| format!("confluent order {ord:?} fails: {v}"))?;
        let rank: HashMap<usize, usize> = ord
            .sequence()
            .iter()
            .filter(|x| labels.contains(**x))
            .enumerate()
            .map(|(i, &x)| (x, i))
            .collect();
        natural.insert(l.edges().iter().map(|e| rank[&e.label]).collect::<Vec<_>>());
    }
    for lab in &found {
        ensure!(
            jd::as_natural_reordering(l, lab).is_some(),
            "labeling {lab:?} found by search is not a natural labeling"
        );
    }
    ensure!(
        found == natural,
        "search found {} labelings, confluent orders give {}",
        found.len(),
        natural.len()
    );
    Ok(())
}

/// Minor commutativity, closure of minors under the antimatroid axioms, the
/// circuit lemma for contractions, and intervals above feasible sets.
pub fn minor_invariants(a: &Antimatroid) -> Outcome {
    let g = a.ground();
    for s in g.subsets() {
        let del = internal(minors::anti_delete(a, s))?;
        let con = internal(minors::anti_contract(a, s))?;
        for c in a.rooted_circuits() {
            if !s.contains(c.root) {
                ensure!(
                    con.rooted_circuits()
                        .iter()
                        .any(|d| d.root == c.root && d.set.is_subset(c.set.difference(s))),
                    "circuit {c:?} has no trace in the contraction by {s}"
                );
            }
        }
        if a.is_feasible(s) {
            let above: Vec<Subset> = a
                .feasible_sets()
                .iter()
                .filter(|f| s.is_subset(**f))
                .map(|f| f.difference(s))
                .collect();
            let mut shifted = above.clone();
            shifted.sort_unstable();
            let mut trace = del.feasible_sets().to_vec();
            trace.sort_unstable();
            ensure!(shifted == trace, "deletion of feasible {s} is not the interval above it");
        }
        for t in g.difference(s).subsets() {
            let dd = internal(minors::anti_delete(&del, t))?;
            let dd2 = internal(minors::anti_delete(&internal(minors::anti_delete(a, t))?, s))?;
            ensure!(dd == dd2, "deleting {s} and {t} does not commute");
            let dc = internal(minors::anti_contract(&del, t))?;
            let cd = internal(minors::anti_delete(&internal(minors::anti_contract(a, t))?, s))?;
            ensure!(dc == cd, "deleting {s} and contracting {t} do not commute");
            let cc = internal(minors::anti_contract(&con, t))?;
            let cc2 = internal(minors::anti_contract(&internal(minors::anti_contract(a, t))?, s))?;
            ensure!(cc == cc2, "contracting {s} and {t} does not commute");
        }
    }
    Ok(())
}

/// Every circuit `C` of `M` and `x ∈ C ∖ A` admit a circuit of `M / A`
/// inside `C` containing `x`.
pub fn contraction_circuit_lemma(m: &Matroid) -> Outcome {
    for s in m.ground().subsets() {
        let mc = internal(m.contract(s))?;
        for &c in m.circuits() {
            for x in c.difference(s).iter() {
                ensure!(
                    mc.circuits().iter().any(|d| d.contains(x) && d.is_subset(c)),
                    "circuit {c} through {} has no image in M/{s}",
                    x + 1
                );
            }
        }
    }
    Ok(())
}

/// Every clause of [`minors::correspondence_check`] except contraction by
/// feasible sets with more than one element, for every `A ⊆ E`.
pub fn correspondence_sweep(m: &Matroid) -> Outcome {
    for s in m.ground().subsets() {
        let r = internal(minors::correspondence_check(m, s))?;
        let fails: Vec<&str> = r
            .failures()
            .into_iter()
            .filter(|f| *f != "feasible contraction")
            .collect();
        ensure!(fails.is_empty(), "A = {s}: {}", fails.join(", "));
    }
    Ok(())
}

/// A named list of sweep outcomes.
#[derive(Debug, Default)]
pub struct Report {
    pub entries: Vec<(String, Outcome)>,
}

impl Report {
    pub fn record(&mut self, name: &str, outcome: Outcome) {
        self.entries.push((name.to_string(), outcome));
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|(_, o)| o.is_ok())
    }
}

/// Every sweep that applies to a matroid and its external order.
pub fn check_matroid(m: &Matroid) -> Result<Report> {
    let eo = external::build(m)?;
    let mut r = Report::default();
    r.record("matroid", matroid_invariants(m));
    r.record("activity", activity_invariants(m));
    r.record("external order", external_invariants(&eo));
    r.record("antimatroid", antimatroid_invariants(eo.antimatroid()));
    r.record("lattice lemmas", lemma_sweep(eo.lattice()));
    r.record("jd lattice", jd_invariants(eo.lattice(), 12));
    r.record("contraction circuits", contraction_circuit_lemma(m));
    r.record("minors", minor_invariants(eo.antimatroid()));
    r.record("minor correspondence", correspondence_sweep(m));
    Ok(r)
}

pub fn check_antimatroid(a: &Antimatroid) -> Report {
    let l = jd::lattice_from_antimatroid(a);
    let mut r = Report::default();
    r.record("antimatroid", antimatroid_invariants(a));
    r.record(
        "join-distributive",
        internal(l.verify_join_distributive()).and_then(|v| match v.witness() {
            None => Ok(()),
            Some(w) => Err(w.to_string()),
        }),
    );
    r.record("lattice lemmas", lemma_sweep(&l));
    r.record("jd lattice", jd_invariants(&l, 12));
    r.record("minors", minor_invariants(a));
    r
}

/// Sweeps for an abstract lattice: those of its T-map antimatroid when it is
/// join-distributive, and a single failure otherwise.
pub fn check_lattice(p: &LatticePresentation) -> Result<Report> {
    let l = Lattice::new(p)?;
    let v = crate::lattice::verify_join_distributive(&l)?;
    if let Some(w) = v.witness() {
        let mut r = Report::default();
        r.record("join-distributive", Err(w.to_string()));
        return Ok(r);
    }
    let a = crate::lattice::t_map(&l)?;
    let mut r = check_antimatroid(&a);
    r.entries.retain(|(name, _)| name != "join-distributive");
    r.entries.insert(0, ("join-distributive".into(), Ok(())));
    Ok(r)
}
