//! Join-distributive lattices of feasible sets: natural labels, the matroidal
//! test, confluence, S_n EL-labelings and classification.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::antimatroid::{Antimatroid, SetFamily};
use crate::error::{Error, Result};
use crate::lattice::{self, Lattice, LatticePresentation};
use crate::matroid::Matroid;
use crate::minors;
use crate::subset::{Element, GroundOrder, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverEdge {
    pub lower: usize,
    pub upper: usize,
    pub label: Element,
}

/// `T(x)`, the upward labels `I(x)` and the downward labels `J(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementSets {
    pub t: Subset,
    pub i: Subset,
    pub j: Subset,
}

/// The lattice of feasible sets of an antimatroid ordered by inclusion.
///
/// Elements are the feasible sets in canonical order, so index 0 is the
/// bottom. Joins are unions and meets are interiors of intersections; neither
/// table is stored.
#[derive(Clone)]
pub struct JDLattice {
    antimatroid: Antimatroid,
    index: HashMap<Subset, usize>,
    up: Vec<Vec<(usize, Element)>>,
    down: Vec<Vec<(usize, Element)>>,
    edges: Vec<CoverEdge>,
}

pub fn lattice_from_antimatroid(a: &Antimatroid) -> JDLattice {
    let sets = a.feasible_sets();
    let index: HashMap<Subset, usize> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut up = vec![Vec::new(); sets.len()];
    let mut down = vec![Vec::new(); sets.len()];
    let mut edges = Vec::new();
    for (lo, &s) in sets.iter().enumerate() {
        for x in a.family().extensions_of(s).iter() {
            let hi = index[&s.with(x)];
            up[lo].push((hi, x));
            down[hi].push((lo, x));
            edges.push(CoverEdge {
                lower: lo,
                upper: hi,
                label: x,
            });
        }
    }
    JDLattice {
        antimatroid: a.clone(),
        index,
        up,
        down,
        edges,
    }
}

impl JDLattice {
    pub fn antimatroid(&self) -> &Antimatroid {
        &self.antimatroid
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    /// `T(x)`: the feasible set at index `x`.
    pub fn element(&self, x: usize) -> Subset {
        self.antimatroid.feasible_sets()[x]
    }

    pub fn elements(&self) -> &[Subset] {
        self.antimatroid.feasible_sets()
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn edges(&self) -> &[CoverEdge] {
        &self.edges
    }

    pub fn upper_covers(&self, x: usize) -> &[(usize, Element)] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[(usize, Element)] {
        &self.down[x]
    }

    /// Ground elements lying in some feasible set, i.e. the edge labels.
    pub fn labels(&self) -> Subset {
        self.element(self.top())
    }

    pub fn rank(&self, x: usize) -> usize {
        self.element(x).len()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.element(x).is_subset(self.element(y))
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.index[&self.element(x).union(self.element(y))]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.index[&self.antimatroid.interior(self.element(x).intersection(self.element(y)))]
    }

    pub fn element_sets(&self, x: usize) -> ElementSets {
        ElementSets {
            t: self.element(x),
            i: self.up[x].iter().map(|&(_, l)| l).collect(),
            j: self.down[x].iter().map(|&(_, l)| l).collect(),
        }
    }

    /// The meet-irreducible labelled `a`: the largest feasible set avoiding `a`.
    pub fn meet_irreducible(&self, a: Element) -> Option<usize> {
        if !self.labels().contains(a) {
            return None;
        }
        Some(self.index[&self.antimatroid.interior(self.antimatroid.ground().without(a))])
    }

    /// The Hasse diagram, with meet-irreducibles listed by increasing label.
    pub fn to_presentation(&self) -> LatticePresentation {
        let covers = self.edges.iter().map(|e| (e.lower, e.upper)).collect();
        let irr = self
            .labels()
            .iter()
            .map(|a| self.meet_irreducible(a).unwrap())
            .collect();
        LatticePresentation::new(self.len(), covers)
            .expect("edges index elements")
            .with_irreducible_order(irr)
    }

    /// The T map of the abstract lattice, on labels renumbered `0..k`.
    pub fn t_map(&self) -> Result<Antimatroid> {
        lattice::t_map(&Lattice::new(&self.to_presentation())?)
    }

    /// Checks the four join-distributivity conditions on the Hasse diagram.
    pub fn verify_join_distributive(&self) -> Result<lattice::JdVerdict> {
        lattice::verify_join_distributive(&Lattice::new(&self.to_presentation())?)
    }
}

impl fmt::Debug for JDLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "JDLattice({} elements, {} covers)", self.len(), self.edges.len())
    }
}

/// Renumbers the elements of `ground` as `0..|ground|`, keeping their order.
pub fn compress_family(f: &SetFamily) -> SetFamily {
    let g = f.ground();
    let ground = Subset::full(g.len());
    SetFamily::new(
        ground,
        f.members()
            .iter()
            .map(|m| m.iter().map(|x| g.intersection(Subset::full(x)).len()).collect()),
    )
    .expect("compressed sets lie in the compressed ground")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidalVerdict {
    pub matroidal: bool,
    /// Number of upper covers of each element.
    pub rcov: Vec<usize>,
    pub witness: Option<String>,
}

pub fn is_matroidal(l: &JDLattice) -> MatroidalVerdict {
    let rcov: Vec<usize> = (0..l.len()).map(|x| l.up[x].len()).collect();
    let mut witness = None;
    'outer: for e in &l.edges {
        if rcov[e.upper] > rcov[e.lower] {
            witness = Some(format!(
                "rcov increases from {} to {}",
                l.element(e.lower),
                l.element(e.upper)
            ));
            break 'outer;
        }
    }
    if witness.is_none() {
        'pairs: for x in 0..l.len() {
            for y in x + 1..l.len() {
                let (m, j) = (l.meet(x, y), l.join(x, y));
                if rcov[m] + rcov[j] > rcov[x] + rcov[y] {
                    witness = Some(format!(
                        "rcov is not semimodular at {} and {}",
                        l.element(x),
                        l.element(y)
                    ));
                    break 'pairs;
                }
            }
        }
    }
    MatroidalVerdict {
        matroidal: witness.is_none(),
        rcov,
        witness,
    }
}

/// Whether `sets` is the independence complex of a matroid: contains the
/// empty set, closed under subsets, and satisfies augmentation.
pub fn satisfies_independence_axioms(sets: &[Subset]) -> bool {
    let all: HashSet<Subset> = sets.iter().copied().collect();
    if !all.contains(&Subset::EMPTY) {
        return false;
    }
    if !sets.iter().all(|s| s.iter().all(|x| all.contains(&s.without(x)))) {
        return false;
    }
    sets.iter().all(|&i| {
        sets.iter().all(|&j| {
            i.len() <= j.len() || i.difference(j).iter().any(|x| all.contains(&j.with(x)))
        })
    })
}

/// The matroid whose independent sets are the free sets of the lattice.
pub fn matroid_from_lattice(l: &JDLattice) -> Result<Matroid> {
    let v = is_matroidal(l);
    if let Some(w) = v.witness {
        return Err(Error::NotMatroidal(w));
    }
    let ind = l.antimatroid.independents();
    let r = ind.iter().map(|i| i.len()).max().unwrap_or(0);
    let bases: Vec<Subset> = ind.iter().copied().filter(|i| i.len() == r).collect();
    let n = universe(l.antimatroid.ground());
    let m = Matroid::from_bases(n, &bases)?;
    if m.independents() != ind {
        return Err(Error::Internal(
            "free sets of a matroidal lattice are not the independent sets of its bases".into(),
        ));
    }
    Ok(m)
}

fn universe(ground: Subset) -> usize {
    ground.iter().next_back().map_or(0, |x| x + 1)
}

/// Whether every rooted circuit's root is its maximum under `ord`.
pub fn is_confluent_order(a: &Antimatroid, ord: &GroundOrder) -> bool {
    a.rooted_circuits()
        .iter()
        .all(|c| ord.max_of(c.set) == Some(c.root))
}

/// An order making every root the maximum of its circuit, built by peeling
/// off extending elements (the largest id first) and placing each after
/// everything still remaining. Elements outside the ground set come first.
pub fn confluent_ordering(a: &Antimatroid) -> Result<Option<GroundOrder>> {
    let n = universe(a.ground());
    let mut cur = a.clone();
    let mut peeled = Vec::new();
    while !cur.ground().is_empty() {
        let Some(x) = minors::extending_elements(&cur).iter().next_back() else {
            return Ok(None);
        };
        peeled.push(x);
        cur = minors::anti_delete(&cur, Subset::singleton(x))?;
    }
    let mut seq: Vec<Element> = Subset::full(n).difference(a.ground()).iter().collect();
    seq.extend(peeled.iter().rev());
    let ord = GroundOrder::from_sequence(seq)?;
    if !is_confluent_order(a, &ord) {
        return Err(Error::Internal(format!(
            "greedy confluent order {ord:?} leaves a root below the maximum of its circuit"
        )));
    }
    Ok(Some(ord))
}

/// A Hasse diagram with integer edge labels, used for EL-labeling checks.
#[derive(Clone, Debug)]
pub struct LabeledHasse {
    pub bottom: usize,
    pub top: usize,
    /// Nodes with every node after all nodes below it.
    pub topo: Vec<usize>,
    /// `(upper, label)` pairs per node.
    pub up: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SnellingViolation {
    /// The order does not rank this label.
    OrderMissingLabel(Element),
    /// A maximal chain reaching this node repeats a label or misses one.
    NotPermutation { node: usize },
    /// The interval does not have exactly one increasing maximal chain.
    IncreasingChains {
        lower: usize,
        upper: usize,
        count: u64,
    },
    /// The increasing chain of the interval is not lexicographically least.
    NotLexLeast { lower: usize, upper: usize },
}

impl fmt::Display for SnellingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OrderMissingLabel(x) => write!(f, "order does not rank label {}", x + 1),
            Self::NotPermutation { node } => {
                write!(f, "a maximal chain through node {node} does not carry a permutation")
            }
            Self::IncreasingChains {
                lower,
                upper,
                count,
            } => write!(
                f,
                "interval [{lower}, {upper}] has {count} increasing maximal chains"
            ),
            Self::NotLexLeast { lower, upper } => write!(
                f,
                "increasing chain of [{lower}, {upper}] is not lexicographically least"
            ),
        }
    }
}

/// Checks that the labeling is an EL-labeling whose maximal chains all carry
/// permutations of the same label set.
pub fn check_el_labeling(h: &LabeledHasse) -> std::result::Result<(), SnellingViolation> {
    let n = h.up.len();
    // Permutation property: label sets of chains from the bottom.
    let mut reach: Vec<HashSet<u64>> = vec![HashSet::new(); n];
    reach[h.bottom].insert(0);
    let mut all_labels = 0u64;
    for &v in &h.topo {
        let from: Vec<u64> = reach[v].iter().copied().collect();
        for &(w, l) in &h.up[v] {
            all_labels |= 1 << l;
            for &s in &from {
                if s >> l & 1 == 1 {
                    return Err(SnellingViolation::NotPermutation { node: w });
                }
                reach[w].insert(s | 1 << l);
            }
        }
    }
    if reach[h.top].iter().any(|&s| s != all_labels) {
        return Err(SnellingViolation::NotPermutation { node: h.top });
    }
    let pos: Vec<usize> = {
        let mut p = vec![usize::MAX; n];
        for (i, &v) in h.topo.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    type Inc = Vec<(usize, u64, Vec<usize>)>;
    for &x in &h.topo {
        let mut lexmin: Vec<Option<Vec<usize>>> = vec![None; n];
        let mut inc: Vec<Inc> = vec![Vec::new(); n];
        lexmin[x] = Some(Vec::new());
        for &v in &h.topo[pos[x]..] {
            let Some(base) = lexmin[v].clone() else {
                continue;
            };
            let entries = std::mem::take(&mut inc[v]);
            for &(w, l) in &h.up[v] {
                let mut cand = base.clone();
                cand.push(l);
                if lexmin[w].as_ref().is_none_or(|cur| cand < *cur) {
                    lexmin[w] = Some(cand);
                }
                let mut add = |count: u64, seq: &Vec<usize>| {
                    let mut s = seq.clone();
                    s.push(l);
                    match inc[w].iter_mut().find(|e| e.0 == l) {
                        Some(e) => e.1 = e.1.saturating_add(count),
                        None => inc[w].push((l, count, s)),
                    }
                };
                if v == x {
                    add(1, &Vec::new());
                } else {
                    for (last, count, seq) in &entries {
                        if *last < l {
                            add(*count, seq);
                        }
                    }
                }
            }
            if v != x {
                let count: u64 = entries.iter().map(|e| e.1).sum();
                if count != 1 {
                    return Err(SnellingViolation::IncreasingChains {
                        lower: x,
                        upper: v,
                        count,
                    });
                }
                if entries[0].2 != base {
                    return Err(SnellingViolation::NotLexLeast { lower: x, upper: v });
                }
            }
        }
    }
    Ok(())
}

impl JDLattice {
    fn topo(&self) -> Vec<usize> {
        // canonical order lists sets by size, which respects inclusion
        (0..self.len()).collect()
    }

    /// The natural labeling with labels replaced by their positions in `ord`.
    pub fn labeled_hasse(&self, ord: &GroundOrder) -> std::result::Result<LabeledHasse, SnellingViolation> {
        if let Some(x) = self.labels().iter().find(|&x| x >= ord.len()) {
            return Err(SnellingViolation::OrderMissingLabel(x));
        }
        Ok(LabeledHasse {
            bottom: self.bottom(),
            top: self.top(),
            topo: self.topo(),
            up: self
                .up
                .iter()
                .map(|v| v.iter().map(|&(w, l)| (w, ord.position(l))).collect())
                .collect(),
        })
    }
}

/// Whether the natural labeling, compared under `ord`, is an S_n EL-labeling.
pub fn verify_snelling(l: &JDLattice, ord: &GroundOrder) -> std::result::Result<(), SnellingViolation> {
    check_el_labeling(&l.labeled_hasse(ord)?)
}

/// Every S_n EL-labeling of `l` with labels `0..k`, as one label per entry
/// of [`JDLattice::edges`]. Exhaustive; meant for small lattices.
pub fn snelling_search(l: &JDLattice) -> Vec<Vec<usize>> {
    let k = l.labels().len();
    let n = l.len();
    let mut sets = vec![0u64; n];
    let mut found = Vec::new();
    search_label_sets(l, 1, k, &mut sets, &mut found);
    found
}

fn search_label_sets(l: &JDLattice, v: usize, k: usize, sets: &mut Vec<u64>, found: &mut Vec<Vec<usize>>) {
    if v == l.len() {
        let labels: Vec<usize> = l
            .edges
            .iter()
            .map(|e| (sets[e.upper] & !sets[e.lower]).trailing_zeros() as usize)
            .collect();
        let mut up = vec![Vec::new(); l.len()];
        for (e, &lab) in l.edges.iter().zip(&labels) {
            up[e.lower].push((e.upper, lab));
        }
        let h = LabeledHasse {
            bottom: l.bottom(),
            top: l.top(),
            topo: l.topo(),
            up,
        };
        if check_el_labeling(&h).is_ok() {
            found.push(labels);
        }
        return;
    }
    let lower = &l.down[v];
    let rank = l.rank(v) as u32;
    let union = lower.iter().fold(0u64, |acc, &(w, _)| acc | sets[w]);
    if lower.len() > 1 {
        if union.count_ones() == rank {
            sets[v] = union;
            search_label_sets(l, v + 1, k, sets, found);
        }
        return;
    }
    for lab in 0..k {
        if union >> lab & 1 == 0 {
            sets[v] = union | 1 << lab;
            search_label_sets(l, v + 1, k, sets, found);
        }
    }
}

/// If `labels` is the natural labeling composed with a bijection of labels,
/// the order on ground elements that bijection induces.
pub fn as_natural_reordering(l: &JDLattice, labels: &[usize]) -> Option<GroundOrder> {
    let mut map: HashMap<Element, usize> = HashMap::new();
    for (e, &lab) in l.edges.iter().zip(labels) {
        if *map.entry(e.label).or_insert(lab) != lab {
            return None;
        }
    }
    let mut by_label: Vec<(usize, Element)> = map.into_iter().map(|(x, lab)| (lab, x)).collect();
    by_label.sort_unstable();
    if by_label.windows(2).any(|w| w[0].0 == w[1].0) {
        return None;
    }
    let n = universe(l.antimatroid.ground());
    let mut seq: Vec<Element> = Subset::full(n).difference(l.labels()).iter().collect();
    seq.extend(by_label.iter().map(|&(_, x)| x));
    GroundOrder::from_sequence(seq).ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    JdOnly,
    MjdNotEo,
    Eo,
    NotJd,
}

impl LatticeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LatticeKind::JdOnly => "JD-only",
            LatticeKind::MjdNotEo => "MJD-not-EO",
            LatticeKind::Eo => "EO",
            LatticeKind::NotJd => "not-JD",
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeClass {
    pub join_distributive: bool,
    pub matroidal: bool,
    pub confluent: bool,
    pub kind: LatticeKind,
    /// A confluent order, when one exists.
    pub order: Option<GroundOrder>,
    /// Why join-distributivity or matroidality failed.
    pub witness: Option<String>,
}

/// Classifies the lattice of feasible sets of `a`.
pub fn classify_antimatroid(a: &Antimatroid) -> Result<LatticeClass> {
    let l = lattice_from_antimatroid(a);
    let m = is_matroidal(&l);
    let order = confluent_ordering(a)?;
    if let Some(ord) = &order {
        if let Err(v) = verify_snelling(&l, ord) {
            return Err(Error::Internal(format!(
                "confluent order {ord:?} does not give an S_n EL-labeling: {v}"
            )));
        }
    }
    let confluent = order.is_some();
    let kind = match (m.matroidal, confluent) {
        (true, true) => LatticeKind::Eo,
        (true, false) => LatticeKind::MjdNotEo,
        (false, _) => LatticeKind::JdOnly,
    };
    Ok(LatticeClass {
        join_distributive: true,
        matroidal: m.matroidal,
        confluent,
        kind,
        order,
        witness: m.witness,
    })
}

/// Classifies an abstract lattice given by its Hasse diagram.
pub fn classify(p: &LatticePresentation) -> Result<LatticeClass> {
    let l = Lattice::new(p)?;
    let v = lattice::verify_join_distributive(&l)?;
    if let Some(w) = v.witness() {
        return Ok(LatticeClass {
            join_distributive: false,
            matroidal: false,
            confluent: false,
            kind: LatticeKind::NotJd,
            order: None,
            witness: Some(w.to_string()),
        });
    }
    classify_antimatroid(&lattice::t_map(&l)?)
}
