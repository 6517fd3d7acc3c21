//! Antimatroids as set systems: axiom verification, traces, feasible
//! extensions, free sets, rooted circuits and cocircuits, and blockers.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{Element, Subset};

/// A duplicate-free family of subsets of a ground set, kept in canonical order.
#[derive(Clone)]
pub struct SetFamily {
    ground: Subset,
    members: Vec<Subset>,
    index: HashSet<Subset>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(ground: Subset, members: I) -> Result<Self> {
        let mut members: Vec<Subset> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| !m.is_subset(ground)) {
            return Err(Error::OutOfGround(*bad));
        }
        members.sort_unstable();
        members.dedup();
        let index = members.iter().copied().collect();
        Ok(SetFamily {
            ground,
            members,
            index,
        })
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: Subset) -> bool {
        self.index.contains(&a)
    }

    pub fn union_of_members(&self) -> Subset {
        self.members
            .iter()
            .fold(Subset::EMPTY, |acc, m| acc.union(*m))
    }

    /// `{X ∩ A : X ∈ F}`, on ground set `A`.
    pub fn trace(&self, a: Subset) -> SetFamily {
        let a = a.intersection(self.ground);
        SetFamily::new(a, self.members.iter().map(|m| m.intersection(a))).expect("within A")
    }

    /// `Γ(A)`, computed without requiring `A` to be a member.
    pub fn extensions_of(&self, a: Subset) -> Subset {
        self.ground
            .difference(a)
            .iter()
            .filter(|&x| self.contains(a.with(x)))
            .collect()
    }

    /// Same members with every set viewed inside a new ground set.
    pub fn with_ground(&self, ground: Subset) -> Result<SetFamily> {
        SetFamily::new(ground, self.members.iter().copied())
    }

    /// The family as a list of 1-based element vectors.
    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.members
            .iter()
            .map(|m| m.iter().map(|x| x + 1).collect())
            .collect()
    }
}

impl PartialEq for SetFamily {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.members == other.members
    }
}

impl Eq for SetFamily {}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily(ground {:?}, {:?})", self.ground, self.members)
    }
}

/// A set with a distinguished root element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedSet {
    pub set: Subset,
    pub root: Element,
}

impl RootedSet {
    pub fn new(set: Subset, root: Element) -> Self {
        RootedSet { set, root }
    }

    /// The set without its root.
    pub fn stem(&self) -> Subset {
        self.set.without(self.root)
    }
}

impl fmt::Debug for RootedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.set, self.root + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AntimatroidViolation {
    MissingEmptySet,
    NotAccessible(Subset),
    NotUnionClosed(Subset, Subset),
    /// `|x| > |y|` but no element of `x ∖ y` extends `y`.
    GreedoidExchange(Subset, Subset),
    IntervalProperty {
        lower: Subset,
        upper: Subset,
        element: Element,
    },
    /// `x ⊄ y` but no element of `x ∖ y` extends `y`.
    AntimatroidExchange(Subset, Subset),
}

impl fmt::Display for AntimatroidViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingEmptySet => write!(f, "the empty set is not feasible"),
            Self::NotAccessible(x) => write!(f, "{x} has no feasible set directly below it"),
            Self::NotUnionClosed(x, y) => write!(f, "union of {x} and {y} is not feasible"),
            Self::GreedoidExchange(x, y) => write!(f, "no element of {x} extends {y}"),
            Self::IntervalProperty {
                lower,
                upper,
                element,
            } => write!(
                f,
                "{} extends {lower} but not {upper}",
                element + 1
            ),
            Self::AntimatroidExchange(x, y) => {
                write!(f, "{x} is not below {y} yet no element of it extends {y}")
            }
        }
    }
}

/// Outcome of checking three equivalent antimatroid axiom systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntimatroidVerdict {
    /// Greedoid with the interval property without upper bounds.
    pub greedoid_interval: std::result::Result<(), AntimatroidViolation>,
    /// Accessible and closed under unions.
    pub accessible_union_closed: std::result::Result<(), AntimatroidViolation>,
    /// Contains the empty set and satisfies the antimatroid exchange axiom.
    pub empty_exchange: std::result::Result<(), AntimatroidViolation>,
}

impl AntimatroidVerdict {
    pub fn is_antimatroid(&self) -> bool {
        self.greedoid_interval.is_ok()
            && self.accessible_union_closed.is_ok()
            && self.empty_exchange.is_ok()
    }

    pub fn formulations_agree(&self) -> bool {
        let a = self.greedoid_interval.is_ok();
        a == self.accessible_union_closed.is_ok() && a == self.empty_exchange.is_ok()
    }

    pub fn witness(&self) -> Option<&AntimatroidViolation> {
        [
            &self.greedoid_interval,
            &self.accessible_union_closed,
            &self.empty_exchange,
        ]
        .into_iter()
        .find_map(|r| r.as_ref().err())
    }
}

type Check = std::result::Result<(), AntimatroidViolation>;

fn check_accessible(f: &SetFamily) -> Check {
    if !f.contains(Subset::EMPTY) {
        return Err(AntimatroidViolation::MissingEmptySet);
    }
    for &x in f.members() {
        if !x.is_empty() && !x.iter().any(|e| f.contains(x.without(e))) {
            return Err(AntimatroidViolation::NotAccessible(x));
        }
    }
    Ok(())
}

fn check_greedoid_exchange(f: &SetFamily) -> Check {
    for &x in f.members() {
        for &y in f.members() {
            if x.len() > y.len() && !x.difference(y).iter().any(|e| f.contains(y.with(e))) {
                return Err(AntimatroidViolation::GreedoidExchange(x, y));
            }
        }
    }
    Ok(())
}

fn check_interval(f: &SetFamily) -> Check {
    for &x in f.members() {
        let gamma = f.extensions_of(x);
        if gamma.is_empty() {
            continue;
        }
        for &y in f.members() {
            if !x.is_subset(y) {
                continue;
            }
            if let Some(a) = gamma.difference(y).iter().find(|&a| !f.contains(y.with(a))) {
                return Err(AntimatroidViolation::IntervalProperty {
                    lower: x,
                    upper: y,
                    element: a,
                });
            }
        }
    }
    Ok(())
}

fn check_union_closed(f: &SetFamily) -> Check {
    let m = f.members();
    for (i, &x) in m.iter().enumerate() {
        for &y in &m[i + 1..] {
            if !f.contains(x.union(y)) {
                return Err(AntimatroidViolation::NotUnionClosed(x, y));
            }
        }
    }
    Ok(())
}

fn check_antimatroid_exchange(f: &SetFamily) -> Check {
    for &x in f.members() {
        for &y in f.members() {
            if !x.is_subset(y) && !x.difference(y).iter().any(|e| f.contains(y.with(e))) {
                return Err(AntimatroidViolation::AntimatroidExchange(x, y));
            }
        }
    }
    Ok(())
}

/// Greedoid axioms: accessibility plus the exchange axiom.
pub fn is_greedoid(f: &SetFamily) -> bool {
    check_accessible(f).is_ok() && check_greedoid_exchange(f).is_ok()
}

/// Whether `A ↦ Γ(A)` is one-to-one on the members of `f`.
pub fn extension_map_injective(f: &SetFamily) -> bool {
    let mut seen = HashSet::new();
    f.members().iter().all(|&a| seen.insert(f.extensions_of(a)))
}

pub fn verify_antimatroid(f: &SetFamily) -> AntimatroidVerdict {
    AntimatroidVerdict {
        greedoid_interval: check_accessible(f)
            .and_then(|_| check_greedoid_exchange(f))
            .and_then(|_| check_interval(f)),
        accessible_union_closed: check_accessible(f).and_then(|_| check_union_closed(f)),
        empty_exchange: if f.contains(Subset::EMPTY) {
            check_antimatroid_exchange(f)
        } else {
            Err(AntimatroidViolation::MissingEmptySet)
        },
    }
}

/// Whether `a` is free in `f`: its trace is the full power set of `a`.
pub fn is_free(f: &SetFamily, a: Subset) -> bool {
    let mut seen = HashSet::new();
    for m in f.members() {
        seen.insert(m.intersection(a));
    }
    seen.len() == 1usize << a.len()
}

/// A verified antimatroid together with its derived rooted circuits,
/// cocircuits, free sets and loops.
#[derive(Clone)]
pub struct Antimatroid {
    family: SetFamily,
    loops: Subset,
    independents: Vec<Subset>,
    circuits: Vec<RootedSet>,
    cocircuits: Vec<RootedSet>,
}

impl Antimatroid {
    pub fn new(family: SetFamily) -> Result<Self> {
        let verdict = verify_antimatroid(&family);
        if !verdict.formulations_agree() {
            return Err(Error::Internal(format!(
                "antimatroid axiom systems disagree: {verdict:?}"
            )));
        }
        if let Some(w) = verdict.witness() {
            return Err(Error::NotAntimatroid(w.to_string()));
        }
        let loops = family.ground().difference(family.union_of_members());
        let independents = free_sets_by_extensions(&family);
        let by_trace = free_sets_by_trace(&family);
        if independents != by_trace {
            return Err(Error::Internal(format!(
                "free sets by trace {by_trace:?} differ from feasible extensions {independents:?}"
            )));
        }
        let circuits = compute_circuits(&family, &independents)?;
        let cocircuits = compute_cocircuits(&family)?;
        Ok(Antimatroid {
            family,
            loops,
            independents,
            circuits,
            cocircuits,
        })
    }

    /// The antimatroid whose rooted circuits are `circuits`.
    pub fn from_circuits(ground: Subset, circuits: &[RootedSet]) -> Result<Self> {
        let family = check_rooted_axioms(RootedKind::Circuit, circuits, ground)
            .map_err(|v| Error::NotAntimatroid(v.to_string()))?;
        Antimatroid::new(family)
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn ground(&self) -> Subset {
        self.family.ground()
    }

    pub fn feasible_sets(&self) -> &[Subset] {
        self.family.members()
    }

    pub fn is_feasible(&self, a: Subset) -> bool {
        self.family.contains(a)
    }

    /// Elements lying in no feasible set.
    pub fn loops(&self) -> Subset {
        self.loops
    }

    /// `Γ(A)` for a feasible `A`.
    pub fn feasible_extensions(&self, a: Subset) -> Result<Subset> {
        if !self.is_feasible(a) {
            return Err(Error::NotFeasible(a));
        }
        Ok(self.family.extensions_of(a))
    }

    /// Free sets, in canonical order.
    pub fn independents(&self) -> &[Subset] {
        &self.independents
    }

    /// Rooted circuits. A loop `x` appears as the rooted circuit `({x}, x)`.
    pub fn rooted_circuits(&self) -> &[RootedSet] {
        &self.circuits
    }

    pub fn rooted_cocircuits(&self) -> &[RootedSet] {
        &self.cocircuits
    }

    /// `{C ∖ x : (C, x) a rooted circuit}`.
    pub fn circuit_stems(&self, x: Element) -> Clutter {
        Clutter::new(
            self.circuits
                .iter()
                .filter(|c| c.root == x)
                .map(RootedSet::stem),
        )
        .expect("circuit stems at a root form a clutter")
    }

    pub fn cocircuit_stems(&self, x: Element) -> Clutter {
        Clutter::new(
            self.cocircuits
                .iter()
                .filter(|c| c.root == x)
                .map(RootedSet::stem),
        )
        .expect("cocircuit stems at a root form a clutter")
    }

    /// Elements `a ∈ A` with `A ∖ a` feasible.
    pub fn endpoints(&self, a: Subset) -> Subset {
        a.iter().filter(|&x| self.is_feasible(a.without(x))).collect()
    }

    /// Largest feasible subset of `a`.
    pub fn interior(&self, a: Subset) -> Subset {
        let mut cur = Subset::EMPTY;
        loop {
            let ext = self.family.extensions_of(cur).intersection(a);
            match ext.first() {
                Some(x) => cur = cur.with(x),
                None => return cur,
            }
        }
    }
}

impl fmt::Debug for Antimatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Antimatroid({:?})", self.family)
    }
}

impl PartialEq for Antimatroid {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
    }
}

fn free_sets_by_extensions(f: &SetFamily) -> Vec<Subset> {
    let mut out: Vec<Subset> = f.members().iter().map(|&a| f.extensions_of(a)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn free_sets_by_trace(f: &SetFamily) -> Vec<Subset> {
    // Free sets are closed under subsets, so only sets whose maximal proper
    // subsets are free need a trace computation.
    let mut free: HashSet<Subset> = HashSet::new();
    let mut out = Vec::new();
    let mut frontier = vec![Subset::EMPTY];
    free.insert(Subset::EMPTY);
    out.push(Subset::EMPTY);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in frontier {
            let top = a.iter().next_back();
            for x in f.ground().iter().filter(|&x| Some(x) > top) {
                let b = a.with(x);
                if b.iter().all(|y| free.contains(&b.without(y))) && is_free(f, b) {
                    free.insert(b);
                    out.push(b);
                    next.push(b);
                }
            }
        }
        frontier = next;
    }
    out.sort_unstable();
    out
}

fn compute_circuits(f: &SetFamily, independents: &[Subset]) -> Result<Vec<RootedSet>> {
    let free: HashSet<Subset> = independents.iter().copied().collect();
    let mut found: HashSet<Subset> = HashSet::new();
    for &i in independents {
        for x in f.ground().difference(i).iter() {
            let c = i.with(x);
            if !free.contains(&c) && c.iter().all(|y| free.contains(&c.without(y))) {
                found.insert(c);
            }
        }
    }
    let mut out = Vec::with_capacity(found.len());
    for c in found {
        out.push(RootedSet::new(c, circuit_root(f, c)?));
    }
    out.sort_unstable();
    Ok(out)
}

/// The unique `a` with `trace(F, C) = 2^C ∖ {{a}}`.
fn circuit_root(f: &SetFamily, c: Subset) -> Result<Element> {
    let seen: HashSet<Subset> = f.members().iter().map(|m| m.intersection(c)).collect();
    let missing: Vec<Subset> = c.subsets().filter(|s| !seen.contains(s)).collect();
    match missing.as_slice() {
        [single] if single.len() == 1 => Ok(single.first().unwrap()),
        _ => Err(Error::Internal(format!(
            "dependent set {c} has no unique root (missing traces {missing:?})"
        ))),
    }
}

fn compute_cocircuits(f: &SetFamily) -> Result<Vec<RootedSet>> {
    let mut out = Vec::new();
    for &a in f.members() {
        let ends: Vec<Element> = a.iter().filter(|&x| f.contains(a.without(x))).collect();
        if let [root] = ends.as_slice() {
            out.push(RootedSet::new(a, *root));
        }
    }
    out.sort_unstable();
    // Cross-check: minimal feasible sets containing each element.
    let mut minimal = Vec::new();
    for x in f.union_of_members().iter() {
        let containing: Vec<Subset> = f.members().iter().copied().filter(|m| m.contains(x)).collect();
        for &m in &containing {
            if !containing.iter().any(|o| o.is_proper_subset(m)) {
                minimal.push(RootedSet::new(m, x));
            }
        }
    }
    minimal.sort_unstable();
    if minimal != out {
        return Err(Error::Internal(format!(
            "single-endpoint sets {out:?} differ from minimal feasible sets {minimal:?}"
        )));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootedKind {
    Circuit,
    Cocircuit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootedViolation {
    RootOutsideSet(RootedSet),
    OutsideGround(RootedSet),
    /// CI1 / CC1: two rooted sets with the same root, one properly inside the other.
    Nested {
        larger: RootedSet,
        smaller: RootedSet,
    },
    /// CI2 / CC2 fails for this pair (for CC2 `second` carries the missing root).
    Elimination {
        first: RootedSet,
        second: RootedSet,
    },
}

impl fmt::Display for RootedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RootOutsideSet(r) => write!(f, "root of {r:?} is not in its set"),
            Self::OutsideGround(r) => write!(f, "{r:?} leaves the ground set"),
            Self::Nested { larger, smaller } => {
                write!(f, "{smaller:?} is properly contained in {larger:?}")
            }
            Self::Elimination { first, second } => {
                write!(f, "elimination axiom fails for {first:?} and {second:?}")
            }
        }
    }
}

/// Checks the rooted circuit (CI1, CI2) or cocircuit (CC1, CC2) axioms and
/// returns the feasible sets they determine.
pub fn check_rooted_axioms(
    kind: RootedKind,
    rooted: &[RootedSet],
    ground: Subset,
) -> std::result::Result<SetFamily, RootedViolation> {
    for r in rooted {
        if !r.set.contains(r.root) {
            return Err(RootedViolation::RootOutsideSet(*r));
        }
        if !r.set.is_subset(ground) {
            return Err(RootedViolation::OutsideGround(*r));
        }
    }
    for &r1 in rooted {
        for &r2 in rooted {
            if r1.root == r2.root && r2.set.is_proper_subset(r1.set) {
                return Err(RootedViolation::Nested {
                    larger: r1,
                    smaller: r2,
                });
            }
        }
    }
    match kind {
        RootedKind::Circuit => {
            for &c1 in rooted {
                for &c2 in rooted {
                    if c2.stem().contains(c1.root) {
                        let bound = c1.set.union(c2.set).without(c1.root);
                        if !rooted
                            .iter()
                            .any(|c3| c3.root == c2.root && c3.set.is_subset(bound))
                        {
                            return Err(RootedViolation::Elimination {
                                first: c1,
                                second: c2,
                            });
                        }
                    }
                }
            }
            Ok(feasible_from_circuits(rooted, ground))
        }
        RootedKind::Cocircuit => {
            for &d1 in rooted {
                for a2 in d1.stem().iter() {
                    let bound = d1.stem();
                    if !rooted
                        .iter()
                        .any(|d2| d2.root == a2 && d2.set.is_subset(bound))
                    {
                        return Err(RootedViolation::Elimination {
                            first: d1,
                            second: RootedSet::new(Subset::singleton(a2), a2),
                        });
                    }
                }
            }
            Ok(feasible_from_cocircuits(rooted, ground))
        }
    }
}

/// Feasible sets are the `A` with `C ∩ A ≠ {a}` for every rooted circuit;
/// collected by search upward from the empty set.
pub fn feasible_from_circuits(circuits: &[RootedSet], ground: Subset) -> SetFamily {
    let admissible = |a: Subset| {
        circuits
            .iter()
            .all(|c| c.set.intersection(a) != Subset::singleton(c.root))
    };
    let mut seen: HashSet<Subset> = HashSet::new();
    let mut queue = VecDeque::new();
    if admissible(Subset::EMPTY) {
        seen.insert(Subset::EMPTY);
        queue.push_back(Subset::EMPTY);
    }
    while let Some(a) = queue.pop_front() {
        for x in ground.difference(a).iter() {
            let b = a.with(x);
            if !seen.contains(&b) && admissible(b) {
                seen.insert(b);
                queue.push_back(b);
            }
        }
    }
    SetFamily::new(ground, seen).expect("within ground")
}

/// Feasible sets are the unions of cocircuits.
pub fn feasible_from_cocircuits(cocircuits: &[RootedSet], ground: Subset) -> SetFamily {
    let mut seen: HashSet<Subset> = HashSet::from([Subset::EMPTY]);
    let mut queue = VecDeque::from([Subset::EMPTY]);
    while let Some(a) = queue.pop_front() {
        for d in cocircuits {
            let b = a.union(d.set);
            if seen.insert(b) {
                queue.push_back(b);
            }
        }
    }
    SetFamily::new(ground, seen).expect("within ground")
}

/// A family of sets none of which contains another.
#[derive(Clone, PartialEq, Eq)]
pub struct Clutter {
    members: Vec<Subset>,
}

impl Clutter {
    pub fn new<I: IntoIterator<Item = Subset>>(members: I) -> Result<Self> {
        let mut members: Vec<Subset> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        for &a in &members {
            for &b in &members {
                if a.is_proper_subset(b) {
                    return Err(Error::NotClutter(b, a));
                }
            }
        }
        Ok(Clutter { members })
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clutter{:?}", self.members)
    }
}

fn minimal_sets(mut sets: Vec<Subset>) -> Vec<Subset> {
    sets.sort_unstable();
    sets.dedup();
    let mut out: Vec<Subset> = Vec::new();
    for s in sets {
        if !out.iter().any(|m| m.is_subset(s)) {
            out.push(s);
        }
    }
    out
}

/// Minimal transversals of a clutter (Berge multiplication).
pub fn blocker(u: &Clutter) -> Clutter {
    let mut cur = vec![Subset::EMPTY];
    for &member in u.members() {
        let mut next = Vec::new();
        for &t in &cur {
            if !t.is_disjoint(member) {
                next.push(t);
            } else {
                next.extend(member.iter().map(|x| t.with(x)));
            }
        }
        cur = minimal_sets(next);
    }
    Clutter::new(cur).expect("minimal sets form a clutter")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn s(xs: &[usize]) -> Subset {
        xs.iter().map(|x| x - 1).collect()
    }

    fn rs(xs: &[usize], r: usize) -> RootedSet {
        RootedSet::new(s(xs), r - 1)
    }

    #[test]
    fn verify_examples() {
        assert!(verify_antimatroid(&fixtures::fig1_passive_family()).is_antimatroid());
        assert!(verify_antimatroid(&fixtures::jdb()).is_antimatroid());
        let bad = SetFamily::new(Subset::full(2), [Subset::EMPTY, s(&[1, 2])]).unwrap();
        let v = verify_antimatroid(&bad);
        assert!(!v.is_antimatroid());
        assert!(v.formulations_agree());
        assert_eq!(v.accessible_union_closed, Err(AntimatroidViolation::NotAccessible(s(&[1, 2]))));
    }

    #[test]
    fn matroid_is_greedoid_but_not_antimatroid() {
        // U(1,2) as a set system: {∅, 1, 2}
        let f = SetFamily::new(Subset::full(2), [Subset::EMPTY, s(&[1]), s(&[2])]).unwrap();
        assert!(is_greedoid(&f));
        assert!(!extension_map_injective(&f));
        let v = verify_antimatroid(&f);
        assert!(v.formulations_agree() && !v.is_antimatroid());
        assert!(matches!(
            v.greedoid_interval,
            Err(AntimatroidViolation::IntervalProperty { .. })
        ));
    }

    #[test]
    fn traces() {
        let f = fixtures::fig1_passive_family();
        assert_eq!(f.trace(Subset::EMPTY).members(), &[Subset::EMPTY]);
        assert_eq!(f.trace(s(&[1])).members(), &[Subset::EMPTY, s(&[1])]);
        let u = fixtures::u24ce();
        assert_eq!(
            u.trace(s(&[1, 2])).members(),
            &[Subset::EMPTY, s(&[1]), s(&[2]), s(&[1, 2])]
        );
    }

    #[test]
    fn feasible_extensions() {
        let a = Antimatroid::new(fixtures::fig1_passive_family()).unwrap();
        assert_eq!(a.feasible_extensions(Subset::EMPTY).unwrap(), s(&[3, 4]));
        assert_eq!(a.feasible_extensions(s(&[2, 4])).unwrap(), s(&[1, 3]));
        assert_eq!(a.feasible_extensions(a.ground()).unwrap(), Subset::EMPTY);
        assert!(matches!(a.feasible_extensions(s(&[1])), Err(Error::NotFeasible(_))));
    }

    #[test]
    fn independents() {
        let u = Antimatroid::new(fixtures::u24ce()).unwrap();
        assert_eq!(u.independents().len(), 11);
        assert!(u.independents().iter().all(|i| i.len() <= 2));
        let f = Antimatroid::new(fixtures::fig1_passive_family()).unwrap();
        assert_eq!(f.independents(), fixtures::fig1().independents());
        let trivial = Antimatroid::new(SetFamily::new(Subset::full(1), [Subset::EMPTY]).unwrap()).unwrap();
        assert_eq!(trivial.independents(), &[Subset::EMPTY]);
        assert_eq!(trivial.loops(), s(&[1]));
    }

    #[test]
    fn circuits_and_cocircuits() {
        let f = Antimatroid::new(fixtures::fig1_passive_family()).unwrap();
        assert_eq!(
            f.rooted_circuits(),
            &[rs(&[1, 4], 1), rs(&[1, 2, 3], 1), rs(&[2, 3, 4], 2)]
        );
        for c in [rs(&[4], 4), rs(&[3], 3), rs(&[1, 2, 4], 1)] {
            assert!(f.rooted_cocircuits().contains(&c));
        }
        let u = Antimatroid::new(fixtures::u24ce()).unwrap();
        assert!(u.rooted_circuits().contains(&rs(&[1, 2, 3], 1)));
        assert!(u.rooted_circuits().contains(&rs(&[1, 2, 4], 2)));
        let j = Antimatroid::new(fixtures::jdb()).unwrap();
        for c in [rs(&[2], 2), rs(&[1], 1), rs(&[2, 3], 3)] {
            assert!(j.rooted_cocircuits().contains(&c));
        }
        let boolean = Antimatroid::new(SetFamily::new(Subset::full(3), Subset::full(3).subsets()).unwrap()).unwrap();
        assert!(boolean.rooted_circuits().is_empty());
        assert_eq!(boolean.rooted_cocircuits(), &[rs(&[1], 1), rs(&[2], 2), rs(&[3], 3)]);
    }

    #[test]
    fn rooted_axioms_round_trip() {
        let f = Antimatroid::new(fixtures::fig1_passive_family()).unwrap();
        let fam = check_rooted_axioms(RootedKind::Circuit, f.rooted_circuits(), f.ground()).unwrap();
        assert_eq!(&fam, f.family());
        let j = Antimatroid::new(fixtures::jdb()).unwrap();
        let fam = check_rooted_axioms(RootedKind::Cocircuit, j.rooted_cocircuits(), j.ground()).unwrap();
        assert_eq!(&fam, j.family());
        let bad = [rs(&[1, 2], 1), rs(&[1], 1)];
        assert!(matches!(
            check_rooted_axioms(RootedKind::Circuit, &bad, Subset::full(2)),
            Err(RootedViolation::Nested { .. })
        ));
    }

    #[test]
    fn blockers() {
        let c = |v: &[&[usize]]| Clutter::new(v.iter().map(|x| s(x))).unwrap();
        assert_eq!(blocker(&c(&[&[1], &[2]])), c(&[&[1, 2]]));
        assert_eq!(blocker(&c(&[&[1, 2]])), c(&[&[1], &[2]]));
        assert_eq!(blocker(&c(&[&[4], &[2, 3]])), c(&[&[2, 4], &[3, 4]]));
        assert_eq!(blocker(&c(&[])), c(&[&[]]));
        assert_eq!(blocker(&c(&[&[]])), c(&[]));
        assert!(Clutter::new([s(&[1]), s(&[1, 2])]).is_err());
        let f = Antimatroid::new(fixtures::fig1_passive_family()).unwrap();
        assert_eq!(f.circuit_stems(0), c(&[&[4], &[2, 3]]));
        assert_eq!(f.cocircuit_stems(0), c(&[&[2, 4], &[3, 4]]));
    }
}
