//! The generalized external order of an ordered matroid: independent sets
//! ordered by inclusion of their externally passive sets.

use std::collections::HashMap;

use crate::activity::{active_chain, activity_report, external_passive};
use crate::antimatroid::{feasible_from_circuits, Antimatroid, RootedSet, SetFamily};
use crate::error::{Error, Result};
use crate::jd::{lattice_from_antimatroid, JDLattice};
use crate::matroid::Matroid;
use crate::subset::{Element, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    External,
    /// The external order of the dual, viewed as an order on `M`.
    Internal,
}

/// `{(C, min C)}` over the circuits of `m`.
pub fn ext_rooted_circuits(m: &Matroid) -> Vec<RootedSet> {
    let mut out: Vec<RootedSet> = m
        .circuits()
        .iter()
        .map(|&c| RootedSet::new(c, m.order().min_of(c).expect("circuits are nonempty")))
        .collect();
    out.sort_unstable();
    out
}

#[derive(Clone, Debug)]
pub struct ExternalOrder {
    matroid: Matroid,
    antimatroid: Antimatroid,
    lattice: JDLattice,
    /// Independent set of each lattice element.
    independent: Vec<Subset>,
    passive: HashMap<Subset, Subset>,
    kind: OrderKind,
}

pub fn build(m: &Matroid) -> Result<ExternalOrder> {
    let ground = m.ground();
    let mut passive = HashMap::new();
    let mut by_passive = HashMap::new();
    for &i in m.independents() {
        let ep = external_passive(m, i)?;
        if let Some(other) = by_passive.insert(ep, i) {
            return Err(Error::Internal(format!(
                "{i} and {other} share the passive set {ep}"
            )));
        }
        passive.insert(i, ep);
    }
    let family = SetFamily::new(ground, passive.values().copied())?;
    let circuits = ext_rooted_circuits(m);
    let rebuilt = feasible_from_circuits(&circuits, ground);
    if rebuilt != family {
        return Err(Error::Internal(format!(
            "passive sets {family:?} differ from the family of the rooted circuits {rebuilt:?}"
        )));
    }
    let antimatroid = Antimatroid::new(family)?;
    if antimatroid.rooted_circuits() != circuits.as_slice() {
        return Err(Error::Internal(format!(
            "antimatroid circuits {:?} differ from matroid circuits rooted at minima {circuits:?}",
            antimatroid.rooted_circuits()
        )));
    }
    let lattice = lattice_from_antimatroid(&antimatroid);
    let mut independent = Vec::with_capacity(lattice.len());
    for x in 0..lattice.len() {
        let ep = lattice.element(x);
        let i = by_passive[&ep];
        let ext = lattice.element_sets(x).i;
        if ext != i {
            return Err(Error::Internal(format!(
                "feasible set {ep} has extensions {ext}, not its independent set {i}"
            )));
        }
        independent.push(i);
    }
    Ok(ExternalOrder {
        matroid: m.clone(),
        antimatroid,
        lattice,
        independent,
        passive,
        kind: OrderKind::External,
    })
}

/// The external order of the dual matroid.
pub fn internal_order(m: &Matroid) -> Result<ExternalOrder> {
    let mut eo = build(&m.dual())?;
    eo.kind = OrderKind::Internal;
    Ok(eo)
}

/// The interval partitions of `2^E` attached to an external order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanPartition {
    /// `(I, EA(I))` for each independent set, giving `[I, I ∪ EA(I)]`.
    pub intervals: Vec<(Subset, Subset)>,
    assignment: HashMap<Subset, Subset>,
}

impl BooleanPartition {
    /// The independent set whose interval contains `a`.
    pub fn part_of(&self, a: Subset) -> Option<Subset> {
        self.assignment.get(&a).copied()
    }
}

impl ExternalOrder {
    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn antimatroid(&self) -> &Antimatroid {
        &self.antimatroid
    }

    pub fn lattice(&self) -> &JDLattice {
        &self.lattice
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.independent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.independent.is_empty()
    }

    /// The independent set at lattice element `x`.
    pub fn independent(&self, x: usize) -> Subset {
        self.independent[x]
    }

    /// Independent sets indexed by lattice element.
    pub fn independents(&self) -> &[Subset] {
        &self.independent
    }

    pub fn passive(&self, i: Subset) -> Result<Subset> {
        self.passive.get(&i).copied().ok_or(Error::NotIndependent(i))
    }

    /// Lattice element of an independent set.
    pub fn element_of(&self, i: Subset) -> Result<usize> {
        Ok(self.lattice.index_of(self.passive(i)?).expect("passive sets are elements"))
    }

    pub fn minimum(&self) -> Subset {
        self.independent[self.lattice.bottom()]
    }

    pub fn maximum(&self) -> Subset {
        self.independent[self.lattice.top()]
    }

    /// `I ≤ J` iff `EP(I) ⊆ EP(J)`, cross-checked against `EP(I) ∩ J = ∅`.
    pub fn leq(&self, i: Subset, j: Subset) -> Result<bool> {
        let (pi, pj) = (self.passive(i)?, self.passive(j)?);
        let by_inclusion = pi.is_subset(pj);
        if by_inclusion != pi.is_disjoint(j) {
            return Err(Error::Internal(format!(
                "order tests disagree for {i} and {j}"
            )));
        }
        Ok(by_inclusion)
    }

    /// Classical orientation on bases: `B₁ ≤ B₂` iff `EP(B₁) ⊇ EP(B₂)`.
    pub fn las_vergnas_leq(&self, b1: Subset, b2: Subset) -> Result<bool> {
        for b in [b1, b2] {
            if b.len() != self.matroid.full_rank() || !self.matroid.is_independent(b) {
                return Err(Error::Undefined(format!("{b} is not a basis")));
            }
        }
        Ok(self.passive(b2)?.is_subset(self.passive(b1)?))
    }

    /// For each `a ∈ I`, the independent set covering `I` whose passive set
    /// gains `a`, found through the active chain of `a`.
    pub fn upper_covers(&self, i: Subset) -> Result<Vec<(Element, Subset)>> {
        let ep = self.passive(i)?;
        let order = self.matroid.order();
        let mut out = Vec::with_capacity(i.len());
        for a in i.iter() {
            let ch = active_chain(&self.matroid, i, a)?;
            let j = match order.max_of(ch) {
                Some(b) => i.without(a).with(b),
                None => i.without(a),
            };
            let got = self.passive(j)?;
            if got != ep.with(a) {
                return Err(Error::Internal(format!(
                    "cover of {i} through {} is {j} with passive set {got}, expected {}",
                    a + 1,
                    ep.with(a)
                )));
            }
            out.push((a, j));
        }
        let x = self.element_of(i)?;
        let mut from_lattice: Vec<(Element, Subset)> = self
            .lattice
            .upper_covers(x)
            .iter()
            .map(|&(y, l)| (l, self.independent[y]))
            .collect();
        from_lattice.sort_unstable();
        if from_lattice != out {
            return Err(Error::Internal(format!(
                "covers of {i} from active chains {out:?} differ from the lattice {from_lattice:?}"
            )));
        }
        Ok(out)
    }

    /// The independent set whose passive set is `EP(I) ∖ min EP(I)`.
    pub fn min_passive_lower_cover(&self, i: Subset) -> Result<Subset> {
        let ep = self.passive(i)?;
        let m = &self.matroid;
        let x = m.order().min_of(ep).ok_or(Error::EmptyPassiveSet(i))?;
        let j = if m.closure(i).contains(x) {
            let c = m.basic_circuit(i, x)?;
            i.without(m.order().min_of(c).expect("nonempty")).with(x)
        } else {
            i.with(x)
        };
        let got = self.passive(j)?;
        if got != ep.without(x) {
            return Err(Error::Internal(format!(
                "lower cover {j} of {i} has passive set {got}, expected {}",
                ep.without(x)
            )));
        }
        Ok(j)
    }

    /// Meet and join through lex-maximal bases, checked against the lattice.
    pub fn meet_join(&self, i: Subset, j: Subset) -> Result<(Subset, Subset)> {
        let (pi, pj) = (self.passive(i)?, self.passive(j)?);
        let meet = self.matroid.lex_max_basis(pi.intersection(pj));
        let join = self.matroid.lex_max_basis(pi.union(pj));
        let (xi, xj) = (self.element_of(i)?, self.element_of(j)?);
        let lm = self.independent[self.lattice.meet(xi, xj)];
        let lj = self.independent[self.lattice.join(xi, xj)];
        if (meet, join) != (lm, lj) {
            return Err(Error::Internal(format!(
                "lex-maximal bases give meet {meet} and join {join} of {i}, {j}; lattice gives {lm} and {lj}"
            )));
        }
        Ok((meet, join))
    }

    /// Assigns each `A ⊆ E` the independent `I` with `I ⊆ A ⊆ I ∪ EA(I)`,
    /// checking that these intervals and the intervals `[EP(I), E ∖ I]` both
    /// partition `2^E`.
    pub fn boolean_partition(&self) -> Result<BooleanPartition> {
        let ground = self.matroid.ground();
        let mut assignment = HashMap::new();
        let mut complementary: HashMap<Subset, Subset> = HashMap::new();
        let mut intervals = Vec::with_capacity(self.len());
        for &i in self.matroid.independents() {
            let ea = activity_report(&self.matroid, i).ea;
            let ep = self.passive(i)?;
            if ep != ground.difference(i).difference(ea) {
                return Err(Error::Internal(format!("activity of {i} is inconsistent")));
            }
            for s in ea.subsets() {
                if let Some(prev) = assignment.insert(i.union(s), i) {
                    return Err(Error::Internal(format!(
                        "{} lies in the intervals of both {prev} and {i}",
                        i.union(s)
                    )));
                }
                if let Some(prev) = complementary.insert(ep.union(s), i) {
                    return Err(Error::Internal(format!(
                        "{} lies in the passive intervals of both {prev} and {i}",
                        ep.union(s)
                    )));
                }
            }
            intervals.push((i, ea));
        }
        let total = 1usize << ground.len();
        if assignment.len() != total || complementary.len() != total {
            return Err(Error::Internal(format!(
                "intervals cover {} and {} of the {total} subsets",
                assignment.len(),
                complementary.len()
            )));
        }
        Ok(BooleanPartition {
            intervals,
            assignment,
        })
    }

    /// `I ↦ cl(I)` per lattice element, checked to be onto the flats and
    /// order-reversing.
    pub fn flats_projection(&self) -> Result<Vec<Subset>> {
        let proj: Vec<Subset> = self.independent.iter().map(|&i| self.matroid.closure(i)).collect();
        for e in self.lattice.edges() {
            if !proj[e.upper].is_subset(proj[e.lower]) {
                return Err(Error::Internal(format!(
                    "closure increases from {} to {}",
                    self.independent[e.lower], self.independent[e.upper]
                )));
            }
        }
        let mut image = proj.clone();
        image.sort_unstable();
        image.dedup();
        if image != self.matroid.flats() {
            return Err(Error::Internal("closures do not cover every flat".into()));
        }
        Ok(proj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::subset::GroundOrder;

    fn s(xs: &[usize]) -> Subset {
        xs.iter().map(|x| x - 1).collect()
    }

    fn rs(xs: &[usize], r: usize) -> RootedSet {
        RootedSet::new(s(xs), r - 1)
    }

    #[test]
    fn rooted_circuits() {
        assert_eq!(
            ext_rooted_circuits(&fixtures::fig1()),
            vec![rs(&[1, 4], 1), rs(&[1, 2, 3], 1), rs(&[2, 3, 4], 2)]
        );
        assert_eq!(ext_rooted_circuits(&Matroid::uniform(2, 3).unwrap()), vec![rs(&[1, 2, 3], 1)]);
        assert!(ext_rooted_circuits(&Matroid::free(3).unwrap()).is_empty());
    }

    #[test]
    fn fig1_order() {
        let eo = build(&fixtures::fig1()).unwrap();
        assert_eq!(eo.antimatroid().family(), &fixtures::fig1_passive_family());
        assert_eq!((eo.minimum(), eo.maximum()), (s(&[3, 4]), Subset::EMPTY));
        assert!(eo.leq(s(&[3, 4]), s(&[2, 3])).unwrap());
        assert!(!eo.leq(s(&[1, 3]), s(&[1, 2])).unwrap());
        assert!(eo.leq(s(&[1]), s(&[1])).unwrap());
        assert!(eo.leq(s(&[1, 4]), s(&[1])).is_err());
    }

    #[test]
    fn tiny_orders() {
        let eo = build(&Matroid::uniform(0, 3).unwrap()).unwrap();
        assert_eq!(eo.antimatroid().feasible_sets(), &[Subset::EMPTY]);
        let u12 = Matroid::uniform(1, 2).unwrap();
        let eo = build(&u12).unwrap();
        assert_eq!(eo.passive(s(&[2])).unwrap(), Subset::EMPTY);
        assert_eq!(eo.passive(s(&[1])).unwrap(), s(&[2]));
        assert_eq!(eo.passive(Subset::EMPTY).unwrap(), s(&[1, 2]));
    }

    #[test]
    fn covers() {
        let eo = build(&fixtures::fig1()).unwrap();
        assert_eq!(
            eo.upper_covers(s(&[3, 4])).unwrap(),
            vec![(2, s(&[2, 4])), (3, s(&[2, 3]))]
        );
        assert_eq!(
            eo.upper_covers(s(&[2, 4])).unwrap(),
            vec![(1, s(&[4])), (3, s(&[1, 2]))]
        );
        assert!(eo.upper_covers(Subset::EMPTY).unwrap().is_empty());
        assert_eq!(eo.min_passive_lower_cover(s(&[2, 4])).unwrap(), s(&[3, 4]));
        assert_eq!(eo.min_passive_lower_cover(s(&[1])).unwrap(), s(&[1, 2]));
        assert_eq!(eo.min_passive_lower_cover(Subset::EMPTY).unwrap(), s(&[1]));
        assert!(matches!(
            eo.min_passive_lower_cover(s(&[3, 4])),
            Err(Error::EmptyPassiveSet(_))
        ));
    }

    #[test]
    fn meets_and_joins() {
        let eo = build(&fixtures::fig1()).unwrap();
        assert_eq!(eo.meet_join(s(&[1, 3]), s(&[1, 2])).unwrap(), (s(&[2, 3]), s(&[1])));
        assert_eq!(eo.meet_join(s(&[2, 4]), s(&[2, 4])).unwrap(), (s(&[2, 4]), s(&[2, 4])));
        assert_eq!(eo.meet_join(s(&[3, 4]), s(&[1])).unwrap(), (s(&[3, 4]), s(&[1])));
    }

    #[test]
    fn partitions_and_flats() {
        let eo = build(&fixtures::fig1()).unwrap();
        let p = eo.boolean_partition().unwrap();
        assert_eq!(p.part_of(Subset::full(4)), Some(s(&[3, 4])));
        assert_eq!(p.part_of(Subset::EMPTY), Some(Subset::EMPTY));
        assert_eq!(p.intervals.len(), 10);
        assert_eq!(p.intervals.iter().map(|(_, ea)| 1 << ea.len()).sum::<usize>(), 16);
        let proj = eo.flats_projection().unwrap();
        assert_eq!(proj[eo.element_of(s(&[3, 4])).unwrap()], Subset::full(4));
        assert_eq!(proj[eo.element_of(s(&[1])).unwrap()], s(&[1, 4]));
        assert_eq!(proj[eo.element_of(Subset::EMPTY).unwrap()], Subset::EMPTY);
    }

    #[test]
    fn internal() {
        let u = Matroid::uniform(2, 4).unwrap();
        let a = internal_order(&u).unwrap();
        assert_eq!(a.kind(), OrderKind::Internal);
        assert_eq!(a.antimatroid().family(), build(&u).unwrap().antimatroid().family());
        let free = internal_order(&Matroid::free(2).unwrap()).unwrap();
        assert_eq!(free.len(), 1);
        let m = fixtures::fig1();
        let i = internal_order(&m).unwrap();
        assert_eq!(i.minimum(), m.dual().lex_max_basis(Subset::EMPTY));
    }

    #[test]
    fn las_vergnas_orientation() {
        let eo = build(&fixtures::fig1()).unwrap();
        assert!(eo.las_vergnas_leq(s(&[2, 3]), s(&[3, 4])).unwrap());
        assert!(!eo.las_vergnas_leq(s(&[3, 4]), s(&[2, 3])).unwrap());
        assert!(eo.las_vergnas_leq(s(&[1]), s(&[3, 4])).is_err());
    }

    #[test]
    fn loops_shrink_height() {
        let m = Matroid::linear(2, &[vec![1, 0, 1]]).unwrap();
        let eo = build(&m).unwrap();
        assert_eq!(eo.lattice().rank(eo.lattice().top()), 2);
        let r = build(&m.with_order(GroundOrder::reversed_identity(3)).unwrap()).unwrap();
        assert_eq!(r.len(), 3);
    }
}
