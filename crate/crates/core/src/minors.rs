//! Antimatroid and greedoid minors, extending elements, and how minors of an
//! ordered matroid relate to minors of its external order.

use crate::antimatroid::{
    feasible_from_circuits, Antimatroid, RootedSet, SetFamily,
};
use crate::error::{Error, Result};
use crate::external;
use crate::matroid::Matroid;
use crate::subset::{Element, Subset};

/// A deletion set and a contraction set, which must be disjoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorSpec {
    pub delete: Subset,
    pub contract: Subset,
}

impl MinorSpec {
    pub fn new(delete: Subset, contract: Subset) -> Result<Self> {
        if !delete.is_disjoint(contract) {
            return Err(Error::MinorOverlap { delete, contract });
        }
        Ok(MinorSpec { delete, contract })
    }
}

/// Antimatroid deletion: circuits avoiding `a`, equivalently the trace on
/// `E ∖ a`. Both are computed and compared.
pub fn anti_delete(f: &Antimatroid, a: Subset) -> Result<Antimatroid> {
    let ground = f.ground().difference(a);
    let circuits: Vec<RootedSet> = f
        .rooted_circuits()
        .iter()
        .copied()
        .filter(|c| c.set.is_disjoint(a))
        .collect();
    let by_circuits = feasible_from_circuits(&circuits, ground);
    let by_trace = f.family().trace(ground);
    if by_circuits != by_trace {
        return Err(Error::Internal(format!(
            "deletion by {a}: circuit route {by_circuits:?} differs from trace {by_trace:?}"
        )));
    }
    Antimatroid::new(by_trace)
}

/// Minimal rooted sets, comparing underlying sets by inclusion and keeping
/// every root of a minimal set.
fn minimal_rooted(mut sets: Vec<RootedSet>) -> Vec<RootedSet> {
    sets.sort_unstable();
    sets.dedup();
    let keep: Vec<RootedSet> = sets
        .iter()
        .copied()
        .filter(|r| !sets.iter().any(|o| o.set.is_proper_subset(r.set)))
        .collect();
    keep
}

/// Antimatroid contraction: minimal `(C ∖ a, x)` with `x ∉ a`, equivalently
/// the feasible sets disjoint from `a`. Both are computed and compared.
pub fn anti_contract(f: &Antimatroid, a: Subset) -> Result<Antimatroid> {
    let ground = f.ground().difference(a);
    let circuits = contracted_circuits(f, a);
    let by_circuits = feasible_from_circuits(&circuits, ground);
    let by_filter = SetFamily::new(
        ground,
        f.feasible_sets().iter().copied().filter(|s| s.is_disjoint(a)),
    )?;
    if by_circuits != by_filter {
        return Err(Error::Internal(format!(
            "contraction by {a}: circuit route {by_circuits:?} differs from filter {by_filter:?}"
        )));
    }
    Antimatroid::new(by_filter)
}

/// Rooted circuits of the contraction by `a`, from the circuit definition.
pub fn contracted_circuits(f: &Antimatroid, a: Subset) -> Vec<RootedSet> {
    minimal_rooted(
        f.rooted_circuits()
            .iter()
            .filter(|c| !a.contains(c.root))
            .map(|c| RootedSet::new(c.set.difference(a), c.root))
            .collect(),
    )
}

/// A greedoid minor, flagged when the contraction set was not feasible (in
/// which case the result lacks the empty set).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedoidMinor {
    pub family: SetFamily,
    pub contract_feasible: bool,
}

/// `{G ⊆ E ∖ (D ∪ C) : G ∪ C ∈ F}`.
pub fn greedoid_minor(f: &SetFamily, spec: MinorSpec) -> Result<GreedoidMinor> {
    let ground = f.ground().difference(spec.delete).difference(spec.contract);
    let family = SetFamily::new(
        ground,
        f.members()
            .iter()
            .filter(|m| spec.contract.is_subset(**m))
            .map(|m| m.difference(spec.contract))
            .filter(|g| g.is_subset(ground)),
    )?;
    Ok(GreedoidMinor {
        family,
        contract_feasible: f.contains(spec.contract),
    })
}

/// Elements that are the root of every rooted circuit containing them.
pub fn extending_elements(f: &Antimatroid) -> Subset {
    let mut out = f.ground();
    for c in f.rooted_circuits() {
        out = out.difference(c.stem());
    }
    out
}

/// An ordering `a₁, …, a_k` of `a` with each `aᵢ` extending after deleting
/// the earlier ones, or `None` if `a` is not an extending set.
pub fn extending_sequence(f: &Antimatroid, a: Subset) -> Result<Option<Vec<Element>>> {
    let mut cur = f.clone();
    let mut rest = a.intersection(f.ground());
    let mut seq = Vec::with_capacity(rest.len());
    while let Some(x) = extending_elements(&cur).intersection(rest).first() {
        seq.push(x);
        rest = rest.without(x);
        cur = anti_delete(&cur, Subset::singleton(x))?;
    }
    Ok(rest.is_empty().then_some(seq))
}

/// Outcome of comparing minors of `F_ext(M)` with external orders of minors
/// of `M`. Optional fields are `None` when the hypothesis does not apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub set: Subset,
    pub feasible: bool,
    pub extending: bool,
    /// `F ∖ A = F_ext(M ∖ A)`.
    pub deletion: bool,
    /// For feasible `A`: `F / A = F_ext(M / A)`.
    pub feasible_contraction: Option<bool>,
    /// When every element of `A` is a feasible singleton:
    /// `F / A = F_ext(M / A)`.
    pub atom_contraction: Option<bool>,
    /// For feasible `A`: antimatroid deletion equals greedoid contraction.
    pub feasible_deletion_is_greedoid_contraction: Option<bool>,
    /// For extending `A`: `F / A = F ∖ A = F_ext(M ∖ A)`.
    pub extending_contraction: Option<bool>,
    /// For extending `A`: antimatroid deletion equals greedoid deletion.
    pub extending_deletion_is_greedoid_deletion: Option<bool>,
    /// `F_ext(M / A) ⊆ F / A`.
    pub sandwich_lower: bool,
    /// `F / A ⊆ F_ext(M ∖ A)`.
    pub sandwich_upper: bool,
}

impl CorrespondenceReport {
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut need = |ok: bool, name: &'static str| {
            if !ok {
                out.push(name);
            }
        };
        need(self.deletion, "deletion");
        need(self.feasible_contraction != Some(false), "feasible contraction");
        need(self.atom_contraction != Some(false), "contraction by feasible singletons");
        need(
            self.feasible_deletion_is_greedoid_contraction != Some(false),
            "feasible deletion vs greedoid contraction",
        );
        need(self.extending_contraction != Some(false), "extending contraction");
        need(
            self.extending_deletion_is_greedoid_deletion != Some(false),
            "extending deletion vs greedoid deletion",
        );
        need(self.sandwich_lower, "sandwich lower inclusion");
        need(self.sandwich_upper, "sandwich upper inclusion");
        out
    }

    pub fn holds(&self) -> bool {
        self.failures().is_empty()
    }
}

fn included(small: &SetFamily, large: &SetFamily) -> bool {
    small.members().iter().all(|m| large.contains(*m))
}

pub fn correspondence_check(m: &Matroid, a: Subset) -> Result<CorrespondenceReport> {
    if !a.is_subset(m.ground()) {
        return Err(Error::OutOfGround(a));
    }
    let f = external::build(m)?.antimatroid().clone();
    let deleted = anti_delete(&f, a)?;
    let contracted = anti_contract(&f, a)?;
    let ext_del = external::build(&m.delete(a)?)?.antimatroid().family().clone();
    let ext_con = external::build(&m.contract(a)?)?.antimatroid().family().clone();
    let feasible = f.is_feasible(a);
    let atoms = a.iter().all(|x| f.is_feasible(Subset::singleton(x)));
    let extending = extending_sequence(&f, a)?.is_some();
    let spec_con = MinorSpec::new(Subset::EMPTY, a)?;
    let spec_del = MinorSpec::new(a, Subset::EMPTY)?;
    Ok(CorrespondenceReport {
        set: a,
        feasible,
        extending,
        deletion: deleted.family() == &ext_del,
        feasible_contraction: feasible.then(|| contracted.family() == &ext_con),
        atom_contraction: atoms.then(|| contracted.family() == &ext_con),
        feasible_deletion_is_greedoid_contraction: if feasible {
            Some(&greedoid_minor(f.family(), spec_con)?.family == deleted.family())
        } else {
            None
        },
        extending_contraction: extending
            .then(|| contracted.family() == deleted.family() && deleted.family() == &ext_del),
        extending_deletion_is_greedoid_deletion: if extending {
            Some(&greedoid_minor(f.family(), spec_del)?.family == deleted.family())
        } else {
            None
        },
        sandwich_lower: included(&ext_con, contracted.family()),
        sandwich_upper: included(contracted.family(), &ext_del),
    })
}
