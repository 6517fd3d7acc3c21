//! Ordered matroids: representations, independence/rank/closure oracles,
//! basic circuits and bonds, duals and minors.
//!
//! Element ids are fixed for the lifetime of a matroid and all of its minors:
//! a minor keeps the id universe `0..n` and only shrinks its ground set. This
//! lets families computed on a minor be compared directly with families on
//! the original matroid.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::gf::PrimeField;
use crate::subset::{Element, GroundOrder, Subset, MAX_ELEMENTS};

/// Universes up to this size get a dense independence table.
const TABLE_LIMIT: usize = 20;

#[derive(Clone, Debug)]
pub enum Representation {
    /// Columns of a matrix over GF(p); column `j` is element `j`.
    Linear { field: PrimeField, rows: Vec<Vec<u8>> },
    /// Edges of a multigraph; edge `j` is element `j`.
    Graphic { edges: Vec<(usize, usize)> },
    Uniform { rank: usize },
    Bases(Vec<Subset>),
    Circuits(Vec<Subset>),
    /// Dual of the wrapped matroid (same ground set).
    Dual(Matroid),
    /// `base / contracted ∖ deleted`; `contract_basis` is a maximal
    /// independent subset of the contracted set.
    Minor { base: Matroid, contract_basis: Subset },
}

/// What [`Matroid::enumerate`] lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    Circuits,
    Bases,
    Independents,
    Flats,
}

struct Inner {
    n: usize,
    ground: Subset,
    rep: Representation,
    table: OnceLock<Option<Vec<u64>>>,
    rank: OnceLock<usize>,
    circuits: OnceLock<Vec<Subset>>,
    bases: OnceLock<Vec<Subset>>,
    independents: OnceLock<Vec<Subset>>,
    flats: OnceLock<Vec<Subset>>,
}

/// An ordered matroid. Cheap to clone; reordering shares all caches.
#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
    order: GroundOrder,
}

impl Matroid {
    fn from_parts(n: usize, ground: Subset, rep: Representation) -> Self {
        Matroid {
            inner: Arc::new(Inner {
                n,
                ground,
                rep,
                table: OnceLock::new(),
                rank: OnceLock::new(),
                circuits: OnceLock::new(),
                bases: OnceLock::new(),
                independents: OnceLock::new(),
                flats: OnceLock::new(),
            }),
            order: GroundOrder::identity(n),
        }
    }

    fn check_size(n: usize) -> Result<()> {
        if n > MAX_ELEMENTS {
            Err(Error::TooManyElements(n))
        } else {
            Ok(())
        }
    }

    /// Column matroid of `matrix` over GF(`p`). Entries are reduced mod `p`.
    pub fn linear(p: u8, matrix: &[Vec<i64>]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let n = matrix.first().map_or(0, Vec::len);
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Undefined("matrix rows have unequal length".into()));
        }
        Self::check_size(n)?;
        let rows = matrix
            .iter()
            .map(|r| r.iter().map(|&v| field.reduce(v)).collect())
            .collect();
        Ok(Self::from_parts(
            n,
            Subset::full(n),
            Representation::Linear { field, rows },
        ))
    }

    /// Cycle matroid of a multigraph given by its edge list.
    pub fn graphic(edges: &[(usize, usize)]) -> Result<Self> {
        let n = edges.len();
        Self::check_size(n)?;
        Ok(Self::from_parts(
            n,
            Subset::full(n),
            Representation::Graphic {
                edges: edges.to_vec(),
            },
        ))
    }

    pub fn uniform(rank: usize, n: usize) -> Result<Self> {
        Self::check_size(n)?;
        if rank > n {
            return Err(Error::Undefined(format!("U({rank},{n}) has rank above size")));
        }
        Ok(Self::from_parts(
            n,
            Subset::full(n),
            Representation::Uniform { rank },
        ))
    }

    /// The free matroid on `n` elements.
    pub fn free(n: usize) -> Result<Self> {
        Self::uniform(n, n)
    }

    /// Matroid given by its bases, validated against the basis exchange axiom.
    pub fn from_bases(n: usize, bases: &[Subset]) -> Result<Self> {
        Self::check_size(n)?;
        let ground = Subset::full(n);
        let mut bases = bases.to_vec();
        bases.sort_unstable();
        bases.dedup();
        validate_bases(ground, &bases)?;
        Ok(Self::from_parts(n, ground, Representation::Bases(bases)))
    }

    /// Matroid given by its circuits, validated as a clutter satisfying
    /// circuit elimination.
    pub fn from_circuits(n: usize, circuits: &[Subset]) -> Result<Self> {
        Self::check_size(n)?;
        let ground = Subset::full(n);
        let mut circuits = circuits.to_vec();
        circuits.sort_unstable();
        circuits.dedup();
        validate_circuits(ground, &circuits)?;
        Ok(Self::from_parts(n, ground, Representation::Circuits(circuits)))
    }

    /// The same matroid with a different total order on its elements.
    pub fn with_order(&self, order: GroundOrder) -> Result<Self> {
        if order.len() != self.inner.n {
            return Err(Error::InvalidOrder(format!(
                "order has {} elements, matroid has {}",
                order.len(),
                self.inner.n
            )));
        }
        Ok(Matroid {
            inner: Arc::clone(&self.inner),
            order,
        })
    }

    pub fn order(&self) -> &GroundOrder {
        &self.order
    }

    /// Size of the element id universe (`0..n`).
    pub fn universe(&self) -> usize {
        self.inner.n
    }

    pub fn ground(&self) -> Subset {
        self.inner.ground
    }

    pub fn representation(&self) -> &Representation {
        &self.inner.rep
    }

    fn raw_independent(&self, a: Subset) -> bool {
        match &self.inner.rep {
            Representation::Linear { field, rows } => field.column_rank(rows, a.iter()) == a.len(),
            Representation::Graphic { edges } => is_forest(edges, a),
            Representation::Uniform { rank } => a.len() <= *rank,
            Representation::Bases(bases) => bases.iter().any(|b| a.is_subset(*b)),
            Representation::Circuits(circuits) => !circuits.iter().any(|c| c.is_subset(a)),
            Representation::Dual(base) => {
                base.rank(self.ground().difference(a)) == base.full_rank()
            }
            Representation::Minor {
                base,
                contract_basis,
            } => base.is_independent(a.union(*contract_basis)),
        }
    }

    fn table(&self) -> Option<&Vec<u64>> {
        self.inner
            .table
            .get_or_init(|| {
                let n = self.inner.n;
                if n > TABLE_LIMIT {
                    return None;
                }
                let mut bits = vec![0u64; (1usize << n).div_ceil(64)];
                for a in self.ground().subsets() {
                    // Hereditary: only test sets whose maximal proper subsets passed.
                    let all_below = a.iter().all(|x| {
                        let b = a.without(x).bits() as usize;
                        bits[b / 64] >> (b % 64) & 1 == 1
                    });
                    if all_below && self.raw_independent(a) {
                        let i = a.bits() as usize;
                        bits[i / 64] |= 1 << (i % 64);
                    }
                }
                Some(bits)
            })
            .as_ref()
    }

    /// Independence oracle. Sets leaving the ground set are never independent.
    pub fn is_independent(&self, a: Subset) -> bool {
        if !a.is_subset(self.ground()) {
            return false;
        }
        match self.table() {
            Some(bits) => {
                let i = a.bits() as usize;
                bits[i / 64] >> (i % 64) & 1 == 1
            }
            None => self.raw_independent(a),
        }
    }

    /// Greedy maximal independent subset of `a` (elements outside the ground
    /// set are ignored), taken in increasing id order.
    pub fn maximal_independent_subset(&self, a: Subset) -> Subset {
        let mut basis = Subset::EMPTY;
        for x in a.intersection(self.ground()).iter() {
            if self.is_independent(basis.with(x)) {
                basis = basis.with(x);
            }
        }
        basis
    }

    pub fn rank(&self, a: Subset) -> usize {
        self.maximal_independent_subset(a).len()
    }

    pub fn full_rank(&self) -> usize {
        *self.inner.rank.get_or_init(|| self.rank(self.ground()))
    }

    pub fn closure(&self, a: Subset) -> Subset {
        let r = self.rank(a);
        let mut out = a.intersection(self.ground());
        for x in self.ground().difference(a).iter() {
            if self.rank(a.with(x)) == r {
                out = out.with(x);
            }
        }
        out
    }

    pub fn is_loop(&self, x: Element) -> bool {
        self.ground().contains(x) && !self.is_independent(Subset::singleton(x))
    }

    pub fn loops(&self) -> Subset {
        self.ground().iter().filter(|&x| self.is_loop(x)).collect()
    }

    /// Minimal dependent sets, in canonical order.
    pub fn circuits(&self) -> &[Subset] {
        self.inner.circuits.get_or_init(|| {
            let mut found: Vec<Subset> = Vec::new();
            for a in self.ground().subsets_by_size() {
                if found.iter().any(|c| c.is_subset(a)) {
                    continue;
                }
                if !self.is_independent(a) {
                    found.push(a);
                }
            }
            found
        })
    }

    pub fn independents(&self) -> &[Subset] {
        self.inner.independents.get_or_init(|| {
            self.ground()
                .subsets_by_size()
                .into_iter()
                .filter(|&a| self.is_independent(a))
                .collect()
        })
    }

    pub fn bases(&self) -> &[Subset] {
        self.inner.bases.get_or_init(|| {
            let r = self.full_rank();
            self.independents()
                .iter()
                .copied()
                .filter(|b| b.len() == r)
                .collect()
        })
    }

    pub fn flats(&self) -> &[Subset] {
        self.inner.flats.get_or_init(|| {
            let mut flats: Vec<Subset> = self
                .ground()
                .subsets()
                .map(|a| self.closure(a))
                .collect();
            flats.sort_unstable();
            flats.dedup();
            flats
        })
    }

    pub fn enumerate(&self, kind: SetKind) -> Vec<Subset> {
        match kind {
            SetKind::Circuits => self.circuits().to_vec(),
            SetKind::Bases => self.bases().to_vec(),
            SetKind::Independents => self.independents().to_vec(),
            SetKind::Flats => self.flats().to_vec(),
        }
    }

    fn require_independent(&self, i: Subset) -> Result<()> {
        if self.is_independent(i) {
            Ok(())
        } else {
            Err(Error::NotIndependent(i))
        }
    }

    /// The unique circuit `C` with `x ∈ C ⊆ I ∪ x`, for `x ∈ cl(I) ∖ I`.
    pub fn basic_circuit(&self, i: Subset, x: Element) -> Result<Subset> {
        self.require_independent(i)?;
        if i.contains(x) {
            return Err(Error::Undefined(format!("element {} lies in {i}", x + 1)));
        }
        let ix = i.with(x);
        if !self.ground().contains(x) || self.is_independent(ix) {
            return Err(Error::Undefined(format!(
                "element {} is not spanned by {i}",
                x + 1
            )));
        }
        Ok(i.iter()
            .filter(|&y| self.is_independent(ix.without(y)))
            .fold(Subset::singleton(x), Subset::with))
    }

    /// The basic bond of `y ∈ I`, computed in the restriction to `cl(I)`.
    pub fn basic_bond(&self, i: Subset, y: Element) -> Result<Subset> {
        self.require_independent(i)?;
        if !i.contains(y) {
            return Err(Error::Undefined(format!("element {} is not in {i}", y + 1)));
        }
        let span = self.closure(i);
        let mut bond = Subset::singleton(y);
        for z in span.difference(i).iter() {
            if self.basic_circuit(i, z)?.contains(y) {
                bond = bond.with(z);
            }
        }
        Ok(bond)
    }

    /// The dual matroid, carrying the same order.
    pub fn dual(&self) -> Matroid {
        if let Representation::Dual(base) = &self.inner.rep {
            return base
                .with_order(self.order.clone())
                .expect("same universe");
        }
        let d = Self::from_parts(
            self.inner.n,
            self.ground(),
            Representation::Dual(self.clone()),
        );
        d.with_order(self.order.clone()).expect("same universe")
    }

    /// `M / contract ∖ delete`, keeping element ids and the order.
    pub fn minor(&self, delete: Subset, contract: Subset) -> Result<Matroid> {
        if !delete.is_disjoint(contract) {
            return Err(Error::MinorOverlap { delete, contract });
        }
        for s in [delete, contract] {
            if !s.is_subset(self.ground()) {
                return Err(Error::OutOfGround(s));
            }
        }
        if delete.is_empty() && contract.is_empty() {
            return Ok(self.clone());
        }
        let contract_basis = self.maximal_independent_subset(contract);
        let ground = self.ground().difference(delete.union(contract));
        let m = Self::from_parts(
            self.inner.n,
            ground,
            Representation::Minor {
                base: self.clone(),
                contract_basis,
            },
        );
        m.with_order(self.order.clone())
    }

    pub fn delete(&self, a: Subset) -> Result<Matroid> {
        self.minor(a, Subset::EMPTY)
    }

    pub fn contract(&self, a: Subset) -> Result<Matroid> {
        self.minor(Subset::EMPTY, a)
    }

    pub fn restrict(&self, f: Subset) -> Result<Matroid> {
        if !f.is_subset(self.ground()) {
            return Err(Error::OutOfGround(f));
        }
        self.delete(self.ground().difference(f))
    }

    /// The basis of `M ∖ forbidden` that is lexicographically largest as an
    /// ascending word: greedy insertion in descending order.
    pub fn lex_max_basis(&self, forbidden: Subset) -> Subset {
        let mut basis = Subset::EMPTY;
        for &x in self.order.sequence().iter().rev() {
            if self.ground().contains(x)
                && !forbidden.contains(x)
                && self.is_independent(basis.with(x))
            {
                basis = basis.with(x);
            }
        }
        basis
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.inner.rep {
            Representation::Linear { field, .. } => format!("linear GF({})", field.order()),
            Representation::Graphic { .. } => "graphic".into(),
            Representation::Uniform { rank } => format!("uniform rank {rank}"),
            Representation::Bases(_) => "bases".into(),
            Representation::Circuits(_) => "circuits".into(),
            Representation::Dual(_) => "dual".into(),
            Representation::Minor { .. } => "minor".into(),
        };
        write!(
            f,
            "Matroid({kind}, ground {:?}, order {:?})",
            self.ground(),
            self.order
        )
    }
}

fn is_forest(edges: &[(usize, usize)], a: Subset) -> bool {
    let mut parent: Vec<usize> = Vec::new();
    let mut index = std::collections::HashMap::new();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut slot = |v: usize, parent: &mut Vec<usize>| -> usize {
        *index.entry(v).or_insert_with(|| {
            parent.push(parent.len());
            parent.len() - 1
        })
    };
    for e in a.iter() {
        let (u, v) = edges[e];
        let (u, v) = (slot(u, &mut parent), slot(v, &mut parent));
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

fn validate_bases(ground: Subset, bases: &[Subset]) -> Result<()> {
    let Some(first) = bases.first() else {
        return Err(Error::MatroidAxiom("a matroid has at least one basis".into()));
    };
    for &b in bases {
        if !b.is_subset(ground) {
            return Err(Error::OutOfGround(b));
        }
        if b.len() != first.len() {
            return Err(Error::MatroidAxiom(format!(
                "bases {first} and {b} differ in size"
            )));
        }
    }
    let set: std::collections::HashSet<Subset> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for x in b1.difference(b2).iter() {
                let ok = b2
                    .difference(b1)
                    .iter()
                    .any(|y| set.contains(&b1.without(x).with(y)));
                if !ok {
                    return Err(Error::MatroidAxiom(format!(
                        "basis exchange fails for {b1}, {b2} at element {}",
                        x + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

fn validate_circuits(ground: Subset, circuits: &[Subset]) -> Result<()> {
    for &c in circuits {
        if !c.is_subset(ground) {
            return Err(Error::OutOfGround(c));
        }
        if c.is_empty() {
            return Err(Error::MatroidAxiom("the empty set is not a circuit".into()));
        }
    }
    for &c1 in circuits {
        for &c2 in circuits {
            if c1 == c2 {
                continue;
            }
            if c1.is_subset(c2) {
                return Err(Error::MatroidAxiom(format!(
                    "circuits {c1} and {c2} are nested"
                )));
            }
            for e in c1.intersection(c2).iter() {
                let target = c1.union(c2).without(e);
                if !circuits.iter().any(|c3| c3.is_subset(target)) {
                    return Err(Error::MatroidAxiom(format!(
                        "circuit elimination fails for {c1}, {c2} at element {}",
                        e + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn s(xs: &[usize]) -> Subset {
        xs.iter().map(|x| x - 1).collect()
    }

    fn sets(v: &[&[usize]]) -> Vec<Subset> {
        let mut out: Vec<Subset> = v.iter().map(|x| s(x)).collect();
        out.sort();
        out
    }

    #[test]
    fn fig1_independence() {
        let m = fixtures::fig1();
        assert!(!m.is_independent(s(&[1, 4])));
        assert!(m.is_independent(Subset::EMPTY));
        assert!(m.is_independent(s(&[3, 4])));
    }

    #[test]
    fn fig1_rank_and_closure() {
        let m = fixtures::fig1();
        assert_eq!(m.rank(m.ground()), 2);
        assert_eq!(m.rank(Subset::EMPTY), 0);
        assert_eq!(m.rank(s(&[1, 4])), 1);
        assert_eq!(m.closure(s(&[1])), s(&[1, 4]));
        assert_eq!(m.closure(m.ground()), m.ground());
        assert_eq!(m.closure(s(&[3, 4])), s(&[1, 2, 3, 4]));
    }

    #[test]
    fn fig1_enumeration() {
        let m = fixtures::fig1();
        assert_eq!(m.circuits(), sets(&[&[1, 4], &[1, 2, 3], &[2, 3, 4]]));
        assert_eq!(
            m.bases(),
            sets(&[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]])
        );
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.independents().len(), 11);
        assert!(u.independents().iter().all(|i| i.len() <= 2));
    }

    #[test]
    fn fig1_basic_circuits_and_bonds() {
        let m = fixtures::fig1();
        assert_eq!(m.basic_circuit(s(&[3, 4]), 1).unwrap(), s(&[2, 3, 4]));
        assert_eq!(m.basic_circuit(s(&[3, 4]), 0).unwrap(), s(&[1, 4]));
        assert_eq!(m.basic_circuit(s(&[2, 4]), 2).unwrap(), s(&[2, 3, 4]));
        assert_eq!(m.basic_bond(s(&[3, 4]), 2).unwrap(), s(&[2, 3]));
        assert_eq!(m.basic_bond(s(&[3, 4]), 3).unwrap(), s(&[1, 2, 4]));
        assert_eq!(m.basic_bond(s(&[2, 4]), 3).unwrap(), s(&[1, 3, 4]));
    }

    #[test]
    fn basic_circuit_undefined_inputs() {
        let m = fixtures::fig1();
        // 2 is not spanned by {1}
        assert!(matches!(m.basic_circuit(s(&[1]), 1), Err(Error::Undefined(_))));
        assert!(matches!(m.basic_circuit(s(&[3, 4]), 3), Err(Error::Undefined(_))));
        assert!(matches!(m.basic_bond(s(&[3, 4]), 0), Err(Error::Undefined(_))));
        assert!(matches!(m.basic_circuit(s(&[1, 4]), 1), Err(Error::NotIndependent(_))));
    }

    #[test]
    fn duals() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.dual().bases(), u.bases());
        let m = fixtures::fig1();
        let d = m.dual();
        let mut comp: Vec<Subset> = m.bases().iter().map(|b| m.ground().difference(*b)).collect();
        comp.sort();
        assert_eq!(d.bases(), comp);
        assert_eq!(d.rank(d.ground()), 2);
    }

    #[test]
    fn fig1_minors() {
        let m = fixtures::fig1();
        let del = m.delete(s(&[4])).unwrap();
        assert_eq!(del.circuits(), sets(&[&[1, 2, 3]]));
        let con = m.contract(s(&[1])).unwrap();
        assert_eq!(con.circuits(), sets(&[&[4], &[2, 3]]));
        let same = m.minor(Subset::EMPTY, Subset::EMPTY).unwrap();
        assert_eq!(same.independents(), m.independents());
        assert!(matches!(
            m.minor(s(&[1]), s(&[1, 2])),
            Err(Error::MinorOverlap { .. })
        ));
    }

    #[test]
    fn fig1_lex_max_basis() {
        let m = fixtures::fig1();
        assert_eq!(m.lex_max_basis(Subset::EMPTY), s(&[3, 4]));
        assert_eq!(m.lex_max_basis(s(&[4])), s(&[2, 3]));
        assert_eq!(m.lex_max_basis(s(&[3, 4])), s(&[1, 2]));
    }

    #[test]
    fn explicit_validation() {
        // {12, 34} violates exchange.
        assert!(Matroid::from_bases(4, &[s(&[1, 2]), s(&[3, 4])]).is_err());
        assert!(Matroid::from_bases(3, &[s(&[1, 2]), s(&[3])]).is_err());
        let ok = Matroid::from_bases(4, &sets(&[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]])).unwrap();
        assert_eq!(ok.circuits(), fixtures::fig1().circuits());
        // nested circuits
        assert!(Matroid::from_circuits(3, &[s(&[1]), s(&[1, 2])]).is_err());
        // elimination fails: 12 and 23 need a circuit inside 13
        assert!(Matroid::from_circuits(3, &[s(&[1, 2]), s(&[2, 3])]).is_err());
        let c = Matroid::from_circuits(4, &sets(&[&[1, 4], &[1, 2, 3], &[2, 3, 4]])).unwrap();
        assert_eq!(c.bases(), fixtures::fig1().bases());
    }

    #[test]
    fn graphic_triangle_with_parallel_edge() {
        let m = Matroid::graphic(&[(0, 1), (1, 2), (0, 2), (0, 1), (2, 2)]).unwrap();
        assert_eq!(m.full_rank(), 2);
        assert_eq!(m.loops(), s(&[5]));
        assert!(m.circuits().contains(&s(&[1, 4])));
        assert!(m.circuits().contains(&s(&[1, 2, 3])));
    }
}
