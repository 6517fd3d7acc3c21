//! Finite lattices given by a Hasse diagram, with the join-distributivity
//! test and the T map to antimatroids.

use std::fmt;

use crate::antimatroid::{Antimatroid, SetFamily};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// A Hasse diagram: `size` nodes and `(lower, upper)` cover pairs.
///
/// `irreducible_order`, when present, lists the meet-irreducible nodes in the
/// order that assigns them element ids `0, 1, ...` under the T map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePresentation {
    size: usize,
    covers: Vec<(usize, usize)>,
    irreducible_order: Option<Vec<usize>>,
}

impl LatticePresentation {
    pub fn new(size: usize, covers: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(a, b)) = covers.iter().find(|&&(a, b)| a >= size || b >= size || a == b) {
            return Err(Error::NotALattice(format!(
                "cover ({a}, {b}) is not a pair of distinct nodes below {size}"
            )));
        }
        let mut covers = covers;
        covers.sort_unstable();
        covers.dedup();
        Ok(LatticePresentation {
            size,
            covers,
            irreducible_order: None,
        })
    }

    pub fn with_irreducible_order(mut self, order: Vec<usize>) -> Self {
        self.irreducible_order = Some(order);
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn irreducible_order(&self) -> Option<&[usize]> {
        self.irreducible_order.as_deref()
    }
}

/// Dense bitset row over lattice nodes.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Row(Vec<u64>);

impl Row {
    fn new(n: usize) -> Self {
        Row(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn or_with(&mut self, other: &Row) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
    fn and(&self, other: &Row) -> Row {
        Row(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_superset(&self, other: &Row) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

/// A finite lattice with precomputed order, meet and join tables.
#[derive(Clone)]
pub struct Lattice {
    n: usize,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    below: Vec<Row>,
    topo: Vec<usize>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    irreducible_order: Option<Vec<usize>>,
}

/// Largest lattice accepted from a presentation (tables are quadratic).
pub const MAX_PRESENTATION_SIZE: usize = 4096;

impl Lattice {
    pub fn new(p: &LatticePresentation) -> Result<Self> {
        let n = p.size;
        if n == 0 {
            return Err(Error::NotALattice("no elements".into()));
        }
        if n > MAX_PRESENTATION_SIZE {
            return Err(Error::NotALattice(format!(
                "{n} elements exceed the supported maximum of {MAX_PRESENTATION_SIZE}"
            )));
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &p.covers {
            up[a].push(b);
            down[b].push(a);
        }
        let mut indeg: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut topo: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut head = 0;
        while head < topo.len() {
            let v = topo[head];
            head += 1;
            for &w in &up[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    topo.push(w);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::NotALattice("cover relation has a cycle".into()));
        }
        let mut below = vec![Row::new(n); n];
        for &v in &topo {
            let mut row = Row::new(n);
            row.set(v);
            for &w in &down[v] {
                row.or_with(&below[w]);
            }
            below[v] = row;
        }
        // A cover must not be implied by a longer path.
        for &(a, b) in &p.covers {
            if down[b].iter().any(|&w| w != a && below[w].get(a)) {
                return Err(Error::NotALattice(format!(
                    "({a}, {b}) is not a cover: a longer path joins them"
                )));
            }
        }
        let mut above = vec![Row::new(n); n];
        for &v in topo.iter().rev() {
            let mut row = Row::new(n);
            row.set(v);
            for &w in &up[v] {
                row.or_with(&above[w]);
            }
            above[v] = row;
        }
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let lower = below[x].and(&below[y]);
                let m = (0..n)
                    .filter(|&z| lower.get(z))
                    .find(|&z| below[z].is_superset(&lower))
                    .ok_or_else(|| Error::NotALattice(format!("nodes {x} and {y} have no meet")))?;
                let upper = above[x].and(&above[y]);
                let j = (0..n)
                    .filter(|&z| upper.get(z))
                    .find(|&z| above[z].is_superset(&upper))
                    .ok_or_else(|| Error::NotALattice(format!("nodes {x} and {y} have no join")))?;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }
        let bottom = topo[0];
        let top = *topo.last().unwrap();
        if below[top].count() != n || above[bottom].count() != n {
            return Err(Error::NotALattice("no unique bottom and top".into()));
        }
        if let Some(order) = &p.irreducible_order {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            let mut actual: Vec<usize> = (0..n).filter(|&v| up[v].len() == 1).collect();
            actual.sort_unstable();
            if sorted != actual {
                return Err(Error::NotALattice(format!(
                    "irreducible order {order:?} is not a listing of the meet-irreducibles {actual:?}"
                )));
            }
        }
        Ok(Lattice {
            n,
            up,
            down,
            below,
            topo,
            meet,
            join,
            bottom,
            top,
            irreducible_order: p.irreducible_order.clone(),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.below[y].get(x)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(&y)
    }

    /// Nodes listed so that every node follows everything below it.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn edge_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// Meet-irreducible nodes, in the order that numbers them as ground
    /// elements.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        match &self.irreducible_order {
            Some(o) => o.clone(),
            None => (0..self.n).filter(|&v| self.up[v].len() == 1).collect(),
        }
    }

    fn meet_all(&self, items: impl Iterator<Item = usize>) -> usize {
        items.fold(self.top, |acc, v| self.meet(acc, v))
    }

    fn join_all(&self, items: impl Iterator<Item = usize>) -> usize {
        items.fold(self.bottom, |acc, v| self.join(acc, v))
    }

    /// `T(x)`: ids of the meet-irreducibles not above `x`.
    pub fn t_set(&self, x: usize) -> Subset {
        self.meet_irreducibles()
            .iter()
            .enumerate()
            .filter(|&(_, &m)| !self.leq(x, m))
            .map(|(i, _)| i)
            .collect()
    }

    /// Longest and shortest maximal chain lengths.
    fn chain_lengths(&self) -> (usize, usize) {
        let mut longest = vec![0usize; self.n];
        let mut shortest = vec![usize::MAX; self.n];
        shortest[self.bottom] = 0;
        for &v in &self.topo {
            for &w in &self.up[v] {
                longest[w] = longest[w].max(longest[v] + 1);
                shortest[w] = shortest[w].min(shortest[v] + 1);
            }
        }
        (longest[self.top], shortest[self.top])
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice({} elements, {} covers)", self.n, self.edge_count())
    }
}

type Condition = std::result::Result<(), String>;

/// The four equivalent join-distributivity conditions, each with a witness
/// on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JdVerdict {
    pub semimodular_msd: Condition,
    pub unique_decompositions: Condition,
    pub boolean_intervals: Condition,
    pub chain_length: Condition,
}

impl JdVerdict {
    pub fn is_join_distributive(&self) -> bool {
        self.semimodular_msd.is_ok()
    }

    pub fn witness(&self) -> Option<&str> {
        [
            &self.semimodular_msd,
            &self.unique_decompositions,
            &self.boolean_intervals,
            &self.chain_length,
        ]
        .into_iter()
        .find_map(|c| c.as_ref().err().map(String::as_str))
    }
}

fn check_semimodular_msd(l: &Lattice) -> Condition {
    for x in 0..l.n {
        for y in 0..l.n {
            if l.covers(l.meet(x, y), x) && !l.covers(y, l.join(x, y)) {
                return Err(format!(
                    "not semimodular: {x} covers {x}∧{y} but {y} is not covered by {x}∨{y}"
                ));
            }
        }
    }
    // Meet semidistributivity: for fixed z, every class {x : x∧z = m} has a
    // join whose meet with z is still m.
    for z in 0..l.n {
        let mut class_join = vec![None::<usize>; l.n];
        for x in 0..l.n {
            let m = l.meet(x, z);
            class_join[m] = Some(match class_join[m] {
                None => x,
                Some(j) => l.join(j, x),
            });
        }
        for (m, j) in class_join.iter().enumerate() {
            if let Some(j) = *j {
                if l.meet(j, z) != m {
                    return Err(format!(
                        "not meet-semidistributive: class of meets {m} with {z} joins to {j}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_unique_decompositions(l: &Lattice) -> Condition {
    let irr = l.meet_irreducibles();
    for x in 0..l.n {
        let q: Vec<usize> = irr.iter().copied().filter(|&m| l.leq(x, m)).collect();
        let essential: Vec<usize> = q
            .iter()
            .copied()
            .filter(|&m| l.meet_all(q.iter().copied().filter(|&o| o != m)) != x)
            .collect();
        if l.meet_all(essential.iter().copied()) != x {
            return Err(format!(
                "node {x} has more than one irredundant meet decomposition"
            ));
        }
    }
    Ok(())
}

fn check_boolean_intervals(l: &Lattice) -> Condition {
    for x in 0..l.n {
        let atoms = &l.up[x];
        let k = atoms.len();
        if k > 20 {
            return Err(format!("node {x} has too many upper covers to test"));
        }
        let j = l.join_all(atoms.iter().copied().chain([x]));
        let size = (0..l.n).filter(|&y| l.leq(x, y) && l.leq(y, j)).count();
        if size != 1 << k {
            return Err(format!(
                "interval from {x} to {j} has {size} elements, not {}",
                1usize << k
            ));
        }
        let mut seen = std::collections::HashSet::new();
        for mask in 0u32..(1 << k) {
            let v = l.join_all((0..k).filter(|i| mask >> i & 1 == 1).map(|i| atoms[i]).chain([x]));
            if !seen.insert(v) {
                return Err(format!("interval from {x} to {j} is not boolean"));
            }
        }
    }
    Ok(())
}

fn check_chain_length(l: &Lattice) -> Condition {
    let irr = l.meet_irreducibles().len();
    let (longest, shortest) = l.chain_lengths();
    if longest != irr || shortest != irr {
        return Err(format!(
            "maximal chains have lengths {shortest}..={longest}, but there are {irr} meet-irreducibles"
        ));
    }
    Ok(())
}

/// Checks all four conditions; disagreement between them is an internal
/// error.
pub fn verify_join_distributive(l: &Lattice) -> Result<JdVerdict> {
    let v = JdVerdict {
        semimodular_msd: check_semimodular_msd(l),
        unique_decompositions: check_unique_decompositions(l),
        boolean_intervals: check_boolean_intervals(l),
        chain_length: check_chain_length(l),
    };
    let a = v.semimodular_msd.is_ok();
    if a != v.unique_decompositions.is_ok()
        || a != v.boolean_intervals.is_ok()
        || a != v.chain_length.is_ok()
    {
        return Err(Error::Internal(format!(
            "join-distributivity conditions disagree: {v:?}"
        )));
    }
    Ok(v)
}

/// The antimatroid `{T(x)}` on the meet-irreducibles.
pub fn t_map(l: &Lattice) -> Result<Antimatroid> {
    let v = verify_join_distributive(l)?;
    if let Some(w) = v.witness() {
        return Err(Error::NotJoinDistributive(w.to_string()));
    }
    let ground = Subset::full(l.meet_irreducibles().len());
    let family = SetFamily::new(ground, (0..l.n).map(|x| l.t_set(x)))?;
    if family.len() != l.n {
        return Err(Error::Internal("T is not injective".into()));
    }
    Antimatroid::new(family)
}
