//! Seeded test corpus: small matroids under random orders, and random
//! antimatroids and clutters.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::antimatroid::{Antimatroid, Clutter, SetFamily};
use crate::matroid::Matroid;
use crate::subset::{GroundOrder, Subset};

pub const DEFAULT_SEED: u64 = 0x6578_745f_6f72_6465;

pub struct NamedMatroid {
    pub name: String,
    pub matroid: Matroid,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `U(r,n)` for `r ≤ n ≤ 7`, `K₄`, `K₄` with a doubled edge and `random`
/// GF(2) matroids on at most six columns, all in the identity order.
pub fn base_matroids(seed: u64, random: usize) -> Vec<NamedMatroid> {
    let mut out = Vec::new();
    for n in 0..=7 {
        for r in 0..=n {
            out.push(NamedMatroid {
                name: format!("U({r},{n})"),
                matroid: Matroid::uniform(r, n).expect("r <= n"),
            });
        }
    }
    let k4 = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    out.push(NamedMatroid {
        name: "K4".into(),
        matroid: Matroid::graphic(&k4).expect("simple graph"),
    });
    let mut k4p = k4.to_vec();
    k4p.push((1, 2));
    out.push(NamedMatroid {
        name: "K4+parallel".into(),
        matroid: Matroid::graphic(&k4p).expect("multigraph"),
    });
    let mut g = rng(seed);
    for k in 0..random {
        let cols = g.gen_range(1..=6);
        let rows = g.gen_range(1..=4);
        let matrix: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| g.gen_range(0..2)).collect())
            .collect();
        out.push(NamedMatroid {
            name: format!("GF2#{k} {matrix:?}"),
            matroid: Matroid::linear(2, &matrix).expect("binary matrix"),
        });
    }
    out
}

pub fn random_order<R: Rng>(g: &mut R, n: usize) -> GroundOrder {
    let mut seq: Vec<usize> = (0..n).collect();
    seq.shuffle(g);
    GroundOrder::from_sequence(seq).expect("permutation")
}

/// Every base matroid under `orders` random orders of its ground set.
pub fn ordered_corpus(seed: u64, random: usize, orders: usize) -> Vec<NamedMatroid> {
    let mut g = rng(seed ^ 0x5eed);
    let mut out = Vec::new();
    for b in base_matroids(seed, random) {
        for k in 0..orders {
            let ord = random_order(&mut g, b.matroid.universe());
            out.push(NamedMatroid {
                name: format!("{} order#{k} {ord:?}", b.name),
                matroid: b.matroid.with_order(ord).expect("order fits"),
            });
        }
    }
    out
}

/// The antimatroid generated by all prefixes of a few random words on
/// `0..n`, closed under union. Elements used by no word are loops.
pub fn random_antimatroid<R: Rng>(g: &mut R, n: usize) -> Antimatroid {
    let ground = Subset::full(n);
    let words = g.gen_range(1..=4);
    let mut gens = Vec::new();
    for _ in 0..words {
        let mut w: Vec<usize> = (0..n).collect();
        w.shuffle(g);
        let len = g.gen_range(0..=n);
        let mut cur = Subset::EMPTY;
        for &x in &w[..len] {
            cur = cur.with(x);
            gens.push(cur);
        }
    }
    let mut seen = vec![false; 1 << n];
    seen[0] = true;
    let mut stack = vec![Subset::EMPTY];
    let mut all = vec![Subset::EMPTY];
    while let Some(s) = stack.pop() {
        for &t in &gens {
            let u = s.union(t);
            let k = u.compress(ground);
            if !seen[k] {
                seen[k] = true;
                stack.push(u);
                all.push(u);
            }
        }
    }
    let family = SetFamily::new(ground, all).expect("inside ground");
    Antimatroid::new(family).expect("union closure of accessible sets is an antimatroid")
}

/// A clutter of random subsets of `0..n` keeping only the minimal ones.
pub fn random_clutter<R: Rng>(g: &mut R, n: usize) -> Clutter {
    let k = g.gen_range(0..=6);
    let sets: Vec<Subset> = (0..k)
        .map(|_| Subset::full(n).iter().filter(|_| g.gen_bool(0.4)).collect())
        .collect();
    let minimal: Vec<Subset> = sets
        .iter()
        .copied()
        .filter(|s| !sets.iter().any(|t| t.is_proper_subset(*s)))
        .collect();
    Clutter::new(minimal).expect("minimal sets form a clutter")
}
