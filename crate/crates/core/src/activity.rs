//! Generalized matroid activity and the Tutte polynomial.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{Element, Subset};

/// Active and passive parts of an arbitrary subset `A` of an ordered matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActivityReport {
    pub subject: Subset,
    pub act: Subset,
    pub ea: Subset,
    pub ep: Subset,
    pub ia: Subset,
    pub ip: Subset,
}

/// Elements `x` for which some circuit `C` has `x ∈ C ⊆ A ∪ x` and `x = min C`.
///
/// Scans every circuit, so it is valid for dependent `A` as well.
pub fn active_elements(m: &Matroid, a: Subset) -> Subset {
    let order = m.order();
    let mut act = Subset::EMPTY;
    for &c in m.circuits() {
        let x = order.min_of(c).expect("circuits are nonempty");
        if c.without(x).is_subset(a) {
            act = act.with(x);
        }
    }
    act
}

/// External activity of an independent set through basic circuits inside its
/// span.
pub fn external_activity_independent(m: &Matroid, i: Subset) -> Result<Subset> {
    if !m.is_independent(i) {
        return Err(Error::NotIndependent(i));
    }
    let order = m.order();
    let span = m.closure(i);
    let mut ea = Subset::EMPTY;
    for x in span.difference(i).iter() {
        let c = m.basic_circuit(i, x)?;
        if order.min_of(c) == Some(x) {
            ea = ea.with(x);
        }
    }
    Ok(ea)
}

/// Externally passive elements of an independent set.
pub fn external_passive(m: &Matroid, i: Subset) -> Result<Subset> {
    let ea = external_activity_independent(m, i)?;
    Ok(m.ground().difference(i).difference(ea))
}

pub fn activity_report(m: &Matroid, a: Subset) -> ActivityReport {
    let ground = m.ground();
    let a = a.intersection(ground);
    let act = if m.is_independent(a) {
        external_activity_independent(m, a).expect("independent")
    } else {
        active_elements(m, a)
    };
    let ea = act.difference(a);
    let ep = ground.difference(a).difference(ea);
    let ia = active_elements(&m.dual(), ground.difference(a)).intersection(a);
    let ip = a.difference(ia);
    ActivityReport {
        subject: a,
        act,
        ea,
        ep,
        ia,
        ip,
    }
}

/// `ch(I, a) = EA(I) ∩ bo(I, a)`.
pub fn active_chain(m: &Matroid, i: Subset, a: Element) -> Result<Subset> {
    let bond = m.basic_bond(i, a)?;
    Ok(external_activity_independent(m, i)?.intersection(bond))
}

/// Bivariate polynomial with nonnegative integer coefficients, keyed by
/// `(x-degree, y-degree)`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TuttePolynomial {
    coeffs: BTreeMap<(usize, usize), u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TutteMethod {
    Activity,
    CorankNullity,
}

impl TuttePolynomial {
    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), u64)>>(terms: I) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k, c) in terms {
            if c != 0 {
                *coeffs.entry(k).or_insert(0) += c;
            }
        }
        TuttePolynomial { coeffs }
    }

    pub fn coefficient(&self, dx: usize, dy: usize) -> u64 {
        self.coeffs.get(&(dx, dy)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.coeffs.iter().map(|(k, v)| (*k, *v))
    }

    pub fn evaluate(&self, x: i64, y: i64) -> i64 {
        self.coeffs
            .iter()
            .map(|(&(dx, dy), &c)| c as i64 * x.pow(dx as u32) * y.pow(dy as u32))
            .sum()
    }
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<(usize, usize)> = self.coeffs.keys().copied().collect();
        keys.sort_by_key(|&(x, y)| std::cmp::Reverse((x + y, x)));
        let mut parts = Vec::new();
        for (dx, dy) in keys {
            let c = self.coeffs[&(dx, dy)];
            let mut term = String::new();
            let mono = |v: &str, d: usize| match d {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{d}"),
            };
            let m = format!("{}{}", mono("x", dx), mono("y", dy));
            if c != 1 || m.is_empty() {
                term.push_str(&c.to_string());
            }
            term.push_str(&m);
            parts.push(term);
        }
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn tutte(m: &Matroid, method: TutteMethod) -> TuttePolynomial {
    match method {
        TutteMethod::Activity => tutte_by_activity(m),
        TutteMethod::CorankNullity => tutte_by_corank_nullity(m),
    }
}

fn tutte_by_activity(m: &Matroid) -> TuttePolynomial {
    TuttePolynomial::from_terms(m.bases().iter().map(|&b| {
        let r = activity_report(m, b);
        ((r.ia.len(), r.ea.len()), 1)
    }))
}

fn binomial_row(k: usize) -> Vec<i64> {
    let mut row = vec![1i64];
    for _ in 0..k {
        let mut next = vec![1i64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row
}

/// Sum of `(x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))` over all subsets, expanded by
/// binomial convolution.
fn tutte_by_corank_nullity(m: &Matroid) -> TuttePolynomial {
    let full = m.full_rank();
    let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for a in m.ground().subsets() {
        let r = m.rank(a);
        let (cx, cy) = (full - r, a.len() - r);
        let (bx, by) = (binomial_row(cx), binomial_row(cy));
        for (i, &u) in bx.iter().enumerate() {
            let su = if (cx - i) % 2 == 0 { u } else { -u };
            for (j, &v) in by.iter().enumerate() {
                let sv = if (cy - j) % 2 == 0 { v } else { -v };
                *acc.entry((i, j)).or_insert(0) += su * sv;
            }
        }
    }
    TuttePolynomial::from_terms(acc.into_iter().map(|(k, c)| {
        assert!(c >= 0, "negative Tutte coefficient {c} at {k:?}");
        (k, c as u64)
    }))
}
