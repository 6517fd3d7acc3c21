//! Named example objects used by tests, the CLI and the documentation.

use crate::antimatroid::SetFamily;
use crate::lattice::LatticePresentation;
use crate::matroid::Matroid;
use crate::subset::Subset;

fn parse_word(word: &str) -> Subset {
    word.chars()
        .map(|c| match c {
            '1'..='9' => c as usize - '1' as usize,
            'a'..='z' => c as usize - 'a' as usize,
            _ => panic!("bad fixture element {c:?}"),
        })
        .collect()
}

fn family(n: usize, words: &[&str]) -> SetFamily {
    SetFamily::new(Subset::full(n), words.iter().map(|w| parse_word(w)))
        .expect("fixture family lies in its ground set")
}

/// Column matroid of `[[1,1,0,1],[0,1,1,0]]` over GF(2), ordered 1<2<3<4.
pub fn fig1() -> Matroid {
    Matroid::linear(2, &[vec![1, 1, 0, 1], vec![0, 1, 1, 0]]).expect("valid matrix")
}

/// Externally passive sets of [`fig1`].
pub fn fig1_passive_family() -> SetFamily {
    family(
        4,
        &["", "4", "3", "24", "34", "23", "124", "234", "134", "1234"],
    )
}

/// The matroidal antimatroid on `{a,b,c,d}` whose independent sets are
/// `U(2,4)` but which is not an external order.
pub fn u24ce() -> SetFamily {
    family(
        4,
        &[
            "", "d", "c", "bd", "cd", "ac", "abd", "bcd", "acd", "abc", "abcd",
        ],
    )
}

/// A join-distributive but non-matroidal antimatroid on five elements.
pub fn jdb() -> SetFamily {
    family(
        5,
        &[
            "", "2", "1", "23", "12", "13", "235", "123", "134", "1235", "1234", "12345",
        ],
    )
}

/// The abstract Hasse diagram whose T map yields [`jdb`].
///
/// Nodes 0..=4 are the meet-irreducibles labelled 1..=5 in that order; the
/// remaining nodes are ordered bottom to top.
pub fn jdb_presentation() -> LatticePresentation {
    // meet-irreducibles
    let (i1, i2, i3, i4, i5) = (0, 1, 2, 3, 4);
    // others: bottom, two atoms, two rank-2, one rank-3, top
    let (bot, a_l, a_r, r2_l, r2_r, r3, top) = (5, 6, 7, 8, 9, 10, 11);
    let covers = vec![
        (bot, a_l),
        (bot, a_r),
        (a_l, r2_l),
        (a_l, i3),
        (a_r, i3),
        (a_r, r2_r),
        (r2_l, i1),
        (r2_l, r3),
        (i3, r3),
        (r2_r, r3),
        (r2_r, i2),
        (i1, i4),
        (r3, i4),
        (r3, i5),
        (i2, i5),
        (i4, top),
        (i5, top),
    ];
    LatticePresentation::new(12, covers)
        .expect("valid presentation")
        .with_irreducible_order(vec![i1, i2, i3, i4, i5])
}

/// The five-element modular lattice with three atoms.
pub fn diamond_m3() -> LatticePresentation {
    LatticePresentation::new(5, vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        .expect("valid presentation")
}

/// A chain with `k + 1` elements.
pub fn chain(k: usize) -> LatticePresentation {
    LatticePresentation::new(k + 1, (0..k).map(|i| (i, i + 1)).collect())
        .expect("valid presentation")
}
