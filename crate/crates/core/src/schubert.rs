//! Schubert variety bookkeeping: dimension, codimension and the rationally
//! singular locus read off from Kazhdan-Lusztig polynomials.

use serde::Serialize;

use crate::cartan::Family;
use crate::coxeter::{Element, WeylGroup};
use crate::error::{Error, Result};
use crate::kl::KlTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertDatum {
    pub w: Element,
    pub dim: usize,
    pub codim: usize,
    pub rationally_smooth: bool,
    /// Maximal elements of the rationally singular locus, sorted.
    pub singular_locus_maximals: Vec<Element>,
}

pub fn schubert_datum(kl: &KlTable, w: Element) -> SchubertDatum {
    let group = kl.group();
    let dim = group.length(w);
    let singular_locus_maximals = singular_locus_maximals(kl, w);
    SchubertDatum {
        w,
        dim,
        codim: group.length(group.longest_element()) - dim,
        rationally_smooth: singular_locus_maximals.is_empty(),
        singular_locus_maximals,
    }
}

/// `P_{v,w} = 1` for every `v <= w`.
pub fn rationally_smooth(kl: &KlTable, w: Element) -> bool {
    kl.kl_column(w).iter().all(|(_, p)| p.is_one())
}

/// Bruhat-maximal `v <= w` with `P_{v,w} != 1`.
pub fn singular_locus_maximals(kl: &KlTable, w: Element) -> Vec<Element> {
    let group = kl.group();
    let bad: Vec<Element> = kl
        .kl_column(w)
        .into_iter()
        .filter(|(_, p)| !p.is_one())
        .map(|(v, _)| v)
        .collect();
    bad.iter()
        .copied()
        .filter(|&v| {
            !bad.iter()
                .any(|&u| u != v && group.bruhat_leq(v, u).expect("same group"))
        })
        .collect()
}

/// One-line notation of a type A element: starting from `1 2 .. n+1`, each
/// letter `i` of the reduced word, read left to right, swaps positions `i`
/// and `i+1`.
pub fn one_line_permutation(group: &WeylGroup, w: Element) -> Result<Vec<usize>> {
    if group.cartan().family() != Family::A {
        return Err(Error::NotTypeA(group.cartan().to_string()));
    }
    let mut perm: Vec<usize> = (1..=group.rank() + 1).collect();
    for i in group.word(w) {
        perm.swap(i - 1, i);
    }
    Ok(perm)
}

/// Type A smoothness test: the one-line permutation avoids 3412 and 4231.
pub fn pattern_avoidance_smooth_type_a(group: &WeylGroup, w: Element) -> Result<bool> {
    let perm = one_line_permutation(group, w)?;
    Ok(!contains_pattern(&perm, &[3, 4, 1, 2]) && !contains_pattern(&perm, &[4, 2, 3, 1]))
}

fn contains_pattern(perm: &[usize], pattern: &[usize]) -> bool {
    fn extend(perm: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == pattern.len() {
            return true;
        }
        for i in start..perm.len() {
            let k = chosen.len();
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(j, &c)| (perm[c] < perm[i]) == (pattern[j] < pattern[k]));
            if consistent {
                chosen.push(i);
                if extend(perm, pattern, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    extend(perm, pattern, 0, &mut Vec::new())
}

/// Serializable view of a [`SchubertDatum`] with words in place of handles.
#[derive(Debug, Clone, Serialize)]
pub struct SchubertReport {
    pub word: Vec<usize>,
    pub dim: usize,
    pub codim: usize,
    pub rationally_smooth: bool,
    pub singular_locus_maximals: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_line: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub smooth_by_pattern_avoidance: Option<bool>,
}

impl SchubertReport {
    pub fn new(group: &WeylGroup, datum: &SchubertDatum) -> Self {
        SchubertReport {
            word: group.word(datum.w),
            dim: datum.dim,
            codim: datum.codim,
            rationally_smooth: datum.rationally_smooth,
            singular_locus_maximals: datum
                .singular_locus_maximals
                .iter()
                .map(|&v| group.word(v))
                .collect(),
            one_line: one_line_permutation(group, datum.w).ok(),
            smooth_by_pattern_avoidance: pattern_avoidance_smooth_type_a(group, datum.w).ok(),
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    fn setup(t: &str) -> KlTable {
        KlTable::new(Arc::new(WeylGroup::new(t.parse().unwrap()).unwrap()))
    }

    #[test]
    fn datum_examples() {
        let kl = setup("A3");
        let g = kl.group().clone();
        let top = schubert_datum(&kl, g.longest_element());
        assert_eq!((top.dim, top.codim), (6, 0));
        assert!(top.rationally_smooth);
        let w = g.parse_word("1 2 3 2 1").unwrap();
        let d = schubert_datum(&kl, w);
        assert_eq!((d.dim, d.codim), (5, 1));
        assert!(!d.rationally_smooth);
        assert_eq!(
            d.singular_locus_maximals,
            vec![g.parse_word("1 3").unwrap()]
        );
        let pt = schubert_datum(&kl, g.identity());
        assert_eq!((pt.dim, pt.codim), (0, 6));
    }

    #[test]
    fn smoothness_examples() {
        let kl = setup("A3");
        let g = kl.group().clone();
        assert!(rationally_smooth(&kl, g.identity()));
        for s in g.generators() {
            assert!(rationally_smooth(&kl, s));
        }
        assert!(!rationally_smooth(&kl, g.parse_word("1 2 3 2 1").unwrap()));
        assert!(rationally_smooth(&kl, g.longest_element()));
    }

    #[test]
    fn one_line_of_divisor() {
        let kl = setup("A3");
        let g = kl.group().clone();
        let w = g.parse_word("1 2 3 2 1").unwrap();
        assert_eq!(one_line_permutation(&g, w).unwrap(), vec![4, 2, 3, 1]);
        assert!(!pattern_avoidance_smooth_type_a(&g, w).unwrap());
        assert!(pattern_avoidance_smooth_type_a(&g, g.identity()).unwrap());
        let s2s1s3s2 = g.parse_word("2 1 3 2").unwrap();
        assert_eq!(
            one_line_permutation(&g, s2s1s3s2).unwrap(),
            vec![3, 4, 1, 2]
        );
    }

    #[test]
    fn pattern_avoidance_needs_type_a() {
        let kl = setup("B2");
        let g = kl.group();
        assert!(matches!(
            pattern_avoidance_smooth_type_a(g, g.identity()),
            Err(Error::NotTypeA(_))
        ));
    }

    #[test]
    fn pattern_search() {
        assert!(contains_pattern(&[4, 2, 3, 1], &[4, 2, 3, 1]));
        assert!(!contains_pattern(&[5, 3, 1, 4, 2], &[3, 4, 1, 2]));
        assert!(contains_pattern(&[3, 5, 1, 4, 2], &[3, 4, 1, 2]));
        assert!(!contains_pattern(&[1, 2, 3, 4], &[2, 1]));
        assert!(contains_pattern(&[1, 3, 2, 4], &[2, 1]));
    }
}
