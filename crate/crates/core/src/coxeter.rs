//! Finite Weyl groups built by exhaustive enumeration.
//!
//! Each element `w` is located by the orbit point `w(rho)` in fundamental
//! weight coordinates, so `s_i` is a left descent of `w` exactly when the
//! `i`-th coordinate of `w(rho)` is negative. Once enumeration finishes the
//! elements are renumbered so that their index order is the order by length
//! and then by ShortLex-least reduced word; every sorted list of elements in
//! this crate follows that order.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use smallvec::SmallVec;

use crate::cartan::CartanType;
use crate::error::{Error, Result};

/// Default refusal threshold for [`WeylGroup::new`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

const NO_LETTER: u8 = u8::MAX;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

type Weight = SmallVec<[i32; 8]>;

/// A handle to an element of a particular [`WeylGroup`].
///
/// Handles are cheap to copy. Two handles are equal exactly when they name
/// the same group element of the same group instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    group: u64,
    index: u32,
}

impl Element {
    /// Position in the (length, ShortLex word) order of the parent group.
    pub fn index(self) -> usize {
        self.index as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A set `J` of generator indices naming the parabolic subgroup `W_J`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParabolicSubset {
    members: Vec<usize>,
}

impl ParabolicSubset {
    /// Generators are 1-based.
    pub fn new(group: &WeylGroup, generators: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members = Vec::new();
        for g in generators {
            if g == 0 || g > group.rank() {
                return Err(Error::GeneratorOutOfRange {
                    index: g,
                    rank: group.rank(),
                });
            }
            members.push(g);
        }
        members.sort_unstable();
        members.dedup();
        Ok(ParabolicSubset { members })
    }

    pub fn all(group: &WeylGroup) -> Self {
        ParabolicSubset {
            members: (1..=group.rank()).collect(),
        }
    }

    pub fn generators(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, generator: usize) -> bool {
        self.members.binary_search(&generator).is_ok()
    }
}

pub struct WeylGroup {
    id: u64,
    cartan: CartanType,
    cartan_matrix: Vec<Vec<i32>>,
    coxeter_matrix: Vec<Vec<u32>>,
    positive_roots: Vec<Vec<i32>>,
    lengths: Vec<u16>,
    // Row-major `order x rank` multiplication tables by simple reflections.
    left: Vec<u32>,
    right: Vec<u32>,
    inverses: Vec<u32>,
    // 0-based first letter of the ShortLex reduced word.
    first: Vec<u8>,
    lower_sets: RwLock<HashMap<u32, Arc<[u32]>>>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("cartan", &self.cartan.to_string())
            .field("order", &self.order())
            .finish()
    }
}

impl WeylGroup {
    /// Builds the group, refusing anything larger than [`DEFAULT_ENUMERATION_CAP`].
    pub fn new(cartan: CartanType) -> Result<Self> {
        Self::with_cap(cartan, Some(DEFAULT_ENUMERATION_CAP))
    }

    /// Builds the group with an explicit cap; `None` disables it.
    pub fn with_cap(cartan: CartanType, cap: Option<u64>) -> Result<Self> {
        let order = cartan.classified_order();
        let too_big = match (order, cap) {
            (None, _) => true,
            (Some(o), Some(c)) => o > c,
            (Some(o), None) => o > u32::MAX as u64,
        };
        if too_big {
            return Err(Error::EnumerationCap {
                cartan: cartan.to_string(),
                order: order.map_or_else(|| "beyond 2^64".to_string(), |o| o.to_string()),
                cap: cap.unwrap_or(u32::MAX as u64),
            });
        }

        let cartan_matrix = cartan.cartan_matrix();
        let coxeter_matrix = cartan.coxeter_matrix();
        let positive_roots = positive_roots(&cartan_matrix);
        let tables = enumerate(&cartan_matrix);

        Ok(WeylGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            cartan,
            cartan_matrix,
            coxeter_matrix,
            positive_roots,
            lengths: tables.lengths,
            left: tables.left,
            right: tables.right,
            inverses: tables.inverses,
            first: tables.first,
            lower_sets: RwLock::new(HashMap::new()),
        })
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan_matrix
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive_roots
    }

    pub fn identity(&self) -> Element {
        self.handle(0)
    }

    pub fn longest_element(&self) -> Element {
        self.handle(self.order() - 1)
    }

    /// The simple reflection `s_i`, 1-based.
    pub fn generator(&self, i: usize) -> Result<Element> {
        self.check_generator(i)?;
        Ok(self.handle(self.lmul(0, i - 1)))
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..self.rank())
            .map(|i| self.handle(self.lmul(0, i)))
            .collect()
    }

    /// All elements in (length, ShortLex word) order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = Element> + '_ {
        (0..self.order()).map(move |i| self.handle(i))
    }

    pub fn element(&self, index: usize) -> Option<Element> {
        (index < self.order()).then(|| self.handle(index))
    }

    pub fn contains(&self, e: Element) -> bool {
        e.group == self.id && (e.index as usize) < self.order()
    }

    /// Product of 1-based generators, left to right. The word need not be reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<Element> {
        let mut idx = 0usize;
        for &g in word {
            self.check_generator(g)?;
            idx = self.rmul(idx, g - 1);
        }
        Ok(self.handle(idx))
    }

    /// Parses whitespace- or comma-separated 1-based indices; empty or `e` is the identity.
    pub fn parse_word(&self, text: &str) -> Result<Element> {
        let word = parse_word(text)?;
        self.from_word(&word)
    }

    /// ShortLex-least reduced word, 1-based.
    pub fn word(&self, e: Element) -> Vec<usize> {
        let mut idx = self.idx(e);
        let mut word = Vec::with_capacity(self.lengths[idx] as usize);
        while idx != 0 {
            let s = self.first[idx] as usize;
            word.push(s + 1);
            idx = self.lmul(idx, s);
        }
        word
    }

    /// Space-separated reduced word, `e` for the identity.
    pub fn format_word(&self, e: Element) -> String {
        let word = self.word(e);
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    pub fn length(&self, e: Element) -> usize {
        self.lengths[self.idx(e)] as usize
    }

    pub fn multiply(&self, a: Element, b: Element) -> Result<Element> {
        let (ai, _) = self.idx_pair(a, b)?;
        let mut idx = ai;
        for g in self.word(b) {
            idx = self.rmul(idx, g - 1);
        }
        Ok(self.handle(idx))
    }

    pub fn inverse(&self, a: Element) -> Element {
        self.handle(self.inverses[self.idx(a)] as usize)
    }

    /// `s_i * w` for a 1-based generator.
    pub fn left_multiply(&self, i: usize, w: Element) -> Result<Element> {
        self.check_generator(i)?;
        Ok(self.handle(self.lmul(self.idx(w), i - 1)))
    }

    /// `w * s_i` for a 1-based generator.
    pub fn right_multiply(&self, w: Element, i: usize) -> Result<Element> {
        self.check_generator(i)?;
        Ok(self.handle(self.rmul(self.idx(w), i - 1)))
    }

    /// Sorted 1-based generators `s` with `l(sw) < l(w)` (left) or `l(ws) < l(w)` (right).
    pub fn descents(&self, w: Element, side: Side) -> Vec<usize> {
        let idx = self.idx(w);
        (0..self.rank())
            .filter(|&s| self.is_descent(idx, s, side))
            .map(|s| s + 1)
            .collect()
    }

    pub fn is_descent_of(&self, w: Element, i: usize, side: Side) -> Result<bool> {
        self.check_generator(i)?;
        Ok(self.is_descent(self.idx(w), i - 1, side))
    }

    /// Bruhat order by the lifting property, peeling the lowest left descent of `w`.
    pub fn bruhat_leq(&self, v: Element, w: Element) -> Result<bool> {
        let (v, w) = self.idx_pair(v, w)?;
        Ok(self.leq_idx(v, w))
    }

    /// The lower Bruhat interval `[e, w]`, sorted.
    pub fn lower_set(&self, w: Element) -> Vec<Element> {
        self.lower_idx(self.idx(w))
            .iter()
            .map(|&i| self.handle(i as usize))
            .collect()
    }

    /// The Bruhat interval `[v, w]`, sorted by length and then by reduced word.
    pub fn interval(&self, v: Element, w: Element) -> Result<Vec<Element>> {
        let (vi, wi) = self.idx_pair(v, w)?;
        if !self.leq_idx(vi, wi) {
            return Err(self.not_below(v, w));
        }
        Ok(self
            .lower_idx(wi)
            .iter()
            .filter(|&&z| self.leq_idx(vi, z as usize))
            .map(|&z| self.handle(z as usize))
            .collect())
    }

    /// The shortest element of the left coset `w W_J`.
    pub fn min_coset_rep(&self, w: Element, j: &ParabolicSubset) -> Element {
        let mut idx = self.idx(w);
        'strip: loop {
            for &g in j.generators() {
                if g <= self.rank() && self.is_descent(idx, g - 1, Side::Right) {
                    idx = self.rmul(idx, g - 1);
                    continue 'strip;
                }
            }
            return self.handle(idx);
        }
    }

    pub(crate) fn not_below(&self, v: Element, w: Element) -> Error {
        Error::NotBruhatBelow {
            v: self.format_word(v),
            w: self.format_word(w),
        }
    }

    pub(crate) fn idx(&self, e: Element) -> usize {
        assert!(
            self.contains(e),
            "element does not belong to the {} group instance",
            self.cartan
        );
        e.index as usize
    }

    pub(crate) fn idx_pair(&self, a: Element, b: Element) -> Result<(usize, usize)> {
        if self.contains(a) && self.contains(b) {
            Ok((a.index as usize, b.index as usize))
        } else {
            Err(Error::MixedGroups)
        }
    }

    pub(crate) fn handle(&self, index: usize) -> Element {
        Element {
            group: self.id,
            index: index as u32,
        }
    }

    pub(crate) fn len_idx(&self, idx: usize) -> usize {
        self.lengths[idx] as usize
    }

    pub(crate) fn lmul(&self, idx: usize, s: usize) -> usize {
        self.left[idx * self.rank() + s] as usize
    }

    pub(crate) fn rmul(&self, idx: usize, s: usize) -> usize {
        self.right[idx * self.rank() + s] as usize
    }

    /// 0-based lowest left descent, `None` for the identity.
    pub(crate) fn first_letter(&self, idx: usize) -> Option<usize> {
        (self.first[idx] != NO_LETTER).then_some(self.first[idx] as usize)
    }

    pub(crate) fn is_descent(&self, idx: usize, s: usize, side: Side) -> bool {
        let other = match side {
            Side::Left => self.lmul(idx, s),
            Side::Right => self.rmul(idx, s),
        };
        self.lengths[other] < self.lengths[idx]
    }

    pub(crate) fn leq_idx(&self, mut v: usize, mut w: usize) -> bool {
        loop {
            if v == w || v == 0 {
                return true;
            }
            if self.lengths[v] >= self.lengths[w] {
                return false;
            }
            let s = self.first[w] as usize;
            let sv = self.lmul(v, s);
            if self.lengths[sv] < self.lengths[v] {
                v = sv;
            }
            w = self.lmul(w, s);
        }
    }

    /// Sorted indices of `[e, w]`: `{u, su : u <= sw}` for a left descent `s`.
    pub(crate) fn lower_idx(&self, w: usize) -> Arc<[u32]> {
        if let Some(hit) = self.lower_sets.read().unwrap().get(&(w as u32)) {
            return hit.clone();
        }
        let mut chain = Vec::new();
        let mut cur = w;
        let mut base: Arc<[u32]> = loop {
            if cur == 0 {
                break Arc::from(vec![0u32]);
            }
            if let Some(hit) = self.lower_sets.read().unwrap().get(&(cur as u32)) {
                break hit.clone();
            }
            chain.push(cur);
            cur = self.lmul(cur, self.first[cur] as usize);
        };
        while let Some(top) = chain.pop() {
            let s = self.first[top] as usize;
            let mut set: Vec<u32> = base.to_vec();
            set.extend(base.iter().map(|&u| self.lmul(u as usize, s) as u32));
            set.sort_unstable();
            set.dedup();
            base = Arc::from(set);
            self.lower_sets
                .write()
                .unwrap()
                .entry(top as u32)
                .or_insert_with(|| base.clone());
        }
        base
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::GeneratorOutOfRange {
                index: i,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }
}

/// Splits a word on whitespace and commas into 1-based indices.
pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "e" {
        return Ok(Vec::new());
    }
    trimmed
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::WordSyntax(text.to_string()))
        })
        .collect()
}

struct Tables {
    lengths: Vec<u16>,
    left: Vec<u32>,
    right: Vec<u32>,
    inverses: Vec<u32>,
    first: Vec<u8>,
}

// (s_i lambda)_k = lambda_k - lambda_i * a[k][i]
fn reflect_weight(a: &[Vec<i32>], weight: &Weight, i: usize) -> Weight {
    let c = weight[i];
    weight
        .iter()
        .enumerate()
        .map(|(k, &x)| x - c * a[k][i])
        .collect()
}

fn lowest_descent(weight: &Weight) -> Option<usize> {
    weight.iter().position(|&x| x < 0)
}

fn enumerate(a: &[Vec<i32>]) -> Tables {
    let n = a.len();
    let rho: Weight = SmallVec::from_elem(1, n);

    let mut weights: Vec<Weight> = vec![rho.clone()];
    let mut index: HashMap<Weight, u32> = HashMap::new();
    index.insert(rho, 0);
    let mut lengths = vec![0u16];
    let mut first = vec![NO_LETTER];

    let mut layer = 0..1usize;
    let mut len = 0u16;
    while !layer.is_empty() {
        len += 1;
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut next: Vec<(u8, u32, Weight)> = Vec::new();
        for idx in layer.clone() {
            for i in 0..n {
                if weights[idx][i] <= 0 {
                    continue;
                }
                let up = reflect_weight(a, &weights[idx], i);
                if seen.contains(&up) {
                    continue;
                }
                let s = lowest_descent(&up).expect("s_i is a descent of s_i w");
                let parent = index[&reflect_weight(a, &up, s)];
                seen.insert(up.clone());
                next.push((s as u8, parent, up));
            }
        }
        next.sort_unstable_by_key(|(s, parent, _)| (*s, *parent));
        let start = weights.len();
        for (s, _, w) in next {
            index.insert(w.clone(), weights.len() as u32);
            weights.push(w);
            lengths.push(len);
            first.push(s);
        }
        layer = start..weights.len();
    }

    let order = weights.len();
    let mut left = vec![0u32; order * n];
    for (idx, w) in weights.iter().enumerate() {
        for i in 0..n {
            left[idx * n + i] = index[&reflect_weight(a, w, i)];
        }
    }
    drop(index);
    drop(weights);

    // w = s_a w' gives w s_i = s_a (w' s_i) and w^-1 = w'^-1 s_a.
    let mut right = vec![0u32; order * n];
    let mut inverses = vec![0u32; order];
    right[..n].copy_from_slice(&left[..n]);
    for idx in 1..order {
        let s = first[idx] as usize;
        let parent = left[idx * n + s] as usize;
        for i in 0..n {
            let below = right[parent * n + i] as usize;
            right[idx * n + i] = left[below * n + s];
        }
        inverses[idx] = right[inverses[parent] as usize * n + s];
    }

    Tables {
        lengths,
        left,
        right,
        inverses,
        first,
    }
}

fn positive_roots(a: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = a.len();
    let simple: Vec<Vec<i32>> = (0..n)
        .map(|i| (0..n).map(|j| i32::from(i == j)).collect())
        .collect();
    let mut found: HashSet<Vec<i32>> = simple.iter().cloned().collect();
    let mut queue = simple;
    while let Some(root) = queue.pop() {
        for i in 0..n {
            let pairing: i32 = (0..n).map(|j| a[i][j] * root[j]).sum();
            let mut image = root.clone();
            image[i] -= pairing;
            if image.iter().all(|&c| c >= 0) && found.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    let mut roots: Vec<Vec<i32>> = found.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i32>(), std::cmp::Reverse(r.clone())));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::new(t.parse().unwrap()).unwrap()
    }

    fn w(g: &WeylGroup, word: &str) -> Element {
        g.parse_word(word).unwrap()
    }

    #[test]
    fn small_orders() {
        let a1 = group("A1");
        assert_eq!(a1.order(), 2);
        let a3 = group("A3");
        assert_eq!(a3.order(), 24);
        assert_eq!(a3.length(a3.longest_element()), 6);
        let b2 = group("B2");
        assert_eq!(b2.order(), 8);
        assert_eq!(b2.length(b2.longest_element()), 4);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let e8 = WeylGroup::new("E8".parse().unwrap());
        assert!(matches!(e8, Err(Error::EnumerationCap { .. })));
        let a4 = WeylGroup::with_cap("A4".parse().unwrap(), Some(100));
        assert!(matches!(a4, Err(Error::EnumerationCap { .. })));
        assert!(WeylGroup::with_cap("A4".parse().unwrap(), Some(120)).is_ok());
    }

    #[test]
    fn multiplication_examples() {
        let g = group("A3");
        let s1 = g.generator(1).unwrap();
        assert_eq!(g.multiply(s1, s1).unwrap(), g.identity());
        let s1s2 = w(&g, "1 2");
        let p = g.multiply(s1s2, s1).unwrap();
        assert_eq!(g.length(p), 3);
        assert_eq!(g.inverse(w(&g, "1 2 3")), w(&g, "3 2 1"));
    }

    #[test]
    fn words_are_canonical() {
        let g = group("A3");
        assert_eq!(w(&g, "2 1 2"), w(&g, "1 2 1"));
        assert_eq!(g.word(w(&g, "2 1 2")), vec![1, 2, 1]);
        assert_eq!(g.word(w(&g, "3 1")), vec![1, 3]);
        assert_eq!(w(&g, "1,3"), w(&g, "3 1"));
        assert_eq!(g.format_word(g.identity()), "e");
        assert_eq!(w(&g, ""), g.identity());
        assert_eq!(w(&g, "e"), g.identity());
        for e in g.elements() {
            assert_eq!(g.word(e).len(), g.length(e));
            assert_eq!(g.from_word(&g.word(e)).unwrap(), e);
        }
    }

    #[test]
    fn word_errors() {
        let g = group("A3");
        assert!(matches!(g.parse_word("1 x"), Err(Error::WordSyntax(_))));
        assert!(matches!(
            g.parse_word("1 4"),
            Err(Error::GeneratorOutOfRange { index: 4, rank: 3 })
        ));
        assert!(g.parse_word("0").is_err());
    }

    #[test]
    fn length_examples() {
        let g = group("A3");
        assert_eq!(g.length(g.identity()), 0);
        assert_eq!(g.length(w(&g, "1 2 3 2 1")), 5);
        assert_eq!(g.length(g.longest_element()), 6);
    }

    #[test]
    fn descent_examples() {
        let g = group("A3");
        assert!(g.descents(g.identity(), Side::Left).is_empty());
        assert_eq!(g.descents(g.longest_element(), Side::Left), vec![1, 2, 3]);
        assert_eq!(g.descents(g.longest_element(), Side::Right), vec![1, 2, 3]);
        let a2 = group("A2");
        assert_eq!(a2.descents(w(&a2, "1 2 1"), Side::Left), vec![1, 2]);
        assert_eq!(g.descents(w(&g, "1 2"), Side::Left), vec![1]);
        assert_eq!(g.descents(w(&g, "1 2"), Side::Right), vec![2]);
    }

    #[test]
    fn bruhat_examples() {
        let g = group("A3");
        for x in g.elements() {
            assert!(g.bruhat_leq(g.identity(), x).unwrap());
        }
        assert!(g.bruhat_leq(w(&g, "1 3"), w(&g, "1 2 3 2 1")).unwrap());
        assert!(!g.bruhat_leq(w(&g, "2"), w(&g, "1 3")).unwrap());
        assert!(!g.bruhat_leq(w(&g, "1 2 3 2 1"), w(&g, "1 3")).unwrap());
    }

    #[test]
    fn mixed_groups_are_rejected() {
        let g = group("A3");
        let h = group("A3");
        let a = g.generator(1).unwrap();
        let b = h.generator(1).unwrap();
        assert_ne!(a, b);
        assert_eq!(g.multiply(a, b), Err(Error::MixedGroups));
        assert_eq!(g.bruhat_leq(a, b), Err(Error::MixedGroups));
        assert_eq!(g.interval(a, b), Err(Error::MixedGroups));
    }

    #[test]
    fn coset_examples() {
        let g = group("A3");
        let j2 = ParabolicSubset::new(&g, [2]).unwrap();
        assert_eq!(g.min_coset_rep(g.identity(), &j2), g.identity());
        assert_eq!(g.min_coset_rep(w(&g, "1 2"), &j2), w(&g, "1"));
        let all = ParabolicSubset::all(&g);
        assert_eq!(g.min_coset_rep(g.longest_element(), &all), g.identity());
        assert!(ParabolicSubset::new(&g, [4]).is_err());
    }

    #[test]
    fn interval_examples() {
        let g = group("A3");
        let expected: Vec<_> = ["", "1", "3", "1 3"].iter().map(|s| w(&g, s)).collect();
        assert_eq!(g.interval(g.identity(), w(&g, "1 3")).unwrap(), expected);
        let x = w(&g, "2 3 1");
        assert_eq!(g.interval(x, x).unwrap(), vec![x]);
        assert_eq!(
            g.interval(g.identity(), g.longest_element()).unwrap().len(),
            24
        );
        assert!(matches!(
            g.interval(w(&g, "2"), w(&g, "1 3")),
            Err(Error::NotBruhatBelow { .. })
        ));
    }

    #[test]
    fn lower_set_matches_pairwise_test() {
        for t in ["A3", "B3", "G2"] {
            let g = group(t);
            for x in g.elements() {
                let expected: Vec<_> = g
                    .elements()
                    .filter(|&v| g.bruhat_leq(v, x).unwrap())
                    .collect();
                assert_eq!(g.lower_set(x), expected, "{t} {}", g.format_word(x));
            }
        }
    }

    #[test]
    fn positive_roots_match_longest_length() {
        for t in ["A1", "A3", "B2", "B3", "C3", "D4", "F4", "G2", "E6"] {
            let g = group(t);
            assert_eq!(
                g.positive_roots().len(),
                g.length(g.longest_element()),
                "{t}"
            );
        }
    }

    #[test]
    fn generator_relations() {
        for t in ["A3", "B3", "G2", "D4", "F4"] {
            let g = group(t);
            let m = g.coxeter_matrix();
            for i in 1..=g.rank() {
                for j in 1..=g.rank() {
                    let si = g.generator(i).unwrap();
                    let sj = g.generator(j).unwrap();
                    let p = g.multiply(si, sj).unwrap();
                    let mut acc = g.identity();
                    for k in 1..=m[i - 1][j - 1] {
                        acc = g.multiply(acc, p).unwrap();
                        assert_eq!(
                            acc == g.identity(),
                            k == m[i - 1][j - 1],
                            "{t} ({i},{j})^{k}"
                        );
                    }
                }
            }
        }
    }
}
