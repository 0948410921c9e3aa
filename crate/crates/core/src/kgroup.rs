//! Grothendieck-group classes of B-equivariant holonomic D-modules on G/B,
//! tracked only through their coefficients on the dual Verma classes
//! `[M(w)]` or the simple classes `[L(w)]`.
//!
//! In positive characteristic the simple module on `X(w)` is the local
//! cohomology module supported on `X(w)`, and exactness of the Cousin complex
//! gives `[L(w)] = sum_{y<=w} (-1)^(l(w)-l(y)) [M(y)]`; the inverse is
//! multiplicity free. In characteristic zero the same change of basis is
//! governed by `P_{y,w}(1)` and its inverse by `Q_{y,w}(1)`.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{Element, WeylGroup};
use crate::error::{Error, Result};
use crate::kl::KlTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// Dual Verma modules `M(w)`, local cohomology along the cell `C(w)`.
    M,
    /// Simple modules `L(w)` with support `X(w)`.
    L,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    #[serde(rename = "p")]
    CharP,
    #[serde(rename = "0")]
    Char0,
}

impl Regime {
    /// Accepts `0`, `p`, or any prime; only zero versus positive matters.
    pub fn from_characteristic(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "0" {
            return Ok(Regime::Char0);
        }
        if t.eq_ignore_ascii_case("p") {
            return Ok(Regime::CharP);
        }
        match t.parse::<u64>() {
            Ok(p) if is_prime(p) => Ok(Regime::CharP),
            _ => Err(Error::Characteristic(text.to_string())),
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::CharP => "p",
            Regime::Char0 => "0",
        })
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// A finite integer combination of basis classes. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KGClass {
    basis: Basis,
    regime: Regime,
    terms: BTreeMap<Element, i64>,
}

impl KGClass {
    pub fn zero(basis: Basis, regime: Regime) -> Self {
        KGClass {
            basis,
            regime,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_class(basis: Basis, regime: Regime, w: Element) -> Self {
        Self::from_terms(basis, regime, [(w, 1)])
    }

    pub fn from_terms(
        basis: Basis,
        regime: Regime,
        terms: impl IntoIterator<Item = (Element, i64)>,
    ) -> Self {
        let mut class = Self::zero(basis, regime);
        for (e, c) in terms {
            class.add_term(e, c);
        }
        class
    }

    pub fn add_term(&mut self, e: Element, c: i64) {
        let entry = self.terms.entry(e).or_insert(0);
        *entry = entry.checked_add(c).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn coeff(&self, e: Element) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    /// Terms in element order (ascending length, then word).
    pub fn terms(&self) -> impl Iterator<Item = (Element, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in display order: longest support first, ties by reduced word.
    pub fn display_terms(&self, group: &WeylGroup) -> Vec<(Element, i64)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&(e, _)| (Reverse(group.length(e)), e));
        terms
    }

    /// `[L(1 2 3 2 1)] + [L(1 3)]`, `[M(1)] - [M(e)]`, `0`.
    pub fn render(&self, group: &WeylGroup) -> String {
        let letter = match self.basis {
            Basis::M => "M",
            Basis::L => "L",
        };
        let mut out = String::new();
        for (i, (e, c)) in self.display_terms(group).into_iter().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            if mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(&format!("[{letter}({})]", group.format_word(e)));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn to_json(&self, group: &WeylGroup) -> serde_json::Value {
        let doc = ClassJson {
            basis: self.basis,
            regime: self.regime,
            terms: self
                .display_terms(group)
                .into_iter()
                .map(|(e, coeff)| TermJson {
                    word: group.word(e),
                    coeff,
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("class serializes")
    }

    pub fn from_json(group: &WeylGroup, text: &str) -> Result<Self> {
        let doc: ClassJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let mut class = Self::zero(doc.basis, doc.regime);
        for term in doc.terms {
            class.add_term(group.from_word(&term.word)?, term.coeff);
        }
        Ok(class)
    }
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    basis: Basis,
    #[serde(rename = "char")]
    regime: Regime,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: Vec<usize>,
    coeff: i64,
}

fn sign(gap: usize) -> i64 {
    if gap.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `[L(w)] = sum_{y<=w} (-1)^(l(w)-l(y)) [M(y)]` in positive characteristic.
pub fn simple_in_dualverma_charp(group: &WeylGroup, w: Element) -> KGClass {
    let lw = group.length(w);
    KGClass::from_terms(
        Basis::M,
        Regime::CharP,
        group
            .lower_set(w)
            .into_iter()
            .map(|y| (y, sign(lw - group.length(y)))),
    )
}

/// `[M(w)] = sum_{y<=w} [L(y)]` in positive characteristic.
pub fn dualverma_in_simple_charp(group: &WeylGroup, w: Element) -> KGClass {
    KGClass::from_terms(
        Basis::L,
        Regime::CharP,
        group.lower_set(w).into_iter().map(|y| (y, 1)),
    )
}

/// `[L(w)] = sum_{v<=w} (-1)^(l(w)-l(v)) P_{v,w}(1) [M(v)]` in characteristic zero.
pub fn simple_in_dualverma_char0(kl: &KlTable, w: Element) -> KGClass {
    let group = kl.group();
    let lw = group.length(w);
    KGClass::from_terms(
        Basis::M,
        Regime::Char0,
        kl.kl_column(w)
            .into_iter()
            .map(|(v, p)| (v, sign(lw - group.length(v)) * p.eval(1))),
    )
}

/// `[M(w)] = sum_{y<=w} Q_{y,w}(1) [L(y)]` in characteristic zero.
pub fn dualverma_in_simple_char0(kl: &KlTable, w: Element) -> KGClass {
    let group = kl.group();
    KGClass::from_terms(
        Basis::L,
        Regime::Char0,
        group.lower_set(w).into_iter().map(|y| {
            let q = kl.inverse_kl(y, w).expect("same group");
            (y, q.eval(1))
        }),
    )
}

pub fn simple_in_dualverma(kl: &KlTable, w: Element, regime: Regime) -> KGClass {
    match regime {
        Regime::CharP => simple_in_dualverma_charp(kl.group(), w),
        Regime::Char0 => simple_in_dualverma_char0(kl, w),
    }
}

pub fn dualverma_in_simple(kl: &KlTable, w: Element, regime: Regime) -> KGClass {
    match regime {
        Regime::CharP => dualverma_in_simple_charp(kl.group(), w),
        Regime::Char0 => dualverma_in_simple_char0(kl, w),
    }
}

/// Rewrites a class in the simple basis of its own regime.
pub fn to_simple_basis(kl: &KlTable, class: &KGClass) -> KGClass {
    match class.basis {
        Basis::L => class.clone(),
        Basis::M => expand(class, Basis::L, |w| {
            dualverma_in_simple(kl, w, class.regime)
        }),
    }
}

/// Rewrites a class in the dual Verma basis of its own regime.
pub fn to_dualverma_basis(kl: &KlTable, class: &KGClass) -> KGClass {
    match class.basis {
        Basis::M => class.clone(),
        Basis::L => expand(class, Basis::M, |w| {
            simple_in_dualverma(kl, w, class.regime)
        }),
    }
}

fn expand(class: &KGClass, target: Basis, image: impl Fn(Element) -> KGClass) -> KGClass {
    let mut out = KGClass::zero(target, class.regime);
    for (w, c) in class.terms() {
        for (y, d) in image(w).terms() {
            out.add_term(y, c.checked_mul(d).expect("coefficient overflow"));
        }
    }
    out
}

/// Degree `i` holds `{y <= w : l(y) = l(w) - i}`, for `i = 0..=l(w)`.
pub fn gc_complex_terms(group: &WeylGroup, w: Element) -> Vec<Vec<Element>> {
    let lw = group.length(w);
    let mut degrees = vec![Vec::new(); lw + 1];
    for y in group.lower_set(w) {
        degrees[lw - group.length(y)].push(y);
    }
    degrees
}

/// Euler characteristic `sum_i (-1)^i [M^i]` of the complex, in the dual Verma basis.
pub fn gc_alternating_sum(degrees: &[Vec<Element>]) -> KGClass {
    KGClass::from_terms(
        Basis::M,
        Regime::CharP,
        degrees
            .iter()
            .enumerate()
            .flat_map(|(i, ys)| ys.iter().map(move |&y| (y, sign(i)))),
    )
}

/// Class of the local cohomology module with support `X(w)` in the simple basis.
///
/// In positive characteristic this is `[L(w)]` for every `w`. In
/// characteristic zero only divisors are accepted: there the local
/// cohomology is concentrated in degree one and the alternating sum over
/// the Cousin complex computes it.
pub fn localcoh_class(kl: &KlTable, w: Element, regime: Regime) -> Result<KGClass> {
    let group = kl.group();
    if regime == Regime::Char0 {
        let codim = group.length(group.longest_element()) - group.length(w);
        if codim != 1 {
            return Err(Error::NotDivisor {
                w: group.format_word(w),
                codim,
            });
        }
    }
    let mut alternating = gc_alternating_sum(&gc_complex_terms(group, w));
    alternating.regime = regime;
    Ok(to_simple_basis(kl, &alternating))
}

/// `[H^1_{X(w)}(O_X)]` in the characteristic zero simple basis, for a Schubert divisor `X(w)`.
pub fn localcoh_divisor_class_char0(kl: &KlTable, w: Element) -> Result<KGClass> {
    localcoh_class(kl, w, Regime::Char0)
}

/// Checks `sum_{x<=z<=y} (-1)^(l(x)+l(z)) = delta_{x,y}`.
pub fn verma_identity_check(group: &WeylGroup, x: Element, y: Element) -> Result<bool> {
    let interval = group.interval(x, y)?;
    let lx = group.length(x);
    let total: i64 = interval.iter().map(|&z| sign(lx + group.length(z))).sum();
    Ok(total == i64::from(x == y))
}
