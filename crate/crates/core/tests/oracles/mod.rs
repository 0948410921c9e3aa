//! Brute-force oracles that share no code path with the library routines
//! they check.
#![allow(dead_code)]

use std::collections::HashMap;

use schubert_kl::{Element, KlTable, Polynomial, WeylGroup};

/// Integer reflection matrices acting on simple-root coordinates, built
/// directly from the Cartan matrix.
pub struct ReflectionRep {
    n: usize,
    gens: Vec<Vec<Vec<i64>>>,
}

pub type Matrix = Vec<Vec<i64>>;

impl ReflectionRep {
    pub fn new(group: &WeylGroup) -> Self {
        let a = group.cartan_matrix();
        let n = a.len();
        let gens = (0..n)
            .map(|i| {
                // column j is s_i(alpha_j) = alpha_j - a[i][j] alpha_i
                let mut m = identity(n);
                for j in 0..n {
                    m[i][j] -= a[i][j] as i64;
                }
                m
            })
            .collect();
        ReflectionRep { n, gens }
    }

    /// Matrix of the product of 1-based generators, left to right.
    pub fn word_matrix(&self, word: &[usize]) -> Matrix {
        word.iter()
            .fold(identity(self.n), |acc, &g| mat_mul(&acc, &self.gens[g - 1]))
    }

    /// Number of positive roots the matrix sends to negative roots.
    pub fn inversions(&self, m: &Matrix, positive_roots: &[Vec<i32>]) -> usize {
        positive_roots
            .iter()
            .filter(|root| {
                let image: Vec<i64> = (0..self.n)
                    .map(|i| (0..self.n).map(|j| m[i][j] * root[j] as i64).sum())
                    .collect();
                image.iter().all(|&c| c <= 0)
            })
            .count()
    }
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Subword property: `v <= w` iff a reduced word of `w` has a subword of
/// length `l(v)` whose product is `v`.
pub fn subword_leq(rep: &ReflectionRep, w_word: &[usize], v_word: &[usize]) -> bool {
    let target = rep.word_matrix(v_word);
    let k = v_word.len();
    let n = w_word.len();
    if k > n {
        return false;
    }
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == k)
        .any(|mask| {
            let sub: Vec<usize> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| w_word[i])
                .collect();
            rep.word_matrix(&sub) == target
        })
}

/// Kazhdan-Lusztig polynomials by triangular solve from R-polynomials:
/// `q^(l(w)-l(x)) P_{x,w}(1/q) - P_{x,w}(q) = sum_{x<z<=w} R_{x,z} P_{z,w}`,
/// where the degree bound on `P_{x,w}` separates it from the reflected term.
pub fn kl_by_triangular_solve(kl: &KlTable) -> HashMap<(Element, Element), Polynomial> {
    let group = kl.group();
    let mut table = HashMap::new();
    for w in group.elements() {
        let mut below: Vec<Element> = group
            .elements()
            .filter(|&x| group.bruhat_leq(x, w).unwrap())
            .collect();
        below.sort_by_key(|&x| std::cmp::Reverse(group.length(x)));
        for &x in &below {
            if x == w {
                table.insert((x, w), Polynomial::one());
                continue;
            }
            let mut rhs = Polynomial::zero();
            for &z in &below {
                if z != x && group.bruhat_leq(x, z).unwrap() {
                    let r = kl.r_polynomial(x, z).unwrap();
                    rhs = &rhs + &(&r * &table[&(z, w)]);
                }
            }
            let d = group.length(w) - group.length(x);
            let p = (-&rhs).truncate(d.div_ceil(2));
            assert_eq!(
                &rhs + &p,
                p.reflect(d),
                "functional equation has no solution"
            );
            table.insert((x, w), p);
        }
    }
    table
}

pub fn group(t: &str) -> std::sync::Arc<WeylGroup> {
    std::sync::Arc::new(WeylGroup::new(t.parse().unwrap()).unwrap())
}

pub fn table(t: &str) -> KlTable {
    KlTable::new(group(t))
}
