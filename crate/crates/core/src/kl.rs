//! Kazhdan-Lusztig polynomials, their inverse family, and R-polynomials.
//!
//! All three families are computed one column at a time: for fixed `w` the
//! table holds the polynomial at every `x <= w`. Columns are memoized per
//! group and shared between threads; a column is a pure function of `w`, so
//! a racing duplicate computation inserts an identical value.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::coxeter::{Element, Side, WeylGroup};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Debug)]
struct Column {
    lower: Arc<[u32]>,
    polys: Vec<Polynomial>,
}

impl Column {
    fn get(&self, x: usize) -> Option<&Polynomial> {
        self.lower
            .binary_search(&(x as u32))
            .ok()
            .map(|pos| &self.polys[pos])
    }
}

type Cache = RwLock<HashMap<u32, Arc<Column>>>;

/// Memoized polynomial tables over one Weyl group.
#[derive(Debug)]
pub struct KlTable {
    group: Arc<WeylGroup>,
    kl: Cache,
    inverse: Cache,
    r: Cache,
}

impl KlTable {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        KlTable {
            group,
            kl: RwLock::default(),
            inverse: RwLock::default(),
            r: RwLock::default(),
        }
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    /// `P_{v,w}`; zero unless `v <= w`.
    pub fn kl(&self, v: Element, w: Element) -> Result<Polynomial> {
        let (vi, wi) = self.group.idx_pair(v, w)?;
        Ok(lookup(&self.kl_column_idx(wi), vi))
    }

    /// `P_{v,w}` with the top step of the recursion taken along the left
    /// descent `s` (1-based) instead of the lowest one.
    pub fn kl_via_descent(&self, v: Element, w: Element, s: usize) -> Result<Polynomial> {
        let (vi, wi) = self.group.idx_pair(v, w)?;
        if !self.group.is_descent_of(w, s, Side::Left)? {
            return Err(Error::NotLeftDescent {
                generator: s,
                w: self.group.format_word(w),
            });
        }
        Ok(lookup(&self.kl_column_along(wi, s - 1), vi))
    }

    /// Every `(x, P_{x,w})` with `x <= w`, sorted by `x`.
    pub fn kl_column(&self, w: Element) -> Vec<(Element, Polynomial)> {
        let col = self.kl_column_idx(self.group.idx(w));
        self.entries(&col)
    }

    /// Coefficient of `q^((l(w)-l(v)-1)/2)` in `P_{v,w}`, zero for even length difference.
    pub fn mu(&self, v: Element, w: Element) -> Result<i64> {
        let (vi, wi) = self.group.idx_pair(v, w)?;
        if vi == wi {
            return Err(Error::MuOfEqual(self.group.format_word(v)));
        }
        if !self.group.leq_idx(vi, wi) {
            return Err(self.group.not_below(v, w));
        }
        let gap = self.group.len_idx(wi) - self.group.len_idx(vi);
        if gap.is_multiple_of(2) {
            return Ok(0);
        }
        Ok(lookup(&self.kl_column_idx(wi), vi).coeff((gap - 1) / 2))
    }

    /// `Q_{v,w}`, the inverse family:
    /// `sum_{v<=z<=w} (-1)^(l(z)-l(v)) P_{v,z} Q_{z,w} = delta_{v,w}`.
    pub fn inverse_kl(&self, v: Element, w: Element) -> Result<Polynomial> {
        let (vi, wi) = self.group.idx_pair(v, w)?;
        Ok(lookup(&self.inverse_column(wi), vi))
    }

    pub fn r_polynomial(&self, v: Element, w: Element) -> Result<Polynomial> {
        let (vi, wi) = self.group.idx_pair(v, w)?;
        Ok(lookup(&self.r_column(wi), vi))
    }

    fn entries(&self, col: &Column) -> Vec<(Element, Polynomial)> {
        col.lower
            .iter()
            .zip(&col.polys)
            .map(|(&x, p)| (self.group.handle(x as usize), p.clone()))
            .collect()
    }

    fn kl_column_idx(&self, w: usize) -> Arc<Column> {
        if let Some(hit) = self.kl.read().unwrap().get(&(w as u32)) {
            return hit.clone();
        }
        let col = match self.group.first_letter(w) {
            None => identity_column(),
            Some(s) => self.kl_column_along(w, s),
        };
        cache_insert(&self.kl, w, col)
    }

    // P_{x,w} = q^(1-c) P_{sx,u} + q^c P_{x,u}
    //           - sum_{z<u, sz<z} mu(z,u) q^((l(w)-l(z))/2) P_{x,z}
    // with u = sw and c = 1 exactly when sx < x.
    fn kl_column_along(&self, w: usize, s: usize) -> Column {
        let g = &*self.group;
        let u = g.lmul(w, s);
        debug_assert!(g.len_idx(u) < g.len_idx(w));
        let col_u = self.kl_column_idx(u);
        let len_w = g.len_idx(w);
        let len_u = g.len_idx(u);

        let mut corrections = Vec::new();
        for (&z, p) in col_u.lower.iter().zip(&col_u.polys) {
            let z = z as usize;
            if z == u || !g.is_descent(z, s, Side::Left) {
                continue;
            }
            let gap = len_u - g.len_idx(z);
            if gap.is_multiple_of(2) {
                continue;
            }
            let mu = p.coeff((gap - 1) / 2);
            if mu != 0 {
                let shift = (len_w - g.len_idx(z)) / 2;
                corrections.push((mu, shift, self.kl_column_idx(z)));
            }
        }

        let lower = g.lower_idx(w);
        let polys = lower
            .iter()
            .map(|&x| {
                let x = x as usize;
                let sx = g.lmul(x, s);
                let p_sx = lookup(&col_u, sx);
                let p_x = lookup(&col_u, x);
                let mut p = if g.len_idx(sx) < g.len_idx(x) {
                    &p_sx + &p_x.shift(1)
                } else {
                    &p_sx.shift(1) + &p_x
                };
                for (mu, shift, col_z) in &corrections {
                    if let Some(p_xz) = col_z.get(x) {
                        p = &p - &p_xz.shift(*shift).scale(*mu);
                    }
                }
                p
            })
            .collect();
        Column { lower, polys }
    }

    fn inverse_column(&self, w: usize) -> Arc<Column> {
        if let Some(hit) = self.inverse.read().unwrap().get(&(w as u32)) {
            return hit.clone();
        }
        let g = &*self.group;
        let lower = g.lower_idx(w);
        let n = lower.len();
        let mut polys = vec![Polynomial::zero(); n];
        polys[n - 1] = Polynomial::one();
        for i in (0..n - 1).rev() {
            let x = lower[i] as usize;
            let mut acc = Polynomial::zero();
            for j in i + 1..n {
                let z = lower[j] as usize;
                let p_xz = lookup(&self.kl_column_idx(z), x);
                if p_xz.is_zero() {
                    continue;
                }
                let term = &p_xz * &polys[j];
                if (g.len_idx(z) - g.len_idx(x)).is_multiple_of(2) {
                    acc = &acc + &term;
                } else {
                    acc = &acc - &term;
                }
            }
            polys[i] = -acc;
        }
        cache_insert(&self.inverse, w, Column { lower, polys })
    }

    // R_{x,w} = R_{sx,sw} if sx < x, else (q-1) R_{x,sw} + q R_{sx,sw}.
    fn r_column(&self, w: usize) -> Arc<Column> {
        if let Some(hit) = self.r.read().unwrap().get(&(w as u32)) {
            return hit.clone();
        }
        let g = &*self.group;
        let col = match g.first_letter(w) {
            None => identity_column(),
            Some(s) => {
                let col_u = self.r_column(g.lmul(w, s));
                let q_minus_one = Polynomial::from_coeffs(vec![-1, 1]);
                let lower = g.lower_idx(w);
                let polys = lower
                    .iter()
                    .map(|&x| {
                        let x = x as usize;
                        let sx = g.lmul(x, s);
                        let r_sx = lookup(&col_u, sx);
                        if g.len_idx(sx) < g.len_idx(x) {
                            r_sx
                        } else {
                            &(&q_minus_one * &lookup(&col_u, x)) + &r_sx.shift(1)
                        }
                    })
                    .collect();
                Column { lower, polys }
            }
        };
        cache_insert(&self.r, w, col)
    }
}

fn lookup(col: &Column, x: usize) -> Polynomial {
    col.get(x).cloned().unwrap_or_default()
}

fn identity_column() -> Column {
    Column {
        lower: Arc::from(vec![0u32]),
        polys: vec![Polynomial::one()],
    }
}

fn cache_insert(cache: &Cache, w: usize, col: Column) -> Arc<Column> {
    cache
        .write()
        .unwrap()
        .entry(w as u32)
        .or_insert_with(|| Arc::new(col))
        .clone()
}
