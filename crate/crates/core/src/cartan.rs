//! Cartan types of the finite crystallographic root systems.
//!
//! Generators are numbered from 1 following Bourbaki: in type B the last
//! simple root is short, in C it is long, D_n branches at n-2, E_n has
//! generator 2 attached to 4, F4 has the double bond between 2 and 3 and
//! G2 has a short first root.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix with entries `a[i][j] = <alpha_i^vee, alpha_j>` (0-based).
    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut a = vec![vec![0i32; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 1..n {
                    bond(i - 1, i);
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    bond(i - 1, i);
                }
                bond(n - 3, n - 1);
            }
            Family::E => {
                bond(0, 2);
                bond(1, 3);
                for i in 3..n {
                    bond(i - 1, i);
                }
            }
            Family::F => {
                bond(0, 1);
                bond(1, 2);
                bond(2, 3);
            }
            Family::G => bond(0, 1),
        }
        match self.family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }

    /// Coxeter matrix `m(i, j)` (0-based), derived from the Cartan matrix.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let a = self.cartan_matrix();
        let n = self.rank;
        let mut m = vec![vec![1u32; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m[i][j] = match a[i][j] * a[j][i] {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        p => unreachable!("Cartan product {p} in a finite type"),
                    };
                }
            }
        }
        m
    }

    /// Order of the Weyl group from the classification, `None` on `u64` overflow.
    pub fn classified_order(&self) -> Option<u64> {
        let n = self.rank as u64;
        let factorial = |k: u64| (1..=k).try_fold(1u64, |acc, x| acc.checked_mul(x));
        match self.family {
            Family::A => factorial(n + 1),
            Family::B | Family::C => factorial(n)?.checked_mul(1u64.checked_shl(n as u32)?),
            Family::D => factorial(n)?.checked_mul(1u64.checked_shl(n as u32 - 1)?),
            Family::E => Some(match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Family::F => Some(1152),
            Family::G => Some(12),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::CartanSyntax(s.to_string()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::UnknownFamily(letter.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::CartanSyntax(s.to_string()))?;
        CartanType::new(family, rank)
    }
}
