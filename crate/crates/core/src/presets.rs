//! Built-in Coxeter matrices and the JSON matrix-file format.

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, INFINITY};
use crate::error::{Error, Result};

/// On-disk form of a Coxeter matrix: `{"generators": [...], "m": [[...]]}`
/// with `0` meaning infinity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub generators: Vec<String>,
    pub m: Vec<Vec<u32>>,
}

impl MatrixFile {
    pub fn into_system(self) -> Result<CoxeterSystem> {
        CoxeterSystem::new(self.generators, self.m)
    }
}

impl CoxeterSystem {
    pub fn from_json(text: &str) -> Result<CoxeterSystem> {
        let file: MatrixFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidMatrix(e.to_string()))?;
        file.into_system()
    }

    pub fn to_matrix_file(&self) -> MatrixFile {
        MatrixFile {
            generators: self.names().to_vec(),
            m: self.matrix().to_vec(),
        }
    }

    /// Looks up a preset by name: `A3`, `B3`, `D4`, `F4`, `H3`, `H4`,
    /// `I2:5`, `I2:inf`, or affine `~A2` (also spelled `A~2`).
    pub fn from_type(name: &str) -> Result<CoxeterSystem> {
        let bad = || Error::InvalidMatrix(format!("unknown Coxeter type '{name}'"));
        let name = name.trim();
        if let Some(m) = name.strip_prefix("I2:").or_else(|| name.strip_prefix("I2_")) {
            let m = match m {
                "inf" | "∞" | "0" => INFINITY,
                m => m.parse::<u32>().map_err(|_| bad())?,
            };
            if m == 1 {
                return Err(bad());
            }
            return Ok(dihedral(m));
        }
        let (affine, rest) = match name.strip_prefix('~') {
            Some(rest) => (true, rest.to_string()),
            None if name.len() > 1 && name[1..].starts_with('~') => {
                (true, format!("{}{}", &name[..1], &name[2..]))
            }
            None => (false, name.to_string()),
        };
        let mut chars = rest.chars();
        let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        if affine {
            return match family {
                'A' if n >= 1 => Ok(affine_a(n)),
                _ => Err(bad()),
            };
        }
        match (family, n) {
            ('A', n) if n >= 1 => Ok(type_a(n)),
            ('B', n) | ('C', n) if n >= 2 => Ok(type_b(n)),
            ('D', n) if n >= 4 => Ok(type_d(n)),
            ('F', 4) => Ok(type_f4()),
            ('H', 3) => Ok(type_h(3)),
            ('H', 4) => Ok(type_h(4)),
            _ => Err(bad()),
        }
    }
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("s{i}")).collect()
}

/// Matrix with `2` everywhere off the diagonal.
fn commuting(n: usize) -> Vec<Vec<u32>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1 } else { 2 }).collect())
        .collect()
}

fn set(m: &mut [Vec<u32>], i: usize, j: usize, value: u32) {
    m[i][j] = value;
    m[j][i] = value;
}

fn build(n: usize, edges: &[(usize, usize, u32)]) -> CoxeterSystem {
    let mut m = commuting(n);
    for &(i, j, v) in edges {
        set(&mut m, i, j, v);
    }
    CoxeterSystem::new(names(n), m).expect("preset matrices are valid")
}

fn path(n: usize) -> Vec<(usize, usize, u32)> {
    (1..n).map(|i| (i - 1, i, 3)).collect()
}

/// Type `A_n` (the symmetric group on `n + 1` letters), `s_i = (i, i+1)`.
pub fn type_a(n: usize) -> CoxeterSystem {
    build(n, &path(n))
}

/// Type `B_n`, with the order-4 bond between `s_{n-1}` and `s_n`.
pub fn type_b(n: usize) -> CoxeterSystem {
    let mut edges = path(n);
    edges.last_mut().expect("rank at least 2").2 = 4;
    build(n, &edges)
}

/// Type `D_n`: a path `s_1 .. s_{n-1}` with `s_n` attached to `s_{n-2}`.
pub fn type_d(n: usize) -> CoxeterSystem {
    let mut edges = path(n - 1);
    edges.push((n - 3, n - 1, 3));
    build(n, &edges)
}

pub fn type_f4() -> CoxeterSystem {
    build(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)])
}

/// `H_3` or `H_4`, with the order-5 bond between `s_1` and `s_2`.
pub fn type_h(n: usize) -> CoxeterSystem {
    let mut edges = path(n);
    edges[0].2 = 5;
    build(n, &edges)
}

/// The dihedral group `I_2(m)`; `m = 0` gives the infinite dihedral group.
pub fn dihedral(m: u32) -> CoxeterSystem {
    build(2, &[(0, 1, m)])
}

/// Affine type `~A_n` on generators `s0 .. sn` arranged in a cycle.
/// `~A_1` is the infinite dihedral group.
pub fn affine_a(n: usize) -> CoxeterSystem {
    let names = (0..=n).map(|i| format!("s{i}")).collect();
    let mut m = commuting(n + 1);
    if n == 1 {
        set(&mut m, 0, 1, INFINITY);
    } else {
        for i in 0..=n {
            set(&mut m, i, (i + 1) % (n + 1), 3);
        }
    }
    CoxeterSystem::new(names, m).expect("preset matrices are valid")
}
