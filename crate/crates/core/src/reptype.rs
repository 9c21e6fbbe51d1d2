//! Finite / tame / wild classification of connected acyclic quivers.
//!
//! `classify` recognizes the Dynkin and extended Dynkin graphs directly;
//! `tits_definiteness` decides the sign of the Tits form by exact rational
//! elimination and serves as an independent cross-check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix};
use crate::quiver::Quiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepType {
    Finite,
    Tame,
    Wild,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub kind: RepType,
    /// `A3`, `D5`, `E6`, `~A1`, `~D4`, `~E8`, ...; `None` for wild quivers.
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
}

fn result(kind: RepType, witness: Option<String>) -> ClassificationResult {
    ClassificationResult { kind, witness }
}

pub fn classify(q: &Quiver) -> Result<ClassificationResult> {
    if !q.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = q.num_vertices();
    let mult = q.edge_multiplicities();
    let max_mult = mult.iter().flatten().copied().max().unwrap_or(0);
    if max_mult >= 3 {
        return Ok(result(RepType::Wild, None));
    }
    if max_mult == 2 {
        return Ok(if n == 2 {
            result(RepType::Tame, Some("~A1".into()))
        } else {
            result(RepType::Wild, None)
        });
    }
    let edges = q.num_arrows();
    let degree: Vec<usize> = mult.iter().map(|row| row.iter().sum()).collect();
    if edges == n {
        return Ok(if degree.iter().all(|&d| d == 2) {
            result(RepType::Tame, Some(format!("~A{}", n - 1)))
        } else {
            result(RepType::Wild, None)
        });
    }
    if edges > n {
        return Ok(result(RepType::Wild, None));
    }
    // a tree from here on
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
    let wild = Ok(result(RepType::Wild, None));
    match branch.as_slice() {
        [] => Ok(result(RepType::Finite, Some(format!("A{n}")))),
        [b] if degree[*b] == 4 => {
            if n == 5 {
                Ok(result(RepType::Tame, Some("~D4".into())))
            } else {
                wild
            }
        }
        [b] if degree[*b] == 3 => {
            let mut arms: Vec<usize> = neighbours(&mult, *b).map(|w| arm_length(&mult, *b, w)).collect();
            arms.sort_unstable();
            Ok(match arms[..] {
                [1, 1, c] => result(RepType::Finite, Some(format!("D{}", c + 3))),
                [1, 2, 2] => result(RepType::Finite, Some("E6".into())),
                [1, 2, 3] => result(RepType::Finite, Some("E7".into())),
                [1, 2, 4] => result(RepType::Finite, Some("E8".into())),
                [2, 2, 2] => result(RepType::Tame, Some("~E6".into())),
                [1, 3, 3] => result(RepType::Tame, Some("~E7".into())),
                [1, 2, 5] => result(RepType::Tame, Some("~E8".into())),
                _ => result(RepType::Wild, None),
            })
        }
        [b1, b2] if degree[*b1] == 3 && degree[*b2] == 3 => {
            // each branch point carries two leaves besides the path to the other
            let leaves_only = |b: usize| neighbours(&mult, b).filter(|&w| degree[w] == 1).count() >= 2;
            if leaves_only(*b1) && leaves_only(*b2) {
                Ok(result(RepType::Tame, Some(format!("~D{}", n - 1))))
            } else {
                wild
            }
        }
        _ => wild,
    }
}

fn neighbours(mult: &[Vec<usize>], v: usize) -> impl Iterator<Item = usize> + '_ {
    (0..mult.len()).filter(move |&w| mult[v][w] > 0)
}

/// Number of vertices on the arm leaving `from` through `first` (no branching assumed).
fn arm_length(mult: &[Vec<usize>], from: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, first, 1);
    loop {
        let next: Vec<usize> = neighbours(mult, cur).filter(|&w| w != prev).collect();
        match next[..] {
            [w] => {
                prev = cur;
                cur = w;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Symmetric matrix `C` with `q(d) = d^T C d / 2`: `2` on the diagonal, minus
/// the edge multiplicity off it.
fn tits_matrix(q: &Quiver) -> Vec<Vec<i64>> {
    let mult = q.edge_multiplicities();
    (0..mult.len())
        .map(|i| {
            (0..mult.len())
                .map(|j| if i == j { 2 } else { -(mult[i][j] as i64) })
                .collect()
        })
        .collect()
}

/// Sign type of the Tits form, via symmetric elimination with diagonal pivots.
pub fn tits_definiteness(q: &Quiver) -> Definiteness {
    let mut s: Vec<Vec<BigRational>> = tits_matrix(q)
        .into_iter()
        .map(|r| r.into_iter().map(|x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut alive: Vec<usize> = (0..s.len()).collect();
    let mut degenerate = false;
    while !alive.is_empty() {
        if alive.iter().any(|&i| s[i][i].is_negative()) {
            return Definiteness::Indefinite;
        }
        let Some(k) = alive.iter().copied().find(|&i| s[i][i].is_positive()) else {
            // zero diagonal: any surviving off-diagonal entry gives a sign change
            if alive.iter().any(|&i| alive.iter().any(|&j| !s[i][j].is_zero())) {
                return Definiteness::Indefinite;
            }
            degenerate = true;
            break;
        };
        alive.retain(|&i| i != k);
        let pivot = s[k][k].clone();
        for &i in &alive {
            for &j in &alive {
                let delta = &s[i][k] * &s[k][j] / &pivot;
                s[i][j] -= delta;
            }
        }
    }
    if degenerate {
        Definiteness::PositiveSemidefinite
    } else {
        Definiteness::PositiveDefinite
    }
}

/// Basis of the radical of the Tits form (rows, over the rationals).
pub fn tits_radical(q: &Quiver) -> Matrix {
    let c = tits_matrix(q);
    let n = c.len();
    let flat: Vec<i64> = c.into_iter().flatten().collect();
    Matrix::from_i64(FieldSpec::Rational, n, n, &flat).kernel_basis()
}

/// A sink or source `ω` whose deletion leaves a connected, representation-
/// infinite quiver; the lowest id wins.
pub fn find_removable_extremal_vertex(q: &Quiver) -> Result<(String, Quiver)> {
    if !q.is_connected() {
        return Err(Error::NotApplicable("quiver is not connected".into()));
    }
    if q.num_vertices() < 3 {
        return Err(Error::NotApplicable("needs at least 3 vertices".into()));
    }
    if classify(q)?.kind != RepType::Wild {
        return Err(Error::NotApplicable("quiver is not wild".into()));
    }
    let mut candidates: Vec<usize> = (0..q.num_vertices()).filter(|&v| q.is_sink(v) || q.is_source(v)).collect();
    candidates.sort_by(|&a, &b| q.vertices()[a].cmp(&q.vertices()[b]));
    for v in candidates {
        let rest = q.delete_vertex(v);
        if rest.is_connected() && classify(&rest)?.kind != RepType::Finite {
            return Ok((q.vertices()[v].clone(), rest));
        }
    }
    panic!("no removable sink or source in a connected wild quiver: {q:?}");
}
