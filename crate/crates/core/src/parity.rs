//! Signs of arborescences in graphs with in-degree at most two.
//!
//! Giving the two arcs into each vertex opposite signs makes the product of
//! the arc signs flip with every arc flip, so the flip graph is bipartite
//! and the class difference is the determinant of a signed Laplacian.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arborescence::{legal_flips, Arborescence};
use crate::digraph::{is_built_on, ArcId, DiGraph, VertexId};
use crate::error::{Error, Result};
use crate::oracle::enumerate_arborescences;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcWeighting {
    /// Arcs into the root carry no weight.
    pub weight: BTreeMap<ArcId, i8>,
}

impl ArcWeighting {
    /// Validates a hand-made weighting: a lone in-arc weighs +1, two in-arcs
    /// weigh +1 and -1.
    pub fn from_map(g: &DiGraph, weight: BTreeMap<ArcId, i8>) -> Result<Self> {
        for v in g.vertices().filter(|&v| v != g.root()) {
            let ins: Vec<ArcId> = g.in_arcs(v).map(|a| a.id).collect();
            let ws: Vec<i8> = ins
                .iter()
                .map(|id| weight.get(id).copied().ok_or(Error::UnknownArc(*id)))
                .collect::<Result<_>>()?;
            let ok = match ws.as_slice() {
                [] => true,
                [w] => *w == 1,
                [a, b] => a * b == -1,
                _ => return Err(in_degree_error(v, ws.len())),
            };
            if !ok {
                return Err(Error::Precondition(format!("weights {ws:?} on the arcs into vertex {v}")));
            }
        }
        Ok(ArcWeighting { weight })
    }

    pub fn get(&self, a: ArcId) -> Option<i8> {
        self.weight.get(&a).copied()
    }
}

fn in_degree_error(v: VertexId, d: usize) -> Error {
    Error::Precondition(format!("vertex {v} has in-degree {d}; at most two is supported"))
}

/// The lower arc id of each pair gets +1.
pub fn assign_arc_weights(g: &DiGraph) -> Result<ArcWeighting> {
    let mut weight = BTreeMap::new();
    for v in g.vertices().filter(|&v| v != g.root()) {
        let mut ins: Vec<ArcId> = g.in_arcs(v).map(|a| a.id).collect();
        ins.sort();
        match ins.as_slice() {
            [] => {}
            [a] => {
                weight.insert(*a, 1);
            }
            [a, b] => {
                weight.insert(*a, 1);
                weight.insert(*b, -1);
            }
            _ => return Err(in_degree_error(v, ins.len())),
        }
    }
    Ok(ArcWeighting { weight })
}

pub fn tree_weight(a: &Arborescence, w: &ArcWeighting) -> Result<i8> {
    a.arcs()
        .try_fold(1i8, |acc, id| w.get(id).map(|x| acc * x).ok_or(Error::UnknownArc(id)))
}

/// `(positive, negative)` class sizes under the default weighting.
pub fn bipartition_classes(g: &DiGraph) -> Result<(usize, usize)> {
    let w = assign_arc_weights(g)?;
    let mut plus = 0;
    let mut minus = 0;
    for a in enumerate_arborescences(g)? {
        if tree_weight(&a, &w)? > 0 {
            plus += 1;
        } else {
            minus += 1;
        }
    }
    Ok((plus, minus))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedLaplacian {
    /// Non-root vertices in increasing order; row and column labels.
    pub vertices: Vec<VertexId>,
    pub matrix: Vec<Vec<i64>>,
}

/// `L[i][j] = -w(i->j)`, diagonal balancing each column, root row and
/// column removed.
pub fn signed_laplacian(g: &DiGraph, w: &ArcWeighting) -> Result<SignedLaplacian> {
    let vertices: Vec<VertexId> = g.vertices().filter(|&v| v != g.root()).collect();
    let index = |v: VertexId| vertices.binary_search(&v).ok();
    let k = vertices.len();
    let mut matrix = vec![vec![0i64; k]; k];
    for (j, &v) in vertices.iter().enumerate() {
        let d = g.in_degree(v);
        if d > 2 {
            return Err(in_degree_error(v, d));
        }
        for a in g.in_arcs(v) {
            let x = i64::from(w.get(a.id).ok_or(Error::UnknownArc(a.id))?);
            matrix[j][j] += x;
            if let Some(i) = index(a.tail) {
                matrix[i][j] -= x;
            }
        }
    }
    Ok(SignedLaplacian { vertices, matrix })
}

/// Peels off columns with a single nonzero entry until the matrix is empty,
/// has a zero column, or has a `+1`/`-1` pair in every column.
pub fn determinant_by_expansion(matrix: &[Vec<i64>]) -> Result<i64> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::Precondition("matrix is not square".into()));
    }
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..n).collect();
    let mut sign = 1i64;
    loop {
        if rows.is_empty() {
            return Ok(sign);
        }
        if rows.len() == 1 {
            return Ok(sign * matrix[rows[0]][cols[0]]);
        }
        let mut single = None;
        for (cj, &j) in cols.iter().enumerate() {
            let nz: Vec<(usize, i64)> = rows
                .iter()
                .enumerate()
                .map(|(ri, &i)| (ri, matrix[i][j]))
                .filter(|&(_, x)| x != 0)
                .collect();
            if nz.iter().any(|&(_, x)| x.abs() != 1) {
                return Err(Error::Precondition(format!("column {j} has an entry outside -1..=1")));
            }
            match nz.as_slice() {
                [] => return Ok(0),
                [(ri, x)] => {
                    if single.is_none() {
                        single = Some((*ri, cj, *x));
                    }
                }
                [(_, a), (_, b)] if a + b == 0 => {}
                [_, _] => return Err(Error::Precondition(format!("column {j} has two nonzeros of equal sign"))),
                _ => return Err(Error::Precondition(format!("column {j} has more than two nonzeros"))),
            }
        }
        let Some((ri, cj, x)) = single else {
            // rows sum to zero
            return Ok(0);
        };
        if (ri + cj) % 2 == 1 {
            sign = -sign;
        }
        sign *= x;
        rows.remove(ri);
        cols.remove(cj);
    }
}

/// The arc of the only legal flip of `a`, if it has exactly one. In that
/// case the graph without that arc is built on `a`; a failure of this check
/// is reported as an inconsistency.
pub fn check_degree_one(g: &DiGraph, a: &Arborescence) -> Result<Option<ArcId>> {
    let flips = legal_flips(g, a);
    let [flip] = flips.as_slice() else {
        return Ok(None);
    };
    let rest = g.delete_arc(flip.added)?;
    let tree = g.restrict_to(a.arcs());
    if !is_built_on(&rest, &tree)? {
        return Err(Error::inconsistency(format!(
            "arborescence has the single flip {} but the rest of the graph is not built on it",
            flip.added
        )));
    }
    Ok(Some(flip.added))
}

#[derive(Clone, Debug, Serialize)]
pub struct ParityReport {
    pub total: usize,
    pub positive: usize,
    pub negative: usize,
    pub determinant: i64,
    pub weighting: ArcWeighting,
    pub verdicts: Vec<String>,
}

pub fn analyze(g: &DiGraph) -> Result<ParityReport> {
    let weighting = assign_arc_weights(g)?;
    let (positive, negative) = bipartition_classes(g)?;
    let lap = signed_laplacian(g, &weighting)?;
    let determinant = determinant_by_expansion(&lap.matrix)?;
    let total = positive + negative;
    let mut verdicts = vec!["flip graph is bipartite".to_string()];
    if total % 2 == 1 {
        verdicts.push("Hamiltonian cycle impossible (bipartite, odd order)".into());
    }
    if positive.abs_diff(negative) > 1 {
        verdicts.push("Hamiltonian path impossible (classes differ by more than one)".into());
    }
    Ok(ParityReport {
        total,
        positive,
        negative,
        determinant,
        weighting,
        verdicts,
    })
}
