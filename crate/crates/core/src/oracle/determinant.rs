use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::digraph::DiGraph;

/// In-degree Laplacian with the root row and column removed, indexed by the
/// non-root vertices in increasing order. Parallel arcs add up.
pub fn laplacian(g: &DiGraph) -> Vec<Vec<i64>> {
    let idx: Vec<Option<usize>> = {
        let mut next = 0;
        g.vertices()
            .map(|v| {
                if v == g.root() {
                    None
                } else {
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect()
    };
    let k = g.n() - 1;
    let mut m = vec![vec![0i64; k]; k];
    for a in g.arcs() {
        let Some(j) = idx[a.head.0] else { continue };
        m[j][j] += 1;
        if let Some(i) = idx[a.tail.0] {
            m[i][j] -= 1;
        }
    }
    m
}

/// Fraction-free Gaussian elimination over the integers.
pub fn determinant_bareiss(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Number of arborescences via the matrix-tree theorem with unit weights.
pub fn count_arborescences_matrix_tree(g: &DiGraph) -> BigUint {
    let det = determinant_bareiss(&laplacian(g));
    debug_assert!(!det.is_negative());
    det.magnitude().clone()
}
