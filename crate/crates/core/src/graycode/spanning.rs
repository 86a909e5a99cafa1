//! Pivot Gray codes for spanning trees of the complete graph, read off the
//! arborescences of the bidirected complete graph rooted at vertex 0.

use std::collections::BTreeSet;

use crate::digraph::DiGraph;
use crate::error::{Error, Result};

use super::engine::gray_code_clique_support;

/// An undirected edge `(a, b)` with `a < b`.
pub type Edge = (usize, usize);

#[derive(Clone, Debug)]
pub struct SpanningTreeCode {
    pub n: usize,
    /// Each tree as its sorted edge list.
    pub trees: Vec<Vec<Edge>>,
}

pub fn bidirected_complete(n: usize) -> Result<DiGraph> {
    if n == 0 {
        return Err(Error::Precondition("K_n needs n >= 1".into()));
    }
    let arcs = (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| [(i, j), (j, i)]));
    DiGraph::new(n, 0, arcs)
}

pub fn spanning_tree_pivot_gray_code(n: usize) -> Result<SpanningTreeCode> {
    let g = bidirected_complete(n)?;
    let path = gray_code_clique_support(&g)?;
    let trees = path
        .steps
        .iter()
        .map(|a| {
            let mut edges: Vec<Edge> = a
                .arcs()
                .map(|id| {
                    let arc = g.arc(id).expect("arc of the path's graph");
                    (arc.tail.0.min(arc.head.0), arc.tail.0.max(arc.head.0))
                })
                .collect();
            edges.sort();
            edges
        })
        .collect();
    Ok(SpanningTreeCode { n, trees })
}

/// Distinct trees, and every step removes one edge and adds one edge that
/// share an endpoint.
pub fn is_strong_revolving_door(trees: &[Vec<Edge>]) -> bool {
    let sets: Vec<BTreeSet<Edge>> = trees.iter().map(|t| t.iter().copied().collect()).collect();
    let distinct: BTreeSet<&BTreeSet<Edge>> = sets.iter().collect();
    if distinct.len() != sets.len() {
        return false;
    }
    sets.windows(2).all(|w| {
        let out: Vec<&Edge> = w[0].difference(&w[1]).collect();
        let inn: Vec<&Edge> = w[1].difference(&w[0]).collect();
        match (out.as_slice(), inn.as_slice()) {
            ([a], [b]) => a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1,
            _ => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_complete_graphs() {
        assert_eq!(spanning_tree_pivot_gray_code(1).unwrap().trees, vec![Vec::<Edge>::new()]);
        assert_eq!(spanning_tree_pivot_gray_code(2).unwrap().trees, vec![vec![(0, 1)]]);
        let c4 = spanning_tree_pivot_gray_code(4).unwrap();
        assert_eq!(c4.trees.len(), 16);
        assert!(is_strong_revolving_door(&c4.trees));
    }

    #[test]
    fn revolving_door_rejects_non_pivot_exchange() {
        let trees = vec![vec![(0, 1), (2, 3)], vec![(0, 2), (1, 3)]];
        assert!(!is_strong_revolving_door(&trees));
    }
}
