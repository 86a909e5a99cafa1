use std::collections::HashMap;

use crate::arborescence::{Arborescence, Flip};
use crate::digraph::{ArcId, DiGraph, VertexId};
use crate::error::Result;

use super::{enumerate_arborescences_with_budget, DEFAULT_ENUMERATION_BUDGET};

/// Undirected graph on all arborescences; two are adjacent iff their parent
/// maps differ at exactly one vertex.
#[derive(Clone, Debug)]
pub struct FlipGraph {
    pub nodes: Vec<Arborescence>,
    /// Sorted by neighbour index; the flip turns this node into the neighbour.
    pub adjacency: Vec<Vec<(usize, Flip)>>,
    index: HashMap<Arborescence, usize>,
}

impl FlipGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn index_of(&self, a: &Arborescence) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[i].iter().map(|&(j, _)| j)
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search_by_key(&j, |&(k, _)| k).is_ok()
    }

    /// Plain adjacency lists, for the Hamiltonian search.
    pub fn neighbour_lists(&self) -> Vec<Vec<usize>> {
        (0..self.len()).map(|i| self.neighbours(i).collect()).collect()
    }

    /// Each undirected edge once, as `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Flip)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, adj)| adj.iter().filter(move |(j, _)| *j > i).map(move |&(j, f)| (i, j, f)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Two-colours the graph if it is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.len()];
        for s in 0..self.len() {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                let c = colour[x]?;
                for y in self.neighbours(x) {
                    match colour[y] {
                        None => {
                            colour[y] = Some(!c);
                            stack.push(y);
                        }
                        Some(cy) if cy == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        colour.into_iter().collect()
    }
}

pub fn build_flip_graph(g: &DiGraph) -> Result<FlipGraph> {
    build_flip_graph_with_budget(g, DEFAULT_ENUMERATION_BUDGET)
}

pub fn build_flip_graph_with_budget(g: &DiGraph, budget: usize) -> Result<FlipGraph> {
    let nodes = enumerate_arborescences_with_budget(g, budget)?;
    Ok(flip_graph_of(nodes))
}

/// Groups arborescences by "parent map with one vertex blanked out"; each
/// group is a clique of mutually adjacent arborescences.
pub(crate) fn flip_graph_of(nodes: Vec<Arborescence>) -> FlipGraph {
    let n = nodes.first().map_or(0, |a| a.n());
    let mut groups: HashMap<(usize, Vec<Option<ArcId>>), Vec<usize>> = HashMap::new();
    for (i, a) in nodes.iter().enumerate() {
        for v in 0..n {
            if a.parent_map()[v].is_none() {
                continue;
            }
            let mut key = a.parent_map().to_vec();
            key[v] = None;
            groups.entry((v, key)).or_default().push(i);
        }
    }
    let mut adjacency: Vec<Vec<(usize, Flip)>> = vec![Vec::new(); nodes.len()];
    for ((v, _), members) in groups {
        for &i in &members {
            for &j in &members {
                if i != j {
                    let flip = Flip {
                        removed: nodes[i].parent_map()[v].expect("non-root slot"),
                        added: nodes[j].parent_map()[v].expect("non-root slot"),
                        pivot: VertexId(v),
                    };
                    adjacency[i].push((j, flip));
                }
            }
        }
    }
    for adj in &mut adjacency {
        adj.sort_by_key(|&(j, _)| j);
    }
    let index = nodes.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    FlipGraph {
        nodes,
        adjacency,
        index,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arborescence::legal_flips;

    #[test]
    fn bidirected_five_cycle_is_a_path() {
        let arcs = (0..5).flat_map(|i| [(i, (i + 1) % 5), ((i + 1) % 5, i)]);
        let g = DiGraph::new(5, 0, arcs).unwrap();
        let fg = build_flip_graph(&g).unwrap();
        assert_eq!(fg.len(), 5);
        assert_eq!(fg.edge_count(), 4);
        let mut degrees: Vec<usize> = (0..5).map(|i| fg.degree(i)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn degrees_match_legal_flips() {
        let g = DiGraph::new(4, 0, [(0, 1), (0, 2), (1, 2), (2, 1), (1, 3), (2, 3), (3, 1), (0, 3)]).unwrap();
        let fg = build_flip_graph(&g).unwrap();
        for (i, a) in fg.nodes.iter().enumerate() {
            assert_eq!(fg.degree(i), legal_flips(&g, a).len());
        }
        for (i, j, f) in fg.edges() {
            assert_eq!(fg.nodes[i].diff_vertex(&fg.nodes[j]), Some(f.pivot));
        }
    }
}
