use crate::arborescence::Arborescence;
use crate::digraph::DiGraph;
use crate::error::{Error, Result};

use super::DEFAULT_ENUMERATION_BUDGET;

/// All arborescences of `g`, sorted by their arc lists.
pub fn enumerate_arborescences(g: &DiGraph) -> Result<Vec<Arborescence>> {
    enumerate_arborescences_with_budget(g, DEFAULT_ENUMERATION_BUDGET)
}

/// Grows the covered set one frontier arc at a time. Each node of the search
/// either takes the lowest-id frontier arc or excludes it for good; branches
/// in which some vertex can no longer be reached are cut immediately, so
/// every leaf is an arborescence and each one is produced exactly once.
pub fn enumerate_arborescences_with_budget(g: &DiGraph, budget: usize) -> Result<Vec<Arborescence>> {
    let mut search = Search {
        g,
        parent: vec![None; g.n()],
        covered: vec![false; g.n()],
        excluded: vec![false; g.arc_count()],
        out: Vec::new(),
        budget,
    };
    search.covered[g.root().0] = true;
    if search.feasible() {
        search.run(1)?;
    }
    let mut out = search.out;
    out.sort_by_cached_key(|a| a.arc_list());
    Ok(out)
}

struct Search<'a> {
    g: &'a DiGraph,
    parent: Vec<Option<crate::digraph::ArcId>>,
    covered: Vec<bool>,
    excluded: Vec<bool>,
    out: Vec<Arborescence>,
    budget: usize,
}

impl Search<'_> {
    /// Every uncovered vertex is reachable from the covered set through
    /// arcs that are not excluded.
    fn feasible(&self) -> bool {
        let mut seen = self.covered.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for (i, a) in self.g.arcs().iter().enumerate() {
                if !self.excluded[i] && seen[a.tail.0] && !seen[a.head.0] {
                    seen[a.head.0] = true;
                    changed = true;
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn run(&mut self, covered_count: usize) -> Result<()> {
        if covered_count == self.g.n() {
            if self.out.len() == self.budget {
                return Err(Error::Budget {
                    what: "enumeration",
                    limit: self.budget,
                });
            }
            self.out.push(Arborescence::from_parent_unchecked(self.parent.clone()));
            return Ok(());
        }
        let frontier = self
            .g
            .arcs()
            .iter()
            .enumerate()
            .find(|(i, a)| !self.excluded[*i] && self.covered[a.tail.0] && !self.covered[a.head.0]);
        let Some((idx, arc)) = frontier else {
            return Ok(());
        };
        let (idx, arc) = (idx, *arc);

        self.parent[arc.head.0] = Some(arc.id);
        self.covered[arc.head.0] = true;
        self.run(covered_count + 1)?;
        self.covered[arc.head.0] = false;
        self.parent[arc.head.0] = None;

        self.excluded[idx] = true;
        if self.feasible() {
            self.run(covered_count)?;
        }
        self.excluded[idx] = false;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arborescence::is_arborescence;

    #[test]
    fn intro_example_has_two() {
        let g = DiGraph::parse("3 3 0\n0 1\n1 2\n0 2").unwrap();
        let all = enumerate_arborescences(&g).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|a| is_arborescence(&g, a.parent_map())));
    }

    #[test]
    fn unreachable_vertex_gives_nothing() {
        let g = DiGraph::new(3, 0, [(0, 1), (2, 1)]).unwrap();
        assert!(enumerate_arborescences(&g).unwrap().is_empty());
    }

    #[test]
    fn single_vertex() {
        let g = DiGraph::new(1, 0, []).unwrap();
        assert_eq!(enumerate_arborescences(&g).unwrap(), vec![Arborescence::trivial()]);
    }

    #[test]
    fn budget_is_enforced() {
        let arcs = (0..5).flat_map(|i| (0..5).filter(move |&j| j != i).map(move |j| (i, j)));
        let g = DiGraph::new(5, 0, arcs).unwrap();
        assert_eq!(enumerate_arborescences(&g).unwrap().len(), 125);
        assert!(matches!(
            enumerate_arborescences_with_budget(&g, 100),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn output_is_canonically_sorted_and_distinct() {
        let g = DiGraph::new(4, 0, [(0, 1), (0, 2), (1, 2), (2, 1), (1, 3), (2, 3), (3, 1)]).unwrap();
        let all = enumerate_arborescences(&g).unwrap();
        let keys: Vec<_> = all.iter().map(|a| a.arc_list()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
    }
}
