use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arborescence::{is_arborescence, Arborescence};
use crate::digraph::{ArcId, DiGraph};

use super::count_arborescences_matrix_tree;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// First offending position or a count mismatch; empty on success.
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{mark} {}", c.name)?;
            } else {
                writeln!(f, "{mark} {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

pub fn verify_gray_code(g: &DiGraph, seq: &[Arborescence]) -> VerifyReport {
    let lists: Vec<Vec<ArcId>> = seq.iter().map(|a| a.arc_list()).collect();
    verify_arc_lists(g, &lists)
}

/// Same checks on raw arc lists, which need not describe arborescences at
/// all (or even use arcs of `g`).
pub fn verify_arc_lists(g: &DiGraph, seq: &[Vec<ArcId>]) -> VerifyReport {
    let parents: Vec<Option<Vec<Option<ArcId>>>> = seq.iter().map(|arcs| parent_map(g, arcs)).collect();

    let valid = match parents
        .iter()
        .position(|p| p.as_ref().is_none_or(|p| !is_arborescence(g, p)))
    {
        None => ok("valid"),
        Some(i) => fail("valid", format!("element {i} is not an arborescence")),
    };

    let mut seen = HashSet::new();
    let distinct = match seq.iter().position(|arcs| {
        let mut key = arcs.clone();
        key.sort();
        !seen.insert(key)
    }) {
        None => ok("distinct"),
        Some(i) => fail("distinct", format!("element {i} repeats an earlier one")),
    };

    let expected = count_arborescences_matrix_tree(g);
    let covers = if distinct.passed && valid.passed && BigUint::from(seq.len()) == expected {
        ok("covers")
    } else {
        fail("covers", format!("{} elements, {} arborescences", seq.len(), expected))
    };

    let mut single = ok("single_change");
    let mut pivot = ok("pivot");
    for (i, w) in parents.windows(2).enumerate() {
        let (Some(a), Some(b)) = (&w[0], &w[1]) else {
            single = fail("single_change", format!("step {i} involves a malformed element"));
            pivot = fail("pivot", format!("step {i} involves a malformed element"));
            break;
        };
        let differing: Vec<usize> = (0..a.len()).filter(|&v| a[v] != b[v]).collect();
        if differing.len() != 1 && single.passed {
            single = fail("single_change", format!("step {i} changes {} parent arcs", differing.len()));
        }
        // the pivot check looks at arcs, not slots: removed and added arc must share a head
        let sa: HashSet<ArcId> = seq[i].iter().copied().collect();
        let sb: HashSet<ArcId> = seq[i + 1].iter().copied().collect();
        let removed: Vec<ArcId> = sa.difference(&sb).copied().collect();
        let added: Vec<ArcId> = sb.difference(&sa).copied().collect();
        let shares_head = removed.len() == 1
            && added.len() == 1
            && match (g.arc(removed[0]), g.arc(added[0])) {
                (Some(x), Some(y)) => x.head == y.head,
                _ => false,
            };
        if !shares_head && pivot.passed {
            pivot = fail("pivot", format!("step {i} is not a pivot exchange"));
        }
    }

    VerifyReport {
        checks: vec![valid, distinct, covers, single, pivot],
    }
}

fn parent_map(g: &DiGraph, arcs: &[ArcId]) -> Option<Vec<Option<ArcId>>> {
    let mut parent = vec![None; g.n()];
    for &id in arcs {
        let arc = g.arc(id)?;
        if parent[arc.head.0].replace(id).is_some() {
            return None;
        }
    }
    Some(parent)
}

fn ok(name: &'static str) -> CheckResult {
    CheckResult {
        name,
        passed: true,
        detail: String::new(),
    }
}

fn fail(name: &'static str, detail: String) -> CheckResult {
    CheckResult {
        name,
        passed: false,
        detail,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_on_tree_graph() {
        let g = DiGraph::new(3, 0, [(0, 1), (1, 2)]).unwrap();
        let r = verify_arc_lists(&g, &[vec![ArcId(0), ArcId(1)]]);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn repeated_element_fails_distinct() {
        let g = DiGraph::parse("3 3 0\n0 1\n1 2\n0 2").unwrap();
        let a = vec![ArcId(0), ArcId(1)];
        let r = verify_arc_lists(&g, &[a.clone(), a]);
        assert!(!r.check("distinct").unwrap().passed);
        assert!(!r.check("covers").unwrap().passed);
    }

    #[test]
    fn intro_example_path() {
        let g = DiGraph::parse("3 3 0\n0 1\n1 2\n0 2").unwrap();
        let r = verify_arc_lists(&g, &[vec![ArcId(0), ArcId(1)], vec![ArcId(0), ArcId(2)]]);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn non_pivot_step_is_caught() {
        // 0->1, 0->2, 1->2, 2->1: swapping both parents at once is two changes
        let g = DiGraph::new(3, 0, [(0, 1), (0, 2), (1, 2), (2, 1)]).unwrap();
        let r = verify_arc_lists(&g, &[vec![ArcId(0), ArcId(2)], vec![ArcId(1), ArcId(3)]]);
        assert!(!r.check("single_change").unwrap().passed);
        assert!(!r.check("pivot").unwrap().passed);
        assert!(!r.check("covers").unwrap().passed);
    }
}
