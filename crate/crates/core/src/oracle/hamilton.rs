//! Exhaustive Hamiltonian path and cycle search on small undirected graphs.
//!
//! Plain backtracking with two cuts: the unvisited part must stay connected
//! to the current endpoint, and at most one unvisited vertex may be down to
//! a single usable neighbour (it has to be the last vertex of the path).

use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::{FlipGraph, DEFAULT_SEARCH_BUDGET};

#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    /// Largest graph accepted.
    pub max_nodes: usize,
    /// Largest number of search-tree expansions before giving up.
    pub max_expansions: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: DEFAULT_SEARCH_BUDGET,
            max_expansions: 50_000_000,
        }
    }
}

pub fn find_hamiltonian_path_bruteforce(fg: &FlipGraph) -> Result<Option<Vec<usize>>> {
    find_hamiltonian_path(&fg.neighbour_lists(), SearchBudget::default())
}

pub fn find_hamiltonian_cycle_bruteforce(fg: &FlipGraph) -> Result<Option<Vec<usize>>> {
    find_hamiltonian_cycle(&fg.neighbour_lists(), SearchBudget::default())
}

pub fn find_hamiltonian_path(adj: &[Vec<usize>], budget: SearchBudget) -> Result<Option<Vec<usize>>> {
    let n = adj.len();
    check_size(n, budget)?;
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if n == 1 {
        return Ok(Some(vec![0]));
    }
    if !connected(adj) {
        return Ok(None);
    }
    let leaves: Vec<usize> = (0..n).filter(|&i| adj[i].len() == 1).collect();
    if leaves.len() > 2 {
        return Ok(None);
    }
    // With a degree-one vertex around, some Hamiltonian path starts there.
    let starts: Vec<usize> = if leaves.is_empty() { (0..n).collect() } else { vec![leaves[0]] };
    let mut search = Backtrack::new(adj, budget, None);
    for s in starts {
        if let Some(p) = search.run(s)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Cycles need at least three vertices.
pub fn find_hamiltonian_cycle(adj: &[Vec<usize>], budget: SearchBudget) -> Result<Option<Vec<usize>>> {
    let n = adj.len();
    check_size(n, budget)?;
    if n < 3 || !connected(adj) || adj.iter().any(|a| a.len() < 2) {
        return Ok(None);
    }
    let mut search = Backtrack::new(adj, budget, Some(0));
    search.run(0)
}

fn check_size(n: usize, budget: SearchBudget) -> Result<()> {
    if n > budget.max_nodes {
        return Err(Error::Budget {
            what: "Hamiltonian search node",
            limit: budget.max_nodes,
        });
    }
    Ok(())
}

fn connected(adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

struct Backtrack<'a> {
    adj: &'a [Vec<usize>],
    visited: Vec<bool>,
    path: Vec<usize>,
    close_to: Option<usize>,
    expansions: u64,
    budget: SearchBudget,
}

impl<'a> Backtrack<'a> {
    fn new(adj: &'a [Vec<usize>], budget: SearchBudget, close_to: Option<usize>) -> Self {
        Backtrack {
            adj,
            visited: vec![false; adj.len()],
            path: Vec::new(),
            close_to,
            expansions: 0,
            budget,
        }
    }

    fn run(&mut self, start: usize) -> Result<Option<Vec<usize>>> {
        self.visited.iter_mut().for_each(|v| *v = false);
        self.path.clear();
        self.visited[start] = true;
        self.path.push(start);
        if self.extend()? {
            Ok(Some(self.path.clone()))
        } else {
            Ok(None)
        }
    }

    /// Usable neighbours of an unvisited vertex: unvisited ones, the current
    /// endpoint, and for cycles the start vertex.
    fn free_degree(&self, x: usize, end: usize) -> usize {
        self.adj[x]
            .iter()
            .filter(|&&y| !self.visited[y] || y == end || Some(y) == self.close_to)
            .count()
    }

    fn pruned(&self, end: usize) -> bool {
        let need = if self.close_to.is_some() { 2 } else { 1 };
        let mut tight = 0;
        for x in 0..self.adj.len() {
            if self.visited[x] {
                continue;
            }
            let d = self.free_degree(x, end);
            if d < need {
                return true;
            }
            if d == need {
                tight += 1;
            }
        }
        if self.close_to.is_none() && tight > 1 {
            return true;
        }
        // remaining vertices must hang together with the endpoint
        let mut seen = vec![false; self.adj.len()];
        seen[end] = true;
        let mut queue = VecDeque::from([end]);
        let mut reached = 0;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] && !self.visited[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached != self.adj.len() - self.path.len()
    }

    fn extend(&mut self) -> Result<bool> {
        self.expansions += 1;
        if self.expansions > self.budget.max_expansions {
            return Err(Error::Budget {
                what: "Hamiltonian search expansion",
                limit: self.budget.max_expansions as usize,
            });
        }
        let end = *self.path.last().expect("path starts non-empty");
        if self.path.len() == self.adj.len() {
            return Ok(match self.close_to {
                Some(s) => self.adj[end].contains(&s),
                None => true,
            });
        }
        if self.pruned(end) {
            return Ok(false);
        }
        let mut next: Vec<usize> = self.adj[end].iter().copied().filter(|&y| !self.visited[y]).collect();
        next.sort_by_key(|&y| self.free_degree(y, end));
        for y in next {
            self.visited[y] = true;
            self.path.push(y);
            if self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            self.visited[y] = false;
        }
        Ok(false)
    }
}
