//! Interchangeable ways of producing a pivot Gray code, looked up by name.

use std::collections::BTreeMap;

use crate::digraph::DiGraph;
use crate::error::{Error, Result};
use crate::graycode::{gray_code_with_options, GrayPath, Options, Outcome};
use crate::oracle::{build_flip_graph_with_budget, find_hamiltonian_path, SearchBudget, DEFAULT_ENUMERATION_BUDGET};

#[derive(Clone, Copy, Debug)]
pub struct StrategyContext {
    pub fallback_bruteforce: bool,
    pub enumeration_budget: usize,
    pub search: SearchBudget,
}

impl Default for StrategyContext {
    fn default() -> Self {
        StrategyContext {
            fallback_bruteforce: false,
            enumeration_budget: DEFAULT_ENUMERATION_BUDGET,
            search: SearchBudget::default(),
        }
    }
}

pub trait GrayCodeStrategy {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn generate(&self, g: &DiGraph, ctx: &StrategyContext) -> Result<Outcome>;
}

/// The inductive construction; needs the support minus the root to be a clique.
pub struct CliqueSupport;

impl GrayCodeStrategy for CliqueSupport {
    fn name(&self) -> &'static str {
        "clique-support"
    }

    fn description(&self) -> &'static str {
        "inductive construction for graphs whose support minus the root is a clique"
    }

    fn generate(&self, g: &DiGraph, ctx: &StrategyContext) -> Result<Outcome> {
        gray_code_with_options(
            g,
            &Options {
                fallback_bruteforce: ctx.fallback_bruteforce,
            },
        )
    }
}

/// Backtracking over the whole flip graph; any digraph, small ones only.
pub struct BruteForce;

impl GrayCodeStrategy for BruteForce {
    fn name(&self) -> &'static str {
        "bruteforce"
    }

    fn description(&self) -> &'static str {
        "exhaustive Hamiltonian path search in the flip graph"
    }

    fn generate(&self, g: &DiGraph, ctx: &StrategyContext) -> Result<Outcome> {
        let fg = build_flip_graph_with_budget(g, ctx.enumeration_budget)?;
        let order = find_hamiltonian_path(&fg.neighbour_lists(), ctx.search)?.ok_or(Error::NoHamiltonianPath)?;
        let steps = order.into_iter().map(|i| fg.nodes[i].clone()).collect();
        let note = format!("exhaustive search over {} arborescences", fg.len());
        Ok(Outcome {
            path: GrayPath::new(steps, vec![note])?,
            counterexample: None,
        })
    }
}

pub struct StrategyRegistry {
    strategies: BTreeMap<&'static str, Box<dyn GrayCodeStrategy>>,
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        let mut r = StrategyRegistry::empty();
        r.register(Box::new(CliqueSupport));
        r.register(Box::new(BruteForce));
        r
    }
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        StrategyRegistry {
            strategies: BTreeMap::new(),
        }
    }

    /// Replaces any strategy of the same name.
    pub fn register(&mut self, s: Box<dyn GrayCodeStrategy>) {
        self.strategies.insert(s.name(), s);
    }

    pub fn get(&self, name: &str) -> Option<&dyn GrayCodeStrategy> {
        self.strategies.get(name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.strategies.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn GrayCodeStrategy> + '_ {
        self.strategies.values().map(|s| s.as_ref())
    }

    pub fn generate(&self, name: &str, g: &DiGraph, ctx: &StrategyContext) -> Result<Outcome> {
        let s = self.get(name).ok_or_else(|| {
            let known: Vec<_> = self.names().collect();
            Error::Precondition(format!("unknown strategy {name:?}; known: {}", known.join(", ")))
        })?;
        s.generate(g, ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::verify_gray_code;

    #[test]
    fn both_strategies_agree_on_length() {
        let g = DiGraph::new(4, 0, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]).unwrap();
        let reg = StrategyRegistry::default();
        for name in ["clique-support", "bruteforce"] {
            let out = reg.generate(name, &g, &StrategyContext::default()).unwrap();
            assert_eq!(out.path.len(), 7, "{name}");
            assert!(verify_gray_code(&g, &out.path.steps).passed(), "{name}");
        }
    }

    #[test]
    fn unknown_name() {
        let g = DiGraph::new(1, 0, []).unwrap();
        let err = StrategyRegistry::default().generate("nope", &g, &StrategyContext::default());
        assert!(matches!(err, Err(Error::Precondition(m)) if m.contains("bruteforce")));
    }

    #[test]
    fn only_bruteforce_handles_sparse_support() {
        let g = DiGraph::new(5, 0, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4), (2, 4), (4, 1)]).unwrap();
        let reg = StrategyRegistry::default();
        let ctx = StrategyContext::default();
        assert!(matches!(reg.generate("clique-support", &g, &ctx), Err(Error::Precondition(_))));
        let out = reg.generate("bruteforce", &g, &ctx).unwrap();
        assert_eq!(out.path.len(), 13);
        assert!(verify_gray_code(&g, &out.path.steps).passed());
    }
}
