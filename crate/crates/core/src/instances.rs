//! Named instances and seeded random families.
//!
//! Instance names on the command line: `bidirected-cycle:N`,
//! `bidirected-complete:N`, `random-tournament:N:SEED`, the fixed names in
//! [`NAMED`], or a path to a graph file.

use std::fmt;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::DiGraph;
use crate::error::{Error, Result};
pub use crate::graycode::bidirected_complete;

pub const NAMED: [&str; 5] = ["fig-graph13", "fig-bipartite7", "fig-flipG1", "fig-contraction", "intro-3vertex"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceSpec {
    File(PathBuf),
    BidirectedCycle(usize),
    BidirectedComplete(usize),
    Graph13,
    Bipartite7,
    FlipG1,
    Contraction,
    Intro3Vertex,
    RandomTournament { n: usize, seed: u64 },
}

impl InstanceSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse {
            line: 0,
            message: format!("instance {s:?}: {m}"),
        };
        let num = |x: &str| x.parse::<u64>().map_err(|_| bad("expected a non-negative integer"));
        let parts: Vec<&str> = s.split(':').collect();
        let spec = match parts.as_slice() {
            ["bidirected-cycle", n] => InstanceSpec::BidirectedCycle(num(n)? as usize),
            ["bidirected-complete", n] => InstanceSpec::BidirectedComplete(num(n)? as usize),
            ["random-tournament", n, seed] => InstanceSpec::RandomTournament {
                n: num(n)? as usize,
                seed: num(seed)?,
            },
            ["bidirected-cycle" | "bidirected-complete" | "random-tournament", ..] => {
                return Err(bad("wrong number of parameters"))
            }
            ["fig-graph13"] => InstanceSpec::Graph13,
            ["fig-bipartite7"] => InstanceSpec::Bipartite7,
            ["fig-flipG1"] => InstanceSpec::FlipG1,
            ["fig-contraction"] => InstanceSpec::Contraction,
            ["intro-3vertex"] => InstanceSpec::Intro3Vertex,
            _ => InstanceSpec::File(PathBuf::from(s)),
        };
        Ok(spec)
    }

    pub fn generate(&self) -> Result<DiGraph> {
        match self {
            InstanceSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                    line: 0,
                    message: format!("{}: {e}", path.display()),
                })?;
                DiGraph::parse(&text)
            }
            InstanceSpec::BidirectedCycle(n) => bidirected_cycle(*n),
            InstanceSpec::BidirectedComplete(n) => bidirected_complete(*n),
            // vertices 1..5 shifted down by one
            InstanceSpec::Graph13 => {
                DiGraph::new(5, 0, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4), (2, 4), (4, 1)])
            }
            InstanceSpec::Bipartite7 => DiGraph::new(4, 0, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]),
            // r, v0..v3 become 0, 1..4
            InstanceSpec::FlipG1 => {
                DiGraph::new(5, 0, [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4), (3, 1), (4, 2), (1, 4)])
            }
            InstanceSpec::Contraction => DiGraph::new(4, 0, [(0, 1), (0, 2), (1, 3), (2, 3)]),
            InstanceSpec::Intro3Vertex => DiGraph::new(3, 0, [(0, 1), (1, 2), (0, 2)]),
            InstanceSpec::RandomTournament { n, seed } => random_tournament(*n, *seed),
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSpec::File(p) => write!(f, "{}", p.display()),
            InstanceSpec::BidirectedCycle(n) => write!(f, "bidirected-cycle:{n}"),
            InstanceSpec::BidirectedComplete(n) => write!(f, "bidirected-complete:{n}"),
            InstanceSpec::Graph13 => f.write_str("fig-graph13"),
            InstanceSpec::Bipartite7 => f.write_str("fig-bipartite7"),
            InstanceSpec::FlipG1 => f.write_str("fig-flipG1"),
            InstanceSpec::Contraction => f.write_str("fig-contraction"),
            InstanceSpec::Intro3Vertex => f.write_str("intro-3vertex"),
            InstanceSpec::RandomTournament { n, seed } => write!(f, "random-tournament:{n}:{seed}"),
        }
    }
}

pub fn generate(spec: &str) -> Result<DiGraph> {
    InstanceSpec::parse(spec)?.generate()
}

fn need_vertex(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition("an instance needs at least one vertex".into()));
    }
    Ok(())
}

/// Both directions of every cycle edge, rooted at 0. Two vertices give one
/// bigon, one vertex no arcs.
pub fn bidirected_cycle(n: usize) -> Result<DiGraph> {
    need_vertex(n)?;
    let edges: Vec<(usize, usize)> = match n {
        1 => vec![],
        2 => vec![(0, 1)],
        _ => (0..n).map(|i| (i, (i + 1) % n)).collect(),
    };
    DiGraph::new(n, 0, edges.into_iter().flat_map(|(a, b)| [(a, b), (b, a)]))
}

/// One seeded coin per pair `i < j`: heads gives `i -> j`.
pub fn random_tournament(n: usize, seed: u64) -> Result<DiGraph> {
    need_vertex(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            arcs.push(if rng.gen_bool(0.5) { (i, j) } else { (j, i) });
        }
    }
    DiGraph::new(n, 0, arcs)
}

/// Arc lists of all `2^(n(n-1)/2)` tournaments on `0..n`, pair `(i, j)`
/// oriented by bit `k` of the index, pairs taken in lexicographic order.
pub fn all_tournaments(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        pairs
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| if mask >> k & 1 == 1 { (i, j) } else { (j, i) })
            .collect()
    })
}

/// Each ordered pair becomes an arc with probability `p`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Result<DiGraph> {
    need_vertex(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(p) {
                arcs.push((i, j));
            }
        }
    }
    DiGraph::new(n, 0, arcs)
}

/// Every non-root vertex gets one or two in-arcs from distinct random tails.
pub fn random_indegree_two(n: usize, seed: u64) -> Result<DiGraph> {
    need_vertex(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for v in 1..n {
        let first = random_other(&mut rng, n, v, None);
        arcs.push((first, v));
        if n > 2 && rng.gen_bool(0.7) {
            arcs.push((random_other(&mut rng, n, v, Some(first)), v));
        }
    }
    DiGraph::new(n, 0, arcs)
}

fn random_other(rng: &mut ChaCha8Rng, n: usize, v: usize, avoid: Option<usize>) -> usize {
    loop {
        let t = rng.gen_range(0..n);
        if t != v && Some(t) != avoid {
            return t;
        }
    }
}

/// Every pair is joined one way, or both ways with probability `bigons`;
/// about one pair in ten gets a parallel copy. Rooted at 0, so arcs into the
/// root occur.
pub fn random_clique_support(n: usize, seed: u64, bigons: f64) -> Result<DiGraph> {
    need_vertex(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(bigons) {
                arcs.extend([(i, j), (j, i)]);
            } else if rng.gen_bool(0.5) {
                arcs.push((i, j));
            } else {
                arcs.push((j, i));
            }
            if rng.gen_bool(0.1) {
                arcs.push((i, j));
            }
        }
    }
    DiGraph::new(n, 0, arcs)
}

/// The same arcs rooted elsewhere.
pub fn reroot(g: &DiGraph, root: usize) -> Result<DiGraph> {
    DiGraph::new(g.n(), root, g.arcs().iter().map(|a| (a.tail.0, a.head.0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in ["bidirected-cycle:5", "bidirected-complete:4", "random-tournament:6:42"]
            .into_iter()
            .chain(NAMED)
        {
            assert_eq!(InstanceSpec::parse(s).unwrap().to_string(), s);
        }
        assert!(InstanceSpec::parse("bidirected-cycle:x").is_err());
        assert!(InstanceSpec::parse("random-tournament:4").is_err());
        assert!(matches!(InstanceSpec::parse("some/file.txt").unwrap(), InstanceSpec::File(_)));
    }

    #[test]
    fn sizes() {
        let c = bidirected_cycle(5).unwrap();
        assert_eq!((c.n(), c.arc_count()), (5, 10));
        assert_eq!(bidirected_cycle(2).unwrap().arc_count(), 2);
        assert!(bidirected_cycle(0).is_err());
        assert_eq!(generate("fig-graph13").unwrap().arc_count(), 8);
        assert_eq!(all_tournaments(4).count(), 64);
    }

    #[test]
    fn seeded_generators_repeat() {
        assert_eq!(random_tournament(6, 42).unwrap().to_text(), random_tournament(6, 42).unwrap().to_text());
        let t = random_tournament(6, 42).unwrap();
        assert_eq!(t.arc_count(), 15);
        assert!(t.is_clique_support_minus_root());
        for seed in 0..20 {
            let g = random_indegree_two(6, seed).unwrap();
            assert!(g.vertices().all(|v| g.in_degree(v) <= 2));
            assert!(random_clique_support(5, seed, 0.3).unwrap().is_clique_support_minus_root());
        }
    }
}
