//! Recognising the rigid graphs in which every arborescence avoiding `w -> v`
//! turns into the same arborescence once `w -> v` is flipped in.

use serde::Serialize;

use crate::digraph::{is_built_on, ArcId, DiGraph, VertexId};
use crate::error::Result;
use crate::oracle::enumerate_arborescences;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FlipCliqueStructure {
    /// Built on the path `w, v_1, .., v_n` with `v = v_k`.
    L { k: usize, n: usize, path: Vec<VertexId> },
    /// Built on the path `w, v_1, .., v_n` plus `v` entered from every `v_i`, `i >= k-1`.
    M { k: usize, n: usize, path: Vec<VertexId> },
    NotApplicable,
}

impl FlipCliqueStructure {
    pub fn label(&self) -> String {
        match self {
            FlipCliqueStructure::L { k, n, .. } => format!("L({k},{n})"),
            FlipCliqueStructure::M { k, n, .. } => format!("M({k},{n})"),
            FlipCliqueStructure::NotApplicable => "not-applicable".into(),
        }
    }
}

/// `w` is the root of `g`. Checks the hypothesis by enumeration, then the
/// three structural facts (clique flip graph, unique paths, no short path to
/// `v`) and the layered shape found by a BFS from `w`.
pub fn detect_flip_clique_structure(g: &DiGraph, v: VertexId) -> Result<FlipCliqueStructure> {
    use FlipCliqueStructure::NotApplicable;
    let w = g.root();
    if v == w || v.0 >= g.n() {
        return Ok(NotApplicable);
    }
    let wv: Vec<ArcId> = g.out_arcs(w).filter(|a| a.head == v).map(|a| a.id).collect();
    if wv.is_empty() {
        return Ok(NotApplicable);
    }
    let h = g.delete_arcs(wv.iter().copied());
    let arbs = enumerate_arborescences(&h)?;
    if arbs.is_empty() {
        return Ok(NotApplicable);
    }
    // same flip result for all <=> all agree away from v; that also makes the flip graph a clique
    let agree = arbs.iter().all(|a| {
        (0..g.n()).all(|x| x == v.0 || a.parent_map()[x] == arbs[0].parent_map()[x])
    });
    if !agree {
        return Ok(NotApplicable);
    }
    if !unique_paths_except(&h, v) {
        return Ok(NotApplicable);
    }

    let depth = h.bfs_depths();
    let Some(dv) = depth[v.0] else { return Ok(NotApplicable) };
    let max = depth.iter().flatten().copied().max().unwrap_or(0);
    let mut layers: Vec<Vec<VertexId>> = vec![Vec::new(); max + 1];
    for x in g.vertices() {
        match depth[x.0] {
            Some(d) => layers[d].push(x),
            None => return Ok(NotApplicable),
        }
    }
    if dv < 2 {
        return Ok(NotApplicable);
    }
    let mut path = Vec::new();
    let mut shared_layer = false;
    for layer in &layers[1..] {
        match layer.as_slice() {
            [x] => path.push(*x),
            [a, b] if *a == v || *b == v => {
                path.push(if *a == v { *b } else { *a });
                shared_layer = true;
            }
            _ => return Ok(NotApplicable),
        }
    }
    let mut base_arcs = Vec::new();
    let mut prev = w;
    for &x in &path {
        match h.find_arc(prev, x) {
            Some(id) => base_arcs.push(id),
            None => return Ok(NotApplicable),
        }
        prev = x;
    }
    if shared_layer {
        let k = dv;
        let n = path.len();
        // v is entered from v_{k-1} and every later v_i
        for i in k - 1..=n {
            let tail = path[i - 1];
            match h.find_arc(tail, v) {
                Some(id) => base_arcs.push(id),
                None => return Ok(NotApplicable),
            }
        }
        if !is_built_on(&h, &h.restrict_to(base_arcs))? {
            return Ok(NotApplicable);
        }
        Ok(FlipCliqueStructure::M { k, n, path: with_root(w, path) })
    } else {
        let k = dv;
        let n = path.len();
        if !is_built_on(&h, &h.restrict_to(base_arcs))? {
            return Ok(NotApplicable);
        }
        Ok(FlipCliqueStructure::L { k, n, path: with_root(w, path) })
    }
}

fn with_root(w: VertexId, mut path: Vec<VertexId>) -> Vec<VertexId> {
    path.insert(0, w);
    path
}

/// Every vertex other than `v` is reached from the root by exactly one
/// simple path.
fn unique_paths_except(h: &DiGraph, v: VertexId) -> bool {
    let mut count = vec![0usize; h.n()];
    let mut on_path = vec![false; h.n()];
    fn dfs(h: &DiGraph, x: VertexId, count: &mut [usize], on_path: &mut [bool]) {
        count[x.0] += 1;
        if count[x.0] > 2 {
            return;
        }
        on_path[x.0] = true;
        for a in h.out_arcs(x) {
            if !on_path[a.head.0] {
                dfs(h, a.head, count, on_path);
            }
        }
        on_path[x.0] = false;
    }
    dfs(h, h.root(), &mut count, &mut on_path);
    h.vertices().all(|x| x == v || count[x.0] == 1)
}
