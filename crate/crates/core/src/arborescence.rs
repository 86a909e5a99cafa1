//! Arborescences as parent-arc maps, arc flips, and subtree completion.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::digraph::{ArcId, DiGraph, VertexId};
use crate::error::{Error, Result};

/// A spanning tree directed away from the root, stored as the unique
/// incoming arc of every non-root vertex. Equality is parent-map equality,
/// so arborescences using different parallel arcs are distinct.
///
/// The value does not carry its graph; every operation takes the graph it
/// is meant to live in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arborescence {
    parent: Vec<Option<ArcId>>,
}

/// One Gray-code step: `removed` and `added` both enter `pivot`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flip {
    pub removed: ArcId,
    pub added: ArcId,
    pub pivot: VertexId,
}

impl Flip {
    pub fn inverse(self) -> Flip {
        Flip {
            removed: self.added,
            added: self.removed,
            pivot: self.pivot,
        }
    }
}

/// True iff `cand` gives every non-root vertex an arc entering it, the root
/// none, and every vertex reaches back to the root.
pub fn is_arborescence(g: &DiGraph, cand: &[Option<ArcId>]) -> bool {
    let n = g.n();
    if cand.len() != n {
        return false;
    }
    let mut tail = vec![None; n];
    for (v, slot) in cand.iter().enumerate() {
        let is_root = VertexId(v) == g.root();
        match (slot, is_root) {
            (None, true) => {}
            (Some(_), true) | (None, false) => return false,
            (Some(id), false) => match g.arc(*id) {
                Some(a) if a.head.0 == v => tail[v] = Some(a.tail),
                _ => return false,
            },
        }
    }
    // Walk up from each vertex; a walk longer than n means a cycle.
    let mut ok = vec![false; n];
    ok[g.root().0] = true;
    for start in 0..n {
        let mut trail = Vec::new();
        let mut v = start;
        while !ok[v] {
            if trail.len() > n {
                return false;
            }
            trail.push(v);
            match tail[v] {
                Some(t) => v = t.0,
                None => return false,
            }
        }
        for t in trail {
            ok[t] = true;
        }
    }
    true
}

impl Arborescence {
    /// The only arborescence of a single-vertex graph.
    pub fn trivial() -> Self {
        Arborescence { parent: vec![None] }
    }

    pub fn from_parent_map(g: &DiGraph, parent: Vec<Option<ArcId>>) -> Result<Self> {
        if is_arborescence(g, &parent) {
            Ok(Arborescence { parent })
        } else {
            Err(Error::Precondition("parent map is not an arborescence".into()))
        }
    }

    /// Builds from an unordered arc set, placing each arc at its head.
    pub fn from_arcs(g: &DiGraph, arcs: &[ArcId]) -> Result<Self> {
        let mut parent = vec![None; g.n()];
        for &id in arcs {
            let a = g.arc(id).ok_or(Error::UnknownArc(id))?;
            if parent[a.head.0].replace(id).is_some() {
                return Err(Error::Precondition(format!("two arcs enter vertex {}", a.head)));
            }
        }
        Self::from_parent_map(g, parent)
    }

    /// Unchecked constructor for internal builders that validate later.
    pub(crate) fn from_parent_unchecked(parent: Vec<Option<ArcId>>) -> Self {
        Arborescence { parent }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: VertexId) -> Option<ArcId> {
        self.parent.get(v.0).copied().flatten()
    }

    pub fn parent_map(&self) -> &[Option<ArcId>] {
        &self.parent
    }

    pub fn arcs(&self) -> impl Iterator<Item = ArcId> + '_ {
        self.parent.iter().filter_map(|p| *p)
    }

    /// Arc ids in increasing order; the canonical serialization.
    pub fn arc_list(&self) -> Vec<ArcId> {
        let mut v: Vec<ArcId> = self.arcs().collect();
        v.sort();
        v
    }

    pub fn contains(&self, a: ArcId) -> bool {
        self.parent.contains(&Some(a))
    }

    /// Copy with the parent of `v` replaced, without any checks.
    pub(crate) fn with_parent(&self, v: VertexId, a: ArcId) -> Self {
        let mut parent = self.parent.clone();
        parent[v.0] = Some(a);
        Arborescence { parent }
    }

    /// Tail of the parent arc of `v`.
    fn parent_vertex(&self, g: &DiGraph, v: VertexId) -> Option<VertexId> {
        self.parent(v).and_then(|a| g.arc(a)).map(|a| a.tail)
    }

    /// True iff `v` lies on the tree path from the root to `x` (`x` included).
    pub fn is_ancestor(&self, g: &DiGraph, v: VertexId, x: VertexId) -> bool {
        let mut cur = Some(x);
        let mut steps = 0;
        while let Some(c) = cur {
            if c == v {
                return true;
            }
            steps += 1;
            if steps > self.n() {
                return false;
            }
            cur = self.parent_vertex(g, c);
        }
        false
    }

    /// The subtree below `u`, `u` included.
    pub fn descendants(&self, g: &DiGraph, u: VertexId) -> BTreeSet<VertexId> {
        (0..self.n())
            .map(VertexId)
            .filter(|&x| self.is_ancestor(g, u, x))
            .collect()
    }

    /// Hamming distance between parent maps.
    pub fn distance(&self, other: &Arborescence) -> usize {
        self.parent
            .iter()
            .zip(&other.parent)
            .filter(|(a, b)| a != b)
            .count()
    }

    /// The single vertex where two arborescences differ, if exactly one.
    pub fn diff_vertex(&self, other: &Arborescence) -> Option<VertexId> {
        let mut found = None;
        for (v, (a, b)) in self.parent.iter().zip(&other.parent).enumerate() {
            if a != b {
                if found.is_some() {
                    return None;
                }
                found = Some(VertexId(v));
            }
        }
        found
    }

    /// Flip turning `self` into `other`, if they are adjacent.
    pub fn flip_to(&self, other: &Arborescence) -> Option<Flip> {
        let v = self.diff_vertex(other)?;
        Some(Flip {
            removed: self.parent(v)?,
            added: other.parent(v)?,
            pivot: v,
        })
    }
}

/// Every arc `u -> v` outside `a` that can replace the parent of `v`, i.e.
/// `v` is not the root and `u` is not in the subtree of `v`.
pub fn legal_flips(g: &DiGraph, a: &Arborescence) -> Vec<Flip> {
    g.arcs()
        .iter()
        .filter(|arc| arc.head != g.root() && !a.contains(arc.id))
        .filter(|arc| !a.is_ancestor(g, arc.head, arc.tail))
        .filter_map(|arc| {
            Some(Flip {
                removed: a.parent(arc.head)?,
                added: arc.id,
                pivot: arc.head,
            })
        })
        .collect()
}

pub fn apply_flip(g: &DiGraph, a: &Arborescence, f: Flip) -> Result<Arborescence> {
    let illegal = |reason: &str| Error::IllegalFlip {
        added: f.added,
        pivot: f.pivot,
        reason: reason.to_string(),
    };
    let arc = g.arc(f.added).ok_or(Error::UnknownArc(f.added))?;
    if f.removed == f.added {
        return Err(illegal("removed and added arcs coincide"));
    }
    if arc.head != f.pivot {
        return Err(illegal("added arc does not enter the pivot"));
    }
    if a.parent(f.pivot) != Some(f.removed) {
        return Err(illegal("removed arc is not the current parent of the pivot"));
    }
    if a.is_ancestor(g, f.pivot, arc.tail) {
        return Err(illegal("tail of the added arc is a descendant of the pivot"));
    }
    Ok(a.with_parent(f.pivot, f.added))
}

/// Extends a partial parent map into an arborescence containing all of its
/// arcs. Vertices without a prescribed parent are attached layer by layer
/// from the part already connected to the root, lowest arc id first.
pub fn complete_subtree(g: &DiGraph, partial: &[Option<ArcId>]) -> Result<Arborescence> {
    let n = g.n();
    if partial.len() != n {
        return Err(Error::Precondition(format!(
            "partial map has {} entries for {n} vertices",
            partial.len()
        )));
    }
    if partial[g.root().0].is_some() {
        return Err(Error::Precondition("the root cannot have a parent".into()));
    }
    let mut parent = partial.to_vec();
    for (v, p) in parent.iter().enumerate() {
        if let Some(id) = p {
            match g.arc(*id) {
                Some(a) if a.head.0 == v => {}
                _ => return Err(Error::Precondition(format!("arc {id} does not enter vertex {v}"))),
            }
        }
    }
    let tail_of = |id: ArcId| g.arc(id).map(|a| a.tail.0);
    loop {
        // Close the covered set under the prescribed or chosen parents.
        let mut covered = vec![false; n];
        covered[g.root().0] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..n {
                if !covered[v] {
                    if let Some(t) = parent[v].and_then(tail_of) {
                        if covered[t] {
                            covered[v] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        if covered.iter().all(|&c| c) {
            return Ok(Arborescence { parent });
        }
        let layer: Vec<_> = g
            .arcs()
            .iter()
            .filter(|a| covered[a.tail.0] && !covered[a.head.0] && parent[a.head.0].is_none())
            .collect();
        if layer.is_empty() {
            return Err(Error::NoCompletion);
        }
        for a in layer {
            if parent[a.head.0].is_none() {
                parent[a.head.0] = Some(a.id);
            }
        }
    }
}
