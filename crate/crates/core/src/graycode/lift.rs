//! Lifting Gray paths back through a root-arc contraction or an arc
//! duplication.

use std::collections::BTreeSet;

use crate::arborescence::{is_arborescence, Arborescence};
use crate::digraph::{ArcId, DiGraph, VertexId};
use crate::error::{Error, Result};

use super::hypercube::hypercube_ham_path_from;

/// A lifted path together with the fiber it visits for each contracted step.
#[derive(Clone, Debug)]
pub struct ContractionLift {
    pub steps: Vec<Arborescence>,
    /// For each element of the contracted path: the shared out-neighbours
    /// (original labels) spanning its fiber, and the bit patterns visited.
    pub fibers: Vec<Fiber>,
}

#[derive(Clone, Debug)]
pub struct Fiber {
    pub coordinates: Vec<VertexId>,
    pub visited: Vec<u64>,
}

impl ContractionLift {
    pub fn max_dimension(&self) -> usize {
        self.fibers.iter().map(|f| f.coordinates.len()).max().unwrap_or(0)
    }
}

/// Lifts a Gray path of the contracted graph to one covering every
/// arborescence of `g` that contains `a`.
///
/// `g` must be free of parallel arcs. `path` is a Gray path of `h`, a
/// subgraph of the contraction of `g` at `a` (vertex labels as produced by
/// [`DiGraph::contract_root_arc`]), typically with arcs into the new root and
/// parallel copies removed. A vertex `z` that is an out-neighbour of both the
/// root and `x` in `g`, but keeps only one of the two arcs in `h`, gets its
/// parent from either side; each arborescence of `h` thus stands for a
/// hypercube of arborescences of `g`, walked by a reflected Gray code.
/// Without `start` the walk begins at the element taking every such parent
/// from the root.
pub fn lift_contraction_path(
    g: &DiGraph,
    a: ArcId,
    h: &DiGraph,
    path: &[Arborescence],
    start: Option<&Arborescence>,
) -> Result<ContractionLift> {
    let con = g.contract_root_arc(a)?;
    if !g.simplify().1.is_empty() {
        return Err(Error::Precondition("lifting through a contraction needs a graph without parallel arcs".into()));
    }
    let (r, x) = (con.old_root, con.merged);
    if h.n() != con.graph.n() {
        return Err(Error::Precondition(format!(
            "graph of the path has {} vertices, the contraction has {}",
            h.n(),
            con.graph.n()
        )));
    }
    // shared out-neighbours whose two arcs were merged into one in h
    let shared: BTreeSet<VertexId> = g
        .out_neighbours(r)
        .intersection(&g.out_neighbours(x))
        .copied()
        .filter(|&z| {
            let both = [g.find_arc(r, z), g.find_arc(x, z)];
            both.iter().flatten().filter(|&&id| h.has_arc(id)).count() < 2
        })
        .collect();

    // Old vertex of every new vertex, the merged root excepted.
    let mut original = vec![None; con.graph.n()];
    for (old, &new) in con.vertex_map.iter().enumerate() {
        if new.0 != 0 {
            original[new.0] = Some(VertexId(old));
        }
    }

    // Base lift of a contracted arborescence plus its fiber coordinates.
    let base = |t: &Arborescence| -> Result<(Vec<Option<ArcId>>, Vec<VertexId>)> {
        if t.n() != con.graph.n() {
            return Err(Error::Precondition(format!(
                "contracted arborescence has {} vertices, expected {}",
                t.n(),
                con.graph.n()
            )));
        }
        let mut parent = vec![None; g.n()];
        parent[x.0] = Some(a);
        let mut coords = Vec::new();
        for (new, p) in t.parent_map().iter().enumerate().skip(1) {
            let old = original[new].expect("non-root vertex has an original");
            let id = p.ok_or_else(|| Error::Precondition(format!("contracted vertex {new} has no parent")))?;
            let arc = g.arc(id).ok_or(Error::UnknownArc(id))?;
            if arc.head != old {
                return Err(Error::Precondition(format!("arc {id} does not enter vertex {old}")));
            }
            if (arc.tail == r || arc.tail == x) && shared.contains(&old) {
                coords.push(old);
            }
            parent[old.0] = Some(id);
        }
        Ok((parent, coords))
    };

    let side_arc = |z: VertexId, bit: bool| -> ArcId {
        let tail = if bit { x } else { r };
        g.find_arc(tail, z).expect("shared out-neighbour has both arcs")
    };
    let bits_of = |parent: &[Option<ArcId>], coords: &[VertexId]| -> u64 {
        coords
            .iter()
            .enumerate()
            .filter(|&(_, &z)| parent[z.0].and_then(|id| g.arc(id)).map(|arc| arc.tail) == Some(x))
            .fold(0, |acc, (i, _)| acc | 1 << i)
    };
    let set_bits = |parent: &mut Vec<Option<ArcId>>, coords: &[VertexId], bits: u64| {
        for (i, &z) in coords.iter().enumerate() {
            parent[z.0] = Some(side_arc(z, bits >> i & 1 == 1));
        }
    };

    let mut steps = Vec::new();
    let mut fibers = Vec::new();
    let mut current: Option<Vec<Option<ArcId>>> = None;
    for (k, t) in path.iter().enumerate() {
        let (mut parent, coords) = base(t)?;
        let entry = match &current {
            None => match start {
                Some(s) => {
                    let bits = bits_of(s.parent_map(), &coords);
                    set_bits(&mut parent, &coords, bits);
                    if s.parent_map() != &parent[..] {
                        return Err(Error::Precondition(
                            "start is not in the fiber of the first contracted arborescence".into(),
                        ));
                    }
                    bits
                }
                None => 0,
            },
            // The contracted flip moves one parent; fiber coordinates keep their side.
            Some(prev) => {
                let bits = bits_of(prev, &coords);
                set_bits(&mut parent, &coords, bits);
                let changed = (0..g.n()).filter(|&v| prev[v] != parent[v]).count();
                if changed != 1 {
                    return Err(Error::inconsistency(format!(
                        "contracted step {k} lifts to {changed} parent changes"
                    )));
                }
                bits
            }
        };
        let walk = hypercube_ham_path_from(coords.len() as u32, entry)?;
        for &bits in &walk {
            set_bits(&mut parent, &coords, bits);
            if !is_arborescence(g, &parent) {
                return Err(Error::inconsistency(format!("lifted element of contracted step {k} is not an arborescence")));
            }
            steps.push(Arborescence::from_parent_unchecked(parent.clone()));
        }
        current = Some(parent);
        fibers.push(Fiber {
            coordinates: coords,
            visited: walk,
        });
    }
    Ok(ContractionLift { steps, fibers })
}

/// Lifts a Gray path of `g' - e'` to `g'`, where `e'` is parallel to `e`.
///
/// Every element containing `e` is followed or preceded by its twin using
/// `e'`; consecutive twins are traversed as the opposite sides of a 4-cycle.
pub fn lift_duplication_path(
    g_dup: &DiGraph,
    e: ArcId,
    e_copy: ArcId,
    base: &[Arborescence],
) -> Result<Vec<Arborescence>> {
    let arc = *g_dup.arc(e).ok_or(Error::UnknownArc(e))?;
    let copy = *g_dup.arc(e_copy).ok_or(Error::UnknownArc(e_copy))?;
    if e == e_copy || arc.tail != copy.tail || arc.head != copy.head {
        return Err(Error::Precondition(format!("arcs {e} and {e_copy} are not parallel")));
    }
    let mut out = Vec::with_capacity(base.len() * 2);
    let mut primed = false;
    for a in base {
        if a.contains(e_copy) {
            return Err(Error::Precondition(format!("base path already uses arc {e_copy}")));
        }
        if a.contains(e) {
            let twin = a.with_parent(arc.head, e_copy);
            if primed {
                out.push(twin);
                out.push(a.clone());
            } else {
                out.push(a.clone());
                out.push(twin);
            }
            primed = !primed;
        } else {
            primed = false;
            out.push(a.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_arborescences, verify_gray_code};

    #[test]
    fn duplication_of_single_arc() {
        let g = DiGraph::new(2, 0, [(0, 1), (0, 1)]).unwrap();
        let base = vec![Arborescence::from_arcs(&g, &[ArcId(0)]).unwrap()];
        let out = lift_duplication_path(&g, ArcId(0), ArcId(1), &base).unwrap();
        assert_eq!(out.len(), 2);
        assert!(verify_gray_code(&g, &out).passed());
    }

    #[test]
    fn duplication_leaves_paths_without_e_alone() {
        let g = DiGraph::new(3, 0, [(0, 1), (1, 2), (0, 2), (0, 2)]).unwrap();
        let base = vec![Arborescence::from_arcs(&g, &[ArcId(0), ArcId(1)]).unwrap()];
        let out = lift_duplication_path(&g, ArcId(2), ArcId(3), &base).unwrap();
        assert_eq!(out, base);
    }

    #[test]
    fn intro_contraction() {
        // contract r->u in r->u, u->v, r->v; the contracted graph keeps both w->v arcs
        let g = DiGraph::parse("3 3 0\n0 1\n1 2\n0 2").unwrap();
        let con = g.contract_root_arc(ArcId(0)).unwrap();
        let path = enumerate_arborescences(&con.graph).unwrap();
        assert_eq!(path.len(), 2);
        let lift = lift_contraction_path(&g, ArcId(0), &con.graph, &path, None).unwrap();
        assert_eq!(lift.max_dimension(), 0);
        assert_eq!(lift.steps.len(), 2);
        assert!(verify_gray_code(&g, &lift.steps).passed());
    }

    #[test]
    fn fiber_of_dimension_one() {
        // r=0, x=1, z=2 with r->x, r->z, x->z: contracting r->x and simplifying
        // leaves one contracted arborescence whose fiber is an edge
        let g = DiGraph::new(3, 0, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let con = g.contract_root_arc(ArcId(0)).unwrap();
        let simple = con.graph.simplify().0;
        let path = enumerate_arborescences(&simple).unwrap();
        let lift = lift_contraction_path(&g, ArcId(0), &simple, &path, None).unwrap();
        assert_eq!(lift.steps.len(), 2);
        assert_eq!(lift.max_dimension(), 1);
        assert_eq!(lift.steps[0].parent(VertexId(2)), Some(ArcId(1)));
        let rev = lift_contraction_path(&g, ArcId(0), &simple, &path, Some(&lift.steps[1])).unwrap();
        assert_eq!(rev.steps[0], lift.steps[1]);
    }
}
