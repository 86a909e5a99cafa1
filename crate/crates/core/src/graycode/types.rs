use serde::Serialize;

use crate::arborescence::Arborescence;
use crate::digraph::{ArcId, DiGraph, VertexId};
use crate::error::{Error, Result};

/// The arcs `e = r->u`, `f = r->v`, `g = u->v` of a chosen pivot pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PivotArcs {
    pub u: VertexId,
    pub v: VertexId,
    pub e: ArcId,
    pub f: ArcId,
    pub g: ArcId,
}

impl PivotArcs {
    pub fn of(graph: &DiGraph, u: VertexId, v: VertexId) -> Result<Self> {
        let r = graph.root();
        let find = |t, h| {
            graph
                .find_arc(t, h)
                .ok_or_else(|| Error::Precondition(format!("missing arc {t}->{h}")))
        };
        Ok(PivotArcs {
            u,
            v,
            e: find(r, u)?,
            f: find(r, v)?,
            g: find(u, v)?,
        })
    }
}

/// Arborescences split by their use of `e`, `f` and `g`.
#[derive(Clone, Debug, Default)]
pub struct TypePartition {
    pub t_minus_e: Vec<Arborescence>,
    pub t_ef: Vec<Arborescence>,
    pub t_eg: Vec<Arborescence>,
    pub t_fg: Vec<Arborescence>,
}

impl TypePartition {
    pub fn total(&self) -> usize {
        self.t_minus_e.len() + self.t_ef.len() + self.t_eg.len() + self.t_fg.len()
    }
}

/// Among pairs `(u, v)` of root out-neighbours joined by `u -> v`, one whose
/// `u` has the most out-neighbours; ties go to the smallest `u`, then `v`.
pub fn choose_pivot_pair(g: &DiGraph) -> Result<(VertexId, VertexId)> {
    let out: Vec<VertexId> = g.out_neighbours(g.root()).into_iter().collect();
    if out.len() < 2 {
        return Err(Error::Precondition(format!(
            "root {} has {} out-neighbours, at least two are needed",
            g.root(),
            out.len()
        )));
    }
    let mut best: Option<(usize, VertexId, VertexId)> = None;
    for &u in &out {
        let deg = g.out_neighbours(u).len();
        for &v in &out {
            if u == v || g.find_arc(u, v).is_none() {
                continue;
            }
            if best.is_none_or(|(d, _, _)| deg > d) {
                best = Some((deg, u, v));
            }
        }
    }
    best.map(|(_, u, v)| (u, v)).ok_or_else(|| {
        Error::Precondition("no arc joins two out-neighbours of the root; support minus root is not a clique".into())
    })
}

pub fn partition_types(g: &DiGraph, arbs: &[Arborescence], arcs: PivotArcs) -> Result<TypePartition> {
    let r = g.root();
    let check = |id: ArcId, t: VertexId, h: VertexId| match g.arc(id) {
        Some(a) if a.tail == t && a.head == h => Ok(()),
        _ => Err(Error::Precondition(format!("arc {id} is not {t}->{h}"))),
    };
    check(arcs.e, r, arcs.u)?;
    check(arcs.f, r, arcs.v)?;
    check(arcs.g, arcs.u, arcs.v)?;
    let mut p = TypePartition::default();
    for a in arbs {
        let bucket = if !a.contains(arcs.e) {
            &mut p.t_minus_e
        } else if a.contains(arcs.f) {
            &mut p.t_ef
        } else if a.contains(arcs.g) {
            &mut p.t_eg
        } else {
            &mut p.t_fg
        };
        bucket.push(a.clone());
    }
    Ok(p)
}
