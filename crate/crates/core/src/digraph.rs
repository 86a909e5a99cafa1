//! Rooted directed multigraphs with stable arc identities.
//!
//! Arcs are kept in a list ordered by [`ArcId`]; endpoint pairs are never
//! used as keys, so parallel arcs and antiparallel pairs coexist. Every
//! transformation returns a new graph and leaves the ids of surviving arcs
//! untouched. Contraction relabels vertices (the merged vertex becomes vertex
//! 0 and the new root) and reports the relabeling.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub id: ArcId,
    pub tail: VertexId,
    pub head: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiGraph {
    n: usize,
    root: VertexId,
    /// Sorted by id.
    arcs: Vec<Arc>,
    next_id: usize,
    lineage: Option<BTreeMap<ArcId, ArcId>>,
}

/// Result of contracting a root arc `root -> x`.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: DiGraph,
    pub contracted: ArcId,
    pub old_root: VertexId,
    pub merged: VertexId,
    /// Old vertex id to new vertex id; the old root and `merged` both map to 0.
    pub vertex_map: Vec<VertexId>,
    /// Surviving arcs of the original graph to their image. Ids are preserved,
    /// so this is the identity on its domain.
    pub arc_map: BTreeMap<ArcId, ArcId>,
}

impl Contraction {
    /// Inverse of `vertex_map` for every new vertex except the merged root.
    pub fn original_vertex(&self, new: VertexId) -> Option<VertexId> {
        if new.0 == 0 {
            return None;
        }
        self.vertex_map
            .iter()
            .position(|&w| w == new)
            .map(VertexId)
    }
}

impl DiGraph {
    /// Builds a graph whose arcs get ids `0..` in iteration order.
    pub fn new<I>(n: usize, root: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        if root >= n {
            return Err(Error::InvalidGraph(format!("root {root} out of range for {n} vertices")));
        }
        let mut list = Vec::new();
        for (i, (t, h)) in arcs.into_iter().enumerate() {
            if t >= n || h >= n {
                return Err(Error::InvalidGraph(format!("arc {t}->{h} out of range")));
            }
            if t == h {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {t}")));
            }
            list.push(Arc {
                id: ArcId(i),
                tail: VertexId(t),
                head: VertexId(h),
            });
        }
        let next_id = list.len();
        Ok(DiGraph {
            n,
            root: VertexId(root),
            arcs: list,
            next_id,
            lineage: None,
        })
    }

    /// Parses the text graph format: a header `n m root` followed by `m`
    /// lines `tail head`. Lines starting with `#` and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut arcs = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("expected a non-negative integer, found {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            match header {
                None => {
                    let [n, m, root] = fields[..] else {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "header must be `n m root`".into(),
                        });
                    };
                    if n == 0 {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "graph needs at least one vertex".into(),
                        });
                    }
                    if root >= n {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("root {root} out of range for {n} vertices"),
                        });
                    }
                    header = Some((n, m, root));
                }
                Some((n, m, _)) => {
                    let [t, h] = fields[..] else {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "arc line must be `tail head`".into(),
                        });
                    };
                    if arcs.len() == m {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("more than the declared {m} arcs"),
                        });
                    }
                    if t >= n || h >= n {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("vertex index out of range in arc {t} {h} (n = {n})"),
                        });
                    }
                    if t == h {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("self-loop at vertex {t}"),
                        });
                    }
                    arcs.push((t, h));
                }
            }
        }
        let Some((n, m, root)) = header else {
            return Err(Error::Parse {
                line: last_line.max(1),
                message: "missing header".into(),
            });
        };
        if arcs.len() != m {
            return Err(Error::Parse {
                line: last_line.max(1),
                message: format!("declared {m} arcs, found {}", arcs.len()),
            });
        }
        DiGraph::new(n, root, arcs)
    }

    /// Serializes in the same format `parse` reads. Arcs are written in id
    /// order; ids are not part of the format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.arcs.len(), self.root.0);
        for a in &self.arcs {
            out.push_str(&format!("{} {}\n", a.tail.0, a.head.0));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    pub fn lineage(&self) -> Option<&BTreeMap<ArcId, ArcId>> {
        self.lineage.as_ref()
    }

    pub fn arc(&self, id: ArcId) -> Option<&Arc> {
        self.arcs
            .binary_search_by_key(&id, |a| a.id)
            .ok()
            .map(|i| &self.arcs[i])
    }

    pub fn has_arc(&self, id: ArcId) -> bool {
        self.arc(id).is_some()
    }

    fn require(&self, id: ArcId) -> Result<&Arc> {
        self.arc(id).ok_or(Error::UnknownArc(id))
    }

    pub fn out_arcs(&self, v: VertexId) -> impl Iterator<Item = &Arc> + '_ {
        self.arcs.iter().filter(move |a| a.tail == v)
    }

    pub fn in_arcs(&self, v: VertexId) -> impl Iterator<Item = &Arc> + '_ {
        self.arcs.iter().filter(move |a| a.head == v)
    }

    pub fn out_neighbours(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.out_arcs(v).map(|a| a.head).collect()
    }

    pub fn in_neighbours(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.in_arcs(v).map(|a| a.tail).collect()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_arcs(v).count()
    }

    /// First arc (by id) from `tail` to `head`.
    pub fn find_arc(&self, tail: VertexId, head: VertexId) -> Option<ArcId> {
        self.arcs
            .iter()
            .find(|a| a.tail == tail && a.head == head)
            .map(|a| a.id)
    }

    /// Undirected support as ordered pairs `(min, max)`.
    pub fn support(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.arcs
            .iter()
            .map(|a| (a.tail.min(a.head), a.tail.max(a.head)))
            .collect()
    }

    /// True iff every pair of non-root vertices is joined by an arc in at
    /// least one direction.
    pub fn is_clique_support_minus_root(&self) -> bool {
        let support = self.support();
        let others: Vec<VertexId> = self.vertices().filter(|&v| v != self.root).collect();
        for (i, &a) in others.iter().enumerate() {
            for &b in &others[i + 1..] {
                if !support.contains(&(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    fn rebuild(&self, arcs: Vec<Arc>, lineage: Option<BTreeMap<ArcId, ArcId>>) -> DiGraph {
        DiGraph {
            n: self.n,
            root: self.root,
            arcs,
            next_id: self.next_id,
            lineage,
        }
    }

    pub fn delete_arc(&self, a: ArcId) -> Result<DiGraph> {
        self.require(a)?;
        Ok(self.delete_arcs([a]))
    }

    /// Removes every listed arc; unknown ids are ignored.
    pub fn delete_arcs<I: IntoIterator<Item = ArcId>>(&self, ids: I) -> DiGraph {
        let drop: BTreeSet<ArcId> = ids.into_iter().collect();
        let arcs = self.arcs.iter().copied().filter(|a| !drop.contains(&a.id)).collect();
        let lineage = self
            .lineage
            .as_ref()
            .map(|l| l.iter().filter(|(k, _)| !drop.contains(k)).map(|(&k, &v)| (k, v)).collect());
        self.rebuild(arcs, lineage)
    }

    /// Keeps only the listed arcs.
    pub fn restrict_to<I: IntoIterator<Item = ArcId>>(&self, ids: I) -> DiGraph {
        let keep: BTreeSet<ArcId> = ids.into_iter().collect();
        let drop: Vec<ArcId> = self.arcs.iter().map(|a| a.id).filter(|id| !keep.contains(id)).collect();
        self.delete_arcs(drop)
    }

    /// Drops every arc whose head is the root.
    pub fn strip_root_in_arcs(&self) -> DiGraph {
        let into_root: Vec<ArcId> = self.in_arcs(self.root).map(|a| a.id).collect();
        self.delete_arcs(into_root)
    }

    /// Keeps the lowest-id arc of every parallel class. Returns the simple
    /// graph and the removed arcs as `(kept, removed)` pairs, ordered by the
    /// removed id.
    pub fn simplify(&self) -> (DiGraph, Vec<(ArcId, ArcId)>) {
        let mut first: BTreeMap<(VertexId, VertexId), ArcId> = BTreeMap::new();
        let mut dups = Vec::new();
        for a in &self.arcs {
            match first.get(&(a.tail, a.head)) {
                Some(&kept) => dups.push((kept, a.id)),
                None => {
                    first.insert((a.tail, a.head), a.id);
                }
            }
        }
        let simple = self.delete_arcs(dups.iter().map(|&(_, d)| d));
        (simple, dups)
    }

    /// Adds a fresh arc and returns its id.
    pub fn add_arc(&self, tail: VertexId, head: VertexId) -> Result<(DiGraph, ArcId)> {
        if tail.0 >= self.n || head.0 >= self.n {
            return Err(Error::InvalidGraph(format!("arc {tail}->{head} out of range")));
        }
        if tail == head {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {tail}")));
        }
        let id = ArcId(self.next_id);
        let mut arcs = self.arcs.clone();
        arcs.push(Arc { id, tail, head });
        let mut g = self.rebuild(arcs, None);
        g.next_id += 1;
        Ok((g, id))
    }

    /// Adds an arc parallel to `a`.
    pub fn duplicate_arc(&self, a: ArcId) -> Result<(DiGraph, ArcId)> {
        let arc = *self.require(a)?;
        self.add_arc(arc.tail, arc.head)
    }

    /// Replaces `a = u -> w` by `u -> v -> w` through a new vertex `v`.
    /// The first half keeps the id `a`; the second half gets a fresh id.
    pub fn subdivide_arc(&self, a: ArcId) -> Result<(DiGraph, VertexId)> {
        let arc = *self.require(a)?;
        let mid = VertexId(self.n);
        let mut arcs: Vec<Arc> = self
            .arcs
            .iter()
            .map(|&x| if x.id == a { Arc { head: mid, ..x } } else { x })
            .collect();
        arcs.push(Arc {
            id: ArcId(self.next_id),
            tail: mid,
            head: arc.head,
        });
        Ok((
            DiGraph {
                n: self.n + 1,
                root: self.root,
                arcs,
                next_id: self.next_id + 1,
                lineage: None,
            },
            mid,
        ))
    }

    /// Contracts the root arc `a = root -> x`. Arcs between the root and `x`
    /// vanish; every other arc keeps its id, including parallel arcs created
    /// by the merge.
    pub fn contract_root_arc(&self, a: ArcId) -> Result<Contraction> {
        let arc = *self.require(a)?;
        if arc.tail != self.root {
            return Err(Error::Precondition(format!(
                "arc {a} = {}->{} does not leave the root {}",
                arc.tail, arc.head, self.root
            )));
        }
        let (r, x) = (self.root, arc.head);
        let mut vertex_map = vec![VertexId(0); self.n];
        let mut next = 1;
        for (v, slot) in vertex_map.iter_mut().enumerate() {
            if v != r.0 && v != x.0 {
                *slot = VertexId(next);
                next += 1;
            }
        }
        let merged = |v: VertexId| v == r || v == x;
        let mut arcs = Vec::new();
        let mut arc_map = BTreeMap::new();
        for b in &self.arcs {
            if merged(b.tail) && merged(b.head) {
                continue;
            }
            arcs.push(Arc {
                id: b.id,
                tail: vertex_map[b.tail.0],
                head: vertex_map[b.head.0],
            });
            arc_map.insert(b.id, b.id);
        }
        let graph = DiGraph {
            n: self.n - 1,
            root: VertexId(0),
            arcs,
            next_id: self.next_id,
            lineage: Some(arc_map.clone()),
        };
        Ok(Contraction {
            graph,
            contracted: a,
            old_root: r,
            merged: x,
            vertex_map,
            arc_map,
        })
    }

    /// Vertices reachable from `from` without entering `avoid`.
    fn reach(&self, from: VertexId, avoid: Option<VertexId>) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        if Some(from) == avoid {
            return seen;
        }
        let mut adj = vec![Vec::new(); self.n];
        for a in &self.arcs {
            adj[a.tail.0].push(a.head);
        }
        seen[from.0] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x.0] {
                if !seen[y.0] && Some(y) != avoid {
                    seen[y.0] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn all_reachable_from_root(&self) -> bool {
        self.reach(self.root, None).into_iter().all(|b| b)
    }

    /// Vertices `v` such that every root-to-`v` path passes through `u`
    /// (`u` included). Vertices unreachable from the root are left out.
    pub fn descendants(&self, u: VertexId) -> BTreeSet<VertexId> {
        let reachable = self.reach(self.root, None);
        if u == self.root {
            return self.vertices().filter(|v| reachable[v.0]).collect();
        }
        let avoiding = self.reach(self.root, Some(u));
        self.vertices()
            .filter(|&v| v == u || (reachable[v.0] && !avoiding[v.0]))
            .collect()
    }

    /// BFS depths from the root; `None` for unreachable vertices.
    pub fn bfs_depths(&self) -> Vec<Option<usize>> {
        let mut depth = vec![None; self.n];
        let mut adj = vec![Vec::new(); self.n];
        for a in &self.arcs {
            adj[a.tail.0].push(a.head);
        }
        depth[self.root.0] = Some(0);
        let mut queue = VecDeque::from([self.root]);
        while let Some(x) = queue.pop_front() {
            let d = depth[x.0].unwrap_or(0);
            for &y in &adj[x.0] {
                if depth[y.0].is_none() {
                    depth[y.0] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        depth
    }
}

/// True iff `h` is built on `g`: every arc of `g` is an arc of `h` (same id
/// and endpoints) and every extra arc `u -> v` of `h` has `u` among the
/// descendants of `v` in `g`.
pub fn is_built_on(h: &DiGraph, g: &DiGraph) -> Result<bool> {
    if h.n != g.n || h.root != g.root {
        return Err(Error::Precondition(format!(
            "vertex sets differ: ({} vertices, root {}) vs ({} vertices, root {})",
            h.n, h.root, g.n, g.root
        )));
    }
    for a in g.arcs() {
        match h.arc(a.id) {
            Some(b) if b.tail == a.tail && b.head == a.head => {}
            _ => return Ok(false),
        }
    }
    let mut cache: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
    for b in h.arcs() {
        if g.has_arc(b.id) {
            continue;
        }
        let desc = cache.entry(b.head).or_insert_with(|| g.descendants(b.head));
        if !desc.contains(&b.tail) {
            return Ok(false);
        }
    }
    Ok(true)
}
