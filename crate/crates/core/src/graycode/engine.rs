//! Pivot Gray codes for rooted digraphs whose support minus the root is a
//! clique, built by the inductive construction: split the arborescences by
//! their use of `e = r->u`, `f = r->v`, `g = u->v`, solve each type
//! recursively, and stitch the three pieces around the spanning ladder.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arborescence::{Arborescence, Flip};
use crate::digraph::{ArcId, DiGraph};
use crate::error::{Error, Result};
use crate::oracle::{build_flip_graph, find_hamiltonian_path_bruteforce, verify_gray_code};

use super::ladder::{ladder_ham_path, ladder_walk_from, ladder_walk_to_partner, Ladder, LadderVertex, Side};
use super::lift::{lift_contraction_path, lift_duplication_path};
use super::structure::{detect_flip_clique_structure, FlipCliqueStructure};
use super::types::{choose_pivot_pair, PivotArcs};

#[derive(Clone, Debug)]
pub struct GrayPath {
    pub steps: Vec<Arborescence>,
    pub flips: Vec<Flip>,
    pub provenance: Vec<String>,
}

impl GrayPath {
    pub fn new(steps: Vec<Arborescence>, provenance: Vec<String>) -> Result<Self> {
        let flips = steps
            .windows(2)
            .enumerate()
            .map(|(i, w)| {
                w[0].flip_to(&w[1])
                    .ok_or_else(|| Error::inconsistency(format!("steps {i} and {} are not one flip apart", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GrayPath {
            steps,
            flips,
            provenance,
        })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn arc_lists(&self) -> Vec<Vec<ArcId>> {
        self.steps.iter().map(|a| a.arc_list()).collect()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// On an internal inconsistency, search the flip graph exhaustively
    /// instead of failing, and report what went wrong.
    pub fallback_bruteforce: bool,
}

/// Everything needed to reproduce a failure of the construction.
#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleBundle {
    pub graph: String,
    pub message: String,
    pub provenance: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub path: GrayPath,
    pub counterexample: Option<CounterexampleBundle>,
}

pub fn gray_code_clique_support(g: &DiGraph) -> Result<GrayPath> {
    gray_code_with_options(g, &Options::default()).map(|o| o.path)
}

pub fn gray_code_with_options(g: &DiGraph, opts: &Options) -> Result<Outcome> {
    if !g.is_clique_support_minus_root() {
        return Err(Error::Precondition(
            "the support of the graph minus its root is not a clique".into(),
        ));
    }
    let mut engine = Engine::default();
    match engine.solve(g) {
        Ok(steps) => Ok(Outcome {
            path: GrayPath::new(steps, engine.trace)?,
            counterexample: None,
        }),
        Err(Error::Inconsistency { message, .. }) if opts.fallback_bruteforce => {
            let bundle = CounterexampleBundle {
                graph: g.to_text(),
                message: message.clone(),
                provenance: engine.trace.clone(),
            };
            let fg = build_flip_graph(g)?;
            let Some(order) = find_hamiltonian_path_bruteforce(&fg)? else {
                return Err(Error::Inconsistency {
                    message: format!("{message}; exhaustive search finds no Hamiltonian path either"),
                    provenance: engine.trace,
                });
            };
            let mut trace = engine.trace;
            trace.push(format!("fallback: exhaustive search after \"{message}\""));
            let steps = order.into_iter().map(|i| fg.nodes[i].clone()).collect();
            Ok(Outcome {
                path: GrayPath::new(steps, trace)?,
                counterexample: Some(bundle),
            })
        }
        Err(Error::Inconsistency { message, .. }) => Err(Error::Inconsistency {
            message,
            provenance: engine.trace,
        }),
        Err(e) => Err(e),
    }
}

#[derive(Default)]
struct Engine {
    trace: Vec<String>,
    depth: usize,
}

impl Engine {
    fn note(&mut self, msg: impl AsRef<str>) {
        self.trace.push(format!("[{}] {}", self.depth, msg.as_ref()));
    }

    fn check(&self, g: &DiGraph, path: &[Arborescence], what: &str) -> Result<()> {
        let report = verify_gray_code(g, path);
        if report.passed() {
            return Ok(());
        }
        let failed: Vec<String> = report.failures().map(|c| format!("{} ({})", c.name, c.detail)).collect();
        Err(Error::inconsistency(format!("{what}: {}", failed.join(", "))))
    }

    /// Arcs into the root and parallel copies are set aside; copies are put
    /// back one at a time by doubling the path through them.
    fn solve(&mut self, g: &DiGraph) -> Result<Vec<Arborescence>> {
        self.depth += 1;
        let stripped = g.strip_root_in_arcs();
        let (simple, dups) = stripped.simplify();
        let mut path = self.solve_simple(&simple)?;
        if !dups.is_empty() {
            self.note(format!("{} parallel arcs re-lifted", dups.len()));
            let mut keep: BTreeSet<ArcId> = simple.arcs().iter().map(|a| a.id).collect();
            for (kept, copy) in dups {
                keep.insert(copy);
                let current = stripped.restrict_to(keep.iter().copied());
                path = lift_duplication_path(&current, kept, copy, &path)?;
            }
            self.check(&stripped, &path, "duplication lift")?;
        }
        self.depth -= 1;
        Ok(path)
    }

    /// Contracts the root arc `a`, solves the simplified contraction and
    /// lifts the result to the arborescences of `g` containing `a`.
    fn solve_contracted(&mut self, g: &DiGraph, a: ArcId) -> Result<Vec<Arborescence>> {
        let con = g.contract_root_arc(a)?;
        let h = con.graph.strip_root_in_arcs().simplify().0;
        let sub = self.solve(&h)?;
        let lift = lift_contraction_path(g, a, &h, &sub, None)?;
        if lift.max_dimension() > 0 {
            self.note(format!(
                "contraction of arc {a} lifted through fibers of dimension up to {}",
                lift.max_dimension()
            ));
        }
        Ok(lift.steps)
    }

    fn solve_simple(&mut self, g: &DiGraph) -> Result<Vec<Arborescence>> {
        if g.n() == 1 {
            return Ok(vec![Arborescence::trivial()]);
        }
        if !g.all_reachable_from_root() {
            return Ok(Vec::new());
        }
        let r = g.root();
        let out = g.out_neighbours(r);
        let path = if out.len() == 1 {
            let u = *out.iter().next().expect("one out-neighbour");
            let e = g.find_arc(r, u).expect("arc to the only out-neighbour");
            self.note(format!("root has the single out-neighbour {u}; contract arc {e}"));
            self.solve_contracted(g, e)?
        } else {
            self.split(g)?
        };
        self.check(g, &path, "recursive step")?;
        Ok(path)
    }

    fn split(&mut self, g: &DiGraph) -> Result<Vec<Arborescence>> {
        let (u, v) = choose_pivot_pair(g)?;
        let arcs = PivotArcs::of(g, u, v)?;
        self.note(format!("pair u={u} v={v}: e={} f={} g={}", arcs.e, arcs.f, arcs.g));

        let p_me = self.solve(&g.delete_arc(arcs.e)?)?;
        let p_fg = self.solve_contracted(&g.delete_arcs([arcs.f, arcs.g]), arcs.e)?;

        // T_{/e/g}: keep e as the only way into u and g as the only way into v
        let extra: Vec<ArcId> = g
            .in_arcs(u)
            .filter(|a| a.id != arcs.e)
            .chain(g.in_arcs(v).filter(|a| a.id != arcs.g))
            .map(|a| a.id)
            .collect();
        let gp = g.delete_arcs(extra);
        let con1 = gp.contract_root_arc(arcs.e)?;
        let s1 = con1.graph.strip_root_in_arcs().simplify().0;
        if !s1.has_arc(arcs.g) {
            return Err(Error::inconsistency(format!("arc {} lost in the contraction of {}", arcs.g, arcs.e)));
        }
        let right_s1 = self.solve_contracted(&s1, arcs.g)?;
        let right = lift_contraction_path(&gp, arcs.e, &s1, &right_s1, None)?;
        if right.max_dimension() > 0 {
            self.note(format!(
                "ladder column lifted through fibers of dimension up to {}",
                right.max_dimension()
            ));
        }
        let ladder = Ladder::from_right_column(right.steps, v, arcs.f, arcs.g);
        self.assemble(g, arcs, p_me, p_fg, ladder)
    }

    fn assemble(
        &mut self,
        g: &DiGraph,
        arcs: PivotArcs,
        p_me: Vec<Arborescence>,
        p_fg: Vec<Arborescence>,
        ladder: Ladder,
    ) -> Result<Vec<Arborescence>> {
        let m = ladder.len();
        if m == 0 {
            return Err(Error::inconsistency("the ladder of T_/e/f and T_/e/g is empty"));
        }
        let tilde = |b: &Arborescence| b.with_parent(arcs.u, arcs.e);
        let prime = |a: &Arborescence| a.with_parent(arcs.v, arcs.f);
        let locate = |a: &Arborescence| {
            ladder
                .locate(a)
                .ok_or_else(|| Error::inconsistency("arborescence expected on the ladder is missing"))
        };

        match (p_me.is_empty(), p_fg.is_empty()) {
            (true, true) => {
                self.note("case: ladder only");
                Ok(ladder.resolve(&ladder_walk_from(m, LadderVertex::new(1, Side::Left))?))
            }
            (false, true) => {
                self.note("case: T_fg empty");
                let start = locate(&tilde(p_me.last().expect("non-empty")))?;
                let mut out = p_me;
                out.extend(ladder.resolve(&ladder_walk_from(m, start)?));
                Ok(out)
            }
            (true, false) => {
                self.note("case: T_-e empty");
                let start = locate(&prime(p_fg.last().expect("non-empty")))?;
                let mut out = p_fg;
                out.extend(ladder.resolve(&ladder_walk_from(m, start)?));
                Ok(out)
            }
            (false, false) => self.assemble_full(g, arcs, p_me, p_fg, &ladder),
        }
    }

    fn assemble_full(
        &mut self,
        g: &DiGraph,
        arcs: PivotArcs,
        mut p_me: Vec<Arborescence>,
        mut p_fg: Vec<Arborescence>,
        ladder: &Ladder,
    ) -> Result<Vec<Arborescence>> {
        let m = ladder.len();
        let tilde = |b: &Arborescence| b.with_parent(arcs.u, arcs.e);
        let prime = |a: &Arborescence| a.with_parent(arcs.v, arcs.f);
        let locate = |a: &Arborescence| {
            ladder
                .locate(a)
                .ok_or_else(|| Error::inconsistency("arborescence expected on the ladder is missing"))
        };

        // Equal primes at both ends make P_fg a cycle; reopen it elsewhere if possible.
        if prime(&p_fg[0]) == prime(p_fg.last().expect("non-empty")) {
            if let Some(k) = differing_cyclic_pair(&p_fg, prime) {
                self.note(format!("P_fg closes into a cycle; reopened after position {k}"));
                p_fg.rotate_left(k + 1);
            }
        }

        let first = prime(&p_fg[0]);
        let last = prime(p_fg.last().expect("non-empty"));
        if first != last {
            self.note("case: distinct primes at the ends of P_fg");
            let s = locate(&first)?;
            let t = locate(&last)?;
            let mut cycle = ladder.resolve(&ladder_ham_path(m, s.level, s.side, t.level)?);
            cycle.extend(p_fg.into_iter().rev());
            let bt = tilde(p_me.last().expect("non-empty"));
            let k = cycle
                .iter()
                .position(|a| *a == bt)
                .ok_or_else(|| Error::inconsistency("end of P_-e does not lead into the cycle"))?;
            cycle.rotate_left(k);
            p_me.extend(cycle);
            return Ok(p_me);
        }

        // Every arborescence of T_fg has the same prime A*.
        let star = locate(&first)?;
        self.note(format!("case: constant prime at ladder level {}", star.level));
        let con = g.contract_root_arc(arcs.e)?;
        let ge = con.graph.strip_root_in_arcs().simplify().0;
        let structure = detect_flip_clique_structure(&ge, con.vertex_map[arcs.v.0])?;
        self.note(format!("G/e around v: {}", structure.label()));
        if structure == FlipCliqueStructure::NotApplicable {
            return Err(Error::inconsistency("constant prime but G/e has no flip-clique structure"));
        }

        let in_fg = |b: &Arborescence| b.parent(arcs.v) != Some(arcs.f) && b.parent(arcs.v) != Some(arcs.g);
        let mut rotated = false;
        loop {
            let b_first = tilde(&p_me[0]);
            let b_last = tilde(p_me.last().expect("non-empty"));

            if in_fg(&b_first) || in_fg(&b_last) {
                if !in_fg(&b_last) {
                    p_me.reverse();
                }
                self.note("case: an end of P_-e flips into T_fg");
                let bt = tilde(p_me.last().expect("non-empty"));
                let pos = p_fg
                    .iter()
                    .position(|a| *a == bt)
                    .ok_or_else(|| Error::inconsistency("flipped end of P_-e is not in T_fg"))?;
                let entry = p_fg.remove(pos);
                p_me.push(entry);
                p_me.extend(p_fg);
                p_me.extend(ladder.resolve(&ladder_walk_from(m, star)?));
                return Ok(p_me);
            }

            let l_first = locate(&b_first)?;
            let l_last = locate(&b_last)?;
            if l_first.level != star.level || l_last.level != star.level {
                if l_last.level == star.level {
                    p_me.reverse();
                }
                self.note("case: an end of P_-e flips onto the ladder away from A', A''");
                let s = locate(&tilde(p_me.last().expect("non-empty")))?;
                p_me.extend(ladder.resolve(&ladder_ham_path(m, s.level, s.side, star.level)?));
                p_me.extend(p_fg);
                return Ok(p_me);
            }

            if b_first != b_last {
                return Err(Error::inconsistency(
                    "ends of P_-e flip to the two different rung ends A' and A''",
                ));
            }
            if rotated {
                return Err(Error::inconsistency("reopened P_-e still ends at a single rung end"));
            }
            if let Some(k) = differing_cyclic_pair(&p_me, tilde) {
                self.note(format!("P_-e closes into a cycle; reopened after position {k}"));
                p_me.rotate_left(k + 1);
                rotated = true;
                continue;
            }

            self.note("case: every arborescence of T_-e flips to the same rung end");
            let whole = detect_flip_clique_structure(g, arcs.u)?;
            self.note(format!("G around u: {}", whole.label()));
            if whole == FlipCliqueStructure::NotApplicable {
                return Err(Error::inconsistency("constant flip of e but G has no flip-clique structure"));
            }
            let walk = ladder_walk_to_partner(m, l_first).ok_or_else(|| {
                Error::inconsistency(format!(
                    "ladder with {m} levels has no path between the ends of rung {}",
                    l_first.level
                ))
            })?;
            p_me.extend(ladder.resolve(&walk));
            p_me.extend(p_fg);
            return Ok(p_me);
        }
    }
}

/// First `k` such that positions `k` and `k+1` (cyclically) have different
/// images.
fn differing_cyclic_pair<F>(path: &[Arborescence], image: F) -> Option<usize>
where
    F: Fn(&Arborescence) -> Arborescence,
{
    let n = path.len();
    if n < 2 {
        return None;
    }
    let images: Vec<Arborescence> = path.iter().map(&image).collect();
    (0..n).find(|&k| images[k] != images[(k + 1) % n])
}
