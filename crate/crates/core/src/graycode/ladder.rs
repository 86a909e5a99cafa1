//! The abstract ladder: two paths `a_1..a_n` and `b_1..b_n` plus rungs
//! `a_i b_i`. Levels are 1-based. In the Gray code the left side holds the
//! arborescences containing `f` and the right side those containing `g`.

use serde::Serialize;

use crate::arborescence::{Arborescence, Flip};
use crate::digraph::{ArcId, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LadderVertex {
    pub level: usize,
    pub side: Side,
}

impl LadderVertex {
    pub fn new(level: usize, side: Side) -> Self {
        LadderVertex { level, side }
    }

    pub fn partner(self) -> Self {
        LadderVertex::new(self.level, self.side.other())
    }

    pub fn is_adjacent(self, other: LadderVertex) -> bool {
        (self.level == other.level && self.side != other.side)
            || (self.side == other.side && self.level.abs_diff(other.level) == 1)
    }
}

/// Hamiltonian path of the ladder from `(i, side)` to a vertex at level `j`.
///
/// Which vertex of level `j` is reached is forced: it is on the starting
/// side exactly when `j - i` is odd.
pub fn ladder_ham_path(n: usize, i: usize, side: Side, j: usize) -> Result<Vec<LadderVertex>> {
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::Precondition(format!(
            "levels {i} and {j} must be distinct and within 1..={n}"
        )));
    }
    // Work with j > i and start side `a`; undo the mirror at the end.
    let mirrored = j < i;
    let (i, j) = if mirrored { (n + 1 - i, n + 1 - j) } else { (i, j) };
    let a = side;
    let b = side.other();
    let mut path = Vec::with_capacity(2 * n);
    for l in (1..=i).rev() {
        path.push(LadderVertex::new(l, a));
    }
    for l in 1..=i {
        path.push(LadderVertex::new(l, b));
    }
    let mut s = b;
    for l in i + 1..j {
        path.push(LadderVertex::new(l, s));
        s = s.other();
        path.push(LadderVertex::new(l, s));
    }
    for l in j..=n {
        path.push(LadderVertex::new(l, s));
    }
    for l in (j..=n).rev() {
        path.push(LadderVertex::new(l, s.other()));
    }
    if mirrored {
        for x in &mut path {
            x.level = n + 1 - x.level;
        }
    }
    Ok(path)
}

/// Some Hamiltonian path of the ladder starting anywhere.
pub fn ladder_walk_from(n: usize, start: LadderVertex) -> Result<Vec<LadderVertex>> {
    if start.level == 0 || start.level > n {
        return Err(Error::Precondition(format!("level {} outside 1..={n}", start.level)));
    }
    if n == 1 {
        return Ok(vec![start, start.partner()]);
    }
    let target = if start.level == n { 1 } else { n };
    ladder_ham_path(n, start.level, start.side, target)
}

/// Hamiltonian path from `start` to its rung partner. Exists only when the
/// ladder has one level or `start` sits on an end level.
pub fn ladder_walk_to_partner(n: usize, start: LadderVertex) -> Option<Vec<LadderVertex>> {
    let i = start.level;
    if n == 0 || i == 0 || i > n {
        return None;
    }
    if n == 1 {
        return Some(vec![start, start.partner()]);
    }
    let far: Vec<usize> = if i == 1 {
        (1..=n).collect()
    } else if i == n {
        (1..=n).rev().collect()
    } else {
        return None;
    };
    let mut path: Vec<LadderVertex> = far.iter().map(|&l| LadderVertex::new(l, start.side)).collect();
    path.extend(far.iter().rev().map(|&l| LadderVertex::new(l, start.side.other())));
    Some(path)
}

/// Two parallel Gray paths joined at every level by the same `f <-> g` flip.
#[derive(Clone, Debug)]
pub struct Ladder {
    /// `(left, right)` per level, level 1 first.
    pub levels: Vec<(Arborescence, Arborescence)>,
    /// Left-to-right flip, identical at every level.
    pub rung: Flip,
}

impl Ladder {
    pub fn from_right_column(right: Vec<Arborescence>, pivot: VertexId, f: ArcId, g: ArcId) -> Self {
        let levels = right
            .into_iter()
            .map(|b| (b.with_parent(pivot, f), b))
            .collect();
        Ladder {
            levels,
            rung: Flip {
                removed: f,
                added: g,
                pivot,
            },
        }
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn get(&self, x: LadderVertex) -> &Arborescence {
        let (l, r) = &self.levels[x.level - 1];
        match x.side {
            Side::Left => l,
            Side::Right => r,
        }
    }

    pub fn locate(&self, a: &Arborescence) -> Option<LadderVertex> {
        let side = match a.parent(self.rung.pivot) {
            Some(p) if p == self.rung.removed => Side::Left,
            Some(p) if p == self.rung.added => Side::Right,
            _ => return None,
        };
        self.levels
            .iter()
            .position(|(l, r)| match side {
                Side::Left => l == a,
                Side::Right => r == a,
            })
            .map(|i| LadderVertex::new(i + 1, side))
    }

    pub fn left_column(&self) -> Vec<Arborescence> {
        self.levels.iter().map(|(l, _)| l.clone()).collect()
    }

    pub fn right_column(&self) -> Vec<Arborescence> {
        self.levels.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn resolve(&self, walk: &[LadderVertex]) -> Vec<Arborescence> {
        walk.iter().map(|&x| self.get(x).clone()).collect()
    }
}
