//! Chordality testing with certificates.
//!
//! Orderings follow the "lesser neighbours" convention: an ordering is a
//! perfect elimination ordering when, for every vertex, the neighbours that
//! come *earlier* in the ordering are pairwise adjacent. In this convention the
//! visit order of a lexicographic breadth-first search is itself a perfect
//! elimination ordering whenever the graph is chordal.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::graph::Graph;

/// A vertex ordering by labels; position in the list is the elimination rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
}

/// An induced cycle on at least four vertices, as labels in cyclic order.
///
/// Stored canonically: it starts at its smallest label and continues towards
/// the smaller of that vertex's two cycle neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordlessCycle {
    pub cycle: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal(EliminationOrdering),
    NotChordal(ChordlessCycle),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

impl ChordlessCycle {
    fn canonical(mut cycle: Vec<usize>) -> Self {
        let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
        cycle.rotate_left(start);
        if cycle.len() > 2 && cycle[cycle.len() - 1] < cycle[1] {
            cycle[1..].reverse();
        }
        ChordlessCycle { cycle }
    }

    /// Structural check: at least four distinct vertices, consecutive pairs
    /// adjacent, all other pairs non-adjacent.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let n = self.cycle.len();
        if n < 4 {
            return false;
        }
        let Some(pos) = self
            .cycle
            .iter()
            .map(|&l| g.position(l).filter(|&p| g.vertex_set().contains(p)))
            .collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        if FaceSet::from_positions(pos.iter().copied()).len() != n {
            return false;
        }
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                g.adjacent(pos[i], pos[j]) == consecutive
            })
        })
    }
}

fn lex_bfs_positions(g: &Graph) -> Vec<usize> {
    let n = g.ground_size();
    let vertices = g.vertex_set();
    let mut label: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = FaceSet::EMPTY;
    let mut order = Vec::with_capacity(vertices.len());
    let total = vertices.len();
    for step in 0..total {
        // largest label wins; ties go to the lowest index
        let mut best: Option<usize> = None;
        for p in vertices.difference(visited).iter() {
            if best.is_none_or(|b| label[p] > label[b]) {
                best = Some(p);
            }
        }
        let v = best.expect("unvisited vertex remains");
        visited = visited.with(v);
        order.push(v);
        for w in g.neighbours(v).difference(visited).iter() {
            label[w].push(total - step);
        }
    }
    order
}

/// Lexicographic breadth-first search visit order, as labels.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    lex_bfs_positions(g).into_iter().map(|p| g.label(p)).collect()
}

fn order_positions(g: &Graph, order: &[usize]) -> Result<Vec<usize>> {
    let mut seen = FaceSet::EMPTY;
    let mut out = Vec::with_capacity(order.len());
    for &l in order {
        let p = g
            .position(l)
            .filter(|&p| g.vertex_set().contains(p) && !seen.contains(p))
            .ok_or(Error::NotAPermutation)?;
        seen = seen.with(p);
        out.push(p);
    }
    if seen != g.vertex_set() {
        return Err(Error::NotAPermutation);
    }
    Ok(out)
}

/// Violations `(i, u, w)`: `u`, `w` are non-adjacent neighbours of `i` that
/// come before it in `order`. Positions.
fn violations(g: &Graph, order: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let mut earlier = FaceSet::EMPTY;
    for &i in order {
        let lesser = g.neighbours(i).intersection(earlier);
        for u in lesser.iter() {
            for w in lesser.difference(g.neighbours(u)).iter().filter(|&w| w > u) {
                out.push((i, u, w));
            }
        }
        earlier = earlier.with(i);
    }
    out
}

pub fn verify_peo(g: &Graph, order: &[usize]) -> Result<bool> {
    let pos = order_positions(g, order)?;
    let mut earlier = FaceSet::EMPTY;
    for i in pos {
        if !g.is_clique(g.neighbours(i).intersection(earlier)) {
            return Ok(false);
        }
        earlier = earlier.with(i);
    }
    Ok(true)
}

/// Chordless cycle `i, u, .., w` from a shortest `u`–`w` path avoiding `i` and
/// its other neighbours.
fn cycle_through(g: &Graph, i: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let blocked = g.neighbours(i).with(i).without(u).without(w);
    let allowed = g.vertex_set().difference(blocked);
    let path = g.shortest_path_within(u, w, allowed)?;
    let mut cycle = vec![i];
    cycle.extend(path);
    Some(cycle)
}

/// Decide chordality, with a perfect elimination ordering or a chordless cycle
/// as certificate.
pub fn is_chordal(g: &Graph) -> Chordality {
    let order = lex_bfs_positions(g);
    let found = violations(g, &order);
    if found.is_empty() {
        return Chordality::Chordal(EliminationOrdering {
            order: order.into_iter().map(|p| g.label(p)).collect(),
        });
    }
    let from_order = found.iter().copied();
    // any vertex of a chordless cycle, with its two cycle neighbours, works
    let all = g.vertex_set().iter().flat_map(|i| {
        let nb = g.neighbours(i);
        nb.iter().flat_map(move |u| {
            nb.difference(g.neighbours(u))
                .iter()
                .filter(move |&w| w > u)
                .map(move |w| (i, u, w))
        })
    });
    let cycle = from_order
        .chain(all)
        .find_map(|(i, u, w)| cycle_through(g, i, u, w))
        .expect("a graph without a perfect elimination ordering has a chordless cycle");
    Chordality::NotChordal(ChordlessCycle::canonical(
        cycle.into_iter().map(|p| g.label(p)).collect(),
    ))
}
