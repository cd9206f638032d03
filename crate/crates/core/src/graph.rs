//! Simple graphs on a labelled vertex set, stored as adjacency bit masks.

use crate::error::{Error, Result};
use crate::face::FaceSet;

/// Disjoint-set forest with union by size and path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already in the same set.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }
}

/// An undirected loopless graph.
///
/// The ground set may contain positions that are not vertices of the graph
/// (ghost vertices of the complex it came from); those are ignored by every
/// algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<usize>,
    vertices: FaceSet,
    adj: Vec<FaceSet>,
}

impl Graph {
    /// A graph on vertices `1..=n` with the given edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > crate::MAX_VERTICES {
            return Err(Error::TooManyVertices {
                m: n,
                limit: crate::MAX_VERTICES,
            });
        }
        let mut adj = vec![FaceSet::EMPTY; n];
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, m: n });
                }
            }
            if a == b {
                return Err(Error::InvalidArgument(format!("loop at vertex {a}")));
            }
            adj[a - 1] = adj[a - 1].with(b - 1);
            adj[b - 1] = adj[b - 1].with(a - 1);
        }
        Ok(Graph {
            labels: (1..=n).collect(),
            vertices: FaceSet::full(n),
            adj,
        })
    }

    pub(crate) fn from_parts(labels: Vec<usize>, vertices: FaceSet, adj: Vec<FaceSet>) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        Graph {
            labels,
            vertices,
            adj,
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .collect();
        Graph::new(n, &edges).expect("valid complete graph")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (1..=n).map(|a| (a, a % n + 1)).collect();
        Graph::new(n, &edges).expect("valid cycle")
    }

    /// Size of the ground set (including non-vertices).
    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, pos: usize) -> usize {
        self.labels[pos]
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// Positions that are actual vertices.
    pub fn vertex_set(&self) -> FaceSet {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertex labels in increasing order.
    pub fn vertex_labels(&self) -> Vec<usize> {
        self.vertices.iter().map(|p| self.labels[p]).collect()
    }

    pub fn neighbours(&self, pos: usize) -> FaceSet {
        self.adj[pos]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    /// Edges as label pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in self.vertices.iter() {
            for b in self.adj[a].iter().filter(|&b| b > a) {
                out.push((self.labels[a], self.labels[b]));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn is_clique(&self, set: FaceSet) -> bool {
        set.iter().all(|p| set.without(p).is_subset(self.adj[p]))
    }

    /// Connected components of the subgraph induced on `subset` (positions).
    pub fn component_count_within(&self, subset: FaceSet) -> usize {
        let subset = subset.intersection(self.vertices);
        let mut uf = UnionFind::new(self.labels.len());
        for a in subset.iter() {
            for b in self.adj[a].intersection(subset).iter().filter(|&b| b > a) {
                uf.union(a, b);
            }
        }
        // positions outside the subset are singleton sets in `uf`
        uf.set_count() - (self.labels.len() - subset.len())
    }

    pub fn connected_component_count(&self) -> usize {
        self.component_count_within(self.vertices)
    }

    /// The subgraph induced on `subset` (positions), on the same ground set.
    pub fn induced(&self, subset: FaceSet) -> Graph {
        let vertices = subset.intersection(self.vertices);
        let adj = (0..self.labels.len())
            .map(|p| {
                if vertices.contains(p) {
                    self.adj[p].intersection(vertices)
                } else {
                    FaceSet::EMPTY
                }
            })
            .collect();
        Graph {
            labels: self.labels.clone(),
            vertices,
            adj,
        }
    }

    /// Shortest path from `from` to `to` using only positions in `allowed`
    /// (endpoints must be allowed). Returns positions, endpoints included.
    pub(crate) fn shortest_path_within(
        &self,
        from: usize,
        to: usize,
        allowed: FaceSet,
    ) -> Option<Vec<usize>> {
        let n = self.labels.len();
        let mut prev = vec![usize::MAX; n];
        let mut seen = FaceSet::singleton(from);
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in self.adj[x].intersection(allowed).difference(seen).iter() {
                seen = seen.with(y);
                prev[y] = x;
                queue.push_back(y);
            }
        }
        None
    }
}
