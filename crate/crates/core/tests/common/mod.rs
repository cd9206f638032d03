//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use polyprod::{Graph, SimplicialComplex};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Seed for randomized tests; override with `POLYPROD_SEED`.
pub fn seed() -> u64 {
    std::env::var("POLYPROD_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed());
    r.set_stream(stream);
    r
}

/// Adjacency masks of a graph on `0..n`.
pub type Adj = Vec<u32>;

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// The graph whose edge set is selected by the bits of `code`.
pub fn graph_from_code(n: usize, code: u64) -> Adj {
    let mut adj = vec![0u32; n];
    for (i, (a, b)) in all_pairs(n).into_iter().enumerate() {
        if code >> i & 1 == 1 {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    adj
}

pub fn random_graph(n: usize, p: f64, r: &mut impl Rng) -> Adj {
    let mut adj = vec![0u32; n];
    for (a, b) in all_pairs(n) {
        if r.gen_bool(p) {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    adj
}

/// A connected chordal graph: each new vertex is joined to a clique of
/// earlier vertices that contains a randomly chosen anchor.
pub fn random_chordal_graph(n: usize, r: &mut impl Rng) -> Adj {
    let mut adj = vec![0u32; n];
    for v in 1..n {
        let anchor = r.gen_range(0..v);
        let mut clique = 1u32 << anchor;
        for u in 0..v {
            if u != anchor && adj[u] & clique == clique && r.gen_bool(0.5) {
                clique |= 1 << u;
            }
        }
        for u in 0..v {
            if clique >> u & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    adj
}

pub fn to_graph(adj: &Adj) -> Graph {
    let mut edges = Vec::new();
    for (a, &nb) in adj.iter().enumerate() {
        for b in a + 1..adj.len() {
            if nb >> b & 1 == 1 {
                edges.push((a + 1, b + 1));
            }
        }
    }
    Graph::new(adj.len(), &edges).unwrap()
}

pub fn is_connected(adj: &Adj) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen.count_ones() as usize == n
}

fn is_clique_mask(adj: &Adj, s: u32) -> bool {
    (0..adj.len()).all(|v| s >> v & 1 == 0 || (adj[v] | 1 << v) & s == s)
}

/// Every subset of `0..n` that is a clique, as a mask.
pub fn brute_cliques(adj: &Adj) -> Vec<u32> {
    (0..1u32 << adj.len()).filter(|&s| is_clique_mask(adj, s)).collect()
}

/// Clique complex built directly from the brute-force clique list.
pub fn brute_clique_complex(adj: &Adj) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = brute_cliques(adj).into_iter().map(mask_to_labels).collect();
    SimplicialComplex::from_facets(adj.len(), facets).unwrap()
}

pub fn mask_to_labels(s: u32) -> Vec<usize> {
    (0..32).filter(|&i| s >> i & 1 == 1).map(|i| i + 1).collect()
}

/// A graph is chordal iff no vertex set of size at least four induces a
/// connected 2-regular subgraph.
pub fn brute_is_chordal(adj: &Adj) -> bool {
    let n = adj.len();
    for s in 0..1u32 << n {
        if s.count_ones() < 4 {
            continue;
        }
        let regular = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .all(|v| (adj[v] & s).count_ones() == 2);
        if regular {
            let verts: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            let sub: Adj = verts
                .iter()
                .map(|&v| {
                    verts
                        .iter()
                        .enumerate()
                        .filter(|&(_, &u)| adj[v] >> u & 1 == 1)
                        .fold(0u32, |acc, (j, _)| acc | 1 << j)
                })
                .collect();
            if is_connected(&sub) {
                return false;
            }
        }
    }
    true
}

/// Random complex on `m` vertices from a handful of random facets; ghost
/// vertices can occur.
pub fn random_complex(m: usize, r: &mut impl Rng) -> SimplicialComplex {
    let count = r.gen_range(0..=2 * m);
    let p = r.gen_range(0.2..0.7);
    let facets: Vec<Vec<usize>> = (0..count)
        .map(|_| (1..=m).filter(|_| r.gen_bool(p)).collect())
        .collect();
    SimplicialComplex::from_facets(m, facets).unwrap()
}

/// Every simplicial complex (downward-closed family containing the empty
/// face) on `m <= 5` ground elements, as 64-bit families of masks.
pub fn all_downsets(m: usize) -> Vec<u64> {
    assert!(m <= 5);
    let top = 1u32 << m;
    let mut out = Vec::new();
    fn walk(mask: u32, top: u32, fam: u64, out: &mut Vec<u64>) {
        if mask == top {
            out.push(fam);
            return;
        }
        walk(mask + 1, top, fam, out);
        let closed = (0..32).all(|i| mask >> i & 1 == 0 || fam >> (mask & !(1 << i)) & 1 == 1);
        if closed {
            walk(mask + 1, top, fam | 1 << mask, out);
        }
    }
    walk(1, top, 1, &mut out);
    out
}

pub fn family_to_complex(m: usize, fam: u64) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = (0..64u32)
        .filter(|&s| fam >> s & 1 == 1)
        .map(mask_to_labels)
        .collect();
    SimplicialComplex::from_facets(m, facets).unwrap()
}

pub fn complex_to_family(k: &SimplicialComplex) -> u64 {
    k.faces().iter().fold(0u64, |acc, f| acc | 1 << f.bits())
}

/// The inclusion-minimum among all flag complexes on the vertex set of
/// `fam` that contain it, found by trying every edge set. `None` if the
/// candidates have no minimum.
pub fn brute_minimal_flag_extension(m: usize, fam: u64) -> Option<u64> {
    let vertices = (0..m).filter(|&i| fam >> (1u32 << i) & 1 == 1).fold(0u32, |a, i| a | 1 << i);
    let pairs: Vec<(usize, usize)> = all_pairs(m)
        .into_iter()
        .filter(|&(a, b)| vertices >> a & 1 == 1 && vertices >> b & 1 == 1)
        .collect();
    let mut candidates = Vec::new();
    for code in 0..1u64 << pairs.len() {
        let mut adj = vec![0u32; m];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if code >> i & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        let flag = (0..1u32 << m)
            .filter(|&s| s & !vertices == 0 && is_clique_mask(&adj, s))
            .fold(0u64, |acc, s| acc | 1 << s);
        if fam & !flag == 0 {
            candidates.push(flag);
        }
    }
    let least = *candidates.iter().min_by_key(|c| c.count_ones())?;
    candidates.iter().all(|&c| least & !c == 0).then_some(least)
}

/// Faces as sets of labels.
pub fn face_sets(k: &SimplicialComplex) -> BTreeSet<Vec<usize>> {
    k.faces().iter().map(|&f| k.face_labels(f)).collect()
}

/// Flagness straight from the definition: every vertex set whose pairs are
/// all faces is a face.
pub fn brute_is_flag(k: &SimplicialComplex) -> bool {
    let faces = face_sets(k);
    let labels = k.labels();
    let n = labels.len();
    (0..1u32 << n).all(|s| {
        let set: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).map(|i| labels[i]).collect();
        let spanned = set.iter().all(|&a| {
            set.iter()
                .all(|&b| faces.contains(&if a < b { vec![a, b] } else if a == b { vec![a] } else { vec![b, a] }))
        });
        !spanned || faces.contains(&set)
    })
}
