//! Flagification: the smallest flag complex containing a given complex.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagificationResult {
    pub flag_complex: SimplicialComplex,
    /// Faces of the flagification that are not faces of the input, sorted by
    /// size then lexicographically.
    pub added_faces: Vec<FaceSet>,
}

/// All cliques of `g` (including the empty one), as positions.
pub fn cliques(g: &Graph) -> Vec<FaceSet> {
    let mut out = vec![FaceSet::EMPTY];
    // each clique is grown only by vertices above its largest member
    let mut frontier: Vec<(FaceSet, FaceSet)> = vec![(FaceSet::EMPTY, g.vertex_set())];
    while let Some((clique, candidates)) = frontier.pop() {
        for v in candidates.iter() {
            let next = clique.with(v);
            out.push(next);
            let above = FaceSet::from_bits(
                candidates.bits() & u32::MAX.checked_shl(v as u32 + 1).unwrap_or(0),
            );
            let rest = above.intersection(g.neighbours(v));
            if !rest.is_empty() {
                frontier.push((next, rest));
            }
        }
    }
    out
}

/// The clique complex of a graph, on the graph's ground set.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_closed(g.labels().to_vec(), cliques(g))
}

/// `K^f`: fill in every clique of the 1-skeleton.
pub fn flagify(k: &SimplicialComplex) -> FlagificationResult {
    let flag_complex = clique_complex(&k.skeleton_graph());
    let mut added_faces: Vec<FaceSet> = flag_complex
        .faces()
        .iter()
        .copied()
        .filter(|&f| !k.contains(f))
        .collect();
    added_faces.sort_by(FaceSet::graded_cmp);
    FlagificationResult {
        flag_complex,
        added_faces,
    }
}

/// True iff `f` is the minimal flag complex containing `k`.
pub fn is_minimal_flag_extension(k: &SimplicialComplex, f: &SimplicialComplex) -> Result<bool> {
    if k.labels() != f.labels() {
        return Err(Error::GroundSetMismatch);
    }
    Ok(flagify(k).flag_complex == *f)
}
