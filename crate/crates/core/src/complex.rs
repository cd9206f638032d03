//! Abstract simplicial complexes on a finite labelled ground set.
//!
//! A [`SimplicialComplex`] stores its ground set as a strictly increasing list
//! of 1-based labels together with the full, sorted family of faces as bit
//! masks over positions in that list. Elements of the ground set that are not
//! vertices of the complex are *ghost vertices*; they are kept so that stars,
//! links and deletions can be compared on a fixed ground set.
//!
//! Operations that shrink the ground set ([`SimplicialComplex::link`],
//! [`SimplicialComplex::delete`], [`SimplicialComplex::full_subcomplex`])
//! keep the original labels, so results can be re-embedded with
//! [`SimplicialComplex::embed`].

use std::fmt;

use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::graph::Graph;

/// Default cap on the ground set size accepted by constructors.
pub const DEFAULT_VERTEX_GUARD: usize = 24;

/// Hard cap imposed by the 32-bit face representation.
pub const MAX_VERTICES: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Vec<usize>,
    /// Sorted by numeric mask value; always contains the empty face.
    faces: Vec<FaceSet>,
}

impl SimplicialComplex {
    /// The downward closure of `facets` on the ground set `1..=m`.
    ///
    /// Vertices that appear in no facet become ghost vertices. Uses the default
    /// guard of [`DEFAULT_VERTEX_GUARD`] vertices.
    pub fn from_facets<F, I>(m: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[usize]>,
    {
        Self::from_facets_with_guard(m, facets, DEFAULT_VERTEX_GUARD)
    }

    pub fn from_facets_with_guard<F, I>(m: usize, facets: I, guard: usize) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[usize]>,
    {
        if m == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let limit = guard.min(MAX_VERTICES);
        if m > limit {
            return Err(Error::TooManyVertices { m, limit });
        }
        let mut gens = Vec::new();
        for facet in facets {
            let mut mask = FaceSet::EMPTY;
            for &v in facet.as_ref() {
                if v == 0 || v > m {
                    return Err(Error::VertexOutOfRange { vertex: v, m });
                }
                mask = mask.with(v - 1);
            }
            gens.push(mask);
        }
        Ok(Self::close((1..=m).collect(), gens))
    }

    /// Downward closure of `generators` on the given labels.
    pub(crate) fn close(labels: Vec<usize>, generators: Vec<FaceSet>) -> Self {
        let mut gens = generators;
        gens.sort_unstable_by_key(|g| std::cmp::Reverse(g.len()));
        let mut maximal: Vec<FaceSet> = Vec::new();
        for g in gens {
            if !maximal.iter().any(|f| g.is_subset(*f)) {
                maximal.push(g);
            }
        }
        let mut faces: Vec<FaceSet> = maximal.iter().flat_map(|f| f.subsets()).collect();
        faces.push(FaceSet::EMPTY);
        faces.sort_unstable();
        faces.dedup();
        SimplicialComplex { labels, faces }
    }

    /// Wraps an already downward-closed family.
    pub(crate) fn from_closed(labels: Vec<usize>, mut faces: Vec<FaceSet>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        debug_assert!(faces.first() == Some(&FaceSet::EMPTY));
        let k = SimplicialComplex { labels, faces };
        debug_assert!(k.is_downward_closed());
        k
    }

    /// The full simplex on `1..=m`.
    pub fn simplex(m: usize) -> Result<Self> {
        Self::from_facets(m, [(1..=m).collect::<Vec<_>>()])
    }

    /// The boundary of the simplex on `1..=m`: every proper subset is a face.
    pub fn simplex_boundary(m: usize) -> Result<Self> {
        let facets: Vec<Vec<usize>> = (1..=m)
            .map(|skip| (1..=m).filter(|&v| v != skip).collect())
            .collect();
        Self::from_facets(m, facets)
    }

    /// `m` disjoint points.
    pub fn points(m: usize) -> Result<Self> {
        Self::from_facets(m, (1..=m).map(|v| vec![v]))
    }

    /// The cycle `1-2-..-m-1` as a 1-dimensional complex (`m >= 3`).
    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs at least 3 vertices, got {m}")));
        }
        Self::from_facets(m, (1..=m).map(|v| vec![v, v % m + 1]))
    }

    /// The path `1-2-..-m`.
    pub fn path(m: usize) -> Result<Self> {
        if m == 1 {
            return Self::points(1);
        }
        Self::from_facets(m, (1..m).map(|v| vec![v, v + 1]))
    }

    /// Size of the ground set, ghost vertices included.
    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    /// Ground set labels in increasing order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn position(&self, label: usize) -> Result<usize> {
        self.labels
            .binary_search(&label)
            .map_err(|_| Error::UnknownVertex(label))
    }

    /// All faces, sorted by mask value. The first entry is the empty face.
    pub fn faces(&self) -> &[FaceSet] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: FaceSet) -> bool {
        self.faces.binary_search(&face).is_ok()
    }

    /// Membership test for a face given by labels. Unknown labels give `false`.
    pub fn contains_labels(&self, face: &[usize]) -> bool {
        self.face_from_labels(face).is_ok_and(|f| self.contains(f))
    }

    pub fn face_from_labels(&self, face: &[usize]) -> Result<FaceSet> {
        face.iter()
            .try_fold(FaceSet::EMPTY, |acc, &v| Ok(acc.with(self.position(v)?)))
    }

    pub fn face_labels(&self, face: FaceSet) -> Vec<usize> {
        face.iter().map(|p| self.labels[p]).collect()
    }

    /// Positions `i` with `{i}` a face.
    pub fn vertex_set(&self) -> FaceSet {
        self.faces
            .iter()
            .filter(|f| f.len() == 1)
            .fold(FaceSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn vertex_labels(&self) -> Vec<usize> {
        self.face_labels(self.vertex_set())
    }

    pub fn ghost_vertices(&self) -> Vec<usize> {
        self.face_labels(FaceSet::full(self.ground_size()).difference(self.vertex_set()))
    }

    pub fn has_ghost_vertices(&self) -> bool {
        self.vertex_set().len() < self.ground_size()
    }

    /// Largest face size minus one; the complex `{∅}` has dimension -1.
    pub fn dimension(&self) -> isize {
        self.faces.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1
    }

    /// `f[k]` counts faces with `k` elements (so `f[0] = 1` counts `∅`).
    pub fn face_size_counts(&self) -> Vec<usize> {
        let mut f = vec![0; (self.dimension() + 2) as usize];
        for face in &self.faces {
            f[face.len()] += 1;
        }
        f
    }

    /// Inclusion-maximal faces, sorted by size then lexicographically.
    pub fn facets(&self) -> Vec<FaceSet> {
        let n = self.ground_size();
        let mut out: Vec<FaceSet> = self
            .faces
            .iter()
            .copied()
            .filter(|&f| {
                (0..n)
                    .filter(|&p| !f.contains(p))
                    .all(|p| !self.contains(f.with(p)))
            })
            .collect();
        out.sort_by(FaceSet::graded_cmp);
        out
    }

    /// Facets as label lists. The complex `{∅}` yields no facets.
    pub fn facet_labels(&self) -> Vec<Vec<usize>> {
        self.facets()
            .into_iter()
            .filter(|f| !f.is_empty())
            .map(|f| self.face_labels(f))
            .collect()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.contains(FaceSet::EMPTY)
            && self.faces.iter().all(|f| {
                f.bits() >> self.ground_size() == 0 && f.iter().all(|p| self.contains(f.without(p)))
            })
    }

    /// `star(v) = {τ ∈ K | τ ∪ {v} ∈ K}`, on the same ground set.
    ///
    /// For a ghost vertex the star and link are `{∅}`.
    pub fn star(&self, v: usize) -> Result<Self> {
        let p = self.position(v)?;
        let mut faces: Vec<FaceSet> = self
            .faces
            .iter()
            .copied()
            .filter(|f| self.contains(f.with(p)))
            .collect();
        faces.push(FaceSet::EMPTY);
        Ok(Self::from_closed(self.labels.clone(), faces))
    }

    /// `link(v) = star(v) ∩ (K \ v)`, on the ground set with `v` removed.
    pub fn link(&self, v: usize) -> Result<Self> {
        let p = self.position(v)?;
        let mut faces: Vec<FaceSet> = self
            .faces
            .iter()
            .copied()
            .filter(|f| !f.contains(p) && self.contains(f.with(p)))
            .collect();
        faces.push(FaceSet::EMPTY);
        Ok(self.restrict_faces(FaceSet::full(self.ground_size()).without(p), faces))
    }

    /// Deletion `K \ v = {τ ∈ K | v ∉ τ}`, on the ground set with `v` removed.
    pub fn delete(&self, v: usize) -> Result<Self> {
        let p = self.position(v)?;
        let keep = FaceSet::full(self.ground_size()).without(p);
        Ok(self.full_subcomplex_mask(keep))
    }

    /// `K_ω = {σ ∈ K | σ ⊆ ω}` on the ground set `ω` (labels kept).
    pub fn full_subcomplex(&self, omega: &[usize]) -> Result<Self> {
        let mask = self.face_from_labels(omega)?;
        Ok(self.full_subcomplex_mask(mask))
    }

    /// Full subcomplex on a set of positions.
    pub fn full_subcomplex_mask(&self, omega: FaceSet) -> Self {
        let faces = self
            .faces
            .iter()
            .copied()
            .filter(|f| f.is_subset(omega))
            .collect();
        self.restrict_faces(omega, faces)
    }

    fn restrict_faces(&self, keep: FaceSet, faces: Vec<FaceSet>) -> Self {
        let labels = keep.iter().map(|p| self.labels[p]).collect();
        let faces = faces.into_iter().map(|f| f.compress(keep)).collect();
        Self::from_closed(labels, faces)
    }

    /// The join `K1 * K2`. The second complex's ground set is re-indexed after
    /// the first one's, so the result lives on `1..=m1+m2`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let (m1, m2) = (self.ground_size(), other.ground_size());
        if m1 + m2 > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                m: m1 + m2,
                limit: MAX_VERTICES,
            });
        }
        let mut faces = Vec::with_capacity(self.faces.len() * other.faces.len());
        for a in &self.faces {
            for b in &other.faces {
                faces.push(FaceSet::from_bits(a.bits() | (b.bits() << m1)));
            }
        }
        Ok(Self::from_closed((1..=m1 + m2).collect(), faces))
    }

    /// The same faces regarded on a larger ground set `ground`, which must
    /// contain every label of `self`.
    pub fn embed(&self, ground: &[usize]) -> Result<Self> {
        let mut labels = ground.to_vec();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                m: labels.len(),
                limit: MAX_VERTICES,
            });
        }
        let mut image = FaceSet::EMPTY;
        for &l in &self.labels {
            let p = labels.binary_search(&l).map_err(|_| Error::UnknownVertex(l))?;
            image = image.with(p);
        }
        let faces = self.faces.iter().map(|f| f.expand(image)).collect();
        Ok(Self::from_closed(labels, faces))
    }

    /// Inclusion-minimal non-faces, sorted by size then lexicographically.
    ///
    /// A ghost vertex is a missing face of size one.
    pub fn missing_faces(&self) -> Vec<FaceSet> {
        let n = self.ground_size();
        // every missing face is σ ∪ {x} for some face σ and x ∉ σ
        let mut out: Vec<FaceSet> = Vec::new();
        for &sigma in &self.faces {
            for x in (0..n).filter(|&x| !sigma.contains(x)) {
                let omega = sigma.with(x);
                if !self.contains(omega) && omega.iter().all(|y| self.contains(omega.without(y))) {
                    out.push(omega);
                }
            }
        }
        out.sort_by(FaceSet::graded_cmp);
        out.dedup();
        out
    }

    pub fn is_flag(&self) -> bool {
        self.flag_witness().is_none()
    }

    /// A missing face with more than two vertices, if any.
    pub fn flag_witness(&self) -> Option<FaceSet> {
        self.missing_faces().into_iter().find(|f| f.len() > 2)
    }

    /// The 1-skeleton as a graph on the same ground set.
    pub fn skeleton_graph(&self) -> Graph {
        let n = self.ground_size();
        let mut adj = vec![FaceSet::EMPTY; n];
        for f in self.faces.iter().filter(|f| f.len() == 2) {
            let mut it = f.iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            adj[a] = adj[a].with(b);
            adj[b] = adj[b].with(a);
        }
        Graph::from_parts(self.labels.clone(), self.vertex_set(), adj)
    }

    /// Number of connected components (ghost vertices do not count).
    pub fn connected_component_count(&self) -> usize {
        self.skeleton_graph().connected_component_count()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("labels", &self.labels)
            .field("facets", &self.facet_labels())
            .finish()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self
            .facet_labels()
            .iter()
            .map(|fc| fc.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}] {{{}}}", self.ground_size(), facets.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels_of(k: &SimplicialComplex) -> Vec<Vec<usize>> {
        let mut v: Vec<_> = k.faces().iter().map(|&f| k.face_labels(f)).collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        v
    }

    fn four_cycle() -> SimplicialComplex {
        SimplicialComplex::cycle(4).unwrap()
    }

    #[test]
    fn closure_of_triangle_boundary() {
        let k = SimplicialComplex::from_facets(3, [[1, 2], [2, 3], [1, 3]]).unwrap();
        assert_eq!(
            labels_of(&k),
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn empty_facet_list_gives_ghosts() {
        let k = SimplicialComplex::from_facets(3, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(k.face_count(), 1);
        assert_eq!(k.ghost_vertices(), vec![1, 2, 3]);
        assert_eq!(k.dimension(), -1);
    }

    #[test]
    fn four_cycle_face_count() {
        assert_eq!(four_cycle().face_count(), 9);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            SimplicialComplex::from_facets(3, [[1, 4]]),
            Err(Error::VertexOutOfRange { vertex: 4, m: 3 })
        );
        assert_eq!(
            SimplicialComplex::from_facets(3, [[0, 1]]),
            Err(Error::VertexOutOfRange { vertex: 0, m: 3 })
        );
        assert_eq!(
            SimplicialComplex::from_facets(0, Vec::<Vec<usize>>::new()),
            Err(Error::EmptyGroundSet)
        );
        assert_eq!(
            SimplicialComplex::points(25),
            Err(Error::TooManyVertices { m: 25, limit: 24 })
        );
        assert!(SimplicialComplex::from_facets_with_guard(25, [[1]], 28).is_ok());
    }

    #[test]
    fn star_of_cycle_vertex() {
        let s = four_cycle().star(1).unwrap();
        assert_eq!(
            labels_of(&s),
            vec![vec![], vec![1], vec![2], vec![4], vec![1, 2], vec![1, 4]]
        );
        assert_eq!(s.ground_size(), 4);
        assert_eq!(s.ghost_vertices(), vec![3]);
    }

    #[test]
    fn star_of_simplex_and_of_ghost() {
        let d = SimplicialComplex::simplex(3).unwrap();
        for v in 1..=3 {
            assert_eq!(d.star(v).unwrap(), d);
        }
        let e = SimplicialComplex::from_facets(2, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(e.star(1).unwrap().face_count(), 1);
        assert_eq!(e.star(3), Err(Error::UnknownVertex(3)));
    }

    #[test]
    fn link_and_delete_of_cycle() {
        let k = four_cycle();
        let lk = k.link(1).unwrap();
        assert_eq!(lk.labels(), &[2, 3, 4]);
        assert_eq!(labels_of(&lk), vec![vec![], vec![2], vec![4]]);
        assert_eq!(lk.ghost_vertices(), vec![3]);
        let dl = k.delete(1).unwrap();
        assert_eq!(dl.facet_labels(), vec![vec![2, 3], vec![3, 4]]);
    }

    #[test]
    fn link_and_delete_of_simplex() {
        let d = SimplicialComplex::simplex(3).unwrap();
        let edge = vec![vec![1, 2]];
        assert_eq!(d.link(3).unwrap().facet_labels(), edge);
        assert_eq!(d.delete(3).unwrap().facet_labels(), edge);
    }

    #[test]
    fn link_and_delete_of_points() {
        let k = SimplicialComplex::points(4).unwrap();
        let lk = k.link(2).unwrap();
        assert_eq!(lk.face_count(), 1);
        assert_eq!(lk.ghost_vertices(), vec![1, 3, 4]);
        assert_eq!(k.delete(2).unwrap().facet_labels(), vec![vec![1], vec![3], vec![4]]);
    }

    #[test]
    fn joins() {
        let pt = SimplicialComplex::points(1).unwrap();
        assert_eq!(pt.join(&pt).unwrap(), SimplicialComplex::simplex(2).unwrap());
        let two = SimplicialComplex::points(2).unwrap();
        let j = two.join(&two).unwrap();
        // 1,2 | 3,4: edges 13 14 23 24, which is the cycle 1-3-2-4
        let sq = SimplicialComplex::from_facets(4, [[1, 3], [3, 2], [2, 4], [4, 1]]).unwrap();
        assert_eq!(j, sq);
    }

    #[test]
    fn full_subcomplexes_of_pentagon() {
        let c5 = SimplicialComplex::cycle(5).unwrap();
        assert_eq!(c5.full_subcomplex(&[2, 3]).unwrap().facet_labels(), vec![vec![2, 3]]);
        let two = c5.full_subcomplex(&[1, 3]).unwrap();
        assert_eq!(two.facet_labels(), vec![vec![1], vec![3]]);
        assert_eq!(two.connected_component_count(), 2);
        let k = c5.full_subcomplex(&[1, 2, 4]).unwrap();
        assert_eq!(k.connected_component_count(), 2);
        assert_eq!(c5.connected_component_count(), 1);
        assert_eq!(SimplicialComplex::points(3).unwrap().connected_component_count(), 3);
    }

    #[test]
    fn missing_faces_examples() {
        let b = SimplicialComplex::simplex_boundary(3).unwrap();
        let mf = b.missing_faces();
        assert_eq!(mf, vec![FaceSet::full(3)]);
        assert!(!b.is_flag());

        let c4 = four_cycle();
        let mf: Vec<_> = c4.missing_faces().iter().map(|&f| c4.face_labels(f)).collect();
        assert_eq!(mf, vec![vec![1, 3], vec![2, 4]]);
        for m in 4..=8 {
            let c = SimplicialComplex::cycle(m).unwrap();
            assert!(c.missing_faces().iter().all(|f| f.len() == 2));
            assert!(c.is_flag());
        }
        assert!(!SimplicialComplex::cycle(3).unwrap().is_flag());
    }

    #[test]
    fn ghosts_are_size_one_missing_faces() {
        let k = SimplicialComplex::from_facets(3, [[1, 2]]).unwrap();
        let mf: Vec<_> = k.missing_faces().iter().map(|&f| k.face_labels(f)).collect();
        assert_eq!(mf, vec![vec![3]]);
        assert!(k.is_flag());
    }

    #[test]
    fn embed_restores_ground_set() {
        let k = four_cycle();
        let d = k.delete(2).unwrap().embed(k.labels()).unwrap();
        assert_eq!(d.ground_size(), 4);
        assert_eq!(d.ghost_vertices(), vec![2]);
        assert!(d.faces().iter().all(|&f| k.contains(f)));
        assert_eq!(k.link(1).unwrap().embed(&[2, 3]), Err(Error::UnknownVertex(4)));
    }
}
