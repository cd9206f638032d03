//! Wedge decompositions of polyhedral products `(CY, Y)^K` over flag
//! complexes with chordal 1-skeleton.
//!
//! For such `K` the polyhedral product splits as a wedge, over subsets
//! `ω ⊆ [m]` with `|ω| ≥ 2`, of `c(ω)` copies of `Σ Y_{i1} ∧ .. ∧ Y_{ik}`,
//! where `c(ω)` is one less than the number of connected components of the
//! full subcomplex `K_ω`. When every `Y_i` is a sphere `S^(n_i - 1)` each
//! summand is a sphere of dimension `1 + Σ (n_i - 1)`; the moment-angle
//! complex `Z_K = (D², S¹)^K` is the case `n_i = 2`.

use serde::{Deserialize, Serialize};

use crate::chordal::{is_chordal, Chordality};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::series::PoincareSeries;

/// Which pairs `(CY_i, Y_i)` the polyhedral product is built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "dims")]
pub enum Pairs {
    /// `(D², S¹)` at every vertex.
    MomentAngle,
    /// `Y_i = S^(n_i - 1)` for the listed `n_i ≥ 1`.
    Spheres(Vec<u32>),
    /// Arbitrary `Y_i`, named symbolically.
    Symbolic,
}

impl Pairs {
    /// The `n_i` for vertices `1..=m`, or `None` in symbolic mode.
    pub fn sphere_dims(&self, m: usize) -> Result<Option<Vec<u32>>> {
        match self {
            Pairs::MomentAngle => Ok(Some(vec![2; m])),
            Pairs::Spheres(d) => {
                if d.len() != m {
                    return Err(Error::InvalidArgument(format!(
                        "expected {m} sphere dimensions, got {}",
                        d.len()
                    )));
                }
                if d.contains(&0) {
                    return Err(Error::InvalidArgument("sphere dimensions must be at least 1".into()));
                }
                Ok(Some(d.clone()))
            }
            Pairs::Symbolic => Ok(None),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeSummand {
    /// Vertex labels `i1 < .. < ik`.
    pub omega: Vec<usize>,
    pub multiplicity: usize,
    /// Dimension of the sphere `Σ Y_{i1} ∧ .. ∧ Y_{ik}` when the `Y_i` are spheres.
    pub sphere_dim: Option<u32>,
    /// `S(Y_i1^..^Y_ik)`.
    pub name: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanStats {
    pub subsets_scanned: usize,
    pub zero_multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeDecomposition {
    pub ground: Vec<usize>,
    pub pairs: Pairs,
    /// Sorted by `|ω|` then lexicographically; multiplicities are positive.
    pub summands: Vec<WedgeSummand>,
    pub stats: ScanStats,
    /// Hypotheses taken on trust rather than checked.
    pub assumptions: Vec<String>,
}

pub(crate) fn summand_name(omega: &[usize]) -> String {
    let parts: Vec<String> = omega.iter().map(|i| format!("Y_{i}")).collect();
    format!("S({})", parts.join("^"))
}

/// Sphere dimension `1 + Σ (n_i - 1)` of the summand at `omega` (positions).
fn summand_dim(omega: FaceSet, dims: &[u32]) -> u32 {
    1 + omega.iter().map(|p| dims[p] - 1).sum::<u32>()
}

/// Checks the hypotheses of the decomposition: no ghost vertices, flag, chordal 1-skeleton.
pub fn check_decomposable(k: &SimplicialComplex) -> Result<()> {
    check_flag_without_ghosts(k)?;
    match is_chordal(&k.skeleton_graph()) {
        Chordality::Chordal(_) => Ok(()),
        Chordality::NotChordal(c) => Err(Error::NotChordal { cycle: c.cycle }),
    }
}

pub(crate) fn check_flag_without_ghosts(k: &SimplicialComplex) -> Result<()> {
    if let Some(&g) = k.ghost_vertices().first() {
        return Err(Error::GhostVertex(g));
    }
    if let Some(w) = k.flag_witness() {
        return Err(Error::NotFlag {
            witness: k.face_labels(w),
        });
    }
    Ok(())
}

/// The wedge decomposition of `(CY, Y)^K`.
pub fn decompose(k: &SimplicialComplex, pairs: &Pairs) -> Result<WedgeDecomposition> {
    check_decomposable(k)?;
    let m = k.ground_size();
    let dims = pairs.sphere_dims(m)?;
    let graph = k.skeleton_graph();
    let mut stats = ScanStats::default();
    let mut summands = Vec::new();
    let count = 1u64 << m;
    for bits in 0..count {
        let omega = FaceSet::from_bits(bits as u32);
        if omega.len() < 2 {
            continue;
        }
        stats.subsets_scanned += 1;
        let c = graph.component_count_within(omega) - 1;
        if c == 0 {
            stats.zero_multiplicity += 1;
            continue;
        }
        let labels = k.face_labels(omega);
        summands.push((
            omega,
            WedgeSummand {
                name: summand_name(&labels),
                omega: labels,
                multiplicity: c,
                sphere_dim: dims.as_ref().map(|d| summand_dim(omega, d)),
            },
        ));
    }
    summands.sort_by(|a, b| a.0.graded_cmp(&b.0));
    let mut assumptions = Vec::new();
    if dims.is_none() {
        assumptions.push("every Y_i has nonzero reduced integral cohomology".to_string());
    }
    Ok(WedgeDecomposition {
        ground: k.labels().to_vec(),
        pairs: pairs.clone(),
        summands: summands.into_iter().map(|(_, s)| s).collect(),
        stats,
        assumptions,
    })
}

impl WedgeDecomposition {
    /// Total number of wedge summands, counted with multiplicity.
    pub fn summand_count(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    pub fn is_contractible(&self) -> bool {
        self.summands.is_empty()
    }

    /// Sphere dimensions of the summands, with multiplicity, in summand order.
    pub fn sphere_dims(&self) -> Result<Vec<u32>> {
        self.summands
            .iter()
            .map(|s| {
                s.sphere_dim
                    .map(|d| std::iter::repeat_n(d, s.multiplicity))
                    .ok_or_else(|| {
                        Error::InvalidArgument("symbolic decomposition has no sphere dimensions".into())
                    })
            })
            .try_fold(Vec::new(), |mut acc, it| {
                acc.extend(it?);
                Ok(acc)
            })
    }

    /// `1 + Σ c(ω) t^dim(ω)`.
    pub fn poincare_polynomial(&self) -> Result<PoincareSeries> {
        let dims = self.sphere_dims()?;
        let degree = dims.iter().copied().max().unwrap_or(0) as usize;
        let mut coeffs = vec![0i128; degree + 1];
        coeffs[0] = 1;
        for d in dims {
            coeffs[d as usize] += 1;
        }
        Ok(PoincareSeries::from_coefficients(coeffs))
    }
}

/// Poincaré polynomial of a decomposition under the given pairs.
pub fn poincare_polynomial(dec: &WedgeDecomposition) -> Result<PoincareSeries> {
    dec.poincare_polynomial()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// The decomposition for `m` disjoint points: every `k`-subset carries
/// multiplicity `k - 1`. Built from the closed form and cross-checked against
/// [`decompose`].
pub fn porter_decomposition(m: usize) -> Result<WedgeDecomposition> {
    let points = SimplicialComplex::points(m)?;
    let dec = decompose(&points, &Pairs::Symbolic)?;
    let expected: Vec<(Vec<usize>, usize)> = {
        let mut all: Vec<FaceSet> = (0..1u32 << m)
            .map(FaceSet::from_bits)
            .filter(|w| w.len() >= 2)
            .collect();
        all.sort_by(FaceSet::graded_cmp);
        all.into_iter()
            .map(|w| (w.iter().map(|p| p + 1).collect(), w.len() - 1))
            .collect()
    };
    let got: Vec<(Vec<usize>, usize)> = dec
        .summands
        .iter()
        .map(|s| (s.omega.clone(), s.multiplicity))
        .collect();
    assert_eq!(got, expected, "discrete complex decomposition disagrees with closed form");
    debug_assert_eq!(
        dec.summand_count(),
        (2..=m).map(|k| (k - 1) * binomial(m, k)).sum::<usize>()
    );
    Ok(dec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mults(dec: &WedgeDecomposition) -> Vec<(Vec<usize>, usize, Option<u32>)> {
        dec.summands
            .iter()
            .map(|s| (s.omega.clone(), s.multiplicity, s.sphere_dim))
            .collect()
    }

    #[test]
    fn three_points() {
        let k = SimplicialComplex::points(3).unwrap();
        let dec = decompose(&k, &Pairs::MomentAngle).unwrap();
        assert_eq!(
            mults(&dec),
            vec![
                (vec![1, 2], 1, Some(3)),
                (vec![1, 3], 1, Some(3)),
                (vec![2, 3], 1, Some(3)),
                (vec![1, 2, 3], 2, Some(4)),
            ]
        );
        assert_eq!(
            dec.poincare_polynomial().unwrap().coefficients(),
            &[1, 0, 0, 3, 2]
        );
        assert_eq!(dec.stats, ScanStats { subsets_scanned: 4, zero_multiplicity: 0 });
    }

    #[test]
    fn simplex_is_contractible() {
        for m in 1..=5 {
            let dec = decompose(&SimplicialComplex::simplex(m).unwrap(), &Pairs::MomentAngle).unwrap();
            assert!(dec.is_contractible());
            assert_eq!(dec.poincare_polynomial().unwrap().coefficients(), &[1]);
        }
    }

    #[test]
    fn path_of_three() {
        let dec = decompose(&SimplicialComplex::path(3).unwrap(), &Pairs::MomentAngle).unwrap();
        assert_eq!(mults(&dec), vec![(vec![1, 3], 1, Some(3))]);
        assert_eq!(dec.poincare_polynomial().unwrap().coefficients(), &[1, 0, 0, 1]);
        assert_eq!(dec.stats.zero_multiplicity, 3);
    }

    #[test]
    fn sphere_and_symbolic_modes() {
        let k = SimplicialComplex::path(3).unwrap();
        let dec = decompose(&k, &Pairs::Spheres(vec![3, 5, 4])).unwrap();
        // Y_1 = S^2, Y_3 = S^3: Σ S^2 ∧ S^3 = S^6
        assert_eq!(dec.summands[0].sphere_dim, Some(6));
        let sym = decompose(&k, &Pairs::Symbolic).unwrap();
        assert_eq!(sym.summands[0].name, "S(Y_1^Y_3)");
        assert_eq!(sym.summands[0].sphere_dim, None);
        assert_eq!(sym.assumptions.len(), 1);
        assert!(sym.poincare_polynomial().is_err());
        assert!(decompose(&k, &Pairs::Spheres(vec![2, 2])).is_err());
        assert!(decompose(&k, &Pairs::Spheres(vec![2, 0, 2])).is_err());
    }

    #[test]
    fn rejections() {
        let b = SimplicialComplex::simplex_boundary(3).unwrap();
        assert_eq!(
            decompose(&b, &Pairs::MomentAngle),
            Err(Error::NotFlag { witness: vec![1, 2, 3] })
        );
        let c4 = SimplicialComplex::cycle(4).unwrap();
        assert_eq!(
            decompose(&c4, &Pairs::MomentAngle),
            Err(Error::NotChordal { cycle: vec![1, 2, 3, 4] })
        );
        let g = SimplicialComplex::from_facets(3, [[1, 2]]).unwrap();
        assert_eq!(decompose(&g, &Pairs::MomentAngle), Err(Error::GhostVertex(3)));
    }

    #[test]
    fn porter_small_cases() {
        let d2 = porter_decomposition(2).unwrap();
        assert_eq!(mults(&d2), vec![(vec![1, 2], 1, None)]);
        let d3 = porter_decomposition(3).unwrap();
        let m3: Vec<_> = d3.summands.iter().map(|s| s.multiplicity).collect();
        assert_eq!(m3, vec![1, 1, 1, 2]);
        let d4 = porter_decomposition(4).unwrap();
        let by_size = |k: usize| {
            d4.summands
                .iter()
                .filter(|s| s.omega.len() == k)
                .map(|s| s.multiplicity)
                .sum::<usize>()
        };
        assert_eq!((by_size(2), by_size(3), by_size(4)), (6, 8, 3));
    }
}
