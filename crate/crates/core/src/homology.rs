//! Exact Betti numbers, used as an independent check on wedge decompositions.
//!
//! Reduced simplicial homology is computed from the augmented chain complex
//! `.. → C_1 → C_0 → C_{-1} = Q·∅ → 0`, so `{∅}` has rank one in degree -1
//! and every nonempty complex has rank zero there. Ranks are taken over the
//! rationals by fraction-free (Bareiss) elimination; integral torsion is not
//! computed. Cohomology ranks over a field agree with homology ranks.
//!
//! The Betti numbers of the moment-angle complex come from the Hochster-type
//! sum `b_j(Z_K) = Σ_ω rank H̃^(j - |ω| - 1)(K_ω)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chordal::{is_chordal, ChordlessCycle, Chordality};
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::face::FaceSet;
use crate::series::PoincareSeries;
use crate::wedge::{check_flag_without_ghosts, decompose, Pairs, WedgeDecomposition};

/// Simplicial boundary map `C_d → C_{d-1}` as a dense matrix over `{-1, 0, 1}`.
///
/// Columns are the faces with `d + 1` vertices, rows the faces with `d`
/// vertices, both in increasing mask order. For `d = 0` the single row is the
/// empty face (augmentation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: Vec<FaceSet>,
    pub cols: Vec<FaceSet>,
    pub entries: Vec<Vec<i8>>,
}

impl BoundaryMatrix {
    pub fn new(k: &SimplicialComplex, dim: usize) -> Self {
        let rows: Vec<FaceSet> = k.faces().iter().copied().filter(|f| f.len() == dim).collect();
        let cols: Vec<FaceSet> = k.faces().iter().copied().filter(|f| f.len() == dim + 1).collect();
        let mut entries = vec![vec![0i8; cols.len()]; rows.len()];
        for (c, sigma) in cols.iter().enumerate() {
            for (j, p) in sigma.iter().enumerate() {
                let r = rows
                    .binary_search(&sigma.without(p))
                    .expect("boundary face present in a closed complex");
                entries[r][c] = if j % 2 == 0 { 1 } else { -1 };
            }
        }
        BoundaryMatrix { rows, cols, entries }
    }

    /// True iff `lower ∘ self` vanishes (`lower` must be the next map down).
    pub fn composes_to_zero(&self, lower: &BoundaryMatrix) -> bool {
        assert_eq!(lower.cols, self.rows, "maps are not consecutive");
        (0..lower.rows.len()).all(|i| {
            (0..self.cols.len()).all(|j| {
                (0..self.rows.len())
                    .map(|k| lower.entries[i][k] as i64 * self.entries[k][j] as i64)
                    .sum::<i64>()
                    == 0
            })
        })
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.entries)
    }
}

trait Exact: Clone {
    fn from_i8(x: i8) -> Self;
    fn is_zero(&self) -> bool;
    /// `(a*b - c*d) / p`, with the division known to be exact.
    fn bareiss_step(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self>;
}

impl Exact for i64 {
    fn from_i8(x: i8) -> Self {
        x as i64
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn bareiss_step(a: &i64, b: &i64, c: &i64, d: &i64, p: &i64) -> Option<i64> {
        Some(a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)? / p)
    }
}

impl Exact for BigInt {
    fn from_i8(x: i8) -> Self {
        BigInt::from(x)
    }

    fn is_zero(&self) -> bool {
        self.sign() == num_bigint::Sign::NoSign
    }

    fn bareiss_step(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, p: &BigInt) -> Option<BigInt> {
        Some((a * b - c * d) / p)
    }
}

fn bareiss_rank<T: Exact>(entries: &[Vec<i8>]) -> Option<usize> {
    let nrows = entries.len();
    let ncols = entries.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<T>> = entries
        .iter()
        .map(|r| r.iter().map(|&x| T::from_i8(x)).collect())
        .collect();
    let mut prev = T::from_i8(1);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                a[i][j] = T::bareiss_step(&a[rank][col], &a[i][j], &a[i][col], &a[rank][j], &prev)?;
            }
            a[i][col] = T::from_i8(0);
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    Some(rank)
}

/// Exact rank over the rationals of an integer matrix.
pub fn rank_of(entries: &[Vec<i8>]) -> usize {
    bareiss_rank::<i64>(entries).unwrap_or_else(|| {
        bareiss_rank::<BigInt>(entries).expect("big-integer elimination does not overflow")
    })
}

/// Reduced Betti numbers of one complex, for degrees `-1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedBetti {
    /// `ranks[i]` is the rank in degree `i - 1`.
    ranks: Vec<usize>,
}

impl ReducedBetti {
    pub fn of(k: &SimplicialComplex) -> Self {
        let f = k.face_size_counts();
        // boundary ranks: bd[s] is the rank of the map from size-s faces to size-(s-1) faces
        let mut bd = vec![0usize; f.len() + 1];
        for (s, slot) in bd.iter_mut().enumerate().take(f.len()).skip(1) {
            *slot = BoundaryMatrix::new(k, s - 1).rank();
        }
        let ranks = (0..f.len()).map(|s| f[s] - bd[s] - bd[s + 1]).collect();
        ReducedBetti { ranks }
    }

    pub fn get(&self, degree: isize) -> usize {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|i| self.ranks.get(i).copied())
            .unwrap_or(0)
    }

    /// Nonzero `(degree, rank)` pairs.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(i, &r)| (i as isize - 1, r))
    }

    /// Rank in some degree `≥ 1`, if any.
    pub fn has_higher(&self) -> bool {
        self.nonzero().any(|(d, _)| d >= 1)
    }

    /// `Σ (-1)^i b̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .map(|(d, r)| if d.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// Rank of `H̃^i(K; Q)`.
pub fn reduced_betti(k: &SimplicialComplex, i: isize) -> usize {
    ReducedBetti::of(k).get(i)
}

/// Betti numbers by degree; degrees with rank zero are omitted.
///
/// Serialised as a list of `{degree, rank}` entries, since integer map keys
/// do not survive JSON inside tagged enums.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<BettiEntry>", from = "Vec<BettiEntry>")]
pub struct BettiTable {
    pub ranks: BTreeMap<usize, u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub degree: usize,
    pub rank: u64,
}

impl From<BettiTable> for Vec<BettiEntry> {
    fn from(t: BettiTable) -> Self {
        t.ranks
            .into_iter()
            .map(|(degree, rank)| BettiEntry { degree, rank })
            .collect()
    }
}

impl From<Vec<BettiEntry>> for BettiTable {
    fn from(entries: Vec<BettiEntry>) -> Self {
        BettiTable {
            ranks: entries
                .into_iter()
                .filter(|e| e.rank > 0)
                .map(|e| (e.degree, e.rank))
                .collect(),
        }
    }
}

impl BettiTable {
    pub fn get(&self, degree: usize) -> u64 {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    fn add(&mut self, degree: usize, rank: u64) {
        if rank > 0 {
            *self.ranks.entry(degree).or_default() += rank;
        }
    }

    pub fn max_degree(&self) -> usize {
        self.ranks.keys().next_back().copied().unwrap_or(0)
    }

    pub fn total_rank(&self) -> u64 {
        self.ranks.values().sum()
    }

    pub fn as_series(&self) -> PoincareSeries {
        let mut c = vec![0i128; self.max_degree() + 1];
        for (&d, &r) in &self.ranks {
            c[d] = r as i128;
        }
        PoincareSeries::from_coefficients(c)
    }

    /// Coefficient-wise equality with a polynomial.
    pub fn matches(&self, poly: &PoincareSeries) -> bool {
        let top = self.max_degree().max(poly.degree());
        (0..=top).all(|d| self.get(d) as i128 == poly.coefficient(d))
    }
}

/// Reduced Betti numbers of every full subcomplex, indexed by mask value.
fn full_subcomplex_homology(k: &SimplicialComplex) -> Vec<ReducedBetti> {
    let m = k.ground_size();
    (0..1u64 << m)
        .map(|bits| ReducedBetti::of(&k.full_subcomplex_mask(FaceSet::from_bits(bits as u32))))
        .collect()
}

fn hochster_sum(homology: &[ReducedBetti]) -> BettiTable {
    let mut table = BettiTable::default();
    for (bits, rb) in homology.iter().enumerate() {
        let size = (bits as u32).count_ones() as isize;
        for (d, r) in rb.nonzero() {
            table.add((d + size + 1) as usize, r as u64);
        }
    }
    table
}

/// Betti numbers of the moment-angle complex `Z_K`. Requires no ghost vertices.
pub fn betti_zk(k: &SimplicialComplex) -> Result<BettiTable> {
    if let Some(&g) = k.ghost_vertices().first() {
        return Err(crate::Error::GhostVertex(g));
    }
    Ok(hochster_sum(&full_subcomplex_homology(k)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HigherHomologyWitness {
    pub omega: Vec<usize>,
    pub degree: isize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum VerificationOutcome {
    /// Chordal 1-skeleton; the wedge polynomial matches the oracle and all
    /// higher homology of full subcomplexes vanishes.
    Pass {
        decomposition: WedgeDecomposition,
        polynomial: PoincareSeries,
    },
    /// Non-chordal 1-skeleton: a chordless cycle whose full subcomplex has
    /// `H̃^1 ≠ 0`, contributing to `b_{|ω|+2}(Z_K)`. No wedge of suspensions can
    /// realise such a class, so `Z_K` is not a co-H-space.
    NotCoH {
        cycle: ChordlessCycle,
        omega: Vec<usize>,
        h1_rank: usize,
        zk_degree: usize,
    },
    /// The two sides disagree. Never expected; reported rather than hidden.
    Fail {
        reason: String,
        higher: Vec<HigherHomologyWitness>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub chordal: bool,
    pub betti: BettiTable,
    pub outcome: VerificationOutcome,
}

impl Verification {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, VerificationOutcome::Pass { .. })
    }
}

/// Cross-check the wedge decomposition of `Z_K` against the oracle, or certify
/// that none exists. `K` must be flag without ghost vertices.
pub fn verify_decomposition(k: &SimplicialComplex) -> Result<Verification> {
    check_flag_without_ghosts(k)?;
    let homology = full_subcomplex_homology(k);
    let betti = hochster_sum(&homology);
    let higher: Vec<HigherHomologyWitness> = homology
        .iter()
        .enumerate()
        .flat_map(|(bits, rb)| {
            let omega = k.face_labels(FaceSet::from_bits(bits as u32));
            rb.nonzero()
                .filter(|&(d, _)| d >= 1)
                .map(move |(degree, rank)| HigherHomologyWitness {
                    omega: omega.clone(),
                    degree,
                    rank,
                })
        })
        .collect();
    match is_chordal(&k.skeleton_graph()) {
        Chordality::Chordal(_) => {
            let decomposition = decompose(k, &Pairs::MomentAngle)?;
            let polynomial = decomposition.poincare_polynomial()?;
            let outcome = if !betti.matches(&polynomial) {
                VerificationOutcome::Fail {
                    reason: format!("wedge polynomial {polynomial} differs from Betti table {:?}", betti.ranks),
                    higher,
                }
            } else if !higher.is_empty() {
                VerificationOutcome::Fail {
                    reason: "higher homology in a full subcomplex".into(),
                    higher,
                }
            } else {
                VerificationOutcome::Pass {
                    decomposition,
                    polynomial,
                }
            };
            Ok(Verification {
                chordal: true,
                betti,
                outcome,
            })
        }
        Chordality::NotChordal(cycle) => {
            let mask = k.face_from_labels(&cycle.cycle)?;
            let h1_rank = homology[mask.bits() as usize].get(1);
            let omega = cycle.cycle.iter().copied().collect::<std::collections::BTreeSet<_>>();
            let outcome = if h1_rank == 0 {
                VerificationOutcome::Fail {
                    reason: format!("chordless cycle {:?} has no first cohomology", cycle.cycle),
                    higher,
                }
            } else {
                VerificationOutcome::NotCoH {
                    zk_degree: mask.len() + 2,
                    omega: omega.into_iter().collect(),
                    cycle,
                    h1_rank,
                }
            };
            Ok(Verification {
                chordal: false,
                betti,
                outcome,
            })
        }
    }
}
