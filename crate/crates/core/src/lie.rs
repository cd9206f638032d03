//! Lyndon words, Witt numbers and Hilton–Milnor factors.
//!
//! The loop space of a wedge of spheres `S^(n_1) ∨ .. ∨ S^(n_m)` splits as a
//! product of loop spaces on spheres, one for each element of a basis of the
//! free Lie algebra on `m` generators. Lyndon words give that basis here; the
//! word `α` with `α_i` occurrences of letter `i` contributes `ΩS^(n(α))` with
//! `n(α) = 1 + Σ α_i (n_i - 1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::series::PoincareSeries;
use crate::wedge::{decompose, Pairs};

/// A Lyndon word over letters `0..m`, with its multidegree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieBasisElement {
    pub word: Vec<usize>,
    pub multidegree: Vec<u32>,
}

impl LieBasisElement {
    fn new(word: Vec<usize>, m: usize) -> Self {
        let mut multidegree = vec![0; m];
        for &c in &word {
            multidegree[c] += 1;
        }
        LieBasisElement { word, multidegree }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Weighted degree `Σ α_i w_i`.
    pub fn weight(&self, weights: &[u32]) -> u32 {
        self.multidegree.iter().zip(weights).map(|(a, w)| a * w).sum()
    }

    /// Word as `x1x1x2`, using `prefix` for letter names.
    pub fn spelled(&self, prefix: &str) -> String {
        self.word.iter().map(|c| format!("{prefix}{}", c + 1)).collect()
    }

    /// The iterated bracket from the standard factorisation, e.g. `[x1,[x1,x2]]`.
    pub fn bracket(&self, prefix: &str) -> String {
        bracket_of(&self.word, prefix)
    }
}

impl fmt::Display for LieBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spelled("x"))
    }
}

/// Strictly smaller than all of its proper rotations.
pub fn is_lyndon(word: &[usize]) -> bool {
    !word.is_empty() && (1..word.len()).all(|r| word < &{
        let mut rot = word.to_vec();
        rot.rotate_left(r);
        rot
    }[..])
}

fn bracket_of(word: &[usize], prefix: &str) -> String {
    if word.len() == 1 {
        return format!("{prefix}{}", word[0] + 1);
    }
    // standard factorisation: the right factor is the longest proper Lyndon suffix
    let split = (1..word.len())
        .find(|&i| is_lyndon(&word[i..]))
        .expect("a Lyndon word of length > 1 has a proper Lyndon suffix");
    format!(
        "[{},{}]",
        bracket_of(&word[..split], prefix),
        bracket_of(&word[split..], prefix)
    )
}

/// All Lyndon words over `m` letters with weighted degree at most
/// `max_weight`, in lexicographic order. `weights[i]` is the weight of letter `i`.
pub fn lyndon_words(m: usize, max_weight: u32, weights: &[u32]) -> Result<Vec<LieBasisElement>> {
    if m == 0 {
        return Err(Error::InvalidArgument("alphabet must be nonempty".into()));
    }
    if weights.len() != m {
        return Err(Error::InvalidArgument(format!(
            "expected {m} letter weights, got {}",
            weights.len()
        )));
    }
    if weights.contains(&0) {
        return Err(Error::InvalidArgument("letter weights must be positive".into()));
    }
    let mut out = Vec::new();
    let mut word = Vec::new();
    extend_prenecklace(m, max_weight, weights, &mut word, 0, 0, &mut out);
    Ok(out)
}

/// Depth-first walk of the prenecklace tree. `period` is the length of the
/// longest Lyndon prefix; a prenecklace is Lyndon iff its period is its length.
fn extend_prenecklace(
    m: usize,
    max_weight: u32,
    weights: &[u32],
    word: &mut Vec<usize>,
    period: usize,
    weight: u32,
    out: &mut Vec<LieBasisElement>,
) {
    let t = word.len();
    if t > 0 && period == t {
        out.push(LieBasisElement::new(word.clone(), m));
    }
    let lowest = if t == 0 { 0 } else { word[t - period] };
    for c in lowest..m {
        let w = weight + weights[c];
        if w > max_weight {
            continue;
        }
        let next_period = if t == 0 || c > lowest { t + 1 } else { period };
        word.push(c);
        extend_prenecklace(m, max_weight, weights, word, next_period, w, out);
        word.pop();
    }
}

pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn multinomial(parts: &[u32]) -> u128 {
    let mut total = 0u128;
    let mut acc = 1u128;
    for &p in parts {
        total += p as u128;
        acc *= binomial(total, p as u128);
    }
    acc
}

/// Number of Lyndon words with multidegree `alpha`, by the necklace formula
/// `(1/|α|) Σ_{d | gcd α} μ(d) (|α|/d)! / Π (α_i/d)!`.
pub fn witt_count(alpha: &[u32]) -> u128 {
    let n: u32 = alpha.iter().sum();
    assert!(n > 0, "multidegree must be nonzero");
    let g = alpha.iter().copied().fold(0, gcd);
    let total: i128 = (1..=g)
        .filter(|d| g % d == 0)
        .map(|d| {
            let reduced: Vec<u32> = alpha.iter().map(|a| a / d).collect();
            mobius(d as u64) as i128 * multinomial(&reduced) as i128
        })
        .sum();
    (total / n as i128) as u128
}

/// Total number of Lyndon words of length `k` over `m` letters.
pub fn witt_number(m: u64, k: u32) -> u128 {
    let total: i128 = (1..=k)
        .filter(|d| k.is_multiple_of(*d))
        .map(|d| mobius(d as u64) as i128 * (m as i128).pow(k / d))
        .sum();
    (total / k as i128) as u128
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorKind {
    /// `ΩS^dim`.
    LoopSphere,
    /// `S^dim`, split off a Hopf-invariant-one loop space.
    Sphere,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HmFactor {
    pub basis_element: LieBasisElement,
    pub kind: FactorKind,
    /// Dimension of the sphere in the factor.
    pub dim: u32,
    pub bracket: String,
    /// How the factor maps into the loop space of the wedge.
    pub annotation: String,
}

impl HmFactor {
    pub fn series(&self, degree: usize) -> PoincareSeries {
        match self.kind {
            FactorKind::LoopSphere => PoincareSeries::loop_sphere(self.dim, degree),
            FactorKind::Sphere => PoincareSeries::sphere(self.dim, degree),
        }
    }
}

impl fmt::Display for HmFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FactorKind::LoopSphere => write!(f, "ΩS^{}", self.dim),
            FactorKind::Sphere => write!(f, "S^{}", self.dim),
        }
    }
}

/// Product of the factors' loop-homology series, truncated at `degree`.
pub fn factor_series(factors: &[HmFactor], degree: usize) -> PoincareSeries {
    factors
        .iter()
        .fold(PoincareSeries::one(degree), |acc, f| &acc * &f.series(degree))
}

/// `1 / (1 - Σ t^(n_i - 1))`: the loop homology of the wedge of `S^(n_i)`.
pub fn wedge_loop_series(dims: &[u32], degree: usize) -> PoincareSeries {
    let denom = dims.iter().fold(PoincareSeries::one(degree), |acc, &n| {
        acc - PoincareSeries::monomial(1, n as usize - 1, degree)
    });
    denom.inverse().expect("constant term is one")
}

fn build_factors(
    dims: &[u32],
    max_dim: u32,
    split_hopf: bool,
    prefix: &str,
) -> Result<Vec<HmFactor>> {
    let weights: Vec<u32> = dims.iter().map(|n| n - 1).collect();
    let words = lyndon_words(dims.len(), max_dim.saturating_sub(1), &weights)?;
    let mut out = Vec::with_capacity(words.len());
    for w in words {
        let n = 1 + w.weight(&weights);
        let bracket = w.bracket(prefix);
        let annotation = if w.len() == 1 {
            "loops on the inclusion of a wedge summand".to_string()
        } else {
            format!("looped Whitehead product {bracket}")
        };
        if split_hopf && matches!(n, 2 | 4 | 8) {
            out.push(HmFactor {
                basis_element: w.clone(),
                kind: FactorKind::Sphere,
                dim: n - 1,
                bracket: bracket.clone(),
                annotation: format!("{annotation}, composed with the suspension S^{} → ΩS^{n}", n - 1),
            });
            out.push(HmFactor {
                basis_element: w,
                kind: FactorKind::LoopSphere,
                dim: 2 * n - 1,
                bracket,
                annotation: format!("{annotation}, composed with the looped Hopf map ΩS^{} → ΩS^{n}", 2 * n - 1),
            });
        } else {
            out.push(HmFactor {
                basis_element: w,
                kind: FactorKind::LoopSphere,
                dim: n,
                bracket,
                annotation,
            });
        }
    }
    out.sort_by(|a, b| {
        (a.dim, a.kind, &a.basis_element.word).cmp(&(b.dim, b.kind, &b.basis_element.word))
    });
    Ok(out)
}

/// Hilton–Milnor factors `ΩS^(n(α))` of `Ω(S^(n_1) ∨ .. ∨ S^(n_m))` with
/// `n(α) ≤ max_dim`. Requires every `n_i ≥ 2` and `max_dim ≥ max n_i`.
pub fn hm_factors(dims: &[u32], max_dim: u32) -> Result<Vec<HmFactor>> {
    check_sphere_dims(dims)?;
    let top = *dims.iter().max().expect("nonempty");
    if max_dim < top {
        return Err(Error::InvalidArgument(format!(
            "max dimension {max_dim} is below the largest sphere S^{top}"
        )));
    }
    build_factors(dims, max_dim, false, "x")
}

fn check_sphere_dims(dims: &[u32]) -> Result<()> {
    if dims.is_empty() {
        return Err(Error::InvalidArgument("need at least one sphere".into()));
    }
    if dims.iter().any(|&n| n < 2) {
        return Err(Error::InvalidArgument("wedge spheres must have dimension at least 2".into()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesCheck {
    pub holds: bool,
    pub product_side: PoincareSeries,
    pub wedge_side: PoincareSeries,
    pub residual: PoincareSeries,
}

/// Compare `Π_α 1/(1 - t^(n(α)-1))` with `1/(1 - Σ t^(n_i - 1))` modulo
/// `t^(degree+1)`.
pub fn series_identity_check(dims: &[u32], degree: u32) -> Result<SeriesCheck> {
    check_sphere_dims(dims)?;
    // a factor ΩS^n first contributes in degree n - 1
    let factors = build_factors(dims, degree + 1, false, "x")?;
    let d = degree as usize;
    let product_side = factor_series(&factors, d);
    let wedge_side = wedge_loop_series(dims, d);
    let residual = product_side.clone() - wedge_side.clone();
    Ok(SeriesCheck {
        holds: residual.is_zero(),
        product_side,
        wedge_side,
        residual,
    })
}

/// One wedge summand copy of `Z_K`, used as a letter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeLetter {
    pub name: String,
    pub omega: Vec<usize>,
    pub copy: usize,
    pub dim: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopSpaceDecomposition {
    pub letters: Vec<WedgeLetter>,
    pub factors: Vec<HmFactor>,
    pub max_dim: u32,
    pub split_hopf: bool,
    /// `m`, the number of circle factors in `ΩDJ(K) ≃ (S¹)^m × ΩZ_K`.
    pub torus_rank: usize,
    /// Series of the factors agrees with the wedge's loop homology in degrees `< max_dim`.
    pub series_consistent: bool,
}

impl LoopSpaceDecomposition {
    pub fn letter_dims(&self) -> Vec<u32> {
        self.letters.iter().map(|l| l.dim).collect()
    }

    /// Degrees in which the factor list is complete.
    pub fn exact_degree(&self) -> usize {
        self.max_dim.saturating_sub(1) as usize
    }

    pub fn series(&self) -> PoincareSeries {
        factor_series(&self.factors, self.exact_degree())
    }
}

/// Factors of `ΩZ_K` for flag `K` with chordal 1-skeleton: `Z_K` is a wedge
/// of spheres, and its loop space splits by Hilton–Milnor with one letter per
/// wedge summand copy. Factors `ΩS^n` with `n ≤ max_dim` are listed; with
/// `split_hopf`, `ΩS^n` for `n ∈ {2, 4, 8}` is listed as `S^(n-1) × ΩS^(2n-1)`.
pub fn loop_zk_factors(k: &SimplicialComplex, max_dim: u32, split_hopf: bool) -> Result<LoopSpaceDecomposition> {
    let dec = decompose(k, &Pairs::MomentAngle)?;
    let mut letters = Vec::new();
    for s in &dec.summands {
        let dim = s.sphere_dim.expect("moment-angle summands are spheres");
        for copy in 1..=s.multiplicity {
            letters.push(WedgeLetter {
                name: format!("w{}", letters.len() + 1),
                omega: s.omega.clone(),
                copy,
                dim,
            });
        }
    }
    let dims: Vec<u32> = letters.iter().map(|l| l.dim).collect();
    let factors = if dims.is_empty() {
        Vec::new()
    } else {
        build_factors(&dims, max_dim, split_hopf, "w")?
    };
    let degree = max_dim.saturating_sub(1) as usize;
    let series_consistent = factor_series(&factors, degree) == wedge_loop_series(&dims, degree);
    Ok(LoopSpaceDecomposition {
        letters,
        factors,
        max_dim,
        split_hopf,
        torus_rank: k.ground_size(),
        series_consistent,
    })
}
