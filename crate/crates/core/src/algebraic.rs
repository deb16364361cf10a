//! Exterior and symmetric algebraic shifting through exact ranks of generic
//! matrices.
//!
//! For a generic `n x n` matrix the cumulative profile of the exterior shift
//! equals the rank profile of the edge-difference rows, and the symmetric
//! profile comes from the edge-sum rows together with one diagonal row per
//! vertex. Genericity is realized by sampling: the rank of a matrix whose
//! entries depend polynomially on the sample drops only on the zero set of a
//! nonzero polynomial, so a uniform draw from a large integer box misses the
//! generic rank with probability at most (total degree)/(box size), in the
//! spirit of the Schwartz–Zippel bound. Taking the per-k maximum over
//! `repeats` samples and validating the resulting profile (strictly
//! decreasing increments, correct edge total) makes a silent underestimate
//! vanishingly unlikely; a validation failure triggers resampling with a
//! doubled entry bound rather than a wrong answer.

use num_bigint::BigInt;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Result, ShiftError};
use crate::graph::Graph;
use crate::linalg::ExactMatrix;
use crate::profile::MProfile;

/// How many bound-doubling rounds to try before giving up.
const MAX_SAMPLING_ROUNDS: u32 = 4;

/// Sampling parameters for the generic-matrix surrogate. All randomness flows
/// from `seed` through a ChaCha8 stream per sample index, so every result is
/// reproducible bit for bit across platforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericConfig {
    /// Reproducibility seed.
    pub seed: u64,
    /// Entries are drawn uniformly from `[-bound, bound]` excluding zero.
    pub bound: u64,
    /// Number of samples; the per-k rank maximum over samples is used.
    pub repeats: u32,
    /// Isolated vertices appended before the symmetric computation.
    pub pad: usize,
}

impl Default for GenericConfig {
    fn default() -> Self {
        GenericConfig {
            seed: 42,
            bound: 1 << 16,
            repeats: 3,
            pad: 0,
        }
    }
}

impl GenericConfig {
    pub fn validate(&self) -> Result<()> {
        if self.bound < 2 {
            return Err(ShiftError::InvalidConfig(format!(
                "bound must be at least 2, got {}",
                self.bound
            )));
        }
        if self.repeats < 1 {
            return Err(ShiftError::InvalidConfig(
                "repeats must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Which family of rank values a [`RankProfile`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankKind {
    /// Values `r_k` for `k = 1..n-1`; the last equals the edge count.
    Exterior,
    /// Values `s_k` for `k = 2..n`; the last equals edge count plus ambient n.
    Symmetric,
}

/// A nondecreasing vector of generic ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub kind: RankKind,
    values: Vec<usize>,
}

impl RankProfile {
    /// Validates monotonicity and the forced top value.
    pub fn new(kind: RankKind, values: Vec<usize>, edges: usize, ambient: usize) -> Result<Self> {
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(ShiftError::InvalidProfile(
                "rank values must be nondecreasing".into(),
            ));
        }
        let expected_top = match kind {
            RankKind::Exterior => edges,
            RankKind::Symmetric => edges + ambient,
        };
        if let Some(&top) = values.last() {
            if top != expected_top {
                return Err(ShiftError::InvalidProfile(format!(
                    "top rank is {top}, expected {expected_top}"
                )));
            }
        }
        Ok(RankProfile { kind, values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

// Rank profiles travel as plain JSON arrays, like m-profiles.
impl Serialize for RankProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.values.len()))?;
        for value in &self.values {
            seq.serialize_element(value)?;
        }
        seq.end()
    }
}

/// Draws the `sample_index`-th generic `n x n` matrix for a config: ChaCha8
/// seeded with `cfg.seed` on stream `sample_index`, entries uniform in
/// `[-bound, bound]` without zero (drawn by rejection from the raw 64-bit
/// stream, so the result does not depend on any distribution crate).
pub fn sample_generic_matrix(n: usize, cfg: &GenericConfig, sample_index: u32) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(sample_index as u64);
    let span = 2 * cfg.bound + 1;
    let limit = u64::MAX - u64::MAX % span;
    let mut draw = || loop {
        let raw = rng.next_u64();
        if raw >= limit {
            continue;
        }
        let value = (raw % span) as i64 - cfg.bound as i64;
        if value != 0 {
            return BigInt::from(value);
        }
    };
    ExactMatrix::from_fn(n, n, |_, _| draw())
}

/// The `|E| x (k*n)` matrix of edge-difference rows: the row of edge `{i,j}`
/// (`i < j`) carries `a_{l,j}` at position `e_i` and `-a_{l,i}` at `e_j` in
/// each block `l = 1..k`.
pub fn exterior_rank_matrix(g: &Graph, mat: &ExactMatrix, k: usize) -> Result<ExactMatrix> {
    let n = g.n();
    check_block_count(n, k)?;
    let mut out = ExactMatrix::zeros(g.edge_count(), k * n);
    for (row, (i, j)) in g.edges().enumerate() {
        for l in 0..k {
            *out.get_mut(row, l * n + (i - 1)) = mat.get(l, j - 1).clone();
            *out.get_mut(row, l * n + (j - 1)) = -mat.get(l, i - 1).clone();
        }
    }
    Ok(out)
}

/// The `(|E| + n) x (k*n)` matrix of edge-sum rows plus one diagonal row per
/// vertex. The diagonal row of vertex `i` stores `a_{l,i}` at `e_i`; the
/// literal diagonal value is twice that, and scaling a row by a nonzero
/// constant cannot change any rank over the rationals.
pub fn symmetric_rank_matrix(g: &Graph, mat: &ExactMatrix, k: usize) -> Result<ExactMatrix> {
    let n = g.n();
    check_block_count(n, k)?;
    let edges = g.edge_count();
    let mut out = ExactMatrix::zeros(edges + n, k * n);
    for (row, (i, j)) in g.edges().enumerate() {
        for l in 0..k {
            *out.get_mut(row, l * n + (i - 1)) = mat.get(l, j - 1).clone();
            *out.get_mut(row, l * n + (j - 1)) = mat.get(l, i - 1).clone();
        }
    }
    for i in 0..n {
        for l in 0..k {
            *out.get_mut(edges + i, l * n + i) = mat.get(l, i).clone();
        }
    }
    Ok(out)
}

fn check_block_count(n: usize, k: usize) -> Result<()> {
    if k < 1 || k > n {
        return Err(ShiftError::IndexOutOfRange {
            index: k,
            min: 1,
            max: n,
        });
    }
    Ok(())
}

/// Exterior rank profile `r_1, ..., r_{n-1}` by sampling.
pub fn exterior_rank_profile(g: &Graph, cfg: &GenericConfig) -> Result<RankProfile> {
    cfg.validate()?;
    let n = g.n();
    let mut round_cfg = *cfg;
    for round in 0..MAX_SAMPLING_ROUNDS {
        let mut best = vec![0usize; n.saturating_sub(1)];
        for s in 0..cfg.repeats {
            let mat = sample_generic_matrix(n, &round_cfg, round * cfg.repeats + s);
            // One elimination of the widest matrix serves every k: the rank
            // of the k-block prefix is the number of pivots in it.
            let full = exterior_rank_matrix(g, &mat, n)?;
            let pivots = full.column_pivots();
            for k in 1..n {
                let rank = pivots.iter().filter(|&&c| c < k * n).count();
                best[k - 1] = best[k - 1].max(rank);
            }
        }
        if let Ok(profile) = RankProfile::new(RankKind::Exterior, best, g.edge_count(), n) {
            if validate_as_m_profile(n, profile.values(), g.edge_count()).is_ok() {
                return Ok(profile);
            }
        }
        round_cfg.bound = round_cfg.bound.saturating_mul(2);
    }
    Err(ShiftError::GenericityFailure {
        attempts: MAX_SAMPLING_ROUNDS,
    })
}

/// Symmetric rank profile `s_2, ..., s_{n'}` at ambient size `n' = n + pad`.
pub fn symmetric_rank_profile(g: &Graph, cfg: &GenericConfig) -> Result<RankProfile> {
    cfg.validate()?;
    let padded = g.padded(cfg.pad);
    let n = padded.n();
    let mut round_cfg = *cfg;
    for round in 0..MAX_SAMPLING_ROUNDS {
        let mut best = vec![0usize; n.saturating_sub(1)];
        for s in 0..cfg.repeats {
            let mat = sample_generic_matrix(n, &round_cfg, round * cfg.repeats + s);
            let full = symmetric_rank_matrix(&padded, &mat, n)?;
            let pivots = full.column_pivots();
            for k in 2..=n {
                let rank = pivots.iter().filter(|&&c| c < k * n).count();
                best[k - 2] = best[k - 2].max(rank);
            }
        }
        if let Ok(profile) = RankProfile::new(RankKind::Symmetric, best, g.edge_count(), n) {
            let shifted: Option<Vec<usize>> =
                profile.values().iter().map(|&s| s.checked_sub(n)).collect();
            if let Some(cum) = shifted {
                if validate_as_m_profile(n, &cum, g.edge_count()).is_ok() {
                    return Ok(profile);
                }
            }
        }
        round_cfg.bound = round_cfg.bound.saturating_mul(2);
    }
    Err(ShiftError::GenericityFailure {
        attempts: MAX_SAMPLING_ROUNDS,
    })
}

fn validate_as_m_profile(n: usize, cum: &[usize], edges: usize) -> Result<MProfile> {
    let profile = MProfile::new(n, cum.to_vec())?;
    if profile.total() != edges {
        return Err(ShiftError::InvalidProfile(format!(
            "profile total {} does not match edge count {edges}",
            profile.total()
        )));
    }
    Ok(profile)
}

/// Cumulative profile of the exterior shift: `m_<=k = r_k`.
pub fn exterior_profile(g: &Graph, cfg: &GenericConfig) -> Result<MProfile> {
    let ranks = exterior_rank_profile(g, cfg)?;
    validate_as_m_profile(g.n(), ranks.values(), g.edge_count())
}

/// Cumulative profile of the symmetric shift: `m_<=k = s_{k+1} - n'` at the
/// padded ambient size, truncated back to the original `n`. The result does
/// not depend on the pad; [`symmetric_profile_pad_checked`] verifies that.
pub fn symmetric_profile(g: &Graph, cfg: &GenericConfig) -> Result<MProfile> {
    let ranks = symmetric_rank_profile(g, cfg)?;
    let ambient = g.n() + cfg.pad;
    let cum: Vec<usize> = ranks.values().iter().map(|&s| s - ambient).collect();
    // Validated at ambient size first, then truncated to the original n.
    validate_as_m_profile(ambient, &cum, g.edge_count())?;
    let truncated: Vec<usize> = cum[..g.n().saturating_sub(1)].to_vec();
    validate_as_m_profile(g.n(), &truncated, g.edge_count())
}

/// Computes the symmetric profile twice, at `pad` and `pad + 3`, and insists
/// on equality. Surfaces any dependence on the ambient vertex count instead
/// of silently trusting one choice.
pub fn symmetric_profile_pad_checked(g: &Graph, cfg: &GenericConfig) -> Result<MProfile> {
    let base = symmetric_profile(g, cfg)?;
    let alt_cfg = GenericConfig {
        pad: cfg.pad + 3,
        ..*cfg
    };
    let alt = symmetric_profile(g, &alt_cfg)?;
    if base != alt {
        return Err(ShiftError::PadMismatch {
            pad: cfg.pad,
            pad_alt: cfg.pad + 3,
        });
    }
    Ok(base)
}

/// The exterior shifted graph.
pub fn exterior_shift(g: &Graph, cfg: &GenericConfig) -> Result<Graph> {
    Ok(exterior_profile(g, cfg)?.to_graph())
}

/// The symmetric shifted graph.
pub fn symmetric_shift(g: &Graph, cfg: &GenericConfig) -> Result<Graph> {
    Ok(symmetric_profile(g, cfg)?.to_graph())
}
