//! Colorings of `U_t(n, r)` by random permutations: color class `i` is the part
//! of `S_{sigma_i}` not already covered by earlier permutations.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use super::Coloring;
use crate::error::{Error, Result};
use crate::graphs::{Graph, VertexLabel};
use crate::setkit::Permutation;

pub const DEFAULT_RETRY_CAP: usize = 50;

/// `⌈(r²/t)(ln n + 1)⌉`, computed in `f64` with a one-ulp downward guard
/// before the ceiling.
pub(crate) fn ceil_log_bound(n: u64, r: u64, t: u64) -> u64 {
    let x = (r * r) as f64 / t as f64 * (libm::log(n as f64) + 1.0);
    let guarded = x - x * f64::EPSILON;
    libm::ceil(guarded) as u64
}

/// Number of permutations that makes the expected number of uncovered vertices
/// drop below one.
pub fn default_l(n: usize, r: usize, t: usize) -> Result<usize> {
    if t < 1 || r < 2 * t || n < r {
        return Err(Error::params(format!(
            "need n >= r >= 2t >= 2, got ({n},{r},{t})"
        )));
    }
    Ok(ceil_log_bound(n as u64, r as u64, t as u64) as usize)
}

/// `(A, B) ∈ S_sigma`: the first element of `A ∪ B` under `sigma` lies in `A`.
pub fn covered_by(sigma: &Permutation, label: &VertexLabel) -> bool {
    sigma
        .min_under_order(&label.support())
        .map(|x| label.a.contains(x))
        .unwrap_or(false)
}

#[derive(Clone, Debug)]
pub struct RandomColoring {
    /// Vertex `v` gets the smallest `i` with `v ∈ S_{sigma_i}`, or 0.
    pub coloring: Coloring,
    pub uncovered: usize,
    pub permutations: Vec<Permutation>,
}

/// Draws `l` independent uniform permutations and colors each vertex by the
/// first one whose `S_sigma` contains it.
pub fn random_permutation_coloring<R: Rng + ?Sized>(
    g: &Graph,
    l: usize,
    rng: &mut R,
) -> Result<RandomColoring> {
    let (n, _, _) = g.require_local()?;
    if l < 1 {
        return Err(Error::params("need at least one permutation"));
    }
    let permutations = (0..l)
        .map(|_| Permutation::random(n, rng))
        .collect::<Result<Vec<_>>>()?;
    let mut coloring = Coloring::uncolored(g.vertex_count());
    for (v, label) in g.labels().iter().enumerate() {
        if let Some(i) = permutations.iter().position(|s| covered_by(s, label)) {
            coloring.set(v, i as u32 + 1);
        }
    }
    let uncovered = coloring.uncolored_count();
    Ok(RandomColoring {
        coloring,
        uncovered,
        permutations,
    })
}

#[derive(Clone, Debug)]
pub struct LasVegasColoring {
    /// Total proper coloring, colors in order of first use.
    pub coloring: Coloring,
    pub attempts: usize,
    pub l: usize,
    /// Uncovered count of the first attempt.
    pub first_uncovered: usize,
}

/// Repeats [`random_permutation_coloring`] with `l = default_l(n, r, t)` until
/// every vertex is covered.
pub fn las_vegas_coloring<R: Rng + ?Sized>(
    g: &Graph,
    rng: &mut R,
    retry_cap: usize,
) -> Result<LasVegasColoring> {
    let (n, r, t) = g.require_local()?;
    if retry_cap < 1 {
        return Err(Error::params("retry cap must be at least 1"));
    }
    let l = default_l(n, r, t)?;
    let mut first_uncovered = None;
    for attempt in 1..=retry_cap {
        let run = random_permutation_coloring(g, l, rng)?;
        first_uncovered.get_or_insert(run.uncovered);
        if run.uncovered == 0 {
            return Ok(LasVegasColoring {
                coloring: run.coloring.canonical(),
                attempts: attempt,
                l,
                first_uncovered: first_uncovered.unwrap_or(0),
            });
        }
    }
    Err(Error::RetriesExhausted {
        attempts: retry_cap,
    })
}
