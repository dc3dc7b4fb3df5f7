//! Proper colorings, local profiles, and the explicit and randomized colorings
//! of local Kneser graphs.

mod exact;
mod random;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

pub use exact::{
    chi_exact, clique_number, dsatur_coloring, psi_exact, ChromaticResult, LocalResult,
};
pub use random::{
    covered_by, default_l, las_vegas_coloring, random_permutation_coloring, LasVegasColoring,
    RandomColoring, DEFAULT_RETRY_CAP,
};

use crate::error::{Error, Result};
use crate::graphs::{Family, Graph};

/// Vertex colors, 1-based; `0` marks an uncolored vertex.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Self {
        Coloring { colors }
    }

    pub fn uncolored(order: usize) -> Self {
        Coloring {
            colors: alloc::vec![0; order],
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Option<u32> {
        self.colors.get(v).copied().filter(|&c| c != 0)
    }

    pub fn set(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c != 0)
    }

    pub fn uncolored_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == 0).count()
    }

    /// Number of distinct colors in use.
    pub fn palette_size(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.iter().copied().filter(|&c| c != 0).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// The same partition relabelled `1, 2, ...` in order of first use.
    pub fn canonical(&self) -> Coloring {
        let mut relabel = BTreeMap::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if c == 0 {
                    return 0;
                }
                let next = relabel.len() as u32 + 1;
                *relabel.entry(c).or_insert(next)
            })
            .collect();
        Coloring { colors }
    }
}

/// Closed-neighborhood color counts `|{c(u) : u ∈ N[v]}|`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalProfile {
    pub counts: Vec<usize>,
    pub max: usize,
}

fn check_total(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.vertex_count() {
        return Err(Error::input(format!(
            "coloring has {} entries for {} vertices",
            c.len(),
            g.vertex_count()
        )));
    }
    if let Some(v) = c.colors().iter().position(|&x| x == 0) {
        return Err(Error::input(format!("vertex {v} is uncolored")));
    }
    Ok(())
}

/// True iff no edge is monochromatic. Partial colorings are rejected.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    check_total(g, c)?;
    Ok(g.edges()
        .into_iter()
        .all(|(u, v)| c.colors[u] != c.colors[v]))
}

/// Per-vertex closed-neighborhood color counts of a proper total coloring.
pub fn local_profile(g: &Graph, c: &Coloring) -> Result<LocalProfile> {
    if !is_proper(g, c)? {
        return Err(Error::input("coloring is not proper"));
    }
    let counts: Vec<usize> = (0..g.vertex_count())
        .map(|v| {
            let mut seen: Vec<u32> = g.neighbors(v).map(|u| c.colors[u]).collect();
            seen.push(c.colors[v]);
            seen.sort_unstable();
            seen.dedup();
            seen.len()
        })
        .collect();
    let max = counts.iter().copied().max().unwrap_or(0);
    Ok(LocalProfile { counts, max })
}

/// `c(A) = min(min A, m - 2n + 2)` on `KG(m, n)`.
pub fn kneser_coloring(g: &Graph) -> Result<Coloring> {
    let Family::Kneser { m, n } = g.family() else {
        return Err(Error::params(format!(
            "{} is not a Kneser graph",
            g.family()
        )));
    };
    let cap = (m - 2 * n + 2) as u32;
    let colors = g
        .labels()
        .iter()
        .map(|l| (l.a.min_element().unwrap_or(1) as u32).min(cap))
        .collect();
    Ok(Coloring::new(colors))
}

/// The Kneser coloring of `KG(n, t)` pulled back along `(A, B) ↦ A`; uses at
/// most `n - 2t + 2` colors on `U_t(n, r)`.
pub fn projection_coloring(g: &Graph) -> Result<Coloring> {
    let (n, _, t) = g.require_local()?;
    let cap = (n - 2 * t + 2) as u32;
    let colors = g
        .labels()
        .iter()
        .map(|l| (l.a.min_element().unwrap_or(1) as u32).min(cap))
        .collect();
    Ok(Coloring::new(colors))
}

/// Upper bounds on the chromatic number of `U_t(n, r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub n: u64,
    pub r: u64,
    pub t: u64,
    /// `n - 2t + 2`, from the projection to `KG(n, t)`.
    pub projection: u64,
    /// `⌈(r²/t)(ln n + 1)⌉`, from random permutations.
    pub permutation: u64,
    /// `r 2^r log₂ log₂ n`, only for `t = 1` and `n > 2`.
    pub local_complete: Option<f64>,
    pub note: Option<&'static str>,
}

pub fn bound_report(n: u64, r: u64, t: u64) -> Result<BoundReport> {
    if t < 1 || r < 2 * t || n < r {
        return Err(Error::params(format!(
            "need n >= r >= 2t >= 2, got ({n},{r},{t})"
        )));
    }
    let permutation = random::ceil_log_bound(n, r, t);
    let (local_complete, note) = if t != 1 {
        (None, None)
    } else if n <= 2 {
        (None, Some("log2(log2(n)) undefined for n <= 2"))
    } else {
        let v = r as f64 * libm::pow(2.0, r as f64) * libm::log2(libm::log2(n as f64));
        (Some(v), None)
    };
    Ok(BoundReport {
        n,
        r,
        t,
        projection: n - 2 * t + 2,
        permutation,
        local_complete,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_kneser, build_local_kneser};
    use alloc::vec;

    #[test]
    fn properness_basics() {
        let k2 = Graph::complete(2).unwrap();
        assert!(is_proper(&k2, &Coloring::new(vec![1, 2])).unwrap());
        assert!(!is_proper(&k2, &Coloring::new(vec![1, 1])).unwrap());
        assert!(is_proper(&k2, &Coloring::new(vec![1, 0])).is_err());
        assert!(is_proper(&k2, &Coloring::new(vec![1])).is_err());

        let g = build_kneser(6, 2).unwrap();
        let distinct = Coloring::new((1..=15).collect());
        assert!(is_proper(&g, &distinct).unwrap());
    }

    #[test]
    fn kneser_coloring_uses_m_minus_2n_plus_2_colors() {
        for (m, n) in [(2, 1), (4, 2), (6, 3), (5, 2), (6, 2), (7, 3), (7, 2)] {
            let g = build_kneser(m, n).unwrap();
            let c = kneser_coloring(&g).unwrap();
            assert!(is_proper(&g, &c).unwrap(), "KG({m},{n})");
            assert_eq!(c.palette_size(), m - 2 * n + 2);
            assert_eq!(c.canonical(), c);
        }
        assert!(kneser_coloring(&build_local_kneser(4, 3, 1).unwrap()).is_err());
    }

    #[test]
    fn projection_coloring_examples() {
        for (n, r, t, cap) in [(4, 4, 2, 2), (5, 4, 2, 3), (4, 3, 1, 4)] {
            let g = build_local_kneser(n, r, t).unwrap();
            let c = projection_coloring(&g).unwrap();
            assert!(is_proper(&g, &c).unwrap());
            assert!(c.palette_size() <= cap);
        }
    }

    #[test]
    fn local_profile_on_a_star() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = local_profile(&star, &Coloring::new(vec![1, 2, 3, 4])).unwrap();
        assert_eq!(p.counts, vec![4, 2, 2, 2]);
        assert_eq!(p.max, 4);
        assert!(local_profile(&star, &Coloring::new(vec![1, 1, 2, 2])).is_err());

        let g = build_local_kneser(5, 4, 2).unwrap();
        let p = local_profile(&g, &projection_coloring(&g).unwrap()).unwrap();
        assert!(p.max <= 3);
    }

    #[test]
    fn canonical_relabels_by_first_use() {
        let c = Coloring::new(vec![5, 2, 5, 0, 9, 2]);
        assert_eq!(c.canonical(), Coloring::new(vec![1, 2, 1, 0, 3, 2]));
        assert_eq!(c.palette_size(), 3);
        assert_eq!(c.uncolored_count(), 1);
    }

    #[test]
    fn bound_report_examples() {
        let b = bound_report(5, 4, 2).unwrap();
        assert_eq!(
            (b.projection, b.permutation, b.local_complete),
            (3, 21, None)
        );

        let b = bound_report(1024, 3, 1).unwrap();
        assert_eq!(b.permutation, 72);
        // 3 * 8 * log2(10)
        let expected = 24.0 * core::f64::consts::LOG2_10;
        assert!((b.local_complete.unwrap() - expected).abs() < 1e-9);
        assert!((b.local_complete.unwrap() - 79.7).abs() < 0.05);

        let b = bound_report(4, 4, 2).unwrap();
        assert_eq!((b.projection, b.permutation), (2, 20));

        let b = bound_report(2, 2, 1).unwrap();
        assert!(b.local_complete.is_none());
        assert!(b.note.is_some());
        assert!(bound_report(3, 4, 1).is_err());
    }
}
