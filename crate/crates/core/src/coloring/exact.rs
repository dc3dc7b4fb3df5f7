//! Exact chromatic and local chromatic numbers for small graphs.

use alloc::vec;
use alloc::vec::Vec;

use super::{local_profile, Coloring};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graphs::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    /// A proper coloring with exactly `chi` colors.
    pub certificate: Coloring,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalResult {
    pub psi: usize,
    /// A proper coloring whose closed neighborhoods see at most `psi` colors.
    pub certificate: Coloring,
}

/// Size of a maximum clique, by plain branch-and-bound.
pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, cand: Vec<usize>, size: usize, best: &mut usize) {
        if size + cand.len() <= *best {
            return;
        }
        if cand.is_empty() {
            *best = size;
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            if size + cand.len() - i <= *best {
                return;
            }
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&u| g.adjacent(u, v))
                .collect();
            grow(g, next, size + 1, best);
        }
    }
    let mut best = 0;
    grow(g, (0..g.vertex_count()).collect(), 0, &mut best);
    best
}

/// Greedy DSATUR coloring (colors in order of first use).
pub fn dsatur_coloring(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let mut colors = vec![0u32; n];
    let mut sat: Vec<Vec<u32>> = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| (sat[v].len(), g.degree(v), core::cmp::Reverse(v)))
            .unwrap_or(0);
        let c = (1..).find(|c| !sat[v].contains(c)).unwrap_or(1);
        colors[v] = c;
        for u in g.neighbors(v) {
            if !sat[u].contains(&c) {
                sat[u].push(c);
            }
        }
    }
    Coloring::new(colors).canonical()
}

struct Dsatur<'g> {
    g: &'g Graph,
    colors: Vec<u32>,
    // sat_count[v][c] = number of neighbors of v colored c
    sat_count: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    best: usize,
    best_colors: Vec<u32>,
    lower: usize,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
        for u in self.g.neighbors(v) {
            let slot = &mut self.sat_count[u][c as usize];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: u32) {
        self.colors[v] = 0;
        for u in self.g.neighbors(v) {
            let slot = &mut self.sat_count[u][c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn search(&mut self, colored: usize, used: usize) {
        if self.best <= self.lower {
            return;
        }
        let n = self.g.vertex_count();
        if colored == n {
            self.best = used;
            self.best_colors = self.colors.clone();
            return;
        }
        let v = (0..n)
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), core::cmp::Reverse(v)))
            .unwrap_or(0);
        let limit = (used + 1).min(self.best - 1);
        for c in 1..=limit as u32 {
            if self.sat_count[v][c as usize] != 0 {
                continue;
            }
            self.assign(v, c);
            self.search(colored + 1, used.max(c as usize));
            self.unassign(v, c);
            if self.best <= self.lower {
                return;
            }
        }
    }
}

/// Exact chromatic number by DSATUR branch-and-bound, seeded with the greedy
/// DSATUR coloring and stopped early at the clique number.
pub fn chi_exact(g: &Graph, budget: &Budget) -> Result<ChromaticResult> {
    Budget::check("chi_exact", g.vertex_count(), budget.chi)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            certificate: Coloring::new(Vec::new()),
        });
    }
    let greedy = dsatur_coloring(g);
    let upper = greedy.palette_size();
    let mut solver = Dsatur {
        g,
        colors: vec![0; n],
        sat_count: vec![vec![0; upper + 2]; n],
        saturation: vec![0; n],
        best: upper,
        best_colors: greedy.colors().to_vec(),
        lower: clique_number(g),
    };
    solver.search(0, 0);
    Ok(ChromaticResult {
        chi: solver.best,
        certificate: Coloring::new(solver.best_colors).canonical(),
    })
}

struct LocalSearch<'g> {
    g: &'g Graph,
    order: Vec<usize>,
    closed: Vec<Vec<usize>>,
    colors: Vec<u32>,
    // seen[v][c] = vertices of N[v] colored c so far
    seen: Vec<Vec<u32>>,
    distinct: Vec<usize>,
    best: usize,
    best_colors: Vec<u32>,
    lower: usize,
}

impl LocalSearch<'_> {
    fn search(&mut self, depth: usize, used: u32) {
        if self.best <= self.lower {
            return;
        }
        let Some(&v) = self.order.get(depth) else {
            let max = self.distinct.iter().copied().max().unwrap_or(0);
            if max < self.best {
                self.best = max;
                self.best_colors = self.colors.clone();
            }
            return;
        };
        let cap = (used + 1).min(self.g.vertex_count() as u32);
        for c in 1..=cap {
            if self.g.neighbors(v).any(|u| self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            let mut ok = true;
            for i in 0..self.closed[v].len() {
                let w = self.closed[v][i];
                let slot = &mut self.seen[w][c as usize];
                if *slot == 0 {
                    self.distinct[w] += 1;
                    if self.distinct[w] >= self.best {
                        ok = false;
                    }
                }
                *slot += 1;
            }
            if ok {
                self.search(depth + 1, used.max(c));
            }
            for i in 0..self.closed[v].len() {
                let w = self.closed[v][i];
                let slot = &mut self.seen[w][c as usize];
                *slot -= 1;
                if *slot == 0 {
                    self.distinct[w] -= 1;
                }
            }
            self.colors[v] = 0;
            if self.best <= self.lower {
                return;
            }
        }
    }
}

/// Exact local chromatic number: the minimum over proper colorings of the
/// largest number of colors in a closed neighborhood.
///
/// Colorings are enumerated up to renaming of colors (each new color is the
/// next unused one) with at most `|V|` colors; a branch stops once some closed
/// neighborhood already sees as many colors as the best coloring found.
pub fn psi_exact(g: &Graph, budget: &Budget) -> Result<LocalResult> {
    Budget::check("psi_exact", g.vertex_count(), budget.psi)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(LocalResult {
            psi: 0,
            certificate: Coloring::new(Vec::new()),
        });
    }
    let start = dsatur_coloring(g);
    let start_profile = local_profile(g, &start)?;

    // breadth-first from high-degree vertices so neighborhoods fill early
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    for &root in &by_degree {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in g.neighbors(v) {
                if !placed[u] {
                    placed[u] = true;
                    order.push(u);
                }
            }
        }
    }

    let closed = (0..n)
        .map(|v| {
            let mut c: Vec<usize> = g.neighbors(v).collect();
            c.push(v);
            c
        })
        .collect();
    let mut search = LocalSearch {
        g,
        order,
        closed,
        colors: vec![0; n],
        seen: vec![vec![0; n + 2]; n],
        distinct: vec![0; n],
        best: start_profile.max,
        best_colors: start.colors().to_vec(),
        lower: clique_number(g).max(1),
    };
    search.search(0, 0);
    let certificate = Coloring::new(search.best_colors).canonical();
    let profile = local_profile(g, &certificate)?;
    if profile.max != search.best {
        return Err(Error::InternalInconsistency(
            "psi certificate mismatch".into(),
        ));
    }
    Ok(LocalResult {
        psi: search.best,
        certificate,
    })
}
