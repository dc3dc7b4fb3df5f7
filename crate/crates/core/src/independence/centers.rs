//! Star centers of maximum independent sets and the center digraph `D_S`.

use alloc::format;
use alloc::vec::Vec;

use super::IndependentSet;
use crate::error::{Error, Result};
use crate::graphs::{Graph, VertexLabel};
use crate::setkit::{binomial, subsets_of, Subset};

/// The map `R ↦ x(S, R)` for every `r`-subset `R` of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterTable {
    pub n: usize,
    pub r: usize,
    pub t: usize,
    /// `(R, x(S, R))`, sorted by `R`.
    pub entries: Vec<(Subset, usize)>,
}

impl CenterTable {
    pub fn center(&self, set: &Subset) -> Option<usize> {
        self.entries
            .binary_search_by(|(r, _)| r.cmp(set))
            .ok()
            .map(|i| self.entries[i].1)
    }
}

/// Reads off the center of every block of `s`. Each block `V_R ∩ S` must be
/// the full star `{(A, R \ A) : x ∈ A}` for a single `x`.
pub fn extract_centers(g: &Graph, s: &IndependentSet) -> Result<CenterTable> {
    let (n, r, t) = g.require_local()?;
    let star_size = binomial(r as u64 - 1, t as u64 - 1) as usize;
    let mut entries = Vec::new();
    for (set, members) in g.blocks()? {
        let inside: Vec<&VertexLabel> = members
            .iter()
            .filter(|v| s.contains(**v))
            .filter_map(|&v| g.label(v))
            .collect();
        if inside.is_empty() {
            return Err(Error::InternalInconsistency(format!(
                "block {set} contains no vertex of the independent set"
            )));
        }
        let common = inside
            .iter()
            .fold(set, |acc, label| acc.intersection(&label.a));
        if common.len() != 1 || inside.len() != star_size {
            return Err(Error::NotAStar { block: set });
        }
        let center = common.min_element().unwrap_or_default();
        entries.push((set, center));
    }
    Ok(CenterTable { n, r, t, entries })
}

/// A pair of blocks breaking center consistency: `x = x(S, R)` lies in `R ∩ R'`
/// and `z = x(S, R')` lies in `(R ∩ R') \ {x}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CenterViolation {
    pub first: Subset,
    pub second: Subset,
    pub x: usize,
    pub z: usize,
}

/// All ordered pairs `(R, R')` violating center consistency; empty on success.
pub fn check_center_consistency(table: &CenterTable) -> Vec<CenterViolation> {
    let mut out = Vec::new();
    for &(first, x) in &table.entries {
        for &(second, z) in &table.entries {
            if first == second || !second.contains(x) {
                continue;
            }
            let shared = first.intersection(&second);
            if z != x && shared.contains(z) {
                out.push(CenterViolation {
                    first,
                    second,
                    x,
                    z,
                });
            }
        }
    }
    out
}

/// A simple digraph on `{1, ..., n}` without self-arcs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DirectedGraph {
    n: usize,
    // bit j-1 of out[i-1] set iff (i, j) is an arc
    out: Vec<u64>,
}

impl DirectedGraph {
    pub fn new(n: usize) -> Result<Self> {
        Subset::empty(n)?;
        Ok(DirectedGraph {
            n,
            out: alloc::vec![0; n],
        })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = DirectedGraph::new(n)?;
        for &(i, j) in arcs {
            d.add_arc(i, j)?;
        }
        Ok(d)
    }

    /// The transitive tournament of an ordering: `(u, v)` whenever `u` precedes `v`.
    pub fn transitive_tournament(order: &[usize]) -> Result<Self> {
        let mut d = DirectedGraph::new(order.len())?;
        for (i, &u) in order.iter().enumerate() {
            for &v in &order[i + 1..] {
                d.add_arc(u, v)?;
            }
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::params(format!("self-arc at {i}")));
        }
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::params(format!(
                "arc ({i}, {j}) outside [1, {}]",
                self.n
            )));
        }
        self.out[i - 1] |= 1 << (j - 1);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.out[i - 1] & (1 << (j - 1)) != 0
    }

    pub fn out_neighbors(&self, i: usize) -> Subset {
        Subset::from_bits(self.n, self.out[i - 1]).unwrap_or_else(|_| unreachable!())
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.out[i - 1].count_ones() as usize
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|i| self.out_neighbors(i).iter().map(move |j| (i, j)))
            .collect()
    }

    /// Pairs `i < j` with both `(i, j)` and `(j, i)` present.
    pub fn two_cycles(&self) -> Vec<(usize, usize)> {
        self.arcs()
            .into_iter()
            .filter(|&(i, j)| i < j && self.has_arc(j, i))
            .collect()
    }
}

/// `D_S`: arc `(i, j)` iff some `r`-subset `R` contains both and `i = x(S, R)`.
pub fn build_d_s(g: &Graph, s: &IndependentSet) -> Result<DirectedGraph> {
    let table = extract_centers(g, s)?;
    digraph_from_centers(&table)
}

pub fn digraph_from_centers(table: &CenterTable) -> Result<DirectedGraph> {
    let mut d = DirectedGraph::new(table.n)?;
    for &(set, x) in &table.entries {
        for j in set.without(x).iter() {
            d.add_arc(x, j)?;
        }
    }
    Ok(d)
}

/// `I_D`: all `(A, B)` with `i ∈ A` and `A, B ⊆ N⁺(i) ∪ {i}` for some `i`.
pub fn build_i_d(g: &Graph, d: &DirectedGraph) -> Result<IndependentSet> {
    let (n, r, t) = g.require_local()?;
    if d.order() != n {
        return Err(Error::params(format!(
            "digraph on [{}] used with a graph on [{n}]",
            d.order()
        )));
    }
    let mut members = Vec::new();
    for i in 1..=n {
        let closed = d.out_neighbors(i).with(i);
        for a in subsets_of(&closed, t) {
            if !a.contains(i) {
                continue;
            }
            for b in subsets_of(&closed.difference(&a), r - t) {
                let v = g
                    .index_of(&VertexLabel::new(a, b))
                    .ok_or_else(|| Error::InternalInconsistency(format!("({a}, {b}) missing")))?;
                members.push(v);
            }
        }
    }
    IndependentSet::new(g, members)
}
