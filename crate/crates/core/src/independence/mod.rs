//! Independence numbers and maximum independent sets of local Kneser graphs.
//!
//! `S_sigma` is the set of vertices `(A, B)` whose first element of `A ∪ B`
//! under the ordering `sigma` lies in `A`. The exact solver and the enumerators
//! here never consult the closed-form independence number; they are the
//! independent side that the formula and the `S_sigma` characterization are
//! checked against.

mod centers;
mod mis;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_rational::Ratio;

pub use centers::{
    build_d_s, build_i_d, check_center_consistency, digraph_from_centers, extract_centers,
    CenterTable, CenterViolation, DirectedGraph,
};

use crate::budget::Budget;
use crate::error::{Counterexample, Error, Result};
use crate::graphs::{induced_block, Graph, VertexSet};
use crate::homkit;
use crate::setkit::{binomial, Permutation};

/// A set of vertex indices with no two adjacent, checked against its graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndependentSet {
    members: Vec<usize>,
}

impl IndependentSet {
    pub fn new(g: &Graph, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.last() {
            if v >= g.vertex_count() {
                return Err(Error::input(format!("vertex {v} out of range")));
            }
        }
        for (i, &u) in members.iter().enumerate() {
            if let Some(&v) = members[i + 1..].iter().find(|&&v| g.adjacent(u, v)) {
                return Err(Error::input(format!("vertices {u} and {v} are adjacent")));
            }
        }
        Ok(IndependentSet { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn into_members(self) -> Vec<usize> {
        self.members
    }
}

fn check_triple(n: usize, r: usize, t: usize) -> Result<()> {
    if t < 1 || r < 2 * t || n < r {
        return Err(Error::params(format!(
            "need n >= r >= 2t >= 2, got ({n},{r},{t})"
        )));
    }
    Ok(())
}

/// `C(r-1, t-1) * C(n, r)`.
pub fn alpha_formula(n: usize, r: usize, t: usize) -> Result<u64> {
    check_triple(n, r, t)?;
    Ok(binomial(r as u64 - 1, t as u64 - 1) * binomial(n as u64, r as u64))
}

/// A maximum independent set, found by branch-and-bound.
pub fn maximum_independent_set(g: &Graph, budget: &Budget) -> Result<IndependentSet> {
    Budget::check("alpha_exact", g.vertex_count(), budget.alpha)?;
    let best = mis::Solver::new(g, mis::default_partition(g)).maximum();
    IndependentSet::new(g, best)
}

/// Exact independence number.
pub fn alpha_exact(g: &Graph, budget: &Budget) -> Result<usize> {
    maximum_independent_set(g, budget).map(|s| s.len())
}

/// `S_sigma` on the local Kneser graph `g`.
pub fn build_s_sigma(g: &Graph, sigma: &Permutation) -> Result<IndependentSet> {
    let (n, _, _) = g.require_local()?;
    if sigma.len() != n {
        return Err(Error::params(format!(
            "permutation of [{}] used on a graph over [{n}]",
            sigma.len()
        )));
    }
    let mut members = Vec::new();
    for (v, label) in g.labels().iter().enumerate() {
        if label.a.contains(sigma.min_under_order(&label.support())?) {
            members.push(v);
        }
    }
    IndependentSet::new(g, members)
}

/// The distinct sets `S_sigma` over all of `S_n`.
pub fn distinct_s_sigmas(g: &Graph) -> Result<BTreeSet<IndependentSet>> {
    let (n, _, _) = g.require_local()?;
    let mut out = BTreeSet::new();
    for sigma in Permutation::all(n)? {
        out.insert(build_s_sigma(g, &sigma)?);
    }
    Ok(out)
}

/// Every maximum independent set, sorted by member list.
///
/// Local Kneser graphs with `r > 2t` whose independence number equals the sum
/// of the block independence numbers are enumerated block by block: every
/// maximum set meets each block `V_R` in a maximum independent set of that
/// block, so the search picks one such set per block and keeps only choices
/// with no edges between blocks. Everything else goes through the generic
/// search.
pub fn enumerate_maximum_independent_sets(
    g: &Graph,
    budget: &Budget,
) -> Result<Vec<IndependentSet>> {
    Budget::check(
        "enumerate_maximum_independent_sets",
        g.vertex_count(),
        budget.enumerate,
    )?;
    if let Some((_, r, t)) = g.local_params() {
        if r > 2 * t {
            if let Some(sets) = enumerate_by_blocks(g, budget)? {
                return Ok(sets);
            }
        }
    }
    enumerate_maximum_independent_sets_generic(g, budget)
}

/// Generic enumeration by branch-and-bound over single vertices.
pub fn enumerate_maximum_independent_sets_generic(
    g: &Graph,
    budget: &Budget,
) -> Result<Vec<IndependentSet>> {
    Budget::check(
        "enumerate_maximum_independent_sets",
        g.vertex_count(),
        budget.enumerate,
    )?;
    let alpha = alpha_exact(g, budget)?;
    mis::Solver::new(g, mis::default_partition(g))
        .all_of_size(alpha)
        .into_iter()
        .map(|s| IndependentSet::new(g, s))
        .collect()
}

fn enumerate_by_blocks(g: &Graph, budget: &Budget) -> Result<Option<Vec<IndependentSet>>> {
    let blocks = g.blocks()?;
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    let mut owner: Vec<usize> = Vec::new();
    let mut block_alpha_sum = 0;
    for (b, (set, members)) in blocks.iter().enumerate() {
        let block = induced_block(g, set)?;
        let maxima = enumerate_maximum_independent_sets_generic(
            &block.graph,
            &Budget {
                enumerate: usize::MAX,
                ..*budget
            },
        )?;
        block_alpha_sum += maxima.first().map_or(0, |s| s.len());
        for s in maxima {
            candidates.push(s.members().iter().map(|&i| members[i]).collect());
            owner.push(b);
        }
    }
    if alpha_exact(g, budget)? != block_alpha_sum {
        return Ok(None);
    }

    let nv = g.vertex_count();
    let nc = candidates.len();
    let mut closed_nbhd: Vec<VertexSet> = Vec::with_capacity(nc);
    for c in &candidates {
        let mut s = VertexSet::new(nv);
        for &v in c {
            s.insert(v);
            for u in g.neighbors(v) {
                s.insert(u);
            }
        }
        closed_nbhd.push(s);
    }
    // compatible[c] = candidates in other blocks with no edge to c
    let mut compatible: Vec<VertexSet> = Vec::with_capacity(nc);
    for c in 0..nc {
        let mut s = VertexSet::new(nc);
        for d in 0..nc {
            if owner[d] != owner[c] && candidates[d].iter().all(|&v| !closed_nbhd[c].contains(v)) {
                s.insert(d);
            }
        }
        compatible.push(s);
    }
    let mut domains: Vec<VertexSet> = alloc::vec![VertexSet::new(nc); blocks.len()];
    for c in 0..nc {
        domains[owner[c]].insert(c);
    }
    let mut found = Vec::new();
    let mut chosen = Vec::new();
    block_search(
        &mut domains,
        &mut alloc::vec![false; blocks.len()],
        &compatible,
        &mut chosen,
        &mut |picks| {
            let members: Vec<usize> = picks
                .iter()
                .flat_map(|&c| candidates[c].iter().copied())
                .collect();
            found.push(members);
        },
    );
    let mut out = found
        .into_iter()
        .map(|m| IndependentSet::new(g, m))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(Some(out))
}

fn block_search(
    domains: &mut [VertexSet],
    assigned: &mut [bool],
    compatible: &[VertexSet],
    chosen: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let next = (0..domains.len())
        .filter(|&b| !assigned[b])
        .min_by_key(|&b| domains[b].len());
    let Some(b) = next else {
        emit(chosen);
        return;
    };
    let options: Vec<usize> = domains[b].iter().collect();
    assigned[b] = true;
    for c in options {
        let saved: Vec<VertexSet> = domains.to_vec();
        let mut dead = false;
        for (other, dom) in domains.iter_mut().enumerate() {
            if !assigned[other] {
                dom.retain_all(compatible[c].words());
                if dom.is_empty() {
                    dead = true;
                    break;
                }
            }
        }
        if !dead {
            chosen.push(c);
            block_search(domains, assigned, compatible, chosen, emit);
            chosen.pop();
        }
        domains.clone_from_slice(&saved);
    }
    assigned[b] = false;
}

/// Recovers `sigma` with `S = S_sigma` by sorting the vertices of `D_S` by
/// out-degree (descending, ties by label) and checking the result.
pub fn match_to_sigma(g: &Graph, s: &IndependentSet) -> Result<Permutation> {
    let (n, r, t) = g.require_local()?;
    let d = build_d_s(g, s)?;
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&i| (core::cmp::Reverse(d.out_degree(i)), i));
    let sigma = Permutation::new(order)?;
    if build_s_sigma(g, &sigma)? == *s {
        Ok(sigma)
    } else {
        Err(Error::CharacterizationViolation(alloc::boxed::Box::new(
            Counterexample {
                n,
                r,
                t,
                members: s.members().to_vec(),
                arcs: d.arcs(),
                attempted: sigma.as_slice().to_vec(),
            },
        )))
    }
}

/// `nu(G, K)` (largest vertex count of an induced subgraph of `g` admitting a
/// homomorphism to `k`) and `mu(G, K) = |V(G)| / nu(G, K)`.
///
/// An edgeless target makes `nu` the independence number; otherwise the search
/// runs over vertex subsets of `g` and is limited by `budget.nu`.
pub fn nu_mu_bruteforce(g: &Graph, k: &Graph, budget: &Budget) -> Result<(usize, Ratio<u64>)> {
    if k.vertex_count() == 0 {
        return Err(Error::params("target graph has no vertices"));
    }
    let order = g.vertex_count();
    if order == 0 {
        return Err(Error::params("mu is undefined for the empty graph"));
    }
    let nu = if k.edge_count() == 0 {
        alpha_exact(g, budget)?
    } else {
        Budget::check("nu_mu_bruteforce", order, budget.nu)?;
        let mut best = 0;
        'sizes: for size in (1..=order).rev() {
            for subset in crate::setkit::enumerate_subsets(order, size)? {
                let vs: Vec<usize> = subset.iter().map(|x| x - 1).collect();
                let sub = g.induced(&vs, crate::graphs::Family::Custom);
                if homkit::find_homomorphism(&sub, k, budget)?.is_some() {
                    best = size;
                    break 'sizes;
                }
            }
        }
        best
    };
    Ok((nu, Ratio::new(order as u64, nu as u64)))
}

#[cfg(test)]
mod tests;
