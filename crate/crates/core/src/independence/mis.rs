//! Branch-and-bound for maximum independent sets.
//!
//! The vertex set is split into parts of at most 64 vertices. At every node the
//! upper bound is the chosen count plus, for each part, the exact independence
//! number of the part restricted to the remaining candidates. With a clique
//! partition this is the usual clique-cover bound; local Kneser graphs use their
//! blocks `V_R` as parts, whose independence numbers are small exact
//! computations memoized per candidate mask.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graphs::{Graph, VertexSet};

struct Part {
    vertices: Vec<usize>,
    adj: Vec<u64>,
    memo: BTreeMap<u64, u32>,
}

impl Part {
    fn new(g: &Graph, vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.len() <= 64);
        let adj = vertices
            .iter()
            .map(|&u| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| g.adjacent(u, v))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        Part {
            vertices,
            adj,
            memo: BTreeMap::new(),
        }
    }

    fn alpha(&mut self, mask: u64) -> u32 {
        if mask & mask.wrapping_sub(1) == 0 {
            return u32::from(mask != 0);
        }
        local_alpha(&self.adj, mask, &mut self.memo)
    }
}

fn local_alpha(adj: &[u64], mask: u64, memo: &mut BTreeMap<u64, u32>) -> u32 {
    if mask == 0 {
        return 0;
    }
    if let Some(&a) = memo.get(&mask) {
        return a;
    }
    let mut best_v = 0usize;
    let mut best_deg = u32::MAX;
    let mut max_v = 0usize;
    let mut max_deg = 0u32;
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let d = (adj[v] & mask).count_ones();
        if d < best_deg {
            best_deg = d;
            best_v = v;
        }
        if d >= max_deg {
            max_deg = d;
            max_v = v;
        }
    }
    let a = if best_deg <= 1 {
        // some maximum independent set contains a vertex of degree <= 1
        1 + local_alpha(adj, mask & !adj[best_v] & !(1 << best_v), memo)
    } else {
        let with = 1 + local_alpha(adj, mask & !adj[max_v] & !(1 << max_v), memo);
        let without = local_alpha(adj, mask & !(1 << max_v), memo);
        with.max(without)
    };
    memo.insert(mask, a);
    a
}

/// Greedy clique partition: each part is a clique of at most 64 vertices.
pub(crate) fn clique_partition(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(g.degree(v)));
    let mut used = VertexSet::new(n);
    let mut parts = Vec::new();
    for &v in &order {
        if used.contains(v) {
            continue;
        }
        let mut clique = alloc::vec![v];
        used.insert(v);
        for &u in &order {
            if clique.len() == 64 {
                break;
            }
            if !used.contains(u) && clique.iter().all(|&w| g.adjacent(u, w)) {
                clique.push(u);
                used.insert(u);
            }
        }
        clique.sort_unstable();
        parts.push(clique);
    }
    parts
}

/// Parts for the bound: blocks `V_R` for local Kneser graphs whose blocks fit in
/// a word, a greedy clique partition otherwise.
pub(crate) fn default_partition(g: &Graph) -> Vec<Vec<usize>> {
    if let Ok(blocks) = g.blocks() {
        if blocks.iter().all(|(_, m)| m.len() <= 64) {
            return blocks.into_iter().map(|(_, m)| m).collect();
        }
    }
    clique_partition(g)
}

pub(crate) struct Solver<'g> {
    g: &'g Graph,
    parts: Vec<Part>,
    // (part, bit) for each vertex
    place: Vec<(usize, u32)>,
    best: Vec<usize>,
    target: Option<usize>,
    found: Vec<Vec<usize>>,
}

impl<'g> Solver<'g> {
    pub(crate) fn new(g: &'g Graph, partition: Vec<Vec<usize>>) -> Self {
        let mut place = alloc::vec![(0, 0); g.vertex_count()];
        for (p, part) in partition.iter().enumerate() {
            for (j, &v) in part.iter().enumerate() {
                place[v] = (p, j as u32);
            }
        }
        let parts = partition.into_iter().map(|vs| Part::new(g, vs)).collect();
        Solver {
            g,
            parts,
            place,
            best: Vec::new(),
            target: None,
            found: Vec::new(),
        }
    }

    fn initial_masks(&self) -> Vec<u64> {
        self.parts
            .iter()
            .map(|p| {
                if p.vertices.len() == 64 {
                    u64::MAX
                } else {
                    (1u64 << p.vertices.len()) - 1
                }
            })
            .collect()
    }

    fn greedy(&self) -> Vec<usize> {
        let n = self.g.vertex_count();
        let mut cand = VertexSet::full(n);
        let mut chosen = Vec::new();
        while !cand.is_empty() {
            let v = cand
                .iter()
                .min_by_key(|&v| {
                    self.g
                        .row(v)
                        .iter()
                        .zip(cand.words())
                        .map(|(a, b)| (a & b).count_ones())
                        .sum::<u32>()
                })
                .unwrap_or(0);
            chosen.push(v);
            cand.remove(v);
            cand.remove_all(self.g.row(v));
        }
        chosen.sort_unstable();
        chosen
    }

    /// A maximum independent set.
    pub(crate) fn maximum(mut self) -> Vec<usize> {
        self.best = self.greedy();
        let mut masks = self.initial_masks();
        let mut cand = VertexSet::full(self.g.vertex_count());
        let mut chosen = Vec::new();
        self.search(&mut cand, &mut masks, &mut chosen);
        self.best
    }

    /// Every independent set of size `alpha`, sorted.
    pub(crate) fn all_of_size(mut self, alpha: usize) -> Vec<Vec<usize>> {
        self.target = Some(alpha);
        let mut masks = self.initial_masks();
        let mut cand = VertexSet::full(self.g.vertex_count());
        let mut chosen = Vec::new();
        self.search(&mut cand, &mut masks, &mut chosen);
        let mut found = core::mem::take(&mut self.found);
        for s in &mut found {
            s.sort_unstable();
        }
        found.sort();
        found
    }

    fn bound(&mut self, masks: &[u64]) -> usize {
        self.parts
            .iter_mut()
            .zip(masks)
            .map(|(p, &m)| p.alpha(m) as usize)
            .sum()
    }

    fn search(&mut self, cand: &mut VertexSet, masks: &mut [u64], chosen: &mut Vec<usize>) {
        let bound = chosen.len() + self.bound(masks);
        match self.target {
            None if bound <= self.best.len() => return,
            Some(target) if bound < target => return,
            _ => {}
        }
        // branch on the part with the fewest remaining candidates
        let Some((p, _)) = masks
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .min_by_key(|(_, &m)| m.count_ones())
        else {
            match self.target {
                None => self.best = chosen.clone(),
                Some(target) => {
                    if chosen.len() == target {
                        self.found.push(chosen.clone())
                    }
                }
            }
            return;
        };
        let bit = masks[p].trailing_zeros();
        let v = self.parts[p].vertices[bit as usize];

        // include v
        let mut cand_in = cand.clone();
        let mut masks_in = masks.to_vec();
        cand_in.remove(v);
        masks_in[p] &= !(1 << bit);
        for (w, row) in cand.words().iter().zip(self.g.row(v)).enumerate() {
            let mut hit = row.0 & row.1;
            while hit != 0 {
                let u = w * 64 + hit.trailing_zeros() as usize;
                hit &= hit - 1;
                let (q, b) = self.place[u];
                masks_in[q] &= !(1 << b);
            }
        }
        cand_in.remove_all(self.g.row(v));
        chosen.push(v);
        self.search(&mut cand_in, &mut masks_in, chosen);
        chosen.pop();

        // exclude v
        cand.remove(v);
        masks[p] &= !(1 << bit);
        self.search(cand, masks, chosen);
        cand.insert(v);
        masks[p] |= 1 << bit;
    }
}
