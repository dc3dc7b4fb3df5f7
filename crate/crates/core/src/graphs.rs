//! Kneser graphs `KG(m, n)`, local complete graphs `U(n, r)`, local Kneser
//! graphs `U_t(n, r)` and their induced blocks `V_R`.
//!
//! Every family vertex is a [`VertexLabel`] `(A, B)` of disjoint subsets of the
//! ground set. Kneser vertices have `B = {}`; a local complete vertex `(a, A)`
//! is stored as `({a}, A)`, so `U(n, r)` and `U_1(n, r)` share one label space
//! and one adjacency rule. Vertex indices follow the sorted order of labels
//! (`A` lexicographic, then `B` lexicographic).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::setkit::{binomial, enumerate_subsets, subsets_of, Permutation, Subset};

/// Refuse to materialize adjacency matrices above this many vertices.
pub const MAX_VERTICES: usize = 20_000;

/// A set of vertex indices backed by a word vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = VertexSet::new(len);
        for v in 0..len {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn remove_all(&mut self, other: &[u64]) {
        for (w, o) in self.words.iter_mut().zip(other) {
            *w &= !o;
        }
    }

    pub fn retain_all(&mut self, other: &[u64]) {
        for (w, o) in self.words.iter_mut().zip(other) {
            *w &= o;
        }
    }

    pub fn intersects(&self, other: &[u64]) -> bool {
        self.words.iter().zip(other).any(|(w, o)| w & o != 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A vertex `(A, B)` of one of the graph families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel {
    pub a: Subset,
    pub b: Subset,
}

impl VertexLabel {
    pub fn new(a: Subset, b: Subset) -> Self {
        VertexLabel { a, b }
    }

    /// `A ∪ B`, the block this vertex lives in.
    pub fn support(&self) -> Subset {
        self.a.union(&self.b)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl fmt::Debug for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which construction produced a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `KG(m, n)`.
    Kneser { m: usize, n: usize },
    /// `U(n, r)`, labelled as `U_1(n, r)`.
    LocalComplete { n: usize, r: usize },
    /// `U_t(n, r)`.
    LocalKneser { n: usize, r: usize, t: usize },
    /// The block `V_R` induced inside `U_t(n, r)`.
    Block {
        n: usize,
        r: usize,
        t: usize,
        set: Subset,
    },
    /// Built from an explicit edge list; no labels.
    Custom,
}

impl Family {
    /// Ground-set size, when the family has one.
    pub fn ground_size(&self) -> Option<usize> {
        match *self {
            Family::Kneser { m, .. } => Some(m),
            Family::LocalComplete { n, .. }
            | Family::LocalKneser { n, .. }
            | Family::Block { n, .. } => Some(n),
            Family::Custom => None,
        }
    }

    /// `(n, r, t)` for `U_t(n, r)` and `U(n, r) = U_1(n, r)`.
    pub fn local_params(&self) -> Option<(usize, usize, usize)> {
        match *self {
            Family::LocalKneser { n, r, t } => Some((n, r, t)),
            Family::LocalComplete { n, r } => Some((n, r, 1)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Kneser { m, n } => write!(f, "KG({m},{n})"),
            Family::LocalComplete { n, r } => write!(f, "U({n},{r})"),
            Family::LocalKneser { n, r, t } => write!(f, "U_{t}({n},{r})"),
            Family::Block { n, r, t, set } => write!(f, "V_{set} in U_{t}({n},{r})"),
            Family::Custom => f.write_str("custom"),
        }
    }
}

/// A finite simple graph with a packed symmetric adjacency matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    family: Family,
    labels: Vec<VertexLabel>,
    order: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("family", &self.family)
            .field("vertices", &self.order)
            .field("edges", &self.edge_count())
            .finish()
    }
}

fn check_size(count: u64) -> Result<usize> {
    if count > MAX_VERTICES as u64 {
        return Err(Error::params(format!(
            "{count} vertices exceeds the materialization limit {MAX_VERTICES}"
        )));
    }
    Ok(count as usize)
}

impl Graph {
    fn empty(family: Family, labels: Vec<VertexLabel>, order: usize) -> Self {
        let stride = order.div_ceil(64).max(1);
        Graph {
            family,
            labels,
            order,
            stride,
            rows: vec![0; stride * order],
        }
    }

    fn from_labels(
        family: Family,
        labels: Vec<VertexLabel>,
        adjacent: impl Fn(&VertexLabel, &VertexLabel) -> bool,
    ) -> Self {
        let order = labels.len();
        let mut g = Graph::empty(family, labels, order);
        for u in 0..order {
            for v in (u + 1)..order {
                if adjacent(&g.labels[u], &g.labels[v]) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Graph on `order` vertices with the given undirected edges (0-based).
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_size(order as u64)?;
        let mut g = Graph::empty(Family::Custom, Vec::new(), order);
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::params(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::params(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Complete graph `K_k`.
    pub fn complete(k: usize) -> Result<Self> {
        let edges: Vec<_> = (0..k)
            .flat_map(|u| ((u + 1)..k).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(k, &edges)
    }

    /// Cycle `C_k`, `k >= 3`.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::params("a cycle needs at least 3 vertices"));
        }
        let edges: Vec<_> = (0..k).map(|u| (u, (u + 1) % k)).collect();
        Graph::from_edges(k, &edges)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    pub fn family(&self) -> Family {
        self.family
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.stride + v / 64] & (1 << (v % 64)) != 0
    }

    /// Adjacency row of `v` as words (bit `u` set iff `u ~ v`).
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        (0..self.order).filter(move |&u| row[u / 64] & (1 << (u % 64)) != 0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Labels in vertex order; empty for [`Family::Custom`].
    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&VertexLabel> {
        self.labels.get(v)
    }

    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    pub fn ground_size(&self) -> Option<usize> {
        self.family.ground_size()
    }

    /// `(n, r, t)` when this is `U_t(n, r)` or `U(n, r)`.
    pub fn local_params(&self) -> Option<(usize, usize, usize)> {
        self.family.local_params()
    }

    /// True for `U_t(n, 2t)`, where blocks are `KG(2t, t)` perfect matchings.
    pub fn is_degenerate(&self) -> bool {
        matches!(self.local_params(), Some((_, r, t)) if r == 2 * t)
    }

    pub(crate) fn require_local(&self) -> Result<(usize, usize, usize)> {
        self.local_params().ok_or_else(|| {
            Error::params(format!(
                "expected a local Kneser graph, got {}",
                self.family
            ))
        })
    }

    /// Subgraph induced on `vertices`, which must be sorted and distinct.
    pub fn induced(&self, vertices: &[usize], family: Family) -> Graph {
        let labels = if self.labels.is_empty() {
            Vec::new()
        } else {
            vertices.iter().map(|&v| self.labels[v]).collect()
        };
        let mut g = Graph::empty(family, labels, vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// The blocks `V_R` of a local Kneser graph: every `r`-subset `R` with the
    /// indices of the vertices `(A, B)` having `A ∪ B = R`, in lexicographic
    /// order of `R`.
    pub fn blocks(&self) -> Result<Vec<(Subset, Vec<usize>)>> {
        let (n, r, _) = self.require_local()?;
        let sets = enumerate_subsets(n, r)?;
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); sets.len()];
        for (v, label) in self.labels.iter().enumerate() {
            let idx = label.support().lex_rank() as usize;
            members[idx].push(v);
        }
        Ok(sets.into_iter().zip(members).collect())
    }
}

/// `KG(m, n)`: `n`-subsets of `[m]`, adjacent when disjoint.
pub fn build_kneser(m: usize, n: usize) -> Result<Graph> {
    if n < 1 || m < 2 * n {
        return Err(Error::params(format!("KG({m},{n}) needs m >= 2n >= 2")));
    }
    check_size(binomial(m as u64, n as u64))?;
    let empty = Subset::empty(m)?;
    let labels = enumerate_subsets(m, n)?
        .into_iter()
        .map(|a| VertexLabel::new(a, empty))
        .collect();
    Ok(Graph::from_labels(
        Family::Kneser { m, n },
        labels,
        |x, y| x.a.is_disjoint(&y.a),
    ))
}

fn local_labels(n: usize, r: usize, t: usize) -> Result<Vec<VertexLabel>> {
    check_size(binomial(n as u64, r as u64).saturating_mul(binomial(r as u64, t as u64)))?;
    let full = Subset::full(n)?;
    let mut labels = Vec::new();
    for a in enumerate_subsets(n, t)? {
        for b in subsets_of(&full.difference(&a), r - t) {
            labels.push(VertexLabel::new(a, b));
        }
    }
    Ok(labels)
}

fn local_adjacent(x: &VertexLabel, y: &VertexLabel) -> bool {
    x.a.is_subset_of(&y.b) && y.a.is_subset_of(&x.b)
}

/// `U(n, r)`: vertices `(a, A)` with `|A| = r - 1`, `a ∉ A`; `(a, A) ~ (b, B)`
/// iff `a ∈ B` and `b ∈ A`.
pub fn build_local_complete(n: usize, r: usize) -> Result<Graph> {
    if r < 1 || r > n {
        return Err(Error::params(format!("U({n},{r}) needs n >= r >= 1")));
    }
    let labels = local_labels(n, r, 1)?;
    Ok(Graph::from_labels(
        Family::LocalComplete { n, r },
        labels,
        local_adjacent,
    ))
}

/// `U_t(n, r)`: disjoint pairs `(A, B)` with `|A| = t`, `|B| = r - t`;
/// `(A, B) ~ (C, D)` iff `A ⊆ D` and `C ⊆ B`.
pub fn build_local_kneser(n: usize, r: usize, t: usize) -> Result<Graph> {
    if t < 1 || r < 2 * t || n < r {
        return Err(Error::params(format!(
            "U_{t}({n},{r}) needs n >= r >= 2t >= 2"
        )));
    }
    let labels = local_labels(n, r, t)?;
    Ok(Graph::from_labels(
        Family::LocalKneser { n, r, t },
        labels,
        local_adjacent,
    ))
}

/// An induced block `V_R` together with its identification with `KG(r, t)`.
#[derive(Debug, Clone)]
pub struct Block {
    pub set: Subset,
    /// The induced subgraph on `V_R`.
    pub graph: Graph,
    /// Indices in the parent graph, ascending.
    pub members: Vec<usize>,
    /// `KG(r, t)` on `[r]`.
    pub kneser: Graph,
    /// Block vertex `i` corresponds to `kneser` vertex `to_kneser[i]`.
    pub to_kneser: Vec<usize>,
}

/// Induced subgraph on `V_R = {(A, B) : A ∪ B = R}` and a verified isomorphism
/// to `KG(r, t)` obtained by renaming the elements of `R` by rank.
pub fn induced_block(g: &Graph, set: &Subset) -> Result<Block> {
    let (n, r, t) = g.require_local()?;
    if set.len() != r || set.ground_size() != n {
        return Err(Error::params(format!(
            "block set {set} must be an {r}-subset of [{n}]"
        )));
    }
    let members: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.labels[v].support() == *set)
        .collect();
    let graph = g.induced(&members, Family::Block { n, r, t, set: *set });
    let kneser = build_kneser(r, t)?;
    let elements = set.to_vec();
    let rank = |x: usize| elements.iter().position(|&e| e == x).map(|p| p + 1);
    let empty = Subset::empty(r)?;
    let mut to_kneser = Vec::with_capacity(members.len());
    for &v in &members {
        let a = Subset::from_elements(r, g.labels[v].a.iter().filter_map(rank))?;
        let image = kneser
            .index_of(&VertexLabel::new(a, empty))
            .ok_or_else(|| Error::InternalInconsistency(format!("{a} missing from KG({r},{t})")))?;
        to_kneser.push(image);
    }
    let mut seen = vec![false; kneser.vertex_count()];
    for &k in &to_kneser {
        if core::mem::replace(&mut seen[k], true) {
            return Err(Error::InternalInconsistency(
                "block map is not injective".into(),
            ));
        }
    }
    if to_kneser.len() != kneser.vertex_count() {
        return Err(Error::InternalInconsistency(
            "block map is not onto KG(r,t)".into(),
        ));
    }
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            if graph.adjacent(i, j) != kneser.adjacent(to_kneser[i], to_kneser[j]) {
                return Err(Error::InternalInconsistency(format!(
                    "block map fails on {} / {}",
                    g.labels[members[i]], g.labels[members[j]]
                )));
            }
        }
    }
    Ok(Block {
        set: *set,
        graph,
        members,
        kneser,
        to_kneser,
    })
}

/// The vertex permutation induced by `(A, B) ↦ (σ(A), σ(B))`, checked to be an
/// automorphism.
pub fn apply_ground_permutation(g: &Graph, sigma: &Permutation) -> Result<Vec<usize>> {
    let n = g
        .ground_size()
        .filter(|_| !matches!(g.family(), Family::Custom))
        .ok_or_else(|| Error::params("ground permutations act on family graphs only"))?;
    if sigma.len() != n {
        return Err(Error::params(format!(
            "permutation of [{}] applied to a graph on [{n}]",
            sigma.len()
        )));
    }
    let mut image = Vec::with_capacity(g.vertex_count());
    for label in g.labels() {
        let moved = VertexLabel::new(sigma.map_subset(&label.a), sigma.map_subset(&label.b));
        let idx = g.index_of(&moved).ok_or_else(|| {
            Error::params(format!(
                "{moved} is not a vertex; the permutation does not preserve the graph"
            ))
        })?;
        image.push(idx);
    }
    for (u, v) in g.edges() {
        if !g.adjacent(image[u], image[v]) {
            return Err(Error::InternalInconsistency(format!(
                "ground permutation {sigma:?} is not an automorphism"
            )));
        }
    }
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_elements(n, xs.iter().copied()).unwrap()
    }

    // independent adjacency oracle working on plain vectors
    fn disjoint(a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|x| !b.contains(x))
    }

    #[test]
    fn kneser_small_cases() {
        let k2 = build_kneser(2, 1).unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));

        let g = build_kneser(4, 2).unwrap();
        assert_eq!(g.vertex_count(), 6);
        let mut edges = 0;
        for u in 0..6 {
            for v in (u + 1)..6 {
                let a = g.label(u).unwrap().a.to_vec();
                let b = g.label(v).unwrap().a.to_vec();
                assert_eq!(g.adjacent(u, v), disjoint(&a, &b));
                edges += usize::from(disjoint(&a, &b));
            }
        }
        assert_eq!(edges, 3);
        assert_eq!(g.edge_count(), 3);

        let petersen = build_kneser(5, 2).unwrap();
        assert_eq!(petersen.vertex_count(), 10);
        assert_eq!(petersen.edge_count(), 10 * 3 / 2);
        assert!((0..10).all(|v| petersen.degree(v) == 3));
    }

    #[test]
    fn kneser_rejects_degenerate_parameters() {
        assert!(build_kneser(3, 2).is_err());
        assert!(build_kneser(4, 0).is_err());
    }

    #[test]
    fn local_complete_small_cases() {
        let g = build_local_complete(4, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 0));

        let g = build_local_complete(3, 2).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 3);
        for (u, v) in g.edges() {
            let (x, y) = (g.label(u).unwrap(), g.label(v).unwrap());
            assert_eq!(x.a, y.b);
            assert_eq!(y.a, x.b);
        }

        assert_eq!(build_local_complete(4, 3).unwrap().vertex_count(), 12);
        assert!(build_local_complete(3, 4).is_err());
    }

    #[test]
    fn local_kneser_counts() {
        assert_eq!(build_local_kneser(5, 4, 2).unwrap().vertex_count(), 30);
        for n in 2..=7 {
            for r in 2..=n {
                for t in 1..=r / 2 {
                    let g = build_local_kneser(n, r, t).unwrap();
                    let expected = binomial(n as u64, r as u64) * binomial(r as u64, t as u64);
                    assert_eq!(g.vertex_count() as u64, expected);
                    assert_eq!(
                        expected,
                        binomial(n as u64, t as u64) * binomial((n - t) as u64, (r - t) as u64)
                    );
                    assert_eq!(g.is_degenerate(), r == 2 * t);
                }
            }
        }
        assert!(build_local_kneser(5, 3, 2).is_err());
        assert!(build_local_kneser(3, 4, 1).is_err());
        assert!(build_local_kneser(4, 4, 0).is_err());
    }

    #[test]
    fn labels_are_sorted_and_adjacency_symmetric() {
        let g = build_local_kneser(6, 5, 2).unwrap();
        for w in g.labels().windows(2) {
            assert!(w[0] < w[1]);
        }
        for u in 0..g.vertex_count() {
            assert!(!g.adjacent(u, u));
            for v in 0..g.vertex_count() {
                assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
            }
        }
    }

    #[test]
    fn local_kneser_on_full_ground_set_is_kneser() {
        for (r, t) in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3), (5, 1)] {
            let u = build_local_kneser(r, r, t).unwrap();
            let kg = build_kneser(r, t).unwrap();
            assert_eq!(u.vertex_count(), kg.vertex_count());
            // with A ∪ B = [r], the label order is the order of A
            for v in 0..u.vertex_count() {
                assert_eq!(u.label(v).unwrap().a, kg.label(v).unwrap().a);
            }
            assert_eq!(u.edges(), kg.edges());
        }
    }

    #[test]
    fn local_kneser_with_t_one_is_local_complete() {
        for n in 2..=6 {
            for r in 2..=n {
                let a = build_local_kneser(n, r, 1).unwrap();
                let b = build_local_complete(n, r).unwrap();
                assert_eq!(a.labels(), b.labels());
                assert_eq!(a.edges(), b.edges());
            }
        }
    }

    #[test]
    fn induced_blocks_are_kneser_graphs() {
        let g = build_local_kneser(5, 4, 2).unwrap();
        let block = induced_block(&g, &set(5, &[1, 2, 3, 4])).unwrap();
        assert_eq!(block.graph.vertex_count(), 6);
        assert_eq!(block.graph.edge_count(), 3);

        let g = build_local_kneser(3, 2, 1).unwrap();
        let block = induced_block(&g, &set(3, &[1, 2])).unwrap();
        assert_eq!(block.graph.vertex_count(), 2);
        assert_eq!(block.graph.edge_count(), 1);
        assert_eq!(block.graph.label(0).unwrap().a, set(3, &[1]));
        assert_eq!(block.graph.label(0).unwrap().b, set(3, &[2]));

        let g = build_local_kneser(5, 5, 2).unwrap();
        let block = induced_block(&g, &Subset::full(5).unwrap()).unwrap();
        assert_eq!(block.members.len(), g.vertex_count());
        assert_eq!(block.graph.edges(), build_kneser(5, 2).unwrap().edges());

        assert!(induced_block(&g, &set(5, &[1, 2, 3])).is_err());
    }

    #[test]
    fn every_block_is_isomorphic_to_kneser() {
        for (n, r, t) in [(5, 3, 1), (6, 5, 2), (7, 6, 3), (6, 4, 2)] {
            let g = build_local_kneser(n, r, t).unwrap();
            let blocks = g.blocks().unwrap();
            assert_eq!(blocks.len() as u64, binomial(n as u64, r as u64));
            let mut covered = BTreeSet::new();
            for (set, members) in &blocks {
                let block = induced_block(&g, set).unwrap();
                assert_eq!(&block.members, members);
                covered.extend(members.iter().copied());
            }
            assert_eq!(covered.len(), g.vertex_count());
        }
    }

    #[test]
    fn ground_permutations_are_automorphisms() {
        let g = build_local_kneser(3, 2, 1).unwrap();
        let id = Permutation::identity(3).unwrap();
        let image = apply_ground_permutation(&g, &id).unwrap();
        assert_eq!(image, (0..6).collect::<Vec<_>>());

        let swap = Permutation::new(vec![2, 1, 3]).unwrap();
        let image = apply_ground_permutation(&g, &swap).unwrap();
        let x = g
            .index_of(&VertexLabel::new(set(3, &[1]), set(3, &[2])))
            .unwrap();
        let y = g
            .index_of(&VertexLabel::new(set(3, &[2]), set(3, &[1])))
            .unwrap();
        assert_eq!(image[x], y);
        assert_eq!(image[y], x);

        let petersen = build_kneser(5, 2).unwrap();
        for sigma in Permutation::all(5).unwrap() {
            apply_ground_permutation(&petersen, &sigma).unwrap();
        }

        let wrong = Permutation::identity(4).unwrap();
        assert!(apply_ground_permutation(&g, &wrong).is_err());
    }

    #[test]
    fn ground_action_is_transitive_for_small_n() {
        for (n, r, t) in [
            (3, 2, 1),
            (4, 3, 1),
            (4, 4, 2),
            (5, 4, 2),
            (5, 5, 2),
            (5, 3, 1),
        ] {
            let g = build_local_kneser(n, r, t).unwrap();
            let mut orbit = BTreeSet::new();
            for sigma in Permutation::all(n).unwrap() {
                orbit.insert(apply_ground_permutation(&g, &sigma).unwrap()[0]);
            }
            assert_eq!(orbit.len(), g.vertex_count(), "U_{t}({n},{r})");
        }
    }

    #[test]
    fn from_edges_validates() {
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
    }
}
