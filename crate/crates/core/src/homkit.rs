//! Graph homomorphisms: the explicit maps between Kneser, local Kneser and
//! local complete graphs, the coloring/homomorphism correspondence for local
//! complete targets, and a small backtracking existence search.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::coloring::{local_profile, Coloring, LocalProfile};
use crate::error::{Error, Result};
use crate::graphs::{
    build_kneser, build_local_complete, build_local_kneser, Family, Graph, VertexLabel, VertexSet,
};
use crate::setkit::Subset;

/// A vertex map between two graphs. `verified` is only set by an exhaustive
/// edge check.
#[derive(Clone, Debug)]
pub struct HomomorphismMap {
    domain: Arc<Graph>,
    codomain: Arc<Graph>,
    assignment: Vec<Option<usize>>,
    verified: bool,
}

impl HomomorphismMap {
    /// A total map; `assignment[v]` is the image of domain vertex `v`.
    pub fn new(domain: Arc<Graph>, codomain: Arc<Graph>, assignment: Vec<usize>) -> Result<Self> {
        Self::partial(domain, codomain, assignment.into_iter().map(Some).collect())
    }

    pub fn partial(
        domain: Arc<Graph>,
        codomain: Arc<Graph>,
        assignment: Vec<Option<usize>>,
    ) -> Result<Self> {
        if assignment.len() != domain.vertex_count() {
            return Err(Error::input(format!(
                "assignment covers {} of {} vertices",
                assignment.len(),
                domain.vertex_count()
            )));
        }
        if let Some(x) = assignment
            .iter()
            .flatten()
            .find(|&&x| x >= codomain.vertex_count())
        {
            return Err(Error::input(format!("image {x} out of range")));
        }
        Ok(HomomorphismMap {
            domain,
            codomain,
            assignment,
            verified: false,
        })
    }

    pub fn identity(g: Arc<Graph>) -> Result<Self> {
        let ids = (0..g.vertex_count()).collect();
        HomomorphismMap::new(g.clone(), g, ids)?.into_verified()
    }

    pub fn domain(&self) -> &Graph {
        &self.domain
    }

    pub fn codomain(&self) -> &Graph {
        &self.codomain
    }

    pub fn domain_arc(&self) -> Arc<Graph> {
        self.domain.clone()
    }

    pub fn codomain_arc(&self) -> Arc<Graph> {
        self.codomain.clone()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn image(&self, v: usize) -> Option<usize> {
        self.assignment.get(v).copied().flatten()
    }

    /// Images of all vertices; fails on partial maps.
    pub fn images(&self) -> Result<Vec<usize>> {
        self.assignment
            .iter()
            .enumerate()
            .map(|(v, x)| x.ok_or_else(|| Error::input(format!("vertex {v} has no image"))))
            .collect()
    }

    /// Runs the edge check and marks the map verified, or fails if some edge
    /// is not preserved.
    pub fn into_verified(mut self) -> Result<Self> {
        if verify_hom(&self)? {
            self.verified = true;
            Ok(self)
        } else {
            Err(Error::input("map does not preserve every edge"))
        }
    }
}

/// True iff every domain edge lands on a codomain edge.
pub fn verify_hom(h: &HomomorphismMap) -> Result<bool> {
    let images = h.images()?;
    Ok(h.domain
        .edges()
        .into_iter()
        .all(|(u, v)| h.codomain.adjacent(images[u], images[v])))
}

fn lookup(g: &Graph, label: VertexLabel) -> Result<usize> {
    g.index_of(&label).ok_or_else(|| {
        Error::InternalInconsistency(format!("{label} is not a vertex of {}", g.family()))
    })
}

/// `KG(r, t) → U_t(n, r)`, `A ↦ (A, [r] \ A)`.
pub fn inclusion_kg_to_local(r: usize, t: usize, n: usize) -> Result<HomomorphismMap> {
    let kg = build_kneser(r, t)?;
    let u = build_local_kneser(n, r, t)?;
    let full = Subset::full(r)?;
    let mut assignment = Vec::with_capacity(kg.vertex_count());
    for label in kg.labels() {
        let a = label.a.regrounded(n)?;
        let b = full.difference(&label.a).regrounded(n)?;
        assignment.push(lookup(&u, VertexLabel::new(a, b))?);
    }
    HomomorphismMap::new(Arc::new(kg), Arc::new(u), assignment)?.into_verified()
}

/// `U_t(n, r) → KG(n, t)`, `(A, B) ↦ A`.
pub fn projection_to_kneser(n: usize, r: usize, t: usize) -> Result<HomomorphismMap> {
    let u = build_local_kneser(n, r, t)?;
    let kg = build_kneser(n, t)?;
    let empty = Subset::empty(n)?;
    let assignment = u
        .labels()
        .iter()
        .map(|label| lookup(&kg, VertexLabel::new(label.a, empty)))
        .collect::<Result<Vec<_>>>()?;
    HomomorphismMap::new(Arc::new(u), Arc::new(kg), assignment)?.into_verified()
}

/// `U_t(m, r) → U(m - t + 1, r - 2t + 2)`, `(A, B) ↦ (min A, B*)` where `B*`
/// holds the `r - 2t + 1` smallest elements of `B`.
pub fn min_star_map(m: usize, r: usize, t: usize) -> Result<HomomorphismMap> {
    let domain = build_local_kneser(m, r, t)?;
    let ground = m - t + 1;
    let codomain = build_local_complete(ground, r - 2 * t + 2)?;
    let keep = r - 2 * t + 1;
    let mut assignment = Vec::with_capacity(domain.vertex_count());
    for label in domain.labels() {
        let a = label.a.min_element().unwrap_or_default();
        let star = Subset::from_elements(m, label.b.iter().take(keep))?;
        // min A has t - 1 larger elements in A, each element of B* has t - 1
        // larger elements in B, so everything fits in [m - t + 1]
        let head = Subset::from_elements(ground, [a])
            .map_err(|_| Error::InternalInconsistency(format!("min A = {a} exceeds {ground}")))?;
        let star = star
            .regrounded(ground)
            .map_err(|_| Error::InternalInconsistency(format!("{star} not inside [{ground}]")))?;
        if star.len() != keep || star.contains(a) {
            return Err(Error::InternalInconsistency(format!(
                "bad image ({a}, {star})"
            )));
        }
        assignment.push(lookup(&codomain, VertexLabel::new(head, star))?);
    }
    HomomorphismMap::new(Arc::new(domain), Arc::new(codomain), assignment)?.into_verified()
}

/// For a verified map into `U(n, r)`: the coloring `v ↦ first coordinate of
/// h(v)` and its local profile, whose maximum is at most `r`.
pub fn coloring_from_hom(h: &HomomorphismMap) -> Result<(Coloring, LocalProfile)> {
    if !h.is_verified() {
        return Err(Error::input("homomorphism has not been verified"));
    }
    match h.codomain().family() {
        Family::LocalComplete { .. } | Family::LocalKneser { t: 1, .. } => {}
        other => {
            return Err(Error::input(format!(
                "codomain {other} is not a local complete graph"
            )));
        }
    }
    let colors = h
        .images()?
        .into_iter()
        .map(|x| {
            h.codomain()
                .label(x)
                .and_then(|l| l.a.min_element())
                .map(|c| c as u32)
                .ok_or_else(|| Error::InternalInconsistency("unlabelled codomain vertex".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let coloring = Coloring::new(colors);
    let profile = local_profile(h.domain(), &coloring)?;
    Ok((coloring, profile))
}

/// For a proper coloring with colors in `[n]` seeing at most `r` colors in
/// every closed neighborhood: the map `v ↦ (c(v), A_v)` into `U(n, r)`, where
/// `A_v` is the set of colors on `N(v)` padded with the smallest unused colors.
pub fn hom_from_coloring(g: &Graph, c: &Coloring, n: usize, r: usize) -> Result<HomomorphismMap> {
    if r < 1 || n < r {
        return Err(Error::params(format!("U({n},{r}) needs n >= r >= 1")));
    }
    let profile = local_profile(g, c)?;
    if profile.max > r {
        return Err(Error::input(format!(
            "closed neighborhoods see {} colors, more than {r}",
            profile.max
        )));
    }
    if let Some(&x) = c.colors().iter().find(|&&x| x as usize > n) {
        return Err(Error::input(format!("color {x} outside [1, {n}]")));
    }
    let codomain = build_local_complete(n, r)?;
    let mut assignment = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let own = c.colors()[v] as usize;
        let mut seen = Subset::from_elements(n, g.neighbors(v).map(|u| c.colors()[u] as usize))?;
        let mut pad = 1;
        while seen.len() < r - 1 && pad <= n {
            if pad != own && !seen.contains(pad) {
                seen = seen.with(pad);
            }
            pad += 1;
        }
        let head = Subset::from_elements(n, [own])?;
        assignment.push(lookup(&codomain, VertexLabel::new(head, seen))?);
    }
    HomomorphismMap::new(Arc::new(g.clone()), Arc::new(codomain), assignment)?.into_verified()
}

/// Backtracking search for a homomorphism `g → h`, returning the images.
pub fn find_homomorphism(g: &Graph, h: &Graph, budget: &Budget) -> Result<Option<Vec<usize>>> {
    Budget::check("hom_search domain", g.vertex_count(), budget.hom_domain)?;
    Budget::check("hom_search codomain", h.vertex_count(), budget.hom_codomain)?;
    let order: Vec<usize> = {
        let mut o: Vec<usize> = (0..g.vertex_count()).collect();
        o.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
        o
    };
    if h.vertex_count() == 0 {
        return Ok((g.vertex_count() == 0).then(Vec::new));
    }
    let mut images = alloc::vec![usize::MAX; g.vertex_count()];
    let found = extend(g, h, &order, 0, &mut images);
    Ok(found.then_some(images))
}

fn extend(g: &Graph, h: &Graph, order: &[usize], depth: usize, images: &mut [usize]) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let mut options = VertexSet::full(h.vertex_count());
    for u in g.neighbors(v) {
        if images[u] != usize::MAX {
            options.retain_all(h.row(images[u]));
        }
    }
    let options: Vec<usize> = options.iter().collect();
    for x in options {
        images[v] = x;
        if extend(g, h, order, depth + 1, images) {
            return true;
        }
    }
    images[v] = usize::MAX;
    false
}

/// A verified homomorphism `g → h`, or `None` when none exists.
pub fn hom_search(g: &Graph, h: &Graph, budget: &Budget) -> Result<Option<HomomorphismMap>> {
    match find_homomorphism(g, h, budget)? {
        None => Ok(None),
        Some(images) => {
            let map = HomomorphismMap::new(Arc::new(g.clone()), Arc::new(h.clone()), images)?;
            map.into_verified().map(Some)
        }
    }
}
