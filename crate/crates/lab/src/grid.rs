//! The verification grid: every theorem check over every small instance.
//!
//! Items are generated in a fixed order, run in parallel, and collected back in
//! that order. Each item draws from its own ChaCha8 stream (`seed`, stream =
//! item index), so the report does not depend on scheduling.

use std::collections::BTreeSet;

use lklab_core::coloring::{
    chi_exact, is_proper, kneser_coloring, las_vegas_coloring, local_profile, projection_coloring,
    psi_exact, Coloring, DEFAULT_RETRY_CAP,
};
use lklab_core::graphs::{build_kneser, build_local_kneser};
use lklab_core::homkit::{
    coloring_from_hom, hom_from_coloring, inclusion_kg_to_local, min_star_map,
    projection_to_kneser, verify_hom, HomomorphismMap,
};
use lklab_core::independence::{
    alpha_exact, alpha_formula, build_d_s, build_i_d, build_s_sigma, check_center_consistency,
    distinct_s_sigmas, enumerate_maximum_independent_sets, extract_centers, match_to_sigma,
    nu_mu_bruteforce, IndependentSet,
};
use lklab_core::setkit::binomial;
use lklab_core::{Budget, Error, Graph, Permutation};
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::Status;

/// Largest instance in the grid (the exact independence number is run on all of them).
pub const GRID_MAX_VERTICES: usize = 2000;
/// Largest instance for the maximum-independent-set characterization.
pub const CHARACTERIZATION_MAX_VERTICES: usize = 60;
/// Largest instance for the exact local chromatic number.
pub const PSI_MAX_VERTICES: usize = 15;
/// Kneser graphs whose chromatic number is checked exactly.
pub const KNESER_CHI_CASES: [(usize, usize); 5] = [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Alpha,
    SSigma,
    Characterization,
    BondyHell,
    Projection,
    Homomorphisms,
    Psi,
    KneserChi,
    HomRoundtrip,
    LasVegas,
}

#[derive(Clone, Debug)]
pub struct GridConfig {
    pub n_max: usize,
    pub seed: u64,
    pub budget: Budget,
    /// Random permutations per instance for the `S_sigma` size check.
    pub s_sigma_samples: usize,
    /// Random colorings for the coloring/homomorphism roundtrip.
    pub roundtrip_samples: usize,
}

impl GridConfig {
    pub fn new(n_max: usize, seed: u64, budget: Budget) -> Self {
        GridConfig {
            n_max,
            seed,
            budget,
            s_sigma_samples: 50,
            roundtrip_samples: 20,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    pub check: Check,
    pub params: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check: Check,
    pub instance: String,
    pub status: Status,
    pub detail: Value,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub budget_exceeded: usize,
}

impl Summary {
    pub fn of(records: &[CheckRecord]) -> Summary {
        let mut s = Summary {
            total: records.len(),
            ..Summary::default()
        };
        for r in records {
            *match r.status {
                Status::Pass => &mut s.pass,
                Status::Fail => &mut s.fail,
                Status::Skipped => &mut s.skipped,
                Status::BudgetExceeded => &mut s.budget_exceeded,
            } += 1;
        }
        s
    }
}

/// `|V(U_t(n, r))| = C(n, r) C(r, t)`.
pub fn local_order(n: usize, r: usize, t: usize) -> u64 {
    binomial(n as u64, r as u64).saturating_mul(binomial(r as u64, t as u64))
}

/// All `(n, r, t)` with `n_max >= n >= r >= 2t >= 2` and at most `max_vertices` vertices.
pub fn triples(n_max: usize, max_vertices: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for r in 2..=n {
            for t in 1..=r / 2 {
                if local_order(n, r, t) <= max_vertices as u64 {
                    out.push((n, r, t));
                }
            }
        }
    }
    out
}

pub fn items(cfg: &GridConfig) -> Vec<Item> {
    let grid = triples(cfg.n_max, GRID_MAX_VERTICES);
    let mut items = Vec::new();
    let mut push_all = |check: Check, list: &mut dyn Iterator<Item = Vec<usize>>| {
        items.extend(list.map(|params| Item { check, params }));
    };
    let per_triple = |&(n, r, t): &(usize, usize, usize)| vec![n, r, t];
    push_all(Check::Alpha, &mut grid.iter().map(per_triple));
    push_all(Check::SSigma, &mut grid.iter().map(per_triple));
    push_all(
        Check::Characterization,
        &mut grid
            .iter()
            .filter(|&&(n, r, t)| local_order(n, r, t) <= CHARACTERIZATION_MAX_VERTICES as u64)
            .map(per_triple),
    );
    push_all(Check::BondyHell, &mut grid.iter().map(per_triple));
    push_all(Check::Projection, &mut grid.iter().map(per_triple));
    push_all(Check::Homomorphisms, &mut grid.iter().map(per_triple));
    push_all(
        Check::Psi,
        &mut grid
            .iter()
            .filter(|&&(n, r, t)| local_order(n, r, t) <= PSI_MAX_VERTICES as u64)
            .map(per_triple),
    );
    push_all(
        Check::KneserChi,
        &mut KNESER_CHI_CASES
            .iter()
            .filter(|&&(m, _)| m <= cfg.n_max)
            .map(|&(m, n)| vec![m, n]),
    );
    push_all(
        Check::HomRoundtrip,
        &mut (0..cfg.roundtrip_samples).map(|i| vec![i]),
    );
    push_all(Check::LasVegas, &mut grid.iter().map(per_triple));
    items
}

pub fn instance_name(item: &Item) -> String {
    match (item.check, item.params.as_slice()) {
        (Check::KneserChi, &[m, n]) => format!("KG({m},{n})"),
        (Check::HomRoundtrip, &[i]) => format!("sample {i}"),
        (_, &[n, r, t]) => format!("U_{t}({n},{r})"),
        _ => format!("{:?}", item.params),
    }
}

/// Runs every item in parallel; the result is in item order.
pub fn run(cfg: &GridConfig) -> Vec<CheckRecord> {
    let items = items(cfg);
    items
        .par_iter()
        .enumerate()
        .map(|(index, item)| run_item(cfg, index as u64, item))
        .collect()
}

pub(crate) fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn run_item(cfg: &GridConfig, stream: u64, item: &Item) -> CheckRecord {
    let mut rng = rng_for(cfg.seed, stream);
    let p = &item.params;
    let result = match item.check {
        Check::Alpha => check_alpha(p[0], p[1], p[2], &cfg.budget),
        Check::SSigma => check_s_sigma(p[0], p[1], p[2], cfg.s_sigma_samples, &mut rng),
        Check::Characterization => check_characterization(p[0], p[1], p[2], &cfg.budget),
        Check::BondyHell => check_bondy_hell(p[0], p[1], p[2], &cfg.budget),
        Check::Projection => check_projection(p[0], p[1], p[2]),
        Check::Homomorphisms => check_homomorphisms(p[0], p[1], p[2]),
        Check::Psi => check_psi(p[0], p[1], p[2], &cfg.budget),
        Check::KneserChi => check_kneser_chi(p[0], p[1], &cfg.budget),
        Check::HomRoundtrip => check_hom_roundtrip(&mut rng),
        Check::LasVegas => check_las_vegas(p[0], p[1], p[2], &mut rng),
    };
    let (status, detail) = match result {
        Ok(outcome) => outcome,
        Err(e) => error_outcome(&e),
    };
    CheckRecord {
        check: item.check,
        instance: instance_name(item),
        status,
        detail,
    }
}

type Outcome = (Status, Value);

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn ratio(r: Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Budget overruns are reported, not failed; a characterization violation
/// carries a full dump of the offending set.
pub fn error_outcome(e: &Error) -> Outcome {
    match e {
        Error::BudgetExceeded { what, size, limit } => (
            Status::BudgetExceeded,
            json!({ "error": e.to_string(), "what": what, "size": size, "limit": limit }),
        ),
        Error::CharacterizationViolation(cx) => {
            let labels: Vec<String> = build_local_kneser(cx.n, cx.r, cx.t)
                .map(|g| {
                    cx.members
                        .iter()
                        .map(|&v| g.label(v).map(|l| l.to_string()).unwrap_or_default())
                        .collect()
                })
                .unwrap_or_default();
            (
                Status::Fail,
                json!({
                    "error": e.to_string(),
                    "counterexample": {
                        "n": cx.n, "r": cx.r, "t": cx.t,
                        "members": cx.members.iter().map(|v| v + 1).collect::<Vec<_>>(),
                        "member_labels": labels,
                        "d_s_arcs": cx.arcs,
                        "attempted_sigma": cx.attempted,
                    }
                }),
            )
        }
        other => (Status::Fail, json!({ "error": other.to_string() })),
    }
}

fn check_alpha(n: usize, r: usize, t: usize, budget: &Budget) -> lklab_core::Result<Outcome> {
    let g = build_local_kneser(n, r, t)?;
    let formula = alpha_formula(n, r, t)?;
    let exact = alpha_exact(&g, budget)? as u64;
    Ok((
        verdict(exact == formula),
        json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "formula": formula,
            "exact": exact,
        }),
    ))
}

fn check_s_sigma(
    n: usize,
    r: usize,
    t: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> lklab_core::Result<Outcome> {
    let g = build_local_kneser(n, r, t)?;
    let formula = alpha_formula(n, r, t)?;
    let mut sizes = BTreeSet::new();
    for _ in 0..samples {
        let sigma = Permutation::random(n, rng)?;
        // construction certifies independence pairwise
        sizes.insert(build_s_sigma(&g, &sigma)?.len() as u64);
    }
    Ok((
        verdict(sizes.iter().all(|&s| s == formula)),
        json!({ "samples": samples, "formula": formula, "sizes": sizes }),
    ))
}

fn is_perfect_matching(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| g.degree(v) == 1)
}

fn check_characterization(
    n: usize,
    r: usize,
    t: usize,
    budget: &Budget,
) -> lklab_core::Result<Outcome> {
    let g = build_local_kneser(n, r, t)?;
    let s_sigmas = distinct_s_sigmas(&g)?;
    if r == 2 * t {
        // with r = 2t the graph is a perfect matching, so its maximum
        // independent sets are counted rather than listed; reported only
        let matching = is_perfect_matching(&g);
        let maximum_sets = matching.then(|| 1u128 << (g.vertex_count() / 2));
        return Ok((
            Status::Skipped,
            json!({
                "reason": "r = 2t",
                "finding": {
                    "perfect_matching": matching,
                    "maximum_independent_sets": maximum_sets,
                    "distinct_s_sigma": s_sigmas.len(),
                    "every_maximum_set_is_an_s_sigma":
                        maximum_sets.map(|m| m == s_sigmas.len() as u128),
                }
            }),
        ));
    }
    let sets = enumerate_maximum_independent_sets(&g, budget)?;
    let enumerated: BTreeSet<IndependentSet> = sets.iter().cloned().collect();
    let mut matched = 0;
    let mut roundtrips = 0;
    let mut center_violations = 0;
    let mut two_cycles = 0;
    for s in &sets {
        let sigma = match_to_sigma(&g, s)?;
        if build_s_sigma(&g, &sigma)? == *s {
            matched += 1;
        }
        let d = build_d_s(&g, s)?;
        two_cycles += d.two_cycles().len();
        if build_i_d(&g, &d)? == *s {
            roundtrips += 1;
        }
        center_violations += check_center_consistency(&extract_centers(&g, s)?).len();
    }
    let ok = enumerated == s_sigmas
        && matched == sets.len()
        && roundtrips == sets.len()
        && center_violations == 0
        && two_cycles == 0;
    Ok((
        verdict(ok),
        json!({
            "maximum_independent_sets": sets.len(),
            "distinct_s_sigma": s_sigmas.len(),
            "sets_equal": enumerated == s_sigmas,
            "matched_to_sigma": matched,
            "i_d_roundtrips": roundtrips,
            "center_consistency_violations": center_violations,
            "two_cycles": two_cycles,
        }),
    ))
}

fn check_bondy_hell(n: usize, r: usize, t: usize, budget: &Budget) -> lklab_core::Result<Outcome> {
    let k1 = Graph::complete(1)?;
    let (nu_kg, mu_kg) = nu_mu_bruteforce(&build_kneser(r, t)?, &k1, budget)?;
    let (nu_u, mu_u) = nu_mu_bruteforce(&build_local_kneser(n, r, t)?, &k1, budget)?;
    let expected = Ratio::new(
        binomial(r as u64, t as u64),
        binomial(r as u64 - 1, t as u64 - 1),
    );
    Ok((
        verdict(mu_kg <= mu_u && mu_kg == expected && mu_u == expected),
        json!({
            "nu_kneser": nu_kg,
            "mu_kneser": ratio(mu_kg),
            "nu_local": nu_u,
            "mu_local": ratio(mu_u),
            "expected": ratio(expected),
        }),
    ))
}

fn check_projection(n: usize, r: usize, t: usize) -> lklab_core::Result<Outcome> {
    let g = build_local_kneser(n, r, t)?;
    let c = projection_coloring(&g)?;
    let proper = is_proper(&g, &c)?;
    let bound = n - 2 * t + 2;
    Ok((
        verdict(proper && c.palette_size() <= bound),
        json!({ "proper": proper, "colors": c.palette_size(), "bound": bound }),
    ))
}

fn map_summary(h: &HomomorphismMap) -> lklab_core::Result<(bool, Value)> {
    let ok = verify_hom(h)?;
    Ok((
        ok,
        json!({
            "domain": h.domain().family().to_string(),
            "codomain": h.codomain().family().to_string(),
            "edges_checked": h.domain().edge_count(),
            "verified": ok,
        }),
    ))
}

fn check_homomorphisms(n: usize, r: usize, t: usize) -> lklab_core::Result<Outcome> {
    let (a, inclusion) = map_summary(&inclusion_kg_to_local(r, t, n)?)?;
    let (b, projection) = map_summary(&projection_to_kneser(n, r, t)?)?;
    let (c, min_star) = map_summary(&min_star_map(n, r, t)?)?;
    Ok((
        verdict(a && b && c),
        json!({ "inclusion": inclusion, "projection": projection, "min_star": min_star }),
    ))
}

fn check_psi(n: usize, r: usize, t: usize, budget: &Budget) -> lklab_core::Result<Outcome> {
    let g = build_local_kneser(n, r, t)?;
    let psi = psi_exact(&g, budget)?.psi;
    let bound = r - 2 * t + 2;
    Ok((
        verdict(psi <= bound),
        json!({
            "psi": psi,
            "bound": bound,
            // evidence for the open question whether the bound is attained
            "equals_bound": psi == bound,
        }),
    ))
}

fn check_kneser_chi(m: usize, n: usize, budget: &Budget) -> lklab_core::Result<Outcome> {
    let g = build_kneser(m, n)?;
    let expected = m - 2 * n + 2;
    let chi = chi_exact(&g, budget)?.chi;
    let c = kneser_coloring(&g)?;
    let proper = is_proper(&g, &c)?;
    Ok((
        verdict(chi == expected && proper && c.palette_size() == expected),
        json!({
            "chi": chi,
            "expected": expected,
            "coloring_proper": proper,
            "coloring_colors": c.palette_size(),
        }),
    ))
}

/// A random graph on 5–9 vertices with a random proper coloring.
pub fn random_colored_graph<R: Rng>(rng: &mut R) -> lklab_core::Result<(Graph, Coloring)> {
    let order = rng.random_range(5..=9);
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if rng.random_bool(0.4) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(order, &edges)?;
    let mut visit: Vec<usize> = (0..order).collect();
    visit.shuffle(rng);
    let mut colors = vec![0u32; order];
    for v in visit {
        let free: Vec<u32> = (1..=order as u32)
            .filter(|&c| g.neighbors(v).all(|u| colors[u] != c))
            .collect();
        // prefer low colors so palettes stay small, but not always the lowest
        let pick = free[rng.random_range(0..free.len().min(3))];
        colors[v] = pick;
    }
    Ok((g, Coloring::new(colors)))
}

fn check_hom_roundtrip(rng: &mut ChaCha8Rng) -> lklab_core::Result<Outcome> {
    let (g, c) = random_colored_graph(rng)?;
    let r = local_profile(&g, &c)?.max.max(2);
    let n = (*c.colors().iter().max().unwrap_or(&1) as usize).max(r);
    let h = hom_from_coloring(&g, &c, n, r)?;
    let verified = verify_hom(&h)?;
    let (back, profile) = coloring_from_hom(&h)?;
    Ok((
        verdict(verified && back == c && profile.max <= r),
        json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "codomain": format!("U({n},{r})"),
            "hom_verified": verified,
            "coloring_recovered": back == c,
        }),
    ))
}

fn check_las_vegas(
    n: usize,
    r: usize,
    t: usize,
    rng: &mut ChaCha8Rng,
) -> lklab_core::Result<Outcome> {
    let g = build_local_kneser(n, r, t)?;
    let run = las_vegas_coloring(&g, rng, DEFAULT_RETRY_CAP)?;
    let proper = is_proper(&g, &run.coloring)?;
    let colors = run.coloring.palette_size();
    Ok((
        verdict(proper && colors <= run.l),
        json!({
            "l": run.l,
            "colors": colors,
            "attempts": run.attempts,
            "first_uncovered": run.first_uncovered,
            "proper": proper,
        }),
    ))
}
