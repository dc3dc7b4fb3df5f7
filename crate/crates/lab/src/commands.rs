//! The subcommands, rendered to text so the binary only parses arguments and
//! writes output.

use std::path::{Path, PathBuf};

use lklab_core::coloring::{
    bound_report, chi_exact, is_proper, las_vegas_coloring, projection_coloring, psi_exact,
    Coloring, DEFAULT_RETRY_CAP,
};
use lklab_core::graphs::build_local_kneser;
use lklab_core::{Budget, Graph};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::dimacs::{load_instance, save_instance, FamilySpec};
use crate::export::write_coloring_csv;
use crate::grid::{self, Check, CheckRecord, GridConfig, Item, Summary};
use crate::report::{Clock, Status};
use crate::{LabError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug)]
pub struct Common {
    pub seed: u64,
    pub format: Format,
    pub timestamps: bool,
}

/// Rendered output plus the overall verdict, which decides the exit code.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub status: Status,
}

fn json_text<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

fn csv_text<F>(fill: F) -> Result<String>
where
    F: FnOnce(&mut csv::Writer<&mut Vec<u8>>) -> Result<()>,
{
    let mut buf = Vec::new();
    {
        let mut w = csv::Writer::from_writer(&mut buf);
        fill(&mut w)?;
        w.flush().map_err(|e| LabError::io("csv output", e))?;
    }
    String::from_utf8(buf).map_err(|e| LabError::Usage(e.to_string()))
}

fn coloring_csv(g: &Graph, c: &Coloring) -> Result<String> {
    let mut buf = Vec::new();
    write_coloring_csv(g, c, &mut buf)?;
    String::from_utf8(buf).map_err(|e| LabError::Usage(e.to_string()))
}

pub fn default_prefix(spec: FamilySpec) -> PathBuf {
    PathBuf::from(spec.to_string().replace(' ', "_"))
}

pub fn construct(spec: FamilySpec, prefix: Option<&Path>, common: Common) -> Result<Output> {
    let clock = Clock::start(common.timestamps);
    let g = spec
        .build()?
        .ok_or_else(|| LabError::Usage("cannot construct a custom graph".into()))?;
    let prefix = prefix
        .map(Path::to_path_buf)
        .unwrap_or_else(|| default_prefix(spec));
    let (graph_path, labels_path) = save_instance(&g, &prefix)?;
    let degenerate = g.is_degenerate();
    let text = match common.format {
        Format::Json => json_text(&clock.record(
            "construct",
            json!({ "family": spec.to_string() }),
            common.seed,
            Status::Pass,
            json!({
                "graph": g.family().to_string(),
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "degenerate_r_equals_2t": degenerate,
                "dimacs": graph_path.display().to_string(),
                "labels": labels_path.display().to_string(),
            }),
        ))?,
        Format::Csv => csv_text(|w| {
            w.write_record(["graph", "vertices", "edges", "dimacs", "labels"])?;
            w.write_record([
                g.family().to_string(),
                g.vertex_count().to_string(),
                g.edge_count().to_string(),
                graph_path.display().to_string(),
                labels_path.display().to_string(),
            ])?;
            Ok(())
        })?,
    };
    Ok(Output {
        text,
        status: Status::Pass,
    })
}

/// Checks that apply to one loaded instance.
fn instance_items(spec: FamilySpec) -> Result<Vec<Item>> {
    let triple = match spec {
        FamilySpec::LocalKneser { n, r, t } => (n, r, t),
        FamilySpec::LocalComplete { n, r } => (n, r, 1),
        FamilySpec::Kneser { m, n } => {
            return Ok(vec![Item {
                check: Check::KneserChi,
                params: vec![m, n],
            }])
        }
        FamilySpec::Custom => {
            return Err(LabError::Usage(
                "custom graphs carry no family to verify against".into(),
            ))
        }
    };
    let (n, r, t) = triple;
    let order = grid::local_order(n, r, t);
    let mut checks = vec![
        Check::Alpha,
        Check::SSigma,
        Check::BondyHell,
        Check::Projection,
        Check::Homomorphisms,
        Check::LasVegas,
    ];
    if order <= grid::CHARACTERIZATION_MAX_VERTICES as u64 {
        checks.push(Check::Characterization);
    }
    if order <= grid::PSI_MAX_VERTICES as u64 {
        checks.push(Check::Psi);
    }
    checks.sort();
    Ok(checks
        .into_iter()
        .map(|check| Item {
            check,
            params: vec![n, r, t],
        })
        .collect())
}

pub struct VerifyInput<'a> {
    pub graph: &'a Path,
    pub labels: Option<&'a Path>,
}

pub fn verify(
    n_max: usize,
    input: Option<VerifyInput<'_>>,
    common: Common,
    budget: Budget,
) -> Result<Output> {
    let clock = Clock::start(common.timestamps);
    let cfg = GridConfig::new(n_max, common.seed, budget);
    let (records, parameters): (Vec<CheckRecord>, Value) = match input {
        None => (grid::run(&cfg), json!({ "n_max": n_max })),
        Some(VerifyInput { graph, labels }) => {
            let g = load_instance(graph, labels)?;
            let spec = FamilySpec::of(&g);
            let items = instance_items(spec)?;
            let records = items
                .par_iter()
                .enumerate()
                .map(|(i, item)| grid::run_item(&cfg, i as u64, item))
                .collect();
            (
                records,
                json!({ "input": graph.display().to_string(), "family": spec.to_string() }),
            )
        }
    };
    let status = Status::worst(records.iter().map(|r| r.status));
    let text = match common.format {
        Format::Json => json_text(&clock.record(
            "verify",
            parameters,
            common.seed,
            status,
            json!({ "summary": Summary::of(&records), "checks": records }),
        ))?,
        Format::Csv => csv_text(|w| {
            w.write_record(["check", "instance", "status", "detail"])?;
            for r in &records {
                w.write_record([
                    serde_json::to_string(&r.check)?
                        .trim_matches('"')
                        .to_string(),
                    r.instance.clone(),
                    serde_json::to_string(&r.status)?
                        .trim_matches('"')
                        .to_string(),
                    r.detail.to_string(),
                ])?;
            }
            Ok(())
        })?,
    };
    Ok(Output { text, status })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorMode {
    Random,
    Projection,
    Exact,
}

#[derive(Clone, Debug, Serialize)]
pub struct Trial {
    pub trial: usize,
    pub colors: usize,
    pub attempts: usize,
    pub first_uncovered: usize,
    pub proper: bool,
}

pub fn color(
    (n, r, t): (usize, usize, usize),
    mode: ColorMode,
    trials: usize,
    common: Common,
    budget: Budget,
) -> Result<Output> {
    let clock = Clock::start(common.timestamps);
    let g = build_local_kneser(n, r, t)?;
    let parameters = json!({ "n": n, "r": r, "t": t, "mode": format!("{mode:?}").to_lowercase(), "trials": trials });
    match mode {
        ColorMode::Random => {
            if trials == 0 {
                return Err(LabError::Usage("--trials must be at least 1".into()));
            }
            let runs: Vec<Trial> = (0..trials)
                .into_par_iter()
                .map(|i| -> Result<Trial> {
                    let mut rng = grid::rng_for(common.seed, i as u64);
                    let run = las_vegas_coloring(&g, &mut rng, DEFAULT_RETRY_CAP)?;
                    Ok(Trial {
                        trial: i,
                        colors: run.coloring.palette_size(),
                        attempts: run.attempts,
                        first_uncovered: run.first_uncovered,
                        proper: is_proper(&g, &run.coloring)?,
                    })
                })
                .collect::<Result<_>>()?;
            let l = lklab_core::coloring::default_l(n, r, t)?;
            let max_colors = runs.iter().map(|x| x.colors).max().unwrap_or(0);
            let all_proper = runs.iter().all(|x| x.proper);
            let mean_uncovered =
                runs.iter().map(|x| x.first_uncovered as f64).sum::<f64>() / trials as f64;
            let status = if all_proper && max_colors <= l {
                Status::Pass
            } else {
                Status::Fail
            };
            let text = match common.format {
                Format::Json => json_text(&clock.record(
                    "color",
                    parameters,
                    common.seed,
                    status,
                    json!({
                        "l": l,
                        "max_colors": max_colors,
                        "all_proper": all_proper,
                        "mean_first_uncovered": mean_uncovered,
                        "total_attempts": runs.iter().map(|x| x.attempts).sum::<usize>(),
                        "trials": runs,
                    }),
                ))?,
                Format::Csv => csv_text(|w| {
                    for run in &runs {
                        w.serialize(run)?;
                    }
                    Ok(())
                })?,
            };
            Ok(Output { text, status })
        }
        ColorMode::Projection | ColorMode::Exact => {
            let (c, outcome) = if mode == ColorMode::Projection {
                let c = projection_coloring(&g)?;
                let bound = n - 2 * t + 2;
                let outcome = json!({ "colors": c.palette_size(), "bound": bound });
                (c, outcome)
            } else {
                let res = chi_exact(&g, &budget)?;
                let outcome = json!({ "chi": res.chi });
                (res.certificate, outcome)
            };
            let proper = is_proper(&g, &c)?;
            let within = mode == ColorMode::Exact || c.palette_size() <= n - 2 * t + 2;
            let status = if proper && within {
                Status::Pass
            } else {
                Status::Fail
            };
            let text = match common.format {
                Format::Json => {
                    let mut outcome = outcome;
                    outcome["proper"] = json!(proper);
                    outcome["coloring"] = json!(c.colors());
                    json_text(&clock.record("color", parameters, common.seed, status, outcome))?
                }
                Format::Csv => coloring_csv(&g, &c)?,
            };
            Ok(Output { text, status })
        }
    }
}

pub fn psi((n, r, t): (usize, usize, usize), common: Common, budget: Budget) -> Result<Output> {
    let clock = Clock::start(common.timestamps);
    let g = build_local_kneser(n, r, t)?;
    let res = psi_exact(&g, &budget)?;
    let bound = r - 2 * t + 2;
    let status = if res.psi <= bound {
        Status::Pass
    } else {
        Status::Fail
    };
    let text = match common.format {
        Format::Json => json_text(&clock.record(
            "psi",
            json!({ "n": n, "r": r, "t": t }),
            common.seed,
            status,
            json!({
                "psi": res.psi,
                "bound": bound,
                "equals_bound": res.psi == bound,
                "open_question": "whether psi(U_t(n,r)) = r - 2t + 2 in general; reported, not asserted",
                "certificate": res.certificate.colors(),
            }),
        ))?,
        Format::Csv => csv_text(|w| {
            w.write_record(["n", "r", "t", "psi", "bound", "equals_bound"])?;
            w.write_record([
                n.to_string(),
                r.to_string(),
                t.to_string(),
                res.psi.to_string(),
                bound.to_string(),
                (res.psi == bound).to_string(),
            ])?;
            Ok(())
        })?,
    };
    Ok(Output { text, status })
}

#[derive(Serialize)]
struct BoundRow {
    n: u64,
    r: u64,
    t: u64,
    projection: u64,
    permutation: u64,
    local_complete: Option<f64>,
    note: Option<&'static str>,
}

pub fn bounds(ns: &[u64], rs: &[u64], ts: &[u64], common: Common) -> Result<Output> {
    let clock = Clock::start(common.timestamps);
    let mut rows = Vec::new();
    for &n in ns {
        for &r in rs {
            for &t in ts {
                if t >= 1 && r >= 2 * t && n >= r {
                    let b = bound_report(n, r, t)?;
                    rows.push(BoundRow {
                        n,
                        r,
                        t,
                        projection: b.projection,
                        permutation: b.permutation,
                        local_complete: b.local_complete,
                        note: b.note,
                    });
                }
            }
        }
    }
    if rows.is_empty() {
        return Err(LabError::Usage(
            "no (n, r, t) with n >= r >= 2t >= 2 in the sweep".into(),
        ));
    }
    let text = match common.format {
        Format::Json => json_text(&clock.record(
            "bounds",
            json!({ "n": ns, "r": rs, "t": ts }),
            common.seed,
            Status::Pass,
            json!({ "rows": rows }),
        ))?,
        Format::Csv => csv_text(|w| {
            for row in &rows {
                w.serialize(row)?;
            }
            Ok(())
        })?,
    };
    Ok(Output {
        text,
        status: Status::Pass,
    })
}
