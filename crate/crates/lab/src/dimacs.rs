//! DIMACS `p edge` graphs and the vertex-label sidecar.
//!
//! A graph file looks like
//!
//! ```text
//! c family local-kneser 5 4 2
//! p edge 30 45
//! e 1 17
//! ...
//! ```
//!
//! with 1-based vertex indices and edges listed once each, `u < v`, in
//! lexicographic order. The `c family` line names the construction so that a
//! reader can rebuild the graph and cross-check it. The sidecar has one line
//! per vertex, `index TAB {A} TAB {B}`, sets written as comma-separated
//! ascending integers inside braces (`{}` for the empty set). Kneser vertices
//! have `B = {}`.

use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use lklab_core::graphs::{build_kneser, build_local_complete, build_local_kneser};
use lklab_core::{Family, Graph, Subset, VertexLabel};

use crate::{LabError, Result};

/// A construction that can be named in a `c family` line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Kneser { m: usize, n: usize },
    LocalComplete { n: usize, r: usize },
    LocalKneser { n: usize, r: usize, t: usize },
    Custom,
}

impl FamilySpec {
    pub fn of(g: &Graph) -> FamilySpec {
        match g.family() {
            Family::Kneser { m, n } => FamilySpec::Kneser { m, n },
            Family::LocalComplete { n, r } => FamilySpec::LocalComplete { n, r },
            Family::LocalKneser { n, r, t } => FamilySpec::LocalKneser { n, r, t },
            Family::Block { .. } | Family::Custom => FamilySpec::Custom,
        }
    }

    pub fn build(&self) -> lklab_core::Result<Option<Graph>> {
        Ok(Some(match *self {
            FamilySpec::Kneser { m, n } => build_kneser(m, n)?,
            FamilySpec::LocalComplete { n, r } => build_local_complete(n, r)?,
            FamilySpec::LocalKneser { n, r, t } => build_local_kneser(n, r, t)?,
            FamilySpec::Custom => return Ok(None),
        }))
    }

    fn ground_size(&self) -> Option<usize> {
        match *self {
            FamilySpec::Kneser { m, .. } => Some(m),
            FamilySpec::LocalComplete { n, .. } | FamilySpec::LocalKneser { n, .. } => Some(n),
            FamilySpec::Custom => None,
        }
    }

    fn parse(tokens: &[&str]) -> Option<FamilySpec> {
        let nums: Option<Vec<usize>> = tokens[1..].iter().map(|s| s.parse().ok()).collect();
        let nums = nums?;
        match (tokens.first().copied()?, nums.as_slice()) {
            ("kneser", &[m, n]) => Some(FamilySpec::Kneser { m, n }),
            ("local-complete", &[n, r]) => Some(FamilySpec::LocalComplete { n, r }),
            ("local-kneser", &[n, r, t]) => Some(FamilySpec::LocalKneser { n, r, t }),
            ("custom", &[]) => Some(FamilySpec::Custom),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Kneser { m, n } => write!(f, "kneser {m} {n}"),
            FamilySpec::LocalComplete { n, r } => write!(f, "local-complete {n} {r}"),
            FamilySpec::LocalKneser { n, r, t } => write!(f, "local-kneser {n} {r} {t}"),
            FamilySpec::Custom => f.write_str("custom"),
        }
    }
}

pub fn write_dimacs<W: Write>(g: &Graph, mut w: W) -> io::Result<()> {
    let edges = g.edges();
    writeln!(w, "c family {}", FamilySpec::of(g))?;
    writeln!(w, "p edge {} {}", g.vertex_count(), edges.len())?;
    for (u, v) in edges {
        writeln!(w, "e {} {}", u + 1, v + 1)?;
    }
    w.flush()
}

pub fn write_labels<W: Write>(g: &Graph, mut w: W) -> io::Result<()> {
    for (i, label) in g.labels().iter().enumerate() {
        writeln!(w, "{}\t{}\t{}", i + 1, label.a, label.b)?;
    }
    w.flush()
}

/// The contents of a DIMACS file, edges converted to 0-based `(u, v)`, `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimacsGraph {
    pub family: FamilySpec,
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
}

pub fn parse_dimacs(text: &str, source: &str) -> Result<DimacsGraph> {
    let mut family = None;
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first().copied() {
            None => continue,
            Some("c") => {
                if tokens.get(1) == Some(&"family") {
                    if family.is_some() {
                        return Err(LabError::schema(source, line, "repeated family line"));
                    }
                    family = Some(FamilySpec::parse(&tokens[2..]).ok_or_else(|| {
                        LabError::schema(source, line, format!("unknown family {:?}", &tokens[2..]))
                    })?);
                }
            }
            Some("p") => {
                if header.is_some() {
                    return Err(LabError::schema(source, line, "repeated problem line"));
                }
                let (v, e) = match tokens.as_slice() {
                    ["p", "edge", v, e] => (v.parse().ok(), e.parse().ok()),
                    _ => (None, None),
                };
                let (Some(v), Some(e)) = (v, e) else {
                    return Err(LabError::schema(source, line, "expected `p edge V E`"));
                };
                header = Some((v, e));
            }
            Some("e") => {
                let Some((order, _)) = header else {
                    return Err(LabError::schema(source, line, "edge before problem line"));
                };
                let ends: Option<Vec<usize>> = tokens[1..].iter().map(|s| s.parse().ok()).collect();
                let (u, v) = match ends.as_deref() {
                    Some(&[u, v]) => (u, v),
                    _ => return Err(LabError::schema(source, line, "expected `e U V`")),
                };
                if u == 0 || v == 0 || u > order || v > order {
                    return Err(LabError::schema(
                        source,
                        line,
                        format!("vertex out of range 1..={order}"),
                    ));
                }
                if u == v {
                    return Err(LabError::schema(
                        source,
                        line,
                        format!("loop at vertex {u}"),
                    ));
                }
                edges.push((u.min(v) - 1, u.max(v) - 1));
            }
            Some(other) => {
                return Err(LabError::schema(
                    source,
                    line,
                    format!("unknown line type {other:?}"),
                ));
            }
        }
    }
    let Some((order, declared)) = header else {
        return Err(LabError::schema(source, 0, "missing problem line"));
    };
    if edges.len() != declared {
        return Err(LabError::schema(
            source,
            0,
            format!("header declares {declared} edges, found {}", edges.len()),
        ));
    }
    edges.sort_unstable();
    if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
        return Err(LabError::schema(
            source,
            0,
            format!("duplicate edge {} {}", w[0].0 + 1, w[0].1 + 1),
        ));
    }
    Ok(DimacsGraph {
        family: family.unwrap_or(FamilySpec::Custom),
        order,
        edges,
    })
}

fn parse_set(field: &str, ground: usize, source: &str, line: usize) -> Result<Subset> {
    let inner = field
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| {
            LabError::schema(
                source,
                line,
                format!("expected a braced set, got {field:?}"),
            )
        })?;
    let mut elements = Vec::new();
    if !inner.is_empty() {
        for tok in inner.split(',') {
            let x: usize = tok
                .parse()
                .map_err(|_| LabError::schema(source, line, format!("bad set element {tok:?}")))?;
            if x == 0 || x > ground {
                return Err(LabError::schema(
                    source,
                    line,
                    format!("element {x} outside 1..={ground}"),
                ));
            }
            if elements.last().is_some_and(|&prev| prev >= x) {
                return Err(LabError::schema(
                    source,
                    line,
                    "set elements must be strictly ascending",
                ));
            }
            elements.push(x);
        }
    }
    Subset::from_elements(ground, elements)
        .map_err(|e| LabError::schema(source, line, e.to_string()))
}

/// Reads a sidecar over the ground set `[ground]`.
pub fn parse_labels(text: &str, source: &str, ground: usize) -> Result<Vec<VertexLabel>> {
    let mut labels = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        let [index, a, b] = fields.as_slice() else {
            return Err(LabError::schema(
                source,
                line,
                "expected `index TAB {A} TAB {B}`",
            ));
        };
        let index: usize = index
            .parse()
            .map_err(|_| LabError::schema(source, line, format!("bad index {index:?}")))?;
        if index != labels.len() + 1 {
            return Err(LabError::schema(
                source,
                line,
                format!("expected index {}, found {index}", labels.len() + 1),
            ));
        }
        let a = parse_set(a, ground, source, line)?;
        let b = parse_set(b, ground, source, line)?;
        if !a.is_disjoint(&b) {
            return Err(LabError::schema(source, line, "A and B overlap"));
        }
        labels.push(VertexLabel::new(a, b));
    }
    Ok(labels)
}

/// Default sidecar location: the graph path with its extension replaced by `labels`.
pub fn sidecar_path(graph_path: &Path) -> PathBuf {
    graph_path.with_extension("labels")
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| LabError::io(path.display(), e))
}

/// Loads a graph and its sidecar, rebuilding the named family and rejecting
/// any disagreement in edges or labels. Custom graphs need no sidecar.
pub fn load_instance(graph_path: &Path, labels_path: Option<&Path>) -> Result<Graph> {
    let source = graph_path.display().to_string();
    let parsed = parse_dimacs(&read(graph_path)?, &source)?;
    let built = parsed
        .family
        .build()
        .map_err(|e| LabError::schema(&source, 0, format!("family line: {e}")))?;
    let Some(g) = built else {
        return Ok(Graph::from_edges(parsed.order, &parsed.edges)?);
    };
    if g.vertex_count() != parsed.order || g.edges() != parsed.edges {
        return Err(LabError::schema(
            &source,
            0,
            format!("edges do not match {}", parsed.family),
        ));
    }
    let default_sidecar = sidecar_path(graph_path);
    let labels_path = labels_path.unwrap_or(&default_sidecar);
    let label_source = labels_path.display().to_string();
    let ground = parsed.family.ground_size().unwrap_or(0);
    let labels = parse_labels(&read(labels_path)?, &label_source, ground)?;
    if labels.len() != g.vertex_count() {
        return Err(LabError::schema(
            &label_source,
            0,
            format!("{} labels for {} vertices", labels.len(), g.vertex_count()),
        ));
    }
    if let Some(i) = (0..labels.len()).find(|&i| labels[i] != g.labels()[i]) {
        return Err(LabError::schema(
            &label_source,
            i + 1,
            format!("label {} does not match {}", labels[i], g.labels()[i]),
        ));
    }
    Ok(g)
}

/// Writes `<prefix>.dimacs` and `<prefix>.labels`, returning both paths.
pub fn save_instance(g: &Graph, prefix: &Path) -> Result<(PathBuf, PathBuf)> {
    let graph_path = prefix.with_extension("dimacs");
    let labels_path = sidecar_path(&graph_path);
    let create = |p: &Path| {
        std::fs::File::create(p)
            .map(io::BufWriter::new)
            .map_err(|e| LabError::io(p.display(), e))
    };
    write_dimacs(g, create(&graph_path)?).map_err(|e| LabError::io(graph_path.display(), e))?;
    write_labels(g, create(&labels_path)?).map_err(|e| LabError::io(labels_path.display(), e))?;
    Ok((graph_path, labels_path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_text() {
        let g = build_kneser(5, 2).unwrap();
        let mut out = Vec::new();
        write_dimacs(&g, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("c family kneser 5 2"));
        assert_eq!(lines.next(), Some("p edge 10 15"));
        assert_eq!(lines.count(), 15);

        let mut out = Vec::new();
        write_labels(&g, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().next(), Some("1\t{1,2}\t{}"));
    }

    #[test]
    fn parse_round_trip() {
        let g = build_local_kneser(5, 4, 2).unwrap();
        let mut out = Vec::new();
        write_dimacs(&g, &mut out).unwrap();
        let parsed = parse_dimacs(std::str::from_utf8(&out).unwrap(), "mem").unwrap();
        assert_eq!(parsed.family, FamilySpec::LocalKneser { n: 5, r: 4, t: 2 });
        assert_eq!(parsed.order, 30);
        assert_eq!(parsed.edges, g.edges());

        let mut out = Vec::new();
        write_labels(&g, &mut out).unwrap();
        let labels = parse_labels(std::str::from_utf8(&out).unwrap(), "mem", 5).unwrap();
        assert_eq!(labels, g.labels());
    }

    #[test]
    fn malformed_dimacs() {
        for bad in [
            "e 1 2\np edge 2 1\n",
            "p edge 2 1\ne 1 3\n",
            "p edge 2 1\ne 1 1\n",
            "p edge 2 2\ne 1 2\n",
            "p edge 2 2\ne 1 2\ne 2 1\n",
            "p edge x 1\n",
            "q 1 2\n",
            "c family kneser 5\np edge 1 0\n",
            "",
        ] {
            assert!(
                matches!(parse_dimacs(bad, "mem"), Err(LabError::Schema { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn malformed_labels() {
        for bad in [
            "1\t{1}\n",
            "2\t{1}\t{2}\n",
            "1\t{2,1}\t{}\n",
            "1\t{1}\t{1}\n",
            "1\t1\t{2}\n",
            "1\t{9}\t{}\n",
            "1\t{1,,2}\t{}\n",
        ] {
            assert!(
                matches!(parse_labels(bad, "mem", 5), Err(LabError::Schema { .. })),
                "{bad:?}"
            );
        }
    }
}
