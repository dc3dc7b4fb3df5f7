//! CSV exports of colorings and homomorphisms.

use std::io::Write;

use lklab_core::coloring::Coloring;
use lklab_core::homkit::HomomorphismMap;
use lklab_core::Graph;

use crate::{LabError, Result};

fn label_fields(g: &Graph, v: usize) -> (String, String) {
    g.label(v)
        .map(|l| (l.a.to_string(), l.b.to_string()))
        .unwrap_or_default()
}

/// Columns `vertex_index,A,B,color`; indices 1-based as in the DIMACS export.
pub fn write_coloring_csv<W: Write>(g: &Graph, c: &Coloring, w: W) -> Result<()> {
    if c.len() != g.vertex_count() {
        return Err(LabError::Usage(format!(
            "coloring has {} entries for {} vertices",
            c.len(),
            g.vertex_count()
        )));
    }
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["vertex_index", "A", "B", "color"])?;
    for (v, color) in c.colors().iter().enumerate() {
        let (a, b) = label_fields(g, v);
        out.write_record([(v + 1).to_string(), a, b, color.to_string()])?;
    }
    out.flush().map_err(|e| LabError::io("csv output", e))?;
    Ok(())
}

/// Columns `domain_index,domain_label,codomain_index,codomain_label`.
pub fn write_map_csv<W: Write>(h: &HomomorphismMap, w: W) -> Result<()> {
    let images = h.images()?;
    let mut out = csv::Writer::from_writer(w);
    out.write_record([
        "domain_index",
        "domain_label",
        "codomain_index",
        "codomain_label",
    ])?;
    for (v, &x) in images.iter().enumerate() {
        let show = |g: &Graph, i: usize| g.label(i).map(|l| l.to_string()).unwrap_or_default();
        out.write_record([
            (v + 1).to_string(),
            show(h.domain(), v),
            (x + 1).to_string(),
            show(h.codomain(), x),
        ])?;
    }
    out.flush().map_err(|e| LabError::io("csv output", e))?;
    Ok(())
}
