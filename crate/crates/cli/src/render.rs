//! DOT and ASCII renderings of a document. Both are deterministic: vertex
//! order is the acceptance order, edges are listed with i < j ascending.

use std::fmt::Write;

use crate::document::RunDocument;

pub fn dot(doc: &RunDocument) -> String {
    let mut out = String::new();
    out.push_str("graph coxeter {\n");
    out.push_str("  node [shape=circle];\n");
    for i in 0..doc.diagram.size {
        let _ = writeln!(out, "  v{i} [label=\"{i}\"];");
    }
    for e in &doc.diagram.edges {
        let attrs = match e.label.as_str() {
            "heavy" => "style=bold".to_string(),
            "dashed" => "style=dashed".to_string(),
            m => format!("label=\"{m}\""),
        };
        let _ = writeln!(out, "  v{} -- v{} [{}];", e.i, e.j, attrs);
    }
    out.push_str("}\n");
    out
}

pub fn ascii(doc: &RunDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "form: -{}*x0^2 + x1^2 + ... + x{}^2",
        doc.form.phi.0, doc.form.n
    );
    if let Some(roots) = &doc.roots {
        let _ = writeln!(out, "roots ({}, first {} initial):", roots.vectors.len(), roots.initial);
        for (i, v) in roots.vectors.iter().enumerate() {
            let coords: Vec<String> = v.iter().map(|x| x.0.to_string()).collect();
            let _ = writeln!(
                out,
                "  {:>3}: ({})  norm {}",
                i,
                coords.join(", "),
                roots.norms[i].0
            );
        }
    }
    let m = doc.diagram.size;
    let _ = writeln!(out, "diagram ({m} vertices; . none, H heavy, D dashed):");
    // Adjacency table.
    let mut table = vec![vec!['.'; m]; m];
    for e in &doc.diagram.edges {
        let c = match e.label.as_str() {
            "heavy" => 'H',
            "dashed" => 'D',
            s => s.chars().next().unwrap_or('?'),
        };
        table[e.i][e.j] = c;
        table[e.j][e.i] = c;
    }
    let _ = write!(out, "     ");
    for j in 0..m {
        let _ = write!(out, "{:>3}", j);
    }
    out.push('\n');
    for (i, row) in table.iter().enumerate() {
        let _ = write!(out, "  {:>3}", i);
        for &c in row {
            let _ = write!(out, "  {c}");
        }
        out.push('\n');
    }
    if let Some(v) = &doc.volume {
        let _ = writeln!(
            out,
            "volume: finite={} compact={} cusps={}",
            v.finite, v.compact, v.cusps
        );
    }
    if let Some(s) = &doc.symmetry {
        let _ = writeln!(out, "symmetry: order {} ({})", s.order, s.name);
    }
    if let Some(c) = &doc.certificate {
        let _ = writeln!(
            out,
            "not reflective: parabolic rank {} cannot reach {} (case {})",
            c.rank, c.required_rank, c.case
        );
    }
    if let Some(verdict) = &doc.meta.verdict {
        let _ = writeln!(out, "verdict: {verdict}");
    }
    out
}
