//! Text and TSV renderings of the report documents.

use std::fmt::Write;

use crate::report::{
    CharacterTableSection, ChartableDocument, FixedDimRow, GroupInfo, ReportDocument, VerifyDocument,
};

/// Left-aligned columns separated by two spaces.
fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == row.len() {
                line.push_str(cell);
            } else {
                let pad = widths[c] - cell.chars().count();
                write!(line, "{cell}{}  ", " ".repeat(pad)).unwrap();
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn tsv(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join("\t") + "\n").collect()
}

fn table_rows(t: &CharacterTableSection) -> Vec<Vec<String>> {
    let mut rows = vec![
        std::iter::once("class".to_string())
            .chain(t.classes.iter().map(|c| c.representative.clone()))
            .collect::<Vec<_>>(),
        std::iter::once("size".to_string())
            .chain(t.classes.iter().map(|c| c.size.to_string()))
            .collect(),
    ];
    for irrep in &t.irreps {
        rows.push(
            std::iter::once(irrep.label.clone())
                .chain(irrep.values.iter().map(ToString::to_string))
                .collect(),
        );
    }
    rows
}

fn fixed_dim_table(t: &CharacterTableSection, fixed: &[FixedDimRow]) -> Vec<Vec<String>> {
    let mut rows = vec![["subgroup", "generator", "order"]
        .into_iter()
        .map(String::from)
        .chain(t.irreps.iter().map(|i| i.label.clone()))
        .collect::<Vec<_>>()];
    for f in fixed {
        rows.push(
            [f.subgroup.clone(), f.generator.clone(), f.order.to_string()]
                .into_iter()
                .chain(f.dims.iter().map(ToString::to_string))
                .collect(),
        );
    }
    rows
}

fn dimension_rows(doc: &ReportDocument) -> Vec<Vec<String>> {
    let mut rows = vec![vec![
        "irrep".to_string(),
        "degree".into(),
        "dim".into(),
        "closed_form".into(),
    ]];
    for d in &doc.dimensions {
        rows.push(vec![
            d.irrep.clone(),
            d.degree.to_string(),
            d.dim.to_string(),
            d.closed_form.to_string(),
        ]);
    }
    rows
}

pub fn report_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let g = &doc.group;
    writeln!(out, "group: order {}, degree {}, {} classes", g.order, g.degree, g.classes).unwrap();
    let ram: Vec<String> = doc
        .input
        .ramification
        .iter()
        .map(|r| format!("{} x{}", r.inertia_generator, r.count))
        .collect();
    writeln!(
        out,
        "base genus {}; branch points: {}",
        doc.input.base_genus,
        if ram.is_empty() { "none".to_string() } else { ram.join(", ") }
    )
    .unwrap();

    out.push_str("\ncharacter table\n");
    out.push_str(&columns(&table_rows(&doc.character_table)));
    out.push_str("\nfixed-point dimensions dim rho^H\n");
    out.push_str(&columns(&fixed_dim_table(&doc.character_table, &doc.fixed_dims)));

    out.push_str("\ngenera\n");
    let mut rows = vec![vec!["X".to_string(), String::new(), doc.genera.total.to_string()]];
    for q in &doc.genera.quotients {
        rows.push(vec![format!("X/{}", q.subgroup), q.generator.clone(), q.genus.to_string()]);
    }
    out.push_str(&columns(&rows));

    out.push_str("\nPrym dimensions\n");
    out.push_str(&columns(&dimension_rows(doc)));

    if doc.diagnostics.is_empty() {
        out.push_str("\ndiagnostics: none\n");
    } else {
        out.push_str("\ndiagnostics\n");
        for d in &doc.diagnostics {
            writeln!(out, "  {d}").unwrap();
        }
    }
    if let Some(p) = &doc.preset {
        writeln!(out, "\n{} preset for {}, g = {}, deg D = {}", p.kind, p.weyl, p.base_genus, p.deg_d).unwrap();
        write!(out, "Prym dimension at {}: {}, expected {}", p.irrep, p.dim, p.expected).unwrap();
        if let Some(b) = p.base_dim {
            write!(out, ", base dimension {b}").unwrap();
        }
        writeln!(out, "\n{}", p.status).unwrap();
    }
    if let Some(t) = &doc.timing {
        writeln!(out, "\nelapsed {:.3} ms", t.elapsed_ms).unwrap();
    }
    out
}

pub fn report_tsv(doc: &ReportDocument) -> String {
    let mut out = tsv(&dimension_rows(doc));
    if let Some(p) = &doc.preset {
        writeln!(out, "# expected\t{}\t{}", p.expected, p.status).unwrap();
    }
    for d in &doc.diagnostics {
        writeln!(out, "# {d}").unwrap();
    }
    out
}

pub fn chartable_text(doc: &ChartableDocument) -> String {
    let mut out = format!("group: order {}, {} classes\n\n", doc.group.order, doc.group.classes);
    out.push_str(&columns(&table_rows(&doc.character_table)));
    out.push_str("\nfixed-point dimensions dim rho^H\n");
    out.push_str(&columns(&fixed_dim_table(&doc.character_table, &doc.fixed_dims)));
    out
}

pub fn chartable_tsv(doc: &ChartableDocument) -> String {
    tsv(&table_rows(&doc.character_table))
}

fn class_rows(info: &GroupInfo) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["representative".to_string(), "size".into(), "order".into()]];
    for c in &info.classes {
        rows.push(vec![c.representative.clone(), c.size.to_string(), c.order.to_string()]);
    }
    rows
}

pub fn group_info_text(info: &GroupInfo) -> String {
    let mut out = String::new();
    let g = &info.group;
    writeln!(out, "order {}, degree {}, exponent {}", g.order, g.degree, info.exponent).unwrap();
    writeln!(out, "generators: {}", info.generators.join(" ")).unwrap();
    writeln!(out, "rational characters: {}", if info.rational { "yes" } else { "no" }).unwrap();
    if let Some(w) = &info.weyl {
        writeln!(out, "Weyl group {}: rank {}, dim G = {}", w.name, w.rank, w.lie_dim).unwrap();
        writeln!(out, "  {} reflections", w.reflections).unwrap();
        writeln!(out, "  Coxeter element {} of order {}", w.coxeter_element, w.coxeter_number).unwrap();
        writeln!(out, "  reflection representation {}", w.reflection_rep).unwrap();
        let degrees: Vec<String> = w.invariant_degrees.iter().map(ToString::to_string).collect();
        writeln!(out, "  invariant degrees {}", degrees.join(", ")).unwrap();
    }
    writeln!(out, "\n{} conjugacy classes", g.classes).unwrap();
    out.push_str(&columns(&class_rows(info)));
    out
}

pub fn group_info_tsv(info: &GroupInfo) -> String {
    tsv(&class_rows(info))
}

fn check_rows(doc: &VerifyDocument) -> Vec<Vec<String>> {
    doc.report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                if c.passed { "pass" } else { "FAIL" }.to_string(),
                c.detail.clone(),
            ]
        })
        .collect()
}

pub fn verify_text(doc: &VerifyDocument) -> String {
    let mut out = format!(
        "group: order {}, {} classes, seed {}\n\n",
        doc.group.order, doc.group.classes, doc.seed
    );
    out.push_str(&columns(&check_rows(doc)));
    let failed = doc.report.checks.iter().filter(|c| !c.passed).count();
    if failed == 0 {
        out.push_str("\nall checks pass\n");
    } else {
        writeln!(out, "\n{failed} checks failed").unwrap();
    }
    out
}

pub fn verify_tsv(doc: &VerifyDocument) -> String {
    let mut rows = vec![vec!["check".to_string(), "status".into(), "detail".into()]];
    rows.extend(check_rows(doc));
    tsv(&rows)
}
