use anyhow::Context;
use bellbasis::basisgen::{equivalence_up_to_sign_and_relabeling, generate_basis, BasisDocument, FlatBasis};
use bellbasis::correlations::basis_report;
use bellbasis::qcore::bitstring;
use bellbasis::{BasisSpec, ControlledFamily, CorrelationReport, EntangledBasis, PhaseId};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{BasisChoice, RunConfig};
use crate::format::{csv_string, ket, markdown_table, sig6, sig6_or_na, term_string, OutputFormat};
use crate::Outcome;

/// Family column order of the correlation table.
pub const TABLE_FAMILIES: [ControlledFamily; 3] = [ControlledFamily::O1, ControlledFamily::AQ, ControlledFamily::A1];

fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

pub fn build_basis(cfg: &RunConfig) -> anyhow::Result<EntangledBasis> {
    let basis = match cfg.basis {
        BasisChoice::Generated => {
            let spec = cfg.spec()?.context("generate needs a basis spec")?;
            generate_basis(&spec)?
        }
        BasisChoice::Bell => EntangledBasis::bell(cfg.n.unwrap_or_default())?,
        BasisChoice::Graph => EntangledBasis::graph(cfg.n.unwrap_or_default())?,
        BasisChoice::Braid => EntangledBasis::braid(cfg.n.unwrap_or_default())?,
    };
    Ok(basis)
}

fn basis_title(basis: &EntangledBasis) -> String {
    use bellbasis::basisgen::BasisKind;
    match basis.kind {
        BasisKind::Generated(spec) => spec.to_string(),
        BasisKind::Bell { n } => format!("({n},Bell)"),
        BasisKind::Graph { n } => format!("({n},Graph)"),
        BasisKind::Braid { n } => format!("({n},Braid)"),
    }
}

pub fn cmd_generate(cfg: &RunConfig) -> anyhow::Result<Outcome> {
    let basis = build_basis(cfg)?;
    let n = basis.n_qubits();
    let rows: Vec<Vec<String>> = basis
        .states
        .iter()
        .enumerate()
        .map(|(i, s)| vec![ket(i, n), term_string(s, cfg.normalized)])
        .collect();
    let output = match cfg.format {
        OutputFormat::Json if cfg.flat => json(&FlatBasis::from_basis(&basis))?,
        OutputFormat::Json => json(&BasisDocument::from_basis(&basis)?)?,
        OutputFormat::Csv => csv_string(&["label", "state"], &rows)?,
        OutputFormat::Markdown => {
            let scale = if cfg.normalized { "normalized" } else { "unnormalized" };
            format!(
                "{} basis {}, {scale}\n\n{}",
                basis.states.len(),
                basis_title(&basis),
                markdown_table(&["→", "Bell-like state"], &rows)
            )
        }
    };
    Ok(Outcome::success(output))
}

/// One `(n, m, family, phase)` combination; `report` is `None` when the
/// family does not apply (all-equal control with a single control qubit).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureRow {
    pub n: usize,
    pub m: usize,
    pub phase: PhaseId,
    pub family: ControlledFamily,
    pub report: Option<CorrelationReport>,
}

/// Rows of a sweep in table order: n, m, phase (P0..Pm, Pz), then family.
pub fn sweep_keys(min_n: usize, max_n: usize) -> Vec<(usize, usize, PhaseId, ControlledFamily)> {
    let mut keys = Vec::new();
    for n in min_n..=max_n {
        for m in 1..n {
            for phase in PhaseId::all_for(m) {
                for family in TABLE_FAMILIES {
                    keys.push((n, m, phase, family));
                }
            }
        }
    }
    keys
}

pub fn measure_rows(cfg: &RunConfig) -> anyhow::Result<Vec<MeasureRow>> {
    let keys = match cfg.spec()? {
        Some(s) => vec![(s.n, s.m, s.phase, s.family)],
        None => sweep_keys(cfg.sweep_min_n, cfg.sweep_max_n),
    };
    keys.par_iter()
        .map(|&(n, m, phase, family)| {
            let report = match BasisSpec::new(n, m, family, phase) {
                Ok(spec) => Some(
                    basis_report(&spec, &cfg.measure, !cfg.skip_optimized)
                        .with_context(|| format!("measuring {spec}"))?,
                ),
                Err(_) => None,
            };
            Ok(MeasureRow {
                n,
                m,
                phase,
                family,
                report,
            })
        })
        .collect()
}

pub const MEASURE_CSV_HEADER: [&str; 13] = [
    "n",
    "m",
    "phase",
    "family",
    "ggm",
    "concurrence",
    "avg_entropy",
    "eof",
    "log_negativity",
    "delta_c",
    "delta_d",
    "delta_deficit",
    "warnings",
];

fn csv_cells(row: &MeasureRow) -> Vec<String> {
    let mut cells = vec![
        row.n.to_string(),
        row.m.to_string(),
        row.phase.to_string(),
        row.family.to_string(),
    ];
    match &row.report {
        Some(r) => {
            cells.extend([r.ggm, r.concurrence, r.avg_entropy, r.eof, r.log_negativity].map(sig6));
            cells.extend([r.delta_concurrence, r.delta_discord, r.delta_deficit].map(sig6_or_na));
            cells.push(r.warnings.join("; "));
        }
        None => {
            cells.extend(std::iter::repeat_n("NA".to_string(), 8));
            cells.push(String::new());
        }
    }
    cells
}

/// Correlation-table layout: one line per `(n, m, Pp)` with a column per
/// family for ξ, C and ⟨S⟩, then the O1 monogamy scores.
fn measure_markdown(rows: &[MeasureRow]) -> String {
    let header = [
        "(n,m,Pp)",
        "ξ CO1",
        "ξ CAQ",
        "ξ CA1",
        "C CO1",
        "C CAQ",
        "C CA1",
        "⟨S⟩ CO1",
        "⟨S⟩ CAQ",
        "⟨S⟩ CA1",
        "δ_C CO1",
        "δ_D CO1",
        "δ_Δ CO1",
    ];
    let mut lines = Vec::new();
    let mut warnings = Vec::new();
    for group in rows.chunk_by(|a, b| (a.n, a.m, a.phase) == (b.n, b.m, b.phase)) {
        let first = &group[0];
        let by_family = |f: ControlledFamily| group.iter().find(|r| r.family == f).and_then(|r| r.report.as_ref());
        let cell = |f: ControlledFamily, pick: fn(&CorrelationReport) -> f64| match group.iter().find(|r| r.family == f)
        {
            None => String::new(),
            Some(row) => sig6_or_na(row.report.as_ref().map(pick)),
        };
        let mut line = vec![format!("({},{},{})", first.n, first.m, first.phase)];
        let picks: [fn(&CorrelationReport) -> f64; 3] = [|r| r.ggm, |r| r.concurrence, |r| r.avg_entropy];
        for pick in picks {
            line.extend(TABLE_FAMILIES.map(|f| cell(f, pick)));
        }
        let o1 = by_family(ControlledFamily::O1);
        line.push(o1.map_or(String::new(), |r| sig6_or_na(r.delta_concurrence)));
        line.push(o1.map_or(String::new(), |r| sig6_or_na(r.delta_discord)));
        line.push(o1.map_or(String::new(), |r| sig6_or_na(r.delta_deficit)));
        lines.push(line);
        for r in group.iter().filter_map(|r| r.report.as_ref()) {
            warnings.extend(r.warnings.iter().map(|w| format!("{}: {w}", r.spec)));
        }
    }
    let mut out = markdown_table(&header, &lines);
    if !warnings.is_empty() {
        out.push_str("\nWarnings:\n");
        for w in warnings {
            out.push_str(&format!("- {w}\n"));
        }
    }
    out
}

fn single_markdown(row: &MeasureRow) -> String {
    let title = format!("({},{},C{},{})", row.n, row.m, row.family, row.phase);
    let Some(r) = &row.report else {
        return format!("{title}: NA\n");
    };
    let lines: Vec<Vec<String>> = [
        ("ξ (GGM)", Some(r.ggm)),
        ("C (1:rest)", Some(r.concurrence)),
        ("⟨S⟩ subsets", Some(r.avg_entropy)),
        ("⟨S⟩ bipartitions", Some(r.avg_entropy_bipartitions)),
        ("EoF", Some(r.eof)),
        ("E_N", Some(r.log_negativity)),
        ("δ_C", r.delta_concurrence),
        ("δ_D", r.delta_discord),
        ("δ_Δ", r.delta_deficit),
    ]
    .into_iter()
    .map(|(k, v)| vec![k.to_string(), sig6_or_na(v)])
    .collect();
    let mut out = format!("{title}\n\n{}", markdown_table(&["measure", "value"], &lines));
    for w in &r.warnings {
        out.push_str(&format!("\nwarning: {w}\n"));
    }
    out
}

pub fn cmd_measure(cfg: &RunConfig) -> anyhow::Result<Outcome> {
    let rows = measure_rows(cfg)?;
    let output = match cfg.format {
        OutputFormat::Json => json(&rows)?,
        OutputFormat::Csv => csv_string(&MEASURE_CSV_HEADER, &rows.iter().map(csv_cells).collect::<Vec<_>>())?,
        OutputFormat::Markdown if rows.len() == 1 => single_markdown(&rows[0]),
        OutputFormat::Markdown => measure_markdown(&rows),
    };
    Ok(Outcome::success(output))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidPair {
    pub from: String,
    pub to: String,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidComparison {
    pub n: usize,
    pub spec: BasisSpec,
    pub matched: bool,
    pub first_unmatched: Option<String>,
    pub mapping: Vec<BraidPair>,
}

pub fn compare_braid(n: usize) -> anyhow::Result<(BraidComparison, EntangledBasis)> {
    let spec = BasisSpec::new(n, n - 1, ControlledFamily::O1, PhaseId::P(2))?;
    let ours = generate_basis(&spec)?;
    let braid = EntangledBasis::braid(n)?;
    let report = equivalence_up_to_sign_and_relabeling(&ours.states, &braid.states);
    let comparison = BraidComparison {
        n,
        spec,
        matched: report.matched,
        first_unmatched: report.first_unmatched.map(|i| bitstring(i, n)),
        mapping: report
            .mapping
            .iter()
            .map(|m| BraidPair {
                from: bitstring(m.from, n),
                to: bitstring(m.to, n),
                sign: m.sign,
            })
            .collect(),
    };
    Ok((comparison, ours))
}

pub fn cmd_compare_braid(cfg: &RunConfig) -> anyhow::Result<Outcome> {
    let n = cfg.n.context("compare-braid needs --n")?;
    let (cmp, ours) = compare_braid(n)?;
    let signed = |p: &BraidPair| format!("{}|{}⟩", if p.sign < 0 { "-" } else { "" }, p.to);
    let output = match cfg.format {
        OutputFormat::Json => json(&cmp)?,
        OutputFormat::Csv => csv_string(
            &["from", "to", "sign"],
            &cmp.mapping
                .iter()
                .map(|p| vec![p.from.clone(), p.to.clone(), p.sign.to_string()])
                .collect::<Vec<_>>(),
        )?,
        OutputFormat::Markdown => {
            let rows: Vec<Vec<String>> = cmp
                .mapping
                .iter()
                .enumerate()
                .map(|(i, p)| vec![format!("|{}⟩", p.from), signed(p), term_string(&ours.states[i], false)])
                .collect();
            let mut out = markdown_table(
                &[&cmp.spec.to_string(), &format!("({n},Braid)"), "Bell-like state"],
                &rows,
            );
            match &cmp.first_unmatched {
                None => out.push_str("\nmatched: equal up to a sign and a relabeling\n"),
                Some(l) => out.push_str(&format!("\nnot matched: |{l}⟩ of {} has no braid partner\n", cmp.spec)),
            }
            out
        }
    };
    Ok(Outcome {
        output,
        success: cmp.matched,
        diagnostics: String::new(),
    })
}
