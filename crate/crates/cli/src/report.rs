use std::io::Write;

use anyhow::Result;
use dieudonne::{invariants, isogeny_type, manin_check, LambdaLattice, Lattice};
use serde::Serialize;

pub const CSV_COLUMNS: [&str; 13] = [
    "p",
    "nu",
    "n",
    "q",
    "height",
    "dimension",
    "slope",
    "components",
    "dual_partner",
    "duality_kind",
    "manin_symmetric",
    "supersingular",
    "algebraicizable_possible",
];

const Q0_NOTE: &str = "Serre duality breaks down for q = 0";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Partner {
    Degree(usize),
    NotApplicable(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub p: u64,
    pub nu: u32,
    pub n: usize,
    pub q: usize,
    pub height: usize,
    pub dimension: usize,
    pub slope: String,
    pub components: Vec<[usize; 3]>,
    pub dual_partner: Partner,
    pub duality_kind: &'static str,
    pub manin_symmetric: bool,
    pub supersingular: bool,
    pub algebraicizable_possible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

pub fn row(p: u64, nu: u32, n: usize, q: usize) -> Result<ReportRow> {
    let lattice = Lattice::from_exterior(&LambdaLattice::build(p, n, q)?);
    let inv = invariants(&lattice);
    let iso = isogeny_type(&lattice)?;
    let verdict = manin_check(&iso);
    let slope = num_rational::Ratio::new((n - q) as i64, n as i64);
    let (dual_partner, duality_kind, note) = if q == 0 {
        (Partner::NotApplicable("n/a"), "n/a", Some(Q0_NOTE))
    } else {
        (
            Partner::Degree(n - q),
            if n % 2 == 1 { "plain" } else { "twisted" },
            None,
        )
    };
    Ok(ReportRow {
        p,
        nu,
        n,
        q,
        height: inv.height,
        dimension: inv.dimension,
        slope: format!("{}/{}", slope.numer(), slope.denom()),
        components: iso
            .components
            .iter()
            .map(|c| [c.n0, c.q0, c.multiplicity])
            .collect(),
        dual_partner,
        duality_kind,
        manin_symmetric: verdict.symmetric,
        supersingular: verdict.supersingular,
        algebraicizable_possible: verdict.algebraicizable_possible,
        note,
    })
}

impl ReportRow {
    fn components_text(&self) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|[n0, q0, m]| format!("R_{{{n0},{q0}}}^{m}"))
            .collect();
        parts.join(" + ")
    }

    fn partner_text(&self) -> String {
        match &self.dual_partner {
            Partner::Degree(d) => d.to_string(),
            Partner::NotApplicable(s) => s.to_string(),
        }
    }

    fn cells(&self) -> [String; 13] {
        [
            self.p.to_string(),
            self.nu.to_string(),
            self.n.to_string(),
            self.q.to_string(),
            self.height.to_string(),
            self.dimension.to_string(),
            self.slope.clone(),
            self.components_text(),
            self.partner_text(),
            self.duality_kind.to_string(),
            self.manin_symmetric.to_string(),
            self.supersingular.to_string(),
            self.algebraicizable_possible.to_string(),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn render(rows: &[ReportRow], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_COLUMNS)?;
            for r in rows {
                w.write_record(r.cells())?;
            }
            w.flush()?;
        }
        Format::Text => {
            let cells: Vec<[String; 13]> = rows.iter().map(ReportRow::cells).collect();
            let widths: Vec<usize> = (0..CSV_COLUMNS.len())
                .map(|c| {
                    cells
                        .iter()
                        .map(|r| r[c].len())
                        .chain([CSV_COLUMNS[c].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |vals: Vec<&str>| {
                let padded: Vec<String> = vals
                    .iter()
                    .zip(&widths)
                    .map(|(v, w)| format!("{v:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", line(CSV_COLUMNS.to_vec()))?;
            for r in &cells {
                writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
            }
            if rows.iter().any(|r| r.note.is_some()) {
                writeln!(out, "note: {Q0_NOTE}; duality fields of q = 0 rows are n/a")?;
            }
        }
    }
    Ok(())
}
