//! Catalog of small knots with listed maximal Thurston-Bennequin numbers,
//! and the machinery to recompute every two-bridge entry from its fraction
//! and compare.
//!
//! Comparison is chirality-blind: the computed (tb, tb of mirror) pair must
//! equal the listed pair as an unordered pair, since a fraction determines
//! its knot only up to mirror image depending on tabulation conventions.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::fraction::Fraction;
use crate::legendrian::max_tb;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read catalog {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("catalog line {line}: {msg}")]
    Line { line: usize, msg: String },
}

#[derive(Clone, Debug)]
pub struct KnotRecord {
    pub name: String,
    pub crossing_number: u32,
    pub fraction: Option<Fraction>,
    pub tb_listed: i64,
    pub tb_mirror_listed: i64,
    pub amphicheiral: bool,
    pub notes: String,
}

impl KnotRecord {
    pub fn is_two_bridge(&self) -> bool {
        self.fraction.is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Match,
    Mismatch,
    ReferenceOnly,
    Error,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Match => "MATCH",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::ReferenceOnly => "REFERENCE_ONLY",
            RowStatus::Error => "ERROR",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RowReport {
    pub record: KnotRecord,
    /// Computed (tb, tb of mirror), present for two-bridge rows that
    /// evaluated cleanly.
    pub computed: Option<(i64, i64)>,
    pub status: RowStatus,
    /// Failure description for `Error` rows.
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct TableReport {
    pub rows: Vec<RowReport>,
    pub matches: usize,
    pub mismatches: usize,
    pub reference_only: usize,
    pub errors: usize,
}

pub fn load_catalog(path: &Path) -> Result<Vec<KnotRecord>, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_catalog(&text)
}

/// Parses the tab-separated catalog: 8 fields per row (name, crossing
/// number, fraction or empty, two-bridge flag, tb, tb of mirror,
/// amphicheiral flag, notes), `#` lines and blank lines ignored.
pub fn parse_catalog(text: &str) -> Result<Vec<KnotRecord>, CatalogError> {
    let mut records: Vec<KnotRecord> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let err = |msg: String| CatalogError::Line { line: line_no, msg };
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        // The notes field may be empty, and editors strip the trailing tab.
        if fields.len() != 8 && fields.len() != 7 {
            return Err(err(format!("expected 8 tab-separated fields, found {}", fields.len())));
        }
        let name = fields[0].trim().to_string();
        if name.is_empty() {
            return Err(err("empty knot name".into()));
        }
        if records.iter().any(|r| r.name == name) {
            return Err(err(format!("duplicate knot name {name}")));
        }
        let crossing_number: u32 = fields[1]
            .trim()
            .parse()
            .map_err(|_| err(format!("bad crossing number {:?}", fields[1])))?;
        let fraction = match fields[2].trim() {
            "" => None,
            s => Some(
                s.parse::<Fraction>()
                    .map_err(|e| err(format!("bad fraction {s:?}: {e}")))?,
            ),
        };
        let flag = |idx: usize, what: &str| -> Result<bool, CatalogError> {
            match fields[idx].trim() {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(err(format!("{what} must be 0 or 1, found {other:?}"))),
            }
        };
        let two_bridge = flag(3, "two-bridge flag")?;
        let int = |idx: usize, what: &str| -> Result<i64, CatalogError> {
            fields[idx]
                .trim()
                .parse()
                .map_err(|_| err(format!("bad {what} {:?}", fields[idx])))
        };
        let tb_listed = int(4, "tb")?;
        let tb_mirror_listed = int(5, "mirror tb")?;
        let amphicheiral = flag(6, "amphicheiral flag")?;
        if two_bridge != fraction.is_some() {
            return Err(err(
                "two-bridge flag and presence of a fraction must agree".into(),
            ));
        }
        if let Some(f) = &fraction {
            // This is a knot table; two-component links have even numerator.
            if f.p() % 2 == 0 {
                return Err(err(format!("fraction {f} is a link, not a knot")));
            }
        }
        if amphicheiral && tb_listed != tb_mirror_listed {
            return Err(err(
                "amphicheiral knots must list equal tb values for both mirrors".into(),
            ));
        }
        records.push(KnotRecord {
            name,
            crossing_number,
            fraction,
            tb_listed,
            tb_mirror_listed,
            amphicheiral,
            notes: fields.get(7).unwrap_or(&"").trim().to_string(),
        });
    }
    Ok(records)
}

/// Recomputes tb for every two-bridge record and compares with the listed
/// pair, unordered. Individual failures are reported per row; this never
/// aborts the run.
pub fn reproduce_table(records: &[KnotRecord]) -> TableReport {
    let mut report = TableReport::default();
    for record in records {
        let (computed, status, detail) = match &record.fraction {
            None => (None, RowStatus::ReferenceOnly, String::new()),
            Some(f) => match max_tb(f) {
                Err(e) => (None, RowStatus::Error, e.to_string()),
                Ok(r) => {
                    let mut got = [r.tb, r.tb_mirror];
                    let mut want = [record.tb_listed, record.tb_mirror_listed];
                    got.sort_unstable();
                    want.sort_unstable();
                    let status = if got == want {
                        RowStatus::Match
                    } else {
                        RowStatus::Mismatch
                    };
                    (Some((r.tb, r.tb_mirror)), status, String::new())
                }
            },
        };
        match status {
            RowStatus::Match => report.matches += 1,
            RowStatus::Mismatch => report.mismatches += 1,
            RowStatus::ReferenceOnly => report.reference_only += 1,
            RowStatus::Error => report.errors += 1,
        }
        report.rows.push(RowReport {
            record: record.clone(),
            computed,
            status,
            detail,
        });
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Markdown,
    Csv,
}

pub fn emit_table(report: &TableReport, format: TableFormat) -> String {
    match format {
        TableFormat::Text => emit_text(report),
        TableFormat::Markdown => emit_markdown(report),
        TableFormat::Csv => emit_csv(report),
    }
}

fn computed_cells(row: &RowReport) -> (String, String) {
    match row.computed {
        Some((tb, mir)) => (tb.to_string(), mir.to_string()),
        None => ("-".into(), "-".into()),
    }
}

fn emit_text(report: &TableReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<6} {:>8} {:>6} {:>8} {:>7} {:>8}  {}",
        "name", "fraction", "tb", "mirror", "listed", "l.mirror", "status"
    );
    for row in &report.rows {
        let fraction = row
            .record
            .fraction
            .map(|f| f.to_string())
            .unwrap_or_else(|| "-".into());
        let (tb, mir) = computed_cells(row);
        let _ = writeln!(
            out,
            "{:<6} {:>8} {:>6} {:>8} {:>7} {:>8}  {}{}",
            row.record.name,
            fraction,
            tb,
            mir,
            row.record.tb_listed,
            row.record.tb_mirror_listed,
            row.status.as_str(),
            if row.detail.is_empty() {
                String::new()
            } else {
                format!(" ({})", row.detail)
            }
        );
    }
    let _ = writeln!(
        out,
        "{} match, {} mismatch, {} reference-only, {} error",
        report.matches, report.mismatches, report.reference_only, report.errors
    );
    out
}

fn emit_markdown(report: &TableReport) -> String {
    let mut out = String::new();
    out.push_str("| name | fraction | tb | mirror | listed | listed mirror | status |\n");
    out.push_str("|---|---|---|---|---|---|---|\n");
    for row in &report.rows {
        let fraction = row
            .record
            .fraction
            .map(|f| f.to_string())
            .unwrap_or_else(|| "-".into());
        let (tb, mir) = computed_cells(row);
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            row.record.name,
            fraction,
            tb,
            mir,
            row.record.tb_listed,
            row.record.tb_mirror_listed,
            row.status.as_str()
        );
    }
    let _ = writeln!(
        out,
        "\n{} match, {} mismatch, {} reference-only, {} error",
        report.matches, report.mismatches, report.reference_only, report.errors
    );
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn emit_csv(report: &TableReport) -> String {
    let mut out = String::new();
    out.push_str(
        "name,fraction,computed_tb,computed_tb_mirror,listed_tb,listed_tb_mirror,status,notes\r\n",
    );
    for row in &report.rows {
        let fraction = row
            .record
            .fraction
            .map(|f| f.to_string())
            .unwrap_or_default();
        let (tb, mir) = match row.computed {
            Some((tb, mir)) => (tb.to_string(), mir.to_string()),
            None => (String::new(), String::new()),
        };
        let _ = write!(
            out,
            "{},{},{},{},{},{},{},{}\r\n",
            csv_field(&row.record.name),
            fraction,
            tb,
            mir,
            row.record.tb_listed,
            row.record.tb_mirror_listed,
            row.status.as_str(),
            csv_field(&row.record.notes)
        );
    }
    out
}
