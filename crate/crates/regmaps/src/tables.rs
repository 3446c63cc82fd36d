//! Count tables over genus and vertex ranges: generation, rendering to
//! CSV, JSON and Markdown, and verification against the embedded
//! reference data in `fixtures/`.
//!
//! Multi-face tables are flat `g,v,count` listings ordered by vertex count
//! with genus varying fastest; vertex counts with an odd number of darts
//! are omitted entirely.  One-face tables are `g,count` listings starting
//! at genus 1.  All rendering is byte-deterministic.

use serde::Serialize;

use crate::exactnum::ExactInt;
use crate::multiface::{rooted_regular, Memo};
use crate::multiface_unrooted::unrooted_regular;
use crate::{exec, oneface, oneface_unrooted, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    OneFaceRooted,
    OneFaceUnrooted,
    MultiRooted,
    MultiUnrooted,
}

impl TableKind {
    pub const ALL: [TableKind; 4] = [
        TableKind::OneFaceRooted,
        TableKind::OneFaceUnrooted,
        TableKind::MultiRooted,
        TableKind::MultiUnrooted,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TableKind::OneFaceRooted => "oneface-rooted",
            TableKind::OneFaceUnrooted => "oneface-unrooted",
            TableKind::MultiRooted => "multi-rooted",
            TableKind::MultiUnrooted => "multi-unrooted",
        }
    }

    pub fn is_one_face(self) -> bool {
        matches!(self, TableKind::OneFaceRooted | TableKind::OneFaceUnrooted)
    }
}

#[derive(Debug, Clone)]
pub struct TableSpec {
    pub kind: TableKind,
    pub d: u32,
    pub genus_max: u32,
    pub vertices_max: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub g: u32,
    pub v: Option<u64>,
    pub count: ExactInt,
}

#[derive(Debug, Clone)]
pub struct Table {
    pub kind: TableKind,
    pub d: u32,
    pub rows: Vec<TableRow>,
}

/// One table entry computed through the production pipeline.
pub fn compute_cell(
    memo: &Memo,
    kind: TableKind,
    d: u32,
    g: u32,
    v: Option<u64>,
) -> Result<ExactInt> {
    let need_v = || {
        v.ok_or_else(|| Error::InvalidInput("multi-face cells need a vertex count".into()))
    };
    match kind {
        TableKind::OneFaceRooted => oneface::rooted(d, g),
        TableKind::OneFaceUnrooted => oneface_unrooted::unrooted(d, g),
        TableKind::MultiRooted => Ok(rooted_regular(memo, d, g, need_v()?)),
        TableKind::MultiUnrooted => unrooted_regular(memo, d, g, need_v()?),
    }
}

/// Computes all cells of a table, in parallel when enabled.
pub fn generate(memo: &Memo, spec: &TableSpec) -> Result<Table> {
    let mut cells: Vec<(u32, Option<u64>)> = Vec::new();
    if spec.kind.is_one_face() {
        for g in 1..=spec.genus_max {
            cells.push((g, None));
        }
    } else {
        let vmax = spec.vertices_max.ok_or_else(|| {
            Error::InvalidInput("multi-face tables need --vertices-max".into())
        })?;
        for v in 1..=vmax {
            if (u64::from(spec.d) * v) % 2 != 0 {
                continue;
            }
            for g in 0..=spec.genus_max {
                cells.push((g, Some(v)));
            }
        }
    }
    let (kind, d) = (spec.kind, spec.d);
    let computed = exec::map_collect(cells, |(g, v)| -> Result<TableRow> {
        Ok(TableRow {
            g,
            v,
            count: compute_cell(memo, kind, d, g, v)?,
        })
    });
    let rows = computed.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(Table { kind, d, rows })
}

#[derive(Serialize)]
struct JsonRow {
    g: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<u64>,
    count: String,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    kind: &'a str,
    d: u32,
    rows: Vec<JsonRow>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if self.kind.is_one_face() {
            out.push_str("g,count\n");
            for row in &self.rows {
                out.push_str(&format!("{},{}\n", row.g, row.count));
            }
        } else {
            out.push_str("g,v,count\n");
            for row in &self.rows {
                out.push_str(&format!("{},{},{}\n", row.g, row.v.unwrap_or(0), row.count));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let table = JsonTable {
            kind: self.kind.label(),
            d: self.d,
            rows: self
                .rows
                .iter()
                .map(|r| JsonRow {
                    g: r.g,
                    v: r.v,
                    count: r.count.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&table).expect("table serialization cannot fail")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        if self.kind.is_one_face() {
            out.push_str("| g | count |\n|---:|---:|\n");
            for row in &self.rows {
                out.push_str(&format!("| {} | {} |\n", row.g, row.count));
            }
        } else {
            out.push_str("| g | v | count |\n|---:|---:|---:|\n");
            for row in &self.rows {
                out.push_str(&format!(
                    "| {} | {} | {} |\n",
                    row.g,
                    row.v.unwrap_or(0),
                    row.count
                ));
            }
        }
        out
    }
}

/// One reference value from the embedded fixture data.
#[derive(Debug, Clone)]
pub struct ExpectedCell {
    pub kind: TableKind,
    pub d: u32,
    pub g: u32,
    pub v: Option<u64>,
    pub count: ExactInt,
}

/// A computed value that disagrees with its reference value.
#[derive(Debug, Clone)]
pub struct Mismatch {
    pub cell: ExpectedCell,
    pub got: ExactInt,
}

const ONE_FACE_FIXTURES: [(TableKind, &str); 2] = [
    (TableKind::OneFaceRooted, include_str!("../fixtures/oneface_rooted.csv")),
    (TableKind::OneFaceUnrooted, include_str!("../fixtures/oneface_unrooted.csv")),
];

const MULTI_FIXTURES: [(TableKind, u32, &str); 8] = [
    (TableKind::MultiRooted, 3, include_str!("../fixtures/multi_rooted_d3.csv")),
    (TableKind::MultiRooted, 4, include_str!("../fixtures/multi_rooted_d4.csv")),
    (TableKind::MultiRooted, 5, include_str!("../fixtures/multi_rooted_d5.csv")),
    (TableKind::MultiRooted, 6, include_str!("../fixtures/multi_rooted_d6.csv")),
    (TableKind::MultiUnrooted, 3, include_str!("../fixtures/multi_unrooted_d3.csv")),
    (TableKind::MultiUnrooted, 4, include_str!("../fixtures/multi_unrooted_d4.csv")),
    (TableKind::MultiUnrooted, 5, include_str!("../fixtures/multi_unrooted_d5.csv")),
    (TableKind::MultiUnrooted, 6, include_str!("../fixtures/multi_unrooted_d6.csv")),
];

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#') && !l.ends_with("count"))
}

fn field<T: std::str::FromStr>(s: &str, line: &str) -> T {
    s.parse()
        .unwrap_or_else(|_| panic!("malformed fixture line {line:?}"))
}

fn parse_cells(kind: TableKind, fixed_d: Option<u32>, text: &str) -> Vec<ExpectedCell> {
    data_lines(text)
        .map(|line| match (fixed_d, &line.split(',').collect::<Vec<_>>()[..]) {
            (None, [d, g, count]) => ExpectedCell {
                kind,
                d: field(d, line),
                g: field(g, line),
                v: None,
                count: field(count, line),
            },
            (Some(d), [g, v, count]) => ExpectedCell {
                kind,
                d,
                g: field(g, line),
                v: Some(field(v, line)),
                count: field(count, line),
            },
            _ => panic!("malformed fixture line {line:?}"),
        })
        .collect()
}

/// All reference cells shipped with the crate.
pub fn expected_cells() -> Vec<ExpectedCell> {
    let mut out = Vec::new();
    for (kind, text) in ONE_FACE_FIXTURES {
        out.extend(parse_cells(kind, None, text));
    }
    for (kind, d, text) in MULTI_FIXTURES {
        out.extend(parse_cells(kind, Some(d), text));
    }
    out
}

/// Recomputes every reference cell and returns the disagreements (an empty
/// list means full reproduction).
pub fn verify_all(memo: &Memo) -> Result<Vec<Mismatch>> {
    verify_cells(memo, expected_cells())
}

/// Recomputes the given reference cells, in parallel when enabled.
pub fn verify_cells(memo: &Memo, cells: Vec<ExpectedCell>) -> Result<Vec<Mismatch>> {
    let checked = exec::map_collect(cells, |cell| -> Result<Option<Mismatch>> {
        let got = compute_cell(memo, cell.kind, cell.d, cell.g, cell.v)?;
        Ok((got != cell.count).then_some(Mismatch { cell, got }))
    });
    let mut mismatches = Vec::new();
    for item in checked {
        if let Some(m) = item? {
            mismatches.push(m);
        }
    }
    Ok(mismatches)
}
