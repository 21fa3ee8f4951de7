//! Computed measures of `t_n` against their closed forms.

use std::fmt::Display;

use serde::Serialize;

use tm_measures::attractors::{gamma_lower_bound, is_attractor, k_attractor, min_attractor};
use tm_measures::complexity::delta;
use tm_measures::factorizations::{bwt_runs, lyndon_factorize, lz_size, oracle_table_entry};
use tm_measures::words::tm;
use tm_measures::{Rational, Result};

pub const LYNDON_N1_NOTE: &str =
    "[1] floor((3n-2)/2) is 0 at n = 1, but the Lyndon factorization of t_1 = ab has one factor";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    Mismatch,
    /// No closed form to compare against.
    NotApplicable,
    /// Nothing computed.
    ClosedFormOnly,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "MISMATCH",
            Status::NotApplicable => "n/a",
            Status::ClosedFormOnly => "",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Cell<T> {
    pub computed: Option<T>,
    pub closed_form: Option<T>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl<T: PartialEq> Cell<T> {
    fn new(computed: Option<T>, closed_form: Option<T>) -> Self {
        let status = match (&computed, &closed_form) {
            (None, _) => Status::ClosedFormOnly,
            (Some(_), None) => Status::NotApplicable,
            (Some(a), Some(b)) if a == b => Status::Match,
            _ => Status::Mismatch,
        };
        Cell { computed, closed_form, status, note: None }
    }
}

/// Computed bounds on γ(t_n) and how they were obtained.
#[derive(Debug, Clone, Serialize)]
pub struct GammaCell {
    pub lower: Option<u64>,
    pub upper: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<&'static str>,
    pub closed_form: Option<u64>,
    pub status: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub n: u32,
    pub z: Cell<u64>,
    pub r: Cell<u64>,
    pub lyndon: Cell<u64>,
    pub delta: Cell<Rational>,
    pub gamma: GammaCell,
}

#[derive(Debug, Serialize)]
pub struct TableJson {
    pub rows: Vec<Row>,
    pub notes: Vec<&'static str>,
}

impl TableJson {
    pub fn new(rows: Vec<Row>) -> Self {
        let notes = notes(&rows);
        TableJson { rows, notes }
    }
}

fn notes(rows: &[Row]) -> Vec<&'static str> {
    let mut notes: Vec<&'static str> = rows.iter().filter_map(|r| r.lyndon.note).collect();
    notes.dedup();
    notes
}

/// Largest n for which γ is computed by exhaustive search; above it the
/// δ bound and K_n are used.
const SEARCH_UP_TO: u32 = 5;

fn gamma_cell(n: u32, closed_form: Option<u64>) -> Result<GammaCell> {
    let t = tm(n);
    let (lower, upper, method) = if n <= SEARCH_UP_TO {
        let found = min_attractor(&t, 4)?.found().map(|o| o.minimum_size as u64);
        (found, found, "exhaustive search")
    } else {
        let lower = gamma_lower_bound(&t)? as u64;
        let k = k_attractor(n)?;
        let upper = is_attractor(&t, &k)?.is_attractor.then_some(k.len() as u64);
        (Some(lower), upper, "delta bound and K_n")
    };
    let status = match closed_form {
        None => Status::NotApplicable,
        Some(c) if lower == Some(c) && upper == Some(c) => Status::Match,
        Some(_) => Status::Mismatch,
    };
    Ok(GammaCell { lower, upper, method: Some(method), closed_form, status })
}

pub fn build(max_n: u32, closed_form_only: bool) -> Result<Vec<Row>> {
    (1..=max_n).map(|n| row(n, closed_form_only)).collect()
}

fn row(n: u32, closed_form_only: bool) -> Result<Row> {
    let closed = oracle_table_entry(n)?;
    if closed_form_only {
        return Ok(Row {
            n,
            z: Cell::new(None, Some(closed.z)),
            r: Cell::new(None, Some(closed.r)),
            lyndon: Cell::new(None, Some(closed.lyndon)),
            delta: Cell::new(None, Some(closed.delta)),
            gamma: GammaCell {
                lower: None,
                upper: None,
                method: None,
                closed_form: closed.gamma,
                status: Status::ClosedFormOnly,
            },
        });
    }
    let t = tm(n);
    let mut lyndon = Cell::new(Some(lyndon_factorize(&t)?.len() as u64), Some(closed.lyndon));
    if n == 1 && lyndon.status == Status::Mismatch {
        lyndon.note = Some(LYNDON_N1_NOTE);
    }
    Ok(Row {
        n,
        z: Cell::new(Some(lz_size(&t)? as u64), Some(closed.z)),
        r: Cell::new(Some(bwt_runs(&t)? as u64), Some(closed.r)),
        lyndon,
        delta: Cell::new(Some(delta(&t)?), Some(closed.delta)),
        gamma: gamma_cell(n, closed.gamma)?,
    })
}

fn opt<T: Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_owned(), T::to_string)
}

fn render_cell<T: Display>(c: &Cell<T>) -> String {
    let mut s = match c.status {
        Status::ClosedFormOnly => opt(&c.closed_form),
        _ => format!("{} vs {} {}", opt(&c.computed), opt(&c.closed_form), c.status.label()),
    };
    if c.note.is_some() {
        s.push_str(" [1]");
    }
    s
}

fn render_gamma(g: &GammaCell) -> String {
    match g.status {
        Status::ClosedFormOnly => opt(&g.closed_form),
        _ => {
            let computed = match (g.lower, g.upper) {
                (Some(l), Some(u)) if l == u => l.to_string(),
                (l, u) => format!("{}..{}", opt(&l), opt(&u)),
            };
            format!("{computed} vs {} {}", opt(&g.closed_form), g.status.label())
        }
    }
}

/// Aligned plain-text table, with footnotes.
pub fn render_text(rows: &[Row]) -> String {
    let header = ["n", "z", "r", "lyndon", "delta", "gamma"].map(String::from);
    let body: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                render_cell(&r.z),
                render_cell(&r.r),
                render_cell(&r.lyndon),
                render_cell(&r.delta),
                render_gamma(&r.gamma),
            ]
        })
        .collect();
    let mut widths = header.clone().map(|h| h.len());
    for line in &body {
        for (w, cell) in widths.iter_mut().zip(line) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for line in std::iter::once(&header).chain(&body) {
        let cells: Vec<String> = line.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    for note in notes(rows) {
        out.push_str(note);
        out.push('\n');
    }
    out
}
