//! The `paper-small` report suite: sigma values and spread bounds of the
//! small simple groups, outer bounds of small almost simple groups, and
//! exact nongeneration proportions.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use probgen::catalog::{Catalog, CatalogEntry};
use probgen::classes::conjugacy_classes;
use probgen::probgen::{
    bracket_list, format_table, nongeneration_profile, prob_gen_info, ratio_of_nongeneration,
    Rational,
};
use probgen::{ClassList, Error, Result};

use crate::output::{rational_pq, Record};
use crate::Format;

/// `sigma`, the spread bound, the best classes and their maximal subgroup
/// counts for a simple group.
#[derive(Clone, Debug)]
pub struct ReportRow {
    pub group: String,
    pub sigma: Rational,
    /// `None` when `sigma` is zero.
    pub spread_bound: Option<BigInt>,
    pub best: Vec<String>,
    pub counts: Vec<u64>,
    pub runtime: Duration,
}

/// `sigma'` of an almost simple group over its socle.
#[derive(Clone, Debug)]
pub struct OuterRow {
    pub group: String,
    pub sigma: Rational,
    pub best: Vec<String>,
    pub counts: Vec<u64>,
    pub runtime: Duration,
}

/// `P(g, s)` for one class `s`, or for every class when `s` is `None`.
#[derive(Clone, Debug)]
pub struct NongenRow {
    pub group: String,
    pub g: String,
    pub s: Option<String>,
    pub values: Vec<Rational>,
    pub runtime: Duration,
}

#[derive(Clone, Debug)]
pub enum Row {
    Simple(ReportRow),
    Outer(OuterRow),
    Nongen(NongenRow),
}

fn bound_text(bound: &Option<BigInt>) -> String {
    bound.as_ref().map_or_else(|| "-".into(), |b| b.to_string())
}

fn seconds(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64())
}

impl Row {
    fn runtime(&self) -> Duration {
        match self {
            Row::Simple(r) => r.runtime,
            Row::Outer(r) => r.runtime,
            Row::Nongen(r) => r.runtime,
        }
    }

    pub fn cells(&self, timings: bool) -> Vec<String> {
        let mut cells = match self {
            Row::Simple(r) => vec![
                r.group.clone(),
                r.sigma.to_string(),
                bound_text(&r.spread_bound),
                bracket_list(&r.best),
                bracket_list(&r.counts),
            ],
            Row::Outer(r) => vec![
                r.group.clone(),
                r.sigma.to_string(),
                bracket_list(&r.best),
                bracket_list(&r.counts),
            ],
            Row::Nongen(r) => vec![
                r.group.clone(),
                r.g.clone(),
                r.s.clone().unwrap_or_else(|| "all".into()),
                match r.s {
                    Some(_) => r.values[0].to_string(),
                    None => bracket_list(&r.values),
                },
            ],
        };
        if timings {
            cells.push(seconds(self.runtime()));
        }
        cells
    }

    pub fn record(&self, timings: bool) -> String {
        let record = match self {
            Row::Simple(r) => Record::new("sigma")
                .field("group", &r.group)
                .field("sigma", rational_pq(&r.sigma))
                .field("bound", r.spread_bound.as_ref().map_or("none".into(), |b| b.to_string()))
                .list("best", &r.best)
                .list("counts", &r.counts),
            Row::Outer(r) => Record::new("outer")
                .field("group", &r.group)
                .field("sigma", rational_pq(&r.sigma))
                .list("best", &r.best)
                .list("counts", &r.counts),
            Row::Nongen(r) => {
                let values: Vec<String> = r.values.iter().map(rational_pq).collect();
                Record::new("nongen")
                    .field("group", &r.group)
                    .field("g", &r.g)
                    .field("s", r.s.as_deref().unwrap_or("all"))
                    .list("values", &values)
            }
        };
        let record = if timings {
            record.field("seconds", seconds(self.runtime()))
        } else {
            record
        };
        record.line()
    }
}

pub fn simple_row(entry: &CatalogEntry) -> Result<ReportRow> {
    let start = Instant::now();
    let group = entry.group()?;
    let info = prob_gen_info(&group, &entry.maxes()?, &entry.name)?;
    Ok(ReportRow {
        group: entry.name.clone(),
        sigma: info.sigma,
        spread_bound: info.spread_bound,
        best: info.best_classes.iter().map(|l| l.to_string()).collect(),
        counts: info.max_counts,
        runtime: start.elapsed(),
    })
}

pub fn outer_row(catalog: &Catalog, entry: &CatalogEntry) -> Result<OuterRow> {
    let start = Instant::now();
    let info = catalog.almost_simple_info(entry)?;
    Ok(OuterRow {
        group: entry.name.clone(),
        sigma: info.sigma,
        best: info.best_classes.iter().map(|l| l.to_string()).collect(),
        counts: info.counts,
        runtime: start.elapsed(),
    })
}

/// A class chosen by element order and class size, so that the choice does
/// not depend on labels.
#[derive(Clone, Copy, Debug)]
pub enum ClassChoice {
    Sized { order: u64, size: u128 },
    /// The class of `s^k`.
    PowerOfS(i64),
}

fn first_class(classes: &ClassList, order: u64, size: u128) -> Result<usize> {
    classes
        .classes()
        .iter()
        .position(|c| c.element_order == order && c.size == size)
        .ok_or_else(|| Error::UnknownClass(format!("order {order}, size {size}")))
}

/// `P(g, s)` for the chosen classes; `s = None` gives the profile over all
/// classes.
pub fn nongen_row(
    entry: &CatalogEntry,
    g: ClassChoice,
    s: Option<(u64, u128)>,
) -> Result<NongenRow> {
    let start = Instant::now();
    let group = entry.group()?;
    let classes = conjugacy_classes(&group)?;
    let s_index = s.map(|(order, size)| first_class(&classes, order, size)).transpose()?;
    let g_rep = match g {
        ClassChoice::Sized { order, size } => {
            classes.get(first_class(&classes, order, size)?).representative.clone()
        }
        ClassChoice::PowerOfS(k) => {
            let s = s_index.ok_or_else(|| {
                Error::InvalidArgument("g is a power of s, but s is not given".into())
            })?;
            classes.get(s).representative.pow(k)
        }
    };
    let g_label = classes
        .class_index_of(&g_rep)
        .map(|i| classes.get(i).label.to_string())
        .expect("class representatives lie in the group");
    let (s_label, values) = match s_index {
        Some(i) => {
            let s_rep = &classes.get(i).representative;
            let value = ratio_of_nongeneration(&group, &g_rep, s_rep)?;
            (Some(classes.get(i).label.to_string()), vec![value])
        }
        None => {
            let all: Vec<usize> = (0..classes.len()).collect();
            let profile = nongeneration_profile(&group, &g_rep, &all)?;
            (None, profile.into_iter().map(|(_, v)| v).collect())
        }
    };
    Ok(NongenRow {
        group: entry.name.clone(),
        g: g_label,
        s: s_label,
        values,
        runtime: start.elapsed(),
    })
}

pub const SIMPLE_GROUPS: [&str; 11] =
    ["A5", "A6", "A7", "A8", "A9", "L3(2)", "L2(11)", "M11", "M12", "U4(2)", "S6(2)"];

pub const ALMOST_SIMPLE_GROUPS: [&str; 3] = ["S5", "S6", "S7"];

/// Group, `g` and `s` of each nongeneration row.
pub fn nongen_suite() -> Vec<(&'static str, ClassChoice, Option<(u64, u128)>)> {
    use ClassChoice::*;
    vec![
        ("A5", Sized { order: 2, size: 15 }, None),
        ("A6", Sized { order: 2, size: 45 }, None),
        ("A7", Sized { order: 2, size: 105 }, None),
        ("L3(2)", Sized { order: 3, size: 56 }, None),
        ("M11", Sized { order: 2, size: 165 }, None),
        ("M12", Sized { order: 2, size: 495 }, Some((10, 9504))),
        ("U4(2)", Sized { order: 2, size: 45 }, Some((9, 2880))),
        ("U4(2)", PowerOfS(3), Some((9, 2880))),
        ("S6(2)", Sized { order: 2, size: 63 }, Some((15, 96768))),
        ("S6(2)", Sized { order: 2, size: 315 }, Some((15, 96768))),
    ]
}

pub fn paper_small_rows(catalog: &Catalog) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for name in SIMPLE_GROUPS {
        rows.push(Row::Simple(simple_row(catalog.get(name)?)?));
    }
    for name in ALMOST_SIMPLE_GROUPS {
        rows.push(Row::Outer(outer_row(catalog, catalog.get(name)?)?));
    }
    for (name, g, s) in nongen_suite() {
        rows.push(Row::Nongen(nongen_row(catalog.get(name)?, g, s)?));
    }
    Ok(rows)
}

pub fn render(rows: &[Row], format: Format, timings: bool) -> String {
    match format {
        Format::Records => rows.iter().map(|r| r.record(timings) + "\n").collect(),
        Format::Text => {
            let sections: [(&str, fn(&Row) -> bool); 3] = [
                ("sigma of simple groups: group, sigma, bound, best classes, counts", |r| {
                    matches!(r, Row::Simple(_))
                }),
                ("outer sigma of almost simple groups: group, sigma, best classes, counts", |r| {
                    matches!(r, Row::Outer(_))
                }),
                ("nongeneration proportions: group, g, s, P(g, s)", |r| matches!(r, Row::Nongen(_))),
            ];
            let mut out = String::new();
            for (i, (title, keep)) in sections.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(title);
                out.push('\n');
                let table: Vec<Vec<String>> =
                    rows.iter().filter(|r| keep(r)).map(|r| r.cells(timings)).collect();
                out.push_str(&format_table(&table));
            }
            out
        }
    }
}

pub fn paper_small(catalog: &Catalog, format: Format, timings: bool) -> Result<String> {
    Ok(render(&paper_small_rows(catalog)?, format, timings))
}
