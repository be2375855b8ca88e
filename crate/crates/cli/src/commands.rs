//! The per-group subcommands.

use probgen::catalog::{Catalog, CatalogEntry};
use probgen::classes::conjugacy_classes;
use probgen::probgen::{
    approx_p, bracket_list, format_table, outer_prime_classes, permutation_character,
    random_check_uniform_spread, ratio_of_nongeneration, PermChar, SigmaVector,
};
use probgen::{ClassList, Error, PermGroup, Result};

use crate::report;
use crate::spread_plan::{default_candidates, plan};
use crate::Outcome;

pub fn class_index(classes: &ClassList, label: &str) -> Result<usize> {
    classes
        .index_of_label(label)
        .ok_or_else(|| Error::UnknownClass(label.to_string()))
}

fn labels(classes: &ClassList, indices: &[usize]) -> Vec<String> {
    indices.iter().map(|&i| classes.get(i).label.to_string()).collect()
}

/// Permutation characters of the listed maximal subgroups; an error if
/// the entry lists none.
pub fn characters(entry: &CatalogEntry, group: &PermGroup) -> Result<Vec<PermChar>> {
    let maxes = entry.maxes()?;
    if maxes.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "no maximal subgroups are listed for {}",
            entry.name
        )));
    }
    maxes
        .iter()
        .zip(entry.max_labels())
        .map(|(m, label)| Ok(permutation_character(group, m)?.with_label(label)))
        .collect()
}

pub fn classes(catalog: &Catalog, name: &str) -> Result<String> {
    let group = catalog.get(name)?.group()?;
    let classes = conjugacy_classes(&group)?;
    let mut rows = vec![vec!["class".into(), "order".into(), "size".into(), "centralizer".into()]];
    rows.extend(classes.classes().iter().map(|c| {
        vec![
            c.label.to_string(),
            c.element_order.to_string(),
            c.size.to_string(),
            c.centralizer_order.to_string(),
        ]
    }));
    Ok(format_table(&rows))
}

pub fn sigma(catalog: &Catalog, name: &str, s: &str, outer: Option<&str>) -> Result<String> {
    let entry = catalog.get(name)?;
    let group = entry.group()?;
    let classes = conjugacy_classes(&group)?;
    let s_class = class_index(&classes, s)?;
    let psi = approx_p(&characters(entry, &group)?, s_class, classes.len())?;
    let s_label = &classes.get(s_class).label;
    let (head, selected) = match outer {
        None => (format!("sigma({}, {s_label}) = {}", entry.name, psi.max()), None),
        Some(socle_name) => {
            let socle = socle_named(catalog, entry, socle_name)?;
            let outer = outer_prime_classes(&group, &socle)?;
            let head = format!("sigma'({}, {s_label}) = {}", entry.name, psi.max_over(&outer));
            (head, Some(outer))
        }
    };
    Ok(format!("{head}\n{}", sigma_table(&classes, &psi, selected.as_deref())))
}

/// The socle of `entry`, which must be the one named.
pub fn socle_named(catalog: &Catalog, entry: &CatalogEntry, name: &str) -> Result<PermGroup> {
    let declared = entry.socle.as_deref().ok_or_else(|| {
        Error::InvalidArgument(format!("{} has no socle in the catalog", entry.name))
    })?;
    if !catalog.get(declared)?.matches(name) {
        return Err(Error::InvalidArgument(format!(
            "the socle of {} is {declared}, not {name}",
            entry.name
        )));
    }
    Ok(catalog.socle_of(entry)?.expect("socle is declared"))
}

fn sigma_table(classes: &ClassList, psi: &SigmaVector, selected: Option<&[usize]>) -> String {
    let rows: Vec<Vec<String>> = classes
        .classes()
        .iter()
        .map(|c| {
            let mark = match selected {
                Some(sel) if sel.contains(&c.index) => "*",
                _ => "",
            };
            vec![format!("{}{mark}", c.label), psi.values[c.index].to_string()]
        })
        .collect();
    format_table(&rows)
}

pub fn info(catalog: &Catalog, name: &str) -> Result<String> {
    let entry = catalog.get(name)?;
    let row = match entry.socle {
        None => report::Row::Simple(report::simple_row(entry)?),
        Some(_) => report::Row::Outer(report::outer_row(catalog, entry)?),
    };
    Ok(format_table(&[row.cells(false)]))
}

pub fn nongen(catalog: &Catalog, name: &str, g: &str, s: &str) -> Result<String> {
    let group = catalog.get(name)?.group()?;
    let classes = conjugacy_classes(&group)?;
    let g = &classes.get(class_index(&classes, g)?).representative;
    let s = &classes.get(class_index(&classes, s)?).representative;
    Ok(format!("{}\n", ratio_of_nongeneration(&group, g, s)?))
}

pub fn spread(
    catalog: &Catalog,
    name: &str,
    s: &str,
    k: usize,
    tries: u32,
    seed: u64,
    given: Option<&[String]>,
) -> Result<Outcome> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let entry = catalog.get(name)?;
    let group = entry.group()?;
    let classes = conjugacy_classes(&group)?;
    let s_class = class_index(&classes, s)?;
    let psi = if entry.maxes.is_empty() {
        None
    } else {
        Some(approx_p(&characters(entry, &group)?, s_class, classes.len())?)
    };
    let candidates = match (given, &psi) {
        (Some(labels), _) => {
            let mut idx = labels
                .iter()
                .map(|l| class_index(&classes, l))
                .collect::<Result<Vec<_>>>()?;
            idx.sort_unstable();
            idx.dedup();
            idx
        }
        (None, Some(psi)) => default_candidates(&classes, psi),
        (None, None) => {
            return Err(Error::InvalidArgument(format!(
                "no maximal subgroups are listed for {}; give --classes",
                entry.name
            )))
        }
    };
    let plan = plan(&candidates, k, psi.as_ref());
    let s_rep = &classes.get(s_class).representative;

    let mut out = String::new();
    out.push_str(&format!("group = {}\n", entry.name));
    out.push_str(&format!("s = {}\n", classes.get(s_class).label));
    out.push_str(&format!("k = {k}\n"));
    out.push_str(&format!("candidates = {}\n", bracket_list(&labels(&classes, &candidates))));
    out.push_str(&format!("settled_by_sigma = {}\n", plan.settled.len()));
    out.push_str(&format!("checked = {}\n", plan.to_check.len()));
    let mut success = true;
    for tuple in &plan.to_check {
        let reps: Vec<_> = tuple.iter().map(|&i| classes.get(i).representative.clone()).collect();
        let cert = random_check_uniform_spread(&group, &reps, s_rep, tries, seed)?;
        success &= cert.is_success();
        out.push('\n');
        out.push_str(&cert.to_string());
        out.push('\n');
    }
    out.push_str(&format!("\noutcome = {}\n", if success { "success" } else { "failure" }));
    Ok(Outcome { text: out, success })
}
