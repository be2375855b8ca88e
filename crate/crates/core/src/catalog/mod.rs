//! The group catalog: permutation or matrix generators for each group and
//! recipes for class representatives of its maximal subgroups.
//!
//! File format (`#` starts a comment):
//!
//! ```text
//! probgen-catalog 1
//!
//! [group A5]
//! order = 60
//! degree = 5
//! gens = (1,2,3,4,5), (1,2,3)
//!
//! [max A4]
//! order = 12
//! recipe = point_stabilizer 1
//! ```
//!
//! Matrix groups give `field = q`, `dimension = n` and one `matrix =` line
//! per generator, rows separated by `/` and entries written `0`, `1`, `z`
//! or `z^k` for powers of the field's primitive element. The group acts on
//! projective points; `orbit = n` selects an orbit by length, otherwise the
//! smallest orbit with a faithful action is used.
//!
//! Recipes:
//! - `literal (1,2)(3,4), (1,2,3)`: generators in cycle notation
//! - `words a*b, (a*b^2)^3`: words in the group's generators
//! - `point_stabilizer 1`, `set_stabilizer 1 2 3`
//! - `sets_stabilizer 1 2 3 | 4 5 6`: stabilizer of a set of sets
//! - `sylow_normalizer p`, `derived_subgroup`
//! - `centralizer_of WORD`, `normalizer_of WORD` (of the cyclic subgroup)
//! - `conjugate LABEL by PERM`: an earlier subgroup of the same entry,
//!   conjugated by a permutation in cycle notation that normalizes the group

pub mod field;
pub mod matrix;
pub mod word;

use std::path::Path;

use once_cell::sync::OnceCell;

use crate::classes::{centralizer, conjugacy_classes};
use crate::error::{Error, Result};
use crate::group::{derived_subgroup, PermGroup};
use crate::orbit::{orbits, point_stabilizer, set_stabilizer, sets_stabilizer};
use crate::perm::Permutation;
use crate::probgen::{prob_gen_info, prob_gen_info_almost_simple, AlmostSimpleInfo};
use crate::subgroups::{normalizer, sylow_subgroup};

use field::Field;
use matrix::{Matrix, ProjectiveSpace};
use word::Word;

pub const HEADER: &str = "probgen-catalog 1";

const BUNDLED: &str = include_str!("../../data/catalog.txt");

/// Largest projective space whose points are enumerated.
const MAX_PROJECTIVE_POINTS: usize = 100_000;

#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorSpec {
    Cycles {
        degree: usize,
        gens: Vec<String>,
    },
    Matrices {
        q: u32,
        dimension: usize,
        matrices: Vec<String>,
        orbit: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum SubgroupRecipe {
    Literal(Vec<String>),
    Words(Vec<Word>),
    PointStabilizer(u32),
    SetStabilizer(Vec<u32>),
    SetsStabilizer(Vec<Vec<u32>>),
    SylowNormalizer(u64),
    DerivedSubgroup,
    CentralizerOf(Word),
    NormalizerOf(Word),
    Conjugate { label: String, by: String },
}

/// A maximal subgroup: its label, recipe and optional declared order.
#[derive(Clone, Debug)]
pub struct MaxSpec {
    pub label: String,
    pub recipe: SubgroupRecipe,
    pub declared_order: Option<u128>,
    pub notes: Vec<String>,
    pub line: usize,
}

#[derive(Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub aliases: Vec<String>,
    pub declared_order: u128,
    pub generators: GeneratorSpec,
    /// Catalog name of the socle, which is the derived subgroup.
    pub socle: Option<String>,
    pub maxes: Vec<MaxSpec>,
    pub notes: Vec<String>,
    pub line: usize,
    group: OnceCell<PermGroup>,
    resolved: OnceCell<Vec<PermGroup>>,
}

impl CatalogEntry {
    pub fn matches(&self, name: &str) -> bool {
        self.name.eq_ignore_ascii_case(name) || self.aliases.iter().any(|a| a.eq_ignore_ascii_case(name))
    }

    /// The group, built once and checked against the declared order.
    pub fn group(&self) -> Result<PermGroup> {
        self.group.get_or_try_init(|| build_group(self)).cloned()
    }

    /// The maximal subgroups, resolved once in catalog order.
    pub fn maxes(&self) -> Result<Vec<PermGroup>> {
        self.resolved
            .get_or_try_init(|| {
                let group = self.group()?;
                let mut done: Vec<(String, PermGroup)> = Vec::new();
                for spec in &self.maxes {
                    let sub = resolve_max(&group, spec, &done)?;
                    done.push((spec.label.clone(), sub));
                }
                Ok(done.into_iter().map(|(_, g)| g).collect())
            })
            .cloned()
    }

    pub fn max_labels(&self) -> Vec<String> {
        self.maxes.iter().map(|m| m.label.clone()).collect()
    }
}

#[derive(Debug, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Parses catalog text; groups are built on first use.
    pub fn parse(text: &str) -> Result<Self> {
        parse_catalog(text)
    }

    /// Reads and parses a catalog file and checks the order of every group.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Catalog {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        let catalog = Self::parse(&text)?;
        catalog.verify_orders()?;
        Ok(catalog)
    }

    /// The catalog shipped with the crate.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled catalog parses")
    }

    pub fn bundled_text() -> &'static str {
        BUNDLED
    }

    pub fn verify_orders(&self) -> Result<()> {
        for e in &self.entries {
            e.group()?;
        }
        Ok(())
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.matches(name))
            .ok_or_else(|| Error::UnknownGroup(name.to_string()))
    }

    /// The socle of an almost simple entry, as its derived subgroup.
    pub fn socle_of(&self, entry: &CatalogEntry) -> Result<Option<PermGroup>> {
        let Some(name) = &entry.socle else {
            return Ok(None);
        };
        let socle_entry = self.get(name)?;
        let socle = derived_subgroup(&entry.group()?);
        if socle.order() != socle_entry.declared_order {
            return Err(Error::OrderMismatch {
                name: format!("socle of {}", entry.name),
                declared: socle_entry.declared_order,
                computed: socle.order(),
            });
        }
        Ok(Some(socle))
    }

    /// `sigma'` of an almost simple entry over its socle, with `s` running
    /// over the best classes of the socle entry and their Galois conjugates.
    pub fn almost_simple_info(&self, entry: &CatalogEntry) -> Result<AlmostSimpleInfo> {
        let socle = self.socle_of(entry)?.ok_or_else(|| {
            Error::InvalidArgument(format!("{} has no socle in the catalog", entry.name))
        })?;
        let socle_entry = self.get(entry.socle.as_deref().expect("socle is declared"))?;
        let socle_group = socle_entry.group()?;
        let socle_info = prob_gen_info(&socle_group, &socle_entry.maxes()?, &socle_entry.name)?;
        let socle_classes = conjugacy_classes(&socle_group)?;
        let group = entry.group()?;
        let classes = conjugacy_classes(&group)?;
        let mut s_classes = Vec::new();
        for &i in &socle_info.best_class_indices {
            for j in socle_classes.galois_family(i) {
                let rep = &socle_classes.get(j).representative;
                let index = group
                    .normalize(rep)
                    .ok()
                    .filter(|r| socle.contains(r))
                    .and_then(|r| classes.class_index_of(&r))
                    .ok_or_else(|| {
                        Error::InvalidArgument(format!(
                            "{} does not act on the points of {} as its socle",
                            socle_entry.name, entry.name
                        ))
                    })?;
                s_classes.push(index);
            }
        }
        prob_gen_info_almost_simple(&group, &socle, &s_classes, &entry.maxes()?, &entry.name)
    }
}

/// Reads and parses a catalog file, checking every group's order.
pub fn load_catalog(path: impl AsRef<Path>) -> Result<Catalog> {
    Catalog::load(path)
}

/// Builds the permutation group of an entry and checks its order.
pub fn build_group(entry: &CatalogEntry) -> Result<PermGroup> {
    let group = match &entry.generators {
        GeneratorSpec::Cycles { degree, gens } => {
            let gens = gens
                .iter()
                .map(|g| Permutation::parse(g, *degree))
                .collect::<Result<Vec<_>>>()?;
            PermGroup::new(*degree, gens)?
        }
        GeneratorSpec::Matrices {
            q,
            dimension,
            matrices,
            orbit,
        } => {
            let field = Field::new(*q)?;
            let mats = matrices
                .iter()
                .map(|m| parse_matrix(&field, m, *dimension))
                .collect::<Result<Vec<_>>>()?;
            projective_group(&field, *dimension, &mats, *orbit)?
        }
    };
    if group.order() != entry.declared_order {
        return Err(Error::OrderMismatch {
            name: entry.name.clone(),
            declared: entry.declared_order,
            computed: group.order(),
        });
    }
    Ok(group)
}

fn parse_matrix(field: &Field, text: &str, dimension: usize) -> Result<Matrix> {
    let m = Matrix::parse(field, text)?;
    if m.dimension() != dimension {
        return Err(Error::Parse(format!(
            "matrix has dimension {}, expected {dimension}",
            m.dimension()
        )));
    }
    if !m.is_invertible(field) {
        return Err(Error::InvalidArgument("singular generator matrix".into()));
    }
    Ok(m)
}

/// Orbit lengths of a matrix group on projective points, in order of least
/// point.
pub fn projective_orbit_lengths(field: &Field, dimension: usize, mats: &[Matrix]) -> Result<Vec<usize>> {
    let space = ProjectiveSpace::new(field, dimension, MAX_PROJECTIVE_POINTS)?;
    let perms = mats
        .iter()
        .map(|m| space.permutation(m))
        .collect::<Result<Vec<_>>>()?;
    Ok(orbits(&perms, space.len()).iter().map(|o| o.len()).collect())
}

/// The permutation group induced on one orbit of projective points: the
/// first orbit of length `orbit` if given, otherwise the smallest orbit
/// (least point first among equal lengths) on which the action is faithful.
pub fn projective_group(
    field: &Field,
    dimension: usize,
    mats: &[Matrix],
    orbit: Option<usize>,
) -> Result<PermGroup> {
    let space = ProjectiveSpace::new(field, dimension, MAX_PROJECTIVE_POINTS)?;
    let perms = mats
        .iter()
        .map(|m| space.permutation(m))
        .collect::<Result<Vec<_>>>()?;
    let mut all = orbits(&perms, space.len());
    all.sort_by_key(|o| o.len());
    let restrict = |o: &Vec<u32>| -> PermGroup {
        let mut pts = o.clone();
        pts.sort_unstable();
        let mut pos = vec![u32::MAX; space.len()];
        for (i, &p) in pts.iter().enumerate() {
            pos[p as usize] = i as u32;
        }
        let gens = perms
            .iter()
            .map(|g| {
                let images = pts.iter().map(|&p| pos[g.apply(p) as usize]).collect();
                Permutation::from_images(images).expect("orbits are invariant")
            })
            .collect();
        PermGroup::from_gens_unchecked(pts.len(), gens)
    };
    match orbit {
        Some(len) => all
            .iter()
            .find(|o| o.len() == len)
            .map(restrict)
            .ok_or_else(|| Error::InvalidArgument(format!("no projective orbit of length {len}"))),
        None => {
            let full = PermGroup::from_gens_unchecked(space.len(), perms.clone()).order();
            all.iter()
                .map(restrict)
                .find(|g| g.order() == full)
                .ok_or_else(|| Error::InvalidArgument("no faithful orbit".into()))
        }
    }
}

/// Resolves a recipe that does not refer to other subgroups.
pub fn resolve_subgroup(group: &PermGroup, recipe: &SubgroupRecipe) -> Result<PermGroup> {
    resolve_recipe(group, recipe, &[])
}

fn resolve_max(group: &PermGroup, spec: &MaxSpec, earlier: &[(String, PermGroup)]) -> Result<PermGroup> {
    let sub = resolve_recipe(group, &spec.recipe, earlier).map_err(|e| match e {
        Error::UnknownGroup(_) | Error::Catalog { .. } => e,
        other => Error::Verification(format!("subgroup {}: {other}", spec.label)),
    })?;
    if let Some(order) = spec.declared_order {
        if sub.order() != order {
            return Err(Error::Verification(format!(
                "subgroup {} has order {}, declared {order}",
                spec.label,
                sub.order()
            )));
        }
    }
    Ok(sub)
}

fn resolve_recipe(
    group: &PermGroup,
    recipe: &SubgroupRecipe,
    earlier: &[(String, PermGroup)],
) -> Result<PermGroup> {
    let degree = group.degree();
    let word = |w: &Word| group.member(&w.evaluate(group.generators(), degree)?);
    let point = |p: u32| -> Result<u32> {
        if p == 0 || p as usize > degree {
            return Err(Error::InvalidArgument(format!("point {p} outside 1..{degree}")));
        }
        Ok(p - 1)
    };
    let points = |ps: &[u32]| ps.iter().map(|&p| point(p)).collect::<Result<Vec<_>>>();
    let sub = match recipe {
        SubgroupRecipe::Literal(gens) => {
            let gens = gens
                .iter()
                .map(|g| Permutation::parse(g, degree))
                .collect::<Result<Vec<_>>>()?;
            group.subgroup(gens)?
        }
        SubgroupRecipe::Words(words) => {
            let gens = words.iter().map(word).collect::<Result<Vec<_>>>()?;
            group.subgroup(gens)?
        }
        SubgroupRecipe::PointStabilizer(p) => point_stabilizer(group, point(*p)?)?,
        SubgroupRecipe::SetStabilizer(set) => set_stabilizer(group, &points(set)?)?,
        SubgroupRecipe::SetsStabilizer(sets) => {
            let sets = sets.iter().map(|s| points(s)).collect::<Result<Vec<_>>>()?;
            sets_stabilizer(group, &sets)?
        }
        SubgroupRecipe::SylowNormalizer(p) => normalizer(group, &sylow_subgroup(group, *p)?)?,
        SubgroupRecipe::DerivedSubgroup => derived_subgroup(group),
        SubgroupRecipe::CentralizerOf(w) => centralizer(group, &word(w)?)?,
        SubgroupRecipe::NormalizerOf(w) => {
            let x = word(w)?;
            normalizer(group, &group.subgroup(vec![x])?)?
        }
        SubgroupRecipe::Conjugate { label, by } => {
            let base = earlier
                .iter()
                .find(|(l, _)| l == label)
                .map(|(_, g)| g)
                .ok_or_else(|| Error::InvalidArgument(format!("no earlier subgroup {label}")))?;
            let c = Permutation::parse(by, degree)?;
            let conj = base.conjugate(&c);
            group.subgroup(conj.generators().to_vec())?
        }
    };
    for g in sub.generators() {
        if !group.contains(g) {
            return Err(Error::Verification("resolved subgroup leaves the group".into()));
        }
    }
    Ok(sub)
}

/// Splits at commas outside parentheses.
fn split_top_level(text: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            parts.push(current.trim().to_string());
            current.clear();
        } else {
            current.push(c);
        }
    }
    if !current.trim().is_empty() {
        parts.push(current.trim().to_string());
    }
    parts
}

fn parse_points(text: &str) -> Result<Vec<u32>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad point {t:?}")))
        })
        .collect()
}

pub fn parse_recipe(text: &str) -> Result<SubgroupRecipe> {
    let text = text.trim();
    let (kind, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    let need_rest = || {
        if rest.is_empty() {
            Err(Error::Parse(format!("recipe {kind} needs an argument")))
        } else {
            Ok(())
        }
    };
    match kind {
        "literal" => {
            need_rest()?;
            Ok(SubgroupRecipe::Literal(split_top_level(rest)))
        }
        "words" => {
            need_rest()?;
            Ok(SubgroupRecipe::Words(
                split_top_level(rest)
                    .iter()
                    .map(|w| Word::parse(w))
                    .collect::<Result<_>>()?,
            ))
        }
        "point_stabilizer" => {
            let pts = parse_points(rest)?;
            match pts.as_slice() {
                [p] => Ok(SubgroupRecipe::PointStabilizer(*p)),
                _ => Err(Error::Parse("point_stabilizer takes one point".into())),
            }
        }
        "set_stabilizer" => {
            need_rest()?;
            Ok(SubgroupRecipe::SetStabilizer(parse_points(rest)?))
        }
        "sets_stabilizer" => {
            need_rest()?;
            Ok(SubgroupRecipe::SetsStabilizer(
                rest.split('|').map(parse_points).collect::<Result<_>>()?,
            ))
        }
        "sylow_normalizer" => rest
            .parse()
            .map(SubgroupRecipe::SylowNormalizer)
            .map_err(|_| Error::Parse(format!("bad prime {rest:?}"))),
        "derived_subgroup" if rest.is_empty() => Ok(SubgroupRecipe::DerivedSubgroup),
        "centralizer_of" => {
            need_rest()?;
            Ok(SubgroupRecipe::CentralizerOf(Word::parse(rest)?))
        }
        "normalizer_of" => {
            need_rest()?;
            Ok(SubgroupRecipe::NormalizerOf(Word::parse(rest)?))
        }
        "conjugate" => {
            let (label, by) = rest
                .split_once(" by ")
                .ok_or_else(|| Error::Parse("expected `conjugate LABEL by PERM`".into()))?;
            Ok(SubgroupRecipe::Conjugate {
                label: label.trim().to_string(),
                by: by.trim().to_string(),
            })
        }
        _ => Err(Error::Parse(format!("unknown recipe {text:?}"))),
    }
}

#[derive(Default)]
struct GroupDraft {
    name: String,
    line: usize,
    order: Option<u128>,
    degree: Option<usize>,
    gens: Vec<String>,
    field: Option<u32>,
    dimension: Option<usize>,
    matrices: Vec<String>,
    orbit: Option<usize>,
    aliases: Vec<String>,
    socle: Option<String>,
    notes: Vec<String>,
    maxes: Vec<MaxSpec>,
}

struct MaxDraft {
    label: String,
    line: usize,
    order: Option<u128>,
    recipe: Option<SubgroupRecipe>,
    notes: Vec<String>,
}

fn catalog_error(line: usize, message: impl Into<String>) -> Error {
    Error::Catalog {
        line,
        message: message.into(),
    }
}

fn finish_max(draft: MaxDraft, group: &mut GroupDraft) -> Result<()> {
    let recipe = draft
        .recipe
        .ok_or_else(|| catalog_error(draft.line, format!("max {} has no recipe", draft.label)))?;
    if group.maxes.iter().any(|m| m.label == draft.label) {
        return Err(catalog_error(draft.line, format!("duplicate max {}", draft.label)));
    }
    group.maxes.push(MaxSpec {
        label: draft.label,
        recipe,
        declared_order: draft.order,
        notes: draft.notes,
        line: draft.line,
    });
    Ok(())
}

fn finish_group(draft: GroupDraft) -> Result<CatalogEntry> {
    let line = draft.line;
    let order = draft
        .order
        .ok_or_else(|| catalog_error(line, format!("group {} has no order", draft.name)))?;
    let generators = match (draft.degree, draft.field) {
        (Some(degree), None) => {
            if !draft.matrices.is_empty() {
                return Err(catalog_error(line, "matrix given for a permutation group"));
            }
            for g in &draft.gens {
                Permutation::parse(g, degree).map_err(|e| catalog_error(line, e.to_string()))?;
            }
            GeneratorSpec::Cycles {
                degree,
                gens: draft.gens,
            }
        }
        (None, Some(q)) => {
            let dimension = draft
                .dimension
                .ok_or_else(|| catalog_error(line, "matrix group needs a dimension"))?;
            if !(1..=8).contains(&dimension) {
                return Err(catalog_error(line, "dimension must be between 1 and 8"));
            }
            let field = Field::new(q).map_err(|e| catalog_error(line, e.to_string()))?;
            for m in &draft.matrices {
                parse_matrix(&field, m, dimension).map_err(|e| catalog_error(line, e.to_string()))?;
            }
            GeneratorSpec::Matrices {
                q,
                dimension,
                matrices: draft.matrices,
                orbit: draft.orbit,
            }
        }
        _ => {
            return Err(catalog_error(
                line,
                format!("group {} needs either a degree or a field", draft.name),
            ))
        }
    };
    Ok(CatalogEntry {
        name: draft.name,
        aliases: draft.aliases,
        declared_order: order,
        generators,
        socle: draft.socle,
        maxes: draft.maxes,
        notes: draft.notes,
        line,
        group: OnceCell::new(),
        resolved: OnceCell::new(),
    })
}

fn parse_catalog(text: &str) -> Result<Catalog> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut group: Option<GroupDraft> = None;
    let mut max: Option<MaxDraft> = None;
    let mut seen_header = false;
    let push_group = |g: GroupDraft, entries: &mut Vec<CatalogEntry>| -> Result<()> {
        let line = g.line;
        let entry = finish_group(g)?;
        if entries
            .iter()
            .any(|e| e.matches(&entry.name) || entry.aliases.iter().any(|a| e.matches(a)))
        {
            return Err(catalog_error(line, format!("duplicate entry {}", entry.name)));
        }
        entries.push(entry);
        Ok(())
    };
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if !seen_header {
            if line != HEADER {
                return Err(catalog_error(lineno, format!("expected header {HEADER:?}")));
            }
            seen_header = true;
            continue;
        }
        if let Some(inner) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            let (kind, name) = inner
                .split_once(char::is_whitespace)
                .ok_or_else(|| catalog_error(lineno, "section needs a name"))?;
            let name = name.trim().to_string();
            if let Some(m) = max.take() {
                finish_max(m, group.as_mut().expect("max inside a group"))?;
            }
            match kind {
                "group" => {
                    if let Some(g) = group.take() {
                        push_group(g, &mut entries)?;
                    }
                    group = Some(GroupDraft {
                        name,
                        line: lineno,
                        ..GroupDraft::default()
                    });
                }
                "max" => {
                    if group.is_none() {
                        return Err(catalog_error(lineno, "max section outside a group"));
                    }
                    max = Some(MaxDraft {
                        label: name,
                        line: lineno,
                        order: None,
                        recipe: None,
                        notes: Vec::new(),
                    });
                }
                _ => return Err(catalog_error(lineno, format!("unknown section {kind:?}"))),
            }
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| catalog_error(lineno, "expected `key = value`"))?;
        let (key, value) = (key.trim(), value.trim());
        let number = |v: &str| -> Result<u128> {
            v.parse()
                .map_err(|_| catalog_error(lineno, format!("bad number {v:?}")))
        };
        if let Some(m) = max.as_mut() {
            match key {
                "order" => m.order = Some(number(value)?),
                "recipe" => {
                    m.recipe = Some(parse_recipe(value).map_err(|e| catalog_error(lineno, e.to_string()))?)
                }
                "note" => m.notes.push(value.to_string()),
                _ => return Err(catalog_error(lineno, format!("unknown max key {key:?}"))),
            }
            continue;
        }
        let g = group
            .as_mut()
            .ok_or_else(|| catalog_error(lineno, "key outside a section"))?;
        match key {
            "order" => g.order = Some(number(value)?),
            "degree" => g.degree = Some(number(value)? as usize),
            "gens" => g.gens.extend(split_top_level(value)),
            "field" => g.field = Some(number(value)? as u32),
            "dimension" => g.dimension = Some(number(value)? as usize),
            "matrix" => g.matrices.push(value.to_string()),
            "orbit" => g.orbit = Some(number(value)? as usize),
            "alias" => g.aliases.push(value.to_string()),
            "socle" => g.socle = Some(value.to_string()),
            "note" => g.notes.push(value.to_string()),
            _ => return Err(catalog_error(lineno, format!("unknown group key {key:?}"))),
        }
    }
    if let Some(m) = max.take() {
        finish_max(m, group.as_mut().expect("max inside a group"))?;
    }
    if let Some(g) = group.take() {
        push_group(g, &mut entries)?;
    }
    Ok(Catalog { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "probgen-catalog 1
# a comment
[group A5]
order = 60
degree = 5
gens = (1,2,3,4,5), (1,2,3)

[max A4]
order = 12
recipe = point_stabilizer 1

[max D10]
order = 10
recipe = sylow_normalizer 5

[max S3]
recipe = set_stabilizer 1 2 3
";

    #[test]
    fn parse_small_catalog() {
        let cat = Catalog::parse(SMALL).unwrap();
        assert_eq!(cat.names(), vec!["A5"]);
        let e = cat.get("a5").unwrap();
        assert_eq!(e.group().unwrap().order(), 60);
        let orders: Vec<u128> = e.maxes().unwrap().iter().map(|m| m.order()).collect();
        assert_eq!(orders, vec![12, 10, 6]);
        assert!(matches!(cat.get("A6"), Err(Error::UnknownGroup(_))));
    }

    #[test]
    fn empty_catalog() {
        assert!(Catalog::parse("").unwrap().is_empty());
        assert!(Catalog::parse("# nothing\n\n").unwrap().is_empty());
    }

    #[test]
    fn load_errors() {
        let bad_header = "probgen-catalog 2\n";
        assert!(matches!(Catalog::parse(bad_header), Err(Error::Catalog { line: 1, .. })));
        let dup = format!("{SMALL}\n[group A5]\norder = 60\ndegree = 5\ngens = (1,2,3)\n");
        assert!(matches!(Catalog::parse(&dup), Err(Error::Catalog { .. })));
        let bad_key = "probgen-catalog 1\n[group X]\ncolour = red\n";
        assert!(matches!(Catalog::parse(bad_key), Err(Error::Catalog { line: 3, .. })));
        let wrong_order = "probgen-catalog 1\n[group X]\norder = 61\ndegree = 5\ngens = (1,2,3,4,5), (1,2,3)\n";
        let cat = Catalog::parse(wrong_order).unwrap();
        assert!(matches!(cat.verify_orders(), Err(Error::OrderMismatch { .. })));
        let bad_recipe = "probgen-catalog 1\n[group X]\norder = 2\ndegree = 2\ngens = (1,2)\n[max Y]\nrecipe = frobnicate 3\n";
        assert!(matches!(Catalog::parse(bad_recipe), Err(Error::Catalog { line: 7, .. })));
    }

    #[test]
    fn recipes_parse() {
        assert_eq!(
            parse_recipe("literal (1,2)(3,4), (1,2,3)").unwrap(),
            SubgroupRecipe::Literal(vec!["(1,2)(3,4)".into(), "(1,2,3)".into()])
        );
        assert_eq!(
            parse_recipe("sets_stabilizer 1 2 3 | 4 5 6").unwrap(),
            SubgroupRecipe::SetsStabilizer(vec![vec![1, 2, 3], vec![4, 5, 6]])
        );
        assert!(matches!(
            parse_recipe("conjugate L by (1,2)").unwrap(),
            SubgroupRecipe::Conjugate { .. }
        ));
        assert!(parse_recipe("point_stabilizer 1 2").is_err());
    }

    #[test]
    fn matrix_group_on_projective_points() {
        let text = "probgen-catalog 1
[group L3(2)]
order = 168
field = 2
dimension = 3
matrix = 1 1 0 / 0 1 0 / 0 0 1
matrix = 0 1 0 / 0 0 1 / 1 0 0
";
        let cat = Catalog::parse(text).unwrap();
        let g = cat.get("L3(2)").unwrap().group().unwrap();
        assert_eq!(g.degree(), 7);
        assert_eq!(g.order(), 168);
    }
}
