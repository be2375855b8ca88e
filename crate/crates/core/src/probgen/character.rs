//! Permutation characters of coset actions.

use crate::classes::{conjugacy_classes, ClassList};
use crate::coset::{CosetSpace, Limits};
use crate::error::{Error, Result};
use crate::group::PermGroup;

/// The permutation character `1_M^G`: fixed-point counts of the class
/// representatives of `G` on the right cosets of `M`, aligned with the
/// canonical class list of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermChar {
    pub label: String,
    /// The index `[G:M]`.
    pub degree: u64,
    pub values: Vec<u64>,
}

impl PermChar {
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `sum over classes of |class| * value`; equals `|G|` for a transitive
    /// action.
    pub fn burnside_sum(&self, classes: &ClassList) -> u128 {
        classes
            .classes()
            .iter()
            .zip(&self.values)
            .map(|(c, &v)| c.size * v as u128)
            .sum()
    }

    /// True when every value is 0 or the degree, as for the action on the
    /// cosets of a normal subgroup.
    pub fn is_normal_type(&self) -> bool {
        self.values.iter().all(|&v| v == 0 || v == self.degree)
    }
}

/// `1_M^G` by counting fixed cosets.
pub fn permutation_character(group: &PermGroup, sub: &PermGroup) -> Result<PermChar> {
    permutation_character_with_limits(group, sub, &Limits::default())
}

pub fn permutation_character_with_limits(
    group: &PermGroup,
    sub: &PermGroup,
    limits: &Limits,
) -> Result<PermChar> {
    let classes = conjugacy_classes(group)?;
    let space = CosetSpace::with_limits(group, sub, limits)?;
    let values = classes
        .classes()
        .iter()
        .map(|c| space.fixed_count(&c.representative))
        .collect();
    Ok(PermChar {
        label: String::new(),
        degree: space.len() as u64,
        values,
    })
}

/// `1_M^G` from the class fusion of `M` into `G`:
/// `value(g) = |C_G(g)| * |g^G ∩ M| / |M|`.
pub fn permutation_character_by_counting(group: &PermGroup, sub: &PermGroup) -> Result<PermChar> {
    if !sub.is_subgroup_of(group) {
        return Err(Error::NotSubgroup("character needs a subgroup".into()));
    }
    let classes = conjugacy_classes(group)?;
    let local = conjugacy_classes(sub)?;
    let mut meet = vec![0u128; classes.len()];
    for c in local.classes() {
        let i = classes
            .class_index_of(&c.representative)
            .ok_or_else(|| Error::Verification("subgroup element missing from group".into()))?;
        meet[i] += c.size;
    }
    let m = sub.order();
    let values = classes
        .classes()
        .iter()
        .zip(&meet)
        .map(|(c, &k)| (c.centralizer_order * k / m) as u64)
        .collect();
    Ok(PermChar {
        label: String::new(),
        degree: (group.order() / m) as u64,
        values,
    })
}
