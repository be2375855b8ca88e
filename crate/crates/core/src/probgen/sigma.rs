//! The estimates `sigma(g, s)` from permutation characters of maximal
//! subgroups, and the derived spread bounds.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::classes::{conjugacy_classes, ClassLabel, ClassList};
use crate::error::{Error, Result};
use crate::group::PermGroup;

use super::character::{permutation_character, PermChar};
use super::rational::{max_or_zero, ratio, spread_bound, Rational};

/// The class function `psi` with `psi(1) = 0` and
/// `psi(g) = sum over pi of pi(s) pi(g) / pi(1)`, aligned with the class list.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaVector {
    pub s_class: usize,
    pub values: Vec<Rational>,
}

impl SigmaVector {
    pub fn max(&self) -> Rational {
        max_or_zero(&self.values)
    }

    /// Largest value over the given classes; zero for an empty selection.
    pub fn max_over(&self, classes: &[usize]) -> Rational {
        max_or_zero(classes.iter().map(|&i| &self.values[i]))
    }
}

/// `psi` for the class `s_class`; every character must have `class_count`
/// values, and class 0 must be the identity class.
pub fn approx_p(chars: &[PermChar], s_class: usize, class_count: usize) -> Result<SigmaVector> {
    if s_class >= class_count {
        return Err(Error::InvalidArgument(format!(
            "class index {s_class} out of range"
        )));
    }
    if let Some(pi) = chars.iter().find(|pi| pi.values.len() != class_count) {
        return Err(Error::InvalidArgument(format!(
            "character {:?} has {} values, expected {class_count}",
            pi.label,
            pi.values.len()
        )));
    }
    let mut values = vec![Rational::zero(); class_count];
    for pi in chars {
        let at_s = pi.values[s_class] as u128;
        if at_s == 0 {
            continue;
        }
        for (v, &x) in values.iter_mut().zip(&pi.values).skip(1) {
            *v += ratio(at_s * x as u128, pi.degree as u128);
        }
    }
    Ok(SigmaVector { s_class, values })
}

/// Which classes `g` the maximum in `sigma` runs over.
#[derive(Clone, Copy, Debug)]
pub enum SigmaMode<'a> {
    /// All nonidentity classes.
    All,
    /// Classes of prime order elements outside the given normal subgroup of
    /// prime index.
    Outer(&'a PermGroup),
}

/// Classes of `group` of prime element order whose elements lie outside
/// `socle`, which must have prime index.
pub fn outer_prime_classes(group: &PermGroup, socle: &PermGroup) -> Result<Vec<usize>> {
    if !socle.is_subgroup_of(group) {
        return Err(Error::NotSubgroup("socle must lie in the group".into()));
    }
    let index = group.order() / socle.order();
    if !is_prime(index) {
        return Err(Error::IndexNotPrime(index));
    }
    let classes = conjugacy_classes(group)?;
    Ok(classes
        .classes()
        .iter()
        .filter(|c| is_prime(c.element_order as u128) && !socle.contains(&c.representative))
        .map(|c| c.index)
        .collect())
}

pub(crate) fn is_prime(n: u128) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `sigma(G, s)` (or `sigma'(G, s)` in outer mode) for the class `s_class`
/// of `group`, from the given maximal subgroups.
pub fn sigma_from_maxes(
    group: &PermGroup,
    s_class: usize,
    maxes: &[PermGroup],
    mode: SigmaMode<'_>,
) -> Result<Rational> {
    let classes = conjugacy_classes(group)?;
    let chars = maxes
        .iter()
        .map(|m| permutation_character(group, m))
        .collect::<Result<Vec<_>>>()?;
    let psi = approx_p(&chars, s_class, classes.len())?;
    Ok(match mode {
        SigmaMode::All => psi.max(),
        SigmaMode::Outer(socle) => psi.max_over(&outer_prime_classes(group, socle)?),
    })
}

/// The values `sigma(S)` and the spread bound of a simple group, with the
/// classes attaining them.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbGenInfo {
    pub group_label: String,
    pub sigma: Rational,
    /// `None` when `sigma` is zero.
    pub spread_bound: Option<BigInt>,
    /// One class per Galois family attaining `sigma`, in class order.
    pub best_classes: Vec<ClassLabel>,
    pub best_class_indices: Vec<usize>,
    /// `sum over pi of pi(s)` for each best class.
    pub max_counts: Vec<u64>,
}

/// `sigma(S)`, the spread bound and the best classes, from a complete list
/// of class representatives of maximal subgroups.
pub fn prob_gen_info(
    group: &PermGroup,
    maxes: &[PermGroup],
    label: &str,
) -> Result<ProbGenInfo> {
    let classes = conjugacy_classes(group)?;
    let chars = maxes
        .iter()
        .map(|m| permutation_character(group, m))
        .collect::<Result<Vec<_>>>()?;
    prob_gen_info_from_characters(&classes, &chars, label)
}

pub fn prob_gen_info_from_characters(
    classes: &ClassList,
    chars: &[PermChar],
    label: &str,
) -> Result<ProbGenInfo> {
    let n = classes.len();
    if n < 2 {
        return Err(Error::InvalidArgument("trivial group".into()));
    }
    let maxima = (1..n)
        .map(|i| approx_p(chars, i, n).map(|psi| psi.max()))
        .collect::<Result<Vec<_>>>()?;
    let min = maxima.iter().min().expect("nonempty").clone();
    let mut best: Vec<usize> = (1..n)
        .filter(|&i| maxima[i - 1] == min)
        .map(|i| classes.galois_family(i)[0])
        .collect();
    best.sort_unstable();
    best.dedup();
    let max_counts = best
        .iter()
        .map(|&i| chars.iter().map(|pi| pi.values[i]).sum())
        .collect();
    Ok(ProbGenInfo {
        group_label: label.to_string(),
        spread_bound: spread_bound(&min),
        sigma: min,
        best_classes: best.iter().map(|&i| classes.get(i).label.clone()).collect(),
        best_class_indices: best,
        max_counts,
    })
}

/// The minimum over candidate classes `s` of `sigma'(G, s)` for an almost
/// simple group over its socle.
#[derive(Clone, Debug, PartialEq)]
pub struct AlmostSimpleInfo {
    pub group_label: String,
    pub sigma: Rational,
    pub best_classes: Vec<ClassLabel>,
    pub best_class_indices: Vec<usize>,
    /// `sum over pi of pi(s)` per best class, leaving out characters of
    /// normal subgroups.
    pub counts: Vec<u64>,
}

/// Indices in the class list of `group` of the classes of `socle`.
pub fn fuse_classes(group: &PermGroup, socle: &PermGroup) -> Result<Vec<usize>> {
    let big = conjugacy_classes(group)?;
    let small = conjugacy_classes(socle)?;
    small
        .classes()
        .iter()
        .map(|c| {
            big.class_index_of(&c.representative)
                .ok_or_else(|| Error::NotSubgroup("socle element outside the group".into()))
        })
        .collect()
}

/// `s_classes` are class indices of `group` (for example socle classes
/// mapped with [`fuse_classes`]).
pub fn prob_gen_info_almost_simple(
    group: &PermGroup,
    socle: &PermGroup,
    s_classes: &[usize],
    maxes: &[PermGroup],
    label: &str,
) -> Result<AlmostSimpleInfo> {
    let outer = outer_prime_classes(group, socle)?;
    let classes = conjugacy_classes(group)?;
    let chars = maxes
        .iter()
        .map(|m| permutation_character(group, m))
        .collect::<Result<Vec<_>>>()?;
    let mut spos: Vec<usize> = s_classes.to_vec();
    spos.sort_unstable();
    spos.dedup();
    if spos.is_empty() {
        return Err(Error::InvalidArgument("no candidate classes".into()));
    }
    let maxima = spos
        .iter()
        .map(|&i| approx_p(&chars, i, classes.len()).map(|psi| psi.max_over(&outer)))
        .collect::<Result<Vec<_>>>()?;
    let min = maxima.iter().min().expect("nonempty").clone();
    let best: Vec<usize> = spos
        .iter()
        .zip(&maxima)
        .filter(|(_, m)| **m == min)
        .map(|(&i, _)| i)
        .collect();
    let counts = best
        .iter()
        .map(|&i| {
            chars
                .iter()
                .filter(|pi| !pi.is_normal_type())
                .map(|pi| pi.values[i])
                .sum()
        })
        .collect();
    Ok(AlmostSimpleInfo {
        group_label: label.to_string(),
        sigma: min,
        best_classes: best.iter().map(|&i| classes.get(i).label.clone()).collect(),
        best_class_indices: best,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::derived_subgroup;
    use crate::orbit::{point_stabilizer, set_stabilizer};
    use crate::subgroups::{normalizer, sylow_subgroup};

    fn a5() -> PermGroup {
        PermGroup::from_cycles(5, &["(1,2,3,4,5)", "(1,2,3)"]).unwrap()
    }

    fn first_of_order(list: &ClassList, order: u64) -> usize {
        list.classes()
            .iter()
            .position(|c| c.element_order == order)
            .unwrap()
    }

    fn a5_maxes(g: &PermGroup) -> Vec<PermGroup> {
        vec![
            point_stabilizer(g, 0).unwrap(),
            normalizer(g, &sylow_subgroup(g, 5).unwrap()).unwrap(),
            set_stabilizer(g, &[0, 1, 2]).unwrap(),
        ]
    }

    #[test]
    fn empty_character_list_gives_zero() {
        let psi = approx_p(&[], 2, 5).unwrap();
        assert!(psi.values.iter().all(|v| v.is_zero()));
        assert!(approx_p(&[], 5, 5).is_err());
    }

    #[test]
    fn a5_info() {
        let g = a5();
        let info = prob_gen_info(&g, &a5_maxes(&g), "A5").unwrap();
        assert_eq!(info.sigma, ratio(1, 3));
        assert_eq!(info.spread_bound, Some(BigInt::from(2)));
        assert_eq!(info.best_classes.len(), 1);
        assert_eq!(info.best_classes[0].to_string(), "5A");
        assert_eq!(info.max_counts, vec![1]);
    }

    #[test]
    fn s5_outer_sigma_is_zero() {
        let s5 = PermGroup::from_cycles(5, &["(1,2,3,4,5)", "(1,2)"]).unwrap();
        let a5 = derived_subgroup(&s5);
        let f20 = normalizer(&s5, &sylow_subgroup(&s5, 5).unwrap()).unwrap();
        assert_eq!(f20.order(), 20);
        let classes = conjugacy_classes(&s5).unwrap();
        let s = first_of_order(&classes, 5);
        let value = sigma_from_maxes(&s5, s, &[f20], SigmaMode::Outer(&a5)).unwrap();
        assert!(value.is_zero());
        assert!(matches!(
            outer_prime_classes(&s5, &s5),
            Err(Error::IndexNotPrime(1))
        ));
    }
}
