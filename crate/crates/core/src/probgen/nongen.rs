//! Exact nongeneration proportions and fixed-point-ratio bounds.

use crate::chain::StabChain;
use crate::classes::{are_conjugate, centralizer, centralizer_in, conjugacy_classes, ClassLabel};
use crate::coset::{CosetSpace, Limits};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::orbit::orbit_of_point;
use crate::perm::Permutation;
use crate::subgroups::double_cosets_in_space;

use super::rational::{ratio, Rational};
use super::sigma::is_prime;

/// Repeated generation tests inside one transitive group.
#[derive(Clone, Debug)]
pub struct GenerationTester {
    degree: usize,
    moved: Vec<u32>,
    order: u128,
}

impl GenerationTester {
    pub fn new(group: &PermGroup) -> Result<Self> {
        if !group.is_transitive() {
            return Err(Error::NotTransitive);
        }
        Ok(GenerationTester {
            degree: group.degree(),
            moved: group.moved_points(),
            order: group.order(),
        })
    }

    /// Do `elements` (all in the group) generate it? Transitivity is tested
    /// first since it is much cheaper than the order.
    pub fn generates(&self, elements: &[&Permutation]) -> bool {
        let Some(&first) = self.moved.first() else {
            return true;
        };
        let gens: Vec<Permutation> = elements.iter().map(|&g| g.clone()).collect();
        if orbit_of_point(&gens, self.degree, first).len() != self.moved.len() {
            return false;
        }
        StabChain::order_at_least(&gens, self.degree, self.order)
    }
}

/// Do `elements` generate the transitive group `group`?
pub fn is_generating(group: &PermGroup, elements: &[Permutation]) -> Result<bool> {
    let tester = GenerationTester::new(group)?;
    let elements = elements
        .iter()
        .map(|x| group.member(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(tester.generates(&elements.iter().collect::<Vec<_>>()))
}

/// Generation check that rebuilds a complete stabilizer chain, sharing no
/// code path with the early-stopping test.
pub fn verify_generation(group: &PermGroup, elements: &[Permutation]) -> bool {
    let degree = group.degree();
    let moved = group.moved_points();
    let chain = StabChain::build(elements, degree);
    let transitive = moved.first().is_none_or(|&p| {
        let mut orbit = orbit_of_point(elements, degree, p);
        orbit.sort_unstable();
        orbit == moved
    });
    transitive && chain.order() == group.order()
}

/// `P(g, s)`: the proportion of conjugates `g^h` with `<g^h, s>` a proper
/// subgroup. Generation is tested once per double coset
/// `C(g) r C(s)`, since `<g^(c r d), s> = <g^r, s>^d`.
pub fn ratio_of_nongeneration(group: &PermGroup, g: &Permutation, s: &Permutation) -> Result<Rational> {
    let tester = GenerationTester::new(group)?;
    let g = group.member(g)?;
    let space = CosetSpace::new(group, &centralizer(group, &g)?)?;
    nongeneration_in_space(group, &tester, &space, &g, s)
}

fn nongeneration_in_space(
    group: &PermGroup,
    tester: &GenerationTester,
    space: &CosetSpace,
    g: &Permutation,
    s: &Permutation,
) -> Result<Rational> {
    let s = group.member(s)?;
    let cs = centralizer(group, &s)?;
    let mut bad: u128 = 0;
    for dc in double_cosets_in_space(space, &cs)? {
        let conj = g.conjugate(&dc.representative);
        if !tester.generates(&[&s, &conj]) {
            bad += dc.size;
        }
    }
    Ok(ratio(bad, group.order()))
}

/// `P(g, s)` for a fixed `g` against one representative of each of the
/// classes `s_classes`.
pub fn nongeneration_profile(
    group: &PermGroup,
    g: &Permutation,
    s_classes: &[usize],
) -> Result<Vec<(ClassLabel, Rational)>> {
    let tester = GenerationTester::new(group)?;
    let g = group.member(g)?;
    let classes = conjugacy_classes(group)?;
    let space = CosetSpace::new(group, &centralizer(group, &g)?)?;
    s_classes
        .iter()
        .map(|&i| {
            let class = classes.get(i);
            let value = nongeneration_in_space(group, &tester, &space, &g, &class.representative)?;
            Ok((class.label.clone(), value))
        })
        .collect()
}

/// A class of a subgroup: a representative and the class size.
#[derive(Clone, Debug)]
pub struct ClassRep {
    pub representative: Permutation,
    pub size: u128,
}

/// The classes of elements of prime order in `sub`.
pub fn prime_order_classes(sub: &PermGroup) -> Result<Vec<ClassRep>> {
    let list = conjugacy_classes(sub)?;
    Ok(list
        .classes()
        .iter()
        .filter(|c| is_prime(c.element_order as u128))
        .map(|c| ClassRep {
            representative: c.representative.clone(),
            size: c.size,
        })
        .collect())
}

/// The classes of elements of prime order in `sub` outside `normal`.
pub fn prime_order_classes_outside(sub: &PermGroup, normal: &PermGroup) -> Result<Vec<ClassRep>> {
    Ok(prime_order_classes(sub)?
        .into_iter()
        .filter(|c| !normal.contains(&c.representative))
        .collect())
}

fn centralizer_order(group: &PermGroup, x: &Permutation) -> Result<u128> {
    if group.order() <= Limits::default().class_storage {
        let list = conjugacy_classes(group)?;
        if let Some(i) = list.class_index_of(x) {
            return Ok(list.get(i).centralizer_order);
        }
    }
    Ok(centralizer_in(group, x, Limits::default().class_storage as usize)?.order())
}

/// An upper bound for `max over g of sum_i mu(g, G/M_i)`, where
/// `maxesclasses[i]` lists the prime order classes of `M_i` and `g` runs
/// over noncentral elements of prime order.
///
/// Subgroup classes are grouped by the invariants (element order,
/// centralizer order in `G`, number of moved points); classes in one group
/// may or may not be `G`-conjugate, so summing over a group bounds the true
/// value. With `exact`, the groups attaining the maximum are split by
/// conjugacy tests until a single `G`-class attains it. The flag returned
/// tells whether the bound is attained.
pub fn upper_bound_fixed_point_ratios(
    group: &PermGroup,
    maxesclasses: &[Vec<ClassRep>],
    exact: bool,
) -> Result<(Rational, bool)> {
    let order = group.order();
    let mut invariants: Vec<(u64, u128, usize)> = Vec::new();
    let mut info: Vec<Vec<(Permutation, u128)>> = Vec::new();
    for c in maxesclasses.iter().flatten() {
        let r = group.member(&c.representative)?;
        let o = r.order();
        if !is_prime(o as u128) {
            continue;
        }
        let cent = centralizer_order(group, &r)?;
        if cent == order {
            continue;
        }
        let inv = (o, cent, r.nr_moved_points());
        let weight = c.size * cent;
        match invariants.iter().position(|x| *x == inv) {
            Some(pos) => info[pos].push((r, weight)),
            None => {
                invariants.push(inv);
                info.push(vec![(r, weight)]);
            }
        }
    }
    if info.is_empty() {
        return Ok((Rational::from_integer(0.into()), true));
    }
    loop {
        let sums: Vec<u128> = info.iter().map(|b| b.iter().map(|x| x.1).sum()).collect();
        let max = *sums.iter().max().expect("nonempty");
        let maxpos: Vec<usize> = (0..info.len()).filter(|&i| sums[i] == max).collect();
        let maxlen: Vec<usize> = maxpos.iter().map(|&i| info[i].len()).collect();
        let settled = maxlen.contains(&1);
        if settled || !exact {
            return Ok((ratio(max, order), settled));
        }
        let shortest = *maxlen.iter().min().expect("nonempty");
        let target = maxpos[maxlen.iter().position(|&l| l == shortest).expect("present")];
        let reps = &mut info[target];
        if are_conjugate(group, &reps[0].0, &reps[1].0)?.is_some() {
            reps[0].1 += reps[1].1;
            reps.swap_remove(1);
        } else {
            let reps = info.remove(target);
            let mut split: Vec<(Permutation, u128)> = Vec::new();
            for (i, (r, w)) in reps.into_iter().enumerate() {
                let mut found = false;
                if i >= 2 {
                    for entry in split.iter_mut() {
                        if are_conjugate(group, &r, &entry.0)?.is_some() {
                            entry.1 += w;
                            found = true;
                            break;
                        }
                    }
                }
                if !found {
                    split.push((r, w));
                }
            }
            info.extend(split.into_iter().map(|x| vec![x]));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroups::{normalizer, sylow_subgroup};

    fn group(deg: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(deg, gens).unwrap()
    }

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn generation_tests() {
        let a5 = group(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        let c = perm("(1,2,3,4,5)", 5);
        assert!(is_generating(&a5, &[c.clone(), perm("(1,2,3)", 5)]).unwrap());
        assert!(!is_generating(&a5, &[c.clone(), c.pow(2)]).unwrap());
        let a6 = group(6, &["(1,2,3)", "(2,3,4,5,6)"]);
        assert!(!is_generating(&a6, &[perm("(1,2,3)", 6), perm("(4,5,6)", 6)]).unwrap());
        let intransitive = group(6, &["(1,2,3)", "(4,5,6)"]);
        assert!(matches!(
            is_generating(&intransitive, &[]),
            Err(Error::NotTransitive)
        ));
    }

    #[test]
    fn a5_involution_profile() {
        let a5 = group(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        let all: Vec<usize> = (0..5).collect();
        let profile = nongeneration_profile(&a5, &perm("(1,2)(3,4)", 5), &all).unwrap();
        let values: Vec<String> = profile.iter().map(|(_, r)| r.to_string()).collect();
        assert_eq!(values, vec!["1", "1", "3/5", "1/3", "1/3"]);
    }

    #[test]
    fn a5_d10_fixed_point_ratio() {
        let a5 = group(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        let d10 = normalizer(&a5, &sylow_subgroup(&a5, 5).unwrap()).unwrap();
        let classes = prime_order_classes(&d10).unwrap();
        assert_eq!(
            upper_bound_fixed_point_ratios(&a5, std::slice::from_ref(&classes), true).unwrap(),
            (ratio(1, 3), true)
        );
        let (rough, _) = upper_bound_fixed_point_ratios(&a5, &[classes], false).unwrap();
        assert!(rough >= ratio(1, 3));
        assert_eq!(
            upper_bound_fixed_point_ratios(&a5, &[], true).unwrap(),
            (ratio(0, 1), true)
        );
    }
}
