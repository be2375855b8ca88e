//! Sylow subgroups, normalizers and double cosets.

use rustc_hash::FxHashMap;

use crate::chain::StabChain;
use crate::coset::{CosetSpace, Limits};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A double coset `A*r*B` given by a representative and its size.
#[derive(Clone, Debug)]
pub struct DoubleCosetRep {
    pub representative: Permutation,
    pub size: u128,
}

/// Part of `n` made of powers of `p`.
pub fn p_part(mut n: u128, p: u128) -> u128 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// The power of `g` generating the Sylow `p`-subgroup of `<g>`.
pub fn p_element_part(g: &Permutation, p: u64) -> Permutation {
    let m = g.order() as u128;
    g.pow((m / p_part(m, p as u128)) as i64)
}

/// A Sylow `p`-subgroup, grown as an ascending chain of `p`-subgroups: each
/// step adds a `p`-element of the normalizer that lies outside the current
/// subgroup.
pub fn sylow_subgroup(group: &PermGroup, p: u64) -> Result<PermGroup> {
    let order = group.order();
    let target = p_part(order, p as u128);
    if target == 1 {
        return Ok(PermGroup::trivial(group.degree()));
    }
    if target == order {
        return Ok(group.clone());
    }
    let mut source = group.internal_random_source();
    let mut gens = loop {
        let x = p_element_part(&source.next_element(), p);
        if !x.is_identity() {
            break vec![x];
        }
    };
    let mut current = PermGroup::from_gens_unchecked(group.degree(), gens.clone());
    while current.order() < target {
        let norm = normalizer(group, &current)?;
        let mut inner = norm.internal_random_source();
        let mut extended = false;
        for _ in 0..100_000 {
            let x = p_element_part(&inner.next_element(), p);
            if !current.contains(&x) {
                gens.push(x);
                current = PermGroup::from_gens_unchecked(group.degree(), gens.clone());
                extended = true;
                break;
            }
        }
        if !extended {
            return Err(Error::Verification(format!(
                "no p-element found to extend a {p}-subgroup of order {}",
                current.order()
            )));
        }
    }
    Ok(current)
}

/// Normalizer of `sub` in `group`: the stabilizer of `sub` under the
/// conjugation action on its conjugates. Each conjugate is keyed by the
/// sorted base images of its elements.
pub fn normalizer(group: &PermGroup, sub: &PermGroup) -> Result<PermGroup> {
    normalizer_with_limits(group, sub, &Limits::default())
}

pub fn normalizer_with_limits(
    group: &PermGroup,
    sub: &PermGroup,
    limits: &Limits,
) -> Result<PermGroup> {
    if sub.degree() != group.degree() || !sub.is_subgroup_of(group) {
        return Err(Error::NotSubgroup("normalizer needs a subgroup".into()));
    }
    let sub_order = sub.order();
    if sub_order > limits.enumeration {
        return Err(Error::StorageCeiling {
            what: "subgroup enumeration",
            needed: sub_order,
            limit: limits.enumeration,
        });
    }
    let elements = sub.elements();
    let base = group.chain().base();
    let key = |c: &Permutation| -> Vec<u32> {
        let cinv = c.inverse();
        let pre: Vec<u32> = base.iter().map(|&b| cinv.apply(b)).collect();
        let mut tuples: Vec<Vec<u32>> = elements
            .iter()
            .map(|x| pre.iter().map(|&q| c.apply(x.apply(q))).collect())
            .collect();
        tuples.sort_unstable();
        tuples.concat()
    };
    let gens: Vec<Permutation> = group
        .generators()
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect();
    let identity = group.identity();
    let mut index: FxHashMap<Vec<u32>, u32> = FxHashMap::default();
    let mut conjugators = vec![identity.clone()];
    index.insert(key(&identity), 0);
    let mut i = 0;
    while i < conjugators.len() {
        for g in &gens {
            let c = conjugators[i].compose(g);
            let k = key(&c);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(k) {
                if conjugators.len() as u128 >= limits.coset_index {
                    return Err(Error::IndexCeiling {
                        index: conjugators.len() as u128 + 1,
                        limit: limits.coset_index,
                    });
                }
                e.insert(conjugators.len() as u32);
                conjugators.push(c);
            }
        }
        i += 1;
    }
    let target = group.order() / conjugators.len() as u128;
    let degree = group.degree();
    let mut ngens: Vec<Permutation> = sub
        .generators()
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect();
    let mut chain = StabChain::build_known_order(&ngens, degree, target);
    let mut source = group.internal_random_source();
    while chain.order() < target {
        let g = source.next_element();
        let j = index[&key(&g)] as usize;
        let h = g.compose(&conjugators[j].inverse());
        if chain.contains(&h) {
            continue;
        }
        ngens.push(h);
        chain = StabChain::build_known_order(&ngens, degree, target);
    }
    Ok(PermGroup::from_parts(degree, ngens, chain))
}

/// Representatives and sizes of the double cosets `A\G/B`, computed as the
/// orbits of `B` on the right cosets of `A`. Representatives are the
/// canonical representatives of the least-numbered coset in each orbit.
pub fn double_coset_reps_and_sizes(
    group: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
) -> Result<Vec<DoubleCosetRep>> {
    let space = CosetSpace::new(group, a)?;
    double_cosets_in_space(&space, b)
}

/// Double cosets `A\G/B` for an already enumerated coset space of `A`.
pub fn double_cosets_in_space(space: &CosetSpace, b: &PermGroup) -> Result<Vec<DoubleCosetRep>> {
    if !b.is_subgroup_of(space.group()) {
        return Err(Error::NotSubgroup("double cosets need subgroups".into()));
    }
    let n = space.len();
    let images: Vec<Vec<u32>> = b
        .generators()
        .iter()
        .filter(|g| !g.is_identity())
        .map(|g| (0..n).map(|j| space.act(j, g) as u32).collect())
        .collect();
    let a_order = space.subgroup().order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.clear();
        queue.push(start as u32);
        let mut len = 0usize;
        while let Some(j) = queue.pop() {
            len += 1;
            for img in &images {
                let k = img[j as usize];
                if !seen[k as usize] {
                    seen[k as usize] = true;
                    queue.push(k);
                }
            }
        }
        out.push(DoubleCosetRep {
            representative: space.representatives()[start].clone(),
            size: a_order * len as u128,
        });
    }
    Ok(out)
}
