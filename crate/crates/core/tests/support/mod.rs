//! Brute-force oracles for the integration tests. They work on raw image
//! vectors and element lists, independently of stabilizer chains, coset
//! spaces and class lists.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use probgen::probgen::{ratio, Rational};
use probgen::{ClassList, PermGroup, Permutation};

pub type Images = Vec<u32>;

/// `a` then `b`.
pub fn mul(a: &[u32], b: &[u32]) -> Images {
    a.iter().map(|&i| b[i as usize]).collect()
}

pub fn inv(a: &[u32]) -> Images {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

pub fn images(p: &Permutation, degree: usize) -> Images {
    (0..degree as u32).map(|i| p.apply(i)).collect()
}

/// All elements of the group generated by `gens`, stopping early once more
/// than `stop_above` elements are found.
pub fn closure(gens: &[Images], degree: usize, stop_above: usize) -> HashSet<Images> {
    let identity: Images = (0..degree as u32).collect();
    let mut seen = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                if seen.len() > stop_above {
                    return seen;
                }
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn elements(group: &PermGroup) -> Vec<Images> {
    let gens: Vec<Images> = group.generators().iter().map(|g| images(g, group.degree())).collect();
    let mut all: Vec<Images> = closure(&gens, group.degree(), usize::MAX).into_iter().collect();
    all.sort();
    all
}

/// Does `<x, y>` have the order `order`? A subgroup with more than half of
/// the elements is the whole group.
pub fn generates(x: &[u32], y: &[u32], order: usize) -> bool {
    closure(&[x.to_vec(), y.to_vec()], x.len(), order / 2).len() > order / 2
}

/// The conjugacy class `{h^-1 x h}` by running over the whole group.
pub fn class_of(x: &[u32], all: &[Images]) -> Vec<Images> {
    let set: HashSet<Images> = all.iter().map(|h| mul(&mul(&inv(h), x), h)).collect();
    let mut v: Vec<Images> = set.into_iter().collect();
    v.sort();
    v
}

/// `P(g, s)` by testing every conjugate of `g`.
pub fn nongeneration(g: &[u32], s: &[u32], all: &[Images]) -> Rational {
    let class = class_of(g, all);
    let bad = class.iter().filter(|x| !generates(x, s, all.len())).count();
    ratio(bad as u128, class.len() as u128)
}

/// Fixed cosets of `sub` under `g`: `#{x : x g x^-1 in sub} / |sub|`.
pub fn fixed_cosets(g: &[u32], all: &[Images], sub: &HashSet<Images>) -> u128 {
    let hits = all.iter().filter(|x| sub.contains(&mul(&mul(x, g), &inv(x)))).count();
    (hits / sub.len()) as u128
}

pub fn element_set(group: &PermGroup) -> HashSet<Images> {
    elements(group).into_iter().collect()
}

/// `(element order, class size)` of every class, in class list order.
pub fn invariants(classes: &ClassList) -> Vec<(u64, u128)> {
    classes.classes().iter().map(|c| (c.element_order, c.size)).collect()
}

/// Class function values keyed by class invariants, sorted, so that two
/// class orderings that differ only among classes with equal invariants
/// compare equal.
pub fn keyed<T: Ord + Clone>(keys: &[(u64, u128)], values: &[T]) -> Vec<((u64, u128), T)> {
    assert_eq!(keys.len(), values.len());
    let mut v: Vec<_> = keys.iter().copied().zip(values.iter().cloned()).collect();
    v.sort();
    v
}

pub fn rationals(text: &[&str]) -> Vec<Rational> {
    text.iter()
        .map(|t| probgen::probgen::parse_rational(t).expect("rational literal"))
        .collect()
}
