//! Orbits with Schreier vectors, stabilizers, and block systems.

use std::hash::Hash;

use rustc_hash::FxHashMap;

use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Orbit of a single point, in breadth-first discovery order.
pub fn orbit_of_point(gens: &[Permutation], degree: usize, p: u32) -> Vec<u32> {
    let mut seen = vec![false; degree];
    seen[p as usize] = true;
    let mut orbit = vec![p];
    let mut i = 0;
    while i < orbit.len() {
        let q = orbit[i];
        for g in gens {
            let r = g.apply(q);
            if !seen[r as usize] {
                seen[r as usize] = true;
                orbit.push(r);
            }
        }
        i += 1;
    }
    orbit
}

/// All orbits on `{0, .., degree-1}`, ordered by least point.
pub fn orbits(gens: &[Permutation], degree: usize) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree as u32 {
        if seen[p as usize] {
            continue;
        }
        let orb = orbit_of_point(gens, degree, p);
        for &q in &orb {
            seen[q as usize] = true;
        }
        out.push(orb);
    }
    out
}

/// Image of a set of points, returned sorted.
pub fn on_set(set: &[u32], g: &Permutation) -> Vec<u32> {
    let mut image: Vec<u32> = set.iter().map(|&p| g.apply(p)).collect();
    image.sort_unstable();
    image
}

/// Image of a set of sets, each inner set sorted and the outer list sorted.
pub fn on_sets_of_sets(sets: &[Vec<u32>], g: &Permutation) -> Vec<Vec<u32>> {
    let mut image: Vec<Vec<u32>> = sets.iter().map(|s| on_set(s, g)).collect();
    image.sort_unstable();
    image
}

/// Sorts and deduplicates a set of points.
pub fn normalize_set(set: &[u32]) -> Vec<u32> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// An orbit under an arbitrary action, with a Schreier vector.
///
/// `items[0]` is the seed; items are listed breadth-first with generators
/// applied in list order.
#[derive(Clone, Debug)]
pub struct SchreierOrbit<T> {
    items: Vec<T>,
    index: FxHashMap<T, u32>,
    parent: Vec<u32>,
    via: Vec<u32>,
}

impl<T: Clone + Eq + Hash> SchreierOrbit<T> {
    /// Enumerates the orbit of `seed`, failing once it exceeds `limit` items.
    pub fn build(
        seed: T,
        gens: &[Permutation],
        act: impl Fn(&T, &Permutation) -> T,
        limit: usize,
    ) -> Result<Self> {
        let mut orbit = SchreierOrbit {
            items: vec![seed.clone()],
            index: FxHashMap::default(),
            parent: vec![u32::MAX],
            via: vec![u32::MAX],
        };
        orbit.index.insert(seed, 0);
        let mut i = 0;
        while i < orbit.items.len() {
            for (k, g) in gens.iter().enumerate() {
                let image = act(&orbit.items[i], g);
                if !orbit.index.contains_key(&image) {
                    if orbit.items.len() >= limit {
                        return Err(Error::StorageCeiling {
                            what: "orbit enumeration",
                            needed: orbit.items.len() as u128 + 1,
                            limit: limit as u128,
                        });
                    }
                    orbit.index.insert(image.clone(), orbit.items.len() as u32);
                    orbit.items.push(image);
                    orbit.parent.push(i as u32);
                    orbit.via.push(k as u32);
                }
            }
            i += 1;
        }
        Ok(orbit)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[T] {
        &self.items
    }

    pub fn position(&self, item: &T) -> Option<usize> {
        self.index.get(item).map(|&i| i as usize)
    }

    /// Generator indices of a word mapping the seed to `items[i]`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut word = Vec::new();
        while i != 0 {
            word.push(self.via[i] as usize);
            i = self.parent[i] as usize;
        }
        word.reverse();
        word
    }

    /// An element mapping the seed to `items[i]`.
    pub fn transversal(&self, i: usize, gens: &[Permutation], degree: usize) -> Permutation {
        let mut u = Permutation::identity(degree);
        for k in self.word(i) {
            u.mul_right(&gens[k]);
        }
        u
    }
}

/// Stabilizer of the seed of `orbit`, where the orbit was built from the
/// generators of `group` under `act`.
///
/// Random elements `g` are corrected by the transversal element of the image
/// of the seed; the resulting stabilizer elements are collected until their
/// group reaches the order `|G| / |orbit|`.
pub fn stabilizer_from_orbit<T: Clone + Eq + Hash>(
    group: &PermGroup,
    orbit: &SchreierOrbit<T>,
    act: impl Fn(&T, &Permutation) -> T,
) -> PermGroup {
    let order = group.order();
    let target = order / orbit.len() as u128;
    let degree = group.degree();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut chain = StabChain::build(&[], degree);
    if target > 1 {
        let seed = &orbit.items[0];
        let mut source = group.internal_random_source();
        while chain.order() < target {
            let g = source.next_element();
            let i = orbit
                .position(&act(seed, &g))
                .expect("orbit is closed under the group");
            let u = orbit.transversal(i, group.generators(), degree);
            let h = g.compose(&u.inverse());
            if h.is_identity() || chain.contains(&h) {
                continue;
            }
            gens.push(h);
            chain = StabChain::build_known_order(&gens, degree, target);
        }
    }
    PermGroup::from_parts(degree, gens, chain)
}

/// Stabilizer of a point.
pub fn point_stabilizer(group: &PermGroup, p: u32) -> Result<PermGroup> {
    if p as usize >= group.degree() {
        return Err(Error::InvalidArgument(format!(
            "point {} beyond degree {}",
            p + 1,
            group.degree()
        )));
    }
    let act = |q: &u32, g: &Permutation| g.apply(*q);
    let orbit = SchreierOrbit::build(p, group.generators(), act, usize::MAX)?;
    Ok(stabilizer_from_orbit(group, &orbit, act))
}

/// Setwise stabilizer of a set of points.
pub fn set_stabilizer(group: &PermGroup, set: &[u32]) -> Result<PermGroup> {
    if set.iter().any(|&p| p as usize >= group.degree()) {
        return Err(Error::InvalidArgument("set point beyond degree".into()));
    }
    let seed = normalize_set(set);
    let act = |s: &Vec<u32>, g: &Permutation| on_set(s, g);
    let orbit = SchreierOrbit::build(seed, group.generators(), act, usize::MAX)?;
    Ok(stabilizer_from_orbit(group, &orbit, act))
}

/// Stabilizer of a set of sets (for example a partition into blocks).
pub fn sets_stabilizer(group: &PermGroup, sets: &[Vec<u32>]) -> Result<PermGroup> {
    if sets.iter().flatten().any(|&p| p as usize >= group.degree()) {
        return Err(Error::InvalidArgument("set point beyond degree".into()));
    }
    let mut seed: Vec<Vec<u32>> = sets.iter().map(|s| normalize_set(s)).collect();
    seed.sort_unstable();
    let act = |s: &Vec<Vec<u32>>, g: &Permutation| on_sets_of_sets(s, g);
    let orbit = SchreierOrbit::build(seed, group.generators(), act, usize::MAX)?;
    Ok(stabilizer_from_orbit(group, &orbit, act))
}

/// Orbit of a set of points under the group, in discovery order.
pub fn orbit_of_set(gens: &[Permutation], set: &[u32]) -> Vec<Vec<u32>> {
    SchreierOrbit::build(normalize_set(set), gens, |s, g| on_set(s, g), usize::MAX)
        .map(|o| o.items)
        .unwrap_or_default()
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let next = parent[x as usize];
        parent[x as usize] = parent[next as usize];
        x = next;
    }
    x
}

/// The finest block system of a transitive group in which `a` and `b` lie
/// in a common block; returns the block containing `a`.
pub fn minimal_block(gens: &[Permutation], degree: usize, a: u32, b: u32) -> Vec<u32> {
    let mut parent: Vec<u32> = (0..degree as u32).collect();
    let mut queue = vec![(a, b)];
    let ra = find(&mut parent, a);
    let rb = find(&mut parent, b);
    if ra != rb {
        parent[rb as usize] = ra;
    }
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let u = find(&mut parent, g.apply(x));
            let v = find(&mut parent, g.apply(y));
            if u != v {
                parent[v as usize] = u;
                queue.push((u, v));
            }
        }
    }
    let root = find(&mut parent, a);
    (0..degree as u32)
        .filter(|&p| find(&mut parent, p) == root)
        .collect()
}

/// Is the group primitive on `{0, .., degree-1}`? Requires transitivity.
pub fn is_primitive(gens: &[Permutation], degree: usize) -> bool {
    if degree <= 2 {
        return orbit_of_point(gens, degree, 0).len() == degree;
    }
    if orbit_of_point(gens, degree, 0).len() != degree {
        return false;
    }
    (1..degree as u32).all(|b| minimal_block(gens, degree, 0, b).len() == degree)
}
