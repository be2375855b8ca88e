//! Right cosets `M*g` and the action of `G` on them by right multiplication.
//!
//! A coset is identified by its canonical representative: descending the
//! stabilizer chain of `M`, each level picks the coset element whose image of
//! the level's base point is least. The result is the element of `M*g` with
//! the lexicographically least sequence of base images, which is unique.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::orbit::{on_set, SchreierOrbit};
use crate::perm::Permutation;

/// Resource ceilings. The defaults cover every bundled group.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest coset space (or subgroup-conjugate orbit) that is enumerated.
    pub coset_index: u128,
    /// Largest group whose elements the class store may hold.
    pub class_storage: u128,
    /// Largest subgroup whose elements are listed explicitly.
    pub enumeration: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            coset_index: 200_000,
            class_storage: 5_000_000,
            enumeration: 100_000,
        }
    }
}

/// The canonical representative of the right coset `M*x`.
pub fn canonical_coset_rep(sub_chain: &StabChain, x: &Permutation) -> Permutation {
    let mut y = x.clone();
    for level in sub_chain.levels() {
        let best = level
            .orbit
            .iter()
            .copied()
            .min_by_key(|&d| y.apply(d))
            .expect("orbits are nonempty");
        level.prepend_transversal(best, &mut y);
    }
    y
}

/// The enumerated right cosets of a subgroup.
#[derive(Clone)]
pub struct CosetSpace {
    group: PermGroup,
    sub: PermGroup,
    reps: Vec<Permutation>,
    rep_inverses: Vec<Permutation>,
    index: FxHashMap<Vec<u32>, u32>,
    gen_action: Vec<Vec<u32>>,
}

impl CosetSpace {
    pub fn new(group: &PermGroup, sub: &PermGroup) -> Result<Self> {
        Self::with_limits(group, sub, &Limits::default())
    }

    pub fn with_limits(group: &PermGroup, sub: &PermGroup, limits: &Limits) -> Result<Self> {
        if sub.degree() != group.degree() || !sub.is_subgroup_of(group) {
            return Err(Error::NotSubgroup(
                "coset space needs a subgroup of the acting group".into(),
            ));
        }
        let index = group.order() / sub.order();
        if index > limits.coset_index {
            return Err(Error::IndexCeiling {
                index,
                limit: limits.coset_index,
            });
        }
        let chain = sub.chain();
        let first = canonical_coset_rep(chain, &group.identity());
        let mut space = CosetSpace {
            group: group.clone(),
            sub: sub.clone(),
            reps: Vec::with_capacity(index as usize),
            rep_inverses: Vec::with_capacity(index as usize),
            index: FxHashMap::default(),
            gen_action: vec![Vec::with_capacity(index as usize); group.generators().len()],
        };
        space.index.insert(first.images().to_vec(), 0);
        space.rep_inverses.push(first.inverse());
        space.reps.push(first);
        let mut i = 0;
        while i < space.reps.len() {
            for (k, g) in group.generators().iter().enumerate() {
                let image = canonical_coset_rep(chain, &space.reps[i].compose(g));
                let j = match space.index.get(image.images()) {
                    Some(&j) => j,
                    None => {
                        let j = space.reps.len() as u32;
                        space.index.insert(image.images().to_vec(), j);
                        space.rep_inverses.push(image.inverse());
                        space.reps.push(image);
                        j
                    }
                };
                space.gen_action[k].push(j);
            }
            i += 1;
        }
        debug_assert_eq!(space.reps.len() as u128, index);
        Ok(space)
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.sub
    }

    /// Canonical representatives, indexed by coset number.
    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    /// Number of the coset `M*g`.
    pub fn coset_of(&self, g: &Permutation) -> usize {
        let canon = canonical_coset_rep(self.sub.chain(), g);
        self.index[canon.images()] as usize
    }

    /// Number of the coset `(coset j) * g`.
    pub fn act(&self, j: usize, g: &Permutation) -> usize {
        self.coset_of(&self.reps[j].compose(g))
    }

    /// Permutation of the cosets induced by `g`.
    pub fn image_of(&self, g: &Permutation) -> Permutation {
        let images = (0..self.len()).map(|j| self.act(j, g) as u32).collect();
        Permutation::from_images_unchecked(images)
    }

    /// Permutations induced by the group's generators, in order.
    pub fn generator_images(&self) -> Vec<Permutation> {
        self.gen_action
            .iter()
            .map(|a| Permutation::from_images_unchecked(a.clone()))
            .collect()
    }

    /// Does `g` fix coset `j`?
    pub fn fixes(&self, j: usize, g: &Permutation) -> bool {
        let conj = self.reps[j].compose(g).compose(&self.rep_inverses[j]);
        self.sub.contains(&conj)
    }

    /// Number of cosets fixed by `g`.
    pub fn fixed_count(&self, g: &Permutation) -> u64 {
        (0..self.len()).filter(|&j| self.fixes(j, g)).count() as u64
    }
}

/// Where an action image acts.
#[derive(Clone)]
pub enum ActionDomain {
    Cosets(Arc<CosetSpace>),
    Sets(Arc<SchreierOrbit<Vec<u32>>>),
}

/// A permutation image of a group action; generator `i` of the image is
/// induced by generator `i` of the source.
#[derive(Clone)]
pub struct ActionImage {
    source: PermGroup,
    image: PermGroup,
    domain: ActionDomain,
}

impl std::fmt::Debug for ActionImage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ActionImage(degree {})", self.degree())
    }
}

impl ActionImage {
    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn domain(&self) -> &ActionDomain {
        &self.domain
    }

    pub fn degree(&self) -> usize {
        self.image.degree()
    }

    /// Image of an arbitrary element of the source group.
    pub fn map(&self, g: &Permutation) -> Permutation {
        match &self.domain {
            ActionDomain::Cosets(space) => space.image_of(g),
            ActionDomain::Sets(orbit) => {
                let images = orbit
                    .items()
                    .iter()
                    .map(|s| orbit.position(&on_set(s, g)).expect("closed orbit") as u32)
                    .collect();
                Permutation::from_images_unchecked(images)
            }
        }
    }
}

/// Action of `group` on the right cosets of `sub`; point 0 is the coset `sub`.
pub fn coset_action(group: &PermGroup, sub: &PermGroup) -> Result<ActionImage> {
    coset_action_with_limits(group, sub, &Limits::default())
}

pub fn coset_action_with_limits(
    group: &PermGroup,
    sub: &PermGroup,
    limits: &Limits,
) -> Result<ActionImage> {
    let space = CosetSpace::with_limits(group, sub, limits)?;
    let gens = space.generator_images();
    let degree = space.len();
    Ok(ActionImage {
        source: group.clone(),
        image: PermGroup::from_gens_unchecked(degree, gens),
        domain: ActionDomain::Cosets(Arc::new(space)),
    })
}

/// Action of `group` on the orbit of a set of points.
pub fn action_on_set_orbit(group: &PermGroup, seed: &[u32]) -> Result<ActionImage> {
    let orbit = SchreierOrbit::build(
        crate::orbit::normalize_set(seed),
        group.generators(),
        |s, g| on_set(s, g),
        usize::MAX,
    )?;
    let gens = group
        .generators()
        .iter()
        .map(|g| {
            let images = orbit
                .items()
                .iter()
                .map(|s| orbit.position(&on_set(s, g)).expect("closed orbit") as u32)
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    Ok(ActionImage {
        source: group.clone(),
        image: PermGroup::from_gens_unchecked(orbit.len(), gens),
        domain: ActionDomain::Sets(Arc::new(orbit)),
    })
}
