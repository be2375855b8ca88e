//! Permutation groups given by generators, with lazily built stabilizer chains.

use std::fmt;
use std::sync::Arc;

use once_cell::sync::OnceCell;

use crate::chain::StabChain;
use crate::classes::ClassList;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::random::{ProductReplacement, INTERNAL_SEED};

/// A permutation group on `{0, .., degree-1}`.
///
/// Clones share the cached stabilizer chain and class data.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    known_order: Option<u128>,
    chain: Arc<OnceCell<StabChain>>,
    pub(crate) classes: Arc<OnceCell<Arc<ClassList>>>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if let Some(p) = g.largest_moved_point() {
                if p as usize >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "generator {g} moves a point beyond degree {degree}"
                    )));
                }
            }
        }
        Ok(Self::from_gens_unchecked(degree, gens))
    }

    pub(crate) fn from_gens_unchecked(degree: usize, gens: Vec<Permutation>) -> Self {
        let gens: Vec<Permutation> = gens
            .into_iter()
            .map(|g| {
                if g.degree() == degree {
                    g
                } else {
                    Permutation::from_images_unchecked(
                        (0..degree as u32).map(|i| g.apply(i)).collect(),
                    )
                }
            })
            .collect();
        PermGroup {
            degree,
            gens,
            known_order: None,
            chain: Arc::new(OnceCell::new()),
            classes: Arc::new(OnceCell::new()),
        }
    }

    /// Group with a chain that was already computed for these generators.
    pub(crate) fn from_parts(degree: usize, gens: Vec<Permutation>, chain: StabChain) -> Self {
        let g = Self::from_gens_unchecked(degree, gens);
        let _ = g.chain.set(chain);
        g
    }

    /// Parses generators in 1-based cycle notation.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_gens_unchecked(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| match self.known_order {
            Some(order) => StabChain::build_known_order(&self.gens, self.degree, order),
            None => StabChain::build(&self.gens, self.degree),
        })
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(|g| g.is_identity())
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// Brings a permutation to the group's degree, failing if it moves
    /// points beyond it.
    pub fn normalize(&self, g: &Permutation) -> Result<Permutation> {
        if g.largest_moved_point().is_some_and(|p| p as usize >= self.degree) {
            return Err(Error::InvalidPermutation(format!(
                "{g} moves points beyond degree {}",
                self.degree
            )));
        }
        Ok(Permutation::from_images_unchecked(
            (0..self.degree as u32).map(|i| g.apply(i)).collect(),
        ))
    }

    /// Like [`normalize`](Self::normalize) but also requires membership.
    pub fn member(&self, g: &Permutation) -> Result<Permutation> {
        let g = self.normalize(g)?;
        if !self.contains(&g) {
            return Err(Error::NotMember(g.to_string()));
        }
        Ok(g)
    }

    /// The subgroup generated by `gens`, which must lie in `self`.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        let gens = gens
            .iter()
            .map(|g| self.member(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_gens_unchecked(self.degree, gens))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree <= other.degree.max(self.degree)
            && self.gens.iter().all(|g| other.contains(g))
    }

    /// `G^g`, the conjugate subgroup `g^-1 G g`.
    pub fn conjugate(&self, g: &Permutation) -> PermGroup {
        let gens = self.gens.iter().map(|x| x.conjugate(g)).collect();
        let mut h = Self::from_gens_unchecked(self.degree, gens);
        h.known_order = self.chain.get().map(|c| c.order()).or(self.known_order);
        h
    }

    pub fn moved_points(&self) -> Vec<u32> {
        let mut moved = vec![false; self.degree];
        for g in &self.gens {
            for p in g.moved_points() {
                moved[p as usize] = true;
            }
        }
        (0..self.degree as u32).filter(|&p| moved[p as usize]).collect()
    }

    /// Is the group transitive on the points it moves?
    pub fn is_transitive(&self) -> bool {
        let moved = self.moved_points();
        match moved.first() {
            None => true,
            Some(&p) => {
                crate::orbit::orbit_of_point(&self.gens, self.degree, p).len() == moved.len()
            }
        }
    }

    pub fn random_source(&self, seed: u64) -> ProductReplacement {
        ProductReplacement::new(&self.gens, self.degree, seed)
    }

    pub(crate) fn internal_random_source(&self) -> ProductReplacement {
        self.random_source(INTERNAL_SEED)
    }

    pub fn elements(&self) -> Vec<Permutation> {
        self.chain().elements()
    }

    pub(crate) fn cached_classes(&self) -> Option<&Arc<ClassList>> {
        self.classes.get()
    }
}

/// Commutator subgroup, as the normal closure of the generator commutators.
pub fn derived_subgroup(group: &PermGroup) -> PermGroup {
    let degree = group.degree();
    let ggens: Vec<&Permutation> = group.generators().iter().filter(|g| !g.is_identity()).collect();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut chain = StabChain::build(&[], degree);
    let push = |c: Permutation, gens: &mut Vec<Permutation>, chain: &mut StabChain| {
        if !chain.contains(&c) {
            gens.push(c);
            *chain = StabChain::build(gens, degree);
        }
    };
    for (i, a) in ggens.iter().enumerate() {
        for b in &ggens[i + 1..] {
            let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
            push(c, &mut gens, &mut chain);
        }
    }
    let mut i = 0;
    while i < gens.len() {
        for g in &ggens {
            let c = gens[i].conjugate(g);
            push(c, &mut gens, &mut chain);
        }
        i += 1;
    }
    PermGroup::from_parts(degree, gens, chain)
}

/// The group acting on the disjoint union of the factors' domains, with
/// generator `i` acting as generator `i` of every factor.
pub fn diagonal_product(groups: &[PermGroup]) -> Result<PermGroup> {
    let first = groups
        .first()
        .ok_or_else(|| Error::InvalidArgument("no groups given".into()))?;
    let ngens = first.generators().len();
    if groups.iter().any(|g| g.generators().len() != ngens) {
        return Err(Error::InvalidArgument(
            "generator lists have different lengths".into(),
        ));
    }
    let degree: usize = groups.iter().map(|g| g.degree()).sum();
    let gens = (0..ngens)
        .map(|i| {
            let mut images = Vec::with_capacity(degree);
            let mut offset = 0u32;
            for g in groups {
                images.extend(g.generators()[i].images().iter().map(|&x| x + offset));
                offset += g.degree() as u32;
            }
            Permutation::from_images_unchecked(images)
        })
        .collect();
    let product = PermGroup::from_gens_unchecked(degree, gens);
    let order = first.order();
    for g in groups {
        if g.order() != order {
            return Err(Error::OrderMismatch {
                name: "diagonal product factor".into(),
                declared: order,
                computed: g.order(),
            });
        }
    }
    if product.order() != order {
        return Err(Error::OrderMismatch {
            name: "diagonal product".into(),
            declared: order,
            computed: product.order(),
        });
    }
    Ok(product)
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(degree {}, [", self.degree)?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}
