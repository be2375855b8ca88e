//! Stabilizer chains built by the Schreier-Sims algorithm.
//!
//! A randomized phase sifts product-replacement elements until ten in a row
//! sift to the identity. A deterministic phase then sifts every Schreier
//! generator of every level, so the finished chain is always exact. When the
//! caller knows the group order, reaching it ends the construction early: the
//! product of the orbit lengths of a partial chain never exceeds the order of
//! the group it was built from.
//!
//! Each new level takes as base point the first point moved by the element
//! that created it. Transversals are stored as Schreier vectors.

use crate::perm::Permutation;
use crate::random::{ProductReplacement, INTERNAL_SEED};

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;
const RANDOM_STOP: usize = 10;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: u32,
    pub gens: Vec<Permutation>,
    pub inv_gens: Vec<Permutation>,
    pub orbit: Vec<u32>,
    /// For an orbit point `p`, index of the generator whose image reached `p`.
    pub edge: Vec<u32>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut edge = vec![NOT_IN_ORBIT; degree];
        edge[base as usize] = ROOT;
        Level {
            base,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            orbit: vec![base],
            edge,
        }
    }

    fn add_generator(&mut self, g: Permutation) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        self.recompute_orbit();
    }

    fn recompute_orbit(&mut self) {
        for e in self.edge.iter_mut() {
            *e = NOT_IN_ORBIT;
        }
        self.edge[self.base as usize] = ROOT;
        self.orbit.clear();
        self.orbit.push(self.base);
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for (k, g) in self.gens.iter().enumerate() {
                let q = g.apply(p);
                if self.edge[q as usize] == NOT_IN_ORBIT {
                    self.edge[q as usize] = k as u32;
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }

    #[inline]
    pub fn in_orbit(&self, p: u32) -> bool {
        self.edge[p as usize] != NOT_IN_ORBIT
    }

    /// Replaces `g` by `g * u_p^-1`, where `u_p` maps the base point to `p`.
    #[inline]
    pub fn strip(&self, mut p: u32, g: &mut Permutation) {
        loop {
            let k = self.edge[p as usize];
            if k == ROOT {
                return;
            }
            let inv = &self.inv_gens[k as usize];
            g.mul_right(inv);
            p = inv.apply(p);
        }
    }

    /// Replaces `y` by `u_p * y`.
    #[inline]
    pub fn prepend_transversal(&self, mut p: u32, y: &mut Permutation) {
        loop {
            let k = self.edge[p as usize];
            if k == ROOT {
                return;
            }
            y.mul_left(&self.gens[k as usize]);
            p = self.inv_gens[k as usize].apply(p);
        }
    }

    /// The transversal element `u_p` with `base^u_p = p`.
    pub fn transversal(&self, p: u32) -> Permutation {
        let mut y = Permutation::identity(self.edge.len());
        self.prepend_transversal(p, &mut y);
        y
    }
}

/// A base and strong generating set with Schreier-vector transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    fn empty(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    /// Exact chain for the group generated by `gens`.
    pub fn build(gens: &[Permutation], degree: usize) -> Self {
        let (chain, _) = Self::build_inner(gens, degree, None, INTERNAL_SEED);
        chain
    }

    /// Chain for a group whose order is known to be `order`. If the
    /// generators in fact generate a smaller group the exact chain of that
    /// group is returned; the caller compares orders.
    pub fn build_known_order(gens: &[Permutation], degree: usize, order: u128) -> Self {
        let (chain, _) = Self::build_inner(gens, degree, Some(order), INTERNAL_SEED);
        chain
    }

    /// Does `<gens>` have order at least `bound`? Stops as soon as a partial
    /// chain certifies the bound.
    pub fn order_at_least(gens: &[Permutation], degree: usize, bound: u128) -> bool {
        let (chain, reached) = Self::build_inner(gens, degree, Some(bound), INTERNAL_SEED);
        reached || chain.order() >= bound
    }

    fn build_inner(
        gens: &[Permutation],
        degree: usize,
        stop_at: Option<u128>,
        seed: u64,
    ) -> (Self, bool) {
        let gens: Vec<Permutation> = gens
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| g.extended(degree))
            .collect();
        let mut chain = StabChain::empty(degree);
        let reached = |c: &StabChain| stop_at.is_some_and(|b| c.order() >= b);
        for g in &gens {
            chain.sift_and_add(g.clone());
        }
        if reached(&chain) {
            return (chain, true);
        }
        if gens.is_empty() {
            return (chain, false);
        }
        let mut pr = ProductReplacement::new(&gens, degree, seed);
        let mut quiet = 0;
        while quiet < RANDOM_STOP {
            if chain.sift_and_add(pr.next_element()) {
                quiet = 0;
                if reached(&chain) {
                    return (chain, true);
                }
            } else {
                quiet += 1;
            }
        }
        let hit = chain.verify(stop_at);
        (chain, hit)
    }

    /// Sifts `g`; a nontrivial residue becomes a new strong generator.
    fn sift_and_add(&mut self, g: Permutation) -> bool {
        let (residue, level) = self.sift_from(g, 0);
        if residue.is_identity() {
            return false;
        }
        self.add_residue(residue, 0, level);
        true
    }

    fn add_residue(&mut self, residue: Permutation, from: usize, to: usize) {
        if to == self.levels.len() {
            let base = residue
                .first_moved_point()
                .expect("residue is not the identity");
            self.levels.push(Level::new(base, self.degree));
        }
        for level in &mut self.levels[from..=to] {
            level.add_generator(residue.clone());
        }
    }

    /// Deterministic phase: checks all Schreier generators level by level.
    fn verify(&mut self, stop_at: Option<u128>) -> bool {
        let mut i = self.levels.len();
        while i > 0 {
            let lvl = i - 1;
            match self.failing_schreier_generator(lvl) {
                Some((residue, drop)) => {
                    self.add_residue(residue, lvl + 1, drop);
                    if stop_at.is_some_and(|b| self.order() >= b) {
                        return true;
                    }
                    i = drop + 1;
                }
                None => i -= 1,
            }
        }
        false
    }

    fn failing_schreier_generator(&self, lvl: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        for &beta in &level.orbit {
            let u_beta = level.transversal(beta);
            for s in &level.gens {
                let mut t = u_beta.clone();
                t.mul_right(s);
                let gamma = s.apply(beta);
                level.strip(gamma, &mut t);
                if t.is_identity() {
                    continue;
                }
                let (residue, drop) = self.sift_from(t, lvl + 1);
                if !residue.is_identity() {
                    return Some((residue, drop));
                }
            }
        }
        None
    }

    /// Sifts through levels `start..`; returns the residue and the level at
    /// which it dropped out (`levels.len()` if it passed every level).
    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let p = g.apply(level.base);
            if !level.in_orbit(p) {
                return (g, i);
            }
            level.strip(p, &mut g);
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub(crate) fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Strong generators (the generators of the top level).
    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map_or(&[], |l| &l.gens)
    }

    /// Orbit lengths of the successive point stabilizers.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() > self.degree
            && (self.degree..g.degree()).any(|i| g.apply(i as u32) != i as u32)
        {
            return false;
        }
        let g = if g.degree() == self.degree {
            g.clone()
        } else {
            Permutation::from_images_unchecked(
                (0..self.degree as u32).map(|i| g.apply(i)).collect(),
            )
        };
        self.sift_from(g, 0).0.is_identity()
    }

    /// Images of the base points; determines a group element uniquely.
    pub fn base_images(&self, g: &Permutation) -> Vec<u32> {
        self.levels.iter().map(|l| g.apply(l.base)).collect()
    }

    /// Explicit transversals of every level, in orbit order.
    pub fn transversals(&self) -> Vec<Vec<Permutation>> {
        self.levels
            .iter()
            .map(|l| l.orbit.iter().map(|&p| l.transversal(p)).collect())
            .collect()
    }

    /// Calls `f` on every element of the group.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation)) {
        let trans = self.transversals();
        let id = Permutation::identity(self.degree);
        fn rec(
            trans: &[Vec<Permutation>],
            depth: usize,
            acc: &Permutation,
            f: &mut dyn FnMut(&Permutation),
        ) {
            if depth == 0 {
                f(acc);
                return;
            }
            for u in &trans[depth - 1] {
                // g = v_{k-1} ... v_1 v_0 with v_i from level i
                rec(trans, depth - 1, &acc.compose(u), f);
            }
        }
        rec(&trans, trans.len(), &id, &mut f);
    }

    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = Vec::with_capacity(self.order().min(1 << 24) as usize);
        self.for_each_element(|g| out.push(g.clone()));
        out
    }
}
