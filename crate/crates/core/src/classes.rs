//! Conjugacy classes, centralizers, conjugacy tests and power maps.
//!
//! Classes are found by sampling random elements (and their powers); every
//! element not yet stored has its whole conjugation orbit expanded
//! breadth-first under the group generators. Stored elements are keyed by
//! their base images, which identify an element of the group uniquely and
//! take far less room than full image arrays. A breadth-first tree records,
//! for each stored element, its parent and the generator that conjugated the
//! parent onto it, so a conjugating element can be read off for any element.
//!
//! Classes are ordered by element order, then class size, then canonical
//! representative (the lexicographically least image array in the class).
//! Letters count classes of equal element order in that order: `2A`, `2B`...

use std::fmt;
use std::hash::Hasher;
use std::sync::Arc;

use hashbrown::HashTable;
use num_integer::Integer;
use once_cell::sync::OnceCell;
use rustc_hash::FxHasher;

use crate::chain::StabChain;
use crate::coset::Limits;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::orbit::{on_set, set_stabilizer, stabilizer_from_orbit, SchreierOrbit};
use crate::perm::Permutation;

/// Name of a class: element order plus a letter ordinal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassLabel {
    pub element_order: u64,
    pub class_size: u128,
    /// 0 for `A`, 1 for `B`, ...
    pub ordinal: usize,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.element_order, letters(self.ordinal))
    }
}

fn letters(mut n: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'A' + (n % 26) as u8);
        if n < 26 {
            break;
        }
        n = n / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).expect("ascii")
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub index: usize,
    pub representative: Permutation,
    pub element_order: u64,
    pub size: u128,
    pub centralizer_order: u128,
    pub label: ClassLabel,
}

/// Hash table of group elements keyed by base images.
struct ElementStore {
    stride: usize,
    keys: Vec<u32>,
    parent: Vec<u32>,
    via: Vec<u8>,
    table: HashTable<u32>,
}

fn hash_key(key: &[u32]) -> u64 {
    let mut h = FxHasher::default();
    for &k in key {
        h.write_u32(k);
    }
    h.finish()
}

impl ElementStore {
    fn new(stride: usize) -> Self {
        ElementStore {
            stride,
            keys: Vec::new(),
            parent: Vec::new(),
            via: Vec::new(),
            table: HashTable::new(),
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    fn key(&self, i: u32) -> &[u32] {
        let s = i as usize * self.stride;
        &self.keys[s..s + self.stride]
    }

    fn find(&self, key: &[u32]) -> Option<u32> {
        self.table
            .find(hash_key(key), |&i| self.key(i) == key)
            .copied()
    }

    fn insert(&mut self, key: &[u32], parent: u32, via: u8) -> u32 {
        let idx = self.parent.len() as u32;
        self.keys.extend_from_slice(key);
        self.parent.push(parent);
        self.via.push(via);
        let stride = self.stride;
        let keys = &self.keys;
        self.table.insert_unique(hash_key(key), idx, |&i| {
            let s = i as usize * stride;
            hash_key(&keys[s..s + stride])
        });
        idx
    }
}

/// The complete class list of a group, with its element store.
pub struct ClassList {
    degree: usize,
    group_order: u128,
    base: Vec<u32>,
    gens: Vec<Permutation>,
    classes: Vec<ConjugacyClass>,
    store: ElementStore,
    /// Start offsets of the classes in the store, in discovery order.
    starts: Vec<u32>,
    /// Canonical index of each discovered class.
    canonical_of: Vec<usize>,
    /// Store index of each canonical class's first element and the
    /// conjugator from that element to the canonical representative.
    roots: Vec<(u32, Permutation)>,
    centralizers: Vec<OnceCell<PermGroup>>,
}

impl fmt::Debug for ClassList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassList")
            .field("group_order", &self.group_order)
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl ClassList {
    fn compute(group: &PermGroup, limits: &Limits) -> Result<Self> {
        let order = group.order();
        if order > limits.class_storage {
            return Err(Error::StorageCeiling {
                what: "conjugacy class enumeration",
                needed: order,
                limit: limits.class_storage,
            });
        }
        let chain = group.chain();
        let base = chain.base();
        let gens: Vec<Permutation> = group
            .generators()
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        assert!(gens.len() < 256, "too many generators for the class store");
        let mut list = ClassList {
            degree: group.degree(),
            group_order: order,
            base: base.clone(),
            gens,
            classes: Vec::new(),
            store: ElementStore::new(base.len()),
            starts: Vec::new(),
            canonical_of: Vec::new(),
            roots: Vec::new(),
            centralizers: Vec::new(),
        };
        let mut found: u128 = 0;
        // (root store index, least element, its store index)
        let mut discovered: Vec<(u32, Permutation)> = Vec::new();
        let identity = group.identity();
        found += list.expand(&identity, &mut discovered);
        let mut source = group.internal_random_source();
        let mut draws: u64 = 0;
        while found < order {
            draws += 1;
            if draws > 50_000_000 {
                return Err(Error::Verification(
                    "class enumeration did not terminate".into(),
                ));
            }
            let g = source.next_element();
            let m = g.order();
            for d in divisors(m) {
                if d == m {
                    continue;
                }
                let x = g.pow(d as i64);
                if list.lookup(&x).is_none() {
                    found += list.expand(&x, &mut discovered);
                }
            }
        }
        if found != order {
            return Err(Error::Verification(format!(
                "class sizes sum to {found}, group order {order}"
            )));
        }
        list.canonicalize(discovered);
        Ok(list)
    }

    fn key_of(&self, x: &Permutation) -> Vec<u32> {
        self.base.iter().map(|&b| x.apply(b)).collect()
    }

    fn lookup(&self, x: &Permutation) -> Option<u32> {
        self.store.find(&self.key_of(x))
    }

    /// Expands the conjugation orbit of `x`; returns its size.
    fn expand(&mut self, x: &Permutation, discovered: &mut Vec<(u32, Permutation)>) -> u128 {
        let start = self.store.len() as u32;
        self.starts.push(start);
        let root = self.store.insert(&self.key_of(x), u32::MAX, 0);
        let mut least = x.clone();
        let mut frontier = vec![x.clone()];
        let mut frontier_idx = vec![root];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            let mut next_idx = Vec::new();
            for (y, &yi) in frontier.iter().zip(&frontier_idx) {
                for (k, g) in self.gens.iter().enumerate() {
                    let z = y.conjugate(g);
                    let key = self.key_of(&z);
                    if self.store.find(&key).is_none() {
                        let zi = self.store.insert(&key, yi, k as u8);
                        if z < least {
                            least = z.clone();
                        }
                        next.push(z);
                        next_idx.push(zi);
                    }
                }
            }
            frontier = next;
            frontier_idx = next_idx;
        }
        discovered.push((root, least));
        (self.store.len() as u32 - start) as u128
    }

    fn canonicalize(&mut self, discovered: Vec<(u32, Permutation)>) {
        let n = discovered.len();
        let mut info: Vec<(u64, u128, Permutation, usize)> = discovered
            .iter()
            .enumerate()
            .map(|(d, (_, rep))| (rep.order(), self.discovered_size(d), rep.clone(), d))
            .collect();
        info.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
        self.canonical_of = vec![0; n];
        let mut ordinal = 0;
        for (ci, (ord, size, rep, d)) in info.into_iter().enumerate() {
            self.canonical_of[d] = ci;
            if ci > 0 && self.classes[ci - 1].element_order == ord {
                ordinal += 1;
            } else {
                ordinal = 0;
            }
            let root = discovered[d].0;
            let rep_idx = self.lookup(&rep).expect("representative is stored");
            let conj = self.conjugator_from_root(rep_idx);
            self.roots.push((root, conj));
            self.classes.push(ConjugacyClass {
                index: ci,
                representative: rep,
                element_order: ord,
                size,
                centralizer_order: self.group_order / size,
                label: ClassLabel {
                    element_order: ord,
                    class_size: size,
                    ordinal,
                },
            });
        }
        self.centralizers = (0..n).map(|_| OnceCell::new()).collect();
    }

    fn discovered_size(&self, d: usize) -> u128 {
        let end = self
            .starts
            .get(d + 1)
            .copied()
            .unwrap_or(self.store.len() as u32);
        (end - self.starts[d]) as u128
    }

    /// Conjugator `c` with `root^c = element`, where root is the first
    /// stored element of the element's class.
    fn conjugator_from_root(&self, mut idx: u32) -> Permutation {
        let mut word = Vec::new();
        while self.store.parent[idx as usize] != u32::MAX {
            word.push(self.store.via[idx as usize]);
            idx = self.store.parent[idx as usize];
        }
        let mut c = Permutation::identity(self.degree);
        for &k in word.iter().rev() {
            c.mul_right(&self.gens[k as usize]);
        }
        c
    }

    fn discovered_class_of(&self, idx: u32) -> usize {
        self.starts.partition_point(|&s| s <= idx) - 1
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn group_order(&self) -> u128 {
        self.group_order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, i: usize) -> &ConjugacyClass {
        &self.classes[i]
    }

    /// Index of the class of `x`. `x` must lie in the group: the store only
    /// compares base images.
    pub fn class_index_of(&self, x: &Permutation) -> Option<usize> {
        self.lookup(x)
            .map(|idx| self.canonical_of[self.discovered_class_of(idx)])
    }

    /// Class index of `x` and a conjugator `c` with `rep^c = x`.
    pub fn conjugator_to(&self, x: &Permutation) -> Option<(usize, Permutation)> {
        let idx = self.lookup(x)?;
        let ci = self.canonical_of[self.discovered_class_of(idx)];
        let to_x = self.conjugator_from_root(idx);
        let to_rep = &self.roots[ci].1;
        Some((ci, to_rep.inverse().compose(&to_x)))
    }

    /// Finds a class by its label, e.g. `"5A"`.
    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.label.to_string().eq_ignore_ascii_case(label.trim()))
    }

    pub fn labels(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.label.to_string()).collect()
    }

    /// Number of elements held in the store.
    pub fn stored_elements(&self) -> usize {
        self.store.len()
    }

    /// Centralizer of the representative of class `i`.
    pub fn centralizer_of_class(&self, group: &PermGroup, i: usize) -> PermGroup {
        self.centralizers[i]
            .get_or_init(|| self.compute_centralizer(group, i))
            .clone()
    }

    fn compute_centralizer(&self, group: &PermGroup, i: usize) -> PermGroup {
        let class = &self.classes[i];
        let target = class.centralizer_order;
        let rep = &class.representative;
        let degree = self.degree;
        if class.size == 1 {
            return group.clone();
        }
        let mut gens = vec![rep.clone()];
        let mut chain = StabChain::build_known_order(&gens, degree, target);
        let mut source = group.internal_random_source();
        while chain.order() < target {
            let g = source.next_element();
            let y = rep.conjugate(&g);
            let (_, c) = self.conjugator_to(&y).expect("conjugates stay in the class");
            let h = g.compose(&c.inverse());
            if chain.contains(&h) {
                continue;
            }
            gens.push(h);
            chain = StabChain::build_known_order(&gens, degree, target);
        }
        PermGroup::from_parts(degree, gens, chain)
    }

    /// Classes containing `rep_i^k` for every `k` coprime to the order.
    pub fn galois_family(&self, i: usize) -> Vec<usize> {
        let class = &self.classes[i];
        let m = class.element_order;
        let mut family: Vec<usize> = (1..=m.max(1))
            .filter(|k| k.gcd(&m) == 1)
            .map(|k| {
                self.class_index_of(&class.representative.pow(k as i64))
                    .expect("powers stay in the group")
            })
            .collect();
        family.sort_unstable();
        family.dedup();
        family
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub(crate) fn prime_divisors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The class list of `group`, computed once and cached on the group.
pub fn conjugacy_classes(group: &PermGroup) -> Result<Arc<ClassList>> {
    conjugacy_classes_with_limits(group, &Limits::default())
}

pub fn conjugacy_classes_with_limits(group: &PermGroup, limits: &Limits) -> Result<Arc<ClassList>> {
    group
        .classes
        .get_or_try_init(|| ClassList::compute(group, limits).map(Arc::new))
        .cloned()
}

/// Centralizer of `x` in `group`; `x` must lie in the group.
pub fn centralizer(group: &PermGroup, x: &Permutation) -> Result<PermGroup> {
    let x = group.member(x)?;
    if group.cached_classes().is_some() || group.order() <= Limits::default().class_storage {
        let list = conjugacy_classes(group)?;
        let (i, c) = list
            .conjugator_to(&x)
            .ok_or_else(|| Error::Verification("element missing from class store".into()))?;
        let cent = list.centralizer_of_class(group, i);
        return Ok(if c.is_identity() { cent } else { cent.conjugate(&c) });
    }
    centralizer_in(group, &x, Limits::default().class_storage as usize)
}

/// Centralizer in `group` of an arbitrary permutation `x` of the same
/// degree, as the stabilizer of `x` under conjugation. The conjugation orbit
/// must not exceed `limit` elements.
pub fn centralizer_in(group: &PermGroup, x: &Permutation, limit: usize) -> Result<PermGroup> {
    let x = group.normalize(x)?;
    let act = |y: &Permutation, g: &Permutation| y.conjugate(g);
    let orbit = SchreierOrbit::build(x, group.generators(), act, limit)?;
    Ok(stabilizer_from_orbit(group, &orbit, act))
}

/// Decides conjugacy of `x` and `y` in `group`, returning a witness `c`
/// with `x^c = y`.
pub fn are_conjugate(group: &PermGroup, x: &Permutation, y: &Permutation) -> Result<Option<Permutation>> {
    let x = group.member(x)?;
    let y = group.member(y)?;
    if x.cycle_type() != y.cycle_type() {
        return Ok(None);
    }
    if x == y {
        return Ok(Some(group.identity()));
    }
    if let Some(list) = group.cached_classes() {
        let (i, cx) = list.conjugator_to(&x).expect("x lies in the group");
        let (j, cy) = list.conjugator_to(&y).expect("y lies in the group");
        return Ok((i == j).then(|| cx.inverse().compose(&cy)));
    }
    conjugate_by_moved_points(group, &x, &y)
}

/// Conjugacy test through setwise stabilizers of moved-point sets: any
/// conjugator maps the moved points of `x` onto those of `y`.
pub(crate) fn conjugate_by_moved_points(
    group: &PermGroup,
    x: &Permutation,
    y: &Permutation,
) -> Result<Option<Permutation>> {
    let limit = Limits::default().class_storage as usize;
    let mx = x.moved_points();
    let my = y.moved_points();
    let (x1, u) = if mx == my {
        (x.clone(), group.identity())
    } else {
        let act = |s: &Vec<u32>, g: &Permutation| on_set(s, g);
        let orbit = SchreierOrbit::build(mx, group.generators(), act, limit)?;
        match orbit.position(&my) {
            None => return Ok(None),
            Some(i) => {
                let u = orbit.transversal(i, group.generators(), group.degree());
                (x.conjugate(&u), u)
            }
        }
    };
    let stab = set_stabilizer(group, &my)?;
    let act = |z: &Permutation, g: &Permutation| z.conjugate(g);
    let orbit = SchreierOrbit::build(x1, stab.generators(), act, limit)?;
    Ok(orbit
        .position(y)
        .map(|i| u.compose(&orbit.transversal(i, stab.generators(), group.degree()))))
}

/// For each class `i`, the class of `rep_i^k`.
pub fn power_map(group: &PermGroup, k: i64) -> Result<Vec<usize>> {
    let list = conjugacy_classes(group)?;
    Ok(list
        .classes()
        .iter()
        .map(|c| {
            list.class_index_of(&c.representative.pow(k))
                .expect("powers stay in the group")
        })
        .collect())
}

/// Classes of elements of the given prime orders lying outside the normal
/// subgroup `normal`, found inside Sylow subgroups and fused in `group`.
pub fn classes_of_prime_order(
    group: &PermGroup,
    primes: &[u64],
    normal: &PermGroup,
) -> Result<Vec<ConjugacyClass>> {
    for n in normal.generators() {
        for g in group.generators() {
            if !normal.contains(&n.conjugate(g)) {
                return Err(Error::InvalidArgument(
                    "subgroup is not normalized by the group".into(),
                ));
            }
        }
    }
    let list = conjugacy_classes(group)?;
    let mut found: Vec<usize> = Vec::new();
    for &p in primes {
        if !group.order().is_multiple_of(p as u128) {
            continue;
        }
        let sylow = crate::subgroups::sylow_subgroup(group, p)?;
        let local = conjugacy_classes(&sylow)?;
        for c in local.classes() {
            if c.element_order != p || normal.contains(&c.representative) {
                continue;
            }
            let gi = list
                .class_index_of(&c.representative)
                .expect("Sylow subgroup lies in the group");
            if !found.contains(&gi) {
                found.push(gi);
            }
        }
    }
    found.sort_unstable();
    Ok(found.into_iter().map(|i| list.get(i).clone()).collect())
}

/// One class of generators for each class of maximal cyclic subgroups.
pub fn maximally_cyclic_representatives(group: &PermGroup) -> Result<Vec<usize>> {
    let list = conjugacy_classes(group)?;
    let n = list.len();
    let mut keep = vec![true; n];
    for p in prime_divisors(group.order()) {
        let pmap = power_map(group, p as i64)?;
        for i in 0..n {
            if list.get(pmap[i]).element_order < list.get(i).element_order {
                keep[pmap[i]] = false;
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        if !keep[i] {
            continue;
        }
        let family = list.galois_family(i);
        if family[0] == i {
            out.push(i);
        }
    }
    Ok(out)
}

/// Classes whose (element order, class size) occurs in `profiles`.
pub fn classes_matching_profile(
    group: &PermGroup,
    profiles: &[(u64, u128)],
) -> Result<Vec<ConjugacyClass>> {
    let list = conjugacy_classes(group)?;
    Ok(list
        .classes()
        .iter()
        .filter(|c| profiles.contains(&(c.element_order, c.size)))
        .cloned()
        .collect())
}
