//! Exhaustive searches over products of lists of point sets.

/// A set of points as a bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    words: Vec<u64>,
}

impl PointSet {
    pub fn empty(degree: usize) -> Self {
        PointSet {
            words: vec![0; degree.div_ceil(64)],
        }
    }

    pub fn from_points(points: &[u32], degree: usize) -> Self {
        let mut s = Self::empty(degree);
        for &p in points {
            s.insert(p);
        }
        s
    }

    pub fn full(degree: usize) -> Self {
        let points: Vec<u32> = (0..degree as u32).collect();
        Self::from_points(&points, degree)
    }

    pub fn insert(&mut self, p: u32) {
        let w = p as usize / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (p % 64);
    }

    pub fn contains(&self, p: u32) -> bool {
        self.words
            .get(p as usize / 64)
            .is_some_and(|w| w & (1 << (p % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn points(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(i as u32 * 64 + w.trailing_zeros());
                w &= w - 1;
            }
        }
        out
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        let n = self.words.len().max(other.words.len());
        PointSet {
            words: (0..n).map(|i| self.word(i) | other.word(i)).collect(),
        }
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        let n = self.words.len().max(other.words.len());
        PointSet {
            words: (0..n).map(|i| self.word(i) & other.word(i)).collect(),
        }
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        (0..self.words.len()).all(|i| self.word(i) & !other.word(i) == 0)
    }

    pub fn meets(&self, other: &PointSet) -> bool {
        (0..self.words.len().min(other.words.len())).any(|i| self.word(i) & other.word(i) != 0)
    }
}

/// What a tuple of point sets must satisfy.
#[derive(Clone, Debug)]
pub enum TuplePredicate {
    /// The union contains the target set.
    CoverAll(PointSet),
    /// The sets have no point in common.
    EmptyIntersection,
    /// The union meets every member of the family.
    HitsEvery(Vec<PointSet>),
}

impl TuplePredicate {
    pub fn holds(&self, tuple: &[&PointSet]) -> bool {
        match self {
            TuplePredicate::CoverAll(target) => {
                let union = union_of(tuple);
                target.is_subset(&union)
            }
            TuplePredicate::EmptyIntersection => {
                let mut it = tuple.iter();
                let Some(first) = it.next() else {
                    return false;
                };
                it.fold((*first).clone(), |acc, s| acc.intersection(s))
                    .is_empty()
            }
            TuplePredicate::HitsEvery(family) => {
                let union = union_of(tuple);
                family.iter().all(|f| f.meets(&union))
            }
        }
    }
}

fn union_of(tuple: &[&PointSet]) -> PointSet {
    tuple
        .iter()
        .fold(PointSet::empty(0), |acc, s| acc.union(s))
}

/// The first tuple, in lexicographic order of list positions, whose entries
/// satisfy `prop`. Returns the positions.
pub fn first_tuple_with<T>(lists: &[Vec<T>], mut prop: impl FnMut(&[&T]) -> bool) -> Option<Vec<usize>> {
    if lists.is_empty() || lists.iter().any(|l| l.is_empty()) {
        return None;
    }
    let k = lists.len();
    let mut idx = vec![0usize; k];
    let mut current: Vec<&T> = lists.iter().map(|l| &l[0]).collect();
    loop {
        if prop(&current) {
            return Some(idx);
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < lists[pos].len() {
                current[pos] = &lists[pos][idx[pos]];
                break;
            }
            idx[pos] = 0;
            current[pos] = &lists[pos][0];
        }
    }
}

/// The first tuple of point sets satisfying `predicate`.
pub fn tuple_cover_search(lists: &[Vec<PointSet>], predicate: &TuplePredicate) -> Option<Vec<PointSet>> {
    first_tuple_with(lists, |t| predicate.holds(t)).map(|idx| {
        idx.iter()
            .zip(lists)
            .map(|(&i, l)| l[i].clone())
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[u32]) -> PointSet {
        PointSet::from_points(points, 8)
    }

    #[test]
    fn set_operations() {
        let a = set(&[0, 3, 5]);
        let b = set(&[3, 7]);
        assert_eq!(a.union(&b).points(), vec![0, 3, 5, 7]);
        assert_eq!(a.intersection(&b).points(), vec![3]);
        assert!(a.meets(&b));
        assert!(!a.meets(&set(&[1, 2])));
        assert!(set(&[3]).is_subset(&a));
        assert_eq!(PointSet::full(70).len(), 70);
    }

    #[test]
    fn singleton_lists_return_their_tuple() {
        let target = PointSet::full(8);
        let lists = vec![vec![target.clone()], vec![target.clone()], vec![target.clone()]];
        let found = tuple_cover_search(&lists, &TuplePredicate::CoverAll(target.clone())).unwrap();
        assert_eq!(found.len(), 3);
    }

    #[test]
    fn lexicographic_order() {
        let lists = vec![vec![1, 2, 3], vec![10, 20], vec![100, 200]];
        let first = first_tuple_with(&lists, |t| t.iter().copied().sum::<i32>() >= 222).unwrap();
        assert_eq!(first, vec![1, 1, 1]);
        let first = first_tuple_with(&lists, |t| *t[0] == 3 && *t[2] == 100).unwrap();
        assert_eq!(first, vec![2, 0, 0]);
        assert!(first_tuple_with(&lists, |_| false).is_none());
    }

    #[test]
    fn predicates() {
        let lists = vec![
            vec![set(&[0, 1])],
            vec![set(&[1, 2]), set(&[2, 3])],
            vec![set(&[3]), set(&[4, 5, 6, 7])],
        ];
        let cover = TuplePredicate::CoverAll(PointSet::full(8));
        let found = tuple_cover_search(&lists, &cover).unwrap();
        assert_eq!(found[1], set(&[2, 3]));
        assert!(tuple_cover_search(&lists, &TuplePredicate::EmptyIntersection).is_some());
        let family = vec![set(&[7]), set(&[0])];
        let hit = tuple_cover_search(&lists, &TuplePredicate::HitsEvery(family)).unwrap();
        assert_eq!(hit[2], set(&[4, 5, 6, 7]));
    }
}
