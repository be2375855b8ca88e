//! Square matrices over small fields and their action on projective points.

use rustc_hash::FxHashMap;

use super::field::{Field, FieldElem};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<FieldElem>,
}

impl Matrix {
    pub fn identity(field: &Field, n: usize) -> Self {
        let mut entries = vec![field.zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = field.one();
        }
        Matrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<FieldElem>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("matrix is not square".into()));
        }
        Ok(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Parses rows separated by `/`, entries separated by spaces.
    pub fn parse(field: &Field, text: &str) -> Result<Self> {
        let rows = text
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|t| field.parse(t))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    /// Inverse of [`parse`](Self::parse).
    pub fn to_text(&self, field: &Field) -> String {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|&a| field.token(a))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" / ")
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut entries = vec![field.zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = field.zero();
                for k in 0..n {
                    acc = field.add(acc, field.mul(self.get(i, k), other.get(k, j)));
                }
                entries[i * n + j] = acc;
            }
        }
        Matrix { n, entries }
    }

    /// Row vector times matrix.
    pub fn apply(&self, field: &Field, v: &[FieldElem]) -> Vec<FieldElem> {
        (0..self.n)
            .map(|j| {
                (0..self.n).fold(field.zero(), |acc, k| {
                    field.add(acc, field.mul(v[k], self.get(k, j)))
                })
            })
            .collect()
    }

    pub fn rank(&self, field: &Field) -> usize {
        let n = self.n;
        let mut m: Vec<Vec<FieldElem>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| m[r][col] != field.zero()) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = field.inv(m[rank][col]).expect("pivot is nonzero");
            for r in 0..n {
                if r != rank && m[r][col] != field.zero() {
                    let factor = field.mul(m[r][col], inv);
                    for c in 0..n {
                        let t = field.mul(factor, m[rank][c]);
                        m[r][c] = field.sub(m[r][c], t);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self, field: &Field) -> bool {
        self.rank(field) == self.n
    }
}

/// The points of the projective space of dimension `n - 1`: nonzero row
/// vectors scaled so that their first nonzero coordinate is 1, in
/// lexicographic order of the coordinates.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    field: Field,
    points: Vec<Vec<FieldElem>>,
    index: FxHashMap<Vec<FieldElem>, u32>,
}

impl ProjectiveSpace {
    pub fn new(field: &Field, n: usize, limit: usize) -> Result<Self> {
        let q = field.size() as u128;
        let count = (q.pow(n as u32) - 1) / (q - 1);
        if count > limit as u128 {
            return Err(Error::StorageCeiling {
                what: "projective points",
                needed: count,
                limit: limit as u128,
            });
        }
        let mut points = Vec::with_capacity(count as usize);
        for lead in 0..n {
            let free = n - lead - 1;
            for code in 0..(q as usize).pow(free as u32) {
                let mut v = vec![field.zero(); n];
                v[lead] = field.one();
                let mut c = code;
                for j in (lead + 1..n).rev() {
                    v[j] = FieldElem((c % q as usize) as u8);
                    c /= q as usize;
                }
                points.push(v);
            }
        }
        points.sort();
        let index = points
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i as u32))
            .collect();
        Ok(ProjectiveSpace {
            field: field.clone(),
            points,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<FieldElem>] {
        &self.points
    }

    /// Scales a nonzero vector to its normalized representative.
    pub fn normalize(&self, v: &[FieldElem]) -> Option<Vec<FieldElem>> {
        let f = &self.field;
        let lead = v.iter().find(|&&a| a != f.zero())?;
        let inv = f.inv(*lead).expect("nonzero");
        Some(v.iter().map(|&a| f.mul(a, inv)).collect())
    }

    /// Index of the point spanned by the nonzero vector `v`.
    pub fn index_of(&self, v: &[FieldElem]) -> Option<usize> {
        let v = self.normalize(v)?;
        self.index.get(&v).map(|&i| i as usize)
    }

    /// The permutation of the points induced by an invertible matrix.
    pub fn permutation(&self, m: &Matrix) -> Result<Permutation> {
        if !m.is_invertible(&self.field) {
            return Err(Error::InvalidArgument("singular matrix".into()));
        }
        let images = self
            .points
            .iter()
            .map(|v| {
                let w = m.apply(&self.field, v);
                self.index_of(&w).expect("invertible matrices map points to points") as u32
            })
            .collect();
        Permutation::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_line_counts() {
        for (q, n, count) in [(2, 3, 7), (4, 4, 85), (3, 2, 4), (9, 2, 10), (2, 8, 255)] {
            let f = Field::new(q).unwrap();
            assert_eq!(ProjectiveSpace::new(&f, n, 1 << 20).unwrap().len(), count);
        }
    }

    #[test]
    fn scaling_preserves_the_point() {
        let f = Field::new(9).unwrap();
        let space = ProjectiveSpace::new(&f, 3, 1000).unwrap();
        for (i, v) in space.points().iter().enumerate() {
            for c in f.elements().skip(1) {
                let w: Vec<FieldElem> = v.iter().map(|&a| f.mul(a, c)).collect();
                assert_eq!(space.index_of(&w), Some(i));
            }
        }
    }

    #[test]
    fn matrix_parsing_and_products() {
        let f = Field::new(4).unwrap();
        let m = Matrix::parse(&f, "0 1 / z z^2").unwrap();
        assert_eq!(Matrix::parse(&f, &m.to_text(&f)).unwrap(), m);
        assert!(m.is_invertible(&f));
        let singular = Matrix::parse(&f, "1 z / 1 z").unwrap();
        assert!(!singular.is_invertible(&f));
        let space = ProjectiveSpace::new(&f, 2, 100).unwrap();
        assert!(space.permutation(&singular).is_err());
        let id = Matrix::identity(&f, 2);
        assert_eq!(m.mul(&f, &id), m);
        let pm = space.permutation(&m).unwrap();
        let pmm = space.permutation(&m.mul(&f, &m)).unwrap();
        assert_eq!(pm.compose(&pm), pmm);
        assert!(Matrix::parse(&f, "1 0 / 0").is_err());
    }
}
