//! Finds two products of transvection-type matrices that generate one of
//! the classical groups of the bundled catalog, and prints them as catalog
//! `matrix =` lines.
//!
//! Usage: `cargo run --example classical_gens -- su4 | sp6 | o8plus`
//!
//! - `su4`: unitary transvections `x -> x + h(x,v) v` over GF(4) for the
//!   hermitian form with antidiagonal Gram matrix and isotropic `v`.
//! - `sp6`: symplectic transvections over GF(2) for the alternating form
//!   with antidiagonal Gram matrix.
//! - `o8plus`: products of pairs of orthogonal reflections over GF(2) for the
//!   quadratic form `x1 x2 + x3 x4 + x5 x6 + x7 x8`.

use probgen::catalog::field::{Field, FieldElem};
use probgen::catalog::matrix::Matrix;
use probgen::catalog::{projective_group, projective_orbit_lengths};
use rand::Rng;

struct Target {
    q: u32,
    n: usize,
    orbit: usize,
    order: u128,
    gens: usize,
}

fn conj(f: &Field, a: FieldElem) -> FieldElem {
    if f.size() == 4 {
        f.mul(a, a)
    } else {
        a
    }
}

/// `I + c^T v`: the map `x -> x + (x . c) v`.
fn rank_one_update(f: &Field, c: &[FieldElem], v: &[FieldElem]) -> Matrix {
    let n = v.len();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let id = if i == j { f.one() } else { f.zero() };
                    f.add(id, f.mul(c[i], v[j]))
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).expect("square")
}

/// Coefficients of `x -> B(x, v)` for the antidiagonal Gram matrix,
/// conjugated for the hermitian case.
fn antidiagonal_functional(f: &Field, v: &[FieldElem]) -> Vec<FieldElem> {
    let n = v.len();
    (0..n).map(|i| conj(f, v[n - 1 - i])).collect()
}

fn hyperbolic_functional(v: &[FieldElem]) -> Vec<FieldElem> {
    (0..v.len()).map(|i| v[i ^ 1]).collect()
}

fn quadratic(f: &Field, v: &[FieldElem]) -> FieldElem {
    (0..v.len() / 2).fold(f.zero(), |acc, i| f.add(acc, f.mul(v[2 * i], v[2 * i + 1])))
}

fn random_vector(f: &Field, n: usize, rng: &mut impl Rng) -> Vec<FieldElem> {
    loop {
        let v: Vec<FieldElem> = (0..n).map(|_| FieldElem(rng.gen_range(0..f.size()) as u8)).collect();
        if v.iter().any(|&a| a != f.zero()) {
            return v;
        }
    }
}

fn generator(kind: &str, f: &Field, n: usize, rng: &mut impl Rng) -> Matrix {
    match kind {
        "su4" => loop {
            let v = random_vector(f, n, rng);
            let c = antidiagonal_functional(f, &v);
            let h = (0..n).fold(f.zero(), |acc, i| f.add(acc, f.mul(v[i], c[i])));
            if h == f.zero() {
                return rank_one_update(f, &c, &v);
            }
        },
        "sp6" => {
            let v = random_vector(f, n, rng);
            rank_one_update(f, &antidiagonal_functional(f, &v), &v)
        }
        _ => {
            let mut reflection = || loop {
                let v = random_vector(f, n, rng);
                if quadratic(f, &v) == f.one() {
                    return rank_one_update(f, &hyperbolic_functional(&v), &v);
                }
            };
            let a = reflection();
            let b = reflection();
            a.mul(f, &b)
        }
    }
}

/// A product of `n` generators, so that two candidates usually generate.
fn candidate(kind: &str, f: &Field, n: usize, rng: &mut impl Rng) -> Matrix {
    (0..n).fold(Matrix::identity(f, n), |acc, _| acc.mul(f, &generator(kind, f, n, rng)))
}

fn main() {
    let kind = std::env::args().nth(1).unwrap_or_else(|| "su4".into());
    let target = match kind.as_str() {
        "su4" => Target { q: 4, n: 4, orbit: 40, order: 25920, gens: 2 },
        "sp6" => Target { q: 2, n: 6, orbit: 63, order: 1451520, gens: 2 },
        "o8plus" => Target { q: 2, n: 8, orbit: 120, order: 174182400, gens: 2 },
        other => panic!("unknown kind {other}"),
    };
    let f = Field::new(target.q).unwrap();
    let mut rng = probgen::random::rng_from_seed(1);
    for attempt in 0.. {
        let mats: Vec<Matrix> = (0..target.gens).map(|_| candidate(&kind, &f, target.n, &mut rng)).collect();
        let Ok(g) = projective_group(&f, target.n, &mats, Some(target.orbit)) else {
            continue;
        };
        if g.order() == target.order {
            let lengths = projective_orbit_lengths(&f, target.n, &mats).unwrap();
            println!("# attempt {attempt}, projective orbit lengths {lengths:?}");
            for m in &mats {
                println!("matrix = {}", m.to_text(&f));
            }
            return;
        }
    }
}
