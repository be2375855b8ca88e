//! Small finite fields `GF(q)`, `q = p^k <= 9`.
//!
//! An element is stored as the integer whose base-`p` digits are the
//! coefficients of its residue polynomial (constant term first). The
//! residues are taken modulo a fixed Conway polynomial, so the class of `x`
//! (or a fixed primitive root for prime fields) is a primitive element `z`.

use std::fmt;

use crate::error::{Error, Result};

/// An element of a [`Field`], by its residue code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(pub u8);

#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    q: u32,
    p: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    /// `powers[k] = z^k` for `0 <= k < q - 1`.
    powers: Vec<u8>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// Characteristic, degree and the low coefficients of the monic modulus.
fn parameters(q: u32) -> Option<(u32, u32, Vec<u32>)> {
    match q {
        2 => Some((2, 1, vec![1])),
        3 => Some((3, 1, vec![1])),
        4 => Some((2, 2, vec![1, 1])),
        5 => Some((5, 1, vec![3])),
        7 => Some((7, 1, vec![4])),
        8 => Some((2, 3, vec![1, 1, 0])),
        9 => Some((3, 2, vec![2, 2])),
        _ => None,
    }
}

impl Field {
    pub fn new(q: u32) -> Result<Self> {
        let (p, k, modulus) = parameters(q)
            .ok_or_else(|| Error::InvalidArgument(format!("unsupported field size {q}")))?;
        let digits = |mut a: u32| -> Vec<u32> {
            (0..k)
                .map(|_| {
                    let d = a % p;
                    a /= p;
                    d
                })
                .collect()
        };
        let code = |ds: &[u32]| ds.iter().rev().fold(0, |acc, &d| acc * p + d);
        let mut add = vec![0u8; (q * q) as usize];
        let mut mul = vec![0u8; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = code(&sum) as u8;
                // Schoolbook product, then reduce with x^k = -(modulus low terms).
                let mut prod = vec![0u32; 2 * k as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for d in (k as usize..prod.len()).rev() {
                    let c = prod[d];
                    if c == 0 {
                        continue;
                    }
                    prod[d] = 0;
                    for (i, m) in modulus.iter().enumerate() {
                        let t = d - k as usize + i;
                        prod[t] = (prod[t] + (p - c) * m) % p;
                    }
                }
                mul[(a * q + b) as usize] = code(&prod[..k as usize]) as u8;
            }
        }
        let z = if k == 1 { (p - modulus[0]) % p } else { p };
        let mut powers = Vec::with_capacity(q as usize - 1);
        let mut x = 1u8;
        for _ in 0..q - 1 {
            powers.push(x);
            x = mul[(x as u32 * q + z) as usize];
        }
        let mut inv = vec![0u8; q as usize];
        for (e, &a) in powers.iter().enumerate() {
            let back = (q as usize - 1 - e) % (q as usize - 1);
            inv[a as usize] = powers[back];
        }
        let field = Field {
            q,
            p,
            add,
            mul,
            inv,
            powers,
        };
        let mut seen = field.powers.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), q as usize - 1, "modulus must be primitive");
        Ok(field)
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    /// The fixed primitive element `z`.
    pub fn primitive(&self) -> FieldElem {
        FieldElem(self.powers[1 % self.powers.len()])
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q as u8).map(FieldElem)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.add[a.0 as usize * self.q as usize + b.0 as usize])
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.mul[a.0 as usize * self.q as usize + b.0 as usize])
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        self.elements()
            .find(|&b| self.add(a, b) == self.zero())
            .expect("additive inverse exists")
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        (a.0 != 0).then(|| FieldElem(self.inv[a.0 as usize]))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        let mut result = self.one();
        for _ in 0..e {
            result = self.mul(result, a);
        }
        result
    }

    /// `z^e` for any integer `e`.
    pub fn z_power(&self, e: i64) -> FieldElem {
        let n = self.powers.len() as i64;
        FieldElem(self.powers[e.rem_euclid(n) as usize])
    }

    /// Exponent `e` with `z^e = a`, for nonzero `a`.
    pub fn log(&self, a: FieldElem) -> Option<u32> {
        self.powers.iter().position(|&x| x == a.0).map(|e| e as u32)
    }

    /// Parses `0`, `1`, `z` or `z^e`.
    pub fn parse(&self, token: &str) -> Result<FieldElem> {
        let bad = || Error::Parse(format!("bad field element {token:?} for GF({})", self.q));
        match token.trim() {
            "0" => Ok(self.zero()),
            "1" => Ok(self.one()),
            "z" => Ok(self.primitive()),
            t => {
                let e = t.strip_prefix("z^").ok_or_else(bad)?;
                let e: i64 = e.parse().map_err(|_| bad())?;
                Ok(self.z_power(e))
            }
        }
    }

    /// The token [`parse`](Self::parse) reads back as `a`.
    pub fn token(&self, a: FieldElem) -> String {
        match a.0 {
            0 => "0".into(),
            1 => "1".into(),
            _ => match self.log(a).expect("nonzero") {
                1 => "z".into(),
                e => format!("z^{e}"),
            },
        }
    }
}
