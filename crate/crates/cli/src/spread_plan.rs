//! Which class tuples a uniform spread check has to examine.
//!
//! Every element has a power of prime order, and a power generating with
//! `s` implies the element does too, so tuple entries can be taken of prime
//! order, one class per Galois family. A class `g` with `sigma(g, s) = 0`
//! generates with every conjugate of `s` and can be left out. A tuple whose
//! `sigma` values sum to less than 1 has a good conjugate of `s` by counting.

use probgen::probgen::{Rational, SigmaVector};
use probgen::ClassList;

/// Prime order classes with a nonzero `sigma` value, the smallest index of
/// each Galois family.
pub fn default_candidates(classes: &ClassList, psi: &SigmaVector) -> Vec<usize> {
    let mut out: Vec<usize> = classes
        .classes()
        .iter()
        .skip(1)
        .filter(|c| is_prime(c.element_order) && psi.values[c.index] > Rational::default())
        .map(|c| classes.galois_family(c.index)[0])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// All multisets of size `k` over `items`, each in nondecreasing position
/// order, in lexicographic order.
pub fn multisets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn extend(items: &[usize], from: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in from..items.len() {
            current.push(items[i]);
            extend(items, i, k, current, out);
            current.pop();
        }
    }
    extend(items, 0, k, &mut current, &mut out);
    out
}

/// The tuples split into those settled by the `sigma` sum and those left
/// to check.
pub struct SpreadPlan {
    pub settled: Vec<Vec<usize>>,
    pub to_check: Vec<Vec<usize>>,
}

pub fn plan(candidates: &[usize], k: usize, psi: Option<&SigmaVector>) -> SpreadPlan {
    let (settled, to_check) = multisets(candidates, k).into_iter().partition(|tuple| {
        psi.is_some_and(|psi| {
            let sum: Rational = tuple.iter().map(|&i| psi.values[i].clone()).sum();
            sum < Rational::from_integer(1.into())
        })
    });
    SpreadPlan { settled, to_check }
}

#[cfg(test)]
mod tests {
    use super::*;
    use probgen::probgen::ratio;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn multiset_counts() {
        for n in 0..5 {
            for k in 1..4 {
                let all = multisets(&(0..n).collect::<Vec<_>>(), k);
                let expected = if n == 0 { 0 } else { binomial(n + k - 1, k) };
                assert_eq!(all.len(), expected, "n = {n}, k = {k}");
                assert!(all.iter().all(|m| m.windows(2).all(|w| w[0] <= w[1])));
            }
        }
    }

    #[test]
    fn small_sums_are_settled() {
        let psi = SigmaVector {
            s_class: 3,
            values: vec![ratio(0, 1), ratio(2, 5), ratio(1, 5), ratio(0, 1)],
        };
        let p = plan(&[1, 2], 3, Some(&psi));
        assert_eq!(p.to_check, vec![vec![1, 1, 1], vec![1, 1, 2]]);
        assert_eq!(p.settled, vec![vec![1, 2, 2], vec![2, 2, 2]]);
        let unbounded = plan(&[1, 2], 2, None);
        assert_eq!(unbounded.to_check.len(), 3);
        assert!(unbounded.settled.is_empty());
    }
}
