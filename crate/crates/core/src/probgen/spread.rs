//! Orbit representatives on products of classes, randomized uniform spread
//! certificates, and common generators for given tuples.

use std::fmt;

use crate::classes::{centralizer, centralizer_in, conjugacy_classes};
use crate::coset::{CosetSpace, Limits};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::random::derive_seed;
use crate::subgroups::{double_coset_reps_and_sizes, double_cosets_in_space};

use super::nongen::{verify_generation, GenerationTester};

/// A representative of a `G`-orbit on a product of classes, with the order
/// of its stabilizer (the intersection of the entries' centralizers).
#[derive(Clone, Debug)]
pub struct TupleOrbit {
    pub tuple: Vec<Permutation>,
    pub stabilizer_order: u128,
}

/// Representatives of the `G`-orbits on `g_1^G x ... x g_n^G`.
///
/// Tuples are extended one entry at a time: the orbits of the stabilizer
/// `C = C(h_1) ∩ ... ∩ C(h_(k-1))` of a partial tuple on `g_k^G` correspond
/// to the double cosets `C(g_k) d C`, giving the new entries `g_k^d`.
pub fn orbit_reps_product_of_classes(
    group: &PermGroup,
    classreps: &[Permutation],
) -> Result<Vec<TupleOrbit>> {
    let classreps = classreps
        .iter()
        .map(|x| group.member(x))
        .collect::<Result<Vec<_>>>()?;
    let Some(first) = classreps.first() else {
        return Ok(Vec::new());
    };
    let limit = Limits::default().coset_index as usize;
    let mut spaces: Vec<Option<CosetSpace>> = (0..classreps.len()).map(|_| None).collect();
    let mut done = Vec::new();
    let mut stack = vec![(vec![first.clone()], centralizer(group, first)?)];
    while let Some((tuple, stab)) = stack.pop() {
        let pos = tuple.len();
        if pos == classreps.len() {
            done.push(TupleOrbit {
                tuple,
                stabilizer_order: stab.order(),
            });
            continue;
        }
        if spaces[pos].is_none() {
            spaces[pos] = Some(CosetSpace::new(group, &centralizer(group, &classreps[pos])?)?);
        }
        let space = spaces[pos].as_ref().expect("just built");
        let mut children = Vec::new();
        for dc in double_cosets_in_space(space, &stab)? {
            let h = classreps[pos].conjugate(&dc.representative);
            let next = centralizer_in(&stab, &h, limit)?;
            let mut extended = tuple.clone();
            extended.push(h);
            children.push((extended, next));
        }
        stack.extend(children.into_iter().rev());
    }
    Ok(done)
}

/// One tuple and the conjugate of `s` that generates with each entry.
#[derive(Clone, Debug)]
pub struct SpreadWitness {
    pub tuple: Vec<Permutation>,
    pub conjugate: Permutation,
}

#[derive(Clone, Debug)]
pub enum SpreadOutcome {
    Success,
    /// No good conjugate of `s` was found for this tuple.
    Failure { tuple: Vec<Permutation> },
}

/// The record of a randomized uniform spread check.
#[derive(Clone, Debug)]
pub struct SpreadCertificate {
    pub tuple_class_labels: Vec<String>,
    pub s_label: String,
    pub outcome: SpreadOutcome,
    /// Random conjugates tried for each orbit representative, in order.
    pub trials: Vec<u32>,
    pub witnesses: Vec<SpreadWitness>,
    pub tries: u32,
    pub seed: u64,
}

impl SpreadCertificate {
    pub fn is_success(&self) -> bool {
        matches!(self.outcome, SpreadOutcome::Success)
    }
}

impl fmt::Display for SpreadCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "classes = [{}]", self.tuple_class_labels.join(", "))?;
        writeln!(f, "s = {}", self.s_label)?;
        writeln!(f, "seed = {}", self.seed)?;
        writeln!(f, "tries = {}", self.tries)?;
        writeln!(f, "orbit_representatives = {}", self.trials.len())?;
        writeln!(
            f,
            "max_trials = {}",
            self.trials.iter().max().copied().unwrap_or(0)
        )?;
        writeln!(f, "total_trials = {}", self.trials.iter().map(|&t| t as u64).sum::<u64>())?;
        match &self.outcome {
            SpreadOutcome::Success => write!(f, "outcome = success"),
            SpreadOutcome::Failure { tuple } => {
                let t: Vec<String> = tuple.iter().map(|x| x.to_string()).collect();
                write!(f, "outcome = failure\nfailing_tuple = [{}]", t.join(", "))
            }
        }
    }
}

fn class_label(group: &PermGroup, x: &Permutation) -> Result<String> {
    match conjugacy_classes(group) {
        Ok(list) => Ok(list
            .class_index_of(x)
            .map(|i| list.get(i).label.to_string())
            .unwrap_or_else(|| x.to_string())),
        Err(e) if e.is_ceiling() => Ok(x.to_string()),
        Err(e) => Err(e),
    }
}

/// For every orbit representative on the product of the classes of
/// `classreps`, tries up to `tries` random conjugates of `s` until one
/// generates the group together with each entry.
///
/// Tuple `t` draws its conjugating elements from its own stream seeded with
/// `derive_seed(seed, t)`, so the result does not depend on evaluation
/// order. Every success is checked again by [`verify_generation`] before
/// the certificate is returned.
pub fn random_check_uniform_spread(
    group: &PermGroup,
    classreps: &[Permutation],
    s: &Permutation,
    tries: u32,
    seed: u64,
) -> Result<SpreadCertificate> {
    if tries == 0 {
        return Err(Error::InvalidArgument("tries must be positive".into()));
    }
    let tester = GenerationTester::new(group)?;
    let s = group.member(s)?;
    let orbits = orbit_reps_product_of_classes(group, classreps)?;
    let mut trials = Vec::with_capacity(orbits.len());
    let mut witnesses = Vec::with_capacity(orbits.len());
    let mut outcome = SpreadOutcome::Success;
    for (t, orbit) in orbits.into_iter().enumerate() {
        let mut source = group.random_source(derive_seed(seed, t as u64));
        let mut found = None;
        let mut used = 0;
        while used < tries {
            used += 1;
            let conj = s.conjugate(&source.next_element());
            if orbit.tuple.iter().all(|x| tester.generates(&[x, &conj])) {
                found = Some(conj);
                break;
            }
        }
        trials.push(used);
        match found {
            Some(conjugate) => witnesses.push(SpreadWitness {
                tuple: orbit.tuple,
                conjugate,
            }),
            None => {
                outcome = SpreadOutcome::Failure { tuple: orbit.tuple };
                break;
            }
        }
    }
    for w in &witnesses {
        for x in &w.tuple {
            if !verify_generation(group, &[x.clone(), w.conjugate.clone()]) {
                return Err(Error::Verification(format!(
                    "spread witness {} does not generate with {x}",
                    w.conjugate
                )));
            }
        }
    }
    Ok(SpreadCertificate {
        tuple_class_labels: classreps
            .iter()
            .map(|x| class_label(group, x))
            .collect::<Result<_>>()?,
        s_label: class_label(group, &s)?,
        outcome,
        trials,
        witnesses,
        tries,
        seed,
    })
}

/// A conjugate of one of `classreps` that generates the group together with
/// every entry of `tuple`, or `None` if there is none. Conjugates are
/// examined up to the action of the centralizer of the tuple.
pub fn common_generator_with_given_elements(
    group: &PermGroup,
    classreps: &[Permutation],
    tuple: &[Permutation],
) -> Result<Option<Permutation>> {
    let tester = GenerationTester::new(group)?;
    let tuple = tuple
        .iter()
        .map(|x| group.member(x))
        .collect::<Result<Vec<_>>>()?;
    let limit = Limits::default().coset_index as usize;
    let mut inter = group.clone();
    for x in &tuple {
        inter = centralizer_in(&inter, x, limit)?;
    }
    for rep in classreps {
        let rep = group.member(rep)?;
        let cent = centralizer(group, &rep)?;
        for dc in double_coset_reps_and_sizes(group, &cent, &inter)? {
            let candidate = rep.conjugate(&dc.representative);
            if tuple.iter().all(|x| tester.generates(&[x, &candidate])) {
                return Ok(Some(candidate));
            }
        }
    }
    Ok(None)
}
