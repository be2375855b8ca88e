//! Searches for a maximal subgroup of a catalog group generated by two
//! random words in its generators, and prints a catalog `words` recipe.
//!
//! Usage:
//! `cargo run --example find_max -- CATALOG GROUP ORDER [transitive|intransitive] [seed]`
//!
//! A candidate `<u, v>` is accepted when it has the requested order, acts as
//! requested on the points, its coset action is primitive (so it is
//! maximal), and it fixes no coset of any maximal subgroup already listed
//! for the group (so it is a new class).

use probgen::catalog::word::Word;
use probgen::catalog::Catalog;
use probgen::coset::{coset_action, CosetSpace};
use probgen::orbit::{is_primitive, orbit_of_point};
use rand::Rng;

/// A random word of a few syllables `x^e`, with no two adjacent syllables
/// in the same generator and exponents reduced modulo the generator orders.
fn random_word(orders: &[u64], rng: &mut impl Rng) -> String {
    let syllables = rng.gen_range(2..=8);
    let mut previous = usize::MAX;
    let mut parts = Vec::new();
    while parts.len() < syllables {
        let g = rng.gen_range(0..orders.len());
        let o = orders[g] as i64;
        let e = [-2i64, -1, 1, 1, 2, 3][rng.gen_range(0..6)].rem_euclid(o);
        let e = if 2 * e > o { e - o } else { e };
        if g == previous || e == 0 {
            continue;
        }
        previous = g;
        let letter = (b'a' + g as u8) as char;
        parts.push(match e {
            1 => letter.to_string(),
            e => format!("{letter}^{e}"),
        });
    }
    parts.join("*")
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let [path, name, order, rest @ ..] = args.as_slice() else {
        panic!("usage: find_max CATALOG GROUP ORDER [transitive|intransitive] [seed]");
    };
    let order: u128 = order.parse().expect("order");
    let want_transitive = match rest.first().map(String::as_str) {
        Some("transitive") => Some(true),
        Some("intransitive") => Some(false),
        _ => None,
    };
    let seed: u64 = rest.iter().find_map(|s| s.parse().ok()).unwrap_or(1);

    let catalog = Catalog::parse(&std::fs::read_to_string(path).expect("catalog file")).expect("catalog parses");
    let entry = catalog.get(name).expect("group in catalog");
    let group = entry.group().expect("group builds");
    let known: Vec<CosetSpace> = entry
        .maxes()
        .expect("listed maxes resolve")
        .iter()
        .filter(|m| m.order() == order)
        .map(|m| CosetSpace::new(&group, m).expect("coset space"))
        .collect();
    let orders: Vec<u64> = group.generators().iter().map(|g| g.order()).collect();
    let mut rng = probgen::random::rng_from_seed(seed);
    for attempt in 0u64.. {
        let words = [random_word(&orders, &mut rng), random_word(&orders, &mut rng)];
        let gens = words
            .iter()
            .map(|w| Word::parse(w).unwrap().evaluate(group.generators(), group.degree()).unwrap())
            .collect();
        let sub = group.subgroup(gens).unwrap();
        if sub.order() != order {
            continue;
        }
        let transitive = orbit_of_point(sub.generators(), sub.degree(), 0).len() == sub.degree();
        if want_transitive.is_some_and(|t| t != transitive) {
            continue;
        }
        let action = coset_action(&group, &sub).expect("coset action");
        if !is_primitive(action.image().generators(), action.degree()) {
            continue;
        }
        let conjugate_to_known = known
            .iter()
            .any(|space| (0..space.len()).any(|j| sub.generators().iter().all(|g| space.fixes(j, g))));
        if conjugate_to_known {
            continue;
        }
        println!("# attempt {attempt}, seed {seed}");
        println!("recipe = words {}, {}", words[0], words[1]);
        return;
    }
}
