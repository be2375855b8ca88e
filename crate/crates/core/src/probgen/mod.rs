//! Characters, `sigma` values, nongeneration proportions and spread
//! certificates.

pub mod character;
pub mod format;
pub mod nongen;
pub mod rational;
pub mod sigma;
pub mod spread;
pub mod tuples;

pub use character::{permutation_character, permutation_character_by_counting, PermChar};
pub use format::{bracket_list, format_table};
pub use nongen::{
    is_generating, nongeneration_profile, prime_order_classes, prime_order_classes_outside,
    ratio_of_nongeneration, upper_bound_fixed_point_ratios, verify_generation, ClassRep,
    GenerationTester,
};
pub use rational::{parse_rational, ratio, spread_bound, Rational};
pub use sigma::{
    approx_p, fuse_classes, outer_prime_classes, prob_gen_info, prob_gen_info_almost_simple,
    prob_gen_info_from_characters, sigma_from_maxes, AlmostSimpleInfo, ProbGenInfo, SigmaMode,
    SigmaVector,
};
pub use spread::{
    common_generator_with_given_elements, orbit_reps_product_of_classes,
    random_check_uniform_spread, SpreadCertificate, SpreadOutcome, SpreadWitness, TupleOrbit,
};
pub use tuples::{first_tuple_with, tuple_cover_search, PointSet, TuplePredicate};
