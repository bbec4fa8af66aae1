//! Root combinatorics and simplicity verdicts for rank-2 twin tree lattices.
//!
//! The crate works with the generalized Cartan matrices `A(m,n)`, their real
//! roots, the half-apartment model of the infinite dihedral Coxeter complex,
//! the supports of commutators of prenilpotent root pairs, finite truncations
//! of wreath products, and a rule-based verdict on simplicity or residual
//! finiteness of the associated Kac-Moody lattices.

pub mod apartment;
pub mod cartan;
pub mod commutation;
pub mod error;
pub mod groups;
pub mod verdict;
pub mod wreath;

pub use apartment::{
    end_family, is_prenilpotent, root_of_wall, wall_distance, wall_of, window_roots, Direction,
    End, WallRoot, WeylElement,
};
pub use cartan::{
    classify_matrix, CartanMatrix2, MatrixType, OrbitPosition, RootVector, Sign, SimpleIndex,
    WeylWord,
};
pub use commutation::{
    bracket_support, check_condition_i, check_conditions, commutation_table, geometric_interval,
    minimal_c, rational_cone_support, verify_comm_lemma, CommutationEntry, ConditionI,
    ConditionIWitness, ConditionReport, ConeCoefficients, LemmaPairCheck, LemmaReport, MinimalC,
    PairKind,
};
pub use error::{Error, Result};
pub use groups::{FiniteGroup, Group, BUILTIN_GROUPS};
pub use verdict::{
    congruent_reduction, prime_power_decomposition, quotient_bound, verdict, AddendumCase,
    LatticeSpec, Outcome, Reduction, Rule, Verdict,
};
pub use wreath::{
    meskin_identity_check, quotient_by_shift, wreath_product, WreathElement, WreathProduct,
};
