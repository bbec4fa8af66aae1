//! Rule-based verdict for the Kac-Moody lattice of `A(m,n)` over `F_q`.
//!
//! Rules are tried in order and the first match wins:
//!
//! | rule | applies when | outcome |
//! |------|--------------|---------|
//! | R1 | `mn < 4` | finite type |
//! | R2 | `mn = 4` | residually finite |
//! | R3 | `{m, n} = {k, 1}`, `k > 4`, split and adjoint | simple if `q > 3`, else virtually simple with index bound `q` |
//! | R4 | `m, n > 1` and `(m, n) = (2, 2) mod (q - 1)` | residually finite |
//! | R5 | otherwise | unknown |

use std::fmt;

use crate::cartan::{CartanMatrix2, MatrixType};
use crate::error::{Error, Result};

/// Returns `(p, k)` with `q = p^k`, `p` prime, `k >= 1`.
pub fn prime_power_decomposition(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..)
        .take_while(|d: &u64| d.saturating_mul(*d) <= q)
        .find(|&d| q.is_multiple_of(d))
        .unwrap_or(q);
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// An adjoint split Kac-Moody group of type `A(m,n)` over `F_q`, or a variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeSpec {
    pub matrix: CartanMatrix2,
    pub q: u64,
    pub adjoint: bool,
    /// Split groups have abelian root groups of order `q`.
    pub split: bool,
}

impl LatticeSpec {
    pub fn new(matrix: CartanMatrix2, q: u64) -> Result<Self> {
        LatticeSpec::with_flags(matrix, q, true, true)
    }

    pub fn with_flags(matrix: CartanMatrix2, q: u64, adjoint: bool, split: bool) -> Result<Self> {
        if prime_power_decomposition(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
        Ok(LatticeSpec { matrix, q, adjoint, split })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    FiniteType,
    ResiduallyFinite,
    VirtuallySimple,
    Simple,
    Unknown,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::FiniteType => "finite_type",
            Outcome::ResiduallyFinite => "residually_finite",
            Outcome::VirtuallySimple => "virtually_simple",
            Outcome::Simple => "simple",
            Outcome::Unknown => "unknown",
        }
    }

    pub fn parse(s: &str) -> Option<Outcome> {
        [
            Outcome::FiniteType,
            Outcome::ResiduallyFinite,
            Outcome::VirtuallySimple,
            Outcome::Simple,
            Outcome::Unknown,
        ]
        .into_iter()
        .find(|o| o.as_str() == s)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            Rule::R1 => "finite type (mn < 4): the group is a finite Chevalley group over F_q",
            Rule::R2 => {
                "affine type (mn = 4): the group is linear and S-arithmetic, hence residually finite"
            }
            Rule::R3 => {
                "A(k,1) with k > 4, adjoint split over F_q: the commutator subgroup is simple \
                 of index at most q; split Kac-Moody groups over fields with q > 3 are perfect"
            }
            Rule::R4 => {
                "A(m,n) congruent to A(2,2) modulo q - 1: isomorphic to the affine-type group \
                 over F_q, hence residually finite"
            }
            Rule::R5 => "A(m,n) with m, n > 1 not covered by a reduction: open case",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub rule: Rule,
    pub citation: String,
}

impl Reduction {
    fn of(rule: Rule) -> Self {
        Reduction { rule, citation: rule.citation().to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// Bound on `|Λ / Λ⁰|`; present exactly for simple and virtually simple outcomes.
    pub quotient_index_bound: Option<u64>,
    pub reductions: Vec<Reduction>,
    pub notes: Vec<String>,
}

/// Target of the congruence reduction, if `(m, n) = (2, 2) mod (q - 1)`.
///
/// Only applied for `m, n > 1`; returns `None` otherwise. The other affine
/// target `A(4,1)` has `n = 1` and can never be reached under that guard.
pub fn congruent_reduction(a: &CartanMatrix2, q: u64) -> Option<(u32, u32)> {
    if a.m() <= 1 || a.n() <= 1 || q < 2 {
        return None;
    }
    let modulus = q - 1;
    let congruent = |x: u32, y: u32| u64::from(x) % modulus == u64::from(y) % modulus;
    (congruent(a.m(), 2) && congruent(a.n(), 2)).then_some((2, 2))
}

const NOTE_41_TARGET: &str =
    "the congruence target A(4,1) is never used: the reduction is applied \
                              only when m, n > 1";
const NOTE_Q2: &str = "modulo q - 1 = 1 every matrix is congruent to A(4,1); applying the \
                       congruence without the m, n > 1 guard would contradict the simplicity \
                       result for A(k,1), so it is not applied there";

pub fn verdict(spec: &LatticeSpec) -> Verdict {
    let a = &spec.matrix;
    let mut notes = Vec::new();
    let done = |outcome, bound, rule: Rule, notes| Verdict {
        outcome,
        quotient_index_bound: bound,
        reductions: vec![Reduction::of(rule)],
        notes,
    };

    match a.matrix_type() {
        MatrixType::FiniteType => return done(Outcome::FiniteType, None, Rule::R1, notes),
        MatrixType::AffineType => return done(Outcome::ResiduallyFinite, None, Rule::R2, notes),
        MatrixType::IndefiniteType => {}
    }

    if a.m() == 1 || a.n() == 1 {
        // mn > 4 here, so the other entry exceeds 4
        if !(spec.split && spec.adjoint) {
            notes.push(
                "the simplicity criterion for A(k,1) needs an adjoint split group; \
                 hypotheses not met"
                    .to_string(),
            );
            return done(Outcome::Unknown, None, Rule::R3, notes);
        }
        if spec.q == 2 {
            notes.push(NOTE_Q2.to_string());
        }
        return if spec.q > 3 {
            done(Outcome::Simple, Some(1), Rule::R3, notes)
        } else {
            done(Outcome::VirtuallySimple, Some(spec.q), Rule::R3, notes)
        };
    }

    if congruent_reduction(a, spec.q).is_some() {
        notes.push(NOTE_41_TARGET.to_string());
        return done(Outcome::ResiduallyFinite, None, Rule::R4, notes);
    }

    notes.push(format!(
        "A({},{}) is not congruent to A(2,2) modulo q - 1 = {}",
        a.m().min(a.n()),
        a.m().max(a.n()),
        spec.q - 1
    ));
    done(Outcome::Unknown, None, Rule::R5, notes)
}

/// Which strengthening of the non-trivial commutator condition is available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AddendumCase {
    /// The commutator contains a whole root group.
    RootGroupInCommutator,
    /// `phi = psi` with a commutator of even order when the rank-one group is sharply 2-transitive.
    SelfCommutator,
}

/// Upper bound on the order of the maximal finite quotient.
///
/// `RootGroupInCommutator` gives `max |U_a|`; `SelfCommutator` gives
/// `(max |U_a / [U_a, U_a]|)^2` and needs the abelianization orders.
pub fn quotient_bound(
    case: AddendumCase,
    root_group_orders: &[u64],
    abelianization_orders: Option<&[u64]>,
) -> Result<u64> {
    let max_of = |xs: &[u64], what: &'static str| -> Result<u64> {
        match xs.iter().copied().max() {
            None => Err(Error::MissingData(what)),
            Some(0) => Err(Error::MissingData("group orders must be positive")),
            Some(x) => Ok(x),
        }
    };
    let root_max = max_of(root_group_orders, "root group orders must be nonempty")?;
    if root_group_orders.contains(&0) {
        return Err(Error::MissingData("group orders must be positive"));
    }
    match case {
        AddendumCase::RootGroupInCommutator => Ok(root_max),
        AddendumCase::SelfCommutator => {
            let ab = abelianization_orders
                .ok_or(Error::MissingData("abelianization orders are required for this case"))?;
            if ab.contains(&0) {
                return Err(Error::MissingData("group orders must be positive"));
            }
            let ab_max = max_of(ab, "abelianization orders must be nonempty")?;
            ab_max.checked_mul(ab_max).ok_or(Error::MissingData("bound overflows u64"))
        }
    }
}
