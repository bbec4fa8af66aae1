//! Commutator supports of prenilpotent root pairs and the two lattice conditions.
//!
//! For distinct nested roots `phi`, `psi` the support of `[U_phi, U_psi]` is
//! taken to be the set of real roots `gamma = i*phi + j*psi` with `i, j`
//! positive integers. Candidates are the roots whose walls lie strictly
//! between the walls of `phi` and `psi` (same direction); the rational cone
//! `{a*phi + b*psi : a, b > 0}` selects the same candidates, and only the
//! integral ones are kept.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::apartment::{self, Direction, End, WallRoot};
use crate::cartan::{CartanMatrix2, RootVector, SimpleIndex};
use crate::error::{Error, Result};

/// Solution of `i*phi + j*psi = gamma` over the rationals, as `i_num/det`, `j_num/det`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeCoefficients {
    pub i_num: BigInt,
    pub j_num: BigInt,
    /// Always positive.
    pub det: BigInt,
}

impl ConeCoefficients {
    /// `None` when `phi` and `psi` are linearly dependent.
    pub fn solve(phi: &RootVector, psi: &RootVector, gamma: &RootVector) -> Option<Self> {
        let det = &phi.x * &psi.y - &phi.y * &psi.x;
        if det.is_zero() {
            return None;
        }
        let i_num = &gamma.x * &psi.y - &gamma.y * &psi.x;
        let j_num = &phi.x * &gamma.y - &phi.y * &gamma.x;
        Some(if det.is_negative() {
            ConeCoefficients { i_num: -i_num, j_num: -j_num, det: -det }
        } else {
            ConeCoefficients { i_num, j_num, det }
        })
    }

    pub fn in_open_rational_cone(&self) -> bool {
        self.i_num.is_positive() && self.j_num.is_positive()
    }

    /// The coefficients, when both are integers.
    pub fn integer_coefficients(&self) -> Option<(BigInt, BigInt)> {
        let (i, ri) = self.i_num.div_rem(&self.det);
        let (j, rj) = self.j_num.div_rem(&self.det);
        (ri.is_zero() && rj.is_zero()).then_some((i, j))
    }

    pub fn in_integer_cone(&self) -> bool {
        self.in_open_rational_cone() && self.integer_coefficients().is_some()
    }
}

fn check_pair(
    a: &CartanMatrix2,
    phi: &RootVector,
    psi: &RootVector,
) -> Result<(WallRoot, WallRoot)> {
    let p = apartment::wall_of(a, phi)?;
    let q = apartment::wall_of(a, psi)?;
    if phi == psi {
        return Err(Error::EqualRoots(Box::new(phi.clone())));
    }
    if p.direction != q.direction {
        return Err(Error::NotPrenilpotent(Box::new((phi.clone(), psi.clone()))));
    }
    Ok((p, q))
}

fn walls_between(p: WallRoot, q: WallRoot) -> impl Iterator<Item = WallRoot> {
    let (lo, hi) = (p.wall.min(q.wall), p.wall.max(q.wall));
    let direction = p.direction;
    (lo + 1..hi).map(move |wall| WallRoot { wall, direction })
}

/// Real roots whose half-lines sit strictly between those of `phi` and `psi`.
pub fn geometric_interval(
    a: &CartanMatrix2,
    phi: &RootVector,
    psi: &RootVector,
) -> Result<Vec<RootVector>> {
    let (p, q) = check_pair(a, phi, psi)?;
    walls_between(p, q).map(|r| apartment::root_of_wall(a, r)).collect()
}

/// Interval roots lying in the open rational cone spanned by `phi` and `psi`.
pub fn rational_cone_support(
    a: &CartanMatrix2,
    phi: &RootVector,
    psi: &RootVector,
) -> Result<Vec<RootVector>> {
    Ok(geometric_interval(a, phi, psi)?
        .into_iter()
        .filter(|g| ConeCoefficients::solve(phi, psi, g).is_some_and(|c| c.in_open_rational_cone()))
        .collect())
}

fn integer_support(
    phi: &RootVector,
    psi: &RootVector,
    candidates: impl IntoIterator<Item = RootVector>,
) -> BTreeSet<RootVector> {
    candidates
        .into_iter()
        .filter(|g| ConeCoefficients::solve(phi, psi, g).is_some_and(|c| c.in_integer_cone()))
        .collect()
}

/// Support of `[U_phi, U_psi]` for a distinct prenilpotent pair of real roots.
pub fn bracket_support(
    a: &CartanMatrix2,
    phi: &RootVector,
    psi: &RootVector,
) -> Result<BTreeSet<RootVector>> {
    let interval = geometric_interval(a, phi, psi)?;
    Ok(integer_support(phi, psi, interval))
}

/// One row of a commutation table.
///
/// `commutes` mirrors `support.is_empty()`; for pairs that are not
/// prenilpotent no support is computed, so the flag carries no information there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationEntry {
    pub phi: RootVector,
    pub psi: RootVector,
    pub phi_wall: WallRoot,
    pub psi_wall: WallRoot,
    pub prenilpotent: bool,
    pub wall_distance: u64,
    pub support: Vec<RootVector>,
    pub commutes: bool,
}

/// Real roots of a window keyed by half-line.
struct WindowIndex {
    roots: Vec<(WallRoot, RootVector)>,
    by_wall: HashMap<WallRoot, usize>,
}

impl WindowIndex {
    fn new(a: &CartanMatrix2, window: u32) -> Result<Self> {
        let roots = apartment::window_roots(a, window)?;
        let by_wall = roots.iter().enumerate().map(|(i, (r, _))| (*r, i)).collect();
        Ok(WindowIndex { roots, by_wall })
    }

    fn root(&self, r: &WallRoot) -> &RootVector {
        &self.roots[self.by_wall[r]].1
    }

    fn entry(&self, i: usize, j: usize) -> CommutationEntry {
        let (p, phi) = &self.roots[i];
        let (q, psi) = &self.roots[j];
        let prenilpotent = p.direction == q.direction;
        let support: Vec<RootVector> = if prenilpotent {
            let candidates = walls_between(*p, *q).map(|r| self.root(&r).clone());
            integer_support(phi, psi, candidates).into_iter().collect()
        } else {
            Vec::new()
        };
        CommutationEntry {
            phi: phi.clone(),
            psi: psi.clone(),
            phi_wall: *p,
            psi_wall: *q,
            prenilpotent,
            wall_distance: p.wall.abs_diff(q.wall),
            commutes: support.is_empty(),
            support,
        }
    }

    fn all_entries(&self) -> Vec<CommutationEntry> {
        let k = self.roots.len();
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .map(|(i, j)| self.entry(i, j))
            .collect()
    }

    fn prenilpotent_entries(&self) -> Vec<CommutationEntry> {
        let k = self.roots.len();
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| self.roots[i].0.direction == self.roots[j].0.direction)
            .map(|(i, j)| self.entry(i, j))
            .collect()
    }
}

/// Entries for every unordered pair of distinct real roots in the window,
/// ordered by the (wall, direction) of the first root and then the second.
pub fn commutation_table(a: &CartanMatrix2, window: u32) -> Result<Vec<CommutationEntry>> {
    if window == 0 {
        return Err(Error::InvalidWindow { got: 0, min: 1 });
    }
    Ok(WindowIndex::new(a, window)?.all_entries())
}

/// Why condition (i) holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionIWitness {
    /// A distinct prenilpotent pair with a non-trivial commutator.
    Pair { phi: RootVector, psi: RootVector, support: Vec<RootVector> },
    /// `phi = psi`: the root groups themselves are non-abelian.
    NonAbelianRootGroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionI {
    pub holds: bool,
    pub witness: Option<ConditionIWitness>,
    pub window: u32,
}

fn require_infinite(a: &CartanMatrix2) -> Result<()> {
    if a.matrix_type().has_infinite_weyl_group() {
        Ok(())
    } else {
        Err(Error::FiniteType { m: a.m(), n: a.n() })
    }
}

/// Some prenilpotent pair (possibly `phi = psi`) has a non-trivial commutator.
///
/// The `phi = psi` case is decided by `abelian_root_groups` alone. Among pair
/// witnesses the one with walls closest to the fundamental chamber is returned.
pub fn check_condition_i(
    a: &CartanMatrix2,
    abelian_root_groups: bool,
    window: u32,
) -> Result<ConditionI> {
    require_infinite(a)?;
    if window == 0 {
        return Err(Error::InvalidWindow { got: 0, min: 1 });
    }
    if !abelian_root_groups {
        return Ok(ConditionI {
            holds: true,
            witness: Some(ConditionIWitness::NonAbelianRootGroup),
            window,
        });
    }
    let witness = WindowIndex::new(a, window)?
        .prenilpotent_entries()
        .into_iter()
        .filter(|e| !e.commutes)
        .min_by_key(|e| {
            (
                e.phi_wall.wall.unsigned_abs() + e.psi_wall.wall.unsigned_abs(),
                e.phi_wall,
                e.psi_wall,
            )
        })
        .map(|e| ConditionIWitness::Pair { phi: e.phi, psi: e.psi, support: e.support });
    Ok(ConditionI { holds: witness.is_some(), witness, window })
}

/// Smallest wall distance beyond which distinct prenilpotent pairs commute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimalC {
    /// In vertex graph distance; `None` when no bound was found.
    pub graph: Option<u64>,
    /// Chambers strictly between the walls: `graph - 1`.
    pub chambers: Option<u64>,
    /// The value observed on the window, bounded or not.
    pub observed: u64,
    /// Same observed value on a window twice as large.
    pub stable: bool,
    pub window: u32,
}

fn observed_c(index: &WindowIndex) -> u64 {
    index
        .prenilpotent_entries()
        .iter()
        .filter(|e| !e.commutes)
        .map(|e| e.wall_distance)
        .max()
        .map_or(1, |d| d + 1)
}

/// Minimal constant of condition (ii) on a window of `window` translation periods.
///
/// The bound counts as found when the observed value does not exceed the
/// translation length `2 * window` of `t^window`; the stability flag records
/// whether doubling the window changes it.
pub fn minimal_c(a: &CartanMatrix2, window: u32) -> Result<MinimalC> {
    require_infinite(a)?;
    if window < 2 {
        return Err(Error::InvalidWindow { got: window, min: 2 });
    }
    let observed = observed_c(&WindowIndex::new(a, window)?);
    let doubled = observed_c(&WindowIndex::new(a, 2 * window)?);
    let graph = (observed <= 2 * u64::from(window)).then_some(observed);
    Ok(MinimalC {
        graph,
        chambers: graph.map(|c| c - 1),
        observed,
        stable: observed == doubled,
        window,
    })
}

/// Both conditions on one window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition_i: ConditionI,
    pub minimal_c: MinimalC,
    pub window: u32,
}

impl ConditionReport {
    pub fn condition_ii(&self) -> bool {
        self.minimal_c.graph.is_some()
    }
}

pub fn check_conditions(
    a: &CartanMatrix2,
    abelian_root_groups: bool,
    window: u32,
) -> Result<ConditionReport> {
    Ok(ConditionReport {
        condition_i: check_condition_i(a, abelian_root_groups, window)?,
        minimal_c: minimal_c(a, window)?,
        window,
    })
}

/// Orbit types of the two roots of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    AlphaAlpha,
    BetaBeta,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaPairCheck {
    pub end: End,
    pub phi: RootVector,
    pub psi: RootVector,
    pub kind: PairKind,
    pub wall_distance: u64,
    pub support: Vec<RootVector>,
}

/// Result of checking the commutation structure of `A(k,1)`, `k > 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub m: u32,
    pub n: u32,
    pub window: u32,
    /// The simple root whose orbit carries the non-commuting pairs.
    pub alpha: SimpleIndex,
    pub checked_pairs: Vec<LemmaPairCheck>,
    pub noncommuting_pairs: usize,
    pub violations: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, on each end family of the window, that the non-commuting pairs are
/// exactly the consecutive pairs of the `alpha` orbit and that each has a
/// single root of the `beta` orbit as support, with its wall strictly between.
///
/// The statement is checked without fixing the orientation of `t` or the
/// indexing along the orbits. Orbit membership of the support is decided by
/// orbit walking, independently of the wall model.
pub fn verify_comm_lemma(a: &CartanMatrix2, window: u32) -> Result<LemmaReport> {
    let alpha = match (a.m(), a.n()) {
        (k, 1) if k > 4 => SimpleIndex::One,
        (1, k) if k > 4 => SimpleIndex::Two,
        (m, n) => return Err(Error::WrongShape { m, n }),
    };
    if window == 0 {
        return Err(Error::InvalidWindow { got: 0, min: 1 });
    }
    let beta = alpha.other();
    // walls of the a1 orbit are even, those of the a2 orbit odd
    let is_alpha = |r: &WallRoot| (r.wall.rem_euclid(2) == 0) == (alpha == SimpleIndex::One);

    let index = WindowIndex::new(a, window)?;
    let mut checked_pairs = Vec::new();
    let mut violations = Vec::new();
    let mut noncommuting_pairs = 0;
    for e in index.prenilpotent_entries() {
        let (p, q) = (e.phi_wall, e.psi_wall);
        let kind = match (is_alpha(&p), is_alpha(&q)) {
            (true, true) => PairKind::AlphaAlpha,
            (false, false) => PairKind::BetaBeta,
            _ => PairKind::Mixed,
        };
        let end = match p.direction {
            Direction::Plus => End::PlusInfinity,
            Direction::Minus => End::MinusInfinity,
        };
        let expected = kind == PairKind::AlphaAlpha && e.wall_distance == 2;
        let label = format!("{{{}, {}}} (walls {}, {})", e.phi, e.psi, p, q);
        if !e.commutes {
            noncommuting_pairs += 1;
        }
        match (expected, e.support.as_slice()) {
            (false, []) => {}
            (false, _) => violations.push(format!("{label}: unexpected non-trivial support")),
            (true, []) => violations.push(format!("{label}: consecutive alpha pair commutes")),
            (true, [gamma]) => {
                match a.locate(gamma)? {
                    Some(pos) if pos.simple == beta => {}
                    _ => violations
                        .push(format!("{label}: support {gamma} is not in the beta orbit")),
                }
                let g = apartment::wall_of(a, gamma)?;
                let (lo, hi) = (p.wall.min(q.wall), p.wall.max(q.wall));
                if !(lo < g.wall && g.wall < hi && g.direction == p.direction) {
                    violations
                        .push(format!("{label}: support {gamma} has wall {g} outside the pair"));
                }
            }
            (true, many) => {
                violations.push(format!("{label}: support has {} roots, expected one", many.len()))
            }
        }
        checked_pairs.push(LemmaPairCheck {
            end,
            phi: e.phi,
            psi: e.psi,
            kind,
            wall_distance: e.wall_distance,
            support: e.support,
        });
    }
    Ok(LemmaReport {
        m: a.m(),
        n: a.n(),
        window,
        alpha,
        checked_pairs,
        noncommuting_pairs,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(m: u32, n: u32) -> CartanMatrix2 {
        CartanMatrix2::new(m, n).unwrap()
    }

    fn rv(x: i64, y: i64) -> RootVector {
        RootVector::new(x, y)
    }

    fn set(v: &[(i64, i64)]) -> BTreeSet<RootVector> {
        v.iter().map(|&(x, y)| rv(x, y)).collect()
    }

    #[test]
    fn supports_for_a51() {
        let a = a(5, 1);
        assert_eq!(bracket_support(&a, &rv(-1, 0), &rv(-4, -1)).unwrap(), set(&[(-5, -1)]));
        assert_eq!(bracket_support(&a, &rv(1, 0), &rv(4, 1)).unwrap(), set(&[(5, 1)]));
        assert_eq!(bracket_support(&a, &rv(4, 1), &rv(1, 0)).unwrap(), set(&[(5, 1)]));
        // consecutive a2-orbit pair: (1,1) = (0,1) + (1/5)(5,4) is not integral
        assert_eq!(bracket_support(&a, &rv(0, 1), &rv(5, 4)).unwrap(), set(&[]));
        // adjacent walls: nothing in between
        assert_eq!(bracket_support(&a, &rv(1, 0), &rv(5, 1)).unwrap(), set(&[]));
    }

    #[test]
    fn affine_pair_has_rational_but_no_integer_support() {
        let a = a(2, 2);
        assert_eq!(geometric_interval(&a, &rv(1, 0), &rv(3, 2)).unwrap(), vec![rv(2, 1)]);
        assert_eq!(rational_cone_support(&a, &rv(1, 0), &rv(3, 2)).unwrap(), vec![rv(2, 1)]);
        assert!(bracket_support(&a, &rv(1, 0), &rv(3, 2)).unwrap().is_empty());
        let c = ConeCoefficients::solve(&rv(1, 0), &rv(3, 2), &rv(2, 1)).unwrap();
        assert!(c.in_open_rational_cone());
        assert_eq!(c.integer_coefficients(), None);
    }

    #[test]
    fn support_errors() {
        let a = a(5, 1);
        assert_eq!(
            bracket_support(&a, &rv(1, 0), &rv(0, 1)),
            Err(Error::NotPrenilpotent(Box::new((rv(1, 0), rv(0, 1)))))
        );
        assert_eq!(
            bracket_support(&a, &rv(1, 0), &rv(1, 0)),
            Err(Error::EqualRoots(Box::new(rv(1, 0))))
        );
        assert_eq!(
            bracket_support(&a, &rv(1, 2), &rv(1, 0)),
            Err(Error::NotARealRoot(Box::new(rv(1, 2))))
        );
    }

    #[test]
    fn table_entries() {
        let a51 = a(5, 1);
        let table = commutation_table(&a51, 2).unwrap();
        let roots = 2 * (4 * 2 + 2);
        assert_eq!(table.len(), roots * (roots - 1) / 2);
        let e = table
            .iter()
            .find(|e| {
                (e.phi == rv(-1, 0) && e.psi == rv(-4, -1))
                    || (e.phi == rv(-4, -1) && e.psi == rv(-1, 0))
            })
            .unwrap();
        assert!(!e.commutes && e.prenilpotent && e.wall_distance == 2);
        for e in table.iter().filter(|e| !e.prenilpotent) {
            assert!(e.support.is_empty());
        }
        let a22 = a(2, 2);
        assert!(commutation_table(&a22, 4).unwrap().iter().all(|e| e.commutes));
        assert!(commutation_table(&a(2, 1), 2).is_err());
    }

    #[test]
    fn condition_i() {
        let c = check_condition_i(&a(5, 1), true, 5).unwrap();
        assert!(c.holds);
        match c.witness.unwrap() {
            ConditionIWitness::Pair { phi, psi, support } => {
                assert_eq!(wall_distance_of(&a(5, 1), &phi, &psi), 2);
                assert_eq!(support.len(), 1);
            }
            other => panic!("unexpected witness {other:?}"),
        }
        let c = check_condition_i(&a(2, 2), true, 6).unwrap();
        assert!(!c.holds && c.witness.is_none());
        let c = check_condition_i(&a(2, 2), false, 6).unwrap();
        assert_eq!(c.witness, Some(ConditionIWitness::NonAbelianRootGroup));
        assert_eq!(check_condition_i(&a(1, 3), true, 3), Err(Error::FiniteType { m: 1, n: 3 }));
    }

    fn wall_distance_of(a: &CartanMatrix2, p: &RootVector, q: &RootVector) -> u64 {
        apartment::wall_distance(a, p, q).unwrap()
    }

    #[test]
    fn minimal_c_values() {
        let c = minimal_c(&a(5, 1), 4).unwrap();
        assert_eq!((c.graph, c.chambers, c.stable), (Some(3), Some(2), true));
        let c = minimal_c(&a(2, 2), 4).unwrap();
        assert_eq!((c.graph, c.stable), (Some(1), true));
        assert_eq!(c.chambers, Some(0));
        let c = minimal_c(&a(2, 3), 4).unwrap();
        assert!(c.graph.is_some() && c.stable);
        // the affine A(4,1) has non-commuting pairs at every scale
        let c = minimal_c(&a(4, 1), 4).unwrap();
        assert_eq!(c.graph, None);
        assert!(!c.stable);
        assert!(minimal_c(&a(5, 1), 1).is_err());
    }

    #[test]
    fn lemma_checks_pass() {
        let r = verify_comm_lemma(&a(5, 1), 4).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        // 9 even walls in [-8, 9] -> 8 consecutive pairs per end
        assert_eq!(r.noncommuting_pairs, 16);
        let r = verify_comm_lemma(&a(1, 6), 3).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.alpha, SimpleIndex::Two);
        assert_eq!(verify_comm_lemma(&a(2, 2), 3).unwrap_err(), Error::WrongShape { m: 2, n: 2 });
        assert!(verify_comm_lemma(&a(4, 1), 3).is_err());
    }
}
