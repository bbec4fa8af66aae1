//! Exact-integer arithmetic for 2x2 generalized Cartan matrices.
//!
//! The matrix `A(m,n)` has rows `(2, -m)` and `(-n, 2)`. Roots are written in
//! the basis of simple roots, `v = x*a1 + y*a2`, and the simple reflections are
//!
//! ```text
//! r_i(v) = v - <v, a_i^vee> a_i,   <a_j, a_i^vee> = a_ij
//! ```
//!
//! so that `r1(x, y) = (-x + m*y, y)` and `r2(x, y) = (x, n*x - y)`. The
//! translation is `t = r1 . r2` (apply `r2` first). Coordinates grow
//! geometrically along translation orbits, so all arithmetic is done on
//! [`BigInt`].

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, Neg, RangeInclusive};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Finite / affine / indefinite trichotomy of a rank-2 Cartan matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixType {
    FiniteType,
    AffineType,
    IndefiniteType,
}

impl MatrixType {
    pub fn as_str(self) -> &'static str {
        match self {
            MatrixType::FiniteType => "finite",
            MatrixType::AffineType => "affine",
            MatrixType::IndefiniteType => "indefinite",
        }
    }

    /// Finite type has a finite Weyl group; the other two have the infinite dihedral one.
    pub fn has_infinite_weyl_group(self) -> bool {
        self != MatrixType::FiniteType
    }
}

impl fmt::Display for MatrixType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Index of a simple root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleIndex {
    One,
    Two,
}

impl SimpleIndex {
    pub const BOTH: [SimpleIndex; 2] = [SimpleIndex::One, SimpleIndex::Two];

    pub fn other(self) -> SimpleIndex {
        match self {
            SimpleIndex::One => SimpleIndex::Two,
            SimpleIndex::Two => SimpleIndex::One,
        }
    }

    pub fn number(self) -> usize {
        match self {
            SimpleIndex::One => 1,
            SimpleIndex::Two => 2,
        }
    }
}

impl TryFrom<usize> for SimpleIndex {
    type Error = Error;

    fn try_from(i: usize) -> Result<Self> {
        match i {
            1 => Ok(SimpleIndex::One),
            2 => Ok(SimpleIndex::Two),
            other => Err(Error::InvalidSimpleIndex(other)),
        }
    }
}

/// An integer vector `x*a1 + y*a2` in the root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    pub x: BigInt,
    pub y: BigInt,
}

impl RootVector {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        RootVector { x: x.into(), y: y.into() }
    }

    pub fn simple(i: SimpleIndex) -> Self {
        match i {
            SimpleIndex::One => RootVector::new(1, 0),
            SimpleIndex::Two => RootVector::new(0, 1),
        }
    }

    pub fn coordinate(&self, i: SimpleIndex) -> &BigInt {
        match i {
            SimpleIndex::One => &self.x,
            SimpleIndex::Two => &self.y,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Both coordinates non-negative and not both zero.
    pub fn is_positive(&self) -> bool {
        !self.x.is_negative() && !self.y.is_negative() && !self.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        (-self).is_positive()
    }

    /// Swaps the two coordinates; maps roots of `A(m,n)` to roots of `A(n,m)`.
    pub fn swapped(&self) -> RootVector {
        RootVector { x: self.y.clone(), y: self.x.clone() }
    }

    pub fn scaled(&self, k: &BigInt) -> RootVector {
        RootVector { x: &self.x * k, y: &self.y * k }
    }

    /// `|x| >= |other.x|` and `|y| >= |other.y|`.
    fn dominates_abs(&self, other: &RootVector) -> bool {
        self.x.abs() >= other.x.abs() && self.y.abs() >= other.y.abs()
    }

    fn l1(&self) -> BigInt {
        self.x.abs() + self.y.abs()
    }

    fn exceeds_abs(&self, bound: &RootVector) -> bool {
        self.x.abs() > bound.x.abs() || self.y.abs() > bound.y.abs()
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector { x: -&self.x, y: -&self.y }
    }
}

impl Neg for RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector { x: -self.x, y: -self.y }
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector { x: &self.x + &rhs.x, y: &self.y + &rhs.y }
    }
}

/// A word `s_1 s_2 ... s_k` in the simple reflections. Acts right to left.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeylWord(pub Vec<SimpleIndex>);

impl WeylWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, a: &CartanMatrix2, v: &RootVector) -> RootVector {
        self.0.iter().rev().fold(v.clone(), |acc, &i| a.reflect(i, &acc))
    }
}

/// Sign of a real root relative to its orbit representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Where a real root sits in the Weyl orbit: `v = sign * t^power(a_simple)`.
///
/// Every real root has this form because the Weyl group of a rank-2 system is
/// `<t> ∪ <t> r1`, with `r1(a1) = -a1` and `r1(a2) = -t(a2)`. The
/// decomposition is unique when the Weyl group is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrbitPosition {
    pub simple: SimpleIndex,
    pub power: i64,
    pub sign: Sign,
}

/// The generalized Cartan matrix `A(m,n) = [[2, -m], [-n, 2]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanMatrix2 {
    m: u32,
    n: u32,
    d1: u64,
    d2: u64,
}

impl CartanMatrix2 {
    /// Rejects `m = 0` or `n = 0` (reducible root system).
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Reducible { m, n });
        }
        let g = u64::from(m).gcd(&u64::from(n));
        Ok(CartanMatrix2 { m, n, d1: u64::from(n) / g, d2: u64::from(m) / g })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Entry `a_ij` with 1-based indices.
    pub fn entry(&self, i: SimpleIndex, j: SimpleIndex) -> i64 {
        match (i, j) {
            (SimpleIndex::One, SimpleIndex::One) | (SimpleIndex::Two, SimpleIndex::Two) => 2,
            (SimpleIndex::One, SimpleIndex::Two) => -i64::from(self.m),
            (SimpleIndex::Two, SimpleIndex::One) => -i64::from(self.n),
        }
    }

    /// Smallest positive `(d1, d2)` with `diag(d1, d2) * A` symmetric.
    pub fn symmetrizer(&self) -> (u64, u64) {
        (self.d1, self.d2)
    }

    pub fn transpose(&self) -> CartanMatrix2 {
        CartanMatrix2::new(self.n, self.m).expect("transpose of a valid matrix is valid")
    }

    pub fn matrix_type(&self) -> MatrixType {
        classify_matrix(self)
    }

    /// Product `m*n`; governs the type and the growth rate of root coordinates.
    pub fn mn(&self) -> u64 {
        u64::from(self.m) * u64::from(self.n)
    }

    /// The symmetrized form `B(u, v) = u^T diag(d) A v`.
    pub fn bilinear(&self, u: &RootVector, v: &RootVector) -> BigInt {
        let b11 = BigInt::from(2 * self.d1);
        let b12 = -BigInt::from(self.d1 * u64::from(self.m));
        let b22 = BigInt::from(2 * self.d2);
        &b11 * &u.x * &v.x + &b12 * (&u.x * &v.y + &u.y * &v.x) + &b22 * &u.y * &v.y
    }

    pub fn norm(&self, v: &RootVector) -> BigInt {
        self.bilinear(v, v)
    }

    /// `<v, a_i^vee> = sum_j a_ij v_j`.
    pub fn pairing(&self, v: &RootVector, i: SimpleIndex) -> BigInt {
        BigInt::from(self.entry(i, SimpleIndex::One)) * &v.x
            + BigInt::from(self.entry(i, SimpleIndex::Two)) * &v.y
    }

    pub fn reflect(&self, i: SimpleIndex, v: &RootVector) -> RootVector {
        let c = self.pairing(v, i);
        match i {
            SimpleIndex::One => RootVector { x: &v.x - c, y: v.y.clone() },
            SimpleIndex::Two => RootVector { x: v.x.clone(), y: &v.y - c },
        }
    }

    /// `t(v) = r1(r2(v))`.
    pub fn translate(&self, v: &RootVector) -> RootVector {
        self.reflect(SimpleIndex::One, &self.reflect(SimpleIndex::Two, v))
    }

    /// `t^-1(v) = r2(r1(v))`.
    pub fn translate_inverse(&self, v: &RootVector) -> RootVector {
        self.reflect(SimpleIndex::Two, &self.reflect(SimpleIndex::One, v))
    }

    /// `t^power(v)` for any integer power.
    pub fn translate_by(&self, v: &RootVector, power: i64) -> RootVector {
        let mut cur = v.clone();
        for _ in 0..power.unsigned_abs() {
            cur = if power > 0 { self.translate(&cur) } else { self.translate_inverse(&cur) };
        }
        cur
    }

    /// `(i, t^i(seed))` for every `i` in `range`, in increasing order of `i`.
    pub fn translation_orbit(
        &self,
        seed: &RootVector,
        range: RangeInclusive<i64>,
    ) -> Vec<(i64, RootVector)> {
        let (lo, hi) = (*range.start(), *range.end());
        if lo > hi {
            return Vec::new();
        }
        let mut cur = self.translate_by(seed, lo);
        let mut out = Vec::with_capacity((hi - lo + 1) as usize);
        for i in lo..=hi {
            let next = self.translate(&cur);
            out.push((i, cur));
            cur = next;
        }
        out
    }

    /// The root `sign * t^power(a_simple)`.
    pub fn root_at(&self, pos: OrbitPosition) -> RootVector {
        let v = self.translate_by(&RootVector::simple(pos.simple), pos.power);
        match pos.sign {
            Sign::Plus => v,
            Sign::Minus => -v,
        }
    }

    /// Locates `v` in the Weyl orbit of the simple roots, or `None` if `v` is
    /// not a real root.
    ///
    /// Walks the rays `t^k(a_i)` for `k >= 0` and `k <= 0`. For finite type a
    /// visited set detects the cycle. Otherwise the absolute coordinates along
    /// a ray never decrease, so the walk stops once the ray leaves the box
    /// `|x| <= |v.x|, |y| <= |v.y|`; a violation of that growth is reported as
    /// an internal error.
    pub fn locate(&self, v: &RootVector) -> Result<Option<OrbitPosition>> {
        if v.is_zero() {
            return Ok(None);
        }
        let norm = self.norm(v);
        let finite = !self.matrix_type().has_infinite_weyl_group();
        let neg_v = -v;
        for simple in SimpleIndex::BOTH {
            let seed = RootVector::simple(simple);
            if self.norm(&seed) != norm {
                continue;
            }
            for step in [1i64, -1] {
                let mut visited = HashSet::new();
                let mut cur = seed.clone();
                let mut power = 0i64;
                loop {
                    if &cur == v {
                        return Ok(Some(OrbitPosition { simple, power, sign: Sign::Plus }));
                    }
                    if cur == neg_v {
                        return Ok(Some(OrbitPosition { simple, power, sign: Sign::Minus }));
                    }
                    if !finite && cur.exceeds_abs(v) {
                        break;
                    }
                    let next =
                        if step > 0 { self.translate(&cur) } else { self.translate_inverse(&cur) };
                    if finite {
                        visited.insert(cur);
                        if visited.contains(&next) {
                            break;
                        }
                    } else if !next.dominates_abs(&cur) || next.l1() <= cur.l1() {
                        return Err(Error::Internal(format!(
                            "orbit ray of a{} under t^{} is not growing for A({},{}): {} -> {}",
                            simple.number(),
                            step,
                            self.m,
                            self.n,
                            cur,
                            next
                        )));
                    }
                    cur = next;
                    power += step;
                }
            }
        }
        Ok(None)
    }

    pub fn is_real_root(&self, v: &RootVector) -> Result<bool> {
        Ok(self.locate(v)?.is_some())
    }

    /// Positive real roots `w(a_i)` with `w` a Weyl word of length at most
    /// `window`. For finite type the whole (finite) positive system is returned.
    pub fn positive_real_roots(&self, window: u32) -> Result<BTreeSet<RootVector>> {
        if window == 0 {
            return Err(Error::InvalidWindow { got: 0, min: 1 });
        }
        let finite = !self.matrix_type().has_infinite_weyl_group();
        let mut seen: HashSet<RootVector> = HashSet::new();
        let mut frontier: Vec<RootVector> =
            SimpleIndex::BOTH.iter().map(|&i| RootVector::simple(i)).collect();
        seen.extend(frontier.iter().cloned());
        let mut depth = 0;
        while !frontier.is_empty() && (finite || depth < window) {
            let mut next = Vec::new();
            for v in &frontier {
                for i in SimpleIndex::BOTH {
                    let w = self.reflect(i, v);
                    if seen.insert(w.clone()) {
                        next.push(w);
                    }
                }
            }
            frontier = next;
            depth += 1;
        }
        Ok(seen.into_iter().filter(RootVector::is_positive).collect())
    }
}

impl fmt::Display for CartanMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({},{})", self.m, self.n)
    }
}

/// Trichotomy by `m*n` against 4.
pub fn classify_matrix(a: &CartanMatrix2) -> MatrixType {
    match a.mn().cmp(&4) {
        std::cmp::Ordering::Less => MatrixType::FiniteType,
        std::cmp::Ordering::Equal => MatrixType::AffineType,
        std::cmp::Ordering::Greater => MatrixType::IndefiniteType,
    }
}
