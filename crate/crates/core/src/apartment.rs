//! The standard twin apartment of an infinite dihedral Coxeter complex.
//!
//! The apartment is the real line: walls sit at the integers and chambers are
//! the open intervals `(k, k+1)`, with fundamental chamber `(0, 1)`. A real
//! root is a half-line bounded by a wall. `a1` is `{x > 0}`, `a2` is `{x < 1}`,
//! the simple reflections act as `r1: x -> -x` and `r2: x -> 2 - x`, and the
//! translation `t = r1 r2` is `x -> x - 2`.

use std::cmp::Ordering;
use std::fmt;

use crate::cartan::{CartanMatrix2, OrbitPosition, RootVector, Sign, SimpleIndex, WeylWord};
use crate::error::{Error, Result};

/// The isometry `x -> sign * x + offset` of the apartment line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylElement {
    reversing: bool,
    offset: i64,
}

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement { reversing: false, offset: 0 };

    pub fn new(sign: i8, offset: i64) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        WeylElement { reversing: sign < 0, offset }
    }

    pub fn simple_reflection(i: SimpleIndex) -> Self {
        match i {
            SimpleIndex::One => WeylElement::new(-1, 0),
            SimpleIndex::Two => WeylElement::new(-1, 2),
        }
    }

    /// `t^k`, acting as `x -> x - 2k`.
    pub fn translation(k: i64) -> Self {
        WeylElement::new(1, -2 * k)
    }

    /// A translation whose length exceeds `bound`.
    pub fn translation_longer_than(bound: u64) -> Self {
        WeylElement::translation(bound as i64 / 2 + 1)
    }

    pub fn from_word(word: &WeylWord) -> Self {
        word.0
            .iter()
            .fold(WeylElement::IDENTITY, |acc, &i| acc.compose(&WeylElement::simple_reflection(i)))
    }

    pub fn sign(&self) -> i8 {
        if self.reversing {
            -1
        } else {
            1
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn is_translation(&self) -> bool {
        !self.reversing
    }

    /// `self . other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            reversing: self.reversing != other.reversing,
            offset: i64::from(self.sign()) * other.offset + self.offset,
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement { reversing: self.reversing, offset: -i64::from(self.sign()) * self.offset }
    }

    pub fn apply_point(&self, x: i64) -> i64 {
        i64::from(self.sign()) * x + self.offset
    }

    pub fn apply_wall_root(&self, r: WallRoot) -> WallRoot {
        WallRoot {
            wall: self.apply_point(r.wall),
            direction: if self.reversing { r.direction.flip() } else { r.direction },
        }
    }
}

/// Which side of its wall a half-line lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// `{x > wall}`
    Plus,
    /// `{x < wall}`
    Minus,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Plus => Direction::Minus,
            Direction::Minus => Direction::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Direction::Plus => '+',
            Direction::Minus => '-',
        }
    }
}

/// An end of the apartment line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    PlusInfinity,
    MinusInfinity,
}

impl End {
    /// Direction of the half-lines that contain this end.
    pub fn direction(self) -> Direction {
        match self {
            End::PlusInfinity => Direction::Plus,
            End::MinusInfinity => Direction::Minus,
        }
    }
}

/// A root seen as a half-apartment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WallRoot {
    pub wall: i64,
    pub direction: Direction,
}

impl WallRoot {
    pub fn opposite(&self) -> WallRoot {
        WallRoot { wall: self.wall, direction: self.direction.flip() }
    }

    /// Half-line containment `self ⊇ other`.
    pub fn contains(&self, other: &WallRoot) -> bool {
        self.direction == other.direction
            && match self.direction {
                Direction::Plus => self.wall <= other.wall,
                Direction::Minus => self.wall >= other.wall,
            }
    }

    /// Whether the chamber `(k, k+1)` lies in the half-line.
    pub fn contains_chamber(&self, k: i64) -> bool {
        match self.direction {
            Direction::Plus => k >= self.wall,
            Direction::Minus => k < self.wall,
        }
    }

    /// Positive roots are the half-lines containing the chamber `(0, 1)`.
    pub fn is_positive(&self) -> bool {
        self.contains_chamber(0)
    }
}

impl fmt::Display for WallRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.wall, self.direction.symbol())
    }
}

fn require_infinite(a: &CartanMatrix2) -> Result<()> {
    if a.matrix_type().has_infinite_weyl_group() {
        Ok(())
    } else {
        Err(Error::FiniteType { m: a.m(), n: a.n() })
    }
}

fn base_wall_root(i: SimpleIndex) -> WallRoot {
    match i {
        SimpleIndex::One => WallRoot { wall: 0, direction: Direction::Plus },
        SimpleIndex::Two => WallRoot { wall: 1, direction: Direction::Minus },
    }
}

fn wall_root_at(pos: OrbitPosition) -> WallRoot {
    let base = WeylElement::translation(pos.power).apply_wall_root(base_wall_root(pos.simple));
    match pos.sign {
        Sign::Plus => base,
        Sign::Minus => base.opposite(),
    }
}

/// The half-apartment of a real root.
pub fn wall_of(a: &CartanMatrix2, v: &RootVector) -> Result<WallRoot> {
    require_infinite(a)?;
    let pos = a.locate(v)?.ok_or_else(|| Error::NotARealRoot(Box::new(v.clone())))?;
    Ok(wall_root_at(pos))
}

/// Inverse of [`wall_of`]: even walls carry the `a1` orbit, odd walls the `a2` orbit.
pub fn root_of_wall(a: &CartanMatrix2, r: WallRoot) -> Result<RootVector> {
    require_infinite(a)?;
    let (simple, power) = if r.wall.rem_euclid(2) == 0 {
        (SimpleIndex::One, -r.wall / 2)
    } else {
        (SimpleIndex::Two, (1 - r.wall) / 2)
    };
    let sign =
        if base_wall_root(simple).direction == r.direction { Sign::Plus } else { Sign::Minus };
    Ok(a.root_at(OrbitPosition { simple, power, sign }))
}

/// Nested half-lines; in a twin tree this is prenilpotency.
pub fn is_prenilpotent(a: &CartanMatrix2, phi: &RootVector, psi: &RootVector) -> Result<bool> {
    let (p, q) = (wall_of(a, phi)?, wall_of(a, psi)?);
    Ok(p.direction == q.direction)
}

/// Graph distance between the walls of two real roots.
pub fn wall_distance(a: &CartanMatrix2, phi: &RootVector, psi: &RootVector) -> Result<u64> {
    let (p, q) = (wall_of(a, phi)?, wall_of(a, psi)?);
    Ok(p.wall.abs_diff(q.wall))
}

/// Range of walls covered by a window of `w` translation periods.
///
/// A window of `w` holds the roots `±t^k(a_i)` with `|k| <= w`, whose walls
/// fill the integer interval `[-2w, 2w + 1]`.
pub fn window_walls(window: u32) -> std::ops::RangeInclusive<i64> {
    let w = i64::from(window);
    -2 * w..=2 * w + 1
}

/// All real roots in the window, sorted by wall then direction.
pub fn window_roots(a: &CartanMatrix2, window: u32) -> Result<Vec<(WallRoot, RootVector)>> {
    require_infinite(a)?;
    let mut out = Vec::new();
    for wall in window_walls(window) {
        for direction in [Direction::Plus, Direction::Minus] {
            let r = WallRoot { wall, direction };
            out.push((r, root_of_wall(a, r)?));
        }
    }
    Ok(out)
}

/// Roots in the window whose half-line contains `end`, ordered by increasing inclusion.
pub fn end_family(a: &CartanMatrix2, end: End, window: u32) -> Result<Vec<RootVector>> {
    if window == 0 {
        return Err(Error::InvalidWindow { got: 0, min: 1 });
    }
    let dir = end.direction();
    let mut roots: Vec<_> =
        window_roots(a, window)?.into_iter().filter(|(r, _)| r.direction == dir).collect();
    roots.sort_by(|(p, _), (q, _)| match (p.contains(q), q.contains(p)) {
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        _ => Ordering::Equal,
    });
    Ok(roots.into_iter().map(|(_, v)| v).collect())
}
