//! Finite groups given by multiplication tables, and the subgroup machinery
//! (generated subgroups, normal closures, quotients) used by the wreath oracle.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::path::Path;

use crate::error::{Error, Result};

/// Elements are `0..order()`; the identity is always index 0.
pub trait Group {
    fn order(&self) -> usize;

    fn mul(&self, a: usize, b: usize) -> usize;

    fn inv(&self, a: usize) -> usize;

    fn identity(&self) -> usize {
        0
    }

    /// `[a, b] = a b a^-1 b^-1`.
    fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ab_ai = self.mul(ab, self.inv(a));
        self.mul(ab_ai, self.inv(b))
    }

    /// `g x g^-1`.
    fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut cur = a;
        while cur != self.identity() {
            cur = self.mul(cur, a);
            k += 1;
        }
        k
    }
}

/// Names accepted by [`FiniteGroup::builtin`].
pub const BUILTIN_GROUPS: [&str; 10] =
    ["trivial", "C2", "C3", "C4", "V4", "S3", "D4", "Q8", "A4", "S4"];

/// A finite group stored as a full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
}

impl Group for FiniteGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major table, checking the group axioms.
    ///
    /// Rows and columns must be permutations with index 0 acting as the
    /// identity. Associativity is checked with Light's test on a generating
    /// set, which is exhaustive: elements `g` with `(xg)y = x(gy)` for all
    /// `x, y` are closed under multiplication.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidGroupTable(msg));
        if order == 0 {
            return bad("order must be positive".into());
        }
        if table.len() != order * order {
            return bad(format!("expected {} entries, got {}", order * order, table.len()));
        }
        if let Some(&e) = table.iter().find(|&&e| e >= order) {
            return bad(format!("entry {e} out of range 0..{order}"));
        }
        for i in 0..order {
            if table[i] != i || table[i * order] != i {
                return bad("index 0 is not the identity".into());
            }
        }
        let mut seen = vec![false; order];
        for r in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..order {
                let e = table[r * order + c];
                if std::mem::replace(&mut seen[e], true) {
                    return bad(format!("row {r} repeats {e}"));
                }
            }
        }
        for c in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for r in 0..order {
                let e = table[r * order + c];
                if std::mem::replace(&mut seen[e], true) {
                    return bad(format!("column {c} repeats {e}"));
                }
            }
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        for g in magma_generators(order, &mul) {
            for x in 0..order {
                let xg = mul(x, g);
                for y in 0..order {
                    if mul(xg, y) != mul(x, mul(g, y)) {
                        return bad(format!("not associative: ({x}*{g})*{y} != {x}*({g}*{y})"));
                    }
                }
            }
        }
        let inverses = (0..order)
            .map(|a| {
                (0..order).find(|&b| mul(a, b) == 0).expect("latin square row contains 0") as u32
            })
            .collect();
        Ok(FiniteGroup { order, table: table.into_iter().map(|e| e as u32).collect(), inverses })
    }

    /// Parses the text format: the order `N` on the first line, then `N` rows
    /// of `N` whitespace-separated 0-based product indices.
    pub fn parse_table(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::InvalidGroupTable("empty input".into()))?;
        let order: usize = header
            .parse()
            .map_err(|_| Error::InvalidGroupTable(format!("bad order line `{header}`")))?;
        let mut table = Vec::with_capacity(order * order);
        let mut rows = 0;
        for line in lines {
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse().map_err(|_| Error::InvalidGroupTable(format!("bad entry `{t}`")))
                })
                .collect::<Result<_>>()?;
            if row.len() != order {
                return Err(Error::InvalidGroupTable(format!(
                    "row {rows} has {} entries, expected {order}",
                    row.len()
                )));
            }
            table.extend(row);
            rows += 1;
        }
        if rows != order {
            return Err(Error::InvalidGroupTable(format!("expected {order} rows, got {rows}")));
        }
        FiniteGroup::from_table(order, table)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        FiniteGroup::parse_table(&text)
    }

    /// Inverse of [`FiniteGroup::parse_table`].
    pub fn to_table_string(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for r in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|c| self.mul(r, c).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn cyclic(k: usize) -> Self {
        let table = (0..k * k).map(|i| (i / k + i % k) % k).collect();
        FiniteGroup::from_table(k, table).expect("cyclic group table")
    }

    /// Closure of a set of permutations of `0..degree` under composition
    /// `(p*q)(i) = p(q(i))`, listed in lexicographic order.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Self {
        let degree = generators.first().map_or(0, Vec::len);
        let identity: Vec<usize> = (0..degree).collect();
        let compose =
            |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&i| p[i]).collect() };
        let mut elements = vec![identity.clone()];
        let mut known: HashSet<Vec<usize>> = HashSet::from([identity]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let p = compose(&elements[i], g);
                if known.insert(p.clone()) {
                    elements.push(p);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        elements.sort();
        let index: HashMap<&Vec<usize>, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let order = elements.len();
        let mut table = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                table.push(index[&compose(a, b)]);
            }
        }
        FiniteGroup::from_table(order, table).expect("permutation group table")
    }

    fn quaternion() -> Self {
        // element 4*s + u is (-1)^s * [1, i, j, k][u]
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mut table = Vec::with_capacity(64);
        for a in 0..8 {
            for b in 0..8 {
                let (s, u) = UNIT[a % 4][b % 4];
                table.push(4 * ((a / 4 + b / 4 + s) % 2) + u);
            }
        }
        FiniteGroup::from_table(8, table).expect("quaternion table")
    }

    /// One of the groups in [`BUILTIN_GROUPS`].
    pub fn builtin(name: &str) -> Result<Self> {
        let perms = |gens: &[&[usize]]| {
            FiniteGroup::from_permutations(&gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>())
        };
        Ok(match name {
            "trivial" => FiniteGroup::cyclic(1),
            "C2" => FiniteGroup::cyclic(2),
            "C3" => FiniteGroup::cyclic(3),
            "C4" => FiniteGroup::cyclic(4),
            "V4" => perms(&[&[1, 0, 3, 2], &[2, 3, 0, 1]]),
            "S3" => perms(&[&[1, 0, 2], &[1, 2, 0]]),
            "D4" => perms(&[&[1, 2, 3, 0], &[0, 3, 2, 1]]),
            "Q8" => FiniteGroup::quaternion(),
            "A4" => perms(&[&[1, 2, 0, 3], &[1, 0, 3, 2]]),
            "S4" => perms(&[&[1, 0, 2, 3], &[1, 2, 3, 0]]),
            other => return Err(Error::UnknownGroup(other.to_string())),
        })
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut sub = SubgroupBuilder::new(self);
        let mut gens = Vec::new();
        for x in 1..self.order {
            if !sub.contains(x) {
                sub.add_generator(self, x);
                gens.push(x);
            }
        }
        gens
    }

    /// The subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let commutators = (0..self.order).flat_map(|a| (0..self.order).map(move |b| (a, b)));
        let mut sub = SubgroupBuilder::new(self);
        for (a, b) in commutators {
            sub.add_generator(self, self.commutator(a, b));
        }
        sub.elements()
    }

    /// `F / [F, F]`.
    pub fn abelianization(&self) -> Result<FiniteGroup> {
        quotient(self, &self.derived_subgroup())
    }
}

/// Finds a set whose left-bracketed products cover the whole magma.
fn magma_generators(order: usize, mul: &impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    loop {
        let mut covered = vec![false; order];
        let mut reached = gens.clone();
        for &g in &gens {
            covered[g] = true;
        }
        let mut i = 0;
        while i < reached.len() {
            for &g in &gens {
                let p = mul(reached[i], g);
                if !covered[p] {
                    covered[p] = true;
                    reached.push(p);
                }
            }
            i += 1;
        }
        match covered.iter().position(|c| !c) {
            Some(x) => gens.push(x),
            None => return gens,
        }
    }
}

/// Incrementally grown subgroup of some [`Group`].
#[derive(Debug, Clone)]
pub struct SubgroupBuilder {
    member: Vec<bool>,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl SubgroupBuilder {
    pub fn new<G: Group + ?Sized>(g: &G) -> Self {
        let mut member = vec![false; g.order()];
        member[g.identity()] = true;
        SubgroupBuilder { member, elements: vec![g.identity()], generators: Vec::new() }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member[x]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Sorted element list.
    pub fn elements(&self) -> Vec<usize> {
        let mut out = self.elements.clone();
        out.sort_unstable();
        out
    }

    /// Adds `x` and closes under right multiplication by all generators.
    /// Returns whether the subgroup grew.
    pub fn add_generator<G: Group + ?Sized>(&mut self, g: &G, x: usize) -> bool {
        if self.member[x] {
            return false;
        }
        self.generators.push(x);
        let mut i = 0;
        let mut fresh_start = self.elements.len();
        // old elements only need the new generator
        while i < fresh_start {
            let p = g.mul(self.elements[i], x);
            if !self.member[p] {
                self.member[p] = true;
                self.elements.push(p);
            }
            i += 1;
        }
        while fresh_start < self.elements.len() {
            let h = self.elements[fresh_start];
            for k in 0..self.generators.len() {
                let p = g.mul(h, self.generators[k]);
                if !self.member[p] {
                    self.member[p] = true;
                    self.elements.push(p);
                }
            }
            fresh_start += 1;
        }
        true
    }
}

/// Subgroup generated by `gens`, sorted.
pub fn generated_subgroup<G: Group + ?Sized>(g: &G, gens: &[usize]) -> Vec<usize> {
    let mut sub = SubgroupBuilder::new(g);
    for &x in gens {
        sub.add_generator(g, x);
    }
    sub.elements()
}

/// Smallest normal subgroup containing `seeds`, given generators `conjugators`
/// of the ambient group. Sorted.
///
/// A subgroup is normal once the conjugates of its generators by the
/// ambient generators lie in it, so only generators are conjugated.
pub fn normal_closure<G: Group + ?Sized>(
    g: &G,
    conjugators: &[usize],
    seeds: &[usize],
) -> Vec<usize> {
    let mut sub = SubgroupBuilder::new(g);
    let mut pending: Vec<usize> = seeds.to_vec();
    while let Some(x) = pending.pop() {
        if sub.add_generator(g, x) {
            for &c in conjugators {
                pending.push(g.conjugate(c, x));
                pending.push(g.conjugate(g.inv(c), x));
            }
        }
    }
    sub.elements()
}

/// `G / N` as a table group. `normal` must be a normal subgroup; cosets are
/// numbered in order of their smallest element, so the identity coset is 0.
pub fn quotient<G: Group + ?Sized>(g: &G, normal: &[usize]) -> Result<FiniteGroup> {
    let mut label = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if label[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &h in normal {
            let y = g.mul(x, h);
            if label[y] != usize::MAX && label[y] != id {
                return Err(Error::Internal("cosets overlap: subgroup is not closed".into()));
            }
            label[y] = id;
        }
    }
    let k = reps.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            table.push(label[g.mul(a, b)]);
        }
    }
    FiniteGroup::from_table(k, table)
        .map_err(|e| Error::Internal(format!("quotient by a non-normal subgroup: {e}")))
}

/// Number of elements of each order. Decides isomorphism between finite abelian groups.
pub fn order_profile<G: Group + ?Sized>(g: &G) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for a in 0..g.order() {
        *out.entry(g.element_order(a)).or_insert(0) += 1;
    }
    out
}

/// Isomorphism test for two abelian table groups.
pub fn abelian_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    a.is_abelian() && b.is_abelian() && order_profile(a) == order_profile(b)
}
