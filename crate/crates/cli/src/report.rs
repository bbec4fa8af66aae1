//! Serializable report records and their text rendering.
//!
//! Every record here is plain data built from library results. JSON output is
//! `serde_json` over these structs, so field order is fixed by declaration
//! order and identical inputs give byte-identical output.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use twinlattice::{
    CommutationEntry, ConditionI, ConditionIWitness, ConditionReport, Direction, End,
    LemmaPairCheck, LemmaReport, MatrixType, MinimalC, Outcome, PairKind, RootVector, Verdict,
    WallRoot,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Big integers as bare JSON numbers, at any size.
mod bigint_number {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::{de, ser, Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Number;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        Number::from_str(&x.to_string()).map_err(ser::Error::custom)?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let n = Number::deserialize(d)?;
        BigInt::from_str(&n.to_string()).map_err(de::Error::custom)
    }
}

/// A root as `[x, y]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root(
    #[serde(with = "bigint_number")] pub BigInt,
    #[serde(with = "bigint_number")] pub BigInt,
);

impl From<&RootVector> for Root {
    fn from(v: &RootVector) -> Self {
        Root(v.x.clone(), v.y.clone())
    }
}

impl std::fmt::Display for Root {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

fn roots(vs: &[RootVector]) -> Vec<Root> {
    vs.iter().map(Root::from).collect()
}

fn root_list(rs: &[Root]) -> String {
    let items: Vec<String> = rs.iter().map(Root::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub m: u32,
    pub n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Finite,
    Affine,
    Indefinite,
}

impl From<MatrixType> for Classification {
    fn from(t: MatrixType) -> Self {
        match t {
            MatrixType::FiniteType => Classification::Finite,
            MatrixType::AffineType => Classification::Affine,
            MatrixType::IndefiniteType => Classification::Indefinite,
        }
    }
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Finite => "finite",
            Classification::Affine => "affine",
            Classification::Indefinite => "indefinite",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessRecord {
    Pair { phi: Root, psi: Root, support: Vec<Root> },
    NonAbelianRootGroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionIRecord {
    pub holds: bool,
    pub witness: Option<WitnessRecord>,
}

impl From<&ConditionI> for ConditionIRecord {
    fn from(c: &ConditionI) -> Self {
        let witness = c.witness.as_ref().map(|w| match w {
            ConditionIWitness::Pair { phi, psi, support } => {
                WitnessRecord::Pair { phi: phi.into(), psi: psi.into(), support: roots(support) }
            }
            ConditionIWitness::NonAbelianRootGroup => WitnessRecord::NonAbelianRootGroup,
        });
        ConditionIRecord { holds: c.holds, witness }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionIIRecord {
    pub holds: bool,
    #[serde(rename = "minimal_C_graph")]
    pub minimal_c_graph: Option<u64>,
    #[serde(rename = "minimal_C_chambers")]
    pub minimal_c_chambers: Option<u64>,
    pub stable: bool,
}

impl From<&MinimalC> for ConditionIIRecord {
    fn from(c: &MinimalC) -> Self {
        ConditionIIRecord {
            holds: c.graph.is_some(),
            minimal_c_graph: c.graph,
            minimal_c_chambers: c.chambers,
            stable: c.stable,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutcomeRecord {
    FiniteType,
    ResiduallyFinite,
    VirtuallySimple,
    Simple,
    Unknown,
}

impl From<Outcome> for OutcomeRecord {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::FiniteType => OutcomeRecord::FiniteType,
            Outcome::ResiduallyFinite => OutcomeRecord::ResiduallyFinite,
            Outcome::VirtuallySimple => OutcomeRecord::VirtuallySimple,
            Outcome::Simple => OutcomeRecord::Simple,
            Outcome::Unknown => OutcomeRecord::Unknown,
        }
    }
}

impl From<OutcomeRecord> for Outcome {
    fn from(o: OutcomeRecord) -> Self {
        match o {
            OutcomeRecord::FiniteType => Outcome::FiniteType,
            OutcomeRecord::ResiduallyFinite => Outcome::ResiduallyFinite,
            OutcomeRecord::VirtuallySimple => Outcome::VirtuallySimple,
            OutcomeRecord::Simple => Outcome::Simple,
            OutcomeRecord::Unknown => Outcome::Unknown,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionRecord {
    pub rule: String,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub outcome: OutcomeRecord,
    pub quotient_index_bound: Option<u64>,
    pub reductions: Vec<ReductionRecord>,
    pub notes: Vec<String>,
}

impl From<&Verdict> for VerdictRecord {
    fn from(v: &Verdict) -> Self {
        VerdictRecord {
            outcome: v.outcome.into(),
            quotient_index_bound: v.quotient_index_bound,
            reductions: v
                .reductions
                .iter()
                .map(|r| ReductionRecord {
                    rule: r.rule.as_str().to_string(),
                    citation: r.citation.clone(),
                })
                .collect(),
            notes: v.notes.clone(),
        }
    }
}

/// Output of `classify`, `conditions` and `verdict`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub matrix: MatrixRecord,
    pub q: Option<u64>,
    pub classification: Classification,
    pub condition_i: Option<ConditionIRecord>,
    pub condition_ii: Option<ConditionIIRecord>,
    pub verdict: Option<VerdictRecord>,
    pub window: u32,
    pub tool_version: String,
}

impl Report {
    pub fn new(m: u32, n: u32, classification: MatrixType, window: u32) -> Self {
        Report {
            matrix: MatrixRecord { m, n },
            q: None,
            classification: classification.into(),
            condition_i: None,
            condition_ii: None,
            verdict: None,
            window,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn with_conditions(mut self, c: &ConditionReport) -> Self {
        self.condition_i = Some((&c.condition_i).into());
        self.condition_ii = Some((&c.minimal_c).into());
        self
    }

    pub fn with_verdict(mut self, q: u64, v: &Verdict) -> Self {
        self.q = Some(q);
        self.verdict = Some(v.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DirectionRecord {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallRecord {
    pub wall: i64,
    pub direction: DirectionRecord,
}

impl From<WallRoot> for WallRecord {
    fn from(w: WallRoot) -> Self {
        let direction = match w.direction {
            Direction::Plus => DirectionRecord::Plus,
            Direction::Minus => DirectionRecord::Minus,
        };
        WallRecord { wall: w.wall, direction }
    }
}

impl std::fmt::Display for WallRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = match self.direction {
            DirectionRecord::Plus => '+',
            DirectionRecord::Minus => '-',
        };
        write!(f, "{}{}", self.wall, sign)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntryRecord {
    pub phi: Root,
    pub psi: Root,
    pub phi_wall: WallRecord,
    pub psi_wall: WallRecord,
    pub prenilpotent: bool,
    pub wall_distance: u64,
    pub support: Vec<Root>,
    pub commutes: bool,
}

impl From<&CommutationEntry> for TableEntryRecord {
    fn from(e: &CommutationEntry) -> Self {
        TableEntryRecord {
            phi: (&e.phi).into(),
            psi: (&e.psi).into(),
            phi_wall: e.phi_wall.into(),
            psi_wall: e.psi_wall.into(),
            prenilpotent: e.prenilpotent,
            wall_distance: e.wall_distance,
            support: roots(&e.support),
            commutes: e.commutes,
        }
    }
}

/// Output of `table`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub matrix: MatrixRecord,
    pub classification: Classification,
    pub window: u32,
    pub entries: Vec<TableEntryRecord>,
    pub tool_version: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndRecord {
    PlusInfinity,
    MinusInfinity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKindRecord {
    AlphaAlpha,
    BetaBeta,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaPairRecord {
    pub end: EndRecord,
    pub phi: Root,
    pub psi: Root,
    pub kind: PairKindRecord,
    pub wall_distance: u64,
    pub support: Vec<Root>,
}

impl From<&LemmaPairCheck> for LemmaPairRecord {
    fn from(p: &LemmaPairCheck) -> Self {
        LemmaPairRecord {
            end: match p.end {
                End::PlusInfinity => EndRecord::PlusInfinity,
                End::MinusInfinity => EndRecord::MinusInfinity,
            },
            phi: (&p.phi).into(),
            psi: (&p.psi).into(),
            kind: match p.kind {
                PairKind::AlphaAlpha => PairKindRecord::AlphaAlpha,
                PairKind::BetaBeta => PairKindRecord::BetaBeta,
                PairKind::Mixed => PairKindRecord::Mixed,
            },
            wall_distance: p.wall_distance,
            support: roots(&p.support),
        }
    }
}

/// Output of `lemma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaRecord {
    pub matrix: MatrixRecord,
    pub window: u32,
    /// 1 or 2: the simple root whose orbit carries the non-commuting pairs.
    pub alpha: usize,
    pub passed: bool,
    pub noncommuting_pairs: usize,
    pub violations: Vec<String>,
    pub pairs: Vec<LemmaPairRecord>,
    pub tool_version: String,
}

impl From<&LemmaReport> for LemmaRecord {
    fn from(r: &LemmaReport) -> Self {
        LemmaRecord {
            matrix: MatrixRecord { m: r.m, n: r.n },
            window: r.window,
            alpha: r.alpha.number(),
            passed: r.passed(),
            noncommuting_pairs: r.noncommuting_pairs,
            violations: r.violations.clone(),
            pairs: r.checked_pairs.iter().map(LemmaPairRecord::from).collect(),
            tool_version: TOOL_VERSION.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    /// Builtin name, or the table file path.
    pub source: String,
    pub order: usize,
    pub abelian: bool,
    pub abelianization_order: usize,
}

/// Output of `wreath`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathRecord {
    pub group: GroupRecord,
    pub copies: usize,
    /// `|F|^n * n`; null if it overflows.
    pub wreath_order: Option<u128>,
    /// `[t x t^-1, y] = 1` for all `x, y` in copy 0.
    pub identity_holds: bool,
    /// Order of the quotient by the normal closure of `t`; null when over budget.
    pub shift_quotient_order: Option<usize>,
    pub notes: Vec<String>,
    pub tool_version: String,
}

/// Any command's output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Output {
    Report(Report),
    Table(TableReport),
    Lemma(LemmaRecord),
    Wreath(WreathRecord),
}

impl Output {
    pub fn to_json(&self) -> serde_json::Result<String> {
        match self {
            Output::Report(r) => serde_json::to_string_pretty(r),
            Output::Table(r) => serde_json::to_string_pretty(r),
            Output::Lemma(r) => serde_json::to_string_pretty(r),
            Output::Wreath(r) => serde_json::to_string_pretty(r),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Output::Report(r) => render_report(r),
            Output::Table(r) => render_table(r),
            Output::Lemma(r) => render_lemma(r),
            Output::Wreath(r) => render_wreath(r),
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "none".to_string(), |v| v.to_string())
}

pub fn render_report(r: &Report) -> String {
    let mut s = String::new();
    let MatrixRecord { m, n } = r.matrix;
    let _ = writeln!(s, "A({m},{n}) = [[2, -{m}], [-{n}, 2]]");
    let _ = writeln!(s, "classification: {}", r.classification.as_str());
    if let Some(c) = &r.condition_i {
        let _ = write!(s, "condition (i): {}", yes_no(c.holds));
        match &c.witness {
            Some(WitnessRecord::Pair { phi, psi, support }) => {
                let _ = write!(s, ", [U_{phi}, U_{psi}] has support {}", root_list(support));
            }
            Some(WitnessRecord::NonAbelianRootGroup) => {
                let _ = write!(s, ", root groups are non-abelian");
            }
            None => {
                let _ = write!(s, ", every distinct prenilpotent pair commutes");
            }
        }
        let _ = writeln!(s, " (window {})", r.window);
    }
    if let Some(c) = &r.condition_ii {
        let _ = writeln!(
            s,
            "condition (ii): {}, minimal C = {} (graph distance), {} (chambers between), {}",
            yes_no(c.holds),
            opt(c.minimal_c_graph),
            opt(c.minimal_c_chambers),
            if c.stable { "stable" } else { "not stable" }
        );
    }
    if let Some(v) = &r.verdict {
        let outcome: Outcome = v.outcome.into();
        let _ = write!(s, "verdict (q = {}): {outcome}", opt(r.q));
        if let Some(b) = v.quotient_index_bound {
            let _ = write!(s, ", index of simple subgroup at most {b}");
        }
        let _ = writeln!(s);
        for red in &v.reductions {
            let _ = writeln!(s, "  {}: {}", red.rule, red.citation);
        }
        for note in &v.notes {
            let _ = writeln!(s, "  note: {note}");
        }
    }
    let _ = writeln!(s, "twinlattice {}", r.tool_version);
    s
}

pub fn render_table(r: &TableReport) -> String {
    let mut s = String::new();
    let MatrixRecord { m, n } = r.matrix;
    let _ = writeln!(
        s,
        "A({m},{n}) {}, window {}: {} pairs",
        r.classification.as_str(),
        r.window,
        r.entries.len()
    );
    for e in &r.entries {
        let kind = if !e.prenilpotent {
            "not prenilpotent".to_string()
        } else if e.commutes {
            "commute".to_string()
        } else {
            format!("support {}", root_list(&e.support))
        };
        let _ = writeln!(
            s,
            "{} @ {}  {} @ {}  d={}  {kind}",
            e.phi, e.phi_wall, e.psi, e.psi_wall, e.wall_distance
        );
    }
    s
}

pub fn render_lemma(r: &LemmaRecord) -> String {
    let mut s = String::new();
    let MatrixRecord { m, n } = r.matrix;
    let _ = writeln!(
        s,
        "A({m},{n}), window {}: {} pairs checked, {} non-commuting, alpha = simple root {}",
        r.window,
        r.pairs.len(),
        r.noncommuting_pairs,
        r.alpha
    );
    for p in r.pairs.iter().filter(|p| !p.support.is_empty()) {
        let _ = writeln!(
            s,
            "  {} {} {} d={} -> {}",
            match p.end {
                EndRecord::PlusInfinity => "+inf",
                EndRecord::MinusInfinity => "-inf",
            },
            p.phi,
            p.psi,
            p.wall_distance,
            root_list(&p.support)
        );
    }
    for v in &r.violations {
        let _ = writeln!(s, "  violation: {v}");
    }
    let _ = writeln!(s, "result: {}", if r.passed { "passed" } else { "FAILED" });
    s
}

pub fn render_wreath(r: &WreathRecord) -> String {
    let mut s = String::new();
    let g = &r.group;
    let _ = writeln!(
        s,
        "F = {} (order {}, {}), F/[F,F] of order {}",
        g.source,
        g.order,
        if g.abelian { "abelian" } else { "non-abelian" },
        g.abelianization_order
    );
    let _ = writeln!(s, "F wr Z/{}: order {}", r.copies, opt(r.wreath_order));
    let _ = writeln!(s, "[t x t^-1, y] = 1 on copy 0: {}", yes_no(r.identity_holds));
    let _ = writeln!(s, "quotient by <<t>>: order {}", opt(r.shift_quotient_order));
    for note in &r.notes {
        let _ = writeln!(s, "  note: {note}");
    }
    s
}
