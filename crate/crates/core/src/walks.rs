//! Walk models, domains, statistics, and the two counting oracles:
//! exhaustive enumeration and dynamic programming over big integers.
//!
//! Coordinates are stored doubled so that half-integer start points such as
//! `(1/2, 1/2)` stay in exact integer arithmetic.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    /// Every step is a unit vector or its negative.
    Simple,
    /// Pairs `(positive or 0, negative or 0)`, never both zero.
    Hesitating,
    /// Pairs `(negative or 0, positive or 0)`, double zeros allowed.
    Vacillating,
}

/// A step set together with the dimension it lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StepModel {
    pub kind: StepKind,
    pub dim: usize,
}

impl StepModel {
    pub const SIMPLE_2D: StepModel = StepModel {
        kind: StepKind::Simple,
        dim: 2,
    };
    pub const HESITATING: StepModel = StepModel {
        kind: StepKind::Hesitating,
        dim: 2,
    };
    pub const VACILLATING: StepModel = StepModel {
        kind: StepKind::Vacillating,
        dim: 2,
    };

    pub fn simple(dim: usize) -> Self {
        StepModel {
            kind: StepKind::Simple,
            dim,
        }
    }

    pub fn hesitating(dim: usize) -> Self {
        StepModel {
            kind: StepKind::Hesitating,
            dim,
        }
    }

    pub fn vacillating(dim: usize) -> Self {
        StepModel {
            kind: StepKind::Vacillating,
            dim,
        }
    }

    pub fn is_paired(&self) -> bool {
        self.kind != StepKind::Simple
    }

    /// Steps allowed at 1-based position `index`; `prev_zero` tells whether
    /// the first half of the current hesitating pair was a zero step.
    fn allowed(&self, index: usize, prev_zero: bool) -> Vec<Step> {
        let dim = self.dim as u8;
        let pos = (0..dim).map(Step::Pos);
        let neg = (0..dim).map(Step::Neg);
        let mut out: Vec<Step> = match self.kind {
            StepKind::Simple => pos.chain(neg).collect(),
            StepKind::Hesitating => {
                if index % 2 == 1 {
                    std::iter::once(Step::Zero).chain(pos).collect()
                } else if prev_zero {
                    neg.collect()
                } else {
                    std::iter::once(Step::Zero).chain(neg).collect()
                }
            }
            StepKind::Vacillating => {
                if index % 2 == 1 {
                    std::iter::once(Step::Zero).chain(neg).collect()
                } else {
                    std::iter::once(Step::Zero).chain(pos).collect()
                }
            }
        };
        out.sort();
        out
    }
}

impl fmt::Display for StepModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            StepKind::Simple => "simple",
            StepKind::Hesitating => "hesitating",
            StepKind::Vacillating => "vacillating",
        };
        write!(f, "{name}/{}d", self.dim)
    }
}

/// A single step: zero, `+e_axis` or `-e_axis` (axes are 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Zero,
    Pos(u8),
    Neg(u8),
}

impl Step {
    pub const E: Step = Step::Pos(0);
    pub const N: Step = Step::Pos(1);
    pub const W: Step = Step::Neg(0);
    pub const S: Step = Step::Neg(1);

    // 0 < E < N < ... < S < W, which is ASCII order on compass letters.
    fn key(self) -> (u8, u8) {
        match self {
            Step::Zero => (0, 0),
            Step::Pos(a) => (1, a),
            Step::Neg(a) => (2, u8::MAX - a),
        }
    }

    pub fn is_zero(self) -> bool {
        self == Step::Zero
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Step::Pos(_))
    }

    pub fn is_negative(self) -> bool {
        matches!(self, Step::Neg(_))
    }

    pub fn axis(self) -> Option<usize> {
        match self {
            Step::Zero => None,
            Step::Pos(a) | Step::Neg(a) => Some(a as usize),
        }
    }

    pub fn negated(self) -> Step {
        match self {
            Step::Zero => Step::Zero,
            Step::Pos(a) => Step::Neg(a),
            Step::Neg(a) => Step::Pos(a),
        }
    }

    /// Adds this step to a doubled-coordinate vector.
    pub fn apply(self, coords: &mut [i64]) {
        match self {
            Step::Zero => {}
            Step::Pos(a) => coords[a as usize] += 2,
            Step::Neg(a) => coords[a as usize] -= 2,
        }
    }

    pub fn compass(self) -> Option<char> {
        match self {
            Step::Zero => Some('0'),
            Step::Pos(0) => Some('E'),
            Step::Pos(1) => Some('N'),
            Step::Neg(0) => Some('W'),
            Step::Neg(1) => Some('S'),
            _ => None,
        }
    }

    pub fn from_compass(c: char) -> Option<Step> {
        match c {
            '0' => Some(Step::Zero),
            'E' => Some(Step::E),
            'N' => Some(Step::N),
            'W' => Some(Step::W),
            'S' => Some(Step::S),
            _ => None,
        }
    }

    fn signed_axis(self) -> String {
        match self {
            Step::Zero => "0".to_string(),
            Step::Pos(a) => format!("+{}", a + 1),
            Step::Neg(a) => format!("-{}", a + 1),
        }
    }
}

impl PartialOrd for Step {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Step {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// A lattice point in doubled coordinates: the stored value `c` stands for `c/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<i64>);

impl Point {
    pub fn origin(dim: usize) -> Self {
        Point(vec![0; dim])
    }

    /// Builds a point from integer coordinates.
    pub fn integer(coords: &[i64]) -> Self {
        Point(coords.iter().map(|c| 2 * c).collect())
    }

    /// The point `(1/2, ..., 1/2)`.
    pub fn half_ones(dim: usize) -> Self {
        Point(vec![1; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Doubled value of coordinate `i`.
    pub fn doubled(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn last(&self) -> i64 {
        *self.0.last().unwrap_or(&0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if c % 2 == 0 {
                write!(f, "{}", c / 2)?;
            } else {
                write!(f, "{c}/2")?;
            }
        }
        write!(f, ")")
    }
}

/// An immutable walk: a step model, a start point and a flat step list
/// (zero steps of paired models are stored explicitly).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    model: StepModel,
    start: Point,
    steps: Vec<Step>,
}

impl Walk {
    /// Builds and validates a walk.
    pub fn new(model: StepModel, start: Point, steps: Vec<Step>) -> Result<Self> {
        if start.dim() != model.dim {
            return Err(Error::DimensionMismatch {
                walk: model.dim,
                domain: start.dim(),
            });
        }
        let walk = Walk { model, start, steps };
        validate(&walk)?;
        Ok(walk)
    }

    pub fn from_origin(model: StepModel, steps: Vec<Step>) -> Result<Self> {
        Walk::new(model, Point::origin(model.dim), steps)
    }

    pub fn empty(model: StepModel) -> Self {
        Walk {
            model,
            start: Point::origin(model.dim),
            steps: Vec::new(),
        }
    }

    /// Parses the text encoding: compass letters `N,E,S,W,0`, or
    /// comma-separated signed 1-based axes such as `+1,-3,0`.
    pub fn parse(model: StepModel, start: Point, text: &str) -> Result<Self> {
        Walk::new(model, start, parse_steps(text)?)
    }

    pub fn parse_from_origin(model: StepModel, text: &str) -> Result<Self> {
        Walk::parse(model, Point::origin(model.dim), text)
    }

    pub fn model(&self) -> StepModel {
        self.model
    }

    pub fn dim(&self) -> usize {
        self.model.dim
    }

    pub fn start(&self) -> &Point {
        &self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn half_length(&self) -> usize {
        self.steps.len() / 2
    }

    /// All prefix endpoints, start included.
    pub fn positions(&self) -> Vec<Point> {
        let mut cur = self.start.0.clone();
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(Point(cur.clone()));
        for s in &self.steps {
            s.apply(&mut cur);
            out.push(Point(cur.clone()));
        }
        out
    }

    pub fn endpoint(&self) -> Point {
        let mut cur = self.start.0.clone();
        for s in &self.steps {
            s.apply(&mut cur);
        }
        Point(cur)
    }

    pub fn to_text(&self) -> String {
        steps_to_text(&self.steps, self.model.dim)
    }

    /// Same start point and model, new steps (validated).
    pub fn with_steps(&self, steps: Vec<Step>) -> Result<Self> {
        Walk::new(self.model, self.start.clone(), steps)
    }

    /// 1-based numbers of the `-e_1` steps taken while the last coordinate is 0.
    pub fn w_steps_on_axis(&self) -> Vec<usize> {
        let pos = self.positions();
        self.steps
            .iter()
            .enumerate()
            .filter(|(i, s)| **s == Step::W && pos[*i].last() == 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// 1-based numbers of the steps going from `{x1 = x2}` to `{x1 != x2}`.
    pub fn diagonal_leaving_steps(&self) -> Vec<usize> {
        if self.dim() < 2 {
            return Vec::new();
        }
        let pos = self.positions();
        (0..self.steps.len())
            .filter(|&i| pos[i].0[0] == pos[i].0[1] && pos[i + 1].0[0] != pos[i + 1].0[1])
            .map(|i| i + 1)
            .collect()
    }

    /// 1-based numbers of the steps whose last coordinate changes sign.
    pub fn sign_change_steps(&self) -> Vec<usize> {
        let pos = self.positions();
        (0..self.steps.len())
            .filter(|&i| pos[i].last() * pos[i + 1].last() < 0)
            .map(|i| i + 1)
            .collect()
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Point {
    /// Parses the display form, e.g. `(1/2,-3/2)` or `(2,0)`.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Point(Vec::new()));
        }
        inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let bad = || Error::Parse(format!("bad coordinate {tok:?}"));
                match tok.strip_suffix("/2") {
                    Some(num) => num.trim().parse::<i64>().map_err(|_| bad()),
                    None => tok.parse::<i64>().map(|c| 2 * c).map_err(|_| bad()),
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Point)
    }
}

#[derive(Serialize, Deserialize)]
struct RawWalk {
    #[serde(default = "default_kind")]
    model: StepKind,
    #[serde(default = "default_dim")]
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    start: Option<String>,
    steps: String,
}

fn default_kind() -> StepKind {
    StepKind::Simple
}

fn default_dim() -> usize {
    2
}

impl Serialize for Walk {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawWalk {
            model: self.model.kind,
            dim: self.model.dim,
            start: (!self.start.is_zero()).then(|| self.start.to_string()),
            steps: self.to_text(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Walk {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawWalk::deserialize(d)?;
        let model = StepModel {
            kind: raw.model,
            dim: raw.dim,
        };
        let start = match raw.start {
            Some(t) => Point::parse(&t).map_err(D::Error::custom)?,
            None => Point::origin(raw.dim),
        };
        Walk::parse(model, start, &raw.steps).map_err(D::Error::custom)
    }
}

pub fn parse_steps(text: &str) -> Result<Vec<Step>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    if text.contains(',') || text.starts_with('+') || text.starts_with('-') {
        text.split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok == "0" {
                    return Ok(Step::Zero);
                }
                let (sign, rest) = tok.split_at(1);
                let axis: u8 = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad step token {tok:?}")))?;
                if axis == 0 {
                    return Err(Error::Parse(format!("axes are 1-based: {tok:?}")));
                }
                match sign {
                    "+" => Ok(Step::Pos(axis - 1)),
                    "-" => Ok(Step::Neg(axis - 1)),
                    _ => Err(Error::Parse(format!("bad step token {tok:?}"))),
                }
            })
            .collect()
    } else {
        text.chars()
            .map(|c| Step::from_compass(c).ok_or_else(|| Error::Parse(format!("bad step letter {c:?}"))))
            .collect()
    }
}

pub fn steps_to_text(steps: &[Step], dim: usize) -> String {
    if dim == 2 {
        steps.iter().map(|s| s.compass().unwrap_or('?')).collect()
    } else {
        steps.iter().map(|s| s.signed_axis()).collect::<Vec<_>>().join(",")
    }
}

/// Restricted region of space in which a walk must stay.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    /// `{x >= 0, y >= 0}`
    Quadrant,
    /// `{x >= y >= 0}`
    Octant,
    /// `{x >= 0, |y| <= x}`
    TiltedQuadrant,
    /// `{x1 >= ... >= xk >= 0}`
    WeylC(usize),
    /// `{x1 >= ... >= x(k-1) >= |xk|}`
    WeylD(usize),
    /// `{|x1| < x2 < ... < xk}`
    StrictWeylD(usize),
    FullSpace,
}

impl Domain {
    pub fn dim(&self) -> Option<usize> {
        match *self {
            Domain::Quadrant | Domain::Octant | Domain::TiltedQuadrant => Some(2),
            Domain::WeylC(k) | Domain::WeylD(k) | Domain::StrictWeylD(k) => Some(k),
            Domain::FullSpace => None,
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        let c = &p.0;
        match *self {
            Domain::Quadrant => c[0] >= 0 && c[1] >= 0,
            Domain::Octant => c[0] >= c[1] && c[1] >= 0,
            Domain::TiltedQuadrant => c[1].abs() <= c[0],
            Domain::WeylC(k) => k == 0 || (c.windows(2).all(|w| w[0] >= w[1]) && c[k - 1] >= 0),
            Domain::WeylD(k) => {
                if k < 2 {
                    return true;
                }
                c[..k - 1].windows(2).all(|w| w[0] >= w[1]) && c[k - 2] >= c[k - 1].abs()
            }
            Domain::StrictWeylD(k) => {
                if k < 2 {
                    return true;
                }
                c[0].abs() < c[1] && c[1..].windows(2).all(|w| w[0] < w[1])
            }
            Domain::FullSpace => true,
        }
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        match self.dim() {
            Some(d) if d != dim => Err(Error::DimensionMismatch { walk: dim, domain: d }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Quadrant => write!(f, "quadrant"),
            Domain::Octant => write!(f, "octant"),
            Domain::TiltedQuadrant => write!(f, "tilted-quadrant"),
            Domain::WeylC(k) => write!(f, "weyl-c({k})"),
            Domain::WeylD(k) => write!(f, "weyl-d({k})"),
            Domain::StrictWeylD(k) => write!(f, "strict-weyl-d({k})"),
            Domain::FullSpace => write!(f, "full-space"),
        }
    }
}

/// Closed family of endpoint constraints, so that DP tables can key on them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EndPredicate {
    Origin,
    /// On the `x1`-axis: every coordinate but the first is zero.
    XAxis,
    /// `x1 = x2`
    Diagonal,
    /// `x1 = x2` or `x1 = x2 + 1`
    ThickDiagonal,
    Fixed(Point),
    Anywhere,
}

impl EndPredicate {
    pub fn matches(&self, p: &Point) -> bool {
        let c = &p.0;
        match self {
            EndPredicate::Origin => p.is_zero(),
            EndPredicate::XAxis => c.iter().skip(1).all(|&x| x == 0),
            EndPredicate::Diagonal => c.len() >= 2 && c[0] == c[1],
            EndPredicate::ThickDiagonal => c.len() >= 2 && (c[0] == c[1] || c[0] == c[1] + 2),
            EndPredicate::Fixed(q) => p == q,
            EndPredicate::Anywhere => true,
        }
    }
}

/// Checks the parity rules of the walk's model; reports the first offending
/// 1-based step number.
pub fn validate(walk: &Walk) -> Result<()> {
    let dim = walk.model.dim;
    for (i, s) in walk.steps.iter().enumerate() {
        if let Some(a) = s.axis() {
            if a >= dim {
                return Err(Error::InvalidWalk {
                    index: i + 1,
                    reason: format!("axis {} out of range for dimension {dim}", a + 1),
                });
            }
        }
    }
    let bad = |index: usize, reason: &str| {
        Err(Error::InvalidWalk {
            index,
            reason: reason.to_string(),
        })
    };
    match walk.model.kind {
        StepKind::Simple => {
            if let Some(i) = walk.steps.iter().position(|s| s.is_zero()) {
                return bad(i + 1, "zero step in a simple walk");
            }
        }
        StepKind::Hesitating | StepKind::Vacillating => {
            let hes = walk.model.kind == StepKind::Hesitating;
            for (i, s) in walk.steps.iter().enumerate() {
                let odd = i % 2 == 0;
                let ok = if odd == hes { !s.is_negative() } else { !s.is_positive() };
                if !ok {
                    let want = if odd == hes {
                        "positive or zero"
                    } else {
                        "negative or zero"
                    };
                    return bad(i + 1, &format!("step must be {want}"));
                }
                if hes && !odd && s.is_zero() && walk.steps[i - 1].is_zero() {
                    return bad(i + 1, &format!("pair {} has two zero steps", i / 2 + 1));
                }
            }
            if walk.steps.len() % 2 == 1 {
                return bad(walk.steps.len(), "odd number of steps in a paired model");
            }
        }
    }
    Ok(())
}

/// True iff every prefix endpoint, start included, lies in `domain`.
pub fn stays_in(walk: &Walk, domain: &Domain) -> Result<bool> {
    domain.check_dim(walk.dim())?;
    let mut cur = walk.start.0.clone();
    if !domain.contains(&Point(cur.clone())) {
        return Ok(false);
    }
    for s in &walk.steps {
        s.apply(&mut cur);
        if !domain.contains(&Point(cur.clone())) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All walks from the origin; see [`enumerate_from`].
pub fn enumerate(model: StepModel, domain: &Domain, length: usize, end: &EndPredicate) -> Vec<Walk> {
    enumerate_from(model, domain, &Point::origin(model.dim), length, end)
}

/// All valid walks of `length` steps from `start`, confined to `domain`,
/// whose endpoint satisfies `end`, in lexicographic step order.
pub fn enumerate_from(
    model: StepModel,
    domain: &Domain,
    start: &Point,
    length: usize,
    end: &EndPredicate,
) -> Vec<Walk> {
    let mut out = Vec::new();
    if domain.check_dim(model.dim).is_err() || !domain.contains(start) {
        return out;
    }
    if model.is_paired() && length % 2 == 1 {
        return out;
    }
    let mut steps = Vec::with_capacity(length);
    let mut cur = start.0.clone();
    dfs(model, domain, start, length, end, &mut steps, &mut cur, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    model: StepModel,
    domain: &Domain,
    start: &Point,
    length: usize,
    end: &EndPredicate,
    steps: &mut Vec<Step>,
    cur: &mut Vec<i64>,
    out: &mut Vec<Walk>,
) {
    if steps.len() == length {
        let p = Point(cur.clone());
        if end.matches(&p) {
            out.push(Walk {
                model,
                start: start.clone(),
                steps: steps.clone(),
            });
        }
        return;
    }
    // A walk can no longer reach the target if it is too far away.
    if let Some(target) = fixed_target(end, cur.len()) {
        let dist: i64 = cur.iter().zip(&target.0).map(|(a, b)| (a - b).abs() / 2).sum();
        if dist > (length - steps.len()) as i64 {
            return;
        }
    }
    let index = steps.len() + 1;
    let prev_zero = index.is_multiple_of(2) && steps.last() == Some(&Step::Zero);
    for s in model.allowed(index, prev_zero) {
        s.apply(cur);
        if domain.contains(&Point(cur.clone())) {
            steps.push(s);
            dfs(model, domain, start, length, end, steps, cur, out);
            steps.pop();
        }
        s.negated().apply(cur);
    }
}

fn fixed_target(end: &EndPredicate, dim: usize) -> Option<Point> {
    match end {
        EndPredicate::Origin => Some(Point::origin(dim)),
        EndPredicate::Fixed(p) => Some(p.clone()),
        _ => None,
    }
}

/// Number of walks from the origin; see [`count_dp_from`].
pub fn count_dp(
    model: StepModel,
    domain: &Domain,
    length: usize,
    end: &EndPredicate,
    coordinate_bound: usize,
) -> BigUint {
    count_dp_from(model, domain, &Point::origin(model.dim), length, end, coordinate_bound)
}

/// Counts the walks [`enumerate_from`] would produce, by dynamic programming
/// over positions. States farther than `coordinate_bound` from `start` in
/// some coordinate are dropped, so the bound must be at least the length for
/// the count to be exact.
pub fn count_dp_from(
    model: StepModel,
    domain: &Domain,
    start: &Point,
    length: usize,
    end: &EndPredicate,
    coordinate_bound: usize,
) -> BigUint {
    count_dp_series(model, domain, start, length, end, coordinate_bound)
        .pop()
        .unwrap_or_default()
}

/// Counts for every length `0..=max_length` in a single pass; entry `i`
/// equals `count_dp_from(.., i, ..)`.
pub fn count_dp_series(
    model: StepModel,
    domain: &Domain,
    start: &Point,
    max_length: usize,
    end: &EndPredicate,
    coordinate_bound: usize,
) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); max_length + 1];
    if domain.check_dim(model.dim).is_err() || start.dim() != model.dim || !domain.contains(start) {
        return out;
    }
    let limit = 2 * coordinate_bound as i64;
    // State: (position, whether the current hesitating pair opened with a zero).
    let mut layer: HashMap<(Vec<i64>, bool), BigUint> = HashMap::new();
    layer.insert((start.0.clone(), false), BigUint::one());
    let total = |layer: &HashMap<(Vec<i64>, bool), BigUint>| -> BigUint {
        layer
            .iter()
            .filter(|((p, _), _)| end.matches(&Point(p.clone())))
            .map(|(_, c)| c)
            .sum()
    };
    out[0] = total(&layer);
    for index in 1..=max_length {
        let mut next: HashMap<(Vec<i64>, bool), BigUint> = HashMap::with_capacity(layer.len() * 2);
        for ((pos, prev_zero), count) in layer {
            for s in model.allowed(index, prev_zero) {
                let mut p = pos.clone();
                s.apply(&mut p);
                if p.iter().zip(&start.0).any(|(c, s)| (c - s).abs() > limit) || !domain.contains(&Point(p.clone())) {
                    continue;
                }
                let flag = model.kind == StepKind::Hesitating && index % 2 == 1 && s.is_zero();
                *next.entry((p, flag)).or_insert_with(BigUint::zero) += &count;
            }
        }
        layer = next;
        if !model.is_paired() || index % 2 == 0 {
            out[index] = total(&layer);
        }
    }
    out
}

/// Statistics recomputable from the step list alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkStats {
    pub endpoint: Point,
    /// Positions (0 = start) where the last coordinate is zero.
    pub axis_visits: Vec<usize>,
    /// `-e_1` steps taken while the last coordinate is zero.
    pub w_steps_on_axis: usize,
    pub diagonal_leaving_steps: usize,
    pub sign_changes_last_coord: usize,
    /// 1-based step numbers of positive steps whose next non-zero step is negative.
    pub sailing_points: Vec<usize>,
}

pub fn stats(walk: &Walk) -> WalkStats {
    let pos = walk.positions();
    let axis_visits = pos
        .iter()
        .enumerate()
        .filter(|(_, p)| p.last() == 0)
        .map(|(i, _)| i)
        .collect();
    let nonzero: Vec<(usize, Step)> = walk
        .steps
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| (i + 1, *s))
        .collect();
    let sailing_points = nonzero
        .windows(2)
        .filter(|w| w[0].1.is_positive() && w[1].1.is_negative())
        .map(|w| w[0].0)
        .collect();
    WalkStats {
        endpoint: pos.last().cloned().unwrap_or_else(|| walk.start.clone()),
        axis_visits,
        w_steps_on_axis: walk.w_steps_on_axis().len(),
        diagonal_leaving_steps: walk.diagonal_leaving_steps().len(),
        sign_changes_last_coord: walk.sign_change_steps().len(),
        sailing_points,
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Baxter number `B_n = 2/(n(n+1)^2) * sum_k C(n+1,k+1) C(n+1,k) C(n+1,k-1)`.
pub fn baxter(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let sum: BigUint = (1..=n)
        .map(|k| binomial(n + 1, k + 1) * binomial(n + 1, k) * binomial(n + 1, k - 1))
        .sum();
    sum * 2u32 / (BigUint::from(n) * (n + 1) * (n + 1))
}
