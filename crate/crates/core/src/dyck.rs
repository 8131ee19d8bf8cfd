//! Up/down paths, non-crossing Dyck pairs and the maps between them and
//! walks in the octant, the quadrant and the tilted quadrant.
//!
//! Marks are 1-based step numbers.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arcdiag::OpenArcWeights;
use crate::growth::{fold_weyl_d_walk, unfold_weighted_excursion};
use crate::walks::{enumerate, stays_in, Domain, EndPredicate, Point, Step, StepKind, StepModel, Walk};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DyckStep {
    U,
    D,
}

impl DyckStep {
    pub fn flip(self) -> Self {
        match self {
            DyckStep::U => DyckStep::D,
            DyckStep::D => DyckStep::U,
        }
    }

    fn delta(self) -> i64 {
        match self {
            DyckStep::U => 1,
            DyckStep::D => -1,
        }
    }
}

/// A path of `U = +1` and `D = -1` steps from height 0. Dyck paths,
/// meanders and bridges are checked with [`DyckPath::is_dyck`] and friends.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath(pub Vec<DyckStep>);

impl DyckPath {
    pub fn parse(text: &str) -> Result<Self> {
        text.trim()
            .chars()
            .map(|c| match c {
                'U' => Ok(DyckStep::U),
                'D' => Ok(DyckStep::D),
                _ => Err(Error::Parse(format!("bad path letter {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(DyckPath)
    }

    pub fn steps(&self) -> &[DyckStep] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Heights at abscissas `0..=len`.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = vec![0];
        for s in &self.0 {
            h.push(h[h.len() - 1] + s.delta());
        }
        h
    }

    pub fn final_height(&self) -> i64 {
        self.0.iter().map(|s| s.delta()).sum()
    }

    pub fn is_meander(&self) -> bool {
        self.heights().iter().all(|&h| h >= 0)
    }

    pub fn is_dyck(&self) -> bool {
        self.is_meander() && self.final_height() == 0
    }

    pub fn peaks(&self) -> usize {
        self.0
            .windows(2)
            .filter(|w| w[0] == DyckStep::U && w[1] == DyckStep::D)
            .count()
    }

    /// `U` steps leaving height 0.
    pub fn returns_up(&self) -> usize {
        let h = self.heights();
        self.0
            .iter()
            .enumerate()
            .filter(|(i, s)| **s == DyckStep::U && h[*i] == 0)
            .count()
    }

    /// Length of the final run of `D` steps.
    pub fn last_descent(&self) -> usize {
        self.0.iter().rev().take_while(|s| **s == DyckStep::D).count()
    }

    /// Reversed path with `U` and `D` exchanged (a Dyck path read backwards).
    pub fn reversed(&self) -> Self {
        DyckPath(self.0.iter().rev().map(|s| s.flip()).collect())
    }

    /// Index of the `U` step matched with the `D` step at 0-based index `i`.
    fn matching_up(&self, i: usize) -> Option<usize> {
        let h = self.heights();
        (0..i).rev().find(|&j| self.0[j] == DyckStep::U && h[j] == h[i + 1])
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                DyckStep::U => "U",
                DyckStep::D => "D",
            })?;
        }
        Ok(())
    }
}

impl Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        DyckPath::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// All Dyck paths of length `2n`, in lexicographic order (`U < D`).
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    paths_between(2 * n, 0)
}

/// Nonnegative paths of the given length ending at height `end`, lexicographic.
pub fn paths_between(len: usize, end: i64) -> Vec<DyckPath> {
    fn rec(len: usize, end: i64, h: i64, cur: &mut Vec<DyckStep>, out: &mut Vec<DyckPath>) {
        let left = (len - cur.len()) as i64;
        if (h - end).abs() > left {
            return;
        }
        if left == 0 {
            out.push(DyckPath(cur.clone()));
            return;
        }
        for s in [DyckStep::U, DyckStep::D] {
            if h + s.delta() >= 0 {
                cur.push(s);
                rec(len, end, h + s.delta(), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if end >= 0 {
        rec(len, end, 0, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

/// Two Dyck paths of equal length with `lower <= upper` pointwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct DyckPair {
    lower: DyckPath,
    upper: DyckPath,
}

#[derive(Deserialize)]
struct RawPair {
    lower: DyckPath,
    upper: DyckPath,
}

impl TryFrom<RawPair> for DyckPair {
    type Error = Error;

    fn try_from(r: RawPair) -> Result<Self> {
        DyckPair::new(r.lower, r.upper)
    }
}

impl DyckPair {
    pub fn new(lower: DyckPath, upper: DyckPath) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::InvalidPath("paths of different lengths".into()));
        }
        if !lower.is_dyck() || !upper.is_dyck() {
            return Err(Error::InvalidPath("not a Dyck path".into()));
        }
        if lower.heights().iter().zip(upper.heights()).any(|(l, u)| *l > u) {
            return Err(Error::InvalidPath(format!("lower {lower} crosses upper {upper}")));
        }
        Ok(DyckPair { lower, upper })
    }

    pub fn parse(lower: &str, upper: &str) -> Result<Self> {
        DyckPair::new(DyckPath::parse(lower)?, DyckPath::parse(upper)?)
    }

    pub fn lower(&self) -> &DyckPath {
        &self.lower
    }

    pub fn upper(&self) -> &DyckPath {
        &self.upper
    }

    pub fn half_length(&self) -> usize {
        self.lower.len() / 2
    }

    /// Both paths reversed with `U` and `D` exchanged.
    pub fn reversed(&self) -> Self {
        DyckPair {
            lower: self.lower.reversed(),
            upper: self.upper.reversed(),
        }
    }

    /// 0-based indices of common `D` steps taken at equal heights.
    pub fn upper_bounce_steps(&self) -> Vec<usize> {
        self.common_steps(DyckStep::D)
    }

    /// 0-based indices of common `U` steps taken at equal heights.
    pub fn reversed_upper_bounce_steps(&self) -> Vec<usize> {
        self.common_steps(DyckStep::U)
    }

    fn common_steps(&self, s: DyckStep) -> Vec<usize> {
        let (hl, hu) = (self.lower.heights(), self.upper.heights());
        (0..self.lower.len())
            .filter(|&i| self.lower.0[i] == s && self.upper.0[i] == s && hl[i] == hu[i])
            .collect()
    }

    /// 0-based indices of `U` steps of the lower path leaving height 0.
    pub fn lower_bounce_steps(&self) -> Vec<usize> {
        let h = self.lower.heights();
        (0..self.lower.len())
            .filter(|&i| self.lower.0[i] == DyckStep::U && h[i] == 0)
            .collect()
    }

    /// 0-based indices of the `U` steps starting upper peaks.
    pub fn upper_peak_steps(&self) -> Vec<usize> {
        let u = &self.upper.0;
        (0..u.len().saturating_sub(1))
            .filter(|&i| u[i] == DyckStep::U && u[i + 1] == DyckStep::D)
            .collect()
    }
}

impl fmt::Display for DyckPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lower, self.upper)
    }
}

/// All non-crossing pairs of half-length `n`, ordered by (lower, upper).
pub fn noncrossing_pairs(n: usize) -> Vec<DyckPair> {
    let paths = dyck_paths(n);
    let heights: Vec<Vec<i64>> = paths.iter().map(|p| p.heights()).collect();
    let mut out = Vec::new();
    for (i, lower) in paths.iter().enumerate() {
        for (j, upper) in paths.iter().enumerate() {
            if heights[i].iter().zip(&heights[j]).all(|(l, u)| l <= u) {
                out.push(DyckPair {
                    lower: lower.clone(),
                    upper: upper.clone(),
                });
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PairStats {
    pub upper_peaks: usize,
    pub lower_peaks: usize,
    pub lower_bounces: usize,
    pub upper_bounces: usize,
    pub reversed_upper_bounces: usize,
    pub last_upper_descent: usize,
}

pub fn pair_stats(p: &DyckPair) -> PairStats {
    PairStats {
        upper_peaks: p.upper.peaks(),
        lower_peaks: p.lower.peaks(),
        lower_bounces: p.lower_bounce_steps().len(),
        upper_bounces: p.upper_bounce_steps().len(),
        reversed_upper_bounces: p.reversed_upper_bounce_steps().len(),
        last_upper_descent: p.upper.last_descent(),
    }
}

fn check_marks(marks: &BTreeSet<usize>, allowed: &[usize], what: &str) -> Result<()> {
    match marks.iter().find(|m| !allowed.contains(m)) {
        Some(m) => Err(Error::InvalidMark(format!("step {m} is not {what}"))),
        None => Ok(()),
    }
}

/// The base paths of the meander/bridge correspondence: nonnegative paths
/// of length `n` ending at height `n mod 2` (Dyck paths for even `n`).
fn check_base(d: &DyckPath) -> Result<()> {
    if !d.is_meander() || d.final_height() != (d.len() % 2) as i64 {
        return Err(Error::InvalidPath(format!(
            "{d} is not a nonnegative path ending at height {}",
            d.len() % 2
        )));
    }
    Ok(())
}

/// 1-based numbers of the `D` steps reaching height 0.
pub fn axis_reaching_downs(d: &DyckPath) -> Vec<usize> {
    let h = d.heights();
    (0..d.len())
        .filter(|&i| d.0[i] == DyckStep::D && h[i + 1] == 0)
        .map(|i| i + 1)
        .collect()
}

/// Turns every marked `D` step reaching the axis into a `U` step.
pub fn meander_from_marked_dyck(d: &DyckPath, marks: &BTreeSet<usize>) -> Result<DyckPath> {
    check_base(d)?;
    check_marks(marks, &axis_reaching_downs(d), "a down-step reaching the axis")?;
    let mut out = d.clone();
    for &m in marks {
        out.0[m - 1] = DyckStep::U;
    }
    Ok(out)
}

/// Inverse of [`meander_from_marked_dyck`]: for each `j`, the last up-step
/// from height `2j-1` to `2j` is turned back into a down-step.
pub fn marked_dyck_from_meander(m: &DyckPath) -> Result<(DyckPath, BTreeSet<usize>)> {
    if !m.is_meander() {
        return Err(Error::InvalidPath(format!("{m} goes below the axis")));
    }
    let h = m.heights();
    let mut out = m.clone();
    let mut marks = BTreeSet::new();
    for j in 1..=m.final_height() / 2 {
        let i = (0..m.len())
            .rev()
            .find(|&i| m.0[i] == DyckStep::U && h[i] == 2 * j - 1)
            .expect("a meander ending above 2j crosses level 2j");
        out.0[i] = DyckStep::D;
        marks.insert(i + 1);
    }
    Ok((out, marks))
}

/// Flips each marked excursion, from the matched up-step to the marked
/// down-step included, below the axis.
pub fn bridge_from_marked_dyck(d: &DyckPath, marks: &BTreeSet<usize>) -> Result<DyckPath> {
    check_base(d)?;
    check_marks(marks, &axis_reaching_downs(d), "a down-step reaching the axis")?;
    let mut out = d.clone();
    for &m in marks {
        let u = d.matching_up(m - 1).expect("down-step reaching the axis has a match");
        for s in &mut out.0[u..m] {
            *s = s.flip();
        }
    }
    Ok(out)
}

/// Inverse of [`bridge_from_marked_dyck`].
pub fn marked_dyck_from_bridge(b: &DyckPath) -> Result<(DyckPath, BTreeSet<usize>)> {
    if b.final_height() != (b.len() % 2) as i64 {
        return Err(Error::InvalidPath(format!(
            "{b} does not end at height {}",
            b.len() % 2
        )));
    }
    let h = b.heights();
    let mut out = b.clone();
    let mut marks = BTreeSet::new();
    for i in 0..b.len() {
        if h[i] < 0 || h[i + 1] < 0 {
            out.0[i] = out.0[i].flip();
            if h[i + 1] == 0 {
                marks.insert(i + 1);
            }
        }
    }
    Ok((out, marks))
}

fn require(w: &Walk, model: StepKind, domain: Domain, end: &EndPredicate, what: &str) -> Result<()> {
    if w.model().kind != model || w.dim() != 2 {
        return Err(Error::NotInDomain {
            domain: what.into(),
            steps: 0,
        });
    }
    if !stays_in(w, &domain)? || !end.matches(&w.endpoint()) {
        return Err(Error::NotInDomain {
            domain: what.into(),
            steps: w.len(),
        });
    }
    Ok(())
}

/// Upper path `x + y`, lower path `x - y` of a simple octant excursion.
pub fn octant_to_pair(w: &Walk) -> Result<DyckPair> {
    require(
        w,
        StepKind::Simple,
        Domain::Octant,
        &EndPredicate::Origin,
        "simple octant excursion",
    )?;
    if !w.start().is_zero() {
        return Err(Error::NotInDomain {
            domain: "simple octant excursion".into(),
            steps: 0,
        });
    }
    let (mut upper, mut lower) = (Vec::new(), Vec::new());
    for s in w.steps() {
        let (u, l) = match *s {
            Step::E => (DyckStep::U, DyckStep::U),
            Step::W => (DyckStep::D, DyckStep::D),
            Step::N => (DyckStep::U, DyckStep::D),
            _ => (DyckStep::D, DyckStep::U),
        };
        upper.push(u);
        lower.push(l);
    }
    DyckPair::new(DyckPath(lower), DyckPath(upper))
}

fn steps_from_sum_difference(sum: &[DyckStep], diff: &[DyckStep]) -> Vec<Step> {
    sum.iter()
        .zip(diff)
        .map(|(a, b)| match (a, b) {
            (DyckStep::U, DyckStep::U) => Step::E,
            (DyckStep::D, DyckStep::D) => Step::W,
            (DyckStep::U, DyckStep::D) => Step::N,
            (DyckStep::D, DyckStep::U) => Step::S,
        })
        .collect()
}

/// Inverse of [`octant_to_pair`].
pub fn pair_to_octant(p: &DyckPair) -> Walk {
    Walk::from_origin(StepModel::SIMPLE_2D, steps_from_sum_difference(&p.upper.0, &p.lower.0)).expect("simple steps")
}

/// Image of a tilted quadrant walk: `p1` follows `x + y`, `p2` follows
/// `x - y`, each padded into a Dyck path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TiltedPair {
    pub p1: DyckPath,
    pub p2: DyckPath,
}

impl TiltedPair {
    /// Walk length: `|p2|` when `|p1| = |p2| + 2`, else `|p1| - 1`.
    pub fn walk_length(&self) -> usize {
        if self.p1.len() == self.p2.len() + 2 {
            self.p2.len()
        } else {
            self.p1.len() - 1
        }
    }

    /// Number of crossings when `p2` is drawn from `(0,0)` and `p1` from
    /// `(-1,0)`, counted as sign changes of their height difference.
    pub fn crossings(&self) -> usize {
        let h1 = self.p1.heights();
        let h2 = self.p2.heights();
        let diffs: Vec<i64> = (0..=self.walk_length()).map(|i| h1[i + 1] - h2[i]).collect();
        diffs.windows(2).filter(|w| w[0] * w[1] < 0).count()
    }
}

fn tilted_end(n: usize) -> Point {
    Point(vec![1, if n.is_multiple_of(2) { 1 } else { -1 }])
}

/// Tilted quadrant walk from `(1/2,1/2)` of length `n` to a pair in
/// `C_{m+1} x C_m` (`n = 2m`) or `C_{m+1} x C_{m+1}` (`n = 2m+1`).
pub fn tilted_to_pair(w: &Walk) -> Result<TiltedPair> {
    let what = "simple tilted quadrant walk from (1/2,1/2)";
    require(
        w,
        StepKind::Simple,
        Domain::TiltedQuadrant,
        &EndPredicate::Fixed(tilted_end(w.len())),
        what,
    )?;
    if w.start() != &Point::half_ones(2) {
        return Err(Error::NotInDomain {
            domain: what.into(),
            steps: 0,
        });
    }
    let mut p1 = vec![DyckStep::U];
    let mut p2 = Vec::new();
    for s in w.steps() {
        let (a, b) = match *s {
            Step::E => (DyckStep::U, DyckStep::U),
            Step::W => (DyckStep::D, DyckStep::D),
            Step::N => (DyckStep::U, DyckStep::D),
            _ => (DyckStep::D, DyckStep::U),
        };
        p1.push(a);
        p2.push(b);
    }
    if w.len().is_multiple_of(2) {
        p1.push(DyckStep::D);
    } else {
        p2.push(DyckStep::D);
    }
    Ok(TiltedPair {
        p1: DyckPath(p1),
        p2: DyckPath(p2),
    })
}

/// Inverse of [`tilted_to_pair`].
pub fn pair_to_tilted(p: &TiltedPair) -> Result<Walk> {
    let n = p.walk_length();
    let shapes_ok = if n.is_multiple_of(2) {
        p.p1.len() == n + 2
    } else {
        p.p1.len() == n + 1 && p.p2.len() == n + 1
    };
    if !shapes_ok || !p.p1.is_dyck() || !p.p2.is_dyck() {
        return Err(Error::InvalidPath("not a padded pair of Dyck paths".into()));
    }
    if p.p1.0[0] != DyckStep::U
        || (n.is_multiple_of(2) && p.p1.0[n + 1] != DyckStep::D)
        || (n % 2 == 1 && p.p2.0[n] != DyckStep::D)
    {
        return Err(Error::InvalidPath("padding steps missing".into()));
    }
    let steps = steps_from_sum_difference(&p.p1.0[1..=n], &p.p2.0[..n]);
    Walk::new(StepModel::SIMPLE_2D, Point::half_ones(2), steps)
}

/// Unfolds a weighted octant excursion into the tilted quadrant.
pub fn weighted_excursion_to_tilted(exc: &Walk, weights: &OpenArcWeights) -> Result<Walk> {
    require(
        exc,
        StepKind::Simple,
        Domain::Octant,
        &EndPredicate::Origin,
        "simple octant excursion",
    )?;
    unfold_weighted_excursion(exc, weights)
}

/// Inverse of [`weighted_excursion_to_tilted`].
pub fn tilted_to_weighted_excursion(w: &Walk) -> Result<(Walk, OpenArcWeights)> {
    let what = "simple tilted quadrant walk from (1/2,1/2)";
    require(
        w,
        StepKind::Simple,
        Domain::TiltedQuadrant,
        &EndPredicate::Fixed(tilted_end(w.len())),
        what,
    )?;
    fold_weyl_d_walk(w)
}

fn swap_axes(s: Step) -> Step {
    match s {
        Step::Pos(0) => Step::N,
        Step::Pos(1) => Step::E,
        Step::Neg(0) => Step::S,
        Step::Neg(1) => Step::W,
        other => other,
    }
}

/// Folds a quadrant excursion into the octant across `y = x`, marking the
/// diagonal-leaving steps that went to the side `y > x`.
pub fn mirror(w: &Walk) -> Result<(Walk, BTreeSet<usize>)> {
    if w.model().kind == StepKind::Vacillating {
        return Err(Error::NotInDomain {
            domain: "simple or hesitating quadrant excursion".into(),
            steps: 0,
        });
    }
    require(
        w,
        w.model().kind,
        Domain::Quadrant,
        &EndPredicate::Origin,
        "quadrant excursion",
    )?;
    if !w.start().is_zero() {
        return Err(Error::NotInDomain {
            domain: "quadrant excursion".into(),
            steps: 0,
        });
    }
    let pos = w.positions();
    let mut upper = false;
    let mut marks = BTreeSet::new();
    let mut steps = Vec::with_capacity(w.len());
    for (i, &s) in w.steps().iter().enumerate() {
        let (p, q) = (&pos[i].0, &pos[i + 1].0);
        if p[0] == p[1] && q[0] != q[1] {
            upper = q[1] > q[0];
            if upper {
                marks.insert(i + 1);
            }
        }
        steps.push(if upper { swap_axes(s) } else { s });
    }
    Ok((w.with_steps(steps)?, marks))
}

/// Inverse of [`mirror`]; every subset of the diagonal-leaving steps is
/// admissible.
pub fn unmirror(w: &Walk, marks: &BTreeSet<usize>) -> Result<Walk> {
    if w.model().kind == StepKind::Vacillating {
        return Err(Error::NotInDomain {
            domain: "simple or hesitating octant excursion".into(),
            steps: 0,
        });
    }
    require(
        w,
        w.model().kind,
        Domain::Octant,
        &EndPredicate::Origin,
        "octant excursion",
    )?;
    check_marks(marks, &w.diagonal_leaving_steps(), "a step leaving the diagonal")?;
    let pos = w.positions();
    let mut upper = false;
    let mut steps = Vec::with_capacity(w.len());
    for (i, &s) in w.steps().iter().enumerate() {
        let (p, q) = (&pos[i].0, &pos[i + 1].0);
        if p[0] == p[1] && q[0] != q[1] {
            upper = marks.contains(&(i + 1));
        }
        steps.push(if upper { swap_axes(s) } else { s });
    }
    w.with_steps(steps)
}

/// Drops the zero steps of a hesitating walk; the sailing points coming
/// from a single pair are marked by their number in the simple walk.
pub fn hesitating_to_marked_simple(w: &Walk) -> Result<(Walk, BTreeSet<usize>)> {
    if w.model().kind != StepKind::Hesitating {
        return Err(Error::InvalidWalk {
            index: 0,
            reason: "expected a hesitating walk".into(),
        });
    }
    let mut steps = Vec::new();
    let mut marks = BTreeSet::new();
    for pair in w.steps().chunks(2) {
        if !pair[0].is_zero() && !pair[1].is_zero() {
            marks.insert(steps.len() + 1);
        }
        steps.extend(pair.iter().filter(|s| !s.is_zero()));
    }
    let simple = Walk::new(StepModel::simple(w.dim()), w.start().clone(), steps)?;
    Ok((simple, marks))
}

/// Inverse of [`hesitating_to_marked_simple`].
pub fn marked_simple_to_hesitating(w: &Walk, marks: &BTreeSet<usize>) -> Result<Walk> {
    if w.model().kind != StepKind::Simple {
        return Err(Error::InvalidWalk {
            index: 0,
            reason: "expected a simple walk".into(),
        });
    }
    let s = w.steps();
    let sailing: Vec<usize> = (0..s.len().saturating_sub(1))
        .filter(|&i| s[i].is_positive() && s[i + 1].is_negative())
        .map(|i| i + 1)
        .collect();
    check_marks(marks, &sailing, "a sailing point")?;
    let mut steps = Vec::with_capacity(2 * s.len());
    let mut i = 0;
    while i < s.len() {
        if marks.contains(&(i + 1)) {
            steps.extend([s[i], s[i + 1]]);
            i += 2;
        } else {
            steps.extend(if s[i].is_positive() {
                [s[i], Step::Zero]
            } else {
                [Step::Zero, s[i]]
            });
            i += 1;
        }
    }
    Walk::new(StepModel::hesitating(w.dim()), w.start().clone(), steps)
}

/// A bijection between simple quadrant excursions of length `2n` and
/// `C_{n+1} x C_n`.
pub trait QuadrantPairing {
    fn walk_to_pair(&self, w: &Walk) -> Result<(DyckPath, DyckPath)>;
    fn pair_to_walk(&self, big: &DyckPath, small: &DyckPath) -> Result<Walk>;
}

/// Matches the `r`-th excursion with the `r`-th pair, both classes listed
/// in lexicographic order (pairs ordered by their first path).
#[derive(Debug, Clone, Copy, Default)]
pub struct LexicographicPairing;

struct RankTable {
    walks: Vec<Walk>,
    walk_rank: HashMap<Walk, usize>,
    pairs: Vec<(DyckPath, DyckPath)>,
    pair_rank: HashMap<(DyckPath, DyckPath), usize>,
}

/// Largest half-length served by [`LexicographicPairing`].
pub const MAX_PAIRING_HALF_LENGTH: usize = 6;

fn rank_table(n: usize) -> Result<Arc<RankTable>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<RankTable>>>> = OnceLock::new();
    if n > MAX_PAIRING_HALF_LENGTH {
        return Err(Error::InvalidWalk {
            index: 2 * n,
            reason: format!(
                "lexicographic pairing is tabulated up to length {}",
                2 * MAX_PAIRING_HALF_LENGTH
            ),
        });
    }
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("rank cache").get(&n) {
        return Ok(t.clone());
    }
    let walks = enumerate(StepModel::SIMPLE_2D, &Domain::Quadrant, 2 * n, &EndPredicate::Origin);
    let small = dyck_paths(n);
    let pairs: Vec<(DyckPath, DyckPath)> = dyck_paths(n + 1)
        .into_iter()
        .flat_map(|b| small.iter().map(move |s| (b.clone(), s.clone())))
        .collect();
    assert_eq!(
        walks.len(),
        pairs.len(),
        "quadrant excursions and Catalan pairs are equinumerous"
    );
    let table = Arc::new(RankTable {
        walk_rank: walks.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect(),
        pair_rank: pairs.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect(),
        walks,
        pairs,
    });
    cache.lock().expect("rank cache").insert(n, table.clone());
    Ok(table)
}

impl QuadrantPairing for LexicographicPairing {
    fn walk_to_pair(&self, w: &Walk) -> Result<(DyckPath, DyckPath)> {
        require(
            w,
            StepKind::Simple,
            Domain::Quadrant,
            &EndPredicate::Origin,
            "simple quadrant excursion",
        )?;
        let t = rank_table(w.len() / 2)?;
        let r = t.walk_rank.get(w).ok_or_else(|| Error::NotInDomain {
            domain: "simple quadrant excursion from the origin".into(),
            steps: 0,
        })?;
        Ok(t.pairs[*r].clone())
    }

    fn pair_to_walk(&self, big: &DyckPath, small: &DyckPath) -> Result<Walk> {
        if !big.is_dyck() || !small.is_dyck() || big.len() != small.len() + 2 {
            return Err(Error::InvalidPath("expected a pair in C_{n+1} x C_n".into()));
        }
        let t = rank_table(small.len() / 2)?;
        let r = t.pair_rank[&(big.clone(), small.clone())];
        Ok(t.walks[r].clone())
    }
}

pub fn quadrant_excursion_to_pair(w: &Walk) -> Result<(DyckPath, DyckPath)> {
    LexicographicPairing.walk_to_pair(w)
}

pub fn pair_to_quadrant_excursion(big: &DyckPath, small: &DyckPath) -> Result<Walk> {
    LexicographicPairing.pair_to_walk(big, small)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::axiswalk_to_weighted_excursion;
    use crate::walks::{binomial, catalan, enumerate_from, stats};

    fn path(s: &str) -> DyckPath {
        DyckPath::parse(s).unwrap()
    }

    fn simple(s: &str) -> Walk {
        Walk::parse_from_origin(StepModel::SIMPLE_2D, s).unwrap()
    }

    #[test]
    fn figure_one_examples() {
        let marks = BTreeSet::from([2]);
        assert_eq!(meander_from_marked_dyck(&path("UD"), &marks).unwrap(), path("UU"));
        assert_eq!(bridge_from_marked_dyck(&path("UD"), &marks).unwrap(), path("DU"));
        let none = BTreeSet::new();
        for d in dyck_paths(3) {
            assert_eq!(meander_from_marked_dyck(&d, &none).unwrap(), d);
            assert_eq!(bridge_from_marked_dyck(&d, &none).unwrap(), d);
        }
        assert!(meander_from_marked_dyck(&path("UUDD"), &BTreeSet::from([3])).is_err());
    }

    fn all_paths(n: usize) -> Vec<DyckPath> {
        (0..1u32 << n)
            .map(|mask| {
                DyckPath(
                    (0..n)
                        .map(|i| if mask >> i & 1 == 1 { DyckStep::D } else { DyckStep::U })
                        .collect(),
                )
            })
            .collect()
    }

    #[test]
    fn figure_one_bijections() {
        for n in 0..=10usize {
            let mut meanders = BTreeSet::new();
            let mut bridges = BTreeSet::new();
            for d in paths_between(n, (n % 2) as i64) {
                let downs = axis_reaching_downs(&d);
                for mask in 0..1u32 << downs.len() {
                    let marks: BTreeSet<usize> = downs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &m)| m)
                        .collect();
                    let m = meander_from_marked_dyck(&d, &marks).unwrap();
                    let b = bridge_from_marked_dyck(&d, &marks).unwrap();
                    assert_eq!(marked_dyck_from_meander(&m).unwrap(), (d.clone(), marks.clone()));
                    assert_eq!(marked_dyck_from_bridge(&b).unwrap(), (d.clone(), marks.clone()));
                    meanders.insert(m);
                    bridges.insert(b);
                }
            }
            let all = all_paths(n);
            let meander_oracle = all.iter().filter(|p| p.is_meander()).count();
            let bridge_oracle = all.iter().filter(|p| p.final_height() == (n % 2) as i64).count();
            assert_eq!(meanders.len(), meander_oracle);
            assert_eq!(bridges.len(), bridge_oracle);
            assert_eq!(BigUintExt::from(meander_oracle), binomial(n as u64, n as u64 / 2));
        }
    }

    type BigUintExt = num_bigint::BigUint;

    #[test]
    fn octant_pair_examples() {
        let p = octant_to_pair(&simple("EW")).unwrap();
        assert_eq!(
            (p.upper().to_string(), p.lower().to_string()),
            ("UD".into(), "UD".into())
        );
        let p = octant_to_pair(&simple("ENSW")).unwrap();
        assert_eq!(
            (p.upper().to_string(), p.lower().to_string()),
            ("UUDD".into(), "UDUD".into())
        );
        assert_eq!(pair_stats(&octant_to_pair(&simple("EW")).unwrap()).upper_bounces, 1);
    }

    #[test]
    fn octant_pair_bijection_and_statistics() {
        for n in 0..=5 {
            let walks = enumerate(StepModel::SIMPLE_2D, &Domain::Octant, 2 * n, &EndPredicate::Origin);
            assert_eq!(walks.len(), noncrossing_pairs(n).len());
            for w in walks {
                let p = octant_to_pair(&w).unwrap();
                assert_eq!(pair_to_octant(&p), w);
                let ws = stats(&w);
                let ps = pair_stats(&p);
                assert_eq!(ws.sailing_points.len(), ps.upper_peaks);
                assert_eq!(ws.w_steps_on_axis, ps.upper_bounces);
                assert_eq!(ws.diagonal_leaving_steps, ps.lower_bounces);
            }
        }
    }

    #[test]
    fn pair_stats_examples() {
        let s = pair_stats(&DyckPair::parse("UD", "UD").unwrap());
        assert_eq!(
            s,
            PairStats {
                upper_peaks: 1,
                lower_peaks: 1,
                lower_bounces: 1,
                upper_bounces: 1,
                reversed_upper_bounces: 1,
                last_upper_descent: 1
            }
        );
        let s = pair_stats(&DyckPair::parse("UDUD", "UUDD").unwrap());
        assert_eq!(s.lower_bounces, 2);
        // the final common down-step goes from height 1 to 0 in both paths
        assert_eq!(s.upper_bounces, 1);
        assert_eq!(pair_stats(&DyckPair::parse("", "").unwrap()), PairStats::default());
        assert!(DyckPair::parse("UUDD", "UDUD").is_err());
    }

    #[test]
    fn tilted_examples() {
        let empty = Walk::new(StepModel::SIMPLE_2D, Point::half_ones(2), vec![]).unwrap();
        let t = tilted_to_pair(&empty).unwrap();
        assert_eq!((t.p1.to_string(), t.p2.to_string()), ("UD".into(), "".into()));
        for n in 0..=8usize {
            let end = EndPredicate::Fixed(tilted_end(n));
            let walks = enumerate_from(
                StepModel::SIMPLE_2D,
                &Domain::TiltedQuadrant,
                &Point::half_ones(2),
                n,
                &end,
            );
            let m = n / 2;
            let expected = if n % 2 == 0 {
                catalan(m as u64) * catalan(m as u64 + 1)
            } else {
                catalan(m as u64 + 1).pow(2)
            };
            assert_eq!(BigUintExt::from(walks.len()), expected, "n={n}");
            let mut images = BTreeSet::new();
            for w in walks {
                let t = tilted_to_pair(&w).unwrap();
                assert_eq!(t.crossings(), stats(&w).sign_changes_last_coord);
                assert_eq!(pair_to_tilted(&t).unwrap(), w);
                images.insert(t);
            }
            assert_eq!(BigUintExt::from(images.len()), expected);
        }
    }

    #[test]
    fn weighted_to_tilted() {
        let empty = Walk::empty(StepModel::SIMPLE_2D);
        let mut w = OpenArcWeights::default();
        w.add(0, 2);
        let t = weighted_excursion_to_tilted(&empty, &w).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(stats(&t).sign_changes_last_coord, 2);
        let t = weighted_excursion_to_tilted(&simple("EW"), &OpenArcWeights::default()).unwrap();
        assert_eq!(t.to_text(), "EW");
        assert_eq!(t.start(), &Point::half_ones(2));

        let mut n4 = 0;
        for w in enumerate(StepModel::SIMPLE_2D, &Domain::Octant, 4, &EndPredicate::XAxis) {
            let (exc, wt) = axiswalk_to_weighted_excursion(&w, 2).unwrap();
            let t = weighted_excursion_to_tilted(&exc, &wt).unwrap();
            assert_eq!(tilted_to_weighted_excursion(&t).unwrap(), (exc, wt));
            n4 += 1;
        }
        assert_eq!(n4, 10);
    }

    #[test]
    fn mirror_examples() {
        let (w, m) = mirror(&simple("EW")).unwrap();
        assert_eq!((w.to_text(), m.len()), ("EW".into(), 0));
        let (w, m) = mirror(&simple("NS")).unwrap();
        assert_eq!((w.to_text(), m), ("EW".into(), BTreeSet::from([1])));
        for model in [StepModel::SIMPLE_2D, StepModel::HESITATING] {
            for len in (0..=8).step_by(2) {
                let quadrant = enumerate(model, &Domain::Quadrant, len, &EndPredicate::Origin);
                let mut total = 0usize;
                for o in enumerate(model, &Domain::Octant, len, &EndPredicate::Origin) {
                    let leaving = o.diagonal_leaving_steps();
                    for mask in 0..1u32 << leaving.len() {
                        let marks: BTreeSet<usize> = leaving
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask >> i & 1 == 1)
                            .map(|(_, &m)| m)
                            .collect();
                        let q = unmirror(&o, &marks).unwrap();
                        assert!(stays_in(&q, &Domain::Quadrant).unwrap());
                        assert_eq!(mirror(&q).unwrap(), (o.clone(), marks));
                        total += 1;
                    }
                }
                assert_eq!(total, quadrant.len());
            }
        }
    }

    #[test]
    fn hesitating_simple_examples() {
        let h = Walk::parse_from_origin(StepModel::HESITATING, "EW").unwrap();
        assert_eq!(
            hesitating_to_marked_simple(&h).unwrap(),
            (simple("EW"), BTreeSet::from([1]))
        );
        let h2 = Walk::parse_from_origin(StepModel::HESITATING, "E00W").unwrap();
        assert_eq!(
            hesitating_to_marked_simple(&h2).unwrap(),
            (simple("EW"), BTreeSet::new())
        );
        let e = Walk::empty(StepModel::HESITATING);
        assert_eq!(hesitating_to_marked_simple(&e).unwrap().0.len(), 0);
        for len in (0..=8).step_by(2) {
            for w in enumerate(StepModel::HESITATING, &Domain::Octant, len, &EndPredicate::Origin) {
                let (s, m) = hesitating_to_marked_simple(&w).unwrap();
                assert!(stays_in(&s, &Domain::Octant).unwrap());
                assert_eq!(marked_simple_to_hesitating(&s, &m).unwrap(), w);
            }
        }
    }

    #[test]
    fn quadrant_pairing() {
        let e = Walk::empty(StepModel::SIMPLE_2D);
        assert_eq!(quadrant_excursion_to_pair(&e).unwrap(), (path("UD"), path("")));
        for n in 0..=4 {
            let ws = enumerate(StepModel::SIMPLE_2D, &Domain::Quadrant, 2 * n, &EndPredicate::Origin);
            assert_eq!(BigUintExt::from(ws.len()), catalan(n as u64) * catalan(n as u64 + 1));
            let mut seen = BTreeSet::new();
            for w in ws {
                let (b, s) = quadrant_excursion_to_pair(&w).unwrap();
                assert_eq!(pair_to_quadrant_excursion(&b, &s).unwrap(), w);
                seen.insert((b, s));
            }
            assert_eq!(BigUintExt::from(seen.len()), catalan(n as u64) * catalan(n as u64 + 1));
        }
    }

    #[test]
    fn json_forms() {
        let p = DyckPair::parse("UDUD", "UUDD").unwrap();
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"lower":"UDUD","upper":"UUDD"}"#);
        assert_eq!(serde_json::from_str::<DyckPair>(&j).unwrap(), p);
        assert!(serde_json::from_str::<DyckPair>(r#"{"lower":"UUDD","upper":"UDUD"}"#).is_err());
    }
}
