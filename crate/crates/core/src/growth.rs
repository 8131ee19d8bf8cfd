//! Row-insertion bijection between open arc diagrams and axis-walks in the
//! Weyl chamber of type C, the open-arc/weight transfers built on it, and
//! the unfolding of weighted type C excursions into type D excursions.
//!
//! Points are scanned right to left. A closing point inserts the left end of
//! its arc, an opening (or open) point deletes itself; the walk reads the
//! shapes left to right with `x_i = λ_i`. Partitions are first blown up into
//! matchings on `2n` half-points: point `p` becomes `2p-1` (left ends) and
//! `2p` (right ends), a fixed point becomes the arc `(2p-1, 2p)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arcdiag::{insert_open_arcs, remove_open_arcs, ArcDiagram, DiagramKind, OpenArcWeights, Role};
use crate::walks::{stays_in, Domain, EndPredicate, Point, Step, StepKind, StepModel, Walk};
use crate::{Error, Result};

/// Intermediate tableaux of the bijection, index `i` = after `i` points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableauSequence {
    pub k: usize,
    pub partitions: Vec<Vec<usize>>,
    pub tableaux: Vec<Vec<Vec<usize>>>,
}

impl TableauSequence {
    pub fn max_rows(&self) -> usize {
        self.partitions.iter().map(|p| p.len()).max().unwrap_or(0)
    }

    pub fn max_columns(&self) -> usize {
        self.partitions
            .iter()
            .map(|p| p.first().copied().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Virtual {
    Empty,
    Opener,
    Open,
    Closer(usize),
}

type Tableau = Vec<Vec<usize>>;

fn shape(t: &Tableau) -> Vec<usize> {
    t.iter().map(|r| r.len()).collect()
}

fn row_insert(t: &mut Tableau, mut x: usize) {
    for row in t.iter_mut() {
        match row.iter().position(|&y| y > x) {
            Some(i) => x = std::mem::replace(&mut row[i], x),
            None => {
                row.push(x);
                return;
            }
        }
    }
    t.push(vec![x]);
}

/// Removes the last cell of row `r` and reverse-bumps it out of the first row.
fn reverse_bump(t: &mut Tableau, r: usize) -> usize {
    let mut x = t[r].pop().expect("corner cell");
    if t[r].is_empty() {
        t.truncate(r);
    }
    for rr in (0..r).rev() {
        let i = t[rr].iter().rposition(|&y| y < x).expect("row holds a smaller entry");
        x = std::mem::replace(&mut t[rr][i], x);
    }
    x
}

/// Runs the insertion over virtual points `1..=kinds.len()` (index `v - 1`).
pub(crate) fn virtual_trace(kinds: &[Virtual]) -> Vec<Tableau> {
    let n = kinds.len();
    let mut t: Tableau = Vec::new();
    let open: Vec<usize> = (1..=n).filter(|&v| kinds[v - 1] == Virtual::Open).collect();
    if !open.is_empty() {
        t.push(open);
    }
    let mut out = vec![t.clone()];
    for v in (1..=n).rev() {
        match kinds[v - 1] {
            Virtual::Empty => {}
            Virtual::Closer(l) => row_insert(&mut t, l),
            Virtual::Opener | Virtual::Open => {
                let r = t
                    .iter()
                    .position(|row| row.last() == Some(&v))
                    .expect("point is a corner");
                t[r].pop();
                if t[r].is_empty() {
                    t.truncate(r);
                }
            }
        }
        out.push(t.clone());
    }
    out.reverse();
    out
}

/// Recovers the virtual points from a shape sequence starting empty.
/// Fails unless the final tableau has at most one row.
pub(crate) fn shapes_to_virtual(shapes: &[Vec<usize>]) -> Result<Vec<Virtual>> {
    let mut kinds = Vec::with_capacity(shapes.len().saturating_sub(1));
    let mut matched = vec![false; shapes.len()];
    let mut t: Tableau = Vec::new();
    for v in 1..shapes.len() {
        let (a, b) = (&shapes[v - 1], &shapes[v]);
        let len = a.len().max(b.len());
        let part = |s: &Vec<usize>, r: usize| s.get(r).copied().unwrap_or(0) as i64;
        let diffs: Vec<(usize, i64)> = (0..len)
            .map(|r| (r, part(b, r) - part(a, r)))
            .filter(|(_, d)| *d != 0)
            .collect();
        match diffs.as_slice() {
            [] => kinds.push(Virtual::Empty),
            [(r, 1)] => {
                if *r == t.len() {
                    t.push(Vec::new());
                }
                t[*r].push(v);
                kinds.push(Virtual::Opener);
            }
            [(r, -1)] => {
                let l = reverse_bump(&mut t, *r);
                matched[l] = true;
                kinds.push(Virtual::Closer(l));
            }
            _ => {
                return Err(Error::InvalidWalk {
                    index: v,
                    reason: "shapes differ by more than one cell".into(),
                })
            }
        }
    }
    if t.len() > 1 {
        return Err(Error::NotAnAxisWalk("walk does not end on the x1-axis".into()));
    }
    for (i, kind) in kinds.iter_mut().enumerate() {
        if *kind == Virtual::Opener && !matched[i + 1] {
            *kind = Virtual::Open;
        }
    }
    Ok(kinds)
}

fn diagram_virtual(d: &ArcDiagram) -> Vec<Virtual> {
    match d.kind() {
        DiagramKind::Matching => {
            let mut kinds = vec![Virtual::Empty; d.size()];
            for (a, b) in d.closed_arcs() {
                kinds[a - 1] = Virtual::Opener;
                kinds[b - 1] = Virtual::Closer(a);
            }
            for &p in d.open() {
                kinds[p - 1] = Virtual::Open;
            }
            kinds
        }
        DiagramKind::Partition => {
            let mut kinds = vec![Virtual::Empty; 2 * d.size()];
            for (a, b) in d.closed_arcs() {
                kinds[2 * a - 2] = Virtual::Opener;
                kinds[2 * b - 1] = Virtual::Closer(2 * a - 1);
            }
            for (i, role) in d.point_roles().iter().enumerate() {
                let p = i + 1;
                if *role == Role::Fixed && !d.has_open(p) {
                    kinds[2 * p - 2] = Virtual::Opener;
                    kinds[2 * p - 1] = Virtual::Closer(2 * p - 1);
                }
            }
            for &p in d.open() {
                kinds[2 * p - 2] = Virtual::Open;
            }
            kinds
        }
    }
}

fn virtual_to_diagram(kind: DiagramKind, kinds: &[Virtual]) -> Result<ArcDiagram> {
    match kind {
        DiagramKind::Matching => {
            let mut arcs = Vec::new();
            let mut open = Vec::new();
            for (i, k) in kinds.iter().enumerate() {
                match *k {
                    Virtual::Closer(l) => arcs.push((l, i + 1)),
                    Virtual::Open => open.push(i + 1),
                    Virtual::Empty => {
                        return Err(Error::InvalidWalk {
                            index: i + 1,
                            reason: "zero step in a matching walk".into(),
                        })
                    }
                    Virtual::Opener => {}
                }
            }
            ArcDiagram::matching(kinds.len(), &arcs, &open)
        }
        DiagramKind::Partition => {
            let n = kinds.len() / 2;
            let mut blocks: Vec<Vec<usize>> = Vec::new();
            let mut open = Vec::new();
            for p in 1..=n {
                if kinds[2 * p - 2] == Virtual::Open {
                    open.push(p);
                }
                if let Virtual::Closer(l) = kinds[2 * p - 1] {
                    let a = l.div_ceil(2);
                    if a != p {
                        match blocks.iter_mut().find(|b| b.last() == Some(&a)) {
                            Some(b) => b.push(p),
                            None => blocks.push(vec![a, p]),
                        }
                    }
                }
            }
            ArcDiagram::partition(n, blocks, open)
        }
    }
}

/// The tableaux of the bijection for `d`, with no bound on the number of rows.
pub fn trace(d: &ArcDiagram) -> TableauSequence {
    let tableaux = virtual_trace(&diagram_virtual(d));
    let partitions: Vec<Vec<usize>> = tableaux.iter().map(shape).collect();
    let k = partitions.iter().map(|p| p.len()).max().unwrap_or(0);
    TableauSequence {
        k,
        partitions,
        tableaux,
    }
}

pub(crate) fn shapes_to_steps(shapes: &[Vec<usize>]) -> Vec<Step> {
    shapes
        .windows(2)
        .map(|w| {
            let len = w[0].len().max(w[1].len());
            for r in 0..len {
                let (a, b) = (w[0].get(r).copied().unwrap_or(0), w[1].get(r).copied().unwrap_or(0));
                if b > a {
                    return Step::Pos(r as u8);
                }
                if b < a {
                    return Step::Neg(r as u8);
                }
            }
            Step::Zero
        })
        .collect()
}

fn model_for(kind: DiagramKind, k: usize) -> StepModel {
    match kind {
        DiagramKind::Matching => StepModel::simple(k),
        DiagramKind::Partition => StepModel::hesitating(k),
    }
}

/// Maps a diagram with no `(k+1)`-crossing (enhanced for partitions) to an
/// axis-walk in `W_C(k)` ending at `(m, 0, ..., 0)`, `m` = open arcs.
pub fn diagram_to_walk(d: &ArcDiagram, k: usize) -> Result<Walk> {
    let t = trace(d);
    if t.max_rows() > k {
        return Err(Error::CrossingTooLarge(t.max_rows()));
    }
    Walk::from_origin(model_for(d.kind(), k), shapes_to_steps(&t.partitions))
}

fn check_axis_walk(w: &Walk, k: usize) -> Result<DiagramKind> {
    if w.dim() != k {
        return Err(Error::DimensionMismatch {
            walk: w.dim(),
            domain: k,
        });
    }
    let kind = match w.model().kind {
        StepKind::Simple => DiagramKind::Matching,
        StepKind::Hesitating => DiagramKind::Partition,
        StepKind::Vacillating => {
            return Err(Error::NotAnAxisWalk(
                "vacillating walks have no diagram counterpart".into(),
            ))
        }
    };
    if !w.start().is_zero() {
        return Err(Error::NotAnAxisWalk("walk does not start at the origin".into()));
    }
    if !stays_in(w, &Domain::WeylC(k))? {
        return Err(Error::NotAnAxisWalk(format!("walk leaves {}", Domain::WeylC(k))));
    }
    if !EndPredicate::XAxis.matches(&w.endpoint()) {
        return Err(Error::NotAnAxisWalk(format!("walk ends at {}", w.endpoint())));
    }
    Ok(kind)
}

fn walk_shapes(w: &Walk) -> Vec<Vec<usize>> {
    w.positions()
        .iter()
        .map(|p| {
            let mut parts: Vec<usize> = p.0.iter().map(|&c| (c / 2) as usize).collect();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            parts
        })
        .collect()
}

/// Inverse of [`diagram_to_walk`].
pub fn walk_to_diagram(w: &Walk, k: usize) -> Result<ArcDiagram> {
    let kind = check_axis_walk(w, k)?;
    virtual_to_diagram(kind, &shapes_to_virtual(&walk_shapes(w))?)
}

fn conjugate(p: &[usize]) -> Vec<usize> {
    (0..p.first().copied().unwrap_or(0))
        .map(|j| p.iter().filter(|&&r| r > j).count())
        .collect()
}

/// Closed matching with no `(k+1)`-nesting to an excursion in `W_C(k)` that
/// reads the column lengths `x_i = λ'_i` of the same tableaux.
pub fn matching_to_nesting_excursion(d: &ArcDiagram, k: usize) -> Result<Walk> {
    if d.kind() != DiagramKind::Matching || d.open_count() > 0 {
        return Err(Error::InvalidDiagram("expected a closed matching".into()));
    }
    let t = trace(d);
    if t.max_columns() > k {
        return Err(Error::NestingTooLarge(t.max_columns()));
    }
    let columns: Vec<Vec<usize>> = t.partitions.iter().map(|p| conjugate(p)).collect();
    Walk::from_origin(StepModel::simple(k), shapes_to_steps(&columns))
}

/// Inverse of [`matching_to_nesting_excursion`].
pub fn nesting_excursion_to_matching(w: &Walk, k: usize) -> Result<ArcDiagram> {
    if check_axis_walk(w, k)? != DiagramKind::Matching || !w.endpoint().is_zero() {
        return Err(Error::NotInDomain {
            domain: format!("simple excursion in {}", Domain::WeylC(k)),
            steps: w.len(),
        });
    }
    let shapes: Vec<Vec<usize>> = walk_shapes(w).iter().map(|c| conjugate(c)).collect();
    virtual_to_diagram(DiagramKind::Matching, &shapes_to_virtual(&shapes)?)
}

/// Where open arcs may be inserted without creating a `(k+1)`-crossing.
///
/// Simple walks: the positions `i` (0-based) with `x_k = 0`. Hesitating walks:
/// the points `p` (1-based) that are fixed (pair `(+e1,-e1)`) or closing
/// (pair `(0,-)`) with `x_k = 0` just before the point.
pub fn insertable_positions(w: &Walk, k: usize) -> Result<BTreeSet<usize>> {
    if w.dim() != k {
        return Err(Error::DimensionMismatch {
            walk: w.dim(),
            domain: k,
        });
    }
    let pos = w.positions();
    Ok(match w.model().kind {
        StepKind::Hesitating => (1..=w.half_length())
            .filter(|&p| {
                let (a, b) = (w.steps()[2 * p - 2], w.steps()[2 * p - 1]);
                let fixed_or_closing = (a == Step::E && b == Step::W) || (a.is_zero() && b.is_negative());
                fixed_or_closing && pos[2 * p - 2].last() == 0
            })
            .collect(),
        _ => (0..pos.len()).filter(|&i| pos[i].last() == 0).collect(),
    })
}

/// Removes the open arcs of the walk's diagram: an excursion of length
/// `n - m` in `W_C(k)`, with weights on its visits to `{x_k = 0}`.
pub fn axiswalk_to_weighted_excursion(w: &Walk, k: usize) -> Result<(Walk, OpenArcWeights)> {
    if w.model().kind != StepKind::Simple {
        return Err(Error::NotAnAxisWalk("expected a simple walk".into()));
    }
    let d = walk_to_diagram(w, k)?;
    let (closed, weights, _) = remove_open_arcs(&d);
    Ok((diagram_to_walk(&closed, k)?, weights))
}

/// Inverse of [`axiswalk_to_weighted_excursion`].
pub fn weighted_excursion_to_axiswalk(exc: &Walk, weights: &OpenArcWeights, k: usize) -> Result<Walk> {
    if exc.model().kind != StepKind::Simple {
        return Err(Error::NotAnAxisWalk("expected a simple walk".into()));
    }
    let closed = walk_to_diagram(exc, k)?;
    if !closed.open().is_empty() {
        return Err(Error::NotAnAxisWalk("expected an excursion".into()));
    }
    let d = insert_open_arcs(&closed, weights, k)?;
    diagram_to_walk(&d, k)
}

/// Hesitating axis-walk ending at `(m,0,...)` to an excursion with `m` marked
/// steps (1-based step numbers, always `-e1` steps on `{x_k = 0}`).
pub fn hesitating_axiswalk_to_marked_excursion(w: &Walk) -> Result<(Walk, BTreeSet<usize>)> {
    if w.model().kind != StepKind::Hesitating {
        return Err(Error::NotAnAxisWalk("expected a hesitating walk".into()));
    }
    let k = w.dim();
    let d = walk_to_diagram(w, k)?;
    let (closed, weights, _) = remove_open_arcs(&d);
    let marks = weights.0.keys().map(|&p| 2 * p).collect();
    Ok((diagram_to_walk(&closed, k)?, marks))
}

/// Inverse of [`hesitating_axiswalk_to_marked_excursion`].
pub fn marked_excursion_to_hesitating_axiswalk(exc: &Walk, marks: &BTreeSet<usize>) -> Result<Walk> {
    if exc.model().kind != StepKind::Hesitating {
        return Err(Error::NotAnAxisWalk("expected a hesitating walk".into()));
    }
    let k = exc.dim();
    let allowed = insertable_positions(exc, k)?;
    let mut weights = OpenArcWeights::default();
    for &m in marks {
        if m % 2 != 0 || !allowed.contains(&(m / 2)) {
            return Err(Error::InvalidMark(format!(
                "step {m} is not an insertable -e1 step on the axis"
            )));
        }
        weights.add(m / 2, 1);
    }
    let closed = walk_to_diagram(exc, k)?;
    if !closed.open().is_empty() {
        return Err(Error::NotAnAxisWalk("expected an excursion".into()));
    }
    diagram_to_walk(&insert_open_arcs(&closed, &weights, k)?, k)
}

/// Unfolds a weighted `W_C(k)` excursion across `{x_k = 0}` into a `W_D(k)`
/// walk from `(1/2, ..., 1/2)`. A weight `w` at position `g` becomes `w`
/// sign switches of `x_k` just before step `g + 1`; in the lower copy the
/// `e_k` steps are reversed.
pub fn unfold_weighted_excursion(exc: &Walk, weights: &OpenArcWeights) -> Result<Walk> {
    let k = exc.dim();
    if exc.model().kind != StepKind::Simple || k == 0 {
        return Err(Error::NotAnAxisWalk("expected a simple walk".into()));
    }
    let pos = exc.positions();
    if let Some(&g) = weights.0.keys().find(|&&g| g >= pos.len() || pos[g].last() != 0) {
        return Err(Error::InvalidMark(format!(
            "weight at position {g} which is not on {{x_k = 0}}"
        )));
    }
    let last = (k - 1) as u8;
    let mut upper = true;
    let mut steps = Vec::with_capacity(exc.len() + weights.total());
    for g in 0..pos.len() {
        for _ in 0..weights.get(g) {
            steps.push(if upper { Step::Neg(last) } else { Step::Pos(last) });
            upper = !upper;
        }
        if let Some(&s) = exc.steps().get(g) {
            steps.push(if !upper && s.axis() == Some(k - 1) {
                s.negated()
            } else {
                s
            });
        }
    }
    Walk::new(StepModel::simple(k), Point::half_ones(k), steps)
}

/// Inverse of [`unfold_weighted_excursion`]: steps changing the sign of
/// `x_k` become weights, the others are folded back with `x_k = |y_k| - 1/2`.
pub fn fold_weyl_d_walk(w: &Walk) -> Result<(Walk, OpenArcWeights)> {
    let k = w.dim();
    if w.model().kind != StepKind::Simple || k == 0 || w.start() != &Point::half_ones(k) {
        return Err(Error::NotAnAxisWalk(
            "expected a simple walk from (1/2, ..., 1/2)".into(),
        ));
    }
    if !stays_in(w, &Domain::WeylD(k))? {
        return Err(Error::NotInDomain {
            domain: Domain::WeylD(k).to_string(),
            steps: w.len(),
        });
    }
    let pos = w.positions();
    let mut weights = OpenArcWeights::default();
    let mut steps = Vec::new();
    for (i, &s) in w.steps().iter().enumerate() {
        let (before, after) = (pos[i].last(), pos[i + 1].last());
        if before * after < 0 {
            weights.add(steps.len(), 1);
        } else if before < 0 && s.axis() == Some(k - 1) {
            steps.push(s.negated());
        } else {
            steps.push(s);
        }
    }
    Ok((Walk::from_origin(StepModel::simple(k), steps)?, weights))
}

/// The endpoint `(1/2, ..., 1/2, (-1)^n/2)` of type D excursions of length `n`.
pub fn weyl_d_endpoint(k: usize, n: usize) -> Point {
    let mut p = Point::half_ones(k);
    if n % 2 == 1 {
        p.0[k - 1] = -1;
    }
    p
}

/// Simple axis-walk in `W_C(k)` to a `W_D(k)` walk from `(1/2,...,1/2)` to
/// `(1/2,...,1/2,(-1)^n/2)`; the ending `x_1` becomes the number of sign
/// changes of the last coordinate.
pub fn weyl_c_axiswalk_to_weyl_d_excursion(w: &Walk, k: usize) -> Result<Walk> {
    let (exc, weights) = axiswalk_to_weighted_excursion(w, k)?;
    unfold_weighted_excursion(&exc, &weights)
}

/// Inverse of [`weyl_c_axiswalk_to_weyl_d_excursion`].
pub fn weyl_d_excursion_to_weyl_c_axiswalk(w: &Walk, k: usize) -> Result<Walk> {
    if w.dim() != k {
        return Err(Error::DimensionMismatch {
            walk: w.dim(),
            domain: k,
        });
    }
    if w.endpoint() != weyl_d_endpoint(k, w.len()) {
        return Err(Error::NotAnAxisWalk(format!("walk ends at {}", w.endpoint())));
    }
    let (exc, weights) = fold_weyl_d_walk(w)?;
    weighted_excursion_to_axiswalk(&exc, &weights, k)
}
