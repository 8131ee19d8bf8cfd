//! Bijections assembled from the building blocks of the other modules, the
//! vacillating decomposition, and the count tables built on top of them.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::dyck::{
    mirror, pair_to_quadrant_excursion, pair_to_tilted, quadrant_excursion_to_pair, tilted_to_pair,
    tilted_to_weighted_excursion, unmirror, weighted_excursion_to_tilted, TiltedPair,
};
use crate::growth::{
    axiswalk_to_weighted_excursion, hesitating_axiswalk_to_marked_excursion, marked_excursion_to_hesitating_axiswalk,
    weighted_excursion_to_axiswalk,
};
use crate::schnyder::{transfer_axis_marks, transfer_diagonal_marks};
use crate::walks::{baxter, binomial, count_dp_series, stays_in, Domain, EndPredicate, Point, Step, StepModel, Walk};
use crate::{Error, Result};

fn require(w: &Walk, model: StepModel, domain: Domain, end: EndPredicate, what: &str) -> Result<()> {
    if w.model() != model || !w.start().is_zero() {
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

/// Simple octant axis-walk of length `n` to a pair in `C_{m+1} x C_m`
/// (`n = 2m`) or `C_{m+1} x C_{m+1}` (`n = 2m+1`).
pub fn gouyou(w: &Walk) -> Result<TiltedPair> {
    require(
        w,
        StepModel::SIMPLE_2D,
        Domain::Octant,
        EndPredicate::XAxis,
        "simple octant axis-walk",
    )?;
    let (exc, weights) = axiswalk_to_weighted_excursion(w, 2)?;
    tilted_to_pair(&weighted_excursion_to_tilted(&exc, &weights)?)
}

/// Inverse of [`gouyou`].
pub fn gouyou_inverse(p: &TiltedPair) -> Result<Walk> {
    let (exc, weights) = tilted_to_weighted_excursion(&pair_to_tilted(p)?)?;
    weighted_excursion_to_axiswalk(&exc, &weights, 2)
}

/// Simple octant axis-walk of even length to a simple quadrant excursion of
/// the same length.
pub fn main_simple(w: &Walk) -> Result<Walk> {
    if w.len() % 2 == 1 {
        return Err(Error::NotInDomain {
            domain: "simple octant axis-walk of even length".into(),
            steps: w.len(),
        });
    }
    let p = gouyou(w)?;
    pair_to_quadrant_excursion(&p.p1, &p.p2)
}

/// Inverse of [`main_simple`].
pub fn main_simple_inverse(w: &Walk) -> Result<Walk> {
    let (p1, p2) = quadrant_excursion_to_pair(w)?;
    gouyou_inverse(&TiltedPair { p1, p2 })
}

/// Hesitating octant axis-walk to a hesitating quadrant excursion of the
/// same length.
pub fn main_baxter(w: &Walk) -> Result<Walk> {
    require(
        w,
        StepModel::HESITATING,
        Domain::Octant,
        EndPredicate::XAxis,
        "hesitating octant axis-walk",
    )?;
    let (exc, axis_marks) = hesitating_axiswalk_to_marked_excursion(w)?;
    let (image, diagonal_marks) = transfer_axis_marks(&exc, &axis_marks)?;
    unmirror(&image, &diagonal_marks)
}

/// Inverse of [`main_baxter`].
pub fn main_baxter_inverse(w: &Walk) -> Result<Walk> {
    require(
        w,
        StepModel::HESITATING,
        Domain::Quadrant,
        EndPredicate::Origin,
        "hesitating quadrant excursion",
    )?;
    let (octant, diagonal_marks) = mirror(w)?;
    let (image, axis_marks) = transfer_diagonal_marks(&octant, &diagonal_marks)?;
    marked_excursion_to_hesitating_axiswalk(&image, &axis_marks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LastStep {
    #[serde(rename = "E")]
    East,
    #[serde(rename = "0")]
    Zero,
}

impl LastStep {
    fn step(self) -> Step {
        match self {
            LastStep::East => Step::E,
            LastStep::Zero => Step::Zero,
        }
    }
}

/// A vacillating axis-walk of half-length `n` split into a hesitating
/// axis-walk of half-length `k < n`, the positions (numbers of hesitating
/// pairs before them) of its `n - 1 - k` double-zero pairs, and its last step.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VacillatingTriple {
    pub hesitating: Walk,
    pub insertions: Vec<usize>,
    pub last_step: LastStep,
}

pub fn vacillating_decompose(v: &Walk) -> Result<VacillatingTriple> {
    let bad = |index: usize, reason: &str| Error::InvalidWalk {
        index,
        reason: reason.into(),
    };
    if v.model() != StepModel::VACILLATING || !v.start().is_zero() {
        return Err(bad(0, "expected a 2-dimensional vacillating walk from the origin"));
    }
    let s = v.steps();
    let n = s.len();
    if n == 0 {
        return Err(bad(0, "half-length must be at least 1"));
    }
    if s[0] != Step::Zero {
        return Err(bad(1, "the first step of an axis-walk is 0"));
    }
    let last_step = match s[n - 1] {
        Step::Zero => LastStep::Zero,
        Step::E => LastStep::East,
        _ => return Err(bad(n, "the last step of an axis-walk is E or 0")),
    };
    let mut kept = Vec::with_capacity(n);
    let mut insertions = Vec::new();
    for pair in s[1..n - 1].chunks(2) {
        if pair[0].is_zero() && pair[1].is_zero() {
            insertions.push(kept.len() / 2);
        } else {
            kept.extend_from_slice(pair);
        }
    }
    let hesitating = Walk::from_origin(StepModel::HESITATING, kept)?;
    Ok(VacillatingTriple {
        hesitating,
        insertions,
        last_step,
    })
}

pub fn vacillating_compose(t: &VacillatingTriple) -> Result<Walk> {
    let h = &t.hesitating;
    if h.model() != StepModel::HESITATING || !h.start().is_zero() {
        return Err(Error::InvalidWalk {
            index: 0,
            reason: "expected a 2-dimensional hesitating walk".into(),
        });
    }
    let k = h.half_length();
    if t.insertions.windows(2).any(|w| w[0] > w[1]) || t.insertions.last().is_some_and(|&p| p > k) {
        return Err(Error::InvalidMark(format!(
            "insertion positions must be a sorted multiset in 0..={k}"
        )));
    }
    let mut steps = vec![Step::Zero];
    let mut ins = t.insertions.iter().peekable();
    for i in 0..=k {
        while ins.next_if(|&&p| p == i).is_some() {
            steps.extend([Step::Zero, Step::Zero]);
        }
        if i < k {
            steps.extend_from_slice(&h.steps()[2 * i..2 * i + 2]);
        }
    }
    steps.push(t.last_step.step());
    Walk::from_origin(StepModel::VACILLATING, steps)
}

/// Vacillating octant axis-walk to a vacillating quadrant excursion of the
/// same length together with the last step of the axis-walk.
pub fn vacillating_corollary(v: &Walk) -> Result<(Walk, LastStep)> {
    require(
        v,
        StepModel::VACILLATING,
        Domain::Octant,
        EndPredicate::XAxis,
        "vacillating octant axis-walk",
    )?;
    let t = vacillating_decompose(v)?;
    let excursion = main_baxter(&t.hesitating)?;
    let out = vacillating_compose(&VacillatingTriple {
        hesitating: excursion,
        insertions: t.insertions,
        last_step: LastStep::Zero,
    })?;
    Ok((out, t.last_step))
}

/// Inverse of [`vacillating_corollary`].
pub fn vacillating_corollary_inverse(w: &Walk, last: LastStep) -> Result<Walk> {
    require(
        w,
        StepModel::VACILLATING,
        Domain::Quadrant,
        EndPredicate::Origin,
        "vacillating quadrant excursion",
    )?;
    let t = vacillating_decompose(w)?;
    let axis = main_baxter_inverse(&t.hesitating)?;
    vacillating_compose(&VacillatingTriple {
        hesitating: axis,
        insertions: t.insertions,
        last_step: last,
    })
}

/// Hesitating octant walks of length `2n` ending on `{x = y}` (`u`) and on
/// `{x = y + 1}` (`v`), against the Baxter number `B_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    #[serde(serialize_with = "crate::decimal")]
    pub u: BigUint,
    #[serde(serialize_with = "crate::decimal")]
    pub v: BigUint,
    #[serde(serialize_with = "crate::decimal")]
    pub sum: BigUint,
    #[serde(serialize_with = "crate::decimal")]
    pub baxter: BigUint,
    pub equal: bool,
}

pub fn conjecture_table(max_n: usize) -> Vec<ConjectureRow> {
    let len = 2 * max_n;
    let origin = Point::origin(2);
    let diag = count_dp_series(
        StepModel::HESITATING,
        &Domain::Octant,
        &origin,
        len,
        &EndPredicate::Diagonal,
        len,
    );
    let thick = count_dp_series(
        StepModel::HESITATING,
        &Domain::Octant,
        &origin,
        len,
        &EndPredicate::ThickDiagonal,
        len,
    );
    (0..=max_n)
        .map(|n| {
            let u = diag[2 * n].clone();
            let v = &thick[2 * n] - &u;
            let sum = &u + &v;
            let b = baxter(n as u64 + 1);
            ConjectureRow {
                n,
                equal: sum == b,
                u,
                v,
                sum,
                baxter: b,
            }
        })
        .collect()
}

pub fn conjecture_row(n: usize) -> ConjectureRow {
    conjecture_table(n).pop().expect("table has n + 1 rows")
}

/// Vacillating counts at half-length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VacillatingRow {
    pub n: usize,
    #[serde(serialize_with = "crate::decimal")]
    pub octant_axis_walks: BigUint,
    #[serde(serialize_with = "crate::decimal")]
    pub quadrant_excursions: BigUint,
    #[serde(serialize_with = "crate::decimal")]
    pub binomial_baxter_sum: BigUint,
    pub twice: bool,
    pub formula: bool,
}

/// `sum_{k=0}^{n-1} C(n-1, k) B_{k+1}`.
pub fn binomial_baxter_sum(n: usize) -> BigUint {
    let n = n as u64;
    (0..n).map(|k| binomial(n - 1, k) * baxter(k + 1)).sum()
}

/// Rows for half-lengths `1..=max_n`.
pub fn vacillating_table(max_n: usize) -> Vec<VacillatingRow> {
    let len = 2 * max_n;
    let origin = Point::origin(2);
    let axis = count_dp_series(
        StepModel::VACILLATING,
        &Domain::Octant,
        &origin,
        len,
        &EndPredicate::XAxis,
        len,
    );
    let exc = count_dp_series(
        StepModel::VACILLATING,
        &Domain::Quadrant,
        &origin,
        len,
        &EndPredicate::Origin,
        len,
    );
    (1..=max_n)
        .map(|n| {
            let (a, e) = (axis[2 * n].clone(), exc[2 * n].clone());
            let sum = binomial_baxter_sum(n);
            VacillatingRow {
                n,
                twice: a == &e * 2u32,
                formula: e == sum,
                octant_axis_walks: a,
                quadrant_excursions: e,
                binomial_baxter_sum: sum,
            }
        })
        .collect()
}

pub fn vacillating_row(n: usize) -> VacillatingRow {
    vacillating_table(n).pop().expect("n >= 1")
}
