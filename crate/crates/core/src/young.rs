//! Standard Young tableaux and their bijections with Weyl chamber walks.
//!
//! A tableau of height at most `2k` goes through Robinson–Schensted to an
//! involution; its fixed points (one per odd column) become weights on the
//! gaps of the remaining matching, the matching becomes an excursion in
//! `W_C(k)` through the column lengths of its growth tableaux, and the
//! weights are finally turned into open arcs of an axis-walk.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arcdiag::{ArcDiagram, OpenArcWeights};
use crate::growth::{
    axiswalk_to_weighted_excursion, matching_to_nesting_excursion, nesting_excursion_to_matching,
    weighted_excursion_to_axiswalk, weyl_c_axiswalk_to_weyl_d_excursion, weyl_d_excursion_to_weyl_c_axiswalk,
};
use crate::walks::{binomial, Walk};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardYoungTableau {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for StandardYoungTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardYoungTableau::new(rows)
    }
}

impl From<StandardYoungTableau> for Vec<Vec<usize>> {
    fn from(t: StandardYoungTableau) -> Self {
        t.rows
    }
}

impl StandardYoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
        }
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidTableau(format!("entries must be 1..={n}, each once")));
            }
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if (c > 0 && row[c - 1] >= x) || (r > 0 && rows[r - 1][c] >= x) {
                    return Err(Error::InvalidTableau(format!("entry {x} breaks monotonicity")));
                }
            }
        }
        Ok(StandardYoungTableau { rows })
    }

    pub fn empty() -> Self {
        StandardYoungTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn odd_columns(&self) -> usize {
        let width = self.rows.first().map_or(0, |r| r.len());
        (0..width)
            .filter(|&c| self.rows.iter().filter(|r| r.len() > c).count() % 2 == 1)
            .count()
    }
}

impl fmt::Display for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Partitions of `n` with at most `max_parts` parts, in reverse lexicographic order.
pub fn partitions(n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max_part: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        for p in (1..=max_part.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Number of standard tableaux of the given shape, `n! / Π hooks`.
pub fn hook_length_count(shape: &[usize]) -> BigUint {
    let n: usize = shape.iter().sum();
    let mut hooks = BigUint::one();
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let below = shape[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= BigUint::from(len - c + below);
        }
    }
    let fact = (1..=n).fold(BigUint::one(), |a, i| a * BigUint::from(i));
    fact / hooks
}

/// Tableaux of size `n` with at most `max_height` rows, by the hook-length formula.
pub fn count_syt(n: usize, max_height: usize) -> BigUint {
    partitions(n, max_height)
        .iter()
        .map(|s| hook_length_count(s))
        .fold(BigUint::zero(), |a, b| a + b)
}

/// All tableaux of size `n` with at most `max_height` rows, by placing
/// `1, 2, ..., n` on outer corners.
pub fn enumerate_syt(n: usize, max_height: usize) -> Vec<StandardYoungTableau> {
    fn rec(next: usize, n: usize, max_height: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardYoungTableau>) {
        if next > n {
            out.push(StandardYoungTableau { rows: rows.clone() });
            return;
        }
        for r in 0..=rows.len() {
            if r == rows.len() {
                if r < max_height {
                    rows.push(vec![next]);
                    rec(next + 1, n, max_height, rows, out);
                    rows.pop();
                }
            } else if r == 0 || rows[r - 1].len() > rows[r].len() {
                rows[r].push(next);
                rec(next + 1, n, max_height, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(1, n, max_height, &mut Vec::new(), &mut out);
    out
}

fn rs_insert(rows: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(i) => x = std::mem::replace(&mut row[i], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Insertion tableau of a permutation given in one-line notation (1-based values).
pub fn rs_insertion(word: &[usize]) -> (StandardYoungTableau, StandardYoungTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (i, &x) in word.iter().enumerate() {
        let r = rs_insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(i + 1);
    }
    (StandardYoungTableau { rows: p }, StandardYoungTableau { rows: q })
}

/// The involution whose insertion and recording tableaux both equal `t`.
pub fn rs_involution(t: &StandardYoungTableau) -> Vec<usize> {
    let n = t.size();
    let mut p = t.rows.clone();
    let mut q = t.rows.clone();
    let mut word = vec![0; n];
    for m in (1..=n).rev() {
        let r = q
            .iter()
            .position(|row| row.last() == Some(&m))
            .expect("largest entry sits at a row end");
        q[r].pop();
        let mut x = p[r].pop().expect("same shape");
        for row in p[..r].iter_mut().rev() {
            let i = row.iter().rposition(|&y| y < x).expect("row above has a smaller entry");
            x = std::mem::replace(&mut row[i], x);
        }
        if q[r].is_empty() {
            q.pop();
            p.pop();
        }
        word[m - 1] = x;
    }
    word
}

/// Splits an involution into the matching on its non-fixed points and the
/// fixed points as weights on the gaps of that matching.
pub fn involution_to_weighted_matching(sigma: &[usize]) -> Result<(ArcDiagram, OpenArcWeights)> {
    let n = sigma.len();
    let mut label = vec![0usize; n + 1];
    let mut weights = OpenArcWeights::default();
    let mut moved = 0;
    for i in 1..=n {
        if sigma[i - 1] == 0 || sigma[i - 1] > n || sigma[sigma[i - 1] - 1] != i {
            return Err(Error::InvalidTableau("not an involution".into()));
        }
        if sigma[i - 1] == i {
            weights.add(moved, 1);
        } else {
            moved += 1;
            label[i] = moved;
        }
    }
    let arcs: Vec<(usize, usize)> = (1..=n)
        .filter(|&i| sigma[i - 1] > i)
        .map(|i| (label[i], label[sigma[i - 1]]))
        .collect();
    Ok((ArcDiagram::matching(moved, &arcs, &[])?, weights))
}

/// Inverse of [`involution_to_weighted_matching`].
pub fn weighted_matching_to_involution(m: &ArcDiagram, weights: &OpenArcWeights) -> Vec<usize> {
    let size = m.size();
    let mut position = vec![0usize; size + 1];
    let mut n = 0;
    let mut fixed = Vec::new();
    for g in 0..=size {
        for _ in 0..weights.get(g) {
            n += 1;
            fixed.push(n);
        }
        if g < size {
            n += 1;
            position[g + 1] = n;
        }
    }
    let mut sigma = vec![0usize; n];
    for p in fixed {
        sigma[p - 1] = p;
    }
    for (a, b) in m.closed_arcs() {
        sigma[position[a] - 1] = position[b];
        sigma[position[b] - 1] = position[a];
    }
    sigma
}

/// Tableau of height at most `2k` to an axis-walk in `W_C(k)` of the same
/// length ending at `(odd_columns, 0, ..., 0)`.
pub fn syt_to_weyl_c_axiswalk(t: &StandardYoungTableau, k: usize) -> Result<Walk> {
    if t.height() > 2 * k {
        return Err(Error::HeightTooLarge {
            height: t.height(),
            max: 2 * k,
        });
    }
    let (matching, weights) = involution_to_weighted_matching(&rs_involution(t))?;
    let excursion = matching_to_nesting_excursion(&matching, k)?;
    weighted_excursion_to_axiswalk(&excursion, &weights, k)
}

/// Inverse of [`syt_to_weyl_c_axiswalk`].
pub fn weyl_c_axiswalk_to_syt(w: &Walk, k: usize) -> Result<StandardYoungTableau> {
    let (excursion, weights) = axiswalk_to_weighted_excursion(w, k)?;
    let matching = nesting_excursion_to_matching(&excursion, k)?;
    let sigma = weighted_matching_to_involution(&matching, &weights);
    Ok(rs_insertion(&sigma).0)
}

/// Tableau of height at most `2k` to a walk in `W_D(k)` from `(1/2, ..., 1/2)`
/// to `(1/2, ..., 1/2, (-1)^n/2)`; odd columns become sign changes of `x_k`.
pub fn syt_to_weyl_d_excursion(t: &StandardYoungTableau, k: usize) -> Result<Walk> {
    weyl_c_axiswalk_to_weyl_d_excursion(&syt_to_weyl_c_axiswalk(t, k)?, k)
}

/// Inverse of [`syt_to_weyl_d_excursion`].
pub fn weyl_d_excursion_to_syt(w: &Walk, k: usize) -> Result<StandardYoungTableau> {
    weyl_c_axiswalk_to_syt(&weyl_d_excursion_to_weyl_c_axiswalk(w, k)?, k)
}

/// `Y_2[n] = C(n, floor(n/2))`.
pub fn two_row_count(n: usize) -> BigUint {
    binomial(n as u64, n as u64 / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::{enumerate, stats, Domain, EndPredicate, StepModel};
    use std::collections::{BTreeMap, BTreeSet, HashSet};

    #[test]
    fn small_counts() {
        assert_eq!(count_syt(3, 2), BigUint::from(3u32));
        assert_eq!(enumerate_syt(3, 2).len(), 3);
        for d in 0..4 {
            assert_eq!(count_syt(0, d), BigUint::one());
        }
        for n in 0..=10 {
            assert_eq!(count_syt(n, 2), two_row_count(n));
        }
    }

    #[test]
    fn hook_formula_matches_backtracking() {
        for n in 0..=10 {
            let mut by_shape: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            for t in enumerate_syt(n, n) {
                *by_shape.entry(t.shape()).or_default() += 1;
            }
            assert_eq!(by_shape.len(), partitions(n, n).len());
            for (shape, c) in by_shape {
                assert_eq!(hook_length_count(&shape), BigUint::from(c));
            }
        }
    }

    #[test]
    fn rs_involution_roundtrip() {
        for n in 0..=7 {
            for t in enumerate_syt(n, n) {
                let s = rs_involution(&t);
                assert!((1..=n).all(|i| s[s[i - 1] - 1] == i));
                assert_eq!(
                    s.iter().enumerate().filter(|(i, &x)| x == i + 1).count(),
                    t.odd_columns()
                );
                let (p, q) = rs_insertion(&s);
                assert_eq!((&p, &q), (&t, &t));
                let (m, w) = involution_to_weighted_matching(&s).unwrap();
                assert_eq!(weighted_matching_to_involution(&m, &w), s);
            }
        }
    }

    #[test]
    fn weyl_c_bijection() {
        let one = StandardYoungTableau::new(vec![vec![1]]).unwrap();
        let w = syt_to_weyl_c_axiswalk(&one, 1).unwrap();
        assert_eq!(w.to_text(), "+1");
        for k in 1..=3 {
            for n in 0..=7 {
                let walks = enumerate(StepModel::simple(k), &Domain::WeylC(k), n, &EndPredicate::XAxis);
                let tableaux = enumerate_syt(n, 2 * k);
                assert_eq!(walks.len(), tableaux.len(), "k={k} n={n}");
                let mut images = HashSet::new();
                for t in tableaux {
                    let w = syt_to_weyl_c_axiswalk(&t, k).unwrap();
                    assert_eq!(w.endpoint().0[0], 2 * t.odd_columns() as i64);
                    assert_eq!(weyl_c_axiswalk_to_syt(&w, k).unwrap(), t);
                    images.insert(w);
                }
                assert_eq!(images.len(), walks.len());
            }
        }
        let tall = StandardYoungTableau::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert!(matches!(
            syt_to_weyl_c_axiswalk(&tall, 1),
            Err(Error::HeightTooLarge { .. })
        ));
    }

    #[test]
    fn weyl_d_statistic() {
        assert_eq!(
            syt_to_weyl_d_excursion(&StandardYoungTableau::empty(), 2)
                .unwrap()
                .len(),
            0
        );
        for k in 1..=2 {
            for n in 0..=6 {
                let mut odd: BTreeMap<usize, usize> = BTreeMap::new();
                let mut sign: BTreeMap<usize, usize> = BTreeMap::new();
                let mut images = BTreeSet::new();
                for t in enumerate_syt(n, 2 * k) {
                    let w = syt_to_weyl_d_excursion(&t, k).unwrap();
                    *odd.entry(t.odd_columns()).or_default() += 1;
                    *sign.entry(stats(&w).sign_changes_last_coord).or_default() += 1;
                    assert_eq!(weyl_d_excursion_to_syt(&w, k).unwrap(), t);
                    images.insert(w.to_text());
                }
                assert_eq!(odd, sign);
                assert_eq!(images.len(), count_syt(n, 2 * k).try_into().unwrap_or(0usize));
            }
        }
    }

    #[test]
    fn json_form() {
        let t = StandardYoungTableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(j, "[[1,3],[2]]");
        assert_eq!(serde_json::from_str::<StandardYoungTableau>(&j).unwrap(), t);
        assert!(serde_json::from_str::<StandardYoungTableau>("[[1,2],[2]]").is_err());
    }
}
