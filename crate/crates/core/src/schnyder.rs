//! Schnyder woods of rooted plane triangulations, the maps between woods
//! and non-crossing Dyck pairs, re-rooting, and the involutions built on
//! top of them.
//!
//! Vertices `0, 1, 2` are the external vertices `v0` (root), `v1`, `v2`,
//! counterclockwise around the outer face; internal vertices are
//! `3..size + 3`, numbered in the clockwise preorder of `T0`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::dyck::{
    dyck_paths, hesitating_to_marked_simple, marked_simple_to_hesitating, mirror, octant_to_pair, pair_to_octant,
    unmirror, DyckPair, DyckPath, DyckStep,
};
use crate::walks::{stays_in, Domain, StepKind, StepModel, Walk};
use crate::{Error, Result};

const PENDING: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchnyderWood {
    /// Neighbours of each vertex in clockwise order. Internal vertices start
    /// with their `T0` parent; `v0` starts with `v2`, `v1` with `v0`, `v2`
    /// with `v1`.
    rot: Vec<Vec<usize>>,
    /// Parents of internal vertex `3 + i` in `T0`, `T1`, `T2`.
    out: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reroot {
    /// Root moved from `v0` to `v1` with the orientation reversed; exchanges `T0` and `T1`.
    Swap01,
    /// Root moved from `v0` to `v2` with the orientation reversed; exchanges `T0` and `T2`.
    Swap02Flip,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WoodStats {
    pub size: usize,
    pub leaves_t0: usize,
    pub internal_nodes_t1: usize,
    pub deg_v0_t0: usize,
    pub deg_v1_t1: usize,
    pub deg_v2_t2: usize,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidWood(msg.into())
}

fn position(list: &[usize], x: usize) -> usize {
    list.iter()
        .position(|&y| y == x)
        .expect("neighbour present in rotation")
}

fn prev_cw(list: &[usize], x: usize) -> usize {
    let p = position(list, x);
    list[(p + list.len() - 1) % list.len()]
}

fn insert_before(list: &mut Vec<usize>, anchor: usize, x: usize) {
    match position(list, anchor) {
        0 => list.push(x),
        p => list.insert(p, x),
    }
}

impl SchnyderWood {
    /// Builds a wood from explicit rotations and parents, then validates it.
    pub fn from_parts(rot: Vec<Vec<usize>>, out: Vec<[usize; 3]>) -> Result<Self> {
        let w = SchnyderWood { rot, out };
        w.validate()?;
        Ok(w.canonical())
    }

    /// The unique wood of size 0: a single triangle.
    pub fn triangle() -> Self {
        SchnyderWood {
            rot: vec![vec![2, 1], vec![0, 2], vec![1, 0]],
            out: vec![],
        }
    }

    pub fn size(&self) -> usize {
        self.out.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    /// Clockwise neighbours of `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    /// Parent of internal vertex `v` in tree `T_color`.
    pub fn parent(&self, v: usize, color: usize) -> usize {
        self.out[v - 3][color]
    }

    /// `(tail, head, color)` for every internal edge.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut e = Vec::with_capacity(3 * self.size());
        for (i, o) in self.out.iter().enumerate() {
            for (c, &h) in o.iter().enumerate() {
                e.push((i + 3, h, c));
            }
        }
        e
    }

    fn is_head(&self, v: usize, from: usize, color: usize) -> bool {
        from >= 3 && self.out[from - 3][color] == v
    }

    /// Children of `v` in `T_color`, clockwise around `v`.
    pub fn children(&self, v: usize, color: usize) -> Vec<usize> {
        self.rot[v]
            .iter()
            .copied()
            .filter(|&x| self.is_head(v, x, color))
            .collect()
    }

    /// Internal vertices in the clockwise preorder of `T0`.
    pub fn t0_preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.size());
        let mut stack: Vec<usize> = self.children(0, 0).into_iter().rev().collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children(v, 0).into_iter().rev());
        }
        order
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.out.len();
        let nv = self.rot.len();
        if nv != n + 3 {
            return Err(bad(format!("{nv} rotations for {n} internal vertices")));
        }
        let mut edges = 0usize;
        for (v, r) in self.rot.iter().enumerate() {
            let distinct: BTreeSet<usize> = r.iter().copied().collect();
            if distinct.len() != r.len() || distinct.contains(&v) || r.iter().any(|&x| x >= nv) {
                return Err(bad(format!("rotation of vertex {v} is not a set of other vertices")));
            }
            for &x in r {
                if !self.rot[x].contains(&v) {
                    return Err(bad(format!("edge {v}-{x} missing at {x}")));
                }
            }
            edges += r.len();
        }
        edges /= 2;
        if edges != 3 * nv - 6 {
            return Err(bad(format!(
                "{edges} edges, a triangulation on {nv} vertices has {}",
                3 * nv - 6
            )));
        }
        let mut seen = BTreeSet::new();
        let mut faces = 0;
        for v in 0..nv {
            for &x in &self.rot[v] {
                if seen.contains(&(v, x)) {
                    continue;
                }
                let mut dart = (v, x);
                let mut len = 0;
                while seen.insert(dart) {
                    dart = (dart.1, prev_cw(&self.rot[dart.1], dart.0));
                    len += 1;
                }
                if len != 3 || dart != (v, x) {
                    return Err(bad(format!("face through {v}-{x} is not a triangle")));
                }
                faces += 1;
            }
        }
        if nv + faces != edges + 2 {
            return Err(bad("not a planar embedding"));
        }
        if prev_cw(&self.rot[1], 0) != 2 || prev_cw(&self.rot[2], 1) != 0 {
            return Err(bad("outer face is not v0 v1 v2 counterclockwise"));
        }
        for u in 3..nv {
            let o = self.out[u - 3];
            for (c, &h) in o.iter().enumerate() {
                if !self.rot[u].contains(&h) {
                    return Err(bad(format!("parent {h} of {u} in T{c} is not a neighbour")));
                }
                if h < 3 && h != c {
                    return Err(bad(format!("edge {u}-{h} has color {c}")));
                }
            }
            for &x in &self.rot[u] {
                let forward = o.contains(&x) as usize;
                let backward = (x >= 3 && self.out[x - 3].contains(&u)) as usize;
                if forward + backward != 1 {
                    return Err(bad(format!("edge {u}-{x} is not oriented exactly once")));
                }
            }
            let start = position(&self.rot[u], o[0]);
            let r = &self.rot[u];
            let seq: Vec<(bool, usize)> = (0..r.len())
                .map(|i| {
                    let x = r[(start + i) % r.len()];
                    match o.iter().position(|&h| h == x) {
                        Some(c) => (true, c),
                        None => (false, (0..3).find(|&c| self.is_head(u, x, c)).expect("oriented edge")),
                    }
                })
                .collect();
            if !local_rule(&seq) {
                return Err(bad(format!("local rule fails at vertex {u}")));
            }
        }
        for c in 0..3 {
            for u in 3..nv {
                let mut v = u;
                let mut steps = 0;
                while v >= 3 {
                    v = self.out[v - 3][c];
                    steps += 1;
                    if steps > n {
                        return Err(bad(format!("T{c} has a cycle through {u}")));
                    }
                }
                if v != c {
                    return Err(bad(format!("T{c} from {u} ends at v{v}")));
                }
            }
        }
        Ok(())
    }

    /// Internal vertices renumbered by `T0` preorder and rotations rotated to
    /// their canonical first neighbour.
    fn canonical(&self) -> Self {
        self.relabelled().0
    }

    fn relabelled(&self) -> (Self, Vec<usize>) {
        let mut map: Vec<usize> = (0..self.rot.len()).collect();
        for (i, v) in self.t0_preorder().into_iter().enumerate() {
            map[v] = i + 3;
        }
        let mut rot = vec![Vec::new(); self.rot.len()];
        let mut out = vec![[0; 3]; self.out.len()];
        for (v, r) in self.rot.iter().enumerate() {
            rot[map[v]] = r.iter().map(|&x| map[x]).collect();
        }
        for (i, o) in self.out.iter().enumerate() {
            out[map[i + 3] - 3] = o.map(|x| map[x]);
        }
        for (v, r) in rot.iter_mut().enumerate() {
            let first = match v {
                0 => 2,
                1 => 0,
                2 => 1,
                _ => out[v - 3][0],
            };
            let p = position(r, first);
            r.rotate_left(p);
        }
        (SchnyderWood { rot, out }, map)
    }

    pub fn stats(&self) -> WoodStats {
        let n = self.size();
        let mut t0_children = vec![0usize; n + 3];
        let mut t1_children = vec![0usize; n + 3];
        let mut t2_children = vec![0usize; n + 3];
        for o in &self.out {
            t0_children[o[0]] += 1;
            t1_children[o[1]] += 1;
            t2_children[o[2]] += 1;
        }
        WoodStats {
            size: n,
            leaves_t0: (3..n + 3).filter(|&v| t0_children[v] == 0).count(),
            internal_nodes_t1: (1..n + 3).filter(|&v| (v == 1 || v >= 3) && t1_children[v] > 0).count(),
            deg_v0_t0: t0_children[0],
            deg_v1_t1: t1_children[1],
            deg_v2_t2: t2_children[2],
        }
    }
}

/// Clockwise from the 0-tail: one 0-tail, 1-heads, one 2-tail, 0-heads,
/// one 1-tail, 2-heads.
fn local_rule(seq: &[(bool, usize)]) -> bool {
    let pattern = [(true, 0), (false, 1), (true, 2), (false, 0), (true, 1), (false, 2)];
    let mut i = 0;
    for &(tail, color) in &pattern {
        if tail {
            if seq.get(i) != Some(&(true, color)) {
                return false;
            }
            i += 1;
        } else {
            while seq.get(i) == Some(&(false, color)) {
                i += 1;
            }
        }
    }
    i == seq.len()
}

#[derive(Serialize, Deserialize)]
struct WoodJson {
    size: usize,
    rotations: Vec<Vec<usize>>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    tail: usize,
    head: usize,
    color: usize,
}

impl Serialize for SchnyderWood {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WoodJson {
            size: self.size(),
            rotations: self.rot.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(tail, head, color)| EdgeJson { tail, head, color })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchnyderWood {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = WoodJson::deserialize(d)?;
        let mut out = vec![[PENDING; 3]; j.size];
        for e in &j.edges {
            if e.tail < 3 || e.tail >= j.size + 3 || e.color > 2 || out[e.tail - 3][e.color] != PENDING {
                return Err(D::Error::custom(format!(
                    "bad edge {}->{} color {}",
                    e.tail, e.head, e.color
                )));
            }
            out[e.tail - 3][e.color] = e.head;
        }
        if out.iter().any(|o| o.contains(&PENDING)) {
            return Err(D::Error::custom(
                "every internal vertex needs one outgoing edge per color",
            ));
        }
        SchnyderWood::from_parts(j.rotations, out).map_err(D::Error::custom)
    }
}

/// Wood to pair: the lower path is the contour of `T0`, the upper path is
/// `U D^{b_2} ... U D^{b_{n+1}}` with `b_i` the 1-heads at the `i`-th vertex.
pub fn psi(w: &SchnyderWood) -> DyckPair {
    let mut lower = Vec::with_capacity(2 * w.size());
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    let kids: Vec<Vec<usize>> = (0..w.vertex_count()).map(|v| w.children(v, 0)).collect();
    while let Some((v, next)) = stack.pop() {
        if next < kids[v].len() {
            stack.push((v, next + 1));
            stack.push((kids[v][next], 0));
            lower.push(DyckStep::U);
        } else if v != 0 {
            lower.push(DyckStep::D);
        }
    }
    let heads = |v: usize| w.rotation(v).iter().filter(|&&x| w.is_head(v, x, 1)).count();
    let order = w.t0_preorder();
    let mut upper = Vec::with_capacity(2 * w.size());
    for i in 0..order.len() {
        upper.push(DyckStep::U);
        let beta = if i + 1 < order.len() {
            heads(order[i + 1])
        } else {
            heads(1)
        };
        upper.extend(std::iter::repeat_n(DyckStep::D, beta));
    }
    DyckPair::new(DyckPath(lower), DyckPath(upper)).expect("a wood gives a non-crossing pair")
}

/// Pair to wood, inverse of [`psi`].
pub fn phi(p: &DyckPair) -> SchnyderWood {
    let n = p.half_length();
    let nv = n + 3;
    let mut parent0 = vec![0usize; nv];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); nv];
    enum Event {
        Discover(usize),
        Return(usize),
    }
    let mut events = Vec::with_capacity(2 * n);
    let mut stack = vec![0usize];
    let mut next = 3;
    for s in p.lower().steps() {
        let top = *stack.last().expect("Dyck path");
        match s {
            DyckStep::U => {
                parent0[next] = top;
                children[top].push(next);
                events.push(Event::Discover(next));
                stack.push(next);
                next += 1;
            }
            DyckStep::D => {
                events.push(Event::Return(top));
                stack.pop();
            }
        }
    }
    let mut beta = vec![0usize; n + 2];
    let mut i = 0;
    for s in p.upper().steps() {
        match s {
            DyckStep::U => i += 1,
            DyckStep::D => beta[i + 1] += 1,
        }
    }

    let mut parent1 = vec![0usize; nv];
    let mut heads1: Vec<Vec<usize>> = vec![Vec::new(); nv];
    let mut tails: Vec<usize> = Vec::new();
    for e in &events {
        match *e {
            Event::Discover(u) => {
                for _ in 0..beta[u - 2] {
                    let y = tails.pop().expect("non-crossing pair");
                    parent1[y] = u;
                    heads1[u].push(y);
                }
            }
            Event::Return(y) => tails.push(y),
        }
    }
    while let Some(y) = tails.pop() {
        parent1[y] = 1;
        heads1[1].push(y);
    }

    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); nv];
    rot[0] = std::iter::once(2)
        .chain(children[0].iter().copied())
        .chain(std::iter::once(1))
        .collect();
    rot[1] = std::iter::once(0)
        .chain(heads1[1].iter().copied())
        .chain(std::iter::once(2))
        .collect();
    rot[2] = vec![1, 0];
    for u in 3..nv {
        let r = &mut rot[u];
        r.push(parent0[u]);
        r.extend(&heads1[u]);
        r.push(PENDING);
        r.extend(&children[u]);
        r.push(parent1[u]);
    }
    let mut parent2 = vec![0usize; nv];
    for u in 3..nv {
        let slot = position(&rot[u], PENDING);
        let a = rot[u][slot - 1];
        let before = prev_cw(&rot[a], u);
        let z = if before == PENDING { parent2[a] } else { before };
        parent2[u] = z;
        insert_before(&mut rot[z], a, u);
    }
    for u in 3..nv {
        let slot = position(&rot[u], PENDING);
        rot[u][slot] = parent2[u];
    }
    let out = (3..nv).map(|u| [parent0[u], parent1[u], parent2[u]]).collect();
    let w = SchnyderWood { rot, out };
    debug_assert!(w.validate().is_ok(), "{:?}", w.validate());
    w.canonical()
}

/// Moves the root and reverses the orientation, relabelling external
/// vertices and colors; returns the old-to-new vertex map as well.
pub fn reroot_with_map(w: &SchnyderWood, target: Reroot) -> (SchnyderWood, Vec<usize>) {
    let sigma = |x: usize| match (target, x) {
        (Reroot::Swap01, 0) => 1,
        (Reroot::Swap01, 1) => 0,
        (Reroot::Swap02Flip, 0) => 2,
        (Reroot::Swap02Flip, 2) => 0,
        _ => x,
    };
    let mut rot = vec![Vec::new(); w.rot.len()];
    for (v, r) in w.rot.iter().enumerate() {
        rot[sigma(v)] = r.iter().rev().map(|&x| sigma(x)).collect();
    }
    let out = w
        .out
        .iter()
        .map(|o| {
            let mut n = [0; 3];
            for (c, &h) in o.iter().enumerate() {
                n[sigma(c)] = sigma(h);
            }
            n
        })
        .collect();
    let (wood, relabel) = SchnyderWood { rot, out }.relabelled();
    let map = (0..w.rot.len()).map(|v| relabel[sigma(v)]).collect();
    (wood, map)
}

pub fn reroot(w: &SchnyderWood, target: Reroot) -> SchnyderWood {
    reroot_with_map(w, target).0
}

pub fn wood_stats(w: &SchnyderWood) -> WoodStats {
    w.stats()
}

/// All woods of the given size, as images of the non-crossing pairs.
pub fn woods(n: usize) -> Vec<SchnyderWood> {
    crate::dyck::noncrossing_pairs(n).iter().map(phi).collect()
}

/// Involution exchanging lower and upper bounce counts while keeping the
/// number of upper peaks.
pub fn bounce_exchange(p: &DyckPair) -> DyckPair {
    psi(&reroot(&phi(&p.reversed()), Reroot::Swap02Flip)).reversed()
}

/// Involution sending peak counts `(p, q)` of (lower, upper) to
/// `(n - q + 1, n - p + 1)`.
pub fn narayana_involution(p: &DyckPair) -> DyckPair {
    psi(&reroot(&phi(p), Reroot::Swap01))
}

fn heights_pair_to_walk(upper: &[DyckStep], lower: &[DyckStep]) -> Walk {
    let p = DyckPath(upper.to_vec());
    let q = DyckPath(lower.to_vec());
    let steps = p
        .steps()
        .iter()
        .zip(q.steps())
        .map(|(a, b)| match (a, b) {
            (DyckStep::U, DyckStep::U) => crate::walks::Step::E,
            (DyckStep::D, DyckStep::D) => crate::walks::Step::W,
            (DyckStep::U, DyckStep::D) => crate::walks::Step::N,
            (DyckStep::D, DyckStep::U) => crate::walks::Step::S,
        })
        .collect();
    Walk::from_origin(StepModel::SIMPLE_2D, steps).expect("simple steps")
}

fn walk_to_sum_difference(w: &Walk) -> (DyckPath, DyckPath) {
    let (mut upper, mut lower) = (Vec::new(), Vec::new());
    for &s in w.steps() {
        let (u, l) = match s {
            crate::walks::Step::E => (DyckStep::U, DyckStep::U),
            crate::walks::Step::W => (DyckStep::D, DyckStep::D),
            crate::walks::Step::N => (DyckStep::U, DyckStep::D),
            _ => (DyckStep::D, DyckStep::U),
        };
        upper.push(u);
        lower.push(l);
    }
    (DyckPath(upper), DyckPath(lower))
}

fn heads_at_v1(w: &SchnyderWood) -> Vec<usize> {
    w.children(1, 1)
}

/// Simple quadrant excursion of length `2n` to a simple octant walk of the
/// same length ending on the diagonal. The number of marked steps leaving
/// the diagonal after folding equals `k` where the image ends at `(k, k)`.
pub fn theorem_eliz(w: &Walk) -> Result<Walk> {
    if w.model().kind != StepKind::Simple || w.dim() != 2 {
        return Err(Error::NotInDomain {
            domain: "simple quadrant excursion".into(),
            steps: 0,
        });
    }
    let (octant, marks) = mirror(w)?;
    let pair = octant_to_pair(&octant)?;
    let bounces = pair.lower_bounce_steps();
    let wood = phi(&pair);
    let v0_children = wood.children(0, 0);
    let marked: BTreeSet<usize> = bounces
        .iter()
        .zip(&v0_children)
        .filter(|(s, _)| marks.contains(&(**s + 1)))
        .map(|(_, &v)| v)
        .collect();
    let (swapped, map) = reroot_with_map(&wood, Reroot::Swap01);
    let marked: BTreeSet<usize> = marked.iter().map(|&v| map[v]).collect();
    let p = psi(&swapped);
    let heads = heads_at_v1(&swapped);
    let mut upper = p.upper().steps().to_vec();
    let start = upper.len() - heads.len();
    for (j, v) in heads.iter().enumerate() {
        if marked.contains(v) {
            upper[start + j] = DyckStep::U;
        }
    }
    Ok(heights_pair_to_walk(&upper, p.lower().steps()))
}

/// Inverse of [`theorem_eliz`].
pub fn theorem_eliz_inverse(w: &Walk) -> Result<Walk> {
    let what = "simple octant walk from the origin ending on the diagonal";
    if w.model().kind != StepKind::Simple || w.dim() != 2 || !w.start().is_zero() {
        return Err(Error::NotInDomain {
            domain: what.into(),
            steps: 0,
        });
    }
    let end = w.endpoint();
    if !stays_in(w, &Domain::Octant)? || end.0[0] != end.0[1] || w.len() % 2 == 1 {
        return Err(Error::NotInDomain {
            domain: what.into(),
            steps: w.len(),
        });
    }
    let n = w.len() / 2;
    let (upper, lower) = walk_to_sum_difference(w);
    let mut steps = upper.steps().to_vec();
    let last_up = steps
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == DyckStep::U)
        .nth(n.saturating_sub(1))
        .map(|(i, _)| i);
    let mut flipped = BTreeSet::new();
    if let Some(last_up) = last_up {
        for (i, s) in steps.iter_mut().enumerate().skip(last_up + 1) {
            if *s == DyckStep::U {
                *s = DyckStep::D;
                flipped.insert(i);
            }
        }
    }
    let swapped_pair = DyckPair::new(lower, DyckPath(steps))?;
    let swapped = phi(&swapped_pair);
    let heads = heads_at_v1(&swapped);
    let start = 2 * n - heads.len();
    let marked: BTreeSet<usize> = heads
        .iter()
        .enumerate()
        .filter(|(j, _)| flipped.contains(&(start + j)))
        .map(|(_, &v)| v)
        .collect();
    if marked.len() != flipped.len() {
        return Err(Error::NotInDomain {
            domain: what.into(),
            steps: w.len(),
        });
    }
    let (wood, map) = reroot_with_map(&swapped, Reroot::Swap01);
    let marked: BTreeSet<usize> = marked.iter().map(|&v| map[v]).collect();
    let pair = psi(&wood);
    let marks: BTreeSet<usize> = pair
        .lower_bounce_steps()
        .iter()
        .zip(wood.children(0, 0))
        .filter(|(_, v)| marked.contains(v))
        .map(|(s, _)| s + 1)
        .collect();
    unmirror(&pair_to_octant(&pair), &marks)
}

fn ordinal_subset(all: &[usize], subset: &BTreeSet<usize>) -> Vec<usize> {
    all.iter()
        .enumerate()
        .filter(|(_, x)| subset.contains(x))
        .map(|(i, _)| i)
        .collect()
}

/// Hesitating octant excursion to hesitating octant excursion, swapping the
/// number of `W` steps on the x-axis with the number of steps leaving the
/// diagonal. Marked sailing points ride along by peak index.
pub fn hesitating_involution(w: &Walk) -> Result<Walk> {
    let what = "hesitating octant excursion";
    if w.model() != StepModel::HESITATING || !w.start().is_zero() || !w.endpoint().is_zero() {
        return Err(Error::NotInDomain {
            domain: what.into(),
            steps: 0,
        });
    }
    if !stays_in(w, &Domain::Octant)? {
        return Err(Error::NotInDomain {
            domain: what.into(),
            steps: w.len(),
        });
    }
    let (simple, marks) = hesitating_to_marked_simple(w)?;
    let pair = octant_to_pair(&simple)?;
    let peaks: Vec<usize> = pair.upper_peak_steps().iter().map(|i| i + 1).collect();
    let chosen = ordinal_subset(&peaks, &marks);
    let image = bounce_exchange(&pair);
    let new_peaks: Vec<usize> = image.upper_peak_steps().iter().map(|i| i + 1).collect();
    let new_marks: BTreeSet<usize> = chosen.iter().map(|&j| new_peaks[j]).collect();
    marked_simple_to_hesitating(&pair_to_octant(&image), &new_marks)
}

/// Moves marks between the `W` steps on the axis of a hesitating octant
/// excursion and the diagonal-leaving steps of its involution image.
pub fn transfer_axis_marks(w: &Walk, axis_marks: &BTreeSet<usize>) -> Result<(Walk, BTreeSet<usize>)> {
    let chosen = ordinal_subset(&w.w_steps_on_axis(), axis_marks);
    if chosen.len() != axis_marks.len() {
        return Err(Error::InvalidMark("mark is not a W step on the x-axis".into()));
    }
    let image = hesitating_involution(w)?;
    let leaving = image.diagonal_leaving_steps();
    Ok((image.clone(), chosen.iter().map(|&j| leaving[j]).collect()))
}

/// Inverse of [`transfer_axis_marks`].
pub fn transfer_diagonal_marks(w: &Walk, diag_marks: &BTreeSet<usize>) -> Result<(Walk, BTreeSet<usize>)> {
    let chosen = ordinal_subset(&w.diagonal_leaving_steps(), diag_marks);
    if chosen.len() != diag_marks.len() {
        return Err(Error::InvalidMark("mark is not a step leaving the diagonal".into()));
    }
    let image = hesitating_involution(w)?;
    let axis = image.w_steps_on_axis();
    Ok((image.clone(), chosen.iter().map(|&j| axis[j]).collect()))
}

/// Number of Dyck paths of length `2n` with `p` peaks, by enumeration.
pub fn narayana(n: usize, p: usize) -> BigUint {
    narayana_tuple(n, &[p])
}

pub fn narayana2(n: usize, p: usize, q: usize) -> BigUint {
    narayana_tuple(n, &[p, q])
}

/// Non-crossing tuples of Dyck paths (bottom to top) with prescribed peak
/// counts, by enumeration.
pub fn narayana_tuple(n: usize, peaks: &[usize]) -> BigUint {
    let by_peaks: BTreeMap<usize, Vec<Vec<i64>>> = dyck_paths(n).iter().fold(BTreeMap::new(), |mut m, d| {
        m.entry(d.peaks()).or_insert_with(Vec::new).push(d.heights());
        m
    });
    fn rec(level: usize, below: Option<&Vec<i64>>, peaks: &[usize], by: &BTreeMap<usize, Vec<Vec<i64>>>) -> u64 {
        if level == peaks.len() {
            return 1;
        }
        let Some(cands) = by.get(&peaks[level]) else { return 0 };
        cands
            .iter()
            .filter(|h| below.is_none_or(|b| b.iter().zip(h.iter()).all(|(x, y)| x <= y)))
            .map(|h| rec(level + 1, Some(h), peaks, by))
            .sum()
    }
    BigUint::from(rec(0, None, peaks, &by_peaks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::{noncrossing_pairs, pair_stats};
    use crate::walks::{enumerate, EndPredicate};

    #[test]
    fn small_woods() {
        let w = phi(&DyckPair::parse("UD", "UD").unwrap());
        assert_eq!(w.size(), 1);
        w.validate().unwrap();
        assert_eq!(
            w.stats(),
            WoodStats {
                size: 1,
                leaves_t0: 1,
                internal_nodes_t1: 1,
                deg_v0_t0: 1,
                deg_v1_t1: 1,
                deg_v2_t2: 1
            }
        );
        assert_eq!(reroot(&w, Reroot::Swap01), w);
        assert_eq!(reroot(&w, Reroot::Swap02Flip), w);
        let t = phi(&DyckPair::parse("", "").unwrap());
        assert_eq!(t, SchnyderWood::triangle());
        assert_eq!(psi(&t), DyckPair::parse("", "").unwrap());
        assert_eq!(woods(2).len(), 3);
    }

    #[test]
    fn phi_psi_roundtrip_and_table() {
        for n in 0..=5 {
            let mut seen = BTreeSet::new();
            for p in noncrossing_pairs(n) {
                let w = phi(&p);
                w.validate().unwrap_or_else(|e| panic!("{p}: {e}"));
                assert_eq!(psi(&w), p);
                let s = w.stats();
                let ps = pair_stats(&p);
                assert_eq!(s.size, p.half_length());
                assert_eq!(s.leaves_t0, ps.lower_peaks);
                assert_eq!(s.internal_nodes_t1, ps.upper_peaks);
                assert_eq!(s.deg_v0_t0, ps.lower_bounces);
                assert_eq!(s.deg_v1_t1, ps.last_upper_descent);
                assert_eq!(s.deg_v2_t2, ps.reversed_upper_bounces);
                for t in [Reroot::Swap01, Reroot::Swap02Flip] {
                    let r = reroot(&w, t);
                    r.validate().unwrap();
                    assert_eq!(reroot(&r, t), w);
                }
                seen.insert(w);
            }
            assert_eq!(seen.len(), noncrossing_pairs(n).len());
        }
    }

    #[test]
    fn reroot_statistics() {
        for p in noncrossing_pairs(4) {
            let s = pair_stats(&p);
            let q = pair_stats(&narayana_involution(&p));
            assert_eq!(
                (q.lower_bounces, q.last_upper_descent),
                (s.last_upper_descent, s.lower_bounces)
            );
            assert_eq!(q.lower_peaks, 4 + 1 - s.upper_peaks);
            assert_eq!(q.upper_peaks, 4 + 1 - s.lower_peaks);
            let b = bounce_exchange(&p);
            let t = pair_stats(&b);
            assert_eq!(
                (t.upper_peaks, t.lower_bounces, t.upper_bounces),
                (s.upper_peaks, s.upper_bounces, s.lower_bounces)
            );
            assert_eq!(bounce_exchange(&b), p);
        }
    }

    #[test]
    fn row_six_criterion() {
        for p in noncrossing_pairs(4) {
            let w = phi(&p);
            let order = w.t0_preorder();
            let alpha: Vec<usize> = {
                let mut a = Vec::new();
                for s in p.lower().steps() {
                    match s {
                        DyckStep::U => a.push(0),
                        DyckStep::D => *a.last_mut().unwrap() += 1,
                    }
                }
                a
            };
            let beta: Vec<usize> = order.iter().map(|&v| w.children(v, 1).len()).collect();
            for (i, &u) in order.iter().enumerate() {
                let lhs: usize = alpha[..i].iter().sum();
                let rhs: usize = beta[..=i].iter().sum();
                assert_eq!(w.parent(u, 2) == 2, lhs == rhs);
            }
        }
    }

    #[test]
    fn eliz_roundtrip() {
        for len in (0..=8).step_by(2) {
            let quadrant = enumerate(StepModel::SIMPLE_2D, &Domain::Quadrant, len, &EndPredicate::Origin);
            let diagonal = enumerate(StepModel::SIMPLE_2D, &Domain::Octant, len, &EndPredicate::Diagonal);
            assert_eq!(quadrant.len(), diagonal.len());
            let mut images = std::collections::HashSet::new();
            for q in quadrant {
                let d = theorem_eliz(&q).unwrap();
                assert!(stays_in(&d, &Domain::Octant).unwrap());
                let k = d.endpoint().0[0] / 2;
                assert_eq!(mirror(&q).unwrap().1.len() as i64, k);
                assert_eq!(theorem_eliz_inverse(&d).unwrap(), q);
                images.insert(d);
            }
            assert_eq!(images.len(), diagonal.len());
        }
    }

    #[test]
    fn hesitating_involution_swaps() {
        for len in (0..=8).step_by(2) {
            for w in enumerate(StepModel::HESITATING, &Domain::Octant, len, &EndPredicate::Origin) {
                let v = hesitating_involution(&w).unwrap();
                assert_eq!(hesitating_involution(&v).unwrap(), w);
                assert_eq!(v.w_steps_on_axis().len(), w.diagonal_leaving_steps().len());
                assert_eq!(v.diagonal_leaving_steps().len(), w.w_steps_on_axis().len());
            }
        }
    }

    #[test]
    fn narayana_values() {
        assert_eq!(narayana(3, 2), BigUint::from(3u32));
        assert_eq!(narayana_tuple(4, &[2, 3, 2]), BigUint::from(3u32));
        assert_eq!(narayana_tuple(4, &[3, 2, 3]), BigUint::from(2u32));
        for n in 1..=6 {
            for p in 1..=n {
                for q in 1..=n {
                    assert_eq!(narayana2(n, p, q), narayana2(n, n - q + 1, n - p + 1));
                }
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        for p in noncrossing_pairs(3) {
            let w = phi(&p);
            let j = serde_json::to_string(&w).unwrap();
            assert_eq!(serde_json::from_str::<SchnyderWood>(&j).unwrap(), w);
        }
        assert!(serde_json::from_str::<SchnyderWood>(r#"{"size":1,"rotations":[[2,3,1],[0,3,2],[1,3,0],[0,1,2]],"edges":[{"tail":3,"head":0,"color":0},{"tail":3,"head":1,"color":1},{"tail":3,"head":2,"color":2}]}"#).is_err());
    }
}
