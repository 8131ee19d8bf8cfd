//! Open matching and partition diagrams, crossing and nesting detection,
//! and removal/insertion of open arcs.
//!
//! Points are numbered `1..=n`. Gaps between points are numbered `0..=n`,
//! gap `g` lying just after point `g`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramKind {
    Matching,
    Partition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Opening,
    Closing,
    Transition,
    Fixed,
}

/// An arc `(left, right)`; open arcs have `right = None`.
pub type Arc = (usize, Option<usize>);

/// A matching or partition diagram with open arcs.
///
/// For matchings an open arc is a point of its own (a singleton block listed
/// in `open`). For partitions it is a flag on a closing or fixed host point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram")]
pub struct ArcDiagram {
    kind: DiagramKind,
    size: usize,
    blocks: Vec<Vec<usize>>,
    open: Vec<usize>,
}

#[derive(Deserialize)]
struct RawDiagram {
    kind: DiagramKind,
    size: usize,
    blocks: Vec<Vec<usize>>,
    #[serde(default)]
    open: Vec<usize>,
}

impl TryFrom<RawDiagram> for ArcDiagram {
    type Error = Error;

    fn try_from(r: RawDiagram) -> Result<Self> {
        ArcDiagram::new(r.kind, r.size, r.blocks, r.open)
    }
}

impl ArcDiagram {
    /// Validates and normalizes a diagram. Points missing from `blocks` become
    /// singleton blocks.
    pub fn new(kind: DiagramKind, size: usize, blocks: Vec<Vec<usize>>, open: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; size + 1];
        let mut all = Vec::new();
        for b in blocks {
            if b.is_empty() {
                continue;
            }
            if b.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidDiagram(format!("block {b:?} is not increasing")));
            }
            for &p in &b {
                if p == 0 || p > size {
                    return Err(Error::InvalidDiagram(format!("point {p} outside 1..={size}")));
                }
                if seen[p] {
                    return Err(Error::InvalidDiagram(format!("point {p} in two blocks")));
                }
                seen[p] = true;
            }
            all.push(b);
        }
        for (p, s) in seen.iter().enumerate().skip(1) {
            if !s {
                all.push(vec![p]);
            }
        }
        all.sort();
        let mut open = open;
        open.sort_unstable();
        if open.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDiagram("a point carries two open arcs".into()));
        }
        let d = ArcDiagram {
            kind,
            size,
            blocks: all,
            open,
        };
        let roles = d.point_roles();
        for &p in &d.open {
            if p == 0 || p > size {
                return Err(Error::InvalidDiagram(format!("open arc at {p} outside 1..={size}")));
            }
            if !matches!(roles[p - 1], Role::Closing | Role::Fixed) {
                return Err(Error::InvalidDiagram(format!(
                    "open arc on point {p} which is not closing or fixed"
                )));
            }
        }
        if kind == DiagramKind::Matching {
            if d.blocks.iter().any(|b| b.len() > 2) {
                return Err(Error::InvalidDiagram("matching block of size > 2".into()));
            }
            for b in &d.blocks {
                let is_open = d.open.binary_search(&b[b.len() - 1]).is_ok();
                if (b.len() == 1) != is_open {
                    return Err(Error::InvalidDiagram(format!(
                        "matching point {} must be matched or open, not both",
                        b[b.len() - 1]
                    )));
                }
            }
        }
        Ok(d)
    }

    pub fn empty(kind: DiagramKind) -> Self {
        ArcDiagram {
            kind,
            size: 0,
            blocks: Vec::new(),
            open: Vec::new(),
        }
    }

    /// A matching from closed arcs and open points.
    pub fn matching(size: usize, arcs: &[(usize, usize)], open: &[usize]) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = arcs.iter().map(|&(a, b)| vec![a, b]).collect();
        blocks.extend(open.iter().map(|&p| vec![p]));
        ArcDiagram::new(DiagramKind::Matching, size, blocks, open.to_vec())
    }

    pub fn partition(size: usize, blocks: Vec<Vec<usize>>, open: Vec<usize>) -> Result<Self> {
        ArcDiagram::new(DiagramKind::Partition, size, blocks, open)
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn open(&self) -> &[usize] {
        &self.open
    }

    pub fn open_count(&self) -> usize {
        self.open.len()
    }

    pub fn has_open(&self, p: usize) -> bool {
        self.open.binary_search(&p).is_ok()
    }

    /// Closed arcs (consecutive block members) followed by open arcs.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut out: Vec<Arc> = self
            .blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], Some(w[1]))))
            .collect();
        out.sort_unstable();
        out.extend(self.open.iter().map(|&p| (p, None)));
        out
    }

    pub fn closed_arcs(&self) -> Vec<(usize, usize)> {
        self.arcs().into_iter().filter_map(|(a, b)| b.map(|b| (a, b))).collect()
    }

    /// Partner of `p` through a closed arc ending at `p`, if any.
    pub fn left_partner(&self, p: usize) -> Option<usize> {
        self.block_of(p)
            .and_then(|b| b.iter().position(|&x| x == p).filter(|&i| i > 0).map(|i| b[i - 1]))
    }

    /// Partner of `p` through a closed arc starting at `p`, if any.
    pub fn right_partner(&self, p: usize) -> Option<usize> {
        self.block_of(p)
            .and_then(|b| b.iter().position(|&x| x == p).and_then(|i| b.get(i + 1).copied()))
    }

    fn block_of(&self, p: usize) -> Option<&Vec<usize>> {
        self.blocks.iter().find(|b| b.contains(&p))
    }

    /// Roles of points `1..=n`, at index `p - 1`.
    pub fn point_roles(&self) -> Vec<Role> {
        let mut roles = vec![Role::Fixed; self.size];
        for b in &self.blocks {
            if b.len() == 1 {
                continue;
            }
            for (i, &p) in b.iter().enumerate() {
                roles[p - 1] = if i == 0 {
                    Role::Opening
                } else if i == b.len() - 1 {
                    Role::Closing
                } else {
                    Role::Transition
                };
            }
        }
        roles
    }

    /// Arcs with numeric right endpoints. Open arcs end at imaginary points
    /// right of the diagram, placed so that open arcs nest and never cross.
    fn numeric_arcs(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        self.arcs()
            .into_iter()
            .map(|(a, b)| (a, b.unwrap_or(2 * n + 1 - a)))
            .collect()
    }

    /// Largest `k` such that the diagram has a `k`-crossing.
    pub fn max_crossing(&self, enhanced: bool) -> usize {
        let arcs = self.numeric_arcs();
        max_clique(&arcs, |x, y| {
            let ((i1, j1), (i2, j2)) = if x.0 < y.0 { (x, y) } else { (y, x) };
            if enhanced {
                i1 < i2 && i2 <= j1 && j1 < j2
            } else {
                i1 < i2 && i2 < j1 && j1 < j2
            }
        })
    }

    /// Largest `k` such that the diagram has a `k`-nesting.
    pub fn max_nesting(&self) -> usize {
        let arcs = self.numeric_arcs();
        max_clique(&arcs, |x, y| {
            let ((i1, j1), (i2, j2)) = if x.0 < y.0 { (x, y) } else { (y, x) };
            i1 < i2 && j2 < j1
        })
    }

    pub fn has_k_crossing(&self, k: usize, enhanced: bool) -> bool {
        self.max_crossing(enhanced) >= k
    }

    pub fn has_k_nesting(&self, k: usize) -> bool {
        self.max_nesting() >= k
    }

    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        for b in &self.blocks {
            if b.len() == 1 && !self.has_open(b[0]) {
                continue;
            }
            let mut s = b.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("-");
            if self.has_open(b[b.len() - 1]) {
                s.push_str("-)");
            }
            parts.push(s);
        }
        format!("{}:{}", self.size, parts.join(" "))
    }

    /// Parses `"<size>:<chains>"`, e.g. `"5:1-3 2-4 5-)"`.
    pub fn parse(kind: DiagramKind, text: &str) -> Result<Self> {
        let (size, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse("expected <size>:<blocks>".into()))?;
        let size: usize = size
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad size {size:?}")))?;
        let mut blocks = Vec::new();
        let mut open = Vec::new();
        for chain in rest.split_whitespace() {
            let (chain, is_open) = match chain.strip_suffix("-)") {
                Some(c) => (c, true),
                None => (chain, false),
            };
            let block: Vec<usize> = chain
                .split('-')
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad point {t:?}"))))
                .collect::<Result<_>>()?;
            if is_open {
                open.push(*block.last().unwrap());
            }
            blocks.push(block);
        }
        ArcDiagram::new(kind, size, blocks, open)
    }
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn max_clique(arcs: &[(usize, usize)], related: impl Fn((usize, usize), (usize, usize)) -> bool) -> usize {
    fn grow(
        chosen: &mut Vec<usize>,
        from: usize,
        arcs: &[(usize, usize)],
        related: &dyn Fn((usize, usize), (usize, usize)) -> bool,
        best: &mut usize,
    ) {
        *best = (*best).max(chosen.len());
        for i in from..arcs.len() {
            if chosen.iter().all(|&c| related(arcs[c], arcs[i])) {
                chosen.push(i);
                grow(chosen, i + 1, arcs, related, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    grow(&mut Vec::new(), 0, arcs, &related, &mut best);
    best
}

/// Multiplicities of removed open arcs: per gap index for matchings, per
/// host point for partitions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpenArcWeights(pub BTreeMap<usize, usize>);

impl OpenArcWeights {
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn get(&self, at: usize) -> usize {
        self.0.get(&at).copied().unwrap_or(0)
    }

    pub fn add(&mut self, at: usize, w: usize) {
        if w > 0 {
            *self.0.entry(at).or_insert(0) += w;
        }
    }
}

/// Removes the open arcs, recording where they were.
pub fn remove_open_arcs(d: &ArcDiagram) -> (ArcDiagram, OpenArcWeights, usize) {
    let mut weights = OpenArcWeights::default();
    match d.kind {
        DiagramKind::Partition => {
            for &p in &d.open {
                weights.add(p, 1);
            }
            let closed = ArcDiagram {
                open: Vec::new(),
                ..d.clone()
            };
            (closed, weights, d.open.len())
        }
        DiagramKind::Matching => {
            let mut relabel = vec![0; d.size + 1];
            let mut kept = 0;
            for p in 1..=d.size {
                if d.has_open(p) {
                    weights.add(kept, 1);
                } else {
                    kept += 1;
                    relabel[p] = kept;
                }
            }
            let blocks = d
                .blocks
                .iter()
                .filter(|b| b.len() == 2)
                .map(|b| b.iter().map(|&p| relabel[p]).collect())
                .collect();
            let closed = ArcDiagram::new(DiagramKind::Matching, kept, blocks, Vec::new())
                .expect("relabelled closed matching is valid");
            (closed, weights, d.open.len())
        }
    }
}

/// Inverse of [`remove_open_arcs`]. Fails if the result would contain a
/// `(k+1)`-crossing (enhanced for partitions).
pub fn insert_open_arcs(closed: &ArcDiagram, weights: &OpenArcWeights, k: usize) -> Result<ArcDiagram> {
    let enhanced = closed.kind == DiagramKind::Partition;
    let build = |w: &OpenArcWeights| -> Result<ArcDiagram> {
        match closed.kind {
            DiagramKind::Partition => {
                if let Some((&p, _)) = w.0.iter().find(|(_, &m)| m > 1) {
                    return Err(Error::InvalidDiagram(format!(
                        "point {p} can host at most one open arc"
                    )));
                }
                let mut open = closed.open.clone();
                open.extend(w.0.keys().copied());
                ArcDiagram::new(DiagramKind::Partition, closed.size, closed.blocks.clone(), open)
            }
            DiagramKind::Matching => {
                if let Some(&g) = w.0.keys().find(|&&g| g > closed.size) {
                    return Err(Error::InvalidDiagram(format!("gap {g} outside 0..={}", closed.size)));
                }
                let mut relabel = vec![0; closed.size + 1];
                let mut open = Vec::new();
                let mut next = 0;
                for g in 0..=closed.size {
                    if g > 0 {
                        next += 1;
                        relabel[g] = next;
                    }
                    for _ in 0..w.get(g) {
                        next += 1;
                        open.push(next);
                    }
                }
                let mut blocks: Vec<Vec<usize>> = closed
                    .blocks
                    .iter()
                    .map(|b| b.iter().map(|&p| relabel[p]).collect())
                    .collect();
                blocks.extend(open.iter().map(|&p| vec![p]));
                ArcDiagram::new(DiagramKind::Matching, next, blocks, open)
            }
        }
    };
    let d = build(weights)?;
    if d.has_k_crossing(k + 1, enhanced) {
        // Open arcs never cross each other, so a single location is to blame.
        let location = weights
            .0
            .keys()
            .copied()
            .find(|&at| {
                let mut single = OpenArcWeights::default();
                single.add(at, 1);
                build(&single)
                    .map(|s| s.has_k_crossing(k + 1, enhanced))
                    .unwrap_or(true)
            })
            .unwrap_or(0);
        return Err(Error::ForbiddenInsertion {
            location,
            crossing: k + 1,
        });
    }
    Ok(d)
}

/// Whether open arcs may appear in enumerated diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpenArcs {
    Allowed,
    Forbidden,
}

/// All diagrams of a kind and size with no `(max_crossing+1)`-crossing
/// (`None` = unconstrained), in a deterministic order.
pub fn enumerate_diagrams(
    kind: DiagramKind,
    size: usize,
    max_crossing: Option<usize>,
    enhanced: bool,
    open: OpenArcs,
) -> Vec<ArcDiagram> {
    let mut out = Vec::new();
    for blocks in set_partitions(size) {
        if kind == DiagramKind::Matching && blocks.iter().any(|b| b.len() > 2) {
            continue;
        }
        let base = ArcDiagram {
            kind,
            size,
            blocks,
            open: Vec::new(),
        };
        let hosts: Vec<usize> = match kind {
            DiagramKind::Matching => base.blocks.iter().filter(|b| b.len() == 1).map(|b| b[0]).collect(),
            DiagramKind::Partition => base
                .point_roles()
                .iter()
                .enumerate()
                .filter(|(_, r)| matches!(r, Role::Closing | Role::Fixed))
                .map(|(i, _)| i + 1)
                .collect(),
        };
        let subsets: Vec<Vec<usize>> = match (kind, open) {
            (DiagramKind::Matching, OpenArcs::Allowed) => vec![hosts],
            (DiagramKind::Matching, OpenArcs::Forbidden) => {
                if hosts.is_empty() {
                    vec![Vec::new()]
                } else {
                    Vec::new()
                }
            }
            (DiagramKind::Partition, OpenArcs::Forbidden) => vec![Vec::new()],
            (DiagramKind::Partition, OpenArcs::Allowed) => (0u32..1 << hosts.len())
                .map(|mask| {
                    hosts
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &p)| p)
                        .collect()
                })
                .collect(),
        };
        for open in subsets {
            let d = ArcDiagram { open, ..base.clone() };
            if max_crossing.is_none_or(|k| !d.has_k_crossing(k + 1, enhanced)) {
                out.push(d);
            }
        }
    }
    out
}

/// Set partitions of `1..=n` as sorted lists of increasing blocks.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(p: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if p > n {
            let mut b = blocks.clone();
            b.sort();
            out.push(b);
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(p);
            rec(p + 1, n, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![p]);
        rec(p + 1, n, blocks, out);
        blocks.pop();
    }
    rec(1, n, &mut blocks, &mut out);
    out
}
