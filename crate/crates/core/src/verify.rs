//! Verification suites. Each suite recomputes one family of identities
//! against independent oracles (exhaustive enumeration, dynamic programming
//! or closed formulas) and returns a machine-readable report.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arcdiag::{enumerate_diagrams, insert_open_arcs, DiagramKind, OpenArcWeights, OpenArcs, Role};
use crate::composite::{
    conjecture_table, gouyou, gouyou_inverse, main_baxter, main_baxter_inverse, main_simple, main_simple_inverse,
    vacillating_compose, vacillating_corollary, vacillating_corollary_inverse, vacillating_decompose,
    vacillating_table,
};
use crate::dyck::{dyck_paths, mirror, noncrossing_pairs, pair_stats, TiltedPair, MAX_PAIRING_HALF_LENGTH};
use crate::growth::{
    diagram_to_walk, insertable_positions, weyl_c_axiswalk_to_weyl_d_excursion, weyl_d_endpoint,
    weyl_d_excursion_to_weyl_c_axiswalk,
};
use crate::schnyder::{
    bounce_exchange, hesitating_involution, narayana, narayana2, narayana_involution, narayana_tuple, phi, psi,
    theorem_eliz, theorem_eliz_inverse,
};
use crate::series::{gessel_even, gessel_odd, grabiner_magyar, matching_series, pairs_formula, reflect_first, rho};
use crate::walks::{
    baxter, binomial, catalan, count_dp_from, count_dp_series, enumerate, stats, stays_in, Domain, EndPredicate, Point,
    StepModel, Walk,
};
use crate::young::count_syt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub description: String,
    pub anchor: String,
    pub parameters: Value,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_n: usize,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    GouyouCounts,
    MainSimple,
    Gouyou,
    Baxter,
    Involution,
    BounceSymmetry,
    Table1,
    Eliz,
    Narayana,
    Weyl,
    Gessel,
    Conjecture,
    Vacillating,
    Insertable,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::GouyouCounts,
        Suite::MainSimple,
        Suite::Gouyou,
        Suite::Baxter,
        Suite::Involution,
        Suite::BounceSymmetry,
        Suite::Table1,
        Suite::Eliz,
        Suite::Narayana,
        Suite::Weyl,
        Suite::Gessel,
        Suite::Conjecture,
        Suite::Vacillating,
        Suite::Insertable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GouyouCounts => "gouyou-counts",
            Suite::MainSimple => "mainsimple",
            Suite::Gouyou => "gouyou",
            Suite::Baxter => "baxter",
            Suite::Involution => "involution",
            Suite::BounceSymmetry => "bounce-symmetry",
            Suite::Table1 => "table1",
            Suite::Eliz => "eliz",
            Suite::Narayana => "narayana",
            Suite::Weyl => "weyl",
            Suite::Gessel => "gessel",
            Suite::Conjecture => "conjecture",
            Suite::Vacillating => "vacillating",
            Suite::Insertable => "insertable",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Suite::GouyouCounts => "simple octant axis-walks are counted by products of Catalan numbers",
            Suite::MainSimple => "simple octant axis-walks of even length vs simple quadrant excursions",
            Suite::Gouyou => "octant axis-walks vs pairs of Dyck paths, roundtrip",
            Suite::Baxter => "hesitating octant axis-walks are counted by Baxter numbers",
            Suite::Involution => "hesitating involution exchanges W-steps on the axis and diagonal-leaving steps",
            Suite::BounceSymmetry => "peak-preserving involution exchanging lower and upper bounces",
            Suite::Table1 => "Schnyder wood statistics vs Dyck pair statistics",
            Suite::Eliz => "quadrant excursions vs octant walks ending on the diagonal",
            Suite::Narayana => "Narayana symmetries for single paths and non-crossing pairs",
            Suite::Weyl => "Weyl chamber C axis-walks vs Weyl chamber D excursions",
            Suite::Gessel => "determinant formulas vs tableau and walk counts",
            Suite::Conjecture => "hesitating octant walks ending on the thick diagonal (reported)",
            Suite::Vacillating => "vacillating axis-walks and excursions",
            Suite::Insertable => "insertable positions of open arcs vs axis visits",
        }
    }

    /// Primary bound used when none is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::GouyouCounts => 5,
            Suite::MainSimple => 4,
            Suite::Gouyou => 4,
            Suite::Baxter => 6,
            Suite::Involution => 4,
            Suite::BounceSymmetry => 5,
            Suite::Table1 => 5,
            Suite::Eliz => 4,
            Suite::Narayana => 6,
            Suite::Weyl => 8,
            Suite::Gessel => 10,
            Suite::Conjecture => 30,
            Suite::Vacillating => 4,
            Suite::Insertable => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite {s:?}; expected one of {}", names.join(", "))
        })
    }
}

struct Recorder {
    checks: Vec<Check>,
}

type Outcome = Result<usize, String>;

impl Recorder {
    fn eq<T: fmt::Display + PartialEq>(
        &mut self,
        description: &str,
        anchor: &str,
        parameters: Value,
        expected: T,
        actual: T,
    ) {
        self.checks.push(Check {
            description: description.into(),
            anchor: anchor.into(),
            parameters,
            pass: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    /// Records a property checked over a family of instances: `Ok(count)`
    /// when every instance passed, `Err(first counterexample)` otherwise.
    fn holds(&mut self, description: &str, anchor: &str, parameters: Value, outcome: Outcome) {
        let (actual, pass, expected) = match outcome {
            Ok(n) => (
                format!("holds on {n} instances"),
                true,
                format!("holds on {n} instances"),
            ),
            Err(e) => (e, false, "holds on all instances".into()),
        };
        self.checks.push(Check {
            description: description.into(),
            anchor: anchor.into(),
            parameters,
            expected,
            actual,
            pass,
        });
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn histogram<K: Ord + fmt::Debug>(items: impl IntoIterator<Item = K>) -> String {
    let mut h: BTreeMap<K, usize> = BTreeMap::new();
    for k in items {
        *h.entry(k).or_default() += 1;
    }
    format!("{h:?}")
}

pub fn run_suite(suite: Suite, max_n: Option<usize>) -> VerificationReport {
    let n = max_n.unwrap_or_else(|| suite.default_max_n());
    let mut r = Recorder { checks: Vec::new() };
    match suite {
        Suite::GouyouCounts => gouyou_counts(&mut r, n),
        Suite::MainSimple => main_simple_suite(&mut r, n),
        Suite::Gouyou => gouyou_suite(&mut r, n),
        Suite::Baxter => baxter_suite(&mut r, n),
        Suite::Involution => involution_suite(&mut r, n),
        Suite::BounceSymmetry => bounce_suite(&mut r, n),
        Suite::Table1 => table1_suite(&mut r, n),
        Suite::Eliz => eliz_suite(&mut r, n),
        Suite::Narayana => narayana_suite(&mut r, n),
        Suite::Weyl => weyl_suite(&mut r, n),
        Suite::Gessel => gessel_suite(&mut r, n),
        Suite::Conjecture => conjecture_suite(&mut r, n),
        Suite::Vacillating => vacillating_suite(&mut r, n),
        Suite::Insertable => insertable_suite(&mut r, n),
    }
    let status = if !r.checks.is_empty() && r.checks.iter().all(|c| c.pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    VerificationReport {
        suite: suite.name().into(),
        max_n: n,
        checks: r.checks,
        status,
    }
}

pub fn run_all(max_n: Option<usize>) -> Vec<VerificationReport> {
    Suite::ALL.iter().map(|&s| run_suite(s, max_n)).collect()
}

fn octant_axis_formula(len: usize) -> BigUint {
    let m = len as u64 / 2;
    if len.is_multiple_of(2) {
        catalan(m) * catalan(m + 1)
    } else {
        catalan(m + 1) * catalan(m + 1)
    }
}

fn gouyou_counts(r: &mut Recorder, max_n: usize) {
    for n in 0..=max_n {
        for len in [2 * n, 2 * n + 1] {
            let walks = enumerate(StepModel::SIMPLE_2D, &Domain::Octant, len, &EndPredicate::XAxis);
            r.eq(
                "exhaustive count of simple octant axis-walks",
                "thm-gouyou",
                json!({"length": len}),
                octant_axis_formula(len),
                BigUint::from(walks.len()),
            );
        }
    }
    let dp_len = 2 * max_n.max(20) + 1;
    let series = count_dp_series(
        StepModel::SIMPLE_2D,
        &Domain::Octant,
        &Point::origin(2),
        dp_len,
        &EndPredicate::XAxis,
        dp_len,
    );
    for (len, c) in series.into_iter().enumerate() {
        r.eq(
            "DP count of simple octant axis-walks",
            "thm-gouyou",
            json!({"length": len}),
            octant_axis_formula(len),
            c,
        );
    }
}

fn main_simple_suite(r: &mut Recorder, max_n: usize) {
    let dp = 2 * max_n.max(10);
    let origin = Point::origin(2);
    let axis = count_dp_series(
        StepModel::SIMPLE_2D,
        &Domain::Octant,
        &origin,
        dp,
        &EndPredicate::XAxis,
        dp,
    );
    let exc = count_dp_series(
        StepModel::SIMPLE_2D,
        &Domain::Quadrant,
        &origin,
        dp,
        &EndPredicate::Origin,
        dp,
    );
    for len in (0..=dp).step_by(2) {
        r.eq(
            "DP: octant axis-walks vs quadrant excursions",
            "thm-mainsimple",
            json!({"length": len}),
            exc[len].clone(),
            axis[len].clone(),
        );
    }
    for n in 0..=max_n.min(MAX_PAIRING_HALF_LENGTH) {
        let len = 2 * n;
        let walks = enumerate(StepModel::SIMPLE_2D, &Domain::Octant, len, &EndPredicate::XAxis);
        let targets = enumerate(StepModel::SIMPLE_2D, &Domain::Quadrant, len, &EndPredicate::Origin);
        r.holds(
            "composed bijection roundtrips onto all quadrant excursions",
            "thm-mainsimple",
            json!({"length": len}),
            roundtrip(&walks, &targets, main_simple, main_simple_inverse),
        );
    }
}

/// Checks that `fwd` is length-preserving, inverted by `inv`, and maps
/// `sources` onto `targets`.
fn roundtrip(
    sources: &[Walk],
    targets: &[Walk],
    fwd: impl Fn(&Walk) -> crate::Result<Walk>,
    inv: impl Fn(&Walk) -> crate::Result<Walk>,
) -> Outcome {
    let target_set: HashSet<&Walk> = targets.iter().collect();
    let mut images = HashSet::new();
    for w in sources {
        let img = fwd(w).map_err(|e| format!("{w}: {e}"))?;
        ensure(img.len() == w.len(), || format!("{w} -> {img} changes length"))?;
        ensure(target_set.contains(&img), || {
            format!("{w} -> {img} lands outside the target class")
        })?;
        let back = inv(&img).map_err(|e| format!("{img}: {e}"))?;
        ensure(&back == w, || format!("{w} -> {img} -> {back}"))?;
        images.insert(img);
    }
    ensure(images.len() == targets.len(), || {
        format!("{} images for {} targets", images.len(), targets.len())
    })?;
    Ok(sources.len())
}

fn gouyou_suite(r: &mut Recorder, max_n: usize) {
    for n in 0..=max_n {
        for len in [2 * n, 2 * n + 1] {
            let walks = enumerate(StepModel::SIMPLE_2D, &Domain::Octant, len, &EndPredicate::XAxis);
            let small = if len % 2 == 0 { n } else { n + 1 };
            let pairs: Vec<TiltedPair> = dyck_paths(n + 1)
                .into_iter()
                .flat_map(|a| {
                    dyck_paths(small)
                        .into_iter()
                        .map(move |b| TiltedPair { p1: a.clone(), p2: b })
                })
                .collect();
            let outcome = (|| {
                let pair_set: HashSet<&TiltedPair> = pairs.iter().collect();
                let mut images = HashSet::new();
                for w in &walks {
                    let p = gouyou(w).map_err(|e| format!("{w}: {e}"))?;
                    ensure(pair_set.contains(&p), || {
                        format!("{w} -> {:?} outside the pair class", p)
                    })?;
                    ensure(&gouyou_inverse(&p).map_err(|e| e.to_string())? == w, || {
                        format!("{w} does not roundtrip")
                    })?;
                    images.insert(p);
                }
                for p in &pairs {
                    let w = gouyou_inverse(p).map_err(|e| format!("{}/{}: {e}", p.p1, p.p2))?;
                    ensure(gouyou(&w).map_err(|e| e.to_string())? == *p, || {
                        format!("{}/{} does not roundtrip", p.p1, p.p2)
                    })?;
                }
                ensure(images.len() == pairs.len(), || {
                    format!("{} walks vs {} pairs", images.len(), pairs.len())
                })?;
                Ok(walks.len())
            })();
            r.holds(
                "axis-walks <-> Dyck pairs, both directions",
                "thm-gouyou",
                json!({"length": len}),
                outcome,
            );
        }
    }
}

fn baxter_suite(r: &mut Recorder, max_n: usize) {
    for n in 0..=max_n {
        let walks = enumerate(StepModel::HESITATING, &Domain::Octant, 2 * n, &EndPredicate::XAxis);
        r.eq(
            "exhaustive count of hesitating octant axis-walks",
            "thm-mainbaxter",
            json!({"half_length": n}),
            baxter(n as u64 + 1),
            BigUint::from(walks.len()),
        );
    }
    let dp = 2 * max_n.max(30);
    let series = count_dp_series(
        StepModel::HESITATING,
        &Domain::Octant,
        &Point::origin(2),
        dp,
        &EndPredicate::XAxis,
        dp,
    );
    for n in 0..=dp / 2 {
        r.eq(
            "DP count of hesitating octant axis-walks",
            "thm-mainbaxter",
            json!({"half_length": n}),
            baxter(n as u64 + 1),
            series[2 * n].clone(),
        );
    }
    for n in 0..=max_n.min(4) {
        let walks = enumerate(StepModel::HESITATING, &Domain::Octant, 2 * n, &EndPredicate::XAxis);
        let targets = enumerate(StepModel::HESITATING, &Domain::Quadrant, 2 * n, &EndPredicate::Origin);
        r.holds(
            "composed bijection roundtrips onto all hesitating quadrant excursions",
            "thm-mainbaxter",
            json!({"half_length": n}),
            roundtrip(&walks, &targets, main_baxter, main_baxter_inverse),
        );
    }
}

fn involution_suite(r: &mut Recorder, max_n: usize) {
    for n in 0..=max_n {
        let walks = enumerate(StepModel::HESITATING, &Domain::Octant, 2 * n, &EndPredicate::Origin);
        let params = json!({"half_length": n});
        let mut images = Vec::new();
        let outcome = (|| {
            for w in &walks {
                let img = hesitating_involution(w).map_err(|e| format!("{w}: {e}"))?;
                ensure(
                    img.endpoint().is_zero() && stays_in(&img, &Domain::Octant).unwrap_or(false),
                    || format!("{w} -> {img} is not an octant excursion"),
                )?;
                let back = hesitating_involution(&img).map_err(|e| format!("{img}: {e}"))?;
                ensure(&back == w, || format!("{w} -> {img} -> {back}"))?;
                let (a, b) = (w.w_steps_on_axis().len(), w.diagonal_leaving_steps().len());
                let (c, d) = (img.w_steps_on_axis().len(), img.diagonal_leaving_steps().len());
                ensure((c, d) == (b, a), || format!("{w} {:?} -> {img} {:?}", (a, b), (c, d)))?;
                images.push(img);
            }
            Ok(walks.len())
        })();
        r.holds(
            "involution swapping the two statistics",
            "prop-involution",
            params.clone(),
            outcome,
        );
        r.eq(
            "joint histogram of (W on axis, diagonal-leaving) is exchanged",
            "prop-involution",
            params,
            histogram(
                walks
                    .iter()
                    .map(|w| (w.diagonal_leaving_steps().len(), w.w_steps_on_axis().len())),
            ),
            histogram(
                images
                    .iter()
                    .map(|w| (w.w_steps_on_axis().len(), w.diagonal_leaving_steps().len())),
            ),
        );
    }
}

fn bounce_suite(r: &mut Recorder, max_n: usize) {
    for n in 0..=max_n {
        let pairs = noncrossing_pairs(n);
        let params = json!({"half_length": n});
        let outcome = (|| {
            for p in &pairs {
                let q = bounce_exchange(p);
                ensure(&bounce_exchange(&q) == p, || format!("{p} is not fixed by the square"))?;
                let (s, t) = (pair_stats(p), pair_stats(&q));
                ensure(t.upper_peaks == s.upper_peaks, || {
                    format!("{p} -> {q} changes the peak count")
                })?;
                ensure(
                    (t.lower_bounces, t.upper_bounces) == (s.upper_bounces, s.lower_bounces),
                    || format!("{p} -> {q} does not swap bounces"),
                )?;
            }
            Ok(pairs.len())
        })();
        r.holds(
            "peak-preserving involution swapping bounce counts",
            "thm-schhessym",
            params.clone(),
            outcome,
        );
        let stats: Vec<_> = pairs.iter().map(pair_stats).collect();
        r.eq(
            "joint (peaks, lower bounces, upper bounces) histogram is symmetric",
            "thm-schhessym",
            params,
            histogram(stats.iter().map(|s| (s.upper_peaks, s.upper_bounces, s.lower_bounces))),
            histogram(stats.iter().map(|s| (s.upper_peaks, s.lower_bounces, s.upper_bounces))),
        );
    }
}

fn table1_suite(r: &mut Recorder, max_n: usize) {
    for n in 0..=max_n {
        let pairs = noncrossing_pairs(n);
        let params = json!({"size": n});
        let mut woods = Vec::with_capacity(pairs.len());
        let outcome = (|| {
            for p in &pairs {
                let w = phi(p);
                w.validate().map_err(|e| format!("{p}: {e}"))?;
                ensure(&psi(&w) == p, || format!("{p} does not roundtrip"))?;
                woods.push(w);
            }
            let distinct: HashSet<_> = woods.iter().collect();
            ensure(distinct.len() == pairs.len(), || {
                "distinct pairs give equal woods".into()
            })?;
            Ok(pairs.len())
        })();
        r.holds(
            "valid woods, psi(phi(p)) = p, injective",
            "table1",
            params.clone(),
            outcome,
        );
        type Row = (
            &'static str,
            fn(&crate::schnyder::WoodStats) -> usize,
            fn(&crate::dyck::PairStats, usize) -> usize,
        );
        let rows: [Row; 6] = [
            ("size = half-length", |s| s.size, |_, n| n),
            ("leaves of T0 = lower peaks", |s| s.leaves_t0, |p, _| p.lower_peaks),
            (
                "internal nodes of T1 = upper peaks",
                |s| s.internal_nodes_t1,
                |p, _| p.upper_peaks,
            ),
            (
                "T0-degree of v0 = lower bounces",
                |s| s.deg_v0_t0,
                |p, _| p.lower_bounces,
            ),
            (
                "T1-degree of v1 = last upper descent",
                |s| s.deg_v1_t1,
                |p, _| p.last_upper_descent,
            ),
            (
                "T2-degree of v2 = reversed upper bounces",
                |s| s.deg_v2_t2,
                |p, _| p.reversed_upper_bounces,
            ),
        ];
        for (i, (name, wood_side, pair_side)) in rows.iter().enumerate() {
            let outcome = pairs
                .iter()
                .zip(&woods)
                .map(|(p, w)| {
                    let (a, b) = (wood_side(&w.stats()), pair_side(&pair_stats(p), n));
                    ensure(a == b, || format!("{p}: wood gives {a}, pair gives {b}"))
                })
                .collect::<Result<Vec<()>, String>>()
                .map(|v| v.len());
            r.holds(name, &format!("table1-row{}", i + 1), params.clone(), outcome);
        }
    }
}

fn eliz_suite(r: &mut Recorder, max_n: usize) {
    let dp = 2 * max_n.max(6);
    let origin = Point::origin(2);
    let exc = count_dp_series(
        StepModel::SIMPLE_2D,
        &Domain::Quadrant,
        &origin,
        dp,
        &EndPredicate::Origin,
        dp,
    );
    let diag = count_dp_series(
        StepModel::SIMPLE_2D,
        &Domain::Octant,
        &origin,
        dp,
        &EndPredicate::Diagonal,
        dp,
    );
    for len in (0..=dp).step_by(2) {
        r.eq(
            "DP: quadrant excursions vs octant walks ending on the diagonal",
            "thm-eliz",
            json!({"length": len}),
            exc[len].clone(),
            diag[len].clone(),
        );
    }
    for n in 0..=max_n {
        let len = 2 * n;
        let walks = enumerate(StepModel::SIMPLE_2D, &Domain::Quadrant, len, &EndPredicate::Origin);
        let targets = enumerate(StepModel::SIMPLE_2D, &Domain::Octant, len, &EndPredicate::Diagonal);
        let params = json!({"length": len});
        r.holds(
            "bijection roundtrip",
            "thm-eliz",
            params.clone(),
            roundtrip(&walks, &targets, theorem_eliz, theorem_eliz_inverse),
        );
        let outcome = walks
            .iter()
            .map(|w| {
                let marks = mirror(w).map_err(|e| e.to_string())?.1.len() as i64;
                let end = theorem_eliz(w).map_err(|e| e.to_string())?.endpoint();
                ensure(end.0[0] == 2 * marks, || {
                    format!("{w}: {marks} marks but image ends at {end}")
                })
            })
            .collect::<Result<Vec<()>, String>>()
            .map(|v| v.len());
        r.holds(
            "marked diagonal-leaving steps = final diagonal height",
            "thm-eliz",
            params,
            outcome,
        );
    }
}

fn narayana_closed_form(n: usize, p: usize) -> BigUint {
    binomial(n as u64, p as u64) * binomial(n as u64, p as u64 - 1) / BigUint::from(n)
}

fn narayana_suite(r: &mut Recorder, max_n: usize) {
    for n in 1..=max_n.max(8) {
        let outcome = (1..=n)
            .map(|p| {
                let v = narayana(n, p);
                ensure(v == narayana(n, n - p + 1), || {
                    format!("N({n},{p}) != N({n},{})", n - p + 1)
                })?;
                ensure(v == narayana_closed_form(n, p), || {
                    format!("N({n},{p}) = {v} disagrees with the closed form")
                })
            })
            .collect::<Result<Vec<()>, String>>()
            .map(|v| v.len());
        r.holds(
            "N(n,p) = N(n,n-p+1) and matches C(n,p)C(n,p-1)/n",
            "narayana",
            json!({"n": n}),
            outcome,
        );
    }
    for n in 1..=max_n {
        let outcome = (1..=n)
            .flat_map(|p| (1..=n).map(move |q| (p, q)))
            .map(|(p, q)| {
                let (a, b) = (narayana2(n, p, q), narayana2(n, n - q + 1, n - p + 1));
                ensure(a == b, || {
                    format!("N({n},{p},{q}) = {a} but N({n},{},{}) = {b}", n - q + 1, n - p + 1)
                })
            })
            .collect::<Result<Vec<()>, String>>()
            .map(|v| v.len());
        r.holds("N(n,p,q) = N(n,n-q+1,n-p+1)", "thm-nara2", json!({"n": n}), outcome);
    }
    for n in 1..=max_n.min(5) {
        let pairs = noncrossing_pairs(n);
        let outcome = pairs
            .iter()
            .map(|p| {
                let q = narayana_involution(p);
                let (s, t) = (pair_stats(p), pair_stats(&q));
                ensure(
                    (t.lower_peaks, t.upper_peaks) == (n + 1 - s.upper_peaks, n + 1 - s.lower_peaks),
                    || format!("{p} -> {q} has the wrong peak counts"),
                )?;
                ensure(narayana_involution(&q) == *p, || {
                    format!("{p} is not fixed by the square")
                })
            })
            .collect::<Result<Vec<()>, String>>()
            .map(|v| v.len());
        r.holds(
            "rerooting involution realizes the symmetry",
            "thm-nara2",
            json!({"n": n}),
            outcome,
        );
    }
    r.eq(
        "triple count N(4,2,3,2)",
        "fig7",
        json!({"n": 4, "peaks": [2, 3, 2]}),
        BigUint::from(3u32),
        narayana_tuple(4, &[2, 3, 2]),
    );
    r.eq(
        "triple count N(4,3,2,3)",
        "fig7",
        json!({"n": 4, "peaks": [3, 2, 3]}),
        BigUint::from(2u32),
        narayana_tuple(4, &[3, 2, 3]),
    );
}

fn weyl_suite(r: &mut Recorder, max_n: usize) {
    for k in 1..=3 {
        for n in 0..=max_n {
            let walks = enumerate(StepModel::simple(k), &Domain::WeylC(k), n, &EndPredicate::XAxis);
            let end = weyl_d_endpoint(k, n);
            let target_count = count_dp_from(
                StepModel::simple(k),
                &Domain::WeylD(k),
                &Point::half_ones(k),
                n,
                &EndPredicate::Fixed(end.clone()),
                n,
            );
            let outcome = (|| {
                let mut images = HashSet::new();
                for w in &walks {
                    let d = weyl_c_axiswalk_to_weyl_d_excursion(w, k).map_err(|e| format!("{w}: {e}"))?;
                    ensure(d.start() == &Point::half_ones(k) && d.endpoint() == end, || {
                        format!("{w} -> {d} has wrong ends")
                    })?;
                    ensure(stays_in(&d, &Domain::WeylD(k)).unwrap_or(false), || {
                        format!("{w} -> {d} leaves the chamber")
                    })?;
                    ensure(
                        2 * stats(&d).sign_changes_last_coord as i64 == w.endpoint().0[0],
                        || format!("{w} -> {d}: sign changes differ from the final x1"),
                    )?;
                    let back = weyl_d_excursion_to_weyl_c_axiswalk(&d, k).map_err(|e| format!("{d}: {e}"))?;
                    ensure(&back == w, || format!("{w} -> {d} -> {back}"))?;
                    images.insert(d);
                }
                ensure(BigUint::from(images.len()) == target_count, || {
                    format!("{} images but {target_count} target walks", images.len())
                })?;
                Ok(walks.len())
            })();
            r.holds(
                "bijection with sign-change statistic",
                "thm-wey",
                json!({"k": k, "length": n}),
                outcome,
            );
        }
    }
}

fn longest_increasing(perm: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &x in perm {
        match tails.binary_search(&x) {
            Ok(_) => {}
            Err(i) if i == tails.len() => tails.push(x),
            Err(i) => tails[i] = x,
        }
    }
    tails.len()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn gessel_suite(r: &mut Recorder, max_n: usize) {
    for k in 1..=3 {
        let det = gessel_even(k, max_n);
        for (n, d) in det.into_iter().enumerate() {
            let params = json!({"k": k, "n": n});
            let syt = count_syt(n, 2 * k);
            r.eq(
                "determinant vs tableaux with at most 2k rows",
                "cor-young",
                params.clone(),
                syt.clone(),
                d,
            );
            let walks = count_dp_from(
                StepModel::simple(k),
                &Domain::WeylD(k),
                &Point::half_ones(k),
                n,
                &EndPredicate::Fixed(weyl_d_endpoint(k, n)),
                n,
            );
            r.eq(
                "tableaux vs Weyl chamber D excursions (DP)",
                "cor-young",
                params,
                syt,
                walks,
            );
        }
    }
    let small = max_n.min(8);
    for k in 1..=2 {
        for (n, d) in gessel_odd(k, small).into_iter().enumerate() {
            r.eq(
                "odd determinant vs tableaux with at most 2k+1 rows",
                "gessel-odd",
                json!({"k": k, "n": n}),
                count_syt(n, 2 * k + 1),
                d,
            );
        }
    }
    let lis: Vec<Vec<usize>> = (0..=small)
        .map(|n| permutations(n).iter().map(|p| longest_increasing(p)).collect())
        .collect();
    for d in 1..=5 {
        for (n, u) in pairs_formula(d, small).into_iter().enumerate() {
            let filtered = lis[n].iter().filter(|&&l| l <= d).count();
            r.eq(
                "pairs formula vs permutations with no increasing subsequence longer than d",
                "pairs-formula",
                json!({"d": d, "n": n}),
                BigUint::from(filtered),
                u,
            );
        }
    }
    for k in 1..=2 {
        let counts = grabiner_magyar(&rho(k), &rho(k), small).egf_integers();
        for n in 0..=small {
            let walks = count_dp_from(
                StepModel::simple(k),
                &Domain::StrictWeylD(k),
                &rho(k),
                n,
                &EndPredicate::Fixed(rho(k)),
                n,
            ) + count_dp_from(
                StepModel::simple(k),
                &Domain::StrictWeylD(k),
                &rho(k),
                n,
                &EndPredicate::Fixed(reflect_first(&rho(k))),
                n,
            );
            let got = counts
                .as_ref()
                .map(|c| c[n].to_string())
                .unwrap_or_else(|| "non-integer".into());
            r.eq(
                "Grabiner-Magyar determinant vs strict chamber walks",
                "grabiner-magyar",
                json!({"k": k, "n": n}),
                walks.to_string(),
                got,
            );
        }
    }
    for k in 1..=2 {
        let counts = matching_series(k, small).egf_integers();
        for n in 0..=small {
            let matchings = enumerate_diagrams(DiagramKind::Matching, n, None, false, OpenArcs::Forbidden)
                .into_iter()
                .filter(|d| 2 * d.closed_arcs().len() == n && d.max_nesting() <= k)
                .count();
            let got = counts.as_ref().map(|c| c[n].clone()).unwrap_or_default();
            r.eq(
                "matching determinant vs matchings with no (k+1)-nesting",
                "gessel-odd",
                json!({"k": k, "n": n}),
                BigInt::from(matchings),
                got,
            );
        }
    }
}

fn conjecture_suite(r: &mut Recorder, max_n: usize) {
    for row in conjecture_table(max_n) {
        r.eq(
            &format!("u + v = B(n+1) with u = {}, v = {}", row.u, row.v),
            "conj-thick-diagonal",
            json!({"half_length": row.n}),
            row.baxter,
            row.sum,
        );
    }
}

fn vacillating_suite(r: &mut Recorder, max_n: usize) {
    for row in vacillating_table(max_n.max(10)) {
        let params = json!({"half_length": row.n});
        r.eq(
            "DP: octant axis-walks = 2 x quadrant excursions",
            "cor-vacillating",
            params.clone(),
            &row.quadrant_excursions * 2u32,
            row.octant_axis_walks,
        );
        r.eq(
            "DP: quadrant excursions = sum C(n-1,k) B(k+1)",
            "cor-vacillating",
            params,
            row.binomial_baxter_sum,
            row.quadrant_excursions,
        );
    }
    for n in 1..=max_n {
        let params = json!({"half_length": n});
        let axis = enumerate(StepModel::VACILLATING, &Domain::Octant, 2 * n, &EndPredicate::XAxis);
        let exc = enumerate(StepModel::VACILLATING, &Domain::Quadrant, 2 * n, &EndPredicate::Origin);
        r.eq(
            "exhaustive: octant axis-walks = 2 x quadrant excursions",
            "cor-vacillating",
            params.clone(),
            2 * exc.len(),
            axis.len(),
        );
        let quadrant_axis = enumerate(StepModel::VACILLATING, &Domain::Quadrant, 2 * n, &EndPredicate::XAxis);
        let outcome = axis
            .iter()
            .chain(&quadrant_axis)
            .map(|v| {
                let t = vacillating_decompose(v).map_err(|e| format!("{v}: {e}"))?;
                ensure(t.hesitating.half_length() + t.insertions.len() == n - 1, || {
                    format!("{v}: wrong sizes")
                })?;
                ensure(vacillating_compose(&t).ok().as_ref() == Some(v), || {
                    format!("{v} does not recompose")
                })
            })
            .collect::<Result<Vec<()>, String>>()
            .map(|v| v.len());
        r.holds(
            "(hw, P, laststep) decomposition roundtrip",
            "cor-vacillating",
            params.clone(),
            outcome,
        );
        let outcome = (|| {
            let mut images = HashSet::new();
            for v in &axis {
                let (q, last) = vacillating_corollary(v).map_err(|e| format!("{v}: {e}"))?;
                let back = vacillating_corollary_inverse(&q, last).map_err(|e| format!("{q}: {e}"))?;
                ensure(&back == v, || format!("{v} -> {q} -> {back}"))?;
                images.insert((q, last));
            }
            ensure(images.len() == 2 * exc.len(), || {
                "images do not cover excursion x last step".into()
            })?;
            Ok(axis.len())
        })();
        r.holds(
            "axis-walks <-> (excursion, last step) roundtrip",
            "cor-vacillating",
            params,
            outcome,
        );
    }
}

fn insertable_suite(r: &mut Recorder, max_n: usize) {
    let k = 2;
    for kind in [DiagramKind::Matching, DiagramKind::Partition] {
        let enhanced = kind == DiagramKind::Partition;
        for n in 0..=max_n {
            let diagrams = enumerate_diagrams(kind, n, Some(k), enhanced, OpenArcs::Forbidden);
            let outcome = diagrams
                .iter()
                .map(|d| {
                    let w = diagram_to_walk(d, k).map_err(|e| format!("{d}: {e}"))?;
                    let got = insertable_positions(&w, k).map_err(|e| e.to_string())?;
                    let candidates: Vec<usize> = match kind {
                        DiagramKind::Matching => (0..=n).collect(),
                        DiagramKind::Partition => (1..=n)
                            .filter(|&p| matches!(d.point_roles()[p - 1], Role::Fixed | Role::Closing))
                            .collect(),
                    };
                    let brute: std::collections::BTreeSet<usize> = candidates
                        .into_iter()
                        .filter(|&at| {
                            let mut wt = OpenArcWeights::default();
                            wt.add(at, 1);
                            insert_open_arcs(d, &wt, k).is_ok()
                        })
                        .collect();
                    ensure(got == brute, || {
                        format!("{d}: walk gives {got:?}, insertion gives {brute:?}")
                    })
                })
                .collect::<Result<Vec<()>, String>>()
                .map(|v| v.len());
            let what = match kind {
                DiagramKind::Matching => "matchings: axis visits = positions admitting an open arc",
                DiagramKind::Partition => "partitions: EW and 0W/0S factors on the axis = points admitting an open arc",
            };
            r.holds(what, "prop-cddsy", json!({"size": n, "k": k}), outcome);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        for s in Suite::ALL {
            let n = match s {
                Suite::Conjecture => 6,
                Suite::Weyl | Suite::Gessel => 5,
                _ => 3,
            };
            let report = run_suite(s, Some(n));
            assert!(!report.checks.is_empty());
            assert!(report.passed(), "{s}: {:?}", report.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn lis_oracle() {
        assert_eq!(longest_increasing(&[2, 0, 3, 1, 4]), 3);
        assert_eq!(permutations(4).len(), 24);
    }
}
