//! Named bijections: input decoding (JSON or text), forward and inverse
//! maps, and intermediate stages for `--trace`.

use std::collections::BTreeSet;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use walkbij::arcdiag::{ArcDiagram, DiagramKind, OpenArcWeights};
use walkbij::composite::{
    gouyou, gouyou_inverse, main_baxter, main_baxter_inverse, main_simple, main_simple_inverse, vacillating_compose,
    vacillating_decompose, VacillatingTriple,
};
use walkbij::dyck::{
    bridge_from_marked_dyck, marked_dyck_from_bridge, marked_dyck_from_meander, meander_from_marked_dyck, mirror,
    pair_to_tilted, quadrant_excursion_to_pair, tilted_to_pair, unmirror, weighted_excursion_to_tilted, DyckPair,
    DyckPath, TiltedPair,
};
use walkbij::growth::{
    axiswalk_to_weighted_excursion, diagram_to_walk, hesitating_axiswalk_to_marked_excursion,
    marked_excursion_to_hesitating_axiswalk, trace, walk_to_diagram, weighted_excursion_to_axiswalk,
    weyl_c_axiswalk_to_weyl_d_excursion, weyl_d_excursion_to_weyl_c_axiswalk,
};
use walkbij::schnyder::{
    bounce_exchange, hesitating_involution, theorem_eliz, theorem_eliz_inverse, transfer_axis_marks,
    transfer_diagonal_marks,
};
use walkbij::walks::{parse_steps, StepKind, Walk};
use walkbij::young::{rs_involution, syt_to_weyl_c_axiswalk, weyl_c_axiswalk_to_syt, StandardYoungTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Bijection {
    #[value(name = "figure1-meander")]
    Figure1Meander,
    #[value(name = "figure1-bridge")]
    Figure1Bridge,
    #[value(name = "thm-buco")]
    ThmBuco,
    #[value(name = "lem-oscremop")]
    LemOscRemOp,
    #[value(name = "lem-oscend")]
    LemOscEnd,
    #[value(name = "thm-gouyou")]
    ThmGouyou,
    #[value(name = "thm-mainsimple")]
    ThmMainSimple,
    #[value(name = "lem-openhes2")]
    LemOpenHes2,
    #[value(name = "lem-mirror")]
    LemMirror,
    #[value(name = "prop-involution")]
    PropInvolution,
    #[value(name = "thm-mainbaxter")]
    ThmMainBaxter,
    #[value(name = "thm-eliz")]
    ThmEliz,
    #[value(name = "thm-schhessym")]
    ThmSchHesSym,
    #[value(name = "thm-wey")]
    ThmWey,
    #[value(name = "cor-young")]
    CorYoung,
    #[value(name = "vacillating-decomp")]
    VacillatingDecomp,
}

/// Shape of the objects a bijection reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputType {
    Walk { model: StepKind, half_start: bool },
    MarkedPath,
    Path,
    Pair,
    TiltedPair,
    Diagram,
    Tableau,
    WeightedExcursion,
    MarkedWalk { model: StepKind },
    Triple,
}

/// Options that shape how `--text` is read and how some maps run.
#[derive(Debug, Clone, Default)]
pub struct MapOptions {
    pub dim: Option<usize>,
    pub k: Option<usize>,
    pub marks: Vec<usize>,
    pub weights: Vec<(usize, usize)>,
    pub kind: Option<DiagramKind>,
}

#[derive(Debug)]
pub enum MapError {
    /// The input could not be read at all.
    Input(String),
    /// The input was read but lies outside the bijection's domain.
    Domain(String),
}

impl From<walkbij::Error> for MapError {
    fn from(e: walkbij::Error) -> Self {
        match e {
            walkbij::Error::Parse(_) => MapError::Input(e.to_string()),
            _ => MapError::Domain(e.to_string()),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MarkedPath {
    path: DyckPath,
    #[serde(default)]
    marks: BTreeSet<usize>,
}

#[derive(Serialize, Deserialize)]
struct MarkedWalk {
    walk: Walk,
    #[serde(default)]
    marks: BTreeSet<usize>,
}

#[derive(Serialize, Deserialize)]
struct WeightedExcursion {
    excursion: Walk,
    #[serde(default)]
    weights: OpenArcWeights,
}

#[derive(Serialize, Deserialize)]
struct PathOnly {
    path: DyckPath,
}

pub type Stages = Vec<(&'static str, Value)>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn decode<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T, MapError> {
    serde_json::from_value(v).map_err(|e| MapError::Domain(e.to_string()))
}

impl Bijection {
    pub fn input_type(self, inverse: bool) -> InputType {
        use Bijection::*;
        use InputType as I;
        let simple = I::Walk {
            model: StepKind::Simple,
            half_start: false,
        };
        let hesitating = I::Walk {
            model: StepKind::Hesitating,
            half_start: false,
        };
        match (self, inverse) {
            (Figure1Meander | Figure1Bridge, false) => I::MarkedPath,
            (Figure1Meander | Figure1Bridge, true) => I::Path,
            (ThmBuco, false) => I::Diagram,
            (ThmBuco, true) => simple,
            (LemOscRemOp, false) => simple,
            (LemOscRemOp, true) => I::WeightedExcursion,
            (LemOscEnd, false) => I::Walk {
                model: StepKind::Simple,
                half_start: true,
            },
            (LemOscEnd | ThmGouyou, true) => I::TiltedPair,
            (ThmGouyou | ThmMainSimple | ThmEliz, _) => simple,
            (LemOpenHes2, false) => hesitating,
            (LemOpenHes2, true) => I::MarkedWalk {
                model: StepKind::Hesitating,
            },
            (LemMirror, false) => simple,
            (LemMirror, true) => I::MarkedWalk {
                model: StepKind::Simple,
            },
            (PropInvolution | ThmMainBaxter, _) => hesitating,
            (ThmSchHesSym, _) => I::Pair,
            (ThmWey, false) => simple,
            (ThmWey, true) => I::Walk {
                model: StepKind::Simple,
                half_start: true,
            },
            (CorYoung, false) => I::Tableau,
            (CorYoung, true) => I::Walk {
                model: StepKind::Simple,
                half_start: true,
            },
            (VacillatingDecomp, false) => I::Walk {
                model: StepKind::Vacillating,
                half_start: false,
            },
            (VacillatingDecomp, true) => I::Triple,
        }
    }

    /// Builds the JSON input from the text encoding.
    pub fn text_input(self, inverse: bool, text: &str, opts: &MapOptions) -> Result<Value, MapError> {
        let model_name = |m: StepKind| match m {
            StepKind::Simple => "simple",
            StepKind::Hesitating => "hesitating",
            StepKind::Vacillating => "vacillating",
        };
        let input_err = |e: walkbij::Error| MapError::Input(e.to_string());
        let walk_value = |model: StepKind, half_start: bool| -> Result<Value, MapError> {
            parse_steps(text).map_err(input_err)?;
            let dim = opts.dim.or(opts.k).unwrap_or(2);
            let mut v = json!({"model": model_name(model), "dim": dim, "steps": text.trim()});
            if half_start {
                v["start"] = json!(format!("({})", vec!["1/2"; dim].join(",")));
            }
            Ok(v)
        };
        let path = |t: &str| -> Result<String, MapError> {
            DyckPath::parse(t).map_err(input_err)?;
            Ok(t.trim().to_string())
        };
        let split = |sep: char| -> Result<(String, String), MapError> {
            let (a, b) = text
                .split_once(sep)
                .ok_or_else(|| MapError::Input(format!("expected two paths separated by '{sep}'")))?;
            Ok((path(a)?, path(b)?))
        };
        Ok(match self.input_type(inverse) {
            InputType::Walk { model, half_start } => walk_value(model, half_start)?,
            InputType::MarkedWalk { model } => json!({"walk": walk_value(model, false)?, "marks": opts.marks}),
            InputType::MarkedPath => json!({"path": path(text)?, "marks": opts.marks}),
            InputType::Path => json!({"path": path(text)?}),
            InputType::Pair => {
                let (lower, upper) = split('/')?;
                json!({"lower": lower, "upper": upper})
            }
            InputType::TiltedPair => {
                let (p1, p2) = split('/')?;
                json!({"p1": p1, "p2": p2})
            }
            InputType::Diagram => {
                let kind = opts.kind.unwrap_or(DiagramKind::Matching);
                to_value(&ArcDiagram::parse(kind, text).map_err(input_err)?)
            }
            InputType::Tableau => {
                let rows: Result<Vec<Vec<usize>>, MapError> = text
                    .split('/')
                    .map(|row| {
                        row.split_whitespace()
                            .map(|x| {
                                x.parse::<usize>()
                                    .map_err(|_| MapError::Input(format!("bad entry {x:?}")))
                            })
                            .collect()
                    })
                    .collect();
                let rows: Vec<Vec<usize>> = rows?.into_iter().filter(|r| !r.is_empty()).collect();
                json!(rows)
            }
            InputType::WeightedExcursion => {
                let weights: serde_json::Map<String, Value> =
                    opts.weights.iter().map(|(g, w)| (g.to_string(), json!(w))).collect();
                json!({"excursion": walk_value(StepKind::Simple, false)?, "weights": weights})
            }
            InputType::Triple => return Err(MapError::Input("vacillating triples are read as JSON only".into())),
        })
    }

    fn dim_of(opts: &MapOptions, w: &Walk) -> usize {
        opts.k.unwrap_or(w.dim())
    }

    /// Applies the forward or inverse map; the last stage is the result.
    pub fn apply(self, inverse: bool, input: Value, opts: &MapOptions) -> Result<Stages, MapError> {
        use Bijection::*;
        let mut stages: Stages = Vec::new();
        match (self, inverse) {
            (Figure1Meander, false) | (Figure1Bridge, false) => {
                let m: MarkedPath = decode(input)?;
                let out = if self == Figure1Meander {
                    meander_from_marked_dyck(&m.path, &m.marks)?
                } else {
                    bridge_from_marked_dyck(&m.path, &m.marks)?
                };
                stages.push(("path", to_value(&PathOnly { path: out })));
            }
            (Figure1Meander, true) | (Figure1Bridge, true) => {
                let p: PathOnly = decode(input)?;
                let (path, marks) = if self == Figure1Meander {
                    marked_dyck_from_meander(&p.path)?
                } else {
                    marked_dyck_from_bridge(&p.path)?
                };
                stages.push(("marked path", to_value(&MarkedPath { path, marks })));
            }
            (ThmBuco, false) => {
                let d: ArcDiagram = decode(input)?;
                let k = opts.k.unwrap_or(2);
                stages.push(("tableaux", to_value(&trace(&d))));
                stages.push(("walk", to_value(&diagram_to_walk(&d, k)?)));
            }
            (ThmBuco, true) => {
                let w: Walk = decode(input)?;
                let d = walk_to_diagram(&w, Self::dim_of(opts, &w))?;
                stages.push(("tableaux", to_value(&trace(&d))));
                stages.push(("diagram", to_value(&d)));
            }
            (LemOscRemOp, false) => {
                let w: Walk = decode(input)?;
                let (excursion, weights) = axiswalk_to_weighted_excursion(&w, Self::dim_of(opts, &w))?;
                stages.push((
                    "weighted excursion",
                    to_value(&WeightedExcursion { excursion, weights }),
                ));
            }
            (LemOscRemOp, true) => {
                let e: WeightedExcursion = decode(input)?;
                let k = Self::dim_of(opts, &e.excursion);
                stages.push((
                    "walk",
                    to_value(&weighted_excursion_to_axiswalk(&e.excursion, &e.weights, k)?),
                ));
            }
            (LemOscEnd, false) => {
                let w: Walk = decode(input)?;
                stages.push(("pair", to_value(&tilted_to_pair(&w)?)));
            }
            (LemOscEnd, true) => {
                let p: TiltedPair = decode(input)?;
                stages.push(("walk", to_value(&pair_to_tilted(&p)?)));
            }
            (ThmGouyou, false) | (ThmMainSimple, false) => {
                let w: Walk = decode(input)?;
                let (excursion, weights) = axiswalk_to_weighted_excursion(&w, 2)?;
                let tilted = weighted_excursion_to_tilted(&excursion, &weights)?;
                stages.push((
                    "weighted excursion",
                    to_value(&WeightedExcursion { excursion, weights }),
                ));
                stages.push(("tilted walk", to_value(&tilted)));
                let pair = gouyou(&w)?;
                stages.push(("pair", to_value(&pair)));
                if self == ThmMainSimple {
                    stages.push(("walk", to_value(&main_simple(&w)?)));
                }
            }
            (ThmGouyou, true) => {
                let p: TiltedPair = decode(input)?;
                stages.push(("walk", to_value(&gouyou_inverse(&p)?)));
            }
            (ThmMainSimple, true) => {
                let w: Walk = decode(input)?;
                let (p1, p2) = quadrant_excursion_to_pair(&w)?;
                stages.push(("pair", to_value(&TiltedPair { p1, p2 })));
                stages.push(("walk", to_value(&main_simple_inverse(&w)?)));
            }
            (LemOpenHes2, false) => {
                let w: Walk = decode(input)?;
                let (walk, marks) = hesitating_axiswalk_to_marked_excursion(&w)?;
                stages.push(("marked excursion", to_value(&MarkedWalk { walk, marks })));
            }
            (LemOpenHes2, true) => {
                let m: MarkedWalk = decode(input)?;
                stages.push((
                    "walk",
                    to_value(&marked_excursion_to_hesitating_axiswalk(&m.walk, &m.marks)?),
                ));
            }
            (LemMirror, false) => {
                let w: Walk = decode(input)?;
                let (walk, marks) = mirror(&w)?;
                stages.push(("marked octant excursion", to_value(&MarkedWalk { walk, marks })));
            }
            (LemMirror, true) => {
                let m: MarkedWalk = decode(input)?;
                stages.push(("walk", to_value(&unmirror(&m.walk, &m.marks)?)));
            }
            (PropInvolution, _) => {
                let w: Walk = decode(input)?;
                stages.push(("walk", to_value(&hesitating_involution(&w)?)));
            }
            (ThmMainBaxter, false) => {
                let w: Walk = decode(input)?;
                let (exc, marks) = hesitating_axiswalk_to_marked_excursion(&w)?;
                let (image, diag) = transfer_axis_marks(&exc, &marks)?;
                stages.push(("marked excursion", to_value(&MarkedWalk { walk: exc, marks })));
                stages.push((
                    "involution image",
                    to_value(&MarkedWalk {
                        walk: image,
                        marks: diag,
                    }),
                ));
                stages.push(("walk", to_value(&main_baxter(&w)?)));
            }
            (ThmMainBaxter, true) => {
                let w: Walk = decode(input)?;
                let (oct, diag) = mirror(&w)?;
                let (image, marks) = transfer_diagonal_marks(&oct, &diag)?;
                stages.push((
                    "marked octant excursion",
                    to_value(&MarkedWalk { walk: oct, marks: diag }),
                ));
                stages.push(("involution image", to_value(&MarkedWalk { walk: image, marks })));
                stages.push(("walk", to_value(&main_baxter_inverse(&w)?)));
            }
            (ThmEliz, false) => {
                let w: Walk = decode(input)?;
                stages.push(("walk", to_value(&theorem_eliz(&w)?)));
            }
            (ThmEliz, true) => {
                let w: Walk = decode(input)?;
                stages.push(("walk", to_value(&theorem_eliz_inverse(&w)?)));
            }
            (ThmSchHesSym, _) => {
                let p: DyckPair = decode(input)?;
                stages.push(("pair", to_value(&bounce_exchange(&p))));
            }
            (ThmWey, false) => {
                let w: Walk = decode(input)?;
                let k = w.dim();
                stages.push(("walk", to_value(&weyl_c_axiswalk_to_weyl_d_excursion(&w, k)?)));
            }
            (ThmWey, true) => {
                let w: Walk = decode(input)?;
                let k = w.dim();
                stages.push(("walk", to_value(&weyl_d_excursion_to_weyl_c_axiswalk(&w, k)?)));
            }
            (CorYoung, false) => {
                let t: StandardYoungTableau = decode(input)?;
                let k = opts.k.unwrap_or_else(|| t.height().div_ceil(2).max(1));
                let c = syt_to_weyl_c_axiswalk(&t, k)?;
                stages.push(("involution", json!(rs_involution(&t))));
                stages.push(("type C axis-walk", to_value(&c)));
                stages.push(("walk", to_value(&weyl_c_axiswalk_to_weyl_d_excursion(&c, k)?)));
            }
            (CorYoung, true) => {
                let w: Walk = decode(input)?;
                let k = w.dim();
                let c = weyl_d_excursion_to_weyl_c_axiswalk(&w, k)?;
                stages.push(("type C axis-walk", to_value(&c)));
                stages.push(("tableau", to_value(&weyl_c_axiswalk_to_syt(&c, k)?)));
            }
            (VacillatingDecomp, false) => {
                let w: Walk = decode(input)?;
                stages.push(("triple", to_value(&vacillating_decompose(&w)?)));
            }
            (VacillatingDecomp, true) => {
                let t: VacillatingTriple = decode(input)?;
                stages.push(("walk", to_value(&vacillating_compose(&t)?)));
            }
        }
        Ok(stages)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use walkbij::arcdiag::{enumerate_diagrams, OpenArcs};
    use walkbij::dyck::noncrossing_pairs;
    use walkbij::walks::{enumerate, Domain, EndPredicate, StepModel};
    use walkbij::young::enumerate_syt;

    fn run(b: Bijection, inverse: bool, text: &str, opts: &MapOptions) -> Value {
        let input = b.text_input(inverse, text, opts).unwrap();
        b.apply(inverse, input, opts).unwrap().pop().unwrap().1
    }

    #[test]
    fn every_bijection_roundtrips_on_a_sample() {
        let none = MapOptions::default();
        let samples: Vec<(Bijection, &str, MapOptions)> = vec![
            (
                Bijection::Figure1Meander,
                "UD",
                MapOptions {
                    marks: vec![2],
                    ..Default::default()
                },
            ),
            (
                Bijection::Figure1Bridge,
                "UDUD",
                MapOptions {
                    marks: vec![4],
                    ..Default::default()
                },
            ),
            (Bijection::ThmBuco, "4:1-3 2-) 4-)", none.clone()),
            (Bijection::LemOscRemOp, "EENS", none.clone()),
            (Bijection::LemOscEnd, "EW", none.clone()),
            (Bijection::ThmGouyou, "EW", none.clone()),
            (Bijection::ThmMainSimple, "ENSW", none.clone()),
            (Bijection::LemOpenHes2, "E0", none.clone()),
            (Bijection::LemMirror, "NS", none.clone()),
            (Bijection::PropInvolution, "E0N00S0W", none.clone()),
            (Bijection::ThmMainBaxter, "E0N00S", none.clone()),
            (Bijection::ThmEliz, "NESENWSW", none.clone()),
            (Bijection::ThmSchHesSym, "UDUD/UUDD", none.clone()),
            (
                Bijection::ThmWey,
                "+1,+2,-2",
                MapOptions {
                    dim: Some(3),
                    ..Default::default()
                },
            ),
            (Bijection::CorYoung, "1 2/3/4", none.clone()),
            (Bijection::VacillatingDecomp, "0E000E", none.clone()),
        ];
        for (b, text, opts) in samples {
            let input = b.text_input(false, text, &opts).unwrap();
            let out = b
                .apply(false, input.clone(), &opts)
                .unwrap_or_else(|e| panic!("{b:?}: {e:?}"))
                .pop()
                .unwrap()
                .1;
            let back = b
                .apply(true, out.clone(), &opts)
                .unwrap_or_else(|e| panic!("{b:?} inverse: {e:?}"))
                .pop()
                .unwrap()
                .1;
            let again = b.apply(false, back.clone(), &opts).unwrap().pop().unwrap().1;
            assert_eq!(again, out, "{b:?}");
            let normalized = b
                .apply(
                    true,
                    b.apply(false, back.clone(), &opts).unwrap().pop().unwrap().1,
                    &opts,
                )
                .unwrap();
            assert_eq!(normalized.last().unwrap().1, back, "{b:?}");
        }
    }

    #[test]
    fn documented_examples() {
        let none = MapOptions::default();
        let m = run(Bijection::LemMirror, false, "NS", &none);
        assert_eq!(
            m,
            json!({"walk": {"model": "simple", "dim": 2, "steps": "EW"}, "marks": [1]})
        );
        let g = run(Bijection::ThmGouyou, false, "EW", &none);
        assert_eq!(g, json!({"p1": "UUDD", "p2": "UD"}));
        assert!(Bijection::VacillatingDecomp.text_input(true, "x", &none).is_err());
    }

    fn roundtrip_all(b: Bijection, inputs: Vec<Value>, opts: &MapOptions) -> usize {
        let mut images = BTreeSet::new();
        for input in &inputs {
            let out = b
                .apply(false, input.clone(), opts)
                .unwrap_or_else(|e| panic!("{b:?} on {input}: {e:?}"));
            let image = out.last().unwrap().1.clone();
            let back = b
                .apply(true, image.clone(), opts)
                .unwrap_or_else(|e| panic!("{b:?} inverse on {image}: {e:?}"));
            assert_eq!(&back.last().unwrap().1, input, "{b:?}");
            images.insert(image.to_string());
        }
        assert_eq!(images.len(), inputs.len(), "{b:?} is not injective");
        inputs.len()
    }

    fn walks(
        model: StepModel,
        domain: Domain,
        lengths: std::ops::RangeInclusive<usize>,
        end: EndPredicate,
    ) -> Vec<Value> {
        lengths
            .flat_map(|n| enumerate(model, &domain, n, &end))
            .map(|w| to_value(&w))
            .collect()
    }

    #[test]
    fn registry_roundtrips_exhaustively() {
        let none = MapOptions::default();
        let s2 = StepModel::SIMPLE_2D;
        let h2 = StepModel::HESITATING;
        let cases = [
            (
                Bijection::LemOscRemOp,
                walks(s2, Domain::WeylC(2), 0..=6, EndPredicate::XAxis),
            ),
            (
                Bijection::ThmGouyou,
                walks(s2, Domain::Octant, 0..=7, EndPredicate::XAxis),
            ),
            (
                Bijection::ThmMainSimple,
                walks(s2, Domain::Octant, 0..=8, EndPredicate::XAxis),
            ),
            (
                Bijection::LemMirror,
                walks(s2, Domain::Quadrant, 0..=8, EndPredicate::Origin),
            ),
            (
                Bijection::ThmEliz,
                walks(s2, Domain::Quadrant, 0..=8, EndPredicate::Origin),
            ),
            (
                Bijection::LemOpenHes2,
                walks(h2, Domain::WeylC(2), 0..=6, EndPredicate::XAxis),
            ),
            (
                Bijection::PropInvolution,
                walks(h2, Domain::Octant, 0..=8, EndPredicate::Origin),
            ),
            (
                Bijection::ThmMainBaxter,
                walks(h2, Domain::Octant, 0..=8, EndPredicate::XAxis),
            ),
            (
                Bijection::ThmWey,
                walks(StepModel::simple(3), Domain::WeylC(3), 0..=5, EndPredicate::XAxis),
            ),
            (
                Bijection::VacillatingDecomp,
                walks(StepModel::VACILLATING, Domain::Octant, 2..=8, EndPredicate::XAxis),
            ),
            (
                Bijection::ThmSchHesSym,
                (0..=4).flat_map(noncrossing_pairs).map(|p| to_value(&p)).collect(),
            ),
            (
                Bijection::ThmBuco,
                (0..=6)
                    .flat_map(|n| enumerate_diagrams(DiagramKind::Matching, n, Some(2), false, OpenArcs::Allowed))
                    .map(|d| to_value(&d))
                    .collect(),
            ),
        ];
        for (b, inputs) in cases {
            let inputs: Vec<Value> = if matches!(b, Bijection::ThmMainSimple | Bijection::VacillatingDecomp) {
                inputs
                    .into_iter()
                    .filter(|v| v["steps"].as_str().unwrap().len() % 2 == 0)
                    .collect()
            } else {
                inputs
            };
            assert!(roundtrip_all(b, inputs, &none) > 1, "{b:?}");
        }
        for k in 1..=3 {
            let opts = MapOptions {
                k: Some(k),
                ..Default::default()
            };
            let tableaux: Vec<Value> = (0..=6)
                .flat_map(|n| enumerate_syt(n, 2 * k))
                .map(|t| to_value(&t))
                .collect();
            roundtrip_all(Bijection::CorYoung, tableaux, &opts);
        }
    }
}
