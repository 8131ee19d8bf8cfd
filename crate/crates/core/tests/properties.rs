use proptest::prelude::*;

use walkbij::arcdiag::ArcDiagram;
use walkbij::composite::{gouyou, gouyou_inverse};
use walkbij::dyck::{mirror, pair_stats, unmirror, DyckPair, DyckPath, DyckStep, TiltedPair};
use walkbij::growth::{diagram_to_walk, walk_to_diagram};
use walkbij::schnyder::{bounce_exchange, phi, psi, theorem_eliz, theorem_eliz_inverse};
use walkbij::walks::{stays_in, Domain, Step, StepModel, Walk};
use walkbij::young::{rs_insertion, syt_to_weyl_d_excursion, weyl_d_excursion_to_syt};

/// Uniform Dyck path of half-length `n` by the cycle lemma: rotate a word
/// with `n` ups and `n + 1` downs to start just after its first minimum.
fn dyck(n: usize) -> impl Strategy<Value = DyckPath> {
    Just((0..2 * n + 1).map(|i| i < n).collect::<Vec<bool>>())
        .prop_shuffle()
        .prop_map(|word| {
            let mut h = 0i64;
            let (mut low, mut at) = (0i64, 0usize);
            for (i, &up) in word.iter().enumerate() {
                h += if up { 1 } else { -1 };
                if h < low {
                    low = h;
                    at = i + 1;
                }
            }
            let len = word.len();
            let rotated: Vec<bool> = (0..len).map(|i| word[(at + i) % len]).collect();
            DyckPath(
                rotated[..len - 1]
                    .iter()
                    .map(|&u| if u { DyckStep::U } else { DyckStep::D })
                    .collect(),
            )
        })
}

/// `C_{m+1} x C_m` or `C_{m+1} x C_{m+1}`.
fn tilted_pair(max_m: usize) -> impl Strategy<Value = TiltedPair> {
    (0..=max_m, any::<bool>())
        .prop_flat_map(|(m, odd)| (dyck(m + 1), dyck(if odd { m + 1 } else { m })))
        .prop_map(|(p1, p2)| TiltedPair { p1, p2 })
}

fn from_heights(h: &[i64]) -> DyckPath {
    DyckPath(
        h.windows(2)
            .map(|w| if w[1] > w[0] { DyckStep::U } else { DyckStep::D })
            .collect(),
    )
}

fn noncrossing_pair(max_n: usize) -> impl Strategy<Value = DyckPair> {
    (0..=max_n).prop_flat_map(|n| (dyck(n), dyck(n))).prop_map(|(a, b)| {
        let (ha, hb) = (a.heights(), b.heights());
        let lo: Vec<i64> = ha.iter().zip(&hb).map(|(x, y)| *x.min(y)).collect();
        let hi: Vec<i64> = ha.iter().zip(&hb).map(|(x, y)| *x.max(y)).collect();
        DyckPair::new(from_heights(&lo), from_heights(&hi)).expect("pointwise min and max do not cross")
    })
}

/// A quadrant excursion as a shuffle of a horizontal and a vertical Dyck word.
fn quadrant_excursion(max_half: usize) -> impl Strategy<Value = Walk> {
    (0..=max_half, 0..=max_half)
        .prop_flat_map(|(a, b)| (dyck(a), dyck(b), proptest::collection::vec(any::<bool>(), 2 * (a + b))))
        .prop_map(|(x, y, picks)| {
            let (mut xs, mut ys) = (x.0.into_iter(), y.0.into_iter());
            let horizontal = |s: DyckStep| if s == DyckStep::U { Step::E } else { Step::W };
            let vertical = |s: DyckStep| if s == DyckStep::U { Step::N } else { Step::S };
            let mut steps = Vec::new();
            for take_x in picks {
                let next = if take_x {
                    xs.next().map(horizontal)
                } else {
                    ys.next().map(vertical)
                };
                steps.extend(next);
            }
            steps.extend(xs.map(horizontal));
            steps.extend(ys.map(vertical));
            Walk::from_origin(StepModel::SIMPLE_2D, steps).unwrap()
        })
}

fn involution(max_n: usize) -> impl Strategy<Value = Vec<usize>> {
    (0..=max_n)
        .prop_flat_map(|n| (Just(n), Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(), 0..=n / 2))
        .prop_map(|(n, order, pairs)| {
            let mut sigma: Vec<usize> = (1..=n).collect();
            for c in order[..2 * pairs].chunks(2) {
                sigma[c[0] - 1] = c[1];
                sigma[c[1] - 1] = c[0];
            }
            sigma
        })
}

fn matching(max_n: usize) -> impl Strategy<Value = ArcDiagram> {
    involution(max_n)
        .prop_flat_map(|sigma| {
            let n = sigma.len();
            (Just(sigma), proptest::collection::vec(any::<bool>(), n))
        })
        .prop_map(|(sigma, open_flags)| {
            let arcs: Vec<(usize, usize)> = (1..=sigma.len())
                .filter(|&i| sigma[i - 1] > i)
                .map(|i| (i, sigma[i - 1]))
                .collect();
            let open: Vec<usize> = (1..=sigma.len())
                .filter(|&i| sigma[i - 1] == i && open_flags[i - 1])
                .collect();
            let size = arcs.len() * 2 + open.len();
            let keep: Vec<usize> = (1..=sigma.len())
                .filter(|&i| sigma[i - 1] != i || open_flags[i - 1])
                .collect();
            let rank = |p: usize| keep.iter().position(|&q| q == p).unwrap() + 1;
            let arcs: Vec<(usize, usize)> = arcs.iter().map(|&(a, b)| (rank(a), rank(b))).collect();
            let open: Vec<usize> = open.iter().map(|&p| rank(p)).collect();
            ArcDiagram::matching(size, &arcs, &open).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn gouyou_roundtrip_beyond_exhaustive_range(pair in tilted_pair(8)) {
        let w = gouyou_inverse(&pair).unwrap();
        prop_assert_eq!(w.len(), pair.walk_length());
        prop_assert!(stays_in(&w, &Domain::Octant).unwrap());
        prop_assert_eq!(gouyou(&w).unwrap(), pair);
    }

    #[test]
    fn pairs_and_woods(p in noncrossing_pair(12)) {
        let w = phi(&p);
        prop_assert!(w.validate().is_ok());
        prop_assert_eq!(psi(&w), p);
    }

    #[test]
    fn bounce_exchange_properties(p in noncrossing_pair(12)) {
        let q = bounce_exchange(&p);
        let (s, t) = (pair_stats(&p), pair_stats(&q));
        prop_assert_eq!(s.upper_peaks, t.upper_peaks);
        prop_assert_eq!(s.lower_bounces, t.upper_bounces);
        prop_assert_eq!(s.upper_bounces, t.lower_bounces);
        prop_assert_eq!(bounce_exchange(&q), p);
    }

    #[test]
    fn mirror_and_eliz(w in quadrant_excursion(6)) {
        let (folded, marks) = mirror(&w).unwrap();
        prop_assert!(stays_in(&folded, &Domain::Octant).unwrap());
        prop_assert_eq!(unmirror(&folded, &marks).unwrap(), w.clone());
        let e = theorem_eliz(&w).unwrap();
        let end = e.endpoint();
        prop_assert_eq!(end.0[0], end.0[1]);
        prop_assert_eq!(theorem_eliz_inverse(&e).unwrap(), w);
    }

    #[test]
    fn tableaux_and_type_d_walks(sigma in involution(12), k in 1usize..4) {
        let (t, q) = rs_insertion(&sigma);
        prop_assert_eq!(&t, &q);
        prop_assume!(t.height() <= 2 * k);
        let w = syt_to_weyl_d_excursion(&t, k).unwrap();
        prop_assert_eq!(w.len(), t.size());
        prop_assert!(stays_in(&w, &Domain::WeylD(k)).unwrap());
        prop_assert_eq!(weyl_d_excursion_to_syt(&w, k).unwrap(), t);
    }

    #[test]
    fn diagrams_and_walks(d in matching(12), k in 1usize..4) {
        if let Ok(w) = diagram_to_walk(&d, k) {
            prop_assert_eq!(w.len(), d.size());
            prop_assert!(stays_in(&w, &Domain::WeylC(k)).unwrap());
            prop_assert_eq!(walk_to_diagram(&w, k).unwrap(), d);
        }
    }
}
