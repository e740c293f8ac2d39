#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use admissible::dominance::{self, SasOptions};
use admissible::game::{Game, ProductSet};
use admissible::lp::{self, Direction, LinearProgram, LpStatus, Relation};
use admissible::lps::{self, EpsPoly, Event};
use admissible::rational::{self, Rational};
use admissible::sample;

// ---- linear programs against brute-force vertex search ----

/// Rows a·x = b (constraints and active bounds), all candidate vertices.
fn brute_vertices(lp: &LinearProgram) -> Vec<Vec<Rational>> {
    let n = lp.num_vars();
    let mut rows: Vec<(Vec<Rational>, Rational)> = lp
        .constraints
        .iter()
        .map(|c| (c.coeffs.clone(), c.rhs.clone()))
        .collect();
    for (v, b) in lp.bounds.iter().enumerate() {
        let mut unit = vec![Rational::zero(); n];
        unit[v] = Rational::one();
        for x in [&b.lower, &b.upper].into_iter().flatten() {
            rows.push((unit.clone(), x.clone()));
        }
    }
    let mut out = BTreeSet::new();
    let m = rows.len();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let picked: Vec<&(Vec<Rational>, Rational)> = (0..m).filter(|k| mask >> k & 1 == 1).map(|k| &rows[k]).collect();
        if let Some(x) = gauss(
            picked.iter().map(|r| r.0.clone()).collect(),
            picked.iter().map(|r| r.1.clone()).collect(),
        ) {
            if lp.satisfies(&x) {
                out.insert(x);
            }
        }
    }
    out.into_iter().collect()
}

/// Unique solution of a square system, if any.
fn gauss(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        b.swap(col, p);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                for c in 0..n {
                    let d = &f * &a[col][c];
                    a[r][c] -= d;
                }
                let d = &f * &b[col];
                b[r] -= d;
            }
        }
    }
    Some((0..n).map(|k| &b[k] / &a[k][k]).collect())
}

fn small_lp() -> impl Strategy<Value = LinearProgram> {
    (1usize..=3, 0usize..=3).prop_flat_map(|(n, m)| {
        (
            prop::collection::vec(-3i64..=3, n),
            prop::collection::vec((prop::collection::vec(-3i64..=3, n), 0u8..3, -2i64..=6), m),
            prop::collection::vec(1i64..=4, n),
            any::<bool>(),
        )
            .prop_map(|(obj, cons, ub, max)| {
                let dir = if max { Direction::Maximize } else { Direction::Minimize };
                let mut lp = LinearProgram::new(dir, obj.into_iter().map(rational::int).collect());
                for (row, rel, rhs) in cons {
                    let rel = [Relation::Le, Relation::Ge, Relation::Eq][rel as usize];
                    lp.constrain(row.into_iter().map(rational::int).collect(), rel, rational::int(rhs));
                }
                for (v, u) in ub.into_iter().enumerate() {
                    lp.bound(v, Some(Rational::zero()), Some(rational::int(u)));
                }
                lp
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn simplex_matches_vertex_search(lp in small_lp()) {
        let verts = brute_vertices(&lp);
        let out = lp::solve(&lp).unwrap();
        if verts.is_empty() {
            prop_assert_eq!(out.status, LpStatus::Infeasible);
        } else {
            prop_assert_eq!(out.status, LpStatus::Optimal);
            let vals = verts.iter().map(|x| lp.objective_value(x));
            let best = match lp.direction {
                Direction::Maximize => vals.max().unwrap(),
                Direction::Minimize => vals.min().unwrap(),
            };
            prop_assert_eq!(out.value.clone(), Some(best.clone()));
            prop_assert!(lp.satisfies(&out.solution));
            prop_assert_eq!(lp.objective_value(&out.solution), best);
        }
    }

    #[test]
    fn vertex_enumeration_matches_brute_force(lp in small_lp()) {
        prop_assert_eq!(lp::enumerate_vertices(&lp).unwrap(), brute_vertices(&lp));
    }
}

// ---- dominance against a one-parameter oracle ----

/// Is strategy `s` of player 0 weakly dominated on the full game? Mixtures
/// over the (at most two) other strategies form a segment p ↦ p·x + (1−p)·y,
/// so the dominating p's form an interval and strictness can be read off its
/// endpoints.
fn dominated_oracle(game: &Game, s: usize) -> bool {
    let others: Vec<usize> = (0..game.num_strategies(0)).filter(|&t| t != s).collect();
    let opp = game.num_opp_profiles(0);
    let row = |t: usize| game.row(0, t).to_vec();
    let c = row(s);
    let (x, y) = match others.len() {
        0 => return false,
        1 => (row(others[0]), row(others[0])),
        2 => (row(others[0]), row(others[1])),
        _ => panic!("oracle handles three strategies"),
    };
    let (mut lo, mut hi) = (Rational::zero(), Rational::one());
    for o in 0..opp {
        // p·(x−y) ≥ c − y
        let a = &x[o] - &y[o];
        let b = &c[o] - &y[o];
        if a.is_zero() {
            if b.is_positive() {
                return false;
            }
        } else if a.is_positive() {
            lo = lo.max(&b / &a);
        } else {
            hi = hi.min(&b / &a);
        }
    }
    if lo > hi {
        return false;
    }
    [lo, hi]
        .iter()
        .any(|p| (0..opp).any(|o| p * &x[o] + (Rational::one() - p) * &y[o] > c[o]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dominance_matches_segment_oracle(seed in any::<u64>()) {
        let g = sample::game(&mut sample::rng(seed), 1, 3);
        let full = ProductSet::full(&g);
        for s in 0..g.num_strategies(0) {
            let w = dominance::weakly_dominated(&g, 0, s, &full).unwrap();
            prop_assert_eq!(w.is_some(), dominated_oracle(&g, s));
            if let Some(w) = w {
                prop_assert!(w.verify(&g, &full));
            }
        }
    }

    #[test]
    fn admissibility_rounds_shrink_to_an_sas(seed in any::<u64>()) {
        let g = sample::game(&mut sample::rng(seed), 1, 4);
        let t = dominance::iterated_admissibility(&g).unwrap();
        for w in t.rounds.windows(2) {
            prop_assert!(w[1].is_subset(&w[0]) && w[1] != w[0]);
        }
        prop_assert!(!t.limit().is_empty());
        for (m, round) in t.eliminated.iter().enumerate() {
            for w in round {
                prop_assert!(w.verify(&g, &t.rounds[m]));
            }
        }
        prop_assert!(dominance::is_sas(&g, t.limit()).unwrap().holds);
    }

    #[test]
    fn sas_enumeration_matches_exhaustive_check(seed in any::<u64>()) {
        let g = sample::game(&mut sample::rng(seed), 1, 3);
        let listed = dominance::enumerate_sas(&g, &SasOptions::default()).unwrap();
        let mut brute = vec![ProductSet::empty(2)];
        for a in 1u32..(1 << g.num_strategies(0)) {
            for b in 1u32..(1 << g.num_strategies(1)) {
                let bits = |m: u32, n: usize| (0..n).filter(|k| m >> k & 1 == 1).collect::<Vec<_>>();
                let q = ProductSet::new(vec![bits(a, g.num_strategies(0)), bits(b, g.num_strategies(1))]);
                if dominance::is_sas(&g, &q).unwrap().holds {
                    brute.push(q);
                }
            }
        }
        brute.sort();
        prop_assert_eq!(listed, brute);
    }

    #[test]
    fn flattened_lps_keeps_best_replies(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let g = sample::game(&mut rng, 1, 4);
        let n = g.num_opp_profiles(0);
        let len = 1 + (seed % 3) as usize;
        let nu: Vec<_> = (0..len)
            .map(|_| admissible::game::Belief1::new(&g, 0, sample::distribution(&mut rng, n, 0.5)).unwrap())
            .collect();
        let flat = dominance::flatten_lps(&g, 0, &nu).unwrap();
        prop_assert_eq!(dominance::best_replies(&g, 0, &flat), dominance::lexicographic_best_replies(&g, 0, &nu).unwrap());
    }
}

// ---- infinitesimal arithmetic ----

fn poly() -> impl Strategy<Value = EpsPoly> {
    prop::collection::vec((0u32..4, -4i64..=4, 1i64..=3), 0..4).prop_map(|terms| {
        let parts: Vec<EpsPoly> = terms
            .into_iter()
            .map(|(e, p, q)| EpsPoly::monomial(e, rational::ratio(p, q)))
            .collect();
        EpsPoly::sum(&parts)
    })
}

/// Positive: a positive leading term plus higher-order noise.
fn positive_poly() -> impl Strategy<Value = EpsPoly> {
    (0u32..4, 1i64..=4, poly()).prop_map(|(e, c, tail)| {
        let shifted = tail.mul(&EpsPoly::monomial(e + 1, Rational::one()));
        EpsPoly::monomial(e, rational::int(c)).add(&shifted)
    })
}

proptest! {
    #[test]
    fn eps_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a < b, b.sub(&a).is_positive());
    }

    #[test]
    fn infinitely_greater_is_an_order_gap(x in positive_poly(), y in positive_poly()) {
        let big = lps::infinitely_greater(&x, &y).unwrap();
        prop_assert_eq!(big, x.leading().unwrap().0 < y.leading().unwrap().0);
        if big {
            for n in [1i64, 10, 1000, 1_000_000] {
                prop_assert!(x > y.scale(&rational::int(n)));
            }
        }
        match lps::standard_part(&y, &x) {
            Ok(st) => prop_assert_eq!(st.is_zero(), big),
            Err(_) => prop_assert!(y.leading().unwrap().0 < x.leading().unwrap().0),
        }
    }

    #[test]
    fn nonstandard_weights_sum_to_one(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let space = sample::space(&mut rng, 12);
        let mu = sample::lps(&mut rng, &space, 4);
        let nu = mu.to_nonstandard();
        prop_assert_eq!(EpsPoly::sum(&nu), EpsPoly::constant(Rational::one()));
        prop_assert!(nu.iter().all(|v| v.is_zero() || v.is_positive()));
    }
}

// ---- events ----

fn event(n: usize) -> impl Strategy<Value = Event> {
    prop::collection::vec(any::<bool>(), n).prop_map(Event::from_mask)
}

proptest! {
    #[test]
    fn event_algebra((a, b) in (1usize..12).prop_flat_map(|n| (event(n), event(n)))) {
        prop_assert_eq!(a.union(&b).complement(), a.complement().intersection(&b.complement()));
        prop_assert_eq!(a.difference(&b), a.intersection(&b.complement()));
        prop_assert_eq!(a.is_subset(&b), a.union(&b) == b);
        prop_assert_eq!(a.is_disjoint(&b), a.intersection(&b).is_empty());
        prop_assert_eq!(a.len() + b.len(), a.union(&b).len() + a.intersection(&b).len());
    }
}
