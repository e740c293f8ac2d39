//! Seeded random instances for the property suites and the CLI.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::epistemic::{product_space, TypeStructure};
use crate::game::Game;
use crate::lps::{Event, LabeledSpace, Lps};
use crate::rational::{self, Rational};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// p/q with q ≤ 6; small integers are drawn more often so that ties occur.
pub fn payoff(rng: &mut SampleRng) -> Rational {
    if rng.gen_bool(0.5) {
        rational::int(rng.gen_range(0..=3))
    } else {
        rational::ratio(rng.gen_range(-6..=12), rng.gen_range(1..=6))
    }
}

/// Two-player game with `lo..=hi` strategies per player, named a1.. and b1...
pub fn game(rng: &mut SampleRng, lo: usize, hi: usize) -> Game {
    let m = rng.gen_range(lo..=hi);
    let n = rng.gen_range(lo..=hi);
    let rows: Vec<String> = (1..=m).map(|k| format!("a{k}")).collect();
    let cols: Vec<String> = (1..=n).map(|k| format!("b{k}")).collect();
    let mut payoffs = Vec::with_capacity(m * n);
    for _ in 0..m * n {
        payoffs.push(vec![payoff(rng), payoff(rng)]);
    }
    Game::new(vec!["a".into(), "b".into()], vec![rows, cols], payoffs).expect("well-formed random game")
}

/// A probability vector on `n` points; sparse with probability `sparsity`
/// per point, never all zero.
pub fn distribution(rng: &mut SampleRng, n: usize, sparsity: f64) -> Vec<Rational> {
    let mut w: Vec<i64> = (0..n)
        .map(|_| {
            if rng.gen_bool(sparsity) {
                0
            } else {
                rng.gen_range(1..=4)
            }
        })
        .collect();
    if w.iter().all(|&x| x == 0) {
        w[rng.gen_range(0..n)] = 1;
    }
    let total: i64 = w.iter().sum();
    w.into_iter().map(|x| rational::ratio(x, total)).collect()
}

/// A labeled space with at most `max_atoms` atoms.
pub fn space(rng: &mut SampleRng, max_atoms: usize) -> Arc<LabeledSpace> {
    let labels = rng.gen_range(1..=4.min(max_atoms));
    let mut names = Vec::new();
    let mut lab = Vec::new();
    for l in 0..labels {
        let room = max_atoms - names.len() - (labels - l - 1);
        let k = rng.gen_range(1..=3.min(room));
        for t in 0..k {
            names.push(format!("s{l}|t{t}"));
            lab.push(l);
        }
    }
    let label_names = (0..labels).map(|l| format!("s{l}")).collect();
    Arc::new(LabeledSpace::new(names, lab, label_names).expect("every label has atoms"))
}

pub fn lps(rng: &mut SampleRng, space: &Arc<LabeledSpace>, max_len: usize) -> Lps {
    let len = rng.gen_range(1..=max_len);
    let sparsity = rng.gen_range(0.2..0.8);
    let levels = (0..len).map(|_| distribution(rng, space.len(), sparsity)).collect();
    Lps::new(space.clone(), levels).expect("random levels are distributions")
}

pub fn event(rng: &mut SampleRng, n: usize) -> Event {
    Event::from_atoms(n, (0..n).filter(|_| rng.gen_bool(0.5)))
}

pub fn nonempty_event(rng: &mut SampleRng, n: usize) -> Event {
    let mut e = event(rng, n);
    if e.is_empty() {
        e.insert(rng.gen_range(0..n));
    }
    e
}

/// A random structure on `game` with up to `max_types` types per player and
/// LPS's of length up to `max_len`.
pub fn structure(rng: &mut SampleRng, game: &Game, max_types: usize, max_len: usize) -> TypeStructure {
    let types: Vec<Vec<String>> = (0..game.num_players())
        .map(|i| {
            let k = rng.gen_range(1..=max_types);
            (1..=k).map(|t| format!("t{}{t}", game.player_name(i))).collect()
        })
        .collect();
    let spaces = TypeStructure::spaces_for(game, &types).expect("non-empty type lists");
    let beliefs = spaces
        .iter()
        .enumerate()
        .map(|(i, sp)| (0..types[i].len()).map(|_| lps(rng, sp, max_len)).collect())
        .collect();
    TypeStructure::new(Arc::new(game.clone()), types, beliefs).expect("beliefs match their spaces")
}

/// A lifting instance: ν̄ on a bare X, type names Y, and a decreasing chain of
/// events on X × Y whose projections ν̄ fully believes.
pub fn lifting_chain(rng: &mut SampleRng) -> (Lps, Vec<String>, Vec<Event>) {
    let nx = rng.gen_range(1..=4);
    let x = Arc::new(LabeledSpace::bare((0..nx).map(|k| format!("x{k}")).collect()).expect("non-empty"));
    let nu = lps(rng, &x, 3);
    let ny = rng.gen_range(1..=3);
    let ys: Vec<String> = (0..ny).map(|k| format!("y{k}")).collect();
    let xy = product_space(&x, &ys).expect("non-empty");

    // the fully believed sets are the prefix unions of supports
    let mut prefixes: Vec<Event> = Vec::new();
    let mut acc = Event::empty(nx);
    for l in 1..=nu.len() {
        acc = acc.union(&nu.support(l));
        if prefixes.last() != Some(&acc) {
            prefixes.push(acc.clone());
        }
    }
    let len = rng.gen_range(1..=3);
    let mut picks: Vec<usize> = (0..len).map(|_| rng.gen_range(0..prefixes.len())).collect();
    picks.sort_unstable_by(|a, b| b.cmp(a));

    let mut events: Vec<Event> = Vec::new();
    for &p in &picks {
        let mut e = Event::empty(xy.len());
        for xi in prefixes[p].iter() {
            let allowed: Vec<usize> = match events.last() {
                None => (0..ny).collect(),
                Some(prev) => (0..ny).filter(|&y| prev.contains(xi * ny + y)).collect(),
            };
            let keep = rng.gen_range(1..=allowed.len());
            for &y in allowed.choose_multiple(rng, keep) {
                e.insert(xi * ny + y);
            }
        }
        events.push(e);
    }
    (nu, ys, events)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn seeded_games_repeat() {
        let a = game(&mut rng(7), 2, 4);
        let b = game(&mut rng(7), 2, 4);
        assert_eq!(a, b);
    }

    #[test]
    fn chains_qualify() {
        let mut r = rng(1);
        for _ in 0..50 {
            let (nu, _ys, events) = lifting_chain(&mut r);
            let ny = events[0].space_len() / nu.space().len();
            for w in events.windows(2) {
                assert!(w[1].is_subset(&w[0]));
            }
            for e in &events {
                assert!(!e.is_empty());
                let proj = Event::from_atoms(nu.space().len(), e.iter().map(|a| a / ny));
                assert!(nu.fully_believes(&proj).unwrap());
            }
        }
    }

    #[test]
    fn distributions_sum_to_one() {
        let mut r = rng(3);
        for n in 1..8 {
            let d = distribution(&mut r, n, 0.7);
            assert_eq!(rational::sum(&d), rational::int(1));
            assert!(d.iter().all(|x| *x >= Rational::zero()));
        }
    }
}
