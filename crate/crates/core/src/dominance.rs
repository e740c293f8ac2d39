//! Weak dominance, admissibility, the supports relation, iterated
//! admissibility and self-admissible sets.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::game::{Belief1, Game, MixedStrategy, ProductSet};
use crate::lp::{self, Direction, LinearProgram, Relation};
use crate::rational::{self, Rational};

/// A mixed strategy over Q_i that weakly dominates `dominated` on Q_{-i}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceWitness {
    pub player: usize,
    pub dominated: usize,
    pub dominator: MixedStrategy,
    /// Opponent profiles where the dominator does strictly better.
    pub strict_at: Vec<usize>,
}

impl DominanceWitness {
    /// Re-checks the witness against `q` exactly.
    pub fn verify(&self, game: &Game, q: &ProductSet) -> bool {
        let i = self.player;
        let row = game.mixed_row(i, &self.dominator);
        let own_ok = self.dominator.support().iter().all(|&s| q.contains(i, s));
        let opp = q.opp_profiles(game, i);
        let weak = opp.iter().all(|&o| row[o] >= *game.payoff_vs(i, self.dominated, o));
        let strict = !self.strict_at.is_empty()
            && self
                .strict_at
                .iter()
                .all(|o| opp.contains(o) && row[*o] > *game.payoff_vs(i, self.dominated, *o));
        own_ok && weak && strict
    }

    pub fn to_json(&self, game: &Game) -> Value {
        json!({
            "player": game.player_name(self.player),
            "dominated": game.strategy_name(self.player, self.dominated),
            "dominator": game.mixed_to_json(&self.dominator),
            "strict_at": self.strict_at.iter().map(|&o| game.opp_profile_name(self.player, o)).collect::<Vec<_>>(),
        })
    }
}

/// A belief with support exactly `opponents` under which `strategy` is
/// optimal among `comparison`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PearceWitness {
    pub player: usize,
    pub strategy: usize,
    pub belief: Belief1,
    pub opponents: Vec<usize>,
    pub comparison: Vec<usize>,
}

impl PearceWitness {
    pub fn verify(&self, game: &Game) -> bool {
        let i = self.player;
        let mut support = self.belief.support();
        support.sort_unstable();
        let mut opp = self.opponents.clone();
        opp.sort_unstable();
        let mine = rational::dot(game.row(i, self.strategy), &self.belief.weights);
        support == opp
            && self
                .comparison
                .iter()
                .all(|&s| rational::dot(game.row(i, s), &self.belief.weights) <= mine)
    }
}

fn check_strategy(game: &Game, i: usize, s: usize) -> Result<()> {
    if i >= game.num_players() || s >= game.num_strategies(i) {
        return Err(Error::invalid(format!("no strategy {s} for player {i}")));
    }
    Ok(())
}

/// Is `s_i` weakly dominated by a mixture over Q_i on Q_{-i}?
pub fn weakly_dominated(game: &Game, i: usize, s_i: usize, q: &ProductSet) -> Result<Option<DominanceWitness>> {
    check_strategy(game, i, s_i)?;
    if !q.contains(i, s_i) {
        return Err(Error::precondition(format!(
            "{} is not in Q_{}",
            game.strategy_name(i, s_i),
            game.player_name(i)
        )));
    }
    let opp = q.opp_profiles(game, i);
    if opp.is_empty() {
        return Err(Error::precondition("Q_{-i} is empty"));
    }
    dominated_on(game, i, s_i, q.component(i), &opp)
}

fn dominated_on(game: &Game, i: usize, s_i: usize, own: &[usize], opp: &[usize]) -> Result<Option<DominanceWitness>> {
    let k = own.len();
    let p = opp.len();
    let mut objective = vec![Rational::zero(); k + p];
    for x in objective.iter_mut().skip(k) {
        *x = Rational::one();
    }
    let mut lp = LinearProgram::new(Direction::Maximize, objective);
    for v in k..k + p {
        lp.bound(v, Some(Rational::zero()), Some(Rational::one()));
    }
    for (n, &o) in opp.iter().enumerate() {
        let mut row: Vec<Rational> = own.iter().map(|&s| game.payoff_vs(i, s, o).clone()).collect();
        row.resize(k + p, Rational::zero());
        row[k + n] = -Rational::one();
        lp.constrain(row, Relation::Ge, game.payoff_vs(i, s_i, o).clone());
    }
    let mut simplex = vec![Rational::one(); k];
    simplex.resize(k + p, Rational::zero());
    lp.constrain(simplex, Relation::Eq, Rational::one());
    let out = lp::solve(&lp)?;
    let value = out
        .value
        .ok_or_else(|| Error::internal("dominance LP has no optimum"))?;
    if !value.is_positive() {
        return Ok(None);
    }
    let mut weights = vec![Rational::zero(); game.num_strategies(i)];
    for (n, &s) in own.iter().enumerate() {
        weights[s] = out.solution[n].clone();
    }
    let dominator = MixedStrategy { owner: i, weights };
    let row = game.mixed_row(i, &dominator);
    let strict_at: Vec<usize> = opp
        .iter()
        .copied()
        .filter(|&o| row[o] > *game.payoff_vs(i, s_i, o))
        .collect();
    if strict_at.is_empty() {
        return Err(Error::internal("dominance witness is not strict anywhere"));
    }
    Ok(Some(DominanceWitness {
        player: i,
        dominated: s_i,
        dominator,
        strict_at,
    }))
}

pub fn admissible_wrt(game: &Game, i: usize, s_i: usize, q: &ProductSet) -> Result<bool> {
    Ok(weakly_dominated(game, i, s_i, q)?.is_none())
}

/// A belief with full support on `opponents` making `s_i` optimal within
/// `comparison`, chosen by maximizing the smallest atom.
pub fn pearce_witness(
    game: &Game,
    i: usize,
    s_i: usize,
    opponents: &[usize],
    comparison: &[usize],
) -> Result<Option<PearceWitness>> {
    check_strategy(game, i, s_i)?;
    if opponents.is_empty() {
        return Err(Error::precondition("empty opponents set"));
    }
    if !comparison.contains(&s_i) {
        return Err(Error::precondition("strategy is not in its comparison set"));
    }
    let n_opp = game.num_opp_profiles(i);
    if opponents.iter().any(|&o| o >= n_opp) || comparison.iter().any(|&s| s >= game.num_strategies(i)) {
        return Err(Error::invalid("index out of range in witness query"));
    }
    let mut opponents = opponents.to_vec();
    opponents.sort_unstable();
    opponents.dedup();
    let p = opponents.len();
    let mut objective = vec![Rational::zero(); p + 1];
    objective[p] = Rational::one();
    let mut lp = LinearProgram::new(Direction::Maximize, objective);
    for n in 0..p {
        let mut row = vec![Rational::zero(); p + 1];
        row[n] = Rational::one();
        row[p] = -Rational::one();
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    let mut simplex = vec![Rational::one(); p];
    simplex.push(Rational::zero());
    lp.constrain(simplex, Relation::Eq, Rational::one());
    for &s in comparison {
        if s == s_i {
            continue;
        }
        let mut row: Vec<Rational> = opponents
            .iter()
            .map(|&o| game.payoff_vs(i, s_i, o) - game.payoff_vs(i, s, o))
            .collect();
        row.push(Rational::zero());
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    let out = lp::solve(&lp)?;
    match out.value {
        Some(t) if t.is_positive() => {
            let mut weights = vec![Rational::zero(); n_opp];
            for (n, &o) in opponents.iter().enumerate() {
                weights[o] = out.solution[n].clone();
            }
            let w = PearceWitness {
                player: i,
                strategy: s_i,
                belief: Belief1 { owner: i, weights },
                opponents,
                comparison: comparison.to_vec(),
            };
            if !w.verify(game) {
                return Err(Error::internal("pearce witness failed its own check"));
            }
            Ok(Some(w))
        }
        Some(_) | None => Ok(None),
    }
}

/// Does `s_prime` support `s_i`, i.e. is there a payoff-equivalent mixture of
/// `s_i` that puts positive weight on `s_prime`?
pub fn supports(game: &Game, i: usize, s_prime: usize, s_i: usize) -> Result<Option<MixedStrategy>> {
    check_strategy(game, i, s_prime)?;
    check_strategy(game, i, s_i)?;
    let k = game.num_strategies(i);
    let mut objective = vec![Rational::zero(); k];
    objective[s_prime] = Rational::one();
    let mut lp = LinearProgram::new(Direction::Maximize, objective);
    for o in 0..game.num_opp_profiles(i) {
        let row = (0..k).map(|s| game.payoff_vs(i, s, o).clone()).collect();
        lp.constrain(row, Relation::Eq, game.payoff_vs(i, s_i, o).clone());
    }
    lp.constrain(vec![Rational::one(); k], Relation::Eq, Rational::one());
    let out = lp::solve(&lp)?;
    match out.value {
        Some(v) if v.is_positive() => Ok(Some(MixedStrategy {
            owner: i,
            weights: out.solution,
        })),
        _ => Ok(None),
    }
}

/// The rounds S^0 ⊇ S^1 ⊇ ... ⊇ S^M of iterated admissibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IaTrace {
    /// S^0, ..., S^M with S^{M+1} = S^M.
    pub rounds: Vec<ProductSet>,
    /// M, the first round that is never changed again (0 when nothing is
    /// ever eliminated).
    pub fixpoint: usize,
    /// `eliminated[m - 1]` lists the witnesses for S^{m-1} → S^m.
    pub eliminated: Vec<Vec<DominanceWitness>>,
}

impl IaTrace {
    pub fn limit(&self) -> &ProductSet {
        &self.rounds[self.fixpoint]
    }

    /// S^m for any m, constant after the fixpoint.
    pub fn round(&self, m: usize) -> &ProductSet {
        &self.rounds[m.min(self.fixpoint)]
    }

    pub fn to_json(&self, game: &Game) -> Value {
        json!({
            "rounds": self.rounds.iter().map(|q| game.product_to_json(q)).collect::<Vec<_>>(),
            "fixpoint": self.fixpoint,
            "limit": game.product_to_json(self.limit()),
            "eliminated": self.eliminated.iter().map(|round| {
                round.iter().map(|w| w.to_json(game)).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

pub fn iterated_admissibility(game: &Game) -> Result<IaTrace> {
    let mut rounds = vec![ProductSet::full(game)];
    let mut eliminated = Vec::new();
    loop {
        let prev = rounds.last().unwrap().clone();
        let mut sets = Vec::with_capacity(game.num_players());
        let mut gone = Vec::new();
        for i in 0..game.num_players() {
            let mut keep = Vec::new();
            for &s in prev.component(i) {
                match weakly_dominated(game, i, s, &prev)? {
                    None => keep.push(s),
                    Some(w) => gone.push(w),
                }
            }
            if keep.is_empty() {
                return Err(Error::internal("iterated admissibility emptied a strategy set"));
            }
            sets.push(keep);
        }
        let next = ProductSet::new(sets);
        if next == prev {
            let fixpoint = rounds.len() - 1;
            return Ok(IaTrace {
                rounds,
                fixpoint,
                eliminated,
            });
        }
        rounds.push(next);
        eliminated.push(gone);
    }
}

/// Ordinary best replies to a single belief.
pub fn best_replies(game: &Game, i: usize, mu: &Belief1) -> Vec<usize> {
    lex_argmax(game, i, std::slice::from_ref(mu))
}

fn lex_argmax(game: &Game, i: usize, nu_bar: &[Belief1]) -> Vec<usize> {
    let mut cands: Vec<usize> = (0..game.num_strategies(i)).collect();
    for nu in nu_bar {
        let vals: Vec<Rational> = cands
            .iter()
            .map(|&s| rational::dot(game.row(i, s), &nu.weights))
            .collect();
        let best = vals.iter().max().unwrap().clone();
        cands = cands
            .into_iter()
            .zip(vals)
            .filter(|(_, v)| *v == best)
            .map(|(s, _)| s)
            .collect();
        if cands.len() == 1 {
            break;
        }
    }
    cands
}

/// Strategies optimal under the lexicographic order of expected payoffs.
pub fn lexicographic_best_replies(game: &Game, i: usize, nu_bar: &[Belief1]) -> Result<Vec<usize>> {
    if nu_bar.is_empty() {
        return Err(Error::precondition("empty LPS"));
    }
    if nu_bar
        .iter()
        .any(|nu| nu.owner != i || nu.weights.len() != game.num_opp_profiles(i))
    {
        return Err(Error::invalid("LPS level is not a belief of this player"));
    }
    Ok(lex_argmax(game, i, nu_bar))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SasFailure {
    /// Condition (a): not admissible.
    Inadmissible(DominanceWitness),
    /// Condition (b): not admissible with respect to S_i × Q_{-i}.
    InadmissibleAgainstSet(DominanceWitness),
    /// Condition (c): an outside strategy supports a member.
    NotSupportClosed {
        player: usize,
        strategy: usize,
        supporter: usize,
        mixture: MixedStrategy,
    },
}

impl SasFailure {
    pub fn condition(&self) -> &'static str {
        match self {
            SasFailure::Inadmissible(_) => "a",
            SasFailure::InadmissibleAgainstSet(_) => "b",
            SasFailure::NotSupportClosed { .. } => "c",
        }
    }

    pub fn to_json(&self, game: &Game) -> Value {
        match self {
            SasFailure::Inadmissible(w) | SasFailure::InadmissibleAgainstSet(w) => {
                json!({"condition": self.condition(), "witness": w.to_json(game)})
            }
            SasFailure::NotSupportClosed {
                player,
                strategy,
                supporter,
                mixture,
            } => json!({
                "condition": "c",
                "player": game.player_name(*player),
                "strategy": game.strategy_name(*player, *strategy),
                "supporter": game.strategy_name(*player, *supporter),
                "mixture": game.mixed_to_json(mixture),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SasVerdict {
    pub holds: bool,
    pub failures: Vec<SasFailure>,
}

pub fn is_sas(game: &Game, q: &ProductSet) -> Result<SasVerdict> {
    if q.num_players() != game.num_players() {
        return Err(Error::invalid("product set has the wrong number of players"));
    }
    let mut failures = Vec::new();
    if q.is_empty() {
        return Ok(SasVerdict { holds: true, failures });
    }
    let full = ProductSet::full(game);
    for i in 0..game.num_players() {
        let against = q.with_component(i, (0..game.num_strategies(i)).collect());
        for &s in q.component(i) {
            if let Some(w) = weakly_dominated(game, i, s, &full)? {
                failures.push(SasFailure::Inadmissible(w));
            }
            if let Some(w) = weakly_dominated(game, i, s, &against)? {
                failures.push(SasFailure::InadmissibleAgainstSet(w));
            }
            for sp in 0..game.num_strategies(i) {
                if q.contains(i, sp) {
                    continue;
                }
                if let Some(mixture) = supports(game, i, sp, s)? {
                    failures.push(SasFailure::NotSupportClosed {
                        player: i,
                        strategy: s,
                        supporter: sp,
                        mixture,
                    });
                }
            }
        }
    }
    Ok(SasVerdict {
        holds: failures.is_empty(),
        failures,
    })
}

#[derive(Clone, Debug)]
pub struct SasOptions {
    /// Refuse games with more than this many strategies in total.
    pub max_total_strategies: usize,
    pub force: bool,
    pub parallel: bool,
}

impl Default for SasOptions {
    fn default() -> Self {
        SasOptions {
            max_total_strategies: 16,
            force: false,
            parallel: false,
        }
    }
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask >> b & 1 == 1).collect()
}

/// Nonempty submasks of `mask`.
fn submasks(mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut sub = mask;
    while sub != 0 {
        out.push(sub);
        sub = (sub - 1) & mask;
    }
    out.sort_unstable();
    out
}

/// All self-admissible sets, the empty set first, in canonical order.
pub fn enumerate_sas(game: &Game, opts: &SasOptions) -> Result<Vec<ProductSet>> {
    let total = game.total_strategies();
    if total > opts.max_total_strategies && !opts.force {
        return Err(Error::precondition(format!(
            "game has {total} strategies in total, above the cap of {}; pass --force to enumerate anyway",
            opts.max_total_strategies
        )));
    }
    let np = game.num_players();
    if (0..np).any(|i| game.num_strategies(i) > 63) {
        return Err(Error::precondition("more than 63 strategies for one player"));
    }
    let full = ProductSet::full(game);

    // (a) does not depend on Q
    let mut admissible = vec![0u64; np];
    for (i, mask) in admissible.iter_mut().enumerate() {
        for s in 0..game.num_strategies(i) {
            if admissible_wrt(game, i, s, &full)? {
                *mask |= 1 << s;
            }
        }
    }
    // supporters[i][s]: mask of strategies supporting s
    let mut supporters = vec![Vec::new(); np];
    for (i, sup) in supporters.iter_mut().enumerate() {
        for s in 0..game.num_strategies(i) {
            let mut m = 0u64;
            for sp in 0..game.num_strategies(i) {
                if supports(game, i, sp, s)?.is_some() {
                    m |= 1 << sp;
                }
            }
            sup.push(m);
        }
    }

    let choices: Vec<Vec<u64>> = admissible.iter().map(|&m| submasks(m)).collect();

    // (b) per player and opponent factor choice
    let mut jobs = Vec::new();
    for i in 0..np {
        let opp = game.opponents(i);
        let radix: Vec<usize> = opp.iter().map(|&j| choices[j].len()).collect();
        for combo in crate::game::all_profiles(&radix) {
            let key: Vec<u64> = opp.iter().zip(&combo).map(|(&j, &c)| choices[j][c]).collect();
            jobs.push((i, key));
        }
    }
    let eval = |(i, key): &(usize, Vec<u64>)| -> Result<((usize, Vec<u64>), u64)> {
        let i = *i;
        let mut sets: Vec<Vec<usize>> = Vec::with_capacity(np);
        let mut it = key.iter();
        for j in 0..np {
            if j == i {
                sets.push((0..game.num_strategies(i)).collect());
            } else {
                sets.push(mask_to_vec(*it.next().unwrap()));
            }
        }
        let against = ProductSet::new(sets);
        let mut ok = 0u64;
        for s in mask_to_vec(admissible[i]) {
            if weakly_dominated(game, i, s, &against)?.is_none() {
                ok |= 1 << s;
            }
        }
        Ok(((i, key.clone()), ok))
    };
    let table: HashMap<(usize, Vec<u64>), u64> = if opts.parallel {
        jobs.par_iter().map(eval).collect::<Result<_>>()?
    } else {
        jobs.iter().map(eval).collect::<Result<_>>()?
    };

    let radix: Vec<usize> = choices.iter().map(Vec::len).collect();
    let check = |combo: &Vec<usize>| -> Option<ProductSet> {
        let masks: Vec<u64> = combo.iter().enumerate().map(|(i, &c)| choices[i][c]).collect();
        for i in 0..np {
            let key: Vec<u64> = (0..np).filter(|&j| j != i).map(|j| masks[j]).collect();
            let ok = table[&(i, key)];
            if masks[i] & !ok != 0 {
                return None;
            }
            for s in mask_to_vec(masks[i]) {
                if supporters[i][s] & !masks[i] != 0 {
                    return None;
                }
            }
        }
        Some(ProductSet::new(masks.iter().map(|&m| mask_to_vec(m)).collect()))
    };
    let combos = crate::game::all_profiles(&radix);
    let mut found: Vec<ProductSet> = if opts.parallel {
        combos.par_iter().filter_map(check).collect()
    } else {
        combos.iter().filter_map(check).collect()
    };
    found.push(ProductSet::empty(np));
    found.sort();
    Ok(found)
}

/// Collapses an LPS into one belief ν = Σ w_l ν^l, w_l = (1−ε)ε^{l−1} for
/// l < n and ε^{n−1} for the last level, with ε small enough that the best
/// replies to ν are the lexicographic best replies.
pub fn flatten_lps(game: &Game, i: usize, nu_bar: &[Belief1]) -> Result<Belief1> {
    let target = lexicographic_best_replies(game, i, nu_bar)?;
    let n = nu_bar.len();
    if n == 1 {
        return Ok(nu_bar[0].clone());
    }
    let mut big_pi = game.max_abs_payoff();
    if big_pi.is_zero() {
        big_pi = Rational::one();
    }
    let mut gap: Option<Rational> = None;
    for nu in nu_bar {
        let vals: Vec<Rational> = (0..game.num_strategies(i))
            .map(|s| rational::dot(game.row(i, s), &nu.weights))
            .collect();
        for a in &vals {
            for b in &vals {
                let d = (a - b).abs();
                if d.is_positive() && gap.as_ref().is_none_or(|g| d < *g) {
                    gap = Some(d);
                }
            }
        }
    }
    let g = gap.unwrap_or_else(Rational::one);
    let mut eps = &g / (&g + rational::int(2 * n as i64) * &big_pi);
    for _ in 0..1000 {
        let nu = nest(nu_bar, &eps);
        if best_replies(game, i, &nu) == target {
            return Ok(nu);
        }
        eps /= rational::int(2);
    }
    Err(Error::internal("no epsilon found for flattening"))
}

/// Σ_l w_l ν^l with the nested weights.
pub fn nest(nu_bar: &[Belief1], eps: &Rational) -> Belief1 {
    let n = nu_bar.len();
    let mut weights = vec![Rational::zero(); nu_bar[0].weights.len()];
    let mut power = Rational::one();
    for (l, nu) in nu_bar.iter().enumerate() {
        let w = if l + 1 < n {
            &power * (Rational::one() - eps)
        } else {
            power.clone()
        };
        for (acc, x) in weights.iter_mut().zip(&nu.weights) {
            *acc += &w * x;
        }
        power *= eps;
    }
    Belief1 {
        owner: nu_bar[0].owner,
        weights,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    pub(crate) fn example1() -> Game {
        Game::bimatrix(
            &["u", "m", "d"],
            &["l", "r"],
            &[&[(2, 2), (2, 2)], &[(3, 1), (0, 0)], &[(0, 0), (1, 3)]],
        )
        .unwrap()
    }

    pub(crate) fn boss() -> Game {
        Game::bimatrix(
            &["u", "m", "d"],
            &["l", "c", "r"],
            &[
                &[(4, 0), (4, 1), (0, 1)],
                &[(0, 0), (0, 1), (4, 1)],
                &[(3, 0), (2, 1), (2, 1)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn d_is_dominated_by_u() {
        let g = example1();
        let full = ProductSet::full(&g);
        let w = weakly_dominated(&g, 0, 2, &full).unwrap().unwrap();
        assert_eq!(w.dominator, MixedStrategy::pure(&g, 0, 0));
        assert_eq!(w.strict_at, vec![0, 1]);
        assert!(w.verify(&g, &full));
        assert!(admissible_wrt(&g, 0, 0, &full).unwrap());
        assert!(!admissible_wrt(&g, 0, 2, &full).unwrap());
    }

    #[test]
    fn boss_left_dominated_d_not() {
        let g = boss();
        let full = ProductSet::full(&g);
        let w = weakly_dominated(&g, 1, 0, &full).unwrap().unwrap();
        assert!(w.verify(&g, &full));
        assert_eq!(g.mixed_row(1, &w.dominator), vec![int(1), int(1), int(1)]);
        assert!(weakly_dominated(&g, 0, 2, &full).unwrap().is_none());
    }

    #[test]
    fn precondition_errors() {
        let g = example1();
        let q = g.parse_product("a=u;b=l").unwrap();
        assert!(matches!(weakly_dominated(&g, 0, 1, &q), Err(Error::Precondition(_))));
        assert!(pearce_witness(&g, 0, 0, &[], &[0]).is_err());
        assert!(pearce_witness(&g, 0, 0, &[0], &[1]).is_err());
    }

    #[test]
    fn singleton_game_admissible() {
        let g = Game::bimatrix(&["x"], &["y"], &[&[(0, 0)]]).unwrap();
        assert!(admissible_wrt(&g, 0, 0, &ProductSet::full(&g)).unwrap());
        let t = iterated_admissibility(&g).unwrap();
        assert_eq!(t.fixpoint, 0);
        let all = enumerate_sas(&g, &SasOptions::default()).unwrap();
        assert_eq!(all, vec![ProductSet::empty(2), ProductSet::full(&g)]);
    }

    #[test]
    fn boss_pearce_witness_is_half_half() {
        let g = boss();
        let w = pearce_witness(&g, 0, 2, &[1, 2], &[0, 1, 2]).unwrap().unwrap();
        assert_eq!(w.belief.weights, vec![int(0), ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn pearce_none_for_inadmissible() {
        let g = example1();
        assert!(pearce_witness(&g, 0, 2, &[0, 1], &[0, 1, 2]).unwrap().is_none());
    }

    #[test]
    fn forced_dirac_witness() {
        let g = example1();
        let w = pearce_witness(&g, 0, 1, &[0], &[0, 1, 2]).unwrap().unwrap();
        assert_eq!(w.belief, Belief1::dirac(&g, 0, 0));
    }

    #[test]
    fn supports_cases() {
        let g = boss();
        for s in 0..3 {
            assert_eq!(supports(&g, 0, s, s).unwrap().unwrap(), MixedStrategy::pure(&g, 0, s));
        }
        assert!(supports(&g, 0, 0, 2).unwrap().is_none());

        let dup = Game::bimatrix(
            &["x", "y", "z"],
            &["l", "r"],
            &[&[(1, 0), (2, 0)], &[(1, 0), (2, 0)], &[(0, 0), (5, 0)]],
        )
        .unwrap();
        assert_eq!(
            supports(&dup, 0, 1, 0).unwrap().unwrap(),
            MixedStrategy::pure(&dup, 0, 1)
        );
    }

    #[test]
    fn ia_example1_trace() {
        let g = example1();
        let t = iterated_admissibility(&g).unwrap();
        let shown: Vec<String> = t.rounds.iter().map(|q| g.format_product(q)).collect();
        assert_eq!(shown, ["{u,m,d}×{l,r}", "{u,m}×{l,r}", "{u,m}×{l}", "{m}×{l}"]);
        assert_eq!(t.fixpoint, 3);
        for (m, round) in t.eliminated.iter().enumerate() {
            for w in round {
                assert!(w.verify(&g, &t.rounds[m]));
            }
        }
    }

    #[test]
    fn ia_boss() {
        let g = boss();
        let t = iterated_admissibility(&g).unwrap();
        assert_eq!(g.format_product(t.limit()), "{u,m,d}×{c,r}");
        assert_eq!(t.fixpoint, 1);
    }

    #[test]
    fn lex_best_replies_boss() {
        let g = boss();
        let half = Belief1::uniform_on(&g, 0, &[1, 2]);
        assert_eq!(
            lexicographic_best_replies(&g, 0, std::slice::from_ref(&half)).unwrap(),
            vec![0, 1, 2]
        );
        let l = Belief1::dirac(&g, 0, 0);
        assert_eq!(lexicographic_best_replies(&g, 0, &[half, l]).unwrap(), vec![0]);
        assert!(lexicographic_best_replies(&g, 0, &[]).is_err());
    }

    #[test]
    fn sas_examples() {
        let g = example1();
        assert!(is_sas(&g, &g.parse_product("a=m;b=l").unwrap()).unwrap().holds);
        assert!(is_sas(&g, &ProductSet::empty(2)).unwrap().holds);
        let v = is_sas(&g, &g.parse_product("a=d;b=l").unwrap()).unwrap();
        assert!(!v.holds);
        assert!(v.failures.iter().any(|f| f.condition() == "a"));

        let all = enumerate_sas(&g, &SasOptions::default()).unwrap();
        let shown: Vec<String> = all.iter().map(|q| g.format_product(q)).collect();
        assert_eq!(shown, ["∅", "{u}×{l,r}", "{u}×{r}", "{m}×{l}"]);
        let par = enumerate_sas(
            &g,
            &SasOptions {
                parallel: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(all, par);
    }

    #[test]
    fn boss_sas_contains_ia() {
        let g = boss();
        let all = enumerate_sas(&g, &SasOptions::default()).unwrap();
        assert!(all.contains(&g.parse_product("a=u,m,d;b=c,r").unwrap()));
    }

    #[test]
    fn size_guard() {
        let labels: Vec<String> = (0..9).map(|k| format!("s{k}")).collect();
        let g = Game::from_fn(vec!["a".into(), "b".into()], vec![labels.clone(), labels], |p| {
            vec![int(p[0] as i64), int(p[1] as i64)]
        })
        .unwrap();
        assert!(matches!(
            enumerate_sas(&g, &SasOptions::default()),
            Err(Error::Precondition(_))
        ));
        let forced = enumerate_sas(
            &g,
            &SasOptions {
                force: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(forced.len(), 2);
    }

    #[test]
    fn flatten_examples() {
        let g = boss();
        let half = Belief1::uniform_on(&g, 0, &[1, 2]);
        assert_eq!(flatten_lps(&g, 0, std::slice::from_ref(&half)).unwrap(), half);
        let l = Belief1::dirac(&g, 0, 0);
        let nu = flatten_lps(&g, 0, &[half, l]).unwrap();
        assert!(nu.weights[0].is_positive());
        assert_eq!(best_replies(&g, 0, &nu), vec![0]);

        let e = example1();
        let nu = flatten_lps(&e, 0, &[Belief1::dirac(&e, 0, 0), Belief1::dirac(&e, 0, 1)]).unwrap();
        assert_eq!(best_replies(&e, 0, &nu), vec![1]);
    }
}
