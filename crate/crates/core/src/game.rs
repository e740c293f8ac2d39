//! Finite normal-form games, mixed strategies, beliefs and product sets.
//!
//! Players, strategies and profiles are addressed by index in document order.
//! Opponent profiles of player `i` are indexed mixed-radix over the other
//! players in order, the earliest player being most significant.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug)]
pub struct Game {
    players: Vec<String>,
    strategies: Vec<Vec<String>>,
    /// payoffs[profile][player]
    payoffs: Vec<Vec<Rational>>,
    /// matrices[i][s_i][opponent profile]
    matrices: Vec<Vec<Vec<Rational>>>,
}

impl PartialEq for Game {
    fn eq(&self, other: &Self) -> bool {
        self.players == other.players && self.strategies == other.strategies && self.payoffs == other.payoffs
    }
}

impl Eq for Game {}

impl Game {
    /// Builds a game from a payoff table indexed by flat profile index.
    pub fn new(players: Vec<String>, strategies: Vec<Vec<String>>, payoffs: Vec<Vec<Rational>>) -> Result<Self> {
        if players.len() < 2 {
            return Err(Error::invalid("a game needs at least two players"));
        }
        if strategies.len() != players.len() {
            return Err(Error::invalid("one strategy list per player required"));
        }
        check_labels("player", &players)?;
        for (p, s) in players.iter().zip(&strategies) {
            if s.is_empty() {
                return Err(Error::invalid(format!("player {p} has no strategies")));
            }
            check_labels(&format!("strategy of {p}"), s)?;
        }
        let n: usize = strategies.iter().map(Vec::len).product();
        if payoffs.len() != n {
            return Err(Error::invalid(format!(
                "payoff table has {} profiles, expected {n}",
                payoffs.len()
            )));
        }
        if payoffs.iter().any(|row| row.len() != players.len()) {
            return Err(Error::invalid("ragged payoff table"));
        }
        let mut g = Game {
            players,
            strategies,
            payoffs,
            matrices: Vec::new(),
        };
        g.matrices = (0..g.num_players())
            .map(|i| {
                (0..g.num_strategies(i))
                    .map(|s| {
                        (0..g.num_opp_profiles(i))
                            .map(|o| g.payoffs[g.join(i, s, o)][i].clone())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(g)
    }

    /// Builds a game by evaluating `f` on every pure profile.
    pub fn from_fn(
        players: Vec<String>,
        strategies: Vec<Vec<String>>,
        mut f: impl FnMut(&[usize]) -> Vec<Rational>,
    ) -> Result<Self> {
        let sizes: Vec<usize> = strategies.iter().map(Vec::len).collect();
        let payoffs = all_profiles(&sizes).iter().map(|p| f(p)).collect();
        Game::new(players, strategies, payoffs)
    }

    /// Two-player game from Ann's and Bob's payoff matrices (rows are Ann's strategies).
    pub fn bimatrix(row_labels: &[&str], col_labels: &[&str], cells: &[&[(i64, i64)]]) -> Result<Self> {
        let strategies = vec![
            row_labels.iter().map(|s| s.to_string()).collect(),
            col_labels.iter().map(|s| s.to_string()).collect(),
        ];
        Game::from_fn(vec!["a".into(), "b".into()], strategies, |p| {
            let (x, y) = cells[p[0]][p[1]];
            vec![rational::int(x), rational::int(y)]
        })
    }

    pub fn num_players(&self) -> usize {
        self.players.len()
    }

    pub fn num_strategies(&self, i: usize) -> usize {
        self.strategies[i].len()
    }

    pub fn total_strategies(&self) -> usize {
        self.strategies.iter().map(Vec::len).sum()
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn player_name(&self, i: usize) -> &str {
        &self.players[i]
    }

    pub fn strategy_names(&self, i: usize) -> &[String] {
        &self.strategies[i]
    }

    pub fn strategy_name(&self, i: usize, s: usize) -> &str {
        &self.strategies[i][s]
    }

    pub fn player_index(&self, name: &str) -> Result<usize> {
        self.players
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::invalid(format!("unknown player {name:?}")))
    }

    pub fn strategy_index(&self, i: usize, name: &str) -> Result<usize> {
        self.strategies[i]
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::invalid(format!("unknown strategy {name:?} for player {}", self.players[i])))
    }

    pub fn num_profiles(&self) -> usize {
        self.payoffs.len()
    }

    pub fn profile_index(&self, profile: &[usize]) -> usize {
        profile
            .iter()
            .enumerate()
            .fold(0, |acc, (j, &s)| acc * self.num_strategies(j) + s)
    }

    pub fn profile(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.num_players()];
        for j in (0..self.num_players()).rev() {
            out[j] = idx % self.num_strategies(j);
            idx /= self.num_strategies(j);
        }
        out
    }

    pub fn payoff(&self, i: usize, profile: &[usize]) -> &Rational {
        &self.payoffs[self.profile_index(profile)][i]
    }

    pub fn opponents(&self, i: usize) -> Vec<usize> {
        (0..self.num_players()).filter(|&j| j != i).collect()
    }

    pub fn num_opp_profiles(&self, i: usize) -> usize {
        self.opponents(i).iter().map(|&j| self.num_strategies(j)).product()
    }

    /// Strategies of the opponents of `i`, in player order.
    pub fn opp_profile(&self, i: usize, mut idx: usize) -> Vec<usize> {
        let opp = self.opponents(i);
        let mut out = vec![0; opp.len()];
        for k in (0..opp.len()).rev() {
            let n = self.num_strategies(opp[k]);
            out[k] = idx % n;
            idx /= n;
        }
        out
    }

    pub fn opp_index(&self, i: usize, opp_profile: &[usize]) -> usize {
        self.opponents(i)
            .iter()
            .zip(opp_profile)
            .fold(0, |acc, (&j, &s)| acc * self.num_strategies(j) + s)
    }

    /// Flat profile index of `(s_i, opponent profile)`.
    pub fn join(&self, i: usize, s_i: usize, opp_idx: usize) -> usize {
        let mut full = self.opp_profile(i, opp_idx);
        full.insert(i, s_i);
        self.profile_index(&full)
    }

    /// Payoff of `s_i` against each opponent profile.
    pub fn row(&self, i: usize, s_i: usize) -> &[Rational] {
        &self.matrices[i][s_i]
    }

    pub fn payoff_vs(&self, i: usize, s_i: usize, opp_idx: usize) -> &Rational {
        &self.matrices[i][s_i][opp_idx]
    }

    pub fn opp_profile_name(&self, i: usize, opp_idx: usize) -> String {
        self.opponents(i)
            .iter()
            .zip(self.opp_profile(i, opp_idx))
            .map(|(&j, s)| self.strategies[j][s].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn opp_profile_by_name(&self, i: usize, name: &str) -> Result<usize> {
        let parts: Vec<&str> = name.split(',').map(str::trim).collect();
        let opp = self.opponents(i);
        if parts.len() != opp.len() {
            return Err(Error::invalid(format!(
                "opponent profile {name:?} should name {} strategies",
                opp.len()
            )));
        }
        let prof = opp
            .iter()
            .zip(&parts)
            .map(|(&j, p)| self.strategy_index(j, p))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.opp_index(i, &prof))
    }

    pub fn max_abs_payoff(&self) -> Rational {
        self.payoffs
            .iter()
            .flatten()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// π_i(s_i, μ).
    pub fn expected_payoff(&self, i: usize, s_i: usize, mu: &Belief1) -> Result<Rational> {
        self.check_belief(i, mu)?;
        if s_i >= self.num_strategies(i) {
            return Err(Error::invalid(format!("strategy index {s_i} out of range")));
        }
        Ok(rational::dot(self.row(i, s_i), &mu.weights))
    }

    /// π_i(σ_i, μ), the bilinear extension.
    pub fn expected_payoff_mixed(&self, i: usize, sigma: &MixedStrategy, mu: &Belief1) -> Result<Rational> {
        if sigma.owner != i || sigma.weights.len() != self.num_strategies(i) {
            return Err(Error::invalid("mixed strategy does not belong to this player"));
        }
        let mut total = Rational::zero();
        for (s, w) in sigma.weights.iter().enumerate() {
            if !w.is_zero() {
                total += w * self.expected_payoff(i, s, mu)?;
            }
        }
        Ok(total)
    }

    /// Payoff vector of a mixed strategy against each opponent profile.
    pub fn mixed_row(&self, i: usize, sigma: &MixedStrategy) -> Vec<Rational> {
        (0..self.num_opp_profiles(i))
            .map(|o| {
                sigma
                    .weights
                    .iter()
                    .enumerate()
                    .fold(Rational::zero(), |acc, (s, w)| acc + w * self.payoff_vs(i, s, o))
            })
            .collect()
    }

    fn check_belief(&self, i: usize, mu: &Belief1) -> Result<()> {
        if mu.owner != i || mu.weights.len() != self.num_opp_profiles(i) {
            return Err(Error::invalid("belief is not over this player's opponents"));
        }
        Ok(())
    }

    pub fn from_json_str(doc: &str) -> Result<Self> {
        Game::from_json(&serde_json::from_str(doc)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Game::from_json_str(&read_file(path.as_ref())?)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::invalid("game document must be an object"))?;
        let players: Vec<String> = string_list(
            obj.get("players")
                .ok_or_else(|| Error::invalid("missing \"players\""))?,
            "players",
        )?;
        if players.len() < 2 {
            return Err(Error::invalid("a game needs at least two players"));
        }
        let smap = obj
            .get("strategies")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::invalid("missing \"strategies\" object"))?;
        let mut strategies = Vec::new();
        for p in &players {
            let list = smap
                .get(p)
                .ok_or_else(|| Error::invalid(format!("no strategies for player {p}")))?;
            strategies.push(string_list(list, p)?);
        }
        if smap.len() != players.len() {
            return Err(Error::invalid("strategies listed for an undeclared player"));
        }
        for s in strategies.iter().flatten() {
            if s.contains(',') {
                return Err(Error::invalid(format!("strategy label {s:?} contains a comma")));
            }
        }
        let pmap = obj
            .get("payoffs")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::invalid("missing \"payoffs\" object"))?;
        let sizes: Vec<usize> = strategies.iter().map(Vec::len).collect();
        let profiles = all_profiles(&sizes);
        if pmap.len() != profiles.len() {
            return Err(Error::invalid(format!(
                "payoff table has {} entries, expected {}",
                pmap.len(),
                profiles.len()
            )));
        }
        let mut payoffs = Vec::with_capacity(profiles.len());
        for prof in &profiles {
            let key = prof
                .iter()
                .enumerate()
                .map(|(j, &s)| strategies[j][s].as_str())
                .collect::<Vec<_>>()
                .join(",");
            let entry = pmap
                .get(&key)
                .ok_or_else(|| Error::invalid(format!("missing payoff entry {key:?}")))?;
            let arr = entry
                .as_array()
                .ok_or_else(|| Error::invalid(format!("payoff entry {key:?} is not a list")))?;
            if arr.len() != players.len() {
                return Err(Error::invalid(format!(
                    "payoff entry {key:?} has {} values, expected {}",
                    arr.len(),
                    players.len()
                )));
            }
            payoffs.push(arr.iter().map(rational::from_json).collect::<Result<Vec<_>>>()?);
        }
        Game::new(players, strategies, payoffs)
    }

    pub fn to_json(&self) -> Value {
        let mut strategies = Map::new();
        for (p, s) in self.players.iter().zip(&self.strategies) {
            strategies.insert(p.clone(), json!(s));
        }
        let mut payoffs = Map::new();
        for (idx, row) in self.payoffs.iter().enumerate() {
            let key = self
                .profile(idx)
                .iter()
                .enumerate()
                .map(|(j, &s)| self.strategies[j][s].as_str())
                .collect::<Vec<_>>()
                .join(",");
            payoffs.insert(key, Value::Array(row.iter().map(rational::to_json).collect()));
        }
        json!({"players": self.players, "strategies": strategies, "payoffs": payoffs})
    }

    /// `{u,m}×{l}`; the empty product set prints as `∅`.
    pub fn format_product(&self, q: &ProductSet) -> String {
        if q.is_empty() {
            return "∅".into();
        }
        q.sets
            .iter()
            .enumerate()
            .map(|(i, set)| {
                let names: Vec<&str> = set.iter().map(|&s| self.strategy_name(i, s)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect::<Vec<_>>()
            .join("×")
    }

    pub fn product_to_json(&self, q: &ProductSet) -> Value {
        let mut m = Map::new();
        for (i, set) in q.sets.iter().enumerate() {
            let names: Vec<&str> = set.iter().map(|&s| self.strategy_name(i, s)).collect();
            m.insert(self.players[i].clone(), json!(names));
        }
        Value::Object(m)
    }

    /// Parses `a=u,m;b=l`. Unlisted players get the empty set; `empty` is ∅.
    pub fn parse_product(&self, text: &str) -> Result<ProductSet> {
        let t = text.trim();
        if t.is_empty() || t == "empty" || t == "∅" {
            return Ok(ProductSet::empty(self.num_players()));
        }
        let mut sets = vec![Vec::new(); self.num_players()];
        for part in t.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (p, list) = part
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("expected player=strategies in {part:?}")))?;
            let i = self.player_index(p.trim())?;
            for s in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                sets[i].push(self.strategy_index(i, s)?);
            }
        }
        Ok(ProductSet::new(sets))
    }

    pub fn product_from_json(&self, v: &Value) -> Result<ProductSet> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::invalid("product set must be an object"))?;
        let mut sets = vec![Vec::new(); self.num_players()];
        for (p, list) in obj {
            let i = self.player_index(p)?;
            for s in string_list(list, p)? {
                sets[i].push(self.strategy_index(i, &s)?);
            }
        }
        Ok(ProductSet::new(sets))
    }

    pub fn mixed_to_json(&self, sigma: &MixedStrategy) -> Value {
        let mut m = Map::new();
        for (s, w) in sigma.weights.iter().enumerate() {
            if !w.is_zero() {
                m.insert(self.strategy_name(sigma.owner, s).to_string(), rational::to_json(w));
            }
        }
        Value::Object(m)
    }

    pub fn belief_to_json(&self, mu: &Belief1) -> Value {
        let mut m = Map::new();
        for (o, w) in mu.weights.iter().enumerate() {
            if !w.is_zero() {
                m.insert(self.opp_profile_name(mu.owner, o), rational::to_json(w));
            }
        }
        Value::Object(m)
    }

    pub fn format_belief(&self, mu: &Belief1) -> String {
        let parts: Vec<String> = mu
            .weights
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(o, w)| format!("{}:{}", self.opp_profile_name(mu.owner, o), w))
            .collect();
        format!("({})", parts.join(" "))
    }
}

fn check_labels(what: &str, labels: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if l.is_empty() {
            return Err(Error::invalid(format!("empty {what} label")));
        }
        if !seen.insert(l) {
            return Err(Error::invalid(format!("duplicate {what} label {l:?}")));
        }
    }
    Ok(())
}

pub(crate) fn string_list(v: &Value, what: &str) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| Error::invalid(format!("{what}: expected a list of strings")))?
        .iter()
        .map(|x| {
            x.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::invalid(format!("{what}: expected a string, got {x}")))
        })
        .collect()
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// All index tuples of a mixed-radix space, first coordinate most significant.
pub fn all_profiles(sizes: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = sizes.iter().product();
    let mut out = Vec::with_capacity(total);
    for mut idx in 0..total {
        let mut p = vec![0; sizes.len()];
        for k in (0..sizes.len()).rev() {
            p[k] = idx % sizes[k];
            idx /= sizes[k];
        }
        out.push(p);
    }
    out
}

/// A product set Q = ∏ Q_i. A product with an empty factor is the empty set,
/// and is normalized so that every factor is empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductSet {
    sets: Vec<Vec<usize>>,
}

impl ProductSet {
    pub fn new(sets: Vec<Vec<usize>>) -> Self {
        let mut sets: Vec<Vec<usize>> = sets
            .into_iter()
            .map(|s| {
                let b: BTreeSet<usize> = s.into_iter().collect();
                b.into_iter().collect()
            })
            .collect();
        if sets.iter().any(Vec::is_empty) {
            sets.iter_mut().for_each(Vec::clear);
        }
        ProductSet { sets }
    }

    pub fn full(game: &Game) -> Self {
        ProductSet::new(
            (0..game.num_players())
                .map(|i| (0..game.num_strategies(i)).collect())
                .collect(),
        )
    }

    pub fn empty(players: usize) -> Self {
        ProductSet {
            sets: vec![Vec::new(); players],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.sets.iter().any(Vec::is_empty)
    }

    pub fn num_players(&self) -> usize {
        self.sets.len()
    }

    pub fn component(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn contains(&self, i: usize, s: usize) -> bool {
        self.sets[i].binary_search(&s).is_ok()
    }

    pub fn is_subset(&self, other: &ProductSet) -> bool {
        self.is_empty()
            || self
                .sets
                .iter()
                .zip(&other.sets)
                .all(|(a, b)| a.iter().all(|x| b.binary_search(x).is_ok()))
    }

    /// Replaces factor `i`.
    pub fn with_component(&self, i: usize, set: Vec<usize>) -> ProductSet {
        let mut sets = self.sets.clone();
        sets[i] = set;
        ProductSet::new(sets)
    }

    /// Opponent profile indices of Q_{-i}. Looks only at the opponents' factors.
    pub fn opp_profiles(&self, game: &Game, i: usize) -> Vec<usize> {
        let opp = game.opponents(i);
        let factors: Vec<&Vec<usize>> = opp.iter().map(|&j| &self.sets[j]).collect();
        let sizes: Vec<usize> = factors.iter().map(|f| f.len()).collect();
        let mut out: Vec<usize> = all_profiles(&sizes)
            .into_iter()
            .map(|choice| {
                let prof: Vec<usize> = choice.iter().enumerate().map(|(k, &c)| factors[k][c]).collect();
                game.opp_index(i, &prof)
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn cardinality(&self) -> usize {
        self.sets.iter().map(Vec::len).product()
    }
}

/// σ_i ∈ M(S_i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedStrategy {
    pub owner: usize,
    pub weights: Vec<Rational>,
}

impl MixedStrategy {
    pub fn new(game: &Game, owner: usize, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != game.num_strategies(owner) {
            return Err(Error::invalid("mixed strategy has the wrong length"));
        }
        check_distribution(&weights)?;
        Ok(MixedStrategy { owner, weights })
    }

    pub fn pure(game: &Game, owner: usize, s: usize) -> Self {
        let mut weights = vec![Rational::zero(); game.num_strategies(owner)];
        weights[s] = rational::one();
        MixedStrategy { owner, weights }
    }

    pub fn support(&self) -> Vec<usize> {
        support_of(&self.weights)
    }
}

/// μ_i ∈ M(S_{-i}), indexed by opponent profile.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Belief1 {
    pub owner: usize,
    pub weights: Vec<Rational>,
}

impl Belief1 {
    pub fn new(game: &Game, owner: usize, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != game.num_opp_profiles(owner) {
            return Err(Error::invalid("belief has the wrong length"));
        }
        check_distribution(&weights)?;
        Ok(Belief1 { owner, weights })
    }

    pub fn dirac(game: &Game, owner: usize, opp_idx: usize) -> Self {
        let mut weights = vec![Rational::zero(); game.num_opp_profiles(owner)];
        weights[opp_idx] = rational::one();
        Belief1 { owner, weights }
    }

    pub fn uniform_on(game: &Game, owner: usize, support: &[usize]) -> Self {
        let mut weights = vec![Rational::zero(); game.num_opp_profiles(owner)];
        let w = rational::ratio(1, support.len() as i64);
        for &o in support {
            weights[o] = w.clone();
        }
        Belief1 { owner, weights }
    }

    /// Builds a belief from `(opponent profile name, weight)` pairs.
    pub fn from_named(game: &Game, owner: usize, pairs: &[(&str, Rational)]) -> Result<Self> {
        let mut weights = vec![Rational::zero(); game.num_opp_profiles(owner)];
        for (name, w) in pairs {
            weights[game.opp_profile_by_name(owner, name)?] += w;
        }
        Belief1::new(game, owner, weights)
    }

    pub fn support(&self) -> Vec<usize> {
        support_of(&self.weights)
    }
}

pub(crate) fn support_of(w: &[Rational]) -> Vec<usize> {
    w.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, _)| k)
        .collect()
}

pub(crate) fn check_distribution(w: &[Rational]) -> Result<()> {
    if w.iter().any(|x| x.is_negative()) {
        return Err(Error::invalid("negative probability"));
    }
    if rational::sum(w) != rational::one() {
        return Err(Error::invalid("probabilities do not sum to 1"));
    }
    Ok(())
}

/// Named product sets, handy for reports keyed by player.
pub fn product_by_name(game: &Game, q: &ProductSet) -> BTreeMap<String, Vec<String>> {
    (0..game.num_players())
        .map(|i| {
            (
                game.player_name(i).to_string(),
                q.component(i)
                    .iter()
                    .map(|&s| game.strategy_name(i, s).to_string())
                    .collect(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn example1() -> Game {
        Game::bimatrix(
            &["u", "m", "d"],
            &["l", "r"],
            &[&[(2, 2), (2, 2)], &[(3, 1), (0, 0)], &[(0, 0), (1, 3)]],
        )
        .unwrap()
    }

    fn boss() -> Game {
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
    fn expected_payoff_examples() {
        let g = example1();
        let l = Belief1::dirac(&g, 0, 0);
        assert_eq!(g.expected_payoff(0, 1, &l).unwrap(), int(3));
        let half = Belief1::uniform_on(&g, 0, &[0, 1]);
        assert_eq!(g.expected_payoff(0, 2, &half).unwrap(), ratio(1, 2));
        let sigma = MixedStrategy::new(&g, 0, vec![int(0), ratio(1, 2), ratio(1, 2)]).unwrap();
        assert_eq!(g.expected_payoff_mixed(0, &sigma, &half).unwrap(), int(1));

        let b = boss();
        let c = Belief1::dirac(&b, 0, 1);
        let sigma = MixedStrategy::new(&b, 0, vec![ratio(1, 2), ratio(1, 2), int(0)]).unwrap();
        assert_eq!(b.expected_payoff_mixed(0, &sigma, &c).unwrap(), int(2));
    }

    #[test]
    fn dirac_reads_table() {
        let g = boss();
        for i in 0..2 {
            for s in 0..g.num_strategies(i) {
                for o in 0..g.num_opp_profiles(i) {
                    let mut prof = g.opp_profile(i, o);
                    prof.insert(i, s);
                    let mu = Belief1::dirac(&g, i, o);
                    assert_eq!(&g.expected_payoff(i, s, &mu).unwrap(), g.payoff(i, &prof));
                }
            }
        }
    }

    #[test]
    fn json_round_trip_and_validation() {
        let g = example1();
        let back = Game::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);

        let mut doc = g.to_json();
        doc["payoffs"].as_object_mut().unwrap().remove("m,r");
        assert!(Game::from_json(&doc).is_err());

        let mut doc = g.to_json();
        doc["payoffs"]["u,l"] = json!([1]);
        assert!(Game::from_json(&doc).is_err());

        let solo = json!({"players":["a"],"strategies":{"a":["x"]},"payoffs":{"x":[0]}});
        assert!(Game::from_json(&solo).is_err());
    }

    #[test]
    fn fractional_payoffs_parse() {
        let doc = r#"{"players":["a","b"],"strategies":{"a":["x","y"],"b":["l","r"]},
            "payoffs":{"x,l":["1/2",0],"x,r":[1,"-3/4"],"y,l":[0,0],"y,r":[2,"6/8"]}}"#;
        let g = Game::from_json_str(doc).unwrap();
        assert_eq!(g.num_strategies(0), 2);
        assert_eq!(g.payoff(1, &[1, 1]), &ratio(3, 4));
        assert_eq!(g.payoff(0, &[0, 0]), &ratio(1, 2));
    }

    #[test]
    fn three_player_indexing() {
        let g = Game::from_fn(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                vec!["x".into(), "y".into()],
                vec!["l".into(), "m".into(), "r".into()],
                vec!["p".into(), "q".into()],
            ],
            |p| vec![int(p[0] as i64), int(p[1] as i64), int(p[2] as i64)],
        )
        .unwrap();
        assert_eq!(g.num_opp_profiles(1), 4);
        for idx in 0..g.num_profiles() {
            assert_eq!(g.profile_index(&g.profile(idx)), idx);
        }
        let o = g.opp_profile_by_name(1, "y,q").unwrap();
        assert_eq!(g.opp_profile(1, o), vec![1, 1]);
        assert_eq!(g.join(1, 2, o), g.profile_index(&[1, 2, 1]));
    }

    #[test]
    fn product_sets_normalize_empty() {
        let g = example1();
        let q = g.parse_product("a=u").unwrap();
        assert!(q.is_empty());
        assert_eq!(q, ProductSet::empty(2));
        let q = g.parse_product("a=m,u;b=l").unwrap();
        assert_eq!(q.component(0), &[0, 1]);
        assert_eq!(g.format_product(&q), "{u,m}×{l}");
        assert_eq!(q.opp_profiles(&g, 0), vec![0]);
        assert_eq!(g.product_from_json(&g.product_to_json(&q)).unwrap(), q);
    }

    #[test]
    fn malformed_belief_rejected() {
        let g = example1();
        assert!(Belief1::new(&g, 0, vec![ratio(1, 2), ratio(1, 3)]).is_err());
        assert!(Belief1::new(&g, 0, vec![int(2), int(-1)]).is_err());
        let mu = Belief1 {
            owner: 1,
            weights: vec![int(1), int(0), int(0)],
        };
        assert!(g.expected_payoff(0, 0, &mu).is_err());
    }
}
