//! Finite lexicographic type structures and the events built on them:
//! rationality, cautiousness, cautious and certain belief, the R^m and R̂^m
//! hierarchies, type morphisms, and constructions of witness structures.

use std::collections::BTreeSet;
use std::path::Path;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::dominance::{self, iterated_admissibility, lexicographic_best_replies, pearce_witness};
use crate::error::{Error, Result};
use crate::game::{all_profiles, read_file, string_list, Belief1, Game, ProductSet};
use crate::lp::{self, LinearProgram, Relation};
use crate::lps::{Event, LabeledSpace, Lps};
use crate::rational::{self, Rational};

/// ⟨S_i, T_i, β_i⟩ with finitely many types. Player i's beliefs live on the
/// atoms S_{-i} × T_{-i}, atom index = opponent profile · |T_{-i}| + type profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeStructure {
    game: Arc<Game>,
    types: Vec<Vec<String>>,
    spaces: Vec<Arc<LabeledSpace>>,
    beliefs: Vec<Vec<Lps>>,
}

fn radix_index(sizes: &[usize], idx: &[usize]) -> usize {
    sizes.iter().zip(idx).fold(0, |acc, (n, k)| acc * n + k)
}

fn radix_split(sizes: &[usize], mut idx: usize) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for k in (0..sizes.len()).rev() {
        out[k] = idx % sizes[k];
        idx /= sizes[k];
    }
    out
}

impl TypeStructure {
    /// Belief spaces for the given type lists.
    pub fn spaces_for(game: &Game, types: &[Vec<String>]) -> Result<Vec<Arc<LabeledSpace>>> {
        if types.len() != game.num_players() {
            return Err(Error::invalid("one type list per player required"));
        }
        for (i, ts) in types.iter().enumerate() {
            if ts.is_empty() {
                return Err(Error::invalid(format!("player {} has no types", game.player_name(i))));
            }
            if ts.iter().collect::<BTreeSet<_>>().len() != ts.len() {
                return Err(Error::invalid(format!(
                    "duplicate type of player {}",
                    game.player_name(i)
                )));
            }
        }
        (0..game.num_players())
            .map(|i| {
                let opp = game.opponents(i);
                let sizes: Vec<usize> = opp.iter().map(|&j| types[j].len()).collect();
                let ntp: usize = sizes.iter().product();
                let mut names = Vec::new();
                let mut labels = Vec::new();
                for o in 0..game.num_opp_profiles(i) {
                    for tp in 0..ntp {
                        let tnames: Vec<&str> = radix_split(&sizes, tp)
                            .iter()
                            .zip(&opp)
                            .map(|(&t, &j)| types[j][t].as_str())
                            .collect();
                        names.push(format!("{}|{}", game.opp_profile_name(i, o), tnames.join(",")));
                        labels.push(o);
                    }
                }
                let label_names = (0..game.num_opp_profiles(i))
                    .map(|o| game.opp_profile_name(i, o))
                    .collect();
                Ok(Arc::new(LabeledSpace::new(names, labels, label_names)?))
            })
            .collect()
    }

    pub fn new(game: Arc<Game>, types: Vec<Vec<String>>, beliefs: Vec<Vec<Lps>>) -> Result<Self> {
        let spaces = TypeStructure::spaces_for(&game, &types)?;
        if beliefs.len() != types.len() {
            return Err(Error::invalid("one belief map per player required"));
        }
        let mut canon = Vec::with_capacity(beliefs.len());
        for (i, bs) in beliefs.into_iter().enumerate() {
            if bs.len() != types[i].len() {
                return Err(Error::invalid(format!(
                    "player {} has {} types but {} beliefs",
                    game.player_name(i),
                    types[i].len(),
                    bs.len()
                )));
            }
            let mut row = Vec::with_capacity(bs.len());
            for b in bs {
                if **b.space() != *spaces[i] {
                    return Err(Error::invalid("belief is not over the opponents' strategy-type atoms"));
                }
                row.push(Lps::new(spaces[i].clone(), b.levels().to_vec())?);
            }
            canon.push(row);
        }
        Ok(TypeStructure {
            game,
            types,
            spaces,
            beliefs: canon,
        })
    }

    pub fn game(&self) -> &Arc<Game> {
        &self.game
    }

    pub fn num_players(&self) -> usize {
        self.types.len()
    }

    pub fn num_types(&self, i: usize) -> usize {
        self.types[i].len()
    }

    pub fn type_names(&self, i: usize) -> &[String] {
        &self.types[i]
    }

    pub fn type_name(&self, i: usize, t: usize) -> &str {
        &self.types[i][t]
    }

    pub fn type_index(&self, i: usize, name: &str) -> Result<usize> {
        self.types[i]
            .iter()
            .position(|t| t == name)
            .ok_or_else(|| Error::invalid(format!("unknown type {name:?} of player {}", self.game.player_name(i))))
    }

    pub fn space(&self, i: usize) -> &Arc<LabeledSpace> {
        &self.spaces[i]
    }

    pub fn belief(&self, i: usize, t: usize) -> &Lps {
        &self.beliefs[i][t]
    }

    fn opp_type_sizes(&self, i: usize) -> Vec<usize> {
        self.game.opponents(i).iter().map(|&j| self.types[j].len()).collect()
    }

    pub fn num_opp_type_profiles(&self, i: usize) -> usize {
        self.opp_type_sizes(i).iter().product()
    }

    pub fn opp_type_profile(&self, i: usize, idx: usize) -> Vec<usize> {
        radix_split(&self.opp_type_sizes(i), idx)
    }

    pub fn opp_type_index(&self, i: usize, types: &[usize]) -> usize {
        radix_index(&self.opp_type_sizes(i), types)
    }

    pub fn atom(&self, i: usize, opp_strategy: usize, opp_types: usize) -> usize {
        opp_strategy * self.num_opp_type_profiles(i) + opp_types
    }

    /// (opponent strategy profile, opponent type profile) of an atom.
    pub fn atom_parts(&self, i: usize, atom: usize) -> (usize, usize) {
        let n = self.num_opp_type_profiles(i);
        (atom / n, atom % n)
    }

    /// E_{-i} as an event of player i's belief space.
    pub fn opp_event(&self, i: usize, e: &StateEvent) -> Event {
        let opp = self.game.opponents(i);
        let space = &self.spaces[i];
        Event::from_atoms(
            space.len(),
            (0..space.len()).filter(|&a| {
                let (o, tp) = self.atom_parts(i, a);
                let ss = self.game.opp_profile(i, o);
                let tt = self.opp_type_profile(i, tp);
                opp.iter()
                    .enumerate()
                    .all(|(k, &j)| e.sets[j].contains(&(ss[k], tt[k])))
            }),
        )
    }

    pub fn from_json(v: &Value, base: Option<&Path>) -> Result<Self> {
        let game = match v.get("game") {
            Some(Value::String(p)) => {
                let path = base.map_or_else(|| Path::new(p).to_path_buf(), |b| b.join(p));
                Game::load(path)?
            }
            Some(g @ Value::Object(_)) => Game::from_json(g)?,
            _ => return Err(Error::invalid("type structure needs a \"game\" (object or path)")),
        };
        let tmap = v
            .get("types")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::invalid("missing \"types\" object"))?;
        let mut types = Vec::new();
        for i in 0..game.num_players() {
            let p = game.player_name(i);
            types.push(string_list(
                tmap.get(p)
                    .ok_or_else(|| Error::invalid(format!("no types for player {p}")))?,
                p,
            )?);
        }
        let spaces = TypeStructure::spaces_for(&game, &types)?;
        let bmap = v
            .get("beliefs")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::invalid("missing \"beliefs\" object"))?;
        let mut beliefs = Vec::new();
        for i in 0..game.num_players() {
            let p = game.player_name(i);
            let per = bmap
                .get(p)
                .and_then(Value::as_object)
                .ok_or_else(|| Error::invalid(format!("no beliefs for player {p}")))?;
            if per.len() != types[i].len() {
                return Err(Error::invalid(format!("beliefs of {p} do not match its types")));
            }
            let mut row = Vec::new();
            for t in &types[i] {
                let doc = per
                    .get(t)
                    .ok_or_else(|| Error::invalid(format!("no belief for type {t}")))?;
                row.push(parse_sparse_lps(&spaces[i], doc)?);
            }
            beliefs.push(row);
        }
        TypeStructure::new(Arc::new(game), types, beliefs)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let v: Value = serde_json::from_str(&read_file(path)?)?;
        TypeStructure::from_json(&v, path.parent())
    }

    pub fn to_json(&self) -> Value {
        let mut types = Map::new();
        let mut beliefs = Map::new();
        for i in 0..self.num_players() {
            let p = self.game.player_name(i).to_string();
            types.insert(p.clone(), json!(self.types[i]));
            let mut per = Map::new();
            for (t, name) in self.types[i].iter().enumerate() {
                per.insert(name.clone(), self.belief_json(i, t));
            }
            beliefs.insert(p, Value::Object(per));
        }
        json!({"game": self.game.to_json(), "types": types, "beliefs": beliefs})
    }

    fn atom_json(&self, i: usize, a: usize) -> Value {
        let (o, tp) = self.atom_parts(i, a);
        let tnames: Vec<&str> = self
            .opp_type_profile(i, tp)
            .iter()
            .zip(self.game.opponents(i))
            .map(|(&t, j)| self.types[j][t].as_str())
            .collect();
        json!([self.game.opp_profile_name(i, o), tnames.join(",")])
    }

    pub fn belief_json(&self, i: usize, t: usize) -> Value {
        let levels: Vec<Value> = self.beliefs[i][t]
            .levels()
            .iter()
            .map(|lvl| {
                Value::Array(
                    lvl.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(a, x)| json!([self.atom_json(i, a), rational::to_json(x)]))
                        .collect(),
                )
            })
            .collect();
        json!({"levels": levels})
    }
}

fn parse_sparse_lps(space: &Arc<LabeledSpace>, doc: &Value) -> Result<Lps> {
    let levels = doc
        .get("levels")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::invalid("belief needs a \"levels\" list"))?;
    let mut out = Vec::new();
    for lvl in levels {
        let mut v = vec![Rational::zero(); space.len()];
        let mut seen = BTreeSet::new();
        for entry in lvl.as_array().ok_or_else(|| Error::invalid("level must be a list"))? {
            let pair = entry
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::invalid(format!("level entry {entry} is not [atom, probability]")))?;
            let atom = pair[0]
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::invalid(format!("atom {} is not [strategies, types]", pair[0])))?;
            let s = atom[0]
                .as_str()
                .ok_or_else(|| Error::invalid("atom strategies must be a string"))?;
            let t = atom[1]
                .as_str()
                .ok_or_else(|| Error::invalid("atom types must be a string"))?;
            let name = format!("{s}|{t}");
            let a = space
                .atom_index(&name)
                .ok_or_else(|| Error::invalid(format!("unknown atom ({s}, {t})")))?;
            if !seen.insert(a) {
                return Err(Error::invalid(format!("atom ({s}, {t}) listed twice in one level")));
            }
            v[a] = rational::from_json(&pair[1])?;
        }
        out.push(v);
    }
    Lps::new(space.clone(), out)
}

/// Per-player sets of (strategy, type) pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateEvent {
    pub sets: Vec<BTreeSet<(usize, usize)>>,
}

impl StateEvent {
    pub fn empty(players: usize) -> Self {
        StateEvent {
            sets: vec![BTreeSet::new(); players],
        }
    }

    pub fn full(ts: &TypeStructure) -> Self {
        StateEvent {
            sets: (0..ts.num_players())
                .map(|i| {
                    (0..ts.game.num_strategies(i))
                        .flat_map(|s| (0..ts.num_types(i)).map(move |t| (s, t)))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn component(&self, i: usize) -> &BTreeSet<(usize, usize)> {
        &self.sets[i]
    }

    pub fn is_empty(&self) -> bool {
        self.sets.iter().any(BTreeSet::is_empty)
    }

    pub fn projection(&self, i: usize) -> Vec<usize> {
        self.sets[i]
            .iter()
            .map(|&(s, _)| s)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn projection_product(&self) -> ProductSet {
        ProductSet::new((0..self.sets.len()).map(|i| self.projection(i)).collect())
    }

    pub fn intersection(&self, other: &StateEvent) -> StateEvent {
        StateEvent {
            sets: self
                .sets
                .iter()
                .zip(&other.sets)
                .map(|(a, b)| a.intersection(b).copied().collect())
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &StateEvent) -> bool {
        self.sets.iter().zip(&other.sets).all(|(a, b)| a.is_subset(b))
    }

    pub fn to_json(&self, ts: &TypeStructure) -> Value {
        let mut m = Map::new();
        for (i, set) in self.sets.iter().enumerate() {
            let pairs: Vec<Value> = set
                .iter()
                .map(|&(s, t)| json!([ts.game.strategy_name(i, s), ts.type_name(i, t)]))
                .collect();
            m.insert(ts.game.player_name(i).to_string(), Value::Array(pairs));
        }
        Value::Object(m)
    }

    /// `{(m,t1)}×{(l,t2)}`.
    pub fn format(&self, ts: &TypeStructure) -> String {
        self.sets
            .iter()
            .enumerate()
            .map(|(i, set)| {
                let pairs: Vec<String> = set
                    .iter()
                    .map(|&(s, t)| format!("({},{})", ts.game.strategy_name(i, s), ts.type_name(i, t)))
                    .collect();
                format!("{{{}}}", pairs.join(","))
            })
            .collect::<Vec<_>>()
            .join("×")
    }
}

fn first_order(ts: &TypeStructure, i: usize, t: usize) -> Vec<Belief1> {
    ts.beliefs[i][t]
        .marginal_levels()
        .into_iter()
        .map(|weights| Belief1 { owner: i, weights })
        .collect()
}

/// R_i: pairs whose strategy is lexicographically optimal for the type's
/// first-order LPS.
pub fn rational_pairs(ts: &TypeStructure) -> Result<StateEvent> {
    let mut sets = Vec::with_capacity(ts.num_players());
    for i in 0..ts.num_players() {
        let mut set = BTreeSet::new();
        for t in 0..ts.num_types(i) {
            for s in lexicographic_best_replies(&ts.game, i, &first_order(ts, i, t))? {
                set.insert((s, t));
            }
        }
        sets.push(set);
    }
    Ok(StateEvent { sets })
}

fn type_cylinder(ts: &TypeStructure, i: usize, keep: impl Fn(usize) -> bool) -> BTreeSet<(usize, usize)> {
    (0..ts.num_types(i))
        .filter(|&t| keep(t))
        .flat_map(|t| (0..ts.game.num_strategies(i)).map(move |s| (s, t)))
        .collect()
}

/// C_i: types whose first-order LPS has full support.
pub fn cautious_types(ts: &TypeStructure) -> StateEvent {
    StateEvent {
        sets: (0..ts.num_players())
            .map(|i| type_cylinder(ts, i, |t| ts.beliefs[i][t].has_full_marginal_support()))
            .collect(),
    }
}

/// B_i^c(E_{-i}); empty when the event is empty.
pub fn cautious_belief_op(ts: &TypeStructure, i: usize, e: &Event) -> Result<BTreeSet<(usize, usize)>> {
    if e.is_empty() {
        return Ok(BTreeSet::new());
    }
    let mut keep = vec![false; ts.num_types(i)];
    for (t, k) in keep.iter_mut().enumerate() {
        *k = ts.beliefs[i][t].cautiously_believes(e)?.is_some();
    }
    Ok(type_cylinder(ts, i, |t| keep[t]))
}

/// B_i(E_{-i}): every level gives the event probability one.
pub fn certain_belief_op(ts: &TypeStructure, i: usize, e: &Event) -> BTreeSet<(usize, usize)> {
    type_cylinder(ts, i, |t| ts.beliefs[i][t].certainly_believes(e))
}

/// A decreasing sequence of state events X^1 ⊇ X^2 ⊇ ... up to its fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hierarchy {
    /// `rounds[m - 1]` is X^m; the last entry is X^∞.
    pub rounds: Vec<StateEvent>,
}

impl Hierarchy {
    /// X^m for m ≥ 1, constant past the fixpoint.
    pub fn round(&self, m: usize) -> &StateEvent {
        &self.rounds[(m.max(1) - 1).min(self.rounds.len() - 1)]
    }

    pub fn limit(&self) -> &StateEvent {
        self.rounds.last().unwrap()
    }
}

fn iterate_from(ts: &TypeStructure, start: StateEvent) -> Result<Hierarchy> {
    let mut rounds = vec![start];
    loop {
        let cur = rounds.last().unwrap();
        let mut sets = Vec::with_capacity(ts.num_players());
        for i in 0..ts.num_players() {
            let e = ts.opp_event(i, cur);
            let b = cautious_belief_op(ts, i, &e)?;
            sets.push(cur.sets[i].intersection(&b).copied().collect());
        }
        let next = StateEvent { sets };
        if next == *cur {
            return Ok(Hierarchy { rounds });
        }
        rounds.push(next);
    }
}

/// R^1 = R ∩ C, R^{m+1}_i = R^m_i ∩ B^c_i(R^m_{-i}).
pub fn iterate_rcbr(ts: &TypeStructure) -> Result<Hierarchy> {
    let start = rational_pairs(ts)?.intersection(&cautious_types(ts));
    iterate_from(ts, start)
}

/// C^∞: the greatest event E ⊆ C with E_i ⊆ B_i(E_{-i}) for every i.
pub fn transparency_of_cautiousness(ts: &TypeStructure) -> StateEvent {
    let c = cautious_types(ts);
    let mut cur = c.clone();
    loop {
        let sets: Vec<BTreeSet<(usize, usize)>> = (0..ts.num_players())
            .map(|i| {
                let b = certain_belief_op(ts, i, &ts.opp_event(i, &cur));
                cur.sets[i].intersection(&b).copied().collect()
            })
            .collect();
        let next = StateEvent { sets };
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// R̂^1 = R ∩ C^∞, then the same recursion as R^m.
pub fn iterate_rhat(ts: &TypeStructure) -> Result<Hierarchy> {
    let start = rational_pairs(ts)?.intersection(&transparency_of_cautiousness(ts));
    iterate_from(ts, start)
}

/// φ = (φ_i), each a total map on T_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub maps: Vec<Vec<usize>>,
}

impl Morphism {
    pub fn identity(ts: &TypeStructure) -> Self {
        Morphism {
            maps: (0..ts.num_players()).map(|i| (0..ts.num_types(i)).collect()).collect(),
        }
    }

    fn check(&self, src: &TypeStructure, dst: &TypeStructure) -> Result<()> {
        if src.game != dst.game {
            return Err(Error::invalid("structures are over different games"));
        }
        if self.maps.len() != src.num_players() {
            return Err(Error::invalid("morphism needs one map per player"));
        }
        for (i, m) in self.maps.iter().enumerate() {
            if m.len() != src.num_types(i) || m.iter().any(|&t| t >= dst.num_types(i)) {
                return Err(Error::invalid(format!(
                    "map of player {} is not total into T*",
                    src.game.player_name(i)
                )));
            }
        }
        Ok(())
    }

    /// `{"a": {"ta1": "ta1*", ...}, ...}`.
    pub fn from_json(v: &Value, src: &TypeStructure, dst: &TypeStructure) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::invalid("morphism must be an object"))?;
        let mut maps = Vec::new();
        for i in 0..src.num_players() {
            let p = src.game.player_name(i);
            let per = obj
                .get(p)
                .and_then(Value::as_object)
                .ok_or_else(|| Error::invalid(format!("no map for player {p}")))?;
            let mut m = Vec::new();
            for t in src.type_names(i) {
                let target = per
                    .get(t)
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::invalid(format!("type {t} is not mapped")))?;
                m.push(dst.type_index(i, target)?);
            }
            maps.push(m);
        }
        Ok(Morphism { maps })
    }

    pub fn to_json(&self, src: &TypeStructure, dst: &TypeStructure) -> Value {
        let mut obj = Map::new();
        for (i, m) in self.maps.iter().enumerate() {
            let per: Map<String, Value> = m
                .iter()
                .enumerate()
                .map(|(t, &u)| (src.type_name(i, t).to_string(), json!(dst.type_name(i, u))))
                .collect();
            obj.insert(src.game.player_name(i).to_string(), Value::Object(per));
        }
        Value::Object(obj)
    }

    /// The atom map (s_{-i}, t_{-i}) ↦ (s_{-i}, φ_{-i}(t_{-i})) of player i's space.
    fn atom_map<'a>(
        &'a self,
        src: &'a TypeStructure,
        dst: &'a TypeStructure,
        i: usize,
    ) -> impl Fn(usize) -> usize + 'a {
        let opp = src.game.opponents(i);
        move |a| {
            let (o, tp) = src.atom_parts(i, a);
            let mapped: Vec<usize> = src
                .opp_type_profile(i, tp)
                .iter()
                .zip(&opp)
                .map(|(&t, &j)| self.maps[j][t])
                .collect();
            dst.atom(i, o, dst.opp_type_index(i, &mapped))
        }
    }

    /// (Id, φ_{-i})(E_{-i}).
    pub fn image_event(&self, src: &TypeStructure, dst: &TypeStructure, i: usize, e: &Event) -> Event {
        let f = self.atom_map(src, dst, i);
        Event::from_atoms(dst.space(i).len(), e.iter().map(f))
    }

    /// (Id, φ_i)(E_i) for a set of strategy-type pairs.
    pub fn image_pairs(&self, i: usize, set: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
        set.iter().map(|&(s, t)| (s, self.maps[i][t])).collect()
    }
}

/// β*_i ∘ φ_i equals the image of β_i under (Id, φ_{-i}), level by level.
pub fn verify_morphism(src: &TypeStructure, dst: &TypeStructure, phi: &Morphism) -> Result<bool> {
    phi.check(src, dst)?;
    for i in 0..src.num_players() {
        for t in 0..src.num_types(i) {
            let image = src.beliefs[i][t].pushforward(dst.space(i).clone(), phi.atom_map(src, dst, i))?;
            if image != dst.beliefs[i][phi.maps[i][t]] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First counterexample when the check failed.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub is_morphism: bool,
    pub checks: Vec<Check>,
    pub depth: usize,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.is_morphism && self.checks.iter().all(|c| c.passed)
    }

    pub fn first_violation(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "is_morphism": self.is_morphism,
            "depth": self.depth,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "witness": c.witness})).collect::<Vec<_>>(),
            "note": "terminality is not decidable from a finite object; only these finite preservation facts are checked",
        })
    }
}

/// Events used for the cautious-belief transfer check: every non-empty event
/// on small spaces, otherwise a family built from the hierarchy and supports.
fn probe_events(ts: &TypeStructure, i: usize, hier: &Hierarchy, depth: usize) -> Vec<Event> {
    let n = ts.space(i).len();
    if n <= 10 {
        return (1u32..(1 << n))
            .map(|mask| Event::from_atoms(n, (0..n).filter(|b| mask >> b & 1 == 1)))
            .collect();
    }
    let mut out = BTreeSet::new();
    out.insert(Event::full(n));
    for m in 1..=depth {
        let e = ts.opp_event(i, hier.round(m));
        if !e.is_empty() {
            out.insert(e);
        }
    }
    for t in 0..ts.num_types(i) {
        let mu = ts.belief(i, t);
        let mut acc = Event::empty(n);
        for l in 1..=mu.len() {
            acc = acc.union(&mu.support(l));
            out.insert(acc.clone());
        }
    }
    out.into_iter().collect()
}

/// Checks that cautiousness, rationality and cautious belief survive the
/// morphism, and that (Id, φ)(R^m_i) ⊆ R*^m_i with equal projections for m ≤ depth.
pub fn check_morphism_preservation(
    src: &TypeStructure,
    dst: &TypeStructure,
    phi: &Morphism,
    depth: usize,
) -> Result<MorphismReport> {
    let is_morphism = verify_morphism(src, dst, phi)?;
    let mut checks = Vec::new();
    if !is_morphism {
        return Ok(MorphismReport {
            is_morphism,
            checks,
            depth,
        });
    }
    let game = &src.game;
    let pair = |ts: &TypeStructure, i: usize, s: usize, t: usize| {
        format!(
            "player {}: ({}, {})",
            game.player_name(i),
            game.strategy_name(i, s),
            ts.type_name(i, t)
        )
    };

    let c_src = cautious_types(src);
    let c_dst = cautious_types(dst);
    let mut witness = None;
    'outer: for i in 0..src.num_players() {
        for t in 0..src.num_types(i) {
            let a = c_src.sets[i].contains(&(0, t));
            let b = c_dst.sets[i].contains(&(0, phi.maps[i][t]));
            if a != b {
                witness = Some(format!("player {}: type {}", game.player_name(i), src.type_name(i, t)));
                break 'outer;
            }
        }
    }
    checks.push(Check {
        name: "cautiousness transfers both ways".into(),
        passed: witness.is_none(),
        witness,
    });

    let r_src = rational_pairs(src)?;
    let r_dst = rational_pairs(dst)?;
    let mut witness = None;
    'outer: for i in 0..src.num_players() {
        for t in 0..src.num_types(i) {
            for s in 0..game.num_strategies(i) {
                if r_src.sets[i].contains(&(s, t)) != r_dst.sets[i].contains(&(s, phi.maps[i][t])) {
                    witness = Some(pair(src, i, s, t));
                    break 'outer;
                }
            }
        }
    }
    checks.push(Check {
        name: "rationality transfers both ways".into(),
        passed: witness.is_none(),
        witness,
    });

    let h_src = iterate_rcbr(src)?;
    let h_dst = iterate_rcbr(dst)?;
    let mut witness = None;
    'outer: for i in 0..src.num_players() {
        for e in probe_events(src, i, &h_src, depth) {
            let img = phi.image_event(src, dst, i, &e);
            for t in 0..src.num_types(i) {
                if src.belief(i, t).cautiously_believes(&e)?.is_some()
                    && dst.belief(i, phi.maps[i][t]).cautiously_believes(&img)?.is_none()
                {
                    witness = Some(format!(
                        "player {}: type {} and event {:?}",
                        game.player_name(i),
                        src.type_name(i, t),
                        e
                    ));
                    break 'outer;
                }
            }
        }
    }
    checks.push(Check {
        name: "cautious belief transfers to image events".into(),
        passed: witness.is_none(),
        witness,
    });

    let mut incl = None;
    let mut proj_image = None;
    let mut proj_dst = None;
    for m in 1..=depth {
        for i in 0..src.num_players() {
            let r = &h_src.round(m).sets[i];
            let img = phi.image_pairs(i, r);
            let rd = &h_dst.round(m).sets[i];
            if incl.is_none() {
                if let Some(&(s, t)) = r.iter().find(|&&(s, t)| !rd.contains(&(s, phi.maps[i][t]))) {
                    incl = Some(format!("m = {m}, {}", pair(src, i, s, t)));
                }
            }
            let p: BTreeSet<usize> = r.iter().map(|x| x.0).collect();
            let pi: BTreeSet<usize> = img.iter().map(|x| x.0).collect();
            let pd: BTreeSet<usize> = rd.iter().map(|x| x.0).collect();
            if proj_image.is_none() && p != pi {
                proj_image = Some(format!("m = {m}, player {}", game.player_name(i)));
            }
            if proj_dst.is_none() && p != pd {
                proj_dst = Some(format!("m = {m}, player {}", game.player_name(i)));
            }
        }
    }
    checks.push(Check {
        name: "(Id,φ)(R^m) ⊆ R*^m".into(),
        passed: incl.is_none(),
        witness: incl,
    });
    checks.push(Check {
        name: "Proj (Id,φ)(R^m) = Proj R^m".into(),
        passed: proj_image.is_none(),
        witness: proj_image,
    });
    checks.push(Check {
        name: "Proj R*^m = Proj R^m".into(),
        passed: proj_dst.is_none(),
        witness: proj_dst,
    });
    Ok(MorphismReport {
        is_morphism,
        checks,
        depth,
    })
}

fn place(ts_types: &[usize], ntp_sizes: &[usize]) -> usize {
    radix_index(ntp_sizes, ts_types)
}

/// A finite structure with Proj R^m = S^m for every m. Types are the
/// strategies in S^1; the type for s_i believes in witnesses for each round
/// it survives, most refined first, the earliest level on the fixed type
/// profile and the rest on the diagonal.
pub fn build_lemma1_structure(game: &Game) -> Result<TypeStructure> {
    let trace = iterated_admissibility(game)?;
    let big_m = trace.fixpoint.max(1);
    let s1 = trace.round(1);
    let types: Vec<Vec<String>> = (0..game.num_players())
        .map(|i| {
            s1.component(i)
                .iter()
                .map(|&s| game.strategy_name(i, s).to_string())
                .collect()
        })
        .collect();
    let spaces = TypeStructure::spaces_for(game, &types)?;
    let mut beliefs = Vec::new();
    for i in 0..game.num_players() {
        let opp = game.opponents(i);
        let sizes: Vec<usize> = opp.iter().map(|&j| types[j].len()).collect();
        let ntp: usize = sizes.iter().product();
        let all_own: Vec<usize> = (0..game.num_strategies(i)).collect();
        let diag = |o: usize| -> usize {
            let prof = game.opp_profile(i, o);
            let tix: Vec<usize> = prof
                .iter()
                .zip(&opp)
                .map(|(&s, &j)| {
                    s1.component(j)
                        .iter()
                        .position(|&x| x == s)
                        .expect("diagonal type exists")
                })
                .collect();
            place(&tix, &sizes)
        };
        let mut row = Vec::new();
        for &s in s1.component(i) {
            let depth = (1..=big_m + 1)
                .filter(|&k| trace.round(k).contains(i, s))
                .max()
                .unwrap();
            let mut levels = Vec::new();
            for k in (1..=depth).rev() {
                let opps = trace.round(k - 1).opp_profiles(game, i);
                let w = pearce_witness(game, i, s, &opps, &all_own)?.ok_or_else(|| {
                    Error::internal(format!(
                        "no witness for {} against round {}",
                        game.strategy_name(i, s),
                        k - 1
                    ))
                })?;
                let mut lvl = vec![Rational::zero(); spaces[i].len()];
                for (o, x) in w.belief.weights.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let tp = if k == 1 { 0 } else { diag(o) };
                    lvl[o * ntp + tp] = x.clone();
                }
                levels.push(lvl);
            }
            row.push(Lps::new(spaces[i].clone(), levels)?);
        }
        beliefs.push(row);
    }
    let ts = TypeStructure::new(Arc::new(game.clone()), types, beliefs)?;
    let hier = iterate_rcbr(&ts)?;
    let horizon = hier.rounds.len().max(trace.fixpoint) + 1;
    for m in 1..=horizon {
        if hier.round(m).projection_product() != *trace.round(m) {
            return Err(Error::internal(format!("constructed structure misses S^{m}")));
        }
    }
    Ok(ts)
}

/// Uniform average of the vertices of {μ on `opp`: s_i optimal among S_i}.
/// `None` when that polytope is empty.
pub fn optimality_center(game: &Game, i: usize, s_i: usize, opp: &[usize]) -> Result<Option<Belief1>> {
    let p = opp.len();
    let mut poly = LinearProgram::feasibility(p);
    poly.constrain(vec![Rational::one(); p], Relation::Eq, Rational::one());
    for s in 0..game.num_strategies(i) {
        if s == s_i {
            continue;
        }
        let row = opp
            .iter()
            .map(|&o| game.payoff_vs(i, s_i, o) - game.payoff_vs(i, s, o))
            .collect();
        poly.constrain(row, Relation::Ge, Rational::zero());
    }
    let vertices = lp::enumerate_vertices(&poly)?;
    if vertices.is_empty() {
        return Ok(None);
    }
    let k = rational::int(vertices.len() as i64);
    let mut weights = vec![Rational::zero(); game.num_opp_profiles(i)];
    for v in &vertices {
        for (n, &o) in opp.iter().enumerate() {
            weights[o] += &v[n] / &k;
        }
    }
    Ok(Some(Belief1 { owner: i, weights }))
}

/// The (ν¹ on Q_{-i}, ν² on S_{-i}) pair for s_i, checked to have the required
/// supports. `Ok(None)` if either polytope has no point of full support.
fn sas_pair(game: &Game, q: &ProductSet, i: usize, s: usize) -> Result<Option<(Belief1, Belief1)>> {
    let qo = q.opp_profiles(game, i);
    let all: Vec<usize> = (0..game.num_opp_profiles(i)).collect();
    let (Some(n1), Some(n2)) = (
        optimality_center(game, i, s, &qo)?,
        optimality_center(game, i, s, &all)?,
    ) else {
        return Ok(None);
    };
    if n1.support() != qo || n2.support() != all {
        return Ok(None);
    }
    Ok(Some((n1, n2)))
}

/// A finite cautious structure with Proj R^∞ = Proj R̂^∞ = Q for a non-empty SAS Q.
pub fn build_sas_structure(game: &Game, q: &ProductSet) -> Result<TypeStructure> {
    if q.is_empty() {
        return Err(Error::precondition("the product set is empty"));
    }
    if !dominance::is_sas(game, q)?.holds {
        return Err(Error::precondition(format!(
            "{} is not self-admissible",
            game.format_product(q)
        )));
    }
    let types: Vec<Vec<String>> = (0..game.num_players())
        .map(|i| {
            q.component(i)
                .iter()
                .map(|&s| game.strategy_name(i, s).to_string())
                .collect()
        })
        .collect();
    let spaces = TypeStructure::spaces_for(game, &types)?;
    let mut beliefs = Vec::new();
    for i in 0..game.num_players() {
        let opp = game.opponents(i);
        let sizes: Vec<usize> = opp.iter().map(|&j| types[j].len()).collect();
        let ntp: usize = sizes.iter().product();
        let mut row = Vec::new();
        for &s in q.component(i) {
            let name = game.strategy_name(i, s);
            let (n1, n2) = sas_pair(game, q, i, s)?.ok_or_else(|| {
                Error::internal(format!(
                    "vertex averaging gave no full-support pair for {name} in {}",
                    game.format_product(q)
                ))
            })?;
            let both = lexicographic_best_replies(game, i, &[n1.clone(), n2.clone()])?;
            let mut supporters = Vec::new();
            for sp in 0..game.num_strategies(i) {
                if dominance::supports(game, i, sp, s)?.is_some() {
                    supporters.push(sp);
                }
            }
            if both != supporters {
                return Err(Error::internal(format!(
                    "vertex averaging for {name} in {} makes a non-supporting strategy optimal",
                    game.format_product(q)
                )));
            }
            let mut l1 = vec![Rational::zero(); spaces[i].len()];
            for (o, x) in n1.weights.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let tix: Vec<usize> = game
                    .opp_profile(i, o)
                    .iter()
                    .zip(&opp)
                    .map(|(&sj, &j)| q.component(j).iter().position(|&x| x == sj).unwrap())
                    .collect();
                l1[o * ntp + place(&tix, &sizes)] = x.clone();
            }
            let mut l2 = vec![Rational::zero(); spaces[i].len()];
            for (o, x) in n2.weights.iter().enumerate() {
                l2[o * ntp] = x.clone();
            }
            row.push(Lps::new(spaces[i].clone(), vec![l1, l2])?);
        }
        beliefs.push(row);
    }
    let ts = TypeStructure::new(Arc::new(game.clone()), types, beliefs)?;
    if iterate_rcbr(&ts)?.limit().projection_product() != *q {
        return Err(Error::internal("constructed structure: Proj R^∞ differs from Q"));
    }
    if iterate_rhat(&ts)?.limit().projection_product() != *q {
        return Err(Error::internal("constructed structure: Proj R̂^∞ differs from Q"));
    }
    Ok(ts)
}

/// The product space X × Y, atom index x·|Y| + y, labeled by x.
pub fn product_space(x: &LabeledSpace, y_names: &[String]) -> Result<Arc<LabeledSpace>> {
    if y_names.is_empty() {
        return Err(Error::invalid("empty type space"));
    }
    let mut names = Vec::new();
    let mut labels = Vec::new();
    for a in 0..x.len() {
        for y in y_names {
            names.push(format!("{}|{y}", x.atom_name(a)));
            labels.push(a);
        }
    }
    let label_names = (0..x.len()).map(|a| x.atom_name(a).to_string()).collect();
    Ok(Arc::new(LabeledSpace::new(names, labels, label_names)?))
}

/// Lifts ν̄ on X to an LPS on X × Y with marginal ν̄ that cautiously believes
/// every element of the decreasing chain `events`.
pub fn lift_lps(nu_bar: &Lps, y_names: &[String], events: &[Event]) -> Result<Lps> {
    let x = nu_bar.space();
    if !x.is_bare() {
        return Err(Error::precondition("ν̄ must live on bare strategy profiles"));
    }
    let xy = product_space(x, y_names)?;
    let ny = y_names.len();
    if events.is_empty() {
        return Err(Error::precondition("empty event chain"));
    }
    for (m, e) in events.iter().enumerate() {
        if e.space_len() != xy.len() {
            return Err(Error::invalid("event is not over X × Y"));
        }
        if e.is_empty() {
            return Err(Error::precondition(format!("event {} of the chain is empty", m + 1)));
        }
        if m > 0 && !e.is_subset(&events[m - 1]) {
            return Err(Error::precondition("events are not decreasing"));
        }
        let proj = Event::from_atoms(x.len(), xy.projection(e));
        if !nu_bar.fully_believes(&proj)? {
            return Err(Error::precondition(format!(
                "ν̄ does not fully believe the projection of event {}",
                m + 1
            )));
        }
    }
    let n = events.len();
    let projs: Vec<BTreeSet<usize>> = events.iter().map(|e| xy.projection(e)).collect();
    let first_in = |e: &Event, xi: usize| (0..ny).find(|&y| e.contains(xi * ny + y));
    let mut g = vec![0usize; x.len()];
    for (xi, gx) in g.iter_mut().enumerate() {
        // cell index: 0 outside Proj E_1, else the last m with x ∈ Proj E_m
        let cell = (0..n)
            .rev()
            .find(|&m| projs[m].contains(&xi))
            .map(|m| m + 1)
            .unwrap_or(0);
        *gx = if cell == 0 {
            0
        } else {
            first_in(&events[cell - 1], xi).ok_or_else(|| Error::internal("no selectable witness in the chain"))?
        };
    }
    let mu = nu_bar.pushforward(xy.clone(), |a| a * ny + g[a])?;
    if mu.marginal_levels() != nu_bar.levels() {
        return Err(Error::internal("lifted LPS has the wrong marginal"));
    }
    for e in events {
        if mu.cautiously_believes(e)?.is_none() {
            return Err(Error::internal(
                "lifted LPS fails to cautiously believe a chain element",
            ));
        }
    }
    Ok(mu)
}

/// Lexicographic rationalizability rounds with their witness LPS's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StahlTrace {
    /// Ŝ^0, ..., Ŝ^M with Ŝ^{M+1} = Ŝ^M.
    pub rounds: Vec<ProductSet>,
    pub fixpoint: usize,
    /// `witnesses[m - 1]` holds (player, strategy, (ν^m, ..., ν^1)) for round m.
    pub witnesses: Vec<Vec<(usize, usize, Vec<Belief1>)>>,
}

impl StahlTrace {
    pub fn round(&self, m: usize) -> &ProductSet {
        &self.rounds[m.min(self.fixpoint)]
    }

    pub fn limit(&self) -> &ProductSet {
        &self.rounds[self.fixpoint]
    }
}

fn bare_opp_space(game: &Game, i: usize) -> Result<Arc<LabeledSpace>> {
    Ok(Arc::new(LabeledSpace::bare(
        (0..game.num_opp_profiles(i))
            .map(|o| game.opp_profile_name(i, o))
            .collect(),
    )?))
}

/// Ŝ^m by witness construction: s_i survives round m when full-support
/// witnesses against Ŝ^0, ..., Ŝ^{m-1} exist and, stacked, make s_i
/// lexicographically optimal while fully believing every earlier round.
pub fn stahl_procedure(game: &Game) -> Result<StahlTrace> {
    let mut rounds = vec![ProductSet::full(game)];
    let mut witnesses = Vec::new();
    let spaces: Vec<Arc<LabeledSpace>> = (0..game.num_players())
        .map(|i| bare_opp_space(game, i))
        .collect::<Result<_>>()?;
    loop {
        let m = rounds.len();
        let mut sets = Vec::new();
        let mut found = Vec::new();
        for i in 0..game.num_players() {
            let all_own: Vec<usize> = (0..game.num_strategies(i)).collect();
            let mut keep = Vec::new();
            's: for s in 0..game.num_strategies(i) {
                let mut stack = Vec::with_capacity(m);
                for k in (1..=m).rev() {
                    let opps = rounds[k - 1].opp_profiles(game, i);
                    match pearce_witness(game, i, s, &opps, &all_own)? {
                        Some(w) => stack.push(w.belief),
                        None => continue 's,
                    }
                }
                if !lexicographic_best_replies(game, i, &stack)?.contains(&s) {
                    return Err(Error::internal("stacked witnesses are not lexicographically optimal"));
                }
                let lps = Lps::new(spaces[i].clone(), stack.iter().map(|b| b.weights.clone()).collect())?;
                for prev in &rounds {
                    let target = Event::from_atoms(spaces[i].len(), prev.opp_profiles(game, i));
                    if !lps.fully_believes(&target)? {
                        return Err(Error::internal("stacked witnesses miss full belief of a round"));
                    }
                }
                keep.push(s);
                found.push((i, s, stack));
            }
            sets.push(keep);
        }
        let next = ProductSet::new(sets);
        if next == *rounds.last().unwrap() {
            let fixpoint = rounds.len() - 1;
            return Ok(StahlTrace {
                rounds,
                fixpoint,
                witnesses,
            });
        }
        if next.is_empty() {
            return Err(Error::internal("lexicographic rationalizability emptied a player"));
        }
        rounds.push(next);
        witnesses.push(found);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeVitoVerdict {
    pub holds: bool,
    /// (player, strategy, (ν¹, ν²)) for each member that passed.
    pub witnesses: Vec<(usize, usize, Vec<Belief1>)>,
    /// The first member without a witness.
    pub failure: Option<(usize, usize)>,
}

/// Q is an SAS iff each s_i ∈ Q_i is lexicographically optimal under some
/// ν̄ that fully believes Q_{-i} with every lexicographic best reply in Q_i.
/// Uses the vertex-averaged pair as the candidate ν̄.
pub fn de_vito_sas_check(game: &Game, q: &ProductSet) -> Result<DeVitoVerdict> {
    let mut witnesses = Vec::new();
    if q.is_empty() {
        return Ok(DeVitoVerdict {
            holds: true,
            witnesses,
            failure: None,
        });
    }
    for i in 0..game.num_players() {
        for &s in q.component(i) {
            let ok = match sas_pair(game, q, i, s)? {
                None => false,
                Some((n1, n2)) => {
                    let nu_bar = vec![n1, n2];
                    let r = lexicographic_best_replies(game, i, &nu_bar)?;
                    if r.contains(&s) && r.iter().all(|&x| q.contains(i, x)) {
                        witnesses.push((i, s, nu_bar));
                        true
                    } else {
                        false
                    }
                }
            };
            if !ok {
                return Ok(DeVitoVerdict {
                    holds: false,
                    witnesses,
                    failure: Some((i, s)),
                });
            }
        }
    }
    Ok(DeVitoVerdict {
        holds: true,
        witnesses,
        failure: None,
    })
}

/// Every (s, t) pair from a list of type profiles; used by generators and tests.
pub fn all_type_profiles(sizes: &[usize]) -> Vec<Vec<usize>> {
    all_profiles(sizes)
}
