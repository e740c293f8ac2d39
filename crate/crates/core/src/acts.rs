//! Acts over a belief space and the preference relation induced by an LPS:
//! lexicographic expected utility, likelihood comparisons, cautiousness and
//! weak-dominance determination, each with checkable certificates.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lps::{Event, LabeledSpace, Lps};
use crate::rational::{self, Rational};

/// A map from atoms to utilities in [0, 1].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Act {
    values: Vec<Rational>,
}

impl Act {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| **v < Rational::zero() || **v > Rational::one()) {
            return Err(Error::invalid(format!("act value {v} outside [0,1]")));
        }
        Ok(Act { values })
    }

    pub fn constant(n: usize, x: Rational) -> Result<Self> {
        Act::new(vec![x; n])
    }

    pub fn indicator(e: &Event) -> Self {
        Act {
            values: (0..e.space_len())
                .map(|a| {
                    if e.contains(a) {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        }
    }

    /// (f_E, g_{Ω∖E}).
    pub fn compose(e: &Event, f: &Act, g: &Act) -> Result<Act> {
        if f.len() != e.space_len() || g.len() != e.space_len() {
            return Err(Error::invalid("acts and event live on different spaces"));
        }
        Ok(Act {
            values: (0..e.space_len())
                .map(|a| {
                    if e.contains(a) {
                        f.values[a].clone()
                    } else {
                        g.values[a].clone()
                    }
                })
                .collect(),
        })
    }

    /// Strategy-measurable act from one value per label.
    pub fn from_labels(space: &LabeledSpace, per_label: &[Rational]) -> Result<Act> {
        if per_label.len() != space.num_labels() {
            return Err(Error::invalid("one value per label required"));
        }
        Act::new((0..space.len()).map(|a| per_label[space.label(a)].clone()).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn at(&self, atom: usize) -> &Rational {
        &self.values[atom]
    }

    /// Constant on every elementary cylinder.
    pub fn is_strategy_measurable(&self, space: &LabeledSpace) -> bool {
        (0..space.num_labels()).all(|l| {
            let atoms = space.atoms_with_label(l);
            atoms.iter().all(|&a| self.values[a] == self.values[atoms[0]])
        })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.values.iter().map(rational::to_json).collect())
    }
}

/// Per-level expected utility ∫ f dμ^l.
pub fn lex_eu(mu: &Lps, f: &Act) -> Result<Vec<Rational>> {
    if f.len() != mu.space().len() {
        return Err(Error::invalid("act is not over the LPS's space"));
    }
    Ok(mu.levels().iter().map(|lvl| rational::dot(lvl, &f.values)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    StrictlyPrefers,
    Indifferent,
    StrictlyDispreferred,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreferenceVerdict {
    pub relation: Relation,
    /// 1-based level where the comparison resolved; `None` when indifferent.
    pub level: Option<usize>,
}

impl PreferenceVerdict {
    /// f ≿ g.
    pub fn weakly(&self) -> bool {
        self.relation != Relation::StrictlyDispreferred
    }

    pub fn strictly(&self) -> bool {
        self.relation == Relation::StrictlyPrefers
    }
}

pub fn prefer(mu: &Lps, f: &Act, g: &Act) -> Result<PreferenceVerdict> {
    let a = lex_eu(mu, f)?;
    let b = lex_eu(mu, g)?;
    for (l, (x, y)) in a.iter().zip(&b).enumerate() {
        match x.cmp(y) {
            Ordering::Greater => {
                return Ok(PreferenceVerdict {
                    relation: Relation::StrictlyPrefers,
                    level: Some(l + 1),
                })
            }
            Ordering::Less => {
                return Ok(PreferenceVerdict {
                    relation: Relation::StrictlyDispreferred,
                    level: Some(l + 1),
                })
            }
            Ordering::Equal => {}
        }
    }
    Ok(PreferenceVerdict {
        relation: Relation::Indifferent,
        level: None,
    })
}

/// f ≿_E g, evaluated as (f_E, h) against (g_E, h).
pub fn conditional_prefer(mu: &Lps, e: &Event, f: &Act, g: &Act, h: &Act) -> Result<PreferenceVerdict> {
    prefer(mu, &Act::compose(e, f, h)?, &Act::compose(e, g, h)?)
}

pub fn is_savage_null(mu: &Lps, e: &Event) -> bool {
    (1..=mu.len()).all(|l| mu.measure(l, e).is_zero())
}

/// The bet paying x on E, y elsewhere, against z on F, y elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetTriple {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl BetTriple {
    pub fn acts(&self, e: &Event, f: &Event) -> Result<(Act, Act)> {
        let n = e.space_len();
        let on_e = Act::compose(
            e,
            &Act::constant(n, self.x.clone())?,
            &Act::constant(n, self.y.clone())?,
        )?;
        let on_f = Act::compose(
            f,
            &Act::constant(n, self.z.clone())?,
            &Act::constant(n, self.y.clone())?,
        )?;
        Ok((on_e, on_f))
    }

    /// x > y and the F-bet is weakly preferred to the E-bet.
    pub fn refutes(&self, mu: &Lps, e: &Event, f: &Event) -> Result<bool> {
        if self.x <= self.y {
            return Ok(false);
        }
        let (on_e, on_f) = self.acts(e, f)?;
        Ok(prefer(mu, &on_f, &on_e)?.weakly())
    }

    pub fn to_json(&self) -> Value {
        json!({"x": rational::to_json(&self.x), "y": rational::to_json(&self.y), "z": rational::to_json(&self.z)})
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImlVerdict {
    pub holds: bool,
    pub falsifier: Option<BetTriple>,
}

fn check_disjoint(e: &Event, f: &Event) -> Result<()> {
    if e.space_len() != f.space_len() {
        return Err(Error::invalid("events live on different spaces"));
    }
    if !e.is_disjoint(f) {
        return Err(Error::invalid("events must be disjoint"));
    }
    Ok(())
}

/// E ≫ F for disjoint events, decided by first-positive-level comparison.
/// A refuting bet is attached when it fails.
pub fn iml_preference(mu: &Lps, e: &Event, f: &Event) -> Result<ImlVerdict> {
    check_disjoint(e, f)?;
    let ie = mu.iml_index(e);
    let jf = mu.iml_index(f);
    let holds = match (ie, jf) {
        (Some(a), Some(b)) => a < b,
        (Some(_), None) => true,
        (None, _) => false,
    };
    if holds {
        return Ok(ImlVerdict { holds, falsifier: None });
    }
    let x = match (ie, jf) {
        (Some(a), Some(b)) if a == b => {
            let half = &mu.measure(b, f) / (rational::int(2) * mu.measure(a, e));
            half.min(Rational::one())
        }
        _ => Rational::one(),
    };
    let bet = BetTriple {
        x,
        y: Rational::zero(),
        z: Rational::one(),
    };
    if !bet.refutes(mu, e, f)? {
        return Err(Error::internal("constructed bet does not refute the likelihood claim"));
    }
    Ok(ImlVerdict {
        holds,
        falsifier: Some(bet),
    })
}

/// E is more likely than F: the level vector of E is lexicographically at
/// least that of F.
pub fn more_likely(mu: &Lps, e: &Event, f: &Event) -> Result<bool> {
    if e.space_len() != f.space_len() {
        return Err(Error::invalid("events live on different spaces"));
    }
    let a: Vec<Rational> = (1..=mu.len()).map(|l| mu.measure(l, e)).collect();
    let b: Vec<Rational> = (1..=mu.len()).map(|l| mu.measure(l, f)).collect();
    Ok(a >= b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CautiousnessVerdict {
    pub holds: bool,
    /// (f, g) with f ≥ g, f > g somewhere, yet f ∼ g.
    pub falsifier: Option<(Act, Act)>,
}

/// Whether weak improvement on strategy-measurable acts always yields strict
/// preference.
pub fn exhibits_cautiousness(mu: &Lps) -> Result<CautiousnessVerdict> {
    let space = mu.space();
    let covered = mu.marginal_support_upto(mu.len());
    let Some(label) = (0..space.num_labels()).find(|l| !covered.contains(l)) else {
        return Ok(CautiousnessVerdict {
            holds: true,
            falsifier: None,
        });
    };
    let f = Act::indicator(&space.cylinder(label));
    let g = Act::constant(space.len(), Rational::zero())?;
    if prefer(mu, &f, &g)?.relation != Relation::Indifferent {
        return Err(Error::internal("cylinder indicator is not indifferent to the zero act"));
    }
    Ok(CautiousnessVerdict {
        holds: false,
        falsifier: Some((f, g)),
    })
}

/// Every relevant part of E is infinitely more likely than Ω∖E.
pub fn cautious_belief_preference(mu: &Lps, e: &Event) -> Result<bool> {
    if e.is_empty() {
        return Err(Error::precondition("event is empty"));
    }
    let rest = e.complement();
    for (_, part) in mu.space().relevant_parts(e) {
        if !iml_preference(mu, &part, &rest)?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every relevant part of E is non-null.
pub fn relevance(mu: &Lps, e: &Event) -> Result<bool> {
    if e.is_empty() {
        return Err(Error::precondition("event is empty"));
    }
    Ok(mu.space().relevant_parts(e).iter().all(|(_, p)| !is_savage_null(mu, p)))
}

/// f ≥ g on E and f > g on some non-null relevant part of E.
pub fn weakly_dominates_on(mu: &Lps, e: &Event, f: &Act, g: &Act) -> bool {
    e.iter().all(|a| f.at(a) >= g.at(a))
        && mu
            .space()
            .relevant_parts(e)
            .iter()
            .any(|(_, p)| !is_savage_null(mu, p) && p.iter().all(|a| f.at(a) > g.at(a)))
}

/// f ≥ g on E and f > g on some non-null subset of E.
pub fn p_weakly_dominates_on(mu: &Lps, e: &Event, f: &Act, g: &Act) -> bool {
    if !e.iter().all(|a| f.at(a) >= g.at(a)) {
        return false;
    }
    let strict = Event::from_atoms(e.space_len(), e.iter().filter(|&a| f.at(a) > g.at(a)));
    !is_savage_null(mu, &strict)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WdVerdict {
    pub holds: bool,
    /// (f, g) with f WD_E g yet g ≿ f.
    pub falsifier: Option<(Act, Act)>,
}

impl WdVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds,
            "falsifier": self.falsifier.as_ref().map(|(f, g)| json!({"f": f.to_json(), "g": g.to_json()})),
        })
    }
}

/// Whether E WD-determines the preference: f WD_E g always gives f ≻ g.
/// True exactly when E is null, or μ¹(E) = 1 and every non-null relevant part
/// becomes positive before Ω∖E does.
pub fn wd_determination(mu: &Lps, e: &Event) -> Result<WdVerdict> {
    if e.is_empty() {
        return Err(Error::precondition("event is empty"));
    }
    if is_savage_null(mu, e) {
        return Ok(WdVerdict {
            holds: true,
            falsifier: None,
        });
    }
    let n = e.space_len();
    let rest = e.complement();
    let g = Act::compose(
        e,
        &Act::constant(n, Rational::zero())?,
        &Act::constant(n, Rational::one())?,
    )?;
    let pair = if mu.measure(1, e) < Rational::one() {
        let eps = mu.measure(1, &rest) / rational::int(2);
        Some((Act::constant(n, eps)?, g))
    } else {
        let k = mu.iml_index(&rest);
        let late = mu
            .space()
            .relevant_parts(e)
            .into_iter()
            .find(|(_, p)| match (mu.iml_index(p), k) {
                (Some(ip), Some(k)) => ip >= k,
                _ => false,
            });
        match (late, k) {
            (Some((_, part)), Some(k)) => {
                let c = mu.measure(k, &rest);
                let f = Act::compose(&part, &Act::constant(n, c)?, &Act::constant(n, Rational::zero())?)?;
                Some((f, g))
            }
            _ => None,
        }
    };
    match pair {
        None => Ok(WdVerdict {
            holds: true,
            falsifier: None,
        }),
        Some((f, g)) => {
            if !weakly_dominates_on(mu, e, &f, &g) || !prefer(mu, &g, &f)?.weakly() {
                return Err(Error::internal("constructed acts do not refute WD determination"));
            }
            Ok(WdVerdict {
                holds: false,
                falsifier: Some((f, g)),
            })
        }
    }
}
