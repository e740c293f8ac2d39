//! Lexicographic probability systems over labeled finite spaces, the belief
//! notions built on them, and their ε-polynomial representation.
//!
//! A [`LabeledSpace`] is a finite set of atoms, each labeled by an opponent
//! strategy profile. Levels are numbered from 1 in every public result.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::game::check_distribution;
use crate::lp::solve_linear_system;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledSpace {
    atom_names: Vec<String>,
    labels: Vec<usize>,
    label_names: Vec<String>,
    by_label: Vec<Vec<usize>>,
}

impl LabeledSpace {
    /// Every label must carry at least one atom.
    pub fn new(atom_names: Vec<String>, labels: Vec<usize>, label_names: Vec<String>) -> Result<Self> {
        if atom_names.len() != labels.len() {
            return Err(Error::invalid("one label per atom required"));
        }
        if atom_names.is_empty() {
            return Err(Error::invalid("empty space"));
        }
        let mut by_label = vec![Vec::new(); label_names.len()];
        for (a, &l) in labels.iter().enumerate() {
            by_label
                .get_mut(l)
                .ok_or_else(|| Error::invalid(format!("atom label {l} out of range")))?
                .push(a);
        }
        if let Some(l) = by_label.iter().position(Vec::is_empty) {
            return Err(Error::invalid(format!("label {:?} has no atoms", label_names[l])));
        }
        Ok(LabeledSpace {
            atom_names,
            labels,
            label_names,
            by_label,
        })
    }

    /// A space whose atoms are the labels themselves.
    pub fn bare(label_names: Vec<String>) -> Result<Self> {
        let n = label_names.len();
        LabeledSpace::new(label_names.clone(), (0..n).collect(), label_names)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn num_labels(&self) -> usize {
        self.label_names.len()
    }

    pub fn label(&self, atom: usize) -> usize {
        self.labels[atom]
    }

    pub fn atom_name(&self, atom: usize) -> &str {
        &self.atom_names[atom]
    }

    pub fn label_name(&self, label: usize) -> &str {
        &self.label_names[label]
    }

    pub fn is_bare(&self) -> bool {
        self.len() == self.num_labels() && self.labels.iter().enumerate().all(|(a, &l)| a == l)
    }

    pub fn atoms_with_label(&self, label: usize) -> &[usize] {
        &self.by_label[label]
    }

    pub fn full(&self) -> Event {
        Event::full(self.len())
    }

    pub fn empty_event(&self) -> Event {
        Event::empty(self.len())
    }

    /// The elementary cylinder of one label.
    pub fn cylinder(&self, label: usize) -> Event {
        Event::from_atoms(self.len(), self.by_label[label].iter().copied())
    }

    /// Cylinder over a set of labels.
    pub fn cylinder_of(&self, labels: &BTreeSet<usize>) -> Event {
        Event::from_atoms(
            self.len(),
            (0..self.len()).filter(|&a| labels.contains(&self.labels[a])),
        )
    }

    /// Labels of the atoms of `e`.
    pub fn projection(&self, e: &Event) -> BTreeSet<usize> {
        e.iter().map(|a| self.labels[a]).collect()
    }

    /// Relevant parts: label → E ∩ cylinder, for labels hit by E.
    pub fn relevant_parts(&self, e: &Event) -> Vec<(usize, Event)> {
        self.projection(e)
            .into_iter()
            .map(|l| (l, e.intersection(&self.cylinder(l))))
            .collect()
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.atom_names.iter().position(|a| a == name)
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.label_names.iter().position(|a| a == name)
    }
}

/// A set of atoms of a fixed-size space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Event {
    mask: Vec<bool>,
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Event {
    pub fn empty(n: usize) -> Self {
        Event { mask: vec![false; n] }
    }

    pub fn full(n: usize) -> Self {
        Event { mask: vec![true; n] }
    }

    pub fn from_atoms(n: usize, atoms: impl IntoIterator<Item = usize>) -> Self {
        let mut e = Event::empty(n);
        for a in atoms {
            e.mask[a] = true;
        }
        e
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        Event { mask }
    }

    pub fn space_len(&self) -> usize {
        self.mask.len()
    }

    pub fn contains(&self, atom: usize) -> bool {
        self.mask[atom]
    }

    pub fn insert(&mut self, atom: usize) {
        self.mask[atom] = true;
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter(|(_, &b)| b).map(|(a, _)| a)
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    pub fn complement(&self) -> Event {
        Event {
            mask: self.mask.iter().map(|b| !b).collect(),
        }
    }

    pub fn union(&self, other: &Event) -> Event {
        Event {
            mask: self.mask.iter().zip(&other.mask).map(|(a, b)| *a || *b).collect(),
        }
    }

    pub fn intersection(&self, other: &Event) -> Event {
        Event {
            mask: self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect(),
        }
    }

    pub fn difference(&self, other: &Event) -> Event {
        Event {
            mask: self.mask.iter().zip(&other.mask).map(|(a, b)| *a && !*b).collect(),
        }
    }

    pub fn is_subset(&self, other: &Event) -> bool {
        self.mask.iter().zip(&other.mask).all(|(a, b)| !*a || *b)
    }

    pub fn is_disjoint(&self, other: &Event) -> bool {
        self.intersection(other).is_empty()
    }
}

/// μ̄ = (μ^1, ..., μ^n) over a labeled space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lps {
    space: Arc<LabeledSpace>,
    levels: Vec<Vec<Rational>>,
}

impl Lps {
    pub fn new(space: Arc<LabeledSpace>, levels: Vec<Vec<Rational>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::invalid("an LPS needs at least one level"));
        }
        for lvl in &levels {
            if lvl.len() != space.len() {
                return Err(Error::invalid(format!(
                    "LPS level has {} entries, space has {} atoms",
                    lvl.len(),
                    space.len()
                )));
            }
            check_distribution(lvl)?;
        }
        Ok(Lps { space, levels })
    }

    pub fn space(&self) -> &Arc<LabeledSpace> {
        &self.space
    }

    pub fn levels(&self) -> &[Vec<Rational>] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    fn check_event(&self, e: &Event) -> Result<()> {
        if e.space_len() != self.space.len() {
            return Err(Error::invalid("event is over a different space"));
        }
        Ok(())
    }

    /// μ^l(E), with `l` counted from 1.
    pub fn measure(&self, l: usize, e: &Event) -> Rational {
        e.iter().fold(Rational::zero(), |acc, a| acc + &self.levels[l - 1][a])
    }

    pub fn support(&self, l: usize) -> Event {
        Event::from_mask(self.levels[l - 1].iter().map(|x| !x.is_zero()).collect())
    }

    /// Smallest level giving `e` positive mass; `None` stands for +∞.
    pub fn iml_index(&self, e: &Event) -> Option<usize> {
        (1..=self.len()).find(|&l| self.measure(l, e).is_positive())
    }

    pub fn infinitely_more_likely(&self, e: &Event, f: &Event) -> Result<bool> {
        self.check_event(e)?;
        self.check_event(f)?;
        if !e.is_disjoint(f) {
            return Err(Error::precondition("events are not disjoint"));
        }
        Ok(index_lt(self.iml_index(e), self.iml_index(f)))
    }

    /// Smallest level m with μ^l(E) = 1 for l ≤ m and every relevant part of
    /// E hit by some level l ≤ m.
    pub fn cautiously_believes(&self, e: &Event) -> Result<Option<usize>> {
        self.check_event(e)?;
        if e.is_empty() {
            return Err(Error::precondition("cautious belief of the empty event"));
        }
        let parts = self.space.relevant_parts(e);
        let mut hit = vec![false; parts.len()];
        for m in 1..=self.len() {
            if self.measure(m, e) != Rational::one() {
                return Ok(None);
            }
            for (k, (_, part)) in parts.iter().enumerate() {
                if !hit[k] && self.measure(m, part).is_positive() {
                    hit[k] = true;
                }
            }
            if hit.iter().all(|&h| h) {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }

    /// E infinitely more likely than its complement.
    pub fn weakly_believes(&self, e: &Event) -> bool {
        index_lt(self.iml_index(e), self.iml_index(&e.complement()))
    }

    pub fn certainly_believes(&self, e: &Event) -> bool {
        (1..=self.len()).all(|l| self.measure(l, e) == Rational::one())
    }

    /// Smallest m at which E is weakly assumed: cautious-belief conditions at
    /// m, and every later level restricted to E is a linear combination of the
    /// first m levels restricted to E.
    pub fn weakly_assumed(&self, e: &Event) -> Result<Option<usize>> {
        self.check_event(e)?;
        if e.is_empty() {
            return Err(Error::precondition("weak assumption of the empty event"));
        }
        let Some(first) = self.cautiously_believes(e)? else {
            return Ok(None);
        };
        let atoms: Vec<usize> = e.iter().collect();
        for m in first..=self.len() {
            if self.measure(m, e) != Rational::one() {
                break;
            }
            let spans = (m + 1..=self.len()).all(|l| {
                let a: Vec<Vec<Rational>> = atoms
                    .iter()
                    .map(|&w| (0..m).map(|k| self.levels[k][w].clone()).collect())
                    .collect();
                let b: Vec<Rational> = atoms.iter().map(|&w| self.levels[l - 1][w].clone()).collect();
                solve_linear_system(&a, &b).is_some()
            });
            if spans {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }

    /// Some prefix of level supports has union exactly F. Needs a bare space.
    pub fn fully_believes(&self, f: &Event) -> Result<bool> {
        self.check_event(f)?;
        if !self.space.is_bare() {
            return Err(Error::precondition(
                "full belief is defined over bare strategy profiles",
            ));
        }
        let mut acc = Event::empty(self.space.len());
        for l in 1..=self.len() {
            acc = acc.union(&self.support(l));
            if acc == *f {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Level-wise marginal on labels.
    pub fn marginal_levels(&self) -> Vec<Vec<Rational>> {
        self.levels
            .iter()
            .map(|lvl| {
                let mut m = vec![Rational::zero(); self.space.num_labels()];
                for (a, x) in lvl.iter().enumerate() {
                    m[self.space.label(a)] += x;
                }
                m
            })
            .collect()
    }

    /// The marginal LPS over the bare label space.
    pub fn marginal(&self) -> Lps {
        let names = (0..self.space.num_labels())
            .map(|l| self.space.label_name(l).to_string())
            .collect();
        let space = Arc::new(LabeledSpace::bare(names).expect("labels are non-empty"));
        Lps {
            space,
            levels: self.marginal_levels(),
        }
    }

    /// Labels in the support of some marginal level up to `m`.
    pub fn marginal_support_upto(&self, m: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for l in 1..=m {
            for a in self.support(l).iter() {
                out.insert(self.space.label(a));
            }
        }
        out
    }

    pub fn has_full_marginal_support(&self) -> bool {
        self.marginal_support_upto(self.len()).len() == self.space.num_labels()
    }

    pub fn is_full_support(&self) -> bool {
        (0..self.space.len()).all(|a| self.levels.iter().any(|lvl| !lvl[a].is_zero()))
    }

    /// Pairwise disjoint level supports.
    pub fn is_lcps(&self) -> bool {
        (1..=self.len()).all(|k| (k + 1..=self.len()).all(|l| self.support(k).is_disjoint(&self.support(l))))
    }

    /// Atom masses of ν = Σ_l w_l μ^l as polynomials in ε, with
    /// w_l = (1−ε)ε^{l−1} for l < n and w_n = ε^{n−1}.
    pub fn to_nonstandard(&self) -> Vec<EpsPoly> {
        let n = self.len();
        let weights: Vec<EpsPoly> = (0..n)
            .map(|k| {
                if k + 1 < n {
                    EpsPoly::monomial(k as u32, Rational::one()).add(&EpsPoly::monomial(k as u32 + 1, -Rational::one()))
                } else {
                    EpsPoly::monomial(k as u32, Rational::one())
                }
            })
            .collect();
        (0..self.space.len())
            .map(|a| {
                weights
                    .iter()
                    .zip(&self.levels)
                    .fold(EpsPoly::zero(), |acc, (w, lvl)| acc.add(&w.scale(&lvl[a])))
            })
            .collect()
    }

    /// Image under an atom map into `target`.
    pub fn pushforward(&self, target: Arc<LabeledSpace>, map: impl Fn(usize) -> usize) -> Result<Lps> {
        let levels = self
            .levels
            .iter()
            .map(|lvl| {
                let mut out = vec![Rational::zero(); target.len()];
                for (a, x) in lvl.iter().enumerate() {
                    if !x.is_zero() {
                        out[map(a)] += x;
                    }
                }
                out
            })
            .collect();
        Lps::new(target, levels)
    }

    /// `{"space": [[label, rest], ...], "levels": [[...], ...]}`.
    pub fn to_json(&self) -> Value {
        let space: Vec<Value> = (0..self.space.len())
            .map(|a| {
                let name = self.space.atom_name(a);
                let label = self.space.label_name(self.space.label(a));
                let rest = name
                    .strip_prefix(label)
                    .map(|r| r.trim_start_matches('|'))
                    .unwrap_or(name);
                json!([label, rest])
            })
            .collect();
        let levels: Vec<Value> = self
            .levels
            .iter()
            .map(|l| Value::Array(l.iter().map(rational::to_json).collect()))
            .collect();
        json!({"space": space, "levels": levels})
    }

    /// Reads the LPS document format. Atoms with equal first components
    /// share a label; labels are numbered in order of first appearance.
    pub fn from_json(v: &Value) -> Result<Lps> {
        let atoms = v
            .get("space")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::invalid("LPS document needs a \"space\" list"))?;
        let mut label_names: Vec<String> = Vec::new();
        let mut labels = Vec::new();
        let mut names = Vec::new();
        for atom in atoms {
            let pair = atom
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::invalid(format!("atom {atom} is not a [strategy, type] pair")))?;
            let s = pair[0]
                .as_str()
                .ok_or_else(|| Error::invalid("atom strategy must be a string"))?;
            let t = pair[1]
                .as_str()
                .ok_or_else(|| Error::invalid("atom type must be a string"))?;
            let l = match label_names.iter().position(|x| x == s) {
                Some(l) => l,
                None => {
                    label_names.push(s.to_string());
                    label_names.len() - 1
                }
            };
            labels.push(l);
            names.push(format!("{s}|{t}"));
        }
        if names.iter().collect::<BTreeSet<_>>().len() != names.len() {
            return Err(Error::invalid("duplicate atom in LPS space"));
        }
        let space = Arc::new(LabeledSpace::new(names, labels, label_names)?);
        let levels = v
            .get("levels")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::invalid("LPS document needs a \"levels\" list"))?
            .iter()
            .map(|lvl| {
                lvl.as_array()
                    .ok_or_else(|| Error::invalid("LPS level must be a list"))?
                    .iter()
                    .map(rational::from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Lps::new(space, levels)
    }
}

fn index_lt(a: Option<usize>, b: Option<usize>) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => x < y,
        (Some(_), None) => true,
        (None, _) => false,
    }
}

/// A polynomial in an infinitesimal ε, stored sparsely without zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EpsPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl EpsPoly {
    pub fn zero() -> Self {
        EpsPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        EpsPoly::monomial(0, c)
    }

    pub fn monomial(exp: u32, c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        EpsPoly { coeffs }
    }

    pub fn coefficient(&self, exp: u32) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a non-zero coefficient.
    pub fn leading(&self) -> Option<(u32, &Rational)> {
        self.coeffs.iter().next().map(|(e, c)| (*e, c))
    }

    pub fn is_positive(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_positive())
    }

    pub fn add(&self, other: &EpsPoly) -> EpsPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            let v = coeffs.entry(*e).or_insert_with(Rational::zero);
            *v += c;
            if v.is_zero() {
                coeffs.remove(e);
            }
        }
        EpsPoly { coeffs }
    }

    pub fn neg(&self) -> EpsPoly {
        EpsPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &EpsPoly) -> EpsPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Rational) -> EpsPoly {
        if k.is_zero() {
            return EpsPoly::zero();
        }
        EpsPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &EpsPoly) -> EpsPoly {
        let mut out = EpsPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out = out.add(&EpsPoly::monomial(e1 + e2, c1 * c2));
            }
        }
        out
    }

    pub fn sum<'a>(it: impl IntoIterator<Item = &'a EpsPoly>) -> EpsPoly {
        it.into_iter().fold(EpsPoly::zero(), |acc, p| acc.add(p))
    }
}

impl PartialOrd for EpsPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Order of nonstandard values: the sign of the leading coefficient of the
/// difference decides.
impl Ord for EpsPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match self.sub(other).leading() {
            None => std::cmp::Ordering::Equal,
            Some((_, c)) if c.is_positive() => std::cmp::Ordering::Greater,
            Some(_) => std::cmp::Ordering::Less,
        }
    }
}

impl fmt::Display for EpsPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| match e {
                0 => c.to_string(),
                1 => format!("{c}ε"),
                _ => format!("{c}ε^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// x > n·y for every natural n; both must be positive.
pub fn infinitely_greater(x: &EpsPoly, y: &EpsPoly) -> Result<bool> {
    match (x.leading(), y.leading()) {
        (Some((ex, cx)), Some((ey, cy))) if cx.is_positive() && cy.is_positive() => Ok(ex < ey),
        _ => Err(Error::precondition("infinitely_greater needs positive arguments")),
    }
}

/// st(num/den). Fails on a zero denominator or an unbounded ratio.
pub fn standard_part(num: &EpsPoly, den: &EpsPoly) -> Result<Rational> {
    let Some((ed, cd)) = den.leading() else {
        return Err(Error::precondition("zero denominator"));
    };
    let Some((en, cn)) = num.leading() else {
        return Ok(Rational::zero());
    };
    match en.cmp(&ed) {
        std::cmp::Ordering::Greater => Ok(Rational::zero()),
        std::cmp::Ordering::Equal => Ok(cn / cd),
        std::cmp::Ordering::Less => Err(Error::precondition("ratio is infinite")),
    }
}

/// Cautious belief read off the ε-representation: for every relevant part
/// E_s, st(ν(Ω∖E)/ν(E_s)) = 0.
pub fn cautious_by_standard_part(mu: &Lps, e: &Event) -> bool {
    let nu = mu.to_nonstandard();
    let mass = |ev: &Event| EpsPoly::sum(ev.iter().map(|a| &nu[a]));
    let outside = mass(&e.complement());
    mu.space()
        .relevant_parts(e)
        .iter()
        .all(|(_, part)| matches!(standard_part(&outside, &mass(part)), Ok(v) if v.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    /// Three opponent strategies and one opponent type.
    fn example2() -> Lps {
        let space = Arc::new(
            LabeledSpace::new(
                vec!["s1|t".into(), "s2|t".into(), "s3|t".into()],
                vec![0, 1, 2],
                vec!["s1".into(), "s2".into(), "s3".into()],
            )
            .unwrap(),
        );
        Lps::new(
            space,
            vec![vec![int(1), int(0), int(0)], vec![int(0), ratio(1, 2), ratio(1, 2)]],
        )
        .unwrap()
    }

    fn ev(atoms: &[usize]) -> Event {
        Event::from_atoms(3, atoms.iter().copied())
    }

    #[test]
    fn iml_examples() {
        let mu = example2();
        assert_eq!(mu.iml_index(&ev(&[1, 2])), Some(2));
        assert_eq!(mu.iml_index(&ev(&[])), None);
        assert_eq!(mu.iml_index(&ev(&[0])), Some(1));
        assert!(mu.infinitely_more_likely(&ev(&[0]), &ev(&[2])).unwrap());
        assert!(!mu.infinitely_more_likely(&ev(&[1]), &ev(&[2])).unwrap());
        assert!(mu.infinitely_more_likely(&ev(&[1]), &ev(&[])).unwrap());
        assert!(mu.infinitely_more_likely(&ev(&[0, 1]), &ev(&[1])).is_err());
    }

    #[test]
    fn cautious_examples() {
        let mu = example2();
        assert_eq!(mu.cautiously_believes(&ev(&[0])).unwrap(), Some(1));
        assert_eq!(mu.cautiously_believes(&ev(&[0, 1])).unwrap(), None);
        assert_eq!(mu.cautiously_believes(&mu.space().full()).unwrap(), Some(2));
        assert!(mu.cautiously_believes(&ev(&[])).is_err());
    }

    #[test]
    fn weak_and_certain() {
        let mu = example2();
        assert!(mu.weakly_believes(&ev(&[0, 1])));
        assert!(mu.weakly_believes(&mu.space().full()));
        assert!(!mu.weakly_believes(&ev(&[2])));
        assert!(mu.certainly_believes(&mu.space().full()));
        assert!(!mu.certainly_believes(&ev(&[0])));
    }

    #[test]
    fn weak_assumption_zero_tail() {
        let mu = example2();
        assert_eq!(mu.weakly_assumed(&ev(&[0])).unwrap(), Some(1));
        // full space: level 2 is not a multiple of level 1 but m = 2 has no tail
        assert_eq!(mu.weakly_assumed(&mu.space().full()).unwrap(), Some(2));
    }

    #[test]
    fn full_belief() {
        let space = Arc::new(LabeledSpace::bare(vec!["l".into(), "c".into(), "r".into()]).unwrap());
        let nu = Lps::new(
            space.clone(),
            vec![vec![int(0), ratio(1, 2), ratio(1, 2)], vec![int(1), int(0), int(0)]],
        )
        .unwrap();
        let f = |a: &[usize]| Event::from_atoms(3, a.iter().copied());
        assert!(nu.fully_believes(&f(&[1, 2])).unwrap());
        assert!(!nu.fully_believes(&f(&[1])).unwrap());
        assert!(nu.fully_believes(&f(&[0, 1, 2])).unwrap());
        let two_types = Lps::from_json(&json!({"space": [["l","t1"],["l","t2"]], "levels": [[1, 0]]})).unwrap();
        assert!(two_types.fully_believes(&Event::from_atoms(2, [0])).is_err());
    }

    #[test]
    fn nonstandard_forms() {
        let mu = example2();
        let nu = mu.to_nonstandard();
        assert_eq!(nu[2].coefficient(0), int(0));
        assert_eq!(nu[2].coefficient(1), ratio(1, 2));
        assert_eq!(nu[0], EpsPoly::constant(int(1)).sub(&EpsPoly::monomial(1, int(1))));
        assert_eq!(EpsPoly::sum(nu.iter()), EpsPoly::constant(int(1)));

        let single = Lps::new(mu.space().clone(), vec![vec![ratio(1, 3), ratio(1, 3), ratio(1, 3)]]).unwrap();
        assert!(single
            .to_nonstandard()
            .iter()
            .all(|p| *p == EpsPoly::constant(ratio(1, 3))));
    }

    #[test]
    fn infinitely_greater_examples() {
        let one = EpsPoly::constant(int(1));
        let e = EpsPoly::monomial(1, int(1));
        assert!(infinitely_greater(&one, &e).unwrap());
        assert_eq!(standard_part(&e, &one).unwrap(), int(0));
        assert!(!infinitely_greater(&e, &e).unwrap());
        assert_eq!(standard_part(&e, &e).unwrap(), int(1));
        let x = EpsPoly::monomial(1, int(2));
        let y = EpsPoly::monomial(2, int(3));
        assert!(infinitely_greater(&x, &y).unwrap());
        assert_eq!(standard_part(&y, &x).unwrap(), int(0));
        assert!(standard_part(&one, &EpsPoly::zero()).is_err());
        assert!(infinitely_greater(&one.neg(), &e).is_err());
        assert!(one > e && e > y);
    }

    #[test]
    fn standard_part_matches_cautious_on_example() {
        let mu = example2();
        for atoms in [vec![0], vec![0, 1], vec![1, 2], vec![0, 1, 2]] {
            let e = ev(&atoms);
            assert_eq!(
                cautious_by_standard_part(&mu, &e),
                mu.cautiously_believes(&e).unwrap().is_some(),
                "{atoms:?}"
            );
        }
    }

    #[test]
    fn json_round_trip() {
        let doc = json!({"space": [["l","t1"],["r","t1"],["l","t2"]], "levels": [["1/2", 0, "1/2"], [0, 1, 0]]});
        let mu = Lps::from_json(&doc).unwrap();
        assert_eq!(mu.space().num_labels(), 2);
        assert_eq!(mu.space().atoms_with_label(0), &[0, 2]);
        assert_eq!(Lps::from_json(&mu.to_json()).unwrap(), mu);
        let bad = json!({"space": [["l","t1"]], "levels": [["1/2"]]});
        assert!(Lps::from_json(&bad).is_err());
    }

    #[test]
    fn lcps_and_support_predicates() {
        let mu = example2();
        assert!(mu.is_lcps());
        assert!(mu.is_full_support());
        assert!(mu.has_full_marginal_support());
        let marg = mu.marginal();
        assert!(marg.space().is_bare());
        assert_eq!(marg.levels(), mu.levels());
    }
}
