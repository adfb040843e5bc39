//! Interpretations, the reduct, and exhaustive enumeration of classical,
//! stable, supported and pointwise stable models.
//!
//! The single-interpretation checks ([`is_stable`], [`is_supported`],
//! [`is_pointwise_stable`]) work directly on the formula tree. The
//! enumerators compile the theory against its atom universe and test
//! bitmasks instead; the two routes are cross-checked in the tests.

mod compiled;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{atom_set_text, Error, Result};
use crate::exec::{self, Exec};
use crate::formula::{as_nondisjunctive_rule, Atom, Formula, Theory};

use compiled::{Mask, Node, Universe};

pub use compiled::MASK_BITS as MAX_CAP;

/// Default bound on the number of atoms an enumeration may range over.
pub const DEFAULT_CAP: usize = 20;

/// A finite set of atoms: exactly these are true, every other atom is false.
///
/// Ordered by cardinality first, then lexicographically by atom name.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Interpretation(BTreeSet<Atom>);

impl Interpretation {
    pub fn new(atoms: BTreeSet<Atom>) -> Self {
        Interpretation(atoms)
    }

    pub fn empty() -> Self {
        Interpretation::default()
    }

    /// Panics on invalid names; intended for literals.
    pub fn from_names(names: &[&str]) -> Self {
        names
            .iter()
            .map(|n| Atom::new(n).expect("invalid atom name"))
            .collect()
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.0.contains(a)
    }

    pub fn atoms(&self) -> &BTreeSet<Atom> {
        &self.0
    }

    pub fn iter(&self) -> std::collections::btree_set::Iter<'_, Atom> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn without(&self, a: &Atom) -> Interpretation {
        let mut atoms = self.0.clone();
        atoms.remove(a);
        Interpretation(atoms)
    }

    pub fn into_atoms(self) -> BTreeSet<Atom> {
        self.0
    }
}

impl Ord for Interpretation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Interpretation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Atom> for Interpretation {
    fn from_iter<I: IntoIterator<Item = Atom>>(iter: I) -> Self {
        Interpretation(iter.into_iter().collect())
    }
}

impl From<BTreeSet<Atom>> for Interpretation {
    fn from(atoms: BTreeSet<Atom>) -> Self {
        Interpretation(atoms)
    }
}

/// `∅` or `{p q}`.
impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let names: Vec<&str> = self.0.iter().map(Atom::name).collect();
        write!(f, "{{{}}}", names.join(" "))
    }
}

impl fmt::Debug for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn satisfies(i: &Interpretation, f: &Formula) -> bool {
    f.eval(&|a| i.contains(a))
}

pub fn satisfies_theory(i: &Interpretation, t: &Theory) -> bool {
    t.iter().all(|f| satisfies(i, f))
}

/// `F^I`: every maximal subformula not satisfied by `i` replaced by `⊥`.
///
/// Computed top-down: an unsatisfied node becomes `⊥`, a satisfied one keeps
/// its connective over the reducts of its children.
pub fn reduct(f: &Formula, i: &Interpretation) -> Formula {
    if !satisfies(i, f) {
        return Formula::Bottom;
    }
    match f {
        Formula::Bottom => Formula::Bottom,
        Formula::Atom(_) => f.clone(),
        Formula::And(l, r) => Formula::and(reduct(l, i), reduct(r, i)),
        Formula::Or(l, r) => Formula::or(reduct(l, i), reduct(r, i)),
        Formula::Implies(l, r) => Formula::implies(reduct(l, i), reduct(r, i)),
    }
}

pub fn reduct_theory(t: &Theory, i: &Interpretation) -> Theory {
    t.iter().map(|f| reduct(f, i)).collect()
}

/// Calls `visit` on every proper subset of `i` until it returns `true`.
fn any_proper_subset(i: &Interpretation, visit: impl Fn(&dyn Fn(&Atom) -> bool) -> bool) -> bool {
    let members: Vec<&Atom> = i.iter().collect();
    assert!(
        members.len() < 64,
        "interpretation too large to enumerate subsets"
    );
    let full: u64 = if members.is_empty() {
        0
    } else {
        u64::MAX >> (64 - members.len())
    };
    (0..full).any(|sub| {
        let value = |a: &Atom| match members.binary_search(&a) {
            Ok(idx) => sub & (1 << idx) != 0,
            Err(_) => false,
        };
        visit(&value)
    })
}

/// `i` satisfies `t` and is minimal among the models of `t^i`.
///
/// Exponential in `|i|`; only subsets of `i` are tried because the reduct
/// mentions no atom outside `i`.
pub fn is_stable(i: &Interpretation, t: &Theory) -> bool {
    if !satisfies_theory(i, t) {
        return false;
    }
    let universe = t.atoms();
    if !i.atoms().is_subset(&universe) {
        // An atom the theory never mentions can be dropped without
        // affecting the reduct.
        return false;
    }
    let reduct = reduct_theory(t, i);
    !any_proper_subset(i, |value| reduct.iter().all(|f| f.eval(value)))
}

/// `i` satisfies `t` and no `i \ {A}` satisfies `t^i`.
pub fn is_pointwise_stable(i: &Interpretation, t: &Theory) -> bool {
    if !satisfies_theory(i, t) {
        return false;
    }
    let reduct = reduct_theory(t, i);
    !i.iter().any(|a| {
        let smaller = i.without(a);
        satisfies_theory(&smaller, &reduct)
    })
}

fn nondisjunctive_rules(t: &Theory) -> Result<Vec<(Formula, &Atom)>> {
    t.iter()
        .map(|f| {
            as_nondisjunctive_rule(f).ok_or_else(|| Error::NotNondisjunctive {
                formula: f.to_string(),
            })
        })
        .collect()
}

/// `i` is a model of `t` and each of its atoms heads a rule whose body `i`
/// satisfies. Every member of `t` must be a nondisjunctive rule or a fact.
pub fn is_supported(i: &Interpretation, t: &Theory) -> Result<bool> {
    let rules = nondisjunctive_rules(t)?;
    if !satisfies_theory(i, t) {
        return Ok(false);
    }
    Ok(i.iter().all(|a| {
        rules
            .iter()
            .any(|(body, head)| *head == a && satisfies(i, body))
    }))
}

/// Clark completion: for each atom `A` of `t`, `A <-> B1 | ... | Bn` over the
/// bodies of the rules with head `A`, in rule order (`⊥` when there are none).
pub fn completion(t: &Theory) -> Result<Theory> {
    let rules = nondisjunctive_rules(t)?;
    Ok(t.atoms()
        .into_iter()
        .map(|a| {
            let bodies = rules
                .iter()
                .filter(|(_, head)| **head == a)
                .map(|(body, _)| body.clone());
            Formula::iff(Formula::Atom(a.clone()), Formula::disjunction(bodies))
        })
        .collect())
}

/// Exhaustive model enumeration bounded by an atom cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumerator {
    cap: usize,
    exec: Exec,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            cap: DEFAULT_CAP,
            exec: Exec::default(),
        }
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(self, cap: usize) -> Result<Self> {
        if cap > MAX_CAP {
            return Err(Error::CapTooLarge {
                requested: cap,
                max: MAX_CAP,
            });
        }
        Ok(Enumerator { cap, ..self })
    }

    pub fn with_exec(self, exec: Exec) -> Self {
        Enumerator { exec, ..self }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub(crate) fn check_cap(&self, atoms: usize) -> Result<()> {
        if atoms > self.cap {
            Err(Error::CapExceeded {
                cap: self.cap,
                atoms,
            })
        } else {
            Ok(())
        }
    }

    fn universe_for(&self, t: &Theory, universe: &BTreeSet<Atom>) -> Result<Universe> {
        let atoms = t.atoms();
        if !atoms.is_subset(universe) {
            return Err(Error::AtomsOutsideUniverse {
                atoms: atom_set_text(atoms.difference(universe)),
            });
        }
        self.check_cap(universe.len())?;
        Ok(Universe::new(universe))
    }

    fn collect(
        &self,
        u: &Universe,
        keep: impl Fn(Mask) -> bool + Sync + Send,
    ) -> Vec<Interpretation> {
        let masks = exec::filter_range(self.exec, u.subset_count(), |m| keep(m as Mask));
        let mut out: Vec<Interpretation> = masks
            .into_iter()
            .map(|m| u.interpretation(m as Mask))
            .collect();
        out.sort();
        out
    }

    /// All subsets of `universe` satisfying every member of `t`.
    pub fn classical_models(
        &self,
        t: &Theory,
        universe: &BTreeSet<Atom>,
    ) -> Result<Vec<Interpretation>> {
        let u = self.universe_for(t, universe)?;
        let nodes: Vec<Node> = t.iter().map(|f| u.compile(f)).collect();
        Ok(self.collect(&u, |m| compiled::all_hold(&nodes, m)))
    }

    pub fn stable_models(&self, t: &Theory) -> Result<Vec<Interpretation>> {
        self.stable_models_in(t, &t.atoms())
    }

    /// Stable models among the subsets of `universe` (a superset of the
    /// theory's atoms). Atoms outside the theory never occur in a stable
    /// model, so the result does not depend on the extra atoms.
    pub fn stable_models_in(
        &self,
        t: &Theory,
        universe: &BTreeSet<Atom>,
    ) -> Result<Vec<Interpretation>> {
        let u = self.universe_for(t, universe)?;
        let nodes: Vec<Node> = t.iter().map(|f| u.compile(f)).collect();
        Ok(self.collect(&u, |m| compiled::is_stable_mask(&nodes, m)))
    }

    pub fn pointwise_stable_models(&self, t: &Theory) -> Result<Vec<Interpretation>> {
        let u = self.universe_for(t, &t.atoms())?;
        let nodes: Vec<Node> = t.iter().map(|f| u.compile(f)).collect();
        Ok(self.collect(&u, |m| compiled::is_pointwise_stable_mask(&nodes, m)))
    }

    /// Errors unless every member is a nondisjunctive rule or a fact.
    pub fn supported_models(&self, t: &Theory) -> Result<Vec<Interpretation>> {
        let rules = nondisjunctive_rules(t)?;
        let u = self.universe_for(t, &t.atoms())?;
        let nodes: Vec<Node> = t.iter().map(|f| u.compile(f)).collect();
        let rules: Vec<(Node, Mask)> = rules
            .iter()
            .map(|(body, head)| {
                let head_mask = u
                    .mask_of(&Interpretation::from_iter([(*head).clone()]))
                    .expect("head atom in universe");
                (u.compile(body), head_mask)
            })
            .collect();
        Ok(self.collect(&u, |m| compiled::is_supported_mask(&nodes, &rules, m)))
    }

    /// Every model list for `t` over `atoms(t)`; supported models only when
    /// `t` consists of nondisjunctive rules.
    pub fn report(&self, t: &Theory) -> Result<ModelReport> {
        let universe = t.atoms();
        let supported = if t.is_nondisjunctive() {
            Some(self.supported_models(t)?)
        } else {
            None
        };
        Ok(ModelReport {
            universe: universe.iter().cloned().collect(),
            classical: self.classical_models(t, &universe)?,
            stable: self.stable_models(t)?,
            supported,
            pointwise_stable: self.pointwise_stable_models(t)?,
        })
    }
}

pub fn classical_models(t: &Theory, universe: &BTreeSet<Atom>) -> Result<Vec<Interpretation>> {
    Enumerator::default().classical_models(t, universe)
}

pub fn stable_models(t: &Theory) -> Result<Vec<Interpretation>> {
    Enumerator::default().stable_models(t)
}

pub fn supported_models(t: &Theory) -> Result<Vec<Interpretation>> {
    Enumerator::default().supported_models(t)
}

pub fn pointwise_stable_models(t: &Theory) -> Result<Vec<Interpretation>> {
    Enumerator::default().pointwise_stable_models(t)
}

/// All model lists of a theory over its own atoms, each sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelReport {
    pub universe: Vec<Atom>,
    pub classical: Vec<Interpretation>,
    pub stable: Vec<Interpretation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub supported: Option<Vec<Interpretation>>,
    pub pointwise_stable: Vec<Interpretation>,
}
