//! Splitting a conjunction `F ∧ G` along a partition `{P, Q}` of its atoms.
//!
//! When every strictly positive atom of `F` is in `P`, every strictly
//! positive atom of `G` is in `Q`, and no strongly connected component of the
//! PNN graph of `F ∧ G` straddles the partition, the stable models of `F ∧ G`
//! are exactly the sets that are stable for both `F ∧ ⋀_{A∈Q}(A ∨ ¬A)` and
//! `G ∧ ⋀_{A∈P}(A ∨ ¬A)`. [`check_split`] evaluates the conditions and
//! compares the three enumerations directly.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::depgraph::{DepGraph, GraphKind};
use crate::error::{atom_set_text, Error, Result};
use crate::formula::{spos, Atom, Formula, Theory};
use crate::semantics::{Enumerator, Interpretation};

/// `f ∧ (A ∨ ¬A)` for each `A` in `xs`, in atom order.
pub fn choice_augment(f: &Formula, xs: &BTreeSet<Atom>) -> Formula {
    xs.iter().fold(f.clone(), |acc, a| {
        let atom = Formula::Atom(a.clone());
        Formula::and(acc, Formula::or(atom.clone(), Formula::not(atom)))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub holds: bool,
    /// Atoms (or the component) violating the condition; empty when it holds.
    pub offending: BTreeSet<Atom>,
}

impl Condition {
    fn from_offending(offending: BTreeSet<Atom>) -> Self {
        Condition {
            holds: offending.is_empty(),
            offending,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub graph: GraphKind,
    pub cond_i: Condition,
    pub cond_ii: Condition,
    pub cond_iii: Condition,
    pub equivalence_holds: bool,
    pub stable_whole: Vec<Interpretation>,
    pub stable_part_f: Vec<Interpretation>,
    pub stable_part_g: Vec<Interpretation>,
    /// Sets stable for both augmented parts.
    pub stable_both_parts: Vec<Interpretation>,
}

impl SplitReport {
    pub fn conditions_hold(&self) -> bool {
        self.cond_i.holds && self.cond_ii.holds && self.cond_iii.holds
    }
}

/// Conditions (i)-(iii) alone, without enumerating models.
pub fn split_conditions(
    f: &Formula,
    g: &Formula,
    p: &BTreeSet<Atom>,
    q: &BTreeSet<Atom>,
    kind: GraphKind,
) -> Result<(Condition, Condition, Condition)> {
    let whole = Formula::and(f.clone(), g.clone());
    let universe = whole.atoms();
    check_partition(&universe, p, q)?;

    let cond_i = Condition::from_offending(spos(f).difference(p).cloned().collect());
    let cond_ii = Condition::from_offending(spos(g).difference(q).cloned().collect());
    let straddling = DepGraph::build(&Theory::from(whole), kind)
        .sccs()
        .into_iter()
        .find(|c| !c.is_subset(p) && !c.is_subset(q))
        .unwrap_or_default();
    Ok((cond_i, cond_ii, Condition::from_offending(straddling)))
}

fn check_partition(
    universe: &BTreeSet<Atom>,
    p: &BTreeSet<Atom>,
    q: &BTreeSet<Atom>,
) -> Result<()> {
    let fail = |reason: String| Error::NotAPartition {
        universe: atom_set_text(universe),
        reason,
    };
    let overlap: Vec<&Atom> = p.intersection(q).collect();
    if !overlap.is_empty() {
        return Err(fail(format!("{} in both parts", atom_set_text(overlap))));
    }
    let covered: BTreeSet<Atom> = p.union(q).cloned().collect();
    if &covered != universe {
        let missing: Vec<&Atom> = universe.difference(&covered).collect();
        let extra: Vec<&Atom> = covered.difference(universe).collect();
        let reason = if !missing.is_empty() {
            format!("{} not covered", atom_set_text(missing))
        } else {
            format!("{} do not occur in the formula", atom_set_text(extra))
        };
        return Err(fail(reason));
    }
    Ok(())
}

/// Evaluates the splitting conditions on the `kind` graph and compares the
/// stable models of `f ∧ g` with those stable for both augmented parts, all
/// enumerated over the atoms of `f ∧ g`.
pub fn check_split_with(
    enumerator: &Enumerator,
    f: &Formula,
    g: &Formula,
    p: &BTreeSet<Atom>,
    q: &BTreeSet<Atom>,
    kind: GraphKind,
) -> Result<SplitReport> {
    let (cond_i, cond_ii, cond_iii) = split_conditions(f, g, p, q, kind)?;
    let whole = Formula::and(f.clone(), g.clone());
    let universe = whole.atoms();
    enumerator.check_cap(universe.len())?;

    let part_f = Theory::from(choice_augment(f, q));
    let part_g = Theory::from(choice_augment(g, p));
    let stable_whole = enumerator.stable_models_in(&Theory::from(whole), &universe)?;
    let stable_part_f = enumerator.stable_models_in(&part_f, &universe)?;
    let stable_part_g = enumerator.stable_models_in(&part_g, &universe)?;
    let stable_both_parts: Vec<Interpretation> = stable_part_f
        .iter()
        .filter(|i| stable_part_g.contains(i))
        .cloned()
        .collect();

    Ok(SplitReport {
        graph: kind,
        cond_i,
        cond_ii,
        cond_iii,
        equivalence_holds: stable_whole == stable_both_parts,
        stable_whole,
        stable_part_f,
        stable_part_g,
        stable_both_parts,
    })
}

pub fn check_split(
    f: &Formula,
    g: &Formula,
    p: &BTreeSet<Atom>,
    q: &BTreeSet<Atom>,
    kind: GraphKind,
) -> Result<SplitReport> {
    check_split_with(&Enumerator::default(), f, g, p, q, kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use crate::semantics::stable_models;

    fn set(names: &[&str]) -> BTreeSet<Atom> {
        names.iter().map(|n| Atom::new(n).unwrap()).collect()
    }

    fn f(text: &str) -> Formula {
        parse_formula(text).unwrap()
    }

    fn i(names: &[&str]) -> Interpretation {
        Interpretation::from_names(names)
    }

    #[test]
    fn augment() {
        assert_eq!(
            choice_augment(&f("p -> q"), &set(&["p"])),
            f("(p -> q) & (p | not p)")
        );
        assert_eq!(choice_augment(&f("p -> q"), &set(&[])), f("p -> q"));
        assert_eq!(
            choice_augment(&f("a"), &set(&["c", "b"])),
            f("a & (b | not b) & (c | not c)")
        );
        let free = Theory::from(choice_augment(&Formula::top(), &set(&["p"])));
        assert_eq!(stable_models(&free).unwrap(), vec![i(&[]), i(&["p"])]);
    }

    #[test]
    fn sp_counterexample() {
        let (ff, gg) = (f("p -> q"), f("((q -> p) -> p) -> p"));
        let r = check_split(&ff, &gg, &set(&["q"]), &set(&["p"]), GraphKind::Sp).unwrap();
        assert!(r.conditions_hold());
        assert!(!r.equivalence_holds);
        assert!(r.stable_part_f.contains(&i(&["p", "q"])));
        assert!(r.stable_part_g.contains(&i(&["p", "q"])));
        assert!(!r.stable_whole.contains(&i(&["p", "q"])));
        assert_eq!(r.stable_whole, vec![i(&[])]);
    }

    #[test]
    fn pnn_rejects_the_counterexample_partition() {
        let (ff, gg) = (f("p -> q"), f("((q -> p) -> p) -> p"));
        let r = check_split(&ff, &gg, &set(&["q"]), &set(&["p"]), GraphKind::Pnn).unwrap();
        assert!(r.cond_i.holds && r.cond_ii.holds);
        assert!(!r.cond_iii.holds);
        assert_eq!(r.cond_iii.offending, set(&["p", "q"]));
    }

    #[test]
    fn sound_split() {
        let r = check_split(
            &f("p"),
            &f("p -> q"),
            &set(&["p"]),
            &set(&["q"]),
            GraphKind::Pnn,
        )
        .unwrap();
        assert!(r.conditions_hold());
        assert!(r.equivalence_holds);
        assert_eq!(r.stable_whole, vec![i(&["p", "q"])]);
    }

    #[test]
    fn symmetric() {
        let (ff, gg) = (f("p -> q"), f("((q -> p) -> p) -> p"));
        let (p, q) = (set(&["q"]), set(&["p"]));
        for kind in [GraphKind::Sp, GraphKind::Pnn] {
            let a = check_split(&ff, &gg, &p, &q, kind).unwrap();
            let b = check_split(&gg, &ff, &q, &p, kind).unwrap();
            assert_eq!(a.cond_i, b.cond_ii);
            assert_eq!(a.cond_ii, b.cond_i);
            assert_eq!(a.cond_iii, b.cond_iii);
            assert_eq!(a.equivalence_holds, b.equivalence_holds);
        }
    }

    #[test]
    fn failing_conditions_name_atoms() {
        let r = check_split(
            &f("p & q"),
            &f("r"),
            &set(&["p"]),
            &set(&["q", "r"]),
            GraphKind::Pnn,
        )
        .unwrap();
        assert!(!r.cond_i.holds);
        assert_eq!(r.cond_i.offending, set(&["q"]));
        assert!(r.cond_ii.holds);
    }

    #[test]
    fn partition_errors() {
        let (ff, gg) = (f("p"), f("q"));
        for (p, q) in [
            (set(&["p"]), set(&["p", "q"])),
            (set(&["p"]), set(&[])),
            (set(&["p", "z"]), set(&["q"])),
        ] {
            assert!(matches!(
                check_split(&ff, &gg, &p, &q, GraphKind::Pnn),
                Err(Error::NotAPartition { .. })
            ));
        }
    }
}
