//! Negated external support formulas and loop formulas.
//!
//! For a formula `F` and a set `Y` of its atoms, `NES_F(Y)` is built by
//!
//! ```text
//! NES_A(Y)      = ⊥ if A ∈ Y, A otherwise
//! NES_⊥(Y)      = ⊥
//! NES_{F∧G}(Y)  = NES_F(Y) ∧ NES_G(Y)
//! NES_{F∨G}(Y)  = NES_F(Y) ∨ NES_G(Y)
//! NES_{F→G}(Y)  = (NES_F(Y) → NES_G(Y)) ∧ (F → G)
//! ```
//!
//! and the loop formula of `Y` is `⋀_{A∈Y} (A → ¬NES_F(Y))`. An
//! interpretation over the atoms of `F` is stable iff it satisfies `F` and
//! every loop formula; restricting `Y` to the loops of the PNN graph keeps
//! that characterization, restricting it to the loops of the SP graph does
//! not.

use std::collections::BTreeSet;

use crate::depgraph::{DepGraph, GraphKind, DEFAULT_LOOP_CAP};
use crate::error::{atom_set_text, Error, Result};
use crate::formula::{Atom, Formula, Theory};
use crate::semantics::{satisfies, Interpretation, DEFAULT_CAP};

fn check_within(f: &Formula, atoms: &BTreeSet<Atom>) -> Result<BTreeSet<Atom>> {
    let universe = f.atoms();
    if atoms.is_subset(&universe) {
        Ok(universe)
    } else {
        Err(Error::AtomsOutsideFormula {
            atoms: atom_set_text(atoms.difference(&universe)),
        })
    }
}

fn nes_unchecked(f: &Formula, y: &BTreeSet<Atom>) -> Formula {
    match f {
        Formula::Bottom => Formula::Bottom,
        Formula::Atom(a) if y.contains(a) => Formula::Bottom,
        Formula::Atom(_) => f.clone(),
        Formula::And(l, r) => Formula::and(nes_unchecked(l, y), nes_unchecked(r, y)),
        Formula::Or(l, r) => Formula::or(nes_unchecked(l, y), nes_unchecked(r, y)),
        Formula::Implies(l, r) => Formula::and(
            Formula::implies(nes_unchecked(l, y), nes_unchecked(r, y)),
            f.clone(),
        ),
    }
}

/// `NES_F(Y)`. `y` must consist of atoms occurring in `f`.
pub fn nes(f: &Formula, y: &BTreeSet<Atom>) -> Result<Formula> {
    check_within(f, y)?;
    Ok(nes_unchecked(f, y))
}

fn loop_formula_unchecked(f: &Formula, y: &BTreeSet<Atom>) -> Formula {
    let negated_support = Formula::not(nes_unchecked(f, y));
    Formula::conjunction(
        y.iter()
            .map(|a| Formula::implies(Formula::Atom(a.clone()), negated_support.clone())),
    )
    .expect("nonempty loop")
}

/// `⋀_{A∈Y} (A → ¬NES_F(Y))`, conjuncts in atom order. `y` must be
/// nonempty and contained in the atoms of `f`.
pub fn loop_formula(f: &Formula, y: &BTreeSet<Atom>) -> Result<Formula> {
    if y.is_empty() {
        return Err(Error::EmptyLoopSet);
    }
    check_within(f, y)?;
    Ok(loop_formula_unchecked(f, y))
}

fn check_candidate(i: &Interpretation, f: &Formula, cap: usize) -> Result<BTreeSet<Atom>> {
    let universe = check_within(f, i.atoms())?;
    if universe.len() > cap {
        return Err(Error::CapExceeded {
            cap,
            atoms: universe.len(),
        });
    }
    Ok(universe)
}

/// `i` satisfies `f` and the loop formula of every nonempty set of atoms of `f`.
pub fn stable_via_all_sets(i: &Interpretation, f: &Formula) -> Result<bool> {
    let universe: Vec<Atom> = check_candidate(i, f, DEFAULT_CAP)?.into_iter().collect();
    if !satisfies(i, f) {
        return Ok(false);
    }
    let n = universe.len();
    Ok((1u64..(1u64 << n)).all(|mask| {
        let y: BTreeSet<Atom> = universe
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, a)| a.clone())
            .collect();
        satisfies(i, &loop_formula_unchecked(f, &y))
    }))
}

/// Loops of `f`: the strongly connected subsets of the chosen graph of `{f}`.
pub fn loops(f: &Formula, kind: GraphKind) -> Result<Vec<BTreeSet<Atom>>> {
    DepGraph::build(&Theory::from(f.clone()), kind).strongly_connected_subsets(DEFAULT_LOOP_CAP)
}

/// `i` satisfies `f` and the loop formula of every loop of the chosen graph.
/// Matches stability for [`GraphKind::Pnn`]; with [`GraphKind::Sp`] it can
/// accept unstable models.
pub fn stable_via_loops(i: &Interpretation, f: &Formula, kind: GraphKind) -> Result<bool> {
    check_candidate(i, f, DEFAULT_LOOP_CAP)?;
    let loops = loops(f, kind)?;
    if !satisfies(i, f) {
        return Ok(false);
    }
    Ok(loops
        .iter()
        .all(|y| satisfies(i, &loop_formula_unchecked(f, y))))
}

/// One loop together with its formulas, as reported by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LoopEntry {
    pub set: BTreeSet<Atom>,
    pub nes: Formula,
    pub loop_formula: Formula,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub satisfied: Option<bool>,
}

/// Every loop of `f` under `kind` with its NES and loop formula, evaluated
/// under `i` when given.
pub fn loop_table(
    f: &Formula,
    kind: GraphKind,
    i: Option<&Interpretation>,
) -> Result<Vec<LoopEntry>> {
    Ok(loops(f, kind)?
        .into_iter()
        .map(|set| {
            let nes = nes_unchecked(f, &set);
            let loop_formula = loop_formula_unchecked(f, &set);
            let satisfied = i.map(|i| satisfies(i, &loop_formula));
            LoopEntry {
                set,
                nes,
                loop_formula,
                satisfied,
            }
        })
        .collect())
}

/// Truth-table equivalence over the union of both formulas' atoms.
pub fn equivalent(a: &Formula, b: &Formula) -> bool {
    let universe: Vec<Atom> = a.atoms().union(&b.atoms()).cloned().collect();
    assert!(universe.len() < 32, "too many atoms for a truth table");
    (0u64..(1u64 << universe.len())).all(|mask| {
        let value = |x: &Atom| {
            universe
                .binary_search(x)
                .is_ok_and(|k| mask & (1 << k) != 0)
        };
        a.eval(&value) == b.eval(&value)
    })
}

pub fn is_tautology(f: &Formula) -> bool {
    equivalent(f, &Formula::top())
}

pub fn is_unsatisfiable(f: &Formula) -> bool {
    equivalent(f, &Formula::Bottom)
}
