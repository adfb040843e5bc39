//! Propositional formulas built from atoms and `⊥` with `∧`, `∨` and `→`.
//!
//! Negation and the biconditional only exist in the surface syntax: the
//! parser desugars `not F` into `F -> bot` and `F <-> G` into
//! `(F -> G) & (G -> F)`, so every analysis in this crate sees the three
//! binary connectives alone.

mod occurrence;
mod parser;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub(crate) use occurrence::as_nondisjunctive_rule;
pub use occurrence::positive_nonnegated;
pub use occurrence::{
    classify_occurrences, is_nondisjunctive_rule, rules_of, spos, OccurrenceContext, RuleOccurrence,
};
pub use parser::{parse_formula, parse_theory};

/// A propositional atom. Names follow `[a-z][A-Za-z0-9_]*` and exclude the
/// reserved words `not`, `bot` and `false`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Self> {
        if is_atom_name(name) {
            Ok(Atom(Arc::from(name)))
        } else {
            Err(Error::InvalidAtom(name.to_string()))
        }
    }

    pub(crate) fn new_unchecked(name: &str) -> Self {
        debug_assert!(is_atom_name(name), "invalid atom name {name:?}");
        Atom(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

pub(crate) const KEYWORDS: [&str; 3] = ["not", "bot", "false"];

fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !KEYWORDS.contains(&name)
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for Atom {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// Parses a comma- or whitespace-separated list of atom names.
pub fn parse_atom_list(text: &str) -> Result<BTreeSet<Atom>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(Atom::new)
        .collect()
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Bottom,
    Atom(Atom),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Builds an atom formula, panicking on an invalid name. Meant for
    /// literals in code and tests; use [`Atom::new`] for untrusted input.
    pub fn atom(name: &str) -> Self {
        Formula::Atom(Atom::new(name).expect("invalid atom name"))
    }

    pub fn and(left: Formula, right: Formula) -> Self {
        Formula::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Formula, right: Formula) -> Self {
        Formula::Or(Box::new(left), Box::new(right))
    }

    pub fn implies(antecedent: Formula, consequent: Formula) -> Self {
        Formula::Implies(Box::new(antecedent), Box::new(consequent))
    }

    /// `F -> ⊥`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::implies(f, Formula::Bottom)
    }

    /// `(F -> G) & (G -> F)`.
    pub fn iff(left: Formula, right: Formula) -> Self {
        Formula::and(
            Formula::implies(left.clone(), right.clone()),
            Formula::implies(right, left),
        )
    }

    /// The tautology `⊥ -> ⊥`.
    pub fn top() -> Self {
        Formula::not(Formula::Bottom)
    }

    /// Left-nested conjunction of `items`; `None` when empty.
    pub fn conjunction(items: impl IntoIterator<Item = Formula>) -> Option<Self> {
        items.into_iter().reduce(Formula::and)
    }

    /// Left-nested disjunction of `items`, `⊥` when empty.
    pub fn disjunction(items: impl IntoIterator<Item = Formula>) -> Self {
        items
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or(Formula::Bottom)
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, Formula::Bottom)
    }

    /// Children in path order: antecedent before consequent.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Bottom | Formula::Atom(_) => Vec::new(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => vec![l, r],
        }
    }

    /// The subformula at `path` (a sequence of child indices), if any.
    pub fn at_path(&self, path: &[usize]) -> Option<&Formula> {
        path.iter()
            .try_fold(self, |node, &idx| node.children().get(idx).copied())
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Bottom => {}
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Classical truth value under the assignment `value`.
    pub fn eval<F: Fn(&Atom) -> bool + ?Sized>(&self, value: &F) -> bool {
        match self {
            Formula::Bottom => false,
            Formula::Atom(a) => value(a),
            Formula::And(l, r) => l.eval(value) && r.eval(value),
            Formula::Or(l, r) => l.eval(value) || r.eval(value),
            Formula::Implies(l, r) => !l.eval(value) || r.eval(value),
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }
}

// Printing precedence; higher binds tighter.
const PREC_IMPLIES: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;

impl Formula {
    fn precedence(&self) -> u8 {
        match self {
            Formula::Bottom | Formula::Atom(_) => PREC_UNARY + 1,
            Formula::Implies(_, c) if c.is_bottom() => PREC_UNARY,
            Formula::And(..) => PREC_AND,
            Formula::Or(..) => PREC_OR,
            Formula::Implies(..) => PREC_IMPLIES,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        if self.precedence() < min_prec {
            f.write_str("(")?;
            self.write_bare(f)?;
            f.write_str(")")
        } else {
            self.write_bare(f)
        }
    }

    fn write_bare(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Bottom => f.write_str("bot"),
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Implies(a, c) if c.is_bottom() => {
                f.write_str("not ")?;
                a.write_at(f, PREC_UNARY)
            }
            // `&` and `|` parse left-associatively, so a right operand of the
            // same connective needs parentheses to round-trip.
            Formula::And(l, r) => {
                l.write_at(f, PREC_AND)?;
                f.write_str(" & ")?;
                r.write_at(f, PREC_AND + 1)
            }
            Formula::Or(l, r) => {
                l.write_at(f, PREC_OR)?;
                f.write_str(" | ")?;
                r.write_at(f, PREC_OR + 1)
            }
            Formula::Implies(a, c) => {
                a.write_at(f, PREC_IMPLIES + 1)?;
                f.write_str(" -> ")?;
                c.write_at(f, PREC_IMPLIES)
            }
        }
    }
}

/// Canonical text; reparses to an equal formula.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_bare(f)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}

/// An ordered collection of formulas. Duplicates are kept.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Theory {
    formulas: Vec<Formula>,
}

impl Theory {
    pub fn new(formulas: impl IntoIterator<Item = Formula>) -> Self {
        Theory {
            formulas: formulas.into_iter().collect(),
        }
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Formula> {
        self.formulas.iter()
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn push(&mut self, f: Formula) {
        self.formulas.push(f);
    }

    /// Atoms with at least one occurrence in some member.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for f in &self.formulas {
            f.collect_atoms(&mut out);
        }
        out
    }

    /// All members folded into one left-nested conjunction; the empty theory
    /// becomes `⊥ -> ⊥`.
    pub fn conjunction(&self) -> Formula {
        Formula::conjunction(self.formulas.iter().cloned()).unwrap_or_else(Formula::top)
    }

    /// True iff every member is a nondisjunctive rule or a fact.
    pub fn is_nondisjunctive(&self) -> bool {
        self.formulas.iter().all(is_nondisjunctive_rule)
    }
}

impl From<Formula> for Theory {
    fn from(f: Formula) -> Self {
        Theory::new([f])
    }
}

impl FromIterator<Formula> for Theory {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        Theory::new(iter)
    }
}

impl<'a> IntoIterator for &'a Theory {
    type Item = &'a Formula;
    type IntoIter = std::slice::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.formulas.iter()
    }
}

/// One member per line, each terminated by `.`.
impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for member in &self.formulas {
            writeln!(f, "{member}.")?;
        }
        Ok(())
    }
}

pub fn atoms(t: &Theory) -> BTreeSet<Atom> {
    t.atoms()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(name: &str) -> Formula {
        Formula::atom(name)
    }

    #[test]
    fn atom_names() {
        assert!(Atom::new("p").is_ok());
        assert!(Atom::new("pQ_1").is_ok());
        assert!(Atom::new("P").is_err());
        assert!(Atom::new("1p").is_err());
        assert!(Atom::new("").is_err());
        assert!(Atom::new("not").is_err());
        assert!(Atom::new("bot").is_err());
    }

    #[test]
    fn prints_negation_sugar() {
        assert_eq!(print_formula(&Formula::not(p("p"))), "not p");
        assert_eq!(print_formula(&Formula::top()), "not bot");
    }

    #[test]
    fn prints_minimal_parentheses() {
        let f = Formula::and(p("p"), Formula::or(p("q"), p("r")));
        assert_eq!(print_formula(&f), "p & (q | r)");
        let f = Formula::implies(Formula::implies(p("p"), p("q")), p("r"));
        assert_eq!(print_formula(&f), "(p -> q) -> r");
        let f = Formula::implies(p("p"), Formula::implies(p("q"), p("r")));
        assert_eq!(print_formula(&f), "p -> q -> r");
        let f = Formula::and(p("a"), Formula::and(p("b"), p("c")));
        assert_eq!(print_formula(&f), "a & (b & c)");
        let f = Formula::not(Formula::and(p("a"), p("b")));
        assert_eq!(print_formula(&f), "not (a & b)");
        let f = Formula::not(Formula::not(p("a")));
        assert_eq!(print_formula(&f), "not not a");
    }

    #[test]
    fn theory_atoms() {
        let t = parse_theory("p -> q. q & not r -> p.").unwrap();
        let names: Vec<_> = t.atoms().iter().map(|a| a.to_string()).collect();
        assert_eq!(names, ["p", "q", "r"]);
        assert!(Theory::default().atoms().is_empty());
        assert!(parse_theory("bot -> bot").unwrap().atoms().is_empty());
    }

    #[test]
    fn at_path_follows_child_indices() {
        let f = parse_formula("(p -> q) & r").unwrap();
        assert_eq!(f.at_path(&[0, 1]), Some(&p("q")));
        assert_eq!(f.at_path(&[1]), Some(&p("r")));
        assert_eq!(f.at_path(&[1, 0]), None);
    }

    #[test]
    fn atom_list() {
        let set = parse_atom_list("a, b c").unwrap();
        assert_eq!(set.len(), 3);
        assert!(parse_atom_list("a,B").is_err());
        assert!(parse_atom_list("").unwrap().is_empty());
    }
}
