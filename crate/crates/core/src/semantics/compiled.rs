//! Formulas compiled against a fixed, sorted atom universe so that
//! interpretations become bitmasks. All exhaustive enumeration goes through
//! this representation.

use std::collections::BTreeSet;

use super::Interpretation;
use crate::formula::{Atom, Formula};

pub(crate) type Mask = u32;

/// Largest universe a [`Mask`] can address with room for the subset counter.
pub const MASK_BITS: usize = 30;

#[derive(Clone, Debug)]
pub(crate) struct Universe {
    atoms: Vec<Atom>,
}

impl Universe {
    pub fn new(atoms: &BTreeSet<Atom>) -> Self {
        assert!(atoms.len() <= MASK_BITS, "universe too large for bitmasks");
        Universe {
            atoms: atoms.iter().cloned().collect(),
        }
    }

    pub fn subset_count(&self) -> u64 {
        1u64 << self.atoms.len()
    }

    fn bit(&self, a: &Atom) -> Option<Mask> {
        self.atoms.binary_search(a).ok().map(|i| 1 << i)
    }

    pub fn mask_of(&self, i: &Interpretation) -> Option<Mask> {
        i.iter().try_fold(0, |m, a| self.bit(a).map(|b| m | b))
    }

    pub fn interpretation(&self, mask: Mask) -> Interpretation {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, a)| a.clone())
            .collect()
    }

    /// Panics if `f` mentions an atom outside the universe.
    pub fn compile(&self, f: &Formula) -> Node {
        match f {
            Formula::Bottom => Node::Bot,
            Formula::Atom(a) => Node::Var(self.bit(a).expect("atom outside universe")),
            Formula::And(l, r) => Node::And(Box::new(self.compile(l)), Box::new(self.compile(r))),
            Formula::Or(l, r) => Node::Or(Box::new(self.compile(l)), Box::new(self.compile(r))),
            Formula::Implies(l, r) => {
                Node::Imp(Box::new(self.compile(l)), Box::new(self.compile(r)))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Node {
    Bot,
    Var(Mask),
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
    Imp(Box<Node>, Box<Node>),
}

impl Node {
    pub fn eval(&self, m: Mask) -> bool {
        match self {
            Node::Bot => false,
            Node::Var(b) => m & b != 0,
            Node::And(l, r) => l.eval(m) && r.eval(m),
            Node::Or(l, r) => l.eval(m) || r.eval(m),
            Node::Imp(l, r) => !l.eval(m) || r.eval(m),
        }
    }

    pub fn reduct(&self, m: Mask) -> Node {
        if !self.eval(m) {
            return Node::Bot;
        }
        match self {
            Node::Bot => Node::Bot,
            Node::Var(b) => Node::Var(*b),
            Node::And(l, r) => Node::And(Box::new(l.reduct(m)), Box::new(r.reduct(m))),
            Node::Or(l, r) => Node::Or(Box::new(l.reduct(m)), Box::new(r.reduct(m))),
            Node::Imp(l, r) => Node::Imp(Box::new(l.reduct(m)), Box::new(r.reduct(m))),
        }
    }
}

pub(crate) fn all_hold(nodes: &[Node], m: Mask) -> bool {
    nodes.iter().all(|n| n.eval(m))
}

/// `m` is a model and no proper subset of `m` satisfies the reduct.
pub(crate) fn is_stable_mask(theory: &[Node], m: Mask) -> bool {
    if !all_hold(theory, m) {
        return false;
    }
    let reduct: Vec<Node> = theory.iter().map(|n| n.reduct(m)).collect();
    let mut sub = m;
    while sub != 0 {
        sub = (sub - 1) & m;
        if all_hold(&reduct, sub) {
            return false;
        }
    }
    true
}

/// `m` is a model and removing any single atom breaks the reduct.
pub(crate) fn is_pointwise_stable_mask(theory: &[Node], m: Mask) -> bool {
    if !all_hold(theory, m) {
        return false;
    }
    let reduct: Vec<Node> = theory.iter().map(|n| n.reduct(m)).collect();
    let mut rest = m;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest &= !bit;
        if all_hold(&reduct, m & !bit) {
            return false;
        }
    }
    true
}

/// Nondisjunctive rules as `(body, head bit)` pairs.
pub(crate) fn is_supported_mask(theory: &[Node], rules: &[(Node, Mask)], m: Mask) -> bool {
    if !all_hold(theory, m) {
        return false;
    }
    let mut supported: Mask = 0;
    for (body, head) in rules {
        if m & head != 0 && supported & head == 0 && body.eval(m) {
            supported |= head;
        }
    }
    supported == m
}
