//! Polarity of atom occurrences and extraction of the rules of a formula.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{Atom, Formula};

/// Where an atom occurrence sits relative to the implications above it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OccurrenceContext {
    /// Child indices from the root; antecedents are child 0.
    pub path: Vec<usize>,
    /// Number of enclosing implications whose antecedent contains the occurrence.
    pub antecedent_count: usize,
    /// Whether the occurrence lies in the antecedent of some `G -> ⊥`.
    pub negated: bool,
}

impl OccurrenceContext {
    pub fn strictly_positive(&self) -> bool {
        self.antecedent_count == 0
    }

    pub fn positive(&self) -> bool {
        self.antecedent_count.is_multiple_of(2)
    }

    pub fn nonnegated(&self) -> bool {
        !self.negated
    }
}

/// One entry per atom occurrence, in left-to-right tree order.
pub fn classify_occurrences(f: &Formula) -> Vec<(Atom, OccurrenceContext)> {
    fn walk(
        f: &Formula,
        path: &mut Vec<usize>,
        antecedent_count: usize,
        negated: bool,
        out: &mut Vec<(Atom, OccurrenceContext)>,
    ) {
        match f {
            Formula::Bottom => {}
            Formula::Atom(a) => out.push((
                a.clone(),
                OccurrenceContext {
                    path: path.clone(),
                    antecedent_count,
                    negated,
                },
            )),
            Formula::And(l, r) | Formula::Or(l, r) => {
                path.push(0);
                walk(l, path, antecedent_count, negated, out);
                *path.last_mut().unwrap() = 1;
                walk(r, path, antecedent_count, negated, out);
                path.pop();
            }
            Formula::Implies(a, c) => {
                path.push(0);
                walk(a, path, antecedent_count + 1, negated || c.is_bottom(), out);
                *path.last_mut().unwrap() = 1;
                walk(c, path, antecedent_count, negated, out);
                path.pop();
            }
        }
    }

    let mut out = Vec::new();
    walk(f, &mut Vec::new(), 0, false, &mut out);
    out
}

/// Atoms with at least one strictly positive occurrence.
pub fn spos(f: &Formula) -> BTreeSet<Atom> {
    fn walk(f: &Formula, out: &mut BTreeSet<Atom>) {
        match f {
            Formula::Bottom => {}
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                walk(l, out);
                walk(r, out);
            }
            Formula::Implies(_, c) => walk(c, out),
        }
    }

    let mut out = BTreeSet::new();
    walk(f, &mut out);
    out
}

/// Atoms with at least one occurrence that is both positive and nonnegated.
pub fn positive_nonnegated(f: &Formula) -> BTreeSet<Atom> {
    classify_occurrences(f)
        .into_iter()
        .filter(|(_, ctx)| ctx.positive() && ctx.nonnegated())
        .map(|(a, _)| a)
        .collect()
}

/// A strictly positive occurrence of an implication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleOccurrence {
    pub body: Formula,
    pub head: Formula,
    pub path: Vec<usize>,
}

/// Every implication at a strictly positive position, in pre-order. A rule
/// whose head is itself an implication contributes that nested rule too.
pub fn rules_of(f: &Formula) -> Vec<RuleOccurrence> {
    fn walk(f: &Formula, path: &mut Vec<usize>, out: &mut Vec<RuleOccurrence>) {
        match f {
            Formula::Bottom | Formula::Atom(_) => {}
            Formula::And(l, r) | Formula::Or(l, r) => {
                path.push(0);
                walk(l, path, out);
                *path.last_mut().unwrap() = 1;
                walk(r, path, out);
                path.pop();
            }
            Formula::Implies(body, head) => {
                out.push(RuleOccurrence {
                    body: (**body).clone(),
                    head: (**head).clone(),
                    path: path.clone(),
                });
                path.push(1);
                walk(head, path, out);
                path.pop();
            }
        }
    }

    let mut out = Vec::new();
    walk(f, &mut Vec::new(), &mut out);
    out
}

/// `Body -> A` for an atom `A`, or a bare atom (a fact, read as `⊥ -> ⊥ -> A`).
pub fn is_nondisjunctive_rule(f: &Formula) -> bool {
    match f {
        Formula::Atom(_) => true,
        Formula::Implies(_, head) => matches!(**head, Formula::Atom(_)),
        _ => false,
    }
}

/// Splits a nondisjunctive rule into body and head atom. Facts get the
/// body `⊥ -> ⊥`.
pub(crate) fn as_nondisjunctive_rule(f: &Formula) -> Option<(Formula, &Atom)> {
    match f {
        Formula::Atom(a) => Some((Formula::top(), a)),
        Formula::Implies(body, head) => match &**head {
            Formula::Atom(a) => Some(((**body).clone(), a)),
            _ => None,
        },
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use proptest::prelude::*;

    fn names(set: &BTreeSet<Atom>) -> Vec<&str> {
        set.iter().map(Atom::name).collect()
    }

    fn context_of<'a>(
        occ: &'a [(Atom, OccurrenceContext)],
        name: &str,
    ) -> Vec<&'a OccurrenceContext> {
        occ.iter()
            .filter(|(a, _)| a.name() == name)
            .map(|(_, c)| c)
            .collect()
    }

    #[test]
    fn literal_conjunction() {
        let f = parse_formula("b1 & not b2").unwrap();
        let occ = classify_occurrences(&f);
        assert_eq!(occ.len(), 2);
        assert_eq!(
            occ[0].1,
            OccurrenceContext {
                path: vec![0],
                antecedent_count: 0,
                negated: false
            }
        );
        assert_eq!(
            occ[1].1,
            OccurrenceContext {
                path: vec![1, 0],
                antecedent_count: 1,
                negated: true
            }
        );
    }

    #[test]
    fn nested_antecedents_count_every_enclosing_implication() {
        let f = parse_formula("((p -> q) -> r) -> s").unwrap();
        let occ = classify_occurrences(&f);
        // p sits in the antecedents of all three implications.
        let p = context_of(&occ, "p")[0];
        assert_eq!((p.antecedent_count, p.negated), (3, false));
        assert!(!p.positive());
        assert_eq!(context_of(&occ, "q")[0].antecedent_count, 2);
        assert_eq!(context_of(&occ, "r")[0].antecedent_count, 1);
        let s = context_of(&occ, "s")[0];
        assert!(s.strictly_positive());

        // Relative to the body, p is positive and nonnegated.
        let body = parse_formula("(p -> q) -> r").unwrap();
        let occ = classify_occurrences(&body);
        let p = context_of(&occ, "p")[0];
        assert_eq!(p.antecedent_count, 2);
        assert!(p.positive() && p.nonnegated());
    }

    #[test]
    fn single_atom() {
        let occ = classify_occurrences(&Formula::atom("p"));
        assert_eq!(occ.len(), 1);
        assert_eq!(occ[0].1.antecedent_count, 0);
        assert!(!occ[0].1.negated);
        assert!(occ[0].1.path.is_empty());
    }

    #[test]
    fn negation_nested_inside_positive_context() {
        // q occurs under `not`, two antecedent levels deep: positive but negated.
        let f = parse_formula("(not q -> r) -> s").unwrap();
        let occ = classify_occurrences(&f);
        let q = context_of(&occ, "q")[0];
        assert_eq!(q.antecedent_count, 3);
        assert!(q.negated);
        let body = parse_formula("not not q").unwrap();
        let q = classify_occurrences(&body)[0].1.clone();
        assert!(q.positive() && !q.nonnegated());
    }

    #[test]
    fn spos_examples() {
        let f = parse_formula("b1 & b2 & not b3").unwrap();
        assert_eq!(names(&spos(&f)), ["b1", "b2"]);
        let f = parse_formula("((p -> q) -> r) -> s").unwrap();
        assert_eq!(names(&spos(&f)), ["s"]);
        assert!(spos(&Formula::Bottom).is_empty());
    }

    #[test]
    fn rules_of_p3() {
        let f = parse_formula("(p -> q) & (((q -> p) -> p) -> p)").unwrap();
        let rules = rules_of(&f);
        assert_eq!(rules.len(), 2);
        assert_eq!(rules[0].body, Formula::atom("p"));
        assert_eq!(rules[0].head, Formula::atom("q"));
        assert_eq!(rules[0].path, vec![0]);
        assert_eq!(rules[1].body, parse_formula("(q -> p) -> p").unwrap());
        assert_eq!(rules[1].head, Formula::atom("p"));
        assert_eq!(rules[1].path, vec![1]);
    }

    #[test]
    fn rules_in_consequent_position() {
        let f = parse_formula("p -> (q -> r)").unwrap();
        let rules = rules_of(&f);
        assert_eq!(rules.len(), 2);
        assert_eq!(rules[0].body, Formula::atom("p"));
        assert_eq!(rules[0].head, parse_formula("q -> r").unwrap());
        assert_eq!(rules[1].body, Formula::atom("q"));
        assert_eq!(rules[1].path, vec![1]);
        assert!(rules_of(&Formula::atom("p")).is_empty());
    }

    #[test]
    fn nondisjunctive_rules() {
        assert!(is_nondisjunctive_rule(
            &parse_formula("q & not r -> p").unwrap()
        ));
        assert!(!is_nondisjunctive_rule(&parse_formula("p | q").unwrap()));
        assert!(is_nondisjunctive_rule(&parse_formula("p").unwrap()));
        assert!(!is_nondisjunctive_rule(&parse_formula("p -> bot").unwrap()));
        assert!(!is_nondisjunctive_rule(
            &parse_formula("p -> q | r").unwrap()
        ));
        let fact = Formula::atom("p");
        let (body, head) = as_nondisjunctive_rule(&fact).unwrap();
        assert_eq!(body, Formula::top());
        assert_eq!(head.name(), "p");
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            1 => Just(Formula::Bottom),
            4 => prop::sample::select(vec!["p", "q", "r"]).prop_map(Formula::atom),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn spos_matches_classification(f in arb_formula()) {
            let from_ctx: BTreeSet<Atom> = classify_occurrences(&f)
                .into_iter()
                .filter(|(_, c)| c.strictly_positive())
                .map(|(a, _)| a)
                .collect();
            prop_assert_eq!(spos(&f), from_ctx);
            prop_assert!(spos(&f).is_subset(&f.atoms()));
        }

        #[test]
        fn strictly_positive_implies_positive_nonnegated(f in arb_formula()) {
            for (_, ctx) in classify_occurrences(&f) {
                if ctx.strictly_positive() {
                    prop_assert!(ctx.positive() && ctx.nonnegated());
                }
            }
        }

        #[test]
        fn occurrence_paths_address_the_atom(f in arb_formula()) {
            for (a, ctx) in classify_occurrences(&f) {
                prop_assert_eq!(f.at_path(&ctx.path), Some(&Formula::Atom(a)));
            }
        }

        #[test]
        fn rules_are_strictly_positive_implications(f in arb_formula()) {
            let rules = rules_of(&f);
            for rule in &rules {
                let node = f.at_path(&rule.path).unwrap();
                prop_assert_eq!(
                    node,
                    &Formula::implies(rule.body.clone(), rule.head.clone())
                );
                // No antecedent step (child 0 of an implication) on the way down.
                let mut cur = &f;
                for &idx in &rule.path {
                    prop_assert!(!(matches!(cur, Formula::Implies(..)) && idx == 0));
                    cur = cur.children()[idx];
                }
            }
            let has_sp_implication = has_strictly_positive_implication(&f);
            prop_assert_eq!(rules.is_empty(), !has_sp_implication);
        }
    }

    fn has_strictly_positive_implication(f: &Formula) -> bool {
        match f {
            Formula::Bottom | Formula::Atom(_) => false,
            Formula::And(l, r) | Formula::Or(l, r) => {
                has_strictly_positive_implication(l) || has_strictly_positive_implication(r)
            }
            Formula::Implies(..) => true,
        }
    }
}
