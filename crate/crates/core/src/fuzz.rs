//! Seeded random theories and the properties they are checked against.
//!
//! # Generator
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, drawn on one
//! thread in case order, so a seed fixes the corpus on every platform.
//!
//! * Atom pool: the first `max_atoms` of `p, q, r, s`.
//! * Leaf: `⊥` with weight 1, each pool atom with weight 2.
//! * Formula of depth budget `d`: at `d = 0` a leaf; otherwise one of
//!   leaf, `∧`, `∨`, `→`, `¬` chosen uniformly, children drawn with budget
//!   `d - 1` (`¬X` is `X → ⊥`).
//! * Nondisjunctive rule: a fact (uniform pool atom) with probability 1/5,
//!   otherwise `Body → A` with `Body` of budget `max_depth - 1` and `A` a
//!   uniform pool atom.
//! * Theory: 1 to 3 members, uniformly.
//! * Split: `F` and `G` of budget `max_depth - 1`; atoms of `SPos(F)` go to
//!   `P`, atoms of `SPos(G)` to `Q`, the rest to either side by a fair coin.
//!
//! Properties that only apply to part of the corpus (acyclic SP graph,
//! partitions passing the splitting conditions) draw again until a sample
//! qualifies, up to [`MAX_ATTEMPTS`] draws per case; the number of rejected
//! draws is reported. The `loop-oracle-sp` control keeps only formulas whose
//! SP and PNN graphs yield different loop sets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::depgraph::{g_pnn, g_sp, GraphKind};
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::formula::{spos, Atom, Formula, Theory};
use crate::loopformulas::{loops, stable_via_all_sets, stable_via_loops};
use crate::semantics::{completion, is_stable, reduct, satisfies, Enumerator, Interpretation};
use crate::splitting::{check_split, split_conditions};

pub const MAX_FUZZ_ATOMS: usize = 4;
pub const MAX_FUZZ_DEPTH: usize = 4;
pub const MAX_ATTEMPTS: usize = 10_000;

const POOL: [&str; MAX_FUZZ_ATOMS] = ["p", "q", "r", "s"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// Acyclic SP graph, nondisjunctive theory: supported = stable.
    Theorem1,
    /// Acyclic SP graph: pointwise stable = stable.
    Theorem2,
    /// Stability agrees with the all-sets and PNN-loop characterizations.
    LoopOracle,
    /// Partitions passing the PNN conditions split the stable models.
    Splitting,
    /// `I ⊨ F^I ⇔ I ⊨ F`, atoms of `F^I` within `I`, reduct idempotent.
    ReductLemma,
    /// `I ⊨ F` and `SPos(F^I) ⊆ J` imply `J ⊨ F^I`.
    Lemma1,
    /// SP graph is a subgraph of the PNN graph.
    SpSubgraph,
    /// stable ⊆ pointwise ⊆ models; for nondisjunctive theories also
    /// stable ⊆ supported and completion models = supported models.
    Chain,
    /// Negative control: the loop oracle over the SP graph, which is unsound.
    LoopOracleSp,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::Theorem1,
        Property::Theorem2,
        Property::LoopOracle,
        Property::Splitting,
        Property::ReductLemma,
        Property::Lemma1,
        Property::SpSubgraph,
        Property::Chain,
        Property::LoopOracleSp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Theorem1 => "theorem1",
            Property::Theorem2 => "theorem2",
            Property::LoopOracle => "loop-oracle",
            Property::Splitting => "splitting",
            Property::ReductLemma => "reduct-lemma",
            Property::Lemma1 => "lemma1",
            Property::SpSubgraph => "sp-subgraph",
            Property::Chain => "chain",
            Property::LoopOracleSp => "loop-oracle-sp",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    pub max_atoms: usize,
    pub max_depth: usize,
    pub exec: Exec,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 1,
            count: 1000,
            max_atoms: MAX_FUZZ_ATOMS,
            max_depth: MAX_FUZZ_DEPTH,
            exec: Exec::default(),
        }
    }
}

impl FuzzConfig {
    fn validate(&self) -> Result<()> {
        if !(1..=MAX_FUZZ_ATOMS).contains(&self.max_atoms) {
            return Err(Error::InvalidArgument(format!(
                "max atoms must be between 1 and {MAX_FUZZ_ATOMS}, got {}",
                self.max_atoms
            )));
        }
        if self.max_depth > MAX_FUZZ_DEPTH {
            return Err(Error::InvalidArgument(format!(
                "max depth must be at most {MAX_FUZZ_DEPTH}, got {}",
                self.max_depth
            )));
        }
        Ok(())
    }
}

/// One generated input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Case {
    Theory(Theory),
    Formula(Formula),
    Split {
        f: Formula,
        g: Formula,
        p: BTreeSet<Atom>,
        q: BTreeSet<Atom>,
    },
}

impl Case {
    /// A shell command that replays the case through the CLI.
    pub fn reproduction(&self, property: Property, witness: Option<&Interpretation>) -> String {
        let quote = |s: &str| format!("'{s}'");
        match self {
            Case::Theory(t) => {
                let text = t
                    .iter()
                    .map(|f| format!("{f}."))
                    .collect::<Vec<_>>()
                    .join(" ");
                let cmd = match property {
                    Property::SpSubgraph => "posdep graph --graph pnn --format edges",
                    _ => "posdep models",
                };
                format!("echo {} | {cmd}", quote(&text))
            }
            Case::Formula(f) => {
                let graph = if property == Property::LoopOracleSp {
                    "sp"
                } else {
                    "pnn"
                };
                let interp = witness
                    .map(|i| {
                        let names: Vec<&str> = i.iter().map(Atom::name).collect();
                        format!(" --interp {}", quote(&names.join(",")))
                    })
                    .unwrap_or_default();
                format!(
                    "echo {} | posdep loops --graph {graph}{interp}",
                    quote(&f.to_string())
                )
            }
            Case::Split { f, g, p, .. } => {
                let names: Vec<&str> = p.iter().map(Atom::name).collect();
                format!(
                    "posdep split {} {} --p {} --graph pnn",
                    quote(&f.to_string()),
                    quote(&g.to_string()),
                    quote(&names.join(","))
                )
            }
        }
    }

    /// The input in theory syntax.
    pub fn text(&self) -> String {
        match self {
            Case::Theory(t) => t.to_string(),
            Case::Formula(f) => format!("{f}.\n"),
            Case::Split { f, g, p, q } => {
                let names =
                    |s: &BTreeSet<Atom>| s.iter().map(Atom::name).collect::<Vec<_>>().join(",");
                format!("F: {f}\nG: {g}\nP: {}\nQ: {}\n", names(p), names(q))
            }
        }
    }
}

struct Generator {
    rng: ChaCha8Rng,
    pool: Vec<Atom>,
    max_depth: usize,
}

impl Generator {
    fn new(config: &FuzzConfig) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            pool: POOL[..config.max_atoms]
                .iter()
                .map(|n| Atom::new(n).expect("pool atom"))
                .collect(),
            max_depth: config.max_depth,
        }
    }

    fn atom(&mut self) -> Atom {
        let k = self.rng.gen_range(0..self.pool.len());
        self.pool[k].clone()
    }

    fn leaf(&mut self) -> Formula {
        let k = self.rng.gen_range(0..2 * self.pool.len() + 1);
        if k == 0 {
            Formula::Bottom
        } else {
            Formula::Atom(self.pool[(k - 1) / 2].clone())
        }
    }

    fn formula(&mut self, depth: usize) -> Formula {
        if depth == 0 {
            return self.leaf();
        }
        match self.rng.gen_range(0..5) {
            0 => self.leaf(),
            1 => Formula::and(self.formula(depth - 1), self.formula(depth - 1)),
            2 => Formula::or(self.formula(depth - 1), self.formula(depth - 1)),
            3 => Formula::implies(self.formula(depth - 1), self.formula(depth - 1)),
            _ => Formula::not(self.formula(depth - 1)),
        }
    }

    fn top_formula(&mut self) -> Formula {
        let depth = self.max_depth;
        self.formula(depth)
    }

    fn rule(&mut self) -> Formula {
        if self.rng.gen_range(0..5) == 0 {
            return Formula::Atom(self.atom());
        }
        let body = self.formula(self.max_depth.saturating_sub(1));
        Formula::implies(body, Formula::Atom(self.atom()))
    }

    fn theory(&mut self) -> Theory {
        let n = self.rng.gen_range(1..=3);
        (0..n).map(|_| self.top_formula()).collect()
    }

    fn nondisjunctive_theory(&mut self) -> Theory {
        let n = self.rng.gen_range(1..=3);
        (0..n).map(|_| self.rule()).collect()
    }

    /// Draws until `accept` holds; returns the sample and the rejected count.
    fn until<T>(&mut self, mut draw: impl FnMut(&mut Self) -> Option<T>) -> Result<(T, usize)> {
        for attempt in 0..MAX_ATTEMPTS {
            if let Some(x) = draw(self) {
                return Ok((x, attempt));
            }
        }
        Err(Error::InvalidArgument(format!(
            "no qualifying sample in {MAX_ATTEMPTS} draws"
        )))
    }

    fn split_case(&mut self) -> Option<Case> {
        let depth = self.max_depth.saturating_sub(1);
        let f = self.formula(depth);
        let g = self.formula(depth);
        let (sf, sg) = (spos(&f), spos(&g));
        if !sf.is_disjoint(&sg) {
            return None;
        }
        let universe = Formula::and(f.clone(), g.clone()).atoms();
        let (mut p, mut q) = (BTreeSet::new(), BTreeSet::new());
        for a in universe {
            let in_p = if sf.contains(&a) {
                true
            } else if sg.contains(&a) {
                false
            } else {
                self.rng.gen_bool(0.5)
            };
            if in_p {
                p.insert(a);
            } else {
                q.insert(a);
            }
        }
        let (i, ii, iii) = split_conditions(&f, &g, &p, &q, GraphKind::Pnn).ok()?;
        (i.holds && ii.holds && iii.holds).then_some(Case::Split { f, g, p, q })
    }

    fn case(&mut self, property: Property, index: usize) -> Result<(Case, usize)> {
        match property {
            Property::Theorem1 => self.until(|g| {
                let t = g.nondisjunctive_theory();
                (!g_sp(&t).has_cycle()).then_some(Case::Theory(t))
            }),
            Property::Theorem2 => self.until(|g| {
                let t = g.theory();
                (!g_sp(&t).has_cycle()).then_some(Case::Theory(t))
            }),
            Property::LoopOracle => Ok((Case::Formula(self.top_formula()), 0)),
            // Only formulas on which the two graphs yield different loops can
            // separate the oracles; drawing anything else is wasted effort.
            Property::LoopOracleSp => self.until(|g| {
                let f = g.top_formula();
                let differ = loops(&f, GraphKind::Sp).ok()? != loops(&f, GraphKind::Pnn).ok()?;
                differ.then_some(Case::Formula(f))
            }),
            Property::Splitting => self.until(Self::split_case),
            Property::ReductLemma | Property::Lemma1 | Property::SpSubgraph => {
                Ok((Case::Theory(self.theory()), 0))
            }
            Property::Chain => {
                let t = if index.is_multiple_of(2) {
                    self.theory()
                } else {
                    self.nondisjunctive_theory()
                };
                Ok((Case::Theory(t), 0))
            }
        }
    }
}

/// The seeded corpus for `property`, plus the number of rejected draws.
pub fn generate(property: Property, config: &FuzzConfig) -> Result<(Vec<Case>, usize)> {
    config.validate()?;
    let mut gen = Generator::new(config);
    let mut rejected = 0;
    let mut cases = Vec::with_capacity(config.count);
    for index in 0..config.count {
        let (case, skipped) = gen.case(property, index)?;
        rejected += skipped;
        cases.push(case);
    }
    Ok((cases, rejected))
}

fn subsets(atoms: &BTreeSet<Atom>) -> Vec<Interpretation> {
    let atoms: Vec<&Atom> = atoms.iter().collect();
    (0u32..(1 << atoms.len()))
        .map(|mask| {
            atoms
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, a)| (*a).clone())
                .collect()
        })
        .collect()
}

fn list(models: &[Interpretation]) -> String {
    let items: Vec<String> = models.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn pool_atoms(config_atoms: usize) -> BTreeSet<Atom> {
    POOL[..config_atoms]
        .iter()
        .map(|n| Atom::new(n).expect("pool atom"))
        .collect()
}

/// A property violation found on one case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub message: String,
    /// The interpretation exhibiting the violation, when there is one.
    pub witness: Option<Interpretation>,
}

impl From<String> for Finding {
    fn from(message: String) -> Self {
        Finding {
            message,
            witness: None,
        }
    }
}

/// Checks `property` on one case; `Ok(Some(_))` is a violation.
pub fn check_case(property: Property, case: &Case, pool: usize) -> Result<Option<Finding>> {
    match (property, case) {
        (Property::LoopOracle | Property::LoopOracleSp, Case::Formula(f)) => {
            check_loop_oracle(property, f)
        }
        _ => Ok(check_without_witness(property, case, pool)?.map(Finding::from)),
    }
}

fn check_loop_oracle(property: Property, f: &Formula) -> Result<Option<Finding>> {
    let t = Theory::from(f.clone());
    for i in subsets(&f.atoms()) {
        let stable = is_stable(&i, &t);
        let (label, via_loops) = if property == Property::LoopOracle {
            ("pnn", stable_via_loops(&i, f, GraphKind::Pnn)?)
        } else {
            ("sp", stable_via_loops(&i, f, GraphKind::Sp)?)
        };
        let all_sets = stable_via_all_sets(&i, f)?;
        let message = if property == Property::LoopOracle && all_sets != stable {
            format!("interpretation {i}: stable = {stable}, all-sets loop oracle = {all_sets}")
        } else if via_loops != stable {
            format!("interpretation {i}: stable = {stable}, {label}-loop oracle = {via_loops}")
        } else {
            continue;
        };
        return Ok(Some(Finding {
            message,
            witness: Some(i),
        }));
    }
    Ok(None)
}

fn check_without_witness(property: Property, case: &Case, pool: usize) -> Result<Option<String>> {
    // Each enumeration inside one case is small; parallelism lives at the
    // case level.
    let en = Enumerator::new().with_exec(Exec::Sequential);
    match (property, case) {
        (Property::Theorem1, Case::Theory(t)) => {
            let supported = en.supported_models(t)?;
            let stable = en.stable_models(t)?;
            Ok((supported != stable).then(|| {
                format!(
                    "supported models {} differ from stable models {}",
                    list(&supported),
                    list(&stable)
                )
            }))
        }
        (Property::Theorem2, Case::Theory(t)) => {
            let pointwise = en.pointwise_stable_models(t)?;
            let stable = en.stable_models(t)?;
            Ok((pointwise != stable).then(|| {
                format!(
                    "pointwise stable models {} differ from stable models {}",
                    list(&pointwise),
                    list(&stable)
                )
            }))
        }
        (Property::Splitting, Case::Split { f, g, p, q }) => {
            let r = check_split(f, g, p, q, GraphKind::Pnn)?;
            Ok((!r.equivalence_holds).then(|| {
                format!(
                    "stable models of F & G {} differ from sets stable for both parts {}",
                    list(&r.stable_whole),
                    list(&r.stable_both_parts)
                )
            }))
        }
        (Property::ReductLemma, Case::Theory(t)) => {
            for i in subsets(&pool_atoms(pool)) {
                for f in t {
                    let r = reduct(f, &i);
                    if satisfies(&i, &r) != satisfies(&i, f) {
                        return Ok(Some(format!("{i} separates `{f}` from its reduct `{r}`")));
                    }
                    if !r.atoms().is_subset(i.atoms()) {
                        return Ok(Some(format!(
                            "reduct `{r}` of `{f}` mentions atoms outside {i}"
                        )));
                    }
                    if reduct(&r, &i) != r {
                        return Ok(Some(format!(
                            "reduct of `{f}` w.r.t. {i} is not idempotent"
                        )));
                    }
                }
            }
            Ok(None)
        }
        (Property::Lemma1, Case::Theory(t)) => {
            let all = subsets(&pool_atoms(pool));
            for f in t {
                for i in all.iter().filter(|i| satisfies(i, f)) {
                    let r = reduct(f, i);
                    let sp = spos(&r);
                    for j in all.iter().filter(|j| sp.is_subset(j.atoms())) {
                        if !satisfies(j, &r) {
                            return Ok(Some(format!(
                                "{i} satisfies `{f}`, {j} contains SPos of the reduct `{r}` but does not satisfy it"
                            )));
                        }
                    }
                }
            }
            Ok(None)
        }
        (Property::SpSubgraph, Case::Theory(t)) => {
            let (sp, pnn) = (g_sp(t), g_pnn(t));
            Ok((!sp.is_subgraph_of(&pnn)).then(|| {
                format!(
                    "sp edges {:?} not contained in pnn edges {:?}",
                    sp.edges(),
                    pnn.edges()
                )
            }))
        }
        (Property::Chain, Case::Theory(t)) => {
            let models = en.classical_models(t, &t.atoms())?;
            let pointwise = en.pointwise_stable_models(t)?;
            let stable = en.stable_models(t)?;
            let within =
                |a: &[Interpretation], b: &[Interpretation]| a.iter().all(|x| b.contains(x));
            if !within(&stable, &pointwise) {
                return Ok(Some(format!(
                    "stable {} not within pointwise stable {}",
                    list(&stable),
                    list(&pointwise)
                )));
            }
            if !within(&pointwise, &models) {
                return Ok(Some(format!(
                    "pointwise stable {} not within models {}",
                    list(&pointwise),
                    list(&models)
                )));
            }
            if t.is_nondisjunctive() {
                let supported = en.supported_models(t)?;
                if !within(&stable, &supported) {
                    return Ok(Some(format!(
                        "stable {} not within supported {}",
                        list(&stable),
                        list(&supported)
                    )));
                }
                let completed = en.classical_models(&completion(t)?, &t.atoms())?;
                if completed != supported {
                    return Ok(Some(format!(
                        "completion models {} differ from supported {}",
                        list(&completed),
                        list(&supported)
                    )));
                }
            }
            Ok(None)
        }
        (property, _) => Err(Error::InvalidArgument(format!(
            "case shape does not match property {property}"
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub case_index: usize,
    pub message: String,
    pub input: String,
    pub reproduce: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub property: Property,
    pub seed: u64,
    pub cases: usize,
    pub rejected_draws: usize,
    pub violations: usize,
    pub first_violation: Option<Violation>,
}

impl FuzzSummary {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for FuzzSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "property: {}", self.property)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "cases: {}", self.cases)?;
        writeln!(f, "rejected draws: {}", self.rejected_draws)?;
        writeln!(f, "violations: {}", self.violations)?;
        if let Some(v) = &self.first_violation {
            writeln!(f, "first violation: case {}", v.case_index)?;
            writeln!(f, "  {}", v.message)?;
            writeln!(f, "input:")?;
            for line in v.input.lines() {
                writeln!(f, "  {line}")?;
            }
            writeln!(f, "reproduce: {}", v.reproduce)?;
        }
        Ok(())
    }
}

/// Generates the corpus and checks every case.
pub fn run(property: Property, config: &FuzzConfig) -> Result<FuzzSummary> {
    let (cases, rejected) = generate(property, config)?;
    let results = exec::map_slice(config.exec, &cases, |case| {
        check_case(property, case, config.max_atoms)
    });
    let mut violations = 0;
    let mut first = None;
    for (index, result) in results.into_iter().enumerate() {
        if let Some(finding) = result? {
            violations += 1;
            if first.is_none() {
                let case = &cases[index];
                first = Some(Violation {
                    case_index: index,
                    reproduce: case.reproduction(property, finding.witness.as_ref()),
                    message: finding.message,
                    input: case.text(),
                });
            }
        }
    }
    Ok(FuzzSummary {
        property,
        seed: config.seed,
        cases: cases.len(),
        rejected_draws: rejected,
        violations,
        first_violation: first,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(count: usize) -> FuzzConfig {
        FuzzConfig {
            count,
            ..FuzzConfig::default()
        }
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert!(matches!(
            "theorem3".parse::<Property>(),
            Err(Error::UnknownProperty(_))
        ));
    }

    #[test]
    fn generation_is_deterministic() {
        for p in [
            Property::Theorem1,
            Property::Splitting,
            Property::LoopOracle,
        ] {
            assert_eq!(
                generate(p, &config(50)).unwrap(),
                generate(p, &config(50)).unwrap()
            );
        }
        let other = FuzzConfig {
            seed: 2,
            ..config(50)
        };
        assert_ne!(
            generate(Property::Theorem2, &config(50)).unwrap(),
            generate(Property::Theorem2, &other).unwrap()
        );
    }

    #[test]
    fn generated_cases_respect_filters() {
        let (cases, _) = generate(Property::Theorem1, &config(100)).unwrap();
        for case in &cases {
            let Case::Theory(t) = case else { panic!() };
            assert!(t.is_nondisjunctive());
            assert!(!g_sp(t).has_cycle());
            assert!(t.atoms().len() <= 4);
        }
        let (cases, _) = generate(Property::Splitting, &config(50)).unwrap();
        for case in &cases {
            let Case::Split { f, g, p, q } = case else {
                panic!()
            };
            let (i, ii, iii) = split_conditions(f, g, p, q, GraphKind::Pnn).unwrap();
            assert!(i.holds && ii.holds && iii.holds);
        }
    }

    #[test]
    fn limits_are_validated() {
        let bad = FuzzConfig {
            max_atoms: 5,
            ..config(1)
        };
        assert!(run(Property::Theorem1, &bad).is_err());
        let bad = FuzzConfig {
            max_depth: 5,
            ..config(1)
        };
        assert!(run(Property::Theorem1, &bad).is_err());
        let bad = FuzzConfig {
            max_atoms: 0,
            ..config(1)
        };
        assert!(run(Property::Theorem1, &bad).is_err());
    }

    #[test]
    fn sequential_and_parallel_runs_match() {
        let par = run(Property::Chain, &config(100)).unwrap();
        let seq = run(
            Property::Chain,
            &FuzzConfig {
                exec: Exec::Sequential,
                ..config(100)
            },
        )
        .unwrap();
        assert_eq!(par, seq);
        assert!(par.passed());
    }

    #[test]
    fn negative_control_finds_a_violation() {
        let summary = run(Property::LoopOracleSp, &config(1000)).unwrap();
        assert!(!summary.passed(), "{summary}");
        let v = summary.first_violation.unwrap();
        assert!(
            v.message.contains("stable = false, sp-loop oracle = true"),
            "{}",
            v.message
        );
        assert!(v.reproduce.contains("--graph sp"));
    }
}
