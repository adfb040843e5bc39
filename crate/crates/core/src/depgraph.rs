//! Positive dependency graphs of propositional theories.
//!
//! Both constructions share their vertices (the atoms of the theory) and
//! differ only in which body atoms a rule `Body -> Head` points at:
//!
//! * [`GraphKind::Sp`]: atoms with a strictly positive occurrence in `Body`;
//! * [`GraphKind::Pnn`]: atoms with a positive nonnegated occurrence in `Body`.
//!
//! Edges run from every strictly positive atom of `Head` to those body atoms.
//! Polarity is computed relative to `Body` and `Head`, not to the member
//! formula containing the rule.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::{positive_nonnegated, rules_of, spos, Atom, Theory};

/// Default bound on the vertex count for loop enumeration.
pub const DEFAULT_LOOP_CAP: usize = 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Sp,
    #[default]
    Pnn,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Sp => "sp",
            GraphKind::Pnn => "pnn",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sp" => Ok(GraphKind::Sp),
            "pnn" => Ok(GraphKind::Pnn),
            other => Err(Error::InvalidArgument(format!(
                "unknown graph kind `{other}` (expected sp or pnn)"
            ))),
        }
    }
}

/// Directed graph over atoms. Edges are `(head_atom, body_atom)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DepGraph {
    vertices: BTreeSet<Atom>,
    edges: BTreeSet<(Atom, Atom)>,
}

impl DepGraph {
    /// Endpoints of `edges` are added to the vertex set.
    pub fn new(
        vertices: impl IntoIterator<Item = Atom>,
        edges: impl IntoIterator<Item = (Atom, Atom)>,
    ) -> Self {
        let mut g = DepGraph {
            vertices: vertices.into_iter().collect(),
            edges: BTreeSet::new(),
        };
        for (from, to) in edges {
            g.add_edge(from, to);
        }
        g
    }

    pub fn build(t: &Theory, kind: GraphKind) -> Self {
        DepGraph {
            vertices: t.atoms(),
            edges: edges_in_rule_order(t, kind).into_iter().collect(),
        }
    }

    fn add_edge(&mut self, from: Atom, to: Atom) {
        self.vertices.insert(from.clone());
        self.vertices.insert(to.clone());
        self.edges.insert((from, to));
    }

    pub fn vertices(&self) -> &BTreeSet<Atom> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(Atom, Atom)> {
        &self.edges
    }

    pub fn has_edge(&self, from: &Atom, to: &Atom) -> bool {
        self.edges.contains(&(from.clone(), to.clone()))
    }

    fn successors(&self) -> BTreeMap<&Atom, Vec<&Atom>> {
        let mut succ: BTreeMap<&Atom, Vec<&Atom>> =
            self.vertices.iter().map(|v| (v, Vec::new())).collect();
        for (from, to) in &self.edges {
            succ.get_mut(from)
                .expect("edge endpoint is a vertex")
                .push(to);
        }
        succ
    }

    /// Directed cycle detection (self-loops included) by repeatedly removing
    /// vertices without outgoing edges. For a finite graph this is the same
    /// as having an infinite path.
    pub fn has_cycle(&self) -> bool {
        let mut out_degree: BTreeMap<&Atom, usize> = self.vertices.iter().map(|v| (v, 0)).collect();
        let mut preds: BTreeMap<&Atom, Vec<&Atom>> = BTreeMap::new();
        for (from, to) in &self.edges {
            *out_degree.get_mut(from).unwrap() += 1;
            preds.entry(to).or_default().push(from);
        }
        let mut sinks: Vec<&Atom> = out_degree
            .iter()
            .filter(|(_, &d)| d == 0)
            .map(|(&v, _)| v)
            .collect();
        let mut removed = 0;
        while let Some(v) = sinks.pop() {
            removed += 1;
            for &p in preds.get(v).map(Vec::as_slice).unwrap_or(&[]) {
                let d = out_degree.get_mut(p).unwrap();
                *d -= 1;
                if *d == 0 {
                    sinks.push(p);
                }
            }
        }
        removed < self.vertices.len()
    }

    /// Maximal strongly connected components (Tarjan). Each component is
    /// sorted; components are ordered by their smallest atom.
    pub fn sccs(&self) -> Vec<BTreeSet<Atom>> {
        let verts: Vec<&Atom> = self.vertices.iter().collect();
        let index_of = |a: &Atom| verts.binary_search(&a).expect("vertex");
        let succ: Vec<Vec<usize>> = {
            let by_atom = self.successors();
            verts
                .iter()
                .map(|v| by_atom[v].iter().map(|w| index_of(w)).collect())
                .collect()
        };

        let n = verts.len();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut next_index = 0;
        let mut comps: Vec<BTreeSet<Atom>> = Vec::new();

        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            // Explicit DFS stack of (vertex, next successor position).
            let mut work: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut pos)) = work.last_mut() {
                if let Some(&w) = succ[v].get(*pos) {
                    *pos += 1;
                    if index[w] == usize::MAX {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        work.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                work.pop();
                if let Some(&(parent, _)) = work.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = BTreeSet::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.insert(verts[w].clone());
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
        comps.sort_by(|a, b| a.iter().next().cmp(&b.iter().next()));
        comps
    }

    /// Whether the subgraph induced by `set` is strongly connected.
    /// Singletons always are, with or without a self-loop.
    pub fn induces_strongly_connected(&self, set: &BTreeSet<Atom>) -> bool {
        let Some(start) = set.iter().next() else {
            return false;
        };
        if set.len() == 1 {
            return true;
        }
        let reach = |forward: bool| {
            let mut seen: BTreeSet<&Atom> = BTreeSet::from([start]);
            let mut todo = vec![start];
            while let Some(v) = todo.pop() {
                for (from, to) in &self.edges {
                    let (src, dst) = if forward { (from, to) } else { (to, from) };
                    if src == v && set.contains(dst) && seen.insert(dst) {
                        todo.push(dst);
                    }
                }
            }
            seen.len() == set.len()
        };
        reach(true) && reach(false)
    }

    /// Every nonempty vertex subset inducing a strongly connected subgraph,
    /// ordered by size and then lexicographically. Exhaustive over all
    /// `2^n - 1` subsets.
    pub fn strongly_connected_subsets(&self, cap: usize) -> Result<Vec<BTreeSet<Atom>>> {
        let n = self.vertices.len();
        if n > cap {
            return Err(Error::CapExceeded { cap, atoms: n });
        }
        if n >= 63 {
            return Err(Error::CapTooLarge {
                requested: n,
                max: 62,
            });
        }
        let verts: Vec<&Atom> = self.vertices.iter().collect();
        let mut out: Vec<BTreeSet<Atom>> = (1u64..(1u64 << n))
            .map(|mask| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, a)| (*a).clone())
                    .collect::<BTreeSet<Atom>>()
            })
            .filter(|set| self.induces_strongly_connected(set))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Vertex and edge containment.
    pub fn is_subgraph_of(&self, big: &DepGraph) -> bool {
        self.vertices.is_subset(&big.vertices) && self.edges.is_subset(&big.edges)
    }

    /// DOT text with vertex statements followed by edge statements, both
    /// sorted.
    pub fn to_dot(&self, label: &str) -> String {
        let mut out = format!("digraph {} {{\n", dot_id(label));
        for v in &self.vertices {
            out.push_str(&format!("  {v};\n"));
        }
        for (from, to) in &self.edges {
            out.push_str(&format!("  {from} -> {to};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// One `head body` line per edge, sorted.
    pub fn to_edge_list(&self) -> String {
        self.edges
            .iter()
            .map(|(from, to)| format!("{from} {to}\n"))
            .collect()
    }

    /// Reads back the output of [`DepGraph::to_dot`].
    pub fn from_dot(text: &str) -> Result<Self> {
        let mut g = DepGraph::default();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with("digraph") || line == "}" {
                continue;
            }
            let stmt = line.strip_suffix(';').ok_or_else(|| {
                Error::InvalidArgument(format!("malformed DOT statement `{line}`"))
            })?;
            match stmt.split_once("->") {
                Some((from, to)) => g.add_edge(Atom::new(from.trim())?, Atom::new(to.trim())?),
                None => {
                    g.vertices.insert(Atom::new(stmt.trim())?);
                }
            }
        }
        Ok(g)
    }
}

fn dot_id(label: &str) -> String {
    let plain = label
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if plain {
        label.to_string()
    } else {
        format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// The edges of the `kind` graph of `t`, each listed once, in the order the
/// rules of `t` first produce them.
pub fn edges_in_rule_order(t: &Theory, kind: GraphKind) -> Vec<(Atom, Atom)> {
    let mut seen = BTreeSet::new();
    let mut order = Vec::new();
    for member in t {
        for rule in rules_of(member) {
            let heads = spos(&rule.head);
            if heads.is_empty() {
                continue;
            }
            let bodies = match kind {
                GraphKind::Sp => spos(&rule.body),
                GraphKind::Pnn => positive_nonnegated(&rule.body),
            };
            for h in &heads {
                for b in &bodies {
                    let edge = (h.clone(), b.clone());
                    if seen.insert(edge.clone()) {
                        order.push(edge);
                    }
                }
            }
        }
    }
    order
}

pub fn g_sp(t: &Theory) -> DepGraph {
    DepGraph::build(t, GraphKind::Sp)
}

pub fn g_pnn(t: &Theory) -> DepGraph {
    DepGraph::build(t, GraphKind::Pnn)
}

pub fn subgraph_of(small: &DepGraph, big: &DepGraph) -> bool {
    small.is_subgraph_of(big)
}
