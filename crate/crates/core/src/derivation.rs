//! The graph of m-gaps where an edge `x -> x + (a_k - a_i)` joins an m-gap
//! to the (m-1)-gap it determines through a nonzero coefficient `c_i`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::analysis::{GapAnalysis, GapClass};
use crate::error::{Error, Result};
use crate::represent::all_reps;
use crate::set::Level;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub m: Level,
    pub x: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: Node,
    pub to: Node,
    /// 1-based index of the denomination whose coefficient was nonzero.
    pub via: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DerivationGraph {
    /// Sorted by `m`, then `x`.
    pub nodes: Vec<Node>,
    /// Sorted by source, then target, then index.
    pub edges: Vec<Edge>,
}

/// The (m-1)-gaps determined by the m-gap `x`: `(x + a_k - a_i, i)` for
/// every `i` with `c_i > 0` in any `m`-representation of `x_m`.
pub fn parents_of(x: u64, m: Level, analysis: &GapAnalysis) -> Result<BTreeSet<(u64, usize)>> {
    if analysis.class(x) != Some(GapClass::MGap(m)) || m <= analysis.h0 {
        return Err(Error::NotAnMGap { x, m });
    }
    let a = analysis.set.as_slice();
    let top = analysis.set.top();
    let xm = analysis.shifted(x, m);
    let mut out = BTreeSet::new();
    for rep in all_reps(a, xm, m) {
        for (i, &c) in rep.coefficients().iter().enumerate() {
            if c > 0 && i + 1 < a.len() {
                out.insert((x + top - a[i], i + 1));
            }
        }
    }
    Ok(out)
}

pub fn build_graph(analysis: &GapAnalysis) -> DerivationGraph {
    let mut nodes: Vec<Node> = analysis.m_gaps().map(|(x, m)| Node { m, x }).collect();
    nodes.sort();
    let mut edges = Vec::new();
    for &from in &nodes {
        if from.m <= analysis.h0 {
            continue;
        }
        let targets = parents_of(from.x, from.m, analysis).expect("node is an m-gap");
        edges.extend(targets.into_iter().map(|(x, via)| Edge {
            from,
            to: Node { m: from.m - 1, x },
            via,
        }));
    }
    edges.sort();
    DerivationGraph { nodes, edges }
}

/// A maximal group of level-m gaps linked through shared targets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharedGroup {
    pub m: Level,
    /// Level-m gaps in the group, ascending.
    pub sources: Vec<u64>,
    /// Distinct (m-1)-gaps they determine, ascending.
    pub targets: Vec<u64>,
}

impl SharedGroup {
    /// Fewer targets than sources: the local shape behind a rise in `d(h)`.
    pub fn is_flagged(&self) -> bool {
        self.targets.len() < self.sources.len()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SharedParentReport {
    /// Groups of two or more sources, ordered by level then smallest source.
    pub groups: Vec<SharedGroup>,
}

impl SharedParentReport {
    pub fn flagged(&self) -> impl Iterator<Item = &SharedGroup> {
        self.groups.iter().filter(|g| g.is_flagged())
    }
}

/// Groups the sources at each level into connected components of the
/// source/target incidence and keeps those with at least two sources.
pub fn shared_parent_stats(graph: &DerivationGraph) -> SharedParentReport {
    let mut by_level: BTreeMap<Level, Vec<&Edge>> = BTreeMap::new();
    for e in &graph.edges {
        by_level.entry(e.from.m).or_default().push(e);
    }
    let mut groups = Vec::new();
    for (m, edges) in by_level {
        let sources: Vec<u64> = edges
            .iter()
            .map(|e| e.from.x)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index = |x: u64| sources.binary_search(&x).unwrap();
        let mut parent: Vec<usize> = (0..sources.len()).collect();
        let mut first_source_of: BTreeMap<u64, usize> = BTreeMap::new();
        for e in &edges {
            let s = index(e.from.x);
            match first_source_of.get(&e.to.x) {
                Some(&other) => union(&mut parent, s, other),
                None => {
                    first_source_of.insert(e.to.x, s);
                }
            }
        }
        let mut components: BTreeMap<usize, (BTreeSet<u64>, BTreeSet<u64>)> = BTreeMap::new();
        for e in &edges {
            let root = find(&mut parent, index(e.from.x));
            let entry = components.entry(root).or_default();
            entry.0.insert(e.from.x);
            entry.1.insert(e.to.x);
        }
        let mut level_groups: Vec<SharedGroup> = components
            .into_values()
            .filter(|(s, _)| s.len() >= 2)
            .map(|(s, t)| SharedGroup {
                m,
                sources: s.into_iter().collect(),
                targets: t.into_iter().collect(),
            })
            .collect();
        level_groups.sort_by_key(|g| g.sources[0]);
        groups.extend(level_groups);
    }
    SharedParentReport { groups }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

impl DerivationGraph {
    /// One edge per line: `m x -> m-1 x' via i`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.edges {
            let _ = writeln!(s, "{} {} -> {} {} via {}", e.from.m, e.from.x, e.to.m, e.to.x, e.via);
        }
        s
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph gaps {\n  rankdir=LR;\n");
        let mut levels: BTreeMap<Level, Vec<u64>> = BTreeMap::new();
        for n in &self.nodes {
            levels.entry(n.m).or_default().push(n.x);
        }
        for (m, xs) in levels.iter().rev() {
            let _ = write!(s, "  {{ rank=same;");
            for x in xs {
                let _ = write!(s, " \"{m}:{x}\"");
            }
            s.push_str(" }\n");
            for x in xs {
                let _ = writeln!(s, "  \"{m}:{x}\" [label=\"{x}\\n{m}-gap\"];");
            }
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  \"{}:{}\" -> \"{}:{}\" [label=\"{}\"];",
                e.from.m, e.from.x, e.to.m, e.to.x, e.via
            );
        }
        s.push_str("}\n");
        s
    }

    /// Number of nodes at level `m`.
    pub fn level_size(&self, m: Level) -> usize {
        self.nodes.iter().filter(|n| n.m == m).count()
    }
}
