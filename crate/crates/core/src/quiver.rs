//! Quivers, their paths, and the algebras built from them.
//!
//! Paths compose left to right: `(α₁, …, α_n)` requires
//! `target(α_i) = source(α_{i+1})`. In the path algebras the vertex
//! idempotents act as `e_{source(p)} · p = p = p · e_{target(p)}`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteDimAlgebra;
use crate::error::{Error, Result};
use crate::field::FieldDescriptor;

/// Longest path length [`Quiver::paths_of_length`] accepts by default.
pub const DEFAULT_PATH_BOUND: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    arrows: Vec<usize>,
    source: usize,
    target: usize,
}

impl Path {
    pub fn vertex(v: usize) -> Self {
        Path { arrows: Vec::new(), source: v, target: v }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn is_parallel_to(&self, other: &Path) -> bool {
        self.source == other.source && self.target == other.target
    }

    /// Concatenation `self` then `other`, if the endpoints match.
    pub fn then(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { arrows, source: self.source, target: other.target })
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            write!(f, "e{}", self.source)
        } else {
            let names: Vec<String> = self.arrows.iter().map(|a| format!("a{a}")).collect();
            f.write_str(&names.join("·"))
        }
    }
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidParameter("a quiver needs at least one vertex".into()));
        }
        if let Some(&(s, t)) = arrows.iter().find(|&&(s, t)| s >= vertex_count || t >= vertex_count) {
            return Err(Error::InvalidParameter(format!(
                "arrow {s}→{t} out of range for {vertex_count} vertices"
            )));
        }
        Ok(Quiver { vertex_count, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        let (s, t) = self.arrows[a];
        Path { arrows: vec![a], source: s, target: t }
    }

    /// All paths of length `n`, ordered lexicographically by arrow index
    /// sequence. Length 0 gives the vertex paths.
    pub fn paths_of_length(&self, n: usize) -> Result<Vec<Path>> {
        self.paths_of_length_bounded(n, DEFAULT_PATH_BOUND)
    }

    pub fn paths_of_length_bounded(&self, n: usize, bound: usize) -> Result<Vec<Path>> {
        if n > bound {
            return Err(Error::InvalidParameter(format!("path length {n} exceeds bound {bound}")));
        }
        if n == 0 {
            return Ok((0..self.vertex_count).map(Path::vertex).collect());
        }
        let mut layer: Vec<Path> = (0..self.arrows.len()).map(|a| self.arrow_path(a)).collect();
        for _ in 1..n {
            layer = layer
                .iter()
                .flat_map(|p| {
                    (0..self.arrows.len())
                        .filter(move |&a| self.arrows[a].0 == p.target)
                        .map(move |a| p.then(&self.arrow_path(a)).expect("endpoints match"))
                })
                .collect();
        }
        Ok(layer)
    }

    /// `(source, target) ↦ number of length-n paths`.
    fn endpoint_counts(&self, n: usize) -> Result<HashMap<(usize, usize), usize>> {
        let mut counts = HashMap::new();
        for p in self.paths_of_length(n)? {
            *counts.entry((p.source, p.target)).or_insert(0) += 1;
        }
        Ok(counts)
    }

    /// `#(Q_n ∥ Q_m)`: pairs of a length-`n` and a length-`m` path with the same
    /// endpoints.
    pub fn parallel_count(&self, n: usize, m: usize) -> Result<usize> {
        let cn = self.endpoint_counts(n)?;
        let cm = self.endpoint_counts(m)?;
        Ok(cn.iter().map(|(k, x)| x * cm.get(k).copied().unwrap_or(0)).sum())
    }

    /// The pairs counted by [`parallel_count`](Self::parallel_count), ordered
    /// by the first path and then the second.
    pub fn parallel_pairs(&self, n: usize, m: usize) -> Result<Vec<(Path, Path)>> {
        let pn = self.paths_of_length(n)?;
        let pm = self.paths_of_length(m)?;
        Ok(pn
            .iter()
            .flat_map(|x| pm.iter().filter(|y| x.is_parallel_to(y)).map(move |y| (x.clone(), y.clone())))
            .collect())
    }

    /// `Some(c)` when the quiver is a single oriented cycle through all of its
    /// `c` vertices (a loop is the 1-crown).
    pub fn is_crown(&self) -> Option<usize> {
        let c = self.vertex_count;
        if self.arrows.len() != c {
            return None;
        }
        let mut next = vec![None; c];
        let mut indeg = vec![0; c];
        for &(s, t) in &self.arrows {
            if next[s].is_some() {
                return None;
            }
            next[s] = Some(t);
            indeg[t] += 1;
        }
        if indeg.iter().any(|&d| d != 1) {
            return None;
        }
        // one orbit of the successor permutation covers every vertex
        let mut v = 0;
        for step in 1..=c {
            v = next[v].expect("out-degree 1");
            if v == 0 {
                return (step == c).then_some(c);
            }
        }
        None
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for &(s, t) in &self.arrows {
            let (rs, rt) = (find(&mut parent, s), find(&mut parent, t));
            parent[rs] = rt;
        }
        let root = find(&mut parent, 0);
        (0..self.vertex_count).all(|v| find(&mut parent, v) == root)
    }

    /// Whether some nonempty path starts and ends at the same vertex.
    pub fn has_oriented_cycle(&self) -> bool {
        // Kahn: a directed graph is acyclic iff every vertex can be peeled off
        let mut indeg = vec![0usize; self.vertex_count];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut stack: Vec<usize> = (0..self.vertex_count).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        removed < self.vertex_count
    }

    /// Length of the longest path, `None` when there is an oriented cycle.
    pub fn longest_path_length(&self) -> Option<usize> {
        if self.has_oriented_cycle() {
            return None;
        }
        let mut n = 0;
        while !self.paths_of_length(n + 1).ok()?.is_empty() {
            n += 1;
        }
        Some(n)
    }

    /// The path algebra modulo paths of length at least two: basis the vertex
    /// idempotents followed by the arrows.
    pub fn truncated_path_algebra(&self, field: FieldDescriptor) -> Result<FiniteDimAlgebra> {
        let mut basis: Vec<Path> = self.paths_of_length(0)?;
        basis.extend((0..self.arrows.len()).map(|a| self.arrow_path(a)));
        self.algebra_on_paths(field, basis)
    }

    /// The full path algebra of an acyclic quiver: basis all paths by length,
    /// then lexicographically.
    pub fn path_algebra_acyclic(&self, field: FieldDescriptor) -> Result<FiniteDimAlgebra> {
        let longest = self
            .longest_path_length()
            .ok_or_else(|| Error::Hypothesis("path algebra of a quiver with an oriented cycle is infinite-dimensional".into()))?;
        let mut basis = Vec::new();
        for n in 0..=longest {
            basis.extend(self.paths_of_length(n)?);
        }
        self.algebra_on_paths(field, basis)
    }

    /// Algebra with basis `paths`, product concatenation, and zero whenever the
    /// concatenation is not in the basis.
    fn algebra_on_paths(&self, field: FieldDescriptor, basis: Vec<Path>) -> Result<FiniteDimAlgebra> {
        let d = basis.len();
        let index: HashMap<&Path, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut table = vec![vec![vec![field.zero(); d]; d]; d];
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let product = match (x.is_empty(), y.is_empty()) {
                    (true, true) => (x.source == y.source).then(|| x.clone()),
                    (true, false) => (x.source == y.source).then(|| y.clone()),
                    (false, true) => (x.target == y.source).then(|| x.clone()),
                    (false, false) => x.then(y),
                };
                if let Some(k) = product.as_ref().and_then(|p| index.get(p)) {
                    table[i][j][*k] = field.one();
                }
            }
        }
        let mut unit = vec![field.zero(); d];
        for v in 0..self.vertex_count {
            unit[index[&Path::vertex(v)]] = field.one();
        }
        let labels = basis.iter().map(ToString::to_string).collect();
        FiniteDimAlgebra::verified(field, labels, table, unit)
    }
}

/// The named quivers of the toolkit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardQuiver {
    Roundtrip,
    Qtilde,
    FourPoints,
    Loop,
    Kronecker,
    Crown(usize),
    /// `0 → 1 → … → n−1`.
    Linear(usize),
    /// `0 → 1` plus a loop at `1`.
    LoopArrow,
}

impl StandardQuiver {
    pub fn build(&self) -> Result<Quiver> {
        match self {
            StandardQuiver::Roundtrip => Quiver::new(2, vec![(0, 1), (1, 0)]),
            StandardQuiver::Qtilde => Quiver::new(3, vec![(1, 2)]),
            StandardQuiver::FourPoints => Quiver::new(4, vec![]),
            StandardQuiver::Loop => Quiver::new(1, vec![(0, 0)]),
            StandardQuiver::Kronecker => Quiver::new(2, vec![(0, 1), (0, 1)]),
            StandardQuiver::Crown(0) => Err(Error::InvalidParameter("crown(0)".into())),
            StandardQuiver::Crown(c) => Quiver::new(*c, (0..*c).map(|i| (i, (i + 1) % c)).collect()),
            StandardQuiver::Linear(0) => Err(Error::InvalidParameter("linear(0)".into())),
            StandardQuiver::Linear(n) => Quiver::new(*n, (1..*n).map(|i| (i - 1, i)).collect()),
            StandardQuiver::LoopArrow => Quiver::new(2, vec![(0, 1), (1, 1)]),
        }
    }

    pub fn name(&self) -> String {
        match self {
            StandardQuiver::Roundtrip => "roundtrip".into(),
            StandardQuiver::Qtilde => "qtilde".into(),
            StandardQuiver::FourPoints => "four_points".into(),
            StandardQuiver::Loop => "loop".into(),
            StandardQuiver::Kronecker => "kronecker".into(),
            StandardQuiver::Crown(c) => format!("crown({c})"),
            StandardQuiver::Linear(n) => format!("linear({n})"),
            StandardQuiver::LoopArrow => "loop_arrow".into(),
        }
    }
}

impl std::str::FromStr for StandardQuiver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let param = |prefix: &str| -> Option<usize> {
            s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?.parse().ok()
        };
        Ok(match s {
            "roundtrip" => StandardQuiver::Roundtrip,
            "qtilde" => StandardQuiver::Qtilde,
            "four_points" => StandardQuiver::FourPoints,
            "loop" => StandardQuiver::Loop,
            "kronecker" => StandardQuiver::Kronecker,
            "loop_arrow" => StandardQuiver::LoopArrow,
            _ => {
                if let Some(c) = param("crown") {
                    StandardQuiver::Crown(c)
                } else if let Some(n) = param("linear") {
                    StandardQuiver::Linear(n)
                } else {
                    return Err(Error::UnknownName(format!("quiver {s:?}")));
                }
            }
        })
    }
}

/// Convenience wrapper: parse a quiver name and build it.
pub fn standard_quiver(name: &str) -> Result<Quiver> {
    name.parse::<StandardQuiver>()?.build()
}
