//! Edge-colored simple graphs, tree partitions and the elementary
//! transformations on them.
//!
//! Vertices are `0..n`, colors are `1..=r`. An [`EdgeColoring`] is always a
//! valid `r`-edge-coloring: every color in `1..=r` labels at least one edge.
//! Unchecked input lives in [`RawColoring`] until [`validate`] accepts it.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Color = u32;

/// Number of unordered pairs of `n` items.
pub fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// An unordered vertex pair stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Panics on a loop.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert_ne!(a, b, "loop at vertex {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// A coloring as read from input, before any checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawColoring {
    pub n: usize,
    pub r: Color,
    /// Declared completeness; [`validate`] reports `IncompleteGraph` when the
    /// edge list falls short of it.
    pub complete: bool,
    pub edges: Vec<(Vertex, Vertex, Color)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    EmptyGraph,
    BadVertex { u: Vertex, v: Vertex },
    BadColor { u: Vertex, v: Vertex, color: Color },
    DuplicateEdge { u: Vertex, v: Vertex },
    MissingColor(Color),
    IncompleteGraph { present: usize, required: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyGraph => write!(f, "EmptyGraph"),
            Violation::BadVertex { u, v } => write!(f, "BadVertex({u},{v})"),
            Violation::BadColor { u, v, color } => write!(f, "BadColor({u},{v}:{color})"),
            Violation::DuplicateEdge { u, v } => write!(f, "DuplicateEdge({u},{v})"),
            Violation::MissingColor(c) => write!(f, "MissingColor({c})"),
            Violation::IncompleteGraph { present, required } => {
                write!(f, "IncompleteGraph({present}/{required})")
            }
        }
    }
}

/// Every structural problem of `raw`, in a stable order. Empty means valid.
pub fn validate(raw: &RawColoring) -> Vec<Violation> {
    let mut out = Vec::new();
    if raw.n == 0 {
        out.push(Violation::EmptyGraph);
    }
    let mut seen = BTreeSet::new();
    let mut used = vec![false; raw.r as usize + 1];
    for &(u, v, c) in &raw.edges {
        if u >= v || v >= raw.n {
            out.push(Violation::BadVertex { u, v });
            continue;
        }
        if c == 0 || c > raw.r {
            out.push(Violation::BadColor { u, v, color: c });
        } else {
            used[c as usize] = true;
        }
        if !seen.insert((u, v)) {
            out.push(Violation::DuplicateEdge { u, v });
        }
    }
    for c in 1..=raw.r {
        if !used[c as usize] {
            out.push(Violation::MissingColor(c));
        }
    }
    if raw.complete && seen.len() != choose2(raw.n) {
        out.push(Violation::IncompleteGraph {
            present: seen.len(),
            required: choose2(raw.n),
        });
    }
    out
}

/// A valid `r`-edge-coloring of a simple graph on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    r: Color,
    /// `n * n` symmetric lookup, 0 for a non-edge.
    matrix: Vec<Color>,
    /// Sorted lexicographically.
    edges: Vec<(Edge, Color)>,
}

impl EdgeColoring {
    pub fn from_raw(raw: &RawColoring) -> Result<Self> {
        let violations = validate(raw);
        if !violations.is_empty() {
            return Err(Error::InvalidColoring(violations));
        }
        let n = raw.n;
        let mut matrix = vec![0; n * n];
        let mut edges = Vec::with_capacity(raw.edges.len());
        for &(u, v, c) in &raw.edges {
            matrix[u * n + v] = c;
            matrix[v * n + u] = c;
            edges.push((Edge::new(u, v), c));
        }
        edges.sort_unstable();
        Ok(EdgeColoring {
            n,
            r: raw.r,
            matrix,
            edges,
        })
    }

    /// Colors every pair of `K_n` with `color_of`, then validates against `r`.
    pub fn complete(n: usize, r: Color, mut color_of: impl FnMut(Edge) -> Color) -> Result<Self> {
        let mut edges = Vec::with_capacity(choose2(n));
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, color_of(Edge::new(u, v))));
            }
        }
        Self::from_raw(&RawColoring {
            n,
            r,
            complete: true,
            edges,
        })
    }

    /// `K_n` with every edge colored 1 (`r = 1`, or `r = 0` for a single vertex).
    pub fn monochromatic(n: usize) -> Result<Self> {
        let r = if n >= 2 { 1 } else { 0 };
        Self::complete(n, r, |_| 1)
    }

    /// `K_n` with all `C(n,2)` edges colored distinctly, in lexicographic order.
    pub fn rainbow(n: usize) -> Result<Self> {
        let mut next = 0;
        Self::complete(n, choose2(n) as Color, |_| {
            next += 1;
            next
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> Color {
        self.r
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == choose2(self.n)
    }

    /// Color of the pair `{a, b}`, or `None` when it is not an edge.
    pub fn color(&self, a: Vertex, b: Vertex) -> Option<Color> {
        if a >= self.n || b >= self.n {
            return None;
        }
        match self.matrix[a * self.n + b] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn color_of(&self, e: Edge) -> Option<Color> {
        self.color(e.u, e.v)
    }

    pub fn edges(&self) -> &[(Edge, Color)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges of each color; index `c - 1` holds color `c`, each list sorted.
    pub fn color_classes(&self) -> Vec<Vec<Edge>> {
        let mut classes = vec![Vec::new(); self.r as usize];
        for &(e, c) in &self.edges {
            classes[c as usize - 1].push(e);
        }
        classes
    }

    /// Edges of the subgraph induced by `within` (a sorted vertex list), sorted.
    pub fn induced_edges(&self, within: &[Vertex]) -> Vec<(Edge, Color)> {
        let mut out = Vec::new();
        for (i, &a) in within.iter().enumerate() {
            for &b in &within[i + 1..] {
                if let Some(c) = self.color(a, b) {
                    out.push((Edge::new(a, b), c));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn to_raw(&self) -> RawColoring {
        RawColoring {
            n: self.n,
            r: self.r,
            complete: self.is_complete(),
            edges: self.edges.iter().map(|&(e, c)| (e.u, e.v, c)).collect(),
        }
    }
}

/// One vertex-disjoint piece of a [`TreePartition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tree {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Edge, Color)>,
}

impl Tree {
    pub fn singleton(v: Vertex) -> Self {
        Tree {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Builds a tree from its edges; the vertex set is the set of endpoints.
    pub fn from_edges(edges: Vec<(Edge, Color)>) -> Self {
        let vertices: BTreeSet<Vertex> = edges.iter().flat_map(|(e, _)| [e.u, e.v]).collect();
        Tree {
            vertices: vertices.into_iter().collect(),
            edges,
        }
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreePartition {
    pub trees: Vec<Tree>,
}

impl TreePartition {
    pub fn count(&self) -> usize {
        self.trees.len()
    }

    /// Sorts vertices and edges inside each tree and orders trees by their
    /// smallest vertex.
    pub fn normalize(&mut self) {
        for t in &mut self.trees {
            t.vertices.sort_unstable();
            t.edges.sort_unstable();
        }
        self.trees
            .sort_by_key(|t| t.vertices.first().copied().unwrap_or(usize::MAX));
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartitionViolation {
    EmptyTree { tree: usize },
    VertexOutOfRange { vertex: Vertex },
    VertexReused { vertex: Vertex },
    VertexUncovered { vertex: Vertex },
    EdgeOutsideTree { tree: usize, edge: Edge },
    MissingEdge { edge: Edge },
    WrongColor { edge: Edge, recorded: Color, actual: Color },
    RepeatedColor { tree: usize, color: Color },
    NotATree { tree: usize },
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PartitionViolation::*;
        match self {
            EmptyTree { tree } => write!(f, "tree {tree} has no vertices"),
            VertexOutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            VertexReused { vertex } => write!(f, "vertex {vertex} appears in two trees"),
            VertexUncovered { vertex } => write!(f, "vertex {vertex} is not covered"),
            EdgeOutsideTree { tree, edge } => {
                write!(f, "edge {edge} of tree {tree} leaves its vertex set")
            }
            MissingEdge { edge } => write!(f, "edge {edge} is not in the graph"),
            WrongColor {
                edge,
                recorded,
                actual,
            } => write!(f, "edge {edge} recorded with color {recorded}, graph has {actual}"),
            RepeatedColor { tree, color } => write!(f, "tree {tree} repeats color {color}"),
            NotATree { tree } => write!(f, "tree {tree} is not a spanning tree of its vertices"),
        }
    }
}

/// First violated partition invariant, if any.
pub fn check_partition(c: &EdgeColoring, p: &TreePartition) -> std::result::Result<(), PartitionViolation> {
    let n = c.n();
    let mut owner = vec![usize::MAX; n];
    for (i, t) in p.trees.iter().enumerate() {
        if t.vertices.is_empty() {
            return Err(PartitionViolation::EmptyTree { tree: i });
        }
        for &x in &t.vertices {
            if x >= n {
                return Err(PartitionViolation::VertexOutOfRange { vertex: x });
            }
            if owner[x] != usize::MAX {
                return Err(PartitionViolation::VertexReused { vertex: x });
            }
            owner[x] = i;
        }
    }
    if let Some(x) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(PartitionViolation::VertexUncovered { vertex: x });
    }
    for (i, t) in p.trees.iter().enumerate() {
        let mut colors = BTreeSet::new();
        let mut uf = UnionFind::new(n);
        for &(e, rec) in &t.edges {
            if e.v >= n || owner[e.u] != i || owner[e.v] != i {
                return Err(PartitionViolation::EdgeOutsideTree { tree: i, edge: e });
            }
            match c.color_of(e) {
                None => return Err(PartitionViolation::MissingEdge { edge: e }),
                Some(actual) if actual != rec => {
                    return Err(PartitionViolation::WrongColor {
                        edge: e,
                        recorded: rec,
                        actual,
                    })
                }
                Some(_) => {}
            }
            if !colors.insert(rec) {
                return Err(PartitionViolation::RepeatedColor { tree: i, color: rec });
            }
            if !uf.union(e.u, e.v) {
                return Err(PartitionViolation::NotATree { tree: i });
            }
        }
        if t.edges.len() + 1 != t.vertices.len() {
            return Err(PartitionViolation::NotATree { tree: i });
        }
    }
    Ok(())
}

pub fn is_partition_valid(c: &EdgeColoring, p: &TreePartition) -> bool {
    check_partition(c, p).is_ok()
}

/// Recolors every `from` edge with `to` and closes the gap left by `from`,
/// giving a valid `(r-1)`-edge-coloring.
pub fn merge_colors(c: &EdgeColoring, from: Color, to: Color) -> Result<EdgeColoring> {
    if from == to {
        return Err(Error::InvalidArgument(format!("cannot merge color {from} into itself")));
    }
    for x in [from, to] {
        if x == 0 || x > c.r() {
            return Err(Error::InvalidArgument(format!(
                "color {x} outside 1..={}",
                c.r()
            )));
        }
    }
    let relabel = |x: Color| {
        let x = if x == from { to } else { x };
        if x > from {
            x - 1
        } else {
            x
        }
    };
    let raw = RawColoring {
        n: c.n(),
        r: c.r() - 1,
        complete: c.is_complete(),
        edges: c
            .edges()
            .iter()
            .map(|&(e, x)| (e.u, e.v, relabel(x)))
            .collect(),
    };
    EdgeColoring::from_raw(&raw)
}

/// Vertex and color renumbering produced by [`restrict`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    /// `vertices[new] = old`, increasing.
    pub vertices: Vec<Vertex>,
    /// `colors[new - 1] = old`, increasing.
    pub colors: Vec<Color>,
}

impl Restriction {
    pub fn old_vertex(&self, new: Vertex) -> Vertex {
        self.vertices[new]
    }

    pub fn new_vertex(&self, old: Vertex) -> Option<Vertex> {
        self.vertices.binary_search(&old).ok()
    }

    pub fn old_color(&self, new: Color) -> Color {
        self.colors[new as usize - 1]
    }

    pub fn new_color(&self, old: Color) -> Option<Color> {
        self.colors.binary_search(&old).ok().map(|i| i as Color + 1)
    }

    /// Surviving color count, the `r0` of the restricted instance.
    pub fn surviving_colors(&self) -> usize {
        self.colors.len()
    }

    /// Translates a partition of the restricted instance back to old labels.
    pub fn lift(&self, p: &TreePartition) -> TreePartition {
        TreePartition {
            trees: p
                .trees
                .iter()
                .map(|t| Tree {
                    vertices: t.vertices.iter().map(|&x| self.old_vertex(x)).collect(),
                    edges: t
                        .edges
                        .iter()
                        .map(|&(e, col)| {
                            (
                                Edge::new(self.old_vertex(e.u), self.old_vertex(e.v)),
                                self.old_color(col),
                            )
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    /// The map obtained by restricting with `self` and then with `inner`.
    pub fn compose(&self, inner: &Restriction) -> Restriction {
        Restriction {
            vertices: inner.vertices.iter().map(|&x| self.old_vertex(x)).collect(),
            colors: inner.colors.iter().map(|&c| self.old_color(c)).collect(),
        }
    }
}

/// Coloring induced on `keep`, renumbered to `0..|keep|` and `1..=r0`
/// preserving relative order.
pub fn restrict(c: &EdgeColoring, keep: &[Vertex]) -> Result<(EdgeColoring, Restriction)> {
    let vertices: Vec<Vertex> = keep.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if vertices.is_empty() {
        return Err(Error::InvalidArgument("restriction to an empty vertex set".into()));
    }
    if let Some(&bad) = vertices.iter().find(|&&x| x >= c.n()) {
        return Err(Error::InvalidArgument(format!("vertex {bad} out of range")));
    }
    let induced = c.induced_edges(&vertices);
    let colors: Vec<Color> = induced
        .iter()
        .map(|&(_, col)| col)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let map = Restriction { vertices, colors };
    let raw = RawColoring {
        n: map.vertices.len(),
        r: map.colors.len() as Color,
        complete: c.is_complete(),
        edges: induced
            .iter()
            .map(|&(e, col)| {
                (
                    map.new_vertex(e.u).unwrap(),
                    map.new_vertex(e.v).unwrap(),
                    map.new_color(col).unwrap(),
                )
            })
            .collect(),
    };
    Ok((EdgeColoring::from_raw(&raw)?, map))
}

/// Path-halving union-find over `0..n`.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn component_size(&mut self, x: usize) -> usize {
        let root = self.find(x);
        self.size[root]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3(colors: [Color; 3], r: Color) -> RawColoring {
        RawColoring {
            n: 3,
            r,
            complete: true,
            edges: vec![(0, 1, colors[0]), (0, 2, colors[1]), (1, 2, colors[2])],
        }
    }

    #[test]
    fn rainbow_triangle_is_valid() {
        assert!(validate(&k3([1, 2, 3], 3)).is_empty());
    }

    #[test]
    fn unused_color_is_reported() {
        assert_eq!(validate(&k3([1, 1, 2], 3)), vec![Violation::MissingColor(3)]);
    }

    #[test]
    fn missing_pair_in_complete_graph() {
        let raw = RawColoring {
            n: 4,
            r: 1,
            complete: true,
            edges: vec![(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)],
        };
        assert_eq!(
            validate(&raw),
            vec![Violation::IncompleteGraph {
                present: 5,
                required: 6
            }]
        );
    }

    #[test]
    fn structural_violations() {
        let raw = RawColoring {
            n: 3,
            r: 2,
            complete: false,
            edges: vec![(0, 1, 1), (1, 0, 1), (0, 3, 2), (0, 1, 2), (1, 2, 7)],
        };
        let v = validate(&raw);
        assert!(v.contains(&Violation::BadVertex { u: 1, v: 0 }));
        assert!(v.contains(&Violation::BadVertex { u: 0, v: 3 }));
        assert!(v.contains(&Violation::DuplicateEdge { u: 0, v: 1 }));
        assert!(v.contains(&Violation::BadColor { u: 1, v: 2, color: 7 }));
        assert!(validate(&RawColoring::default()).contains(&Violation::EmptyGraph));
    }

    #[test]
    fn single_vertex_needs_zero_colors() {
        let one = RawColoring {
            n: 1,
            r: 0,
            complete: true,
            edges: vec![],
        };
        assert!(validate(&one).is_empty());
        let bad = RawColoring { r: 1, ..one };
        assert_eq!(validate(&bad), vec![Violation::MissingColor(1)]);
    }

    #[test]
    fn partition_checks() {
        let rainbow = EdgeColoring::from_raw(&k3([1, 2, 3], 3)).unwrap();
        let star = TreePartition {
            trees: vec![Tree::from_edges(vec![(Edge::new(0, 1), 1), (Edge::new(0, 2), 2)])],
        };
        assert_eq!(check_partition(&rainbow, &star), Ok(()));

        let mono = EdgeColoring::monochromatic(3).unwrap();
        let path = TreePartition {
            trees: vec![Tree::from_edges(vec![(Edge::new(0, 1), 1), (Edge::new(1, 2), 1)])],
        };
        assert_eq!(
            check_partition(&mono, &path),
            Err(PartitionViolation::RepeatedColor { tree: 0, color: 1 })
        );

        let k4 = EdgeColoring::monochromatic(4).unwrap();
        let overlap = TreePartition {
            trees: vec![
                Tree::from_edges(vec![(Edge::new(0, 1), 1)]),
                Tree::from_edges(vec![(Edge::new(1, 2), 1), (Edge::new(2, 3), 1)]),
            ],
        };
        assert_eq!(
            check_partition(&k4, &overlap),
            Err(PartitionViolation::VertexReused { vertex: 1 })
        );
    }

    #[test]
    fn partition_rejects_wrong_color_and_gaps() {
        let c = EdgeColoring::from_raw(&k3([1, 2, 3], 3)).unwrap();
        let wrong = TreePartition {
            trees: vec![
                Tree::from_edges(vec![(Edge::new(0, 1), 2)]),
                Tree::singleton(2),
            ],
        };
        assert!(matches!(
            check_partition(&c, &wrong),
            Err(PartitionViolation::WrongColor { .. })
        ));
        let gap = TreePartition {
            trees: vec![Tree::singleton(0), Tree::singleton(1)],
        };
        assert_eq!(
            check_partition(&c, &gap),
            Err(PartitionViolation::VertexUncovered { vertex: 2 })
        );
        let disconnected = TreePartition {
            trees: vec![Tree {
                vertices: vec![0, 1, 2],
                edges: vec![(Edge::new(0, 1), 1)],
            }],
        };
        assert_eq!(
            check_partition(&c, &disconnected),
            Err(PartitionViolation::NotATree { tree: 0 })
        );
    }

    #[test]
    fn merge_relabels_densely() {
        let rainbow = EdgeColoring::from_raw(&k3([1, 2, 3], 3)).unwrap();
        let merged = merge_colors(&rainbow, 3, 2).unwrap();
        assert_eq!(merged.r(), 2);
        assert_eq!(merged.color(0, 1), Some(1));
        assert_eq!(merged.color(0, 2), Some(2));
        assert_eq!(merged.color(1, 2), Some(2));

        let mono = merge_colors(&merged, 2, 1).unwrap();
        assert_eq!(mono, EdgeColoring::monochromatic(3).unwrap());

        // merging downward from the middle shifts the colors above it
        let low = merge_colors(&rainbow, 2, 3).unwrap();
        assert_eq!(low.color(0, 2), Some(2));
        assert_eq!(low.color(1, 2), Some(2));

        assert!(merge_colors(&rainbow, 2, 2).is_err());
        assert!(merge_colors(&rainbow, 4, 1).is_err());
        assert!(merge_colors(&rainbow, 0, 1).is_err());
    }

    #[test]
    fn restrict_rainbow_k4() {
        let k4 = EdgeColoring::rainbow(4).unwrap();
        let (sub, map) = restrict(&k4, &[0, 1, 2]).unwrap();
        assert_eq!(sub, EdgeColoring::rainbow(3).unwrap());
        assert_eq!(map.surviving_colors(), 3);
        assert_eq!(map.vertices, vec![0, 1, 2]);
        assert_eq!(map.colors, vec![1, 2, 4]);

        let (same, id) = restrict(&k4, &[3, 2, 1, 0]).unwrap();
        assert_eq!(same, k4);
        assert_eq!(id.vertices, vec![0, 1, 2, 3]);
        assert_eq!(id.colors, (1..=6).collect::<Vec<_>>());

        let (single, m) = restrict(&k4, &[2]).unwrap();
        assert_eq!((single.n(), single.r(), m.surviving_colors()), (1, 0, 0));

        assert!(restrict(&k4, &[]).is_err());
        assert!(restrict(&k4, &[4]).is_err());
    }

    #[test]
    fn lift_translates_back() {
        let k4 = EdgeColoring::rainbow(4).unwrap();
        let (sub, map) = restrict(&k4, &[1, 3]).unwrap();
        let p = TreePartition {
            trees: vec![Tree::from_edges(vec![(Edge::new(0, 1), 1)])],
        };
        assert!(is_partition_valid(&sub, &p));
        let lifted = map.lift(&p);
        assert_eq!(lifted.trees[0].vertices, vec![1, 3]);
        assert_eq!(lifted.trees[0].edges, vec![(Edge::new(1, 3), k4.color(1, 3).unwrap())]);
    }
}
