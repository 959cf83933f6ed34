//! A polynomial-time partition algorithm for edge-colored complete graphs.
//!
//! Pick one representative edge per color. The chosen edges form a rainbow
//! subgraph whose components are `G_1, ..., G_k` with `n_1 >= ... >= n_k`.
//! Reassign single representatives while that strictly enlarges `n_1`. Once
//! no reassignment helps, a spanning tree of `G_1` is rainbow and becomes one
//! tree of the partition; the rest of the graph is handled recursively under
//! the induced coloring. Every level is polynomial and `n_1` can grow at most
//! `n - 2` times per level.

use serde::{Deserialize, Serialize};

use crate::coloring::{restrict, Color, Edge, EdgeColoring, Tree, TreePartition, UnionFind, Vertex};
use crate::error::{Error, Result};
use crate::formula::{f_of_r, partition_number};
use crate::io::write_coloring;

/// One edge per color, plus the components those edges form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentativeSubgraph {
    /// `rep_edge[c - 1]` represents color `c`.
    pub rep_edge: Vec<Edge>,
    /// Vertex sets of the components, largest first, ties by smallest vertex.
    pub components: Vec<Vec<Vertex>>,
}

impl RepresentativeSubgraph {
    pub fn new(n: usize, rep_edge: Vec<Edge>) -> Self {
        let components = components_of(n, &rep_edge);
        RepresentativeSubgraph {
            rep_edge,
            components,
        }
    }

    /// Order of the largest component.
    pub fn n1(&self) -> usize {
        self.components.first().map_or(0, Vec::len)
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn edges_with_colors(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.rep_edge
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as Color + 1))
    }
}

fn components_of(n: usize, edges: &[Edge]) -> Vec<Vec<Vertex>> {
    let mut uf = UnionFind::new(n);
    let mut touched = vec![false; n];
    for e in edges {
        uf.union(e.u(), e.v());
        touched[e.u()] = true;
        touched[e.v()] = true;
    }
    let mut by_root: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for x in (0..n).filter(|&x| touched[x]) {
        let root = uf.find(x);
        by_root[root].push(x);
    }
    let mut comps: Vec<Vec<Vertex>> = by_root.into_iter().filter(|c| !c.is_empty()).collect();
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    comps
}

fn largest_component(n: usize, edges: &[Edge]) -> usize {
    let mut uf = UnionFind::new(n);
    let mut best = 0;
    for e in edges {
        uf.union(e.u(), e.v());
        best = best.max(uf.component_size(e.u()));
    }
    best
}

/// Reassigning color `color` from `old` to `new` grows the largest component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapMove {
    pub color: Color,
    pub old: Edge,
    pub new: Edge,
    pub n1_after: usize,
}

/// The lexicographically smallest edge of every color.
pub fn initial_representatives(c: &EdgeColoring) -> Result<RepresentativeSubgraph> {
    if c.r() < 1 {
        return Err(Error::InvalidArgument("coloring has no colors".into()));
    }
    let reps = c.color_classes().into_iter().map(|class| class[0]).collect();
    Ok(RepresentativeSubgraph::new(c.n(), reps))
}

/// First reassignment, scanning colors upward and candidate edges in
/// lexicographic order, that strictly increases `n_1`.
pub fn find_swap(s: &RepresentativeSubgraph, c: &EdgeColoring) -> Option<SwapMove> {
    let n1 = s.n1();
    let classes = c.color_classes();
    let mut trial = s.rep_edge.clone();
    for (i, class) in classes.iter().enumerate() {
        let old = s.rep_edge[i];
        for &g in class {
            if g == old {
                continue;
            }
            trial[i] = g;
            let after = largest_component(c.n(), &trial);
            if after > n1 {
                return Some(SwapMove {
                    color: i as Color + 1,
                    old,
                    new: g,
                    n1_after: after,
                });
            }
        }
        trial[i] = old;
    }
    None
}

pub fn apply_swap(s: &RepresentativeSubgraph, n: usize, m: &SwapMove) -> RepresentativeSubgraph {
    let mut reps = s.rep_edge.clone();
    reps[m.color as usize - 1] = m.new;
    RepresentativeSubgraph::new(n, reps)
}

/// What happened at one recursion level, in that level's own labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelTrace {
    pub n: usize,
    pub r: usize,
    pub swaps: usize,
    /// Order of the tree split off at this level.
    pub n1: usize,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructiveResult {
    pub partition: TreePartition,
    pub levels: Vec<LevelTrace>,
}

/// Partitions a complete graph into at most `partition_number(n, r)` rainbow
/// trees. A result above that bound is returned as [`Error::Defect`].
pub fn partition_complete(c: &EdgeColoring) -> Result<ConstructiveResult> {
    if !c.is_complete() {
        return Err(Error::InvalidArgument(
            "constructive partition needs a complete graph".into(),
        ));
    }
    let mut levels = Vec::new();
    let partition = build(c, &mut levels)?;
    let bound = partition_number(c.n(), c.r() as usize)?;
    if partition.count() > bound {
        return Err(Error::Defect {
            message: format!(
                "constructive partition has {} trees, bound is {bound}",
                partition.count()
            ),
            instance: write_coloring(c),
        });
    }
    Ok(ConstructiveResult { partition, levels })
}

fn matching(n: usize, c: &EdgeColoring) -> TreePartition {
    let verts: Vec<Vertex> = (0..n).collect();
    let trees = verts
        .chunks(2)
        .map(|p| match *p {
            [a, b] => Tree::from_edges(vec![(Edge::new(a, b), c.color(a, b).unwrap())]),
            [a] => Tree::singleton(a),
            _ => unreachable!(),
        })
        .collect();
    TreePartition { trees }
}

fn build(c: &EdgeColoring, levels: &mut Vec<LevelTrace>) -> Result<TreePartition> {
    let n = c.n();
    let r = c.r() as usize;
    if n == 1 {
        return Ok(TreePartition {
            trees: vec![Tree::singleton(0)],
        });
    }
    if r == 1 {
        levels.push(LevelTrace {
            n,
            r,
            swaps: 0,
            n1: 2,
            k: 1,
        });
        return Ok(matching(n, c));
    }

    let mut s = initial_representatives(c)?;
    let mut swaps = 0;
    while let Some(m) = find_swap(&s, c) {
        s = apply_swap(&s, n, &m);
        swaps += 1;
    }
    let t = f_of_r(r)?;
    if s.k() == 1 && s.n1() < t + 2 && s.n1() < n {
        return Err(Error::Defect {
            message: format!(
                "locally maximal connected representative subgraph has n1={} < t+2={}",
                s.n1(),
                t + 2
            ),
            instance: write_coloring(c),
        });
    }
    levels.push(LevelTrace {
        n,
        r,
        swaps,
        n1: s.n1(),
        k: s.k(),
    });

    let g1 = s.components[0].clone();
    let mut uf = UnionFind::new(n);
    let mut tree_edges: Vec<(Edge, Color)> = s
        .edges_with_colors()
        .filter(|(e, _)| g1.binary_search(&e.u()).is_ok())
        .collect();
    tree_edges.sort_unstable();
    tree_edges.retain(|(e, _)| uf.union(e.u(), e.v()));
    let mut trees = vec![Tree {
        vertices: g1.clone(),
        edges: tree_edges,
    }];

    let rest: Vec<Vertex> = (0..n).filter(|x| g1.binary_search(x).is_err()).collect();
    if !rest.is_empty() {
        let (sub, map) = restrict(c, &rest)?;
        let inner = build(&sub, levels)?;
        trees.extend(map.lift(&inner).trees);
    }
    Ok(TreePartition { trees })
}
