//! Maximum rainbow forests via matroid intersection.
//!
//! A rainbow forest is a common independent set of the graphic matroid of
//! the host graph and the partition matroid of its color classes (capacity
//! one per color). The maximum size is found with shortest augmenting paths
//! in the exchange graph.
//!
//! A forest on `k` vertices with `k - 1` edges is a spanning tree, so a
//! rainbow spanning tree of `G[within]` exists exactly when the maximum
//! rainbow forest has `|within| - 1` edges.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, Edge, EdgeColoring, Tree, UnionFind, Vertex};
use crate::error::{Error, Result};

/// Largest induced edge count [`max_rainbow_forest_bruteforce`] accepts.
pub const BRUTEFORCE_EDGE_LIMIT: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowForest {
    pub edges: Vec<(Edge, Color)>,
}

impl RainbowForest {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn into_tree(self, within: &[Vertex]) -> Tree {
        let mut vertices = within.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        Tree {
            vertices,
            edges: self.edges,
        }
    }
}

/// Ground element of an intersection instance: endpoints are local labels.
#[derive(Clone, Copy, Debug)]
struct Item {
    a: usize,
    b: usize,
    color: Color,
}

/// Maximum common independent set of the graphic matroid on `k` vertices and
/// the color partition matroid. Returns indices into `items`, sorted.
fn max_common_independent(k: usize, items: &[Item]) -> Vec<usize> {
    let m = items.len();
    let mut in_set = vec![false; m];
    let mut used_color: BTreeSet<Color> = BTreeSet::new();

    // Greedy start; augmentation repairs whatever the greedy misses.
    let mut uf = UnionFind::new(k);
    for (i, it) in items.iter().enumerate() {
        if !used_color.contains(&it.color) && uf.union(it.a, it.b) {
            in_set[i] = true;
            used_color.insert(it.color);
        }
    }

    loop {
        let current: Vec<usize> = (0..m).filter(|&i| in_set[i]).collect();
        if current.len() + 1 >= k.max(1) {
            break;
        }
        // Forest adjacency of the current set, for cycle lookups.
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
        for &i in &current {
            adj[items[i].a].push((items[i].b, i));
            adj[items[i].b].push((items[i].a, i));
        }
        // For y outside the set: None if it joins two trees, else the
        // set elements on the cycle it closes.
        let cycles: Vec<Option<Vec<usize>>> = (0..m)
            .map(|y| {
                if in_set[y] {
                    None
                } else {
                    forest_path(&adj, items[y].a, items[y].b)
                }
            })
            .collect();
        let is_source = |y: usize| !in_set[y] && cycles[y].is_none();
        // For y outside the set: the set element sharing its color, if any.
        let color_holder: Vec<Option<usize>> = (0..m)
            .map(|y| {
                current
                    .iter()
                    .copied()
                    .find(|&x| items[x].color == items[y].color)
            })
            .collect();
        let is_sink = |y: usize| color_holder[y].is_none();

        // BFS from sources; arcs y -> x when I - x + y keeps colors distinct,
        // x -> y when I - x + y stays a forest.
        let mut prev = vec![usize::MAX; m];
        let mut seen = vec![false; m];
        let mut queue = VecDeque::new();
        for y in 0..m {
            if is_source(y) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
        let mut end = None;
        while let Some(z) = queue.pop_front() {
            if !in_set[z] {
                if is_sink(z) {
                    end = Some(z);
                    break;
                }
                // The only x with color(x) == color(z) is its holder.
                if let Some(x) = color_holder[z] {
                    if !seen[x] {
                        seen[x] = true;
                        prev[x] = z;
                        queue.push_back(x);
                    }
                }
            } else {
                for y in 0..m {
                    if seen[y] || in_set[y] {
                        continue;
                    }
                    let exchangeable = match &cycles[y] {
                        None => true,
                        Some(path) => path.contains(&z),
                    };
                    if exchangeable {
                        seen[y] = true;
                        prev[y] = z;
                        queue.push_back(y);
                    }
                }
            }
        }
        let Some(mut z) = end else { break };
        loop {
            in_set[z] = !in_set[z];
            if prev[z] == usize::MAX {
                break;
            }
            z = prev[z];
        }
    }
    (0..m).filter(|&i| in_set[i]).collect()
}

/// Element indices on the forest path from `s` to `t`, or `None` if the two
/// lie in different trees.
fn forest_path(adj: &[Vec<(usize, usize)>], s: usize, t: usize) -> Option<Vec<usize>> {
    let mut via = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(x) = stack.pop() {
        if x == t {
            break;
        }
        for &(y, e) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                via[y] = Some((x, e));
                stack.push(y);
            }
        }
    }
    if !seen[t] {
        return None;
    }
    let mut path = Vec::new();
    let mut x = t;
    while let Some((p, e)) = via[x] {
        path.push(e);
        x = p;
    }
    Some(path)
}

fn local_instance(c: &EdgeColoring, within: &[Vertex]) -> (Vec<Vertex>, Vec<(Edge, Color)>, Vec<Item>) {
    let mut verts = within.to_vec();
    verts.sort_unstable();
    verts.dedup();
    let induced = c.induced_edges(&verts);
    let local = |x: Vertex| verts.binary_search(&x).unwrap();
    let items = induced
        .iter()
        .map(|&(e, color)| Item {
            a: local(e.u()),
            b: local(e.v()),
            color,
        })
        .collect();
    (verts, induced, items)
}

/// Size of a maximum rainbow forest of `G[within]`.
pub fn rainbow_rank(c: &EdgeColoring, within: &[Vertex]) -> usize {
    let (verts, _, items) = local_instance(c, within);
    max_common_independent(verts.len(), &items).len()
}

/// A maximum rainbow forest of `G[within]`; among all maximizers, the one
/// whose sorted edge list is lexicographically smallest.
pub fn max_rainbow_forest(c: &EdgeColoring, within: &[Vertex]) -> RainbowForest {
    let (verts, induced, items) = local_instance(c, within);
    let k = verts.len();
    let target = max_common_independent(k, &items).len();

    let mut chosen: Vec<usize> = Vec::with_capacity(target);
    let mut uf = UnionFind::new(k);
    let mut colors = BTreeSet::new();
    for i in 0..items.len() {
        if chosen.len() == target {
            break;
        }
        let it = items[i];
        if colors.contains(&it.color) || uf.same(it.a, it.b) {
            continue;
        }
        // Tentatively take item i, contract, and ask whether the later items
        // can still complete a maximum forest.
        let mut trial_uf = uf.clone();
        trial_uf.union(it.a, it.b);
        let mut trial_colors = colors.clone();
        trial_colors.insert(it.color);
        let mut roots: Vec<usize> = (0..k).map(|x| trial_uf.find(x)).collect();
        let mut labels = roots.clone();
        labels.sort_unstable();
        labels.dedup();
        for r in roots.iter_mut() {
            *r = labels.binary_search(r).unwrap();
        }
        let rest: Vec<Item> = items[i + 1..]
            .iter()
            .filter(|x| !trial_colors.contains(&x.color) && roots[x.a] != roots[x.b])
            .map(|x| Item {
                a: roots[x.a],
                b: roots[x.b],
                color: x.color,
            })
            .collect();
        let extra = max_common_independent(labels.len(), &rest).len();
        if chosen.len() + 1 + extra == target {
            chosen.push(i);
            uf = trial_uf;
            colors = trial_colors;
        }
    }
    RainbowForest {
        edges: chosen.into_iter().map(|i| induced[i]).collect(),
    }
}

/// Whether `G[within]` has a spanning tree with pairwise distinct colors.
pub fn has_rainbow_spanning_tree(c: &EdgeColoring, within: &[Vertex]) -> bool {
    let mut verts = within.to_vec();
    verts.sort_unstable();
    verts.dedup();
    if verts.len() <= 1 {
        return true;
    }
    if c.r() as usize + 1 < verts.len() {
        return false;
    }
    rainbow_rank(c, &verts) + 1 == verts.len()
}

/// The lexicographically smallest rainbow spanning tree of `G[within]`.
pub fn rainbow_spanning_tree(c: &EdgeColoring, within: &[Vertex]) -> Option<Tree> {
    let mut verts = within.to_vec();
    verts.sort_unstable();
    verts.dedup();
    if verts.len() <= 1 {
        return Some(Tree {
            vertices: verts,
            edges: Vec::new(),
        });
    }
    let forest = max_rainbow_forest(c, &verts);
    (forest.size() + 1 == verts.len()).then(|| forest.into_tree(&verts))
}

/// Maximum rainbow forest size by exhaustive search over edge subsets.
pub fn max_rainbow_forest_bruteforce(c: &EdgeColoring, within: &[Vertex]) -> Result<usize> {
    let mut verts = within.to_vec();
    verts.sort_unstable();
    verts.dedup();
    let induced = c.induced_edges(&verts);
    if induced.len() > BRUTEFORCE_EDGE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "brute-force rainbow forest (induced edges)",
            limit: BRUTEFORCE_EDGE_LIMIT,
            actual: induced.len(),
        });
    }
    Ok(bruteforce_size(&verts, &induced))
}

/// Unguarded core of [`max_rainbow_forest_bruteforce`]; the brute-force
/// solver also needs it for the 21-edge `K_7` block.
pub(crate) fn bruteforce_forest_size(c: &EdgeColoring, within: &[Vertex]) -> usize {
    let mut verts = within.to_vec();
    verts.sort_unstable();
    verts.dedup();
    let induced = c.induced_edges(&verts);
    bruteforce_size(&verts, &induced)
}

fn bruteforce_size(verts: &[Vertex], induced: &[(Edge, Color)]) -> usize {
    let edges: Vec<(usize, usize, Color)> = induced
        .iter()
        .map(|&(e, col)| {
            (
                verts.binary_search(&e.u()).unwrap(),
                verts.binary_search(&e.v()).unwrap(),
                col,
            )
        })
        .collect();
    let label: Vec<usize> = (0..verts.len()).collect();
    let mut best = 0;
    enumerate_subsets(&edges, 0, label, &mut Vec::new(), 0, &mut best);
    best
}

fn enumerate_subsets(
    edges: &[(usize, usize, Color)],
    i: usize,
    label: Vec<usize>,
    colors: &mut Vec<Color>,
    size: usize,
    best: &mut usize,
) {
    *best = (*best).max(size);
    if i == edges.len() || size + (edges.len() - i) <= *best {
        return;
    }
    let (a, b, col) = edges[i];
    if label[a] != label[b] && !colors.contains(&col) {
        let (from, to) = (label[b], label[a]);
        let merged: Vec<usize> = label.iter().map(|&l| if l == from { to } else { l }).collect();
        colors.push(col);
        enumerate_subsets(edges, i + 1, merged, colors, size + 1, best);
        colors.pop();
    }
    enumerate_subsets(edges, i + 1, label, colors, size, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::generate_canonical;

    fn is_rainbow_forest(f: &RainbowForest) -> bool {
        let mut colors = BTreeSet::new();
        let mut uf = UnionFind::new(64);
        f.edges
            .iter()
            .all(|&(e, c)| colors.insert(c) && uf.union(e.u(), e.v()))
    }

    #[test]
    fn monochromatic_k4() {
        let c = EdgeColoring::monochromatic(4).unwrap();
        let all = [0, 1, 2, 3];
        assert_eq!(max_rainbow_forest(&c, &all).size(), 1);
        assert_eq!(max_rainbow_forest_bruteforce(&c, &all).unwrap(), 1);
        assert!(!has_rainbow_spanning_tree(&c, &all));
        assert!(has_rainbow_spanning_tree(&c, &[0, 1]));
    }

    #[test]
    fn rainbow_complete_graphs() {
        let c = EdgeColoring::rainbow(4).unwrap();
        let f = max_rainbow_forest(&c, &[0, 1, 2, 3]);
        assert_eq!(f.size(), 3);
        assert!(is_rainbow_forest(&f));
        // lexicographically smallest spanning tree is the star at 0
        let star: Vec<Edge> = f.edges.iter().map(|&(e, _)| e).collect();
        assert_eq!(star, vec![Edge::new(0, 1), Edge::new(0, 2), Edge::new(0, 3)]);
        let k3 = EdgeColoring::rainbow(3).unwrap();
        assert_eq!(max_rainbow_forest_bruteforce(&k3, &[0, 1, 2]).unwrap(), 2);
    }

    #[test]
    fn canonical_5_3_on_first_four_vertices() {
        let (c, _) = generate_canonical(5, 3).unwrap();
        let x = [0, 1, 2, 3];
        assert_eq!(max_rainbow_forest_bruteforce(&c, &x).unwrap(), 3);
        let f = max_rainbow_forest(&c, &x);
        assert_eq!(f.size(), 3);
        assert!(is_rainbow_forest(&f));
        assert!(has_rainbow_spanning_tree(&c, &x));
        assert!(!has_rainbow_spanning_tree(&c, &[0, 1, 2, 3, 4]));
        let tree = rainbow_spanning_tree(&c, &x).unwrap();
        assert_eq!(tree.vertices, x.to_vec());
    }

    #[test]
    fn single_vertex_is_spanned() {
        let c = EdgeColoring::monochromatic(3).unwrap();
        assert!(has_rainbow_spanning_tree(&c, &[2]));
        assert_eq!(rainbow_spanning_tree(&c, &[1]).unwrap().edges.len(), 0);
        assert_eq!(max_rainbow_forest(&c, &[1]).size(), 0);
    }

    #[test]
    fn non_complete_host_needs_connectivity() {
        // path 0-1 and isolated pair 2-3: rainbow but not connected
        let raw = crate::coloring::RawColoring {
            n: 4,
            r: 2,
            complete: false,
            edges: vec![(0, 1, 1), (2, 3, 2)],
        };
        let c = EdgeColoring::from_raw(&raw).unwrap();
        assert_eq!(max_rainbow_forest(&c, &[0, 1, 2, 3]).size(), 2);
        assert!(!has_rainbow_spanning_tree(&c, &[0, 1, 2, 3]));
        assert!(has_rainbow_spanning_tree(&c, &[2, 3]));
    }

    #[test]
    fn bruteforce_guard() {
        let c = EdgeColoring::rainbow(7).unwrap();
        assert!(matches!(
            max_rainbow_forest_bruteforce(&c, &[0, 1, 2, 3, 4, 5, 6]),
            Err(Error::GuardExceeded { .. })
        ));
        assert_eq!(max_rainbow_forest_bruteforce(&c, &[0, 1, 2, 3, 4, 5]).unwrap(), 5);
    }
}
