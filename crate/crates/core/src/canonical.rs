//! The extremal coloring of `K_n` and its optimal partition.
//!
//! With `t = f(r)`: the clique on `S = {0..t}` is rainbow with colors
//! `1..=C(t,2)`; the next colors go one per edge to `(u, 0), (u, 1), ...`
//! where `u = t`; every other edge receives the fill color, which is the
//! color left unused by the first two steps if there is one.

use serde::{Deserialize, Serialize};

use crate::coloring::{choose2, Color, Edge, EdgeColoring, Tree, TreePartition, Vertex};
use crate::error::{Error, Result};
use crate::formula::f_of_r;
use crate::rainbow::rainbow_spanning_tree;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalLayout {
    pub t: usize,
    /// `0..t`.
    pub s: Vec<Vertex>,
    pub u: Vertex,
    /// `t + 1`, present when `n >= t + 2`.
    pub v: Option<Vertex>,
    /// Absent when no edge is left for the fill step.
    pub fill_color: Option<Color>,
    /// Colors placed on `u`-`S` edges, in assignment order.
    pub step_two_edges: Vec<(Color, Edge)>,
}

impl CanonicalLayout {
    /// `S ∪ {u} ∪ {v}`.
    pub fn core_vertices(&self) -> Vec<Vertex> {
        let mut x = self.s.clone();
        x.push(self.u);
        x.extend(self.v);
        x
    }
}

/// Canonical coloring with color 1 as the fill when every color is already used.
pub fn generate_canonical(n: usize, r: usize) -> Result<(EdgeColoring, CanonicalLayout)> {
    generate_canonical_with_fill(n, r, 1)
}

/// Canonical coloring; `fallback_fill` is the fill color used when the first
/// two steps exhaust all `r` colors.
pub fn generate_canonical_with_fill(
    n: usize,
    r: usize,
    fallback_fill: Color,
) -> Result<(EdgeColoring, CanonicalLayout)> {
    if n < 3 || r < 2 || r > choose2(n) {
        return Err(Error::InvalidArgument(format!(
            "canonical coloring needs n >= 3 and 2 <= r <= C(n,2), got n={n} r={r}"
        )));
    }
    if fallback_fill == 0 || fallback_fill as usize > r {
        return Err(Error::InvalidArgument(format!(
            "fill color {fallback_fill} outside 1..={r}"
        )));
    }
    let t = f_of_r(r)?;
    let u = t;
    let mut matrix = vec![0 as Color; n * n];
    let mut set = |a: Vertex, b: Vertex, c: Color| {
        matrix[a * n + b] = c;
        matrix[b * n + a] = c;
    };

    let mut next: Color = 1;
    for a in 0..t {
        for b in a + 1..t {
            set(a, b, next);
            next += 1;
        }
    }
    let mut step_two_edges = Vec::new();
    for s in 0..t {
        if next as usize > r {
            break;
        }
        set(s, u, next);
        step_two_edges.push((next, Edge::new(s, u)));
        next += 1;
    }
    let remaining = choose2(n) - choose2(t) - step_two_edges.len();
    let fill_color = match remaining {
        0 => None,
        _ if (next as usize) <= r => Some(next),
        _ => Some(fallback_fill),
    };
    let coloring = EdgeColoring::complete(n, r as Color, |e| {
        match matrix[e.u() * n + e.v()] {
            0 => fill_color.expect("uncolored edge without fill color"),
            c => c,
        }
    })?;
    let layout = CanonicalLayout {
        t,
        s: (0..t).collect(),
        u,
        v: (n >= t + 2).then_some(t + 1),
        fill_color,
        step_two_edges,
    };
    Ok((coloring, layout))
}

/// A partition with `ceil((n - t) / 2)` trees: a rainbow spanning tree on
/// `S ∪ {u} ∪ {v}`, a perfect matching on the rest, and one singleton if
/// the rest has odd size.
pub fn extremal_partition(c: &EdgeColoring, layout: &CanonicalLayout) -> Result<TreePartition> {
    let core = layout.core_vertices();
    let tree = rainbow_spanning_tree(c, &core).ok_or_else(|| Error::Defect {
        message: format!("no rainbow spanning tree on canonical core {core:?}"),
        instance: crate::io::write_coloring(c),
    })?;
    let mut trees = vec![tree];
    let rest: Vec<Vertex> = (core.len()..c.n()).collect();
    for pair in rest.chunks(2) {
        match *pair {
            [a, b] => {
                let e = Edge::new(a, b);
                trees.push(Tree::from_edges(vec![(e, c.color_of(e).unwrap())]));
            }
            [a] => trees.push(Tree::singleton(a)),
            _ => unreachable!(),
        }
    }
    Ok(TreePartition { trees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_partition_valid;
    use crate::formula::partition_number;
    use crate::io::write_coloring;

    #[test]
    fn k4_three_colors() {
        let (c, l) = generate_canonical(4, 3).unwrap();
        assert_eq!((l.t, l.u, l.v), (2, 2, Some(3)));
        assert_eq!(l.s, vec![0, 1]);
        assert_eq!(c.color(0, 1), Some(1));
        assert_eq!(c.color(0, 2), Some(2));
        assert_eq!(c.color(1, 2), Some(3));
        assert_eq!(l.fill_color, Some(1));
        for (a, b) in [(0, 3), (1, 3), (2, 3)] {
            assert_eq!(c.color(a, b), Some(1));
        }
    }

    #[test]
    fn k5_four_colors_uses_spare_fill() {
        let (c, l) = generate_canonical(5, 4).unwrap();
        assert_eq!(l.t, 2);
        assert_eq!(
            l.step_two_edges,
            vec![(2, Edge::new(0, 2)), (3, Edge::new(1, 2))]
        );
        assert_eq!(l.fill_color, Some(4));
        let filled = c.edges().iter().filter(|&&(_, col)| col == 4).count();
        assert_eq!(filled, 7);
    }

    #[test]
    fn full_color_count_is_rainbow() {
        for n in 3..=9 {
            let (c, l) = generate_canonical(n, choose2(n)).unwrap();
            assert_eq!(l.t, n - 1);
            assert_eq!(l.fill_color, None);
            assert_eq!(l.step_two_edges.len(), n - 1);
            assert_eq!(c, EdgeColoring::complete(n, choose2(n) as Color, |e| c.color_of(e).unwrap()).unwrap());
            let mut seen: Vec<Color> = c.edges().iter().map(|&(_, col)| col).collect();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), choose2(n));
        }
    }

    #[test]
    fn extremal_5_3() {
        let (c, l) = generate_canonical(5, 3).unwrap();
        assert_eq!(l.core_vertices(), vec![0, 1, 2, 3]);
        let p = extremal_partition(&c, &l).unwrap();
        assert!(is_partition_valid(&c, &p));
        assert_eq!(p.count(), 2);
        assert_eq!(p.trees[0].edges.len(), 3);
        assert_eq!(p.trees[1], Tree::singleton(4));
    }

    #[test]
    fn extremal_small_cases() {
        let (c, l) = generate_canonical(4, 3).unwrap();
        let p = extremal_partition(&c, &l).unwrap();
        assert_eq!(p.count(), 1);
        let colors: Vec<Color> = p.trees[0].edges.iter().map(|&(_, col)| col).collect();
        assert_eq!(colors.len(), 3);

        let (c, l) = generate_canonical(8, 5).unwrap();
        assert_eq!(l.t, 3);
        assert_eq!(l.core_vertices().len(), 5);
        let p = extremal_partition(&c, &l).unwrap();
        assert!(is_partition_valid(&c, &p));
        assert_eq!(p.count(), 3);
    }

    #[test]
    fn matches_formula_for_all_parameters() {
        for n in 3..=10 {
            for r in 2..=choose2(n) {
                let (c, l) = generate_canonical(n, r).unwrap();
                let p = extremal_partition(&c, &l).unwrap();
                assert!(is_partition_valid(&c, &p), "n={n} r={r}");
                assert_eq!(p.count(), partition_number(n, r).unwrap(), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn deterministic_output() {
        let a = write_coloring(&generate_canonical(7, 9).unwrap().0);
        let b = write_coloring(&generate_canonical(7, 9).unwrap().0);
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate_canonical(2, 1).is_err());
        assert!(generate_canonical(4, 1).is_err());
        assert!(generate_canonical(4, 7).is_err());
        assert!(generate_canonical_with_fill(4, 3, 4).is_err());
    }
}
