//! Exact minimum heterochromatic tree partitions by dynamic programming over
//! vertex subsets.
//!
//! `best[mask]` is the fewest rainbow trees covering `mask`. The block that
//! covers the lowest vertex of `mask` is enumerated over submasks, so each
//! partition is counted once regardless of block order. A block is usable
//! when its induced subgraph has a rainbow spanning tree; that test is run
//! lazily and cached per block.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::coloring::{EdgeColoring, Tree, TreePartition, Vertex};
use crate::error::{Error, Result};
use crate::rainbow::{bruteforce_forest_size, has_rainbow_spanning_tree, rainbow_spanning_tree};

pub const DEFAULT_MAX_N: usize = 14;
pub const BRUTEFORCE_MAX_N: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOptions {
    pub max_n: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_n: DEFAULT_MAX_N,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    /// (mask, block) pairs examined by the recurrence.
    pub subsets_explored: u64,
    /// Blocks whose feasibility was actually computed.
    pub feasibility_checks: u64,
    pub cache_hits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub count: usize,
    pub partition: TreePartition,
    pub stats: SolveStats,
}

fn mask_vertices(mask: u32) -> Vec<Vertex> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

struct Feasibility<'a> {
    c: &'a EdgeColoring,
    /// 0 unknown, 1 feasible, 2 infeasible.
    cache: Vec<u8>,
    stats: SolveStats,
}

impl Feasibility<'_> {
    fn check(&mut self, block: u32) -> bool {
        match self.cache[block as usize] {
            1 => {
                self.stats.cache_hits += 1;
                true
            }
            2 => {
                self.stats.cache_hits += 1;
                false
            }
            _ => {
                self.stats.feasibility_checks += 1;
                let size = block.count_ones() as usize;
                let ok = match size {
                    1 => true,
                    _ if size > self.c.r() as usize + 1 => false,
                    2 => {
                        let v = mask_vertices(block);
                        self.c.color(v[0], v[1]).is_some()
                    }
                    _ => has_rainbow_spanning_tree(self.c, &mask_vertices(block)),
                };
                self.cache[block as usize] = if ok { 1 } else { 2 };
                ok
            }
        }
    }
}

pub fn solve(c: &EdgeColoring) -> Result<SolveResult> {
    solve_with(c, SolveOptions::default())
}

pub fn solve_with(c: &EdgeColoring, opts: SolveOptions) -> Result<SolveResult> {
    let n = c.n();
    if n > opts.max_n || n > 24 {
        return Err(Error::GuardExceeded {
            what: "exact solver (vertices)",
            limit: opts.max_n.min(24),
            actual: n,
        });
    }
    let full: u32 = (1u32 << n) - 1;
    let mut feas = Feasibility {
        c,
        cache: vec![0; 1usize << n],
        stats: SolveStats::default(),
    };
    let mut best = vec![u8::MAX; 1usize << n];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut value = u8::MAX;
        let mut sub = rest;
        loop {
            let block = sub | low;
            feas.stats.subsets_explored += 1;
            let remainder = best[(mask ^ block) as usize];
            // A block can only help if it beats the current value.
            if remainder.saturating_add(1) < value && feas.check(block) {
                value = remainder + 1;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        best[mask as usize] = value;
    }

    // Reconstruct with the numerically smallest optimal block at each step.
    let mut trees = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let target = best[mask as usize] - 1;
        let mut chosen = None;
        let mut sub = 0u32;
        loop {
            let block = sub | low;
            if best[(mask ^ block) as usize] == target && feas.check(block) {
                chosen = Some(block);
                break;
            }
            if sub == rest {
                break;
            }
            // next submask of `rest` in increasing order
            sub = (sub.wrapping_sub(rest)) & rest;
        }
        let block = chosen.expect("dp value without a witness block");
        let verts = mask_vertices(block);
        let tree = match verts.len() {
            1 => Tree::singleton(verts[0]),
            _ => rainbow_spanning_tree(c, &verts).expect("feasible block without rainbow tree"),
        };
        trees.push(tree);
        mask ^= block;
    }
    Ok(SolveResult {
        count: best[full as usize] as usize,
        partition: TreePartition { trees },
        stats: feas.stats,
    })
}

/// Minimum over all set partitions of the vertices whose every block has a
/// rainbow spanning tree, with blocks tested by exhaustive edge search.
pub fn solve_bruteforce(c: &EdgeColoring) -> Result<usize> {
    let n = c.n();
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::GuardExceeded {
            what: "brute-force solver (vertices)",
            limit: BRUTEFORCE_MAX_N,
            actual: n,
        });
    }
    let mut block_ok: HashMap<Vec<Vertex>, bool> = HashMap::new();
    let mut ok = |block: &[Vertex]| -> bool {
        *block_ok
            .entry(block.to_vec())
            .or_insert_with(|| bruteforce_forest_size(c, block) + 1 == block.len())
    };
    // Restricted growth strings enumerate each set partition exactly once.
    let mut labels = vec![0usize; n];
    let mut best = usize::MAX;
    loop {
        let blocks = labels.iter().max().map_or(0, |m| m + 1);
        if blocks < best {
            let mut all = true;
            for b in 0..blocks {
                let members: Vec<Vertex> = (0..n).filter(|&i| labels[i] == b).collect();
                if !ok(&members) {
                    all = false;
                    break;
                }
            }
            if all {
                best = blocks;
            }
        }
        if !next_growth_string(&mut labels) {
            break;
        }
    }
    Ok(best)
}

/// Advances a restricted growth string in place; false after the last one.
pub(crate) fn next_growth_string(labels: &mut [usize]) -> bool {
    for i in (1..labels.len()).rev() {
        let prefix_max = labels[..i].iter().copied().max().unwrap_or(0);
        if labels[i] <= prefix_max {
            labels[i] += 1;
            for x in &mut labels[i + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::generate_canonical;
    use crate::coloring::is_partition_valid;

    #[test]
    fn growth_strings_count_bell_numbers() {
        for (n, bell) in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)] {
            let mut labels = vec![0; n];
            let mut count = 1;
            while next_growth_string(&mut labels) {
                count += 1;
            }
            assert_eq!(count, bell, "n={n}");
        }
    }

    #[test]
    fn monochromatic_triangle() {
        let c = EdgeColoring::monochromatic(3).unwrap();
        let res = solve(&c).unwrap();
        assert_eq!(res.count, 2);
        assert!(is_partition_valid(&c, &res.partition));
        assert_eq!(solve_bruteforce(&c).unwrap(), 2);
    }

    #[test]
    fn canonical_examples() {
        let (c, _) = generate_canonical(4, 3).unwrap();
        assert_eq!(solve(&c).unwrap().count, 1);
        let (c, _) = generate_canonical(5, 3).unwrap();
        assert_eq!(solve(&c).unwrap().count, 2);
        assert_eq!(solve_bruteforce(&c).unwrap(), 2);
        let (c, _) = generate_canonical(6, 5).unwrap();
        assert_eq!(solve_bruteforce(&c).unwrap(), 2);
    }

    #[test]
    fn monochromatic_is_matching() {
        for n in 1..=10 {
            let c = EdgeColoring::monochromatic(n).unwrap();
            let res = solve(&c).unwrap();
            assert_eq!(res.count, n.div_ceil(2), "n={n}");
            assert!(is_partition_valid(&c, &res.partition));
        }
    }

    #[test]
    fn bruteforce_small_cases() {
        assert_eq!(solve_bruteforce(&EdgeColoring::rainbow(5).unwrap()).unwrap(), 1);
        assert_eq!(solve_bruteforce(&EdgeColoring::monochromatic(4).unwrap()).unwrap(), 2);
    }

    #[test]
    fn lowest_blocks_first() {
        let c = EdgeColoring::monochromatic(4).unwrap();
        let res = solve(&c).unwrap();
        let blocks: Vec<Vec<Vertex>> = res.partition.trees.iter().map(|t| t.vertices.clone()).collect();
        assert_eq!(blocks, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn guards() {
        let big = EdgeColoring::monochromatic(15).unwrap();
        assert!(matches!(solve(&big), Err(Error::GuardExceeded { .. })));
        let eight = EdgeColoring::monochromatic(8).unwrap();
        assert!(matches!(solve_bruteforce(&eight), Err(Error::GuardExceeded { .. })));
        assert!(solve_with(&eight, SolveOptions { max_n: 6 }).is_err());
    }
}
