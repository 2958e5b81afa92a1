//! Free trees of a given order, one per isomorphism class.
//!
//! Level sequences of rooted trees are stepped in reverse lexicographic
//! order (Beyer and Hedetniemi), and only sequences rooted at a centroid
//! with a canonical left subtree are kept (Wright, Richmond, Odlyzko and
//! McKay). The order of the output is fixed.

use crate::error::{Error, Result};
use crate::graph::Tree;

pub const DEFAULT_MAX_ORDER: usize = 16;

/// Iterator over the free trees of one order.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    layout: Option<Vec<usize>>,
    single: bool,
}

/// All free trees on `n` vertices, `1 <= n <= 16`.
pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees> {
    enumerate_free_trees_with_max(n, DEFAULT_MAX_ORDER)
}

pub fn enumerate_free_trees_with_max(n: usize, max: usize) -> Result<FreeTrees> {
    if n == 0 || n > max {
        return Err(Error::InvalidParameter(format!(
            "tree order must be in 1..={max}, got {n}"
        )));
    }
    if n == 1 {
        return Ok(FreeTrees {
            layout: None,
            single: true,
        });
    }
    let mut layout: Vec<usize> = (0..=n / 2).collect();
    layout.extend(1..n.div_ceil(2));
    Ok(FreeTrees {
        layout: Some(layout),
        single: false,
    })
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.single {
            self.single = false;
            return Some(Tree::single_vertex());
        }
        let layout = next_tree(self.layout.take()?)?;
        let tree = layout_to_tree(&layout);
        self.layout = next_rooted_tree(&layout, None);
        Some(tree)
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] + 1 != pred[p] {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().max().copied().unwrap_or(0);
    let rest_height = rest.iter().max().copied().unwrap_or(0);
    let valid = rest_height > left_height
        || (rest_height == left_height
            && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().max().copied().unwrap_or(0);
        let len = next.len();
        for (slot, level) in next[len - (h + 1)..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Some(next)
}

/// The subtree of the root's first child (levels shifted down by one), and
/// the rest of the tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|p| *p.1 == 1)
        .nth(1)
        .map_or(layout.len(), |p| p.0);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut edges = Vec::with_capacity(layout.len() - 1);
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] < level {
                edges.push((i, j));
                break;
            }
            stack.pop();
        }
        stack.push(i);
    }
    Tree::from_edges(layout.len(), &edges).expect("level sequences describe trees")
}

/// Every free tree with `lo <= n <= hi` vertices, by order.
pub fn trees_in_range(lo: usize, hi: usize) -> Result<Vec<(usize, Vec<Tree>)>> {
    (lo..=hi)
        .map(|n| Ok((n, enumerate_free_trees(n)?.collect())))
        .collect()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::canon::{free_code, CanonicalCode};

    /// Known class counts for 1..=16 vertices.
    const COUNTS: [usize; 16] = [
        1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
    ];

    /// Decodes every Prüfer sequence and keeps one tree per canonical code.
    fn pruefer_classes(n: usize) -> BTreeSet<CanonicalCode> {
        let mut out = BTreeSet::new();
        if n <= 2 {
            out.insert(free_code(&Tree::path(n).unwrap()));
            return out;
        }
        let len = n - 2;
        let mut seq = vec![0usize; len];
        loop {
            let mut degree = vec![1usize; n];
            for &s in &seq {
                degree[s] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &s in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, s));
                degree[leaf] = 0;
                degree[s] -= 1;
            }
            let ends: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((ends[0], ends[1]));
            out.insert(free_code(&Tree::from_edges(n, &edges).unwrap()));
            let mut i = 0;
            while i < len && seq[i] == n - 1 {
                seq[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
            seq[i] += 1;
        }
        out
    }

    /// Grows every class of order `n-1` by one leaf at each vertex.
    fn grown_classes(prev: &[Tree]) -> BTreeSet<CanonicalCode> {
        let mut out = BTreeSet::new();
        for t in prev {
            let n = t.order();
            for v in 0..n {
                let mut edges = t.graph().edges().to_vec();
                edges.push((v, n));
                out.insert(free_code(&Tree::from_edges(n + 1, &edges).unwrap()));
            }
        }
        out
    }

    fn generated(n: usize) -> Vec<Tree> {
        enumerate_free_trees(n).unwrap().collect()
    }

    #[test]
    fn counts_match_known_values() {
        for n in 1..=16 {
            assert_eq!(generated(n).len(), COUNTS[n - 1], "n = {n}");
        }
    }

    #[test]
    fn no_duplicates_and_deterministic() {
        for n in 1..=12 {
            let trees = generated(n);
            let codes: BTreeSet<_> = trees.iter().map(free_code).collect();
            assert_eq!(codes.len(), trees.len(), "duplicate at n = {n}");
            assert_eq!(trees, generated(n));
        }
    }

    #[test]
    fn matches_pruefer_oracle() {
        for n in 1..=9 {
            let codes: BTreeSet<_> = generated(n).iter().map(free_code).collect();
            assert_eq!(codes, pruefer_classes(n), "n = {n}");
        }
    }

    #[test]
    fn matches_leaf_growth_oracle() {
        let mut prev = generated(1);
        for n in 2..=12 {
            let codes: BTreeSet<_> = generated(n).iter().map(free_code).collect();
            assert_eq!(codes, grown_classes(&prev), "n = {n}");
            prev = generated(n);
        }
    }

    #[test]
    fn range_errors() {
        assert!(enumerate_free_trees(0).is_err());
        assert!(enumerate_free_trees(17).is_err());
        assert_eq!(enumerate_free_trees_with_max(17, 17).unwrap().count(), 48629);
    }
}
