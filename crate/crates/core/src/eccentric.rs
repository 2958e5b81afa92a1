//! Eccentric sequences of trees and the bounds on `D` and `F` they imply.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::canon::{free_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::extremal::spider;
use crate::graph::Tree;

/// Run-length encoded eccentric sequence `(r^(m_r), ..., d^(m_d))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EccentricSequence {
    pairs: Vec<(usize, usize)>,
}

impl EccentricSequence {
    /// Validates `(i, m_i)` pairs: consecutive indices and every `m_i >= 1`.
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::SequenceSyntax("empty sequence".into()));
        }
        for w in pairs.windows(2) {
            if w[1].0 != w[0].0 + 1 {
                return Err(Error::SequenceSyntax(format!(
                    "indices {} and {} are not consecutive",
                    w[0].0, w[1].0
                )));
            }
        }
        if let Some(&(i, _)) = pairs.iter().find(|p| p.1 == 0) {
            return Err(Error::SequenceSyntax(format!("multiplicity of {i} is zero")));
        }
        Ok(Self { pairs })
    }

    /// From a start index and the multiplicities `m_r, m_(r+1), ...`.
    pub fn from_counts(radius: usize, counts: &[usize]) -> Result<Self> {
        Self::new(counts.iter().enumerate().map(|(k, &m)| (radius + k, m)).collect())
    }

    pub fn of(tree: &Tree) -> Self {
        let ecc = tree.eccentricities();
        let lo = *ecc.iter().min().expect("nonempty");
        let hi = *ecc.iter().max().expect("nonempty");
        let mut counts = vec![0; hi - lo + 1];
        for e in ecc {
            counts[e - lo] += 1;
        }
        Self::from_counts(lo, &counts).expect("tree eccentricities have no gaps")
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn radius(&self) -> usize {
        self.pairs[0].0
    }

    pub fn diameter(&self) -> usize {
        self.pairs[self.pairs.len() - 1].0
    }

    /// `m_i`, zero outside `r..=d`.
    pub fn m(&self, i: usize) -> usize {
        let r = self.radius();
        if i < r {
            return 0;
        }
        self.pairs.get(i - r).map_or(0, |p| p.1)
    }

    pub fn total(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    /// Whether some tree has this eccentric sequence.
    pub fn lesniak_realizable(&self) -> bool {
        let (r, d) = (self.radius(), self.diameter());
        let tail_ok = (r + 1..=d).all(|i| self.m(i) >= 2);
        let head_ok = (d == 2 * r && self.m(r) == 1) || (d + 1 == 2 * r && self.m(r) == 2);
        tail_ok && head_ok
    }

    /// `max{m_d - 1, max_{r <= i < d} (m_i - 2)}`.
    pub fn distinguishing_bound_m(&self) -> i64 {
        let (r, d) = (self.radius(), self.diameter());
        let inner = (r..d).map(|i| self.m(i) as i64 - 2).max();
        let top = self.m(d) as i64 - 1;
        inner.map_or(top, |x| x.max(top))
    }

    /// `m_d - 2 + sum_{i=r}^{d-1} max{m_i - 3, 0}`.
    pub fn fixing_bound(&self) -> i64 {
        let (r, d) = (self.radius(), self.diameter());
        self.m(d) as i64 - 2
            + (r..d)
                .map(|i| (self.m(i) as i64 - 3).max(0))
                .sum::<i64>()
    }

    /// `max_{2 <= i <= d} (m_i - m_(i-1) - m_(i+1))`, floored at zero, with
    /// `m_(d+1) = 0` and `m_j = 0` below the radius.
    pub fn prop53_lower_bound(&self) -> usize {
        let d = self.diameter();
        (2..=d)
            .map(|i| self.m(i) as i64 - self.m(i - 1) as i64 - self.m(i + 1) as i64)
            .max()
            .unwrap_or(0)
            .max(0) as usize
    }

    /// True iff `m_s < m_(s+1) = ... = m_d` for some `s`.
    pub fn prop54_not_asymmetric(&self) -> bool {
        let (r, d) = (self.radius(), self.diameter());
        (r..d).any(|s| {
            let tail = self.m(d);
            self.m(s) < self.m(s + 1) && (s + 1..=d).all(|i| self.m(i) == tail)
        })
    }

    /// Every realizable sequence with at most `max_total` vertices.
    pub fn realizable_up_to(max_total: usize) -> Vec<Self> {
        let mut out = Vec::new();
        if max_total == 0 {
            return out;
        }
        // n = 1 is the lone (0^(1))
        out.push(Self::from_counts(0, &[1]).expect("valid"));
        for r in 1..=max_total {
            for (d, head) in [(2 * r - 1, 2usize), (2 * r, 1usize)] {
                let levels = d - r;
                if head + 2 * levels > max_total {
                    continue;
                }
                let mut counts = vec![head];
                counts.extend(std::iter::repeat_n(2, levels));
                fill_tails(&mut counts, 1, max_total, r, &mut out);
            }
        }
        out.sort();
        out
    }
}

fn fill_tails(
    counts: &mut Vec<usize>,
    pos: usize,
    max_total: usize,
    r: usize,
    out: &mut Vec<EccentricSequence>,
) {
    if pos == counts.len() {
        out.push(EccentricSequence::from_counts(r, counts).expect("valid"));
        return;
    }
    let base: usize = counts.iter().sum();
    let slack = max_total - base;
    let start = counts[pos];
    for extra in 0..=slack {
        counts[pos] = start + extra;
        fill_tails(counts, pos + 1, max_total, r, out);
    }
    counts[pos] = start;
}

impl fmt::Display for EccentricSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (i, m)) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}^({m})")?;
        }
        Ok(())
    }
}

impl FromStr for EccentricSequence {
    type Err = Error;

    /// Accepts `3^(1) 4^(3) 5^(5)`; a bare `i` means `i^(1)`. Commas and
    /// surrounding parentheses are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut pairs = Vec::new();
        for token in cleaned.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let bad = || Error::SequenceSyntax(format!("bad term `{token}`"));
            let (i, m) = match token.split_once('^') {
                Some((i, m)) => {
                    let m = m.trim_start_matches('(').trim_end_matches(')');
                    (i.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?)
                }
                None => (token.parse().map_err(|_| bad())?, 1),
            };
            pairs.push((i, m));
        }
        Self::new(pairs)
    }
}

/// Free codes of every member of the family of order `n`: paths, stars and
/// `S_{r,r,k}` with `1 <= k < r`.
fn family_d_codes(n: usize) -> BTreeSet<CanonicalCode> {
    let mut members = vec![Tree::path(n).expect("n >= 1")];
    if n >= 2 {
        members.push(Tree::star(n - 1).expect("n >= 2"));
    }
    for r in 2..n {
        for k in 1..r {
            if 2 * r + k + 1 == n {
                members.push(spider(&[r, r, k]));
            }
        }
    }
    members.iter().map(free_code).collect()
}

/// The extra members of the larger family: `S_{r,r,1,...,1}`, and a path of
/// length `2r` with a broom of diameter at most `r` glued by its end to the
/// path's middle vertex. Bare paths count as brooms.
fn family_f_extra_codes(n: usize) -> BTreeSet<CanonicalCode> {
    let mut members = Vec::new();
    for r in 1..n {
        if 2 * r + 1 > n {
            break;
        }
        let extra = n - (2 * r + 1);
        if extra >= 1 {
            let mut legs = vec![r, r];
            legs.extend(std::iter::repeat_n(1, extra));
            members.push(spider(&legs));
        }
        // handle length k >= 1 from the middle vertex to the broom hub, then
        // `leaves` leaves on the hub
        for k in 1..=extra {
            let leaves = extra - k;
            let diameter = k + usize::from(leaves >= 1);
            if diameter > r {
                continue;
            }
            members.push(path_with_broom(r, k, leaves));
        }
    }
    members.iter().map(free_code).collect()
}

fn path_with_broom(r: usize, handle: usize, leaves: usize) -> Tree {
    let path_len = 2 * r + 1;
    let mut edges: Vec<(usize, usize)> = (1..path_len).map(|v| (v - 1, v)).collect();
    let mut prev = r;
    let mut next = path_len;
    for _ in 0..handle {
        edges.push((prev, next));
        prev = next;
        next += 1;
    }
    for _ in 0..leaves {
        edges.push((prev, next));
        next += 1;
    }
    Tree::from_edges(next, &edges).expect("broom on a path is a tree")
}

/// Paths, stars and spiders `S_{r,r,k}` with `1 <= k < r`.
pub fn in_family_d(tree: &Tree) -> bool {
    family_d_codes(tree.order()).contains(&free_code(tree))
}

/// The previous family plus `S_{r,r,1,...,1}` and path-with-broom trees.
pub fn in_family_f(tree: &Tree) -> bool {
    let code = free_code(tree);
    family_d_codes(tree.order()).contains(&code)
        || family_f_extra_codes(tree.order()).contains(&code)
}
