//! Exhaustive ground truth on small graphs: automorphism groups,
//! distinguishing checks, `D`, `F`, `t`-paint costs and the paint cost
//! spectrum.
//!
//! Nothing here knows about trees. The automorphism search is plain
//! backtracking over vertex images with adjacency checks, filtered by color
//! refinement (automorphisms preserve refined colors, so the filter is
//! sound). Coloring searches enumerate colorings up to renaming of the
//! palette and prune a partial coloring as soon as the coloring obtained by
//! giving every unassigned vertex a private color is already not
//! distinguishing: any completion is a coarsening of it, and coarsening
//! cannot break a symmetry that survived.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

/// Size caps for the exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteLimits {
    /// Largest order for group and distinguishing computations.
    pub group: usize,
    /// Largest order for paint costs and spectra.
    pub spectrum: usize,
    /// Most automorphisms `automorphisms` will list.
    pub max_group_elements: usize,
}

impl Default for BruteLimits {
    fn default() -> Self {
        Self {
            group: 12,
            spectrum: 10,
            max_group_elements: 1_000_000,
        }
    }
}

impl BruteLimits {
    /// Defaults, with both order caps replaced by `SYMTREE_BRUTE_LIMIT` when set.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(n) = std::env::var("SYMTREE_BRUTE_LIMIT")
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            limits.group = n;
            limits.spectrum = n;
        }
        limits
    }

    /// Same caps for everything.
    pub fn uniform(n: usize) -> Self {
        Self {
            group: n,
            spectrum: n,
            ..Self::default()
        }
    }

    fn check_group(&self, g: &Graph) -> Result<()> {
        if g.order() > self.group {
            return Err(Error::TooLarge {
                n: g.order(),
                limit: self.group,
            });
        }
        Ok(())
    }

    fn check_spectrum(&self, g: &Graph) -> Result<()> {
        if g.order() > self.spectrum {
            return Err(Error::TooLarge {
                n: g.order(),
                limit: self.spectrum,
            });
        }
        Ok(())
    }
}

/// A permutation `v -> image[v]` preserving adjacency.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Automorphism(pub Vec<usize>);

impl Automorphism {
    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &w)| v == w)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] != v).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaintCostSpectrum {
    pub distinguishing: usize,
    pub fixing: usize,
    /// `rho^t` for `t = D, D+1, ..., F+1`.
    pub costs: Vec<usize>,
}

struct Searcher<'g> {
    g: &'g Graph,
    n: usize,
    adj: Vec<bool>,
    /// Search order: BFS within each component, so that every vertex after
    /// the first of its component has an already placed neighbor.
    order: Vec<usize>,
}

impl<'g> Searcher<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        let mut adj = vec![false; n * n];
        for &(u, v) in g.edges() {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let start = order.len();
            order.push(s);
            let mut head = start;
            while head < order.len() {
                let v = order[head];
                head += 1;
                for &w in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        order.push(w);
                    }
                }
            }
        }
        Self { g, n, adj, order }
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Equitable refinement of `cells`. Class names are derived from sorted
    /// signatures only, so they are isomorphism-invariant.
    fn refine(&self, cells: &[u32]) -> Vec<u32> {
        let mut current = cells.to_vec();
        let mut classes = count_classes(&current);
        loop {
            let sigs: Vec<(u32, Vec<u32>)> = (0..self.n)
                .map(|v| {
                    let mut nb: Vec<u32> =
                        self.g.neighbors(v).iter().map(|&w| current[w]).collect();
                    nb.sort_unstable();
                    (current[v], nb)
                })
                .collect();
            let mut names = BTreeMap::new();
            for s in &sigs {
                let next = names.len() as u32;
                names.entry(s).or_insert(next);
            }
            // BTreeMap iteration is sorted; rename in that order
            let ranked: BTreeMap<_, u32> = names
                .keys()
                .enumerate()
                .map(|(i, k)| (*k, i as u32))
                .collect();
            let next: Vec<u32> = sigs.iter().map(|s| ranked[s]).collect();
            let count = ranked.len();
            current = next;
            if count == classes {
                return current;
            }
            classes = count;
        }
    }

    fn consistent(&self, map: &[usize], placed: &[usize], v: usize, w: usize) -> bool {
        placed
            .iter()
            .all(|&u| self.adjacent(v, u) == self.adjacent(w, map[u]))
    }

    /// Looks for an automorphism preserving `cells` other than the identity.
    fn find_nontrivial(&self, cells: &[u32]) -> Option<Automorphism> {
        let refined = self.refine(cells);
        if count_classes(&refined) == self.n {
            return None;
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        let mut placed = Vec::with_capacity(self.n);
        self.nontrivial_rec(&refined, &mut map, &mut used, &mut placed)
    }

    /// Identity-prefix part of the search: the vertices placed so far are
    /// all fixed.
    fn nontrivial_rec(
        &self,
        cells: &[u32],
        map: &mut [usize],
        used: &mut [bool],
        placed: &mut Vec<usize>,
    ) -> Option<Automorphism> {
        let pos = placed.len();
        if pos == self.n {
            return None;
        }
        // automorphisms fixing the prefix preserve this refinement
        let mut individualized = cells.to_vec();
        let base = self.n as u32 + 1;
        for (i, &u) in placed.iter().enumerate() {
            individualized[u] = base + i as u32;
        }
        let local = self.refine(&individualized);
        if count_classes(&local) == self.n {
            return None;
        }
        let v = self.order[pos];
        for w in 0..self.n {
            if w == v || used[w] || local[w] != local[v] {
                continue;
            }
            if !self.consistent(map, placed, v, w) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            placed.push(v);
            let found = self.extend_any(cells, map, used, placed);
            placed.pop();
            used[w] = false;
            map[v] = usize::MAX;
            if found.is_some() {
                return found;
            }
        }
        // every nontrivial automorphism fixing the prefix also fixes v
        map[v] = v;
        used[v] = true;
        placed.push(v);
        let found = self.nontrivial_rec(cells, map, used, placed);
        placed.pop();
        used[v] = false;
        map[v] = usize::MAX;
        found
    }

    /// Completes `map` to any cell-preserving automorphism.
    fn extend_any(
        &self,
        cells: &[u32],
        map: &mut [usize],
        used: &mut [bool],
        placed: &mut Vec<usize>,
    ) -> Option<Automorphism> {
        let pos = placed.len();
        if pos == self.n {
            return Some(Automorphism(map.to_vec()));
        }
        let v = self.order[pos];
        for w in 0..self.n {
            if used[w] || cells[w] != cells[v] || !self.consistent(map, placed, v, w) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            placed.push(v);
            let found = self.extend_any(cells, map, used, placed);
            placed.pop();
            used[w] = false;
            map[v] = usize::MAX;
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn all_rec(
        &self,
        cells: &[u32],
        map: &mut [usize],
        used: &mut [bool],
        placed: &mut Vec<usize>,
        out: &mut Vec<Automorphism>,
        cap: usize,
    ) -> Result<()> {
        let pos = placed.len();
        if pos == self.n {
            if out.len() == cap {
                return Err(Error::OverBudget {
                    estimate: format!("more than {cap} automorphisms"),
                    budget: cap as u64,
                });
            }
            out.push(Automorphism(map.to_vec()));
            return Ok(());
        }
        let v = self.order[pos];
        for w in 0..self.n {
            if used[w] || cells[w] != cells[v] || !self.consistent(map, placed, v, w) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            placed.push(v);
            let r = self.all_rec(cells, map, used, placed, out, cap);
            placed.pop();
            used[w] = false;
            map[v] = usize::MAX;
            r?;
        }
        Ok(())
    }

    fn all(&self, cells: &[u32], cap: usize) -> Result<Vec<Automorphism>> {
        let refined = self.refine(cells);
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        let mut placed = Vec::with_capacity(self.n);
        let mut out = Vec::new();
        self.all_rec(&refined, &mut map, &mut used, &mut placed, &mut out, cap)?;
        out.sort();
        Ok(out)
    }

    fn is_rigid(&self, cells: &[u32]) -> bool {
        self.find_nontrivial(cells).is_none()
    }

    /// Whether some automorphism preserving `cells` maps `v` to `w`.
    fn maps_to(&self, cells: &[u32], v: usize, w: usize) -> bool {
        let refined = self.refine(cells);
        if refined[v] != refined[w] {
            return false;
        }
        // put v first in the search order
        let mut order = vec![v];
        let mut seen = vec![false; self.n];
        seen[v] = true;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &x in self.g.neighbors(u) {
                if !seen[x] {
                    seen[x] = true;
                    order.push(x);
                }
            }
        }
        for s in self.order.iter().copied() {
            if !seen[s] {
                seen[s] = true;
                order.push(s);
                let mut h = order.len() - 1;
                while h < order.len() {
                    let u = order[h];
                    h += 1;
                    for &x in self.g.neighbors(u) {
                        if !seen[x] {
                            seen[x] = true;
                            order.push(x);
                        }
                    }
                }
            }
        }
        let reordered = Searcher {
            g: self.g,
            n: self.n,
            adj: self.adj.clone(),
            order,
        };
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        map[v] = w;
        used[w] = true;
        let mut placed = vec![v];
        reordered
            .extend_any(&refined, &mut map, &mut used, &mut placed)
            .is_some()
    }
}

fn count_classes(cells: &[u32]) -> usize {
    let mut v = cells.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn cells_with_pins(n: usize, colors: &[u32], pinned: &[usize]) -> Vec<u32> {
    let mut cells = colors.to_vec();
    cells.resize(n, 0);
    let base = colors.iter().copied().max().unwrap_or(0) + 1;
    for (i, &p) in pinned.iter().enumerate() {
        cells[p] = base + i as u32;
    }
    cells
}

/// The full automorphism group, sorted lexicographically (identity first).
pub fn automorphisms(g: &Graph, limits: &BruteLimits) -> Result<Vec<Automorphism>> {
    automorphisms_fixing(g, &[], limits)
}

/// Automorphisms fixing every vertex of `pinned`.
pub fn automorphisms_fixing(
    g: &Graph,
    pinned: &[usize],
    limits: &BruteLimits,
) -> Result<Vec<Automorphism>> {
    limits.check_group(g)?;
    let cells = cells_with_pins(g.order(), &vec![0; g.order()], pinned);
    Searcher::new(g).all(&cells, limits.max_group_elements)
}

/// Whether the identity is the only automorphism.
pub fn is_asymmetric(g: &Graph, limits: &BruteLimits) -> Result<bool> {
    limits.check_group(g)?;
    Ok(Searcher::new(g).is_rigid(&vec![0; g.order()]))
}

fn check_coloring(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.order() {
        return Err(Error::ColoringLength {
            expected: g.order(),
            got: c.len(),
        });
    }
    Ok(())
}

/// True iff no nontrivial automorphism preserves every color class.
pub fn is_distinguishing(g: &Graph, c: &Coloring, limits: &BruteLimits) -> Result<bool> {
    is_distinguishing_fixing(g, c, &[], limits)
}

/// As [`is_distinguishing`], over automorphisms that fix `pinned`.
pub fn is_distinguishing_fixing(
    g: &Graph,
    c: &Coloring,
    pinned: &[usize],
    limits: &BruteLimits,
) -> Result<bool> {
    limits.check_group(g)?;
    check_coloring(g, c)?;
    let cells = cells_with_pins(g.order(), c.colors(), pinned);
    Ok(Searcher::new(g).is_rigid(&cells))
}

/// Orbits of the automorphism group as sorted vertex lists, ordered by
/// smallest member.
pub fn orbits(g: &Graph, limits: &BruteLimits) -> Result<Vec<Vec<usize>>> {
    limits.check_group(g)?;
    let s = Searcher::new(g);
    let n = g.order();
    let cells = vec![0u32; n];
    let mut rep: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if rep[v] != v {
            continue;
        }
        #[allow(clippy::needless_range_loop)]
        for w in v + 1..n {
            if rep[w] == w && s.maps_to(&cells, v, w) {
                rep[w] = v;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &r) in rep.iter().enumerate() {
        groups.entry(r).or_default().push(v);
    }
    Ok(groups.into_values().collect())
}

/// Depth-first search over colorings with at most `t` colors, in
/// restricted-growth form along the searcher's vertex order.
struct ColoringSearch<'s, 'g> {
    s: &'s Searcher<'g>,
    t: u32,
    pinned: Vec<usize>,
    colors: Vec<u32>,
    counts: Vec<usize>,
    /// Best paint cost so far and its coloring (paint-cost mode only).
    best: Option<(usize, Vec<u32>)>,
}

impl<'s, 'g> ColoringSearch<'s, 'g> {
    fn new(s: &'s Searcher<'g>, t: u32, pinned: &[usize]) -> Self {
        Self {
            s,
            t,
            pinned: pinned.to_vec(),
            colors: vec![0; s.n],
            counts: vec![0; t as usize + 1],
            best: None,
        }
    }

    /// Cells for the partial coloring on the first `pos` vertices of the
    /// order; unassigned and pinned vertices are individualized.
    fn partial_cells(&self, pos: usize) -> Vec<u32> {
        let mut cells = vec![0u32; self.s.n];
        let mut fresh = self.t + 1;
        for (i, &v) in self.s.order.iter().enumerate() {
            if i < pos {
                cells[v] = self.colors[v];
            } else {
                cells[v] = fresh;
                fresh += 1;
            }
        }
        for &p in &self.pinned {
            cells[p] = fresh;
            fresh += 1;
        }
        cells
    }

    fn viable(&self, pos: usize) -> bool {
        self.s.is_rigid(&self.partial_cells(pos))
    }

    fn candidates(&self, pos: usize) -> Vec<u32> {
        let used = (0..pos)
            .map(|i| self.colors[self.s.order[i]])
            .max()
            .unwrap_or(0);
        let top = (used + 1).min(self.t);
        (1..=top).collect()
    }

    /// First distinguishing coloring in search order.
    fn first(&mut self, pos: usize) -> bool {
        if !self.viable(pos) {
            return false;
        }
        if pos == self.s.n {
            return true;
        }
        let v = self.s.order[pos];
        for c in self.candidates(pos) {
            self.colors[v] = c;
            if self.first(pos + 1) {
                return true;
            }
        }
        self.colors[v] = 0;
        false
    }

    /// Minimum paint cost over distinguishing colorings, branch and bound.
    fn cheapest(&mut self, pos: usize) {
        let n = self.s.n;
        let largest = self.counts.iter().copied().max().unwrap_or(0);
        if let Some((best, _)) = &self.best {
            if n - (largest + (n - pos)) >= *best {
                return;
            }
        }
        if !self.viable(pos) {
            return;
        }
        if pos == n {
            let cost = n - largest;
            if self.best.as_ref().is_none_or(|(b, _)| cost < *b) {
                self.best = Some((cost, self.colors.clone()));
            }
            return;
        }
        let v = self.s.order[pos];
        let mut options = self.candidates(pos);
        // grow the big classes first so good bounds appear early
        options.sort_by_key(|&c| (std::cmp::Reverse(self.counts[c as usize]), c));
        for c in options {
            self.colors[v] = c;
            self.counts[c as usize] += 1;
            self.cheapest(pos + 1);
            self.counts[c as usize] -= 1;
        }
        self.colors[v] = 0;
    }
}

/// A distinguishing coloring with at most `t` colors, if one exists.
pub fn find_distinguishing_coloring(
    g: &Graph,
    t: usize,
    limits: &BruteLimits,
) -> Result<Option<Coloring>> {
    find_distinguishing_coloring_fixing(g, t, &[], limits)
}

/// As [`find_distinguishing_coloring`], over automorphisms fixing `pinned`.
pub fn find_distinguishing_coloring_fixing(
    g: &Graph,
    t: usize,
    pinned: &[usize],
    limits: &BruteLimits,
) -> Result<Option<Coloring>> {
    limits.check_group(g)?;
    if t == 0 {
        return Ok(None);
    }
    let s = Searcher::new(g);
    let mut search = ColoringSearch::new(&s, t as u32, pinned);
    Ok(if search.first(0) {
        Some(Coloring::new(search.colors, t as u32)?)
    } else {
        None
    })
}

/// `D(G)` and a witness coloring using exactly that many colors.
pub fn brute_distinguishing_number(g: &Graph, limits: &BruteLimits) -> Result<(usize, Coloring)> {
    limits.check_group(g)?;
    if g.order() == 0 {
        return Err(Error::EmptyInput);
    }
    for t in 1..=g.order() {
        if let Some(c) = find_distinguishing_coloring(g, t, limits)? {
            return Ok((t, c));
        }
    }
    unreachable!("the rainbow coloring distinguishes every graph")
}

/// `F(G)` and the lexicographically smallest minimum fixing set.
pub fn brute_fixing_number(g: &Graph, limits: &BruteLimits) -> Result<(usize, Vec<usize>)> {
    limits.check_group(g)?;
    let n = g.order();
    let s = Searcher::new(g);
    if s.is_rigid(&vec![0; n]) {
        return Ok((0, Vec::new()));
    }
    // the smallest element of a lexicographically least fixing set is the
    // smallest vertex of its orbit, so only orbit minima start a subset
    let starts: Vec<usize> = orbits(g, limits)?.into_iter().map(|o| o[0]).collect();
    for k in 1..=n {
        for &first in &starts {
            let mut subset = vec![first];
            if let Some(found) = fixing_subset_rec(&s, n, k, &mut subset) {
                return Ok((k, found));
            }
        }
    }
    unreachable!("the whole vertex set is fixing")
}

fn fixing_subset_rec(s: &Searcher<'_>, n: usize, k: usize, subset: &mut Vec<usize>) -> Option<Vec<usize>> {
    if subset.len() == k {
        let c = Coloring::individualizing(n, subset);
        return s.is_rigid(c.colors()).then(|| subset.clone());
    }
    let last = *subset.last().expect("nonempty");
    let remaining = k - subset.len();
    for v in last + 1..n {
        if n - v < remaining {
            break;
        }
        subset.push(v);
        if let Some(found) = fixing_subset_rec(s, n, k, subset) {
            return Some(found);
        }
        subset.pop();
    }
    None
}

/// `rho^t(G)` with a witness coloring. Errors when `t < D(G)`.
pub fn brute_paint_cost(g: &Graph, t: usize, limits: &BruteLimits) -> Result<(usize, Coloring)> {
    limits.check_spectrum(g)?;
    let s = Searcher::new(g);
    let mut search = ColoringSearch::new(&s, t as u32, &[]);
    search.cheapest(0);
    match search.best {
        Some((cost, colors)) => Ok((cost, Coloring::new(colors, t as u32)?)),
        None => {
            let (d, _) = brute_distinguishing_number(g, &BruteLimits::uniform(g.order()))?;
            Err(Error::BelowDistinguishingNumber { t, distinguishing: d })
        }
    }
}

/// `(D; rho^D, ..., rho^(F+1))`.
pub fn paint_cost_spectrum(g: &Graph, limits: &BruteLimits) -> Result<PaintCostSpectrum> {
    limits.check_spectrum(g)?;
    let inner = BruteLimits::uniform(g.order().max(limits.group));
    let (d, _) = brute_distinguishing_number(g, &inner)?;
    let (f, _) = brute_fixing_number(g, &inner)?;
    let costs = (d..=f + 1)
        .map(|t| brute_paint_cost(g, t, limits).map(|(c, _)| c))
        .collect::<Result<Vec<_>>>()?;
    Ok(PaintCostSpectrum {
        distinguishing: d,
        fixing: f,
        costs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Tree;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn limits() -> BruteLimits {
        BruteLimits::default()
    }

    /// Path on six vertices with a pendant at its third vertex.
    fn asymmetric7() -> Graph {
        Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).unwrap()
    }

    /// Every permutation, for cross-checking the backtracking search.
    fn all_permutation_automorphisms(g: &Graph) -> Vec<Automorphism> {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        loop {
            if g.edges().iter().all(|&(u, v)| g.has_edge(perm[u], perm[v])) {
                out.push(Automorphism(perm.clone()));
            }
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        out
    }

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&cycle(6), &limits()).unwrap().len(), 12);
        let star = Tree::star(3).unwrap();
        let group = automorphisms(star.graph(), &limits()).unwrap();
        assert_eq!(group.len(), 6);
        assert!(group[0].is_identity());
        assert_eq!(automorphisms(&asymmetric7(), &limits()).unwrap().len(), 1);
    }

    #[test]
    fn asymmetric_seven_vertex_tree_by_all_permutations() {
        let g = asymmetric7();
        let brute = all_permutation_automorphisms(&g);
        assert_eq!(brute.len(), 1);
        assert_eq!(automorphisms(&g, &limits()).unwrap(), brute);
        assert!(is_asymmetric(&g, &limits()).unwrap());
    }

    #[test]
    fn group_matches_permutation_scan() {
        for g in [
            cycle(5),
            Tree::path(6).unwrap().into_graph(),
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap(),
        ] {
            assert_eq!(automorphisms(&g, &limits()).unwrap(), all_permutation_automorphisms(&g));
        }
    }

    #[test]
    fn c6_two_colorings() {
        let c6 = cycle(6);
        let mut two_color = vec![1; 6];
        for v in [0, 1, 3] {
            two_color[v] = 2;
        }
        let two_color = Coloring::new(two_color, 2).unwrap();
        assert!(is_distinguishing(&c6, &two_color, &limits()).unwrap());
        assert!(!is_distinguishing(&c6, &Coloring::constant(6), &limits()).unwrap());
        assert!(is_distinguishing(&c6, &Coloring::rainbow(6), &limits()).unwrap());
        assert!(matches!(
            is_distinguishing(&c6, &Coloring::constant(5), &limits()),
            Err(Error::ColoringLength { .. })
        ));
    }

    #[test]
    fn distinguishing_numbers() {
        assert_eq!(brute_distinguishing_number(&cycle(6), &limits()).unwrap().0, 2);
        let star = Tree::star(3).unwrap();
        assert_eq!(brute_distinguishing_number(star.graph(), &limits()).unwrap().0, 3);
        assert_eq!(
            brute_distinguishing_number(Tree::single_vertex().graph(), &limits())
                .unwrap()
                .0,
            1
        );
    }

    #[test]
    fn fixing_numbers() {
        let (f, witness) = brute_fixing_number(&cycle(6), &limits()).unwrap();
        assert_eq!(f, 2);
        assert_eq!(witness, vec![0, 1]);
        assert_eq!(brute_fixing_number(&asymmetric7(), &limits()).unwrap().0, 0);
        // C_6: a single vertex leaves the reflection through it
        let c6 = cycle(6);
        for v in 0..6 {
            let c = Coloring::individualizing(6, &[v]);
            assert!(!is_distinguishing(&c6, &c, &limits()).unwrap());
        }
    }

    #[test]
    fn paint_costs() {
        let c6 = cycle(6);
        assert_eq!(brute_paint_cost(&c6, 2, &limits()).unwrap().0, 3);
        assert_eq!(brute_paint_cost(&c6, 3, &limits()).unwrap().0, 2);
        let star = Tree::star(3).unwrap();
        assert_eq!(brute_paint_cost(star.graph(), 3, &limits()).unwrap().0, 2);
        assert_eq!(
            brute_paint_cost(star.graph(), 2, &limits()).unwrap_err(),
            Error::BelowDistinguishingNumber {
                t: 2,
                distinguishing: 3
            }
        );
    }

    #[test]
    fn spectra() {
        let spectrum = paint_cost_spectrum(&cycle(6), &limits()).unwrap();
        assert_eq!((spectrum.distinguishing, spectrum.costs.clone()), (2, vec![3, 2]));
        let p3 = Tree::path(3).unwrap();
        assert_eq!(paint_cost_spectrum(p3.graph(), &limits()).unwrap().costs, vec![1]);
        let star = paint_cost_spectrum(Tree::star(3).unwrap().graph(), &limits()).unwrap();
        assert_eq!((star.distinguishing, star.fixing, star.costs), (3, 2, vec![2]));
    }

    #[test]
    fn size_limits() {
        let big = Tree::path(13).unwrap();
        assert!(matches!(
            brute_distinguishing_number(big.graph(), &limits()),
            Err(Error::TooLarge { n: 13, limit: 12 })
        ));
        assert!(matches!(
            brute_paint_cost(Tree::path(11).unwrap().graph(), 2, &limits()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn orbits_of_small_graphs() {
        let star = Tree::star(3).unwrap();
        assert_eq!(orbits(star.graph(), &limits()).unwrap(), vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(orbits(&cycle(6), &limits()).unwrap().len(), 1);
    }

    #[test]
    fn pinned_root() {
        // a path hung from an end has no automorphism fixing that end
        let p3 = Tree::path(3).unwrap();
        let c = Coloring::constant(3);
        assert!(!is_distinguishing(p3.graph(), &c, &limits()).unwrap());
        assert!(is_distinguishing_fixing(p3.graph(), &c, &[0], &limits()).unwrap());
        assert_eq!(automorphisms_fixing(p3.graph(), &[0], &limits()).unwrap().len(), 1);
    }
}
