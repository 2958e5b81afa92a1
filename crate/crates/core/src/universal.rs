//! Universal trees: rooted trees whose branched subgraphs of radius `r` are
//! exactly the `D`-distinguishable trees (`T`), or those that in addition
//! have `D`-paint cost equal to their fixing number (`U`).
//!
//! A catalog maps the code of each subtree type hanging below the root to
//! the number of copies the root carries. Catalogs are small even when the
//! explicit trees are not, so the tree is only materialized on request.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::brute::{self, BruteLimits};
use crate::canon::{rooted_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{RootedTree, Tree};
use crate::params::{distinguishing_number, fixing_number, RigidCounter};

/// Default cap on explicit tree order.
pub const DEFAULT_VERTEX_BUDGET: u64 = 1_000_000;
/// Cap on the number of subtree types in a catalog.
pub const CATALOG_TYPE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum UniversalKind {
    /// `T_r^D`
    Plain,
    /// `U_r^D`
    PaintCost,
}

impl FromStr for UniversalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" | "t" | "plain" => Ok(Self::Plain),
            "U" | "u" | "paint-cost" => Ok(Self::PaintCost),
            _ => Err(Error::Unknown {
                kind: "universal kind",
                name: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for UniversalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Plain => "T",
            Self::PaintCost => "U",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct UniversalSpec {
    pub r: usize,
    pub d: usize,
    pub kind: UniversalKind,
}

impl UniversalSpec {
    pub fn new(r: usize, d: usize, kind: UniversalKind) -> Result<Self> {
        if r < 1 || d < 2 {
            return Err(Error::InvalidParameter(format!(
                "universal trees need r >= 1 and D >= 2, got r = {r}, D = {d}"
            )));
        }
        Ok(Self { r, d, kind })
    }
}

/// Subtree types below the root with their multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BranchCatalog {
    pub capacities: BTreeMap<CanonicalCode, BigUint>,
}

impl BranchCatalog {
    pub fn capacity(&self, code: &CanonicalCode) -> BigUint {
        self.capacities.get(code).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.capacities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.capacities.is_empty()
    }

    /// Degree of the root in the explicit tree.
    pub fn root_degree(&self) -> BigUint {
        self.capacities.values().sum()
    }

    /// Order of the explicit tree.
    pub fn tree_order(&self) -> BigUint {
        self.capacities
            .iter()
            .fold(BigUint::one(), |acc, (c, m)| acc + m * BigUint::from(c.order()))
    }

    /// Whether a root with the given child types fits.
    pub fn admits(&self, children: &BTreeMap<CanonicalCode, usize>) -> bool {
        children
            .iter()
            .all(|(c, &m)| self.capacities.get(c).is_some_and(|cap| *cap >= BigUint::from(m)))
    }

    /// `canonical_code,height,order,capacity` rows, ordered by code.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("canonical_code,height,order,capacity\n");
        for (c, m) in &self.capacities {
            let _ = writeln!(out, "{c},{},{},{m}", c.height(), c.order());
        }
        out
    }

    /// Number of branched subgraphs, the product of `capacity + 1`.
    pub fn subgraph_count(&self) -> BigUint {
        self.capacities
            .values()
            .fold(BigUint::one(), |acc, m| acc * (m + BigUint::one()))
    }
}

/// A catalog and, when requested and within budget, the explicit tree
/// (root 0, children grouped by type in code order).
#[derive(Debug, Clone)]
pub struct Universal {
    pub spec: UniversalSpec,
    pub catalog: BranchCatalog,
    pub tree: Option<RootedTree>,
}

/// Every rooted type whose children come from `prev` within its capacities.
fn children_closure(prev: &BranchCatalog) -> Result<Vec<CanonicalCode>> {
    let total = prev.subgraph_count();
    if total > BigUint::from(CATALOG_TYPE_BUDGET) {
        return Err(Error::OverBudget {
            estimate: format!("{total} subtree types"),
            budget: CATALOG_TYPE_BUDGET,
        });
    }
    let entries: Vec<(CanonicalCode, usize)> = prev
        .capacities
        .iter()
        .map(|(c, m)| (c.clone(), m.to_usize().expect("bounded by the type budget")))
        .collect();
    let mut out = Vec::new();
    let mut counts = vec![0usize; entries.len()];
    loop {
        let kids = entries
            .iter()
            .zip(&counts)
            .flat_map(|((c, _), &k)| std::iter::repeat_n(c.clone(), k));
        out.push(CanonicalCode::from_children(kids));
        let mut i = 0;
        while i < counts.len() && counts[i] == entries[i].1 {
            counts[i] = 0;
            i += 1;
        }
        if i == counts.len() {
            break;
        }
        counts[i] += 1;
    }
    out.sort();
    Ok(out)
}

/// Catalog of `T_r^D`: level 1 is `D` leaves; level `r` holds every type
/// whose children fit level `r-1`, each with capacity `N(B, D)`.
pub fn plain_catalog(r: usize, d: usize) -> Result<BranchCatalog> {
    UniversalSpec::new(r, d, UniversalKind::Plain)?;
    let mut counter = RigidCounter::new(d)?;
    let mut cat = BranchCatalog::default();
    cat.capacities.insert(CanonicalCode::leaf(), BigUint::from(d));
    for _ in 2..=r {
        let types = children_closure(&cat)?;
        cat = BranchCatalog {
            capacities: types
                .into_iter()
                .map(|c| {
                    let n = counter.count(&c);
                    (c, n)
                })
                .collect(),
        };
    }
    Ok(cat)
}

fn binom_usize(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// Catalog of `U_r^D` for `r <= 2`, from the closed-form multiplicities:
/// `D` leaves, `2D - 1` edges, `binom(D-1, i-1)` stars `K_{1,i}` for
/// `2 <= i <= D`.
pub fn paint_cost_catalog(r: usize, d: usize) -> Result<BranchCatalog> {
    UniversalSpec::new(r, d, UniversalKind::PaintCost)?;
    if r >= 3 {
        return Err(Error::Unsupported(format!(
            "no exact rule for U_r^D with r = {r}; only r <= 2 is exact (the search mode is experimental)"
        )));
    }
    let mut cat = BranchCatalog::default();
    cat.capacities.insert(CanonicalCode::leaf(), BigUint::from(d));
    if r == 2 {
        let star = |i: usize| CanonicalCode::from_children(std::iter::repeat_n(CanonicalCode::leaf(), i));
        cat.capacities.insert(star(1), BigUint::from(2 * d - 1));
        for i in 2..=d {
            cat.capacities.insert(star(i), binom_usize(d - 1, i - 1));
        }
    }
    Ok(cat)
}

/// Greedy search for a paint-cost catalog of any radius. Experimental:
/// types are taken in code order from the plain catalog and copies are added
/// while the accumulated tree stays `D`-distinguishable with
/// `rho^D = F` by exhaustive check; types that would push the tree past the
/// brute-force limit are left out. Nothing asserts the result is universal.
pub fn paint_cost_catalog_search(r: usize, d: usize, limits: &BruteLimits) -> Result<BranchCatalog> {
    let plain = plain_catalog(r, d)?;
    let mut accepted: Vec<CanonicalCode> = Vec::new();
    let mut cat = BranchCatalog::default();
    let mut order = 1;
    let mut by_order: Vec<&CanonicalCode> = plain.capacities.keys().collect();
    by_order.sort_by_key(|c| (c.order(), (*c).clone()));
    for code in by_order {
        let cap = plain.capacity(code);
        let mut m = 0usize;
        while BigUint::from(m) < cap && order + code.order() <= limits.spectrum {
            accepted.push(code.clone());
            let tree = CanonicalCode::from_children(accepted.iter().cloned()).to_rooted_tree();
            let t = tree.tree();
            let ok = distinguishing_number(t) <= d
                && brute::brute_paint_cost(t.graph(), d, limits)
                    .is_ok_and(|(rho, _)| rho == fixing_number(t).0);
            if !ok {
                accepted.pop();
                break;
            }
            order += code.order();
            m += 1;
        }
        if m > 0 {
            cat.capacities.insert(code.clone(), BigUint::from(m));
        }
    }
    Ok(cat)
}

fn materialize(cat: &BranchCatalog, budget: u64) -> Result<RootedTree> {
    let order = cat.tree_order();
    if order > BigUint::from(budget) {
        return Err(Error::OverBudget {
            estimate: format!("{order} vertices"),
            budget,
        });
    }
    let mut children = Vec::new();
    for (code, m) in &cat.capacities {
        let sub = code.to_rooted_tree();
        let m = m.to_usize().expect("bounded by the budget");
        children.extend(std::iter::repeat_n(sub, m));
    }
    Ok(RootedTree::join(&children))
}

fn finish(spec: UniversalSpec, catalog: BranchCatalog, budget: u64, catalog_only: bool) -> Result<Universal> {
    let tree = if catalog_only {
        None
    } else {
        Some(materialize(&catalog, budget)?)
    };
    Ok(Universal { spec, catalog, tree })
}

#[allow(non_snake_case)]
pub fn build_universal_T(r: usize, d: usize, budget: u64, catalog_only: bool) -> Result<Universal> {
    let spec = UniversalSpec::new(r, d, UniversalKind::Plain)?;
    finish(spec, plain_catalog(r, d)?, budget, catalog_only)
}

/// Exact for `r <= 2`; with `experimental` set, larger radii use
/// [`paint_cost_catalog_search`].
#[allow(non_snake_case)]
pub fn build_universal_U(
    r: usize,
    d: usize,
    budget: u64,
    catalog_only: bool,
    experimental: bool,
) -> Result<Universal> {
    let spec = UniversalSpec::new(r, d, UniversalKind::PaintCost)?;
    let catalog = if r >= 3 && experimental {
        paint_cost_catalog_search(r, d, &BruteLimits::from_env())?
    } else {
        paint_cost_catalog(r, d)?
    };
    finish(spec, catalog, budget, catalog_only)
}

pub fn catalog_for(spec: &UniversalSpec) -> Result<BranchCatalog> {
    match spec.kind {
        UniversalKind::Plain => plain_catalog(spec.r, spec.d),
        UniversalKind::PaintCost => paint_cost_catalog(spec.r, spec.d),
    }
}

/// Whether `tree` is a branched subgraph of the universal tree of `catalog`,
/// rooted at a central vertex (either one, for bicentral trees).
pub fn is_branched_subgraph_with(tree: &Tree, r: usize, catalog: &BranchCatalog) -> Result<bool> {
    if tree.radius() > r {
        return Err(Error::InvalidParameter(format!(
            "radius {} exceeds the universal radius {r}",
            tree.radius()
        )));
    }
    Ok(tree
        .center()
        .into_iter()
        .any(|c| catalog.admits(&rooted_code(tree, c).child_classes())))
}

pub fn is_branched_subgraph_of_universal(tree: &Tree, spec: &UniversalSpec) -> Result<bool> {
    is_branched_subgraph_with(tree, spec.r, &catalog_for(spec)?)
}

/// Iterator over the branched subgraphs of a catalog's tree: every
/// multiplicity vector up to the capacities, as codes rooted at the root.
pub struct BranchedSubgraphs {
    entries: Vec<(CanonicalCode, usize)>,
    counts: Option<Vec<usize>>,
}

/// Fails when there are more than `limit` subgraphs.
pub fn branched_subgraphs(catalog: &BranchCatalog, limit: u64) -> Result<BranchedSubgraphs> {
    let total = catalog.subgraph_count();
    if total > BigUint::from(limit) {
        return Err(Error::OverBudget {
            estimate: format!("{total} branched subgraphs"),
            budget: limit,
        });
    }
    let entries: Vec<(CanonicalCode, usize)> = catalog
        .capacities
        .iter()
        .map(|(c, m)| (c.clone(), m.to_usize().expect("bounded by the limit")))
        .collect();
    let counts = Some(vec![0; entries.len()]);
    Ok(BranchedSubgraphs { entries, counts })
}

impl Iterator for BranchedSubgraphs {
    type Item = CanonicalCode;

    fn next(&mut self) -> Option<CanonicalCode> {
        let counts = self.counts.as_mut()?;
        let code = CanonicalCode::from_children(
            self.entries
                .iter()
                .zip(counts.iter())
                .flat_map(|((c, _), &k)| std::iter::repeat_n(c.clone(), k)),
        );
        let mut i = 0;
        while i < counts.len() && counts[i] == self.entries[i].1 {
            counts[i] = 0;
            i += 1;
        }
        if i == counts.len() {
            self.counts = None;
        } else {
            counts[i] += 1;
        }
        Some(code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::fig2_spider;

    fn star(i: usize) -> CanonicalCode {
        CanonicalCode::from_children(std::iter::repeat_n(CanonicalCode::leaf(), i))
    }

    #[test]
    fn radius_one_is_a_star() {
        let u = build_universal_T(1, 3, DEFAULT_VERTEX_BUDGET, false).unwrap();
        let t = u.tree.unwrap();
        assert_eq!(t.order(), 4);
        assert_eq!(t.tree().degree(0), 3);
        let u = build_universal_U(1, 2, DEFAULT_VERTEX_BUDGET, false, false).unwrap();
        assert_eq!(u.tree.unwrap().order(), 3);
    }

    #[test]
    fn radius_two_multiplicities() {
        for d in 2..=5usize {
            let cat = plain_catalog(2, d).unwrap();
            assert_eq!(cat.capacity(&star(0)), BigUint::from(d));
            assert_eq!(cat.capacity(&star(1)), BigUint::from(d * d));
            for i in 2..=d {
                assert_eq!(cat.capacity(&star(i)), BigUint::from(d) * binom_usize(d, i));
            }
            assert_eq!(cat.len(), d + 1);
            assert_eq!(cat.root_degree(), BigUint::from(d << d));
        }
        let t3 = build_universal_T(2, 3, DEFAULT_VERTEX_BUDGET, false).unwrap();
        assert_eq!(t3.tree.unwrap().order(), 61);
        assert_eq!(plain_catalog(2, 2).unwrap().tree_order(), BigUint::from(17u32));
    }

    #[test]
    fn paint_cost_multiplicities() {
        for d in 2..=5usize {
            let cat = paint_cost_catalog(2, d).unwrap();
            assert_eq!(cat.capacity(&star(0)), BigUint::from(d));
            assert_eq!(cat.capacity(&star(1)), BigUint::from(2 * d - 1));
            for i in 2..=d {
                assert_eq!(cat.capacity(&star(i)), binom_usize(d - 1, i - 1));
            }
        }
        assert_eq!(paint_cost_catalog(2, 3).unwrap().tree_order(), BigUint::from(24u32));
        assert!(matches!(paint_cost_catalog(3, 2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn budgets() {
        let err = build_universal_T(3, 3, 1000, false).unwrap_err();
        assert!(matches!(err, Error::OverBudget { .. }));
        let cat_only = build_universal_T(3, 3, 1000, true).unwrap();
        assert!(cat_only.tree.is_none());
        assert!(cat_only.catalog.len() > 4);
    }

    #[test]
    fn membership() {
        let spec = UniversalSpec::new(2, 2, UniversalKind::Plain).unwrap();
        assert!(is_branched_subgraph_of_universal(&fig2_spider(), &spec).unwrap());
        assert!(!is_branched_subgraph_of_universal(&Tree::star(3).unwrap(), &spec).unwrap());
        assert!(is_branched_subgraph_of_universal(&Tree::single_vertex(), &spec).unwrap());
        assert!(is_branched_subgraph_of_universal(&Tree::path(9).unwrap(), &spec).is_err());
    }

    #[test]
    fn subgraph_iteration() {
        let cat = plain_catalog(2, 2).unwrap();
        let all: Vec<_> = branched_subgraphs(&cat, 1000).unwrap().collect();
        assert_eq!(all.len(), 45);
        assert_eq!(all[0], CanonicalCode::leaf());
        assert!(branched_subgraphs(&cat, 10).is_err());
    }
}
