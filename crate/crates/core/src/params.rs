//! Exact tree parameters by recursion on canonical codes: rigid coloring
//! counts, `D(T)`, `F(T)` with a leaf witness, and the spider formulas.
//!
//! A child class is a maximal set of isomorphic children of one vertex.
//! For fixing, a class of `m` copies of a type with rooted fixing number
//! `f >= 1` costs `m·f`: every copy must be pinned internally, and a pinned
//! copy stays in place. When `f = 0` each copy is rigid once it is held in
//! place, and marking a leaf in all but one copy does that, so the cost is
//! `m - 1`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::canon::{center_split, subtree_codes, CanonicalCode, CenterSplit};
use crate::error::{Error, Result};
use crate::extremal::spider;
use crate::graph::{RootedTree, Tree};

fn binomial(n: &BigUint, k: usize) -> BigUint {
    if BigUint::from(k) > *n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - BigUint::from(i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Memo table for `N(B, d)` at one fixed `d`.
#[derive(Debug, Clone)]
pub struct RigidCounter {
    d: usize,
    memo: HashMap<CanonicalCode, BigUint>,
}

impl RigidCounter {
    pub fn new(d: usize) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidParameter("palette size must be at least 1".into()));
        }
        Ok(Self {
            d,
            memo: HashMap::new(),
        })
    }

    pub fn palette(&self) -> usize {
        self.d
    }

    /// Number of rooted-isomorphism classes of `d`-colorings of `code` whose
    /// only color-preserving rooted automorphism is the identity.
    pub fn count(&mut self, code: &CanonicalCode) -> BigUint {
        if let Some(v) = self.memo.get(code) {
            return v.clone();
        }
        let mut value = BigUint::from(self.d);
        for (child, m) in code.child_classes() {
            let n = self.count(&child);
            value *= binomial(&n, m);
            if value.is_zero() {
                break;
            }
        }
        self.memo.insert(code.clone(), value.clone());
        value
    }
}

/// `N(B, d)`.
pub fn count_rigid_colorings(b: &RootedTree, d: usize) -> Result<BigUint> {
    let code = crate::canon::rooted_canonical_code(b);
    count_rigid_colorings_code(&code, d)
}

pub fn count_rigid_colorings_code(code: &CanonicalCode, d: usize) -> Result<BigUint> {
    Ok(RigidCounter::new(d)?.count(code))
}

/// Whether `d` colors distinguish the tree with the given center split.
fn d_colors_suffice(split: &CenterSplit, d: usize) -> bool {
    let mut counter = RigidCounter::new(d).expect("d >= 1");
    match split {
        CenterSplit::Unicentral(c) => !counter.count(c).is_zero(),
        CenterSplit::Bicentral(a, b) if a == b => counter.count(a) >= BigUint::from(2u32),
        CenterSplit::Bicentral(a, b) => !counter.count(a).is_zero() && !counter.count(b).is_zero(),
    }
}

/// `D(T)`: the fewest colors admitting a coloring preserved only by the
/// identity.
pub fn distinguishing_number(tree: &Tree) -> usize {
    let split = center_split(tree);
    (1..)
        .find(|&d| d_colors_suffice(&split, d))
        .expect("n colors always suffice")
}

/// Rooted fixing numbers keyed by canonical code.
#[derive(Debug, Default, Clone)]
struct FixMemo(HashMap<CanonicalCode, usize>);

impl FixMemo {
    fn f(&mut self, code: &CanonicalCode) -> usize {
        if let Some(&v) = self.0.get(code) {
            return v;
        }
        let mut total = 0;
        for (child, m) in code.child_classes() {
            let fc = self.f(&child);
            total += if fc >= 1 { m * fc } else { m - 1 };
        }
        self.0.insert(code.clone(), total);
        total
    }
}

/// Walks a rooted part of the host tree and collects a leaf witness.
struct Witness<'a> {
    tree: &'a Tree,
    codes: Vec<Option<CanonicalCode>>,
    children: Vec<Vec<usize>>,
    memo: FixMemo,
    out: Vec<usize>,
}

impl<'a> Witness<'a> {
    fn new(tree: &'a Tree, root: usize, exclude: Option<usize>) -> Self {
        let codes = subtree_codes(tree, root, exclude);
        let mut children = vec![Vec::new(); tree.order()];
        let mut stack = vec![(root, usize::MAX)];
        while let Some((v, p)) = stack.pop() {
            for &w in tree.neighbors(v) {
                if w != p && Some(w) != exclude {
                    children[v].push(w);
                    stack.push((w, v));
                }
            }
        }
        Self {
            tree,
            codes,
            children,
            memo: FixMemo::default(),
            out: Vec::new(),
        }
    }

    fn code(&self, v: usize) -> &CanonicalCode {
        self.codes[v].as_ref().expect("vertex in this part")
    }

    fn some_leaf(&self, mut v: usize) -> usize {
        while let Some(&c) = self.children[v].first() {
            v = c;
        }
        v
    }

    fn collect(&mut self, v: usize) {
        let mut classes: BTreeMap<CanonicalCode, Vec<usize>> = BTreeMap::new();
        for &c in &self.children[v] {
            classes.entry(self.code(c).clone()).or_default().push(c);
        }
        for (code, mut members) in classes {
            members.sort_unstable();
            if self.memo.f(&code) >= 1 {
                for c in members {
                    self.collect(c);
                }
            } else {
                for &c in &members[1..] {
                    let leaf = self.some_leaf(c);
                    self.out.push(leaf);
                }
            }
        }
        debug_assert!(self.out.iter().all(|&l| self.tree.degree(l) <= 1));
    }
}

/// `F(T)` with a minimum fixing set made of leaves, sorted.
pub fn fixing_number(tree: &Tree) -> (usize, Vec<usize>) {
    let centers = tree.center();
    let mut witness = match centers[..] {
        [c] => {
            let mut w = Witness::new(tree, c, None);
            w.collect(c);
            w.out
        }
        [a, b] => {
            let mut wa = Witness::new(tree, a, Some(b));
            let mut wb = Witness::new(tree, b, Some(a));
            let (ca, cb) = (wa.code(a).clone(), wb.code(b).clone());
            let fa = wa.memo.f(&ca);
            if ca == cb && fa == 0 {
                vec![wa.some_leaf(a)]
            } else {
                wa.collect(a);
                wb.collect(b);
                wa.out.extend(wb.out);
                wa.out
            }
        }
        _ => unreachable!("one or two centers"),
    };
    witness.sort_unstable();
    (witness.len(), witness)
}

/// Branch counts of a spider: `n_k` is the number of legs with `k` edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SpiderProfile {
    pub counts: BTreeMap<usize, usize>,
}

impl SpiderProfile {
    pub fn from_legs(legs: &[usize]) -> Self {
        let mut counts = BTreeMap::new();
        for &k in legs {
            *counts.entry(k).or_insert(0) += 1;
        }
        Self { counts }
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        Self {
            counts: pairs.iter().copied().filter(|p| p.1 > 0).collect(),
        }
    }

    /// `1 + sum k·n_k`.
    pub fn order(&self) -> usize {
        1 + self.counts.iter().map(|(k, n)| k * n).sum::<usize>()
    }

    pub fn n(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.values().all(|&n| n == 0)
    }

    pub fn legs(&self) -> Vec<usize> {
        self.counts
            .iter()
            .flat_map(|(&k, &n)| std::iter::repeat_n(k, n))
            .collect()
    }

    pub fn to_tree(&self) -> Tree {
        spider(&self.legs())
    }
}

/// The profile at the unique vertex of degree at least 3. Paths are
/// profiled from an endpoint, giving a single leg.
pub fn spider_profile(tree: &Tree) -> Result<SpiderProfile> {
    let high: Vec<usize> = (0..tree.order()).filter(|&v| tree.degree(v) >= 3).collect();
    let hub = match high[..] {
        [] if tree.order() == 1 => return Ok(SpiderProfile::default()),
        [] => return Ok(SpiderProfile::from_legs(&[tree.order() - 1])),
        [h] => h,
        [a, b, ..] => return Err(Error::NotASpider(a, b)),
    };
    let legs: Vec<usize> = tree
        .neighbors(hub)
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (hub, start, 1);
            while tree.degree(cur) == 2 {
                let next = tree.neighbors(cur).iter().copied().find(|&w| w != prev);
                prev = cur;
                cur = next.expect("degree two");
                len += 1;
            }
            len
        })
        .collect();
    Ok(SpiderProfile::from_legs(&legs))
}

/// `sum max{0, n_k - 1} / (1 + sum k·n_k)`.
pub fn spider_fixing_density(p: &SpiderProfile) -> Result<Ratio<u64>> {
    if p.is_empty() {
        return Err(Error::InvalidParameter("empty spider profile".into()));
    }
    let num: usize = p.counts.values().map(|&n| n.saturating_sub(1)).sum();
    Ok(Ratio::new(num as u64, p.order() as u64))
}

/// A fixing set assembled piece by piece over the pendent-spider
/// decomposition: nothing for a piece of order 2, otherwise all but one leg
/// end from every class of equal-length legs, and at least one leg end.
pub fn construct_bound_fixing_set(tree: &Tree) -> Result<Vec<usize>> {
    if tree.order() < 3 {
        return Err(Error::TooSmall {
            need: 3,
            got: tree.order(),
        });
    }
    let mut out = Vec::new();
    for piece in tree.pendent_spider_decomposition()? {
        if piece.order() == 2 {
            continue;
        }
        let mut by_len: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for leg in &piece.legs {
            by_len.entry(leg.len()).or_default().push(*leg.last().expect("nonempty leg"));
        }
        let mut picked: Vec<usize> = by_len
            .values()
            .flat_map(|ends| ends[1..].iter().copied())
            .collect();
        if picked.is_empty() {
            // asymmetric piece, or a path hung from its end: its far end
            let longest = piece.legs.iter().max_by_key(|l| l.len()).expect("a leg");
            picked.push(*longest.last().expect("nonempty leg"));
        }
        out.extend(picked);
    }
    out.sort_unstable();
    Ok(out)
}

/// Maximizes the spider density over profiles with `n_k` in `{0, D^k}` for
/// `k <= k_max`; ties go to the smaller order.
pub fn extremal_spider_profile(d: usize, k_max: usize) -> Result<SpiderProfile> {
    if d < 2 || !(1..=16).contains(&k_max) {
        return Err(Error::InvalidParameter(format!(
            "need D >= 2 and 1 <= k_max <= 16, got D = {d}, k_max = {k_max}"
        )));
    }
    let caps = leg_caps(d, k_max)?;
    let mut best: Option<(Ratio<u64>, SpiderProfile)> = None;
    for mask in 1u32..(1 << k_max) {
        let pairs: Vec<(usize, usize)> = (0..k_max)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (i + 1, caps[i]))
            .collect();
        let p = SpiderProfile::from_pairs(&pairs);
        let density = spider_fixing_density(&p)?;
        if better(&density, &p, best.as_ref()) {
            best = Some((density, p));
        }
    }
    Ok(best.expect("at least one profile").1)
}

fn leg_caps(d: usize, k_max: usize) -> Result<Vec<usize>> {
    (1..=k_max as u32)
        .map(|k| {
            d.checked_pow(k)
                .ok_or_else(|| Error::InvalidParameter("D^k overflows".into()))
        })
        .collect()
}

fn better(density: &Ratio<u64>, p: &SpiderProfile, best: Option<&(Ratio<u64>, SpiderProfile)>) -> bool {
    match best {
        None => true,
        Some((bd, bp)) => density > bd || (density == bd && p.order() < bp.order()),
    }
}

/// Checks that no profile with arbitrary `1 <= n_k <= D^k` entries beats
/// [`extremal_spider_profile`]. `None` when the search space exceeds `budget`.
pub fn extremal_spider_profile_is_optimal(d: usize, k_max: usize, budget: u64) -> Result<Option<bool>> {
    let best = extremal_spider_profile(d, k_max)?;
    let best_density = spider_fixing_density(&best)?;
    let caps = leg_caps(d, k_max)?;
    let space = caps
        .iter()
        .try_fold(1u64, |acc, &c| acc.checked_mul(c as u64 + 1));
    if space.is_none_or(|s| s > budget) {
        return Ok(None);
    }
    let mut counts = vec![0usize; k_max];
    loop {
        // odometer over 0..=cap per coordinate
        let mut i = 0;
        while i < k_max && counts[i] == caps[i] {
            counts[i] = 0;
            i += 1;
        }
        if i == k_max {
            return Ok(Some(true));
        }
        counts[i] += 1;
        let pairs: Vec<(usize, usize)> = counts.iter().enumerate().map(|(k, &n)| (k + 1, n)).collect();
        let p = SpiderProfile::from_pairs(&pairs);
        if spider_fixing_density(&p)? > best_density {
            return Ok(Some(false));
        }
    }
}

/// `F/n` as an exact fraction.
pub fn fixing_density(tree: &Tree) -> Ratio<u64> {
    Ratio::new(fixing_number(tree).0 as u64, tree.order() as u64)
}

/// Renders a ratio as `p/q` (always with a denominator).
pub fn ratio_string(r: &Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact count as `u64` when it fits.
pub fn count_to_u64(n: &BigUint) -> Option<u64> {
    n.to_u64()
}
