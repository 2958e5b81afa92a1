//! Named trees and graphs: the fixtures and sharpness witnesses used by the
//! tests and the `gen extremal` command.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::brute::{self, BruteLimits};
use crate::eccentric::EccentricSequence;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, Tree};

/// The spider `S_{k_1, k_2, ...}`: hub 0 with legs of the given edge
/// lengths, numbered leg by leg outward. No legs gives a single vertex.
///
/// # Panics
/// If a leg has length zero.
pub fn spider(legs: &[usize]) -> Tree {
    assert!(legs.iter().all(|&k| k >= 1), "spider legs need at least one edge");
    let mut edges = Vec::new();
    let mut next = 1;
    for &k in legs {
        let mut prev = 0;
        for _ in 0..k {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::from_edges(next, &edges).expect("legs form a tree")
}

/// The 11-vertex spider with two legs of length 1 and four of length 2.
pub fn fig2_spider() -> Tree {
    spider(&[1, 1, 2, 2, 2, 2])
}

/// The broom `S_{k,1,...,1}` with `leaves` legs of length one.
pub fn broom(k: usize, leaves: usize) -> Result<Tree> {
    if k == 0 {
        return Err(Error::InvalidParameter("broom handle needs k >= 1".into()));
    }
    let mut legs = vec![k];
    legs.extend(std::iter::repeat_n(1, leaves));
    Ok(spider(&legs))
}

/// A path on `k` vertices with `d` leaves hung on every path vertex:
/// `k(d+1)` vertices, distinguishing number `d`, fixing number `k(d-1)`.
pub fn tk_family(k: usize, d: usize) -> Result<Tree> {
    if k == 0 || d < 2 {
        return Err(Error::InvalidParameter(
            "tk-family needs k >= 1 and D >= 2".into(),
        ));
    }
    let mut edges: Vec<(usize, usize)> = (1..k).map(|v| (v - 1, v)).collect();
    let mut next = k;
    for v in 0..k {
        for _ in 0..d {
            edges.push((v, next));
            next += 1;
        }
    }
    Tree::from_edges(next, &edges)
}

/// `k` copies of the 11-vertex spider with their hubs joined into a path.
pub fn sharpness_chain(k: usize) -> Result<Tree> {
    if k == 0 {
        return Err(Error::InvalidParameter("sharpness-chain needs k >= 1".into()));
    }
    let piece = fig2_spider();
    let size = piece.order();
    let mut edges = Vec::new();
    for c in 0..k {
        let off = c * size;
        edges.extend(piece.graph().edges().iter().map(|&(u, v)| (u + off, v + off)));
        if c > 0 {
            edges.push((off - size, off));
        }
    }
    Tree::from_edges(k * size, &edges)
}

/// The tree realizing a sequence: a path `v_0 .. v_d` with `m_i - 2`
/// pendant vertices on `v_(i-1)` for `i = r+1 .. d`. Vertex `j <= d` is `v_j`.
pub fn t_x(seq: &EccentricSequence) -> Result<Tree> {
    if !seq.lesniak_realizable() {
        return Err(Error::InvalidParameter(format!(
            "eccentric sequence {seq} is not realizable by a tree"
        )));
    }
    let (r, d) = (seq.radius(), seq.diameter());
    let mut edges: Vec<(usize, usize)> = (1..=d).map(|v| (v - 1, v)).collect();
    let mut next = d + 1;
    for i in r + 1..=d {
        for _ in 2..seq.m(i) {
            edges.push((i - 1, next));
            next += 1;
        }
    }
    Tree::from_edges(next, &edges)
}

/// A tree with sequence `(r, (r+1)^(k), ..., (2r)^(k))` and fixing number 1:
/// a path `v_0 .. v_2r`, a pendant path of length `j` on each `v_j` for
/// `1 <= j <= k-2`, and pendant paths of lengths `r-1` down to `r-k+2` on
/// `v_r`.
pub fn prop55(r: usize, k: usize) -> Result<Tree> {
    if k < 2 || k > r + 1 {
        return Err(Error::InvalidParameter(format!(
            "prop55 needs 2 <= k <= r + 1, got r = {r}, k = {k}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (1..=2 * r).map(|v| (v - 1, v)).collect();
    let mut next = 2 * r + 1;
    let mut hang = |at: usize, len: usize, edges: &mut Vec<(usize, usize)>| {
        let mut prev = at;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    };
    for j in 1..=k - 2 {
        hang(j, j, &mut edges);
    }
    for len in (r + 2 - k..r).rev() {
        hang(r, len, &mut edges);
    }
    Tree::from_edges(next, &edges)
}

/// The default asymmetric base on `k` vertices: a path `v_1 .. v_(k-1)`
/// (ids `0 .. k-2`) with a pendant vertex `k-1` on `v_3`.
pub fn gk_base(k: usize) -> Result<Tree> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!(
            "the default base needs k >= 4, got {k}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (1..k - 1).map(|v| (v - 1, v)).collect();
    edges.push((2, k - 1));
    Tree::from_edges(k, &edges)
}

/// Largest base order accepted; the graph has `2^k` blocks.
pub const GK_MAX_BASE: usize = 16;

/// The base graph plus, for every nonempty subset `U` of its vertices (in
/// bitmask order), `d` pairwise nonadjacent twins joined to all of `U`.
/// Twin `j` of the `s`-th subset has id `k + (s-1)·d + j`.
pub fn gk_from_base(base: &Graph, d: usize) -> Result<Graph> {
    let k = base.order();
    if k == 0 || k > GK_MAX_BASE {
        return Err(Error::InvalidParameter(format!(
            "base order must be in 1..={GK_MAX_BASE}, got {k}"
        )));
    }
    if d < 1 {
        return Err(Error::InvalidParameter("need at least one twin per subset".into()));
    }
    let mut edges = base.edges().to_vec();
    let mut next = k;
    for mask in 1u32..(1 << k) {
        for _ in 0..d {
            for v in (0..k).filter(|v| mask >> v & 1 == 1) {
                edges.push((v, next));
            }
            next += 1;
        }
    }
    Graph::new(next, &edges)
}

/// `G_k` on the default base, after checking that the base is asymmetric.
pub fn gk(k: usize, d: usize) -> Result<Graph> {
    let base = gk_base(k)?;
    ensure_asymmetric_base(&base)?;
    gk_from_base(base.graph(), d)
}

fn ensure_asymmetric_base(base: &Tree) -> Result<()> {
    let asymmetric = if base.order() <= BruteLimits::default().group {
        brute::is_asymmetric(base.graph(), &BruteLimits::default())?
    } else {
        crate::params::fixing_number(base).0 == 0
    };
    if asymmetric {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "the default base on {} vertices is not asymmetric; use k >= 7",
            base.order()
        )))
    }
}

/// What `gk_certificates` established.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GkCertificates {
    pub k: usize,
    pub d: usize,
    pub order: usize,
    pub base_asymmetric: bool,
    /// Twin transpositions checked to preserve adjacency.
    pub swaps_verified: usize,
    pub swaps_listed: usize,
    /// Every fixing set meets `d-1` twins of every subset.
    pub fixing_lower_bound: usize,
    /// The twin-indexed coloring separates every listed transposition.
    pub coloring_breaks_swaps: bool,
}

/// Certifies `F(G_k) >= (d-1)(2^k - 1)`. For every subset all `d` twins
/// have the same neighborhood, so any transposition of two of them is an
/// automorphism, and a fixing set must contain all but at most one twin of
/// every subset. The coloring gives the base and the first twin of each
/// subset color 1 and twin `j` color `j+1`.
pub fn gk_certificates(k: usize, d: usize) -> Result<GkCertificates> {
    if d < 2 {
        return Err(Error::InvalidParameter("gk certificates need D >= 2".into()));
    }
    let base = gk_base(k)?;
    ensure_asymmetric_base(&base)?;
    let g = gk_from_base(base.graph(), d)?;
    let mut colors = vec![1u32; g.order()];
    for (idx, c) in colors.iter_mut().enumerate().skip(k) {
        *c = ((idx - k) % d) as u32 + 1;
    }
    let coloring = Coloring::new(colors, d as u32)?;
    let blocks = (1usize << k) - 1;
    let mut verified = 0;
    let mut breaks = true;
    for s in 0..blocks {
        let first = k + s * d;
        for j in 0..d - 1 {
            let (a, b) = (first + j, first + j + 1);
            let mut perm: Vec<usize> = (0..g.order()).collect();
            perm.swap(a, b);
            if preserves_adjacency(&g, &perm) {
                verified += 1;
            }
            breaks &= coloring.colors()[a] != coloring.colors()[b];
        }
    }
    let listed = blocks * (d - 1);
    Ok(GkCertificates {
        k,
        d,
        order: g.order(),
        base_asymmetric: true,
        swaps_verified: verified,
        swaps_listed: listed,
        fixing_lower_bound: if verified == listed { listed } else { 0 },
        coloring_breaks_swaps: breaks,
    })
}

fn preserves_adjacency(g: &Graph, perm: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| g.has_edge(perm[u], perm[v]))
}

/// Names accepted by [`construct`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionId {
    Fig2Spider,
    TkFamily,
    SharpnessChain,
    TX,
    Prop55,
    Gk,
    Spider,
    Broom,
    Path,
    Star,
}

impl ConstructionId {
    pub const ALL: [ConstructionId; 10] = [
        Self::Fig2Spider,
        Self::TkFamily,
        Self::SharpnessChain,
        Self::TX,
        Self::Prop55,
        Self::Gk,
        Self::Spider,
        Self::Broom,
        Self::Path,
        Self::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Fig2Spider => "fig2-spider",
            Self::TkFamily => "tk-family",
            Self::SharpnessChain => "sharpness-chain",
            Self::TX => "t-x",
            Self::Prop55 => "prop55",
            Self::Gk => "gk",
            Self::Spider => "spider",
            Self::Broom => "broom",
            Self::Path => "path",
            Self::Star => "star",
        }
    }

    /// Parameter grammar, for help and error messages.
    pub fn usage(self) -> &'static str {
        match self {
            Self::Fig2Spider => "no parameters",
            Self::TkFamily => "k,D",
            Self::SharpnessChain => "k",
            Self::TX => "an eccentric sequence such as \"3^(1) 4^(3) 5^(5) 6^(4)\"",
            Self::Prop55 => "r,k",
            Self::Gk => "k,D",
            Self::Spider => "leg lengths, e.g. 2,2,1,1",
            Self::Broom => "k,leaves",
            Self::Path => "n",
            Self::Star => "leaves",
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "construction",
                name: s.to_string(),
            })
    }
}

/// Output of [`construct`]; everything but `gk` is a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Tree(Tree),
    Graph(Graph),
}

impl Construction {
    pub fn graph(&self) -> &Graph {
        match self {
            Self::Tree(t) => t.graph(),
            Self::Graph(g) => g,
        }
    }
}

fn int_params(id: ConstructionId, text: &str, arity: Option<usize>) -> Result<Vec<usize>> {
    let bad = || {
        Error::InvalidParameter(format!("{id} expects {}, got `{text}`", id.usage()))
    };
    let values: Vec<usize> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match arity {
        Some(a) if values.len() != a => Err(bad()),
        _ => Ok(values),
    }
}

/// Builds a named construction from its textual parameters.
pub fn construct(id: ConstructionId, params: &str) -> Result<Construction> {
    use ConstructionId::*;
    let tree = match id {
        Fig2Spider => {
            int_params(id, params, Some(0))?;
            fig2_spider()
        }
        TkFamily => {
            let p = int_params(id, params, Some(2))?;
            tk_family(p[0], p[1])?
        }
        SharpnessChain => sharpness_chain(int_params(id, params, Some(1))?[0])?,
        TX => t_x(&params.parse()?)?,
        Prop55 => {
            let p = int_params(id, params, Some(2))?;
            prop55(p[0], p[1])?
        }
        Gk => {
            let p = int_params(id, params, Some(2))?;
            return Ok(Construction::Graph(gk(p[0], p[1])?));
        }
        Spider => {
            let p = int_params(id, params, None)?;
            if p.contains(&0) {
                return Err(Error::InvalidParameter("spider legs need length >= 1".into()));
            }
            spider(&p)
        }
        Broom => {
            let p = int_params(id, params, Some(2))?;
            broom(p[0], p[1])?
        }
        Path => Tree::path(int_params(id, params, Some(1))?[0])?,
        Star => Tree::star(int_params(id, params, Some(1))?[0])?,
    };
    Ok(Construction::Tree(tree))
}
