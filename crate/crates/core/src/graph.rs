//! Simple undirected graphs and trees over dense vertex ids `0..n`.
//!
//! Everything here is immutable once built. Higher layers address vertices by
//! id only; anything isomorphism-sensitive goes through [`crate::canon`].

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    /// The reported "line" in errors is the 1-based position in `edges`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line: i + 1, vertex: u });
            }
            normalized.push((u.min(v), u.max(v)));
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = normalized.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            let line = normalized.iter().rposition(|&e| e == (u, v)).unwrap_or(0) + 1;
            return Err(Error::DuplicateEdge { line, u, v });
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { adj, edges: seen })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// BFS distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.distances_from(0).iter().all(|&d| d != usize::MAX)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Self::new(self.order(), &edges)
    }
}

/// A connected acyclic graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    graph: Graph,
}

impl Tree {
    pub fn new(graph: Graph) -> Result<Self> {
        if graph.order() == 0 {
            return Err(Error::EmptyInput);
        }
        if graph.size() + 1 != graph.order() {
            return Err(Error::NotATree(format!(
                "{} vertices but {} edges",
                graph.order(),
                graph.size()
            )));
        }
        if !graph.is_connected() {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        Ok(Self { graph })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(Graph::new(n, edges)?)
    }

    pub fn single_vertex() -> Self {
        Self {
            graph: Graph::empty(1),
        }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    /// The star with hub 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges)
    }

    /// Builds a tree from a parent array (`None` for the root).
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        let edges: Vec<_> = parents
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p, v)))
            .collect();
        Self::from_edges(parents.len(), &edges)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.graph.neighbors(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }

    pub fn max_degree(&self) -> usize {
        self.graph.max_degree()
    }

    /// Vertices of degree one, ascending.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn is_path(&self) -> bool {
        self.max_degree() <= 2
    }

    /// Parent pointers and BFS order for the tree hung from `root`.
    pub fn parents(&self, root: usize) -> (Vec<Option<usize>>, Vec<usize>) {
        let n = self.order();
        let mut parent = vec![None; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    order.push(w);
                }
            }
        }
        (parent, order)
    }

    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        self.graph.distances_from(source)
    }

    /// Eccentricity of every vertex, indexed by vertex id.
    ///
    /// Uses the two-sweep property of trees: `ecc(v)` is the larger distance
    /// from `v` to the two ends of any diametral path.
    pub fn eccentricities(&self) -> Vec<usize> {
        let from0 = self.distances_from(0);
        let a = argmax(&from0);
        let from_a = self.distances_from(a);
        let b = argmax(&from_a);
        let from_b = self.distances_from(b);
        from_a.iter().zip(&from_b).map(|(&x, &y)| x.max(y)).collect()
    }

    pub fn radius(&self) -> usize {
        self.eccentricities().into_iter().min().unwrap_or(0)
    }

    pub fn diameter(&self) -> usize {
        self.eccentricities().into_iter().max().unwrap_or(0)
    }

    /// The one or two central vertices, ascending.
    pub fn center(&self) -> Vec<usize> {
        let ecc = self.eccentricities();
        let r = *ecc.iter().min().expect("trees are nonempty");
        (0..self.order()).filter(|&v| ecc[v] == r).collect()
    }

    /// Decomposes the tree into pendent spiders: for every vertex `u` of
    /// degree at least three that ends some pendent path, the piece `S_u`
    /// made of `u` and all pendent paths leaving it. A path is returned as one
    /// degenerate piece hung from its smaller endpoint.
    pub fn pendent_spider_decomposition(&self) -> Result<Vec<PendentSpider>> {
        let n = self.order();
        if n < 2 {
            return Err(Error::TooSmall { need: 2, got: n });
        }
        if self.is_path() {
            let hub = *self.leaves().first().expect("a path has two ends");
            let (_, order) = self.parents(hub);
            return Ok(vec![PendentSpider {
                hub,
                legs: vec![order[1..].to_vec()],
            }]);
        }
        let mut pieces: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
        for leaf in self.leaves() {
            // walk inward through degree-2 vertices
            let mut leg = vec![leaf];
            let mut prev = leaf;
            let mut cur = self.neighbors(leaf)[0];
            while self.degree(cur) == 2 {
                leg.push(cur);
                let next = self.neighbors(cur).iter().copied().find(|&w| w != prev);
                prev = cur;
                cur = next.expect("degree two");
            }
            leg.reverse();
            pieces.entry(cur).or_default().push(leg);
        }
        Ok(pieces
            .into_iter()
            .map(|(hub, mut legs)| {
                legs.sort();
                PendentSpider { hub, legs }
            })
            .collect())
    }
}

fn argmax(values: &[usize]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > values[best] {
            best = i;
        }
    }
    best
}

/// One piece `S_u` of the pendent-spider decomposition, in the ids of the
/// host tree. Each leg runs from the hub's neighbor out to a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendentSpider {
    pub hub: usize,
    pub legs: Vec<Vec<usize>>,
}

impl PendentSpider {
    pub fn order(&self) -> usize {
        1 + self.legs.iter().map(Vec::len).sum::<usize>()
    }

    /// Host-tree ids, hub first then legs in order.
    pub fn vertices(&self) -> Vec<usize> {
        std::iter::once(self.hub)
            .chain(self.legs.iter().flatten().copied())
            .collect()
    }

    /// Host-tree ids of the far ends of the legs; these are leaves of the host.
    pub fn leaf_ends(&self) -> Vec<usize> {
        self.legs.iter().filter_map(|l| l.last().copied()).collect()
    }

    /// The piece as a standalone rooted tree. Vertex `i` of the result is
    /// `self.vertices()[i]` in the host.
    pub fn to_rooted(&self) -> RootedTree {
        let mut edges = Vec::with_capacity(self.order() - 1);
        let mut next = 1;
        for leg in &self.legs {
            let mut prev = 0;
            for _ in leg {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        let tree = Tree::from_edges(next, &edges).expect("legs form a tree");
        RootedTree::new(tree, 0).expect("hub is vertex 0")
    }
}

/// A tree with a distinguished root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
}

impl RootedTree {
    pub fn new(tree: Tree, root: usize) -> Result<Self> {
        if root >= tree.order() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: tree.order(),
            });
        }
        Ok(Self { tree, root })
    }

    pub fn leaf() -> Self {
        Self {
            tree: Tree::single_vertex(),
            root: 0,
        }
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn order(&self) -> usize {
        self.tree.order()
    }

    /// Children lists with respect to the root.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let (parent, _) = self.tree.parents(self.root);
        let mut children = vec![Vec::new(); self.order()];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = p {
                children[*p].push(v);
            }
        }
        children
    }

    /// Largest root-to-vertex distance.
    pub fn height(&self) -> usize {
        self.tree
            .distances_from(self.root)
            .into_iter()
            .max()
            .unwrap_or(0)
    }

    /// The subtree below `v` (with respect to this root), rooted at `v`.
    pub fn subtree(&self, v: usize) -> RootedTree {
        let (parent, _) = self.tree.parents(self.root);
        let mut ids = vec![usize::MAX; self.order()];
        let mut members = vec![v];
        ids[v] = 0;
        let mut head = 0;
        let mut edges = Vec::new();
        while head < members.len() {
            let u = members[head];
            head += 1;
            for &w in self.tree.neighbors(u) {
                if parent[w] == Some(u) {
                    ids[w] = members.len();
                    edges.push((ids[u], ids[w]));
                    members.push(w);
                }
            }
        }
        let tree = Tree::from_edges(members.len(), &edges).expect("subtree of a tree");
        RootedTree { tree, root: 0 }
    }

    /// Builds a rooted tree by hanging the given rooted trees below a new root.
    pub fn join(children: &[RootedTree]) -> RootedTree {
        let mut edges = Vec::new();
        let mut offset = 1;
        for child in children {
            edges.push((0, offset + child.root));
            edges.extend(
                child
                    .tree
                    .graph()
                    .edges()
                    .iter()
                    .map(|&(u, v)| (u + offset, v + offset)),
            );
            offset += child.order();
        }
        let tree = Tree::from_edges(offset, &edges).expect("joined trees form a tree");
        RootedTree { tree, root: 0 }
    }
}

/// A vertex coloring with colors `1..=t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
    t: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, t: u32) -> Result<Self> {
        for (vertex, &color) in colors.iter().enumerate() {
            if color == 0 || color > t {
                return Err(Error::ColorOutOfRange { vertex, color, t });
            }
        }
        Ok(Self { colors, t })
    }

    /// Every vertex gets its own color.
    pub fn rainbow(n: usize) -> Self {
        Self {
            colors: (1..=n as u32).collect(),
            t: n.max(1) as u32,
        }
    }

    pub fn constant(n: usize) -> Self {
        Self {
            colors: vec![1; n],
            t: 1,
        }
    }

    /// Each vertex of `set` gets a private color, everything else color 1.
    pub fn individualizing(n: usize, set: &[usize]) -> Self {
        let mut colors = vec![1; n];
        for (i, &v) in set.iter().enumerate() {
            colors[v] = i as u32 + 2;
        }
        Self {
            colors,
            t: set.len() as u32 + 1,
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn palette(&self) -> u32 {
        self.t
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// `n` minus the size of a largest color class.
    pub fn paint_cost(&self) -> usize {
        let mut counts = vec![0usize; self.t as usize + 1];
        for &c in &self.colors {
            counts[c as usize] += 1;
        }
        self.colors.len() - counts.into_iter().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spider(legs: &[usize]) -> Tree {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Tree::from_edges(next, &edges).unwrap()
    }

    #[test]
    fn path_eccentricities() {
        let p5 = Tree::path(5).unwrap();
        assert_eq!(p5.eccentricities(), vec![4, 3, 2, 3, 4]);
        assert_eq!(p5.radius(), 2);
        assert_eq!(p5.diameter(), 4);
        assert_eq!(p5.center(), vec![2]);
        assert_eq!(Tree::path(4).unwrap().center(), vec![1, 2]);
    }

    #[test]
    fn star_eccentricities() {
        let star = Tree::star(3).unwrap();
        assert_eq!(star.eccentricities(), vec![1, 2, 2, 2]);
        assert_eq!(star.center(), vec![0]);
    }

    #[test]
    fn s2211_eccentric_multiset() {
        let mut ecc = spider(&[2, 2, 1, 1]).eccentricities();
        ecc.sort_unstable();
        assert_eq!(ecc, vec![2, 3, 3, 3, 3, 4, 4]);
    }

    #[test]
    fn single_vertex() {
        let t = Tree::single_vertex();
        assert_eq!(t.eccentricities(), vec![0]);
        assert_eq!(t.center(), vec![0]);
        assert!(t.leaves().is_empty());
        assert!(matches!(
            t.pendent_spider_decomposition(),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { line: 2, .. })
        ));
        assert!(matches!(
            Graph::new(2, &[(1, 1)]),
            Err(Error::SelfLoop { line: 1, vertex: 1 })
        ));
        assert!(Tree::from_edges(4, &[(0, 1), (2, 3)]).is_err());
        assert!(Tree::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn decomposition_of_fig2_spider() {
        let t = spider(&[1, 1, 2, 2, 2, 2]);
        let pieces = t.pendent_spider_decomposition().unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].hub, 0);
        assert_eq!(pieces[0].order(), 11);
    }

    #[test]
    fn decomposition_of_double_star() {
        // path 0-1 with three leaves on each end
        let t = Tree::from_edges(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])
            .unwrap();
        let pieces = t.pendent_spider_decomposition().unwrap();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0].vertices(), vec![0, 2, 3, 4]);
        assert_eq!(pieces[1].vertices(), vec![1, 5, 6, 7]);
        assert!(pieces.iter().all(|p| p.legs.iter().all(|l| l.len() == 1)));
    }

    #[test]
    fn decomposition_of_path_is_one_piece() {
        let pieces = Tree::path(6).unwrap().pendent_spider_decomposition().unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].hub, 0);
        assert_eq!(pieces[0].leaf_ends(), vec![5]);
        assert_eq!(pieces[0].order(), 6);
    }

    #[test]
    fn subtree_and_join() {
        let r = RootedTree::new(spider(&[2, 1]), 0).unwrap();
        assert_eq!(r.height(), 2);
        let joined = RootedTree::join(&[r.subtree(1), r.subtree(3)]);
        assert_eq!(joined.order(), 4);
        assert_eq!(joined.children()[0].len(), 2);
    }

    #[test]
    fn coloring_validation() {
        assert!(Coloring::new(vec![1, 2, 3], 2).is_err());
        assert!(Coloring::new(vec![0], 2).is_err());
        let c = Coloring::new(vec![1, 1, 2, 1], 2).unwrap();
        assert_eq!(c.paint_cost(), 1);
        assert_eq!(Coloring::individualizing(4, &[3, 1]).colors(), &[1, 3, 1, 2]);
    }
}
