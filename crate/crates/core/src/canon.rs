//! AHU-style canonical codes for rooted and free trees.
//!
//! A code is a balanced parenthesis string: a leaf is `()`, and an internal
//! vertex wraps the codes of its children sorted ascending. Equal codes
//! means rooted-isomorphic.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{RootedTree, Tree};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn leaf() -> Self {
        Self("()".to_string())
    }

    /// Code of a root whose child subtrees have the given codes.
    pub fn from_children<I>(children: I) -> Self
    where
        I: IntoIterator<Item = CanonicalCode>,
    {
        let mut kids: Vec<_> = children.into_iter().collect();
        kids.sort_unstable();
        let len = 2 + kids.iter().map(|c| c.0.len()).sum::<usize>();
        let mut s = String::with_capacity(len);
        s.push('(');
        for k in &kids {
            s.push_str(&k.0);
        }
        s.push(')');
        Self(s)
    }

    /// Validates a string as a code in canonical (sorted) form.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("`{text}` is not a canonical tree code"));
        if text.len() < 2 || !text.starts_with('(') {
            return Err(bad());
        }
        let mut depth = 0i64;
        for (i, ch) in text.char_indices() {
            depth += match ch {
                '(' => 1,
                ')' => -1,
                _ => return Err(bad()),
            };
            if depth == 0 && i + 1 != text.len() {
                return Err(bad());
            }
        }
        if depth != 0 {
            return Err(bad());
        }
        let code = Self(text.to_string());
        let kids = code.children();
        if kids.windows(2).any(|w| w[0] > w[1]) {
            return Err(bad());
        }
        for k in &kids {
            Self::parse(k.as_str())?;
        }
        Ok(code)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.0.len() / 2
    }

    pub fn height(&self) -> usize {
        let mut depth = 0usize;
        let mut max = 0usize;
        for b in self.0.bytes() {
            if b == b'(' {
                depth += 1;
                max = max.max(depth);
            } else {
                depth -= 1;
            }
        }
        max - 1
    }

    pub fn is_leaf(&self) -> bool {
        self.0 == "()"
    }

    /// Codes of the root's children, in canonical order.
    pub fn children(&self) -> Vec<CanonicalCode> {
        let inner = &self.0[1..self.0.len() - 1];
        let mut out = Vec::new();
        let mut depth = 0;
        let mut start = 0;
        for (i, b) in inner.bytes().enumerate() {
            if b == b'(' {
                if depth == 0 {
                    start = i;
                }
                depth += 1;
            } else {
                depth -= 1;
                if depth == 0 {
                    out.push(CanonicalCode(inner[start..=i].to_string()));
                }
            }
        }
        out
    }

    /// Children grouped by type with multiplicities.
    pub fn child_classes(&self) -> BTreeMap<CanonicalCode, usize> {
        let mut classes = BTreeMap::new();
        for c in self.children() {
            *classes.entry(c).or_insert(0) += 1;
        }
        classes
    }

    /// Materializes the code; vertex 0 is the root, ids in preorder.
    pub fn to_rooted_tree(&self) -> RootedTree {
        let mut parents: Vec<Option<usize>> = Vec::with_capacity(self.order());
        let mut stack: Vec<usize> = Vec::new();
        for b in self.0.bytes() {
            if b == b'(' {
                parents.push(stack.last().copied());
                stack.push(parents.len() - 1);
            } else {
                stack.pop();
            }
        }
        let tree = Tree::from_parents(&parents).expect("codes describe trees");
        RootedTree::new(tree, 0).expect("root is vertex 0")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

/// Codes of every vertex's subtree when `tree` hangs from `root`, optionally
/// with the edge to `exclude` removed (used for the halves of bicentral trees).
pub fn subtree_codes(tree: &Tree, root: usize, exclude: Option<usize>) -> Vec<Option<CanonicalCode>> {
    let n = tree.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    if let Some(x) = exclude {
        seen[x] = true;
    }
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in tree.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut kids: Vec<Vec<CanonicalCode>> = vec![Vec::new(); n];
    let mut codes: Vec<Option<CanonicalCode>> = vec![None; n];
    for &v in order.iter().rev() {
        let code = CanonicalCode::from_children(std::mem::take(&mut kids[v]));
        if v != root {
            kids[parent[v]].push(code.clone());
        }
        codes[v] = Some(code);
    }
    codes
}

pub fn rooted_code(tree: &Tree, root: usize) -> CanonicalCode {
    subtree_codes(tree, root, None)[root]
        .clone()
        .expect("root has a code")
}

pub fn rooted_canonical_code(rooted: &RootedTree) -> CanonicalCode {
    rooted_code(rooted.tree(), rooted.root())
}

/// Free-tree canonical form: the code rooted at the center, or the smaller
/// of the two center-rooted codes for bicentral trees.
pub fn free_code(tree: &Tree) -> CanonicalCode {
    tree.center()
        .into_iter()
        .map(|c| rooted_code(tree, c))
        .min()
        .expect("trees have a center")
}

pub fn tree_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.order() == b.order() && free_code(a) == free_code(b)
}

/// Branch types at the root, each rooted at the root's neighbor, with
/// multiplicities.
pub fn branch_multiset(rooted: &RootedTree) -> Result<BTreeMap<CanonicalCode, usize>> {
    if rooted.tree().degree(rooted.root()) == 0 {
        return Err(Error::IsolatedRoot);
    }
    Ok(rooted_canonical_code(rooted).child_classes())
}

/// Center-rooted view of a tree used by the counting recursions. A bicentral
/// tree splits into the two halves obtained by deleting the central edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CenterSplit {
    Unicentral(CanonicalCode),
    Bicentral(CanonicalCode, CanonicalCode),
}

pub fn center_split(tree: &Tree) -> CenterSplit {
    match tree.center()[..] {
        [c] => CenterSplit::Unicentral(rooted_code(tree, c)),
        [a, b] => {
            let ha = subtree_codes(tree, a, Some(b))[a].clone().expect("half");
            let hb = subtree_codes(tree, b, Some(a))[b].clone().expect("half");
            CenterSplit::Bicentral(ha, hb)
        }
        _ => unreachable!("a tree has one or two central vertices"),
    }
}
