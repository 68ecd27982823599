//! Rooted trees and their text formats.

use crate::error::TreeError;

/// A rooted tree on nodes `0..n`. Children are kept in a fixed order, which
/// fixes the Euler tour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
}

impl Tree {
    /// Builds from parent links; children end up in ascending id order.
    pub fn from_parents(parent: &[Option<usize>]) -> Result<Self, TreeError> {
        let n = parent.len();
        if n == 0 {
            return Err(TreeError::NoRoot);
        }
        let mut root = None;
        let mut children = vec![Vec::new(); n];
        for (v, &p) in parent.iter().enumerate() {
            match p {
                None => match root {
                    None => root = Some(v),
                    Some(r) => return Err(TreeError::MultipleRoots(r, v)),
                },
                Some(p) if p >= n => {
                    return Err(TreeError::Malformed(format!(
                        "parent {p} of node {v} is not a node"
                    )))
                }
                Some(p) => children[p].push(v),
            }
        }
        let Some(root) = root else {
            // every node has a parent, so the links must loop
            return Err(TreeError::Cycle(find_cycle(parent, 0)));
        };

        let mut seen = vec![false; n];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(u) = stack.pop() {
            for &c in &children[u] {
                seen[c] = true;
                stack.push(c);
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            let on_cycle = find_cycle(parent, v);
            return Err(if on_cycle == v {
                TreeError::Cycle(v)
            } else {
                TreeError::UnreachableNode(v)
            });
        }
        Ok(Tree {
            parent: parent.to_vec(),
            children,
            root,
        })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Parent array text: `n`, then `n` parent ids with `-1` for the root.
    pub fn to_parent_text(&self) -> String {
        let mut out = format!("{}\n", self.len());
        let parts: Vec<String> = self
            .parent
            .iter()
            .map(|p| p.map_or("-1".to_string(), |p| p.to_string()))
            .collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
        out
    }
}

/// Follows parent links from `start` (which cannot reach a root) and
/// returns the first node met twice, a node on the cycle.
fn find_cycle(parent: &[Option<usize>], start: usize) -> usize {
    let mut seen = vec![false; parent.len()];
    let mut u = start;
    while !seen[u] {
        seen[u] = true;
        u = parent[u].expect("node cannot reach a root");
    }
    u
}

/// Parses `n` followed by `n` parent ids (`-1` marks the root).
pub fn parse_parent_array(text: &str) -> Result<Tree, TreeError> {
    let mut tokens = text.split_whitespace();
    let n: usize = tokens
        .next()
        .ok_or_else(|| TreeError::Malformed("missing node count".into()))?
        .parse()
        .map_err(|e| TreeError::Malformed(format!("node count: {e}")))?;
    let mut parent = Vec::with_capacity(n);
    for tok in tokens.by_ref().take(n) {
        let p: i64 = tok
            .parse()
            .map_err(|e| TreeError::Malformed(format!("parent {tok:?}: {e}")))?;
        parent.push(match p {
            -1 => None,
            p if p >= 0 => Some(p as usize),
            p => return Err(TreeError::Malformed(format!("negative parent {p}"))),
        });
    }
    if parent.len() != n {
        return Err(TreeError::Malformed(format!(
            "expected {n} parents, found {}",
            parent.len()
        )));
    }
    if tokens.next().is_some() {
        return Err(TreeError::Malformed(format!("more than {n} parents")));
    }
    Tree::from_parents(&parent)
}

/// Parses a balanced parenthesis string; each `(` opens a node, numbered in
/// preorder. Whitespace is ignored.
pub fn parse_balanced_parens(text: &str) -> Result<Tree, TreeError> {
    let mut parent: Vec<Option<usize>> = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    let mut closed_root = false;
    for (pos, ch) in text.char_indices() {
        match ch {
            '(' => {
                if closed_root {
                    return Err(TreeError::MultipleRoots(0, parent.len()));
                }
                parent.push(open.last().copied());
                open.push(parent.len() - 1);
            }
            ')' => {
                open.pop().ok_or(TreeError::Unbalanced(pos))?;
                closed_root = open.is_empty();
            }
            c if c.is_whitespace() => {}
            c => {
                return Err(TreeError::Malformed(format!(
                    "unexpected {c:?} at byte {pos}"
                )))
            }
        }
    }
    if parent.is_empty() {
        return Err(TreeError::Empty);
    }
    if !open.is_empty() {
        return Err(TreeError::Unbalanced(text.len()));
    }
    Tree::from_parents(&parent)
}
