//! Euler tour of a rooted tree: a node is appended at its first visit and
//! again every time the walk returns to it from a child.

use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTour {
    /// Node sequence, length `2n - 1`.
    pub nodes: Vec<usize>,
    /// Depth of each entry of `nodes`.
    pub depths: Vec<i64>,
    /// Position of each node's first appearance in `nodes`.
    pub first_pos: Vec<usize>,
    /// Depth of each node.
    pub depth: Vec<usize>,
}

impl EulerTour {
    pub fn new(tree: &Tree) -> Self {
        let n = tree.len();
        let mut nodes = Vec::with_capacity(2 * n - 1);
        let mut depths = Vec::with_capacity(2 * n - 1);
        let mut first_pos = vec![0usize; n];
        let mut depth = vec![0usize; n];

        // (node, index of the next child to descend into)
        let mut stack: Vec<(usize, usize)> = Vec::with_capacity(n);
        let root = tree.root();
        stack.push((root, 0));
        first_pos[root] = 0;
        nodes.push(root);
        depths.push(0);
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if let Some(&c) = tree.children(u).get(*next) {
                *next += 1;
                depth[c] = depth[u] + 1;
                first_pos[c] = nodes.len();
                nodes.push(c);
                depths.push(depth[c] as i64);
                stack.push((c, 0));
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    nodes.push(p);
                    depths.push(depth[p] as i64);
                }
            }
        }
        debug_assert_eq!(nodes.len(), 2 * n - 1);
        EulerTour {
            nodes,
            depths,
            first_pos,
            depth,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// See [`EulerTour::new`].
pub fn euler_tour(tree: &Tree) -> EulerTour {
    EulerTour::new(tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_parent_array;

    #[test]
    fn two_nodes() {
        let t = euler_tour(&parse_parent_array("2\n-1 0").unwrap());
        assert_eq!(t.nodes, vec![0, 1, 0]);
        assert_eq!(t.depths, vec![0, 1, 0]);
    }

    #[test]
    fn star() {
        let t = euler_tour(&parse_parent_array("3\n-1 0 0").unwrap());
        assert_eq!(t.nodes, vec![0, 1, 0, 2, 0]);
        assert_eq!(t.depths, vec![0, 1, 0, 1, 0]);
        assert_eq!(t.first_pos, vec![0, 1, 3]);
    }

    #[test]
    fn single_node() {
        let t = euler_tour(&parse_parent_array("1\n-1").unwrap());
        assert_eq!(t.nodes, vec![0]);
        assert_eq!(t.depths, vec![0]);
    }

    #[test]
    fn non_zero_root() {
        let t = euler_tour(&parse_parent_array("3\n2 -1 1").unwrap());
        assert_eq!(t.nodes, vec![1, 2, 0, 2, 1]);
        assert_eq!(t.depth, vec![2, 0, 1]);
        assert_eq!(t.first_pos, vec![2, 0, 1]);
    }

    #[test]
    fn deep_chain_does_not_recurse() {
        let n = 200_000;
        let parents: Vec<Option<usize>> =
            (0..n).map(|v| if v == 0 { None } else { Some(v - 1) }).collect();
        let t = euler_tour(&Tree::from_parents(&parents).unwrap());
        assert_eq!(t.len(), 2 * n - 1);
        assert_eq!(t.depths[n - 1], (n - 1) as i64);
    }
}
