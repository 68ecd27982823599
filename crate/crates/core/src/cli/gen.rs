use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::text::format_sequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GenKind {
    #[default]
    Sequence,
    Tree,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub seed: u64,
    /// Random-walk drift in `[-1, 1]`: `P(+1) = (1 + bias) / 3`,
    /// `P(-1) = (1 - bias) / 3`, `P(0) = 1 / 3`.
    pub bias: f64,
    /// Upper bound on children per tree node.
    pub max_degree: Option<usize>,
    /// Probability in `[0, 1]` of hanging a new node under the previous one.
    pub path_bias: f64,
}

impl Default for GenSpec {
    fn default() -> Self {
        GenSpec {
            kind: GenKind::Sequence,
            n: 1000,
            seed: 0,
            bias: 0.0,
            max_degree: None,
            path_bias: 0.0,
        }
    }
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::BadSpec("n must be at least 1".into()));
        }
        if !(-1.0..=1.0).contains(&self.bias) {
            return Err(Error::BadSpec(format!("bias {} not in [-1, 1]", self.bias)));
        }
        if !(0.0..=1.0).contains(&self.path_bias) {
            return Err(Error::BadSpec(format!(
                "path bias {} not in [0, 1]",
                self.path_bias
            )));
        }
        if self.max_degree == Some(0) && self.n > 1 {
            return Err(Error::BadSpec("max degree 0 allows only one node".into()));
        }
        Ok(())
    }
}

/// Random walk from 0 with steps in `{-1, 0, +1}`.
pub fn generate_sequence(n: usize, seed: u64, bias: f64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let up = (1.0 + bias) / 3.0;
    let down = (1.0 - bias) / 3.0;
    let mut y = 0i64;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        if i > 0 {
            let u: f64 = rng.gen();
            y += if u < up {
                1
            } else if u < up + down {
                -1
            } else {
                0
            };
        }
        out.push(y);
    }
    out
}

/// Random rooted tree on `0..n` rooted at 0, each node's parent having a
/// smaller id.
pub fn generate_tree(
    n: usize,
    seed: u64,
    max_degree: Option<usize>,
    path_bias: f64,
) -> Vec<Option<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = max_degree.unwrap_or(usize::MAX);
    let mut parent = Vec::with_capacity(n);
    let mut degree = vec![0usize; n];
    // nodes with spare capacity, plus each node's slot in `open`
    let mut open: Vec<usize> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    if n == 0 {
        return parent;
    }
    parent.push(None);
    if cap > 0 {
        slot[0] = 0;
        open.push(0);
    }
    for v in 1..n {
        let prev_open = slot[v - 1] != usize::MAX;
        let p = if prev_open && path_bias > 0.0 && rng.gen_bool(path_bias) {
            v - 1
        } else {
            open[rng.gen_range(0..open.len())]
        };
        parent.push(Some(p));
        degree[p] += 1;
        if degree[p] == cap {
            let i = slot[p];
            open.swap_remove(i);
            if let Some(&moved) = open.get(i) {
                slot[moved] = i;
            }
            slot[p] = usize::MAX;
        }
        slot[v] = open.len();
        open.push(v);
    }
    parent
}

/// Generates the text file described by `spec`.
pub fn cmd_gen(spec: &GenSpec) -> Result<String> {
    spec.validate()?;
    Ok(match spec.kind {
        GenKind::Sequence => format_sequence(&generate_sequence(spec.n, spec.seed, spec.bias)),
        GenKind::Tree => {
            let parents = generate_tree(spec.n, spec.seed, spec.max_degree, spec.path_bias);
            crate::tree::Tree::from_parents(&parents)
                .expect("generator yields a tree")
                .to_parent_text()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::validate_sequence;
    use crate::text::parse_sequence;
    use crate::tree::parse_parent_array;

    #[test]
    fn deterministic() {
        let spec = GenSpec {
            n: 5,
            seed: 7,
            ..GenSpec::default()
        };
        assert_eq!(cmd_gen(&spec).unwrap(), cmd_gen(&spec).unwrap());
        let other = GenSpec { seed: 8, n: 50, ..spec.clone() };
        assert_ne!(cmd_gen(&other).unwrap(), cmd_gen(&GenSpec { n: 50, ..spec }).unwrap());
    }

    #[test]
    fn single_node_tree() {
        let spec = GenSpec {
            kind: GenKind::Tree,
            n: 1,
            ..GenSpec::default()
        };
        assert_eq!(cmd_gen(&spec).unwrap().trim_end(), "1\n-1");
    }

    #[test]
    fn sequences_validate() {
        for seed in 0..20 {
            for bias in [-1.0, -0.3, 0.0, 0.5, 1.0] {
                let text = cmd_gen(&GenSpec {
                    n: 300,
                    seed,
                    bias,
                    ..GenSpec::default()
                })
                .unwrap();
                let v = parse_sequence(&text).unwrap();
                assert_eq!(v.len(), 300);
                validate_sequence(&v).unwrap();
            }
        }
        let up = generate_sequence(100, 1, 1.0);
        assert!(up.windows(2).all(|w| w[1] >= w[0]));
    }

    #[test]
    fn trees_respect_shape() {
        for seed in 0..20 {
            let spec = GenSpec {
                kind: GenKind::Tree,
                n: 200,
                seed,
                max_degree: Some(2),
                path_bias: 0.3,
                ..GenSpec::default()
            };
            let t = parse_parent_array(&cmd_gen(&spec).unwrap()).unwrap();
            assert_eq!(t.len(), 200);
            assert!((0..200).all(|v| t.children(v).len() <= 2));
        }
        let path = generate_tree(50, 3, None, 1.0);
        assert!(path.iter().enumerate().skip(1).all(|(v, p)| *p == Some(v - 1)));
    }

    #[test]
    fn bad_specs() {
        let bad = [
            GenSpec { n: 0, ..GenSpec::default() },
            GenSpec { bias: 1.5, ..GenSpec::default() },
            GenSpec { path_bias: -0.1, ..GenSpec::default() },
            GenSpec { kind: GenKind::Tree, max_degree: Some(0), ..GenSpec::default() },
        ];
        for spec in bad {
            assert!(matches!(cmd_gen(&spec), Err(Error::BadSpec(_))), "{spec:?}");
        }
    }
}
