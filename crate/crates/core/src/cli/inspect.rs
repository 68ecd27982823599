use std::fmt::Write;

use crate::error::{Error, Result};
use crate::fl::{Kappa, OneLevel};
use crate::seq::DiffSequence;
use crate::space::SpaceReport;
use crate::valley::weights;

pub const INSPECT_LIMIT: usize = 10_000;

fn join<I: IntoIterator<Item = D>, D: std::fmt::Display>(items: I) -> String {
    items
        .into_iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Text dump of the build quantities: valleys, weights, jumps and ladders.
pub fn cmd_inspect(values: &[i64], kappa: Kappa) -> Result<String> {
    if values.len() > INSPECT_LIMIT {
        return Err(Error::TooLargeForInspect(values.len()));
    }
    let fl = OneLevel::build(DiffSequence::new(values.to_vec())?, kappa);
    let valley = fl.valleys();
    let weight = weights(&valley);
    let space = SpaceReport::of(&fl);

    let mut out = String::new();
    writeln!(
        out,
        "n: {}  kappa: {}  kappa_prime: {}  y_min: {}  y_max: {}",
        fl.len(),
        kappa,
        fl.kappa_prime(),
        fl.y_min(),
        fl.y_max()
    )
    .unwrap();
    writeln!(out, "Values: {}", join(values)).unwrap();
    writeln!(out, "Valley: {}", join(&valley)).unwrap();
    writeln!(out, "Weight: {}", join(&weight)).unwrap();
    writeln!(out, "Jump: {}", join(fl.jump())).unwrap();
    writeln!(out, "LadderHeight: {}", join(fl.ladder_heights())).unwrap();
    writeln!(out, "Ladders:").unwrap();
    for x in 0..fl.len() {
        let ladder = fl.ladder(x);
        if ladder.is_empty() {
            writeln!(out, "  L_{x}: empty").unwrap();
        } else {
            writeln!(
                out,
                "  L_{x} [{}..{}]: {}",
                values[x] + 1,
                values[x] + ladder.len() as i64,
                join(ladder)
            )
            .unwrap();
        }
    }
    writeln!(
        out,
        "Entries: jump {} ladders {} (interior {}, bound {})",
        space.jump_entries, space.total_ladder_entries, space.interior_ladder_entries, space.bound
    )
    .unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_dump() {
        let out = cmd_inspect(&[1, 0, 1, 2, 1, 2], Kappa::DEFAULT).unwrap();
        assert!(out.contains("Jump: 0 5 5 5 5 5\n"));
        assert!(out.contains("Valley: 0 1 1 1 4 4 5\n"));
        assert!(out.contains("Weight: 1 3 0 0 2 0\n"));
        assert!(out.contains("LadderHeight: 1 2 1 0 1 0\n"));
        assert!(out.contains("  L_1 [1..2]: 2 3\n"));
        assert!(out.contains("  L_3: empty\n"));
    }

    #[test]
    fn tiny_dumps() {
        assert!(cmd_inspect(&[0], Kappa::DEFAULT).unwrap().contains("Valley: 0 0\n"));
        assert!(cmd_inspect(&[0, 1, 2], Kappa::DEFAULT)
            .unwrap()
            .contains("Valley: 0 0 0 2\n"));
    }

    #[test]
    fn size_guard() {
        let v = vec![0i64; INSPECT_LIMIT + 1];
        assert_eq!(
            cmd_inspect(&v, Kappa::DEFAULT),
            Err(Error::TooLargeForInspect(INSPECT_LIMIT + 1))
        );
    }
}
