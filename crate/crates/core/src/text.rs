//! Sequence text format: an optional count `n` on its own first line, then
//! whitespace-separated signed decimal integers.
//!
//! The first line is taken as the count only when it holds exactly one
//! token and that token equals the number of tokens that follow.

use crate::error::{Error, Result};

pub fn parse_sequence(text: &str) -> Result<Vec<i64>> {
    let first_line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let header_like = first_line.split_whitespace().count() == 1;
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let values = tokens
        .iter()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect::<Result<Vec<i64>>>()?;
    if header_like && values.len() >= 2 && values[0] == (values.len() - 1) as i64 {
        return Ok(values[1..].to_vec());
    }
    Ok(values)
}

/// Writes `n` on the first line and the values on the second.
pub fn format_sequence(values: &[i64]) -> String {
    let mut out = format!("{}\n", values.len());
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    out.push_str(&parts.join(" "));
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn with_header() {
        assert_eq!(parse_sequence("4\n0 1 2 1\n").unwrap(), vec![0, 1, 2, 1]);
        assert_eq!(parse_sequence("1\n-7").unwrap(), vec![-7]);
    }

    #[test]
    fn without_header() {
        assert_eq!(parse_sequence("0 1 2 1").unwrap(), vec![0, 1, 2, 1]);
        // "2 1 1" on one line is three values, not a count
        assert_eq!(parse_sequence("2 1 1").unwrap(), vec![2, 1, 1]);
        assert_eq!(parse_sequence("3\n2\n1").unwrap(), vec![3, 2, 1]);
        assert_eq!(parse_sequence("").unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn bad_token() {
        assert!(matches!(parse_sequence("3\n1 a 2"), Err(Error::Parse(_))));
    }

    #[test]
    fn round_trip() {
        let v = vec![-1, 0, 0, 1, 2, 1];
        assert_eq!(parse_sequence(&format_sequence(&v)).unwrap(), v);
        let v = vec![1];
        assert_eq!(parse_sequence(&format_sequence(&v)).unwrap(), v);
    }
}
