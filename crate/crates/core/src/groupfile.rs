//! Text format for permutation groups:
//!
//! ```text
//! # comment
//! degree 5
//! (1,2,3,4,5)
//! (1,2,3)
//! ```
//!
//! Points are 1-indexed; `()` is the identity.

use std::path::Path;

use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::perm::{parse_cycle_line, Permutation};

/// Parses group file text into a degree and generator list (identities kept).
pub fn parse_generators(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        match degree {
            None => {
                let rest = trimmed.strip_prefix("degree").ok_or(Error::MissingDegree)?;
                let column = raw.find("degree").unwrap_or(0) + "degree".len() + 1;
                let n: usize = rest.trim().parse().map_err(|_| Error::Parse {
                    line: line_no,
                    column,
                    message: "expected a positive integer after `degree`".into(),
                })?;
                if n == 0 {
                    return Err(Error::Parse {
                        line: line_no,
                        column,
                        message: "degree must be positive".into(),
                    });
                }
                degree = Some(n);
            }
            Some(n) => {
                // Report columns relative to the raw line.
                let offset = content.len() - content.trim_start().len();
                let perm = parse_cycle_line(trimmed, n, line_no).map_err(|e| match e {
                    Error::Parse { line, column, message } => Error::Parse {
                        line,
                        column: column + offset,
                        message,
                    },
                    other => other,
                })?;
                gens.push(perm);
            }
        }
    }
    let degree = degree.ok_or(Error::MissingDegree)?;
    Ok((degree, gens))
}

/// Parses group file text. A file whose generators are all trivial (or absent)
/// gives the trivial group.
pub fn parse_group(text: &str) -> Result<GroupHandle> {
    let (degree, gens) = parse_generators(text)?;
    if gens.iter().all(|g| g.is_identity()) {
        return Ok(GroupHandle::trivial(degree));
    }
    GroupHandle::new(degree, gens)
}

pub fn read_group_file(path: impl AsRef<Path>) -> Result<GroupHandle> {
    let text = std::fs::read_to_string(path)?;
    parse_group(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn a5_file() {
        let g = parse_group("degree 5\n(1,2,3,4,5)\n(1,2,3)\n").unwrap();
        assert_eq!(g.order(), BigUint::from(60u32));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_group("# A5\n\ndegree 5  # natural\n(1,2,3,4,5) # c\n\n(1, 2, 3)\n").unwrap();
        assert_eq!(g.order(), BigUint::from(60u32));
    }

    #[test]
    fn out_of_range_point() {
        assert!(matches!(
            parse_group("degree 5\n(1,6)\n"),
            Err(Error::PointOutOfRange {
                point: 6,
                degree: 5,
                line: 2
            })
        ));
    }

    #[test]
    fn trivial_group() {
        let g = parse_group("degree 3\n()\n").unwrap();
        assert_eq!(g.degree(), 3);
        assert_eq!(g.order(), BigUint::from(1u32));
    }

    #[test]
    fn missing_degree() {
        assert!(matches!(parse_group("(1,2)\n"), Err(Error::MissingDegree)));
        assert!(matches!(parse_group(""), Err(Error::MissingDegree)));
    }

    #[test]
    fn malformed_cycle_reports_position() {
        match parse_group("degree 4\n  (1,2;3)\n") {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 7);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip() {
        let g = parse_group("degree 6\n(1,2)(3,4,5)\n(2,6)\n").unwrap();
        let h = parse_group(&g.to_group_file()).unwrap();
        assert_eq!(g.generators(), h.generators());
    }
}
