//! The `.hg` text format.
//!
//! Line 1 is `n r m`; the following `m` data lines each hold `r`
//! space-separated zero-based vertex ids in increasing order. Lines
//! starting with `#` are comments. Writers emit edges in lexicographic
//! order, so files are byte-stable for a given hypergraph. A partitioned
//! hypergraph carries one sidecar comment `#parts s1 s2 ...` giving the
//! sizes of its consecutive vertex blocks.

use std::io::{BufRead, Write};

use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphBuilder};

#[derive(Debug, Error)]
pub enum HgError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: edge vertices must be strictly increasing")]
    NotIncreasing { line: usize },
    #[error("line {line}: duplicate edge")]
    DuplicateEdge { line: usize },
    #[error("expected {expected} edges, file has {got}")]
    EdgeCountMismatch { expected: usize, got: usize },
    #[error("#parts sizes sum to {sum}, vertex count is {n}")]
    PartsMismatch { sum: u64, n: u32 },
}

/// A parsed `.hg` file: the hypergraph plus the `#parts` sidecar if present.
#[derive(Debug, Clone)]
pub struct ParsedHg {
    pub hypergraph: Hypergraph,
    pub part_sizes: Option<Vec<u64>>,
}

pub fn read_hg<R: BufRead>(reader: R) -> Result<ParsedHg, HgError> {
    let mut header: Option<(u32, u32, usize)> = None;
    let mut part_sizes: Option<Vec<u64>> = None;
    let mut builder: Option<HypergraphBuilder> = None;
    let mut seen = 0usize;

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            let rest = rest.trim_start();
            if let Some(sizes) = rest.strip_prefix("parts") {
                let parsed: Result<Vec<u64>, _> =
                    sizes.split_whitespace().map(str::parse::<u64>).collect();
                match parsed {
                    Ok(v) => part_sizes = Some(v),
                    Err(_) => {
                        return Err(HgError::Malformed {
                            line: lineno,
                            msg: "unreadable #parts sizes".into(),
                        })
                    }
                }
            }
            continue;
        }
        match header {
            None => {
                let fields: Vec<&str> = trimmed.split_whitespace().collect();
                if fields.len() != 3 {
                    return Err(HgError::Malformed {
                        line: lineno,
                        msg: format!("header needs `n r m`, got {} fields", fields.len()),
                    });
                }
                let n: u32 = parse_field(fields[0], lineno, "n")?;
                let r: u32 = parse_field(fields[1], lineno, "r")?;
                let m: usize = parse_field(fields[2], lineno, "m")?;
                if r == 0 {
                    return Err(HgError::Malformed {
                        line: lineno,
                        msg: "r must be positive".into(),
                    });
                }
                builder = Some(
                    HypergraphBuilder::new(n, r).map_err(|e| HgError::Malformed {
                        line: lineno,
                        msg: e.to_string(),
                    })?,
                );
                header = Some((n, r, m));
            }
            Some((_, r, _)) => {
                let vs: Result<Vec<u32>, _> =
                    trimmed.split_whitespace().map(str::parse::<u32>).collect();
                let vs = vs.map_err(|_| HgError::Malformed {
                    line: lineno,
                    msg: "unreadable vertex id".into(),
                })?;
                if vs.len() != r as usize {
                    return Err(HgError::Malformed {
                        line: lineno,
                        msg: format!("edge has {} vertices, r = {}", vs.len(), r),
                    });
                }
                if vs.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(HgError::NotIncreasing { line: lineno });
                }
                let fresh = builder
                    .as_mut()
                    .expect("header parsed")
                    .add_edge(&vs)
                    .map_err(|e| HgError::Malformed {
                        line: lineno,
                        msg: e.to_string(),
                    })?;
                if !fresh {
                    return Err(HgError::DuplicateEdge { line: lineno });
                }
                seen += 1;
            }
        }
    }

    let (n, _, m) = header.ok_or(HgError::Malformed {
        line: 1,
        msg: "empty file".into(),
    })?;
    if seen != m {
        return Err(HgError::EdgeCountMismatch {
            expected: m,
            got: seen,
        });
    }
    if let Some(sizes) = &part_sizes {
        let sum: u64 = sizes.iter().sum();
        if sum != n as u64 {
            return Err(HgError::PartsMismatch { sum, n });
        }
    }
    Ok(ParsedHg {
        hypergraph: builder.expect("header parsed").build(),
        part_sizes,
    })
}

pub fn read_hg_str(s: &str) -> Result<ParsedHg, HgError> {
    read_hg(s.as_bytes())
}

pub fn write_hg<W: Write>(
    w: &mut W,
    h: &Hypergraph,
    part_sizes: Option<&[u64]>,
) -> Result<(), HgError> {
    writeln!(w, "{} {} {}", h.n(), h.r(), h.edge_count())?;
    if let Some(sizes) = part_sizes {
        let rendered: Vec<String> = sizes.iter().map(u64::to_string).collect();
        writeln!(w, "#parts {}", rendered.join(" "))?;
    }
    for e in h.edges() {
        let rendered: Vec<String> = e.vertices().iter().map(u32::to_string).collect();
        writeln!(w, "{}", rendered.join(" "))?;
    }
    Ok(())
}

pub fn write_hg_string(h: &Hypergraph, part_sizes: Option<&[u64]>) -> String {
    let mut buf = Vec::new();
    write_hg(&mut buf, h, part_sizes).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("hg output is ascii")
}

fn parse_field<T: std::str::FromStr>(s: &str, line: usize, what: &str) -> Result<T, HgError> {
    s.parse::<T>().map_err(|_| HgError::Malformed {
        line,
        msg: format!("unreadable {what}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn fano_round_trips_byte_exact() {
        let fano = constructions::fano_plane();
        let text = write_hg_string(&fano, None);
        let expected = "7 3 7\n0 1 2\n0 3 6\n0 4 5\n1 3 5\n1 4 6\n2 3 4\n2 5 6\n";
        assert_eq!(text, expected);
        let back = read_hg_str(&text).unwrap();
        assert_eq!(back.hypergraph, fano);
        assert!(back.part_sizes.is_none());
    }

    #[test]
    fn parts_sidecar_round_trips() {
        let g = constructions::main_extremal(7, 3, 1, 3).unwrap();
        let sizes: Vec<u64> = g.parts.iter().map(|p| p.len() as u64).collect();
        let text = write_hg_string(&g.hypergraph, Some(&sizes));
        assert!(text.lines().nth(1).unwrap().starts_with("#parts 1 3 3"));
        let back = read_hg_str(&text).unwrap();
        assert_eq!(back.part_sizes.as_deref(), Some(&sizes[..]));
        assert_eq!(back.hypergraph, g.hypergraph);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = read_hg_str("3 2 1\n0 0\n").unwrap_err();
        assert!(matches!(err, HgError::NotIncreasing { line: 2 }));

        let err = read_hg_str("3 2 2\n0 1\n0 1\n").unwrap_err();
        assert!(matches!(err, HgError::DuplicateEdge { line: 3 }));

        let err = read_hg_str("3 2 2\n0 1\n").unwrap_err();
        assert!(matches!(
            err,
            HgError::EdgeCountMismatch {
                expected: 2,
                got: 1
            }
        ));

        let err = read_hg_str("3 2\n").unwrap_err();
        assert!(matches!(err, HgError::Malformed { line: 1, .. }));

        let err = read_hg_str("4 2 1\n#parts 1 2\n0 1\n").unwrap_err();
        assert!(matches!(err, HgError::PartsMismatch { sum: 3, n: 4 }));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let parsed = read_hg_str("# a file\n\n3 3 1\n# inner note\n0 1 2\n").unwrap();
        assert_eq!(parsed.hypergraph.edge_count(), 1);
    }
}
