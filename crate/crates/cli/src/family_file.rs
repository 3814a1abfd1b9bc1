//! Hand-written set families:
//!
//! ```text
//! c <comment>
//! p family <universe> <count>
//! s <v> <v> ...      one line per element, in index order
//! o <i> <j>          element i precedes element j
//! ```

use anyhow::{bail, Context, Result};
use mwc_core::family::EnumeratedFamily;
use mwc_core::graph::VertexSet;

pub fn parse_family(text: &str) -> Result<EnumeratedFamily> {
    let mut header = None;
    let mut elements = Vec::new();
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        let nums: Vec<usize> = match tag {
            "c" => continue,
            "p" => {
                if toks.next() != Some("family") {
                    bail!("line {line}: expected `p family <universe> <count>`");
                }
                toks.map(str::parse).collect::<Result<_, _>>()
            }
            _ => toks.map(str::parse).collect::<Result<_, _>>(),
        }
        .with_context(|| format!("line {line}: malformed `{}`", raw.trim()))?;
        match (tag, header) {
            ("p", None) => match nums[..] {
                [u, c] => header = Some((u, c)),
                _ => bail!("line {line}: expected `p family <universe> <count>`"),
            },
            ("p", Some(_)) => bail!("line {line}: duplicate header"),
            (_, None) => bail!("line {line}: record before header"),
            ("s", Some((u, _))) => {
                if let Some(&v) = nums.iter().find(|&&v| v >= u) {
                    bail!("line {line}: vertex {v} outside universe {u}");
                }
                elements.push(VertexSet::from_vertices(u, nums));
            }
            ("o", Some(_)) => match nums[..] {
                [i, j] => pairs.push((line, i, j)),
                _ => bail!("line {line}: expected `o <i> <j>`"),
            },
            _ => bail!("line {line}: unknown record `{tag}`"),
        }
    }
    let Some((universe, count)) = header else {
        bail!("missing `p family` header");
    };
    if elements.len() != count {
        bail!(
            "header declares {count} sets but {} were given",
            elements.len()
        );
    }
    if let Some((line, i, j)) = pairs.iter().find(|&&(_, i, j)| i >= count || j >= count) {
        bail!("line {line}: order pair ({i}, {j}) refers to a missing set");
    }
    Ok(EnumeratedFamily::new(
        universe,
        elements,
        pairs.into_iter().map(|(_, i, j)| (i, j)),
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_chain() {
        let fam = parse_family("c chain\np family 4 3\ns 0\ns 1 2\ns 1 3\no 0 1\no 0 2\n").unwrap();
        assert_eq!(fam.len(), 3);
        assert!(fam.lt(0, 2));
        assert!(!fam.lt(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_family("s 0\n").is_err());
        assert!(parse_family("p family 2 1\ns 5\n").is_err());
        assert!(parse_family("p family 2 1\ns 0\no 0 3\n").is_err());
        assert!(parse_family("p family 2 2\ns 0\ns 1\no 0 1\no 1 0\n").is_err());
        assert!(parse_family("p family 2 2\ns 0\n").is_err());
    }
}
