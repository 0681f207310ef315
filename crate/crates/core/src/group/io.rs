//! Text formats for groups.
//!
//! Permutation files list one generator per line, as cycles `(1 2 3)(4 5)`
//! or as a 1-based image list `2 3 1 5 4`. Blank lines and `#` comments are
//! ignored. An optional `degree N` line fixes the degree; otherwise it is
//! the largest point mentioned. Cayley files hold `N` on the first line
//! followed by `N` rows of `N` 1-based indices.

use std::path::Path;

use super::{Group, GroupError, Permutation};

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

/// Generator lines of a permutation file and the degree they act on.
pub fn parse_generators(text: &str) -> Result<(usize, Vec<Permutation>), GroupError> {
    let mut declared = None;
    let mut raw = Vec::new();
    for line in content_lines(text) {
        if let Some(rest) = line.strip_prefix("degree") {
            let d = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| GroupError::Parse(format!("bad degree line {line:?}")))?;
            declared = Some(d);
        } else {
            raw.push(line);
        }
    }
    let mut degree = declared.unwrap_or(0);
    if declared.is_none() {
        for line in &raw {
            degree = degree.max(Permutation::parse(line, None)?.degree());
        }
    }
    let gens = raw
        .iter()
        .map(|line| {
            let p = Permutation::parse(line, None)?;
            if line.starts_with('(') {
                if p.degree() > degree {
                    return Err(GroupError::PointOutOfRange {
                        point: p.degree(),
                        degree,
                    });
                }
                Ok(p.extend(degree))
            } else if p.degree() != degree {
                Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: p.degree(),
                })
            } else {
                Ok(p)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((degree.max(1), gens.into_iter().map(|g| g.extend(degree.max(1))).collect()))
}

pub fn parse_permutation_group(text: &str) -> Result<Group, GroupError> {
    let (degree, gens) = parse_generators(text)?;
    Group::from_permutations(degree, &gens)
}

/// Parses a Cayley file into 0-based rows.
pub fn parse_cayley_rows(text: &str) -> Result<Vec<Vec<usize>>, GroupError> {
    let mut lines = content_lines(text);
    let n: usize = lines
        .next()
        .ok_or_else(|| GroupError::Parse("empty Cayley file".into()))?
        .parse()
        .map_err(|_| GroupError::Parse("first line must be the order N".into()))?;
    let mut rows = Vec::with_capacity(n);
    for line in lines {
        let row = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(GroupError::Parse(format!("bad table entry {t:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(GroupError::MalformedTable(format!(
            "expected {n} rows, found {}",
            rows.len()
        )));
    }
    Ok(rows)
}

pub fn parse_cayley_group(text: &str) -> Result<Group, GroupError> {
    Group::from_cayley_table(&parse_cayley_rows(text)?)
}

/// Loads a group file, detecting the format: a lone integer on the first
/// content line means a Cayley table.
pub fn load_group(path: &Path) -> Result<Group, GroupError> {
    let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io(format!("{}: {e}", path.display())))?;
    parse_group(&text)
}

pub fn parse_group(text: &str) -> Result<Group, GroupError> {
    let first = content_lines(text).next().unwrap_or("");
    let rest_count = content_lines(text).count();
    if first.parse::<usize>().is_ok() && rest_count > 1 && !first.contains(' ') {
        parse_cayley_group(text)
    } else {
        parse_permutation_group(text)
    }
}
