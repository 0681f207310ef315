//! Permutations on `{0..degree}` with 1-based cycle-notation I/O.

use std::fmt;

use super::GroupError;

/// A permutation stored as its image list (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u16>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u16).collect())
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(GroupError::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::NotBijective(format!("{:?}", images)));
            }
        }
        Ok(Permutation(images.into_iter().map(|i| i as u16).collect()))
    }

    /// Builds from 1-based cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(GroupError::PointOutOfRange { point: pt, degree });
                }
                if std::mem::replace(&mut touched[pt - 1], true) {
                    return Err(GroupError::NotBijective(format!("{cycles:?}")));
                }
                let next = cycle[(k + 1) % cycle.len()];
                if next == 0 || next > degree {
                    return Err(GroupError::PointOutOfRange { point: next, degree });
                }
                images[pt - 1] = next - 1;
            }
        }
        Self::from_images(images)
    }

    /// Parses either cycle notation `"(1 2 3)(4 5)"` or a 1-based image list
    /// `"2 3 1 5 4"`. Cycle notation needs `degree`; an image list fixes its own.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self, GroupError> {
        let text = text.trim();
        if text.starts_with('(') || text.is_empty() {
            let cycles = parse_cycles(text)?;
            let max_pt = cycles.iter().flatten().copied().max().unwrap_or(0);
            let deg = degree.unwrap_or(max_pt);
            if max_pt > deg {
                return Err(GroupError::PointOutOfRange {
                    point: max_pt,
                    degree: deg,
                });
            }
            Self::from_cycles(deg, &cycles)
        } else {
            let images = text
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| GroupError::Parse(format!("bad point {t:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(d) = degree {
                if images.len() != d {
                    return Err(GroupError::Parse(format!(
                        "image list has {} entries, expected {d}",
                        images.len()
                    )));
                }
            }
            if images.contains(&0) {
                return Err(GroupError::Parse("image lists are 1-based".into()));
            }
            Self::from_images(images.into_iter().map(|i| i - 1).collect())
        }
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Permutation(inv)
    }

    /// Pads with fixed points up to `degree`.
    pub fn extend(&self, degree: usize) -> Permutation {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u16..degree as u16);
        Permutation(v)
    }

    pub(crate) fn into_inner(self) -> Vec<u16> {
        self.0
    }

    pub(crate) fn from_raw(v: Vec<u16>) -> Self {
        Permutation(v)
    }

    /// Disjoint cycles of length at least 2, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.0[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, GroupError> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| GroupError::Parse(format!("expected '(' in {text:?}")))?;
        let close = open
            .find(')')
            .ok_or_else(|| GroupError::Parse(format!("unclosed cycle in {text:?}")))?;
        let body = &open[..close];
        let pts = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| GroupError::Parse(format!("bad point {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if !pts.is_empty() {
            cycles.push(pts);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}
