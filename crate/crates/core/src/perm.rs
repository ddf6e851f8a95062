//! Permutations on `{0, …, n−1}` and their textual forms.
//!
//! Two input notations are accepted: cycle notation such as `"(0 1)(2 3)"`
//! (the identity is `"()"`) and one-line image arrays such as `"[1, 0, 2]"`.
//! Output is always canonical cycle notation: every cycle starts at its
//! smallest point, cycles are ordered by that point and fixed points are
//! omitted.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParsePermError {
    #[error("unexpected character {found:?} at byte {pos}")]
    Unexpected { found: char, pos: usize },
    #[error("unterminated cycle starting at byte {pos}")]
    Unterminated { pos: usize },
    #[error("point {point} appears more than once")]
    Repeated { point: u32 },
    #[error("image array is not a bijection on 0..{len}")]
    NotBijective { len: usize },
    #[error("empty input")]
    Empty,
    #[error("point {point} does not fit in degree {degree}")]
    TooLarge { point: u32, degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its one-line image array.
    pub fn from_images(images: Vec<u32>) -> Result<Self, ParsePermError> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            match seen.get_mut(x as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(ParsePermError::NotBijective { len: images.len() }),
            }
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Self { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self, ParsePermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                let slot = seen
                    .get_mut(p as usize)
                    .ok_or(ParsePermError::TooLarge { point: p, degree })?;
                if *slot {
                    return Err(ParsePermError::Repeated { point: p });
                }
                *slot = true;
                images[p as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Pads with fixed points up to `degree`.
    pub fn extended(&self, degree: usize) -> Result<Self, ParsePermError> {
        if degree < self.degree() {
            // Shrinking is fine only if the dropped points are fixed.
            if let Some(p) = (degree..self.degree()).find(|&p| self.images[p] != p as u32) {
                return Err(ParsePermError::TooLarge {
                    point: p as u32,
                    degree,
                });
            }
            return Ok(Self {
                images: self.images[..degree].to_vec(),
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Ok(Self { images })
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Self { images }
    }

    pub fn pow(&self, exp: u64) -> Self {
        // Walk each cycle once instead of repeated squaring.
        let n = self.degree();
        let mut images = vec![0u32; n];
        let mut done = vec![false; n];
        let mut cycle = Vec::new();
        for start in 0..n {
            if done[start] {
                continue;
            }
            cycle.clear();
            let mut p = start as u32;
            loop {
                cycle.push(p);
                done[p as usize] = true;
                p = self.images[p as usize];
                if p as usize == start {
                    break;
                }
            }
            let len = cycle.len();
            let shift = (exp % len as u64) as usize;
            for (i, &q) in cycle.iter().enumerate() {
                images[q as usize] = cycle[(i + shift) % len];
            }
        }
        Self { images }
    }

    /// Disjoint cycles of length ≥ 2 in canonical order.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if done[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start as u32;
            while !done[p as usize] {
                done[p as usize] = true;
                cycle.push(p);
                p = self.images[p as usize];
            }
            out.push(cycle);
        }
        out
    }

    /// Lengths of all cycles, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let fixed = self
            .images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 == x)
            .count();
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.extend(std::iter::repeat_n(1, fixed));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = ParsePermError;

    /// Parses cycle notation or an image array. The degree of a cycle-notation
    /// result is one more than the largest point mentioned; use
    /// [`Permutation::extended`] to pad it.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(ParsePermError::Empty);
        }
        if trimmed.starts_with('[') {
            parse_images(s)
        } else {
            parse_cycles(s)
        }
    }
}

fn parse_images(s: &str) -> Result<Permutation, ParsePermError> {
    let open = s.find('[').unwrap();
    let close = s.rfind(']').ok_or(ParsePermError::Unterminated { pos: open })?;
    if let Some((pos, found)) = s[close + 1..].char_indices().find(|(_, c)| !c.is_whitespace()) {
        return Err(ParsePermError::Unexpected {
            found,
            pos: close + 1 + pos,
        });
    }
    let body = &s[open + 1..close];
    let mut images = Vec::new();
    let mut offset = open + 1;
    for tok in body.split(',') {
        let t = tok.trim();
        if !t.is_empty() {
            let lead = tok.len() - tok.trim_start().len();
            images.push(parse_point(t, offset + lead)?);
        }
        offset += tok.len() + 1;
    }
    Permutation::from_images(images)
}

fn parse_point(tok: &str, pos: usize) -> Result<u32, ParsePermError> {
    tok.parse::<u32>().map_err(|_| {
        let (i, found) = tok
            .char_indices()
            .find(|(_, c)| !c.is_ascii_digit())
            .unwrap_or((0, tok.chars().next().unwrap_or(' ')));
        ParsePermError::Unexpected { found, pos: pos + i }
    })
}

fn parse_cycles(s: &str) -> Result<Permutation, ParsePermError> {
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut chars = s.char_indices().peekable();
    let mut max_point = None::<u32>;
    while let Some((pos, c)) = chars.next() {
        match c {
            c if c.is_whitespace() => {}
            '(' => {
                let mut cycle = Vec::new();
                let mut num = String::new();
                let mut num_start = 0;
                let mut closed = false;
                for (p, c) in chars.by_ref() {
                    match c {
                        '0'..='9' => {
                            if num.is_empty() {
                                num_start = p;
                            }
                            num.push(c);
                        }
                        ' ' | ',' | '\t' | ')' => {
                            if !num.is_empty() {
                                cycle.push(parse_point(&num, num_start)?);
                                num.clear();
                            }
                            if c == ')' {
                                closed = true;
                                break;
                            }
                        }
                        other => return Err(ParsePermError::Unexpected { found: other, pos: p }),
                    }
                }
                if !closed {
                    return Err(ParsePermError::Unterminated { pos });
                }
                for &p in &cycle {
                    max_point = Some(max_point.map_or(p, |m| m.max(p)));
                }
                cycles.push(cycle);
            }
            other => return Err(ParsePermError::Unexpected { found: other, pos }),
        }
    }
    let degree = max_point.map_or(0, |m| m as usize + 1);
    Permutation::from_cycles(degree, &cycles)
}
