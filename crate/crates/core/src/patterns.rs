//! Closed and open link patterns, their enumeration and indexing.

use crate::error::{usage, Error, Result};
use std::collections::HashMap;
use std::fmt;

/// Marker for a point connected to infinity by a half-line.
pub const OPEN: i32 = -1;

/// A planar pairing of points 0..r, each either paired or open.
///
/// Open points may not sit under a closed arch. Ordering is lexicographic on the
/// partner sequence with `OPEN` smallest.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    p: Vec<i32>,
}

impl Pattern {
    /// Validates an explicit partner array (0-based, `OPEN` = −1).
    pub fn from_partners(p: Vec<i32>) -> Result<Self> {
        let n = p.len() as i32;
        let mut stack: Vec<i32> = Vec::new();
        for (i, &j) in p.iter().enumerate() {
            let i = i as i32;
            if j == OPEN {
                if !stack.is_empty() {
                    return Err(Error::Parse(format!("open point {i} under a closed arch")));
                }
            } else if j < 0 || j >= n || j == i || p[j as usize] != i {
                return Err(Error::Parse(format!("partner array is not an involution at {i}")));
            } else if j > i {
                stack.push(i);
            } else if stack.pop() != Some(j) {
                return Err(Error::Parse(format!("arches cross at {i}")));
            }
        }
        Ok(Pattern { p })
    }

    /// Parses the text form, e.g. `"(())."`.
    pub fn parse(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.trim().chars().collect();
        let mut p = vec![OPEN; chars.len()];
        let mut stack = Vec::new();
        for (i, c) in chars.iter().enumerate() {
            match c {
                '(' => stack.push(i),
                ')' => {
                    let j = stack.pop().ok_or_else(|| Error::Parse(format!("unmatched ')' at {i}")))?;
                    p[i] = j as i32;
                    p[j] = i as i32;
                }
                '.' if stack.is_empty() => {}
                '.' => return Err(Error::Parse(format!("open point {i} under a closed arch"))),
                _ => return Err(Error::Parse(format!("unexpected character {c:?}"))),
            }
        }
        if !stack.is_empty() {
            return Err(Error::Parse("unmatched '('".into()));
        }
        Ok(Pattern { p })
    }

    /// All points paired by arches i ↔ N−1−i.
    pub fn rainbow(n_points: usize) -> Self {
        Pattern { p: (0..n_points).map(|i| (n_points - 1 - i) as i32).collect() }
    }

    pub fn all_open(r: usize) -> Self {
        Pattern { p: vec![OPEN; r] }
    }

    pub fn partners(&self) -> &[i32] {
        &self.p
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.p.iter().all(|&j| j != OPEN)
    }

    pub fn partner(&self, i: usize) -> Option<usize> {
        (self.p[i] != OPEN).then_some(self.p[i] as usize)
    }

    pub fn is_open(&self, i: usize) -> bool {
        self.p[i] == OPEN
    }

    pub fn opens(&self) -> Vec<usize> {
        (0..self.p.len()).filter(|&i| self.p[i] == OPEN).collect()
    }

    /// True if points i and i+1 form a little arch.
    pub fn has_little_arch(&self, i: usize) -> bool {
        self.p[i] == i as i32 + 1
    }

    pub fn text(&self) -> String {
        self.p
            .iter()
            .enumerate()
            .map(|(i, &j)| match j {
                OPEN => '.',
                j if j > i as i32 => '(',
                _ => ')',
            })
            .collect()
    }

    /// Relabels endpoints i ↦ i+1 mod N.
    pub fn rotate(&self) -> Result<Self> {
        if !self.is_closed() {
            return usage("rotation needs a closed pattern");
        }
        let n = self.p.len();
        let mut q = vec![0; n];
        for i in 0..n {
            q[(i + 1) % n] = ((self.p[i] as usize + 1) % n) as i32;
        }
        Ok(Pattern { p: q })
    }

    /// Drops point `i`, which must be open.
    pub fn remove_open(&self, i: usize) -> Result<Self> {
        if !self.is_open(i) {
            return usage("removed point must be open");
        }
        let q = (0..self.p.len())
            .filter(|&k| k != i)
            .map(|k| match self.p[k] {
                OPEN => OPEN,
                j if (j as usize) > i => j - 1,
                j => j,
            })
            .collect();
        Pattern::from_partners(q)
    }

    pub(crate) fn set_pair(&mut self, a: usize, b: usize) {
        self.p[a] = b as i32;
        self.p[b] = a as i32;
    }

    pub(crate) fn set_open(&mut self, a: usize) {
        self.p[a] = OPEN;
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({})", self.text())
    }
}

/// Deterministically ordered basis of patterns.
#[derive(Clone, Debug)]
pub struct PatternIndex {
    patterns: Vec<Pattern>,
    pos: HashMap<Pattern, usize>,
}

impl PatternIndex {
    pub fn new(mut patterns: Vec<Pattern>) -> Self {
        patterns.sort();
        patterns.dedup();
        let pos = patterns.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        PatternIndex { patterns, pos }
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn get(&self, p: &Pattern) -> Option<usize> {
        self.pos.get(p).copied()
    }

    pub fn pattern(&self, i: usize) -> &Pattern {
        &self.patterns[i]
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn iter(&self) -> impl Iterator<Item = &Pattern> {
        self.patterns.iter()
    }

    /// Number of points per pattern.
    pub fn size(&self) -> usize {
        self.patterns.first().map_or(0, Pattern::len)
    }
}

fn extend(prefix: &mut Vec<i32>, stack: &mut Vec<usize>, r: usize, allow_open: bool, out: &mut Vec<Pattern>) {
    let i = prefix.len();
    if i == r {
        if stack.is_empty() {
            out.push(Pattern { p: prefix.clone() });
        }
        return;
    }
    if allow_open && stack.is_empty() {
        prefix.push(OPEN);
        extend(prefix, stack, r, allow_open, out);
        prefix.pop();
    }
    if let Some(&j) = stack.last() {
        stack.pop();
        prefix[j] = i as i32;
        prefix.push(j as i32);
        extend(prefix, stack, r, allow_open, out);
        prefix.pop();
        prefix[j] = OPEN;
        stack.push(j);
    }
    if stack.len() + 1 < r - i {
        stack.push(i);
        prefix.push(OPEN);
        extend(prefix, stack, r, allow_open, out);
        prefix.pop();
        stack.pop();
    }
}

/// All non-crossing perfect matchings of 2n points.
pub fn enumerate_closed(n: usize) -> PatternIndex {
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut Vec::new(), 2 * n, false, &mut out);
    PatternIndex::new(out)
}

/// All open link patterns on r points.
pub fn enumerate_open(r: usize) -> PatternIndex {
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut Vec::new(), r, true, &mut out);
    PatternIndex::new(out)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// (2n)!/(n!(n+1)!)
pub fn catalan(n: u64) -> u64 {
    binomial(2 * n, n) / (n + 1)
}

/// C(r, ⌊(r+1)/2⌋)
pub fn open_count(r: u64) -> u64 {
    binomial(r, r.div_ceil(2))
}

/// Two-row standard tableau to link pattern: first-row labels open arches,
/// second-row labels close the nearest unmatched opening. Labels are 1-based.
pub fn syt_to_linkpattern(top: &[usize], bottom: &[usize]) -> Result<Pattern> {
    let n = top.len();
    if bottom.len() != n {
        return usage("tableau rows must have equal length");
    }
    let mut seen = vec![false; 2 * n + 1];
    for &x in top.iter().chain(bottom) {
        if x == 0 || x > 2 * n || seen[x] {
            return usage("tableau labels must be a permutation of 1..2n");
        }
        seen[x] = true;
    }
    let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
    if !increasing(top) || !increasing(bottom) || top.iter().zip(bottom).any(|(a, b)| a >= b) {
        return usage("tableau is not standard");
    }
    let mut is_top = vec![false; 2 * n + 1];
    for &x in top {
        is_top[x] = true;
    }
    let mut p = vec![OPEN; 2 * n];
    let mut stack = Vec::new();
    for x in 1..=2 * n {
        if is_top[x] {
            stack.push(x - 1);
        } else {
            let j = stack.pop().ok_or_else(|| Error::Usage("closing without opening".into()))?;
            p[x - 1] = j as i32;
            p[j] = (x - 1) as i32;
        }
    }
    Pattern::from_partners(p)
}

/// Pairing convention for open half-lines in the D representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// (o₁,o₂), (o₃,o₄), …; an odd count leaves the last open residual.
    Left,
    /// Pairs taken from the right end; an odd count leaves the first open residual.
    Right,
}

/// What a point is connected to in the colored picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strand {
    Solid(usize),
    Dashed(usize),
    Residual,
}

/// Open half-lines joined by pairs into dashed arches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colored {
    pub strands: Vec<Strand>,
}

impl Colored {
    pub fn residual(&self) -> Option<usize> {
        self.strands.iter().position(|s| *s == Strand::Residual)
    }

    pub fn dashed_partner(&self, i: usize) -> Option<usize> {
        match self.strands[i] {
            Strand::Dashed(j) => Some(j),
            _ => None,
        }
    }
}

pub fn pair_open_arches(p: &Pattern, pairing: Pairing) -> Colored {
    let mut strands: Vec<Strand> = p
        .partners()
        .iter()
        .map(|&j| if j == OPEN { Strand::Residual } else { Strand::Solid(j as usize) })
        .collect();
    let opens = p.opens();
    let pairs: Vec<(usize, usize)> = match pairing {
        Pairing::Left => opens.chunks_exact(2).map(|c| (c[0], c[1])).collect(),
        Pairing::Right => opens.rchunks_exact(2).map(|c| (c[0], c[1])).collect(),
    };
    for (a, b) in pairs {
        strands[a] = Strand::Dashed(b);
        strands[b] = Strand::Dashed(a);
    }
    Colored { strands }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for s in ["(())..", "()", "...", "(()())", ".()"] {
            assert_eq!(Pattern::parse(s).unwrap().text(), s);
        }
        assert!(Pattern::parse("(.)").is_err());
        assert!(Pattern::parse("(()").is_err());
        assert!(Pattern::parse("())").is_err());
        assert!(Pattern::parse("a").is_err());
    }

    #[test]
    fn partner_validation() {
        assert!(Pattern::from_partners(vec![2, 3, 0, 1]).is_err());
        assert!(Pattern::from_partners(vec![1, 0, OPEN]).is_ok());
        assert!(Pattern::from_partners(vec![2, OPEN, 0]).is_err());
        assert!(Pattern::from_partners(vec![0]).is_err());
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_closed(1).len(), 1);
        assert_eq!(enumerate_closed(3).len(), 5);
        assert_eq!(enumerate_open(3).len(), 3);
        assert_eq!(enumerate_open(5).len(), 10);
        assert_eq!(enumerate_open(4).len(), 6);
    }

    #[test]
    fn open_sorts_first() {
        let idx = enumerate_open(3);
        let names: Vec<String> = idx.iter().map(Pattern::text).collect();
        assert_eq!(names, ["...", ".()", "()."]);
    }

    #[test]
    fn rotation() {
        let p = Pattern::parse("()()").unwrap();
        let r = p.rotate().unwrap();
        assert_eq!(r.partners(), &[3, 2, 1, 0]);
        let mut x = p.clone();
        for _ in 0..4 {
            x = x.rotate().unwrap();
        }
        assert_eq!(x, p);
        assert!(Pattern::parse("..").unwrap().rotate().is_err());
    }

    #[test]
    fn syt_examples() {
        assert_eq!(syt_to_linkpattern(&[1, 2], &[3, 4]).unwrap().text(), "(())");
        assert_eq!(syt_to_linkpattern(&[1, 3], &[2, 4]).unwrap().text(), "()()");
        assert_eq!(syt_to_linkpattern(&[1], &[2]).unwrap().text(), "()");
        assert!(syt_to_linkpattern(&[2], &[1]).is_err());
        assert!(syt_to_linkpattern(&[1, 4], &[2, 3]).is_err());
    }

    #[test]
    fn colored_pairings() {
        let one = pair_open_arches(&Pattern::parse("().").unwrap(), Pairing::Right);
        assert_eq!(one.residual(), Some(2));
        let p = Pattern::parse("..()." ).unwrap();
        let r = pair_open_arches(&p, Pairing::Right);
        assert_eq!(r.dashed_partner(4), Some(1));
        assert_eq!(r.residual(), Some(0));
        let l = pair_open_arches(&p, Pairing::Left);
        assert_eq!(l.dashed_partner(0), Some(1));
        assert_eq!(l.residual(), Some(4));
    }

    #[test]
    fn remove_open_point() {
        let p = Pattern::parse(".().").unwrap();
        assert_eq!(p.remove_open(0).unwrap().text(), "().");
        assert!(p.remove_open(1).is_err());
    }
}
