//! Independent counts: ASM product formula, symmetry-class determinants and brute force.

use crate::error::{usage, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

/// Number of n×n alternating sign matrices, ∏_{k<n} (3k+1)!/(n+k)!.
pub fn asm_count(n: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..n {
        num *= factorial(3 * k + 1);
        den *= factorial(n + k);
    }
    num / den
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

/// C(a, b), zero unless 0 ≤ b ≤ a.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut r = BigInt::one();
    for k in 0..b {
        r = r * (a - k) / (k + 1);
    }
    r
}

/// Fraction-free Gaussian elimination.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    /// A_V(2n)
    AVEven,
    /// A_V(2n+1)
    AVOdd,
    /// A_HT(2n)
    AHTEven,
    /// A_HT(2n+1)
    AHTOdd,
    /// A(n)²
    Csscpp,
    /// A(n)A(n+1)
    AMixed,
    /// A_V(N) dispatched on the parity of N.
    AV,
    /// A_HT(N) dispatched on the parity of N.
    AHT,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::A,
        Family::AVEven,
        Family::AVOdd,
        Family::AHTEven,
        Family::AHTOdd,
        Family::Csscpp,
        Family::AMixed,
        Family::AV,
        Family::AHT,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::AVEven => "A_V_even",
            Family::AVOdd => "A_V_odd",
            Family::AHTEven => "A_HT_even",
            Family::AHTOdd => "A_HT_odd",
            Family::Csscpp => "CSSCPP",
            Family::AMixed => "A_mixed",
            Family::AV => "A_V",
            Family::AHT => "A_HT",
        }
    }

    /// Matrix entry (i, j) for the determinant families.
    fn entry(self, i: i64, j: i64) -> Option<BigInt> {
        Some(match self {
            Family::AVEven => binom(i + j, 2 * i - j),
            Family::AVOdd => binom(i + j + 1, 2 * i - j),
            Family::Csscpp => binom(i + j, 2 * i - j - 1) + binom(i + j + 1, 2 * i - j),
            Family::AMixed => binom(i + j + 1, 2 * i - j) + binom(i + j + 2, 2 * i - j),
            Family::AHTEven => binom(i + j, 2 * i - j) + binom(i + j + 1, 2 * i - j),
            Family::AHTOdd => binom(i + j + 1, 2 * i - j) + binom(i + j + 2, 2 * i - j + 1),
            Family::A | Family::AV | Family::AHT => return None,
        })
    }
}

impl FromStr for Family {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL.into_iter().find(|f| f.name() == s).map_or_else(|| usage(format!("unknown family {s:?}")), Ok)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Determinant of the n×n matrix of a family, indices 0..n−1.
pub fn det_count(family: Family, n: usize) -> Result<BigInt> {
    if family.entry(0, 0).is_none() {
        return usage(format!("{family} has no determinant formula"));
    }
    let m = (0..n as i64).map(|i| (0..n as i64).map(|j| family.entry(i, j).unwrap()).collect()).collect();
    Ok(det_bareiss(m))
}

/// Any family at size n; A_V and A_HT take the matrix size N.
pub fn count(family: Family, n: usize) -> Result<BigInt> {
    match family {
        Family::A => Ok(asm_count(n)),
        Family::AV if n % 2 == 1 => det_count(Family::AVOdd, n / 2),
        Family::AV => det_count(Family::AVEven, n / 2),
        Family::AHT if n % 2 == 1 => det_count(Family::AHTOdd, n / 2),
        Family::AHT => det_count(Family::AHTEven, n / 2),
        f => det_count(f, n),
    }
}

/// A(⌊r/2⌋)A(⌈r/2⌉).
pub fn mixed_product(r: usize) -> BigInt {
    asm_count(r / 2) * asm_count(r.div_ceil(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    None,
    Vertical,
    HalfTurn,
}

impl FromStr for Symmetry {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Symmetry::None),
            "vertical" => Ok(Symmetry::Vertical),
            "half-turn" => Ok(Symmetry::HalfTurn),
            _ => usage(format!("unknown symmetry {s:?}")),
        }
    }
}

pub const BRUTE_FORCE_MAX: usize = 7;

/// Rows with entries in {−1, 0, 1}, nonzero entries alternating and starting and ending with 1.
fn asm_rows(n: usize) -> Vec<Vec<i8>> {
    let mut out = Vec::new();
    for mask in 0u32..3u32.pow(n as u32) {
        let mut m = mask;
        let row: Vec<i8> = (0..n)
            .map(|_| {
                let d = (m % 3) as i8 - 1;
                m /= 3;
                d
            })
            .collect();
        let mut s = 0;
        if row.iter().all(|&x| {
            s += x;
            (0..=1).contains(&s)
        }) && s == 1
        {
            out.push(row);
        }
    }
    out
}

/// Exhaustive count of ASMs with the given symmetry.
pub fn brute_force_asm(n: usize, sym: Symmetry) -> Result<u64> {
    if n == 0 || n > BRUTE_FORCE_MAX {
        return usage(format!("brute force supports 1 ≤ n ≤ {BRUTE_FORCE_MAX}"));
    }
    let rows = asm_rows(n);
    let rows: Vec<&Vec<i8>> = match sym {
        Symmetry::Vertical => rows.iter().filter(|r| r.iter().eq(r.iter().rev())).collect(),
        _ => rows.iter().collect(),
    };
    let mut cols = vec![0i8; n];
    let mut chosen = Vec::new();
    Ok(search(n, sym, &rows, &mut cols, &mut chosen))
}

fn search<'a>(n: usize, sym: Symmetry, rows: &[&'a Vec<i8>], cols: &mut Vec<i8>, chosen: &mut Vec<&'a Vec<i8>>) -> u64 {
    let depth = chosen.len();
    if sym == Symmetry::HalfTurn && depth == n.div_ceil(2) {
        // rows below the middle are the reversed rows above it
        if n % 2 == 1 {
            let mid = chosen[depth - 1];
            if !mid.iter().eq(mid.iter().rev()) {
                return 0;
            }
        }
        let mut c = cols.clone();
        for i in (0..n / 2).rev() {
            for (j, x) in chosen[i].iter().rev().enumerate() {
                c[j] += x;
                if !(0..=1).contains(&c[j]) {
                    return 0;
                }
            }
        }
        return u64::from(c.iter().all(|&x| x == 1));
    }
    if depth == n {
        return u64::from(cols.iter().all(|&x| x == 1));
    }
    let mut total = 0;
    for &r in rows {
        if cols.iter().zip(r).all(|(c, x)| (0..=1).contains(&(c + x))) {
            for (c, x) in cols.iter_mut().zip(r) {
                *c += x;
            }
            chosen.push(r);
            total += search(n, sym, rows, cols, chosen);
            chosen.pop();
            for (c, x) in cols.iter_mut().zip(r) {
                *c -= x;
            }
        }
    }
    total
}
