//! Test-side parser for hand-typed polynomial displays, independent of the library's
//! own serialization.
#![allow(dead_code)]

pub mod reference;

use tlqkz::arith::{MultiPoly, QLaurent, Rat, Ring};
use tlqkz::patterns::Pattern;
use tlqkz::qkz::Solution;

pub type QPoly = MultiPoly<QLaurent>;
pub type RPoly = MultiPoly<Rat>;

struct Parser<'a, S: Ring> {
    s: &'a [u8],
    i: usize,
    n: usize,
    var: &'a dyn Fn(&str) -> MultiPoly<S>,
}

impl<S: Ring> Parser<'_, S> {
    fn peek(&mut self) -> Option<u8> {
        while self.i < self.s.len() && self.s[self.i] == b' ' {
            self.i += 1;
        }
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> MultiPoly<S> {
        let mut acc = MultiPoly::zero(self.n);
        let mut sign = true;
        if self.peek() == Some(b'-') {
            self.i += 1;
            sign = false;
        } else if self.peek() == Some(b'+') {
            self.i += 1;
        }
        loop {
            let t = self.term();
            acc = if sign { &acc + &t } else { &acc - &t };
            match self.peek() {
                Some(b'+') => sign = true,
                Some(b'-') => sign = false,
                _ => return acc,
            }
            self.i += 1;
        }
    }

    fn term(&mut self) -> MultiPoly<S> {
        let mut acc = self.power();
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {}
                _ => return acc,
            }
            acc = &acc * &self.power();
        }
    }

    fn power(&mut self) -> MultiPoly<S> {
        let base = self.primary();
        if self.peek() != Some(b'^') {
            return base;
        }
        self.i += 1;
        let neg = self.peek() == Some(b'-');
        if neg {
            self.i += 1;
        }
        let k = self.number() as u32;
        let p = base.pow(k);
        if neg {
            MultiPoly::one(self.n).div_exact(&p).expect("negative power of a monomial")
        } else {
            p
        }
    }

    fn number(&mut self) -> u64 {
        self.peek();
        let st = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[st..self.i]).unwrap().parse().expect("number")
    }

    fn primary(&mut self) -> MultiPoly<S> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr();
                assert_eq!(self.peek(), Some(b')'), "unbalanced");
                self.i += 1;
                e
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.number();
                MultiPoly::constant(self.n, S::from_int(k as i64))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let st = self.i;
                self.i += 1;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                (self.var)(std::str::from_utf8(&self.s[st..self.i]).unwrap())
            }
            c => panic!("unexpected {c:?} at {}", self.i),
        }
    }
}

fn parse<S: Ring>(n: usize, s: &str, var: &dyn Fn(&str) -> MultiPoly<S>) -> MultiPoly<S> {
    let mut p = Parser { s: s.as_bytes(), i: 0, n, var };
    let e = p.expr();
    assert_eq!(p.peek(), None, "trailing input in {s:?}");
    e
}

/// Polynomial in q, w1..wn.
pub fn qpoly(n: usize, s: &str) -> QPoly {
    parse(n, s, &|name: &str| {
        if name == "q" {
            MultiPoly::constant(n, QLaurent::q_pow(1))
        } else if let Some(i) = name.strip_prefix('w') {
            MultiPoly::var(n, i.parse::<usize>().unwrap() - 1)
        } else {
            panic!("unknown variable {name}")
        }
    })
}

/// Polynomial in z1..zn, A; A is variable n.
pub fn zpoly(n: usize, s: &str) -> RPoly {
    parse(n + 1, s, &|name: &str| {
        if name == "A" {
            MultiPoly::var(n + 1, n)
        } else if let Some(i) = name.strip_prefix('z') {
            MultiPoly::var(n + 1, i.parse::<usize>().unwrap() - 1)
        } else {
            panic!("unknown variable {name}")
        }
    })
}

/// Entries of `sol` and parsed displays, aligned by pattern.
pub fn entry_pairs(sol: &Solution, table: &[(&str, &str)]) -> Vec<(QPoly, QPoly)> {
    let n = sol.spec.rank;
    table.iter().map(|(t, s)| (sol.get(&Pattern::parse(t).unwrap()).unwrap().clone(), qpoly(n, s))).collect()
}

/// Multidegrees `md` (in solution order) and parsed displays, aligned by pattern.
pub fn multidegree_pairs(sol: &Solution, md: &[RPoly], table: &[(&str, &str)]) -> Vec<(RPoly, RPoly)> {
    let n = sol.spec.rank;
    table
        .iter()
        .map(|(t, s)| {
            let p = Pattern::parse(t).unwrap();
            (md[sol.patterns.iter().position(|x| *x == p).unwrap()].clone(), zpoly(n, s))
        })
        .collect()
}

/// Values of `v` (in solution order) listed in the order of `texts`.
pub fn in_order<T: Clone>(sol: &Solution, v: &[T], texts: &[&str]) -> Vec<T> {
    assert_eq!(texts.len(), sol.patterns.len());
    texts
        .iter()
        .map(|t| {
            let p = Pattern::parse(t).unwrap();
            v[sol.patterns.iter().position(|x| *x == p).unwrap()].clone()
        })
        .collect()
}
