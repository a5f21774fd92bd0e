//! Ř-matrix identities in symbolic spectral parameters.
//!
//! Ř_E(u) = N_E(u)/D(u) with N_E(u) = (qu − q⁻¹)I + (u − 1)E and D(u) = q − q⁻¹u.
//! Both sides of each identity carry the same scalar denominators, so only the
//! numerator products are compared, exactly, as matrices over Q[q^±][a^±, b^±].

use crate::algebra::{Kind, LinOp, Rep};
use crate::arith::{MultiPoly, QLaurent};
use crate::qkz::{mono, Poly};

type PMat = Vec<Vec<Poly>>;

/// Spectral parameter a^i b^j in two symbolic variables.
#[derive(Clone, Copy, Debug)]
struct Arg(i32, i32);

fn arg_poly(u: Arg) -> Poly {
    mono(2, 1, 0, &[(0, u.0), (1, u.1)])
}

fn numerator(op: &LinOp, u: Arg) -> PMat {
    let n = op.dim();
    let up = arg_poly(u);
    let diag = &up.scale(&QLaurent::q_pow(1)) - &mono(2, 1, -1, &[]);
    let um1 = &up - &MultiPoly::one(2);
    let mut m = vec![vec![MultiPoly::zero(2); n]; n];
    for (j, row) in m.iter_mut().enumerate() {
        row[j] = diag.clone();
    }
    for j in 0..n {
        for (i, c) in op.col(j) {
            m[*i][j] = &m[*i][j] + &um1.scale(c);
        }
    }
    m
}

fn denominator(u: Arg) -> Poly {
    &mono(2, 1, 1, &[]) - &arg_poly(u).scale(&QLaurent::q_pow(-1))
}

fn pmul(a: &PMat, b: &PMat) -> PMat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .filter(|&k| !a[i][k].is_zero() && !b[k][j].is_zero())
                        .fold(MultiPoly::zero(2), |acc, k| &acc + &(&a[i][k] * &b[k][j]))
                })
                .collect()
        })
        .collect()
}

fn chain(ms: &[PMat]) -> PMat {
    ms[1..].iter().fold(ms[0].clone(), |acc, m| pmul(&acc, m))
}

/// Ř(u)Ř(1/u) = 1.
pub fn unitarity(op: &LinOp) -> bool {
    let (u, ui) = (Arg(1, 0), Arg(-1, 0));
    let lhs = pmul(&numerator(op, u), &numerator(op, ui));
    let d = &denominator(u) * &denominator(ui);
    let n = op.dim();
    (0..n).all(|i| (0..n).all(|j| if i == j { lhs[i][j] == d } else { lhs[i][j].is_zero() }))
}

/// Ř₁(u)Ř₂(uv)Ř₁(v) = Ř₂(v)Ř₁(uv)Ř₂(u) with u = a, v = b.
pub fn yang_baxter(e1: &LinOp, e2: &LinOp) -> bool {
    let (u, v, uv) = (Arg(1, 0), Arg(0, 1), Arg(1, 1));
    chain(&[numerator(e1, u), numerator(e2, uv), numerator(e1, v)])
        == chain(&[numerator(e2, v), numerator(e1, uv), numerator(e2, u)])
}

/// Right wall: Ř_E(b/a)K(a⁻²)Ř_E(1/(ab))K(b⁻²) = K(b⁻²)Ř_E(1/(ab))K(a⁻²)Ř_E(b/a), K = Ř_{e_r}.
pub fn reflection_right(e: &LinOp, k: &LinOp) -> bool {
    let (ba, ia2, iab, ib2) = (Arg(-1, 1), Arg(-2, 0), Arg(-1, -1), Arg(0, -2));
    chain(&[numerator(e, ba), numerator(k, ia2), numerator(e, iab), numerator(k, ib2)])
        == chain(&[numerator(k, ib2), numerator(e, iab), numerator(k, ia2), numerator(e, ba)])
}

/// Left wall: Ř_E(b/a)K(b²)Ř_E(ab)K(a²) = K(a²)Ř_E(ab)K(b²)Ř_E(b/a), K = Ř_{e_0}.
pub fn reflection_left(e: &LinOp, k: &LinOp) -> bool {
    let (ba, b2, ab, a2) = (Arg(-1, 1), Arg(0, 2), Arg(1, 1), Arg(2, 0));
    chain(&[numerator(e, ba), numerator(k, b2), numerator(e, ab), numerator(k, a2)])
        == chain(&[numerator(k, a2), numerator(e, ab), numerator(k, b2), numerator(e, ba)])
}

/// Unitarity of every generator, Yang–Baxter for every braid pair, and the
/// reflection equations at each boundary.
pub fn validate(rep: &Rep) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    let e = &rep.e;
    let r = rep.spec.rank;
    let mut gens: Vec<(String, &LinOp)> = e.iter().enumerate().map(|(i, x)| (format!("e{}", i + 1), x)).collect();
    let mut braids: Vec<(usize, usize)> = (0..e.len().saturating_sub(1)).map(|i| (i, i + 1)).collect();
    match rep.spec.kind {
        Kind::A | Kind::B => {}
        Kind::C => {
            let w = rep.wall.as_ref().unwrap();
            let c = rep.conj.as_ref().unwrap();
            gens.push((format!("e{r}"), w));
            gens.push(("e1'".into(), c));
            if r >= 3 {
                braids.push((gens.len() - 1, 1));
            }
            out.push((format!("reflection e{} e{r}", r - 1), reflection_right(&e[r - 2], w)));
        }
        Kind::D => {
            let c = rep.conj.as_ref().unwrap();
            gens.push((format!("e{}'", r - 1), c));
            if r >= 3 {
                braids.push((r - 3, gens.len() - 1));
            }
            if let Some(e0) = &rep.e0 {
                gens.push(("e0".into(), e0));
                out.push(("reflection e1 e0".into(), reflection_left(&e[0], e0)));
            }
        }
    }
    for (name, g) in &gens {
        out.push((format!("unitarity {name}"), unitarity(g)));
    }
    for (i, j) in braids {
        let (a, b) = (&gens[i], &gens[j]);
        out.push((format!("YBE {} {}", a.0, b.0), yang_baxter(a.1, b.1)));
        out.push((format!("YBE {} {}", b.0, a.0), yang_baxter(b.1, a.1)));
    }
    out
}
