//! Specializations of solutions: the q = ω point, rational limits and the Hotta action.

use crate::algebra::{Kind, LinOp};
use crate::arith::{leading_jet, rat_to_int, CycloQ, Fp, MultiPoly, QLaurent, Rat, Ring, P31, P61};
use crate::eigen::{solve_linear, Matrix};
use crate::error::{integrity, usage, Result};
use crate::patterns::{enumerate_open, Pattern};
use crate::qkz::{Solution, System};
use num_bigint::BigInt;
use num_traits::Signed;
use std::collections::BTreeMap;

fn omega_map(c: &QLaurent) -> CycloQ {
    c.at_omega()
}

fn rs_normalize(vals: &[CycloQ], base: usize) -> Result<Vec<BigInt>> {
    let b = &vals[base];
    let mut out = Vec::with_capacity(vals.len());
    for v in vals {
        let Some(x) = v.div_exact(b) else {
            return integrity("π₀ entry vanishes at the RS point");
        };
        match x.as_rat().and_then(rat_to_int) {
            Some(n) => out.push(n),
            None => return integrity(format!("normalized RS entry {x} is not a rational integer")),
        }
    }
    Ok(out)
}

/// Entries at q = ω, w = 1, divided by the π₀ entry.
pub fn rs_homogeneous(sol: &Solution, base: &crate::patterns::Pattern) -> Result<Vec<BigInt>> {
    let Some(bi) = sol.patterns.iter().position(|p| p == base) else {
        return usage("base pattern missing");
    };
    let vals: Vec<CycloQ> = sol.entries.iter().map(|e| omega_map(&e.coeff_sum())).collect();
    rs_normalize(&vals, bi)
}

/// Normalized RS vector plus, for C and D, the normalized vector of the boundary
/// specialization to rank r − 1, in the order of `enumerate_open(r − 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RsData {
    pub vector: Vec<BigInt>,
    pub reduced: Option<Vec<BigInt>>,
}

fn normalized<const P: u64>(vals: &[Fp<P>], base: usize) -> Result<Vec<i128>> {
    let Some(binv) = Fp::<P>::one().div_exact(&vals[base]) else {
        return integrity("π₀ entry vanishes modulo the prime");
    };
    Ok(vals.iter().map(|v| v.mul(&binv).symmetric()).collect())
}

fn rs_mod<const P: u64>(sys: &System) -> Result<(Vec<i128>, Option<Vec<i128>>)> {
    let w = Fp::<P>::omega();
    let e = sys.solve_in(false, &w, &|c| Fp::eval_q(c, w))?;
    let vals: Vec<Fp<P>> = e.iter().map(MultiPoly::coeff_sum).collect();
    let full = normalized(&vals, sys.index().get(&sys.base_pattern).unwrap())?;
    let r = sys.nvars;
    let (var, point) = match sys.kind() {
        // w_r = −q⁻¹ and w₁ = −q⁻²; the remaining divisors are constant at w = 1
        Kind::C => (r - 1, w.inv().unwrap().neg()),
        Kind::D => (0, w.mul(&w).inv().unwrap().neg()),
        _ => return Ok((full, None)),
    };
    let mut at = vec![Fp::<P>::one(); r];
    at[var] = point;
    let lower = enumerate_open(r - 1);
    let mut red = vec![Fp::<P>::zero(); lower.len()];
    for (p, f) in sys.index().iter().zip(&e) {
        let v = f.eval(&at)?;
        if v.is_zero() {
            continue;
        }
        if !p.is_open(var) {
            return integrity(format!("{p} survives the specialization with point {} closed", var + 1));
        }
        red[lower.get(&p.remove_open(var)?).unwrap()] = v;
    }
    let base = lower.get(&Pattern::all_open(r - 1)).unwrap();
    Ok((full, Some(normalized(&red, base)?)))
}

/// The normalized RS data without a generic-q solve.
///
/// The system is solved over ℤ/p with q a primitive cube root of unity, for p = 2⁶¹ − 1
/// and p = 2³¹ − 1. Exact divisions commute with reduction, so each run is the image of
/// the true vector; entries are lifted to the symmetric range and both primes must agree.
pub fn rs_data_modular(sys: &System) -> Result<RsData> {
    let a = rs_mod::<P61>(sys)?;
    let b = rs_mod::<P31>(sys)?;
    if a != b {
        return integrity("RS vectors disagree between the two primes");
    }
    let lift = |v: Vec<i128>| v.into_iter().map(BigInt::from).collect();
    Ok(RsData { vector: lift(a.0), reduced: a.1.map(lift) })
}

pub fn rs_vector_modular(sys: &System) -> Result<Vec<BigInt>> {
    Ok(rs_data_modular(sys)?.vector)
}

pub fn sum_entries(v: &[BigInt]) -> BigInt {
    v.iter().sum()
}

pub fn max_entry(v: &[BigInt]) -> BigInt {
    v.iter().max().cloned().unwrap_or_default()
}

/// Number of linear factors of the base entry, the ħ-order of every entry.
pub fn limit_degree(kind: Kind, rank: usize) -> usize {
    let n = rank / 2;
    match kind {
        Kind::A => n * (n - 1),
        Kind::B => 2 * n * n,
        Kind::C | Kind::D => rank * (rank - 1) / 2,
    }
}

/// Leading ħ coefficient of each entry under q = −e^{−ħA/2}, w_i = e^{−ħz_i}.
/// Variables are z₁..z_r then A.
pub fn rational_limit(sol: &Solution) -> Result<Vec<MultiPoly<Rat>>> {
    let d = limit_degree(sol.spec.kind, sol.spec.rank);
    let out: Vec<MultiPoly<Rat>> = sol.entries.iter().map(|e| leading_jet(e, d)).collect();
    for (p, m) in sol.patterns.iter().zip(&out) {
        if m.is_zero() {
            return integrity(format!("leading jet of {p} vanishes"));
        }
        if !m.is_homogeneous() || m.total_degree() != Some(d as i32) {
            return integrity(format!("leading jet of {p} is not homogeneous of degree {d}"));
        }
    }
    Ok(out)
}

/// Values at z = 0, A = 1.
pub fn degree_vector(md: &[MultiPoly<Rat>]) -> Result<Vec<BigInt>> {
    md.iter()
        .map(|p| {
            let n = p.nvars();
            let v = p.coeff(&{
                let mut e = vec![0; n];
                e[n - 1] = p.total_degree().unwrap_or(0);
                e
            });
            rat_to_int(&v).ok_or_else(|| crate::Error::Integrity(format!("degree {v} not an integer")))
        })
        .collect()
}

/// Index convention for μ: whether μ^{π'}_π is read from row π or column π of e_α.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Row,
    Col,
}

/// Outcome of the Hotta test at one site.
#[derive(Clone, Debug)]
pub struct HottaSite {
    pub site: usize,
    /// μ[π][π′] in (−τ_α + A∂_α)Ψ_π = Ψ_π − Σ μ[π][π′]Ψ_π′; `None` if outside the span.
    pub mu: Option<Vec<Vec<Rat>>>,
    pub nonneg_integer: bool,
    pub matches_row: bool,
    pub matches_col: bool,
    pub involution: bool,
}

/// T_α f = −τ_α f + A(τ_α f − f)/(z_{α+1} − z_α) for 0-based α.
pub fn hotta_operator(f: &MultiPoly<Rat>, alpha: usize) -> Result<MultiPoly<Rat>> {
    let n = f.nvars();
    let t = f.swap(alpha, alpha + 1);
    let d = f.divided_difference(alpha)?;
    Ok(&(&MultiPoly::var(n, n - 1) * &d) - &t)
}

fn coordinates(basis: &[MultiPoly<Rat>], f: &MultiPoly<Rat>) -> Option<Vec<Rat>> {
    let mut monos: BTreeMap<Vec<i32>, usize> = BTreeMap::new();
    for p in basis.iter().chain([f]) {
        for (e, _) in p.terms() {
            let k = monos.len();
            monos.entry(e.clone()).or_insert(k);
        }
    }
    let rows = monos.len();
    let mut m: Matrix = vec![vec![Rat::zero(); basis.len()]; rows];
    for (j, p) in basis.iter().enumerate() {
        for (e, c) in p.terms() {
            m[monos[e]][j] = c.clone();
        }
    }
    let mut b = vec![Rat::zero(); rows];
    for (e, c) in f.terms() {
        b[monos[e]] = c.clone();
    }
    solve_linear(&m, &b)
}

/// Runs the Hotta closure test for every site of a type A solution's multidegrees.
pub fn hotta_check(md: &[MultiPoly<Rat>], e: &[LinOp]) -> Result<Vec<HottaSite>> {
    let dim = md.len();
    let mut out = Vec::new();
    for (alpha, op) in e.iter().enumerate() {
        let em = op.at_rat(&Rat::from_integer(BigInt::from(-1)))?;
        let mut mu = Some(vec![vec![Rat::zero(); dim]; dim]);
        let mut involution = true;
        for (i, f) in md.iter().enumerate() {
            let img = hotta_operator(f, alpha)?;
            if hotta_operator(&img, alpha)? != *f {
                involution = false;
            }
            match (coordinates(md, &img), mu.as_mut()) {
                (Some(x), Some(m)) => {
                    for (j, c) in x.into_iter().enumerate() {
                        let delta = if i == j { Rat::from_integer(1.into()) } else { Rat::zero() };
                        m[i][j] = delta - c;
                    }
                }
                _ => mu = None,
            }
        }
        let (nonneg, row, col) = match &mu {
            Some(m) => {
                let nonneg = m.iter().flatten().all(|x| x.is_integer() && !x.is_negative());
                let row = (0..dim).all(|i| (0..dim).all(|j| m[i][j] == em[i][j]));
                let col = (0..dim).all(|i| (0..dim).all(|j| m[i][j] == em[j][i]));
                (nonneg, row, col)
            }
            None => (false, false, false),
        };
        out.push(HottaSite { site: alpha + 1, mu, nonneg_integer: nonneg, matches_row: row, matches_col: col, involution });
    }
    Ok(out)
}

/// Σ_π Ψ_π at q = ω, still depending on w.
pub fn parameterized_sum(sol: &Solution) -> MultiPoly<CycloQ> {
    let n = sol.spec.rank;
    sol.entries.iter().fold(MultiPoly::zero(n), |acc, e| &acc + &e.map_coeffs(omega_map))
}

/// For each solving relation whose matrix has unit column sums at q = ω, checks
/// P·S = τS for the parameterized sum S. Returns (relation, holds).
pub fn sum_symmetries(sys: &System, sol: &Solution) -> Vec<(String, bool)> {
    let s = parameterized_sum(sol);
    let w = CycloQ::omega();
    let mut out = Vec::new();
    for rel in &sys.relations {
        let stochastic = (0..rel.op.dim()).all(|j| {
            let t = rel.op.col(j).iter().fold(CycloQ::zero(), |a, (_, c)| a.add(&c.at_omega()));
            t == CycloQ::one()
        });
        if !stochastic {
            continue;
        }
        let pre = rel.pre.map_coeffs(omega_map);
        out.push((rel.name.clone(), &pre * &s == rel.tau.apply_in(&s, &w)));
    }
    out
}

pub fn all_nonnegative(v: &[BigInt]) -> bool {
    v.iter().all(|x| !x.is_negative())
}
