//! Temperley–Lieb type operators on link patterns and their defining relations.

use crate::arith::{QLaurent, Rat, Ring};
use crate::error::{integrity, usage, Result};
use crate::patterns::{enumerate_closed, enumerate_open, pair_open_arches, Pairing, Pattern, PatternIndex, Strand};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A,
    B,
    C,
    D,
}

impl FromStr for Kind {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Kind::A),
            "B" | "b" => Ok(Kind::B),
            "C" | "c" => Ok(Kind::C),
            "D" | "d" => Ok(Kind::D),
            _ => usage(format!("unknown type {s:?}")),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Column-sparse square matrix over Q[q, q⁻¹]. Column j holds the image of basis pattern j.
#[derive(Clone, PartialEq, Eq)]
pub struct LinOp {
    cols: Vec<Vec<(usize, QLaurent)>>,
}

fn pack(col: BTreeMap<usize, QLaurent>) -> Vec<(usize, QLaurent)> {
    col.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl LinOp {
    pub fn from_fn(index: &PatternIndex, f: impl Fn(&Pattern) -> Vec<(QLaurent, Pattern)>) -> Result<Self> {
        let mut cols = Vec::with_capacity(index.len());
        for p in index.iter() {
            let mut col = BTreeMap::new();
            for (c, img) in f(p) {
                let Some(i) = index.get(&img) else {
                    return integrity(format!("image {img} of {p} outside the basis"));
                };
                col.entry(i).or_insert_with(QLaurent::zero).add_assign(&c);
            }
            cols.push(pack(col));
        }
        Ok(LinOp { cols })
    }

    pub fn identity(dim: usize) -> Self {
        LinOp { cols: (0..dim).map(|j| vec![(j, QLaurent::one())]).collect() }
    }

    pub fn zero(dim: usize) -> Self {
        LinOp { cols: vec![Vec::new(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &[(usize, QLaurent)] {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> QLaurent {
        self.cols[j].iter().find(|(r, _)| *r == i).map_or_else(QLaurent::zero, |(_, v)| v.clone())
    }

    /// Row view: `rows()[i]` lists (j, E[i][j]).
    pub fn rows(&self) -> Vec<Vec<(usize, QLaurent)>> {
        let mut rows = vec![Vec::new(); self.dim()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                rows[*i].push((j, v.clone()));
            }
        }
        rows
    }

    /// self ∘ other: apply `other` first.
    pub fn compose(&self, other: &LinOp) -> LinOp {
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc = BTreeMap::new();
                for (k, c) in col {
                    for (i, d) in &self.cols[*k] {
                        acc.entry(*i).or_insert_with(QLaurent::zero).add_assign(&c.mul(d));
                    }
                }
                pack(acc)
            })
            .collect();
        LinOp { cols }
    }

    pub fn add(&self, o: &LinOp) -> LinOp {
        let cols = self
            .cols
            .iter()
            .zip(&o.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, QLaurent> = a.iter().cloned().collect();
                for (i, v) in b {
                    acc.entry(*i).or_insert_with(QLaurent::zero).add_assign(v);
                }
                pack(acc)
            })
            .collect();
        LinOp { cols }
    }

    pub fn scale(&self, c: &QLaurent) -> LinOp {
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(i, v)| (*i, v.mul(c))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        LinOp { cols }
    }

    pub fn sub(&self, o: &LinOp) -> LinOp {
        self.add(&o.scale(&QLaurent::one().neg()))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> LinOp {
        LinOp { cols: self.rows() }
    }

    /// Dense matrix of values at rational q.
    pub fn at_rat(&self, q: &Rat) -> Result<Vec<Vec<Rat>>> {
        let n = self.dim();
        let mut m = vec![vec![Rat::zero(); n]; n];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                m[*i][j] = v.at_rat(q).ok_or_else(|| crate::Error::Usage("q = 0".into()))?;
            }
        }
        Ok(m)
    }

    /// Dense matrix of values at q = ω; all entries must be rational there.
    pub fn at_omega(&self) -> Result<Vec<Vec<Rat>>> {
        let n = self.dim();
        let mut m = vec![vec![Rat::zero(); n]; n];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                let w = v.at_omega();
                match w.as_rat() {
                    Some(x) => m[*i][j] = x.clone(),
                    None => return integrity(format!("entry {v} is not rational at q = ω")),
                }
            }
        }
        Ok(m)
    }

    /// Sparse triplets (row, column, value) with q-Laurent values as [[exp, "rational"], …].
    pub fn to_json(&self) -> Value {
        let mut t = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                t.push(json!([i, j, crate::serial::qlaurent_to_json(v)]));
            }
        }
        json!({ "dim": self.dim(), "triplets": t })
    }
}

impl fmt::Debug for LinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                m.entry(&(i, j), v);
            }
        }
        m.finish()
    }
}

/// Type, rank and the D pairing convention.
///
/// For type A the rank is the number of points N; otherwise it is r.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub kind: Kind,
    pub rank: usize,
    pub pairing: Pairing,
}

impl AlgebraSpec {
    pub fn new(kind: Kind, rank: usize) -> Self {
        AlgebraSpec { kind, rank, pairing: Pairing::Right }
    }
}

/// All operators of one representation.
#[derive(Clone, Debug)]
pub struct Rep {
    pub spec: AlgebraSpec,
    pub index: PatternIndex,
    /// e_1 … e_{r−1} (e_1 … e_{N−1} for type A).
    pub e: Vec<LinOp>,
    /// C: e_r attaching point r to the wall.
    pub wall: Option<LinOp>,
    /// D: e_0.
    pub e0: Option<LinOp>,
    /// C, D: the involution s.
    pub s: Option<LinOp>,
    /// C: e₁′ = s e₁ s. D: e′_{r−1} = s e_{r−1} s.
    pub conj: Option<LinOp>,
    /// A: cyclic rotation as a permutation matrix.
    pub rot: Option<LinOp>,
}

fn beta() -> QLaurent {
    QLaurent::beta()
}

fn two() -> QLaurent {
    QLaurent::from_int(2)
}

/// Weight for erasing a wall connection created by e_i (1-based): β for odd i, 2 for even i.
pub fn parity_weight(i: usize) -> QLaurent {
    if i % 2 == 1 {
        beta()
    } else {
        two()
    }
}

/// e_i (0-based site i joins points i, i+1) on closed or C-type open patterns.
fn tl_action(p: &Pattern, i: usize, join_weight: &QLaurent) -> (QLaurent, Pattern) {
    if p.has_little_arch(i) {
        return (beta(), p.clone());
    }
    let mut q = p.clone();
    let (a, b) = (p.partner(i), p.partner(i + 1));
    let w = match (a, b) {
        (Some(a), Some(b)) => {
            q.set_pair(a, b);
            QLaurent::one()
        }
        (None, None) => join_weight.clone(),
        (None, Some(b)) => {
            q.set_open(b);
            QLaurent::one()
        }
        (Some(a), None) => {
            q.set_open(a);
            QLaurent::one()
        }
    };
    q.set_pair(i, i + 1);
    (w, q)
}

/// D-type e_i on the colored picture: dashed pairs give 0, the residual half-line
/// joins with weight 1, and joining the ends of two different dashed arches
/// leaves their outer ends as a solid arch.
fn d_action(p: &Pattern, i: usize, pairing: Pairing) -> Vec<(QLaurent, Pattern)> {
    if p.has_little_arch(i) {
        return vec![(beta(), p.clone())];
    }
    let (a, b) = (p.partner(i), p.partner(i + 1));
    if a.is_some() || b.is_some() {
        return vec![tl_action(p, i, &QLaurent::one())];
    }
    let col = pair_open_arches(p, pairing);
    let mut q = p.clone();
    match (col.strands[i], col.strands[i + 1]) {
        (Strand::Dashed(x), _) if x == i + 1 => Vec::new(),
        (Strand::Residual, _) | (_, Strand::Residual) => {
            q.set_pair(i, i + 1);
            vec![(QLaurent::one(), q)]
        }
        (Strand::Dashed(x), Strand::Dashed(y)) => {
            q.set_pair(i, i + 1);
            q.set_pair(x, y);
            vec![(QLaurent::one(), q)]
        }
        _ => unreachable!("open points carry dashed or residual strands"),
    }
}

/// D-type e_0: half of an e at point 1 joined to the wall.
fn d_e0(p: &Pattern) -> Vec<(QLaurent, Pattern)> {
    let Some(b) = p.partner(0) else {
        return vec![(beta(), p.clone())];
    };
    let mut q1 = p.clone();
    q1.set_open(0);
    q1.set_open(b);
    let mut out = vec![(QLaurent::one(), q1)];
    // the first open point is the residual under the right pairing
    if let Some(&res) = p.opens().first() {
        let mut q2 = p.clone();
        q2.set_open(0);
        q2.set_pair(b, res);
        out.push((QLaurent::one(), q2));
    }
    out
}

fn c_s(p: &Pattern) -> Vec<(QLaurent, Pattern)> {
    match p.partner(0) {
        None => vec![(QLaurent::one(), p.clone())],
        Some(b) => {
            let mut q = p.clone();
            q.set_open(0);
            q.set_open(b);
            vec![(QLaurent::one().neg(), p.clone()), (QLaurent::one(), q)]
        }
    }
}

/// Switches the color of the rightmost arch in the colored picture.
fn d_s(p: &Pattern, pairing: Pairing) -> Vec<(QLaurent, Pattern)> {
    let r = p.len();
    let last = r - 1;
    let col = pair_open_arches(p, pairing);
    let mut q = p.clone();
    match col.strands[last] {
        Strand::Residual => {}
        Strand::Dashed(a) => q.set_pair(a, last),
        Strand::Solid(a) => {
            q.set_open(a);
            q.set_open(last);
            // only a switch if the freed pair becomes one dashed arch
            if pair_open_arches(&q, pairing).dashed_partner(last) != Some(a) {
                q = p.clone();
            }
        }
    }
    vec![(QLaurent::one(), q)]
}

pub fn build(spec: AlgebraSpec) -> Result<Rep> {
    let r = spec.rank;
    let index = match spec.kind {
        Kind::A | Kind::B => {
            if r < 2 || r % 2 == 1 {
                return usage(format!("type {} needs an even number of points, got {r}", spec.kind));
            }
            enumerate_closed(r / 2)
        }
        Kind::C => {
            if r < 2 {
                return usage("type C needs rank >= 2");
            }
            enumerate_open(r)
        }
        Kind::D => {
            if r < 2 {
                return usage("type D needs rank >= 2");
            }
            enumerate_open(r)
        }
    };
    let mut rep = Rep { spec, index, e: Vec::new(), wall: None, e0: None, s: None, conj: None, rot: None };
    for i in 0..r - 1 {
        let op = match spec.kind {
            Kind::D => LinOp::from_fn(&rep.index, |p| d_action(p, i, spec.pairing))?,
            _ => {
                let w = parity_weight(i + 1);
                LinOp::from_fn(&rep.index, |p| vec![tl_action(p, i, &w)])?
            }
        };
        rep.e.push(op);
    }
    match spec.kind {
        Kind::A => {
            rep.rot = Some(LinOp::from_fn(&rep.index, |p| vec![(QLaurent::one(), p.rotate().expect("closed"))])?);
        }
        Kind::B => {}
        Kind::C => {
            let w = parity_weight(r);
            rep.wall = Some(LinOp::from_fn(&rep.index, |p| match p.partner(r - 1) {
                None => vec![(w.clone(), p.clone())],
                Some(a) => {
                    let mut q = p.clone();
                    q.set_open(a);
                    q.set_open(r - 1);
                    vec![(QLaurent::one(), q)]
                }
            })?);
            let s = LinOp::from_fn(&rep.index, c_s)?;
            rep.conj = Some(s.compose(&rep.e[0]).compose(&s));
            rep.s = Some(s);
        }
        Kind::D => {
            // e0 needs the residual half-line, present only at odd rank
            if r % 2 == 1 {
                rep.e0 = Some(LinOp::from_fn(&rep.index, d_e0)?);
            }
            let s = LinOp::from_fn(&rep.index, |p| d_s(p, spec.pairing))?;
            rep.conj = Some(s.compose(&rep.e[r - 2]).compose(&s));
            rep.s = Some(s);
        }
    }
    Ok(rep)
}

impl Rep {
    pub fn dim(&self) -> usize {
        self.index.len()
    }

    /// e_i with 1-based i.
    pub fn e(&self, i: usize) -> &LinOp {
        &self.e[i - 1]
    }

    /// S = q^{n−2} s₁ s₂ ⋯ s_{N−1} with s_i = −q⁻¹ − e_i (type A).
    pub fn rotation_product(&self) -> Result<LinOp> {
        if self.spec.kind != Kind::A {
            return usage("rotation is defined for type A");
        }
        let n = self.spec.rank / 2;
        let id = LinOp::identity(self.dim());
        let mut acc = id.scale(&QLaurent::q_pow(n as i32 - 2));
        for e in &self.e {
            let si = id.scale(&QLaurent::q_pow(-1).neg()).sub(e);
            acc = acc.compose(&si);
        }
        Ok(acc)
    }

    /// Deformed generator s_i = −q⁻¹ − e_i.
    pub fn deformed(&self, i: usize) -> LinOp {
        LinOp::identity(self.dim()).scale(&QLaurent::q_pow(-1).neg()).sub(self.e(i))
    }
}

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
    /// False for identities recorded as expected to fail.
    pub expected: bool,
}

impl RelationCheck {
    pub fn ok(&self) -> bool {
        self.holds == self.expected
    }
}

struct Checker {
    out: Vec<RelationCheck>,
}

impl Checker {
    fn eq(&mut self, name: impl Into<String>, a: &LinOp, b: &LinOp) {
        self.out.push(RelationCheck { name: name.into(), holds: a == b, expected: true });
    }
    fn eq_expect(&mut self, name: impl Into<String>, a: &LinOp, b: &LinOp, expected: bool) {
        self.out.push(RelationCheck { name: name.into(), holds: a == b, expected });
    }
    fn commute(&mut self, name: impl Into<String>, a: &LinOp, b: &LinOp) {
        self.eq(name, &a.compose(b), &b.compose(a));
    }
}

fn tl_relations(ch: &mut Checker, e: &[LinOp], label: &dyn Fn(usize) -> String) {
    let b = beta();
    for i in 0..e.len() {
        ch.eq(format!("{0}^2 = beta {0}", label(i)), &e[i].compose(&e[i]), &e[i].scale(&b));
        if i + 1 < e.len() {
            ch.eq(format!("{0} {1} {0} = {0}", label(i), label(i + 1)), &e[i].compose(&e[i + 1]).compose(&e[i]), &e[i]);
            ch.eq(
                format!("{1} {0} {1} = {1}", label(i), label(i + 1)),
                &e[i + 1].compose(&e[i]).compose(&e[i + 1]),
                &e[i + 1],
            );
        }
        for j in i + 2..e.len() {
            ch.commute(format!("{} {} commute", label(i), label(j)), &e[i], &e[j]);
        }
    }
}

/// Every defining relation of the algebra as an exact matrix identity.
pub fn validate_relations(rep: &Rep) -> Vec<RelationCheck> {
    let mut ch = Checker { out: Vec::new() };
    let r = rep.spec.rank;
    let e = &rep.e;
    let lab = |i: usize| format!("e{}", i + 1);
    tl_relations(&mut ch, e, &lab);
    let b = beta();
    let id = LinOp::identity(rep.dim());
    match rep.spec.kind {
        Kind::A => {
            let rot = rep.rot.as_ref().unwrap();
            let prod = rep.rotation_product().unwrap();
            ch.eq("S permutation = q^(n-2) s1...s(N-1)", rot, &prod);
            let mut p = id.clone();
            for _ in 0..r {
                p = p.compose(rot);
            }
            ch.eq("S^N = 1", &p, &id);
            let inv = rot.transpose();
            for i in 0..r - 2 {
                ch.eq(format!("S e{} S^-1 = e{}", i + 1, i + 2), &rot.compose(&e[i]).compose(&inv), &e[i + 1]);
            }
            for i in 1..r {
                let s = rep.deformed(i);
                let a = s.add(&id.scale(&QLaurent::q_pow(-1)));
                let c = s.sub(&id.scale(&QLaurent::q_pow(1)));
                ch.eq(format!("(s{i} + q^-1)(s{i} - q) = 0"), &a.compose(&c), &LinOp::zero(rep.dim()));
            }
        }
        Kind::B => {}
        Kind::C => {
            let w = rep.wall.as_ref().unwrap();
            let e1p = rep.conj.as_ref().unwrap();
            let s = rep.s.as_ref().unwrap();
            let wr = parity_weight(r);
            let wr1 = parity_weight(r - 1);
            ch.eq(format!("e{r}^2 = {} e{r}", weight_name(r)), &w.compose(w), &w.scale(&wr));
            ch.eq(
                format!("e{0} e{r} e{0} = {1} e{0}", r - 1, weight_name(r - 1)),
                &e[r - 2].compose(w).compose(&e[r - 2]),
                &e[r - 2].scale(&wr1),
            );
            for i in 0..r.saturating_sub(2) {
                ch.commute(format!("e{} e{r} commute", i + 1), &e[i], w);
            }
            ch.eq("s^2 = 1", &s.compose(s), &id);
            ch.eq("e1'^2 = beta e1'", &e1p.compose(e1p), &e1p.scale(&b));
            let z = LinOp::zero(rep.dim());
            ch.eq("e1 e1' = 0", &e[0].compose(e1p), &z);
            ch.eq("e1' e1 = 0", &e1p.compose(&e[0]), &z);
            if r >= 3 {
                ch.eq("e1' e2 e1' = e1'", &e1p.compose(&e[1]).compose(e1p), e1p);
                ch.eq("e2 e1' e2 = e2", &e[1].compose(e1p).compose(&e[1]), &e[1]);
                ch.commute(format!("e1' e{r} commute"), e1p, w);
            }
            for i in 2..r - 1 {
                ch.commute(format!("e1' e{} commute", i + 1), e1p, &e[i]);
            }
        }
        Kind::D => {
            let ep = rep.conj.as_ref().unwrap();
            let s = rep.s.as_ref().unwrap();
            let z = LinOp::zero(rep.dim());
            let k = r - 1;
            ch.eq("s^2 = 1", &s.compose(s), &id);
            ch.eq(format!("e{k}'^2 = beta e{k}'"), &ep.compose(ep), &ep.scale(&b));
            ch.eq_expect(format!("e{k}'^2 = beta e{k}"), &ep.compose(ep), &e[k - 1].scale(&b), false);
            ch.eq(format!("e{k} e{k}' = 0"), &e[k - 1].compose(ep), &z);
            ch.eq(format!("e{k}' e{k} = 0"), &ep.compose(&e[k - 1]), &z);
            ch.eq(
                format!("e{0} e{k}' e{0} = e{0}", k - 1),
                &e[k - 2].compose(ep).compose(&e[k - 2]),
                &e[k - 2],
            );
            ch.eq(format!("e{k}' e{0} e{k}' = e{k}'", k - 1), &ep.compose(&e[k - 2]).compose(ep), ep);
            for i in 0..k.saturating_sub(2) {
                ch.commute(format!("e{} e{k}' commute", i + 1), &e[i], ep);
            }
            if let Some(e0) = &rep.e0 {
                ch.eq("e0^2 = beta e0", &e0.compose(e0), &e0.scale(&b));
                ch.eq("e1 e0 e1 = 2 e1", &e[0].compose(e0).compose(&e[0]), &e[0].scale(&two()));
                for i in 1..k {
                    ch.commute(format!("e0 e{} commute", i + 1), e0, &e[i]);
                }
                if k > 1 {
                    ch.commute(format!("e0 e{k}' commute"), e0, ep);
                }
            }
        }
    }
    ch.out
}

fn weight_name(i: usize) -> &'static str {
    if i % 2 == 1 {
        "beta"
    } else {
        "2"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> Pattern {
        Pattern::parse(s).unwrap()
    }

    #[test]
    fn little_arch_gives_beta() {
        let rep = build(AlgebraSpec::new(Kind::A, 6)).unwrap();
        let p = pat("(()())");
        let j = rep.index.get(&p).unwrap();
        assert_eq!(rep.e(2).col(j), &[(j, QLaurent::beta())]);
        // e3 joins the ends of the two inner arches
        let img = rep.index.get(&pat("((()))")).unwrap();
        assert_eq!(rep.e(3).col(j), &[(img, QLaurent::one())]);
    }

    #[test]
    fn c3_wall_squares_to_beta() {
        let rep = build(AlgebraSpec::new(Kind::C, 3)).unwrap();
        let w = rep.wall.as_ref().unwrap();
        assert_eq!(w.compose(w), w.scale(&QLaurent::beta()));
    }

    #[test]
    fn c_s_fixes_open_first_point() {
        let rep = build(AlgebraSpec::new(Kind::C, 3)).unwrap();
        let s = rep.s.as_ref().unwrap();
        let j = rep.index.get(&pat(".()")).unwrap();
        assert_eq!(s.col(j), &[(j, QLaurent::one())]);
        assert_eq!(s.compose(s), LinOp::identity(3));
    }

    #[test]
    fn d3_rows_match_solved_convention() {
        let rep = build(AlgebraSpec::new(Kind::D, 3)).unwrap();
        let ix = |s: &str| rep.index.get(&pat(s)).unwrap();
        let (a, b, c) = (ix("..."), ix(".()"), ix("()."));
        assert_eq!(rep.e(1).col(a), &[(c, QLaurent::one())]);
        assert_eq!(rep.e(1).col(b), &[(c, QLaurent::one())]);
        assert!(rep.e(2).col(a).is_empty());
        let e0 = rep.e0.as_ref().unwrap();
        assert_eq!(e0.col(c), &[(a, QLaurent::one()), (b, QLaurent::one())]);
    }

    #[test]
    fn rejects_bad_ranks() {
        assert!(build(AlgebraSpec::new(Kind::A, 5)).is_err());
        assert!(build(AlgebraSpec::new(Kind::D, 1)).is_err());
        assert!(build(AlgebraSpec::new(Kind::D, 4)).unwrap().e0.is_none());
    }

    #[test]
    fn a4_relations() {
        let rep = build(AlgebraSpec::new(Kind::A, 4)).unwrap();
        let bad: Vec<_> = validate_relations(&rep).into_iter().filter(|c| !c.ok()).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
