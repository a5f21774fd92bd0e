//! Level-one qKZ exchange systems: construction, worklist solution and verification.
//!
//! An exchange relation is a tuple (E, u, τ, P) meaning P · Ř(u) Ψ = τΨ with
//! Ř(u) = ((qu − q⁻¹) + (u − 1)E)/(q − q⁻¹u). Cleared of denominators:
//! P[(qu − q⁻¹)Ψ_π + (u − 1)(EΨ)_π] = (q − q⁻¹u) τΨ_π.

use crate::algebra::{build, AlgebraSpec, Kind, LinOp, Rep};
use crate::arith::{MultiPoly, QLaurent, Ring};
use crate::error::{integrity, usage, Error, Result};
use crate::patterns::{Pairing, Pattern, PatternIndex};
use crate::serial::SolutionFile;

pub type Poly = MultiPoly<QLaurent>;

/// Monomial substitution w_i ↦ q^{k_i} w^{v_i}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoMap {
    images: Vec<(i32, Vec<i32>)>,
}

impl MonoMap {
    pub fn identity(n: usize) -> Self {
        MonoMap { images: (0..n).map(|i| (0, unit(n, i, 1))).collect() }
    }

    pub fn swap(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::identity(n);
        m.images.swap(i, j);
        m
    }

    /// w_i ↦ q^k w_j^s.
    pub fn set(mut self, i: usize, k: i32, j: usize, s: i32) -> Self {
        let n = self.images.len();
        self.images[i] = (k, unit(n, j, s));
        self
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        let n = p.nvars();
        let terms = p.terms().map(|(e, c)| {
            let mut ne = vec![0; n];
            let mut k = 0;
            for (x, (qk, v)) in e.iter().zip(&self.images) {
                if *x != 0 {
                    k += x * qk;
                    for (t, vi) in ne.iter_mut().zip(v) {
                        *t += x * vi;
                    }
                }
            }
            (ne, c.shift(k))
        });
        MultiPoly::from_terms(n, terms).expect("consistent lengths")
    }

    /// `apply` in a ring where q has been sent to `q`.
    pub fn apply_in<S: Ring>(&self, p: &MultiPoly<S>, q: &S) -> MultiPoly<S> {
        let n = p.nvars();
        let mut cache: std::collections::HashMap<i32, S> = std::collections::HashMap::new();
        let mut terms = Vec::with_capacity(p.len());
        for (e, c) in p.terms() {
            let mut ne = vec![0; n];
            let mut k = 0;
            for (x, (qk, v)) in e.iter().zip(&self.images) {
                if *x != 0 {
                    k += x * qk;
                    for (t, vi) in ne.iter_mut().zip(v) {
                        *t += x * vi;
                    }
                }
            }
            let f = cache.entry(k).or_insert_with(|| q.pow(k as i64).expect("q invertible"));
            terms.push((ne, c.mul(f)));
        }
        MultiPoly::from_terms(n, terms).expect("consistent lengths")
    }
}

fn unit(n: usize, i: usize, s: i32) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = s;
    v
}

/// c·q^k·w^e as a polynomial.
pub fn mono(n: usize, c: i64, k: i32, e: &[(usize, i32)]) -> Poly {
    let mut v = vec![0; n];
    for &(i, x) in e {
        v[i] += x;
    }
    MultiPoly::monomial(v, QLaurent::q_pow(k).scale(&crate::arith::rat(c)))
}

fn sum(n: usize, ts: &[Poly]) -> Poly {
    ts.iter().fold(MultiPoly::zero(n), |a, t| &a + t)
}

/// q w_i − q⁻¹ w_j.
pub fn qw(n: usize, i: usize, j: usize) -> Poly {
    sum(n, &[mono(n, 1, 1, &[(i, 1)]), mono(n, -1, -1, &[(j, 1)])])
}

fn product(n: usize, fs: impl IntoIterator<Item = Poly>) -> Poly {
    fs.into_iter().fold(MultiPoly::one(n), |a, f| &a * &f)
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub op: LinOp,
    pub u: Poly,
    pub tau: MonoMap,
    pub pre: Poly,
}

/// left · (MΨ)_π = right · τ(Ψ_π) for every π; M defaults to the identity.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: String,
    pub op: Option<LinOp>,
    pub left: Poly,
    pub right: Poly,
    pub tau: MonoMap,
}

pub fn apply_op(op: &LinOp, psi: &[Poly]) -> Vec<Poly> {
    apply_op_in(op, psi, &|c: &QLaurent| c.clone())
}

/// A representation together with its exchange relations and base entry.
#[derive(Clone, Debug)]
pub struct System {
    pub rep: Rep,
    pub nvars: usize,
    pub relations: Vec<Relation>,
    pub base_pattern: Pattern,
    pub base: Poly,
}

impl System {
    pub fn new(spec: AlgebraSpec) -> Result<Self> {
        if matches!(spec.kind, Kind::C | Kind::D) && spec.rank % 2 == 0 {
            return usage(format!("type {} systems are solved at odd rank; even rank comes from specialize_down", spec.kind));
        }
        let rep = build(spec)?;
        let r = spec.rank;
        let mut relations = Vec::new();
        for (i, e) in rep.e.iter().enumerate() {
            relations.push(Relation {
                name: format!("e{}", i + 1),
                op: e.clone(),
                u: mono(r, 1, 0, &[(i + 1, 1), (i, -1)]),
                tau: MonoMap::swap(r, i, i + 1),
                pre: MultiPoly::one(r),
            });
        }
        let m = r as i32 - 1;
        let (base_pattern, base) = match spec.kind {
            Kind::A | Kind::B => (Pattern::rainbow(r), closed_base(spec.kind, r)),
            Kind::C | Kind::D => (Pattern::all_open(r), product(r, pairs(0, r).map(|(i, j)| qw(r, i, j)))),
        };
        match spec.kind {
            Kind::A | Kind::B => {}
            Kind::C => relations.push(Relation {
                name: format!("e{r}"),
                op: rep.wall.clone().unwrap(),
                u: mono(r, 1, 0, &[(r - 1, -2)]),
                tau: MonoMap::identity(r).set(r - 1, 0, r - 1, -1),
                pre: mono(r, 1, 0, &[(r - 1, -m)]),
            }),
            Kind::D => {
                relations.push(Relation {
                    name: format!("e{}'", r - 1),
                    op: rep.conj.clone().unwrap(),
                    u: mono(r, 1, 0, &[(r - 2, -1), (r - 1, -1)]),
                    tau: MonoMap::identity(r).set(r - 2, 0, r - 1, -1).set(r - 1, 0, r - 2, -1),
                    pre: mono(r, 1, 0, &[(r - 2, -m), (r - 1, -m)]),
                });
                relations.push(Relation {
                    name: "e0".into(),
                    op: rep.e0.clone().unwrap(),
                    u: mono(r, 1, 6, &[(0, 2)]),
                    tau: MonoMap::identity(r).set(0, -6, 0, -1),
                    pre: mono(r, 1, -3 * m, &[(0, -m)]),
                });
            }
        }
        Ok(System { rep, nvars: r, relations, base_pattern, base })
    }

    pub fn index(&self) -> &PatternIndex {
        &self.rep.index
    }

    pub fn kind(&self) -> Kind {
        self.rep.spec.kind
    }

    pub fn solve(&self) -> Result<Solution> {
        self.solve_ordered(false)
    }

    /// Worklist elimination. With `reverse`, relations and patterns are scanned backwards.
    pub fn solve_ordered(&self, reverse: bool) -> Result<Solution> {
        let entries = self.solve_in(reverse, &QLaurent::q_pow(1), &|c: &QLaurent| c.clone())?;
        Ok(Solution { spec: self.rep.spec, patterns: self.index().patterns().to_vec(), entries })
    }

    /// Solves after pushing all coefficients through a ring map `hom` that sends q to `q`.
    ///
    /// Pivots are chosen from the generic matrices, so the result is the image of the
    /// generic solution whenever every division stays exact.
    pub fn solve_in<S: Ring>(&self, reverse: bool, q: &S, hom: &dyn Fn(&QLaurent) -> S) -> Result<Vec<MultiPoly<S>>> {
        let idx = self.index();
        let dim = idx.len();
        let n = self.nvars;
        let mut psi: Vec<Option<MultiPoly<S>>> = vec![None; dim];
        psi[idx.get(&self.base_pattern).expect("base pattern in basis")] = Some(self.base.map_coeffs(hom));
        let mut known = 1;
        let beta = QLaurent::beta();
        let rels: Vec<_> = self.relations.iter().map(|rel| (SRel::new(rel, n, q, hom), rel.op.rows())).collect();
        let mut order: Vec<usize> = (0..rels.len()).collect();
        let mut pats: Vec<usize> = (0..dim).collect();
        if reverse {
            order.reverse();
            pats.reverse();
        }
        let mut progress = true;
        while progress && known < dim {
            progress = false;
            for &ri in &order {
                let (rel, rw) = &rels[ri];
                for &p in &pats {
                    let Some(pp) = &psi[p] else { continue };
                    let row = &rw[p];
                    if !row.iter().any(|(j, c)| *j == p && *c == beta) {
                        continue;
                    }
                    let mut unknown = row.iter().filter(|(j, _)| *j != p && psi[*j].is_none());
                    let (Some((target, coef)), None) = (unknown.next(), unknown.next()) else {
                        continue;
                    };
                    let mut x = rel.exchange_lhs(pp)?;
                    for (j, c) in row {
                        if *j != p && *j != *target {
                            x = &x - &psi[*j].as_ref().unwrap().scale(&hom(c));
                        }
                    }
                    let val = x.div_exact(&MultiPoly::constant(n, hom(coef)))?;
                    psi[*target] = Some(val);
                    known += 1;
                    progress = true;
                }
            }
        }
        if known < dim {
            let missing = (0..dim).filter(|&i| psi[i].is_none()).map(|i| idx.pattern(i).text()).collect();
            return Err(Error::Stuck(missing));
        }
        Ok(psi.into_iter().map(Option::unwrap).collect())
    }

    /// Checks one exchange relation on all components; returns the failing indices.
    pub fn check_relation(&self, rel: &Relation, psi: &[Poly]) -> Vec<usize> {
        check_relation_in(rel, psi, &QLaurent::q_pow(1), &|c: &QLaurent| c.clone())
    }

    /// Boundary and cyclic identities beyond the exchange relations.
    pub fn identities(&self) -> Vec<Identity> {
        let r = self.nvars;
        let m = r as i32 - 1;
        let mut out = Vec::new();
        match self.kind() {
            Kind::A => {
                let n = (r / 2) as i32;
                let mut tau = MonoMap::identity(r);
                for i in 0..r {
                    tau = if i + 1 < r { tau.set(i, 0, i + 1, 1) } else { tau.set(i, 6, 0, 1) };
                }
                out.push(Identity {
                    name: "affine rotation".into(),
                    op: Some(self.rep.rot.as_ref().unwrap().transpose()),
                    left: mono(r, 1, 3 * (n - 1), &[]),
                    right: MultiPoly::one(r),
                    tau,
                });
            }
            Kind::B => {
                let w = r - 1;
                out.push(Identity {
                    name: "right boundary".into(),
                    op: None,
                    left: &mono(r, 1, 0, &[(w, -m)]) * &(&mono(r, 1, -1, &[(w, 1)]) - &mono(r, 1, 1, &[])),
                    right: &mono(r, 1, -1, &[]) - &mono(r, 1, 1, &[(w, 1)]),
                    tau: MonoMap::identity(r).set(w, 0, w, -1),
                });
                out.push(Identity {
                    name: "left boundary".into(),
                    op: None,
                    left: &mono(r, 1, -3 * m, &[(0, -m)]) * &(&mono(r, 1, -2, &[]) - &mono(r, 1, 2, &[(0, 1)])),
                    right: &mono(r, 1, 1, &[(0, 1)]) - &mono(r, 1, -1, &[]),
                    tau: MonoMap::identity(r).set(0, -6, 0, -1),
                });
            }
            Kind::C => {
                out.push(c_left_identity(r, m, self.rep.s.clone().unwrap()));
            }
            Kind::D => {}
        }
        out
    }

    /// Extra exchange relations that are verified but not used for solving.
    pub fn extra_relations(&self) -> Vec<Relation> {
        let r = self.nvars;
        let m = r as i32 - 1;
        match self.kind() {
            Kind::C if r >= 2 => vec![Relation {
                name: "e1'".into(),
                op: self.rep.conj.clone().unwrap(),
                u: mono(r, 1, 6, &[(0, 1), (1, 1)]),
                tau: MonoMap::identity(r).set(0, -6, 1, -1).set(1, -6, 0, -1),
                pre: mono(r, 1, -6 * m, &[(0, -m), (1, -m)]),
            }],
            _ => Vec::new(),
        }
    }

    /// Every equation of the system: (name, failing pattern texts).
    pub fn verify(&self, sol: &Solution) -> Result<Vec<(String, Vec<String>)>> {
        if sol.patterns.as_slice() != self.index().patterns() {
            return integrity("solution patterns differ from the basis");
        }
        if sol.entries.iter().any(|e| e.nvars() != self.nvars) {
            return integrity("entry variable count differs from rank");
        }
        let names = |v: Vec<usize>| v.into_iter().map(|i| sol.patterns[i].text()).collect::<Vec<_>>();
        let mut out = Vec::new();
        for rel in self.relations.iter().chain(&self.extra_relations()) {
            out.push((rel.name.clone(), names(self.check_relation(rel, &sol.entries))));
        }
        for id in self.identities() {
            out.push((id.name.clone(), names(check_identity(&id, &sol.entries))));
        }
        Ok(out)
    }
}

/// A relation with coefficients mapped into S.
struct SRel<S> {
    u: MultiPoly<S>,
    pre: MultiPoly<S>,
    tau: MonoMap,
    q: S,
    qinv: S,
    n: usize,
}

impl<S: Ring> SRel<S> {
    fn new(rel: &Relation, n: usize, q: &S, hom: &dyn Fn(&QLaurent) -> S) -> Self {
        SRel {
            u: rel.u.map_coeffs(hom),
            pre: rel.pre.map_coeffs(hom),
            tau: rel.tau.clone(),
            q: q.clone(),
            qinv: S::one().div_exact(q).expect("q invertible"),
            n,
        }
    }

    /// X = (q − q⁻¹u)(τΨ_π/P − Ψ_π)/(u − 1), which equals Σ_{π' ≠ π} E_{ππ'} Ψ_{π'} when E_{ππ} = β.
    fn exchange_lhs(&self, p: &MultiPoly<S>) -> Result<MultiPoly<S>> {
        let n = self.n;
        let t = self.tau.apply_in(p, &self.q).div_exact(&self.pre)?;
        let a = &MultiPoly::constant(n, self.q.clone()) - &self.u.scale(&self.qinv);
        let num = &a * &(&t - p);
        num.div_exact(&(&self.u - &MultiPoly::one(n)))
    }
}

pub fn apply_op_in<S: Ring>(op: &LinOp, psi: &[MultiPoly<S>], hom: &dyn Fn(&QLaurent) -> S) -> Vec<MultiPoly<S>> {
    let n = psi[0].nvars();
    let mut out = vec![MultiPoly::zero(n); psi.len()];
    for (j, p) in psi.iter().enumerate() {
        for (i, c) in op.col(j) {
            out[*i] = &out[*i] + &p.scale(&hom(c));
        }
    }
    out
}

/// P[(qu − q⁻¹)Ψ_π + (u − 1)(EΨ)_π] = (q − q⁻¹u)τΨ_π in the image ring; returns failing indices.
pub fn check_relation_in<S: Ring>(
    rel: &Relation,
    psi: &[MultiPoly<S>],
    q: &S,
    hom: &dyn Fn(&QLaurent) -> S,
) -> Vec<usize> {
    let n = psi[0].nvars();
    let sr = SRel::new(rel, n, q, hom);
    let ep = apply_op_in(&rel.op, psi, hom);
    let a = &sr.u.scale(q) - &MultiPoly::constant(n, sr.qinv.clone());
    let b = &sr.u - &MultiPoly::one(n);
    let c = &MultiPoly::constant(n, q.clone()) - &sr.u.scale(&sr.qinv);
    (0..psi.len())
        .filter(|&i| {
            let lhs = &sr.pre * &(&(&a * &psi[i]) + &(&b * &ep[i]));
            let rhs = &c * &sr.tau.apply_in(&psi[i], q);
            lhs != rhs
        })
        .collect()
}

fn c_left_identity(r: usize, m: i32, s: LinOp) -> Identity {
    Identity {
        name: "left boundary".into(),
        op: Some(s),
        left: mono(r, 1, -3 * m, &[(0, -m)]),
        right: MultiPoly::one(r),
        tau: MonoMap::identity(r).set(0, -6, 0, -1),
    }
}

pub fn check_identity(id: &Identity, psi: &[Poly]) -> Vec<usize> {
    let mpsi = match &id.op {
        Some(op) => apply_op(op, psi),
        None => psi.to_vec(),
    };
    (0..psi.len()).filter(|&i| &id.left * &mpsi[i] != &id.right * &id.tau.apply(&psi[i])).collect()
}

fn pairs(lo: usize, hi: usize) -> impl Iterator<Item = (usize, usize)> {
    (lo..hi).flat_map(move |i| (i + 1..hi).map(move |j| (i, j)))
}

fn closed_base(kind: Kind, r: usize) -> Poly {
    let n = r / 2;
    let mut fs: Vec<Poly> = Vec::new();
    if kind == Kind::B {
        fs.push(MultiPoly::constant(r, QLaurent::from_int(1 << n)));
        for i in 0..r {
            fs.push(&mono(r, 1, 1, &[(i, 1)]) - &mono(r, 1, -1, &[]));
        }
    }
    for (i, j) in pairs(0, n) {
        fs.push(qw(r, i, j));
        if kind == Kind::B {
            fs.push(&mono(r, 1, -2, &[]) - &mono(r, 1, 2, &[(i, 1), (j, 1)]));
        }
    }
    for (i, j) in pairs(n, r) {
        fs.push(qw(r, i, j));
        if kind == Kind::B {
            fs.push(&mono(r, 1, 1, &[(i, 1), (j, 1)]) - &mono(r, 1, -1, &[]));
        }
    }
    product(r, fs)
}

/// Ψ with its pattern list in basis order.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub spec: AlgebraSpec,
    pub patterns: Vec<Pattern>,
    pub entries: Vec<Poly>,
}

impl Solution {
    pub fn get(&self, p: &Pattern) -> Option<&Poly> {
        self.patterns.iter().position(|x| x == p).map(|i| &self.entries[i])
    }

    pub fn to_file(&self) -> SolutionFile {
        SolutionFile {
            kind: self.spec.kind,
            rank: self.spec.rank,
            pairing: self.spec.pairing,
            patterns: self.patterns.clone(),
            entries: self.entries.clone(),
        }
    }

    pub fn from_file(f: SolutionFile) -> Self {
        Solution {
            spec: AlgebraSpec { kind: f.kind, rank: f.rank, pairing: f.pairing },
            patterns: f.patterns,
            entries: f.entries,
        }
    }

    /// Specialization from rank r to r − 1.
    ///
    /// C: w_r = −q⁻¹, then divide by ∏_{i<r}(1 + q³w_i); entries with point r closed vanish.
    /// D: w₁ = −q⁻², then divide by ∏_{i>1}(1 + w_i); entries with point 1 closed vanish.
    pub fn specialize_down(&self) -> Result<Solution> {
        let r = self.spec.rank;
        let (var, k, drop_point) = match self.spec.kind {
            Kind::C => (r - 1, -1, r - 1),
            Kind::D => (0, -2, 0),
            k => return usage(format!("no specialization for type {k}")),
        };
        let coef = QLaurent::q_pow(k).neg();
        let zero = vec![0; r];
        let div = product(
            r,
            (0..r).filter(|&i| i != var).map(|i| match self.spec.kind {
                Kind::C => &MultiPoly::one(r) + &mono(r, 1, 3, &[(i, 1)]),
                _ => &MultiPoly::one(r) + &mono(r, 1, 0, &[(i, 1)]),
            }),
        );
        let mut out = Vec::new();
        for (p, f) in self.patterns.iter().zip(&self.entries) {
            let g = f.substitute(var, &coef, &zero)?;
            if g.is_zero() {
                continue;
            }
            if !p.is_open(drop_point) {
                return integrity(format!("{p} survives with point {} closed", drop_point + 1));
            }
            let h = g.div_exact(&div)?.drop_var(var)?;
            out.push((p.remove_open(drop_point)?, h));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        let want = crate::patterns::enumerate_open(r - 1);
        let got: Vec<Pattern> = out.iter().map(|x| x.0.clone()).collect();
        let entries = want
            .iter()
            .map(|p| match got.binary_search(p) {
                Ok(i) => out[i].1.clone(),
                Err(_) => MultiPoly::zero(r - 1),
            })
            .collect();
        Ok(Solution {
            spec: AlgebraSpec { kind: self.spec.kind, rank: r - 1, pairing: Pairing::Right },
            patterns: want.patterns().to_vec(),
            entries,
        })
    }
}

/// Exchange checks for a specialized even-rank solution: the bulk e_i for C and D,
/// plus the left boundary identity for C.
pub fn verify_reduced(sol: &Solution) -> Result<Vec<(String, Vec<String>)>> {
    let r = sol.spec.rank;
    let rep = match sol.spec.kind {
        Kind::C => build(AlgebraSpec::new(Kind::C, r))?,
        Kind::D => build(AlgebraSpec::new(Kind::D, r))?,
        k => return usage(format!("no reduced system for type {k}")),
    };
    let sys = System {
        nvars: r,
        relations: Vec::new(),
        base_pattern: Pattern::all_open(r),
        base: MultiPoly::zero(r),
        rep,
    };
    let names = |v: Vec<usize>| v.into_iter().map(|i| sol.patterns[i].text()).collect::<Vec<_>>();
    let mut out = Vec::new();
    for (i, e) in sys.rep.e.iter().enumerate() {
        let rel = Relation {
            name: format!("e{}", i + 1),
            op: e.clone(),
            u: mono(r, 1, 0, &[(i + 1, 1), (i, -1)]),
            tau: MonoMap::swap(r, i, i + 1),
            pre: MultiPoly::one(r),
        };
        out.push((rel.name.clone(), names(sys.check_relation(&rel, &sol.entries))));
    }
    if sol.spec.kind == Kind::C {
        let m = sol.entries.iter().filter_map(|e| e.degree_in(0)).max().unwrap_or(0);
        let id = c_left_identity(r, m, sys.rep.s.clone().unwrap());
        out.push((id.name.clone(), names(check_identity(&id, &sol.entries))));
    }
    Ok(out)
}
