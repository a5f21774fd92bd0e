use super::Ring;
use crate::error::{integrity, usage, Result};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Term<S> = (Vec<i32>, S);

/// Sparse multivariate Laurent polynomial, terms kept in lexicographic order
/// of the exponent vector. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<S> {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, S>,
}

fn accumulate<S: Ring>(map: &mut BTreeMap<Vec<i32>, S>, e: Vec<i32>, c: S) {
    if c.is_zero() {
        return;
    }
    match map.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            o.get_mut().add_assign(&c);
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn accumulate_neg<S: Ring>(map: &mut BTreeMap<Vec<i32>, S>, e: Vec<i32>, c: S) {
    match map.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c.neg());
        }
        Entry::Occupied(mut o) => {
            o.get_mut().sub_assign(&c);
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl<S: Ring> MultiPoly<S> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, S::one())
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Vec<i32>, c: S) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable with 0-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, S::one())
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = Term<S>>>(nvars: usize, terms: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != nvars {
                return usage(format!("exponent vector of length {} in a {nvars}-variable polynomial", e.len()));
            }
            accumulate(&mut map, e, c);
        }
        Ok(MultiPoly { nvars, terms: map })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i32>, &S)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i32]) -> S {
        self.terms.get(e).cloned().unwrap_or_else(S::zero)
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<(&Vec<i32>, &S)> {
        self.terms.last_key_value()
    }

    fn same_vars(&self, o: &Self) -> Result<()> {
        if self.nvars != o.nvars {
            return usage(format!("variable count mismatch: {} vs {}", self.nvars, o.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.same_vars(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            accumulate(&mut r.terms, e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.same_vars(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            accumulate_neg(&mut r.terms, e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.same_vars(o)?;
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        if small.len() == 1 {
            let (e, c) = small.leading().unwrap();
            return Ok(big.mul_term(e, c));
        }
        let mut map = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                accumulate(&mut map, e, ca.mul(cb));
            }
        }
        Ok(MultiPoly { nvars: self.nvars, terms: map })
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, v)| {
                let p = v.mul(c);
                (!p.is_zero()).then(|| (e.clone(), p))
            })
            .collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    /// Multiplies by c·w^e. Shifting exponents preserves lexicographic order.
    pub fn mul_term(&self, e: &[i32], c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(k, v)| {
                let p = v.mul(c);
                (!p.is_zero()).then(|| (k.iter().zip(e).map(|(x, y)| x + y).collect::<Vec<_>>(), p))
            })
            .collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient in the Laurent ring.
    ///
    /// Lexicographic leading-term division. The exponents of any true quotient lie in
    /// the box `[min_j p − min_j d, max_j p − max_j d]`; leaving the box means `d ∤ p`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        self.same_vars(d)?;
        if d.is_zero() {
            return integrity("division by the zero polynomial");
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let n = self.nvars;
        if d.len() == 1 {
            let (de, dc) = d.leading().unwrap();
            let mut terms = BTreeMap::new();
            for (e, c) in &self.terms {
                let Some(v) = c.div_exact(dc) else {
                    return integrity(format!("coefficient {c:?} not divisible by {dc:?}"));
                };
                terms.insert(e.iter().zip(de).map(|(x, y)| x - y).collect(), v);
            }
            return Ok(MultiPoly { nvars: n, terms });
        }
        let (plo, phi) = self.exponent_box();
        let (dlo, dhi) = d.exponent_box();
        let lo: Vec<i32> = (0..n).map(|j| plo[j] - dlo[j]).collect();
        let hi: Vec<i32> = (0..n).map(|j| phi[j] - dhi[j]).collect();
        if (0..n).any(|j| lo[j] > hi[j]) {
            return integrity("divisor exponent range exceeds dividend");
        }
        let (lde, ldc) = d.leading().unwrap();
        let lde = lde.clone();
        let mut rem = self.terms.clone();
        let mut quo = BTreeMap::new();
        while let Some((lt, lc)) = rem.last_key_value() {
            let m: Vec<i32> = lt.iter().zip(&lde).map(|(a, b)| a - b).collect();
            if (0..n).any(|j| m[j] < lo[j] || m[j] > hi[j]) {
                return integrity("polynomial division is not exact");
            }
            let Some(c) = lc.div_exact(ldc) else {
                return integrity(format!("leading coefficient {lc:?} not divisible by {ldc:?}"));
            };
            for (de, dc) in &d.terms {
                let k: Vec<i32> = m.iter().zip(de).map(|(a, b)| a + b).collect();
                accumulate_neg(&mut rem, k, c.mul(dc));
            }
            quo.insert(m, c);
        }
        Ok(MultiPoly { nvars: n, terms: quo })
    }

    /// Per-variable minimum and maximum exponents. Panics on the zero polynomial.
    pub fn exponent_box(&self) -> (Vec<i32>, Vec<i32>) {
        let mut lo = vec![i32::MAX; self.nvars];
        let mut hi = vec![i32::MIN; self.nvars];
        for e in self.terms.keys() {
            for j in 0..self.nvars {
                lo[j] = lo[j].min(e[j]);
                hi[j] = hi[j].max(e[j]);
            }
        }
        (lo, hi)
    }

    pub fn degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn min_degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).min()
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<i32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    /// Substitutes w_var ↦ coef · w^mono. `mono` may involve `var` itself.
    ///
    /// Negative powers of the image need an invertible `coef`; a zero image is
    /// allowed only when `var` appears with nonnegative exponents.
    pub fn substitute(&self, var: usize, coef: &S, mono: &[i32]) -> Result<Self> {
        if var >= self.nvars || mono.len() != self.nvars {
            return usage("substitution variable out of range");
        }
        let mut powers: BTreeMap<i32, S> = BTreeMap::new();
        let mut map = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[var];
            let f = match powers.get(&k) {
                Some(f) => f.clone(),
                None => {
                    let Some(f) = coef.pow(k as i64) else {
                        return usage("non-invertible substitution into a negative exponent");
                    };
                    powers.insert(k, f.clone());
                    f
                }
            };
            let mut ne = e.clone();
            ne[var] = 0;
            for j in 0..self.nvars {
                ne[j] += k * mono[j];
            }
            accumulate(&mut map, ne, c.mul(&f));
        }
        Ok(MultiPoly { nvars: self.nvars, terms: map })
    }

    /// Exchanges variables i and j.
    pub fn swap(&self, i: usize, j: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i, j);
                (e, c.clone())
            })
            .collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    /// Generic monomial map: each exponent vector is replaced by `f(e)`.
    pub fn map_exponents(&self, nvars: usize, f: impl Fn(&[i32]) -> Vec<i32>) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in &self.terms {
            accumulate(&mut map, f(e), c.clone());
        }
        MultiPoly { nvars, terms: map }
    }

    pub fn map_coeffs<T: Ring>(&self, f: impl Fn(&S) -> T) -> MultiPoly<T> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let v = f(c);
                (!v.is_zero()).then(|| (e.clone(), v))
            })
            .collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    /// Evaluates at a full assignment of the variables.
    pub fn eval(&self, values: &[S]) -> Result<S> {
        if values.len() != self.nvars {
            return usage("assignment length differs from the variable count");
        }
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in values.iter().zip(e) {
                if k != 0 {
                    let Some(p) = x.pow(k as i64) else {
                        return usage("zero assigned to a variable with negative exponent");
                    };
                    t = t.mul(&p);
                }
            }
            acc.add_assign(&t);
        }
        Ok(acc)
    }

    /// Sum of coefficients, i.e. the value at w = (1,…,1).
    pub fn coeff_sum(&self) -> S {
        let mut acc = S::zero();
        for c in self.terms.values() {
            acc.add_assign(c);
        }
        acc
    }

    /// (τ_i p − p)/(w_{i+1} − w_i) for 0-based i, with τ_i exchanging w_i, w_{i+1}.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        if i + 1 >= self.nvars {
            return usage("divided difference site out of range");
        }
        let num = self.swap(i, i + 1).try_sub(self)?;
        let den = Self::var(self.nvars, i + 1).try_sub(&Self::var(self.nvars, i))?;
        num.div_exact(&den)
    }

    /// Appends `k` fresh variables at the end.
    pub fn extend_vars(&self, k: usize) -> Self {
        let n = self.nvars + k;
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(n, 0);
                (e, c.clone())
            })
            .collect();
        MultiPoly { nvars: n, terms }
    }

    /// Removes variable `i`, which must not occur.
    pub fn drop_var(&self, i: usize) -> Result<Self> {
        if self.terms.keys().any(|e| e[i] != 0) {
            return usage("dropping a variable that occurs");
        }
        Ok(self.map_exponents(self.nvars - 1, |e| {
            let mut e = e.to_vec();
            e.remove(i);
            e
        }))
    }

    /// Text form with the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a
    where
        S: fmt::Display,
    {
        Shown { p: self, names }
    }
}

struct Shown<'a, S> {
    p: &'a MultiPoly<S>,
    names: &'a [String],
}

impl<S: Ring + fmt::Display> fmt::Display for Shown<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.p.terms.iter().rev().enumerate() {
            let cs = c.to_string();
            // single-token coefficients print bare, sums go in parentheses
            let simple = !cs.contains(' ');
            let neg = simple && cs.starts_with('-');
            let mag = if neg { &cs[1..] } else { cs.as_str() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(j, &x)| if x == 1 { self.names[j].clone() } else { format!("{}^{x}", self.names[j]) })
                .collect();
            let coef = if simple { mag.to_string() } else { format!("({cs})") };
            if mono.is_empty() {
                write!(f, "{coef}")?;
            } else if mag == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{coef}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<S: Ring> fmt::Debug for MultiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<S: Ring> Add for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn add(self, o: Self) -> MultiPoly<S> {
        self.try_add(o).expect("variable count mismatch")
    }
}

impl<S: Ring> Sub for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn sub(self, o: Self) -> MultiPoly<S> {
        self.try_sub(o).expect("variable count mismatch")
    }
}

impl<S: Ring> Mul for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn mul(self, o: Self) -> MultiPoly<S> {
        self.try_mul(o).expect("variable count mismatch")
    }
}

impl<S: Ring> Neg for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect();
        MultiPoly { nvars: self.nvars, terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, QLaurent, Rat};

    type P = MultiPoly<Rat>;

    fn w(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    #[test]
    fn laurent_inverse_monomial() {
        let a = P::monomial(vec![1], rat(1));
        let b = P::monomial(vec![-1], rat(1));
        assert_eq!(&a * &b, P::one(1));
        assert!((&a * &P::zero(1)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&w(2, 1) * &w(2, 1)) - &(&w(2, 0) * &w(2, 0));
        let d = &w(2, 1) - &w(2, 0);
        assert_eq!(p.div_exact(&d).unwrap(), &w(2, 0) + &w(2, 1));
        assert!(P::zero(2).div_exact(&d).unwrap().is_zero());
    }

    #[test]
    fn inexact_division_is_integrity_error() {
        let p = &(&w(2, 0) * &w(2, 0)) + &w(2, 1);
        let d = &w(2, 1) - &w(2, 0);
        assert!(matches!(p.div_exact(&d), Err(crate::Error::Integrity(_))));
    }

    #[test]
    fn mismatched_variables() {
        assert!(matches!(w(2, 0).try_add(&w(3, 0)), Err(crate::Error::Usage(_))));
    }

    #[test]
    fn substitutions() {
        // qw₁ − q⁻¹w₂ under w₁ ↦ 1/(q⁶w₁)
        let q = |k| QLaurent::q_pow(k);
        let p = MultiPoly::from_terms(2, [(vec![1, 0], q(1)), (vec![0, 1], q(-1).neg())]).unwrap();
        let s = p.substitute(0, &q(-6), &[-1, 0]).unwrap();
        let want = MultiPoly::from_terms(2, [(vec![-1, 0], q(-5)), (vec![0, 1], q(-1).neg())]).unwrap();
        assert_eq!(s, want);
        // w₁w₂ under w₂ ↦ q⁶w₁
        let m = MultiPoly::monomial(vec![1, 1], QLaurent::one());
        assert_eq!(m.substitute(1, &q(6), &[1, 0]).unwrap(), MultiPoly::monomial(vec![2, 0], q(6)));
        // zero into a negative exponent
        let inv = P::monomial(vec![-1], rat(1));
        assert!(matches!(inv.substitute(0, &rat(0), &[0]), Err(crate::Error::Usage(_))));
    }

    #[test]
    fn divided_differences() {
        assert_eq!(w(2, 0).divided_difference(0).unwrap(), P::one(2));
        let sq = &w(2, 0) * &w(2, 0);
        assert_eq!(sq.divided_difference(0).unwrap(), &w(2, 0) + &w(2, 1));
        let sym = &w(2, 0) * &w(2, 1);
        assert!(sym.divided_difference(0).unwrap().is_zero());
    }

    #[test]
    fn evaluation() {
        let p = &w(2, 0) - &w(2, 1);
        assert_eq!(p.eval(&[rat(3), rat(5)]).unwrap(), rat(-2));
        let inv = P::monomial(vec![-1, 0], rat(1));
        assert!(inv.eval(&[rat(0), rat(1)]).is_err());
    }
}
