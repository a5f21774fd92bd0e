use super::{ratio, MultiPoly, QLaurent, Rat, Ring};

/// Power series in ħ truncated after `order`, with coefficients polynomial in
/// z₁..z_r, A (A is the last variable).
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<MultiPoly<Rat>>,
}

impl TruncSeries {
    pub fn zero(nvars: usize, order: usize) -> Self {
        TruncSeries { order, coeffs: vec![MultiPoly::zero(nvars); order + 1] }
    }

    pub fn one(nvars: usize, order: usize) -> Self {
        let mut s = Self::zero(nvars, order);
        s.coeffs[0] = MultiPoly::one(nvars);
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of ħ^k.
    pub fn coeff(&self, k: usize) -> &MultiPoly<Rat> {
        &self.coeffs[k]
    }

    /// exp(−ħL) truncated.
    pub fn exp_neg(l: &MultiPoly<Rat>, order: usize) -> Self {
        let mut s = Self::one(l.nvars(), order);
        let ml = -l;
        for k in 1..=order {
            s.coeffs[k] = (&s.coeffs[k - 1] * &ml).scale(&ratio(1, k as i64));
        }
        s
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect();
        TruncSeries { order, coeffs }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncSeries { order: self.order, coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let n = self.coeffs[0].nvars();
        let mut coeffs = vec![MultiPoly::zero(n); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !o.coeffs[j].is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &o.coeffs[j]);
                }
            }
        }
        TruncSeries { order, coeffs }
    }

    /// Lowest k with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

/// The exponent L of one term c·q^a·∏w_i^{e_i} under q = −e^{−ħA/2}, w_i = e^{−ħz_i},
/// as a linear form in z₁..z_r, A. The term becomes c·(−1)^a·exp(−ħL).
fn linear_form(e: &[i32], a: i32) -> MultiPoly<Rat> {
    let n = e.len() + 1;
    let mut terms: Vec<(Vec<i32>, Rat)> = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        if k != 0 {
            let mut x = vec![0; n];
            x[i] = 1;
            terms.push((x, Rat::from_int(k as i64)));
        }
    }
    if a != 0 {
        let mut x = vec![0; n];
        x[n - 1] = 1;
        terms.push((x, ratio(a as i64, 2)));
    }
    MultiPoly::from_terms(n, terms).expect("consistent lengths")
}

/// Expansion of a q, w polynomial in ħ up to `order`.
pub fn rational_jet(p: &MultiPoly<QLaurent>, order: usize) -> TruncSeries {
    let n = p.nvars() + 1;
    let mut acc = TruncSeries::zero(n, order);
    for (e, c) in p.terms() {
        for (a, v) in c.terms() {
            let sign = if a.rem_euclid(2) == 0 { Rat::one() } else { -Rat::one() };
            let l = linear_form(e, a);
            acc = acc.add(&TruncSeries::exp_neg(&l, order).scale(&(v * sign)));
        }
    }
    acc
}

/// Only the ħ^d coefficient: (−1)^d/d! · Σ c(−1)^a L^d.
pub fn leading_jet(p: &MultiPoly<QLaurent>, d: usize) -> MultiPoly<Rat> {
    let n = p.nvars() + 1;
    let mut acc = MultiPoly::zero(n);
    let mut fact = Rat::one();
    for k in 1..=d {
        fact *= Rat::from_int(k as i64);
    }
    for (e, c) in p.terms() {
        for (a, v) in c.terms() {
            let neg = (a.rem_euclid(2) == 1) ^ (d % 2 == 1);
            let l = linear_form(e, a).pow(d as u32);
            let f = if neg { -v.clone() } else { v.clone() };
            acc = &acc + &l.scale(&f);
        }
    }
    acc.scale(&(Rat::one() / fact))
}
