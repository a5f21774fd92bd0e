use super::{rat, CycloQ, Rat, Ring};

use std::fmt;

/// Laurent polynomial in q over the rationals.
///
/// Stored densely from the lowest exponent; both end coefficients are nonzero
/// and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QLaurent {
    lo: i32,
    c: Vec<Rat>,
}

impl QLaurent {
    fn normalize(mut self) -> Self {
        while self.c.last().is_some_and(Ring::is_zero) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead > 0 {
            self.c.drain(..lead);
            self.lo += lead as i32;
        }
        if self.c.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn mono(coef: Rat, k: i32) -> Self {
        QLaurent { lo: k, c: vec![coef] }.normalize()
    }

    /// q^k
    pub fn q_pow(k: i32) -> Self {
        Self::mono(Rat::one(), k)
    }

    pub fn constant(r: Rat) -> Self {
        Self::mono(r, 0)
    }

    /// β = −(q + q⁻¹)
    pub fn beta() -> Self {
        Self::from_terms([(-1, rat(-1)), (1, rat(-1))])
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rat)>>(terms: I) -> Self {
        let terms: Vec<(i32, Rat)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut c = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (k, v) in terms {
            c[(k - lo) as usize] += v;
        }
        QLaurent { lo, c }.normalize()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rat)> {
        let lo = self.lo;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(i, v)| (lo + i as i32, v))
    }

    pub fn coeff(&self, k: i32) -> Rat {
        let i = k - self.lo;
        if i < 0 || i as usize >= self.c.len() {
            Rat::zero()
        } else {
            self.c[i as usize].clone()
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        (!self.c.is_empty()).then_some(self.lo)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.c.is_empty()).then(|| self.lo + self.c.len() as i32 - 1)
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: i32) -> Self {
        if self.c.is_empty() {
            return self.clone();
        }
        QLaurent { lo: self.lo + k, c: self.c.clone() }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        QLaurent { lo: self.lo, c: self.c.iter().map(|x| x * r).collect() }
    }

    /// Image under q ↦ ω, ω a primitive cube root of unity.
    pub fn at_omega(&self) -> CycloQ {
        let mut parts = [Rat::zero(), Rat::zero(), Rat::zero()];
        for (k, v) in self.terms() {
            parts[k.rem_euclid(3) as usize] += v;
        }
        let [p0, p1, p2] = parts;
        // ω² = −1 − ω
        CycloQ::new(&p0 - &p2, &p1 - &p2)
    }

    /// Value at a nonzero rational q.
    pub fn at_rat(&self, q: &Rat) -> Option<Rat> {
        let mut acc = Rat::zero();
        for (k, v) in self.terms() {
            acc += v * Ring::pow(q, k as i64)?;
        }
        Some(acc)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.c.len() {
            0 => Some(Rat::zero()),
            1 if self.lo == 0 => Some(self.c[0].clone()),
            _ => None,
        }
    }
}

impl Ring for QLaurent {
    fn zero() -> Self {
        QLaurent { lo: 0, c: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(Rat::one())
    }

    fn from_rat(r: Rat) -> Self {
        Self::constant(r)
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        if self.c.is_empty() {
            return o.clone();
        }
        if o.c.is_empty() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = self.max_exp().unwrap().max(o.max_exp().unwrap());
        let mut c = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (i, v) in self.c.iter().enumerate() {
            c[(self.lo - lo) as usize + i] += v;
        }
        for (i, v) in o.c.iter().enumerate() {
            c[(o.lo - lo) as usize + i] += v;
        }
        QLaurent { lo, c }.normalize()
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.c.is_empty() || o.c.is_empty() {
            return Self::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        QLaurent { lo: self.lo + o.lo, c }.normalize()
    }

    fn neg(&self) -> Self {
        QLaurent { lo: self.lo, c: self.c.iter().map(|x| -x).collect() }
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.c.is_empty() {
            return None;
        }
        if self.c.is_empty() {
            return Some(Self::zero());
        }
        if self.c.len() < d.c.len() {
            return None;
        }
        // Both lowest coefficients are nonzero, so this is plain polynomial division.
        let mut rem = self.c.clone();
        let n = self.c.len() - d.c.len() + 1;
        let dl = d.c.last().unwrap();
        let mut quo = vec![Rat::zero(); n];
        for k in (0..n).rev() {
            let top = &rem[k + d.c.len() - 1];
            if top.is_zero() {
                continue;
            }
            let f = top / dl;
            for (j, dv) in d.c.iter().enumerate() {
                if !dv.is_zero() {
                    rem[k + j] -= &f * dv;
                }
            }
            quo[k] = f;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(QLaurent { lo: self.lo - d.lo, c: quo }.normalize())
    }

    fn add_assign(&mut self, o: &Self) {
        if o.c.is_empty() {
            return;
        }
        if self.c.is_empty() {
            *self = o.clone();
            return;
        }
        let (olo, ohi) = (o.lo, o.max_exp().unwrap());
        let (slo, shi) = (self.lo, self.max_exp().unwrap());
        if olo >= slo && ohi <= shi {
            for (i, v) in o.c.iter().enumerate() {
                self.c[(olo - slo) as usize + i] += v;
            }
            let done = std::mem::replace(self, Self::zero());
            *self = done.normalize();
        } else {
            *self = Ring::add(&*self, o);
        }
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in self.terms() {
            let neg = v < &Rat::zero();
            let a = if neg { -v.clone() } else { v.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = a == Rat::one();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !unit {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
