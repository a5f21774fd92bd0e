use super::{Rat, Ring};

use std::fmt;

/// a + bω in ℚ(ω), with ω² = −1 − ω.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloQ {
    pub a: Rat,
    pub b: Rat,
}

impl CycloQ {
    pub fn new(a: Rat, b: Rat) -> Self {
        CycloQ { a, b }
    }

    pub fn omega() -> Self {
        CycloQ::new(Rat::zero(), Rat::one())
    }

    /// a² − ab + b², zero only at zero.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Conjugate ω ↦ ω²: (a − b) − bω.
    pub fn conj(&self) -> Self {
        CycloQ::new(&self.a - &self.b, -&self.b)
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(CycloQ::new(c.a / &n, c.b / n))
    }

    /// The rational value if b = 0.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.b.is_zero().then_some(&self.a)
    }
}

impl Ring for CycloQ {
    fn zero() -> Self {
        CycloQ::new(Rat::zero(), Rat::zero())
    }
    fn one() -> Self {
        CycloQ::new(Rat::one(), Rat::zero())
    }
    fn from_rat(r: Rat) -> Self {
        CycloQ::new(r, Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        CycloQ::new(&self.a + &o.a, &self.b + &o.b)
    }
    fn sub(&self, o: &Self) -> Self {
        CycloQ::new(&self.a - &o.a, &self.b - &o.b)
    }
    fn mul(&self, o: &Self) -> Self {
        let bd = &self.b * &o.b;
        CycloQ::new(&self.a * &o.a - &bd, &self.a * &o.b + &self.b * &o.a - bd)
    }
    fn neg(&self) -> Self {
        CycloQ::new(-&self.a, -&self.b)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.inv()?))
    }
}

impl fmt::Debug for CycloQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*w", self.b),
            _ => write!(f, "{} + {}*w", self.a, self.b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn omega_cubed_is_one() {
        let w = CycloQ::omega();
        assert_eq!(w.pow(3), Some(CycloQ::one()));
        assert_eq!(w.mul(&w), CycloQ::new(rat(-1), rat(-1)));
        assert_eq!(CycloQ::one().add(&w).add(&w.mul(&w)), CycloQ::zero());
    }

    #[test]
    fn inverse_and_norm() {
        let x = CycloQ::new(ratio(3, 2), rat(-2));
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), CycloQ::one());
        assert!(CycloQ::zero().inv().is_none());
        assert_eq!(CycloQ::omega().norm(), rat(1));
    }

    #[test]
    fn omega_minus_omega_sq_to_the_sixth() {
        // (ω − ω²)² = −3, so the sixth power is −27.
        let w = CycloQ::omega();
        let d = w.sub(&w.mul(&w));
        assert_eq!(d.pow(6), Some(CycloQ::from_int(-27)));
    }
}
