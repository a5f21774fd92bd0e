use super::{QLaurent, Rat, Ring};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::fmt;

/// 2⁶¹ − 1.
pub const P61: u64 = (1 << 61) - 1;
/// 2³¹ − 1.
pub const P31: u64 = (1 << 31) - 1;

/// Residues modulo the prime `P`. Both shipped primes are 1 mod 3, so ℤ/P holds
/// a primitive cube root of unity.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(x: u64) -> Self {
        Fp(x % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn mulmod(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn powu(self, mut k: u64) -> Self {
        let (mut acc, mut b) = (1u64, self.0);
        while k > 0 {
            if k & 1 == 1 {
                acc = Self::mulmod(acc, b);
            }
            b = Self::mulmod(b, b);
            k >>= 1;
        }
        Fp(acc)
    }

    pub fn inv(self) -> Option<Self> {
        (self.0 != 0).then(|| self.powu(P - 2))
    }

    /// The cube root of unity g^{(P−1)/3} for the least g giving one ≠ 1.
    pub fn omega() -> Self {
        assert_eq!(P % 3, 1, "modulus must be 1 mod 3");
        (2..).map(|g| Fp::<P>(g).powu((P - 1) / 3)).find(|w| w.0 != 1).unwrap()
    }

    /// Image of a q-Laurent polynomial under q ↦ `q`.
    pub fn eval_q(c: &QLaurent, q: Self) -> Self {
        let mut acc = Self::zero();
        for (k, r) in c.terms() {
            let qk = if k >= 0 { q.powu(k as u64) } else { q.inv().expect("q invertible").powu((-k) as u64) };
            acc = acc.add(&Self::from_rat(r.clone()).mul(&qk));
        }
        acc
    }

    /// Representative in (−P/2, P/2].
    pub fn symmetric(self) -> i128 {
        if self.0 > P / 2 {
            self.0 as i128 - P as i128
        } else {
            self.0 as i128
        }
    }
}

fn reduce<const P: u64>(n: &BigInt) -> u64 {
    let m = BigInt::from(P);
    let r = ((n % &m) + &m) % &m;
    r.to_u64().expect("residue fits")
}

impl<const P: u64> Ring for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    /// Panics if the denominator vanishes mod P.
    fn from_rat(r: Rat) -> Self {
        let d = Fp::<P>(reduce::<P>(r.denom())).inv().expect("denominator invertible mod P");
        Fp(reduce::<P>(r.numer())).mul(&d)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
    fn sub(&self, o: &Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(Self::mulmod(self.0, o.0))
    }
    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.inv()?))
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {P}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn omega_is_primitive_cube_root() {
        for w in [Fp::<P61>::omega().value(), Fp::<P31>::omega().value()] {
            assert_ne!(w, 1);
        }
        let w = Fp::<P61>::omega();
        assert_eq!(w.powu(3), Fp::one());
        assert_eq!(Fp::<P61>::one().add(&w).add(&w.mul(&w)), Fp::zero());
    }

    #[test]
    fn rationals_map_consistently() {
        let a = Fp::<P31>::from_rat(ratio(3, 7));
        assert_eq!(a.mul(&Fp::from_int(7)), Fp::from_int(3));
        assert_eq!(Fp::<P31>::from_int(-5).symmetric(), -5);
    }

    #[test]
    fn beta_at_omega_is_one() {
        assert_eq!(Fp::<P61>::eval_q(&QLaurent::beta(), Fp::omega()), Fp::one());
    }
}
