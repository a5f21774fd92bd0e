//! Exact scalar rings and multivariate Laurent polynomials.

mod cyclo;
mod jet;
mod modp;
mod poly;
mod qlaurent;

pub use cyclo::CycloQ;
pub use jet::{leading_jet, rational_jet, TruncSeries};
pub use modp::{Fp, P31, P61};
pub use poly::{MultiPoly, Term};
pub use qlaurent::QLaurent;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use std::fmt::Debug;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p" or "p/q" with an optional leading sign.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if num_traits::Zero::is_zero(&d) || d.is_negative() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Commutative ring with exact division where possible.
///
/// `div_exact` returns `None` when the quotient does not exist in the ring.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: Rat) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_exact(&self, o: &Self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n))
    }

    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }

    fn sub_assign(&mut self, o: &Self) {
        *self = self.sub(o);
    }

    /// Integer power; negative exponents need an exact inverse.
    fn pow(&self, e: i64) -> Option<Self> {
        let mut base = if e < 0 { Self::one().div_exact(self)? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Some(acc)
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(o) {
            None
        } else {
            Some(self / o)
        }
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign(&mut self, o: &Self) {
        *self -= o;
    }
}

/// Returns the integer value if `r` is integral.
pub fn rat_to_int(r: &Rat) -> Option<BigInt> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rat_forms() {
        assert_eq!(parse_rat("3"), Some(rat(3)));
        assert_eq!(parse_rat("-6/4"), Some(ratio(-3, 2)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("1/-2"), None);
        assert_eq!(parse_rat("x"), None);
    }

    #[test]
    fn pow_negative() {
        assert_eq!(Ring::pow(&ratio(2, 3), -2), Some(ratio(9, 4)));
        assert_eq!(Ring::pow(&rat(0), -1), None);
        assert_eq!(Ring::pow(&rat(5), 0), Some(rat(1)));
    }
}
