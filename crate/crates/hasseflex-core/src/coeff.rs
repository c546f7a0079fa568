//! Coefficient rings for sparse polynomials.
//!
//! [`Coeff`] abstracts exactly what [`crate::mpoly::MPoly`] needs: ring
//! arithmetic, exact division, and construction of ring constants *from an
//! existing element* (so values that carry a ring context, like `Z/p`
//! elements or quotient-ring elements, can mint compatible constants).

use crate::rat::Rat;
use alloc::string::String;
use core::fmt::Debug;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Ring element usable as a polynomial coefficient.
pub trait Coeff: Clone + PartialEq + Debug {
    fn is_zero(&self) -> bool;
    /// Additive identity in the same ring as `self`.
    fn zero_like(&self) -> Self;
    /// Multiplicative identity in the same ring as `self`.
    fn one_like(&self) -> Self;
    /// Image of the integer `n` in the same ring as `self`.
    fn from_int_like(&self, n: &BigInt) -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Exact division; `None` when `o` does not divide `self` in the ring.
    fn try_div(&self, o: &Self) -> Option<Self>;
    /// Canonical text rendering.
    fn render(&self) -> String;
}

impl Coeff for Rat {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        Rat::from_integer(n.clone())
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            None
        } else {
            Some(self / o)
        }
    }
    fn render(&self) -> String {
        crate::rat::format_rat(self)
    }
}

/// Element of `Z/p` for a prime `p` small enough that products fit in `u128`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Zp {
    pub p: u64,
    pub v: u64,
}

impl Zp {
    pub fn new(p: u64, v: i64) -> Self {
        let m = v.rem_euclid(p as i64) as u64;
        Zp { p, v: m }
    }

    pub fn from_u64(p: u64, v: u64) -> Self {
        Zp { p, v: v % p }
    }

    /// Multiplicative inverse by Fermat; `p` must be prime and `v != 0`.
    pub fn inv(&self) -> Option<Zp> {
        if self.v == 0 {
            return None;
        }
        Some(Zp {
            p: self.p,
            v: mod_pow(self.v, self.p - 2, self.p),
        })
    }
}

/// `b^e mod p` with `u128` intermediates.
pub fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

impl Coeff for Zp {
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn zero_like(&self) -> Self {
        Zp { p: self.p, v: 0 }
    }
    fn one_like(&self) -> Self {
        Zp { p: self.p, v: 1 % self.p }
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        let p = BigInt::from(self.p);
        let r = ((n % &p) + &p) % &p;
        let mut v: u64 = 0;
        for d in r.to_u64_digits().1 {
            v = d; // r < p fits in one digit
        }
        Zp { p: self.p, v }
    }
    fn add_ref(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Zp {
            p: self.p,
            v: (self.v + o.v) % self.p,
        }
    }
    fn sub_ref(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Zp {
            p: self.p,
            v: (self.v + self.p - o.v) % self.p,
        }
    }
    fn mul_ref(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Zp {
            p: self.p,
            v: ((self.v as u128 * o.v as u128) % self.p as u128) as u64,
        }
    }
    fn neg_ref(&self) -> Self {
        Zp {
            p: self.p,
            v: (self.p - self.v) % self.p,
        }
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul_ref(&i))
    }
    fn render(&self) -> String {
        use alloc::string::ToString;
        self.v.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zp_field_ops() {
        let a = Zp::new(7, 3);
        let b = Zp::new(7, 5);
        assert_eq!(a.add_ref(&b).v, 1);
        assert_eq!(a.mul_ref(&b).v, 1);
        assert_eq!(a.try_div(&b).unwrap().v, (3 * 3) % 7); // 1/5 = 3 mod 7
        assert_eq!(Zp::new(7, -1).v, 6);
    }

    #[test]
    fn from_int_reduces() {
        let ctx = Zp::new(11, 0);
        assert_eq!(ctx.from_int_like(&BigInt::from(-1)).v, 10);
        assert_eq!(ctx.from_int_like(&BigInt::from(22)).v, 0);
    }
}
