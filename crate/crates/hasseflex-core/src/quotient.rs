//! Quotient-ring extensions `Q[w]/(q(w))` for a monic modulus `q`.
//!
//! Only the extensions the statements actually need are exercised: the
//! cyclotomic `w^2 + w + 1` (a primitive cube root of unity) and quadratics
//! like `w^2 + 1/2` (a square root of `-1/2`). The implementation allows any
//! monic modulus over `Q`; no number-field machinery beyond reduced
//! representatives and ring arithmetic is provided.

use crate::coeff::Coeff;
use crate::rat::{format_rat, rat_int, Rat};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::One;

/// A monic quotient ring `Q[w]/(q(w))`.
#[derive(Debug, PartialEq, Eq)]
pub struct QuotientRing {
    /// Coefficients of `q`, constant term first, leading coefficient 1.
    pub modulus: Vec<Rat>,
    /// Display name of the generator.
    pub gen_name: String,
}

impl QuotientRing {
    /// Builds `Q[w]/(q)` from the full monic coefficient list of `q`
    /// (constant first). Panics if `q` is not monic of degree >= 1.
    pub fn new(modulus: Vec<Rat>, gen_name: &str) -> Arc<Self> {
        assert!(modulus.len() >= 2, "modulus must have degree >= 1");
        assert!(
            modulus.last().unwrap().is_one(),
            "modulus must be monic"
        );
        Arc::new(QuotientRing {
            modulus,
            gen_name: gen_name.into(),
        })
    }

    /// `Q[w]/(w^2 + w + 1)`, housing a primitive cube root of unity.
    pub fn cyclotomic_cube() -> Arc<Self> {
        use crate::rat::rat_int;
        Self::new(vec![rat_int(1), rat_int(1), rat_int(1)], "zeta")
    }

    /// `Q[w]/(w^2 - a)`, housing a square root of `a`.
    pub fn sqrt_of(a: Rat, gen_name: &str) -> Arc<Self> {
        use crate::rat::rat_int;
        Self::new(vec![-a, rat_int(0), rat_int(1)], gen_name)
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// The zero element.
    pub fn zero(self: &Arc<Self>) -> QuotElt {
        QuotElt {
            ring: Arc::clone(self),
            c: vec![rat_int(0); self.degree()],
        }
    }

    /// The embedded rational `r`.
    pub fn scalar(self: &Arc<Self>, r: Rat) -> QuotElt {
        let mut z = self.zero();
        z.c[0] = r;
        z
    }

    /// The class of the generator `w`.
    pub fn generator(self: &Arc<Self>) -> QuotElt {
        let mut z = self.zero();
        if self.degree() == 1 {
            // w reduces to a scalar; fold through reduction
            z.c[0] = -self.modulus[0].clone();
        } else {
            z.c[1] = Rat::one();
        }
        z
    }
}

/// Residue representative of degree < deg q, fully reduced.
#[derive(Clone, Debug)]
pub struct QuotElt {
    pub ring: Arc<QuotientRing>,
    /// Coefficients, constant term first, length = deg q.
    pub c: Vec<Rat>,
}

impl PartialEq for QuotElt {
    fn eq(&self, other: &Self) -> bool {
        self.ring.modulus == other.ring.modulus && self.c == other.c
    }
}

impl QuotElt {
    fn reduce(ring: &Arc<QuotientRing>, mut raw: Vec<Rat>) -> QuotElt {
        let d = ring.degree();
        while raw.len() > d {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = raw.len() - d; // top was coefficient of w^(d+k)
            for i in 0..d {
                let t = &top * &ring.modulus[i];
                raw[k + i] = &raw[k + i] - &t;
            }
        }
        raw.resize(d, rat_int(0));
        QuotElt {
            ring: Arc::clone(ring),
            c: raw,
        }
    }
}

impl Coeff for QuotElt {
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn zero_like(&self) -> Self {
        self.ring.zero()
    }
    fn one_like(&self) -> Self {
        self.ring.scalar(Rat::one())
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        self.ring.scalar(Rat::from_integer(n.clone()))
    }
    fn add_ref(&self, o: &Self) -> Self {
        let c = self
            .c
            .iter()
            .zip(&o.c)
            .map(|(a, b)| a + b)
            .collect();
        QuotElt {
            ring: Arc::clone(&self.ring),
            c,
        }
    }
    fn sub_ref(&self, o: &Self) -> Self {
        let c = self
            .c
            .iter()
            .zip(&o.c)
            .map(|(a, b)| a - b)
            .collect();
        QuotElt {
            ring: Arc::clone(&self.ring),
            c,
        }
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let d = self.ring.degree();
        let mut raw = vec![rat_int(0); 2 * d - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] = &raw[i + j] + &(a * b);
            }
        }
        QuotElt::reduce(&self.ring, raw)
    }
    fn neg_ref(&self) -> Self {
        QuotElt {
            ring: Arc::clone(&self.ring),
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        // Division only against embedded rational scalars; that is all the
        // statement checks require of quotient rings.
        if o.c[1..].iter().all(|x| x.is_zero()) && !o.c[0].is_zero() {
            let inv = Rat::one() / o.c[0].clone();
            let mut r = self.clone();
            for x in &mut r.c {
                *x = &*x * &inv;
            }
            return Some(r);
        }
        None
    }
    fn render(&self) -> String {
        use alloc::string::ToString;
        let mut parts: Vec<String> = Vec::new();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => self.ring.gen_name.clone(),
                _ => {
                    let mut s = self.ring.gen_name.clone();
                    s.push('^');
                    s.push_str(&i.to_string());
                    s
                }
            };
            if mono.is_empty() {
                parts.push(format_rat(a));
            } else if a.is_one() {
                parts.push(mono);
            } else {
                let mut s = format_rat(a);
                s.push('*');
                s.push_str(&mono);
                parts.push(s);
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn cube_root_of_unity() {
        let ring = QuotientRing::cyclotomic_cube();
        let z = ring.generator();
        let z3 = z.mul_ref(&z).mul_ref(&z);
        assert_eq!(z3, ring.scalar(rat_int(1)));
        // 1 + z + z^2 = 0
        let s = ring
            .scalar(rat_int(1))
            .add_ref(&z)
            .add_ref(&z.mul_ref(&z));
        assert!(s.is_zero());
    }

    #[test]
    fn sqrt_minus_half() {
        let ring = QuotientRing::sqrt_of(rat(-1, 2), "w");
        let w = ring.generator();
        assert_eq!(w.mul_ref(&w), ring.scalar(rat(-1, 2)));
    }
}
