//! Arbitrary-precision rationals.
//!
//! [`Rat`] is `num_rational::BigRational`, which maintains the invariants we
//! rely on everywhere: fractions are always reduced, denominators are
//! positive, and zero is `0/1`. The helpers here cover construction,
//! parsing of the canonical `num/den` text form, and p-adic valuations.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient `C(n, k)` with the Hasse convention `C(n, k) = 0`
/// for `k > n` or `k < 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// `n!` as a big integer. Panics if `n < 0`.
pub fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of a negative integer");
    let mut r = BigInt::one();
    for i in 2..=n {
        r *= i;
    }
    r
}

/// p-adic valuation of a nonzero integer.
pub fn val_p_int(n: &BigInt, p: u64) -> i64 {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut v = 0;
    let mut n = n.abs();
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}

/// p-adic valuation of a nonzero rational.
pub fn val_p(q: &Rat, p: u64) -> i64 {
    val_p_int(q.numer(), p) - val_p_int(q.denom(), p)
}

/// Parses the canonical `num` or `num/den` text form.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Canonical `num/den` rendering (`den` omitted when 1).
pub fn format_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        let mut s = q.numer().to_string();
        s.push('/');
        s.push_str(&q.denom().to_string());
        s
    }
}

/// True when every prime factor of `den` divides `n`; i.e. `den | n^k` for
/// some `k`.
pub fn denominator_divides_power_of(den: &BigInt, n: u64) -> bool {
    let n = BigInt::from(n);
    let mut d = den.abs();
    if d.is_one() {
        return true;
    }
    loop {
        let g = d.gcd(&n);
        if g.is_one() {
            return d.is_one();
        }
        while (&d % &g).is_zero() {
            d /= &g;
        }
        if d.is_one() {
            return true;
        }
    }
}

/// Prime factorization of a positive integer by trial division
/// (denominator supports are tiny in practice).
pub fn factorize(n: &BigInt) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut n = n.abs();
    let mut p = 2u64;
    while !n.is_one() {
        let bp = BigInt::from(p);
        if (&bp * &bp) > n {
            break;
        }
        let mut e = 0u32;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        // remaining factor is prime and fits practical ranges
        let digits = n.to_string();
        if let Ok(v) = digits.parse::<u64>() {
            out.push((v, 1));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_positive_denominator() {
        let q = rat(6, -4);
        assert_eq!(format_rat(&q), "-3/2");
        assert_eq!(rat(0, 7), rat_int(0));
        assert_eq!(rat(0, 7).denom(), &BigInt::one());
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["5", "-3/7", "0", "22/7"] {
            let q = parse_rat(s).unwrap();
            assert_eq!(format_rat(&q), s);
        }
        assert!(parse_rat("1/0").is_none());
    }

    #[test]
    fn valuations() {
        assert_eq!(val_p(&rat(9, 8), 3), 2);
        assert_eq!(val_p(&rat(9, 8), 2), -3);
        assert_eq!(val_p(&rat(1, 2), 5), 0);
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(9, 3), BigInt::from(84));
        assert_eq!(binom(3, 4), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
    }

    #[test]
    fn denominator_support() {
        assert!(denominator_divides_power_of(&BigInt::from(8), 2));
        assert!(denominator_divides_power_of(&BigInt::from(36), 6));
        assert!(!denominator_divides_power_of(&BigInt::from(10), 2));
    }
}
