//! Exact point counting over prime fields and p-adic valuation utilities.
//!
//! Counts are exact integers throughout; the only floating-point values in
//! the whole system (renormalized error terms and their statistics) are
//! computed downstream in the CLI crate from the integer records produced
//! here.

use crate::error::{Error, Result};
use crate::modp::{is_squarefree_mod_p, PrimePoly};
use crate::mpoly::MPoly;
use crate::pencils::{atomic_inflection, PencilKind, PencilSpec, UMode};
use crate::report::VerificationReport;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Signed;

/// Primes up to `bound` (inclusive) by sieve.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    if n >= 1 {
        sieve[1] = false;
    }
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| if b { Some(i as u64) } else { None })
        .collect()
}

/// Legendre symbol `(a/p)` for odd prime `p`.
pub fn legendre_symbol(a: i64, p: u64) -> i64 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    let e = crate::coeff::mod_pow(a, (p - 1) / 2, p);
    if e == 1 {
        1
    } else {
        -1
    }
}

/// Quadratic residue table: `chi[a] in {-1, 0, 1}` for `a in 0..p`.
pub fn chi_table(p: u64) -> Vec<i8> {
    let mut t = vec![-1i8; p as usize];
    t[0] = 0;
    for x in 1..p {
        let sq = ((x as u128 * x as u128) % p as u128) as usize;
        t[sq] = 1;
    }
    t
}

/// How a plane curve is compactified for counting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    Affine,
    /// Closure in the straight projective plane. Points at infinity are the
    /// projective roots of the top-degree form (equivalently, of the
    /// homogenization with extraneous line components stripped).
    ProjectiveP2,
    /// Closure in the weighted plane `P(1, w, 1)`; the second coordinate
    /// carries weight `w`. All scalings of the pure-parameter vertex are
    /// identified to the single point `[0:1:0]`.
    Weighted(u32),
}

/// Exact point count of the plane curve `P(vx, vp) = 0` over `Z/p` under
/// the chosen compactification. `p` must be an odd prime not dividing the
/// cover degree assumptions baked into the reductions (2 and 3 are
/// excluded globally).
pub fn count_points(poly: &PrimePoly, vx: &str, vp: &str, closure: Closure) -> Result<u64> {
    let p = poly
        .terms
        .values()
        .next()
        .map(|z| z.p)
        .ok_or(Error::ZeroPolynomial)?;
    if p < 5 {
        return Err(Error::BadPrime(p));
    }
    let ix = poly.var_index(vx)?;
    let ip = poly.var_index(vp)?;
    // dense coefficient grid over the two counting variables
    let terms: Vec<(u64, u64, u64)> = poly
        .terms
        .iter()
        .map(|(e, c)| (e[ix] as u64, e[ip] as u64, c.v))
        .collect();
    let mut count = 0u64;
    // affine points: evaluate per x as a polynomial in the parameter
    let dmax = terms.iter().map(|&(_, b, _)| b).max().unwrap_or(0);
    for x in 0..p {
        let mut coeffs = vec![0u64; (dmax + 1) as usize];
        for &(a, b, c) in &terms {
            let xa = crate::coeff::mod_pow(x, a, p);
            let idx = b as usize;
            coeffs[idx] = (coeffs[idx] + (c as u128 * xa as u128 % p as u128) as u64) % p;
        }
        for s in 0..p {
            let mut acc = 0u64;
            let mut pw = 1u64;
            for &c in &coeffs {
                acc = (acc + (c as u128 * pw as u128 % p as u128) as u64) % p;
                pw = (pw as u128 * s as u128 % p as u128) as u64;
            }
            if acc == 0 {
                count += 1;
            }
        }
    }
    match closure {
        Closure::Affine => Ok(count),
        Closure::ProjectiveP2 => {
            // top-degree form in (x, s)
            let deg = terms.iter().map(|&(a, b, _)| a + b).max().unwrap_or(0);
            let top: Vec<(u64, u64, u64)> = terms
                .iter()
                .copied()
                .filter(|&(a, b, _)| a + b == deg)
                .collect();
            // [1 : s : 0]
            for s in 0..p {
                let mut acc = 0u64;
                for &(_, b, c) in &top {
                    let sb = crate::coeff::mod_pow(s, b, p);
                    acc = (acc + (c as u128 * sb as u128 % p as u128) as u64) % p;
                }
                if acc == 0 {
                    count += 1;
                }
            }
            // [0 : 1 : 0]
            let pure_s = top
                .iter()
                .find(|&&(a, _, _)| a == 0)
                .map(|&(_, _, c)| c)
                .unwrap_or(0);
            if pure_s == 0 {
                count += 1;
            }
            Ok(count)
        }
        Closure::Weighted(w) => {
            let w = w as u64;
            let deg = terms.iter().map(|&(a, b, _)| a + w * b).max().unwrap_or(0);
            let top: Vec<(u64, u64, u64)> = terms
                .iter()
                .copied()
                .filter(|&(a, b, _)| a + w * b == deg)
                .collect();
            for s in 0..p {
                let mut acc = 0u64;
                for &(_, b, c) in &top {
                    let sb = crate::coeff::mod_pow(s, b, p);
                    acc = (acc + (c as u128 * sb as u128 % p as u128) as u64) % p;
                }
                if acc == 0 {
                    count += 1;
                }
            }
            let pure_s = top
                .iter()
                .find(|&&(a, _, _)| a == 0)
                .map(|&(_, _, c)| c)
                .unwrap_or(0);
            if pure_s == 0 {
                count += 1;
            }
            Ok(count)
        }
    }
}

/// The integral model of the index-2 D4 inflectionary curve:
/// `8 P_2 = 3x^4 + 22x^6 + 15x^8 + 6x^2 s + 30x^4 s - s^2`.
pub fn c2_integral_model() -> MPoly {
    let spec = PencilSpec::new(PencilKind::D4, 2, 1);
    atomic_inflection(&spec, 2, UMode::Specialized)
        .poly
        .scale_int(8)
}

/// Reduction of the C2 model mod p.
pub fn c2_mod_p(p: u64) -> Result<PrimePoly> {
    if p < 5 {
        return Err(Error::BadPrime(p));
    }
    c2_integral_model().reduce_mod_p(p)
}

/// Fast projective count of C2: the curve is quadratic in `s`, so each
/// fiber contributes `1 + chi(disc_s(x))` points, and the closure adds the
/// single point `[0:1:0]` at infinity.
pub fn fast_count_c2(p: u64) -> Result<u64> {
    if p < 5 || p % 2 == 0 || p % 3 == 0 {
        return Err(Error::BadPrime(p));
    }
    let chi = chi_table(p);
    let mut count = 1u64; // [0:1:0]
    for x in 0..p {
        // disc_s = (6x^2 + 30x^4)^2 + 4 (3x^4 + 22x^6 + 15x^8)
        let x2 = mulp(x, x, p);
        let x4 = mulp(x2, x2, p);
        let x6 = mulp(x4, x2, p);
        let x8 = mulp(x4, x4, p);
        let b = (mulp(6, x2, p) + mulp(30, x4, p)) % p;
        let c = (mulp(3, x4, p) + mulp(22, x6, p) + mulp(15, x8, p)) % p;
        let disc = (mulp(b, b, p) + mulp(4, c, p)) % p;
        let fiber = 1i64 + chi[disc as usize] as i64;
        count += fiber as u64;
    }
    Ok(count)
}

fn mulp(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Counts points of the desingularized model, the intersection of the two
/// quadrics `t y - x^2` and `15 t^2 + 30 t w + 22 x^2 + 3 y^2 + 6 y w - w^2`
/// in projective 3-space, by exhaustive enumeration of normalized
/// representatives.
pub fn count_c2_desingularized(p: u64) -> Result<u64> {
    if p < 5 {
        return Err(Error::BadPrime(p));
    }
    let q1 = |x: u64, y: u64, t: u64, _w: u64| (mulp(t, y, p) + p - mulp(x, x, p) % p) % p;
    let q2 = |x: u64, y: u64, t: u64, w: u64| {
        (mulp(15, mulp(t, t, p), p)
            + mulp(30, mulp(t, w, p), p)
            + mulp(22, mulp(x, x, p), p)
            + mulp(3, mulp(y, y, p), p)
            + mulp(6, mulp(y, w, p), p)
            + p
            - mulp(w, w, p))
            % p
    };
    let mut count = 0u64;
    // canonical representatives: first nonzero coordinate equals 1
    // [1 : y : t : w]
    for y in 0..p {
        for t in 0..p {
            for w in 0..p {
                if q1(1, y, t, w) == 0 && q2(1, y, t, w) == 0 {
                    count += 1;
                }
            }
        }
    }
    // [0 : 1 : t : w]
    for t in 0..p {
        for w in 0..p {
            if q1(0, 1, t, w) == 0 && q2(0, 1, t, w) == 0 {
                count += 1;
            }
        }
    }
    // [0 : 0 : 1 : w]
    for w in 0..p {
        if q1(0, 0, 1, w) == 0 && q2(0, 0, 1, w) == 0 {
            count += 1;
        }
    }
    // [0 : 0 : 0 : 1]
    if q1(0, 0, 0, 1) == 0 && q2(0, 0, 0, 1) == 0 {
        count += 1;
    }
    Ok(count)
}

/// Verifies the desingularization bookkeeping
/// `#C2 = #C2^nu - chi(15) - chi(3)` by brute force on both sides. The two
/// character corrections are the honest fiber contributions of the two
/// blow-down steps: their fibers are cut out by `15t^2 + 30t - 1` and
/// `3y^2 + 6y - 1`, quadratics with discriminant classes `15` and `3`
/// (each fiber replaces one point, so each contributes `chi + 1 - 1`).
pub fn fiber_correction_check(p: u64) -> Result<VerificationReport> {
    if p < 5 || p % 2 == 0 || p % 3 == 0 {
        return Err(Error::BadPrime(p));
    }
    let c2 = count_points(&c2_mod_p(p)?, "x", "s", Closure::ProjectiveP2)?;
    let nu = count_c2_desingularized(p)?;
    let chi15 = legendre_symbol(15, p);
    let chi3 = legendre_symbol(3, p);
    let rhs = nu as i64 - chi15 - chi3;
    // cross-check the character values against the literal fiber quadratics
    // when p does not divide 15
    let mut fibers_ok = true;
    if p % 5 != 0 {
        let roots_t = (0..p)
            .filter(|&t| (mulp(15, mulp(t, t, p), p) + mulp(30, t, p) + p - 1) % p == 0)
            .count() as i64;
        let roots_y = (0..p)
            .filter(|&y| (mulp(3, mulp(y, y, p), p) + mulp(6, y, p) + p - 1) % p == 0)
            .count() as i64;
        fibers_ok = roots_t == 1 + chi15 && roots_y == 1 + chi3;
    }
    let params = format!("p={p}");
    if c2 as i64 == rhs && fibers_ok {
        Ok(VerificationReport::pass(
            "d4.fiber-correction",
            &params,
            format!("#C2={c2}, #C2nu={nu}, chi15={chi15}, chi3={chi3}"),
            "#C2 = #C2nu - chi(15) - chi(3)".into(),
        ))
    } else {
        Ok(VerificationReport::fail(
            "d4.fiber-correction",
            &params,
            format!("#C2={c2}, #C2nu={nu}, chi15={chi15}, chi3={chi3}, fibers_ok={fibers_ok}"),
            "#C2 = #C2nu - chi(15) - chi(3)".into(),
            format!("p={p}"),
        ))
    }
}

/// One row of the error-term series: prime, projective count, and the
/// integer error `e = count - (p + 1)`.
#[derive(Clone, Copy, Debug)]
pub struct PointCountRecord {
    pub p: u64,
    pub count: u64,
    pub e: i64,
}

/// Computes the C2 error series for all good primes `5 <= p <= bound`
/// (excluding 2 and 3), using the fast counter.
pub fn c2_error_series(bound: u64) -> Vec<PointCountRecord> {
    primes_up_to(bound)
        .into_iter()
        .filter(|&p| p >= 5 && p % 2 != 0 && p % 3 != 0)
        .map(|p| {
            let count = fast_count_c2(p).expect("good prime");
            PointCountRecord {
                p,
                count,
                e: count as i64 - (p as i64 + 1),
            }
        })
        .collect()
}

/// Exact Hasse-style bound `|e| <= 2 sqrt(p) + 4`, tested in integers.
pub fn hasse_bound_ok(e: i64, p: u64) -> bool {
    let a = e.abs();
    if a <= 4 {
        return true;
    }
    let d = a - 4;
    (d * d) as u64 <= 4 * p
}

// ---------------------------------------------------------------------------
// p-adic valuations
// ---------------------------------------------------------------------------

/// `val_p(n!) = sum_i floor(n / p^i)`.
pub fn val_p_factorial(n: u64, p: u64) -> i64 {
    let mut v = 0i64;
    let mut q = n / p;
    while q > 0 {
        v += q as i64;
        q /= p;
    }
    v
}

fn floor_sum(n: i64, p: u64) -> i64 {
    if n <= 0 {
        return 0;
    }
    val_p_factorial(n as u64, p)
}

/// p-adic valuation of the double falling factorial `((a))_n` for an odd
/// prime `p`, by the closed case formulas; errors when the product
/// vanishes.
pub fn val_p_double_falling(a: u64, n: u64, p: u64) -> Result<i64> {
    if p < 3 {
        return Err(Error::BadPrime(p));
    }
    let (a, n) = (a as i64, n as i64);
    if n == 0 {
        return Ok(0);
    }
    if a % 2 == 0 && a < 2 * n {
        // the factor a - 2k vanishes for k = a/2 < n
        return Err(Error::Hypotheses("double factorial vanishes".into()));
    }
    Ok(if a % 2 == 0 {
        // a even, a > 2n - 2: val((a/2)_n)
        floor_sum(a / 2, p) - floor_sum(a / 2 - n, p)
    } else if a > 2 * n - 2 {
        floor_sum(a, p) - floor_sum(a - 2 * n + 1, p) - floor_sum((a - 1) / 2, p)
            + floor_sum((a - 1) / 2 - n + 1, p)
    } else {
        floor_sum(a, p) - floor_sum((a - 1) / 2, p) + floor_sum(2 * n - 2 - a, p)
            - floor_sum((2 * n - 2 - a - 1) / 2, p)
    })
}

/// Direct factorization oracle: the same valuation from the exact integer.
pub fn val_p_double_falling_direct(a: u64, n: u64, p: u64) -> Result<i64> {
    let mut prod = BigInt::from(1);
    for i in 0..n as i64 {
        prod *= BigInt::from(a as i64 - 2 * i);
    }
    if prod.abs() == BigInt::from(0) {
        return Err(Error::Hypotheses("double factorial vanishes".into()));
    }
    Ok(crate::rat::val_p_int(&prod, p))
}

// ---------------------------------------------------------------------------
// Characteristic-3 structure checks
// ---------------------------------------------------------------------------

/// The three characteristic-3 witnesses on the Weierstrass sequence:
/// `lam` divides `P_4 mod 3` (reducibility), `P_5 mod 3` is non-squarefree
/// (non-reducedness), and `P_3 mod 3` is squarefree (control).
pub fn char3_checks() -> Vec<VerificationReport> {
    let spec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
    let mut out = Vec::new();
    let reduce = |m: u32| -> PrimePoly {
        atomic_inflection(&spec, m, UMode::Specialized)
            .poly
            .reduce_mod_p(3)
            .expect("denominators are powers of 2")
    };

    let p4 = reduce(4);
    let vs = p4.vars.clone();
    let lam: PrimePoly = MPoly::parse(&vs, "lam")
        .unwrap()
        .reduce_mod_p(3)
        .unwrap();
    let divides = p4.exact_divide(&lam).is_ok();
    out.push(if divides {
        VerificationReport::pass(
            "weierstrass.char3.p4-reducible",
            "m=4 p=3",
            "lam divides P_4 mod 3".into(),
            "lam divides".into(),
        )
    } else {
        VerificationReport::fail(
            "weierstrass.char3.p4-reducible",
            "m=4 p=3",
            p4.render(),
            "divisible by lam".into(),
            "P_4 mod 3".into(),
        )
    });

    let p5 = reduce(5);
    let sq5 = is_squarefree_mod_p(&p5).unwrap();
    out.push(if !sq5 {
        VerificationReport::pass(
            "weierstrass.char3.p5-nonreduced",
            "m=5 p=3",
            format!("P_5 mod 3 = {}", p5.render()),
            "non-squarefree".into(),
        )
    } else {
        VerificationReport::fail(
            "weierstrass.char3.p5-nonreduced",
            "m=5 p=3",
            p5.render(),
            "non-squarefree".into(),
            "P_5 mod 3".into(),
        )
    });

    let p3 = reduce(3);
    let sq3 = is_squarefree_mod_p(&p3).unwrap();
    out.push(if sq3 {
        VerificationReport::pass(
            "weierstrass.char3.p3-squarefree",
            "m=3 p=3",
            format!("P_3 mod 3 = {}", p3.render()),
            "squarefree".into(),
        )
    } else {
        VerificationReport::fail(
            "weierstrass.char3.p3-squarefree",
            "m=3 p=3",
            p3.render(),
            "squarefree".into(),
            "P_3 mod 3".into(),
        )
    });
    out
}

/// Reduction of the index-4 Weierstrass polynomial mod 3 must be divisible
/// by `lam` (used by the reduction example in the algebra tests as well).
pub fn weierstrass_p4_mod3() -> PrimePoly {
    let spec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
    atomic_inflection(&spec, 4, UMode::Specialized)
        .poly
        .reduce_mod_p(3)
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::vars;

    #[test]
    fn sieve_and_symbols() {
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        // sum of chi over the field is zero
        for p in [5u64, 7, 11, 13] {
            let chi = chi_table(p);
            let s: i64 = (0..p).map(|x| chi[x as usize] as i64).sum();
            assert_eq!(s, 0);
        }
        assert_eq!(legendre_symbol(6, 7), -1);
        assert_eq!(legendre_symbol(15, 7), 1);
    }

    #[test]
    fn line_count() {
        // x = 0 over F_5, affine: 5 points
        let vs = vars(&["x", "s"]);
        let line = MPoly::parse(&vs, "x").unwrap().reduce_mod_p(5).unwrap();
        assert_eq!(count_points(&line, "x", "s", Closure::Affine).unwrap(), 5);
    }

    #[test]
    fn conic_counts() {
        // x^2 + s^2 - 1 over F_p: affine count = p - chi(-1)
        let vs = vars(&["x", "s"]);
        for p in [5u64, 13, 17, 29, 37, 41] {
            let conic = MPoly::parse(&vs, "x^2 + s^2 - 1")
                .unwrap()
                .reduce_mod_p(p)
                .unwrap();
            let cnt = count_points(&conic, "x", "s", Closure::Affine).unwrap();
            let expect = (p as i64 - legendre_symbol(-1, p)) as u64;
            assert_eq!(cnt, expect, "p={p}");
        }
    }

    #[test]
    fn fast_equals_brute_small() {
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            let brute =
                count_points(&c2_mod_p(p).unwrap(), "x", "s", Closure::ProjectiveP2).unwrap();
            let fast = fast_count_c2(p).unwrap();
            assert_eq!(brute, fast, "p={p}");
        }
        assert!(fast_count_c2(3).is_err());
    }

    #[test]
    fn fiber_corrections() {
        for p in [5u64, 7, 11, 13] {
            let rep = fiber_correction_check(p).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(val_p_factorial(9, 3), 4);
        // ((a))_n for even a > 2n-2 equals 2^n (a/2)_n
        assert_eq!(
            val_p_double_falling(12, 3, 3).unwrap(),
            val_p_double_falling_direct(12, 3, 3).unwrap()
        );
        for (a, n, p) in [(15u64, 4u64, 3u64), (9, 3, 5), (7, 5, 3), (5, 4, 7), (21, 8, 3)] {
            assert_eq!(
                val_p_double_falling(a, n, p).unwrap(),
                val_p_double_falling_direct(a, n, p).unwrap(),
                "a={a} n={n} p={p}"
            );
        }
        assert!(val_p_double_falling(6, 4, 3).is_err());
    }

    #[test]
    fn char3_suite() {
        for rep in char3_checks() {
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
