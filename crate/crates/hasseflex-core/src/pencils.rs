//! Superelliptic pencil catalog and atomic inflection polynomials.
//!
//! An atomic inflection polynomial `P_m` of a pencil `y^n = f(x, params)`
//! is defined by `D^m y^l = f^(-m) y^l P_m(x)` and computed here by the
//! characteristic recursion
//!
//! ```text
//! P_1 = u * D^1 f,
//! P_(m+1) = (D^1 P_m * f + P_m * D^1 f * (u - m)) / (m + 1),
//! ```
//!
//! where `u = l/n` may stay symbolic (a first-class variable) or be
//! specialized. Everything downstream — Newton polygons, coefficient
//! formulas, symmetry and parity checks — consumes these sequences.

use crate::error::{Error, Result};
use crate::factorial::{factorial_gadget_sym, FactorialKind};
use crate::mpoly::{vars, MPoly, Vars};
use crate::rat::{factorial, rat, rat_int, Rat};
use crate::report::VerificationReport;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

/// Which superelliptic family a pencil comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum PencilKind {
    /// `y^n = x^a (x-1)^b (x-lam)^c`
    Legendre { a: u32, b: u32, c: u32 },
    /// `y^n = x^3 + lam x + 2`
    Weierstrass,
    /// `y^n = x^5 + x^3 + s x`
    D4,
    /// `y^n = x^6 + x^3 + z`
    D6,
    /// `y^n = x^6 - s1 x^4 + s2 x^2 - 1`
    Bielliptic,
    /// Any `f` in `x` and parameters; owned variable list must contain
    /// `x` and `u`.
    Custom { f: MPoly, label: String },
}

/// Family descriptor: kind, cover degree `n`, section index `l`.
#[derive(Clone, Debug, PartialEq)]
pub struct PencilSpec {
    pub kind: PencilKind,
    pub n: u32,
    pub ell: u32,
}

/// Whether `u` stays symbolic or is specialized to `l/n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UMode {
    Symbolic,
    Specialized,
}

/// An atomic inflection polynomial tagged with its provenance.
#[derive(Clone, Debug)]
pub struct InflectionPoly {
    pub poly: MPoly,
    pub m: u32,
    pub spec: PencilSpec,
    pub u_mode: UMode,
}

impl PencilSpec {
    pub fn new(kind: PencilKind, n: u32, ell: u32) -> Self {
        assert!(n >= 2, "cover degree must be >= 2");
        assert!(ell >= 1, "section index must be >= 1");
        if let PencilKind::Legendre { a, b, c } = &kind {
            assert!(*a >= 1 && *b >= 1 && *c >= 1, "Legendre exponents must be >= 1");
        }
        PencilSpec { kind, n, ell }
    }

    /// The value `u = l/n`.
    pub fn u_value(&self) -> Rat {
        rat(self.ell as i64, self.n as i64)
    }

    /// Variable list of this pencil: `x`, parameters, then `u`.
    pub fn vars(&self) -> Vars {
        match &self.kind {
            PencilKind::Legendre { .. } | PencilKind::Weierstrass => vars(&["x", "lam", "u"]),
            PencilKind::D4 => vars(&["x", "s", "u"]),
            PencilKind::D6 => vars(&["x", "z", "u"]),
            PencilKind::Bielliptic => vars(&["x", "s1", "s2", "u"]),
            PencilKind::Custom { f, .. } => f.vars.clone(),
        }
    }

    /// Parameter variable names (everything except `x` and `u`).
    pub fn param_names(&self) -> Vec<String> {
        self.vars()
            .iter()
            .filter(|v| v.as_str() != "x" && v.as_str() != "u")
            .cloned()
            .collect()
    }

    pub fn label(&self) -> String {
        match &self.kind {
            PencilKind::Legendre { a, b, c } => format!("legendre({a},{b},{c})"),
            PencilKind::Weierstrass => "weierstrass".into(),
            PencilKind::D4 => "d4".into(),
            PencilKind::D6 => "d6".into(),
            PencilKind::Bielliptic => "bielliptic".into(),
            PencilKind::Custom { label, .. } => label.clone(),
        }
    }
}

/// The defining `f(x, params)` of a pencil.
pub fn base_poly(spec: &PencilSpec) -> MPoly {
    let vs = spec.vars();
    let x = MPoly::var(&vs, "x");
    let one = MPoly::one(&vs);
    match &spec.kind {
        PencilKind::Legendre { a, b, c } => {
            let lam = MPoly::var(&vs, "lam");
            x.pow(*a as usize)
                .mul(&x.sub(&one).pow(*b as usize))
                .mul(&x.sub(&lam).pow(*c as usize))
        }
        PencilKind::Weierstrass => {
            let lam = MPoly::var(&vs, "lam");
            x.pow(3).add(&lam.mul(&x)).add(&one.scale_int(2))
        }
        PencilKind::D4 => {
            let s = MPoly::var(&vs, "s");
            x.pow(5).add(&x.pow(3)).add(&s.mul(&x))
        }
        PencilKind::D6 => {
            let z = MPoly::var(&vs, "z");
            x.pow(6).add(&x.pow(3)).add(&z)
        }
        PencilKind::Bielliptic => {
            let s1 = MPoly::var(&vs, "s1");
            let s2 = MPoly::var(&vs, "s2");
            x.pow(6)
                .sub(&s1.mul(&x.pow(4)))
                .add(&s2.mul(&x.pow(2)))
                .sub(&one)
        }
        PencilKind::Custom { f, .. } => f.clone(),
    }
}

fn u_poly(spec: &PencilSpec, mode: UMode) -> MPoly {
    let vs = spec.vars();
    match mode {
        UMode::Symbolic => MPoly::var(&vs, "u"),
        UMode::Specialized => MPoly::constant(&vs, spec.u_value()),
    }
}

/// Computes the whole prefix `P_1, ..., P_m`; the natural memoization unit,
/// since `P_(k+1)` consumes `P_k`.
pub fn atomic_inflection_seq(spec: &PencilSpec, m: u32, mode: UMode) -> Vec<MPoly> {
    assert!(m >= 1);
    let f = base_poly(spec);
    let u = u_poly(spec, mode);
    let df = f.hasse_derivative("x", 1).expect("x is a pencil variable");
    let mut seq = Vec::with_capacity(m as usize);
    let mut p = u.mul(&df);
    seq.push(p.clone());
    for k in 1..m {
        let uk = u.sub(&MPoly::constant(&f.vars, rat_int(k as i64)));
        let num = p
            .hasse_derivative("x", 1)
            .unwrap()
            .mul(&f)
            .add(&p.mul(&df).mul(&uk));
        p = num.scale(&rat(1, (k + 1) as i64));
        seq.push(p.clone());
    }
    seq
}

/// The `(l, m)`-th atomic inflection polynomial.
pub fn atomic_inflection(spec: &PencilSpec, m: u32, mode: UMode) -> InflectionPoly {
    let seq = atomic_inflection_seq(spec, m, mode);
    InflectionPoly {
        poly: seq.into_iter().last().unwrap(),
        m,
        spec: spec.clone(),
        u_mode: mode,
    }
}

/// Exact residual of the defining recursion:
/// `(m+1) P_(m+1) - D^1 P_m * f - P_m * D^1 f * (u - m)`, which must vanish
/// for every consecutive pair of a sequence.
pub fn recursion_residual(spec: &PencilSpec, mode: UMode, seq: &[MPoly]) -> bool {
    let f = base_poly(spec);
    let df = f.hasse_derivative("x", 1).unwrap();
    let u = u_poly(spec, mode);
    for k in 1..seq.len() {
        let m = k as i64; // seq[k] is P_(m+1)
        let um = u.sub(&MPoly::constant(&f.vars, rat_int(m)));
        let lhs = seq[k].scale_int(m + 1);
        let rhs = seq[k - 1]
            .hasse_derivative("x", 1)
            .unwrap()
            .mul(&f)
            .add(&seq[k - 1].mul(&df).mul(&um));
        if lhs.sub(&rhs) != MPoly::zero(&f.vars) {
            return false;
        }
    }
    true
}

/// Substitutes `u -> l/n` in a symbolic sequence member.
pub fn specialize_u(spec: &PencilSpec, p: &MPoly) -> MPoly {
    let vs = p.vars.clone();
    let mut m = BTreeMap::new();
    m.insert("u".to_string(), MPoly::constant(&vs, spec.u_value()));
    p.substitute(&m).expect("u is a pencil variable")
}

// ---------------------------------------------------------------------------
// Monomial bases
// ---------------------------------------------------------------------------

/// Monomial basis of the complete series of degree `l` at the distinguished
/// ramification point at infinity: pairs `(i, j)` with `0 <= j <= n-1` and
/// `n i + d j <= l`, sorted by pole order `n i + d j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    pub n: u32,
    pub d: u32,
    pub ell: u32,
    pub elements: Vec<(u32, u32)>,
}

/// Genus of the smooth superelliptic model, `(d-1)(n-1)/2`, for
/// `gcd(n, d) = 1`.
pub fn superelliptic_genus(n: u32, d: u32) -> u32 {
    (d - 1) * (n - 1) / 2
}

pub fn monomial_basis(n: u32, d: u32, ell: u32) -> Result<MonomialBasis> {
    if gcd_u32(n, d) != 1 {
        return Err(Error::Hypotheses("gcd(n, d) must be 1".into()));
    }
    let mut elements = Vec::new();
    for j in 0..n {
        if (d * j) > ell {
            continue;
        }
        let imax = (ell - d * j) / n;
        for i in 0..=imax {
            elements.push((i, j));
        }
    }
    elements.sort_by_key(|&(i, j)| n * i + d * j);
    Ok(MonomialBasis { n, d, ell, elements })
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

// ---------------------------------------------------------------------------
// Bielliptic parity
// ---------------------------------------------------------------------------

/// `Q_m` for the bielliptic family: `P_m` for even `m`, `P_m / x` for odd
/// `m > 1`; always a polynomial in `x^2`. A parity failure would falsify
/// the statement and is raised as an error.
pub fn bielliptic_qm(spec: &PencilSpec, m: u32, mode: UMode) -> Result<MPoly> {
    if spec.kind != PencilKind::Bielliptic {
        return Err(Error::Refused("bielliptic pencil required".into()));
    }
    let p = atomic_inflection(spec, m, mode).poly;
    let q = if m % 2 == 0 || m == 1 {
        p
    } else {
        let x = MPoly::var(&p.vars, "x");
        p.exact_divide(&x)
            .map_err(|_| Error::Hypotheses(format!("x does not divide P_{m}")))?
    };
    // even support in x
    if q.support_2d("x", "s1")?.iter().any(|&(e, _)| e % 2 != 0) {
        return Err(Error::Hypotheses(format!(
            "Q_{m} has an odd exponent in x"
        )));
    }
    Ok(q)
}

/// Rewrites an even polynomial `q(x)` as a polynomial in `X = x^2` by
/// halving exponents (in the same variable slot).
pub fn halve_even_variable(q: &MPoly, var: &str) -> Result<MPoly> {
    let vi = q.var_index(var)?;
    let mut out = MPoly::zero(&q.vars);
    for (e, c) in &q.terms {
        if e[vi] % 2 != 0 {
            return Err(Error::Hypotheses("odd exponent".into()));
        }
        let mut e2 = e.clone();
        e2[vi] /= 2;
        out.add_term(e2, c.clone());
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Graded weight classes
// ---------------------------------------------------------------------------

/// Outcome of a weighted-degree homogeneity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightClass {
    Homogeneous(i64),
    NotHomogeneous { class_a: i64, class_b: i64 },
}

/// If every monomial of `p` has the same weighted degree mod `modulus`,
/// returns that class; otherwise returns two witness classes.
pub fn graded_weight_class(p: &MPoly, weights: &[(&str, i64)], modulus: i64) -> Result<WeightClass> {
    assert!(modulus > 0);
    let mut idx = Vec::new();
    for (name, w) in weights {
        idx.push((p.var_index(name)?, *w));
    }
    let mut class: Option<i64> = None;
    for e in p.terms.keys() {
        let mut deg = 0i64;
        for &(vi, w) in &idx {
            deg += e[vi] as i64 * w;
        }
        let c = deg.rem_euclid(modulus);
        match class {
            None => class = Some(c),
            Some(c0) if c0 != c => {
                return Ok(WeightClass::NotHomogeneous { class_a: c0, class_b: c })
            }
            _ => {}
        }
    }
    Ok(WeightClass::Homogeneous(class.unwrap_or(0)))
}

// ---------------------------------------------------------------------------
// Legendre symmetries
// ---------------------------------------------------------------------------

/// Checks both symmetry identities of the equal-exponent Legendre pencil
/// `y^n = x^a (x-1)^a (x-lam)^a`:
///
/// 1. homogenizing `P_m(x, lam)` to its total degree with a third variable
///    and dehomogenizing at `lam = 1` returns the same polynomial (with the
///    new variable playing the old `lam`);
/// 2. `P_m(x+1, lam+1) = (-1)^(a m) P_m(-x, -lam)`.
pub fn legendre_symmetry_check(a: u32, m: u32, ell: u32, n: u32) -> VerificationReport {
    let spec = PencilSpec::new(PencilKind::Legendre { a, b: a, c: a }, n, ell);
    let p = atomic_inflection(&spec, m, UMode::Specialized).poly;
    let id = "legendre.symmetry";
    let params = format!("a={a} m={m} ell={ell} n={n}");

    // identity 1: coefficient array satisfies c(i, j) = c(i, D - i - j)
    let vs = p.vars.clone();
    let deg = p.total_degree();
    let mut swapped = MPoly::zero(&vs);
    let ix = p.var_index("x").unwrap();
    let il = p.var_index("lam").unwrap();
    let mut ok1 = true;
    for (e, c) in &p.terms {
        let i = e[ix] as i64;
        let j = e[il] as i64;
        let k = deg - i - j;
        if k < 0 {
            ok1 = false;
            break;
        }
        let mut e2 = e.clone();
        e2[il] = k as u16;
        swapped.add_term(e2, c.clone());
    }
    let ok1 = ok1 && swapped == p;

    // identity 2: P(x+1, lam+1) = (-1)^(a m) P(-x, -lam)
    let x = MPoly::var(&vs, "x");
    let lam = MPoly::var(&vs, "lam");
    let one = MPoly::one(&vs);
    let mut shift = BTreeMap::new();
    shift.insert("x".to_string(), x.add(&one));
    shift.insert("lam".to_string(), lam.add(&one));
    let lhs = p.substitute(&shift).unwrap();
    let mut flip = BTreeMap::new();
    flip.insert("x".to_string(), x.neg());
    flip.insert("lam".to_string(), lam.neg());
    let mut rhs = p.substitute(&flip).unwrap();
    if (a * m) % 2 == 1 {
        rhs = rhs.neg();
    }
    let ok2 = lhs == rhs;

    if ok1 && ok2 {
        VerificationReport::pass(id, &params, "both identities hold".into(), "both identities hold".into())
    } else {
        VerificationReport::fail(
            id,
            &params,
            format!("identity1={ok1} identity2={ok2}"),
            "both identities hold".into(),
            if !ok1 { "homogenize-swap identity" } else { "translate-negate identity" }.into(),
        )
    }
}

// ---------------------------------------------------------------------------
// D6 factorization
// ---------------------------------------------------------------------------

/// Result of peeling the predicted `x^e (4z - 1)` factor off a D6
/// inflection polynomial.
#[derive(Clone, Debug)]
pub struct D6Factorization {
    pub m: u32,
    pub exponent: u32,
    pub x_power_divides: bool,
    pub linear_divides: bool,
    pub reduced: MPoly,
}

/// Peels `x^e (4z-1)` with `e = (-m) mod 3` off the D6 `P_m` (`m >= 4`).
/// Failure is data, not a crash: the booleans record which factor divides,
/// and `reduced` holds whatever remains after the successful peels.
pub fn d6_factor(spec: &PencilSpec, m: u32, mode: UMode) -> Result<D6Factorization> {
    if spec.kind != PencilKind::D6 {
        return Err(Error::Refused("d6 pencil required".into()));
    }
    if m < 4 {
        return Err(Error::Refused("stated for m >= 4".into()));
    }
    let p = atomic_inflection(spec, m, mode).poly;
    let vs = p.vars.clone();
    let e = (-(m as i64)).rem_euclid(3) as u32;
    let x = MPoly::var(&vs, "x");
    let mut reduced = p.clone();
    let mut x_ok = true;
    for _ in 0..e {
        match reduced.exact_divide(&x) {
            Ok(q) => reduced = q,
            Err(_) => {
                x_ok = false;
                break;
            }
        }
    }
    let lin = MPoly::var(&vs, "z")
        .scale_int(4)
        .sub(&MPoly::one(&vs));
    let mut lin_ok = true;
    match reduced.exact_divide(&lin) {
        Ok(q) => reduced = q,
        Err(_) => lin_ok = false,
    }
    Ok(D6Factorization {
        m,
        exponent: e,
        x_power_divides: x_ok,
        linear_divides: lin_ok,
        reduced,
    })
}

// ---------------------------------------------------------------------------
// Closed coefficient formulas
// ---------------------------------------------------------------------------

/// The registered coefficient-formula statements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffTheorem {
    /// Four boundary vertices of the generic Legendre polygon, symbolic `u`.
    LegendreGenericVertices { a: u32, b: u32, c: u32 },
    /// Five explicit coefficients of the `u = 1/2` Legendre pencil.
    LegendreUHalf,
    /// Six centered Weierstrass coefficients, symbolic `u`.
    WeierstrassCentered,
    /// Three vertex coefficients of the D4 polygon, symbolic `u`.
    D4Vertices,
    /// Inner-edge coefficients `c_(j,k)`/`d_(j,k)` of the centered
    /// Weierstrass polynomial, symbolic `u` (a stated conjecture).
    InnerEdge,
}

fn coeff_uv(p: &MPoly, vx: &str, i: u16, vparam: &str, j: u16) -> MPoly {
    p.coeff_of(vx, i)
        .unwrap()
        .coeff_of(vparam, j)
        .unwrap()
}

fn falling_sym(vs: &Vars, k: u32) -> MPoly {
    factorial_gadget_sym(vs, "u", k, FactorialKind::Falling)
}

fn scaled_falling(vs: &Vars, scale: i64, k: u32) -> MPoly {
    // (scale*u)_k
    let w = MPoly::var(vs, "u").scale_int(scale);
    let mut acc = MPoly::one(vs);
    for i in 0..k as i64 {
        acc = acc.mul(&w.sub(&MPoly::constant(vs, rat_int(i))));
    }
    acc
}

fn dbl_rising_int(start: i64, len: u32) -> Rat {
    let mut acc = rat_int(1);
    for i in 0..len as i64 {
        acc *= rat_int(start + 2 * i);
    }
    acc
}

fn dbl_falling_sym(vs: &Vars, shift: i64, len: u32) -> MPoly {
    // ((2u + shift))_len = prod (2u + shift - 2i)
    let w = MPoly::var(vs, "u").scale_int(2);
    let mut acc = MPoly::one(vs);
    for i in 0..len as i64 {
        acc = acc.mul(&w.add(&MPoly::constant(vs, rat_int(shift - 2 * i))));
    }
    acc
}

fn dbl_rising_sym(vs: &Vars, shift: i64, len: u32) -> MPoly {
    let w = MPoly::var(vs, "u").scale_int(2);
    let mut acc = MPoly::one(vs);
    for i in 0..len as i64 {
        acc = acc.mul(&w.add(&MPoly::constant(vs, rat_int(shift + 2 * i))));
    }
    acc
}

/// The Weierstrass pencil recentred at its distinguished singular point:
/// `x -> x + 1`, `lam -> lam - 3`.
pub fn weierstrass_centered(p: &MPoly) -> MPoly {
    let vs = p.vars.clone();
    let x = MPoly::var(&vs, "x");
    let lam = MPoly::var(&vs, "lam");
    let one = MPoly::one(&vs);
    let mut m = BTreeMap::new();
    m.insert("x".to_string(), x.add(&one));
    m.insert("lam".to_string(), lam.sub(&one.scale_int(3)));
    p.substitute(&m).unwrap()
}

/// Compares one closed-form coefficient statement against the computed
/// symbolic-`u` (or `u = 1/2`) inflection polynomial of index `m`.
///
/// Mismatches are reported as failing reports carrying the offending
/// monomial; unknown statements error.
pub fn coefficient_check(thm: &CoeffTheorem, m: u32) -> Result<VerificationReport> {
    let id = "coefficients";
    match thm {
        CoeffTheorem::LegendreGenericVertices { a, b, c } => {
            let spec = PencilSpec::new(
                PencilKind::Legendre { a: *a, b: *b, c: *c },
                1000 * (a + b + c), // any n with u generic; symbolic u makes it irrelevant
                1,
            );
            let p = atomic_inflection(&spec, m, UMode::Symbolic).poly;
            let vs = p.vars.clone();
            let (a, b, c, mm) = (*a as i64, *b as i64, *c as i64, m as i64);
            let fm = Rat::from_integer(factorial(mm));
            let sgn = |e: i64| if e % 2 == 0 { 1 } else { -1 };
            let cases: Vec<((i64, i64), MPoly)> = vec![
                (
                    ((mm * a + mm * c - mm), 0),
                    scaled_falling(&vs, a + c, m).scale(&(rat_int(sgn(b * mm)) / fm.clone())),
                ),
                (
                    ((mm * a + mm * b + mm * c - mm), 0),
                    scaled_falling(&vs, a + b + c, m).scale(&(rat_int(1) / fm.clone())),
                ),
                (
                    ((mm * a - mm), mm * c),
                    scaled_falling(&vs, a, m).scale(&(rat_int(sgn((b + c) * mm)) / fm.clone())),
                ),
                (
                    ((mm * a + mm * b - mm), mm * c),
                    scaled_falling(&vs, a + b, m).scale(&(rat_int(sgn(c * mm)) / fm)),
                ),
            ];
            for ((i, j), expect) in cases {
                let got = coeff_uv(&p, "x", i as u16, "lam", j as u16);
                if got != expect {
                    return Ok(VerificationReport::fail(
                        id,
                        &format!("legendre-generic a={a} b={b} c={c} m={m}"),
                        got.render(),
                        expect.render(),
                        format!("x^{i}*lam^{j}"),
                    ));
                }
            }
            Ok(VerificationReport::pass(
                id,
                &format!("legendre-generic a={a} b={b} c={c} m={m}"),
                "4 vertex coefficients".into(),
                "4 vertex coefficients".into(),
            ))
        }
        CoeffTheorem::LegendreUHalf => {
            if m < 2 {
                return Err(Error::Refused("stated for m >= 2".into()));
            }
            let spec = PencilSpec::new(PencilKind::Legendre { a: 1, b: 1, c: 1 }, 2, 1);
            let p = atomic_inflection(&spec, m, UMode::Specialized).poly;
            let u = rat(1, 2);
            let mm = m as i64;
            let fall = |w: Rat, k: u32| crate::factorial::factorial_gadget(&w, k, FactorialKind::Falling);
            let e12 = rat(-1, 8);
            let e34 = -(rat_int(2) * u.clone() * fall(u.clone() * rat_int(3) - rat_int(1), m - 1))
                / Rat::from_integer(factorial(mm - 1));
            let e5 = (u.clone() * rat_int(4 * mm - 1) - rat_int(mm))
                * u.clone()
                * fall(u * rat_int(3) - rat_int(2), m - 2)
                / Rat::from_integer(factorial(mm - 1));
            let cases: Vec<((i64, i64), Rat)> = vec![
                ((mm - 2, mm), e12.clone()),
                ((mm - 2, 2), e12),
                ((2 * mm - 1, 0), e34.clone()),
                ((2 * mm - 1, 1), e34),
                ((2 * mm - 2, 1), e5),
            ];
            for ((i, j), expect) in cases {
                let got = coeff_uv(&p, "x", i as u16, "lam", j as u16);
                let want = MPoly::constant(&p.vars, expect);
                if got != want {
                    return Ok(VerificationReport::fail(
                        id,
                        &format!("legendre-u-half m={m}"),
                        got.render(),
                        want.render(),
                        format!("x^{i}*lam^{j}"),
                    ));
                }
            }
            Ok(VerificationReport::pass(
                id,
                &format!("legendre-u-half m={m}"),
                "5 coefficients".into(),
                "5 coefficients".into(),
            ))
        }
        CoeffTheorem::WeierstrassCentered => {
            if m < 3 {
                return Err(Error::Refused("stated for m >= 3".into()));
            }
            let spec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
            let p = weierstrass_centered(&atomic_inflection(&spec, m, UMode::Symbolic).poly);
            let vs = p.vars.clone();
            let mm = m as i64;
            let k = (m / 2) as i64; // floor(m/2)
            let odd = m % 2 == 1;
            let fk = Rat::from_integer(factorial(k));
            // v1 at (0, ceil(m/2))
            let v1 = if odd {
                falling_sym(&vs, k as u32)
                    .mul(&MPoly::var(&vs, "u").scale_int(3).sub(&MPoly::constant(&vs, rat_int(2 * k))))
                    .scale(&(rat_pow3(k - 1) / fk.clone()))
            } else {
                falling_sym(&vs, k as u32).scale(&(rat_pow3(k) / fk.clone()))
            };
            // v2 at (0, m)
            let v2 = falling_sym(&vs, m).scale(&(rat_int(1) / Rat::from_integer(factorial(mm))));
            // v4 at (m-2, 1)
            let v4 = {
                let len = (k - 1) as u32;
                let denom = Rat::from_integer(factorial(k - 1))
                    * dbl_rising_int(if odd { 3 } else { 1 }, len);
                let num = rat_pow3(mm - 1) * if odd { rat_int(2) } else { rat_int(1) };
                dbl_falling_sym(&vs, -3, len)
                    .mul(&falling_sym(&vs, if odd { k as u32 + 1 } else { k as u32 }))
                    .scale(&(num / denom))
            };
            // v5 at (2m-1, 0), v6 at (2m, 0)
            let v5 = scaled_falling(&vs, 3, m)
                .scale(&(rat_int(2) / Rat::from_integer(factorial(mm - 1))));
            let v6 = scaled_falling(&vs, 3, m)
                .scale(&(rat_int(1) / Rat::from_integer(factorial(mm))));
            let mut cases: Vec<((i64, i64), MPoly)> = vec![
                ((0, (mm + 1) / 2), v1),
                ((0, mm), v2),
                ((mm - 2, 1), v4),
                ((2 * mm - 1, 0), v5),
                ((2 * mm, 0), v6),
            ];
            if odd {
                // v3 at (1, (m-1)/2)
                let v3 = falling_sym(&vs, k as u32 + 1)
                    .scale(&(rat_int(2) * rat_pow3(k + 1) / fk));
                cases.push(((1, k), v3));
            }
            for ((i, j), expect) in cases {
                let got = coeff_uv(&p, "x", i as u16, "lam", j as u16);
                if got != expect {
                    return Ok(VerificationReport::fail(
                        id,
                        &format!("weierstrass-centered m={m}"),
                        got.render(),
                        expect.render(),
                        format!("x^{i}*lam^{j}"),
                    ));
                }
            }
            Ok(VerificationReport::pass(
                id,
                &format!("weierstrass-centered m={m}"),
                format!("{} vertex coefficients", if odd { 6 } else { 5 }),
                format!("{} vertex coefficients", if odd { 6 } else { 5 }),
            ))
        }
        CoeffTheorem::D4Vertices => {
            if m < 2 {
                return Err(Error::Refused("stated for m >= 2".into()));
            }
            let spec = PencilSpec::new(PencilKind::D4, 2, 1);
            let p = atomic_inflection(&spec, m, UMode::Symbolic).poly;
            let vs = p.vars.clone();
            let mm = m as i64;
            let fm = Rat::from_integer(factorial(mm));
            let cases: Vec<((i64, i64), MPoly)> = vec![
                ((0, mm), falling_sym(&vs, m).scale(&(rat_int(1) / fm.clone()))),
                ((2 * mm, 0), scaled_falling(&vs, 3, m).scale(&(rat_int(1) / fm.clone()))),
                ((4 * mm, 0), scaled_falling(&vs, 5, m).scale(&(rat_int(1) / fm))),
            ];
            for ((i, j), expect) in cases {
                let got = coeff_uv(&p, "x", i as u16, "s", j as u16);
                if got != expect {
                    return Ok(VerificationReport::fail(
                        id,
                        &format!("d4-vertices m={m}"),
                        got.render(),
                        expect.render(),
                        format!("x^{i}*s^{j}"),
                    ));
                }
            }
            Ok(VerificationReport::pass(
                id,
                &format!("d4-vertices m={m}"),
                "3 vertex coefficients".into(),
                "3 vertex coefficients".into(),
            ))
        }
        CoeffTheorem::InnerEdge => {
            if m < 6 {
                return Err(Error::Refused("stated for m >= 6".into()));
            }
            let spec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
            let p = weierstrass_centered(&atomic_inflection(&spec, m, UMode::Symbolic).poly);
            let vs = p.vars.clone();
            let k = (m / 2) as i64;
            let odd = m % 2 == 1;
            for j in 1..=(k - 2) {
                let denom = Rat::from_integer(factorial(k - j))
                    * (1..=j).map(|i| rat_int(i * (2 * i + 1))).product::<Rat>();
                let (pos, expect) = if !odd {
                    let cjk = rat_pow3(j + k) * rat_int(2 * j + 1) / denom;
                    (
                        (2 * j, k - j),
                        falling_sym(&vs, k as u32)
                            .mul(&dbl_rising_sym(&vs, -2 * k + 1, j as u32))
                            .scale(&cjk),
                    )
                } else {
                    let djk = rat_int(2) * rat_pow3(j + k + 1) / denom;
                    (
                        (2 * j + 1, k - j),
                        falling_sym(&vs, k as u32 + 1)
                            .mul(&dbl_rising_sym(&vs, -2 * k + 1, j as u32))
                            .scale(&djk),
                    )
                };
                let got = coeff_uv(&p, "x", pos.0 as u16, "lam", pos.1 as u16);
                if got != expect {
                    return Ok(VerificationReport::fail(
                        id,
                        &format!("inner-edge m={m}"),
                        got.render(),
                        expect.render(),
                        format!("x^{}*lam^{}", pos.0, pos.1),
                    ));
                }
            }
            Ok(VerificationReport::pass(
                id,
                &format!("inner-edge m={m}"),
                format!("{} inner-edge coefficients", (k - 2).max(0)),
                format!("{} inner-edge coefficients", (k - 2).max(0)),
            )
            .with_assumption("stated as a conjecture; verified for this m"))
        }
    }
}

fn rat_pow3(e: i64) -> Rat {
    let mut r = rat_int(1);
    for _ in 0..e {
        r *= rat_int(3);
    }
    r
}

/// Checks the denominator support statement: with `u` specialized to
/// `l/n`, every coefficient denominator's prime factors divide `n`.
pub fn denominator_support_check(spec: &PencilSpec, m: u32) -> bool {
    let seq = atomic_inflection_seq(spec, m, UMode::Specialized);
    seq.iter().all(|p| {
        p.terms.values().all(|c| {
            crate::rat::denominator_divides_power_of(c.denom(), spec.n as u64)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_polynomials() {
        let leg = PencilSpec::new(PencilKind::Legendre { a: 1, b: 1, c: 1 }, 2, 1);
        assert_eq!(base_poly(&leg).render(), "x*lam - x^2 - x^2*lam + x^3");
        let wei = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
        assert_eq!(base_poly(&wei).render(), "2 + x*lam + x^3");
        let d6 = PencilSpec::new(PencilKind::D6, 2, 1);
        assert_eq!(base_poly(&d6).render(), "z + x^3 + x^6");
    }

    #[test]
    fn seed_and_recursion() {
        // Legendre(1,1,1), m=1, symbolic: u (3x^2 - 2(1+lam)x + lam)
        let spec = PencilSpec::new(PencilKind::Legendre { a: 1, b: 1, c: 1 }, 2, 1);
        let p1 = atomic_inflection(&spec, 1, UMode::Symbolic).poly;
        let vs = p1.vars.clone();
        let expect = MPoly::parse(&vs, "3*x^2*u - 2*x*u - 2*x*lam*u + lam*u").unwrap();
        assert_eq!(p1, expect);
        let seq = atomic_inflection_seq(&spec, 5, UMode::Symbolic);
        assert!(recursion_residual(&spec, UMode::Symbolic, &seq));
    }

    #[test]
    fn displayed_weierstrass_p3() {
        let spec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
        let p3 = atomic_inflection(&spec, 3, UMode::Specialized).poly;
        let vs = p3.vars.clone();
        let expect = MPoly::parse(
            &vs,
            "2 - 5/2*x^3 - 1/16*x^6 + 1/2*x*lam - 5/16*x^4*lam + 5/16*x^2*lam^2 + 1/16*lam^3",
        )
        .unwrap();
        assert_eq!(p3, expect);
    }

    #[test]
    fn monomial_bases() {
        let b = monomial_basis(2, 5, 6).unwrap();
        assert_eq!(b.elements, vec![(0, 0), (1, 0), (2, 0), (0, 1), (3, 0)]);
        assert_eq!(b.elements.len() as u32, 6 - superelliptic_genus(2, 5) + 1);
        let b2 = monomial_basis(3, 4, 9).unwrap();
        assert_eq!(b2.elements.len(), 7);
        let b3 = monomial_basis(2, 3, 0).unwrap();
        assert_eq!(b3.elements, vec![(0, 0)]);
        assert!(monomial_basis(2, 4, 5).is_err());
    }

    #[test]
    fn d4_s2_coefficient() {
        // coefficient of s^2 in P_2 is (u)_2 / 2!
        let spec = PencilSpec::new(PencilKind::D4, 2, 1);
        let p2 = atomic_inflection(&spec, 2, UMode::Symbolic).poly;
        let got = coeff_uv(&p2, "x", 0, "s", 2);
        let expect = falling_sym(&p2.vars, 2).scale(&rat(1, 2));
        assert_eq!(got, expect);
    }

    #[test]
    fn bielliptic_parity() {
        let spec = PencilSpec::new(PencilKind::Bielliptic, 2, 1);
        for m in [2u32, 3, 4, 5] {
            let q = bielliptic_qm(&spec, m, UMode::Specialized).unwrap();
            assert!(q.support_2d("x", "s1").unwrap().iter().all(|&(e, _)| e % 2 == 0));
        }
    }

    #[test]
    fn weight_classes() {
        let spec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
        let p3 = atomic_inflection(&spec, 3, UMode::Specialized).poly;
        assert_eq!(
            graded_weight_class(&p3, &[("x", 1), ("lam", -1)], 3).unwrap(),
            WeightClass::Homogeneous(0)
        );
        let vs = p3.vars.clone();
        let bad = MPoly::parse(&vs, "x + lam").unwrap();
        assert!(matches!(
            graded_weight_class(&bad, &[("x", 1), ("lam", -1)], 3).unwrap(),
            WeightClass::NotHomogeneous { .. }
        ));
        let c = MPoly::one(&vs);
        assert_eq!(
            graded_weight_class(&c, &[("x", 1), ("lam", -1)], 3).unwrap(),
            WeightClass::Homogeneous(0)
        );
    }

    #[test]
    fn denominator_support() {
        let spec = PencilSpec::new(PencilKind::Legendre { a: 1, b: 1, c: 1 }, 5, 2);
        assert!(denominator_support_check(&spec, 6));
    }
}
