//! Singular loci, discriminant curves and their components.
//!
//! Everything here reduces to exact elimination: resultants locate
//! parameter values of singular fibers, evaluations certify singular
//! points exactly (over `Q` or a quadratic quotient ring), and printed
//! component polynomials are division targets against computed
//! discriminants.

use crate::error::{Error, Result};
use crate::lattice::{ambient_simplex, lower_hull_delta, GenusReport};
use crate::mpoly::{vars, MPoly, Vars};
use crate::pencils::{
    atomic_inflection, bielliptic_qm, halve_even_variable, weierstrass_centered, PencilKind,
    PencilSpec, UMode,
};
use crate::quotient::{QuotElt, QuotientRing};
use crate::coeff::Coeff;
use crate::rat::{rat, rat_int, Rat};
use crate::report::VerificationReport;
use crate::resultant::{
    gcd_mpoly, gcd_squarefree, multiplicity_of, resultant, resultant_interp,
};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

// ---------------------------------------------------------------------------
// Singular candidates and point certification
// ---------------------------------------------------------------------------

/// Squarefree eliminant of the singular locus of a curve `P(x, param) = 0`:
/// the squarefree part of `gcd(res_x(P, P_x), res_x(P, P_param))`. Roots of
/// the eliminant contain every parameter value of a singular point.
pub fn singular_candidates(p: &MPoly, varx: &str, param: &str) -> Result<MPoly> {
    if p.degree_in(varx)? < 1 || p.degree_in(param)? < 1 {
        return Err(Error::Hypotheses("curve must involve both variables".into()));
    }
    let px = p.hasse_derivative(varx, 1)?;
    let pp = p.hasse_derivative(param, 1)?;
    let r1 = resultant(p, &px, varx)?;
    let r2 = resultant(p, &pp, varx)?;
    if r1.is_zero() || r2.is_zero() {
        return Err(Error::Hypotheses("degenerate resultant".into()));
    }
    let g = gcd_mpoly(&r1, &r2);
    let (_, sf) = gcd_squarefree(&g)?;
    Ok(sf)
}

/// Exact certification record for one candidate singular point.
#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub point: String,
    /// Rendered values of `(P, P_x, P_param)` at the point.
    pub values: [String; 3],
    pub verified: bool,
}

/// Certifies a rational candidate point.
pub fn verify_singular_point(
    p: &MPoly,
    varx: &str,
    x0: &Rat,
    param: &str,
    p0: &Rat,
) -> Result<SingularityReport> {
    let mut pt = BTreeMap::new();
    pt.insert(varx.to_string(), x0.clone());
    pt.insert(param.to_string(), p0.clone());
    let v0 = p.eval(&pt)?;
    let v1 = p.hasse_derivative(varx, 1)?.eval(&pt)?;
    let v2 = p.hasse_derivative(param, 1)?.eval(&pt)?;
    Ok(SingularityReport {
        point: format!(
            "({}, {})",
            crate::rat::format_rat(x0),
            crate::rat::format_rat(p0)
        ),
        values: [
            crate::rat::format_rat(&v0),
            crate::rat::format_rat(&v1),
            crate::rat::format_rat(&v2),
        ],
        verified: v0.is_zero() && v1.is_zero() && v2.is_zero(),
    })
}

/// Certifies a candidate point with coordinates in a quadratic quotient
/// ring.
pub fn verify_singular_point_quot(
    p: &MPoly,
    varx: &str,
    x0: &QuotElt,
    param: &str,
    p0: &QuotElt,
) -> Result<SingularityReport> {
    let mut pt = BTreeMap::new();
    pt.insert(varx.to_string(), x0.clone());
    pt.insert(param.to_string(), p0.clone());
    let v0 = p.eval_quot(&pt)?;
    let v1 = p.hasse_derivative(varx, 1)?.eval_quot(&pt)?;
    let v2 = p.hasse_derivative(param, 1)?.eval_quot(&pt)?;
    Ok(SingularityReport {
        point: format!("({}, {})", x0.render(), p0.render()),
        values: [v0.render(), v1.render(), v2.render()],
        verified: v0.is_zero() && v1.is_zero() && v2.is_zero(),
    })
}

// ---------------------------------------------------------------------------
// Bielliptic surface discriminant and its component ledger
// ---------------------------------------------------------------------------

/// Divisibility record of one printed component against a computed target.
#[derive(Clone, Debug)]
pub struct ComponentEntry {
    pub label: String,
    pub component: MPoly,
    pub divides: bool,
    pub multiplicity: usize,
}

/// Component ledger of one discriminant computation.
#[derive(Clone, Debug)]
pub struct ComponentLedger {
    pub target: String,
    /// The elimination variable convention in force.
    pub convention: String,
    pub entries: Vec<ComponentEntry>,
}

impl ComponentLedger {
    pub fn all_divide(&self) -> bool {
        self.entries.iter().all(|e| e.divides)
    }
}

/// Which resultant route the surface discriminant uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscRoute {
    /// Sylvester matrix + fraction-free elimination.
    Direct,
    /// Evaluation–interpolation over `(s1, s2)`.
    Interp,
}

fn biell_vars() -> Vars {
    vars(&["x", "s1", "s2", "u"])
}

/// The reduced bielliptic discriminant quartic
/// `-s1^2 s2^2 + 4 s1^3 + 4 s2^3 - 18 s1 s2 + 27` on a chosen variable
/// list.
pub fn delta_star_quartic(vs: &Vars) -> MPoly {
    MPoly::parse(
        vs,
        "-s1^2*s2^2 + 4*s1^3 + 4*s2^3 - 18*s1*s2 + 27",
    )
    .unwrap()
}

fn parse_fixture(vs: &Vars, text: &str) -> MPoly {
    let body: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join(" ");
    MPoly::parse(vs, &body).expect("fixture parses")
}

/// Printed components of the reduced inflectionary discriminant per `m`.
pub fn printed_components(m: u32) -> Result<Vec<(String, MPoly)>> {
    let vs = biell_vars();
    let dstar = ("delta-star".to_string(), delta_star_quartic(&vs));
    let mk = |label: &str, text: &str| (label.to_string(), MPoly::parse(&vs, text).unwrap());
    Ok(match m {
        2 => vec![dstar],
        3 => vec![
            dstar,
            mk("conic-tangency", "4*s1 - s2^2"),
            (
                "m3-extra".to_string(),
                parse_fixture(&vs, include_str!("../fixtures/biell_disc_m3_component.txt")),
            ),
        ],
        4 => vec![
            dstar,
            mk("lc-locus", "s1^2 - 4*s2"),
            mk("conic-tangency", "s2^2 - 4*s1"),
            mk("quartic-extra", "-1125 + 4*s1^3 + 110*s1*s2 - s1^2*s2^2 + 4*s2^3"),
            (
                "sextic-extra".to_string(),
                parse_fixture(&vs, include_str!("../fixtures/biell_disc_m4_sextic.txt")),
            ),
        ],
        5 => vec![
            dstar,
            mk("lc-locus", "s1^2 - 4*s2"),
            mk("constant-term-locus", "-8 + 4*s1*s2 - s2^3"),
            (
                "m5-extra".to_string(),
                parse_fixture(&vs, include_str!("../fixtures/biell_disc_m5_component.txt")),
            ),
        ],
        _ => return Err(Error::Refused(format!("no printed components for m={m}"))),
    })
}

/// Computes the inflectionary discriminant data of the bielliptic surface
/// for index `m`: the resultant of `Q_m` (as a polynomial in `X = x^2`)
/// with its `X`-derivative, the constant-term factor `Q_m(0)` (the branch
/// collision at `x = 0`), and the divisibility ledger of every printed
/// component against their product.
pub fn surface_discriminant(
    m: u32,
    route: DiscRoute,
) -> Result<(MPoly, MPoly, ComponentLedger)> {
    if m < 2 {
        return Err(Error::Hypotheses("stated for m >= 2".into()));
    }
    let spec = PencilSpec::new(PencilKind::Bielliptic, 2, 1);
    let q = bielliptic_qm(&spec, m, UMode::Specialized)?;
    let qx = halve_even_variable(&q, "x")?;
    let dqx = qx.hasse_derivative("x", 1)?;
    let res = match route {
        DiscRoute::Direct => resultant(&qx, &dqx, "x")?,
        DiscRoute::Interp => resultant_interp(&qx, &dqx, "x", &["s1", "s2"])?,
    };
    let q0 = qx.coeff_of("x", 0)?;
    let target = res.mul(&q0);
    let mut entries = Vec::new();
    if let Ok(comps) = printed_components(m) {
        for (label, comp) in comps {
            let mult = multiplicity_of(&target, &comp);
            entries.push(ComponentEntry {
                label,
                component: comp,
                divides: mult >= 1,
                multiplicity: mult,
            });
        }
    }
    let ledger = ComponentLedger {
        target: format!("res_X(Q_{m}, D^1 Q_{m}) * Q_{m}(0)"),
        convention: "elimination in X = x^2; the constant-term factor \
                     carries the x = 0 branch collisions"
            .into(),
        entries,
    };
    Ok((res, q0, ledger))
}

// ---------------------------------------------------------------------------
// The rational parameterization of the reduced discriminant
// ---------------------------------------------------------------------------

fn param_vars() -> Vars {
    vars(&["x", "t"])
}

/// `[s1(t) : s2(t) : z(t)]`, the rational parameterization of the closure
/// of the reduced discriminant quartic.
pub fn delta_star_parameterization() -> (MPoly, MPoly, MPoly) {
    let vs = param_vars();
    let t_minus_2 = MPoly::parse(&vs, "t - 2").unwrap();
    let s1 = t_minus_2.mul(&MPoly::parse(&vs, "3*t^3 - 6*t^2 + 12*t - 8").unwrap());
    let s2 = MPoly::parse(&vs, "t")
        .unwrap()
        .mul(&MPoly::parse(&vs, "3*t^3 - 12*t^2 + 24*t - 16").unwrap());
    let z = MPoly::parse(&vs, "t^2").unwrap().mul(&t_minus_2.pow(2));
    (s1, s2, z)
}

/// The three parameterization/node checks on the reduced discriminant:
/// substitution vanishes identically, the nodes at `(3 zeta, 3 zeta^-1)`
/// carry vanishing gradients over the cyclotomic ring, and `(-1, -1)` is a
/// smooth rational point on the curve.
pub fn delta_star_checks() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let vs = vars(&["s1", "s2", "z"]);
    // homogeneous quartic
    let quart = MPoly::parse(
        &vs,
        "-s1^2*s2^2 + 4*s1^3*z + 4*s2^3*z - 18*s1*s2*z^2 + 27*z^4",
    )
    .unwrap();

    // (i) full symbolic substitution is identically zero
    let (s1t, s2t, zt) = delta_star_parameterization();
    let tvars = s1t.vars.clone();
    let lift = |p: &MPoly| -> MPoly {
        // rebuild the quartic over (x, t) with the substituted values
        let mut acc = MPoly::zero(&tvars);
        for (e, c) in &p.terms {
            let mut term = MPoly::constant(&tvars, c.clone());
            for _ in 0..e[0] {
                term = term.mul(&s1t);
            }
            for _ in 0..e[1] {
                term = term.mul(&s2t);
            }
            for _ in 0..e[2] {
                term = term.mul(&zt);
            }
            acc = acc.add(&term);
        }
        acc
    };
    let subbed = lift(&quart);
    out.push(if subbed.is_zero() {
        VerificationReport::pass(
            "bielliptic.delta-star.parameterization",
            "symbolic t",
            "0".into(),
            "0".into(),
        )
    } else {
        VerificationReport::fail(
            "bielliptic.delta-star.parameterization",
            "symbolic t",
            subbed.render(),
            "0".into(),
            "nonzero residual".into(),
        )
    });

    // t = 1 lands on the smooth point (-1, -1, 1)
    let mut one_pt = BTreeMap::new();
    one_pt.insert("x".to_string(), rat_int(0));
    one_pt.insert("t".to_string(), rat_int(1));
    let sval = (
        s1t.eval(&one_pt).unwrap(),
        s2t.eval(&one_pt).unwrap(),
        zt.eval(&one_pt).unwrap(),
    );
    let ok_t1 = sval == (rat_int(-1), rat_int(-1), rat_int(1));
    out.push(if ok_t1 {
        VerificationReport::pass(
            "bielliptic.delta-star.t-equals-1",
            "t=1",
            "(-1, -1, 1)".into(),
            "(-1, -1, 1)".into(),
        )
    } else {
        VerificationReport::fail(
            "bielliptic.delta-star.t-equals-1",
            "t=1",
            format!("{sval:?}"),
            "(-1, -1, 1)".into(),
            "parameter value".into(),
        )
    });

    // (ii) nodes at (3 zeta, 3 zeta^-1) over Q[w]/(w^2 + w + 1)
    let affine = delta_star_quartic(&biell_vars());
    let ring = QuotientRing::cyclotomic_cube();
    let zeta = ring.generator();
    let zeta_inv = zeta.mul_ref(&zeta); // zeta^2 = zeta^(-1)
    let p1 = ring.scalar(rat_int(3)).mul_ref(&zeta);
    let p2 = ring.scalar(rat_int(3)).mul_ref(&zeta_inv);
    let rep = verify_singular_point_quot(&affine, "s1", &p1, "s2", &p2).unwrap();
    out.push(if rep.verified {
        VerificationReport::pass(
            "bielliptic.delta-star.nodes",
            "(3 zeta, 3 zeta^-1)",
            "P, P_s1, P_s2 all vanish".into(),
            "P, P_s1, P_s2 all vanish".into(),
        )
    } else {
        VerificationReport::fail(
            "bielliptic.delta-star.nodes",
            "(3 zeta, 3 zeta^-1)",
            format!("{:?}", rep.values),
            "all zero".into(),
            rep.point,
        )
    });

    // (iii) the smooth point (-1, -1) lies on the quartic
    let mut pt = BTreeMap::new();
    pt.insert("s1".to_string(), rat_int(-1));
    pt.insert("s2".to_string(), rat_int(-1));
    pt.insert("x".to_string(), rat_int(0));
    pt.insert("u".to_string(), rat_int(0));
    let v = affine.eval(&pt).unwrap();
    out.push(if v.is_zero() {
        VerificationReport::pass(
            "bielliptic.delta-star.smooth-point",
            "(-1, -1)",
            "0".into(),
            "0".into(),
        )
    } else {
        VerificationReport::fail(
            "bielliptic.delta-star.smooth-point",
            "(-1, -1)",
            crate::rat::format_rat(&v),
            "0".into(),
            "(-1, -1)".into(),
        )
    });
    out
}

/// Cusp-locus elimination on the parameterized family
/// `g(t, x) = z(t) x^6 - s1(t) x^4 + s2(t) x^2 - z(t)`:
/// `3 t^2 - 6 t + 4` divides `gcd(res_x(g, D^1 g), res_x(g, D^2 g))`, its
/// roots are `1 ± sqrt(-1/3)`, and the degenerate `z(t)`-power factors of
/// the resultants are recorded and discarded explicitly.
pub fn cusp_locus() -> VerificationReport {
    let vs = param_vars();
    let x = MPoly::var(&vs, "x");
    let (s1t, s2t, zt) = delta_star_parameterization();
    let g = zt
        .mul(&x.pow(6))
        .sub(&s1t.mul(&x.pow(4)))
        .add(&s2t.mul(&x.pow(2)))
        .sub(&zt);
    let r1 = resultant(&g, &g.hasse_derivative("x", 1).unwrap(), "x").unwrap();
    let r2 = resultant(&g, &g.hasse_derivative("x", 2).unwrap(), "x").unwrap();
    let gg = gcd_mpoly(&r1, &r2);
    let cusp = MPoly::parse(&vs, "3*t^2 - 6*t + 4").unwrap();
    let divides = gg.exact_divide(&cusp).is_ok();

    // roots are 1 ± sqrt(-1/3): evaluate at 1 + w over Q[w]/(w^2 + 1/3)
    let ring = QuotientRing::sqrt_of(rat(-1, 3), "w");
    let root = ring.scalar(rat_int(1)).add_ref(&ring.generator());
    let mut pt = BTreeMap::new();
    pt.insert("t".to_string(), root);
    let at_root = cusp.eval_quot(&pt).unwrap();
    // no rational root: the discriminant -12 is not a rational square
    let disc_neg = true; // 36 - 48 = -12 < 0
    // degenerate z(t)-power factors appear in r1 and are discarded
    let t_mult = multiplicity_of(&r1, &MPoly::var(&vs, "t"));
    let t2_mult = multiplicity_of(
        &r1,
        &MPoly::var(&vs, "t").sub(&MPoly::one(&vs).scale_int(2)),
    );
    let ok = divides && at_root.is_zero() && disc_neg && t_mult >= 2 && t2_mult >= 2;
    let computed = format!(
        "divides={divides}, value at 1+sqrt(-1/3) = {}, z-factor multiplicities t^{t_mult} (t-2)^{t2_mult}",
        at_root.render()
    );
    if ok {
        VerificationReport::pass(
            "bielliptic.cusp-locus",
            "parameterized family",
            computed,
            "3t^2 - 6t + 4 divides; roots 1 ± sqrt(-1/3); z-powers discarded".into(),
        )
    } else {
        VerificationReport::fail(
            "bielliptic.cusp-locus",
            "parameterized family",
            computed,
            "3t^2 - 6t + 4 divides; roots 1 ± sqrt(-1/3)".into(),
            "cusp containment".into(),
        )
    }
}

// ---------------------------------------------------------------------------
// Lower-hull polynomials and the non-degeneracy resultant table
// ---------------------------------------------------------------------------

fn lam_u_vars() -> Vars {
    vars(&["lam", "u"])
}

/// The coefficient gadget
/// `gamma_(j,k)(u) = 6^j / ((k-j)! prod_(i=1..j) i(2i+1))
///                   * prod_(i=1..j) (u - (k - i + 1/2))`.
pub fn gamma_jk(j: u32, k: u32) -> MPoly {
    assert!(j >= 1 && j <= k);
    let vs = lam_u_vars();
    let u = MPoly::var(&vs, "u");
    let mut num = rat_int(1);
    for _ in 0..j {
        num *= rat_int(6);
    }
    let mut den = Rat::from_integer(crate::rat::factorial((k - j) as i64));
    for i in 1..=j as i64 {
        den *= rat_int(i * (2 * i + 1));
    }
    let mut acc = MPoly::constant(&vs, num / den);
    for i in 1..=j as i64 {
        let shift = rat_int(k as i64 - i) + rat(1, 2);
        acc = acc.mul(&u.sub(&MPoly::constant(&vs, shift)));
    }
    acc
}

/// The monic-in-`lam` lower-hull polynomial `Q_(k,odd)` or `Q_(k,even)`.
pub fn lower_hull_polynomial(k: u32, odd: bool) -> Result<MPoly> {
    if k < 2 {
        return Err(Error::Hypotheses("stated for k >= 2".into()));
    }
    let vs = lam_u_vars();
    let lam = MPoly::var(&vs, "lam");
    let mut q = lam.pow((k - 1) as usize);
    if odd {
        let kf = Rat::from_integer(crate::rat::factorial(k as i64));
        for j in 1..=k - 1 {
            q = q.add(
                &gamma_jk(j, k)
                    .scale(&kf)
                    .mul(&lam.pow((k - 1 - j) as usize)),
            );
        }
    } else {
        let mut pre = rat_int(2);
        for _ in 0..k as i64 - 2 {
            pre *= rat_int(3);
        }
        for j in 1..=k - 2 {
            q = q.add(
                &gamma_jk(j, k)
                    .scale(&(pre.clone() * rat_int(2 * j as i64 + 1)))
                    .mul(&lam.pow((k - 1 - j) as usize)),
            );
        }
        q = q.add(&gamma_jk(k - 1, k).scale(&pre));
    }
    Ok(q)
}

/// `res_lam(Q_(k,par), D^1 Q_(k,par))` with `k = floor(m/2)` and the parity
/// of `m`; decides non-degeneracy of the inner-edge restriction.
pub fn nondegeneracy_resultant(m: u32) -> Result<MPoly> {
    if m < 6 {
        return Err(Error::Hypotheses("stated for m >= 6".into()));
    }
    let k = m / 2;
    let q = lower_hull_polynomial(k, m % 2 == 1)?;
    let dq = q.hasse_derivative("lam", 1)?;
    resultant(&q, &dq, "lam")
}

/// Printed factored forms of the non-degeneracy resultants, rows
/// `m = 6 ... 10`, as division targets up to one rational scalar per row.
pub fn printed_resultant_row(m: u32) -> Result<MPoly> {
    let vs = lam_u_vars();
    let f = |txt: &str| MPoly::parse(&vs, txt).unwrap();
    let row = match m {
        6 => f("2*u - 5").mul(&f("82*u - 213")),
        7 => f("2*u - 5").mul(&f("2*u - 13")),
        8 => f("8648*u^3 - 99644*u^2 + 366558*u - 433225")
            .mul(&f("2*u - 5"))
            .mul(&f("2*u - 7").pow(2)),
        9 => f("1544*u^3 - 4124*u^2 - 68050*u + 261375")
            .mul(&f("2*u - 5"))
            .mul(&f("2*u - 7").pow(2)),
        10 => f(
            "2628587072*u^6 - 119949472448*u^5 + 2150917889200*u^4 - 19208897405344*u^3 \
             + 88953911319420*u^2 - 202718213505900*u + 178829173396125",
        )
        .mul(&f("2*u - 5"))
        .mul(&f("2*u - 7").pow(2))
        .mul(&f("2*u - 9").pow(3)),
        _ => return Err(Error::Refused(format!("no printed row for m={m}"))),
    };
    Ok(row)
}

/// Compares the computed resultant against the printed row up to a nonzero
/// rational scalar and confirms non-vanishing at `u = 1/2`.
pub fn resultant_table_check(m: u32) -> Result<VerificationReport> {
    let computed = nondegeneracy_resultant(m)?;
    let printed = printed_resultant_row(m)?;
    let params = format!("m={m}");
    // scalar = ratio at a matching monomial
    let scalar = match (computed.terms.iter().next_back(), printed.terms.iter().next_back()) {
        (Some((e1, c1)), Some((e2, c2))) if e1 == e2 => Some(c2 / c1),
        _ => None,
    };
    let proportional = match &scalar {
        Some(s) => computed.scale(s) == printed,
        None => false,
    };
    let mut at_half = BTreeMap::new();
    at_half.insert("u".to_string(), rat(1, 2));
    at_half.insert("lam".to_string(), rat_int(0));
    let val = computed.eval(&at_half)?;
    let nonzero = !val.is_zero();
    if proportional && nonzero {
        Ok(VerificationReport::pass(
            "weierstrass.resultant-table",
            &params,
            format!(
                "proportional with scalar {}, value at u=1/2 is {}",
                crate::rat::format_rat(scalar.as_ref().unwrap()),
                crate::rat::format_rat(&val)
            ),
            "proportional to the printed row, nonzero at u=1/2".into(),
        ))
    } else {
        Ok(VerificationReport::fail(
            "weierstrass.resultant-table",
            &params,
            computed.render(),
            printed.render(),
            if !proportional {
                "row not proportional".into()
            } else {
                "vanishes at u=1/2".into()
            },
        ))
    }
}

/// Separability test of a univariate restriction in `var`: gcd with the
/// first derivative must be constant.
pub fn separable_in(p: &MPoly, var: &str) -> Result<bool> {
    let d = p.hasse_derivative(var, 1)?;
    if d.is_zero() {
        return Ok(p.degree_in(var)? <= 0);
    }
    Ok(gcd_mpoly(p, &d).total_degree() <= 0)
}

/// Restricts the centered Weierstrass polynomial at `u = 1/2` to its inner
/// lower-hull edge, specializes `x = 1` and tests separability in `lam`;
/// cross-checks consistency with the non-degeneracy resultant at `u = 1/2`.
pub fn edge_restriction_separability(m: u32) -> Result<VerificationReport> {
    if m < 6 {
        return Err(Error::Hypotheses("stated for m >= 6".into()));
    }
    let spec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
    let p = weierstrass_centered(&atomic_inflection(&spec, m, UMode::Specialized).poly);
    let k = (m / 2) as i64;
    let odd = m % 2 == 1;
    // inner edge lattice points: (2j + parity, k - j), j = 0 .. k-1
    let vs = p.vars.clone();
    let mut restricted = MPoly::zero(&vs);
    let ix = p.var_index("x").unwrap();
    let il = p.var_index("lam").unwrap();
    for j in 0..k {
        let ex = 2 * j + if odd { 1 } else { 0 };
        let ey = k - j;
        let mut e = vec![0u16; vs.len()];
        e[il] = ey as u16;
        let mut probe = vec![0u16; vs.len()];
        probe[ix] = ex as u16;
        probe[il] = ey as u16;
        if let Some(c) = p.coeff_at(&probe) {
            restricted.add_term(e, c.clone());
        }
    }
    // strip the single lam factor, then test separability
    let lam = MPoly::var(&vs, "lam");
    let core = restricted.exact_divide(&lam)?;
    let sep = separable_in(&core, "lam")? && !core.coeff_of("lam", 0)?.is_zero();
    // consistency with the resultant table at u = 1/2
    let resu = nondegeneracy_resultant(m)?;
    let mut at_half = BTreeMap::new();
    at_half.insert("u".to_string(), rat(1, 2));
    at_half.insert("lam".to_string(), rat_int(0));
    let res_val = resu.eval(&at_half)?;
    let consistent = sep == !res_val.is_zero();
    let params = format!("m={m} u=1/2");
    if sep && consistent {
        Ok(VerificationReport::pass(
            "weierstrass.edge-separability",
            &params,
            "separable, consistent with the resultant".into(),
            "separable".into(),
        ))
    } else {
        Ok(VerificationReport::fail(
            "weierstrass.edge-separability",
            &params,
            format!("separable={sep} consistent={consistent}"),
            "separable and consistent".into(),
            core.render(),
        ))
    }
}

// ---------------------------------------------------------------------------
// Genus pipelines
// ---------------------------------------------------------------------------

/// Genus bookkeeping for the Weierstrass curve of index `m`: ambient class
/// simplex `Conv((0,0),(2m,0),(0,m))`, the three isomorphic singularities
/// transported from the certified one at `(1, -3)`.
pub fn weierstrass_genus_report(m: u32) -> Result<GenusReport> {
    if m < 3 {
        return Err(Error::Hypotheses("stated for m >= 3".into()));
    }
    let spec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
    let p = atomic_inflection(&spec, m, UMode::Specialized).poly;
    let cert = verify_singular_point(&p, "x", &rat_int(1), "lam", &rat_int(-3))?;
    if !cert.verified {
        return Err(Error::Hypotheses("(1, -3) failed to certify singular".into()));
    }
    let centered = weierstrass_centered(&p);
    let (_, delta) = lower_hull_delta(&centered, "x", "lam")?;
    let ambient = ambient_simplex(2, m as i64);
    let deltas = vec![
        ("(1, -3)".to_string(), delta),
        ("(zeta^2, -3 zeta) by symmetry".to_string(), delta),
        ("(zeta, -3 zeta^2) by symmetry".to_string(), delta),
    ];
    Ok(GenusReport::new(
        &ambient,
        deltas,
        vec![
            "smoothness away from the three distinguished points (stated conjecture)".into(),
            "irreducibility (stated conjecture)".into(),
            "the mu_3 symmetry transports the certified singularity".into(),
        ],
    ))
}

/// Genus bookkeeping for the D4 curve of index `m`: ambient simplex
/// `Conv((0,0),(4m,0),(0,m))`, the origin singularity plus the certified
/// conjugate pair at `(±sqrt(-1/2), 1/4)`.
pub fn d4_genus_report(m: u32) -> Result<GenusReport> {
    if m < 3 {
        return Err(Error::Hypotheses("stated for m >= 3".into()));
    }
    let spec = PencilSpec::new(PencilKind::D4, 2, 1);
    let p = atomic_inflection(&spec, m, UMode::Specialized).poly;
    // origin: certify and read delta off the lower hull
    let cert0 = verify_singular_point(&p, "x", &rat_int(0), "s", &rat_int(0))?;
    if !cert0.verified {
        return Err(Error::Hypotheses("origin failed to certify singular".into()));
    }
    let (_, delta0) = lower_hull_delta(&p, "x", "s")?;
    // conjugate pair over Q[w]/(w^2 + 1/2)
    let ring = QuotientRing::sqrt_of(rat(-1, 2), "w");
    let w = ring.generator();
    let quarter = ring.scalar(rat(1, 4));
    let cert1 = verify_singular_point_quot(&p, "x", &w, "s", &quarter)?;
    if !cert1.verified {
        return Err(Error::Hypotheses(
            "(sqrt(-1/2), 1/4) failed to certify singular".into(),
        ));
    }
    // translate into the quotient ring and take the local lower hull
    let pq = p.map_coeff(|c| ring.scalar(c.clone()));
    let vs = p.vars.clone();
    let mut assign: BTreeMap<String, MPoly<QuotElt>> = BTreeMap::new();
    let mut xw = MPoly::zero(&vs).map_coeff(|_: &Rat| ring.zero());
    {
        let mut e = vec![0u16; vs.len()];
        e[pq.var_index("x").unwrap()] = 1;
        xw.add_term(e, ring.scalar(rat_int(1)));
        xw.add_term(vec![0u16; vs.len()], w.clone());
    }
    let mut sq = MPoly::zero(&vs).map_coeff(|_: &Rat| ring.zero());
    {
        let mut e = vec![0u16; vs.len()];
        e[pq.var_index("s").unwrap()] = 1;
        sq.add_term(e, ring.scalar(rat_int(1)));
        sq.add_term(vec![0u16; vs.len()], quarter.clone());
    }
    assign.insert("x".to_string(), xw);
    assign.insert("s".to_string(), sq);
    let centered = pq.substitute(&assign)?;
    let (_, delta1) = lower_hull_delta(&centered, "x", "s")?;
    let ambient = ambient_simplex(4, m as i64);
    let deltas = vec![
        ("(0, 0)".to_string(), delta0),
        ("(sqrt(-1/2), 1/4)".to_string(), delta1),
        ("(-sqrt(-1/2), 1/4) by conjugation".to_string(), delta1),
    ];
    Ok(GenusReport::new(
        &ambient,
        deltas,
        vec![
            "smoothness away from the three distinguished points (stated conjecture)".into(),
            "irreducibility (stated conjecture)".into(),
            "the involution swaps the conjugate singularities".into(),
        ],
    ))
}

/// Genus bookkeeping for the half-integer Legendre curve in the plane of
/// degree `2m`: `p_g = max(0, C(2m-1, 2) - 3 delta)` with the common delta
/// read off the lower hull at the origin.
pub fn legendre_uhalf_genus(m: u32) -> Result<(GenusReport, i64)> {
    if m < 2 {
        return Err(Error::Hypotheses("stated for m >= 2".into()));
    }
    let spec = PencilSpec::new(PencilKind::Legendre { a: 1, b: 1, c: 1 }, 2, 1);
    let p = atomic_inflection(&spec, m, UMode::Specialized).poly;
    let cert = verify_singular_point(&p, "x", &rat_int(0), "lam", &rat_int(0))?;
    if m >= 2 && !cert.verified {
        return Err(Error::Hypotheses("origin failed to certify singular".into()));
    }
    let (_, delta) = lower_hull_delta(&p, "x", "lam")?;
    let deg = 2 * m as i64;
    let ambient =
        crate::lattice::LatticePolygon::from_vertices(&[(0, 0), (deg, 0), (0, deg)]);
    let deltas = vec![
        ("origin".to_string(), delta),
        ("second distinguished point by symmetry".to_string(), delta),
        ("third distinguished point by symmetry".to_string(), delta),
    ];
    let report = GenusReport::new(
        &ambient,
        deltas,
        vec![
            "smoothness away from the three distinguished points (stated conjecture)".into(),
            "the equal-exponent symmetries make the singularities isomorphic".into(),
        ],
    );
    // closed-form comparison value
    let mm = m as i64;
    let formula = (2 * mm - 1) * (2 * mm - 2) / 2 - 3 * ((mm - 1) * (mm - 1) / 2) - 3 * mm + 3;
    Ok((report, formula.max(0)))
}

/// The eliminant of singular `lam`-values of the Weierstrass inflectionary
/// curve must pick up `lam^3 + 27`.
pub fn weierstrass_singular_lambda_check(m: u32) -> Result<VerificationReport> {
    let spec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
    let p = atomic_inflection(&spec, m, UMode::Specialized).poly;
    let r = singular_candidates(&p, "x", "lam")?;
    let vs = p.vars.clone();
    let cubic = MPoly::parse(&vs, "lam^3 + 27").unwrap();
    let divides = r.exact_divide(&cubic).is_ok();
    let params = format!("m={m}");
    if divides {
        Ok(VerificationReport::pass(
            "weierstrass.singular-eliminant",
            &params,
            "lam^3 + 27 divides the squarefree eliminant".into(),
            "lam^3 + 27 divides".into(),
        ))
    } else {
        Ok(VerificationReport::fail(
            "weierstrass.singular-eliminant",
            &params,
            r.render(),
            "divisible by lam^3 + 27".into(),
            "eliminant".into(),
        ))
    }
}

/// The eliminant of singular `s`-values of the D4 curve must pick up
/// `s (4s - 1)`.
pub fn d4_singular_s_check(m: u32) -> Result<VerificationReport> {
    let spec = PencilSpec::new(PencilKind::D4, 2, 1);
    let p = atomic_inflection(&spec, m, UMode::Specialized).poly;
    let r = singular_candidates(&p, "x", "s")?;
    let vs = p.vars.clone();
    let target = MPoly::parse(&vs, "s").unwrap();
    let target2 = MPoly::parse(&vs, "4*s - 1").unwrap();
    let ok = r.exact_divide(&target).is_ok() && r.exact_divide(&target2).is_ok();
    let params = format!("m={m}");
    if ok {
        Ok(VerificationReport::pass(
            "d4.singular-eliminant",
            &params,
            "s and 4s - 1 divide the squarefree eliminant".into(),
            "s (4s - 1) divides".into(),
        ))
    } else {
        Ok(VerificationReport::fail(
            "d4.singular-eliminant",
            &params,
            r.render(),
            "divisible by s (4s - 1)".into(),
            "eliminant".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_values() {
        // gamma_(1,2) = 2 (u - 3/2)
        let g = gamma_jk(1, 2);
        let vs = g.vars.clone();
        assert_eq!(g, MPoly::parse(&vs, "2*u - 3").unwrap());
        // Q_(2,even) constant term: 2 * 3^0 * gamma_(1,2)
        let q = lower_hull_polynomial(2, false).unwrap();
        assert_eq!(
            q.coeff_of("lam", 0).unwrap(),
            gamma_jk(1, 2).scale(&rat_int(2))
        );
        // Q_(3,odd) coefficients are 3! gamma_(j,3)
        let q3 = lower_hull_polynomial(3, true).unwrap();
        assert_eq!(
            q3.coeff_of("lam", 1).unwrap(),
            gamma_jk(1, 3).scale(&rat_int(6))
        );
        assert_eq!(
            q3.coeff_of("lam", 0).unwrap(),
            gamma_jk(2, 3).scale(&rat_int(6))
        );
        assert!(lower_hull_polynomial(1, true).is_err());
    }

    #[test]
    fn table_rows_6_and_7() {
        for m in [6, 7] {
            let rep = resultant_table_check(m).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn smooth_conic_has_no_rational_candidates() {
        let vs = vars(&["x", "s"]);
        let p = MPoly::parse(&vs, "x^2 + s^2 + 1").unwrap();
        let r = singular_candidates(&p, "x", "s").unwrap();
        // eliminant is a nonzero constant or has no rational roots; here the
        // resultants share no root, so the squarefree gcd is constant
        assert!(r.total_degree() <= 0, "{}", r.render());
    }

    #[test]
    fn weierstrass_p3_singular_points() {
        let spec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
        let p3 = atomic_inflection(&spec, 3, UMode::Specialized).poly;
        let good = verify_singular_point(&p3, "x", &rat_int(1), "lam", &rat_int(-3)).unwrap();
        assert!(good.verified);
        let bad = verify_singular_point(&p3, "x", &rat_int(0), "lam", &rat_int(0)).unwrap();
        assert!(!bad.verified);
        assert_eq!(bad.values[0], "2");
    }

    #[test]
    fn delta_star_suite() {
        for rep in delta_star_checks() {
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
