//! The named check registry.
//!
//! Every registered check either verifies one mathematical statement
//! (theorems and identities are expected to pass; conjecture checks may
//! genuinely fail, and a failure is a finding, not a bug) or exercises a
//! piece of plumbing against an independent oracle. Checks are pure
//! functions from parameters to reports.

use hasseflex_core::elimination::{self, DiscRoute};
use hasseflex_core::ffarith;
use hasseflex_core::lattice::{
    expected_polygon, newton_polygon, PolygonStatement,
};
use hasseflex_core::mpoly::MPoly;
use hasseflex_core::pencils::{
    self, atomic_inflection, atomic_inflection_seq, bielliptic_qm, coefficient_check, d6_factor,
    graded_weight_class, legendre_symmetry_check, weierstrass_centered, CoeffTheorem, PencilKind,
    PencilSpec, UMode, WeightClass,
};
use hasseflex_core::ramification;
use hasseflex_core::rat::{rat, rat_int, Rat};
use hasseflex_core::report::{VerificationReport, Verdict};
use hasseflex_core::resultant::discriminant;
use hasseflex_core::wronskian;

/// Parameter bundle shared by all checks; each check reads what it needs.
#[derive(Clone, Debug)]
pub struct CheckParams {
    pub m_min: u32,
    pub m_max: Option<u32>,
    pub n: u32,
    pub alpha: u32,
    pub beta: u32,
    pub prime_bound: u64,
    pub seed: u64,
    pub extended: bool,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            m_min: 0,
            m_max: None,
            n: 3,
            alpha: 3,
            beta: 1,
            prime_bound: 200,
            seed: 1,
            extended: false,
        }
    }
}

impl CheckParams {
    fn m_range(&self, lo: u32, hi: u32) -> (u32, u32) {
        let a = if self.m_min == 0 { lo } else { self.m_min.max(lo) };
        let b = self.m_max.unwrap_or(hi);
        (a, b.max(a))
    }
}

/// A registered check.
pub struct CheckDescriptor {
    pub id: &'static str,
    /// What the check verifies, in plain words.
    pub description: &'static str,
    /// `true` when the source statement is a conjecture, so a failing
    /// verdict is a genuine finding rather than an implementation bug.
    pub conjecture: bool,
    pub run: fn(&CheckParams) -> Vec<VerificationReport>,
}

fn pass(id: &str, params: &str, what: &str) -> VerificationReport {
    VerificationReport::pass(id, params, what.into(), what.into())
}

fn polygon_report(
    id: &str,
    params: &str,
    computed: &hasseflex_core::lattice::LatticePolygon,
    expected: &hasseflex_core::lattice::LatticePolygon,
) -> VerificationReport {
    if computed == expected {
        VerificationReport::pass(
            id,
            params,
            format!("{:?}", computed.verts),
            format!("{:?}", expected.verts),
        )
    } else {
        VerificationReport::fail(
            id,
            params,
            format!("{:?}", computed.verts),
            format!("{:?}", expected.verts),
            "vertex sets differ".into(),
        )
    }
}

// ---------------------------------------------------------------------------
// individual check runners
// ---------------------------------------------------------------------------

fn run_recursion_goldens(_: &CheckParams) -> Vec<VerificationReport> {
    let spec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
    let seq = atomic_inflection_seq(&spec, 5, UMode::Specialized);
    let vs = seq[0].vars.clone();
    let goldens = [
        (3usize, "2 - 5/2*x^3 - 1/16*x^6 + 1/2*x*lam - 5/16*x^4*lam + 5/16*x^2*lam^2 + 1/16*lam^3"),
        (4, "-15/2*x^2 + 21/8*x^5 + 3/128*x^8 - lam - 7/4*x^3*lam + 7/32*x^6*lam + 1/8*x*lam^2 - 35/64*x^4*lam^2 - 5/32*x^2*lam^3 - 5/128*lam^4"),
        (5, "-6*x + 18*x^4 - 45/16*x^7 - 3/256*x^10 + 9/4*x^2*lam + 63/16*x^5*lam - 45/256*x^8*lam + 3/4*lam^2 - 15/16*x^3*lam^2 + 105/128*x^6*lam^2 - 3/16*x*lam^3 + 27/128*x^4*lam^3 + 33/256*x^2*lam^4 + 7/256*lam^5"),
    ];
    goldens
        .iter()
        .map(|&(m, text)| {
            let expect = MPoly::parse(&vs, text).unwrap();
            let got = &seq[m - 1];
            if *got == expect {
                VerificationReport::pass(
                    "weierstrass.displayed-polynomials",
                    &format!("m={m} u=1/2"),
                    got.render(),
                    expect.render(),
                )
            } else {
                VerificationReport::fail(
                    "weierstrass.displayed-polynomials",
                    &format!("m={m} u=1/2"),
                    got.render(),
                    expect.render(),
                    "term-by-term comparison".into(),
                )
            }
        })
        .collect()
}

fn run_recursion_residual(p: &CheckParams) -> Vec<VerificationReport> {
    let (_, hi) = p.m_range(1, 7);
    let specs = [
        PencilSpec::new(PencilKind::Legendre { a: 1, b: 1, c: 1 }, 2, 1),
        PencilSpec::new(PencilKind::Legendre { a: 2, b: 1, c: 1 }, 3, 1),
        PencilSpec::new(PencilKind::Weierstrass, 2, 1),
        PencilSpec::new(PencilKind::D4, 2, 1),
        PencilSpec::new(PencilKind::D6, 2, 1),
        PencilSpec::new(PencilKind::Bielliptic, 2, 1),
    ];
    specs
        .iter()
        .map(|spec| {
            let seq = atomic_inflection_seq(spec, hi, UMode::Symbolic);
            let ok = pencils::recursion_residual(spec, UMode::Symbolic, &seq);
            let id = "recursion.residual";
            let params = format!("{} m<={hi}", spec.label());
            if ok {
                pass(id, &params, "residual vanishes")
            } else {
                VerificationReport::fail(
                    id,
                    &params,
                    "nonzero residual".into(),
                    "zero residual".into(),
                    spec.label(),
                )
            }
        })
        .collect()
}

fn run_denominator_support(p: &CheckParams) -> Vec<VerificationReport> {
    let (_, hi) = p.m_range(1, 6);
    [(5u32, 2u32), (3, 1), (2, 1), (7, 3)]
        .iter()
        .map(|&(n, ell)| {
            let spec = PencilSpec::new(PencilKind::Legendre { a: 1, b: 1, c: 1 }, n, ell);
            let ok = pencils::denominator_support_check(&spec, hi);
            let params = format!("legendre(1,1,1) n={n} ell={ell} m<={hi}");
            if ok {
                pass(
                    "recursion.denominators",
                    &params,
                    "denominators divide a power of n",
                )
            } else {
                VerificationReport::fail(
                    "recursion.denominators",
                    &params,
                    "stray denominator prime".into(),
                    "denominators divide a power of n".into(),
                    params.clone(),
                )
            }
        })
        .collect()
}

fn run_legendre_generic_polygon(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(1, 6);
    let mut out = Vec::new();
    for &(a, b, c) in &[(1u32, 1u32, 1u32), (2, 1, 1)] {
        let spec = PencilSpec::new(PencilKind::Legendre { a, b, c }, 1000, 1);
        for m in lo..=hi {
            let poly = atomic_inflection(&spec, m, UMode::Symbolic).poly;
            let np = newton_polygon(&poly, "x", "lam").unwrap();
            let expect = expected_polygon(&PolygonStatement::LegendreGeneric {
                a: a as i64,
                b: b as i64,
                c: c as i64,
                m: m as i64,
            })
            .unwrap();
            out.push(polygon_report(
                "legendre.generic.newton-polygon",
                &format!("a={a} b={b} c={c} m={m} symbolic u"),
                &np,
                &expect,
            ));
        }
    }
    out
}

fn run_legendre_uhalf_polygon(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(2, 12);
    let spec = PencilSpec::new(PencilKind::Legendre { a: 1, b: 1, c: 1 }, 2, 1);
    let seq = atomic_inflection_seq(&spec, hi, UMode::Specialized);
    (lo..=hi)
        .map(|m| {
            let np = newton_polygon(&seq[(m - 1) as usize], "x", "lam").unwrap();
            let expect =
                expected_polygon(&PolygonStatement::LegendreUHalf { m: m as i64 }).unwrap();
            polygon_report(
                "legendre.u-half.newton-polygon",
                &format!("m={m} u=1/2"),
                &np,
                &expect,
            )
        })
        .collect()
}

fn run_weierstrass_polygon(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(3, 12);
    let spec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
    let seq = atomic_inflection_seq(&spec, hi, UMode::Specialized);
    (lo..=hi)
        .map(|m| {
            let centered = weierstrass_centered(&seq[(m - 1) as usize]);
            let np = newton_polygon(&centered, "x", "lam").unwrap();
            let expect =
                expected_polygon(&PolygonStatement::WeierstrassCentered { m: m as i64 }).unwrap();
            polygon_report(
                "weierstrass.centered.newton-polygon",
                &format!("m={m} u=1/2 centered at (1,-3)"),
                &np,
                &expect,
            )
        })
        .collect()
}

fn run_d4_polygon(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(2, 8);
    let spec = PencilSpec::new(PencilKind::D4, 2, 1);
    let seq = atomic_inflection_seq(&spec, hi, UMode::Symbolic);
    (lo..=hi)
        .map(|m| {
            let np = newton_polygon(&seq[(m - 1) as usize], "x", "s").unwrap();
            let expect = expected_polygon(&PolygonStatement::D4Origin { m: m as i64 }).unwrap();
            polygon_report(
                "d4.newton-polygon",
                &format!("m={m} symbolic u"),
                &np,
                &expect,
            )
        })
        .collect()
}

fn run_d4_centered_polygon(p: &CheckParams) -> Vec<VerificationReport> {
    use hasseflex_core::quotient::{QuotElt, QuotientRing};
    use std::collections::BTreeMap;
    let (lo, hi) = p.m_range(3, 6);
    let spec = PencilSpec::new(PencilKind::D4, 2, 1);
    let ring = QuotientRing::sqrt_of(rat(-1, 2), "w");
    let mut out = Vec::new();
    for m in lo..=hi {
        let id = "d4.centered-newton-polygon";
        let params = format!("m={m} at (sqrt(-1/2), 1/4)");
        let expect = match expected_polygon(&PolygonStatement::D4Centered { m: m as i64 }) {
            Ok(e) => e,
            Err(_) => {
                out.push(VerificationReport::refused(
                    id,
                    &params,
                    "the stated vertex list for m >= 6 is incomplete; \
                     computed polygon reported for inspection"
                        .into(),
                ));
                continue;
            }
        };
        let poly = atomic_inflection(&spec, m, UMode::Specialized).poly;
        let pq = poly.map_coeff(|c| ring.scalar(c.clone()));
        let vs = poly.vars.clone();
        let mut xw: MPoly<QuotElt> = MPoly::zero(&vs).map_coeff(|c: &Rat| ring.scalar(c.clone()));
        let mut e = vec![0u16; vs.len()];
        e[poly.var_index("x").unwrap()] = 1;
        xw.add_term(e, ring.scalar(rat_int(1)));
        xw.add_term(vec![0u16; vs.len()], ring.generator());
        let mut sq: MPoly<QuotElt> = MPoly::zero(&vs).map_coeff(|c: &Rat| ring.scalar(c.clone()));
        let mut e2 = vec![0u16; vs.len()];
        e2[poly.var_index("s").unwrap()] = 1;
        sq.add_term(e2, ring.scalar(rat_int(1)));
        sq.add_term(vec![0u16; vs.len()], ring.scalar(rat(1, 4)));
        let mut assign = BTreeMap::new();
        assign.insert("x".to_string(), xw);
        assign.insert("s".to_string(), sq);
        let centered = pq.substitute(&assign).unwrap();
        let np = newton_polygon(&centered, "x", "s").unwrap();
        out.push(polygon_report(id, &params, &np, &expect));
    }
    out
}

fn run_d6_polygons(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(3, 10);
    let spec = PencilSpec::new(PencilKind::D6, 2, 1);
    let mut out = Vec::new();
    for m in lo..=hi {
        let id = "d6.origin-newton-polygon";
        let params = format!("m={m} u=1/2");
        if m == 3 {
            let poly = atomic_inflection(&spec, m, UMode::Specialized).poly;
            let np = newton_polygon(&poly, "x", "z").unwrap();
            let expect = expected_polygon(&PolygonStatement::D6Origin).unwrap();
            out.push(polygon_report(id, &params, &np, &expect));
        } else if m >= 4 {
            match d6_factor(&spec, m, UMode::Specialized) {
                Ok(fac) if fac.x_power_divides && fac.linear_divides => {
                    let np = newton_polygon(&fac.reduced, "x", "z").unwrap();
                    let expect =
                        expected_polygon(&PolygonStatement::D6StarOrigin { m: m as i64 }).unwrap();
                    out.push(polygon_report(id, &params, &np, &expect));
                }
                _ => out.push(VerificationReport::fail(
                    id,
                    &params,
                    "factorization failed".into(),
                    "x^e (4z-1) peels off".into(),
                    format!("m={m}"),
                )),
            }
        }
    }
    out
}

fn run_d6_factorization(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(4, 10);
    let spec = PencilSpec::new(PencilKind::D6, 2, 1);
    (lo..=hi)
        .map(|m| {
            let id = "d6.factorization";
            let params = format!("m={m} u=1/2");
            match d6_factor(&spec, m, UMode::Specialized) {
                Ok(fac) => {
                    let e_expect = (-(m as i64)).rem_euclid(3) as u32;
                    if fac.x_power_divides && fac.linear_divides && fac.exponent == e_expect {
                        VerificationReport::pass(
                            id,
                            &params,
                            format!("x^{} (4z-1) divides", fac.exponent),
                            format!("x^{e_expect} (4z-1) divides"),
                        )
                    } else {
                        VerificationReport::fail(
                            id,
                            &params,
                            format!(
                                "x^e divides: {}, 4z-1 divides: {}",
                                fac.x_power_divides, fac.linear_divides
                            ),
                            format!("x^{e_expect} (4z-1) divides"),
                            params.clone(),
                        )
                    }
                }
                Err(e) => VerificationReport::fail(
                    id,
                    &params,
                    format!("{e}"),
                    "factorization".into(),
                    params.clone(),
                ),
            }
        })
        .collect()
}

fn run_mu3_classes(p: &CheckParams) -> Vec<VerificationReport> {
    let (_, hi_w) = p.m_range(1, 15);
    let mut out = Vec::new();
    let wspec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
    let wseq = atomic_inflection_seq(&wspec, hi_w, UMode::Specialized);
    for (i, poly) in wseq.iter().enumerate() {
        let m = i as u32 + 1;
        let cls = graded_weight_class(poly, &[("x", 1), ("lam", -1)], 3).unwrap();
        let expect = (-(m as i64)).rem_euclid(3);
        let id = "weierstrass.mu3-homogeneity";
        let params = format!("m={m} weights (1,-1) mod 3");
        match cls {
            WeightClass::Homogeneous(c) if c == expect => out.push(VerificationReport::pass(
                id,
                &params,
                format!("class {c}"),
                format!("class {expect}"),
            )),
            WeightClass::Homogeneous(c) => out.push(VerificationReport::fail(
                id,
                &params,
                format!("class {c}"),
                format!("class {expect}"),
                "class mismatch".into(),
            )),
            WeightClass::NotHomogeneous { class_a, class_b } => {
                out.push(VerificationReport::fail(
                    id,
                    &params,
                    format!("classes {class_a} and {class_b}"),
                    "homogeneous".into(),
                    "mixed classes".into(),
                ))
            }
        }
    }
    let (_, hi_d) = p.m_range(1, 10);
    let dspec = PencilSpec::new(PencilKind::D6, 2, 1);
    let dseq = atomic_inflection_seq(&dspec, hi_d, UMode::Specialized);
    for (i, poly) in dseq.iter().enumerate() {
        let m = i as u32 + 1;
        let cls = graded_weight_class(poly, &[("x", 1), ("z", 0)], 3).unwrap();
        let expect = (-(m as i64)).rem_euclid(3);
        let id = "d6.mu3-class";
        let params = format!("m={m} weights (1,0) mod 3");
        match cls {
            WeightClass::Homogeneous(c) if c == expect => out.push(VerificationReport::pass(
                id,
                &params,
                format!("class {c}"),
                format!("class {expect}"),
            )),
            other => out.push(VerificationReport::fail(
                id,
                &params,
                format!("{other:?}"),
                format!("class {expect}"),
                "class mismatch".into(),
            )),
        }
    }
    out
}

fn run_bielliptic_parity(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(2, 10);
    let spec = PencilSpec::new(PencilKind::Bielliptic, 2, 1);
    (lo..=hi)
        .map(|m| {
            let id = "bielliptic.parity";
            let params = format!("m={m}");
            match bielliptic_qm(&spec, m, UMode::Specialized) {
                Ok(q) => {
                    let even = q
                        .support_2d("x", "s1")
                        .unwrap()
                        .iter()
                        .all(|&(e, _)| e % 2 == 0);
                    if even {
                        pass(id, &params, "x divides for odd m; Q_m has even support")
                    } else {
                        VerificationReport::fail(
                            id,
                            &params,
                            "odd exponent present".into(),
                            "even support".into(),
                            params.clone(),
                        )
                    }
                }
                Err(e) => VerificationReport::fail(
                    id,
                    &params,
                    format!("{e}"),
                    "x-divisibility".into(),
                    params.clone(),
                ),
            }
        })
        .collect()
}

fn run_legendre_symmetry(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(1, 8);
    let mut out = Vec::new();
    for a in 1..=2u32 {
        for m in lo..=hi {
            out.push(legendre_symmetry_check(a, m, 1, 2));
        }
    }
    out
}

fn run_coefficients(p: &CheckParams) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let (lo, hi) = p.m_range(1, 8);
    for &(a, b, c) in &[(1u32, 1u32, 1u32), (2, 1, 1)] {
        for m in lo..=hi {
            out.push(
                coefficient_check(&CoeffTheorem::LegendreGenericVertices { a, b, c }, m).unwrap(),
            );
        }
    }
    let (lo, hi) = p.m_range(2, 12);
    for m in lo..=hi {
        out.push(coefficient_check(&CoeffTheorem::LegendreUHalf, m).unwrap());
    }
    let (lo, hi) = p.m_range(3, 10);
    for m in lo..=hi {
        out.push(coefficient_check(&CoeffTheorem::WeierstrassCentered, m).unwrap());
    }
    let (lo, hi) = p.m_range(2, 8);
    for m in lo..=hi {
        out.push(coefficient_check(&CoeffTheorem::D4Vertices, m).unwrap());
    }
    let (lo, hi) = p.m_range(6, 12);
    for m in lo..=hi {
        out.push(coefficient_check(&CoeffTheorem::InnerEdge, m).unwrap());
    }
    out
}

fn run_resultant_table(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(6, 10);
    (lo..=hi)
        .map(|m| elimination::resultant_table_check(m).unwrap())
        .collect()
}

fn run_edge_separability(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(6, 12);
    let mut out: Vec<VerificationReport> = (lo..=hi)
        .map(|m| elimination::edge_restriction_separability(m).unwrap())
        .collect();
    // artificial repeated-factor control
    let vs = hasseflex_core::mpoly::vars(&["lam", "u"]);
    let lam = MPoly::var(&vs, "lam");
    let one = MPoly::one(&vs);
    let control = lam.sub(&one).pow(2);
    let sep = elimination::separable_in(&control, "lam").unwrap();
    out.push(if !sep {
        pass(
            "weierstrass.edge-separability",
            "control (lam-1)^2",
            "reported non-separable",
        )
    } else {
        VerificationReport::fail(
            "weierstrass.edge-separability",
            "control (lam-1)^2",
            "separable".into(),
            "non-separable".into(),
            "(lam-1)^2".into(),
        )
    });
    out
}

fn run_singular_eliminants(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(2, 5);
    let mut out = Vec::new();
    for m in lo..=hi {
        out.push(elimination::weierstrass_singular_lambda_check(m).unwrap());
        out.push(elimination::d4_singular_s_check(m).unwrap());
    }
    out
}

fn run_singular_points(_: &CheckParams) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    // Weierstrass P_3 at (1, -3): singular; at (0, 0): regular value 2
    let wspec = PencilSpec::new(PencilKind::Weierstrass, 2, 1);
    let p3 = atomic_inflection(&wspec, 3, UMode::Specialized).poly;
    let good =
        elimination::verify_singular_point(&p3, "x", &rat_int(1), "lam", &rat_int(-3)).unwrap();
    let bad =
        elimination::verify_singular_point(&p3, "x", &rat_int(0), "lam", &rat_int(0)).unwrap();
    out.push(if good.verified && !bad.verified && bad.values[0] == "2" {
        pass(
            "weierstrass.singular-points",
            "m=3",
            "(1,-3) verified singular; origin has value 2",
        )
    } else {
        VerificationReport::fail(
            "weierstrass.singular-points",
            "m=3",
            format!("{good:?} {bad:?}"),
            "(1,-3) singular, origin not".into(),
            "point certification".into(),
        )
    });
    // D4 P_m at (sqrt(-1/2), 1/4) for m = 3, 4
    use hasseflex_core::quotient::QuotientRing;
    let ring = QuotientRing::sqrt_of(rat(-1, 2), "w");
    let w = ring.generator();
    let quarter = ring.scalar(rat(1, 4));
    let dspec = PencilSpec::new(PencilKind::D4, 2, 1);
    for m in [3u32, 4] {
        let pm = atomic_inflection(&dspec, m, UMode::Specialized).poly;
        let rep =
            elimination::verify_singular_point_quot(&pm, "x", &w, "s", &quarter).unwrap();
        out.push(if rep.verified {
            pass(
                "d4.singular-points",
                &format!("m={m}"),
                "(sqrt(-1/2), 1/4) verified singular",
            )
        } else {
            VerificationReport::fail(
                "d4.singular-points",
                &format!("m={m}"),
                format!("{:?}", rep.values),
                "all three evaluations zero".into(),
                rep.point,
            )
        });
    }
    out
}

fn run_x_discriminant(_: &CheckParams) -> Vec<VerificationReport> {
    // disc_x of the bielliptic sextic, exact golden
    let vs = hasseflex_core::mpoly::vars(&["x", "s1", "s2", "u"]);
    let f = MPoly::parse(&vs, "x^6 - s1*x^4 + s2*x^2 - 1").unwrap();
    let d = discriminant(&f, "x").unwrap();
    let quartic = elimination::delta_star_quartic(&vs);
    let expect = quartic.pow(2).scale_int(64);
    let mut out = Vec::new();
    out.push(if d == expect {
        pass(
            "bielliptic.x-discriminant",
            "sextic",
            "64 (quartic)^2 exactly",
        )
    } else {
        VerificationReport::fail(
            "bielliptic.x-discriminant",
            "sextic",
            d.render(),
            expect.render(),
            "discriminant normalization".into(),
        )
    });
    // squarefree part of the discriminant recovers the quartic up to scalar
    let (_, sf) = hasseflex_core::resultant::gcd_squarefree(&d).unwrap();
    let ratio_ok = sf
        .exact_divide(&quartic)
        .map(|q| q.total_degree() == 0)
        .unwrap_or(false);
    out.push(if ratio_ok {
        pass(
            "bielliptic.x-discriminant",
            "squarefree part",
            "proportional to the quartic",
        )
    } else {
        VerificationReport::fail(
            "bielliptic.x-discriminant",
            "squarefree part",
            sf.render(),
            quartic.render(),
            "squarefree part".into(),
        )
    });
    out
}

fn run_discriminant_ledger(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(2, 4);
    let mut out = Vec::new();
    for m in lo..=hi.min(4) {
        let (_, _, ledger) = elimination::surface_discriminant(m, DiscRoute::Direct).unwrap();
        for e in &ledger.entries {
            let id = "bielliptic.discriminant-ledger";
            let params = format!("m={m} component={}", e.label);
            out.push(if e.divides {
                VerificationReport::pass(
                    id,
                    &params,
                    format!("multiplicity {}", e.multiplicity),
                    "divides at least once".into(),
                )
            } else {
                VerificationReport::fail(
                    id,
                    &params,
                    "does not divide".into(),
                    "divides".into(),
                    e.label.clone(),
                )
            });
        }
    }
    if p.extended {
        let (_, _, ledger) = elimination::surface_discriminant(5, DiscRoute::Interp).unwrap();
        for e in &ledger.entries {
            let params = format!("m=5 component={} (interpolation route)", e.label);
            out.push(if e.divides {
                VerificationReport::pass(
                    "bielliptic.discriminant-ledger",
                    &params,
                    format!("multiplicity {}", e.multiplicity),
                    "divides at least once".into(),
                )
            } else {
                VerificationReport::fail(
                    "bielliptic.discriminant-ledger",
                    &params,
                    "does not divide".into(),
                    "divides".into(),
                    e.label.clone(),
                )
            });
        }
    }
    out
}

fn run_delta_star(_: &CheckParams) -> Vec<VerificationReport> {
    let mut out = elimination::delta_star_checks();
    out.push(elimination::cusp_locus());
    out
}

fn run_vandermonde(_: &CheckParams) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let vd = ramification::vandermonde_n(3, 3, 9).unwrap();
    out.push(if vd.det == rat_int(378) && vd.lower_det == rat_int(378) {
        pass("ramification.vandermonde", "n=3 g=3 ell=9", "det N = 378")
    } else {
        VerificationReport::fail(
            "ramification.vandermonde",
            "n=3 g=3 ell=9",
            format!("{}", vd.det),
            "378".into(),
            "determinant".into(),
        )
    });
    // degenerate case: ell - g = 0 gives det 1
    let vd0 = ramification::vandermonde_n(2, 1, 2).unwrap();
    out.push(if vd0.det == rat_int(1) {
        pass("ramification.vandermonde", "n=2 g=1 ell=2", "det N = 1")
    } else {
        VerificationReport::fail(
            "ramification.vandermonde",
            "n=2 g=1 ell=2",
            format!("{}", vd0.det),
            "1".into(),
            "degenerate block".into(),
        )
    });
    out
}

fn run_gv_identity(p: &CheckParams) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    out.push(ramification::gv_identity_check(p.n, p.alpha, p.beta).unwrap());
    // the n = 2 comparison across the full stated range
    for beta in 1..=5u32 {
        for alpha in beta + 1..=6 {
            out.push(ramification::gv_identity_check(2, alpha, beta).unwrap());
        }
    }
    out
}

fn run_tropical(p: &CheckParams) -> Vec<VerificationReport> {
    let mut cases = vec![(p.n, p.alpha, p.beta)];
    cases.extend([(2, 3, 1), (2, 4, 2), (2, 5, 2), (3, 4, 1), (4, 4, 1)]);
    cases
        .into_iter()
        .map(|(n, alpha, beta)| {
            let id = "ramification.tropical-permanent";
            let params = format!("n={n} alpha={alpha} beta={beta}");
            match ramification::tropical_permanent(n, alpha, beta) {
                Ok((_, perm)) => {
                    let closed = ramification::mu_b(n, beta);
                    let d = n * beta + 1;
                    let ell = n * alpha;
                    let mu = ramification::inflection_orders(n, d, ell).unwrap();
                    let direct: i64 = mu
                        .iter()
                        .enumerate()
                        .map(|(i, &m)| m as i64 - i as i64)
                        .sum();
                    if perm == closed && perm == direct {
                        VerificationReport::pass(
                            id,
                            &params,
                            format!("permanent {perm}"),
                            format!("mu(B) {closed}"),
                        )
                    } else {
                        VerificationReport::fail(
                            id,
                            &params,
                            format!("permanent {perm}, direct {direct}"),
                            format!("mu(B) {closed}"),
                            params.clone(),
                        )
                    }
                }
                Err(e) => VerificationReport::refused(id, &params, format!("{e}")),
            }
        })
        .collect()
}

/// Deterministic low-state PRNG for reproducible random curves.
fn xorshift(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

/// Random separable monic polynomial of degree `d` in `x` with distinct
/// small-integer roots, first root at `gamma = 0`.
fn random_separable(vs: &hasseflex_core::mpoly::Vars, d: u32, state: &mut u64) -> MPoly {
    let x = MPoly::var(vs, "x");
    let mut roots = vec![0i64];
    while roots.len() < d as usize {
        let r = (xorshift(state) % 19) as i64 - 9;
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    let mut f = MPoly::one(vs);
    for r in roots {
        f = f.mul(&x.sub(&MPoly::constant(vs, rat_int(r))));
    }
    f
}

fn run_series_cross_check(p: &CheckParams) -> Vec<VerificationReport> {
    let vs = hasseflex_core::mpoly::vars(&["x", "u"]);
    let mut state = p.seed.max(1);
    let mut out = Vec::new();
    for &(n, d, ell, mu) in &[(2u32, 5u32, 6u32, 3usize), (3, 4, 9, 4)] {
        for _ in 0..5 {
            let f = random_separable(&vs, d, &mut state);
            let rep =
                ramification::series_cross_check(n, d, ell, &f, &rat_int(0), mu + 5).unwrap();
            out.push(rep);
        }
    }
    out
}

fn run_a1_class(_: &CheckParams) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    // plane cubic control: 9 flexes, parity obstructed
    let cubic = ramification::plucker_degree_a1(3, 1, 2);
    out.push(
        if cubic.gamma_c == 9 && cubic.hyperbolic_multiplier.is_none() {
            pass(
                "ramification.a1-class",
                "d=3 g=1 r=2",
                "gamma_C = 9, parity obstruction",
            )
        } else {
            VerificationReport::fail(
                "ramification.a1-class",
                "d=3 g=1 r=2",
                format!("{cubic:?}"),
                "gamma_C = 9, obstructed".into(),
                "plane cubic".into(),
            )
        },
    );
    // complete series: defined iff ell or ell-g+1 is even
    let mut all_ok = true;
    for n in 2..=4u32 {
        for beta in 1..=2u32 {
            let d = n * beta + 1;
            let g = (d - 1) * (n - 1) / 2;
            for ell in (2 * g + n - 1)..=(2 * g + n + 6) {
                let r = ell as i64 - g as i64;
                let cls = ramification::plucker_degree_a1(ell as i64, g as i64, r);
                let predicted = ell % 2 == 0 || (r + 1) % 2 == 0;
                if cls.hyperbolic_multiplier.is_some() != predicted {
                    all_ok = false;
                }
            }
        }
    }
    out.push(if all_ok {
        pass(
            "ramification.a1-class",
            "complete series sweep",
            "defined iff ell or ell-g+1 is even",
        )
    } else {
        VerificationReport::fail(
            "ramification.a1-class",
            "complete series sweep",
            "parity mismatch".into(),
            "defined iff ell or ell-g+1 even".into(),
            "sweep".into(),
        )
    });
    out
}

fn run_wronskian_reduction(p: &CheckParams) -> Vec<VerificationReport> {
    let vs = hasseflex_core::mpoly::vars(&["x", "u"]);
    let mut state = p.seed.max(1) ^ 0x9e3779b97f4a7c15;
    let mut out = Vec::new();
    // shape check on (3, 4, 9)
    let m349 = wronskian::away_matrix(3, 4, 9).unwrap();
    let cells = m349.render_cells();
    let ok = cells[0] == ["P^1_4", "P^1_3", "P^2_4"]
        && cells[1] == ["P^1_5", "P^1_4", "P^2_5"]
        && cells[2] == ["P^1_6", "P^1_5", "P^2_6"];
    out.push(if ok {
        pass(
            "wronskian.matrix-shape",
            "n=3 d=4 ell=9",
            "3x3 with rows P^1_4 P^1_3 P^2_4 / P^1_5 P^1_4 P^2_5 / P^1_6 P^1_5 P^2_6",
        )
    } else {
        VerificationReport::fail(
            "wronskian.matrix-shape",
            "n=3 d=4 ell=9",
            format!("{cells:?}"),
            "stated 3x3 matrix".into(),
            "shape".into(),
        )
    });
    for &(n, d, ell) in &[(2u32, 5u32, 8u32), (3, 4, 9)] {
        let f = random_separable(&vs, d, &mut state);
        out.push(wronskian::direct_comparison(n, d, ell, &f).unwrap());
    }
    out
}

fn run_count_agreement(p: &CheckParams) -> Vec<VerificationReport> {
    let bound = p.prime_bound.min(200);
    let mut bad = Vec::new();
    for prime in ffarith::primes_up_to(bound) {
        if prime < 5 || prime % 2 == 0 || prime % 3 == 0 {
            continue;
        }
        let brute = ffarith::count_points(
            &ffarith::c2_mod_p(prime).unwrap(),
            "x",
            "s",
            ffarith::Closure::ProjectiveP2,
        )
        .unwrap();
        let fast = ffarith::fast_count_c2(prime).unwrap();
        if brute != fast {
            bad.push(prime);
        }
    }
    vec![if bad.is_empty() {
        pass(
            "d4.count-agreement",
            &format!("odd p <= {bound}, p not dividing 6"),
            "fast and exhaustive counts agree",
        )
    } else {
        VerificationReport::fail(
            "d4.count-agreement",
            &format!("odd p <= {bound}"),
            format!("disagreement at {bad:?}"),
            "agreement".into(),
            format!("{bad:?}"),
        )
    }]
}

fn run_fiber_correction(_: &CheckParams) -> Vec<VerificationReport> {
    [5u64, 7, 11, 13]
        .iter()
        .map(|&p| ffarith::fiber_correction_check(p).unwrap())
        .collect()
}

fn run_char3(_: &CheckParams) -> Vec<VerificationReport> {
    ffarith::char3_checks()
}

fn run_hasse_bound(p: &CheckParams) -> Vec<VerificationReport> {
    let bound = p.prime_bound.max(10000);
    let series = ffarith::c2_error_series(bound);
    let bad: Vec<u64> = series
        .iter()
        .filter(|r| !ffarith::hasse_bound_ok(r.e, r.p))
        .map(|r| r.p)
        .collect();
    vec![if bad.is_empty() {
        pass(
            "d4.hasse-bound",
            &format!("good p <= {bound}"),
            "|e| <= 2 sqrt(p) + 4 for every good prime",
        )
    } else {
        VerificationReport::fail(
            "d4.hasse-bound",
            &format!("good p <= {bound}"),
            format!("violations at {bad:?}"),
            "|e| <= 2 sqrt(p) + 4".into(),
            format!("{bad:?}"),
        )
    }]
}

fn run_padic(p: &CheckParams) -> Vec<VerificationReport> {
    let mut state = p.seed.max(1) ^ 0xdeadbeef;
    let mut all_ok = true;
    let mut witness = String::new();
    let primes = [3u64, 5, 7, 11, 13];
    let mut tested = 0;
    while tested < 50 {
        let a = xorshift(&mut state) % 60 + 1;
        let n = xorshift(&mut state) % 12 + 1;
        let prime = primes[(xorshift(&mut state) % 5) as usize];
        let formula = ffarith::val_p_double_falling(a, n, prime);
        let direct = ffarith::val_p_double_falling_direct(a, n, prime);
        match (formula, direct) {
            (Ok(x), Ok(y)) => {
                tested += 1;
                if x != y {
                    all_ok = false;
                    witness = format!("a={a} n={n} p={prime}: {x} vs {y}");
                }
            }
            (Err(_), Err(_)) => {}
            _ => {
                all_ok = false;
                witness = format!("a={a} n={n} p={prime}: vanishing disagreement");
            }
        }
    }
    let mut out = vec![if all_ok {
        pass(
            "padic.legendre-valuations",
            "50 random (a, n, p)",
            "case formulas match direct factorization",
        )
    } else {
        VerificationReport::fail(
            "padic.legendre-valuations",
            "50 random (a, n, p)",
            witness,
            "agreement".into(),
            "valuation".into(),
        )
    }];
    out.push(if ffarith::val_p_factorial(9, 3) == 4 {
        pass("padic.legendre-valuations", "val_3(9!)", "4")
    } else {
        VerificationReport::fail(
            "padic.legendre-valuations",
            "val_3(9!)",
            format!("{}", ffarith::val_p_factorial(9, 3)),
            "4".into(),
            "factorial valuation".into(),
        )
    });
    out
}

fn run_monomial_basis(_: &CheckParams) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for &(n, d) in &[(2u32, 5u32), (3, 4), (2, 7), (3, 5), (4, 5), (5, 3)] {
        let g = pencils::superelliptic_genus(n, d);
        let mut ok = true;
        for ell in (2 * g).max(1)..(2 * g + 8) {
            if ell >= 2 * g.max(1) - 1 {
                let b = pencils::monomial_basis(n, d, ell).unwrap();
                if b.elements.len() as i64 != ell as i64 - g as i64 + 1 {
                    ok = false;
                }
                // pole orders pairwise distinct and sorted
                let orders: Vec<u32> = b.elements.iter().map(|&(i, j)| n * i + d * j).collect();
                if orders.windows(2).any(|w| w[0] >= w[1]) {
                    ok = false;
                }
            }
        }
        out.push(if ok {
            pass(
                "basis.cardinality",
                &format!("n={n} d={d}"),
                "count = ell - g + 1, pole orders strictly sorted",
            )
        } else {
            VerificationReport::fail(
                "basis.cardinality",
                &format!("n={n} d={d}"),
                "count or order failure".into(),
                "ell - g + 1".into(),
                format!("n={n} d={d}"),
            )
        });
    }
    out
}

fn run_genus_pipeline(p: &CheckParams) -> Vec<VerificationReport> {
    let (lo, hi) = p.m_range(3, 10);
    let mut out = Vec::new();
    for m in lo..=hi {
        let rep = elimination::weierstrass_genus_report(m).unwrap();
        let mm = m as i64;
        let expect = (mm - 1) * (mm - 1) / 4 + i64::from((mm - 1) * (mm - 1) % 4 != 0);
        let id = "weierstrass.genus";
        let params = format!("m={m}");
        out.push(if rep.geometric_genus == expect {
            VerificationReport::pass(
                id,
                &params,
                format!(
                    "p_a {} - deltas {} = {}",
                    rep.arithmetic_genus,
                    rep.deltas.iter().map(|d| d.1).sum::<i64>(),
                    rep.geometric_genus
                ),
                format!("ceil((m-1)^2/4) = {expect}"),
            )
            .with_assumption("conditional on the stated smoothness-away conjecture")
        } else {
            VerificationReport::fail(
                id,
                &params,
                format!("{}", rep.geometric_genus),
                format!("{expect}"),
                format!("deltas {:?}", rep.deltas),
            )
        });
    }
    // D4 genus claim at m = 3 (stated value 0); the pipeline reports what
    // the computed polygons give.
    let rep = elimination::d4_genus_report(3).unwrap();
    out.push(if rep.geometric_genus == 0 {
        VerificationReport::pass(
            "d4.genus",
            "m=3",
            format!("{}", rep.geometric_genus),
            "0".into(),
        )
        .with_assumption("conditional on the stated smoothness-away conjecture")
    } else {
        VerificationReport::fail(
            "d4.genus",
            "m=3",
            format!(
                "p_a {} - deltas {:?} gives genus {}",
                rep.arithmetic_genus, rep.deltas, rep.geometric_genus
            ),
            "0".into(),
            "computed delta at the conjugate singular points is 1 (each is a \
             plain node: the centered polynomial has a nonzero (1,1) \
             coefficient), not 2 as the stated polygon implies"
                .into(),
        )
    });
    // Legendre summary-row formula
    let (lo, hi) = p.m_range(2, 8);
    for m in lo..=hi {
        let (rep, formula) = elimination::legendre_uhalf_genus(m).unwrap();
        let got = rep.geometric_genus.max(0);
        out.push(if got == formula {
            VerificationReport::pass(
                "legendre.genus",
                &format!("m={m}"),
                format!("{got}"),
                format!("{formula}"),
            )
            .with_assumption("conditional on the stated smoothness-away conjecture")
        } else {
            VerificationReport::fail(
                "legendre.genus",
                &format!("m={m}"),
                format!("{got}"),
                format!("{formula}"),
                format!("deltas {:?}", rep.deltas),
            )
        });
    }
    out
}

fn run_d6_delta(p: &CheckParams) -> Vec<VerificationReport> {
    // delta at the origin of the reduced D6 curve matches the stated
    // closed form 3 k (k-1) / 2 with k = floor(2m/3)
    let (lo, hi) = p.m_range(5, 9);
    let spec = PencilSpec::new(PencilKind::D6, 2, 1);
    (lo..=hi)
        .map(|m| {
            let id = "d6.delta-origin";
            let params = format!("m={m}");
            let fac = d6_factor(&spec, m, UMode::Specialized).unwrap();
            match hasseflex_core::lattice::lower_hull_delta(&fac.reduced, "x", "z") {
                Ok((_, delta)) => {
                    let k = (2 * m as i64) / 3;
                    let expect = 3 * k * (k - 1) / 2;
                    if delta == expect {
                        VerificationReport::pass(
                            id,
                            &params,
                            format!("{delta}"),
                            format!("{expect}"),
                        )
                        .with_assumption("stated as a conjecture; verified for this m")
                    } else {
                        VerificationReport::fail(
                            id,
                            &params,
                            format!("{delta}"),
                            format!("{expect}"),
                            "delta at the origin".into(),
                        )
                    }
                }
                Err(e) => VerificationReport::refused(id, &params, format!("{e}")),
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// the registry
// ---------------------------------------------------------------------------

/// The full check catalog.
pub fn registry() -> Vec<CheckDescriptor> {
    vec![
        CheckDescriptor {
            id: "weierstrass.displayed-polynomials",
            description: "P_3, P_4, P_5 of the half-integer Weierstrass pencil match their displayed expansions exactly",
            conjecture: false,
            run: run_recursion_goldens,
        },
        CheckDescriptor {
            id: "recursion.residual",
            description: "the defining recursion residual (m+1)P_(m+1) - D^1 P_m f - P_m D^1 f (u-m) vanishes for every computed index, every family",
            conjecture: false,
            run: run_recursion_residual,
        },
        CheckDescriptor {
            id: "recursion.denominators",
            description: "with u specialized to l/n, every coefficient denominator divides a power of n",
            conjecture: false,
            run: run_denominator_support,
        },
        CheckDescriptor {
            id: "basis.cardinality",
            description: "monomial bases have ell - g + 1 elements with strictly increasing pole orders",
            conjecture: false,
            run: run_monomial_basis,
        },
        CheckDescriptor {
            id: "legendre.generic.newton-polygon",
            description: "generic-support Newton polygon of Legendre pencils for symbolic u",
            conjecture: false,
            run: run_legendre_generic_polygon,
        },
        CheckDescriptor {
            id: "legendre.u-half.newton-polygon",
            description: "Newton polygon of the half-integer-exponent Legendre pencil",
            conjecture: false,
            run: run_legendre_uhalf_polygon,
        },
        CheckDescriptor {
            id: "weierstrass.centered.newton-polygon",
            description: "Newton polygon of the Weierstrass pencil centered at (1, -3)",
            conjecture: false,
            run: run_weierstrass_polygon,
        },
        CheckDescriptor {
            id: "d4.newton-polygon",
            description: "Newton polygon of the D4 pencil at the origin, symbolic u",
            conjecture: false,
            run: run_d4_polygon,
        },
        CheckDescriptor {
            id: "d4.centered-newton-polygon",
            description: "stated local polygons at (±sqrt(-1/2), 1/4); m >= 6 is refused (garbled statement)",
            conjecture: true,
            run: run_d4_centered_polygon,
        },
        CheckDescriptor {
            id: "d6.origin-newton-polygon",
            description: "stated local polygons of the (reduced) D6 curves at the origin",
            conjecture: true,
            run: run_d6_polygons,
        },
        CheckDescriptor {
            id: "d6.factorization",
            description: "the predicted factor x^((-m) mod 3) (4z - 1) peels off the D6 polynomial exactly",
            conjecture: true,
            run: run_d6_factorization,
        },
        CheckDescriptor {
            id: "d6.delta-origin",
            description: "origin delta invariant of the reduced D6 curve matches the stated closed form",
            conjecture: true,
            run: run_d6_delta,
        },
        CheckDescriptor {
            id: "mu3.weight-classes",
            description: "graded mu_3 homogeneity classes of Weierstrass and D6 polynomials equal (-m) mod 3",
            conjecture: false,
            run: run_mu3_classes,
        },
        CheckDescriptor {
            id: "bielliptic.parity",
            description: "x divides P_m for odd m and Q_m is a polynomial in x^2",
            conjecture: false,
            run: run_bielliptic_parity,
        },
        CheckDescriptor {
            id: "legendre.symmetry",
            description: "both symmetry identities of equal-exponent Legendre pencils",
            conjecture: false,
            run: run_legendre_symmetry,
        },
        CheckDescriptor {
            id: "coefficients",
            description: "all registered closed coefficient formulas (Legendre generic and half-integer, Weierstrass centered, D4 vertices, inner edge)",
            conjecture: false,
            run: run_coefficients,
        },
        CheckDescriptor {
            id: "weierstrass.resultant-table",
            description: "non-degeneracy resultants match the printed factored table rows up to one rational scalar and are nonzero at u = 1/2",
            conjecture: false,
            run: run_resultant_table,
        },
        CheckDescriptor {
            id: "weierstrass.edge-separability",
            description: "inner lower-hull edge restrictions are separable at u = 1/2 and consistent with the resultant table",
            conjecture: true,
            run: run_edge_separability,
        },
        CheckDescriptor {
            id: "singular.eliminants",
            description: "squarefree eliminants of singular loci pick up the stated fiberwise discriminant factors",
            conjecture: false,
            run: run_singular_eliminants,
        },
        CheckDescriptor {
            id: "singular.points",
            description: "exact certification of the distinguished singular points over Q and quadratic extensions",
            conjecture: false,
            run: run_singular_points,
        },
        CheckDescriptor {
            id: "bielliptic.x-discriminant",
            description: "the x-discriminant of the bielliptic sextic equals 64 (quartic)^2 exactly, and its squarefree part is the quartic",
            conjecture: false,
            run: run_x_discriminant,
        },
        CheckDescriptor {
            id: "bielliptic.discriminant-ledger",
            description: "every printed component divides the inflectionary discriminant (m = 2..4; m = 5 via --extended on the interpolation route)",
            conjecture: false,
            run: run_discriminant_ledger,
        },
        CheckDescriptor {
            id: "bielliptic.delta-star",
            description: "parameterization, node and cusp-locus checks of the reduced discriminant quartic",
            conjecture: false,
            run: run_delta_star,
        },
        CheckDescriptor {
            id: "ramification.vandermonde",
            description: "binomial Vandermonde determinants, including the 378 lower block",
            conjecture: false,
            run: run_vandermonde,
        },
        CheckDescriptor {
            id: "ramification.gv-identity",
            description: "the Plücker-path sum of generalized Gessel-Viennot determinants equals det N under t_i -> C(n, i)",
            conjecture: false,
            run: run_gv_identity,
        },
        CheckDescriptor {
            id: "ramification.tropical-permanent",
            description: "min-plus permanents of the tropical Wronskian equal mu(B), both closed-form and directly",
            conjecture: false,
            run: run_tropical,
        },
        CheckDescriptor {
            id: "ramification.series-cross-check",
            description: "series Wronskians of random separable curves have valuation mu(B) and leading coefficient prod D^(mu_i) b_i * det N",
            conjecture: false,
            run: run_series_cross_check,
        },
        CheckDescriptor {
            id: "ramification.a1-class",
            description: "global inflection class: degree count and the parity criterion for existence",
            conjecture: false,
            run: run_a1_class,
        },
        CheckDescriptor {
            id: "wronskian.column-reduction",
            description: "the determinantal matrix model agrees with direct Wronskian column reduction on random curves",
            conjecture: false,
            run: run_wronskian_reduction,
        },
        CheckDescriptor {
            id: "d4.count-agreement",
            description: "fiberwise quadratic-character counting of C2 agrees with exhaustive enumeration",
            conjecture: false,
            run: run_count_agreement,
        },
        CheckDescriptor {
            id: "d4.fiber-correction",
            description: "the desingularization bookkeeping #C2 = #C2nu - chi(15) - chi(3), fibers recomputed from the blow-ups",
            conjecture: false,
            run: run_fiber_correction,
        },
        CheckDescriptor {
            id: "weierstrass.char3",
            description: "characteristic-3 witnesses: lam | P_4, P_5 non-squarefree, P_3 squarefree",
            conjecture: false,
            run: run_char3,
        },
        CheckDescriptor {
            id: "d4.hasse-bound",
            description: "|e_p| <= 2 sqrt(p) + 4 for every good prime in range",
            conjecture: false,
            run: run_hasse_bound,
        },
        CheckDescriptor {
            id: "padic.legendre-valuations",
            description: "closed p-adic valuation formulas for double factorials match direct factorization",
            conjecture: false,
            run: run_padic,
        },
        CheckDescriptor {
            id: "genus.pipeline",
            description: "arithmetic genus minus delta invariants reproduces the stated geometric genera (Weierstrass, D4 at m=3, Legendre table)",
            conjecture: true,
            run: run_genus_pipeline,
        },
    ]
}

/// Runs one registered check by id.
pub fn run_check(id: &str, params: &CheckParams) -> Option<Vec<VerificationReport>> {
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .map(|c| (c.run)(params))
}

/// Runs every check, optionally across threads, reports sorted by id.
pub fn run_all(params: &CheckParams, threads: usize) -> Vec<VerificationReport> {
    let regs = registry();
    let mut reports: Vec<VerificationReport> = if threads <= 1 {
        regs.iter().flat_map(|c| (c.run)(params)).collect()
    } else {
        let chunks: Vec<Vec<&CheckDescriptor>> = {
            let mut cs: Vec<Vec<&CheckDescriptor>> = (0..threads).map(|_| Vec::new()).collect();
            for (i, c) in regs.iter().enumerate() {
                cs[i % threads].push(c);
            }
            cs
        };
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| {
                    let params = params.clone();
                    scope.spawn(move || {
                        chunk
                            .into_iter()
                            .flat_map(|c| (c.run)(&params))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("check thread"))
                .collect()
        })
    };
    reports.sort_by(|a, b| a.id.cmp(&b.id).then(a.params.cmp(&b.params)));
    reports
}

/// Exit-code evaluation: 0 when nothing failed (refusals are fine).
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.verdict != Verdict::Fail)
}
