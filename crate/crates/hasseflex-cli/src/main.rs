//! Command-line front end: polynomial and polygon computations, the named
//! verification harness, point counting and data export.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hasseflex_cli::checks::{self, CheckParams};
use hasseflex_cli::{config, output, satotate};
use hasseflex_core::elimination::{self, DiscRoute};
use hasseflex_core::ffarith;
use hasseflex_core::lattice::newton_polygon;
use hasseflex_core::mpoly::MPoly;
use hasseflex_core::pencils::{
    atomic_inflection, d6_factor, weierstrass_centered, PencilKind, PencilSpec, UMode,
};
use hasseflex_core::rat::parse_rat;
use hasseflex_core::report::Verdict;
use hasseflex_core::wronskian;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "hasseflex",
    about = "Exact computation and mechanical verification for inflection \
             polynomials of superelliptic pencils",
    version
)]
struct Cli {
    /// Emit JSON instead of text where applicable.
    #[arg(long, global = true)]
    json: bool,
    /// Output directory for generated files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the verification harness.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Suppress provenance headers in generated files.
    #[arg(long, global = true)]
    no_header: bool,
    /// key=value config file presetting ranges and bounds.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Pencil family: legendre | weierstrass | d4 | d6 | bielliptic.
    #[arg(long)]
    family: String,
    /// Legendre exponents, e.g. 1,1,1.
    #[arg(long)]
    abc: Option<String>,
    /// Index of the inflection polynomial.
    #[arg(long)]
    m: u32,
    /// `symbolic` or a rational l/n (e.g. 1/2).
    #[arg(long, default_value = "1/2")]
    u: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute an atomic inflection polynomial (canonical text + metadata).
    Inflect {
        #[command(flatten)]
        family: FamilyArgs,
        /// For the d6 family: also peel the predicted x^e (4z-1) factor.
        #[arg(long)]
        factor: bool,
    },
    /// Compute a Newton polygon (optionally in centered coordinates).
    Newton {
        #[command(flatten)]
        family: FamilyArgs,
        /// Recenter at the family's distinguished singular point
        /// (weierstrass only: (1, -3)).
        #[arg(long)]
        centered: bool,
        /// Write an SVG rendering of the polygon.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run registered verification checks (`all`, or a check id).
    Verify {
        /// Check id or `all`.
        id: Option<String>,
        /// List the catalog and exit.
        #[arg(long)]
        list: bool,
        /// Restrict index range, e.g. 2..10.
        #[arg(long)]
        m_range: Option<String>,
        /// Prime bound where applicable.
        #[arg(long)]
        prime_bound: Option<u64>,
        /// Plücker parameters n, alpha, beta.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        alpha: Option<u32>,
        #[arg(long)]
        beta: Option<u32>,
        /// Include extended (long-running) variants.
        #[arg(long)]
        extended: bool,
    },
    /// Exact point counts of the index-2 D4 curve.
    Count {
        /// Curve id (currently `d4-c2`).
        #[arg(long, default_value = "d4-c2")]
        curve: String,
        /// Count for a single prime.
        #[arg(long)]
        p: Option<u64>,
        /// Or a whole range of good primes up to the bound (CSV output).
        #[arg(long)]
        bound: Option<u64>,
        /// affine | projective | weighted:<w>.
        #[arg(long, default_value = "projective")]
        closure: String,
        /// Use the exhaustive counter instead of the fiberwise one.
        #[arg(long)]
        brute: bool,
    },
    /// Renormalized error statistics against the semicircle law.
    Satotate {
        #[arg(long, default_value_t = 10000)]
        bound: u64,
        #[arg(long, default_value_t = 40)]
        bins: usize,
    },
    /// Inflectionary discriminant of the bielliptic surface with its
    /// component ledger.
    Discriminant {
        #[arg(long)]
        m: u32,
        /// direct | interp.
        #[arg(long, default_value = "direct")]
        route: String,
    },
    /// The determinantal Wronskian matrix away from ramification.
    Wronskian {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        ell: u32,
        /// Optional concrete curve f(x) (canonical polynomial text in x) to
        /// substitute and cross-check.
        #[arg(long)]
        curve: Option<String>,
    },
}

fn parse_family(f: &FamilyArgs) -> Result<PencilSpec> {
    let (ell, n) = if f.u == "symbolic" {
        (1u32, 2u32)
    } else {
        let q = parse_rat(&f.u).ok_or_else(|| anyhow!("bad --u value `{}`", f.u))?;
        let ell: u32 = q.numer().to_string().parse().context("u numerator")?;
        let n: u32 = q.denom().to_string().parse().context("u denominator")?;
        (ell, n)
    };
    let kind = match f.family.as_str() {
        "legendre" => {
            let abc = f.abc.as_deref().unwrap_or("1,1,1");
            let parts: Vec<u32> = abc
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .context("--abc must be a,b,c")?;
            if parts.len() != 3 {
                bail!("--abc must have three entries");
            }
            PencilKind::Legendre {
                a: parts[0],
                b: parts[1],
                c: parts[2],
            }
        }
        "weierstrass" => PencilKind::Weierstrass,
        "d4" => PencilKind::D4,
        "d6" => PencilKind::D6,
        "bielliptic" => PencilKind::Bielliptic,
        other => bail!("unknown family `{other}`"),
    };
    Ok(PencilSpec::new(kind, n, ell))
}

fn umode(f: &FamilyArgs) -> UMode {
    if f.u == "symbolic" {
        UMode::Symbolic
    } else {
        UMode::Specialized
    }
}

fn param_var(spec: &PencilSpec) -> &'static str {
    match spec.kind {
        PencilKind::Legendre { .. } | PencilKind::Weierstrass => "lam",
        PencilKind::D4 => "s",
        PencilKind::D6 => "z",
        PencilKind::Bielliptic => "s1",
        PencilKind::Custom { .. } => "lam",
    }
}

fn parse_m_range(s: &str) -> Result<(u32, u32)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| anyhow!("range must look like 2..10"))?;
    Ok((a.parse()?, b.parse()?))
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    let cfg = match &cli.config {
        Some(p) => config::load(p).with_context(|| format!("config {}", p.display()))?,
        None => Default::default(),
    };
    let out_dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
    match cli.cmd {
        Cmd::Inflect { family, factor } => {
            let spec = parse_family(&family)?;
            let mode = umode(&family);
            let ip = atomic_inflection(&spec, family.m, mode);
            let denoms = ip.poly.denominator_primes();
            if cli.json {
                let value = serde_json::json!({
                    "family": spec.label(),
                    "m": family.m,
                    "u": if mode == UMode::Symbolic { "symbolic".to_string() } else { family.u.clone() },
                    "polynomial": ip.poly.render(),
                    "denominator_primes": denoms,
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!("{}", ip.poly.render());
                println!("# family={} m={} u={} denominator-primes={denoms:?}",
                    spec.label(), family.m, family.u);
            }
            if factor {
                if spec.kind != PencilKind::D6 {
                    bail!("--factor applies to the d6 family");
                }
                let fac = d6_factor(&spec, family.m, mode)?;
                println!(
                    "# factor: x^{} divides: {}, (4z-1) divides: {}",
                    fac.exponent, fac.x_power_divides, fac.linear_divides
                );
                println!("{}", fac.reduced.render());
            }
            Ok(0)
        }
        Cmd::Newton {
            family,
            centered,
            svg,
        } => {
            let spec = parse_family(&family)?;
            let mode = umode(&family);
            let mut poly = atomic_inflection(&spec, family.m, mode).poly;
            if centered {
                if spec.kind != PencilKind::Weierstrass {
                    bail!("--centered supports the weierstrass family (center (1, -3))");
                }
                poly = weierstrass_centered(&poly);
            }
            let pv = param_var(&spec);
            let np = newton_polygon(&poly, "x", pv)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "family": spec.label(),
                        "m": family.m,
                        "vertices": np.verts,
                    })
                );
            } else {
                println!("{:?}", np.verts);
            }
            if let Some(path) = svg {
                std::fs::write(&path, polygon_svg(&np))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(0)
        }
        Cmd::Verify {
            id,
            list,
            m_range,
            prime_bound,
            n,
            alpha,
            beta,
            extended,
        } => {
            if list {
                for c in checks::registry() {
                    println!(
                        "{:38} {}{}",
                        c.id,
                        if c.conjecture { "[conjecture] " } else { "" },
                        c.description
                    );
                }
                return Ok(0);
            }
            let mut params = CheckParams::default();
            if let Some(v) = cfg.get("m_min") {
                params.m_min = v.parse()?;
            }
            if let Some(v) = cfg.get("m_max") {
                params.m_max = Some(v.parse()?);
            }
            if let Some(v) = cfg.get("prime_bound") {
                params.prime_bound = v.parse()?;
            }
            if let Some(v) = cfg.get("seed") {
                params.seed = v.parse()?;
            }
            if let Some(r) = m_range {
                let (a, b) = parse_m_range(&r)?;
                params.m_min = a;
                params.m_max = Some(b);
            }
            if let Some(pb) = prime_bound {
                params.prime_bound = pb;
            }
            if let Some(v) = n {
                params.n = v;
            }
            if let Some(v) = alpha {
                params.alpha = v;
            }
            if let Some(v) = beta {
                params.beta = v;
            }
            params.extended = extended;
            let id = id.unwrap_or_else(|| "all".to_string());
            let started = Instant::now();
            let reports = if id == "all" {
                checks::run_all(&params, cli.threads.max(1))
            } else {
                match checks::run_check(&id, &params) {
                    Some(r) => r,
                    None => {
                        eprintln!("unknown check id `{id}`; catalog:");
                        for c in checks::registry() {
                            eprintln!("  {:38} {}", c.id, c.description);
                        }
                        return Ok(2);
                    }
                }
            };
            let millis = started.elapsed().as_millis();
            if cli.json {
                let arr: Vec<serde_json::Value> = reports
                    .iter()
                    .map(|r| output::to_json(r, millis / reports.len().max(1) as u128))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&arr)?);
            } else {
                for r in &reports {
                    output::print_report_line(r);
                }
                let fails = reports.iter().filter(|r| r.verdict == Verdict::Fail).count();
                let refused = reports
                    .iter()
                    .filter(|r| r.verdict == Verdict::Refused)
                    .count();
                println!(
                    "{} checks, {} failed, {} refused ({} ms)",
                    reports.len(),
                    fails,
                    refused,
                    millis
                );
            }
            Ok(if checks::all_passed(&reports) { 0 } else { 1 })
        }
        Cmd::Count {
            curve,
            p,
            bound,
            closure,
            brute,
        } => {
            if curve != "d4-c2" {
                bail!("unknown curve `{curve}`; available: d4-c2");
            }
            let closure = match closure.as_str() {
                "affine" => ffarith::Closure::Affine,
                "projective" => ffarith::Closure::ProjectiveP2,
                other => match other.strip_prefix("weighted:") {
                    Some(w) => ffarith::Closure::Weighted(w.parse()?),
                    None => bail!("closure must be affine | projective | weighted:<w>"),
                },
            };
            if let Some(p) = p {
                if p < 5 || p % 2 == 0 || p % 3 == 0 {
                    bail!("bad prime {p}: counting requires odd p not dividing 6");
                }
                let count = if brute || closure != ffarith::Closure::ProjectiveP2 {
                    ffarith::count_points(&ffarith::c2_mod_p(p)?, "x", "s", closure)?
                } else {
                    ffarith::fast_count_c2(p)?
                };
                println!("{count}");
                return Ok(0);
            }
            let bound = bound.ok_or_else(|| anyhow!("need --p or --bound"))?;
            let series = ffarith::c2_error_series(bound);
            let rows = satotate::renormalize(&series, 1);
            let path = out_dir.join("counts.csv");
            output::write_csv(
                &path,
                if cli.no_header {
                    None
                } else {
                    Some(output::provenance(&format!(
                        "hasseflex count curve=d4-c2 bound={bound}"
                    )))
                },
                "p,count,e,e_tilde",
                rows.iter()
                    .map(|r| format!("{},{},{},{}", r.p, r.count, r.e, r.e_tilde)),
            )?;
            println!("wrote {}", path.display());
            Ok(0)
        }
        Cmd::Satotate { bound, bins } => {
            if bound < 100 {
                bail!("--bound must be at least 100");
            }
            let bins = cfg
                .get("bins")
                .and_then(|v| v.parse().ok())
                .unwrap_or(bins);
            let series = ffarith::c2_error_series(bound);
            let rows = satotate::renormalize(&series, 1);
            let samples: Vec<f64> = rows.iter().map(|r| r.e_tilde).collect();
            let ks = satotate::ks_distance(&samples);
            let hist = satotate::histogram(&samples, bins);
            let hpath = out_dir.join("satotate_histogram.csv");
            output::write_csv(
                &hpath,
                if cli.no_header {
                    None
                } else {
                    Some(output::provenance(&format!(
                        "hasseflex satotate bound={bound} bins={bins}"
                    )))
                },
                "bin_left,bin_right,frequency",
                hist.iter().map(|(a, b, c)| format!("{a},{b},{c}")),
            )?;
            let spath = out_dir.join("satotate_series.csv");
            output::write_csv(
                &spath,
                if cli.no_header {
                    None
                } else {
                    Some(output::provenance(&format!(
                        "hasseflex satotate bound={bound}"
                    )))
                },
                "p,count,e,e_tilde",
                rows.iter()
                    .map(|r| format!("{},{},{},{}", r.p, r.count, r.e, r.e_tilde)),
            )?;
            println!(
                "KS distance to the semicircle law: {ks:.6} over {} primes",
                rows.len()
            );
            println!("wrote {} and {}", hpath.display(), spath.display());
            Ok(0)
        }
        Cmd::Discriminant { m, route } => {
            let route = match route.as_str() {
                "direct" => DiscRoute::Direct,
                "interp" => DiscRoute::Interp,
                other => bail!("route must be direct | interp, got `{other}`"),
            };
            let (res, q0, ledger) = elimination::surface_discriminant(m, route)?;
            if cli.json {
                let value = serde_json::json!({
                    "m": m,
                    "target": ledger.target,
                    "convention": ledger.convention,
                    "resultant_terms": res.terms.len(),
                    "constant_factor": q0.render(),
                    "components": ledger.entries.iter().map(|e| serde_json::json!({
                        "label": e.label,
                        "divides": e.divides,
                        "multiplicity": e.multiplicity,
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!("target: {} ({})", ledger.target, ledger.convention);
                println!("constant-term factor: {}", q0.render());
                for e in &ledger.entries {
                    println!(
                        "  {:22} divides: {:5} multiplicity: {}",
                        e.label, e.divides, e.multiplicity
                    );
                }
            }
            Ok(if ledger.all_divide() { 0 } else { 1 })
        }
        Cmd::Wronskian { n, d, ell, curve } => {
            let matrix = wronskian::away_matrix(n, d, ell)?;
            println!(
                "size {} (rows k = {}..{}, columns {:?})",
                matrix.rows.len(),
                matrix.rows.first().unwrap(),
                matrix.rows.last().unwrap(),
                matrix.cols
            );
            for row in matrix.render_cells() {
                println!("  [{}]", row.join(", "));
            }
            if let Some(text) = curve {
                let vs = hasseflex_core::mpoly::vars(&["x", "u"]);
                let f = MPoly::parse(&vs, &text)
                    .map_err(|e| anyhow!("parsing --curve: {e}"))?;
                let det = wronskian::away_determinant(&matrix, &f)?;
                println!("determinant: {}", det.render());
                let rep = wronskian::direct_comparison(n, d, ell, &f)?;
                output::print_report_line(&rep);
                return Ok(if rep.passed() { 0 } else { 1 });
            }
            Ok(0)
        }
    }
}

fn polygon_svg(p: &hasseflex_core::lattice::LatticePolygon) -> String {
    let xs: Vec<i64> = p.verts.iter().map(|v| v.0).collect();
    let ys: Vec<i64> = p.verts.iter().map(|v| v.1).collect();
    let (xmax, ymax) = (
        xs.iter().max().copied().unwrap_or(1).max(1),
        ys.iter().max().copied().unwrap_or(1).max(1),
    );
    let scale = 24.0;
    let w = (xmax as f64 + 2.0) * scale;
    let h = (ymax as f64 + 2.0) * scale;
    let pts: Vec<String> = p
        .verts
        .iter()
        .map(|v| {
            format!(
                "{},{}",
                (v.0 as f64 + 1.0) * scale,
                h - (v.1 as f64 + 1.0) * scale
            )
        })
        .collect();
    let mut grid = String::new();
    for gx in 0..=xmax {
        for gy in 0..=ymax {
            grid.push_str(&format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"1.5\" fill=\"#bbb\"/>",
                (gx as f64 + 1.0) * scale,
                h - (gy as f64 + 1.0) * scale
            ));
        }
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" \
         viewBox=\"0 0 {w} {h}\">{grid}<polygon points=\"{}\" fill=\"#9ecae1\" \
         fill-opacity=\"0.5\" stroke=\"#3182bd\" stroke-width=\"2\"/></svg>",
        pts.join(" ")
    )
}
