//! Wronskian analysis at superelliptic ramification points.
//!
//! At a finite ramification point, `y` is a uniformizer with `v_y(x) = n`
//! and `v_y(y) = 1`, so the basis monomial `x^i y^j` has inflectionary
//! order `n i + j`. The lowest term of the Hasse Wronskian of the full
//! monomial basis factors through the binomial Vandermonde matrix
//! `N = (C(mu_j, i))`; its column-reduced form is governed by paths in
//! Plücker posets whose occurrence-weighted matrices generalize
//! Gessel–Viennot matrices.

use crate::error::{Error, Result};
use crate::mpoly::{vars, MPoly, Vars};
use crate::pencils::{monomial_basis, superelliptic_genus};
use crate::rat::{binom, rat_int, Rat};
use crate::report::VerificationReport;
use crate::resultant::{det_bareiss, det_bareiss_rat};
use crate::series::{local_inversion, series_wronskian, TruncatedSeries};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::One;

/// Sorted inflectionary orders `mu_i = n i + j` of the monomial basis.
pub fn inflection_orders(n: u32, d: u32, ell: u32) -> Result<Vec<u64>> {
    let basis = monomial_basis(n, d, ell)?;
    let mut mu: Vec<u64> = basis
        .elements
        .iter()
        .map(|&(i, j)| (n as u64) * (i as u64) + j as u64)
        .collect();
    mu.sort_unstable();
    Ok(mu)
}

/// Closed-form inflectionary multiplicity
/// `mu(B) = (n-1) n^2 (n+1) beta^2 / 24 + (n-1) n (5-n) beta / 12`.
pub fn mu_b(n: u32, beta: u32) -> i64 {
    let n = n as i64;
    let b = beta as i64;
    ((n - 1) * n * n * (n + 1) * b * b + 2 * (n - 1) * n * (5 - n) * b) / 24
}

/// The binomial Vandermonde matrix `N(n, g, l) = (C(mu_j, i))` and its
/// exact determinant, along with the lower-block shortcut.
#[derive(Clone, Debug)]
pub struct VandermondeData {
    pub mu: Vec<u64>,
    pub det: Rat,
    /// Index where the upper-left unit-triangular block ends.
    pub split: usize,
    pub lower_block: Vec<Vec<Rat>>,
    pub lower_det: Rat,
}

/// Builds `N(n, g, l)`; `g` determines `d` through `g = (d-1)(n-1)/2`.
pub fn vandermonde_n(n: u32, g: u32, ell: u32) -> Result<VandermondeData> {
    if (2 * g) % (n - 1) != 0 {
        return Err(Error::Hypotheses("g incompatible with n".into()));
    }
    let d = 2 * g / (n - 1) + 1;
    let mu = inflection_orders(n, d, ell)?;
    let size = mu.len();
    let full: Vec<Vec<Rat>> = (0..size)
        .map(|i| {
            mu.iter()
                .map(|&m| Rat::from_integer(binom(m as i64, i as i64)))
                .collect()
        })
        .collect();
    let det = det_bareiss_rat(full);
    // split: longest prefix with mu_j = j
    let split = mu
        .iter()
        .enumerate()
        .take_while(|&(j, &m)| m == j as u64)
        .count();
    let lower_block: Vec<Vec<Rat>> = (split..size)
        .map(|i| {
            (split..size)
                .map(|j| Rat::from_integer(binom(mu[j] as i64, i as i64)))
                .collect()
        })
        .collect();
    let lower_det = if lower_block.is_empty() {
        Rat::one()
    } else {
        det_bareiss_rat(lower_block.clone())
    };
    Ok(VandermondeData {
        mu,
        det,
        split,
        lower_block,
        lower_det,
    })
}

// ---------------------------------------------------------------------------
// Plücker posets, paths and generalized Gessel–Viennot matrices
// ---------------------------------------------------------------------------

/// Partition with exactly `i0` positive parts bounded by `n`, weakly
/// decreasing.
pub type Partition = Vec<u32>;

fn partitions_exact(weight: u32, parts: u32, max_part: u32) -> Vec<Partition> {
    fn rec(w: i64, k: u32, mx: u32) -> Vec<Vec<u32>> {
        if k == 0 {
            return if w == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        let hi = mx.min((w - (k as i64 - 1)).max(0) as u32);
        for first in (1..=hi).rev() {
            for mut rest in rec(w - first as i64, k - 1, first) {
                let mut p = vec![first];
                p.append(&mut rest);
                out.push(p);
            }
        }
        out
    }
    rec(weight as i64, parts, max_part)
}

fn contains(a: &Partition, b: &Partition) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// The column index set `(i0, k)` of the reduced Wronskian under the
/// hypotheses `l = n*alpha`, `d = n*beta + 1`, `alpha/beta > n-1`.
pub fn away_columns(n: u32, alpha: u32, beta: u32) -> Result<Vec<(u32, u32)>> {
    if beta == 0 || alpha <= beta * (n - 1) {
        return Err(Error::Hypotheses("need alpha/beta > n - 1".into()));
    }
    let mut cols = Vec::new();
    for i0 in alpha - (n - 1) * beta..=alpha {
        let j = if i0 + beta >= alpha {
            0
        } else {
            (1..n)
                .find(|&jj| {
                    alpha as i64 - (beta * (jj + 1)) as i64 <= i0 as i64
                        && (i0 + beta * jj + 1) <= alpha
                })
                .unwrap_or(0)
        };
        for k in 0..=j {
            cols.push((i0, k));
        }
    }
    cols.sort_unstable();
    let g = superelliptic_genus(n, n * beta + 1);
    if cols.len() as u32 != g + 1 {
        return Err(Error::Hypotheses(format!(
            "column count {} differs from g + 1 = {}",
            cols.len(),
            g + 1
        )));
    }
    Ok(cols)
}

/// Maximal paths and occurrence weights of one Plücker graph `PG(i0, k)`.
#[derive(Clone, Debug)]
pub struct PluckerColumn {
    pub i0: u32,
    pub k: u32,
    /// Minimal weight in the graph, `n (alpha - (n-1) beta) - k`.
    pub min_weight: u32,
    pub paths: Vec<Vec<Partition>>,
    pub occurrence: BTreeMap<Partition, u32>,
}

/// Enumerates the maximal paths of every column graph.
pub fn maximal_paths(n: u32, alpha: u32, beta: u32) -> Result<Vec<PluckerColumn>> {
    let cols = away_columns(n, alpha, beta)?;
    let base = n * (alpha - (n - 1) * beta);
    let mut out = Vec::new();
    for (i0, k) in cols {
        let min_w = base - k;
        let max_w = n * i0;
        let mut verts: BTreeMap<u32, Vec<Partition>> = BTreeMap::new();
        for w in min_w..=max_w {
            let ps = partitions_exact(w, i0, n);
            if !ps.is_empty() {
                verts.insert(w, ps);
            }
        }
        let mut paths: Vec<Vec<Partition>> = Vec::new();
        // maximal paths start at vertices with no predecessor in the graph
        let starts: Vec<Partition> = verts
            .values()
            .flatten()
            .filter(|v| {
                let w: u32 = v.iter().sum();
                if w == min_w {
                    return true;
                }
                match verts.get(&(w - 1)) {
                    None => true,
                    Some(prev) => !prev.iter().any(|u| contains(u, v)),
                }
            })
            .cloned()
            .collect();
        fn extend(
            verts: &BTreeMap<u32, Vec<Partition>>,
            path: &mut Vec<Partition>,
            out: &mut Vec<Vec<Partition>>,
        ) {
            let last = path.last().unwrap().clone();
            let w: u32 = last.iter().sum();
            let next: Vec<Partition> = verts
                .get(&(w + 1))
                .map(|vs| {
                    vs.iter()
                        .filter(|v| contains(&last, v))
                        .cloned()
                        .collect()
                })
                .unwrap_or_default();
            if next.is_empty() {
                out.push(path.clone());
                return;
            }
            for v in next {
                path.push(v);
                extend(verts, path, out);
                path.pop();
            }
        }
        for s in starts {
            let mut path = vec![s];
            extend(&verts, &mut path, &mut paths);
        }
        let mut occurrence: BTreeMap<Partition, u32> = BTreeMap::new();
        for p in &paths {
            for v in p {
                *occurrence.entry(v.clone()).or_insert(0) += 1;
            }
        }
        out.push(PluckerColumn {
            i0,
            k,
            min_weight: min_w,
            paths,
            occurrence,
        });
    }
    Ok(out)
}

fn multinomial(i0: u32, counts: &[u32]) -> BigInt {
    let mut num = crate::rat::factorial(i0 as i64);
    for &c in counts {
        num /= crate::rat::factorial(c as i64);
    }
    num
}

fn t_vars(n: u32) -> Vars {
    let names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    vars(&refs)
}

/// The universal Gessel–Viennot sum `sum_p det M~(p)` over formal variables
/// `t_1 ... t_n`: each matrix entry is
/// `multinomial(i0; c) / ow(lambda) * prod t_i^(c_i)` for the partition
/// `lambda = (1^(c_1), ..., n^(c_n))` of the appropriate weight on the
/// path, or zero off the path.
pub fn gv_sum(n: u32, alpha: u32, beta: u32) -> Result<MPoly> {
    let columns = maximal_paths(n, alpha, beta)?;
    let g1 = columns.len(); // g + 1
    let ts = t_vars(n);
    let mut total = MPoly::zero(&ts);
    // iterate over the product of path choices
    let counts: Vec<usize> = columns.iter().map(|c| c.paths.len()).collect();
    let mut choice = vec![0usize; g1];
    loop {
        // build the matrix for this choice
        let mut cells: Vec<Vec<MPoly>> = vec![vec![MPoly::zero(&ts); g1]; g1];
        for (ci, col) in columns.iter().enumerate() {
            let path = &col.paths[choice[ci]];
            for u in 0..g1 {
                let w = col.min_weight + u as u32;
                if let Some(lam) = path.iter().find(|v| v.iter().sum::<u32>() == w) {
                    let mut c = vec![0u32; n as usize];
                    for &part in lam {
                        c[(part - 1) as usize] += 1;
                    }
                    let ow = col.occurrence[lam];
                    let coef = Rat::new(multinomial(col.i0, &c), BigInt::from(ow));
                    let mut e = vec![0u16; n as usize];
                    for (i, &ci2) in c.iter().enumerate() {
                        e[i] = ci2 as u16;
                    }
                    let mut mono = MPoly::zero(&ts);
                    mono.add_term(e, coef);
                    cells[u][ci] = mono;
                }
            }
        }
        total = total.add(&det_bareiss(cells)?);
        // advance the mixed-radix counter
        let mut pos = 0;
        loop {
            if pos == g1 {
                return Ok(total);
            }
            choice[pos] += 1;
            if choice[pos] < counts[pos] {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// Specializes the universal sum at `t_i -> C(n, i)` and compares it with
/// `det N(n, g, l)`.
pub fn gv_identity_check(n: u32, alpha: u32, beta: u32) -> Result<VerificationReport> {
    let sum = gv_sum(n, alpha, beta)?;
    let ts = sum.vars.clone();
    let mut point = BTreeMap::new();
    for i in 1..=n {
        point.insert(
            format!("t{i}"),
            Rat::from_integer(binom(n as i64, i as i64)),
        );
    }
    let lhs = sum.eval(&point)?;
    let g = superelliptic_genus(n, n * beta + 1);
    let ell = n * alpha;
    let vd = vandermonde_n(n, g, ell)?;
    let params = format!("n={n} alpha={alpha} beta={beta}");
    let _ = ts;
    if lhs == vd.det {
        Ok(VerificationReport::pass(
            "ramification.gv-identity",
            &params,
            crate::rat::format_rat(&lhs),
            crate::rat::format_rat(&vd.det),
        ))
    } else {
        Ok(VerificationReport::fail(
            "ramification.gv-identity",
            &params,
            crate::rat::format_rat(&lhs),
            crate::rat::format_rat(&vd.det),
            "path-sum vs Vandermonde determinant".into(),
        ))
    }
}

// ---------------------------------------------------------------------------
// Tropical matrix and permanent
// ---------------------------------------------------------------------------

/// The tropical valuation matrix: the top row concatenates the blocks
/// `V^(i0)`; each column decreases by one per row until it reaches zero.
pub fn tropical_matrix(n: u32, alpha: u32, beta: u32) -> Result<Vec<Vec<i64>>> {
    let cols = away_columns(n, alpha, beta)?;
    let size = cols.len();
    let mut m = vec![vec![0i64; size]; size];
    for (ci, &(i0, k)) in cols.iter().enumerate() {
        let top = ((i0 + (n - 1) * beta - alpha) * n + k) as i64;
        for (u, row) in m.iter_mut().enumerate() {
            row[ci] = (top - u as i64).max(0);
        }
    }
    Ok(m)
}

/// Min-plus permanent (brute force over permutations; sizes are tiny).
pub fn tropical_permanent(n: u32, alpha: u32, beta: u32) -> Result<(Vec<Vec<i64>>, i64)> {
    let m = tropical_matrix(n, alpha, beta)?;
    let size = m.len();
    let mut perm: Vec<usize> = (0..size).collect();
    let mut best = i64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let s: i64 = p.iter().enumerate().map(|(i, &j)| m[i][j]).sum();
        if s < best {
            best = s;
        }
    });
    Ok((m, best))
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

// ---------------------------------------------------------------------------
// Global inflection class
// ---------------------------------------------------------------------------

/// Global inflection degree and (when defined) the hyperbolic-form class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A1Class {
    /// Classical global inflection degree `(r+1) d + (r+1) r (g-1)`.
    pub gamma_c: i64,
    /// `Some(q)` meaning the class `q * H`; `None` records the parity
    /// obstruction.
    pub hyperbolic_multiplier: Option<i64>,
}

/// Computes the global class for a series of degree `d` and projective
/// rank `r` on a genus-`g` curve. The class exists iff
/// `(r+1) d + C(r+1, 2) (2g - 2)` is even.
pub fn plucker_degree_a1(d: i64, g: i64, r: i64) -> A1Class {
    let gamma_c = (r + 1) * d + (r + 1) * r * (g - 1);
    let bundle_degree = (r + 1) * d + (r + 1) * r / 2 * (2 * g - 2);
    let defined = bundle_degree % 2 == 0;
    A1Class {
        gamma_c,
        hyperbolic_multiplier: if defined { Some(gamma_c / 2) } else { None },
    }
}

// ---------------------------------------------------------------------------
// Series cross-check
// ---------------------------------------------------------------------------

/// Builds the basis series through local inversion at a simple root and
/// verifies both descriptions of the lowest Wronskian term: valuation
/// `mu(B) = sum(mu_i - i)` and leading coefficient
/// `prod_i D^(mu_i) b_i |_0 * det N`.
pub fn series_cross_check(
    n: u32,
    d: u32,
    ell: u32,
    f: &MPoly,
    gamma: &Rat,
    prec: usize,
) -> Result<VerificationReport> {
    let basis = monomial_basis(n, d, ell)?;
    let mut elems: Vec<(u32, u32, u64)> = basis
        .elements
        .iter()
        .map(|&(i, j)| (i, j, (n as u64) * i as u64 + j as u64))
        .collect();
    elems.sort_by_key(|&(_, _, mu)| mu);
    let mu: Vec<u64> = elems.iter().map(|&(_, _, m)| m).collect();
    let mu_sum: i64 = mu
        .iter()
        .enumerate()
        .map(|(i, &m)| m as i64 - i as i64)
        .sum();

    let x = local_inversion(f, "x", gamma, n as usize, prec)?;
    let c_n = x.coeff(n as usize);
    let series: Vec<TruncatedSeries> = elems
        .iter()
        .map(|&(i, j, _)| {
            let mut s = x.pow(i as usize);
            s = s.mul(&TruncatedSeries::monomial(rat_int(1), j as usize, prec));
            s
        })
        .collect();
    let (_, val, lead) = series_wronskian(&series)?;

    let g = superelliptic_genus(n, d);
    let vd = vandermonde_n(n, g, ell)?;
    let i_sum: u32 = elems.iter().map(|&(i, _, _)| i).sum();
    let mut expect_lead = vd.det.clone();
    for _ in 0..i_sum {
        expect_lead *= c_n.clone();
    }

    let params = format!("n={n} d={d} ell={ell} gamma={}", crate::rat::format_rat(gamma));
    let ok = val as i64 == mu_sum && lead == expect_lead;
    if ok {
        Ok(VerificationReport::pass(
            "ramification.series-cross-check",
            &params,
            format!("valuation {val}, leading {}", crate::rat::format_rat(&lead)),
            format!(
                "valuation {mu_sum}, leading {}",
                crate::rat::format_rat(&expect_lead)
            ),
        ))
    } else {
        Ok(VerificationReport::fail(
            "ramification.series-cross-check",
            &params,
            format!("valuation {val}, leading {}", crate::rat::format_rat(&lead)),
            format!(
                "valuation {mu_sum}, leading {}",
                crate::rat::format_rat(&expect_lead)
            ),
            "lowest Wronskian term".into(),
        ))
    }
}

/// Direct Wronskian of the pure monomial series `y^(mu_i)`: matches the
/// Vandermonde data by construction and serves as the trivial control.
pub fn monomial_series_control(mu: &[u64], prec: usize) -> Result<(usize, Rat)> {
    let series: Vec<TruncatedSeries> = mu
        .iter()
        .map(|&m| TruncatedSeries::monomial(rat_int(1), m as usize, prec))
        .collect();
    let (_, v, c) = series_wronskian(&series)?;
    Ok((v, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_mu() {
        assert_eq!(inflection_orders(3, 4, 9).unwrap(), vec![0, 1, 2, 3, 4, 6, 9]);
        assert_eq!(inflection_orders(2, 5, 6).unwrap(), vec![0, 1, 2, 4, 6]);
        assert_eq!(inflection_orders(2, 3, 0).unwrap(), vec![0]);
        assert_eq!(mu_b(3, 1), 4);
        assert_eq!(mu_b(2, 4), 10); // C(5, 2)
        assert_eq!(mu_b(5, 0), 0);
    }

    #[test]
    fn vandermonde_378() {
        let vd = vandermonde_n(3, 3, 9).unwrap();
        assert_eq!(vd.mu, vec![0, 1, 2, 3, 4, 6, 9]);
        assert_eq!(vd.split, 5); // mu = (0,1,2,3,4,...) matches indices up to 4
        assert_eq!(vd.det, rat_int(378));
    }

    #[test]
    fn columns_331() {
        assert_eq!(
            away_columns(3, 3, 1).unwrap(),
            vec![(1, 0), (1, 1), (2, 0), (3, 0)]
        );
    }

    #[test]
    fn tropical_331() {
        let (m, p) = tropical_permanent(3, 3, 1).unwrap();
        assert_eq!(m[0], vec![0, 1, 3, 6]);
        assert_eq!(p, 4);
        assert_eq!(p, mu_b(3, 1));
    }

    #[test]
    fn gv_sum_331() {
        let s = gv_sum(3, 3, 1).unwrap();
        let ts = s.vars.clone();
        let expect = MPoly::parse(&ts, "9*t1*t2^2*t3^4 + 2*t2^4*t3^3 - 3*t1^2*t3^5").unwrap();
        assert_eq!(s, expect);
        let rep = gv_identity_check(3, 3, 1).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.computed, "378");
    }

    #[test]
    fn n2_singleton_paths() {
        let cols = maximal_paths(2, 4, 2).unwrap();
        for c in &cols {
            assert_eq!(c.paths.len(), 1, "P(i0,0) must be a singleton for n=2");
            assert!(c.occurrence.values().all(|&x| x == 1));
        }
    }

    #[test]
    fn a1_classes() {
        // rational normal curve: d = r, g = 0
        assert_eq!(plucker_degree_a1(4, 0, 4).gamma_c, 0);
        // plane cubic flexes
        let c = plucker_degree_a1(3, 1, 2);
        assert_eq!(c.gamma_c, 9);
        assert_eq!(c.hyperbolic_multiplier, None); // 9 odd: obstructed
    }
}
