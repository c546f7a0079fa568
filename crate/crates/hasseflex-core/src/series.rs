//! Truncated formal power series with exact rational coefficients.
//!
//! A [`TruncatedSeries`] knows its own precision `N`: coefficients of
//! `y^0 ... y^N` are meaningful, everything above is unknown. Arithmetic
//! truncates consistently, so absolute precision is preserved by ring
//! operations and reduced by Hasse differentiation.

use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::rat::{binom, Rat};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// Power series in one variable, exact coefficients, explicit precision.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    /// `coeffs[k]` is the coefficient of `y^k`; length is `prec + 1`.
    pub coeffs: Vec<Rat>,
    /// Highest trusted exponent.
    pub prec: usize,
}

impl TruncatedSeries {
    pub fn zero(prec: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rat::zero(); prec + 1],
            prec,
        }
    }

    pub fn constant(c: Rat, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        s.coeffs[0] = c;
        s
    }

    /// The series `c * y^k`.
    pub fn monomial(c: Rat, k: usize, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        if k <= prec {
            s.coeffs[k] = c;
        }
        s
    }

    /// Least exponent with a nonzero coefficient, or `None` when the series
    /// is zero to its precision.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    fn common_prec(&self, o: &Self) -> usize {
        self.prec.min(o.prec)
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.common_prec(o);
        let mut s = Self::zero(p);
        for k in 0..=p {
            s.coeffs[k] = &self.coeffs[k] + &o.coeffs[k];
        }
        s
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.common_prec(o);
        let mut s = Self::zero(p);
        for k in 0..=p {
            s.coeffs[k] = &self.coeffs[k] - &o.coeffs[k];
        }
        s
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            prec: self.prec,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.common_prec(o);
        let mut s = Self::zero(p);
        for (i, a) in self.coeffs.iter().enumerate().take(p + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(p + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                s.coeffs[i + j] = &s.coeffs[i + j] + &(a * b);
            }
        }
        s
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            prec: self.prec,
        }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::constant(Rat::from_integer(1.into()), self.prec);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// k-th Hasse derivative: `D^k y^j = C(j, k) y^(j-k)`. Precision drops
    /// by `k`.
    pub fn hasse_derivative(&self, k: usize) -> Self {
        if k > self.prec {
            return Self::zero(0);
        }
        let p = self.prec - k;
        let mut s = Self::zero(p);
        for j in k..=self.prec {
            let b = binom(j as i64, k as i64);
            if b.is_zero() {
                continue;
            }
            s.coeffs[j - k] = &self.coeffs[j] * Rat::from_integer(b);
        }
        s
    }

    /// Truncates to a lower precision.
    pub fn truncate(&self, prec: usize) -> Self {
        let p = prec.min(self.prec);
        TruncatedSeries {
            coeffs: self.coeffs[..=p].to_vec(),
            prec: p,
        }
    }
}

/// Evaluates a univariate polynomial (in `var`) at a series argument.
pub fn eval_poly_at_series(f: &MPoly, var: &str, s: &TruncatedSeries) -> Result<TruncatedSeries> {
    let d = f.degree_in(var)?;
    let mut acc = TruncatedSeries::zero(s.prec);
    // Horner from the top coefficient down
    for k in (0..=d.max(0)).rev() {
        let ck = f.coeff_of(var, k as u16)?;
        if !ck.is_zero() && ck.total_degree() > 0 {
            return Err(Error::ArityMismatch);
        }
        let c = ck
            .terms
            .values()
            .next()
            .cloned()
            .unwrap_or_else(Rat::zero);
        acc = acc.mul(s).add(&TruncatedSeries::constant(c, s.prec));
        if d < 0 {
            break;
        }
    }
    Ok(acc)
}

/// Solves `f(x(y)) = y^n` around a simple root `gamma` of `f`, to precision
/// `N`: returns `x(y)` with `x(0) = gamma` and `f(x(y)) ≡ y^n mod y^(N+1)`.
///
/// Errors with [`Error::NotASimpleRoot`] when `f(gamma) != 0` or
/// `D^1 f(gamma) = 0` (the singular-fiber case).
pub fn local_inversion(f: &MPoly, var: &str, gamma: &Rat, n: usize, prec: usize) -> Result<TruncatedSeries> {
    use alloc::collections::BTreeMap;
    use alloc::string::ToString;
    assert!(n >= 2, "cover degree must be >= 2");
    let mut pt = BTreeMap::new();
    pt.insert(var.to_string(), gamma.clone());
    let f0 = f.eval(&pt)?;
    if !f0.is_zero() {
        return Err(Error::NotASimpleRoot);
    }
    let f1 = f.hasse_derivative(var, 1)?.eval(&pt)?;
    if f1.is_zero() {
        return Err(Error::NotASimpleRoot);
    }
    let inv_f1 = Rat::from_integer(1.into()) / f1;

    // x = gamma + z, z = y^n / f'(gamma) + higher corrections.
    let yn = TruncatedSeries::monomial(Rat::from_integer(1.into()), n, prec);
    let gamma_s = TruncatedSeries::constant(gamma.clone(), prec);
    let mut z = yn.scale(&inv_f1);
    // Each pass fixes at least one further coefficient; `prec` passes are
    // always enough at this scale.
    for _ in 0..=prec {
        let x = gamma_s.add(&z);
        let g = eval_poly_at_series(f, var, &x)?;
        let err = g.sub(&yn);
        if err.valuation().is_none() {
            break;
        }
        z = z.sub(&err.scale(&inv_f1));
    }
    let x = gamma_s.add(&z);
    let err = eval_poly_at_series(f, var, &x)?.sub(&yn);
    if err.valuation().is_some() {
        return Err(Error::InsufficientPrecision);
    }
    Ok(x)
}

/// Determinant of the Hasse Wronskian matrix `(D^i b_j)` of a basis of
/// series, by column-subset expansion. All series must share a precision.
///
/// Returns the determinant series together with its valuation and leading
/// coefficient; errors with [`Error::InsufficientPrecision`] when the
/// determinant vanishes to the available precision.
pub fn series_wronskian(basis: &[TruncatedSeries]) -> Result<(TruncatedSeries, usize, Rat)> {
    let r = basis.len();
    assert!(r > 0);
    let prec = basis.iter().map(|s| s.prec).min().unwrap();
    if prec < r - 1 {
        return Err(Error::InsufficientPrecision);
    }
    let out_prec = prec - (r - 1);
    // rows[i][j] = D^i b_j truncated to the common output precision
    let mut rows: Vec<Vec<TruncatedSeries>> = Vec::with_capacity(r);
    for i in 0..r {
        rows.push(
            basis
                .iter()
                .map(|b| b.hasse_derivative(i).truncate(out_prec))
                .collect(),
        );
    }
    let det = det_series(&rows, out_prec);
    match det.valuation() {
        Some(v) => {
            let lead = det.coeff(v);
            Ok((det, v, lead))
        }
        None => Err(Error::InsufficientPrecision),
    }
}

/// Laplace-style expansion over column subsets with memoization.
fn det_series(rows: &[Vec<TruncatedSeries>], prec: usize) -> TruncatedSeries {
    use alloc::collections::BTreeMap;
    fn rec(
        rows: &[Vec<TruncatedSeries>],
        row: usize,
        used: u32,
        prec: usize,
        memo: &mut BTreeMap<(usize, u32), TruncatedSeries>,
    ) -> TruncatedSeries {
        let n = rows.len();
        if row == n {
            let mut one = TruncatedSeries::zero(prec);
            one.coeffs[0] = Rat::from_integer(1.into());
            return one;
        }
        if let Some(hit) = memo.get(&(row, used)) {
            return hit.clone();
        }
        let mut acc = TruncatedSeries::zero(prec);
        let mut parity = 0usize;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            let sub = rec(rows, row + 1, used | (1 << col), prec, memo);
            let term = rows[row][col].mul(&sub);
            acc = if parity % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
            parity += 1;
        }
        memo.insert((row, used), acc.clone());
        acc
    }
    let mut memo = BTreeMap::new();
    rec(rows, 0, 0, prec, &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{vars, MPoly};
    use crate::rat::{rat, rat_int};

    #[test]
    fn inversion_of_linear() {
        let v = vars(&["x"]);
        let f = MPoly::var(&v, "x");
        let x = local_inversion(&f, "x", &rat_int(0), 2, 6).unwrap();
        assert_eq!(x.valuation(), Some(2));
        assert_eq!(x.coeff(2), rat_int(1));
        for k in [0, 1, 3, 4, 5, 6] {
            assert_eq!(x.coeff(k), rat_int(0), "coefficient of y^{k}");
        }
    }

    #[test]
    fn inversion_of_cubic() {
        // f = x(x-1)(x-2) = x^3 - 3x^2 + 2x, gamma = 0, n = 2:
        // x(y) = y^2/2 + 3 y^4 / 8 + O(y^6)
        let v = vars(&["x"]);
        let x = MPoly::var(&v, "x");
        let one = MPoly::one(&v);
        let f = x
            .clone()
            .mul(&x.sub(&one))
            .mul(&x.sub(&one.scale_int(2)));
        let s = local_inversion(&f, "x", &rat_int(0), 2, 7).unwrap();
        assert_eq!(s.coeff(2), rat(1, 2));
        assert_eq!(s.coeff(4), rat(3, 8));
        // certification: f(x(y)) == y^2 to precision
        let g = eval_poly_at_series(&f, "x", &s).unwrap();
        let y2 = TruncatedSeries::monomial(rat_int(1), 2, 7);
        assert!(g.sub(&y2).valuation().is_none());
    }

    #[test]
    fn inversion_rejects_multiple_roots() {
        // f = x^3 - 3x + 2 has a double root at x = 1
        let v = vars(&["x"]);
        let x = MPoly::var(&v, "x");
        let f = x
            .pow(3)
            .sub(&x.scale_int(3))
            .add(&MPoly::one(&v).scale_int(2));
        assert_eq!(
            local_inversion(&f, "x", &rat_int(1), 2, 6),
            Err(Error::NotASimpleRoot)
        );
    }

    #[test]
    fn wronskian_of_monomials() {
        // basis {1, y}: determinant 1, valuation 0
        let b = [
            TruncatedSeries::monomial(rat_int(1), 0, 5),
            TruncatedSeries::monomial(rat_int(1), 1, 5),
        ];
        let (_, v, c) = series_wronskian(&b).unwrap();
        assert_eq!(v, 0);
        assert_eq!(c, rat_int(1));
    }

    #[test]
    fn wronskian_detects_insufficient_precision() {
        let b = [
            TruncatedSeries::monomial(rat_int(1), 0, 1),
            TruncatedSeries::monomial(rat_int(1), 0, 1),
        ];
        assert!(series_wronskian(&b).is_err());
    }
}
