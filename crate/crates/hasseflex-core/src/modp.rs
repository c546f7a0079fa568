//! Polynomials over `Z/p` and reduction from `Q`.
//!
//! [`PrimePoly`] is just [`MPoly`] with [`Zp`] coefficients; the helpers
//! here cover reduction, squarefreeness and divisibility witnesses used by
//! the positive-characteristic structure checks.

use crate::coeff::Zp;
use crate::error::Result;
use crate::mpoly::MPoly;
use crate::resultant::{gcd_mpoly, gcd_squarefree};

/// Sparse polynomial with coefficients in `Z/p`.
pub type PrimePoly = MPoly<Zp>;

/// Reduction of a rational polynomial mod p (coefficient-wise). Errors when
/// a denominator is divisible by p, reporting the offending monomial.
pub fn reduce_mod_p(p: &MPoly, prime: u64) -> Result<PrimePoly> {
    p.reduce_mod_p(prime)
}

/// True when the polynomial is squarefree over `Z/p` in the sense that it
/// shares no nonconstant factor with all of its first partials.
pub fn is_squarefree_mod_p(p: &PrimePoly) -> Result<bool> {
    let (g, _) = gcd_squarefree(p)?;
    Ok(g.total_degree() <= 0)
}

/// gcd of a reduced polynomial with its own first partial in a chosen
/// variable; the non-squarefreeness witness of the structure checks.
pub fn gcd_with_partial(p: &PrimePoly, var: &str) -> Result<PrimePoly> {
    let d = p.hasse_derivative(var, 1)?;
    Ok(gcd_mpoly(p, &d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::vars;
    use crate::rat::rat;

    #[test]
    fn reduction_and_squarefree() {
        let v = vars(&["x", "lam"]);
        let x = MPoly::var(&v, "x");
        let lam = MPoly::var(&v, "lam");
        // (1/2) x mod 3 = 2x
        let r = x.scale(&rat(1, 2)).reduce_mod_p(3).unwrap();
        assert_eq!(r.render(), "2*x");
        // lam^5 is wildly non-squarefree; x*lam + 1 is squarefree
        let p5 = lam.pow(5).reduce_mod_p(3).unwrap();
        assert!(!is_squarefree_mod_p(&p5).unwrap());
        let sq = x.mul(&lam).add(&MPoly::one(&v)).reduce_mod_p(3).unwrap();
        assert!(is_squarefree_mod_p(&sq).unwrap());
    }
}
