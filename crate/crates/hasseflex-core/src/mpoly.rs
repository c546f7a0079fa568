//! Sparse multivariate polynomials over an exact coefficient ring.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors under a fixed,
//! crate-wide convention: the variable list is declared once per polynomial
//! and shared; equality is map equality, so every polynomial is in canonical
//! form by construction. The map's lexicographic key order doubles as the
//! deterministic term order for text serialization.

use crate::coeff::{Coeff, Zp};
use crate::error::{Error, Result};
use crate::quotient::QuotElt;
use crate::rat::{binom, format_rat, parse_rat, Rat};
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Shared, ordered variable list.
pub type Vars = Arc<Vec<String>>;

/// Builds a variable list from names.
pub fn vars(names: &[&str]) -> Vars {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

/// Sparse multivariate polynomial. No zero coefficients are ever stored and
/// exponent vectors always have the declared arity.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly<C: Coeff = Rat> {
    pub vars: Vars,
    pub terms: BTreeMap<Vec<u16>, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(vars: &Vars) -> Self {
        MPoly {
            vars: Arc::clone(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.into()))
    }

    /// Inserts `coef * x^expo`, merging with an existing term.
    pub fn add_term(&mut self, expo: Vec<u16>, coef: C) {
        assert_eq!(expo.len(), self.arity(), "exponent arity mismatch");
        if coef.is_zero() {
            return;
        }
        match self.terms.remove(&expo) {
            None => {
                self.terms.insert(expo, coef);
            }
            Some(old) => {
                let s = old.add_ref(&coef);
                if !s.is_zero() {
                    self.terms.insert(expo, s);
                }
            }
        }
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u16>, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// A sample coefficient, used as ring context for constants.
    fn sample(&self) -> Option<&C> {
        self.terms.values().next()
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.vars, o.vars);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.vars, o.vars);
        let mut r = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.mul_ref(c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MPoly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k.mul_ref(c)))
                .collect(),
        }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc: Option<Self> = None;
        for _ in 0..n {
            acc = Some(match acc {
                None => self.clone(),
                Some(a) => a.mul(self),
            });
        }
        match acc {
            Some(a) => a,
            None => {
                // x^0 = 1; need a ring context
                let mut p = Self::zero(&self.vars);
                if let Some(s) = self.sample() {
                    p.add_term(vec![0; self.arity()], s.one_like());
                }
                p
            }
        }
    }

    /// k-th Hasse derivative with respect to `var`:
    /// `D^k x^j = C(j, k) x^(j-k)`, extended coefficient-linearly.
    /// `D^0` is the identity.
    pub fn hasse_derivative(&self, var: &str, k: u32) -> Result<Self> {
        let vi = self.var_index(var)?;
        if k == 0 {
            return Ok(self.clone());
        }
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let j = e[vi] as i64;
            let b = binom(j, k as i64);
            if b.is_zero() {
                continue;
            }
            let mut e2 = e.clone();
            e2[vi] = (j - k as i64) as u16;
            r.add_term(e2, c.mul_ref(&c.from_int_like(&b)));
        }
        Ok(r)
    }

    /// Degree in one variable (`-1` for the zero polynomial).
    pub fn degree_in(&self, var: &str) -> Result<i64> {
        let vi = self.var_index(var)?;
        Ok(self
            .terms
            .keys()
            .map(|e| e[vi] as i64)
            .max()
            .unwrap_or(-1))
    }

    /// Total degree (`-1` for the zero polynomial).
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum())
            .max()
            .unwrap_or(-1)
    }

    /// Coefficient of `var^k`, as a polynomial in the same variable list.
    pub fn coeff_of(&self, var: &str, k: u16) -> Result<Self> {
        let vi = self.var_index(var)?;
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[vi] == k {
                let mut e2 = e.clone();
                e2[vi] = 0;
                r.add_term(e2, c.clone());
            }
        }
        Ok(r)
    }

    /// Coefficient of the exact monomial with the given exponent vector.
    pub fn coeff_at(&self, expo: &[u16]) -> Option<&C> {
        self.terms.get(expo)
    }

    /// Dense coefficient list with respect to `var`: index `i` holds the
    /// coefficient polynomial of `var^i`.
    pub fn coeff_list(&self, var: &str) -> Result<Vec<Self>> {
        let d = self.degree_in(var)?;
        let mut out = Vec::new();
        for i in 0..=d.max(0) {
            out.push(self.coeff_of(var, i as u16)?);
        }
        if d < 0 {
            out.clear();
        }
        Ok(out)
    }

    /// Exact division: returns `R` with `self = Q * R`, or `NotDivisible`.
    ///
    /// Greedy cancellation of lexicographic leading terms; exactness makes
    /// the greedy step complete (the leading term of a product is the
    /// product of leading terms).
    pub fn exact_divide(&self, q: &Self) -> Result<Self> {
        debug_assert_eq!(self.vars, q.vars);
        if q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (qe, qc) = q.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while !rem.is_zero() {
            let (re, rc) = rem
                .terms
                .iter()
                .next_back()
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            if re.iter().zip(&qe).any(|(a, b)| a < b) {
                return Err(Error::NotDivisible);
            }
            let c = rc.try_div(&qc).ok_or(Error::NotDivisible)?;
            let e: Vec<u16> = re.iter().zip(&qe).map(|(a, b)| a - b).collect();
            let mut t = Self::zero(&self.vars);
            t.add_term(e, c);
            rem = rem.sub(&t.mul(q));
            quot = quot.add(&t);
        }
        Ok(quot)
    }

    /// Substitutes polynomials for variables (all in the same variable list).
    /// Variables absent from the map stay untouched.
    pub fn substitute(&self, assignment: &BTreeMap<String, Self>) -> Result<Self> {
        let mut idx: Vec<Option<&Self>> = vec![None; self.arity()];
        for (name, val) in assignment {
            let vi = self.var_index(name)?;
            if val.vars != self.vars {
                return Err(Error::ArityMismatch);
            }
            idx[vi] = Some(val);
        }
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut term = Self::zero(&self.vars);
            let mut base = vec![0u16; self.arity()];
            for (vi, &exp) in e.iter().enumerate() {
                if idx[vi].is_none() {
                    base[vi] = exp;
                }
            }
            term.add_term(base, c.clone());
            for (vi, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if let Some(sub) = idx[vi] {
                    term = term.mul(&sub.pow(exp as usize));
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Full evaluation at ring points; the assignment must cover every
    /// variable that occurs.
    pub fn eval(&self, point: &BTreeMap<String, C>) -> Result<C> {
        let mut idx: Vec<Option<&C>> = vec![None; self.arity()];
        for (name, val) in point {
            let vi = self.var_index(name)?;
            idx[vi] = Some(val);
        }
        let mut acc: Option<C> = None;
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (vi, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let v = idx[vi].ok_or(Error::ArityMismatch)?;
                for _ in 0..exp {
                    t = t.mul_ref(v);
                }
            }
            acc = Some(match acc {
                None => t,
                Some(a) => a.add_ref(&t),
            });
        }
        Ok(match acc {
            Some(a) => a,
            None => self
                .sample()
                .map(|s| s.zero_like())
                .unwrap_or_else(|| point.values().next().expect("empty ring context").zero_like()),
        })
    }

    /// Support of the polynomial projected to two chosen variables.
    pub fn support_2d(&self, vx: &str, vy: &str) -> Result<Vec<(i64, i64)>> {
        let i = self.var_index(vx)?;
        let j = self.var_index(vy)?;
        let mut pts: Vec<(i64, i64)> = self
            .terms
            .keys()
            .map(|e| (e[i] as i64, e[j] as i64))
            .collect();
        pts.sort_unstable();
        pts.dedup();
        Ok(pts)
    }

    /// Maps coefficients into another ring.
    pub fn map_coeff<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                terms.insert(e.clone(), d);
            }
        }
        MPoly {
            vars: Arc::clone(&self.vars),
            terms,
        }
    }

    /// Canonical text form: terms in ascending lexicographic exponent order,
    /// coefficients rendered exactly.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono = self.render_monomial(e);
            let cs = c.render();
            let (neg, abs) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&abs);
            } else if abs == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&abs);
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    fn render_monomial(&self, e: &[u16]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (vi, &exp) in e.iter().enumerate() {
            if exp == 0 {
                continue;
            }
            if exp == 1 {
                parts.push(self.vars[vi].clone());
            } else {
                let mut s = self.vars[vi].clone();
                s.push('^');
                s.push_str(&exp.to_string());
                parts.push(s);
            }
        }
        parts.join("*")
    }
}

impl MPoly<Rat> {
    pub fn constant(vars: &Vars, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rat::one())
    }

    pub fn var(vars: &Vars, name: &str) -> Self {
        let vi = vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("unknown variable `{name}`"));
        let mut e = vec![0u16; vars.len()];
        e[vi] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, Rat::one());
        p
    }

    pub fn monomial(vars: &Vars, coef: Rat, expo: &[(&str, u16)]) -> Self {
        let mut e = vec![0u16; vars.len()];
        for (name, k) in expo {
            let vi = vars
                .iter()
                .position(|v| v == name)
                .unwrap_or_else(|| panic!("unknown variable `{name}`"));
            e[vi] += k;
        }
        let mut p = Self::zero(vars);
        p.add_term(e, coef);
        p
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Rat::from_integer(BigInt::from(n)))
    }

    /// Content: positive gcd of all numerators over lcm of denominators,
    /// such that `self = content * primitive_part` with integral primitive
    /// part of unit content.
    pub fn content(&self) -> Rat {
        use num_integer::Integer;
        if self.is_zero() {
            return Rat::zero();
        }
        let mut gnum = BigInt::zero();
        let mut lden = BigInt::one();
        for c in self.terms.values() {
            gnum = gnum.gcd(c.numer());
            lden = lden.lcm(c.denom());
        }
        Rat::new(gnum, lden)
    }

    /// `self / content`, an integral polynomial of unit content.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&(Rat::one() / c))
    }

    /// Reduction mod p. Errors if any coefficient denominator is divisible
    /// by p, reporting the offending monomial.
    pub fn reduce_mod_p(&self, p: u64) -> Result<MPoly<Zp>> {
        let bp = BigInt::from(p);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if (c.denom() % &bp).is_zero() {
                let mono = MPoly::from_terms(&self.vars, [(e.clone(), c.clone())]);
                return Err(Error::DenominatorDivisibleByP(mono.render()));
            }
            let ctx = Zp { p, v: 0 };
            let num = ctx.from_int_like(c.numer());
            let den = ctx.from_int_like(c.denom());
            let v = num.try_div(&den).expect("denominator unit mod p");
            if !v.is_zero() {
                terms.insert(e.clone(), v);
            }
        }
        Ok(MPoly {
            vars: Arc::clone(&self.vars),
            terms,
        })
    }

    /// Evaluates into a quotient ring; variables missing from `point` must
    /// not occur in the polynomial.
    pub fn eval_quot(&self, point: &BTreeMap<String, QuotElt>) -> Result<QuotElt> {
        let ring = Arc::clone(&point.values().next().ok_or(Error::ArityMismatch)?.ring);
        let lifted: BTreeMap<String, QuotElt> = point.clone();
        let embedded = self.map_coeff(|c| ring.scalar(c.clone()));
        embedded.eval(&lifted)
    }

    /// Parses the canonical text form produced by [`MPoly::render`]
    /// (whitespace-insensitive; `^` exponents; `*` products).
    pub fn parse(vars: &Vars, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Self::zero(vars);
        if compact.is_empty() || compact == "0" {
            return Ok(p);
        }
        // split into signed chunks
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !matches!(compact.as_bytes()[i - 1], b'^' | b'*' | b'/' | b'+' | b'-') {
                chunks.push((sign, core::mem::take(&mut cur)));
                sign = ch == '-';
            } else if i == 0 && (ch == '+' || ch == '-') {
                sign = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        chunks.push((sign, cur));
        for (neg, chunk) in chunks {
            let mut coef = Rat::one();
            let mut expo = vec![0u16; vars.len()];
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(Error::Unsupported("empty factor".into()));
                }
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => {
                        let k: u16 = e
                            .parse()
                            .map_err(|_| Error::Unsupported("bad exponent".into()))?;
                        (b, k)
                    }
                    None => (factor, 1),
                };
                if base
                    .chars()
                    .next()
                    .map(|c| c.is_ascii_digit())
                    .unwrap_or(false)
                {
                    let q = parse_rat(base)
                        .ok_or_else(|| Error::Unsupported("bad rational".into()))?;
                    let mut q2 = Rat::one();
                    for _ in 0..exp {
                        q2 = q2 * q.clone();
                    }
                    coef = coef * q2;
                } else {
                    let vi = vars
                        .iter()
                        .position(|v| v == base)
                        .ok_or_else(|| Error::UnknownVariable(base.into()))?;
                    expo[vi] += exp;
                }
            }
            if neg {
                coef = -coef;
            }
            p.add_term(expo, coef);
        }
        Ok(p)
    }

    /// Set of primes appearing in coefficient denominators.
    pub fn denominator_primes(&self) -> Vec<u64> {
        use num_integer::Integer;
        let mut lden = BigInt::one();
        for c in self.terms.values() {
            lden = lden.lcm(c.denom());
        }
        crate::rat::factorize(&lden.abs())
            .into_iter()
            .map(|(p, _)| p)
            .collect()
    }
}

/// Formats a rational for error/debug strings.
pub fn show_rat(q: &Rat) -> String {
    format_rat(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn xy() -> Vars {
        vars(&["x", "y"])
    }

    #[test]
    fn arithmetic_and_canonical_form() {
        let v = xy();
        let x = MPoly::var(&v, "x");
        let y = MPoly::var(&v, "y");
        let p = x.add(&y).mul(&x.sub(&y)); // x^2 - y^2
        let q = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p, q);
        assert_eq!(p.render(), "-y^2 + x^2");
    }

    #[test]
    fn hasse_rules() {
        let v = xy();
        let x = MPoly::var(&v, "x");
        // D^2 x^5 = 10 x^3
        let p = x.pow(5).hasse_derivative("x", 2).unwrap();
        assert_eq!(p, x.pow(3).scale_int(10));
        // D^1 D^2 x^4 = 3 D^3 x^4 = 12 x
        let a = x.pow(4).hasse_derivative("x", 2).unwrap();
        let b = a.hasse_derivative("x", 1).unwrap();
        assert_eq!(b, x.clone().scale_int(12));
        // D^4 x^3 = 0
        assert!(x.pow(3).hasse_derivative("x", 4).unwrap().is_zero());
        assert!(x.pow(3).hasse_derivative("z", 1).is_err());
    }

    #[test]
    fn exact_division() {
        let v = xy();
        let x = MPoly::var(&v, "x");
        let one = MPoly::one(&v);
        let p = x.mul(&x).sub(&one); // x^2-1
        let q = x.sub(&one); // x-1
        assert_eq!(p.exact_divide(&q).unwrap(), x.add(&one));
        assert_eq!(p.exact_divide(&one).unwrap(), p);
        assert_eq!(
            x.pow(3).exact_divide(&x.add(&one)),
            Err(Error::NotDivisible)
        );
        // round-trip on a denser example
        let r = x.pow(2).add(&MPoly::var(&v, "y").scale_int(3)).add(&one);
        let s = x.add(&MPoly::var(&v, "y")).sub(&one.scale_int(2));
        let prod = r.mul(&s);
        assert_eq!(prod.exact_divide(&s).unwrap(), r);
    }

    #[test]
    fn substitution_and_eval() {
        let v = xy();
        let x = MPoly::var(&v, "x");
        let p = x.pow(2);
        let mut m = BTreeMap::new();
        m.insert("x".to_string(), x.add(&MPoly::one(&v)));
        let q = p.substitute(&m).unwrap(); // (x+1)^2
        assert_eq!(q.render(), "1 + 2*x + x^2");

        let mut pt = BTreeMap::new();
        pt.insert("x".to_string(), rat(3, 2));
        pt.insert("y".to_string(), rat_int(0));
        assert_eq!(q.eval(&pt).unwrap(), rat(25, 4));
    }

    #[test]
    fn parse_render_roundtrip() {
        let v = xy();
        let p = MPoly::parse(&v, "2 - 5/2*x^3 + x*y - 1/16*y^6").unwrap();
        let q = MPoly::parse(&v, &p.render()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn reduce_mod_p_examples() {
        let v = xy();
        let x = MPoly::var(&v, "x");
        let half_x = x.scale(&rat(1, 2));
        let r = half_x.reduce_mod_p(3).unwrap();
        assert_eq!(r.terms.values().next().unwrap().v, 2);
        assert!(matches!(
            half_x.reduce_mod_p(2),
            Err(Error::DenominatorDivisibleByP(_))
        ));
    }
}
