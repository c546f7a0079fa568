//! Falling, rising and double factorial gadgets.
//!
//! These products are the building blocks of every closed coefficient
//! formula in the statement catalog. Each gadget exists in a numeric form
//! over [`Rat`] and a symbolic form as a univariate polynomial in a chosen
//! variable (usually `u`).

use crate::mpoly::{MPoly, Vars};
use crate::rat::Rat;

/// Which product to form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorialKind {
    /// `(w)_k = w (w-1) ... (w-k+1)`
    Falling,
    /// `(w)^k = w (w+1) ... (w+k-1)`
    Rising,
    /// `((w))_k = w (w-2) ... (w-2k+2)`
    DoubleFalling,
    /// `((w))^k = w (w+2) ... (w+2k-2)`
    DoubleRising,
}

fn step(kind: FactorialKind) -> i64 {
    match kind {
        FactorialKind::Falling => -1,
        FactorialKind::Rising => 1,
        FactorialKind::DoubleFalling => -2,
        FactorialKind::DoubleRising => 2,
    }
}

/// Numeric gadget; `k = 0` gives 1.
pub fn factorial_gadget(w: &Rat, k: u32, kind: FactorialKind) -> Rat {
    use crate::rat::rat_int;
    let d = step(kind);
    let mut acc = rat_int(1);
    for i in 0..k as i64 {
        acc *= w + rat_int(d * i);
    }
    acc
}

/// Symbolic gadget in the variable `var` of the list `vs`; `k = 0` gives 1.
pub fn factorial_gadget_sym(vs: &Vars, var: &str, k: u32, kind: FactorialKind) -> MPoly {
    use crate::rat::rat_int;
    let d = step(kind);
    let w = MPoly::var(vs, var);
    let mut acc = MPoly::one(vs);
    for i in 0..k as i64 {
        acc = acc.mul(&w.add(&MPoly::constant(vs, rat_int(d * i))));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::vars;
    use crate::rat::{rat_int, Rat};

    #[test]
    fn numeric_gadgets() {
        assert_eq!(
            factorial_gadget(&rat_int(5), 3, FactorialKind::Falling),
            rat_int(60)
        );
        assert_eq!(
            factorial_gadget(&rat_int(7), 3, FactorialKind::DoubleFalling),
            rat_int(105)
        );
        assert_eq!(
            factorial_gadget(&rat_int(3), 3, FactorialKind::DoubleRising),
            rat_int(105)
        );
        assert_eq!(
            factorial_gadget(&rat_int(2), 3, FactorialKind::Rising),
            rat_int(24)
        );
        assert_eq!(
            factorial_gadget(&rat_int(9), 0, FactorialKind::Falling),
            Rat::from_integer(1.into())
        );
    }

    #[test]
    fn symbolic_falling() {
        let v = vars(&["u"]);
        let p = factorial_gadget_sym(&v, "u", 2, FactorialKind::Falling);
        assert_eq!(p.render(), "-u + u^2");
    }
}
