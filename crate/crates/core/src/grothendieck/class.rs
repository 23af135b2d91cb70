//! Classes in the free ℚ(L)-module on `SYM(i)` and `JAC`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::ratfun::{proj_class, RationalFunctionL};

/// `SYM(i)` is the class of the `i`th symmetric power of the curve, `JAC` its Jacobian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Sym(usize),
    Jac,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Sym(i) => write!(f, "SYM({i})"),
            Basis::Jac => write!(f, "JAC"),
        }
    }
}

impl Serialize for Basis {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct K0Class {
    coeffs: BTreeMap<Basis, RationalFunctionL>,
}

impl K0Class {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: Basis) -> Self {
        Self::term(b, RationalFunctionL::one())
    }

    /// `SYM(i)`; identically zero for `i < 0`.
    pub fn sym(i: i64) -> Self {
        if i < 0 {
            Self::zero()
        } else {
            Self::basis(Basis::Sym(i as usize))
        }
    }

    pub fn jac() -> Self {
        Self::basis(Basis::Jac)
    }

    /// The class of a point.
    pub fn point() -> Self {
        Self::sym(0)
    }

    pub fn term(b: Basis, c: RationalFunctionL) -> Self {
        let mut k = Self::zero();
        k.add_term(b, c);
        k
    }

    pub fn add_term(&mut self, b: Basis, c: RationalFunctionL) {
        let entry = self.coeffs.entry(b).or_insert_with(RationalFunctionL::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    pub fn coeff(&self, b: Basis) -> RationalFunctionL {
        self.coeffs.get(&b).cloned().unwrap_or_else(RationalFunctionL::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &RationalFunctionL)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<Basis> {
        self.coeffs.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Every coefficient is a polynomial in `L`.
    pub fn is_polynomial(&self) -> bool {
        self.coeffs.values().all(RationalFunctionL::is_polynomial)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(RationalFunctionL::is_integral_polynomial)
    }

    pub fn max_sym(&self) -> Option<usize> {
        self.coeffs
            .keys()
            .filter_map(|b| match b {
                Basis::Sym(i) => Some(*i),
                Basis::Jac => None,
            })
            .max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.coeffs {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-RationalFunctionL::one()))
    }

    pub fn scale(&self, c: &RationalFunctionL) -> Self {
        let mut out = Self::zero();
        for (b, a) in &self.coeffs {
            out.add_term(*b, a * c);
        }
        out
    }

    /// Division of every coefficient; `None` when `c` is zero.
    pub fn div(&self, c: &RationalFunctionL) -> Option<Self> {
        let mut out = Self::zero();
        for (b, a) in &self.coeffs {
            out.add_term(*b, a.checked_div(c)?);
        }
        Some(out)
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a K0Class>>(items: I) -> Self {
        items.into_iter().fold(Self::zero(), |acc, k| acc.add(k))
    }
}

/// Rewrite `SYM(g−1+e)`, `e ≥ 1`, as `L^e·SYM(g−1−e) + [ℙ^{e−1}]·JAC`
/// (with `SYM(j) = 0` for `j < 0`). The result lives on `SYM(0..g−1)` and `JAC`.
pub fn reduce_sym(c: &K0Class, g: usize) -> K0Class {
    let mut out = K0Class::zero();
    for (b, a) in c.terms() {
        match *b {
            Basis::Sym(n) if n >= g => {
                let e = (n - (g - 1)) as i64;
                out = out.add(&K0Class::sym(g as i64 - 1 - e).scale(&(a * &RationalFunctionL::l_pow(e as usize))));
                out.add_term(Basis::Jac, a * &proj_class(e - 1));
            }
            _ => out.add_term(*b, a.clone()),
        }
    }
    out
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().rev().map(|(b, c)| format!("({c})*{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grothendieck::ratfun::Poly;

    #[test]
    fn negative_symmetric_powers_vanish() {
        assert!(K0Class::sym(-1).is_zero());
        assert!(!K0Class::sym(0).is_zero());
    }

    #[test]
    fn reduction_examples() {
        for g in 2..6usize {
            let top = reduce_sym(&K0Class::sym(2 * g as i64 - 1), g);
            assert_eq!(top, K0Class::term(Basis::Jac, proj_class(g as i64 - 1)));
            for i in 0..=g - 2 {
                let r = reduce_sym(&K0Class::sym((2 * g - 2 - i) as i64), g);
                let mut expected = K0Class::term(Basis::Sym(i), RationalFunctionL::l_pow(g - 1 - i));
                expected.add_term(Basis::Jac, proj_class((g - 2 - i) as i64));
                assert_eq!(r, expected);
            }
            let mid = K0Class::sym(g as i64 - 1);
            assert_eq!(reduce_sym(&mid, g), mid);
        }
    }

    #[test]
    fn arithmetic() {
        let a = K0Class::sym(1).scale(&RationalFunctionL::l());
        let b = a.sub(&a);
        assert!(b.is_zero());
        let half = a.div(&RationalFunctionL::poly(Poly::from_i64(&[1, 1]))).unwrap();
        assert!(!half.is_polynomial());
        assert!(a.div(&RationalFunctionL::zero()).is_none());
    }
}
