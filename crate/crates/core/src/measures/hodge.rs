//! Signed Hodge (E-)polynomial and Betti realizations of classes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::MeasureError;
use crate::grothendieck::{integer_coeffs, Basis, K0Class};

/// Integer polynomial in `x, y`, keyed by the exponent pair.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HodgePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl HodgePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(c: i64, a: u32, b: u32) -> Self {
        let mut h = Self::zero();
        h.add_term((a, b), BigInt::from(c));
        h
    }

    /// `L ↦ xy`.
    pub fn lefschetz() -> Self {
        Self::monomial(1, 1, 1)
    }

    pub fn from_terms(terms: &[(i64, u32, u32)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(c, a, b)| &acc + &Self::monomial(c, a, b))
    }

    fn add_term(&mut self, k: (u32, u32), c: BigInt) {
        let e = self.terms.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(a, b), c)| &self.coeff(b, a) == c)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    /// Specialise `x = y = −t`.
    pub fn to_betti(&self) -> BettiPoly {
        let mut v: Vec<BigInt> = Vec::new();
        for (&(a, b), c) in &self.terms {
            let d = (a + b) as usize;
            if v.len() <= d {
                v.resize(d + 1, BigInt::zero());
            }
            if d % 2 == 0 {
                v[d] += c;
            } else {
                v[d] -= c;
            }
        }
        BettiPoly::new(v)
    }

    /// Sum of all coefficients, i.e. the value at `x = y = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add<&HodgePoly> for &HodgePoly {
    type Output = HodgePoly;
    fn add(self, rhs: &HodgePoly) -> HodgePoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }
}

impl Sub<&HodgePoly> for &HodgePoly {
    type Output = HodgePoly;
    fn sub(self, rhs: &HodgePoly) -> HodgePoly {
        self + &rhs.scale(&BigInt::from(-1))
    }
}

impl Mul<&HodgePoly> for &HodgePoly {
    type Output = HodgePoly;
    fn mul(self, rhs: &HodgePoly) -> HodgePoly {
        let mut out = HodgePoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(e, f), d) in &rhs.terms {
                out.add_term((a + e, b + f), c * d);
            }
        }
        out
    }
}

impl Mul<&HodgePoly> for HodgePoly {
    type Output = HodgePoly;
    fn mul(self, rhs: &HodgePoly) -> HodgePoly {
        &self * rhs
    }
}

fn power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for HodgePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // graded by total degree, then by the power of x descending
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(a, b)| (a + b, std::cmp::Reverse(a)));
        for (n, k) in keys.into_iter().enumerate() {
            let c = &self.terms[k];
            let mono: Vec<String> = [power("x", k.0), power("y", k.1)].into_iter().filter(|s| !s.is_empty()).collect();
            let mono = mono.join("*");
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{a}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HodgePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for HodgePoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Integer polynomial in `t`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BettiPoly(Vec<BigInt>);

impl BettiPoly {
    pub fn new(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        BettiPoly(v)
    }

    pub fn from_i64(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&c| c.into()).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn at_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl fmt::Display for BettiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let a = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, neg) => write!(f, " {} ", if neg { '-' } else { '+' })?,
            }
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "{}", power("t", k as u32))?,
                (_, false) => write!(f, "{a}*{}", power("t", k as u32))?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BettiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for BettiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Coefficients of `(1−xt)^g (1−yt)^g` in `t`.
pub fn zeta_numerator(g: usize) -> Vec<HodgePoly> {
    let one_minus = |a: u32, b: u32| vec![HodgePoly::one(), HodgePoly::monomial(-1, a, b)];
    let mut f = vec![HodgePoly::one()];
    for factor in std::iter::repeat_n(one_minus(1, 0), g).chain(std::iter::repeat_n(one_minus(0, 1), g)) {
        let mut next = vec![HodgePoly::zero(); f.len() + 1];
        for (i, a) in f.iter().enumerate() {
            for (j, b) in factor.iter().enumerate() {
                next[i + j] = &next[i + j] + &(a * b);
            }
        }
        f = next;
    }
    f
}

/// E-polynomial of `SYM(n)`: the `tⁿ` coefficient of `(1−xt)^g(1−yt)^g / ((1−t)(1−xyt))`.
pub fn e_sym(n: usize, g: usize) -> HodgePoly {
    let f = zeta_numerator(g);
    let mut out = HodgePoly::zero();
    for (j, c) in f.iter().enumerate().take(n + 1) {
        // coefficient of t^{n−j} in 1/((1−t)(1−xyt)) is 1 + xy + … + (xy)^{n−j}
        let m = (n - j) as u32;
        let h = (0..=m).fold(HodgePoly::zero(), |acc, a| &acc + &HodgePoly::monomial(1, a, a));
        out = &out + &(c * &h);
    }
    out
}

/// `(1−x)^g (1−y)^g`.
pub fn e_jac(g: usize) -> HodgePoly {
    let a = &HodgePoly::one() - &HodgePoly::monomial(1, 1, 0);
    let b = &HodgePoly::one() - &HodgePoly::monomial(1, 0, 1);
    &a.pow(g) * &b.pow(g)
}

fn realize_coeff(c: &crate::grothendieck::RationalFunctionL) -> Result<HodgePoly, MeasureError> {
    let p = c.as_polynomial().ok_or_else(|| MeasureError::NonPolynomial(c.to_string()))?;
    let ints = integer_coeffs(p).ok_or_else(|| MeasureError::NonPolynomial(c.to_string()))?;
    Ok(ints
        .iter()
        .enumerate()
        .fold(HodgePoly::zero(), |acc, (k, a)| &acc + &HodgePoly::monomial(1, k as u32, k as u32).scale(a)))
}

/// Ring-morphism realization `SYM(n) ↦ e_sym(n)`, `JAC ↦ e_jac`, `L ↦ xy`.
pub fn e_realize(c: &K0Class, g: usize) -> Result<HodgePoly, MeasureError> {
    let mut out = HodgePoly::zero();
    for (b, a) in c.terms() {
        let base = match b {
            Basis::Sym(n) => e_sym(*n, g),
            Basis::Jac => e_jac(g),
        };
        out = &out + &(&realize_coeff(a)? * &base);
    }
    Ok(out)
}

/// Poincaré polynomial of a smooth proper class: the E-polynomial at `x = y = −t`.
pub fn betti(c: &K0Class, g: usize) -> Result<BettiPoly, MeasureError> {
    Ok(e_realize(c, g)?.to_betti())
}

/// Every coefficient evaluated at `L = 1`.
pub fn dg_multiplicity(c: &K0Class) -> Result<BTreeMap<Basis, BigRational>, MeasureError> {
    let one = BigRational::one();
    let mut out = BTreeMap::new();
    for (b, a) in c.terms() {
        let v = a.eval(&one).ok_or_else(|| MeasureError::PoleAtOne(a.to_string()))?;
        if !v.is_zero() {
            out.insert(*b, v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grothendieck::{moduli_class, RationalFunctionL};

    #[test]
    fn curve_and_point() {
        assert_eq!(e_sym(1, 2), HodgePoly::from_terms(&[(1, 0, 0), (-2, 1, 0), (-2, 0, 1), (1, 1, 1)]));
        assert_eq!(e_realize(&K0Class::sym(0).scale(&RationalFunctionL::l()), 2).unwrap(), HodgePoly::lefschetz());
        assert_eq!(betti(&K0Class::sym(0), 3).unwrap(), BettiPoly::from_i64(&[1]));
        assert_eq!(betti(&K0Class::jac(), 2).unwrap(), BettiPoly::from_i64(&[1, 4, 6, 4, 1]));
    }

    #[test]
    fn genus_two_moduli() {
        let m = moduli_class(2).unwrap();
        let e = e_realize(&m, 2).unwrap();
        assert_eq!(e, HodgePoly::from_terms(&[(1, 0, 0), (1, 1, 1), (-2, 2, 1), (-2, 1, 2), (1, 2, 2), (1, 3, 3)]));
        assert_eq!(betti(&m, 2).unwrap(), BettiPoly::from_i64(&[1, 0, 1, 4, 1, 0, 1]));
    }

    #[test]
    fn multiplicities() {
        let m = dg_multiplicity(&moduli_class(3).unwrap()).unwrap();
        let two = BigRational::from_integer(2.into());
        assert_eq!(m[&Basis::Sym(2)], BigRational::one());
        assert_eq!(m[&Basis::Sym(1)], two);
        assert_eq!(m[&Basis::Sym(0)], two);
        assert_eq!(m.len(), 3);
        let pole = K0Class::sym(0).div(&RationalFunctionL::poly(crate::grothendieck::Poly::one_minus_l_pow(1))).unwrap();
        assert!(matches!(dg_multiplicity(&pole), Err(MeasureError::PoleAtOne(_))));
    }

    #[test]
    fn display() {
        assert_eq!(e_sym(1, 2).to_string(), "1 - 2*x - 2*y + x*y");
        assert_eq!(BettiPoly::from_i64(&[1, 0, -1, 4]).to_string(), "1 - t^2 + 4*t^3");
    }
}
