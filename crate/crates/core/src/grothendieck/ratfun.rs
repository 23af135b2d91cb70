//! Univariate polynomials over ℚ in the Lefschetz symbol `L`, and the
//! fraction field ℚ(L) with reduced, monic denominators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Dense polynomial, coefficient of `L^k` at index `k`, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<BigRational>);

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c·L^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = BigRational::from_integer(c.into());
        Self::new(v)
    }

    pub fn l() -> Self {
        Self::monomial(1, 1)
    }

    /// `1 − L^k`.
    pub fn one_minus_l_pow(k: usize) -> Self {
        &Self::one() - &Self::monomial(1, k)
    }

    /// `1 + L + … + L^n`, zero for `n < 0`.
    pub fn geometric(n: i64) -> Self {
        if n < 0 {
            return Self::zero();
        }
        Self::new(vec![BigRational::one(); n as usize + 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.0.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(BigRational::is_integer)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }

    /// Generic evaluation into any ring that has the integers.
    pub fn eval_with<T>(&self, x: &T, embed: impl Fn(&BigRational) -> T) -> T
    where
        T: Clone + Add<Output = T> + Mul<Output = T>,
    {
        let mut it = self.0.iter().rev();
        let Some(first) = it.next() else { return embed(&BigRational::zero()) };
        it.fold(embed(first), |acc, c| acc * x.clone() + embed(c))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.lead();
        let mut r = self.0.clone();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (j, dj) in d.0.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (Self::new(q), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(BigRational::one() / self.lead()))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Power series coefficients up to `L^{n-1}` of `self / den`; `den(0)` must be nonzero.
    pub fn series_div(&self, den: &Self, n: usize) -> Option<Vec<BigRational>> {
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeff(k);
            for j in 1..=k {
                c -= den.coeff(j) * &out[k - j];
            }
            out.push(c / &d0);
        }
        Some(out)
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly(Vec::new())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly(vec![BigRational::one()])
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

fn write_coeff_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigRational, k: usize) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { '-' } else { '+' })?;
    }
    let unit = a.is_one();
    match (k, unit) {
        (0, _) => write!(f, "{a}"),
        (_, true) => write!(f, "L{}", if k == 1 { String::new() } else { format!("^{k}") }),
        (_, false) => write!(f, "{a}*L{}", if k == 1 { String::new() } else { format!("^{k}") }),
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_coeff_term(f, first, c, k)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element of ℚ(L) as `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunctionL {
    num: Poly,
    den: Poly,
}

impl RationalFunctionL {
    /// `None` if the denominator is zero.
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let lead = BigRational::one() / d.lead();
        Some(Self { num: n.scale(&lead), den: d.scale(&lead) })
    }

    pub fn poly(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::poly(Poly::from_i64(&[c]))
    }

    pub fn l() -> Self {
        Self::poly(Poly::l())
    }

    /// `L^k`.
    pub fn l_pow(k: usize) -> Self {
        Self::poly(Poly::monomial(1, k))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Polynomial with integer coefficients.
    pub fn is_integral_polynomial(&self) -> bool {
        self.is_polynomial() && self.num.is_integral()
    }

    pub fn pow(&self, e: usize) -> Self {
        Self { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// `None` on division by zero.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// `None` when the denominator vanishes at `x`.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn series(&self, n: usize) -> Option<Vec<BigRational>> {
        self.num.series_div(&self.den, n)
    }
}

/// `[ℙⁿ] = 1 + L + … + Lⁿ`; zero for `n = −1`.
pub fn proj_class(n: i64) -> RationalFunctionL {
    RationalFunctionL::poly(Poly::geometric(n))
}

impl Zero for RationalFunctionL {
    fn zero() -> Self {
        Self { num: Poly::zero(), den: Poly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunctionL {
    fn one() -> Self {
        Self::poly(Poly::one())
    }
}

impl Add for RationalFunctionL {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Mul for RationalFunctionL {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Sub for RationalFunctionL {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Add<&RationalFunctionL> for &RationalFunctionL {
    type Output = RationalFunctionL;
    fn add(self, rhs: &RationalFunctionL) -> RationalFunctionL {
        if self.den == rhs.den {
            return RationalFunctionL::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        RationalFunctionL::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den).unwrap()
    }
}

impl Sub<&RationalFunctionL> for &RationalFunctionL {
    type Output = RationalFunctionL;
    fn sub(self, rhs: &RationalFunctionL) -> RationalFunctionL {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunctionL> for &RationalFunctionL {
    type Output = RationalFunctionL;
    fn mul(self, rhs: &RationalFunctionL) -> RationalFunctionL {
        RationalFunctionL::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RationalFunctionL {
    type Output = RationalFunctionL;
    fn neg(self) -> RationalFunctionL {
        RationalFunctionL { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunctionL {
    type Output = RationalFunctionL;
    fn neg(self) -> RationalFunctionL {
        -&self
    }
}

impl From<Poly> for RationalFunctionL {
    fn from(p: Poly) -> Self {
        Self::poly(p)
    }
}

impl fmt::Display for RationalFunctionL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunctionL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for RationalFunctionL {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Integer coefficients of an integral polynomial.
pub fn integer_coeffs(p: &Poly) -> Option<Vec<BigInt>> {
    p.coeffs().iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
}
