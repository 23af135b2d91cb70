//! Genus-two hyperelliptic curves over small odd fields, their zeta numerators,
//! and the counting realization of classes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::finite_field::{prime_power, FiniteField};
use super::zeta::functional_equation_holds;
use super::MeasureError;
use crate::grothendieck::{Basis, K0Class, Poly};

/// Fields for which counting is supported.
pub const SUPPORTED_Q: [u32; 4] = [3, 5, 7, 9];

/// On-disk form `{"q": 3, "f": [c0, …, c5]}`. For `q = 9` each coefficient is
/// an element code `a + 3b` standing for `a + bω` with `ω² = −1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFixture {
    pub q: u32,
    pub f: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveData {
    pub genus: usize,
    pub q: u32,
    /// `P(t)` low to high, degree `2g`.
    #[serde(serialize_with = "ints")]
    pub numerator: Vec<BigInt>,
    /// `#C(𝔽_{q^k})` for `k = 1..g`, when produced by counting.
    pub counts: Vec<u64>,
}

impl CurveData {
    /// Validates `P(0) = 1`, degree `2g` and the functional equation.
    pub fn new(genus: usize, q: u32, numerator: Vec<BigInt>) -> Result<Self, MeasureError> {
        if numerator.len() != 2 * genus + 1 || numerator.last().is_none_or(Zero::is_zero) {
            return Err(MeasureError::InvalidCurveData(format!("numerator must have degree {}", 2 * genus)));
        }
        if !numerator[0].is_one() {
            return Err(MeasureError::InvalidCurveData("P(0) must be 1".into()));
        }
        if !functional_equation_holds(&numerator, genus, &BigInt::from(q), &BigInt::one()) {
            return Err(MeasureError::InvalidCurveData("functional equation fails".into()));
        }
        Ok(Self { genus, q, numerator, counts: Vec::new() })
    }

    fn eval(&self, t: &BigInt) -> BigInt {
        self.numerator.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// `#Jac(𝔽_q) = P(1)`.
    pub fn jac_count(&self) -> BigInt {
        self.eval(&BigInt::one())
    }

    /// `#Symⁿ C(𝔽_q)`: the `tⁿ` coefficient of `P(t)/((1−t)(1−qt))`.
    pub fn sym_count(&self, n: usize) -> BigInt {
        let q = BigInt::from(self.q);
        let mut total = BigInt::zero();
        for (j, c) in self.numerator.iter().enumerate().take(n + 1) {
            // 1 + q + … + q^{n−j}
            let mut geo = BigInt::zero();
            let mut qp = BigInt::one();
            for _ in 0..=n - j {
                geo += &qp;
                qp *= &q;
            }
            total += c * geo;
        }
        total
    }

    /// `#C(𝔽_{q^k}) = q^k + 1 − Σ α^k`, recovered from `P`.
    pub fn point_count(&self, k: u32) -> BigInt {
        let s = power_sums(&self.numerator, k as usize);
        BigInt::from(self.q).pow(k) + 1 - &s[k as usize - 1]
    }
}

/// Power sums `s_1..s_k` of the inverse roots of `P(t) = Π(1 − α t)`.
fn power_sums(p: &[BigInt], k: usize) -> Vec<BigInt> {
    // Newton: s_m = −m c_m − Σ_{j=1}^{m−1} c_j s_{m−j}
    let c = |j: usize| p.get(j).cloned().unwrap_or_else(BigInt::zero);
    let mut s: Vec<BigInt> = Vec::with_capacity(k);
    for m in 1..=k {
        let mut v = -c(m) * BigInt::from(m);
        for j in 1..m {
            v -= c(j) * &s[m - j - 1];
        }
        s.push(v);
    }
    s
}

fn to_field_coeffs(fx: &CurveFixture, base: &FiniteField) -> Result<Vec<u32>, MeasureError> {
    let prime = base.degree() == 1;
    fx.f.iter()
        .map(|&c| {
            if prime {
                Ok(base.from_int(c))
            } else if (0..fx.q as i64).contains(&c) {
                Ok(c as u32)
            } else {
                Err(MeasureError::InvalidCurve(format!("coefficient {c} is not an element code below {}", fx.q)))
            }
        })
        .collect()
}

/// Count `y² = f(x)` over `𝔽_{q^k}`, `k = 1, 2`, on the smooth projective model
/// (one point at infinity for degree 5, `1 + χ(leading)` for degree 6), then
/// solve for the zeta numerator.
pub fn count_curve(fixture: &CurveFixture) -> Result<CurveData, MeasureError> {
    let q = fixture.q;
    if !SUPPORTED_Q.contains(&q) {
        return Err(MeasureError::UnsupportedField(q));
    }
    let base = FiniteField::new(q)?;
    let mut f = to_field_coeffs(fixture, &base)?;
    while f.last() == Some(&0) {
        f.pop();
    }
    let deg = f.len().saturating_sub(1);
    if deg != 5 && deg != 6 {
        return Err(MeasureError::InvalidCurve(format!("degree {deg}, expected 5 or 6")));
    }
    if base.gcd_degree(&f, &base.derivative(&f)) != 0 {
        return Err(MeasureError::InvalidCurve("f is not squarefree".into()));
    }
    let g = 2usize;
    let (p, n) = prime_power(q).expect("supported q");
    let mut counts = Vec::with_capacity(g);
    for k in 1..=g as u32 {
        let field = FiniteField::new(p.pow(n * k))?;
        let embed = field.embedding_of(&base)?;
        let fk: Vec<u32> = f.iter().map(|&c| embed[c as usize]).collect();
        let affine: i64 = field.elements().map(|x| 1 + field.chi(field.eval(&fk, x))).sum();
        let infinity = if deg == 5 { 1 } else { 1 + field.chi(fk[6]) };
        counts.push((affine + infinity) as u64);
    }
    let numerator = numerator_from_counts(q, g, &counts)?;
    let mut cd = CurveData::new(g, q, numerator)?;
    cd.counts = counts;
    Ok(cd)
}

/// Newton's identities for `c_1..c_g` from `s_k = q^k + 1 − N_k`, completed by `c_{2g−j} = q^{g−j} c_j`.
pub fn numerator_from_counts(q: u32, g: usize, counts: &[u64]) -> Result<Vec<BigInt>, MeasureError> {
    if counts.len() < g {
        return Err(MeasureError::InvalidCurveData(format!("need {g} point counts")));
    }
    let qb = BigInt::from(q);
    let s: Vec<BigInt> = (1..=g).map(|k| qb.pow(k as u32) + 1 - BigInt::from(counts[k - 1])).collect();
    let mut c: Vec<BigRational> = vec![BigRational::one()];
    for k in 1..=g {
        let mut acc = BigRational::zero();
        for j in 1..=k {
            acc -= BigRational::from_integer(s[j - 1].clone()) * &c[k - j];
        }
        c.push(acc / BigRational::from_integer(k.into()));
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(2 * g + 1);
    for v in &c {
        if !v.is_integer() {
            return Err(MeasureError::InvalidCurveData("non-integral zeta coefficient".into()));
        }
        out.push(v.to_integer());
    }
    for j in (0..g).rev() {
        out.push(qb.pow((g - j) as u32) * &out[j]);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub q: u32,
    pub genus: usize,
    /// Realization of the class with `L ↦ q`.
    #[serde(serialize_with = "int")]
    pub by_class: BigInt,
    /// `(P(q) − q^g P(1)) / ((1−q)(1−q²))`.
    #[serde(serialize_with = "int")]
    pub by_formula: BigInt,
    #[serde(serialize_with = "ints")]
    pub sym_counts: Vec<BigInt>,
    #[serde(serialize_with = "int")]
    pub jac_count: BigInt,
}

fn int<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(n) => s.serialize_i64(n),
        Err(_) => s.collect_str(v),
    }
}

fn ints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct Wrap<'a>(&'a BigInt);
    impl Serialize for Wrap<'_> {
        fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            int(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&Wrap(x))?;
    }
    seq.end()
}

fn exact_integer(v: BigRational, what: &str) -> Result<BigInt, MeasureError> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(MeasureError::NonIntegral(format!("{what} = {v}")))
    }
}

/// Realize `c` by point counting over `𝔽_q` and compare with the direct formula.
pub fn count_realize(c: &K0Class, cd: &CurveData) -> Result<CountReport, MeasureError> {
    let q = BigRational::from_integer(cd.q.into());
    let mut by_class = BigRational::zero();
    for (b, a) in c.terms() {
        let v = a.eval(&q).ok_or_else(|| MeasureError::PoleAtOne(a.to_string()))?;
        let count = match b {
            Basis::Sym(n) => cd.sym_count(*n),
            Basis::Jac => cd.jac_count(),
        };
        by_class += v * BigRational::from_integer(count);
    }
    let by_class = exact_integer(by_class, "class realization")?;

    let qi = BigInt::from(cd.q);
    let num = cd.eval(&qi) - qi.pow(cd.genus as u32) * cd.jac_count();
    let den = (BigInt::one() - &qi) * (BigInt::one() - &qi * &qi);
    let by_formula = exact_integer(BigRational::new(num, den), "formula")?;
    if by_class != by_formula {
        return Err(MeasureError::RouteMismatch { by_class: by_class.to_string(), by_formula: by_formula.to_string() });
    }
    let top = c.max_sym().unwrap_or(0).max(2 * cd.genus - 2);
    Ok(CountReport {
        q: cd.q,
        genus: cd.genus,
        by_class,
        by_formula,
        sym_counts: (0..=top).map(|n| cd.sym_count(n)).collect(),
        jac_count: cd.jac_count(),
    })
}

/// `#ℙⁿ(𝔽_q)` from the class `[ℙⁿ]`.
pub fn projective_count(n: i64, q: u32) -> BigInt {
    let v = crate::grothendieck::proj_class(n).eval(&BigRational::from_integer(q.into())).unwrap();
    v.to_integer()
}

/// `P(1)` via polynomial evaluation in `L`, as a cross-check of [`CurveData::jac_count`].
pub fn numerator_poly(cd: &CurveData) -> Poly {
    Poly::new(cd.numerator.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}
