//! Sparse multivariate Laurent polynomials over the Gaussian rationals.
//!
//! A [`LaurentPoly`] carries its ordered variable list; binary operations
//! require identical lists. Terms are stored in a `BTreeMap` keyed by
//! exponent vector, so iteration (and therefore printing) follows the
//! lexicographic order on exponents and is fully deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::gaussian::GaussianRational;
use crate::matrix::ExactMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("coordinate for `{0}` is zero; Laurent monomials are undefined there")]
    ZeroCoordinate(String),
    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("no value given for variable `{0}`")]
    MissingCoordinate(String),
    #[error("monomial substitution sends {monomial} to a non-integral exponent")]
    NonIntegralImage { monomial: String },
    #[error("monomial map shape mismatch: {0}")]
    MapShape(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// A point of the exponent lattice ℤⁿ. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, k: usize, e: i64) -> Self {
        let mut v = vec![0; n];
        v[k] = e;
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<ExponentVector, GaussianRational>,
}

impl LaurentPoly {
    pub fn zero(vars: &[String]) -> Self {
        Self { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[String], c: GaussianRational) -> Self {
        Self::monomial(vars, ExponentVector::zero(vars.len()), c)
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(vars, GaussianRational::one())
    }

    pub fn monomial(vars: &[String], exps: ExponentVector, c: GaussianRational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length must match variables");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { vars: vars.to_vec(), terms }
    }

    /// The coordinate function `x^e` for variable `name`.
    pub fn var_pow(vars: &[String], name: &str, e: i64) -> Result<Self, LaurentError> {
        let k = index_of(vars, name)?;
        Ok(Self::monomial(vars, ExponentVector::unit(vars.len(), k, e), GaussianRational::one()))
    }

    pub fn var(vars: &[String], name: &str) -> Result<Self, LaurentError> {
        Self::var_pow(vars, name, 1)
    }

    pub fn from_terms<I>(vars: &[String], terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, GaussianRational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len());
            p.add_term(e, &c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &ExponentVector) -> GaussianRational {
        self.terms.get(e).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn var_index(&self, name: &str) -> Result<usize, LaurentError> {
        index_of(&self.vars, name)
    }

    fn add_term(&mut self, e: ExponentVector, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), LaurentError> {
        if self.vars != other.vars {
            return Err(LaurentError::VariableMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &-c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c0) in &self.terms {
            out.add_term(e.clone(), &(c0 * c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-GaussianRational::one())
    }

    /// Sum of an iterator of polynomials over `vars`.
    pub fn sum<'a, I>(vars: &[String], items: I) -> Result<Self, LaurentError>
    where
        I: IntoIterator<Item = &'a LaurentPoly>,
    {
        items.into_iter().try_fold(Self::zero(vars), |acc, p| acc.add(p))
    }

    /// Evaluate at a point given in variable order.
    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational, LaurentError> {
        let powers = self.power_table(point)?;
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            acc += &(c * &monomial_value(e, &powers));
        }
        Ok(acc)
    }

    /// Evaluate at a point given by variable name.
    pub fn eval_named(
        &self,
        point: &BTreeMap<String, GaussianRational>,
    ) -> Result<GaussianRational, LaurentError> {
        let ordered = self
            .vars
            .iter()
            .map(|v| point.get(v).cloned().ok_or_else(|| LaurentError::MissingCoordinate(v.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        self.eval(&ordered)
    }

    fn power_table(&self, point: &[GaussianRational]) -> Result<PowerTable, LaurentError> {
        if point.len() != self.vars.len() {
            return Err(LaurentError::PointLength { expected: self.vars.len(), got: point.len() });
        }
        for (v, x) in self.vars.iter().zip(point) {
            if x.is_zero() {
                return Err(LaurentError::ZeroCoordinate(v.clone()));
            }
        }
        Ok(PowerTable::new(point))
    }

    /// `x ∂f/∂x` for the variable at `index`: each coefficient times its exponent.
    pub fn log_derivative_at(&self, index: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e.0[index];
            if k != 0 {
                out.add_term(e.clone(), &(c * &GaussianRational::from_int(k)));
            }
        }
        out
    }

    pub fn log_derivative(&self, var: &str) -> Result<Self, LaurentError> {
        Ok(self.log_derivative_at(self.var_index(var)?))
    }

    /// All logarithmic partials evaluated at `point`, in variable order.
    pub fn log_gradient(&self, point: &[GaussianRational]) -> Result<Vec<GaussianRational>, LaurentError> {
        let powers = self.power_table(point)?;
        let mut grad = vec![GaussianRational::zero(); self.vars.len()];
        for (e, c) in &self.terms {
            let m = c * &monomial_value(e, &powers);
            for (slot, &k) in grad.iter_mut().zip(&e.0) {
                if k != 0 {
                    *slot += &(&m * &GaussianRational::from_int(k));
                }
            }
        }
        Ok(grad)
    }

    /// The matrix `(x_a ∂/∂x_a)(x_b ∂/∂x_b) f` at `point`.
    pub fn hessian_log(&self, point: &[GaussianRational]) -> Result<ExactMatrix, LaurentError> {
        let n = self.vars.len();
        let powers = self.power_table(point)?;
        let mut h = vec![vec![GaussianRational::zero(); n]; n];
        for (e, c) in &self.terms {
            let m = c * &monomial_value(e, &powers);
            let support: Vec<(usize, i64)> =
                e.0.iter().enumerate().filter(|(_, &k)| k != 0).map(|(a, &k)| (a, k)).collect();
            for &(a, ka) in &support {
                for &(b, kb) in &support {
                    h[a][b] += &(&m * &GaussianRational::from_int(ka * kb));
                }
            }
        }
        Ok(ExactMatrix::from_rows(h))
    }

    /// Apply a monomial change of coordinates, checking integrality per term.
    pub fn substitute_monomial(&self, map: &MonomialMap) -> Result<Self, LaurentError> {
        if map.source != self.vars {
            return Err(LaurentError::VariableMismatch {
                left: self.vars.clone(),
                right: map.source.clone(),
            });
        }
        let mut out = Self::zero(&map.target);
        for (e, c) in &self.terms {
            let image = map.image_of(e).ok_or_else(|| LaurentError::NonIntegralImage {
                monomial: format_monomial(&self.vars, e),
            })?;
            out.add_term(image, c);
        }
        Ok(out)
    }

    /// Re-express over a different variable list; every used variable must exist there.
    pub fn with_vars(&self, vars: &[String]) -> Result<Self, LaurentError> {
        let positions = self
            .vars
            .iter()
            .map(|v| index_of(vars, v))
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0i64; vars.len()];
            for (&p, &k) in positions.iter().zip(&e.0) {
                ne[p] += k;
            }
            out.add_term(ExponentVector(ne), c);
        }
        Ok(out)
    }

    /// Parse the canonical text format over a known variable list.
    pub fn parse(vars: &[String], text: &str) -> Result<Self, LaurentError> {
        parse_poly(vars, text)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.re.is_negative() || (c.re.is_zero() && c.im.is_negative());
            let shown = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coeff = if !shown.re.is_zero() && !shown.im.is_zero() {
                format!("({shown})")
            } else {
                shown.to_string()
            };
            if e.is_zero() {
                write!(f, "{coeff}")?;
            } else if shown.is_one() {
                write!(f, "{}", format_monomial(&self.vars, e))?;
            } else {
                write!(f, "{coeff}*{}", format_monomial(&self.vars, e))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({self})", self.vars.join(","))
    }
}

fn format_monomial(vars: &[String], e: &ExponentVector) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(&e.0)
        .filter(|(_, &k)| k != 0)
        .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn index_of(vars: &[String], name: &str) -> Result<usize, LaurentError> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| LaurentError::UnknownVariable(name.to_string()))
}

/// Cached positive and negative powers of the point's coordinates.
struct PowerTable {
    base: Vec<GaussianRational>,
    inv: Vec<GaussianRational>,
}

impl PowerTable {
    fn new(point: &[GaussianRational]) -> Self {
        Self {
            base: point.to_vec(),
            inv: point.iter().map(|x| x.inv().expect("nonzero checked")).collect(),
        }
    }
}

fn monomial_value(e: &ExponentVector, powers: &PowerTable) -> GaussianRational {
    let mut acc = GaussianRational::one();
    for (k, &ex) in e.0.iter().enumerate() {
        if ex > 0 {
            acc *= &powers.base[k].pow(ex).expect("nonnegative power");
        } else if ex < 0 {
            acc *= &powers.inv[k].pow(-ex).expect("nonnegative power");
        }
    }
    acc
}

/// A lattice morphism sending each source variable to a monomial in the
/// target variables with (possibly fractional) rational exponents.
///
/// A term of a polynomial maps to `Σ e_k · images[k]`; the substitution is
/// defined on that term exactly when the sum is integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMap {
    source: Vec<String>,
    target: Vec<String>,
    images: Vec<Vec<BigRational>>,
}

impl MonomialMap {
    pub fn new(
        source: Vec<String>,
        target: Vec<String>,
        images: Vec<Vec<BigRational>>,
    ) -> Result<Self, LaurentError> {
        if images.len() != source.len() {
            return Err(LaurentError::MapShape(format!(
                "{} images for {} source variables",
                images.len(),
                source.len()
            )));
        }
        if let Some(bad) = images.iter().find(|row| row.len() != target.len()) {
            return Err(LaurentError::MapShape(format!(
                "image of length {} over {} target variables",
                bad.len(),
                target.len()
            )));
        }
        Ok(Self { source, target, images })
    }

    /// Integral map from integer image rows.
    pub fn integral(
        source: Vec<String>,
        target: Vec<String>,
        images: Vec<Vec<i64>>,
    ) -> Result<Self, LaurentError> {
        let images = images
            .into_iter()
            .map(|row| row.into_iter().map(|k| BigRational::from_integer(k.into())).collect())
            .collect();
        Self::new(source, target, images)
    }

    pub fn identity(vars: &[String]) -> Self {
        let n = vars.len();
        let rows = (0..n).map(|a| (0..n).map(|b| i64::from(a == b)).collect()).collect();
        Self::integral(vars.to_vec(), vars.to_vec(), rows).expect("square identity")
    }

    /// `x_k ↦ x_k^{-1}` for every `k` in `inverted`, identity elsewhere.
    pub fn inversion(vars: &[String], inverted: &[usize]) -> Self {
        let n = vars.len();
        let rows = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| match (a == b, inverted.contains(&a)) {
                        (true, true) => -1,
                        (true, false) => 1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Self::integral(vars.to_vec(), vars.to_vec(), rows).expect("square inversion")
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }

    pub fn images(&self) -> &[Vec<BigRational>] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && *self == Self::identity(&self.source)
    }

    fn image_of(&self, e: &ExponentVector) -> Option<ExponentVector> {
        let mut out = Vec::with_capacity(self.target.len());
        for t in 0..self.target.len() {
            let mut s = BigRational::zero();
            for (k, &ex) in e.0.iter().enumerate() {
                if ex != 0 {
                    s += &self.images[k][t] * BigRational::from_integer(ex.into());
                }
            }
            if !s.is_integer() {
                return None;
            }
            out.push(s.to_integer().to_i64()?);
        }
        Some(ExponentVector(out))
    }

    /// The source-torus point `x_k = Π_t p_t^{images[k][t]}` for an integral map.
    pub fn pushforward_point(&self, point: &[GaussianRational]) -> Result<Vec<GaussianRational>, LaurentError> {
        if point.len() != self.target.len() {
            return Err(LaurentError::PointLength { expected: self.target.len(), got: point.len() });
        }
        let mut out = Vec::with_capacity(self.source.len());
        for (k, row) in self.images.iter().enumerate() {
            let mut acc = GaussianRational::one();
            for (t, ex) in row.iter().enumerate() {
                if !ex.is_integer() {
                    return Err(LaurentError::NonIntegralImage { monomial: self.source[k].clone() });
                }
                if ex.is_zero() {
                    continue;
                }
                let ex = ex.to_integer().to_i64().expect("small exponent");
                acc *= &point[t]
                    .pow(ex)
                    .ok_or_else(|| LaurentError::ZeroCoordinate(self.target[t].clone()))?;
            }
            out.push(acc);
        }
        Ok(out)
    }
}

fn parse_poly(vars: &[String], text: &str) -> Result<LaurentPoly, LaurentError> {
    let perr = |m: String| LaurentError::Parse(m);
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(perr("empty input".into()));
    }
    // split into signed terms at top-level +/- not following '^', '*' or '('
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let boundary = (ch == '+' || ch == '-')
            && depth == 0
            && !matches!(prev, None | Some('^') | Some('*') | Some('('));
        if boundary {
            terms.push((negative, std::mem::take(&mut current)));
            negative = ch == '-';
        } else if current.is_empty() && (ch == '-' || ch == '+') && prev.is_none() {
            negative = ch == '-';
        } else {
            current.push(ch);
        }
        prev = Some(ch);
    }
    if depth != 0 {
        return Err(perr("unbalanced parentheses".into()));
    }
    terms.push((negative, current));

    let mut poly = LaurentPoly::zero(vars);
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(perr("empty term".into()));
        }
        let mut coeff = GaussianRational::one();
        let mut exps = vec![0i64; vars.len()];
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(perr(format!("empty factor in `{term}`")));
            }
            let (base, power) = match factor.split_once('^') {
                Some((b, p)) => {
                    let p = p.parse::<i64>().map_err(|_| perr(format!("bad exponent in `{factor}`")))?;
                    (b, p)
                }
                None => (factor, 1),
            };
            if let Some(k) = vars.iter().position(|v| v == base) {
                exps[k] += power;
            } else {
                let inner = base.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(base);
                let c: GaussianRational = inner
                    .parse()
                    .map_err(|_| perr(format!("unknown factor `{base}`")))?;
                let c = c.pow(power).ok_or_else(|| perr(format!("zero to a negative power in `{factor}`")))?;
                coeff *= &c;
            }
        }
        if neg {
            coeff = -coeff;
        }
        poly.add_term(ExponentVector(exps), &coeff);
    }
    Ok(poly)
}

/// `x + x⁻¹` in the named variable.
pub fn j_plus(vars: &[String], name: &str) -> Result<LaurentPoly, LaurentError> {
    LaurentPoly::var_pow(vars, name, 1)?.add(&LaurentPoly::var_pow(vars, name, -1)?)
}

/// `x − x⁻¹` in the named variable.
pub fn j_minus(vars: &[String], name: &str) -> Result<LaurentPoly, LaurentError> {
    LaurentPoly::var_pow(vars, name, 1)?.sub(&LaurentPoly::var_pow(vars, name, -1)?)
}

pub fn var_names(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(names: &[&str]) -> Vec<String> {
        var_names(names)
    }

    fn p(vars: &[String], s: &str) -> LaurentPoly {
        LaurentPoly::parse(vars, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let v = vs(&["x"]);
        let prod = j_plus(&v, "x").unwrap().mul(&j_minus(&v, "x").unwrap()).unwrap();
        assert_eq!(prod, p(&v, "x^2 - x^-2"));
    }

    #[test]
    fn zero_is_additive_identity() {
        let v = vs(&["x", "y"]);
        let f = p(&v, "3*x*y^-1 + (1+2i)*y");
        assert_eq!(f.add(&LaurentPoly::zero(&v)).unwrap(), f);
    }

    #[test]
    fn j_plus_squared() {
        let v = vs(&["x"]);
        let j = j_plus(&v, "x").unwrap();
        assert_eq!(j.mul(&j).unwrap(), p(&v, "x^2 + 2 + x^-2"));
    }

    #[test]
    fn mismatched_variables_rejected() {
        let a = LaurentPoly::one(&vs(&["x"]));
        let b = LaurentPoly::one(&vs(&["y"]));
        assert!(matches!(a.add(&b), Err(LaurentError::VariableMismatch { .. })));
    }

    #[test]
    fn j_plus_vanishes_at_i() {
        let v = vs(&["x"]);
        let val = j_plus(&v, "x").unwrap().eval(&[GaussianRational::i()]).unwrap();
        assert!(val.is_zero());
    }

    #[test]
    fn evaluation_rejects_zero_coordinate() {
        let v = vs(&["x", "y"]);
        let f = p(&v, "x*y^-1");
        let err = f.eval(&[GaussianRational::one(), GaussianRational::zero()]).unwrap_err();
        assert_eq!(err, LaurentError::ZeroCoordinate("y".into()));
    }

    #[test]
    fn log_derivative_rules() {
        let v = vs(&["x", "y"]);
        assert_eq!(j_plus(&v, "x").unwrap().log_derivative("x").unwrap(), j_minus(&v, "x").unwrap());
        assert!(LaurentPoly::constant(&v, 5.into()).log_derivative("x").unwrap().is_zero());
        assert_eq!(p(&v, "x^2*y").log_derivative("x").unwrap(), p(&v, "2*x^2*y"));
        assert!(matches!(
            p(&v, "x").log_derivative("q"),
            Err(LaurentError::UnknownVariable(_))
        ));
    }

    #[test]
    fn hessian_of_square() {
        let v = vs(&["x"]);
        let h = p(&v, "x^2").hessian_log(&[GaussianRational::one()]).unwrap();
        assert_eq!(h.get(0, 0), &GaussianRational::from_int(4));
        let c = LaurentPoly::constant(&vs(&["x", "y"]), 7.into());
        let hc = c.hessian_log(&[1.into(), 2.into()]).unwrap();
        assert_eq!(hc.rank(), 0);
    }

    #[test]
    fn vertex_potential_inversion_changes_color() {
        let v = vs(&["x", "y", "z"]);
        let w0 = p(&v, "x*y*z + x*y^-1*z^-1 + x^-1*y*z^-1 + x^-1*y^-1*z");
        let w1 = p(&v, "x^-1*y^-1*z^-1 + x*y*z^-1 + x*y^-1*z + x^-1*y*z");
        let inv = MonomialMap::inversion(&v, &[0]);
        assert_eq!(w0.substitute_monomial(&inv).unwrap(), w1);
        assert_eq!(w0.substitute_monomial(&MonomialMap::identity(&v)).unwrap(), w0);
    }

    #[test]
    fn fractional_map_integrality_is_per_term() {
        let old = vs(&["x", "y"]);
        let new = vs(&["u", "v"]);
        let half = BigRational::new(1.into(), 2.into());
        let map = MonomialMap::new(
            old.clone(),
            new.clone(),
            vec![vec![half.clone(), half.clone()], vec![half.clone(), -half.clone()]],
        )
        .unwrap();
        // x*y = u, x/y = v are fine; x alone is u^{1/2} v^{1/2}
        assert_eq!(p(&old, "x*y + x*y^-1").substitute_monomial(&map).unwrap(), p(&new, "u + v"));
        assert!(matches!(
            p(&old, "x").substitute_monomial(&map),
            Err(LaurentError::NonIntegralImage { .. })
        ));
    }

    #[test]
    fn printing_is_canonical() {
        let v = vs(&["x", "y"]);
        let f = p(&v, "y + x^-2 - 3i*x + (1-2i)*x*y^-1 - 4");
        assert_eq!(f.to_string(), "x^-2 - 4 + y + (1-2i)*x*y^-1 - 3i*x");
        assert_eq!(p(&v, &f.to_string()), f);
        assert_eq!(LaurentPoly::zero(&v).to_string(), "0");
        assert!(LaurentPoly::parse(&v, "x + q").is_err());
    }
}
