//! Telescoping through the flips between moduli of stable pairs, and the
//! resulting class of the moduli space of rank-two bundles of odd degree.

use num_traits::Zero;
use serde::Serialize;

use super::class::{reduce_sym, Basis, K0Class};
use super::ratfun::{proj_class, Poly, RationalFunctionL};
use super::GrothendieckError;

/// A single named checkpoint with its outcome and a residual or witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, status: bool, detail: impl Into<String>) -> Self {
        Self { name: name.to_string(), status, detail: detail.into() }
    }

    /// Passes when `residual` is zero; the residual is recorded either way.
    pub fn residual(name: &str, residual: &K0Class) -> Self {
        Self::new(name, residual.is_zero(), residual.to_string())
    }
}

fn rf(p: Poly) -> RationalFunctionL {
    RationalFunctionL::poly(p)
}

fn one_minus(k: i64) -> Poly {
    // 1 − L^k for k ≥ 0; the formulas only produce k ≥ 0
    Poly::one_minus_l_pow(k.max(0) as usize)
}

/// `[M_i] − [M_{i−1}]` at degree `d`, step `i ≥ 1`, as a multiple of `SYM(i)`.
pub fn flip_difference(d: usize, i: usize, g: usize) -> RationalFunctionL {
    let (d, i, g) = (d as i64, i as i64, g as i64);
    let bracket = &(&one_minus(d + g - 2 * i - 2) * &one_minus(i)) - &(&one_minus(i - 1) * &one_minus(d + g - 2 * i - 1));
    let den = Poly::one_minus_l_pow(1).pow(2);
    RationalFunctionL::new(&Poly::l() * &bracket, den).expect("nonzero denominator")
}

fn check_genus(g: usize) -> Result<(), GrothendieckError> {
    if g < 2 {
        Err(GrothendieckError::GenusTooSmall(g))
    } else {
        Ok(())
    }
}

/// `[M_i^d]`: `[ℙ^{d+g−2}]` plus the flip differences up to step `i`.
pub fn flip_class(d: usize, i: usize, g: usize) -> Result<K0Class, GrothendieckError> {
    check_genus(g)?;
    if d % 2 == 0 || d <= 2 * g - 2 {
        return Err(GrothendieckError::BadDegree { d, g });
    }
    let max = (d - 1) / 2;
    if i > max {
        return Err(GrothendieckError::BadStep { i, max });
    }
    let mut c = K0Class::term(Basis::Sym(0), proj_class((d + g - 2) as i64));
    for j in 1..=i {
        c.add_term(Basis::Sym(j), flip_difference(d, j, g));
    }
    if !c.is_polynomial() {
        return Err(GrothendieckError::Checkpoint(format!("[M_{i}^{d}] is not polynomial: {c}")));
    }
    Ok(c)
}

/// `δM_i = [M_i^{4g−1}] − L²[M_i^{4g−3}]`, with `δM_{−1} = 0`.
pub fn delta_m(i: i64, g: usize) -> Result<K0Class, GrothendieckError> {
    if i < 0 {
        return Ok(K0Class::zero());
    }
    let i = i as usize;
    let hi = flip_class(4 * g - 1, i, g)?;
    let lo = flip_class(4 * g - 3, i, g)?;
    Ok(hi.sub(&lo.scale(&RationalFunctionL::l_pow(2))))
}

/// `X_i = δM_i − δM_{i−1}` for `0 ≤ i ≤ 2g−2`.
pub fn x_class(i: usize, g: usize) -> Result<K0Class, GrothendieckError> {
    check_genus(g)?;
    if i > 2 * g - 2 {
        return Err(GrothendieckError::BadStep { i, max: 2 * g - 2 });
    }
    Ok(delta_m(i as i64, g)?.sub(&delta_m(i as i64 - 1, g)?))
}

fn one_plus_l() -> RationalFunctionL {
    rf(Poly::from_i64(&[1, 1]))
}

/// `X_i = L^i(1+L)·SYM(i)` for every `i = 0..2g−2`.
pub fn verify_middle(g: usize) -> Result<bool, GrothendieckError> {
    for i in 0..=2 * g - 2 {
        let expected = K0Class::term(Basis::Sym(i), &RationalFunctionL::l_pow(i) * &one_plus_l());
        if x_class(i, g)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `𝒫(i) = L^{2g−2−i}(1+L)(1+L+…+L^{g−2−i})` for `0 ≤ i ≤ g−2`.
pub fn p_polynomial(i: usize, g: usize) -> Result<Poly, GrothendieckError> {
    check_genus(g)?;
    if i > g - 2 {
        return Err(GrothendieckError::BadStep { i, max: g - 2 });
    }
    Ok(&(&Poly::monomial(1, 2 * g - 2 - i) * &Poly::from_i64(&[1, 1])) * &Poly::geometric((g - 2 - i) as i64))
}

/// Closed form `L^g(1−L^{g−1})(1−L^g)/(1−L)²` of `Σ 𝒫(i)`.
pub fn p_sum_closed_form(g: usize) -> RationalFunctionL {
    let num = &(&Poly::monomial(1, g) * &Poly::one_minus_l_pow(g - 1)) * &Poly::one_minus_l_pow(g);
    RationalFunctionL::new(num, Poly::one_minus_l_pow(1).pow(2)).unwrap()
}

/// `Σ 𝒫(i)` matches its closed form, and `(Σ 𝒫(i))·JAC = [M^{4g−1}_{2g−2}] − [M^{4g−1}_{2g−1}]`.
pub fn verify_p_sum(g: usize) -> Result<bool, GrothendieckError> {
    let sum = (0..=g - 2).try_fold(Poly::zero(), |acc, i| Ok::<_, GrothendieckError>(&acc + &p_polynomial(i, g)?))?;
    if rf(sum.clone()) != p_sum_closed_form(g) {
        return Ok(false);
    }
    let diff = flip_class(4 * g - 1, 2 * g - 2, g)?.sub(&flip_class(4 * g - 1, 2 * g - 1, g)?);
    Ok(reduce_sym(&diff, g) == K0Class::term(Basis::Jac, rf(sum)))
}

/// `L^{g−1}·SYM(g−1) + Σ_{i≤g−2} (L^i + L^{3g−3−2i})·SYM(i)`.
pub fn expected_moduli_class(g: usize) -> K0Class {
    let mut c = K0Class::term(Basis::Sym(g - 1), RationalFunctionL::l_pow(g - 1));
    for i in 0..=g - 2 {
        c.add_term(Basis::Sym(i), &RationalFunctionL::l_pow(i) + &RationalFunctionL::l_pow(3 * g - 3 - 2 * i));
    }
    c
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModuliReport {
    pub genus: usize,
    /// `(1+L)[M]` after reduction, before dividing.
    pub times_one_plus_l: K0Class,
    pub class: K0Class,
    pub checks: Vec<Check>,
}

impl ModuliReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status)
    }
}

/// Assemble `(1+L)[M]` from the flip telescoping, reduce, divide by `1+L`,
/// and record every intermediate checkpoint.
pub fn moduli_report(g: usize) -> Result<ModuliReport, GrothendieckError> {
    check_genus(g)?;
    let mut checks = Vec::new();

    let xs: Vec<K0Class> = (0..=2 * g - 2).map(|i| x_class(i, g)).collect::<Result<_, _>>()?;
    let middle_residual = K0Class::sum(
        xs.iter()
            .enumerate()
            .map(|(i, x)| x.sub(&K0Class::term(Basis::Sym(i), &RationalFunctionL::l_pow(i) * &one_plus_l())))
            .collect::<Vec<_>>()
            .iter(),
    );
    checks.push(Check::residual("middle-equation", &middle_residual));

    let telescoped = K0Class::sum(xs.iter()).sub(&delta_m(2 * g as i64 - 2, g)?);
    checks.push(Check::residual("telescoping", &telescoped));

    let mut recursion_residual = K0Class::zero();
    for i in 0..=g - 2 {
        let lhs = reduce_sym(&xs[i].add(&xs[2 * g - 2 - i]), g);
        let coeff = &(&RationalFunctionL::l_pow(i) + &RationalFunctionL::l_pow(3 * g - 3 - 2 * i)) * &one_plus_l();
        let mut rhs = K0Class::term(Basis::Sym(i), coeff);
        rhs.add_term(Basis::Jac, rf(p_polynomial(i, g)?));
        recursion_residual = recursion_residual.add(&lhs.sub(&rhs));
    }
    checks.push(Check::residual("main-recursion", &recursion_residual));

    checks.push(Check::new("polynomial-sum", verify_p_sum(g)?, p_sum_closed_form(g).to_string()));

    let top_hi = flip_class(4 * g - 1, 2 * g - 1, g)?;
    let top_lo = flip_class(4 * g - 3, 2 * g - 2, g)?;
    let times = reduce_sym(&top_hi.sub(&top_lo.scale(&RationalFunctionL::l_pow(2))), g);
    checks.push(Check::new(
        "polynomial-vanishing",
        times.coeff(Basis::Jac).is_zero(),
        times.coeff(Basis::Jac).to_string(),
    ));

    let class = times.div(&one_plus_l()).expect("1+L is nonzero");
    checks.push(Check::new("quotient-polynomial", class.is_integral(), class.to_string()));
    checks.push(Check::residual("closed-form", &class.sub(&expected_moduli_class(g))));

    for d in [4 * g - 3, 4 * g - 1] {
        let top = reduce_sym(&flip_class(d, (d - 1) / 2, g)?, g);
        let fibre = class.scale(&proj_class((d + 1 - 2 * g) as i64));
        checks.push(Check::residual(&format!("class-comparison-d{d}"), &top.sub(&fibre)));
    }

    Ok(ModuliReport { genus: g, times_one_plus_l: times, class, checks })
}

/// The class of the moduli space; errors if any checkpoint fails.
pub fn moduli_class(g: usize) -> Result<K0Class, GrothendieckError> {
    let report = moduli_report(g)?;
    if let Some(bad) = report.checks.iter().find(|c| !c.status) {
        return Err(GrothendieckError::Checkpoint(format!("{}: {}", bad.name, bad.detail)));
    }
    Ok(report.class)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> RationalFunctionL {
        rf(Poly::from_i64(c))
    }

    #[test]
    fn base_of_the_picture() {
        for g in 2..5 {
            let d = 4 * g - 3;
            assert_eq!(flip_class(d, 0, g).unwrap(), K0Class::term(Basis::Sym(0), proj_class((d + g - 2) as i64)));
        }
    }

    #[test]
    fn first_flip_genus_two() {
        // L(1 − L³)(1 − L)/(1 − L)² = L + L² + L³
        assert_eq!(flip_difference(5, 1, 2), poly(&[0, 1, 1, 1]));
    }

    #[test]
    fn range_errors() {
        assert_eq!(flip_class(6, 0, 2), Err(GrothendieckError::BadDegree { d: 6, g: 2 }));
        assert_eq!(flip_class(5, 3, 2), Err(GrothendieckError::BadStep { i: 3, max: 2 }));
        assert_eq!(x_class(5, 2), Err(GrothendieckError::BadStep { i: 5, max: 2 }));
    }

    #[test]
    fn middle_examples() {
        assert_eq!(x_class(0, 2).unwrap(), K0Class::term(Basis::Sym(0), poly(&[1, 1])));
        assert_eq!(x_class(2, 3).unwrap(), K0Class::term(Basis::Sym(2), poly(&[0, 0, 1, 1])));
    }

    #[test]
    fn p_examples() {
        assert_eq!(p_polynomial(0, 2).unwrap(), Poly::from_i64(&[0, 0, 1, 1]));
        assert!(p_sum_closed_form(3).is_polynomial());
    }

    #[test]
    fn moduli_class_small_genus() {
        let two = moduli_class(2).unwrap();
        let mut e2 = K0Class::term(Basis::Sym(1), poly(&[0, 1]));
        e2.add_term(Basis::Sym(0), poly(&[1, 0, 0, 1]));
        assert_eq!(two, e2);
        let three = moduli_class(3).unwrap();
        assert_eq!(three.coeff(Basis::Sym(2)), poly(&[0, 0, 1]));
        assert_eq!(three.coeff(Basis::Sym(1)), poly(&[0, 1, 0, 0, 1]));
        assert_eq!(three.coeff(Basis::Sym(0)), poly(&[1, 0, 0, 0, 0, 0, 1]));
        assert!(three.coeff(Basis::Jac).is_zero());
    }
}
