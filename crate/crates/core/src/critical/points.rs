//! Explicit critical points from perfect matchings, and the conifold point.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::spectrum::expected_spectrum;
use super::CriticalError;
use crate::gaussian::GaussianRational;
use crate::graphs::{ColoredGraph, Matching};
use crate::laurent::LaurentPoly;
use crate::potential::{positivity_and_polytope, Coordinates, PotentialBundle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Real,
    Imaginary,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Real => "real",
            Mode::Imaginary => "imaginary",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriticalPoint {
    pub coordinates: BTreeMap<String, GaussianRational>,
    pub mode: Mode,
    /// Edge ids of the flipped matching edges, sorted.
    pub flips: Vec<String>,
}

impl CriticalPoint {
    /// Coordinates in the order of `vars`.
    pub fn values(&self, vars: &[String]) -> Result<Vec<GaussianRational>, CriticalError> {
        vars.iter()
            .map(|v| self.coordinates.get(v).cloned().ok_or_else(|| CriticalError::MissingCoordinate(v.clone())))
            .collect()
    }
}

/// Matched edges get `±1` (real) or `±i` (imaginary), negative exactly on
/// `flips`; every other edge gets `1` or `i` respectively.
pub fn candidate_point(
    g: &ColoredGraph,
    m: &Matching,
    flips: &[&str],
    mode: Mode,
) -> Result<CriticalPoint, CriticalError> {
    if !m.is_perfect_for(g) {
        return Err(CriticalError::NotPerfectMatching);
    }
    let colored = g.colored_vertices().len();
    if colored > 1 {
        return Err(CriticalError::TooManyColored(colored));
    }
    let matched = m.ids(g);
    for f in flips {
        if !matched.iter().any(|id| id == f) {
            return Err(CriticalError::FlipOutsideMatching(f.to_string()));
        }
    }
    let unit = match mode {
        Mode::Real => GaussianRational::one(),
        Mode::Imaginary => GaussianRational::i(),
    };
    let coordinates = g
        .edge_ids()
        .into_iter()
        .map(|id| {
            let c = if flips.contains(&id.as_str()) { -unit.clone() } else { unit.clone() };
            (id, c)
        })
        .collect();
    let mut flips: Vec<String> = flips.iter().map(|s| s.to_string()).collect();
    flips.sort();
    flips.dedup();
    Ok(CriticalPoint { coordinates, mode, flips })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriticalReport {
    pub descriptor: String,
    pub value: GaussianRational,
    /// Exact modulus when it is rational.
    #[serde(serialize_with = "ratio_string")]
    pub modulus: Option<BigRational>,
    pub gradient_certified: bool,
    pub hessian_kernel_dim: Option<usize>,
    /// Per string: signs `(u_{i−1}, u_i, v_{i−1}, v_i)` of a sign component.
    pub sign_matrix: Option<Vec<[i8; 4]>>,
}

fn ratio_string<S: serde::Serializer>(v: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}

/// Evaluate the logarithmic gradient and the value exactly at `p`.
pub fn certify_critical(pb: &PotentialBundle, p: &CriticalPoint) -> Result<CriticalReport, CriticalError> {
    let point = p.values(pb.vars())?;
    certify_at(pb, &point, describe(p))
}

/// As [`certify_critical`], also recording the exact Hessian kernel dimension.
pub fn certify_with_hessian(pb: &PotentialBundle, p: &CriticalPoint) -> Result<CriticalReport, CriticalError> {
    let point = p.values(pb.vars())?;
    let mut r = certify_at(pb, &point, describe(p))?;
    r.hessian_kernel_dim = Some(pb.potential.hessian_log(&point)?.kernel_dim());
    Ok(r)
}

fn describe(p: &CriticalPoint) -> String {
    format!("{} flips={{{}}}", p.mode, p.flips.join(","))
}

/// Predicted value at [`candidate_point`]. Real points depend only on the
/// number of flips; for imaginary points a flip on the matched edge at the
/// colored vertex leaves the value unchanged, so only the other flips count.
pub fn predicted_value(g: &ColoredGraph, flips: &[&str], mode: Mode) -> Result<GaussianRational, CriticalError> {
    let colored = g.colored_vertices();
    let mut j = 0;
    for f in flips {
        let e = &g.edges()[g.edge_index(f)?];
        if mode == Mode::Real || !e.ends.iter().any(|v| colored.contains(v)) {
            j += 1;
        }
    }
    Ok(matching_value(g.genus(), j, mode))
}

pub(crate) fn certify_at(
    pb: &PotentialBundle,
    point: &[GaussianRational],
    descriptor: String,
) -> Result<CriticalReport, CriticalError> {
    if point.iter().any(Zero::is_zero) {
        return Err(CriticalError::ZeroCoordinate);
    }
    let (grad, value) = match on_units(&pb.potential, point) {
        Some(gv) => gv,
        None => (pb.potential.log_gradient(point)?, pb.potential.eval(point)?),
    };
    Ok(CriticalReport {
        descriptor,
        modulus: value.modulus(),
        value,
        gradient_certified: grad.iter().all(Zero::is_zero),
        hessian_kernel_dim: None,
        sign_matrix: None,
    })
}

/// `i^k` for `k` taken mod 4, as a Gaussian integer.
fn unit_power(k: i64) -> (i64, i64) {
    [(1, 0), (0, 1), (-1, 0), (0, -1)][k.rem_euclid(4) as usize]
}

/// The power of `i` a coordinate equals, when it is one of `±1, ±i`.
fn unit_exponent(x: &GaussianRational) -> Option<i64> {
    (0..4).find(|&k| {
        let (r, i) = unit_power(k);
        x.re == BigRational::from_integer(r.into()) && x.im == BigRational::from_integer(i.into())
    })
}

/// Exact gradient and value in machine Gaussian integers, for points in
/// `{±1, ±i}ⁿ` and Gaussian-integer coefficients; `None` otherwise or on overflow.
fn on_units(f: &LaurentPoly, point: &[GaussianRational]) -> Option<(Vec<GaussianRational>, GaussianRational)> {
    let logs = point.iter().map(unit_exponent).collect::<Option<Vec<i64>>>()?;
    let mut grad = vec![(0i64, 0i64); point.len()];
    let mut value = (0i64, 0i64);
    for (e, c) in f.terms() {
        if !c.re.is_integer() || !c.im.is_integer() {
            return None;
        }
        let (cr, ci) = (c.re.to_integer().to_i64()?, c.im.to_integer().to_i64()?);
        let k: i64 = e.0.iter().zip(&logs).map(|(a, b)| a * b).sum();
        let (ur, ui) = unit_power(k);
        let m = (cr.checked_mul(ur)?.checked_sub(ci.checked_mul(ui)?)?, cr.checked_mul(ui)?.checked_add(ci.checked_mul(ur)?)?);
        value = (value.0.checked_add(m.0)?, value.1.checked_add(m.1)?);
        for (slot, &a) in grad.iter_mut().zip(&e.0) {
            if a != 0 {
                *slot = (slot.0.checked_add(m.0.checked_mul(a)?)?, slot.1.checked_add(m.1.checked_mul(a)?)?);
            }
        }
    }
    let lift = |(r, i): (i64, i64)| GaussianRational::from_ints(r, i);
    Some((grad.into_iter().map(lift).collect(), lift(value)))
}

/// The `2^{g−1}` perfect matchings of the necklace taking one of `x_i, y_i` in every bead.
pub fn bead_matchings(g: &ColoredGraph) -> Vec<Matching> {
    let mut beads: Vec<(usize, usize)> = Vec::new();
    for (k, e) in g.edges().iter().enumerate() {
        if e.id.starts_with('x') {
            if let Ok(y) = g.edge_index(&format!("y{}", &e.id[1..])) {
                beads.push((k, y));
            }
        }
    }
    (0..1u64 << beads.len())
        .map(|mask| {
            let mut v: Vec<usize> =
                beads.iter().enumerate().map(|(b, &(x, y))| if mask >> b & 1 == 0 { x } else { y }).collect();
            v.sort();
            Matching(v)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConifoldReport {
    pub value: GaussianRational,
    pub gradient_vanishes: bool,
    pub positive_coefficients: bool,
    pub origin_in_newton_polytope: bool,
    /// `T_con` equals the largest modulus in the expected spectrum.
    pub matches_spectrum_max: bool,
    /// Exactly `±T` attain the largest modulus.
    pub property_o_shape: bool,
}

impl ConifoldReport {
    pub fn passed(&self) -> bool {
        self.gradient_vanishes && self.matches_spectrum_max && self.property_o_shape
    }
}

/// The all-ones point: checks the framework preconditions, criticality, the
/// value `4·#V = 8g−8` and its relation to the expected spectrum.
pub fn conifold(pb: &PotentialBundle) -> Result<ConifoldReport, CriticalError> {
    if pb.coordinates != Coordinates::EdgeVars {
        return Err(CriticalError::WrongCoordinates);
    }
    let (positive, origin) = positivity_and_polytope(&pb.potential);
    if !positive || !origin {
        return Err(CriticalError::ConifoldPrecondition { positive, origin });
    }
    let ones = vec![GaussianRational::one(); pb.vars().len()];
    let grad = pb.potential.log_gradient(&ones)?;
    let value = pb.potential.eval(&ones)?;
    let g = pb.genus();
    let spectrum = expected_spectrum(g)?;
    let t_max = spectrum.max_modulus();
    let t_con = GaussianRational::from_int(8 * (g as i64 - 1));
    let top: Vec<&GaussianRational> =
        spectrum.entries.iter().filter(|e| e.modulus == t_max).map(|e| &e.value).collect();
    let shape = top.len() == 2 && top.contains(&&t_con) && top.contains(&&(-t_con.clone()));
    Ok(ConifoldReport {
        matches_spectrum_max: value == GaussianRational::from_int(t_max as i64) && value == t_con,
        value,
        gradient_vanishes: grad.iter().all(Zero::is_zero),
        positive_coefficients: positive,
        origin_in_newton_polytope: origin,
        property_o_shape: shape,
    })
}

/// The real and imaginary points with `j` flips on the first `j` edges of `m`.
pub fn flipped_points(g: &ColoredGraph, m: &Matching, mode: Mode) -> Result<Vec<CriticalPoint>, CriticalError> {
    let ids = m.ids(g);
    (0..=ids.len())
        .map(|j| {
            let flips: Vec<&str> = ids[..j].iter().map(String::as_str).collect();
            candidate_point(g, m, &flips, mode)
        })
        .collect()
}

/// `8g−8−16j` (real) or `−(8g−16−16j)·i` (imaginary).
pub fn matching_value(g: usize, j: usize, mode: Mode) -> GaussianRational {
    let (g, j) = (g as i64, j as i64);
    match mode {
        Mode::Real => GaussianRational::from_int(8 * g - 8 - 16 * j),
        Mode::Imaginary => GaussianRational::from_ints(0, -(8 * g - 16 - 16 * j)),
    }
}
