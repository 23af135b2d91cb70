//! Critical components of the necklace potential in `(u, v, z)` coordinates.
//!
//! On the branch `u_i, v_i ∈ {±1}` each string potential becomes
//! `A_i z_i + B_i z_i⁻¹` with `A_i, B_i ∈ {−4, 0, 4}`. A string whose two
//! coefficients are not both zero or both nonzero admits no solution; otherwise
//! `z_i` is free (`A = B = 0`) or satisfies `z_i² = B_i / A_i`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::points::{certify_at, CriticalReport};
use super::spectrum::expected_spectrum;
use super::CriticalError;
use crate::gaussian::GaussianRational;
use crate::laurent::{ExponentVector, LaurentPoly};
use crate::matrix::ExactMatrix;
use crate::potential::necklace_uvz;

/// Largest genus for the exhaustive sign enumeration (`4^{g−1}` sign patterns).
pub const MAX_SIGN_GENUS: usize = 8;
/// Largest genus for the exact Hessian proxy.
pub const MAX_HESSIAN_GENUS: usize = 6;

/// A monomially parametrised family `x_j = c_j · t^{a_j}` in the potential's variables.
#[derive(Debug, Clone, PartialEq)]
pub struct Family {
    pub description: String,
    pub params: Vec<String>,
    pub coords: Vec<(GaussianRational, Vec<i64>)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyCheck {
    pub description: String,
    pub gradient_vanishes: bool,
    /// The constant value of the potential on the family, if constant.
    pub value: Option<GaussianRational>,
    pub dimension: usize,
}

impl Family {
    fn constant(description: String, coords: Vec<GaussianRational>) -> Self {
        Family { description, params: Vec::new(), coords: coords.into_iter().map(|c| (c, Vec::new())).collect() }
    }

    /// Rank of the exponent matrix: the dimension of the image torus orbit.
    pub fn dimension(&self) -> usize {
        if self.params.is_empty() {
            return 0;
        }
        ExactMatrix::from_i64(&self.coords.iter().map(|(_, a)| a.clone()).collect::<Vec<_>>()).rank()
    }

    /// Pull a Laurent polynomial back along the family.
    pub fn pull_back(&self, f: &LaurentPoly) -> Result<LaurentPoly, CriticalError> {
        let k = self.params.len();
        let mut terms = Vec::with_capacity(f.num_terms());
        for (e, c) in f.terms() {
            let mut coeff = c.clone();
            let mut exps = vec![0i64; k];
            for (j, &ej) in e.0.iter().enumerate() {
                if ej == 0 {
                    continue;
                }
                let (cj, aj) = &self.coords[j];
                coeff = &coeff * &cj.pow(ej).ok_or(CriticalError::ZeroCoordinate)?;
                for (x, a) in exps.iter_mut().zip(aj) {
                    *x += ej * a;
                }
            }
            terms.push((ExponentVector(exps), coeff));
        }
        Ok(LaurentPoly::from_terms(&self.params, terms))
    }

    /// Gradient vanishing and constancy of the value, checked identically in the parameters.
    pub fn verify(&self, f: &LaurentPoly) -> Result<FamilyCheck, CriticalError> {
        let mut gradient_vanishes = true;
        for j in 0..f.vars().len() {
            if !self.pull_back(&f.log_derivative_at(j))?.is_zero() {
                gradient_vanishes = false;
                break;
            }
        }
        let w = self.pull_back(f)?;
        let zero = ExponentVector::zero(self.params.len());
        let value = w.terms().all(|(e, _)| *e == zero).then(|| w.coeff(&zero));
        Ok(FamilyCheck { description: self.description.clone(), gradient_vanishes, value, dimension: self.dimension() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ZChoice {
    Free,
    Fixed(i8, bool),
}

impl ZChoice {
    /// `Fixed(s, false) = s`, `Fixed(s, true) = s·i`.
    fn value(self) -> Option<GaussianRational> {
        match self {
            ZChoice::Free => None,
            ZChoice::Fixed(s, false) => Some(GaussianRational::from_int(s as i64)),
            ZChoice::Fixed(s, true) => Some(GaussianRational::from_ints(0, s as i64)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignComponent {
    pub u: Vec<i8>,
    pub v: Vec<i8>,
    pub z: Vec<ZChoice>,
    pub value: GaussianRational,
    pub dimension: usize,
    /// Per string: `(u_{i−1}, u_i, v_{i−1}, v_i)`, or `(u_1, u_{g−1}, v_1, v_{g−1})` for the first.
    pub sign_matrix: Vec<[i8; 4]>,
}

impl SignComponent {
    /// The component as a family in `(u, v, z)` order, free `z_i` as parameters.
    pub fn family(&self) -> Family {
        let free: Vec<usize> = (0..self.z.len()).filter(|&i| self.z[i] == ZChoice::Free).collect();
        let params: Vec<String> = free.iter().map(|i| format!("t{}", i + 1)).collect();
        let mut coords = Vec::with_capacity(3 * self.z.len());
        for i in 0..self.z.len() {
            let zero = vec![0; params.len()];
            coords.push((GaussianRational::from_int(self.u[i] as i64), zero.clone()));
            coords.push((GaussianRational::from_int(self.v[i] as i64), zero.clone()));
            match self.z[i].value() {
                Some(c) => coords.push((c, zero)),
                None => {
                    let mut a = zero;
                    a[free.iter().position(|&f| f == i).unwrap()] = 1;
                    coords.push((GaussianRational::one(), a));
                }
            }
        }
        Family { description: format!("signs u={:?} v={:?} z={:?}", self.u, self.v, self.z), params, coords }
    }

    /// A point on the component, free `z_i` set to the integer `2 + i`.
    pub fn generic_point(&self) -> Vec<GaussianRational> {
        let mut p = Vec::with_capacity(3 * self.z.len());
        for i in 0..self.z.len() {
            p.push(GaussianRational::from_int(self.u[i] as i64));
            p.push(GaussianRational::from_int(self.v[i] as i64));
            p.push(self.z[i].value().unwrap_or_else(|| GaussianRational::from_int(2 + i as i64)));
        }
        p
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignEnumeration {
    pub genus: usize,
    pub components: Vec<SignComponent>,
    /// Sign patterns with some string of odd parity.
    pub rejected: usize,
}

impl SignEnumeration {
    /// Largest dimension attained at each value.
    pub fn max_dimension_by_value(&self) -> BTreeMap<String, (GaussianRational, usize)> {
        let mut out: BTreeMap<String, (GaussianRational, usize)> = BTreeMap::new();
        for c in &self.components {
            let e = out.entry(c.value.to_string()).or_insert((c.value.clone(), 0));
            e.1 = e.1.max(c.dimension);
        }
        out
    }

    /// Whether the aggregated `(value, dimension)` pairs coincide with the expected spectrum.
    pub fn matches_expected(&self) -> Result<bool, CriticalError> {
        let spectrum = expected_spectrum(self.genus)?;
        let got = self.max_dimension_by_value();
        Ok(got.len() == spectrum.entries.len()
            && spectrum.entries.iter().all(|e| got.get(&e.value.to_string()).map(|x| x.1) == Some(e.dimension)))
    }

    pub fn reports(&self) -> Vec<CriticalReport> {
        self.components
            .iter()
            .map(|c| CriticalReport {
                descriptor: format!("u={:?} v={:?} z={:?}", c.u, c.v, c.z),
                value: c.value.clone(),
                modulus: c.value.modulus(),
                gradient_certified: true,
                hessian_kernel_dim: None,
                sign_matrix: Some(c.sign_matrix.clone()),
            })
            .collect()
    }
}

/// `(a1, a2, b1, b2)` for string `i` (1-based): the `z_i` coefficient is
/// `J⁺(a1) + J⁺(a2)`, the `z_i⁻¹` coefficient `J⁺(b1) + J⁺(b2)`.
fn string_pairs(g: usize, i: usize) -> [(char, usize); 4] {
    if i == 1 {
        [('u', 1), ('v', g - 1), ('v', 1), ('u', g - 1)]
    } else {
        [('u', i - 1), ('u', i), ('v', i - 1), ('v', i)]
    }
}

/// Every admissible sign pattern on `u_i, v_i ∈ {±1}` with all resulting `z` choices.
pub fn enumerate_sign_components(g: usize) -> Result<SignEnumeration, CriticalError> {
    if !(2..=MAX_SIGN_GENUS).contains(&g) {
        return Err(CriticalError::GenusOutOfRange { g, min: 2, max: MAX_SIGN_GENUS });
    }
    let n = g - 1;
    let mut components = Vec::new();
    let mut rejected = 0;
    for mask in 0u32..1 << (2 * n) {
        let sign = |b: u32| if mask >> b & 1 == 0 { 1i8 } else { -1 };
        let u: Vec<i8> = (0..n as u32).map(sign).collect();
        let v: Vec<i8> = (n as u32..2 * n as u32).map(sign).collect();
        let s = |(c, i): (char, usize)| if c == 'u' { u[i - 1] } else { v[i - 1] };
        let mut per_string: Vec<Vec<ZChoice>> = Vec::with_capacity(n);
        let mut coeffs = Vec::with_capacity(n);
        let mut matrices = Vec::with_capacity(n);
        let mut admissible = true;
        for i in 1..=n {
            let [a1, a2, b1, b2] = string_pairs(g, i);
            let m = [s(a1), s(a2), s(b1), s(b2)];
            let a = 2 * (m[0] + m[1]) as i64;
            let b = 2 * (m[2] + m[3]) as i64;
            matrices.push(m);
            coeffs.push((a, b));
            per_string.push(match (a == 0, b == 0) {
                (true, true) => vec![ZChoice::Free],
                (false, false) => {
                    let imaginary = a != b;
                    vec![ZChoice::Fixed(1, imaginary), ZChoice::Fixed(-1, imaginary)]
                }
                _ => {
                    admissible = false;
                    break;
                }
            });
        }
        if !admissible {
            rejected += 1;
            continue;
        }
        for choice in cartesian(&per_string) {
            let mut value = GaussianRational::zero();
            for (&(a, b), z) in coeffs.iter().zip(&choice) {
                if let Some(zv) = z.value() {
                    let inv = zv.inv().expect("unit");
                    value += &(&zv * &GaussianRational::from_int(a));
                    value += &(&inv * &GaussianRational::from_int(b));
                }
            }
            let dimension = choice.iter().filter(|z| **z == ZChoice::Free).count();
            components.push(SignComponent {
                u: u.clone(),
                v: v.clone(),
                z: choice,
                value,
                dimension,
                sign_matrix: matrices.clone(),
            });
        }
    }
    Ok(SignEnumeration { genus: g, components, rejected })
}

fn cartesian(lists: &[Vec<ZChoice>]) -> Vec<Vec<ZChoice>> {
    lists.iter().fold(vec![Vec::new()], |acc, opts| {
        acc.into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |o| {
                    let mut p = prefix.clone();
                    p.push(*o);
                    p
                })
            })
            .collect()
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HessianProxy {
    pub genus: usize,
    pub index: usize,
    pub value: GaussianRational,
    pub expected_dimension: usize,
    pub kernel_dimension: usize,
    pub gradient_certified: bool,
}

/// Kernel dimension of the logarithmic Hessian at a top-dimensional sign
/// component with the value of spectrum index `k`, free `z` set generically.
pub fn hessian_component_dim(g: usize, k: usize) -> Result<HessianProxy, CriticalError> {
    if !(2..=MAX_HESSIAN_GENUS).contains(&g) {
        return Err(CriticalError::GenusOutOfRange { g, min: 2, max: MAX_HESSIAN_GENUS });
    }
    let spectrum = expected_spectrum(g)?;
    let entry = spectrum.entries.get(k).ok_or(CriticalError::IndexOutOfRange { index: k, max: 2 * g - 2 })?;
    let comps = enumerate_sign_components(g)?;
    let best = comps
        .components
        .iter()
        .filter(|c| c.value == entry.value)
        .max_by_key(|c| c.dimension)
        .ok_or_else(|| CriticalError::NoComponent(entry.value.to_string()))?;
    let pb = necklace_uvz(g)?;
    let point = best.generic_point();
    let report = certify_at(&pb, &point, String::new())?;
    let kernel = pb.potential.hessian_log(&point)?.kernel_dim();
    Ok(HessianProxy {
        genus: g,
        index: k,
        value: entry.value.clone(),
        expected_dimension: entry.dimension,
        kernel_dimension: kernel,
        gradient_certified: report.gradient_certified,
    })
}

fn gr(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

/// Exact case split of the genus-2 system `J⁺(z)J⁻(u) = J⁺(z)J⁻(v) = J⁻(z)(J⁺(u)+J⁺(v)) = 0`
/// and, for genus 3, the sign components together with the `u_1² ≠ 1` family
/// `z_1 = −z_2 = ∓1`, `u_1 = v_1`, `u_2 = v_2`.
pub fn base_case_families(g: usize) -> Result<Vec<Family>, CriticalError> {
    let t = |c: GaussianRational, a: i64| (c, vec![a]);
    let t2 = |c: GaussianRational, a: [i64; 2]| (c, a.to_vec());
    let params = |k: usize| (1..=k).map(|j| format!("t{j}")).collect::<Vec<_>>();
    let mut out = Vec::new();
    match g {
        2 => {
            // J⁺(z) = 0: z = ±i, then J⁺(u) + J⁺(v) = 0, i.e. v = −u or v = −1/u
            for zs in [1, -1] {
                for inv in [1, -1] {
                    out.push(Family {
                        description: format!("z={}i, v=-u^{inv}", zs),
                        params: params(1),
                        coords: vec![t(gr(1), 1), t(gr(-1), inv), t(GaussianRational::from_ints(0, zs), 0)],
                    });
                }
            }
            // J⁺(z) ≠ 0: u, v = ±1; then z = ±1 when u = v, z free when u = −v
            for us in [1, -1] {
                for vs in [1, -1] {
                    if us == vs {
                        for zs in [1, -1] {
                            out.push(Family::constant(format!("u={us} v={vs} z={zs}"), vec![gr(us), gr(vs), gr(zs)]));
                        }
                    } else {
                        out.push(Family {
                            description: format!("u={us} v={vs} z free"),
                            params: params(1),
                            coords: vec![t(gr(us), 0), t(gr(vs), 0), t(gr(1), 1)],
                        });
                    }
                }
            }
        }
        3 => {
            out.extend(enumerate_sign_components(3)?.components.iter().map(SignComponent::family));
            for zs in [1, -1] {
                out.push(Family {
                    description: format!("z1={} z2={zs}, u1=v1, u2=v2", -zs),
                    params: params(2),
                    coords: vec![
                        t2(gr(1), [1, 0]),
                        t2(gr(1), [1, 0]),
                        t2(gr(-zs), [0, 0]),
                        t2(gr(1), [0, 1]),
                        t2(gr(1), [0, 1]),
                        t2(gr(zs), [0, 0]),
                    ],
                });
            }
        }
        _ => return Err(CriticalError::GenusOutOfRange { g, min: 2, max: 3 }),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_components() {
        let e = enumerate_sign_components(2).unwrap();
        assert!(e.matches_expected().unwrap());
        let dims = e.max_dimension_by_value();
        assert_eq!(dims["8"].1, 0);
        assert_eq!(dims["-8"].1, 0);
        assert_eq!(dims["0"].1, 1);
    }

    #[test]
    fn odd_parity_is_rejected() {
        let e = enumerate_sign_components(3).unwrap();
        assert!(e.rejected > 0);
        for c in &e.components {
            for m in &c.sign_matrix {
                assert_eq!(m.iter().map(|&s| s as i64).product::<i64>(), 1);
            }
        }
    }

    #[test]
    fn genus_four_zero_value() {
        let e = enumerate_sign_components(4).unwrap();
        assert_eq!(e.max_dimension_by_value()["0"].1, 3);
    }

    #[test]
    fn hessian_examples() {
        assert_eq!(hessian_component_dim(2, 0).unwrap().kernel_dimension, 0);
        assert_eq!(hessian_component_dim(2, 1).unwrap().kernel_dimension, 1);
        assert_eq!(hessian_component_dim(3, 2).unwrap().kernel_dimension, 2);
    }

    #[test]
    fn base_case_families_are_critical() {
        for g in [2, 3] {
            let pb = necklace_uvz(g).unwrap();
            for fam in base_case_families(g).unwrap() {
                let c = fam.verify(&pb.potential).unwrap();
                assert!(c.gradient_vanishes, "{}", c.description);
                assert!(c.value.is_some(), "{}", c.description);
            }
        }
    }
}
