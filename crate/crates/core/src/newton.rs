//! Exact Newton-polytope membership for the origin.
//!
//! Decides whether `0 ∈ conv(supp f)` by a phase-one simplex over ℚ with
//! Bland's rule: find `λ ≥ 0` with `Σ λ_j = 1` and `Σ λ_j m_j = 0`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;

/// Convex weights on the support exhibiting the origin, if it lies in the Newton polytope.
pub fn origin_certificate(f: &LaurentPoly) -> Option<Vec<BigRational>> {
    let support: Vec<Vec<i64>> = f.terms().map(|(e, _)| e.0.clone()).collect();
    if support.is_empty() {
        return None;
    }
    let n = f.vars().len();
    let cols = support.len();
    let rows = n + 1;
    // tableau columns: cols λ's, rows artificials, rhs
    let width = cols + rows + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows + 1);
    for r in 0..rows {
        let mut row = vec![BigRational::zero(); width];
        for (j, m) in support.iter().enumerate() {
            row[j] = if r < n {
                BigRational::from_integer(m[r].into())
            } else {
                BigRational::one()
            };
        }
        let rhs = if r < n { BigRational::zero() } else { BigRational::one() };
        // keep rhs ≥ 0 (all are already)
        row[cols + r] = BigRational::one();
        row[width - 1] = rhs;
        t.push(row);
    }
    // objective: minimise Σ artificials ⇒ reduced cost row = −Σ rows on non-artificial columns
    let mut obj = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..cols {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (cols..cols + rows).collect();

    loop {
        let obj = &t[rows];
        // Bland: lowest-index column with negative reduced cost
        let Some(enter) = (0..cols + rows).find(|&j| obj[j].is_negative()) else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for (r, row) in t.iter().take(rows).enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => ratio < *lratio || (ratio == *lratio && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let (pr, _) = leave?; // unbounded cannot happen in phase one
        let piv = t[pr][enter].clone();
        for v in t[pr].iter_mut() {
            *v /= &piv;
        }
        let prow = t[pr].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r == pr || row[enter].is_zero() {
                continue;
            }
            let factor = row[enter].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                *v -= &factor * p;
            }
        }
        basis[pr] = enter;
    }
    if !t[rows][width - 1].is_zero() {
        return None;
    }
    let mut lambda = vec![BigRational::zero(); cols];
    for (r, &b) in basis.iter().enumerate() {
        if b < cols {
            lambda[b] = t[r][width - 1].clone();
        }
    }
    Some(lambda)
}

pub fn contains_origin(f: &LaurentPoly) -> bool {
    origin_certificate(f).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::var_names;

    #[test]
    fn symmetric_support_contains_origin() {
        let v = var_names(&["x", "y"]);
        let f = LaurentPoly::parse(&v, "x + x^-1 + y + y^-1").unwrap();
        let lam = origin_certificate(&f).unwrap();
        let total: BigRational = lam.iter().sum();
        assert!(total.is_one());
        // certificate actually balances the exponents
        let mut s = [BigRational::zero(), BigRational::zero()];
        for ((e, _), l) in f.terms().zip(&lam) {
            for k in 0..2 {
                s[k] += l * BigRational::from_integer(e.0[k].into());
            }
        }
        assert!(s.iter().all(Zero::is_zero));
    }

    #[test]
    fn one_sided_support_excludes_origin() {
        let v = var_names(&["x", "y"]);
        assert!(!contains_origin(&LaurentPoly::parse(&v, "x + x*y + x*y^-1").unwrap()));
        assert!(contains_origin(&LaurentPoly::parse(&v, "1 + x").unwrap()));
        assert!(!contains_origin(&LaurentPoly::zero(&v)));
    }
}
