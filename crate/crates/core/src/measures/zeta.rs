//! The functional equation `F(t) = L^g t^{2g} F(1/(Lt))` for zeta numerators,
//! over any coefficient ring that realizes `L`.

use std::ops::{Add, Mul, Sub};

/// With `F = Σ f_m t^m` of degree `2g`, checks `f_m = L^{m−g}·f_{2g−m}` for `m = g..2g`.
pub fn functional_equation_holds<T>(f: &[T], g: usize, l: &T, one: &T) -> bool
where
    T: Clone + PartialEq,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    if f.len() != 2 * g + 1 {
        return false;
    }
    let mut lp = one.clone();
    for m in g..=2 * g {
        if f[m] != &lp * &f[2 * g - m] {
            return false;
        }
        lp = &lp * l;
    }
    true
}

/// Multiply a truncated series `Σ a_n tⁿ` by `(1−t)(1−Lt) = 1 − (1+L)t + Lt²`,
/// returning the product up to the truncation order.
pub fn numerator_from_series<T>(series: &[T], l: &T) -> Vec<T>
where
    T: Clone,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    (0..series.len())
        .map(|n| {
            let mut c = series[n].clone();
            if n >= 1 {
                c = &(&c - &series[n - 1]) - &(l * &series[n - 1]);
            }
            if n >= 2 {
                c = &c + &(l * &series[n - 2]);
            }
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| c.into()).collect()
    }

    #[test]
    fn elliptic_control() {
        // 1 − a t + q t² satisfies the equation for any trace a
        let q = BigInt::from(5);
        assert!(functional_equation_holds(&ints(&[1, -3, 5]), 1, &q, &BigInt::from(1)));
        assert!(!functional_equation_holds(&ints(&[1, -3, 4]), 1, &q, &BigInt::from(1)));
        assert!(!functional_equation_holds(&ints(&[1, -3]), 1, &q, &BigInt::from(1)));
    }

    #[test]
    fn numerator_recovery() {
        // 1/((1−t)(1−2t)) = Σ (2^{n+1} − 1) tⁿ
        let series = ints(&[1, 3, 7, 15, 31]);
        assert_eq!(numerator_from_series(&series, &BigInt::from(2)), ints(&[1, 0, 0, 0, 0]));
    }
}
