//! Independent oracles shared by the integration targets.
#![allow(dead_code)]

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn pow(a: &[i64], e: usize) -> Vec<i64> {
    (0..e).fold(vec![1], |acc, _| mul(&acc, a))
}

/// Exact long division by a polynomial with constant term 1.
fn div_exact(mut num: Vec<i64>, den: &[i64]) -> Vec<i64> {
    let n = num.len() - den.len() + 1;
    let mut q = vec![0; n];
    for k in 0..n {
        let c = num[k];
        q[k] = c;
        for (j, d) in den.iter().enumerate() {
            num[k + j] -= c * d;
        }
    }
    assert!(num.iter().all(|&c| c == 0), "division not exact");
    q
}

/// `((1+t³)^{2g} − t^{2g}(1+t)^{2g}) / ((1−t²)(1−t⁴))`, trailing zeros dropped.
pub fn betti_oracle(g: usize) -> Vec<i64> {
    let a = pow(&[1, 0, 0, 1], 2 * g);
    let mut b = vec![0; 2 * g];
    b.extend(pow(&[1, 1], 2 * g));
    let len = a.len().max(b.len());
    let num: Vec<i64> = (0..len).map(|k| a.get(k).unwrap_or(&0) - b.get(k).unwrap_or(&0)).collect();
    let mut q = div_exact(num, &mul(&[1, 0, -1], &[1, 0, 0, 0, -1]));
    while q.last() == Some(&0) {
        q.pop();
    }
    q
}

/// Points of `y² = x⁵ − x` over 𝔽₃ and 𝔽₉ = 𝔽₃[i], counting one point at infinity.
pub fn oracle_counts() -> (u64, u64) {
    let sq3 = |a: i64| -> u64 {
        match a.rem_euclid(3) {
            0 => 1,
            1 => 2,
            _ => 0,
        }
    };
    let n1 = 1 + (0..3).map(|x: i64| sq3(x.pow(5) - x)).sum::<u64>();
    type F9 = (i64, i64);
    let m = |a: F9, b: F9| ((a.0 * b.0 - a.1 * b.1).rem_euclid(3), (a.0 * b.1 + a.1 * b.0).rem_euclid(3));
    let all: Vec<F9> = (0..9).map(|k| (k % 3, k / 3)).collect();
    let roots = |t: F9| all.iter().filter(|&&y| m(y, y) == t).count() as u64;
    let n2 = 1 + all
        .iter()
        .map(|&x| {
            let x5 = (0..4).fold(x, |acc, _| m(acc, x));
            roots(((x5.0 - x.0).rem_euclid(3), (x5.1 - x.1).rem_euclid(3)))
        })
        .sum::<u64>();
    (n1, n2)
}

/// Zeta numerator `1 + a₁t + a₂t² + q a₁t³ + q²t⁴` of a genus-2 curve from `#C(𝔽_q)` and `#C(𝔽_{q²})`.
pub fn oracle_numerator(q: i64, n1: i64, n2: i64) -> Vec<i64> {
    let s1 = q + 1 - n1;
    let s2 = q * q + 1 - n2;
    let a1 = -s1;
    let a2 = (s1 * s1 - s2) / 2;
    vec![1, a1, a2, q * a1, q * q]
}

pub fn fixture_path() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/g2_q3.json").to_string()
}
