//! Small finite fields `𝔽_{p^n}` by full multiplication tables.
//!
//! Elements are encoded as integers `Σ d_j p^j` whose base-`p` digits are the
//! coefficients of a polynomial in a fixed generator `ω`, reduced modulo the
//! first monic irreducible polynomial of degree `n` in the order of that same
//! encoding. For `𝔽_9` this gives `ω² = −1`.

use super::MeasureError;

/// Largest field order handled by tables.
pub const MAX_ORDER: u32 = 6561;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    n: u32,
    order: u32,
    /// Low-to-high coefficients of the monic modulus, without the leading 1.
    modulus: Vec<u32>,
    mul: Vec<u32>,
}

/// `Some((p, n))` when `q = pⁿ` for a prime `p`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut n = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        n += 1;
    }
    (r == 1).then_some((p, n))
}

fn digits(mut x: u32, p: u32, n: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of a monic-or-not polynomial over `𝔽_p` modulo a monic divisor.
fn poly_rem_mod_p(a: &[u32], monic: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let d = monic.len() - 1;
    while r.len() > d {
        let c = *r.last().unwrap();
        let k = r.len() - 1 - d;
        for (j, &m) in monic.iter().enumerate() {
            r[k + j] = (r[k + j] + p - (c * m) % p) % p;
        }
        r.pop();
    }
    r
}

fn is_irreducible(monic: &[u32], p: u32) -> bool {
    let n = monic.len() - 1;
    for d in 1..=n / 2 {
        for code in 0..p.pow(d as u32) {
            let mut cand = digits(code, p, d as u32);
            cand.push(1);
            if poly_rem_mod_p(monic, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self, MeasureError> {
        let (p, n) = prime_power(q).ok_or(MeasureError::UnsupportedField(q))?;
        if q > MAX_ORDER {
            return Err(MeasureError::UnsupportedField(q));
        }
        let modulus = if n == 1 {
            vec![0]
        } else {
            (0..q)
                .map(|code| digits(code, p, n))
                .find(|low| {
                    let mut m = low.clone();
                    m.push(1);
                    is_irreducible(&m, p)
                })
                .expect("an irreducible polynomial exists in every degree")
        };
        let mut f = Self { p, n, order: q, modulus, mul: Vec::new() };
        let mut table = vec![0; (q * q) as usize];
        for a in 0..q {
            for b in 0..=a {
                let v = f.slow_mul(a, b);
                table[(a * q + b) as usize] = v;
                table[(b * q + a) as usize] = v;
            }
        }
        f.mul = table;
        Ok(f)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        if self.n == 1 {
            return a * b % self.p;
        }
        let (da, db) = (digits(a, self.p, self.n), digits(b, self.p, self.n));
        let mut prod = vec![0u32; (2 * self.n - 1) as usize];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut monic = self.modulus.clone();
        monic.push(1);
        let mut r = poly_rem_mod_p(&prod, &monic, self.p);
        r.resize(self.n as usize, 0);
        undigits(&r, self.p)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (digits(a, self.p, self.n), digits(b, self.p, self.n));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        undigits(&s, self.p)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let d: Vec<u32> = digits(a, self.p, self.n).iter().map(|x| (self.p - x) % self.p).collect();
        undigits(&d, self.p)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.order + b) as usize]
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.pow(a, self.order as u64 - 2))
    }

    /// Quadratic character: 0, 1 or −1. Needs odd characteristic.
    pub fn chi(&self, a: u32) -> i64 {
        match self.pow(a, (self.order as u64 - 1) / 2) {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }

    /// The image of the integer `k` under `ℤ → 𝔽`.
    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.p as i64) as u32
    }

    /// Evaluate a polynomial with coefficients in this field.
    pub fn eval(&self, coeffs: &[u32], x: u32) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Embedding of the subfield of order `small.order()` sending its generator
    /// to a root of its defining polynomial. Elements of `small` are mapped
    /// through the returned table.
    pub fn embedding_of(&self, small: &FiniteField) -> Result<Vec<u32>, MeasureError> {
        if small.p != self.p || self.n % small.n != 0 {
            return Err(MeasureError::UnsupportedField(small.order));
        }
        let generator = if small.n == 1 {
            0
        } else {
            let mut monic: Vec<u32> = small.modulus.clone();
            monic.push(1);
            self.elements()
                .find(|&w| self.eval(&monic, w) == 0)
                .ok_or(MeasureError::UnsupportedField(small.order))?
        };
        Ok(small
            .elements()
            .map(|x| {
                let d = digits(x, small.p, small.n);
                let as_field: Vec<u32> = d.iter().map(|&c| self.from_int(c as i64)).collect();
                self.eval(&as_field, generator)
            })
            .collect())
    }

    /// Remainder of polynomial division over this field (coefficients low to high).
    fn poly_rem(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let b = trim(b.to_vec());
        let lead_inv = self.inv(*b.last().expect("nonzero divisor")).unwrap();
        while r.len() >= b.len() && !r.is_empty() {
            let c = self.mul(*r.last().unwrap(), lead_inv);
            let k = r.len() - b.len();
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = self.sub(r[k + j], self.mul(c, bj));
            }
            r = trim(r);
        }
        r
    }

    /// Degree of `gcd(a, b)`; `a` and `b` must not both be zero.
    pub fn gcd_degree(&self, a: &[u32], b: &[u32]) -> usize {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while !y.is_empty() {
            let r = self.poly_rem(&x, &y);
            x = y;
            y = r;
        }
        x.len().saturating_sub(1)
    }

    pub fn derivative(&self, a: &[u32]) -> Vec<u32> {
        a.iter().enumerate().skip(1).map(|(k, &c)| self.mul(self.from_int(k as i64), c)).collect()
    }
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for q in [3, 5, 7, 9, 25, 81] {
            let f = FiniteField::new(q).unwrap();
            for a in 1..q {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
            }
            // multiplicative group is cyclic of order q−1: a^{q−1} = 1
            assert!((1..q).all(|a| f.pow(a, q as u64 - 1) == 1));
            let squares = (1..q).filter(|&a| f.chi(a) == 1).count();
            assert_eq!(squares as u32, (q - 1) / 2);
        }
        assert!(FiniteField::new(6).is_err());
    }

    #[test]
    fn nine_has_square_root_of_minus_one() {
        let f = FiniteField::new(9).unwrap();
        // ω is encoded as 3
        assert_eq!(f.mul(3, 3), f.from_int(-1));
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let small = FiniteField::new(9).unwrap();
        let big = FiniteField::new(81).unwrap();
        let e = big.embedding_of(&small).unwrap();
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(e[small.mul(a, b) as usize], big.mul(e[a as usize], e[b as usize]));
                assert_eq!(e[small.add(a, b) as usize], big.add(e[a as usize], e[b as usize]));
            }
        }
    }

    #[test]
    fn gcd_detects_repeated_roots() {
        let f = FiniteField::new(3).unwrap();
        // x²  and its derivative 2x share x
        assert_eq!(f.gcd_degree(&[0, 0, 1], &f.derivative(&[0, 0, 1])), 1);
        // x³ − x is squarefree
        let g = [0, 2, 0, 1];
        assert_eq!(f.gcd_degree(&g, &f.derivative(&g)), 0);
    }
}
