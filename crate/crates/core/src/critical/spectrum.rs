//! The expected list of critical values, their component dimensions, and the
//! dimensions of the matching eigenspaces of quantum multiplication.

use num_traits::ToPrimitive;
use serde::Serialize;

use super::points::Mode;
use super::CriticalError;
use crate::gaussian::GaussianRational;
use crate::grothendieck::K0Class;
use crate::measures::betti;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumEntry {
    /// `k = 0..2g−2`.
    pub index: usize,
    pub value: GaussianRational,
    pub mode: Mode,
    pub modulus: u64,
    /// Expected dimension of the critical locus: `min(k, 2g−2−k)`.
    pub dimension: usize,
    /// `dim H•(Sym^d C)` with `d` the expected dimension.
    pub eigenspace_dim: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectedSpectrum {
    pub genus: usize,
    pub entries: Vec<SpectrumEntry>,
}

impl ExpectedSpectrum {
    pub fn max_modulus(&self) -> u64 {
        self.entries.iter().map(|e| e.modulus).max().unwrap_or(0)
    }

    pub fn values(&self) -> Vec<GaussianRational> {
        self.entries.iter().map(|e| e.value.clone()).collect()
    }

    pub fn entry_for(&self, value: &GaussianRational) -> Option<&SpectrumEntry> {
        self.entries.iter().find(|e| &e.value == value)
    }

    pub fn total_eigenspace_dim(&self) -> u64 {
        self.entries.iter().map(|e| e.eigenspace_dim).sum()
    }
}

/// Value with index `k`: `8(g−1−k)`, times `i` for odd `k`.
pub fn spectrum_value(g: usize, k: usize) -> GaussianRational {
    let m = 8 * (g as i64 - 1 - k as i64);
    if k % 2 == 0 {
        GaussianRational::from_int(m)
    } else {
        GaussianRational::from_ints(0, m)
    }
}

pub fn expected_spectrum(g: usize) -> Result<ExpectedSpectrum, CriticalError> {
    if g < 2 {
        return Err(CriticalError::GenusOutOfRange { g, min: 2, max: usize::MAX });
    }
    let entries = (0..=2 * g - 2)
        .map(|k| {
            let dimension = k.min(2 * g - 2 - k);
            let b = betti(&K0Class::sym(dimension as i64), g).expect("symmetric powers realize");
            SpectrumEntry {
                index: k,
                value: spectrum_value(g, k),
                mode: if k % 2 == 0 { Mode::Real } else { Mode::Imaginary },
                modulus: 8 * (g as i64 - 1 - k as i64).unsigned_abs(),
                dimension,
                eigenspace_dim: b.at_one().to_u64().expect("small"),
            }
        })
        .collect();
    Ok(ExpectedSpectrum { genus: g, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_and_three() {
        let s = expected_spectrum(2).unwrap();
        let vals: Vec<String> = s.values().iter().map(ToString::to_string).collect();
        assert_eq!(vals, ["8", "0", "-8"]);
        assert_eq!(s.entries.iter().map(|e| e.dimension).collect::<Vec<_>>(), [0, 1, 0]);
        assert_eq!(s.entries[1].eigenspace_dim, 6);

        let s = expected_spectrum(3).unwrap();
        let vals: Vec<String> = s.values().iter().map(ToString::to_string).collect();
        assert_eq!(vals, ["16", "8i", "0", "-8i", "-16"]);
        assert_eq!(s.entries.iter().map(|e| e.dimension).collect::<Vec<_>>(), [0, 1, 2, 1, 0]);
        assert_eq!(s.max_modulus(), 16);
    }
}
