//! Binary candidate vectors.

use crate::error::{Error, Result};
use crate::rng::{self, RngCore};

/// A candidate solution `x ∈ {0,1}^n`.
///
/// For binary vectors the 1-norm and the squared Euclidean norm coincide;
/// both equal the number of selected entries, the *cardinality*.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryVector {
    bits: Vec<u8>,
}

impl BinaryVector {
    /// Validate that every element is exactly 0 or 1.
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        for (index, &value) in bits.iter().enumerate() {
            if value > 1 {
                return Err(Error::InvalidBit { index, value });
            }
        }
        Ok(Self { bits })
    }

    pub fn zeros(n: usize) -> Self {
        Self { bits: vec![0; n] }
    }

    pub fn ones(n: usize) -> Self {
        Self { bits: vec![1; n] }
    }

    /// Decode the low `n` bits of a mask, element `i` from bit `i`.
    pub fn from_lsb_mask(mask: u64, n: usize) -> Self {
        Self {
            bits: (0..n).map(|i| ((mask >> i) & 1) as u8).collect(),
        }
    }

    /// Uniformly random vector from the seeded generator.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = rng::new_rng(seed);
        Self {
            bits: (0..n).map(|_| (rng.next_u64() & 1) as u8).collect(),
        }
    }

    pub(crate) fn from_bits_unchecked(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        Self { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn get(&self, i: usize) -> u8 {
        self.bits[i]
    }

    /// Number of 1-entries, `‖x‖₁`.
    pub fn cardinality(&self) -> usize {
        self.bits.iter().map(|&b| b as usize).sum()
    }

    /// Spin encoding `z = 2x - 1`, mapping {0,1} onto {-1,+1}.
    pub fn to_spins(&self) -> Vec<i8> {
        self.bits.iter().map(|&b| 2 * (b as i8) - 1).collect()
    }

    /// Render as a string of `0`/`1` characters, element 0 first.
    pub fn to_bitstring(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b == 1 { '1' } else { '0' })
            .collect()
    }

}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_values_outside_zero_one() {
        assert!(matches!(
            BinaryVector::new(vec![0, 2, 1]),
            Err(Error::InvalidBit { index: 1, value: 2 })
        ));
    }

    #[test]
    fn mask_round_trip() {
        let x = BinaryVector::from_lsb_mask(0b1011, 5);
        assert_eq!(x.bits(), &[1, 1, 0, 1, 0]);
        assert_eq!(x.cardinality(), 3);
        assert_eq!(x.to_bitstring(), "11010");
    }

    #[test]
    fn spins_encode_plus_minus_one() {
        let x = BinaryVector::new(vec![1, 0, 1]).unwrap();
        assert_eq!(x.to_spins(), vec![1, -1, 1]);
    }

    proptest! {
        // Cardinality is both the 1-norm and the squared 2-norm.
        #[test]
        fn cardinality_equals_squared_norm(bits in proptest::collection::vec(0u8..2, 1..40)) {
            let x = BinaryVector::new(bits).unwrap();
            let norm1: f64 = x.bits().iter().map(|&b| f64::from(b)).sum();
            let norm2_sq: f64 = x.bits().iter().map(|&b| f64::from(b) * f64::from(b)).sum();
            prop_assert_eq!(norm1, norm2_sq);
            prop_assert_eq!(norm1 as usize, x.cardinality());
        }
    }
}
