//! Seeded generators on a dyadic grid.
//!
//! Every sample is `k / 2^bits` for an integer `k`, so sums and short
//! products of samples are exact in `f64` and identities that hold
//! algebraically hold bit for bit.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fock::{FockSpace, TensorSpace, Vector};
use crate::predual::Functional;
use crate::series::FourierSeries;
use crate::word::{Alphabet, Word};

pub type Rng64 = ChaCha8Rng;

/// Default grid resolution.
pub const BITS: u32 = 8;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mixes a seed with a label so that independent checks draw independent
/// streams (FNV-1a over the label, xored into a splitmix step).
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut z = seed ^ h;
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Uniform on `{0, 1, ..., 2^bits - 1} / 2^bits`.
pub fn unit(rng: &mut Rng64, bits: u32) -> f64 {
    let k = rng.gen_range(0..1u64 << bits);
    k as f64 / (1u64 << bits) as f64
}

/// Uniform on the grid points of `[-1, 1)`.
pub fn signed(rng: &mut Rng64, bits: u32) -> f64 {
    2.0 * unit(rng, bits) - 1.0
}

/// Uniform on the grid points of the unit square `[0, 1)²`.
pub fn complex(rng: &mut Rng64, bits: u32) -> Complex64 {
    Complex64::new(unit(rng, bits), unit(rng, bits))
}

/// A series with a coefficient on every word of length at most `degree`.
pub fn series(rng: &mut Rng64, alphabet: Alphabet, degree: usize, bits: u32) -> FourierSeries {
    let pairs: Vec<(Word, Complex64)> = alphabet.enumerate(degree).into_iter().map(|w| (w, complex(rng, bits))).collect();
    FourierSeries::from_pairs(alphabet, pairs).expect("enumerated words are valid")
}

pub fn values(rng: &mut Rng64, len: usize, bits: u32) -> Vec<Complex64> {
    (0..len).map(|_| complex(rng, bits)).collect()
}

pub fn vector(rng: &mut Rng64, space: impl Into<TensorSpace>, bits: u32) -> Vector {
    let space = space.into();
    let entries = values(rng, space.dim(), bits);
    Vector::from_entries(space, entries).expect("length matches")
}

pub fn functional(rng: &mut Rng64, space: FockSpace, bits: u32) -> Functional {
    Functional::from_values(space, values(rng, space.dim(), bits)).expect("length matches")
}

/// A point of `C^n` with `‖λ‖ <= radius`, coordinates on the signed grid.
pub fn point(rng: &mut Rng64, n: u32, radius: f64, bits: u32) -> Vec<Complex64> {
    loop {
        let lambda: Vec<Complex64> =
            (0..n).map(|_| Complex64::new(signed(rng, bits), signed(rng, bits))).collect();
        let norm_sq: f64 = lambda.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq <= radius * radius {
            return lambda;
        }
    }
}

/// Grid resolution keeping every product of `2·depth` point coordinates exact.
pub fn point_bits(depth: usize) -> u32 {
    let factors = 2 * depth.max(1) as u32;
    ((52 - factors) / factors).clamp(2, 24)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_reproducible() {
        let a = series(&mut rng(3), Alphabet::new(2).unwrap(), 2, BITS);
        let b = series(&mut rng(3), Alphabet::new(2).unwrap(), 2, BITS);
        assert_eq!(a, b);
        assert_ne!(derive_seed(0, "hopf/coassoc"), derive_seed(0, "hopf/cocommute"));
    }

    #[test]
    fn samples_lie_on_the_grid() {
        let mut r = rng(1);
        for _ in 0..100 {
            let x = unit(&mut r, 5) * 32.0;
            assert_eq!(x, x.trunc());
            assert!((0.0..32.0).contains(&x));
        }
        let p = point(&mut r, 3, 0.7, 5);
        assert!(p.iter().map(|z| z.norm_sqr()).sum::<f64>() <= 0.49);
    }

    #[test]
    fn point_products_are_exact() {
        let depth = 4;
        let bits = point_bits(depth);
        let space = FockSpace::new(2, depth).unwrap();
        let mut r = rng(11);
        for _ in 0..50 {
            let lambda = point(&mut r, 2, 0.7, bits);
            let mu = point(&mut r, 2, 0.7, bits);
            let (conv, dag) = crate::predual::point_convolve_check(space, &lambda, &mu).unwrap();
            assert_eq!((conv, dag), (0.0, 0.0));
        }
    }
}
