#![allow(dead_code)]

use hecke_workbench::{AffineWeylGroup, ExtAffineElement, GenericQ, HeckeElement, Poly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Elements of length at most `max_len`, with `pi^k`, `|k| <= 1`, when Omega
/// is nontrivial.
pub fn short_elements(g: &AffineWeylGroup, max_len: usize) -> Vec<ExtAffineElement> {
    g.elements_up_to(max_len, 1).into_iter().filter(|x| g.length(x) <= max_len).collect()
}

pub fn random_poly(rng: &mut ChaCha8Rng) -> Poly {
    let deg = rng.gen_range(0..3);
    Poly::from_coeffs((0..=deg).map(|_| rng.gen_range(-3..=3)).collect())
}

/// A combination of up to three short basis elements with random
/// coefficients in `Z[q]`.
pub fn random_generic(
    rng: &mut ChaCha8Rng,
    pool: &[ExtAffineElement],
) -> HeckeElement<GenericQ> {
    let n = rng.gen_range(1..=3);
    HeckeElement::from_terms(
        GenericQ,
        (0..n).map(|_| (pool.choose(rng).unwrap().clone(), random_poly(rng))),
    )
}
