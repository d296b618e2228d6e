//! Seeded random inputs for differential testing and benchmarking.

use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{rat, Polynomial};

/// Shape of a random polynomial system.
#[derive(Clone, Copy, Debug)]
pub struct SystemShape {
    pub nvars: usize,
    pub max_gens: usize,
    pub max_deg: u32,
    pub max_terms: usize,
    /// Coefficients are drawn from `-coeff_bound..=coeff_bound` without zero.
    pub coeff_bound: i64,
}

impl Default for SystemShape {
    fn default() -> Self {
        SystemShape { nvars: 3, max_gens: 4, max_deg: 3, max_terms: 3, coeff_bound: 5 }
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32) -> Monomial {
    let deg = rng.gen_range(0..=max_deg);
    let mut exps = alloc::vec![0u32; nvars];
    for _ in 0..deg {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::from_exps(exps)
}

/// A system of nonzero, pairwise non-proportional polynomials with at least
/// one non-constant generator.
pub fn random_system(seed: u64, shape: SystemShape, ord: MonomialOrder) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=shape.max_gens);
    let mut out: Vec<Polynomial> = Vec::new();
    while out.len() < count {
        let terms = rng.gen_range(1..=shape.max_terms);
        let mut raw = Vec::new();
        for _ in 0..terms {
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-shape.coeff_bound..=shape.coeff_bound);
            }
            raw.push((rat(c), random_monomial(&mut rng, shape.nvars, shape.max_deg)));
        }
        let f = Polynomial::from_terms(raw, ord);
        if f.is_zero() || f.degree() == Some(0) {
            continue;
        }
        let mf = f.monic().unwrap();
        if out.iter().any(|g| g.monic().unwrap() == mf) {
            continue;
        }
        out.push(f);
    }
    out
}

/// A set of distinct monomials of degree at most `max_deg` (possibly including 1).
pub fn random_monomials(seed: u64, nvars: usize, max_len: usize, max_deg: u32) -> Vec<Monomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = rng.gen_range(1..=max_len);
    let mut out: Vec<Monomial> = Vec::new();
    let mut tries = 0;
    while out.len() < len && tries < 64 * max_len {
        tries += 1;
        let m = random_monomial(&mut rng, nvars, max_deg);
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}
