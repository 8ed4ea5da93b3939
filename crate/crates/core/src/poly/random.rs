use super::{Monomial, Polynomial, Rational, Ring};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Deterministic generic linear form: sum of nonzero small-integer multiples
/// of every variable, drawn from `seed`. Coefficients stay within |a| <= 1000
/// to keep basis computations tractable; genericity is validated downstream
/// by stability checks, not assumed.
pub fn random_linear_form(seed: u64, ring: &Arc<Ring>) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ring.nvars();
    let mut p = Polynomial::zero(ring);
    for v in 0..n {
        let mag: i64 = rng.gen_range(1..=1000);
        let sign: bool = rng.gen();
        let a = if sign { mag } else { -mag };
        p.add_term(Monomial::var(n, v), Rational::from_integer(BigInt::from(a)));
    }
    p
}

/// Mix a salt into a seed; used to derive independent sampling streams from
/// one top-level seed.
pub fn derive_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn shape_and_determinism() {
        let r = Ring::new(vec!["x", "y"]);
        let p = random_linear_form(1, &r);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.num_terms(), 2, "all coefficients nonzero");
        assert!(p.constant_term().is_zero());
        assert_eq!(p, random_linear_form(1, &r));
    }

    #[test]
    fn distinct_seeds_distinct_forms() {
        for nvars in [2usize, 3] {
            let names: Vec<String> = (0..nvars).map(|i| format!("x{}", i)).collect();
            let r = Ring::new(names);
            let forms: Vec<_> = (1..=100u64).map(|s| random_linear_form(s, &r)).collect();
            for i in 0..forms.len() {
                for j in (i + 1)..forms.len() {
                    assert_ne!(forms[i], forms[j], "seeds {} and {} collided", i + 1, j + 1);
                }
            }
        }
    }
}
