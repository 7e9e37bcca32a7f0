//! Seeded random generation of constraint-satisfying parameter points.
//!
//! G5–G7 carry equation constraints; their samplers solve the equations
//! exactly by substitution instead of filtering near-misses, so every drawn
//! point is admissible and exact.

use num_traits::Zero;
use rand::Rng;

use crate::algebra::{make_group, Family, LieAlgebra3, Params};
use crate::metric::Vec3;
use crate::scalar::{Rational, Scalar};

/// A small random rational (numerator −6..6, denominator in {1,2,3,4},
/// biased toward integers).
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = rng.gen_range(-6..=6_i64);
    let den = [1, 1, 1, 2, 3, 4][rng.gen_range(0..6_usize)];
    <Rational as Scalar>::frac(num, den)
}

/// A small random nonzero rational.
pub fn random_nonzero<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let x = random_rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random frame vector with small rational components.
pub fn random_vec3<R: Rng>(rng: &mut R) -> Vec3<Rational> {
    std::array::from_fn(|_| random_rational(rng))
}

/// A random admissible parameter point for a catalog family.
pub fn sample_params<R: Rng>(rng: &mut R, family: Family) -> Params<Rational> {
    let mut p = Params::<Rational>::default();
    match family {
        Family::G1 => {
            p.alpha = random_nonzero(rng);
            p.beta = random_rational(rng);
        }
        Family::G2 => {
            p.alpha = random_rational(rng);
            p.beta = random_rational(rng);
            p.gamma = random_nonzero(rng);
        }
        Family::G3 => {
            p.alpha = random_rational(rng);
            p.beta = random_rational(rng);
            p.gamma = random_rational(rng);
        }
        Family::G4 => {
            p.alpha = random_rational(rng);
            p.beta = random_rational(rng);
            p.eta = Some(if rng.gen_bool(0.5) { 1 } else { -1 });
        }
        Family::G5 => loop {
            // αγ + βδ = 0 via substitution; α + δ ≠ 0 by rejection
            if rng.gen_range(0..4_u8) > 0 {
                let beta = random_nonzero(rng);
                let alpha = random_rational(rng);
                let gamma = random_rational(rng);
                let delta = -(&(&alpha * &gamma) / &beta);
                if !(&alpha + &delta).is_zero() {
                    p.alpha = alpha;
                    p.beta = beta;
                    p.gamma = gamma;
                    p.delta = delta;
                    break;
                }
            } else if rng.gen_bool(0.5) {
                // β = 0, α = 0: γ free, δ ≠ 0
                p.gamma = random_rational(rng);
                p.delta = random_nonzero(rng);
                break;
            } else {
                // β = 0, γ = 0: α, δ free with α + δ ≠ 0
                let alpha = random_rational(rng);
                let delta = random_rational(rng);
                if !(&alpha + &delta).is_zero() {
                    p.alpha = alpha;
                    p.delta = delta;
                    break;
                }
            }
        },
        Family::G6 => loop {
            // αγ − βδ = 0 via substitution; α + δ ≠ 0 by rejection
            if rng.gen_range(0..4_u8) > 0 {
                let alpha = random_nonzero(rng);
                let beta = random_rational(rng);
                let delta = random_rational(rng);
                if (&alpha + &delta).is_zero() {
                    continue;
                }
                p.gamma = &(&beta * &delta) / &alpha;
                p.alpha = alpha;
                p.beta = beta;
                p.delta = delta;
                break;
            } else {
                // α = 0 forces δ ≠ 0 and hence β = 0; γ free
                p.gamma = random_rational(rng);
                p.delta = random_nonzero(rng);
                break;
            }
        },
        Family::G7 => loop {
            // αγ = 0: one factor vanishes; α + δ ≠ 0 by rejection
            if rng.gen_bool(0.5) {
                // α = 0 forces δ ≠ 0
                p.beta = random_rational(rng);
                p.gamma = random_rational(rng);
                p.delta = random_nonzero(rng);
                break;
            } else {
                let alpha = random_rational(rng);
                let delta = random_rational(rng);
                if !(&alpha + &delta).is_zero() {
                    p.alpha = alpha;
                    p.beta = random_rational(rng);
                    p.delta = delta;
                    break;
                }
            }
        },
        Family::Custom => panic!("Custom algebras carry no parameter sampler"),
    }
    p
}

/// A random admissible catalog algebra.
pub fn sample_group<R: Rng>(rng: &mut R, family: Family) -> LieAlgebra3<Rational> {
    let p = sample_params(rng, family);
    make_group(family, p).expect("sampled point satisfies the family constraints")
}
