#![allow(dead_code)]

use afsimplex::{generate_lp, standardize, GeneratorSpec, Shape, StandardProblem};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const WORKED_LP: &str = "\
max: 3 x1 + 5 x2;
c1: x1 <= 4;
c2: x2 >= 6;
c3: 3x1 + 2x2 >= 18;
c4: x1 + x2 >= 8;
c5: 5x1 + 4x2 >= 32;
";

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn qq(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn worked() -> StandardProblem {
    StandardProblem::from_integers(
        &[&[1, 0], &[0, -1], &[-3, -2], &[-1, -1], &[-5, -4]],
        &[4, -6, -18, -8, -32],
        &[3, 5],
    )
    .unwrap()
}

/// Seeded instance with 1..=6 rows and columns; shapes cycle with the seed.
pub fn random_instance(seed: u64) -> (GeneratorSpec, StandardProblem) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let shape = Shape::ALL[(seed % 3) as usize];
    let spec = GeneratorSpec::new(seed, rng.gen_range(1..=6), rng.gen_range(1..=6), shape);
    let sp = standardize(&generate_lp(&spec)).unwrap();
    (spec, sp)
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `ray >= 0`, `A·ray <= 0`, `c·ray > 0`.
pub fn is_improving_ray(sp: &StandardProblem, ray: &[BigRational]) -> bool {
    let zero = q(0);
    ray.iter().all(|v| *v >= zero) && sp.a().iter().all(|row| dot(row, ray) <= zero) && dot(sp.c(), ray) > zero
}
