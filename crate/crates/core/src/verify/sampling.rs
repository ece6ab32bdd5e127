use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` points uniformly distributed (by area) in the disk `|w| < radius`,
/// reproducible from `seed`.
pub fn random_disk_points(seed: u64, radius: f64, count: usize) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let rho = radius * rng.gen::<f64>().sqrt();
            Complex64::from_polar(rho, TAU * rng.gen::<f64>())
        })
        .collect()
}

/// `count` unit directions `(cos t, sin t)`, reproducible from `seed`.
pub fn random_directions(seed: u64, count: usize) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let t = TAU * rng.gen::<f64>();
            (t.cos(), t.sin())
        })
        .collect()
}
