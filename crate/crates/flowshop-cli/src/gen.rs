//! Reproducible random instances: b uniform on [1, max_b], then a
//! uniform on [1, b], so a <= b holds by construction and every emitted
//! instance validates. The same (n, max_b, seed) triple always yields
//! the same jobs.

use flowshop::Instance;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn random_times(rng: &mut ChaCha8Rng, n: usize, max_b: u32) -> Vec<(u32, u32)> {
    (0..n)
        .map(|_| {
            let b = rng.random_range(1..=max_b);
            (rng.random_range(1..=b), b)
        })
        .collect()
}

pub fn generated_instance(n: usize, max_b: u32, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instance = Instance::from_times(&random_times(&mut rng, n, max_b));
    instance.name = Some(format!("flowshop gen n={n} max-b={max_b} seed={seed}"));
    instance
}
