//! Scaling benchmark. For each size, the same batch of generated
//! instances is solved by each selected solver; the clock wraps the
//! solve call only, never generation or printing. Stdout gets a CSV
//! table (one row per size and solver, with the median over the trials
//! and the ratio to the previous size), stderr a human summary.

use std::time::{Duration, Instant};

use flowshop::{quadratic, solve, Instance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gen::random_times;
use crate::BenchSolver;

/// Instances are drawn with this bound on b, like `gen --max-b 10000`.
const BENCH_MAX_B: u32 = 10_000;

type NamedSolver = (&'static str, fn(&Instance) -> usize);

pub fn run(sizes: &[usize], trials: usize, seed: u64, which: BenchSolver) {
    let solvers: &[NamedSolver] = match which {
        BenchSolver::Fast => &[("fast", run_fast)],
        BenchSolver::Quadratic => &[("quadratic", run_quadratic)],
        BenchSolver::Both => &[("fast", run_fast), ("quadratic", run_quadratic)],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut previous: Vec<Option<f64>> = vec![None; solvers.len()];
    println!("size,solver,median_seconds,ratio_to_previous");
    for &size in sizes {
        let instances: Vec<Instance> = (0..trials)
            .map(|_| Instance::from_times(&random_times(&mut rng, size, BENCH_MAX_B)))
            .collect();
        for (slot, &(name, runner)) in solvers.iter().enumerate() {
            let mut samples: Vec<Duration> = instances
                .iter()
                .map(|instance| {
                    let clock = Instant::now();
                    let out = runner(instance);
                    let elapsed = clock.elapsed();
                    std::hint::black_box(out);
                    elapsed
                })
                .collect();
            samples.sort();
            let median = samples[samples.len() / 2].as_secs_f64();
            let ratio = previous[slot].map(|prev| median / prev);
            match ratio {
                Some(r) => {
                    println!("{size},{name},{median:.6},{r:.3}");
                    eprintln!("n={size} {name}: median {median:.3}s, x{r:.2} vs previous size");
                }
                None => {
                    println!("{size},{name},{median:.6},");
                    eprintln!("n={size} {name}: median {median:.3}s");
                }
            }
            previous[slot] = Some(median);
        }
    }
}

fn run_fast(instance: &Instance) -> usize {
    solve(instance).expect("generated instances are valid").points.len()
}

fn run_quadratic(instance: &Instance) -> usize {
    quadratic(instance)
        .expect("generated instances are valid")
        .points
        .len()
}
