//! One PASS/FAIL line per acceptance criterion, with wall time against its
//! budget. Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use g2core::cli::check_rng;
use g2core::cli::checks::{self, Outcome};

type Rng = rand_chacha::ChaCha8Rng;

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn(&mut Rng) -> Outcome,
}

fn both(a: Outcome, b: impl FnOnce() -> Outcome) -> Outcome {
    let a = a?;
    Ok(format!("{a}; {}", b()?))
}

fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        Criterion { name: "split model axioms", budget: s(5), run: |_| checks::split_model_axioms() },
        Criterion { name: "root reconstruction", budget: s(1), run: |_| checks::g2_roots() },
        Criterion { name: "triple realization", budget: s(10), run: |_| checks::triple_realization() },
        Criterion { name: "Killing signatures", budget: s(30), run: |_| checks::killing_signatures() },
        Criterion { name: "scaling law", budget: s(60), run: |r| checks::scaling_law(r, 100) },
        Criterion {
            name: "two orbits",
            budget: s(300),
            run: |r| both(checks::classify_pullbacks(r, 50), || checks::witnesses(r, 10, 60)),
        },
        Criterion {
            name: "octonion laws",
            budget: s(30),
            run: |r| both(checks::octonion_laws(r, 1000), || checks::moufang(r, 1000)),
        },
        Criterion { name: "Clifford and spin", budget: s(30), run: |_| checks::clifford_spin() },
        Criterion { name: "F-operator", budget: s(30), run: |r| checks::f_operator_checks(r, 50) },
        Criterion { name: "compact model", budget: s(60), run: |_| checks::compact_model() },
        Criterion { name: "homogeneous data", budget: s(30), run: |r| checks::homogeneous_data(r, 100) },
        Criterion { name: "spin transitivity", budget: s(30), run: |r| checks::spin_transitivity(r, 200) },
    ]
}

fn main() {
    let mut failed = 0;
    for (i, c) in criteria().iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)(&mut check_rng(0, c.name));
        let t = start.elapsed();
        let line = match outcome {
            Ok(_) if t > c.budget => Err(format!("took {:.2?}, budget {:?}", t, c.budget)),
            other => other,
        };
        match line {
            Ok(detail) => println!("PASS {:>2} {} ({:.2?}): {detail}", i + 1, c.name, t),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {} ({:.2?}): {detail}", i + 1, c.name, t);
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria().len());
    if failed > 0 {
        std::process::exit(1);
    }
}
