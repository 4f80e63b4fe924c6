use std::sync::Arc;
use std::time::Instant;
use ynp::complex::sample_complex;
use ynp::group::build_group;
use ynp::search::has_nontrivial_class_budgeted;

fn main() {
    let g = Arc::new(build_group("C2").unwrap());
    let n = 40u32;
    for alpha in [0.5f64, 1.0, 1.5, 2.0, 2.5, 3.0] {
        let p = alpha * (n as f64).ln() / n as f64;
        let start = Instant::now();
        let mut nodes_total = 0u64;
        let mut budget_hits = 0u32;
        let mut nontrivial = 0u32;
        for t in 0..20u64 {
            let y = sample_complex(n, p, 1000 + t).unwrap();
            match has_nontrivial_class_budgeted(&y, &g, 2_000_000) {
                Ok(r) => {
                    nodes_total += r.stats.nodes;
                    nontrivial += u32::from(!r.trivial);
                }
                Err(_) => budget_hits += 1,
            }
        }
        println!(
            "alpha {alpha}: 20 trials in {:.2}s, nodes {nodes_total}, nontrivial {nontrivial}, budget hits {budget_hits}",
            start.elapsed().as_secs_f64()
        );
    }
}
