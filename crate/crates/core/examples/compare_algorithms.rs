//! Times both classifiers on a full scan.
//!
//! cargo run --release -p stamp-gaps --example compare_algorithms -- 8 3

use std::time::Instant;

use stamp_gaps::scanner::{scan, Algorithm, ScanJob, ScanOptions};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let k: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(7);
    let h0: u32 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    for alg in [Algorithm::A, Algorithm::B] {
        let mut job = ScanJob::new(k, h0);
        job.algorithm = alg;
        let t = Instant::now();
        let report = scan(&job, &ScanOptions { workers, ..Default::default() }).unwrap();
        println!(
            "{alg:?}: {} sets, {} violations, {:.2?}",
            report.summary.sets,
            report.violations.len(),
            t.elapsed()
        );
    }
}
