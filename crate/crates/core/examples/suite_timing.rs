use std::time::Instant;

fn main() {
    for name in ["lattice", "ext", "symbols", "parser", "fan"] {
        let t = Instant::now();
        let reports = voronoi_fans::suites::run_suite(name, 7).unwrap();
        let ok = reports.iter().all(|r| r.ok());
        println!(
            "{name}: {:?} ok={ok} cases={}",
            t.elapsed(),
            reports[0].cases
        );
        for r in &reports {
            for f in r.failures.iter().take(3) {
                println!("   failure: {f}");
            }
        }
    }
}
