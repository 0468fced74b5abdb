use kacpoly::verify::{run, Suite, VerifyOptions};

fn main() {
    let t = std::time::Instant::now();
    let report = run(Suite::All, &VerifyOptions::default()).unwrap();
    for s in &report.suites {
        println!("{} passed={} checks={}", s.suite, s.passed, s.checks.len());
        for f in s.failures() {
            println!("  FAIL {f:?}");
        }
    }
    println!("{:?}", t.elapsed());
}
