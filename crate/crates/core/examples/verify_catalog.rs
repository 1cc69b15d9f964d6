//! Verify catalog entries: `cargo run --release --example verify_catalog -- [GLOB] [ORDER]`.

use qrr::verify::{verify_all, Filter, VerifyOptions};

fn main() -> qrr::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let filter = match args.first().map(String::as_str) {
        None | Some("all") => Filter::All,
        Some("theorems") => Filter::Theorems,
        Some("conjectures") => Filter::Conjectures,
        Some(glob) => Filter::Glob(glob.to_string()),
    };
    let order = args.get(1).map(|s| s.parse().expect("order is an integer"));
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let reports = verify_all(&filter, VerifyOptions { order, ..Default::default() }, jobs)?;
    for r in &reports {
        let detail = match &r.first_mismatch {
            None => String::new(),
            Some(m) => format!(" at q^{}: {} != {}", m.exponent, m.lhs, m.rhs),
        };
        println!(
            "{:<24} {:<10} order {:>3}  {:?}{}  ({} terms, {} ms)",
            r.name, format!("{:?}", r.status_claim), r.order, r.outcome, detail, r.term_count, r.elapsed_ms
        );
    }
    Ok(())
}
