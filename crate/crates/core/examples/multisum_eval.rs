//! Evaluate Andrews–Gordon sums and print the first coefficients and term counts.

use qrr::multisum::andrews_gordon_spec;

fn main() -> qrr::Result<()> {
    let order: usize = std::env::args().nth(1).map_or(40, |s| s.parse().expect("order"));
    for k in 2..=4 {
        for i in 1..=k {
            let ev = andrews_gordon_spec(k, i)?.eval_counted(order)?;
            let head: Vec<String> = ev.value.coeffs().iter().take(12).map(ToString::to_string).collect();
            println!("k={k} i={i}: {} ... ({} lattice points)", head.join(" "), ev.term_count);
        }
    }
    Ok(())
}
