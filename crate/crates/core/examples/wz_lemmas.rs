//! The WZ pair certificate and the four summation lemmas.

use qrr::verify::{check_lemma, check_wz};

fn main() -> qrr::Result<()> {
    let (m_max, order) = (8, 80);
    let mut reports = vec![check_wz(m_max, order)?];
    for part in 1..=4 {
        reports.push(check_lemma(part, m_max, order)?);
    }
    for r in reports {
        println!("{:<16} {:?} to order {} ({} ms)", r.name, r.outcome, r.order, r.elapsed_ms);
    }
    Ok(())
}
