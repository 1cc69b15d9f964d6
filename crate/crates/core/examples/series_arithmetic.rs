//! Truncated q-series arithmetic: Euler's pentagonal theorem and the partition function.

use qrr::series::{pochhammer, Count, Monomial};

fn main() -> qrr::Result<()> {
    let order = 30;
    let euler = pochhammer(Monomial::q_pow(1), 1, Count::Infinite, order)?;
    let nonzero: Vec<String> = euler
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.sign() != num_bigint::Sign::NoSign)
        .map(|(n, c)| format!("{c:+}q^{n}"))
        .collect();
    println!("(q;q)_inf = {} + O(q^{})", nonzero.join(" "), order + 1);
    let p = euler.invert()?;
    println!("p(0..={order}) = {:?}", p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
    // p(200) needs big integers
    let p200 = pochhammer(Monomial::q_pow(1), 1, Count::Infinite, 200)?.invert()?;
    println!("p(200) = {}", p200.coeff(200));
    Ok(())
}
