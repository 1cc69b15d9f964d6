//! Principal characters as products, checked against each other.

use qrr::products::{andrews_gordon_product, char_a13_level2, char_a22, A22Weight, ProductSpec};
use qrr::series::Sign;

fn show(label: &str, p: &ProductSpec, order: usize) -> qrr::Result<()> {
    let s = p.eval(order)?;
    let head: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    println!("{label:<28} {}", head.join(" "));
    Ok(())
}

fn main() -> qrr::Result<()> {
    let order = 20;
    show("AG k=2 i=2", &andrews_gordon_product(2, 2)?, order)?;
    show("1/(q,q^4;q^5)", &ProductSpec::inverse_brackets(&[1], 5)?, order)?;
    show("A2(2) level 3, 3L0", &char_a22(3, A22Weight::new(3, 0))?, order)?;
    show("(-q^2,-q^3,-q^4,-q^6;q^6)", &ProductSpec::pochhammers(Sign::Minus, &[2, 3, 4, 6], 6, false)?, order)?;
    show("A13(2) level 2, i=5", &char_a13_level2(5)?, order)?;
    Ok(())
}
