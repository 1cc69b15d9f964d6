//! Check a user identity from TOML files:
//! `cargo run --example check_spec -- examples/specs/rogers_ramanujan.toml [PRODUCT_FILE] [ORDER]`.

use std::path::PathBuf;

use qrr::cli::load_user_identity;
use qrr::series::first_mismatch;

fn main() -> qrr::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let default = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/specs/rogers_ramanujan.toml");
    let file = PathBuf::from(args.first().map_or(default, String::as_str));
    let (product_file, order) = match args.get(1) {
        Some(a) if a.parse::<usize>().is_err() => (Some(PathBuf::from(a)), args.get(2)),
        other => (None, other),
    };
    let order = order.map_or(150, |s| s.parse().expect("order"));
    let (sum, product) = load_user_identity(&file, product_file.as_deref())?;
    let (l, r) = (sum.eval(order)?, product.eval(order)?);
    match first_mismatch(&l, &r)? {
        None => println!("{}: verified to order {order}", file.display()),
        Some(n) => println!("{}: mismatch at q^{n}: {} vs {}", file.display(), l.coeff(n), r.coeff(n)),
    }
    Ok(())
}
