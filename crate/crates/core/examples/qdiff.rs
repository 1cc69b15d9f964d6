//! The Capparelli q-difference equation and the level 3 triangle of generating functions.

use qrr::verify::{check_qdiff_capparelli, level3_triangle};

fn main() -> qrr::Result<()> {
    let (x_degree, order) = (10, 80);
    for a in 1..=2 {
        let r = check_qdiff_capparelli(a, x_degree, order)?;
        println!("{:<40} {:?}", r.name, r.outcome);
        for r in level3_triangle(a, x_degree, order)? {
            println!("{:<40} {:?}", r.name, r.outcome);
        }
    }
    Ok(())
}
