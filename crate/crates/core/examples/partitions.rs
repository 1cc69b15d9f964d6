//! Partition theorems by enumeration: Gordon's theorem and Capparelli's identities.

use qrr::partitions::{count, enumerate, PartitionPredicate};

fn main() {
    let n_max = 24;
    let pairs = [
        (PartitionPredicate::AgC { k: 3, i: 2 }, PartitionPredicate::AgD { k: 3, i: 2 }),
        (PartitionPredicate::CapC { a: 1 }, PartitionPredicate::CapD { a: 1 }),
        (PartitionPredicate::CapC { a: 2 }, PartitionPredicate::CapD { a: 2 }),
    ];
    for (c, d) in &pairs {
        let agree = (0..=n_max).all(|n| count(n, c) == count(n, d));
        println!("{c:?} vs {d:?}: {} up to n = {n_max}", if agree { "equal" } else { "DIFFERENT" });
    }
    println!("Capparelli partitions of 12 with no part 1:");
    for p in enumerate(12, &PartitionPredicate::CapC { a: 1 }) {
        println!("  {:?}", p.parts());
    }
}
