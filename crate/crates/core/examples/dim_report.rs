//! Dimensions of L, chi and R for small free nilpotent base algebras.

use chi_lie::analysis::dim_report;

fn main() -> chi_lie::Result<()> {
    println!("m c  dim L  dim chi  dim R  class");
    for (m, c) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let r = dim_report(m, c)?;
        println!("{m} {c}  {:>5}  {:>7}  {:>5}  {:>5}", r.dim_l, r.dim_chi, r.dim_r, r.class_chi);
    }
    Ok(())
}
