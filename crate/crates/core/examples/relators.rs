//! The relators of the ideal L for a rank-3 base algebra, by family.

use std::collections::BTreeMap;

use chi_lie::chi::{enumerate_relators, ChiModel, PresentationSpec};

fn main() -> chi_lie::Result<()> {
    let model = ChiModel::new(3)?;
    let relators = enumerate_relators(&model, &PresentationSpec::l(3, None, 5))?;
    let mut by_family: BTreeMap<&str, usize> = BTreeMap::new();
    for r in &relators {
        *by_family.entry(r.family.tag()).or_default() += 1;
    }
    println!("{} relators up to degree 5: {by_family:?}", relators.len());
    for r in relators.iter().take(5) {
        println!("  {:<10} {}", r.family.tag(), model.format(&r.element));
    }
    Ok(())
}
