//! The elements f_n lie in the kernel of rho but survive modulo every relator
//! of degree at most their own.

use chi_lie::analysis::f_n_survives;
use chi_lie::chi::{ChiModel, TailReading};

fn main() -> chi_lie::Result<()> {
    let model = ChiModel::new(3)?;
    for n in [2, 4] {
        let f = model.f_n(n)?;
        let (p, q) = model.rho_l(&f);
        let (nonzero, carrier_kept, _) = f_n_survives(&model, n, TailReading::Generic)?;
        println!("f_{n} = {}", model.format(&f));
        println!(
            "  rho(f_{n}) = 0: {}, nonzero mod relators: {nonzero}, carrier irreducible: {carrier_kept}",
            p.is_zero() && q.is_zero()
        );
    }
    Ok(())
}
