//! Completing a relator set and deciding ideal membership.

use std::sync::Arc;

use chi_lie::gs::{is_member, reduce_set};
use chi_lie::lie::{format_element, parse_element, Alphabet, FreeLie};

fn main() -> chi_lie::Result<()> {
    let lie = Arc::new(FreeLie::new(Alphabet::free(2)));
    let relators = [parse_element(&lie, "[x1,[x1,x2]]")?, parse_element(&lie, "[[x1,x2],x2]")?];

    let mut basis = reduce_set(lie.clone(), &relators)?;
    basis.complete_bounded(6);
    print!("{}", basis.dump());

    for text in ["[x1,[x1,[x1,x2]]]", "[[x1,x2],[x1,[x1,x2]]]", "[x1,x2]"] {
        let f = parse_element(&lie, text)?;
        let nf = basis.normal_form(&f);
        let member = is_member(lie.clone(), &f, &relators)?;
        println!("{text}: normal form {}, member {member}", format_element(&lie, &nf));
    }
    Ok(())
}
