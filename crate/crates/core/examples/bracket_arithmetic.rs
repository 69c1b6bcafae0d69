//! Parsing, bracketing and printing elements of a free Lie algebra.

use chi_lie::lie::{format_element, parse_element, Alphabet, FreeLie};

fn main() -> chi_lie::Result<()> {
    let lie = FreeLie::new(Alphabet::new([("x", 1), ("y", 1), ("z", 1)])?);
    let f = parse_element(&lie, "[x,y] - 1/2*[y,z]")?;
    let g = parse_element(&lie, "[z,x]")?;
    let h = lie.bracket(&f, &g);
    println!("[f,g] = {}", format_element(&lie, &h));

    let (x, y, z) = (lie.letter(0), lie.letter(1), lie.letter(2));
    let jacobi = lie
        .right_normed(&[x.clone(), y.clone(), z.clone()])
        .add(&lie.right_normed(&[y.clone(), z.clone(), x.clone()]))
        .add(&lie.right_normed(&[z, x, y]));
    println!("jacobiator = {}", format_element(&lie, &jacobi));
    Ok(())
}
