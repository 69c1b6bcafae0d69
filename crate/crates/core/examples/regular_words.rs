//! Regular words, their bracketings, and Witt's formula.

use chi_lie::lie::{enumerate_regular_words, witt_dim, Alphabet, FreeLie};

fn main() {
    let lie = FreeLie::new(Alphabet::free(2));
    for w in enumerate_regular_words(lie.alphabet(), 5) {
        println!("{:<14} {}", lie.alphabet().format_word(&w), lie.render_word(&w));
    }
    let dims: Vec<u64> = (1..=8).map(|k| witt_dim(3, k)).collect();
    println!("rank 3 dims: {dims:?}");
}
