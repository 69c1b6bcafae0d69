//! Regular (Lyndon-Shirshov) associative words.
//!
//! With the letter order reversed (rank 0 smallest) and the usual "prefix is
//! smaller" convention, the regular words are exactly the classical Lyndon
//! words, so the standard algorithms below work on raw ranks.

use super::alphabet::{Alphabet, AssocWord, Rank};

/// True iff `w` is strictly greater than each of its proper rotations.
pub fn is_regular_letters(w: &[Rank]) -> bool {
    if w.is_empty() {
        return false;
    }
    let n = w.len();
    (1..n).all(|i| {
        // rotation w[i..] w[..i], compared position by position
        let rot = w[i..].iter().chain(w[..i].iter());
        w.iter().lt(rot)
    })
}

pub fn is_regular_word(w: &AssocWord) -> bool {
    is_regular_letters(w.letters())
}

/// Split point of the standard factorization: `w = w[..k] w[k..]` where
/// `w[k..]` is the longest proper regular suffix.
pub fn standard_split(w: &[Rank]) -> Option<usize> {
    if w.len() < 2 {
        return None;
    }
    (1..w.len()).find(|&k| is_regular_letters(&w[k..]))
}

/// Factorization of an arbitrary word into a non-increasing (in the classical
/// sense) product of regular words. Returns the factor boundaries.
pub fn regular_factorization(w: &[Rank]) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] <= w[j] {
            if w[k] < w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push((i, i + j - k));
            i += j - k;
        }
    }
    out
}

/// All regular words over `alphabet` with degree at most `max_degree`, in
/// ascending weighted deg-lex order.
pub fn enumerate_regular_words(alphabet: &Alphabet, max_degree: u32) -> Vec<AssocWord> {
    let k = alphabet.len();
    if k == 0 || max_degree == 0 {
        return Vec::new();
    }
    let min_weight = alphabet.letters().iter().map(|l| l.weight).min().unwrap_or(1);
    let max_len = (max_degree / min_weight) as usize;
    let mut out = Vec::new();
    // Duval's generation of Lyndon words of length <= max_len in lexicographic order.
    let mut w: Vec<Rank> = vec![0];
    loop {
        let word = alphabet.word(&w);
        if word.degree() <= max_degree {
            out.push(word);
        }
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last().is_some_and(|&c| usize::from(c) == k - 1) {
            w.pop();
        }
        match w.last_mut() {
            Some(c) => *c += 1,
            None => break,
        }
    }
    out.sort();
    out
}

/// Regular words of degree exactly `degree`.
pub fn regular_words_of_degree(alphabet: &Alphabet, degree: u32) -> Vec<AssocWord> {
    enumerate_regular_words(alphabet, degree).into_iter().filter(|w| w.degree() == degree).collect()
}

/// Möbius function.
pub fn mobius(mut n: u64) -> i64 {
    assert!(n >= 1);
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Dimension of the degree-`k` component of the free Lie algebra of rank `n`.
pub fn witt_dim(n: u64, k: u64) -> u64 {
    assert!(n >= 1 && k >= 1, "witt_dim needs n, k >= 1");
    let mut total: i128 = 0;
    for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
        let mu = mobius(d) as i128;
        if mu == 0 {
            continue;
        }
        let e = u32::try_from(k / d).expect("exponent fits");
        let pow = (n as i128).checked_pow(e).expect("witt_dim overflow");
        total += mu * pow;
    }
    debug_assert_eq!(total % k as i128, 0);
    u64::try_from(total / k as i128).expect("nonnegative")
}

/// Dimension of the free nilpotent Lie algebra of rank `m` and class `c`.
pub fn free_nilpotent_dim(m: u64, c: u64) -> u64 {
    (1..=c).map(|k| witt_dim(m, k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    use crate::lie::alphabet::cmp_lex;

    /// Brute force: `w = uv` implies `uv > vu` for every nontrivial split.
    fn regular_by_rotation(w: &[Rank]) -> bool {
        (1..w.len()).all(|i| {
            let rot: Vec<Rank> = w[i..].iter().chain(&w[..i]).copied().collect();
            cmp_lex(w, &rot) == Ordering::Greater
        })
    }

    fn all_words(k: u8, n: usize) -> Vec<Vec<Rank>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..k).map(move |c| {
                        let mut w = w.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn regularity_examples() {
        assert!(is_regular_letters(&[0]));
        assert!(is_regular_letters(&[0, 0, 1]));
        assert!(!is_regular_letters(&[1, 0, 0]));
        assert!(!is_regular_letters(&[0, 0]));
    }

    #[test]
    fn regularity_matches_rotation_oracle() {
        for n in 1..=7 {
            for w in all_words(3, n) {
                assert_eq!(is_regular_letters(&w), regular_by_rotation(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn degree_three_rank_two() {
        let a = Alphabet::free(2);
        let words = regular_words_of_degree(&a, 3);
        let shown: Vec<_> = words.iter().map(|w| a.format_word(w)).collect();
        assert_eq!(shown, vec!["x1 x2 x2", "x1 x1 x2"]);
        assert_eq!(enumerate_regular_words(&a, 1).len(), 2);
        assert_eq!(regular_words_of_degree(&Alphabet::free(3), 2).len(), 3);
    }

    #[test]
    fn enumeration_matches_brute_force_with_weights() {
        let a = Alphabet::new([("b", 2), ("c", 1), ("d", 1)]).unwrap();
        let mut brute: Vec<AssocWord> = (1..=6)
            .flat_map(|n| all_words(3, n))
            .filter(|w| regular_by_rotation(w))
            .map(|w| a.word(&w))
            .filter(|w| w.degree() <= 6)
            .collect();
        brute.sort();
        assert_eq!(enumerate_regular_words(&a, 6), brute);
    }

    #[test]
    fn enumeration_counts_are_witt() {
        for n in 2..=3u64 {
            let a = Alphabet::free(n as usize);
            let words = enumerate_regular_words(&a, 6);
            for k in 1..=6u32 {
                let count = words.iter().filter(|w| w.degree() == k).count() as u64;
                assert_eq!(count, witt_dim(n, u64::from(k)), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn witt_values() {
        assert_eq!(witt_dim(2, 1), 2);
        assert_eq!(witt_dim(2, 3), 2);
        assert_eq!(witt_dim(3, 4), 18);
        let row: Vec<u64> = (1..=6).map(|k| witt_dim(2, k)).collect();
        assert_eq!(row, vec![2, 1, 2, 3, 6, 9]);
        assert_eq!(free_nilpotent_dim(3, 2), 6);
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn factorization_is_nonincreasing_regular() {
        for w in all_words(3, 6) {
            let f = regular_factorization(&w);
            assert_eq!(f.first().map(|p| p.0), Some(0));
            assert_eq!(f.last().map(|p| p.1), Some(w.len()));
            for win in f.windows(2) {
                assert_eq!(win[0].1, win[1].0);
                assert!(w[win[0].0..win[0].1] >= w[win[1].0..win[1].1]);
            }
            for &(s, e) in &f {
                assert!(is_regular_letters(&w[s..e]));
            }
        }
    }
}
