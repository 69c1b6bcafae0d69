use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::lie::{ratio, Alphabet, FreeLie, LieElement, Rank};

/// A possibly unordered `b` index pair; `b(i,i) = 0` and `b(j,i) = -b(i,j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BRef {
    pub i: usize,
    pub j: usize,
}

impl BRef {
    pub fn new(i: usize, j: usize) -> Self {
        BRef { i, j }
    }

    /// `(sign, (lo, hi))`, or `None` for a vanishing `b(i,i)`.
    pub fn resolve(self) -> Option<(i64, (usize, usize))> {
        use std::cmp::Ordering::*;
        match self.i.cmp(&self.j) {
            Equal => None,
            Less => Some((1, (self.i, self.j))),
            Greater => Some((-1, (self.j, self.i))),
        }
    }
}

/// Index sequence of the right-normed bracket `[x_{i_1}, ..., x_{i_n}]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GWord(pub Vec<usize>);

impl GWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All words of length `n` over indices `1..=m`, in lexicographic order.
    pub fn all(m: usize, n: usize) -> Vec<GWord> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w: Vec<usize>| {
                    (1..=m).map(move |i| {
                        let mut w = w.clone();
                        w.push(i);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(GWord).collect()
    }
}

/// The alphabet `b(1,2) > b(1,3) > ... > b(m-1,m) > a1 > ... > am`, with `b`
/// letters of weight 2 ordered by `(i, j)` and `a` letters of weight 1.
pub fn chi_alphabet(m: usize) -> Alphabet {
    let mut letters = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            letters.push((format!("b{i}.{j}"), 2));
        }
    }
    letters.extend((1..=m).map(|i| (format!("a{i}"), 1)));
    Alphabet::new(letters).expect("valid chi alphabet")
}

/// The free algebra on `a_i`, `b_{i,j}` together with the maps defined on it.
#[derive(Debug)]
pub struct ChiModel {
    m: usize,
    lie: Arc<FreeLie>,
    g: Arc<FreeLie>,
    derivations: Vec<Mutex<HashMap<crate::lie::AssocWord, LieElement>>>,
    derivation_images: Vec<Vec<LieElement>>,
}

impl ChiModel {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("rank m must be at least 1".into()));
        }
        let lie = Arc::new(FreeLie::new(chi_alphabet(m)));
        let g = Arc::new(FreeLie::new(Alphabet::free(m)));
        let mut model = ChiModel {
            m,
            lie,
            g,
            derivations: (0..m).map(|_| Mutex::default()).collect(),
            derivation_images: Vec::new(),
        };
        model.derivation_images = (1..=m).map(|s| model.generator_images(s)).collect();
        Ok(model)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The free algebra on the `a`, `b` letters.
    pub fn lie(&self) -> &Arc<FreeLie> {
        &self.lie
    }

    /// The free algebra on `x_1, ..., x_m`.
    pub fn g(&self) -> &Arc<FreeLie> {
        &self.g
    }

    pub fn a_rank(&self, i: usize) -> Rank {
        self.lie.alphabet().rank_of(&format!("a{i}")).expect("index in range")
    }

    pub fn b_rank(&self, i: usize, j: usize) -> Rank {
        self.lie.alphabet().rank_of(&format!("b{i}.{j}")).expect("index in range")
    }

    pub fn a(&self, i: usize) -> LieElement {
        assert!((1..=self.m).contains(&i), "index {i} out of range");
        self.lie.letter(self.a_rank(i))
    }

    pub fn b(&self, r: BRef) -> LieElement {
        assert!((1..=self.m).contains(&r.i) && (1..=self.m).contains(&r.j), "index out of range");
        match r.resolve() {
            None => LieElement::zero(),
            Some((sign, (i, j))) => self.lie.letter(self.b_rank(i, j)).scaled(&ratio(sign, 1)),
        }
    }

    pub fn bracket(&self, f: &LieElement, g: &LieElement) -> LieElement {
        self.lie.bracket(f, g)
    }

    pub fn right_normed(&self, entries: &[LieElement]) -> LieElement {
        self.lie.right_normed(entries)
    }

    fn a_bracket(&self, idx: &[usize]) -> Vec<LieElement> {
        idx.iter().map(|&i| self.a(i)).collect()
    }

    /// `[a_{i_1},...,a_{i_n}]` for odd `n`, `[a_{i_1},...,a_{i_{n-2}}, b_{i_{n-1},i_n}]`
    /// for even `n`, and `a_i` for a single letter.
    pub fn mu(&self, u: &GWord) -> Result<LieElement> {
        let n = u.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty bracket".into()));
        }
        Ok(if n % 2 == 1 { self.all_a(u) } else { self.tail_b(u) })
    }

    /// The parity swap of [`ChiModel::mu`]; defined for length at least 2.
    pub fn xi(&self, u: &GWord) -> Result<LieElement> {
        let n = u.len();
        if n < 2 {
            return Err(Error::InvalidArgument("xi needs a bracket of length at least 2".into()));
        }
        Ok(if n % 2 == 1 { self.tail_b(u) } else { self.all_a(u) })
    }

    fn all_a(&self, u: &GWord) -> LieElement {
        self.right_normed(&self.a_bracket(&u.0))
    }

    fn tail_b(&self, u: &GWord) -> LieElement {
        let n = u.len();
        let mut entries = self.a_bracket(&u.0[..n - 2]);
        entries.push(self.b(BRef::new(u.0[n - 2], u.0[n - 1])));
        self.right_normed(&entries)
    }

    /// `[b_{1,2}, a_2 (n times), a_3] - [[a_1,a_2], a_2 (n-1 times), b_{2,3}]`.
    pub fn f_n(&self, n: u32) -> Result<LieElement> {
        if n == 0 || n % 2 == 1 {
            return Err(Error::OddN(n));
        }
        if self.m < 3 {
            return Err(Error::InvalidArgument("f_n needs m >= 3".into()));
        }
        let n = n as usize;
        let mut first = vec![self.b(BRef::new(1, 2))];
        first.extend(std::iter::repeat_n(self.a(2), n));
        first.push(self.a(3));
        let mut second = vec![self.bracket(&self.a(1), &self.a(2))];
        second.extend(std::iter::repeat_n(self.a(2), n - 1));
        second.push(self.b(BRef::new(2, 3)));
        Ok(self.right_normed(&first).sub(&self.right_normed(&second)))
    }

    /// Images in the first and third coordinates of `g x g x g`:
    /// `a_i -> (x_i, -x_i)` and `b_{i,j} -> ([x_i,x_j], -[x_i,x_j])`.
    pub fn rho_l(&self, f: &LieElement) -> (LieElement, LieElement) {
        let mut first = Vec::new();
        let mut third = Vec::new();
        for letter in self.lie.alphabet().letters() {
            let img = self.g_image(&letter.name);
            third.push(img.neg());
            first.push(img);
        }
        (self.lie.map_homomorphism(f, &self.g, &first), self.lie.map_homomorphism(f, &self.g, &third))
    }

    fn g_image(&self, name: &str) -> LieElement {
        let x = |i: &str| self.g.letter_named(&format!("x{i}")).expect("index in range");
        match name.strip_prefix('a') {
            Some(i) => x(i),
            None => {
                let (i, j) = name[1..].split_once('.').expect("b letter");
                self.g.bracket(&x(i), &x(j))
            }
        }
    }

    fn generator_images(&self, s: usize) -> Vec<LieElement> {
        let half = ratio(1, 2);
        let a_s = self.a(s);
        self.lie
            .alphabet()
            .letters()
            .iter()
            .map(|letter| {
                let name = &letter.name;
                let img = match name.strip_prefix('a') {
                    Some(i) => {
                        let i: usize = i.parse().expect("a index");
                        self.bracket(&a_s, &self.a(i)).add(&self.b(BRef::new(s, i)))
                    }
                    None => {
                        let (i, j) = name[1..].split_once('.').expect("b letter");
                        let (i, j): (usize, usize) = (i.parse().expect("index"), j.parse().expect("index"));
                        let b = self.b(BRef::new(i, j));
                        self.bracket(&a_s, &b).add(&self.right_normed(&[a_s.clone(), self.a(i), self.a(j)]))
                    }
                };
                img.scaled(&half)
            })
            .collect()
    }

    /// The derivation `x_s .` applied to `f`.
    pub fn derive_action(&self, s: usize, f: &LieElement) -> LieElement {
        assert!((1..=self.m).contains(&s), "index {s} out of range");
        let mut memo = self.derivations[s - 1].lock().unwrap();
        self.lie.apply_derivation(f, &self.derivation_images[s - 1], &mut memo)
    }

    /// Action of the right-normed bracket `u` of generators of `g`.
    pub fn act(&self, u: &GWord, f: &LieElement) -> LieElement {
        match u.0.split_first() {
            None => f.clone(),
            Some((&s, [])) => self.derive_action(s, f),
            Some((&s, rest)) => {
                let rest = GWord(rest.to_vec());
                let inner = self.act(&rest, f);
                let outer = self.derive_action(s, f);
                self.derive_action(s, &inner).sub(&self.act(&rest, &outer))
            }
        }
    }

    /// Parses an element in the canonical grammar over this alphabet.
    pub fn parse(&self, text: &str) -> Result<LieElement> {
        crate::lie::parse_element(&self.lie, text)
    }

    pub fn format(&self, f: &LieElement) -> String {
        crate::lie::format_element(&self.lie, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_order_for_three() {
        let a = chi_alphabet(3);
        let names: Vec<_> = a.letters().iter().map(|l| l.name.as_str()).collect();
        assert_eq!(names, ["b1.2", "b1.3", "b2.3", "a1", "a2", "a3"]);
        assert_eq!(a.letters().iter().map(|l| l.weight).collect::<Vec<_>>(), [2, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn b_resolution() {
        let c = ChiModel::new(3).unwrap();
        assert!(c.b(BRef::new(2, 2)).is_zero());
        assert_eq!(c.b(BRef::new(2, 1)), c.b(BRef::new(1, 2)).neg());
    }

    #[test]
    fn mu_and_xi_examples() {
        let c = ChiModel::new(4).unwrap();
        let p = |s: &str| c.parse(s).unwrap();
        assert_eq!(c.mu(&GWord(vec![1, 2])).unwrap(), p("b1.2"));
        assert_eq!(c.mu(&GWord(vec![1, 2, 3])).unwrap(), p("[a1,[a2,a3]]"));
        assert_eq!(c.mu(&GWord(vec![1, 2, 3, 4])).unwrap(), p("[a1,[a2,b3.4]]"));
        assert_eq!(c.mu(&GWord(vec![3])).unwrap(), p("a3"));
        assert_eq!(c.xi(&GWord(vec![1, 2])).unwrap(), p("[a1,a2]"));
        assert_eq!(c.xi(&GWord(vec![1, 2, 3])).unwrap(), p("[a1,b2.3]"));
        assert!(c.xi(&GWord(vec![2, 2])).unwrap().is_zero());
        assert!(c.xi(&GWord(vec![2])).is_err());
    }

    #[test]
    fn f2_shape() {
        let c = ChiModel::new(3).unwrap();
        let f2 = c.f_n(2).unwrap();
        let expected = c.parse("[b1.2,[a2,[a2,a3]]] - [[a1,a2],[a2,b2.3]]").unwrap();
        assert_eq!(f2, expected);
        assert_eq!(c.lie().alphabet().format_word(f2.carrier().unwrap()), "b1.2 a2 a2 a3");
        assert!(f2.is_homogeneous());
        assert_eq!(f2.degree(), Some(5));
        assert!(matches!(c.f_n(3), Err(Error::OddN(3))));
        assert!(ChiModel::new(2).unwrap().f_n(2).is_err());
    }

    #[test]
    fn f_n_in_kernel_of_rho() {
        let c = ChiModel::new(3).unwrap();
        for n in [2, 4, 6] {
            let f = c.f_n(n).unwrap();
            assert_eq!(f.degree(), Some(n + 3));
            let (p, q) = c.rho_l(&f);
            assert!(p.is_zero() && q.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn rho_on_generators() {
        let c = ChiModel::new(2).unwrap();
        let (p, q) = c.rho_l(&c.a(1));
        let x1 = c.g().letter_named("x1").unwrap();
        assert_eq!((p, q), (x1.clone(), x1.neg()));
    }

    #[test]
    fn derivation_on_generators() {
        let c = ChiModel::new(2).unwrap();
        assert!(c.derive_action(1, &c.a(1)).is_zero());
        let expected = c.parse("1/2*[a2,a1] - 1/2*b1.2").unwrap();
        assert_eq!(c.derive_action(2, &c.a(1)), expected);
    }

    #[test]
    fn derivation_is_leibniz() {
        let c = ChiModel::new(3).unwrap();
        let u = c.parse("[a1,b2.3]").unwrap();
        let v = c.parse("[a2,a3]").unwrap();
        let lhs = c.derive_action(3, &c.bracket(&u, &v));
        let rhs = c.bracket(&c.derive_action(3, &u), &v).add(&c.bracket(&u, &c.derive_action(3, &v)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn act_on_brackets_is_commutator() {
        let c = ChiModel::new(2).unwrap();
        let f = c.parse("b1.2").unwrap();
        let lhs = c.act(&GWord(vec![1, 2]), &f);
        let rhs = c.derive_action(1, &c.derive_action(2, &f)).sub(&c.derive_action(2, &c.derive_action(1, &f)));
        assert_eq!(lhs, rhs);
    }
}
