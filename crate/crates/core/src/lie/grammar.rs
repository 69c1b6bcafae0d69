//! Canonical text form of Lie elements.
//!
//! ```text
//! element  := "0" | term (("+" | "-") term)*
//! term     := ["-"] [coeff "*"] monomial
//! coeff    := int ["/" int]
//! monomial := letter | "[" monomial "," monomial "]"
//! ```
//!
//! Whitespace is insignificant. Monomials may be any bracketing; they are
//! rewritten into the regular basis on parse. Printing lists terms from the
//! carrier downwards, omits unit coefficients and writes `p/q` in lowest terms.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::algebra::FreeLie;
use super::element::{LieElement, Rational};
use crate::error::{Error, Result};

pub fn parse_element(lie: &FreeLie, text: &str) -> Result<LieElement> {
    let mut p = Parser { lie, src: text.as_bytes(), pos: 0 };
    let e = p.element()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

pub fn format_element(lie: &FreeLie, f: &LieElement) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in f.terms().rev().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = c.abs();
        if !abs.is_one() {
            out.push_str(&format_rational(&abs));
            out.push('*');
        }
        out.push_str(&lie.render_word(w));
    }
    out
}

pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

struct Parser<'a> {
    lie: &'a FreeLie,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn element(&mut self) -> Result<LieElement> {
        let mut acc = LieElement::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -Rational::one()
            }
            Some(b'+') => {
                self.pos += 1;
                Rational::one()
            }
            None => return Err(self.error("empty element")),
            _ => Rational::one(),
        };
        loop {
            let (coeff, m) = self.term()?;
            acc.add_scaled(&m, &(coeff * &sign));
            sign = match self.peek() {
                Some(b'+') => Rational::one(),
                Some(b'-') => -Rational::one(),
                _ => break,
            };
            self.pos += 1;
        }
        Ok(acc)
    }

    /// `[coeff "*"] monomial`, or a bare `0`.
    fn term(&mut self) -> Result<(Rational, LieElement)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.rational()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    Ok((coeff, self.monomial()?))
                } else if coeff.is_zero() {
                    Ok((coeff, LieElement::zero()))
                } else {
                    Err(self.error("expected `*` after coefficient"))
                }
            }
            _ => Ok((Rational::one(), self.monomial()?)),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let n = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let d = self.integer()?;
            if d.is_zero() {
                return Err(Error::Syntax { pos: at, msg: "zero denominator".into() });
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    fn monomial(&mut self) -> Result<LieElement> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let l = self.monomial()?;
                self.expect(b',')?;
                let r = self.monomial()?;
                self.expect(b']')?;
                Ok(self.lie.bracket(&l, &r))
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'.')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                self.lie.letter_named(name)
            }
            _ => Err(self.error("expected letter or `[`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::alphabet::Alphabet;
    use crate::lie::element::ratio;

    fn chi() -> FreeLie {
        FreeLie::new(Alphabet::new([("b1.2", 2), ("b1.3", 2), ("b2.3", 2), ("a1", 1), ("a2", 1), ("a3", 1)]).unwrap())
    }

    #[test]
    fn parses_basis_monomial() {
        let l = chi();
        let e = parse_element(&l, "[a1,a2]").unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(format_element(&l, &e), "[a1,a2]");
    }

    #[test]
    fn parses_two_terms() {
        let l = chi();
        let e = parse_element(&l, "1/2*[b1.2,a3] - [a1,[a1,a2]]").unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.leading().unwrap().1, &ratio(1, 2));
        assert_eq!(format_element(&l, &e), "1/2*[b1.2,a3] - [a1,[a1,a2]]");
    }

    #[test]
    fn antisymmetry_normalizes_to_zero() {
        let l = chi();
        assert!(parse_element(&l, "[a1,a1]").unwrap().is_zero());
        assert_eq!(format_element(&l, &LieElement::zero()), "0");
        assert!(parse_element(&l, "0").unwrap().is_zero());
    }

    #[test]
    fn non_regular_bracketings_are_rewritten() {
        let l = chi();
        let e = parse_element(&l, "[a2, a1]").unwrap();
        assert_eq!(format_element(&l, &e), "-[a1,a2]");
        let e = parse_element(&l, " - 2 * [ a2 , a1 ] + 4/6*a3").unwrap();
        assert_eq!(format_element(&l, &e), "2*[a1,a2] + 2/3*a3");
    }

    #[test]
    fn errors_carry_position() {
        let l = chi();
        assert!(matches!(parse_element(&l, "[a1,a9]"), Err(Error::UnknownLetter(n)) if n == "a9"));
        assert!(matches!(parse_element(&l, "[a1 a2]"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_element(&l, "3 a1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element(&l, "1/0*a1"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_element(&l, ""), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element(&l, "a1 a2"), Err(Error::Syntax { .. })));
    }
}
