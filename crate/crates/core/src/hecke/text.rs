//! Hecke element text grammar.
//!
//! ```text
//! expr   := "0" | ["+"|"-"] term (("+"|"-") term)*
//! term   := factor ("*" factor)*        exactly one factor is T[...]
//! factor := int | "q" ["^" int] | "(" poly ")" | "T[" element "]"
//! ```
//!
//! For example `T[e] + (q-1)*T[s0] - 2*T[s1 s0]`.

use crate::affine_weyl::{AffineWeylGroup, ExtAffineElement};
use crate::error::{Error, Result};

use super::ring::Poly;

pub(crate) struct Cursor<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

enum Factor {
    Coeff(Poly),
    Basis(String),
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, chars: src.chars().collect(), pos: 0 }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn done(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat('+') {
            Some(false)
        } else if self.eat('-') {
            Some(true)
        } else {
            None
        }
    }

    fn factor(&mut self, allow_basis: bool) -> Result<Factor> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(Factor::Coeff(Poly::constant(n as i64)))
            }
            Some('q') => {
                self.pos += 1;
                let mut deg = 1;
                if self.eat('^') {
                    deg = self.uint()? as usize;
                }
                Ok(Factor::Coeff(Poly::monomial(1, deg)))
            }
            Some('(') => {
                self.pos += 1;
                let p = self.poly_expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(Factor::Coeff(p))
            }
            Some('T') if allow_basis => {
                self.pos += 1;
                if !self.eat('[') {
                    return Err(self.err("expected `[` after `T`"));
                }
                let start = self.pos;
                let mut depth = 1;
                while self.pos < self.chars.len() {
                    match self.chars[self.pos] {
                        '[' => depth += 1,
                        ']' => {
                            depth -= 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        _ => {}
                    }
                    self.pos += 1;
                }
                if depth != 0 {
                    return Err(self.err("unclosed `T[`"));
                }
                let body: String = self.chars[start..self.pos].iter().collect();
                self.pos += 1;
                Ok(Factor::Basis(body))
            }
            _ => Err(self.err("expected a factor")),
        }
    }

    fn poly_term(&mut self) -> Result<Poly> {
        let mut acc = Poly::constant(1);
        loop {
            match self.factor(false)? {
                Factor::Coeff(p) => acc = acc.mul(&p),
                Factor::Basis(_) => unreachable!(),
            }
            if !self.eat('*') {
                return Ok(acc);
            }
        }
    }

    pub(crate) fn poly_expr(&mut self) -> Result<Poly> {
        let neg = self.sign() == Some(true);
        let mut acc = self.poly_term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            let save = self.pos;
            match self.sign() {
                Some(neg) => {
                    let t = self.poly_term()?;
                    acc = acc.add(&if neg { t.neg() } else { t });
                }
                None => {
                    self.pos = save;
                    return Ok(acc);
                }
            }
        }
    }

    fn hecke_term(&mut self) -> Result<(Poly, String)> {
        let mut coeff = Poly::constant(1);
        let mut basis = None;
        loop {
            match self.factor(true)? {
                Factor::Coeff(p) => coeff = coeff.mul(&p),
                Factor::Basis(b) => {
                    if basis.replace(b).is_some() {
                        return Err(self.err("a term has two `T[...]` factors"));
                    }
                }
            }
            if !self.eat('*') {
                break;
            }
        }
        let basis = basis.ok_or_else(|| self.err("term without a `T[...]` factor"))?;
        Ok((coeff, basis))
    }

    pub(crate) fn hecke_expr(&mut self) -> Result<Vec<(Poly, String)>> {
        self.skip_ws();
        if self.src.trim() == "0" {
            self.pos = self.chars.len();
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut neg = self.sign() == Some(true);
        loop {
            let (c, b) = self.hecke_term()?;
            out.push((if neg { c.neg() } else { c }, b));
            match self.sign() {
                Some(n) => neg = n,
                None => break,
            }
        }
        self.skip_ws();
        if !self.done() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(out)
    }
}

/// Parses a Hecke expression into (polynomial coefficient, element) pairs;
/// repeated elements are not merged here.
pub(crate) fn parse_terms(
    group: &AffineWeylGroup,
    text: &str,
) -> Result<Vec<(Poly, ExtAffineElement)>> {
    Cursor::new(text)
        .hecke_expr()?
        .into_iter()
        .map(|(c, b)| Ok((c, group.parse_element(&b)?)))
        .collect()
}

/// Formats (polynomial, element text) pairs that are already in display order.
pub(crate) fn format_terms(terms: &[(Poly, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, w)) in terms.iter().enumerate() {
        let neg = c.leading() < 0;
        let c = if neg { c.neg() } else { c.clone() };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let coeff = if c == Poly::constant(1) {
            String::new()
        } else if c.coeffs().iter().filter(|&&x| x != 0).count() == 1 {
            format!("{c}*")
        } else {
            format!("({c})*")
        };
        out.push_str(&format!("{coeff}T[{w}]"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_mixed_terms() {
        let mut c = Cursor::new("T[e] + (q-1)*T[s0] - 2*q*T[t[1,0] s1]");
        let terms = c.hecke_expr().unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[1].0, Poly::from_coeffs(vec![-1, 1]));
        assert_eq!(terms[2], (Poly::monomial(-2, 1), "t[1,0] s1".to_string()));
        assert!(Cursor::new("3").hecke_expr().is_err());
        assert!(Cursor::new("T[e]*T[s0]").hecke_expr().is_err());
        assert!(Cursor::new("T[e").hecke_expr().is_err());
        assert_eq!(Cursor::new(" 0 ").hecke_expr().unwrap(), vec![]);
    }

    #[test]
    fn format_shapes() {
        let terms = vec![
            (Poly::constant(1), "e".to_string()),
            (Poly::from_coeffs(vec![-1, 1]), "s0".to_string()),
            (Poly::constant(-2), "s1 s0".to_string()),
            (Poly::from_coeffs(vec![1, -1]), "s1".to_string()),
        ];
        assert_eq!(format_terms(&terms), "T[e] + (q-1)*T[s0] - 2*T[s1 s0] - (q-1)*T[s1]");
        assert_eq!(format_terms(&[(Poly::constant(-1), "s0".into())]), "-T[s0]");
    }
}
