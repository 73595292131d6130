//! Textual element grammar.
//!
//! ```text
//! element := factor*            (juxtaposition is the product; empty is e)
//! factor  := "e" | "s" digits | "pi" | "pi^" int | "t[" int ("," int)* "]"
//! ```
//!
//! Canonical output is `pi^k s_{i1} ... s_{il}` from the reduced word, with
//! `pi^k` omitted when `k = 0` and `e` for the identity.

use super::{AffineWeylGroup, ExtAffineElement};
use crate::error::{Error, Result};
use crate::root_datum::Cocharacter;

impl AffineWeylGroup {
    pub fn format_element(&self, x: &ExtAffineElement) -> String {
        let word = self.reduced_word(x);
        let k = self.omega_exponent(x);
        let mut parts: Vec<String> = Vec::with_capacity(word.letters.len() + 1);
        if k != 0 {
            parts.push(format!("pi^{k}"));
        }
        parts.extend(word.letters.iter().map(|j| format!("s{j}")));
        if parts.is_empty() {
            "e".to_string()
        } else {
            parts.join(" ")
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<ExtAffineElement> {
        let mut acc = self.identity();
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        let err = |msg: &str| Error::Parse(format!("{msg} in element `{text}`"));
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() || c == '*' || c == '.' || c == 'e' {
                i += 1;
            } else if c == 's' {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                if end == start {
                    return Err(err("expected a digit after `s`"));
                }
                let j: usize = chars[start..end].iter().collect::<String>().parse().unwrap();
                if j >= self.num_simple() {
                    return Err(err(&format!("no simple reflection s{j}")));
                }
                acc = acc.mul(self.simple_reflection(j));
                i = end;
            } else if c == 'p' && chars.get(i + 1) == Some(&'i') {
                i += 2;
                let mut k = 1i64;
                if chars.get(i) == Some(&'^') {
                    let start = i + 1;
                    let mut end = start;
                    if chars.get(end) == Some(&'-') {
                        end += 1;
                    }
                    while end < chars.len() && chars[end].is_ascii_digit() {
                        end += 1;
                    }
                    k = chars[start..end]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| err("bad exponent after `pi^`"))?;
                    i = end;
                }
                acc = acc.mul(&self.omega_power(k)?);
            } else if c == 't' && chars.get(i + 1) == Some(&'[') {
                let close = chars[i..]
                    .iter()
                    .position(|&ch| ch == ']')
                    .ok_or_else(|| err("unclosed `t[`"))?;
                let body: String = chars[i + 1..=i + close].iter().collect();
                let lambda: Cocharacter = body.parse()?;
                self.datum().check_rank(&lambda)?;
                acc = acc.mul(&self.translation(lambda));
                i += close + 1;
            } else {
                return Err(err(&format!("unexpected `{c}`")));
            }
        }
        Ok(acc)
    }
}
