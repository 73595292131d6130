//! Coefficient rings: integer polynomials in `q`, and prime fields with a
//! chosen image of `q`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer polynomial in `q`, lowest degree first, without trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly(Vec<i64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        Poly(vec![c]).trimmed()
    }

    pub fn q() -> Self {
        Poly(vec![0, 1])
    }

    pub fn monomial(c: i64, deg: usize) -> Self {
        let mut v = vec![0; deg + 1];
        v[deg] = c;
        Poly(v).trimmed()
    }

    pub fn from_coeffs(c: Vec<i64>) -> Self {
        Poly(c).trimmed()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
                .collect(),
        )
        .trimmed()
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trimmed()
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(1), |acc, _| acc.mul(self))
    }

    /// Value at `q = x` modulo `p`, in `[0, p)`.
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let mut acc: u64 = 0;
        for &c in self.0.iter().rev() {
            acc = ((acc as u128 * x as u128) % p as u128) as u64;
            acc = (acc + c.rem_euclid(p as i64) as u64) % p;
        }
        acc
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Highest degree first: `q^2+2*q-3`, `q-1`, `-1`, `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let a = c.unsigned_abs();
            let body = match (deg, a) {
                (0, _) => a.to_string(),
                (1, 1) => "q".to_string(),
                (1, _) => format!("{a}*q"),
                (_, 1) => format!("q^{deg}"),
                _ => format!("{a}*q^{deg}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl std::str::FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly> {
        let mut p = crate::hecke::text::Cursor::new(s);
        let v = p.poly_expr()?;
        p.skip_ws();
        if !p.done() {
            return Err(Error::Parse(format!("trailing input in polynomial `{s}`")));
        }
        Ok(v)
    }
}

/// Serializable description of a coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoefficientRing {
    GenericQ,
    PrimeField { p: u64, q_image: u64 },
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::GenericQ => write!(f, "Z[q]"),
            CoefficientRing::PrimeField { p, q_image } => write!(f, "F_{p} (q -> {q_image})"),
        }
    }
}

/// A commutative coefficient ring for Hecke algebra elements.
pub trait Coefficients: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn embed(&self, p: &Poly) -> Self::Elem;
    /// Canonical polynomial representative (a constant in `[0, p)` for prime fields).
    fn to_poly(&self, a: &Self::Elem) -> Poly;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn descriptor(&self) -> CoefficientRing;

    fn one(&self) -> Self::Elem {
        self.embed(&Poly::constant(1))
    }

    fn integer(&self, n: i64) -> Self::Elem {
        self.embed(&Poly::constant(n))
    }

    fn q(&self) -> Self::Elem {
        self.embed(&Poly::q())
    }
}

/// `Z[q]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenericQ;

impl Coefficients for GenericQ {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn embed(&self, p: &Poly) -> Poly {
        p.clone()
    }
    fn to_poly(&self, a: &Poly) -> Poly {
        a.clone()
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }
    fn neg(&self, a: &Poly) -> Poly {
        a.neg()
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::GenericQ
    }
}

/// `F_p` with `q` sent to `q_image` (0 by default: `q` is a power of `p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    q_image: u64,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl PrimeField {
    /// Odd prime `p`, `q -> 0`.
    pub fn new(p: u64) -> Result<Self> {
        Self::with_q_image(p, 0)
    }

    pub fn with_q_image(p: u64, q_image: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        Self::unchecked_characteristic(p, q_image)
    }

    /// Permits `p = 2` for experimentation.
    pub fn allowing_p2(p: u64, q_image: u64) -> Result<Self> {
        Self::unchecked_characteristic(p, q_image)
    }

    fn unchecked_characteristic(p: u64, q_image: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p, q_image: q_image % p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q_image(&self) -> u64 {
        self.q_image
    }
}

impl Coefficients for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn embed(&self, p: &Poly) -> u64 {
        p.eval_mod(self.q_image, self.p)
    }
    fn to_poly(&self, a: &u64) -> Poly {
        Poly::constant(*a as i64)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::PrimeField { p: self.p, q_image: self.q_image }
    }
}
