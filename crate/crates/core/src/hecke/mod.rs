//! The Iwahori-Hecke algebra of `W~` in the `T`-basis.
//!
//! Relations: `T_omega T_w = T_{omega w}` for `omega` of length zero, and
//! for an affine simple reflection `s`
//!
//! ```text
//! T_s T_w = T_{sw}                        if l(sw) > l(w)
//!         = q T_{sw} + (q - 1) T_w        otherwise
//! ```
//!
//! so `T_s^2 = q + (q - 1) T_s`, which becomes `T_s^2 = -T_s` at `q = 0`.
//! `T_w` corresponds to the characteristic function `1_w` of `I w I`.

pub mod ring;
pub(crate) mod text;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::affine_weyl::{AffineWeylGroup, ExtAffineElement};
use crate::error::{Error, Result};
use crate::root_datum::Cocharacter;

pub use ring::{CoefficientRing, Coefficients, GenericQ, Poly, PrimeField};

/// A finitely supported combination of `T_w`, with no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElement<R: Coefficients> {
    ring: R,
    terms: BTreeMap<ExtAffineElement, R::Elem>,
}

impl<R: Coefficients> HeckeElement<R> {
    pub fn zero(ring: R) -> Self {
        HeckeElement { ring, terms: BTreeMap::new() }
    }

    /// Sums repeated elements and drops zero coefficients.
    pub fn from_terms(ring: R, terms: impl IntoIterator<Item = (ExtAffineElement, R::Elem)>) -> Self {
        let mut out = Self::zero(ring);
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    fn add_term(&mut self, w: ExtAffineElement, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = self.ring.add(e.get(), &c);
                if self.ring.is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<ExtAffineElement, R::Elem> {
        &self.terms
    }

    pub fn coefficient(&self, w: &ExtAffineElement) -> R::Elem {
        self.terms.get(w).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExtAffineElement> {
        self.terms.keys()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.descriptor().to_string(),
                other.ring.descriptor().to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let ring = self.ring.clone();
        Self::from_terms(ring.clone(), self.terms.iter().map(|(w, d)| (w.clone(), ring.mul(c, d))))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.ring.integer(-1)))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    w: ExtAffineElement,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct HeckeJson {
    ring: CoefficientRing,
    terms: Vec<TermJson>,
}

/// The Iwahori-Hecke algebra of a group over a fixed coefficient ring.
#[derive(Clone, Debug)]
pub struct IwahoriHecke<'g, R: Coefficients> {
    group: &'g AffineWeylGroup,
    ring: R,
}

impl<'g, R: Coefficients> IwahoriHecke<'g, R> {
    pub fn new(group: &'g AffineWeylGroup, ring: R) -> Self {
        IwahoriHecke { group, ring }
    }

    pub fn group(&self) -> &'g AffineWeylGroup {
        self.group
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn zero(&self) -> HeckeElement<R> {
        HeckeElement::zero(self.ring.clone())
    }

    pub fn t_basis(&self, w: ExtAffineElement) -> HeckeElement<R> {
        HeckeElement::from_terms(self.ring.clone(), [(w, self.ring.one())])
    }

    pub fn one(&self) -> HeckeElement<R> {
        self.t_basis(self.group.identity())
    }

    fn check(&self, a: &HeckeElement<R>) -> Result<()> {
        if a.ring != self.ring {
            return Err(Error::RingMismatch(
                a.ring.descriptor().to_string(),
                self.ring.descriptor().to_string(),
            ));
        }
        if let Some(w) = a.terms.keys().next() {
            self.group.check(w)?;
        }
        Ok(())
    }

    fn left_mul_simple(
        &self,
        j: usize,
        src: HashMap<ExtAffineElement, R::Elem>,
        q: &R::Elem,
        q_minus_one: &R::Elem,
    ) -> HashMap<ExtAffineElement, R::Elem> {
        let ring = &self.ring;
        let s = self.group.simple_reflection(j);
        let mut out: HashMap<ExtAffineElement, R::Elem> = HashMap::with_capacity(src.len());
        let mut put = |w: ExtAffineElement, c: R::Elem| {
            if ring.is_zero(&c) {
                return;
            }
            out.entry(w).and_modify(|e| *e = ring.add(e, &c)).or_insert(c);
        };
        for (w, c) in src {
            let sw = s.mul(&w);
            if self.group.is_left_descent(j, &w) {
                put(sw, ring.mul(&c, q));
                put(w, ring.mul(&c, q_minus_one));
            } else {
                put(sw, c);
            }
        }
        out.retain(|_, c| !ring.is_zero(c));
        out
    }

    /// `T_x * b` for a single basis element `x`, by folding the letters of a
    /// reduced word of `x` onto `b` from the right.
    fn basis_times(
        &self,
        x: &ExtAffineElement,
        b: &HeckeElement<R>,
    ) -> HashMap<ExtAffineElement, R::Elem> {
        let q = self.ring.q();
        let q_minus_one = self.ring.add(&q, &self.ring.integer(-1));
        let word = self.group.reduced_word(x);
        let mut cur: HashMap<ExtAffineElement, R::Elem> =
            b.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        for &j in word.letters.iter().rev() {
            cur = self.left_mul_simple(j as usize, cur, &q, &q_minus_one);
        }
        if word.omega.is_identity() {
            cur
        } else {
            cur.into_iter().map(|(w, c)| (word.omega.mul(&w), c)).collect()
        }
    }

    pub fn mul(&self, a: &HeckeElement<R>, b: &HeckeElement<R>) -> Result<HeckeElement<R>> {
        self.check(a)?;
        self.check(b)?;
        let ring = &self.ring;
        let left: Vec<(&ExtAffineElement, &R::Elem)> = a.terms.iter().collect();
        let merged = left
            .par_iter()
            .map(|(x, c)| {
                let mut part = self.basis_times(x, b);
                for v in part.values_mut() {
                    *v = ring.mul(c, v);
                }
                part
            })
            .reduce(HashMap::new, |mut acc, part| {
                for (w, c) in part {
                    acc.entry(w).and_modify(|e| *e = ring.add(e, &c)).or_insert(c);
                }
                acc
            });
        Ok(HeckeElement::from_terms(ring.clone(), merged))
    }

    /// `1_K = sum_{w in W} T_w`.
    pub fn one_k(&self) -> HeckeElement<R> {
        HeckeElement::from_terms(
            self.ring.clone(),
            self.group
                .weyl_group()
                .iter()
                .map(|w| (ExtAffineElement::from_weyl(w.clone()), self.ring.one())),
        )
    }

    /// `1_lambda = sum_{w in W t_lambda W} T_w`, the characteristic function
    /// of `K lambda(t) K`.
    pub fn double_coset_indicator(&self, lambda: &Cocharacter) -> Result<HeckeElement<R>> {
        self.group.datum().require_dominant(lambda)?;
        Ok(HeckeElement::from_terms(
            self.ring.clone(),
            self.group.double_coset(lambda).into_iter().map(|w| (w, self.ring.one())),
        ))
    }

    /// `z_mu = sum_{w in Adm(mu)} T_w`.
    pub fn z_mu(&self, mu: &Cocharacter) -> Result<HeckeElement<R>> {
        let adm = self.group.admissible_set(mu)?;
        Ok(HeckeElement::from_terms(
            self.ring.clone(),
            adm.into_iter().map(|w| (w, self.ring.one())),
        ))
    }

    /// Algebra generators: `T_{s_j}` for every affine simple reflection and
    /// `T_pi` for the Omega generator, if any.
    pub fn generators(&self) -> Vec<HeckeElement<R>> {
        let mut out: Vec<_> = (0..self.group.num_simple())
            .map(|j| self.t_basis(self.group.simple_reflection(j).clone()))
            .collect();
        if let Some(pi) = self.group.omega_generator() {
            out.push(self.t_basis(pi.clone()));
        }
        out
    }

    /// Commutes with every algebra generator. `T_pi` is invertible, so this
    /// also covers `T_pi^-1`.
    pub fn is_central(&self, a: &HeckeElement<R>) -> Result<bool> {
        for g in self.generators() {
            if self.mul(a, &g)? != self.mul(&g, a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical text: terms by length, then by element text.
    pub fn format(&self, a: &HeckeElement<R>) -> String {
        let mut rows: Vec<(usize, String, Poly)> = a
            .terms
            .iter()
            .map(|(w, c)| (self.group.length(w), self.group.format_element(w), self.ring.to_poly(c)))
            .collect();
        rows.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
        let terms: Vec<(Poly, String)> = rows.into_iter().map(|(_, w, c)| (c, w)).collect();
        text::format_terms(&terms)
    }

    pub fn parse(&self, src: &str) -> Result<HeckeElement<R>> {
        let terms = text::parse_terms(self.group, src)?;
        Ok(HeckeElement::from_terms(
            self.ring.clone(),
            terms.into_iter().map(|(c, w)| (w, self.ring.embed(&c))),
        ))
    }

    pub fn to_json(&self, a: &HeckeElement<R>) -> serde_json::Value {
        let j = HeckeJson {
            ring: a.ring.descriptor(),
            terms: a
                .terms
                .iter()
                .map(|(w, c)| TermJson { w: w.clone(), c: a.ring.to_poly(c).to_string() })
                .collect(),
        };
        serde_json::to_value(j).expect("plain data serializes")
    }

    pub fn from_json(&self, v: &serde_json::Value) -> Result<HeckeElement<R>> {
        let j: HeckeJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if j.ring != self.ring.descriptor() {
            return Err(Error::RingMismatch(j.ring.to_string(), self.ring.descriptor().to_string()));
        }
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            self.group.check(&t.w)?;
            let p: Poly = t.c.parse()?;
            terms.push((t.w, self.ring.embed(&p)));
        }
        Ok(HeckeElement::from_terms(self.ring.clone(), terms))
    }
}

/// Coefficientwise evaluation at `q -> q_image` and reduction mod `p`.
pub fn specialize(a: &HeckeElement<GenericQ>, target: &PrimeField) -> HeckeElement<PrimeField> {
    HeckeElement::from_terms(
        *target,
        a.terms.iter().map(|(w, c)| (w.clone(), target.embed(c))),
    )
}
