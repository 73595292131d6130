//! The spherical algebra `H_K`, the monoid algebra `F_p[X_*(T)^+]`, and the
//! maps between them and the centre of `H_I`:
//!
//! - `S^-1(mu) = sum_{lambda <= mu} 1_lambda`
//! - `C(z) = z * 1_K`
//! - `B = C^-1 o S^-1`, with `B(mu) = z_mu`

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::affine_weyl::AffineWeylGroup;
use crate::error::{Error, Result};
use crate::hecke::{CoefficientRing, Coefficients, HeckeElement, IwahoriHecke, PrimeField};
use crate::root_datum::{Cocharacter, RootDatum};

/// A finite combination of dominant cocharacters over `F_p`, with no stored
/// zeros. Used both for `H_K` (basis `1_lambda`) and for the monoid algebra
/// (basis of monomials).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantCombination {
    ring: PrimeField,
    terms: BTreeMap<Cocharacter, u64>,
}

/// An element of `H_K` in the basis `1_lambda`.
pub type SphericalElement = DominantCombination;
/// An element of `F_p[X_*(T)^+]` in the monomial basis.
pub type DominantMonomial = DominantCombination;

impl DominantCombination {
    pub fn zero(ring: PrimeField) -> Self {
        DominantCombination { ring, terms: BTreeMap::new() }
    }

    /// Checks that every key is dominant for `datum`.
    pub fn new(
        datum: &RootDatum,
        ring: PrimeField,
        terms: impl IntoIterator<Item = (Cocharacter, u64)>,
    ) -> Result<Self> {
        let mut out = Self::zero(ring);
        for (mu, c) in terms {
            datum.require_dominant(&mu)?;
            out.add_term(mu, c);
        }
        Ok(out)
    }

    /// `1_mu` (or the monomial `mu`).
    pub fn basis(datum: &RootDatum, ring: PrimeField, mu: Cocharacter) -> Result<Self> {
        Self::new(datum, ring, [(mu, 1)])
    }

    fn add_term(&mut self, mu: Cocharacter, c: u64) {
        let c = c % self.ring.p();
        if c == 0 {
            return;
        }
        let sum = self.ring.add(self.terms.get(&mu).unwrap_or(&0), &c);
        if sum == 0 {
            self.terms.remove(&mu);
        } else {
            self.terms.insert(mu, sum);
        }
    }

    pub fn ring(&self) -> &PrimeField {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Cocharacter, u64> {
        &self.terms
    }

    pub fn coefficient(&self, mu: &Cocharacter) -> u64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.descriptor().to_string(),
                other.ring.descriptor().to_string(),
            ));
        }
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), *c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: u64) -> Self {
        let mut out = Self::zero(self.ring);
        for (mu, d) in &self.terms {
            out.add_term(mu.clone(), self.ring.mul(&c, d));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = CombinationJson {
            ring: self.ring.descriptor(),
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| CombinationTerm { mu: mu.clone(), c: c.to_string() })
                .collect(),
        };
        serde_json::to_value(j).expect("plain data serializes")
    }

    pub fn from_json(datum: &RootDatum, v: &serde_json::Value) -> Result<Self> {
        let j: CombinationJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let ring = match j.ring {
            CoefficientRing::PrimeField { p, q_image } => PrimeField::allowing_p2(p, q_image)?,
            CoefficientRing::GenericQ => {
                return Err(Error::RingMismatch("Z[q]".into(), "a prime field".into()))
            }
        };
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            datum.check_rank(&t.mu)?;
            let c: u64 = t.c.parse().map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.c)))?;
            terms.push((t.mu, c));
        }
        Self::new(datum, ring, terms)
    }
}

#[derive(Serialize, Deserialize)]
struct CombinationTerm {
    mu: Cocharacter,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct CombinationJson {
    ring: CoefficientRing,
    terms: Vec<CombinationTerm>,
}

/// Maps between `H_K`, `F_p[X_*(T)^+]` and the centre of `H_I` for one group
/// and one prime field.
#[derive(Clone, Debug)]
pub struct Satake<'g> {
    hecke: IwahoriHecke<'g, PrimeField>,
}

impl<'g> Satake<'g> {
    pub fn new(group: &'g AffineWeylGroup, ring: PrimeField) -> Self {
        Satake { hecke: IwahoriHecke::new(group, ring) }
    }

    pub fn hecke(&self) -> &IwahoriHecke<'g, PrimeField> {
        &self.hecke
    }

    pub fn group(&self) -> &'g AffineWeylGroup {
        self.hecke.group()
    }

    fn datum(&self) -> &'g RootDatum {
        self.hecke.group().datum()
    }

    fn ring(&self) -> PrimeField {
        *self.hecke.ring()
    }

    fn check(&self, a: &DominantCombination) -> Result<()> {
        if a.ring != self.ring() {
            return Err(Error::RingMismatch(
                a.ring.descriptor().to_string(),
                self.ring().descriptor().to_string(),
            ));
        }
        if let Some(mu) = a.terms.keys().next() {
            self.datum().check_rank(mu)?;
        }
        Ok(())
    }

    pub fn basis(&self, mu: Cocharacter) -> Result<DominantCombination> {
        DominantCombination::basis(self.datum(), self.ring(), mu)
    }

    /// `sum_{lambda <= mu} 1_lambda`.
    pub fn partial_sum(&self, mu: &Cocharacter) -> Result<SphericalElement> {
        self.datum().require_dominant(mu)?;
        Ok(DominantCombination::new(
            self.datum(),
            self.ring(),
            self.datum().dominant_below(mu).into_iter().map(|l| (l, 1)),
        )
        .expect("dominant_below yields dominant cocharacters"))
    }

    /// Coefficients of `a` in the basis `sum_{lambda <= mu} 1_lambda`, by
    /// peeling off a term of maximal height at each step.
    fn triangular_coordinates(&self, a: &DominantCombination) -> BTreeMap<Cocharacter, u64> {
        let d = self.datum();
        let ring = self.ring();
        let mut rest = a.clone();
        let mut out = BTreeMap::new();
        while let Some(mu) = rest
            .terms
            .keys()
            .max_by(|x, y| d.height(x).cmp(&d.height(y)).then_with(|| x.cmp(y)))
            .cloned()
        {
            let c = rest.coefficient(&mu);
            let neg = ring.neg(&c);
            for l in d.dominant_below(&mu) {
                rest.add_term(l, neg);
            }
            out.insert(mu, c);
        }
        out
    }

    pub fn to_iwahori(&self, a: &SphericalElement) -> Result<HeckeElement<PrimeField>> {
        self.check(a)?;
        let group = self.group();
        Ok(HeckeElement::from_terms(
            self.ring(),
            a.terms.iter().flat_map(|(l, &c)| group.double_coset(l).into_iter().map(move |w| (w, c))),
        ))
    }

    /// The unique `a` with `to_iwahori(a) = h`, if `h` is constant on every
    /// double coset `W t_lambda W`.
    pub fn from_iwahori(&self, h: &HeckeElement<PrimeField>) -> Result<SphericalElement> {
        if *h.ring() != self.ring() {
            return Err(Error::RingMismatch(
                h.ring().descriptor().to_string(),
                self.ring().descriptor().to_string(),
            ));
        }
        let group = self.group();
        let mut classes: BTreeMap<Cocharacter, u64> = BTreeMap::new();
        for (w, &c) in h.terms() {
            group.check(w)?;
            let l = group.spherical_class(w);
            match classes.get(&l) {
                Some(&d) if d != c => {
                    return Err(Error::NotBiInvariant(format!(
                        "coefficients {d} and {c} in the double coset of {l}"
                    )))
                }
                _ => {
                    classes.insert(l, c);
                }
            }
        }
        for l in classes.keys() {
            for w in group.double_coset(l) {
                if !h.terms().contains_key(&w) {
                    return Err(Error::NotBiInvariant(format!(
                        "T[{}] missing from the double coset of {l}",
                        group.format_element(&w)
                    )));
                }
            }
        }
        DominantCombination::new(self.datum(), self.ring(), classes)
    }

    /// `C(z) = z * 1_K` for central `z`.
    pub fn c_map(&self, z: &HeckeElement<PrimeField>) -> Result<SphericalElement> {
        if !self.hecke.is_central(z)? {
            return Err(Error::NotCentral(self.hecke.format(z)));
        }
        let h = self.hecke.mul(z, &self.hecke.one_k())?;
        self.from_iwahori(&h)
    }

    /// `C^-1`, sending `sum_{lambda <= mu} 1_lambda` to `z_mu`.
    pub fn c_inverse(&self, a: &SphericalElement) -> Result<HeckeElement<PrimeField>> {
        self.check(a)?;
        let mut out = self.hecke.zero();
        for (mu, c) in self.triangular_coordinates(a) {
            out = out.add(&self.hecke.z_mu(&mu)?.scale(&c))?;
        }
        Ok(out)
    }

    /// `S^-1(mu) = sum_{lambda <= mu} 1_lambda`, extended linearly.
    pub fn satake_inverse(&self, m: &DominantMonomial) -> Result<SphericalElement> {
        self.check(m)?;
        let mut out = DominantCombination::zero(self.ring());
        for (mu, &c) in &m.terms {
            out = out.add(&self.partial_sum(mu)?.scale(c))?;
        }
        Ok(out)
    }

    pub fn satake_forward(&self, a: &SphericalElement) -> Result<DominantMonomial> {
        self.check(a)?;
        DominantCombination::new(self.datum(), self.ring(), self.triangular_coordinates(a))
    }

    /// `B = C^-1 o S^-1`.
    pub fn bernstein_map(&self, m: &DominantMonomial) -> Result<HeckeElement<PrimeField>> {
        self.c_inverse(&self.satake_inverse(m)?)
    }

    /// The convolution product in `H_K`, computed in `H_I` with the central
    /// representative `C^-1(a)` on the left.
    pub fn spherical_mul(&self, a: &SphericalElement, b: &SphericalElement) -> Result<SphericalElement> {
        let h = self.hecke.mul(&self.c_inverse(a)?, &self.to_iwahori(b)?)?;
        self.from_iwahori(&h)
    }

    /// Matrix of `S^-1` on `mus`: entry `(i, j)` is the coefficient of
    /// `1_{mus[i]}` in `S^-1(mus[j])`.
    pub fn satake_matrix(&self, mus: &[Cocharacter]) -> Result<Vec<Vec<u64>>> {
        let cols: Vec<SphericalElement> = mus
            .iter()
            .map(|mu| self.satake_inverse(&self.basis(mu.clone())?))
            .collect::<Result<_>>()?;
        Ok(mus.iter().map(|l| cols.iter().map(|c| c.coefficient(l)).collect()).collect())
    }
}
