//! The extended affine Weyl group `W~ = X_*(T) x| W`.
//!
//! Elements are pairs `(lambda, w)` standing for `t_lambda * w`, acting on
//! `X_*(T) (x) R` by `v -> lambda + w v`. The base alcove is the one in the
//! antidominant chamber touching the origin,
//! `{ v : -1 < <alpha, v> < 0 for all alpha > 0 }`, so that
//!
//! ```text
//! l(t_lambda w) = sum_{alpha>0, w^-1 alpha>0} |<alpha,lambda>|
//!               + sum_{alpha>0, w^-1 alpha<0} |<alpha,lambda> + 1|
//! ```
//!
//! and the affine simple reflection is `s_0 = t_{-theta^vee} s_theta`.
//! With this normalization `(lambda, w_0)` is the longest element of
//! `W t_lambda W` for dominant `lambda`, and `l(t_mu) = <2rho, mu>`.
//!
//! Affine simple reflections are labelled `0..=r`; label `i >= 1` is the
//! finite simple reflection for `datum.simple_roots[i - 1]`.

mod bruhat;
mod element;
pub mod grammar;
pub mod oracle;

pub use bruhat::AdmissibleRow;
pub use element::{ExtAffineElement, WeylElement};

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::root_datum::{dot, Cocharacter, RootDatum};

/// `x = omega * s_{letters[0]} * ... * s_{letters[k-1]}` with `k = l(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct ReducedWord {
    pub omega: ExtAffineElement,
    pub letters: Vec<u8>,
}

/// In-memory memo for reduced words and lower Bruhat intervals.
#[derive(Default)]
pub(crate) struct Memo {
    pub(crate) words: RwLock<HashMap<ExtAffineElement, ReducedWord>>,
    pub(crate) intervals: RwLock<HashMap<ExtAffineElement, Arc<Vec<ExtAffineElement>>>>,
}

/// A root datum together with everything needed to compute in its extended
/// affine Weyl group.
pub struct AffineWeylGroup {
    datum: RootDatum,
    weyl: Vec<WeylElement>,
    longest: WeylElement,
    /// `generators[j]` is the affine simple reflection `s_j`.
    generators: Vec<ExtAffineElement>,
    omega_generator: Option<ExtAffineElement>,
    /// Denominator placing `-2rho^vee / scale` inside the base alcove.
    scale: i64,
    memo: Option<Memo>,
}

impl std::fmt::Debug for AffineWeylGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AffineWeylGroup").field("group", &self.datum.name).finish()
    }
}

impl AffineWeylGroup {
    pub fn new(datum: RootDatum) -> Self {
        let rank = datum.rank;
        let simple: Vec<WeylElement> = (0..datum.semisimple_rank())
            .map(|i| WeylElement::reflection(&datum.simple_roots[i], &datum.simple_coroots[i]))
            .collect();

        let mut weyl = vec![WeylElement::identity(rank)];
        let mut seen: BTreeSet<WeylElement> = weyl.iter().cloned().collect();
        let mut queue = VecDeque::from([WeylElement::identity(rank)]);
        while let Some(w) = queue.pop_front() {
            for s in &simple {
                let ws = w.mul(s);
                if seen.insert(ws.clone()) {
                    weyl.push(ws.clone());
                    queue.push_back(ws);
                }
            }
        }

        let s_theta = WeylElement::reflection(&datum.highest_root, &datum.highest_coroot);
        let mut generators =
            vec![ExtAffineElement::new(datum.highest_coroot.scale(-1), s_theta)];
        generators.extend(
            simple.iter().map(|s| ExtAffineElement::new(Cocharacter::zero(rank), s.clone())),
        );

        let scale = datum.two_rho_coroot.pair(&datum.highest_root) + 1;
        let mut g = AffineWeylGroup {
            longest: WeylElement::identity(rank),
            datum,
            weyl,
            generators,
            omega_generator: None,
            scale,
            memo: Some(Memo::default()),
        };
        let n_pos = g.datum.positive_roots.len();
        g.longest = g
            .weyl
            .iter()
            .find(|w| g.length(&ExtAffineElement::from_weyl((*w).clone())) == n_pos)
            .cloned()
            .expect("finite Weyl group has a longest element");
        g.omega_generator = g
            .datum
            .omega_generator
            .clone()
            .map(|c| g.omega_part(&g.translation(c)));
        g
    }

    pub fn preset(label: &str) -> Result<Self> {
        Ok(Self::new(RootDatum::preset(label)?))
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn name(&self) -> &str {
        &self.datum.name
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    /// Number of affine simple reflections, `r + 1`.
    pub fn num_simple(&self) -> usize {
        self.generators.len()
    }

    /// Drops the memo so every query is recomputed.
    pub fn disable_memo(&mut self) {
        self.memo = None;
    }

    pub fn memo_enabled(&self) -> bool {
        self.memo.is_some()
    }

    pub(crate) fn memo(&self) -> Option<&Memo> {
        self.memo.as_ref()
    }

    pub fn identity(&self) -> ExtAffineElement {
        ExtAffineElement::identity(self.rank())
    }

    pub fn translation(&self, lambda: Cocharacter) -> ExtAffineElement {
        ExtAffineElement::new(lambda, WeylElement::identity(self.rank()))
    }

    /// `t_lambda^{w_0} = (lambda, w_0)`.
    pub fn translation_longest(&self, lambda: Cocharacter) -> ExtAffineElement {
        ExtAffineElement::new(lambda, self.longest.clone())
    }

    pub fn simple_reflection(&self, j: usize) -> &ExtAffineElement {
        &self.generators[j]
    }

    pub fn longest_weyl(&self) -> &WeylElement {
        &self.longest
    }

    /// The finite Weyl group, identity first.
    pub fn weyl_group(&self) -> &[WeylElement] {
        &self.weyl
    }

    /// The chosen generator of `Omega` (the length-zero part of the
    /// preset's Omega generator cocharacter), if `Omega` is nontrivial.
    pub fn omega_generator(&self) -> Option<&ExtAffineElement> {
        self.omega_generator.as_ref()
    }

    pub fn check(&self, x: &ExtAffineElement) -> Result<()> {
        if x.rank() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: x.rank() });
        }
        Ok(())
    }

    pub fn multiply(&self, x: &ExtAffineElement, y: &ExtAffineElement) -> Result<ExtAffineElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.mul(y))
    }

    pub fn length(&self, x: &ExtAffineElement) -> usize {
        let u = x.finite().apply(&self.datum.two_rho_coroot);
        let mut len = 0i64;
        for alpha in &self.datum.positive_roots {
            let a = x.translation_part().pair(alpha);
            // w^-1 alpha > 0 iff <w^-1 alpha, 2rho^vee> > 0 iff <alpha, w 2rho^vee> > 0
            len += if u.pair(alpha) > 0 { a.abs() } else { (a + 1).abs() };
        }
        len as usize
    }

    /// `x * b` for the scaled base point `b = -2rho^vee` (scaled by `self.scale`).
    fn base_point_image(&self, x: &ExtAffineElement) -> Cocharacter {
        let wb = x.finite().apply(&self.datum.two_rho_coroot);
        &x.translation_part().scale(self.scale) - &wb
    }

    /// Whether `l(s_j x) < l(x)`: the wall of `s_j` separates the base
    /// alcove from `x` applied to it.
    pub fn is_left_descent(&self, j: usize, x: &ExtAffineElement) -> bool {
        let v = self.base_point_image(x);
        if j == 0 {
            v.pair(&self.datum.highest_root) < -self.scale
        } else {
            v.pair(&self.datum.simple_roots[j - 1]) > 0
        }
    }

    pub fn is_right_descent(&self, x: &ExtAffineElement, j: usize) -> bool {
        self.is_left_descent(j, &x.inverse())
    }

    pub fn left_descent(&self, x: &ExtAffineElement) -> Option<usize> {
        (0..self.num_simple()).find(|&j| self.is_left_descent(j, x))
    }

    pub fn reduced_word(&self, x: &ExtAffineElement) -> ReducedWord {
        if let Some(memo) = self.memo() {
            if let Some(w) = memo.words.read().unwrap().get(x) {
                return w.clone();
            }
        }
        // Peel right descents off x^-1's left side: x s_j < x iff s_j x^-1 < x^-1.
        let mut inv = x.inverse();
        let mut peeled = Vec::new();
        'outer: loop {
            for j in 0..self.num_simple() {
                if self.is_left_descent(j, &inv) {
                    inv = self.generators[j].mul(&inv);
                    peeled.push(j as u8);
                    continue 'outer;
                }
            }
            break;
        }
        peeled.reverse();
        let word = ReducedWord { omega: inv.inverse(), letters: peeled };
        if let Some(memo) = self.memo() {
            memo.words.write().unwrap().insert(x.clone(), word.clone());
        }
        word
    }

    pub fn from_word(&self, omega: &ExtAffineElement, letters: &[u8]) -> ExtAffineElement {
        letters
            .iter()
            .fold(omega.clone(), |acc, &j| acc.mul(&self.generators[j as usize]))
    }

    /// The length-zero element `omega` with `x = omega * w_a`, `w_a` in `W_aff`.
    pub fn omega_part(&self, x: &ExtAffineElement) -> ExtAffineElement {
        self.reduced_word(x).omega
    }

    /// `x = omega * w_a` with `l(w_a) = l(x)`.
    pub fn omega_decompose(&self, x: &ExtAffineElement) -> (ExtAffineElement, ExtAffineElement) {
        let omega = self.omega_part(x);
        let rest = omega.inverse().mul(x);
        (omega, rest)
    }

    /// Integer `k` with `omega_part(x) = pi^k` (0 when Omega is trivial).
    pub fn omega_exponent(&self, x: &ExtAffineElement) -> i64 {
        self.datum.omega_class(x.translation_part())
    }

    pub fn omega_power(&self, k: i64) -> Result<ExtAffineElement> {
        if k == 0 {
            return Ok(self.identity());
        }
        let g = self.omega_generator.as_ref().ok_or(Error::NoOmegaGenerator)?;
        let base = if k > 0 { g.clone() } else { g.inverse() };
        Ok((0..k.unsigned_abs()).fold(self.identity(), |acc, _| acc.mul(&base)))
    }

    /// `W t_lambda W`, sorted.
    pub fn double_coset(&self, lambda: &Cocharacter) -> Vec<ExtAffineElement> {
        let t = self.translation(lambda.clone());
        let set: BTreeSet<ExtAffineElement> = self
            .weyl
            .iter()
            .flat_map(|u| {
                let ut = ExtAffineElement::from_weyl(u.clone()).mul(&t);
                self.weyl.iter().map(move |v| ut.mul(&ExtAffineElement::from_weyl(v.clone())))
            })
            .collect();
        set.into_iter().collect()
    }

    /// The dominant `lambda` with `x` in `W t_lambda W`.
    pub fn spherical_class(&self, x: &ExtAffineElement) -> Cocharacter {
        self.datum.dominant_representative(x.translation_part())
    }

    /// Elements of length `<= max_len` in `W_aff`, left-multiplied by each
    /// `pi^k` with `|k| <= omega_range` (just `W_aff` when Omega is trivial).
    pub fn elements_up_to(&self, max_len: usize, omega_range: i64) -> Vec<ExtAffineElement> {
        let mut seen: BTreeSet<ExtAffineElement> = BTreeSet::new();
        let mut frontier = vec![self.identity()];
        seen.insert(self.identity());
        for _ in 0..max_len {
            let mut next = Vec::new();
            for x in &frontier {
                for g in &self.generators {
                    let y = x.mul(g);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        let range = if self.omega_generator.is_some() { omega_range } else { 0 };
        let mut out: Vec<ExtAffineElement> = (-range..=range)
            .flat_map(|k| {
                let w = self.omega_power(k).expect("generator exists for nonzero range");
                seen.iter().map(move |x| w.mul(x)).collect::<Vec<_>>()
            })
            .collect();
        out.sort();
        out
    }

    pub(crate) fn scale(&self) -> i64 {
        self.scale
    }
}

/// `<alpha, v>` helper for oracles.
pub(crate) fn pair_root(alpha: &[i64], v: &Cocharacter) -> i64 {
    dot(alpha, v.coords())
}
