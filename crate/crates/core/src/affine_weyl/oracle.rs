//! Brute-force reference computations. Each one takes a different route
//! from the production code in this module: subword enumeration instead of
//! the lifting property, Cayley-graph BFS and hyperplane counting instead of
//! the closed length formula.

use std::collections::{BTreeSet, HashMap};

use super::{pair_root, AffineWeylGroup, ExtAffineElement};
use crate::root_datum::Cocharacter;

/// Products of all `2^k` subwords of a reduced word for `y`.
pub fn subword_products(g: &AffineWeylGroup, y: &ExtAffineElement) -> BTreeSet<ExtAffineElement> {
    let word = g.reduced_word(y);
    let k = word.letters.len();
    assert!(k < 24, "subword enumeration is exponential");
    (0u32..1 << k)
        .map(|mask| {
            let picked: Vec<u8> = word
                .letters
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &j)| j)
                .collect();
            g.from_word(&word.omega, &picked)
        })
        .collect()
}

/// `x <= y` by the subword property.
pub fn bruhat_leq_subword(g: &AffineWeylGroup, x: &ExtAffineElement, y: &ExtAffineElement) -> bool {
    subword_products(g, y).contains(x)
}

/// `Adm(mu)` as the union of subword sets of the `t_lambda`.
pub fn admissible_set_subword(g: &AffineWeylGroup, mu: &Cocharacter) -> BTreeSet<ExtAffineElement> {
    g.datum()
        .weyl_orbit(mu)
        .into_iter()
        .flat_map(|l| subword_products(g, &g.translation(l)))
        .collect()
}

/// Word length in the affine simple reflections for every element of
/// `W_aff` within distance `max_len` of the identity.
pub fn cayley_ball(g: &AffineWeylGroup, max_len: usize) -> HashMap<ExtAffineElement, usize> {
    let mut dist = HashMap::from([(g.identity(), 0)]);
    let mut frontier = vec![g.identity()];
    for d in 1..=max_len {
        let mut next = Vec::new();
        for x in &frontier {
            for j in 0..g.num_simple() {
                let y = x.mul(g.simple_reflection(j));
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// Number of root hyperplanes `<alpha, v> = k` separating the base alcove
/// from its image under `x`, counted at a generic interior point.
pub fn hyperplane_length(g: &AffineWeylGroup, x: &ExtAffineElement) -> usize {
    let d = g.datum();
    let n = g.scale();
    let base = d.two_rho_coroot.scale(-1);
    let image = &x.translation_part().scale(n) + &x.finite().apply(&base);
    d.positive_roots
        .iter()
        .map(|alpha| {
            let p = pair_root(alpha, &base);
            let q = pair_root(alpha, &image);
            (q.div_euclid(n) - p.div_euclid(n)).unsigned_abs() as usize
        })
        .sum()
}
