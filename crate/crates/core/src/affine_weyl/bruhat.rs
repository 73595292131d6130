use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use serde::Serialize;

use super::{AffineWeylGroup, ExtAffineElement};
use crate::error::Result;
use crate::root_datum::Cocharacter;

/// One row of the `A(mu)` strata table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibleRow {
    pub element: String,
    pub length: usize,
}

impl AffineWeylGroup {
    /// Bruhat order on `W~` via the lifting property: for `s y < y`,
    /// `x <= y` iff `s x <= s y` (when `s x < x`) or `x <= s y` (otherwise).
    /// Elements in different `Omega`-components are incomparable.
    pub fn bruhat_leq(&self, x: &ExtAffineElement, y: &ExtAffineElement) -> bool {
        let mut x = x.clone();
        let mut y = y.clone();
        loop {
            let (lx, ly) = (self.length(&x), self.length(&y));
            if lx >= ly {
                return lx == ly && x == y;
            }
            let s = self.left_descent(&y).expect("positive length has a descent");
            if self.is_left_descent(s, &x) {
                x = self.simple_reflection(s).mul(&x);
            }
            y = self.simple_reflection(s).mul(&y);
        }
    }

    /// `{ x : x <= y }`, sorted.
    ///
    /// Built along a reduced word `y = omega s_1 ... s_k`: if `v s > v` then
    /// `[e, v s] = [e, v] u [e, v] s`.
    pub fn lower_interval(&self, y: &ExtAffineElement) -> Arc<Vec<ExtAffineElement>> {
        if let Some(memo) = self.memo() {
            if let Some(v) = memo.intervals.read().unwrap().get(y) {
                return v.clone();
            }
        }
        let word = self.reduced_word(y);
        let mut set: HashSet<ExtAffineElement> = HashSet::from([word.omega.clone()]);
        for &j in &word.letters {
            let s = self.simple_reflection(j as usize);
            let shifted: Vec<_> = set.iter().map(|x| x.mul(s)).collect();
            set.extend(shifted);
        }
        let mut out: Vec<_> = set.into_iter().collect();
        out.sort();
        let out = Arc::new(out);
        if let Some(memo) = self.memo() {
            memo.intervals.write().unwrap().insert(y.clone(), out.clone());
        }
        out
    }

    /// `Adm(mu) = { w : w <= t_lambda for some lambda in W mu }`, sorted.
    pub fn admissible_set(&self, mu: &Cocharacter) -> Result<Vec<ExtAffineElement>> {
        self.datum().require_dominant(mu)?;
        let mut set = BTreeSet::new();
        for lambda in self.datum().weyl_orbit(mu) {
            set.extend(self.lower_interval(&self.translation(lambda)).iter().cloned());
        }
        Ok(set.into_iter().collect())
    }

    /// Strata of `A(mu)`: one row per admissible element with its length,
    /// ordered by length and then by the textual form.
    pub fn a_mu_report(&self, mu: &Cocharacter) -> Result<Vec<AdmissibleRow>> {
        let adm = self.admissible_set(mu)?;
        let mut rows: Vec<AdmissibleRow> = adm
            .iter()
            .map(|x| AdmissibleRow { element: self.format_element(x), length: self.length(x) })
            .collect();
        rows.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.element.cmp(&b.element)));
        Ok(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::root_datum::PRESETS;

    fn co(v: &[i64]) -> Cocharacter {
        Cocharacter::new(v.iter().copied())
    }

    #[test]
    fn bruhat_examples() {
        let g = AffineWeylGroup::preset("SL2").unwrap();
        let s0 = g.simple_reflection(0).clone();
        let s1 = g.simple_reflection(1).clone();
        let s0s1 = s0.mul(&s1);
        let s1s0 = s1.mul(&s0);
        assert!(g.bruhat_leq(&s0s1, &s0s1));
        assert!(g.bruhat_leq(&s0, &s0s1));
        assert!(!g.bruhat_leq(&s1s0, &s0s1));
        assert!(g.bruhat_leq(&g.identity(), &s1s0));

        let gl2 = AffineWeylGroup::preset("GL2").unwrap();
        let pi = gl2.omega_generator().unwrap().clone();
        assert!(!gl2.bruhat_leq(&gl2.identity(), &pi));
        assert!(!gl2.bruhat_leq(&pi, &gl2.simple_reflection(1).mul(gl2.simple_reflection(0))));
    }

    #[test]
    fn admissible_examples() {
        let g = AffineWeylGroup::preset("SL2").unwrap();
        assert_eq!(g.admissible_set(&co(&[0])).unwrap(), vec![g.identity()]);
        let adm = g.admissible_set(&co(&[1])).unwrap();
        let s0 = g.simple_reflection(0).clone();
        let s1 = g.simple_reflection(1).clone();
        let want: BTreeSet<_> =
            [g.identity(), s0.clone(), s1.clone(), s0.mul(&s1), s1.mul(&s0)].into_iter().collect();
        assert_eq!(adm.into_iter().collect::<BTreeSet<_>>(), want);
        for m in 1..=5 {
            assert_eq!(g.admissible_set(&co(&[m])).unwrap().len(), 4 * m as usize + 1);
        }

        let gl2 = AffineWeylGroup::preset("GL2").unwrap();
        let adm = gl2.admissible_set(&co(&[1, 0])).unwrap();
        assert_eq!(adm.len(), 3);
        assert!(adm.contains(gl2.omega_generator().unwrap()));
        assert!(adm.contains(&gl2.translation(co(&[1, 0]))));
        assert!(adm.contains(&gl2.translation(co(&[0, 1]))));

        assert!(matches!(g.admissible_set(&co(&[-1])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn a_mu_report_examples() {
        let g = AffineWeylGroup::preset("SL2").unwrap();
        let rows = g.a_mu_report(&co(&[0])).unwrap();
        assert_eq!(rows, vec![AdmissibleRow { element: "e".into(), length: 0 }]);
        let lens: Vec<_> = g.a_mu_report(&co(&[1])).unwrap().iter().map(|r| r.length).collect();
        assert_eq!(lens, vec![0, 1, 1, 2, 2]);
        let gl2 = AffineWeylGroup::preset("GL2").unwrap();
        let lens: Vec<_> =
            gl2.a_mu_report(&co(&[1, 0])).unwrap().iter().map(|r| r.length).collect();
        assert_eq!(lens, vec![0, 1, 1]);
    }

    #[test]
    fn admissible_sets_are_closed_with_translation_tops() {
        for p in PRESETS {
            let g = AffineWeylGroup::preset(p).unwrap();
            for mu in g.datum().dominant_window(6, 1) {
                let adm = g.admissible_set(&mu).unwrap();
                let set: HashSet<_> = adm.iter().cloned().collect();
                let top = g.length(&g.translation(mu.clone()));
                assert_eq!(top as i64, g.datum().height(&mu));
                for x in &adm {
                    assert!(g.length(x) <= top);
                    for j in 0..g.num_simple() {
                        // downward closure: every x s < x stays inside
                        let xs = x.mul(g.simple_reflection(j));
                        if g.length(&xs) < g.length(x) {
                            assert!(set.contains(&xs), "{p} {mu}");
                        }
                    }
                }
                let maximal: BTreeSet<_> =
                    adm.iter().filter(|x| g.length(x) == top).cloned().collect();
                let tops: BTreeSet<_> =
                    g.datum().weyl_orbit(&mu).into_iter().map(|l| g.translation(l)).collect();
                assert_eq!(maximal, tops, "{p} {mu}");
            }
        }
    }
}
