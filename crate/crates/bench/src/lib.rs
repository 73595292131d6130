//! Fixtures shared by the benchmarks.

use hecke_workbench::harness::dominant_window;
use hecke_workbench::{AffineWeylGroup, Cocharacter};

/// A group with its memo disabled, so every iteration recomputes.
pub fn cold_group(label: &str) -> AffineWeylGroup {
    let mut g = AffineWeylGroup::preset(label).expect("known preset");
    g.disable_memo();
    g
}

/// Nonzero dominant pairs whose sum has height at most `height`, with
/// trivial Omega-class.
pub fn dominant_pairs(g: &AffineWeylGroup, height: i64) -> Vec<(Cocharacter, Cocharacter)> {
    let d = g.datum();
    let window: Vec<_> =
        dominant_window(d, height).into_iter().filter(|m| d.omega_class(m) == 0 && !m.is_zero()).collect();
    let mut out = Vec::new();
    for (i, mu) in window.iter().enumerate() {
        for nu in &window[i..] {
            if d.height(&(mu + nu)) <= height {
                out.push((mu.clone(), nu.clone()));
            }
        }
    }
    out
}
