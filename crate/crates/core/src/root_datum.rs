//! Based root data for split reductive groups with almost simple derived
//! group, together with the dominance order and Weyl orbits on cocharacters.
//!
//! Characters and cocharacters are both written in coordinates of `Z^rank`
//! and paired by the dot product.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Labels accepted by [`RootDatum::preset`].
pub const PRESETS: &[&str] = &["SL2", "GL2", "SL3", "GL3", "Sp4", "G2"];

pub(crate) type Coords = SmallVec<[i64; 4]>;

/// An element of the cocharacter lattice `X_*(T)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cocharacter(Coords);

impl Cocharacter {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        Cocharacter(coords.into_iter().collect())
    }

    pub fn zero(rank: usize) -> Self {
        Cocharacter(smallvec::smallvec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `<chi, self>` for a character given in coordinates.
    pub fn pair(&self, chi: &[i64]) -> i64 {
        dot(chi, &self.0)
    }

    pub fn scale(&self, k: i64) -> Cocharacter {
        Cocharacter(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Debug for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `1,0`, `[1,0]` or `[1, 0]`.
impl FromStr for Cocharacter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.trim().is_empty() {
            return Err(Error::Parse(format!("empty cocharacter `{s}`")));
        }
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad cocharacter coordinate `{t}` in `{s}`")))
            })
            .collect::<Result<Coords>>()
            .map(Cocharacter)
    }
}

impl Add for &Cocharacter {
    type Output = Cocharacter;
    fn add(self, rhs: &Cocharacter) -> Cocharacter {
        Cocharacter(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Cocharacter {
    type Output = Cocharacter;
    fn sub(self, rhs: &Cocharacter) -> Cocharacter {
        Cocharacter(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Cocharacter {
    type Output = Cocharacter;
    fn neg(self) -> Cocharacter {
        Cocharacter(self.0.iter().map(|a| -a).collect())
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A based root datum. Immutable after construction.
#[derive(Clone, Debug, Serialize)]
pub struct RootDatum {
    pub name: String,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Cocharacter>,
    pub positive_roots: Vec<Vec<i64>>,
    /// `positive_coroots[k]` is the coroot of `positive_roots[k]`.
    pub positive_coroots: Vec<Cocharacter>,
    pub highest_root: Vec<i64>,
    pub highest_coroot: Cocharacter,
    pub two_rho: Vec<i64>,
    /// Sum of the positive coroots.
    pub two_rho_coroot: Cocharacter,
    /// A cocharacter whose class generates `X_*(T)/Q^vee`, if that group is nontrivial.
    pub omega_generator: Option<Cocharacter>,
    #[serde(skip)]
    omega_form: Option<Vec<i64>>,
    #[serde(skip)]
    root_coefficients: Vec<Vec<i64>>,
}

impl RootDatum {
    pub fn preset(label: &str) -> Result<RootDatum> {
        let d = match label {
            "SL2" => Self::from_simple("SL2", 1, vec![vec![2]], vec![vec![1]], None),
            "GL2" => Self::from_simple(
                "GL2",
                2,
                vec![vec![1, -1]],
                vec![vec![1, -1]],
                Some((vec![1, 0], vec![1, 1])),
            ),
            // Simply connected types are written in the coroot basis; the
            // roots are then the rows of the Cartan matrix.
            "SL3" => Self::from_simple(
                "SL3",
                2,
                vec![vec![2, -1], vec![-1, 2]],
                vec![vec![1, 0], vec![0, 1]],
                None,
            ),
            "GL3" => Self::from_simple(
                "GL3",
                3,
                vec![vec![1, -1, 0], vec![0, 1, -1]],
                vec![vec![1, -1, 0], vec![0, 1, -1]],
                Some((vec![1, 0, 0], vec![1, 1, 1])),
            ),
            // alpha_1 short, alpha_2 long.
            "Sp4" => Self::from_simple(
                "Sp4",
                2,
                vec![vec![2, -1], vec![-2, 2]],
                vec![vec![1, 0], vec![0, 1]],
                None,
            ),
            "G2" => Self::from_simple(
                "G2",
                2,
                vec![vec![2, -1], vec![-3, 2]],
                vec![vec![1, 0], vec![0, 1]],
                None,
            ),
            other => return Err(Error::UnknownPreset(other.to_string())),
        };
        Ok(d)
    }

    fn from_simple(
        name: &str,
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        omega: Option<(Vec<i64>, Vec<i64>)>,
    ) -> RootDatum {
        let r = simple_roots.len();
        let simple_coroots: Vec<Cocharacter> =
            simple_coroots.into_iter().map(Cocharacter::new).collect();

        // Reflection closure over the positive roots: s_i permutes the
        // positive roots other than alpha_i.
        let mut roots: Vec<(Vec<i64>, Cocharacter, Vec<i64>)> = (0..r)
            .map(|i| {
                let mut coeff = vec![0; r];
                coeff[i] = 1;
                (simple_roots[i].clone(), simple_coroots[i].clone(), coeff)
            })
            .collect();
        let mut queue: VecDeque<usize> = (0..r).collect();
        while let Some(k) = queue.pop_front() {
            for i in 0..r {
                let (beta, beta_vee, coeff) = roots[k].clone();
                let n = dot(&beta, simple_coroots[i].coords());
                let m = simple_coroots[i].pair(&simple_roots[i]);
                debug_assert_eq!(m, 2);
                let new_coeff: Vec<i64> = coeff
                    .iter()
                    .enumerate()
                    .map(|(j, c)| if j == i { c - n } else { *c })
                    .collect();
                if new_coeff.iter().any(|&c| c < 0) || new_coeff == coeff {
                    continue;
                }
                if roots.iter().any(|(_, _, c)| *c == new_coeff) {
                    continue;
                }
                let new_root: Vec<i64> = beta
                    .iter()
                    .zip(&simple_roots[i])
                    .map(|(b, a)| b - n * a)
                    .collect();
                let nv = beta_vee.pair(&simple_roots[i]);
                let new_coroot = &beta_vee - &simple_coroots[i].scale(nv);
                roots.push((new_root, new_coroot, new_coeff));
                queue.push_back(roots.len() - 1);
            }
        }
        roots.sort_by(|a, b| {
            let ha: i64 = a.2.iter().sum();
            let hb: i64 = b.2.iter().sum();
            ha.cmp(&hb).then_with(|| b.2.cmp(&a.2))
        });

        let positive_roots: Vec<Vec<i64>> = roots.iter().map(|r| r.0.clone()).collect();
        let positive_coroots: Vec<Cocharacter> = roots.iter().map(|r| r.1.clone()).collect();
        let root_coefficients: Vec<Vec<i64>> = roots.iter().map(|r| r.2.clone()).collect();
        let top = roots.last().expect("at least one simple root");
        let mut two_rho = vec![0; rank];
        for beta in &positive_roots {
            for (t, b) in two_rho.iter_mut().zip(beta) {
                *t += b;
            }
        }
        let two_rho_coroot = positive_coroots
            .iter()
            .fold(Cocharacter::zero(rank), |acc, c| &acc + c);

        RootDatum {
            name: name.to_string(),
            rank,
            simple_roots,
            simple_coroots,
            highest_root: top.0.clone(),
            highest_coroot: top.1.clone(),
            positive_roots,
            positive_coroots,
            two_rho,
            two_rho_coroot,
            omega_generator: omega.as_ref().map(|(g, _)| Cocharacter::new(g.iter().copied())),
            omega_form: omega.map(|(_, f)| f),
            root_coefficients,
        }
    }

    /// Number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// `C[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_coroots
            .iter()
            .map(|cv| self.simple_roots.iter().map(|a| cv.pair(a)).collect())
            .collect()
    }

    /// Coefficients of each positive root in the simple roots.
    pub fn root_coefficients(&self) -> &[Vec<i64>] {
        &self.root_coefficients
    }

    pub fn check_rank(&self, mu: &Cocharacter) -> Result<()> {
        if mu.rank() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: mu.rank() });
        }
        Ok(())
    }

    pub fn is_dominant(&self, mu: &Cocharacter) -> Result<bool> {
        self.check_rank(mu)?;
        Ok(self.is_dominant_unchecked(mu))
    }

    pub(crate) fn is_dominant_unchecked(&self, mu: &Cocharacter) -> bool {
        self.simple_roots.iter().all(|a| mu.pair(a) >= 0)
    }

    pub(crate) fn require_dominant(&self, mu: &Cocharacter) -> Result<()> {
        if !self.is_dominant(mu)? {
            return Err(Error::NotDominant(mu.to_string()));
        }
        Ok(())
    }

    /// `<2rho, mu>`.
    pub fn height(&self, mu: &Cocharacter) -> i64 {
        mu.pair(&self.two_rho)
    }

    /// Simple reflection `s_i(l) = l - <alpha_i, l> alpha_i^vee`.
    pub fn reflect(&self, i: usize, l: &Cocharacter) -> Cocharacter {
        let n = l.pair(&self.simple_roots[i]);
        l - &self.simple_coroots[i].scale(n)
    }

    /// Writes `mu - lambda` in the simple coroots, if it lies in their
    /// rational span.
    pub fn coroot_coordinates(&self, diff: &Cocharacter) -> Option<Vec<Ratio<i64>>> {
        let r = self.semisimple_rank();
        let cartan = self.cartan_matrix();
        // sum_i C[i][j] c_i = <alpha_j, diff>
        let mut m: Vec<Vec<Ratio<i64>>> = (0..r)
            .map(|j| {
                let mut row: Vec<Ratio<i64>> =
                    (0..r).map(|i| Ratio::from_integer(cartan[i][j])).collect();
                row.push(Ratio::from_integer(diff.pair(&self.simple_roots[j])));
                row
            })
            .collect();
        for col in 0..r {
            let pivot = (col..r).find(|&k| m[k][col] != Ratio::from_integer(0))?;
            m.swap(col, pivot);
            let p = m[col][col];
            for x in m[col].iter_mut() {
                *x /= p;
            }
            for k in 0..r {
                if k != col && m[k][col] != Ratio::from_integer(0) {
                    let f = m[k][col];
                    let pivot_row = m[col].clone();
                    for (x, y) in m[k].iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
        let c: Vec<Ratio<i64>> = m.iter().map(|row| row[r]).collect();
        // The Cartan system only sees the pairing with the roots; confirm the
        // combination reproduces `diff` coordinatewise.
        for (k, &d) in diff.coords().iter().enumerate() {
            let v: Ratio<i64> = c
                .iter()
                .zip(&self.simple_coroots)
                .map(|(ci, cv)| *ci * cv.coords()[k])
                .sum();
            if v != Ratio::from_integer(d) {
                return None;
            }
        }
        Some(c)
    }

    /// `lambda <= mu` in the dominance order.
    pub fn dominance_leq(&self, lambda: &Cocharacter, mu: &Cocharacter) -> Result<bool> {
        self.check_rank(lambda)?;
        self.check_rank(mu)?;
        let diff = mu - lambda;
        Ok(match self.coroot_coordinates(&diff) {
            Some(c) => c.iter().all(|x| x.is_integer() && *x >= Ratio::from_integer(0)),
            None => false,
        })
    }

    pub fn weyl_orbit(&self, mu: &Cocharacter) -> BTreeSet<Cocharacter> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([mu.clone()]);
        seen.insert(mu.clone());
        while let Some(l) = queue.pop_front() {
            for i in 0..self.semisimple_rank() {
                let m = self.reflect(i, &l);
                if seen.insert(m.clone()) {
                    queue.push_back(m);
                }
            }
        }
        seen
    }

    /// The dominant element of the Weyl orbit of `l`.
    pub fn dominant_representative(&self, l: &Cocharacter) -> Cocharacter {
        let mut cur = l.clone();
        'outer: loop {
            for (i, a) in self.simple_roots.iter().enumerate() {
                if cur.pair(a) < 0 {
                    cur = self.reflect(i, &cur);
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Class of `l` in `X_*(T)/Q^vee`, as an integer (always 0 when the
    /// quotient is trivial).
    pub fn omega_class(&self, l: &Cocharacter) -> i64 {
        self.omega_form.as_ref().map_or(0, |f| l.pair(f))
    }

    /// All dominant `lambda <= mu`, highest first.
    pub fn dominant_below(&self, mu: &Cocharacter) -> Vec<Cocharacter> {
        let r = self.semisimple_rank();
        // Each step down by a simple coroot lowers the height by 2 and
        // dominant cocharacters have nonnegative height.
        let budget = (self.height(mu) / 2).max(0);
        let mut out = Vec::new();
        let mut c = vec![0i64; r];
        fn rec(
            d: &RootDatum,
            mu: &Cocharacter,
            c: &mut Vec<i64>,
            k: usize,
            left: i64,
            out: &mut Vec<Cocharacter>,
        ) {
            if k == c.len() {
                let mut l = mu.clone();
                for (ci, cv) in c.iter().zip(&d.simple_coroots) {
                    l = &l - &cv.scale(*ci);
                }
                if d.is_dominant_unchecked(&l) {
                    out.push(l);
                }
                return;
            }
            for v in 0..=left {
                c[k] = v;
                rec(d, mu, c, k + 1, left - v, out);
            }
            c[k] = 0;
        }
        rec(self, mu, &mut c, 0, budget, &mut out);
        out.sort_by(|a, b| self.height(b).cmp(&self.height(a)).then_with(|| a.cmp(b)));
        out
    }

    /// Dominant cocharacters of height at most `max_height` whose class in
    /// `X_*(T)/Q^vee` is at most `max_class` in absolute value, sorted by
    /// height and then coordinates.
    pub fn dominant_window(&self, max_height: i64, max_class: i64) -> Vec<Cocharacter> {
        let bound = max_height.max(max_class).max(1);
        let mut out = Vec::new();
        let mut coords = vec![-bound; self.rank];
        loop {
            let mu = Cocharacter::new(coords.iter().copied());
            if self.is_dominant_unchecked(&mu)
                && self.height(&mu) <= max_height
                && self.omega_class(&mu).abs() <= max_class
            {
                out.push(mu);
            }
            let mut k = 0;
            loop {
                if k == self.rank {
                    out.sort_by(|a, b| self.height(a).cmp(&self.height(b)).then_with(|| a.cmp(b)));
                    return out;
                }
                coords[k] += 1;
                if coords[k] > bound {
                    coords[k] = -bound;
                    k += 1;
                } else {
                    break;
                }
            }
        }
    }

    /// Invariant violations, empty for a valid datum.
    pub fn validate(&self) -> Vec<String> {
        let mut bad = Vec::new();
        for (i, (a, cv)) in self.simple_roots.iter().zip(&self.simple_coroots).enumerate() {
            if cv.pair(a) != 2 {
                bad.push(format!("<alpha_{i}, alpha_{i}^vee> != 2"));
            }
            if a.len() != self.rank || cv.rank() != self.rank {
                bad.push(format!("simple root {i} has wrong length"));
            }
        }
        for (i, cv) in self.simple_coroots.iter().enumerate() {
            if cv.pair(&self.two_rho) != 2 {
                bad.push(format!("<2rho, alpha_{i}^vee> != 2"));
            }
        }
        for (beta, bv) in self.positive_roots.iter().zip(&self.positive_coroots) {
            if bv.pair(beta) != 2 {
                bad.push(format!("root {beta:?} does not pair to 2 with its coroot"));
            }
        }
        if self.coroot_coordinates(&Cocharacter::zero(self.rank)).is_none() {
            bad.push("Cartan matrix is singular".into());
        }
        let top = self.root_coefficients.last().cloned().unwrap_or_default();
        if self.root_coefficients.iter().any(|c| c.iter().zip(&top).any(|(x, t)| x > t)) {
            bad.push("highest root does not dominate all positive roots".into());
        }
        if let (Some(g), Some(_)) = (&self.omega_generator, &self.omega_form) {
            if self.omega_class(g) != 1 {
                bad.push("omega generator does not have class 1".into());
            }
            for cv in &self.simple_coroots {
                if self.omega_class(cv) != 0 {
                    bad.push("omega class form does not vanish on coroots".into());
                }
            }
        }
        bad
    }
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.simple_roots == other.simple_roots
            && self.simple_coroots == other.simple_coroots
    }
}

impl Eq for RootDatum {}
