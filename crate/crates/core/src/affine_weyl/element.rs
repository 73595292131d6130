use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::root_datum::{dot, Cocharacter};

/// A finite Weyl group element, stored as its integer action matrix on
/// `X_*(T)` (row-major). The matrix is the canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: u8,
    m: SmallVec<[i64; 16]>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut m = SmallVec::from_elem(0, rank * rank);
        for i in 0..rank {
            m[i * rank + i] = 1;
        }
        WeylElement { rank: rank as u8, m }
    }

    /// `v -> v - <root, v> coroot`.
    pub fn reflection(root: &[i64], coroot: &Cocharacter) -> Self {
        let rank = root.len();
        let mut w = Self::identity(rank);
        for r in 0..rank {
            for c in 0..rank {
                w.m[r * rank + c] -= coroot.coords()[r] * root[c];
            }
        }
        w
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Option<Self> {
        let rank = rows.len();
        if rows.iter().any(|r| r.len() != rank) {
            return None;
        }
        Some(WeylElement { rank: rank as u8, m: rows.iter().flatten().copied().collect() })
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        (0..r).map(|i| self.m[i * r..(i + 1) * r].to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let r = self.rank();
        let mut m = SmallVec::from_elem(0, r * r);
        for i in 0..r {
            for k in 0..r {
                let a = self.m[i * r + k];
                if a == 0 {
                    continue;
                }
                for j in 0..r {
                    m[i * r + j] += a * other.m[k * r + j];
                }
            }
        }
        WeylElement { rank: self.rank, m }
    }

    pub fn apply(&self, v: &Cocharacter) -> Cocharacter {
        let r = self.rank();
        Cocharacter::new((0..r).map(|i| dot(&self.m[i * r..(i + 1) * r], v.coords())))
    }

    /// Weyl group elements have finite order, so `w^-1 = w^(n-1)`.
    pub fn inverse(&self) -> WeylElement {
        let id = Self::identity(self.rank());
        let mut prev = id.clone();
        let mut cur = self.clone();
        while cur != id {
            prev = cur.clone();
            cur = cur.mul(self);
        }
        prev
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// `t_lambda * w` in `W~`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffineElement {
    t: Cocharacter,
    w: WeylElement,
}

impl ExtAffineElement {
    pub fn new(t: Cocharacter, w: WeylElement) -> Self {
        debug_assert_eq!(t.rank(), w.rank());
        ExtAffineElement { t, w }
    }

    pub fn identity(rank: usize) -> Self {
        ExtAffineElement { t: Cocharacter::zero(rank), w: WeylElement::identity(rank) }
    }

    pub fn from_weyl(w: WeylElement) -> Self {
        ExtAffineElement { t: Cocharacter::zero(w.rank()), w }
    }

    pub fn translation_part(&self) -> &Cocharacter {
        &self.t
    }

    pub fn finite(&self) -> &WeylElement {
        &self.w
    }

    pub fn rank(&self) -> usize {
        self.t.rank()
    }

    pub fn is_identity(&self) -> bool {
        self.t.is_zero() && self.w.is_identity()
    }

    /// `(l1, w1)(l2, w2) = (l1 + w1 l2, w1 w2)`.
    pub fn mul(&self, other: &ExtAffineElement) -> ExtAffineElement {
        let moved = self.w.apply(&other.t);
        ExtAffineElement { t: &self.t + &moved, w: self.w.mul(&other.w) }
    }

    /// `(-w^-1 l, w^-1)`.
    pub fn inverse(&self) -> ExtAffineElement {
        let winv = self.w.inverse();
        let t = -&winv.apply(&self.t);
        ExtAffineElement { t, w: winv }
    }
}

impl fmt::Debug for ExtAffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(t{}, {:?})", self.t, self.w)
    }
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    t: Vec<i64>,
    w: Vec<Vec<i64>>,
}

impl Serialize for ExtAffineElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementJson { t: self.t.coords().to_vec(), w: self.w.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExtAffineElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ElementJson::deserialize(d)?;
        let w = WeylElement::from_rows(&j.w)
            .ok_or_else(|| serde::de::Error::custom("`w` must be a square matrix"))?;
        if w.rank() != j.t.len() {
            return Err(serde::de::Error::custom("`t` and `w` have different ranks"));
        }
        Ok(ExtAffineElement::new(Cocharacter::new(j.t), w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let x = ExtAffineElement::new(
            Cocharacter::new([1, 0]),
            WeylElement::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap(),
        );
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v, serde_json::json!({"t": [1, 0], "w": [[0, 1], [1, 0]]}));
        let back: ExtAffineElement = serde_json::from_value(v).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<ExtAffineElement>(r#"{"t":[1],"w":[[1,0],[0,1]]}"#).is_err());
    }

    #[test]
    fn inverse_is_two_sided() {
        let w = WeylElement::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let x = ExtAffineElement::new(Cocharacter::new([2, -1]), w);
        assert!(x.mul(&x.inverse()).is_identity());
        assert!(x.inverse().mul(&x).is_identity());
    }
}
