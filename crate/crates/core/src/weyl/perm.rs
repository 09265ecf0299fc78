use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the hyperoctahedral group acting on the ε-basis of `Z^n`:
/// `ε_j ↦ signs[j] · ε_{images[j]}` (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    images: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(images: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = images.len();
        if signs.len() != n {
            return Err(Error::Precondition("images and signs differ in length".into()));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Precondition(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Precondition("signs must be ±1".into()));
        }
        Ok(SignedPermutation { images, signs })
    }

    pub(crate) fn from_parts_unchecked(images: Vec<usize>, signs: Vec<i8>) -> Self {
        SignedPermutation { images, signs }
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// The sign change of the last coordinate; it lies outside `W(D_n)` and
    /// induces the graph automorphism swapping the last two nodes.
    pub fn last_sign_flip(n: usize) -> Self {
        let mut r = Self::identity(n);
        if n > 0 {
            r.signs[n - 1] = -1;
        }
        r
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    pub fn is_unsigned(&self) -> bool {
        self.signs.iter().all(|&s| s > 0)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rank();
        let mut images = vec![0; n];
        let mut signs = vec![1; n];
        for j in 0..n {
            let mid = other.images[j];
            images[j] = self.images[mid];
            signs[j] = other.signs[j] * self.signs[mid];
        }
        SignedPermutation { images, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut images = vec![0; n];
        let mut signs = vec![1; n];
        for j in 0..n {
            images[self.images[j]] = j;
            signs[self.images[j]] = self.signs[j];
        }
        SignedPermutation { images, signs }
    }

    /// Image of the weight `Σ z_j ε_j`.
    pub fn apply(&self, z: &[i64]) -> Vec<i64> {
        let mut out = vec![0; z.len()];
        for (j, &zj) in z.iter().enumerate() {
            out[self.images[j]] = i64::from(self.signs[j]) * zj;
        }
        out
    }

    pub fn fixes(&self, z: &[i64]) -> bool {
        z.iter()
            .enumerate()
            .all(|(j, &zj)| z[self.images[j]] == i64::from(self.signs[j]) * zj)
    }

    /// Signed cycle type: lengths of cycles whose sign product is +1, then of
    /// those with product −1, each sorted decreasingly.
    pub fn cycle_type(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut sign = 1i8;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                sign *= self.signs[j];
                len += 1;
                j = self.images[j];
            }
            if sign > 0 {
                positive.push(len);
            } else {
                negative.push(len);
            }
        }
        positive.sort_unstable_by(|a, b| b.cmp(a));
        negative.sort_unstable_by(|a, b| b.cmp(a));
        (positive, negative)
    }

    /// Number of cycles of the underlying permutation.
    pub fn cycle_count(&self) -> usize {
        let (p, m) = self.cycle_type();
        p.len() + m.len()
    }

    /// Multiplicity of the eigenvalue 1 on `Q^n`: one per positive cycle.
    pub fn eigenvalue_one_multiplicity(&self) -> usize {
        self.cycle_type().0.len()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.rank())
            .map(|j| {
                let sign = if self.signs[j] < 0 { "-" } else { "" };
                format!("e{}->{}e{}", j + 1, sign, self.images[j] + 1)
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
