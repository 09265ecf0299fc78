use std::collections::HashMap;

use itertools::Itertools;

use super::perm::SignedPermutation;
use super::WeylType;

/// All elements of the Weyl group of the given type and rank. For the
/// twisted type-D case this is `W(D_n)` itself; the twist acts on it by
/// conjugation with [`SignedPermutation::last_sign_flip`].
pub fn elements(weyl_type: WeylType, n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for images in (0..n).permutations(n) {
        match weyl_type {
            WeylType::A => out.push(SignedPermutation::from_parts_unchecked(images, vec![1; n])),
            _ => {
                for mask in 0u32..(1 << n) {
                    let negatives = mask.count_ones() as usize;
                    let even_only = matches!(weyl_type, WeylType::D | WeylType::TwistedD);
                    if even_only && negatives % 2 == 1 {
                        continue;
                    }
                    let signs = (0..n).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect();
                    out.push(SignedPermutation::from_parts_unchecked(images.clone(), signs));
                }
            }
        }
    }
    out
}

/// Element lookup table for a finite group given by its element list.
pub struct GroupIndex<'a> {
    pub elements: &'a [SignedPermutation],
    index: HashMap<&'a SignedPermutation, usize>,
}

impl<'a> GroupIndex<'a> {
    pub fn new(elements: &'a [SignedPermutation]) -> Self {
        let index = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        GroupIndex { elements, index }
    }

    pub fn position(&self, g: &SignedPermutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Partition of the group into left cosets `gA`, given the elements of
    /// the subgroup `A`. Returns one representative per coset.
    pub fn left_coset_representatives(&self, subgroup: &[SignedPermutation]) -> Vec<usize> {
        let mut assigned = vec![false; self.len()];
        let mut reps = Vec::new();
        for (i, g) in self.elements.iter().enumerate() {
            if assigned[i] {
                continue;
            }
            reps.push(i);
            for a in subgroup {
                let k = self
                    .position(&g.compose(a))
                    .expect("subgroup element outside the group");
                assigned[k] = true;
            }
        }
        reps
    }
}
