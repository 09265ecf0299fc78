use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{GroupSpec, WeylType};

/// Distinguishes the two classes of a type-D Weyl group that share an
/// all-even, all-positive double partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    Plain,
    Exceptional,
}

/// A (double) partition of `n` labelling a Weyl class, equivalently a class
/// of maximal tori.
///
/// Positive parts become split cyclic factors of order `q^k - 1`, negative
/// parts non-split factors of order `q^k + 1`.
///
/// The compact text form lists positive parts joined by `+`, then every
/// negative part prefixed by `-`, then `x` for the exceptional variant:
/// `[3, 2, 1*]` is `3+2-1`, `[-, 2*]` is `-2` and the exceptional `[2, 2]`
/// is `2+2x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct WeylClassLabel {
    pub positive_parts: Vec<usize>,
    pub negative_parts: Vec<usize>,
    pub variant: Variant,
}

impl WeylClassLabel {
    pub fn new(positive_parts: Vec<usize>, negative_parts: Vec<usize>, variant: Variant) -> Self {
        WeylClassLabel {
            positive_parts,
            negative_parts,
            variant,
        }
    }

    /// A plain label with only positive parts (the type-A case).
    pub fn partition(parts: &[usize]) -> Self {
        Self::new(parts.to_vec(), Vec::new(), Variant::Plain)
    }

    pub fn double(positive: &[usize], negative: &[usize]) -> Self {
        Self::new(positive.to_vec(), negative.to_vec(), Variant::Plain)
    }

    pub fn exceptional(parts: &[usize]) -> Self {
        Self::new(parts.to_vec(), Vec::new(), Variant::Exceptional)
    }

    pub fn size(&self) -> usize {
        self.positive_parts.iter().sum::<usize>() + self.negative_parts.iter().sum::<usize>()
    }

    /// Total number of parts (cycles of the representative).
    pub fn num_parts(&self) -> usize {
        self.positive_parts.len() + self.negative_parts.len()
    }

    pub fn is_exceptional(&self) -> bool {
        self.variant == Variant::Exceptional
    }

    /// True for an all-even, all-positive label: the type-B classes that
    /// split in type D.
    pub fn splits_in_type_d(&self) -> bool {
        self.negative_parts.is_empty()
            && !self.positive_parts.is_empty()
            && self.positive_parts.iter().all(|k| k % 2 == 0)
    }

    /// Block lengths in canonical order, paired with whether the block is
    /// non-split.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.positive_parts
            .iter()
            .map(|&k| (k, false))
            .chain(self.negative_parts.iter().map(|&k| (k, true)))
    }

    pub fn validate(&self, spec: &GroupSpec) -> Result<()> {
        let fail = |reason: &str| {
            Err(Error::LabelMismatch {
                label: self.to_string(),
                spec: spec.to_string(),
                reason: reason.to_string(),
            })
        };
        if self.positive_parts.iter().chain(&self.negative_parts).any(|&k| k == 0) {
            return fail("parts must be positive");
        }
        if !is_weakly_decreasing(&self.positive_parts) || !is_weakly_decreasing(&self.negative_parts) {
            return fail("parts must be weakly decreasing");
        }
        if self.size() != spec.n {
            return fail("parts must sum to n");
        }
        let l = self.negative_parts.len();
        match spec.weyl_type() {
            WeylType::A => {
                if l != 0 || self.is_exceptional() {
                    return fail("type A labels are plain partitions");
                }
            }
            WeylType::B => {
                if self.is_exceptional() {
                    return fail("exceptional variant exists only in type D");
                }
            }
            WeylType::D => {
                if !l.is_multiple_of(2) {
                    return fail("type D needs an even number of negative parts");
                }
                if self.is_exceptional() && !self.splits_in_type_d() {
                    return fail("exceptional variant needs all parts even and positive");
                }
            }
            WeylType::TwistedD => {
                if l % 2 != 1 {
                    return fail("twisted type D needs an odd number of negative parts");
                }
                if self.is_exceptional() {
                    return fail("exceptional variant exists only in untwisted type D");
                }
            }
        }
        Ok(())
    }
}

fn is_weakly_decreasing(parts: &[usize]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

impl fmt::Display for WeylClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos: Vec<String> = self.positive_parts.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", pos.join("+"))?;
        for k in &self.negative_parts {
            write!(f, "-{k}")?;
        }
        if self.is_exceptional() {
            write!(f, "x")?;
        }
        Ok(())
    }
}

impl FromStr for WeylClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed class label {s:?}"));
        let s = s.trim();
        let (body, variant) = match s.strip_suffix('x') {
            Some(rest) => (rest, Variant::Exceptional),
            None => (s, Variant::Plain),
        };
        let (pos_text, neg_text) = match body.find('-') {
            Some(i) => (&body[..i], &body[i..]),
            None => (body, ""),
        };
        let positive_parts = if pos_text.is_empty() {
            Vec::new()
        } else {
            pos_text
                .split('+')
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        let negative_parts = if neg_text.is_empty() {
            Vec::new()
        } else {
            neg_text[1..]
                .split('-')
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        if positive_parts.is_empty() && negative_parts.is_empty() {
            return Err(bad());
        }
        Ok(WeylClassLabel {
            positive_parts,
            negative_parts,
            variant,
        })
    }
}

impl From<WeylClassLabel> for String {
    fn from(label: WeylClassLabel) -> String {
        label.to_string()
    }
}

impl TryFrom<String> for WeylClassLabel {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// All partitions of `n` as weakly decreasing vectors, largest first part first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All ordered pairs of partitions with total size `n`.
pub fn double_partitions(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for pos_size in (0..=n).rev() {
        for pos in partitions(pos_size) {
            for neg in partitions(n - pos_size) {
                out.push((pos.clone(), neg));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn double_partition_counts() {
        // 1, 2, 5, 10, 20, 36: number of conjugacy classes of W(B_n)
        let counts: Vec<usize> = (0..=5).map(|n| double_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 10, 20, 36]);
    }

    #[test]
    fn compact_form() {
        let l = WeylClassLabel::double(&[3, 2], &[1]);
        assert_eq!(l.to_string(), "3+2-1");
        assert_eq!(WeylClassLabel::double(&[], &[2]).to_string(), "-2");
        assert_eq!(WeylClassLabel::double(&[], &[1, 1]).to_string(), "-1-1");
        assert_eq!(WeylClassLabel::exceptional(&[2, 2]).to_string(), "2+2x");
        for text in ["3+2-1", "-2", "-1-1", "2+2x", "1+1+1", "4"] {
            let parsed: WeylClassLabel = text.parse().unwrap();
            assert_eq!(parsed.to_string(), text);
        }
    }

    #[test]
    fn malformed_labels_rejected() {
        for text in ["", "x", "3++1", "a", "-", "2-"] {
            assert!(text.parse::<WeylClassLabel>().is_err(), "{text}");
        }
    }
}
