//! Canonical maximal tori as products of cyclic blocks, and q-character
//! tests by exponent arithmetic.
//!
//! A block of length `k` starting at position `s` is generated by
//! `(b, b^q, …, b^{q^{k-1}})` in coordinates `s..s+k`, where `b` has order
//! `q^k - 1` (split) or `q^k + 1` (non-split). A weight `μ = Σ z_i ε_i` sends
//! the generator to `b^{E}` with `E = Σ_t z_{s+t} q^t`. Exceptional type-D
//! tori invert the first coordinate of block 1, which negates the `t = 0`
//! term.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{self, Family, GroupSpec, WeylClassLabel};

/// A weight `Σ z_i ε_i`. For SL weights are taken modulo `ε_1 + … + ε_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub eps: Vec<i64>,
}

impl Weight {
    pub fn new(eps: Vec<i64>) -> Self {
        Weight { eps }
    }

    pub fn zero(n: usize) -> Self {
        Weight { eps: vec![0; n] }
    }

    /// `ω_j = ε_1 + … + ε_j` in rank `n`.
    pub fn omega(n: usize, j: usize) -> Self {
        let mut eps = vec![0; n];
        eps[..j].fill(1);
        Weight { eps }
    }

    /// The SL weight `Σ a_i λ_i` with `λ_i = ε_1 + … + ε_i`, for `a` of length `n - 1`.
    pub fn from_lambda(a: &[i64]) -> Self {
        let n = a.len() + 1;
        let mut eps = vec![0; n];
        for k in (0..n - 1).rev() {
            eps[k] = eps[k + 1] + a[k];
        }
        Weight { eps }
    }

    /// λ-coordinates `a_i = z_i − z_{i+1}`.
    pub fn to_lambda(&self) -> Vec<i64> {
        self.eps.windows(2).map(|w| w[0] - w[1]).collect()
    }

    pub fn scaled(&self, k: i64) -> Self {
        Weight {
            eps: self.eps.iter().map(|z| z * k).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.eps.iter().all(|&z| z == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusBlock {
    pub start: usize,
    pub len: usize,
    pub nonsplit: bool,
    pub inverted_first: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalTorus {
    pub spec: GroupSpec,
    pub blocks: Vec<TorusBlock>,
    pub det_one_constraint: bool,
}

/// Builds the canonical torus of a class. Twisted type-D labels are realized
/// through their odd-`l` double partition, as tori of the ambient type-B group.
pub fn build_canonical_torus(spec: &GroupSpec, label: &WeylClassLabel) -> Result<CanonicalTorus> {
    label.validate(spec)?;
    let mut blocks = Vec::with_capacity(label.num_parts());
    let mut start = 0;
    for (len, nonsplit) in label.blocks() {
        blocks.push(TorusBlock {
            start,
            len,
            nonsplit,
            inverted_first: false,
        });
        start += len;
    }
    if label.is_exceptional() {
        blocks[0].inverted_first = true;
    }
    Ok(CanonicalTorus {
        spec: *spec,
        blocks,
        det_one_constraint: spec.family == Family::Sl,
    })
}

fn q_pow(q: u64, k: usize) -> BigInt {
    num_traits::pow(BigInt::from(q), k)
}

impl CanonicalTorus {
    pub fn q(&self) -> u64 {
        self.spec.q()
    }

    /// Order of block `i`: `q^{n_i} ∓ 1`.
    pub fn block_order(&self, i: usize) -> BigInt {
        let b = &self.blocks[i];
        let base = q_pow(self.q(), b.len);
        if b.nonsplit {
            base + 1
        } else {
            base - 1
        }
    }

    pub fn order(&self) -> BigUint {
        let mut total = BigInt::one();
        for i in 0..self.blocks.len() {
            total *= self.block_order(i);
        }
        if self.det_one_constraint {
            total /= BigInt::from(self.q() - 1);
        }
        total.to_biguint().expect("torus orders are positive")
    }

    /// The exponent `E_i` with `μ(generator_i) = b_i^{E_i}`.
    pub fn block_exponent(&self, mu: &Weight, i: usize) -> BigInt {
        let b = &self.blocks[i];
        let q = BigInt::from(self.q());
        let mut e = BigInt::zero();
        let mut place = BigInt::one();
        for t in 0..b.len {
            let mut term = BigInt::from(mu.eps[b.start + t]) * &place;
            if t == 0 && b.inverted_first {
                term = -term;
            }
            e += term;
            place *= &q;
        }
        e
    }

    /// Whether `μ` is trivial on the torus.
    ///
    /// For SL the torus is cut out of the product of blocks by `det = 1`.
    /// Taking block primitive elements `a_i = α^{c_i}` with
    /// `c_i = (q^L − 1)/(q^{n_i} − 1)` for one primitive `α` of `F_{q^L}`
    /// makes every block norm equal to `α^{(q^L−1)/(q−1)}`, so the
    /// determinant-one exponent tuples are the lattice `Σ x_i ≡ 0 (mod q−1)`,
    /// generated by `(q−1)e_i` and `e_i − e_j`.
    pub fn is_trivial_on_torus(&self, mu: &Weight) -> bool {
        if !self.det_one_constraint {
            return (0..self.blocks.len()).all(|i| self.block_exponent(mu, i).is_multiple_of(&self.block_order(i)));
        }
        let q = self.q();
        let l = self.blocks.iter().fold(1usize, |acc, b| acc.lcm(&b.len));
        let big_n = q_pow(q, l) - 1;
        let qm1 = BigInt::from(q - 1);
        let ys: Vec<BigInt> = (0..self.blocks.len())
            .map(|i| {
                let c: BigInt = &big_n / self.block_order(i);
                (c * self.block_exponent(mu, i)).mod_floor(&big_n)
            })
            .collect();
        ys.iter().all(|y| (&qm1 * y).is_multiple_of(&big_n)) && ys.windows(2).all(|w| w[0] == w[1])
    }

    /// Definition test: `μ(t)^{q−1} = 1` for every `t`, i.e. `(q−1)μ` is trivial.
    pub fn is_q_character(&self, mu: &Weight) -> bool {
        self.is_trivial_on_torus(&mu.scaled((self.q() - 1) as i64))
    }

    /// SL only: the q-character test on the subgroup generated by the
    /// `(q−1)`-th powers of the block generators, `(q−1)²E_i ≡ 0 (mod q^{n_i}−1)`.
    pub fn is_q_character_on_power_subgroup(&self, mu: &Weight) -> bool {
        let qm1 = BigInt::from(self.q() - 1);
        (0..self.blocks.len()).all(|i| (&qm1 * &qm1 * self.block_exponent(mu, i)).is_multiple_of(&self.block_order(i)))
    }
}

/// `(s_{(q−1)ω_j}|_T, 1_T)`: the number of weights in the orbit of `ω_j`
/// that are q-characters of the canonical torus.
pub fn orbit_char_multiplicity(spec: &GroupSpec, label: &WeylClassLabel, j: usize) -> Result<u64> {
    let torus = build_canonical_torus(spec, label)?;
    let orbit = weyl::omega_orbit(spec, j)?;
    Ok(orbit.iter().filter(|mu| torus.is_q_character(mu)).count() as u64)
}

/// Whether `r(q−1)(q^{l_1} + … + q^{l_k})` is not divisible by `q^n − 1`.
pub fn nondivisibility_check(n: usize, q: u64, r: u64, indices: &[usize]) -> Result<bool> {
    if n == 0 || q < 2 {
        return Err(Error::Precondition(format!("need n >= 1 and q >= 2, got n = {n}, q = {q}")));
    }
    if r == 0 || r >= q {
        return Err(Error::OutOfRange {
            what: "r",
            value: r as i64,
            range: format!("1..{q}"),
        });
    }
    if indices.is_empty() || indices.len() > n {
        return Err(Error::Precondition(format!("need 1..={n} indices, got {}", indices.len())));
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) || indices.iter().any(|&l| l >= n) {
        return Err(Error::Precondition(format!("indices {indices:?} must increase within 0..{n}")));
    }
    let sum: BigInt = indices.iter().map(|&l| q_pow(q, l)).sum();
    let value = BigInt::from(r) * BigInt::from(q - 1) * sum;
    let modulus = q_pow(q, n) - 1;
    Ok(!value.abs().is_multiple_of(&modulus))
}
