//! Weights of the truncated polynomial rings `R̄_n = F_p[X_1..X_n]/(X_i^p)`
//! and `R̄_{mn}` under the diagonal torus of `SL_n`, restricted-weight
//! predicates and digit (Steinberg) decompositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tori::{build_canonical_torus, Weight};
use crate::weyl::{Family, GroupSpec, WeylClassLabel};

/// Cap on the number of monomials enumerated in one sweep.
pub const MONOMIAL_GUARD: u64 = 10_000_000;

/// A monomial `X_1^{c_1}⋯X_n^{c_n}` of `R̄_n`, `0 ≤ c_i < p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>, p: u64) -> Result<Self> {
        if let Some(&c) = exps.iter().find(|&&c| c as u64 >= p) {
            return Err(Error::OutOfRange {
                what: "monomial exponent",
                value: c as i64,
                range: format!("0..{p}"),
            });
        }
        Ok(Monomial { exps })
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&c| c as u64).sum()
    }
}

/// A weight in λ-coordinates, `Σ a_i λ_i` (length `n − 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LambdaWeight {
    pub coords: Vec<i64>,
}

impl LambdaWeight {
    pub fn new(coords: Vec<i64>) -> Self {
        LambdaWeight { coords }
    }

    pub fn zero(n: usize) -> Self {
        LambdaWeight {
            coords: vec![0; n.saturating_sub(1)],
        }
    }

    /// `k·λ_i` (1-based `i`) in rank `n`.
    pub fn fundamental(n: usize, i: usize, k: i64) -> Self {
        let mut coords = vec![0; n - 1];
        coords[i - 1] = k;
        LambdaWeight { coords }
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&a| a >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&a| a == 0)
    }

    /// If the weight is `k·λ_i` with `k > 0`, returns `(i, k)` (1-based `i`).
    pub fn as_fundamental_multiple(&self) -> Option<(usize, i64)> {
        let nonzero: Vec<(usize, i64)> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| (i + 1, a))
            .collect();
        match nonzero.as_slice() {
            [(i, k)] if *k > 0 => Some((*i, *k)),
            _ => None,
        }
    }
}

impl fmt::Display for LambdaWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Why a weight fails to be strongly q-restricted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RestrictionViolation {
    NotDominant { index: usize, value: i64 },
    CoordinateTooLarge { index: usize, value: i64, q: u64 },
    DigitSumTooLarge { digit: u32, digit_weight: Vec<i64>, sum: i64, p: u64 },
}

impl fmt::Display for RestrictionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RestrictionViolation::NotDominant { index, value } => {
                write!(f, "coordinate a_{} = {value} is negative", index + 1)
            }
            RestrictionViolation::CoordinateTooLarge { index, value, q } => {
                write!(f, "coordinate a_{} = {value} is not below q = {q}", index + 1)
            }
            RestrictionViolation::DigitSumTooLarge {
                digit,
                digit_weight,
                sum,
                p,
            } => write!(f, "base-p digit {digit} is {digit_weight:?} with coordinate sum {sum} >= p = {p}"),
        }
    }
}

/// `a_i = c_i − c_{i+1}`.
pub fn monomial_weight(m: &Monomial) -> LambdaWeight {
    LambdaWeight {
        coords: m.exps.windows(2).map(|w| w[0] as i64 - w[1] as i64).collect(),
    }
}

fn check_monomial_guard(p: u64, n: usize) -> Result<u64> {
    let size = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > MONOMIAL_GUARD as u128 {
        return Err(Error::GuardExceeded {
            what: "monomial count",
            size,
            limit: MONOMIAL_GUARD as u128,
        });
    }
    Ok(size as u64)
}

/// Every monomial of `R̄_n`, in lexicographic order of exponents.
pub fn monomials(p: u64, n: usize) -> Result<Vec<Monomial>> {
    let count = check_monomial_guard(p, n)?;
    Ok((0..count)
        .map(|mut code| {
            let mut exps = vec![0u32; n];
            for e in exps.iter_mut().rev() {
                *e = (code % p) as u32;
                code /= p;
            }
            Monomial { exps }
        })
        .collect())
}

/// Multiplicity of `ν` in `R̄_n`: `p − e` where `e` is the spread of the
/// exponent vector `c` realizing `ν` with `min c = 0`, or 0 when `e ≥ p`.
pub fn weight_multiplicity_rn(nu: &LambdaWeight, p: u64, n: usize) -> u64 {
    if nu.coords.len() + 1 != n {
        return 0;
    }
    let mut c = vec![0i64; n];
    for k in (0..n - 1).rev() {
        c[k] = c[k + 1] + nu.coords[k];
    }
    let min = *c.iter().min().unwrap();
    let spread = c.iter().max().unwrap() - min;
    if spread < p as i64 {
        p - spread as u64
    } else {
        0
    }
}

/// Multiplicity of `ν` in `R̄_n` by enumerating monomials.
pub fn weight_multiplicity_rn_brute(nu: &LambdaWeight, p: u64, n: usize) -> Result<u64> {
    Ok(monomials(p, n)?.iter().filter(|m| &monomial_weight(m) == nu).count() as u64)
}

/// Dominant with `Σ a_i < p`.
pub fn is_strongly_p_restricted(nu: &LambdaWeight, p: u64) -> bool {
    nu.is_dominant() && nu.coords.iter().sum::<i64>() < p as i64
}

/// Base-`p` digit weights `ν_0, …, ν_{m−1}` of a dominant weight with all
/// coordinates below `q = p^m`.
pub fn steinberg_digits(nu: &LambdaWeight, p: u64, m: u32) -> Vec<LambdaWeight> {
    (0..m)
        .map(|t| LambdaWeight {
            coords: nu.coords.iter().map(|&a| (a / (p as i64).pow(t)) % p as i64).collect(),
        })
        .collect()
}

/// Checks strong q-restriction and reports the first violation.
pub fn check_strongly_q_restricted(nu: &LambdaWeight, p: u64, m: u32) -> std::result::Result<(), RestrictionViolation> {
    let q = p.pow(m) as i64;
    for (index, &value) in nu.coords.iter().enumerate() {
        if value < 0 {
            return Err(RestrictionViolation::NotDominant { index, value });
        }
        if value >= q {
            return Err(RestrictionViolation::CoordinateTooLarge { index, value, q: q as u64 });
        }
    }
    for (digit, dw) in steinberg_digits(nu, p, m).into_iter().enumerate() {
        let sum: i64 = dw.coords.iter().sum();
        if sum >= p as i64 {
            return Err(RestrictionViolation::DigitSumTooLarge {
                digit: digit as u32,
                digit_weight: dw.coords,
                sum,
                p,
            });
        }
    }
    Ok(())
}

pub fn is_strongly_q_restricted(nu: &LambdaWeight, p: u64, m: u32) -> bool {
    check_strongly_q_restricted(nu, p, m).is_ok()
}

/// All decompositions `ν = μ_0 + pμ_1 + … + p^{m−1}μ_{m−1}` with every `μ_t`
/// a weight of `R̄_n`.
pub fn digit_decompositions(nu: &LambdaWeight, p: u64, m: u32, n: usize) -> Vec<Vec<LambdaWeight>> {
    fn rec(rest: &[i64], p: i64, levels: u32, n: usize, prefix: &mut Vec<LambdaWeight>, out: &mut Vec<Vec<LambdaWeight>>) {
        if levels == 1 {
            let last = LambdaWeight::new(rest.to_vec());
            if weight_multiplicity_rn(&last, p as u64, n) > 0 {
                prefix.push(last);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        // each digit coordinate lies in (−p, p) and is congruent to rest mod p
        let choices: Vec<Vec<i64>> = rest
            .iter()
            .map(|&a| {
                let r = a.rem_euclid(p);
                if r == 0 {
                    vec![0]
                } else {
                    vec![r, r - p]
                }
            })
            .collect();
        let total: usize = choices.iter().map(Vec::len).product();
        for mut code in 0..total {
            let digit: Vec<i64> = choices
                .iter()
                .map(|c| {
                    let v = c[code % c.len()];
                    code /= c.len();
                    v
                })
                .collect();
            let mu = LambdaWeight::new(digit.clone());
            if weight_multiplicity_rn(&mu, p as u64, n) == 0 {
                continue;
            }
            let next: Vec<i64> = rest.iter().zip(&digit).map(|(a, d)| (a - d) / p).collect();
            prefix.push(mu);
            rec(&next, p, levels - 1, n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 || nu.coords.len() + 1 != n {
        return out;
    }
    rec(&nu.coords, p as i64, m, n, &mut Vec::new(), &mut out);
    out
}

/// Digit decompositions of `0` or `(q−1)λ_k`; exactly one is expected.
pub fn steinberg_expansion_unique(nu: &LambdaWeight, p: u64, m: u32, n: usize) -> Result<Vec<Vec<LambdaWeight>>> {
    let q = p.pow(m) as i64;
    let supported = nu.is_zero() || nu.as_fundamental_multiple().is_some_and(|(_, k)| k == q - 1);
    if !supported || nu.coords.len() + 1 != n {
        return Err(Error::UnsupportedWeight(format!("{nu} is neither 0 nor (q-1)λ_i for q = {q}")));
    }
    Ok(digit_decompositions(nu, p, m, n))
}

/// Multiplicity of `ν` in `R̄_{mn} ≅ R̄_n ⊗ R̄_n^{(p)} ⊗ … ⊗ R̄_n^{(p^{m−1})}`
/// through digit decompositions.
pub fn weight_multiplicity_rmn(nu: &LambdaWeight, p: u64, m: u32, n: usize) -> u64 {
    digit_decompositions(nu, p, m, n)
        .iter()
        .map(|digits| digits.iter().map(|mu| weight_multiplicity_rn(mu, p, n)).product::<u64>())
        .sum()
}

/// ε-weights `Σ_t p^t c^{(t)}` of all monomials of `R̄_{mn}`.
pub fn rmn_epsilon_weights(p: u64, m: u32, n: usize) -> Result<Vec<Vec<i64>>> {
    check_monomial_guard(p, m as usize * n)?;
    let base = monomials(p, n)?;
    let mut weights = vec![vec![0i64; n]];
    for t in 0..m {
        let place = (p as i64).pow(t);
        let mut next = Vec::with_capacity(weights.len() * base.len());
        for w in &weights {
            for mono in &base {
                next.push(w.iter().zip(&mono.exps).map(|(a, &c)| a + place * c as i64).collect());
            }
        }
        weights = next;
    }
    Ok(weights)
}

/// Multiplicity of `ν` in `R̄_{mn}` by enumerating monomials.
pub fn weight_multiplicity_rmn_brute(nu: &LambdaWeight, p: u64, m: u32, n: usize) -> Result<u64> {
    let target = Weight::from_lambda(&nu.coords);
    Ok(rmn_epsilon_weights(p, m, n)?
        .into_iter()
        .filter(|w| Weight::new(w.clone()).to_lambda() == target.to_lambda())
        .count() as u64)
}

/// `d_0` for `ν = (q−1)λ_i`: 1 iff `n | i(p−1)`.
pub fn d0_for_special_weight(n: usize, p: u64, i: usize) -> Result<u64> {
    if i == 0 || i >= n {
        return Err(Error::OutOfRange {
            what: "fundamental weight index i",
            value: i as i64,
            range: format!("1..={}", n.saturating_sub(1)),
        });
    }
    Ok(u64::from((i as u64 * (p - 1)).is_multiple_of(n as u64)))
}

/// Number of zero-weight monomials of total degree `degree` in `R̄_n`, by enumeration.
pub fn zero_weight_monomials_of_degree(n: usize, p: u64, degree: u64) -> Result<u64> {
    Ok(monomials(p, n)?
        .iter()
        .filter(|m| m.degree() == degree && monomial_weight(m).is_zero())
        .count() as u64)
}

/// Number of monomials of `R̄_{mn}` whose weight is trivial on the canonical
/// torus of a GL or SL class.
pub fn count_trivial_monomial_weights(spec: &GroupSpec, label: &WeylClassLabel) -> Result<u64> {
    if !matches!(spec.family, Family::Gl | Family::Sl) {
        return Err(Error::Precondition(format!("{spec} is not GL or SL")));
    }
    let torus = build_canonical_torus(spec, label)?;
    Ok(rmn_epsilon_weights(spec.p, spec.m, spec.n)?
        .into_iter()
        .filter(|w| torus.is_trivial_on_torus(&Weight::new(w.clone())))
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lw(c: &[i64]) -> LambdaWeight {
        LambdaWeight::new(c.to_vec())
    }

    #[test]
    fn monomial_weights() {
        let m = Monomial::new(vec![2, 2, 0, 0], 3).unwrap();
        assert_eq!(monomial_weight(&m), lw(&[0, 2, 0]));
        assert!(monomial_weight(&Monomial::new(vec![1, 1, 1], 2).unwrap()).is_zero());
        assert_eq!(monomial_weight(&Monomial::new(vec![2, 0], 3).unwrap()), lw(&[2]));
        assert!(Monomial::new(vec![3], 3).is_err());
    }

    #[test]
    fn multiplicities() {
        assert_eq!(weight_multiplicity_rn(&lw(&[0, 0]), 5, 3), 5);
        assert_eq!(weight_multiplicity_rn(&lw(&[2]), 3, 2), 1);
        assert_eq!(weight_multiplicity_rn(&lw(&[1]), 3, 2), 2);
        assert_eq!(weight_multiplicity_rn(&lw(&[3]), 3, 2), 0);
        assert_eq!(weight_multiplicity_rn(&lw(&[1]), 3, 3), 0);
    }

    #[test]
    fn restriction() {
        assert!(is_strongly_q_restricted(&lw(&[0, 8]), 3, 2));
        assert!(!is_strongly_q_restricted(&lw(&[2, 2]), 3, 1));
        assert!(is_strongly_q_restricted(&lw(&[0, 0]), 3, 1));
        assert_eq!(
            check_strongly_q_restricted(&lw(&[2, 2]), 3, 1),
            Err(RestrictionViolation::DigitSumTooLarge {
                digit: 0,
                digit_weight: vec![2, 2],
                sum: 4,
                p: 3
            })
        );
        assert!(matches!(
            check_strongly_q_restricted(&lw(&[9]), 3, 2),
            Err(RestrictionViolation::CoordinateTooLarge { .. })
        ));
        assert!(matches!(
            check_strongly_q_restricted(&lw(&[-1]), 3, 2),
            Err(RestrictionViolation::NotDominant { .. })
        ));
    }

    #[test]
    fn expansions() {
        let zero = steinberg_expansion_unique(&lw(&[0, 0]), 3, 2, 3).unwrap();
        assert_eq!(zero, vec![vec![lw(&[0, 0]), lw(&[0, 0])]]);
        let top = steinberg_expansion_unique(&lw(&[3]), 2, 2, 2).unwrap();
        assert_eq!(top, vec![vec![lw(&[1]), lw(&[1])]]);
        assert!(steinberg_expansion_unique(&lw(&[1]), 2, 2, 2).is_err());
        assert_eq!(weight_multiplicity_rmn(&lw(&[0, 0]), 2, 2, 3), 4);
        assert_eq!(weight_multiplicity_rmn(&lw(&[3, 0]), 2, 2, 3), 1);
        assert_eq!(weight_multiplicity_rmn_brute(&lw(&[0, 0]), 2, 2, 3).unwrap(), 4);
    }

    #[test]
    fn d0_examples() {
        assert_eq!(d0_for_special_weight(2, 3, 1).unwrap(), 1);
        assert_eq!(d0_for_special_weight(3, 2, 1).unwrap(), 0);
        assert_eq!(d0_for_special_weight(4, 5, 2).unwrap(), 1);
        assert!(d0_for_special_weight(3, 2, 3).is_err());
        assert!(d0_for_special_weight(3, 2, 0).is_err());
    }

    #[test]
    fn trivial_monomial_counts() {
        let gl = GroupSpec::with_q(Family::Gl, 2, 2).unwrap();
        assert_eq!(count_trivial_monomial_weights(&gl, &"1+1".parse().unwrap()).unwrap(), 4);
        let gl = GroupSpec::with_q(Family::Gl, 2, 3).unwrap();
        assert_eq!(count_trivial_monomial_weights(&gl, &"2".parse().unwrap()).unwrap(), 2);
        let sl = GroupSpec::with_q(Family::Sl, 2, 3).unwrap();
        assert_eq!(count_trivial_monomial_weights(&sl, &"1+1".parse().unwrap()).unwrap(), 5);
        let sp = GroupSpec::with_q(Family::Sp, 2, 3).unwrap();
        assert!(count_trivial_monomial_weights(&sp, &"2".parse().unwrap()).is_err());
    }
}
