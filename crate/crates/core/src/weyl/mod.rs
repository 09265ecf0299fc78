//! Classical Weyl groups as signed permutation groups: class labels,
//! canonical representatives, centralizer orders and induced trivial
//! characters `1_{W_j}^W`.

mod group;
mod label;
mod perm;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tori::Weight;

pub use group::{elements as group_elements_of_type, GroupIndex};
pub use label::{double_partitions, partitions, Variant, WeylClassLabel};
pub use perm::SignedPermutation;

/// Default cap on the order of a Weyl group that is enumerated explicitly.
pub const DEFAULT_GROUP_GUARD: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gl,
    Sl,
    Sp,
    SoOdd,
    SoPlus,
    SoMinus,
    SpinPlus,
    SpinMinus,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Gl,
        Family::Sl,
        Family::Sp,
        Family::SoOdd,
        Family::SoPlus,
        Family::SoMinus,
        Family::SpinPlus,
        Family::SpinMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::Sl => "sl",
            Family::Sp => "sp",
            Family::SoOdd => "soodd",
            Family::SoPlus => "soplus",
            Family::SoMinus => "sominus",
            Family::SpinPlus => "spinplus",
            Family::SpinMinus => "spinminus",
        }
    }

    pub fn weyl_type(self) -> WeylType {
        match self {
            Family::Gl | Family::Sl => WeylType::A,
            Family::Sp | Family::SoOdd => WeylType::B,
            Family::SoPlus | Family::SpinPlus => WeylType::D,
            Family::SoMinus | Family::SpinMinus => WeylType::TwistedD,
        }
    }

    /// Whether the family exists for fields of this characteristic parity.
    pub fn allows_q(self, q: u64) -> bool {
        match self {
            Family::SoOdd | Family::SoPlus | Family::SoMinus => q % 2 == 1,
            Family::SpinPlus | Family::SpinMinus => q.is_multiple_of(2),
            _ => true,
        }
    }

    pub fn min_rank(self) -> usize {
        match self.weyl_type() {
            WeylType::A => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == lower)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// Weyl group type. `TwistedD` is `W(D_n)` with the Frobenius acting as the
/// graph automorphism; its tori are described inside `W(B_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeylType {
    A,
    B,
    D,
    TwistedD,
}

/// A finite classical group: family, rank parameter `n` and field size
/// `q = p^m`. For GL and SL, `n` is the matrix size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
    pub p: u64,
    pub m: u32,
}

impl GroupSpec {
    pub fn new(family: Family, n: usize, p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidSpec("field degree m must be positive".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q < (1 << 40))
            .ok_or_else(|| Error::InvalidSpec(format!("q = {p}^{m} is too large")))?;
        if !family.allows_q(q) {
            let parity = if q % 2 == 0 { "even" } else { "odd" };
            return Err(Error::InvalidSpec(format!("{family} is not defined for {parity} q = {q}")));
        }
        if n < family.min_rank() {
            return Err(Error::InvalidSpec(format!(
                "{family} needs n >= {}, got {n}",
                family.min_rank()
            )));
        }
        Ok(GroupSpec { family, n, p, m })
    }

    /// Builds a spec from a field size, which must be a prime power.
    pub fn with_q(family: Family, n: usize, q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or_else(|| Error::InvalidSpec(format!("{q} is not a prime power")))?;
        Self::new(family, n, p, m)
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.m)
    }

    pub fn weyl_type(&self) -> WeylType {
        self.family.weyl_type()
    }

    pub fn is_twisted(&self) -> bool {
        self.weyl_type() == WeylType::TwistedD
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}, q={})", self.family, self.n, self.q())
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `q = p^m` with `p` prime, if it is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `|W|` for the Weyl group of the spec (for the twisted family, `|W(D_n)|`).
pub fn weyl_group_order(spec: &GroupSpec) -> BigUint {
    let n = spec.n;
    match spec.weyl_type() {
        WeylType::A => factorial(n),
        WeylType::B => factorial(n) << n,
        WeylType::D | WeylType::TwistedD => factorial(n) << (n - 1),
    }
}

/// The class labels of the spec: conjugacy classes of `W`, or F-classes in
/// the twisted case.
pub fn enumerate_classes(spec: &GroupSpec) -> Vec<WeylClassLabel> {
    let n = spec.n;
    match spec.weyl_type() {
        WeylType::A => partitions(n).iter().map(|p| WeylClassLabel::partition(p)).collect(),
        WeylType::B => double_partitions(n)
            .into_iter()
            .map(|(pos, neg)| WeylClassLabel::new(pos, neg, Variant::Plain))
            .collect(),
        WeylType::D => {
            let mut out = Vec::new();
            for (pos, neg) in double_partitions(n) {
                if neg.len() % 2 != 0 {
                    continue;
                }
                let label = WeylClassLabel::new(pos, neg, Variant::Plain);
                let split = label.splits_in_type_d();
                out.push(label.clone());
                if split {
                    out.push(WeylClassLabel { variant: Variant::Exceptional, ..label });
                }
            }
            out
        }
        WeylType::TwistedD => double_partitions(n)
            .into_iter()
            .filter(|(_, neg)| neg.len() % 2 == 1)
            .map(|(pos, neg)| WeylClassLabel::new(pos, neg, Variant::Plain))
            .collect(),
    }
}

/// Block-cyclic representative of a class. Within each block of positions
/// `ε_i ↦ ε_{i+1}` and the last position wraps to the first, with sign −1
/// for a negative block. The exceptional variant negates the images of the
/// first and last positions of block 1. For the twisted family the result is
/// the element `v = wr` of the ambient `W(B_n)`.
pub fn canonical_representative(spec: &GroupSpec, label: &WeylClassLabel) -> Result<SignedPermutation> {
    label.validate(spec)?;
    let n = spec.n;
    let mut images = vec![0; n];
    let mut signs = vec![1i8; n];
    let mut start = 0;
    for (len, nonsplit) in label.blocks() {
        for t in 0..len {
            images[start + t] = if t + 1 < len { start + t + 1 } else { start };
        }
        if nonsplit {
            signs[start + len - 1] = -1;
        }
        start += len;
    }
    if label.is_exceptional() {
        let first_block = label.positive_parts[0];
        signs[0] = -1;
        signs[first_block - 1] = -1;
    }
    SignedPermutation::new(images, signs)
}

/// Centralizer in `W(B_n)` (or `S_n` for type A) of an element with the
/// given signed cycle type.
fn hyperoctahedral_centralizer(pos: &[usize], neg: &[usize], signed: bool) -> BigUint {
    let mut total = BigUint::one();
    for parts in [pos, neg] {
        for (len, run) in &parts.iter().chunk_by(|&&k| k) {
            let mult = run.count();
            let cycle = if signed { 2 * len } else { len };
            total *= BigUint::from(cycle).pow(mult as u32) * factorial(mult);
        }
    }
    total
}

/// `|W(T_w)|`: the centralizer order of the class, or the F-centralizer
/// order in the twisted case.
pub fn centralizer_order(spec: &GroupSpec, label: &WeylClassLabel) -> Result<BigUint> {
    label.validate(spec)?;
    let (pos, neg) = (&label.positive_parts, &label.negative_parts);
    Ok(match spec.weyl_type() {
        WeylType::A => hyperoctahedral_centralizer(pos, neg, false),
        WeylType::B => hyperoctahedral_centralizer(pos, neg, true),
        WeylType::D => {
            let full = hyperoctahedral_centralizer(pos, neg, true);
            if label.splits_in_type_d() {
                full
            } else {
                full >> 1
            }
        }
        WeylType::TwistedD => hyperoctahedral_centralizer(pos, neg, true) >> 1,
    })
}

/// Checks a Levi index `j` against the spec. `j = 0` stands for the whole
/// group (`ω_0 = 0`, so `W_0 = W`).
pub fn check_levi_index(spec: &GroupSpec, j: usize) -> Result<()> {
    let max = if spec.is_twisted() { spec.n - 1 } else { spec.n };
    if j > max {
        return Err(Error::OutOfRange {
            what: "levi index j",
            value: j as i64,
            range: format!("0..={max} for {spec}"),
        });
    }
    Ok(())
}

/// The `W`-orbit of `ω_j = ε_1 + … + ε_j` (for the twisted family the orbit
/// under `W(D_n)`, which equals the `W(B_n)`-orbit for `j < n`).
pub fn omega_orbit(spec: &GroupSpec, j: usize) -> Result<Vec<Weight>> {
    check_levi_index(spec, j)?;
    let n = spec.n;
    let mut out = Vec::new();
    for subset in (0..n).combinations(j) {
        match spec.weyl_type() {
            WeylType::A => {
                let mut z = vec![0i64; n];
                for &i in &subset {
                    z[i] = 1;
                }
                out.push(Weight::new(z));
            }
            weyl_type => {
                let even_only = weyl_type == WeylType::D && j == n;
                for mask in 0u32..(1 << j) {
                    if even_only && mask.count_ones() % 2 == 1 {
                        continue;
                    }
                    let mut z = vec![0i64; n];
                    for (bit, &i) in subset.iter().enumerate() {
                        z[i] = if mask >> bit & 1 == 1 { -1 } else { 1 };
                    }
                    out.push(Weight::new(z));
                }
            }
        }
    }
    Ok(out)
}

fn check_element(spec: &GroupSpec, w: &SignedPermutation) -> Result<()> {
    if w.rank() != spec.n {
        return Err(Error::Precondition(format!("element has rank {}, spec has n = {}", w.rank(), spec.n)));
    }
    let ok = match spec.weyl_type() {
        WeylType::A => w.is_unsigned(),
        WeylType::B => true,
        WeylType::D => w.negative_count().is_multiple_of(2),
        WeylType::TwistedD => w.negative_count() % 2 == 1,
    };
    if !ok {
        return Err(Error::Precondition(format!("{w} is not an admissible element for {spec}")));
    }
    Ok(())
}

/// Number of weights in the orbit of `ω_j` fixed by `w`; this is the
/// induced character value `1_{W_j}^W(w)`. For the twisted family `w` is
/// the ambient element `v` and `j < n`.
pub fn fixed_weight_count(w: &SignedPermutation, spec: &GroupSpec, j: usize) -> Result<u64> {
    check_element(spec, w)?;
    let orbit = omega_orbit(spec, j)?;
    Ok(orbit.iter().filter(|mu| w.fixes(&mu.eps)).count() as u64)
}

/// The Weyl group as an explicit element list, after checking the guard.
pub fn group_elements(spec: &GroupSpec, guard: u128) -> Result<Vec<SignedPermutation>> {
    let order = weyl_group_order(spec);
    let size = order.to_u128().unwrap_or(u128::MAX);
    if size > guard {
        return Err(Error::GuardExceeded {
            what: "Weyl group order",
            size,
            limit: guard,
        });
    }
    Ok(group::elements(spec.weyl_type(), spec.n))
}

/// `f(w)`: the number of cosets `gW_j` with `a·F(g) ∈ gW_j`, found by
/// partitioning `W` into cosets. Untwisted: `a = w`, `F = id`. Twisted: `w`
/// is `v`, `a = v·r` and `F(g) = r g r` with `r` the last sign flip.
pub fn induced_trivial_by_cosets(w: &SignedPermutation, spec: &GroupSpec, j: usize) -> Result<u64> {
    induced_trivial_by_cosets_with_guard(w, spec, j, DEFAULT_GROUP_GUARD)
}

pub fn induced_trivial_by_cosets_with_guard(
    w: &SignedPermutation,
    spec: &GroupSpec,
    j: usize,
    guard: u128,
) -> Result<u64> {
    check_element(spec, w)?;
    check_levi_index(spec, j)?;
    let elements = group_elements(spec, guard)?;
    let index = GroupIndex::new(&elements);
    let mut omega = vec![0i64; spec.n];
    omega[..j].fill(1);
    let stabilizer: Vec<SignedPermutation> = elements.iter().filter(|g| g.fixes(&omega)).cloned().collect();
    let r = SignedPermutation::last_sign_flip(spec.n);
    let (a, twist) = if spec.is_twisted() {
        (w.compose(&r), Some(&r))
    } else {
        (w.clone(), None)
    };
    let reps = index.left_coset_representatives(&stabilizer);
    let fixed = reps
        .iter()
        .filter(|&&i| {
            let g = &elements[i];
            let fg = match twist {
                Some(r) => r.compose(g).compose(r),
                None => g.clone(),
            };
            g.inverse().compose(&a).compose(&fg).fixes(&omega)
        })
        .count();
    Ok(fixed as u64)
}

/// `ε_G·ε_{T_w}` as `±1`: `(−1)^{r_G − m(w)}` where `m(w)` is the multiplicity
/// of eigenvalue 1 of the acting element on `Q^n` and `r_G` is `n`, or `n − 1`
/// for the twisted family whose `F_q`-rank drops by one.
pub fn epsilon_sign(spec: &GroupSpec, label: &WeylClassLabel) -> Result<i8> {
    label.validate(spec)?;
    let m = label.positive_parts.len();
    let rank = if spec.is_twisted() { spec.n - 1 } else { spec.n };
    Ok(if (rank + 2 * spec.n - m).is_multiple_of(2) { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, n: usize, q: u64) -> GroupSpec {
        GroupSpec::with_q(family, n, q).unwrap()
    }

    fn label(s: &str) -> WeylClassLabel {
        s.parse().unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(GroupSpec::with_q(Family::SoOdd, 3, 4).is_err());
        assert!(GroupSpec::with_q(Family::SpinPlus, 3, 3).is_err());
        assert!(GroupSpec::with_q(Family::Sp, 1, 3).is_err());
        assert!(GroupSpec::with_q(Family::Gl, 2, 6).is_err());
        assert!(GroupSpec::new(Family::Gl, 2, 4, 1).is_err());
        assert_eq!(spec(Family::Sp, 2, 9).p, 3);
        assert_eq!(spec(Family::Sp, 2, 9).m, 2);
        assert!(GroupSpec::with_q(Family::Gl, 1, 5).is_ok());
    }

    #[test]
    fn class_lists() {
        let gl3 = enumerate_classes(&spec(Family::Gl, 3, 2));
        assert_eq!(gl3, vec![label("3"), label("2+1"), label("1+1+1")]);

        let sp2: Vec<String> = enumerate_classes(&spec(Family::Sp, 2, 3)).iter().map(|l| l.to_string()).collect();
        assert_eq!(sp2.len(), 5);
        for l in ["2", "1+1", "1-1", "-2", "-1-1"] {
            assert!(sp2.contains(&l.to_string()), "{l}");
        }

        let d2: Vec<String> = enumerate_classes(&spec(Family::SoPlus, 2, 3)).iter().map(|l| l.to_string()).collect();
        assert_eq!(d2.len(), 4);
        for l in ["1+1", "2", "2x", "-1-1"] {
            assert!(d2.contains(&l.to_string()), "{l}");
        }

        for l in enumerate_classes(&spec(Family::SoMinus, 2, 3)) {
            assert_eq!(l.negative_parts.len() % 2, 1);
        }
        // W(D_4) has 13 classes
        assert_eq!(enumerate_classes(&spec(Family::SoPlus, 4, 3)).len(), 13);
    }

    #[test]
    fn canonical_representatives() {
        let gl3 = spec(Family::Gl, 3, 2);
        let w = canonical_representative(&gl3, &label("3")).unwrap();
        assert_eq!(w.images(), &[1, 2, 0]);
        assert!(w.is_unsigned());
        assert_eq!(canonical_representative(&gl3, &label("1+1+1")).unwrap(), SignedPermutation::identity(3));

        let sp2 = spec(Family::Sp, 2, 3);
        let w = canonical_representative(&sp2, &label("-2")).unwrap();
        assert_eq!(w.apply(&[1, 0]), vec![0, 1]);
        assert_eq!(w.apply(&[0, 1]), vec![-1, 0]);

        // the two-block example: [2, 3*]
        let sp5 = spec(Family::Sp, 5, 3);
        let w = canonical_representative(&sp5, &label("2-3")).unwrap();
        assert_eq!(w.images(), &[1, 0, 3, 4, 2]);
        assert_eq!(w.signs(), &[1, 1, 1, 1, -1]);

        let d4 = spec(Family::SoPlus, 4, 3);
        let w = canonical_representative(&d4, &label("4x")).unwrap();
        assert_eq!(w.apply(&[1, 0, 0, 0]), vec![0, -1, 0, 0]);
        assert_eq!(w.apply(&[0, 0, 0, 1]), vec![-1, 0, 0, 0]);
        assert!(canonical_representative(&d4, &label("3-1")).is_err());
    }

    #[test]
    fn centralizer_examples() {
        let c = |s: &GroupSpec, l: &str| centralizer_order(s, &label(l)).unwrap();
        assert_eq!(c(&spec(Family::Gl, 3, 2), "2+1"), BigUint::from(2u32));
        assert_eq!(c(&spec(Family::Sp, 2, 3), "-2"), BigUint::from(4u32));
        // both classes over [2,2] centralize a subgroup of W(B_4) lying inside W(D_4)
        assert_eq!(c(&spec(Family::SoPlus, 4, 3), "2+2x"), BigUint::from(32u32));
        assert_eq!(c(&spec(Family::SoPlus, 4, 3), "2+2"), BigUint::from(32u32));
    }

    #[test]
    fn fixed_weight_examples() {
        let gl3 = spec(Family::Gl, 3, 2);
        let id = SignedPermutation::identity(3);
        assert_eq!(fixed_weight_count(&id, &gl3, 1).unwrap(), 3);
        let w3 = canonical_representative(&gl3, &label("3")).unwrap();
        assert_eq!(fixed_weight_count(&w3, &gl3, 1).unwrap(), 0);

        let sp2 = spec(Family::Sp, 2, 3);
        let w = canonical_representative(&sp2, &label("-2")).unwrap();
        assert_eq!(fixed_weight_count(&w, &sp2, 1).unwrap(), 0);
        let id2 = SignedPermutation::identity(2);
        assert_eq!(fixed_weight_count(&id2, &sp2, 1).unwrap(), 4);

        let sominus = spec(Family::SoMinus, 3, 3);
        let v = canonical_representative(&sominus, &label("2-1")).unwrap();
        assert!(fixed_weight_count(&v, &sominus, 3).is_err());
        assert!(fixed_weight_count(&id2, &sp2, 3).is_err());
        // type-A element check
        assert!(fixed_weight_count(&w, &spec(Family::Gl, 2, 3), 1).is_err());
    }

    #[test]
    fn coset_examples() {
        let gl3 = spec(Family::Gl, 3, 2);
        let w = canonical_representative(&gl3, &label("2+1")).unwrap();
        assert_eq!(induced_trivial_by_cosets(&w, &gl3, 1).unwrap(), 1);

        let gl4 = spec(Family::Gl, 4, 2);
        let w = canonical_representative(&gl4, &label("2+2")).unwrap();
        assert_eq!(induced_trivial_by_cosets(&w, &gl4, 2).unwrap(), 2);

        // identity fixes every coset: [W : W_j]
        let sp3 = spec(Family::Sp, 3, 3);
        let id = SignedPermutation::identity(3);
        assert_eq!(induced_trivial_by_cosets(&id, &sp3, 2).unwrap(), 12);
        assert_eq!(induced_trivial_by_cosets(&id, &sp3, 0).unwrap(), 1);

        let big = spec(Family::Gl, 9, 2);
        let err = induced_trivial_by_cosets_with_guard(&SignedPermutation::identity(9), &big, 1, 1000);
        assert!(matches!(err, Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn epsilon_signs() {
        let gl2 = spec(Family::Gl, 2, 3);
        assert_eq!(epsilon_sign(&gl2, &label("1+1")).unwrap(), 1);
        assert_eq!(epsilon_sign(&gl2, &label("2")).unwrap(), -1);
        // the maximally split torus always has sign +1
        for family in Family::ALL {
            let q = if family.allows_q(3) { 3 } else { 2 };
            let s = spec(family, 4, q);
            let split = enumerate_classes(&s)
                .into_iter()
                .max_by_key(|l| l.positive_parts.len())
                .unwrap();
            assert_eq!(epsilon_sign(&s, &split).unwrap(), 1, "{s} {split}");
        }
    }
}
