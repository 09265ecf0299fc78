//! Brute-force recomputations from first principles: torus elements as
//! coordinate vectors in a finite field, tori as matrix groups acting on
//! `F_q^n`, exterior powers over `F_2`, and explicit coset enumeration.
//!
//! Nothing here uses the exponent arithmetic of [`crate::tori`]; the only
//! shared arithmetic is [`crate::ffield`].

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::{build_field, build_large_field, prime_factors, Elem, FiniteField};
use crate::weyl::{Family, GroupIndex, GroupSpec, SignedPermutation, WeylClassLabel, WeylType};

/// Default cap on enumerated torus elements, vectors or group elements.
pub const DEFAULT_ELEMENT_GUARD: u128 = 1_000_000;

fn guard(what: &'static str, size: u128, limit: u128) -> Result<()> {
    if size > limit {
        return Err(Error::GuardExceeded { what, size, limit });
    }
    Ok(())
}

type FieldCache = Mutex<HashMap<(u64, u32), Arc<FiniteField>>>;

fn cached_field(p: u64, m: u32) -> Result<Arc<FiniteField>> {
    static CACHE: OnceLock<FieldCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().expect("field cache poisoned").get(&(p, m)) {
        return Ok(Arc::clone(f));
    }
    let field = Arc::new(build_large_field(p, m)?);
    cache
        .lock()
        .expect("field cache poisoned")
        .insert((p, m), Arc::clone(&field));
    Ok(field)
}

/// The orbit of `ω_j` under the Weyl group, as the closure under simple
/// reflections.
fn weyl_orbit_by_reflections(weyl_type: WeylType, n: usize, j: usize) -> Vec<Vec<i64>> {
    let mut start = vec![0i64; n];
    start[..j].fill(1);
    let reflect = |z: &[i64]| -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let mut y = z.to_vec();
            y.swap(i, i + 1);
            out.push(y);
        }
        match weyl_type {
            WeylType::A => {}
            WeylType::B => {
                let mut y = z.to_vec();
                y[n - 1] = -y[n - 1];
                out.push(y);
            }
            WeylType::D | WeylType::TwistedD => {
                let mut y = z.to_vec();
                y[n - 2] = -z[n - 1];
                y[n - 1] = -z[n - 2];
                out.push(y);
            }
        }
        out
    };
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(z) = queue.pop_front() {
        for y in reflect(&z) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort();
    out
}

struct OracleBlock {
    start: usize,
    len: usize,
    order: u64,
    inverted_first: bool,
}

fn oracle_blocks(spec: &GroupSpec, label: &WeylClassLabel) -> Result<Vec<OracleBlock>> {
    label.validate(spec)?;
    let q = spec.q();
    let mut out = Vec::new();
    let mut start = 0;
    for (len, nonsplit) in label.blocks() {
        let base = q
            .checked_pow(len as u32)
            .ok_or_else(|| Error::InvalidSpec(format!("q^{len} overflows")))?;
        let order = if nonsplit { base + 1 } else { base - 1 };
        out.push(OracleBlock {
            start,
            len,
            order,
            inverted_first: out.is_empty() && label.is_exceptional(),
        });
        start += len;
    }
    Ok(out)
}

/// Number of weights in the orbit of `ω_j` that satisfy `μ(t)^{q−1} = 1` for
/// every element `t` of the canonical torus, with `t` realized as an actual
/// coordinate vector over `F_{q^L}`.
pub fn torus_element_qchar_count(spec: &GroupSpec, label: &WeylClassLabel, j: usize, limit: u128) -> Result<u64> {
    crate::weyl::check_levi_index(spec, j)?;
    let q = spec.q();
    let blocks = oracle_blocks(spec, label)?;
    let size: u128 = blocks.iter().map(|b| b.order as u128).product();
    guard("torus element count", size, limit)?;
    // every block generator lives in F_{q^L}
    let big_l = label
        .blocks()
        .map(|(len, nonsplit)| if nonsplit { 2 * len } else { len })
        .fold(1usize, |acc, d| acc.lcm(&d));
    let field = cached_field(spec.p, spec.m * big_l as u32)?;
    let big_q = field.q();

    // coordinates of generator^k for every k, per block
    let mut coords: Vec<Vec<Vec<Elem>>> = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let beta = field.pow(field.generator(), (big_q - 1) / b.order);
        let steps: Vec<Elem> = (0..b.len)
            .map(|t| {
                let x = field.pow(beta, q.pow(t as u32));
                if t == 0 && b.inverted_first {
                    field.inv(x).expect("block generators are nonzero")
                } else {
                    x
                }
            })
            .collect();
        let mut current = vec![1; b.len];
        let mut all = Vec::with_capacity(b.order as usize);
        for _ in 0..b.order {
            all.push(current.clone());
            for (c, s) in current.iter_mut().zip(&steps) {
                *c = field.mul(*c, *s);
            }
        }
        debug_assert!(current.iter().all(|&c| c == 1));
        coords.push(all);
    }
    let det_one = spec.family == Family::Sl;
    let dets: Vec<Vec<Elem>> = coords
        .iter()
        .map(|block| block.iter().map(|v| v.iter().fold(1, |acc, &x| field.mul(acc, x))).collect())
        .collect();

    let weights = weyl_orbit_by_reflections(spec.weyl_type(), spec.n, j);
    let mut count = 0;
    for mu in &weights {
        // (q−1)-th power of μ on each block element
        let values: Vec<Vec<Elem>> = blocks
            .iter()
            .zip(&coords)
            .map(|(b, block)| {
                let order = block.len();
                (0..order)
                    .map(|k| {
                        // generator^{-k} has the inverse coordinates of generator^k
                        let inverse = &block[(order - k) % order];
                        let val = (0..b.len).fold(1, |acc, t| {
                            let e = mu[b.start + t];
                            let x = if e < 0 { inverse[t] } else { block[k][t] };
                            field.mul(acc, field.pow(x, e.unsigned_abs()))
                        });
                        field.pow(val, q - 1)
                    })
                    .collect()
            })
            .collect();
        let passes = (0..blocks.len())
            .map(|i| 0..blocks[i].order as usize)
            .multi_cartesian_product()
            .all(|ks| {
                if det_one {
                    let det = ks.iter().enumerate().fold(1, |acc, (i, &k)| field.mul(acc, dets[i][k]));
                    if det != 1 {
                        return true;
                    }
                }
                ks.iter().enumerate().fold(1, |acc, (i, &k)| field.mul(acc, values[i][k])) == 1
            });
        if passes {
            count += 1;
        }
    }
    Ok(count)
}

type Matrix = Vec<Vec<Elem>>;

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|k| u64::from(i == k)).collect()).collect()
}

fn mat_mul(f: &FiniteField, a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for c in 0..n {
                out[i][c] = f.add(out[i][c], f.mul(a[i][k], b[k][c]));
            }
        }
    }
    out
}

fn mat_pow(f: &FiniteField, a: &Matrix, mut e: u64) -> Matrix {
    let mut acc = identity(a.len());
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(f, &acc, &base);
        }
        base = mat_mul(f, &base, &base);
        e >>= 1;
    }
    acc
}

fn determinant(f: &FiniteField, a: &Matrix) -> Elem {
    let n = a.len();
    let mut m = a.clone();
    let mut det = 1;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(pivot, col);
            det = f.neg(det);
        }
        det = f.mul(det, m[col][col]);
        let inv = f.inv(m[col][col]).expect("pivot is nonzero");
        for r in col + 1..n {
            if m[r][col] == 0 {
                continue;
            }
            let factor = f.mul(m[r][col], inv);
            let (top, bottom) = m.split_at_mut(r);
            for (x, &y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = f.sub(*x, f.mul(factor, y));
            }
        }
    }
    det
}

/// `f mod g` for polynomials over `F_q` (lowest coefficient first, `g` monic).
fn poly_rem(f: &FiniteField, num: &[Elem], den: &[Elem]) -> Vec<Elem> {
    let mut r = num.to_vec();
    let d = den.len() - 1;
    while r.len() > d {
        let top = *r.last().unwrap();
        if top != 0 {
            let shift = r.len() - 1 - d;
            for (i, &c) in den.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(top, c));
            }
        }
        r.pop();
    }
    r
}

fn poly_mul_mod(f: &FiniteField, a: &[Elem], b: &[Elem], modulus: &[Elem]) -> Vec<Elem> {
    let mut prod = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (k, &y) in b.iter().enumerate() {
            prod[i + k] = f.add(prod[i + k], f.mul(x, y));
        }
    }
    poly_rem(f, &prod, modulus)
}

fn x_power_mod(f: &FiniteField, mut e: u64, modulus: &[Elem]) -> Vec<Elem> {
    let d = modulus.len() - 1;
    let mut acc = poly_rem(f, &[1], modulus);
    acc.resize(d, 0);
    let mut base = poly_rem(f, &[0, 1], modulus);
    base.resize(d, 0);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(f, &acc, &base, modulus);
            acc.resize(d, 0);
        }
        base = poly_mul_mod(f, &base, &base, modulus);
        base.resize(d, 0);
        e >>= 1;
    }
    acc
}

fn decode(code: u64, base: u64, len: usize) -> Vec<u64> {
    let mut code = code;
    (0..len)
        .map(|_| {
            let d = code % base;
            code /= base;
            d
        })
        .collect()
}

fn is_irreducible_over(f: &FiniteField, poly: &[Elem]) -> bool {
    let d = poly.len() - 1;
    for k in 1..=d / 2 {
        for code in 0..f.q().pow(k as u32) {
            let mut g = decode(code, f.q(), k);
            g.push(1);
            if poly_rem(f, poly, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest primitive monic polynomial of degree `d`
/// over `F_q`: irreducible, with `x` of order `q^d − 1` modulo it.
pub fn smallest_primitive_polynomial(f: &FiniteField, d: usize) -> Vec<Elem> {
    let q = f.q();
    let order = q.pow(d as u32) - 1;
    let factors = prime_factors(order);
    for code in 0..q.pow(d as u32) {
        let mut poly = decode(code, q, d);
        poly.push(1);
        if poly[0] == 0 || !is_irreducible_over(f, &poly) {
            continue;
        }
        let one = {
            let mut v = vec![0; d];
            v[0] = 1;
            v
        };
        if factors.iter().all(|&r| x_power_mod(f, order / r, &poly) != one) {
            return poly;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

/// Companion matrix of a monic polynomial: multiplication by `x` on the
/// basis `1, x, …, x^{d−1}` (column convention).
fn companion(f: &FiniteField, poly: &[Elem]) -> Matrix {
    let d = poly.len() - 1;
    let mut c = vec![vec![0; d]; d];
    for i in 1..d {
        c[i][i - 1] = 1;
    }
    for (i, row) in c.iter_mut().enumerate() {
        row[d - 1] = f.neg(poly[i]);
    }
    c
}

fn embed_block(n: usize, start: usize, block: &Matrix) -> Matrix {
    let mut m = identity(n);
    for (i, row) in block.iter().enumerate() {
        for (k, &x) in row.iter().enumerate() {
            m[start + i][start + k] = x;
        }
    }
    m
}

/// Generators of the torus of a GL/SL class as block-diagonal matrices over
/// `F_q`, with the block orders (GL generators only).
fn matrix_torus_generators(f: &FiniteField, spec: &GroupSpec, label: &WeylClassLabel) -> Result<Vec<Matrix>> {
    let n = spec.n;
    let q = f.q();
    let mut gens = Vec::new();
    let mut orders = Vec::new();
    let mut start = 0;
    for (len, _) in label.blocks() {
        let poly = smallest_primitive_polynomial(f, len);
        gens.push(embed_block(n, start, &companion(f, &poly)));
        orders.push(q.pow(len as u32) - 1);
        start += len;
    }
    if spec.family != Family::Sl {
        return Ok(gens);
    }
    // determinant-one subgroup: exponent tuples x with Σ l_i x_i ≡ 0 (mod q−1)
    let qm1 = q - 1;
    let logs: Vec<u64> = gens
        .iter()
        .map(|g| {
            let det = determinant(f, g);
            f.log(det).expect("determinant of an invertible matrix")
        })
        .collect();
    let l1_inv = if qm1 == 1 {
        0
    } else {
        let g = (logs[0] as i64).extended_gcd(&(qm1 as i64));
        if g.gcd != 1 {
            return Err(Error::Precondition("first block determinant is not a generator".into()));
        }
        g.x.rem_euclid(qm1 as i64) as u64
    };
    let mut kernel = vec![mat_pow(f, &gens[0], qm1)];
    for i in 1..gens.len() {
        kernel.push(mat_pow(f, &gens[i], qm1));
        let k = if qm1 == 1 { 0 } else { logs[i] * l1_inv % qm1 };
        let back = mat_pow(f, &gens[0], (orders[0] - k % orders[0]) % orders[0]);
        kernel.push(mat_mul(f, &gens[i], &back));
    }
    Ok(kernel)
}

fn apply(f: &FiniteField, m: &Matrix, v: &[Elem]) -> Vec<Elem> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &x)| f.add(acc, f.mul(a, x))))
        .collect()
}

/// Number of torus orbits on `F_q^n ∖ {0}` for a GL or SL class, by
/// breadth-first closure under matrix generators.
pub fn torus_orbit_count(spec: &GroupSpec, label: &WeylClassLabel, limit: u128) -> Result<u64> {
    if !matches!(spec.family, Family::Gl | Family::Sl) {
        return Err(Error::Precondition(format!("{spec} is not GL or SL")));
    }
    label.validate(spec)?;
    let q = spec.q();
    let size = (q as u128).checked_pow(spec.n as u32).unwrap_or(u128::MAX);
    guard("vector space size", size, limit)?;
    let f = build_field(spec.p, spec.m)?;
    let gens = matrix_torus_generators(&f, spec, label)?;
    let n = spec.n;
    let encode = |v: &[Elem]| v.iter().rev().fold(0u64, |acc, &x| acc * q + x);
    let mut seen = vec![false; size as usize];
    let mut orbits = 0;
    for code in 1..size as u64 {
        if seen[code as usize] {
            continue;
        }
        orbits += 1;
        seen[code as usize] = true;
        let mut queue = VecDeque::from([decode(code, q, n)]);
        while let Some(v) = queue.pop_front() {
            for g in &gens {
                let w = apply(&f, g, &v);
                let c = encode(&w) as usize;
                if !seen[c] {
                    seen[c] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(orbits)
}

fn rank_f2(rows: &mut [Vec<u8>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] == 1 {
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the subspace of `∧^j F_2^n` fixed by the torus of a GL class
/// over `F_2`, by linear algebra on the matrix of minors.
pub fn exterior_power_fixed_dim(n: usize, j: usize, label: &WeylClassLabel, limit: u128) -> Result<u64> {
    let spec = GroupSpec::new(Family::Gl, n, 2, 1)?;
    label.validate(&spec)?;
    if j > n {
        return Err(Error::OutOfRange {
            what: "exterior power degree j",
            value: j as i64,
            range: format!("0..={n}"),
        });
    }
    let subsets: Vec<Vec<usize>> = (0..n).combinations(j).collect();
    guard("exterior power dimension", subsets.len() as u128, limit.min(10_000))?;
    let f = build_field(2, 1)?;
    let gens = matrix_torus_generators(&f, &spec, label)?;
    let dim = subsets.len();
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for g in &gens {
        // entry (S, T) of ∧^j g is the minor on rows S, columns T
        for (si, s) in subsets.iter().enumerate() {
            let row: Vec<u8> = subsets
                .iter()
                .enumerate()
                .map(|(ti, t)| {
                    let minor: Matrix = s.iter().map(|&r| t.iter().map(|&c| g[r][c]).collect()).collect();
                    let d = if j == 0 { 1 } else { determinant(&f, &minor) as u8 };
                    d ^ u8::from(si == ti)
                })
                .collect();
            rows.push(row);
        }
    }
    let rank = rank_f2(&mut rows);
    Ok((dim - rank) as u64)
}

/// The three routes to `f_A^B(a)`, the number of cosets `gA` with
/// `g^{-1} a F(g) ∈ A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetFixing {
    /// Direct count over a transversal.
    pub cosets: u64,
    /// `Σ_i |FC_B(a)| / |FC_A(a_i)|` over the A-F-classes inside the B-F-class of `a`.
    pub centralizer_sum: BigRational,
    /// `1_{Ã}^{B̃}(ã)` in `B̃ = B ⋊ ⟨F⟩`, `Ã = A ⋊ ⟨F⟩`, `ã = (a, F)`.
    pub semidirect: u64,
}

impl CosetFixing {
    pub fn agree(&self) -> bool {
        self.centralizer_sum == BigRational::from_integer(BigInt::from(self.cosets)) && self.cosets == self.semidirect
    }
}

/// Counts cosets of `A` in `B` fixed by `gA ↦ a F(gA)` three ways. The twist
/// `F` is conjugation by `r` (identity when `r` is `None`); `r` must normalize
/// both `B` and `A`.
pub fn coset_fixing_oracle(
    b: &[SignedPermutation],
    a_sub: &[SignedPermutation],
    a: &SignedPermutation,
    twist: Option<&SignedPermutation>,
    limit: u128,
) -> Result<CosetFixing> {
    guard("group order", b.len() as u128, limit)?;
    let index = GroupIndex::new(b);
    let in_a: HashSet<&SignedPermutation> = a_sub.iter().collect();
    if index.position(a).is_none() {
        return Err(Error::Precondition(format!("{a} is not in B")));
    }
    if a_sub.iter().any(|h| index.position(h).is_none()) {
        return Err(Error::Precondition("A is not contained in B".into()));
    }
    let rank = a.rank();
    let r = twist.cloned().unwrap_or_else(|| SignedPermutation::identity(rank));
    let r_inv = r.inverse();
    let frob = |g: &SignedPermutation| r.compose(g).compose(&r_inv);
    if b.iter().any(|g| index.position(&frob(g)).is_none()) || a_sub.iter().any(|h| !in_a.contains(&frob(h))) {
        return Err(Error::Precondition("the twist does not normalize A and B".into()));
    }
    let twisted_conj = |g: &SignedPermutation, x: &SignedPermutation| g.inverse().compose(x).compose(&frob(g));

    let cosets = index
        .left_coset_representatives(a_sub)
        .into_iter()
        .filter(|&i| in_a.contains(&twisted_conj(&b[i], a)))
        .count() as u64;

    let b_class: HashSet<SignedPermutation> = b.iter().map(|g| twisted_conj(g, a)).collect();
    let fc_b = b.len() / b_class.len();
    let mut assigned: HashSet<SignedPermutation> = HashSet::new();
    let mut centralizer_sum = BigRational::zero();
    let mut meets: Vec<&SignedPermutation> = a_sub.iter().filter(|x| b_class.contains(*x)).collect();
    meets.sort();
    for x in meets {
        if assigned.contains(x) {
            continue;
        }
        let a_class: HashSet<SignedPermutation> = a_sub.iter().map(|h| twisted_conj(h, x)).collect();
        let fc_a = a_sub.len() / a_class.len();
        centralizer_sum += BigRational::new(BigInt::from(fc_b), BigInt::from(fc_a));
        assigned.extend(a_class);
    }

    // order of F as an automorphism of B
    let mut k = 1;
    let mut power = r.clone();
    while b.iter().any(|g| &power.compose(g).compose(&power.inverse()) != g) {
        power = power.compose(&r);
        k += 1;
    }
    let f_pow = |g: &SignedPermutation, e: usize| {
        let mut out = g.clone();
        for _ in 0..e {
            out = frob(&out);
        }
        out
    };
    // (g, e)(h, d) = (g F^e(h), e + d)
    let mul = |x: &(SignedPermutation, usize), y: &(SignedPermutation, usize)| (x.0.compose(&f_pow(&y.0, x.1)), (x.1 + y.1) % k);
    let inv = |x: &(SignedPermutation, usize)| {
        let e = (k - x.1) % k;
        (f_pow(&x.0.inverse(), e), e)
    };
    let a_tilde = (a.clone(), 1 % k);
    let mut conjugating = 0u64;
    for g in b {
        for e in 0..k {
            let gt = (g.clone(), e);
            let c = mul(&mul(&inv(&gt), &a_tilde), &gt);
            if in_a.contains(&c.0) {
                conjugating += 1;
            }
        }
    }
    let semidirect = conjugating / (a_sub.len() * k) as u64;
    Ok(CosetFixing {
        cosets,
        centralizer_sum,
        semidirect,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::group_elements_of_type;

    fn spec(family: Family, n: usize, q: u64) -> GroupSpec {
        GroupSpec::with_q(family, n, q).unwrap()
    }

    fn label(s: &str) -> WeylClassLabel {
        s.parse().unwrap()
    }

    const G: u128 = DEFAULT_ELEMENT_GUARD;

    #[test]
    fn reflection_orbits() {
        assert_eq!(weyl_orbit_by_reflections(WeylType::A, 4, 2).len(), 6);
        assert_eq!(weyl_orbit_by_reflections(WeylType::B, 3, 2).len(), 12);
        assert_eq!(weyl_orbit_by_reflections(WeylType::D, 3, 3).len(), 4);
        assert_eq!(weyl_orbit_by_reflections(WeylType::D, 3, 1).len(), 6);
    }

    #[test]
    fn element_level_examples() {
        assert_eq!(torus_element_qchar_count(&spec(Family::Sp, 2, 3), &label("-1-1"), 1, G).unwrap(), 0);
        assert_eq!(torus_element_qchar_count(&spec(Family::Gl, 2, 2), &label("2"), 2, G).unwrap(), 1);
        assert_eq!(torus_element_qchar_count(&spec(Family::Gl, 3, 3), &label("1+1+1"), 2, G).unwrap(), 3);
        assert_eq!(torus_element_qchar_count(&spec(Family::Sl, 2, 2), &label("2"), 1, G).unwrap(), 0);
        assert!(torus_element_qchar_count(&spec(Family::Gl, 3, 9), &label("3"), 1, 100).is_err());
    }

    #[test]
    fn primitive_polynomials() {
        let f2 = build_field(2, 1).unwrap();
        assert_eq!(smallest_primitive_polynomial(&f2, 1), vec![1, 1]);
        assert_eq!(smallest_primitive_polynomial(&f2, 3), vec![1, 1, 0, 1]);
        let f3 = build_field(3, 1).unwrap();
        assert_eq!(smallest_primitive_polynomial(&f3, 1), vec![1, 1]);
    }

    #[test]
    fn orbit_count_examples() {
        assert_eq!(torus_orbit_count(&spec(Family::Gl, 2, 3), &label("1+1"), G).unwrap(), 3);
        assert_eq!(torus_orbit_count(&spec(Family::Gl, 3, 2), &label("3"), G).unwrap(), 1);
        assert_eq!(torus_orbit_count(&spec(Family::Sl, 2, 3), &label("1+1"), G).unwrap(), 4);
        assert!(torus_orbit_count(&spec(Family::Sp, 2, 3), &label("2"), G).is_err());
        assert!(torus_orbit_count(&spec(Family::Gl, 4, 5), &label("4"), 100).is_err());
    }

    #[test]
    fn exterior_power_examples() {
        assert_eq!(exterior_power_fixed_dim(3, 1, &label("1+1+1"), G).unwrap(), 3);
        assert_eq!(exterior_power_fixed_dim(3, 1, &label("3"), G).unwrap(), 0);
        assert_eq!(exterior_power_fixed_dim(4, 2, &label("2+2"), G).unwrap(), 2);
        assert_eq!(exterior_power_fixed_dim(4, 0, &label("4"), G).unwrap(), 1);
    }

    #[test]
    fn coset_fixing_examples() {
        let s4 = group_elements_of_type(WeylType::A, 4);
        let young: Vec<_> = s4.iter().filter(|g| g.fixes(&[1, 1, 0, 0])).cloned().collect();
        let id = SignedPermutation::identity(4);
        let r = coset_fixing_oracle(&s4, &young, &id, None, G).unwrap();
        assert!(r.agree());
        assert_eq!(r.cosets, 6);
        let a = SignedPermutation::new(vec![1, 0, 3, 2], vec![1; 4]).unwrap();
        let r = coset_fixing_oracle(&s4, &young, &a, None, G).unwrap();
        assert!(r.agree());
        assert_eq!(r.cosets, 2);

        // W(D_3) inside W(B_3), twisted by an element of W(B_3) outside W(D_3)
        let b3 = group_elements_of_type(WeylType::B, 3);
        let d3 = group_elements_of_type(WeylType::D, 3);
        for a in b3.iter().filter(|g| g.negative_count() % 2 == 1) {
            let r = coset_fixing_oracle(&b3, &d3, a, Some(a), G).unwrap();
            assert!(r.agree(), "{a}: {r:?}");
        }
    }
}
