//! Verification sweeps: each check pairs a closed-form computation with an
//! independent recomputation over a parameter grid and reports one cell per
//! comparison.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Display};
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{self, DEFAULT_ELEMENT_GUARD};
use crate::stdecomp::{
    hc_steinberg_vector, is_l_controlled, orbit_character_function, steinberg_inner,
    steinberg_vector, theorem_th5_report, unipotent_part, vector_orbit_function, Th5Case,
};
use crate::tori::{build_canonical_torus, nondivisibility_check, orbit_char_multiplicity, Weight};
use crate::truncpoly::{
    self, count_trivial_monomial_weights, d0_for_special_weight, is_strongly_p_restricted, is_strongly_q_restricted,
    monomial_weight, monomials, steinberg_expansion_unique, weight_multiplicity_rmn, weight_multiplicity_rmn_brute,
    weight_multiplicity_rn, zero_weight_monomials_of_degree, LambdaWeight,
};
use crate::weyl::{
    self, canonical_representative, centralizer_order, enumerate_classes, fixed_weight_count, group_elements,
    induced_trivial_by_cosets_with_guard, prime_power, weyl_group_order, Family, GroupSpec, SignedPermutation,
    WeylClassLabel, WeylType, DEFAULT_GROUP_GUARD,
};

/// One comparison: the closed form on the left, the independent value on the right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub key: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl Cell {
    pub fn compare<T: PartialEq + Display>(key: impl Into<String>, lhs: T, rhs: T) -> Self {
        Cell {
            key: key.into(),
            pass: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Check {
    /// Orbit q-character counts vs fixed weights vs fixed cosets.
    Th1,
    /// Unipotent part of the orbit character vs the induced Steinberg vector.
    Th2,
    /// Decomposition for strongly restricted SL weights.
    Th5,
    /// L-control and the induced-Steinberg identity.
    Dd3,
    /// Torus orbits on nonzero vectors.
    Pm1,
    /// Sum of induced trivial characters over all `j`.
    Pm2,
    /// Steinberg inner product with the vector orbit character.
    Pp3,
    /// Nondivisibility of `r(q−1)Σq^{l_i}` by `q^n − 1`.
    Au1,
    /// Weight multiplicities in `R̄_n`.
    Zw1,
    /// Realized dominant weights of `R̄_n`.
    D1d,
    /// Digit decompositions and multiplicities in `R̄_{mn}`.
    Zz1,
    /// Trivial monomial weights on tori.
    M1m,
    /// Coset fixing by three routes, plus centralizer cross-checks.
    In8,
    /// Fixed subspaces of exterior powers over `F_2`.
    ExtPower,
    /// Element-level q-character oracle.
    Elements,
    /// Steinberg self-pairing and pairing with induced Steinberg vectors.
    Steinberg,
}

impl Check {
    pub const ALL: [Check; 16] = [
        Check::Th1,
        Check::Th2,
        Check::Th5,
        Check::Dd3,
        Check::Pm1,
        Check::Pm2,
        Check::Pp3,
        Check::Au1,
        Check::Zw1,
        Check::D1d,
        Check::Zz1,
        Check::M1m,
        Check::In8,
        Check::ExtPower,
        Check::Elements,
        Check::Steinberg,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Check::Th1 => "th1",
            Check::Th2 => "th2",
            Check::Th5 => "th5",
            Check::Dd3 => "dd3",
            Check::Pm1 => "pm1",
            Check::Pm2 => "pm2",
            Check::Pp3 => "pp3",
            Check::Au1 => "au1",
            Check::Zw1 => "zw1",
            Check::D1d => "d1d",
            Check::Zz1 => "zz1",
            Check::M1m => "m1m",
            Check::In8 => "in8",
            Check::ExtPower => "ext-power",
            Check::Elements => "elements",
            Check::Steinberg => "steinberg",
        }
    }
}

impl Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// Parameter grid of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub max_n: usize,
    /// Largest `n` for GL and SL (defaults to `max_n`).
    pub max_n_type_a: Option<usize>,
    /// Field sizes; each must be a prime power.
    pub q_list: Vec<u64>,
    /// Cap on enumerated elements, vectors or monomials.
    pub max_enum: u128,
    /// Cap on explicitly enumerated Weyl groups.
    pub max_group: u128,
}

impl Grid {
    pub fn new(max_n: usize, q_list: &[u64]) -> Self {
        Grid {
            max_n,
            max_n_type_a: None,
            q_list: q_list.to_vec(),
            max_enum: DEFAULT_ELEMENT_GUARD,
            max_group: DEFAULT_GROUP_GUARD,
        }
    }

    pub fn with_type_a(mut self, max_n: usize) -> Self {
        self.max_n_type_a = Some(max_n);
        self
    }

    pub fn with_max_enum(mut self, limit: u128) -> Self {
        self.max_enum = limit;
        self
    }

    fn n_limit(&self, family: Family) -> usize {
        match family.weyl_type() {
            WeylType::A => self.max_n_type_a.unwrap_or(self.max_n),
            _ => self.max_n,
        }
    }

    fn field_sizes(&self) -> Result<Vec<(u64, u32)>> {
        let mut out = Vec::new();
        for &q in &self.q_list {
            let pm = prime_power(q).ok_or_else(|| Error::InvalidSpec(format!("{q} is not a prime power")))?;
            if !out.contains(&pm) {
                out.push(pm);
            }
        }
        Ok(out)
    }

    fn primes(&self) -> Result<Vec<u64>> {
        Ok(self.field_sizes()?.into_iter().map(|(p, _)| p).unique().collect())
    }

    /// Every valid group of the given families on the grid.
    fn specs(&self, families: &[Family]) -> Result<Vec<GroupSpec>> {
        let mut out = Vec::new();
        for &family in families {
            for &(p, m) in &self.field_sizes()? {
                if !family.allows_q(p.pow(m)) {
                    continue;
                }
                for n in family.min_rank()..=self.n_limit(family) {
                    out.push(GroupSpec::new(family, n, p, m)?);
                }
            }
        }
        Ok(out)
    }
}

/// Levi indices swept for a group: all `1..=n`, except `n` for SL (where
/// `ω_n` vanishes) and for the twisted type-D family.
pub fn levi_indices(spec: &GroupSpec) -> std::ops::RangeInclusive<usize> {
    match spec.family {
        Family::Sl | Family::SoMinus | Family::SpinMinus => 1..=spec.n - 1,
        _ => 1..=spec.n,
    }
}

fn key(check: Check, spec: &GroupSpec, rest: &str) -> String {
    format!("{check}/{}/n={}/q={}/{rest}", spec.family, spec.n, spec.q())
}

fn par_cells<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Vec<Cell>> + Sync + Send) -> Result<Vec<Cell>> {
    let nested: Vec<Vec<Cell>> = items.par_iter().map(f).collect::<Result<_>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn class_cells(specs: &[GroupSpec]) -> Vec<(GroupSpec, WeylClassLabel)> {
    specs
        .iter()
        .flat_map(|s| enumerate_classes(s).into_iter().map(move |l| (*s, l)))
        .collect()
}

/// Runs one check over the grid. Cells are sorted by key.
pub fn run(check: Check, grid: &Grid) -> Result<Vec<Cell>> {
    let mut cells = match check {
        Check::Th1 => th1(grid)?,
        Check::Th2 => th2(grid)?,
        Check::Th5 => th5(grid)?,
        Check::Dd3 => dd3(grid)?,
        Check::Pm1 => pm1(grid)?,
        Check::Pm2 => pm2(grid)?,
        Check::Pp3 => pp3(grid)?,
        Check::Au1 => au1(grid)?,
        Check::Zw1 => zw1(grid)?,
        Check::D1d => d1d(grid)?,
        Check::Zz1 => zz1(grid)?,
        Check::M1m => m1m(grid)?,
        Check::In8 => in8(grid)?,
        Check::ExtPower => ext_power(grid)?,
        Check::Elements => elements(grid)?,
        Check::Steinberg => steinberg(grid)?,
    };
    cells.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(cells)
}

fn th1(grid: &Grid) -> Result<Vec<Cell>> {
    let cells = class_cells(&grid.specs(&Family::ALL)?);
    par_cells(&cells, |(spec, label)| {
        let w = canonical_representative(spec, label)?;
        let small_group = weyl_group_order(spec) <= grid.max_group.into();
        let mut out = Vec::new();
        for j in levi_indices(spec) {
            let orbit = orbit_char_multiplicity(spec, label, j)?;
            let fixed = fixed_weight_count(&w, spec, j)?;
            out.push(Cell::compare(key(Check::Th1, spec, &format!("{label}/j={j}/weights")), orbit, fixed));
            if small_group {
                let cosets = induced_trivial_by_cosets_with_guard(&w, spec, j, grid.max_group)?;
                out.push(Cell::compare(key(Check::Th1, spec, &format!("{label}/j={j}/cosets")), fixed, cosets));
            }
            // per-weight form of the identity for untwisted, non-SL groups
            if !spec.is_twisted() && spec.family != Family::Sl {
                let torus = build_canonical_torus(spec, label)?;
                let agree = weyl::omega_orbit(spec, j)?
                    .iter()
                    .all(|mu| torus.is_q_character(mu) == w.fixes(&mu.eps));
                out.push(Cell::compare(key(Check::Th1, spec, &format!("{label}/j={j}/per-weight")), agree, true));
            }
        }
        Ok(out)
    })
}

fn th2(grid: &Grid) -> Result<Vec<Cell>> {
    let specs = grid.specs(&Family::ALL)?;
    par_cells(&specs, |spec| {
        let mut out = Vec::new();
        for j in levi_indices(spec) {
            let u = unipotent_part(&orbit_character_function(spec, j)?)?;
            let hc = hc_steinberg_vector(spec, j)?;
            out.push(Cell::compare(key(Check::Th2, spec, &format!("j={j}")), VectorDisplay(&u.coeffs), VectorDisplay(&hc.coeffs)));
        }
        Ok(out)
    })
}

/// Rational vector shown as `label:num/den` pairs.
#[derive(PartialEq)]
struct VectorDisplay<'a>(&'a BTreeMap<WeylClassLabel, BigRational>);

impl Display for VectorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(l, c)| format!("{l}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn dd3(grid: &Grid) -> Result<Vec<Cell>> {
    let specs = grid.specs(&Family::ALL)?;
    par_cells(&specs, |spec| {
        let mut out = Vec::new();
        for j in levi_indices(spec) {
            let phi = orbit_character_function(spec, j)?;
            out.push(Cell::compare(key(Check::Dd3, spec, &format!("j={j}/l-controlled")), is_l_controlled(&phi, j)?, true));
            let by_cosets = if weyl_group_order(spec) <= grid.max_group.into() {
                let mut values = BTreeMap::new();
                for label in enumerate_classes(spec) {
                    let w = canonical_representative(spec, &label)?;
                    values.insert(label, induced_trivial_by_cosets_with_guard(&w, spec, j, grid.max_group)?);
                }
                Some(values)
            } else {
                None
            };
            if let Some(values) = by_cosets {
                out.push(Cell::compare(
                    key(Check::Dd3, spec, &format!("j={j}/coset-values")),
                    ValuesDisplay(&phi.values),
                    ValuesDisplay(&values),
                ));
            }
            let u = unipotent_part(&phi)?;
            let hc = hc_steinberg_vector(spec, j)?;
            out.push(Cell::compare(key(Check::Dd3, spec, &format!("j={j}/vector")), VectorDisplay(&u.coeffs), VectorDisplay(&hc.coeffs)));
        }
        if spec.family == Family::Gl {
            // u(χ·St) is the sum of the induced Steinberg vectors over all j
            let u = unipotent_part(&vector_orbit_function(spec)?)?;
            let mut sum = hc_steinberg_vector(spec, 1)?;
            for j in 2..=spec.n {
                sum = sum.add(&hc_steinberg_vector(spec, j)?);
            }
            out.push(Cell::compare(key(Check::Dd3, spec, "vector-orbit-sum"), VectorDisplay(&u.coeffs), VectorDisplay(&sum.coeffs)));
        }
        Ok(out)
    })
}

#[derive(PartialEq)]
struct ValuesDisplay<'a>(&'a BTreeMap<WeylClassLabel, u64>);

impl Display for ValuesDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(l, v)| format!("{l}:{v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn steinberg(grid: &Grid) -> Result<Vec<Cell>> {
    let specs = grid.specs(&Family::ALL)?;
    let one = BigRational::from_integer(BigInt::from(1));
    par_cells(&specs, |spec| {
        let st = steinberg_vector(spec)?;
        let mut out = vec![Cell::compare(key(Check::Steinberg, spec, "st-st"), st.inner(&st)?, one.clone())];
        for j in levi_indices(spec) {
            let hc = hc_steinberg_vector(spec, j)?;
            out.push(Cell::compare(key(Check::Steinberg, spec, &format!("st-hc/j={j}")), st.inner(&hc)?, one.clone()));
            let phi = orbit_character_function(spec, j)?;
            out.push(Cell::compare(
                key(Check::Steinberg, spec, &format!("inner-formula/j={j}")),
                steinberg_inner(&phi)?,
                st.inner(&unipotent_part(&phi)?)?,
            ));
        }
        Ok(out)
    })
}

fn elements(grid: &Grid) -> Result<Vec<Cell>> {
    let cells = class_cells(&grid.specs(&Family::ALL)?);
    par_cells(&cells, |(spec, label)| {
        let torus = build_canonical_torus(spec, label)?;
        let full: BigInt = (0..torus.blocks.len()).map(|i| torus.block_order(i)).product();
        if full > BigInt::from(grid.max_enum) {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for j in levi_indices(spec) {
            let brute = oracle::torus_element_qchar_count(spec, label, j, grid.max_enum)?;
            let formula = orbit_char_multiplicity(spec, label, j)?;
            out.push(Cell::compare(key(Check::Elements, spec, &format!("{label}/j={j}")), formula, brute));
        }
        Ok(out)
    })
}

fn pm1(grid: &Grid) -> Result<Vec<Cell>> {
    let specs: Vec<GroupSpec> = grid
        .specs(&[Family::Gl, Family::Sl])?
        .into_iter()
        .filter(|s| (s.q() as u128).checked_pow(s.n as u32).is_some_and(|v| v <= grid.max_enum))
        .collect();
    let cells = class_cells(&specs);
    par_cells(&cells, |(spec, label)| {
        let orbits = oracle::torus_orbit_count(spec, label, grid.max_enum)?;
        let k = label.num_parts() as u32;
        let expected = match spec.family {
            Family::Gl => 2u64.pow(k) - 1,
            _ => spec.q() + 2u64.pow(k) - 3,
        };
        let formula = vector_orbit_function(spec)?.values[label];
        Ok(vec![
            Cell::compare(key(Check::Pm1, spec, &format!("{label}/orbits")), expected, orbits),
            Cell::compare(key(Check::Pm1, spec, &format!("{label}/character")), formula, orbits),
        ])
    })
}

fn pm2(grid: &Grid) -> Result<Vec<Cell>> {
    let max_n = grid.max_n_type_a.unwrap_or(grid.max_n);
    let mut out = Vec::new();
    for n in 1..=max_n {
        let spec = GroupSpec::new(Family::Gl, n, 2, 1)?;
        let elements = group_elements(&spec, grid.max_group)?;
        let sums: Vec<(Vec<usize>, u64)> = elements
            .par_iter()
            .map(|w| {
                let total = (1..=n).map(|j| fixed_weight_count(w, &spec, j)).sum::<Result<u64>>()?;
                Ok((w.cycle_type().0, total))
            })
            .collect::<Result<_>>()?;
        let mut by_type: BTreeMap<Vec<usize>, BTreeSet<u64>> = BTreeMap::new();
        for (t, s) in sums {
            by_type.entry(t).or_default().insert(s);
        }
        for (t, observed) in by_type {
            let expected = BTreeSet::from([2u64.pow(t.len() as u32) - 1]);
            let label = WeylClassLabel::partition(&t);
            out.push(Cell::compare(key(Check::Pm2, &spec, &label.to_string()), SetDisplay(&expected), SetDisplay(&observed)));
        }
    }
    Ok(out)
}

#[derive(PartialEq)]
struct SetDisplay<'a, T>(&'a BTreeSet<T>);

impl<T: Display> Display for SetDisplay<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn pp3(grid: &Grid) -> Result<Vec<Cell>> {
    let specs = grid.specs(&[Family::Gl, Family::Sl])?;
    par_cells(&specs, |spec| {
        let inner = steinberg_inner(&vector_orbit_function(spec)?)?;
        let n = spec.n as i64;
        let expected = match spec.family {
            Family::Gl => n,
            _ => n + spec.q() as i64 - 2,
        };
        Ok(vec![Cell::compare(key(Check::Pp3, spec, "st-chi-st"), inner, BigRational::from_integer(expected.into()))])
    })
}

/// `r(q−1)Σq^{l_i} mod (q^n − 1)` by modular accumulation.
fn au1_residue(n: usize, q: u64, r: u64, indices: &[usize]) -> u128 {
    let modulus = (q as u128).pow(n as u32) - 1;
    let mut acc = 0u128;
    for &l in indices {
        acc = (acc + (q as u128).pow(l as u32) % modulus.max(1)) % modulus.max(1);
    }
    acc * ((r * (q - 1)) as u128) % modulus.max(1)
}

fn au1(grid: &Grid) -> Result<Vec<Cell>> {
    let mut pairs = Vec::new();
    for n in 1..=grid.max_n {
        for &q in &grid.q_list {
            pairs.push((n, q));
        }
    }
    par_cells(&pairs, |&(n, q)| {
        let mut agree = 0u64;
        let mut total = 0u64;
        let mut exceptions = BTreeSet::new();
        for k in 1..=n {
            for indices in (0..n).combinations(k) {
                for r in 1..q {
                    let check = nondivisibility_check(n, q, r, &indices)?;
                    let direct = au1_residue(n, q, r, &indices) != 0;
                    total += 1;
                    agree += u64::from(check == direct);
                    if !check {
                        exceptions.insert(format!("r={r};l={}", indices.iter().join("")));
                    }
                }
            }
        }
        // known exceptions: k = n, every r
        let full = (0..n).join("");
        let expected: BTreeSet<String> = (1..q).map(|r| format!("r={r};l={full}")).collect();
        let k = format!("au1/n={n}/q={q}");
        Ok(vec![
            Cell::compare(format!("{k}/agree"), agree, total),
            Cell::compare(format!("{k}/exceptions"), SetDisplay(&expected), SetDisplay(&exceptions)),
        ])
    })
}

fn rn_grid(grid: &Grid) -> Result<Vec<(usize, u64)>> {
    let mut out = Vec::new();
    for p in grid.primes()? {
        for n in 2..=grid.max_n {
            if (p as u128).pow(n as u32) <= truncpoly::MONOMIAL_GUARD as u128 {
                out.push((n, p));
            }
        }
    }
    Ok(out)
}

fn weight_tally(p: u64, n: usize) -> Result<HashMap<LambdaWeight, u64>> {
    let mut tally = HashMap::new();
    for m in monomials(p, n)? {
        *tally.entry(monomial_weight(&m)).or_insert(0) += 1;
    }
    Ok(tally)
}

fn zw1(grid: &Grid) -> Result<Vec<Cell>> {
    par_cells(&rn_grid(grid)?, |&(n, p)| {
        let tally = weight_tally(p, n)?;
        // every weight in the box (−p, p)^{n−1}, realized or not
        let box_weights = (0..n - 1).map(|_| -(p as i64) + 1..p as i64).multi_cartesian_product();
        let mut agree = 0u64;
        let mut total = 0u64;
        for coords in box_weights {
            let nu = LambdaWeight::new(coords);
            total += 1;
            agree += u64::from(weight_multiplicity_rn(&nu, p, n) == tally.get(&nu).copied().unwrap_or(0));
        }
        let k = format!("zw1/n={n}/p={p}");
        Ok(vec![
            Cell::compare(format!("{k}/formula"), agree, total),
            Cell::compare(format!("{k}/zero-weight"), p, tally[&LambdaWeight::zero(n)]),
        ])
    })
}

fn d1d(grid: &Grid) -> Result<Vec<Cell>> {
    par_cells(&rn_grid(grid)?, |&(n, p)| {
        let tally = weight_tally(p, n)?;
        let mut agree = 0u64;
        let mut total = 0u64;
        for coords in (0..n - 1).map(|_| 0..p as i64).multi_cartesian_product() {
            let nu = LambdaWeight::new(coords);
            total += 1;
            agree += u64::from(is_strongly_p_restricted(&nu, p) == tally.contains_key(&nu));
        }
        // realized weights are bounded by p in absolute value
        let bounded = tally.keys().all(|nu| nu.coords.iter().all(|a| a.abs() < p as i64));
        let k = format!("d1d/n={n}/p={p}");
        Ok(vec![
            Cell::compare(format!("{k}/dominant"), agree, total),
            Cell::compare(format!("{k}/bounded"), bounded, true),
        ])
    })
}

fn rmn_grid(grid: &Grid) -> Result<Vec<(usize, u64, u32)>> {
    let mut out = Vec::new();
    for (p, m) in grid.field_sizes()? {
        for n in 2..=grid.max_n {
            let size = (p as u128).checked_pow(m * n as u32).unwrap_or(u128::MAX);
            if size <= truncpoly::MONOMIAL_GUARD as u128 {
                out.push((n, p, m));
            }
        }
    }
    Ok(out)
}

fn zz1(grid: &Grid) -> Result<Vec<Cell>> {
    par_cells(&rmn_grid(grid)?, |&(n, p, m)| {
        let q = p.pow(m);
        let k = format!("zz1/n={n}/q={q}");
        let mut targets = vec![(LambdaWeight::zero(n), q, "0".to_string())];
        for i in 1..n {
            targets.push((LambdaWeight::fundamental(n, i, q as i64 - 1), 1, format!("(q-1)l{i}")));
        }
        let mut out = Vec::new();
        for (nu, expected, name) in targets {
            let decompositions = steinberg_expansion_unique(&nu, p, m, n)?;
            out.push(Cell::compare(format!("{k}/{name}/decompositions"), 1, decompositions.len()));
            out.push(Cell::compare(format!("{k}/{name}/multiplicity"), expected, weight_multiplicity_rmn_brute(&nu, p, m, n)?));
            out.push(Cell::compare(format!("{k}/{name}/via-digits"), expected, weight_multiplicity_rmn(&nu, p, m, n)));
            out.push(Cell::compare(format!("{k}/{name}/restricted"), true, is_strongly_q_restricted(&nu, p, m)));
        }
        Ok(out)
    })
}

/// Whether an ε-weight is 0 or lies in the orbit of some `(q−1)ω_i`, modulo
/// the all-ones vector for SL.
fn is_scaled_subset_weight(w: &[i64], q: u64, sl: bool) -> bool {
    let k = q as i64 - 1;
    let shifts: Vec<i64> = if sl { w.iter().map(|&z| -z).collect() } else { vec![0] };
    shifts.into_iter().any(|s| w.iter().all(|&z| z + s == 0 || z + s == k))
}

fn m1m(grid: &Grid) -> Result<Vec<Cell>> {
    let specs: Vec<GroupSpec> = grid
        .specs(&[Family::Gl, Family::Sl])?
        .into_iter()
        .filter(|s| (s.p as u128).checked_pow(s.m * s.n as u32).is_some_and(|v| v <= truncpoly::MONOMIAL_GUARD as u128))
        .collect();
    let cells = class_cells(&specs);
    par_cells(&cells, |(spec, label)| {
        let count = count_trivial_monomial_weights(spec, label)?;
        let k = label.num_parts() as u32;
        let expected = match spec.family {
            Family::Gl => 2u64.pow(k),
            _ => spec.q() - 2 + 2u64.pow(k),
        };
        let mut out = vec![Cell::compare(key(Check::M1m, spec, &format!("{label}/count")), expected, count)];
        if spec.q() >= 3 && spec.n <= 3 {
            let torus = build_canonical_torus(spec, label)?;
            let sl = spec.family == Family::Sl;
            let ok = truncpoly::rmn_epsilon_weights(spec.p, spec.m, spec.n)?
                .into_iter()
                .filter(|w| torus.is_trivial_on_torus(&Weight::new(w.clone())))
                .all(|w| is_scaled_subset_weight(&w, spec.q(), sl));
            out.push(Cell::compare(key(Check::M1m, spec, &format!("{label}/per-weight")), true, ok));
        }
        Ok(out)
    })
}

fn th5(grid: &Grid) -> Result<Vec<Cell>> {
    let specs: Vec<GroupSpec> = grid.specs(&[Family::Sl])?.into_iter().filter(|s| s.n >= 2).collect();
    par_cells(&specs, |spec| {
        let q = spec.q() as i64;
        let mut out = Vec::new();
        let zero = theorem_th5_report(spec, &LambdaWeight::zero(spec.n), None)?;
        out.push(Cell::compare(
            key(Check::Th5, spec, "nu=0/vector"),
            VectorDisplay(&zero.vector.coeffs),
            VectorDisplay(&steinberg_vector(spec)?.coeffs),
        ));
        for i in 1..spec.n {
            let nu = LambdaWeight::fundamental(spec.n, i, q - 1);
            let rep = theorem_th5_report(spec, &nu, None)?;
            let k = |s: &str| key(Check::Th5, spec, &format!("i={i}/{s}"));
            out.push(Cell::compare(k("case"), format!("{:?}", rep.case), format!("{:?}", Th5Case::Special { i })));
            // zero-weight monomials in the homogeneous component of degree i(p−1)
            let zero_monomials = zero_weight_monomials_of_degree(spec.n, spec.p, i as u64 * (spec.p - 1))?;
            out.push(Cell::compare(k("d0"), rep.d0, zero_monomials));
            out.push(Cell::compare(k("d0-criterion"), rep.d0, d0_for_special_weight(spec.n, spec.p, i)?));
            let mut expected = BTreeMap::new();
            for label in enumerate_classes(spec) {
                expected.insert(label.clone(), orbit_char_multiplicity(spec, &label, i)? + rep.d0);
            }
            out.push(Cell::compare(k("per-torus"), ValuesDisplay(&rep.per_torus_values.values), ValuesDisplay(&expected)));
            let d0 = BigRational::from_integer(BigInt::from(rep.d0));
            let via_tori = steinberg_vector(spec)?
                .scale(&d0)
                .add(&unipotent_part(&orbit_character_function(spec, i)?)?);
            out.push(Cell::compare(k("vector"), VectorDisplay(&rep.vector.coeffs), VectorDisplay(&via_tori.coeffs)));
        }
        Ok(out)
    })
}

fn in8(grid: &Grid) -> Result<Vec<Cell>> {
    let mut specs = Vec::new();
    for family in [Family::Gl, Family::Sp, Family::SoPlus, Family::SoMinus] {
        for n in family.min_rank()..=grid.n_limit(family) {
            let spec = GroupSpec::new(family, n, 3, 1)?;
            if weyl_group_order(&spec) <= grid.max_enum.into() {
                specs.push(spec);
            }
        }
    }
    par_cells(&specs, |spec| {
        let mut out = Vec::new();
        let elements = group_elements(spec, grid.max_group)?;
        let r = SignedPermutation::last_sign_flip(spec.n);
        let twist = spec.is_twisted().then_some(&r);
        let order = weyl_group_order(spec);
        let mut class_sum = BigRational::from_integer(0.into());
        for label in enumerate_classes(spec) {
            let w = canonical_representative(spec, &label)?;
            let a = if spec.is_twisted() { w.compose(&r) } else { w.clone() };
            // explicit (F-)centralizer
            let frob = |g: &SignedPermutation| match twist {
                Some(r) => r.compose(g).compose(r),
                None => g.clone(),
            };
            let explicit = elements.iter().filter(|g| g.inverse().compose(&a).compose(&frob(g)) == a).count();
            let formula = centralizer_order(spec, &label)?;
            out.push(Cell::compare(key(Check::In8, spec, &format!("{label}/centralizer")), formula.clone(), explicit.into()));
            class_sum += BigRational::new(BigInt::from(order.clone()), BigInt::from(formula));
            for j in weyl_levels(spec) {
                let mut omega = vec![0i64; spec.n];
                omega[..j].fill(1);
                let stabilizer: Vec<SignedPermutation> = elements.iter().filter(|g| g.fixes(&omega)).cloned().collect();
                let routes = oracle::coset_fixing_oracle(&elements, &stabilizer, &a, twist, grid.max_enum)?;
                let fixed = fixed_weight_count(&w, spec, j)?;
                let k = |s: &str| key(Check::In8, spec, &format!("{label}/j={j}/{s}"));
                out.push(Cell::compare(k("centralizer-sum"), routes.centralizer_sum.clone(), BigRational::from_integer(routes.cosets.into())));
                out.push(Cell::compare(k("semidirect"), routes.semidirect, routes.cosets));
                out.push(Cell::compare(k("fixed-weights"), fixed, routes.cosets));
            }
        }
        out.push(Cell::compare(key(Check::In8, spec, "class-equation"), class_sum, BigRational::from_integer(order.into())));
        Ok(out)
    })
}

fn weyl_levels(spec: &GroupSpec) -> std::ops::RangeInclusive<usize> {
    if spec.is_twisted() {
        0..=spec.n - 1
    } else {
        0..=spec.n
    }
}

fn ext_power(grid: &Grid) -> Result<Vec<Cell>> {
    let max_n = grid.max_n_type_a.unwrap_or(grid.max_n);
    let specs: Vec<GroupSpec> = (1..=max_n).map(|n| GroupSpec::new(Family::Gl, n, 2, 1)).collect::<Result<_>>()?;
    let cells = class_cells(&specs);
    par_cells(&cells, |(spec, label)| {
        let w = canonical_representative(spec, label)?;
        (0..=spec.n)
            .map(|j| {
                let dim = oracle::exterior_power_fixed_dim(spec.n, j, label, grid.max_enum)?;
                let fixed = if j == 0 { 1 } else { fixed_weight_count(&w, spec, j)? };
                Ok(Cell::compare(key(Check::ExtPower, spec, &format!("{label}/j={j}")), fixed, dim))
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_ids_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.id().parse::<Check>().unwrap(), c);
        }
        assert!("th9".parse::<Check>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        let grid = Grid::new(3, &[2, 3]);
        for check in Check::ALL {
            let cells = run(check, &grid).unwrap();
            assert!(!cells.is_empty(), "{check}");
            let failures: Vec<&Cell> = cells.iter().filter(|c| !c.pass).collect();
            assert!(failures.is_empty(), "{check}: {failures:?}");
        }
    }

    #[test]
    fn au1_residue_matches_direct_value() {
        assert_eq!(au1_residue(3, 2, 1, &[0, 1, 2]), 0);
        assert_eq!(au1_residue(2, 3, 1, &[0]), 2);
    }

    #[test]
    fn scaled_subset_weights() {
        assert!(is_scaled_subset_weight(&[2, 0, 2], 3, false));
        assert!(!is_scaled_subset_weight(&[1, 0, 0], 3, false));
        assert!(is_scaled_subset_weight(&[3, 1, 1], 3, true));
    }
}
