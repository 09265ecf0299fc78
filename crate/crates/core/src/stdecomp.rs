//! Unipotent parts of products with the Steinberg character, as exact
//! rational vectors over the formal basis `R_{T_w,1}` indexed by torus
//! classes. The basis is orthogonal with `(R_{T_w,1}, R_{T_w,1}) = |W(T_w)|`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tori::orbit_char_multiplicity;
use crate::truncpoly::{check_strongly_q_restricted, d0_for_special_weight, LambdaWeight};
use crate::weyl::{
    canonical_representative, centralizer_order, check_levi_index, enumerate_classes, epsilon_sign,
    fixed_weight_count, Family, GroupSpec, WeylClassLabel,
};

/// Values `(φ|_{T_w}, 1_{T_w})` for every torus class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunctionOnTori {
    pub spec: GroupSpec,
    pub values: BTreeMap<WeylClassLabel, u64>,
}

impl ClassFunctionOnTori {
    /// Builds a class function from a value per class; every class must be present.
    pub fn from_fn(spec: &GroupSpec, mut f: impl FnMut(&WeylClassLabel) -> Result<u64>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for label in enumerate_classes(spec) {
            let v = f(&label)?;
            values.insert(label, v);
        }
        Ok(ClassFunctionOnTori { spec: *spec, values })
    }

    pub fn constant(spec: &GroupSpec, c: u64) -> Self {
        Self::from_fn(spec, |_| Ok(c)).expect("constant functions are total")
    }

    fn check_complete(&self) -> Result<()> {
        for label in enumerate_classes(&self.spec) {
            if !self.values.contains_key(&label) {
                return Err(Error::Precondition(format!("missing value for torus class {label}")));
            }
        }
        if self.values.len() != enumerate_classes(&self.spec).len() {
            return Err(Error::Precondition("values given for labels outside the group".into()));
        }
        Ok(())
    }
}

/// `s_{(q−1)ω_j}` restricted to tori: orbit weights that are q-characters.
pub fn orbit_character_function(spec: &GroupSpec, j: usize) -> Result<ClassFunctionOnTori> {
    ClassFunctionOnTori::from_fn(spec, |l| orbit_char_multiplicity(spec, l, j))
}

/// `1_{W_j}^W` on torus classes, through fixed weights of the representative.
pub fn induced_trivial_function(spec: &GroupSpec, j: usize) -> Result<ClassFunctionOnTori> {
    ClassFunctionOnTori::from_fn(spec, |l| fixed_weight_count(&canonical_representative(spec, l)?, spec, j))
}

/// The torus-orbit character `χ` on `F_q^n` (GL: `2^k − 1`) or its
/// restriction to SL (`q − 3 + 2^k`), with `k` the number of parts.
pub fn vector_orbit_function(spec: &GroupSpec) -> Result<ClassFunctionOnTori> {
    let extra = match spec.family {
        Family::Gl => 0,
        Family::Sl => spec.q() - 2,
        _ => return Err(Error::Precondition(format!("{spec} is not GL or SL"))),
    };
    ClassFunctionOnTori::from_fn(spec, |l| Ok((1u64 << l.num_parts()) - 1 + extra))
}

/// Rational coefficients of `R_{T_w,1}` per torus class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualUnipotentVector {
    pub spec: GroupSpec,
    pub coeffs: BTreeMap<WeylClassLabel, BigRational>,
}

impl VirtualUnipotentVector {
    pub fn zero(spec: &GroupSpec) -> Self {
        VirtualUnipotentVector {
            spec: *spec,
            coeffs: enumerate_classes(spec)
                .into_iter()
                .map(|l| (l, BigRational::zero()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(Zero::is_zero)
    }

    pub fn coeff(&self, label: &WeylClassLabel) -> BigRational {
        self.coeffs.get(label).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `Σ_w u(w)·v(w)·|W(T_w)|`.
    pub fn inner(&self, other: &Self) -> Result<BigRational> {
        if self.spec != other.spec {
            return Err(Error::Precondition("vectors belong to different groups".into()));
        }
        let mut total = BigRational::zero();
        for (label, a) in &self.coeffs {
            let b = other.coeff(label);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let c = BigInt::from(centralizer_order(&self.spec, label)?);
            total += a * b * BigRational::from_integer(c);
        }
        Ok(total)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (label, b) in &other.coeffs {
            *coeffs.entry(label.clone()).or_insert_with(BigRational::zero) += b;
        }
        VirtualUnipotentVector { spec: self.spec, coeffs }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        VirtualUnipotentVector {
            spec: self.spec,
            coeffs: self.coeffs.iter().map(|(l, c)| (l.clone(), c * k)).collect(),
        }
    }
}

fn signed_fraction(spec: &GroupSpec, label: &WeylClassLabel, value: u64) -> Result<BigRational> {
    let sign = BigInt::from(epsilon_sign(spec, label)?);
    let c = BigInt::from(centralizer_order(spec, label)?);
    Ok(BigRational::new(sign * BigInt::from(value), c))
}

/// `St = Σ ε_G ε_{T_w} R_{T_w,1} / |W(T_w)|`.
pub fn steinberg_vector(spec: &GroupSpec) -> Result<VirtualUnipotentVector> {
    unipotent_part(&ClassFunctionOnTori::constant(spec, 1))
}

/// `u(φ·St) = Σ (φ|_{T_w},1) ε_G ε_{T_w} R_{T_w,1} / |W(T_w)|`.
pub fn unipotent_part(phi: &ClassFunctionOnTori) -> Result<VirtualUnipotentVector> {
    phi.check_complete()?;
    let mut coeffs = BTreeMap::new();
    for (label, &v) in &phi.values {
        coeffs.insert(label.clone(), signed_fraction(&phi.spec, label, v)?);
    }
    Ok(VirtualUnipotentVector { spec: phi.spec, coeffs })
}

/// `(St, φ·St) = Σ (φ|_{T_w},1) / |W(T_w)|`.
pub fn steinberg_inner(phi: &ClassFunctionOnTori) -> Result<BigRational> {
    phi.check_complete()?;
    let mut total = BigRational::zero();
    for (label, &v) in &phi.values {
        let c = BigInt::from(centralizer_order(&phi.spec, label)?);
        total += BigRational::new(BigInt::from(v), c);
    }
    Ok(total)
}

/// Whether the multiplicities on tori are those of `1_{W_j}^W`.
pub fn is_l_controlled(phi: &ClassFunctionOnTori, j: usize) -> Result<bool> {
    phi.check_complete()?;
    check_levi_index(&phi.spec, j)?;
    for (label, &v) in &phi.values {
        let w = canonical_representative(&phi.spec, label)?;
        if fixed_weight_count(&w, &phi.spec, j)? != v {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `St_{L_j}^{#G}` with coefficients `ε_G ε_{T_w} 1_{W_j}^W(w) / |W(T_w)|`.
pub fn hc_steinberg_vector(spec: &GroupSpec, j: usize) -> Result<VirtualUnipotentVector> {
    check_levi_index(spec, j)?;
    let mut coeffs = BTreeMap::new();
    for label in enumerate_classes(spec) {
        let w = canonical_representative(spec, &label)?;
        let induced = fixed_weight_count(&w, spec, j)?;
        let c = signed_fraction(spec, &label, induced)?;
        coeffs.insert(label, c);
    }
    Ok(VirtualUnipotentVector { spec: *spec, coeffs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Th5Case {
    Generic,
    Special { i: usize },
}

/// Decomposition of `u(β_ν·St)` for a strongly q-restricted `ν` of `SL_n(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Th5Report {
    pub spec: GroupSpec,
    pub nu: LambdaWeight,
    pub case: Th5Case,
    pub d0: u64,
    pub per_torus_values: ClassFunctionOnTori,
    pub vector: VirtualUnipotentVector,
}

/// Special case `ν = (q−1)λ_i`: `u = d_0·St + St_{L_i}^{#G}` with `d_0`
/// computed from `n | i(p−1)`. Otherwise `u = d_0·St`, where `d_0` is the
/// zero-weight multiplicity of the module; it is known for `ν = 0` and must be
/// supplied for any other weight.
pub fn theorem_th5_report(spec: &GroupSpec, nu: &LambdaWeight, d0: Option<u64>) -> Result<Th5Report> {
    if spec.family != Family::Sl {
        return Err(Error::Precondition(format!("{spec} is not of type SL")));
    }
    if nu.coords.len() + 1 != spec.n {
        return Err(Error::Precondition(format!(
            "weight {nu} needs {} coordinates for n = {}",
            spec.n - 1,
            spec.n
        )));
    }
    check_strongly_q_restricted(nu, spec.p, spec.m).map_err(Error::NotStronglyRestricted)?;
    let q = spec.q() as i64;
    let special = nu.as_fundamental_multiple().filter(|&(_, k)| k == q - 1).map(|(i, _)| i);
    let (case, d0) = match special {
        Some(i) => {
            let computed = d0_for_special_weight(spec.n, spec.p, i)?;
            if let Some(given) = d0.filter(|&g| g != computed) {
                return Err(Error::Precondition(format!(
                    "d0 = {given} contradicts the computed value {computed} for (q-1)λ_{i}"
                )));
            }
            (Th5Case::Special { i }, computed)
        }
        None if nu.is_zero() => {
            if let Some(given) = d0.filter(|&g| g != 1) {
                return Err(Error::Precondition(format!("d0 = {given} but the zero weight has d0 = 1")));
            }
            (Th5Case::Generic, 1)
        }
        None => {
            let d0 = d0.ok_or_else(|| Error::Precondition(format!("d0 must be supplied for {nu}")))?;
            (Th5Case::Generic, d0)
        }
    };
    let st = steinberg_vector(spec)?;
    let base = st.scale(&BigRational::from_integer(BigInt::from(d0)));
    let (vector, per_torus_values) = match case {
        Th5Case::Special { i } => {
            let induced = induced_trivial_function(spec, i)?;
            let values = ClassFunctionOnTori {
                spec: *spec,
                values: induced.values.iter().map(|(l, v)| (l.clone(), v + d0)).collect(),
            };
            (base.add(&hc_steinberg_vector(spec, i)?), values)
        }
        Th5Case::Generic => (base, ClassFunctionOnTori::constant(spec, d0)),
    };
    Ok(Th5Report {
        spec: *spec,
        nu: nu.clone(),
        case,
        d0,
        per_torus_values,
        vector,
    })
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

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn steinberg_small_cases() {
        let st = steinberg_vector(&spec(Family::Gl, 2, 3)).unwrap();
        assert_eq!(st.coeff(&label("1+1")), r(1, 2));
        assert_eq!(st.coeff(&label("2")), r(-1, 2));
        let st1 = steinberg_vector(&spec(Family::Gl, 1, 3)).unwrap();
        assert_eq!(st1.coeff(&label("1")), r(1, 1));
        assert_eq!(st.inner(&st).unwrap(), r(1, 1));
    }

    #[test]
    fn unipotent_parts() {
        let s = spec(Family::Gl, 3, 2);
        assert!(unipotent_part(&ClassFunctionOnTori::constant(&s, 0)).unwrap().is_zero());
        assert_eq!(
            unipotent_part(&ClassFunctionOnTori::constant(&s, 1)).unwrap(),
            steinberg_vector(&s).unwrap()
        );
        let u = unipotent_part(&induced_trivial_function(&s, 1).unwrap()).unwrap();
        assert_eq!(u.coeff(&label("1+1+1")), r(1, 2));
        assert_eq!(u.coeff(&label("2+1")), r(-1, 2));
        assert_eq!(u.coeff(&label("3")), r(0, 1));
        assert_eq!(u, hc_steinberg_vector(&s, 1).unwrap());
    }

    #[test]
    fn incomplete_function_rejected() {
        let s = spec(Family::Gl, 2, 2);
        let mut phi = ClassFunctionOnTori::constant(&s, 1);
        phi.values.remove(&label("2"));
        assert!(unipotent_part(&phi).is_err());
        assert!(steinberg_inner(&phi).is_err());
    }

    #[test]
    fn steinberg_inner_values() {
        for n in 1..=4 {
            let gl = spec(Family::Gl, n, 3);
            assert_eq!(steinberg_inner(&vector_orbit_function(&gl).unwrap()).unwrap(), r(n as i64, 1));
            let sl = spec(Family::Sl, n, 4);
            assert_eq!(
                steinberg_inner(&vector_orbit_function(&sl).unwrap()).unwrap(),
                r(n as i64 + 2, 1)
            );
        }
        assert_eq!(steinberg_inner(&ClassFunctionOnTori::constant(&spec(Family::Sp, 3, 3), 0)).unwrap(), r(0, 1));
    }

    #[test]
    fn l_control() {
        let s = spec(Family::Sp, 3, 3);
        assert!(is_l_controlled(&orbit_character_function(&s, 2).unwrap(), 2).unwrap());
        assert!(is_l_controlled(&ClassFunctionOnTori::constant(&s, 1), 0).unwrap());
        assert_eq!(hc_steinberg_vector(&s, 0).unwrap(), steinberg_vector(&s).unwrap());
        let gl2 = spec(Family::Gl, 2, 3);
        assert!(!is_l_controlled(&ClassFunctionOnTori::constant(&gl2, 1), 1).unwrap());
    }

    #[test]
    fn maximally_split_torus_has_positive_steinberg_coefficient() {
        for family in Family::ALL {
            let q = if family.allows_q(3) { 3 } else { 2 };
            let s = spec(family, 3, q);
            let st = steinberg_vector(&s).unwrap();
            let split = enumerate_classes(&s).into_iter().max_by_key(|l| l.positive_parts.len()).unwrap();
            assert!(st.coeff(&split) > BigRational::zero(), "{s}");
            assert_eq!(st.inner(&st).unwrap(), r(1, 1));
        }
    }

    #[test]
    fn th5_examples() {
        let rep = theorem_th5_report(&spec(Family::Sl, 2, 3), &LambdaWeight::new(vec![2]), None).unwrap();
        assert_eq!(rep.case, Th5Case::Special { i: 1 });
        assert_eq!(rep.d0, 1);
        let st = steinberg_vector(&rep.spec).unwrap();
        assert_eq!(rep.vector, st.add(&hc_steinberg_vector(&rep.spec, 1).unwrap()));

        let rep = theorem_th5_report(&spec(Family::Sl, 3, 2), &LambdaWeight::new(vec![1, 0]), None).unwrap();
        assert_eq!(rep.case, Th5Case::Special { i: 1 });
        assert_eq!(rep.d0, 0);
        assert_eq!(rep.vector, hc_steinberg_vector(&rep.spec, 1).unwrap());

        let rep = theorem_th5_report(&spec(Family::Sl, 2, 5), &LambdaWeight::new(vec![1]), Some(0)).unwrap();
        assert_eq!(rep.case, Th5Case::Generic);
        assert!(rep.vector.is_zero());

        assert!(theorem_th5_report(&spec(Family::Sl, 2, 5), &LambdaWeight::new(vec![1]), None).is_err());
        assert!(matches!(
            theorem_th5_report(&spec(Family::Sl, 3, 3), &LambdaWeight::new(vec![2, 2]), Some(0)),
            Err(Error::NotStronglyRestricted(_))
        ));
        assert!(theorem_th5_report(&spec(Family::Sl, 2, 3), &LambdaWeight::new(vec![2]), Some(0)).is_err());
        let zero = theorem_th5_report(&spec(Family::Sl, 3, 3), &LambdaWeight::new(vec![0, 0]), None).unwrap();
        assert_eq!(zero.vector, steinberg_vector(&zero.spec).unwrap());
    }
}
