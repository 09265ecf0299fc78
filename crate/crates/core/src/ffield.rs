//! Arithmetic in `F_{p^m}`.
//!
//! Elements are `u64` values whose base-`p` digits are the coefficients of a
//! polynomial in the residue class of `x` (digit `i` is the coefficient of
//! `x^i`). The modulus is the lexicographically smallest monic irreducible
//! polynomial of degree `m`, where polynomials are ordered by the encoding of
//! their lower coefficients. The generator is the smallest element of
//! multiplicative order `q - 1`.

use crate::error::{Error, Result};
use crate::weyl::is_prime;

pub type Elem = u64;

/// Largest field that gets log/antilog tables.
pub const TABLE_LIMIT: u64 = 1 << 20;
/// Largest field supported at all (table-free arithmetic).
pub const FIELD_LIMIT: u64 = 1 << 40;

#[derive(Debug, Clone)]
struct LogTables {
    log: Vec<u32>,
    antilog: Vec<Elem>,
}

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u64,
    m: u32,
    q: u64,
    /// Lower coefficients `c_0..c_{m-1}` of the monic modulus.
    modulus: Vec<u64>,
    generator: Elem,
    tables: Option<LogTables>,
}

/// Builds `F_{p^m}` with log tables; `p^m` must not exceed [`TABLE_LIMIT`].
pub fn build_field(p: u64, m: u32) -> Result<FiniteField> {
    FiniteField::with_limit(p, m, TABLE_LIMIT, true)
}

/// Builds `F_{p^m}` without tables, for fields up to [`FIELD_LIMIT`].
pub fn build_large_field(p: u64, m: u32) -> Result<FiniteField> {
    let q = checked_power(p, m, FIELD_LIMIT)?;
    FiniteField::with_limit(p, m, FIELD_LIMIT, q <= TABLE_LIMIT)
}

fn checked_power(p: u64, m: u32, limit: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidSpec("field degree must be positive".into()));
    }
    let size = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
    if size > limit as u128 {
        return Err(Error::GuardExceeded {
            what: "field size",
            size,
            limit: limit as u128,
        });
    }
    Ok(size as u64)
}

/// Distinct prime divisors, by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over F_p, lowest coefficient first, used only while
// searching for the modulus.
fn poly_rem(num: &[u64], den: &[u64], p: u64) -> Vec<u64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = mod_inverse(den[dd], p);
    while r.len() > dd {
        let top = *r.last().unwrap();
        if top != 0 {
            let c = top * lead_inv % p;
            let shift = r.len() - 1 - dd;
            for (i, &d) in den.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * d % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn digits_of(mut x: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

/// Irreducibility of the monic polynomial with lower coefficients `lower`,
/// by trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible_monic(lower: &[u64], p: u64) -> bool {
    let deg = lower.len();
    if deg <= 1 {
        return deg == 1;
    }
    let mut f = lower.to_vec();
    f.push(1);
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut g = digits_of(code, p, d);
            g.push(1);
            if poly_rem(&f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    fn with_limit(p: u64, m: u32, limit: u64, tables: bool) -> Result<Self> {
        let q = checked_power(p, m, limit)?;
        let deg = m as usize;
        let modulus = (0..p.pow(m))
            .map(|code| digits_of(code, p, deg))
            .find(|lower| is_irreducible_monic(lower, p))
            .expect("an irreducible polynomial of every degree exists");
        let mut field = FiniteField {
            p,
            m,
            q,
            modulus,
            generator: 1,
            tables: None,
        };
        let factors = prime_factors(q - 1);
        field.generator = (1..q)
            .find(|&g| factors.iter().all(|&r| field.pow(g, (q - 1) / r) != 1))
            .expect("the multiplicative group is cyclic");
        if tables {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    fn build_tables(&self) -> LogTables {
        let order = (self.q - 1) as usize;
        let mut log = vec![0u32; self.q as usize];
        let mut antilog = Vec::with_capacity(order);
        let mut x = 1;
        for k in 0..order {
            antilog.push(x);
            log[x as usize] = k as u32;
            x = self.mul_poly(x, self.generator);
        }
        LogTables { log, antilog }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Coefficients of the monic modulus, constant term first.
    pub fn modulus(&self) -> Vec<u64> {
        let mut out = self.modulus.clone();
        out.push(1);
        out
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, k: i64) -> Elem {
        k.rem_euclid(self.p as i64) as u64
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    pub fn digits(&self, x: Elem) -> Vec<u64> {
        digits_of(x, self.p, self.m as usize)
    }

    pub fn from_digits(&self, digits: &[u64]) -> Elem {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d % self.p)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            out += (self.p - a % self.p) % self.p * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let k = (t.log[a as usize] as u64 + t.log[b as usize] as u64) % (self.q - 1);
                t.antilog[k as usize]
            }
            None => self.mul_poly(a, b),
        }
    }

    fn mul_poly(&self, a: Elem, b: Elem) -> Elem {
        let m = self.m as usize;
        if self.p == 2 {
            let mut prod: u128 = 0;
            for i in 0..m {
                if b >> i & 1 == 1 {
                    prod ^= (a as u128) << i;
                }
            }
            let reduce: u128 = self.modulus.iter().enumerate().fold(0, |acc, (i, &c)| acc | ((c as u128) << i));
            for k in (m..2 * m).rev() {
                if prod >> k & 1 == 1 {
                    prod ^= 1 << k;
                    prod ^= reduce << (k - m);
                }
            }
            return prod as u64;
        }
        let p = self.p;
        let da = digits_of(a, p, m);
        let db = digits_of(b, p, m);
        let mut prod = vec![0u64; 2 * m];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for k in (m..2 * m).rev() {
            let c = prod[k];
            if c != 0 {
                prod[k] = 0;
                for (i, &mc) in self.modulus.iter().enumerate() {
                    prod[k - m + i] = (prod[k - m + i] + p - c * mc % p) % p;
                }
            }
        }
        self.from_digits(&prod[..m])
    }

    pub fn pow(&self, x: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if x == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let k = (t.log[x as usize] as u128 * e as u128) % (self.q - 1) as u128;
            return t.antilog[k as usize];
        }
        let mut acc = 1;
        let mut base = x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        if x == 0 {
            return Err(Error::InverseOfZero(self.q));
        }
        Ok(self.pow(x, self.q - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `x^e` for a signed exponent; `x` must be nonzero when `e < 0`.
    pub fn pow_signed(&self, x: Elem, e: i64) -> Result<Elem> {
        if e >= 0 {
            Ok(self.pow(x, e as u64))
        } else {
            Ok(self.pow(self.inv(x)?, e.unsigned_abs()))
        }
    }

    pub fn frobenius(&self, x: Elem) -> Elem {
        self.pow(x, self.p)
    }

    /// Discrete logarithm to the generator (table mode only).
    pub fn log(&self, x: Elem) -> Option<u64> {
        if x == 0 {
            return None;
        }
        self.tables.as_ref().map(|t| t.log[x as usize] as u64)
    }

    /// `generator^k`.
    pub fn exp(&self, k: u64) -> Elem {
        self.pow(self.generator, k % (self.q - 1))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: Elem) -> Result<u64> {
        if x == 0 {
            return Err(Error::InverseOfZero(self.q));
        }
        let mut ord = self.q - 1;
        for r in prime_factors(self.q - 1) {
            while ord.is_multiple_of(r) && self.pow(x, ord / r) == 1 {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Membership in the subfield of size `sub_q`: `x^{sub_q} = x`.
    pub fn is_in_subfield(&self, x: Elem, sub_q: u64) -> bool {
        self.pow(x, sub_q) == x
    }
}
