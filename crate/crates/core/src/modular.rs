//! Exact arithmetic over Z and Z/mZ: prime factorization, Euler phi,
//! primitive-vector predicates and counts, and CRT decomposition.
//!
//! Everything here is a pure function on immutable values. Residues are
//! kept in the canonical range `[0, m)` so equality and hashing are
//! well-defined. Counts that can grow with the dimension are returned as
//! arbitrary-precision integers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// An integer m >= 2 together with its prime factorization, sorted
/// ascending by prime. The ring Z/mZ in CRT-ready form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredModulus {
    m: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredModulus {
    /// The modulus itself.
    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// The `(p, e)` pairs, ascending in `p`.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The prime-power components `p^e`, in the same order as `factors`.
    pub fn prime_powers(&self) -> Vec<u64> {
        self.factors.iter().map(|&(p, e)| p.pow(e)).collect()
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }
}

/// Factor `m` by trial division. All inputs at this scale are small
/// (well below 10^12), so trial division is deterministic and fast enough.
pub fn factorize(m: u64) -> Result<FactoredModulus> {
    if m < 2 {
        return Err(Error::domain("modulus must be >= 2"));
    }
    let mut rest = m;
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            let mut e = 0u32;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += 1;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(FactoredModulus { m, factors })
}

/// Test primality by trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Euler's totient, from the factorization: prod p^(e-1) (p-1).
pub fn euler_phi(m: &FactoredModulus) -> u64 {
    m.factors
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

/// `a * b mod m` without overflow.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `a^k mod m` by square-and-multiply.
pub fn pow_mod(mut a: u64, mut k: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while k > 0 {
        if k & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        k >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r.unsigned_abs() != 1 {
        return None;
    }
    let mut inv = old_s * old_r.signum();
    inv = inv.rem_euclid(m as i128);
    Some(inv as u64)
}

/// The units of Z/mZ in ascending order.
pub fn units(m: u64) -> Vec<u64> {
    (1..m).filter(|&u| u.gcd(&m) == 1).collect()
}

/// A vector of residues modulo a factored modulus, entries in `[0, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModVector {
    modulus: FactoredModulus,
    entries: Vec<u64>,
}

impl ModVector {
    /// Build a vector, reducing every entry into `[0, m)`.
    pub fn new(modulus: FactoredModulus, entries: impl IntoIterator<Item = u64>) -> Self {
        let m = modulus.modulus();
        let entries = entries.into_iter().map(|x| x % m).collect();
        ModVector { modulus, entries }
    }

    pub fn modulus(&self) -> &FactoredModulus {
        &self.modulus
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A vector is primitive iff its additive order is exactly m,
/// i.e. iff gcd of its entries together with m is 1.
pub fn is_primitive_vector(v: &ModVector) -> bool {
    is_primitive_entries(v.entries(), v.modulus.modulus())
}

/// Primitivity test on raw entries.
pub fn is_primitive_entries(entries: &[u64], m: u64) -> bool {
    let mut g = m;
    for &x in entries {
        g = g.gcd(&x);
        if g == 1 {
            return true;
        }
    }
    g == 1
}

/// Number of primitive vectors in (Z/mZ)^N: prod over p|m of
/// p^(eN) (1 - p^(-N)), evaluated exactly as p^(eN) - p^((e-1)N).
pub fn count_primitive_vectors(n_dim: u32, m: &FactoredModulus) -> Result<BigUint> {
    if n_dim < 1 {
        return Err(Error::domain("dimension must be >= 1"));
    }
    let mut total = BigUint::one();
    for &(p, e) in m.factors() {
        let p = BigUint::from(p);
        let local = p.pow(e * n_dim) - p.pow((e - 1) * n_dim);
        total *= local;
    }
    Ok(total)
}

/// Split a vector into its prime-power CRT components, one per factor of m.
pub fn crt_split(v: &ModVector) -> Vec<ModVector> {
    v.modulus
        .factors()
        .iter()
        .map(|&(p, e)| {
            let q = p.pow(e);
            let modulus = factorize(q).expect("prime power is >= 2");
            ModVector::new(modulus, v.entries.iter().map(|&x| x % q))
        })
        .collect()
}

/// Recombine prime-power components into a vector modulo the product.
///
/// The components must have pairwise-coprime moduli and equal lengths.
pub fn crt_join(parts: &[ModVector]) -> Result<ModVector> {
    if parts.is_empty() {
        return Err(Error::domain("crt_join requires at least one component"));
    }
    let len = parts[0].len();
    let mut m: u64 = 1;
    for part in parts {
        if part.len() != len {
            return Err(Error::domain("crt_join components have mismatched lengths"));
        }
        let q = part.modulus.modulus();
        if m.gcd(&q) != 1 {
            return Err(Error::domain(format!(
                "crt_join moduli must be pairwise coprime, gcd({m}, {q}) > 1"
            )));
        }
        m = m.checked_mul(q).ok_or_else(|| Error::domain("crt_join modulus overflow"))?;
    }
    let mut entries = vec![0u64; len];
    for (i, entry) in entries.iter_mut().enumerate() {
        let residues: Vec<(u64, u64)> = parts
            .iter()
            .map(|part| (part.entries[i], part.modulus.modulus()))
            .collect();
        *entry = crt_scalar(&residues, m)?;
    }
    Ok(ModVector::new(factorize(m)?, entries))
}

/// CRT for a single residue: the unique x mod m with x = r_i mod q_i.
pub fn crt_scalar(residues: &[(u64, u64)], m: u64) -> Result<u64> {
    let mut x: u64 = 0;
    for &(r, q) in residues {
        let m_over_q = m / q;
        let inv = inv_mod(m_over_q % q, q)
            .ok_or_else(|| Error::domain("crt moduli must be pairwise coprime"))?;
        // x += r * (m/q) * ((m/q)^-1 mod q), all mod m
        let term = mul_mod(mul_mod(r % m, m_over_q % m, m), inv % m, m);
        x = (x + term) % m;
    }
    Ok(x)
}
