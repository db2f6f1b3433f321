//! The closed-form counting formulas, evaluated exactly.
//!
//! Every formula contains negative powers of primes; all of them are
//! evaluated as exact rationals and proven integral before a count is
//! returned. Counts are arbitrary-precision end-to-end.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modular::{euler_phi, factorize, is_prime, FactoredModulus};

/// Per-prime breakdown of the refinement count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerPrimeFactor {
    pub p: u64,
    pub e: u32,
    /// gcd(n, p-1) - 1: the number of admissible eigenvalues modulo p^e.
    pub linear_factor_count: u64,
    /// (gcd(n, p-1) - 1) * p^(e(2g-2)) * (1 - p^-(2g-2)): the local count
    /// of primitive eigenvectors.
    pub primitive_eigenvector_count: BigUint,
}

/// Result of an oracle comparison attached to a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheck {
    pub value: BigUint,
    pub matched: bool,
}

/// The exact cover counts for one (g, m, n) together with the
/// per-prime breakdown and an optional oracle verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCountReport {
    pub g: u32,
    pub m: u64,
    pub n: u64,
    /// Covers refining one fixed cyclic n-cover into a non-abelian cover.
    pub refinement_count: BigUint,
    /// Connected cyclic n-covers of the base curve.
    pub cyclic_count: BigUint,
    /// Total: refinement_count * cyclic_count.
    pub total: BigUint,
    pub per_prime: Vec<PerPrimeFactor>,
    pub oracle: Option<OracleCheck>,
}

fn check_params(g: u32, m: u64, n: u64) -> Result<()> {
    if g < 2 {
        return Err(Error::domain("genus must be >= 2"));
    }
    if m < 2 || n < 2 {
        return Err(Error::domain("m and n must be >= 2"));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::domain(format!(
            "the construction requires gcd(m, n) = 1, but gcd({m}, {n}) = {}",
            m.gcd(&n)
        )));
    }
    Ok(())
}

fn big_rational(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// 1 + p^-1 + ... + p^-k as an exact rational.
fn inverse_geometric(p: u64, k: u32) -> BigRational {
    let mut acc = BigRational::zero();
    for j in 0..=k {
        acc += big_rational(BigInt::one(), BigInt::from(p).pow(j));
    }
    acc
}

fn to_count(value: BigRational, what: &str) -> Result<BigUint> {
    if !value.is_integer() {
        return Err(Error::integrity(format!(
            "{what} evaluated to the non-integer {value}"
        )));
    }
    let int = value.to_integer();
    if int.is_negative() {
        return Err(Error::integrity(format!("{what} evaluated to the negative {int}")));
    }
    Ok(int.to_biguint().expect("non-negative"))
}

/// Exact rational value of the refinement count
/// m^(2g-3) * prod over p|m of (gcd(n, p-1) - 1)(1 + p^-1 + ... + p^-(2g-3)).
pub fn refinement_count_rational(g: u32, m: &FactoredModulus, n: u64) -> BigRational {
    let mut acc = big_rational(BigInt::from(m.modulus()).pow(2 * g - 3), BigInt::one());
    for &(p, _) in m.factors() {
        let lf = n.gcd(&(p - 1)) - 1;
        acc *= big_rational(BigInt::from(lf), BigInt::one());
        acc *= inverse_geometric(p, 2 * g - 3);
    }
    acc
}

/// Exact rational value of the cyclic-cover count
/// n^(2g-1) * prod over q|n of (1 + q^-1 + ... + q^-(2g-1)).
pub fn cyclic_count_rational(g: u32, n: &FactoredModulus) -> BigRational {
    let mut acc = big_rational(BigInt::from(n.modulus()).pow(2 * g - 1), BigInt::one());
    for &(q, _) in n.factors() {
        acc *= inverse_geometric(q, 2 * g - 1);
    }
    acc
}

/// Exact rational value of the primitive-eigenvector count
/// prod over p|m of (gcd(n, p-1) - 1) * p^(e(2g-2)) * (1 - p^-(2g-2)).
pub fn primitive_eigenvector_count_rational(g: u32, m: &FactoredModulus, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    for &(p, e) in m.factors() {
        let lf = n.gcd(&(p - 1)) - 1;
        acc *= big_rational(BigInt::from(lf), BigInt::one());
        acc *= big_rational(BigInt::from(p).pow(e * (2 * g - 2)), BigInt::one());
        acc *= BigRational::one()
            - big_rational(BigInt::one(), BigInt::from(p).pow(2 * g - 2));
    }
    acc
}

/// The number of primitive eigenvectors of the deck matrix modulo m with
/// eigenvalue a nontrivial n-th root of unity at every prime of m.
pub fn primitive_eigenvector_count(g: u32, m: u64, n: u64) -> Result<BigUint> {
    check_params(g, m, n)?;
    let fm = factorize(m)?;
    to_count(
        primitive_eigenvector_count_rational(g, &fm, n),
        "primitive eigenvector count",
    )
}

/// The number of covers refining a fixed connected cyclic n-cover into a
/// connected non-abelian cover with group of order mn, for gcd(m, n) = 1.
/// Equals the primitive-eigenvector count divided by phi(m).
pub fn refinement_count(g: u32, m: u64, n: u64) -> Result<BigUint> {
    check_params(g, m, n)?;
    let fm = factorize(m)?;
    to_count(refinement_count_rational(g, &fm, n), "refinement count")
}

/// The number of connected cyclic n-covers of a genus-g curve, up to
/// isomorphism: primitive points of (Z/nZ)^2g modulo units.
pub fn cyclic_cover_count(g: u32, n: u64) -> Result<BigUint> {
    if g < 2 {
        return Err(Error::domain("genus must be >= 2"));
    }
    if n < 2 {
        return Err(Error::domain("n must be >= 2"));
    }
    let fn_ = factorize(n)?;
    to_count(cyclic_count_rational(g, &fn_), "cyclic cover count")
}

/// Full report: refinement count, cyclic count, their product, and the
/// per-prime breakdown.
pub fn total_cover_count(g: u32, m: u64, n: u64) -> Result<CoverCountReport> {
    check_params(g, m, n)?;
    let fm = factorize(m)?;
    let refinement = to_count(refinement_count_rational(g, &fm, n), "refinement count")?;
    let cyclic = cyclic_cover_count(g, n)?;
    let total = &refinement * &cyclic;

    let mut per_prime = Vec::with_capacity(fm.factors().len());
    for &(p, e) in fm.factors() {
        let lf = n.gcd(&(p - 1)) - 1;
        let pb = BigUint::from(p);
        let local = BigUint::from(lf)
            * (pb.pow(e * (2 * g - 2)) - pb.pow((e - 1) * (2 * g - 2)));
        per_prime.push(PerPrimeFactor {
            p,
            e,
            linear_factor_count: lf,
            primitive_eigenvector_count: local,
        });
    }

    // Internal consistency: the product of the local counts divided by
    // phi(m) must reproduce the refinement count.
    let pev: BigUint = per_prime
        .iter()
        .map(|f| f.primitive_eigenvector_count.clone())
        .product();
    if &refinement * BigUint::from(euler_phi(&fm)) != pev {
        return Err(Error::integrity(
            "per-prime eigenvector product disagrees with the refinement count",
        ));
    }

    Ok(CoverCountReport {
        g,
        m,
        n,
        refinement_count: refinement,
        cyclic_count: cyclic,
        total,
        per_prime,
        oracle: None,
    })
}

/// The two-prime closed form: 0 when q does not divide p-1, otherwise
/// (q^2g - 1)(1 + p + ... + p^(2g-3)).
pub fn prime_pair_count(g: u32, p: u64, q: u64) -> Result<BigUint> {
    if g < 2 {
        return Err(Error::domain("genus must be >= 2"));
    }
    if p == q {
        return Err(Error::domain("p and q must be distinct primes"));
    }
    if !is_prime(p) || !is_prime(q) {
        return Err(Error::domain("p and q must both be prime"));
    }
    if (p - 1) % q != 0 {
        return Ok(BigUint::zero());
    }
    let qb = BigUint::from(q);
    let pb = BigUint::from(p);
    let geometric: BigUint = (0..=2 * g - 3).map(|j| pb.pow(j)).sum();
    Ok((qb.pow(2 * g) - BigUint::one()) * geometric)
}
