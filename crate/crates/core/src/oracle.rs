//! Independent verification of the closed-form counts: count primitive
//! eigen-directions of the deck matrix over Z/mZ by direct linear algebra,
//! without touching the counting formulas.
//!
//! Two oracles of different strength back each other:
//!
//! - [`enumerate_directions`] iterates every vector of (Z/mZ)^dim in
//!   lexicographic order, keeps the primitive ones fixed by the matrix up
//!   to a unit scalar other than 1, and groups them into scalar orbits.
//!   The eigenvalue candidates are all units, not just roots of unity, so
//!   this oracle inherits none of the formula's assumptions. Infeasible
//!   beyond small m^dim, so it validates the kernel oracle on small cases.
//! - [`kernel_directions`] solves (M - lambda I) v = 0 over Z/p^eZ for each
//!   lifted eigenvalue at each prime of m, verifies that every solution
//!   module is free of the expected rank, counts primitive solutions, and
//!   combines primes by CRT.
//!
//! Any violation of a structural expectation (eigenspace not free, wrong
//! rank, scalar orbit of the wrong size) aborts with an integrity error;
//! nothing is corrected silently.
//!
//! Enumeration partitions the vector space into disjoint lexicographic
//! ranges by most-significant coordinate and processes them concurrently;
//! the merge is a pure reduction in range order, so results are
//! deterministic.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::counting::refinement_count;
use crate::error::{Error, Result};
use crate::matrix::{covering_genus, deck_matrix, kernel_summary_prime_power, ModMatrix};
use crate::modular::{
    crt_scalar, euler_phi, factorize, is_primitive_entries, mul_mod, units, FactoredModulus,
};
use crate::poly::eigenvalue_set;

/// Default number of candidate vectors the enumeration oracle may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

/// How an [`EigenReport`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenMethod {
    Enumerate,
    Kernel,
}

/// Count data for one eigenvalue of the deck matrix modulo m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueCount {
    /// A unit modulo m, never 1.
    pub lambda: u64,
    /// Primitive eigenvectors with this eigenvalue.
    pub primitive_count: BigUint,
    /// Free rank of the eigenspace. The kernel oracle verifies it; the
    /// enumeration oracle reports it when the eigenspace size is an exact
    /// power of m and leaves None otherwise.
    pub eigenspace_rank: Option<usize>,
}

/// Per-prime kernel data (kernel method only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeLocalReport {
    pub p: u64,
    pub e: u32,
    /// Lifted eigenvalues modulo p^e, ascending.
    pub eigenvalues: Vec<u64>,
    /// Verified free rank of each eigenspace, aligned with `eigenvalues`.
    pub eigenspace_ranks: Vec<usize>,
    /// Verified free rank of the fixed space (eigenvalue 1).
    pub fixed_space_rank: usize,
}

/// Result of one oracle run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenReport {
    pub modulus: u64,
    pub dim: usize,
    pub method: EigenMethod,
    /// Eigenvalues with at least one primitive eigenvector, ascending.
    pub per_eigenvalue: Vec<EigenvalueCount>,
    /// Total primitive eigenvectors across all eigenvalues.
    pub primitive_total: BigUint,
    /// Scalar orbits of primitive eigenvectors: primitive_total / phi(m).
    pub direction_count: BigUint,
    /// Rank of the fixed space of the deck matrix (kernel method only).
    pub fixed_space_rank: Option<usize>,
    /// Per-prime breakdown (kernel method only).
    pub per_prime: Vec<PrimeLocalReport>,
}

struct ChunkResult {
    eigenspace_sizes: BTreeMap<u64, u64>,
    primitive_vectors: BTreeMap<u64, Vec<Vec<u64>>>,
}

/// Count primitive eigen-directions of `mat` by full enumeration of
/// (Z/mZ)^dim in lexicographic order.
///
/// Eigenvalue candidates are every unit other than 1. Scalar orbits are
/// grouped on the lexicographically least representative and each orbit is
/// checked to have exactly phi(m) elements.
pub fn enumerate_directions(mat: &ModMatrix, budget: u64) -> Result<EigenReport> {
    let m = mat.modulus().modulus();
    let dim = mat.dim();
    let mut space: u128 = 1;
    for _ in 0..dim {
        space = space.saturating_mul(m as u128);
        if space > budget as u128 {
            return Err(Error::budget(format!(
                "enumerating (Z/{m}Z)^{dim} needs {} > {budget} candidate vectors; \
                 use the kernel method (kernel_directions) instead",
                pow_display(m, dim)
            )));
        }
    }
    let phi = euler_phi(mat.modulus());
    let unit_list = units(m);
    let candidates: Vec<u64> = unit_list.iter().copied().filter(|&u| u != 1).collect();

    // Sparse rows: (column, entry) pairs. The deck matrix is a permutation
    // with identity blocks, so almost every row has a single entry.
    let sparse_rows: Vec<Vec<(usize, u64)>> = (0..dim)
        .map(|i| {
            mat.row(i)
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x != 0)
                .map(|(j, &x)| (j, x))
                .collect()
        })
        .collect();

    let chunks: Vec<ChunkResult> = (0..m)
        .into_par_iter()
        .map(|lead| enumerate_chunk(lead, m, dim, &sparse_rows, &candidates))
        .collect();

    let mut eigenspace_sizes: BTreeMap<u64, u64> = BTreeMap::new();
    let mut primitive_vectors: BTreeMap<u64, Vec<Vec<u64>>> = BTreeMap::new();
    for chunk in chunks {
        for (lambda, count) in chunk.eigenspace_sizes {
            *eigenspace_sizes.entry(lambda).or_insert(0) += count;
        }
        for (lambda, mut vecs) in chunk.primitive_vectors {
            primitive_vectors.entry(lambda).or_default().append(&mut vecs);
        }
    }

    let mut per_eigenvalue = Vec::new();
    let mut primitive_total = BigUint::zero();
    let mut direction_count = BigUint::zero();
    for (&lambda, vectors) in &primitive_vectors {
        let orbits = group_orbits(vectors, &unit_list, m, phi, lambda)?;
        let prim = BigUint::from(vectors.len());
        primitive_total += &prim;
        direction_count += BigUint::from(orbits);
        per_eigenvalue.push(EigenvalueCount {
            lambda,
            primitive_count: prim,
            eigenspace_rank: exact_log(eigenspace_sizes[&lambda], m),
        });
    }

    if &direction_count * BigUint::from(phi) != primitive_total {
        return Err(Error::integrity(
            "direction count times phi(m) disagrees with the primitive eigenvector total",
        ));
    }

    Ok(EigenReport {
        modulus: m,
        dim,
        method: EigenMethod::Enumerate,
        per_eigenvalue,
        primitive_total,
        direction_count,
        fixed_space_rank: None,
        per_prime: Vec::new(),
    })
}

fn pow_display(m: u64, dim: usize) -> String {
    let mut acc: u128 = 1;
    for _ in 0..dim {
        acc = acc.saturating_mul(m as u128);
    }
    if acc == u128::MAX {
        format!("more than {}", u128::MAX)
    } else {
        acc.to_string()
    }
}

/// The exponent r with m^r = size, if one exists.
fn exact_log(size: u64, m: u64) -> Option<usize> {
    let mut acc: u128 = 1;
    let mut r = 0usize;
    while acc < size as u128 {
        acc *= m as u128;
        r += 1;
    }
    (acc == size as u128).then_some(r)
}

fn enumerate_chunk(
    lead: u64,
    m: u64,
    dim: usize,
    sparse_rows: &[Vec<(usize, u64)>],
    candidates: &[u64],
) -> ChunkResult {
    let mut result = ChunkResult {
        eigenspace_sizes: BTreeMap::new(),
        primitive_vectors: BTreeMap::new(),
    };
    let mut v = vec![0u64; dim];
    v[0] = lead;
    let mut live: Vec<u64> = Vec::with_capacity(candidates.len());
    loop {
        live.clear();
        live.extend_from_slice(candidates);
        for (i, row) in sparse_rows.iter().enumerate() {
            let mut acc: u128 = 0;
            for &(j, a) in row {
                acc += a as u128 * v[j] as u128;
            }
            let w_i = (acc % m as u128) as u64;
            live.retain(|&lambda| mul_mod(lambda, v[i], m) == w_i);
            if live.is_empty() {
                break;
            }
        }
        if !live.is_empty() {
            let primitive = is_primitive_entries(&v, m);
            for &lambda in &live {
                *result.eigenspace_sizes.entry(lambda).or_insert(0) += 1;
                if primitive {
                    result
                        .primitive_vectors
                        .entry(lambda)
                        .or_default()
                        .push(v.clone());
                }
            }
        }
        // lexicographic odometer over v[1..]; v[0] stays fixed
        if dim == 1 {
            break;
        }
        let mut i = dim - 1;
        loop {
            v[i] += 1;
            if v[i] < m {
                break;
            }
            v[i] = 0;
            if i == 1 {
                return result;
            }
            i -= 1;
        }
    }
    result
}

/// Group primitive eigenvectors (already in lexicographic order) into
/// scalar orbits; verify every orbit has exactly phi(m) elements.
fn group_orbits(
    vectors: &[Vec<u64>],
    unit_list: &[u64],
    m: u64,
    phi: u64,
    lambda: u64,
) -> Result<u64> {
    let mut seen: HashSet<Vec<u64>> = HashSet::with_capacity(vectors.len());
    let mut orbits = 0u64;
    for v in vectors {
        if seen.contains(v) {
            continue;
        }
        let mut orbit_size = 0u64;
        for &u in unit_list {
            let scaled: Vec<u64> = v.iter().map(|&x| mul_mod(u, x, m)).collect();
            if seen.insert(scaled) {
                orbit_size += 1;
            }
        }
        if orbit_size != phi {
            return Err(Error::integrity(format!(
                "scalar orbit of a primitive eigenvector (lambda = {lambda} mod {m}) \
                 has {orbit_size} elements, expected phi({m}) = {phi}"
            )));
        }
        orbits += 1;
    }
    Ok(orbits)
}

/// Count primitive eigen-directions of the deck matrix for (g, n) over
/// Z/mZ by per-eigenvalue kernel computations over each Z/p^eZ.
///
/// For each prime power p^e of m and each Hensel-lifted eigenvalue, the
/// kernel of (M - lambda I) is computed by elimination that pivots only on
/// units; the solution module must be free of rank exactly 2g-2, and the
/// fixed space (lambda = 1) must be free of rank exactly 2g. Per-prime
/// counts combine multiplicatively because eigenvalue choices at distinct
/// primes are independent under CRT.
pub fn kernel_directions(g: u32, m: &FactoredModulus, n: u64) -> Result<EigenReport> {
    if g < 2 || n < 2 {
        return Err(Error::domain("kernel oracle requires g >= 2 and n >= 2"));
    }
    if m.modulus().gcd(&n) != 1 {
        return Err(Error::domain(format!(
            "the construction requires gcd(m, n) = 1, but gcd({}, {n}) > 1",
            m.modulus()
        )));
    }
    let deck = deck_matrix(g, n as u32)?;
    let dim = 2 * covering_genus(g, n as u32) as usize;
    debug_assert_eq!(deck.dim(), dim);
    let expected_rank = (2 * g - 2) as usize;
    let expected_fixed = (2 * g) as usize;

    let mut per_prime = Vec::with_capacity(m.factors().len());
    // (lambda mod p^e, primitive count) per prime, for the CRT combination
    let mut local_counts: Vec<Vec<(u64, BigUint)>> = Vec::new();
    for &(p, e) in m.factors() {
        let q = p.pow(e);
        let fq = factorize(q)?;
        let deck_q = deck.reduce_mod(&fq);

        let fixed = kernel_summary_prime_power(&deck_q.sub_scalar_identity(1), p);
        if !fixed.is_free || fixed.free_rank != expected_fixed {
            return Err(Error::integrity(format!(
                "fixed space of the deck matrix mod {q} is not free of rank {expected_fixed} \
                 (free: {}, rank: {})",
                fixed.is_free, fixed.free_rank
            )));
        }

        let eigenvalues = eigenvalue_set(n as u32, p, e)?;
        let mut ranks = Vec::with_capacity(eigenvalues.len());
        let mut locals = Vec::with_capacity(eigenvalues.len());
        for &lambda in &eigenvalues {
            let summary = kernel_summary_prime_power(&deck_q.sub_scalar_identity(lambda), p);
            if !summary.is_free {
                return Err(Error::integrity(format!(
                    "eigenspace for lambda = {lambda} mod {q} is not a free module \
                     (defect in column {:?})",
                    summary.defect_column
                )));
            }
            if summary.free_rank != expected_rank {
                return Err(Error::integrity(format!(
                    "eigenspace for lambda = {lambda} mod {q} has rank {} instead of {}",
                    summary.free_rank, expected_rank
                )));
            }
            ranks.push(summary.free_rank);
            let pb = BigUint::from(p);
            let count = pb.pow(e * (2 * g - 2)) - pb.pow((e - 1) * (2 * g - 2));
            locals.push((lambda, count));
        }
        per_prime.push(PrimeLocalReport {
            p,
            e,
            eigenvalues,
            eigenspace_ranks: ranks,
            fixed_space_rank: fixed.free_rank,
        });
        local_counts.push(locals);
    }

    // CRT-combine: one eigenvalue mod m per choice of eigenvalue at each
    // prime; counts multiply.
    let prime_powers = m.prime_powers();
    let mut per_eigenvalue = Vec::new();
    let mut primitive_total = BigUint::zero();
    for combo in cartesian(&local_counts) {
        let residues: Vec<(u64, u64)> = combo
            .iter()
            .zip(&prime_powers)
            .map(|(&(lambda, _), &q)| (lambda, q))
            .collect();
        let lambda = crt_scalar(&residues, m.modulus())?;
        let count: BigUint = combo.iter().map(|(_, c)| c.clone()).product();
        primitive_total += &count;
        per_eigenvalue.push(EigenvalueCount {
            lambda,
            primitive_count: count,
            eigenspace_rank: Some(expected_rank),
        });
    }
    per_eigenvalue.sort_by_key(|c| c.lambda);

    let phi = BigUint::from(euler_phi(m));
    let (direction_count, rem) = primitive_total.div_rem(&phi);
    if !rem.is_zero() {
        return Err(Error::integrity(
            "primitive eigenvector total is not divisible by phi(m)",
        ));
    }

    Ok(EigenReport {
        modulus: m.modulus(),
        dim,
        method: EigenMethod::Kernel,
        per_eigenvalue,
        primitive_total,
        direction_count,
        fixed_space_rank: Some(expected_fixed),
        per_prime,
    })
}

/// All choices of one element per inner list. An empty inner list yields
/// no combinations; an empty outer list yields one empty combination.
fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut combos: Vec<Vec<T>> = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(combos.len() * list.len());
        for combo in &combos {
            for item in list {
                let mut extended = combo.clone();
                extended.push(item.clone());
                next.push(extended);
            }
        }
        combos = next;
    }
    combos
}

/// Outcome of comparing the closed-form count against the oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub g: u32,
    pub m: u64,
    pub n: u64,
    /// The closed-form refinement count.
    pub formula: BigUint,
    /// The kernel oracle's report.
    pub kernel: EigenReport,
    /// The enumeration oracle's report, when within budget.
    pub enumeration: Option<EigenReport>,
    /// True when every computed count agrees.
    pub matched: bool,
}

impl VerifyReport {
    pub fn enumeration_ran(&self) -> bool {
        self.enumeration.is_some()
    }
}

/// The full count report with the oracle verdict filled in, alongside the
/// detailed verification record.
pub fn verified_cover_count(
    g: u32,
    m: u64,
    n: u64,
    budget: u64,
) -> Result<(crate::counting::CoverCountReport, VerifyReport)> {
    let mut report = crate::counting::total_cover_count(g, m, n)?;
    let verification = verify(g, m, n, budget)?;
    report.oracle = Some(crate::counting::OracleCheck {
        value: verification.kernel.direction_count.clone(),
        matched: verification.matched,
    });
    Ok((report, verification))
}

/// Compute the closed-form count, the kernel-oracle count, and (within
/// budget) the enumeration-oracle count; report whether they agree.
pub fn verify(g: u32, m: u64, n: u64, budget: u64) -> Result<VerifyReport> {
    let fm = factorize(m)?;
    let formula = refinement_count(g, m, n)?;
    let kernel = kernel_directions(g, &fm, n)?;
    let enumeration = match enumerate_directions(&deck_matrix(g, n as u32)?.reduce_mod(&fm), budget)
    {
        Ok(report) => Some(report),
        Err(Error::Budget(_)) => None,
        Err(other) => return Err(other),
    };
    let matched = kernel.direction_count == formula
        && enumeration
            .as_ref()
            .map_or(true, |e| e.direction_count == formula);
    Ok(VerifyReport {
        g,
        m,
        n,
        formula,
        kernel,
        enumeration,
        matched,
    })
}
