//! Integer and modular matrices: the companion block of the deck
//! transformation, the deck matrix itself, Kronecker/direct-sum
//! composition, exact characteristic and minimal polynomials, and the
//! residue-field similarity verdict.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::modular::{inv_mod, is_prime, mul_mod, FactoredModulus};
use crate::poly::{IntPoly, ModPoly};

/// A dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::domain("matrix must be square"));
        }
        Ok(IntMatrix {
            dim,
            entries: rows.concat(),
        })
    }

    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let prod = a as i128 * rhs[(k, j)] as i128 + out[(i, j)] as i128;
                    out[(i, j)] = i64::try_from(prod).expect("matrix entry overflow");
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.dim);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.dim)
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.dim;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// Reduce entries into [0, m).
    pub fn reduce_mod(&self, modulus: &FactoredModulus) -> ModMatrix {
        let m = modulus.modulus() as i64;
        let entries = self
            .entries
            .iter()
            .map(|&x| x.rem_euclid(m) as u64)
            .collect();
        ModMatrix {
            dim: self.dim,
            entries,
            modulus: modulus.clone(),
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division is exact");
                    a[i][j] = q;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let mut det = a[n - 1][n - 1].clone();
        if sign < 0 {
            det = -det;
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.entries[i * self.dim + j]
    }
}

/// A dense square matrix with entries reduced modulo m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    dim: usize,
    entries: Vec<u64>,
    modulus: FactoredModulus,
}

impl ModMatrix {
    pub fn identity(dim: usize, modulus: &FactoredModulus) -> Self {
        let mut entries = vec![0u64; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1 % modulus.modulus();
        }
        ModMatrix {
            dim,
            entries,
            modulus: modulus.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> &FactoredModulus {
        &self.modulus
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn mul(&self, rhs: &ModMatrix) -> ModMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let m = self.modulus.modulus();
        let mut out = ModMatrix {
            dim: n,
            entries: vec![0; n * n],
            modulus: self.modulus.clone(),
        };
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = (out[(i, j)] + mul_mod(a, rhs[(k, j)], m)) % m;
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == ModMatrix::identity(self.dim, &self.modulus)
    }

    /// M - lambda * I over the same modulus.
    pub fn sub_scalar_identity(&self, lambda: u64) -> ModMatrix {
        let m = self.modulus.modulus();
        let mut out = self.clone();
        for i in 0..self.dim {
            out[(i, i)] = (out[(i, i)] + m - lambda % m) % m;
        }
        out
    }

    /// Multiplicative order, or None if not found within `bound` steps.
    pub fn order(&self, bound: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }
}

impl std::ops::Index<(usize, usize)> for ModMatrix {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ModMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.entries[i * self.dim + j]
    }
}

/// The (n-1) x (n-1) companion matrix of 1 + x + ... + x^(n-1):
/// ones on the subdiagonal, last column all -1.
pub fn companion(n: u32) -> Result<IntMatrix> {
    if n < 2 {
        return Err(Error::domain("companion block requires n >= 2"));
    }
    let d = (n - 1) as usize;
    let mut g = IntMatrix::zeros(d);
    for i in 1..d {
        g[(i, i - 1)] = 1;
    }
    for i in 0..d {
        g[(i, d - 1)] = -1;
    }
    Ok(g)
}

/// The n x n cyclic-shift permutation: 1 in the top-right corner and the
/// identity shifted below the diagonal.
pub fn cyclic_shift(n: u32) -> Result<IntMatrix> {
    if n < 1 {
        return Err(Error::domain("cyclic shift requires n >= 1"));
    }
    let n = n as usize;
    let mut c = IntMatrix::zeros(n);
    c[(0, n - 1)] = 1;
    for i in 1..n {
        c[(i, i - 1)] = 1;
    }
    Ok(c)
}

/// Kronecker product.
pub fn kron(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (da, db) = (a.dim(), b.dim());
    let mut out = IntMatrix::zeros(da * db);
    for i in 0..da {
        for j in 0..da {
            let s = a[(i, j)];
            if s == 0 {
                continue;
            }
            for k in 0..db {
                for l in 0..db {
                    out[(i * db + k, j * db + l)] = s
                        .checked_mul(b[(k, l)])
                        .expect("kron entry overflow");
                }
            }
        }
    }
    out
}

/// Block-diagonal composition.
pub fn direct_sum(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (da, db) = (a.dim(), b.dim());
    let mut out = IntMatrix::zeros(da + db);
    for i in 0..da {
        for j in 0..da {
            out[(i, j)] = a[(i, j)];
        }
    }
    for i in 0..db {
        for j in 0..db {
            out[(da + i, da + j)] = b[(i, j)];
        }
    }
    out
}

/// Genus of the degree-n unramified cover of a genus-g curve.
pub fn covering_genus(g: u32, n: u32) -> u32 {
    n * (g - 1) + 1
}

/// The deck matrix of the standard cyclic covering on first homology:
/// I_2 direct-sum (cyclic shift tensor I_(2g-2)), size 2h.
pub fn deck_matrix(g: u32, n: u32) -> Result<IntMatrix> {
    if g < 2 || n < 2 {
        return Err(Error::domain("deck matrix requires g >= 2 and n >= 2"));
    }
    let shift = cyclic_shift(n)?;
    let block = kron(&shift, &IntMatrix::identity((2 * g - 2) as usize));
    Ok(direct_sum(&IntMatrix::identity(2), &block))
}

/// Exact characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
/// recurrence; every division is exact over Z.
pub fn charpoly_int(m: &IntMatrix) -> IntPoly {
    let n = m.dim();
    if n == 0 {
        return IntPoly::one();
    }
    let big: Vec<BigInt> = m.entries.iter().map(|&x| BigInt::from(x)).collect();
    let trace = |mat: &[BigInt]| -> BigInt {
        (0..n).map(|i| mat[i * n + i].clone()).sum()
    };
    let mat_mul = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let s = &a[i * n + k];
                if s.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = s * &b[k * n + j];
                    out[i * n + j] += t;
                }
            }
        }
        out
    };

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = big.clone();
    for k in 1..=n {
        let (c, r) = (-trace(&mk)).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division is exact");
        coeffs[n - k] = c.clone();
        if k < n {
            let mut shifted = mk;
            for i in 0..n {
                shifted[i * n + i] += &c;
            }
            mk = mat_mul(&big, &shifted);
        }
    }
    IntPoly::new(coeffs)
}

/// Characteristic polynomial modulo m, via the canonical integer lift.
pub fn charpoly_mod(m: &ModMatrix) -> ModPoly {
    let n = m.dim();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| m.row(i).iter().map(|&x| x as i64).collect())
        .collect();
    let lift = IntMatrix::from_rows(&rows).expect("square by construction");
    charpoly_int(&lift).reduce_mod(m.modulus().modulus())
}

/// Minimal polynomial over F_p: the lowest-degree monic q with q(M) = 0,
/// found as the first linear dependence among I, M, M^2, ... over F_p.
pub fn minpoly_mod(m: &ModMatrix) -> Result<ModPoly> {
    let p = m.modulus().modulus();
    if !is_prime(p) {
        return Err(Error::domain(
            "minimal polynomial is only computed over a prime modulus",
        ));
    }
    let n = m.dim();
    let flat_len = n * n;
    // Reduced rows with their leading-column index and the combination of
    // powers that produced them.
    let mut basis: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut power = ModMatrix::identity(n, m.modulus());
    for degree in 0..=n {
        let mut row: Vec<u64> = power.entries.clone();
        let mut combo = vec![0u64; degree + 1];
        combo[degree] = 1;
        for (lead, basis_row, basis_combo) in &basis {
            let c = row[*lead];
            if c != 0 {
                for j in 0..flat_len {
                    row[j] = (row[j] + p - mul_mod(c, basis_row[j], p)) % p;
                }
                for (j, &bc) in basis_combo.iter().enumerate() {
                    combo[j] = (combo[j] + p - mul_mod(c, bc, p)) % p;
                }
            }
        }
        match row.iter().position(|&x| x != 0) {
            Some(lead) => {
                let inv = inv_mod(row[lead], p).expect("nonzero over prime field");
                for x in row.iter_mut() {
                    *x = mul_mod(*x, inv, p);
                }
                for x in combo.iter_mut() {
                    *x = mul_mod(*x, inv, p);
                }
                basis.push((lead, row, combo));
            }
            None => return Ok(ModPoly::new(combo, p)),
        }
        power = power.mul(m);
    }
    unreachable!("a dependence must appear by degree n");
}

/// Rank data of ker(M) over Z/p^eZ from unit-pivot forward elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelSummary {
    /// Number of unit pivots found.
    pub pivot_count: usize,
    /// Rank of the kernel if it is free: dim - pivot_count.
    pub free_rank: usize,
    /// Whether the solution module is free. False when a nonzero residual
    /// divisible by p survives elimination, i.e. the kernel has a cyclic
    /// summand of order strictly between 1 and p^e.
    pub is_free: bool,
    /// A column witnessing the freeness failure.
    pub defect_column: Option<usize>,
}

/// Forward elimination over Z/p^eZ pivoting only on unit entries.
///
/// Columns that never offer a unit pivot keep entries divisible by p; the
/// kernel is a free module exactly when all of those residuals vanish.
pub fn kernel_summary_prime_power(mat: &ModMatrix, p: u64) -> KernelSummary {
    let n = mat.dim();
    let m = mat.modulus().modulus();
    let mut a = mat.entries.clone();
    let mut pivot_row = 0usize;
    for col in 0..n {
        let found = (pivot_row..n).find(|&r| a[r * n + col] % p != 0);
        let Some(r) = found else { continue };
        for j in 0..n {
            a.swap(pivot_row * n + j, r * n + j);
        }
        let inv = inv_mod(a[pivot_row * n + col], m).expect("unit entry");
        for j in 0..n {
            a[pivot_row * n + j] = mul_mod(a[pivot_row * n + j], inv, m);
        }
        for r2 in pivot_row + 1..n {
            let c = a[r2 * n + col];
            if c != 0 {
                for j in 0..n {
                    let t = mul_mod(c, a[pivot_row * n + j], m);
                    a[r2 * n + j] = (a[r2 * n + j] + m - t) % m;
                }
            }
        }
        pivot_row += 1;
    }
    let mut defect_column = None;
    'scan: for r in pivot_row..n {
        for col in 0..n {
            if a[r * n + col] != 0 {
                defect_column = Some(col);
                break 'scan;
            }
        }
    }
    KernelSummary {
        pivot_count: pivot_row,
        free_rank: n - pivot_row,
        is_free: defect_column.is_none(),
        defect_column,
    }
}

/// Why two matrices were judged non-similar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    CharPoly,
    MinPoly,
}

/// Outcome of the residue-field similarity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimilarityVerdict {
    /// Equal characteristic polynomials, equal squarefree minimal
    /// polynomials over every residue field, and both matrix orders
    /// coprime to the modulus: similar over Z/mZ.
    Similar,
    /// A residue field exhibits differing characteristic or minimal
    /// polynomials: not similar over Z/mZ.
    NotSimilar { prime: u64, obstruction: Obstruction },
    /// The sufficient criterion does not apply (shared minimal polynomial
    /// is not squarefree over some residue field).
    NotDecided { prime: u64 },
}

const ORDER_SEARCH_BOUND: u32 = 10_000;

/// Decide similarity of two integer matrices over Z/mZ by comparing
/// characteristic and minimal polynomials over every residue field F_p.
///
/// Equal characteristic polynomials plus an equal squarefree minimal
/// polynomial force diagonalizability with matching multiplicities over
/// every F_p, and matrices of order coprime to m are similar over Z/mZ
/// as soon as they are similar over each residue field. Differing
/// polynomials over any F_p witness non-similarity unconditionally.
pub fn similarity_verdict(
    m1: &IntMatrix,
    m2: &IntMatrix,
    modulus: &FactoredModulus,
) -> Result<SimilarityVerdict> {
    if m1.dim() != m2.dim() {
        return Err(Error::domain("similarity requires equal dimensions"));
    }
    let mut squarefree_failure: Option<u64> = None;
    for &(p, _) in modulus.factors() {
        let fp = crate::modular::factorize(p)?;
        let r1 = m1.reduce_mod(&fp);
        let r2 = m2.reduce_mod(&fp);
        if charpoly_mod(&r1) != charpoly_mod(&r2) {
            return Ok(SimilarityVerdict::NotSimilar {
                prime: p,
                obstruction: Obstruction::CharPoly,
            });
        }
        let q1 = minpoly_mod(&r1)?;
        if q1 != minpoly_mod(&r2)? {
            return Ok(SimilarityVerdict::NotSimilar {
                prime: p,
                obstruction: Obstruction::MinPoly,
            });
        }
        let squarefree = q1.gcd(&q1.derivative())?.degree() == Some(0);
        if !squarefree && squarefree_failure.is_none() {
            squarefree_failure = Some(p);
        }
    }
    if let Some(prime) = squarefree_failure {
        return Ok(SimilarityVerdict::NotDecided { prime });
    }
    // Lifting similarity from the residue fields to Z/mZ needs both
    // matrix orders coprime to m.
    for (label, mat) in [("first", m1), ("second", m2)] {
        let reduced = mat.reduce_mod(modulus);
        let order = reduced.order(ORDER_SEARCH_BOUND).ok_or_else(|| {
            Error::domain(format!(
                "order of the {label} matrix modulo {} not found within {} steps",
                modulus.modulus(),
                ORDER_SEARCH_BOUND
            ))
        })?;
        if (order as u64).gcd(&modulus.modulus()) != 1 {
            return Err(Error::domain(format!(
                "order {} of the {label} matrix shares a factor with the modulus {}",
                order,
                modulus.modulus()
            )));
        }
    }
    Ok(SimilarityVerdict::Similar)
}
