//! Adapted symplectic bases: given a surjection delta: Z^2g -> Z/nZ,
//! produce a basis x1..xg, y1..yg of Z^2g that is symplectic for the
//! standard intersection form and sends x1 to a generator and every other
//! basis vector to 0 under delta.
//!
//! The ambient basis order is interleaved (x1, y1, x2, y2, ...), so the
//! standard form is the block diagonal of g hyperbolic 2x2 blocks.
//!
//! Construction: lift delta to an integer functional, split off a
//! primitive vector v with unit image by unimodular column reduction, find
//! the hyperbolic partner y1 inside ker(delta-lift) by reducing the
//! functional B(v, .), recurse on the B-orthogonal complement (a
//! unimodular skew lattice of rank 2g-2), and finally correct y1 by
//! kernel vectors so it pairs to zero with the recursive basis. Outputs
//! are certified, not canonical: adapted bases are not unique, and
//! correctness is defined by the certificate invariants alone.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A skew-symmetric unimodular bilinear form on Z^2g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewForm {
    g: u32,
    gram: IntMatrix,
}

impl SkewForm {
    /// Validate skew-symmetry and unimodularity.
    pub fn new(gram: IntMatrix) -> Result<Self> {
        let dim = gram.dim();
        if dim == 0 || dim % 2 != 0 {
            return Err(Error::domain("a symplectic form needs positive even dimension"));
        }
        for i in 0..dim {
            for j in 0..dim {
                if gram[(i, j)] != -gram[(j, i)] {
                    return Err(Error::domain("form is not skew-symmetric"));
                }
            }
        }
        let det = gram.det();
        if det != BigInt::one() && det != -BigInt::one() {
            return Err(Error::domain(format!(
                "form is not unimodular (determinant {det})"
            )));
        }
        Ok(SkewForm {
            g: (dim / 2) as u32,
            gram,
        })
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }
}

/// The standard form: block diagonal of g hyperbolic blocks [[0,1],[-1,0]],
/// in the interleaved basis order (x1, y1, x2, y2, ...).
pub fn standard_form(g: u32) -> Result<SkewForm> {
    if g < 1 {
        return Err(Error::domain("genus must be >= 1"));
    }
    let dim = 2 * g as usize;
    let mut gram = IntMatrix::zeros(dim);
    for i in 0..g as usize {
        gram[(2 * i, 2 * i + 1)] = 1;
        gram[(2 * i + 1, 2 * i)] = -1;
    }
    Ok(SkewForm { g, gram })
}

/// uT J v, exactly.
fn pair(gram: &IntMatrix, u: &[i64], v: &[i64]) -> i64 {
    let dim = gram.dim();
    let mut acc: i128 = 0;
    for i in 0..dim {
        if u[i] == 0 {
            continue;
        }
        for j in 0..dim {
            acc += u[i] as i128 * gram[(i, j)] as i128 * v[j] as i128;
        }
    }
    i64::try_from(acc).expect("pairing value overflow")
}

fn add_scaled(target: &mut [i64], source: &[i64], c: i64) {
    for (t, &s) in target.iter_mut().zip(source) {
        let v = *t as i128 + c as i128 * s as i128;
        *t = i64::try_from(v).expect("vector entry overflow");
    }
}

fn linear_combination(a: &[i64], ca: i64, b: &[i64], cb: i64) -> Vec<i64> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            let v = ca as i128 * x as i128 + cb as i128 * y as i128;
            i64::try_from(v).expect("vector entry overflow")
        })
        .collect()
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0.
fn xgcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    (
        i64::try_from(old_r).expect("gcd overflow"),
        i64::try_from(old_s).expect("gcd coefficient overflow"),
        i64::try_from(old_t).expect("gcd coefficient overflow"),
    )
}

/// Unimodular column reduction of a linear functional: transform `basis`
/// in place so the functional takes value gcd on the first vector and 0 on
/// every other. Returns the gcd. The moves are 2x2 blocks of determinant
/// -1, so the span is preserved.
fn functional_reduce(basis: &mut [Vec<i64>], values: &mut [i64]) -> i64 {
    let k = basis.len();
    for i in 1..k {
        if values[i] == 0 {
            continue;
        }
        if values[0] == 0 {
            basis.swap(0, i);
            values.swap(0, i);
            continue;
        }
        let (g, s, t) = xgcd(values[0], values[i]);
        let new_first = linear_combination(&basis[0], s, &basis[i], t);
        let new_other = linear_combination(&basis[0], values[i] / g, &basis[i], -(values[0] / g));
        basis[0] = new_first;
        basis[i] = new_other;
        values[0] = g;
        values[i] = 0;
    }
    if values[0] < 0 {
        for entry in basis[0].iter_mut() {
            *entry = -*entry;
        }
        values[0] = -values[0];
    }
    values[0]
}

fn content(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |acc, &x| acc.gcd(&x))
}

/// Apply delta (residues mod n) to an integer vector.
fn apply_delta(delta: &[u64], v: &[i64], n: u64) -> u64 {
    let mut acc: i128 = 0;
    for (&d, &x) in delta.iter().zip(v) {
        acc += d as i128 * x as i128;
    }
    acc.rem_euclid(n as i128) as u64
}

fn check_surjective(delta: &[u64], n: u64) -> Result<()> {
    let g = delta.iter().fold(n, |acc, &d| acc.gcd(&(d % n)));
    if g != 1 {
        return Err(Error::domain(format!(
            "epimorphism required: the image of delta is {g}Z/{n}Z, not all of Z/{n}Z"
        )));
    }
    Ok(())
}

/// A primitive integer vector v with delta(v) a unit mod n, built from the
/// minimal nonnegative lift of delta by extended-gcd column reduction.
pub fn primitive_with_unit_image(delta: &[u64], n: u64) -> Result<Vec<i64>> {
    if n < 2 {
        return Err(Error::domain("n must be >= 2"));
    }
    if delta.is_empty() {
        return Err(Error::domain("delta must have at least one coordinate"));
    }
    check_surjective(delta, n)?;
    let dim = delta.len();
    let mut basis: Vec<Vec<i64>> = (0..dim)
        .map(|i| {
            let mut e = vec![0i64; dim];
            e[i] = 1;
            e
        })
        .collect();
    let mut values: Vec<i64> = delta.iter().map(|&d| (d % n) as i64).collect();
    let d = functional_reduce(&mut basis, &mut values);
    debug_assert!(d > 0, "surjectivity rules out the zero functional");
    let v = basis.swap_remove(0);
    debug_assert_eq!(content(&v), 1, "gcd-minimal value forces primitivity");
    Ok(v)
}

/// Certificate that a basis of Z^2g is symplectic and adapted to delta.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticBasisCert {
    pub g: u32,
    pub n: u64,
    /// x1..xg in ambient coordinates.
    pub x: Vec<Vec<i64>>,
    /// y1..yg in ambient coordinates.
    pub y: Vec<Vec<i64>>,
    /// Columns are the new basis in interleaved order (x1, y1, x2, y2, ...).
    pub change_of_basis: IntMatrix,
    /// delta of each x_i, reduced mod n.
    pub delta_x: Vec<u64>,
    /// delta of each y_i, reduced mod n.
    pub delta_y: Vec<u64>,
}

/// Result of mechanically re-checking every certificate invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertCheck {
    /// B(x_i, y_j) = delta_ij, B(x_i, x_j) = B(y_i, y_j) = 0.
    pub pairings_standard: bool,
    /// delta(x1) is a unit mod n.
    pub delta_x1_generates: bool,
    /// delta of every other basis vector is 0 mod n.
    pub delta_rest_zero: bool,
    /// det(change_of_basis) = +-1.
    pub determinant_unimodular: bool,
    /// change_of_basis preserves the standard form.
    pub change_of_basis_symplectic: bool,
}

impl CertCheck {
    pub fn all_pass(&self) -> bool {
        self.pairings_standard
            && self.delta_x1_generates
            && self.delta_rest_zero
            && self.determinant_unimodular
            && self.change_of_basis_symplectic
    }

    /// (name, passed) pairs in a fixed order, for rendering.
    pub fn lines(&self) -> [(&'static str, bool); 5] {
        [
            ("pairings-standard", self.pairings_standard),
            ("delta-x1-generates", self.delta_x1_generates),
            ("delta-rest-zero", self.delta_rest_zero),
            ("determinant-unimodular", self.determinant_unimodular),
            ("change-of-basis-symplectic", self.change_of_basis_symplectic),
        ]
    }
}

impl SymplecticBasisCert {
    /// Re-verify every invariant against the original delta.
    pub fn check(&self, delta: &[u64]) -> CertCheck {
        let g = self.g as usize;
        let n = self.n;
        let form = standard_form(self.g).expect("g >= 1");
        let gram = form.gram();

        let mut pairings = true;
        for i in 0..g {
            for j in 0..g {
                let expected = if i == j { 1 } else { 0 };
                pairings &= pair(gram, &self.x[i], &self.y[j]) == expected;
                pairings &= pair(gram, &self.x[i], &self.x[j]) == 0;
                pairings &= pair(gram, &self.y[i], &self.y[j]) == 0;
            }
        }

        let dx: Vec<u64> = self.x.iter().map(|v| apply_delta(delta, v, n)).collect();
        let dy: Vec<u64> = self.y.iter().map(|v| apply_delta(delta, v, n)).collect();
        let generates = dx[0].gcd(&n) == 1 && dx == self.delta_x && dy == self.delta_y;
        let rest_zero =
            dx[1..].iter().all(|&d| d == 0) && dy.iter().all(|&d| d == 0);

        let det = self.change_of_basis.det();
        let unimodular = det == BigInt::one() || det == -BigInt::one();
        let symplectic = is_symplectic(&self.change_of_basis).unwrap_or(false);

        CertCheck {
            pairings_standard: pairings,
            delta_x1_generates: generates,
            delta_rest_zero: rest_zero,
            determinant_unimodular: unimodular,
            change_of_basis_symplectic: symplectic,
        }
    }
}

/// Standard symplectic basis of the sublattice spanned by `vectors`, on
/// which the ambient form restricts unimodularly. Returns (x_i, y_i)
/// pairs in ambient coordinates.
fn standard_symplectic_pairs(
    vectors: Vec<Vec<i64>>,
    gram: &IntMatrix,
) -> Result<Vec<(Vec<i64>, Vec<i64>)>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    if vectors.len() % 2 != 0 {
        return Err(Error::integrity(
            "symplectic complement has odd rank; the form cannot be unimodular on it",
        ));
    }
    let x = vectors[0].clone();
    let mut rest: Vec<Vec<i64>> = vectors[1..].to_vec();
    let mut values: Vec<i64> = rest.iter().map(|w| pair(gram, &x, w)).collect();
    let d = functional_reduce(&mut rest, &mut values);
    if d != 1 {
        return Err(Error::integrity(format!(
            "B(x, .) has image {d}Z on the complement; the restricted form is not unimodular"
        )));
    }
    let y = rest.remove(0);
    // Make the remaining vectors B-orthogonal to y as well; adding
    // multiples of x keeps them orthogonal to x since B(x, x) = 0.
    for w in rest.iter_mut() {
        let c = pair(gram, &y, w);
        add_scaled(w, &x, c);
        debug_assert_eq!(pair(gram, &y, w), 0);
        debug_assert_eq!(pair(gram, &x, w), 0);
    }
    let mut pairs = vec![(x, y)];
    pairs.extend(standard_symplectic_pairs(rest, gram)?);
    Ok(pairs)
}

/// Build an adapted symplectic basis for a surjection delta: Z^2g -> Z/nZ.
pub fn adapt_basis(delta: &[u64], g: u32, n: u64) -> Result<SymplecticBasisCert> {
    if g < 2 {
        return Err(Error::domain("genus must be >= 2"));
    }
    if n < 2 {
        return Err(Error::domain("n must be >= 2"));
    }
    if delta.len() != 2 * g as usize {
        return Err(Error::domain(format!(
            "delta must have 2g = {} coordinates, got {}",
            2 * g,
            delta.len()
        )));
    }
    let delta: Vec<u64> = delta.iter().map(|&d| d % n).collect();
    check_surjective(&delta, n)?;
    let dim = 2 * g as usize;
    let form = standard_form(g)?;
    let gram = form.gram();

    // v with delta(v) a unit, plus a basis of ker(delta-lift).
    let mut basis: Vec<Vec<i64>> = (0..dim)
        .map(|i| {
            let mut e = vec![0i64; dim];
            e[i] = 1;
            e
        })
        .collect();
    let mut values: Vec<i64> = delta.iter().map(|&d| d as i64).collect();
    functional_reduce(&mut basis, &mut values);
    let v = basis.remove(0);
    let kernel_basis = basis;

    // y1 in ker(delta-lift) with B(v, y1) = 1; the rest spans the
    // B(v, .) = 0 sublattice of the kernel.
    let mut kb = kernel_basis;
    let mut phi: Vec<i64> = kb.iter().map(|w| pair(gram, &v, w)).collect();
    let d = functional_reduce(&mut kb, &mut phi);
    if d != 1 {
        return Err(Error::integrity(format!(
            "B(v, .) has image {d}Z on ker(delta-lift); the form is not unimodular"
        )));
    }
    let y1 = kb.remove(0);
    let complement = kb;

    let pairs = standard_symplectic_pairs(complement, gram)?;

    // Correct y1 to pair to zero with the recursive basis. The correctors
    // lie in ker(delta-lift), so delta(y1) stays 0.
    let mut y1 = y1;
    for (xj, yj) in &pairs {
        let a = pair(gram, &y1, yj);
        let b = pair(gram, &y1, xj);
        add_scaled(&mut y1, xj, -a);
        add_scaled(&mut y1, yj, b);
    }

    let mut x_vecs = vec![v];
    let mut y_vecs = vec![y1];
    for (xj, yj) in pairs {
        x_vecs.push(xj);
        y_vecs.push(yj);
    }

    let mut change = IntMatrix::zeros(dim);
    for i in 0..g as usize {
        for r in 0..dim {
            change[(r, 2 * i)] = x_vecs[i][r];
            change[(r, 2 * i + 1)] = y_vecs[i][r];
        }
    }

    let cert = SymplecticBasisCert {
        g,
        n,
        delta_x: x_vecs.iter().map(|w| apply_delta(&delta, w, n)).collect(),
        delta_y: y_vecs.iter().map(|w| apply_delta(&delta, w, n)).collect(),
        x: x_vecs,
        y: y_vecs,
        change_of_basis: change,
    };
    let check = cert.check(&delta);
    if !check.all_pass() {
        return Err(Error::integrity(format!(
            "constructed basis fails its own certificate: {check:?}"
        )));
    }
    Ok(cert)
}

/// True iff MT J M = J for the standard form J.
pub fn is_symplectic(mtx: &IntMatrix) -> Result<bool> {
    let dim = mtx.dim();
    if dim == 0 || dim % 2 != 0 {
        return Err(Error::domain("symplectic test needs positive even dimension"));
    }
    let j = standard_form((dim / 2) as u32)?.gram().clone();
    Ok(mtx.transpose().mul(&j).mul(mtx) == j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_form_blocks() {
        let f1 = standard_form(1).unwrap();
        assert_eq!(
            f1.gram(),
            &IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]).unwrap()
        );
        let f2 = standard_form(2).unwrap();
        let expected = IntMatrix::from_rows(&[
            vec![0, 1, 0, 0],
            vec![-1, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, -1, 0],
        ])
        .unwrap();
        assert_eq!(f2.gram(), &expected);
        for g in 1..=5 {
            assert_eq!(standard_form(g).unwrap().gram().det(), BigInt::one());
        }
        assert!(standard_form(0).is_err());
    }

    #[test]
    fn skew_form_validation() {
        assert!(SkewForm::new(IntMatrix::identity(2)).is_err());
        let not_unimodular =
            IntMatrix::from_rows(&[vec![0, 2], vec![-2, 0]]).unwrap();
        assert!(SkewForm::new(not_unimodular).is_err());
        let ok = standard_form(2).unwrap();
        assert!(SkewForm::new(ok.gram().clone()).is_ok());
    }

    #[test]
    fn unit_image_examples() {
        // delta = e1: v = e1.
        let v = primitive_with_unit_image(&[1, 0, 0, 0], 5).unwrap();
        assert_eq!(v, vec![1, 0, 0, 0]);

        // delta = (2, 3) mod 6: v primitive with unit image.
        let v = primitive_with_unit_image(&[2, 3], 6).unwrap();
        assert_eq!(content(&v), 1);
        let image = apply_delta(&[2, 3], &v, 6);
        assert!(image == 1 || image == 5, "image {image} not a unit mod 6");

        // image inside 2Z/6Z: not surjective.
        assert!(matches!(
            primitive_with_unit_image(&[2, 4], 6),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn adapt_identity_case() {
        // Already adapted: delta = e1* gives the identity change of basis.
        let cert = adapt_basis(&[1, 0, 0, 0], 2, 3).unwrap();
        assert_eq!(cert.change_of_basis, IntMatrix::identity(4));
        assert!(cert.check(&[1, 0, 0, 0]).all_pass());
        assert_eq!(cert.delta_x, vec![1, 0]);
        assert_eq!(cert.delta_y, vec![0, 0]);
    }

    #[test]
    fn adapt_generator_on_later_coordinate() {
        let delta = [0u64, 0, 1, 0];
        let cert = adapt_basis(&delta, 2, 3).unwrap();
        let check = cert.check(&delta);
        assert!(check.all_pass(), "{check:?}");
        // x1 must be the coordinate carrying the generator, up to sign.
        assert_eq!(cert.x[0].iter().map(|a| a.abs()).sum::<i64>(), 1);
        assert_eq!(cert.x[0][2].abs(), 1);
    }

    #[test]
    fn adapt_diagonal_delta() {
        let delta = [1u64, 1, 1, 1];
        let cert = adapt_basis(&delta, 2, 2).unwrap();
        assert!(cert.check(&delta).all_pass());
    }

    #[test]
    fn adapt_rejects_bad_input() {
        assert!(adapt_basis(&[2, 4, 0, 2], 2, 6).is_err());
        assert!(adapt_basis(&[1, 0, 0], 2, 3).is_err());
        assert!(adapt_basis(&[1, 0, 0, 0], 1, 3).is_err());
    }

    #[test]
    fn symplectic_membership() {
        assert!(is_symplectic(&IntMatrix::identity(2)).unwrap());
        let j = IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]).unwrap();
        assert!(is_symplectic(&j).unwrap());
        let scale = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).unwrap();
        assert!(!is_symplectic(&scale).unwrap());
        assert!(is_symplectic(&IntMatrix::identity(3)).is_err());
    }

    #[test]
    fn random_surjections_certify() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x5ca1ab1e);
        let mut done = 0;
        while done < 100 {
            let g = rng.gen_range(2..=3u32);
            let n = rng.gen_range(2..=9u64);
            let delta: Vec<u64> = (0..2 * g as usize).map(|_| rng.gen_range(0..n)).collect();
            if check_surjective(&delta, n).is_err() {
                continue;
            }
            let cert = adapt_basis(&delta, g, n).unwrap();
            let check = cert.check(&delta);
            assert!(check.all_pass(), "delta {delta:?} mod {n}: {check:?}");
            assert!(is_symplectic(&cert.change_of_basis).unwrap());
            done += 1;
        }
    }
}
