//! Polynomials over Z and Z/p^eZ: cyclotomic polynomials, root finding
//! modulo a prime, Hensel lifting of simple roots to prime-power moduli,
//! and the count of linear factors of f(x) = 1 + x + ... + x^(n-1).
//!
//! Root finding modulo p is exhaustive evaluation; the primes here are
//! desk-scale and the polynomials have degree below ~100. Hensel lifting
//! is Newton iteration with an exact modular inverse of the derivative,
//! doubling the modulus p, p^2, p^4, ... and reducing to p^e at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modular::{inv_mod, is_prime, mul_mod};

/// A univariate polynomial with integer coefficients, low degree first.
/// The zero polynomial is the empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    /// x^n - 1
    pub fn x_pow_minus_one(n: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n as usize] = BigInt::one();
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPoly::new(coeffs)
    }

    pub fn sub(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPoly::new(coeffs)
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division; errors if the divisor does not divide evenly over Z.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::domain("division by the zero polynomial"));
        }
        let mut rem = self.coeffs.clone();
        let d = divisor.coeffs.len();
        if rem.len() < d {
            return if self.is_zero() {
                Ok(IntPoly::zero())
            } else {
                Err(Error::domain("inexact polynomial division"))
            };
        }
        let lead = divisor.coeffs.last().unwrap().clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d + 1];
        for k in (0..quot.len()).rev() {
            let (q, r) = rem[k + d - 1].div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::domain("inexact polynomial division"));
            }
            if !q.is_zero() {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let t = &q * b;
                    rem[k + i] -= t;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::domain("inexact polynomial division"));
        }
        Ok(IntPoly::new(quot))
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::new(coeffs)
    }

    /// Reduce all coefficients into [0, m).
    pub fn reduce_mod(&self, m: u64) -> ModPoly {
        let mi = BigInt::from(m);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&mi);
                u64::try_from(&r).expect("residue fits in u64")
            })
            .collect();
        ModPoly::new(coeffs, m)
    }

    /// Evaluate modulo m, without materializing big intermediates.
    pub fn eval_mod(&self, x: u64, m: u64) -> u64 {
        let mi = BigInt::from(m);
        let mut acc: u64 = 0;
        for c in self.coeffs.iter().rev() {
            let c = u64::try_from(&c.mod_floor(&mi)).expect("residue fits in u64");
            acc = (mul_mod(acc, x % m, m) + c) % m;
        }
        acc
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "x^{i}")?;
            } else {
                write!(f, "{a}*x^{i}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with coefficients reduced modulo m, low degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    coeffs: Vec<u64>,
    modulus: u64,
}

impl ModPoly {
    pub fn new(coeffs: Vec<u64>, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be >= 2");
        let mut p = ModPoly {
            coeffs: coeffs.into_iter().map(|c| c % modulus).collect(),
            modulus,
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let m = self.modulus;
        let mut acc: u64 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x % m, m) + c) % m;
        }
        acc
    }

    pub fn mul(&self, rhs: &ModPoly) -> ModPoly {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        if self.is_zero() || rhs.is_zero() {
            return ModPoly::new(vec![], self.modulus);
        }
        let m = self.modulus;
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, m)) % m;
            }
        }
        ModPoly::new(coeffs, m)
    }

    pub fn sub(&self, rhs: &ModPoly) -> ModPoly {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        let m = self.modulus;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + m - rhs.coeff(i)) % m)
            .collect();
        ModPoly::new(coeffs, m)
    }

    pub fn scale(&self, c: u64) -> ModPoly {
        let m = self.modulus;
        ModPoly::new(self.coeffs.iter().map(|&a| mul_mod(a, c, m)).collect(), m)
    }

    /// `x - root` over the same modulus.
    pub fn linear(root: u64, modulus: u64) -> ModPoly {
        ModPoly::new(vec![(modulus - root % modulus) % modulus, 1], modulus)
    }

    /// Division with remainder by a divisor whose leading coefficient is a
    /// unit. Errors otherwise.
    pub fn div_rem(&self, divisor: &ModPoly) -> Result<(ModPoly, ModPoly)> {
        assert_eq!(self.modulus, divisor.modulus, "mixed moduli");
        let m = self.modulus;
        let d = divisor
            .degree()
            .ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let lead_inv = inv_mod(divisor.coeffs[d], m)
            .ok_or_else(|| Error::domain("divisor leading coefficient is not a unit"))?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((ModPoly::new(vec![], m), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - d];
        for k in (0..quot.len()).rev() {
            let q = mul_mod(rem[k + d], lead_inv, m);
            quot[k] = q;
            if q != 0 {
                for (i, &b) in divisor.coeffs.iter().enumerate() {
                    let t = mul_mod(q, b, m);
                    rem[k + i] = (rem[k + i] + m - t) % m;
                }
            }
        }
        Ok((ModPoly::new(quot, m), ModPoly::new(rem, m)))
    }

    /// Polynomial gcd; requires a prime modulus. The result is monic.
    pub fn gcd(&self, rhs: &ModPoly) -> Result<ModPoly> {
        if !is_prime(self.modulus) {
            return Err(Error::domain("polynomial gcd requires a prime modulus"));
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if let Some(d) = a.degree() {
            let inv = inv_mod(a.coeffs[d], self.modulus).expect("unit over prime field");
            a = a.scale(inv);
        }
        Ok(a)
    }

    pub fn derivative(&self) -> ModPoly {
        let m = self.modulus;
        if self.coeffs.len() <= 1 {
            return ModPoly::new(vec![], m);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % m, m))
            .collect();
        ModPoly::new(coeffs, m)
    }
}

impl std::fmt::Display for ModPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else if c == 1 {
                write!(f, "x^{i}")?;
            } else {
                write!(f, "{c}*x^{i}")?;
            }
        }
        Ok(())
    }
}

/// The d-th cyclotomic polynomial, by exact division of x^d - 1 by
/// the cyclotomics of the proper divisors of d.
pub fn cyclotomic(d: u32) -> Result<IntPoly> {
    if d < 1 {
        return Err(Error::domain("cyclotomic index must be >= 1"));
    }
    let mut table: Vec<(u32, IntPoly)> = Vec::new();
    for k in divisors(d) {
        let mut q = IntPoly::x_pow_minus_one(k);
        for (j, phi) in &table {
            if k % j == 0 {
                q = q.exact_div(phi)?;
            }
        }
        table.push((k, q));
    }
    Ok(table.pop().expect("nonempty divisor list").1)
}

/// Ascending divisors of n.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1u32;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// f(x) = 1 + x + ... + x^(n-1), the polynomial whose roots are the
/// nontrivial n-th roots of unity.
pub fn all_ones_poly(n: u32) -> IntPoly {
    IntPoly::new(vec![BigInt::one(); n as usize])
}

/// Characteristic polynomial of the deck transformation on first homology:
/// (x - 1)^(2g) * f(x)^(2g - 2), of degree 2h with h = n(g-1) + 1.
pub fn deck_charpoly(g: u32, n: u32) -> Result<IntPoly> {
    if g < 2 || n < 2 {
        return Err(Error::domain("deck_charpoly requires g >= 2 and n >= 2"));
    }
    let x_minus_one = IntPoly::from_i64(&[-1, 1]);
    Ok(x_minus_one.pow(2 * g).mul(&all_ones_poly(n).pow(2 * g - 2)))
}

/// All lambda in F_p with poly(lambda) = 0, by exhaustive evaluation.
/// Ascending order.
pub fn linear_roots_mod_p(poly: &ModPoly, p: u64) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let reduced = ModPoly::new(poly.coeffs().iter().map(|&c| c % p).collect(), p);
    if reduced.is_zero() {
        return Err(Error::domain("polynomial is zero modulo p"));
    }
    Ok((0..p).filter(|&x| reduced.eval(x) == 0).collect())
}

/// Lift a simple root of `poly` modulo p to the unique root modulo p^e
/// congruent to it, by Newton iteration with doubling modulus.
pub fn hensel_lift_root(poly: &IntPoly, root: u64, p: u64, e: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if e < 1 {
        return Err(Error::domain("exponent must be >= 1"));
    }
    let target: u64 = p
        .checked_pow(e)
        .ok_or_else(|| Error::domain("p^e does not fit in 64 bits"))?;
    if poly.eval_mod(root, p) != 0 {
        return Err(Error::domain(format!("{root} is not a root modulo {p}")));
    }
    let deriv = poly.derivative();
    if deriv.eval_mod(root, p) == 0 {
        return Err(Error::lift(format!(
            "root {root} modulo {p} is not simple: the derivative vanishes"
        )));
    }

    // Newton iteration doubles the precision each step; a step computed
    // modulo p^min(2k, e) is the reduction of the full p^(2k) step.
    let mut exponent = 1u32;
    let mut x = root % p;
    while exponent < e {
        exponent = (exponent * 2).min(e);
        let modulus = p.pow(exponent);
        let fx = poly.eval_mod(x, modulus);
        let dx = deriv.eval_mod(x, modulus);
        let dx_inv = inv_mod(dx, modulus).ok_or_else(|| {
            Error::lift(format!("derivative not invertible modulo {modulus}"))
        })?;
        x = (x + modulus - mul_mod(fx, dx_inv, modulus)) % modulus;
    }
    debug_assert_eq!(poly.eval_mod(x, target), 0);
    Ok(x)
}

/// gcd(n, p-1) - 1: the number of linear factors of f(x) modulo p^e,
/// independent of e.
pub fn linear_factor_count(n: u32, p: u64) -> Result<u64> {
    check_coprime(n, p)?;
    Ok((n as u64).gcd(&(p - 1)) - 1)
}

/// All roots of f(x) = 1 + x + ... + x^(n-1) in (Z/p^eZ)^*, each obtained
/// by Hensel-lifting a root modulo p. Ascending order; the cardinality is
/// gcd(n, p-1) - 1.
pub fn eigenvalue_set(n: u32, p: u64, e: u32) -> Result<Vec<u64>> {
    check_coprime(n, p)?;
    if n < 2 {
        return Err(Error::domain("n must be >= 2"));
    }
    if e < 1 {
        return Err(Error::domain("exponent must be >= 1"));
    }
    let f = all_ones_poly(n);
    let roots_mod_p = linear_roots_mod_p(&f.reduce_mod(p), p)?;
    let mut lifted: Vec<u64> = roots_mod_p
        .into_iter()
        .map(|r| hensel_lift_root(&f, r, p, e))
        .collect::<Result<_>>()?;
    lifted.sort_unstable();
    Ok(lifted)
}

fn check_coprime(n: u32, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if (n as u64).gcd(&p) != 1 {
        return Err(Error::domain(format!(
            "coprimality required: gcd({n}, {p}) must be 1"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1).unwrap(), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(3).unwrap(), IntPoly::from_i64(&[1, 1, 1]));
        // Phi_6 derived by dividing x^6 - 1 by Phi_1 Phi_2 Phi_3.
        let divisor = IntPoly::from_i64(&[-1, 1])
            .mul(&IntPoly::from_i64(&[1, 1]))
            .mul(&IntPoly::from_i64(&[1, 1, 1]));
        let expected = IntPoly::x_pow_minus_one(6).exact_div(&divisor).unwrap();
        assert_eq!(cyclotomic(6).unwrap(), expected);
        assert_eq!(expected, IntPoly::from_i64(&[1, -1, 1]));
    }

    #[test]
    fn cyclotomic_rejects_zero() {
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn cyclotomic_degree_is_phi() {
        use crate::modular::{euler_phi, factorize};
        for d in 2..=30u32 {
            let deg = cyclotomic(d).unwrap().degree().unwrap() as u64;
            assert_eq!(deg, euler_phi(&factorize(d as u64).unwrap()));
        }
    }

    #[test]
    fn deck_charpoly_matches_displayed_form() {
        // g=2, n=2: (x-1)^4 (x+1)^2
        let expected = IntPoly::from_i64(&[-1, 1])
            .pow(4)
            .mul(&IntPoly::from_i64(&[1, 1]).pow(2));
        assert_eq!(deck_charpoly(2, 2).unwrap(), expected);

        // g=3, n=2: (x-1)^6 (x+1)^4, degree 10
        let expected = IntPoly::from_i64(&[-1, 1])
            .pow(6)
            .mul(&IntPoly::from_i64(&[1, 1]).pow(4));
        let got = deck_charpoly(3, 2).unwrap();
        assert_eq!(got, expected);
        assert_eq!(got.degree(), Some(10));

        // degree 2h with h = n(g-1)+1: g=2, n=3 -> 2*(3*1+1) = 8
        assert_eq!(deck_charpoly(2, 3).unwrap().degree(), Some(8));
    }

    #[test]
    fn deck_charpoly_rejects_small_parameters() {
        assert!(deck_charpoly(1, 3).is_err());
        assert!(deck_charpoly(2, 1).is_err());
    }

    #[test]
    fn linear_roots_examples() {
        // Phi_3 mod 7: 2^2+2+1 = 7, 4^2+4+1 = 21, both 0 mod 7.
        let phi3 = cyclotomic(3).unwrap().reduce_mod(7);
        assert_eq!(linear_roots_mod_p(&phi3, 7).unwrap(), vec![2, 4]);

        // Phi_4 = x^2+1 has no root mod 3.
        let phi4 = cyclotomic(4).unwrap().reduce_mod(3);
        assert_eq!(linear_roots_mod_p(&phi4, 3).unwrap(), Vec::<u64>::new());

        let linear = ModPoly::linear(1, 5);
        assert_eq!(linear_roots_mod_p(&linear, 5).unwrap(), vec![1]);
    }

    #[test]
    fn linear_roots_rejects_zero_poly() {
        let z = ModPoly::new(vec![7, 14], 7);
        assert!(z.is_zero());
        assert!(linear_roots_mod_p(&z, 7).is_err());
    }

    #[test]
    fn hensel_examples() {
        let phi3 = cyclotomic(3).unwrap();
        // Exhaustive search over Z/49Z finds roots {18, 30}; the lift of
        // 2 is the one congruent to 2 mod 7.
        let exhaustive: Vec<u64> = (0..49)
            .filter(|&x| phi3.eval_mod(x, 49) == 0)
            .collect();
        assert_eq!(exhaustive, vec![18, 30]);
        let lift2 = hensel_lift_root(&phi3, 2, 7, 2).unwrap();
        assert_eq!(lift2 % 7, 2);
        assert_eq!(lift2, 30);
        let lift4 = hensel_lift_root(&phi3, 4, 7, 2).unwrap();
        assert_eq!(lift4, 18);

        // e = 1 returns the root unchanged.
        assert_eq!(hensel_lift_root(&phi3, 2, 7, 1).unwrap(), 2);

        // (x-1)^2 has a double root at 1: lifting must fail.
        let sq = IntPoly::from_i64(&[1, -2, 1]);
        assert!(matches!(hensel_lift_root(&sq, 1, 5, 2), Err(Error::Lift(_))));

        // non-root input
        assert!(matches!(hensel_lift_root(&phi3, 3, 7, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn eigenvalue_set_examples() {
        // n=2, p=5: f = x+1, root -1 = 4.
        assert_eq!(eigenvalue_set(2, 5, 1).unwrap(), vec![4]);
        // n=3, p=7, e=2: checked exhaustively in hensel_examples.
        assert_eq!(eigenvalue_set(3, 7, 2).unwrap(), vec![18, 30]);
        // n=3, p=5: gcd(3,4)-1 = 0.
        assert_eq!(eigenvalue_set(3, 5, 1).unwrap(), Vec::<u64>::new());
        // coprimality violation
        assert!(eigenvalue_set(4, 2, 1).is_err());
    }

    #[test]
    fn linear_factor_count_examples() {
        // Counted exhaustively over the corresponding prime fields.
        let count_roots = |n: u32, p: u64| -> u64 {
            let f = all_ones_poly(n).reduce_mod(p);
            linear_roots_mod_p(&f, p).unwrap().len() as u64
        };
        assert_eq!(linear_factor_count(2, 5).unwrap(), 1);
        assert_eq!(count_roots(2, 5), 1);
        assert_eq!(linear_factor_count(3, 7).unwrap(), 2);
        assert_eq!(count_roots(3, 7), 2);
        assert_eq!(linear_factor_count(6, 13).unwrap(), 5);
        assert_eq!(count_roots(6, 13), 5);
        assert!(linear_factor_count(4, 2).is_err());
    }

    #[test]
    fn poly_division_and_gcd() {
        let a = IntPoly::x_pow_minus_one(6);
        let b = IntPoly::from_i64(&[-1, 1]);
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, IntPoly::from_i64(&[1, 1, 1, 1, 1, 1]));
        assert!(IntPoly::from_i64(&[1, 1]).exact_div(&IntPoly::from_i64(&[0, 1])).is_err());

        let f = ModPoly::new(vec![4, 0, 1], 5); // x^2 + 4 = (x-1)(x-4) mod 5
        let g = ModPoly::linear(1, 5);
        let gcd = f.gcd(&g).unwrap();
        assert_eq!(gcd, ModPoly::linear(1, 5));
    }
}
