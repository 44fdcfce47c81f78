//! Dense univariate polynomials over the rationals: Euclidean arithmetic,
//! gcd, squarefree part, rational roots.

use crate::poly::{Monomial, Polynomial};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// Coefficient list, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRational) -> UniPoly {
        if s.is_zero() {
            return UniPoly::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coefficient() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = &out[i] - c;
        }
        UniPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    /// Euclidean division: `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dlc = divisor.leading_coefficient().ok_or(Error::DivisionByZero)?;
        let dd = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![
            BigRational::zero();
            self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1
        ];
        while rem.len() >= divisor.coeffs.len() && !rem.is_empty() {
            let rd = rem.len() - 1;
            let factor = rem.last().unwrap() / dlc;
            let shift = rd - dd;
            quo[shift] = factor.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - c * &factor;
            }
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
        }
        Ok((UniPoly::from_coeffs(quo), UniPoly::from_coeffs(rem)))
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors: `f / gcd(f, f')`, monic.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g).unwrap();
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Splits off the power of `x` dividing `f`: returns `(k, g)` with
    /// `f = x^k g` and `g(0) != 0`.
    pub fn deflate(&self) -> (usize, UniPoly) {
        if self.is_zero() {
            return (0, UniPoly::zero());
        }
        let k = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        (k, UniPoly::from_coeffs(self.coeffs[k..].to_vec()))
    }

    /// Synthetic division by `(x - r)`; `None` when `r` is not a root.
    pub fn div_linear(&self, r: &BigRational) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() - 1];
        let mut carry = BigRational::zero();
        for i in (0..self.coeffs.len()).rev() {
            let v = &self.coeffs[i] + &carry;
            if i == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                out[i - 1] = v.clone();
                carry = v * r;
            }
        }
        Some(UniPoly::from_coeffs(out))
    }

    /// Integer-coefficient primitive form (content 1, positive leading
    /// coefficient), as bare integers.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut denom = BigInt::one();
        for c in &self.coeffs {
            denom = denom.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        for c in ints.iter_mut() {
            *c = &*c / &content;
        }
        ints
    }

    /// All rational roots with multiplicities, ascending.
    pub fn rational_roots(&self) -> Vec<(BigRational, usize)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let (k, mut g) = self.deflate();
        let mut roots: Vec<(BigRational, usize)> = Vec::new();
        if k > 0 {
            roots.push((BigRational::zero(), k));
        }
        if g.degree().unwrap_or(0) == 0 {
            roots.sort_by(|a, b| a.0.cmp(&b.0));
            return roots;
        }
        let ints = g.primitive_integer();
        let a0 = ints.first().unwrap().clone();
        let an = ints.last().unwrap().clone();
        let mut candidates: Vec<BigRational> = Vec::new();
        for p in divisors(&a0) {
            for q in divisors(&an) {
                let r = BigRational::new(p.clone(), q.clone());
                if !candidates.contains(&r) {
                    candidates.push(r.clone());
                }
                let neg = -r;
                if !candidates.contains(&neg) {
                    candidates.push(neg);
                }
            }
        }
        candidates.sort();
        for r in candidates {
            let mut mult = 0;
            while let Some(q) = g.div_linear(&r) {
                mult += 1;
                g = q;
                if g.degree().is_none() {
                    break;
                }
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        roots
    }

    /// Cauchy root bound: every real root has absolute value below
    /// `1 + max |a_i| / |a_n|`.
    pub fn cauchy_bound(&self) -> BigRational {
        let lc = self.leading_coefficient().expect("nonzero polynomial");
        let mut m = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = (c / lc).abs();
            if a > m {
                m = a;
            }
        }
        m + BigRational::one()
    }

    /// Extracts the univariate polynomial in `var` from a multivariate one.
    pub fn from_polynomial(p: &Polynomial, var: usize) -> Result<UniPoly> {
        let mut coeffs: Vec<BigRational> = Vec::new();
        for (m, c) in p.terms() {
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 && v != var {
                    return Err(Error::Invalid(format!(
                        "polynomial is not univariate in variable {var}"
                    )));
                }
            }
            let d = m.degree(var) as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigRational::zero());
            }
            coeffs[d] = c.clone();
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }

    pub fn to_polynomial(&self, arity: usize, var: usize) -> Polynomial {
        Polynomial::from_terms(
            arity,
            self.coeffs.iter().enumerate().map(|(i, c)| {
                let mut exps = vec![0u16; arity];
                exps[var] = i as u16;
                (Monomial::from_exponents(&exps), c.clone())
            }),
        )
    }
}

/// Positive divisors of `n` (absolute value), ascending.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x-2)(x+3) and (x-1)(x+3)
        let f = up(&[6, -7, 0, 1]);
        let g = up(&[-3, 2, 1]);
        let (quo, rem) = f.div_rem(&g).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quo, up(&[-2, 1]));
        assert_eq!(f.gcd(&g), g.monic());
    }

    #[test]
    fn squarefree_part_drops_multiplicity() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let f = up(&[2, -3, 0, 1]);
        let sf = f.squarefree_part();
        assert_eq!(sf, up(&[-2, 1, 1]).monic());
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // x^2 (2x - 1)^2 (x + 3)
        let f = up(&[0, 0, 1]).mul(&up(&[-1, 2]).mul(&up(&[-1, 2]))).mul(&up(&[3, 1]));
        let roots = f.rational_roots();
        assert_eq!(
            roots,
            vec![
                (q(-3, 1), 1),
                (BigRational::zero(), 2),
                (q(1, 2), 2),
            ]
        );
    }

    #[test]
    fn no_rational_roots_for_irreducible() {
        let f = up(&[-2, 0, 1]); // x^2 - 2
        assert!(f.rational_roots().is_empty());
    }

    #[test]
    fn cauchy_bound_contains_roots() {
        let f = up(&[6, -7, 0, 1]); // roots 1, 2, -3
        assert!(f.cauchy_bound() > q(3, 1));
    }

    #[test]
    fn deflate_strips_zero_roots() {
        let f = up(&[0, 0, -2, 1]);
        let (k, g) = f.deflate();
        assert_eq!(k, 2);
        assert_eq!(g, up(&[-2, 1]));
    }
}
