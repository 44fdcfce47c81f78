//! Ideal-level operations built on Groebner bases: intersection, colon,
//! saturation and elimination.
//!
//! Every operation returns its result as the reduced Groebner basis of the
//! answer (under graded reverse lex unless stated otherwise), so outputs
//! are canonical and comparable.

use crate::gb::{buchberger, GroebnerBasis};
use crate::poly::{MonomialOrder, Polynomial};
use crate::{Error, Result};

/// An ideal presented by generators in a ring of fixed arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    arity: usize,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(arity: usize, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { arity, gens }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn groebner(&self, order: &MonomialOrder) -> Result<GroebnerBasis> {
        buchberger(&self.gens, order)
    }

    /// Canonical form: generators replaced by the reduced grevlex basis.
    pub fn canonical(&self) -> Result<Ideal> {
        let gb = self.groebner(&MonomialOrder::grevlex(self.arity))?;
        Ok(Ideal::new(self.arity, gb.elements))
    }
}

/// Extends every generator into a ring with one extra (tag) variable at the
/// last index.
fn extend(gens: &[Polynomial], arity: usize) -> Vec<Polynomial> {
    let map: Vec<usize> = (0..arity).collect();
    gens.iter().map(|g| g.map_variables(arity + 1, &map)).collect()
}

/// Drops the tag variable again. Only valid for polynomials that do not
/// mention it.
fn shrink(gens: Vec<Polynomial>, arity: usize) -> Vec<Polynomial> {
    let mut map: Vec<usize> = (0..arity).collect();
    map.push(0); // tag never occurs in the restricted generators
    gens.into_iter().map(|g| g.map_variables(arity, &map)).collect()
}

/// `a ∩ b` via the tag construction `<t a, (1-t) b>` and elimination of `t`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.arity != b.arity {
        return Err(Error::ArityMismatch(format!(
            "intersect: {} vs {}",
            a.arity, b.arity
        )));
    }
    let n = a.arity;
    let t = Polynomial::var(n + 1, n);
    let one_minus_t = Polynomial::one(n + 1).sub(&t);
    let mut gens: Vec<Polynomial> = extend(&a.gens, n)
        .into_iter()
        .map(|g| g.mul(&t))
        .collect();
    gens.extend(extend(&b.gens, n).into_iter().map(|g| g.mul(&one_minus_t)));
    let order = MonomialOrder::eliminating(vec![n], (0..n).collect());
    let gb = buchberger(&gens, &order)?;
    let keep: Vec<usize> = (0..n).collect();
    let restricted = shrink(gb.restricted_to(&keep), n);
    Ideal::new(n, restricted).canonical()
}

/// The colon ideal `(I : f)`, computed as `(I ∩ <f>) / f`.
pub fn colon(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        // Everything multiplies zero into the ideal.
        return Ideal::new(ideal.arity, vec![Polynomial::one(ideal.arity)]).canonical();
    }
    if f.arity() != ideal.arity {
        return Err(Error::ArityMismatch(format!(
            "colon: ideal arity {} vs divisor arity {}",
            ideal.arity,
            f.arity()
        )));
    }
    let principal = Ideal::new(ideal.arity, vec![f.clone()]);
    let meet = intersect(ideal, &principal)?;
    let mut quotients = Vec::with_capacity(meet.gens.len());
    for g in &meet.gens {
        let q = g.checked_div(f).ok_or_else(|| {
            Error::InexactDivision("intersection generator not divisible by f".into())
        })?;
        quotients.push(q);
    }
    Ideal::new(ideal.arity, quotients).canonical()
}

/// The saturation `(I : f^∞)` by the Rabinowitsch construction: adjoin `t`,
/// add `t f - 1`, eliminate `t`.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.arity() != ideal.arity {
        return Err(Error::ArityMismatch(format!(
            "saturate: ideal arity {} vs divisor arity {}",
            ideal.arity,
            f.arity()
        )));
    }
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n = ideal.arity;
    let mut gens = extend(&ideal.gens, n);
    let tf = f
        .map_variables(n + 1, &(0..n).collect::<Vec<_>>())
        .mul(&Polynomial::var(n + 1, n));
    gens.push(tf.sub(&Polynomial::one(n + 1)));
    let order = MonomialOrder::eliminating(vec![n], (0..n).collect());
    let gb = buchberger(&gens, &order)?;
    let keep: Vec<usize> = (0..n).collect();
    let restricted = shrink(gb.restricted_to(&keep), n);
    Ideal::new(n, restricted).canonical()
}

/// Saturation by a product, one factor at a time:
/// `(I : (fg)^∞) = ((I : f^∞) : g^∞)`. Keeps the tag eliminations small.
pub fn saturate_by_factors(ideal: &Ideal, factors: &[Polynomial]) -> Result<Ideal> {
    let mut current = ideal.canonical()?;
    for f in factors {
        current = saturate(&current, f)?;
    }
    Ok(current)
}

/// The elimination ideal `I ∩ Q[keep]`, returned in the ambient ring with
/// generators supported on `keep` only. Generators are the reduced basis of
/// the elimination ideal under grevlex on `keep`.
pub fn eliminate(ideal: &Ideal, keep: &[usize]) -> Result<Ideal> {
    let n = ideal.arity;
    for &v in keep {
        if v >= n {
            return Err(Error::VariableOutOfRange { index: v, arity: n });
        }
    }
    let mut keep_sorted: Vec<usize> = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    let front: Vec<usize> = (0..n).filter(|v| !keep_sorted.contains(v)).collect();
    if front.is_empty() {
        return ideal.canonical();
    }
    let order = MonomialOrder::eliminating(front, keep_sorted.clone());
    let gb = buchberger(&ideal.gens, &order)?;
    let restricted = gb.restricted_to(&keep_sorted);
    // Re-reduce on the subring so the generators are its canonical basis.
    let sub = buchberger(&restricted, &MonomialOrder::grevlex(n))?;
    Ok(Ideal::new(n, sub.elements))
}

/// Generator of a univariate elimination ideal `I ∩ Q[x_var]`: the monic
/// generator, or zero when the elimination ideal is trivial.
pub fn univariate_generator(ideal: &Ideal, var: usize) -> Result<Polynomial> {
    let elim = eliminate(ideal, &[var])?;
    match elim.gens().len() {
        0 => Ok(Polynomial::zero(ideal.arity)),
        1 => Ok(elim.gens()[0].clone()),
        n => Err(Error::Invalid(format!(
            "univariate elimination ideal with {n} generators"
        ))),
    }
}
