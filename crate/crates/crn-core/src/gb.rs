//! Buchberger's algorithm, normal forms and reduced Groebner bases.
//!
//! The public layer works with monic rational polynomials; the Buchberger
//! loop itself runs on primitive integer polynomials (every S-polynomial
//! and reduction step is fraction-free with eager content stripping), which
//! keeps coefficient growth in check without changing the computed basis.

use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::Result;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashSet;

/// A reduced Groebner basis: monic, pairwise fully reduced, sorted
/// ascending by leading monomial. Reduced bases are unique per ideal and
/// order, so equality of bases is equality of ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial>,
    arity: usize,
}

impl GroebnerBasis {
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// The basis of the unit ideal is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].total_degree() == Some(0)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements supported entirely on the `keep` variables.
    pub fn restricted_to(&self, keep: &[usize]) -> Vec<Polynomial> {
        self.elements
            .iter()
            .filter(|g| g.supported_on(keep))
            .cloned()
            .collect()
    }
}

/// Integer polynomial with terms sorted descending under the active order.
/// Invariant: primitive content, positive leading coefficient.
#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }
}

fn to_ipoly(p: &Polynomial, order: &MonomialOrder) -> IPoly {
    let mut denom = BigInt::one();
    for (_, c) in p.terms() {
        denom = denom.lcm(c.denom());
    }
    let mut terms: Vec<(Monomial, BigInt)> = p
        .terms()
        .map(|(m, c)| (m.clone(), c.numer() * (&denom / c.denom())))
        .collect();
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    normalize(&mut terms);
    IPoly { terms }
}

fn to_polynomial(ip: &IPoly, arity: usize) -> Polynomial {
    Polynomial::from_terms(
        arity,
        ip.terms
            .iter()
            .map(|(m, c)| (m.clone(), BigRational::from(c.clone()))),
    )
}

/// Strips integer content and makes the leading coefficient positive.
fn normalize(terms: &mut Vec<(Monomial, BigInt)>) {
    let mut content = BigInt::zero();
    for (_, c) in terms.iter() {
        content = content.gcd(c);
        if content.is_one() {
            break;
        }
    }
    if content.is_zero() {
        return;
    }
    if terms[0].1.is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for (_, c) in terms.iter_mut() {
            *c = &*c / &content;
        }
    }
}

/// `a * f - b * (m * g)` as a sorted merge. Callers arrange for the leading
/// terms to cancel.
fn combine(
    f: &IPoly,
    a: &BigInt,
    g: &IPoly,
    m: &Monomial,
    b: &BigInt,
    order: &MonomialOrder,
) -> IPoly {
    let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(f.terms.len() + g.terms.len());
    let mut i = 0;
    let mut j = 0;
    while i < f.terms.len() && j < g.terms.len() {
        let fm = &f.terms[i].0;
        let gm = g.terms[j].0.mul(m);
        match order.cmp(fm, &gm) {
            Ordering::Greater => {
                out.push((fm.clone(), a * &f.terms[i].1));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -(b * &g.terms[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = a * &f.terms[i].1 - b * &g.terms[j].1;
                if !c.is_zero() {
                    out.push((gm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    while i < f.terms.len() {
        out.push((f.terms[i].0.clone(), a * &f.terms[i].1));
        i += 1;
    }
    while j < g.terms.len() {
        out.push((g.terms[j].0.mul(m), -(b * &g.terms[j].1)));
        j += 1;
    }
    IPoly { terms: out }
}

/// Fraction-free full normal form of `p` modulo `basis`.
fn normal_form_int(p: &IPoly, basis: &[IPoly], order: &MonomialOrder) -> IPoly {
    let mut h = p.clone();
    let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
    'outer: while !h.is_zero() {
        let hm = h.lm().clone();
        for g in basis {
            if g.is_zero() || !g.lm().divides(&hm) {
                continue;
            }
            let m = hm.checked_div(g.lm()).unwrap();
            let a = g.lc().clone();
            let b = h.lc().clone();
            h = combine(&h, &a, g, &m, &b, order);
            if !rem.is_empty() {
                for (_, c) in rem.iter_mut() {
                    *c = &*c * &a;
                }
            }
            strip_common(&mut h, &mut rem);
            continue 'outer;
        }
        let (m, c) = h.terms.remove(0);
        rem.push((m, c));
    }
    normalize(&mut rem);
    IPoly { terms: rem }
}

/// Divides the joint content out of the working polynomial and the
/// accumulated remainder, keeping them consistently scaled.
fn strip_common(h: &mut IPoly, rem: &mut [(Monomial, BigInt)]) {
    let mut content = BigInt::zero();
    for (_, c) in h.terms.iter().chain(rem.iter()) {
        content = content.gcd(c);
        if content.is_one() {
            return;
        }
    }
    if content.is_zero() || content.is_one() {
        return;
    }
    for (_, c) in h.terms.iter_mut() {
        *c = &*c / &content;
    }
    for (_, c) in rem.iter_mut() {
        *c = &*c / &content;
    }
}

fn s_poly(f: &IPoly, g: &IPoly, order: &MonomialOrder) -> IPoly {
    let l = f.lm().lcm(g.lm());
    let mf = l.checked_div(f.lm()).unwrap();
    let mg = l.checked_div(g.lm()).unwrap();
    // g.lc * (mf f) - f.lc * (mg g); shift f by mf first.
    let shifted = IPoly {
        terms: f.terms.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect(),
    };
    let mut s = combine(&shifted, g.lc(), g, &mg, f.lc(), order);
    normalize(&mut s.terms);
    s
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let arity = gens.first().map(|g| g.arity()).unwrap_or_else(|| order.variables().len());
    order.validate(arity)?;
    let mut basis: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_ipoly(g, order))
        .collect();

    let mut pairs: Vec<(Monomial, usize, usize)> = Vec::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((basis[i].lm().lcm(basis[j].lm()), i, j));
        }
    }

    while !pairs.is_empty() {
        // Normal selection: smallest lcm first, ties by index.
        let mut best = 0;
        for k in 1..pairs.len() {
            let ord = order
                .cmp(&pairs[k].0, &pairs[best].0)
                .then_with(|| (pairs[k].1, pairs[k].2).cmp(&(pairs[best].1, pairs[best].2)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        let (lcm, i, j) = pairs.remove(best);
        done.insert((i, j));

        // Product criterion.
        if basis[i].lm().coprime(basis[j].lm()) {
            continue;
        }
        // Chain criterion: some k with lm_k | lcm(i,j) and both side pairs
        // already treated.
        let mut skip = false;
        for k in 0..basis.len() {
            if k == i || k == j || basis[k].is_zero() || !basis[k].lm().divides(&lcm) {
                continue;
            }
            let p1 = (i.min(k), i.max(k));
            let p2 = (j.min(k), j.max(k));
            if done.contains(&p1) && done.contains(&p2) {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }

        let s = s_poly(&basis[i], &basis[j], order);
        let nf = normal_form_int(&s, &basis, order);
        if !nf.is_zero() {
            let t = basis.len();
            for i in 0..t {
                if !basis[i].is_zero() {
                    pairs.push((basis[i].lm().lcm(nf.lm()), i, t));
                }
            }
            basis.push(nf);
        }
    }

    // Minimal basis: no leading monomial divides another. Ascending scan is
    // enough because divisibility implies order.
    let mut idx: Vec<usize> = (0..basis.len()).filter(|&k| !basis[k].is_zero()).collect();
    idx.sort_by(|&a, &b| order.cmp(basis[a].lm(), basis[b].lm()));
    let mut kept: Vec<IPoly> = Vec::new();
    for k in idx {
        if !kept.iter().any(|g| g.lm().divides(basis[k].lm())) {
            kept.push(basis[k].clone());
        }
    }

    // Inter-reduce tails until stable.
    loop {
        let mut changed = false;
        for k in 0..kept.len() {
            let others: Vec<IPoly> = kept
                .iter()
                .enumerate()
                .filter_map(|(j, g)| (j != k).then(|| g.clone()))
                .collect();
            let nf = normal_form_int(&kept[k], &others, order);
            if nf.terms != kept[k].terms {
                kept[k] = nf;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut elements: Vec<Polynomial> = kept
        .iter()
        .map(|ip| to_polynomial(ip, arity).monic(order))
        .collect();
    elements.sort_by(|a, b| {
        order.cmp(
            a.leading_monomial(order).unwrap(),
            b.leading_monomial(order).unwrap(),
        )
    });
    Ok(GroebnerBasis { order: order.clone(), elements, arity })
}

/// The unique remainder of `f` on full division by the basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    let order = &gb.order;
    let mut h = f.clone();
    let mut rem = Polynomial::zero(f.arity());
    'outer: while !h.is_zero() {
        let hm = h.leading_monomial(order).unwrap().clone();
        let hc = h.coefficient(&hm);
        for g in &gb.elements {
            if let Some(glm) = g.leading_monomial(order) {
                if glm.divides(&hm) {
                    let m = hm.checked_div(glm).unwrap();
                    // Basis elements are monic.
                    h = h.sub(&g.mul_term(&m, &hc));
                    continue 'outer;
                }
            }
        }
        h.add_term(hm.clone(), -hc.clone());
        rem.add_term(hm, hc);
    }
    rem
}

/// Ideal membership via normal form.
pub fn ideal_member(f: &Polynomial, gb: &GroebnerBasis) -> bool {
    normal_form(f, gb).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn gb(gens: &[&str], ns: &[String], order: &MonomialOrder) -> GroebnerBasis {
        let polys: Vec<Polynomial> = gens
            .iter()
            .map(|s| parse_polynomial(s, ns).unwrap())
            .collect();
        buchberger(&polys, order).unwrap()
    }

    fn texts(basis: &GroebnerBasis, ns: &[String]) -> Vec<String> {
        basis.elements.iter().map(|g| g.to_text(ns, &basis.order)).collect()
    }

    #[test]
    fn circle_and_line_lex() {
        let ns = names(&["x", "y"]);
        let g = gb(&["x^2 + y^2 - 1", "x - y"], &ns, &MonomialOrder::lex(2));
        assert_eq!(texts(&g, &ns), vec!["y^2 - 1/2", "x - y"]);
    }

    #[test]
    fn textbook_lex_basis() {
        // Cox-Little-O'Shea style: <x^2 - y, x^3 - z> under lex x > y > z.
        let ns = names(&["x", "y", "z"]);
        let g = gb(&["x^2 - y", "x^3 - z"], &ns, &MonomialOrder::lex(3));
        assert_eq!(
            texts(&g, &ns),
            vec!["y^3 - z^2", "x*z - y^2", "x*y - z", "x^2 - y"]
        );
    }

    #[test]
    fn unit_ideal_collapses_to_one() {
        let ns = names(&["x"]);
        let g = gb(&["x - 1", "x - 2"], &ns, &MonomialOrder::lex(1));
        assert!(g.is_unit());
        assert_eq!(texts(&g, &ns), vec!["1"]);
    }

    #[test]
    fn zero_generators_give_empty_basis() {
        let g = buchberger(&[Polynomial::zero(2)], &MonomialOrder::grevlex(2)).unwrap();
        assert!(g.is_zero_ideal());
        let f = Polynomial::var(2, 0);
        assert_eq!(normal_form(&f, &g), f);
    }

    #[test]
    fn normal_form_is_canonical_for_membership() {
        let ns = names(&["x", "y"]);
        let g = gb(&["x^2 + y^2 - 1", "x - y"], &ns, &MonomialOrder::lex(2));
        let f = parse_polynomial("x^3 - x*y^2", &ns).unwrap();
        // f = x(x-y)(x+y) is in the ideal iff its normal form vanishes.
        let member = parse_polynomial("x^2 - y^2", &ns).unwrap();
        assert!(ideal_member(&member, &g));
        assert!(!ideal_member(&parse_polynomial("x + y", &ns).unwrap(), &g));
        let nf = normal_form(&f, &g);
        assert!(nf.total_degree().unwrap_or(0) < 2 || nf.supported_on(&[1]));
    }

    #[test]
    fn basis_is_independent_of_generator_order_and_scaling() {
        let ns = names(&["x", "y", "z"]);
        let order = MonomialOrder::grevlex(3);
        let a = gb(&["x*y - z", "y*z - x", "x*z - y"], &ns, &order);
        let b = gb(&["7*x*z - 7*y", "-2*y*z + 2*x", "x*y - z"], &ns, &order);
        assert_eq!(a, b);
    }

    #[test]
    fn grevlex_cyclic_pair() {
        let ns = names(&["x", "y"]);
        let order = MonomialOrder::grevlex(2);
        let g = gb(&["x + y - 1", "x*y - 1"], &ns, &order);
        // Substituting x = 1 - y gives y^2 - y + 1.
        assert_eq!(texts(&g, &ns), vec!["x + y - 1", "y^2 - y + 1"]);
    }

    #[test]
    fn reduced_basis_is_fully_tail_reduced() {
        let ns = names(&["x", "y"]);
        let order = MonomialOrder::lex(2);
        let g = gb(&["x^2 - y^2", "x^2 + y"], &ns, &order);
        for gi in &g.elements {
            for gj in &g.elements {
                if gi == gj {
                    continue;
                }
                let lm = gj.leading_monomial(&order).unwrap();
                for (m, _) in gi.terms() {
                    assert!(!lm.divides(m), "tail term divisible by another lm");
                }
            }
        }
    }
}
