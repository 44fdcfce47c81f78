//! Exact decision procedures for absolute concentration robustness (ACR).
//!
//! A network has ACR in species `i` when every positive steady state shares
//! the same value of `x_i`. The procedures here certify that property (or
//! its absence) through ideal arithmetic on the steady-state ideal:
//!
//! * sufficient conditions via elimination ideals of the ideal and of its
//!   saturation by the coordinate product,
//! * candidate values from per-species lexicographic bases, verified
//!   through colon-ideal cofactors,
//! * robustness over the complex torus (CACR),
//! * an opt-in decomposition stage that splits obvious factors, restricts
//!   components to the positive orthant and pins values via Jacobian-minor
//!   augmentation. Its verdicts rest on a smoothness hypothesis that is not
//!   certified, and are labeled accordingly.

use crate::gb::{buchberger, ideal_member, normal_form, GroebnerBasis};
use crate::ideal::{colon, saturate_by_factors, univariate_generator, Ideal};
use crate::network::Network;
use crate::poly::{rational_to_text, Monomial, MonomialOrder, Polynomial};
use crate::realroots::{count_positive_roots, isolate_positive_roots, RootLocation};
use crate::unipoly::UniPoly;
use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcrStatus {
    Acr,
    ZeroDivisorAcr,
    Candidate,
    Vacuous,
    NoAcr,
    Inconclusive,
}

impl AcrStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            AcrStatus::Acr => "ACR",
            AcrStatus::ZeroDivisorAcr => "ZERO_DIVISOR_ACR",
            AcrStatus::Candidate => "CANDIDATE",
            AcrStatus::Vacuous => "VACUOUS",
            AcrStatus::NoAcr => "NO_ACR",
            AcrStatus::Inconclusive => "INCONCLUSIVE",
        }
    }

    /// CANDIDATE and INCONCLUSIVE leave the question open.
    pub fn is_conclusive(&self) -> bool {
        !matches!(self, AcrStatus::Candidate | AcrStatus::Inconclusive)
    }
}

#[derive(Clone, Debug)]
pub struct AcrVerdict {
    pub species: usize,
    pub status: AcrStatus,
    pub value: Option<RootLocation>,
    pub candidates: Vec<RootLocation>,
    pub method: String,
    pub certificate: String,
    pub elapsed_ms: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacrStatus {
    Cacr,
    VacuousCacr,
    NoCacr,
}

impl CacrStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CacrStatus::Cacr => "CACR",
            CacrStatus::VacuousCacr => "VACUOUS_CACR",
            CacrStatus::NoCacr => "NO_CACR",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CacrVerdict {
    pub species: usize,
    pub status: CacrStatus,
    pub value: Option<BigRational>,
    /// Squarefree generator of the saturated elimination ideal, when any.
    pub generator: Option<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateValue {
    pub species: usize,
    pub value: RootLocation,
}

#[derive(Clone, Debug)]
pub struct CandidateReport {
    pub candidates: Vec<CandidateValue>,
    /// Set when some basis visibly excludes positive steady states (a
    /// univariate element without positive roots, or a generator whose
    /// coefficients all share one sign).
    pub vacuous_hint: bool,
}

#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub verified: bool,
    pub zero_divisor: bool,
    pub certificate: String,
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    /// Enables the decomposition stage.
    pub heuristic: bool,
    /// Maximum width of isolating intervals for irrational values.
    pub interval_width: BigRational,
    /// Component cap for the decomposition stage.
    pub max_components: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            heuristic: false,
            interval_width: BigRational::new(BigInt::one(), BigInt::from(1u32 << 20)),
            max_components: 64,
        }
    }
}

/// The product of all coordinates.
pub fn coordinate_product(arity: usize) -> Polynomial {
    Polynomial::from_terms(
        arity,
        [(
            Monomial::from_exponents(&vec![1u16; arity]),
            BigRational::one(),
        )],
    )
}

/// Saturation of the ideal by the coordinate product, factor by factor.
pub fn saturate_by_variables(ideal: &Ideal) -> Result<Ideal> {
    let vars: Vec<Polynomial> = (0..ideal.arity())
        .map(|v| Polynomial::var(ideal.arity(), v))
        .collect();
    saturate_by_factors(ideal, &vars)
}

/// Root of a monic or general linear univariate polynomial in `species`.
fn linear_root(g: &Polynomial, species: usize) -> Option<BigRational> {
    if g.is_zero() || !g.supported_on(&[species]) {
        return None;
    }
    let u = UniPoly::from_polynomial(g, species).ok()?;
    if u.degree() != Some(1) {
        return None;
    }
    let c1 = u.coeffs()[1].clone();
    Some(-(u.coeffs()[0].clone() / c1))
}

/// Sufficient condition 1: the elimination ideal of `I` in the species
/// variable is generated by `x - alpha` with `alpha > 0`.
pub fn check_condition1(ideal: &Ideal, species: usize) -> Result<Option<BigRational>> {
    let g = univariate_generator(ideal, species)?;
    Ok(linear_root(&g, species).filter(|a| a.is_positive()))
}

/// Sufficient condition 2: condition 1 applied to the saturation of `I` by
/// the coordinate product.
pub fn check_condition2(ideal: &Ideal, species: usize) -> Result<Option<BigRational>> {
    let sat = saturate_by_variables(ideal)?;
    check_condition1(&sat, species)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition3 {
    /// Exactly one positive real root: its location.
    UniqueRoot(RootLocation),
    /// The elimination generator has no positive root: no positive steady
    /// states exist at all.
    NoPositiveRoots,
    /// More than one positive root.
    MultipleRoots(usize),
    /// Zero elimination ideal: no information.
    NoInformation,
}

/// Sufficient condition 3: the elimination ideal of `I` in the species
/// variable has a single positive real root.
pub fn check_condition3(
    ideal: &Ideal,
    species: usize,
    width: &BigRational,
) -> Result<Condition3> {
    let g = univariate_generator(ideal, species)?;
    univariate_outcome(&g, species, width)
}

fn univariate_outcome(
    g: &Polynomial,
    species: usize,
    width: &BigRational,
) -> Result<Condition3> {
    if g.is_zero() {
        return Ok(Condition3::NoInformation);
    }
    if g.total_degree() == Some(0) {
        // Unit elimination ideal: the system has no solutions at all.
        return Ok(Condition3::NoPositiveRoots);
    }
    let u = UniPoly::from_polynomial(g, species)?;
    match count_positive_roots(&u) {
        0 => Ok(Condition3::NoPositiveRoots),
        1 => {
            let roots = isolate_positive_roots(&u, width);
            debug_assert_eq!(roots.len(), 1);
            Ok(Condition3::UniqueRoot(roots.into_iter().next().unwrap()))
        }
        k => Ok(Condition3::MultipleRoots(k)),
    }
}

/// Per-species candidate values: positive roots of the univariate element
/// of the lex basis with the species last, or positive rational roots of
/// the leading coefficients when no univariate element exists.
fn candidates_for_species(
    ideal: &Ideal,
    species: usize,
    width: &BigRational,
) -> Result<(Vec<RootLocation>, bool)> {
    let n = ideal.arity();
    let order = MonomialOrder::lex_with_last(n, species);
    let gb = buchberger(ideal.gens(), &order)?;
    let mut hint = gb.elements.iter().any(|g| g.is_sign_definite());
    if let Some(u) = gb
        .elements
        .iter()
        .find(|g| !g.is_zero() && g.supported_on(&[species]))
    {
        if u.total_degree() == Some(0) {
            return Ok((Vec::new(), true));
        }
        let roots = isolate_positive_roots(&UniPoly::from_polynomial(u, species)?, width);
        if roots.is_empty() {
            hint = true;
        }
        return Ok((roots, hint));
    }
    let mut values: Vec<RootLocation> = Vec::new();
    for g in &gb.elements {
        let lc = leading_coefficient_in(g, species, &order);
        if lc.degree().unwrap_or(0) == 0 {
            continue;
        }
        for (root, _) in lc.rational_roots() {
            if root.is_positive() {
                let loc = RootLocation::exact(root);
                if !values.contains(&loc) {
                    values.push(loc);
                }
            }
        }
    }
    Ok((values, hint))
}

/// The leading coefficient of `g` viewed in `Q[x_species][other vars]`: the
/// univariate polynomial attached to the largest monomial in the other
/// variables.
fn leading_coefficient_in(
    g: &Polynomial,
    species: usize,
    order: &MonomialOrder,
) -> UniPoly {
    let lm = match g.leading_monomial(order) {
        Some(m) => m,
        None => return UniPoly::zero(),
    };
    let mut hat = lm.exponents().to_vec();
    hat[species] = 0;
    let mut coeffs: Vec<BigRational> = Vec::new();
    for (m, c) in g.terms() {
        let mut e = m.exponents().to_vec();
        let d = e[species] as usize;
        e[species] = 0;
        if e == hat {
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigRational::zero());
            }
            coeffs[d] = c.clone();
        }
    }
    UniPoly::from_coeffs(coeffs)
}

/// Candidate generation across all species, de-duplicated preserving first
/// occurrence.
pub fn acr_candidates(ideal: &Ideal, width: &BigRational) -> Result<CandidateReport> {
    let mut candidates = Vec::new();
    let mut vacuous_hint = false;
    for i in 0..ideal.arity() {
        let (values, hint) = candidates_for_species(ideal, i, width)?;
        vacuous_hint |= hint;
        for value in values {
            let cv = CandidateValue { species: i, value };
            if !candidates.contains(&cv) {
                candidates.push(cv);
            }
        }
    }
    Ok(CandidateReport { candidates, vacuous_hint })
}

/// Whether `f` maps to a zero divisor of the quotient ring: the colon ideal
/// `(I : f)` strictly contains `I`.
pub fn is_zero_divisor(ideal: &Ideal, f: &Polynomial) -> Result<bool> {
    let gb = ideal.groebner(&MonomialOrder::grevlex(ideal.arity()))?;
    let quot = colon(ideal, f)?;
    Ok(quot.gens().iter().any(|g| !ideal_member(g, &gb)))
}

/// Factors of `g` that are certified nonvanishing on the open positive
/// orthant: non-monomial factors whose coefficients all share one sign.
fn sign_definite_cofactors(g: &Polynomial, exclude: &Polynomial) -> Vec<Polynomial> {
    let order = MonomialOrder::grevlex(g.arity());
    let excl = exclude.primitive_part(&order);
    split_factors(g)
        .1
        .into_iter()
        .filter(|f| f.is_sign_definite() && f.primitive_part(&order) != excl)
        .collect()
}

/// Tries to certify a candidate `(species, alpha)` as zero-divisor ACR.
/// Sound: a verified answer proves every positive steady state has
/// `x_species = alpha`; an unverified one stays a candidate.
pub fn verify_candidate(
    ideal: &Ideal,
    species: usize,
    alpha: &BigRational,
    names: &[String],
) -> Result<VerifyOutcome> {
    let n = ideal.arity();
    let name = &names[species];
    let gb = ideal.groebner(&MonomialOrder::grevlex(n))?;
    let p = Polynomial::var(n, species)
        .sub(&Polynomial::constant(n, alpha.clone()));
    if ideal_member(&p, &gb) {
        return Ok(VerifyOutcome {
            verified: true,
            zero_divisor: true,
            certificate: format!(
                "{name} - {} lies in the steady-state ideal",
                rational_to_text(alpha)
            ),
        });
    }
    let quot = colon(ideal, &p)?;
    let zero_divisor = quot.gens().iter().any(|g| !ideal_member(g, &gb));
    if !zero_divisor {
        return Ok(VerifyOutcome {
            verified: false,
            zero_divisor: false,
            certificate: format!(
                "{name} - {} is a nonzerodivisor modulo the steady-state ideal",
                rational_to_text(alpha)
            ),
        });
    }
    let mut cofactors: Vec<Polynomial> = Vec::new();
    for g in quot.gens() {
        for f in sign_definite_cofactors(g, &p) {
            if !cofactors.contains(&f) {
                cofactors.push(f);
            }
        }
    }
    let mut factors: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(n, v)).collect();
    factors.extend(cofactors.iter().cloned());
    let sat = saturate_by_factors(ideal, &factors)?;
    let sat_gb = sat.groebner(&MonomialOrder::grevlex(n))?;
    if ideal_member(&p, &sat_gb) {
        let list = cofactors
            .iter()
            .map(|f| f.to_text(names, &MonomialOrder::grevlex(n)))
            .collect::<Vec<_>>()
            .join(", ");
        let with = if list.is_empty() {
            "the coordinate product".to_string()
        } else {
            format!("the coordinate product and one-signed cofactors [{list}]")
        };
        return Ok(VerifyOutcome {
            verified: true,
            zero_divisor: true,
            certificate: format!(
                "{name} - {} lies in the saturation by {with}",
                rational_to_text(alpha)
            ),
        });
    }
    Ok(VerifyOutcome {
        verified: false,
        zero_divisor: true,
        certificate: format!(
            "{name} - {} is a zero divisor, but no one-signed cofactor certificate was found",
            rational_to_text(alpha)
        ),
    })
}

/// Robustness over the complex torus for one species, from the saturated
/// ideal's univariate elimination generator.
pub fn cacr(ideal: &Ideal, species: usize) -> Result<CacrVerdict> {
    let sat = saturate_by_variables(ideal)?;
    cacr_from_saturation(&sat, species)
}

fn cacr_from_saturation(sat: &Ideal, species: usize) -> Result<CacrVerdict> {
    let g = univariate_generator(sat, species)?;
    if g.is_zero() {
        return Ok(CacrVerdict {
            species,
            status: CacrStatus::NoCacr,
            value: None,
            generator: None,
        });
    }
    if g.total_degree() == Some(0) {
        return Ok(CacrVerdict {
            species,
            status: CacrStatus::VacuousCacr,
            value: None,
            generator: Some(g),
        });
    }
    let sf = UniPoly::from_polynomial(&g, species)?.squarefree_part();
    let gen = sf.to_polynomial(sat.arity(), species);
    if sf.degree() == Some(1) {
        let value = linear_root(&gen, species).unwrap();
        Ok(CacrVerdict {
            species,
            status: CacrStatus::Cacr,
            value: Some(value),
            generator: Some(gen),
        })
    } else {
        Ok(CacrVerdict {
            species,
            status: CacrStatus::NoCacr,
            value: None,
            generator: Some(gen),
        })
    }
}

/// CACR verdicts for every species, sharing one saturation.
pub fn cacr_all(net: &Network) -> Result<Vec<CacrVerdict>> {
    let ideal = net.steady_state_ideal();
    let sat = saturate_by_variables(&ideal)?;
    (0..net.num_species())
        .map(|i| cacr_from_saturation(&sat, i))
        .collect()
}

/// The positive-restriction ideal in `2n` variables: the generators of `I`
/// plus `x_i z_i^2 - 1` for every coordinate. Real points of its variety
/// are exactly the steady states with every coordinate positive, each
/// covered `2^n`-to-one by sign choices of `z`.
pub fn positive_restriction(ideal: &Ideal) -> Ideal {
    let n = ideal.arity();
    let map: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| g.map_variables(2 * n, &map))
        .collect();
    for i in 0..n {
        let mut exps = vec![0u16; 2 * n];
        exps[i] = 1;
        exps[n + i] = 2;
        let mut g = Polynomial::from_terms(
            2 * n,
            [(Monomial::from_exponents(&exps), BigRational::one())],
        );
        g = g.sub(&Polynomial::one(2 * n));
        gens.push(g);
    }
    Ideal::new(2 * n, gens)
}

/// Variable names for the positive restriction: the originals followed by
/// `z_<name>`.
pub fn restriction_names(names: &[String]) -> Vec<String> {
    let mut out = names.to_vec();
    out.extend(names.iter().map(|s| format!("z_{s}")));
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let arity = m[0][0].arity();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Polynomial::zero(arity);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(c, p)| (c != j).then(|| p.clone()))
                    .collect()
            })
            .collect();
        let cofactor = entry.mul(&determinant(&minor));
        det = if j % 2 == 0 { det.add(&cofactor) } else { det.sub(&cofactor) };
    }
    det
}

/// Augments an ideal with all `(k - dim) x (k - dim)` minors of the
/// Jacobian of its generators (`k` = number of variables). Minors are
/// enumerated over row and column subsets in lexicographic order.
pub fn jacobian_minor_augment(ideal: &Ideal, dim: usize) -> Result<Ideal> {
    let k = ideal.arity();
    let m = ideal.gens().len();
    if dim >= k {
        return Err(Error::DimensionOutOfRange(format!(
            "dimension {dim} with {k} variables"
        )));
    }
    let s = k - dim;
    if s > m {
        return Err(Error::DimensionOutOfRange(format!(
            "minor size {s} exceeds {m} generators"
        )));
    }
    let jac: Vec<Vec<Polynomial>> = ideal
        .gens()
        .iter()
        .map(|g| (0..k).map(|v| g.derivative(v)).collect())
        .collect();
    let mut gens = ideal.gens().to_vec();
    for rows in combinations(m, s) {
        for cols in combinations(k, s) {
            let sub: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| jac[r][c].clone()).collect())
                .collect();
            let d = determinant(&sub);
            if !d.is_zero() && !gens.contains(&d) {
                gens.push(d);
            }
        }
    }
    Ok(Ideal::new(k, gens))
}

/// Splits the monomial content off `g` and extracts syntactic factors:
/// univariate polynomials split at rational roots, plus univariate contents
/// pulled out of multivariate coefficients. Returns the variables of the
/// monomial part and the non-monomial factors.
pub fn split_factors(g: &Polynomial) -> (Vec<usize>, Vec<Polynomial>) {
    let arity = g.arity();
    let order = MonomialOrder::grevlex(arity);
    if g.is_zero() {
        return (Vec::new(), Vec::new());
    }
    // Monomial content.
    let mut content = vec![u16::MAX; arity];
    for (m, _) in g.terms() {
        for (v, &e) in m.exponents().iter().enumerate() {
            content[v] = content[v].min(e);
        }
    }
    let mono_vars: Vec<usize> = (0..arity).filter(|&v| content[v] > 0).collect();
    let strip = Monomial::from_exponents(&content);
    let mut h = Polynomial::from_terms(
        arity,
        g.terms()
            .map(|(m, c)| (m.checked_div(&strip).unwrap(), c.clone())),
    );
    let mut factors: Vec<Polynomial> = Vec::new();
    'outer: loop {
        let support = h.support();
        if support.is_empty() {
            break;
        }
        if support.len() == 1 {
            factors.extend(split_univariate(&h, support[0]));
            return (mono_vars, factors);
        }
        // Pull a univariate content out of the coefficients with respect to
        // some variable, when they all live in one other variable.
        for &v in &support {
            let coeffs = coefficients_in(&h, v);
            let mut uvar: Option<usize> = None;
            let mut ok = true;
            for c in &coeffs {
                match c.support().as_slice() {
                    [] => {
                        if !c.is_zero() {
                            ok = false; // constant coefficient: content is trivial
                            break;
                        }
                    }
                    [u] => match uvar {
                        None => uvar = Some(*u),
                        Some(w) if w == *u => {}
                        _ => {
                            ok = false;
                            break;
                        }
                    },
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            let (Some(u), true) = (uvar, ok) else { continue };
            let mut gcd = UniPoly::zero();
            for c in &coeffs {
                if c.is_zero() {
                    continue;
                }
                let cu = UniPoly::from_polynomial(c, u).unwrap();
                gcd = if gcd.is_zero() { cu } else { gcd.gcd(&cu) };
            }
            if gcd.degree().unwrap_or(0) >= 1 {
                let gp = gcd.to_polynomial(arity, u);
                if let Some(q) = h.checked_div(&gp) {
                    factors.extend(split_univariate(&gp, u));
                    h = q;
                    continue 'outer;
                }
            }
        }
        factors.push(h.primitive_part(&order));
        return (mono_vars, factors);
    }
    (mono_vars, factors)
}

/// Rational-root linear factors plus the remaining cofactor.
fn split_univariate(g: &Polynomial, var: usize) -> Vec<Polynomial> {
    let arity = g.arity();
    let order = MonomialOrder::grevlex(arity);
    let mut u = UniPoly::from_polynomial(g, var).unwrap();
    let mut out = Vec::new();
    for (r, mult) in u.rational_roots() {
        let lin = Polynomial::var(arity, var)
            .sub(&Polynomial::constant(arity, r.clone()));
        out.push(lin.primitive_part(&order));
        for _ in 0..mult {
            u = u.div_linear(&r).unwrap();
        }
    }
    if u.degree().unwrap_or(0) >= 1 {
        out.push(u.to_polynomial(arity, var).primitive_part(&order));
    }
    out
}

/// Coefficients of `g` viewed as a polynomial in `x_var`, index = power.
fn coefficients_in(g: &Polynomial, var: usize) -> Vec<Polynomial> {
    let arity = g.arity();
    let deg = g.degree_in(var).unwrap_or(0) as usize;
    let mut out = vec![Polynomial::zero(arity); deg + 1];
    for (m, c) in g.terms() {
        let d = m.degree(var) as usize;
        let mut e = m.exponents().to_vec();
        e[var] = 0;
        out[d].add_term(Monomial::from_exponents(&e), c.clone());
    }
    out
}

/// Single-species networks: the sign pattern of the unique steady-state
/// polynomial decides ACR outright.
pub fn one_species_acr(net: &Network, width: &BigRational) -> Result<AcrVerdict> {
    if net.num_species() != 1 {
        return Err(Error::Invalid(format!(
            "one_species_acr needs exactly one species, network has {}",
            net.num_species()
        )));
    }
    let t0 = Instant::now();
    let f = &net.steady_state_polynomials()[0];
    let name = &net.species[0];
    let mut verdict = AcrVerdict {
        species: 0,
        status: AcrStatus::Inconclusive,
        value: None,
        candidates: Vec::new(),
        method: "single_species".into(),
        certificate: String::new(),
        elapsed_ms: 0,
    };
    if f.is_zero() {
        verdict.status = AcrStatus::NoAcr;
        verdict.certificate = "the steady-state polynomial vanishes identically; every positive value is a steady state".into();
    } else {
        match univariate_outcome(f, 0, width)? {
            Condition3::UniqueRoot(loc) => {
                verdict.status = AcrStatus::Acr;
                verdict.certificate = format!(
                    "the steady-state polynomial has a single positive root, so every positive steady state has the same {name}"
                );
                verdict.value = Some(loc);
            }
            Condition3::NoPositiveRoots => {
                verdict.status = AcrStatus::Vacuous;
                verdict.certificate =
                    "the steady-state polynomial has no positive root".into();
            }
            Condition3::MultipleRoots(k) => {
                verdict.status = AcrStatus::NoAcr;
                verdict.certificate = format!(
                    "the steady-state polynomial has {k} distinct positive roots"
                );
            }
            Condition3::NoInformation => unreachable!("nonzero univariate polynomial"),
        }
    }
    verdict.elapsed_ms = t0.elapsed().as_millis();
    Ok(verdict)
}

enum HeuristicOutcome {
    Pins(Vec<Option<BigRational>>, usize),
    Vacuous,
    Unknown,
}

/// Decomposition stage: split visible factors of the reduced basis, form
/// all factor-choice components, drop the ones whose positive restriction
/// is the unit ideal, and pin coordinate values on the survivors (directly,
/// or on the Jacobian-minor augmentation).
fn heuristic_pins(ideal: &Ideal, opts: &AnalyzeOptions) -> Result<HeuristicOutcome> {
    let n = ideal.arity();
    let gb = ideal.groebner(&MonomialOrder::grevlex(n))?;
    if gb.is_zero_ideal() {
        return Ok(HeuristicOutcome::Unknown);
    }
    // Factor choices per generator.
    let mut choice_sets: Vec<Vec<Polynomial>> = Vec::new();
    for g in &gb.elements {
        let (mono_vars, factors) = split_factors(g);
        let mut choices: Vec<Polynomial> =
            mono_vars.iter().map(|&v| Polynomial::var(n, v)).collect();
        choices.extend(factors);
        if choices.is_empty() {
            return Ok(HeuristicOutcome::Unknown); // constant generator
        }
        choice_sets.push(choices);
    }
    let mut selections: Vec<Vec<Polynomial>> = vec![Vec::new()];
    for set in &choice_sets {
        let mut next = Vec::new();
        for sel in &selections {
            for choice in set {
                let mut s = sel.clone();
                if !s.contains(choice) {
                    s.push(choice.clone());
                }
                if !next.contains(&s) {
                    next.push(s);
                }
            }
        }
        if next.len() > opts.max_components {
            return Ok(HeuristicOutcome::Unknown);
        }
        selections = next;
    }

    // Build distinct non-unit components.
    let mut components: Vec<Ideal> = Vec::new();
    for sel in selections {
        let mut gens = ideal.gens().to_vec();
        gens.extend(sel);
        let comp = Ideal::new(n, gens).canonical()?;
        if comp.gens().len() == 1 && comp.gens()[0].total_degree() == Some(0) {
            continue;
        }
        if !components.contains(&comp) {
            components.push(comp);
        }
    }

    let mut survivors: Vec<Vec<Option<BigRational>>> = Vec::new();
    'comp: for comp in &components {
        let restricted = positive_restriction(comp);
        let gbp = restricted.groebner(&MonomialOrder::grevlex(2 * n))?;
        if gbp.is_unit() {
            continue; // no steady states with all coordinates nonzero
        }
        let mut pins = scan_pins(&gbp, n);
        if pins.iter().any(|p| p.is_none()) {
            let dim = n.saturating_sub(comp.gens().len());
            if 2 * n > dim && (2 * n - dim) <= restricted.gens().len() {
                let aug = jacobian_minor_augment(&restricted, dim)?;
                let gba = aug.groebner(&MonomialOrder::grevlex(2 * n))?;
                if !gba.is_unit() {
                    let extra = scan_pins(&gba, n);
                    for (p, e) in pins.iter_mut().zip(extra) {
                        if p.is_none() {
                            *p = e;
                        }
                    }
                }
            }
        }
        // A nonpositive pinned value empties the component of positive
        // points (under the same smoothness hypothesis as the pin itself).
        for p in pins.iter().flatten() {
            if !p.is_positive() {
                continue 'comp;
            }
        }
        survivors.push(pins);
    }

    if survivors.is_empty() {
        return Ok(HeuristicOutcome::Vacuous);
    }
    let mut merged: Vec<Option<BigRational>> = vec![None; n];
    for (i, slot) in merged.iter_mut().enumerate() {
        let mut agreed: Option<BigRational> = None;
        let mut ok = true;
        for pins in &survivors {
            match (&pins[i], &agreed) {
                (Some(v), None) => agreed = Some(v.clone()),
                (Some(v), Some(a)) if v == a => {}
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            *slot = agreed;
        }
    }
    // Sanity: a fully pinned point must actually be a steady state.
    if merged.iter().all(|p| p.is_some()) {
        let point: Vec<BigRational> = merged.iter().map(|p| p.clone().unwrap()).collect();
        if ideal.gens().iter().any(|g| !g.eval(&point).is_zero()) {
            return Ok(HeuristicOutcome::Unknown);
        }
    }
    Ok(HeuristicOutcome::Pins(merged, survivors.len()))
}

/// Values pinned by univariate basis elements of the form `(x_i - a)^k`,
/// for the first `n` variables.
fn scan_pins(gb: &GroebnerBasis, n: usize) -> Vec<Option<BigRational>> {
    let mut pins: Vec<Option<BigRational>> = vec![None; n];
    for g in &gb.elements {
        for i in 0..n {
            if pins[i].is_some() || !g.supported_on(&[i]) || g.is_zero() {
                continue;
            }
            let Ok(u) = UniPoly::from_polynomial(g, i) else { continue };
            let Some(d) = u.degree() else { continue };
            if d == 0 {
                continue;
            }
            let roots = u.rational_roots();
            if roots.len() == 1 && roots[0].1 == d {
                pins[i] = Some(roots[0].0.clone());
            }
        }
    }
    pins
}

/// Full per-species analysis pipeline. Every returned verdict is sound;
/// verdicts produced by the decomposition stage carry a heuristic label.
pub fn analyze(net: &Network, opts: &AnalyzeOptions) -> Result<Vec<AcrVerdict>> {
    let n = net.num_species();
    let names = &net.species;
    let ideal = net.steady_state_ideal();
    let order = MonomialOrder::grevlex(n);
    let gb = ideal.groebner(&order)?;

    let sat = saturate_by_variables(&ideal)?;
    let sat_gb = sat.groebner(&order)?;

    // Vacuity, rule 1: a basis element of one sign cannot vanish on the
    // open positive orthant.
    let mut vacuous_reason: Option<String> = None;
    for (label, basis) in [("steady-state ideal", &gb), ("saturation", &sat_gb)] {
        if let Some(w) = basis.elements.iter().find(|g| g.is_sign_definite()) {
            vacuous_reason = Some(format!(
                "generator {} of the {label} has all coefficients of one sign, so no positive steady state exists",
                w.to_text(names, &order)
            ));
            break;
        }
    }

    // Per-species elimination generators of the ideal and its saturation.
    let mut elim: Vec<Polynomial> = Vec::with_capacity(n);
    let mut elim_sat: Vec<Polynomial> = Vec::with_capacity(n);
    for i in 0..n {
        elim.push(univariate_generator(&ideal, i)?);
        elim_sat.push(univariate_generator(&sat, i)?);
    }

    // Vacuity, rule 2: an elimination generator without positive roots
    // excludes positive steady states system-wide.
    if vacuous_reason.is_none() {
        'scan: for (label, gens) in [("steady-state ideal", &elim), ("saturation", &elim_sat)]
        {
            for (i, g) in gens.iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                let positive = if g.total_degree() == Some(0) {
                    0
                } else {
                    count_positive_roots(&UniPoly::from_polynomial(g, i)?)
                };
                if positive == 0 {
                    vacuous_reason = Some(format!(
                        "the {label} eliminates to {} in {}, which has no positive root",
                        g.to_text(names, &order),
                        names[i]
                    ));
                    break 'scan;
                }
            }
        }
    }

    if let Some(reason) = vacuous_reason {
        return Ok((0..n)
            .map(|i| AcrVerdict {
                species: i,
                status: AcrStatus::Vacuous,
                value: None,
                candidates: Vec::new(),
                method: "vacuity".into(),
                certificate: reason.clone(),
                elapsed_ms: 0,
            })
            .collect());
    }

    let mut heuristic_cache: Option<HeuristicOutcome> = None;
    let mut verdicts = Vec::with_capacity(n);
    for i in 0..n {
        let t0 = Instant::now();
        let mut verdict = analyze_species(
            net,
            &ideal,
            &gb,
            &sat,
            &sat_gb,
            &elim[i],
            &elim_sat[i],
            i,
            opts,
            &mut heuristic_cache,
        )?;
        verdict.elapsed_ms = t0.elapsed().as_millis();
        verdicts.push(verdict);
    }
    Ok(verdicts)
}

#[allow(clippy::too_many_arguments)]
fn analyze_species(
    net: &Network,
    ideal: &Ideal,
    gb: &GroebnerBasis,
    sat: &Ideal,
    sat_gb: &GroebnerBasis,
    elim: &Polynomial,
    elim_sat: &Polynomial,
    species: usize,
    opts: &AnalyzeOptions,
    heuristic_cache: &mut Option<HeuristicOutcome>,
) -> Result<AcrVerdict> {
    let n = net.num_species();
    let names = &net.species;
    let name = &names[species];
    let mut verdict = AcrVerdict {
        species,
        status: AcrStatus::Inconclusive,
        value: None,
        candidates: Vec::new(),
        method: String::new(),
        certificate: String::new(),
        elapsed_ms: 0,
    };

    // Condition 1: elimination generator of I is x - alpha, alpha > 0.
    if let Some(alpha) = linear_root(elim, species).filter(|a| a.is_positive()) {
        let (status, certificate) =
            upgrade_to_zero_divisor(ideal, gb, sat_gb, species, &alpha, names);
        verdict.status = status;
        verdict.method = "condition1".into();
        verdict.certificate = certificate;
        verdict.value = Some(RootLocation::exact(alpha));
        return Ok(verdict);
    }

    // Condition 2: same test on the saturation.
    if let Some(alpha) = linear_root(elim_sat, species).filter(|a| a.is_positive()) {
        let (status, certificate) =
            upgrade_to_zero_divisor(ideal, gb, sat_gb, species, &alpha, names);
        verdict.status = status;
        verdict.method = "condition2".into();
        verdict.certificate = certificate;
        verdict.value = Some(RootLocation::exact(alpha));
        return Ok(verdict);
    }

    // Condition 3: unique positive root of the elimination generator.
    match univariate_outcome(elim, species, &opts.interval_width)? {
        Condition3::UniqueRoot(loc) => {
            if loc.is_exact() {
                let alpha = loc.lo.clone();
                let (status, certificate) =
                    upgrade_to_zero_divisor(ideal, gb, sat_gb, species, &alpha, names);
                verdict.status = status;
                verdict.certificate = certificate;
            } else {
                verdict.status = AcrStatus::Acr;
                verdict.certificate = format!(
                    "the elimination ideal in {name} has a single positive root, isolated in ({}, {})",
                    rational_to_text(&loc.lo),
                    rational_to_text(&loc.hi)
                );
            }
            verdict.method = "condition3".into();
            verdict.value = Some(loc);
            return Ok(verdict);
        }
        Condition3::MultipleRoots(k) if n == 1 => {
            verdict.status = AcrStatus::NoAcr;
            verdict.method = "condition3".into();
            verdict.certificate = format!(
                "the steady-state polynomial has {k} distinct positive roots"
            );
            return Ok(verdict);
        }
        _ => {}
    }

    // Candidate generation and verification.
    let (cands, _) = candidates_for_species(ideal, species, &opts.interval_width)?;
    for value in &cands {
        if !value.is_exact() {
            continue;
        }
        let outcome = verify_candidate(ideal, species, &value.lo, names)?;
        if outcome.verified {
            verdict.status = AcrStatus::ZeroDivisorAcr;
            verdict.method = "candidates".into();
            verdict.certificate = outcome.certificate;
            verdict.value = Some(value.clone());
            verdict.candidates = cands.clone();
            return Ok(verdict);
        }
    }
    verdict.candidates = cands.clone();

    // Complex-torus robustness, mapped back to the positive orthant.
    let torus = cacr_from_saturation_cached(sat, elim_sat, species)?;
    if torus.status == CacrStatus::Cacr {
        let alpha = torus.value.clone().unwrap();
        if alpha.is_positive() {
            let member = ideal_member(
                &Polynomial::var(n, species).sub(&Polynomial::constant(n, alpha.clone())),
                sat_gb,
            );
            let (status, certificate) = if member {
                upgrade_to_zero_divisor(ideal, gb, sat_gb, species, &alpha, names)
            } else {
                (
                    AcrStatus::Acr,
                    format!(
                        "every steady state with nonzero coordinates has {name} = {}",
                        rational_to_text(&alpha)
                    ),
                )
            };
            verdict.status = status;
            verdict.method = "cacr".into();
            verdict.certificate = certificate;
            verdict.value = Some(RootLocation::exact(alpha));
            return Ok(verdict);
        }
        verdict.status = AcrStatus::Vacuous;
        verdict.method = "cacr".into();
        verdict.certificate = format!(
            "steady states with nonzero coordinates are pinned at {name} = {}, which is not positive",
            rational_to_text(&alpha)
        );
        return Ok(verdict);
    }

    // Optional decomposition stage.
    if opts.heuristic {
        if heuristic_cache.is_none() {
            *heuristic_cache = Some(heuristic_pins(ideal, opts)?);
        }
        match heuristic_cache.as_ref().unwrap() {
            HeuristicOutcome::Pins(pins, n_components) => {
                if let Some(alpha) = &pins[species] {
                    if alpha.is_positive() {
                        verdict.status = AcrStatus::Acr;
                        verdict.method = "decomposition".into();
                        verdict.certificate = format!(
                            "all {n_components} surviving component(s) of a factor decomposition pin {name} = {} on their positive restrictions (Jacobian-minor augmentation; assumes positive steady states on positive-dimensional components are singular points -- heuristic, not a proof)",
                            rational_to_text(alpha)
                        );
                        verdict.value = Some(RootLocation::exact(alpha.clone()));
                        return Ok(verdict);
                    }
                }
            }
            HeuristicOutcome::Vacuous => {
                verdict.status = AcrStatus::Vacuous;
                verdict.method = "decomposition".into();
                verdict.certificate = "every component of a factor decomposition has a unit positive restriction (heuristic stage)".into();
                return Ok(verdict);
            }
            HeuristicOutcome::Unknown => {}
        }
    }

    if !verdict.candidates.is_empty() {
        verdict.status = AcrStatus::Candidate;
        verdict.method = "candidates".into();
        verdict.certificate = format!(
            "unverified candidate value(s) for {name}: {}",
            verdict
                .candidates
                .iter()
                .map(describe_location)
                .collect::<Vec<_>>()
                .join(", ")
        );
    } else {
        verdict.status = AcrStatus::Inconclusive;
        verdict.method = "none".into();
        verdict.certificate = format!("no applicable certificate for {name}");
    }
    Ok(verdict)
}

fn describe_location(loc: &RootLocation) -> String {
    if loc.is_exact() {
        rational_to_text(&loc.lo)
    } else {
        format!("({}, {})", rational_to_text(&loc.lo), rational_to_text(&loc.hi))
    }
}

fn cacr_from_saturation_cached(
    sat: &Ideal,
    elim_sat: &Polynomial,
    species: usize,
) -> Result<CacrVerdict> {
    if elim_sat.is_zero() {
        return Ok(CacrVerdict {
            species,
            status: CacrStatus::NoCacr,
            value: None,
            generator: None,
        });
    }
    if elim_sat.total_degree() == Some(0) {
        return Ok(CacrVerdict {
            species,
            status: CacrStatus::VacuousCacr,
            value: None,
            generator: Some(elim_sat.clone()),
        });
    }
    let sf = UniPoly::from_polynomial(elim_sat, species)?.squarefree_part();
    let gen = sf.to_polynomial(sat.arity(), species);
    if sf.degree() == Some(1) {
        let value = linear_root(&gen, species).unwrap();
        Ok(CacrVerdict {
            species,
            status: CacrStatus::Cacr,
            value: Some(value),
            generator: Some(gen),
        })
    } else {
        Ok(CacrVerdict {
            species,
            status: CacrStatus::NoCacr,
            value: None,
            generator: Some(gen),
        })
    }
}

/// Once some condition proves ACR at a rational value, the stronger
/// zero-divisor form usually holds too: either `x - alpha` lies in the
/// ideal, or `(x - alpha) m^k` does for some power of the coordinate
/// product `m` while `m^k` does not (the saturation is proper whenever the
/// run is not vacuous), making `x - alpha` a zero divisor.
fn upgrade_to_zero_divisor(
    ideal: &Ideal,
    gb: &GroebnerBasis,
    sat_gb: &GroebnerBasis,
    species: usize,
    alpha: &BigRational,
    names: &[String],
) -> (AcrStatus, String) {
    let n = ideal.arity();
    let name = &names[species];
    let p = Polynomial::var(n, species).sub(&Polynomial::constant(n, alpha.clone()));
    if ideal_member(&p, gb) {
        return (
            AcrStatus::ZeroDivisorAcr,
            format!(
                "{name} - {} lies in the steady-state ideal",
                rational_to_text(alpha)
            ),
        );
    }
    if ideal_member(&p, sat_gb) {
        let m = coordinate_product(n);
        let mut power = m.clone();
        for k in 1..=16usize {
            if normal_form(&p.mul(&power), gb).is_zero() {
                return (
                    AcrStatus::ZeroDivisorAcr,
                    format!(
                        "({name} - {a}) m^{k} lies in the steady-state ideal while m^{k} does not (m = coordinate product), so {name} - {a} is a zero divisor",
                        a = rational_to_text(alpha)
                    ),
                );
            }
            power = power.mul(&m);
        }
    }
    match is_zero_divisor(ideal, &p) {
        Ok(true) => (
            AcrStatus::ZeroDivisorAcr,
            format!(
                "{name} - {} is a zero divisor of the steady-state ideal",
                rational_to_text(alpha)
            ),
        ),
        _ => (
            AcrStatus::Acr,
            format!(
                "every positive steady state has {name} = {}",
                rational_to_text(alpha)
            ),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::parse_network;
    use crate::poly::parse_polynomial;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn width() -> BigRational {
        q(1, 1 << 20)
    }

    #[test]
    fn conditions_on_the_two_species_motif() {
        // f_A = x_B (1 - x_A^2) = -f_B: saturation pins x_A^2 = 1.
        let net = parse_network("2A + B -> A + 2B ; 1\nB -> A ; 1\n").unwrap();
        let ideal = net.steady_state_ideal();
        assert_eq!(check_condition1(&ideal, 0).unwrap(), None);
        assert_eq!(check_condition2(&ideal, 0).unwrap(), None);
        // Elimination in A of the saturated ideal is x_A^2 - 1: squarefree
        // degree 2, so no CACR either; but the candidate machinery finds
        // and verifies alpha = 1.
        let report = acr_candidates(&ideal, &width()).unwrap();
        assert_eq!(report.candidates.len(), 1);
        assert_eq!(report.candidates[0].species, 0);
        assert_eq!(report.candidates[0].value, RootLocation::exact(q(1, 1)));
        assert!(!report.vacuous_hint);
        let outcome = verify_candidate(&ideal, 0, &q(1, 1), &net.species).unwrap();
        assert!(outcome.verified && outcome.zero_divisor);
    }

    #[test]
    fn zero_divisor_verification_respects_unsound_cases() {
        // f_A = (x_A - 1)(x_A - x_B), f_B = (x_A - x_B)(x_A + x_B): the
        // diagonal of steady states rules ACR out, and verification must
        // not certify the candidate (A, 1).
        let net = parse_network(
            "2A -> 3A + B ; 1\nA + B <-> B ; 1, 1\nA -> 0 ; 1\n2B -> 0 ; 1/2\n",
        )
        .unwrap();
        let ideal = net.steady_state_ideal();
        let f = net.steady_state_polynomials();
        let ns = net.species.clone();
        assert_eq!(f[0], parse_polynomial("A^2 - A*B - A + B", &ns).unwrap());
        assert_eq!(f[1], parse_polynomial("A^2 - B^2", &ns).unwrap());
        let outcome = verify_candidate(&ideal, 0, &q(1, 1), &net.species).unwrap();
        assert!(!outcome.verified);
        assert!(outcome.zero_divisor);
    }

    #[test]
    fn candidates_can_stay_unverified_for_multistationary_networks() {
        // f_A = x_B (x_A - 1)(x_A - 2): both values occur at positive
        // steady states, so neither candidate verifies.
        let net = parse_network("2A + B -> 3A ; 1\nA + B -> 2B ; 3\nB -> A ; 2\n").unwrap();
        let ideal = net.steady_state_ideal();
        let report = acr_candidates(&ideal, &width()).unwrap();
        let values: Vec<_> = report
            .candidates
            .iter()
            .map(|c| (c.species, c.value.lo.clone()))
            .collect();
        assert_eq!(values, vec![(0, q(1, 1)), (0, q(2, 1))]);
        for c in &report.candidates {
            let o = verify_candidate(&ideal, c.species, &c.value.lo, &net.species).unwrap();
            assert!(!o.verified);
        }
    }

    #[test]
    fn cacr_on_a_multistationary_cycle() {
        // f_A = x_B (2 - x_A), f_B = -(x_B-1)(x_B-2)(x_B-3): three positive
        // steady values of B, but A is pinned at 2 on the torus.
        let net = parse_network(
            "A + B <-> B ; 1, 2\nB <-> 0 ; 11, 6\n2B <-> 3B ; 6, 1\n",
        )
        .unwrap();
        let ideal = net.steady_state_ideal();
        let a = cacr(&ideal, 0).unwrap();
        assert_eq!(a.status, CacrStatus::Cacr);
        assert_eq!(a.value, Some(q(2, 1)));
        let b = cacr(&ideal, 1).unwrap();
        assert_eq!(b.status, CacrStatus::NoCacr);
    }

    #[test]
    fn positive_restriction_shape() {
        let net = parse_network("2A + B -> A + 2B ; 1\nB -> A ; 1\n").unwrap();
        let ideal = net.steady_state_ideal();
        let p = positive_restriction(&ideal);
        assert_eq!(p.arity(), 4);
        assert_eq!(p.gens().len(), 4);
        let ns = restriction_names(&net.species);
        assert_eq!(ns, vec!["A", "B", "z_A", "z_B"]);
        let texts: Vec<String> = p
            .gens()
            .iter()
            .map(|g| g.to_text(&ns, &MonomialOrder::grevlex(4)))
            .collect();
        assert!(texts.contains(&"A*z_A^2 - 1".to_string()));
        assert!(texts.contains(&"B*z_B^2 - 1".to_string()));
    }

    #[test]
    fn jacobian_minors_of_a_plane_curve() {
        // One generator in two variables, dim 1: 1x1 minors = gradient.
        let ns: Vec<String> = vec!["x".into(), "y".into()];
        let g = parse_polynomial("x^2 + y^2 - 1", &ns).unwrap();
        let ideal = Ideal::new(2, vec![g]);
        let aug = jacobian_minor_augment(&ideal, 1).unwrap();
        let texts: Vec<String> = aug
            .gens()
            .iter()
            .map(|p| p.to_text(&ns, &MonomialOrder::grevlex(2)))
            .collect();
        assert!(texts.contains(&"2*x".to_string()));
        assert!(texts.contains(&"2*y".to_string()));
        assert!(jacobian_minor_augment(&ideal, 2).is_err());
        assert!(jacobian_minor_augment(&ideal, 0).is_err());
    }

    #[test]
    fn split_factors_pulls_monomials_univariates_and_contents() {
        let ns: Vec<String> = vec!["A".into(), "B".into()];
        let g = parse_polynomial("A^2*B - 3*A*B + 2*B", &ns).unwrap();
        let (mono, factors) = split_factors(&g);
        assert_eq!(mono, vec![1]);
        let texts: Vec<String> = factors
            .iter()
            .map(|f| f.to_text(&ns, &MonomialOrder::grevlex(2)))
            .collect();
        assert_eq!(texts, vec!["A - 1", "A - 2"]);

        // (A + 1)(B + 2) expanded: the content extraction recovers both.
        let h = parse_polynomial("A*B + 2*A + B + 2", &ns).unwrap();
        let (mono2, factors2) = split_factors(&h);
        assert!(mono2.is_empty());
        let texts2: Vec<String> = factors2
            .iter()
            .map(|f| f.to_text(&ns, &MonomialOrder::grevlex(2)))
            .collect();
        assert_eq!(texts2.len(), 2);
        assert!(texts2.contains(&"A + 1".to_string()));
        assert!(texts2.contains(&"B + 2".to_string()));
    }

    #[test]
    fn one_species_rules() {
        let acr_net = parse_network("2A -> A ; 1\n3A -> 5A ; 1\n4A -> 3A ; 1\n").unwrap();
        let v = one_species_acr(&acr_net, &width()).unwrap();
        assert_eq!(v.status, AcrStatus::Acr);
        assert_eq!(v.value, Some(RootLocation::exact(q(1, 1))));

        let no_net = parse_network("2A -> A ; 2\n3A -> 5A ; 3/2\n4A -> 3A ; 1\n").unwrap();
        let v = one_species_acr(&no_net, &width()).unwrap();
        assert_eq!(v.status, AcrStatus::NoAcr);
    }

    #[test]
    fn analyze_flags_visibly_vacuous_networks() {
        let net = parse_network(
            "A + C -> 2C ; 1\nC -> A ; 1\nC -> B + C ; 1\nB -> 2B ; 1\n",
        )
        .unwrap();
        let verdicts = analyze(&net, &AnalyzeOptions::default()).unwrap();
        assert!(verdicts.iter().all(|v| v.status == AcrStatus::Vacuous));
    }

    #[test]
    fn analyze_certifies_the_two_species_motif() {
        let net = parse_network("2A + B -> A + 2B ; 1\nB -> A ; 1\n").unwrap();
        let verdicts = analyze(&net, &AnalyzeOptions::default()).unwrap();
        let a = &verdicts[0];
        assert_eq!(a.status, AcrStatus::ZeroDivisorAcr);
        assert_eq!(a.value, Some(RootLocation::exact(q(1, 1))));
        assert_eq!(a.method, "candidates");
    }
}
