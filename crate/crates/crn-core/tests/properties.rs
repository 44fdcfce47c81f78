//! Property tests for the exact algebra layer: Groebner bases, ideal
//! operations, network parsing and real-root isolation.

use num::rational::BigRational;
use num::{BigInt, Signed, Zero};
use proptest::prelude::*;

use crn_core::acr::{coordinate_product, saturate_by_variables};
use crn_core::gb::{ideal_member, normal_form};
use crn_core::ideal::{eliminate, saturate, Ideal};
use crn_core::network::parse_network;
use crn_core::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial};
use crn_core::realroots::{count_positive_roots, isolate_positive_roots};
use crn_core::unipoly::UniPoly;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn monomial(arity: usize, max_deg: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_deg, arity).prop_map(|e| Monomial::from_exponents(&e))
}

// Degrees and coefficient heights stay small: Buchberger runtimes blow up
// quickly on unlucky draws and the properties hold regardless of size.
fn polynomial(arity: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(arity, 2), small_rational()), 1..4)
        .prop_map(move |terms| Polynomial::from_terms(arity, terms))
}

fn nonzero_polynomial(arity: usize) -> impl Strategy<Value = Polynomial> {
    polynomial(arity).prop_filter("nonzero", |p| !p.is_zero())
}

fn generators(arity: usize) -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(nonzero_polynomial(arity), 1..4)
}

fn leading_monomial(p: &Polynomial, order: &MonomialOrder) -> Monomial {
    p.terms()
        .map(|(m, _)| m)
        .max_by(|a, b| order.cmp(a, b))
        .expect("nonzero")
        .clone()
}

fn leading_coefficient(p: &Polynomial, order: &MonomialOrder) -> BigRational {
    let lm = leading_monomial(p, order);
    p.coefficient(&lm)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Buchberger's criterion: every S-polynomial of the computed basis
    /// reduces to zero against the basis.
    #[test]
    fn groebner_bases_pass_the_s_polynomial_test(gens in generators(3)) {
        let order = MonomialOrder::grevlex(3);
        let ideal = Ideal::new(3, gens);
        let gb = ideal.groebner(&order).unwrap();
        for i in 0..gb.elements.len() {
            for j in i + 1..gb.elements.len() {
                let f = &gb.elements[i];
                let g = &gb.elements[j];
                let lm_f = leading_monomial(f, &order);
                let lm_g = leading_monomial(g, &order);
                let lcm = lm_f.lcm(&lm_g);
                let cf = leading_coefficient(f, &order);
                let cg = leading_coefficient(g, &order);
                let s = f
                    .mul_term(&lcm.checked_div(&lm_f).unwrap(), &cf.recip())
                    .sub(&g.mul_term(&lcm.checked_div(&lm_g).unwrap(), &cg.recip()));
                prop_assert!(normal_form(&s, &gb).is_zero());
            }
        }
    }

    /// The canonical reduced basis does not depend on how the generators
    /// are ordered.
    #[test]
    fn canonical_bases_ignore_generator_order(gens in generators(3), seed in 0u64..1000) {
        let order = MonomialOrder::grevlex(3);
        let mut shuffled = gens.clone();
        // Cheap deterministic shuffle driven by the seed.
        let k = shuffled.len();
        for i in 0..k {
            let j = ((seed as usize).wrapping_mul(31).wrapping_add(i * 17)) % k;
            shuffled.swap(i, j);
        }
        let a = Ideal::new(3, gens).groebner(&order).unwrap();
        let b = Ideal::new(3, shuffled).groebner(&order).unwrap();
        prop_assert_eq!(a.elements, b.elements);
    }

    /// Random polynomial combinations of the generators are ideal members.
    #[test]
    fn combinations_of_generators_reduce_to_zero(
        gens in generators(2),
        mults in prop::collection::vec(polynomial(2), 3),
    ) {
        let order = MonomialOrder::grevlex(2);
        let gb = Ideal::new(2, gens.clone()).groebner(&order).unwrap();
        let mut combo = Polynomial::zero(2);
        for (g, h) in gens.iter().zip(mults.iter()) {
            combo = combo.add(&g.mul(h));
        }
        prop_assert!(ideal_member(&combo, &gb));
    }

    /// I is contained in I : f^inf, and saturating twice changes nothing.
    #[test]
    fn saturation_is_idempotent_and_contains_the_ideal(
        gens in generators(2),
        f in nonzero_polynomial(2),
    ) {
        let ideal = Ideal::new(2, gens);
        let once = saturate(&ideal, &f).unwrap().canonical().unwrap();
        let order = MonomialOrder::grevlex(2);
        let once_gb = once.groebner(&order).unwrap();
        for g in ideal.gens() {
            prop_assert!(ideal_member(g, &once_gb));
        }
        let twice = saturate(&once, &f).unwrap().canonical().unwrap();
        prop_assert_eq!(once.gens(), twice.gens());
    }

    /// Elimination returns members of the ideal supported on the kept
    /// variables only.
    #[test]
    fn elimination_is_a_sound_projection(gens in generators(3)) {
        let ideal = Ideal::new(3, gens);
        let keep = [0usize, 2];
        let elim = eliminate(&ideal, &keep).unwrap();
        let full_gb = ideal.groebner(&MonomialOrder::grevlex(3)).unwrap();
        for g in elim.gens() {
            for (m, _) in g.terms() {
                prop_assert_eq!(m.degree(1), 0);
            }
            prop_assert!(ideal_member(g, &full_gb));
        }
    }
}

fn species_name(i: usize) -> &'static str {
    ["A", "B", "C", "D"][i]
}

fn complex_text(c: &[u16]) -> String {
    let mut parts = Vec::new();
    for (i, &coef) in c.iter().enumerate() {
        match coef {
            0 => {}
            1 => parts.push(species_name(i).to_string()),
            k => parts.push(format!("{k}{}", species_name(i))),
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn reaction_line() -> impl Strategy<Value = String> {
    let complex = prop::collection::vec(0u16..=2, 3);
    (complex.clone(), complex, 1i64..=6, 1i64..=4)
        .prop_filter("net change required", |(r, p, _, _)| r != p)
        .prop_map(|(r, p, num, den)| {
            format!("{} -> {} ; {}/{}", complex_text(&r), complex_text(&p), num, den)
        })
}

fn network_text() -> impl Strategy<Value = String> {
    prop::collection::vec(reaction_line(), 1..6).prop_map(|lines| lines.join("\n"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Conservation laws annihilate every reaction vector and give linear
    /// relations among the steady-state polynomials.
    #[test]
    fn conservation_laws_annihilate_the_dynamics(text in network_text()) {
        let net = parse_network(&text).unwrap();
        let n = net.num_species();
        let polys = net.steady_state_polynomials();
        let stoich = net.stoichiometric_matrix();
        for law in net.conservation_laws() {
            prop_assert!(!law.iter().all(|c| c.is_zero()));
            for j in 0..net.reactions.len() {
                let dot: BigRational = law
                    .iter()
                    .enumerate()
                    .map(|(i, a)| a * BigRational::from(BigInt::from(stoich[i][j])))
                    .sum();
                prop_assert!(dot.is_zero());
            }
            let mut combo = Polynomial::zero(n);
            for (c, f) in law.iter().zip(polys.iter()) {
                combo = combo.add(&f.scale(c));
            }
            prop_assert!(combo.is_zero());
        }
    }

    /// Printing a parsed network and reparsing it is the identity.
    #[test]
    fn networks_round_trip_through_pretty(text in network_text()) {
        let net = parse_network(&text).unwrap();
        let again = parse_network(&net.pretty()).unwrap();
        prop_assert_eq!(&net.species, &again.species);
        prop_assert_eq!(net.reactions.len(), again.reactions.len());
        for (a, b) in net.reactions.iter().zip(again.reactions.iter()) {
            prop_assert_eq!(&a.reactant, &b.reactant);
            prop_assert_eq!(&a.product, &b.product);
            prop_assert_eq!(&a.rate, &b.rate);
        }
    }

    /// Polynomial text output parses back to the same polynomial.
    #[test]
    fn polynomials_round_trip_through_text(p in polynomial(3)) {
        let names: Vec<String> = ["A", "B", "C"].iter().map(|s| s.to_string()).collect();
        let order = MonomialOrder::grevlex(3);
        let text = p.to_text(&names, &order);
        let back = parse_polynomial(&text, &names).unwrap();
        prop_assert_eq!(p, back);
    }

    /// Monomial orders are total orders compatible with multiplication
    /// and have 1 as the least monomial.
    #[test]
    fn monomial_orders_are_multiplicative_well_orders(
        a in monomial(3, 4),
        b in monomial(3, 4),
        m in monomial(3, 3),
        lex in any::<bool>(),
    ) {
        let order = if lex {
            MonomialOrder::lex(3)
        } else {
            MonomialOrder::grevlex(3)
        };
        prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
        prop_assert_eq!(order.cmp(&a.mul(&m), &b.mul(&m)), order.cmp(&a, &b));
        let unit = Monomial::one(3);
        if !a.is_one() {
            prop_assert_eq!(order.cmp(&a, &unit), std::cmp::Ordering::Greater);
        }
    }
}

/// Positive roots planted on a lattice: the count and the isolating
/// intervals must recover them exactly.
fn planted_roots() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, usize)> {
    let pos = prop::collection::btree_set(1i64..=48, 0..4);
    let neg = prop::collection::btree_set(-48i64..=-1, 0..3);
    (pos, neg, 0usize..=2).prop_map(|(p, n, zeros)| {
        (p.into_iter().collect(), n.into_iter().collect(), zeros)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sturm_counts_match_planted_positive_roots(
        (pos, neg, zeros) in planted_roots(),
        scale_num in prop::sample::select(vec![-3i64, -1, 1, 2, 5]),
        doubled in any::<bool>(),
    ) {
        let mut f = UniPoly::constant(ratio(scale_num, 2));
        for _ in 0..zeros {
            f = f.mul(&UniPoly::from_coeffs(vec![ratio(0, 1), ratio(1, 1)]));
        }
        for &r in pos.iter().chain(neg.iter()) {
            let factor = UniPoly::from_coeffs(vec![ratio(-r, 8), ratio(1, 1)]);
            f = f.mul(&factor);
            if doubled && r == *pos.first().unwrap_or(&i64::MAX) {
                f = f.mul(&factor);
            }
        }
        prop_assert_eq!(count_positive_roots(&f), pos.len());

        let width = ratio(1, 1 << 8);
        let locs = isolate_positive_roots(&f, &width);
        prop_assert_eq!(locs.len(), pos.len());
        for &r in &pos {
            let root = ratio(r, 8);
            let hits = locs
                .iter()
                .filter(|loc| loc.lo <= root && root <= loc.hi)
                .count();
            prop_assert_eq!(hits, 1);
        }
        for loc in &locs {
            prop_assert!(loc.lo.is_positive());
            prop_assert!(loc.is_exact() || loc.width() <= width);
        }
    }
}

#[test]
fn saturation_by_all_variables_strips_monomial_factors() {
    // x y (x - 1) and y (y - 2) saturate to (x - 1), (y - 2).
    let x = Polynomial::var(2, 0);
    let y = Polynomial::var(2, 1);
    let one = Polynomial::one(2);
    let two = Polynomial::constant(2, ratio(2, 1));
    let g1 = x.mul(&y).mul(&x.sub(&one));
    let g2 = y.mul(&y.sub(&two));
    let ideal = Ideal::new(2, vec![g1, g2]);
    let sat = saturate_by_variables(&ideal).unwrap().canonical().unwrap();
    let gb = sat.groebner(&MonomialOrder::grevlex(2)).unwrap();
    assert!(ideal_member(&x.sub(&one), &gb));
    assert!(ideal_member(&y.sub(&two), &gb));
    assert!(!ideal_member(&one, &gb));
    let m = coordinate_product(2);
    assert_eq!(m, x.mul(&y));
}
