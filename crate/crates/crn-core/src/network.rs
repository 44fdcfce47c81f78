//! Reaction networks with mass-action kinetics and the `.crn` text format.
//!
//! A network file holds one reaction per line:
//!
//! ```text
//! # comment
//! 2A + B -> A + 2B ; 1
//! S1 + E <-> C1 ; 3/2, 1
//! 0 -> B ; 1.41
//! ```
//!
//! Species order is first appearance. `<->` expands into a forward and a
//! backward reaction and takes two rates. Rates are exact positive
//! rationals; decimals are read exactly (`1.41` is `141/100`).

use crate::ideal::Ideal;
use crate::poly::{parse_rational, rational_to_text, Monomial, Polynomial};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::Serialize;

/// A complex, stored as stoichiometric coefficients aligned with the
/// species list.
pub type Complex = Vec<u16>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reaction {
    pub reactant: Complex,
    pub product: Complex,
    pub rate: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    pub species: Vec<String>,
    pub reactions: Vec<Reaction>,
}

impl Network {
    pub fn num_species(&self) -> usize {
        self.species.len()
    }

    pub fn species_index(&self, name: &str) -> Option<usize> {
        self.species.iter().position(|s| s == name)
    }

    /// Mass-action steady-state polynomials, one per species:
    /// `f_i = sum_r rate_r (product_i - reactant_i) x^reactant`.
    pub fn steady_state_polynomials(&self) -> Vec<Polynomial> {
        let n = self.num_species();
        let mut polys = vec![Polynomial::zero(n); n];
        for r in &self.reactions {
            let mono = Monomial::from_exponents(&r.reactant);
            for i in 0..n {
                let delta = r.product[i] as i64 - r.reactant[i] as i64;
                if delta == 0 {
                    continue;
                }
                let c = &r.rate * BigRational::from(BigInt::from(delta));
                polys[i].add_term(mono.clone(), c);
            }
        }
        polys
    }

    /// The steady-state ideal generated by the mass-action polynomials.
    pub fn steady_state_ideal(&self) -> Ideal {
        Ideal::new(self.num_species(), self.steady_state_polynomials())
    }

    /// Stoichiometric matrix with one column per reaction (`product -
    /// reactant`), one row per species.
    pub fn stoichiometric_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.num_species();
        let mut m = vec![vec![0i64; self.reactions.len()]; n];
        for (j, r) in self.reactions.iter().enumerate() {
            for i in 0..n {
                m[i][j] = r.product[i] as i64 - r.reactant[i] as i64;
            }
        }
        m
    }

    /// Basis of the left kernel of the stoichiometric matrix: rational
    /// vectors `v` with `v . (product - reactant) = 0` for every reaction.
    /// Returned as primitive integer vectors with positive leading entry,
    /// in row-echelon (pivot) order, so the basis is canonical.
    pub fn conservation_laws(&self) -> Vec<Vec<BigRational>> {
        let n = self.num_species();
        // Solve N^T v = 0 by Gaussian elimination over Q.
        let mut rows: Vec<Vec<BigRational>> = self
            .reactions
            .iter()
            .map(|r| {
                (0..n)
                    .map(|i| {
                        BigRational::from(BigInt::from(
                            r.product[i] as i64 - r.reactant[i] as i64,
                        ))
                    })
                    .collect()
            })
            .collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].recip();
            for c in rows[rank].iter_mut() {
                *c = &*c * &inv;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for c in 0..n {
                        let sub = &rows[rank][c] * &f;
                        rows[r][c] = &rows[r][c] - sub;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![BigRational::zero(); n];
            v[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][f].clone();
            }
            basis.push(normalize_vector(v));
        }
        basis
    }

    /// Canonical `.crn` text; parsing it back yields an equal network.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for r in &self.reactions {
            out.push_str(&self.complex_text(&r.reactant));
            out.push_str(" -> ");
            out.push_str(&self.complex_text(&r.product));
            out.push_str(" ; ");
            out.push_str(&rational_to_text(&r.rate));
            out.push('\n');
        }
        out
    }

    fn complex_text(&self, c: &Complex) -> String {
        if c.iter().all(|&k| k == 0) {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, &k) in c.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if k == 1 {
                parts.push(self.species[i].clone());
            } else {
                parts.push(format!("{k}{}", self.species[i]));
            }
        }
        parts.join(" + ")
    }

    pub fn to_json(&self) -> NetworkJson {
        NetworkJson {
            species: self.species.clone(),
            reactions: self
                .reactions
                .iter()
                .map(|r| ReactionJson {
                    reactant: r.reactant.clone(),
                    product: r.product.clone(),
                    rate: RationalJson::from(&r.rate),
                })
                .collect(),
        }
    }
}

/// Divides out the integer content and makes the first nonzero entry
/// positive.
fn normalize_vector(v: Vec<BigRational>) -> Vec<BigRational> {
    use num::Integer;
    let mut denom = BigInt::one();
    for c in &v {
        denom = denom.lcm(c.denom());
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(&(c.numer() * (&denom / c.denom())));
    }
    if content.is_zero() {
        return v;
    }
    let mut scale = BigRational::new(denom, content);
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        if (first * &scale).is_negative() {
            scale = -scale;
        }
    }
    v.into_iter().map(|c| c * &scale).collect()
}

#[derive(Serialize, Clone, Debug)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(r: &BigRational) -> Self {
        RationalJson { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ReactionJson {
    pub reactant: Vec<u16>,
    pub product: Vec<u16>,
    pub rate: RationalJson,
}

#[derive(Serialize, Clone, Debug)]
pub struct NetworkJson {
    pub species: Vec<String>,
    pub reactions: Vec<ReactionJson>,
}

/// Parses the `.crn` format. Species appear in order of first appearance.
pub fn parse_network(input: &str) -> Result<Network> {
    struct RawReaction {
        reactant: Vec<(String, u16)>,
        product: Vec<(String, u16)>,
        rate: BigRational,
        line: usize,
    }

    let mut species: Vec<String> = Vec::new();
    let mut raw: Vec<RawReaction> = Vec::new();

    for (idx, full_line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = match full_line.find('#') {
            Some(p) => &full_line[..p],
            None => full_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };

        let (reaction_part, rate_part) = line
            .split_once(';')
            .ok_or_else(|| err("missing ';' before rate".into()))?;
        let (lhs, rhs, reversible) = if let Some((l, r)) = reaction_part.split_once("<->") {
            (l, r, true)
        } else if let Some((l, r)) = reaction_part.split_once("->") {
            (l, r, false)
        } else {
            return Err(err("missing '->' or '<->'".into()));
        };

        let reactant = parse_complex(lhs, line_no)?;
        let product = parse_complex(rhs, line_no)?;
        if reactant == product {
            return Err(err("reactant and product complexes are equal".into()));
        }
        for (name, _) in reactant.iter().chain(product.iter()) {
            if !species.contains(name) {
                species.push(name.clone());
            }
        }

        let rates: Vec<BigRational> = rate_part
            .split(',')
            .map(|s| {
                parse_rational(s).map_err(|e| {
                    err(format!(
                        "bad rate: {e}; rates must be explicit rational numbers \
                         (specialize symbolic rate constants before analysis)"
                    ))
                })
            })
            .collect::<Result<_>>()?;
        let expected = if reversible { 2 } else { 1 };
        if rates.len() != expected {
            return Err(err(format!(
                "expected {expected} rate(s), found {}",
                rates.len()
            )));
        }
        for r in &rates {
            if !r.is_positive() {
                return Err(err("rates must be positive".into()));
            }
        }

        raw.push(RawReaction {
            reactant: reactant.clone(),
            product: product.clone(),
            rate: rates[0].clone(),
            line: line_no,
        });
        if reversible {
            raw.push(RawReaction {
                reactant: product,
                product: reactant,
                rate: rates[1].clone(),
                line: line_no,
            });
        }
    }

    let densify = |terms: &[(String, u16)]| -> Complex {
        let mut c = vec![0u16; species.len()];
        for (name, k) in terms {
            let i = species.iter().position(|s| s == name).unwrap();
            c[i] += k;
        }
        c
    };

    let mut reactions = Vec::with_capacity(raw.len());
    for rr in &raw {
        let reactant = densify(&rr.reactant);
        let product = densify(&rr.product);
        if reactant == product {
            return Err(Error::Parse {
                line: rr.line,
                msg: "reactant and product complexes are equal".into(),
            });
        }
        reactions.push(Reaction { reactant, product, rate: rr.rate.clone() });
    }

    if reactions.is_empty() {
        return Err(Error::Invalid("network has no reactions".into()));
    }
    Ok(Network { species, reactions })
}

/// Parses `0` or `term + term + ...` where a term is `[coefficient]name`.
fn parse_complex(text: &str, line: usize) -> Result<Vec<(String, u16)>> {
    let text = text.trim();
    let err = |msg: String| Error::Parse { line, msg };
    if text == "0" {
        return Ok(Vec::new());
    }
    if text.is_empty() {
        return Err(err("empty complex (use '0')".into()));
    }
    let mut terms = Vec::new();
    for part in text.split('+') {
        let part = part.trim();
        if part.is_empty() {
            return Err(err("empty term in complex".into()));
        }
        let digits: String = part.chars().take_while(|c| c.is_ascii_digit()).collect();
        let rest = part[digits.len()..].trim_start();
        let coeff: u16 = if digits.is_empty() {
            1
        } else {
            digits
                .parse()
                .map_err(|_| err(format!("bad coefficient '{digits}'")))?
        };
        if coeff == 0 {
            return Err(err("zero stoichiometric coefficient".into()));
        }
        if rest.is_empty() {
            return Err(err(format!("missing species name in '{part}'")));
        }
        let mut chars = rest.chars();
        let first = chars.next().unwrap();
        if !(first.is_ascii_alphabetic() || first == '_')
            || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(err(format!("bad species name '{rest}'")));
        }
        terms.push((rest.to_string(), coeff));
    }
    // Merge repeated species within one complex.
    let mut merged: Vec<(String, u16)> = Vec::new();
    for (name, k) in terms {
        match merged.iter_mut().find(|(n, _)| *n == name) {
            Some((_, existing)) => *existing += k,
            None => merged.push((name, k)),
        }
    }
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_a_basic_network() {
        let net = parse_network(
            "# comment line\n2A + B -> A + 2B ; 1\nB -> A ; 3/2\n",
        )
        .unwrap();
        assert_eq!(net.species, vec!["A", "B"]);
        assert_eq!(net.reactions.len(), 2);
        assert_eq!(net.reactions[0].reactant, vec![2, 1]);
        assert_eq!(net.reactions[0].product, vec![1, 2]);
        assert_eq!(net.reactions[1].rate, q(3, 2));
    }

    #[test]
    fn reversible_reactions_expand_to_two() {
        let net = parse_network("S1 + E <-> C1 ; 3/2, 1\n").unwrap();
        assert_eq!(net.reactions.len(), 2);
        assert_eq!(net.reactions[0].rate, q(3, 2));
        assert_eq!(net.reactions[1].rate, q(1, 1));
        assert_eq!(net.reactions[1].reactant, vec![0, 0, 1]);
    }

    #[test]
    fn zero_complex_and_exact_decimals() {
        let net = parse_network("0 -> B ; 1.41\nB -> 0 ; 2\n").unwrap();
        assert_eq!(net.reactions[0].reactant, vec![0]);
        assert_eq!(net.reactions[0].rate, q(141, 100));
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(parse_network("A -> A ; 1\n").is_err());
        assert!(parse_network("A -> B\n").is_err());
        assert!(parse_network("A -> B ; -1\n").is_err());
        assert!(parse_network("A -> B ; 0\n").is_err());
        assert!(parse_network("A <-> B ; 1\n").is_err());
        assert!(parse_network("A -> B ; 1, 2\n").is_err());
        assert!(parse_network("A -> 2 ; 1\n").is_err());
        assert!(parse_network("").is_err());
        let err = parse_network("A -> B ; 1\nA -> ; 2\n").unwrap_err();
        assert!(format!("{err}").contains("line 2"));
    }

    #[test]
    fn mass_action_polynomials_match_hand_expansion() {
        // f_A = x_B - x_A^2 x_B, f_B = -f_A for the two-reaction motif.
        let net = parse_network("2A + B -> A + 2B ; 1\nB -> A ; 1\n").unwrap();
        let ns = net.species.clone();
        let f = net.steady_state_polynomials();
        assert_eq!(f[0], parse_polynomial("B - A^2*B", &ns).unwrap());
        assert_eq!(f[1], parse_polynomial("A^2*B - B", &ns).unwrap());
    }

    #[test]
    fn stoichiometry_of_a_single_reaction() {
        let net = parse_network("A + B -> 3A + C ; 1\n").unwrap();
        let m = net.stoichiometric_matrix();
        assert_eq!(m, vec![vec![2], vec![-1], vec![1]]);
    }

    #[test]
    fn conservation_laws_annihilate_the_dynamics() {
        // One-site futile cycle: three independent totals.
        let net = parse_network(
            "S0 + E <-> X ; 3/2, 1\nX -> S1 + E ; 2\nS1 + F <-> Y ; 1, 3/4\nY -> S0 + F ; 5/2\n",
        )
        .unwrap();
        let laws = net.conservation_laws();
        assert_eq!(laws.len(), 3);
        let f = net.steady_state_polynomials();
        let n = net.num_species();
        for v in &laws {
            let mut acc = Polynomial::zero(n);
            for i in 0..n {
                acc = acc.add(&f[i].scale(&v[i]));
            }
            assert!(acc.is_zero(), "conservation law fails to annihilate f");
        }
    }

    #[test]
    fn pretty_round_trips() {
        let text = "2A + B -> A + 2B ; 1\nS1 + E <-> C1 ; 3/2, 1\n0 -> B ; 141/100\n";
        let net = parse_network(text).unwrap();
        let printed = net.pretty();
        let reparsed = parse_network(&printed).unwrap();
        assert_eq!(net, reparsed);
    }

    #[test]
    fn repeated_species_in_a_complex_merge() {
        let a = parse_network("A + A -> B ; 1\n").unwrap();
        let b = parse_network("2A -> B ; 1\n").unwrap();
        assert_eq!(a.reactions, b.reactions);
    }
}
