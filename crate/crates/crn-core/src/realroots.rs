//! Sturm sequences and exact real-root counting and isolation on the
//! positive axis.

use crate::unipoly::UniPoly;
use num::rational::BigRational;
use num::{Signed, Zero};

/// Sturm chain of the squarefree part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<UniPoly>,
}

impl SturmSequence {
    /// Builds the chain `f, f', -rem(...), ...` of the squarefree part.
    /// Positive rescaling of entries does not change sign variations.
    pub fn new(f: &UniPoly) -> SturmSequence {
        let f = f.squarefree_part();
        let mut chain = Vec::new();
        if f.is_zero() {
            return SturmSequence { chain };
        }
        chain.push(f.clone());
        let mut prev = f.clone();
        let mut cur = f.derivative();
        while !cur.is_zero() {
            chain.push(cur.clone());
            let (_, rem) = prev.div_rem(&cur).unwrap();
            prev = cur;
            cur = rem.neg();
            // Rescale to the primitive form to keep numbers small; the
            // scale factor is positive so variations are unchanged.
            if !cur.is_zero() {
                let ints = cur.primitive_integer();
                cur = UniPoly::from_coeffs(
                    ints.into_iter().map(BigRational::from).collect(),
                );
            }
        }
        SturmSequence { chain }
    }

    pub fn chain(&self) -> &[UniPoly] {
        &self.chain
    }

    /// Sign variations at a point where the squarefree part does not
    /// vanish; zero entries are skipped per Sturm's theorem.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| sign(&p.eval(x)))
            .filter(|&s| s != 0)
            .collect();
        count_changes(&signs)
    }

    /// Sign variations at +infinity (signs of leading coefficients).
    pub fn variations_at_pos_inf(&self) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| sign(p.leading_coefficient().unwrap()))
            .collect();
        count_changes(&signs)
    }

    /// Number of distinct real roots in `(a, b]`, assuming the squarefree
    /// part does not vanish at `a` or `b`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots in `(a, +inf)`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations_at(a)
            .saturating_sub(self.variations_at_pos_inf())
    }
}

fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn count_changes(signs: &[i8]) -> usize {
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct roots in `(0, +inf)`. The power of `x` dividing `f`
/// is split off first so the chain is evaluated away from its roots.
pub fn count_positive_roots(f: &UniPoly) -> usize {
    if f.is_zero() || f.degree() == Some(0) {
        return 0;
    }
    let (_, g) = f.deflate();
    if g.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let s = SturmSequence::new(&g);
    s.count_above(&BigRational::zero())
}

/// Location of a real root: exact when rational, otherwise an isolating
/// interval with rational endpoints (`lo < root < hi`, no other root).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootLocation {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootLocation {
    pub fn exact(v: BigRational) -> Self {
        RootLocation { lo: v.clone(), hi: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from(num::BigInt::from(2))
    }
}

/// Isolates all distinct positive real roots, ascending. Rational roots
/// come back exact; irrational roots as intervals of width at most
/// `max_width` whose endpoints are not roots.
pub fn isolate_positive_roots(f: &UniPoly, max_width: &BigRational) -> Vec<RootLocation> {
    if f.is_zero() || f.degree() == Some(0) {
        return Vec::new();
    }
    let mut g = f.squarefree_part();
    let mut out: Vec<RootLocation> = Vec::new();
    // Split off every rational root; afterwards g has no rational zeros,
    // so sign queries at rational points are never zero.
    for (r, _) in f.rational_roots() {
        if r.is_positive() {
            out.push(RootLocation::exact(r.clone()));
        }
        if let Some(q) = g.div_linear(&r) {
            g = q;
        }
    }
    if g.degree().unwrap_or(0) >= 1 {
        let sturm = SturmSequence::new(&g);
        let zero = BigRational::zero();
        let bound = g.cauchy_bound();
        let total = sturm.count_in(&zero, &bound);
        let mut stack = vec![(zero, bound, total)];
        while let Some((lo, hi, count)) = stack.pop() {
            if count == 0 {
                continue;
            }
            if count == 1 {
                out.push(refine_interval(&sturm, lo, hi, max_width));
                continue;
            }
            let mid = (&lo + &hi) / BigRational::from(num::BigInt::from(2));
            let left = sturm.count_in(&lo, &mid);
            stack.push((mid.clone(), hi, count - left));
            stack.push((lo, mid, left));
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

fn refine_interval(
    sturm: &SturmSequence,
    mut lo: BigRational,
    mut hi: BigRational,
    max_width: &BigRational,
) -> RootLocation {
    while &hi - &lo > *max_width {
        let mid = (&lo + &hi) / BigRational::from(num::BigInt::from(2));
        if sturm.count_in(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RootLocation { lo, hi }
}
