//! Numerical algebraic geometry engine: complex path tracking for
//! total-degree homotopies, generic-slice witness points, a two-slice
//! numerical ACR detector, and Fritz John real-point sampling.
//!
//! Everything here is double precision. Determinism contract: for a fixed
//! seed, outputs are bit-identical regardless of worker-thread count. All
//! random draws happen sequentially before any parallel section, and path
//! results are merged in start-point order.

use crate::poly::Polynomial;
use crate::{Error, Result};
use num::complex::Complex64;
use num::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Sparse complex polynomial with terms sorted by exponent vector.
#[derive(Clone, Debug)]
pub struct CxPoly {
    arity: usize,
    terms: Vec<(Box<[u16]>, Complex64)>,
}

impl CxPoly {
    pub fn from_polynomial(p: &Polynomial) -> CxPoly {
        let mut terms: Vec<(Box<[u16]>, Complex64)> = p
            .terms()
            .map(|(m, c)| {
                let num = c.numer().to_f64().unwrap_or(f64::NAN);
                let den = c.denom().to_f64().unwrap_or(f64::NAN);
                (
                    m.exponents().to_vec().into_boxed_slice(),
                    Complex64::new(num / den, 0.0),
                )
            })
            .collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        CxPoly { arity: p.arity(), terms }
    }

    pub fn from_terms(arity: usize, mut terms: Vec<(Box<[u16]>, Complex64)>) -> CxPoly {
        terms.retain(|(_, c)| c.norm_sqr() != 0.0);
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Box<[u16]>, Complex64)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match merged.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| c.norm_sqr() != 0.0);
        CxPoly { arity, terms: merged }
    }

    pub fn constant(arity: usize, c: Complex64) -> CxPoly {
        CxPoly::from_terms(arity, vec![(vec![0u16; arity].into_boxed_slice(), c)])
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: Complex64) -> CxPoly {
        CxPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn add(&self, other: &CxPoly) -> CxPoly {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        CxPoly::from_terms(self.arity, terms)
    }

    pub fn derivative(&self, var: usize) -> CxPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[var] > 0)
            .map(|(e, c)| {
                let mut d = e.clone();
                let k = d[var];
                d[var] -= 1;
                (d, c * k as f64)
            })
            .collect();
        CxPoly::from_terms(self.arity, terms)
    }

    fn eval_with(&self, powers: &PowerTable) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut m = *c;
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    m *= powers.get(v, k as usize);
                }
            }
            acc += m;
        }
        acc
    }

    pub fn eval(&self, x: &[Complex64]) -> Complex64 {
        let mut powers = PowerTable::new(self.arity, self.max_degrees());
        powers.fill(x);
        self.eval_with(&powers)
    }

    fn max_degrees(&self) -> Vec<u16> {
        let mut d = vec![0u16; self.arity];
        for (e, _) in &self.terms {
            for (v, &k) in e.iter().enumerate() {
                d[v] = d[v].max(k);
            }
        }
        d
    }
}

/// Per-point table of variable powers shared across evaluations.
struct PowerTable {
    powers: Vec<Vec<Complex64>>,
}

impl PowerTable {
    fn new(arity: usize, max_deg: Vec<u16>) -> PowerTable {
        PowerTable {
            powers: (0..arity)
                .map(|v| vec![Complex64::new(1.0, 0.0); max_deg[v] as usize + 1])
                .collect(),
        }
    }

    fn fill(&mut self, x: &[Complex64]) {
        for (v, row) in self.powers.iter_mut().enumerate() {
            row[0] = Complex64::new(1.0, 0.0);
            for k in 1..row.len() {
                row[k] = row[k - 1] * x[v];
            }
        }
    }

    fn get(&self, var: usize, k: usize) -> Complex64 {
        self.powers[var][k]
    }
}

/// Square (or rectangular) complex polynomial system with a precomputed
/// Jacobian.
#[derive(Clone, Debug)]
pub struct NumSystem {
    arity: usize,
    polys: Vec<CxPoly>,
    jac: Vec<Vec<CxPoly>>,
    max_deg: Vec<u16>,
}

impl NumSystem {
    pub fn new(polys: Vec<CxPoly>) -> NumSystem {
        let arity = polys.first().map(|p| p.arity()).unwrap_or(0);
        let jac = polys
            .iter()
            .map(|p| (0..arity).map(|v| p.derivative(v)).collect())
            .collect();
        let mut max_deg = vec![0u16; arity];
        for p in &polys {
            for (v, d) in p.max_degrees().iter().enumerate() {
                max_deg[v] = max_deg[v].max(*d);
            }
        }
        NumSystem { arity, polys, jac, max_deg }
    }

    pub fn from_polynomials(polys: &[Polynomial]) -> NumSystem {
        NumSystem::new(polys.iter().map(CxPoly::from_polynomial).collect())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> &[CxPoly] {
        &self.polys
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.polys.iter().map(|p| p.total_degree()).collect()
    }

    fn table(&self) -> PowerTable {
        PowerTable::new(self.arity, self.max_deg.clone())
    }

    fn eval_into(&self, powers: &PowerTable, out: &mut [Complex64]) {
        for (i, p) in self.polys.iter().enumerate() {
            out[i] = p.eval_with(powers);
        }
    }

    fn jacobian_into(&self, powers: &PowerTable, out: &mut [Complex64]) {
        for (i, row) in self.jac.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                out[i * self.arity + j] = p.eval_with(powers);
            }
        }
    }

    /// Max |f_i(x)| over the system.
    pub fn residual(&self, x: &[Complex64]) -> f64 {
        let mut powers = self.table();
        powers.fill(x);
        self.polys
            .iter()
            .map(|p| p.eval_with(&powers).norm())
            .fold(0.0, f64::max)
    }

    /// Smallest over largest pivot magnitude in the row-pivoted LU of the
    /// Jacobian at x, or 0 when a pivot vanishes. Only meaningful for
    /// square systems; rank-deficient Jacobians show ratios at rounding
    /// noise level (~1e-16) while nonsingular ones stay far above it.
    fn jacobian_pivot_ratio(&self, x: &[Complex64]) -> f64 {
        let n = self.arity;
        debug_assert_eq!(self.polys.len(), n);
        let mut powers = self.table();
        powers.fill(x);
        let mut a = vec![Complex64::new(0.0, 0.0); n * n];
        self.jacobian_into(&powers, &mut a);
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for col in 0..n {
            let mut pivot = col;
            for row in col + 1..n {
                if a[row * n + col].norm() > a[pivot * n + col].norm() {
                    pivot = row;
                }
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                }
            }
            let p = a[col * n + col];
            let mag = p.norm();
            if mag == 0.0 {
                return 0.0;
            }
            lo = lo.min(mag);
            hi = hi.max(mag);
            for row in col + 1..n {
                let factor = a[row * n + col] / p;
                for j in col..n {
                    let sub = factor * a[col * n + j];
                    a[row * n + j] -= sub;
                }
            }
        }
        lo / hi
    }
}

/// Endpoints whose Jacobian pivot ratio falls below this are treated as
/// singular: they sit on a positive-dimensional or multiple solution set
/// rather than being honest isolated witness points.
const SINGULAR_RATIO: f64 = 1.0e-8;

/// Solves `a x = b` in place by LU with partial pivoting; `a` is n*n
/// row-major and is destroyed. Returns false on a (numerically) singular
/// pivot.
fn solve_linear(a: &mut [Complex64], b: &mut [Complex64], n: usize) -> bool {
    for col in 0..n {
        let mut piv = col;
        let mut best = a[col * n + col].norm_sqr();
        for r in col + 1..n {
            let v = a[r * n + col].norm_sqr();
            if v > best {
                best = v;
                piv = r;
            }
        }
        if best < 1.0e-280 {
            return false;
        }
        if piv != col {
            for c in 0..n {
                a.swap(col * n + c, piv * n + c);
            }
            b.swap(col, piv);
        }
        let d = a[col * n + col];
        for r in col + 1..n {
            let factor = a[r * n + col] / d;
            if factor.norm_sqr() == 0.0 {
                continue;
            }
            for c in col..n {
                let v = a[col * n + c];
                a[r * n + c] -= factor * v;
            }
            let v = b[col];
            b[r] -= factor * v;
        }
    }
    for col in (0..n).rev() {
        let mut acc = b[col];
        for c in col + 1..n {
            acc -= a[col * n + c] * b[c];
        }
        b[col] = acc / a[col * n + col];
    }
    true
}

#[derive(Clone, Debug)]
pub struct TrackerConfig {
    pub initial_step: f64,
    pub min_step: f64,
    /// Newton corrector iterations per step (default 3).
    pub max_newton: usize,
    pub corrector_tol: f64,
    /// Residual bound below which an endpoint counts as a solution.
    pub residual_tol: f64,
    /// Random unit complex when absent (drawn from the seeded RNG).
    pub gamma: Option<Complex64>,
    pub seed: u64,
    pub divergence: f64,
    pub max_steps: usize,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        TrackerConfig {
            initial_step: 0.1,
            min_step: 1.0e-10,
            max_newton: 3,
            corrector_tol: 1.0e-10,
            residual_tol: 1.0e-8,
            gamma: None,
            seed: 0,
            divergence: 1.0e8,
            max_steps: 10_000,
        }
    }
}

impl TrackerConfig {
    pub fn with_seed(seed: u64) -> Self {
        TrackerConfig { seed, ..Default::default() }
    }

    fn validate(&self) -> Result<()> {
        if !(self.min_step > 0.0 && self.min_step <= self.initial_step && self.initial_step <= 1.0)
        {
            return Err(Error::Invalid(
                "tracker steps must satisfy 0 < min <= initial <= 1".into(),
            ));
        }
        if self.corrector_tol <= 0.0 || self.residual_tol <= 0.0 {
            return Err(Error::Invalid("tracker tolerances must be positive".into()));
        }
        Ok(())
    }

    fn resolve_gamma(&self, rng: &mut ChaCha8Rng) -> Complex64 {
        self.gamma.unwrap_or_else(|| {
            let angle: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
            Complex64::new(angle.cos(), angle.sin())
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathStatus {
    Converged,
    Diverged,
    StepLimit,
    MinStep,
}

#[derive(Clone, Debug)]
pub struct PathResult {
    pub status: PathStatus,
    pub point: Vec<Complex64>,
    pub residual: f64,
    pub steps: usize,
}

#[derive(Clone, Debug)]
pub struct ComplexPoint {
    pub coordinates: Vec<Complex64>,
    pub residual: f64,
}

/// Linear homotopy H(x,t) = (1-t) target(x) + t gamma start(x), tracked
/// from solutions of the start system at t = 1 to the target at t = 0.
struct Homotopy<'a> {
    start: &'a NumSystem,
    target: &'a NumSystem,
    gamma: Complex64,
}

impl Homotopy<'_> {
    /// Power table wide enough for both systems of the homotopy.
    fn table(&self) -> PowerTable {
        let mut max_deg = self.target.max_deg.clone();
        for (m, d) in max_deg.iter_mut().zip(self.start.max_deg.iter()) {
            *m = (*m).max(*d);
        }
        PowerTable::new(self.target.arity, max_deg)
    }

    fn eval(
        &self,
        powers: &PowerTable,
        t: f64,
        start_vals: &mut [Complex64],
        out: &mut [Complex64],
    ) {
        self.target.eval_into(powers, out);
        self.start.eval_into(powers, start_vals);
        for (o, s) in out.iter_mut().zip(start_vals.iter()) {
            *o = *o * (1.0 - t) + s * (self.gamma * t);
        }
    }

    /// dH/dt at fixed x.
    fn t_derivative(
        &self,
        powers: &PowerTable,
        start_vals: &mut [Complex64],
        out: &mut [Complex64],
    ) {
        self.target.eval_into(powers, out);
        self.start.eval_into(powers, start_vals);
        for (o, s) in out.iter_mut().zip(start_vals.iter()) {
            *o = s * self.gamma - *o;
        }
    }

    fn jacobian_into(&self, powers: &PowerTable, t: f64, scratch: &mut [Complex64], out: &mut [Complex64]) {
        self.target.jacobian_into(powers, out);
        self.start.jacobian_into(powers, scratch);
        let gt = self.gamma * t;
        for (o, s) in out.iter_mut().zip(scratch.iter()) {
            *o = *o * (1.0 - t) + s * gt;
        }
    }
}

fn inf_norm(x: &[Complex64]) -> f64 {
    x.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Tracks one path from t=1 to t=0, then applies a final Newton polish on
/// the target system.
fn track_one(homotopy: &Homotopy, x0: &[Complex64], cfg: &TrackerConfig) -> PathResult {
    let n = x0.len();
    let target = homotopy.target;
    let mut powers = homotopy.table();
    let mut x = x0.to_vec();
    let mut t = 1.0f64;
    let mut h = cfg.initial_step;
    let mut steps = 0usize;
    let mut jac = vec![Complex64::new(0.0, 0.0); n * n];
    let mut scratch_jac = vec![Complex64::new(0.0, 0.0); n * n];
    let mut rhs = vec![Complex64::new(0.0, 0.0); n];
    let mut start_vals = vec![Complex64::new(0.0, 0.0); n];

    let fail = |status: PathStatus, x: Vec<Complex64>, steps: usize, target: &NumSystem| {
        let residual = target.residual(&x);
        PathResult { status, point: x, residual, steps }
    };

    while t > 1.0e-15 {
        if steps >= cfg.max_steps {
            return fail(PathStatus::StepLimit, x, steps, target);
        }
        steps += 1;
        let dt = h.min(t);

        // Euler predictor: dx/dt = -J^{-1} dH/dt.
        powers.fill(&x);
        homotopy.jacobian_into(&powers, t, &mut scratch_jac, &mut jac);
        homotopy.t_derivative(&powers, &mut start_vals, &mut rhs);
        let mut a = jac.clone();
        let solvable = solve_linear(&mut a, &mut rhs, n);
        let mut x_new: Vec<Complex64> = if solvable {
            // rhs now holds -dx/dt (J dx/dt = -H_t, we solved J v = H_t).
            x.iter().zip(rhs.iter()).map(|(xi, v)| xi + v * dt).collect()
        } else {
            x.clone()
        };
        let t_new = t - dt;

        // Newton corrector at t_new.
        let mut converged = false;
        for _ in 0..cfg.max_newton {
            powers.fill(&x_new);
            homotopy.eval(&powers, t_new, &mut start_vals, &mut rhs);
            homotopy.jacobian_into(&powers, t_new, &mut scratch_jac, &mut jac);
            for v in rhs.iter_mut() {
                *v = -*v;
            }
            let mut a = jac.clone();
            if !solve_linear(&mut a, &mut rhs, n) {
                break;
            }
            let delta = inf_norm(&rhs);
            for (xi, d) in x_new.iter_mut().zip(rhs.iter()) {
                *xi += d;
            }
            if delta < cfg.corrector_tol * (1.0 + inf_norm(&x_new)) {
                converged = true;
                break;
            }
        }

        if converged && x_new.iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
            if inf_norm(&x_new) > cfg.divergence {
                return fail(PathStatus::Diverged, x_new, steps, target);
            }
            x = x_new;
            t = t_new;
            h = (h * 2.0).min(cfg.initial_step);
        } else {
            h /= 2.0;
            // The floor is relative to t so singular endgames can keep
            // halving toward t = 0 geometrically.
            if h < cfg.min_step * t.max(1.0e-10) {
                return fail(PathStatus::MinStep, x, steps, target);
            }
        }
    }

    // Polish on the target itself.
    for _ in 0..cfg.max_newton + 5 {
        powers.fill(&x);
        target.eval_into(&powers, &mut rhs);
        target.jacobian_into(&powers, &mut jac);
        for v in rhs.iter_mut() {
            *v = -*v;
        }
        let mut a = jac.clone();
        if !solve_linear(&mut a, &mut rhs, n) {
            break;
        }
        let delta = inf_norm(&rhs);
        for (xi, d) in x.iter_mut().zip(rhs.iter()) {
            *xi += d;
        }
        if delta < 1.0e-14 * (1.0 + inf_norm(&x)) {
            break;
        }
    }
    let residual = target.residual(&x);
    let status = if residual < cfg.residual_tol {
        PathStatus::Converged
    } else {
        PathStatus::MinStep
    };
    PathResult { status, point: x, residual, steps }
}

fn track_many(homotopy: &Homotopy, starts: &[Vec<Complex64>], cfg: &TrackerConfig) -> Vec<PathResult> {
    starts.par_iter().map(|s| track_one(homotopy, s, cfg)).collect()
}

/// Tracks the homotopy H(x,t) = (1-t) target + t gamma start from t=1
/// (the given solutions of `start_system`) to t=0. Failed paths come back
/// flagged with their last point rather than being dropped.
pub fn track_paths(
    start_system: &NumSystem,
    target_system: &NumSystem,
    start_points: &[Vec<Complex64>],
    cfg: &TrackerConfig,
) -> Result<Vec<PathResult>> {
    cfg.validate()?;
    let n = target_system.arity();
    if start_system.len() != n || target_system.len() != n || start_system.arity() != n {
        return Err(Error::Invalid(format!(
            "need square systems of matching size, got {}x{} start and {}x{} target",
            start_system.len(),
            start_system.arity(),
            target_system.len(),
            n
        )));
    }
    for p in start_points {
        if p.len() != n {
            return Err(Error::ArityMismatch(format!(
                "start point has {} coordinates, system has {n}",
                p.len()
            )));
        }
        let r = start_system.residual(p);
        if r > 1.0e-6 * (1.0 + inf_norm(p)) {
            return Err(Error::Invalid(format!(
                "start point residual {r:.3e} too large"
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let gamma = cfg.resolve_gamma(&mut rng);
    let homotopy = Homotopy { start: start_system, target: target_system, gamma };
    Ok(track_many(&homotopy, start_points, cfg))
}

/// Merges points whose coordinatewise distance is below `tol`, keeping the
/// first representative in input order.
pub fn dedup_points(points: &[Vec<Complex64>], tol: f64) -> Vec<usize> {
    let mut keep: Vec<usize> = Vec::new();
    'next: for (i, p) in points.iter().enumerate() {
        for &k in &keep {
            let d = p
                .iter()
                .zip(points[k].iter())
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            if d < tol {
                continue 'next;
            }
        }
        keep.push(i);
    }
    keep
}

pub const DEDUP_TOL: f64 = 1.0e-6;

/// Outcome of a total-degree solve, keeping the path statistics the
/// reports need.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub solutions: Vec<ComplexPoint>,
    pub n_paths: usize,
    pub n_failed: usize,
}

/// Solves a square system by continuation from {x_i^{d_i} - 1 = 0}: all
/// Bezout-many tuples of roots of unity are tracked and the distinct
/// converged endpoints returned.
pub fn solve_total_degree(system: &NumSystem, cfg: &TrackerConfig) -> Result<SolveOutcome> {
    cfg.validate()?;
    let n = system.arity();
    if system.len() != n || n == 0 {
        return Err(Error::Invalid(format!(
            "total-degree solve needs a square system, got {} equations in {n} variables",
            system.len()
        )));
    }
    let degrees = system.degrees();
    if degrees.iter().any(|&d| d == 0) || system.polys().iter().any(|p| p.is_zero()) {
        return Err(Error::Invalid(
            "total-degree solve rejects constant or zero equations".into(),
        ));
    }
    let start_polys: Vec<CxPoly> = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let mut e = vec![0u16; n];
            e[i] = d as u16;
            CxPoly::from_terms(
                n,
                vec![
                    (e.into_boxed_slice(), Complex64::new(1.0, 0.0)),
                    (vec![0u16; n].into_boxed_slice(), Complex64::new(-1.0, 0.0)),
                ],
            )
        })
        .collect();
    let start_system = NumSystem::new(start_polys);

    let total: usize = degrees.iter().product();
    let mut starts: Vec<Vec<Complex64>> = Vec::with_capacity(total);
    let mut index = vec![0usize; n];
    loop {
        starts.push(
            index
                .iter()
                .zip(degrees.iter())
                .map(|(&k, &d)| {
                    let angle = std::f64::consts::TAU * k as f64 / d as f64;
                    Complex64::new(angle.cos(), angle.sin())
                })
                .collect(),
        );
        let mut pos = n;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            index[pos] += 1;
            if index[pos] < degrees[pos] {
                break;
            }
            index[pos] = 0;
        }
        if index.iter().all(|&k| k == 0) {
            break;
        }
    }
    debug_assert_eq!(starts.len(), total);

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let gamma = cfg.resolve_gamma(&mut rng);
    let homotopy = Homotopy { start: &start_system, target: system, gamma };
    let results = track_many(&homotopy, &starts, cfg);

    let n_failed = results.iter().filter(|r| r.status != PathStatus::Converged).count();
    let good: Vec<&PathResult> = results.iter().filter(|r| r.status == PathStatus::Converged).collect();
    let pts: Vec<Vec<Complex64>> = good.iter().map(|r| r.point.clone()).collect();
    let solutions = dedup_points(&pts, DEDUP_TOL)
        .into_iter()
        .map(|i| ComplexPoint { coordinates: good[i].point.clone(), residual: good[i].residual })
        .collect();
    Ok(SolveOutcome { solutions, n_paths: total, n_failed })
}

/// Witness points of the system's variety against `d` generic affine
/// slices.
#[derive(Clone, Debug)]
pub struct WitnessSlice {
    pub dimension: usize,
    /// Affine forms as coefficient rows [constant, c_1, ..., c_n].
    pub slice: Vec<Vec<Complex64>>,
    pub points: Vec<ComplexPoint>,
    pub seed: u64,
    pub n_paths: usize,
    pub n_failed: usize,
}

fn random_unit(rng: &mut ChaCha8Rng) -> Complex64 {
    let angle: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
    let r: f64 = 0.5 + rng.gen::<f64>();
    Complex64::new(r * angle.cos(), r * angle.sin())
}

fn affine_form(arity: usize, coeffs: &[Complex64]) -> CxPoly {
    let mut terms = vec![(vec![0u16; arity].into_boxed_slice(), coeffs[0])];
    for v in 0..arity {
        let mut e = vec![0u16; arity];
        e[v] = 1;
        terms.push((e.into_boxed_slice(), coeffs[v + 1]));
    }
    CxPoly::from_terms(arity, terms)
}

/// Intersects the variety of `system` with `dimension` generic affine
/// hyperplanes. When the generator count does not match n - dimension, a
/// seeded random complex combination squares the system first. Endpoints
/// are kept only when they satisfy the original generators and the slices.
pub fn witness_points(
    system: &[Polynomial],
    dimension: usize,
    cfg: &TrackerConfig,
) -> Result<WitnessSlice> {
    let n = system.first().map(|p| p.arity()).unwrap_or(0);
    if system.is_empty() || dimension >= n {
        return Err(Error::DimensionOutOfRange(format!(
            "dimension {dimension} with {n} variables"
        )));
    }
    let m = system.len();
    let k = n - dimension;
    if m < k {
        return Err(Error::DimensionOutOfRange(format!(
            "cannot square {m} generators up to {k} equations"
        )));
    }
    let full = NumSystem::from_polynomials(system);
    let cx: Vec<CxPoly> = system.iter().map(CxPoly::from_polynomial).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let equations: Vec<CxPoly> = if m == k {
        cx.clone()
    } else {
        (0..k)
            .map(|_| {
                let mut acc = CxPoly::constant(n, Complex64::new(0.0, 0.0));
                for p in &cx {
                    acc = acc.add(&p.scale(random_unit(&mut rng)));
                }
                acc
            })
            .collect()
    };
    let mut slice_rows: Vec<Vec<Complex64>> = Vec::with_capacity(dimension);
    let mut target_polys = equations;
    for _ in 0..dimension {
        let coeffs: Vec<Complex64> = (0..=n).map(|_| random_unit(&mut rng)).collect();
        target_polys.push(affine_form(n, &coeffs));
        slice_rows.push(coeffs);
    }
    let slice_sys = NumSystem::new(target_polys[target_polys.len() - dimension..].to_vec());
    let target = NumSystem::new(target_polys);
    let sub_cfg = TrackerConfig { seed: rng.gen(), ..cfg.clone() };
    let outcome = solve_total_degree(&target, &sub_cfg)?;

    // Keep a solution only when it satisfies the original generators (the
    // squared system has junk zeros) and is a nonsingular isolated point
    // of the sliced system. Rank-deficient endpoints come from paths that
    // stopped on a set of the wrong dimension and their positions are not
    // reproducible, so counting them would break the degree invariance
    // between independent slices.
    let points: Vec<ComplexPoint> = outcome
        .solutions
        .into_iter()
        .filter_map(|p| {
            let scale = 1.0 + inf_norm(&p.coordinates);
            let r_orig = full.residual(&p.coordinates);
            let r_slice = if dimension > 0 { slice_sys.residual(&p.coordinates) } else { 0.0 };
            let residual = r_orig.max(r_slice);
            (residual < cfg.residual_tol * scale
                && target.jacobian_pivot_ratio(&p.coordinates) >= SINGULAR_RATIO)
                .then_some(ComplexPoint { coordinates: p.coordinates, residual })
        })
        .collect();
    Ok(WitnessSlice {
        dimension,
        slice: slice_rows,
        points,
        seed: cfg.seed,
        n_paths: outcome.n_paths,
        n_failed: outcome.n_failed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumericalAcrStatus {
    NumericalAcr,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct NumericalAcrVerdict {
    pub species: usize,
    pub status: NumericalAcrStatus,
    /// Mean of the surviving coordinate values when pinned.
    pub value: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct NumericalAcrReport {
    pub verdicts: Vec<NumericalAcrVerdict>,
    /// Dimensions at which witness points were found, per run.
    pub dimensions: Vec<Vec<usize>>,
    /// Surviving point counts per run after the boundary filter.
    pub surviving: Vec<usize>,
    pub n_paths: usize,
    pub n_failed: usize,
    pub possibly_vacuous: bool,
    /// Documents the pointwise boundary-filter deviation.
    pub note: String,
}

/// Two-slice numerical ACR detection. Witness slices are computed at every
/// feasible dimension for two independent seeds; points with any
/// coordinate within `delta` of zero are dropped (pointwise boundary
/// filter); a species is reported as numerical ACR when its coordinate
/// agrees within `delta` across every surviving point of both runs.
pub fn procedure2_numerical_acr(
    system: &[Polynomial],
    delta: f64,
    cfg: &TrackerConfig,
) -> Result<NumericalAcrReport> {
    let n = system.first().map(|p| p.arity()).unwrap_or(0);
    if n == 0 {
        return Err(Error::Invalid("empty system".into()));
    }
    let m = system.len();
    let mut survivors: Vec<Vec<Vec<Complex64>>> = Vec::with_capacity(2);
    let mut dimensions: Vec<Vec<usize>> = Vec::with_capacity(2);
    let mut n_paths = 0usize;
    let mut n_failed = 0usize;
    for run in 0..2u64 {
        let mut run_points: Vec<Vec<Complex64>> = Vec::new();
        let mut run_dims: Vec<usize> = Vec::new();
        for d in 0..n {
            if m < n - d {
                continue;
            }
            let seed = cfg
                .seed
                .wrapping_add(run)
                .wrapping_mul(0x9e3779b97f4a7c15)
                .wrapping_add(d as u64);
            let ws = witness_points(system, d, &TrackerConfig { seed, ..cfg.clone() })?;
            n_paths += ws.n_paths;
            n_failed += ws.n_failed;
            if !ws.points.is_empty() {
                run_dims.push(d);
                run_points.extend(ws.points.into_iter().map(|p| p.coordinates));
            }
        }
        let filtered: Vec<Vec<Complex64>> = run_points
            .into_iter()
            .filter(|p| p.iter().all(|c| c.norm() >= delta))
            .collect();
        survivors.push(filtered);
        dimensions.push(run_dims);
    }

    let surviving: Vec<usize> = survivors.iter().map(|s| s.len()).collect();
    let possibly_vacuous = survivors.iter().any(|s| s.is_empty());
    let all: Vec<&Vec<Complex64>> = survivors.iter().flatten().collect();
    let mut verdicts = Vec::with_capacity(n);
    for i in 0..n {
        let mut pinned = !possibly_vacuous;
        for a in &all {
            for b in &all {
                if (a[i] - b[i]).norm() >= delta {
                    pinned = false;
                }
            }
        }
        let value = pinned.then(|| all.iter().map(|p| p[i].re).sum::<f64>() / all.len() as f64);
        verdicts.push(NumericalAcrVerdict {
            species: i,
            status: if pinned {
                NumericalAcrStatus::NumericalAcr
            } else {
                NumericalAcrStatus::Inconclusive
            },
            value,
        });
    }
    Ok(NumericalAcrReport {
        verdicts,
        dimensions,
        surviving,
        n_paths,
        n_failed,
        possibly_vacuous,
        note: "boundary filter applied pointwise to all witness points per dimension, \
               not per irreducible component"
            .into(),
    })
}

/// Fritz John square system for the nearest point to `w` on the real zero
/// set of the input. Variables are x followed by multipliers l0..lm; the
/// equations are the constraints themselves, the n stationarity forms
/// l0 (x_j - w_j) + sum_i l_i df_i/dx_j, and a random affine chart
/// c . l = 1. Keeping one multiplier per generator (instead of squaring
/// the system into one residual) leaves singular real zeros isolated:
/// they solve the system on the l0 = 0 stratum, where the gradient
/// matrix drops rank.
pub fn fritz_john_system(
    system: &[Polynomial],
    w: &[num::BigRational],
    chart: &[num::BigRational],
) -> Result<Vec<Polynomial>> {
    use num::rational::BigRational;
    use num::One;
    if system.is_empty() {
        return Err(Error::Invalid("empty system".into()));
    }
    let n = system[0].arity();
    let m = system.len();
    if w.len() != n {
        return Err(Error::ArityMismatch(format!(
            "anchor point has {} coordinates, system has {n}",
            w.len()
        )));
    }
    if chart.len() != m + 1 {
        return Err(Error::ArityMismatch(format!(
            "chart has {} coefficients, need {}",
            chart.len(),
            m + 1
        )));
    }
    let big = n + m + 1;
    let map: Vec<usize> = (0..n).collect();
    let lifted: Vec<Polynomial> = system.iter().map(|f| f.map_variables(big, &map)).collect();
    let lambda0 = Polynomial::var(big, n);
    let mut eqs = lifted.clone();
    for j in 0..n {
        let xj = Polynomial::var(big, j).sub(&Polynomial::constant(big, w[j].clone()));
        let mut row = lambda0.mul(&xj);
        for (i, f) in lifted.iter().enumerate() {
            row = row.add(&Polynomial::var(big, n + 1 + i).mul(&f.derivative(j)));
        }
        eqs.push(row);
    }
    let mut chart_eq = Polynomial::constant(big, -BigRational::one());
    for (k, c) in chart.iter().enumerate() {
        chart_eq = chart_eq.add(&Polynomial::var(big, n + k).scale(c));
    }
    eqs.push(chart_eq);
    Ok(eqs)
}

#[derive(Clone, Debug)]
pub struct SamplePoint {
    pub coordinates: Vec<f64>,
    /// Max |f_i| over the input system at the point.
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct SampleOptions {
    pub epsilon: f64,
    pub delta: f64,
    pub max_rounds: usize,
    /// Rounds without new grid cells before stopping early.
    pub quiet_rounds: usize,
    pub realness: f64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            epsilon: 0.25,
            delta: 1.0e-6,
            max_rounds: 20,
            quiet_rounds: 3,
            realness: 1.0e-6,
        }
    }
}

/// Random signed rational with numerator 1..8 over denominator 4.
fn signed_quarter(rng: &mut ChaCha8Rng) -> num::BigRational {
    use num::bigint::BigInt;
    let numer = 1 + rng.gen_range(0..8) as i64;
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    num::BigRational::new(BigInt::from(sign * numer), BigInt::from(4))
}

fn dyadic_in(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> num::BigRational {
    use num::bigint::BigInt;
    use num::rational::BigRational;
    let denom = 1u64 << 20;
    let k: u64 = rng.gen_range(1..denom);
    let t = k as f64 / denom as f64;
    let v = lo + (hi - lo) * t;
    // Snap to a dyadic rational so the Fritz John system stays exact.
    let scaled = (v * denom as f64).round() as i64;
    BigRational::new(BigInt::from(scaled), BigInt::from(denom))
}

/// Damped Gauss-Newton (Levenberg) refinement of a real point against the
/// original, possibly rank-deficient, system. Steps that do not decrease
/// the residual are rejected.
fn polish_real(full: &NumSystem, x: &mut [f64], iters: usize) {
    let n = x.len();
    let m = full.len();
    let as_complex =
        |v: &[f64]| v.iter().map(|&t| Complex64::new(t, 0.0)).collect::<Vec<_>>();
    let mut fx = vec![Complex64::new(0.0, 0.0); m];
    let mut jac = vec![Complex64::new(0.0, 0.0); m * n];
    let mut powers = full.table();
    let mut best = full.residual(&as_complex(x));
    let mut mu = 1.0e-10;
    for _ in 0..iters {
        if best < 1.0e-14 {
            break;
        }
        let cx = as_complex(x);
        powers.fill(&cx);
        full.eval_into(&powers, &mut fx);
        for (i, row) in full.jac.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                jac[i * n + j] = p.eval_with(&powers);
            }
        }
        // Normal equations (J^T J + mu I) d = -J^T f; entries are real here.
        let mut accepted = false;
        for _ in 0..4 {
            let mut a = vec![Complex64::new(0.0, 0.0); n * n];
            let mut b = vec![Complex64::new(0.0, 0.0); n];
            for r in 0..n {
                for c in 0..n {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for i in 0..m {
                        acc += jac[i * n + r].conj() * jac[i * n + c];
                    }
                    a[r * n + c] = acc;
                }
                a[r * n + r] += Complex64::new(mu, 0.0);
                let mut acc = Complex64::new(0.0, 0.0);
                for i in 0..m {
                    acc -= jac[i * n + r].conj() * fx[i];
                }
                b[r] = acc;
            }
            if !solve_linear(&mut a, &mut b, n) {
                mu = (mu * 10.0).max(1.0e-8);
                continue;
            }
            let candidate: Vec<f64> =
                x.iter().zip(b.iter()).map(|(xi, d)| xi + d.re).collect();
            let r = full.residual(&as_complex(&candidate));
            if r < best {
                x.copy_from_slice(&candidate);
                best = r;
                mu = (mu * 0.3).max(1.0e-12);
                accepted = true;
                break;
            }
            mu *= 10.0;
        }
        if !accepted {
            break;
        }
    }
}

/// Generic rank of the Jacobian, estimated with full pivoting at a random
/// complex point. Identical linear dependencies among the generators
/// (conservation laws) drop this rank everywhere, not just on the variety.
fn generic_jacobian_rank(sys: &NumSystem, rng: &mut ChaCha8Rng) -> usize {
    let n = sys.arity();
    let m = sys.len();
    let x: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(1.0 + rng.gen::<f64>(), 1.0 + rng.gen::<f64>()))
        .collect();
    let mut powers = sys.table();
    powers.fill(&x);
    let mut a = vec![Complex64::new(0.0, 0.0); m * n];
    for (i, row) in sys.jac.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            a[i * n + j] = p.eval_with(&powers);
        }
    }
    let mut rank = 0usize;
    let mut top = 0.0f64;
    while rank < m.min(n) {
        let mut best = (rank, rank, 0.0f64);
        for i in rank..m {
            for j in rank..n {
                let v = a[i * n + j].norm();
                if v > best.2 {
                    best = (i, j, v);
                }
            }
        }
        if best.2 <= 1.0e-8 * top.max(1.0) {
            break;
        }
        top = top.max(best.2);
        let (pi, pj, _) = best;
        if pi != rank {
            for j in 0..n {
                a.swap(pi * n + j, rank * n + j);
            }
        }
        if pj != rank {
            for i in 0..m {
                a.swap(i * n + pj, i * n + rank);
            }
        }
        let piv = a[rank * n + rank];
        for i in (rank + 1)..m {
            let factor = a[i * n + rank] / piv;
            for j in rank..n {
                let v = a[rank * n + j];
                a[i * n + j] -= factor * v;
            }
        }
        rank += 1;
    }
    rank
}

/// Draws random anchors in the box and solves the Fritz John
/// nearest-point system for each by total-degree continuation; near-real
/// solutions are projected, polished against the original system, and
/// filtered to the box. Dependent generators are first squared up to the
/// generic Jacobian rank by random rational combinations, otherwise every
/// Fritz John solution drags a positive-dimensional multiplier fiber and
/// no path converges. Stops after `max_rounds` rounds, or earlier when
/// an epsilon/2-spaced grid over the box sees no new cells for a while.
pub fn sample_real_points(
    system: &[Polynomial],
    box_: &[(f64, f64)],
    opts: &SampleOptions,
    cfg: &TrackerConfig,
) -> Result<Vec<SamplePoint>> {
    use num::rational::BigRational;
    if system.is_empty() {
        return Err(Error::Invalid("empty system".into()));
    }
    let n = system[0].arity();
    if box_.len() != n || box_.iter().any(|&(lo, hi)| !(lo < hi)) {
        return Err(Error::Invalid("box must be a product of nondegenerate intervals".into()));
    }
    if !(opts.delta < opts.epsilon) {
        return Err(Error::Invalid("need delta < epsilon".into()));
    }
    let full = NumSystem::from_polynomials(system);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let rank = generic_jacobian_rank(&full, &mut rng);
    if rank == 0 {
        return Ok(Vec::new());
    }
    let mut points: Vec<SamplePoint> = Vec::new();
    let mut cells: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
    let mut quiet = 0usize;

    for _round in 0..opts.max_rounds {
        let w: Vec<BigRational> = box_
            .iter()
            .map(|&(lo, hi)| dyadic_in(&mut rng, lo, hi))
            .collect();
        // Square up to the generic rank: random rational combinations keep
        // the variety while spurious zeros they introduce fail the later
        // polish against the full system.
        let reduced: Vec<Polynomial> = if rank == system.len() {
            system.to_vec()
        } else {
            (0..rank)
                .map(|_| loop {
                    let mut acc = Polynomial::zero(n);
                    for f in system {
                        acc = acc.add(&f.scale(&signed_quarter(&mut rng)));
                    }
                    if !acc.is_zero() {
                        break acc;
                    }
                })
                .collect()
        };
        // Signed rational chart coefficients so no multiplier ray of the
        // rank-deficient strata is systematically orthogonal to the chart.
        let chart: Vec<BigRational> =
            (0..=reduced.len()).map(|_| signed_quarter(&mut rng)).collect();
        let fj = fritz_john_system(&reduced, &w, &chart)?;
        let target = NumSystem::from_polynomials(&fj);
        let sub_cfg = TrackerConfig { seed: rng.gen(), ..cfg.clone() };
        let outcome = solve_total_degree(&target, &sub_cfg)?;

        let mut new_cell = false;
        for r in &outcome.solutions {
            let xs = &r.coordinates[..n];
            let max_re = xs.iter().map(|c| c.re.abs()).fold(0.0, f64::max);
            let max_im = xs.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
            if max_im >= opts.realness * (1.0 + max_re) {
                continue;
            }
            let mut x: Vec<f64> = xs.iter().map(|c| c.re).collect();
            // Singular zeros only admit linear local convergence, so give
            // the damped refinement enough iterations to settle.
            polish_real(&full, &mut x, 30);
            let cx_pt: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
            let residual = full.residual(&cx_pt);
            if residual >= 1.0e-6 {
                continue;
            }
            if x.iter().zip(box_.iter()).any(|(&v, &(lo, hi))| v < lo || v > hi) {
                continue;
            }
            let dup = points.iter().any(|p| {
                p.coordinates
                    .iter()
                    .zip(x.iter())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
                    < DEDUP_TOL
            });
            if dup {
                continue;
            }
            let cell: Vec<i64> = x
                .iter()
                .zip(box_.iter())
                .map(|(&v, &(lo, _))| ((v - lo) / (opts.epsilon / 2.0)).floor() as i64)
                .collect();
            if cells.insert(cell) {
                new_cell = true;
            }
            points.push(SamplePoint { coordinates: x, residual });
        }
        if new_cell {
            quiet = 0;
        } else {
            quiet += 1;
            if quiet >= opts.quiet_rounds {
                break;
            }
        }
    }
    Ok(points)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrecludeStatus {
    NoNumericalAcr,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct PrecludeReport {
    pub status: PrecludeStatus,
    pub points: Vec<SamplePoint>,
    pub reason: String,
}

/// Numerically precludes ACR: sample real points in the box; with two or
/// more points and no coordinate agreeing across all of them (within
/// delta), ACR is ruled out at this tolerance.
pub fn procedure3_preclude(
    system: &[Polynomial],
    box_: &[(f64, f64)],
    opts: &SampleOptions,
    cfg: &TrackerConfig,
) -> Result<PrecludeReport> {
    let n = system.first().map(|p| p.arity()).unwrap_or(0);
    if box_.len() != n || box_.iter().any(|&(lo, hi)| !(0.0 < lo && lo < hi)) {
        return Err(Error::Invalid(
            "box must lie strictly inside the positive orthant".into(),
        ));
    }
    let points = sample_real_points(system, box_, opts, cfg)?;
    if points.len() <= 1 {
        return Ok(PrecludeReport {
            status: PrecludeStatus::Inconclusive,
            points,
            reason: "at most one sample point found".into(),
        });
    }
    for i in 0..n {
        let vals: Vec<f64> = points.iter().map(|p| p.coordinates[i]).collect();
        let spread = vals.iter().cloned().fold(f64::MIN, f64::max)
            - vals.iter().cloned().fold(f64::MAX, f64::min);
        if spread < opts.delta {
            return Ok(PrecludeReport {
                status: PrecludeStatus::Inconclusive,
                points,
                reason: format!("coordinate {i} agrees across all sample points"),
            });
        }
    }
    Ok(PrecludeReport {
        status: PrecludeStatus::NoNumericalAcr,
        points,
        reason: "multiple sample points differ in every coordinate".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn poly(text: &str, ns: &[String]) -> Polynomial {
        parse_polynomial(text, ns).unwrap()
    }

    #[test]
    fn tracks_a_shifted_quadratic() {
        let ns = names(&["x"]);
        let start = NumSystem::from_polynomials(&[poly("x^2 - 1", &ns)]);
        let target = NumSystem::from_polynomials(&[poly("x^2 - 4", &ns)]);
        let starts = vec![
            vec![Complex64::new(1.0, 0.0)],
            vec![Complex64::new(-1.0, 0.0)],
        ];
        let cfg = TrackerConfig::with_seed(3);
        let out = track_paths(&start, &target, &starts, &cfg).unwrap();
        assert_eq!(out.len(), 2);
        let mut ends: Vec<f64> = out
            .iter()
            .map(|r| {
                assert_eq!(r.status, PathStatus::Converged);
                assert!(r.residual < 1.0e-8);
                r.point[0].re
            })
            .collect();
        ends.sort_by(f64::total_cmp);
        assert!((ends[0] + 2.0).abs() < 1.0e-8);
        assert!((ends[1] - 2.0).abs() < 1.0e-8);
    }

    #[test]
    fn rejects_bad_start_points() {
        let ns = names(&["x"]);
        let start = NumSystem::from_polynomials(&[poly("x^2 - 1", &ns)]);
        let target = NumSystem::from_polynomials(&[poly("x^2 - 4", &ns)]);
        let starts = vec![vec![Complex64::new(5.0, 0.0)]];
        let cfg = TrackerConfig::with_seed(3);
        assert!(track_paths(&start, &target, &starts, &cfg).is_err());
    }

    #[test]
    fn solves_circle_line_intersection() {
        let ns = names(&["x", "y"]);
        let sys = NumSystem::from_polynomials(&[
            poly("x^2 + y^2 - 5", &ns),
            poly("x - y - 1", &ns),
        ]);
        let cfg = TrackerConfig::with_seed(11);
        let out = solve_total_degree(&sys, &cfg).unwrap();
        assert_eq!(out.n_paths, 2);
        assert_eq!(out.solutions.len(), 2);
        for s in &out.solutions {
            assert!(s.residual < 1.0e-10);
        }
        let mut xs: Vec<f64> = out.solutions.iter().map(|s| s.coordinates[0].re).collect();
        xs.sort_by(f64::total_cmp);
        assert!((xs[0] + 1.0).abs() < 1.0e-8);
        assert!((xs[1] - 2.0).abs() < 1.0e-8);
    }

    #[test]
    fn total_degree_is_seed_deterministic_across_thread_counts() {
        let ns = names(&["x", "y"]);
        let polys = [poly("x^2 + y^2 - 5", &ns), poly("x - y - 1", &ns)];
        let cfg = TrackerConfig::with_seed(glob_seed());
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| {
                let sys = NumSystem::from_polynomials(&polys);
                solve_total_degree(&sys, &cfg).unwrap()
            })
        };
        let a = run(1);
        let b = run(4);
        assert_eq!(a.solutions.len(), b.solutions.len());
        for (p, q) in a.solutions.iter().zip(b.solutions.iter()) {
            for (u, v) in p.coordinates.iter().zip(q.coordinates.iter()) {
                assert_eq!(u.re.to_bits(), v.re.to_bits());
                assert_eq!(u.im.to_bits(), v.im.to_bits());
            }
        }
    }

    fn glob_seed() -> u64 {
        42
    }

    #[test]
    fn witness_counts_the_circle() {
        let ns = names(&["x", "y"]);
        let sys = [poly("x^2 + y^2 - 1", &ns)];
        let cfg = TrackerConfig::with_seed(7);
        let ws = witness_points(&sys, 1, &cfg).unwrap();
        assert_eq!(ws.points.len(), 2);
        let cfg2 = TrackerConfig::with_seed(8);
        let ws2 = witness_points(&sys, 1, &cfg2).unwrap();
        assert_eq!(ws2.points.len(), 2);
    }

    #[test]
    fn witness_slices_a_pinned_hyperplane() {
        let ns = names(&["A", "B"]);
        let sys = [poly("A - 1", &ns)];
        let cfg = TrackerConfig::with_seed(5);
        let ws = witness_points(&sys, 1, &cfg).unwrap();
        assert_eq!(ws.points.len(), 1);
        assert!((ws.points[0].coordinates[0].re - 1.0).abs() < 1.0e-8);
        assert!(ws.points[0].coordinates[0].im.abs() < 1.0e-8);
    }

    #[test]
    fn procedure2_pins_a_coordinate() {
        let ns = names(&["A"]);
        let sys = [poly("A - 1", &ns)];
        let cfg = TrackerConfig::with_seed(12);
        let report = procedure2_numerical_acr(&sys, 1.0e-8, &cfg).unwrap();
        assert_eq!(report.verdicts[0].status, NumericalAcrStatus::NumericalAcr);
        assert!((report.verdicts[0].value.unwrap() - 1.0).abs() < 1.0e-8);
        assert_eq!(report.surviving[0], report.surviving[1]);
    }

    #[test]
    fn procedure2_sees_disagreeing_sheets() {
        // x_B (1 - x_A^2) = 0: witness points on x_A = 1 and x_A = -1
        // survive the boundary filter and disagree in coordinate A.
        let ns = names(&["A", "B"]);
        let sys = [poly("B - A^2*B", &ns), poly("A^2*B - B", &ns)];
        let cfg = TrackerConfig::with_seed(2);
        let report = procedure2_numerical_acr(&sys, 1.0e-8, &cfg).unwrap();
        assert!(report
            .verdicts
            .iter()
            .all(|v| v.status == NumericalAcrStatus::Inconclusive));
        assert!(!report.possibly_vacuous);
    }

    #[test]
    fn fritz_john_shape_and_nearest_point() {
        use num::bigint::BigInt;
        use num::rational::BigRational;
        use num::Zero;
        let ns = names(&["x"]);
        let sys = [poly("x - 2", &ns)];
        let w = vec![BigRational::zero()];
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let fj = fritz_john_system(&sys, &w, &[half, third]).unwrap();
        // f, one stationarity form, one chart equation in (x, l0, l1).
        assert_eq!(fj.len(), 3);
        assert!(fj.iter().all(|p| p.arity() == 3));
        assert_eq!(fj[0].total_degree(), Some(1));

        // The sampling pipeline must land on the unique zero x = 2.
        let opts = SampleOptions { max_rounds: 4, ..Default::default() };
        let cfg = TrackerConfig::with_seed(9);
        let pts = sample_real_points(&sys, &[(1.0, 3.0)], &opts, &cfg).unwrap();
        assert!(!pts.is_empty());
        for p in &pts {
            assert!((p.coordinates[0] - 2.0).abs() < 1.0e-8);
        }
    }

    #[test]
    fn sampling_reaches_an_isolated_singular_zero() {
        // (x-1)^2 + (y-2)^2 vanishes at a single real point where its
        // gradient also vanishes; only the l0 = 0 stratum of the Fritz
        // John system exposes it.
        let ns = names(&["x", "y"]);
        let sys = [poly("x^2 - 2*x + y^2 - 4*y + 5", &ns)];
        let opts = SampleOptions { max_rounds: 4, ..Default::default() };
        let cfg = TrackerConfig::with_seed(12);
        let pts = sample_real_points(&sys, &[(0.0, 2.0), (1.0, 3.0)], &opts, &cfg).unwrap();
        assert!(!pts.is_empty());
        for p in &pts {
            assert!((p.coordinates[0] - 1.0).abs() < 1.0e-3);
            assert!((p.coordinates[1] - 2.0).abs() < 1.0e-3);
        }
    }

    #[test]
    fn samples_a_vertical_line_in_the_unit_box() {
        let ns = names(&["x", "y"]);
        let sys = [poly("x - 1/2", &ns)];
        let opts = SampleOptions { max_rounds: 6, ..Default::default() };
        let cfg = TrackerConfig::with_seed(21);
        let pts = sample_real_points(&sys, &[(0.0, 1.0), (0.0, 1.0)], &opts, &cfg).unwrap();
        assert!(!pts.is_empty());
        for p in &pts {
            assert!((p.coordinates[0] - 0.5).abs() < 1.0e-6);
            assert!(p.residual < 1.0e-6);
        }
    }

    #[test]
    fn empty_real_variety_samples_nothing() {
        let ns = names(&["x", "y"]);
        let sys = [poly("x^2 + y^2 + 1", &ns)];
        let opts = SampleOptions { max_rounds: 3, ..Default::default() };
        let cfg = TrackerConfig::with_seed(4);
        let pts = sample_real_points(&sys, &[(0.1, 1.0), (0.1, 1.0)], &opts, &cfg).unwrap();
        assert!(pts.is_empty());
    }

    #[test]
    fn preclude_is_inconclusive_on_a_pinned_line() {
        // The two generators are identical up to sign, so sampling has to
        // square the system up to rank one before the multipliers isolate.
        let ns = names(&["A", "B"]);
        let sys = [poly("B - A^2*B", &ns), poly("A^2*B - B", &ns)];
        let opts = SampleOptions { max_rounds: 5, ..Default::default() };
        let cfg = TrackerConfig::with_seed(17);
        let report =
            procedure3_preclude(&sys, &[(0.5, 1.5), (0.5, 1.5)], &opts, &cfg).unwrap();
        assert_eq!(report.status, PrecludeStatus::Inconclusive);
        assert!(report.points.len() >= 2, "found {} points", report.points.len());
        for p in &report.points {
            assert!((p.coordinates[0] - 1.0).abs() < 1.0e-6);
        }
    }

    #[test]
    fn preclude_validates_the_box() {
        let ns = names(&["A", "B"]);
        let sys = [poly("A - 1", &ns)];
        let opts = SampleOptions::default();
        let cfg = TrackerConfig::with_seed(1);
        assert!(procedure3_preclude(&sys, &[(0.0, 1.0), (0.5, 1.5)], &opts, &cfg).is_err());
        assert!(procedure3_preclude(&sys, &[(0.5, 1.5)], &opts, &cfg).is_err());
    }
}
