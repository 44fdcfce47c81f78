//! `crn`: concentration-robustness analysis for mass-action reaction
//! networks.
//!
//! Every verb reads a `.crn` file, prints a JSON report (or text with
//! `--pretty`) and exits with 0 for a conclusive answer, 2 for an
//! inconclusive one and 1 on errors. Reports embed a manifest with the
//! input hash, seed, tool version and step timings, and are byte-stable
//! across reruns up to the timing fields.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use num::rational::BigRational;
use num::ToPrimitive;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crn_core::acr::{
    self, acr_candidates, analyze, cacr_all, jacobian_minor_augment, positive_restriction,
    restriction_names, AnalyzeOptions,
};
use crn_core::ideal::{eliminate, Ideal};
use crn_core::network::{parse_network, Network};
use crn_core::numeric::{
    procedure2_numerical_acr, procedure3_preclude, sample_real_points, witness_points,
    NumericalAcrStatus, PrecludeStatus, SampleOptions, TrackerConfig,
};
use crn_core::poly::{parse_polynomial, rational_to_text, MonomialOrder, Polynomial};
use crn_core::realroots::RootLocation;

#[derive(Parser)]
#[command(name = "crn", version, about = "Concentration robustness analysis for reaction networks")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Verb {
    /// Parse a network and report species, reactions and conservation laws.
    Parse { file: PathBuf },
    /// Print the mass-action steady-state polynomials.
    Odes { file: PathBuf },
    /// Reduced Groebner basis of the steady-state ideal.
    Gb {
        file: PathBuf,
        /// Monomial order: "grevlex", "lex", "lex:B,C,A" or "elim:B,C".
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Saturate the steady-state ideal by the product of all species.
    Saturate { file: PathBuf },
    /// Eliminate all species except the ones listed from the ideal.
    Eliminate {
        file: PathBuf,
        /// Species to keep, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<String>,
    },
    /// Decide absolute concentration robustness per species.
    Acr {
        file: PathBuf,
        /// Restrict the report (and the exit code) to one species.
        #[arg(long)]
        species: Option<String>,
        /// Enable the decomposition heuristic for positive-dimensional
        /// varieties (verdicts are labeled as heuristic).
        #[arg(long)]
        heuristic: bool,
        /// Run the witness-point procedure instead of the exact pipeline.
        #[arg(long)]
        numerical: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Agreement and boundary tolerance for --numerical.
        #[arg(long, default_value_t = 1.0e-8)]
        delta: f64,
    },
    /// List candidate robustness values per species.
    Candidates {
        file: PathBuf,
        #[arg(long)]
        species: Option<String>,
    },
    /// Decide robustness over nonzero complex steady states.
    Cacr {
        file: PathBuf,
        #[arg(long)]
        species: Option<String>,
    },
    /// Positive-restriction ideal, optionally with Jacobian-minor
    /// augmentation at a target dimension.
    Jideal {
        file: PathBuf,
        /// Replace the steady-state ideal by component generators,
        /// semicolon-separated polynomials in the species variables.
        #[arg(long)]
        component: Option<String>,
        /// Component dimension for --augment.
        #[arg(long)]
        dim: Option<usize>,
        /// Add the Jacobian minors that cut out singular points.
        #[arg(long)]
        augment: bool,
    },
    /// Witness points of the steady-state variety at a dimension.
    Witness {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sample real steady-state points inside a box.
    Sample {
        file: PathBuf,
        /// "lo,hi" for all species or "lo1,hi1,lo2,hi2,..." per species.
        #[arg(long, name = "box")]
        r#box: String,
        #[arg(long, default_value_t = 0.25)]
        epsilon: f64,
        #[arg(long, default_value_t = 1.0e-6)]
        delta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        max_rounds: usize,
    },
    /// Preclude robustness from sampled positive steady states.
    Preclude {
        file: PathBuf,
        /// "lo,hi" for all species or "lo1,hi1,lo2,hi2,..." per species.
        #[arg(long, name = "box")]
        r#box: String,
        #[arg(long, default_value_t = 0.25)]
        epsilon: f64,
        #[arg(long, default_value_t = 1.0e-6)]
        delta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        max_rounds: usize,
    },
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Verb::Parse { .. } => "parse",
            Verb::Odes { .. } => "odes",
            Verb::Gb { .. } => "gb",
            Verb::Saturate { .. } => "saturate",
            Verb::Eliminate { .. } => "eliminate",
            Verb::Acr { .. } => "acr",
            Verb::Candidates { .. } => "candidates",
            Verb::Cacr { .. } => "cacr",
            Verb::Jideal { .. } => "jideal",
            Verb::Witness { .. } => "witness",
            Verb::Sample { .. } => "sample",
            Verb::Preclude { .. } => "preclude",
        }
    }

    fn file(&self) -> &PathBuf {
        match self {
            Verb::Parse { file }
            | Verb::Odes { file }
            | Verb::Gb { file, .. }
            | Verb::Saturate { file }
            | Verb::Eliminate { file, .. }
            | Verb::Acr { file, .. }
            | Verb::Candidates { file, .. }
            | Verb::Cacr { file, .. }
            | Verb::Jideal { file, .. }
            | Verb::Witness { file, .. }
            | Verb::Sample { file, .. }
            | Verb::Preclude { file, .. } => file,
        }
    }

    fn seed(&self) -> Option<u64> {
        match self {
            Verb::Acr { numerical: true, seed, .. }
            | Verb::Witness { seed, .. }
            | Verb::Sample { seed, .. }
            | Verb::Preclude { seed, .. } => Some(*seed),
            _ => None,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

struct Outcome {
    result: Value,
    text: String,
    exit: i32,
}

fn run(cli: &Cli) -> anyhow::Result<i32> {
    let started = Instant::now();
    let path = cli.verb.file();
    let bytes = std::fs::read(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let source = String::from_utf8(bytes.clone()).context("input is not UTF-8")?;
    let net = parse_network(&source)?;
    let mut timings: BTreeMap<String, u128> = BTreeMap::new();

    let out = dispatch(&cli.verb, &net, &mut timings)?;
    timings.insert("total".into(), started.elapsed().as_millis());

    if cli.pretty {
        println!("{}", out.text.trim_end());
    } else {
        let report = json!({
            "verb": cli.verb.name(),
            "manifest": {
                "input": path.display().to_string(),
                "input_sha256": hex_digest(&bytes),
                "seed": cli.verb.seed(),
                "version": env!("CARGO_PKG_VERSION"),
                "timings_ms": timings,
            },
            "result": out.result,
        });
        println!("{}", serde_json::to_string_pretty(&report)?);
    }
    Ok(out.exit)
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn dispatch(verb: &Verb, net: &Network, timings: &mut BTreeMap<String, u128>) -> anyhow::Result<Outcome> {
    match verb {
        Verb::Parse { .. } => parse_report(net),
        Verb::Odes { .. } => odes_report(net),
        Verb::Gb { order, .. } => gb_report(net, order, timings),
        Verb::Saturate { .. } => saturate_report(net, timings),
        Verb::Eliminate { keep, .. } => eliminate_report(net, keep, timings),
        Verb::Acr { species, heuristic, numerical, seed, delta, .. } => {
            if *numerical {
                numerical_acr_report(net, species.as_deref(), *seed, *delta, timings)
            } else {
                acr_report(net, species.as_deref(), *heuristic, timings)
            }
        }
        Verb::Candidates { species, .. } => candidates_report(net, species.as_deref()),
        Verb::Cacr { species, .. } => cacr_report(net, species.as_deref()),
        Verb::Jideal { component, dim, augment, .. } => {
            jideal_report(net, component.as_deref(), *dim, *augment, timings)
        }
        Verb::Witness { dim, seed, .. } => witness_report(net, *dim, *seed, timings),
        Verb::Sample { r#box, epsilon, delta, seed, max_rounds, .. } => {
            sample_report(net, r#box, *epsilon, *delta, *seed, *max_rounds, timings)
        }
        Verb::Preclude { r#box, epsilon, delta, seed, max_rounds, .. } => {
            preclude_report(net, r#box, *epsilon, *delta, *seed, *max_rounds, timings)
        }
    }
}

fn species_index(net: &Network, name: &str) -> anyhow::Result<usize> {
    net.species_index(name)
        .ok_or_else(|| anyhow::anyhow!("unknown species '{name}'"))
}

fn parse_order(text: &str, net: &Network) -> anyhow::Result<MonomialOrder> {
    let n = net.num_species();
    let (kind, names) = match text.split_once(':') {
        Some((k, rest)) => (k, Some(rest)),
        None => (text, None),
    };
    let seq = |names: Option<&str>| -> anyhow::Result<Vec<usize>> {
        match names {
            None => Ok((0..n).collect()),
            Some(list) => list
                .split(',')
                .map(|s| species_index(net, s.trim()))
                .collect(),
        }
    };
    let order = match kind {
        "lex" => MonomialOrder::Lex(seq(names)?),
        "grevlex" => MonomialOrder::GrevLex(seq(names)?),
        "elim" => {
            let front = seq(names)?;
            if front.len() == n {
                bail!("elim order needs a proper subset of species");
            }
            let back: Vec<usize> = (0..n).filter(|v| !front.contains(v)).collect();
            MonomialOrder::eliminating(front, back)
        }
        other => bail!("unknown order '{other}' (use lex, grevlex or elim)"),
    };
    order.validate(n)?;
    Ok(order)
}

fn parse_box(text: &str, n: usize) -> anyhow::Result<Vec<(f64, f64)>> {
    let vals: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|e| anyhow::anyhow!("bad box bound '{s}': {e}")))
        .collect::<anyhow::Result<_>>()?;
    let pairs: Vec<(f64, f64)> = if vals.len() == 2 {
        vec![(vals[0], vals[1]); n]
    } else if vals.len() == 2 * n {
        vals.chunks(2).map(|c| (c[0], c[1])).collect()
    } else {
        bail!(
            "--box takes 'lo,hi' or {} per-species bounds, found {} values",
            2 * n,
            vals.len()
        );
    };
    Ok(pairs)
}

fn location_json(loc: &RootLocation) -> Value {
    if loc.is_exact() {
        json!({
            "exact": rational_to_text(&loc.lo),
            "approx": rational_approx(&loc.lo),
        })
    } else {
        json!({
            "lo": rational_to_text(&loc.lo),
            "hi": rational_to_text(&loc.hi),
            "approx": rational_approx(&loc.midpoint()),
        })
    }
}

fn location_text(loc: &RootLocation) -> String {
    if loc.is_exact() {
        rational_to_text(&loc.lo)
    } else {
        format!("({}, {})", rational_to_text(&loc.lo), rational_to_text(&loc.hi))
    }
}

fn rational_approx(r: &BigRational) -> f64 {
    let num = r.numer().to_f64().unwrap_or(f64::NAN);
    let den = r.denom().to_f64().unwrap_or(f64::NAN);
    num / den
}

fn poly_texts(gens: &[Polynomial], names: &[String], order: &MonomialOrder) -> Vec<String> {
    gens.iter().map(|g| g.to_text(names, order)).collect()
}

fn parse_report(net: &Network) -> anyhow::Result<Outcome> {
    let laws: Vec<Vec<String>> = net
        .conservation_laws()
        .iter()
        .map(|row| row.iter().map(rational_to_text).collect())
        .collect();
    let result = json!({
        "network": net.to_json(),
        "conservation_laws": laws,
        "num_species": net.num_species(),
        "num_reactions": net.reactions.len(),
    });
    Ok(Outcome { result, text: net.pretty(), exit: 0 })
}

fn odes_report(net: &Network) -> anyhow::Result<Outcome> {
    let order = MonomialOrder::grevlex(net.num_species());
    let polys = net.steady_state_polynomials();
    let texts = poly_texts(&polys, &net.species, &order);
    let lines: Vec<String> = net
        .species
        .iter()
        .zip(texts.iter())
        .map(|(s, t)| format!("d{s}/dt = {t}"))
        .collect();
    let result = json!({ "species": net.species, "odes": texts });
    Ok(Outcome { result, text: lines.join("\n"), exit: 0 })
}

fn gb_report(net: &Network, order_text: &str, timings: &mut BTreeMap<String, u128>) -> anyhow::Result<Outcome> {
    let order = parse_order(order_text, net)?;
    let t = Instant::now();
    let gb = net.steady_state_ideal().groebner(&order)?;
    timings.insert("groebner".into(), t.elapsed().as_millis());
    let texts = poly_texts(&gb.elements, &net.species, &order);
    let result = json!({ "order": order_text, "elements": texts });
    Ok(Outcome { result, text: texts.join("\n"), exit: 0 })
}

fn saturate_report(net: &Network, timings: &mut BTreeMap<String, u128>) -> anyhow::Result<Outcome> {
    let t = Instant::now();
    let sat = acr::saturate_by_variables(&net.steady_state_ideal())?;
    let sat = sat.canonical()?;
    timings.insert("saturate".into(), t.elapsed().as_millis());
    let order = MonomialOrder::grevlex(net.num_species());
    let texts = poly_texts(sat.gens(), &net.species, &order);
    let result = json!({ "elements": texts });
    Ok(Outcome { result, text: texts.join("\n"), exit: 0 })
}

fn eliminate_report(
    net: &Network,
    keep: &[String],
    timings: &mut BTreeMap<String, u128>,
) -> anyhow::Result<Outcome> {
    let keep_idx: Vec<usize> = keep
        .iter()
        .map(|s| species_index(net, s))
        .collect::<anyhow::Result<_>>()?;
    let t = Instant::now();
    let elim = eliminate(&net.steady_state_ideal(), &keep_idx)?;
    timings.insert("eliminate".into(), t.elapsed().as_millis());
    let order = MonomialOrder::grevlex(net.num_species());
    let texts = poly_texts(elim.gens(), &net.species, &order);
    let result = json!({ "keep": keep, "elements": texts });
    Ok(Outcome { result, text: texts.join("\n"), exit: 0 })
}

fn acr_report(
    net: &Network,
    species: Option<&str>,
    heuristic: bool,
    timings: &mut BTreeMap<String, u128>,
) -> anyhow::Result<Outcome> {
    let opts = AnalyzeOptions { heuristic, ..Default::default() };
    let t = Instant::now();
    let mut verdicts = analyze(net, &opts)?;
    timings.insert("analyze".into(), t.elapsed().as_millis());
    if let Some(name) = species {
        let idx = species_index(net, name)?;
        verdicts.retain(|v| v.species == idx);
    }
    let rows: Vec<Value> = verdicts
        .iter()
        .map(|v| {
            json!({
                "species": net.species[v.species],
                "status": v.status.as_str(),
                "value": v.value.as_ref().map(location_json),
                "candidates": v.candidates.iter().map(location_json).collect::<Vec<_>>(),
                "method": v.method,
                "certificate": v.certificate,
            })
        })
        .collect();
    let lines: Vec<String> = verdicts
        .iter()
        .map(|v| {
            let value = v
                .value
                .as_ref()
                .map(|l| format!(" value={}", location_text(l)))
                .unwrap_or_default();
            format!(
                "{}: {}{} [{}]",
                net.species[v.species],
                v.status.as_str(),
                value,
                v.method
            )
        })
        .collect();
    let conclusive = verdicts.iter().all(|v| v.status.is_conclusive());
    Ok(Outcome {
        result: json!({ "verdicts": rows }),
        text: lines.join("\n"),
        exit: if conclusive { 0 } else { 2 },
    })
}

fn numerical_acr_report(
    net: &Network,
    species: Option<&str>,
    seed: u64,
    delta: f64,
    timings: &mut BTreeMap<String, u128>,
) -> anyhow::Result<Outcome> {
    let cfg = TrackerConfig::with_seed(seed);
    let t = Instant::now();
    let report = procedure2_numerical_acr(&net.steady_state_polynomials(), delta, &cfg)?;
    timings.insert("witness".into(), t.elapsed().as_millis());
    let keep = match species {
        Some(name) => Some(species_index(net, name)?),
        None => None,
    };
    let rows: Vec<Value> = report
        .verdicts
        .iter()
        .filter(|v| keep.map_or(true, |k| v.species == k))
        .map(|v| {
            json!({
                "species": net.species[v.species],
                "status": match v.status {
                    NumericalAcrStatus::NumericalAcr => "NUMERICAL_ACR",
                    NumericalAcrStatus::Inconclusive => "INCONCLUSIVE",
                },
                "value": v.value,
            })
        })
        .collect();
    let mut lines: Vec<String> = Vec::new();
    if report.possibly_vacuous {
        lines.push("Inconclusive (possibly vacuous)".into());
    }
    for v in &report.verdicts {
        if keep.map_or(false, |k| v.species != k) {
            continue;
        }
        match v.status {
            NumericalAcrStatus::NumericalAcr => lines.push(format!(
                "Numerical ACR in {} (value ~ {:.6})",
                net.species[v.species],
                v.value.unwrap_or(f64::NAN)
            )),
            NumericalAcrStatus::Inconclusive => {
                lines.push(format!("Inconclusive for {}", net.species[v.species]))
            }
        }
    }
    let pinned = report
        .verdicts
        .iter()
        .filter(|v| keep.map_or(true, |k| v.species == k))
        .any(|v| v.status == NumericalAcrStatus::NumericalAcr);
    let result = json!({
        "mode": "numerical",
        "delta": delta,
        "verdicts": rows,
        "dimensions": report.dimensions,
        "surviving": report.surviving,
        "n_paths": report.n_paths,
        "n_failed": report.n_failed,
        "possibly_vacuous": report.possibly_vacuous,
        "note": report.note,
    });
    Ok(Outcome {
        result,
        text: lines.join("\n"),
        exit: if pinned { 0 } else { 2 },
    })
}

fn candidates_report(net: &Network, species: Option<&str>) -> anyhow::Result<Outcome> {
    let opts = AnalyzeOptions::default();
    let report = acr_candidates(&net.steady_state_ideal(), &opts.interval_width)?;
    let keep = match species {
        Some(name) => Some(species_index(net, name)?),
        None => None,
    };
    let rows: Vec<Value> = report
        .candidates
        .iter()
        .filter(|c| keep.map_or(true, |k| c.species == k))
        .map(|c| {
            json!({
                "species": net.species[c.species],
                "value": location_json(&c.value),
            })
        })
        .collect();
    let mut lines: Vec<String> = report
        .candidates
        .iter()
        .filter(|c| keep.map_or(true, |k| c.species == k))
        .map(|c| format!("({}, {})", net.species[c.species], location_text(&c.value)))
        .collect();
    if report.vacuous_hint {
        lines.push("vacuity hint: the network may have no positive steady states".into());
    }
    let result = json!({
        "candidates": rows,
        "vacuous_hint": report.vacuous_hint,
    });
    Ok(Outcome { result, text: lines.join("\n"), exit: 0 })
}

fn cacr_report(net: &Network, species: Option<&str>) -> anyhow::Result<Outcome> {
    let verdicts = cacr_all(net)?;
    let keep = match species {
        Some(name) => Some(species_index(net, name)?),
        None => None,
    };
    let order = MonomialOrder::grevlex(net.num_species());
    let rows: Vec<Value> = verdicts
        .iter()
        .filter(|v| keep.map_or(true, |k| v.species == k))
        .map(|v| {
            json!({
                "species": net.species[v.species],
                "status": v.status.as_str(),
                "value": v.value.as_ref().map(rational_to_text),
                "generator": v.generator.as_ref().map(|g| g.to_text(&net.species, &order)),
            })
        })
        .collect();
    let lines: Vec<String> = verdicts
        .iter()
        .filter(|v| keep.map_or(true, |k| v.species == k))
        .map(|v| {
            let value = v
                .value
                .as_ref()
                .map(|r| format!(" value={}", rational_to_text(r)))
                .unwrap_or_default();
            format!("{}: {}{}", net.species[v.species], v.status.as_str(), value)
        })
        .collect();
    Ok(Outcome {
        result: json!({ "verdicts": rows }),
        text: lines.join("\n"),
        exit: 0,
    })
}

fn jideal_report(
    net: &Network,
    component: Option<&str>,
    dim: Option<usize>,
    augment: bool,
    timings: &mut BTreeMap<String, u128>,
) -> anyhow::Result<Outcome> {
    let base = match component {
        Some(text) => {
            let gens: Vec<Polynomial> = text
                .split(';')
                .map(|s| parse_polynomial(s.trim(), &net.species))
                .collect::<crn_core::Result<_>>()?;
            Ideal::new(net.num_species(), gens)
        }
        None => net.steady_state_ideal(),
    };
    let restricted = positive_restriction(&base);
    let ideal = if augment {
        let d = dim.ok_or_else(|| anyhow::anyhow!("--augment requires --dim"))?;
        jacobian_minor_augment(&restricted, d)?
    } else {
        restricted
    };
    let names = restriction_names(&net.species);
    let order = MonomialOrder::grevlex(ideal.arity());
    let t = Instant::now();
    let gb = ideal.groebner(&order)?;
    timings.insert("groebner".into(), t.elapsed().as_millis());
    let gens = poly_texts(ideal.gens(), &names, &order);
    let basis = poly_texts(&gb.elements, &names, &order);
    let result = json!({
        "variables": names,
        "augmented": augment,
        "dim": dim,
        "generators": gens,
        "groebner": basis,
    });
    let text = format!("generators:\n{}\ngroebner:\n{}", gens.join("\n"), basis.join("\n"));
    Ok(Outcome { result, text, exit: 0 })
}

fn witness_report(
    net: &Network,
    dim: usize,
    seed: u64,
    timings: &mut BTreeMap<String, u128>,
) -> anyhow::Result<Outcome> {
    let cfg = TrackerConfig::with_seed(seed);
    let t = Instant::now();
    let ws = witness_points(&net.steady_state_polynomials(), dim, &cfg)?;
    timings.insert("track".into(), t.elapsed().as_millis());
    let points: Vec<Value> = ws
        .points
        .iter()
        .map(|p| {
            json!({
                "coords": p.coordinates.iter().map(|c| json!({"re": c.re, "im": c.im})).collect::<Vec<_>>(),
                "residual": p.residual,
            })
        })
        .collect();
    let result = json!({
        "dimension": ws.dimension,
        "seed": ws.seed,
        "n_paths": ws.n_paths,
        "n_failed": ws.n_failed,
        "points": points,
    });
    let mut lines = vec![format!(
        "dimension {}: {} witness points ({} paths, {} failed)",
        ws.dimension,
        ws.points.len(),
        ws.n_paths,
        ws.n_failed
    )];
    for p in &ws.points {
        let coords: Vec<String> = p
            .coordinates
            .iter()
            .map(|c| format!("{:.6}{:+.6}i", c.re, c.im))
            .collect();
        lines.push(format!("  ({})", coords.join(", ")));
    }
    Ok(Outcome { result, text: lines.join("\n"), exit: 0 })
}

type SampleRun = (Vec<(f64, f64)>, SampleOptions, TrackerConfig);

fn sample_setup(
    net: &Network,
    box_text: &str,
    epsilon: f64,
    delta: f64,
    seed: u64,
    max_rounds: usize,
) -> anyhow::Result<SampleRun> {
    let box_ = parse_box(box_text, net.num_species())?;
    let opts = SampleOptions { epsilon, delta, max_rounds, ..Default::default() };
    Ok((box_, opts, TrackerConfig::with_seed(seed)))
}

fn sample_points_json(points: &[crn_core::numeric::SamplePoint]) -> Vec<Value> {
    points
        .iter()
        .map(|p| json!({ "coords": p.coordinates, "residual": p.residual }))
        .collect()
}

fn sample_point_lines(net: &Network, points: &[crn_core::numeric::SamplePoint]) -> Vec<String> {
    points
        .iter()
        .map(|p| {
            let coords: Vec<String> = net
                .species
                .iter()
                .zip(p.coordinates.iter())
                .map(|(s, v)| format!("{s}={v:.6}"))
                .collect();
            format!("  ({})", coords.join(", "))
        })
        .collect()
}

fn sample_report(
    net: &Network,
    box_text: &str,
    epsilon: f64,
    delta: f64,
    seed: u64,
    max_rounds: usize,
    timings: &mut BTreeMap<String, u128>,
) -> anyhow::Result<Outcome> {
    let (box_, opts, cfg) = sample_setup(net, box_text, epsilon, delta, seed, max_rounds)?;
    let t = Instant::now();
    let points = sample_real_points(&net.steady_state_polynomials(), &box_, &opts, &cfg)?;
    timings.insert("sample".into(), t.elapsed().as_millis());
    let result = json!({
        "box": box_.iter().map(|&(lo, hi)| json!([lo, hi])).collect::<Vec<_>>(),
        "epsilon": epsilon,
        "delta": delta,
        "count": points.len(),
        "points": sample_points_json(&points),
    });
    let mut lines = vec![format!("{} sample points", points.len())];
    lines.extend(sample_point_lines(net, &points));
    Ok(Outcome { result, text: lines.join("\n"), exit: 0 })
}

fn preclude_report(
    net: &Network,
    box_text: &str,
    epsilon: f64,
    delta: f64,
    seed: u64,
    max_rounds: usize,
    timings: &mut BTreeMap<String, u128>,
) -> anyhow::Result<Outcome> {
    let (box_, opts, cfg) = sample_setup(net, box_text, epsilon, delta, seed, max_rounds)?;
    let t = Instant::now();
    let report = procedure3_preclude(&net.steady_state_polynomials(), &box_, &opts, &cfg)?;
    timings.insert("sample".into(), t.elapsed().as_millis());
    let status = match report.status {
        PrecludeStatus::NoNumericalAcr => "No Numerical ACR",
        PrecludeStatus::Inconclusive => "Inconclusive",
    };
    let result = json!({
        "status": status,
        "reason": report.reason,
        "count": report.points.len(),
        "points": sample_points_json(&report.points),
    });
    let mut lines = vec![format!("{status} ({})", report.reason)];
    lines.extend(sample_point_lines(net, &report.points));
    Ok(Outcome {
        result,
        text: lines.join("\n"),
        exit: match report.status {
            PrecludeStatus::NoNumericalAcr => 0,
            PrecludeStatus::Inconclusive => 2,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net() -> Network {
        parse_network("A + B -> 2B ; 1\nB -> A ; 1\n").unwrap()
    }

    #[test]
    fn orders_parse_by_name() {
        let net = net();
        assert!(matches!(
            parse_order("lex:B,A", &net).unwrap(),
            MonomialOrder::Lex(seq) if seq == vec![1, 0]
        ));
        assert!(matches!(
            parse_order("grevlex", &net).unwrap(),
            MonomialOrder::GrevLex(seq) if seq == vec![0, 1]
        ));
        assert!(parse_order("elim:A", &net).is_ok());
        assert!(parse_order("elim:A,B", &net).is_err());
        assert!(parse_order("weird", &net).is_err());
        assert!(parse_order("lex:A,Q", &net).is_err());
    }

    #[test]
    fn boxes_parse_uniform_and_per_species() {
        assert_eq!(parse_box("0.1,10", 3).unwrap(), vec![(0.1, 10.0); 3]);
        assert_eq!(
            parse_box("1,2,3,4", 2).unwrap(),
            vec![(1.0, 2.0), (3.0, 4.0)]
        );
        assert!(parse_box("1,2,3", 2).is_err());
        assert!(parse_box("a,b", 2).is_err());
    }
}
