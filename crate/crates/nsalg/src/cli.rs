//! Command-line front end: parses semigroup literals, dispatches to the
//! library and prints human-readable or JSON output.
//!
//! Exit codes: 0 on success, 1 on a domain error (reported on standard error
//! as `error[CODE]: message`), 2 on a usage or parse error.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::SemigroupAlgebra;
use crate::classify::{self, Verdict};
use crate::error::{Error, Result};
use crate::exponent::{Exponent, MonomialSet};
use crate::fundgap;
use crate::lattice;
use crate::oracle;
use crate::radical::{self, CoverMode};
use crate::selfcheck;
use crate::semigroup::NumericalSemigroup;

#[derive(Parser)]
#[command(
    name = "nsalg",
    about = "Exact invariants of numerical semigroup algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Gap and sporadic monomials, conductor, Frobenius data of R'/R.
    Invariants(AlgebraArgs),
    /// Symmetry and irreducibility classification of the coefficient ring.
    Classify(AlgebraArgs),
    /// All extensions of R inside R'.
    Extensions(ExtensionsArgs),
    /// R as an intersection of irreducible extensions.
    Decompose(AlgebraArgs),
    /// The n-th radical of R inside an ambient ring.
    Radical(RadicalArgs),
    /// Symmetric or pseudo-symmetric coefficient ring with prescribed
    /// n-th radical.
    Cover(CoverArgs),
    /// Numerical duplication of a ring.
    Duplication(DuplicationArgs),
    /// Fundamental gap monomials with radical witnesses.
    FundamentalGaps(AlgebraArgs),
    /// Coefficient rings of an ambient ring with a single fundamental gap
    /// monomial.
    SingleFg(SingleFgArgs),
    /// Which extensions are intersections of radicals.
    RadicalIntersections(AlgebraArgs),
    /// Cross-validate the fast paths against the brute-force oracle.
    Selfcheck(SelfcheckArgs),
}

#[derive(Args)]
struct AlgebraArgs {
    /// Coefficient ring R: comma-separated positive rationals or canonical
    /// JSON {"generators":[[num,den],...]}.
    #[arg(long)]
    coeff: String,
    /// Extension ring R' given directly.
    #[arg(long, conflicts_with = "join")]
    ext: Option<String>,
    /// Exponents to join to R to form R'.
    #[arg(long)]
    join: Option<String>,
    #[arg(long)]
    json: bool,
    /// Print bare exponents instead of monomials.
    #[arg(long)]
    raw: bool,
}

#[derive(Args)]
struct ExtensionsArgs {
    #[command(flatten)]
    alg: AlgebraArgs,
    /// Gap-count cutoff for enumeration (env NSALG_GAP_LIMIT, default 20).
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct RadicalArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    coeff: String,
    #[arg(long)]
    ambient: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CoverArgs {
    #[arg(long)]
    n: u64,
    /// symmetric or pseudo (pseudo-symmetric).
    #[arg(long)]
    mode: String,
    /// The radicand R': the ring the result's n-th radical must equal.
    #[arg(long)]
    coeff: String,
    #[arg(long)]
    ambient: String,
    /// Anchor exponent h; the smallest admissible value is chosen if omitted.
    #[arg(long)]
    h: Option<String>,
    /// Print the intermediate rings R0, R1, R2 and the joined exponents.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DuplicationArgs {
    #[arg(long)]
    coeff: String,
    /// Anchor member s0 with s0/2 outside the ring.
    #[arg(long)]
    s0: String,
    /// Members s_i to duplicate; may be empty.
    #[arg(long, default_value = "")]
    doubles: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SingleFgArgs {
    #[arg(long)]
    ambient: String,
    /// Search cutoff for the fundamental gap exponent in normalized
    /// coordinates; defaults to the finiteness bound.
    #[arg(long)]
    bound: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SelfcheckArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value_t = 30)]
    max_gen: u64,
    #[arg(long)]
    json: bool,
}

/// Parses argv and dispatches; returns the process exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let benign = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if benign { 0 } else { 2 };
        }
    };
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error[{}]: {}", e.code(), e);
            match e {
                Error::Parse(_) => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Invariants(a) => invariants(&a),
        Cmd::Classify(a) => classify_cmd(&a),
        Cmd::Extensions(a) => extensions(&a),
        Cmd::Decompose(a) => decompose(&a),
        Cmd::Radical(a) => radical_cmd(&a),
        Cmd::Cover(a) => cover(&a),
        Cmd::Duplication(a) => duplication(&a),
        Cmd::FundamentalGaps(a) => fundamental_gaps(&a),
        Cmd::SingleFg(a) => single_fg(&a),
        Cmd::RadicalIntersections(a) => radical_intersections(&a),
        Cmd::Selfcheck(a) => selfcheck_cmd(&a),
    }
}

/// A ring literal: comma-separated rationals, or the canonical JSON form.
pub fn parse_ring(text: &str) -> Result<NumericalSemigroup> {
    let text = text.trim();
    if text.starts_with('{') {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("invalid JSON literal: {e}")))?;
        let gens = v
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("JSON literal needs a `generators` array".into()))?;
        let exps = gens
            .iter()
            .map(|pair| {
                let nums = pair.as_array().filter(|a| a.len() == 2);
                let (n, d) = nums
                    .and_then(|a| Some((a[0].as_u64()?, a[1].as_u64()?)))
                    .ok_or_else(|| Error::Parse("generators must be [num, den] pairs".into()))?;
                Exponent::new(n, d)
            })
            .collect::<Result<Vec<_>>>()?;
        NumericalSemigroup::from_generators(&exps)
    } else {
        NumericalSemigroup::from_generators(&parse_exponents(text)?)
    }
}

/// Comma-separated exponent list; empty input gives an empty list.
pub fn parse_exponents(text: &str) -> Result<Vec<Exponent>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|p| p.parse()).collect()
}

fn build_algebra(a: &AlgebraArgs) -> Result<SemigroupAlgebra> {
    let coeff = parse_ring(&a.coeff)?;
    let alg = match (&a.ext, &a.join) {
        (Some(ext), None) => SemigroupAlgebra::new(coeff, parse_ring(ext)?)?,
        (None, Some(join)) => SemigroupAlgebra::by_joining(coeff, &parse_exponents(join)?)?,
        (None, None) => return Err(Error::Parse("one of --ext or --join is required".into())),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    if !alg.is_equi_gcd() {
        return Err(Error::NotEquiGcd);
    }
    Ok(alg)
}

fn gap_limit(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| {
            std::env::var("NSALG_GAP_LIMIT")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(lattice::DEFAULT_GAP_LIMIT)
}

fn exp_json(e: Exponent) -> Value {
    json!([e.numer(), e.denom()])
}

fn set_json(s: &MonomialSet) -> Value {
    Value::Array(s.iter().map(exp_json).collect())
}

fn ring_json(ns: &NumericalSemigroup) -> Value {
    json!({
        "generators": ns.minimal_generators().iter().map(|&g| exp_json(g)).collect::<Vec<_>>()
    })
}

/// Monomial rendering: exponent zero prints as 1, integer exponents as u^k,
/// rationals as u^(p/q). With `raw` the bare exponents are printed instead.
fn monomials(s: &MonomialSet, raw: bool) -> String {
    let body: Vec<String> = s
        .iter()
        .map(|e| {
            if raw {
                e.to_string()
            } else if e.is_zero() {
                "1".to_string()
            } else if e.is_integer() {
                format!("u^{e}")
            } else {
                format!("u^({e})")
            }
        })
        .collect();
    format!("{{{}}}", body.join(", "))
}

fn ring_line(ns: &NumericalSemigroup) -> String {
    ns.minimal_generators()
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn invariants(a: &AlgebraArgs) -> Result<i32> {
    let alg = build_algebra(a)?;
    let report = alg.invariant_report()?;
    if a.json {
        let doc = json!({
            "coeff": ring_json(alg.coeff()),
            "ext": ring_json(alg.ext()),
            "gaps": set_json(&report.gaps),
            "sporadics": set_json(&report.sporadics),
            "conductor_gens": set_json(report.conductor.min_generators()),
            "frobenius": set_json(&report.frobenius),
            "pseudo_frobenius": set_json(&report.pseudo_frobenius),
            "cm_type": report.cm_type,
            "f_type": report.f_type,
        });
        println!("{doc}");
    } else {
        println!("coeff R : {}", alg.coeff());
        println!("ext R'  : {}", alg.ext());
        println!("gaps G(R'/R)      : {}", monomials(&report.gaps, a.raw));
        println!(
            "sporadics N(R'/R) : {}",
            monomials(&report.sporadics, a.raw)
        );
        println!(
            "conductor gens    : {}",
            monomials(report.conductor.min_generators(), a.raw)
        );
        println!(
            "frobenius F       : {}",
            monomials(&report.frobenius, a.raw)
        );
        println!(
            "pseudo-frobenius  : {}",
            monomials(&report.pseudo_frobenius, a.raw)
        );
        println!("CM-type {}  F-type {}", report.cm_type, report.f_type);
    }
    Ok(0)
}

fn classify_cmd(a: &AlgebraArgs) -> Result<i32> {
    let alg = build_algebra(a)?;
    if alg.is_trivial() {
        if a.json {
            println!("{}", json!({"verdict": "trivial"}));
        } else {
            println!("trivial");
        }
        return Ok(0);
    }
    let c = classify::classify(&alg)?;
    let nari = match classify::nari_check(&alg) {
        Ok((x, y, z)) => Some((x, y, z)),
        Err(Error::MultipleFrobenius) => None,
        Err(e) => return Err(e),
    };
    if a.json {
        let verdict = match c.verdict {
            Verdict::Symmetric => "symmetric",
            Verdict::PseudoSymmetric => "pseudo_symmetric",
            Verdict::AlmostSymmetric => "almost_symmetric",
            Verdict::General => "general",
        };
        let doc = json!({
            "verdict": verdict,
            "w": c.single_frobenius.map(exp_json),
            "irreducible": c.irreducible,
            "maximal_pf": set_json(&c.maximal_pf),
            "nari": nari.map(|(x, y, z)| json!([x, y, z])),
        });
        println!("{doc}");
    } else {
        let mut line = format!(
            "{}, {}",
            c.verdict,
            if c.irreducible {
                "irreducible"
            } else {
                "not irreducible"
            }
        );
        if let Some(w) = c.single_frobenius {
            line.push_str(&format!(", w={w}"));
        }
        println!("{line}");
    }
    Ok(0)
}

fn extensions(args: &ExtensionsArgs) -> Result<i32> {
    let alg = build_algebra(&args.alg)?;
    let lat = lattice::enumerate_extensions_with_limit(&alg, gap_limit(args.limit))?;
    if args.alg.json {
        let doc = json!({
            "gaps": set_json(lat.gaps()),
            "extensions": lat.extensions().iter().map(|e| ring_json(&e.ring)).collect::<Vec<_>>(),
        });
        println!("{doc}");
    } else {
        for e in lat.extensions() {
            println!("{}", ring_line(&e.ring));
        }
    }
    Ok(0)
}

fn decompose(a: &AlgebraArgs) -> Result<i32> {
    let alg = build_algebra(a)?;
    let parts = lattice::decompose_irreducible_with_limit(&alg, gap_limit(None))?;
    if a.json {
        let doc = json!({
            "components": parts.iter().map(ring_json).collect::<Vec<_>>(),
        });
        println!("{doc}");
    } else {
        for p in &parts {
            println!("{}", ring_line(p));
        }
    }
    Ok(0)
}

fn radical_cmd(a: &RadicalArgs) -> Result<i32> {
    let coeff = parse_ring(&a.coeff)?;
    let ambient = parse_ring(&a.ambient)?;
    let rad = radical::nth_radical(&coeff, a.n, &ambient)?;
    if a.json {
        println!("{}", ring_json(&rad));
    } else {
        println!("{}", ring_line(&rad));
    }
    Ok(0)
}

fn parse_mode(text: &str) -> Result<CoverMode> {
    match text {
        "symmetric" => Ok(CoverMode::Symmetric),
        "pseudo" | "pseudo-symmetric" | "pseudo_symmetric" => Ok(CoverMode::PseudoSymmetric),
        other => Err(Error::Parse(format!(
            "unknown mode `{other}` (expected symmetric or pseudo)"
        ))),
    }
}

fn cover(a: &CoverArgs) -> Result<i32> {
    let radicand = parse_ring(&a.coeff)?;
    let ambient = parse_ring(&a.ambient)?;
    let alg = SemigroupAlgebra::new(radicand, ambient)?;
    if !alg.is_equi_gcd() {
        return Err(Error::NotEquiGcd);
    }
    let h = a.h.as_deref().map(str::parse).transpose()?;
    let trace = radical::construct_radical_cover(&alg, a.n, parse_mode(&a.mode)?, h)?;
    if a.json {
        let doc = json!({
            "n": trace.n,
            "h": exp_json(trace.h),
            "w": exp_json(trace.w),
            "mode": match trace.mode {
                CoverMode::Symmetric => "symmetric",
                CoverMode::PseudoSymmetric => "pseudo_symmetric",
            },
            "r0": ring_json(&trace.r0),
            "r1": ring_json(&trace.r1),
            "r2": ring_json(&trace.r2),
            "result": ring_json(&trace.result),
            "joined_pf": set_json(&trace.joined_pf),
        });
        println!("{doc}");
    } else {
        if a.trace {
            println!("h  = {}", trace.h);
            println!("w  = {}", trace.w);
            println!("r0 = {}", ring_line(&trace.r0));
            println!("r1 = {}", ring_line(&trace.r1));
            println!("r2 = {}", ring_line(&trace.r2));
            println!("joined = {}", monomials(&trace.joined_pf, true));
        }
        println!("{}", ring_line(&trace.result));
    }
    Ok(0)
}

fn duplication(a: &DuplicationArgs) -> Result<i32> {
    let ring = parse_ring(&a.coeff)?;
    let s0: Exponent = a.s0.parse()?;
    let doubles = parse_exponents(&a.doubles)?;
    let out = radical::numerical_duplication(&ring, s0, &doubles)?;
    if a.json {
        println!("{}", ring_json(&out));
    } else {
        println!("{}", ring_line(&out));
    }
    Ok(0)
}

fn fundamental_gaps(a: &AlgebraArgs) -> Result<i32> {
    let alg = build_algebra(a)?;
    let report = fundgap::fundamental_gap_monomials(&alg)?;
    let chains = fundgap::single_fg_witness(&alg)?;
    if a.json {
        let doc = json!({
            "fg": set_json(&report.fg),
            "singleton": report.singleton,
            "witnesses": report.witnesses.iter()
                .map(|(t, n)| json!({"gap": exp_json(*t), "n": n}))
                .collect::<Vec<_>>(),
            "radical_chains": chains.map(|list| {
                list.iter().map(|(t, n, chain)| json!({
                    "gap": exp_json(*t),
                    "n": n,
                    "chain": chain.iter().map(|&e| exp_json(e)).collect::<Vec<_>>(),
                })).collect::<Vec<_>>()
            }),
        });
        println!("{doc}");
    } else {
        println!("FG(R'/R) = {}", monomials(&report.fg, a.raw));
        for (t, n) in &report.witnesses {
            println!("non-fundamental: {t} (exponent {n} stays a gap)");
        }
        if let Some(list) = chains {
            for (t, n, _) in list {
                println!("radical witness: {n} * {t} reaches the fundamental gap");
            }
        }
    }
    Ok(0)
}

fn single_fg(a: &SingleFgArgs) -> Result<i32> {
    let ambient = parse_ring(&a.ambient)?;
    let rings = fundgap::enumerate_single_fg_coeff_rings(&ambient, a.bound);
    if a.json {
        let doc = json!({
            "ambient": ring_json(&ambient),
            "rings": rings.iter().map(ring_json).collect::<Vec<_>>(),
        });
        println!("{doc}");
    } else {
        for r in &rings {
            println!("{}", ring_line(r));
        }
    }
    Ok(0)
}

fn radical_intersections(a: &AlgebraArgs) -> Result<i32> {
    let alg = build_algebra(a)?;
    let all = fundgap::extensions_are_radical_intersections(&alg)?;
    let lat = lattice::enumerate_extensions_with_limit(&alg, gap_limit(None))?;
    let mut rows = Vec::new();
    for e in lat.non_trivial() {
        let expr = fundgap::express_as_radical_intersection(&alg, &e.ring)?;
        rows.push((e.ring.clone(), expr));
    }
    if a.json {
        let doc = json!({
            "all_intersections": all,
            "extensions": rows.iter().map(|(ring, expr)| json!({
                "generators": ring_json(ring)["generators"],
                "radicals": expr,
            })).collect::<Vec<_>>(),
        });
        println!("{doc}");
    } else {
        println!(
            "all extensions are intersections of radicals: {}",
            if all { "yes" } else { "no" }
        );
        for (ring, expr) in &rows {
            match expr {
                Some(ds) if ds.is_empty() => {
                    println!("{} = R' (empty intersection)", ring_line(ring))
                }
                Some(ds) => {
                    let parts: Vec<String> = ds.iter().map(|d| format!("radical[{d}]")).collect();
                    println!("{} = {}", ring_line(ring), parts.join(" ∩ "));
                }
                None => println!("{} : not an intersection of radicals", ring_line(ring)),
            }
        }
    }
    Ok(0)
}

fn selfcheck_cmd(a: &SelfcheckArgs) -> Result<i32> {
    let report = selfcheck::run(&selfcheck::SelfCheckConfig {
        seed: a.seed,
        count: a.count,
        max_gen: a.max_gen,
    });
    if a.json {
        let doc = json!({
            "instances": report.instances,
            "checks": report.checks,
            "discrepancies": report.discrepancies,
        });
        println!("{doc}");
    } else {
        println!("{report}");
        for d in &report.discrepancies {
            println!("  {d}");
        }
    }
    Ok(if report.ok() { 0 } else { 1 })
}

/// A tiny cross-check exposed for the oracle CLI path: the bounded sieve.
pub fn sieve(gens: &[u64], bound: u64) -> Vec<u64> {
    oracle::bf_members(gens, bound).members().collect()
}
