//! taureg: exact computations with tau-regular modules and components over
//! finite-dimensional quiver algebras, working over GF(p).
//!
//! Exit codes: 0 success, 1 parse/validation failure, 2 failed precondition,
//! 3 internal inconsistency (independent computations disagreed).

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use taureg_core::algebra::{build_algebra, Algebra};
use taureg_core::classify::{
    cyclic_nakayama_shape, gentle_gorenstein, is_gentle, nakayama_symmetry_criterion,
};
use taureg_core::fp::is_prime_u64;
use taureg_core::io::{parse_algebra, parse_module, write_module};
use taureg_core::rep::{g_vector, inj_dim_at_most, invariants_e, proj_dim_at_most};
use taureg_core::tauregular::{
    component_from_gvector, hereditary_check, ig1_all_quotients, ig1_check, is_tau_minus_regular,
    is_tau_regular, standard_pool, triangular_unique_component, witness_search,
};
use taureg_core::{Error, Fp, Representation, Result, Sampler, DEFAULT_PRIME};

#[derive(Parser)]
#[command(name = "taureg", version, about = "tau-regularity toolkit over GF(p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Field characteristic; must be prime and > 2^16.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u64,

    /// RNG seed; falls back to TAUREG_SEED, then 0.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Samples per generic-rank certification.
    #[arg(long, global = true, default_value_t = 5)]
    trials: usize,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the witness/generic module to this file in module format.
    #[arg(long, global = true, value_name = "PATH")]
    dump_witness: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant table of a module: dimvec, g-vector, e, E, E-minus, c where
    /// pinned, and the regularity verdicts.
    Invariants { algebra: PathBuf, module: PathBuf },

    /// Generically tau-regular component pair parametrized by a g-vector.
    Component {
        algebra: PathBuf,
        /// Comma-separated g-vector, e.g. --g "-1,0".
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        g: Vec<i64>,
    },

    /// The unique component with a given dimension vector over a triangular
    /// algebra.
    ClassifyTriangular {
        algebra: PathBuf,
        /// Comma-separated dimension vector, e.g. --dim 1,4,2.
        #[arg(long, value_delimiter = ',', required = true)]
        dim: Vec<usize>,
    },

    /// Structural criteria with certificates.
    Check { kind: CheckKind, algebra: PathBuf },

    /// Search for a rigid module separating the tau and tau-minus theories.
    Witness {
        algebra: PathBuf,
        /// Largest number of indecomposable summands tried.
        #[arg(long, default_value_t = 4)]
        max_summands: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    /// Symmetry criterion for cyclic Nakayama algebras with ideal J^t.
    Nakayama,
    /// Gorenstein criterion for gentle algebras.
    Gentle,
    /// Projective dimension of every simple at most 1.
    Hereditary,
    /// 1-Iwanaga-Gorenstein, plus the same over every vertex-removal quotient.
    Ig1,
}

struct Ctx {
    fp: Fp,
    seed: u64,
    trials: usize,
    json: bool,
    dump: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    if !is_prime_u64(cli.prime) || cli.prime <= 1 << 16 {
        return Err(Error::Invalid(format!(
            "--prime {} must be a prime larger than 2^16",
            cli.prime
        )));
    }
    if cli.trials == 0 {
        return Err(Error::Invalid("--trials must be at least 1".into()));
    }
    let seed = match cli.seed {
        Some(s) => s,
        None => match std::env::var("TAUREG_SEED") {
            Ok(v) => v
                .parse()
                .map_err(|_| Error::Invalid(format!("TAUREG_SEED '{v}' is not a 64-bit seed")))?,
            Err(_) => 0,
        },
    };
    let ctx = Ctx {
        fp: Fp::new(cli.prime),
        seed,
        trials: cli.trials,
        json: cli.json,
        dump: cli.dump_witness,
    };
    match cli.command {
        Command::Invariants { algebra, module } => cmd_invariants(&ctx, &algebra, &module),
        Command::Component { algebra, g } => cmd_component(&ctx, &algebra, &g),
        Command::ClassifyTriangular { algebra, dim } => cmd_classify(&ctx, &algebra, &dim),
        Command::Check { kind, algebra } => cmd_check(&ctx, kind, &algebra),
        Command::Witness {
            algebra,
            max_summands,
        } => cmd_witness(&ctx, &algebra, max_summands),
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn load_algebra(ctx: &Ctx, path: &Path) -> Result<Arc<Algebra>> {
    build_algebra(parse_algebra(&read_file(path)?)?, ctx.fp)
}

fn dump_witness(ctx: &Ctx, m: &Representation) -> Result<()> {
    if let Some(path) = &ctx.dump {
        std::fs::write(path, write_module(m))
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn fmt_ivec(xs: &[i64]) -> String {
    let inner: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("({})", inner.join(", "))
}

fn fmt_uvec(xs: &[usize]) -> String {
    let inner: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("({})", inner.join(", "))
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit_json(value: serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("serializable")
    );
}

fn cmd_invariants(ctx: &Ctx, algebra: &Path, module: &Path) -> Result<()> {
    let a = load_algebra(ctx, algebra)?;
    let m = parse_module(&read_file(module)?, &a)?;
    let mut sampler = Sampler::seeded(ctx.seed, ctx.trials);

    let g = g_vector(&m)?;
    let (e_plus, e_minus, e) = invariants_e(&m)?;
    let tau_reg = is_tau_regular(&m, &mut sampler)?;
    let tau_minus_reg = is_tau_minus_regular(&m, &mut sampler)?;
    let pd1 = proj_dim_at_most(&m, 1)?;
    let id1 = inj_dim_at_most(&m, 1)?;
    // c is reported only where pinned: c = E on tau-regular modules, c = 0 on
    // rigid orbit closures.
    let c = if tau_reg {
        Some(e_plus)
    } else if e == 0 {
        Some(0)
    } else {
        None
    };
    dump_witness(ctx, &m)?;

    if ctx.json {
        emit_json(json!({
            "command": "invariants",
            "prime": ctx.fp.modulus(),
            "seed": ctx.seed,
            "trials": ctx.trials,
            "dimvec": m.dims(),
            "gvec": g,
            "c": c,
            "e": e,
            "E": e_plus,
            "E_minus": e_minus,
            "tau_regular": tau_reg,
            "tau_minus_regular": tau_minus_reg,
            "pd_le_1": pd1,
            "id_le_1": id1,
        }));
    } else {
        println!("seed: {}", ctx.seed);
        println!("dimvec: {}", fmt_uvec(m.dims()));
        println!("g-vector: {}", fmt_ivec(&g));
        match c {
            Some(c) => println!("c: {c}"),
            None => println!("c: unknown"),
        }
        println!("e: {e}");
        println!("E: {e_plus}");
        println!("E-minus: {e_minus}");
        println!("tau-regular: {}", yesno(tau_reg));
        println!("tau-minus-regular: {}", yesno(tau_minus_reg));
        println!("pd <= 1: {}", yesno(pd1));
        println!("id <= 1: {}", yesno(id1));
    }
    Ok(())
}

fn cmd_component(ctx: &Ctx, algebra: &Path, g: &[i64]) -> Result<()> {
    let a = load_algebra(ctx, algebra)?;
    let mut sampler = Sampler::seeded(ctx.seed, ctx.trials);
    let pair = component_from_gvector(&a, g, &mut sampler)?;
    let z = &pair.component;
    dump_witness(ctx, &z.generic_witness)?;

    if ctx.json {
        emit_json(json!({
            "command": "component",
            "prime": ctx.fp.modulus(),
            "seed": ctx.seed,
            "trials": ctx.trials,
            "g": g,
            "component_gvec": z.gvec,
            "proj_residue": pair.proj.mults,
            "dimvec": z.dimvec,
            "E": z.e_value,
            "c": z.e_value,
            "witness": write_module(&z.generic_witness),
        }));
    } else {
        println!("seed: {}", ctx.seed);
        println!("g-vector: {}", fmt_ivec(g));
        println!("component g-vector: {}", fmt_ivec(&z.gvec));
        println!("projective residue: {}", pair.proj.describe("P"));
        println!("dimvec: {}", fmt_uvec(&z.dimvec));
        println!("E (= c): {}", z.e_value);
    }
    Ok(())
}

fn cmd_classify(ctx: &Ctx, algebra: &Path, dim: &[usize]) -> Result<()> {
    let a = load_algebra(ctx, algebra)?;
    let mut sampler = Sampler::seeded(ctx.seed, ctx.trials);
    let z = triangular_unique_component(&a, dim, &mut sampler)?;
    let ranks: Vec<(String, usize)> = a
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(i, arr)| (arr.name.clone(), z.generic_witness.arrow(i).rank()))
        .collect();
    dump_witness(ctx, &z.generic_witness)?;

    if ctx.json {
        let rank_map: serde_json::Map<String, serde_json::Value> = ranks
            .iter()
            .map(|(name, r)| (name.clone(), json!(r)))
            .collect();
        emit_json(json!({
            "command": "classify-triangular",
            "prime": ctx.fp.modulus(),
            "seed": ctx.seed,
            "trials": ctx.trials,
            "verdict": "unique-component",
            "dim": dim,
            "gvec": z.gvec,
            "E": z.e_value,
            "arrow_ranks": rank_map,
            "certificate": write_module(&z.generic_witness),
        }));
    } else {
        println!("seed: {}", ctx.seed);
        println!("dimvec: {}", fmt_uvec(&z.dimvec));
        println!("g-vector: {}", fmt_ivec(&z.gvec));
        println!("E (= c): {}", z.e_value);
        let parts: Vec<String> = ranks
            .iter()
            .map(|(name, r)| format!("{name}={r}"))
            .collect();
        println!("generic arrow ranks: {}", parts.join(" "));
    }
    Ok(())
}

fn cmd_check(ctx: &Ctx, kind: CheckKind, algebra: &Path) -> Result<()> {
    let pres = parse_algebra(&read_file(algebra)?)?;
    let (label, verdict, certificate) = match kind {
        CheckKind::Nakayama => {
            let shape = cyclic_nakayama_shape(&pres)?;
            let symmetric = nakayama_symmetry_criterion(shape.n, shape.t)?;
            (
                "symmetric",
                symmetric,
                format!(
                    "cyclic Nakayama with n = {}, t = {}: t mod n = {}, (n-1) mod n = {}",
                    shape.n,
                    shape.t,
                    shape.t % shape.n,
                    (shape.n - 1) % shape.n
                ),
            )
        }
        CheckKind::Gentle => {
            is_gentle(&pres)?;
            let gor = gentle_gorenstein(&pres)?;
            (
                "gorenstein",
                gor,
                "criterion: every relation edge lies on a directed cycle of relation edges"
                    .to_string(),
            )
        }
        CheckKind::Hereditary => {
            let a = build_algebra(pres.clone(), ctx.fp)?;
            let h = hereditary_check(&a)?;
            (
                "hereditary",
                h,
                "criterion: pd S(i) <= 1 for every vertex i".to_string(),
            )
        }
        CheckKind::Ig1 => {
            let a = build_algebra(pres.clone(), ctx.fp)?;
            let here = ig1_check(&a)?;
            let all = ig1_all_quotients(&a)?;
            let cert = format!("A itself: {here}; all vertex-removal quotients: {all}");
            ("ig1-all-quotients", all, cert)
        }
    };

    if ctx.json {
        emit_json(json!({
            "command": "check",
            "prime": ctx.fp.modulus(),
            "kind": label,
            "verdict": verdict,
            "certificate": certificate,
        }));
    } else {
        println!("{label}: {verdict}");
        println!("certificate: {certificate}");
    }
    Ok(())
}

fn cmd_witness(ctx: &Ctx, algebra: &Path, max_summands: usize) -> Result<()> {
    let a = load_algebra(ctx, algebra)?;
    let mut sampler = Sampler::seeded(ctx.seed, ctx.trials);
    let pool = standard_pool(&a)?;
    let found = witness_search(&a, max_summands, &pool, &mut sampler)?;

    if let Some(w) = &found {
        dump_witness(ctx, &w.module)?;
    }
    if ctx.json {
        match &found {
            Some(w) => emit_json(json!({
                "command": "witness",
                "prime": ctx.fp.modulus(),
                "seed": ctx.seed,
                "trials": ctx.trials,
                "verdict": "witness-found",
                "name": w.name,
                "E": w.e_value,
                "E_minus": w.e_minus_value,
                "dimvec": w.module.dims(),
                "certificate": write_module(&w.module),
            })),
            None => emit_json(json!({
                "command": "witness",
                "prime": ctx.fp.modulus(),
                "seed": ctx.seed,
                "trials": ctx.trials,
                "verdict": "none-found",
                "max_summands": max_summands,
                "certificate": serde_json::Value::Null,
            })),
        }
    } else {
        println!("seed: {}", ctx.seed);
        match &found {
            Some(w) => {
                println!("witness: {}", w.name);
                println!("dimvec: {}", fmt_uvec(w.module.dims()));
                println!("E: {}", w.e_value);
                println!("E-minus: {}", w.e_minus_value);
                println!("verdict: tau and tau-minus theories differ");
            }
            None => {
                println!("no witness among direct sums of <= {max_summands} pool modules");
                println!("verdict: inconclusive (absence proves nothing by itself)");
            }
        }
    }
    Ok(())
}
