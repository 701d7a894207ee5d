//! `qdouble`: normal forms, pairings and verification suites for
//! C_q[SL(n)], U_q(sl_n) and the double C_q[D(SL(n))], n = 2, 3.

mod battery;
mod output;

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qdouble::double::{derive_cross_relations, gamma_convolution, gamma_prime, DoubleAlgebra, GammaForm};
use qdouble::freealg::NcPoly;
use qdouble::hopf::{Algebra, FormRef};
use qdouble::qgroups::QuantumGroup;
use qdouble::repr::{flag_invariance_check, is_simple, peter_weyl_rank, DoubleModule, Simplicity};
use qdouble::report::Suite;

use battery::Settings;
use output::{Format, Output};

#[derive(Parser)]
#[command(name = "qdouble", version, about = "Exact computations in the double quantum group C_q[D(SL(n))]")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// sl2 or sl3.
    #[arg(long, global = true, default_value = "sl2")]
    group: String,
    /// Maximal word degree for exhaustive checks.
    #[arg(long, global = true, default_value_t = 3)]
    degree: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Certify full ranks modulo a prime before exact elimination.
    #[arg(long, global = true)]
    fast_rank: bool,
    /// Include per-suite wall time (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the presentation of C_q[G] and U_q(g): generators, relations, Δ, ε, S.
    Relations,
    /// Normal form of an expression.
    Normalize {
        expr: String,
        #[arg(long, value_enum, default_value_t = Which::A)]
        algebra: Which,
    },
    /// Evaluate a bilinear form on two expressions.
    Pair {
        #[arg(long, value_enum, default_value_t = PairForm::Beta)]
        form: PairForm,
        x: String,
        y: String,
    },
    /// ξ of an element of the double.
    Xi { expr: String },
    /// Run verification suites (all of them unless --suite is given).
    Verify {
        #[arg(long, value_delimiter = ',', value_parser = clap::builder::PossibleValuesParser::new(battery::ALL))]
        suite: Vec<String>,
    },
    /// Representations of the double.
    Repr {
        #[command(subcommand)]
        command: ReprCommand,
    },
    /// The double C_q[D(G)].
    Double {
        #[command(subcommand)]
        command: DoubleCommand,
    },
}

#[derive(Subcommand)]
enum ReprCommand {
    /// Is L(ν) ⊗ L(ν′) simple over the double (or over U_q diagonally)?
    Simple {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        nuprime: usize,
        #[arg(long)]
        diagonal_only: bool,
    },
    /// Rank of the matrix coefficients of L(ν) ⊗ L(ν′).
    PeterWeyl {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        nuprime: usize,
    },
    /// Strong γ-invariance of the product weight flags on V ⊗ V′.
    Flags,
}

#[derive(Subcommand)]
enum DoubleCommand {
    /// Cross relations ã·b of the double.
    Relations {
        /// Compare with the printed sl2 list.
        #[arg(long)]
        diff_paper: bool,
    },
    /// Run the double's suites (all of them unless --suite is given).
    Verify {
        #[arg(long, value_delimiter = ',', value_parser = clap::builder::PossibleValuesParser::new(battery::DOUBLE))]
        suite: Vec<String>,
    },
    /// Evaluate a form on two elements of the double.
    Pair {
        #[arg(long, value_enum, default_value_t = DoubleForm::Gamma)]
        form: DoubleForm,
        x: String,
        y: String,
    },
    /// ξ of an element of the double.
    Xi { expr: String },
    /// Normal form in the double.
    Normalize { expr: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    A,
    U,
    Double,
}

#[derive(Clone, Copy, ValueEnum)]
enum PairForm {
    Beta,
    BetaInv,
    /// ⟨u, a⟩ for u in U_q(g), a in C_q[G].
    Pairing,
}

#[derive(Clone, Copy, ValueEnum)]
enum DoubleForm {
    Gamma,
    GammaPrime,
    GammaConvolution,
}

/// Usage errors exit 2, failed checks 1.
enum Failure {
    Usage(String),
    Checks,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn rank(group: &str) -> Res<usize> {
    match group {
        "sl2" => Ok(2),
        "sl3" => Ok(3),
        other => Err(Failure::Usage(format!("unknown group {} (expected sl2 or sl3)", other))),
    }
}

fn run(cli: &Cli) -> Res<()> {
    let c = &cli.common;
    let n = rank(&c.group)?;
    let settings = Settings { n, degree: c.degree, seed: c.seed, fast_rank: c.fast_rank };
    let mut out = Output::new(c.format, &c.group, settings, c.timings);
    match &cli.command {
        Command::Relations => out.presentation(QuantumGroup::get(n)?),
        Command::Normalize { expr, algebra } => {
            let alg = algebra_for(n, *algebra)?;
            let p = parse(alg, expr)?;
            out.value("normalize", expr, &alg.format(&alg.nf(&p)));
        }
        Command::Pair { form, x, y } => {
            let g = QuantumGroup::get(n)?;
            let f: FormRef = match form {
                PairForm::Beta => g.beta.clone(),
                PairForm::BetaInv => g.beta_inv.clone(),
                PairForm::Pairing => g.pairing_form(),
            };
            out.value("pair", &format!("({}, {})", x, y), &pair(&f, x, y)?);
        }
        Command::Xi { expr } | Command::Double { command: DoubleCommand::Xi { expr } } => {
            let d = DoubleAlgebra::get(n)?;
            let xi = d.map_xi()?;
            let p = d.alg.nf(&parse(&d.alg, expr)?);
            out.value("xi", expr, &xi.target().format(&xi.apply(&p)));
        }
        Command::Verify { suite } => {
            let names = if suite.is_empty() { battery::ALL.iter().map(|s| s.to_string()).collect() } else { suite.clone() };
            verify(&mut out, &names, settings, false)?;
        }
        Command::Repr { command } => repr(&mut out, command, settings)?,
        Command::Double { command } => double(&mut out, command, settings)?,
    }
    out.finish()
}

fn algebra_for(n: usize, which: Which) -> Res<&'static Arc<Algebra>> {
    Ok(match which {
        Which::A => &QuantumGroup::get(n)?.a,
        Which::U => &QuantumGroup::get(n)?.u,
        Which::Double => &DoubleAlgebra::get(n)?.alg,
    })
}

fn parse(alg: &Algebra, s: &str) -> Res<NcPoly> {
    alg.parse(s).map_err(|e| Failure::Usage(format!("cannot parse {:?} in {}: {}", s, alg.name(), e)))
}

fn pair(f: &FormRef, x: &str, y: &str) -> Res<String> {
    let px = f.left().nf(&parse(f.left(), x)?);
    let py = f.right().nf(&parse(f.right(), y)?);
    Ok(f.eval(&px, &py).to_string())
}

fn verify(out: &mut Output, names: &[String], cfg: Settings, double_only: bool) -> Res<()> {
    for name in names {
        eprintln!("running {} (sl{}, degree {})", name, cfg.n, cfg.degree);
        let suite = battery::run(name, cfg, double_only)?;
        out.suite(suite);
    }
    Ok(())
}

fn repr(out: &mut Output, cmd: &ReprCommand, cfg: Settings) -> Res<()> {
    match cmd {
        ReprCommand::Simple { nu, nuprime, diagonal_only } => {
            let m = DoubleModule::build(cfg.n, *nu, *nuprime)?;
            let over = if *diagonal_only { "the diagonal U_q" } else { "the double" };
            let mut s = Suite::new(format!("repr-simple[sl{}]", cfg.n));
            s.extend_prefixed(m.check()?, "action");
            let name = format!("L({})(x)L({}) (dim {}) over {}", nu, nuprime, m.dim(), over);
            match is_simple(m.dim(), &m.operators(*diagonal_only), cfg.seed) {
                Simplicity::Simple => s.pass(format!("{} is simple", name)),
                Simplicity::Reducible(b) => s.pass(format!("{} is reducible (invariant subspace of dim {})", name, b.len())),
                Simplicity::Undecided(k) => s.fail(format!("{} is undecided", name), format!("commutant of dimension {}", k)),
            }
            out.suite(s);
        }
        ReprCommand::PeterWeyl { nu, nuprime } => {
            let m = DoubleModule::build(cfg.n, *nu, *nuprime)?;
            let dim = m.dim();
            let r = peter_weyl_rank(&m.operators(false), dim, cfg.fast_rank.then_some(cfg.seed));
            let mut s = Suite::new(format!("repr-peter-weyl[sl{}]", cfg.n));
            let name = format!("rank of the matrix coefficients of L({})(x)L({}) is {} of {}", nu, nuprime, r, dim * dim);
            s.record(name, (r != dim * dim).then(|| format!("rank {}", r)));
            out.suite(s);
        }
        ReprCommand::Flags => out.suite(flag_invariance_check(DoubleAlgebra::get(cfg.n)?)?.sorted()),
    }
    Ok(())
}

fn double(out: &mut Output, cmd: &DoubleCommand, cfg: Settings) -> Res<()> {
    let d = DoubleAlgebra::get(cfg.n)?;
    match cmd {
        DoubleCommand::Relations { diff_paper } => {
            let r = derive_cross_relations(d, *diff_paper, 200, cfg.seed);
            out.cross_relations(&r.text);
            out.suite(r.suite);
        }
        DoubleCommand::Verify { suite } => {
            let names = if suite.is_empty() { battery::DOUBLE.iter().map(|s| s.to_string()).collect() } else { suite.clone() };
            verify(out, &names, cfg, true)?;
        }
        DoubleCommand::Pair { form, x, y } => {
            let f: FormRef = match form {
                DoubleForm::Gamma => Arc::new(GammaForm::new(d)?),
                DoubleForm::GammaPrime => gamma_prime(d)?,
                DoubleForm::GammaConvolution => gamma_convolution(d),
            };
            out.value("pair", &format!("({}, {})", x, y), &pair(&f, x, y)?);
        }
        DoubleCommand::Normalize { expr } => {
            let p = parse(&d.alg, expr)?;
            out.value("normalize", expr, &d.format(&d.alg.nf(&p)));
        }
        DoubleCommand::Xi { .. } => unreachable!("handled with the top-level xi"),
    }
    Ok(())
}
