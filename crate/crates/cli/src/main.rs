use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use hopf_fiber::corpus::{
    self, group_algebra_pair, qm2_presentation, qsl2_presentation, usl2_presentation, CorpusError, GroupTable,
};
use hopf_fiber::hopf::{enumerate_characters, Character, HopfError};
use hopf_fiber::linalg::Field;
use hopf_fiber::repn;
use hopf_fiber::rewrite::Presentation;
use hopf_fiber::specmap::{self, Mode};
use hopf_fiber_cli::{AlgebraFile, FormatError, ReportFile};

/// Exact checks on finite-dimensional Hopf algebras over prime fields.
///
/// Log verbosity is read from `HOPF_FIBER_LOG` (e.g. `info`, `debug`).
#[derive(Parser)]
#[command(name = "hopf-fiber", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an example and write it as an algebra file.
    Corpus(CorpusArgs),
    /// Check every bialgebra and Hopf axiom.
    Axioms(InputArgs),
    /// List the characters.
    Characters(InputArgs),
    /// Composition factors of the regular module.
    Simples(InputArgs),
    /// Compare fibers over A with winding orbits.
    Verify(VerifyArgs),
    /// Compare the quotients H/HK over all characters of a Hopf subalgebra A.
    Remark(InputArgs),
    /// Write a quantum-family presentation, or check one for confluence.
    Presentation(PresentationArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Group,
    Qsl2,
    Usl2,
    Qm2,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, required_unless_present = "shipped", conflicts_with = "shipped")]
    family: Option<Family>,
    /// One of the shipped instances (c3, c4c2, q8, s3c2, qsl2, usl2, qm2).
    #[arg(long)]
    shipped: Option<String>,
    /// Built-in group: c<n>, q8, s3, s3c2, c2c2.
    #[arg(long, conflicts_with = "cayley")]
    group: Option<String>,
    /// JSON file `{"labels": [...], "cayley": [[...], ...]}`.
    #[arg(long)]
    cayley: Option<PathBuf>,
    /// `center`, `trivial`, or comma-separated element indices.
    #[arg(long, default_value = "center")]
    central_subgroup: String,
    #[arg(long, default_value_t = 7)]
    p: u64,
    #[arg(long, default_value_t = 3)]
    ell: u64,
    #[arg(long, default_value_t = 3)]
    t: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct InputArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Local,
    Global,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "global")]
    mode: ModeArg,
}

#[derive(Args)]
struct PresentationArgs {
    /// Presentation text file to check.
    #[arg(short, long, conflicts_with = "family")]
    input: Option<PathBuf>,
    #[arg(long, value_parser = ["qsl2", "usl2", "qm2"])]
    family: Option<String>,
    #[arg(long, default_value_t = 7)]
    p: u64,
    #[arg(long, default_value_t = 3)]
    ell: u64,
    #[arg(long, default_value_t = 3)]
    t: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// Exit 1: a check ran and failed. Exit 2: bad input or parameters.
enum Failure {
    Check(String),
    Input(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().filter_or("HOPF_FIBER_LOG", "warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Corpus(a) => cmd_corpus(a),
        Command::Axioms(a) => cmd_axioms(a),
        Command::Characters(a) => cmd_characters(a),
        Command::Simples(a) => cmd_simples(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Remark(a) => cmd_remark(a),
        Command::Presentation(a) => cmd_presentation(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_input(path: &Path) -> anyhow::Result<(Vec<u8>, AlgebraFile)> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let text = std::str::from_utf8(&bytes).context("input is not UTF-8")?;
    let file = AlgebraFile::from_json(text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((bytes, file))
}

/// Axiom failures in the input count as failed checks, everything else as bad input.
fn load_instance(file: &AlgebraFile) -> Result<corpus::CorpusInstance, Failure> {
    match file.to_instance() {
        Ok(inst) => Ok(inst),
        Err(FormatError::Hopf(HopfError::StructureCheckFailed { axiom, witness })) => {
            Err(Failure::Check(format!("axiom {axiom} fails at witness {witness:?}")))
        }
        Err(e) => Err(Failure::Input(e.into())),
    }
}

fn emit<R: Serialize>(args: &InputArgs, bytes: &[u8], command: &str, results: R) -> anyhow::Result<()> {
    let report = ReportFile::new(bytes, args.seed, command, results);
    write_out(args.report.as_deref(), &report.to_json())
}

fn parse_subgroup(spec: &str, g: &GroupTable) -> anyhow::Result<Vec<usize>> {
    Ok(match spec {
        "center" => g.center(),
        "trivial" => vec![g.identity()],
        list => list
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|e| anyhow!("bad element index {s:?}: {e}")))
            .collect::<anyhow::Result<Vec<_>>>()?,
    })
}

#[derive(Deserialize)]
struct CayleyFile {
    labels: Vec<String>,
    cayley: Vec<Vec<usize>>,
}

fn cmd_corpus(a: CorpusArgs) -> Outcome {
    let inst = if let Some(name) = &a.shipped {
        corpus::shipped_instance(name)?
    } else {
        match a.family.expect("clap enforces family or shipped") {
            Family::Group => {
                let (g, gname) = match (&a.group, &a.cayley) {
                    (Some(name), None) => (GroupTable::named(name)?, name.clone()),
                    (None, Some(path)) => {
                        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                        let c: CayleyFile = serde_json::from_str(&text)?;
                        (GroupTable::new(c.labels, c.cayley)?, path.display().to_string())
                    }
                    _ => return Err(anyhow!("the group family needs --group or --cayley").into()),
                };
                let z = parse_subgroup(&a.central_subgroup, &g)?;
                let f = Field::new(a.p).map_err(|e| CorpusError::BadParameters(e.to_string()))?;
                let mut inst = group_algebra_pair(f, &g, &z)?;
                inst.provenance.params.insert("group".into(), gname.clone());
                inst.name = gname;
                inst
            }
            Family::Qsl2 => corpus::quantum_sl2_kernel(a.ell, a.p)?,
            Family::Usl2 => corpus::small_quantum_sl2(a.ell, a.p)?,
            Family::Qm2 => corpus::quantum_m2_kernel(a.t, a.p)?,
        }
    };
    log::info!("built {} of dimension {}", inst.name, inst.hopf.dim());
    write_out(a.output.as_deref(), &AlgebraFile::from_instance(&inst).to_json())?;
    Ok(())
}

fn cmd_axioms(a: InputArgs) -> Outcome {
    let (bytes, file) = read_input(&a.input)?;
    let b = file.to_bialgebra_unchecked()?;
    let report = b.verify_structure();
    emit(&a, &bytes, "axioms", &report)?;
    match report.first_failure() {
        None => Ok(()),
        Some(r) => Err(Failure::Check(format!(
            "axiom {} fails at witness {:?}",
            r.axiom,
            r.witness.clone().unwrap_or_default()
        ))),
    }
}

#[derive(Serialize)]
struct CharacterResults {
    count: usize,
    /// Values on the basis, sorted.
    characters: Vec<Character>,
    /// Whether each character restricts to the counit on `A`.
    in_x: Vec<bool>,
}

fn cmd_characters(a: InputArgs) -> Outcome {
    let (bytes, file) = read_input(&a.input)?;
    let inst = load_instance(&file)?;
    let b = &inst.hopf;
    let f = b.field();
    let chars = enumerate_characters(b.alg(), a.seed)?;
    let eps = Character::counit(b);
    let a_basis: Vec<Vec<u32>> = inst.a.subspace().vectors().collect();
    let in_x = chars.iter().map(|c| a_basis.iter().all(|v| c.eval(f, v) == eps.eval(f, v))).collect();
    emit(&a, &bytes, "characters", CharacterResults { count: chars.len(), characters: chars, in_x })?;
    Ok(())
}

#[derive(Serialize)]
struct SimpleResult {
    dim: usize,
    multiplicity: usize,
    annihilator_codim: usize,
}

fn cmd_simples(a: InputArgs) -> Outcome {
    let (bytes, file) = read_input(&a.input)?;
    let inst = load_instance(&file)?;
    let results: Vec<SimpleResult> = repn::simples(inst.hopf.alg(), a.seed)?
        .iter()
        .map(|r| SimpleResult { dim: r.dim(), multiplicity: r.multiplicity, annihilator_codim: r.annihilator.codim() })
        .collect();
    emit(&a, &bytes, "simples", results)?;
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    let (bytes, file) = read_input(&a.input.input)?;
    let inst = load_instance(&file)?;
    let mode = match a.mode {
        ModeArg::Local => Mode::Local,
        ModeArg::Global => Mode::Global,
    };
    let verdict = specmap::verify_theorem(&inst, mode, a.input.seed)?;
    if verdict.experiment {
        eprintln!(
            "experiment (no antipode): {} primitive ideals, {} two-sided orbits of sizes {:?}",
            verdict.summary.prim_dims.len(),
            verdict.orbit_blocks.len(),
            verdict.summary.orbit_sizes
        );
    }
    let agree = verdict.agree;
    let command = match mode {
        Mode::Local => "verify --mode local",
        Mode::Global => "verify --mode global",
    };
    emit(&a.input, &bytes, command, &verdict)?;
    if agree {
        Ok(())
    } else {
        Err(Failure::Check("conditions disagree".into()))
    }
}

fn cmd_remark(a: InputArgs) -> Outcome {
    let (bytes, file) = read_input(&a.input)?;
    let inst = load_instance(&file)?;
    let report = specmap::remark_check(&inst, a.seed)?;
    emit(&a, &bytes, "remark", &report)?;
    if report.consistent {
        Ok(())
    } else {
        Err(Failure::Check("verdicts differ between characters of A".into()))
    }
}

#[derive(Serialize)]
struct PresentationResults {
    generators: Vec<String>,
    rules: usize,
    critical_pairs: usize,
    unresolved: Vec<String>,
    basis_size: Option<usize>,
}

fn cmd_presentation(a: PresentationArgs) -> Outcome {
    if let Some(family) = &a.family {
        let (pres, _) = match family.as_str() {
            "qsl2" => qsl2_presentation(a.ell, a.p)?,
            "usl2" => usl2_presentation(a.ell, a.p)?,
            _ => qm2_presentation(a.t, a.p)?,
        };
        write_out(a.output.as_deref(), &pres.to_text())?;
        return Ok(());
    }
    let path = a.input.as_ref().ok_or_else(|| anyhow!("need --input or --family"))?;
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let pres = Presentation::parse(std::str::from_utf8(&bytes).context("input is not UTF-8")?)?;
    let report = pres.complete_check()?;
    let unresolved: Vec<String> = report
        .unresolved
        .iter()
        .map(|c| {
            format!(
                "{}: {} vs {}",
                pres.format_word(&c.word),
                pres.format_poly(&c.first),
                pres.format_poly(&c.second)
            )
        })
        .collect();
    let basis_size = if unresolved.is_empty() { Some(pres.enumerate_basis()?.len()) } else { None };
    let results = PresentationResults {
        generators: pres.generators().to_vec(),
        rules: pres.rules().len(),
        critical_pairs: report.pairs_checked,
        unresolved,
        basis_size,
    };
    let out = ReportFile::new(&bytes, 0, "presentation", &results);
    write_out(a.output.as_deref(), &out.to_json())?;
    if results.unresolved.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} critical pairs do not resolve", results.unresolved.len())))
    }
}
