use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use qcong::cyclotomic::{factorial_ratio_signature, qbinomial_signature};
use qcong::families::classical::{chu_check, dixon_full_check, dixon_limit_check, qbt_check, ChuForm};
use qcong::families::cyclic::Regime;
use qcong::families::lemma::{
    lemma21_check, lemma21_check_corrected, remark_x_identity_check, three_term_recurrence_check, IdentityCheck,
};
use qcong::families::pq::{pq_closed_form, pq_value, Method, Which as PqWhich};
use qcong::families::st::{qinv_symmetry_check, st_recurrence_check, Kernel, StKind};
use qcong::families::{FamilyId, ParamValue, Params, Sign, SumSpec};
use qcong::Strategy;

use crate::config::SweepConfig;
use crate::record::read_log;
use crate::report::summarize;
use crate::sweep::run_sweep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "qcong", version, about = "Exact verification of q-binomial divisibility statements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check one instance of a family.
    Verify {
        family: String,
        /// `k=v,...`; list values are colon-separated, e.g. `n=1:2`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        variant: Option<String>,
        #[arg(long, default_value = "both")]
        strategy: String,
        /// Lift the proven bounds of the cyclic families.
        #[arg(long)]
        conjectural: bool,
        #[arg(long)]
        show_quotient: bool,
    },
    /// Run a parameter sweep described by a config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        resume: bool,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        conjectural: bool,
    },
    /// Print a cyclotomic factorization.
    #[command(group(ArgGroup::new("what").required(true).args(["qbinomial", "qfactorial"])))]
    Factor {
        #[arg(long, num_args = 2, value_names = ["M", "K"])]
        qbinomial: Option<Vec<i64>>,
        #[arg(long, value_name = "N")]
        qfactorial: Option<i64>,
        /// Also print the expanded polynomial.
        #[arg(long)]
        expand: bool,
    },
    /// Check an exact identity.
    Identity {
        kind: IdentityKind,
        #[arg(long, default_value = "")]
        params: String,
        /// `s` or `t` for st/qinv, `p` or `q` for pq.
        #[arg(long)]
        which: Option<String>,
        /// `standard` or `remark` for st and chu.
        #[arg(long, default_value = "standard")]
        form: String,
        /// Print both sides.
        #[arg(long)]
        show: bool,
    },
    /// Aggregate a verdict log.
    Report {
        #[arg(long)]
        log: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IdentityKind {
    /// n, s, v
    Lemma21,
    /// n, s, v; the alternating variant with its s = n term
    Lemma21Corrected,
    /// n, s, a
    RemarkX,
    /// n, r, s, v
    Recurrence,
    /// n (list), j, r; --which, --form
    St,
    /// n (list), r; --which
    Qinv,
    /// N, a
    QBinomial,
    /// n1, n2, k; --form
    Chu,
    /// l, m, n
    Dixon,
    /// n
    DixonLimit,
    /// n, j, r; --which
    Pq,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Usage>;

/// Runs the CLI and returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify { family, params, variant, strategy, conjectural, show_quotient } => {
            verify(out, &family, &params, variant.as_deref(), &strategy, conjectural, show_quotient)
        }
        Command::Sweep { config, output, resume, threads, conjectural } => {
            sweep(out, err, config, output, resume, threads, conjectural)
        }
        Command::Factor { qbinomial, qfactorial, expand } => factor(out, qbinomial, qfactorial, expand),
        Command::Identity { kind, params, which, form, show } => identity(out, kind, &params, which.as_deref(), &form, show),
        Command::Report { log } => report(out, log),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn verify(
    out: &mut dyn Write,
    family: &str,
    params: &str,
    variant: Option<&str>,
    strategy: &str,
    conjectural: bool,
    show_quotient: bool,
) -> Outcome {
    let family: FamilyId = family.parse()?;
    let params: Params = params.parse()?;
    let sign = variant.map(str::parse::<Sign>).transpose()?;
    let strategy: Strategy = strategy.parse()?;
    let regime = if conjectural { Regime::Conjectural } else { Regime::Proven };
    let spec = SumSpec::new(family, params, sign).with_regime(regime);
    let inst = spec.build()?;
    let v = inst.check(strategy);
    let variant = sign.map(|s| format!(" {s}")).unwrap_or_default();
    writeln!(out, "{family} {}{variant}", spec.params)?;
    writeln!(out, "modulus: {}", inst.modulus)?;
    writeln!(out, "holds: {}", v.holds)?;
    if let Some(fp) = &v.fingerprint {
        writeln!(out, "fingerprint: {}", serde_json::to_string(fp)?)?;
    }
    if let Some((e, c)) = &v.remainder_low_term {
        writeln!(out, "remainder lowest term: {c}*q^{e}")?;
    }
    if show_quotient {
        if let Some(q) = &v.quotient {
            writeln!(out, "quotient: {q}")?;
        }
    }
    Ok(match (v.holds, spec.is_conjectural()) {
        (true, _) => EXIT_OK,
        (false, false) => EXIT_FAILURE,
        (false, true) => EXIT_COUNTEREXAMPLE,
    })
}

fn sweep(
    out: &mut dyn Write,
    err: &mut dyn Write,
    config: PathBuf,
    output: Option<PathBuf>,
    resume: bool,
    threads: Option<usize>,
    conjectural: bool,
) -> Outcome {
    let mut cfg = SweepConfig::load(&config)?;
    if let Some(o) = output {
        cfg.output = o;
    }
    cfg.resume |= resume;
    cfg.conjectural |= conjectural;
    if threads.is_some() {
        cfg.threads = threads;
    }
    let rep = run_sweep(&cfg)?;
    let c = &rep.counts;
    writeln!(
        out,
        "{}: executed {}, verified {}, failed {}, counterexamples {}, skipped {}, resumed {}, in {:.2?}",
        cfg.family,
        rep.executed(),
        c.verified,
        c.failed,
        c.counterexamples,
        c.skipped,
        rep.resumed,
        rep.elapsed
    )?;
    for r in &rep.failures {
        writeln!(err, "FAILED {} {} {:?}", r.family, r.params, r.variant)?;
    }
    if !rep.counterexamples.is_empty() {
        writeln!(err, "=== COUNTEREXAMPLE ===")?;
        for r in &rep.counterexamples {
            let variant = r.variant.map(|s| format!(" {s}")).unwrap_or_default();
            writeln!(err, "{} {}{} modulus {}", r.family, r.params, variant, r.modulus.as_deref().unwrap_or("?"))?;
        }
        if rep.not_run > 0 {
            writeln!(err, "sweep stopped with {} tuples not run", rep.not_run)?;
        }
    }
    writeln!(out, "log: {}", cfg.output.display())?;
    Ok(rep.exit_code())
}

fn factor(out: &mut dyn Write, qbinomial: Option<Vec<i64>>, qfactorial: Option<i64>, expand: bool) -> Outcome {
    let sig = match (qbinomial, qfactorial) {
        (Some(mk), _) => qbinomial_signature(mk[0], mk[1])?,
        (None, Some(n)) => factorial_ratio_signature(&[n], &[])?,
        (None, None) => return Err(Usage("nothing to factor".into())),
    };
    writeln!(out, "{sig}")?;
    if expand {
        writeln!(out, "{}", sig.expand()?)?;
    }
    Ok(EXIT_OK)
}

fn int(p: &Params, name: &str) -> std::result::Result<i64, Usage> {
    match p.get(name) {
        Some(ParamValue::Int(v)) => Ok(*v),
        Some(ParamValue::List(_)) => Err(Usage(format!("`{name}` must be a single integer"))),
        None => Err(Usage(format!("missing parameter `{name}`"))),
    }
}

fn list(p: &Params, name: &str) -> std::result::Result<Vec<i64>, Usage> {
    match p.get(name) {
        Some(ParamValue::Int(v)) => Ok(vec![*v]),
        Some(ParamValue::List(v)) => Ok(v.clone()),
        None => Err(Usage(format!("missing parameter `{name}`"))),
    }
}

fn variant(p: &Params) -> std::result::Result<u8, Usage> {
    let v = int(p, "v")?;
    u8::try_from(v).ok().filter(|v| (1..=4).contains(v)).ok_or_else(|| Usage(format!("v must be 1..4, got {v}")))
}

fn identity(out: &mut dyn Write, kind: IdentityKind, params: &str, which: Option<&str>, form: &str, show: bool) -> Outcome {
    let p: Params = params.parse()?;
    let st_kind = || match which.map(str::to_ascii_lowercase).as_deref() {
        Some("s") => Ok(StKind::S),
        Some("t") => Ok(StKind::T),
        _ => Err(Usage("--which s|t is required".into())),
    };
    let remark = match form {
        "standard" => false,
        "remark" => true,
        _ => return Err(Usage(format!("unknown form `{form}`"))),
    };
    let check: IdentityCheck = match kind {
        IdentityKind::Lemma21 => lemma21_check(int(&p, "n")?, int(&p, "s")?, variant(&p)?)?,
        IdentityKind::Lemma21Corrected => lemma21_check_corrected(int(&p, "n")?, int(&p, "s")?, variant(&p)?)?,
        IdentityKind::Recurrence => three_term_recurrence_check(int(&p, "n")?, int(&p, "r")?, int(&p, "s")?, variant(&p)?)?,
        IdentityKind::St => {
            let kernel = if remark { Kernel::Remark } else { Kernel::Standard };
            st_recurrence_check(st_kind()?, &list(&p, "n")?, int(&p, "j")?, int(&p, "r")?, kernel)?
        }
        IdentityKind::QBinomial => qbt_check(int(&p, "N")?, int(&p, "a")?)?,
        IdentityKind::Chu => {
            let form = if remark { ChuForm::Remark } else { ChuForm::Standard };
            chu_check(int(&p, "n1")?, int(&p, "n2")?, int(&p, "k")?, form)?
        }
        IdentityKind::Dixon => dixon_full_check(int(&p, "l")?, int(&p, "m")?, int(&p, "n")?)?,
        IdentityKind::DixonLimit => dixon_limit_check(int(&p, "n")?)?,
        IdentityKind::RemarkX => {
            let c = remark_x_identity_check(int(&p, "n")?, int(&p, "s")?, int(&p, "a")?)?;
            writeln!(out, "equal: {}", c.equal)?;
            if c.degenerate {
                writeln!(out, "degenerate: (x;q)_(n+1) = 0")?;
            }
            return Ok(if c.equal { EXIT_OK } else { EXIT_FAILURE });
        }
        IdentityKind::Qinv => {
            let c = qinv_symmetry_check(st_kind()?, &list(&p, "n")?, int(&p, "r")?)?;
            let e = c.exponents;
            writeln!(out, "sum level (q^{}): {}", e.sum_level, c.sum_level)?;
            writeln!(out, "prefactor level (-q^{}): {}", e.sum_level - e.prefactor, c.prefactor_level)?;
            writeln!(out, "displayed unit (q^{}): {}", e.displayed, c.displayed)?;
            writeln!(out, "equal: {}", c.corrected_holds())?;
            return Ok(if c.corrected_holds() { EXIT_OK } else { EXIT_FAILURE });
        }
        IdentityKind::Pq => {
            let w = match which.map(str::to_ascii_uppercase).as_deref() {
                Some(s) => s.parse::<PqWhich>()?,
                None => return Err(Usage("--which p|q is required".into())),
            };
            let (n, j, r) = (int(&p, "n")?, int(&p, "j")?, int(&p, "r")?);
            let direct = pq_value(w, n, j, r, Method::Direct)?;
            let rec = pq_value(w, n, j, r, Method::Recurrence)?;
            writeln!(out, "direct = recurrence: {}", direct == rec)?;
            let mut ok = direct == rec;
            if let Some(closed) = pq_closed_form(w, n, j, r)? {
                writeln!(out, "closed form: {}", closed == direct)?;
                ok &= closed == direct;
            }
            if show {
                writeln!(out, "value: {direct}")?;
            }
            writeln!(out, "equal: {ok}")?;
            return Ok(if ok { EXIT_OK } else { EXIT_FAILURE });
        }
    };
    if show {
        writeln!(out, "lhs: {}", check.lhs)?;
        writeln!(out, "rhs: {}", check.rhs)?;
    }
    writeln!(out, "equal: {}", check.equal)?;
    Ok(if check.equal { EXIT_OK } else { EXIT_FAILURE })
}

fn report(out: &mut dyn Write, log: PathBuf) -> Outcome {
    let (records, _) = read_log(&log, false)?;
    let summary = summarize(&records);
    write!(out, "{summary}")?;
    Ok(summary.totals.exit_code())
}
