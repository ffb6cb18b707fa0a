//! The `eocalc` command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 invalid input,
//! 3 the answer is honestly undetermined.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::comodule::{
    orientable_chern_determined, power_sums_from_chern, tensor_comodule, y2p_comodule,
    ComoduleFile, GradedComodule, Grading, SummandList, Verdict,
};
use crate::error::Error;
use crate::fp::Prime;
use crate::reps::{
    sym_dim, sym_power, sym_power_brute, tensor_rep, tensor_rep_brute, SYM_BRUTE_LIMIT,
};
use crate::splitting::{smash_splitting, split_spectrum, Rule, SpectrumSpec};
use crate::sseq::{
    ahss_run_with, chart_emit, hfpss_run_with, hurewicz_flags, periodicity, AhssBase, AhssOptions,
    ChartFormat, FlagOverrides,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "eocalc",
    version,
    about = "Exact computations for EO at an odd prime"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chart of the homotopy fixed point spectral sequence of EO.
    Homotopy(HomotopyArgs),
    /// Chart of the algebraic Atiyah-Hirzebruch spectral sequence of EO ∧ X_l.
    Ahss(AhssArgs),
    /// Split EO ∧ Z from the mod p homology of Z.
    Split(SplitArgs),
    /// V_r ⊗ V_s by formula and by brute force.
    Tensor(TensorArgs),
    /// Sym^k V_l by formula and by brute force.
    Sym(SymArgs),
    /// Decompose a truncation of H^*(Y_{2p}).
    Y2p(Y2pArgs),
    /// Chern-determined EO-orientability of a sparse space.
    Orient(OrientArgs),
    /// Decompose a comodule into shifted W_l.
    Decompose(DecomposeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Svg,
    Ascii,
    Json,
}

impl From<FormatArg> for ChartFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Svg => ChartFormat::Svg,
            FormatArg::Ascii => ChartFormat::Ascii,
            FormatArg::Json => ChartFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GradingArg {
    Cohomological,
    Homological,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaseArg {
    /// E_∞ of the fixed point spectral sequence and the powers of u.
    Einfinity,
    /// The E_2 page with nonnegative powers of u.
    E2,
}

/// A stem window `LO..HI`, both ends inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window(pub i64, pub i64);

fn parse_window(s: &str) -> Result<Window, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got `{s}`"))?;
    let lo = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad lower end `{lo}`: {e}"))?;
    let hi = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad upper end `{hi}`: {e}"))?;
    if lo > hi {
        return Err(format!("window {lo}..{hi} is empty"));
    }
    Ok(Window(lo, hi))
}

#[derive(Debug, Args)]
pub struct ChartArgs {
    #[arg(long)]
    pub prime: u32,
    /// Stem window, e.g. 0..71 (default: one period).
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    pub stems: Option<Window>,
    #[arg(long, value_enum, default_value = "ascii")]
    pub format: FormatArg,
    /// Highest filtration to draw.
    #[arg(long)]
    pub max_filtration: Option<u32>,
    /// Write the chart here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HomotopyArgs {
    #[command(flatten)]
    pub chart: ChartArgs,
    /// JSON table of filled/open flags for classes no rule decides.
    #[arg(long)]
    pub override_flags: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AhssArgs {
    #[command(flatten)]
    pub chart: ChartArgs,
    /// Number of cells l of X_l.
    #[arg(long)]
    pub cells: usize,
    #[arg(long, value_enum, default_value = "einfinity")]
    pub base: BaseArg,
}

#[derive(Debug, Args)]
pub struct ComoduleInput {
    /// Comodule JSON file.
    pub file: PathBuf,
    /// Overrides the grading declared in the file.
    #[arg(long, value_enum)]
    pub grading: Option<GradingArg>,
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    #[command(flatten)]
    pub input: ComoduleInput,
    #[arg(long)]
    pub connective: bool,
    #[arg(long)]
    pub torsion_free: bool,
}

#[derive(Debug, Args)]
pub struct TensorArgs {
    pub r: usize,
    pub s: usize,
    #[arg(long)]
    pub prime: u32,
}

#[derive(Debug, Args)]
pub struct SymArgs {
    pub l: usize,
    pub k: u64,
    #[arg(long)]
    pub prime: u32,
}

#[derive(Debug, Args)]
pub struct Y2pArgs {
    #[arg(long)]
    pub prime: u32,
    #[arg(long)]
    pub max_degree: i64,
}

#[derive(Debug, Args)]
pub struct OrientArgs {
    #[command(flatten)]
    pub input: ComoduleInput,
    /// Chern classes c_1,c_2,.. of the bundle as residues.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub chern: Vec<i64>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub input: ComoduleInput,
    #[arg(long)]
    pub json: bool,
}

/// A finished command: what to print and how to exit.
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            code: EXIT_OK,
        }
    }
}

/// An input error, reported on stderr with exit code 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Outcome, InputError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            outcome.code
        }
        Err(InputError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
    }
}

/// Entry point for the binary.
pub fn main_with_env() -> i32 {
    run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

fn execute(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Homotopy(a) => homotopy(a),
        Command::Ahss(a) => ahss(a),
        Command::Split(a) => split(a),
        Command::Tensor(a) => tensor(a),
        Command::Sym(a) => sym(a),
        Command::Y2p(a) => y2p(a),
        Command::Orient(a) => orient(a),
        Command::Decompose(a) => decompose(a),
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_comodule(input: &ComoduleInput) -> Result<GradedComodule, InputError> {
    let mut file = ComoduleFile::parse(&read(&input.file)?)
        .map_err(|e| InputError(format!("{}: {e}", input.file.display())))?;
    match input.grading {
        Some(GradingArg::Cohomological) => file.grading = Grading::Cohomological,
        Some(GradingArg::Homological) => file.grading = Grading::Homological,
        None => {}
    }
    Ok(file.to_comodule()?)
}

/// Writes a chart to `--output` when given; the printed text is then empty.
fn deliver(args: &ChartArgs, text: String) -> CmdResult {
    match &args.output {
        Some(path) => {
            std::fs::write(path, text)
                .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn window(args: &ChartArgs, prime: Prime) -> (i64, i64) {
    args.stems
        .map(|w| (w.0, w.1))
        .unwrap_or((0, periodicity(prime) - 1))
}

fn homotopy(a: &HomotopyArgs) -> CmdResult {
    let prime = Prime::new(a.chart.prime)?;
    let overrides = match &a.override_flags {
        Some(path) => Some(
            FlagOverrides::parse(&read(path)?)
                .map_err(|e| InputError(format!("{}: {e}", path.display())))?,
        ),
        None => None,
    };
    let (lo, hi) = window(&a.chart, prime);
    let cap = a
        .chart
        .max_filtration
        .unwrap_or_else(|| crate::sseq::default_max_filtration(prime));
    let chart = hurewicz_flags(&hfpss_run_with(prime, lo, hi, cap)?, overrides.as_ref())?;
    deliver(&a.chart, chart_emit(&chart, a.chart.format.into()))
}

fn ahss(a: &AhssArgs) -> CmdResult {
    let prime = Prime::new(a.chart.prime)?;
    let (lo, hi) = window(&a.chart, prime);
    let mut options = AhssOptions::new(prime).with_base(match a.base {
        BaseArg::Einfinity => AhssBase::Einfinity,
        BaseArg::E2 => AhssBase::E2,
    });
    if let Some(cap) = a.chart.max_filtration {
        options.max_filtration = cap;
    }
    let chart = hurewicz_flags(&ahss_run_with(prime, a.cells, lo, hi, options)?, None)?;
    deliver(&a.chart, chart_emit(&chart, a.chart.format.into()))
}

fn split(a: &SplitArgs) -> CmdResult {
    let m = load_comodule(&a.input)?;
    let spec = SpectrumSpec::new(m, a.connective, a.torsion_free)?;
    let result = split_spectrum(&spec);
    let code = if result.rule == Rule::Undetermined {
        EXIT_UNDETERMINED
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        stdout: result.to_json() + "\n",
        code,
    })
}

fn verdict(agree: bool) -> &'static str {
    if agree {
        "AGREE"
    } else {
        "DISAGREE"
    }
}

fn tensor(a: &TensorArgs) -> CmdResult {
    let prime = Prime::new(a.prime)?;
    let formula = tensor_rep(a.r, a.s, prime)?;
    let oracle = tensor_rep_brute(a.r, a.s, prime)?;
    let step = prime.theta_degree();
    let graded = smash_splitting(
        &SummandList::from_pairs(&[(0, a.r)]),
        &SummandList::from_pairs(&[(0, a.s)]),
        prime,
    );
    let graded_oracle = tensor_comodule(
        &GradedComodule::cyclic(prime, a.r, 0)?,
        &GradedComodule::cyclic(prime, a.s, 0)?,
    )?
    .decompose();
    let agree = formula == oracle && graded == graded_oracle;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "V_{} ⊗ V_{} at p = {} (2n = {step})",
        a.r,
        a.s,
        prime.get()
    );
    let _ = writeln!(out, "formula: {formula}");
    let _ = writeln!(out, "oracle:  {oracle}");
    let _ = writeln!(out, "graded formula: {graded}");
    let _ = writeln!(out, "graded oracle:  {graded_oracle}");
    let _ = writeln!(out, "{}", verdict(agree));
    Ok(Outcome {
        stdout: out,
        code: if agree { EXIT_OK } else { EXIT_VERIFY },
    })
}

fn sym(a: &SymArgs) -> CmdResult {
    let prime = Prime::new(a.prime)?;
    let formula = sym_power(a.l, a.k, prime)?;
    let dim = sym_dim(a.l, a.k)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Sym^{} V_{} at p = {} (dimension {dim})",
        a.k,
        a.l,
        prime.get()
    );
    let _ = writeln!(out, "formula: {formula}");
    let code = match sym_power_brute(a.l, a.k as usize, prime) {
        Ok(oracle) => {
            let _ = writeln!(out, "oracle:  {oracle}");
            let _ = writeln!(out, "{}", verdict(formula == oracle));
            if formula == oracle {
                EXIT_OK
            } else {
                EXIT_VERIFY
            }
        }
        Err(Error::TooLarge { .. }) => {
            let _ = writeln!(
                out,
                "oracle:  skipped (basis larger than {SYM_BRUTE_LIMIT})"
            );
            let _ = writeln!(out, "UNCHECKED");
            EXIT_OK
        }
        Err(e) => return Err(e.into()),
    };
    Ok(Outcome { stdout: out, code })
}

fn y2p(a: &Y2pArgs) -> CmdResult {
    let prime = Prime::new(a.prime)?;
    let p = prime.get() as i64;
    if a.max_degree < 2 * p {
        return Err(Error::DegreeTooSmall {
            max_degree: a.max_degree,
            min: 2 * p,
        }
        .into());
    }
    let y = y2p_comodule(prime, a.max_degree)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "H^*(Y_{}) through degree {} at p = {}: dimension {}",
        2 * p,
        a.max_degree,
        p,
        y.comodule.dim()
    );
    let mut ok = true;
    for f in y.flagged_summands() {
        let s = f.summand;
        let bad = f.complete && s.length < p as usize && (s.length != 1 || s.shift % (2 * p) != 0);
        ok &= !bad;
        let _ = writeln!(
            out,
            "  Σ^{} W_{}{}{}",
            s.shift,
            s.length,
            if f.complete {
                ""
            } else {
                "  (meets the truncation)"
            },
            if bad { "  VIOLATION" } else { "" }
        );
    }
    let _ = writeln!(
        out,
        "{}",
        if ok {
            "trivial summands sit in degrees divisible by 2p"
        } else {
            "a complete short summand is misplaced"
        }
    );
    Ok(Outcome {
        stdout: out,
        code: if ok { EXIT_OK } else { EXIT_VERIFY },
    })
}

fn orient(a: &OrientArgs) -> CmdResult {
    let m = load_comodule(&a.input)?;
    let prime = m.prime();
    let n = prime.n() as usize;
    let psi = power_sums_from_chern(&a.chern, n, prime);
    let psi_top = psi[n - 1];
    let v = orientable_chern_determined(&m, psi_top);
    let code = match v {
        Verdict::Orientable => EXIT_OK,
        Verdict::NotOrientable => EXIT_VERIFY,
        Verdict::Undetermined => EXIT_UNDETERMINED,
    };
    Ok(Outcome {
        stdout: format!("ψ_{n} = {psi_top} mod {}\n{v:?}\n", prime.get()),
        code,
    })
}

fn decompose(a: &DecomposeArgs) -> CmdResult {
    let m = load_comodule(&a.input)?;
    let summands = m.decompose();
    let text = if a.json {
        serde_json::to_string(&summands.to_pairs()).expect("pairs serialize") + "\n"
    } else {
        format!("{summands}\n")
    };
    Ok(Outcome::ok(text))
}
