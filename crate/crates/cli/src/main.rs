//! subposet-lab: poset inspection, family generation, copy counting,
//! profile vectors, closed-form bounds, extremal searches and the
//! verification suite, over families of subsets of [n].
//!
//! Exit codes: 0 success, 1 usage error, 2 budget exceeded, 3 internal
//! self-check failure.

mod output;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{emit, Out};
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use subposet_core::acceptance;
use subposet_core::counting::{contains_copy, count_copies_with, Budget, CountError};
use subposet_core::family::{FamilyError, FamilyTextFormat, SetFamily};
use subposet_core::formulas::{self, EasyCase};
use subposet_core::parse::parse_poset;
use subposet_core::poset::{Poset, PosetError};
use subposet_core::profiles::{self, ProfileError};
use subposet_core::search::{self, Construction, LevelUnionLaOracle, SearchOptions, SearchResult};

const BUDGET_ENV: &str = "SUBPOSET_LAB_BUDGET";

#[derive(Parser)]
#[command(
    name = "subposet-lab",
    version,
    about = "Counts copies of small posets in families of subsets of [n]"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Node budget for searches and enumerations (also SUBPOSET_LAB_BUDGET)
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Seed for randomized verification commands
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect or compare posets
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Generate or read family files
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Count copies of a poset in a family
    Count {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        family: FamilySpec,
        /// Poset to count
        #[arg(long)]
        poset: String,
    },
    /// Test freeness with respect to forbidden posets
    Free {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        family: FamilySpec,
        /// Comma-separated forbidden poset expressions
        #[arg(long)]
        forbid: String,
    },
    /// Size profile, optionally with an l-chain profile
    Profile {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        family: FamilySpec,
        /// Also report the l-chain profile
        #[arg(long)]
        chain_l: Option<usize>,
    },
    /// r-wise intersection profile vector
    Beta {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        family: FamilySpec,
        #[arg(long)]
        r: usize,
    },
    /// r-wise intersection-union profile table
    Gamma {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        family: FamilySpec,
        #[arg(long)]
        r: usize,
    },
    /// gamma^r_{i,j} of a full level
    GammaLevel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Maximize a size-based weight over unions of k full levels
    LevelOpt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
        /// ones | fork:R (l=1) | diamond:R (l=2)
        #[arg(long, default_value = "ones")]
        weight: String,
    },
    /// Closed-form evaluators
    #[command(subcommand)]
    Formula(FormulaCmd),
    /// Extremal searches
    #[command(subcommand)]
    La(LaCmd),
    /// Maximize a profile coordinate over antichains
    #[command(subcommand)]
    AntichainMax(AntichainCmd),
    /// Emit a named extremal construction
    Construct {
        /// vee-extremal | kt | b-free | diamond | bollobas-odd |
        /// fork-two-level | bplus-shifted
        name: String,
        #[arg(long)]
        n: usize,
        /// Parameter k (diamond)
        #[arg(long)]
        k: Option<usize>,
        /// Parameter i (fork-two-level)
        #[arg(long)]
        i: Option<usize>,
        /// Write the family file here instead of reporting JSON
        #[arg(long)]
        out: Option<PathBuf>,
        /// Use the hex mask file format
        #[arg(long)]
        hex: bool,
    },
    /// Exact-search value over level-union value, as an exact ratio
    Ratio {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        count: String,
    },
    /// Run verification suites (name, number, or "all")
    Verify {
        suite: String,
        /// List available suites
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Elements, height and relation pairs of a poset expression
    Show {
        #[arg(long)]
        poset: String,
    },
    /// Isomorphism test between two expressions
    Iso {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Generate a level union (or the full power set) as a family file
    Gen {
        #[arg(long)]
        n: usize,
        /// Comma-separated level list
        #[arg(long)]
        levels: Option<String>,
        /// Whole power set instead of levels
        #[arg(long)]
        all: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        hex: bool,
    },
    /// Parse a family file and report a summary
    Read {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        hex: bool,
    },
}

#[derive(Args)]
struct FamilySpec {
    /// all | level=K | levels=1,2 | file=PATH
    #[arg(long)]
    family: String,
    /// Family files use the hex mask format
    #[arg(long)]
    hex: bool,
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// Sum of the k middle binomials
    SpernerErdos {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Balanced product of binomials for chains in chain-free families
    ChainChain {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// The four elementary extremal values (cases a-d)
    Easy {
        #[arg(long, value_enum)]
        case: EasyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Max over i of C(n,i)C(C(i,i/2),r)
    P3Fork {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Max over i<j of C(n,j)C(j,i)C(C(j-i,(j-i)/2),r)
    P4Diamond {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Sandwich bounds for generalized diamonds
    DiamondBounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Extremal r-tuple bounds over antichains
    Rtuples {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// beta^2_i of the extremal level
    Beta2Level {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
    /// Composition bound for inserting an r-antichain between two posets
    OtimesBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q1: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q2: String,
    },
    /// Composition bound for appending an r-antichain
    OplusBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: String,
        #[arg(long)]
        r: usize,
    },
    /// Level tuple and value for K(r,1,...,1,s)
    Multi1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mid: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Two-level zigzag bounds
    NTwoLevel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Entropy constants
    Constants {
        /// Also evaluate the K(p,2) exponent constant
        #[arg(long)]
        p: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EasyArg {
    A,
    B,
    C,
    D,
}

#[derive(Subcommand)]
enum LaCmd {
    /// Exact maximum over all free families (small n)
    Exact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        count: String,
        /// Drop the empty set and [n] from the candidate pool
        #[arg(long)]
        exclude_extremes: bool,
        /// Witness cap
        #[arg(long)]
        witnesses: Option<usize>,
        /// Raise the exact-search cap (default 4)
        #[arg(long)]
        exact_cap: Option<usize>,
    },
    /// Maximum over free unions of full levels
    Levels {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        count: String,
    },
}

#[derive(Subcommand)]
enum AntichainCmd {
    /// Maximize the number of r-subsets with empty intersection
    Beta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Maximize r-subsets with empty intersection and full union
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

enum CliError {
    Usage(String),
    Budget(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Budget(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Budget(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<subposet_core::ParseError> for CliError {
    fn from(e: subposet_core::ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<PosetError> for CliError {
    fn from(e: PosetError) -> Self {
        match e {
            PosetError::SizeGuard { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::PowerSetTooLarge(_) => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            CountError::EmptyPoset => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ProfileError> for CliError {
    fn from(e: ProfileError) -> Self {
        match e {
            ProfileError::BudgetExceeded(_) => CliError::Budget(e.to_string()),
            ProfileError::InvalidParameter(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<formulas::FormulaError> for CliError {
    fn from(e: formulas::FormulaError) -> Self {
        match e {
            formulas::FormulaError::Range(_) => CliError::Usage(e.to_string()),
            formulas::FormulaError::Oracle(_) => CliError::Budget(e.to_string()),
        }
    }
}

impl From<search::SearchError> for CliError {
    fn from(e: search::SearchError) -> Self {
        match e {
            search::SearchError::InvalidParameter(_) => CliError::Usage(e.to_string()),
            search::SearchError::Budget(_) => CliError::Budget(e.to_string()),
            search::SearchError::Count(inner) => inner.into(),
            search::SearchError::Profile(inner) => inner.into(),
            search::SearchError::Formula(inner) => inner.into(),
            search::SearchError::SelfCheck(_) => CliError::Internal(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn budget_value(cli: &Cli) -> Option<u64> {
    cli.budget
        .or_else(|| std::env::var(BUDGET_ENV).ok().and_then(|v| v.parse().ok()))
}

fn search_options(cli: &Cli) -> SearchOptions {
    let mut opts = SearchOptions::default();
    if let Some(b) = budget_value(cli) {
        opts.budget = b;
        opts.count_budget = Budget::new(b);
    }
    opts
}

fn subset_budget(cli: &Cli) -> Budget {
    budget_value(cli).map(Budget::new).unwrap_or_default()
}

/// Splits a comma-separated poset list, respecting parentheses so that
/// K(1,2) or otimes(P1,1,P2) survive.
fn parse_posets(list: &str) -> Result<Vec<Poset>, CliError> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (idx, ch) in list.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(parse_poset(&list[start..idx])?);
                start = idx + 1;
            }
            _ => {}
        }
    }
    out.push(parse_poset(&list[start..])?);
    Ok(out)
}

fn load_family(n: usize, spec: &FamilySpec) -> Result<SetFamily, CliError> {
    let format = if spec.hex {
        FamilyTextFormat::HexMask
    } else {
        FamilyTextFormat::Elements
    };
    let fam = match spec.family.as_str() {
        "all" => SetFamily::power_set(n)?,
        s if s.starts_with("level=") => {
            let k: usize = s["level=".len()..]
                .parse()
                .map_err(|_| CliError::Usage(format!("bad level in '{s}'")))?;
            SetFamily::full_level(n, k)?
        }
        s if s.starts_with("levels=") => {
            let ks = parse_level_list(&s["levels=".len()..])?;
            SetFamily::level_union(n, &ks)?
        }
        s if s.starts_with("file=") => {
            let path = &s["file=".len()..];
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
            let fam = SetFamily::from_text(&text, format)?;
            if fam.n() != n {
                return Err(CliError::Usage(format!(
                    "family file has n={}, expected {n}",
                    fam.n()
                )));
            }
            fam
        }
        other => {
            return Err(CliError::Usage(format!(
                "bad family spec '{other}' (all | level=K | levels=1,2 | file=PATH)"
            )))
        }
    };
    Ok(fam)
}

fn parse_level_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad level '{t}'")))
        })
        .collect()
}

fn big(v: &subposet_core::CopyCount) -> Value {
    Value::String(v.to_string())
}

fn family_json(f: &SetFamily) -> Value {
    json!({
        "n": f.n(),
        "members": f.members().iter().map(|&m| subposet_core::family::set_to_string(m)).collect::<Vec<_>>(),
    })
}

fn search_result_json(r: &SearchResult) -> Value {
    json!({
        "value": r.value.to_string(),
        "exact": r.exact,
        "explored": r.explored.to_string(),
        "witnesses": r.witnesses.iter().map(family_json).collect::<Vec<_>>(),
    })
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let out = Out::from(matches!(cli.format, Format::Tsv));
    match &cli.cmd {
        Cmd::Poset(PosetCmd::Show { poset }) => {
            let p = parse_poset(poset)?;
            let rels: Vec<Value> = p
                .relation_pairs()
                .into_iter()
                .map(|(x, y)| json!([x, y]))
                .collect();
            emit(
                &out,
                json!({
                    "expr": p.expr().unwrap_or(poset),
                    "m": p.len(),
                    "height": p.height(),
                    "relations": rels,
                }),
            );
        }
        Cmd::Poset(PosetCmd::Iso { a, b }) => {
            let pa = parse_poset(a)?;
            let pb = parse_poset(b)?;
            emit(&out, json!({"isomorphic": pa.is_isomorphic(&pb)?}));
        }
        Cmd::Family(FamilyCmd::Gen {
            n,
            levels,
            all,
            out: path,
            hex,
        }) => {
            let fam = if *all {
                SetFamily::power_set(*n)?
            } else {
                let ks = parse_level_list(levels.as_deref().unwrap_or(""))?;
                SetFamily::level_union(*n, &ks)?
            };
            let format = if *hex {
                FamilyTextFormat::HexMask
            } else {
                FamilyTextFormat::Elements
            };
            let text = fam.to_text(format);
            match path {
                Some(p) => {
                    std::fs::write(p, text).map_err(|e| {
                        CliError::Usage(format!("cannot write {}: {e}", p.display()))
                    })?;
                    emit(
                        &out,
                        json!({"written": p.display().to_string(), "size": fam.len()}),
                    );
                }
                None => {
                    std::io::stdout()
                        .write_all(text.as_bytes())
                        .expect("stdout");
                }
            }
        }
        Cmd::Family(FamilyCmd::Read { file, hex }) => {
            let format = if *hex {
                FamilyTextFormat::HexMask
            } else {
                FamilyTextFormat::Elements
            };
            let text = std::fs::read_to_string(file)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", file.display())))?;
            let fam = SetFamily::from_text(&text, format)?;
            emit(
                &out,
                json!({
                    "n": fam.n(),
                    "size": fam.len(),
                    "alpha": fam.size_profile().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "antichain": fam.is_antichain(),
                }),
            );
        }
        Cmd::Count { n, family, poset } => {
            let f = load_family(*n, family)?;
            let q = parse_poset(poset)?;
            let v = count_copies_with(&q, &f, &subset_budget(cli))?;
            emit(&out, json!({"value": big(&v)}));
        }
        Cmd::Free { n, family, forbid } => {
            let f = load_family(*n, family)?;
            let forbidden = parse_posets(forbid)?;
            let mut free = true;
            for p in &forbidden {
                if contains_copy(p, &f)? {
                    free = false;
                    break;
                }
            }
            emit(&out, json!({"free": free}));
        }
        Cmd::Profile { n, family, chain_l } => {
            let f = load_family(*n, family)?;
            let alpha: Vec<String> = f.size_profile().iter().map(|c| c.to_string()).collect();
            let mut obj = json!({"alpha": alpha});
            if let Some(l) = chain_l {
                let cp = profiles::chain_profile(&f, *l)?;
                let entries: Vec<Value> = cp
                    .iter()
                    .map(|(sizes, count)| json!({"sizes": sizes, "count": count.to_string()}))
                    .collect();
                obj["chain"] = Value::Array(entries);
            }
            emit(&out, obj);
        }
        Cmd::Beta { n, family, r } => {
            let f = load_family(*n, family)?;
            let b = profiles::beta(&f, *r, &subset_budget(cli))?;
            emit(
                &out,
                json!({
                    "r": r,
                    "beta": b.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                }),
            );
        }
        Cmd::Gamma { n, family, r } => {
            let f = load_family(*n, family)?;
            let g = profiles::gamma(&f, *r, &subset_budget(cli))?;
            let entries: Vec<Value> = g
                .iter()
                .map(|(&(i, j), count)| json!({"i": i, "j": j, "count": count.to_string()}))
                .collect();
            emit(&out, json!({"r": r, "entries": entries}));
        }
        Cmd::GammaLevel { n, m, r, i, j } => {
            let v = profiles::gamma_level(*n, *m, *r, *i, *j)?;
            emit(&out, json!({"value": big(&v)}));
        }
        Cmd::LevelOpt { n, k, l, weight } => {
            let w = parse_weight(weight, *l)?;
            let (levels, value) = profiles::maximize_level_weight(*n, *k, *l, w.as_ref())?;
            emit(&out, json!({"levels": levels, "value": big(&value)}));
        }
        Cmd::Formula(f) => run_formula(cli, &out, f)?,
        Cmd::La(LaCmd::Exact {
            n,
            forbid,
            count,
            exclude_extremes,
            witnesses,
            exact_cap,
        }) => {
            let mut opts = search_options(cli);
            opts.exclude_empty_and_full = *exclude_extremes;
            if let Some(w) = witnesses {
                opts.witness_cap = *w;
            }
            if let Some(c) = exact_cap {
                opts.exact_cap = *c;
            }
            let forbidden = parse_posets(forbid)?;
            let q = parse_poset(count)?;
            let r = search::la_exact(*n, &forbidden, &q, &opts)?;
            emit(&out, search_result_json(&r));
        }
        Cmd::La(LaCmd::Levels { n, forbid, count }) => {
            let forbidden = parse_posets(forbid)?;
            let q = parse_poset(count)?;
            let r = search::la_levels(*n, &forbidden, &q, &search_options(cli))?;
            emit(&out, search_result_json(&r));
        }
        Cmd::AntichainMax(AntichainCmd::Beta { n, r }) => {
            let res = search::antichain_max_beta(*n, *r, &search_options(cli))?;
            emit(&out, search_result_json(&res));
        }
        Cmd::AntichainMax(AntichainCmd::Gamma { n, r }) => {
            let res = search::antichain_max_gamma(*n, *r, &search_options(cli))?;
            emit(&out, search_result_json(&res));
        }
        Cmd::Construct {
            name,
            n,
            k,
            i,
            out: path,
            hex,
        } => {
            let c = match name.as_str() {
                "vee-extremal" => Construction::VeeExtremal,
                "kt" => Construction::Kt,
                "b-free" => Construction::BFree,
                "diamond" => Construction::Diamond {
                    k: k.ok_or_else(|| CliError::Usage("diamond needs --k".into()))?,
                },
                "bollobas-odd" => Construction::BollobasOdd,
                "fork-two-level" => Construction::ForkTwoLevel {
                    i: i.ok_or_else(|| CliError::Usage("fork-two-level needs --i".into()))?,
                },
                "bplus-shifted" => Construction::BplusShifted,
                other => return Err(CliError::Usage(format!("unknown construction '{other}'"))),
            };
            let fam = search::construct(c, *n)?;
            match path {
                Some(p) => {
                    let format = if *hex {
                        FamilyTextFormat::HexMask
                    } else {
                        FamilyTextFormat::Elements
                    };
                    std::fs::write(p, fam.to_text(format)).map_err(|e| {
                        CliError::Usage(format!("cannot write {}: {e}", p.display()))
                    })?;
                    emit(
                        &out,
                        json!({"written": p.display().to_string(), "size": fam.len()}),
                    );
                }
                None => emit(&out, family_json(&fam)),
            }
        }
        Cmd::Ratio { n, forbid, count } => {
            let forbidden = parse_posets(forbid)?;
            let q = parse_poset(count)?;
            let r = search::conjecture_ratio(*n, &forbidden, &q, &search_options(cli))?;
            emit(&out, json!({"ratio": r.to_string()}));
        }
        Cmd::Verify { suite, list } => {
            if *list {
                for (id, name) in acceptance::CRITERIA {
                    println!("{id:2} {name}");
                }
                return Ok(());
            }
            let seed = cli.seed.unwrap_or(acceptance::DEFAULT_SEED);
            let outcomes = if suite == "all" {
                acceptance::run_all(seed)
            } else {
                let id = acceptance::criterion_id(suite).ok_or_else(|| {
                    CliError::Usage(format!("unknown suite '{suite}' (try --list)"))
                })?;
                vec![acceptance::run_criterion(id, seed)]
            };
            let mut failed = 0;
            for o in &outcomes {
                let tag = if o.passed { "PASS" } else { "FAIL" };
                println!("{tag} criterion {:2} ({}): {}", o.id, o.name, o.detail);
                if !o.passed {
                    failed += 1;
                }
            }
            if failed > 0 {
                return Err(CliError::Internal(format!("{failed} criteria failed")));
            }
        }
    }
    Ok(())
}

type WeightFn = Box<dyn Fn(&[usize]) -> subposet_core::CopyCount + Sync>;

fn parse_weight(spec: &str, l: usize) -> Result<WeightFn, CliError> {
    use subposet_core::binom::{binomial, binomial_of_big};
    if spec == "ones" {
        return Ok(Box::new(|_s| 1u32.into()));
    }
    if let Some(r) = spec.strip_prefix("fork:") {
        let r: usize = r
            .parse()
            .map_err(|_| CliError::Usage(format!("bad weight '{spec}'")))?;
        if l != 1 {
            return Err(CliError::Usage("fork:R weights need --l 1".into()));
        }
        return Ok(Box::new(move |s| {
            binomial_of_big(&binomial(s[0], s[0] / 2), r)
        }));
    }
    if let Some(r) = spec.strip_prefix("diamond:") {
        let r: usize = r
            .parse()
            .map_err(|_| CliError::Usage(format!("bad weight '{spec}'")))?;
        if l != 2 {
            return Err(CliError::Usage("diamond:R weights need --l 2".into()));
        }
        return Ok(Box::new(move |s| {
            let u = s[1] - s[0];
            binomial_of_big(&binomial(u, u / 2), r)
        }));
    }
    Err(CliError::Usage(format!(
        "unknown weight '{spec}' (ones | fork:R | diamond:R)"
    )))
}

fn run_formula(cli: &Cli, out: &Out, f: &FormulaCmd) -> Result<(), CliError> {
    match f {
        FormulaCmd::SpernerErdos { n, k } => {
            let v = formulas::sperner_erdos(*n, *k)?;
            emit(out, json!({"value": big(&v)}));
        }
        FormulaCmd::ChainChain { n, k } => {
            let v = formulas::la_chain_chain(*n, *k)?;
            emit(out, json!({"value": big(&v.value), "arg": v.arg}));
        }
        FormulaCmd::Easy { case, n, r } => {
            let case = match case {
                EasyArg::A => EasyCase::A,
                EasyArg::B => EasyCase::B,
                EasyArg::C => EasyCase::C,
                EasyArg::D => EasyCase::D,
            };
            let v = formulas::easy_value(case, *n, *r)?;
            emit(out, json!({"value": big(&v)}));
        }
        FormulaCmd::P3Fork { n, r } => {
            let v = formulas::la_p3_fork(*n, *r)?;
            emit(out, json!({"value": big(&v.value), "arg": v.arg}));
        }
        FormulaCmd::P4Diamond { n, r } => {
            let v = formulas::la_p4_diamond(*n, *r)?;
            emit(out, json!({"value": big(&v.value), "arg": v.arg}));
        }
        FormulaCmd::DiamondBounds { n, k, l } => {
            let b = formulas::diamond_bounds(*n, *k, *l)?;
            emit(
                out,
                json!({"bounds": {"lower": big(&b.lower), "upper": big(&b.upper)}}),
            );
        }
        FormulaCmd::Rtuples { n, r } => {
            let b = formulas::rtuples_bounds(*n, *r)?;
            emit(
                out,
                json!({
                    "gamma_bound": big(&b.gamma_bound),
                    "gamma_sharp": b.gamma_sharp,
                    "beta_bound": big(&b.beta_bound),
                    "beta_level": b.beta_level,
                    "beta_sharp": b.beta_sharp,
                }),
            );
        }
        FormulaCmd::Beta2Level { n, i } => {
            let v = formulas::beta2_level_bound(*n, *i)?;
            emit(out, json!({"value": big(&v)}));
        }
        FormulaCmd::OtimesBound { n, q1, r, q2 } => {
            let oracle = LevelUnionLaOracle {
                opts: search_options(cli),
            };
            let p1 = parse_poset(q1)?;
            let p2 = parse_poset(q2)?;
            let v = formulas::compose_otimes_bound(*n, &p1, *r, &p2, &oracle)?;
            emit(out, json!({"value": big(&v)}));
        }
        FormulaCmd::OplusBound { n, q, r } => {
            let oracle = LevelUnionLaOracle {
                opts: search_options(cli),
            };
            let p = parse_poset(q)?;
            let v = formulas::compose_oplus_bound(*n, &p, *r, &oracle)?;
            emit(out, json!({"value": big(&v)}));
        }
        FormulaCmd::Multi1 { n, mid, r, s } => {
            let v = formulas::multi1_value(*n, *mid, *r, *s)?;
            emit(
                out,
                json!({"value": big(&v.value), "arg": v.arg, "levels": v.levels}),
            );
        }
        FormulaCmd::NTwoLevel { n, i, j } => {
            let b = formulas::n_two_level_bounds(*n, *i, *j)?;
            emit(
                out,
                json!({"bounds": {"lower": big(&b.lower), "upper": big(&b.upper)}}),
            );
        }
        FormulaCmd::Constants { p } => {
            let c = formulas::numeric_constants();
            let mut obj = json!({"c0": c.c0, "c": c.c, "bb": c.bb, "c2": c.c2});
            if let Some(p) = p {
                obj["c_p"] = json!(formulas::c_p(*p));
            }
            emit(out, obj);
        }
    }
    Ok(())
}
