use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bsq::bs::BsAutomaton;
use bsq::compile::{compile_with, CompileOptions};
use bsq::decisions::{default_k_max, has_finite_index_bounded, is_recognizable_bounded, rational_membership, RecognizabilityVerdict};
use bsq::group::{GeneratorWord, GroupContext, GroupElement};
use bsq::hardness::{parse_dfa, reduce};
use bsq::oracle::window_check;
use bsq::pe::{self, PeWord};
use bsq::pe_regular::PeSet;
use bsq::Error;

#[derive(Parser)]
#[command(name = "bsq", version, about = "Rational and PE-regular subsets of BS(1,q)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Canonical pointed expansion of a generator word, or the element of a pe word.
    Pe {
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Generator word such as "a t a^-1", or a pe word with --decode.
        input: String,
        #[arg(long)]
        decode: bool,
    },
    /// Product of two elements, printed as a pe word.
    Mul {
        #[arg(long, default_value_t = 2)]
        q: u32,
        left: String,
        right: String,
    },
    /// Compile a BS-automaton file to a pe dump.
    Compile {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        stats: bool,
        #[arg(long, default_value_t = 8)]
        max_rounds: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u128,
    },
    /// Whether an element lies in a BS-automaton or pe dump.
    Member {
        file: PathBuf,
        /// Generator word or pe word.
        element: String,
    },
    /// Boolean operations, products and inverses of pe dumps.
    Op {
        op: SetOp,
        files: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Bounded recognizability test.
    Recog {
        file: PathBuf,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Bounded finite-index test for a finitely generated subgroup.
    FiniteIndex {
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Generators separated by ';'.
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
    },
    /// Reduce DFA intersection nonemptiness to identity membership.
    Hardness {
        dfas: Vec<PathBuf>,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also decide the reduced instance.
        #[arg(long)]
        decide: bool,
    },
    /// Compare a compiled automaton with bounded run enumeration.
    OracleCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_run: usize,
        #[arg(long, default_value_t = 6)]
        max_pe_len: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SetOp {
    Union,
    Intersect,
    Difference,
    Complement,
    Product,
    Inverse,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Out = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_or_print(output: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn element(ctx: &GroupContext, s: &str) -> Result<GroupElement, Failure> {
    let s = s.trim();
    if s.starts_with('+') || s.starts_with('-') {
        Ok(pe::decode(ctx, &PeWord::from_text(s)?)?)
    } else {
        Ok(ctx.eval_word(&GeneratorWord::from_text(s)?))
    }
}

enum Loaded {
    Bs(BsAutomaton),
    Pe(PeSet),
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    let text = read(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if first.starts_with("bs") {
        Ok(Loaded::Bs(BsAutomaton::parse(&text)?))
    } else if first.starts_with("pe") {
        Ok(Loaded::Pe(PeSet::parse(&text)?))
    } else {
        Err(Failure::Usage(format!("{}: expected a bs or pe header", path.display())))
    }
}

fn load_set(path: &Path) -> Result<PeSet, Failure> {
    match load(path)? {
        Loaded::Pe(s) => Ok(s),
        Loaded::Bs(a) => Ok(compile_with(&a, &CompileOptions::default())?.0),
    }
}

fn run(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Pe { q, input, decode } => {
            let ctx = GroupContext::new(q)?;
            let g = element(&ctx, &input)?;
            if decode {
                println!("{g}");
            } else {
                println!("{}", pe::encode(&ctx, &g));
            }
            Ok(true)
        }
        Cmd::Mul { q, left, right } => {
            let ctx = GroupContext::new(q)?;
            let g = ctx.multiply(&element(&ctx, &left)?, &element(&ctx, &right)?);
            println!("{}", pe::encode(&ctx, &g));
            Ok(true)
        }
        Cmd::Compile { file, output, stats, max_rounds, budget } => {
            let Loaded::Bs(a) = load(&file)? else {
                return Err(Failure::Usage("compile expects a bs file".into()));
            };
            let (set, st) = compile_with(&a, &CompileOptions { max_rounds, budget_limit: budget })?;
            if stats {
                eprintln!(
                    "components {} normalized_states {} move_states {} k {} rounds {} result_states {}",
                    st.components, st.normalized_states, st.move_states, st.k, st.rounds, st.result_states
                );
                for s in &st.stars {
                    eprintln!("star {} gcd {} bound {}", s.state, s.gcd, s.bound);
                }
            }
            write_or_print(&output, &set.dump())?;
            Ok(true)
        }
        Cmd::Member { file, element: e } => {
            let found = match load(&file)? {
                Loaded::Bs(a) => {
                    let g = element(a.ctx(), &e)?;
                    if e.trim().starts_with(['+', '-']) {
                        bsq::compile::membership_with(&a, &g, &CompileOptions::default())?
                    } else {
                        rational_membership(&a, &GeneratorWord::from_text(&e)?)?
                    }
                }
                Loaded::Pe(s) => s.contains(&element(s.ctx(), &e)?),
            };
            println!("{found}");
            Ok(found)
        }
        Cmd::Op { op, files, output } => {
            let sets = files.iter().map(|f| load_set(f)).collect::<Result<Vec<_>, _>>()?;
            let arity = matches!(op, SetOp::Complement | SetOp::Inverse).then_some(1).unwrap_or(2);
            if sets.len() != arity {
                return Err(Failure::Usage(format!("operation takes {arity} file(s)")));
            }
            let r = match op {
                SetOp::Union => sets[0].union(&sets[1])?,
                SetOp::Intersect => sets[0].intersect(&sets[1])?,
                SetOp::Difference => sets[0].difference(&sets[1])?,
                SetOp::Product => sets[0].product(&sets[1])?,
                SetOp::Complement => sets[0].complement(),
                SetOp::Inverse => sets[0].inverse(),
            };
            write_or_print(&output, &r.dump())?;
            Ok(true)
        }
        Cmd::Recog { file, kmax } => {
            let set = load_set(&file)?;
            let v = is_recognizable_bounded(&set, kmax.unwrap_or_else(|| default_k_max(&set)))?;
            println!("{v}");
            Ok(matches!(v, RecognizabilityVerdict::Recognizable(_)))
        }
        Cmd::FiniteIndex { q, gens, kmax } => {
            let ctx = GroupContext::new(q)?;
            let gens = gens.split(';').map(|g| GeneratorWord::from_text(g.trim())).collect::<Result<Vec<_>, _>>()?;
            let v = has_finite_index_bounded(ctx, &gens, kmax)?;
            println!("{v}");
            Ok(matches!(v, RecognizabilityVerdict::Recognizable(_)))
        }
        Cmd::Hardness { dfas, q, output, decide } => {
            let parsed = dfas.iter().map(|f| Ok(parse_dfa(&read(f)?)?)).collect::<Result<Vec<_>, Failure>>()?;
            let a = reduce(&parsed, GroupContext::new(q)?)?;
            write_or_print(&output, &a.serialize())?;
            if decide {
                let yes = rational_membership(&a, &GeneratorWord::new(Vec::new()))?;
                eprintln!("identity accepted: {yes}");
                return Ok(yes);
            }
            Ok(true)
        }
        Cmd::OracleCheck { file, max_run, max_pe_len } => {
            let Loaded::Bs(a) = load(&file)? else {
                return Err(Failure::Usage("oracle-check expects a bs file".into()));
            };
            let set = compile_with(&a, &CompileOptions::default())?.0;
            let report = window_check(&file.display().to_string(), &a, &set, max_run, max_pe_len);
            println!("{report}");
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } | Error::LimitExceeded(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
