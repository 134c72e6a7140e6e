//! The `wreath-lab` command-line front end.
//!
//! Every subcommand reads a family configuration (see [`crate::config`]) and
//! writes one report to stdout or `--output`. Exit status: 0 on success
//! (including negative answers), 2 on invalid input, 3 when a search budget
//! ran out. Errors are printed to stderr as one JSON object.

mod cache;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algorithms::{
    frattini_witness_search, induced_order_list, lipschitz_audit, membership, sign_l2, Budget,
    FrattiniOutcome, GeodesicOracle, MembershipTarget,
};
use crate::config::load_family;
use crate::error::{Error, Result};
use crate::groups::{direct_sum_is_trivial, Family};
use crate::orders::{positive_cone_enum, sign_base, sign_directsum, OrderDescriptor};
use crate::word::{free_reduce, Word};
use crate::wreath::{
    embed, embed_global, eval_l1, eval_l2, expand, l2_collect, l2_is_trivial, HWord,
};

pub use cache::FileStore;

/// Environment variable naming the geodesic cache directory.
pub const CACHE_ENV: &str = "WREATH_LAB_CACHE";

#[derive(Parser, Debug)]
#[command(
    name = "wreath-lab",
    version,
    about = "Word problem, membership and orders in the group H̃ = ⟨s, F⟩"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct Common {
    /// Family configuration file (JSON, or TOML by extension).
    #[arg(long)]
    family: PathBuf,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Largest number of elements any search may store.
    #[arg(long, default_value_t = 400_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_states: u64,
}

#[derive(Args, Debug)]
struct HWordArg {
    /// Read `s S f F` letters (s, s⁻¹, F, F⁻¹) instead of tokens.
    #[arg(long)]
    compact: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Word problem in G_l (--word) or in H̃ (--h-word).
    Wp {
        #[command(flatten)]
        common: Common,
        /// Group index; without it words use the global generators of G.
        #[arg(long)]
        group: Option<usize>,
        #[arg(long, required_unless_present = "h_word", conflicts_with = "h_word")]
        word: Option<String>,
        #[arg(long)]
        h_word: Option<String>,
        #[command(flatten)]
        h: HWordArg,
    },
    /// Image under Ψ: collected form and letter expansion.
    Embed {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        group: Option<usize>,
        #[arg(long)]
        word: String,
    },
    /// Value of an H̃ element at s^k (and optionally at t^m inside it).
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        h_word: String,
        #[command(flatten)]
        h: HWordArg,
        #[arg(long, allow_hyphen_values = true)]
        point: i64,
        #[arg(long, allow_hyphen_values = true)]
        t_point: Option<i64>,
    },
    /// Membership of an {s, F}-word in Ψ(G_l), or in Ψ(G) without --group.
    Member {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        group: Option<usize>,
        /// Word over s, F.
        #[arg(long)]
        word: String,
        #[command(flatten)]
        h: HWordArg,
    },
    /// Sign in the left-order of G_l, of G, or of H̃.
    Sign {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        group: Option<usize>,
        #[arg(long, required_unless_present = "h_word", conflicts_with = "h_word")]
        word: Option<String>,
        #[arg(long)]
        h_word: Option<String>,
        #[command(flatten)]
        h: HWordArg,
    },
    /// First positive elements of G_l (or G) in shortlex order.
    Cone {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        group: Option<usize>,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// First elements of H̃ by shortlex-first words.
    Enum {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// The list L_G: enumerated elements of H̃ that lie in the image, with signs.
    OrderList {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        group: Option<usize>,
        #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Distortion table of Ψ on a ball of G_l.
    Distort {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        group: usize,
        #[arg(long, default_value_t = 1)]
        radius: usize,
        /// Largest geodesic length searched for exactly.
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
        geodesic_cap: u32,
        #[arg(long, env = CACHE_ENV)]
        cache_dir: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
    },
    /// Bounded search for conjugators c with c·g1·c⁻¹ = g2 in G_l and in H̃.
    Frattini {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        group: usize,
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        #[arg(long, default_value_t = 2)]
        radius: u32,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Wp { common, .. }
            | Command::Embed { common, .. }
            | Command::Eval { common, .. }
            | Command::Member { common, .. }
            | Command::Sign { common, .. }
            | Command::Cone { common, .. }
            | Command::Enum { common, .. }
            | Command::OrderList { common, .. }
            | Command::Distort { common, .. }
            | Command::Frattini { common, .. } => common,
        }
    }
}

pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let record = json!({"error": "usage", "message": e.to_string().trim_end()});
            eprintln!("{record}");
            return 2;
        }
    };
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", error_json(&e));
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_budget() {
        3
    } else {
        2
    }
}

fn error_json(e: &Error) -> Value {
    let mut v = json!({"error": e.kind(), "message": e.to_string()});
    if let Error::SearchCapped { lower_bound } = e {
        v["lower_bound"] = json!(lower_bound);
    }
    v
}

pub fn run(cli: &Cli) -> Result<()> {
    let common = cli.command.common();
    let fam = load_family(&common.family)?;
    let budget = Budget::with_states(common.max_states as usize);
    let report = execute(&cli.command, &fam, &budget)?;
    match &common.output {
        Some(path) => std::fs::write(path, report)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(report.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn parse_word(s: &str) -> Result<Word> {
    s.parse()
}

fn parse_h(s: &str, h: &HWordArg) -> Result<HWord> {
    if h.compact {
        HWord::parse_compact(s)
    } else {
        s.parse()
    }
}

fn format_of(common: &Common, default: Format) -> Format {
    common.format.unwrap_or(default)
}

fn no_csv(what: &str) -> Error {
    Error::Unsupported(format!("{what} has no CSV form; use json or text"))
}

/// One JSON object, or `key: value` lines for text.
fn record(format: Format, v: Value, what: &str) -> Result<String> {
    match format {
        Format::Json => Ok(format!("{v}\n")),
        Format::Text => {
            let mut out = String::new();
            if let Value::Object(map) = v {
                for (k, x) in map {
                    let shown = match x {
                        Value::String(s) => s,
                        Value::Null => "-".to_string(),
                        other => other.to_string(),
                    };
                    out.push_str(&format!("{k}: {shown}\n"));
                }
            }
            Ok(out)
        }
        Format::Csv => Err(no_csv(what)),
    }
}

fn csv_rows<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)
            .map_err(|e| Error::Unsupported(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Unsupported(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn json_lines<T: Serialize>(rows: &[T]) -> String {
    rows.iter()
        .map(|r| serde_json::to_string(r).expect("record serializes") + "\n")
        .collect()
}

fn target(group: Option<usize>) -> MembershipTarget {
    group.map_or(MembershipTarget::Whole, MembershipTarget::Component)
}

fn global_word(fam: &Family, group: Option<usize>, w: &Word) -> Result<Word> {
    match group {
        Some(l) => fam.globalize(l, w),
        None => {
            fam.project(w)?;
            Ok(w.clone())
        }
    }
}

#[derive(Serialize)]
struct IndexedWord {
    index: usize,
    word: String,
}

#[derive(Serialize)]
struct EnumRecord {
    word: HWord,
    element: crate::wreath::Level2Element,
}

#[derive(Serialize)]
struct OrderListCsv<'a> {
    word: &'a HWord,
    sign: &'static str,
    preimage: &'a Word,
}

fn execute(cmd: &Command, fam: &Family, budget: &Budget) -> Result<String> {
    match cmd {
        Command::Wp {
            common,
            group,
            word,
            h_word,
            h,
        } => {
            let trivial = match (word, h_word) {
                (Some(w), _) => {
                    let w = parse_word(w)?;
                    match group {
                        Some(l) => fam.group(*l)?.is_trivial(&w)?,
                        None => direct_sum_is_trivial(fam, &w)?,
                    }
                }
                (None, Some(hw)) => l2_is_trivial(&l2_collect(&parse_h(hw, h)?), fam)?,
                (None, None) => unreachable!("clap requires one of --word, --h-word"),
            };
            record(
                format_of(common, Format::Json),
                json!({"trivial": trivial}),
                "wp",
            )
        }
        Command::Embed {
            common,
            group,
            word,
        } => {
            let w = parse_word(word)?;
            let e = match group {
                Some(l) => embed(fam, *l, &w)?,
                None => embed_global(fam, &w)?,
            };
            let x = expand(&e);
            let v = json!({
                "element": e,
                "word": x.to_string(),
                "compact": x.to_compact(),
                "length": x.len(),
            });
            record(format_of(common, Format::Json), v, "embed")
        }
        Command::Eval {
            common,
            h_word,
            h,
            point,
            t_point,
        } => {
            let e = l2_collect(&parse_h(h_word, h)?);
            let value = eval_l2(&e, *point, fam)?;
            let v = match t_point {
                None => json!({"point": point, "value": value}),
                Some(m) => {
                    let w = eval_l1(&value, *m);
                    json!({
                        "point": point,
                        "tPoint": m,
                        "value": free_reduce(&w).to_string(),
                        "trivial": direct_sum_is_trivial(fam, &w)?,
                    })
                }
            };
            record(format_of(common, Format::Json), v, "eval")
        }
        Command::Member {
            common,
            group,
            word,
            h,
        } => {
            let e = l2_collect(&parse_h(word, h)?);
            let found = membership(fam, target(*group), &e, budget)?;
            let v = json!({
                "member": found.is_some(),
                "preimage": found.map(|w| w.to_string()),
            });
            record(format_of(common, Format::Json), v, "member")
        }
        Command::Sign {
            common,
            group,
            word,
            h_word,
            h,
        } => {
            let sign = match (word, h_word) {
                (Some(w), _) => {
                    let w = parse_word(w)?;
                    match group {
                        Some(l) => sign_base(&fam.group(*l)?, &w)?,
                        None => sign_directsum(fam, &global_word(fam, None, &w)?)?,
                    }
                }
                (None, Some(hw)) => sign_l2(&l2_collect(&parse_h(hw, h)?), fam)?,
                (None, None) => unreachable!("clap requires one of --word, --h-word"),
            };
            record(
                format_of(common, Format::Json),
                json!({"sign": sign}),
                "sign",
            )
        }
        Command::Cone {
            common,
            group,
            count,
        } => {
            let g;
            let order = match group {
                Some(l) => {
                    g = fam.group(*l)?;
                    OrderDescriptor::Group(&g)
                }
                None => OrderDescriptor::DirectSum(fam),
            };
            let words = positive_cone_enum(&order, *count as usize)?;
            list_output(
                common,
                &words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            )
        }
        Command::Enum { common, count } => {
            let list = crate::algorithms::enumerate_h_with(fam, *count as usize, budget)?;
            match format_of(common, Format::Json) {
                Format::Json => {
                    let recs: Vec<EnumRecord> = list
                        .into_iter()
                        .map(|(word, element)| EnumRecord { word, element })
                        .collect();
                    Ok(json_lines(&recs))
                }
                _ => list_output(
                    common,
                    &list.iter().map(|(w, _)| w.to_string()).collect::<Vec<_>>(),
                ),
            }
        }
        Command::OrderList {
            common,
            group,
            count,
        } => {
            let list = induced_order_list(fam, target(*group), *count as usize, budget)?;
            match format_of(common, Format::Json) {
                Format::Json => Ok(json_lines(&list)),
                Format::Csv => csv_rows(
                    &list
                        .iter()
                        .map(|e| OrderListCsv {
                            word: &e.word,
                            sign: e.sign.as_str(),
                            preimage: &e.preimage,
                        })
                        .collect::<Vec<_>>(),
                ),
                Format::Text => Ok(list
                    .iter()
                    .map(|e| format!("{}\t{}\t{}\n", e.word, e.sign, e.preimage))
                    .collect()),
            }
        }
        Command::Distort {
            common,
            group,
            radius,
            geodesic_cap,
            cache_dir,
            no_cache,
        } => {
            let mut oracle = GeodesicOracle::new(fam, budget.clone())?;
            if let (Some(dir), false) = (cache_dir, no_cache) {
                let fp = fam.fingerprint().unwrap_or_default();
                oracle = oracle.with_store(Box::new(FileStore::new(dir, &fp)));
            }
            let rows = lipschitz_audit(&mut oracle, *group, *radius, *geodesic_cap)?;
            match format_of(common, Format::Csv) {
                Format::Csv => csv_rows(&rows),
                Format::Json => Ok(serde_json::to_string(&rows).expect("rows serialize") + "\n"),
                Format::Text => Ok(rows
                    .iter()
                    .map(|r| {
                        let exact = r.len_h_exact.map_or("-".to_string(), |x| x.to_string());
                        format!(
                            "{}\t|g|={}\t|Ψ(g)|≤{}\texact={}\tC|g|={}\t{}\n",
                            r.word,
                            r.len_g,
                            r.len_h_upper,
                            exact,
                            r.c_bound,
                            if r.ok { "ok" } else { "VIOLATED" }
                        )
                    })
                    .collect()),
            }
        }
        Command::Frattini {
            common,
            group,
            g1,
            g2,
            radius,
        } => {
            let outcome = frattini_witness_search(
                fam,
                *group,
                &parse_word(g1)?,
                &parse_word(g2)?,
                *radius,
                budget,
            )?;
            let witness = match &outcome {
                FrattiniOutcome::ConjugateInG(c) => Some(c.to_string()),
                FrattiniOutcome::ConjugateInHOnly(c) => Some(c.to_string()),
                FrattiniOutcome::NoWitnessFound => None,
            };
            let v = json!({"outcome": outcome.kind(), "witness": witness, "radius": radius});
            record(format_of(common, Format::Json), v, "frattini")
        }
    }
}

/// Line-delimited words: JSON strings, a CSV table with an index, or plain lines.
fn list_output(common: &Common, words: &[String]) -> Result<String> {
    match format_of(common, Format::Json) {
        Format::Json => Ok(json_lines(
            &words.iter().map(|w| json!({"word": w})).collect::<Vec<_>>(),
        )),
        Format::Csv => csv_rows(
            &words
                .iter()
                .enumerate()
                .map(|(index, w)| IndexedWord {
                    index,
                    word: w.clone(),
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => Ok(words.iter().map(|w| format!("{w}\n")).collect()),
    }
}
