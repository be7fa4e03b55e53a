use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use orderword::order::{decompose, Comparator};
use orderword::verify::{check_word, run_campaign, weinbaum_factorizations, CampaignConfig, Dedup};
use orderword::{mu, parse_precedence, parse_word, MagnusOrder, TruncationPolicy, Word};

const EXIT_PRECONDITION: u8 = 2;
const EXIT_ANOMALY: u8 = 3;

#[derive(Parser)]
#[command(name = "orderword", version, about = "Maximal ascents, descents, and the Magnus order on free-group words")]
struct Cli {
    /// Number of generators (a/A = x1, b/B = x2, ...).
    #[arg(long, global = true, default_value_t = 2)]
    rank: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OrderArgs {
    /// Reverse the variable precedence of the Magnus order.
    #[arg(long, conflicts_with = "precedence")]
    swap_order: bool,

    /// Variable precedence as a comma-separated permutation, most significant first.
    #[arg(long)]
    precedence: Option<String>,

    /// Largest degree expanded before a comparison is reported undecided.
    #[arg(long)]
    cap: Option<u32>,
}

impl OrderArgs {
    fn build(&self, rank: u32) -> Result<MagnusOrder, String> {
        let order = match (&self.precedence, self.swap_order) {
            (Some(p), _) => parse_precedence(p, rank).map_err(|e| e.to_string())?,
            (None, true) => MagnusOrder::swapped(rank),
            (None, false) => MagnusOrder::canonical(rank),
        };
        let policy = TruncationPolicy { cap: self.cap, ..TruncationPolicy::default() };
        Ok(order.with_policy(policy))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the truncated Magnus series of a word.
    Series {
        word: String,
        #[arg(long, default_value_t = 2)]
        degree: u32,
    },
    /// Compare two words in the Magnus order.
    Compare {
        v: String,
        w: String,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Split a rotation of the word as maximal ascent times descent.
    Decompose {
        word: String,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Run every per-word check and print the report.
    Verify {
        word: String,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// List factorizations UV with both parts uniquely positioned.
    Weinbaum { word: String },
    /// Check every nonperiodic cyclically reduced word in a length range.
    Campaign {
        #[arg(long)]
        min_len: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value = "orderword-report.json")]
        out: PathBuf,
        /// Check every word rather than one per rotation class.
        #[arg(long)]
        no_dedup: bool,
        #[command(flatten)]
        order: OrderArgs,
    },
}

fn show(w: &Word) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.to_string()
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn parse(text: &str, rank: u32) -> Result<Word, String> {
    parse_word(text, rank).map_err(|e| format!("cannot parse {text:?}: {e}"))
}

fn run(cli: Cli) -> Result<u8, String> {
    let rank = cli.rank;
    match cli.command {
        Command::Series { word, degree } => {
            let w = parse(&word, rank)?;
            println!("{}", mu(&w, degree));
            Ok(0)
        }
        Command::Compare { v, w, order } => {
            let (v, w) = (parse(&v, rank)?, parse(&w, rank)?);
            let symbol = match order.build(rank)?.compare(&v, &w).map_err(|e| e.to_string())? {
                std::cmp::Ordering::Greater => ">",
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
            };
            println!("{} {symbol} {}", show(&v), show(&w));
            Ok(0)
        }
        Command::Decompose { word, order } => {
            let w = parse(&word, rank)?;
            let order = order.build(rank)?;
            let d = decompose(&w, &order).map_err(|e| e.to_string())?;
            let a_unique = w.rotation_set().map_err(|e| e.to_string())?.uniquely_positioned(&d.ascent).map_err(|e| e.to_string())?;
            let d_unique = d.descent_unique.map_or("n/a", yes_no);
            println!(
                "W' = {} ({}), A = {}, D = {}, A unique: {}, D unique: {}",
                show(&d.chosen),
                d.origin,
                show(&d.ascent),
                show(&d.descent),
                yes_no(a_unique),
                d_unique
            );
            Ok(0)
        }
        Command::Verify { word, order } => {
            let w = parse(&word, rank)?;
            let order = order.build(rank)?;
            let report = check_word(&w, &order, order.is_canonical()).map_err(|e| e.to_string())?;
            println!("word: {}", show(&report.word));
            println!("order: {}", order.describe());
            if let Some(d) = &report.decomposition {
                println!("W' = {} ({}), A = {}, D = {}", show(&d.chosen), d.origin, show(&d.ascent), show(&d.descent));
            }
            println!("A uniquely positioned: {}", yes_no(report.a_uniquely_positioned));
            println!("D status: {}", report.d_status.label());
            println!("monotonic: {}", yes_no(report.monotonic));
            println!("weinbaum factorizations: {}", report.weinbaum_count);
            println!("anomalies: {}", report.anomalies.len());
            for a in &report.anomalies {
                println!("  {a}");
            }
            Ok(if report.is_clean() { 0 } else { EXIT_ANOMALY })
        }
        Command::Weinbaum { word } => {
            let w = parse(&word, rank)?;
            let pairs = weinbaum_factorizations(&w).map_err(|e| e.to_string())?;
            for (u, v) in &pairs {
                println!("{u} | {v}");
            }
            println!("count={}", pairs.len());
            Ok(if pairs.is_empty() { EXIT_ANOMALY } else { 0 })
        }
        Command::Campaign { min_len, max_len, workers, out, no_dedup, order } => {
            let built = order.build(rank)?;
            let mut config = CampaignConfig::new(rank, min_len, max_len);
            config.precedence = built.precedence().to_vec();
            config.policy = built.policy();
            if let Some(n) = workers {
                config.workers = n;
            }
            if no_dedup {
                config.dedup = Dedup::None;
            }
            let report = run_campaign(&config, Some(&out)).map_err(|e| e.to_string())?;
            println!(
                "checked={} anomalies={} seconds={:.3}",
                report.words_checked, report.anomaly_count, report.duration_seconds
            );
            Ok(if report.anomaly_count == 0 { 0 } else { EXIT_ANOMALY })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_PRECONDITION)
        }
    }
}
