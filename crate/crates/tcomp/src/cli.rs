//! The `tcomp` command line.
//!
//! Exit codes: 0 when the property holds or the command succeeded, 1 when
//! the property fails (not totally compatible, unreachable pair, oracle
//! disagreement), 2 for usage, input and resource-cap errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tcomp_core::letters::{classify_word, LetterClass};
use tcomp_core::pairgraph::{decide_on, PairGraph};
use tcomp_core::synth::{self, length_bound, synthesize_with};
use tcomp_core::{families, oracle, Automaton, Error, Partition, StatePair, Word};

use crate::bench::{self, BenchConfig, BenchFamily};
use crate::dot::pair_graph_dot;
use crate::format::{
    display_word, format_word, parse_automaton, parse_partition, write_automaton,
    write_automaton_json,
};

/// Decide total compatibility of automata and build compatible words.
#[derive(Debug, Parser)]
#[command(name = "tcomp", version)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every letter as permutation, 1-defect or lower rank.
    Classify { file: PathBuf },
    /// Decide total compatibility with the pair-graph search.
    Decide {
        file: PathBuf,
        /// Write the pair graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// List every pair that is not the root of a 1-defect word.
        #[arg(long)]
        witness_pairs: bool,
        /// Include timings in milliseconds.
        #[arg(long)]
        timings: bool,
    },
    /// A shortest permutation-prefixed 1-defect word merging states P and Q.
    DefectWord { file: PathBuf, p: usize, q: usize },
    /// A word whose kernel is the given partition, e.g. "1,3|2".
    Synthesize { file: PathBuf, partition: String },
    /// A compatible word for every partition of the states.
    Witness {
        file: PathBuf,
        /// Refuse to enumerate more partitions than this.
        #[arg(long, default_value_t = synth::DEFAULT_PARTITION_CAP)]
        cap: u128,
    },
    /// Brute-force checks on the generated transformation monoid.
    Oracle {
        file: PathBuf,
        check: OracleCheck,
        /// Refuse to enumerate more transformations than this.
        #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
        cap: u128,
    },
    /// Print a generated automaton in the line format (JSON with --json).
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Time the decision procedure on a grid of sizes.
    Bench {
        /// Comma-separated state counts.
        #[arg(long, value_delimiter = ',', default_values_t = vec![125usize, 250, 500, 1000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        letters: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, value_enum, default_value_t = BenchKind::Random)]
        family: BenchKind,
        /// Fail unless the log-log slope is at most this.
        #[arg(long)]
        max_slope: Option<f64>,
        /// Fail unless the largest size finishes within this many seconds.
        #[arg(long)]
        max_seconds: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OracleCheck {
    /// Total compatibility, cross-checked against the decision procedure.
    Tc,
    /// Complete reachability.
    Reach,
    /// Synchronization, with a shortest reset word.
    Sync,
    /// Minimal total compatibility.
    Minimal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BenchKind {
    Random,
    Mixed,
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    /// The three-state automaton with a cycle c and a merge t.
    T,
    /// Černý automaton on N states.
    Cerny { n: usize },
    /// One merging letter per pair of states.
    PairMerge { n: usize },
    /// Generators of the full transformation monoid.
    Full { n: usize },
    /// K letters with uniformly random rows.
    Random { n: usize, k: usize, seed: u64 },
    /// PERMS random permutations and one random 1-defect letter.
    Mixed { n: usize, perms: usize, seed: u64 },
}

/// Anything that stops a command from producing its answer: bad arguments,
/// unreadable input, exceeded caps, failed self-checks. Exit code 2.
#[derive(Debug)]
enum Failure {
    Usage(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn load(path: &Path) -> Result<Automaton, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    parse_automaton(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, value: &Value) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value).unwrap())
}

fn pair_json(p: StatePair) -> Value {
    json!([p.lo() + 1, p.hi() + 1])
}

fn class_json(a: &Automaton, letter: usize) -> Value {
    let n = a.num_states();
    let class = a.letter_class(letter);
    let mut v = json!({
        "letter": a.letter_name(letter),
        "rank": class.rank(n),
    });
    let obj = v.as_object_mut().unwrap();
    match class {
        LetterClass::Permutation => {
            obj.insert("class".into(), json!("permutation"));
        }
        LetterClass::OneDefect(d) => {
            obj.insert("class".into(), json!("one-defect"));
            obj.insert("excluded".into(), json!(d.excluded + 1));
            obj.insert("duplicated".into(), json!(d.duplicated + 1));
            obj.insert("root".into(), pair_json(d.root));
        }
        LetterClass::LowRank { .. } => {
            obj.insert("class".into(), json!("low-rank"));
        }
    }
    v
}

fn class_text(a: &Automaton, letter: usize) -> String {
    match a.letter_class(letter) {
        LetterClass::Permutation => "permutation".to_string(),
        LetterClass::OneDefect(d) => format!(
            "1-defect, excluded {}, duplicated {}, root {}",
            d.excluded + 1,
            d.duplicated + 1,
            d.root
        ),
        LetterClass::LowRank { rank } => format!("rank {rank} (ignored by the decision)"),
    }
}

fn names(a: &Automaton, letters: impl IntoIterator<Item = usize>) -> Vec<&str> {
    letters.into_iter().map(|l| a.letter_name(l)).collect()
}

fn join_or_none(items: &[&str]) -> String {
    if items.is_empty() {
        "none".to_string()
    } else {
        items.join(" ")
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Classify { file } => classify(&load(file)?, cli.json, out),
        Command::Decide {
            file,
            dot,
            witness_pairs,
            timings,
        } => decide(
            &load(file)?,
            cli.json,
            dot.as_deref(),
            *witness_pairs,
            *timings,
            out,
        ),
        Command::DefectWord { file, p, q } => defect_word(&load(file)?, *p, *q, cli.json, out),
        Command::Synthesize { file, partition } => {
            let a = load(file)?;
            let rho = parse_partition(partition, a.num_states())
                .map_err(|e| Failure::Usage(e.to_string()))?;
            synthesize(&a, &rho, cli.json, out)
        }
        Command::Witness { file, cap } => witness(&load(file)?, *cap, cli.json, out),
        Command::Oracle { file, check, cap } => {
            run_oracle(&load(file)?, *check, *cap, cli.json, out)
        }
        Command::Gen { family } => {
            let a = match *family {
                GenFamily::T => families::automaton_t(),
                GenFamily::Cerny { n } => families::cerny(n)?,
                GenFamily::PairMerge { n } => families::pair_merge(n)?,
                GenFamily::Full { n } => families::full_monoid(n)?,
                GenFamily::Random { n, k, seed } => families::random_automaton(n, k, seed)?,
                GenFamily::Mixed { n, perms, seed } => families::random_mixed(n, perms, seed)?,
            };
            if cli.json {
                write!(out, "{}", write_automaton_json(&a))?;
            } else {
                write!(out, "{}", write_automaton(&a))?;
            }
            Ok(0)
        }
        Command::Bench {
            sizes,
            letters,
            seed,
            reps,
            family,
            max_slope,
            max_seconds,
        } => {
            let config = BenchConfig {
                sizes: sizes.clone(),
                letters: *letters,
                seed: *seed,
                reps: *reps,
                family: match family {
                    BenchKind::Random => BenchFamily::Random,
                    BenchKind::Mixed => BenchFamily::Mixed,
                },
            };
            run_bench(&config, *max_slope, *max_seconds, cli.json, out)
        }
    }
}

fn classify(a: &Automaton, as_json: bool, out: &mut dyn Write) -> Outcome {
    if as_json {
        let letters: Vec<Value> = (0..a.num_letters()).map(|l| class_json(a, l)).collect();
        emit(
            out,
            &json!({
                "states": a.num_states(),
                "letters": letters,
                "sigma0": names(a, a.permutation_letters()),
                "sigma1": names(a, a.defect_letters().into_iter().map(|(l, _)| l)),
            }),
        )?;
    } else {
        writeln!(out, "states: {}", a.num_states())?;
        for l in 0..a.num_letters() {
            writeln!(out, "{}: {}", a.letter_name(l), class_text(a, l))?;
        }
    }
    Ok(0)
}

const WITNESS_SAMPLE: usize = 10;

fn decide(
    a: &Automaton,
    as_json: bool,
    dot: Option<&Path>,
    all_pairs: bool,
    timings: bool,
    out: &mut dyn Write,
) -> Outcome {
    let start = Instant::now();
    let graph = PairGraph::build(a);
    let built = Instant::now();
    let decision = decide_on(&graph);
    let done = Instant::now();

    if let Some(path) = dot {
        fs::write(path, pair_graph_dot(a, &graph))
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }

    let tc = decision.is_totally_compatible();
    let verdict = if tc {
        "totally compatible"
    } else {
        "not totally compatible"
    };
    let witnesses = decision.witness_pairs();
    let shown = if all_pairs {
        witnesses.len()
    } else {
        witnesses.len().min(WITNESS_SAMPLE)
    };
    let low_rank: Vec<usize> = (0..a.num_letters())
        .filter(|&l| matches!(a.letter_class(l), LetterClass::LowRank { .. }))
        .collect();

    if as_json {
        let mut report = json!({
            "verdict": verdict,
            "totally_compatible": tc,
            "states": a.num_states(),
            "pairs": graph.vertex_count(),
            "roots": graph.roots().map(|v| pair_json(graph.pair_at(v))).collect::<Vec<_>>(),
            "sigma0": names(a, a.permutation_letters()),
            "sigma1": a.defect_letters().iter().map(|&(l, _)| class_json(a, l)).collect::<Vec<_>>(),
            "low_rank": low_rank.iter().map(|&l| class_json(a, l)).collect::<Vec<_>>(),
            "unreachable_count": witnesses.len(),
            "witness_pairs": witnesses[..shown].iter().map(|&p| pair_json(p)).collect::<Vec<_>>(),
            "witness_pairs_truncated": shown < witnesses.len(),
        });
        if timings {
            report["timings_ms"] = json!({
                "build": (built - start).as_secs_f64() * 1e3,
                "search": (done - built).as_secs_f64() * 1e3,
                "total": (done - start).as_secs_f64() * 1e3,
            });
        }
        emit(out, &report)?;
    } else {
        writeln!(out, "{verdict}")?;
        writeln!(
            out,
            "permutation letters: {}",
            join_or_none(&names(a, a.permutation_letters()))
        )?;
        let defects: Vec<String> = a
            .defect_letters()
            .iter()
            .map(|(l, d)| format!("{} (root {})", a.letter_name(*l), d.root))
            .collect();
        let defects: Vec<&str> = defects.iter().map(String::as_str).collect();
        writeln!(out, "1-defect letters: {}", join_or_none(&defects))?;
        if !low_rank.is_empty() {
            writeln!(
                out,
                "lower-rank letters (ignored): {}",
                names(a, low_rank).join(" ")
            )?;
        }
        writeln!(
            out,
            "pairs: {}, roots: {}, without a 1-defect word: {}",
            graph.vertex_count(),
            graph.roots().count(),
            witnesses.len()
        )?;
        if !witnesses.is_empty() {
            let listed: Vec<String> = witnesses[..shown].iter().map(|p| p.to_string()).collect();
            let more = witnesses.len() - shown;
            let suffix = if more > 0 {
                format!(" … and {more} more (use --witness-pairs)")
            } else {
                String::new()
            };
            writeln!(out, "witness pairs: {}{suffix}", listed.join(" "))?;
        }
        if timings {
            writeln!(
                out,
                "time: build {:.3} ms, search {:.3} ms",
                (built - start).as_secs_f64() * 1e3,
                (done - built).as_secs_f64() * 1e3
            )?;
        }
    }
    Ok(if tc { 0 } else { 1 })
}

fn one_based_pair(a: &Automaton, p: usize, q: usize) -> Result<StatePair, Failure> {
    let n = a.num_states();
    for s in [p, q] {
        if !(1..=n).contains(&s) {
            return Err(Failure::Usage(format!("state {s} is not in 1..={n}")));
        }
    }
    StatePair::new(p - 1, q - 1)
        .map_err(|_| Failure::Usage(format!("states must differ, got {p} twice")))
}

/// Refuses to print a word that does not do what it claims.
fn self_check(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Usage(format!("self-check failed: {what}")))
    }
}

fn defect_word(a: &Automaton, p: usize, q: usize, as_json: bool, out: &mut dyn Write) -> Outcome {
    let pair = one_based_pair(a, p, q)?;
    let decision = decide_on(&PairGraph::build(a));
    match decision.defect_word(pair) {
        Ok(w) => {
            let info = match classify_word(a, &w) {
                LetterClass::OneDefect(info) if info.root == pair => info,
                _ => {
                    return Err(Failure::Usage(
                        "self-check failed: extracted word is not 1-defect on the pair".into(),
                    ))
                }
            };
            if as_json {
                emit(
                    out,
                    &json!({
                        "pair": pair_json(pair),
                        "word": format_word(a, &w),
                        "length": w.len(),
                        "excluded": info.excluded + 1,
                        "duplicated": info.duplicated + 1,
                    }),
                )?;
            } else {
                writeln!(out, "{}", display_word(a, &w))?;
                writeln!(
                    out,
                    "root {}, excluded {}, duplicated {}",
                    info.root,
                    info.excluded + 1,
                    info.duplicated + 1
                )?;
            }
            Ok(0)
        }
        Err(Error::PairUnreachable(_)) => {
            if as_json {
                emit(
                    out,
                    &json!({ "pair": pair_json(pair), "word": Value::Null }),
                )?;
            } else {
                writeln!(
                    out,
                    "no 1-defect word has root {pair}: the automaton is not totally compatible"
                )?;
            }
            Ok(1)
        }
        Err(e) => Err(e.into()),
    }
}

fn verified(a: &Automaton, w: &Word, rho: &Partition) -> Result<(), Failure> {
    self_check(
        a.is_compatible(w, rho) && a.compatibility_conditions(w, rho).holds(),
        "synthesized word is not compatible with its partition",
    )
}

fn synthesize(a: &Automaton, rho: &Partition, as_json: bool, out: &mut dyn Write) -> Outcome {
    let decision = decide_on(&PairGraph::build(a));
    match synthesize_with(a, &decision, rho) {
        Ok(w) => {
            verified(a, &w, rho)?;
            self_check(
                w.len() <= length_bound(a.num_states()),
                "word exceeds the length bound",
            )?;
            if as_json {
                emit(
                    out,
                    &json!({
                        "partition": rho.to_string(),
                        "word": format_word(a, &w),
                        "length": w.len(),
                    }),
                )?;
            } else {
                writeln!(out, "{}", display_word(a, &w))?;
            }
            Ok(0)
        }
        Err(Error::PairUnreachable(pair)) => {
            if as_json {
                emit(
                    out,
                    &json!({
                        "partition": rho.to_string(),
                        "word": Value::Null,
                        "unreachable_pair": pair_json(pair),
                    }),
                )?;
            } else {
                writeln!(
                    out,
                    "no word found: no 1-defect word has root {pair}. The automaton is not \
                     totally compatible, and for such automata this construction may miss \
                     existing words; `oracle tc` searches exhaustively."
                )?;
            }
            Ok(1)
        }
        Err(e) => Err(e.into()),
    }
}

fn witness(a: &Automaton, cap: u128, as_json: bool, out: &mut dyn Write) -> Outcome {
    let rows = synth::witness_table(a, cap)?;
    let mut failures = 0;
    let mut json_rows = Vec::with_capacity(rows.len());
    for row in &rows {
        match &row.word {
            Ok(w) => {
                verified(a, w, &row.partition)?;
                if as_json {
                    json_rows.push(json!({
                        "partition": row.partition.to_string(),
                        "word": format_word(a, w),
                    }));
                } else {
                    writeln!(out, "{}\t{}", row.partition, display_word(a, w))?;
                }
            }
            Err(e) => {
                failures += 1;
                let reason = match e {
                    Error::PairUnreachable(p) => format!("no 1-defect word with root {p}"),
                    other => other.to_string(),
                };
                if as_json {
                    json_rows.push(json!({
                        "partition": row.partition.to_string(),
                        "word": Value::Null,
                        "error": reason,
                    }));
                } else {
                    writeln!(out, "{}\t- ({reason})", row.partition)?;
                }
            }
        }
    }
    if as_json {
        emit(out, &json!({ "rows": json_rows, "failures": failures }))?;
    } else {
        writeln!(out, "{} partitions, {failures} without a word", rows.len())?;
    }
    Ok(if failures == 0 { 0 } else { 1 })
}

fn run_oracle(
    a: &Automaton,
    check: OracleCheck,
    cap: u128,
    as_json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let n = a.num_states();
    match check {
        OracleCheck::Tc => {
            let verdict = oracle::oracle_totally_compatible(a, cap)?;
            let decided = decide_on(&PairGraph::build(a)).is_totally_compatible();
            let agree = decided == verdict.totally_compatible;
            let missing: Vec<String> = verdict.missing.iter().map(|p| p.to_string()).collect();
            if as_json {
                emit(
                    out,
                    &json!({
                        "totally_compatible": verdict.totally_compatible,
                        "decision": decided,
                        "agree": agree,
                        "missing": missing,
                    }),
                )?;
            } else {
                writeln!(
                    out,
                    "{}",
                    if verdict.totally_compatible {
                        "totally compatible"
                    } else {
                        "not totally compatible"
                    }
                )?;
                if !missing.is_empty() {
                    writeln!(
                        out,
                        "partitions without a compatible word: {}",
                        missing.join("  ")
                    )?;
                }
                if !agree {
                    writeln!(out, "MISMATCH: the pair-graph decision says {decided}")?;
                }
            }
            Ok(if agree && verdict.totally_compatible {
                0
            } else {
                1
            })
        }
        OracleCheck::Reach => {
            let census = oracle::enumerate_monoid(a, cap)?;
            let reachable = oracle::completely_reachable_in(&census, n);
            if as_json {
                emit(
                    out,
                    &json!({
                        "completely_reachable": reachable,
                        "reachable_subsets": census.images().len(),
                        "monoid_size": census.len(),
                    }),
                )?;
            } else {
                writeln!(
                    out,
                    "{}completely reachable ({} nonempty subsets are images)",
                    if reachable { "" } else { "not " },
                    census.images().len()
                )?;
            }
            Ok(if reachable { 0 } else { 1 })
        }
        OracleCheck::Sync => {
            let reset = oracle::oracle_synchronizing(a, cap)?;
            if let Some(w) = &reset {
                self_check(a.rank(w) == 1, "reset word does not synchronize")?;
            }
            if as_json {
                emit(
                    out,
                    &json!({
                        "synchronizing": reset.is_some(),
                        "reset_word": reset.as_ref().map(|w| format_word(a, w)),
                    }),
                )?;
            } else {
                match &reset {
                    Some(w) => writeln!(
                        out,
                        "synchronizing, shortest reset word: {}",
                        display_word(a, w)
                    )?,
                    None => writeln!(out, "not synchronizing")?,
                }
            }
            Ok(if reset.is_some() { 0 } else { 1 })
        }
        OracleCheck::Minimal => {
            let r = oracle::minimality_report(a, cap)?;
            if as_json {
                emit(
                    out,
                    &json!({
                        "totally_compatible": r.totally_compatible,
                        "bell": r.bell.to_string(),
                        "monoid_size": r.monoid_size,
                        "semigroup_size": r.semigroup_size,
                        "minimal_as_monoid": r.minimal_as_monoid(),
                        "minimal_as_semigroup": r.minimal_as_semigroup(),
                    }),
                )?;
            } else {
                writeln!(
                    out,
                    "{}minimal totally compatible",
                    if r.minimal_as_monoid() { "" } else { "not " }
                )?;
                writeln!(
                    out,
                    "B_{n} = {}, monoid size (with ε) = {}, semigroup size = {}, totally compatible: {}",
                    r.bell, r.monoid_size, r.semigroup_size, r.totally_compatible
                )?;
                writeln!(
                    out,
                    "minimal counting ε: {}, counting nonempty words only: {}",
                    r.minimal_as_monoid(),
                    r.minimal_as_semigroup()
                )?;
            }
            Ok(if r.minimal_as_monoid() { 0 } else { 1 })
        }
    }
}

fn run_bench(
    config: &BenchConfig,
    max_slope: Option<f64>,
    max_seconds: Option<f64>,
    as_json: bool,
    out: &mut dyn Write,
) -> Outcome {
    if config.sizes.is_empty() {
        return Err(Failure::Usage("no sizes given".into()));
    }
    let report = bench::run(config)?;
    let largest = report.largest().unwrap();
    let slope_ok = match (max_slope, report.slope) {
        (Some(limit), Some(s)) => s <= limit,
        (Some(_), None) => false,
        (None, _) => true,
    };
    let time_ok = max_seconds.is_none_or(|limit| largest.total.as_secs_f64() <= limit);
    if as_json {
        let rows: Vec<Value> = report
            .rows
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "pairs": r.vertices,
                    "permutation_letters": r.permutation_letters,
                    "roots": r.roots,
                    "totally_compatible": r.totally_compatible,
                    "build_ms": r.build.as_secs_f64() * 1e3,
                    "search_ms": r.search.as_secs_f64() * 1e3,
                    "total_ms": r.total.as_secs_f64() * 1e3,
                })
            })
            .collect();
        emit(
            out,
            &json!({ "rows": rows, "loglog_slope": report.slope, "pass": slope_ok && time_ok }),
        )?;
    } else {
        writeln!(
            out,
            "{:>8} {:>10} {:>6} {:>6} {:>12} {:>12} {:>12}",
            "n", "pairs", "perms", "roots", "build ms", "search ms", "total ms"
        )?;
        for r in &report.rows {
            writeln!(
                out,
                "{:>8} {:>10} {:>6} {:>6} {:>12.3} {:>12.3} {:>12.3}",
                r.n,
                r.vertices,
                r.permutation_letters,
                r.roots,
                r.build.as_secs_f64() * 1e3,
                r.search.as_secs_f64() * 1e3,
                r.total.as_secs_f64() * 1e3
            )?;
        }
        match report.slope {
            Some(s) => writeln!(out, "log-log slope: {s:.3}")?,
            None => writeln!(out, "log-log slope: undefined")?,
        }
    }
    Ok(if slope_ok && time_ok { 0 } else { 1 })
}
