use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use species_hopf_core::compositions::{coproduct_comp, delta_comp, quasishuffle_comp, SetComposition};
use species_hopf_core::fock::{
    class_of, class_of_partitioned, coaction_rho, fock_coproduct, fock_delta, pi_project, DecoratedGraph,
};
use species_hopf_core::graphs::{DecorationMap, Graph, DEFAULT_CANON_BOUND};
use species_hopf_core::json::{parse_graph, GraphDocument};
use species_hopf_core::monoid::Semigroup;
use species_hopf_core::partitions::{FiniteSet, SetPartition};
use species_hopf_core::quasishuffle::kx::kx_realize;
use species_hopf_core::quasishuffle::{deconcat, delta_t, qsh_words, Word};
use species_hopf_core::twisted::checks::MAX_CHECK_SIZE;
use species_hopf_core::twisted::{
    coproduct_full, coproduct_prime, coproduct_split, delta_full, delta_prime, extraction_contraction, product,
    product_prime, PartitionedGraph, Rules,
};
use species_hopf_core::verify::{all_passed, run_suites, Suite};
use species_hopf_core::{Error, LinComb};

/// Exact computations with graph bialgebras, set compositions and quasishuffles.
#[derive(Parser)]
#[command(name = "species-hopf", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Size bound (default 3 for verify, 8 otherwise; caps 4 and 8).
    #[arg(long = "max-n", env = "SPECIES_HOPF_MAXN", global = true)]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mutation {
    /// Keep every partition in δ, connected or not.
    NoConnectivity,
    /// Let Δ′ cut through vertex blocks.
    NoBlockFilter,
    /// Drop the vanishing rule in the product compatibility.
    NoSplitFilter,
    /// Use ε_δ = 1 on every graph.
    ConstantCounit,
}

#[derive(Args)]
struct GraphArg {
    /// Graph JSON file.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args)]
struct WordArgs {
    /// Semigroup spanning V: qsym, k or free:g.
    #[arg(long = "V", default_value = "qsym")]
    preset: Semigroup,
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: Option<String>,
}

#[derive(Subcommand)]
enum Verb {
    /// δ of a graph, or δ_∼ with --partition.
    Delta {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        partition: Option<String>,
    },
    /// δ′ of a partitioned graph (vertex labels such as "a,b").
    DeltaPrime {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Δ of a graph (Δ′ if it has merged vertices); Δ_{A,B} with --split "A;B".
    Coproduct {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        split: Option<String>,
    },
    /// Disjoint union of two graphs on disjoint vertex sets.
    Product {
        #[command(flatten)]
        graph: GraphArg,
        /// Second graph JSON file.
        #[arg(long)]
        with: PathBuf,
    },
    /// Quasishuffle product of two words.
    Qsh {
        #[command(flatten)]
        words: WordArgs,
    },
    /// δ of a word; with --cut, the deconcatenation Δ instead.
    DeltaT {
        #[command(flatten)]
        words: WordArgs,
        #[arg(long)]
        cut: bool,
    },
    /// δ of a decorated graph class.
    FockDelta {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long = "V")]
        preset: Option<Semigroup>,
    },
    /// Δ of a decorated graph class.
    FockCoproduct {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long = "V")]
        preset: Option<Semigroup>,
    },
    /// π of a decorated partitioned graph (decorations on atoms).
    Pi {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long = "V")]
        preset: Option<Semigroup>,
    },
    /// The V-coaction of a decorated graph class.
    Rho {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long = "V")]
        preset: Option<Semigroup>,
    },
    /// Run the exhaustive axiom suites.
    Verify {
        /// species, comp, words, fock, a comma list, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Break one defining filter (negative control).
        #[arg(long, value_enum)]
        mutate: Option<Mutation>,
    },
    /// Polynomial in K[X] of a word of the k preset (x, x^n).
    RealizeKx {
        #[arg(long)]
        left: String,
    },
    /// Quasishuffle of set compositions such as "({a,b},{c})".
    CompQsh {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// δ of a set composition; with --cut, the deconcatenation Δ instead.
    CompDelta {
        #[arg(long)]
        left: String,
        #[arg(long)]
        cut: bool,
    },
}

/// Failure with its exit status.
struct Failure {
    status: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            status: 2,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        status: 2,
        message: message.into(),
    }
}

struct Output {
    text: String,
    json: Value,
    status: u8,
}

fn lc<B: Ord + Clone + Display + serde::Serialize>(value: &LinComb<B>) -> Output {
    Output {
        text: value.to_string(),
        json: value.to_json(),
        status: 0,
    }
}

fn check_size(size: usize, bound: usize) -> Result<(), Failure> {
    if size > bound {
        return Err(Error::BoundExceeded { size, bound }.into());
    }
    Ok(())
}

fn load_graph(arg: &GraphArg, bound: usize) -> Result<GraphDocument, Failure> {
    let text = std::fs::read_to_string(&arg.graph)
        .map_err(|e| input_error(format!("{}: {e}", arg.graph.display())))?;
    let doc = parse_graph(&text).map_err(|e| input_error(format!("{}: {e}", arg.graph.display())))?;
    check_size(doc.graph.vertices().atoms().len(), bound)?;
    Ok(doc)
}

fn checked_decorations(doc: &GraphDocument, preset: Option<Semigroup>) -> Result<Option<&DecorationMap>, Failure> {
    if let (Some(p), Some(d)) = (preset, &doc.decorations) {
        for m in d.values() {
            p.validate(m)?;
        }
    }
    Ok(doc.decorations.as_ref())
}

fn decorated_class(arg: &GraphArg, preset: Option<Semigroup>, bound: usize) -> Result<DecoratedGraph, Failure> {
    let doc = load_graph(arg, bound)?;
    Ok(class_of(&doc.graph, checked_decorations(&doc, preset)?)?)
}

fn is_plain(g: &Graph) -> bool {
    g.vertices().iter().all(|v| v.is_atomic())
}

fn parse_split(text: &str) -> Result<(FiniteSet, FiniteSet), Failure> {
    let (a, b) = text
        .split_once(';')
        .ok_or_else(|| input_error(format!("split {text:?} must have the form \"A;B\"")))?;
    Ok((FiniteSet::parse(a)?, FiniteSet::parse(b)?))
}

fn words(args: &WordArgs, bound: usize) -> Result<(Word, Option<Word>), Failure> {
    let parse = |t: &str| -> Result<Word, Failure> {
        let w = Word::parse(args.preset, t)?;
        w.validate(args.preset)?;
        check_size(w.len(), bound)?;
        Ok(w)
    };
    Ok((parse(&args.left)?, args.right.as_deref().map(parse).transpose()?))
}

fn composition(text: &str, bound: usize) -> Result<SetComposition, Failure> {
    let c = SetComposition::parse(text)?;
    check_size(c.ground().len(), bound)?;
    Ok(c)
}

fn rules_for(m: Option<Mutation>) -> Rules {
    let mut rules = Rules::STANDARD;
    match m {
        None => {}
        Some(Mutation::NoConnectivity) => rules.connectivity_filter = false,
        Some(Mutation::NoBlockFilter) => rules.block_filter = false,
        Some(Mutation::NoSplitFilter) => rules.split_filter = false,
        Some(Mutation::ConstantCounit) => rules.edgeless_counit = false,
    }
    rules
}

fn verify(suite: &str, mutate: Option<Mutation>, max_n: usize) -> Result<Output, Failure> {
    let suites = Suite::parse_selection(suite)?;
    let rows = run_suites(&suites, max_n, rules_for(mutate))?;
    let passed = all_passed(&rows);
    let mut text: Vec<String> = rows.iter().map(ToString::to_string).collect();
    text.push(format!(
        "{} of {} checks passed",
        rows.iter().filter(|r| r.report.passed()).count(),
        rows.len()
    ));
    let json = json!({
        "passed": passed,
        "max_n": max_n,
        "checks": rows.iter().map(|r| json!({
            "suite": r.suite.name(),
            "axiom": r.report.axiom,
            "x": r.report.x,
            "y": r.report.y,
            "cases": r.report.cases,
            "passed": r.report.passed(),
            "counterexample": r.report.counterexample,
        })).collect::<Vec<_>>(),
    });
    Ok(Output {
        text: text.join("\n"),
        json,
        status: if passed { 0 } else { 1 },
    })
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let is_verify = matches!(cli.verb, Verb::Verify { .. });
    let (default, cap) = if is_verify {
        (3, MAX_CHECK_SIZE)
    } else {
        (DEFAULT_CANON_BOUND, DEFAULT_CANON_BOUND)
    };
    let bound = cli.common.max_n.unwrap_or(default);
    if bound > cap {
        return Err(input_error(format!("--max-n {bound} exceeds the cap of {cap}")));
    }
    match &cli.verb {
        Verb::Delta { graph, partition } => {
            let doc = load_graph(graph, bound)?;
            match partition {
                Some(p) => Ok(lc(&extraction_contraction(&doc.graph, &SetPartition::parse(p)?)?)),
                None => Ok(lc(&delta_full(&doc.graph))),
            }
        }
        Verb::DeltaPrime { graph } => {
            let doc = load_graph(graph, bound)?;
            Ok(lc(&delta_prime(&PartitionedGraph::new(doc.graph)?)))
        }
        Verb::Coproduct { graph, split } => {
            let doc = load_graph(graph, bound)?;
            let plain = is_plain(&doc.graph);
            match (split, plain) {
                (Some(s), true) => {
                    let (a, b) = parse_split(s)?;
                    Ok(lc(&coproduct_split(&doc.graph, &a, &b)?))
                }
                (Some(s), false) => {
                    let (a, b) = parse_split(s)?;
                    Ok(lc(&coproduct_prime(&PartitionedGraph::new(doc.graph)?, &a, &b)?))
                }
                (None, true) => Ok(lc(&coproduct_full(&doc.graph))),
                (None, false) => {
                    let h = PartitionedGraph::new(doc.graph)?;
                    let ground = h.ground();
                    let mut total = LinComb::zero();
                    for a in ground.subsets() {
                        total += coproduct_prime(&h, &a, &ground.difference(&a))?;
                    }
                    Ok(lc(&total))
                }
            }
        }
        Verb::Product { graph, with } => {
            let left = load_graph(graph, bound)?;
            let right = load_graph(&GraphArg { graph: with.clone() }, bound)?;
            check_size(left.graph.vertices().atoms().len() + right.graph.vertices().atoms().len(), bound)?;
            if is_plain(&left.graph) && is_plain(&right.graph) {
                Ok(lc(&LinComb::basis(product(&left.graph, &right.graph)?)))
            } else {
                let p = product_prime(&PartitionedGraph::new(left.graph)?, &PartitionedGraph::new(right.graph)?)?;
                Ok(lc(&LinComb::basis(p)))
            }
        }
        Verb::Qsh { words: args } => {
            let (u, v) = words(args, bound)?;
            let v = v.ok_or_else(|| input_error("qsh needs --right"))?;
            Ok(lc(&qsh_words(&u, &v)))
        }
        Verb::DeltaT { words: args, cut } => {
            let (w, _) = words(args, bound)?;
            Ok(lc(&if *cut { deconcat(&w) } else { delta_t(&w) }))
        }
        Verb::FockDelta { graph, preset } => Ok(lc(&fock_delta(&decorated_class(graph, *preset, bound)?)?)),
        Verb::FockCoproduct { graph, preset } => {
            Ok(lc(&fock_coproduct(&decorated_class(graph, *preset, bound)?)?))
        }
        Verb::Pi { graph, preset } => {
            let doc = load_graph(graph, bound)?;
            let decorations = checked_decorations(&doc, *preset)?;
            let h = PartitionedGraph::new(doc.graph.clone())?;
            let class = class_of_partitioned(&h, decorations)?;
            Ok(lc(&LinComb::basis(pi_project(&class)?)))
        }
        Verb::Rho { graph, preset } => Ok(lc(&coaction_rho(&decorated_class(graph, *preset, bound)?))),
        Verb::Verify { suite, mutate } => verify(suite, *mutate, bound),
        Verb::RealizeKx { left } => {
            let w = Word::parse(Semigroup::K, left)?;
            check_size(w.len(), bound)?;
            let p = kx_realize(&LinComb::basis(w))?;
            Ok(Output {
                text: p.to_string(),
                json: json!({ "coeffs": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>() }),
                status: 0,
            })
        }
        Verb::CompQsh { left, right } => {
            let (a, b) = (composition(left, bound)?, composition(right, bound)?);
            check_size(a.ground().len() + b.ground().len(), bound)?;
            Ok(lc(&quasishuffle_comp(&a, &b)?))
        }
        Verb::CompDelta { left, cut } => {
            let c = composition(left, bound)?;
            Ok(lc(&if *cut { coproduct_comp(&c) } else { delta_comp(&c) }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.common.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
                ),
            }
            ExitCode::from(out.status)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.status)
        }
    }
}
