use std::process::ExitCode;

use adequa::algebra::{eval_free, eval_term, Assignment, Element, Flavor};
use adequa::growth::{
    distinct_partitions, left_sphere_bounded, PartitionTable, two_sided_sphere_bounded, zigzag_census_bounded, Sphere,
    Strategy, CSV_HEADER, DEFAULT_LEFT_GENERIC_BOUND, DEFAULT_TWO_SIDED_BOUND, DEFAULT_ZIGZAG_BOUND,
};
use adequa::identities::{
    check_enriched_flad1, check_enriched_frad1, check_fad1_plain, check_fladx, check_plain,
    falsify_by_substitution, CheckResult, IdentitySpec, PlainSide,
};
use adequa::reproduce::{run_all, Group, Settings};
use adequa::retract::retract;
use adequa::{parse_term, Letter, XTree};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Largest `n` accepted by `partitions`; `P(n)` still fits in 128 bits.
const PARTITION_BOUND: usize = 1000;

#[derive(Parser)]
#[command(name = "adequa", version, about = "Compute in free adequate monoids")]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output format; not every command supports every format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Copy, Clone, ValueEnum)]
enum FlavorArg {
    Flad,
    Frad,
    Fad,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Flad => Flavor::Left,
            FlavorArg::Frad => Flavor::Right,
            FlavorArg::Fad => Flavor::TwoSided,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Variant {
    Left,
    TwoSided,
}

#[derive(Copy, Clone, ValueEnum)]
enum StrategyArg {
    Structural,
    Generic,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Monoid {
    Flad1,
    Frad1,
    #[value(name = "fladX")]
    FladX,
    Fad1,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FalsifyMonoid {
    Flad1,
    Frad1,
}

#[derive(Copy, Clone, ValueEnum)]
enum GroupArg {
    Growth,
    Identities,
    Algebra,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a term; letters default to their own generators.
    Eval {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        /// Value of a letter, as `x=TERM` over any letters.
        #[arg(long = "assign", value_name = "x=TERM")]
        assign: Vec<String>,
        term: String,
    },
    /// Decide whether two terms name the same element.
    Equal {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        lhs: String,
        rhs: String,
    },
    /// Compute the retract-free retract of a tree given as JSON.
    Retract {
        /// Tree JSON, or `@path` to read it from a file.
        #[arg(long = "json", value_name = "TREEJSON")]
        json: String,
    },
    /// Elements with a given number of edges.
    Sphere {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        by_trunk: bool,
        #[arg(long)]
        idempotents_only: bool,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = StrategyArg::Structural)]
        strategy: StrategyArg,
        /// Largest size enumerated exhaustively.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Sphere counts for every size up to a maximum.
    Census {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long)]
        max: usize,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Partition counts P(n), P(n, k), or their distinct-part versions.
    Partitions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        distinct: bool,
    },
    /// Zig-zag counts by height.
    Zigzag {
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        height: Option<usize>,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Decide an identity.
    Identity {
        #[arg(long, value_enum)]
        monoid: Monoid,
        #[arg(long, conflicts_with = "plain")]
        enriched: bool,
        #[arg(long)]
        plain: bool,
        lhs: String,
        rhs: String,
    },
    /// Search for an assignment separating the two sides.
    Falsify {
        #[arg(long, value_enum)]
        monoid: FalsifyMonoid,
        #[arg(long)]
        budget: usize,
        lhs: String,
        rhs: String,
    },
    /// Run every reproducible target and print a pass/fail table.
    ReproducePaper {
        #[arg(long, value_enum)]
        only: Option<GroupArg>,
    },
}

/// A failure that is the caller's fault: exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

struct Output {
    body: String,
    verdict: bool,
}

impl Output {
    fn json(v: Value) -> Self {
        Output { body: v.to_string(), verdict: true }
    }

    fn text(body: String) -> Self {
        Output { body, verdict: true }
    }

    fn verdict(mut self, ok: bool) -> Self {
        self.verdict = ok;
        self
    }
}

fn require(format: Format, allowed: &[Format]) -> Result<(), Usage> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Usage("this command does not support the requested --format".into()))
    }
}

fn tree_value(t: &XTree) -> Value {
    serde_json::to_value(t).expect("trees serialize")
}

fn element_output(e: &Element, format: Format) -> Result<Output, Usage> {
    require(format, &[Format::Json, Format::Dot, Format::Text])?;
    Ok(match format {
        Format::Dot => Output::text(e.tree().to_dot()),
        Format::Text => Output::text(String::from_utf8_lossy(e.code().as_bytes()).into_owned()),
        _ => Output::json(json!({
            "tree": tree_value(e.tree()),
            "edges": e.edge_count(),
            "trunk": e.trunk_len(),
            "idempotent": e.is_idempotent(),
            "code": String::from_utf8_lossy(e.code().as_bytes()),
        })),
    })
}

fn parse_assignment(items: &[String], flavor: Flavor) -> Result<Assignment, Usage> {
    let mut out = Assignment::new();
    for item in items {
        let (x, t) = item
            .split_once('=')
            .ok_or_else(|| Usage(format!("--assign expects x=TERM, got '{item}'")))?;
        let mut chars = x.trim().chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return Err(Usage(format!("'{x}' is not a single letter")));
        };
        out.insert(Letter(c), eval_free(&parse_term(t)?, flavor)?);
    }
    Ok(out)
}

fn eval(flavor: Flavor, assign: &[String], term: &str) -> Result<Element, Usage> {
    let t = parse_term(term)?;
    let mut a = Assignment::identity(t.letters(), flavor);
    a.0.extend(parse_assignment(assign, flavor)?.0);
    Ok(eval_term(&t, &a, flavor)?)
}

fn sphere(variant: Variant, n: usize, strategy: StrategyArg, bound: Option<usize>) -> Result<Sphere, Usage> {
    Ok(match variant {
        Variant::Left => {
            let s = match strategy {
                StrategyArg::Structural => Strategy::Structural,
                StrategyArg::Generic => Strategy::Generic,
            };
            left_sphere_bounded(n, s, bound.unwrap_or(DEFAULT_LEFT_GENERIC_BOUND))?
        }
        Variant::TwoSided => two_sided_sphere_bounded(n, bound.unwrap_or(DEFAULT_TWO_SIDED_BOUND))?,
    })
}

fn result_output(r: &CheckResult) -> Output {
    Output::json(serde_json::to_value(r).expect("results serialize")).verdict(r.satisfied)
}

fn run(cli: Cli) -> Result<Output, Usage> {
    let format = cli.format;
    match cli.command {
        Command::Eval { flavor, assign, term } => element_output(&eval(flavor.into(), &assign, &term)?, format),
        Command::Equal { flavor, lhs, rhs } => {
            require(format, &[Format::Json])?;
            let l = eval(flavor.into(), &[], &lhs)?;
            let r = eval(flavor.into(), &[], &rhs)?;
            let equal = l == r;
            Ok(Output::json(json!({
                "equal": equal,
                "lhs": tree_value(l.tree()),
                "rhs": tree_value(r.tree()),
            }))
            .verdict(equal))
        }
        Command::Retract { json } => {
            let text = match json.strip_prefix('@') {
                Some(path) => std::fs::read_to_string(path)?,
                None => json,
            };
            let t = XTree::from_json(&text)?;
            let r = retract(&t);
            require(format, &[Format::Json, Format::Dot])?;
            Ok(match format {
                Format::Dot => Output::text(r.to_dot()),
                _ => Output::json(json!({
                    "tree": tree_value(&r),
                    "removed_edges": t.edge_count() - r.edge_count(),
                })),
            })
        }
        Command::Sphere { variant, edges, by_trunk, idempotents_only, count_only, strategy, bound } => {
            require(format, &[Format::Json])?;
            let s = sphere(variant, edges, strategy, bound)?;
            let elements: Vec<&Element> = s
                .elements
                .iter()
                .filter(|e| !idempotents_only || e.is_idempotent())
                .collect();
            let mut out = serde_json::Map::new();
            out.insert("total".into(), json!(elements.len()));
            if by_trunk {
                let mut counts = std::collections::BTreeMap::<String, u64>::new();
                for e in &elements {
                    *counts.entry(e.trunk_len().to_string()).or_default() += 1;
                }
                out.insert("by_trunk".into(), json!(counts));
            }
            if !count_only {
                let trees: Vec<Value> = elements.iter().map(|e| tree_value(e.tree())).collect();
                out.insert("elements".into(), Value::Array(trees));
            }
            Ok(Output::json(Value::Object(out)))
        }
        Command::Census { variant, max, bound } => {
            require(format, &[Format::Json, Format::Csv])?;
            let rows = (0..=max)
                .map(|n| sphere(variant, n, StrategyArg::Structural, bound).map(|s| s.census))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(match format {
                Format::Csv => {
                    let mut lines = vec![CSV_HEADER.to_string()];
                    lines.extend(rows.iter().flat_map(|r| r.csv_rows()));
                    Output::text(lines.join("\n"))
                }
                _ => Output::json(serde_json::to_value(&rows).expect("rows serialize")),
            })
        }
        Command::Partitions { n, k, distinct } => {
            require(format, &[Format::Json])?;
            if n > PARTITION_BOUND {
                return Err(Usage(format!("n = {n} exceeds the bound {PARTITION_BOUND}")));
            }
            let table = PartitionTable::<u128>::new(n);
            let count = match (k, distinct) {
                (Some(k), false) => table.p(n as i64, k as i64),
                (Some(k), true) => table.q(n as i64, k as i64),
                (None, false) => table.p_total(n),
                (None, true) => table.q_total(n),
            };
            let mut out = json!({ "n": n, "k": k, "distinct": distinct, "count": count });
            if let (Some(k), true) = (k, distinct) {
                if n <= 60 {
                    out["partitions"] = json!(distinct_partitions(n, k));
                }
            }
            Ok(Output::json(out))
        }
        Command::Zigzag { edges, height, bound } => {
            require(format, &[Format::Json])?;
            let rows = zigzag_census_bounded(edges, bound.unwrap_or(DEFAULT_ZIGZAG_BOUND))?;
            let shown: Vec<Value> = rows
                .iter()
                .filter(|r| height.is_none_or(|h| h == r.i))
                .map(|r| {
                    let mut v = json!({ "i": r.i, "all_count": r.all_count, "z_count": r.z_count });
                    if height.is_some() {
                        v["members"] = json!(r.members.iter().map(|z| z.to_string()).collect::<Vec<_>>());
                    }
                    v
                })
                .collect();
            if height.is_some_and(|h| h > edges) {
                return Err(Usage(format!("height exceeds {edges}")));
            }
            Ok(Output::json(json!({ "edges": edges, "rows": shown })))
        }
        Command::Identity { monoid, enriched: _, plain, lhs, rhs } => {
            require(format, &[Format::Json])?;
            let id = IdentitySpec::from_sides(&lhs, &rhs)?;
            let r = match (monoid, plain) {
                (Monoid::Flad1, false) => check_enriched_flad1(&id)?,
                (Monoid::Flad1, true) => check_plain(&id, PlainSide::Left)?,
                (Monoid::Frad1, false) => check_enriched_frad1(&id)?,
                (Monoid::Frad1, true) => check_plain(&id, PlainSide::Right)?,
                (Monoid::FladX, _) => check_fladx(&id)?,
                (Monoid::Fad1, _) => check_fad1_plain(&id)?,
            };
            Ok(result_output(&r))
        }
        Command::Falsify { monoid, budget, lhs, rhs } => {
            require(format, &[Format::Json])?;
            let id = IdentitySpec::from_sides(&lhs, &rhs)?;
            let flavor = match monoid {
                FalsifyMonoid::Flad1 => Flavor::Left,
                FalsifyMonoid::Frad1 => Flavor::Right,
            };
            let w = falsify_by_substitution(&id, flavor, budget)?;
            let out = match &w {
                None => json!({ "found": false, "witness": null }),
                Some(w) => json!({
                    "found": true,
                    "witness": w.assignment.0.iter().map(|(x, e)| (x.to_string(), tree_value(e.tree()))).collect::<serde_json::Map<_, _>>(),
                    "lhs": tree_value(w.lhs.tree()),
                    "rhs": tree_value(w.rhs.tree()),
                }),
            };
            Ok(Output::json(out).verdict(w.is_none()))
        }
        Command::ReproducePaper { only } => {
            require(format, &[Format::Json, Format::Text])?;
            let group = only.map(|g| match g {
                GroupArg::Growth => Group::Growth,
                GroupArg::Identities => Group::Identities,
                GroupArg::Algebra => Group::Algebra,
            });
            let outcomes = run_all(&Settings::default(), group);
            let ok = outcomes.iter().all(|o| o.passed);
            Ok(match format {
                Format::Json => Output::json(serde_json::to_value(&outcomes).expect("outcomes serialize")),
                _ => {
                    let mut lines = Vec::new();
                    for o in &outcomes {
                        let mark = if o.passed { "PASS" } else { "FAIL" };
                        lines.push(format!("{mark}  {:<10} {:<28} {}  [{}]", o.group, o.id, o.claim, o.detail));
                    }
                    Output::text(lines.join("\n"))
                }
            }
            .verdict(ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(cli) {
        Ok(out) => {
            println!("{}", out.body);
            if out.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
