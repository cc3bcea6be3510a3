//! `permlab` — inspect colored permutation statistics, run the bijections,
//! print polynomial families, and execute the named identity checks.
//!
//! Exit codes: 0 on success (all checks passed), 1 when a verification
//! check fails, 2 on usage or parameter errors.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use permlab::biject;
use permlab::eulerian::{conger_poly, stat_polynomial_capped, typeb_des_poly_rec};
use permlab::gamma::gamma_vector;
use permlab::harness::{self, Bounds, CheckSpec, OutputFormat, TableFamily};
use permlab::order::{Alphabet, LinearOrder};
use permlab::perm::DEFAULT_ENUMERATION_CAP;
use permlab::series;
use permlab::stats::{self, StatName};
use permlab::sturm::is_real_rooted;
use permlab::{ColoredPerm, GroupSpec, IntPoly, Letter};

#[derive(Parser)]
#[command(name = "permlab", version, about = "exact statistics on colored permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a statistic on one colored permutation.
    Stat(StatArgs),
    /// Apply one of the statistic-transporting bijections.
    Bijection(BijectionArgs),
    /// Print one restricted polynomial, optionally with gamma vector and
    /// a real-rootedness certificate.
    Poly(PolyArgs),
    /// Print both sides of a Carlitz-type series identity.
    Series(SeriesArgs),
    /// Print the full first-letter distribution table of a family.
    Table(TableArgs),
    /// Run named identity checks.
    Verify(VerifyArgs),
}

/// Word and color-scheme flags shared by `stat` and `bijection`.
#[derive(Args)]
struct WordArgs {
    /// Comma-separated permutation values, e.g. 2,4,1,5,6,3
    #[arg(long)]
    word: String,
    /// Comma-separated colors (omitted: all 0, or all +1 with --signed)
    #[arg(long, allow_hyphen_values = true)]
    colors: Option<String>,
    /// Number of colors d (inferred from the colors when omitted)
    #[arg(long)]
    d: Option<u32>,
    /// Use the signed color scheme ±1..=±d
    #[arg(long)]
    signed: bool,
}

impl WordArgs {
    fn parse(&self) -> Result<ColoredPerm, String> {
        let values: Vec<usize> = parse_list(&self.word, "word")?;
        let colors: Vec<i32> = match &self.colors {
            Some(raw) => parse_list(raw, "colors")?,
            None => {
                let fill = if self.signed { 1 } else { 0 };
                vec![fill; values.len()]
            }
        };
        let signed = self.signed || colors.iter().any(|&c| c < 0);
        let d = self.d.unwrap_or_else(|| {
            let inferred = if signed {
                colors.iter().map(|c| c.unsigned_abs()).max().unwrap_or(1)
            } else {
                colors.iter().map(|&c| c.max(0) as u32 + 1).max().unwrap_or(1)
            };
            inferred.max(1)
        });
        let spec = if signed {
            GroupSpec::signed(values.len(), d)
        } else {
            GroupSpec::unsigned(values.len(), d)
        }
        .map_err(|e| e.to_string())?;
        ColoredPerm::new(values, colors, spec).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct StatArgs {
    /// ldes | lasc | lexc | bexc | des | exc | des_b | exc_b | asc_b
    #[arg(long)]
    stat: String,
    /// color-major | min-one | symmetric | random:<seed> | list:<v.c,...>
    #[arg(long)]
    order: Option<String>,
    #[command(flatten)]
    word: WordArgs,
    /// Also print the index set behind the count.
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct BijectionArgs {
    /// phi | gamma-min-one | gamma-sym
    #[arg(long)]
    map: String,
    /// Order for phi (the other maps fix their own orders)
    #[arg(long)]
    order: Option<String>,
    /// Apply the inverse map instead.
    #[arg(long)]
    inverse: bool,
    #[command(flatten)]
    word: WordArgs,
}

#[derive(Args)]
struct PolyArgs {
    /// A | AExc | B | BE
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// First-letter class: j >= 1 for A/AExc, signed k for B/BE
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    /// Also print the gamma vector about the forced center.
    #[arg(long)]
    gamma: bool,
    /// Also print the Sturm real-rootedness certificate.
    #[arg(long)]
    sturm: bool,
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct SeriesArgs {
    /// carlitz | brenti
    #[arg(long)]
    identity: String,
    #[arg(long)]
    n: usize,
    /// Signed class index (carlitz only)
    #[arg(long, allow_hyphen_values = true)]
    i: Option<i64>,
    #[arg(long, default_value_t = 20)]
    terms: usize,
    #[arg(long, default_value = "tsv")]
    format: String,
}

#[derive(Args)]
struct TableArgs {
    /// A | AExc | B | BE | colored-ldes | colored-lexc
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// Color parameter (colored families only)
    #[arg(long)]
    d: Option<u32>,
    #[arg(long, default_value = "tsv")]
    format: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run one check by id.
    #[arg(long, conflicts_with_all = ["all", "list"])]
    check: Option<String>,
    /// Run every registered check at default parameters.
    #[arg(long, conflicts_with = "list")]
    all: bool,
    /// List the registered checks.
    #[arg(long)]
    list: bool,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    seed: Option<i64>,
    #[arg(long)]
    trials: Option<i64>,
    #[arg(long)]
    terms: Option<i64>,
    /// Run series identities with the summation bounds as printed.
    #[arg(long)]
    strict_paper: bool,
    #[arg(long, default_value = "tsv")]
    format: String,
}

fn parse_list<T: FromStr>(raw: &str, what: &str) -> Result<Vec<T>, String> {
    raw.split(',')
        .map(|item| {
            item.trim()
                .parse::<T>()
                .map_err(|_| format!("cannot parse {what} entry: {item}"))
        })
        .collect()
}

fn parse_letter(raw: &str) -> Result<Letter, String> {
    let raw = raw.trim();
    if raw == "0" || raw == "0.0" {
        return Ok(Letter::zero());
    }
    let (value, color) = raw
        .split_once('.')
        .ok_or_else(|| format!("letter {raw} is not of the form value.color"))?;
    Ok(Letter::new(
        value.parse().map_err(|_| format!("bad letter value in {raw}"))?,
        color.parse().map_err(|_| format!("bad letter color in {raw}"))?,
    ))
}

/// Resolves an `--order` argument against a word's alphabet.
fn parse_order(raw: Option<&str>, spec: GroupSpec) -> Result<LinearOrder, String> {
    let n = spec.n();
    let d = spec.scheme().d();
    let name = raw.unwrap_or(if spec.scheme().is_signed() { "symmetric" } else { "min-one" });
    let order = match name {
        "color-major" => LinearOrder::color_major(n, d),
        "min-one" => LinearOrder::min_one(n, d),
        "symmetric" => LinearOrder::symmetric(n, d),
        other => {
            if let Some(seed) = other.strip_prefix("random:") {
                let seed: u64 = seed.parse().map_err(|_| format!("bad seed in {other}"))?;
                LinearOrder::random_over(Alphabet::of(spec), seed)
            } else if let Some(list) = other.strip_prefix("list:") {
                let letters = list.split(',').map(parse_letter).collect::<Result<Vec<_>, _>>()?;
                LinearOrder::from_ranking(Alphabet::of(spec), &letters)
            } else {
                return Err(format!("unknown order: {other}"));
            }
        }
    };
    let order = order.map_err(|e| e.to_string())?;
    if !order.matches(spec) {
        return Err("order alphabet does not match the word".into());
    }
    Ok(order)
}

fn bounds_from_env() -> Result<Bounds, String> {
    match std::env::var("PERMLAB_MAX_ELEMENTS") {
        Ok(raw) => raw
            .parse::<u128>()
            .map(|max_elements| Bounds { max_elements })
            .map_err(|_| format!("PERMLAB_MAX_ELEMENTS must be an integer, got {raw}")),
        Err(_) => Ok(Bounds { max_elements: DEFAULT_ENUMERATION_CAP }),
    }
}

fn coeff_strings(poly: &IntPoly) -> Vec<String> {
    poly.coeffs().iter().map(|c| c.to_string()).collect()
}

fn run_stat(args: &StatArgs) -> Result<(), String> {
    let p = args.word.parse()?;
    let stat = StatName::from_str(&args.stat).map_err(|e| e.to_string())?;
    let order;
    let order_ref = if stat.takes_order() {
        order = parse_order(args.order.as_deref(), p.spec())?;
        Some(&order)
    } else {
        None
    };
    let count = stats::evaluate(&p, stat, order_ref).map_err(|e| e.to_string())?;
    println!("{count}");
    if args.verbose {
        let set = stats::index_set(&p, stat, order_ref).map_err(|e| e.to_string())?;
        let items: Vec<String> = set.iter().map(|i| i.to_string()).collect();
        println!("indices: [{}]", items.join(", "));
    }
    Ok(())
}

fn run_bijection(args: &BijectionArgs) -> Result<(), String> {
    let p = args.word.parse()?;
    let spec = p.spec();
    let err = |e: permlab::Error| e.to_string();
    let (image, order, excedance_stat): (ColoredPerm, LinearOrder, &str) = match args.map.as_str() {
        "phi" => {
            let order = parse_order(args.order.as_deref(), spec)?;
            let image = if args.inverse {
                biject::phi_inverse(&p, &order).map_err(err)?
            } else {
                biject::phi(&p, &order).map_err(err)?
            };
            (image, order, "lexc")
        }
        "gamma-min-one" => {
            let order = LinearOrder::min_one(spec.n(), spec.scheme().d()).map_err(err)?;
            let image = if args.inverse {
                biject::gamma_min_one_inverse(&p).map_err(err)?
            } else {
                biject::gamma_min_one(&p).map_err(err)?
            };
            (image, order, "lexc")
        }
        "gamma-sym" => {
            let order = LinearOrder::symmetric(spec.n(), spec.scheme().d()).map_err(err)?;
            let image = if args.inverse {
                biject::gamma_symmetric_inverse(&p).map_err(err)?
            } else {
                biject::gamma_symmetric(&p).map_err(err)?
            };
            (image, order, "bexc")
        }
        other => return Err(format!("unknown map: {other}")),
    };
    // the excedance side lives on the preimage, the descent side on the image
    let (preimage, word) = if args.inverse { (&image, &p) } else { (&p, &image) };
    let exc_count = match excedance_stat {
        "bexc" => stats::bexc(preimage).map_err(err)?,
        _ => stats::lexc(preimage, &order).map_err(err)?,
    };
    println!("input:  {p}");
    println!("output: {image}");
    println!("{excedance_stat}(preimage) = {exc_count}");
    println!("ldes(image)    = {}", stats::ldes(word, &order).map_err(err)?);
    Ok(())
}

fn run_poly(args: &PolyArgs) -> Result<(), String> {
    let bounds = bounds_from_env()?;
    let err = |e: permlab::Error| e.to_string();
    let poly = match args.family.as_str() {
        "A" => {
            let j = usize::try_from(args.k).map_err(|_| "family A takes k >= 1".to_string())?;
            conger_poly(args.n, j).map_err(err)?
        }
        "AExc" => {
            let j = usize::try_from(args.k).map_err(|_| "family AExc takes k >= 1".to_string())?;
            if j < 1 || j > args.n {
                return Err(format!("class index {j} not in 1..={}", args.n));
            }
            let spec = GroupSpec::unsigned(args.n, 1).map_err(err)?;
            stat_polynomial_capped(spec, StatName::Exc, None, Some(Letter::new(j, 0)), bounds.max_elements)
                .map_err(err)?
        }
        "B" => typeb_des_poly_rec(args.n, args.k).map_err(err)?,
        "BE" => {
            if args.k == 0 || args.k.unsigned_abs() as usize > args.n {
                return Err(format!("class index {} not in ±1..=±{}", args.k, args.n));
            }
            let spec = GroupSpec::signed(args.n, 1).map_err(err)?;
            let letter = Letter::new(args.k.unsigned_abs() as usize, args.k.signum() as i32);
            stat_polynomial_capped(spec, StatName::ExcB, None, Some(letter), bounds.max_elements)
                .map_err(err)?
        }
        other => return Err(format!("unknown polynomial family: {other}")),
    };

    // the only possible palindromicity center is valuation + degree
    let gamma = if args.gamma {
        let m = poly.valuation().unwrap_or(0) + poly.degree().unwrap_or(0);
        Some(gamma_vector(&poly, m).map_err(err)?)
    } else {
        None
    };
    let real_rooted = if args.sturm {
        Some(is_real_rooted(&poly).map_err(err)?)
    } else {
        None
    };

    match OutputFormat::from_str(&args.format).map_err(err)? {
        OutputFormat::Json => {
            let quote = |items: &[String]| {
                items.iter().map(|c| format!("\"{c}\"")).collect::<Vec<_>>().join(",")
            };
            let mut body = format!(
                "\"family\":\"{}\",\"n\":{},\"k\":{},\"coeffs\":[{}]",
                args.family,
                args.n,
                args.k,
                quote(&coeff_strings(&poly))
            );
            if let Some(gv) = &gamma {
                let gs: Vec<String> = gv.gammas().iter().map(|g| g.to_string()).collect();
                body.push_str(&format!(",\"gamma\":[{}]", quote(&gs)));
            }
            if let Some(rr) = real_rooted {
                body.push_str(&format!(",\"real_rooted\":{rr}"));
            }
            println!("{{{body}}}");
        }
        OutputFormat::Tsv => {
            let mut line = format!(
                "{}\t{}\t{}\t{}",
                args.family,
                args.n,
                args.k,
                coeff_strings(&poly).join(",")
            );
            if let Some(gv) = &gamma {
                let gs: Vec<String> = gv.gammas().iter().map(|g| g.to_string()).collect();
                line.push_str(&format!("\t{}", gs.join(",")));
            }
            if let Some(rr) = real_rooted {
                line.push_str(&format!("\t{rr}"));
            }
            println!("{line}");
        }
    }
    Ok(())
}

fn run_series(args: &SeriesArgs) -> Result<(), String> {
    let err = |e: permlab::Error| e.to_string();
    let (label, lhs, rhs) = match args.identity.as_str() {
        "carlitz" => {
            let i = args.i.ok_or_else(|| "carlitz needs --i".to_string())?;
            (
                format!("carlitz n={} i={i}", args.n),
                series::carlitz_lhs(args.n, i, args.terms).map_err(err)?,
                series::carlitz_rhs(args.n, i, args.terms).map_err(err)?,
            )
        }
        "brenti" => (
            format!("brenti n={}", args.n),
            series::brenti_lhs(args.n, args.terms).map_err(err)?,
            series::brenti_rhs(args.n, args.terms).map_err(err)?,
        ),
        other => return Err(format!("unknown identity: {other}")),
    };
    let equal = lhs == rhs;
    let coeffs = |s: &permlab::TruncatedSeries| {
        s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()
    };
    match OutputFormat::from_str(&args.format).map_err(err)? {
        OutputFormat::Json => {
            let quote = |items: Vec<String>| {
                items.into_iter().map(|c| format!("\"{c}\"")).collect::<Vec<_>>().join(",")
            };
            println!(
                "{{\"identity\":\"{label}\",\"terms\":{},\"lhs\":[{}],\"rhs\":[{}],\"equal\":{equal}}}",
                args.terms,
                quote(coeffs(&lhs)),
                quote(coeffs(&rhs)),
            );
        }
        OutputFormat::Tsv => {
            println!("lhs\t{}", coeffs(&lhs).join(","));
            println!("rhs\t{}", coeffs(&rhs).join(","));
            println!("equal\t{equal}");
        }
    }
    Ok(())
}

fn run_table(args: &TableArgs) -> Result<(), String> {
    let bounds = bounds_from_env()?;
    let err = |e: permlab::Error| e.to_string();
    let family = TableFamily::from_str(&args.family).map_err(err)?;
    let format = OutputFormat::from_str(&args.format).map_err(err)?;
    let text = harness::emit_table(family, args.n, args.d, format, bounds).map_err(err)?;
    println!("{text}");
    Ok(())
}

/// Maps the CLI sugar flags onto whichever parameter names the check
/// declares.
fn apply_overrides(spec: CheckSpec, args: &VerifyArgs) -> CheckSpec {
    let known: Vec<String> = spec.params.keys().cloned().collect();
    let mut spec = spec;
    let set = |spec: CheckSpec, candidates: &[&str], value: Option<i64>| -> CheckSpec {
        match value {
            None => spec,
            Some(v) => {
                let name = candidates
                    .iter()
                    .find(|name| known.iter().any(|k| k == *name))
                    // unknown names surface run_check's parameter error
                    .unwrap_or(&candidates[0]);
                spec.with_param(name, v)
            }
        }
    };
    spec = set(spec, &["n", "n_max", "n_plus_1_max"], args.n);
    spec = set(spec, &["d", "d_max", "d2_n_max"], args.d);
    spec = set(spec, &["k"], args.k);
    spec = set(spec, &["seed"], args.seed);
    spec = set(spec, &["trials"], args.trials);
    spec = set(spec, &["terms"], args.terms);
    spec = set(spec, &["strict_paper"], args.strict_paper.then_some(1));
    spec
}

fn run_verify(args: &VerifyArgs) -> Result<bool, String> {
    let bounds = bounds_from_env()?;
    let format = OutputFormat::from_str(&args.format).map_err(|e| e.to_string())?;
    if args.list {
        for check in harness::list_checks() {
            let summary = harness::check_summary(&check.id).map_err(|e| e.to_string())?;
            println!("{}\t{}", check.id, summary);
        }
        return Ok(true);
    }
    let specs: Vec<CheckSpec> = if args.all {
        harness::list_checks()
    } else if let Some(id) = &args.check {
        vec![CheckSpec::by_id(id).map_err(|e| e.to_string())?]
    } else {
        return Err("verify needs one of --check <id>, --all, or --list".into());
    };
    let mut all_passed = true;
    for spec in specs {
        let spec = apply_overrides(spec.with_bounds(bounds), args);
        let report = harness::run_check(&spec).map_err(|e| e.to_string())?;
        all_passed &= report.passed();
        match format {
            OutputFormat::Json => println!("{}", report.to_json()),
            OutputFormat::Tsv => println!("{}", report.to_tsv()),
        }
    }
    Ok(all_passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Stat(args) => run_stat(args).map(|()| true),
        Command::Bijection(args) => run_bijection(args).map(|()| true),
        Command::Poly(args) => run_poly(args).map(|()| true),
        Command::Series(args) => run_series(args).map(|()| true),
        Command::Table(args) => run_table(args).map(|()| true),
        Command::Verify(args) => run_verify(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
