use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use pigen_core::altgen::{alt_syl_pair, alt_two_vs_t, generates, GenerationCertificate};
use pigen_core::arith::prime_divisors;
use pigen_core::bound::{
    consistency_check, parse_bound_input, perm_character_from_subgroup, read_bound_file, sporadic_bound,
};
use pigen_core::classes::ClassTable;
use pigen_core::engine::construct_pi_pair;
use pigen_core::fixtures::derive_bound_input;
use pigen_core::groupfile::read_group_file;
use pigen_core::sylow::{sylow_alternating, sylow_generic, sylow_symmetric};
use pigen_core::{Error, GroupHandle, Limits};

mod report;

use report::{certificate_text, Outcome};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "pigen",
    version,
    about = "Construct and verify generating pairs of permutation groups"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random trial budget (overrides PIGEN_TRIALS).
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Largest group order enumerated element by element (overrides PIGEN_MAX_ORDER).
    #[arg(long, global = true)]
    max_order: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Sylow p-subgroup of S_n, A_n or a group from a file.
    Sylow {
        #[arg(long, conflicts_with_all = ["alt", "group"])]
        sym: Option<usize>,
        #[arg(long, conflicts_with = "group")]
        alt: Option<usize>,
        #[arg(long)]
        group: Option<PathBuf>,
        p: u64,
    },
    /// Sylow 2-subgroup and Sylow t-subgroup generating A_n.
    AltTwo { n: usize, t: u64 },
    /// Sylow p- and Sylow q-subgroups generating A_n.
    AltPair { n: usize, p: u64, q: u64 },
    /// Does <A, B> equal G?
    Verify { group: PathBuf, a: PathBuf, b: PathBuf },
    /// Evaluate, check or derive counting-bound data.
    Bound {
        /// Bound-input JSON file.
        file: Option<PathBuf>,
        /// Report a single class.
        #[arg(long)]
        class: Option<String>,
        /// Check data invariants only.
        #[arg(long, conflicts_with = "derive")]
        check: bool,
        /// Build a permutation-character column from a group file and a subgroup file.
        #[arg(long, num_args = 2, value_names = ["GFILE", "MFILE"])]
        derive: Option<Vec<PathBuf>>,
    },
    /// A pi-subgroup and a pi'-subgroup generating the group.
    Pair {
        group: PathBuf,
        /// Comma-separated primes; empty for pi = {}.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        pi: Vec<u64>,
    },
    /// Run the pair constructor over every group file in a directory.
    PairScan {
        dir: PathBuf,
        /// Every subset of the prime divisors instead of single primes.
        #[arg(long)]
        all_pi: bool,
    },
    /// Inspect fixture files or rebuild bound data from generators.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// Degree and order of every group file in a directory.
    List { dir: PathBuf },
    /// Parse every group file and validate every bound file under a fixture root.
    Check { root: PathBuf },
    /// Bound-input JSON for a group, derived from its generators.
    DeriveBound {
        name: String,
        group: PathBuf,
        /// Odd-index maximal subgroups to use instead of computing them.
        maximals: Vec<PathBuf>,
    },
}

fn env_or<T: std::str::FromStr>(key: &str, default: T) -> Result<T, Error> {
    match std::env::var(key) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("{key}={v} is not a valid number"))),
        Err(_) => Ok(default),
    }
}

fn limits(global: &Global) -> Result<Limits, Error> {
    let d = Limits::default();
    Ok(Limits {
        max_order: global
            .max_order
            .map_or_else(|| env_or("PIGEN_MAX_ORDER", d.max_order), Ok)?,
        max_degree: env_or("PIGEN_MAX_DEGREE", d.max_degree)?,
        trials: global.trials.map_or_else(|| env_or("PIGEN_TRIALS", d.trials), Ok)?,
        step3_budget: env_or("PIGEN_STEP3_BUDGET", d.step3_budget)?,
        ..d
    })
}

fn exit_code_for(e: &Error) -> u8 {
    if e.is_budget() || matches!(e, Error::Internal(_)) {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.global.format;
    let result = limits(&cli.global).and_then(|l| run(&cli, &l));
    match result {
        Ok(out) => {
            match format {
                Format::Text => print!("{}", out.text),
                Format::Json => {
                    let mut doc = out.json;
                    if let Value::Object(map) = &mut doc {
                        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
                        map.insert("exit_status".into(), json!(out.status));
                    }
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            let code = exit_code_for(&e);
            if format == Format::Json {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "exit_status": code,
                    "error": e.to_string(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli, limits: &Limits) -> Result<Outcome, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.global.seed);
    match &cli.command {
        Command::Sylow { sym, alt, group, p } => {
            let d = match (sym, alt, group) {
                (Some(n), None, None) => sylow_symmetric(*n, *p)?,
                (None, Some(n), None) => sylow_alternating(*n, *p)?,
                (None, None, Some(path)) => {
                    let g = read_group_file(path)?;
                    sylow_generic(&g, *p, &mut rng, limits)?
                }
                _ => return Err(Error::InvalidInput("give exactly one of --sym, --alt, --group".into())),
            };
            let file = d.group.to_group_file();
            let text = format!(
                "# Sylow {}-subgroup, order {} ({})\n{}",
                d.p,
                d.claimed_order,
                d.provenance.label(),
                file
            );
            let json = json!({
                "command": "sylow",
                "p": d.p,
                "degree": d.group.degree(),
                "order": d.group.order().to_string(),
                "claimed_order": d.claimed_order.to_string(),
                "provenance": d.provenance.label(),
                "generators": d.group.generators().iter().map(|g| g.to_cycle_string()).collect::<Vec<_>>(),
            });
            Ok(Outcome::new(0, text, json))
        }
        Command::AltTwo { n, t } => {
            let c = alt_two_vs_t(*n, *t, &mut rng, limits)?;
            Ok(certificate_outcome(
                "alt-two",
                &format!("A_{n}: Sylow 2 and Sylow {t}"),
                c,
            ))
        }
        Command::AltPair { n, p, q } => {
            let c = alt_syl_pair(*n, *p, *q, &mut rng, limits)?;
            Ok(certificate_outcome(
                "alt-pair",
                &format!("A_{n}: Sylow {p} and Sylow {q}"),
                c,
            ))
        }
        Command::Verify { group, a, b } => {
            let g = read_group_file(group)?;
            let ga = read_group_file(a)?;
            let gb = read_group_file(b)?;
            let mut c = generates(&g, &ga, &gb)?;
            let joint = ga.join(&gb);
            c.details.insert("joint_orbits".into(), json!(joint.orbits().len()));
            c.details
                .insert("joint_transitive".into(), json!(joint.is_transitive()));
            Ok(certificate_outcome(
                "verify",
                &format!("<{}, {}> in {}", a.display(), b.display(), group.display()),
                c,
            ))
        }
        Command::Bound {
            file,
            class,
            check,
            derive,
        } => bound(
            file.as_deref(),
            class.as_deref(),
            *check,
            derive.as_deref(),
            &mut rng,
            limits,
        ),
        Command::Pair { group, pi } => {
            let g = read_group_file(group)?;
            let pair = construct_pi_pair(&g, pi, &mut rng, limits)?;
            let mut text = format!(
                "pi = {:?}: |P| = {}, |R| = {}, |G| = {}\n",
                pair.pi,
                pair.p.order(),
                pair.r.order(),
                g.order()
            );
            text.push_str("trace:\n");
            for t in &pair.trace {
                text.push_str(&format!("  {t}\n"));
            }
            text.push_str(&certificate_text("P and R", &pair.certificate));
            let json = json!({
                "command": "pair",
                "group": group.display().to_string(),
                "pi": pair.pi,
                "p_order": pair.p.order().to_string(),
                "r_order": pair.r.order().to_string(),
                "trace": pair.trace,
                "certificate": pair.certificate,
            });
            Ok(Outcome::new(0, text, json))
        }
        Command::PairScan { dir, all_pi } => pair_scan(dir, *all_pi, cli.global.seed, limits),
        Command::Fixtures { action } => fixtures(action, &mut rng, limits),
    }
}

fn certificate_outcome(command: &str, title: &str, c: GenerationCertificate) -> Outcome {
    let status = if c.generated { 0 } else { 1 };
    let text = certificate_text(title, &c);
    let json = json!({ "command": command, "certificate": c });
    Outcome::new(status, text, json)
}

fn bound(
    file: Option<&Path>,
    class: Option<&str>,
    check: bool,
    derive: Option<&[PathBuf]>,
    rng: &mut ChaCha8Rng,
    limits: &Limits,
) -> Result<Outcome, Error> {
    if let Some(paths) = derive {
        let g = read_group_file(&paths[0])?;
        let m = read_group_file(&paths[1])?;
        let table = ClassTable::build(&g, rng, limits)?;
        let reps: Vec<_> = table.classes().iter().map(|c| c.representative.clone()).collect();
        let label = format!("M{}", g.index_of(&m));
        let col = perm_character_from_subgroup(&g, &m, &reps, &label, limits)?;
        let mut text = format!("column {} of degree {}\n", col.label, col.degree);
        for (c, v) in table.classes().iter().zip(&col.values) {
            text.push_str(&format!("  {:<5} {v}\n", c.name));
        }
        let json = json!({
            "command": "bound-derive",
            "label": col.label,
            "degree": col.degree.to_string(),
            "classes": table.classes().iter().map(|c| json!({
                "name": c.name,
                "size": c.size.to_string(),
                "order": c.order,
                "representative": c.representative.to_cycle_string(),
            })).collect::<Vec<_>>(),
            "values": col.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        });
        return Ok(Outcome::new(0, text, json));
    }
    let Some(file) = file else {
        return Err(Error::InvalidInput("bound needs a FILE or --derive GFILE MFILE".into()));
    };
    if check {
        let input = parse_bound_input(&std::fs::read_to_string(file)?)?;
        let violations: Vec<String> = consistency_check(&input).iter().map(|v| v.to_string()).collect();
        let status = if violations.is_empty() { 0 } else { 1 };
        let mut text = format!("{}: {} violation(s)\n", input.group, violations.len());
        for v in &violations {
            text.push_str(&format!("  {v}\n"));
        }
        let json = json!({ "command": "bound-check", "group": input.group, "violations": violations });
        return Ok(Outcome::new(status, text, json));
    }
    let input = read_bound_file(file)?;
    let report = sporadic_bound(&input);
    if let Some(name) = class {
        let row = report
            .row(name)
            .ok_or_else(|| Error::InvalidInput(format!("no nonidentity class named {name}")))?;
        let status = if row.below_one { 0 } else { 1 };
        let text = format!(
            "{} {}: lhs = {} ({})\n",
            input.group,
            row.class,
            row.lhs,
            verdict(row.below_one)
        );
        let json = json!({ "command": "bound", "group": input.group, "row": row });
        return Ok(Outcome::new(status, text, json));
    }
    let mut text = format!("{}: [N(P):P] = {}\n", input.group, input.normalizer_index);
    for row in &report.rows {
        text.push_str(&format!(
            "  {:<5} {:>12}  {}\n",
            row.class,
            row.lhs.to_string(),
            verdict(row.below_one)
        ));
    }
    text.push_str(&format!("max {} at {}\n", report.max, report.max_classes.join(", ")));
    let status = if report.all_below_one { 0 } else { 1 };
    let json = json!({ "command": "bound", "report": report });
    Ok(Outcome::new(status, text, json))
}

fn verdict(below_one: bool) -> &'static str {
    if below_one {
        "< 1"
    } else {
        ">= 1"
    }
}

fn group_files(dir: &Path) -> Result<Vec<PathBuf>, Error> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "grp"))
        .collect();
    paths.sort();
    Ok(paths)
}

fn prime_sets(primes: &[u64], all: bool) -> Vec<Vec<u64>> {
    if !all {
        return primes.iter().map(|&p| vec![p]).collect();
    }
    (0..1u64 << primes.len())
        .map(|mask| {
            primes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect()
        })
        .collect()
}

fn pair_scan(dir: &Path, all_pi: bool, seed: u64, limits: &Limits) -> Result<Outcome, Error> {
    let mut text = String::new();
    let mut records = Vec::new();
    let mut status = 0u8;
    for path in group_files(dir)? {
        let g = read_group_file(&path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        for pi in prime_sets(&prime_divisors(&g.order()), all_pi) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (ok, detail) = match construct_pi_pair(&g, &pi, &mut rng, limits) {
                Ok(pair) => (true, format!("|P| = {}, |R| = {}", pair.p.order(), pair.r.order())),
                Err(e) => {
                    status = status.max(exit_code_for(&e));
                    (false, e.to_string())
                }
            };
            text.push_str(&format!(
                "{name:<10} pi = {pi:?}: {} {detail}\n",
                if ok { "ok" } else { "FAILED" }
            ));
            records.push(json!({ "group": name, "pi": pi, "ok": ok, "detail": detail }));
        }
    }
    let failures = records.iter().filter(|r| r["ok"] == json!(false)).count();
    text.push_str(&format!("{} runs, {failures} failures\n", records.len()));
    let json = json!({ "command": "pair-scan", "runs": records, "failures": failures });
    Ok(Outcome::new(status, text, json))
}

fn fixtures(action: &FixturesAction, rng: &mut ChaCha8Rng, limits: &Limits) -> Result<Outcome, Error> {
    match action {
        FixturesAction::List { dir } => {
            let mut text = String::new();
            let mut records = Vec::new();
            for path in group_files(dir)? {
                let g = read_group_file(&path)?;
                let name = path
                    .file_name()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default();
                text.push_str(&format!("{name:<16} degree {:>4}  order {}\n", g.degree(), g.order()));
                records.push(json!({ "file": name, "degree": g.degree(), "order": g.order().to_string() }));
            }
            Ok(Outcome::new(
                0,
                text,
                json!({ "command": "fixtures-list", "groups": records }),
            ))
        }
        FixturesAction::Check { root } => {
            let mut text = String::new();
            let mut problems = Vec::new();
            let mut checked = 0;
            for sub in ["groups", "sporadic", "verify"] {
                let dir = root.join(sub);
                if !dir.is_dir() {
                    continue;
                }
                for path in group_files(&dir)? {
                    checked += 1;
                    if let Err(e) = read_group_file(&path) {
                        problems.push(format!("{}: {e}", path.display()));
                    }
                }
            }
            let bounds = root.join("bounds");
            if bounds.is_dir() {
                let mut paths: Vec<PathBuf> = std::fs::read_dir(&bounds)?
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.extension().is_some_and(|x| x == "json"))
                    .collect();
                paths.sort();
                for path in paths {
                    checked += 1;
                    if let Err(e) = check_bound_fixture(&path, limits) {
                        problems.push(format!("{}: {e}", path.display()));
                    }
                }
            }
            text.push_str(&format!("{checked} files checked, {} problem(s)\n", problems.len()));
            for p in &problems {
                text.push_str(&format!("  {p}\n"));
            }
            let status = if problems.is_empty() { 0 } else { 1 };
            let json = json!({ "command": "fixtures-check", "checked": checked, "problems": problems });
            Ok(Outcome::new(status, text, json))
        }
        FixturesAction::DeriveBound { name, group, maximals } => {
            let g = read_group_file(group)?;
            let supplied = if maximals.is_empty() {
                None
            } else {
                Some(
                    maximals
                        .iter()
                        .map(read_group_file)
                        .collect::<Result<Vec<GroupHandle>, Error>>()?,
                )
            };
            let d = derive_bound_input(name, &g, supplied, rng, limits)?;
            let doc = d.input.to_json();
            let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
            let json = json!({
                "command": "fixtures-derive-bound",
                "normalizer_note": d.normalizer_note,
                "input": doc,
            });
            Ok(Outcome::new(0, text, json))
        }
    }
}

/// Ingests a bound file and, when it carries generators, recomputes every
/// column from the coset action.
fn check_bound_fixture(path: &Path, limits: &Limits) -> Result<(), Error> {
    let input = read_bound_file(path)?;
    let (Some(g), Some(reps)) = (input.group_handle()?, input.representatives()?) else {
        return Ok(());
    };
    for col in &input.maximals {
        let Some(gens) = &col.generators else { continue };
        let m = pigen_core::bound::handle_from_strings(g.degree(), gens)?;
        let again = perm_character_from_subgroup(&g, &m, &reps, &col.label, limits)?;
        if again.degree != col.degree || again.values != col.values {
            return Err(Error::BoundData(format!(
                "column {} differs from its coset action",
                col.label
            )));
        }
    }
    Ok(())
}
