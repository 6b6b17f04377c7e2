use clap::{Parser, Subcommand};
use cosetkit::acyclicity;
use cosetkit::budget::Budget;
use cosetkit::catalog;
use cosetkit::covering;
use cosetkit::dual::Dual;
use cosetkit::error::Error;
use cosetkit::group::{Group, GroupSpec};
use cosetkit::mask::Mask;
use cosetkit::paths::{self, Constraint};
use cosetkit::report::{self, Report};
use cosetkit::verify;
use cosetkit::{Cayley, CosetId};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

/// Analyses of finite Cayley graphs over involutive generators: coset
/// cycles and paths, acyclicity levels, dual hypergraphs, convex closures,
/// coverings, and exhaustive verification sweeps.
#[derive(Parser)]
#[command(name = "cosetkit", version)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Search-node budget (overrides COSETKIT_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads (accepted for compatibility; analyses are fast
    /// enough single-threaded at catalog scale).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a group and report girth, 2-acyclicity, acyclicity level and
    /// the dual comparison.
    Analyze {
        file: PathBuf,
        /// Longest coset cycle searched for.
        #[arg(long, default_value_t = 8)]
        max_cycle_len: usize,
    },
    /// Distance between two vertices, with optional avoided-family and
    /// dual cross-check.
    Distance {
        file: PathBuf,
        /// Start vertex as a word over generator labels ("" = identity).
        #[arg(long)]
        from: String,
        /// End vertex as a word.
        #[arg(long)]
        to: String,
        /// Comma-separated labels of the avoided subset.
        #[arg(long)]
        gamma: Option<String>,
        /// Path class: any, nontrivial, inner, non-t.
        #[arg(long, default_value = "nontrivial")]
        constraint: String,
    },
    /// Dual hypergraph: counts, optional bounded acyclicity comparison,
    /// optional hypergraph JSON emission (with per-vertex colors).
    Dual {
        file: PathBuf,
        #[arg(long)]
        check_acyclic: Option<usize>,
        #[arg(long)]
        emit_hypergraph: Option<PathBuf>,
    },
    /// Convex closure of a set of cosets, checked against the dual closure.
    Closure {
        file: PathBuf,
        /// Coset as "<word>:<label,label>"; repeatable.
        #[arg(long = "coset", required = true)]
        cosets: Vec<String>,
        /// Path length bound m (>= 2).
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Compatibility and quotient map from one group onto another.
    Cover {
        source: PathBuf,
        target: PathBuf,
        /// Also verify the local-isomorphism (covering) property.
        #[arg(long)]
        verify: bool,
    },
    /// Built-in group families.
    Catalog {
        #[command(subcommand)]
        sub: CatalogCmd,
    },
    /// Run a verification suite (or "all") over the catalog.
    Verify { suite: String },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List the standard instances.
    List,
    /// Emit a family instance as group JSON.
    Emit {
        name: String,
        params: Vec<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = match cli.budget {
        Some(n) => Budget::new(n),
        None => Budget::from_env(),
    };
    let started = Instant::now();
    match run(&cli, &budget) {
        Ok((mut report, code)) => {
            report.timing_ms = started.elapsed().as_millis();
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded(_) => 3,
        Error::NotTwoAcyclic { .. } => 2,
        _ => 1,
    }
}

fn read_input(path: &Path) -> Result<(String, String), Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::MalformedSpec(format!("{}: {}", path.display(), e)))?;
    let digest = format!("{:016x}", report::fnv1a64(text.as_bytes()));
    Ok((text, digest))
}

fn load_group(path: &Path) -> Result<(Cayley, String), Error> {
    let (text, digest) = read_input(path)?;
    let spec = GroupSpec::from_json(&text)?;
    Ok((Cayley::new(Group::build(&spec)?), digest))
}

fn parse_mask(g: &Cayley, text: &str) -> Result<Mask, Error> {
    let mut m = Mask::EMPTY;
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        m = m.with(g.group.label_index(part)?);
    }
    Ok(m)
}

fn parse_vertex(g: &Cayley, word: &str) -> Result<u32, Error> {
    Ok(g.group.eval(&g.group.parse_word(word)?))
}

fn report_base(command: String, digest: Option<String>) -> Report {
    Report {
        schema_version: report::SCHEMA_VERSION,
        command,
        input_digest: digest,
        status: "verified".into(),
        results: Value::Null,
        timing_ms: 0,
    }
}

fn run(cli: &Cli, budget: &Budget) -> Result<(Report, u8), Error> {
    match &cli.cmd {
        Cmd::Analyze { file, max_cycle_len } => cmd_analyze(file, *max_cycle_len, budget),
        Cmd::Distance { file, from, to, gamma, constraint } => {
            cmd_distance(file, from, to, gamma.as_deref(), constraint, budget)
        }
        Cmd::Dual { file, check_acyclic, emit_hypergraph } => {
            cmd_dual(file, *check_acyclic, emit_hypergraph.as_deref(), budget)
        }
        Cmd::Closure { file, cosets, bound } => cmd_closure(file, cosets, *bound, budget),
        Cmd::Cover { source, target, verify } => cmd_cover(source, target, *verify),
        Cmd::Catalog { sub } => cmd_catalog(sub),
        Cmd::Verify { suite } => cmd_verify(suite, budget),
    }
}

fn cmd_analyze(file: &Path, max_cycle_len: usize, budget: &Budget) -> Result<(Report, u8), Error> {
    let (g, digest) = load_group(file)?;
    let mut rep = report_base(format!("analyze {}", file.display()), Some(digest));
    let girth = acyclicity::girth(&g);
    let two_witness = g.two_acyclic_witness();
    let cycle = acyclicity::find_coset_cycle(&g, max_cycle_len, budget)?;
    let level = match &cycle {
        Some(c) => c.len() - 1,
        None => max_cycle_len,
    };
    let d = Dual::build(&g, budget)?;
    let mut dual_checks = Vec::new();
    let mut agree = true;
    if g.is_two_acyclic() {
        for n in 3..=level.min(6).max(3) {
            let cayley_ok = acyclicity::is_n_acyclic(&g, n, budget)?;
            let dual_ok = d.hypergraph().is_n_acyclic(n, budget)?;
            agree &= cayley_ok == dual_ok;
            dual_checks.push(json!({"n": n, "graph": cayley_ok, "dual": dual_ok}));
        }
    }
    rep.results = json!({
        "name": g.group.name,
        "order": g.size(),
        "generators": g.group.labels(),
        "girth": girth,
        "two_acyclic": two_witness.is_none(),
        "coset_cycle": cycle.as_ref().map(|c| report::cycle_json(&g, c)),
        "acyclicity_level": level,
        "level_is_lower_bound": cycle.is_none(),
        "dual": {
            "vertices": d.vertex_count(),
            "hyperedges": d.hypergraph().edge_count(),
            "acyclicity_agreement": dual_checks,
        },
    });
    if !agree {
        rep.status = "refuted".into();
        return Ok((rep, 2));
    }
    Ok((rep, 0))
}

fn cmd_distance(
    file: &Path,
    from: &str,
    to: &str,
    gamma: Option<&str>,
    constraint: &str,
    budget: &Budget,
) -> Result<(Report, u8), Error> {
    let (g, digest) = load_group(file)?;
    let mut rep = report_base(
        format!("distance {} --from {:?} --to {:?}", file.display(), from, to),
        Some(digest),
    );
    let v = parse_vertex(&g, from)?;
    let u = parse_vertex(&g, to)?;
    if v == u {
        return Err(Error::BadParams("--from and --to must denote distinct vertices".into()));
    }
    let gamma_mask = gamma.map(|t| parse_mask(&g, t)).transpose()?;
    let cons = match constraint {
        "any" => Constraint::Any,
        "nontrivial" => Constraint::NonTrivial,
        "inner" => Constraint::Inner,
        "non-t" => Constraint::NonT(gamma_mask.ok_or_else(|| {
            Error::BadParams("constraint non-t needs --gamma".into())
        })?),
        other => return Err(Error::BadParams(format!("unknown constraint '{other}'"))),
    };
    let max_len = g.size().saturating_sub(1).max(2);
    let path = paths::find_min_path(&g, v, u, cons, max_len, budget)?;
    let mut results = json!({
        "from": from,
        "to": to,
        "constraint": constraint,
        "distance": path.as_ref().map(|p| p.len()),
        "path": path.as_ref().map(|p| report::path_json(&g, p)),
    });
    let mut code = 0;
    if let Some(gm) = gamma_mask {
        let d = Dual::build(&g, budget)?;
        let r = d.check_two_distances(&g, v, u, gm, budget)?;
        results["gamma"] = json!(report::mask_labels(&g, gm));
        results["crosscheck"] = json!({
            "avoiding_distance": r.path_distance,
            "dual_distance": r.dual_distance,
            "consistent": r.consistent,
            "guard_ok": r.guard_ok,
        });
        if !r.consistent {
            rep.status = if r.guard_ok { "refuted".into() } else { "unverified-guard".into() };
            code = if r.guard_ok { 2 } else { 0 };
        }
    }
    rep.results = results;
    Ok((rep, code))
}

fn cmd_dual(
    file: &Path,
    check_acyclic: Option<usize>,
    emit: Option<&Path>,
    budget: &Budget,
) -> Result<(Report, u8), Error> {
    let (g, digest) = load_group(file)?;
    let mut rep = report_base(format!("dual {}", file.display()), Some(digest));
    let d = Dual::build(&g, budget)?;
    let mut results = json!({
        "vertices": d.vertex_count(),
        "hyperedges": d.hypergraph().edge_count(),
        "hyperedge_size": 1usize << g.arity(),
    });
    let mut code = 0;
    if let Some(n) = check_acyclic {
        let graph_ok = acyclicity::is_n_acyclic(&g, n, budget)?;
        let dual_ok = d.hypergraph().is_n_acyclic(n, budget)?;
        let comparable = g.is_two_acyclic();
        results["acyclic_check"] = json!({
            "n": n,
            "graph": graph_ok,
            "dual": dual_ok,
            "two_acyclic": comparable,
            "agree": graph_ok == dual_ok,
        });
        if comparable && graph_ok != dual_ok {
            rep.status = "refuted".into();
            code = 2;
        }
    }
    if let Some(path) = emit {
        let mut hg: Value = serde_json::from_str(&d.hypergraph().to_json())
            .expect("hypergraph JSON is valid");
        let colors: Vec<Vec<String>> = (0..d.vertex_count())
            .map(|i| report::mask_labels(&g, d.color(i)))
            .collect();
        hg["colors"] = json!(colors);
        std::fs::write(path, serde_json::to_string_pretty(&hg).unwrap())
            .map_err(|e| Error::MalformedSpec(format!("{}: {}", path.display(), e)))?;
        results["emitted"] = json!(path.display().to_string());
    }
    rep.results = results;
    Ok((rep, code))
}

fn cmd_closure(
    file: &Path,
    coset_args: &[String],
    bound: usize,
    budget: &Budget,
) -> Result<(Report, u8), Error> {
    let (g, digest) = load_group(file)?;
    let mut rep = report_base(format!("closure {}", file.display()), Some(digest));
    let mut set: Vec<CosetId> = Vec::new();
    for arg in coset_args {
        let (word, labels) = arg.split_once(':').ok_or_else(|| {
            Error::BadParams(format!("coset '{arg}' must look like <word>:<label,label>"))
        })?;
        let v = parse_vertex(&g, word)?;
        let m = parse_mask(&g, labels)?;
        set.push(g.coset(v, m));
    }
    let d = Dual::build(&g, budget)?;
    let r = d.convex_closure_cayley(&g, &set, bound, budget)?;
    rep.results = json!({
        "bound": bound,
        "input_size": set.len(),
        "closure_size": r.cosets.len(),
        "dual_closure_size": r.dual_size,
        "contained_in_dual": r.contained_in_dual,
        "cosets": r.cosets.iter().map(|&c| report::coset_json(&g, c)).collect::<Vec<_>>(),
    });
    if !r.contained_in_dual {
        rep.status = "refuted".into();
        return Ok((rep, 2));
    }
    Ok((rep, 0))
}

fn cmd_cover(source: &Path, target: &Path, verify: bool) -> Result<(Report, u8), Error> {
    let (stext, sdig) = read_input(source)?;
    let (ttext, tdig) = read_input(target)?;
    let g = Group::build(&GroupSpec::from_json(&stext)?)?;
    let h = Group::build(&GroupSpec::from_json(&ttext)?)?;
    let mut rep = report_base(
        format!("cover {} {}", source.display(), target.display()),
        Some(format!("{sdig} {tdig}")),
    );
    let compat = covering::check_compatible(&g, &h)?;
    let mut results = json!({
        "source": g.name,
        "target": h.name,
        "compatible": compat.compatible,
        "witness_word": compat.witness,
    });
    let mut code = 0;
    if compat.compatible {
        let m = covering::covering_map(&g, &h)?;
        results["fiber_size"] = json!(g.size / h.size);
        if verify {
            let (ok, witness) = covering::verify_covering(&m);
            results["covering"] = json!(ok);
            results["covering_witness_vertex"] = json!(witness);
            if !ok {
                rep.status = "refuted".into();
                code = 2;
            }
        }
    } else {
        rep.status = "refuted".into();
        code = 2;
    }
    rep.results = results;
    Ok((rep, code))
}

fn cmd_catalog(sub: &CatalogCmd) -> Result<(Report, u8), Error> {
    match sub {
        CatalogCmd::List => {
            let mut rep = report_base("catalog list".into(), None);
            let entries: Vec<Value> = catalog::standard_entries()
                .iter()
                .map(|e| {
                    json!({
                        "family": e.family,
                        "params": e.params,
                        "order": e.expected_order,
                    })
                })
                .collect();
            rep.results = json!({"families": catalog::FAMILIES, "instances": entries});
            Ok((rep, 0))
        }
        CatalogCmd::Emit { name, params, out } => {
            let spec = catalog::make(name, params)?;
            let text = serde_json::to_string_pretty(&spec).unwrap();
            let mut rep = report_base(format!("catalog emit {name} {params:?}"), None);
            match out {
                Some(path) => {
                    std::fs::write(path, &text)
                        .map_err(|e| Error::MalformedSpec(format!("{}: {}", path.display(), e)))?;
                    rep.results = json!({"written": path.display().to_string()});
                }
                None => {
                    rep.results = serde_json::from_str(&text).unwrap();
                }
            }
            Ok((rep, 0))
        }
    }
}

fn cmd_verify(suite: &str, budget: &Budget) -> Result<(Report, u8), Error> {
    let mut rep = report_base(format!("verify {suite}"), None);
    let results = if suite == "all" {
        verify::run_all(budget)?
    } else {
        vec![verify::run_suite(suite, budget)?]
    };
    let mut code = 0;
    let mut status = "verified";
    for r in &results {
        match r.status {
            verify::Status::Refuted => {
                status = "refuted";
                code = 2;
            }
            verify::Status::BudgetExceeded if code == 0 => {
                status = "budget-exceeded";
                code = 3;
            }
            verify::Status::UnverifiedGuard if code == 0 && status == "verified" => {
                status = "unverified-guard";
            }
            _ => {}
        }
    }
    rep.status = status.into();
    rep.results = json!({"suites": results});
    Ok((rep, code))
}
