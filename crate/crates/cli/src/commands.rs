use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::Path;

use num_bigint::BigUint;
use turan_core::constructions::{
    alon_frankl_value, bipartite_bounds_formal, build_named, clique_vector_of_expr, question11_values,
    theorem15_value, theorem16_value, NamedMaximum,
};
use turan_core::harness::{
    check_alon_frankl, check_lemma_families, check_prop_3_2, check_question_1_1_counterexample, check_theorem_1_2,
    check_theorem_1_4_bounds, check_theorem_1_5, check_theorem_1_6, inspect_structure, CheckReport, LemmaLimits,
    RunManifest, FAMILIES,
};
use turan_core::matching::{matching_number, maximum_matching, tutte_berge_witness, TUTTE_BERGE_LIMIT};
use turan_core::oracle::{ex_search_with, is_admissible, ForbiddenSpec, SearchConfig};
use turan_core::subgraph::{color_class_split, contains};
use turan_core::{build_graph, encode_graph6, ConstructionExpr, Graph};

use crate::cache::Cache;
use crate::error::CliError;
use crate::parse::{parse_expr, parse_forbidden, Forbidden};
use crate::{CheckId, Command, ForbidArgs, Format, FormulaCommand, NamedArgs, SearchArgs, VerifyArgs};

/// Clique sizes printed when no bound is given.
const DEFAULT_RMAX: usize = 32;

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Count { graph, r, rmax } => count(&graph, r, rmax),
        Command::Matching { graph } => matching(&graph),
        Command::Free { graph, forbid } => free(&graph, &forbid),
        Command::Construct { id, p, s, n, r } => {
            let e = build_named(id, p, s, n)?;
            println!("{}", encode_graph6(&build_graph(&e)?));
            print_counts(&e, r, None)
        }
        Command::Formula(f) => formula(f),
        Command::Search {
            n,
            r,
            forbid,
            search,
            json,
            no_cache,
        } => {
            let spec = forbidden_spec(&forbid.forbid, forbid.s)?;
            let cfg = config(search);
            let rec = if no_cache {
                ex_search_with(n, r, &spec, &cfg)?
            } else {
                let cache = Cache::from_env();
                let (rec, hit) = cache.lookup_or_search(n, r, &spec, &cfg)?;
                eprintln!("cache {}: {}", if hit { "hit" } else { "miss" }, cache.path().display());
                rec
            };
            if json {
                println!("{}", rec.comparable_json());
            } else {
                println!("value={}", rec.value);
                println!("witnesses={}", rec.witnesses.len());
                for w in &rec.witnesses {
                    println!("witness {}", encode_graph6(w));
                }
            }
            Ok(())
        }
        Command::Verify {
            check,
            params,
            search,
            format,
            manifest,
        } => {
            let rep = verify(check, &params, &config(search))?;
            print!("{}", render(&rep, format));
            if let Some(path) = manifest {
                append_line(&path, &rep.to_json())?;
            }
            Ok(())
        }
        Command::Report { inputs, format, out } => {
            let mut manifest = RunManifest::default();
            for path in &inputs {
                manifest.reports.extend(read_manifest(path)?);
            }
            let text = match format {
                Format::Csv => manifest.to_csv(),
                Format::Json | Format::Text => manifest.to_json() + "\n",
            };
            match out {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(())
        }
    }
}

fn config(args: SearchArgs) -> SearchConfig {
    SearchConfig {
        workers: args.workers,
        split_depth: args.split_depth,
        bound_pruning: args.prune,
        ..Default::default()
    }
}

fn graph(text: &str) -> Result<Graph, CliError> {
    Ok(build_graph(&parse_expr(text)?)?)
}

fn forbidden_spec(items: &[String], s: Option<usize>) -> Result<ForbiddenSpec, CliError> {
    let mut graphs = Vec::new();
    let mut bound = s;
    for item in items {
        match parse_forbidden(item)? {
            Forbidden::Graph(e) => graphs.push(build_graph(&e)?),
            Forbidden::Matching(k) => bound = Some(bound.map_or(k, |b| b.min(k))),
        }
    }
    if graphs.is_empty() && bound.is_none() {
        return Err(CliError::Usage("give at least one --forbid graph or a matching bound".into()));
    }
    Ok(ForbiddenSpec::new(graphs, bound)?)
}

fn count(text: &str, r: Option<usize>, rmax: Option<usize>) -> Result<(), CliError> {
    let e = parse_expr(text)?;
    println!("n={}", e.order()?);
    print_counts(&e, r, rmax)
}

/// `N(K_r)=...`, or the clique vector up to `rmax` (by default up to the
/// largest nonzero entry, at most `DEFAULT_RMAX`).
fn print_counts(e: &ConstructionExpr, r: Option<usize>, rmax: Option<usize>) -> Result<(), CliError> {
    if let Some(r) = r {
        let v = clique_vector_of_expr(e, r)?;
        println!("N(K_{r})={}", v.get(r));
        return Ok(());
    }
    let order = usize::try_from(e.order()?).unwrap_or(usize::MAX);
    let top = rmax.unwrap_or(order.min(DEFAULT_RMAX));
    let v = clique_vector_of_expr(e, top)?;
    let zero = BigUint::from(0u32);
    let last = if rmax.is_some() {
        top
    } else {
        (0..=top).rev().find(|&i| v.get(i) != zero).unwrap_or(0)
    };
    for i in 0..=last {
        println!("N(K_{i})={}", v.get(i));
    }
    if rmax.is_none() && last == top && top < order {
        eprintln!("note: clique vector cut at K_{top}; pass --rmax for more");
    }
    Ok(())
}

fn matching(text: &str) -> Result<(), CliError> {
    let g = graph(text)?;
    println!("nu={}", matching_number(&g));
    let m: Vec<String> = maximum_matching(&g).iter().map(|(u, v)| format!("{u}-{v}")).collect();
    println!("matching={}", m.join(" "));
    if g.order() <= TUTTE_BERGE_LIMIT {
        let w = tutte_berge_witness(&g)?;
        println!("barrier={:?}", w.barrier);
    } else {
        println!("barrier=skipped (more than {TUTTE_BERGE_LIMIT} vertices)");
    }
    Ok(())
}

fn free(text: &str, forbid: &ForbidArgs) -> Result<(), CliError> {
    let g = graph(text)?;
    let spec = forbidden_spec(&forbid.forbid, forbid.s)?;
    if is_admissible(&g, &spec) {
        println!("admissible");
        return Ok(());
    }
    for f in spec.subgraphs() {
        if contains(&g, f) {
            println!("not admissible: contains {}", encode_graph6(f));
        }
    }
    if let Some(s) = spec.matching_bound() {
        let nu = matching_number(&g);
        if nu > s {
            println!("not admissible: nu={nu} > s={s}");
        }
    }
    Ok(())
}

fn print_named(m: &NamedMaximum) {
    println!("value={}", m.value);
    println!("best={}", m.best);
    for (id, v) in &m.candidates {
        println!("{id}={v}");
    }
}

fn formula(f: FormulaCommand) -> Result<(), CliError> {
    match f {
        FormulaCommand::AlonFrankl { k, s, n } => println!("value={}", alon_frankl_value(k, s, n)?),
        FormulaCommand::Thm14 { f, p, q, s, r, n } => {
            let (p, q) = match (f, p, q) {
                (Some(f), None, None) => color_class_split(&graph(&f)?)?,
                (None, Some(p), Some(q)) => (p, q),
                _ => return Err(CliError::Usage("give either --f or both --p and --q".into())),
            };
            let b = bipartite_bounds_formal(p, q, s, r, n)?;
            println!("p={p}");
            println!("q={q}");
            println!("t={}", b.t);
            println!("lower={}", b.lower);
            println!("upper={}", b.upper);
            let threshold = &b.t + p - 1;
            if num_bigint::BigInt::from(n) <= threshold {
                println!("note=n <= t+p-1 = {threshold}, outside the range where the bounds are claimed");
            }
        }
        FormulaCommand::Thm15(NamedArgs { p, s, r, n }) => print_named(&theorem15_value(p, s, r, n)?),
        FormulaCommand::Thm16(NamedArgs { p, s, r, n }) => print_named(&theorem16_value(p, s, r, n)?),
        FormulaCommand::Q11 { p, k, r, n } => {
            let (left, right) = question11_values(p, k, r, n)?;
            println!("left={left}");
            println!("right={right}");
            if left >= right {
                println!("difference={}", &left - &right);
            } else {
                println!("difference=-{}", &right - &left);
            }
        }
    }
    Ok(())
}

/// `7`, `5..8` (inclusive) or `5,7,9`.
pub fn parse_ns(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("cannot read n list {text:?}; use 7, 5..8 or 5,7,9"));
    let text = text.trim();
    if let Some((a, b)) = text.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    text.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
}

fn need<T>(value: Option<T>, flag: &str, check: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("verify {check} needs {flag}")))
}

fn verify(check: CheckId, a: &VerifyArgs, cfg: &SearchConfig) -> Result<CheckReport, CliError> {
    let name = match check {
        CheckId::AlonFrankl => "alon-frankl",
        CheckId::Thm12 => "thm1.2",
        CheckId::Q11 => "q1.1",
        CheckId::Thm15 => "thm1.5",
        CheckId::Thm16 => "thm1.6",
        CheckId::Thm14 => "thm1.4",
        CheckId::Lemmas => "lemmas",
        CheckId::Prop32 => "prop3.2",
        CheckId::Inspect => "inspect",
    };
    let ns = || parse_ns(need(a.n.as_deref(), "--n", name)?);
    let f = || graph(need(a.f.as_deref(), "--f", name)?);
    let k = || need(a.k, "--k", name);
    let p = || need(a.p, "--p", name);
    let s = || need(a.s, "--s", name);
    let r = || need(a.r, "--r", name);
    Ok(match check {
        CheckId::AlonFrankl => check_alon_frankl(k()?, s()?, &ns()?, cfg)?,
        CheckId::Thm12 => check_theorem_1_2(&f()?, r()?, s()?, &ns()?, cfg)?,
        CheckId::Q11 => check_question_1_1_counterexample(p()?, k()?, r()?, &ns()?)?,
        CheckId::Thm15 => check_theorem_1_5(p()?, s()?, r()?, &ns()?, cfg)?,
        CheckId::Thm16 => check_theorem_1_6(p()?, s()?, r()?, &ns()?, cfg)?,
        CheckId::Thm14 => check_theorem_1_4_bounds(&f()?, s()?, r()?, &ns()?, cfg)?,
        CheckId::Lemmas => {
            let names: Vec<&str> = if a.families.is_empty() {
                FAMILIES.to_vec()
            } else {
                a.families.iter().map(String::as_str).collect()
            };
            if let Some(unknown) = names.iter().find(|x| !FAMILIES.contains(x)) {
                return Err(CliError::Usage(format!(
                    "unknown family {unknown}; known: {}",
                    FAMILIES.join(", ")
                )));
            }
            check_lemma_families(&names, &LemmaLimits::default())?
        }
        CheckId::Prop32 => {
            let family = a.forbid.iter().map(|x| graph(x)).collect::<Result<Vec<_>, _>>()?;
            check_prop_3_2(&family, r()?, &ns()?, cfg)?
        }
        CheckId::Inspect => {
            let ns = ns()?;
            let [n] = ns[..] else {
                return Err(CliError::Usage("verify inspect takes a single --n".into()));
            };
            let spec = forbidden_spec(&a.forbid, a.s)?;
            let s = spec
                .matching_bound()
                .ok_or_else(|| CliError::Usage("verify inspect needs a matching bound (--s or M<k>)".into()))?;
            let (rec, _) = Cache::from_env().lookup_or_search(n, r()?, &spec, cfg)?;
            inspect_structure(&rec, s, a.p)?
        }
    })
}

fn render(rep: &CheckReport, format: Format) -> String {
    match format {
        Format::Json => rep.comparable_json() + "\n",
        Format::Csv => rep.to_csv(),
        Format::Text => {
            let params: Vec<String> = rep.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let mut out = format!("check {} ({})\n", rep.check_id, params.join(", "));
            for row in &rep.rows {
                out += &format!("n={} expected={} observed={} {}\n", row.n, row.expected, row.observed, row.status);
            }
            for w in &rep.witnesses {
                out += &format!("witness {w}\n");
            }
            for note in &rep.notes {
                out += &format!("note {note}\n");
            }
            if let Some(from) = &rep.agree_from {
                out += &format!("agree_from={from}\n");
            }
            out += &format!("status {}\n", rep.status);
            out
        }
    }
}

fn append_line(path: &Path, line: &str) -> Result<(), CliError> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    file.lock()?;
    writeln!(file, "{line}")?;
    Ok(())
}

fn read_manifest(path: &Path) -> Result<Vec<CheckReport>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let text = text.trim();
    if text.starts_with('{') && text.contains("\"reports\"") {
        // an earlier aggregated report
        let m: RunManifest = serde_json::from_str(text)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        return Ok(m.reports);
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            CheckReport::from_json(l).map_err(|e| CliError::Parse(format!("{}:{}: {e}", path.display(), i + 1)))
        })
        .collect()
}
