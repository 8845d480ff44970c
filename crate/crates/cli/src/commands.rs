use std::fs::File;
use std::io::BufWriter;
use std::time::Instant;

use cayrev::deciders::{decide_fr, decide_pgfr};
use cayrev::families::{self, CorpusCase, FamilyInstance, ManifestEntry};
use cayrev::graphs::CayleyGraph;
use cayrev::groups::GroupElement;
use cayrev::simulator::{pair_profile, search_times, write_scan_csv, SearchConfig};
use serde_json::{json, Value};

use crate::input::{designated_pair, load_graph, parse_pair, read_source, GraphSpecDocument, LoadedGraph};
use crate::report;
use crate::{CliError, CorpusArgs, DecideArgs, FamilyCommand, SimulateArgs};

fn semantic(e: cayrev::Error) -> CliError {
    CliError::Semantic(e.to_string())
}

fn load(path: &str) -> Result<LoadedGraph, CliError> {
    let loaded = load_graph(path)?;
    for w in &loaded.warnings {
        eprintln!("warning: {w}");
    }
    Ok(loaded)
}

fn pick_pair(loaded: &LoadedGraph, pair: Option<&str>) -> Result<(GroupElement, GroupElement), CliError> {
    match pair {
        Some(text) => parse_pair(loaded.graph.group(), text),
        None => designated_pair(loaded)?
            .ok_or_else(|| CliError::Semantic("no --pair given and the graph spec has no designated pair".into())),
    }
}

fn verdict_report(loaded: &LoadedGraph, a: &GroupElement, b: &GroupElement, timing: bool) -> Result<Value, CliError> {
    let g = &loaded.graph;
    let start = Instant::now();
    let pgfr = decide_pgfr(g, a, b).map_err(semantic)?;
    let fr = decide_fr(g, a, b).map_err(semantic)?;
    let mut out = json!({
        "graph": report::graph_echo(loaded.doc.name.as_deref(), g),
        "pair": [report::element(a), report::element(b)],
        "pgfr": report::pgfr(&pgfr),
        "fr": report::fr(&fr),
    });
    if timing {
        out["timing_ms"] = report::float(start.elapsed().as_secs_f64() * 1e3);
    }
    eprintln!(
        "{:?} -> {:?}: PGFR {}, FR {}",
        a.residues(),
        b.residues(),
        report::short_pgfr(&pgfr),
        report::short_fr(&fr)
    );
    Ok(out)
}

pub fn decide(args: &DecideArgs) -> Result<String, CliError> {
    let loaded = load(&args.graph)?;
    if args.all_pairs {
        let group = loaded.graph.group();
        let a = group.identity();
        let reports = group
            .elements()
            .skip(1)
            .map(|b| verdict_report(&loaded, &a, &b, args.timing))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(report::render(&Value::Array(reports)));
    }
    let (a, b) = pick_pair(&loaded, args.pair.as_deref())?;
    Ok(report::render(&verdict_report(&loaded, &a, &b, args.timing)?))
}

pub fn simulate(args: &SimulateArgs) -> Result<String, CliError> {
    let loaded = load(&args.graph)?;
    let (a, b) = pick_pair(&loaded, args.pair.as_deref())?;
    let g = &loaded.graph;
    if let Some(t) = args.t {
        if !t.is_finite() {
            return Err(CliError::Semantic(format!("time must be finite, got {t}")));
        }
        let p = pair_profile(g, &a, &b, t).map_err(semantic)?;
        eprintln!(
            "t = {t}: |alpha| = {:.6}, |beta| = {:.6}, leakage = {:.3e}",
            p.alpha.norm(),
            p.beta.norm(),
            p.leakage
        );
        return Ok(report::render(&report::profile(&p)));
    }
    let cfg = SearchConfig {
        t_max: args.t_max,
        grid_points: args.grid,
        refine_top: args.refine_top,
        refine_iters: args.refine_iters,
        beta_floor: args.beta_floor,
    };
    let found = search_times(g, &a, &b, &cfg).map_err(semantic)?;
    if let Some(path) = &args.csv {
        let file = File::create(path).map_err(|e| CliError::Output(format!("{path}: {e}")))?;
        write_scan_csv(&found, BufWriter::new(file)).map_err(|e| CliError::Output(e.to_string()))?;
    }
    let status = match found.first() {
        Some(best) if best.leakage < args.leakage_tol => "found",
        _ => "not found within budget",
    };
    eprintln!("search: {status}; {} candidate(s)", found.len());
    let out = json!({
        "config": {
            "t_max": report::float(cfg.t_max),
            "grid_points": cfg.grid_points,
            "refine_top": cfg.refine_top,
            "refine_iters": cfg.refine_iters,
            "beta_floor": report::float(cfg.beta_floor),
            "leakage_tol": report::float(args.leakage_tol),
        },
        "pair": [report::element(&a), report::element(&b)],
        "status": status,
        "candidates": found.iter().map(report::profile).collect::<Vec<_>>(),
    });
    Ok(report::render(&out))
}

fn spec_document(name: String, inst: FamilyInstance) -> GraphSpecDocument {
    let widen = |x: &GroupElement| x.residues().iter().map(|&v| v as i64).collect::<Vec<_>>();
    GraphSpecDocument {
        orders: inst.graph.group().orders().to_vec(),
        connection: inst.graph.connection().iter().map(widen).collect(),
        complement: false,
        name: Some(name),
        pair: inst.pair.as_ref().map(|(a, b)| [widen(a), widen(b)]),
        hypothesis: inst.hypothesis,
    }
}

fn complemented(inst: FamilyInstance, yes: bool) -> FamilyInstance {
    if yes {
        FamilyInstance {
            graph: inst.graph.complement(),
            ..inst
        }
    } else {
        inst
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn plain(g: cayrev::Result<CayleyGraph>) -> cayrev::Result<FamilyInstance> {
    g.map(|graph| {
        let group = graph.group().clone();
        let n = group.order() as u64;
        let pair = n
            .is_multiple_of(2)
            .then(|| (group.identity(), group.element(&[n / 2]).expect("n/2 < n")));
        FamilyInstance {
            graph,
            pair,
            hypothesis: None,
        }
    })
}

pub fn family(cmd: &FamilyCommand) -> Result<String, CliError> {
    use FamilyCommand::*;
    let (name, inst) = match cmd {
        Cycle { n } => (format!("C{n}"), plain(families::cycle(*n))),
        ComplementCycle { n } => (format!("complement-C{n}"), plain(families::complement_cycle(*n))),
        Complete { n } => (format!("K{n}"), plain(families::complete(*n))),
        PowerCirculant { p, s, ks, complement } => (
            format!(
                "{}power-circulant({p},{s},[{}])",
                if *complement { "complement-" } else { "" },
                join(ks)
            ),
            families::power_circulant(*p, *s, ks).map(|i| complemented(i, *complement)),
        ),
        JumpCirculant { p, s, ys, complement } => (
            format!(
                "{}jump-circulant({p},{s},[{}])",
                if *complement { "complement-" } else { "" },
                join(ys)
            ),
            families::jump_circulant(*p, *s, ys).map(|i| complemented(i, *complement)),
        ),
        SixJump { p, s } => (format!("six-jump({p},{s})"), families::six_jump_circulant(*p, *s)),
        AxisComplement { p, s, h, ys } => (
            format!("axis-complement({p},{s},{h},[{}])", join(ys)),
            families::axis_complement(*p, *s, *h, ys),
        ),
        ElementaryComplement { p, s } => (
            format!("elementary-complement({p},{s})"),
            families::elementary_complement(*p, *s),
        ),
        CubeComplement { m } => (format!("cube-complement({m})"), families::cube_complement(*m)),
    };
    let inst = inst.map_err(semantic)?;
    if inst.hypothesis == Some(false) {
        eprintln!("note: the family's gcd hypothesis does not hold for these parameters");
    }
    let doc = spec_document(name, inst);
    Ok(report::render(
        &serde_json::to_value(&doc).expect("documents are serialisable"),
    ))
}

fn load_cases(args: &CorpusArgs) -> Result<Vec<CorpusCase>, CliError> {
    let cases = match &args.from {
        None => families::corpus(),
        Some(path) => {
            let entries: Vec<ManifestEntry> =
                serde_json::from_str(&read_source(path)?).map_err(|e| CliError::Parse(format!("manifest: {e}")))?;
            entries
                .iter()
                .map(CorpusCase::from_manifest)
                .collect::<Result<Vec<_>, _>>()
                .map_err(semantic)?
        }
    };
    Ok(families::filter_cases(cases, args.filter.as_deref()))
}

pub fn corpus(args: &CorpusArgs) -> Result<String, CliError> {
    let cases = load_cases(args)?;
    if args.manifest {
        let entries: Vec<ManifestEntry> = cases.iter().map(CorpusCase::manifest_entry).collect();
        return Ok(report::render(
            &serde_json::to_value(entries).expect("manifest is serialisable"),
        ));
    }
    let outcomes = families::evaluate_corpus(&cases);
    let mut rows = Vec::with_capacity(cases.len());
    let mut mismatches = 0;
    eprintln!(
        "{:<42} {:>5}  {:<10} {:<10} {:<10} {:<10} result",
        "case", "n", "pgfr exp", "pgfr got", "fr exp", "fr got"
    );
    for (case, outcome) in cases.iter().zip(outcomes) {
        let outcome = outcome.map_err(semantic)?;
        let result = if !case.is_labeled() {
            "info"
        } else if outcome.passed() {
            "pass"
        } else {
            mismatches += 1;
            "FAIL"
        };
        let yn = |b: bool| if b { "yes" } else { "no" };
        eprintln!(
            "{:<42} {:>5}  {:<10} {:<10} {:<10} {:<10} {result}",
            case.name,
            case.graph.order(),
            case.expect_pgfr.to_string(),
            yn(outcome.pgfr.is_yes()),
            case.expect_fr.to_string(),
            yn(outcome.fr.is_yes()),
        );
        rows.push(json!({
            "name": case.name,
            "category": case.category,
            "n": case.graph.order(),
            "expect_pgfr": case.expect_pgfr,
            "expect_fr": case.expect_fr,
            "pgfr": report::pgfr(&outcome.pgfr),
            "fr": report::fr(&outcome.fr),
            "result": result,
        }));
    }
    let labeled = cases.iter().filter(|c| c.is_labeled()).count();
    eprintln!(
        "{} labelled case(s), {mismatches} mismatch(es), {} informational",
        labeled,
        cases.len() - labeled
    );
    print!("{}", report::render(&Value::Array(rows)));
    if mismatches > 0 {
        Err(CliError::Mismatch(mismatches))
    } else {
        Ok(String::new())
    }
}
