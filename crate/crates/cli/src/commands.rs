//! Subcommand implementations.

use std::process::ExitCode;

use serde::Serialize;

use zeroforcing::chains::enumerate_chronological_lists;
use zeroforcing::conjecture::{conjecture_sweep, CellStatus};
use zeroforcing::expected::expected_invariants;
use zeroforcing::family::FamilySpec;
use zeroforcing::forcing::{render_trace_grid, render_trace_list, run_forcing, TraceReport};
use zeroforcing::report::{build_report, InvariantReport};
use zeroforcing::solver::{solve, SolverConfig};

use crate::parse::{load_graph, parse_vertex_set, RangeArg};
use crate::{CliError, CliResult, Format, GraphSource};

pub fn compute(
    source: &GraphSource,
    cfg: &SolverConfig,
    format: Format,
    timing: bool,
) -> CliResult {
    let (g, family) = load_graph(source)?;
    let report = build_report(&g, family.as_ref(), cfg, timing)?;
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => {
            println!("{}", InvariantReport::CSV_HEADER);
            println!("{}", report.to_csv_row());
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Debug, Serialize)]
struct VerifyRow {
    family: String,
    params: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    z: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_z: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_i: Option<String>,
    status: &'static str,
}

fn verify_tuples(
    family: &str,
    s: Option<&RangeArg>,
    t: Option<&RangeArg>,
    params: &[usize],
) -> Result<Vec<Vec<usize>>, CliError> {
    if !params.is_empty() {
        if s.is_some() || t.is_some() {
            return Err(CliError::Usage(
                "--params cannot be combined with --s/--t".to_string(),
            ));
        }
        return Ok(vec![params.to_vec()]);
    }
    let s = s.ok_or_else(|| {
        CliError::Usage(format!(
            "verify --family {family} needs --s (and --t for two-parameter families) or --params"
        ))
    })?;
    match t {
        Some(t) => Ok(s
            .iter()
            .flat_map(|a| t.iter().map(move |b| vec![a, b]))
            .collect()),
        None => Ok(s.iter().map(|a| vec![a]).collect()),
    }
}

pub fn verify(
    family: &str,
    s: Option<&RangeArg>,
    t: Option<&RangeArg>,
    params: &[usize],
    cfg: &SolverConfig,
    format: Format,
) -> CliResult {
    let mut rows = Vec::new();
    let mut mismatch = false;
    for tuple in verify_tuples(family, s, t, params)? {
        let spec = FamilySpec::parse(family, &tuple).map_err(|e| CliError::Usage(e.to_string()))?;
        let mut row = VerifyRow {
            family: family.to_string(),
            params: tuple,
            n: None,
            z: None,
            expected_z: None,
            i: None,
            expected_i: None,
            status: "no_known_value",
        };
        if let Some(expected) = expected_invariants(&spec) {
            let g = spec.build().map_err(|e| CliError::Usage(e.to_string()))?;
            let sol = solve(&g, cfg)?;
            let ok = sol.z == expected.z && expected.iter.admits(sol.i);
            row.n = Some(g.vertex_count());
            row.z = Some(sol.z);
            row.expected_z = Some(expected.z);
            row.i = Some(sol.i);
            row.expected_i = Some(expected.iter.to_string());
            row.status = if ok { "match" } else { "mismatch" };
            mismatch |= !ok;
        }
        rows.push(row);
    }
    match format {
        Format::Text => {
            println!(
                "{:<20} {:>10} {:>5} {:>5} {:>10} {:>5} {:>10}  status",
                "family", "params", "n", "z", "expected_z", "i", "expected_i"
            );
            for r in &rows {
                let params = r
                    .params
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                println!(
                    "{:<20} {:>10} {:>5} {:>5} {:>10} {:>5} {:>10}  {}",
                    r.family,
                    params,
                    opt(&r.n),
                    opt(&r.z),
                    opt(&r.expected_z),
                    opt(&r.i),
                    r.expected_i.clone().unwrap_or_default(),
                    r.status
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows).expect("rows")),
        Format::Csv => {
            println!("family,params,n,z,expected_z,i,expected_i,status");
            for r in &rows {
                let params = r
                    .params
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                println!(
                    "{},{},{},{},{},{},{},{}",
                    r.family,
                    params,
                    opt(&r.n),
                    opt(&r.z),
                    opt(&r.expected_z),
                    opt(&r.i),
                    r.expected_i.clone().unwrap_or_default(),
                    r.status
                );
            }
        }
    }
    Ok(if mismatch {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(String::new, T::to_string)
}

pub fn conjecture(max: usize, cfg: &SolverConfig, format: Format) -> CliResult {
    if max < 3 {
        return Err(CliError::Usage("--max must be at least 3".to_string()));
    }
    let cells = conjecture_sweep(max, max, cfg);
    match format {
        Format::Text => {
            println!(
                "{:>3} {:>3} {:>4} {:>4} {:>4} {:>13}  status",
                "s", "t", "n", "z", "i", "conjectured_z"
            );
            for c in &cells {
                println!(
                    "{:>3} {:>3} {:>4} {:>4} {:>4} {:>13}  {}{}",
                    c.s,
                    c.t,
                    c.n,
                    opt(&c.z),
                    opt(&c.i),
                    c.conjectured_z,
                    status_str(c.status),
                    c.note
                        .as_ref()
                        .map_or_else(String::new, |n| format!(" ({n})")),
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&cells).expect("cells")),
        Format::Csv => {
            println!("s,t,n,z,i,conjectured_z,upper_bound,status");
            for c in &cells {
                println!(
                    "{},{},{},{},{},{},{},{}",
                    c.s,
                    c.t,
                    c.n,
                    opt(&c.z),
                    opt(&c.i),
                    c.conjectured_z,
                    c.z_upper_bound,
                    status_str(c.status)
                );
            }
        }
    }
    let refuted = cells.iter().any(|c| c.status == CellStatus::Refuted);
    Ok(if refuted {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn status_str(s: CellStatus) -> &'static str {
    match s {
        CellStatus::Confirmed => "confirmed",
        CellStatus::Refuted => "refuted",
        CellStatus::Skipped => "skipped",
    }
}

#[derive(Debug, Serialize)]
struct TraceOutput {
    #[serde(flatten)]
    report: TraceReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    forces: Option<Vec<(usize, usize)>>,
}

pub fn trace(
    source: &GraphSource,
    set: &str,
    with_forces: bool,
    _cfg: &SolverConfig,
    format: Format,
) -> CliResult {
    let (g, family) = load_graph(source)?;
    let z = parse_vertex_set(set, &g)?;
    let trace = run_forcing(&g, &z);
    let forces = if with_forces && trace.success() {
        // The first list in enumeration order is the canonical one.
        let lists = enumerate_chronological_lists(&g, &z, 1)?;
        lists.lists.first().map(|l| {
            l.forces()
                .iter()
                .map(|f| (f.source, f.target))
                .collect::<Vec<_>>()
        })
    } else {
        None
    };
    match format {
        Format::Text => {
            println!("initial = {z}");
            println!("success = {}", trace.success());
            println!("iterations = {}", trace.iterations());
            match family.as_ref().and_then(FamilySpec::grid_dims) {
                Some((s, t)) => print!("{}", render_trace_grid(&trace, s, t)),
                None => print!("{}", render_trace_list(&g, &trace)),
            }
            for (i, d) in trace.derived().iter().enumerate() {
                println!("derived[{}] = {d}", i + 1);
            }
            if !trace.success() {
                println!("white remainder = {}", trace.remainder());
            }
            if let Some(forces) = forces {
                let rendered: Vec<String> =
                    forces.iter().map(|(u, w)| format!("{u}->{w}")).collect();
                println!("forces: {}", rendered.join(", "));
            }
        }
        Format::Json => {
            let out = TraceOutput {
                report: TraceReport::new(&g, &trace),
                forces,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("trace"));
        }
        Format::Csv => {
            println!("vertex,label,first_black");
            for v in 0..g.vertex_count() {
                println!(
                    "{},{},{}",
                    v,
                    g.label(v).unwrap_or(""),
                    trace
                        .first_black_round(v)
                        .map_or_else(String::new, |m| m.to_string())
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
