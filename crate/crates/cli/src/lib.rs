//! Library side of the `torsion-count` binary: argument types, the verb
//! implementations and their output documents.

pub mod args;
pub mod report;
pub mod text;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use torsion_core::cyclic::{classify_family_member, cyclicizer, cyclicizer_core, prop46_check};
use torsion_core::families::{
    family_count, family_descriptors, materialize_families, order_table, render_generators,
    DEFAULT_MEMORY_BUDGET,
};
use torsion_core::formulas::{count_reports, Verdict};
use torsion_core::gap::{gap_script, ScriptMode};
use torsion_core::lattice::OracleConfig;
use torsion_core::sweep::{run_sweep, SweepConfig, SweepReport};
use torsion_core::{Error, Execution, GroupSpec};

use args::{Cli, Command, Format, GeneralArgs, GroupArgs, Mode, OutputArgs};
use report::{
    CountOutput, CyclicizerOutput, EnumerateOutput, EnumerateRow, GapscriptOutput, Output,
    TableOutput,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_HYPOTHESIS: u8 = 3;
pub const EXIT_RESOURCE: u8 = 4;

/// Exit status for a failed run.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::HypothesisViolation { .. }) => EXIT_HYPOTHESIS,
        Some(e) if e.is_resource() => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

/// Runs one parsed command line and returns the exit status for a
/// successful run: `EXIT_OK`, or `EXIT_MISMATCH` when a formula disagrees
/// with the oracle.
pub fn run(cli: &Cli) -> Result<u8> {
    match cli.output.jobs {
        None => execute(cli),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.into())
            .build()
            .context("building the worker pool")?
            .install(|| execute(cli)),
    }
}

fn oracle_config(out: &OutputArgs) -> OracleConfig {
    let cfg = OracleConfig::from_env().with_execution(Execution::Parallel);
    match out.cap {
        Some(cap) => cfg.with_cap(cap),
        None => cfg,
    }
}

fn closed_form_spec(g: GroupArgs) -> Result<GroupSpec> {
    let spec = GroupSpec::new(g.n, g.p)?;
    spec.require_closed_form()?;
    Ok(spec)
}

fn execute(cli: &Cli) -> Result<u8> {
    let out = &cli.output;
    let cfg = oracle_config(out);
    let (doc, status) = match &cli.command {
        Command::Count(g) => {
            let o = count(*g, &cfg)?;
            let mismatch = [&o.subgroups, &o.cyclic]
                .iter()
                .any(|r| r.verdict == Verdict::Mismatch);
            (
                Output::Count(o),
                if mismatch { EXIT_MISMATCH } else { EXIT_OK },
            )
        }
        Command::Enumerate { group, materialize } => {
            (Output::Enumerate(enumerate(*group, *materialize)?), EXIT_OK)
        }
        Command::Table(g) => (Output::Table(table(*g)?), EXIT_OK),
        Command::Verify { n, p } => {
            let r = verify(&n.0, &p.0, cfg)?;
            let status = if r.passed { EXIT_OK } else { EXIT_MISMATCH };
            (Output::Verify(r), status)
        }
        Command::Gapscript { group, mode } => {
            (Output::Gapscript(gapscript(*group, *mode)?), EXIT_OK)
        }
        Command::Prop46(g) => {
            let spec = GroupSpec::new(g.n, g.m)?;
            (Output::Prop46(prop46_check(&spec, &cfg)?), EXIT_OK)
        }
        Command::Cyclicizer {
            group,
            a_exp,
            b,
            c_exp,
        } => (
            Output::Cyclicizer(cyclicizer_cmd(*group, *a_exp, *b, *c_exp, &cfg)?),
            EXIT_OK,
        ),
    };
    emit(&doc, out)?;
    Ok(status)
}

pub fn count(g: GroupArgs, cfg: &OracleConfig) -> Result<CountOutput> {
    let spec = closed_form_spec(g)?;
    let [subgroups, cyclic] = count_reports(g.n, g.p, cfg)?;
    Ok(CountOutput {
        n: g.n,
        p: g.p,
        group_order: spec.order(),
        cap: cfg.cap,
        subgroups,
        cyclic,
        families: family_count(&spec)?,
    })
}

pub fn enumerate(g: GroupArgs, materialize: bool) -> Result<EnumerateOutput> {
    let spec = GroupSpec::new(g.n, g.p)?;
    if g.p > 1 {
        spec.require_closed_form()?;
    }
    let descriptors = family_descriptors(&spec)?;
    let closed = if materialize {
        let fams = materialize_families(&spec, Execution::Parallel, DEFAULT_MEMORY_BUDGET)?;
        fams.into_iter().map(|f| Some(f.subgroup.order())).collect()
    } else {
        vec![None; descriptors.len()]
    };
    let subgroups = descriptors
        .iter()
        .zip(closed)
        .map(|(d, materialized_order)| {
            let t = classify_family_member(&spec, d);
            EnumerateRow {
                family: d.family,
                i: d.i,
                j: d.j,
                generators: render_generators(&d.generators(&spec)),
                order: d.expected_order,
                cyclic: t.is_cyclic,
                cyclic_type: t.label,
                materialized_order,
            }
        })
        .collect();
    Ok(EnumerateOutput {
        n: g.n,
        p: g.p,
        group_order: spec.order(),
        families: family_count(&spec)?,
        materialized: materialize,
        subgroups,
    })
}

pub fn table(g: GroupArgs) -> Result<TableOutput> {
    closed_form_spec(g)?;
    let (first, second) = order_table(g.n, g.p)?;
    Ok(TableOutput {
        n: g.n,
        p: g.p,
        total: first.total() + second.total(),
        parts: vec![first, second],
    })
}

pub fn verify(ns: &[u64], ps: &[u64], oracle: OracleConfig) -> Result<SweepReport> {
    Ok(run_sweep(&SweepConfig {
        ns: ns.to_vec(),
        ps: ps.to_vec(),
        oracle,
    })?)
}

pub fn gapscript(g: GroupArgs, mode: Mode) -> Result<GapscriptOutput> {
    let m = match mode {
        Mode::Subgroups => ScriptMode::Subgroups,
        Mode::Cyclic => ScriptMode::Cyclic,
    };
    Ok(GapscriptOutput {
        n: g.n,
        p: g.p,
        mode,
        script: gap_script(g.n, g.p, m)?,
    })
}

fn cyclicizer_cmd(
    g: GeneralArgs,
    a_exp: Option<u64>,
    b: bool,
    c_exp: Option<u64>,
    cfg: &OracleConfig,
) -> Result<CyclicizerOutput> {
    let spec = GroupSpec::new(g.n, g.m)?;
    let set = if a_exp.is_none() && !b && c_exp.is_none() {
        cyclicizer_core(&spec, cfg)?
    } else {
        let x = spec.element(a_exp.unwrap_or(0), b, c_exp.unwrap_or(0))?;
        cyclicizer(&spec, &x, cfg)?
    };
    Ok(CyclicizerOutput {
        n: g.n,
        m: g.m,
        group_order: spec.order(),
        cyclicizer: set.summary(&spec),
    })
}

fn csv_string<F>(header: &[&str], fill: F) -> Result<String>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)?;
    fill(&mut w)?;
    Ok(String::from_utf8(w.into_inner().context("flushing csv")?)?)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn to_csv(doc: &Output) -> Result<String> {
    match doc {
        Output::Count(o) => csv_string(
            &["n", "p", "quantity", "closed_form", "oracle", "verdict"],
            |w| {
                for r in [&o.subgroups, &o.cyclic] {
                    w.serialize((r.n, r.p, r.quantity, r.closed_form, r.oracle, r.verdict))?;
                }
                Ok(())
            },
        ),
        Output::Enumerate(o) => csv_string(
            &[
                "family",
                "i",
                "j",
                "generators",
                "order",
                "cyclic",
                "cyclic_type",
                "materialized_order",
            ],
            |w| {
                for r in &o.subgroups {
                    w.write_record([
                        r.family.to_string(),
                        r.i.to_string(),
                        opt(r.j),
                        r.generators.clone(),
                        r.order.to_string(),
                        r.cyclic.to_string(),
                        opt(r.cyclic_type.clone()),
                        opt(r.materialized_order),
                    ])?;
                }
                Ok(())
            },
        ),
        Output::Verify(r) => csv_string(
            &["n", "p", "quantity", "closed_form", "oracle", "verdict"],
            |w| {
                for pt in &r.points {
                    for x in &pt.reports {
                        w.serialize((x.n, x.p, x.quantity, x.closed_form, x.oracle, x.verdict))?;
                    }
                }
                Ok(())
            },
        ),
        Output::Table(t) => Ok(t
            .parts
            .iter()
            .map(|p| p.to_csv())
            .collect::<Vec<_>>()
            .join("\n")),
        Output::Gapscript(_) | Output::Prop46(_) | Output::Cyclicizer(_) => {
            bail!("csv output is not available for this command; use text or json")
        }
    }
}

fn to_text(doc: &Output) -> String {
    match doc {
        Output::Count(o) => text::count(o),
        Output::Enumerate(o) => text::enumerate(o),
        Output::Table(o) => text::table(o),
        Output::Verify(r) => text::verify(r),
        Output::Gapscript(g) => g.script.clone(),
        Output::Prop46(c) => text::prop46(c),
        Output::Cyclicizer(o) => text::cyclicizer(o),
    }
}

/// `t.csv` becomes `t.part1.csv` and `t.part2.csv`.
pub fn part_paths(out: &Path) -> [PathBuf; 2] {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let ext = out
        .extension()
        .map(|e| e.to_string_lossy().into_owned())
        .unwrap_or_else(|| "csv".into());
    [1, 2].map(|k| out.with_file_name(format!("{stem}.part{k}.{ext}")))
}

fn emit(doc: &Output, out: &OutputArgs) -> Result<()> {
    if let (Format::Csv, Output::Table(t), Some(path)) = (out.format, doc, &out.out) {
        for (part, file) in t.parts.iter().zip(part_paths(path)) {
            fs::write(&file, part.to_csv())
                .with_context(|| format!("writing {}", file.display()))?;
        }
        return Ok(());
    }
    let body = match out.format {
        Format::Text => to_text(doc),
        Format::Json => serde_json::to_string_pretty(doc)? + "\n",
        Format::Csv => to_csv(doc)?,
    };
    match &out.out {
        Some(path) => {
            fs::write(path, body).with_context(|| format!("writing {}", path.display()))?
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            let written = stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush());
            match written {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                other => other?,
            }
        }
    }
    Ok(())
}
