//! Command-line surface. Exit codes: 0 ok, 1 usage, 2 validation failure,
//! 3 cross-check disagreement.

use crate::c2c::{is_closed_2cell, separating_features, Verdict};
use crate::conditions::analyze;
use crate::corner::corner_table;
use crate::duality::{partial_dual, partial_petrie, ColourPerm, Jewel, TwistSpec};
use crate::gem::Gem;
use crate::io::{
    dot_gem, dot_jewel, dot_separation, gem_to_json, parse_gem_json, parse_rotation,
    rotation_to_text, NameTable,
};
use crate::rotation::{gem_from_rotation, rotation_from_gem};
use crate::search::{find_c2c_duals_rows, SearchMode, SearchOptions};
use crate::separation::separation_graph;
use crate::subset::EdgeSubset;
use crate::trace::trace_partial_dual;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fmt;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::io::Read;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Parser)]
#[command(
    name = "gembed",
    about = "Graph embeddings as gems: partial duals, Petrie duals, closed 2-cell analysis",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Rot,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Input file; '-' reads stdin (requires --format)
    input: PathBuf,
    /// Input format; inferred from the extension when omitted
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct SubsetArgs {
    /// Comma-separated edge names (or ids) to dualize
    #[arg(long, value_delimiter = ',')]
    edges: Vec<String>,
    /// Edge subset as a bitmask (decimal or 0x-prefixed)
    #[arg(long, conflicts_with = "edges")]
    mask: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the gem axioms and report every violation
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// V/E/F counts, Euler characteristic, orientability, genus
    Summary {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Partial geometric dual over an edge subset
    Dual {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        subset: SubsetArgs,
        #[arg(long)]
        json: bool,
        /// Write the resulting gem JSON here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partial Petrie dual over an edge subset
    Petrie {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        subset: SubsetArgs,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply per-edge colour permutations on the jewel
    Twist {
        #[command(flatten)]
        input: InputArgs,
        /// Spec like "a:rb,b:bg"; unlisted edges stay put. Permutations:
        /// id, rb, rg, bg, rbg, rgb
        #[arg(long)]
        spec: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Trace the vertices and faces of a partial dual in place
    Trace {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        subset: SubsetArgs,
    },
    /// Closed 2-cell verdict
    CheckC2c {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Separating vertex/face pairs, loops and coloops
    Obstructions {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the local, midrange and global conditions for a subset
    Conditions {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        subset: SubsetArgs,
        #[arg(long)]
        json: bool,
        /// Also print the separation graph Petrie walks
        #[arg(long)]
        explain: bool,
    },
    /// Exhaustive search for closed 2-cell partial duals
    Search {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "cross-check")]
        mode: SearchModeArg,
        /// Maximum |E| the search will accept
        #[arg(long)]
        cap: Option<usize>,
        /// Evaluate subsets even when an obstruction blocks them all
        #[arg(long)]
        audit: bool,
        /// Deduplicate closed 2-cell duals up to anchored isomorphism
        #[arg(long)]
        dedup: bool,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        /// Write the report JSON here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write per-subset rows as CSV here
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Convert between the rotation text format and gem JSON
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        to: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a gem, its jewel, or a separation graph as DOT
    ExportDot {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "gem")]
        what: DotTarget,
        #[command(flatten)]
        subset: SubsetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SearchModeArg {
    Direct,
    Conditions,
    CrossCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DotTarget {
    Gem,
    Jewel,
    Lambda,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn validation(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let mut out = String::new();
    let code = match dispatch(cli.command, &mut out) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {f}");
            f.code
        }
    };
    // emit everything once; a consumer hanging up is not our error
    let _ = io::Write::write_all(&mut io::stdout(), out.as_bytes());
    code
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("reading {}: {e}", path.display())))
    }
}

fn load(input: &InputArgs) -> Result<(Gem, NameTable), Failure> {
    let format = match input.format {
        Some(f) => f,
        None => match input.input.extension().and_then(|e| e.to_str()) {
            Some("rot") => Format::Rot,
            Some("json") => Format::Json,
            _ => {
                return Err(Failure::usage(
                    "cannot infer input format; pass --format rot|json",
                ))
            }
        },
    };
    let text = read_input(&input.input)?;
    match format {
        Format::Rot => {
            let (rot, names) =
                parse_rotation(&text).map_err(|e| Failure::validation(e.to_string()))?;
            let gem = gem_from_rotation(&rot).map_err(|e| Failure::validation(e.to_string()))?;
            Ok((gem, names))
        }
        Format::Json => {
            let (gem, names) =
                parse_gem_json(&text).map_err(|e| Failure::validation(e.to_string()))?;
            Ok((gem, names))
        }
    }
}

fn resolve_subset(
    subset: &SubsetArgs,
    names: &NameTable,
    edge_count: usize,
) -> Result<EdgeSubset, Failure> {
    if let Some(mask_text) = &subset.mask {
        let mask = if let Some(hex) = mask_text.strip_prefix("0x") {
            u64::from_str_radix(hex, 16)
        } else {
            mask_text.parse()
        }
        .map_err(|_| Failure::usage(format!("bad mask '{mask_text}'")))?;
        return EdgeSubset::from_mask(mask, edge_count)
            .map_err(|e| Failure::usage(e.to_string()));
    }
    let mut ids = Vec::new();
    for name in &subset.edges {
        let name = name.trim();
        if name.is_empty() {
            continue;
        }
        let id = names
            .edge_id(name)
            .or_else(|| name.parse::<usize>().ok().filter(|&e| e < edge_count))
            .ok_or_else(|| Failure::usage(format!("unknown edge '{name}'")))?;
        ids.push(id);
    }
    EdgeSubset::from_edges(ids, edge_count).map_err(|e| Failure::usage(e.to_string()))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    if let Some(path) = out {
        fs::write(path, content)
            .map_err(|e| Failure::usage(format!("writing {}: {e}", path.display())))?;
    }
    Ok(())
}

fn emit_gem(
    gem: &Gem,
    names: &NameTable,
    json: bool,
    path: &Option<PathBuf>,
    out: &mut String,
) -> Result<i32, Failure> {
    let text = gem_to_json(gem, names);
    emit(path, &text)?;
    if json {
        writeln!(out, "{text}").unwrap();
    } else {
        writeln!(out, "{}", gem.summary()).unwrap();
    }
    Ok(EXIT_OK)
}

fn dispatch(command: Command, out: &mut String) -> Result<i32, Failure> {
    match command {
        Command::Validate { input, json } => {
            // validate without rejecting: report violations instead
            let format = match input.format {
                Some(f) => f,
                None => match input.input.extension().and_then(|e| e.to_str()) {
                    Some("rot") => Format::Rot,
                    Some("json") => Format::Json,
                    _ => {
                        return Err(Failure::usage(
                            "cannot infer input format; pass --format rot|json",
                        ))
                    }
                },
            };
            let text = read_input(&input.input)?;
            let report = match format {
                Format::Rot => match parse_rotation(&text) {
                    Ok((rot, _)) => match gem_from_rotation(&rot) {
                        Ok(gem) => gem.to_candidate().validate(),
                        Err(e) => {
                            return fail_validation_report(json, &e.to_string(), out);
                        }
                    },
                    Err(e) => {
                        return fail_validation_report(json, &e.to_string(), out);
                    }
                },
                Format::Json => match parse_gem_json(&text) {
                    Ok((gem, _)) => gem.to_candidate().validate(),
                    Err(e) => {
                        return fail_validation_report(json, &e.to_string(), out);
                    }
                },
            };
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap()).unwrap();
            } else if report.ok {
                writeln!(out, "ok").unwrap();
            } else {
                for v in &report.violations {
                    writeln!(out, "violation {}: {}", v.rule, v.witness).unwrap();
                }
            }
            Ok(if report.ok { EXIT_OK } else { EXIT_VALIDATION })
        }
        Command::Summary { input, json } => {
            let (gem, _) = load(&input)?;
            let summary = gem.summary();
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&summary).unwrap()).unwrap();
            } else {
                writeln!(out, "{summary}").unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Dual {
            input,
            subset,
            json,
            out: path_out,
        } => {
            let (gem, names) = load(&input)?;
            let d = resolve_subset(&subset, &names, gem.edge_count())?;
            emit_gem(&partial_dual(&gem, d), &names, json, &path_out, out)
        }
        Command::Petrie {
            input,
            subset,
            json,
            out: path_out,
        } => {
            let (gem, names) = load(&input)?;
            let d = resolve_subset(&subset, &names, gem.edge_count())?;
            emit_gem(&partial_petrie(&gem, d), &names, json, &path_out, out)
        }
        Command::Twist {
            input,
            spec,
            json,
            out: path_out,
        } => {
            let (gem, names) = load(&input)?;
            let mut twist = TwistSpec::identity(gem.edge_count());
            for part in spec.split(',') {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                let (name, perm) = part
                    .split_once(':')
                    .ok_or_else(|| Failure::usage(format!("bad twist entry '{part}'")))?;
                let id = names
                    .edge_id(name.trim())
                    .or_else(|| name.trim().parse().ok().filter(|&e| e < gem.edge_count()))
                    .ok_or_else(|| Failure::usage(format!("unknown edge '{name}'")))?;
                let perm = ColourPerm::parse(perm.trim())
                    .ok_or_else(|| Failure::usage(format!("unknown permutation '{perm}'")))?;
                twist.set(id, perm);
            }
            let twisted = Jewel::from_gem(&gem).twist(&twist).strip_green();
            emit_gem(&twisted, &names, json, &path_out, out)
        }
        Command::Trace { input, subset } => {
            let (gem, names) = load(&input)?;
            let d = resolve_subset(&subset, &names, gem.edge_count())?;
            let trace = trace_partial_dual(&gem, d);
            let doc = json!({
                "r_cycles": trace.r_cycles,
                "b_cycles": trace.b_cycles,
                "k": trace.k(),
                "l": trace.l(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).unwrap();
            Ok(EXIT_OK)
        }
        Command::CheckC2c { input, json } => {
            let (gem, _) = load(&input)?;
            let verdict = is_closed_2cell(&gem);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&verdict).unwrap()).unwrap();
            } else {
                match &verdict {
                    Verdict::Yes => writeln!(out, "closed 2-cell: yes").unwrap(),
                    Verdict::No { witness } => writeln!(
                        out,
                        "closed 2-cell: no (vertex {} and face {} share corners {:?})",
                        witness.vertex, witness.face, witness.corners
                    )
                    .unwrap(),
                    Verdict::Degenerate => {
                        writeln!(out, "closed 2-cell: degenerate (fewer than two edges)").unwrap()
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Obstructions { input, json } => {
            let (gem, _) = load(&input)?;
            let report = separating_features(&gem);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap()).unwrap();
            } else {
                for p in &report.separating_pairs {
                    writeln!(
                        out,
                        "separating pair: vertex {} / face {} (corners {:?})",
                        p.vertex, p.face, p.corners
                    )
                    .unwrap();
                }
                for e in &report.separating_loops {
                    writeln!(out, "separating loop: edge {e}").unwrap();
                }
                for e in &report.separating_coloops {
                    writeln!(out, "separating coloop: edge {e}").unwrap();
                }
                writeln!(
                    out,
                    "blocks all partial duals: {}",
                    report.blocks_all_partial_duals
                )
                .unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Conditions {
            input,
            subset,
            json,
            explain,
        } => {
            let (gem, names) = load(&input)?;
            let d = resolve_subset(&subset, &names, gem.edge_count())?;
            let analysis = analyze(&gem, d);
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&analysis.verdict).unwrap()
                )
                .unwrap();
            } else {
                let mut show = |name: &str, ok: bool| {
                    writeln!(out, "{name}: {}", if ok { "pass" } else { "fail" }).unwrap();
                };
                show("LC", analysis.verdict.lc.passed());
                show("MC", analysis.verdict.mc.passed());
                show("GC", analysis.verdict.gc.passed());
                writeln!(out, "predicted closed 2-cell: {:?}", analysis.verdict.predicted_c2c).unwrap();
            }
            if explain {
                for (i, walk) in analysis.separation.petrie_walks.iter().enumerate() {
                    let corners: Vec<String> = walk
                        .edges
                        .iter()
                        .map(|&e| format!("c{}", analysis.separation.edges[e].corner))
                        .collect();
                    writeln!(out, "walk {i} ({:?}): {}", walk.kind, corners.join(" ")).unwrap();
                }
            }
            Ok(EXIT_OK)
        }
        Command::Search {
            input,
            mode,
            cap,
            audit,
            dedup,
            parallel,
            out: path_out,
            csv,
            json,
        } => {
            let (gem, _) = load(&input)?;
            let mode = match mode {
                SearchModeArg::Direct => SearchMode::Direct,
                SearchModeArg::Conditions => SearchMode::Conditions,
                SearchModeArg::CrossCheck => SearchMode::CrossCheck,
            };
            let mut opts = SearchOptions::new(mode);
            if let Some(cap) = cap {
                opts.cap = cap;
            }
            opts.audit_blocked = audit;
            opts.dedup_isomorphic = dedup;
            opts.parallelism = parallel.max(1);
            let (report, rows) =
                find_c2c_duals_rows(&gem, &opts).map_err(|e| Failure::usage(e.to_string()))?;
            if let Some(path) = &csv {
                let mut text = String::from("bitmask,verdict,failing_condition\n");
                for row in &rows {
                    let verdict = if row.degenerate {
                        "degenerate"
                    } else if row.closed_2cell {
                        "yes"
                    } else {
                        "no"
                    };
                    text.push_str(&format!(
                        "{},{},{}\n",
                        row.mask,
                        verdict,
                        row.failing.as_deref().unwrap_or("")
                    ));
                }
                emit(&Some(path.clone()), &text)?;
            }
            let report_text = serde_json::to_string_pretty(&report).unwrap();
            emit(&path_out, &report_text)?;
            if json {
                writeln!(out, "{report_text}").unwrap();
            } else {
                writeln!(
                    out,
                    "{} subsets, {} closed 2-cell, {} pruned, {} disagreements",
                    report.total_subsets,
                    report.c2c_subsets.len(),
                    report.pruned_by_obstruction,
                    report.disagreements.len()
                )
                .unwrap();
            }
            Ok(if report.disagreements.is_empty() {
                EXIT_OK
            } else {
                EXIT_DISAGREEMENT
            })
        }
        Command::Convert {
            input,
            to,
            out: path_out,
        } => {
            let (gem, names) = load(&input)?;
            let text = match to {
                Format::Json => gem_to_json(&gem, &names),
                Format::Rot => {
                    let rot = rotation_from_gem(&gem);
                    let names = NameTable {
                        edge_names: names.edge_names.clone(),
                        vertex_names: (0..rot.vertex_count()).map(|v| format!("v{v}")).collect(),
                    };
                    rotation_to_text(&rot, &names)
                }
            };
            emit(&path_out, &text)?;
            if path_out.is_none() {
                if text.ends_with('\n') {
                    write!(out, "{text}").unwrap();
                } else {
                    writeln!(out, "{text}").unwrap();
                }
            }
            Ok(EXIT_OK)
        }
        Command::ExportDot {
            input,
            what,
            subset,
            out: path_out,
        } => {
            let (gem, names) = load(&input)?;
            let text = match what {
                DotTarget::Gem => dot_gem(&gem),
                DotTarget::Jewel => dot_jewel(&Jewel::from_gem(&gem)),
                DotTarget::Lambda => {
                    let d = resolve_subset(&subset, &names, gem.edge_count())?;
                    let table = corner_table(&gem, d);
                    dot_separation(&separation_graph(&gem, d, &table))
                }
            };
            emit(&path_out, &text)?;
            if path_out.is_none() {
                write!(out, "{text}").unwrap();
            }
            Ok(EXIT_OK)
        }
    }
}

fn fail_validation_report(json: bool, message: &str, out: &mut String) -> Result<i32, Failure> {
    if json {
        let doc = json!({"ok": false, "violations": [{"rule": "parse", "witness": message}]});
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    } else {
        writeln!(out, "violation parse: {message}").unwrap();
    }
    Ok(EXIT_VALIDATION)
}
