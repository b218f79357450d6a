//! Command-line front end: crystal export, verification suites, dimension
//! tables.
//!
//! Exit status is 0 exactly when no report entry is a failure, 1 when some
//! check fails, 2 on usage or I/O errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cartan::{CartanDatum, TypeLabel};
use crate::crystal::{build_crystal, BijectionStatus, CrystalGraph, DEFAULT_PATH_CAP};
use crate::error::Result;
use crate::klr::{
    self, basis, branching_check, build_module_paths, build_module_tableaux, check_klr_relations,
    cyclotomic_basis, dimension_table, head_witness_check, isomorphism_check_b_d, QSpec,
};
use crate::tableaux::{all_strict_partitions, wt_b};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "minuscule-klr",
    about = "Minuscule crystals and homogeneous modules of cyclotomic quiver Hecke algebras",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a minuscule crystal and export it.
    Crystal(CrystalArgs),
    /// Run the relation/bijection/basis suite over every vertex or shape.
    Verify(VerifyArgs),
    /// Dimension tables, optionally compared against the D-side family.
    Dimensions(DimensionsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Cartan type: A, B, C, D, E6, E7.
    #[arg(long = "type", value_parser = parse_type)]
    type_label: TypeLabel,
    /// Rank of the datum.
    #[arg(long)]
    rank: usize,
    /// Minuscule node (1-based).
    #[arg(long)]
    node: usize,
    /// Cap on materialized path sets per vertex.
    #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
    path_cap: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the primary artifact to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cache directory (env MINUSCULE_KLR_CACHE_DIR).
    #[arg(long, env = "MINUSCULE_KLR_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Also write the Cartan datum document to this file.
    #[arg(long)]
    dump_datum: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CrystalArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Only process vertices/shapes of level at most this bound.
    #[arg(long)]
    max_m: Option<usize>,
    /// Cap on reduced-word enumeration in the bijection check.
    #[arg(long, default_value_t = 16)]
    word_cap: usize,
    /// For vertices over the path cap, list this many lexicographically-first
    /// paths instead of skipping silently (smoke-test aid; items stay
    /// "skipped").
    #[arg(long)]
    sample: Option<usize>,
    /// Export the generator matrices of every verified module to this
    /// directory in sparse triplet text.
    #[arg(long)]
    dump_modules: Option<PathBuf>,
    /// Write the JSON report here in addition to stdout summary.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DimensionsArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Largest level to tabulate.
    #[arg(long, default_value_t = 10)]
    max_m: usize,
    /// For type B, also run the D-side comparison report.
    #[arg(long = "compare-D")]
    compare_d: bool,
}

fn parse_type(s: &str) -> std::result::Result<TypeLabel, String> {
    s.parse()
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success status itself
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Crystal(a) => cmd_crystal(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Dimensions(a) => cmd_dimensions(&a),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn dump_datum(datum: &CartanDatum, path: &Option<PathBuf>) -> Result<()> {
    if let Some(path) = path {
        let doc = serde_json::to_string_pretty(&datum.to_document())?;
        fs::write(path, doc)?;
    }
    Ok(())
}

fn cache_path(common: &CommonArgs) -> Option<PathBuf> {
    common.cache_dir.as_ref().map(|dir| {
        dir.join(format!(
            "crystal-v{}-{}{}-node{}-cap{}.json",
            crate::crystal::CRYSTAL_SCHEMA_VERSION,
            common.type_label,
            common.rank,
            common.node,
            common.path_cap,
        ))
    })
}

fn crystal_document(crystal: &CrystalGraph) -> Result<serde_json::Value> {
    let mut counts = Vec::with_capacity(crystal.len());
    let mut levels = Vec::with_capacity(crystal.len());
    for v in crystal.vertices() {
        counts.push(crystal.path_count(v)?);
        levels.push(crystal.level(v)?);
    }
    Ok(json!({
        "graph": crystal.to_json_value(),
        "levels": levels,
        "path_counts": counts,
    }))
}

fn load_cached(path: &Path) -> Option<serde_json::Value> {
    let text = fs::read_to_string(path).ok()?;
    let doc: serde_json::Value = serde_json::from_str(&text).ok()?;
    let version = doc.get("graph")?.get("schema_version")?.as_u64()?;
    // stale schema versions invalidate silently
    (version == crate::crystal::CRYSTAL_SCHEMA_VERSION as u64).then_some(doc)
}

fn cmd_crystal(args: &CrystalArgs) -> Result<bool> {
    let common = &args.common;
    let datum = CartanDatum::new(common.type_label, common.rank)?;
    dump_datum(&datum, &common.dump_datum)?;

    let cache = cache_path(common);
    let cached = cache.as_deref().and_then(load_cached);
    let doc = match cached {
        Some(doc) => doc,
        None => {
            let crystal = build_crystal(&datum, common.node)?;
            let doc = crystal_document(&crystal)?;
            if let Some(path) = &cache {
                if let Some(dir) = path.parent() {
                    fs::create_dir_all(dir)?;
                }
                fs::write(path, serde_json::to_string(&doc)?)?;
            }
            doc
        }
    };

    match common.format {
        Format::Json => emit(&common.out, &format!("{:#}\n", doc))?,
        Format::Dot => {
            // DOT is regenerated from the graph document to honor the cache
            let crystal = build_crystal(&datum, common.node)?;
            emit(&common.out, &crystal.to_dot())?;
        }
        Format::Text => {
            let graph = &doc["graph"];
            let vertices = graph["vertices"].as_array().expect("vertices").len();
            let edges = graph["edges"].as_array().expect("edges").len();
            let mut text = format!(
                "{}{} node {}: {} vertices, {} edges\n",
                common.type_label, common.rank, common.node, vertices, edges
            );
            let counts = doc["path_counts"].as_array().expect("counts");
            let levels = doc["levels"].as_array().expect("levels");
            for (k, v) in graph["vertices"].as_array().expect("vertices").iter().enumerate() {
                text.push_str(&format!(
                    "vertex {v} level {} paths {}\n",
                    levels[k], counts[k]
                ));
            }
            emit(&common.out, &text)?;
        }
    }
    Ok(true)
}

#[derive(Debug)]
struct VerifyItem {
    label: String,
    level: usize,
    dim: Option<usize>,
    status: &'static str,
    detail: serde_json::Value,
}

fn check_one_module(
    module: &klr::HomogeneousModule,
    qspec: &QSpec,
    extra: &mut serde_json::Map<String, serde_json::Value>,
) -> bool {
    let relations = check_klr_relations(module, qspec);
    extra.insert("relations".into(), json!(relations.summary()));
    let mut ok = relations.passed();
    match cyclotomic_basis(module) {
        Ok(b) => {
            let products = basis::check_matrix_unit_products(module, &b, 24, 8);
            // full reduced-word enumeration over all pairs is quadratic in the
            // dimension; restrict it to modestly sized modules
            let independence = if module.dim() <= 64 {
                basis::check_word_independence(module, 128)
            } else {
                Vec::new()
            };
            let basis_ok = b.passed() && products.is_empty() && independence.is_empty();
            extra.insert(
                "basis".into(),
                json!({
                    "elements": b.elements.len(),
                    "status": if basis_ok { "pass" } else { "fail" },
                }),
            );
            ok &= basis_ok;
        }
        Err(e) => {
            extra.insert("basis".into(), json!({ "status": format!("error: {e}") }));
            ok = false;
        }
    }
    ok
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let common = &args.common;
    let datum = CartanDatum::new(common.type_label, common.rank)?;
    dump_datum(&datum, &common.dump_datum)?;
    let qspec = QSpec::standard(&datum);
    let crystal = build_crystal(&datum, common.node)?;
    let max_m = args.max_m.unwrap_or(usize::MAX);
    if let Some(dir) = &args.dump_modules {
        fs::create_dir_all(dir)?;
    }

    let mut items = Vec::new();
    for b in crystal.vertices() {
        let level = crystal.level(b)?;
        if level > max_m {
            items.push(VerifyItem {
                label: b.to_string(),
                level,
                dim: None,
                status: "skipped",
                detail: json!({"reason": "over level bound"}),
            });
            continue;
        }
        if crystal.path_count(b)? > common.path_cap {
            let mut detail = serde_json::Map::new();
            detail.insert("reason".into(), json!("over path cap"));
            if let Some(k) = args.sample {
                let sampled: Vec<Vec<usize>> = crystal
                    .first_paths(b, k)?
                    .into_iter()
                    .map(|p| p.letters)
                    .collect();
                detail.insert("sampled_paths".into(), json!(sampled));
            }
            items.push(VerifyItem {
                label: b.to_string(),
                level,
                dim: None,
                status: "skipped",
                detail: serde_json::Value::Object(detail),
            });
            continue;
        }
        let module = build_module_paths(&crystal, b, common.path_cap)?;
        let mut detail = serde_json::Map::new();
        let mut ok = check_one_module(&module, &qspec, &mut detail);
        let bij = crystal.check_path_word_bijection(b, args.word_cap, common.path_cap)?;
        detail.insert(
            "path_word_bijection".into(),
            json!(match bij {
                BijectionStatus::Pass => "pass",
                BijectionStatus::Fail => "fail",
                BijectionStatus::Skipped => "skipped",
            }),
        );
        ok &= bij != BijectionStatus::Fail;
        if let Some(dir) = &args.dump_modules {
            let name = format!("module-level{}-{}.txt", level, sanitize(&b.to_string()));
            fs::write(dir.join(name), module.export_matrices())?;
        }
        items.push(VerifyItem {
            label: b.to_string(),
            level,
            dim: Some(module.dim()),
            status: if ok { "pass" } else { "fail" },
            detail: serde_json::Value::Object(detail),
        });
    }

    // type-B suites additionally run the tableau model with branching and
    // head-witness checks over Par_n
    if common.type_label == TypeLabel::B && common.node == 1 {
        for shape in all_strict_partitions(common.rank) {
            if shape.size() > max_m {
                continue;
            }
            let module = build_module_tableaux(common.rank, &shape)?;
            let mut detail = serde_json::Map::new();
            let mut ok = check_one_module(&module, &qspec, &mut detail);
            // the tableau model must land on the same vertex
            let w = wt_b(&datum, &shape)?;
            ok &= module.target_weight() == &w && crystal.vertex_index(&w).is_ok();
            if shape.size() >= 1 {
                let branching = branching_check(common.rank, &shape)?;
                detail.insert(
                    "branching".into(),
                    json!(if branching.passed() { "pass" } else { "fail" }),
                );
                ok &= branching.passed();
                let head = head_witness_check(common.rank, &shape)?;
                detail.insert("head_witness".into(), json!(if head { "pass" } else { "fail" }));
                ok &= head;
            }
            items.push(VerifyItem {
                label: format!("shape {shape}"),
                level: shape.size(),
                dim: Some(module.dim()),
                status: if ok { "pass" } else { "fail" },
                detail: serde_json::Value::Object(detail),
            });
        }
    }

    let pass = items.iter().filter(|i| i.status == "pass").count();
    let fail = items.iter().filter(|i| i.status == "fail").count();
    let skipped = items.iter().filter(|i| i.status == "skipped").count();
    let report = json!({
        "schema_version": REPORT_SCHEMA_VERSION,
        "type": common.type_label.to_string(),
        "rank": common.rank,
        "node": common.node,
        "items": items.iter().map(|i| json!({
            "label": i.label,
            "level": i.level,
            "dim": i.dim,
            "status": i.status,
            "detail": i.detail,
        })).collect::<Vec<_>>(),
        "summary": {"pass": pass, "fail": fail, "skipped": skipped},
    });
    if let Some(path) = &args.report {
        fs::write(path, serde_json::to_string_pretty(&report)?)?;
    }
    match common.format {
        Format::Json => emit(&common.out, &format!("{report:#}\n"))?,
        _ => {
            let mut text = String::new();
            for i in &items {
                text.push_str(&format!("{:<7} {} (level {})\n", i.status, i.label, i.level));
            }
            text.push_str(&format!(
                "summary: {pass} pass, {fail} fail, {skipped} skipped\n"
            ));
            emit(&common.out, &text)?;
        }
    }
    Ok(fail == 0)
}

fn cmd_dimensions(args: &DimensionsArgs) -> Result<bool> {
    let common = &args.common;
    let datum = CartanDatum::new(common.type_label, common.rank)?;
    dump_datum(&datum, &common.dump_datum)?;
    let table = dimension_table(&datum, common.node, args.max_m, common.path_cap)?;
    let mut ok = true;
    let mut compare = None;
    if args.compare_d {
        let report = isomorphism_check_b_d(common.rank, args.max_m)?;
        ok &= report.passed();
        compare = Some(report);
    }
    match common.format {
        Format::Json => {
            let doc = json!({
                "schema_version": REPORT_SCHEMA_VERSION,
                "table": table.to_json_value(),
                "compare_d": compare.as_ref().map(|r| r.to_json_value()),
            });
            emit(&common.out, &format!("{doc:#}\n"))?;
        }
        _ => {
            let mut text = table.to_text();
            if let Some(r) = &compare {
                text.push_str(if r.passed() {
                    "D-side comparison: full agreement\n"
                } else {
                    "D-side comparison: FAILED\n"
                });
                for f in &r.failures {
                    text.push_str(&format!("  {f}\n"));
                }
            }
            emit(&common.out, &text)?;
        }
    }
    Ok(ok)
}

fn sanitize(s: &str) -> String {
    s.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["minuscule-klr", "crystal", "--type", "Z", "--rank", "2", "--node", "1"]), 2);
        assert_eq!(run(["minuscule-klr", "nonsense"]), 2);
    }

    #[test]
    fn crystal_invalid_node_fails() {
        assert_eq!(
            run(["minuscule-klr", "crystal", "--type", "B", "--rank", "3", "--node", "2"]),
            2
        );
    }
}
