use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use boolnet::dynamics::{
    analyze_mode, dominant_set, robustness_report, sweep_classes, DynamicsSummary, TransitionGraph,
};
use boolnet::models::{builtin_model, parse_model, ModelDocument};
use boolnet::network::{derive_interaction_graph, format_word};
use boolnet::schedules::{
    count_block_sequential, enumerate_block_sequential, UpdateMode, MAX_ENUMERATED_AUTOMATA,
};
use boolnet::update_digraphs::{
    classify_modes, count_chain_of_cycles, label_mode, update_digraph_classes, UpdateDigraphClass,
};
use boolnet::{Error, ParseError};
use serde_json::{json, Value};

use crate::report::{attractor_lines, binary_cycle, decimal_cycle, to_value, ReportDocument};
use crate::ModelSource;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn internal(e: impl std::fmt::Display) -> Self {
        CliError {
            code: 1,
            message: format!("error: {e}"),
        }
    }

    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError {
            code: 1,
            message: format!("error: {}: {e}", path.display()),
        }
    }

    fn library(e: Error) -> Self {
        CliError {
            code: if e.is_guard() { 3 } else { 1 },
            message: format!("error: {e}"),
        }
    }
}

/// A closed standard output (`| head`) ends the command quietly.
impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            CliError {
                code: 0,
                message: String::new(),
            }
        } else {
            CliError::internal(e)
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::library(e)
    }
}

/// Source line with a caret underline below the offending span.
fn render_parse_error(origin: &str, text: &str, e: &ParseError) -> String {
    let mut out = format!("{origin}:{e}");
    let line = text.lines().nth(e.line - 1).unwrap_or("");
    let width = text
        .get(e.span.clone())
        .map_or(1, |s| s.lines().next().unwrap_or("").chars().count().max(1));
    let _ = write!(
        out,
        "\n  | {line}\n  | {}{}",
        " ".repeat(e.column - 1),
        "^".repeat(width)
    );
    out
}

fn load(source: &ModelSource) -> Result<(ModelDocument, Value), CliError> {
    if let Some(name) = &source.builtin {
        let doc = builtin_model(name)?;
        return Ok((doc, json!({ "builtin": name })));
    }
    let path = source
        .path
        .as_deref()
        .expect("clap requires a model source");
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    match parse_model(&text) {
        Ok(doc) => Ok((doc, json!({ "path": path.display().to_string() }))),
        Err(Error::Parse(pe)) => Err(CliError {
            code: 1,
            message: format!(
                "error: {}",
                render_parse_error(&path.display().to_string(), &text, &pe)
            ),
        }),
        Err(e) => Err(e.into()),
    }
}

/// A declared mode name, or a mode string.
fn resolve_mode(doc: &ModelDocument, text: &str) -> Result<UpdateMode, CliError> {
    if let Some(m) = doc.mode(text) {
        return Ok(m.clone());
    }
    Ok(UpdateMode::parse(text, doc.network.size())?)
}

fn command_echo(name: &str, model: Value, extra: Value) -> Value {
    let mut echo = json!({ "name": name, "model": model });
    if let (Value::Object(dst), Value::Object(src)) = (&mut echo, extra) {
        dst.extend(src);
    }
    echo
}

pub fn count(
    out: &mut dyn Write,
    bs: Option<usize>,
    chain: Option<Vec<usize>>,
) -> Result<(), CliError> {
    let value = match (bs, chain) {
        (Some(n), _) => count_block_sequential(n),
        (None, Some(lengths)) => count_chain_of_cycles(&lengths)?,
        (None, None) => unreachable!("clap requires one of --bs, --chain"),
    };
    writeln!(out, "{value}")?;
    Ok(())
}

fn class_listing(doc: &ModelDocument) -> Result<Vec<UpdateDigraphClass>, CliError> {
    let n = doc.network.size();
    let graph = derive_interaction_graph(&doc.network).digraph();
    if n <= MAX_ENUMERATED_AUTOMATA {
        Ok(classify_modes(&graph, enumerate_block_sequential(n)?)?)
    } else {
        Ok(update_digraph_classes(&graph)?)
    }
}

pub fn classes(
    out: &mut dyn Write,
    source: &ModelSource,
    json_out: Option<&Path>,
) -> Result<(), CliError> {
    let (doc, model) = load(source)?;
    let classes = class_listing(&doc)?;
    writeln!(out, "{} classes", classes.len())?;
    for (k, c) in classes.iter().enumerate() {
        let size = c
            .members
            .as_ref()
            .map_or(String::new(), |m| format!(", {} modes", m.len()));
        writeln!(out, "class {}: {}{size}", k + 1, c.representative)?;
        writeln!(out, "  {}", c.labeling)?;
    }
    if let Some(path) = json_out {
        let list: Vec<Value> = classes
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let mut v = to_value(c)?;
                if let Value::Object(m) = &mut v {
                    m.insert("id".into(), json!(k + 1));
                    if let Some(members) = &c.members {
                        m.insert("size".into(), json!(members.len()));
                    }
                }
                Ok(v)
            })
            .collect::<Result<_, CliError>>()?;
        let payload = json!({ "kind": "classes", "count": classes.len(), "classes": list });
        ReportDocument::new(&doc, command_echo("classes", model, json!({})), payload)
            .write(path)?;
    }
    Ok(())
}

fn analyzed(
    doc: &ModelDocument,
    mode_text: &str,
) -> Result<(TransitionGraph, DynamicsSummary), CliError> {
    let mode = resolve_mode(doc, mode_text)?;
    let (tg, mut summary) = analyze_mode(&doc.network, &mode)?;
    if let UpdateMode::BlockSequential(bs) = &mode {
        let graph = derive_interaction_graph(&doc.network).digraph();
        summary.labeling = Some(label_mode(&graph, bs)?);
    }
    Ok((tg, summary))
}

pub fn analyze(
    out: &mut dyn Write,
    source: &ModelSource,
    mode_text: &str,
    dot_out: Option<&Path>,
    json_out: Option<&Path>,
) -> Result<(), CliError> {
    let (doc, model) = load(source)?;
    let (tg, summary) = analyzed(&doc, mode_text)?;
    let n = doc.network.size();
    writeln!(
        out,
        "network {} ({n} automata), mode {}",
        doc.name(),
        summary.mode
    )?;
    writeln!(out, "signature {}", summary.signature)?;
    for line in attractor_lines(&summary.attractors, n) {
        writeln!(out, "{line}")?;
    }
    if let Some(path) = dot_out {
        let dot = boolnet::dynamics::to_dot(doc.name(), &tg, &summary.attractors);
        fs::write(path, dot).map_err(|e| CliError::io(path, e))?;
    }
    if let Some(path) = json_out {
        let payload = json!({ "kind": "dynamics", "summary": to_value(&summary)? });
        let echo = command_echo("analyze", model, json!({ "mode": mode_text }));
        ReportDocument::new(&doc, echo, payload).write(path)?;
    }
    Ok(())
}

pub fn export_dot(
    out: &mut dyn Write,
    source: &ModelSource,
    mode_text: &str,
    file: Option<&Path>,
) -> Result<(), CliError> {
    let (doc, _) = load(source)?;
    let (tg, summary) = analyzed(&doc, mode_text)?;
    let dot = boolnet::dynamics::to_dot(doc.name(), &tg, &summary.attractors);
    match file {
        Some(path) => fs::write(path, dot).map_err(|e| CliError::io(path, e)),
        None => {
            out.write_all(dot.as_bytes())?;
            Ok(())
        }
    }
}

fn cycles_field(s: &DynamicsSummary) -> String {
    let parts: Vec<String> = s
        .attractors
        .iter()
        .map(|a| decimal_cycle(&a.configs))
        .collect();
    parts.join(" ")
}

fn basins_field(s: &DynamicsSummary) -> String {
    let parts: Vec<String> = s
        .attractors
        .iter()
        .map(|a| a.basin_size.to_string())
        .collect();
    parts.join(" ")
}

pub fn sweep(
    out: &mut dyn Write,
    source: &ModelSource,
    json_out: Option<&Path>,
    csv_out: Option<&Path>,
) -> Result<(), CliError> {
    let (doc, model) = load(source)?;
    let n = doc.network.size();
    let graph = derive_interaction_graph(&doc.network).digraph();
    let classes = update_digraph_classes(&graph)?;
    let summaries = sweep_classes(&doc.network, &classes)?;
    let dominance = dominant_set(&summaries)?;
    let report = robustness_report(&doc.network, &summaries, &dominance);

    writeln!(
        out,
        "network {} ({n} automata), {} dynamics",
        doc.name(),
        summaries.len()
    )?;
    writeln!(out, "signatures:")?;
    for h in &report.histogram {
        writeln!(out, "  {}: {}", h.signature, h.count)?;
    }
    let d = &report.dominance;
    writeln!(
        out,
        "dominant set ({} configurations{}): {} = {}",
        d.dominant_set.len(),
        if d.unique { ", unique" } else { ", not unique" },
        binary_cycle(&d.dominant_set, n).replace(['(', ')'], ""),
        decimal_cycle(&d.dominant_set).replace(['(', ')'], "")
    )?;
    for a in &report.appearances {
        writeln!(
            out,
            "  {} = {}: in {} dynamics",
            format_word(a.config, n),
            a.config,
            a.total
        )?;
    }
    let cc = report.color_counts;
    writeln!(
        out,
        "colors: white {}, yellow {}, green {}",
        cc.white, cc.yellow, cc.green
    )?;
    for (s, c) in summaries.iter().zip(&report.colors) {
        writeln!(
            out,
            "class {}: {} {} {}",
            c.class_id + 1,
            s.mode,
            s.signature,
            c.color
        )?;
        for line in attractor_lines(&s.attractors, n).into_iter().skip(1) {
            writeln!(out, "{line}")?;
        }
    }

    if let Some(path) = csv_out {
        let mut w = csv::Writer::from_path(path).map_err(CliError::internal)?;
        w.write_record([
            "class_id",
            "representative",
            "signature",
            "attractors",
            "basins",
            "color",
        ])
        .map_err(CliError::internal)?;
        for (s, c) in summaries.iter().zip(&report.colors) {
            w.write_record([
                (c.class_id + 1).to_string(),
                s.mode.to_string(),
                s.signature.to_string(),
                cycles_field(s),
                basins_field(s),
                c.color.to_string(),
            ])
            .map_err(CliError::internal)?;
        }
        w.flush().map_err(|e| CliError::io(path, e))?;
    }
    if let Some(path) = json_out {
        let payload = json!({
            "kind": "robustness",
            "report": to_value(&report)?,
            "dynamics": to_value(&summaries)?,
        });
        ReportDocument::new(&doc, command_echo("sweep", model, json!({})), payload).write(path)?;
    }
    Ok(())
}
