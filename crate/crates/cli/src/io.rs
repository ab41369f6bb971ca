use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use holeforge_core::graph6::{parse_graph6, write_graph6};
use holeforge_core::Graph;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// graph6 files, one graph per line; "-" or nothing reads stdin
    pub inputs: Vec<PathBuf>,
    /// Inline graph6 string (repeatable)
    #[arg(long = "graph6", short = 'g', value_name = "G6")]
    pub inline: Vec<String>,
    /// Read each input file as an edge list: vertex count, then "u v" lines
    #[arg(long)]
    pub edge_list: bool,
}

/// Failure classes, mapped to exit codes 1, 2 and 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Input(String),
    Limit(String),
    Violation(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Limit(_) => 2,
            Failure::Violation(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Input(_) => "input",
            Failure::Limit(_) => "limit",
            Failure::Violation(_) => "violation",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Limit(m) | Failure::Violation(m) => m,
        }
    }
}

pub fn read_graphs(args: &InputArgs) -> Result<Vec<Graph>, Failure> {
    let mut graphs = Vec::new();
    for (i, g6) in args.inline.iter().enumerate() {
        graphs.push(parse_graph6(g6).map_err(|e| Failure::Input(format!("--graph6 #{}: {e}", i + 1)))?);
    }
    let mut sources: Vec<(String, String)> = Vec::new();
    if args.inputs.is_empty() && args.inline.is_empty() {
        sources.push(("<stdin>".into(), read_stdin()?));
    }
    for path in &args.inputs {
        if path.as_os_str() == "-" {
            sources.push(("<stdin>".into(), read_stdin()?));
        } else {
            let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            sources.push((path.display().to_string(), text));
        }
    }
    for (name, text) in sources {
        if args.edge_list {
            graphs.push(Graph::parse_edge_list(&text).map_err(|e| Failure::Input(format!("{name}: {e}")))?);
            continue;
        }
        for (line_no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line == holeforge_core::graph6::HEADER || line.starts_with('#') {
                continue;
            }
            let g = parse_graph6(line).map_err(|e| Failure::Input(format!("{name}:{}: {e}", line_no + 1)))?;
            graphs.push(g);
        }
    }
    Ok(graphs)
}

fn read_stdin() -> Result<String, Failure> {
    let mut text = String::new();
    io::stdin().read_to_string(&mut text).map_err(|e| Failure::Input(format!("<stdin>: {e}")))?;
    Ok(text)
}

/// Writes one row per graph in the chosen format; errors go to stderr and
/// raise the exit code.
pub struct Emitter {
    format: Format,
    command: &'static str,
    header_done: bool,
    pub exit: u8,
    out: io::BufWriter<io::Stdout>,
}

impl Emitter {
    pub fn new(format: Format, command: &'static str) -> Self {
        Emitter { format, command, header_done: false, exit: 0, out: io::BufWriter::new(io::stdout()) }
    }

    pub fn row(&mut self, index: usize, graph: Option<&Graph>, result: Result<Value, Failure>) {
        let g6 = graph.map(write_graph6);
        match result {
            Ok(value) => self.ok(index, g6, value),
            Err(f) => self.fail(index, g6, f),
        }
    }

    fn ok(&mut self, index: usize, g6: Option<String>, value: Value) {
        let fields = match value {
            Value::Object(map) => map,
            other => Map::from_iter([("value".to_string(), other)]),
        };
        let line = match self.format {
            Format::Json => {
                let mut rec = Map::new();
                rec.insert("schema".into(), SCHEMA_VERSION.into());
                rec.insert("command".into(), self.command.into());
                rec.insert("index".into(), index.into());
                if let Some(g6) = g6 {
                    rec.insert("graph6".into(), g6.into());
                }
                rec.insert("result".into(), Value::Object(fields));
                Value::Object(rec).to_string()
            }
            Format::Tsv => {
                let mut line = String::new();
                if !self.header_done {
                    let mut cols = vec!["index".to_string()];
                    if g6.is_some() {
                        cols.push("graph6".into());
                    }
                    cols.extend(fields.keys().cloned());
                    line.push_str(&cols.join("\t"));
                    line.push('\n');
                    self.header_done = true;
                }
                let mut cells = vec![index.to_string()];
                cells.extend(g6);
                cells.extend(fields.values().map(cell));
                line.push_str(&cells.join("\t"));
                line
            }
            Format::Human => {
                let mut parts = vec![format!("#{index}")];
                parts.extend(g6);
                parts.extend(fields.iter().map(|(k, v)| format!("{k}={}", cell(v))));
                parts.join(" ")
            }
        };
        let _ = writeln!(self.out, "{line}");
    }

    fn fail(&mut self, index: usize, g6: Option<String>, f: Failure) {
        self.exit = self.exit.max(f.code());
        let _ = self.out.flush();
        let mut err = io::stderr();
        match self.format {
            Format::Json => {
                let rec = serde_json::json!({
                    "schema": SCHEMA_VERSION,
                    "command": self.command,
                    "index": index,
                    "graph6": g6,
                    "error": { "kind": f.kind(), "message": f.message() },
                });
                let _ = writeln!(err, "{rec}");
            }
            _ => {
                let _ = writeln!(err, "#{index} {} {} error: {}", g6.unwrap_or_default(), f.kind(), f.message());
            }
        }
    }

    /// Plain line, used for graph streams.
    pub fn line(&mut self, text: &str) {
        let _ = writeln!(self.out, "{text}");
    }

    pub fn finish(mut self) -> u8 {
        let _ = self.out.flush();
        self.exit
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}
