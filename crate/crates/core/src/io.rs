// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Edge-list and hyperedge-list input, measure selection and report output.
//!
//! Input files hold one edge (two labels) or one hyperedge (one or more
//! labels) per line. Labels are non-negative integers, remapped to dense
//! indices in order of first appearance; `#` starts a comment line. In an
//! edge list a line with a single label declares an isolated vertex.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::centrality::{
    bipartivity, functional_centrality, functional_centralization, node_bipartivity, rank_nodes_by,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Hypergraph};
use crate::spectral::eigendecompose;
use crate::{Decomposition, Weight};

/// Significant digits of values in TSV output.
pub const TSV_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// Original label of each internal vertex.
    pub labels: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledHypergraph {
    pub hypergraph: Hypergraph,
    pub labels: Vec<u64>,
}

#[derive(Default)]
struct Labeler {
    index: HashMap<u64, usize>,
    labels: Vec<u64>,
}

impl Labeler {
    fn intern(&mut self, label: u64) -> usize {
        *self.index.entry(label).or_insert_with(|| {
            self.labels.push(label);
            self.labels.len() - 1
        })
    }
}

/// Non-comment lines as `(1-based line number, labels)`.
fn label_lines(text: &str) -> impl Iterator<Item = Result<(usize, Vec<u64>)>> + '_ {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        let parsed = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>().map_err(|_| Error::Parse {
                    line: idx + 1,
                    message: format!("invalid vertex label `{tok}`"),
                })
            })
            .collect::<Result<Vec<_>>>();
        Some(parsed.map(|labels| (idx + 1, labels)))
    })
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut labeler = Labeler::default();
    let mut pairs = Vec::new();
    for item in label_lines(text) {
        let (line, labels) = item?;
        match labels[..] {
            [v] => {
                labeler.intern(v);
            }
            [u, v] if u == v => return Err(Error::SelfLoop(u as usize).at_line(line)),
            [u, v] => pairs.push((labeler.intern(u), labeler.intern(v))),
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected one or two labels, found {}", labels.len()),
                })
            }
        }
    }
    if labeler.labels.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let graph = Graph::from_edges(labeler.labels.len(), pairs)?;
    Ok(LabeledGraph {
        graph,
        labels: labeler.labels,
    })
}

pub fn parse_hyperedge_list(text: &str) -> Result<LabeledHypergraph> {
    let mut labeler = Labeler::default();
    let mut hyperedges = Vec::new();
    for item in label_lines(text) {
        let (line, labels) = item?;
        let mut edge = Vec::with_capacity(labels.len());
        for label in labels {
            let v = labeler.intern(label);
            if edge.contains(&v) {
                let err = Error::DuplicateVertexInHyperedge {
                    hyperedge: hyperedges.len(),
                    vertex: label as usize,
                };
                return Err(err.at_line(line));
            }
            edge.push(v);
        }
        hyperedges.push(edge);
    }
    if labeler.labels.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let hypergraph = Hypergraph::new(labeler.labels.len(), hyperedges)?;
    Ok(LabeledHypergraph {
        hypergraph,
        labels: labeler.labels,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    EdgeList,
    HyperList,
}

impl FromStr for InputKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(InputKind::EdgeList),
            "hyperlist" => Ok(InputKind::HyperList),
            _ => Err(Error::InvalidParam(format!(
                "unknown input kind `{s}` (edgelist|hyperlist)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Tsv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tsv" => Ok(OutputFormat::Tsv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::InvalidParam(format!("unknown format `{s}` (tsv|json)"))),
        }
    }
}

/// What to compute for every node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureSpec {
    Subgraph,
    Odd,
    Even,
    Monomial(usize),
    Radius(usize),
    Bipartivity,
}

impl MeasureSpec {
    /// Every measure, with the given order for the parametrised ones.
    pub fn all(k: usize) -> [MeasureSpec; 6] {
        use MeasureSpec::*;
        [Subgraph, Odd, Even, Monomial(k), Radius(k), Bipartivity]
    }

    /// The weight function, or `None` in bipartivity mode.
    pub fn weight(&self) -> Option<Weight> {
        match *self {
            MeasureSpec::Subgraph => Some(Weight::exp()),
            MeasureSpec::Odd => Some(Weight::sinh()),
            MeasureSpec::Even => Some(Weight::cosh()),
            MeasureSpec::Monomial(k) => Weight::monomial(k).ok(),
            MeasureSpec::Radius(k) => Some(Weight::radius(k)),
            MeasureSpec::Bipartivity => None,
        }
    }
}

impl fmt::Display for MeasureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureSpec::Subgraph => f.write_str("subgraph"),
            MeasureSpec::Odd => f.write_str("odd"),
            MeasureSpec::Even => f.write_str("even"),
            MeasureSpec::Monomial(k) => write!(f, "monomial:{k}"),
            MeasureSpec::Radius(k) => write!(f, "radius:{k}"),
            MeasureSpec::Bipartivity => f.write_str("bipartivity"),
        }
    }
}

impl FromStr for MeasureSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let order = |k: &str| {
            k.parse::<usize>()
                .map_err(|_| Error::InvalidParam(format!("order `{k}` in `{s}` is not a non-negative integer")))
        };
        match s.split_once(':') {
            None => match s {
                "subgraph" => Ok(MeasureSpec::Subgraph),
                "odd" => Ok(MeasureSpec::Odd),
                "even" => Ok(MeasureSpec::Even),
                "bipartivity" => Ok(MeasureSpec::Bipartivity),
                _ => Err(Error::InvalidParam(format!("unknown measure `{s}`"))),
            },
            Some(("monomial", k)) => {
                let k = order(k)?;
                Weight::monomial(k)?;
                Ok(MeasureSpec::Monomial(k))
            }
            Some(("radius", k)) => Ok(MeasureSpec::Radius(order(k)?)),
            Some(_) => Err(Error::InvalidParam(format!("unknown measure `{s}`"))),
        }
    }
}

/// A parsed input with its decomposition, ready for any number of measures.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub labels: Vec<u64>,
    /// Edge count, or hyperedge count for hypergraph input.
    pub size: usize,
    pub decomposition: Decomposition,
}

impl Analysis {
    pub fn from_text(text: &str, kind: InputKind) -> Result<Self> {
        let (labels, size, adjacency) = match kind {
            InputKind::EdgeList => {
                let g = parse_edge_list(text)?;
                (g.labels, g.graph.size(), g.graph.adjacency_matrix())
            }
            InputKind::HyperList => {
                let h = parse_hyperedge_list(text)?;
                (
                    h.labels,
                    h.hypergraph.hyperedges().len(),
                    h.hypergraph.adjacency_matrix(),
                )
            }
        };
        let decomposition = eigendecompose(&adjacency)?;
        Ok(Analysis {
            labels,
            size,
            decomposition,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn report(&self, measure: MeasureSpec) -> Result<RunReport> {
        let d = &self.decomposition;
        let (values, centralization, beta) = match measure.weight() {
            Some(f) => (functional_centrality(d, &f)?, functional_centralization(d, &f)?, None),
            None => {
                let values = (0..d.order())
                    .map(|i| node_bipartivity(d, i))
                    .collect::<Result<Vec<_>>>()?;
                let beta = bipartivity(d);
                (values, beta, Some(beta))
            }
        };
        let ranked = rank_nodes_by(measure.to_string(), values, |i| self.labels[i])?;
        let nodes = ranked
            .ranking
            .iter()
            .map(|&i| NodeRow {
                label: self.labels[i],
                value: ranked.values[i],
                rank: ranked.ranks[i],
                beta: beta.map(|_| ranked.values[i]),
            })
            .collect();
        Ok(RunReport {
            measure: ranked.measure,
            graph: GraphInfo {
                n: self.order(),
                m: self.size,
            },
            centralization,
            beta,
            nodes,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphInfo {
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeRow {
    pub label: u64,
    pub value: f64,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
}

/// Emitted report. Nodes appear in ranking order.
///
/// In bipartivity mode each node's `value` is its own bipartivity and
/// `centralization` is the graph bipartivity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub measure: String,
    pub graph: GraphInfo,
    pub centralization: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    pub nodes: Vec<NodeRow>,
}

impl RunReport {
    /// `#` metadata lines, then `node<TAB>value<TAB>rank` rows.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# measure: {}\n", self.measure));
        out.push_str(&format!("# n: {}\n# m: {}\n", self.graph.n, self.graph.m));
        out.push_str(&format!(
            "# centralization: {}\n",
            format_significant(self.centralization, TSV_DIGITS)
        ));
        if let Some(beta) = self.beta {
            out.push_str(&format!("# beta: {}\n", format_significant(beta, TSV_DIGITS)));
        }
        out.push_str("node\tvalue\trank\n");
        for row in &self.nodes {
            out.push_str(&format!(
                "{}\t{}\t{}\n",
                row.label,
                format_significant(row.value, TSV_DIGITS),
                row.rank
            ));
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Tsv => Ok(self.to_tsv()),
            OutputFormat::Json => self.to_json(),
        }
    }
}

/// Reads the rows of a TSV report back as `(label, value, rank)`.
pub fn read_tsv_rows(text: &str) -> Result<Vec<(u64, f64, usize)>> {
    let mut rows = Vec::new();
    let mut header_seen = false;
    for (idx, line) in text.lines().enumerate() {
        let bad = |message: &str| Error::Parse {
            line: idx + 1,
            message: message.to_string(),
        };
        if line.starts_with('#') {
            continue;
        }
        if !header_seen {
            if line != "node\tvalue\trank" {
                return Err(bad("missing header"));
            }
            header_seen = true;
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [label, value, rank] = fields[..] else {
            return Err(bad("expected three fields"));
        };
        rows.push((
            label.parse().map_err(|_| bad("bad label"))?,
            value.parse().map_err(|_| bad("bad value"))?,
            rank.parse().map_err(|_| bad("bad rank"))?,
        ));
    }
    Ok(rows)
}

/// `x` rounded to `digits` significant digits, printed like C's `%g`:
/// positional notation for moderate exponents, otherwise scientific, with
/// trailing zeros removed.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exponent) = sci.split_once('e').expect("scientific format");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if exponent < -5 || exponent >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), exponent)
    } else {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub kind: InputKind,
    pub measure: MeasureSpec,
    pub format: OutputFormat,
    /// Standard output when `None`.
    pub output: Option<PathBuf>,
}

/// Parse, decompose, measure, rank and emit.
pub fn run(config: &RunConfig) -> Result<()> {
    let text = fs::read_to_string(&config.input).map_err(|e| Error::from(e).in_file(&config.input))?;
    let analysis = Analysis::from_text(&text, config.kind).map_err(|e| e.in_file(&config.input))?;
    let rendered = analysis.report(config.measure)?.render(config.format)?;
    match &config.output {
        Some(path) => fs::write(path, rendered).map_err(|e| Error::from(e).in_file(path)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(rendered.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}
