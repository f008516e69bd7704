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

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use funcent::io::{run, InputKind, MeasureSpec, OutputFormat, RunConfig};

/// Functional centralities of a graph or hypergraph.
#[derive(Debug, Parser)]
#[command(name = "centrality", version)]
struct Cli {
    /// Input file.
    #[arg(long)]
    input: PathBuf,
    /// `edgelist` or `hyperlist`.
    #[arg(long, default_value = "edgelist")]
    kind: InputKind,
    /// subgraph | odd | even | monomial:K | radius:K | bipartivity
    #[arg(long, default_value = "subgraph")]
    measure: MeasureSpec,
    /// `tsv` or `json`.
    #[arg(long, default_value = "tsv")]
    format: OutputFormat,
    /// Output file; standard output if omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        input: cli.input,
        kind: cli.kind,
        measure: cli.measure,
        format: cli.format,
        output: cli.output,
    };
    match run(&config) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("centrality: {err}");
            ExitCode::FAILURE
        }
    }
}
