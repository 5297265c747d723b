//! Run manifest emitted as '#'-prefixed header lines in every output file.
//! Re-running with the recorded arguments and seed reproduces the data rows
//! byte for byte (the timestamp line is informational).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

pub struct RunManifest {
    pub subcommand: &'static str,
    pub args: Vec<(String, String)>,
    pub seed: Option<u64>,
}

impl RunManifest {
    pub fn new(subcommand: &'static str) -> Self {
        Self { subcommand, args: Vec::new(), seed: None }
    }

    pub fn arg(mut self, key: &str, value: impl ToString) -> Self {
        self.args.push((key.to_string(), value.to_string()));
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn write_header(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "# tool: ellnorm {}", env!("CARGO_PKG_VERSION"))?;
        writeln!(w, "# subcommand: {}", self.subcommand)?;
        let args = self
            .args
            .iter()
            .map(|(k, v)| format!("--{k} {v}"))
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(w, "# args: {args}")?;
        if let Some(seed) = self.seed {
            writeln!(w, "# seed: {seed}")?;
        }
        writeln!(w, "# timestamp: {}", chrono::Utc::now().to_rfc3339())?;
        Ok(())
    }
}

/// Opens `--out` when given, otherwise locks stdout.
pub fn open_output(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}
