//! `plot-lemma1` subcommand: gnuplot-compatible TSV of x−1 and ln(x).

use std::io::Write;
use std::path::Path;

use crate::manifest::{open_output, RunManifest};
use crate::EXIT_OK;

use super::{usage_error, CmdResult};

pub fn run(xmin: f64, xmax: f64, points: usize, out: Option<&Path>) -> CmdResult {
    if !(xmin > 0.0 && xmin < xmax && xmin.is_finite() && xmax.is_finite()) {
        return usage_error("require 0 < xmin < xmax");
    }
    if points < 2 {
        return usage_error("--points must be at least 2");
    }

    let mut w = open_output(out)?;
    RunManifest::new("plot-lemma1")
        .arg("xmin", xmin)
        .arg("xmax", xmax)
        .arg("points", points)
        .write_header(&mut w)?;
    writeln!(w, "# columns: x\tx-1\tln(x)")?;

    let step = (xmax - xmin) / (points - 1) as f64;
    for i in 0..points {
        let x = xmin + i as f64 * step;
        writeln!(w, "{x}\t{}\t{}", x - 1.0, x.ln())?;
    }
    w.flush()?;
    Ok(EXIT_OK)
}
