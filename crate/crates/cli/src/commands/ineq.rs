//! `ineq` subcommand: seeded fuzz campaign over the inequality family.

use std::io::Write;
use std::path::Path;

use ellnorm::generators;
use ellnorm::inequalities::{
    check_cauchy_schwarz, check_generalized_cs, check_holder, check_log_bound,
    check_transpose_spectral, check_weighted_am_gm, check_young,
};
use ellnorm::InequalityReport;
use rand::Rng;

use crate::manifest::{open_output, RunManifest};
use crate::{IneqName, EXIT_OK, EXIT_VIOLATION};

use super::{usage_error, CmdResult};

const SINGLE_NAMES: [IneqName; 7] = [
    IneqName::LogBound,
    IneqName::AmGm,
    IneqName::Young,
    IneqName::Holder,
    IneqName::CauchySchwarz,
    IneqName::TransposeSpectral,
    IneqName::GeneralizedCs,
];

fn label(name: IneqName) -> &'static str {
    match name {
        IneqName::LogBound => "log_bound",
        IneqName::AmGm => "am_gm",
        IneqName::Young => "young",
        IneqName::Holder => "holder",
        IneqName::CauchySchwarz => "cauchy_schwarz",
        IneqName::TransposeSpectral => "transpose_spectral",
        IneqName::GeneralizedCs => "generalized_cs",
        IneqName::All => "all",
    }
}

/// Builds the seeded random case `trial` for one inequality and checks it.
pub fn run_case(
    name: IneqName,
    dim: usize,
    master_seed: u64,
    trial: u64,
) -> Result<InequalityReport, ellnorm::Error> {
    // decorrelate streams across inequality names
    let name_id = SINGLE_NAMES.iter().position(|&n| n == name).unwrap_or(0) as u64;
    let name_seed = generators::case_rng(master_seed, 1000 + name_id, 0).gen::<u64>();
    match name {
        IneqName::LogBound => {
            let mut rng = generators::case_rng(name_seed, 0, trial);
            check_log_bound(generators::log_uniform::<f64>(&mut rng))
        }
        IneqName::AmGm => {
            let a = generators::gen_positive_vector::<f64>(dim, name_seed, trial);
            let w = generators::gen_weights::<f64>(dim, name_seed, trial);
            check_weighted_am_gm(&a, &w)
        }
        IneqName::Young => {
            let mut rng = generators::case_rng(name_seed, 0, trial);
            let x = generators::log_uniform::<f64>(&mut rng);
            let y = generators::log_uniform::<f64>(&mut rng);
            let p = generators::gen_exponent::<f64>(name_seed, trial);
            check_young(x, y, p)
        }
        IneqName::Holder => {
            let x = generators::gen_signed_vector::<f64>(dim, name_seed, 2 * trial);
            let y = generators::gen_signed_vector::<f64>(dim, name_seed, 2 * trial + 1);
            let p = generators::gen_exponent::<f64>(name_seed, trial);
            check_holder(&x, &y, p)
        }
        IneqName::CauchySchwarz => {
            let x = generators::gen_signed_vector::<f64>(dim, name_seed, 2 * trial);
            let y = generators::gen_signed_vector::<f64>(dim, name_seed, 2 * trial + 1);
            check_cauchy_schwarz(&x, &y)
        }
        IneqName::TransposeSpectral => {
            let (rows, cols) = generators::gen_shape(dim, name_seed, trial);
            let m = generators::gen_matrix::<f64>(rows, cols, name_seed, trial);
            check_transpose_spectral(&m)
        }
        IneqName::GeneralizedCs => {
            let a = generators::gen_spd::<f64>(dim, name_seed, trial);
            let x = generators::gen_signed_vector::<f64>(dim, name_seed, 2 * trial);
            let y = generators::gen_signed_vector::<f64>(dim, name_seed, 2 * trial + 1);
            check_generalized_cs(&a, &x, &y)
        }
        IneqName::All => unreachable!("expanded by the caller"),
    }
}

pub fn run(name: IneqName, trials: u64, seed: u64, dim: usize, out: Option<&Path>) -> CmdResult {
    if trials == 0 {
        return usage_error("--trials must be at least 1");
    }
    if dim == 0 {
        return usage_error("--dim must be at least 1");
    }

    let names: Vec<IneqName> = match name {
        IneqName::All => SINGLE_NAMES.to_vec(),
        single => vec![single],
    };

    let mut w = open_output(out)?;
    RunManifest::new("ineq")
        .arg("name", label(name))
        .arg("trials", trials)
        .arg("seed", seed)
        .arg("dim", dim)
        .seed(seed)
        .write_header(&mut w)?;
    writeln!(w, "# columns: trial,lhs,rhs,gap,holds,equality_predicted,equality_observed")?;

    let mut total_violations: u64 = 0;
    for &n in &names {
        writeln!(w, "# inequality: {}", label(n))?;
        let mut min_gap = f64::INFINITY;
        let mut violations: u64 = 0;
        for trial in 0..trials {
            let r = run_case(n, dim, seed, trial)?;
            min_gap = min_gap.min(r.gap);
            if !r.holds || (r.equality_predicted && !r.equality_observed) {
                violations += 1;
            }
            writeln!(
                w,
                "{trial},{},{},{},{},{},{}",
                r.lhs, r.rhs, r.gap, r.holds, r.equality_predicted, r.equality_observed
            )?;
        }
        writeln!(w, "# summary: name={} min_gap={min_gap} violations={violations}", label(n))?;
        total_violations += violations;
    }
    writeln!(w, "# total violations: {total_violations}")?;
    w.flush()?;
    Ok(if total_violations == 0 { EXIT_OK } else { EXIT_VIOLATION })
}
