pub mod direction;
pub mod ineq;
pub mod optimize;
pub mod plot;

pub type CmdResult = Result<u8, Box<dyn std::error::Error>>;

/// Prints a usage complaint to stderr and yields the usage exit code.
pub fn usage_error(msg: &str) -> CmdResult {
    eprintln!("usage error: {msg}");
    Ok(crate::EXIT_USAGE)
}
