//! Session files for `lochom`: parsing, execution and canonical transcripts.

pub mod exec;
pub mod session;

pub use exec::{render_artinian, render_module, run_session, Config, Transcript};
pub use session::{parse_session, ParseError, Session};

/// Parse and run `text`; parse failures come back as `Err`.
pub fn run_text(text: &str, cfg: &Config) -> Result<Transcript, ParseError> {
    Ok(run_session(&parse_session(text)?, cfg))
}
