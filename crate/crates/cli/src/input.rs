use std::io::Read;
use std::path::{Path, PathBuf};

use posdep::{parse_theory, Error, Theory};

/// Parses the concatenation of `files`, or standard input when there are
/// none. A path of `-` also means standard input.
pub fn read(files: &[PathBuf]) -> Result<Theory, Error> {
    parse_theory(&read_text(files)?)
}

fn read_text(files: &[PathBuf]) -> Result<String, Error> {
    if files.is_empty() {
        return read_stdin();
    }
    let mut text = String::new();
    for path in files {
        let chunk = if path == Path::new("-") {
            read_stdin()?
        } else {
            std::fs::read_to_string(path).map_err(|e| {
                Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
            })?
        };
        text.push_str(&chunk);
        // Keep the last formula of one file from running into the next.
        text.push('\n');
    }
    Ok(text)
}

fn read_stdin() -> Result<String, Error> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Error::InvalidArgument(format!("cannot read standard input: {e}")))?;
    Ok(text)
}
