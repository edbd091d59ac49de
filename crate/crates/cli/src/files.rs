//! System and roots file formats.
//!
//! A system file starts with a header `vars: x y ...` and then holds one
//! polynomial per line. `#` starts a comment; blank lines are ignored.
//! A roots file holds one point per line as comma-separated rationals.

use std::fs;
use std::path::Path;

use apolar_core::{parse_poly, Error, Point, PolynomialSystem};

use crate::error::CliError;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(code, _)| code)
}

fn parse_error(file: &str, line: usize, column: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        file: file.to_string(),
        line,
        column,
        msg: msg.into(),
    }
}

pub fn load_system(path: &Path) -> Result<PolynomialSystem, CliError> {
    parse_system(&read(path)?, &path.display().to_string())
}

/// Parses system-file text; `file` is used in error messages.
pub fn parse_system(text: &str, file: &str) -> Result<PolynomialSystem, CliError> {
    let mut vars: Option<Vec<String>> = None;
    let mut polys = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let code = strip_comment(raw);
        if code.trim().is_empty() {
            continue;
        }
        let Some(names) = &vars else {
            let Some(rest) = code.trim_start().strip_prefix("vars:") else {
                return Err(parse_error(
                    file,
                    lineno,
                    1,
                    "expected header `vars: <name> ...`",
                ));
            };
            let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            apolar_core::parse::validate_vars(&names)
                .map_err(|e| parse_error(file, lineno, 1, e.to_string()))?;
            vars = Some(names);
            continue;
        };
        let p = parse_poly(code, names).map_err(|e| match e {
            Error::Syntax { pos, msg } => parse_error(file, lineno, pos + 1, msg),
            other => parse_error(file, lineno, 1, other.to_string()),
        })?;
        polys.push(p);
    }
    let Some(vars) = vars else {
        return Err(parse_error(file, 1, 1, "missing header `vars: <name> ...`"));
    };
    if polys.is_empty() {
        return Err(parse_error(file, 1, 1, "no polynomials after header"));
    }
    PolynomialSystem::new(vars, polys).map_err(|e| parse_error(file, 1, 1, e.to_string()))
}

/// Parses a point given on the command line.
pub fn parse_point(text: &str, nvars: usize, what: &str) -> Result<Point, CliError> {
    let p = Point::parse(text).map_err(|e| CliError::Usage(format!("{what} `{text}`: {e}")))?;
    if p.dim() != nvars {
        return Err(CliError::Usage(format!(
            "{what} `{text}` has {} coordinates, system has {nvars} variables",
            p.dim()
        )));
    }
    Ok(p)
}

pub fn load_roots(path: &Path, nvars: usize) -> Result<Vec<Point>, CliError> {
    parse_roots(&read(path)?, &path.display().to_string(), nvars)
}

pub fn parse_roots(text: &str, file: &str, nvars: usize) -> Result<Vec<Point>, CliError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let code = strip_comment(raw);
        if code.trim().is_empty() {
            continue;
        }
        let p = Point::parse(code).map_err(|e| parse_error(file, idx + 1, 1, e.to_string()))?;
        if p.dim() != nvars {
            return Err(parse_error(
                file,
                idx + 1,
                1,
                format!("expected {nvars} coordinates, found {}", p.dim()),
            ));
        }
        out.push(p);
    }
    Ok(out)
}
