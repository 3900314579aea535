//! Token helpers shared by the line-oriented text formats.

use crate::error::{parse_error, Result};

pub(crate) fn parse_int(tok: &str, line: usize) -> Result<i64> {
    let digits = tok.strip_prefix('-').unwrap_or(tok);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error(line, format!("expected an integer, found `{tok}`")));
    }
    tok.parse().map_err(|_| parse_error(line, format!("integer `{tok}` out of range")))
}

pub(crate) fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error(line, format!("expected a count, found `{tok}`")));
    }
    tok.parse().map_err(|_| parse_error(line, format!("count `{tok}` out of range")))
}

pub(crate) fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}
