//! Text formats for polygon amplitudes and dense operators.
//!
//! Amplitude CSV: header `polygon_index,vertex,re,im`, then one row per
//! polygon vertex. Every polygon of the tessellation must be listed with
//! exactly its vertices. Dense CSV: one matrix row per line, entries
//! written `re+imj` (or `re-imj`), negative zero printed as zero.

use std::collections::BTreeMap;
use std::fmt::Write;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{Amplitude, PolygonStateVector, WalkError, WalkResult};
use crate::tessellation::Tessellation;

pub const AMPLITUDE_HEADER: &str = "polygon_index,vertex,re,im";

pub fn write_amplitudes(vectors: &[PolygonStateVector]) -> String {
    let mut s = String::from(AMPLITUDE_HEADER);
    s.push('\n');
    for (i, v) in vectors.iter().enumerate() {
        for (x, a) in v.entries() {
            writeln!(s, "{i},{x},{},{}", fmt_f64(a.re), fmt_f64(a.im)).unwrap();
        }
    }
    s
}

/// Reads one vector per polygon of `t`, in polygon order.
pub fn parse_amplitudes(text: &str, t: &Tessellation) -> WalkResult<Vec<PolygonStateVector>> {
    let perr = |line: usize, msg: &str| WalkError::Parse(format!("line {line}: {msg}"));
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, h)) if h.trim() == AMPLITUDE_HEADER => {}
        _ => return Err(perr(1, "missing header")),
    }
    let mut rows: BTreeMap<usize, BTreeMap<usize, Complex64>> = BTreeMap::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(perr(no + 1, "expected 4 fields"));
        }
        let idx = |f: &str| f.parse::<usize>().map_err(|_| perr(no + 1, "bad index"));
        let num = |f: &str| f.parse::<f64>().map_err(|_| perr(no + 1, "bad number"));
        let (p, v) = (idx(fields[0])?, idx(fields[1])?);
        let a = Complex64::new(num(fields[2])?, num(fields[3])?);
        if rows.entry(p).or_default().insert(v, a).is_some() {
            return Err(perr(no + 1, "repeated vertex"));
        }
    }
    if let Some(&extra) = rows.keys().find(|&&p| p >= t.polygons.len()) {
        return Err(WalkError::Parse(format!("polygon index {extra} out of range")));
    }
    t.polygons
        .iter()
        .enumerate()
        .map(|(i, poly)| {
            let r = rows.remove(&i).unwrap_or_default();
            if !r.keys().copied().eq(poly.vertices().iter().copied()) {
                return Err(WalkError::VectorPolygonMismatch { index: i });
            }
            PolygonStateVector::new(poly.clone(), r.into_values().collect())
        })
        .collect()
}

fn fmt_f64(x: f64) -> String {
    // -0.0 prints as "-0"
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x}")
}

fn fmt_complex(a: Amplitude) -> String {
    let im = if a.im == 0.0 { 0.0 } else { a.im };
    let sign = if im.is_sign_negative() { '-' } else { '+' };
    format!("{}{sign}{}j", fmt_f64(a.re), fmt_f64(im.abs()))
}

pub fn write_dense(m: &DMatrix<Amplitude>) -> String {
    let mut s = String::new();
    for r in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|c| fmt_complex(m[(r, c)])).collect();
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

/// Parses one `re+imj` entry.
pub fn parse_complex(s: &str) -> Option<Complex64> {
    let body = s.trim().strip_suffix('j')?;
    // split at the last sign that is not part of an exponent or the leading sign
    let bytes = body.as_bytes();
    let cut = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'))?;
    let re = body[..cut].parse().ok()?;
    let im = body[cut..].parse().ok()?;
    Some(Complex64::new(re, im))
}

pub fn parse_dense(text: &str) -> WalkResult<DMatrix<Amplitude>> {
    let rows: Vec<Vec<Complex64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| {
            l.split(',')
                .map(|e| {
                    parse_complex(e).ok_or_else(|| WalkError::Parse(format!("row {i}: bad entry `{e}`")))
                })
                .collect()
        })
        .collect::<WalkResult<_>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(WalkError::Parse("matrix is not square".into()));
    }
    Ok(DMatrix::from_fn(n, n, |r, c| rows[r][c]))
}
