//! Scalar text syntax `a+bi+cj+dk`.
//!
//! Zero terms may be omitted, a bare unit means coefficient one (`-j`), and
//! coefficients accept decimal or scientific notation. The writer emits the
//! shortest decimal that reads back to the identical `f64`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quat::Quaternion;

fn write_real(out: &mut String, v: f64) {
    let a = v.abs();
    if a != 0.0 && !(1e-5..1e16).contains(&a) {
        out.push_str(&format!("{v:e}"));
    } else {
        out.push_str(&format!("{v}"));
    }
}

/// Canonical text of `q`.
pub fn format_quaternion(q: &Quaternion) -> String {
    let mut out = String::new();
    let terms = [(q.w, ""), (q.x, "i"), (q.y, "j"), (q.z, "k")];
    for (c, unit) in terms {
        if c == 0.0 {
            continue;
        }
        if !out.is_empty() && c > 0.0 {
            out.push('+');
        }
        write_real(&mut out, c);
        out.push_str(unit);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses one scalar token.
pub fn parse_quaternion(s: &str) -> Result<Quaternion> {
    let bytes = s.trim().as_bytes();
    let err = |msg: String| Error::parse(0, format!("{msg} in scalar '{}'", s.trim()));
    if bytes.is_empty() {
        return Err(err("empty token".into()));
    }
    let mut comps: [Option<f64>; 4] = [None; 4];
    let mut pos = 0;
    let mut first = true;
    while pos < bytes.len() {
        let mut sign = 1.0;
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                sign = -1.0;
                pos += 1
            }
            _ if !first => return Err(err(format!("expected sign at offset {pos}"))),
            _ => {}
        }
        first = false;

        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'.') {
            pos += 1;
        }
        if pos > start && pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
            let mut p = pos + 1;
            if p < bytes.len() && (bytes[p] == b'+' || bytes[p] == b'-') {
                p += 1;
            }
            let digits = p;
            while p < bytes.len() && bytes[p].is_ascii_digit() {
                p += 1;
            }
            if p == digits {
                return Err(err("malformed exponent".into()));
            }
            pos = p;
        }
        let number = &s.trim()[start..pos];
        let coeff = if number.is_empty() {
            None
        } else {
            Some(
                number
                    .parse::<f64>()
                    .map_err(|_| err(format!("bad number '{number}'")))?,
            )
        };

        let slot = match bytes.get(pos) {
            Some(b'i') => {
                pos += 1;
                1
            }
            Some(b'j') => {
                pos += 1;
                2
            }
            Some(b'k') => {
                pos += 1;
                3
            }
            Some(b'+') | Some(b'-') | None => 0,
            Some(c) => return Err(err(format!("unexpected character '{}'", *c as char))),
        };
        let value = match (coeff, slot) {
            (Some(v), _) => v,
            (None, 0) => return Err(err("missing coefficient".into())),
            (None, _) => 1.0,
        };
        if !value.is_finite() {
            return Err(err("non-finite coefficient".into()));
        }
        if comps[slot].is_some() {
            return Err(err("repeated term".into()));
        }
        comps[slot] = Some(sign * value);
    }
    Ok(Quaternion::new(
        comps[0].unwrap_or(0.0),
        comps[1].unwrap_or(0.0),
        comps[2].unwrap_or(0.0),
        comps[3].unwrap_or(0.0),
    ))
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_quaternion(self))
    }
}

impl FromStr for Quaternion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_quaternion(s)
    }
}
