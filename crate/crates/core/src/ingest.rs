//! Decimal CSV ingestion with exact scaling.
//!
//! Input files carry one `x,y` decimal pair per line; `#` starts a comment.
//! Coordinates are multiplied by 10^k and rounded half away from zero to
//! integers, all in integer arithmetic, so every downstream guarantee is
//! stated with respect to the rounded coordinates.

use crate::error::InputError;
use crate::geom::{PointSet, MAX_ABS_COORD};

/// Default scale exponent: 10^6 units per input unit.
pub const DEFAULT_SCALE_K: u32 = 6;

/// Largest supported scale exponent.
pub const MAX_SCALE_K: u32 = 9;

/// Parses one decimal literal into a 10^k-scaled integer.
pub fn parse_scaled_decimal(text: &str, k: u32) -> Result<i64, InputError> {
    let bad = |why: &str| InputError::Parse(format!("invalid coordinate {:?}: {}", text, why));
    if k > MAX_SCALE_K {
        return Err(InputError::Parse(format!("scale exponent {} exceeds {}", k, MAX_SCALE_K)));
    }
    let s = text.trim();
    if s.is_empty() {
        return Err(bad("empty field"));
    }
    let (negative, digits) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let mut parts = digits.splitn(2, '.');
    let int_part = parts.next().unwrap_or("");
    let frac_part = parts.next().unwrap_or("");
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad("no digits"));
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(bad("only plain decimal notation is supported"));
    }
    if int_part.len() > 19 {
        return Err(bad("too many integer digits"));
    }
    let mut magnitude: i128 = 0;
    for b in int_part.bytes() {
        magnitude = magnitude * 10 + (b - b'0') as i128;
    }
    magnitude *= 10i128.pow(k);
    for (i, b) in frac_part.bytes().enumerate() {
        let d = (b - b'0') as i128;
        if (i as u32) < k {
            magnitude += d * 10i128.pow(k - 1 - i as u32);
        } else if i as u32 == k {
            // Round half away from zero on the first dropped digit.
            if d >= 5 {
                magnitude += 1;
            }
        } else {
            break;
        }
    }
    if magnitude > MAX_ABS_COORD as i128 {
        return Err(InputError::CoordinateOverflow(i64::MAX));
    }
    let value = if negative { -magnitude } else { magnitude };
    Ok(value as i64)
}

/// Formats a 10^k-scaled integer back to the decimal it represents.
pub fn format_scaled(value: i64, k: u32) -> String {
    let sign = if value < 0 { "-" } else { "" };
    let magnitude = value.unsigned_abs();
    if k == 0 {
        return format!("{}{}", sign, magnitude);
    }
    let base = 10u64.pow(k);
    format!("{}{}.{:0width$}", sign, magnitude / base, magnitude % base, width = k as usize)
}

/// Reads a point CSV, scaling all coordinates by 10^k.
pub fn parse_points_csv(content: &str, k: u32) -> Result<PointSet, InputError> {
    let mut coords = Vec::new();
    for (lineno, raw) in content.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let (x, y) = match (fields.next(), fields.next(), fields.next()) {
            (Some(x), Some(y), None) => (x, y),
            _ => {
                return Err(InputError::Parse(format!(
                    "line {}: expected exactly two comma-separated coordinates",
                    lineno + 1
                )))
            }
        };
        coords.push((parse_scaled_decimal(x, k)?, parse_scaled_decimal(y, k)?));
    }
    PointSet::from_coords(&coords)
}

/// Writes a point set as decimal CSV at scale 10^k.
pub fn points_to_csv(points: &PointSet, k: u32) -> String {
    let mut out = String::new();
    for p in points.points() {
        out.push_str(&format_scaled(p.x, k));
        out.push(',');
        out.push_str(&format_scaled(p.y, k));
        out.push('\n');
    }
    out
}
