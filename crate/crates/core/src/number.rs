//! Canonical rendering of JSON numbers.
//!
//! Numbers are held as binary64 values and rendered with the shortest digit
//! string that round-trips, laid out with the ECMAScript `Number#toString`
//! rules: plain decimal notation for decimal exponents in `-6..=21`,
//! otherwise `d.ddde+N` / `d.ddde-N`. Negative zero renders as `0`.

use std::fmt::Write;

/// Writes the canonical rendering of `value` into `out`.
///
/// `value` must be finite; the parser never produces anything else.
pub fn write_canonical(out: &mut String, value: f64) {
    debug_assert!(value.is_finite());
    if value == 0.0 {
        out.push('0');
        return;
    }
    if value < 0.0 {
        out.push('-');
    }

    // `{:e}` yields the shortest round-trip digits, e.g. "1.2345e-7".
    let sci = format!("{:e}", value.abs());
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("LowerExp always has an exponent");
    let exp: i32 = exp.parse().expect("LowerExp exponent is an integer");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let k = digits.len() as i32;
    // value = 0.d1d2...dk * 10^n
    let n = exp + 1;

    if k <= n && n <= 21 {
        out.push_str(&digits);
        out.extend(std::iter::repeat_n('0', (n - k) as usize));
    } else if 0 < n && n <= 21 {
        let (int, frac) = digits.split_at(n as usize);
        out.push_str(int);
        out.push('.');
        out.push_str(frac);
    } else if -6 < n && n <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-n) as usize));
        out.push_str(&digits);
    } else {
        let (first, rest) = digits.split_at(1);
        out.push_str(first);
        if !rest.is_empty() {
            out.push('.');
            out.push_str(rest);
        }
        let e = n - 1;
        let sign = if e < 0 { '-' } else { '+' };
        write!(out, "e{sign}{}", e.abs()).expect("writing to a String cannot fail");
    }
}

/// Returns the canonical rendering of `value` as a new string.
pub fn canonical(value: f64) -> String {
    let mut out = String::new();
    write_canonical(&mut out, value);
    out
}
