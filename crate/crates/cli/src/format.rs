//! Locale-free number formatting shared by reports and CSV.

pub const DEFAULT_PRECISION: usize = 12;
pub const MIN_PRECISION: usize = 6;
pub const MAX_PRECISION: usize = 17;

/// `%g`-style: `digits` significant digits, trailing zeros dropped,
/// scientific notation below `1e-4` and from `10^digits` up. `-0` prints
/// as `0`.
pub fn num(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("exponent");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{}", trim(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
