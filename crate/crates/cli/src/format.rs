//! Number formatting for tables and plot labels.

const SIGNIFICANT: i32 = 4;

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Four significant digits, trailing zeros dropped. Magnitudes of `1e4` and
/// above, or below `1e-3`, use `d.ddde+XX` notation.
pub fn sig(value: f64) -> String {
    if value == 0.0 {
        return "0".into();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let exponent = value.abs().log10().floor() as i32;
    if !(-3..4).contains(&exponent) {
        let formatted = format!("{:.*e}", (SIGNIFICANT - 1) as usize, value);
        let (mantissa, exp) = formatted.split_once('e').expect("exponent form");
        let exp: i32 = exp.parse().expect("integer exponent");
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    } else {
        let decimals = (SIGNIFICANT - 1 - exponent).max(0) as usize;
        trim_fraction(&format!("{value:.decimals$}")).to_string()
    }
}

pub fn ns_to_ms(ns: f64) -> f64 {
    ns / 1e6
}

/// `"<value> ± <uncertainty>"`, both given in nanoseconds, rendered in ms.
pub fn ms_with_uncertainty(value_ns: f64, uncertainty_ns: f64) -> String {
    format!(
        "{} ± {}",
        sig(ns_to_ms(value_ns)),
        sig(ns_to_ms(uncertainty_ns))
    )
}
