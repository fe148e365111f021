//! Number formatting and the CSV exports.

use std::io::{self, Write};

use crate::copula::SampleBatch;
use crate::measures::MeasureVector;

/// Significant digits in CSV files; enough to round-trip any `f64`.
pub const CSV_DIGITS: usize = 17;
/// Significant digits in human-readable lines.
pub const HUMAN_DIGITS: usize = 6;

/// Formats like C's `%.{digits}g`: trailing zeros dropped, scientific
/// notation only for very small or very large magnitudes.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent marker");
    let exponent: i32 = exponent.parse().expect("integer exponent");

    if exponent < -5 || exponent >= digits as i32 {
        format!("{}e{exponent}", trim_zeros(mantissa))
    } else {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn csv(x: f64) -> String {
    fmt_sig(x, CSV_DIGITS)
}

pub fn human(x: f64) -> String {
    fmt_sig(x, HUMAN_DIGITS)
}

pub fn write_samples<W: Write>(w: &mut W, batch: &SampleBatch) -> io::Result<()> {
    writeln!(w, "u,v")?;
    for &(u, v) in &batch.pairs {
        writeln!(w, "{},{}", csv(u), csv(v))?;
    }
    Ok(())
}

pub fn write_cloud<W: Write>(w: &mut W, cloud: &[MeasureVector]) -> io::Result<()> {
    writeln!(w, "tau,rho,phi,xi")?;
    for m in cloud {
        writeln!(w, "{},{},{},{}", csv(m.tau), csv(m.rho), csv(m.phi), csv(m.xi))?;
    }
    Ok(())
}

pub fn write_boundary<W: Write>(w: &mut W, rows: &[(f64, f64, f64)]) -> io::Result<()> {
    writeln!(w, "x,lower,upper")?;
    for &(x, lo, hi) in rows {
        writeln!(w, "{},{},{}", csv(x), csv(lo), csv(hi))?;
    }
    Ok(())
}
