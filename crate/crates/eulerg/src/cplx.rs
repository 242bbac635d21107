//! The universal scalar type and its textual form.
//!
//! Complex literals follow the grammar `RE`, `RE+IMi`, `RE-IMi`, `IMi`
//! with decimal (optionally exponent-notated) reals. Values printed by
//! [`format_cplx`] round-trip bit-identically through [`parse_cplx`].

use crate::{Error, Result};

/// Complex scalar, double precision. Every parameter, argument and value
/// in the crate is one of these.
pub type Cplx = num_complex::Complex64;

/// Rejects NaN/Inf components at API boundaries.
pub fn require_finite(z: Cplx, what: &'static str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParams(what))
    }
}

/// Prints with 17 significant digits per component, e.g. `1.5e0-2.25e0i`.
pub fn format_cplx(z: Cplx) -> String {
    let re = format_f64(z.re);
    if z.im == 0.0 && z.im.is_sign_positive() {
        return re;
    }
    if z.im >= 0.0 {
        format!("{re}+{}i", format_f64(z.im))
    } else {
        format!("{re}-{}i", format_f64(-z.im))
    }
}

/// 17 significant digits, exponent notation; lossless for f64.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Parses the `RE`, `RE±IMi`, `IMi` literal forms.
pub fn parse_cplx(text: &str) -> Result<Cplx> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty complex literal".into()));
    }
    let bad = |msg: &str| Error::Parse(format!("bad complex literal {s:?}: {msg}"));

    // Find a top-level '+'/'-' separator: one that is not the leading sign
    // and not part of an exponent.
    let bytes = s.as_bytes();
    let mut split = None;
    for (i, &c) in bytes.iter().enumerate().skip(1) {
        if (c == b'+' || c == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
        }
    }
    let parse_real = |t: &str| -> Result<f64> {
        t.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| bad("not a finite decimal real"))
    };
    match split {
        Some(i) => {
            let (re_s, im_s) = (&s[..i], &s[i..]);
            let im_s = im_s
                .strip_suffix('i')
                .ok_or_else(|| bad("imaginary part must end in 'i'"))?;
            // "+i"/"-i" shorthand is not in the grammar; require digits.
            Ok(Cplx::new(parse_real(re_s)?, parse_real(im_s)?))
        }
        None => {
            if let Some(im_s) = s.strip_suffix('i') {
                Ok(Cplx::new(0.0, parse_real(im_s)?))
            } else {
                Ok(Cplx::new(parse_real(s)?, 0.0))
            }
        }
    }
}

/// Parses a comma-separated list of complex literals; empty input is the
/// empty list.
pub fn parse_cplx_list(text: &str) -> Result<Vec<Cplx>> {
    let s = text.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_cplx).collect()
}
