//! Parser for complex CLI literals in `x+yi` / `x-yi` form, with either
//! part optional: `1`, `-2.5`, `3i`, `-i`, `1.5e-3+2e2i`.

use num_complex::Complex64;

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // find the sign separating the real part from the imaginary part:
        // a '+' or '-' that is not the leading sign and not part of an
        // exponent like `1e-3`
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx] as char;
            if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        match split {
            Some(idx) => {
                let re = parse_real(&body[..idx])?;
                let im = parse_signed_coeff(&body[idx..])?;
                Ok(Complex64::new(re, im))
            }
            None => Ok(Complex64::new(0.0, parse_signed_coeff(body)?)),
        }
    } else {
        Ok(Complex64::new(parse_real(&s)?, 0.0))
    }
}

fn parse_real(s: &str) -> Result<f64, String> {
    s.parse::<f64>().map_err(|_| format!("invalid number `{s}`"))
}

/// Imaginary coefficient with an optional bare sign: `+` → 1, `-` → -1.
fn parse_signed_coeff(s: &str) -> Result<f64, String> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        other => parse_real(other),
    }
}
