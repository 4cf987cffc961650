//! Named polynomials accepted by `--r` and `--outer`.

use anyhow::{anyhow, Context};
use pmcx_core::{Poly, Rational};

/// (name, ascending integer coefficients)
pub const PRESETS: &[(&str, &[i64])] = &[
    ("z", &[0, 1]),
    ("z-1", &[-1, 1]),
    ("z+1", &[1, 1]),
    ("z-2", &[-2, 1]),
    ("z^2-1", &[-1, 0, 1]),
    ("z^2+z-2", &[-2, 1, 1]),
    ("z^2-3z+2", &[2, -3, 1]),
    ("z^2-2z", &[0, -2, 1]),
];

pub fn preset_help() -> String {
    let names: Vec<&str> = PRESETS.iter().map(|(n, _)| *n).collect();
    format!("preset name ({}) or a JSON polynomial", names.join(", "))
}

/// A preset name (whitespace ignored) or a JSON polynomial document.
pub fn parse_poly_arg(arg: &str) -> anyhow::Result<Poly<Rational>> {
    let trimmed = arg.trim();
    if trimmed.starts_with('{') {
        return serde_json::from_str(trimmed)
            .with_context(|| format!("invalid JSON polynomial {trimmed}"));
    }
    let key: String = trimmed.chars().filter(|c| !c.is_whitespace()).collect();
    PRESETS
        .iter()
        .find(|(name, _)| *name == key)
        .map(|(_, coeffs)| Poly::from_ints(coeffs))
        .ok_or_else(|| anyhow!("unknown polynomial {arg:?}; expected {}", preset_help()))
}
