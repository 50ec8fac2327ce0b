//! Ideal input files.
//!
//! ```text
//! # twisted cubic
//! ring n=4 vars x1..x4
//! coeff rational
//! prime
//! dim 2
//! x1*x3 - x2^2
//! x2*x4 - x3^2
//! x1*x4 - x2*x3
//! ```
//!
//! `coeff` defaults to `puiseux`. A line `component f; g; ...` supplies the
//! generators of one minimal prime.

use std::fmt::Write as _;
use std::path::Path;

use tropgen_core::text::{parse_polynomial, VarLayout};
use tropgen_core::{Coefficient, Error, Ideal, Polynomial, PuiseuxScalar, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffMode {
    Rational,
    Puiseux,
}

impl CoeffMode {
    pub fn name(self) -> &'static str {
        match self {
            CoeffMode::Rational => "rational",
            CoeffMode::Puiseux => "puiseux",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Input<C: Coefficient> {
    pub n: usize,
    pub coeff: CoeffMode,
    pub prime: bool,
    pub dim: Option<usize>,
    pub ideal: Ideal<C>,
    pub components: Vec<Ideal<C>>,
}

#[derive(Clone, Debug)]
pub enum AnyInput {
    Rational(Input<Rational>),
    Puiseux(Input<PuiseuxScalar>),
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_ring(rest: &str, line: usize) -> Result<usize> {
    let mut words = rest.split_whitespace();
    let n = words
        .next()
        .and_then(|w| w.strip_prefix("n="))
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| parse_err(line, 6, "expected `n=<positive integer>`"))?;
    match (words.next(), words.next(), words.next()) {
        (None, _, _) => Ok(n),
        (Some("vars"), Some(range), None) => {
            let expected = if n == 1 { "x1".to_string() } else { format!("x1..x{n}") };
            if range == expected {
                Ok(n)
            } else {
                Err(parse_err(line, 1, format!("expected `vars {expected}`")))
            }
        }
        _ => Err(parse_err(line, 1, "expected `ring n=<n> vars x1..xn`")),
    }
}

fn to_rational(f: &Polynomial<PuiseuxScalar>, line: usize) -> Result<Polynomial<Rational>> {
    f.to_rational()
        .ok_or_else(|| parse_err(line, 1, "`t` is not allowed with `coeff rational`"))
}

/// Parse the text of an input file.
pub fn parse_input(text: &str) -> Result<AnyInput> {
    let mut n: Option<usize> = None;
    let mut coeff = CoeffMode::Puiseux;
    let mut prime = false;
    let mut dim = None;
    let mut gens: Vec<(usize, Polynomial<PuiseuxScalar>)> = Vec::new();
    let mut comps: Vec<(usize, Vec<Polynomial<PuiseuxScalar>>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (head, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match head {
            "ring" => {
                if n.is_some() {
                    return Err(parse_err(line, 1, "duplicate ring header"));
                }
                n = Some(parse_ring(rest, line)?);
                continue;
            }
            "coeff" => {
                coeff = match rest {
                    "rational" => CoeffMode::Rational,
                    "puiseux" => CoeffMode::Puiseux,
                    _ => return Err(parse_err(line, 7, "expected `rational` or `puiseux`")),
                };
                continue;
            }
            "prime" if rest.is_empty() => {
                prime = true;
                continue;
            }
            "dim" => {
                dim = Some(
                    rest.parse::<usize>()
                        .map_err(|_| parse_err(line, 5, "expected a nonnegative integer"))?,
                );
                continue;
            }
            _ => {}
        }
        let Some(n) = n else {
            return Err(parse_err(line, 1, "generator before the `ring` header"));
        };
        let layout = VarLayout::new(n, 0);
        if head == "component" {
            let polys = rest
                .split(';')
                .map(|s| s.trim())
                .filter(|s| !s.is_empty())
                .map(|s| parse_polynomial(s, &layout, line))
                .collect::<Result<Vec<_>>>()?;
            if polys.is_empty() {
                return Err(parse_err(line, 1, "empty component"));
            }
            comps.push((line, polys));
        } else {
            gens.push((line, parse_polynomial(body, &layout, line)?));
        }
    }
    let n = n.ok_or_else(|| parse_err(1, 1, "missing `ring` header"))?;
    if gens.is_empty() {
        return Err(parse_err(1, 1, "no generators"));
    }
    match coeff {
        CoeffMode::Puiseux => {
            let ideal = Ideal::new(n, gens.into_iter().map(|(_, f)| f).collect())?;
            let components = comps
                .into_iter()
                .map(|(_, fs)| Ideal::new(n, fs))
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyInput::Puiseux(Input {
                n,
                coeff,
                prime,
                dim,
                ideal,
                components,
            }))
        }
        CoeffMode::Rational => {
            let gens = gens
                .iter()
                .map(|(l, f)| to_rational(f, *l))
                .collect::<Result<Vec<_>>>()?;
            let ideal = Ideal::new(n, gens)?;
            let components = comps
                .iter()
                .map(|(l, fs)| {
                    let fs = fs.iter().map(|f| to_rational(f, *l)).collect::<Result<Vec<_>>>()?;
                    Ideal::new(n, fs)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyInput::Rational(Input {
                n,
                coeff,
                prime,
                dim,
                ideal,
                components,
            }))
        }
    }
}

pub fn read_input(path: &Path) -> std::result::Result<AnyInput, crate::CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| crate::CliError::Io(path.display().to_string(), e))?;
    Ok(parse_input(&text)?)
}

/// Input file text for `input`; [`parse_input`] reads it back to the same
/// generators.
pub fn print_input<C: Coefficient>(input: &Input<C>) -> String {
    let layout = VarLayout::new(input.n, 0);
    let mut out = String::new();
    if input.n == 1 {
        let _ = writeln!(out, "ring n=1 vars x1");
    } else {
        let _ = writeln!(out, "ring n={} vars x1..x{}", input.n, input.n);
    }
    let _ = writeln!(out, "coeff {}", input.coeff.name());
    if input.prime {
        let _ = writeln!(out, "prime");
    }
    if let Some(d) = input.dim {
        let _ = writeln!(out, "dim {d}");
    }
    for f in input.ideal.generators() {
        let _ = writeln!(out, "{}", f.display_with(&layout));
    }
    for c in &input.components {
        let parts: Vec<String> = c.generators().iter().map(|f| f.display_with(&layout)).collect();
        let _ = writeln!(out, "component {}", parts.join("; "));
    }
    out
}
