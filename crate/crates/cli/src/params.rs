//! Parameter bindings and template substitution.
//!
//! Algebra files may contain monomial expressions in named parameters
//! (e.g. `"c^2"`, `"a*c"`, `"1/2*b"`) anywhere a rational is expected.
//! `substitute_parameters` evaluates every entry against a binding map and
//! produces a literal file; unbound names are an error, not a default.

use homdef_core::io::{format_rational, parse_rational, AlgebraFile};
use homdef_core::{rint, Error, Rational, Result};
use std::collections::BTreeMap;

pub type ParamMap = BTreeMap<String, Rational>;

/// Parses `--params` syntax: comma-separated `name=value` pairs with exact
/// rational values, e.g. `a=1,b=0,c=1/2`.
pub fn parse_param_list(s: &str) -> Result<ParamMap> {
    let mut map = ParamMap::new();
    for piece in s.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let Some((name, value)) = piece.split_once('=') else {
            return Err(Error::parse(
                "params",
                format!("expected name=value, got \"{piece}\""),
            ));
        };
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::parse(
                "params",
                format!("invalid parameter name \"{name}\""),
            ));
        }
        map.insert(name.to_string(), parse_rational("params", value)?);
    }
    Ok(map)
}

/// Evaluates one monomial expression: `*`-separated factors, each either a
/// rational literal or a parameter name with an optional `^<power>`.
pub fn evaluate_entry(expr: &str, params: &ParamMap) -> Result<Rational> {
    let mut acc: Rational = rint(1);
    for factor in expr.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::parse(
                "template",
                format!("empty factor in \"{expr}\""),
            ));
        }
        let (name, power) = match factor.split_once('^') {
            Some((n, p)) => {
                let power: u32 = p.trim().parse().map_err(|_| {
                    Error::parse("template", format!("invalid power in \"{factor}\""))
                })?;
                (n.trim(), power)
            }
            None => (factor, 1),
        };
        if name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
            let value = params
                .get(name)
                .ok_or_else(|| Error::UnboundParameter(name.to_string()))?;
            for _ in 0..power {
                acc *= value.clone();
            }
        } else {
            // A literal rational; `^` on literals is not part of the grammar.
            if power != 1 && factor.contains('^') {
                return Err(Error::parse(
                    "template",
                    format!("powers apply to parameter names only, got \"{factor}\""),
                ));
            }
            acc *= parse_rational("template", name)?;
        }
    }
    Ok(acc)
}

fn substitute_string(s: &str, params: &ParamMap) -> Result<String> {
    Ok(format_rational(&evaluate_entry(s, params)?))
}

/// Substitutes parameter bindings into every rational slot of an algebra
/// file, producing a literal description. Errors with `UnboundParameter`
/// when the template mentions a name the map does not bind.
pub fn substitute_parameters(template: &AlgebraFile, params: &ParamMap) -> Result<AlgebraFile> {
    let mut out = template.clone();
    for entry in &mut out.bracket {
        for v in &mut entry.value {
            *v = substitute_string(v, params)?;
        }
    }
    for row in &mut out.alpha {
        for v in row {
            *v = substitute_string(v, params)?;
        }
    }
    Ok(out)
}

/// The bundled parametric family: bracket `[e1,e3] = e2`, `[e3,e3] = e1`
/// with the three-parameter twisting map
/// `alpha(e1) = c^2·e1 + a·c·e2`, `alpha(e2) = c^3·e2`,
/// `alpha(e3) = a·e1 + b·e2 + c·e3`.
pub const PARAMETRIC_TEMPLATE_JSON: &str = r#"{
  "dim": 3,
  "bracket": [
    { "i": 1, "j": 3, "value": ["0", "1", "0"] },
    { "i": 3, "j": 3, "value": ["1", "0", "0"] }
  ],
  "alpha": [
    ["c^2", "0",   "a"],
    ["a*c", "c^3", "b"],
    ["0",   "0",   "c"]
  ]
}"#;

/// Decodes the bundled template (infallible modulo a broken build).
pub fn parametric_template() -> AlgebraFile {
    serde_json::from_str(PARAMETRIC_TEMPLATE_JSON).expect("bundled template parses")
}
