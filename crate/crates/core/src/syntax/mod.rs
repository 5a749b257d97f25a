//! Text frontend: parse an expression, evaluate it against the library, and
//! render the result as text, LaTeX, or JSON.
//!
//! `*` is the Cauchy product and `#` the Hadamard product; they share one
//! precedence level and associate to the left.

mod eval;
mod lexer;
mod parser;

use std::fmt;

pub use eval::{eval, EvalOptions};
pub use parser::{parse, BinOp, Expr, ExprKind, Func};

use crate::hw::NormalForm;
use crate::oracle::TruncatedSeries;
use crate::scalar::Scalar;
use crate::series::RationalSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprError {
    Syntax { col: usize, msg: String },
    Semantic { col: usize, msg: String },
}

impl ExprError {
    pub fn syntax(col: usize, msg: impl Into<String>) -> Self {
        ExprError::Syntax { col, msg: msg.into() }
    }

    pub fn semantic(col: usize, msg: impl Into<String>) -> Self {
        ExprError::Semantic { col, msg: msg.into() }
    }

    pub fn is_syntax(&self) -> bool {
        matches!(self, ExprError::Syntax { .. })
    }

    pub fn col(&self) -> usize {
        match self {
            ExprError::Syntax { col, .. } | ExprError::Semantic { col, .. } => *col,
        }
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax { col, msg } => write!(f, "syntax error at column {col}: {msg}"),
            ExprError::Semantic { col, msg } => write!(f, "error at column {col}: {msg}"),
        }
    }
}

impl std::error::Error for ExprError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Series(RationalSeries),
    Truncated(TruncatedSeries),
    Normal(NormalForm),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Series(_) => "series",
            Value::Truncated(_) => "expansion",
            Value::Normal(_) => "operator",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected text, latex or json)")),
        }
    }
}

/// Parses and evaluates. Input that starts with `{` is read as a series in
/// the JSON schema of [`RationalSeries::to_json`].
pub fn evaluate(input: &str, opts: &EvalOptions) -> Result<Value, ExprError> {
    if input.trim_start().starts_with('{') {
        let f = RationalSeries::from_json(input).map_err(|e| match e {
            crate::Error::Json(_) | crate::Error::BadScalar(_) => ExprError::syntax(1, e.to_string()),
            other => ExprError::semantic(1, other.to_string()),
        })?;
        return Ok(Value::Series(f));
    }
    eval(&parse(input)?, opts)
}

/// Reads text or JSON back into a series; constants become `c·z^0`.
pub fn parse_series(input: &str, opts: &EvalOptions) -> Result<RationalSeries, ExprError> {
    match evaluate(input, opts)? {
        Value::Series(f) => Ok(f),
        Value::Scalar(c) => Ok(RationalSeries::constant(opts.mode, c)),
        other => Err(ExprError::semantic(1, format!("expected a series, found {}", other.kind()))),
    }
}

fn latex_window(t: &TruncatedSeries) -> String {
    let mut parts = Vec::new();
    for (e, c) in t.iter() {
        if c.is_zero() {
            continue;
        }
        let coeff = if c.is_compound() {
            format!("({})", c.to_latex())
        } else {
            c.to_latex()
        };
        parts.push(format!("{coeff} z^{{{e}}}"));
    }
    let top = t.offset() + t.len() as i64;
    parts.push(format!("O(z^{{{top}}})"));
    parts.join(" + ")
}

/// Canonical rendering of an evaluation result.
pub fn render(v: &Value, format: Format) -> String {
    match (v, format) {
        (Value::Scalar(c), Format::Text) => c.to_string(),
        (Value::Scalar(c), Format::Latex) => c.to_latex(),
        (Value::Scalar(c), Format::Json) => serde_json::json!({ "scalar": c.to_string() }).to_string(),
        (Value::Series(f), Format::Text) => f.to_text(),
        (Value::Series(f), Format::Latex) => f.to_latex(),
        (Value::Series(f), Format::Json) => f.to_json(),
        (Value::Truncated(t), Format::Text) => t.to_lines().trim_end().to_string() + "\n",
        (Value::Truncated(t), Format::Latex) => latex_window(t),
        (Value::Truncated(t), Format::Json) => {
            let coeffs: Vec<String> = t.coeffs().iter().map(|c| c.to_string()).collect();
            serde_json::json!({ "offset": t.offset(), "coeffs": coeffs }).to_string()
        }
        (Value::Normal(x), Format::Text) => x.to_string(),
        (Value::Normal(x), Format::Latex) => x.to_latex(),
        (Value::Normal(x), Format::Json) => x.to_json(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{BasisTerm, Mode};

    #[test]
    fn series_round_trip() {
        let opts = EvalOptions {
            mode: Mode::Laurent,
            depth: 8,
        };
        let f = RationalSeries::from_terms(
            Mode::Laurent,
            [
                (BasisTerm::Monomial(-3), "-2/5*i".parse().unwrap()),
                (BasisTerm::Monomial(0), "-1+i".parse().unwrap()),
                (BasisTerm::pole("-1/2".parse().unwrap(), 3), "7/3".parse().unwrap()),
                (BasisTerm::pole("-i".parse().unwrap(), 1), "1".parse().unwrap()),
                (BasisTerm::pole("2-3*i".parse().unwrap(), 2), "-3/4-i".parse().unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(parse_series(&f.to_text(), &opts).unwrap(), f);
        assert_eq!(parse_series(&f.to_json(), &opts).unwrap(), f);
        assert_eq!(parse_series("0", &opts).unwrap(), RationalSeries::zero(Mode::Laurent));
    }

    #[test]
    fn formats() {
        let opts = EvalOptions::default();
        let v = evaluate("1/(1-2*z) # 1/(1-3*z)", &opts).unwrap();
        assert_eq!(render(&v, Format::Latex), "\\frac{1}{(1-6z)^{1}}");
        assert_eq!(
            render(&v, Format::Json),
            r#"{"mode":"power","monomials":[],"poles":[{"alpha":"6","m":1,"c":"1"}]}"#
        );
        let v = evaluate("coeff(1/(1-2*z)^2, 3)", &opts).unwrap();
        assert_eq!(render(&v, Format::Json), r#"{"scalar":"32"}"#);
        let v = evaluate("expand(1/(1-2*z), 3)", &opts).unwrap();
        assert_eq!(render(&v, Format::Json), r#"{"coeffs":["1","2","4"],"offset":0}"#);
        assert_eq!(render(&v, Format::Latex), "1 z^{0} + 2 z^{1} + 4 z^{2} + O(z^{3})");
        let v = evaluate("no(\"aaA\")", &opts).unwrap();
        assert_eq!(render(&v, Format::Latex), "(a^\\dagger)^{1} a^{2} + 2 a^{1}");
    }

    #[test]
    fn json_input_errors_are_syntax_errors() {
        let err = evaluate("{\"mode\": 3}", &EvalOptions::default()).unwrap_err();
        assert!(err.is_syntax());
    }
}
