use super::parser::{BinOp, Expr, ExprKind, Func};
use super::{ExprError, Value};
use crate::hadamard::{diag_apply, dilate, hadamard};
use crate::hw::{bf_apply, lower, normal_order, raise, NormalForm};
use crate::oracle::truncate;
use crate::scalar::Scalar;
use crate::series::{Mode, RationalSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalOptions {
    pub mode: Mode,
    /// Window length used by `expand(e)` without an explicit length.
    pub depth: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            mode: Mode::Power,
            depth: crate::oracle::DEFAULT_DEPTH,
        }
    }
}

/// Evaluates an expression that must denote a constant.
pub(crate) fn eval_scalar(e: &Expr) -> Result<Scalar, ExprError> {
    let opts = EvalOptions {
        mode: Mode::Laurent,
        ..EvalOptions::default()
    };
    match eval(e, &opts)? {
        Value::Scalar(c) => Ok(c),
        other => Err(ExprError::semantic(e.col, format!("expected a scalar, found {}", other.kind()))),
    }
}

fn lift(col: usize, r: crate::Result<RationalSeries>) -> Result<RationalSeries, ExprError> {
    r.map_err(|err| ExprError::semantic(col, err.to_string()))
}

fn as_series(v: Value, col: usize, mode: Mode) -> Result<RationalSeries, ExprError> {
    match v {
        Value::Scalar(c) => Ok(RationalSeries::constant(mode, c)),
        Value::Series(f) => Ok(f),
        other => Err(ExprError::semantic(col, format!("expected a series, found {}", other.kind()))),
    }
}

fn as_operator(v: Value, col: usize) -> Result<NormalForm, ExprError> {
    match v {
        Value::Scalar(c) => Ok(NormalForm::identity().scale(&c)),
        Value::Normal(x) => Ok(x),
        other => Err(ExprError::semantic(col, format!("expected an operator, found {}", other.kind()))),
    }
}

pub fn eval(e: &Expr, opts: &EvalOptions) -> Result<Value, ExprError> {
    let mode = opts.mode;
    let col = e.col;
    match &e.kind {
        ExprKind::Num(c) => Ok(Value::Scalar(c.clone())),
        ExprKind::Power(n) => Ok(Value::Series(lift(col, RationalSeries::monomial(mode, *n))?)),
        ExprKind::PoleFactor { alpha, mult } => {
            let a = eval_scalar(alpha)?;
            Ok(Value::Series(lift(col, RationalSeries::pole_power(mode, a, *mult))?))
        }
        ExprKind::Neg(x) => {
            let minus = Scalar::from(-1);
            Ok(match eval(x, opts)? {
                Value::Scalar(c) => Value::Scalar(-c),
                Value::Series(f) => Value::Series(f.neg()),
                Value::Truncated(t) => Value::Truncated(t.scale(&minus)),
                Value::Normal(n) => Value::Normal(n.scale(&minus)),
            })
        }
        ExprKind::Binary { op, lhs, rhs } => {
            let l = eval(lhs, opts)?;
            let r = eval(rhs, opts)?;
            binary(*op, l, r, rhs, col, mode)
        }
        ExprKind::Call(f) => call(f, col, opts),
    }
}

fn binary(op: BinOp, l: Value, r: Value, rhs: &Expr, col: usize, mode: Mode) -> Result<Value, ExprError> {
    use Value::*;
    let mismatch = |l: &Value, r: &Value| {
        ExprError::semantic(col, format!("cannot apply {op:?} to {} and {}", l.kind(), r.kind()))
    };
    match op {
        BinOp::Add | BinOp::Sub => {
            let sign = if op == BinOp::Sub { crate::Scalar::from(-1) } else { crate::Scalar::one() };
            match (l, r) {
                (Scalar(a), Scalar(b)) => Ok(Scalar(a + sign * b)),
                (Truncated(a), Truncated(b)) => a
                    .add(&b.scale(&sign))
                    .map(Truncated)
                    .map_err(|err| ExprError::semantic(col, err.to_string())),
                (l @ (Normal(_) | Scalar(_)), r @ (Normal(_) | Scalar(_))) => {
                    let a = as_operator(l, col)?;
                    let b = as_operator(r, col)?;
                    Ok(Normal(a.add(&b.scale(&sign))))
                }
                (l @ (Series(_) | Scalar(_)), r @ (Series(_) | Scalar(_))) => {
                    let a = as_series(l, col, mode)?;
                    let b = as_series(r, col, mode)?;
                    Ok(Series(lift(col, a.add(&b.scale(&sign)))?))
                }
                (l, r) => Err(mismatch(&l, &r)),
            }
        }
        BinOp::Mul => match (l, r) {
            (Scalar(a), Scalar(b)) => Ok(Scalar(a * b)),
            (Scalar(c), Series(f)) | (Series(f), Scalar(c)) => Ok(Series(f.scale(&c))),
            (Scalar(c), Normal(x)) | (Normal(x), Scalar(c)) => Ok(Normal(x.scale(&c))),
            (Scalar(c), Truncated(t)) | (Truncated(t), Scalar(c)) => Ok(Truncated(t.scale(&c))),
            (Series(f), Series(g)) => Ok(Series(lift(col, f.cauchy_mul(&g))?)),
            (Normal(x), Normal(y)) => Ok(Normal(x.mul(&y))),
            (Normal(x), Series(f)) => Ok(Series(bf_apply(&x, &f))),
            (Truncated(a), Truncated(b)) => a
                .convolve(&b)
                .map(Truncated)
                .map_err(|err| ExprError::semantic(col, err.to_string())),
            (l, r) => Err(mismatch(&l, &r)),
        },
        BinOp::Hadamard => match (l, r) {
            (Truncated(a), Truncated(b)) => a
                .pointwise_mul(&b)
                .map(Truncated)
                .map_err(|err| ExprError::semantic(col, err.to_string())),
            (l @ (Series(_) | Scalar(_)), r @ (Series(_) | Scalar(_))) => {
                let a = as_series(l, col, mode)?;
                let b = as_series(r, col, mode)?;
                Ok(Series(lift(col, hadamard(&a, &b))?))
            }
            (l, r) => Err(mismatch(&l, &r)),
        },
        BinOp::Div => {
            if matches!(rhs.kind, ExprKind::PoleFactor { .. }) {
                return binary(BinOp::Mul, l, r, rhs, col, mode);
            }
            let Scalar(d) = r else {
                return Err(ExprError::semantic(
                    rhs.col,
                    "can only divide by a scalar or by a factor (1-c*z)^m",
                ));
            };
            let inv = d.inv().map_err(|err| ExprError::semantic(rhs.col, err.to_string()))?;
            binary(BinOp::Mul, l, Scalar(inv), rhs, col, mode)
        }
    }
}

fn call(f: &Func, col: usize, opts: &EvalOptions) -> Result<Value, ExprError> {
    let mode = opts.mode;
    let series = |e: &Expr| as_series(eval(e, opts)?, e.col, mode);
    Ok(match f {
        Func::D(x) => Value::Series(lower(&series(x)?)),
        Func::X(x) => Value::Series(raise(&series(x)?)),
        Func::Diag(k, x) => Value::Series(diag_apply(*k, &series(x)?)),
        Func::Dilate(c, x) => {
            let c = eval_scalar(c)?;
            Value::Series(lift(col, dilate(&c, &series(x)?))?)
        }
        Func::Coeff(x, n) => Value::Scalar(series(x)?.coefficient(*n)),
        Func::Expand(x, n) => {
            let len = n.unwrap_or(opts.depth);
            let t = truncate(&series(x)?, len).map_err(|err| ExprError::semantic(col, err.to_string()))?;
            Value::Truncated(t)
        }
        Func::NormalOrder(w) => Value::Normal(normal_order(w)),
    })
}
