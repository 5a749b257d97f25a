//! Recursive-descent parser.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '#' | '/') unary)*
//! unary   := '-' unary | atom
//! atom    := primary ['/' pole]
//! pole    := '(' '1' ('-' | '+') [factor '*']* 'z' ')' ['^' ['-'] INT]
//! primary := INT ['/' INT] | 'i' | 'z' ['^' ['-'] INT] | '(' expr ')'
//!          | NAME '(' args ')'
//! ```
//!
//! A `/` followed by `(1 - c*z)` or `(1 + c*z)`, optionally raised to an
//! integer power, is read as a pole factor and binds to the preceding
//! primary; any other right operand of `/` is an ordinary divisor at the
//! `term` level.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::lexer::{tokenize, Spanned, Tok};
use super::ExprError;
use crate::hw::Word;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    /// `*`, the Cauchy product.
    Mul,
    /// `#`, the Hadamard product.
    Hadamard,
    Div,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Func {
    /// `d(e)`, derivative.
    D(Box<Expr>),
    /// `x(e)`, multiplication by `z`.
    X(Box<Expr>),
    Diag(u32, Box<Expr>),
    Dilate(Box<Expr>, Box<Expr>),
    Coeff(Box<Expr>, i64),
    /// `expand(e)` uses the configured depth.
    Expand(Box<Expr>, Option<usize>),
    NormalOrder(Word),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Num(Scalar),
    /// `z^n`.
    Power(i64),
    /// The factor `1/(1 − alpha·z)^mult`; `alpha` is a scalar expression.
    PoleFactor { alpha: Box<Expr>, mult: i64 },
    Neg(Box<Expr>),
    Binary { op: BinOp, lhs: Box<Expr>, rhs: Box<Expr> },
    Call(Func),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    /// 1-based column of the first token.
    pub col: usize,
}

impl Expr {
    fn new(kind: ExprKind, col: usize) -> Self {
        Expr { kind, col }
    }

    fn boxed(self) -> Box<Self> {
        Box::new(self)
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

/// Parses one expression. Besides syntax errors this rejects, with a
/// semantic error, pole factors whose value is zero and negative pole
/// multiplicities.
pub fn parse(input: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        toks: tokenize(input)?,
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(p.unexpected());
    }
    check(&e)?;
    Ok(e)
}

fn check(e: &Expr) -> Result<(), ExprError> {
    match &e.kind {
        ExprKind::Num(_) | ExprKind::Power(_) | ExprKind::Call(Func::NormalOrder(_)) => Ok(()),
        ExprKind::PoleFactor { alpha, mult } => {
            check(alpha)?;
            if *mult < 0 {
                return Err(ExprError::semantic(e.col, crate::Error::NonPositiveMultiplicity(*mult).to_string()));
            }
            let value = super::eval::eval_scalar(alpha)?;
            if value.is_zero() {
                return Err(ExprError::semantic(alpha.col, crate::Error::ZeroPole.to_string()));
            }
            Ok(())
        }
        ExprKind::Neg(x) => check(x),
        ExprKind::Binary { lhs, rhs, .. } => {
            check(lhs)?;
            check(rhs)
        }
        ExprKind::Call(f) => match f {
            Func::D(x) | Func::X(x) | Func::Diag(_, x) | Func::Coeff(x, _) | Func::Expand(x, _) => check(x),
            Func::Dilate(c, x) => {
                check(c)?;
                check(x)
            }
            Func::NormalOrder(_) => Ok(()),
        },
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let k = (self.pos + ahead).min(self.toks.len() - 1);
        &self.toks[k].tok
    }

    fn col(&self) -> usize {
        self.toks[self.pos].col
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self) -> ExprError {
        ExprError::syntax(self.col(), format!("unexpected {}", self.peek().describe()))
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ExprError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(ExprError::syntax(
                self.col(),
                format!("expected {}, found {}", tok.describe(), self.peek().describe()),
            ))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let col = lhs.col;
            lhs = Expr::new(ExprKind::Binary { op, lhs: lhs.boxed(), rhs: rhs.boxed() }, col);
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Hash => BinOp::Hadamard,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = if op == BinOp::Div {
                match self.pole_factor()? {
                    Some(p) => p,
                    None => self.unary()?,
                }
            } else {
                self.unary()?
            };
            let col = lhs.col;
            lhs = Expr::new(ExprKind::Binary { op, lhs: lhs.boxed(), rhs: rhs.boxed() }, col);
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if *self.peek() == Tok::Minus {
            let col = self.col();
            self.bump();
            let inner = self.unary()?;
            return Ok(Expr::new(ExprKind::Neg(inner.boxed()), col));
        }
        self.atom()
    }

    /// `primary ['/' pole-factor]`; the pole quotient binds tighter than
    /// any binary operator, so `1/(1-2*z) # 1/(1-3*z)` is a product of two
    /// atoms.
    fn atom(&mut self) -> Result<Expr, ExprError> {
        let lhs = self.primary()?;
        if *self.peek() != Tok::Slash {
            return Ok(lhs);
        }
        let slash = self.pos;
        self.bump();
        match self.pole_factor()? {
            Some(rhs) => {
                let col = lhs.col;
                Ok(Expr::new(ExprKind::Binary { op: BinOp::Div, lhs: lhs.boxed(), rhs: rhs.boxed() }, col))
            }
            None => {
                self.pos = slash;
                Ok(lhs)
            }
        }
    }

    fn signed_int(&mut self) -> Result<BigInt, ExprError> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(if neg { -n } else { n })
            }
            other => Err(ExprError::syntax(self.col(), format!("expected integer, found {}", other.describe()))),
        }
    }

    fn small_int(&mut self) -> Result<i64, ExprError> {
        let col = self.col();
        let n = self.signed_int()?;
        n.to_i64()
            .filter(|v| v.abs() <= 1 << 40)
            .ok_or_else(|| ExprError::syntax(col, format!("integer {n} out of range")))
    }

    fn natural(&mut self, what: &str) -> Result<i64, ExprError> {
        let col = self.col();
        let n = self.small_int()?;
        if n < 0 {
            return Err(ExprError::semantic(col, format!("{what} must be nonnegative, got {n}")));
        }
        Ok(n)
    }

    /// Tries `(1 ± [c*]z)[^m]` at the cursor; restores the cursor and
    /// returns `None` if the tokens do not have that shape.
    fn pole_factor(&mut self) -> Result<Option<Expr>, ExprError> {
        let start = self.pos;
        let col = self.col();
        let shaped = matches!(self.peek(), Tok::LParen)
            && matches!(self.peek_at(1), Tok::Int(n) if *n == BigInt::from(1))
            && matches!(self.peek_at(2), Tok::Plus | Tok::Minus);
        if !shaped {
            return Ok(None);
        }
        self.bump();
        self.bump();
        let plus = self.bump() == Tok::Plus;
        let coef_col = self.col();
        let mut factors: Vec<Expr> = Vec::new();
        loop {
            if matches!(self.peek(), Tok::Ident(s) if s == "z") {
                self.bump();
                break;
            }
            let f = match self.peek() {
                Tok::Int(_) | Tok::LParen => self.primary(),
                Tok::Ident(s) if s == "i" => self.primary(),
                _ => {
                    self.pos = start;
                    return Ok(None);
                }
            };
            match f {
                Ok(f) if *self.peek() == Tok::Star => {
                    self.bump();
                    factors.push(f);
                }
                _ => {
                    self.pos = start;
                    return Ok(None);
                }
            }
        }
        if *self.peek() != Tok::RParen {
            self.pos = start;
            return Ok(None);
        }
        self.bump();
        let mult = if *self.peek() == Tok::Caret {
            self.bump();
            self.small_int()?
        } else {
            1
        };
        let mut alpha = factors
            .into_iter()
            .reduce(|a, b| {
                let col = a.col;
                Expr::new(ExprKind::Binary { op: BinOp::Mul, lhs: a.boxed(), rhs: b.boxed() }, col)
            })
            .unwrap_or_else(|| Expr::new(ExprKind::Num(Scalar::one()), coef_col));
        if plus {
            let c = alpha.col;
            alpha = Expr::new(ExprKind::Neg(alpha.boxed()), c);
        }
        Ok(Some(Expr::new(ExprKind::PoleFactor { alpha: alpha.boxed(), mult }, col)))
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        let col = self.col();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                // `p/q` is a single literal unless a parenthesis follows the slash
                if *self.peek() == Tok::Slash {
                    if let Tok::Int(d) = self.peek_at(1).clone() {
                        if d.is_zero() {
                            return Err(ExprError::semantic(self.toks[self.pos + 1].col, "division by zero"));
                        }
                        self.bump();
                        self.bump();
                        return Ok(Expr::new(ExprKind::Num(Scalar::real(BigRational::new(n, d))), col));
                    }
                }
                Ok(Expr::new(ExprKind::Num(Scalar::from(n)), col))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Expr { kind: e.kind, col })
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "i" => Ok(Expr::new(ExprKind::Num(Scalar::i()), col)),
                    "z" => {
                        let n = if *self.peek() == Tok::Caret {
                            self.bump();
                            self.small_int()?
                        } else {
                            1
                        };
                        Ok(Expr::new(ExprKind::Power(n), col))
                    }
                    _ => self.call(&name, col),
                }
            }
            _ => Err(self.unexpected()),
        }
    }

    fn call(&mut self, name: &str, col: usize) -> Result<Expr, ExprError> {
        if *self.peek() != Tok::LParen {
            return Err(ExprError::syntax(col, format!("unknown identifier {name:?}")));
        }
        self.bump();
        let func = match name {
            "d" => Func::D(self.expr()?.boxed()),
            "x" => Func::X(self.expr()?.boxed()),
            "diag" => {
                let k = self.natural("diag order")?;
                let k = u32::try_from(k).map_err(|_| ExprError::semantic(col, "diag order too large"))?;
                self.expect(Tok::Comma)?;
                Func::Diag(k, self.expr()?.boxed())
            }
            "dilate" => {
                let c = self.expr()?;
                self.expect(Tok::Comma)?;
                Func::Dilate(c.boxed(), self.expr()?.boxed())
            }
            "coeff" => {
                let e = self.expr()?;
                self.expect(Tok::Comma)?;
                Func::Coeff(e.boxed(), self.small_int()?)
            }
            "expand" => {
                let e = self.expr()?;
                let n = if *self.peek() == Tok::Comma {
                    self.bump();
                    let ncol = self.col();
                    let n = self.natural("expansion length")?;
                    if n == 0 {
                        return Err(ExprError::semantic(ncol, "expansion length must be at least 1"));
                    }
                    Some(n as usize)
                } else {
                    None
                };
                Func::Expand(e.boxed(), n)
            }
            "no" => {
                let wcol = self.col();
                let Tok::Str(text) = self.bump() else {
                    return Err(ExprError::syntax(wcol, "no(...) takes a quoted word such as \"aA\""));
                };
                let word = text
                    .parse::<Word>()
                    .map_err(|e| ExprError::syntax(wcol, e.to_string()))?;
                Func::NormalOrder(word)
            }
            other => return Err(ExprError::syntax(col, format!("unknown function {other:?}"))),
        };
        self.expect(Tok::RParen)?;
        Ok(Expr::new(ExprKind::Call(func), col))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(v: i64) -> ExprKind {
        ExprKind::Num(Scalar::from(v))
    }

    #[test]
    fn hadamard_of_poles() {
        let e = parse("1/(1-2*z) # 1/(1-3*z)").unwrap();
        let ExprKind::Binary { op: BinOp::Hadamard, lhs, rhs } = e.kind else {
            panic!("expected hadamard node, got {e:?}");
        };
        for (side, a) in [(lhs, 2), (rhs, 3)] {
            let ExprKind::Binary { op: BinOp::Div, lhs, rhs } = side.kind else { panic!() };
            assert_eq!(lhs.kind, num(1));
            let ExprKind::PoleFactor { alpha, mult } = rhs.kind else { panic!() };
            assert_eq!(alpha.kind, num(a));
            assert_eq!(mult, 1);
        }
    }

    #[test]
    fn nested_calls() {
        let e = parse("coeff(z^2 # z^2, 2)").unwrap();
        let ExprKind::Call(Func::Coeff(inner, 2)) = e.kind else { panic!() };
        assert!(matches!(inner.kind, ExprKind::Binary { op: BinOp::Hadamard, .. }));
        assert!(matches!(parse("no(\"aA\")").unwrap().kind, ExprKind::Call(Func::NormalOrder(_))));
        assert!(matches!(
            parse("expand(d(x(z)), 5)").unwrap().kind,
            ExprKind::Call(Func::Expand(_, Some(5)))
        ));
    }

    #[test]
    fn precedence_and_associativity() {
        // a - b # c  ==  a - (b # c);  a * b # c  ==  (a * b) # c
        let e = parse("1 - z # z").unwrap();
        let ExprKind::Binary { op: BinOp::Sub, rhs, .. } = e.kind else { panic!() };
        assert!(matches!(rhs.kind, ExprKind::Binary { op: BinOp::Hadamard, .. }));
        let e = parse("z * z # z").unwrap();
        let ExprKind::Binary { op: BinOp::Hadamard, lhs, .. } = e.kind else { panic!() };
        assert!(matches!(lhs.kind, ExprKind::Binary { op: BinOp::Mul, .. }));
    }

    #[test]
    fn literals() {
        assert_eq!(parse("3/2").unwrap().kind, ExprKind::Num(Scalar::ratio(3, 2)));
        assert_eq!(parse("z^-4").unwrap().kind, ExprKind::Power(-4));
        assert_eq!(parse("z").unwrap().kind, ExprKind::Power(1));
        let e = parse("1/(1+z)").unwrap();
        let ExprKind::Binary { rhs, .. } = e.kind else { panic!() };
        let ExprKind::PoleFactor { alpha, .. } = rhs.kind else { panic!() };
        assert_eq!(super::super::eval::eval_scalar(&alpha).unwrap(), Scalar::from(-1));
    }

    #[test]
    fn non_pole_divisor_falls_back() {
        let e = parse("z/(2)").unwrap();
        let ExprKind::Binary { op: BinOp::Div, rhs, .. } = e.kind else { panic!() };
        assert_eq!(rhs.kind, num(2));
        assert!(parse("1/(1-z^2)").is_ok());
    }

    #[test]
    fn syntax_errors() {
        for (input, col) in [("1 +", 4), ("(z", 3), ("z z", 3), ("foo(1)", 1), ("coeff(z, i)", 10), ("no(aA)", 4)] {
            let err = parse(input).unwrap_err();
            assert!(err.is_syntax(), "{input}: {err}");
            assert_eq!(err.col(), col, "{input}: {err}");
        }
    }

    #[test]
    fn semantic_errors() {
        let err = parse("1/(1-0*z)").unwrap_err();
        assert!(!err.is_syntax());
        assert_eq!(err.col(), 6);
        assert!(err.to_string().contains("pole value must be nonzero"));
        let err = parse("1/(1-2*z)^-1").unwrap_err();
        assert!(!err.is_syntax());
        assert!(!parse("expand(z, 0)").unwrap_err().is_syntax());
        assert!(!parse("1/0").unwrap_err().is_syntax());
    }
}
