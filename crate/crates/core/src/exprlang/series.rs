//! Laurent-series language with a ring declaration header.
//!
//! ```text
//! program := [ "ring" nildecl {"," nildecl} ";" ] "N" "=" int ";" sexpr
//! sexpr   := sterm { ("+"|"-") sterm }
//! sterm   := sfactor { "*" sfactor }
//! sfactor := base [ "^" int ]
//! base    := rat | ident | "z" | "inv(" sexpr ")" | "(" sexpr ")"
//! nildecl := ident "^" int
//! ```

use super::lex::{tokenize, Cursor, Token, TokenKind};
use super::ExprError;
use crate::scalar::{fmt_rat, Scalar};
use crate::symbols::{LaurentSeries, TestRing};
use crate::Int;
use num_rational::Ratio;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesExpr<I: Scalar = Int> {
    Rat(Ratio<I>),
    Sym(String),
    Z,
    Add(Box<SeriesExpr<I>>, Box<SeriesExpr<I>>),
    Sub(Box<SeriesExpr<I>>, Box<SeriesExpr<I>>),
    Mul(Box<SeriesExpr<I>>, Box<SeriesExpr<I>>),
    Pow(Box<SeriesExpr<I>>, i32),
    Inv(Box<SeriesExpr<I>>),
}

/// Ring header: declared nilpotent symbols with orders, truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDecl {
    pub nil_orders: Vec<(String, u32)>,
    pub trunc: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesProgram<I: Scalar = Int> {
    pub decl: RingDecl,
    pub expr: SeriesExpr<I>,
}

const RESERVED: [&str; 4] = ["z", "inv", "ring", "N"];

struct Parser<I: Scalar> {
    cursor: Cursor,
    symbols: Vec<String>,
    _marker: std::marker::PhantomData<I>,
}

impl<I: Scalar> Parser<I> {
    fn parse_unsigned(&mut self, what: &str) -> Result<(String, Token), ExprError> {
        let t = self.cursor.advance();
        match &t.kind {
            TokenKind::Number(digits) => Ok((digits.clone(), t.clone())),
            _ => Err(ExprError::syntax(t.pos, what, t.describe())),
        }
    }

    fn parse_signed_i64(&mut self, what: &str) -> Result<i64, ExprError> {
        let mut negative = false;
        loop {
            if self.cursor.eat_punct('-') {
                negative = !negative;
            } else if self.cursor.eat_punct('+') {
            } else {
                break;
            }
        }
        let (digits, tok) = self.parse_unsigned(what)?;
        let v: i64 = digits
            .parse()
            .map_err(|_| ExprError::syntax(tok.pos, what, tok.describe()))?;
        Ok(if negative { -v } else { v })
    }

    fn parse_header(&mut self) -> Result<RingDecl, ExprError> {
        let mut nil_orders: Vec<(String, u32)> = Vec::new();
        if let TokenKind::Ident(name) = &self.cursor.peek().kind {
            if name == "ring" {
                self.cursor.advance();
                loop {
                    let t = self.cursor.advance();
                    let TokenKind::Ident(sym) = &t.kind else {
                        return Err(ExprError::syntax(t.pos, "a nilpotent symbol", t.describe()));
                    };
                    if RESERVED.contains(&sym.as_str()) {
                        return Err(ExprError::syntax(
                            t.pos,
                            "a non-reserved symbol",
                            t.describe(),
                        ));
                    }
                    if nil_orders.iter().any(|(s, _)| s == sym) {
                        return Err(ExprError::syntax(t.pos, "a fresh symbol", t.describe()));
                    }
                    self.cursor.expect_punct('^')?;
                    let (digits, dtok) = self.parse_unsigned("a nilpotency order")?;
                    let order: u32 = digits.parse().map_err(|_| {
                        ExprError::syntax(dtok.pos, "a nilpotency order in range", dtok.describe())
                    })?;
                    if order == 0 {
                        return Err(ExprError::syntax(dtok.pos, "a positive order", "`0`"));
                    }
                    nil_orders.push((sym.clone(), order));
                    if !self.cursor.eat_punct(',') {
                        break;
                    }
                }
                self.cursor.expect_punct(';')?;
            }
        }
        let t = self.cursor.advance();
        match &t.kind {
            TokenKind::Ident(name) if name == "N" => {}
            _ => return Err(ExprError::syntax(t.pos, "`N`", t.describe())),
        }
        self.cursor.expect_punct('=')?;
        let trunc = self.parse_signed_i64("a truncation order")?;
        self.cursor.expect_punct(';')?;
        self.symbols = nil_orders.iter().map(|(s, _)| s.clone()).collect();
        Ok(RingDecl { nil_orders, trunc })
    }

    fn base(&mut self) -> Result<SeriesExpr<I>, ExprError> {
        let t = self.cursor.peek().clone();
        match &t.kind {
            // Signed rational literal; the sign binds to the number.
            TokenKind::Number(_) | TokenKind::Punct('-') | TokenKind::Punct('+') => {
                let mut negative = false;
                loop {
                    if self.cursor.eat_punct('-') {
                        negative = !negative;
                    } else if self.cursor.eat_punct('+') {
                    } else {
                        break;
                    }
                }
                let (digits, tok) = self.parse_unsigned("a rational")?;
                let raw: I = digits.parse().map_err(|_| {
                    ExprError::syntax(tok.pos, "a rational in range", tok.describe())
                })?;
                let numer: I = if negative { -raw } else { raw };
                if self.cursor.eat_punct('/') {
                    let (den_digits, dtok) = self.parse_unsigned("a denominator")?;
                    let denom: I = den_digits.parse().map_err(|_| {
                        ExprError::syntax(dtok.pos, "a denominator in range", dtok.describe())
                    })?;
                    if denom.is_zero() {
                        return Err(ExprError::syntax(dtok.pos, "a nonzero denominator", "`0`"));
                    }
                    Ok(SeriesExpr::Rat(Ratio::new(numer, denom)))
                } else {
                    Ok(SeriesExpr::Rat(Ratio::from_integer(numer)))
                }
            }
            TokenKind::Ident(name) => {
                let name = name.clone();
                self.cursor.advance();
                match name.as_str() {
                    "z" => Ok(SeriesExpr::Z),
                    "inv" => {
                        self.cursor.expect_punct('(')?;
                        let e = self.sexpr()?;
                        self.cursor.expect_punct(')')?;
                        Ok(SeriesExpr::Inv(Box::new(e)))
                    }
                    _ => {
                        if self.symbols.iter().any(|s| s == &name) {
                            Ok(SeriesExpr::Sym(name))
                        } else {
                            Err(ExprError::UndeclaredSymbol {
                                line: t.pos.line,
                                col: t.pos.col,
                                name,
                            })
                        }
                    }
                }
            }
            TokenKind::Punct('(') => {
                self.cursor.advance();
                let e = self.sexpr()?;
                self.cursor.expect_punct(')')?;
                Ok(e)
            }
            _ => Err(ExprError::syntax(
                t.pos,
                "a rational, symbol, `z`, `inv(` or `(`",
                t.describe(),
            )),
        }
    }

    fn sfactor(&mut self) -> Result<SeriesExpr<I>, ExprError> {
        let base = self.base()?;
        if self.cursor.eat_punct('^') {
            let mut negative = false;
            loop {
                if self.cursor.eat_punct('-') {
                    negative = !negative;
                } else if self.cursor.eat_punct('+') {
                } else {
                    break;
                }
            }
            let (digits, tok) = self.parse_unsigned("an integer exponent")?;
            let k: i32 = digits
                .parse()
                .map_err(|_| ExprError::syntax(tok.pos, "an exponent in range", tok.describe()))?;
            Ok(SeriesExpr::Pow(
                Box::new(base),
                if negative { -k } else { k },
            ))
        } else {
            Ok(base)
        }
    }

    fn sterm(&mut self) -> Result<SeriesExpr<I>, ExprError> {
        let mut acc = self.sfactor()?;
        while self.cursor.eat_punct('*') {
            let rhs = self.sfactor()?;
            acc = SeriesExpr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn sexpr(&mut self) -> Result<SeriesExpr<I>, ExprError> {
        let mut acc = self.sterm()?;
        loop {
            if self.cursor.eat_punct('+') {
                let rhs = self.sterm()?;
                acc = SeriesExpr::Add(Box::new(acc), Box::new(rhs));
            } else if self.cursor.eat_punct('-') {
                let rhs = self.sterm()?;
                acc = SeriesExpr::Sub(Box::new(acc), Box::new(rhs));
            } else {
                break;
            }
        }
        Ok(acc)
    }
}

/// Parses a full series program (optional ring header, truncation, series).
pub fn parse_series<I: Scalar>(source: &str) -> Result<SeriesProgram<I>, ExprError> {
    let tokens = tokenize(source)?;
    let mut parser = Parser::<I> {
        cursor: Cursor::new(tokens),
        symbols: Vec::new(),
        _marker: Default::default(),
    };
    let decl = parser.parse_header()?;
    let expr = parser.sexpr()?;
    parser.cursor.expect_eof()?;
    Ok(SeriesProgram { decl, expr })
}

fn eval_expr<I: Scalar>(
    ring: &TestRing<I>,
    symbols: &[String],
    trunc: i64,
    e: &SeriesExpr<I>,
) -> Result<LaurentSeries<I>, ExprError> {
    match e {
        SeriesExpr::Rat(q) => Ok(LaurentSeries::new(
            ring,
            vec![(0, ring.constant(q.clone()))],
            trunc,
        )),
        SeriesExpr::Sym(name) => {
            let idx = symbols
                .iter()
                .position(|s| s == name)
                .expect("parser only admits declared symbols");
            Ok(LaurentSeries::new(ring, vec![(0, ring.var(idx))], trunc))
        }
        SeriesExpr::Z => Ok(LaurentSeries::z_pow(ring, 1, trunc)),
        SeriesExpr::Add(a, b) => {
            Ok(eval_expr(ring, symbols, trunc, a)?.add(ring, &eval_expr(ring, symbols, trunc, b)?))
        }
        SeriesExpr::Sub(a, b) => {
            Ok(eval_expr(ring, symbols, trunc, a)?.sub(ring, &eval_expr(ring, symbols, trunc, b)?))
        }
        SeriesExpr::Mul(a, b) => {
            Ok(eval_expr(ring, symbols, trunc, a)?.mul(ring, &eval_expr(ring, symbols, trunc, b)?))
        }
        SeriesExpr::Pow(a, k) => {
            let base = eval_expr(ring, symbols, trunc, a)?;
            let factor = if *k < 0 { base.inv(ring)? } else { base };
            let mut acc = LaurentSeries::one(ring, trunc);
            for _ in 0..k.unsigned_abs() {
                acc = acc.mul(ring, &factor);
            }
            Ok(acc)
        }
        SeriesExpr::Inv(a) => Ok(eval_expr(ring, symbols, trunc, a)?.inv(ring)?),
    }
}

/// Builds the declared test ring and evaluates the series in it.
pub fn eval_series<I: Scalar>(
    prog: &SeriesProgram<I>,
) -> Result<(TestRing<I>, LaurentSeries<I>), ExprError> {
    let orders: Vec<u32> = prog.decl.nil_orders.iter().map(|&(_, k)| k).collect();
    let symbols: Vec<String> = prog
        .decl
        .nil_orders
        .iter()
        .map(|(s, _)| s.clone())
        .collect();
    let ring = TestRing::new(orders, None);
    let value = eval_expr(&ring, &symbols, prog.decl.trunc, &prog.expr)?;
    Ok((ring, value))
}

fn print_expr<I: Scalar>(e: &SeriesExpr<I>) -> String {
    let wrap_add = |x: &SeriesExpr<I>| match x {
        SeriesExpr::Add(..) | SeriesExpr::Sub(..) => format!("({})", print_expr(x)),
        _ => print_expr(x),
    };
    let wrap_all = |x: &SeriesExpr<I>| match x {
        SeriesExpr::Add(..) | SeriesExpr::Sub(..) | SeriesExpr::Mul(..) | SeriesExpr::Pow(..) => {
            format!("({})", print_expr(x))
        }
        _ => print_expr(x),
    };
    match e {
        SeriesExpr::Rat(q) => fmt_rat(q),
        SeriesExpr::Sym(s) => s.clone(),
        SeriesExpr::Z => "z".to_string(),
        SeriesExpr::Add(a, b) => format!("{} + {}", print_expr(a), wrap_add(b)),
        SeriesExpr::Sub(a, b) => format!("{} - {}", print_expr(a), wrap_add(b)),
        SeriesExpr::Mul(a, b) => format!("{} * {}", wrap_add(a), wrap_all(b)),
        SeriesExpr::Pow(a, k) => format!("{}^{}", wrap_all(a), k),
        SeriesExpr::Inv(a) => format!("inv({})", print_expr(a)),
    }
}

/// Canonical printer for a full program.
pub fn print_series<I: Scalar>(prog: &SeriesProgram<I>) -> String {
    let mut out = String::new();
    if !prog.decl.nil_orders.is_empty() {
        let decls: Vec<String> = prog
            .decl
            .nil_orders
            .iter()
            .map(|(s, k)| format!("{s}^{k}"))
            .collect();
        out.push_str(&format!("ring {}; ", decls.join(", ")));
    }
    out.push_str(&format!("N = {}; ", prog.decl.trunc));
    out.push_str(&print_expr(&prog.expr));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Int;

    #[test]
    fn parse_and_eval_polynomial() {
        let prog = parse_series::<Int>("N = 8; 1 - 3/2*z").unwrap();
        let (ring, s) = eval_series(&prog).unwrap();
        assert_eq!(s.coeff(0), ring.one());
        assert_eq!(s.coeff(1), ring.constant(rat(-3, 2)));
        assert_eq!(s.trunc(), 8);
    }

    #[test]
    fn ring_header_declares_nilpotents() {
        let prog = parse_series::<Int>("ring e1^2; N = 8; 1 + e1*z^-1").unwrap();
        let (ring, s) = eval_series(&prog).unwrap();
        assert_eq!(ring.nvars(), 1);
        assert_eq!(s.coeff(0), ring.one());
        assert_eq!(s.coeff(-1), ring.var(0));
        // e1^2 = 0 in the declared ring.
        let sq = ring.var(0).mul(&ring, &ring.var(0));
        assert!(sq.is_zero());
    }

    #[test]
    fn inv_of_z_is_fine() {
        let prog = parse_series::<Int>("N = 6; inv(z)").unwrap();
        let (ring, s) = eval_series(&prog).unwrap();
        assert_eq!(s, crate::symbols::LaurentSeries::z_pow(&ring, -1, 6));
    }

    #[test]
    fn inv_of_nonunit_errors() {
        let prog = parse_series::<Int>("ring a^2; N = 6; inv(a)").unwrap();
        assert!(matches!(
            eval_series(&prog),
            Err(ExprError::Symbol(crate::symbols::SymbolError::NotAUnit))
        ));
    }

    #[test]
    fn undeclared_symbols_are_rejected() {
        match parse_series::<Int>("N = 4; 1 + eps*z") {
            Err(ExprError::UndeclaredSymbol { name, .. }) => assert_eq!(name, "eps"),
            other => panic!("expected undeclared symbol, got {other:?}"),
        }
    }

    #[test]
    fn header_is_validated() {
        assert!(matches!(
            parse_series::<Int>("ring z^2; N = 4; 1"),
            Err(ExprError::Syntax { .. })
        ));
        assert!(matches!(
            parse_series::<Int>("ring a^0; N = 4; 1"),
            Err(ExprError::Syntax { .. })
        ));
        assert!(matches!(
            parse_series::<Int>("ring a^2, a^3; N=4; 1"),
            Err(ExprError::Syntax { .. })
        ));
        assert!(matches!(
            parse_series::<Int>("1 + z"),
            Err(ExprError::Syntax { .. })
        ));
    }

    #[test]
    fn arithmetic_matches_hand_expansion() {
        // (1 - z) * (1 + z + z^2 + ...) = 1 to the truncation order.
        let prog = parse_series::<Int>("N = 5; (1 - z) * inv(1 - z)").unwrap();
        let (ring, s) = eval_series(&prog).unwrap();
        assert_eq!(s, crate::symbols::LaurentSeries::one(&ring, 5));

        let prog = parse_series::<Int>("N = 5; (1 + z)^2 - (1 + 2*z + z^2)").unwrap();
        let (_, s) = eval_series(&prog).unwrap();
        assert!(s.is_zero());

        // Negative powers shift degrees.
        let prog = parse_series::<Int>("N = 5; 2*z^-3").unwrap();
        let (ring, s) = eval_series(&prog).unwrap();
        assert_eq!(s.coeff(-3), ring.constant(rat(2, 1)));
    }

    #[test]
    fn print_parse_round_trip() {
        for src in [
            "N = 8; 1 - 3/2*z",
            "ring e1^2; N = 8; 1 + e1*z^-1",
            "ring a^2, b^3; N = 6; (1 + a*z) * inv(1 - b*z^-1) - 2/7",
        ] {
            let prog = parse_series::<Int>(src).unwrap();
            let printed = print_series(&prog);
            let back = parse_series::<Int>(&printed).unwrap();
            assert_eq!(back, prog, "round trip failed: {src} -> {printed}");
        }
    }

    #[test]
    fn no_panic_on_arbitrary_bytes() {
        for junk in [
            "",
            "((((",
            "z^",
            "ring ; N=1; z",
            "N=;",
            "1//2",
            "\u{1F980} oops",
            "N = 4; inv()",
            "N = 4; 1 + + 2",
            "]][[",
            "N = 99999999999999999999; z",
        ] {
            let _ = parse_series::<Int>(junk);
        }
    }
}
