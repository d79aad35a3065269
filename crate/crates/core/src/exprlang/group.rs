//! Group-word language over the central extension generators.
//!
//! ```text
//! expr := term { "*"? term }
//! term := atom [ "^" int ]
//! atom := "central(" rat ")" | "torus(" rat {"," rat} ")"
//!       | "cochar(" int {"," int} ")" | "rot(" rat ")"
//!       | "[" expr "," expr "]" | "(" expr ")"
//! ```

use super::lex::{tokenize, Cursor, Token, TokenKind};
use super::ExprError;
use crate::extension::{
    inv, mul, semidirect_inv, semidirect_mul, ExtElement, SemidirectElement, Variant,
};
use crate::lattice::{GramForm, LatticeVector};
use crate::scalar::{fmt_rat, Scalar};
use crate::Int;
use num_rational::Ratio;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr<I: Scalar = Int> {
    Central(Ratio<I>),
    Torus(Vec<Ratio<I>>),
    Cochar(Vec<I>),
    Rot(Ratio<I>),
    Mul(Box<GroupExpr<I>>, Box<GroupExpr<I>>),
    Pow(Box<GroupExpr<I>>, i32),
    Commutator(Box<GroupExpr<I>>, Box<GroupExpr<I>>),
}

/// Result of evaluating a group word: plain extension element, or a
/// semidirect element once a rotation atom is involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupValue<I: Scalar = Int> {
    Ext(ExtElement<I>),
    Semidirect(SemidirectElement<I>),
}

struct Parser<I: Scalar> {
    cursor: Cursor,
    rank: usize,
    _marker: std::marker::PhantomData<I>,
}

impl<I: Scalar> Parser<I> {
    fn parse_scalar_int(&mut self) -> Result<(I, Token), ExprError> {
        let mut negative = false;
        loop {
            if self.cursor.eat_punct('-') {
                negative = !negative;
            } else if self.cursor.eat_punct('+') {
            } else {
                break;
            }
        }
        let t = self.cursor.advance();
        let TokenKind::Number(digits) = &t.kind else {
            return Err(ExprError::syntax(t.pos, "an integer", t.describe()));
        };
        let value: I = digits
            .parse()
            .map_err(|_| ExprError::syntax(t.pos, "an integer in range", t.describe()))?;
        Ok((if negative { -value } else { value }, t))
    }

    fn parse_rat(&mut self) -> Result<(Ratio<I>, Token), ExprError> {
        let (numer, tok) = self.parse_scalar_int()?;
        if self.cursor.eat_punct('/') {
            let (denom, dtok) = self.parse_scalar_int()?;
            if denom.is_zero() {
                return Err(ExprError::syntax(dtok.pos, "a nonzero denominator", "`0`"));
            }
            Ok((Ratio::new(numer, denom), tok))
        } else {
            Ok((Ratio::from_integer(numer), tok))
        }
    }

    fn parse_exponent(&mut self) -> Result<i32, ExprError> {
        let mut negative = false;
        loop {
            if self.cursor.eat_punct('-') {
                negative = !negative;
            } else if self.cursor.eat_punct('+') {
            } else {
                break;
            }
        }
        let t = self.cursor.advance();
        let TokenKind::Number(digits) = &t.kind else {
            return Err(ExprError::syntax(
                t.pos,
                "an integer exponent",
                t.describe(),
            ));
        };
        let value: i32 = digits
            .parse()
            .map_err(|_| ExprError::syntax(t.pos, "an exponent in range", t.describe()))?;
        Ok(if negative { -value } else { value })
    }

    fn rat_args(&mut self, keyword: &Token) -> Result<Vec<(Ratio<I>, Token)>, ExprError> {
        let _ = keyword;
        self.cursor.expect_punct('(')?;
        let mut args = vec![self.parse_rat()?];
        while self.cursor.eat_punct(',') {
            args.push(self.parse_rat()?);
        }
        self.cursor.expect_punct(')')?;
        Ok(args)
    }

    fn int_args(&mut self) -> Result<Vec<(I, Token)>, ExprError> {
        self.cursor.expect_punct('(')?;
        let mut args = vec![self.parse_scalar_int()?];
        while self.cursor.eat_punct(',') {
            args.push(self.parse_scalar_int()?);
        }
        self.cursor.expect_punct(')')?;
        Ok(args)
    }

    fn check_arity(&self, tok: &Token, got: usize) -> Result<(), ExprError> {
        if got != self.rank {
            return Err(ExprError::Arity {
                line: tok.pos.line,
                col: tok.pos.col,
                expected: self.rank,
                got,
            });
        }
        Ok(())
    }

    fn nonzero(&self, q: Ratio<I>, tok: &Token) -> Result<Ratio<I>, ExprError> {
        if q.is_zero() {
            return Err(ExprError::ZeroScalar {
                line: tok.pos.line,
                col: tok.pos.col,
            });
        }
        Ok(q)
    }

    fn atom(&mut self) -> Result<GroupExpr<I>, ExprError> {
        let t = self.cursor.peek().clone();
        match &t.kind {
            TokenKind::Ident(name) => {
                let name = name.clone();
                self.cursor.advance();
                match name.as_str() {
                    "central" => {
                        let args = self.rat_args(&t)?;
                        if args.len() != 1 {
                            return Err(ExprError::Arity {
                                line: t.pos.line,
                                col: t.pos.col,
                                expected: 1,
                                got: args.len(),
                            });
                        }
                        let (q, tok) = args.into_iter().next().expect("one argument");
                        Ok(GroupExpr::Central(self.nonzero(q, &tok)?))
                    }
                    "torus" => {
                        let args = self.rat_args(&t)?;
                        self.check_arity(&t, args.len())?;
                        let mut coords = Vec::with_capacity(args.len());
                        for (q, tok) in args {
                            coords.push(self.nonzero(q, &tok)?);
                        }
                        Ok(GroupExpr::Torus(coords))
                    }
                    "cochar" => {
                        let args = self.int_args()?;
                        self.check_arity(&t, args.len())?;
                        Ok(GroupExpr::Cochar(
                            args.into_iter().map(|(v, _)| v).collect(),
                        ))
                    }
                    "rot" => {
                        let args = self.rat_args(&t)?;
                        if args.len() != 1 {
                            return Err(ExprError::Arity {
                                line: t.pos.line,
                                col: t.pos.col,
                                expected: 1,
                                got: args.len(),
                            });
                        }
                        let (q, tok) = args.into_iter().next().expect("one argument");
                        Ok(GroupExpr::Rot(self.nonzero(q, &tok)?))
                    }
                    _ => Err(ExprError::syntax(
                        t.pos,
                        "central, torus, cochar, rot, `[` or `(`",
                        t.describe(),
                    )),
                }
            }
            TokenKind::Punct('[') => {
                self.cursor.advance();
                let a = self.expr()?;
                self.cursor.expect_punct(',')?;
                let b = self.expr()?;
                self.cursor.expect_punct(']')?;
                Ok(GroupExpr::Commutator(Box::new(a), Box::new(b)))
            }
            TokenKind::Punct('(') => {
                self.cursor.advance();
                let e = self.expr()?;
                self.cursor.expect_punct(')')?;
                Ok(e)
            }
            _ => Err(ExprError::syntax(
                t.pos,
                "central, torus, cochar, rot, `[` or `(`",
                t.describe(),
            )),
        }
    }

    fn term(&mut self) -> Result<GroupExpr<I>, ExprError> {
        let base = self.atom()?;
        if self.cursor.eat_punct('^') {
            let k = self.parse_exponent()?;
            Ok(GroupExpr::Pow(Box::new(base), k))
        } else {
            Ok(base)
        }
    }

    fn starts_term(&self) -> bool {
        matches!(
            &self.cursor.peek().kind,
            TokenKind::Ident(_) | TokenKind::Punct('[') | TokenKind::Punct('(')
        )
    }

    fn expr(&mut self) -> Result<GroupExpr<I>, ExprError> {
        let mut acc = self.term()?;
        loop {
            if self.cursor.eat_punct('*') {
                let rhs = self.term()?;
                acc = GroupExpr::Mul(Box::new(acc), Box::new(rhs));
            } else if self.starts_term() {
                let rhs = self.term()?;
                acc = GroupExpr::Mul(Box::new(acc), Box::new(rhs));
            } else {
                break;
            }
        }
        Ok(acc)
    }
}

/// Parses a group word against a declared rank.
pub fn parse_group<I: Scalar>(source: &str, rank: usize) -> Result<GroupExpr<I>, ExprError> {
    let tokens = tokenize(source)?;
    let mut parser = Parser::<I> {
        cursor: Cursor::new(tokens),
        rank,
        _marker: std::marker::PhantomData,
    };
    let e = parser.expr()?;
    parser.cursor.expect_eof()?;
    Ok(e)
}

fn lift<I: Scalar>(v: GroupValue<I>) -> SemidirectElement<I> {
    match v {
        GroupValue::Semidirect(s) => s,
        GroupValue::Ext(g) => SemidirectElement { s: Ratio::one(), g },
    }
}

fn value_mul<I: Scalar>(
    b: &GramForm<I>,
    x: GroupValue<I>,
    y: GroupValue<I>,
) -> Result<GroupValue<I>, ExprError> {
    match (x, y) {
        (GroupValue::Ext(a), GroupValue::Ext(c)) => Ok(GroupValue::Ext(mul(b, &a, &c)?)),
        (x, y) => Ok(GroupValue::Semidirect(semidirect_mul(
            b,
            &lift(x),
            &lift(y),
        )?)),
    }
}

fn value_inv<I: Scalar>(b: &GramForm<I>, x: GroupValue<I>) -> Result<GroupValue<I>, ExprError> {
    match x {
        GroupValue::Ext(a) => Ok(GroupValue::Ext(inv(b, &a)?)),
        GroupValue::Semidirect(s) => Ok(GroupValue::Semidirect(semidirect_inv(b, &s)?)),
    }
}

/// Evaluates a group word by folding it through the extension arithmetic.
/// Any rotation atom promotes the result to the semidirect product.
pub fn eval_group<I: Scalar>(
    b: &GramForm<I>,
    variant: Variant,
    e: &GroupExpr<I>,
) -> Result<GroupValue<I>, ExprError> {
    let r = b.rank();
    match e {
        GroupExpr::Central(q) => Ok(GroupValue::Ext(ExtElement::new(
            variant,
            q.clone(),
            vec![Ratio::one(); r],
            LatticeVector::zero(r),
        )?)),
        GroupExpr::Torus(t) => Ok(GroupValue::Ext(ExtElement::new(
            variant,
            Ratio::one(),
            t.clone(),
            LatticeVector::zero(r),
        )?)),
        GroupExpr::Cochar(l) => Ok(GroupValue::Ext(ExtElement::new(
            variant,
            Ratio::one(),
            vec![Ratio::one(); r],
            LatticeVector(l.clone()),
        )?)),
        GroupExpr::Rot(s) => Ok(GroupValue::Semidirect(SemidirectElement::new(
            s.clone(),
            ExtElement::identity(variant, r),
        )?)),
        GroupExpr::Mul(a, c) => {
            let x = eval_group(b, variant, a)?;
            let y = eval_group(b, variant, c)?;
            value_mul(b, x, y)
        }
        GroupExpr::Pow(a, k) => {
            let base = eval_group(b, variant, a)?;
            let mut acc = GroupValue::Ext(ExtElement::identity(variant, r));
            if *k == 0 {
                return Ok(acc);
            }
            let factor = if *k < 0 { value_inv(b, base)? } else { base };
            for _ in 0..k.unsigned_abs() {
                acc = value_mul(b, acc, factor.clone())?;
            }
            Ok(acc)
        }
        GroupExpr::Commutator(a, c) => {
            let x = eval_group(b, variant, a)?;
            let y = eval_group(b, variant, c)?;
            let xi = value_inv(b, x.clone())?;
            let yi = value_inv(b, y.clone())?;
            value_mul(b, value_mul(b, x, y)?, value_mul(b, xi, yi)?)
        }
    }
}

/// Sanity check used by tests: conjugating the group part of a semidirect
/// value by its rotation gives back a plain extension computation.
#[cfg(test)]
pub(crate) fn rotate_group_part<I: Scalar>(
    b: &GramForm<I>,
    v: &SemidirectElement<I>,
) -> Result<ExtElement<I>, ExprError> {
    Ok(crate::extension::rotate_conj(b, &v.s, &v.g)?)
}

fn print_child<I: Scalar>(e: &GroupExpr<I>, wrap_mul: bool) -> String {
    match e {
        GroupExpr::Mul(..) if wrap_mul => format!("({})", print_group(e)),
        _ => print_group(e),
    }
}

/// Canonical printer; `parse_group . print_group` is the identity.
pub fn print_group<I: Scalar>(e: &GroupExpr<I>) -> String {
    match e {
        GroupExpr::Central(q) => format!("central({})", fmt_rat(q)),
        GroupExpr::Torus(t) => {
            let parts: Vec<String> = t.iter().map(fmt_rat).collect();
            format!("torus({})", parts.join(","))
        }
        GroupExpr::Cochar(l) => {
            let parts: Vec<String> = l.iter().map(|c| c.to_string()).collect();
            format!("cochar({})", parts.join(","))
        }
        GroupExpr::Rot(s) => format!("rot({})", fmt_rat(s)),
        GroupExpr::Mul(a, b) => {
            format!("{} * {}", print_child(a, false), print_child(b, true))
        }
        GroupExpr::Pow(a, k) => {
            let base = match **a {
                GroupExpr::Mul(..) | GroupExpr::Pow(..) => format!("({})", print_group(a)),
                _ => print_group(a),
            };
            format!("{base}^{k}")
        }
        GroupExpr::Commutator(a, b) => {
            format!("[{}, {}]", print_group(a), print_group(b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Int;

    fn b1() -> GramForm<Int> {
        GramForm::from_i32(&[&[1]]).unwrap()
    }

    #[test]
    fn parse_examples() {
        let e = parse_group::<Int>("[cochar(1), torus(5)]", 1).unwrap();
        assert!(matches!(e, GroupExpr::Commutator(..)));

        let e = parse_group::<Int>("torus(2,3) * cochar(1,0)^-1", 2).unwrap();
        match e {
            GroupExpr::Mul(a, b) => {
                assert!(matches!(*a, GroupExpr::Torus(_)));
                assert!(matches!(*b, GroupExpr::Pow(_, -1)));
            }
            other => panic!("unexpected {other:?}"),
        }

        match parse_group::<Int>("torus(2)", 2) {
            Err(ExprError::Arity {
                expected: 2,
                got: 1,
                ..
            }) => {}
            other => panic!("expected arity error, got {other:?}"),
        }
    }

    #[test]
    fn juxtaposition_is_multiplication() {
        let a = parse_group::<Int>("cochar(1) torus(5)", 1).unwrap();
        let b = parse_group::<Int>("cochar(1) * torus(5)", 1).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_scalars_rejected_at_parse() {
        assert!(matches!(
            parse_group::<Int>("central(0)", 1),
            Err(ExprError::ZeroScalar { .. })
        ));
        assert!(matches!(
            parse_group::<Int>("torus(1,0)", 2),
            Err(ExprError::ZeroScalar { .. })
        ));
        assert!(matches!(
            parse_group::<Int>("central(1/0)", 1),
            Err(ExprError::Syntax { .. })
        ));
    }

    #[test]
    fn diagnostics_carry_positions() {
        match parse_group::<Int>("torus(2,3) *\n  wrong(1)", 2) {
            Err(ExprError::Syntax { line, col, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(col, 3);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn eval_commutator_examples() {
        let b = b1();
        let e = parse_group::<Int>("[cochar(1), torus(5)]", 1).unwrap();
        match eval_group(&b, Variant::B, &e).unwrap() {
            GroupValue::Ext(g) => assert_eq!(g.w, rat(1, 5)),
            other => panic!("unexpected {other:?}"),
        }
        match eval_group(&b, Variant::TwoB, &e).unwrap() {
            GroupValue::Ext(g) => assert_eq!(g.w, rat(1, 25)),
            other => panic!("unexpected {other:?}"),
        }

        let e = parse_group::<Int>("central(7)", 1).unwrap();
        match eval_group(&b, Variant::B, &e).unwrap() {
            GroupValue::Ext(g) => {
                assert_eq!(g.w, rat(7, 1));
                assert!(g.t.iter().all(num_traits::One::is_one));
                assert!(g.lambda.0.iter().all(num_traits::Zero::is_zero));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn eval_structural_identities() {
        let b = b1();
        let assoc_l = parse_group::<Int>("(cochar(1) * torus(5)) * central(2)", 1).unwrap();
        let assoc_r = parse_group::<Int>("cochar(1) * (torus(5) * central(2))", 1).unwrap();
        assert_eq!(
            eval_group(&b, Variant::B, &assoc_l).unwrap(),
            eval_group(&b, Variant::B, &assoc_r).unwrap()
        );

        let comm = parse_group::<Int>("[torus(3), cochar(2)]", 1).unwrap();
        let spelled = parse_group::<Int>("torus(3) cochar(2) torus(3)^-1 cochar(2)^-1", 1).unwrap();
        assert_eq!(
            eval_group(&b, Variant::B, &comm).unwrap(),
            eval_group(&b, Variant::B, &spelled).unwrap()
        );
    }

    #[test]
    fn rot_atoms_force_semidirect() {
        let b = b1();
        let e = parse_group::<Int>("rot(2) * cochar(1)", 1).unwrap();
        match eval_group(&b, Variant::B, &e).unwrap() {
            GroupValue::Semidirect(s) => {
                assert_eq!(s.s, rat(2, 1));
                let _ = rotate_group_part(&b, &s).unwrap();
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn print_parse_round_trip() {
        let sources = [
            "central(7)",
            "torus(2,3) * cochar(1,0)^-1",
            "[cochar(1,0), torus(5,1/2)] * (central(3) * torus(1,1))^2",
        ];
        for (src, r) in sources.iter().zip([1usize, 2, 2]) {
            let r = if *src == "central(7)" { 1 } else { r };
            let e = parse_group::<Int>(src, r).unwrap();
            let printed = print_group(&e);
            let back = parse_group::<Int>(&printed, r).unwrap();
            assert_eq!(back, e, "round trip failed for {src} -> {printed}");
        }
    }
}
