//! Expression language for free-algebra elements.
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' int)?
//! atom    := int | 'v' | 'h' | leaf | comm | '(' sum ')'
//! leaf    := ('e' | 'y') '(' int ',' int ')'
//! comm    := 'comm' '[' sum ']' '(' sum ',' sum ')'
//! ```
//!
//! `e` leaves and the scalar `v` give a trigonometric expression, `y`
//! leaves and `h` a rational one. Division is only by scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use shuffle_forge_core::scalars::{LaurentZ, PolyH, RationalV};
use shuffle_forge_core::shuffle::{RatExpr, TrigExpr};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

/// A parsed expression of either flavor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Trig(TrigExpr),
    Yangian(RatExpr),
}

impl Parsed {
    pub fn render(&self) -> String {
        match self {
            Parsed::Trig(e) => e.render("e"),
            Parsed::Yangian(e) => e.render("y"),
        }
    }

    /// Largest color index used by a leaf.
    pub fn max_color(&self) -> usize {
        fn walk<S>(e: &shuffle_forge_core::shuffle::FreeExpr<S>) -> usize {
            use shuffle_forge_core::shuffle::FreeExpr as F;
            match e {
                F::Gen { color, .. } => *color,
                F::Unit => 0,
                F::Prod(v) | F::Sum(v) => v.iter().map(walk).max().unwrap_or(0),
                F::Scale(_, e) => walk(e),
                F::Comm { left, right, .. } => walk(left).max(walk(right)),
            }
        }
        match self {
            Parsed::Trig(e) => walk(e),
            Parsed::Yangian(e) => walk(e),
        }
    }
}

impl fmt::Display for Parsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Laurent polynomial in one variable with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Lq(BTreeMap<i32, BigRational>);

impl Lq {
    fn constant(q: BigRational) -> Self {
        Lq::monomial(q, 0)
    }

    fn monomial(q: BigRational, e: i32) -> Self {
        let mut m = BTreeMap::new();
        if !q.is_zero() {
            m.insert(e, q);
        }
        Lq(m)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        let mut m = self.0.clone();
        for (e, q) in &o.0 {
            let s = m.remove(e).unwrap_or_else(BigRational::zero) + q;
            if !s.is_zero() {
                m.insert(*e, s);
            }
        }
        Lq(m)
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out = Lq(BTreeMap::new());
        for (a, p) in &self.0 {
            for (b, q) in &o.0 {
                out = out.add(&Lq::monomial(p * q, a + b));
            }
        }
        out
    }

    /// Integer coefficients after scaling by the lcm of denominators.
    fn clear(&self) -> (Vec<(i32, BigInt)>, BigInt) {
        let l = self.0.values().fold(BigInt::one(), |acc, q| num_integer::lcm(acc, q.denom().clone()));
        let terms = self.0.iter().map(|(e, q)| (*e, (q * BigRational::from_integer(l.clone())).to_integer())).collect();
        (terms, l)
    }
}

/// A fraction of [`Lq`]s.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Scalar {
    num: Lq,
    den: Lq,
}

impl Scalar {
    fn int(n: BigInt) -> Self {
        Scalar { num: Lq::constant(BigRational::from_integer(n)), den: Lq::constant(BigRational::one()) }
    }

    fn var() -> Self {
        Scalar { num: Lq::monomial(BigRational::one(), 1), den: Lq::constant(BigRational::one()) }
    }

    fn add(&self, o: &Self) -> Self {
        Scalar { num: self.num.mul(&o.den).add(&o.num.mul(&self.den)), den: self.den.mul(&o.den) }
    }

    fn mul(&self, o: &Self) -> Self {
        Scalar { num: self.num.mul(&o.num), den: self.den.mul(&o.den) }
    }

    fn inv(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| Scalar { num: self.den.clone(), den: self.num.clone() })
    }

    fn pow(&self, e: i32) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Scalar::int(BigInt::one());
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Some(out)
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn to_rational_v(&self) -> RationalV {
        let (n, ln) = self.num.clear();
        let (d, ld) = self.den.clear();
        let lz = |terms: Vec<(i32, BigInt)>, scale: &BigInt| {
            terms.into_iter().fold(LaurentZ::zero(), |acc, (e, c)| acc.add(&LaurentZ::monomial((c * scale).into(), e)))
        };
        RationalV::new(lz(n, &ld), lz(d, &ln)).canonicalize()
    }

    fn to_polyh(&self) -> Option<PolyH> {
        let ph = |l: &Lq| -> Option<PolyH> {
            l.0.iter().try_fold(PolyH::zero(), |acc, (e, q)| {
                Some(acc.add(&PolyH::monomial(q.clone(), usize::try_from(*e).ok()?)))
            })
        };
        ph(&self.num)?.div_exact(&ph(&self.den)?)
    }
}

#[derive(Clone, Debug)]
enum Ast {
    Leaf { color: usize, mode: i32 },
    Unit,
    Prod(Vec<Ast>),
    Sum(Vec<Ast>),
    Scale(Scalar, Box<Ast>),
    Comm(Scalar, Box<Ast>, Box<Ast>),
}

#[derive(Clone, Debug)]
enum Value {
    S(Scalar),
    E(Ast),
}

impl Value {
    fn into_ast(self) -> Ast {
        match self {
            Value::E(a) => a,
            Value::S(s) if s.is_zero() => Ast::Sum(vec![]),
            Value::S(s) if s.is_one() => Ast::Unit,
            Value::S(s) => Ast::Scale(s, Box::new(Ast::Unit)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Flavor {
    Trig,
    Yangian,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    flavor: Option<Flavor>,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> PResult<T> {
        Err(ParseError { offset, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn describe(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("'{}'", c as char),
            None => "end of input".into(),
        }
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            let found = self.describe();
            self.err(self.pos, format!("expected '{}', found {found}", c as char))
        }
    }

    fn set_flavor(&mut self, f: Flavor, at: usize) -> PResult<()> {
        match self.flavor {
            Some(g) if g != f => self.err(at, "mixes trigonometric (e, v) and rational (y, h) syntax"),
            _ => {
                self.flavor = Some(f);
                Ok(())
            }
        }
    }

    fn int(&mut self) -> PResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            let found = self.describe();
            return self.err(start, format!("expected an integer, found {found}"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap())
    }

    fn small_int<T: TryFrom<BigInt>>(&mut self, what: &str) -> PResult<T> {
        let at = self.pos;
        let n = self.int()?;
        T::try_from(n).or_else(|_| self.err(at, format!("{what} out of range")))
    }

    fn sum(&mut self) -> PResult<Value> {
        let mut terms = vec![self.product()?];
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.product()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    terms.push(negate(self.product()?));
                }
                _ => return Ok(add(terms)),
            }
        }
    }

    fn product(&mut self) -> PResult<Value> {
        let mut factors = vec![self.unary()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    factors.push(self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let rhs = match self.unary()? {
                        Value::S(s) => s,
                        Value::E(_) => return self.err(at, "division by a non-scalar"),
                    };
                    let Some(inv) = rhs.inv() else {
                        return self.err(at, "division by zero");
                    };
                    factors.push(Value::S(inv));
                }
                _ => return Ok(mul(factors)),
            }
        }
    }

    fn unary(&mut self) -> PResult<Value> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(negate(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Value> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let e: i32 = self.small_int("exponent")?;
        match base {
            Value::S(s) => match s.pow(e) {
                Some(p) => Ok(Value::S(p)),
                None => self.err(at, "negative power of zero"),
            },
            Value::E(a) => {
                if e < 0 {
                    return self.err(at, "negative power of an expression");
                }
                Ok(Value::E(match e {
                    0 => Ast::Unit,
                    1 => a,
                    _ => Ast::Prod(vec![a; e as usize]),
                }))
            }
        }
    }

    fn word(&mut self) -> &'a [u8] {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> PResult<Value> {
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(Value::S(Scalar::int(self.int()?))),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                match self.word() {
                    b"v" => {
                        self.set_flavor(Flavor::Trig, start)?;
                        Ok(Value::S(Scalar::var()))
                    }
                    b"h" => {
                        self.set_flavor(Flavor::Yangian, start)?;
                        Ok(Value::S(Scalar::var()))
                    }
                    b"e" | b"y" => {
                        let f = if self.src[start] == b'e' { Flavor::Trig } else { Flavor::Yangian };
                        self.set_flavor(f, start)?;
                        self.expect(b'(')?;
                        self.skip_ws();
                        let cat = self.pos;
                        let color: usize = self.small_int("color")?;
                        if color == 0 {
                            return self.err(cat, "colors start at 1");
                        }
                        self.expect(b',')?;
                        let mode: i32 = self.small_int("mode")?;
                        self.expect(b')')?;
                        Ok(Value::E(Ast::Leaf { color, mode }))
                    }
                    b"comm" => {
                        self.expect(b'[')?;
                        self.skip_ws();
                        let lat = self.pos;
                        let lambda = match self.sum()? {
                            Value::S(s) => s,
                            Value::E(_) => return self.err(lat, "commutator parameter must be a scalar"),
                        };
                        self.expect(b']')?;
                        self.expect(b'(')?;
                        let a = self.sum()?.into_ast();
                        self.expect(b',')?;
                        let b = self.sum()?.into_ast();
                        self.expect(b')')?;
                        Ok(Value::E(Ast::Comm(lambda, Box::new(a), Box::new(b))))
                    }
                    w => self.err(start, format!("unknown name '{}'", String::from_utf8_lossy(w))),
                }
            }
            _ => {
                let found = self.describe();
                self.err(at.max(self.pos), format!("expected an expression, found {found}"))
            }
        }
    }
}

/// Combines the terms of one `+`/`-` chain. Scalars fold only when every term is scalar.
fn add(mut terms: Vec<Value>) -> Value {
    if terms.len() == 1 {
        return terms.pop().unwrap();
    }
    if terms.iter().all(|t| matches!(t, Value::S(_))) {
        let mut acc = Scalar::int(BigInt::from(0));
        for t in terms {
            if let Value::S(s) = t {
                acc = acc.add(&s);
            }
        }
        return Value::S(acc);
    }
    Value::E(Ast::Sum(terms.into_iter().map(Value::into_ast).collect()))
}

fn negate(a: Value) -> Value {
    let m = Scalar::int(BigInt::from(-1));
    match a {
        Value::S(s) => Value::S(m.mul(&s)),
        Value::E(e) => Value::E(Ast::Scale(m, Box::new(e))),
    }
}

/// Combines the factors of one `*`/`/` chain: scalar factors commute to the front.
fn mul(factors: Vec<Value>) -> Value {
    let mut scalar: Option<Scalar> = None;
    let mut items = Vec::new();
    for f in factors {
        match f {
            Value::S(s) => scalar = Some(scalar.map_or(s.clone(), |t| t.mul(&s))),
            Value::E(e) => items.push(e),
        }
    }
    let body = match items.len() {
        0 => return Value::S(scalar.expect("nonempty product")),
        1 => items.pop().unwrap(),
        _ => Ast::Prod(items),
    };
    Value::E(match scalar {
        Some(s) => Ast::Scale(s, Box::new(body)),
        None => body,
    })
}

fn to_trig(a: &Ast) -> TrigExpr {
    match a {
        Ast::Leaf { color, mode } => TrigExpr::gen(*color, *mode),
        Ast::Unit => TrigExpr::Unit,
        Ast::Prod(v) => TrigExpr::Prod(v.iter().map(to_trig).collect()),
        Ast::Sum(v) => TrigExpr::Sum(v.iter().map(to_trig).collect()),
        Ast::Scale(s, e) => TrigExpr::scale(s.to_rational_v(), to_trig(e)),
        Ast::Comm(s, a, b) => TrigExpr::comm(s.to_rational_v(), to_trig(a), to_trig(b)),
    }
}

fn to_rat(a: &Ast) -> Option<RatExpr> {
    Some(match a {
        Ast::Leaf { color, mode } => RatExpr::gen(*color, *mode),
        Ast::Unit => RatExpr::Unit,
        Ast::Prod(v) => RatExpr::Prod(v.iter().map(to_rat).collect::<Option<_>>()?),
        Ast::Sum(v) => RatExpr::Sum(v.iter().map(to_rat).collect::<Option<_>>()?),
        Ast::Scale(s, e) => RatExpr::scale(s.to_polyh()?, to_rat(e)?),
        Ast::Comm(s, a, b) => RatExpr::comm(s.to_polyh()?, to_rat(a)?, to_rat(b)?),
    })
}

fn has_negative_mode(a: &Ast) -> bool {
    match a {
        Ast::Leaf { mode, .. } => *mode < 0,
        Ast::Unit => false,
        Ast::Prod(v) | Ast::Sum(v) => v.iter().any(has_negative_mode),
        Ast::Scale(_, e) => has_negative_mode(e),
        Ast::Comm(_, a, b) => has_negative_mode(a) || has_negative_mode(b),
    }
}

/// Parses `text` in the expression language.
pub fn parse_expr(text: &str) -> Result<Parsed, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, flavor: None };
    let v = p.sum()?;
    if p.peek().is_some() {
        let found = p.describe();
        return p.err(p.pos, format!("unexpected {found}"));
    }
    let ast = v.into_ast();
    match p.flavor.unwrap_or(Flavor::Trig) {
        Flavor::Trig => Ok(Parsed::Trig(to_trig(&ast))),
        Flavor::Yangian => {
            if has_negative_mode(&ast) {
                return Err(ParseError { offset: 0, message: "Yangian modes must be nonnegative".into() });
            }
            to_rat(&ast).map(Parsed::Yangian).ok_or_else(|| ParseError {
                offset: 0,
                message: "rational scalars must be polynomials in h".into(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trig(t: &str) -> TrigExpr {
        match parse_expr(t).unwrap() {
            Parsed::Trig(e) => e,
            other => panic!("not trigonometric: {other}"),
        }
    }

    #[test]
    fn leaf() {
        assert_eq!(trig("e(1,0)"), TrigExpr::gen(1, 0));
        assert_eq!(trig(" e( 2 , -3 ) "), TrigExpr::gen(2, -3));
    }

    #[test]
    fn commutator_with_parameter() {
        let want = TrigExpr::comm(RationalV::vpow(2), TrigExpr::gen(1, 0), TrigExpr::gen(2, -1));
        assert_eq!(trig("comm[v^2](e(1,0),e(2,-1))"), want);
    }

    #[test]
    fn unclosed_commutator() {
        let e = parse_expr("comm[v](e(1,1)").unwrap_err();
        assert_eq!(e.offset, 14);
        assert!(e.message.contains("expected ','"), "{}", e.message);
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse_expr("e(1,)").unwrap_err().offset, 4);
        assert_eq!(parse_expr("e(1,0) e(2,0)").unwrap_err().offset, 7);
        assert_eq!(parse_expr("e(1,0)*y(2,0)").unwrap_err().offset, 7);
        assert_eq!(parse_expr("f(1,0)").unwrap_err().offset, 0);
        assert_eq!(parse_expr("comm[e(1,0)](e(1,0),e(2,0))").unwrap_err().offset, 5);
    }

    #[test]
    fn scalars() {
        let want = TrigExpr::scale(RationalV::new(LaurentZ::vpow(1), LaurentZ::from_terms([(2, 1), (0, 1)])), TrigExpr::gen(1, 0));
        assert_eq!(trig("v/(v^2+1)*e(1,0)"), want);
        assert_eq!(trig("1"), TrigExpr::Unit);
        assert_eq!(trig("e(1,0)^2"), TrigExpr::prod(vec![TrigExpr::gen(1, 0), TrigExpr::gen(1, 0)]));
    }

    #[test]
    fn yangian() {
        let Parsed::Yangian(e) = parse_expr("comm[1/2*h](y(1,1),y(2,0))").unwrap() else { panic!() };
        assert_eq!(e, RatExpr::comm(PolyH::from_ratio(1, 2).mul(&PolyH::hbar()), RatExpr::gen(1, 1), RatExpr::gen(2, 0)));
        assert!(parse_expr("y(1,-1)").is_err());
        assert!(parse_expr("h^-1*y(1,0)").is_err());
    }

    #[test]
    fn round_trip() {
        for t in [
            "e(1,0)",
            "comm[v^2](e(1,0),e(2,-1))",
            "comm[v^-1](comm[v](e(1,0),e(2,0)),e(3,1))",
            "(v - v^-1)*e(2,0)*e(1,1) + e(1,0)",
            "(1 + v^2)/(v)*comm[1](e(1,0),e(1,0)) - e(2,2)",
            "(e(1,0)+e(2,0))*e(1,1)",
            "comm[h](y(1,0),y(1,1)) + 1/3*h^2*y(2,0)",
            "0",
            "1",
        ] {
            let a = parse_expr(t).unwrap();
            let r = a.render();
            let b = parse_expr(&r).unwrap_or_else(|e| panic!("{t} -> {r}: {e}"));
            assert_eq!(b.render(), r, "{t}");
            assert_eq!(a, b, "{t}");
        }
    }
}
