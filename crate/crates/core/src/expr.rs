//! Text front-end for algebra elements.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/')? unary)*        juxtaposition multiplies
//! unary   := '-' unary | power
//! power   := atom ('^' exponent)?
//! atom    := integer | i | q | w | parameter | generator | '(' sum ')'
//!          | qexp+(sum) | qexp-(sum) | qbessel(m, sum) | zeta(m) | exp(sum)
//! ```
//!
//! Generators are `eta+ eta- delta z+ z-` (group side) and `p+ p- kappa P+ P-`
//! (algebra side); the two sides cannot be mixed. A sign belongs to a name only
//! when written without a space (`eta+`), so `eta+ + eta-` is a sum.
//! `q^(1/2)` is the square root of `q` fixed by the field, `w` its square root.
//! The argument of `exp` must be linear in `z+, z-`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{AlgebraError, Result};
use crate::hopf_a::{a_monomial, delta_pow, zeta_idempotent};
use crate::hopf_ext::{exp_z, lift_a, z_gen, EElement, EMonomial, ZMonomial};
use crate::hopf_u::{big_p_gen, kappa_pow, p_gen, UElement};
use crate::hopf_a::AMonomial;
use crate::linear::Monomial;
use crate::repr::{cutoff_qexp, qbessel_cut, Algebra};
use crate::scalars::{CycField, CycScalar, Param, ParamScalar, Sign};

/// Which algebra an expression lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Functions on the group: `eta+-`, `delta`, `z+-`.
    A,
    /// The dual algebra: `p+-`, `kappa`, `P+-`.
    U,
}

/// A parsed expression in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    A(EElement),
    U(UElement),
}

impl Parsed {
    pub fn render(&self) -> String {
        match self {
            Parsed::A(x) => x.render(),
            Parsed::U(x) => x.render(),
        }
    }
}

pub fn parse(field: &'static CycField, src: &str, side: Side) -> Result<Parsed> {
    let mut parser = Parser::new(field, src)?;
    let value = parser.sum()?;
    parser.expect_end()?;
    match (value.kind, side) {
        (Kind::Scalar(c), Side::A) => Ok(Parsed::A(EElement::scalar(c))),
        (Kind::Scalar(c), Side::U) => Ok(Parsed::U(UElement::scalar(c))),
        (Kind::A(x), Side::A) => Ok(Parsed::A(x)),
        (Kind::U(x), Side::U) => Ok(Parsed::U(x)),
        (Kind::A(_), Side::U) => Err(parse_error(value.pos, "expected an algebra-side expression, found group generators")),
        (Kind::U(_), Side::A) => Err(parse_error(value.pos, "expected a group-side expression, found algebra generators")),
    }
}

pub fn parse_a(field: &'static CycField, src: &str) -> Result<EElement> {
    match parse(field, src, Side::A)? {
        Parsed::A(x) => Ok(x),
        Parsed::U(_) => unreachable!(),
    }
}

pub fn parse_u(field: &'static CycField, src: &str) -> Result<UElement> {
    match parse(field, src, Side::U)? {
        Parsed::U(x) => Ok(x),
        Parsed::A(_) => unreachable!(),
    }
}

fn parse_error(pos: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { pos, msg: msg.into() }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

/// Names that take a directly attached `+` or `-`.
const SIGNED: [&str; 8] = ["eta", "p", "P", "z", "lambda", "lambda'", "chi", "qexp"];

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(src[start..i].parse().unwrap()), start));
            continue;
        }
        if c.is_ascii_alphabetic() {
            while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b'\'' {
                i += 1;
            }
            if SIGNED.contains(&&src[start..i]) && i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            _ => return Err(parse_error(start, format!("unexpected character '{c}'"))),
        };
        out.push((tok, start));
        i += c.len_utf8();
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

#[derive(Clone)]
enum Kind {
    Scalar(ParamScalar),
    A(EElement),
    U(UElement),
}

#[derive(Clone)]
struct Value {
    kind: Kind,
    pos: usize,
}

impl Value {
    fn scalar(c: ParamScalar, pos: usize) -> Value {
        Value { kind: Kind::Scalar(c), pos }
    }

    fn a(x: EElement, pos: usize) -> Value {
        Value { kind: Kind::A(x), pos }
    }

    fn u(x: UElement, pos: usize) -> Value {
        Value { kind: Kind::U(x), pos }
    }

    fn combine(
        self,
        other: Value,
        at: usize,
        s: impl Fn(&ParamScalar, &ParamScalar) -> ParamScalar,
        a: impl Fn(&EElement, &EElement) -> EElement,
        u: impl Fn(&UElement, &UElement) -> UElement,
    ) -> Result<Value> {
        let pos = self.pos;
        let kind = match (self.kind, other.kind) {
            (Kind::Scalar(x), Kind::Scalar(y)) => Kind::Scalar(s(&x, &y)),
            (Kind::A(x), Kind::A(y)) => Kind::A(a(&x, &y)),
            (Kind::U(x), Kind::U(y)) => Kind::U(u(&x, &y)),
            (Kind::Scalar(x), Kind::A(y)) => Kind::A(a(&EElement::scalar(x), &y)),
            (Kind::A(x), Kind::Scalar(y)) => Kind::A(a(&x, &EElement::scalar(y))),
            (Kind::Scalar(x), Kind::U(y)) => Kind::U(u(&UElement::scalar(x), &y)),
            (Kind::U(x), Kind::Scalar(y)) => Kind::U(u(&x, &UElement::scalar(y))),
            _ => return Err(parse_error(at, "group generators and algebra generators cannot be mixed")),
        };
        Ok(Value { kind, pos })
    }

    fn add(self, other: Value, at: usize) -> Result<Value> {
        self.combine(other, at, |x, y| x + y, |x, y| x + y, |x, y| x + y)
    }

    fn sub(self, other: Value, at: usize) -> Result<Value> {
        self.combine(other, at, |x, y| x - y, |x, y| x - y, |x, y| x - y)
    }

    fn mul(self, other: Value, at: usize) -> Result<Value> {
        self.combine(other, at, |x, y| x * y, |x, y| x * y, |x, y| x * y)
    }

    fn neg(self) -> Value {
        let kind = match self.kind {
            Kind::Scalar(x) => Kind::Scalar(-&x),
            Kind::A(x) => Kind::A(-&x),
            Kind::U(x) => Kind::U(-&x),
        };
        Value { kind, pos: self.pos }
    }

    fn pow(self, e: u32) -> Value {
        let kind = match self.kind {
            Kind::Scalar(x) => Kind::Scalar(x.pow(e)),
            Kind::A(x) => Kind::A(x.pow(e)),
            Kind::U(x) => Kind::U(x.pow(e)),
        };
        Value { kind, pos: self.pos }
    }
}

/// Exponent as written: `n`, `-n` or `(a/b)`.
struct Exponent {
    num: i64,
    den: i64,
    pos: usize,
}

impl Exponent {
    fn integer(&self) -> Result<i64> {
        if self.den != 1 {
            return Err(parse_error(self.pos, "fractional exponents are only allowed on q"));
        }
        Ok(self.num)
    }
}

struct Parser {
    field: &'static CycField,
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn new(field: &'static CycField, src: &str) -> Result<Parser> {
        Ok(Parser {
            field,
            toks: lex(src)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(parse_error(self.pos(), format!("expected {what}")))
        }
    }

    fn expect_end(&self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            Tok::RParen => Err(parse_error(self.pos(), "unbalanced ')'")),
            _ => Err(parse_error(self.pos(), "unexpected input")),
        }
    }

    fn sum(&mut self) -> Result<Value> {
        let mut acc = self.product()?;
        loop {
            let at = self.pos();
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(self.product()?, at)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(self.product()?, at)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn product(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        loop {
            let at = self.pos();
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(self.unary()?, at)?;
                }
                Tok::Slash => {
                    self.bump();
                    let divisor = self.unary()?;
                    let inv = self.invert(divisor)?;
                    acc = acc.mul(inv, at)?;
                }
                _ if self.starts_atom() => {
                    acc = acc.mul(self.power()?, at)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn invert(&self, v: Value) -> Result<Value> {
        let pos = v.pos;
        let c = match &v.kind {
            Kind::Scalar(c) => c.as_constant(),
            _ => None,
        };
        match c.and_then(|c| c.inv()) {
            Some(inv) => Ok(Value::scalar(ParamScalar::constant(inv), pos)),
            None => Err(parse_error(pos, "only nonzero numeric constants can be inverted")),
        }
    }

    fn unary(&mut self) -> Result<Value> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<Exponent> {
        let pos = self.pos();
        let signed_int = |p: &mut Parser| -> Result<i64> {
            let negative = if *p.peek() == Tok::Minus {
                p.bump();
                true
            } else {
                false
            };
            match p.bump() {
                (Tok::Int(n), at) => {
                    let n: i64 = n.try_into().map_err(|_| parse_error(at, "exponent too large"))?;
                    Ok(if negative { -n } else { n })
                }
                (_, at) => Err(parse_error(at, "expected an integer exponent")),
            }
        };
        if *self.peek() == Tok::LParen {
            self.bump();
            let num = signed_int(self)?;
            let den = if *self.peek() == Tok::Slash {
                self.bump();
                signed_int(self)?
            } else {
                1
            };
            self.expect(Tok::RParen, "')' after exponent")?;
            if den == 0 {
                return Err(parse_error(pos, "zero denominator in exponent"));
            }
            return Ok(Exponent { num, den, pos });
        }
        Ok(Exponent {
            num: signed_int(self)?,
            den: 1,
            pos,
        })
    }

    fn power(&mut self) -> Result<Value> {
        let pos = self.pos();
        let name = match self.peek() {
            Tok::Ident(s) => Some(s.clone()),
            _ => None,
        };
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let e = self.exponent()?;
        let field = self.field;
        match name.as_deref() {
            Some("q") => {
                let twice = 2 * e.num;
                if twice % e.den != 0 {
                    return Err(parse_error(e.pos, "q takes integer or half-integer exponents"));
                }
                return Ok(Value::scalar(ParamScalar::constant(field.q_half_pow(twice / e.den)), pos));
            }
            Some("w") => return Ok(Value::scalar(ParamScalar::constant(field.root_pow(e.integer()?)), pos)),
            Some("i") => return Ok(Value::scalar(ParamScalar::constant(field.i_pow(e.integer()?)), pos)),
            Some("kappa") => return Ok(Value::u(kappa_pow(field, e.integer()?), pos)),
            Some("delta") => return Ok(Value::a(lift_a(&delta_pow(field, e.integer()?)), pos)),
            _ => {}
        }
        let k = e.integer()?;
        if k < 0 {
            return self.invert(base)?.pow_checked(-k, e.pos);
        }
        base.pow_checked(k, e.pos)
    }

    fn atom(&mut self) -> Result<Value> {
        let field = self.field;
        let (tok, pos) = self.bump();
        match tok {
            Tok::Int(n) => {
                let c = CycScalar::from_rational(field, &BigRational::from_integer(n));
                Ok(Value::scalar(ParamScalar::constant(c), pos))
            }
            Tok::LParen => {
                let v = self.sum()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Value { pos, ..v })
            }
            Tok::Ident(name) => self.named(&name, pos),
            Tok::End => Err(parse_error(pos, "unexpected end of input")),
            _ => Err(parse_error(pos, "expected a term")),
        }
    }

    fn named(&mut self, name: &str, pos: usize) -> Result<Value> {
        let field = self.field;
        let scalar = |c: CycScalar| Ok(Value::scalar(ParamScalar::constant(c), pos));
        match name {
            "i" => return scalar(field.i()),
            "q" => return scalar(field.q_pow(1)),
            "w" => return scalar(field.root_pow(1)),
            "eta+" => return Ok(Value::a(lift_a(&a_monomial(field, 1, 0, 0)), pos)),
            "eta-" => return Ok(Value::a(lift_a(&a_monomial(field, 0, 1, 0)), pos)),
            "delta" => return Ok(Value::a(lift_a(&a_monomial(field, 0, 0, 1)), pos)),
            "z+" => return Ok(Value::a(z_gen(field, Sign::Plus), pos)),
            "z-" => return Ok(Value::a(z_gen(field, Sign::Minus), pos)),
            "p+" => return Ok(Value::u(p_gen(field, Sign::Plus), pos)),
            "p-" => return Ok(Value::u(p_gen(field, Sign::Minus), pos)),
            "P+" => return Ok(Value::u(big_p_gen(field, Sign::Plus), pos)),
            "P-" => return Ok(Value::u(big_p_gen(field, Sign::Minus), pos)),
            "kappa" => return Ok(Value::u(kappa_pow(field, 1), pos)),
            _ => {}
        }
        if let Some(x) = Param::from_name(name) {
            return Ok(Value::scalar(ParamScalar::param(field, x), pos));
        }
        match name {
            "qexp+" | "qexp-" => {
                let sign = if name.ends_with('+') { Sign::Plus } else { Sign::Minus };
                self.expect(Tok::LParen, "'(' after qexp")?;
                let arg = self.sum()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(apply(arg, QExp(sign)))
            }
            "qbessel" => {
                self.expect(Tok::LParen, "'(' after qbessel")?;
                let m = self.index_arg()?;
                self.expect(Tok::Comma, "',' after the Bessel index")?;
                let arg = self.sum()?;
                self.expect(Tok::RParen, "')'")?;
                let at = arg.pos;
                let m = u32::try_from(m).map_err(|_| parse_error(at, "negative Bessel index"))?;
                if m > field.p() {
                    return Err(parse_error(at, format!("Bessel index {m} outside [0, {}]", field.p())));
                }
                Ok(apply(arg, Bessel(m)))
            }
            "zeta" => {
                self.expect(Tok::LParen, "'(' after zeta")?;
                let at = self.pos();
                let m = self.index_arg()?;
                self.expect(Tok::RParen, "')'")?;
                if m < 0 || m >= field.p() as i64 {
                    return Err(parse_error(at, format!("zeta index {m} outside [0, {})", field.p())));
                }
                Ok(Value::a(lift_a(&zeta_idempotent(field, m)), pos))
            }
            "exp" => {
                self.expect(Tok::LParen, "'(' after exp")?;
                let at = self.pos();
                let arg = self.sum()?;
                self.expect(Tok::RParen, "')'")?;
                let (u, v) = linear_in_z(field, arg, at)?;
                Ok(Value::a(exp_z(&u, &v), pos))
            }
            _ => Err(parse_error(pos, format!("unknown name '{name}'"))),
        }
    }

    fn index_arg(&mut self) -> Result<i64> {
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.bump() {
            (Tok::Int(n), at) => {
                let n: i64 = n.try_into().map_err(|_| parse_error(at, "index too large"))?;
                Ok(if negative { -n } else { n })
            }
            (_, at) => Err(parse_error(at, "expected an integer index")),
        }
    }
}

impl Value {
    fn pow_checked(self, k: i64, at: usize) -> Result<Value> {
        let k = u32::try_from(k).map_err(|_| parse_error(at, "exponent too large"))?;
        Ok(self.pow(k))
    }
}

/// A map defined on every algebra an expression can live in.
trait AnyAlgebraMap {
    fn call<T: Algebra>(&self, x: &T) -> T;
}

struct QExp(Sign);

impl AnyAlgebraMap for QExp {
    fn call<T: Algebra>(&self, x: &T) -> T {
        cutoff_qexp(x, self.0)
    }
}

struct Bessel(u32);

impl AnyAlgebraMap for Bessel {
    fn call<T: Algebra>(&self, x: &T) -> T {
        qbessel_cut(self.0, x).expect("index checked by the parser")
    }
}

fn apply(v: Value, f: impl AnyAlgebraMap) -> Value {
    let kind = match &v.kind {
        Kind::Scalar(c) => Kind::Scalar(f.call(c)),
        Kind::A(x) => Kind::A(f.call(x)),
        Kind::U(x) => Kind::U(f.call(x)),
    };
    Value { kind, pos: v.pos }
}

/// Coefficients `(u, v)` of an argument `u z+ + v z-`.
fn linear_in_z(field: &'static CycField, arg: Value, at: usize) -> Result<(ParamScalar, ParamScalar)> {
    let x = match arg.kind {
        Kind::Scalar(c) if c.is_zero() => return Ok((ParamScalar::zero(field), ParamScalar::zero(field))),
        Kind::A(x) => x,
        _ => return Err(parse_error(at, "exp takes an argument linear in z+ and z-")),
    };
    let plus = EMonomial {
        a: AMonomial::ONE,
        z: ZMonomial::poly(field, 1, 0),
    };
    let minus = EMonomial {
        a: AMonomial::ONE,
        z: ZMonomial::poly(field, 0, 1),
    };
    let mut u = ParamScalar::zero(field);
    let mut v = ParamScalar::zero(field);
    for (m, c) in x.terms() {
        if *m == plus {
            u = c.clone();
        } else if *m == minus {
            v = c.clone();
        } else {
            return Err(parse_error(at, format!("exp argument has a term '{}' not linear in z+, z-", m.render())));
        }
    }
    Ok((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf_a::a_mul;
    use crate::hopf_u::u_mul;

    fn f(p: u32) -> &'static CycField {
        CycField::new(p).unwrap()
    }

    #[test]
    fn ordering_rules() {
        let field = f(3);
        let x = parse_a(field, "eta-*eta+").unwrap();
        let expected = lift_a(&a_mul(&a_monomial(field, 0, 1, 0), &a_monomial(field, 1, 0, 0)));
        assert_eq!(x, expected);
        assert_eq!(x, parse_a(field, "q^2 eta+ eta-").unwrap());
        assert_eq!(parse_a(field, "delta^3").unwrap(), EElement::one(field));
        let y = parse_u(field, "p+*kappa").unwrap();
        assert_eq!(y, u_mul(&p_gen(field, Sign::Plus), &kappa_pow(field, 1)));
        assert_eq!(y, parse_u(field, "q^-1 kappa p+").unwrap());
    }

    #[test]
    fn scalars() {
        let field = f(5);
        assert_eq!(parse_a(field, "q^(1/2) q^(1/2)").unwrap(), parse_a(field, "q").unwrap());
        assert_eq!(parse_a(field, "w^2").unwrap(), parse_a(field, "q^(1/2)").unwrap());
        assert_eq!(parse_a(field, "i^2").unwrap(), parse_a(field, "-1").unwrap());
        assert_eq!(parse_a(field, "(1 + w)/2 * 2").unwrap(), parse_a(field, "1 + w").unwrap());
        assert_eq!(parse_a(field, "eta+ + eta+").unwrap(), parse_a(field, "2 eta+").unwrap());
        assert_eq!(parse_a(field, "lambda'+ - lambda'+").unwrap(), EElement::zero(field));
    }

    #[test]
    fn functions() {
        let field = f(3);
        let e = parse_a(field, "qexp+(eta+)").unwrap();
        assert_eq!(e, parse_a(field, "1 + eta+ + q/(q + q^-1) eta+^2").unwrap());
        let sum: EElement = (0..3)
            .map(|m| parse_a(field, &format!("zeta({m})")).unwrap())
            .fold(EElement::zero(field), |a, b| &a + &b);
        assert_eq!(sum, EElement::one(field));
        let x = parse_a(field, "exp(i lambda+ z+ - i lambda- z-) z+").unwrap();
        assert_eq!(x.len(), 1);
        assert!(parse_a(field, "exp(z+ z-)").is_err());
        assert!(parse_a(field, "qbessel(4, mu)").is_err());
        assert_eq!(parse_a(field, "qbessel(3, mu)").unwrap(), EElement::zero(field));
    }

    #[test]
    fn errors_carry_positions() {
        let field = f(3);
        let err = parse(field, "eta+ * kappa", Side::A).unwrap_err();
        assert_eq!(err, AlgebraError::Parse { pos: 5, msg: "group generators and algebra generators cannot be mixed".into() });
        assert!(matches!(parse(field, "eta+ $", Side::A), Err(AlgebraError::Parse { pos: 5, .. })));
        assert!(matches!(parse(field, "(eta+", Side::A), Err(AlgebraError::Parse { pos: 5, .. })));
        assert!(matches!(parse(field, "foo", Side::A), Err(AlgebraError::Parse { pos: 0, .. })));
        assert!(matches!(parse(field, "p+", Side::A), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse(field, "eta+^(1/2)", Side::A), Err(AlgebraError::Parse { pos: 5, .. })));
        assert!(matches!(parse(field, "zeta(3)", Side::A), Err(AlgebraError::Parse { .. })));
    }

    #[test]
    fn render_round_trip() {
        let field = f(5);
        for src in [
            "eta+^2 eta- delta^3 + lambda+ chi- eta-",
            "(1 + w)/7 exp(i lambda+ z+) z-^2",
            "P+ p-^3 kappa^4 + mu^2 p+",
        ] {
            let side = if src.contains('P') { Side::U } else { Side::A };
            let x = parse(field, src, side).unwrap();
            let y = parse(field, &x.render(), side).unwrap();
            assert_eq!(x, y, "{}", x.render());
        }
    }
}
