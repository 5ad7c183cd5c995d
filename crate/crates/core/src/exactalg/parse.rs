use num::BigInt;

use super::{AlgError, Context, ParamScalar, Rational, Var};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, AlgError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
        } else if ch.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                digits.push(d);
                chars.next();
            }
            let n = digits.parse::<BigInt>().expect("ascii digits");
            out.push((pos, Token::Num(n)));
        } else if ch.is_alphabetic() {
            let mut ident = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                ident.push(d);
                chars.next();
            }
            out.push((pos, Token::Ident(ident)));
        } else if "+-*/^()".contains(ch) {
            out.push((pos, Token::Op(ch)));
            chars.next();
        } else {
            return Err(AlgError::Parse { pos, msg: format!("unexpected character `{ch}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    at: usize,
    end: usize,
    ctx: Option<Context>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err(&self, msg: impl Into<String>) -> AlgError {
        AlgError::Parse { pos: self.pos(), msg: msg.into() }
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ParamScalar, AlgError> {
        let mut acc = if self.eat('-') { -self.term()? } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ParamScalar, AlgError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.try_mul(&self.unary()?)?;
            } else if self.eat('/') {
                acc = acc.try_div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ParamScalar, AlgError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let exp = match self.peek() {
            Some(Token::Num(n)) => u32::try_from(n.clone()).map_err(|_| self.err("exponent too large"))?,
            _ => return Err(self.err("expected integer exponent")),
        };
        self.at += 1;
        let power = base.pow(exp);
        if negative {
            power.inverse()
        } else {
            Ok(power)
        }
    }

    fn atom(&mut self) -> Result<ParamScalar, AlgError> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.at += 1;
                Ok(ParamScalar::from_rational(Rational::from_integer(n)))
            }
            Some(Token::Ident(name)) => {
                let v = Var::from_name(&name).ok_or_else(|| self.err(format!("unknown variable `{name}`")))?;
                self.at += 1;
                self.ctx.unwrap_or(Context::Generic).var(v)
            }
            Some(Token::Op('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

fn infer_context(tokens: &[(usize, Token)]) -> Option<Context> {
    let vars: Vec<Var> = tokens
        .iter()
        .filter_map(|(_, t)| match t {
            Token::Ident(name) => Var::from_name(name),
            _ => None,
        })
        .collect();
    if vars.iter().any(|v| matches!(v, Var::Alpha | Var::S1 | Var::S2)) {
        Some(Context::Alpha)
    } else if vars.contains(&Var::C) {
        Some(Context::Generic)
    } else {
        None
    }
}

/// Parse an expression, choosing the alpha context whenever `alpha`, `s1` or
/// `s2` occurs and the generic context otherwise.
pub fn parse(text: &str) -> Result<ParamScalar, AlgError> {
    let tokens = tokenize(text)?;
    let ctx = infer_context(&tokens);
    run(text, &tokens, ctx)
}

/// Parse an expression in a fixed context. In the alpha context `c` stands
/// for `-3 - alpha^2`.
pub fn parse_in(text: &str, ctx: Context) -> Result<ParamScalar, AlgError> {
    let tokens = tokenize(text)?;
    run(text, &tokens, Some(ctx))
}

fn run(text: &str, tokens: &[(usize, Token)], ctx: Option<Context>) -> Result<ParamScalar, AlgError> {
    let mut p = Parser { tokens, at: 0, end: text.len(), ctx };
    let value = p.expr()?;
    if p.at != tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(value)
}
