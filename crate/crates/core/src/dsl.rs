//! The group-specification language.
//!
//! ```text
//! spec    := factor ( "x" factor )*
//! factor  := "(" spec ")" | NAME "(" args ")"
//! NAME    := C | Ab | D | Q | SD | Mod | Heis
//! ```
//!
//! `Ab` takes `p; e1, e2, …`; the others take comma-separated integers.
//! `×` is accepted in place of `x`.

use std::fmt;

use crate::error::{GroupError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    /// `C(n)`, cyclic of order n.
    Cyclic(usize),
    /// `Ab(p; e1, …)`, the abelian group `C_{p^e1} × ⋯`.
    Abelian {
        p: u64,
        exponents: Vec<u32>,
    },
    /// `D(n)`, dihedral of order 2n.
    Dihedral(usize),
    /// `Q(2^k)`, generalized quaternion of that order.
    Quaternion(usize),
    /// `SD(2^k)`, semidihedral of that order.
    SemiDihedral(usize),
    /// `Mod(p, k)`, the modular p-group of order p^k.
    Modular {
        p: u64,
        k: u32,
    },
    /// `Heis(p)`, unitriangular 3×3 matrices over F_p.
    Heisenberg(u64),
    Product(Vec<GroupExpr>),
}

impl GroupExpr {
    /// Order implied by the expression, saturating on overflow.
    pub fn order(&self) -> usize {
        match self {
            GroupExpr::Cyclic(n) => *n,
            GroupExpr::Abelian { p, exponents } => exponents.iter().fold(1usize, |acc, &e| {
                acc.saturating_mul((*p as usize).saturating_pow(e))
            }),
            GroupExpr::Dihedral(n) => n.saturating_mul(2),
            GroupExpr::Quaternion(n) | GroupExpr::SemiDihedral(n) => *n,
            GroupExpr::Modular { p, k } => (*p as usize).saturating_pow(*k),
            GroupExpr::Heisenberg(p) => (*p as usize).saturating_pow(3),
            GroupExpr::Product(fs) => fs
                .iter()
                .fold(1usize, |acc, f| acc.saturating_mul(f.order())),
        }
    }

    pub fn factors(&self) -> &[GroupExpr] {
        match self {
            GroupExpr::Product(fs) => fs,
            other => std::slice::from_ref(other),
        }
    }

    /// Cyclic and `Ab` leaves, and products of them.
    pub fn is_syntactically_abelian(&self) -> bool {
        match self {
            GroupExpr::Cyclic(_) | GroupExpr::Abelian { .. } => true,
            GroupExpr::Product(fs) => fs.iter().all(GroupExpr::is_syntactically_abelian),
            _ => false,
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C({n})"),
            GroupExpr::Abelian { p, exponents } => write!(f, "Ab({p}; {})", join(exponents)),
            GroupExpr::Dihedral(n) => write!(f, "D({n})"),
            GroupExpr::Quaternion(n) => write!(f, "Q({n})"),
            GroupExpr::SemiDihedral(n) => write!(f, "SD({n})"),
            GroupExpr::Modular { p, k } => write!(f, "Mod({p}, {k})"),
            GroupExpr::Heisenberg(p) => write!(f, "Heis({p})"),
            GroupExpr::Product(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    match factor {
                        GroupExpr::Product(_) => write!(f, "({factor})")?,
                        _ => write!(f, "{factor}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

/// Source text plus its parsed expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub source: String,
    pub ast: GroupExpr,
}

impl GroupSpec {
    pub fn parse(source: &str) -> Result<GroupSpec> {
        Ok(GroupSpec {
            source: source.to_string(),
            ast: parse(source)?,
        })
    }

    pub fn canonical(&self) -> String {
        self.ast.to_string()
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Name(String),
    Int(u64),
    Open,
    Close,
    Comma,
    Semi,
    Times,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' | ',' | ';' | '×' => {
                chars.next();
                out.push((
                    pos,
                    match c {
                        '(' => Token::Open,
                        ')' => Token::Close,
                        ',' => Token::Comma,
                        ';' => Token::Semi,
                        _ => Token::Times,
                    },
                ));
            }
            '0'..='9' => {
                let mut end = pos;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + d.len_utf8();
                    chars.next();
                }
                let value = src[pos..end].parse().map_err(|_| GroupError::Parse {
                    position: pos,
                    message: "integer out of range".into(),
                })?;
                out.push((pos, Token::Int(value)));
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = pos;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_alphanumeric() {
                        break;
                    }
                    end = i + d.len_utf8();
                    chars.next();
                }
                let word = &src[pos..end];
                out.push((
                    pos,
                    if word == "x" {
                        Token::Times
                    } else {
                        Token::Name(word.to_string())
                    },
                ));
            }
            other => {
                return Err(GroupError::Parse {
                    position: pos,
                    message: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn position(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(GroupError::Parse {
            position: self.position(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.at += 1;
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn product(&mut self) -> Result<GroupExpr> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Token::Times) {
            self.at += 1;
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            GroupExpr::Product(factors)
        })
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek() {
            Some(Token::Int(v)) => {
                let v = *v;
                self.at += 1;
                Ok(v)
            }
            _ => self.error("expected an integer"),
        }
    }

    fn int_list(&mut self) -> Result<Vec<u64>> {
        let mut values = vec![self.int()?];
        while self.peek() == Some(&Token::Comma) {
            self.at += 1;
            values.push(self.int()?);
        }
        Ok(values)
    }

    fn factor(&mut self) -> Result<GroupExpr> {
        match self.peek().cloned() {
            Some(Token::Open) => {
                self.at += 1;
                let inner = self.product()?;
                self.expect(Token::Close, "')'")?;
                Ok(inner)
            }
            Some(Token::Name(name)) => {
                let name_pos = self.position();
                self.at += 1;
                self.expect(Token::Open, "'('")?;
                let expr = if name == "Ab" {
                    let p = self.int()?;
                    self.expect(Token::Semi, "';'")?;
                    let exponents = self.int_list()?.into_iter().map(|e| e as u32).collect();
                    GroupExpr::Abelian { p, exponents }
                } else {
                    let args = self.int_list()?;
                    let arity = if name == "Mod" { 2 } else { 1 };
                    if args.len() != arity {
                        return Err(GroupError::Parse {
                            position: name_pos,
                            message: format!("{name} takes {arity} argument(s)"),
                        });
                    }
                    let n = args[0] as usize;
                    match name.as_str() {
                        "C" => GroupExpr::Cyclic(n),
                        "D" => GroupExpr::Dihedral(n),
                        "Q" => GroupExpr::Quaternion(n),
                        "SD" => GroupExpr::SemiDihedral(n),
                        "Heis" => GroupExpr::Heisenberg(args[0]),
                        "Mod" => GroupExpr::Modular {
                            p: args[0],
                            k: args[1] as u32,
                        },
                        _ => {
                            return Err(GroupError::Parse {
                                position: name_pos,
                                message: format!("unknown constructor {name}"),
                            })
                        }
                    }
                };
                self.expect(Token::Close, "')'")?;
                Ok(expr)
            }
            _ => self.error("expected a constructor or '('"),
        }
    }
}

pub fn parse(src: &str) -> Result<GroupExpr> {
    let mut parser = Parser {
        tokens: tokenize(src)?,
        at: 0,
        end: src.len(),
    };
    let expr = parser.product()?;
    if parser.at != parser.tokens.len() {
        return parser.error("trailing input");
    }
    Ok(expr)
}
