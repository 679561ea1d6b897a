//! Group expressions such as `Z(4)xD(8)` or `SD(9,8)`.
//!
//! ```text
//! expr := term ("x" term)*
//! term := "Z(" int ")" | "D(" int ")" | "Q(" int ")" | "SD(" int "," int ")"
//! ```
//!
//! Whitespace between tokens is ignored. `D(m)` and `Q(m)` take the group
//! order, so `D(6)` is the symmetric group on three letters.

use std::fmt;

use involute_core::arith::unit_involutions;
use involute_core::group::{Constructor, FiniteGroup, GroupError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(u64),
    Dihedral(u64),
    Dicyclic(u64),
    Semidirect(u64, u64),
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at position {position}: expected {expected}, found {}", found.map_or(String::from("end of input"), |c| format!("{c:?}")))]
    Syntax {
        position: usize,
        expected: &'static str,
        found: Option<char>,
    },
    #[error("invalid {atom}: {reason}")]
    Semantic { atom: String, reason: String },
}

impl GroupExpr {
    /// Order of the evaluated group, exact.
    pub fn order(&self) -> u128 {
        match self {
            GroupExpr::Cyclic(n) | GroupExpr::Dihedral(n) | GroupExpr::Dicyclic(n) => {
                u128::from(*n)
            }
            GroupExpr::Semidirect(n, _) => 2 * u128::from(*n),
            GroupExpr::Product(a, b) => a.order().saturating_mul(b.order()),
        }
    }

    /// Builds the group; products are taken left to right.
    pub fn eval(&self, k: &Constructor) -> Result<FiniteGroup, GroupError> {
        let order = self.order();
        if order > k.table_cap as u128 {
            return Err(GroupError::TooLarge {
                order,
                cap: k.table_cap,
            });
        }
        match self {
            GroupExpr::Cyclic(n) => k.cyclic(*n),
            GroupExpr::Dihedral(m) => k.dihedral(*m),
            GroupExpr::Dicyclic(m) => k.dicyclic(*m),
            GroupExpr::Semidirect(n, u) => k.semidirect_zn_z2(*n, *u),
            GroupExpr::Product(a, b) => k.direct_product(&a.eval(k)?, &b.eval(k)?),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "Z({n})"),
            GroupExpr::Dihedral(m) => write!(f, "D({m})"),
            GroupExpr::Dicyclic(m) => write!(f, "Q({m})"),
            GroupExpr::Semidirect(n, u) => write!(f, "SD({n},{u})"),
            GroupExpr::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.pos)
            .is_some_and(|(_, c)| c.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(i, _)| i)
    }

    fn error(&mut self, expected: &'static str) -> ExprError {
        let found = self.peek();
        ExprError::Syntax {
            position: self.offset(),
            expected,
            found,
        }
    }

    fn expect(&mut self, want: char, expected: &'static str) -> Result<(), ExprError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn int(&mut self) -> Result<u64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.chars.get(self.pos).and_then(|(_, c)| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d)))
                .ok_or_else(|| ExprError::Semantic {
                    atom: String::from("integer"),
                    reason: String::from("does not fit in 64 bits"),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("an integer"));
        }
        Ok(value)
    }

    fn term(&mut self) -> Result<GroupExpr, ExprError> {
        let head = match self.peek() {
            Some(c @ ('Z' | 'D' | 'Q')) => {
                self.pos += 1;
                c
            }
            Some('S') => {
                self.pos += 1;
                if self.peek() != Some('D') {
                    return Err(self.error("'D' after 'S'"));
                }
                self.pos += 1;
                'S'
            }
            _ => return Err(self.error("one of Z(, D(, Q(, SD(")),
        };
        self.expect('(', "'('")?;
        let a = self.int()?;
        let atom = if head == 'S' {
            self.expect(',', "','")?;
            let u = self.int()?;
            GroupExpr::Semidirect(a, u)
        } else {
            match head {
                'Z' => GroupExpr::Cyclic(a),
                'D' => GroupExpr::Dihedral(a),
                _ => GroupExpr::Dicyclic(a),
            }
        };
        self.expect(')', "')'")?;
        check_atom(&atom)?;
        Ok(atom)
    }

    fn expr(&mut self) -> Result<GroupExpr, ExprError> {
        let mut acc = self.term()?;
        while self.peek() == Some('x') {
            self.pos += 1;
            let rhs = self.term()?;
            acc = GroupExpr::Product(Box::new(acc), Box::new(rhs));
        }
        if self.peek().is_some() {
            return Err(self.error("'x' or end of input"));
        }
        Ok(acc)
    }
}

fn check_atom(atom: &GroupExpr) -> Result<(), ExprError> {
    let bad = |reason: &str| {
        Err(ExprError::Semantic {
            atom: atom.to_string(),
            reason: String::from(reason),
        })
    };
    match *atom {
        GroupExpr::Cyclic(0) => bad("order must be positive"),
        GroupExpr::Dihedral(m) if m < 2 || m % 2 != 0 => {
            bad("dihedral order must be even and at least 2")
        }
        GroupExpr::Dicyclic(m) if m < 8 || m % 4 != 0 => {
            bad("dicyclic order must be a multiple of 4 and at least 8")
        }
        GroupExpr::Semidirect(n, u) => match unit_involutions(n) {
            Ok(units) if units.contains(&u) => Ok(()),
            Ok(_) => bad("u must satisfy u^2 = 1 mod n"),
            Err(_) => bad("modulus must be at least 2"),
        },
        _ => Ok(()),
    }
}

pub fn parse_group_expr(text: &str) -> Result<GroupExpr, ExprError> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        text,
    };
    p.expr()
}
