use std::collections::BTreeSet;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

use serde::{Serialize, Serializer};

use super::config::bit_of;

/// Boolean expression over automaton states.
///
/// Variables are stored 0-based and printed 1-based (`x1` is automaton 1).
/// Binary operators are left-associative, matching the model text format.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(bool),
    Var(usize),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn var(i: usize) -> Expr {
        Expr::Var(i)
    }

    /// Left fold of `&` over `terms`; the empty conjunction is `1`.
    pub fn all(terms: impl IntoIterator<Item = Expr>) -> Expr {
        terms
            .into_iter()
            .reduce(|a, b| a & b)
            .unwrap_or(Expr::Const(true))
    }

    /// Left fold of `|` over `terms`; the empty disjunction is `0`.
    pub fn any(terms: impl IntoIterator<Item = Expr>) -> Expr {
        terms
            .into_iter()
            .reduce(|a, b| a | b)
            .unwrap_or(Expr::Const(false))
    }

    pub fn eval(&self, value: u32, n: usize) -> bool {
        match self {
            Expr::Const(b) => *b,
            Expr::Var(i) => bit_of(value, n, *i),
            Expr::Not(e) => !e.eval(value, n),
            Expr::And(a, b) => a.eval(value, n) && b.eval(value, n),
            Expr::Or(a, b) => a.eval(value, n) || b.eval(value, n),
        }
    }

    /// Evaluates with an explicit variable assignment.
    pub fn eval_with(&self, assign: &dyn Fn(usize) -> bool) -> bool {
        match self {
            Expr::Const(b) => *b,
            Expr::Var(i) => assign(*i),
            Expr::Not(e) => !e.eval_with(assign),
            Expr::And(a, b) => a.eval_with(assign) && b.eval_with(assign),
            Expr::Or(a, b) => a.eval_with(assign) || b.eval_with(assign),
        }
    }

    /// Syntactic variables, sorted.
    pub fn variables(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<usize>) {
        match self {
            Expr::Const(_) => {}
            Expr::Var(i) => {
                out.insert(*i);
            }
            Expr::Not(e) => e.collect_vars(out),
            Expr::And(a, b) | Expr::Or(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Or(..) => 1,
            Expr::And(..) => 2,
            _ => 3,
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Expr {
    /// Canonical text: minimal parentheses that re-parse to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(b) => write!(f, "{}", *b as u8),
            Expr::Var(i) => write!(f, "x{}", i + 1),
            Expr::Not(e) => {
                f.write_str("!")?;
                e.fmt_operand(f, 3)
            }
            Expr::And(a, b) => {
                a.fmt_operand(f, 2)?;
                f.write_str(" & ")?;
                b.fmt_operand(f, 3)
            }
            Expr::Or(a, b) => {
                a.fmt_operand(f, 1)?;
                f.write_str(" | ")?;
                b.fmt_operand(f, 2)
            }
        }
    }
}

impl Serialize for Expr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl BitAnd for Expr {
    type Output = Expr;
    fn bitand(self, rhs: Expr) -> Expr {
        Expr::And(Box::new(self), Box::new(rhs))
    }
}

impl BitOr for Expr {
    type Output = Expr;
    fn bitor(self, rhs: Expr) -> Expr {
        Expr::Or(Box::new(self), Box::new(rhs))
    }
}

impl Not for Expr {
    type Output = Expr;
    fn not(self) -> Expr {
        Expr::Not(Box::new(self))
    }
}
