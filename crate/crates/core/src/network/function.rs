use serde::Serialize;

use super::config::{bit_of, check_size, mask_of, Configuration};
use super::expr::Expr;
use crate::error::{Error, Result};

/// Local function of one automaton: the expression as written plus a truth
/// table over its essential variables.
#[derive(Debug, Clone, Serialize)]
pub struct LocalFunction {
    target: usize,
    n: usize,
    expr: Expr,
    support: Vec<usize>,
    #[serde(skip)]
    table: Vec<u64>,
}

impl PartialEq for LocalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.target == other.target && self.n == other.n && self.expr == other.expr
    }
}

impl Eq for LocalFunction {}

fn table_get(table: &[u64], idx: usize) -> bool {
    (table[idx >> 6] >> (idx & 63)) & 1 == 1
}

fn table_with_len(bits: usize) -> Vec<u64> {
    vec![0; bits.div_ceil(64)]
}

impl LocalFunction {
    /// `target` and every variable of `expr` are 0-based automaton indices below `n`.
    pub fn new(target: usize, expr: Expr, n: usize) -> Result<Self> {
        check_size(n)?;
        if target >= n {
            return Err(Error::InvalidArgument(format!(
                "target automaton {} outside 1..={n}",
                target + 1
            )));
        }
        let vars: Vec<usize> = expr.variables().into_iter().collect();
        if let Some(&bad) = vars.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidArgument(format!(
                "variable x{} outside 1..={n}",
                bad + 1
            )));
        }

        // truth table over the syntactic variables, bit k of the index <-> vars[k]
        let rows = 1usize << vars.len();
        let mut full = table_with_len(rows);
        for idx in 0..rows {
            let assign = |v: usize| {
                let k = vars.binary_search(&v).expect("collected variable");
                (idx >> k) & 1 == 1
            };
            if expr.eval_with(&assign) {
                full[idx >> 6] |= 1 << (idx & 63);
            }
        }

        let essential: Vec<usize> = (0..vars.len())
            .filter(|&k| {
                (0..rows).any(|idx| table_get(&full, idx) != table_get(&full, idx ^ (1 << k)))
            })
            .collect();

        let support: Vec<usize> = essential.iter().map(|&k| vars[k]).collect();
        let reduced_rows = 1usize << support.len();
        let mut table = table_with_len(reduced_rows);
        for idx in 0..reduced_rows {
            let full_idx = essential
                .iter()
                .enumerate()
                .filter(|(j, _)| (idx >> j) & 1 == 1)
                .fold(0usize, |acc, (_, &k)| acc | (1 << k));
            if table_get(&full, full_idx) {
                table[idx >> 6] |= 1 << (idx & 63);
            }
        }

        Ok(LocalFunction {
            target,
            n,
            expr,
            support,
            table,
        })
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    /// Essential variables, sorted, 0-based.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// Output for the `idx`-th row of the support table (bit k <-> `support()[k]`).
    pub fn row(&self, idx: usize) -> bool {
        table_get(&self.table, idx)
    }

    #[inline]
    pub fn eval(&self, value: u32) -> bool {
        let idx = self
            .support
            .iter()
            .enumerate()
            .fold(0usize, |acc, (k, &v)| {
                acc | ((bit_of(value, self.n, v) as usize) << k)
            });
        table_get(&self.table, idx)
    }

    pub fn eval_config(&self, x: &Configuration) -> bool {
        assert_eq!(x.len(), self.n, "configuration size mismatch");
        self.eval(x.encode())
    }
}

/// A Boolean automata network: one local function per automaton.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BooleanNetwork {
    name: String,
    n: usize,
    locals: Vec<LocalFunction>,
}

impl BooleanNetwork {
    /// `exprs[i]` is the local function of automaton `i` (0-based).
    pub fn new(name: impl Into<String>, exprs: Vec<Expr>) -> Result<Self> {
        let n = exprs.len();
        check_size(n)?;
        let locals = exprs
            .into_iter()
            .enumerate()
            .map(|(i, e)| LocalFunction::new(i, e, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(BooleanNetwork {
            name: name.into(),
            n,
            locals,
        })
    }

    /// The network `f_i(x) = x_i`.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new("identity", (0..n).map(Expr::var).collect())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn locals(&self) -> &[LocalFunction] {
        &self.locals
    }

    /// Local function of automaton `i` (0-based).
    pub fn local(&self, i: usize) -> &LocalFunction {
        &self.locals[i]
    }

    pub fn eval_local(&self, i: usize, value: u32) -> bool {
        self.locals[i].eval(value)
    }

    /// Synchronous image: every component reads the same input.
    pub fn eval_global(&self, value: u32) -> u32 {
        self.locals
            .iter()
            .enumerate()
            .filter(|(_, f)| f.eval(value))
            .fold(0u32, |acc, (i, _)| acc | mask_of(self.n, i))
    }

    pub fn eval_config(&self, x: &Configuration) -> Configuration {
        assert_eq!(x.len(), self.n, "configuration size mismatch");
        Configuration::decode(self.eval_global(x.encode()) as u64, self.n)
            .expect("image stays in range")
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        (0..1u32 << self.n)
            .filter(|&x| self.eval_global(x) == x)
            .collect()
    }
}
