use serde::Serialize;

use super::config::check_size;
use super::expr::Expr;
use super::function::BooleanNetwork;
use crate::error::{Error, Result};

/// `f_i(x) = H(Σ_j w[i][j]·x_j − θ_i)` with `H(y) = 1` iff `y ≥ 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdNetwork {
    pub name: String,
    /// `weights[i][j]`: influence of automaton `j` on automaton `i`.
    pub weights: Vec<Vec<f64>>,
    pub thresholds: Vec<f64>,
}

pub fn heaviside(y: f64) -> bool {
    y >= 0.0
}

impl ThresholdNetwork {
    pub fn new(
        name: impl Into<String>,
        weights: Vec<Vec<f64>>,
        thresholds: Vec<f64>,
    ) -> Result<Self> {
        let n = thresholds.len();
        check_size(n)?;
        if weights.len() != n || weights.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "weight matrix must be {n}x{n}"
            )));
        }
        if weights
            .iter()
            .flatten()
            .chain(&thresholds)
            .any(|v| !v.is_finite())
        {
            return Err(Error::InvalidArgument(
                "weights and thresholds must be finite".into(),
            ));
        }
        Ok(ThresholdNetwork {
            name: name.into(),
            weights,
            thresholds,
        })
    }

    pub fn size(&self) -> usize {
        self.thresholds.len()
    }

    /// Heaviside rule of automaton `i` on the encoded configuration.
    pub fn eval_local(&self, i: usize, value: u32) -> bool {
        let n = self.size();
        let sum: f64 = (0..n)
            .filter(|&j| (value >> (n - 1 - j)) & 1 == 1)
            .map(|j| self.weights[i][j])
            .sum();
        heaviside(sum - self.thresholds[i])
    }

    pub fn eval_global(&self, value: u32) -> u32 {
        let n = self.size();
        (0..n)
            .filter(|&i| self.eval_local(i, value))
            .fold(0, |acc, i| acc | 1 << (n - 1 - i))
    }

    /// Tabulates each Heaviside rule over its non-zero inputs and writes it as
    /// a canonical DNF: one minterm per true row, rows in increasing order.
    pub fn to_boolean(&self) -> Result<BooleanNetwork> {
        let n = self.size();
        let exprs = (0..n)
            .map(|i| {
                let inputs: Vec<usize> = (0..n).filter(|&j| self.weights[i][j] != 0.0).collect();
                let rows = 1usize << inputs.len();
                let truth: Vec<bool> = (0..rows)
                    .map(|row| {
                        let sum: f64 = inputs
                            .iter()
                            .enumerate()
                            .filter(|(k, _)| (row >> (inputs.len() - 1 - k)) & 1 == 1)
                            .map(|(_, &j)| self.weights[i][j])
                            .sum();
                        heaviside(sum - self.thresholds[i])
                    })
                    .collect();
                canonical_dnf(&inputs, &truth)
            })
            .collect();
        BooleanNetwork::new(self.name.clone(), exprs)
    }
}

/// DNF over `inputs` (row bits MSB-first in `inputs` order) restricted to the
/// essential inputs of the table.
fn canonical_dnf(inputs: &[usize], truth: &[bool]) -> Expr {
    let width = inputs.len();
    let bit = |row: usize, k: usize| (row >> (width - 1 - k)) & 1 == 1;
    let essential: Vec<usize> = (0..width)
        .filter(|&k| (0..truth.len()).any(|row| truth[row] != truth[row ^ (1 << (width - 1 - k))]))
        .collect();
    if essential.is_empty() {
        return Expr::Const(truth[0]);
    }
    let minterms = (0..1usize << essential.len()).filter_map(|sub| {
        // sub enumerates the essential inputs MSB-first; inessential ones are read as 0
        let row = essential
            .iter()
            .enumerate()
            .filter(|(e, _)| (sub >> (essential.len() - 1 - e)) & 1 == 1)
            .fold(0usize, |acc, (_, &k)| acc | 1 << (width - 1 - k));
        truth[row].then(|| {
            Expr::all(essential.iter().map(|&k| {
                let v = Expr::var(inputs[k]);
                if bit(row, k) {
                    v
                } else {
                    !v
                }
            }))
        })
    });
    Expr::any(minterms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psi_weights() -> Vec<Vec<f64>> {
        vec![
            vec![0., 0., 1., 0., 0., 0.],
            vec![-1., 0., 0., 0., 0., 0.],
            vec![0., 1., 0., 1., 0., 0.],
            vec![0., 0., -1., 0., 0., 1.],
            vec![0., 0., 0., 1., 0., 0.],
            vec![0., 0., 0., 0., 1., 0.],
        ]
    }

    fn psi() -> BooleanNetwork {
        let x = |i: usize| Expr::var(i - 1);
        BooleanNetwork::new(
            "psi",
            vec![x(3), !x(1), x(2) | x(4), !x(3) & x(6), x(4), x(5)],
        )
        .unwrap()
    }

    #[test]
    fn zero_weights_zero_threshold_are_constant_one() {
        let t = ThresholdNetwork::new("z", vec![vec![0.0; 3]; 3], vec![0.0; 3]).unwrap();
        let b = t.to_boolean().unwrap();
        for f in b.locals() {
            assert_eq!(f.expr(), &Expr::Const(true));
        }
    }

    #[test]
    fn single_automaton_identity() {
        let t = ThresholdNetwork::new("one", vec![vec![1.0]], vec![1.0]).unwrap();
        let b = t.to_boolean().unwrap();
        assert_eq!(b.local(0).expr(), &Expr::var(0));
    }

    #[test]
    fn conversion_matches_heaviside_rule_everywhere() {
        let t =
            ThresholdNetwork::new("psi", psi_weights(), vec![0., 0., 0., -0.5, 0., 0.]).unwrap();
        let b = t.to_boolean().unwrap();
        for v in 0..64 {
            assert_eq!(b.eval_global(v), t.eval_global(v));
        }
    }

    #[test]
    fn shifted_thresholds_reproduce_psi() {
        // H(y) = 1 at y = 0 forces positive thresholds on the purely
        // activating rules and a positive one on f_4.
        let t =
            ThresholdNetwork::new("psi", psi_weights(), vec![0.5, 0., 0.5, 0.5, 0.5, 0.5]).unwrap();
        let b = t.to_boolean().unwrap();
        let reference = psi();
        for v in 0..64 {
            assert_eq!(b.eval_global(v), reference.eval_global(v), "config {v}");
        }
        assert_eq!(b.local(3).expr().to_string(), "!x3 & x6");
        assert_eq!(
            b.local(2).expr().to_string(),
            "!x2 & x4 | x2 & !x4 | x2 & x4"
        );
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(ThresholdNetwork::new("bad", vec![vec![0.0; 2]; 3], vec![0.0; 3]).is_err());
        assert!(ThresholdNetwork::new("nan", vec![vec![f64::NAN]], vec![0.0]).is_err());
    }
}
