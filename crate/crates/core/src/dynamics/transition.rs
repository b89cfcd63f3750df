use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::network::BooleanNetwork;
use crate::schedules::UpdateSequence;

/// Functional graph of one period of an update mode over all `2^n` configurations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransitionGraph {
    n: usize,
    successor: Vec<u32>,
}

impl TransitionGraph {
    /// Wraps a raw successor table of length `2^n`.
    pub fn from_successors(n: usize, successor: Vec<u32>) -> Result<Self> {
        crate::network::check_size(n)?;
        let len = 1usize << n;
        if successor.len() != len || successor.iter().any(|&s| s as usize >= len) {
            return Err(Error::InvalidArgument(format!(
                "successor table is not a map on {len} configurations"
            )));
        }
        Ok(TransitionGraph { n, successor })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn successor(&self, x: u32) -> u32 {
        self.successor[x as usize]
    }

    pub fn successors(&self) -> &[u32] {
        &self.successor
    }

    /// Number of configurations, `2^n`.
    pub fn len(&self) -> usize {
        self.successor.len()
    }

    pub fn is_empty(&self) -> bool {
        self.successor.is_empty()
    }
}

pub fn build_transition_graph(
    net: &BooleanNetwork,
    seq: &UpdateSequence,
) -> Result<TransitionGraph> {
    if seq.size() != net.size() {
        return Err(Error::SizeMismatch {
            mode: seq.size(),
            network: net.size(),
        });
    }
    let n = net.size();
    let successor = if n >= 12 {
        (0..1u32 << n)
            .into_par_iter()
            .map(|x| seq.apply(net, x))
            .collect()
    } else {
        (0..1u32 << n).map(|x| seq.apply(net, x)).collect()
    };
    Ok(TransitionGraph { n, successor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::Expr;
    use crate::schedules::{normalize_mode, UpdateMode};

    fn cycle3() -> BooleanNetwork {
        BooleanNetwork::new("cycle3", vec![Expr::var(2), Expr::var(0), Expr::var(1)]).unwrap()
    }

    fn tg(net: &BooleanNetwork, mode: &str) -> TransitionGraph {
        let m = UpdateMode::parse(mode, net.size()).unwrap();
        build_transition_graph(net, &normalize_mode(&m)).unwrap()
    }

    #[test]
    fn parallel_cycle3_rotates() {
        // x ↦ (x3, x1, x2)
        let t = tg(&cycle3(), "bs:(1,2,3)");
        assert_eq!(
            t.successors(),
            &[0b000, 0b100, 0b001, 0b101, 0b010, 0b110, 0b011, 0b111]
        );
    }

    #[test]
    fn identity_network_is_identity_map() {
        let net = BooleanNetwork::identity(4).unwrap();
        let t = tg(&net, "bs:(2)(1,4)(3)");
        assert!((0..16).all(|x| t.successor(x) == x));
    }

    #[test]
    fn size_checks() {
        let seq = normalize_mode(&UpdateMode::parse("bs:(1)(2)", 2).unwrap());
        assert!(build_transition_graph(&cycle3(), &seq).is_err());
        assert!(TransitionGraph::from_successors(1, vec![0, 2]).is_err());
        assert!(TransitionGraph::from_successors(1, vec![1, 0]).is_ok());
    }
}
