use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::function::BooleanNetwork;
use crate::update_digraphs::Digraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// `source` acts on `target` with `sign`; indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedEdge {
    pub source: usize,
    pub target: usize,
    pub sign: Sign,
}

impl SignedEdge {
    /// Builds an edge from 1-based indices, as written in the figures.
    pub fn one_based(source: usize, sign: Sign, target: usize) -> Self {
        SignedEdge {
            source: source - 1,
            target: target - 1,
            sign,
        }
    }
}

impl fmt::Display for SignedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.source + 1, self.sign, self.target + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedInteractionGraph {
    pub n: usize,
    pub edges: BTreeSet<SignedEdge>,
}

impl SignedInteractionGraph {
    /// Unsigned arcs, one per (source, target) pair carrying at least one sign.
    pub fn digraph(&self) -> Digraph {
        Digraph::new(self.n, self.edges.iter().map(|e| (e.source, e.target)))
            .expect("edges within range")
    }

    pub fn has_only_positive_edges(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Positive)
    }
}

/// Signed edges by the discrete-derivative test: `(i, +, j)` iff raising `x_i`
/// from 0 to 1 raises `f_j` from 0 to 1 in some context, `(i, -, j)` iff it
/// lowers it in some context. Only the support of each `f_j` is scanned.
pub fn derive_interaction_graph(net: &BooleanNetwork) -> SignedInteractionGraph {
    let mut edges = BTreeSet::new();
    for (j, f) in net.locals().iter().enumerate() {
        let support = f.support();
        for (k, &i) in support.iter().enumerate() {
            let (mut pos, mut neg) = (false, false);
            for idx in 0..(1usize << support.len()) {
                if (idx >> k) & 1 == 1 {
                    continue;
                }
                let low = f.row(idx);
                let high = f.row(idx | (1 << k));
                pos |= !low && high;
                neg |= low && !high;
                if pos && neg {
                    break;
                }
            }
            if pos {
                edges.insert(SignedEdge {
                    source: i,
                    target: j,
                    sign: Sign::Positive,
                });
            }
            if neg {
                edges.insert(SignedEdge {
                    source: i,
                    target: j,
                    sign: Sign::Negative,
                });
            }
        }
    }
    SignedInteractionGraph {
        n: net.size(),
        edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::Expr;

    fn x(i: usize) -> Expr {
        Expr::var(i - 1)
    }

    /// Flip test over every full configuration, independent of the support tables.
    fn brute_force(net: &BooleanNetwork) -> BTreeSet<SignedEdge> {
        let n = net.size();
        let mut out = BTreeSet::new();
        for j in 0..n {
            for i in 0..n {
                let m = 1u32 << (n - 1 - i);
                for v in 0..(1u32 << n) {
                    if v & m != 0 {
                        continue;
                    }
                    let (lo, hi) = (net.eval_local(j, v), net.eval_local(j, v | m));
                    if !lo && hi {
                        out.insert(SignedEdge {
                            source: i,
                            target: j,
                            sign: Sign::Positive,
                        });
                    }
                    if lo && !hi {
                        out.insert(SignedEdge {
                            source: i,
                            target: j,
                            sign: Sign::Negative,
                        });
                    }
                }
            }
        }
        out
    }

    #[test]
    fn psi_graph_matches_figure() {
        use Sign::*;
        let net = BooleanNetwork::new(
            "psi",
            vec![x(3), !x(1), x(2) | x(4), !x(3) & x(6), x(4), x(5)],
        )
        .unwrap();
        let expected: BTreeSet<_> = [
            (3, Positive, 1),
            (1, Negative, 2),
            (2, Positive, 3),
            (4, Positive, 3),
            (3, Negative, 4),
            (6, Positive, 4),
            (4, Positive, 5),
            (5, Positive, 6),
        ]
        .into_iter()
        .map(|(s, sg, t)| SignedEdge::one_based(s, sg, t))
        .collect();
        let g = derive_interaction_graph(&net);
        assert_eq!(g.edges, expected);
        assert_eq!(g.edges, brute_force(&net));
    }

    #[test]
    fn constants_have_no_edges() {
        let net = BooleanNetwork::new("c", vec![Expr::Const(true), Expr::Const(false)]).unwrap();
        assert!(derive_interaction_graph(&net).edges.is_empty());
    }

    #[test]
    fn xor_is_both_signs() {
        // f_3 = x1 xor x2
        let xor = (x(1) & !x(2)) | (!x(1) & x(2));
        let net = BooleanNetwork::new("xor", vec![x(1), x(2), xor]).unwrap();
        let g = derive_interaction_graph(&net);
        assert!(g
            .edges
            .contains(&SignedEdge::one_based(1, Sign::Positive, 3)));
        assert!(g
            .edges
            .contains(&SignedEdge::one_based(1, Sign::Negative, 3)));
        assert_eq!(g.edges, brute_force(&net));
    }

    #[test]
    fn inessential_variable_gives_no_edge() {
        let net = BooleanNetwork::new("e", vec![x(1) | (x(2) & !x(2)), x(2)]).unwrap();
        let g = derive_interaction_graph(&net);
        assert_eq!(g.edges.len(), 2);
        assert_eq!(g.edges, brute_force(&net));
    }
}
