//! Structural data of the full 18-node angioedema regulatory network. Only
//! signed edges are known, so this is not a runnable model.

use crate::network::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegulatoryEdge {
    pub source: &'static str,
    /// `None` for the unsigned signalling pathway HGF → MET.
    pub sign: Option<Sign>,
    pub target: &'static str,
}

pub const ANGIOEDEMA_NODES: [&str; 18] = [
    "EGFR",
    "PI3K reg class IA",
    "ESR1",
    "Estrogen",
    "Histone",
    "SP1",
    "ERK1/2",
    "FAK1",
    "Circ_00185",
    "Circ_001730",
    "MiR125",
    "MiR320",
    "F12",
    "HGF",
    "MET",
    "SERPING1",
    "KLKB1",
    "KNG",
];

pub fn angioedema_edges() -> Vec<RegulatoryEdge> {
    use Sign::{Negative as N, Positive as P};
    [
        ("EGFR", Some(P), "SP1"),
        ("PI3K reg class IA", Some(P), "EGFR"),
        ("PI3K reg class IA", Some(P), "ESR1"),
        ("ESR1", Some(P), "SP1"),
        ("Estrogen", Some(P), "ESR1"),
        ("Histone", Some(N), "EGFR"),
        ("SP1", Some(P), "Histone"),
        ("SP1", Some(P), "MiR125"),
        ("SP1", Some(P), "MiR320"),
        ("ERK1/2", Some(P), "SP1"),
        ("FAK1", Some(P), "ERK1/2"),
        ("Circ_00185", Some(N), "MiR125"),
        ("Circ_001730", Some(N), "MiR320"),
        ("MiR125", Some(N), "F12"),
        ("MiR320", Some(N), "SERPING1"),
        ("F12", Some(P), "HGF"),
        ("F12", Some(P), "KLKB1"),
        ("HGF", None, "MET"),
        ("MET", Some(P), "FAK1"),
        ("SERPING1", Some(N), "KLKB1"),
        ("KLKB1", Some(P), "KNG"),
        ("KNG", Some(P), "F12"),
    ]
    .into_iter()
    .map(|(source, sign, target)| RegulatoryEdge {
        source,
        sign,
        target,
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_shape() {
        let edges = angioedema_edges();
        assert_eq!(edges.len(), 22);
        assert_eq!(edges.iter().filter(|e| e.sign.is_none()).count(), 1);
        for e in &edges {
            assert!(ANGIOEDEMA_NODES.contains(&e.source) && ANGIOEDEMA_NODES.contains(&e.target));
        }
        for node in ANGIOEDEMA_NODES {
            assert!(
                edges.iter().any(|e| e.source == node || e.target == node),
                "{node}"
            );
        }
    }
}
