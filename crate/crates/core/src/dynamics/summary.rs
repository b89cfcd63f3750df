use rayon::prelude::*;
use serde::Serialize;

use super::attractor::{find_attractors, lc_signature, Attractor, Signature};
use super::transition::{build_transition_graph, TransitionGraph};
use crate::error::Result;
use crate::network::{derive_interaction_graph, BooleanNetwork};
use crate::schedules::{normalize_mode, UpdateMode};
use crate::update_digraphs::{update_digraph_classes, LabeledDigraph, UpdateDigraphClass};

/// Attractors of one dynamics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DynamicsSummary {
    pub mode: UpdateMode,
    pub labeling: Option<LabeledDigraph>,
    pub attractors: Vec<Attractor>,
    pub signature: Signature,
}

impl DynamicsSummary {
    pub fn from_graph(
        mode: UpdateMode,
        labeling: Option<LabeledDigraph>,
        tg: &TransitionGraph,
    ) -> Self {
        let attractors = find_attractors(tg);
        let signature = lc_signature(&attractors);
        DynamicsSummary {
            mode,
            labeling,
            attractors,
            signature,
        }
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = u32> + '_ {
        self.attractors
            .iter()
            .filter(|a| a.is_fixed_point())
            .map(|a| a.configs[0])
    }
}

/// Transition graph and attractors of `net` under `mode`.
pub fn analyze_mode(
    net: &BooleanNetwork,
    mode: &UpdateMode,
) -> Result<(TransitionGraph, DynamicsSummary)> {
    let tg = build_transition_graph(net, &normalize_mode(mode))?;
    let summary = DynamicsSummary::from_graph(mode.clone(), None, &tg);
    Ok((tg, summary))
}

/// One summary per update digraph of the interaction graph, computed under
/// the compact representative, in labeling order.
pub fn sweep_block_sequential(net: &BooleanNetwork) -> Result<Vec<DynamicsSummary>> {
    let graph = derive_interaction_graph(net).digraph();
    let classes = update_digraph_classes(&graph)?;
    sweep_classes(net, &classes)
}

pub fn sweep_classes(
    net: &BooleanNetwork,
    classes: &[UpdateDigraphClass],
) -> Result<Vec<DynamicsSummary>> {
    classes
        .par_iter()
        .map(|c| {
            let mode = UpdateMode::from(c.representative.clone());
            let tg = build_transition_graph(net, &normalize_mode(&mode))?;
            Ok(DynamicsSummary::from_graph(
                mode,
                Some(c.labeling.clone()),
                &tg,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::Expr;

    #[test]
    fn single_automaton_identity() {
        let net = BooleanNetwork::identity(1).unwrap();
        let s = sweep_block_sequential(&net).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].signature.to_string(), "LC-(1,1)");
    }

    #[test]
    fn cycle3_sweep_fixes_both_constants() {
        let x = Expr::var;
        let net = BooleanNetwork::new("cycle3", vec![x(2), x(0), x(1)]).unwrap();
        let s = sweep_block_sequential(&net).unwrap();
        assert_eq!(s.len(), 7);
        for d in &s {
            let fp: Vec<u32> = d.fixed_points().collect();
            assert!(fp.contains(&0) && fp.contains(&7));
            assert_eq!(d.attractors.iter().map(|a| a.basin_size).sum::<u64>(), 8);
        }
    }
}
