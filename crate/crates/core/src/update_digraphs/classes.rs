use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::compact::compact_representative;
use super::digraph::Digraph;
use super::label::{enumerate_update_digraphs, label_mode, LabeledDigraph};
use crate::error::Result;
use crate::schedules::BlockSequentialMode;

/// Block-sequential modes sharing one update digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpdateDigraphClass {
    pub labeling: LabeledDigraph,
    pub representative: BlockSequentialMode,
    /// Present when the class was built from an explicit stream of modes.
    pub members: Option<Vec<BlockSequentialMode>>,
}

/// Groups `modes` by labeling; classes come in labeling order, members in
/// stream order.
pub fn classify_modes(
    graph: &Digraph,
    modes: impl IntoIterator<Item = BlockSequentialMode>,
) -> Result<Vec<UpdateDigraphClass>> {
    let mut groups: BTreeMap<LabeledDigraph, Vec<BlockSequentialMode>> = BTreeMap::new();
    for m in modes {
        groups.entry(label_mode(graph, &m)?).or_default().push(m);
    }
    groups
        .into_iter()
        .map(|(labeling, members)| {
            Ok(UpdateDigraphClass {
                representative: compact_representative(&labeling)?,
                labeling,
                members: Some(members),
            })
        })
        .collect()
}

/// One class per valid labeling, without member lists.
pub fn update_digraph_classes(graph: &Digraph) -> Result<Vec<UpdateDigraphClass>> {
    enumerate_update_digraphs(graph)?
        .into_par_iter()
        .map(|labeling| {
            Ok(UpdateDigraphClass {
                representative: compact_representative(&labeling)?,
                labeling,
                members: None,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schedules::enumerate_block_sequential;

    #[test]
    fn ud3_classes() {
        let g = Digraph::new(3, [(1, 0), (0, 1), (1, 2)]).unwrap();
        let classes = classify_modes(&g, enumerate_block_sequential(3).unwrap()).unwrap();
        let mut sizes: Vec<usize> = classes
            .iter()
            .map(|c| c.members.as_ref().unwrap().len())
            .collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(sizes, vec![4, 3, 2, 2, 1, 1]);
        for c in &classes {
            assert_eq!(label_mode(&g, &c.representative).unwrap(), c.labeling);
        }
        let direct = update_digraph_classes(&g).unwrap();
        assert_eq!(direct.len(), 6);
        for (a, b) in classes.iter().zip(&direct) {
            assert_eq!(a.labeling, b.labeling);
            assert_eq!(a.representative, b.representative);
        }
    }

    #[test]
    fn single_mode_stream() {
        let g = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let par = BlockSequentialMode::parallel(3).unwrap();
        let classes = classify_modes(&g, vec![par.clone(), par]).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members.as_ref().unwrap().len(), 2);
    }
}
