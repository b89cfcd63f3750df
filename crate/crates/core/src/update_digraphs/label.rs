use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::digraph::Digraph;
use crate::error::{Error, Result};
use crate::schedules::BlockSequentialMode;

/// Largest arc count accepted by [`enumerate_update_digraphs`].
pub const MAX_LABELED_ARCS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// `s(i) ≥ s(j)`
    Ge,
    /// `s(i) < s(j)`
    Lt,
}

impl Label {
    pub fn token(self) -> &'static str {
        match self {
            Label::Lt => "<",
            Label::Ge => ">=",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A digraph with one label per arc, stored parallel to `graph.arcs()`.
/// Orders as the word of labels over the sorted arcs, `>=` before `<`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledDigraph {
    graph: Digraph,
    labels: Vec<Label>,
}

impl LabeledDigraph {
    pub fn new(graph: Digraph, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != graph.arc_count() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} arcs",
                labels.len(),
                graph.arc_count()
            )));
        }
        Ok(LabeledDigraph { graph, labels })
    }

    /// Labeling from a word over the sorted arcs: the first arc is the most
    /// significant of the `m` low bits, a set bit meaning `<`.
    pub fn from_word(graph: Digraph, word: u64) -> Self {
        let m = graph.arc_count();
        let labels = (0..m)
            .map(|k| {
                if word >> (m - 1 - k) & 1 == 1 {
                    Label::Lt
                } else {
                    Label::Ge
                }
            })
            .collect();
        LabeledDigraph { graph, labels }
    }

    pub fn word(&self) -> u64 {
        self.labels
            .iter()
            .fold(0, |w, &l| (w << 1) | (l == Label::Lt) as u64)
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize, j: usize) -> Option<Label> {
        self.graph
            .arcs()
            .binary_search(&(i, j))
            .ok()
            .map(|k| self.labels[k])
    }

    pub fn labeled_arcs(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        self.graph
            .arcs()
            .iter()
            .zip(&self.labels)
            .map(|(&(i, j), &l)| (i, j, l))
    }

    pub fn lt_count(&self) -> usize {
        self.labels.iter().filter(|&&l| l == Label::Lt).count()
    }
}

/// `(1,>=,2) (2,>=,1) (2,<,3)`
impl fmt::Display for LabeledDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (i, j, l)) in self.labeled_arcs().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({},{},{})", i + 1, l, j + 1)?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct LabeledArc {
    from: usize,
    label: &'static str,
    to: usize,
}

impl Serialize for LabeledDigraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.labels.len()))?;
        for (i, j, l) in self.labeled_arcs() {
            seq.serialize_element(&LabeledArc {
                from: i + 1,
                label: l.token(),
                to: j + 1,
            })?;
        }
        seq.end()
    }
}

/// `lab_s(i,j)` is `<` iff `s(i) < s(j)`.
pub fn label_mode(graph: &Digraph, mode: &BlockSequentialMode) -> Result<LabeledDigraph> {
    if mode.size() != graph.size() {
        return Err(Error::SizeMismatch {
            mode: mode.size(),
            network: graph.size(),
        });
    }
    let s = mode.block_indices();
    let labels = graph
        .arcs()
        .iter()
        .map(|&(i, j)| if s[i] < s[j] { Label::Lt } else { Label::Ge })
        .collect();
    Ok(LabeledDigraph {
        graph: graph.clone(),
        labels,
    })
}

/// Reverse every `<` arc; the labeling is an update digraph iff no reversed
/// `<` arc `(j,i)` closes a cycle, i.e. `j` is unreachable from `i`.
pub fn is_update_digraph(lg: &LabeledDigraph) -> bool {
    let n = lg.graph.size();
    let mut adj = vec![Vec::new(); n];
    for (i, j, l) in lg.labeled_arcs() {
        match l {
            Label::Ge => adj[i].push(j),
            Label::Lt => adj[j].push(i),
        }
    }
    let mut seen = vec![false; n];
    let mut stack = Vec::new();
    for (i, j, l) in lg.labeled_arcs() {
        if l != Label::Lt {
            continue;
        }
        if i == j {
            return false;
        }
        seen.iter_mut().for_each(|s| *s = false);
        stack.clear();
        stack.push(i);
        seen[i] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if w == j {
                    return false;
                }
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    true
}

/// All valid labelings, in labeling order.
pub fn enumerate_update_digraphs(graph: &Digraph) -> Result<Vec<LabeledDigraph>> {
    let m = graph.arc_count();
    if m > MAX_LABELED_ARCS {
        return Err(Error::Guard {
            what: "update-digraph enumeration",
            actual: m,
            limit: MAX_LABELED_ARCS,
        });
    }
    Ok((0..1u64 << m)
        .into_par_iter()
        .filter_map(|w| {
            let lg = LabeledDigraph::from_word(graph.clone(), w);
            is_update_digraph(&lg).then_some(lg)
        })
        .collect())
}
