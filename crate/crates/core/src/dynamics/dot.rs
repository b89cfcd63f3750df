use std::fmt::Write;

use super::attractor::Attractor;
use super::transition::TransitionGraph;
use crate::network::format_word;

/// Graphviz rendering: one box per configuration labeled by its binary word,
/// fixed points filled gray, limit-cycle members filled black.
pub fn to_dot(name: &str, tg: &TransitionGraph, attractors: &[Attractor]) -> String {
    let n = tg.size();
    let mut style = vec![""; tg.len()];
    for a in attractors {
        let s = if a.is_fixed_point() {
            ", style=filled, fillcolor=gray"
        } else {
            ", style=filled, fillcolor=black, fontcolor=white"
        };
        for &c in &a.configs {
            style[c as usize] = s;
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "\\\""));
    let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
    for x in 0..tg.len() as u32 {
        let _ = writeln!(
            out,
            "  n{x} [label=\"{}\"{}];",
            format_word(x, n),
            style[x as usize]
        );
    }
    for x in 0..tg.len() as u32 {
        let _ = writeln!(out, "  n{x} -> n{};", tg.successor(x));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::find_attractors;

    #[test]
    fn counts_and_styles() {
        let tg = TransitionGraph::from_successors(2, vec![0, 2, 1, 1]).unwrap();
        let dot = to_dot("t", &tg, &find_attractors(&tg));
        assert_eq!(dot.matches(" -> ").count(), 4);
        assert_eq!(dot.matches("[label=").count(), 4);
        assert!(dot.contains("n0 [label=\"00\", style=filled, fillcolor=gray]"));
        assert!(dot.contains("n1 [label=\"01\", style=filled, fillcolor=black, fontcolor=white]"));
        assert!(dot.contains("n3 [label=\"11\"];"));
    }
}
