use num_bigint::BigUint;

use super::digraph::strongly_connected_components;
use super::label::{is_update_digraph, Label, LabeledDigraph};
use crate::error::{Error, Result};
use crate::schedules::BlockSequentialMode;

/// Most compact block-sequential mode producing `lg`.
///
/// Vertices joined by a `>=`-only strongly connected component are merged,
/// `<` arcs are reversed, and blocks are peeled off front to back: each round
/// takes the targets `T` of the last `<` arc on every path carrying the most
/// `<` arcs, plus everything still reachable from `T`.
pub fn compact_representative(lg: &LabeledDigraph) -> Result<BlockSequentialMode> {
    if !is_update_digraph(lg) {
        return Err(Error::NotUpdateDigraph);
    }
    let n = lg.graph().size();

    let mut ge_adj = vec![Vec::new(); n];
    for (i, j, l) in lg.labeled_arcs() {
        if l == Label::Ge {
            ge_adj[i].push(j);
        }
    }
    let comp = strongly_connected_components(&ge_adj);
    let k = comp.iter().max().map_or(0, |c| c + 1);
    let mut members = vec![Vec::new(); k];
    for (v, &c) in comp.iter().enumerate() {
        members[c].push(v);
    }

    // G' over components: (target, is_lt)
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); k];
    for (i, j, l) in lg.labeled_arcs() {
        let (a, b) = (comp[i], comp[j]);
        match l {
            Label::Ge if a != b => adj[a].push((b, false)),
            Label::Ge => {}
            Label::Lt => adj[b].push((a, true)),
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }

    let mut alive = vec![true; k];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    loop {
        let order = topological_order(&adj, &alive);
        // g[v]: most `<` arcs on a path ending at v
        let mut g = vec![0usize; k];
        for &v in &order {
            for &(w, lt) in &adj[v] {
                if alive[w] {
                    g[w] = g[w].max(g[v] + lt as usize);
                }
            }
        }
        let best = order.iter().map(|&v| g[v]).max().unwrap_or(0);
        if best == 0 {
            break;
        }
        let mut chosen = vec![false; k];
        let mut stack = Vec::new();
        for &u in &order {
            if g[u] + 1 != best {
                continue;
            }
            for &(t, lt) in &adj[u] {
                if lt && alive[t] && g[t] == best && !chosen[t] {
                    chosen[t] = true;
                    stack.push(t);
                }
            }
        }
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if alive[w] && !chosen[w] {
                    chosen[w] = true;
                    stack.push(w);
                }
            }
        }
        let mut block = Vec::new();
        for c in 0..k {
            if chosen[c] {
                alive[c] = false;
                block.extend_from_slice(&members[c]);
            }
        }
        blocks.push(block);
    }
    let rest: Vec<usize> = (0..k)
        .filter(|&c| alive[c])
        .flat_map(|c| members[c].iter().copied())
        .collect();
    if !rest.is_empty() {
        blocks.push(rest);
    }
    BlockSequentialMode::new(blocks, n)
}

/// Kahn's algorithm over the alive vertices. `adj` is acyclic on valid inputs.
fn topological_order(adj: &[Vec<(usize, bool)>], alive: &[bool]) -> Vec<usize> {
    let k = adj.len();
    let mut indeg = vec![0usize; k];
    for v in (0..k).filter(|&v| alive[v]) {
        for &(w, _) in &adj[v] {
            if alive[w] {
                indeg[w] += 1;
            }
        }
    }
    let mut queue: Vec<usize> = (0..k).filter(|&v| alive[v] && indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(k);
    while let Some(v) = queue.pop() {
        order.push(v);
        for &(w, _) in &adj[v] {
            if alive[w] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
    }
    debug_assert_eq!(order.len(), alive.iter().filter(|&&a| a).count());
    order
}

/// Update digraphs of a chain of cycles of lengths `p_i`: `Π (2^p_i − 1)`.
pub fn count_chain_of_cycles(cycle_lengths: &[usize]) -> Result<BigUint> {
    let one = BigUint::from(1u32);
    let mut total = one.clone();
    for &p in cycle_lengths {
        if p < 2 {
            return Err(Error::InvalidArgument(format!(
                "cycle length {p} is below 2"
            )));
        }
        total *= (&one << p) - &one;
    }
    Ok(total)
}
