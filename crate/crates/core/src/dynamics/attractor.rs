use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::transition::TransitionGraph;

/// A cycle of the transition graph in temporal order, rotated so the
/// smallest configuration comes first. The basin counts the cycle itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Attractor {
    pub configs: Vec<u32>,
    pub basin_size: u64,
}

impl Attractor {
    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    pub fn is_fixed_point(&self) -> bool {
        self.configs.len() == 1
    }

    pub fn contains(&self, x: u32) -> bool {
        self.configs.contains(&x)
    }

    /// Configurations as a sorted set.
    pub fn config_set(&self) -> Vec<u32> {
        let mut s = self.configs.clone();
        s.sort_unstable();
        s
    }
}

impl Serialize for Attractor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Attractor", 3)?;
        st.serialize_field("basin_size", &self.basin_size)?;
        st.serialize_field("configs", &self.configs)?;
        st.serialize_field("length", &self.configs.len())?;
        st.end()
    }
}

/// Every cycle exactly once, ordered by smallest configuration, with basin sizes.
pub fn find_attractors(tg: &TransitionGraph) -> Vec<Attractor> {
    const FRESH: u32 = u32::MAX;
    const ON_PATH: u32 = u32::MAX - 1;
    let len = tg.len();
    // FRESH, ON_PATH, or the index of the attractor the trajectory reaches
    let mut mark = vec![FRESH; len];
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut path = Vec::new();

    for start in 0..len as u32 {
        if mark[start as usize] != FRESH {
            continue;
        }
        path.clear();
        let mut x = start;
        while mark[x as usize] == FRESH {
            mark[x as usize] = ON_PATH;
            path.push(x);
            x = tg.successor(x);
        }
        let id = if mark[x as usize] == ON_PATH {
            let at = path
                .iter()
                .position(|&p| p == x)
                .expect("cycle entry on path");
            let mut cycle = path[at..].to_vec();
            let min_at = cycle
                .iter()
                .enumerate()
                .min_by_key(|&(_, &c)| c)
                .map(|(k, _)| k)
                .unwrap_or(0);
            cycle.rotate_left(min_at);
            cycles.push(cycle);
            (cycles.len() - 1) as u32
        } else {
            mark[x as usize]
        };
        for &p in &path {
            mark[p as usize] = id;
        }
    }

    let basins = basin_sizes(tg, &cycles);
    let mut out: Vec<Attractor> = cycles
        .into_iter()
        .zip(basins)
        .map(|(configs, basin_size)| Attractor {
            configs,
            basin_size,
        })
        .collect();
    out.sort_unstable_by_key(|a| a.configs[0]);
    out
}

/// Reverse breadth-first search from each cycle over a CSR predecessor index.
fn basin_sizes(tg: &TransitionGraph, cycles: &[Vec<u32>]) -> Vec<u64> {
    let len = tg.len();
    let mut start = vec![0u32; len + 1];
    for &s in tg.successors() {
        start[s as usize + 1] += 1;
    }
    for k in 0..len {
        start[k + 1] += start[k];
    }
    let mut fill = start.clone();
    let mut pred = vec![0u32; len];
    for (x, &s) in tg.successors().iter().enumerate() {
        pred[fill[s as usize] as usize] = x as u32;
        fill[s as usize] += 1;
    }

    let mut seen = vec![false; len];
    let mut queue = VecDeque::new();
    cycles
        .iter()
        .map(|cycle| {
            queue.clear();
            for &c in cycle {
                seen[c as usize] = true;
                queue.push_back(c);
            }
            let mut count = 0u64;
            while let Some(x) = queue.pop_front() {
                count += 1;
                let range = start[x as usize] as usize..start[x as usize + 1] as usize;
                for &p in &pred[range] {
                    if !seen[p as usize] {
                        seen[p as usize] = true;
                        queue.push_back(p);
                    }
                }
            }
            count
        })
        .collect()
}

/// Sorted multiset of attractor lengths, printed `LC-(2,6)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(pub Vec<usize>);

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "LC-({})", parts.join(","))
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn lc_signature(attractors: &[Attractor]) -> Signature {
    let mut lengths: Vec<usize> = attractors.iter().map(Attractor::len).collect();
    lengths.sort_unstable();
    Signature(lengths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn graph(n: usize, succ: Vec<u32>) -> TransitionGraph {
        TransitionGraph::from_successors(n, succ).unwrap()
    }

    #[test]
    fn rotation_of_three_cells() {
        let tg = graph(3, vec![0, 4, 1, 5, 2, 6, 3, 7]);
        let a = find_attractors(&tg);
        let cycles: Vec<&[u32]> = a.iter().map(|a| a.configs.as_slice()).collect();
        // 001 → 100 → 010 → 001
        assert_eq!(cycles, vec![&[0][..], &[1, 4, 2], &[3, 5, 6], &[7]]);
        assert_eq!(
            a.iter().map(|a| a.basin_size).collect::<Vec<_>>(),
            vec![1, 3, 3, 1]
        );
        assert_eq!(lc_signature(&a).to_string(), "LC-(1,1,3,3)");
    }

    #[test]
    fn constant_map() {
        let tg = graph(4, vec![0; 16]);
        let a = find_attractors(&tg);
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].configs, vec![0]);
        assert_eq!(a[0].basin_size, 16);
        assert_eq!(lc_signature(&[]).to_string(), "LC-()");
    }

    fn oracle_cycles(succ: &[u32]) -> Vec<Vec<u32>> {
        // x is cyclic iff it returns to itself within 2^n steps
        let mut out = Vec::new();
        for x in 0..succ.len() as u32 {
            let mut y = succ[x as usize];
            let mut cyc = vec![x];
            while y != x && cyc.len() <= succ.len() {
                cyc.push(y);
                y = succ[y as usize];
            }
            if y == x && cyc.iter().all(|&c| c >= x) {
                out.push(cyc);
            }
        }
        out
    }

    proptest! {
        #[test]
        fn matches_oracle(n in 1usize..=6, seed in any::<u64>()) {
            let len = 1u32 << n;
            let mut state = seed | 1;
            let succ: Vec<u32> = (0..len)
                .map(|_| {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    (state % len as u64) as u32
                })
                .collect();
            let tg = graph(n, succ.clone());
            let found = find_attractors(&tg);
            let cycles: Vec<Vec<u32>> = found.iter().map(|a| a.configs.clone()).collect();
            prop_assert_eq!(cycles, oracle_cycles(&succ));
            prop_assert_eq!(found.iter().map(|a| a.basin_size).sum::<u64>(), len as u64);
            // every trajectory ends in the attractor whose basin it is counted in
            for x in 0..len {
                let mut y = x;
                for _ in 0..len {
                    y = succ[y as usize];
                }
                prop_assert!(found.iter().any(|a| a.contains(y)));
            }
        }
    }
}
