use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use super::summary::DynamicsSummary;
use crate::error::{Error, Result};

/// Minimum-cardinality intersector of the attractors of a family of dynamics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominanceAnalysis {
    /// Sorted configurations.
    pub dominant_set: Vec<u32>,
    /// Distinct attractors (sorted configuration sets) lying inside the set.
    pub selected: Vec<Vec<u32>>,
    /// For each dynamics, the indices of its attractors lying inside the set.
    pub per_dynamics_hits: Vec<Vec<usize>>,
    /// No other intersector has the same cardinality.
    pub unique: bool,
    /// No single configuration can be dropped.
    pub inclusion_minimal: bool,
}

impl DominanceAnalysis {
    pub fn contains(&self, x: u32) -> bool {
        self.dominant_set.binary_search(&x).is_ok()
    }
}

type Bits = Vec<u64>;

fn added(a: &Bits, b: &Bits) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & !y).count_ones() as usize)
        .sum()
}

struct Search {
    attrs: Vec<Bits>,
    /// Distinct option lists, one per group of dynamics.
    groups: Vec<Vec<usize>>,
    best: usize,
    optima: BTreeSet<Bits>,
    visited: HashSet<Bits>,
}

impl Search {
    fn run(&mut self, union: Bits, size: usize) {
        if !self.visited.insert(union.clone()) {
            return;
        }
        // most constrained unsatisfied group decides the bound and the branching
        let mut pick: Option<(usize, usize)> = None;
        for (g, opts) in self.groups.iter().enumerate() {
            let cost = opts
                .iter()
                .map(|&a| added(&self.attrs[a], &union))
                .min()
                .unwrap_or(0);
            if cost > 0 && pick.is_none_or(|(_, c)| cost > c) {
                pick = Some((g, cost));
            }
        }
        let Some((g, cost)) = pick else {
            if size < self.best {
                self.best = size;
                self.optima.clear();
            }
            if size == self.best {
                self.optima.insert(union);
            }
            return;
        };
        if size + cost > self.best {
            return;
        }
        let mut opts: Vec<(usize, usize)> = self.groups[g]
            .iter()
            .map(|&a| (added(&self.attrs[a], &union), a))
            .collect();
        opts.sort_unstable();
        for (extra, a) in opts {
            if size + extra > self.best {
                break;
            }
            let next: Bits = union
                .iter()
                .zip(&self.attrs[a])
                .map(|(x, y)| x | y)
                .collect();
            self.run(next, size + extra);
        }
    }
}

/// Exact branch and bound over the distinct attractors of `summaries`,
/// memoized on the partial union. Among optimal sets the lexicographically
/// smallest sorted configuration list is returned.
pub fn dominant_set(summaries: &[DynamicsSummary]) -> Result<DominanceAnalysis> {
    if summaries.is_empty() {
        return Err(Error::InvalidArgument("no dynamics to dominate".into()));
    }

    let universe: Vec<u32> = summaries
        .iter()
        .flat_map(|s| s.attractors.iter().flat_map(|a| a.configs.iter().copied()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let words = universe.len().div_ceil(64).max(1);
    let bits_of = |configs: &[u32]| -> Bits {
        let mut b = vec![0u64; words];
        for c in configs {
            let k = universe.binary_search(c).expect("config in universe");
            b[k / 64] |= 1 << (k % 64);
        }
        b
    };

    let mut attr_ids: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut attrs: Vec<Bits> = Vec::new();
    let mut groups: BTreeSet<Vec<usize>> = BTreeSet::new();
    for s in summaries {
        let mut opts: Vec<usize> = s
            .attractors
            .iter()
            .map(|a| {
                let set = a.config_set();
                *attr_ids.entry(set.clone()).or_insert_with(|| {
                    attrs.push(bits_of(&set));
                    attrs.len() - 1
                })
            })
            .collect();
        opts.sort_unstable();
        opts.dedup();
        groups.insert(opts);
    }

    let mut search = Search {
        attrs,
        groups: groups.into_iter().collect(),
        best: usize::MAX,
        optima: BTreeSet::new(),
        visited: HashSet::new(),
    };
    search.run(vec![0; words], 0);

    let decode = |b: &Bits| -> Vec<u32> {
        universe
            .iter()
            .enumerate()
            .filter(|&(k, _)| b[k / 64] >> (k % 64) & 1 == 1)
            .map(|(_, &c)| c)
            .collect()
    };
    let unique = search.optima.len() == 1;
    let dominant_set = search
        .optima
        .iter()
        .map(decode)
        .min()
        .expect("an intersector always exists");
    Ok(analysis_for(summaries, dominant_set, unique))
}

fn analysis_for(
    summaries: &[DynamicsSummary],
    dominant_set: Vec<u32>,
    unique: bool,
) -> DominanceAnalysis {
    let inside = |set: &[u32], a: &[u32]| a.iter().all(|c| set.binary_search(c).is_ok());
    let per_dynamics_hits: Vec<Vec<usize>> = summaries
        .iter()
        .map(|s| {
            s.attractors
                .iter()
                .enumerate()
                .filter(|(_, a)| inside(&dominant_set, &a.configs))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let selected: Vec<Vec<u32>> = summaries
        .iter()
        .zip(&per_dynamics_hits)
        .flat_map(|(s, hits)| hits.iter().map(|&k| s.attractors[k].config_set()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let inclusion_minimal = dominant_set.iter().all(|&drop| {
        let reduced: Vec<u32> = dominant_set
            .iter()
            .copied()
            .filter(|&c| c != drop)
            .collect();
        !is_intersector(summaries, &reduced)
    });
    DominanceAnalysis {
        dominant_set,
        selected,
        per_dynamics_hits,
        unique,
        inclusion_minimal,
    }
}

/// Every dynamics has an attractor entirely inside `set` (sorted).
pub fn is_intersector(summaries: &[DynamicsSummary], set: &[u32]) -> bool {
    let mut probe: Vec<u32> = set.to_vec();
    probe.sort_unstable();
    summaries.iter().all(|s| {
        s.attractors
            .iter()
            .any(|a| a.configs.iter().all(|c| probe.binary_search(c).is_ok()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{lc_signature, Attractor};
    use crate::schedules::{BlockSequentialMode, UpdateMode};

    fn dynamics(cycles: &[&[u32]]) -> DynamicsSummary {
        let attractors: Vec<Attractor> = cycles
            .iter()
            .map(|c| Attractor {
                configs: c.to_vec(),
                basin_size: 1,
            })
            .collect();
        DynamicsSummary {
            mode: UpdateMode::from(BlockSequentialMode::parallel(1).unwrap()),
            labeling: None,
            signature: lc_signature(&attractors),
            attractors,
        }
    }

    /// Smallest intersector by trying every subset of the attractor universe.
    fn brute_force(summaries: &[DynamicsSummary]) -> (usize, Vec<Vec<u32>>) {
        let universe: Vec<u32> = summaries
            .iter()
            .flat_map(|s| s.attractors.iter().flat_map(|a| a.configs.clone()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut best = usize::MAX;
        let mut sets = Vec::new();
        for mask in 0u32..1 << universe.len() {
            let set: Vec<u32> = (0..universe.len())
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| universe[k])
                .collect();
            if !is_intersector(summaries, &set) {
                continue;
            }
            if set.len() < best {
                best = set.len();
                sets.clear();
            }
            if set.len() == best {
                sets.push(set);
            }
        }
        (best, sets)
    }

    #[test]
    fn forced_fixed_point() {
        let d = dominant_set(&[dynamics(&[&[5]])]).unwrap();
        assert_eq!(d.dominant_set, vec![5]);
        assert!(d.unique && d.inclusion_minimal);
        assert_eq!(d.per_dynamics_hits, vec![vec![0]]);
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(dominant_set(&[]).is_err());
    }

    #[test]
    fn shared_attractor_beats_small_ones() {
        let s = [
            dynamics(&[&[1], &[2, 3]]),
            dynamics(&[&[4], &[2, 3]]),
            dynamics(&[&[5], &[2, 3]]),
        ];
        let d = dominant_set(&s).unwrap();
        assert_eq!(d.dominant_set, vec![2, 3]);
        assert_eq!(d.selected, vec![vec![2, 3]]);
    }

    #[test]
    fn ties_break_lexicographically() {
        let s = [dynamics(&[&[0], &[7]]), dynamics(&[&[7], &[0], &[3]])];
        let d = dominant_set(&s).unwrap();
        assert_eq!(d.dominant_set, vec![0]);
        assert!(!d.unique);
    }

    #[test]
    fn agrees_with_subset_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let count = rng.gen_range(1..=5);
            let s: Vec<DynamicsSummary> = (0..count)
                .map(|_| {
                    let mut pool: Vec<u32> = (0..12).collect();
                    let k = rng.gen_range(1..=3);
                    let cycles: Vec<Vec<u32>> = (0..k)
                        .map(|_| {
                            let len = rng.gen_range(1..=3).min(pool.len());
                            (0..len)
                                .map(|_| pool.swap_remove(rng.gen_range(0..pool.len())))
                                .collect()
                        })
                        .filter(|c: &Vec<u32>| !c.is_empty())
                        .collect();
                    let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
                    dynamics(&refs)
                })
                .collect();
            let d = dominant_set(&s).unwrap();
            let (best, sets) = brute_force(&s);
            assert_eq!(d.dominant_set.len(), best);
            assert_eq!(d.dominant_set, sets.iter().min().unwrap().clone());
            assert_eq!(d.unique, sets.len() == 1);
            assert!(is_intersector(&s, &d.dominant_set));
            assert!(d.inclusion_minimal);
        }
    }
}
