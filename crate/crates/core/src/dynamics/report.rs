use std::collections::BTreeMap;

use serde::Serialize;

use super::attractor::Signature;
use super::dominance::DominanceAnalysis;
use super::summary::DynamicsSummary;
use crate::network::BooleanNetwork;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Green,
    Yellow,
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Color::White => "white",
            Color::Green => "green",
            Color::Yellow => "yellow",
        })
    }
}

/// Green: at least two attractors, all basins equal. Otherwise white when a
/// dominant attractor reaches the largest basin, yellow when none does.
pub fn classify_color(summary: &DynamicsSummary, dominance: &DominanceAnalysis) -> Color {
    let attractors = &summary.attractors;
    let largest = attractors.iter().map(|a| a.basin_size).max().unwrap_or(0);
    if attractors.len() >= 2 && attractors.iter().all(|a| a.basin_size == largest) {
        return Color::Green;
    }
    let dominant_at_max = attractors
        .iter()
        .filter(|a| a.basin_size == largest)
        .any(|a| a.configs.iter().all(|&c| dominance.contains(c)));
    if dominant_at_max {
        Color::White
    } else {
        Color::Yellow
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignatureCount {
    pub signature: Signature,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ColorCounts {
    pub white: usize,
    pub green: usize,
    pub yellow: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassColor {
    pub class_id: usize,
    pub signature: Signature,
    pub color: Color,
}

/// In how many dynamics a dominant configuration lies on an attractor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Appearance {
    pub config: u32,
    pub total: usize,
    /// Same order as the report histogram.
    pub by_signature: Vec<SignatureCount>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RobustnessReport {
    pub network: String,
    pub n: usize,
    pub class_count: usize,
    /// By decreasing count, then signature.
    pub histogram: Vec<SignatureCount>,
    pub colors: Vec<ClassColor>,
    pub color_counts: ColorCounts,
    pub dominance: DominanceAnalysis,
    pub appearances: Vec<Appearance>,
}

impl RobustnessReport {
    pub fn count_of(&self, signature: &[usize]) -> usize {
        self.histogram
            .iter()
            .find(|h| h.signature.0 == signature)
            .map_or(0, |h| h.count)
    }
}

pub fn robustness_report(
    net: &BooleanNetwork,
    summaries: &[DynamicsSummary],
    dominance: &DominanceAnalysis,
) -> RobustnessReport {
    let mut by_sig: BTreeMap<&Signature, usize> = BTreeMap::new();
    for s in summaries {
        *by_sig.entry(&s.signature).or_default() += 1;
    }
    let mut histogram: Vec<SignatureCount> = by_sig
        .into_iter()
        .map(|(signature, count)| SignatureCount {
            signature: signature.clone(),
            count,
        })
        .collect();
    histogram.sort_by(|a, b| {
        b.count
            .cmp(&a.count)
            .then_with(|| a.signature.cmp(&b.signature))
    });

    let colors: Vec<ClassColor> = summaries
        .iter()
        .enumerate()
        .map(|(class_id, s)| ClassColor {
            class_id,
            signature: s.signature.clone(),
            color: classify_color(s, dominance),
        })
        .collect();
    let mut color_counts = ColorCounts::default();
    for c in &colors {
        match c.color {
            Color::White => color_counts.white += 1,
            Color::Green => color_counts.green += 1,
            Color::Yellow => color_counts.yellow += 1,
        }
    }

    let appearances = dominance
        .dominant_set
        .iter()
        .map(|&config| {
            let hit: Vec<&DynamicsSummary> = summaries
                .iter()
                .filter(|s| s.attractors.iter().any(|a| a.contains(config)))
                .collect();
            let by_signature = histogram
                .iter()
                .map(|h| SignatureCount {
                    signature: h.signature.clone(),
                    count: hit.iter().filter(|s| s.signature == h.signature).count(),
                })
                .collect();
            Appearance {
                config,
                total: hit.len(),
                by_signature,
            }
        })
        .collect();

    RobustnessReport {
        network: net.name().to_string(),
        n: net.size(),
        class_count: summaries.len(),
        histogram,
        colors,
        color_counts,
        dominance: dominance.clone(),
        appearances,
    }
}
