use boolnet::dynamics::{
    analyze_mode, dominant_set, is_intersector, robustness_report, sweep_block_sequential,
};
use boolnet::models::{parse_model, render_model};
use boolnet::network::derive_interaction_graph;
use boolnet::schedules::{enumerate_block_sequential, expand_block_parallel, UpdateMode};
use boolnet::update_digraphs::{classify_modes, update_digraph_classes};

const MODEL: &str = "\
# three automata in a negative loop
network loop3 size 3
alias 1 A
1: !x3
2: x1 & !x3
3: x2 | x1
mode bp bp:{(1,2)(3)}
mode seq bs:(3)(1,2)
";

#[test]
fn text_model_through_a_sweep() {
    let doc = parse_model(MODEL).unwrap();
    assert_eq!(parse_model(&render_model(&doc)).unwrap(), doc);

    let summaries = sweep_block_sequential(&doc.network).unwrap();
    let graph = derive_interaction_graph(&doc.network).digraph();
    assert_eq!(
        summaries.len(),
        update_digraph_classes(&graph).unwrap().len()
    );
    for s in &summaries {
        let total: u64 = s.attractors.iter().map(|a| a.basin_size).sum();
        assert_eq!(total, 8);
    }
    let d = dominant_set(&summaries).unwrap();
    assert!(is_intersector(&summaries, &d.dominant_set));
    let report = robustness_report(&doc.network, &summaries, &d);
    let colored =
        report.color_counts.white + report.color_counts.yellow + report.color_counts.green;
    assert_eq!(colored, summaries.len());
}

#[test]
fn block_parallel_matches_its_expansion() {
    let doc = parse_model(MODEL).unwrap();
    let UpdateMode::BlockParallel(bp) = doc.mode("bp").unwrap().clone() else {
        panic!("declared as block-parallel");
    };
    let seq = expand_block_parallel(&bp);
    assert_eq!(seq.period(), 2);
    let as_intricate = UpdateMode::parse("in:(1,3)(2,3)", 3).unwrap();
    let (a, _) = analyze_mode(&doc.network, &UpdateMode::BlockParallel(bp)).unwrap();
    let (b, _) = analyze_mode(&doc.network, &as_intricate).unwrap();
    assert_eq!(a, b);
}

#[test]
fn stream_classes_agree_with_enumerated_labelings() {
    let doc = parse_model(MODEL).unwrap();
    let graph = derive_interaction_graph(&doc.network).digraph();
    let from_modes = classify_modes(&graph, enumerate_block_sequential(3).unwrap()).unwrap();
    let enumerated = update_digraph_classes(&graph).unwrap();
    assert_eq!(from_modes.len(), enumerated.len());
    for (m, e) in from_modes.iter().zip(&enumerated) {
        assert_eq!(m.labeling, e.labeling);
        assert_eq!(m.representative, e.representative);
        assert!(m.members.as_ref().unwrap().contains(&m.representative));
    }
}
