use crate::error::{Error, Result};
use crate::network::ThresholdNetwork;

use super::format::{parse_model, ModelDocument};

const CYCLE3: &str = "\
network cycle3 size 3
1: x3
2: x1
3: x2
mode parallel bs:(1,2,3)
mode sequential bs:(1,2)(3)
mode block_parallel bp:{(1)(3,2)}
mode intricate in:(2,3)(1,3)(1,2)
";

const UD3: &str = "\
network ud3 size 3
1: !x2
2: x1
3: x2
";

const HAE6_ALIASES: &str = "\
alias 1 Histone
alias 2 EGFR
alias 3 SP1
alias 4 F12
alias 5 KLKB1
alias 6 KNG
";

const HAE6_RULES: &str = "\
1: x3
2: !x1
3: x2 | x4
4: !x3 & x6
5: x4
6: x5
mode parallel bs:(1,2,3,4,5,6)
mode intricate in:(1,2,3,4)(3,4,5,6)
";

/// Sign variants of hae6.
const VARIANTS: [(&str, [&str; 6]); 6] = [
    ("alpha", ["x3", "x1", "x2 | x4", "!x3 & x6", "x4", "x5"]),
    ("beta", ["x3", "!x1", "x2 | x4", "!x3 & x6", "x4", "!x5"]),
    ("gamma", ["x3", "!x1", "x2 | !x4", "x3 & x6", "x4", "x5"]),
    ("delta", ["x3", "x1", "x2 | !x4", "x3 & x6", "x4", "x5"]),
    ("zeta", ["x3", "!x1", "x2 | !x4", "x3 & x6", "x4", "!x5"]),
    ("eta", ["x3", "!x1", "x2 | x4", "x3 & x6", "x4", "x5"]),
];

pub const BUILTIN_NAMES: [&str; 10] = [
    "cycle3",
    "ud3",
    "hae6",
    "alpha",
    "beta",
    "gamma",
    "delta",
    "zeta",
    "eta",
    "hae6_tban",
];

/// Weights `w[i][j]` of automaton `j` on automaton `i` for the threshold form of hae6.
pub fn hae6_weights() -> Vec<Vec<f64>> {
    vec![
        vec![0., 0., 1., 0., 0., 0.],
        vec![-1., 0., 0., 0., 0., 0.],
        vec![0., 1., 0., 1., 0., 0.],
        vec![0., 0., -1., 0., 0., 1.],
        vec![0., 0., 0., 1., 0., 0.],
        vec![0., 0., 0., 0., 1., 0.],
    ]
}

/// Thresholds of the threshold form, with `θ_4 = −ε` taken as `−0.5`.
pub fn hae6_thresholds() -> Vec<f64> {
    vec![0., 0., 0., -0.5, 0., 0.]
}

pub fn builtin_model(name: &str) -> Result<ModelDocument> {
    let text = match name {
        "cycle3" => CYCLE3.to_string(),
        "ud3" => UD3.to_string(),
        "hae6" => format!("network hae6 size 6\n{HAE6_ALIASES}{HAE6_RULES}"),
        "hae6_tban" => {
            let t = ThresholdNetwork::new("hae6_tban", hae6_weights(), hae6_thresholds())?;
            let mut doc = ModelDocument::new(t.to_boolean()?);
            doc.aliases =
                parse_model(&format!("network a size 6\n{HAE6_ALIASES}{HAE6_RULES}"))?.aliases;
            return Ok(doc);
        }
        _ => {
            let Some((_, rules)) = VARIANTS.iter().find(|(v, _)| *v == name) else {
                return Err(Error::UnknownModel {
                    name: name.to_string(),
                    available: BUILTIN_NAMES.join(", "),
                });
            };
            let mut text = format!("network {name} size 6\n");
            for (i, r) in rules.iter().enumerate() {
                text.push_str(&format!("{}: {r}\n", i + 1));
            }
            text.push_str("mode parallel bs:(1,2,3,4,5,6)\n");
            text
        }
    };
    parse_model(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::render_model;
    use crate::network::{derive_interaction_graph, Expr, Sign, SignedEdge};

    #[test]
    fn all_builtins_load_and_round_trip() {
        for name in BUILTIN_NAMES {
            let doc = builtin_model(name).unwrap();
            assert_eq!(doc.name(), name);
            let text = render_model(&doc);
            assert_eq!(parse_model(&text).unwrap(), doc, "{name}");
        }
    }

    #[test]
    fn unknown_name_lists_choices() {
        let e = builtin_model("psi").unwrap_err();
        assert!(e.to_string().contains("hae6_tban"), "{e}");
    }

    #[test]
    fn builtin_definitions() {
        let x = Expr::var;
        let hae6 = builtin_model("hae6").unwrap();
        assert_eq!(hae6.network.local(3).expr(), &(!x(2) & x(5)));
        assert_eq!(hae6.display_name(3), "F12");
        let cycle3 = builtin_model("cycle3").unwrap();
        let exprs: Vec<&Expr> = cycle3.network.locals().iter().map(|f| f.expr()).collect();
        assert_eq!(exprs, vec![&x(2), &x(0), &x(1)]);
        let beta = builtin_model("beta").unwrap();
        assert_eq!(beta.network.local(5).expr(), &!x(4));
    }

    #[test]
    fn hae6_signed_edges() {
        let g = derive_interaction_graph(&builtin_model("hae6").unwrap().network);
        let expected: Vec<SignedEdge> = [
            (3, Sign::Positive, 1),
            (1, Sign::Negative, 2),
            (2, Sign::Positive, 3),
            (4, Sign::Positive, 3),
            (3, Sign::Negative, 4),
            (6, Sign::Positive, 4),
            (4, Sign::Positive, 5),
            (5, Sign::Positive, 6),
        ]
        .into_iter()
        .map(|(s, sign, t)| SignedEdge::one_based(s, sign, t))
        .collect();
        assert_eq!(g.edges.len(), 8);
        assert!(expected.iter().all(|e| g.edges.contains(e)));
    }

    #[test]
    fn hae6_golden_rendering() {
        let expected = "\
network hae6 size 6
alias 1 Histone
alias 2 EGFR
alias 3 SP1
alias 4 F12
alias 5 KLKB1
alias 6 KNG
1: x3
2: !x1
3: x2 | x4
4: !x3 & x6
5: x4
6: x5
mode parallel bs:(1,2,3,4,5,6)
mode intricate in:(1,2,3,4)(3,4,5,6)
";
        assert_eq!(render_model(&builtin_model("hae6").unwrap()), expected);
    }
}
