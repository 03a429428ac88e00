//! Canned example documents, one per input kind and a few classic instances.

pub const BUILDERS: &[(&str, &str)] = &[
    (
        "circle",
        r#"{"kind": "category", "objects": ["A", "B"], "morphisms": [{"label": "f", "source": "A", "target": "B"}, {"label": "g", "source": "A", "target": "B"}]}"#,
    ),
    (
        "z2-one-object",
        r#"{
  "kind": "category",
  "objects": ["x"],
  "morphisms": [{"label": "s", "source": "x", "target": "x"}],
  "identities": {"x": "1"},
  "compose": [["s", "s", "1"]]
}"#,
    ),
    ("sphere-2", r#"{"kind": "sphere", "n": 2}"#),
    (
        "suspended-circle",
        r#"{"kind": "ncat-suspension", "base": {"kind": "category", "objects": ["A", "B"], "morphisms": [{"label": "f", "source": "A", "target": "B"}, {"label": "g", "source": "A", "target": "B"}]}, "times": 1}"#,
    ),
    (
        "two-points",
        r#"{"kind": "metric", "points": ["a", "b"], "d": [[0, 1], [1, 0]]}"#,
    ),
    (
        "directed-triangle",
        r#"{"kind": "digraph", "points": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"], ["c", "a"]]}"#,
    ),
    (
        "half-line",
        r#"{"kind": "metric", "points": ["a", "b", "c"], "d": [[0, "1/2", "3/2"], ["1/2", 0, 1], ["inf", "inf", 0]]}"#,
    ),
    (
        "square",
        r#"{
  "kind": "tensor",
  "left": {"kind": "metric", "points": ["a", "b"], "d": [[0, 1], [1, 0]]},
  "right": {"kind": "metric", "points": ["c", "d"], "d": [[0, 1], [1, 0]]}
}"#,
    ),
    (
        "torus",
        r#"{
  "kind": "product",
  "left": {"kind": "category", "objects": ["A", "B"], "morphisms": [{"label": "f", "source": "A", "target": "B"}, {"label": "g", "source": "A", "target": "B"}]},
  "right": {"kind": "category", "objects": ["C", "D"], "morphisms": [{"label": "h", "source": "C", "target": "D"}, {"label": "k", "source": "C", "target": "D"}]}
}"#,
    ),
    (
        "s3-transpositions",
        r#"{"kind": "normed-group", "group": {"permutations": [[1, 0, 2], [0, 2, 1]]}, "generators": ["(1 2)"]}"#,
    ),
    (
        "z4-explicit-norm",
        r#"{"kind": "normed-group", "group": {"name": "Z4"}, "norm": {"0": 0, "1": 1, "2": 2, "3": 1}}"#,
    ),
    (
        "z2-table",
        r#"{
  "kind": "normed-group",
  "group": {"elements": ["e", "t"], "table": [["e", "t"], ["t", "e"]]},
  "norm": {"e": 0, "t": "1.5"}
}"#,
    ),
    (
        "s3-mod-a3",
        r#"{"kind": "cat-group", "group": {"name": "S3"}, "normal_subgroup": ["e", "(1 2 3)", "(1 3 2)"]}"#,
    ),
    (
        "z4-preorder",
        r#"{"kind": "preordered-group", "group": {"name": "Z4"}, "cone": ["0", "2"]}"#,
    ),
];

pub fn builder(name: &str) -> Option<&'static str> {
    BUILDERS.iter().find(|(n, _)| *n == name).map(|(_, doc)| *doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_input;

    #[test]
    fn every_builder_parses() {
        for (name, doc) in BUILDERS {
            if let Err(e) = parse_input(doc) {
                panic!("{name}: {e}");
            }
        }
    }
}
