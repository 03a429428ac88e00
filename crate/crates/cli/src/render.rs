//! Text and JSON renderings of homology results. JSON objects use sorted keys, so output is
//! byte-identical across runs.

use std::fmt::Write as _;

use maghom::complex::HomologyTable;
use maghom::linalg::FgAbelianGroup;
use serde_json::{json, Value};

use crate::compute::Homology;

fn group_json(g: &FgAbelianGroup) -> Value {
    let torsion: Vec<Value> = g
        .torsion()
        .iter()
        .map(|d| {
            let s = d.to_string();
            s.parse::<u64>().map_or(Value::String(s), Value::from)
        })
        .collect();
    json!({ "rank": g.free_rank(), "torsion": torsion })
}

fn table_json(t: &HomologyTable) -> Value {
    Value::Array(
        t.groups()
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let mut v = group_json(g);
                v["degree"] = k.into();
                v
            })
            .collect(),
    )
}

pub fn json(kind: &str, max_degree: usize, h: &Homology) -> String {
    let mut out = json!({ "kind": kind, "max_degree": max_degree });
    match h {
        Homology::Ungraded(t) => out["homology"] = table_json(t),
        Homology::Graded(ts) => {
            out["gradings"] = ts
                .iter()
                .map(|(l, t)| json!({ "grading": l.to_string(), "homology": table_json(t) }))
                .collect::<Vec<_>>()
                .into()
        }
    }
    serde_json::to_string_pretty(&out).expect("JSON values always serialize") + "\n"
}

fn table_text(out: &mut String, t: &HomologyTable, indent: &str) {
    for (k, g) in t.groups().iter().enumerate() {
        writeln!(out, "{indent}MH_{k} = {g}").expect("writing to a String");
    }
}

pub fn text(kind: &str, max_degree: usize, h: &Homology) -> String {
    let mut out = format!("{kind}, degrees 0..={max_degree}\n");
    match h {
        Homology::Ungraded(t) => table_text(&mut out, t, ""),
        Homology::Graded(ts) if ts.is_empty() => out.push_str("no gradings\n"),
        Homology::Graded(ts) => {
            for (l, t) in ts {
                writeln!(out, "ℓ = {l}").expect("writing to a String");
                table_text(&mut out, t, "  ");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use maghom::Int;

    #[test]
    fn torsion_rendering() {
        let g = FgAbelianGroup::new(2, vec![Int::from(2), Int::from(6)]).unwrap();
        assert_eq!(g.to_string(), "Z^2 ⊕ Z/2 ⊕ Z/6");
        assert_eq!(group_json(&g), json!({"rank": 2, "torsion": [2, 6]}));
        let h = Homology::Ungraded(HomologyTable::new(vec![FgAbelianGroup::free(1), FgAbelianGroup::zero()]));
        assert_eq!(text("category", 1, &h), "category, degrees 0..=1\nMH_0 = Z\nMH_1 = 0\n");
        assert!(json("category", 1, &h).contains("\"degree\": 1"));
    }
}
