//! Input documents: JSON with a `kind` discriminator, parsed into validated structures.

use std::collections::{BTreeMap, HashMap};

use maghom::enriched::{
    small_groups, sphere_ncat, suspension, two_group_from_normal_subgroup, word_norm_group, CatGroup,
    EnrichedError, FinCategory, FiniteGroup, GenMetricSpace, Morphism, NormedGroup, PreorderedGroup, StrictNCat,
};
use maghom::scalar::{parse_distance, parse_rational, ParseNumberError};
use maghom::{Distance, Rational, RationalMetricSpace, RationalNormedGroup};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("invalid document: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Number(#[from] ParseNumberError),
    #[error(transparent)]
    Validation(#[from] EnrichedError),
    #[error("unknown {what} `{name}`")]
    Unknown { what: &'static str, name: String },
    #[error("{0}")]
    Schema(String),
}

/// A number written as a JSON integer or as a decimal or fraction string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn rational(&self) -> Result<Rational, InputError> {
        Ok(match self {
            Number::Int(n) => Rational::from_integer((*n).into()),
            Number::Text(s) => parse_rational(s)?,
        })
    }

    fn distance(&self) -> Result<Distance<Rational>, InputError> {
        Ok(match self {
            Number::Int(n) => Distance::Finite(Rational::from_integer((*n).into())),
            Number::Text(s) => parse_distance(s)?,
        })
    }

    fn count(&self) -> Result<usize, InputError> {
        match self {
            Number::Int(n) if *n >= 0 => Ok(*n as usize),
            _ => Err(InputError::Schema(format!("expected a nonnegative integer, got {self:?}"))),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub label: String,
    pub source: String,
    pub target: String,
}

/// A group: a named builtin, elements with a multiplication table of labels, or generating
/// permutations of `0..m` (expanded to a table).
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub permutations: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub elements: Option<Vec<String>>,
    #[serde(default)]
    pub table: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Document {
    Category {
        objects: Vec<String>,
        morphisms: Vec<MorphismDoc>,
        /// Identity morphism label per object; omitted objects get a fresh `id_<object>`.
        #[serde(default)]
        identities: BTreeMap<String, String>,
        /// Triples `[g, f, g∘f]` of morphism labels.
        #[serde(default)]
        compose: Vec<[String; 3]>,
    },
    Metric {
        points: Vec<String>,
        d: Vec<Vec<Number>>,
    },
    Digraph {
        points: Vec<String>,
        edges: Vec<[String; 2]>,
    },
    NormedGroup {
        group: GroupDoc,
        #[serde(default)]
        norm: Option<BTreeMap<String, Number>>,
        /// Word norm with respect to the conjugates of these elements and their inverses.
        #[serde(default)]
        generators: Option<Vec<String>>,
    },
    CatGroup {
        group: GroupDoc,
        normal_subgroup: Vec<String>,
    },
    PreorderedGroup {
        group: GroupDoc,
        cone: Vec<String>,
    },
    NcatSuspension {
        /// Points of a discrete set, or a category document.
        base: Box<SuspensionBase>,
        times: Number,
    },
    Sphere {
        n: Number,
    },
    Product {
        left: Box<Document>,
        right: Box<Document>,
    },
    Tensor {
        left: Box<Document>,
        right: Box<Document>,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum SuspensionBase {
    Points(Vec<String>),
    Category(Document),
}

/// A validated input.
#[derive(Clone, Debug)]
pub enum Structure {
    Category(FinCategory),
    Metric(RationalMetricSpace),
    Normed(RationalNormedGroup),
    CatGroup(CatGroup),
    /// A strict n-category; suspensions remember their base and how often it was suspended.
    NCat { x: StrictNCat, suspended: Option<(StrictNCat, usize)> },
    /// A product of categories, kept with its factors for the Künneth check.
    CategoryProduct(FinCategory, FinCategory),
    /// A tensor of metric spaces, kept with its factors.
    MetricTensor(RationalMetricSpace, RationalMetricSpace),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Category(_) => "category",
            Structure::Metric(_) => "metric",
            Structure::Normed(_) => "normed-group",
            Structure::CatGroup(_) => "cat-group",
            Structure::NCat { .. } => "n-category",
            Structure::CategoryProduct(..) => "product",
            Structure::MetricTensor(..) => "tensor",
        }
    }
}

pub fn parse_input(text: &str) -> Result<Structure, InputError> {
    let doc: Document = serde_json::from_str(text)?;
    build(&doc)
}

fn index(labels: &[String], name: &str, what: &'static str) -> Result<usize, InputError> {
    labels.iter().position(|l| l == name).ok_or_else(|| InputError::Unknown { what, name: name.to_string() })
}

fn category(
    objects: &[String],
    morphisms: &[MorphismDoc],
    identities: &BTreeMap<String, String>,
    compose: &[[String; 3]],
) -> Result<FinCategory, InputError> {
    let mut ms: Vec<Morphism> = morphisms
        .iter()
        .map(|m| Ok(Morphism::new(m.label.clone(), index(objects, &m.source, "object")?, index(objects, &m.target, "object")?)))
        .collect::<Result<_, InputError>>()?;
    for o in identities.keys() {
        index(objects, o, "object")?;
    }
    let mut ids = Vec::with_capacity(objects.len());
    for (x, o) in objects.iter().enumerate() {
        let label = identities.get(o).cloned().unwrap_or_else(|| format!("id_{o}"));
        let i = match ms.iter().position(|m| m.label == label) {
            Some(i) => i,
            None => {
                ms.push(Morphism::new(label, x, x));
                ms.len() - 1
            }
        };
        ids.push(i);
    }
    let labels: Vec<String> = ms.iter().map(|m| m.label.clone()).collect();
    let composites: HashMap<(usize, usize), usize> = compose
        .iter()
        .map(|[g, f, h]| Ok(((index(&labels, g, "morphism")?, index(&labels, f, "morphism")?), index(&labels, h, "morphism")?)))
        .collect::<Result<_, InputError>>()?;
    Ok(FinCategory::new(objects.to_vec(), ms, ids, composites)?)
}

/// Builtin groups: the small-group names (`Z4`, `S3`, `D4`, `Q8`, …) and `Zn`, `Sn`, `Dn`.
pub fn named_group(name: &str) -> Result<FiniteGroup, InputError> {
    if let Some((_, g)) = small_groups().into_iter().find(|(n, _)| n == name) {
        return Ok(g);
    }
    let unknown = || InputError::Unknown { what: "group", name: name.to_string() };
    let (head, tail) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
    let n: usize = tail.parse().map_err(|_| unknown())?;
    match (head, n) {
        ("Z", n) if n >= 1 => Ok(FiniteGroup::cyclic(n)),
        ("S", n) if (1..=5).contains(&n) => Ok(FiniteGroup::symmetric(n)),
        ("D", n) if n >= 1 => Ok(FiniteGroup::dihedral(n)),
        _ => Err(unknown()),
    }
}

fn group(doc: &GroupDoc) -> Result<FiniteGroup, InputError> {
    match (&doc.name, &doc.permutations, &doc.elements, &doc.table) {
        (Some(name), None, None, None) => named_group(name),
        (None, Some(perms), None, None) => Ok(FiniteGroup::from_permutations(perms)?),
        (None, None, Some(elements), Some(table)) => {
            let rows = table
                .iter()
                .map(|r| r.iter().map(|x| index(elements, x, "group element")).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(FiniteGroup::from_table(elements.clone(), rows)?)
        }
        _ => Err(InputError::Schema("a group needs exactly one of `name`, `permutations`, or `elements` with `table`".into())),
    }
}

fn elements(g: &FiniteGroup, labels: &[String]) -> Result<Vec<usize>, InputError> {
    labels.iter().map(|l| g.index_of(l).ok_or_else(|| InputError::Unknown { what: "group element", name: l.clone() })).collect()
}

fn metric(doc: &Document) -> Result<RationalMetricSpace, InputError> {
    match build(doc)? {
        Structure::Metric(x) => Ok(x),
        other => Err(InputError::Schema(format!("a tensor factor must be a metric space or digraph, got {}", other.kind()))),
    }
}

fn fin_category(doc: &Document) -> Result<FinCategory, InputError> {
    match build(doc)? {
        Structure::Category(c) => Ok(c),
        Structure::CategoryProduct(a, b) => Ok(a.product(&b)),
        other => Err(InputError::Schema(format!("a product factor must be a category, got {}", other.kind()))),
    }
}

fn build(doc: &Document) -> Result<Structure, InputError> {
    Ok(match doc {
        Document::Category { objects, morphisms, identities, compose } => {
            Structure::Category(category(objects, morphisms, identities, compose)?)
        }
        Document::Metric { points, d } => {
            let d = d.iter().map(|r| r.iter().map(Number::distance).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()?;
            Structure::Metric(GenMetricSpace::new(points.clone(), d)?)
        }
        Document::Digraph { points, edges } => {
            let e = edges
                .iter()
                .map(|[a, b]| Ok((index(points, a, "point")?, index(points, b, "point")?)))
                .collect::<Result<Vec<_>, InputError>>()?;
            Structure::Metric(GenMetricSpace::from_digraph(points.clone(), &e)?)
        }
        Document::NormedGroup { group: gd, norm, generators } => {
            let g = group(gd)?;
            match (norm, generators) {
                (Some(norm), None) => {
                    let mut values = vec![None; g.order()];
                    for (label, v) in norm {
                        values[elements(&g, std::slice::from_ref(label))?[0]] = Some(v.rational()?);
                    }
                    let values = values
                        .into_iter()
                        .enumerate()
                        .map(|(x, v)| v.ok_or_else(|| InputError::Schema(format!("no norm given for {}", g.label(x)))))
                        .collect::<Result<Vec<_>, _>>()?;
                    Structure::Normed(NormedGroup::new(g, values)?)
                }
                (None, Some(gens)) => Structure::Normed(word_norm_group(&g, &elements(&g, gens)?)?),
                _ => return Err(InputError::Schema("a normed group needs exactly one of `norm` and `generators`".into())),
            }
        }
        Document::CatGroup { group: gd, normal_subgroup } => {
            let g = group(gd)?;
            Structure::CatGroup(two_group_from_normal_subgroup(&g, &elements(&g, normal_subgroup)?)?)
        }
        Document::PreorderedGroup { group: gd, cone } => {
            let g = group(gd)?;
            Structure::CatGroup(PreorderedGroup::from_cone(&g, &elements(&g, cone)?)?.cat_group())
        }
        Document::NcatSuspension { base, times } => {
            let base = match base.as_ref() {
                SuspensionBase::Points(points) => StrictNCat::discrete_set(points.clone())?,
                SuspensionBase::Category(doc) => StrictNCat::from_category(&fin_category(doc)?),
            };
            let times = times.count()?;
            let x = (0..times).fold(base.clone(), |x, _| suspension(&x));
            x.validate()?;
            Structure::NCat { x, suspended: Some((base, times)) }
        }
        Document::Sphere { n } => {
            let n = n.count()?;
            let base = StrictNCat::discrete_set(vec!["N".into(), "S".into()])?;
            Structure::NCat { x: sphere_ncat(n), suspended: Some((base, n)) }
        }
        Document::Product { left, right } => Structure::CategoryProduct(fin_category(left)?, fin_category(right)?),
        Document::Tensor { left, right } => Structure::MetricTensor(metric(left)?, metric(right)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let x = parse_input(r#"{"kind":"metric","points":["a","b"],"d":[[0,1],[1,0]]}"#).unwrap();
        assert!(matches!(x, Structure::Metric(ref m) if m.len() == 2));
        let s = parse_input(r#"{"kind":"sphere","n":2}"#).unwrap();
        assert!(matches!(s, Structure::NCat { ref x, .. } if x.level() == 2));
        let q = parse_input(r#"{"kind":"metric","points":["a","b"],"d":[[0,"0.5"],["inf",0]]}"#).unwrap();
        let Structure::Metric(q) = q else { panic!() };
        assert_eq!(q.d(1, 0), &Distance::Infinite);
        assert_eq!(q.d(0, 1), &Distance::Finite(Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn rejects_unknown_fields_and_bad_laws() {
        assert!(matches!(parse_input(r#"{"kind":"sphere","n":2,"m":1}"#), Err(InputError::Syntax(_))));
        let broken = r#"{"kind":"normed-group","group":{"name":"Z2"},"norm":{"0":0,"1":0}}"#;
        assert!(matches!(parse_input(broken), Err(InputError::Validation(_))));
        let e = parse_input("{\n  \"kind\": \"metric\",\n  \"points\": [\"a\"]\n  \"d\": []\n}").unwrap_err();
        assert!(e.to_string().contains("line 4"), "{e}");
    }

    #[test]
    fn named_groups() {
        assert_eq!(named_group("S3").unwrap().order(), 6);
        assert_eq!(named_group("Z12").unwrap().order(), 12);
        assert_eq!(named_group("D5").unwrap().order(), 10);
        assert!(named_group("X3").is_err());
        let s3 = parse_input(r#"{"kind":"normed-group","group":{"permutations":[[1,0,2],[1,2,0]]},"generators":["(1 2)"]}"#);
        assert!(matches!(s3, Ok(Structure::Normed(ref g)) if g.group().order() == 6), "{s3:?}");
    }
}
