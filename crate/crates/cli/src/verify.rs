//! Oracle suites per input kind. Each check computes the pipeline answer and compares it with an
//! independent prediction.

use std::collections::BTreeMap;

use maghom::complex::HomologyTable;
use maghom::enriched::{FinCategory, GenMetricSpace, StrictNCat};
use maghom::iterated::{
    kunneth_check_category, kunneth_check_metric, ncat_homology, normed_group_homology, reachable_gradings, IteratedError,
    KunnethReport, Route,
};
use maghom::linalg::FgAbelianGroup;
use maghom::magnitude::{graded_homology, magnitude_complex_metric, Gradings};
use maghom::oracles::{oracle_group_homology, oracle_mh01_catgroup, oracle_mh1_metric, oracle_mh2_normed, oracle_suspension};
use maghom::{Rational, RationalNormedGroup};
use num_traits::Zero;

use crate::compute::{homology, ComputeError, Homology, Request};
use crate::input::Structure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    fn from_result(name: &str, r: Result<(bool, String), ComputeError>) -> Self {
        match r {
            Ok((pass, detail)) => Check::new(name, pass, detail),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        }
    }
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {} ({})", self.name, if self.pass { "PASS" } else { "FAIL" }, self.detail)
    }
}

fn list<T: std::fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn routes_agree(s: &Structure, max_degree: usize) -> Check {
    let run = |route| homology(s, &Request { max_degree, gradings: Vec::new(), route, normalize_rows: true });
    Check::from_result(
        "routes agree",
        (|| {
            let (diag, tot) = (run(Route::Diagonal)?, run(Route::Tot)?);
            Ok((diag == tot, format!("diag vs tot, degrees 0..={max_degree}")))
        })(),
    )
}

fn components(s: &Structure, components: usize) -> Check {
    Check::from_result(
        "MH_0 components",
        (|| {
            let h = homology(s, &Request { max_degree: 0, gradings: Vec::new(), route: Route::Diagonal, normalize_rows: true })?;
            let Homology::Ungraded(t) = h else { unreachable!("components are checked on ungraded inputs") };
            Ok((t.get(0) == FgAbelianGroup::free(components), format!("{} components, MH_0 = {}", components, t.get(0))))
        })(),
    )
}

fn metric_homology(x: &GenMetricSpace<Rational>, max_degree: usize) -> Result<BTreeMap<Rational, HomologyTable>, ComputeError> {
    Ok(graded_homology(&magnitude_complex_metric(x, max_degree + 1, &Gradings::AllReachable), max_degree)?)
}

fn metric_suite(x: &GenMetricSpace<Rational>) -> Vec<Check> {
    let h = match metric_homology(x, 1) {
        Ok(h) => h,
        Err(e) => return vec![Check::new("metric homology", false, format!("error: {e}"))],
    };
    let mh0 = h.iter().all(|(l, t)| {
        let expected = if l.is_zero() { FgAbelianGroup::free(x.len()) } else { FgAbelianGroup::zero() };
        t.get(0) == expected
    });
    let positive: Vec<&Rational> = h.keys().filter(|l| !l.is_zero()).collect();
    let bad: Vec<&Rational> = positive.iter().copied().filter(|l| h[*l].get(1) != oracle_mh1_metric(x, l)).collect();
    vec![
        Check::new("MH_0 points", mh0, format!("{} points", x.len())),
        Check::new(
            "metric MH1 = adjacent pairs",
            bad.is_empty(),
            if bad.is_empty() { format!("ℓ∈{{{}}}", list(&positive)) } else { format!("mismatch at ℓ∈{{{}}}", list(bad)) },
        ),
    ]
}

fn normed_suite(g: &RationalNormedGroup) -> Vec<Check> {
    let zero = Rational::zero();
    let values: Vec<Rational> = g.norm_values();
    let positive: Vec<&Rational> = values.iter().filter(|l| !l.is_zero()).collect();
    // Degree 2 at ℓ = 0 and at the norm values; degrees 0 and 1 at every other reachable grading.
    let full = || normed_group_homology(g, &Gradings::Explicit(values.clone()), 3, Route::Tot, true);
    let a = Check::from_result(
        "normed-group MH at ℓ = 0 = group homology",
        (|| {
            let h = normed_group_homology(g, &Gradings::Explicit(vec![zero.clone()]), 3, Route::Tot, true)?;
            Ok((h[&zero] == oracle_group_homology(g.group(), 2)?, format!("degrees 0..=2, {}", h[&zero])))
        })(),
    );
    let b = Check::from_result(
        "normed-group MH0 = MH1 = 0 at ℓ > 0",
        (|| {
            let rest: Vec<Rational> = reachable_gradings(g, 3).into_iter().filter(|l| !values.contains(l)).collect();
            let mut h = full()?;
            h.extend(normed_group_homology(g, &Gradings::Explicit(rest), 2, Route::Tot, true)?);
            let bad: Vec<&Rational> =
                h.iter().filter(|(l, t)| !l.is_zero() && !(t.get(0).is_zero() && t.get(1).is_zero())).map(|(l, _)| l).collect();
            let ls: Vec<&Rational> = h.keys().filter(|l| !l.is_zero()).collect();
            Ok(if bad.is_empty() { (true, format!("ℓ∈{{{}}}", list(ls))) } else { (false, format!("nonzero at ℓ∈{{{}}}", list(bad))) })
        })(),
    );
    let c = Check::from_result(
        "normed-group MH2 = indecomposable classes",
        (|| {
            let h = full()?;
            let mut bad = Vec::new();
            for l in &positive {
                if h[*l].get(2) != oracle_mh2_normed(g, l)? {
                    bad.push(*l);
                }
            }
            Ok(if bad.is_empty() {
                (true, format!("ℓ∈{{{}}}, degree 2", list(&positive)))
            } else {
                (false, format!("mismatch at ℓ∈{{{}}}", list(bad)))
            })
        })(),
    );
    let routes = Check::from_result(
        "routes agree",
        (|| {
            let diag = normed_group_homology(g, &Gradings::Explicit(values.clone()), 3, Route::Diagonal, true)?;
            Ok((diag == full()?, format!("diag vs tot, ℓ∈{{{}}}, degrees 0..=2", list(&values))))
        })(),
    );
    vec![a, b, c, routes]
}

fn suspension_check(x: &StrictNCat, base: &StrictNCat, times: usize, max_degree: usize) -> Check {
    Check::from_result(
        "suspension shifts homology",
        (|| {
            let mut predicted = if base.level() == 0 {
                let mut groups = vec![FgAbelianGroup::free(base.cell_count(0))];
                groups.resize(max_degree + 1, FgAbelianGroup::zero());
                HomologyTable::new(groups)
            } else {
                ncat_homology(base, max_degree + 1, Route::Diagonal, true)?
            };
            for _ in 0..times {
                predicted = oracle_suspension(&predicted)?;
            }
            let predicted = predicted.up_to(max_degree);
            let direct = ncat_homology(x, max_degree + 1, Route::Diagonal, true)?;
            Ok((direct == predicted, format!("{times}-fold suspension, {direct}")))
        })(),
    )
}

fn kunneth<L: maghom::Length>(r: Result<KunnethReport<L>, IteratedError>, max_degree: usize) -> Check {
    Check::from_result(
        "Künneth",
        r.map_err(ComputeError::from).map(|r| {
            let bad = r.mismatches();
            (bad.is_empty(), if bad.is_empty() { format!("{} gradings, degrees 0..={max_degree}", r.direct.len()) } else { format!("mismatch at {}", list(bad)) })
        }),
    )
}

fn category_components(c: &FinCategory) -> usize {
    c.connected_components().len()
}

/// Every applicable check for the input at homological degrees up to `max_degree`.
pub fn verify(s: &Structure, max_degree: usize) -> Vec<Check> {
    match s {
        Structure::Category(c) => vec![components(s, category_components(c)), routes_agree(s, max_degree)],
        Structure::CategoryProduct(a, b) => vec![
            components(s, category_components(a) * category_components(b)),
            kunneth(kunneth_check_category(a, b, max_degree), max_degree),
            routes_agree(s, max_degree),
        ],
        Structure::Metric(x) => metric_suite(x),
        Structure::MetricTensor(x, y) => {
            let mut checks = metric_suite(&maghom::enriched::tensor_metric(x, y));
            checks.push(kunneth(kunneth_check_metric(x, y, max_degree), max_degree));
            checks
        }
        Structure::Normed(g) => normed_suite(g),
        Structure::CatGroup(g) => {
            let check = Check::from_result(
                "cat-group MH0, MH1 = abelianized components",
                (|| {
                    let h = ncat_homology(&StrictNCat::from_cat_group(g), 2, Route::Diagonal, true)?;
                    let (mh0, mh1) = oracle_mh01_catgroup(g);
                    Ok((h.get(0) == mh0 && h.get(1) == mh1, format!("MH_0 = {}, MH_1 = {}", h.get(0), h.get(1))))
                })(),
            );
            vec![check, routes_agree(s, 1)]
        }
        Structure::NCat { x, suspended } => {
            let mut checks = vec![components(s, x.connected_components().len())];
            if let Some((base, times)) = suspended {
                checks.push(suspension_check(x, base, *times, max_degree));
            }
            checks.push(routes_agree(s, max_degree));
            checks
        }
    }
}
