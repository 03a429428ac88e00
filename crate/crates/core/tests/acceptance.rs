//! Acceptance gate: one PASS/FAIL line per criterion; exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::time::{Duration, Instant};

use maghom::complex::{homology_table, BasedChainComplex, HomologyTable};
use maghom::enriched::{
    small_groups, sphere_ncat, two_group_from_normal_subgroup, word_norm_group, FinCategory, FiniteGroup, GenMetricSpace,
    NormedGroup, StrictNCat,
};
use maghom::iterated::{
    iterated_complex, kunneth_check_category, kunneth_check_metric, mb_n, reachable_gradings, NCatDoubleNerve, NCatNerveCore,
    NormedDoubleNerve, Route,
};
use maghom::linalg::{smith_normal_form, FgAbelianGroup, IntMatrix};
use maghom::magnitude::{magnitude_complex_metric, metric_nerve, nerve_category, Gradings};
use maghom::oracles::{oracle_group_homology, oracle_mh01_catgroup, oracle_mh1_metric, oracle_mh2_normed, oracle_suspension};
use maghom::simplicial::{normalized_chains, unnormalized_chains, BasedSimplicialObject, Generator};
use maghom::Length;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Evidence gathered across criteria for the route (7) and d∘d (8) checks.
#[derive(Default)]
struct Gate {
    complexes: usize,
    dd_failures: Vec<String>,
    route_instances: usize,
    route_failures: Vec<String>,
}

impl Gate {
    fn homology<B: Sync>(&mut self, label: &str, c: &BasedChainComplex<B>, top: usize) -> HomologyTable {
        self.complexes += 1;
        if let Err(e) = c.validate() {
            self.dd_failures.push(format!("{label}: {e}"));
        }
        homology_table(c, top).unwrap_or_else(|e| panic!("{label}: {e}"))
    }

    fn simplicial<G: Generator>(&mut self, label: &str, s: &BasedSimplicialObject<G>, top: usize) -> (HomologyTable, HomologyTable) {
        (self.homology(label, &normalized_chains(s), top), self.homology(label, &unnormalized_chains(s), top))
    }

    /// Homology through `d − 1` by the diagonal and Tot routes, each with and without normalization.
    fn ncat(&mut self, label: &str, x: &StrictNCat, d: usize) -> HomologyTable {
        let s = mb_n(x, d).unwrap();
        let (diag_n, diag_u) = self.simplicial(label, &s, d - 1);
        let src = NCatDoubleNerve(NCatNerveCore::new(x).unwrap());
        let tot_n = iterated_complex(&src, d, Route::Tot, true).unwrap();
        let tot_n = self.homology(label, &tot_n, d - 1);
        let tot_u = iterated_complex(&src, d, Route::Tot, false).unwrap();
        let tot_u = self.homology(label, &tot_u, d - 1);
        self.compare_routes(label, &[&diag_n, &diag_u, &tot_n, &tot_u]);
        diag_n
    }

    fn normed(&mut self, label: &str, g: &NormedGroup<u64>, l: u64, d: usize) -> HomologyTable {
        let src = NormedDoubleNerve::new(g, l, d);
        let mut tables = Vec::new();
        for route in [Route::Diagonal, Route::Tot] {
            for norm in [true, false] {
                let c = iterated_complex(&src, d, route, norm).unwrap();
                tables.push(self.homology(label, &c, d - 1));
            }
        }
        self.compare_routes(label, &tables.iter().collect::<Vec<_>>());
        tables.swap_remove(0)
    }

    fn compare_routes(&mut self, label: &str, tables: &[&HomologyTable]) {
        self.route_instances += 1;
        if tables.windows(2).any(|w| w[0] != w[1]) {
            self.route_failures.push(format!("{label}: {}", tables.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" / ")));
        }
    }
}

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn expect_eq<T: PartialEq + Debug>(label: &str, got: T, want: T) -> Result<(), String> {
    check(got == want, || format!("{label}: got {got:?}, expected {want:?}"))
}

fn z(r: usize) -> FgAbelianGroup {
    FgAbelianGroup::free(r)
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    check(elapsed < limit, || format!("{what} took {:.1} s, target {:.0} s", elapsed.as_secs_f64(), limit.as_secs_f64()))
}

fn criterion_1(gate: &mut Gate) -> Outcome {
    let start = Instant::now();
    let circle = FinCategory::circle();
    let s = nerve_category(&circle, 3).unwrap();
    let (h, hu) = gate.simplicial("S1 nerve", &s, 2);
    let elapsed = start.elapsed();
    let want = HomologyTable::new(vec![z(1), z(1), z(0)]);
    expect_eq("MH(S1)", &h, &want)?;
    expect_eq("unnormalized MH(S1)", &hu, &want)?;
    let iterated = gate.ncat("S1 as 1-category", &StrictNCat::from_category(&circle), 3);
    expect_eq("iterated MH(S1)", &iterated, &want)?;
    within(elapsed, Duration::from_secs(1), "S1")?;
    Ok(format!("MH = {h} in {:.3} s", elapsed.as_secs_f64()))
}

fn criterion_2(gate: &mut Gate) -> Outcome {
    let mut predicted = HomologyTable::new(vec![z(2)]);
    let mut details = Vec::new();
    for n in 1..=3 {
        let start = Instant::now();
        let x = sphere_ncat(n);
        let s = mb_n(&x, n + 2).unwrap();
        let (h, hu) = gate.simplicial(&format!("S{n} diagonal"), &s, n + 1);
        let elapsed = start.elapsed();
        let want = HomologyTable::new((0..=n + 1).map(|k| z(usize::from(k == 0 || k == n))).collect());
        expect_eq(&format!("MH(S{n})"), &h, &want)?;
        expect_eq(&format!("unnormalized MH(S{n})"), &hu, &want)?;
        predicted = oracle_suspension(&predicted).map_err(|e| e.to_string())?;
        expect_eq(&format!("suspension oracle for S{n}"), &h, &predicted.up_to(n + 1))?;
        if n == 3 {
            within(elapsed, Duration::from_secs(60), "S3")?;
        }
        if n <= 2 {
            // The Tot route for the double nerve, through the same degrees.
            let t = gate.ncat(&format!("S{n} routes"), &x, n + 2);
            expect_eq(&format!("routes for S{n}"), &t, &want)?;
        }
        details.push(format!("S{n}: {h} ({:.2} s)", elapsed.as_secs_f64()));
    }
    Ok(details.join("; "))
}

fn mh1_agrees<L: Length>(gate: &mut Gate, label: &str, x: &GenMetricSpace<L>) -> Result<usize, String> {
    let c = magnitude_complex_metric(x, 2, &Gradings::AllReachable);
    let mut count = 0;
    for (l, piece) in c.pieces() {
        let h = gate.homology(label, piece, 1);
        expect_eq(&format!("{label} MH1^{l}"), h.get(1), oracle_mh1_metric(x, l))?;
        // The unnormalized nerve gives the same homology.
        let nerve = metric_nerve(x, l.clone(), 2).unwrap();
        let hu = gate.homology(label, &unnormalized_chains(&nerve), 1);
        expect_eq(&format!("{label} nerve MH^{l}"), &hu, &h)?;
        count += 1;
    }
    Ok(count)
}

fn criterion_3(gate: &mut Gate) -> Outcome {
    let mut gradings = 0;
    for n in 2..=6 {
        gradings += mh1_agrees(gate, &format!("cycle_digraph({n})"), &GenMetricSpace::<u64>::cycle_digraph(n))?;
        gradings += mh1_agrees(gate, &format!("cycle_graph({n})"), &GenMetricSpace::<u64>::cycle_graph(n))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..20 {
        let x = common::random_rational_space(&mut rng, 5, 0.2);
        gradings += mh1_agrees(gate, &format!("random space {i}"), &x)?;
    }
    Ok(format!("30 spaces, {gradings} gradings"))
}

fn criterion_4(gate: &mut Gate) -> Outcome {
    let two = GenMetricSpace::<u64>::complete_graph(2);
    let cases = [("2pt x 2pt", two.clone(), two.clone()), ("C3 x 2pt", GenMetricSpace::cycle_graph(3), two.clone())];
    let mut gradings = 0;
    for (label, x, y) in &cases {
        let r = kunneth_check_metric(x, y, 3).map_err(|e| e.to_string())?;
        check(r.agrees(), || format!("{label}: gradings {:?} differ", r.mismatches()))?;
        gradings += r.direct.len();
    }
    let r = kunneth_check_metric(&two, &two, 3).unwrap();
    for n in 1..=3u64 {
        expect_eq(&format!("2pt x 2pt MH_{n}^{n}"), r.direct[&n].get(n as usize), z(4 * (n as usize + 1)))?;
    }
    let circle = FinCategory::circle();
    let r = kunneth_check_category(&circle, &circle, 3).map_err(|e| e.to_string())?;
    check(r.agrees(), || "S1 x S1 differs from the Kunneth assembly".into())?;
    let torus = &r.direct[&0];
    expect_eq("S1 x S1", torus.clone(), HomologyTable::new(vec![z(1), z(2), z(1), z(0)]))?;
    let t = gate.ncat("S1 x S1 routes", &StrictNCat::from_category(&circle.product(&circle)), 4);
    expect_eq("S1 x S1 routes", &t, torus)?;
    Ok(format!("metric: {gradings} gradings; S1 x S1 = {torus}"))
}

fn criterion_5(gate: &mut Gate) -> Outcome {
    let mut pairs = 0;
    for (name, g) in small_groups() {
        for n in g.normal_subgroups() {
            let gn = two_group_from_normal_subgroup(&g, &n).map_err(|e| e.to_string())?;
            let label = format!("G_N({name}, |N| = {})", n.len());
            let h = gate.ncat(&label, &StrictNCat::from_cat_group(&gn), 2);
            let (h0, h1) = oracle_mh01_catgroup(&gn);
            expect_eq(&label, (h.get(0), h.get(1)), (h0, h1))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs (G, N)"))
}

fn criterion_6(gate: &mut Gate) -> Outcome {
    let s3 = FiniteGroup::symmetric(3);
    let transpositions: Vec<usize> = (0..6).filter(|&x| x != s3.identity() && s3.mul(x, x) == s3.identity()).collect();
    let d4 = FiniteGroup::dihedral(4);
    let d4_gens = [d4.index_of("r1").unwrap(), d4.index_of("r0s").unwrap()];
    let cases: Vec<(&str, NormedGroup<u64>)> = vec![
        ("S3", word_norm_group(&s3, &transpositions).unwrap()),
        ("Z2", NormedGroup::new(FiniteGroup::cyclic(2), vec![0, 1]).unwrap()),
        ("Z4", word_norm_group(&FiniteGroup::cyclic(4), &[1]).unwrap()),
        ("D4", word_norm_group(&d4, &d4_gens).unwrap()),
    ];
    let mut details = Vec::new();
    for (name, g) in &cases {
        let start = Instant::now();
        // Degree 2 is needed at ℓ = 0 and at the norm values; elsewhere only degrees 0 and 1 are
        // claimed, and building those gradings through degree 3 on the diagonal is out of reach
        // in memory (D4 at ℓ = 4 has about 2·10⁷ diagonal 3-simplices).
        let full: Vec<u64> = g.norm_values();
        let mut h = BTreeMap::new();
        for l in reachable_gradings(g, 3) {
            let d = if full.contains(&l) { 3 } else { 2 };
            h.insert(l, gate.normed(&format!("{name} at {l}"), g, l, d));
        }
        let elapsed = start.elapsed();
        expect_eq(&format!("{name} MH^0"), &h[&0], &oracle_group_homology(g.group(), 2).unwrap())?;
        for (&l, t) in h.iter().filter(|(l, _)| **l > 0) {
            check(t.get(0).is_zero() && t.get(1).is_zero(), || format!("{name}: MH_0, MH_1 at {l} = {t}"))?;
        }
        for l in full.into_iter().filter(|l| *l > 0) {
            check(h.contains_key(&l), || format!("{name}: norm value {l} not computed"))?;
            expect_eq(&format!("{name} MH_2^{l}"), h[&l].get(2), oracle_mh2_normed(g, &l).unwrap())?;
        }
        if *name == "S3" {
            within(elapsed, Duration::from_secs(300), "S3 at D = 3")?;
        }
        let mh2: Vec<String> =
            h.iter().filter(|(l, t)| **l > 0 && t.groups().len() > 2).map(|(l, t)| format!("{l}:{}", t.get(2))).collect();
        details.push(format!("{name} MH2 {{{}}} ({:.1} s)", mh2.join(", "), elapsed.as_secs_f64()));
    }
    Ok(details.join("; "))
}

fn criterion_7(gate: &Gate) -> Outcome {
    check(gate.route_failures.is_empty(), || gate.route_failures.join("; "))?;
    check(gate.route_instances > 0, || "no instances".into())?;
    Ok(format!("{} instances, diagonal and Tot, each with and without normalization", gate.route_instances))
}

fn factorization_matches_betweenness(g: &NormedGroup<u64>) -> bool {
    let grp = g.group();
    let n = grp.order();
    (0..n).all(|a| {
        (0..n).filter(|&b| b != a).all(|b| {
            let between = (0..n).any(|m| m != a && m != b && *g.distance(a, b) == g.distance(a, m) + g.distance(m, b));
            let factors = (0..n).any(|a0| {
                let a1 = grp.mul(grp.inv(a0), a);
                (0..n).any(|b0| {
                    let b1 = grp.mul(grp.inv(b0), b);
                    a0 != b0 && a1 != b1 && *g.distance(a, b) == g.distance(a0, b0) + g.distance(a1, b1)
                })
            });
            between == factors
        })
    })
}

fn criterion_8(gate: &mut Gate) -> Outcome {
    // Normalized and unnormalized chains of random simplicial objects.
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..50 {
        let s = if i % 2 == 0 {
            let size = rng.gen_range(2..=4);
            nerve_category(&common::random_preorder(&mut rng, size), 3).unwrap()
        } else {
            let x = common::random_rational_space(&mut rng, 4, 0.3);
            let values: Vec<_> = x.distances().iter().flatten().filter_map(|d| d.finite().cloned()).collect();
            let l = values[rng.gen_range(0..values.len())].clone() + values[rng.gen_range(0..values.len())].clone();
            let n = metric_nerve(&x, l, 3).unwrap();
            let (h, hu) = gate.simplicial(&format!("random metric nerve {i}"), &n, 2);
            expect_eq(&format!("random metric nerve {i}"), h, hu)?;
            continue;
        };
        check(s.check_identities().is_ok(), || format!("random nerve {i} breaks the simplicial identities"))?;
        let (h, hu) = gate.simplicial(&format!("random nerve {i}"), &s, 2);
        expect_eq(&format!("random nerve {i}"), h, hu)?;
    }
    // Adjacency factorization on the enumerated normed groups of order at most 8.
    let mut normed = 0;
    for (name, g) in small_groups() {
        for n in common::normed_groups(&g) {
            check(factorization_matches_betweenness(&n), || format!("{name} with norm {:?}", n.norms()))?;
            normed += 1;
        }
    }
    // Smith normal form against the gcd-of-minors oracle.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let m = common::random_matrix(&mut rng, 4, 9);
        let snf = smith_normal_form(&IntMatrix::from_rows(&m));
        expect_eq(&format!("{m:?}"), snf.invariant_factors(), common::invariant_factors_by_minors(&m))?;
    }
    check(gate.dd_failures.is_empty(), || gate.dd_failures.join("; "))?;
    Ok(format!(
        "d∘d = 0 on {} complexes; 50 simplicial objects; {normed} normed groups; 200 matrices",
        gate.complexes
    ))
}

fn main() {
    let mut gate = Gate::default();
    let criteria: [(&str, fn(&mut Gate) -> Outcome); 6] = [
        ("S1 category", criterion_1),
        ("sphere suspension ladder", criterion_2),
        ("metric MH1", criterion_3),
        ("Kunneth", criterion_4),
        ("Cat-group MH0 and MH1", criterion_5),
        ("normed groups", criterion_6),
    ];
    let mut failed = 0;
    let mut report = |i: usize, name: &str, outcome: Outcome, elapsed: Duration| {
        match outcome {
            Ok(detail) => println!("criterion {i} [{name}]: PASS ({detail}; {:.2} s)", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {i} [{name}]: FAIL ({why})");
            }
        }
    };
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&mut gate)))
            .unwrap_or_else(|p| Err(format!("panicked: {}", panic_text(&p))));
        report(i + 1, name, outcome, start.elapsed());
    }
    let start = Instant::now();
    report(7, "route equivalence", criterion_7(&gate), start.elapsed());
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| criterion_8(&mut gate)))
        .unwrap_or_else(|p| Err(format!("panicked: {}", panic_text(&p))));
    report(8, "property suites", outcome, start.elapsed());
    if failed > 0 {
        println!("acceptance: {failed} criteria failed");
        std::process::exit(1);
    }
    println!("acceptance: all 8 criteria pass");
}

fn panic_text(p: &Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default()
}
