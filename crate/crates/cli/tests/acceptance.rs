//! End-to-end acceptance checks. Each numbered criterion prints exactly one
//! PASS/FAIL line; the test fails if any criterion fails.

use std::collections::HashMap;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config as PtConfig, TestError, TestRunner};

use vinberg::classify::{classify_mask, components, critical_subdiagrams, mask_of, Kind};
use vinberg::engine::RunReport;
use vinberg::gram::GramMatrix;
use vinberg::oracle::{brute_force_roots, enumerate_candidates};
use vinberg::symmetry::{diagram_symmetries, SymmetryGroup};
use vinberg::EdgeLabel::{Dashed as D, Finite as F, Heavy as H};
use vinberg::{
    diagram, gram, isomorphic, run, run_to_budget, Budget, CoxeterDiagram, EdgeLabel,
    QuadraticForm, Root, Verdict,
};
use vinberg_cli::document;

const ENUM_CAP: usize = 10_000_000;

fn pad(head: Vec<i64>, dim: usize) -> Vec<i64> {
    let mut v = head;
    v.resize(dim, 0);
    v
}

fn rep(value: i64, count: usize) -> Vec<i64> {
    vec![value; count]
}

fn cat(parts: &[Vec<i64>]) -> Vec<i64> {
    parts.iter().flatten().copied().collect()
}

/// The reference non-initial roots for each dimension, in acceptance order
/// (their distance priorities are pairwise distinct for every n here).
fn reference_roots(n: usize) -> Vec<Vec<i64>> {
    let dim = n + 1;
    let mut out = vec![pad(vec![1, 3], dim)];
    if n == 4 {
        out.push(pad(rep(1, 5), dim));
    } else if n >= 5 {
        out.push(pad(rep(1, 6), dim));
    }
    if n >= 9 {
        out.push(pad(cat(&[vec![5], rep(3, 9)]), dim));
    }
    if n == 10 {
        out.push(pad(cat(&[vec![2, 2], rep(1, 9)]), dim));
    } else if n >= 11 {
        out.push(pad(cat(&[vec![2, 2], rep(1, 10)]), dim));
    }
    if n == 12 {
        out.push(pad(cat(&[rep(3, 3), rep(1, 10)]), dim));
        out.push(pad(cat(&[vec![5], rep(3, 8), rep(1, 4)]), dim));
    } else if n >= 13 {
        out.push(pad(cat(&[rep(3, 3), rep(1, 11)]), dim));
        out.push(pad(cat(&[vec![5], rep(3, 8), rep(1, 5)]), dim));
    }
    if n >= 13 {
        out.push(pad(cat(&[vec![2], rep(1, 13)]), dim));
        out.push(pad(cat(&[vec![8], rep(6, 3), rep(3, 10)]), dim));
        out.push(pad(cat(&[vec![10], rep(6, 7), rep(3, 6)]), dim));
    }
    // Acceptance order is priority order; the priorities are distinct.
    let form = QuadraticForm::new(3, n).unwrap();
    let mut roots: Vec<Root> = out
        .into_iter()
        .map(|c| Root::new(&form, c).expect("reference root is valid"))
        .collect();
    roots.sort_by_key(|r| r.priority());
    roots.into_iter().map(|r| r.coords().to_vec()).collect()
}

/// The first four non-initial roots in every dimension n >= 14.
fn reference_roots_high(n: usize) -> Vec<Vec<i64>> {
    let dim = n + 1;
    vec![
        pad(vec![1, 3], dim),
        pad(rep(1, 6), dim),
        pad(cat(&[vec![2, 2], rep(1, 10)]), dim),
        pad(cat(&[vec![2], rep(1, 14)]), dim),
    ]
}

/// The reference diagram shapes for n = 2..13, as (size, edge list).
fn reference_diagram(n: usize) -> CoxeterDiagram {
    let (size, edges): (usize, Vec<(usize, usize, EdgeLabel)>) = match n {
        2 => (3, vec![(0, 1, F(6)), (1, 2, F(4))]),
        3 => (4, vec![(0, 1, F(6)), (1, 2, F(3)), (2, 3, F(4))]),
        4 => (6, vec![(0, 1, F(6)), (1, 2, F(3)), (2, 3, F(3)), (3, 4, F(4)), (4, 5, H)]),
        5 => (7, vec![(0, 1, F(6)), (1, 2, F(3)), (2, 3, F(3)), (3, 4, F(3)), (4, 5, F(4)), (5, 6, F(4))]),
        6 => (8, vec![(0, 1, F(6)), (1, 2, F(3)), (2, 3, F(3)), (3, 4, F(3)), (4, 5, F(3)), (5, 6, F(3)), (5, 7, F(4))]),
        7 => (9, vec![(0, 1, F(6)), (1, 2, F(3)), (2, 3, F(3)), (3, 4, F(3)), (4, 5, F(3)), (5, 6, F(3)), (5, 7, F(3)), (7, 8, F(4))]),
        8 => (10, vec![(0, 1, F(6)), (1, 2, F(3)), (2, 3, F(3)), (3, 4, F(3)), (4, 5, F(3)), (5, 6, F(3)), (5, 7, F(3)), (7, 8, F(3)), (8, 9, F(4))]),
        9 => (12, vec![(0, 1, F(4)), (0, 5, F(3)), (1, 2, D), (2, 3, H), (3, 4, F(6)), (4, 10, F(3)), (5, 6, F(3)), (6, 7, F(3)), (7, 8, F(3)), (7, 11, F(3)), (8, 9, F(3)), (9, 10, F(3))]),
        10 => (14, vec![(0, 1, H), (0, 3, F(4)), (1, 2, F(4)), (2, 4, F(3)), (2, 13, F(6)), (3, 5, F(3)), (3, 12, F(6)), (4, 6, F(3)), (5, 7, F(3)), (6, 8, F(3)), (7, 9, F(3)), (8, 10, F(3)), (9, 10, F(3)), (10, 11, F(3)), (12, 13, H)]),
        11 => (15, vec![(0, 1, F(4)), (0, 2, F(4)), (1, 3, F(3)), (2, 4, F(3)), (3, 5, F(3)), (3, 13, F(6)), (4, 6, F(3)), (4, 14, F(6)), (5, 7, F(3)), (6, 8, F(3)), (7, 9, F(3)), (8, 10, F(3)), (9, 11, F(3)), (10, 11, F(3)), (11, 12, F(3)), (13, 14, H)]),
        12 => (18, vec![(0, 1, F(4)), (0, 2, F(3)), (0, 3, F(3)), (1, 14, H), (1, 15, H), (2, 4, F(3)), (3, 5, F(3)), (4, 6, F(3)), (4, 16, F(6)), (5, 7, F(3)), (5, 17, F(6)), (6, 8, F(3)), (6, 15, D), (7, 9, F(3)), (7, 14, D), (8, 10, F(3)), (9, 11, F(3)), (10, 12, F(3)), (11, 12, F(3)), (12, 13, F(3)), (14, 15, D), (14, 16, D), (15, 17, D), (16, 17, H)]),
        13 => (22, vec![(0, 1, F(3)), (0, 2, F(3)), (0, 12, F(3)), (1, 3, F(3)), (2, 4, F(3)), (3, 5, F(3)), (3, 16, F(6)), (4, 6, F(3)), (4, 17, F(6)), (5, 7, F(3)), (5, 14, H), (6, 8, F(3)), (6, 15, H), (7, 9, F(3)), (7, 19, F(6)), (8, 10, F(3)), (8, 18, F(6)), (9, 13, F(3)), (10, 13, F(3)), (11, 13, F(3)), (11, 20, F(4)), (12, 21, F(4)), (14, 15, D), (14, 17, D), (14, 18, D), (14, 20, F(4)), (14, 21, F(4)), (15, 16, D), (15, 19, D), (15, 20, F(4)), (15, 21, F(4)), (16, 17, H), (16, 18, D), (16, 19, H), (16, 20, D), (17, 18, H), (17, 19, D), (17, 20, D), (18, 19, H), (18, 21, D), (19, 21, D), (20, 21, H)]),
        _ => unreachable!(),
    };
    CoxeterDiagram::from_edges(size, &edges)
}

struct Dim {
    report: RunReport,
    gram: GramMatrix,
    diagram: CoxeterDiagram,
    sym: SymmetryGroup,
}

fn apply(p: &[usize], subset: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = subset.iter().map(|&i| p[i]).collect();
    v.sort_unstable();
    v
}

fn perm_is_involution(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &pi)| p[pi] == i) && p.iter().enumerate().any(|(i, &pi)| pi != i)
}

#[test]
fn acceptance() {
    let mut failures: Vec<String> = Vec::new();
    let mut check = |no: usize, name: &str, result: Result<String, String>| match result {
        Ok(extra) => println!("criterion {no} ({name}): PASS{extra}"),
        Err(e) => {
            println!("criterion {no} ({name}): FAIL — {e}");
            failures.push(format!("criterion {no}: {e}"));
        }
    };

    // Shared data: full runs for n = 2..13, timed for criterion 1.
    let sweep_start = Instant::now();
    let dims: HashMap<usize, Dim> = (2..=13)
        .map(|n| {
            let form = QuadraticForm::new(3, n).unwrap();
            let report = run(&form, &Budget::for_dimension(n)).unwrap();
            let g = gram(&form, &report.roots);
            let d = diagram(&g).unwrap();
            let sym = diagram_symmetries(&d);
            (n, Dim { report, gram: g, diagram: d, sym })
        })
        .collect();
    let sweep = sweep_start.elapsed();

    // 1. Root lists for n = 2..13, in under 60 seconds total.
    check(1, "root lists n=2..13", (|| {
        for n in 2..=13 {
            let dim = &dims[&n];
            if dim.report.verdict != Verdict::FiniteVolume {
                return Err(format!("n={n}: verdict {:?}", dim.report.verdict));
            }
            let got: Vec<Vec<i64>> = dim.report.roots[n..]
                .iter()
                .map(|r| r.coords().to_vec())
                .collect();
            let want = reference_roots(n);
            if got != want {
                return Err(format!("n={n}: accepted roots {got:?}, reference {want:?}"));
            }
        }
        if sweep.as_secs() >= 60 {
            return Err(format!("sweep took {sweep:?}, budget is 60 s"));
        }
        Ok(format!(" ({} dims in {sweep:?})", 12))
    })());

    // 2. Diagrams are isomorphic to the reference diagrams, with spot checks.
    check(2, "diagram shapes n=2..13", (|| {
        for n in 2..=13 {
            let expected = reference_diagram(n);
            if !isomorphic(&dims[&n].diagram, &expected) {
                return Err(format!("n={n}: diagram not isomorphic to the reference"));
            }
        }
        // Spot check: n=3 is a path with labels 6, 3, 4.
        let d3 = &dims[&3].diagram;
        let mut labels: Vec<EdgeLabel> = d3.edges().iter().map(|&(_, _, l)| l).collect();
        labels.sort();
        if labels != vec![F(3), F(4), F(6)] || (0..4).any(|v| d3.degree(v) > 2) {
            return Err("n=3 is not the expected labelled path".into());
        }
        // Spot check: n=10 contains exactly two Lanner triangles.
        let d10 = &dims[&10].diagram;
        let m = d10.size();
        let mut lanner3 = 0;
        for a in 0..m {
            for b in (a + 1)..m {
                for c in (b + 1)..m {
                    if classify_mask(d10, mask_of(&[a, b, c])).kind == Kind::Lanner {
                        lanner3 += 1;
                    }
                }
            }
        }
        if lanner3 != 2 {
            return Err(format!("n=10 has {lanner3} Lanner triangles, expected 2"));
        }
        Ok(String::new())
    })());

    // 3. The n=3 normalized Gram matrix, exactly.
    check(3, "n=3 Gram matrix", (|| {
        let g = &dims[&3].gram;
        let want = |i: usize, j: usize| match (i, j) {
            (0, 1) => vinberg::Rat::new(1, 4),
            (1, 2) => vinberg::Rat::new(1, 2),
            (0, 3) => vinberg::Rat::new(3, 4),
            _ => vinberg::Rat::new(0, 1),
        };
        for i in 0..4 {
            for j in (i + 1)..4 {
                if g.cos2(i, j) != want(i, j) {
                    return Err(format!("c({i},{j}) = {:?}, want {:?}", g.cos2(i, j), want(i, j)));
                }
                if g.cos2(i, j) != vinberg::Rat::new(0, 1) && g.raw(i, j) >= 0 {
                    return Err(format!("entry ({i},{j}) is not negative"));
                }
            }
        }
        Ok(String::new())
    })());

    // 4. Finite volume everywhere, compact only for n=2.
    check(4, "volume and compactness", (|| {
        for n in 2..=13 {
            let v = &dims[&n].report.volume;
            if !v.finite {
                return Err(format!("n={n} not finite volume"));
            }
            if v.compact != (n == 2) {
                return Err(format!("n={n} compact={}", v.compact));
            }
        }
        Ok(String::new())
    })());

    // 5. Cusp counts and their symmetry orbit structure.
    check(5, "cusp counts and orbits", (|| {
        let counts = [(2, 0), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1), (8, 1), (9, 2), (10, 3), (11, 5), (12, 6), (13, 13)];
        for (n, want) in counts {
            let got = dims[&n].report.volume.cusps();
            if got != want {
                return Err(format!("n={n}: {got} cusps, want {want}"));
            }
        }
        // Orbits under the full symmetry group for n = 9..12.
        for (n, want) in [(9usize, 2usize), (10, 2), (11, 3), (12, 4)] {
            let dim = &dims[&n];
            let got = dim.sym.orbit_count(&dim.report.volume.ideal_vertices);
            if got != want {
                return Err(format!("n={n}: {got} cusp orbits, want {want}"));
            }
        }
        // n=13: some involutive symmetry pairs the 13 cusps into six swapped
        // pairs plus one fixed cusp.
        let dim = &dims[&13];
        let cusps: Vec<Vec<usize>> = dim
            .report
            .volume
            .ideal_vertices
            .iter()
            .map(|c| {
                let mut v = c.clone();
                v.sort_unstable();
                v
            })
            .collect();
        let pairing = dim.sym.elements.iter().any(|p| {
            if !perm_is_involution(p) {
                return false;
            }
            let fixed = cusps.iter().filter(|c| apply(p, c) == **c).count();
            let closed = cusps.iter().all(|c| cusps.contains(&apply(p, c)));
            fixed == 1 && closed
        });
        if !pairing {
            return Err("n=13: no involution giving six pairs and one fixed cusp".into());
        }
        Ok(String::new())
    })());

    // 6. Symmetry group orders.
    check(6, "symmetry groups", (|| {
        for n in 2..=13 {
            let want = match n {
                n if n <= 9 => 1,
                10 | 11 | 12 => 2,
                _ => 4,
            };
            let got = dims[&n].sym.order();
            if got != want {
                return Err(format!("n={n}: |Sym| = {got}, want {want}"));
            }
        }
        let s13 = &dims[&13].sym;
        if s13.generators.len() != 2 {
            return Err(format!("n=13: {} generators, want 2", s13.generators.len()));
        }
        let (a, b) = (&s13.generators[0], &s13.generators[1]);
        if !perm_is_involution(a) || !perm_is_involution(b) {
            return Err("n=13: generators are not involutions".into());
        }
        let ab: Vec<usize> = (0..a.len()).map(|i| a[b[i]]).collect();
        let ba: Vec<usize> = (0..a.len()).map(|i| b[a[i]]).collect();
        if ab != ba {
            return Err("n=13: generators do not commute".into());
        }
        Ok(String::new())
    })());

    // 7. Budget exhaustion and non-reflectivity certificates for n = 14..20.
    check(7, "non-reflectivity n=14..20", (|| {
        let start = Instant::now();
        for n in 14..=20 {
            let form = QuadraticForm::new(3, n).unwrap();
            let budget = Budget { max_roots: n + 4, max_k0: 100, enum_cap: ENUM_CAP };
            let report = run(&form, &budget).map_err(|e| format!("n={n}: {e}"))?;
            if report.verdict != Verdict::BudgetExhausted {
                return Err(format!("n={n}: verdict {:?}", report.verdict));
            }
            let got: Vec<Vec<i64>> = report.roots[n..].iter().map(|r| r.coords().to_vec()).collect();
            if got != reference_roots_high(n) {
                return Err(format!("n={n}: first accepted roots {got:?}"));
            }
            let cert = vinberg::certify_nonreflective(&form).map_err(|e| format!("n={n}: {e}"))?;
            if cert.rank != 12 || cert.required_rank != n - 1 {
                return Err(format!("n={n}: certificate rank {} / {}", cert.rank, cert.required_rank));
            }
            if cert.components[0].len() != 7 || cert.components[1].len() != 7 {
                return Err(format!("n={n}: obstruction components are not two 7-vertex diagrams"));
            }
            if cert.restricted_gram != [[3, -6], [-6, 12]] {
                return Err(format!("n={n}: restricted Gram {:?}", cert.restricted_gram));
            }
            let doc = document::certificate_doc(&cert);
            if doc.norm_identity != "3*(p - 2*q)^2 + sum_{i >= 15} k_i^2" {
                return Err(format!("n={n}: norm identity {:?}", doc.norm_identity));
            }
        }
        Ok(format!(" (7 dims in {:?})", start.elapsed()))
    })());

    // 8. The engine matches the brute-force oracle on every small instance.
    check(8, "oracle equivalence", (|| {
        for phi in 1..=3i64 {
            for n in 2..=5usize {
                let form = QuadraticForm::new(phi, n).unwrap();
                let oracle = brute_force_roots(&form, 5, 64);
                let budget = Budget { max_roots: 64, max_k0: 5, enum_cap: ENUM_CAP };
                let (engine, _) = run_to_budget(&form, &budget).map_err(|e| e.to_string())?;
                let o: Vec<&[i64]> = oracle.iter().map(|r| r.coords()).collect();
                let e: Vec<&[i64]> = engine.iter().map(|r| r.coords()).collect();
                if o != e {
                    return Err(format!("phi={phi}, n={n}: engine and oracle disagree"));
                }
            }
        }
        Ok(String::new())
    })());

    // 9. Randomized property suites, at least 10^4 cases in total.
    check(9, "property suites", (|| {
        let mut total: u64 = 0;

        // Shared pool of engine runs over the small-parameter grid.
        let mut pool: HashMap<(i64, usize, i64), (Vec<Root>, CoxeterDiagram)> = HashMap::new();
        for phi in 1..=3i64 {
            for n in 2..=5usize {
                for k0 in 1..=4i64 {
                    let form = QuadraticForm::new(phi, n).unwrap();
                    let budget = Budget { max_roots: 64, max_k0: k0, enum_cap: ENUM_CAP };
                    let (roots, _) = run_to_budget(&form, &budget).map_err(|e| e.to_string())?;
                    let d = diagram(&gram(&form, &roots)).map_err(|e| e.to_string())?;
                    pool.insert((phi, n, k0), (roots, d));
                }
            }
        }

        let runner = |cases: u32| {
            TestRunner::new(PtConfig {
                cases,
                failure_persistence: None,
                ..PtConfig::default()
            })
        };
        fn describe<T: std::fmt::Debug>(e: TestError<T>) -> String {
            match e {
                TestError::Fail(reason, _) => reason.message().to_string(),
                TestError::Abort(reason) => reason.message().to_string(),
            }
        }

        // Reflection is an involution and an isometry.
        let cases = 3000;
        total += cases as u64;
        runner(cases)
            .run(
                &(1..=3i64, 2..=4usize, any::<prop::sample::Index>(), prop::collection::vec(-9..=9i64, 5)),
                |(phi, n, idx, xs)| {
                    let form = QuadraticForm::new(phi, n).unwrap();
                    let cands = enumerate_candidates(&form, 2);
                    prop_assume!(!cands.is_empty());
                    let root = &cands[idx.index(cands.len())];
                    let x: Vec<i64> = xs[..form.dim()].to_vec();
                    let once = form.reflect(root, &x).unwrap();
                    let y: Vec<i64> = once
                        .iter()
                        .map(|r| {
                            prop_assert!(r.is_integer(), "reflection is not integral");
                            Ok(r.to_integer())
                        })
                        .collect::<Result<_, _>>()?;
                    let twice = form.reflect(root, &y).unwrap();
                    let back: Vec<i64> = twice.iter().map(|r| r.to_integer()).collect();
                    prop_assert_eq!(&back, &x, "reflection is not an involution");
                    prop_assert_eq!(form.norm(&x), form.norm(&y), "reflection is not an isometry");
                    Ok(())
                },
            )
            .map_err(|e| format!("reflection property: {}", describe(e)))?;

        // Accepted roots are pairwise non-positive under the form.
        let cases = 2000;
        total += cases as u64;
        runner(cases)
            .run(
                &(1..=3i64, 2..=5usize, 1..=4i64, any::<prop::sample::Index>(), any::<prop::sample::Index>()),
                |(phi, n, k0, i, j)| {
                    let form = QuadraticForm::new(phi, n).unwrap();
                    let (roots, _) = &pool[&(phi, n, k0)];
                    let (a, b) = (&roots[i.index(roots.len())], &roots[j.index(roots.len())]);
                    if a.coords() != b.coords() {
                        let ip = form.inner_product(a.coords(), b.coords()).unwrap();
                        prop_assert!(ip <= 0, "({:?}, {:?}) = {} > 0", a.coords(), b.coords(), ip);
                    }
                    Ok(())
                },
            )
            .map_err(|e| format!("non-positivity property: {}", describe(e)))?;

        // Acceptance priorities never decrease along a run.
        let cases = 2000;
        total += cases as u64;
        runner(cases)
            .run(&(1..=3i64, 2..=5usize, 1..=4i64), |(phi, n, k0)| {
                let (roots, _) = &pool[&(phi, n, k0)];
                for w in roots[n..].windows(2) {
                    prop_assert!(
                        w[0].priority() <= w[1].priority(),
                        "priority decreased: {:?} then {:?}",
                        w[0].coords(),
                        w[1].coords()
                    );
                }
                Ok(())
            })
            .map_err(|e| format!("priority property: {}", describe(e)))?;

        // Every critical (minimal non-elliptic) subdiagram is connected.
        let cases = 2000;
        total += cases as u64;
        runner(cases)
            .run(&(1..=3i64, 2..=5usize, 1..=4i64), |(phi, n, k0)| {
                let (_, d) = &pool[&(phi, n, k0)];
                let crit = critical_subdiagrams(d, ENUM_CAP).unwrap();
                for &mask in &crit {
                    prop_assert_eq!(
                        components(d, mask).len(),
                        1,
                        "critical subdiagram {:#b} is disconnected",
                        mask
                    );
                }
                Ok(())
            })
            .map_err(|e| format!("critical-connectivity property: {}", describe(e)))?;

        // Serialized documents round-trip losslessly, including integers
        // beyond 53-bit magnitude.
        let cases = 2000;
        total += cases as u64;
        let int = || any::<i64>().prop_map(document::Int);
        let label = prop::sample::select(vec![
            "3".to_string(),
            "4".to_string(),
            "6".to_string(),
            "heavy".to_string(),
            "dashed".to_string(),
        ]);
        let doc_strategy = (
            (int)(),
            2..=13usize,
            prop::collection::vec(prop::collection::vec((int)(), 1..6), 1..6),
            prop::collection::vec((0..9usize, 0..9usize, label), 0..8),
            prop::option::of("[a-z]{1,12}"),
        )
            .prop_map(|(phi, n, vectors, edges, verdict)| document::RunDocument {
                form: document::FormDoc { phi, n },
                roots: Some(document::RootsDoc {
                    initial: n,
                    vectors: vectors.clone(),
                    norms: vectors.iter().map(|v| v[0]).collect(),
                    priorities: vectors.iter().map(|_| "1/6".to_string()).collect(),
                }),
                gram: document::GramDoc {
                    norms: vectors.iter().map(|v| v[0]).collect(),
                    entries: vectors.clone(),
                },
                diagram: document::DiagramDoc {
                    size: 9,
                    edges: edges
                        .into_iter()
                        .map(|(i, j, label)| document::EdgeDoc { i, j, label })
                        .collect(),
                },
                volume: None,
                symmetry: None,
                certificate: None,
                meta: document::MetaDoc {
                    schema: 1,
                    tool: "vinberg".to_string(),
                    version: "0.1.0".to_string(),
                    verdict,
                },
            });
        runner(cases)
            .run(&doc_strategy, |doc| {
                let text = document::serialize(&doc);
                let parsed: document::RunDocument =
                    serde_json::from_str(&text).expect("round-trip parse");
                prop_assert_eq!(parsed, doc);
                Ok(())
            })
            .map_err(|e| format!("round-trip property: {}", describe(e)))?;

        // Round-trip over the computed corpus as well.
        for n in 2..=13 {
            let dim = &dims[&n];
            let orbits = Some(dim.sym.orbit_count(&dim.report.volume.ideal_vertices));
            let doc = document::RunDocument {
                form: document::FormDoc { phi: document::Int(3), n },
                roots: Some(document::roots_doc(&dim.report)),
                gram: document::gram_doc(&dim.gram),
                diagram: document::diagram_doc(&dim.diagram),
                volume: Some(document::volume_doc(&dim.report.volume)),
                symmetry: Some(document::symmetry_doc(&dim.sym, orbits)),
                certificate: None,
                meta: document::meta(Some("finite-volume")),
            };
            let parsed: document::RunDocument =
                serde_json::from_str(&document::serialize(&doc)).map_err(|e| e.to_string())?;
            if parsed != doc {
                return Err(format!("n={n}: corpus document does not round-trip"));
            }
            total += 1;
        }

        if total < 10_000 {
            return Err(format!("only {total} randomized cases"));
        }
        Ok(format!(" ({total} cases)"))
    })());

    assert!(failures.is_empty(), "acceptance failures:\n{}", failures.join("\n"));
}
