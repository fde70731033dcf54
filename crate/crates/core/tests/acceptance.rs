//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or runs over its time limit.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use graphsym::distinguishing::{
    distinguishing_index, distinguishing_number, is_distinguishing_edge, is_distinguishing_vertex,
    Determination,
};
use graphsym::family::NamedGraph;
use graphsym::graph::{complete, cycle, path};
use graphsym::products::{cartesian_product, strong_power, strong_product};
use graphsym::structure::{is_s_thin, s_partition};
use graphsym::symmetry::{are_isomorphic, automorphism_group, group_equal};
use graphsym::theorems::{
    layer_labeling, lift_edge_labeling, run_all, sequence_labeling, verify_product_sandwich,
    verify_strong_power_number, verify_traceable_index, Corpus, LayerSide, SequenceCase, Verdict,
};
use graphsym::{Budget, Graph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs `f` and fails it if it exceeds `limit`.
fn timed<T>(
    what: &str,
    limit: Duration,
    f: impl FnOnce() -> Result<T, String>,
) -> Result<T, String> {
    let start = Instant::now();
    let out = f()?;
    let elapsed = start.elapsed();
    ensure(elapsed <= limit, || {
        format!("{what} took {elapsed:?}, limit {limit:?}")
    })?;
    Ok(out)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn exact<L>(d: &Determination<L>) -> Option<usize> {
    match d {
        Determination::Determined(r) if d.mode_name() == "exact" => Some(r.value),
        _ => None,
    }
}

fn known_values() -> Outcome {
    let b = Budget::default();
    let second = Duration::from_secs(1);
    let mut cases: Vec<(String, Graph, usize, bool)> = Vec::new();
    for n in 3..=8 {
        cases.push((format!("D(P{n})"), path(n), 2, false));
        cases.push((format!("D′(P{n})"), path(n), 2, true));
        let c = cycle(n).map_err(err)?;
        let expected = if n <= 5 { 3 } else { 2 };
        cases.push((format!("D(C{n})"), c.clone(), expected, false));
        cases.push((format!("D′(C{n})"), c, expected, true));
    }
    for n in 2..=5 {
        cases.push((format!("D(K{n})"), complete(n), n, false));
    }
    for (name, g, expected, index) in &cases {
        let got = timed(name, second, || {
            Ok(if *index {
                exact(&distinguishing_index(g, &b).map_err(err)?)
            } else {
                exact(&distinguishing_number(g, &b).map_err(err)?)
            })
        })?;
        ensure(got == Some(*expected), || {
            format!("{name}: expected exact {expected}, got {got:?}")
        })?;
    }
    Ok(format!("{} values exact", cases.len()))
}

fn product_identities() -> Outcome {
    let b = Budget::harness();
    let second = Duration::from_secs(1);
    for n in 1..=4 {
        for m in 1..=4 {
            timed(&format!("K{n}⊠K{m}"), second, || {
                let s = strong_product(&complete(n), &complete(m));
                ensure(s == complete(n * m), || {
                    format!("K{n}⊠K{m} differs from K{}", n * m)
                })?;
                ensure(
                    are_isomorphic(&s, &complete(n * m), &b).map_err(err)?,
                    || format!("K{n}⊠K{m} not isomorphic to K{}", n * m),
                )
            })?;
        }
    }
    let corpus = Corpus::standard();
    for f in &corpus.factors {
        timed(&format!("{}⊠K1", f.name), second, || {
            ensure(strong_product(&f.graph, &complete(1)) == f.graph, || {
                format!("{}⊠K1 differs", f.name)
            })
        })?;
    }
    Ok(format!(
        "16 complete products, {} unit products",
        corpus.factors.len()
    ))
}

fn group_coincidence() -> Outcome {
    let b = Budget::harness();
    let pairs = [
        (path(3), path(4), "P3,P4"),
        (path(3), cycle(5).map_err(err)?, "P3,C5"),
        (path(4), cycle(5).map_err(err)?, "P4,C5"),
    ];
    let mut orders = Vec::new();
    for (g, h, name) in &pairs {
        timed(name, Duration::from_secs(10), || {
            let s = automorphism_group(&strong_product(g, h), &b).map_err(err)?;
            let c = automorphism_group(&cartesian_product(g, h), &b).map_err(err)?;
            ensure(group_equal(&s, &c).map_err(err)?, || {
                format!("{name}: groups differ")
            })?;
            orders.push(format!("{name}:{}", s.order()));
            Ok(())
        })?;
    }
    Ok(format!("equal element sets, orders {}", orders.join(" ")))
}

fn strong_number_values() -> Outcome {
    let b = Budget::harness();
    let products = [
        ("P3⊠P3", strong_product(&path(3), &path(3))),
        ("P3⊠P4", strong_product(&path(3), &path(4))),
        ("P4⊠P4", strong_product(&path(4), &path(4))),
        ("P3⊠C5", strong_product(&path(3), &cycle(5).map_err(err)?)),
        (
            "C5⊠C6",
            strong_product(&cycle(5).map_err(err)?, &cycle(6).map_err(err)?),
        ),
    ];
    timed("all", Duration::from_secs(60), || {
        let mut modes = Vec::new();
        for (name, g) in &products {
            let d = distinguishing_number(g, &b).map_err(err)?;
            ensure(d.value() == Some(2), || {
                format!("D({name}): got {:?}", d.bounds())
            })?;
            let group = automorphism_group(g, &b).map_err(err)?;
            let w = d.witness().expect("witness");
            ensure(
                !group.is_trivial() && is_distinguishing_vertex(g, &group, w).map_err(err)?,
                || format!("{name}: witness or nontrivial group missing"),
            )?;
            modes.push(format!("{name}:{}", d.mode_name()));
        }
        Ok(modes.join(" "))
    })
}

fn sandwich() -> Outcome {
    let b = Budget::harness();
    let corpus = Corpus::standard();
    timed("sandwich", Duration::from_secs(10), || {
        let (mut checked, mut skipped) = (0, 0);
        for (i, j) in corpus.pair_list() {
            let r = verify_product_sandwich(&corpus.factors[i], &corpus.factors[j], &b);
            match r.verdict {
                Verdict::Pass => checked += 1,
                Verdict::Inconclusive => skipped += 1,
                _ => return Err(format!("{r}")),
            }
        }
        let k2 = NamedGraph::complete(2);
        let r = verify_product_sandwich(&k2, &k2, &b);
        let get = |n: &str| r.quantity(n).filter(|q| q.is_exact()).map(|q| q.lo);
        let triple = (
            get("D(G□H)"),
            get("D(G⊠H)"),
            get("min{D(G)|V(H)|,|V(G)|D(H)}"),
        );
        ensure(triple == (Some(3), Some(4), Some(4)), || {
            format!("K2,K2 gave {triple:?}")
        })?;
        Ok(format!(
            "{checked} pairs hold, {skipped} beyond budget; K2,K2: 3 <= 4 <= 4"
        ))
    })
}

fn constructions() -> Outcome {
    let b = Budget::harness();
    let corpus = Corpus::standard();
    timed("constructions", Duration::from_secs(60), || {
        let (mut layer_runs, mut seq_runs, mut skipped) = (0, 0, 0);
        for (i, j) in corpus.pair_list() {
            let (g, h) = (&corpus.factors[i], &corpus.factors[j]);
            if !g.graph.is_connected() || !h.graph.is_connected() {
                continue;
            }
            let s = strong_product(&g.graph, &h.graph);
            let Ok(group) = automorphism_group(&s, &b) else {
                skipped += 1;
                continue;
            };
            for (side, factor, layers) in [
                (LayerSide::First, g, h.graph.n()),
                (LayerSide::Second, h, g.graph.n()),
            ] {
                let Some(d) = distinguishing_number(&factor.graph, &b)
                    .map_err(err)?
                    .value()
                else {
                    continue;
                };
                let phi = distinguishing_number(&factor.graph, &b)
                    .map_err(err)?
                    .witness()
                    .cloned()
                    .expect("witness");
                let lab = layer_labeling(&g.graph, &h.graph, &phi, side, &b).map_err(err)?;
                ensure(
                    is_distinguishing_vertex(&s, &group, &lab).map_err(err)?,
                    || format!("layer labeling {side:?} fails on {},{}", g.name, h.name),
                )?;
                ensure(lab.distinct_labels() == d * layers, || {
                    format!(
                        "layer labeling {side:?} on {},{} uses {} labels",
                        g.name,
                        h.name,
                        lab.distinct_labels()
                    )
                })?;
                layer_runs += 1;
            }
            let applicable = [g, h]
                .iter()
                .all(|f| f.declared_prime && is_s_thin(&f.graph))
                && !are_isomorphic(&g.graph, &h.graph, &b).map_err(err)?;
            if !applicable {
                continue;
            }
            for (a, c) in [(g, h), (h, g)] {
                let con = sequence_labeling(&a.graph, &c.graph, &b).map_err(err)?;
                let sc = strong_product(&a.graph, &c.graph);
                let sg = automorphism_group(&sc, &b).map_err(err)?;
                ensure(
                    is_distinguishing_vertex(&sc, &sg, &con.labeling).map_err(err)?,
                    || format!("sequence labeling fails on {},{}", a.name, c.name),
                )?;
                let expected = match con.case {
                    SequenceCase::DistinctAlphabet => con.factor_number.max(con.alphabet),
                    SequenceCase::SharedAlphabet => con.factor_number + 1,
                    SequenceCase::AsymmetricFactor => con.alphabet,
                };
                ensure(
                    con.bound == expected && con.labels_used() <= con.bound,
                    || {
                        format!(
                            "{},{}: case {:?} bound {} uses {}",
                            a.name,
                            c.name,
                            con.case,
                            con.bound,
                            con.labels_used()
                        )
                    },
                )?;
                seq_runs += 1;
            }
        }
        let (p3, p4) = (path(3), path(4));
        let (cart, strong) = (cartesian_product(&p3, &p4), strong_product(&p3, &p4));
        let l = distinguishing_index(&cart, &b)
            .map_err(err)?
            .witness()
            .cloned()
            .expect("witness");
        let lifted = lift_edge_labeling(&strong, &cart, &l, &b).map_err(err)?;
        let sg = automorphism_group(&strong, &b).map_err(err)?;
        ensure(
            is_distinguishing_edge(&strong, &sg, &lifted).map_err(err)?,
            || "lift fails".into(),
        )?;
        Ok(format!(
            "{layer_runs} layer labelings, {seq_runs} sequence labelings, P3□P4 lift; {skipped} pairs beyond budget"
        ))
    })
}

fn strong_index_values() -> Outcome {
    let b = Budget::harness();
    timed("index values", Duration::from_secs(120), || {
        let k4 = strong_product(&path(2), &path(2));
        let d = distinguishing_index(&k4, &b).map_err(err)?;
        ensure(exact(&d) == Some(3), || {
            format!("D′(P2⊠P2): {:?} {}", d.bounds(), d.mode_name())
        })?;
        let cases = [
            ("P2⊠P3", strong_product(&path(2), &path(3))),
            ("P3⊠P3", strong_product(&path(3), &path(3))),
            ("P3⊠P4", strong_product(&path(3), &path(4))),
            (
                "C3⊠C4",
                strong_product(&cycle(3).map_err(err)?, &cycle(4).map_err(err)?),
            ),
            ("P3⊠C4", strong_product(&path(3), &cycle(4).map_err(err)?)),
        ];
        let mut modes = vec!["P2⊠P2:exact".to_string()];
        for (name, g) in &cases {
            let d = distinguishing_index(g, &b).map_err(err)?;
            ensure(d.value() == Some(2), || {
                format!("D′({name}): {:?}", d.bounds())
            })?;
            modes.push(format!("{name}:{}", d.mode_name()));
        }
        Ok(modes.join(" "))
    })
}

fn traceable_instances() -> Outcome {
    let b = Budget::harness();
    timed("traceable", Duration::from_secs(30), || {
        for fs in [
            [NamedGraph::path(3), NamedGraph::path(3)],
            [NamedGraph::path(2), NamedGraph::path(4)],
        ] {
            let r = verify_traceable_index(&fs, &b);
            ensure(r.verdict == Verdict::Pass && r.witness.is_some(), || {
                format!("{r}")
            })?;
        }
        let k2 = NamedGraph::complete(2);
        let r = verify_traceable_index(&[k2.clone(), k2], &b);
        ensure(
            r.verdict == Verdict::NotApplicable
                && r.hypotheses
                    .iter()
                    .any(|h| h.name == "product order >= 7" && !h.held),
            || format!("K2,K2: {r}"),
        )?;
        Ok("P3,P3 and P2,P4 traceable with D′ <= 2; K2,K2 fails order >= 7".into())
    })
}

fn oracle_equivalence() -> Outcome {
    let b = Budget {
        exact_edges: 15,
        ..Budget::default()
    };
    timed("oracles", Duration::from_secs(600), || {
        let mut graphs = 0;
        for n in 1..=6 {
            for g in common::connected_graphs(n) {
                graphs += 1;
                let group = automorphism_group(&g, &b).map_err(err)?;
                let naive = common::naive_automorphisms(&g);
                let images: Vec<Vec<usize>> = group
                    .elements()
                    .iter()
                    .map(|p| p.image().to_vec())
                    .collect();
                ensure(images == naive, || format!("Aut differs on {g:?}"))?;
                let d = distinguishing_number(&g, &b).map_err(err)?.value();
                ensure(d == Some(common::naive_distinguishing_number(&g)), || {
                    format!("D differs on {g:?}")
                })?;
                ensure(d >= Some(s_partition(&g).largest_class()), || {
                    format!("twin bound on {g:?}")
                })?;
                if g.edge_count() > 0 {
                    let d = distinguishing_index(&g, &b).map_err(err)?.value();
                    ensure(d == common::naive_distinguishing_index(&g), || {
                        format!("D′ differs on {g:?}")
                    })?;
                }
            }
        }
        let sample = common::sample_graphs(7, 100, 0x2545_f491_4f6c_dd1d);
        for g in &sample {
            let group = automorphism_group(g, &b).map_err(err)?;
            let images: Vec<Vec<usize>> = group
                .elements()
                .iter()
                .map(|p| p.image().to_vec())
                .collect();
            ensure(images == common::naive_automorphisms(g), || {
                format!("Aut differs on {g:?}")
            })?;
        }
        Ok(format!(
            "{graphs} connected graphs on <= 6 vertices, {} on 7",
            sample.len()
        ))
    })
}

fn finite_checkability() -> Outcome {
    let b = Budget::harness();
    let corpus = Corpus::parse("P2\nP3\nC4\nK2\nK3\nT7\n").map_err(err)?;
    let reports = run_all(&corpus, &b);
    for r in &reports {
        let gated = r.hypotheses.iter().any(|h| !h.held);
        ensure(gated == (r.verdict == Verdict::NotApplicable), || {
            format!("gating: {r}")
        })?;
        ensure(r.verdict != Verdict::Fail, || format!("{r}"))?;
    }
    let r = verify_strong_power_number(&NamedGraph::path(3), 3, &b);
    ensure(r.verdict == Verdict::Pass, || format!("{r}"))?;
    ensure(strong_power(&path(3), 3).map_err(err)?.n() == 27, || {
        "P3^3 order".into()
    })?;
    let gated = reports
        .iter()
        .filter(|r| r.verdict == Verdict::NotApplicable)
        .count();
    Ok(format!(
        "{} reports, {gated} gated by hypotheses, none failed; P3^3 has D = 2",
        reports.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("known distinguishing values", known_values),
        ("product identities", product_identities),
        ("strong and Cartesian groups coincide", group_coincidence),
        (
            "strong products of paths and cycles have D = 2",
            strong_number_values,
        ),
        ("sandwich bound on the corpus", sandwich),
        ("constructive labelings", constructions),
        (
            "distinguishing index of strong products",
            strong_index_values,
        ),
        ("traceable products", traceable_instances),
        ("oracle equivalence", oracle_equivalence),
        (
            "every statement checked on finite instances",
            finite_checkability,
        ),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {reason}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
