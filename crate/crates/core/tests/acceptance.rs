//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test -p extact --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use extact::activity::ActivityTable;
use extact::complexes::{
    barred_slots, independence_embedding, reduced_complex, shelling_check, topology_report,
};
use extact::corpus::{self, CorpusEntry};
use extact::orders::{ext_characterizations, int_characterizations};
use extact::{
    basis_activity, crapo_partition_check, external_activity_complex, independence_complex,
    tutte_polynomial, BasisPoset, ElementSet, OrderKind, OrderedMatroid, Topology,
};

const SEED: u64 = 0;
const EXHAUSTIVE_LIMIT: usize = 10_000;
const SAMPLES: usize = 1_000;

type Outcome = Result<String, String>;

fn s(xs: &[usize]) -> ElementSet {
    ElementSet::from(xs)
}

/// Plain part `p` and barred part `b` over five elements.
fn sg(p: &[usize], b: &[usize]) -> ElementSet {
    s(p) | barred_slots(5, s(b))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table1() -> Outcome {
    let m = corpus::m0();
    // (B, EP, EA, IP, IA)
    type Row<'a> = ([usize; 3], &'a [usize], &'a [usize], &'a [usize], &'a [usize]);
    let rows: [Row; 8] = [
        ([1, 2, 4], &[3, 5], &[], &[], &[1, 2, 4]),
        ([1, 2, 5], &[3, 4], &[], &[5], &[1, 2]),
        ([1, 3, 4], &[2, 5], &[], &[3], &[1, 4]),
        ([1, 3, 5], &[2, 4], &[], &[3, 5], &[1]),
        ([2, 3, 4], &[5], &[1], &[2, 3], &[4]),
        ([2, 3, 5], &[4], &[1], &[2, 3, 5], &[]),
        ([2, 4, 5], &[3], &[1], &[4, 5], &[2]),
        ([3, 4, 5], &[], &[1, 2], &[3, 4, 5], &[]),
    ];
    ensure(m.bases().len() == 8, || format!("{} bases", m.bases().len()))?;
    for (b, ep, ea, ip, ia) in rows {
        let a = basis_activity(&m, s(&b)).map_err(|e| e.to_string())?;
        ensure(
            (a.ep, a.ea, a.ip, a.ia) == (s(ep), s(ea), s(ip), s(ia)),
            || format!("row {}: got EP={} EA={} IP={} IA={}", a.basis, a.ep, a.ea, a.ip, a.ia),
        )?;
    }
    Ok("8 rows x 4 columns, EP(125) = {3,4}".into())
}

fn table2() -> Outcome {
    let m = corpus::m0();
    let act = external_activity_complex(&m);
    let reduced = reduced_complex(&m);
    let rows: [([usize; 3], ElementSet, ElementSet, ElementSet); 8] = [
        ([1, 2, 4], sg(&[1, 2, 3, 4, 5], &[1, 2, 4]), sg(&[1, 2], &[2, 4]), sg(&[], &[])),
        ([1, 2, 5], sg(&[1, 2, 3, 4, 5], &[1, 2, 5]), sg(&[1, 2], &[2, 5]), sg(&[], &[5])),
        ([1, 3, 4], sg(&[1, 2, 3, 4, 5], &[1, 3, 4]), sg(&[1, 2], &[3, 4]), sg(&[], &[3])),
        ([1, 3, 5], sg(&[1, 2, 3, 4, 5], &[1, 3, 5]), sg(&[1, 2], &[3, 5]), sg(&[], &[3, 5])),
        ([2, 3, 4], sg(&[2, 3, 4, 5], &[1, 2, 3, 4]), sg(&[2], &[2, 3, 4]), sg(&[], &[2, 3])),
        ([2, 3, 5], sg(&[2, 3, 4, 5], &[1, 2, 3, 5]), sg(&[2], &[2, 3, 5]), sg(&[], &[2, 3, 5])),
        ([2, 4, 5], sg(&[2, 3, 4, 5], &[1, 2, 4, 5]), sg(&[2], &[2, 4, 5]), sg(&[], &[4, 5])),
        ([3, 4, 5], sg(&[3, 4, 5], &[1, 2, 3, 4, 5]), sg(&[], &[2, 3, 4, 5]), sg(&[], &[3, 4, 5])),
    ];
    let lex: Vec<usize> = (0..8).collect();
    let full = shelling_check(&act, &lex).map_err(|e| e.to_string())?;
    let red = shelling_check(&reduced, &lex).map_err(|e| e.to_string())?;
    ensure(full.is_shelling && red.is_shelling, || "lex order does not shell".into())?;
    for (i, (b, f, fr, r)) in rows.into_iter().enumerate() {
        ensure(m.bases()[i] == s(&b), || format!("basis {i} is {}", m.bases()[i]))?;
        ensure(act.facets()[i] == f, || format!("F({}) = {}", m.bases()[i], act.facets()[i]))?;
        ensure(reduced.facets()[i] == fr, || {
            format!("reduced F({}) = {}", m.bases()[i], reduced.facets()[i])
        })?;
        ensure(full.restriction_sets[i] == r && red.restriction_sets[i] == r, || {
            format!(
                "R(F({})) = {} / {}",
                m.bases()[i],
                full.restriction_sets[i],
                red.restriction_sets[i]
            )
        })?;
    }
    ensure(act.cone_points() == sg(&[3, 4, 5], &[1]), || "cone points differ".into())?;
    Ok("F(B), reduced F(B), R(F(B)) for 8 bases".into())
}

/// Every extension of `kind` (exhaustive or sampled) must shell the complex.
fn extensions_shell(corpus: &[CorpusEntry], kind: OrderKind, act: bool) -> Outcome {
    let mut orders = 0usize;
    let mut sampled = 0usize;
    for (idx, entry) in corpus.iter().enumerate() {
        let m = &entry.matroid;
        let table = ActivityTable::new(m);
        let poset = BasisPoset::build_with(m, &table, kind).map_err(|e| e.to_string())?;
        let complex = if act {
            external_activity_complex(m)
        } else {
            independence_complex(m)
        };
        let ext = poset.extension_indices(EXHAUSTIVE_LIMIT, SAMPLES, SEED ^ idx as u64);
        if !ext.exhaustive {
            sampled += 1;
            ensure(ext.orders.len() == SAMPLES, || {
                format!("{}: only {} samples", entry.name, ext.orders.len())
            })?;
        }
        for ord in &ext.orders {
            let report = shelling_check(&complex, ord).map_err(|e| e.to_string())?;
            ensure(report.is_shelling, || {
                format!("{}: order {:?} fails at {:?}", entry.name, ord, report.failure_index)
            })?;
        }
        orders += ext.orders.len();
    }
    Ok(format!(
        "{} matroids, {orders} orders, {sampled} sampled, 0 failures",
        corpus.len()
    ))
}

fn negative_controls() -> Outcome {
    let m = corpus::m0();
    let index = |b: &[usize]| m.basis_index(s(b)).expect("basis");
    let ext_order: Vec<usize> = [[1, 2, 4], [1, 3, 5], [1, 2, 5], [1, 3, 4], [2, 3, 4], [2, 3, 5], [2, 4, 5], [3, 4, 5]]
        .iter()
        .map(|b| index(b))
        .collect();
    let int_order: Vec<usize> = [[1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [2, 4, 5], [3, 4, 5], [2, 3, 4], [2, 3, 5]]
        .iter()
        .map(|b| index(b))
        .collect();
    let inc = independence_complex(&m);
    let act = external_activity_complex(&m);
    let check = |k, ord: &[usize]| shelling_check(k, ord).map_err(|e| e.to_string());

    let r = check(&inc, &ext_order)?;
    ensure(!r.is_shelling && r.failure_index == Some(1), || format!("ext order on IN: {r:?}"))?;
    let r = check(&act, &ext_order)?;
    ensure(!r.is_shelling, || "ext order shells Act".into())?;
    let r = check(&inc, &int_order)?;
    ensure(r.is_shelling, || format!("int order on IN: {r:?}"))?;
    let r = check(&act, &int_order)?;
    ensure(
        !r.is_shelling && r.failure_index.map(|j| int_order[j]) == Some(index(&[3, 4, 5])),
        || format!("int order on Act: {r:?}"),
    )?;
    Ok("ext order fails on IN (step 2) and Act; int order shells IN, fails on Act at 345".into())
}

fn h_vectors(corpus: &[CorpusEntry]) -> Outcome {
    for entry in corpus {
        let m = &entry.matroid;
        let r = m.rank();
        let t: Vec<i64> = tutte_polynomial(m)
            .shelling_coefficients(r)
            .into_iter()
            .map(|c| c as i64)
            .collect();
        let h_in = independence_complex(m).h_vector().map_err(|e| e.to_string())?;
        let h_act = external_activity_complex(m).h_vector().map_err(|e| e.to_string())?;
        ensure(h_in == t, || format!("{}: h(IN) {h_in:?} vs T(x,1) {t:?}", entry.name))?;
        ensure(h_act.len() == m.n() + r + 1, || format!("{}: h(Act) length", entry.name))?;
        ensure(
            h_act[..=r] == h_in[..] && h_act[r + 1..].iter().all(|&x| x == 0),
            || format!("{}: h(Act) {h_act:?} vs h(IN) {h_in:?}", entry.name),
        )?;
    }
    let h = independence_complex(&corpus::m0()).h_vector().map_err(|e| e.to_string())?;
    ensure(h == [1, 2, 3, 2], || format!("M0: {h:?}"))?;
    Ok(format!("{} matroids, M0 -> (1,2,3,2)", corpus.len()))
}

fn crapo(corpus: &[CorpusEntry]) -> Outcome {
    let mut checked = 0;
    for entry in corpus.iter().filter(|e| e.matroid.n() <= 7) {
        crapo_partition_check(&entry.matroid).map_err(|v| format!("{}: {v}", entry.name))?;
        checked += 1;
    }
    Ok(format!("{checked} matroids, every subset covered once"))
}

fn topology(corpus: &[CorpusEntry]) -> Outcome {
    let (mut spheres, mut contractible) = (0, 0);
    for entry in corpus {
        let m = &entry.matroid;
        let rep = topology_report(m);
        let minor = m.has_u31_minor();
        ensure(minor == (rep.topology == Topology::ContractibleU31), || {
            format!("{}: {} but minor search says {minor}", entry.name, rep.topology)
        })?;
        let d = rep.dimension;
        match rep.topology {
            Topology::ContractibleU31 => {
                contractible += 1;
                ensure(rep.top_h() == 0 && rep.euler_characteristic == 1, || {
                    format!("{}: contractible with {rep:?}", entry.name)
                })?;
            }
            Topology::SphereOfDim(k) => {
                spheres += 1;
                let chi = 1 + if d.rem_euclid(2) == 0 { 1 } else { -1 };
                ensure(k == d && rep.top_h() == 1 && rep.euler_characteristic == chi, || {
                    format!("{}: sphere with {rep:?}", entry.name)
                })?;
            }
        }
        ensure(rep.dimension == rep.predicted_dimension, || {
            format!("{}: dimension {} vs {}", entry.name, rep.dimension, rep.predicted_dimension)
        })?;
    }
    let m0 = topology_report(&corpus::m0()).topology;
    ensure(m0 == Topology::ContractibleU31, || format!("M0: {m0}"))?;
    let tri = topology_report(&OrderedMatroid::uniform(3, 2).unwrap()).topology;
    ensure(tri == Topology::SphereOfDim(1), || format!("U(3,2): {tri}"))?;
    Ok(format!("{contractible} contractible, {spheres} spheres; M0 contractible, U(3,2) -> S^1"))
}

fn tutte_invariance(corpus: &[CorpusEntry]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for entry in corpus {
        let m = &entry.matroid;
        let base = tutte_polynomial(m);
        let mut order = m.order().to_vec();
        for _ in 0..24 {
            order.shuffle(&mut rng);
            let t = tutte_polynomial(&m.with_order(&order).map_err(|e| e.to_string())?);
            ensure(t == base, || format!("{}: order {order:?} gives {t}", entry.name))?;
        }
    }
    Ok(format!("{} matroids x 24 orders", corpus.len()))
}

fn embedding(corpus: &[CorpusEntry]) -> Outcome {
    let mut isos = 0;
    for entry in corpus {
        let m = &entry.matroid;
        let e = independence_embedding(m);
        ensure(e.contained, || format!("{}: image not in reduced facet", entry.name))?;
        let circuits = m.circuits();
        let disjoint = circuits
            .iter()
            .enumerate()
            .all(|(i, a)| circuits[i + 1..].iter().all(|b| a.is_disjoint(*b)));
        ensure(e.isomorphism == disjoint, || {
            format!("{}: isomorphism {} but disjoint circuits {disjoint}", entry.name, e.isomorphism)
        })?;
        isos += usize::from(disjoint);
    }
    Ok(format!("{} matroids, {isos} isomorphisms", corpus.len()))
}

fn characterizations(corpus: &[CorpusEntry]) -> Outcome {
    let mut pairs = 0;
    for entry in corpus {
        let m = &entry.matroid;
        for &a in m.bases() {
            for &b in m.bases() {
                let ext = ext_characterizations(m, a, b).map_err(|e| e.to_string())?;
                let int = int_characterizations(m, a, b).map_err(|e| e.to_string())?;
                ensure(ext.iter().all(|&x| x == ext[0]), || {
                    format!("{}: ext {a} {b} -> {ext:?}", entry.name)
                })?;
                ensure(int.iter().all(|&x| x == int[0]), || {
                    format!("{}: int {a} {b} -> {int:?}", entry.name)
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} basis pairs, 4 + 4 characterizations agree"))
}

fn main() -> ExitCode {
    let corpus = corpus::standard_corpus(SEED);
    let one_sec = Duration::from_secs(1);
    let five_min = Duration::from_secs(300);
    type Criterion<'a> = (&'a str, Option<Duration>, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("activity table of M0", Some(one_sec), Box::new(table1)),
        ("activity complex table of M0", Some(one_sec), Box::new(table2)),
        (
            "extint extensions shell Act",
            Some(five_min),
            Box::new(|| extensions_shell(&corpus, OrderKind::ExtInt, true)),
        ),
        (
            "int extensions shell IN",
            Some(five_min),
            Box::new(|| extensions_shell(&corpus, OrderKind::Int, false)),
        ),
        ("non-shelling examples", None, Box::new(negative_controls)),
        ("h(Act) = h(IN) = T(x,1)", None, Box::new(|| h_vectors(&corpus))),
        ("interval partition", None, Box::new(|| crapo(&corpus))),
        ("topology vs U(3,1) minors", None, Box::new(|| topology(&corpus))),
        ("Tutte order invariance", None, Box::new(|| tutte_invariance(&corpus))),
        ("IN embeds in reduced Act", None, Box::new(|| embedding(&corpus))),
        ("order characterizations agree", None, Box::new(|| characterizations(&corpus))),
    ];

    println!("corpus: {} matroids (seed {SEED})", corpus.len());
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, limit) {
            if elapsed > *limit {
                outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [{elapsed:.2?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{elapsed:.2?}]: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
