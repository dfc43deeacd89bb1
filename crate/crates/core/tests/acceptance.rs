//! One PASS/FAIL line per acceptance criterion.

use std::time::{Duration, Instant};

use num::BigInt;
use repcalc::albanese::{
    gg_identity_checks, reference, traceless_dim_polynomial, w_table, wedge_uo, wi_woi_check, wo_table,
};
use repcalc::combinatorics::lr_coefficient;
use repcalc::glrep::{char_oracle_tensor, parse_rep, power, wedge_u, PowerKind};
use repcalc::sprep::nl_coefficient;
use repcalc::tensor::{
    abelian_cycle_tuple, e_pq, free_auto_check_commute, io_contraction_checks, kernel_dim, kernel_dim_formula,
    kernel_generator_checks, lem_connected, lem_contraction_computation, min_rank_for_cycle, pair_part_contraction,
    span_closure_dim, CheckRow, MagnusGen, DEFAULT_BUDGET,
};
use repcalc::{Bipartition, PairOfPartitions, Partition, RepGL, Q};

type Outcome = (bool, String);

fn rep(s: &str) -> RepGL {
    parse_rep(s).unwrap()
}

fn failing(rows: &[CheckRow]) -> Vec<String> {
    rows.iter().filter(|r| !r.pass).map(|r| format!("{} (want {}, got {})", r.id, r.expected, r.computed)).collect()
}

fn wedge_u_table() -> Outcome {
    let r = wedge_u(3);
    let ok = r == rep(reference::WEDGE3_U) && r.total_multiplicity() == 61;
    (ok, format!("{} summands, {} distinct", r.total_multiplicity(), r.distinct()))
}

fn wedge_uo_table() -> Outcome {
    let r = wedge_uo(3).unwrap();
    let direct = power(&rep("1,1|1"), 3, PowerKind::Alternating).unwrap();
    let ok = r == rep(reference::WEDGE3_UO) && r.total_multiplicity() == 36 && r == direct;
    (ok, format!("{} summands; recursion = product basis: {}", r.total_multiplicity(), r == direct))
}

fn w_tables() -> Outcome {
    let w1 = w_table(1).unwrap().total == rep(reference::W1);
    let t2 = w_table(2).unwrap();
    let w2 = t2.total == rep(reference::W2) && t2.entries.len() == 5;
    let t3 = w_table(3).unwrap().total;
    let w3 = t3 == rep(reference::W3) && t3.total_multiplicity() == 34;
    let o3 = wo_table(3).unwrap().total;
    let wo3 = o3 == rep(reference::W3_O) && o3.total_multiplicity() == 19;
    (w1 && w2 && w3 && wo3, format!("W1 {w1}, W2 {w2}, W3 {w3} (34), W3^O {wo3} (19)"))
}

fn wi_woi() -> Outcome {
    let res: Vec<bool> = (1..=4).map(|i| wi_woi_check(i).unwrap()).collect();
    (res.iter().all(|&b| b), format!("i=1..4: {res:?}"))
}

/// Row ids that fail because the printed closed form disagrees with the
/// exact computation (i = 2, 3 wheel rows away from the vanishing cases).
fn is_known_io_discrepancy(r: &CheckRow) -> bool {
    r.id.starts_with("wheel i=2") || r.id.starts_with("wheel i=3")
}

fn contraction_identities() -> (Outcome, bool) {
    let mut rows = Vec::new();
    for i in 1..=4 {
        rows.extend(lem_connected(i, i + 2).unwrap());
    }
    for i in 1..=3 {
        rows.extend(lem_contraction_computation(i, i + 3).unwrap());
    }
    for n in 3..=6 {
        rows.extend(io_contraction_checks(1, n).unwrap());
    }
    for i in 2..=3 {
        for n in i + 2..=i + 5 {
            rows.extend(io_contraction_checks(i, n).unwrap());
        }
    }
    let bad = failing(&rows);
    let only_known = rows.iter().filter(|r| !r.pass).all(is_known_io_discrepancy);
    let boundary = rows.iter().any(|r| r.id == "wheel i=3 n=5" && r.pass);
    let detail = format!(
        "{} rows, {} failing; odd boundary zero holds: {boundary}; failing: {}",
        rows.len(),
        bad.len(),
        bad.join("; ")
    );
    ((bad.is_empty(), detail), only_known && boundary)
}

fn partial_order_vanishing() -> Outcome {
    let mut rows = pair_part_contraction(1, 3).unwrap();
    rows.extend(pair_part_contraction(2, 6).unwrap());
    rows.extend(pair_part_contraction(3, 9).unwrap());
    let bad = failing(&rows);
    (bad.is_empty(), format!("{} rows; failing: {bad:?}", rows.len()))
}

fn traceless_generation() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (p, q, n) in [(1, 1, 3), (2, 1, 3), (1, 2, 3), (2, 2, 4)] {
        let k = kernel_dim(p, q, n, DEFAULT_BUDGET).unwrap();
        let s = span_closure_dim(&e_pq(p, q, n).unwrap(), DEFAULT_BUDGET).unwrap();
        let f = kernel_dim_formula(p, q, n);
        ok &= k == s && f == BigInt::from(k);
        parts.push(format!("T{p},{q}@{n}: {s}/{k}/{f}"));
    }
    ok &= kernel_dim(2, 1, 3, DEFAULT_BUDGET).unwrap() == 21;
    (ok, parts.join(", "))
}

fn dimension_polynomial() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for i in 1..=3 {
        let poly = traceless_dim_polynomial(i);
        let tl = wedge_u(i).traceless_filter(3 * i);
        ok &= poly.degree() == Some(3 * i);
        for n in 3 * i..=3 * i + 2 {
            let pointwise = Q::from_integer(tl.dimension(n));
            ok &= poly.eval(&Q::from_integer(n.into())) == pointwise;
        }
        parts.push(format!("deg {:?}", poly.degree()));
    }
    (ok, parts.join(", "))
}

fn kernel_generators() -> Outcome {
    let r = kernel_generator_checks(9).unwrap();
    let i2 = r.row("I2").is_some_and(|x| x.pass);
    let passed = r.passed();
    let failed: Vec<&str> = r.rows.iter().filter(|x| !x.pass).map(|x| x.id.as_str()).collect();
    (passed >= 8 && i2, format!("{passed}/{} identities at n=9, I2 {i2}, failing {failed:?}", r.rows.len()))
}

fn character_identities() -> Outcome {
    let r = gg_identity_checks(6).unwrap();
    let want: Vec<Q> = [1, 0, 0, 0, 1, 0, 0].iter().map(|&k| Q::from_integer(k.into())).collect();
    let ok = r.passed() && r.trivial_multiplicities == want;
    (ok, format!("to degree 6: (a) {}, (b) {}, (c) {}", r.with_h1_first_failure().is_none(), r.krw_first_failure().is_none(), r.trivial_multiplicities == want))
}

fn bipartitions_up_to(k: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for s in 0..=k {
        for a in 0..=s {
            for p in Partition::all(a) {
                for m in Partition::all(s - a) {
                    out.push(Bipartition::new(p.clone(), m));
                }
            }
        }
    }
    out
}

fn oracle_agreement() -> Outcome {
    let bps = bipartitions_up_to(3);
    let mut mismatches = 0;
    let mut pairs = 0;
    let mut summands = 0;
    for (i, a) in bps.iter().enumerate() {
        for b in &bps[i..] {
            let k = RepGL::irrep(a.clone()).koike_tensor(&RepGL::irrep(b.clone())).restrict(6);
            summands += k.total_multiplicity();
            if k != char_oracle_tensor(a, b, 6).unwrap() {
                mismatches += 1;
            }
            pairs += 1;
        }
    }
    let parts: Vec<Partition> = (0..=4).flat_map(Partition::all).collect();
    let mut triples = 0;
    let mut nl_bad = 0;
    for a in &parts {
        for b in &parts {
            for c in parts.iter().filter(|c| c.size() == a.size() + b.size()) {
                triples += 1;
                if nl_coefficient(a, b, c) != lr_coefficient(a, b, c) {
                    nl_bad += 1;
                }
            }
        }
    }
    (
        mismatches == 0 && nl_bad == 0 && summands > 0,
        format!("{pairs} tensor pairs, {summands} summands ({mismatches} mismatches), {triples} full-size triples ({nl_bad} mismatches)"),
    )
}

fn commutativity() -> Outcome {
    let mut ok = true;
    let mut count = 0;
    for d in 1..=3 {
        for pair in PairOfPartitions::all(d) {
            let n = min_rank_for_cycle(&pair.mu, &pair.nu);
            ok &= free_auto_check_commute(&abelian_cycle_tuple(&pair.mu, &pair.nu, n).unwrap(), n).unwrap();
            count += 1;
        }
    }
    let g: Vec<MagnusGen> = vec!["g(1,2)".parse().unwrap(), "g(2,1)".parse().unwrap()];
    let neg = !free_auto_check_commute(&g, 2).unwrap();
    (ok && neg, format!("{count} tuples commute: {ok}; g(1,2),g(2,1) rejected: {neg}"))
}

fn timed(limit: u64, f: impl FnOnce() -> Outcome) -> (bool, String, Duration) {
    let t = Instant::now();
    let (ok, detail) = f();
    let el = t.elapsed();
    let in_time = el <= Duration::from_secs(limit);
    let detail = if in_time { detail } else { format!("{detail}; over {limit}s budget") };
    (ok && in_time, detail, el)
}

fn main() {
    let mut c5_pinned = false;
    let results: Vec<(&str, (bool, String, Duration))> = vec![
        ("wedge^3 U table", timed(30, wedge_u_table)),
        ("wedge^3 U^O table", timed(30, wedge_uo_table)),
        ("W-tables", timed(60, w_tables)),
        ("W_i = W_i^O + W_{i-1}^O (x) H", timed(120, wi_woi)),
        ("contraction identities", timed(10, || {
            let (o, pinned) = contraction_identities();
            c5_pinned = pinned;
            o
        })),
        ("partial-order vanishing", timed(60, partial_order_vanishing)),
        ("traceless generation oracle", timed(60, traceless_generation)),
        ("dimension polynomial", timed(60, dimension_polynomial)),
        ("kernel-generator computations", timed(60, kernel_generators)),
        ("character identities", timed(120, character_identities)),
        ("oracle agreement", timed(600, oracle_agreement)),
        ("commutativity", timed(60, commutativity)),
    ];
    // Criterion 5 fails on the printed IO wheel closed form; every other
    // sub-item of it must hold.
    let known_failures = [5usize];
    let mut unexpected = Vec::new();
    for (k, (name, (ok, detail, el))) in results.iter().enumerate() {
        let idx = k + 1;
        let mark = if *ok { "PASS" } else { "FAIL" };
        let known = known_failures.contains(&idx);
        let tag = if known && !ok { " [known discrepancy]" } else { "" };
        println!("{mark} {idx:>2} {name}{tag} ({:.2}s): {detail}", el.as_secs_f64());
        if *ok == known {
            unexpected.push(idx);
        }
    }
    if !c5_pinned {
        eprintln!("criterion 5 failed outside the known wheel-coefficient rows");
        std::process::exit(1);
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with unexpected status: {unexpected:?}");
        std::process::exit(1);
    }
    println!("acceptance: 11 PASS, 1 known FAIL (criterion 5)");
}
