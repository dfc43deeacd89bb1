use repcalc::albanese::{self, reference};
use repcalc::glrep::parse_rep;
use repcalc::tensor::{
    abelian_cycle_chain, abelian_cycle_tuple, comultiply_check, e_pq, free_auto_check_commute, io_contraction_checks,
    kernel_dim, kernel_dim_formula, kernel_generator_checks, lem_connected, lem_contraction_computation,
    min_rank_for_cycle, pair_part_contraction, span_closure_dim, traceless_generator_check, CheckRow, MagnusGen,
};
use repcalc::{Error, PairOfPartitions, Result};
use serde_json::{json, Value};

use crate::Report;

pub struct Options {
    pub n: Option<usize>,
    pub max_degree: usize,
    pub budget: u128,
}

type Suite = fn(&Options) -> Result<Vec<CheckRow>>;

const SUITES: &[(&str, &str, Suite)] = &[
    ("lemconnected", "c_i and c_i^tree on the connected cycle, i = 1..4", lemconnected),
    ("lemcontractioncomputation", "wheel and tree contractions of α_(0,i), i = 1..3", lemcontractioncomputation),
    ("lemcontractionout0i", "wheel coefficient after U^O ↪ U, i = 1..3", lemcontractionout0i),
    ("tracelessgen", "span closure of e_{p,q} equals the joint kernel", tracelessgen),
    ("tracelessimage", "Π(id − E) on α_(0,1^i) hits ⋀ e_{2j−1,2j}^{n−j+1}", tracelessimage),
    ("lempairpartcontraction", "F_(μ,ν) vanishes off the partial order", lempairpartcontraction),
    ("coalgebramap", "F commutes with comultiplication", coalgebramap),
    ("kerIO", "β^O kernel-generator coefficients", ker_io),
    ("imagecup", "β and γ coefficients under φ, ϕ, ψ maps", imagecup),
    ("abelian-commute", "Magnus tuples of abelian cycles commute", abelian_commute),
    ("w3", "W_3 and W_3^O totals against the reference lists", w3),
    ("torelli-characters", "character identities for A, A¹, W and S̃*(X″)", torelli_characters),
];

pub fn list() -> Report {
    let text: String = SUITES.iter().map(|(id, what, _)| format!("{id:<28}{what}\n")).collect();
    let ids: Vec<Value> = SUITES.iter().map(|(id, what, _)| json!({"id": id, "description": what})).collect();
    Report { json: json!({"command": "list", "ids": ids}), text, code: 0 }
}

pub fn run(id: &str, opts: &Options) -> Result<Report> {
    let (_, _, suite) = SUITES
        .iter()
        .find(|(name, _, _)| *name == id)
        .ok_or_else(|| Error::Parse { what: "verification id", input: id.to_string() })?;
    let rows = suite(opts)?;
    let pass = rows.iter().all(|r| r.pass);
    let mut text = String::new();
    for r in &rows {
        let mark = if r.pass { "PASS" } else { "FAIL" };
        text.push_str(&format!("{mark}  {}: expected {}, computed {}\n", r.id, r.expected, r.computed));
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    text.push_str(&format!("{id}: {} checks, {failed} failed\n", rows.len()));
    let json = json!({
        "command": "verify",
        "id": id,
        "pass": pass,
        "rows": serde_json::to_value(&rows).expect("serializable"),
    });
    Ok(Report { json, text, code: if pass { 0 } else { 1 } })
}

fn ranks(opts: &Options, default: Vec<usize>, min: usize) -> Vec<usize> {
    match opts.n {
        Some(n) if n >= min => vec![n],
        Some(_) => vec![],
        None => default,
    }
}

fn lemconnected(o: &Options) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for i in 1..=4 {
        for n in ranks(o, vec![i + 2], i + 2) {
            rows.extend(lem_connected(i, n)?);
        }
    }
    Ok(rows)
}

fn lemcontractioncomputation(o: &Options) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for i in 1..=3 {
        for n in ranks(o, vec![i + 3], i + 3) {
            rows.extend(lem_contraction_computation(i, n)?);
        }
    }
    Ok(rows)
}

fn lemcontractionout0i(o: &Options) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for i in 1..=3usize {
        let lo = (i + 1).max(3);
        for n in ranks(o, (lo..=i + 5).collect(), lo) {
            rows.extend(io_contraction_checks(i, n)?);
        }
    }
    Ok(rows)
}

fn tracelessgen(o: &Options) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for (p, q, n) in [(1, 1, 3), (2, 1, 3), (1, 2, 3), (2, 2, 4)] {
        let k = kernel_dim(p, q, n, o.budget)?;
        let s = span_closure_dim(&e_pq(p, q, n)?, o.budget)?;
        rows.push(CheckRow::new(format!("span e_{{{p},{q}}} n={n}"), k, s, s == k));
        let f = kernel_dim_formula(p, q, n);
        rows.push(CheckRow::new(format!("kernel dim T_{{{p},{q}}} n={n}"), &f, k, f == k.into()));
    }
    Ok(rows)
}

fn tracelessimage(o: &Options) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for i in 1..=3 {
        for n in ranks(o, vec![3 * i], 3 * i) {
            let s = traceless_generator_check(i, n)?;
            let computed = s.map_or("not a multiple".to_string(), |s| format!("{s:+}"));
            rows.push(CheckRow::new(format!("i={i} n={n}"), "±1", computed, s.is_some()));
        }
    }
    Ok(rows)
}

fn lempairpartcontraction(o: &Options) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for i in 1..=3 {
        for n in ranks(o, vec![3 * i], 3 * i) {
            rows.extend(pair_part_contraction(i, n)?);
        }
    }
    Ok(rows)
}

fn coalgebramap(o: &Options) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for d in 1..=3 {
        for pair in PairOfPartitions::all(d) {
            let min = min_rank_for_cycle(&pair.mu, &pair.nu).max(3);
            for n in ranks(o, vec![min], min) {
                let r = comultiply_check(&abelian_cycle_chain(&pair.mu, &pair.nu, n)?)?;
                let computed = format!("{} vs {} terms", r.lhs_terms, r.rhs_terms);
                rows.push(CheckRow::new(format!("alpha{pair} n={n}"), "equal", computed, r.equal));
            }
        }
    }
    Ok(rows)
}

fn kernel_rows(o: &Options, family: &str) -> Result<Vec<CheckRow>> {
    let report = kernel_generator_checks(o.n.unwrap_or(9))?;
    Ok(report
        .rows
        .iter()
        .filter(|r| r.family == family)
        .map(|r| {
            let computed = if r.exact.iter().all(|&e| e) {
                format!("({})", r.computed.join(", "))
            } else {
                format!("({}) not exact multiples", r.computed.join(", "))
            };
            CheckRow::new(format!("{} n={}", r.id, report.n), format!("({})", r.expected.join(", ")), computed, r.pass)
        })
        .collect())
}

fn ker_io(o: &Options) -> Result<Vec<CheckRow>> {
    kernel_rows(o, "kerIO")
}

fn imagecup(o: &Options) -> Result<Vec<CheckRow>> {
    kernel_rows(o, "imagecup")
}

fn abelian_commute(_: &Options) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for d in 1..=3 {
        for pair in PairOfPartitions::all(d) {
            let n = min_rank_for_cycle(&pair.mu, &pair.nu);
            let ok = free_auto_check_commute(&abelian_cycle_tuple(&pair.mu, &pair.nu, n)?, n)?;
            rows.push(CheckRow::new(format!("h{pair} n={n}"), true, ok, ok));
        }
    }
    let t: Vec<MagnusGen> = vec!["g(1,2)".parse()?, "g(2,1)".parse()?];
    let ok = free_auto_check_commute(&t, 2)?;
    rows.push(CheckRow::new("g(1,2), g(2,1) n=2", false, ok, !ok));
    Ok(rows)
}

fn summands(r: &repcalc::RepGL) -> String {
    format!("{} summands ({} distinct)", r.total_multiplicity(), r.distinct())
}

fn w3(_: &Options) -> Result<Vec<CheckRow>> {
    let w = albanese::w_table(3)?.total;
    let wo = albanese::wo_table(3)?.total;
    let rw = parse_rep(reference::W3)?;
    let rwo = parse_rep(reference::W3_O)?;
    Ok(vec![
        CheckRow::new("W_3 total", summands(&rw), summands(&w), w == rw),
        CheckRow::new("W_3^O total", summands(&rwo), summands(&wo), wo == rwo),
    ])
}

fn torelli_characters(o: &Options) -> Result<Vec<CheckRow>> {
    let r = albanese::gg_identity_checks(o.max_degree)?;
    let first = |f: Option<usize>| f.map_or("all degrees".to_string(), |d| format!("fails at degree {d}"));
    let trivial = |v: &[repcalc::Q]| v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",");
    Ok(vec![
        CheckRow::new("ch(A¹) = ch(A)(1 − h_1 t + t²)", "all degrees", first(r.with_h1_first_failure()), r.with_h1_first_failure().is_none()),
        CheckRow::new("ch(W) display = D Exp D⁻¹ ch(Y″)", "all degrees", first(r.krw_first_failure()), r.krw_first_failure().is_none()),
        CheckRow::new(
            "trivial multiplicities of S̃*(X″)",
            trivial(&r.expected_trivial),
            trivial(&r.trivial_multiplicities),
            r.trivial_first_failure().is_none(),
        ),
    ])
}
