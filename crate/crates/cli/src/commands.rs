use repcalc::albanese::{self, TorelliFamily};
use repcalc::glrep::{power as glpower, wedge_u as glwedge_u, PowerKind};
use repcalc::{Bipartition, Q, RepGL, Result};
use serde_json::{json, Value};

use crate::Report;

fn rep_report(kind: &str, r: &RepGL, header: String) -> Result<Report> {
    r.check_nonnegative("decompose")?;
    let mut json = r.to_json();
    json["command"] = Value::from(kind);
    json["distinct"] = Value::from(r.distinct());
    json["total_multiplicity"] = Value::from(r.total_multiplicity());
    let text = format!(
        "{header}\n{} irreducible summands ({} distinct)\n{}",
        r.total_multiplicity(),
        r.distinct(),
        r.to_table()
    );
    Ok(Report { json, text, code: 0 })
}

pub fn tensor(a: &str, b: &str) -> Result<Report> {
    let x: Bipartition = a.parse()?;
    let y: Bipartition = b.parse()?;
    let r = RepGL::irrep(x.clone()).koike_tensor(&RepGL::irrep(y.clone()));
    rep_report("decompose tensor", &r, format!("V[{x}] ⊗ V[{y}]"))
}

pub fn wedge_u(degree: usize) -> Result<Report> {
    rep_report("decompose wedge-u", &glwedge_u(degree), format!("∧^{degree} U"))
}

pub fn wedge_uo(degree: usize) -> Result<Report> {
    rep_report("decompose wedge-uo", &albanese::wedge_uo(degree)?, format!("∧^{degree} U^O"))
}

pub fn power(rep: &str, degree: usize, alternating: bool) -> Result<Report> {
    let r = repcalc::glrep::parse_rep(rep)?;
    let kind = if alternating { PowerKind::Alternating } else { PowerKind::Symmetric };
    let name = if alternating { "∧" } else { "S" };
    rep_report("decompose power", &glpower(&r, degree, kind)?, format!("{name}^{degree} ({r})"))
}

pub fn w_table(degree: usize, io: bool) -> Result<Report> {
    let t = if io { albanese::wo_table(degree)? } else { albanese::w_table(degree)? };
    let mut text = format!("W_{degree}{}\n", if io { "^O" } else { "" });
    let mut entries = Vec::new();
    for (pair, w) in &t.entries {
        text.push_str(&format!("W{pair}: {w}\n"));
        entries.push(json!({"pair": pair.to_string(), "rep": w.to_json()}));
    }
    text.push_str(&format!(
        "total: {} irreducible summands ({} distinct)\n{}",
        t.total.total_multiplicity(),
        t.total.distinct(),
        t.total.to_table()
    ));
    let json = json!({
        "command": "w-table",
        "degree": degree,
        "variant": if io { "io" } else { "ia" },
        "entries": entries,
        "total": t.total.to_json(),
        "distinct": t.total.distinct(),
    });
    Ok(Report { json, text, code: 0 })
}

pub fn dim_poly(degree: usize, n: Option<usize>) -> Report {
    let p = albanese::traceless_dim_polynomial(degree);
    let value = n.map(|n| p.eval(&Q::from_integer(n.into())).to_string());
    let mut text = format!("{p}\ndegree {}\n", p.degree().map_or("-∞".to_string(), |d| d.to_string()));
    if let (Some(n), Some(v)) = (n, &value) {
        text.push_str(&format!("value at n={n}: {v}\n"));
    }
    let json = json!({"command": "dim-poly", "degree": degree, "polynomial": p.to_string(), "poly_degree": p.degree(), "n": n, "value": value});
    Report { json, text, code: 0 }
}

pub fn torelli_char(family: &str, max_degree: usize, algebra: bool) -> Result<Report> {
    let f: TorelliFamily = family.parse()?;
    let s = if algebra { albanese::traceless_algebra_char(f, max_degree)? } else { albanese::torelli_char(f, max_degree) };
    let mut json = s.to_json();
    json["command"] = Value::from("torelli-char");
    json["family"] = Value::from(f.to_string());
    json["algebra"] = Value::from(algebra);
    Ok(Report { json, text: format!("{s}\n"), code: 0 })
}
