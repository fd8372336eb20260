use bek_core::bei::{
    binomial_edge_ideal, compare_powers, initial_ideal_of_graph, lemma_certificate, minimal_primes,
    ntf_probe_graph, symbolic_power, Route,
};
use bek_core::graph::{find_closed_labeling, is_closed_under_labeling};
use bek_core::monomial::NtfReport;
use bek_core::{Config, Graph, MonomialOrder, Result};
use serde_json::{json, Value};

use crate::report::Report;

fn header(r: &mut Report, g: &Graph) {
    r.line(format!("graph: {g}"));
}

fn render_list<T: ToString>(items: &[T]) -> Vec<Value> {
    items.iter().map(|p| Value::String(p.to_string())).collect()
}

pub fn ideal(g: &Graph) -> Result<Report> {
    let j = binomial_edge_ideal(g)?;
    let gens: Vec<String> = j.gens().iter().map(|p| p.to_string()).collect();
    let mut r = Report::new("ideal", g);
    header(&mut r, g);
    r.line(format!("J_G: {} generators", gens.len()));
    for s in &gens {
        r.line(format!("  {s}"));
    }
    r.result = json!({ "generators": gens });
    Ok(r)
}

pub fn primes(g: &Graph, cfg: &Config) -> Result<Report> {
    let primes = minimal_primes(g, cfg)?;
    let mut r = Report::new("primes", g);
    header(&mut r, g);
    r.line(format!("minimal primes: {}", primes.len()));
    let mut list = Vec::new();
    for p in &primes {
        let gens: Vec<String> = p.ideal.gens().iter().map(|q| q.to_string()).collect();
        let classes: Vec<Value> = p.cutset.components.iter().map(|c| json!(c)).collect();
        r.line(format!(
            "S={} c={}: ({})",
            p.cutset.render(),
            p.cutset.c(),
            gens.join(", ")
        ));
        list.push(json!({
            "set": p.cutset.set,
            "components": classes,
            "generators": gens,
        }));
    }
    r.result = json!({ "count": primes.len(), "primes": list });
    Ok(r)
}

pub fn compare(g: &Graph, k: usize, cfg: &Config) -> Result<Report> {
    let cmp = compare_powers(g, k, cfg)?;
    let mut r = Report::new("compare", g).param("k", k);
    header(&mut r, g);
    r.line(format!("k: {k}"));
    r.line(format!("verdict: {}", cmp.verdict.label()));
    let route = match cmp.route {
        Route::Direct => "direct",
        Route::PerComponent => "per-component",
    };
    r.line(format!("route: {route}"));
    let sizes = match (&cmp.ordinary_gb, &cmp.symbolic_gb) {
        (Some(o), Some(s)) => {
            r.line(format!("reduced GB sizes: ordinary {} symbolic {}", o.len(), s.len()));
            json!({ "ordinary": o.len(), "symbolic": s.len() })
        }
        _ => Value::Null,
    };
    if let Some(w) = &cmp.witness {
        r.line(format!("witness: {w}"));
        r.witness = Some(w.to_string());
    }
    r.result = json!({
        "verdict": cmp.verdict.label(),
        "route": route,
        "gb_sizes": sizes,
    });
    Ok(r)
}

pub fn symbolic(g: &Graph, k: usize, cfg: &Config) -> Result<Report> {
    let sp = symbolic_power(g, k, cfg)?;
    let gb = sp.reduced_gb(MonomialOrder::Lex, cfg)?;
    let mut r = Report::new("symbolic", g).param("k", k);
    header(&mut r, g);
    r.line(format!("J_G^({k}) reduced GB: {} elements", gb.len()));
    for p in gb.basis() {
        r.line(format!("  {p}"));
    }
    r.result = json!({ "basis": render_list(gb.basis()) });
    Ok(r)
}

fn probe_json(report: &NtfReport, ctx: &bek_core::RingContext) -> Value {
    json!({
        "kmax": report.kmax,
        "checked": report.checked,
        "violation_k": report.violation.as_ref().map(|v| v.k),
        "summary": report.summary(ctx),
    })
}

pub fn initial(g: &Graph, probe: Option<usize>, cfg: &Config) -> Result<Report> {
    let mut r = Report::new("initial", g);
    header(&mut r, g);
    let (ini, report) = match probe {
        Some(kmax) => {
            let (ini, rep) = ntf_probe_graph(g, kmax, cfg)?;
            (ini, Some(rep))
        }
        None => (initial_ideal_of_graph(g, cfg)?, None),
    };
    let gens: Vec<String> = ini.gens().iter().map(|m| m.render(ini.ctx())).collect();
    r.line(format!("ini(J_G): {} generators", gens.len()));
    r.line(gens.join(", "));
    let mut result = json!({ "generators": gens });
    if let Some(rep) = report {
        r = r.param("kmax", rep.kmax);
        r.line(format!("ntf probe (kmax={}): {}", rep.kmax, rep.summary(ini.ctx())));
        if let Some(v) = &rep.violation {
            r.witness = Some(v.witness.render(ini.ctx()));
        }
        result["probe"] = probe_json(&rep, ini.ctx());
    }
    r.result = result;
    Ok(r)
}

pub fn ntf(g: &Graph, kmax: usize, cfg: &Config) -> Result<Report> {
    let (ini, rep) = ntf_probe_graph(g, kmax, cfg)?;
    let mut r = Report::new("ntf-probe", g).param("kmax", kmax);
    header(&mut r, g);
    r.line(format!("ini(J_G): {}", ini.render()));
    r.line(format!("ntf probe (kmax={kmax}): {}", rep.summary(ini.ctx())));
    if let Some(v) = &rep.violation {
        r.witness = Some(v.witness.render(ini.ctx()));
    }
    r.result = probe_json(&rep, ini.ctx());
    Ok(r)
}

pub fn closed(g: &Graph, cfg: &Config) -> Result<Report> {
    let natural = is_closed_under_labeling(g);
    let found = find_closed_labeling(g, cfg)?;
    let mut r = Report::new("closed", g);
    header(&mut r, g);
    r.line(format!("closed under given labeling: {}", if natural { "yes" } else { "no" }));
    match &found {
        Some(perm) => r.line(format!(
            "closed labeling: {}",
            perm.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
        )),
        None => r.line("not closed"),
    }
    r.result = json!({
        "closed": found.is_some(),
        "natural_labeling_closed": natural,
        "labeling": found,
    });
    Ok(r)
}

pub fn certify(g: &Graph, t: usize, cross_check: bool, cfg: &Config) -> Result<Report> {
    let cert = lemma_certificate(g, t, cross_check, cfg)?;
    let mut r = Report::new("certify", g).param("t", t).param("cross_check", cross_check);
    header(&mut r, g);
    let yes_no = |b: bool| if b { "true" } else { "false" };
    let commuting = cert.ini_power_commutes.iter().filter(|(_, ok)| *ok).count();
    r.line(format!("t: {t}"));
    r.line(format!("(i)    ini(J_G) = intersection of ini(P_S): {}", yes_no(cert.ini_intersection)));
    r.line(format!("(ii.a) P_S^(t) = P_S^t: {}", cert.prime_powers));
    r.line(format!(
        "(ii.b) ini(P_S^t) = ini(P_S)^t: {} ({commuting}/{} cut sets)",
        yes_no(cert.all_primes_commute()),
        cert.ini_power_commutes.len()
    ));
    match &cert.ini_witness {
        Some(w) => r.line(format!(
            "(ii.c) ini(J_G)^(t) = ini(J_G)^t: false (witness {w})"
        )),
        None => r.line(format!("(ii.c) ini(J_G)^(t) = ini(J_G)^t: {}", yes_no(cert.ini_symbolic_equal))),
    }
    r.line(if cert.conclusion {
        format!("conclusion: applies, J_G^({t}) = J_G^{t}")
    } else {
        "conclusion: does not apply".to_string()
    });
    if let Some(v) = cert.cross_check {
        r.line(format!("cross-check: {}", v.label()));
    }
    r.witness = cert.ini_witness.clone();
    let per_set: Vec<Value> = cert
        .ini_power_commutes
        .iter()
        .map(|(s, ok)| json!({ "set": s, "commutes": ok }))
        .collect();
    r.flags = Some(
        [
            ("ini_intersection".to_string(), json!(cert.ini_intersection)),
            ("ini_power_commutes".to_string(), json!(cert.all_primes_commute())),
            ("ini_symbolic_equal".to_string(), json!(cert.ini_symbolic_equal)),
            ("prime_powers".to_string(), json!(cert.prime_powers)),
        ]
        .into_iter()
        .collect(),
    );
    r.result = json!({
        "conclusion": cert.conclusion,
        "per_cut_set": per_set,
        "cross_check": cert.cross_check.map(|v| v.label()),
    });
    Ok(r)
}
