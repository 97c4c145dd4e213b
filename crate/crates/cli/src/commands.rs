use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use interval_complex::complex::write_face_list;
use interval_complex::forbidden::{find_d_claw, find_d_paw, find_induced_cycle_geq, PatternWitness};
use interval_complex::harness::{run_suite, SuiteId, SuiteReport};
use interval_complex::predicates::{first_violation, validate_interval_representation, Predicate};
use interval_complex::recognition::{recognize_graph_class, GraphClass, SearchLimits};
use interval_complex::sortability::ind_sortable_under;
use interval_complex::{
    delta_d, ind_faces, ind_facets, Error, Graph, IntervalSystem, Labeling, PureComplex, Result,
};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::{BuildArgs, BuildTarget, CheckArgs, ForbiddenArgs, Kind, Outcome, RecognizeArgs};
use crate::{SortableArgs, VerifyArgs};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read(path)?)
}

fn need_d(g: &Graph, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidInput("d must be positive".into()));
    }
    if d + 1 > g.n() {
        return Err(Error::InvalidInput(format!(
            "d + 1 = {} exceeds the {} vertices of the graph",
            d + 1,
            g.n()
        )));
    }
    Ok(())
}

fn parse_labeling(s: Option<&str>, n: usize) -> Result<Labeling> {
    let l = match s {
        Some(s) => s.parse::<Labeling>()?,
        None => Labeling::identity(n),
    };
    if l.len() != n {
        return Err(Error::InvalidInput(format!(
            "labeling has {} entries for {n} vertices",
            l.len()
        )));
    }
    Ok(l)
}

fn faces_json(faces: &[interval_complex::VertexSet]) -> Value {
    json!(faces.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
}

pub fn build(a: &BuildArgs) -> Result<Outcome> {
    let g = read_graph(&a.graph)?;
    need_d(&g, a.d)?;
    let (text, faces) = match a.target {
        BuildTarget::Delta => {
            let c = delta_d(&g, a.d)?;
            (c.to_text(), c.facets().to_vec())
        }
        BuildTarget::IndFacets => {
            let f = ind_facets(&g, a.d)?;
            (write_face_list(g.n(), &f), f)
        }
        BuildTarget::IndFaces => {
            let t = a
                .t
                .ok_or_else(|| Error::InvalidInput("ind-faces needs --t".into()))?;
            let f = ind_faces(&g, a.d, t)?;
            (f.to_text(g.n()), f.faces)
        }
    };
    let target = match a.target {
        BuildTarget::Delta => "delta",
        BuildTarget::IndFacets => "ind-facets",
        BuildTarget::IndFaces => "ind-faces",
    };
    let json = json!({"command": "build", "target": target, "n": g.n(), "d": a.d, "t": a.t, "faces": faces_json(&faces)});
    let text = match &a.output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| {
                Error::InvalidInput(format!("cannot write {}: {e}", path.display()))
            })?;
            format!("wrote {} faces to {}\n", faces.len(), path.display())
        }
        None => text,
    };
    Ok(Outcome { code: 0, text, json })
}

/// Fields of a `recognize` JSON report used by `check --certificate`.
#[derive(Deserialize)]
struct Certificate {
    labeling: Option<Labeling>,
    representation: Option<IntervalSystem>,
}

pub fn check(a: &CheckArgs) -> Result<Outcome> {
    let c = PureComplex::parse(&read(&a.complex)?)?;
    let pred: Predicate = a.predicate.parse()?;
    let (labeling, rep) = match &a.certificate {
        Some(path) => {
            let cert: Certificate = serde_json::from_str(&read(path)?)
                .map_err(|e| Error::InvalidInput(format!("bad certificate: {e}")))?;
            let l = cert
                .labeling
                .ok_or_else(|| Error::InvalidInput("certificate carries no labeling".into()))?;
            (l, cert.representation)
        }
        None => (parse_labeling(a.labeling.as_deref(), c.n())?, None),
    };
    if labeling.len() != c.n() {
        return Err(Error::InvalidInput(format!(
            "labeling has {} entries for {} vertices",
            labeling.len(),
            c.n()
        )));
    }
    let h = c.relabel(&labeling)?;
    let violation = first_violation(pred, &h);
    let rep_ok = match &rep {
        Some(r) => Some(validate_interval_representation(&c, r)?),
        None => None,
    };
    let holds = violation.is_none() && rep_ok != Some(false);

    let mut text = format!("{pred} under labeling {labeling}: {holds}\n");
    if let Some(v) = &violation {
        let _ = writeln!(text, "violation (in labels): {v}");
    }
    if let (Some(r), Some(ok)) = (&rep, rep_ok) {
        let flags = r.flags();
        let _ = writeln!(
            text,
            "representation valid: {ok} (unit: {}, proper: {})",
            flags.unit, flags.proper
        );
    }
    let json = json!({
        "command": "check",
        "predicate": pred,
        "labeling": labeling,
        "holds": holds,
        "violation": violation,
        "representation_valid": rep_ok,
    });
    Ok(Outcome {
        code: if holds { 0 } else { 1 },
        text,
        json,
    })
}

pub fn recognize(a: &RecognizeArgs) -> Result<Outcome> {
    let g = read_graph(&a.graph)?;
    need_d(&g, a.d)?;
    let class: GraphClass = a.class.parse()?;
    let limits = SearchLimits {
        max_labeling_n: a.max_n,
        max_strong_n: a.max_strong_n,
    };
    let r = recognize_graph_class(&g, a.d, class, &limits)?;
    let mut text = format!(
        "{class} at d = {}: {}\n",
        a.d,
        if r.found { "found" } else { "not found" }
    );
    if let Some(l) = &r.labeling {
        let _ = writeln!(text, "labeling: {l}");
        let order: Vec<String> = l.order().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(text, "vertex order: {}", order.join(" "));
    }
    if let Some(rep) = &r.representation {
        text.push_str("intervals:\n");
        for (v, i) in (1..).zip(rep.intervals()) {
            let _ = writeln!(text, "  {v}: {i}");
        }
    }
    let _ = writeln!(text, "nodes explored: {}", r.nodes_explored);
    if !r.search_exhaustive {
        text.push_str("search was not exhaustive\n");
    }
    let mut json = serde_json::to_value(&r).expect("serializable");
    if let Value::Object(m) = &mut json {
        m.insert("command".into(), json!("recognize"));
        m.insert("class".into(), json!(class));
        m.insert("d".into(), json!(a.d));
    }
    Ok(Outcome {
        code: if r.found { 0 } else { 1 },
        text,
        json,
    })
}

fn witness_text(w: &PatternWitness) -> String {
    match &w.claw {
        Some(c) => format!(
            "claw centered at {}: parts {} | {} | {}",
            c.center, c.parts[0], c.parts[1], c.parts[2]
        ),
        None => format!("{:?} on {}", w.kind, w.vertices).to_lowercase(),
    }
}

pub fn forbidden(a: &ForbiddenArgs) -> Result<Outcome> {
    let g = read_graph(&a.graph)?;
    if a.d == 0 {
        return Err(Error::InvalidInput("d must be positive".into()));
    }
    let kinds = if a.kinds.is_empty() {
        vec![Kind::Cycle, Kind::Claw, Kind::Paw]
    } else {
        a.kinds.clone()
    };
    let mut text = String::new();
    let mut found = Vec::new();
    for k in kinds {
        let (name, w) = match k {
            Kind::Cycle => ("cycle", find_induced_cycle_geq(&g, a.d + 3)),
            Kind::Claw => ("claw", find_d_claw(&g, a.d)),
            Kind::Paw => ("paw", find_d_paw(&g, a.d)),
        };
        match &w {
            Some(w) => {
                let _ = writeln!(text, "{name}: {}", witness_text(w));
            }
            None => {
                let _ = writeln!(text, "{name}: none");
            }
        }
        found.push(json!({"kind": name, "witness": w}));
    }
    let present = found.iter().any(|f| !f["witness"].is_null());
    Ok(Outcome {
        code: if present { 1 } else { 0 },
        text,
        json: json!({"command": "forbidden", "d": a.d, "present": present, "patterns": found}),
    })
}

pub fn sortable(a: &SortableArgs) -> Result<Outcome> {
    let g = read_graph(&a.graph)?;
    if a.d == 0 {
        return Err(Error::InvalidInput("d must be positive".into()));
    }
    let (verdict, labeling) = if a.search {
        let mut hit = None;
        for l in Labeling::all(g.n()) {
            if ind_sortable_under(&g, a.d, &l)? {
                hit = Some(l);
                break;
            }
        }
        (hit.is_some(), hit)
    } else {
        let l = parse_labeling(a.labeling.as_deref(), g.n())?;
        (ind_sortable_under(&g, a.d, &l)?, Some(l))
    };
    let text = match &labeling {
        Some(l) => format!("Ind_{}(G) sortable under labeling {l}: {verdict}\n", a.d),
        None => format!("Ind_{}(G) sortable under some labeling: false\n", a.d),
    };
    Ok(Outcome {
        code: if verdict { 0 } else { 1 },
        text,
        json: json!({"command": "sortable", "d": a.d, "sortable": verdict, "labeling": labeling, "searched": a.search}),
    })
}

fn report_text(r: &SuiteReport, show: usize) -> String {
    let mut s = format!(
        "{}: {} ({} instances, {} failures, {} ms)\n",
        r.suite,
        if r.passed { "PASS" } else { "FAIL" },
        r.instances,
        r.failure_count,
        r.elapsed_ms
    );
    for (name, c) in &r.checks {
        let _ = writeln!(s, "  check {name}: {} of {} failed", c.failed, c.evaluated);
    }
    for n in &r.notes {
        let _ = writeln!(s, "  note {n}");
    }
    for f in r.failures.iter().take(show) {
        let _ = writeln!(
            s,
            "  failure [{}] expected {}, got {}",
            f.check, f.expected, f.actual
        );
        for line in f.instance.lines() {
            let _ = writeln!(s, "    {line}");
        }
    }
    s
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let ids: Vec<SuiteId> = if a.suite.eq_ignore_ascii_case("all") {
        SuiteId::ALL.to_vec()
    } else {
        vec![a.suite.parse()?]
    };
    let mut reports = Vec::new();
    for id in ids {
        let mut p = id.default_params();
        p.n_max = a.n_max.unwrap_or(p.n_max);
        p.d_min = a.d_min.unwrap_or(p.d_min);
        p.d_max = a.d_max.unwrap_or(p.d_max);
        p.labeled_up_to = a.labeled_up_to.unwrap_or(p.labeled_up_to);
        p.samples = a.samples.unwrap_or(p.samples);
        p.seed = a.seed;
        p.mutation = a.mutate;
        reports.push(run_suite(id, &p)?);
    }
    let passed = reports.iter().all(|r| r.passed);
    let text: String = reports.iter().map(|r| report_text(r, a.show)).collect();
    Ok(Outcome {
        code: if passed { 0 } else { 1 },
        text,
        json: json!({"command": "verify", "passed": passed, "reports": reports}),
    })
}
