//! One function per suite. Each walks its instance stream and feeds a [`Tally`].

use std::ops::ControlFlow;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::sources::{graphs, labeled_trees, sample_corona};
use super::{instance_dump, run_each, SuiteId, SuiteParams, Tally};
use crate::complex::{delta_d, ind_facets, PureComplex};
use crate::error::{Error, Result};
use crate::forbidden::{find_d_claw, find_d_paw, find_induced_cycle_geq};
use crate::graph::{Graph, IsoClasses};
use crate::labeling::Labeling;
use crate::predicates::{
    holds, is_closed_graph, is_under_closed_def, representation_mismatch, Predicate,
};
use crate::recognition::{
    build_clique_interval_representation, clique_representation_candidate, find_labeling,
    find_strong_interval_representation, for_each_valid_labeling, recognize_graph_class,
    GraphClass, SearchLimits, StrongMode,
};
use crate::sortability::{ind_sortable_under, is_sortable_set, SquarefreeMonomial};

pub(crate) fn run(id: SuiteId, p: &SuiteParams) -> Result<Tally> {
    match id {
        SuiteId::UnderClosedEquiv => under_closed_equiv(p),
        SuiteId::UnitEquiv123 => unit_equiv_123(p),
        SuiteId::StarTheorem => star_theorem(p),
        SuiteId::ClosedIsProper => closed_is_proper(p),
        SuiteId::StrongImpliesUc => strong_implies_uc(p),
        SuiteId::Monotone => monotone(p),
        SuiteId::SortableEquiv => sortable_equiv(p),
        SuiteId::IntervalTheoremA => interval_theorem_a(p),
        SuiteId::Forbidden => forbidden(p),
        SuiteId::UnitImpliesChordalComplex => unit_implies_chordal(p),
        SuiteId::Cycles => cycles(p),
        SuiteId::Forests => forests(p),
        SuiteId::Corona => corona_suite(p),
        SuiteId::SortableForbidden => sortable_forbidden(p),
    }
}

const LIMITS: SearchLimits = SearchLimits {
    max_labeling_n: 9,
    max_strong_n: 5,
};

fn uc_pred(p: &SuiteParams) -> Predicate {
    if p.mutation {
        Predicate::MutatedUnderClosed
    } else {
        Predicate::UnderClosed
    }
}

/// Values of `d` in range with `d + 1 <= n`.
fn ds(p: &SuiteParams, n: usize) -> impl Iterator<Item = usize> {
    (p.d_min..=p.d_max).filter(move |&d| d < n)
}

fn all_graphs(p: &SuiteParams, n_min: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in n_min..=p.n_max {
        out.extend(graphs(n, connected_only, p.labeled_up_to)?);
    }
    Ok(out)
}

/// Runs `f` on every graph, turning an error into a failure on that graph.
fn each_graph<F>(items: &[Graph], f: F) -> Tally
where
    F: Fn(&Graph, &mut Tally) -> Result<()> + Sync,
{
    run_each(items, |g, t| {
        if let Err(e) = f(g, t) {
            let check = match e {
                Error::TheoremViolation(_) => "theorem-violation",
                _ => "error",
            };
            t.error(check, || instance_dump(g, None, None), &e);
        }
    })
}

fn dump<'a>(g: &'a Graph, d: usize, l: Option<&Labeling>) -> impl FnOnce() -> String + 'a {
    let l = l.cloned();
    move || instance_dump(g, Some(d), l.as_ref())
}

fn found(c: &PureComplex, pred: Predicate) -> Result<bool> {
    Ok(find_labeling(c, pred, &LIMITS)?.found)
}

fn recognized(g: &Graph, d: usize, class: GraphClass) -> Result<bool> {
    Ok(recognize_graph_class(g, d, class, &LIMITS)?.found)
}

/// Whether the complex covers every vertex and its facets are walk-connected.
fn is_connected_complex(c: &PureComplex) -> Result<bool> {
    Ok(!c.facets().is_empty() && !c.has_uncovered_vertices() && c.is_connected_complex()?)
}

fn sortable_exists(g: &Graph, d: usize) -> Result<bool> {
    for l in Labeling::all(g.n()) {
        if ind_sortable_under(g, d, &l)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Facet reading: the facets of Ind_d(G) share one size and are sort-closed, for some labeling.
fn facet_sortable_exists(g: &Graph, d: usize) -> Result<bool> {
    let facets = ind_facets(g, d)?;
    let t = facets[0].len();
    if facets.iter().any(|f| f.len() != t) {
        return Ok(false);
    }
    for l in Labeling::all(g.n()) {
        let ms: Vec<SquarefreeMonomial> = facets
            .iter()
            .map(|&f| SquarefreeMonomial::new(l.apply(f)))
            .collect();
        if is_sortable_set(&ms, t)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Non-face reading: the minimal non-faces of Ind_d(G), i.e. the facets of Δ_d(G),
/// are sort-closed for some labeling.
fn nonface_sortable_exists(g: &Graph, d: usize) -> Result<bool> {
    if g.n() < d + 1 {
        return Ok(true);
    }
    let facets = delta_d(g, d)?.facets().to_vec();
    for l in Labeling::all(g.n()) {
        let ms: Vec<SquarefreeMonomial> = facets
            .iter()
            .map(|&f| SquarefreeMonomial::new(l.apply(f)))
            .collect();
        if is_sortable_set(&ms, d + 1)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn under_closed_equiv(p: &SuiteParams) -> Result<Tally> {
    let uc = uc_pred(p);
    let items = all_graphs(p, 2, true)?;
    Ok(each_graph(&items, |g, t| {
        for d in ds(p, g.n()) {
            let c = delta_d(g, d)?;
            for l in Labeling::all(g.n()) {
                let h = c.relabel(&l)?;
                t.instance();
                let def = is_under_closed_def(&h);
                let local = holds(uc, &h);
                t.check(
                    def == local,
                    "def-vs-local",
                    dump(g, d, Some(&l)),
                    format_args!("local form = {def} (definition)"),
                    format_args!("local form = {local}"),
                );
            }
        }
        Ok(())
    }))
}

fn unit_equiv_123(p: &SuiteParams) -> Result<Tally> {
    let items = all_graphs(p, 2, false)?;
    Ok(each_graph(&items, |g, t| {
        for d in ds(p, g.n()) {
            let c = delta_d(g, d)?;
            for l in Labeling::all(g.n()) {
                let h = c.relabel(&l)?;
                t.instance();
                let unit = holds(Predicate::UnitInterval, &h);
                for (name, pred) in [
                    ("unit-vs-cond2", Predicate::Cond2),
                    ("unit-vs-cond3", Predicate::Cond3),
                ] {
                    let v = holds(pred, &h);
                    t.check(
                        v == unit,
                        name,
                        dump(g, d, Some(&l)),
                        format_args!("{pred} = {unit}"),
                        format_args!("{pred} = {v}"),
                    );
                }
            }
        }
        Ok(())
    }))
}

fn star_theorem(p: &SuiteParams) -> Result<Tally> {
    let items = all_graphs(p, 2, true)?;
    Ok(each_graph(&items, |g, t| {
        for d in ds(p, g.n()) {
            let c = delta_d(g, d)?;
            if !is_connected_complex(&c)? {
                t.count("complexes skipped as not connected", 1);
                continue;
            }
            t.instance();
            let unit = found(&c, Predicate::UnitInterval)?;
            let star = found(&c, Predicate::ConditionStar)?;
            t.check(
                unit == star,
                "exists-unit-vs-star",
                dump(g, d, None),
                format_args!("condition * labeling exists = {unit}"),
                format_args!("condition * labeling exists = {star}"),
            );
            if g.n() <= 5 {
                let mut star_only = 0;
                for_each_valid_labeling(&c, Predicate::ConditionStar, &LIMITS, |l| {
                    if !c.relabel(l).is_ok_and(|h| holds(Predicate::UnitInterval, &h)) {
                        star_only += 1;
                    }
                    ControlFlow::Continue(())
                })?;
                t.count(
                    "labelings with condition * but not unit interval (n <= 5, not asserted)",
                    star_only,
                );
            }
        }
        Ok(())
    }))
}

fn closed_is_proper(p: &SuiteParams) -> Result<Tally> {
    let items = all_graphs(p, 2, true)?;
    Ok(each_graph(&items, |g, t| {
        t.instance();
        let c = delta_d(g, 1)?;
        let mut closed = false;
        for l in Labeling::all(g.n()) {
            if is_closed_graph(&g.relabel(&l)?) {
                closed = true;
                break;
            }
        }
        for (name, pred) in [
            ("closed-vs-unit", Predicate::UnitInterval),
            ("closed-vs-star", Predicate::ConditionStar),
        ] {
            let v = found(&c, pred)?;
            t.check(
                v == closed,
                name,
                dump(g, 1, None),
                format_args!("{pred} labeling exists = {closed}"),
                format_args!("{pred} labeling exists = {v}"),
            );
        }
        Ok(())
    }))
}

fn strong_implies_uc(p: &SuiteParams) -> Result<Tally> {
    let uc = uc_pred(p);
    let p = SuiteParams {
        n_max: p.n_max.min(LIMITS.max_strong_n),
        ..p.clone()
    };
    let items = all_graphs(&p, 2, false)?;
    Ok(each_graph(&items, |g, t| {
        for d in ds(&p, g.n()) {
            let c = delta_d(g, d)?;
            for mode in [StrongMode::General, StrongMode::Proper, StrongMode::Unit] {
                let r = find_strong_interval_representation(&c, mode, &LIMITS)?;
                let Some(l) = r.labeling else { continue };
                t.instance();
                t.count(format!("{mode:?} representations found"), 1);
                let ok = holds(uc, &c.relabel(&l)?);
                t.check(
                    ok,
                    "strong-sorted-labeling-under-closed",
                    dump(g, d, Some(&l)),
                    "under-closed",
                    "not under-closed",
                );
            }
        }
        Ok(())
    }))
}

fn monotone(p: &SuiteParams) -> Result<Tally> {
    let uc = uc_pred(p);
    let items: Vec<Graph> = all_graphs(p, 3, false)?
        .into_iter()
        .filter(|g| !g.has_isolated_vertex())
        .collect();
    Ok(each_graph(&items, |g, t| {
        let n = g.n();
        for d in (p.d_min..=p.d_max).filter(|d| d + 2 <= n) {
            t.instance();
            let c = delta_d(g, d)?;
            let up = delta_d(g, d + 1)?;
            let mut bad = Vec::new();
            for_each_valid_labeling(&c, uc, &LIMITS, |l| {
                match up.relabel(l) {
                    Ok(h) if holds(uc, &h) => {}
                    _ => bad.push(l.clone()),
                }
                ControlFlow::Continue(())
            })?;
            t.check(
                bad.is_empty(),
                "under-closed-d-to-d+1",
                dump(g, d, bad.first()),
                "every under-closed labeling stays under-closed at d+1",
                format_args!("{} labelings fail at d+1", bad.len()),
            );

            let mut unit_bad = Vec::new();
            for_each_valid_labeling(&c, Predicate::UnitInterval, &LIMITS, |l| {
                match up.relabel(l) {
                    Ok(h) if holds(Predicate::UnitInterval, &h) => {}
                    _ => unit_bad.push(l.clone()),
                }
                ControlFlow::Continue(())
            })?;
            if d >= 2 {
                t.check(
                    unit_bad.is_empty(),
                    "unit-d-to-d+1",
                    dump(g, d, unit_bad.first()),
                    "every unit labeling stays unit at d+1",
                    format_args!("{} labelings fail at d+1", unit_bad.len()),
                );
            } else {
                t.count(
                    "d=1 unit labelings lost at d=2 (not asserted)",
                    unit_bad.len() as u64,
                );
            }

            if n <= LIMITS.max_strong_n {
                let r = find_strong_interval_representation(&c, StrongMode::General, &LIMITS)?;
                if let Some(rep) = r.representation {
                    let mismatch = representation_mismatch(&up, &rep)?;
                    t.check(
                        mismatch.is_none(),
                        "strong-d-to-d+1",
                        dump(g, d, None),
                        "representation also represents Δ_{d+1}",
                        format_args!(
                            "disagrees on {}",
                            mismatch.map(|s| s.to_line()).unwrap_or_default()
                        ),
                    );
                }
            }
        }
        Ok(())
    }))
}

fn sortable_equiv(p: &SuiteParams) -> Result<Tally> {
    let items = all_graphs(p, 1, false)?;
    Ok(each_graph(&items, |g, t| {
        for d in p.d_min..=p.d_max {
            t.instance();
            let sortable = sortable_exists(g, d)?;
            let unit = recognized(g, d, GraphClass::UnitInterval)?;
            let check = if d == 1 {
                "sortable-vs-unit-d1"
            } else {
                "sortable-vs-unit"
            };
            t.check(
                sortable == unit,
                check,
                dump(g, d, None),
                format_args!("sortable = {unit} (unit interval = {unit})"),
                format_args!("sortable = {sortable}"),
            );
            let facet = facet_sortable_exists(g, d)?;
            let key = if facet == unit {
                "facet reading agrees with unit interval"
            } else {
                "facet reading disagrees with unit interval"
            };
            t.count(format!("{key} (d = {d}, not asserted)"), 1);
            let nonface = nonface_sortable_exists(g, d)?;
            let key = if nonface == unit {
                "non-face reading agrees with unit interval"
            } else {
                "non-face reading disagrees with unit interval"
            };
            t.count(format!("{key} (d = {d}, not asserted)"), 1);
        }
        Ok(())
    }))
}

fn interval_theorem_a(p: &SuiteParams) -> Result<Tally> {
    let uc = uc_pred(p);
    let items = all_graphs(p, 2, false)?;
    Ok(each_graph(&items, |g, t| {
        t.instance();
        let n = g.n();
        let c = delta_d(g, 1)?;
        let uc_found = found(&c, uc)?;
        let mut clique = false;
        for l in Labeling::all(n) {
            if clique_representation_candidate(&g.relabel(&l)?).is_some() {
                clique = true;
                break;
            }
        }
        t.check(
            uc_found == clique,
            "under-closed-vs-clique",
            dump(g, 1, None),
            format_args!("clique construction succeeds for some labeling = {uc_found}"),
            format_args!("= {clique}"),
        );
        if n <= LIMITS.max_strong_n {
            let strong = find_strong_interval_representation(&c, StrongMode::General, &LIMITS)?;
            t.check(
                uc_found == strong.found,
                "under-closed-vs-strong",
                dump(g, 1, None),
                format_args!("strong representation exists = {uc_found}"),
                format_args!("= {}", strong.found),
            );
        }

        let mut labelings = Vec::new();
        for_each_valid_labeling(&c, uc, &LIMITS, |l| {
            labelings.push(l.clone());
            if n <= 5 {
                ControlFlow::Continue(())
            } else {
                ControlFlow::Break(())
            }
        })?;
        for l in &labelings {
            let h = g.relabel(l)?;
            match build_clique_interval_representation(&h) {
                Ok(r) => {
                    let ok = match &r.representation {
                        Some(rep) => representation_mismatch(&delta_d(&h, 1)?, rep)?.is_none(),
                        None => false,
                    };
                    t.check(
                        r.found && ok,
                        "clique-construction-validates",
                        dump(g, 1, Some(l)),
                        "edge iff intervals meet",
                        "representation rejected",
                    );
                }
                Err(Error::TheoremViolation(m)) => t.check(
                    false,
                    "theorem-violation",
                    dump(g, 1, Some(l)),
                    "construction succeeds",
                    m,
                ),
                Err(e) => t.error("clique-construction-validates", dump(g, 1, Some(l)), &e),
            }
        }
        Ok(())
    }))
}

fn forbidden(p: &SuiteParams) -> Result<Tally> {
    let items = all_graphs(p, 1, false)?;
    Ok(each_graph(&items, |g, t| {
        for d in p.d_min..=p.d_max {
            t.instance();
            let cycle = find_induced_cycle_geq(g, d + 3);
            let cycle_text = || cycle.as_ref().map(|w| w.vertices.to_line()).unwrap_or_default();
            let uc_found = recognized(g, d, GraphClass::UnderClosed)?;
            if uc_found {
                t.check(
                    cycle.is_none(),
                    "under-closed-no-long-cycle",
                    dump(g, d, None),
                    "no induced cycle of length >= d+3",
                    format_args!("induced cycle {}", cycle_text()),
                );
            }
            if g.n() <= LIMITS.max_strong_n && recognized(g, d, GraphClass::StrongInterval)? {
                t.check(
                    cycle.is_none(),
                    "strong-no-long-cycle",
                    dump(g, d, None),
                    "no induced cycle of length >= d+3",
                    format_args!("induced cycle {}", cycle_text()),
                );
            }
            if recognized(g, d, GraphClass::UnitInterval)? {
                t.count(format!("unit interval instances (d = {d})"), 1);
                t.check(
                    cycle.is_none(),
                    "unit-no-long-cycle",
                    dump(g, d, None),
                    "no induced cycle of length >= d+3",
                    format_args!("induced cycle {}", cycle_text()),
                );
                let claw = find_d_claw(g, d);
                t.check(
                    claw.is_none(),
                    "unit-no-claw",
                    dump(g, d, None),
                    "d-clawfree",
                    format_args!("{:?}", claw.map(|w| w.claw)),
                );
                let paw = find_d_paw(g, d);
                t.check(
                    paw.is_none(),
                    "unit-no-paw",
                    dump(g, d, None),
                    "d-pawfree",
                    format_args!(
                        "paw on {}",
                        paw.map(|w| w.vertices.to_line()).unwrap_or_default()
                    ),
                );
            }
        }
        Ok(())
    }))
}

fn unit_implies_chordal(p: &SuiteParams) -> Result<Tally> {
    let items = all_graphs(p, 2, false)?;
    Ok(each_graph(&items, |g, t| {
        for d in ds(p, g.n()) {
            let c = delta_d(g, d)?;
            let mut bad = Vec::new();
            let mut count = 0u64;
            for_each_valid_labeling(&c, Predicate::UnitInterval, &LIMITS, |l| {
                count += 1;
                match c.relabel(l) {
                    Ok(h) if holds(Predicate::ChordalComplex, &h) => {}
                    _ => bad.push(l.clone()),
                }
                ControlFlow::Continue(())
            })?;
            t.instance();
            t.count("unit labelings checked", count);
            t.check(
                bad.is_empty(),
                "unit-implies-chordal",
                dump(g, d, bad.first()),
                "every unit labeling is chordal",
                format_args!("{} unit labelings are not chordal", bad.len()),
            );
        }
        Ok(())
    }))
}

/// Labelings of `g` satisfying `pred` on every Δ_k for `k` in `ks`.
fn uniform_labeling_exists(g: &Graph, ks: &[usize], pred: Predicate) -> Result<bool> {
    let cs: Vec<PureComplex> = ks.iter().map(|&k| delta_d(g, k)).collect::<Result<_>>()?;
    for l in Labeling::all(g.n()) {
        let mut all = true;
        for c in &cs {
            if !holds(pred, &c.relabel(&l)?) {
                all = false;
                break;
            }
        }
        if all {
            return Ok(true);
        }
    }
    Ok(false)
}

fn cycles(p: &SuiteParams) -> Result<Tally> {
    let uc = uc_pred(p);
    let items: Vec<Graph> = (3..=p.n_max).map(Graph::cycle).collect();
    Ok(each_graph(&items, |g, t| {
        let n = g.n();
        for d in ds(p, n) {
            t.instance();
            let expected = d + 2 >= n;
            let unit = recognized(g, d, GraphClass::UnitInterval)?;
            let uc_found = found(&delta_d(g, d)?, uc)?;
            t.check(
                unit == expected,
                "unit-vs-d>=n-2",
                dump(g, d, None),
                format_args!("unit interval = {expected}"),
                format_args!("unit interval = {unit}"),
            );
            t.check(
                uc_found == expected,
                "under-closed-vs-d>=n-2",
                dump(g, d, None),
                format_args!("under-closed = {expected}"),
                format_args!("under-closed = {uc_found}"),
            );
            if d == 1 {
                // Statements for every k >= 1 with one labeling.
                let ks: Vec<usize> = (1..n).collect();
                let unit_all = uniform_labeling_exists(g, &ks, Predicate::UnitInterval)?;
                let uc_all = uniform_labeling_exists(g, &ks, uc)?;
                t.check(
                    unit_all == uc_all,
                    "d1-all-k-unit-vs-under-closed",
                    dump(g, 1, None),
                    format_args!("under-closed for all k = {unit_all}"),
                    format_args!("under-closed for all k = {uc_all}"),
                );
                if unit_all != unit {
                    t.count("d=1 cross pairs differing (not asserted)", 1);
                }
                t.count("d=1 cross pairs compared (not asserted)", 1);
            }
        }
        Ok(())
    }))
}

fn components_ok(g: &Graph, d: usize) -> bool {
    g.components().into_iter().all(|comp| {
        let (h, _) = g.compress(comp).expect("component");
        h.is_path() || h.n() <= d + 1
    })
}

fn forests(p: &SuiteParams) -> Result<Tally> {
    let mut trees = Vec::new();
    for n in 1..=p.n_max {
        trees.extend(labeled_trees(n)?);
    }
    let mut tally = each_graph(&trees, |g, t| {
        for d in p.d_min..=p.d_max {
            t.instance();
            let expected = g.is_path() || g.n() <= d + 1;
            let unit = recognized(g, d, GraphClass::UnitInterval)?;
            t.check(
                unit == expected,
                "tree-unit",
                dump(g, d, None),
                format_args!("unit interval = {expected}"),
                format_args!("unit interval = {unit}"),
            );
        }
        Ok(())
    });
    let mut forests = Vec::new();
    for n in 2..=p.n_max.min(crate::graph::MAX_CLASSES_N) {
        forests.extend(
            IsoClasses::new(n, false)?
                .into_graphs()
                .into_iter()
                .filter(|g| g.is_forest() && !g.is_connected()),
        );
    }
    tally.merge(each_graph(&forests, |g, t| {
        for d in p.d_min..=p.d_max {
            t.instance();
            let expected = components_ok(g, d);
            let unit = recognized(g, d, GraphClass::UnitInterval)?;
            t.check(
                unit == expected,
                "forest-unit",
                dump(g, d, None),
                format_args!("unit interval = {expected}"),
                format_args!("unit interval = {unit}"),
            );
        }
        Ok(())
    }));
    Ok(tally)
}

fn corona_suite(p: &SuiteParams) -> Result<Tally> {
    let seed = p.seed.ok_or_else(|| Error::invalid("suite CORONA needs a seed"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dvals: Vec<usize> = (p.d_min.max(2)..=p.d_max)
        .filter(|d| d + 2 <= p.n_max)
        .collect();
    if dvals.is_empty() {
        return Err(Error::invalid("no d in range admits a corona instance"));
    }
    let mut samples = Vec::with_capacity(p.samples);
    for i in 0..p.samples {
        let d = dvals[i % dvals.len()];
        samples.push((d, sample_corona(&mut rng, d, p.n_max)?));
    }
    Ok(run_each(&samples, |(d, s), t| {
        t.instance();
        match recognized(&s.graph, *d, GraphClass::UnitInterval) {
            Ok(unit) => t.check(
                !unit,
                "corona-not-unit",
                || {
                    format!(
                        "{}# d {d}\n# hub {}\n# independent {}\n",
                        s.graph.to_text(),
                        s.hub.to_line(),
                        s.independent.to_line()
                    )
                },
                "not unit interval",
                "unit interval",
            ),
            Err(e) => t.error("error", || instance_dump(&s.graph, Some(*d), None), &e),
        }
    }))
}

fn sortable_forbidden(p: &SuiteParams) -> Result<Tally> {
    let items = all_graphs(p, 1, false)?;
    Ok(each_graph(&items, |g, t| {
        for d in p.d_min.max(2)..=p.d_max {
            if !sortable_exists(g, d)? {
                continue;
            }
            t.instance();
            for k in [d, d + 1] {
                let claw = find_d_claw(g, k);
                t.check(
                    claw.is_none(),
                    "sortable-no-claw",
                    dump(g, d, None),
                    format_args!("{k}-clawfree"),
                    format_args!("{:?}", claw.map(|w| w.claw)),
                );
                let paw = find_d_paw(g, k);
                t.check(
                    paw.is_none(),
                    "sortable-no-paw",
                    dump(g, d, None),
                    format_args!("{k}-pawfree"),
                    format_args!(
                        "paw on {}",
                        paw.map(|w| w.vertices.to_line()).unwrap_or_default()
                    ),
                );
            }
            let cycle = find_induced_cycle_geq(g, d + 3);
            t.check(
                cycle.is_none(),
                "sortable-no-long-cycle",
                dump(g, d, None),
                "no induced cycle of length >= d+3",
                format_args!(
                    "induced cycle {}",
                    cycle.map(|w| w.vertices.to_line()).unwrap_or_default()
                ),
            );
        }
        Ok(())
    }))
}
