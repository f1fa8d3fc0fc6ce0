use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::{guarded, table, DataTable, SuiteResult, Verifier};
use crate::arith::prime_divisors;
use crate::cdim::{cdim, check_dkr_named, check_finext_named};
use crate::corpus::{make_alternating, CorpusEntry, KhukhroEntry};
use crate::error::Result;
use crate::layer::{components, generalized_fitting, indaut_report, Projection};
use crate::permcore::{GroupHandle, SubgroupRef};
use crate::report::{order_value, CheckReport};
use crate::simplerec::{composition_factors, lambda_with, nonabelian_factors};
use crate::subgrp::{
    center, centralizer, derived_subgroup, fitting, intersection, minimal_normal_subgroups, p_core, p_soluble_radical,
    socle, soluble_radical,
};

type SubgroupMaker = fn(&GroupHandle) -> Result<SubgroupRef>;

fn cdim_terms_report(check: &str, name: &str, g: &GroupHandle, bound: i64) -> CheckReport {
    guarded(check, name, || {
        let r = cdim(g)?;
        let terms = r.value_terms as i64;
        Ok(CheckReport::new(check, name)
            .input("order", order_value(g.order()))
            .computed("cdim_terms", terms)
            .computed("cdim_steps", r.value_steps as i64)
            .computed("bound", bound)
            .verdict(terms <= bound)
            .margin(bound, terms))
    })
}

impl Verifier {
    fn group(&self, name: &str) -> Option<&GroupHandle> {
        self.entry(name).map(|e| &e.group)
    }

    fn missing(check: &str, name: &str) -> CheckReport {
        CheckReport::new(check, name).skipped("group not in corpus")
    }

    pub fn suite_cdim_bounds(&self) -> SuiteResult {
        let mut jobs: Vec<(&str, String, Option<GroupHandle>, i64)> = Vec::new();
        for (n, q) in [(2i64, 2), (2, 3), (3, 2)] {
            let name = format!("GL({n},{q})");
            jobs.push(("cdim_gl", name.clone(), self.group(&name).cloned(), n * n + 1));
        }
        for n in 3..=7i64 {
            let name = format!("A{n}");
            let g =
                self.group(&name).cloned().or_else(|| make_alternating(n as usize).ok().map(|g| g.recapped(self.caps)));
            jobs.push(("cdim_alt", name, g, n * n + 1));
        }
        for q in [4, 5, 7, 8, 9, 11, 13] {
            let name = format!("PSL(2,{q})");
            jobs.push(("cdim_psl2", name.clone(), self.group(&name).cloned(), 10));
        }
        use rayon::prelude::*;
        let reports = jobs
            .par_iter()
            .map(|(check, name, g, bound)| match g {
                Some(g) => cdim_terms_report(check, name, g, *bound),
                None => Self::missing(check, name),
            })
            .collect();
        SuiteResult::new("cdim-bounds", reports, Vec::new())
    }

    pub fn suite_structure(&self) -> SuiteResult {
        let reports = self.per_entry(|e| {
            vec![
                guarded("socle_structure", &e.name, || self.socle_structure(e)),
                guarded("fstar_self_centralizing", &e.name, || fstar_report(&e.group, &e.name)),
            ]
        });
        SuiteResult::new("structure", reports, Vec::new())
    }

    fn socle_structure(&self, e: &CorpusEntry) -> Result<CheckReport> {
        let g = &e.group;
        let r = soluble_radical(g)?;
        let report = CheckReport::new("socle_structure", &e.name)
            .input("order", order_value(g.order()))
            .computed("radical_order", order_value(r.order()));
        if r.is_whole() {
            return Ok(report.skipped("trivial quotient"));
        }
        let proj = Projection::new(g, &r)?;
        let gbar = proj.target();
        let h = socle(gbar)?;
        let c = centralizer(gbar, h.generators())?;
        let mut ok = c.is_trivial();
        let mut minimal = Vec::new();
        for m in minimal_normal_subgroups(gbar)? {
            let factors = nonabelian_factors(m.group(), &self.table)?;
            let all = composition_factors(m.group())?.len();
            let kinds: BTreeSet<String> = factors.iter().map(|f| f.kind.to_string()).collect();
            let product: u128 = factors.iter().map(|f| f.order).product();
            let direct_power = !factors.is_empty() && factors.len() == all && kinds.len() == 1 && product == m.order();
            ok &= direct_power;
            minimal.push(json!({
                "order": order_value(m.order()),
                "factors": kinds.into_iter().collect::<Vec<_>>(),
                "multiplicity": factors.len(),
            }));
        }
        let fstar = generalized_fitting(gbar)?;
        let cf = centralizer(gbar, fstar.generators())?;
        ok &= cf.is_subgroup_of(&fstar);
        let lambda_socle = lambda_with(h.group(), &self.table)?;
        let abelian_top = derived_subgroup(gbar).is_subgroup_of(&h);
        Ok(report
            .computed("quotient_order", order_value(gbar.order()))
            .computed("socle_order", order_value(h.order()))
            .computed("socle_centralizer_order", order_value(c.order()))
            .computed("minimal_normal", Value::Array(minimal))
            .computed("fstar_quotient_order", order_value(fstar.order()))
            .computed("fstar_quotient_centralizer_order", order_value(cf.order()))
            .computed("lambda_socle", lambda_socle)
            .computed("cdim_steps", cdim(g)?.value_steps as i64)
            .computed("quotient_by_socle_order", order_value(gbar.order() / h.order()))
            .computed("quotient_by_socle_abelian", abelian_top)
            .verdict(ok))
    }

    pub fn suite_radical_relations(&self) -> SuiteResult {
        let reports = self.per_entry(|e| {
            let g = &e.group;
            let mut out = vec![
                guarded("p_soluble_intersection", &e.name, || p_soluble_report(g, &e.name)),
                guarded("factor_count", &e.name, || crate::simplerec::check_factor_count_with(g, &self.table, &e.name)),
            ];
            match components(g).and_then(|set| Ok((set, soluble_radical(g)?))) {
                Ok((set, _)) if set.components.is_empty() => {
                    out.push(CheckReport::new("indaut", &e.name).skipped("no components"))
                }
                Ok((set, r)) => {
                    for q in &set.components {
                        out.push(guarded("indaut", &e.name, || indaut_report(g, q, &r, &e.name)));
                    }
                }
                Err(err) => out.push(guarded("indaut", &e.name, || Err(err))),
            }
            out
        });
        SuiteResult::new("radical-relations", reports, Vec::new())
    }

    pub fn suite_khukhro(&self) -> SuiteResult {
        use rayon::prelude::*;
        let reports =
            self.khukhro.par_iter().map(|k| guarded("khukhro_series", &k.name, || khukhro_report(k))).collect();
        SuiteResult::new("khukhro", reports, Vec::new())
    }

    pub fn suite_finext(&self) -> SuiteResult {
        let declared: Vec<(&str, SubgroupMaker)> = vec![
            ("S4", |g| p_core(g, 2)),
            ("S4", |g| Ok(derived_subgroup(g))),
            ("S5", |g| Ok(derived_subgroup(g))),
            ("SL(2,5)", center),
            ("A5xC6", center),
        ];
        let mut reports = Vec::new();
        for (name, make) in declared {
            let report = match self.group(name) {
                Some(g) => guarded("finext", name, || check_finext_named(g, &make(g)?, name)),
                None => Self::missing("finext", name),
            };
            reports.push(report);
        }
        reports.extend(self.per_entry(|e| {
            let g = &e.group;
            let mut out = vec![
                guarded("finext", &e.name, || check_finext_named(g, &g.trivial_subgroup(), &e.name)),
                guarded("finext", &e.name, || check_finext_named(g, &g.as_subgroup(), &e.name)),
            ];
            for h in dkr_subgroups(g) {
                out.push(guarded("dkr", &e.name, || check_dkr_named(g, &h, &e.name)));
            }
            out
        }));
        SuiteResult::new("finext", reports, Vec::new())
    }

    pub fn suite_theorem2_data(&self) -> SuiteResult {
        let rows = self.per_entry(|e| vec![guarded("cdim_quotient_pair", &e.name, || self.theorem2_row(e))]);
        let tables = theorem2_tables(&rows);
        SuiteResult::new("theorem2-data", rows, tables)
    }

    fn theorem2_row(&self, e: &CorpusEntry) -> Result<CheckReport> {
        let g = &e.group;
        let r = soluble_radical(g)?;
        let proj = Projection::new(g, &r)?;
        let gbar = proj.target();
        let k = cdim(g)?.value_steps as i64;
        let kbar = cdim(gbar)?.value_steps as i64;
        let lambda = lambda_with(g, &self.table)? as i64;
        let layer = components(g)?.layer;
        let lambda_layer = lambda_with(layer.group(), &self.table)? as i64;
        let lambda_socle = if gbar.is_trivial() { 0 } else { lambda_with(socle(gbar)?.group(), &self.table)? as i64 };
        let report = CheckReport::new("cdim_quotient_pair", &e.name)
            .input("order", order_value(g.order()))
            .computed("radical_order", order_value(r.order()))
            .computed("cdim_steps", k)
            .computed("quotient_cdim_steps", kbar)
            .computed("lambda", lambda)
            .computed("lambda_layer", lambda_layer)
            .computed("lambda_socle", lambda_socle);
        // with R = 1 the quotient is G itself
        Ok(if r.is_trivial() { report.verdict(k == kbar) } else { report.verdict(true) })
    }
}

fn fstar_report(g: &GroupHandle, name: &str) -> Result<CheckReport> {
    let fstar = generalized_fitting(g)?;
    let c = centralizer(g, fstar.generators())?;
    let zf = center(fitting(g)?.group())?.reparent(g)?;
    let contained = c.is_subgroup_of(&fstar);
    let equal = c.order() == zf.order() && zf.is_subgroup_of(&c);
    Ok(CheckReport::new("fstar_self_centralizing", name)
        .input("order", order_value(g.order()))
        .computed("fstar_order", order_value(fstar.order()))
        .computed("centralizer_order", order_value(c.order()))
        .computed("fitting_center_order", order_value(zf.order()))
        .computed("contained", contained)
        .computed("equals_fitting_center", equal)
        .verdict(contained && equal))
}

fn p_soluble_report(g: &GroupHandle, name: &str) -> Result<CheckReport> {
    let r = soluble_radical(g)?;
    let mut meet = g.as_subgroup();
    let mut orders = serde_json::Map::new();
    for p in prime_divisors(g.order()) {
        let s = p_soluble_radical(g, p)?;
        orders.insert(p.to_string(), order_value(s.order()));
        meet = intersection(&meet, &s)?;
    }
    let equal = meet.order() == r.order() && r.is_subgroup_of(&meet);
    Ok(CheckReport::new("p_soluble_intersection", name)
        .input("order", order_value(g.order()))
        .computed("p_soluble_radical_orders", Value::Object(orders))
        .computed("intersection_order", order_value(meet.order()))
        .computed("radical_order", order_value(r.order()))
        .verdict(equal))
}

/// `G`, `G'` and the stabilizer of the first point, when of index at most 6.
fn dkr_subgroups(g: &GroupHandle) -> Vec<SubgroupRef> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for h in [g.as_subgroup(), derived_subgroup(g), g.point_stabilizer(0)] {
        let index = g.order() / h.order();
        if index <= 6 && seen.insert(h.order()) {
            out.push(h);
        }
    }
    out
}

/// Index-`p` subgroups of an elementary abelian `p`-group, each once.
fn maximal_subgroups(e: &SubgroupRef, p: u64) -> Result<Vec<SubgroupRef>> {
    if e.is_trivial() {
        return Ok(Vec::new());
    }
    let target = e.order() / p as u128;
    let elements = e.group().element_list()?.to_vec();
    let rank = crate::arith::big_omega(target);
    let mut found: Vec<SubgroupRef> = Vec::new();
    let mut tuple = vec![0usize; rank];
    loop {
        let gens = tuple.iter().map(|&i| elements[i].clone()).collect();
        let h = e.ambient().subgroup(gens)?;
        if h.order() == target && !found.iter().any(|f| f.order() == h.order() && h.is_subgroup_of(f)) {
            found.push(h);
        }
        let mut i = 0;
        while i < rank {
            tuple[i] += 1;
            if tuple[i] < elements.len() {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
        if i == rank {
            break;
        }
    }
    Ok(found)
}

/// Extends `path` down to the trivial subgroup with strictly growing
/// `C_Q(E_i)`.
fn khukhro_search(
    g: &GroupHandle,
    q: &SubgroupRef,
    p: u64,
    current: &SubgroupRef,
    path: &mut Vec<(u128, u128)>,
) -> Result<bool> {
    if current.is_trivial() {
        return Ok(true);
    }
    let last = path.last().expect("path starts at E").1;
    for m in maximal_subgroups(current, p)? {
        let cq = intersection(&centralizer(g, m.generators())?, q)?.order();
        if cq > last {
            path.push((m.order(), cq));
            if khukhro_search(g, q, p, &m, path)? {
                return Ok(true);
            }
            path.pop();
        }
    }
    Ok(false)
}

fn khukhro_report(k: &KhukhroEntry) -> Result<CheckReport> {
    let g = &k.group;
    let report = CheckReport::new("khukhro_series", &k.name)
        .input("order", order_value(g.order()))
        .input("q_order", order_value(k.q.order()))
        .input("e_order", order_value(k.e.order()))
        .input("p", k.p)
        .input("n", k.n);
    let kernel = intersection(&centralizer(g, k.q.generators())?, &k.e)?;
    if !kernel.is_trivial() {
        return Ok(report
            .computed("kernel_order", order_value(kernel.order()))
            .computed("error", "no faithful action")
            .verdict(false));
    }
    let c0 = intersection(&centralizer(g, k.e.generators())?, &k.q)?.order();
    let mut path = vec![(k.e.order(), c0)];
    let found = khukhro_search(g, &k.q, k.p, &k.e, &mut path)?;
    let series: Vec<Value> =
        path.iter().map(|&(e, c)| json!({"e_order": order_value(e), "centralizer_order": order_value(c)})).collect();
    Ok(report.computed("series", Value::Array(series)).computed("length", path.len() as i64 - 1).verdict(found))
}

fn ratio(a: i64, b: i64) -> Option<f64> {
    (b > 0).then(|| a as f64 / b as f64)
}

fn theorem2_tables(rows: &[CheckReport]) -> Vec<DataTable> {
    let get = |r: &CheckReport, key: &str| r.computed.get(key).cloned().unwrap_or(Value::Null);
    let usable: Vec<&CheckReport> = rows.iter().filter(|r| r.passed()).collect();
    let pairs =
        usable.iter().map(|r| vec![json!(r.group_name), get(r, "cdim_steps"), get(r, "quotient_cdim_steps")]).collect();
    let socle =
        usable.iter().map(|r| vec![json!(r.group_name), get(r, "lambda_socle"), get(r, "cdim_steps")]).collect();
    let mut maxima = Vec::new();
    for key in ["lambda", "lambda_layer"] {
        let best = usable
            .iter()
            .filter_map(|r| {
                let a = r.computed.get(key)?.as_i64()?;
                let b = r.computed.get("cdim_steps")?.as_i64()?;
                Some((ratio(a, b)?, r.group_name.clone()))
            })
            .fold(None::<(f64, String)>, |acc, (v, n)| match acc {
                Some((best, _)) if best >= v => acc,
                _ => Some((v, n)),
            });
        if let Some((v, n)) = best {
            maxima.push(vec![json!(format!("{key}_over_cdim")), json!(v), json!(n)]);
        }
    }
    vec![
        table("cdim_pairs", &["group", "cdim_steps", "quotient_cdim_steps"], pairs),
        table("lambda_socle_vs_cdim", &["group", "lambda_socle", "cdim_steps"], socle),
        table("lambda_ratio_maxima", &["quantity", "max_value", "attained_by"], maxima),
    ]
}
