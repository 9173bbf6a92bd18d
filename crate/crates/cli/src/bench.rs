//! Experiment suites. Each row scores one algorithm on one instance.

use std::time::Instant;

use minimax_sm::generators::{
    build_yes_matching, fig3, gen_fig1, gen_fig3, gen_fig4, gen_random, gen_random_top_truncated, gen_vc_reduction,
    Fig1Params, Fig3Params, UndirectedGraph, VCParams,
};
use minimax_sm::oracles::{min_super_bp, OracleBudget};
use minimax_sm::solvers::{algorithm1, exact_min_super_bp, gale_shapley_completion};
use minimax_sm::{Delta, Instance, Matching, SolveReport, TieBreak};
use serde::Serialize;

use crate::{BenchArgs, CliError, Suite};

#[derive(Debug, Serialize)]
pub struct ExperimentRow {
    pub instance_id: String,
    pub family: String,
    pub n: usize,
    pub delta: String,
    pub algorithm: String,
    pub super_bp_count: Option<usize>,
    pub obvious_bp_count: Option<usize>,
    pub oracle_optimum: Option<usize>,
    pub ratio: Option<String>,
    pub runtime_ms: Option<String>,
}

struct Case {
    id: String,
    family: &'static str,
    inst: Instance,
    oracle: Option<usize>,
}

enum Runner<'a> {
    Gs(TieBreak),
    Exact(usize),
    Algo1,
    Given(&'static str, &'a Matching),
}

impl Case {
    fn row(&self, runner: Runner<'_>, timing: bool) -> ExperimentRow {
        let start = Instant::now();
        let (algorithm, report): (String, Option<SolveReport>) = match runner {
            Runner::Gs(p) => ("gs".into(), Some(gale_shapley_completion(&self.inst, p))),
            Runner::Exact(k) => (format!("exact-k{k}"), exact_min_super_bp(&self.inst, k).report().cloned()),
            Runner::Algo1 => ("algo1".into(), algorithm1(&self.inst).ok()),
            Runner::Given(name, m) => (name.into(), Some(SolveReport::evaluate(&self.inst, m.clone(), name, None))),
        };
        let elapsed = start.elapsed();
        let sbp = report.as_ref().map(SolveReport::super_bp_count);
        ExperimentRow {
            instance_id: self.id.clone(),
            family: self.family.into(),
            n: self.inst.n(),
            delta: self.inst.delta().to_string(),
            algorithm,
            super_bp_count: sbp,
            obvious_bp_count: report.as_ref().map(|r| r.obvious_blocking_pairs.len()),
            oracle_optimum: self.oracle,
            ratio: match (sbp, self.oracle) {
                (Some(s), Some(o)) => Some(format!("{:.4}", s as f64 / o.max(1) as f64)),
                _ => None,
            },
            runtime_ms: timing.then(|| format!("{:.3}", elapsed.as_secs_f64() * 1000.0)),
        }
    }
}

fn family_suite(seed: u64, timing: bool) -> Vec<ExperimentRow> {
    let mut rows = Vec::new();
    let quarter = Delta::new(1, 4);
    for n in [8, 16] {
        let p = Fig1Params::new(n, quarter).expect("valid parameters");
        let case = Case { id: format!("fig1-n{n}"), family: "fig1", inst: gen_fig1(&p), oracle: None };
        rows.push(case.row(Runner::Gs(TieBreak::Seeded(seed)), timing));
        rows.push(case.row(Runner::Exact(2), timing));
    }
    let p = Fig1Params::new(16, quarter).expect("valid parameters");
    let (inst, rotated) = gen_fig4(&p);
    let case = Case { id: "fig4-n16".into(), family: "fig4", inst, oracle: None };
    rows.push(case.row(Runner::Gs(TieBreak::Seeded(seed)), timing));
    rows.push(case.row(Runner::Algo1, timing));
    rows.push(case.row(Runner::Given("rotated", &rotated), timing));

    let p = Fig3Params::new(16, Delta::new(1, 256)).expect("valid parameters");
    let opt = fig3::optimal_matching(&p);
    let case = Case { id: "fig3-n16".into(), family: "fig3", inst: gen_fig3(&p), oracle: None };
    rows.push(case.row(Runner::Gs(TieBreak::Seeded(seed)), timing));
    rows.push(case.row(Runner::Algo1, timing));
    rows.push(case.row(Runner::Given("constructed", &opt), timing));

    let (inst, cert) = gen_vc_reduction(&VCParams::new(UndirectedGraph::complete(3), 2, 4, 2).expect("valid parameters"));
    let yes = build_yes_matching(&cert, &[0, 1]).expect("{1, 2} covers the triangle");
    let case = Case { id: "vc-k3".into(), family: "vc", inst, oracle: None };
    rows.push(case.row(Runner::Gs(TieBreak::Seeded(seed)), timing));
    rows.push(case.row(Runner::Given("cover", &yes), timing));
    rows
}

fn random_suite(seed: u64, count: usize, timing: bool) -> Vec<ExperimentRow> {
    const BUDGETS: [(u64, u64); 4] = [(1, 12), (1, 6), (1, 4), (1, 2)];
    let budget = OracleBudget::default();
    let mut rows = Vec::new();
    for i in 0..count {
        let n = 2 + i % 3;
        let (p, q) = BUDGETS[i / 3 % 4];
        let s = seed.wrapping_mul(1_000_003).wrapping_add(i as u64);
        let top = i % 2 == 1;
        let inst = if top { gen_random_top_truncated(n, Delta::new(p, q), s) } else { gen_random(n, Delta::new(p, q), s) };
        let oracle = min_super_bp(&inst, &budget).ok().map(|(o, _)| o);
        let case = Case { id: format!("random-{i}"), family: if top { "random-tt" } else { "random" }, inst, oracle };
        rows.push(case.row(Runner::Gs(TieBreak::Seeded(s)), timing));
        rows.push(case.row(Runner::Exact(n * n), timing));
        if top {
            rows.push(case.row(Runner::Algo1, timing));
        }
    }
    rows
}

pub fn cmd_bench(args: &BenchArgs) -> Result<(), CliError> {
    let rows = match args.suite {
        Suite::Paper => family_suite(args.seed, args.timing),
        Suite::Random => random_suite(args.seed, args.count, args.timing),
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &rows {
        w.serialize(r).map_err(|e| CliError::Input(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
    crate::write_out(args.out.as_deref(), &String::from_utf8(bytes).expect("utf-8"))
}
