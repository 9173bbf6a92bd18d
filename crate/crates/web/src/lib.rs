//! Browser bindings. Every function takes and returns JSON strings in the
//! same 1-based formats the CLI uses.

use minimax_sm::generators::{gen_fig1, gen_fig3, gen_fig4, gen_random, gen_random_top_truncated, Fig1Params, Fig3Params};
use minimax_sm::io::{self, pairs_doc};
use minimax_sm::solvers::{algorithm1, exact_min_super_bp, gale_shapley_completion, ExactOutcome};
use minimax_sm::{
    build_witness_completion, is_super_stable, is_weakly_stable, obvious_blocking_pairs, super_blocking_pairs, Delta,
    TieBreak,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest instance the page will build. The grid gets unwieldy beyond it.
pub const MAX_N: usize = 40;

fn parse_delta(s: &str) -> Result<Delta, String> {
    s.trim().parse::<Delta>().map_err(|_| format!("delta must look like p/q, got {s:?}"))
}

pub fn generate_json(family: &str, n: usize, delta: &str, seed: u64) -> Result<String, String> {
    if n == 0 || n > MAX_N {
        return Err(format!("n must be between 1 and {MAX_N}"));
    }
    let delta = parse_delta(delta)?;
    let inst = match family {
        "fig1" => gen_fig1(&Fig1Params::new(n, delta).map_err(|e| e.to_string())?),
        "fig4" => gen_fig4(&Fig1Params::new(n, delta).map_err(|e| e.to_string())?).0,
        "fig3" => gen_fig3(&Fig3Params::new(n, delta).map_err(|e| e.to_string())?),
        "random" | "random-tt" if delta > Delta::from_integer(1) => return Err("budget must lie in [0, 1]".into()),
        "random" => gen_random(n, delta, seed),
        "random-tt" => gen_random_top_truncated(n, delta, seed),
        other => return Err(format!("unknown family {other:?}")),
    };
    Ok(io::instance_to_json(&inst))
}

pub fn solve_json(instance: &str, algo: &str, seed: u64) -> Result<String, String> {
    let inst = io::parse_instance(instance).map_err(|e| e.to_string())?;
    let report = match algo {
        "gs" => gale_shapley_completion(&inst, TieBreak::Seeded(seed)),
        "exact" => match exact_min_super_bp(&inst, 2) {
            ExactOutcome::Found(r) => r,
            ExactOutcome::Exhausted { k_max } => return Err(format!("nothing found after demoting {k_max} pairs")),
        },
        "algo1" => algorithm1(&inst).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown algorithm {other:?}")),
    };
    Ok(io::report_to_json(&report))
}

pub fn evaluate_json(instance: &str, matching: &str) -> Result<String, String> {
    let inst = io::parse_instance(instance).map_err(|e| e.to_string())?;
    let m = io::parse_matching(matching, inst.n()).map_err(|e| e.to_string())?;
    let witness = build_witness_completion(&inst, &m);
    Ok(json!({
        "delta": inst.delta().to_string(),
        "perfect": m.is_perfect(),
        "weakly_stable": is_weakly_stable(&inst, &m),
        "super_stable": is_super_stable(&inst, &m),
        "obvious_blocking_pairs": pairs_doc(&obvious_blocking_pairs(&inst, &m)),
        "super_blocking_pairs": pairs_doc(&super_blocking_pairs(&inst, &m)),
        "witness_blocking_pairs": witness.blocking_pairs(&m).len(),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn generate(family: &str, n: usize, delta: &str, seed: u32) -> Result<String, JsValue> {
    generate_json(family, n, delta, seed.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn solve(instance: &str, algo: &str, seed: u32) -> Result<String, JsValue> {
    solve_json(instance, algo, seed.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn evaluate(instance: &str, matching: &str) -> Result<String, JsValue> {
    evaluate_json(instance, matching).map_err(|e| JsValue::from_str(&e))
}
