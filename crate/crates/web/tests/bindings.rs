use minimax_sm_web::{evaluate_json, generate_json, solve_json};
use serde_json::Value;

#[test]
fn generate_solve_evaluate() {
    let inst = generate_json("fig1", 16, "1/4", 0).unwrap();
    let report: Value = serde_json::from_str(&solve_json(&inst, "exact", 0).unwrap()).unwrap();
    assert_eq!(report["super_blocking_pairs"].as_array().unwrap().len(), 1);
    let matching = report["matching"].to_string();
    let eval: Value = serde_json::from_str(&evaluate_json(&inst, &matching).unwrap()).unwrap();
    assert_eq!(eval["super_blocking_pairs"], report["super_blocking_pairs"]);
    assert_eq!(eval["witness_blocking_pairs"], 1);
}

#[test]
fn errors_are_messages() {
    assert!(generate_json("fig1", 8, "1/8", 0).is_err());
    assert!(generate_json("nope", 4, "0", 0).is_err());
    assert!(generate_json("random", 4, "one", 0).is_err());
    let fig1 = generate_json("fig1", 16, "1/4", 0).unwrap();
    assert!(solve_json(&fig1, "algo1", 0).unwrap_err().contains("top-truncated"));
    assert!(evaluate_json(&fig1, r#"{"pairs":[[1,1],[2,1]]}"#).is_err());
}

#[test]
fn random_families_are_seeded() {
    assert_eq!(generate_json("random", 5, "1/4", 7).unwrap(), generate_json("random", 5, "1/4", 7).unwrap());
    let tt = generate_json("random-tt", 5, "1/4", 7).unwrap();
    assert!(solve_json(&tt, "algo1", 0).is_ok());
}
