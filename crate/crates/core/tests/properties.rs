use minimax_sm::generators::gen_random;
use minimax_sm::io::{instance_to_json, matching_to_json, parse_instance, parse_matching};
use minimax_sm::oracles::{min_delete, min_super_bp, OracleBudget};
use minimax_sm::solvers::{gale_shapley_completion, super_stable_solve};
use minimax_sm::{
    build_witness_completion, complete, count_super_blocking_pairs, is_super_stable, is_weakly_stable,
    obvious_blocking_pairs, super_blocking_pairs, Delta, Instance, Matching, TieBreak,
};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = Instance> {
    (2usize..=6, 0u64..=4, any::<u64>()).prop_map(|(n, b, seed)| gen_random(n, Delta::new(b, 8), seed))
}

fn instance_and_matching() -> impl Strategy<Value = (Instance, Matching)> {
    instance().prop_flat_map(|inst| {
        let n = inst.n();
        (Just(inst), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(inst, perm)| (inst, Matching::from_assignment(&perm).unwrap()))
    })
}

proptest! {
    #[test]
    fn witness_is_tight((inst, m) in instance_and_matching()) {
        let c = build_witness_completion(&inst, &m);
        prop_assert!(c.refines(&inst));
        prop_assert_eq!(c.blocking_pairs(&m), super_blocking_pairs(&inst, &m));
    }

    #[test]
    fn any_completion_blocks_only_with_super_blocking_pairs((inst, m) in instance_and_matching(), seed: u64) {
        let sbp = super_blocking_pairs(&inst, &m);
        let bp = complete(&inst, TieBreak::Seeded(seed)).blocking_pairs(&m);
        prop_assert!(bp.iter().all(|p| sbp.contains(p)));
        prop_assert!(obvious_blocking_pairs(&inst, &m).iter().all(|p| bp.contains(p)));
    }

    #[test]
    fn gale_shapley_is_weakly_stable(inst in instance(), seed: u64) {
        let r = gale_shapley_completion(&inst, TieBreak::Seeded(seed));
        prop_assert!(r.matching.is_perfect());
        prop_assert!(is_weakly_stable(&inst, &r.matching));
        prop_assert_eq!(r.super_bp_count(), count_super_blocking_pairs(&inst, &r.matching));
    }

    #[test]
    fn super_stable_solver_agrees_with_oracle(inst in instance().prop_filter("small", |i| i.n() <= 4)) {
        let (opt, _) = min_super_bp(&inst, &OracleBudget::default()).unwrap();
        match super_stable_solve(&inst) {
            Some(m) => { prop_assert!(is_super_stable(&inst, &m)); prop_assert_eq!(opt, 0); }
            None => prop_assert!(opt > 0),
        }
    }

    #[test]
    fn deleting_blocking_men_bounds_min_delete(inst in instance().prop_filter("small", |i| i.n() <= 4)) {
        let budget = OracleBudget::default();
        let (opt, _) = min_super_bp(&inst, &budget).unwrap();
        prop_assert!(2 * opt >= min_delete(&inst, &budget).unwrap().len());
    }

    #[test]
    fn json_round_trip((inst, m) in instance_and_matching()) {
        prop_assert_eq!(parse_instance(&instance_to_json(&inst)).unwrap(), inst.clone());
        prop_assert_eq!(parse_matching(&matching_to_json(&m), inst.n()).unwrap(), m);
    }

    #[test]
    fn delta_stays_within_budget(n in 2usize..=7, b in 0u64..=8, seed: u64) {
        let inst = gen_random(n, Delta::new(b, 32), seed);
        prop_assert!(inst.delta() <= Delta::new(b, 32));
    }
}
