use minimax_sm::generators::{
    fig1, fig3, fig4, gen_fig1, gen_fig3, gen_fig4, gen_vc_reduction, Fig1Params, Fig3Params, GenError, UndirectedGraph,
    VCParams,
};
use minimax_sm::solvers::super_stable_solve;
use minimax_sm::{count_super_blocking_pairs, Delta};

#[test]
fn top_tie_family_self_check() {
    for n in [8, 16, 36] {
        let p = Fig1Params::new(n, Delta::new(1, 4)).unwrap();
        let inst = gen_fig1(&p);
        let c = fig1::self_check(&p, &inst);
        assert!(c.passed(), "n={n}: {:?}", c.checks);
    }
}

#[test]
fn block_rotation_matching_self_check() {
    let p = Fig1Params::new(16, Delta::new(1, 4)).unwrap();
    let (inst, rotated) = gen_fig4(&p);
    let c = fig4::self_check(&p, &inst, &rotated);
    assert!(c.passed(), "{:?}", c.checks);
    assert_eq!(count_super_blocking_pairs(&inst, &rotated), 6);
    // This instance does admit a super-stable matching.
    assert!(super_stable_solve(&inst).is_some());
}

#[test]
fn bottom_tie_family_self_check() {
    let p = Fig3Params::new(16, Delta::new(1, 256)).unwrap();
    assert_eq!(p.y, 8);
    let inst = gen_fig3(&p);
    assert!(fig3::self_check(&p, &inst).passed());
    assert!(inst.is_one_sided_top_truncated());
}

#[test]
fn bad_parameters_are_rejected() {
    assert!(matches!(Fig1Params::new(7, Delta::new(1, 4)), Err(GenError::Parameter(_))));
    assert!(Fig1Params::new(16, Delta::new(1, 2)).is_err());
    assert!(Fig3Params::new(16, Delta::new(1, 4)).is_err());
    assert!(VCParams::new(UndirectedGraph::complete(3), 4, 4, 2).is_err());
    assert!(VCParams::new(UndirectedGraph::complete(3), 2, 4, 3).is_err());
    assert!(UndirectedGraph::parse("3 1\n1 4\n").is_err());
}

#[test]
fn gadget_size_and_delta() {
    let (inst, cert) = gen_vc_reduction(&VCParams::new(UndirectedGraph::complete(3), 2, 4, 2).unwrap());
    assert_eq!(inst.n(), 51);
    assert_eq!(inst.delta(), Delta::new(92, 21675));
    let checks = cert.check(&inst);
    let failing: Vec<_> = checks.checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
    // Only the blue block matchings miss their single intra-block pair.
    assert_eq!(failing.len(), 3);
    assert!(failing.iter().all(|n| n.contains("blue")));
    assert!(!cert.has_bad_pair(&inst, &minimax_sm::generators::build_yes_matching(&cert, &[0, 1]).unwrap()));
}
