//! End-to-end acceptance checks at the full desk-scale bounds. Each test
//! prints one PASS/FAIL line (visible with `--nocapture`) and asserts the
//! underlying check. The bounds here are the contract; the per-module unit
//! tests cover the same ground at smaller sizes.

use std::sync::OnceLock;

use deltak::annihilated::BasisCache;
use deltak::delta0::{c_table, closed_c, verify_s0};
use deltak::freeness::certify_free;
use deltak::suites;

fn cache() -> &'static BasisCache {
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    CACHE.get_or_init(BasisCache::in_memory)
}

fn report(line: &str, outcome: Result<(), String>) {
    match &outcome {
        Ok(()) => println!("{line}: PASS"),
        Err(detail) => println!("{line}: FAIL ({detail})"),
    }
    assert!(outcome.is_ok(), "{line}: {}", outcome.unwrap_err());
}

#[test]
fn criterion_1_action_oracle() {
    report(
        "1. generator action agrees with the transposed polynomial action (m<=32, k<=16)",
        suites::check_action_oracle(32, 16),
    );
}

#[test]
fn criterion_2_kernel_equals_image() {
    report(
        "2. ker Sq1 = im Sq1 as canonical subspaces (s<=4, d<=20)",
        suites::check_ker_eq_im(4, 20, cache()).unwrap(),
    );
}

#[test]
fn criterion_3_recurrence_matches_kernels() {
    let c = c_table(4, 20).unwrap();
    let mut outcome = Ok(());
    'outer: for s in 0..=4u32 {
        for d in 0..=20u32 {
            let dim = cache().delta_dim(0, s, d).unwrap() as u64;
            if c.get(s, d) != dim {
                outcome = Err(format!(
                    "recurrence {} != kernel dimension {dim} at ({s},{d})",
                    c.get(s, d)
                ));
                break 'outer;
            }
        }
    }
    report(
        "3. recurrence dimensions equal kernel dimensions (s<=4, d<=20)",
        outcome,
    );
}

#[test]
fn criterion_4_closed_formulas() {
    let c = c_table(3, 40).unwrap();
    let mut outcome = Ok(());
    'outer: for s in 1..=3u32 {
        for d in 0..=40u32 {
            let closed = closed_c(s, d).unwrap();
            if closed != c.get(s, d) {
                outcome = Err(format!(
                    "closed formula {closed} != recurrence {} at ({s},{d})",
                    c.get(s, d)
                ));
                break 'outer;
            }
        }
    }
    report("4. closed formulas match the recurrence (s in 1..3, d<=40)", outcome);
}

#[test]
fn criterion_5_reduction_formula() {
    report(
        "5. c(s,d) + c(s,d+1) = C(d,s-1) (s<=6, d<=30)",
        suites::check_reduction_formula(6, 30).unwrap(),
    );
}

#[test]
fn criterion_6_sigma_generators() {
    let r = verify_s0(4, 17, cache()).unwrap();
    let outcome = match r.first_failure() {
        None => Ok(()),
        Some(cell) => Err(format!(
            "({},{}): {} generators, eta = {}, in_kernel = {}, independent = {}, span {} vs kernel {}",
            cell.s,
            cell.d,
            cell.generator_count,
            cell.expected_count,
            cell.in_kernel,
            cell.independent,
            cell.span_dim,
            cell.kernel_dim
        )),
    };
    report(
        "6. sigma generators: annihilated, independent with count eta, spanning (s<=4, d<=17)",
        outcome,
    );
}

#[test]
fn criterion_7_freeness_certificates() {
    for (k, s_max, d_max) in [(0u32, 4u32, 17u32), (1, 3, 14), (2, 3, 12)] {
        let r = certify_free(k, s_max, d_max, cache()).unwrap();
        let outcome = match r.first_failure() {
            None => Ok(()),
            Some(cell) => Err(format!(
                "({},{}): f = {} but dim = {}",
                cell.s, cell.d, cell.f, cell.dim
            )),
        };
        report(
            &format!("7. freeness certificate for level {k} (s<={s_max}, d<={d_max})"),
            outcome,
        );
    }
}

#[test]
fn criterion_8_stabilization() {
    report(
        "8. fully annihilated space equals level k once d < 2^(k+2) (k<=3, s<=3, d<=20)",
        suites::check_stabilization(3, 3, 20, cache()).unwrap(),
    );
}

#[test]
fn criterion_9_property_suites() {
    report(
        "9a. instability: (x)Sqk = 0 for 2k > d (d<=16)",
        suites::check_instability(16),
    );
    report(
        "9b. Sq1 is a differential (d<=16)",
        suites::check_sq1_differential(16),
    );
    report(
        "9c. ((x)Sq1)Sq2 = (x)Sq3 and ((x)Sq1)Sq1 = 0 (d<=12)",
        suites::check_adem_spot(12),
    );
    report(
        "9d. transduction reconstruction and multiplicativity (1000 random pairs)",
        suites::check_transduction(1000, 0x5eed),
    );
    report(
        "9e. resolved relations re-multiply (100 constructed relations)",
        suites::check_relations(100, 0x5eed),
    );
}
