//! Acceptance gate: every identity the crate claims, checked exactly at
//! the pinned sweep bounds, one pass/fail line per criterion. All equality
//! is canonical-form equality in Q(q) or a cyclotomic quotient; there are
//! no tolerances anywhere.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use flatsum::combinat::{enumerate_ssyt, for_each_diag_chain, chain_to_filling, LinearIndex};
use flatsum::connect::RegionVariant;
use flatsum::exactq::{
    cyclotomic_polynomial, euler_phi, q_binomial, q_binomial_by_factorials, QPoly, RatFun,
};
use flatsum::sums::{
    classical_direct, classical_value, evaluate, zeta_bz_star, zeta_qstar_flat, Evaluator,
    NumeratorReading, SumArg, SumKind,
};
use flatsum::verify::{builtin_shapes, compositions_up_to, run_suite, Suite, SweepConfig};

fn report(n: u32, title: &str, ok: bool) {
    println!("acceptance {n} ({title}): {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "acceptance criterion {n} failed");
}

fn rf(num: &[i64], den: &[i64]) -> RatFun {
    let to_poly = |c: &[i64]| {
        QPoly::from_coeffs(c.iter().map(|&x| flatsum::exactq::rat_int(x)).collect())
    };
    RatFun::new(to_poly(num), to_poly(den)).unwrap()
}

fn idx(parts: &[u32]) -> LinearIndex {
    LinearIndex::new(parts.to_vec()).unwrap()
}

#[test]
fn criterion_1_golden_values() {
    // Weak-chain harmonic sum of the row index (1,2) below 3:
    // q + q^2/(1+q)^2 + q^2/(1+q)^3.
    let two = rf(&[1, 1], &[1]);
    let golden = &(&RatFun::q() + &RatFun::q_pow(2).div(&two.pow(2)).unwrap())
        + &RatFun::q_pow(2).div(&two.pow(3)).unwrap();
    let star = zeta_bz_star(&idx(&[1, 2]), 3);

    // The five-term star-flat display:
    // q/[2]^2 + q^2/[2]^3 + q^2/[2]^2 + q^2/[2]^2 + q^2/[2].
    let five_terms = [
        RatFun::q().div(&two.pow(2)).unwrap(),
        RatFun::q_pow(2).div(&two.pow(3)).unwrap(),
        RatFun::q_pow(2).div(&two.pow(2)).unwrap(),
        RatFun::q_pow(2).div(&two.pow(2)).unwrap(),
        RatFun::q_pow(2).div(&two).unwrap(),
    ];
    let star_flat_display = five_terms
        .iter()
        .fold(RatFun::zero(), |acc, t| &acc + t);
    let star_flat = zeta_qstar_flat(&idx(&[1, 2]), 3);

    let ok = star == golden
        && star_flat == star_flat_display
        && (&star - &star_flat).is_zero();
    report(1, "golden star values below 3", ok);
}

#[test]
fn criterion_2_harmonic_equals_flat() {
    let strict = run_suite(Suite::MswQ, &Suite::MswQ.acceptance_config()).unwrap();
    let star = run_suite(Suite::StarQ, &Suite::StarQ.acceptance_config()).unwrap();
    let ok = strict.all_passed() && star.all_passed();
    report(2, "harmonic = flat, weight <= 6, upper <= 7", ok);
}

#[test]
fn criterion_3_classical_specializations() {
    let linear = run_suite(Suite::ClassicalMsw, &Suite::ClassicalMsw.acceptance_config()).unwrap();
    let schur = run_suite(Suite::ClassicalSchur, &Suite::ClassicalSchur.acceptance_config())
        .unwrap();
    let ok = linear.all_passed() && schur.all_passed();
    report(3, "q = 1 specializations against direct rational oracles", ok);
}

#[test]
fn criterion_4_duality_at_roots() {
    let duality = run_suite(Suite::Hessami, &Suite::Hessami.acceptance_config()).unwrap();
    let reflection = run_suite(Suite::Reflection, &Suite::Reflection.acceptance_config()).unwrap();
    let ok = duality.all_passed() && reflection.all_passed();
    report(4, "three-way duality and reflection at roots of unity", ok);
}

#[test]
fn criterion_5_schur_equality_with_resolved_reading() {
    let report_sq = run_suite(Suite::SchurQ, &Suite::SchurQ.acceptance_config()).unwrap();
    let ok = report_sq.all_passed()
        && report_sq.resolved_variants.schur_reading.is_some();
    println!(
        "  resolved schur reading: {:?}",
        report_sq.resolved_variants.schur_reading
    );
    report(5, "Schur harmonic = Schur flat on the battery", ok);
}

#[test]
fn criterion_6_lemma_suites() {
    let connector_linear =
        run_suite(Suite::ConnectorLinear, &Suite::ConnectorLinear.acceptance_config()).unwrap();
    let transport_linear =
        run_suite(Suite::TransportLinear, &Suite::TransportLinear.acceptance_config()).unwrap();
    let connector_schur =
        run_suite(Suite::ConnectorSchur, &Suite::ConnectorSchur.acceptance_config()).unwrap();
    let det_connector =
        run_suite(Suite::DetConnector, &Suite::DetConnector.acceptance_config()).unwrap();
    let transport_schur =
        run_suite(Suite::TransportSchur, &Suite::TransportSchur.acceptance_config()).unwrap();
    let ok = connector_linear.all_passed()
        && transport_linear.all_passed()
        && transport_linear.resolved_variants.linear_region.as_deref() == Some("derived")
        && connector_schur.all_passed()
        && det_connector.all_passed()
        && transport_schur.all_passed();
    println!(
        "  resolved linear region: {:?}",
        transport_linear.resolved_variants.linear_region
    );
    report(6, "connector and transport rule suites", ok);
}

#[test]
fn criterion_7_transport_chains() {
    let linear_cfg = SweepConfig {
        max_weight: 4,
        uppers: (1..=5).collect(),
        variants: vec![RegionVariant::TransportDerived],
        ..SweepConfig::default()
    };
    let linear = run_suite(Suite::TransportLinear, &linear_cfg).unwrap();
    let schur_cfg = SweepConfig {
        max_cells: 4,
        uppers: (2..=5).collect(),
        readings: vec![NumeratorReading::FirstPlain],
        ..SweepConfig::default()
    };
    let schur = run_suite(Suite::TransportSchur, &schur_cfg).unwrap();
    let ok = linear.all_passed() && schur.all_passed();
    report(7, "every transport chain member equals the endpoints", ok);
}

#[test]
fn criterion_8_oracle_equivalence() {
    // The sweeps of criteria 2 and 5 already re-evaluate every instance
    // with the naive enumerator (oracle_check). This criterion additionally
    // drives the two evaluators head to head across all six sum kinds.
    assert!(Suite::MswQ.acceptance_config().oracle_check);
    assert!(Suite::SchurQ.acceptance_config().oracle_check);

    let mut ok = true;
    let reading = NumeratorReading::FirstPlain;
    for kind in [SumKind::Bz, SumKind::QFlat, SumKind::BzStar, SumKind::QStarFlat] {
        for k in compositions_up_to(4, None) {
            for upper in 1..=6u32 {
                let arg = SumArg::Linear(k.clone());
                let dp = evaluate(kind, &arg, upper, reading, Evaluator::Dp).unwrap();
                let naive = evaluate(kind, &arg, upper, reading, Evaluator::Naive).unwrap();
                ok &= dp == naive;
            }
        }
    }
    for kind in [SumKind::SchurBz, SumKind::SchurQFlat] {
        for shape in builtin_shapes(4) {
            for kk in flatsum::verify::weight_assignments(&shape, 2) {
                for upper in 2..=4u32 {
                    let arg = SumArg::Shape(kk.clone());
                    let dp = evaluate(kind, &arg, upper, reading, Evaluator::Dp).unwrap();
                    let naive = evaluate(kind, &arg, upper, reading, Evaluator::Naive).unwrap();
                    ok &= dp == naive;
                }
            }
        }
    }
    report(8, "DP evaluator equals the naive enumerator", ok);
}

#[test]
fn criterion_9_structural_suites() {
    // Gaussian binomials: Pascal recurrence against the factorial quotient.
    let mut ok = true;
    for n in 0..=12u32 {
        for m in 0..=n {
            ok &= q_binomial(n, m) == q_binomial_by_factorials(n, m);
        }
    }

    // Cyclotomic polynomials: degree phi(N) and the product identity.
    for n in 1..=12u32 {
        ok &= cyclotomic_polynomial(n).degree() == Some(euler_phi(n) as usize);
        let mut prod = QPoly::one();
        for d in 1..=n {
            if n % d == 0 {
                prod = &prod * &cyclotomic_polynomial(d);
            }
        }
        ok &= prod == &QPoly::q_pow(n as usize) - &QPoly::one();
    }

    // Semi-standard fillings: row/column conditions against diagonal
    // chains, on every builtin shape with up to 6 cells.
    for shape in builtin_shapes(6) {
        for upper in 1..=5u32 {
            let direct: std::collections::BTreeSet<_> =
                enumerate_ssyt(&shape, upper).into_iter().collect();
            let mut via_chains = std::collections::BTreeSet::new();
            for_each_diag_chain(&shape, upper, |chain| {
                via_chains.insert(chain_to_filling(&shape, chain));
            });
            ok &= direct == via_chains;
        }
    }
    report(9, "structural suites: binomials, cyclotomics, tableaux", ok);
}

#[test]
fn classical_values_match_spec_examples() {
    // Direct spot checks used across the criteria.
    use flatsum::exactq::Rat;
    let arg = SumArg::Linear(idx(&[2]));
    let v = classical_value(SumKind::Bz, &arg, 4, NumeratorReading::FirstPlain).unwrap();
    assert_eq!(v, Rat::new(49.into(), 36.into()));
    assert_eq!(v, classical_direct(SumKind::Bz, &arg, 4).unwrap());

    let square = flatsum::combinat::SkewShape::new([(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
    let kk = flatsum::combinat::DiagIndex::uniform(square, 1).unwrap();
    let v = classical_value(
        SumKind::SchurBz,
        &SumArg::Shape(kk),
        3,
        NumeratorReading::FirstPlain,
    )
    .unwrap();
    assert_eq!(v, Rat::new(1.into(), 4.into()));
}
