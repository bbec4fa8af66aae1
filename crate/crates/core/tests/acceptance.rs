//! Exit criteria. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use twinlattice::*;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ac1_comm_lemma() -> Check {
    let start = Instant::now();
    let mut pairs = 0;
    for m in [5, 6] {
        let report = verify_comm_lemma(&matrix(m, 1), 8).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("A({m},1): {:?}", report.violations))?;
        // 17 even walls in [-16, 17] give 16 consecutive alpha pairs per end
        ensure(report.noncommuting_pairs == 32, || {
            format!("A({m},1): {} non-commuting pairs", report.noncommuting_pairs)
        })?;
        pairs += report.checked_pairs.len();
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("{pairs} prenilpotent pairs, 0 violations, {elapsed:.2?}"))
}

fn ac2_minimal_c() -> Check {
    let mut out = Vec::new();
    for m in [5, 6, 7] {
        let c = minimal_c(&matrix(m, 1), 8).map_err(|e| e.to_string())?;
        ensure(c.graph == Some(3) && c.chambers == Some(2) && c.stable, || {
            format!("A({m},1): {c:?}")
        })?;
        out.push(format!("A({m},1) C=3/2"));
    }
    Ok(format!("{} (stable at window 16)", out.join(", ")))
}

fn ac3_condition_i_violated() -> Check {
    let mut pairs = 0;
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        let a = matrix(m, n);
        let table = commutation_table(&a, 8).map_err(|e| e.to_string())?;
        for e in table.iter().filter(|e| e.prenilpotent) {
            pairs += 1;
            ensure(e.support.is_empty(), || {
                format!("A({m},{n}): {{{}, {}}} has support {:?}", e.phi, e.psi, e.support)
            })?;
        }
        let ci = check_condition_i(&a, true, 8).map_err(|e| e.to_string())?;
        ensure(!ci.holds, || format!("A({m},{n}): condition (i) holds"))?;
    }
    Ok(format!("{pairs} distinct prenilpotent pairs, all supports empty"))
}

fn ac4_affine_subtlety() -> Check {
    let a = matrix(2, 2);
    let (phi, psi) = (rv(1, 0), rv(3, 2));
    // independent oracle: every real root in a wide window, filtered by the 2x2 solve
    let pool = orbit_roots(&a, 6);
    let rational = rational_cone_oracle(&pool, &phi, &psi);
    let integer = integer_cone_oracle(&pool, &phi, &psi);
    let expected: BTreeSet<_> = [rv(2, 1)].into_iter().collect();
    ensure(rational == expected, || format!("oracle rational cone {rational:?}"))?;
    ensure(integer.is_empty(), || format!("oracle integer cone {integer:?}"))?;
    let geo = geometric_interval(&a, &phi, &psi).map_err(|e| e.to_string())?;
    ensure(geo == vec![rv(2, 1)], || format!("geometric interval {geo:?}"))?;
    let support = bracket_support(&a, &phi, &psi).map_err(|e| e.to_string())?;
    ensure(support.is_empty(), || format!("support {support:?}"))?;
    Ok("rational cone {(2,1)}, integer support empty".into())
}

fn ac5_verdict_table() -> Check {
    let check = |m: u32, n: u32, q: u64, outcome: Outcome, bound: Option<u64>| {
        let v = verdict(&LatticeSpec::new(matrix(m, n), q).map_err(|e| e.to_string())?);
        ensure(v.outcome == outcome && (bound.is_none() || v.quotient_index_bound == bound), || {
            format!("A({m},{n}) q={q}: got {} {:?}", v.outcome, v.quotient_index_bound)
        })
    };
    check(5, 1, 4, Outcome::Simple, None)?;
    check(5, 1, 2, Outcome::VirtuallySimple, Some(2))?;
    let qs = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 125];
    for q in qs {
        check(2, 2, q, Outcome::ResiduallyFinite, None)?;
        check(4, 1, q, Outcome::ResiduallyFinite, None)?;
        check(2, 1, q, Outcome::FiniteType, None)?;
    }
    check(5, 2, 2, Outcome::ResiduallyFinite, None)?;
    check(3, 2, 4, Outcome::Unknown, None)?;
    Ok(format!("7 rows, 'any q' rows over {} prime powers", qs.len()))
}

fn ac6_q2_totality() -> Check {
    let mut count = 0;
    for m in 2..=12 {
        for n in 2..=12 {
            let v = verdict(&LatticeSpec::new(matrix(m, n), 2).map_err(|e| e.to_string())?);
            ensure(v.outcome != Outcome::Unknown, || format!("A({m},{n}) is unknown at q=2"))?;
            ensure(
                matches!(
                    v.outcome,
                    Outcome::FiniteType | Outcome::ResiduallyFinite | Outcome::VirtuallySimple
                ),
                || format!("A({m},{n}): {}", v.outcome),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} matrices, none unknown"))
}

fn ac7_wreath() -> Check {
    let start = Instant::now();
    let err = |e: Error| e.to_string();
    let s3 = FiniteGroup::builtin("S3").map_err(err)?;
    let q8 = FiniteGroup::builtin("Q8").map_err(err)?;
    let order = wreath_product(&s3, 2).map_err(err)?.order();
    ensure(order == 72, || format!("|S3 wr Z/2| = {order}"))?;
    let q = quotient_by_shift(&s3, 2).map_err(err)?.order();
    ensure(q == 2, || format!("S3 quotient order {q}"))?;
    let q = quotient_by_shift(&q8, 2).map_err(err)?.order();
    ensure(q == 4, || format!("Q8 quotient order {q}"))?;
    for name in BUILTIN_GROUPS {
        let f = FiniteGroup::builtin(name).map_err(err)?;
        for copies in [2, 3] {
            let ok = meskin_identity_check(&f, copies).map_err(err)?;
            ensure(ok, || format!("identity fails for {name} x {copies}"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("72 / 2 / 4, identity holds for {} groups, {elapsed:.2?}", BUILTIN_GROUPS.len()))
}

fn run_property<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> std::result::Result<(), TestCaseError>,
) -> std::result::Result<u32, String> {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner =
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))?;
    Ok(cases)
}

fn ac8_property_suites() -> Check {
    let mut total = 0;
    total +=
        run_property("involution", 300, (any_matrix(12), lattice_vector(10_000)), |(a, v)| {
            for i in SimpleIndex::BOTH {
                prop_assert_eq!(a.reflect(i, &a.reflect(i, &v)), v.clone());
            }
            Ok(())
        })?;
    total += run_property(
        "B-norm invariance",
        300,
        (any_matrix(12), weyl_word(16), lattice_vector(1000)),
        |(a, w, v)| {
            prop_assert_eq!(a.norm(&w.apply(&a, &v)), a.norm(&v));
            Ok(())
        },
    )?;
    total += run_property(
        "interval = rational cone",
        300,
        (infinite_matrix(8), 0usize..10_000, 0usize..10_000, 1u32..5),
        |(a, i, j, w)| {
            let roots: Vec<_> = orbit_roots(&a, w).into_iter().collect();
            let (p, q) = (&roots[i % roots.len()], &roots[j % roots.len()]);
            if p == q || !is_prenilpotent(&a, p, q).unwrap() {
                return Ok(());
            }
            let pool = orbit_roots(&a, w + 1);
            let geo: BTreeSet<_> = geometric_interval(&a, p, q).unwrap().into_iter().collect();
            prop_assert_eq!(&geo, &rational_cone_oracle(&pool, p, q));
            prop_assert_eq!(bracket_support(&a, p, q).unwrap(), integer_cone_oracle(&pool, p, q));
            Ok(())
        },
    )?;
    total += run_property(
        "support symmetry and equivariance",
        300,
        (infinite_matrix(7), 0usize..10_000, 0usize..10_000, weyl_word(8)),
        |(a, i, j, w)| {
            let roots: Vec<_> = orbit_roots(&a, 3).into_iter().collect();
            let (p, q) = (&roots[i % roots.len()], &roots[j % roots.len()]);
            if p == q || !is_prenilpotent(&a, p, q).unwrap() {
                return Ok(());
            }
            let s = bracket_support(&a, p, q).unwrap();
            prop_assert_eq!(&s, &bracket_support(&a, q, p).unwrap());
            let moved = bracket_support(&a, &w.apply(&a, p), &w.apply(&a, q)).unwrap();
            let image: BTreeSet<_> = s.iter().map(|g| w.apply(&a, g)).collect();
            prop_assert_eq!(moved, image);
            Ok(())
        },
    )?;
    total += run_property(
        "wall-map equivariance",
        300,
        (infinite_matrix(8), 0usize..10_000, weyl_word(10)),
        |(a, i, w)| {
            let roots: Vec<_> = orbit_roots(&a, 4).into_iter().collect();
            let v = &roots[i % roots.len()];
            let expected = WeylElement::from_word(&w).apply_wall_root(wall_of(&a, v).unwrap());
            prop_assert_eq!(wall_of(&a, &w.apply(&a, v)).unwrap(), expected);
            Ok(())
        },
    )?;
    total += run_property(
        "transposition invariance",
        100,
        (infinite_matrix(6), 2u32..4, 1u32..13, 1u32..13, 0usize..8),
        |(a, w, m, n, qi)| {
            prop_assert_eq!(minimal_c(&a, w).unwrap(), minimal_c(&a.transpose(), w).unwrap());
            let q = [2u64, 3, 4, 5, 7, 8, 9, 16][qi];
            let v = verdict(&LatticeSpec::new(matrix(m, n), q).unwrap());
            let t = verdict(&LatticeSpec::new(matrix(n, m), q).unwrap());
            prop_assert_eq!(v, t);
            Ok(())
        },
    )?;
    ensure(total >= 1000, || format!("only {total} cases"))?;
    Ok(format!("{total} random cases, 0 failures"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 commutation structure of A(5,1), A(6,1)", ac1_comm_lemma),
        ("AC2 condition (ii) constant for A(m,1)", ac2_minimal_c),
        ("AC3 condition (i) violated for m, n > 1", ac3_condition_i_violated),
        ("AC4 affine rational vs integer support", ac4_affine_subtlety),
        ("AC5 verdict table", ac5_verdict_table),
        ("AC6 q = 2 totality", ac6_q2_totality),
        ("AC7 wreath oracle", ac7_wreath),
        ("AC8 cross-oracle property suites", ac8_property_suites),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
