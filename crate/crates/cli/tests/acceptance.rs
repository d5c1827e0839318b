//! Acceptance suite: one test per criterion, tolerances pinned in code.
//! Each test prints a `ACCEPTANCE <n> <name>: PASS` line on success (visible
//! with `cargo test -p bdl-cli --test acceptance -- --nocapture`).

use std::process::Command;
use std::time::Instant;

use bdl_core::report::checks::seeded_pa_3braids;
use bdl_core::sampling::{random_braid, random_free_word, random_laurent, random_sparse_laurent};
use bdl_core::{
    b3_oracle, burau_reduced, coefficient_bound_check, fox_derivative, fox_matrix,
    growth_estimate_big, lkb_matrix, partition_count_brute, partition_counts, rep_matrix,
    sine_product, specialize_fox, torus_sup_sr, trace_power_growth, zeta1_trace_data, ArtinAction,
    BraidWord, FreeWord, GroupRingElement, LaurentMatrix, LaurentPoly, RepKind,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LAMBDA_SHARP: f64 = 2.6180340; // (3 + sqrt 5) / 2 to the stated digits

fn braid(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

fn done(number: u32, name: &str, started: Instant) {
    println!(
        "ACCEPTANCE {number:02} {name}: PASS ({:.2}s)",
        started.elapsed().as_secs_f64()
    );
}

/// 1. Braid relations and far commutation hold as exact Laurent-matrix
///    identities for every representation kind, n <= 5.
#[test]
fn acceptance_01_braid_relation_suite() {
    let t0 = Instant::now();
    for kind in [RepKind::BurauReduced, RepKind::Lkb, RepKind::FoxSpecialized] {
        for n in 2..=5usize {
            for i in 1..(n as i32 - 1) {
                let lhs = rep_matrix(kind, &braid(n, &[i, i + 1, i])).unwrap().matrix;
                let rhs = rep_matrix(kind, &braid(n, &[i + 1, i, i + 1]))
                    .unwrap()
                    .matrix;
                assert_eq!(lhs, rhs, "{kind:?} braid relation n={n} i={i}");
            }
            for i in 1..n as i32 {
                for j in (i + 2)..n as i32 {
                    let lhs = rep_matrix(kind, &braid(n, &[i, j])).unwrap().matrix;
                    let rhs = rep_matrix(kind, &braid(n, &[j, i])).unwrap().matrix;
                    assert_eq!(lhs, rhs, "{kind:?} far commutation n={n} i={i} j={j}");
                }
            }
        }
    }
    done(1, "braid-relation-suite", t0);
}

/// 2. Fox fundamental identity on 200 seeded random words, exact.
#[test]
fn acceptance_02_fox_fundamental_identity() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC02);
    let action = ArtinAction::identity(4);
    for case in 0..200 {
        let n = rng.random_range(2..=4usize);
        let len = rng.random_range(0..=12usize);
        let w = random_free_word(&mut rng, n, len);
        let mut acc = GroupRingElement::zero();
        for i in 1..=n {
            let di = fox_derivative(&w, i, n).unwrap();
            let xi_minus_1 =
                GroupRingElement::from_word(FreeWord::generator(i)).sub(&GroupRingElement::one());
            acc = acc.add(&di.mul(&xi_minus_1, &action));
        }
        let expected = GroupRingElement::from_word(w).sub(&GroupRingElement::one());
        assert_eq!(acc, expected, "case {case}");
    }
    done(2, "fox-fundamental-identity", t0);
}

/// 3. Burau sharp case: the torus supremum for sigma_1 sigma_2^-1 in B_3
///    equals 2.6180340 within 1e-6, attained within one refined grid step
///    of t = -1, and matches the oracle dilatation within 1e-6.
#[test]
fn acceptance_03_burau_sharp_case() {
    let t0 = Instant::now();
    let b = braid(3, &[1, -2]);
    let sup = torus_sup_sr(&burau_reduced(&b).unwrap().matrix, 256, 3).unwrap();
    assert!(
        (sup.sup_value - LAMBDA_SHARP).abs() <= 1e-6,
        "sup {} vs {LAMBDA_SHARP}",
        sup.sup_value
    );
    let refined_step = std::f64::consts::TAU / 256.0 / 64.0; // three x4 rounds
    assert!(
        (sup.argmax_angles[0] - std::f64::consts::PI).abs() <= refined_step + 1e-12,
        "argmax angle {}",
        sup.argmax_angles[0]
    );
    let oracle = b3_oracle(&b).unwrap();
    let lambda = oracle.dilatation.expect("pseudo-Anosov");
    assert!((sup.sup_value - lambda).abs() <= 1e-6);
    done(3, "burau-sharp-case", t0);
}

/// 4. Recovered inequalities on 25 seeded oracle-certified pseudo-Anosov
///    3-braids: the Burau bound never exceeds the dilatation and the
///    two-variable supremum never exceeds its square (1e-6 slack).
#[test]
fn acceptance_04_recover_inequalities() {
    let t0 = Instant::now();
    let braids = seeded_pa_3braids(25, 8);
    assert_eq!(braids.len(), 25);
    for b in &braids {
        let lambda = b3_oracle(b).unwrap().dilatation.expect("certified pA");
        let burau_bound = torus_sup_sr(&burau_reduced(b).unwrap().matrix, 128, 2)
            .unwrap()
            .sup_value;
        let lkb_sup = torus_sup_sr(&lkb_matrix(b).unwrap().matrix, 128, 2)
            .unwrap()
            .sup_value;
        assert!(
            burau_bound <= lambda + 1e-6,
            "{}: burau {} vs lambda {}",
            b.to_text(),
            burau_bound,
            lambda
        );
        assert!(
            lkb_sup <= lambda * lambda + 1e-6,
            "{}: lkb {} vs lambda^2 {}",
            b.to_text(),
            lkb_sup,
            lambda * lambda
        );
    }
    done(4, "recover-inequalities", t0);
}

/// 5. Desk-scale growth check: the trace-norm growth of the twisted Fox
///    Jacobian of sigma_1 sigma_2^-1 over k <= 12 sits within 10% of the
///    dilatation, with the last three ratios within 5% and approaching it
///    monotonically.
#[test]
fn acceptance_05_trace_growth_desk_scale() {
    let t0 = Instant::now();
    let b = braid(3, &[1, -2]);
    let pts = zeta1_trace_data(&b, 12, bdl_core::DEFAULT_TERM_CAP).unwrap();
    for p in &pts {
        assert!(p.norm_of_collected_trace <= p.trace_of_norms);
    }
    let seq: Vec<num_bigint::BigUint> = pts
        .iter()
        .map(|p| num_bigint::BigUint::from(p.trace_of_norms))
        .collect();
    let growth = growth_estimate_big(&seq, bdl_core::default_window(12)).unwrap();
    assert!(
        (growth.estimate - LAMBDA_SHARP).abs() / LAMBDA_SHARP <= 0.10,
        "estimate {}",
        growth.estimate
    );
    let ratios: Vec<f64> = growth.ratio_estimates.iter().flatten().copied().collect();
    let last3 = &ratios[ratios.len() - 3..];
    let mut prev_gap = f64::INFINITY;
    for r in last3 {
        let gap = (r - LAMBDA_SHARP).abs();
        assert!(gap / LAMBDA_SHARP <= 0.05, "ratio {r}");
        assert!(gap <= prev_gap, "ratios not approaching: {last3:?}");
        prev_gap = gap;
    }
    done(5, "trace-growth-desk-scale", t0);
}

/// 6. Numeric equivalence of trace growth and torus supremum on seeded
///    random 2x2 Laurent matrices plus the closed-form triangular case.
#[test]
fn acceptance_06_trace_growth_equals_torus_sup() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC6);
    let mut cases: Vec<LaurentMatrix> = Vec::new();
    for case in 0..10 {
        let vars = 1 + (case % 2);
        let terms = 1 + (case % 3);
        let entries: Vec<LaurentPoly> = (0..4)
            .map(|_| random_sparse_laurent(&mut rng, vars, 3, 3, terms))
            .collect();
        cases.push(LaurentMatrix::new(2, 2, entries).unwrap());
    }
    let t = LaurentPoly::variable(1, 0);
    cases.push(
        LaurentMatrix::new(
            2,
            2,
            vec![
                t,
                LaurentPoly::one(1),
                LaurentPoly::zero(1),
                LaurentPoly::constant(1, BigInt::from(2)),
            ],
        )
        .unwrap(),
    );
    for (i, m) in cases.iter().enumerate() {
        let g = trace_power_growth(m, 30, 10_000_000).unwrap();
        // The trailing root alone is the least-biased finite-sample
        // estimate; wider windows only add (larger) early-k roots.
        let estimate = g.norm_of_trace_growth.root_estimates[29].max(1.0);
        let sup = torus_sup_sr(m, 512, 2).unwrap().sup_value;
        if sup > 1.05 {
            let rel = (estimate - sup).abs() / sup;
            assert!(
                rel <= 0.02,
                "case {i}: estimate {estimate} sup {sup} rel {rel}"
            );
        } else {
            assert!(estimate <= 1.1, "case {i}: estimate {estimate} sup {sup}");
        }
    }
    done(6, "trace-growth-equals-torus-sup", t0);
}

/// 7. Sine product identity to 1e-8 for M <= 64.
#[test]
fn acceptance_07_sine_product() {
    let t0 = Instant::now();
    for m in 1..=64u32 {
        assert!(
            (sine_product(m) - (m as f64 + 1.0)).abs() < 1e-8,
            "M = {m}: {}",
            sine_product(m)
        );
    }
    done(7, "sine-product", t0);
}

/// 8. Coefficient bound against the grid supremum on 100 seeded random
///    polynomials (grid 8(M+1) per variable, factor 1.02).
#[test]
fn acceptance_08_coefficient_bound() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC08);
    for case in 0..100 {
        let var_count = (case % 3) + 1;
        let f = random_laurent(&mut rng, var_count, 6, 10);
        let grid = 8 * (f.max_degree_span() + 1);
        let r = coefficient_bound_check(&f, grid.max(8)).unwrap();
        assert!(
            r.holds,
            "case {case}: lhs {} rhs {} sup {}",
            r.lhs, r.rhs, r.sup_on_grid
        );
    }
    done(8, "coefficient-bound", t0);
}

/// 9. Partition-count apparatus: recursion equals enumeration for
///    m <= 20 (with S_1 = 1, S_4 = 5), counts increase, and m-th roots
///    stay small and decreasing.
#[test]
fn acceptance_09_partition_counts() {
    let t0 = Instant::now();
    let table = partition_counts(100);
    assert_eq!(table.s[1], 1);
    assert_eq!(table.s[4], 5);
    for m in 1..=20 {
        assert_eq!(table.s[m], partition_count_brute(m), "m = {m}");
    }
    for m in 1..100 {
        assert!(table.s[m + 1] > table.s[m]);
    }
    let root = |m: usize| (table.s[m] as f64).powf(1.0 / m as f64);
    assert!(root(100) < 1.25, "S_100 root {}", root(100));
    assert!(root(40) > root(60) && root(60) > root(80) && root(80) > root(100));
    done(9, "partition-counts", t0);
}

/// 10. Norm order and abelianization monotonicity on 20 seeded random
///     3-braids, across the group ring, its specialization, and both
///     Laurent representations.
#[test]
fn acceptance_10_norm_order() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC10);
    for _ in 0..20 {
        let len = rng.random_range(1..=8);
        let b = random_braid(&mut rng, 3, len);

        let gm = fox_matrix(&b);
        assert!(gm.trace_sum().unwrap().norm() <= gm.trace_of_norms().unwrap());

        let sm = specialize_fox(&b).unwrap().matrix;
        assert!(sm.norm_of_trace().unwrap() <= sm.trace_of_norm().unwrap());
        for r in 0..3 {
            for c in 0..3 {
                assert!(sm.entry(r, c).norm() <= gm.entry(r, c).norm());
            }
        }

        for kind in [RepKind::BurauReduced, RepKind::Lkb] {
            let m = rep_matrix(kind, &b).unwrap().matrix;
            for k in 1..=3u32 {
                let p = m.pow(k).unwrap();
                assert!(p.norm_of_trace().unwrap() <= p.trace_of_norm().unwrap());
            }
        }
    }
    done(10, "norm-order", t0);
}

/// 11. Determinism: the bound report is byte-identical across repeated
///     runs and across thread-count settings.
#[test]
fn acceptance_11_byte_identical_reports() {
    let t0 = Instant::now();
    let bin = env!("CARGO_BIN_EXE_bdl");
    let run = |threads: Option<&str>| -> (Vec<u8>, bool) {
        let mut cmd = Command::new(bin);
        cmd.args([
            "bound", "--n", "3", "--word", "1,-2", "--zeta1", "--kmax", "8",
        ]);
        cmd.env_remove("BDL_THREADS");
        if let Some(t) = threads {
            cmd.env("BDL_THREADS", t);
        }
        let out = cmd.output().expect("bdl runs");
        (out.stdout, out.status.success())
    };
    let (reference, ok) = run(None);
    assert!(ok);
    assert!(!reference.is_empty());
    for threads in [None, Some("1"), Some("4"), None] {
        let (bytes, ok) = run(threads);
        assert!(ok);
        assert_eq!(
            bytes, reference,
            "output differs for BDL_THREADS={threads:?}"
        );
    }
    done(11, "byte-identical-reports", t0);
}
