//! Deterministic, seeded invariant suites behind `bdl check`.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::fox::zeta1_trace_data;
use crate::report::oracle::{b3_oracle, BraidClass};
use crate::report::SHARPNESS_TOLERANCE;
use crate::reps::{rep_matrix, RepKind};
use crate::sampling::{random_braid, random_laurent};
use crate::spectral::{
    coefficient_bound_check, partition_count_brute, partition_counts, sine_product, torus_sup_sr,
};

const RELATION_SEED: u64 = 0xB01_0001;
const LEMMA_SEED: u64 = 0xB01_0002;
const PA_SAMPLE_SEED: u64 = 0xB01_0003;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Lemmas,
    Theorem1,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "relations" => Ok(Suite::Relations),
            "lemmas" => Ok(Suite::Lemmas),
            "theorem1" => Ok(Suite::Theorem1),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!(
                "unknown suite {other:?} (expected relations|lemmas|theorem1|all)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Lemmas => "lemmas",
            Suite::Theorem1 => "theorem1",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

pub fn run_suite(suite: Suite) -> SuiteReport {
    let mut checks = Vec::new();
    match suite {
        Suite::Relations => relations_checks(&mut checks),
        Suite::Lemmas => lemmas_checks(&mut checks),
        Suite::Theorem1 => theorem1_checks(&mut checks),
        Suite::All => {
            relations_checks(&mut checks);
            lemmas_checks(&mut checks);
            theorem1_checks(&mut checks);
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    SuiteReport {
        suite: suite.name(),
        checks,
        passed,
    }
}

fn push(checks: &mut Vec<CheckResult>, name: &str, passed: bool, detail: String) {
    checks.push(CheckResult {
        name: name.to_string(),
        passed,
        detail,
    });
}

fn relation_holds(kind: RepKind, n: usize, lhs: &[i32], rhs: &[i32]) -> bool {
    let a = BraidWord::new(n, lhs.to_vec()).unwrap();
    let b = BraidWord::new(n, rhs.to_vec()).unwrap();
    match (rep_matrix(kind, &a), rep_matrix(kind, &b)) {
        (Ok(ma), Ok(mb)) => ma.matrix == mb.matrix,
        _ => false,
    }
}

fn relations_checks(checks: &mut Vec<CheckResult>) {
    let kinds = [RepKind::BurauReduced, RepKind::Lkb, RepKind::FoxSpecialized];
    for kind in kinds {
        let mut failures = String::new();
        let mut count = 0usize;
        for n in 2..=5usize {
            for i in 1..(n as i32 - 1) {
                count += 1;
                if !relation_holds(kind, n, &[i, i + 1, i], &[i + 1, i, i + 1]) {
                    let _ = write!(failures, " braid(n={n},i={i})");
                }
            }
            for i in 1..n as i32 {
                for j in (i + 2)..n as i32 {
                    count += 1;
                    if !relation_holds(kind, n, &[i, j], &[j, i]) {
                        let _ = write!(failures, " comm(n={n},i={i},j={j})");
                    }
                }
                count += 1;
                if !relation_holds(kind, n, &[i, -i], &[]) {
                    let _ = write!(failures, " inv(n={n},i={i})");
                }
            }
        }
        push(
            checks,
            &format!("{:?}_relations", kind),
            failures.is_empty(),
            if failures.is_empty() {
                format!("{count} exact matrix identities")
            } else {
                format!("failed:{failures}")
            },
        );
    }

    // Seeded random homomorphism checks across all kinds.
    let mut rng = ChaCha8Rng::seed_from_u64(RELATION_SEED);
    for kind in kinds {
        let mut ok = true;
        for _ in 0..10 {
            let a = random_braid(&mut rng, 4, 5);
            let b = random_braid(&mut rng, 4, 5);
            let ab = a.compose(&b).unwrap();
            let prod = rep_matrix(kind, &a)
                .unwrap()
                .matrix
                .mul(&rep_matrix(kind, &b).unwrap().matrix)
                .unwrap();
            ok &= prod == rep_matrix(kind, &ab).unwrap().matrix;
        }
        push(
            checks,
            &format!("{:?}_homomorphism", kind),
            ok,
            "10 seeded random pairs in B_4".to_string(),
        );
    }
}

fn lemmas_checks(checks: &mut Vec<CheckResult>) {
    let worst = (1..=64u32)
        .map(|m| (sine_product(m) - (m as f64 + 1.0)).abs())
        .fold(0.0f64, f64::max);
    push(
        checks,
        "sine_product",
        worst < 1e-8,
        format!("max |product - (M+1)| = {worst:.3e} over M <= 64"),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(LEMMA_SEED);
    let mut holds = 0usize;
    let mut failed = Vec::new();
    for case in 0..100 {
        let var_count = (case % 3) + 1;
        let f = random_laurent(&mut rng, var_count, 6, 10);
        let grid = 8 * (f.max_degree_span() + 1);
        match coefficient_bound_check(&f, grid.max(8)) {
            Ok(r) if r.holds => holds += 1,
            _ => failed.push(case),
        }
    }
    push(
        checks,
        "coefficient_bound",
        holds == 100,
        if failed.is_empty() {
            "100 seeded polynomials".to_string()
        } else {
            format!("failed cases {failed:?}")
        },
    );

    let table = partition_counts(100);
    let recursion_ok = (1..=20).all(|m| table.s[m] == partition_count_brute(m));
    let monotone = (1..100).all(|m| table.s[m + 1] > table.s[m]);
    let root = |m: usize| (table.s[m] as f64).powf(1.0 / m as f64);
    let decreasing = root(40) > root(60) && root(60) > root(80) && root(80) > root(100);
    push(
        checks,
        "partition_recursion",
        recursion_ok,
        "recursion equals direct enumeration for m <= 20".to_string(),
    );
    push(
        checks,
        "partition_roots",
        monotone && decreasing && root(100) < 1.25,
        format!("S_100^(1/100) = {:.4}", root(100)),
    );
}

fn theorem1_checks(checks: &mut Vec<CheckResult>) {
    let b = BraidWord::new(3, vec![1, -2]).unwrap();
    let lambda = (3.0 + 5.0f64.sqrt()) / 2.0;

    let pts = zeta1_trace_data(&b, 12, crate::fox::DEFAULT_TERM_CAP).unwrap();
    let ordered = pts
        .iter()
        .all(|p| p.norm_of_collected_trace <= p.trace_of_norms);
    push(
        checks,
        "trace_norm_order",
        ordered,
        "collected norm <= termwise norm for k <= 12".to_string(),
    );

    let seq: Vec<num_bigint::BigUint> = pts
        .iter()
        .map(|p| num_bigint::BigUint::from(p.trace_of_norms))
        .collect();
    let growth =
        crate::spectral::growth_estimate_big(&seq, crate::spectral::default_window(12)).unwrap();
    let within = (growth.estimate - lambda).abs() / lambda;
    push(
        checks,
        "zeta_growth_vs_dilatation",
        within <= 0.10,
        format!(
            "estimate {:.6} vs {:.6} ({:.2}% off)",
            growth.estimate,
            lambda,
            within * 100.0
        ),
    );

    let ratios: Vec<f64> = growth.ratio_estimates.iter().flatten().copied().collect();
    let last3 = &ratios[ratios.len().saturating_sub(3)..];
    let ratios_ok = last3.len() == 3 && last3.iter().all(|r| (r - lambda).abs() / lambda <= 0.05);
    push(
        checks,
        "zeta_trailing_ratios",
        ratios_ok,
        format!("last ratios {last3:?}"),
    );

    let sup = torus_sup_sr(&crate::reps::burau_reduced(&b).unwrap().matrix, 256, 3).unwrap();
    push(
        checks,
        "burau_sharp_at_minus1",
        (sup.sup_value - lambda).abs() < SHARPNESS_TOLERANCE
            && (sup.argmax_angles[0] - std::f64::consts::PI).abs() < 1e-2,
        format!(
            "sup {:.9} at angle {:.6}",
            sup.sup_value, sup.argmax_angles[0]
        ),
    );
}

/// Deterministic sample of oracle-certified pseudo-Anosov 3-braids.
pub fn seeded_pa_3braids(count: usize, max_len: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(PA_SAMPLE_SEED);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let len = 2 + (out.len() % (max_len - 1).max(1));
        let b = random_braid(&mut rng, 3, len.min(max_len));
        if let Ok(o) = b3_oracle(&b) {
            if o.class == BraidClass::PseudoAnosov {
                out.push(b);
            }
        }
    }
    out
}
