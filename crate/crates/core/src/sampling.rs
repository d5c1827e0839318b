//! Seeded random inputs shared by the check suites and the test suites, so
//! both exercise identical streams.

use num_bigint::BigInt;
use rand::Rng;

use crate::braid::BraidWord;
use crate::fox::FreeWord;
use crate::laurent::{LaurentMatrix, LaurentPoly};

/// Freely reduced random word over `x_1..x_n` of exactly `len` letters.
pub fn random_free_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> FreeWord {
    let mut letters: Vec<i32> = Vec::with_capacity(len);
    while letters.len() < len {
        let g = rng.random_range(1..=n as i32);
        let g = if rng.random_bool(0.5) { g } else { -g };
        if letters.last() == Some(&-g) {
            continue;
        }
        letters.push(g);
    }
    FreeWord::new(letters)
}

/// Freely reduced random braid word of exactly `len` letters.
pub fn random_braid<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let mut letters: Vec<i32> = Vec::with_capacity(len);
    while letters.len() < len {
        let g = rng.random_range(1..=(n as i32 - 1));
        let g = if rng.random_bool(0.5) { g } else { -g };
        if letters.last() == Some(&-g) {
            continue;
        }
        letters.push(g);
    }
    BraidWord::new(n, letters).expect("letters drawn in range")
}

/// Random Laurent polynomial: per-variable exponent windows of width at
/// most `max_span`, nonzero integer coefficients in `[-coeff_bound,
/// coeff_bound]`, at least one term.
pub fn random_laurent<R: Rng>(
    rng: &mut R,
    var_count: usize,
    max_span: u32,
    coeff_bound: i64,
) -> LaurentPoly {
    let spans: Vec<i32> = (0..var_count)
        .map(|_| rng.random_range(0..=max_span as i32))
        .collect();
    let los: Vec<i32> = spans
        .iter()
        .map(|&s| rng.random_range(-s - 1..=1))
        .collect();
    let mut poly = LaurentPoly::zero(var_count);
    let mut exps = vec![0i32; var_count];
    loop {
        // Visit every lattice point of the window, keeping each with
        // probability 1/2.
        let mut done_any = false;
        visit(rng, &spans, &los, &mut exps, 0, &mut |rng, exps| {
            if rng.random_bool(0.5) {
                let mut c = 0i64;
                while c == 0 {
                    c = rng.random_range(-coeff_bound..=coeff_bound);
                }
                poly = poly
                    .add(&LaurentPoly::monomial(var_count, exps, BigInt::from(c)).unwrap())
                    .unwrap();
                done_any = true;
            }
        });
        if done_any {
            return poly;
        }
    }

    fn visit<R: Rng>(
        rng: &mut R,
        spans: &[i32],
        los: &[i32],
        exps: &mut Vec<i32>,
        var: usize,
        f: &mut impl FnMut(&mut R, &[i32]),
    ) {
        if var == spans.len() {
            f(rng, exps);
            return;
        }
        for e in los[var]..=(los[var] + spans[var]) {
            exps[var] = e;
            visit(rng, spans, los, exps, var + 1, f);
        }
    }
}

/// Random Laurent polynomial with a fixed small number of terms: exponents
/// drawn per variable from `[-max_span/2, max_span - max_span/2]` (so the
/// per-variable span never exceeds `max_span`), nonzero coefficients in
/// `[-coeff_bound, coeff_bound]`.
pub fn random_sparse_laurent<R: Rng>(
    rng: &mut R,
    var_count: usize,
    max_span: u32,
    coeff_bound: i64,
    terms: usize,
) -> LaurentPoly {
    let lo = -(max_span as i32) / 2;
    let hi = lo + max_span as i32;
    let mut poly = LaurentPoly::zero(var_count);
    while poly.is_zero() {
        for _ in 0..terms {
            let exps: Vec<i32> = (0..var_count).map(|_| rng.random_range(lo..=hi)).collect();
            let mut c = 0i64;
            while c == 0 {
                c = rng.random_range(-coeff_bound..=coeff_bound);
            }
            poly = poly
                .add(&LaurentPoly::monomial(var_count, &exps, BigInt::from(c)).unwrap())
                .unwrap();
        }
    }
    poly
}

/// Random square Laurent matrix with entries drawn by [`random_laurent`].
pub fn random_laurent_matrix<R: Rng>(
    rng: &mut R,
    dim: usize,
    var_count: usize,
    max_span: u32,
    coeff_bound: i64,
) -> LaurentMatrix {
    let entries: Vec<LaurentPoly> = (0..dim * dim)
        .map(|_| random_laurent(rng, var_count, max_span, coeff_bound))
        .collect();
    LaurentMatrix::new(dim, dim, entries).expect("uniform var count")
}
