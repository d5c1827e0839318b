//! Exact multivariate Laurent polynomials with big-integer coefficients.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// How far a substitution point may sit from the unit circle before
/// evaluation refuses to proceed.
pub const UNIT_MODULUS_TOLERANCE: f64 = 1e-6;

/// A Laurent polynomial in `var_count >= 1` variables. Terms map integer
/// exponent vectors (entries may be negative) to nonzero coefficients; the
/// map is ordered lexicographically so iteration, serialization and `Eq`
/// are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    var_count: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var_count: usize) -> Self {
        assert!(var_count >= 1, "var_count must be >= 1");
        Self {
            var_count,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(var_count: usize, value: BigInt) -> Self {
        let mut p = Self::zero(var_count);
        if !value.is_zero() {
            p.terms.insert(vec![0; var_count], value);
        }
        p
    }

    pub fn one(var_count: usize) -> Self {
        Self::constant(var_count, BigInt::one())
    }

    /// The monomial `coeff * x^exps`.
    pub fn monomial(var_count: usize, exps: &[i32], coeff: BigInt) -> Result<Self> {
        if exps.len() != var_count {
            return Err(Error::VarCountMismatch {
                left: var_count,
                right: exps.len(),
            });
        }
        let mut p = Self::zero(var_count);
        if !coeff.is_zero() {
            p.terms.insert(exps.to_vec(), coeff);
        }
        Ok(p)
    }

    /// The bare variable `x_idx` (0-based).
    pub fn variable(var_count: usize, idx: usize) -> Self {
        assert!(idx < var_count);
        let mut exps = vec![0; var_count];
        exps[idx] = 1;
        let mut p = Self::zero(var_count);
        p.terms.insert(exps, BigInt::one());
        p
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, BigInt> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the polynomial is a single term with coefficient `+1`/`-1`,
    /// i.e. a unit of the Laurent ring.
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().magnitude().is_one()
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.var_count != other.var_count {
            return Err(Error::VarCountMismatch {
                left: self.var_count,
                right: other.var_count,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            add_term(&mut out.terms, e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            add_term(&mut out.terms, e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            var_count: self.var_count,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.var_count);
        }
        Self {
            var_count: self.var_count,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        // Accumulate in a hash map, then canonicalize: quadratic products
        // with tree inserts are noticeably slower on dense operands.
        let mut acc: HashMap<Vec<i32>, BigInt> =
            HashMap::with_capacity(self.terms.len().max(other.terms.len()));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let key: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(key).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        let mut terms = BTreeMap::new();
        for (e, c) in acc {
            if !c.is_zero() {
                terms.insert(e, c);
            }
        }
        Ok(Self {
            var_count: self.var_count,
            terms,
        })
    }

    /// `k`-th power, `k >= 0`.
    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.var_count);
        for _ in 0..k {
            out = out.mul(self).expect("var counts match");
        }
        out
    }

    /// Multiplies by the monomial `x^shift` (norm-preserving).
    pub fn shift(&self, shift: &[i32]) -> Result<Self> {
        if shift.len() != self.var_count {
            return Err(Error::VarCountMismatch {
                left: self.var_count,
                right: shift.len(),
            });
        }
        Ok(Self {
            var_count: self.var_count,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, s)| a + s).collect(), c.clone()))
                .collect(),
        })
    }

    /// Sum of absolute coefficient values.
    pub fn norm(&self) -> BigUint {
        let mut acc = BigUint::zero();
        for c in self.terms.values() {
            acc += c.magnitude();
        }
        acc
    }

    /// Per-variable `(min, max)` exponent ranges; `None` for the zero
    /// polynomial.
    pub fn exponent_ranges(&self) -> Option<Vec<(i32, i32)>> {
        if self.terms.is_empty() {
            return None;
        }
        let mut ranges = vec![(i32::MAX, i32::MIN); self.var_count];
        for e in self.terms.keys() {
            for (r, &x) in ranges.iter_mut().zip(e) {
                r.0 = r.0.min(x);
                r.1 = r.1.max(x);
            }
        }
        Some(ranges)
    }

    /// Largest per-variable degree span `max - min`.
    pub fn max_degree_span(&self) -> u32 {
        self.exponent_ranges()
            .map(|rs| {
                rs.iter()
                    .map(|(lo, hi)| (hi - lo) as u32)
                    .max()
                    .unwrap_or(0)
            })
            .unwrap_or(0)
    }

    /// Evaluates at a point of unit-modulus complex numbers. Points within
    /// `1e-12` of the circle are taken as exact; deviations up to `1e-6`
    /// are accepted as-is (the caller asked for nearby values); anything
    /// farther is rejected.
    pub fn eval(&self, point: &[Complex64]) -> Result<Complex64> {
        check_unit_point(self.var_count, point)?;
        let tables = PowerTables::new(self, point);
        Ok(self.eval_with_tables(&tables))
    }

    pub(crate) fn eval_with_tables(&self, tables: &PowerTables) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut term = Complex64::new(big_to_f64(c), 0.0);
            for (v, &exp) in e.iter().enumerate() {
                term *= tables.power(v, exp);
            }
            acc += term;
        }
        acc
    }

    /// Exact integer evaluation of a one-variable polynomial at `t = -1`.
    pub fn eval_at_minus_one(&self) -> Result<BigInt> {
        if self.var_count != 1 {
            return Err(Error::Domain(format!(
                "exact t=-1 evaluation needs one variable, got {}",
                self.var_count
            )));
        }
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            if e[0].rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        Ok(acc)
    }

    /// Renders with the given variable names, terms in map order.
    pub fn display_with(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.var_count);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(&exp, _)| exp != 0)
                .map(|(&exp, name)| {
                    if exp == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{exp}")
                    }
                })
                .collect();
            let mag = c.magnitude();
            let lead = if idx == 0 {
                if c.is_negative() { "-" } else { "" }.to_string()
            } else if c.is_negative() {
                " - ".to_string()
            } else {
                " + ".to_string()
            };
            out.push_str(&lead);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{}*{}", mag, mono.join("*")));
            }
        }
        out
    }
}

fn add_term(terms: &mut BTreeMap<Vec<i32>, BigInt>, key: Vec<i32>, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn check_unit_point(var_count: usize, point: &[Complex64]) -> Result<()> {
    if point.len() != var_count {
        return Err(Error::VarCountMismatch {
            left: var_count,
            right: point.len(),
        });
    }
    for z in point {
        let dev = (z.norm() - 1.0).abs();
        if dev > UNIT_MODULUS_TOLERANCE {
            return Err(Error::Numeric(format!(
                "substitution point {z} has modulus {} outside the unit-circle tolerance",
                z.norm()
            )));
        }
    }
    Ok(())
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

pub(crate) fn big_to_f64_unsigned(c: &BigUint) -> f64 {
    c.to_f64().unwrap_or(f64::INFINITY)
}

/// Per-variable powers of a substitution point covering the exponent range
/// of one polynomial or a whole matrix.
pub(crate) struct PowerTables {
    mins: Vec<i32>,
    tables: Vec<Vec<Complex64>>,
}

impl PowerTables {
    pub(crate) fn new(poly: &LaurentPoly, point: &[Complex64]) -> Self {
        let ranges = poly
            .exponent_ranges()
            .unwrap_or_else(|| vec![(0, 0); poly.var_count]);
        Self::from_ranges(&ranges, point)
    }

    pub(crate) fn from_ranges(ranges: &[(i32, i32)], point: &[Complex64]) -> Self {
        let mut mins = Vec::with_capacity(ranges.len());
        let mut tables = Vec::with_capacity(ranges.len());
        for (v, &(lo, hi)) in ranges.iter().enumerate() {
            let lo = lo.min(0);
            let hi = hi.max(0);
            let z = point[v];
            let zinv = 1.0 / z;
            let mut table = vec![Complex64::new(1.0, 0.0); (hi - lo + 1) as usize];
            let zero_at = (-lo) as usize;
            for k in 1..=(hi as usize) {
                table[zero_at + k] = table[zero_at + k - 1] * z;
            }
            for k in 1..=((-lo) as usize) {
                table[zero_at - k] = table[zero_at - k + 1] * zinv;
            }
            mins.push(lo);
            tables.push(table);
        }
        Self { mins, tables }
    }

    #[inline]
    pub(crate) fn power(&self, var: usize, exp: i32) -> Complex64 {
        self.tables[var][(exp - self.mins[var]) as usize]
    }
}
