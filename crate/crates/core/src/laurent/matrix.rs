//! Matrices over the Laurent ring: exact products and powers, entrywise
//! norms, unit-torus evaluation, and exact inversion for matrices whose
//! determinant is a unit of the ring.

use nalgebra::DMatrix;
use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::poly::{check_unit_point, LaurentPoly, PowerTables};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    var_count: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Domain(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        let var_count = entries.first().map(|p| p.var_count()).unwrap_or(1);
        for e in &entries {
            if e.var_count() != var_count {
                return Err(Error::VarCountMismatch {
                    left: var_count,
                    right: e.var_count(),
                });
            }
        }
        Ok(Self {
            rows,
            cols,
            var_count,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize, var_count: usize) -> Self {
        Self {
            rows,
            cols,
            var_count,
            entries: vec![LaurentPoly::zero(var_count); rows * cols],
        }
    }

    pub fn identity(n: usize, var_count: usize) -> Self {
        let mut m = Self::zero(n, n, var_count);
        for i in 0..n {
            m.entries[i * n + i] = LaurentPoly::one(var_count);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn entry(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: LaurentPoly) -> Result<()> {
        if v.var_count() != self.var_count {
            return Err(Error::VarCountMismatch {
                left: self.var_count,
                right: v.var_count(),
            });
        }
        self.entries[r * self.cols + c] = v;
        Ok(())
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn map<F: Fn(&LaurentPoly) -> LaurentPoly>(&self, f: F) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            var_count: self.var_count,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.entry(r, c).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            var_count: self.var_count,
            entries,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Domain("matrix dims differ in add".into()));
        }
        let entries: Result<Vec<_>> = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Self::new(self.rows, self.cols, entries?)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        self.map(|p| p.scale(k))
    }

    pub fn scale_poly(&self, f: &LaurentPoly) -> Result<Self> {
        let entries: Result<Vec<_>> = self.entries.iter().map(|p| p.mul(f)).collect();
        Self::new(self.rows, self.cols, entries?)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Domain(format!(
                "matrix dims {}x{} * {}x{} do not compose",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.var_count != other.var_count {
            return Err(Error::VarCountMismatch {
                left: self.var_count,
                right: other.var_count,
            });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = LaurentPoly::zero(self.var_count);
                for k in 0..self.cols {
                    let prod = self.entry(r, k).mul(other.entry(k, c))?;
                    acc = acc.add(&prod)?;
                }
                entries.push(acc);
            }
        }
        Self::new(self.rows, other.cols, entries)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = Self::identity(self.rows, self.var_count);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = LaurentPoly::zero(self.var_count);
        for i in 0..self.rows {
            acc = acc.add(self.entry(i, i))?;
        }
        Ok(acc)
    }

    /// Entrywise norms.
    pub fn matrix_norm(&self) -> Vec<Vec<BigUint>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.entry(r, c).norm()).collect())
            .collect()
    }

    /// Sum of the diagonal entry norms.
    pub fn trace_of_norm(&self) -> Result<BigUint> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = BigUint::zero();
        for i in 0..self.rows {
            acc += self.entry(i, i).norm();
        }
        Ok(acc)
    }

    /// Norm of the collected diagonal sum.
    pub fn norm_of_trace(&self) -> Result<BigUint> {
        Ok(self.trace()?.norm())
    }

    pub fn total_term_count(&self) -> usize {
        self.entries.iter().map(|p| p.term_count()).sum()
    }

    /// Exponent ranges wide enough for every entry, per variable.
    pub(crate) fn exponent_ranges(&self) -> Vec<(i32, i32)> {
        let mut ranges = vec![(0i32, 0i32); self.var_count];
        for p in &self.entries {
            if let Some(rs) = p.exponent_ranges() {
                for (acc, r) in ranges.iter_mut().zip(rs) {
                    acc.0 = acc.0.min(r.0);
                    acc.1 = acc.1.max(r.1);
                }
            }
        }
        ranges
    }

    /// Evaluates every entry at a unit-torus point.
    pub fn eval(&self, point: &[Complex64]) -> Result<DMatrix<Complex64>> {
        check_unit_point(self.var_count, point)?;
        let tables = PowerTables::from_ranges(&self.exponent_ranges(), point);
        Ok(self.eval_with_tables(&tables))
    }

    pub(crate) fn eval_with_tables(&self, tables: &PowerTables) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.entry(r, c).eval_with_tables(tables)
        })
    }

    /// Exact integer evaluation at `t = -1` (one-variable matrices).
    pub fn eval_at_minus_one(&self) -> Result<Vec<Vec<BigInt>>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.entry(r, c).eval_at_minus_one())
                    .collect()
            })
            .collect()
    }

    /// Exact inverse for matrices invertible over the Laurent ring (the
    /// determinant must be a unit, i.e. `±` a monomial).
    ///
    /// Runs the Faddeev–LeVerrier recursion to get the adjugate and the
    /// determinant with exact integer arithmetic, then divides by the unit.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }

        // a_1 = A, c_k = -tr(a_k)/k, a_{k+1} = A (a_k + c_k I).
        let mut a_k = self.clone();
        let mut c_k = a_k.trace()?.neg();
        let mut adj_body = Self::identity(n, self.var_count); // a_{n-1} + c_{n-1} I at loop end
        for k in 2..=n {
            adj_body = a_k.add(&Self::identity(n, self.var_count).scale_poly(&c_k)?)?;
            a_k = self.mul(&adj_body)?;
            c_k = divide_by_int(&a_k.trace()?.neg(), k as i64)?;
        }
        // det = (-1)^n c_n; adj = (-1)^{n-1} (a_{n-1} + c_{n-1} I).
        let det = if n.is_multiple_of(2) {
            c_k.clone()
        } else {
            c_k.neg()
        };
        let adj = if n == 1 {
            Self::identity(1, self.var_count)
        } else if !n.is_multiple_of(2) {
            adj_body
        } else {
            adj_body.map(|p| p.neg())
        };

        if det.is_zero() || !det.is_unit_monomial() {
            return Err(Error::NotInvertible(format!(
                "determinant {} is not a unit monomial",
                det.display_with(&vec!["x"; self.var_count])
            )));
        }
        let (exps, coeff) = det.terms().iter().next().expect("nonzero det");
        let inv_exps: Vec<i32> = exps.iter().map(|e| -e).collect();
        let det_inv = LaurentPoly::monomial(self.var_count, &inv_exps, coeff.clone())?;
        let inverse = adj.scale_poly(&det_inv)?;

        let check = self.mul(&inverse)?;
        if check != Self::identity(n, self.var_count) {
            return Err(Error::NotInvertible("inverse verification failed".into()));
        }
        Ok(inverse)
    }
}

/// Exact division of every coefficient by a nonzero integer.
fn divide_by_int(p: &LaurentPoly, k: i64) -> Result<LaurentPoly> {
    let kk = BigInt::from(k);
    let mut out = LaurentPoly::zero(p.var_count());
    for (e, c) in p.terms() {
        let (q, r) = num_integer::Integer::div_rem(c, &kk);
        if !r.is_zero() {
            return Err(Error::Numeric(format!(
                "inexact integer division by {k} in characteristic recursion"
            )));
        }
        out = out.add(&LaurentPoly::monomial(p.var_count(), e, q)?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> LaurentPoly {
        LaurentPoly::variable(1, 0)
    }

    fn int(k: i64) -> BigInt {
        BigInt::from(k)
    }

    fn m2(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> LaurentMatrix {
        LaurentMatrix::new(2, 2, vec![a, b, c, d]).unwrap()
    }

    #[test]
    fn trace_norms_example() {
        // A = [[t,1],[0,2]]: norm_of_trace = |t+2| = 3, trace_of_norm = 1+2 = 3.
        let a = m2(
            t(),
            LaurentPoly::one(1),
            LaurentPoly::zero(1),
            LaurentPoly::constant(1, int(2)),
        );
        assert_eq!(a.norm_of_trace().unwrap(), BigUint::from(3u32));
        assert_eq!(a.trace_of_norm().unwrap(), BigUint::from(3u32));
    }

    #[test]
    fn eval_multiplicativity() {
        let a = m2(
            t(),
            LaurentPoly::one(1),
            LaurentPoly::monomial(1, &[-1], int(2)).unwrap(),
            LaurentPoly::constant(1, int(-1)),
        );
        let b = m2(
            LaurentPoly::monomial(1, &[2], int(1)).unwrap(),
            LaurentPoly::zero(1),
            t(),
            LaurentPoly::one(1),
        );
        let point = [Complex64::from_polar(1.0, 0.9)];
        let prod = a.mul(&b).unwrap().eval(&point).unwrap();
        let sep = a.eval(&point).unwrap() * b.eval(&point).unwrap();
        assert!((prod - sep).norm() < 1e-12);
    }

    #[test]
    fn inverse_of_unit_det_matrix() {
        // [[t, 1], [0, -1]] has determinant -t.
        let a = m2(
            t(),
            LaurentPoly::one(1),
            LaurentPoly::zero(1),
            LaurentPoly::constant(1, int(-1)),
        );
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), LaurentMatrix::identity(2, 1));
        assert_eq!(inv.mul(&a).unwrap(), LaurentMatrix::identity(2, 1));
    }

    #[test]
    fn inverse_rejects_non_unit_det() {
        // [[t+1, 0], [0, 1]] has determinant t+1: not a unit.
        let a = m2(
            t().add(&LaurentPoly::one(1)).unwrap(),
            LaurentPoly::zero(1),
            LaurentPoly::zero(1),
            LaurentPoly::one(1),
        );
        assert!(matches!(a.inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn one_by_one_inverse() {
        let a = LaurentMatrix::new(1, 1, vec![LaurentPoly::monomial(1, &[3], int(-1)).unwrap()])
            .unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), LaurentMatrix::identity(1, 1));
    }
}
