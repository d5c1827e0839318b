//! Independent classification of 3-braids through the exact integer Burau
//! matrix at `t = -1`.
//!
//! For `n = 3` the reduced Burau matrix at `t = -1` is a 2x2 integer matrix
//! of determinant 1, and the classical correspondence with `SL(2, Z)`
//! classifies the braid: `|trace| < 2` periodic, `|trace| = 2` reducible
//! (except `±I`, which is periodic), `|trace| > 2` pseudo-Anosov with
//! dilatation the larger root of `x^2 - |trace| x + det`. This is used as a
//! reference value, never derived from the bounds it validates.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::reps::burau_reduced;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BraidClass {
    #[serde(rename = "periodic")]
    Periodic,
    #[serde(rename = "reducible")]
    Reducible,
    #[serde(rename = "pseudo-Anosov")]
    PseudoAnosov,
}

#[derive(Debug, Clone, Serialize)]
pub struct B3Oracle {
    pub class: BraidClass,
    /// Stretch factor, present exactly when the class is pseudo-Anosov.
    pub dilatation: Option<f64>,
}

pub fn b3_oracle(b: &BraidWord) -> Result<B3Oracle> {
    if b.n() != 3 {
        return Err(Error::NotApplicable(format!(
            "the 3-braid oracle needs n = 3, got n = {}",
            b.n()
        )));
    }
    let m = burau_reduced(b)?.matrix.eval_at_minus_one()?;
    let trace = &m[0][0] + &m[1][1];
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];

    let one = BigInt::one();
    let is_plus_identity =
        m[0][0] == one && m[1][1] == one && m[0][1].is_zero() && m[1][0].is_zero();
    let neg = -&one;
    let is_minus_identity =
        m[0][0] == neg && m[1][1] == neg && m[0][1].is_zero() && m[1][0].is_zero();

    let abs_trace = trace.abs();
    let two = BigInt::from(2);
    let class = if abs_trace > two {
        BraidClass::PseudoAnosov
    } else if is_plus_identity || is_minus_identity || abs_trace < two {
        BraidClass::Periodic
    } else {
        BraidClass::Reducible
    };

    let dilatation = if class == BraidClass::PseudoAnosov {
        let tr = abs_trace.to_f64().ok_or_else(|| {
            Error::Numeric("trace too large for floating-point dilatation".into())
        })?;
        let d = det
            .to_f64()
            .ok_or_else(|| Error::Numeric("determinant out of floating range".into()))?;
        // Larger root modulus of x^2 - |tr| x + det.
        let disc = tr * tr - 4.0 * d;
        if disc < 0.0 {
            return Err(Error::Numeric(
                "unexpected complex spectrum for |trace| > 2".into(),
            ));
        }
        Some((tr + disc.sqrt()) / 2.0)
    } else {
        None
    };

    Ok(B3Oracle { class, dilatation })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid(letters: &[i32]) -> BraidWord {
        BraidWord::new(3, letters.to_vec()).unwrap()
    }

    #[test]
    fn golden_pseudo_anosov() {
        let o = b3_oracle(&braid(&[1, -2])).unwrap();
        assert_eq!(o.class, BraidClass::PseudoAnosov);
        let want = (3.0 + 5.0f64.sqrt()) / 2.0;
        assert!((o.dilatation.unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn periodic_and_reducible() {
        // sigma_1 sigma_2 maps to [[0,1],[-1,1]] at t = -1: trace 1.
        let o = b3_oracle(&braid(&[1, 2])).unwrap();
        assert_eq!(o.class, BraidClass::Periodic);
        assert!(o.dilatation.is_none());
        // sigma_1 maps to [[1,1],[0,1]]: trace 2, not ±I.
        let o = b3_oracle(&braid(&[1])).unwrap();
        assert_eq!(o.class, BraidClass::Reducible);
    }

    #[test]
    fn identity_and_full_twist_are_periodic() {
        assert_eq!(b3_oracle(&braid(&[])).unwrap().class, BraidClass::Periodic);
        // (sigma_1 sigma_2)^3 maps to -I at t = -1.
        let o = b3_oracle(&braid(&[1, 2, 1, 2, 1, 2])).unwrap();
        assert_eq!(o.class, BraidClass::Periodic);
    }

    #[test]
    fn wrong_strand_count() {
        let b = BraidWord::new(4, vec![1]).unwrap();
        assert!(matches!(b3_oracle(&b), Err(Error::NotApplicable(_))));
    }
}
