//! Braid words in the Artin generators of `B_n`.
//!
//! A word is a list of nonzero letters `g` with `1 <= |g| <= n-1`; `g > 0`
//! stands for the generator `sigma_g` and `g < 0` for its inverse. Words are
//! kept at the word level only: free reduction cancels adjacent `(g, -g)`
//! pairs, but braid relations are never applied and braid-group equality is
//! never decided here.

use crate::error::{Error, Result};

/// A word in the Artin generators of the braid group on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a word from raw letters, validating the generator range.
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("strand count must be >= 2, got {n}")));
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize >= n {
                return Err(Error::GeneratorRange { letter: g, n });
            }
        }
        Ok(Self { n, letters })
    }

    /// The identity braid on `n` strands.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// Parses the text format `"g1,g2,...,gk"`; the empty string is the
    /// identity braid. The word is returned as written, without free
    /// reduction.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Self::new(n, Vec::new());
        }
        let mut letters = Vec::new();
        for tok in trimmed.split(',') {
            let tok = tok.trim();
            let g: i32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))?;
            if g == 0 {
                return Err(Error::Parse("braid letter 0 is not a generator".into()));
            }
            letters.push(g);
        }
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenates two words on the same strand count and freely reduces.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            n: self.n,
            letters: reduce_letters(&letters),
        })
    }

    /// The inverse word: reversed letter list with every letter negated.
    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().rev().map(|&g| -g).collect(),
        }
    }

    /// `k`-th power for any integer `k`; negative powers use the inverse.
    pub fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.letters.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        Self {
            n: self.n,
            letters: reduce_letters(&letters),
        }
    }

    /// Cancels adjacent `(g, -g)` pairs to a fixed point.
    pub fn free_reduce(&self) -> Self {
        Self {
            n: self.n,
            letters: reduce_letters(&self.letters),
        }
    }

    /// Sum of the letter signs; a homomorphism onto the integers, invariant
    /// under both free reduction and the braid relations.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }

    /// The permutation induced on strand positions, letters acting
    /// left-to-right. See [`Permutation`] for the composition convention.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.n).collect();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize - 1;
            images.swap(i, i + 1);
        }
        Permutation { images }
    }

    /// Text form accepted by [`BraidWord::parse`].
    pub fn to_text(&self) -> String {
        self.letters
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Stack-based free reduction of a letter list.
pub(crate) fn reduce_letters(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &g in letters {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

/// A permutation of `{1, ..., n}` stored as its image list.
///
/// Composition convention: a braid word acts on the position list
/// left-to-right, each letter swapping two adjacent entries, so
/// `images[p-1]` is the starting position of the strand that ends at
/// position `p`. As functions this makes the right factor act first:
/// `a.compose(b).permutation()` equals
/// `b.permutation().then(a.permutation())`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// Builds from an image list (1-based values), checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Domain(format!("not a permutation: {images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// 1-based image list.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Diagrammatic composition: applies `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.n(), next.n(), "permutation size mismatch");
        Permutation {
            images: self.images.iter().map(|&v| next.images[v - 1]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn parse_basic() {
        assert_eq!(BraidWord::parse("1,-2", 3).unwrap().letters(), &[1, -2]);
        assert_eq!(BraidWord::parse("", 3).unwrap().letters(), &[] as &[i32]);
        assert_eq!(BraidWord::parse(" 1 , -2 ", 3).unwrap().letters(), &[1, -2]);
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(matches!(
            BraidWord::parse("3", 3),
            Err(Error::GeneratorRange { letter: 3, n: 3 })
        ));
        assert!(matches!(BraidWord::parse("0", 3), Err(Error::Parse(_))));
        assert!(matches!(BraidWord::parse("1,x", 3), Err(Error::Parse(_))));
        assert!(matches!(
            BraidWord::parse("-5", 4),
            Err(Error::GeneratorRange { letter: -5, n: 4 })
        ));
    }

    #[test]
    fn parse_does_not_reduce() {
        assert_eq!(BraidWord::parse("1,-1", 3).unwrap().letters(), &[1, -1]);
    }

    #[test]
    fn compose_cancels() {
        let a = w(3, &[1]);
        let b = w(3, &[-1]);
        assert!(a.compose(&b).unwrap().is_empty());
    }

    #[test]
    fn compose_rejects_mismatched_n() {
        let a = w(3, &[1]);
        let b = w(4, &[1]);
        assert!(matches!(
            a.compose(&b),
            Err(Error::StrandMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn inverse_reverses_and_negates() {
        assert_eq!(w(3, &[1, -2]).inverse().letters(), &[2, -1]);
    }

    #[test]
    fn power_concatenates() {
        assert_eq!(w(3, &[1, -2]).power(2).letters(), &[1, -2, 1, -2]);
        assert_eq!(w(3, &[1, -2]).power(-1).letters(), &[2, -1]);
        assert!(w(3, &[1, -2]).power(0).is_empty());
    }

    #[test]
    fn free_reduce_fixed_point() {
        let word = w(3, &[1, 2, -2, -1, 1]);
        let red = word.free_reduce();
        assert_eq!(red.letters(), &[1]);
        assert_eq!(red.free_reduce(), red);
    }

    #[test]
    fn permutation_examples() {
        // [1,-2] in B_3 sends positions (1,2,3) to (2,3,1).
        assert_eq!(w(3, &[1, -2]).permutation().images(), &[2, 3, 1]);
        assert!(w(3, &[]).permutation().is_identity());
        assert!(w(3, &[1, 1]).permutation().is_identity());
        assert_eq!(w(3, &[1, 1]).exponent_sum(), 2);
        assert_eq!(w(3, &[1, -2]).exponent_sum(), 0);
    }

    #[test]
    fn permutation_composition_convention() {
        let a = w(4, &[1, 3]);
        let b = w(4, &[2, -1]);
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.permutation(), b.permutation().then(&a.permutation()));
    }
}
