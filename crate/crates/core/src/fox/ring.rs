//! Integer group ring of the free-by-cyclic group `<F_n, z | g z = z f(g)>`
//! attached to a braid's Artin automorphism `f`, together with Fox
//! derivatives and the square matrices they assemble into.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::fox::word::{artin_image, ArtinAction, FreeWord};
use crate::laurent::LaurentPoly;

/// A group element `z^a * w` with `w` a freely reduced word.
///
/// Canonical order for collection is `(z_exp, word)` lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaElement {
    pub z_exp: i64,
    pub word: FreeWord,
}

impl GammaElement {
    pub fn new(z_exp: i64, word: FreeWord) -> Self {
        Self { z_exp, word }
    }
}

/// A finite integer combination of group elements; no zero coefficients are
/// stored and keys are kept in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<GammaElement, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(FreeWord::identity())
    }

    pub fn from_word(word: FreeWord) -> Self {
        Self::single(GammaElement { z_exp: 0, word }, BigInt::one())
    }

    pub fn single(key: GammaElement, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(key, coeff);
        }
        Self { terms }
    }

    pub fn terms(&self) -> &BTreeMap<GammaElement, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, key: GammaElement, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    /// Twisted product: single terms multiply by
    /// `(z^a u)(z^b v) = z^{a+b} f^b(u) v`, extended bilinearly, where `f`
    /// is the braid automorphism `action`.
    pub fn mul(&self, other: &Self, action: &ArtinAction) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let twisted = action.apply_power(&ka.word, kb.z_exp);
                let key = GammaElement {
                    z_exp: ka.z_exp + kb.z_exp,
                    word: twisted.concat(&kb.word),
                };
                out.add_term(key, ca * cb);
            }
        }
        out
    }

    /// Sum of absolute coefficient values after canonical collection.
    pub fn norm(&self) -> BigUint {
        let mut acc = BigUint::zero();
        for c in self.terms.values() {
            acc += c.magnitude();
        }
        acc
    }

    /// Pushes every stored word through `action^e`, keeping `z` exponents.
    pub fn map_words_through(&self, action: &ArtinAction, e: i64) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(
                GammaElement {
                    z_exp: k.z_exp,
                    word: action.apply_power(&k.word, e),
                },
                c.clone(),
            );
        }
        out
    }

    /// Retags every term with the given `z` exponent.
    pub fn with_z_exp(&self, z_exp: i64) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(
                GammaElement {
                    z_exp,
                    word: k.word.clone(),
                },
                c.clone(),
            );
        }
        out
    }

    /// Abelianization `x_j -> t` into the one-variable Laurent ring. Only
    /// defined for untwisted elements (every `z_exp` must be 0).
    pub fn to_laurent_t(&self) -> Result<LaurentPoly> {
        let mut poly = LaurentPoly::zero(1);
        for (k, c) in &self.terms {
            if k.z_exp != 0 {
                return Err(Error::Domain(
                    "cannot abelianize a term with a nonzero z exponent".into(),
                ));
            }
            poly = poly.add(&LaurentPoly::monomial(
                1,
                &[k.word.exponent_sum() as i32],
                c.clone(),
            )?)?;
        }
        Ok(poly)
    }
}

/// Fox derivative of a freely reduced word with respect to `x_i`.
///
/// Satisfies the defining rules `d x_i / d x_i = 1`, `d x_j / d x_i = 0`,
/// `d x_i^-1 / d x_i = -x_i^-1` and the product rule
/// `d(uv) = du + u dv`. Every term is a prefix of `w`, so no collection is
/// needed beyond sign bookkeeping.
pub fn fox_derivative(w: &FreeWord, i: usize, n: usize) -> Result<GroupRingElement> {
    if i == 0 || i > n {
        return Err(Error::Domain(format!(
            "generator index {i} out of range 1..={n}"
        )));
    }
    if w.max_generator() > n {
        return Err(Error::Domain(format!(
            "word uses generator x{} beyond n={n}",
            w.max_generator()
        )));
    }
    let target = i as i32;
    let mut out = GroupRingElement::zero();
    let mut prefix: Vec<i32> = Vec::with_capacity(w.len());
    for &g in w.letters() {
        if g == target {
            out.add_term(
                GammaElement {
                    z_exp: 0,
                    word: FreeWord::new(prefix.clone()),
                },
                BigInt::one(),
            );
        }
        prefix.push(g);
        if g == -target {
            out.add_term(
                GammaElement {
                    z_exp: 0,
                    word: FreeWord::new(prefix.clone()),
                },
                -BigInt::one(),
            );
        }
    }
    Ok(out)
}

/// A rectangular matrix over the group ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElement>,
}

impl GroupRingMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GroupRingElement>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must match dims");
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![GroupRingElement::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = GroupRingElement::one();
        }
        Self {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &GroupRingElement {
        &self.entries[r * self.cols + c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: GroupRingElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn map<F: Fn(&GroupRingElement) -> GroupRingElement>(&self, f: F) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &Self, action: &ArtinAction) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Domain(format!(
                "matrix dims {}x{} * {}x{} do not compose",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = vec![GroupRingElement::zero(); self.rows * other.cols];
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = GroupRingElement::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.entry(r, k).mul(other.entry(k, c), action));
                }
                entries[r * other.cols + c] = acc;
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// Collected diagonal sum (word-level collection only).
    pub fn trace_sum(&self) -> Result<GroupRingElement> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = GroupRingElement::zero();
        for i in 0..self.rows {
            acc = acc.add(self.entry(i, i));
        }
        Ok(acc)
    }

    /// Sum of the norms of the diagonal entries.
    pub fn trace_of_norms(&self) -> Result<BigUint> {
        if self.rows != self.cols {
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

    pub fn total_term_count(&self) -> usize {
        self.entries.iter().map(|e| e.term_count()).sum()
    }
}

/// The `n x n` Fox Jacobian of the braid's Artin automorphism: entry
/// `(i, j)` is the derivative of the image of `x_j` with respect to `x_i`.
pub fn fox_matrix(b: &BraidWord) -> GroupRingMatrix {
    let n = b.n();
    let images = artin_image(b);
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for image in images.iter().take(n) {
            entries.push(fox_derivative(image, i, n).expect("indices in range"));
        }
    }
    GroupRingMatrix::new(n, n, entries)
}
