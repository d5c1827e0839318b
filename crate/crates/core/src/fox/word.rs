//! Freely reduced words in a free group and the Artin action of braids.

use crate::braid::{reduce_letters, BraidWord};

/// A freely reduced word over generators `x_1..x_n`, encoded as nonzero
/// integers whose sign marks inversion. The strand count is carried by the
/// contexts that use the word, not by the word itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    /// Builds a word, freely reducing the input.
    pub fn new(letters: Vec<i32>) -> Self {
        Self {
            letters: reduce_letters(&letters),
        }
    }

    pub fn identity() -> Self {
        Self {
            letters: Vec::new(),
        }
    }

    /// The generator `x_i` (1-based).
    pub fn generator(i: usize) -> Self {
        Self {
            letters: vec![i as i32],
        }
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

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|&g| -g).collect(),
        }
    }

    /// Reduced concatenation.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.letters.clone();
        for &g in &other.letters {
            if out.last() == Some(&-g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Self { letters: out }
    }

    /// Largest generator index appearing (0 for the empty word).
    pub fn max_generator(&self) -> usize {
        self.letters
            .iter()
            .map(|g| g.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Total exponent: the image under abelianization to a single variable.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }
}

impl std::fmt::Display for FreeWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (idx, &g) in self.letters.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            if g > 0 {
                write!(f, "x{g}")?;
            } else {
                write!(f, "x{}^-1", -g)?;
            }
        }
        Ok(())
    }
}

/// The automorphism of the free group `F_n` induced by a braid word.
///
/// Generator rule: `sigma_i` sends `x_i -> x_i x_{i+1} x_i^-1` and
/// `x_{i+1} -> x_i`, fixing the other generators; inverse letters use the
/// inverse rule. Letters compose left-to-right: processing the next letter
/// substitutes its rule into the images accumulated so far, so the whole
/// word's action is obtained with the first letter outermost. With that
/// convention the Jacobian chain rule reads
/// `fox_matrix(a*b) = fox_matrix(a) * a(fox_matrix(b))`.
#[derive(Debug, Clone)]
pub struct ArtinAction {
    n: usize,
    images: Vec<FreeWord>,
    inverse_images: Vec<FreeWord>,
}

impl ArtinAction {
    pub fn of_braid(b: &BraidWord) -> Self {
        Self {
            n: b.n(),
            images: artin_image(b),
            inverse_images: artin_image(&b.inverse()),
        }
    }

    pub fn identity(n: usize) -> Self {
        let ids: Vec<FreeWord> = (1..=n).map(FreeWord::generator).collect();
        Self {
            n,
            images: ids.clone(),
            inverse_images: ids,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Images of `x_1..x_n`.
    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Applies the automorphism to a word by substituting generator images.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        substitute(&self.images, w)
    }

    /// Applies the `e`-th power of the automorphism (negative `e` uses the
    /// inverse automorphism).
    pub fn apply_power(&self, w: &FreeWord, e: i64) -> FreeWord {
        let images = if e < 0 {
            &self.inverse_images
        } else {
            &self.images
        };
        let mut out = w.clone();
        for _ in 0..e.unsigned_abs() {
            out = substitute(images, &out);
        }
        out
    }
}

/// Substitutes `images[i-1]` for each letter `±i` of `w`, reducing on the fly.
pub(crate) fn substitute(images: &[FreeWord], w: &FreeWord) -> FreeWord {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    let mut push = |g: i32| {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    };
    for &g in w.letters() {
        let image = &images[g.unsigned_abs() as usize - 1];
        if g > 0 {
            for &s in image.letters() {
                push(s);
            }
        } else {
            for &s in image.letters().iter().rev() {
                push(-s);
            }
        }
    }
    FreeWord { letters: out }
}

/// Images of the free generators `x_1..x_n` under the automorphism induced
/// by `b`, letters composed left-to-right (first letter outermost).
pub fn artin_image(b: &BraidWord) -> Vec<FreeWord> {
    let n = b.n();
    let mut images: Vec<FreeWord> = (1..=n).map(FreeWord::generator).collect();
    for &g in b.letters() {
        let i = g.unsigned_abs() as usize - 1;
        if g > 0 {
            // x_i -> I_i I_{i+1} I_i^-1, x_{i+1} -> I_i
            let a = images[i].clone();
            let conj = a.concat(&images[i + 1]).concat(&a.inverse());
            images[i + 1] = std::mem::replace(&mut images[i], conj);
        } else {
            // x_i -> I_{i+1}, x_{i+1} -> I_{i+1}^-1 I_i I_{i+1}
            let b_img = images[i + 1].clone();
            let conj = b_img.inverse().concat(&images[i]).concat(&b_img);
            images[i] = std::mem::replace(&mut images[i + 1], conj);
        }
    }
    images
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn fw(letters: &[i32]) -> FreeWord {
        FreeWord::new(letters.to_vec())
    }

    #[test]
    fn identity_images() {
        let imgs = artin_image(&braid(4, &[]));
        assert_eq!(imgs, vec![fw(&[1]), fw(&[2]), fw(&[3]), fw(&[4])]);
    }

    #[test]
    fn sigma1_images_in_b2() {
        let imgs = artin_image(&braid(2, &[1]));
        assert_eq!(imgs, vec![fw(&[1, 2, -1]), fw(&[1])]);
    }

    #[test]
    fn inverse_rule_round_trips() {
        for letters in [vec![1], vec![-2], vec![1, -2, 1], vec![2, 2, -1]] {
            let b = braid(3, &letters);
            let act = ArtinAction::of_braid(&b);
            let inv = ArtinAction::of_braid(&b.inverse());
            for i in 1..=3 {
                let x = FreeWord::generator(i);
                assert_eq!(act.apply(&inv.apply(&x)), x);
                assert_eq!(inv.apply(&act.apply(&x)), x);
            }
        }
    }

    #[test]
    fn product_of_images_is_fixed() {
        // The Artin action fixes x_1 x_2 ... x_n.
        let product = fw(&[1, 2, 3]);
        for letters in [
            vec![],
            vec![1],
            vec![-2],
            vec![1, 2],
            vec![1, -2, 1, -2],
            vec![2, 2, 1, -2],
        ] {
            let imgs = artin_image(&braid(3, &letters));
            let mut acc = FreeWord::identity();
            for img in &imgs {
                acc = acc.concat(img);
            }
            assert_eq!(acc, product, "failed for {letters:?}");
        }
    }

    #[test]
    fn braid_relation_on_generators() {
        for n in 3..=5 {
            for i in 1..n as i32 - 1 {
                let lhs = artin_image(&braid(n, &[i, i + 1, i]));
                let rhs = artin_image(&braid(n, &[i + 1, i, i + 1]));
                assert_eq!(lhs, rhs, "braid relation failed at n={n}, i={i}");
            }
        }
    }

    #[test]
    fn substitution_matches_word_composition() {
        let a = braid(3, &[1, -2]);
        let b = braid(3, &[2, 1]);
        let ab = a.compose(&b).unwrap();
        let act_a = ArtinAction::of_braid(&a);
        let imgs_b = artin_image(&b);
        let direct = artin_image(&ab);
        // Phi_{ab}(x_j) = Phi_a(Phi_b(x_j))
        let composed: Vec<FreeWord> = imgs_b.iter().map(|w| act_a.apply(w)).collect();
        assert_eq!(direct, composed);
    }
}
