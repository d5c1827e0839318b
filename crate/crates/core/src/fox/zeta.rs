//! Iterated trace data of the twisted Fox Jacobian.
//!
//! For each power `k`, the diagonal of the Fox matrix of `b^k` (entries
//! tagged with `z^k`) yields two integers: the sum of the diagonal entry
//! norms, and the norm of the collected diagonal sum (word-level collection
//! only — no conjugacy collection). Both are computed without materializing
//! the group-ring matrix: since every Fox-derivative term of a freely
//! reduced word `w` is a signed prefix of `w`, distinct positions give
//! distinct prefixes, and prefixes of different images are equal exactly
//! when they have equal length and the images agree up to that length.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::fox::word::{ArtinAction, FreeWord};

/// Default cap on the total number of group-ring terms per power.
pub const DEFAULT_TERM_CAP: u64 = 10_000_000;

/// Trace data for one power `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaTracePoint {
    pub k: u64,
    /// Sum over the diagonal of the entry norms.
    pub trace_of_norms: u64,
    /// Norm of the collected diagonal sum; never exceeds `trace_of_norms`.
    pub norm_of_collected_trace: u64,
}

/// Computes the trace data for `k = 1..=kmax`.
///
/// The resource guard rejects any power whose free-group images hold more
/// than `term_cap` letters in total (that bounds the term count of the
/// collected trace as well).
pub fn zeta1_trace_data(b: &BraidWord, kmax: u64, term_cap: u64) -> Result<Vec<ZetaTracePoint>> {
    if kmax < 1 {
        return Err(Error::Domain("kmax must be >= 1".into()));
    }
    let n = b.n();
    let action = ArtinAction::of_braid(b);
    let mut images: Vec<FreeWord> = (1..=n).map(FreeWord::generator).collect();
    let mut out = Vec::with_capacity(kmax as usize);
    for k in 1..=kmax {
        images = images.iter().map(|w| action.apply(w)).collect();
        let total_letters: u64 = images.iter().map(|w| w.len() as u64).sum();
        if total_letters > term_cap {
            return Err(Error::ResourceGuard {
                what: "zeta trace term count",
                requested: total_letters,
                cap: term_cap,
            });
        }
        out.push(trace_point(k, &images));
    }
    Ok(out)
}

fn trace_point(k: u64, images: &[FreeWord]) -> ZetaTracePoint {
    let n = images.len();

    // Signed prefix contributions of the diagonal entry d(image_j)/dx_j:
    // letter +j at position p contributes +1 at prefix length p, letter -j
    // at position p contributes -1 at prefix length p+1. Free reduction of
    // the image rules out two contributions at the same length.
    let mut contribs: Vec<Vec<(usize, i8)>> = Vec::with_capacity(n);
    for (jm1, w) in images.iter().enumerate() {
        let target = (jm1 + 1) as i32;
        let mut list = Vec::new();
        for (p, &g) in w.letters().iter().enumerate() {
            if g == target {
                list.push((p, 1i8));
            } else if g == -target {
                list.push((p + 1, -1i8));
            }
        }
        contribs.push(list);
    }
    let trace_of_norms: u64 = contribs.iter().map(|l| l.len() as u64).sum();

    // Common-prefix lengths decide when prefixes of different images
    // collide. All diagonal terms share the z^k tag, so word-level equality
    // is the whole story.
    let mut lcp = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in (a + 1)..n {
            let la = images[a].letters();
            let lb = images[b].letters();
            let mut l = 0;
            while l < la.len() && l < lb.len() && la[l] == lb[l] {
                l += 1;
            }
            lcp[a][b] = l;
            lcp[b][a] = l;
        }
    }

    // Bucket contributions by prefix length, then split each bucket into
    // equality classes and sum signs per class.
    let mut by_len: std::collections::BTreeMap<usize, Vec<(usize, i8)>> = Default::default();
    for (jm1, list) in contribs.iter().enumerate() {
        for &(len, sign) in list {
            by_len.entry(len).or_default().push((jm1, sign));
        }
    }
    let mut norm_of_collected: u64 = 0;
    for (len, bucket) in by_len {
        let mut used = vec![false; bucket.len()];
        for a in 0..bucket.len() {
            if used[a] {
                continue;
            }
            let (ja, sa) = bucket[a];
            let mut sum = sa as i64;
            for b in (a + 1)..bucket.len() {
                if used[b] {
                    continue;
                }
                let (jb, sb) = bucket[b];
                let same = ja == jb || lcp[ja][jb] >= len;
                if same {
                    used[b] = true;
                    sum += sb as i64;
                }
            }
            norm_of_collected += sum.unsigned_abs();
        }
    }

    ZetaTracePoint {
        k,
        trace_of_norms,
        norm_of_collected_trace: norm_of_collected,
    }
}
