//! Fixed workloads shared by the benchmarks.

use bdl_core::BraidWord;

/// The sharp 3-braid used throughout the docs.
pub fn sharp_braid() -> BraidWord {
    BraidWord::parse("1,-2", 3).expect("valid word")
}

/// A longer mixed word in B_5 touching every generator and inverse images.
pub fn b5_word() -> BraidWord {
    BraidWord::parse("1,-2,3,4,-3,2,-1,4,2,-3", 5).expect("valid word")
}

/// A pseudo-Anosov-like stretcher in B_4.
pub fn b4_word() -> BraidWord {
    BraidWord::parse("1,2,-3,1,-2,3", 4).expect("valid word")
}
