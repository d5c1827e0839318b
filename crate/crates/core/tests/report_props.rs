//! Report-level invariants.

use bdl_core::report::checks::seeded_pa_3braids;
use bdl_core::report::render::bound_report_json;
use bdl_core::{analyze, b3_oracle, AnalyzeOptions, BraidClass, BraidWord};

#[test]
fn pa_braids_sharp_at_minus_one_with_argmax_near_pi() {
    // For oracle-certified pseudo-Anosov 3-braids the spectrum peaks
    // strictly at t = -1, so the sharpness flag must come with an argmax
    // within one refined grid step of angle pi. (Flat spectra, e.g. the
    // identity braid, satisfy the gap test everywhere and carry no
    // argmax-location promise.)
    let opts = AnalyzeOptions::default();
    let refined_step = std::f64::consts::TAU / opts.grid as f64 / 64.0;
    for b in seeded_pa_3braids(10, 6) {
        let r = analyze(&b, &opts).unwrap();
        assert!(r.sharpness.at_minus1, "{}", b.to_text());
        let report_angle = {
            let c = &r.bounds.burau.argmax_t;
            c.im.atan2(c.re).rem_euclid(std::f64::consts::TAU)
        };
        assert!(
            (report_angle - std::f64::consts::PI).abs() <= refined_step + 1e-9,
            "{}: argmax angle {report_angle}",
            b.to_text()
        );
        let lambda = b3_oracle(&b).unwrap().dilatation.unwrap();
        assert!((r.bounds.burau.sup - lambda).abs() <= 1e-6);
    }
}

#[test]
fn oracle_matches_classification_on_known_families() {
    // Powers of a single generator stay reducible; torus words are
    // periodic; stretching words are pseudo-Anosov.
    for k in 1..=4i64 {
        let b = BraidWord::new(3, vec![1]).unwrap().power(k);
        assert_eq!(b3_oracle(&b).unwrap().class, BraidClass::Reducible);
    }
    for word in [vec![1, 2], vec![1, 2, 1], vec![1, 2, 1, 2]] {
        let b = BraidWord::new(3, word).unwrap();
        assert_eq!(b3_oracle(&b).unwrap().class, BraidClass::Periodic);
    }
    for word in [vec![1, -2], vec![1, 1, -2], vec![1, -2, 1, -2]] {
        let b = BraidWord::new(3, word).unwrap();
        assert_eq!(b3_oracle(&b).unwrap().class, BraidClass::PseudoAnosov);
    }
}

#[test]
fn report_json_round_trips_through_serde() {
    let b = BraidWord::new(3, vec![1, -2]).unwrap();
    let opts = AnalyzeOptions {
        with_lkb: true,
        with_zeta1: true,
        kmax: 6,
        grid: 64,
        refine: 2,
        ..Default::default()
    };
    let report = analyze(&b, &opts).unwrap();
    let text = bound_report_json(&report);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["schema_version"], 1);
    assert_eq!(value["n"], 3);
    assert!(value["bounds"]["lkb"]["bound"].as_f64().unwrap() >= 1.0);
    assert_eq!(value["zeta1"]["k_values"].as_array().unwrap().len(), 6);
    // Coefficient-style sequences are decimal strings.
    assert!(value["zeta1"]["trace_of_norms"][0].is_string());
}
