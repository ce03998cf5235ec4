//! Fixtures shared by the criterion benchmarks in `benches/`.

use sorder_core::{SParamPoly, SingleAnnihilatorWord, TruncSeries};

/// `z + z²/2 + z³/3 + ...`, a delta series with dense coefficients.
pub fn dense_delta_series(order: usize) -> TruncSeries {
    let coeffs = (0..=order)
        .map(|k| {
            if k == 0 {
                SParamPoly::from_int(0)
            } else {
                SParamPoly::constant(sorder_core::rational::ratio(1, k as i64))
            }
        })
        .collect();
    TruncSeries::new(coeffs, order)
}

pub fn word(l: u32, r: u32) -> SingleAnnihilatorWord {
    SingleAnnihilatorWord::new(l, r).expect("L + R >= 1")
}
