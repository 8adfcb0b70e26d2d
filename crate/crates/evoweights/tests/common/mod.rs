#![allow(dead_code)]

use evoweights::{
    normalize, ColumnSpec, NormalizationSpec, NormalizedMatrix, RawDataset, Strategy,
};

/// Vienna office listings: rent (EUR), size (m^2), rooms, balcony.
pub const OFFICE_RAW: [[f64; 4]; 15] = [
    [4348.0, 138.0, 3.0, 0.0],
    [2647.0, 133.0, 4.0, 0.0],
    [7413.0, 460.0, 7.0, 0.0],
    [5644.0, 329.0, 6.0, 0.0],
    [5979.0, 252.0, 6.0, 1.0],
    [5016.0, 219.0, 6.0, 0.0],
    [1106.0, 123.0, 2.0, 0.0],
    [4409.0, 175.0, 5.0, 0.0],
    [7708.0, 230.0, 8.0, 0.0],
    [5143.0, 159.0, 4.0, 0.0],
    [1650.0, 133.0, 3.0, 0.0],
    [7933.0, 383.0, 14.5, 1.0],
    [7912.0, 314.0, 7.0, 0.0],
    [8442.0, 335.0, 7.0, 0.0],
    [3218.0, 165.0, 3.0, 0.0],
];

/// The normalized office matrix, published to four decimals.
pub const REFERENCE_PHI: [[f64; 4]; 15] = [
    [0.6160, 0.3000, 0.2069, 0.0000],
    [0.8175, 0.2891, 0.2759, 0.0000],
    [0.2529, 1.0000, 0.4828, 0.0000],
    [0.4624, 0.7152, 0.4138, 0.0000],
    [0.4228, 0.5478, 0.4138, 1.0000],
    [0.5368, 0.4761, 0.4138, 0.0000],
    [1.0000, 0.2674, 0.1379, 0.0000],
    [0.6087, 0.3804, 0.3448, 0.0000],
    [0.2180, 0.5000, 0.5517, 0.0000],
    [0.5218, 0.3457, 0.2759, 0.0000],
    [0.9356, 0.2891, 0.2069, 0.0000],
    [0.1913, 0.8326, 1.0000, 1.0000],
    [0.1938, 0.6826, 0.4828, 0.0000],
    [0.1310, 0.7283, 0.4828, 0.0000],
    [0.7498, 0.3587, 0.2069, 0.0000],
];

pub const REFERENCE_MEANS: [f64; 4] = [0.5106, 0.5142, 0.3931, 0.1333];

/// Weight iterates from the uniform start, published to four decimals.
pub const REFERENCE_TRAJECTORY: [[f64; 4]; 11] = [
    [0.2500, 0.2500, 0.2500, 0.2500],
    [0.2421, 0.2419, 0.2497, 0.2664],
    [0.2358, 0.2354, 0.2487, 0.2802],
    [0.2307, 0.2302, 0.2475, 0.2917],
    [0.2266, 0.2261, 0.2462, 0.3011],
    [0.2234, 0.2228, 0.2450, 0.3088],
    [0.2209, 0.2202, 0.2440, 0.3149],
    [0.2189, 0.2182, 0.2431, 0.3198],
    [0.2173, 0.2166, 0.2424, 0.3237],
    [0.2161, 0.2154, 0.2418, 0.3267],
    [0.2151, 0.2144, 0.2413, 0.3291],
];

pub const REFERENCE_GAMMA_STAR: [f64; 4] = [0.2117, 0.2109, 0.2395, 0.3378];

pub const REFERENCE_IMPACT_NORM: f64 = 0.0739;
pub const REFERENCE_QUALIFIED_IMPACT_NORM: f64 = 0.1785;
pub const REFERENCE_FEATURE_IMPACT: [f64; 4] = [0.18397, 0.15454, 0.20651, 0.33780];

/// Row indices best first under uniform weights, with the published scores.
pub const UNIFORM_ORDER: [usize; 15] = [11, 4, 2, 3, 10, 5, 6, 1, 12, 13, 7, 14, 8, 9, 0];
pub const UNIFORM_SCORES: [f64; 15] = [
    0.755979, 0.596097, 0.433915, 0.397865, 0.357897, 0.356680, 0.351331, 0.345613, 0.339790,
    0.335508, 0.333501, 0.328854, 0.317420, 0.285828, 0.280716,
];

/// Same under the equilibrium weights.
pub const STAR_ORDER: [usize; 15] = [11, 4, 2, 3, 5, 10, 6, 12, 1, 13, 7, 14, 8, 9, 0];
pub const STAR_SCORES: [f64; 15] = [
    0.793484, 0.641988, 0.380130, 0.347898, 0.313203, 0.308616, 0.301152, 0.300664, 0.300134,
    0.297003, 0.291728, 0.283968, 0.283780, 0.249463, 0.243249,
];

pub fn office_dataset() -> RawDataset {
    RawDataset::from_rows(OFFICE_RAW.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// Rent is a cost pinned to 1 at its minimum; size and rooms are gains
/// relative to their maxima; balcony is already binary.
pub fn office_spec() -> NormalizationSpec {
    NormalizationSpec::new(vec![
        ColumnSpec::new(Strategy::ShiftedInvertedMax),
        ColumnSpec::new(Strategy::MaxRatio),
        ColumnSpec::new(Strategy::MaxRatio),
        ColumnSpec::new(Strategy::Identity),
    ])
}

pub fn office_phi() -> NormalizedMatrix {
    normalize(&office_dataset(), &office_spec()).unwrap()
}

/// The two-row family `[(1, 0), (0.5 + xi, 0.5 - xi)]` whose equilibrium
/// moves linearly in `xi`.
pub fn two_row_family(xi: f64) -> NormalizedMatrix {
    NormalizedMatrix::from_rows(vec![vec![1.0, 0.0], vec![0.5 + xi, 0.5 - xi]]).unwrap()
}
