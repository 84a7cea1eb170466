//! Counter-based randomness: every draw is a pure function of
//! `(seed, stream, counter)`, so trials can run in any order on any number
//! of threads.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(GOLDEN);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

pub fn mix(seed: u64, stream: u64, counter: u64) -> u64 {
    splitmix(splitmix(splitmix(seed) ^ stream) ^ counter)
}

/// Uniform in `[0, 1)` with 53 random bits.
pub fn uniform(seed: u64, stream: u64, counter: u64) -> f64 {
    (mix(seed, stream, counter) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
