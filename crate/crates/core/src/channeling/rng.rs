//! Deterministic per-trajectory random-number substreams.
//!
//! Every trajectory gets its own generator, keyed purely by
//! (seed, tilt index, trajectory index) — never by execution order — so a
//! scan produces identical results for any thread count. The generator is
//! PCG-64 (128-bit LCG with XSL-RR output): its stream parameter selects
//! among 2¹²⁷ independent sequences, which is exactly the splittable shape
//! this contract needs. Draws are not guaranteed bit-equal across other
//! PRNG choices or library versions, only within this implementation.

use rand_pcg::Pcg64;

/// One step of the splitmix64 sequence: advances `state` by the 64-bit
/// golden ratio and returns a finalized output. Used to expand the user
/// seed into the 128-bit PCG state so that consecutive small seeds map to
/// well-separated states.
pub(crate) fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The substream for one trajectory of one tilt angle.
///
/// The 128-bit PCG state is the first two splitmix64 outputs of `seed`;
/// the stream selector packs the two indices as (tilt_index << 64) |
/// trajectory_index. PCG turns the selector into an odd LCG increment via
/// (stream << 1) | 1, which is injective, so distinct index pairs always
/// get distinct sequences.
pub fn substream_rng(seed: u64, tilt_index: u64, trajectory_index: u64) -> Pcg64 {
    let mut s = seed;
    let hi = splitmix64(&mut s);
    let lo = splitmix64(&mut s);
    let state = (u128::from(hi) << 64) | u128::from(lo);
    let stream = (u128::from(tilt_index) << 64) | u128::from(trajectory_index);
    Pcg64::new(state, stream)
}
