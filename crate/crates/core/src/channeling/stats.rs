//! Per-tilt transmission statistics and dip characterization.

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// Transmission at one tilt angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransmissionPoint<T> {
    /// Tilt angle (radians).
    pub tilt: T,
    pub n_transmitted: u64,
    pub n_total: u64,
    /// n_transmitted / n_total.
    pub fraction: T,
    /// Binomial standard error √(f(1−f)/n).
    pub stderr: T,
}

impl<T: Real> TransmissionPoint<T> {
    /// Builds the point from raw counts.
    ///
    /// # Panics
    /// If `n_total` is zero or smaller than `n_transmitted` — those are
    /// programming errors, not data conditions.
    pub fn from_counts(tilt: T, n_transmitted: u64, n_total: u64) -> Self {
        assert!(n_total > 0, "transmission point needs at least one trial");
        assert!(
            n_transmitted <= n_total,
            "transmitted count {n_transmitted} exceeds total {n_total}"
        );
        let fraction = lit::<T>(n_transmitted as f64 / n_total as f64);
        let n = lit::<T>(n_total as f64);
        let stderr = (fraction * (T::one() - fraction) / n).sqrt();
        TransmissionPoint {
            tilt,
            n_transmitted,
            n_total,
            fraction,
            stderr,
        }
    }
}

/// Shape summary of a transmission dip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DipStats<T> {
    /// Plateau fraction minus minimum fraction; zero when no dip clears
    /// the noise floor.
    pub depth: T,
    /// Full width at half the dip depth; `None` when the dip is not
    /// significant or a half-depth crossing could not be bracketed.
    pub fwhm: Option<T>,
    /// Tilt of the minimum-fraction grid point (reported even when the
    /// dip is flagged insignificant, as a diagnostic).
    pub center: T,
    /// Whether the dip depth exceeds three combined standard errors of
    /// the plateau estimate and the minimum point.
    pub significant: bool,
}

/// Characterizes the dip of a transmission profile.
///
/// The plateau level is the mean fraction over the outer 20% of grid
/// points on each side (at least one point per side); the dip depth is
/// plateau minus the minimum fraction, and the width is the
/// linearly-interpolated full width where the profile crosses
/// plateau − depth/2. A depth within three combined standard errors of
/// zero — combining the minimum point's error with the plateau mean's —
/// is flagged insignificant and reported as depth 0 with no width, so a
/// flat profile never fabricates a dip.
///
/// The profile must contain at least five points, ordered by tilt.
pub fn dip_statistics<T: Real>(profile: &[TransmissionPoint<T>]) -> Result<DipStats<T>> {
    let n = profile.len();
    if n < 5 {
        return Err(Error::TooFewEntries {
            what: "transmission profile",
            min: 5,
            got: n,
        });
    }
    for point in profile {
        if !(point.tilt.is_finite() && point.fraction.is_finite() && point.stderr.is_finite()) {
            return Err(Error::domain(
                "transmission profile",
                "finite tilt, fraction, and stderr at every point",
                point.tilt,
            ));
        }
    }

    // Plateau: outer 20% of points on each side, at least one per side.
    let k = (n / 5).max(1);
    let edge_points = profile[..k].iter().chain(profile[n - k..].iter());
    let mut plateau = T::zero();
    let mut plateau_var = T::zero();
    for point in edge_points {
        plateau = plateau + point.fraction;
        plateau_var = plateau_var + point.stderr * point.stderr;
    }
    let m = lit::<T>(2.0 * k as f64);
    plateau = plateau / m;
    // Variance of the plateau mean estimate.
    plateau_var = plateau_var / (m * m);

    let (i_min, min_point) = profile
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            a.fraction
                .partial_cmp(&b.fraction)
                .expect("transmission fractions are finite")
        })
        .expect("profile is non-empty");
    let center = min_point.tilt;

    let depth = plateau - min_point.fraction;
    let noise_floor =
        lit::<T>(3.0) * (min_point.stderr * min_point.stderr + plateau_var).sqrt();
    if !(depth > noise_floor) {
        return Ok(DipStats {
            depth: T::zero(),
            fwhm: None,
            center,
            significant: false,
        });
    }

    // Half-depth crossings, walking outward from the minimum.
    let level = plateau - depth / lit::<T>(2.0);
    let left = (0..i_min).rev().find(|&j| profile[j].fraction >= level).map(|j| {
        interpolate_crossing(&profile[j], &profile[j + 1], level)
    });
    let right = (i_min + 1..n).find(|&j| profile[j].fraction >= level).map(|j| {
        interpolate_crossing(&profile[j - 1], &profile[j], level)
    });
    let fwhm = match (left, right) {
        (Some(a), Some(b)) => Some(b - a),
        _ => None,
    };

    Ok(DipStats {
        depth,
        fwhm,
        center,
        significant: true,
    })
}

/// Tilt at which the segment from `a` to `b` crosses `level`, by linear
/// interpolation. Exactly one of the endpoints is above the level by
/// construction of the caller's search.
fn interpolate_crossing<T: Real>(
    a: &TransmissionPoint<T>,
    b: &TransmissionPoint<T>,
    level: T,
) -> T {
    let df = b.fraction - a.fraction;
    if df == T::zero() {
        return (a.tilt + b.tilt) / lit::<T>(2.0);
    }
    a.tilt + (b.tilt - a.tilt) * (level - a.fraction) / df
}
