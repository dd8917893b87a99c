//! Distance metrics over points in feature space.
//!
//! Assignment steps may use any metric here; every objective value in the
//! crate (WCD, ICD, Calinski-Harabasz, inertia) uses squared Euclidean
//! distance exclusively.

use crate::error::{Error, Result};

/// Distance metric selector. `Minkowski` requires an exponent `p >= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistanceKind {
    Euclidean,
    Manhattan,
    Chebyshev,
    Minkowski(f64),
}

impl std::fmt::Display for DistanceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DistanceKind::Euclidean => write!(f, "euclidean"),
            DistanceKind::Manhattan => write!(f, "manhattan"),
            DistanceKind::Chebyshev => write!(f, "chebyshev"),
            DistanceKind::Minkowski(p) => write!(f, "minkowski(p={p})"),
        }
    }
}

fn check_dims(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(())
}

/// Metric distance between two equal-dimension points.
pub fn distance(a: &[f64], b: &[f64], kind: DistanceKind) -> Result<f64> {
    check_dims(a, b)?;
    let d = match kind {
        DistanceKind::Euclidean => squared_euclidean(a, b)?.sqrt(),
        DistanceKind::Manhattan => a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum(),
        DistanceKind::Chebyshev => a
            .iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max),
        DistanceKind::Minkowski(p) => {
            if !p.is_finite() || p < 1.0 {
                return Err(Error::InvalidMinkowskiExponent { p });
            }
            a.iter()
                .zip(b)
                .map(|(x, y)| (x - y).abs().powf(p))
                .sum::<f64>()
                .powf(1.0 / p)
        }
    };
    Ok(d)
}

/// Squared Euclidean distance; the building block of every objective.
pub fn squared_euclidean(a: &[f64], b: &[f64]) -> Result<f64> {
    check_dims(a, b)?;
    Ok(squared_euclidean_unchecked(a, b))
}

/// Same as [`squared_euclidean`] without the dimension check, for inner loops
/// that have already validated shapes.
#[inline]
pub(crate) fn squared_euclidean_unchecked(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            d * d
        })
        .sum()
}
