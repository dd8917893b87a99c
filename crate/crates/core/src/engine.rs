//! The two clustering algorithms and their shared objective computations.
//!
//! `Traditional` is Lloyd iteration: nearest-centroid assignment, mean
//! update. `IcdAware` replaces the assignment rule: each candidate cluster j
//! is scored by the point's squared distance to c_j divided by the point's
//! total squared distance to everything outside cluster j, so a point joins
//! the cluster that keeps it close to its center while staying separated
//! from the rest of the data. Both objectives are always reported: WCD (sum
//! of squared member-to-centroid distances) and ICD (sum of squared
//! distances over ordered cross-cluster point pairs).

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{self, squared_euclidean_unchecked, DistanceKind};
use crate::ingest::Dataset;
use crate::matrix::Matrix;

/// How to repair a cluster that lost all members during an update.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EmptyClusterPolicy {
    /// Re-seed the empty centroid at the point farthest from its assigned
    /// cluster's new mean. Keeps k constant and stays deterministic.
    #[default]
    ReseedFarthest,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KMeansConfig {
    pub k: usize,
    pub max_iterations: usize,
    /// Maximum centroid displacement (feature units) below which the run
    /// counts as converged.
    pub convergence_tol: f64,
    /// Metric used by the traditional assignment step. Objectives are always
    /// squared Euclidean.
    pub distance: DistanceKind,
    pub empty_cluster_policy: EmptyClusterPolicy,
    pub rng_seed: u64,
}

impl KMeansConfig {
    pub fn new(k: usize, convergence_tol: f64) -> Self {
        Self {
            k,
            max_iterations: 300,
            convergence_tol,
            distance: DistanceKind::Euclidean,
            empty_cluster_policy: EmptyClusterPolicy::ReseedFarthest,
            rng_seed: 0,
        }
    }

    /// Config with the default data-relative tolerance.
    pub fn for_data(data: &Dataset, k: usize) -> Self {
        Self::new(k, default_convergence_tol(data))
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 2 {
            return Err(Error::KTooSmall { k: self.k });
        }
        if self.max_iterations < 1 {
            return Err(Error::InvalidConfig("max_iterations must be >= 1".into()));
        }
        if !self.convergence_tol.is_finite() || self.convergence_tol < 0.0 {
            return Err(Error::InvalidConfig(
                "convergence_tol must be finite and non-negative".into(),
            ));
        }
        Ok(())
    }
}

/// Default convergence tolerance: 1e-9 of the dataset bounding-box diagonal.
pub fn default_convergence_tol(data: &Dataset) -> f64 {
    1e-9 * data.matrix.bounding_box_diagonal()
}

/// Which assignment rule drives the iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Traditional,
    IcdAware,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::Traditional => write!(f, "traditional"),
            Variant::IcdAware => write!(f, "proposed"),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "traditional" => Ok(Variant::Traditional),
            "proposed" | "icd" | "icd-aware" => Ok(Variant::IcdAware),
            other => Err(format!(
                "unknown variant {other:?}; expected \"traditional\" or \"proposed\""
            )),
        }
    }
}

/// A k x d matrix of cluster centers.
#[derive(Debug, Clone, PartialEq)]
pub struct Centroids {
    pub matrix: Matrix,
}

impl Centroids {
    pub fn k(&self) -> usize {
        self.matrix.n_rows()
    }

    pub fn dim(&self) -> usize {
        self.matrix.n_cols()
    }

    pub fn row(&self, j: usize) -> &[f64] {
        self.matrix.row(j)
    }
}

/// Cluster membership for every point, with per-cluster counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub labels: Vec<usize>,
    pub counts: Vec<usize>,
}

impl Assignment {
    pub fn from_labels(labels: Vec<usize>, k: usize) -> Result<Self> {
        let mut counts = vec![0usize; k];
        for &l in &labels {
            if l >= k {
                return Err(Error::LabelOutOfRange { label: l, k });
            }
            counts[l] += 1;
        }
        Ok(Self { labels, counts })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn k(&self) -> usize {
        self.counts.len()
    }
}

/// Objective values recorded once per iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectiveSample {
    pub wcd: f64,
    pub icd: f64,
    pub relative_cost: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringResult {
    pub centroids: Centroids,
    pub assignment: Assignment,
    pub iterations_used: usize,
    pub wcd: f64,
    pub icd: f64,
    pub relative_cost: f64,
    pub converged: bool,
    pub objective_trace: Vec<ObjectiveSample>,
}

/// Picks k distinct data rows as initial centers, via the first k entries of
/// a seeded random permutation of the row indices.
pub fn initialize_centroids(data: &Dataset, k: usize, rng_seed: u64) -> Result<Centroids> {
    let n = data.n();
    if k < 2 {
        return Err(Error::KTooSmall { k });
    }
    if k > n {
        return Err(Error::KExceedsPoints { k, n });
    }
    let mut indices: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    indices.shuffle(&mut rng);

    let rows: Vec<Vec<f64>> = indices[..k]
        .iter()
        .map(|&i| data.matrix.row(i).to_vec())
        .collect();
    Ok(Centroids {
        matrix: Matrix::from_rows(&rows)?,
    })
}

fn check_shapes(data: &Dataset, centroids: &Centroids, assignment: &Assignment) -> Result<()> {
    if centroids.dim() != data.dim() {
        return Err(Error::DimensionMismatch {
            expected: data.dim(),
            got: centroids.dim(),
        });
    }
    if assignment.n() != data.n() {
        return Err(Error::DimensionMismatch {
            expected: data.n(),
            got: assignment.n(),
        });
    }
    if assignment.k() != centroids.k() {
        return Err(Error::DimensionMismatch {
            expected: centroids.k(),
            got: assignment.k(),
        });
    }
    Ok(())
}

/// Within-cluster distance: sum over clusters of squared Euclidean distances
/// from each member to its cluster center.
pub fn wcd(data: &Dataset, centroids: &Centroids, assignment: &Assignment) -> Result<f64> {
    check_shapes(data, centroids, assignment)?;
    let mut total = 0.0;
    for (i, &label) in assignment.labels.iter().enumerate() {
        total += squared_euclidean_unchecked(data.matrix.row(i), centroids.row(label));
    }
    Ok(total)
}

/// Per-cluster sufficient statistics: member count, mean, and within-cluster
/// scatter (sum of squared distances of members to their mean).
struct ClusterStats {
    counts: Vec<usize>,
    means: Matrix,
    scatters: Vec<f64>,
}

fn cluster_stats(data: &Dataset, labels: &[usize], k: usize) -> ClusterStats {
    let d = data.dim();
    let mut counts = vec![0usize; k];
    let mut means = Matrix::zeros(k, d);
    for (i, &label) in labels.iter().enumerate() {
        counts[label] += 1;
        let row = data.matrix.row(i);
        let m = means.row_mut(label);
        for (acc, &v) in m.iter_mut().zip(row) {
            *acc += v;
        }
    }
    for (j, &c) in counts.iter().enumerate() {
        if c > 0 {
            for v in means.row_mut(j) {
                *v /= c as f64;
            }
        }
    }
    let mut scatters = vec![0.0; k];
    for (i, &label) in labels.iter().enumerate() {
        scatters[label] += squared_euclidean_unchecked(data.matrix.row(i), means.row(label));
    }
    ClusterStats {
        counts,
        means,
        scatters,
    }
}

/// Inter-cluster distance: sum of squared Euclidean distances over all
/// ordered point pairs with different labels.
///
/// Computed from sufficient statistics in O(nd) using the identity that the
/// ordered pairwise sum within a group equals `2 * n_g * scatter_g`: the
/// cross-cluster sum is the all-pairs total minus every within-cluster sum.
/// Returns 0 when every point shares one cluster; the relative cost handles
/// that case.
pub fn icd(data: &Dataset, assignment: &Assignment) -> Result<f64> {
    if assignment.n() != data.n() {
        return Err(Error::DimensionMismatch {
            expected: data.n(),
            got: assignment.n(),
        });
    }
    let k = assignment.k();
    let all = vec![0usize; data.n()];
    let global = cluster_stats(data, &all, 1);
    let total = 2.0 * data.n() as f64 * global.scatters[0];

    let stats = cluster_stats(data, &assignment.labels, k);
    let within: f64 = stats
        .counts
        .iter()
        .zip(&stats.scatters)
        .map(|(&c, &s)| 2.0 * c as f64 * s)
        .sum();

    // Rounding can leave a tiny negative residue when one cluster holds
    // everything.
    Ok((total - within).max(0.0))
}

/// WCD / ICD. Positive infinity marks the degenerate collapse where every
/// point shares a cluster (icd = 0) yet spread remains; two zeros mean
/// all-identical data and cost 0.
pub fn relative_cost(wcd: f64, icd: f64) -> f64 {
    debug_assert!(wcd >= 0.0 && icd >= 0.0);
    if icd > 0.0 {
        wcd / icd
    } else if wcd > 0.0 {
        f64::INFINITY
    } else {
        0.0
    }
}

/// Nearest-centroid assignment under the configured metric. Ties break to
/// the lowest cluster index.
pub fn assign_traditional(
    data: &Dataset,
    centroids: &Centroids,
    distance: DistanceKind,
) -> Result<Assignment> {
    if centroids.dim() != data.dim() {
        return Err(Error::DimensionMismatch {
            expected: data.dim(),
            got: centroids.dim(),
        });
    }
    let k = centroids.k();
    let mut labels = Vec::with_capacity(data.n());
    for row in data.matrix.rows_iter() {
        let mut best = 0usize;
        let mut best_d = f64::INFINITY;
        for j in 0..k {
            // Squared Euclidean orders identically to Euclidean and skips
            // the square root.
            let d = match distance {
                DistanceKind::Euclidean => squared_euclidean_unchecked(row, centroids.row(j)),
                other => geometry::distance(row, centroids.row(j), other)?,
            };
            if d < best_d {
                best_d = d;
                best = j;
            }
        }
        labels.push(best);
    }
    Assignment::from_labels(labels, k)
}

/// ICD-aware assignment. Each candidate cluster j is scored as
///
/// ```text
/// score(i, j) = ||x_i - c_j||^2 / sum over points p outside cluster j of ||x_i - x_p||^2
/// ```
///
/// and the point takes the lowest-scoring cluster (ties to the lowest
/// index). The denominator is the point's ICD contribution if it joins j,
/// evaluated against a provisional nearest-centroid partition of the current
/// centers and expanded through per-cluster sufficient statistics, so the
/// whole pass stays O(nkd). A zero numerator wins outright (the point sits
/// on that center); a zero denominator with spread remaining scores worst.
pub fn assign_icd(data: &Dataset, centroids: &Centroids) -> Result<Assignment> {
    let k = centroids.k();
    if k < 2 {
        return Err(Error::KTooSmall { k });
    }
    let provisional = assign_traditional(data, centroids, DistanceKind::Euclidean)?;
    let stats = cluster_stats(data, &provisional.labels, k);

    let all = vec![0usize; data.n()];
    let global = cluster_stats(data, &all, 1);
    let global_mean = global.means.row(0);
    let global_scatter = global.scatters[0];
    let n = data.n() as f64;

    let mut labels = Vec::with_capacity(data.n());
    for row in data.matrix.rows_iter() {
        // Sum of squared distances from this point to every point.
        let total = n * squared_euclidean_unchecked(row, global_mean) + global_scatter;
        let mut best = 0usize;
        let mut best_score = f64::INFINITY;
        for j in 0..k {
            let num = squared_euclidean_unchecked(row, centroids.row(j));
            // Sum of squared distances from this point to cluster j's members.
            let within =
                stats.counts[j] as f64 * squared_euclidean_unchecked(row, stats.means.row(j))
                    + stats.scatters[j];
            let outside = (total - within).max(0.0);
            let score = if num == 0.0 {
                0.0
            } else if outside > 0.0 {
                num / outside
            } else {
                f64::INFINITY
            };
            if score < best_score {
                best_score = score;
                best = j;
            }
        }
        labels.push(best);
    }
    Assignment::from_labels(labels, k)
}

/// Means of each cluster's members. Empty clusters are repaired per policy.
pub fn update_centroids(
    data: &Dataset,
    assignment: &Assignment,
    k: usize,
    policy: EmptyClusterPolicy,
) -> Result<Centroids> {
    if assignment.n() != data.n() {
        return Err(Error::DimensionMismatch {
            expected: data.n(),
            got: assignment.n(),
        });
    }
    if assignment.k() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            got: assignment.k(),
        });
    }
    let stats = cluster_stats(data, &assignment.labels, k);
    let mut centroids = stats.means;

    let EmptyClusterPolicy::ReseedFarthest = policy;
    let mut taken: Vec<usize> = Vec::new();
    for j in 0..k {
        if stats.counts[j] > 0 {
            continue;
        }
        // Farthest point from its own cluster's fresh mean; skip points
        // already donated to other empty clusters. Ties keep the lowest
        // point index. The donor cluster's mean is left as computed; the
        // next assignment pass moves the point over.
        let mut best_i = None;
        let mut best_d = -1.0;
        for (i, &label) in assignment.labels.iter().enumerate() {
            if taken.contains(&i) {
                continue;
            }
            let d = squared_euclidean_unchecked(data.matrix.row(i), centroids.row(label));
            if d > best_d {
                best_d = d;
                best_i = Some(i);
            }
        }
        let donor = best_i.expect("non-empty dataset always has a reseed candidate");
        taken.push(donor);
        let row = data.matrix.row(donor).to_vec();
        centroids.row_mut(j).copy_from_slice(&row);
    }

    Ok(Centroids { matrix: centroids })
}

fn max_row_displacement(a: &Matrix, b: &Matrix) -> f64 {
    (0..a.n_rows())
        .map(|j| squared_euclidean_unchecked(a.row(j), b.row(j)).sqrt())
        .fold(0.0, f64::max)
}

/// Runs one clustering to convergence from caller-supplied initial centers.
///
/// Taking `initial` as a parameter lets a caller hand bit-identical starting
/// centers to both variants and compare assignment rules in isolation. Each
/// iteration records (WCD, ICD, relative cost) for the fresh assignment
/// against the updated centers; the run stops when the largest centroid
/// displacement falls below the tolerance or the iteration cap is reached.
pub fn run(
    data: &Dataset,
    config: &KMeansConfig,
    variant: Variant,
    initial: &Centroids,
) -> Result<ClusteringResult> {
    config.validate()?;
    if config.k > data.n() {
        return Err(Error::KExceedsPoints {
            k: config.k,
            n: data.n(),
        });
    }
    if initial.k() != config.k {
        return Err(Error::DimensionMismatch {
            expected: config.k,
            got: initial.k(),
        });
    }
    if initial.dim() != data.dim() {
        return Err(Error::DimensionMismatch {
            expected: data.dim(),
            got: initial.dim(),
        });
    }
    initial.matrix.check_finite()?;

    let mut centroids = initial.clone();
    let mut trace: Vec<ObjectiveSample> = Vec::new();
    let mut assignment = None;
    let mut converged = false;
    let mut iterations_used = 0;

    for _ in 0..config.max_iterations {
        let next = match variant {
            Variant::Traditional => assign_traditional(data, &centroids, config.distance)?,
            Variant::IcdAware => assign_icd(data, &centroids)?,
        };
        let updated = update_centroids(data, &next, config.k, config.empty_cluster_policy)?;

        let w = wcd(data, &updated, &next)?;
        let d = icd(data, &next)?;
        trace.push(ObjectiveSample {
            wcd: w,
            icd: d,
            relative_cost: relative_cost(w, d),
        });

        let displacement = max_row_displacement(&centroids.matrix, &updated.matrix);
        centroids = updated;
        assignment = Some(next);
        iterations_used += 1;

        if displacement < config.convergence_tol {
            converged = true;
            break;
        }
        if displacement == 0.0 {
            // Fixed point: nothing can change in further iterations. The
            // converged flag still reflects the tolerance test above.
            break;
        }
    }

    let last = *trace.last().expect("max_iterations >= 1 guarantees a pass");
    Ok(ClusteringResult {
        centroids,
        assignment: assignment.expect("at least one iteration ran"),
        iterations_used,
        wcd: last.wcd,
        icd: last.icd,
        relative_cost: last.relative_cost,
        converged,
        objective_trace: trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dataset(rows: &[Vec<f64>]) -> Dataset {
        Dataset::from_matrix(Matrix::from_rows(rows).unwrap(), "test").unwrap()
    }

    fn centroids(rows: &[Vec<f64>]) -> Centroids {
        Centroids {
            matrix: Matrix::from_rows(rows).unwrap(),
        }
    }

    #[test]
    fn initialize_rejects_bad_k() {
        let d = dataset(&[vec![0.0], vec![1.0], vec![2.0]]);
        assert!(matches!(
            initialize_centroids(&d, 1, 0),
            Err(Error::KTooSmall { .. })
        ));
        assert!(matches!(
            initialize_centroids(&d, 4, 0),
            Err(Error::KExceedsPoints { .. })
        ));
    }

    #[test]
    fn initialize_identical_points_returns_them() {
        let d = dataset(&[vec![2.0, 2.0]; 3]);
        let c = initialize_centroids(&d, 3, 7).unwrap();
        assert_eq!(c.k(), 3);
        for j in 0..3 {
            assert_eq!(c.row(j), &[2.0, 2.0]);
        }
    }

    #[test]
    fn initialize_is_deterministic_and_distinct() {
        let rows: Vec<Vec<f64>> = (0..150).map(|i| vec![i as f64, (i * i) as f64]).collect();
        let d = dataset(&rows);
        let a = initialize_centroids(&d, 3, 42).unwrap();
        let b = initialize_centroids(&d, 3, 42).unwrap();
        assert_eq!(a, b);

        // Distinct rows of the data, recoverable as unique indices.
        let mut picked: Vec<usize> = a
            .matrix
            .rows_iter()
            .map(|r| rows.iter().position(|x| x.as_slice() == r).unwrap())
            .collect();
        picked.sort_unstable();
        picked.dedup();
        assert_eq!(picked.len(), 3);

        let c = initialize_centroids(&d, 3, 43).unwrap();
        assert_ne!(a, c, "different seeds should almost surely differ");
    }

    #[test]
    fn wcd_zero_when_points_sit_on_centroids() {
        let d = dataset(&[vec![0.0, 0.0], vec![5.0, 5.0]]);
        let c = centroids(&[vec![0.0, 0.0], vec![5.0, 5.0]]);
        let a = Assignment::from_labels(vec![0, 1], 2).unwrap();
        assert_eq!(wcd(&d, &c, &a).unwrap(), 0.0);
    }

    #[test]
    fn wcd_two_unit_offsets() {
        let d = dataset(&[vec![1.0, 0.0], vec![5.0, 1.0]]);
        let c = centroids(&[vec![0.0, 0.0], vec![5.0, 0.0]]);
        let a = Assignment::from_labels(vec![0, 1], 2).unwrap();
        assert_eq!(wcd(&d, &c, &a).unwrap(), 2.0);
    }

    #[test]
    fn icd_two_singletons_unit_apart() {
        let d = dataset(&[vec![0.0], vec![1.0]]);
        let a = Assignment::from_labels(vec![0, 1], 2).unwrap();
        // ordered pairs (0,1) and (1,0), each contributing 1
        assert!((icd(&d, &a).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn icd_identical_points_is_zero() {
        let d = dataset(&[vec![3.0, 3.0]; 6]);
        let a = Assignment::from_labels(vec![0, 1, 2, 0, 1, 2], 3).unwrap();
        assert_eq!(icd(&d, &a).unwrap(), 0.0);
    }

    #[test]
    fn icd_single_cluster_is_zero() {
        let d = dataset(&[vec![0.0], vec![1.0], vec![4.0]]);
        let a = Assignment::from_labels(vec![1, 1, 1], 2).unwrap();
        assert_eq!(icd(&d, &a).unwrap(), 0.0);
    }

    #[test]
    fn relative_cost_cases() {
        assert_eq!(relative_cost(2.0, 8.0), 0.25);
        assert_eq!(relative_cost(0.0, 5.0), 0.0);
        assert_eq!(relative_cost(3.0, 0.0), f64::INFINITY);
        assert_eq!(relative_cost(0.0, 0.0), 0.0);
    }

    #[test]
    fn traditional_tie_breaks_to_lowest_index() {
        let d = dataset(&[vec![1.0, 0.0]]);
        let c = centroids(&[vec![0.0, 0.0], vec![5.0, 5.0], vec![2.0, 0.0]]);
        let a = assign_traditional(&d, &c, DistanceKind::Euclidean).unwrap();
        assert_eq!(a.labels, vec![0]);
    }

    #[test]
    fn traditional_zero_distance_wins() {
        let d = dataset(&[vec![5.0, 5.0]]);
        let c = centroids(&[vec![0.0, 0.0], vec![5.0, 5.0], vec![9.0, 9.0]]);
        let a = assign_traditional(&d, &c, DistanceKind::Euclidean).unwrap();
        assert_eq!(a.labels, vec![1]);
    }

    #[test]
    fn traditional_matches_exhaustive_scan() {
        let d = dataset(&[
            vec![0.1, 0.0],
            vec![-0.2, 0.3],
            vec![0.0, -0.1],
            vec![10.2, 9.9],
            vec![9.8, 10.1],
            vec![10.0, 10.0],
        ]);
        let c = centroids(&[vec![0.0, 0.0], vec![10.0, 10.0]]);
        let a = assign_traditional(&d, &c, DistanceKind::Euclidean).unwrap();
        for (i, row) in d.matrix.rows_iter().enumerate() {
            let d0 = squared_euclidean_unchecked(row, c.row(0));
            let d1 = squared_euclidean_unchecked(row, c.row(1));
            let expect = if d0 <= d1 { 0 } else { 1 };
            assert_eq!(a.labels[i], expect);
        }
        assert_eq!(a.counts, vec![3, 3]);
    }

    #[test]
    fn icd_aware_point_on_center_takes_it() {
        let d = dataset(&[vec![0.0, 0.0], vec![4.0, 0.0], vec![4.1, 0.0]]);
        let c = centroids(&[vec![9.0, 9.0], vec![4.0, 0.0]]);
        let a = assign_icd(&d, &c).unwrap();
        assert_eq!(a.labels[1], 1, "zero numerator must win its center");
    }

    #[test]
    fn icd_aware_all_centers_coincident_with_point() {
        let d = dataset(&[vec![1.0, 1.0], vec![2.0, 2.0]]);
        let c = centroids(&[vec![1.0, 1.0], vec![1.0, 1.0]]);
        let a = assign_icd(&d, &c).unwrap();
        assert_eq!(a.labels[0], 0, "degenerate all-zero scores take label 0");
    }

    #[test]
    fn icd_aware_symmetric_midpoint_takes_lowest_index() {
        let d = dataset(&[
            vec![-2.0, 0.0],
            vec![2.0, 0.0],
            vec![0.0, 0.0], // exact midpoint of a mirror-symmetric layout
        ]);
        let c = centroids(&[vec![-2.0, 0.0], vec![2.0, 0.0]]);
        let a = assign_icd(&d, &c).unwrap();
        assert_eq!(a.labels[2], 0);
    }

    #[test]
    fn icd_aware_agrees_with_traditional_on_clear_clusters() {
        let d = dataset(&[
            vec![0.0, 0.1],
            vec![0.1, -0.1],
            vec![-0.1, 0.0],
            vec![8.0, 8.1],
            vec![8.1, 7.9],
            vec![7.9, 8.0],
        ]);
        let c = centroids(&[vec![0.0, 0.0], vec![8.0, 8.0]]);
        let icd_a = assign_icd(&d, &c).unwrap();
        let trad = assign_traditional(&d, &c, DistanceKind::Euclidean).unwrap();
        assert_eq!(icd_a.labels, trad.labels);
    }

    #[test]
    fn icd_aware_keeps_boundary_point_separated_from_far_mass() {
        // Centers at -3 and +4. The point at 0.6 is marginally nearer the
        // +4 center, so raw distance sends it right. But cluster 1's mass
        // sits far away at +8 while the points at -0.5 and -0.4 are close:
        // joining cluster 0 keeps the point separated from fifty far points
        // at the cost of a slightly worse center distance, and the relative
        // score prefers that trade.
        //   score(0) = 3.6^2 / (50 * 7.4^2)      ~ 0.005
        //   score(1) = 3.4^2 / (1.1^2 + 1.0^2)   ~ 5.2
        let mut rows = vec![vec![-0.5], vec![-0.4], vec![0.6]];
        rows.extend(std::iter::repeat(vec![8.0]).take(50));
        let d = dataset(&rows);
        let c = centroids(&[vec![-3.0], vec![4.0]]);
        let trad = assign_traditional(&d, &c, DistanceKind::Euclidean).unwrap();
        let icd_a = assign_icd(&d, &c).unwrap();
        assert_eq!(trad.labels[2], 1, "raw distance prefers the right center");
        assert_eq!(icd_a.labels[2], 0, "relative trade prefers separation");
    }

    #[test]
    fn update_singleton_cluster_is_the_point() {
        let d = dataset(&[vec![3.0, 4.0], vec![0.0, 0.0], vec![2.0, 0.0]]);
        let a = Assignment::from_labels(vec![0, 1, 1], 2).unwrap();
        let c = update_centroids(&d, &a, 2, EmptyClusterPolicy::ReseedFarthest).unwrap();
        assert_eq!(c.row(0), &[3.0, 4.0]);
        assert_eq!(c.row(1), &[1.0, 0.0]);
    }

    #[test]
    fn update_reseeds_empty_cluster_at_farthest_point() {
        let d = dataset(&[vec![0.0], vec![1.0], vec![9.0]]);
        let a = Assignment::from_labels(vec![0, 0, 0], 2).unwrap();
        let c = update_centroids(&d, &a, 2, EmptyClusterPolicy::ReseedFarthest).unwrap();
        // Mean of cluster 0 is 10/3; the farthest member is the point at 9.
        assert_eq!(c.row(1), &[9.0]);
    }

    #[test]
    fn run_converges_on_separated_clusters_both_variants() {
        let rows = vec![
            vec![0.0, 0.0],
            vec![0.2, 0.0],
            vec![0.1, 0.2],
            vec![50.0, 50.0],
            vec![50.2, 50.0],
            vec![50.1, 50.2],
            vec![100.0, 0.0],
            vec![100.2, 0.0],
            vec![100.1, 0.2],
        ];
        let d = dataset(&rows);
        let initial = centroids(&[rows[0].clone(), rows[3].clone(), rows[6].clone()]);
        let config = KMeansConfig::for_data(&d, 3);

        for variant in [Variant::Traditional, Variant::IcdAware] {
            let r = run(&d, &config, variant, &initial).unwrap();
            assert!(r.converged);
            assert!(r.iterations_used <= 3, "{variant}: {}", r.iterations_used);
            let expect = [vec![0.1, 0.2 / 3.0], vec![50.1, 50.0 + 0.2 / 3.0], vec![
                100.1,
                0.2 / 3.0,
            ]];
            for j in 0..3 {
                for (got, want) in r.centroids.row(j).iter().zip(&expect[j]) {
                    assert!((got - want).abs() < 1e-9, "{variant}: centroid {j}");
                }
            }
        }
    }

    #[test]
    fn run_perfect_structure_reaches_zero_wcd() {
        let d = dataset(&[vec![0.0], vec![0.0], vec![7.0], vec![7.0]]);
        let initial = centroids(&[vec![0.0], vec![7.0]]);
        let config = KMeansConfig::for_data(&d, 2);
        let r = run(&d, &config, Variant::Traditional, &initial).unwrap();
        assert_eq!(r.wcd, 0.0);
        assert!(r.converged);
    }

    #[test]
    fn run_is_deterministic() {
        let rows: Vec<Vec<f64>> = (0..40)
            .map(|i| vec![(i % 7) as f64 * 1.3, (i % 5) as f64 - 2.0])
            .collect();
        let d = dataset(&rows);
        let initial = initialize_centroids(&d, 3, 5).unwrap();
        let config = KMeansConfig::for_data(&d, 3);
        for variant in [Variant::Traditional, Variant::IcdAware] {
            let a = run(&d, &config, variant, &initial).unwrap();
            let b = run(&d, &config, variant, &initial).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn run_trace_matches_iterations_and_final_objectives() {
        let rows: Vec<Vec<f64>> = (0..30).map(|i| vec![(i as f64).sin() * 3.0, (i as f64).cos()]).collect();
        let d = dataset(&rows);
        let initial = initialize_centroids(&d, 3, 11).unwrap();
        let config = KMeansConfig::for_data(&d, 3);
        let r = run(&d, &config, Variant::Traditional, &initial).unwrap();
        assert_eq!(r.objective_trace.len(), r.iterations_used);
        let last = r.objective_trace.last().unwrap();
        assert_eq!(last.wcd, r.wcd);
        assert_eq!(last.icd, r.icd);
        assert_eq!(last.relative_cost, r.relative_cost);
        assert_eq!(
            relative_cost(r.wcd, r.icd),
            r.relative_cost,
            "relative cost consistent with its parts"
        );
    }
}
