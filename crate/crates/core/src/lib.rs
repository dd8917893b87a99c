//! k-means clustering with an inter-cluster-distance-aware assignment rule.
//!
//! The library pairs a traditional Lloyd-style k-means with a variant whose
//! assignment step scores each candidate cluster by the ratio of the point's
//! squared distance to the cluster center over the point's total squared
//! distance to everything outside that cluster. Around the two algorithms sit
//! the pieces needed to benchmark them: cluster-count selection
//! (Calinski-Harabasz index plus the elbow rule), synthetic Gaussian mixture
//! generation, CSV dataset ingestion, confusion-matrix scoring with optimal
//! label alignment, and a paired-initialization experiment harness.

pub mod engine;
pub mod error;
pub mod eval;
pub mod geometry;
pub mod harness;
pub mod ingest;
pub mod kselect;
pub mod matrix;
pub mod seed;
pub mod synth;

pub use engine::{
    Assignment, Centroids, ClusteringResult, EmptyClusterPolicy, KMeansConfig, ObjectiveSample,
    Variant,
};
pub use error::{Error, Result};
pub use eval::{ConfusionMatrix, MetricsReport};
pub use geometry::DistanceKind;
pub use harness::{ExperimentResult, ExperimentSpec, PairedSummary};
pub use ingest::{CsvSchema, Dataset, ExpectedDataset};
pub use kselect::KSweepResult;
pub use matrix::Matrix;
pub use synth::SynthSpec;
