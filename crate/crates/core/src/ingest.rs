//! Dataset model and CSV ingestion for the UCI benchmark files and arbitrary
//! user data.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// An n x d feature matrix with optional ground-truth class labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub matrix: Matrix,
    /// Contiguous class indices in `[0, num_classes)`, when ground truth exists.
    pub labels: Option<Vec<usize>>,
    /// Original label strings, indexed by class index.
    pub class_names: Option<Vec<String>>,
    pub feature_names: Option<Vec<String>>,
    /// Free-form source descriptor (file path, generator spec, ...).
    pub provenance: String,
}

impl Dataset {
    /// Validates finiteness and label contiguity before accepting the data.
    pub fn new(
        matrix: Matrix,
        labels: Option<Vec<usize>>,
        class_names: Option<Vec<String>>,
        feature_names: Option<Vec<String>>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        if matrix.n_rows() == 0 || matrix.n_cols() == 0 {
            return Err(Error::EmptyData);
        }
        matrix.check_finite()?;
        if let Some(ref l) = labels {
            if l.len() != matrix.n_rows() {
                return Err(Error::DimensionMismatch {
                    expected: matrix.n_rows(),
                    got: l.len(),
                });
            }
            let k = l.iter().copied().max().map_or(0, |m| m + 1);
            let mut seen = vec![false; k];
            for &lab in l {
                seen[lab] = true;
            }
            if !seen.iter().all(|&s| s) {
                return Err(Error::InvalidConfig(
                    "labels must be contiguous indices starting at 0".into(),
                ));
            }
        }
        Ok(Self {
            matrix,
            labels,
            class_names,
            feature_names,
            provenance: provenance.into(),
        })
    }

    pub fn from_matrix(matrix: Matrix, provenance: impl Into<String>) -> Result<Self> {
        Self::new(matrix, None, None, None, provenance)
    }

    pub fn n(&self) -> usize {
        self.matrix.n_rows()
    }

    pub fn dim(&self) -> usize {
        self.matrix.n_cols()
    }

    /// Number of distinct classes, when labels exist.
    pub fn num_classes(&self) -> Option<usize> {
        self.labels
            .as_ref()
            .map(|l| l.iter().copied().max().map_or(0, |m| m + 1))
    }

    /// Per-class instance counts, when labels exist.
    pub fn class_sizes(&self) -> Option<Vec<usize>> {
        let labels = self.labels.as_ref()?;
        let k = self.num_classes()?;
        let mut counts = vec![0usize; k];
        for &l in labels {
            counts[l] += 1;
        }
        Some(counts)
    }
}

/// Which column of a delimited file plays a role.
#[derive(Debug, Clone, PartialEq)]
pub enum ColumnRef {
    /// Zero-based index into the original file columns.
    Index(usize),
    /// Header name; requires a header row.
    Name(String),
}

/// What to do with rows containing the missing-value token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MissingPolicy {
    #[default]
    DropRow,
}

/// Parsing schema for a delimited text file.
#[derive(Debug, Clone)]
pub struct CsvSchema {
    pub label_column: Option<ColumnRef>,
    /// Original-file column indices dropped before parsing features.
    pub id_columns: Vec<usize>,
    pub missing_value_token: String,
    pub missing_policy: MissingPolicy,
}

impl Default for CsvSchema {
    fn default() -> Self {
        Self {
            label_column: None,
            id_columns: Vec::new(),
            missing_value_token: "?".into(),
            missing_policy: MissingPolicy::DropRow,
        }
    }
}

impl CsvSchema {
    /// iris.data: four numeric features, species string in the last column.
    pub fn iris() -> Self {
        Self {
            label_column: Some(ColumnRef::Index(4)),
            ..Self::default()
        }
    }

    /// wine.data: cultivar class in the first column, 13 numeric features.
    pub fn wine() -> Self {
        Self {
            label_column: Some(ColumnRef::Index(0)),
            ..Self::default()
        }
    }

    /// breast-cancer-wisconsin.data: sample ID first, nine 1-10 features,
    /// benign/malignant class last, missing values marked "?".
    pub fn breast_cancer() -> Self {
        Self {
            label_column: Some(ColumnRef::Index(10)),
            id_columns: vec![0],
            ..Self::default()
        }
    }
}

/// Datasets with published shape descriptions to validate against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedDataset {
    Iris,
    Wine,
    BreastCancer,
}

impl ExpectedDataset {
    pub fn name(&self) -> &'static str {
        match self {
            ExpectedDataset::Iris => "iris",
            ExpectedDataset::Wine => "wine",
            ExpectedDataset::BreastCancer => "breast-cancer",
        }
    }
}

/// One shape check from [`validate_expected`].
#[derive(Debug, Clone)]
pub struct ValidationCheck {
    pub what: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Outcome of comparing a loaded dataset against its published description.
/// Mismatches are warnings, not errors: public copies of these files differ
/// from some published accounts of them.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub dataset: String,
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &ValidationCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.pass { "ok" } else { "WARN" };
            writeln!(
                f,
                "[{tag}] {}: {} expected {}, found {}",
                self.dataset, c.what, c.expected, c.actual
            )?;
        }
        Ok(())
    }
}

/// Loads a delimited text file into a [`Dataset`].
///
/// A header row is assumed when no cell of the first row parses as a number.
/// Rows containing the missing-value token in any cell are handled per the
/// schema policy. Label strings are factored into contiguous class indices in
/// first-seen order. Error positions are 1-based file coordinates.
pub fn load_csv(path: impl AsRef<Path>, schema: &CsvSchema) -> Result<Dataset> {
    let path = path.as_ref();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)?;

    let mut records = Vec::new();
    for rec in reader.records() {
        let rec = rec?;
        if rec.len() == 1 && rec[0].is_empty() {
            continue; // blank line
        }
        records.push(rec);
    }
    if records.is_empty() {
        return Err(Error::EmptyCsv {
            path: path.display().to_string(),
        });
    }

    let has_header = records[0].iter().all(|cell| cell.parse::<f64>().is_err());
    let header: Option<Vec<String>> =
        has_header.then(|| records[0].iter().map(str::to_owned).collect());
    let data_start = usize::from(has_header);

    let label_idx = match &schema.label_column {
        None => None,
        Some(ColumnRef::Index(i)) => Some(*i),
        Some(ColumnRef::Name(name)) => {
            let header = header.as_ref().ok_or_else(|| {
                Error::InvalidConfig(format!(
                    "label column {name:?} requested by name but the file has no header row"
                ))
            })?;
            let idx = header.iter().position(|h| h == name).ok_or_else(|| {
                Error::InvalidConfig(format!("no column named {name:?} in header"))
            })?;
            Some(idx)
        }
    };

    if let Some(li) = label_idx {
        if schema.id_columns.contains(&li) {
            return Err(Error::InvalidConfig(
                "label column also listed as an id column".into(),
            ));
        }
    }

    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut label_strings: Vec<String> = Vec::new();
    'rows: for (rec_idx, rec) in records.iter().enumerate().skip(data_start) {
        for cell in rec.iter() {
            if cell == schema.missing_value_token {
                match schema.missing_policy {
                    MissingPolicy::DropRow => continue 'rows,
                }
            }
        }
        let mut features = Vec::new();
        for (col, cell) in rec.iter().enumerate() {
            if Some(col) == label_idx {
                label_strings.push(cell.to_owned());
                continue;
            }
            if schema.id_columns.contains(&col) {
                continue;
            }
            let v: f64 = cell.parse().map_err(|_| Error::BadCell {
                row: rec_idx + 1,
                col: col + 1,
                value: cell.to_owned(),
            })?;
            features.push(v);
        }
        rows.push(features);
    }

    if rows.is_empty() {
        return Err(Error::EmptyCsv {
            path: path.display().to_string(),
        });
    }

    let (labels, class_names) = if label_idx.is_some() {
        let mut index_of: HashMap<String, usize> = HashMap::new();
        let mut names: Vec<String> = Vec::new();
        let mut labels = Vec::with_capacity(label_strings.len());
        for s in &label_strings {
            let next = names.len();
            let idx = *index_of.entry(s.clone()).or_insert_with(|| {
                names.push(s.clone());
                next
            });
            labels.push(idx);
        }
        (Some(labels), Some(names))
    } else {
        (None, None)
    };

    let feature_names = header.map(|h| {
        h.into_iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != label_idx && !schema.id_columns.contains(i))
            .map(|(_, name)| name)
            .collect()
    });

    Dataset::new(
        Matrix::from_rows(&rows)?,
        labels,
        class_names,
        feature_names,
        path.display().to_string(),
    )
}

/// Loads a CSV, taking a column named `label` (if the header has one) as the
/// ground truth. The format written by the dataset generator round-trips
/// through this.
pub fn load_auto(path: impl AsRef<Path>) -> Result<Dataset> {
    let path = path.as_ref();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(path)?;
    let mut first = csv::StringRecord::new();
    if !reader.read_record(&mut first)? {
        return Err(Error::EmptyCsv {
            path: path.display().to_string(),
        });
    }
    let has_header = first.iter().all(|cell| cell.parse::<f64>().is_err());
    let label_column = if has_header {
        first
            .iter()
            .position(|h| h.eq_ignore_ascii_case("label"))
            .map(ColumnRef::Index)
    } else {
        None
    };
    load_csv(
        path,
        &CsvSchema {
            label_column,
            ..CsvSchema::default()
        },
    )
}

/// Compares a loaded dataset against its published description; all
/// mismatches come back as warnings in the report.
pub fn validate_expected(data: &Dataset, expected: ExpectedDataset) -> ValidationReport {
    // (n, d, classes, per-class sizes) as published.
    let (n, d, k, sizes): (usize, usize, usize, Option<Vec<usize>>) = match expected {
        ExpectedDataset::Iris => (150, 4, 3, Some(vec![50, 50, 50])),
        ExpectedDataset::Wine => (178, 13, 3, Some(vec![59, 78, 48])),
        ExpectedDataset::BreastCancer => (569, 9, 2, None),
    };

    let mut checks = Vec::new();
    let mut push = |what: &str, expected: String, actual: String| {
        let pass = expected == actual;
        checks.push(ValidationCheck {
            what: what.into(),
            expected,
            actual,
            pass,
        });
    };

    push("instance count", n.to_string(), data.n().to_string());
    push("feature count", d.to_string(), data.dim().to_string());
    push(
        "class count",
        k.to_string(),
        data.num_classes()
            .map_or_else(|| "none".into(), |c| c.to_string()),
    );
    if let Some(sizes) = sizes {
        push(
            "class sizes",
            format!("{sizes:?}"),
            data.class_sizes()
                .map_or_else(|| "none".into(), |s| format!("{s:?}")),
        );
    }

    ValidationReport {
        dataset: expected.name().into(),
        checks,
    }
}

/// Rescales every feature to `[0, 1]` by `(x - min) / (max - min)`.
/// Constant features map to 0. Labels and names are untouched.
pub fn min_max_normalize(data: &Dataset) -> Dataset {
    let bounds = data.matrix.column_bounds();
    let mut out = data.matrix.clone();
    for i in 0..out.n_rows() {
        let row = out.row_mut(i);
        for (v, (lo, hi)) in row.iter_mut().zip(&bounds) {
            *v = if hi > lo { (*v - lo) / (hi - lo) } else { 0.0 };
        }
    }
    Dataset {
        matrix: out,
        labels: data.labels.clone(),
        class_names: data.class_names.clone(),
        feature_names: data.feature_names.clone(),
        provenance: format!("{} (min-max normalized)", data.provenance),
    }
}
