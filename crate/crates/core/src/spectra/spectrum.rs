use std::fmt;

/// Relative tolerance for merging numerically equal eigenvalues.
pub const GROUPING_REL_TOL: f64 = 1e-7;

/// Where an eigenvalue came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// Block-difference vectors inside a single block.
    BlockDiff,
    /// Block-constant lift of a quotient eigenvector.
    Quotient,
    /// A grouped value fed by both routes.
    Mixed,
    /// Dense diagonalization of the full matrix.
    Dense,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::BlockDiff => "block",
            Provenance::Quotient => "quotient",
            Provenance::Mixed => "mixed",
            Provenance::Dense => "dense",
        }
    }

    fn merge(self, other: Provenance) -> Provenance {
        if self == other {
            self
        } else {
            Provenance::Mixed
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenspace {
    pub value: f64,
    pub multiplicity: usize,
    pub provenance: Provenance,
    /// `multiplicity` vectors spanning the space, when requested.
    pub basis: Option<Vec<Vec<f64>>>,
}

/// One unsorted eigenpair before grouping.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpair {
    pub value: f64,
    pub provenance: Provenance,
    pub vector: Option<Vec<f64>>,
}

/// Eigenvalues grouped by tolerance, sorted descending. Multiplicities sum
/// to `dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    dim: usize,
    eigenspaces: Vec<Eigenspace>,
}

impl Spectrum {
    /// Groups consecutive sorted values within `GROUPING_REL_TOL * max(1, scale)`.
    /// A group's value is the mean of its members.
    pub fn from_pairs(mut pairs: Vec<Eigenpair>, scale: f64) -> Spectrum {
        let dim = pairs.len();
        pairs.sort_by(|a, b| b.value.total_cmp(&a.value));
        let tol = GROUPING_REL_TOL * scale.abs().max(1.0);
        let with_vectors = pairs.iter().all(|p| p.vector.is_some());
        let mut eigenspaces: Vec<Eigenspace> = Vec::new();
        let mut last = f64::NAN;
        let mut sum = 0.0;
        for p in pairs {
            let joins = eigenspaces.last().is_some() && (last - p.value).abs() <= tol;
            if joins {
                let e = eigenspaces.last_mut().expect("checked");
                e.multiplicity += 1;
                e.provenance = e.provenance.merge(p.provenance);
                sum += p.value;
                e.value = sum / e.multiplicity as f64;
                if let (Some(b), Some(v)) = (e.basis.as_mut(), p.vector) {
                    b.push(v);
                }
            } else {
                sum = p.value;
                eigenspaces.push(Eigenspace {
                    value: p.value,
                    multiplicity: 1,
                    provenance: p.provenance,
                    basis: if with_vectors { p.vector.map(|v| vec![v]) } else { None },
                });
            }
            last = p.value;
        }
        Spectrum { dim, eigenspaces }
    }

    /// Convenience for plain values with one provenance.
    pub fn from_values(values: &[f64], provenance: Provenance) -> Spectrum {
        let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        Spectrum::from_pairs(
            values
                .iter()
                .map(|&value| Eigenpair {
                    value,
                    provenance,
                    vector: None,
                })
                .collect(),
            scale,
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eigenspaces(&self) -> &[Eigenspace] {
        &self.eigenspaces
    }

    pub fn has_vectors(&self) -> bool {
        self.eigenspaces.iter().all(|e| e.basis.is_some())
    }

    /// Every eigenvalue repeated by multiplicity, descending.
    pub fn values(&self) -> Vec<f64> {
        self.eigenspaces
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.eigenspaces.iter().fold(0.0, |m, e| m.max(e.value.abs()))
    }
}

/// Largest elementwise gap between two descending value lists of equal length.
pub fn max_value_gap(a: &[f64], b: &[f64]) -> Option<f64> {
    (a.len() == b.len()).then(|| a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs())))
}
