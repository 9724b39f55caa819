//! Empirical joint types and strong typicality.

use super::dist::Joint2;
use super::ProbError;

/// Empirical joint type of a pair of length-`n` sequences: integer counts
/// over the product alphabet, summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointType {
    counts: Vec<u64>,
    rows: usize,
    cols: usize,
    n: u64,
}

impl JointType {
    pub fn new(counts: Vec<u64>, rows: usize, cols: usize) -> Result<Self, ProbError> {
        if counts.len() != rows * cols || rows == 0 || cols == 0 {
            return Err(ProbError::DimensionMismatch(format!(
                "joint type expects {rows}x{cols} = {} counts, got {}",
                rows * cols,
                counts.len()
            )));
        }
        let n: u64 = counts.iter().sum();
        if n == 0 {
            return Err(ProbError::InvalidDistribution(
                "joint type with zero total count".into(),
            ));
        }
        Ok(Self {
            counts,
            rows,
            cols,
            n,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.counts[r * self.cols + c]
    }

    /// Normalized counts as a joint distribution.
    pub fn normalized(&self) -> Joint2 {
        let n = self.n as f64;
        let probs = self.counts.iter().map(|&c| c as f64 / n).collect();
        Joint2::from_vec_unchecked(probs, self.rows, self.cols)
    }

    /// Empirical mutual information of the type, in bits.
    pub fn mutual_info_bits(&self) -> f64 {
        super::info::mutual_info_bits(&self.normalized())
    }
}

/// Joint type of two symbol sequences over alphabets `0..a_size` and
/// `0..b_size`.
pub fn empirical_joint_type(
    a_seq: &[usize],
    b_seq: &[usize],
    a_size: usize,
    b_size: usize,
) -> Result<JointType, ProbError> {
    if a_seq.len() != b_seq.len() {
        return Err(ProbError::LengthMismatch(a_seq.len(), b_seq.len()));
    }
    if a_seq.is_empty() {
        return Err(ProbError::InvalidDistribution(
            "empty sequences have no type".into(),
        ));
    }
    let mut counts = vec![0u64; a_size * b_size];
    for (&a, &b) in a_seq.iter().zip(b_seq) {
        if a >= a_size {
            return Err(ProbError::SymbolOutOfRange {
                symbol: a,
                size: a_size,
            });
        }
        if b >= b_size {
            return Err(ProbError::SymbolOutOfRange {
                symbol: b,
                size: b_size,
            });
        }
        counts[a * b_size + b] += 1;
    }
    JointType::new(counts, a_size, b_size)
}

/// Strong typicality: every normalized count is within `eps` of the reference
/// cell, and cells outside the reference support have zero count.
pub fn is_strongly_typical(t: &JointType, reference: &Joint2, eps: f64) -> bool {
    if t.rows() != reference.rows() || t.cols() != reference.cols() || !(eps > 0.0) {
        return false;
    }
    let n = t.n() as f64;
    for r in 0..t.rows() {
        for c in 0..t.cols() {
            let count = t.get(r, c);
            let p = reference.get(r, c);
            if p == 0.0 {
                if count != 0 {
                    return false;
                }
            } else if (count as f64 / n - p).abs() > eps {
                return false;
            }
        }
    }
    true
}
