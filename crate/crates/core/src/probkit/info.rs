//! Shannon information measures in bits.
//!
//! Conventions: `0 log 0 = 0`; `p log(p/0) = +inf` for `p > 0`. Internals use
//! natural log and convert to bits at the boundary.

use super::dist::{Joint2, Joint3, Pmf};
use super::{ProbError, LN_2};

/// Axis selector for a two-dimensional joint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis2 {
    Rows,
    Cols,
}

/// Axis selector for a three-dimensional joint over U x X x Y.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis3 {
    U,
    X,
    Y,
}

#[inline]
pub(crate) fn neg_p_ln_p(p: f64) -> f64 {
    if p > 0.0 {
        -p * p.ln()
    } else {
        0.0
    }
}

pub(crate) fn entropy_nats(probs: &[f64]) -> f64 {
    probs.iter().map(|&p| neg_p_ln_p(p)).sum()
}

/// KL divergence in nats between two same-length mass vectors.
pub(crate) fn kl_nats(p: &[f64], q: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (&pi, &qi) in p.iter().zip(q) {
        if pi > 0.0 {
            if qi > 0.0 {
                acc += pi * (pi / qi).ln();
            } else {
                return f64::INFINITY;
            }
        }
    }
    acc
}

/// Shannon entropy of a pmf in bits.
pub fn entropy_bits(p: &Pmf) -> f64 {
    entropy_nats(p.probs()) / LN_2
}

/// Joint entropy of a two-dimensional joint in bits.
pub fn joint_entropy_bits(j: &Joint2) -> f64 {
    entropy_nats(j.probs()) / LN_2
}

/// Conditional entropy in bits of the remaining axis given `given`.
pub fn cond_entropy_bits(j: &Joint2, given: Axis2) -> f64 {
    let h_given = match given {
        Axis2::Rows => entropy_nats(j.marginal_rows().probs()),
        Axis2::Cols => entropy_nats(j.marginal_cols().probs()),
    };
    (entropy_nats(j.probs()) - h_given) / LN_2
}

/// Mutual information of a two-dimensional joint in bits.
pub fn mutual_info_bits(j: &Joint2) -> f64 {
    let hr = entropy_nats(j.marginal_rows().probs());
    let hc = entropy_nats(j.marginal_cols().probs());
    let hj = entropy_nats(j.probs());
    ((hr + hc - hj) / LN_2).max(0.0)
}

/// Conditional mutual information in bits of the two remaining axes given
/// the conditioning axis, e.g. `Axis3::Y` yields `I(U;X|Y)`.
pub fn cond_mutual_info_bits(j: &Joint3, given: Axis3) -> f64 {
    // I(B;C|A) = sum p(a,b,c) ln[ p(a,b,c) p(a) / (p(a,b) p(a,c)) ]
    let (nu, nx, ny) = j.dims();
    let (pa, pab, pac): (Pmf, Joint2, Joint2) = match given {
        Axis3::Y => (j.marginal_y(), j.marginal_uy(), j.marginal_xy()),
        Axis3::X => (j.marginal_x(), j.marginal_ux(), j.marginal_xy()),
        Axis3::U => (j.marginal_u(), j.marginal_ux(), j.marginal_uy()),
    };
    let mut acc = 0.0;
    for u in 0..nu {
        for x in 0..nx {
            for y in 0..ny {
                let p = j.get(u, x, y);
                if p <= 0.0 {
                    continue;
                }
                let (a, ab, ac) = match given {
                    Axis3::Y => (pa.get(y), pab.get(u, y), pac.get(x, y)),
                    Axis3::X => (pa.get(x), pab.get(u, x), pac.get(x, y)),
                    Axis3::U => (pa.get(u), pab.get(u, x), pac.get(u, y)),
                };
                acc += p * ((p * a) / (ab * ac)).ln();
            }
        }
    }
    (acc / LN_2).max(0.0)
}

/// KL divergence between two pmfs in bits; `+inf` when the support of `p` is
/// not contained in the support of `q`.
pub fn kl_divergence_bits<T: Distribution>(p: &T, q: &T) -> Result<f64, ProbError> {
    if p.shape() != q.shape() {
        return Err(ProbError::DimensionMismatch(format!(
            "kl divergence shapes {:?} vs {:?}",
            p.shape(),
            q.shape()
        )));
    }
    Ok(kl_nats(p.mass(), q.mass()) / LN_2)
}

/// Anything with a flat mass vector and a shape, for shape-checked divergences.
pub trait Distribution {
    fn mass(&self) -> &[f64];
    fn shape(&self) -> Vec<usize>;
}

impl Distribution for Pmf {
    fn mass(&self) -> &[f64] {
        self.probs()
    }
    fn shape(&self) -> Vec<usize> {
        vec![self.len()]
    }
}

impl Distribution for Joint2 {
    fn mass(&self) -> &[f64] {
        self.probs()
    }
    fn shape(&self) -> Vec<usize> {
        vec![self.rows(), self.cols()]
    }
}

impl Distribution for Joint3 {
    fn mass(&self) -> &[f64] {
        self.probs()
    }
    fn shape(&self) -> Vec<usize> {
        let (nu, nx, ny) = self.dims();
        vec![nu, nx, ny]
    }
}

/// Binary entropy in bits.
pub fn binary_entropy_bits(p: f64) -> Result<f64, ProbError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(ProbError::DomainViolation(format!(
            "binary entropy argument {p} outside [0,1]"
        )));
    }
    Ok((neg_p_ln_p(p) + neg_p_ln_p(1.0 - p)) / LN_2)
}

/// Binary relative entropy `D_b(a || b)` in bits, `+inf` when `b` has smaller
/// support than `a`.
pub fn binary_divergence_bits(a: f64, b: f64) -> Result<f64, ProbError> {
    if !(0.0..=1.0).contains(&a) || !(0.0..=1.0).contains(&b) {
        return Err(ProbError::DomainViolation(format!(
            "binary divergence arguments ({a}, {b}) outside [0,1]"
        )));
    }
    Ok(kl_nats(&[a, 1.0 - a], &[b, 1.0 - b]) / LN_2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probkit::dist::{compose_joint, Kernel};

    fn ternary_p_xy(p: f64) -> Joint2 {
        let rows = [0.5, p, 1.0 - p];
        let mut probs = Vec::new();
        for &r in &rows {
            probs.push((1.0 - r) / 3.0);
            probs.push(r / 3.0);
        }
        Joint2::new(probs, 3, 2).unwrap()
    }

    fn ternary_q_xy(p: f64) -> Joint2 {
        let rows = [p, 0.5, 1.0 - p];
        let mut probs = Vec::new();
        for &r in &rows {
            probs.push((1.0 - r) / 3.0);
            probs.push(r / 3.0);
        }
        Joint2::new(probs, 3, 2).unwrap()
    }

    #[test]
    fn product_joint_has_zero_mutual_info() {
        let p = Pmf::new(vec![0.2, 0.8]).unwrap();
        let q = Pmf::new(vec![0.3, 0.3, 0.4]).unwrap();
        let j = Joint2::product(&p, &q);
        assert!(mutual_info_bits(&j) < 1e-12);
    }

    #[test]
    fn ternary_mutual_info_matches_closed_form() {
        // I(X;Y) = (2/3)(1 - Hb(p)) for the ternary pair construction.
        let p = 0.1;
        let j = ternary_p_xy(p);
        let expected = 2.0 / 3.0 * (1.0 - binary_entropy_bits(p).unwrap());
        assert!((mutual_info_bits(&j) - expected).abs() < 1e-12);
        assert!((mutual_info_bits(&j) - 0.354003).abs() < 1e-6);
    }

    #[test]
    fn ternary_conditional_info_with_identity_kernel() {
        // With U = X, I(X;X|Y) = H(X|Y) = log2(3) - I(X;Y).
        let pair = ternary_p_xy(0.1);
        let j = compose_joint(&Kernel::identity(3), &pair).unwrap();
        let i_uxy = cond_mutual_info_bits(&j, Axis3::Y);
        let expected = 3f64.log2() - mutual_info_bits(&pair);
        assert!((i_uxy - expected).abs() < 1e-9);
        assert!((i_uxy - 1.230960).abs() < 1e-6);
        assert!((i_uxy - cond_entropy_bits(&pair, Axis2::Cols)).abs() < 1e-9);
    }

    #[test]
    fn kl_of_identical_distributions_is_zero() {
        let p = Pmf::new(vec![0.1, 0.2, 0.7]).unwrap();
        assert_eq!(kl_divergence_bits(&p, &p).unwrap(), 0.0);
    }

    #[test]
    fn kl_infinite_outside_support() {
        let p = Pmf::new(vec![0.5, 0.5]).unwrap();
        let q = Pmf::new(vec![1.0, 0.0]).unwrap();
        assert_eq!(kl_divergence_bits(&p, &q).unwrap(), f64::INFINITY);
    }

    #[test]
    fn kl_rejects_shape_mismatch() {
        let a = Joint2::new(vec![0.25; 4], 2, 2).unwrap();
        let b = Joint2::new(vec![0.25; 4], 4, 1).unwrap();
        assert!(kl_divergence_bits(&a, &b).is_err());
    }

    #[test]
    fn ternary_pair_divergence_matches_closed_form() {
        // D(P_XY || Q_XY) = (1/3)(Db(0.5||p) + Db(p||0.5)).
        let p = 0.1;
        let d = kl_divergence_bits(&ternary_p_xy(p), &ternary_q_xy(p)).unwrap();
        let expected = (binary_divergence_bits(0.5, p).unwrap()
            + binary_divergence_bits(p, 0.5).unwrap())
            / 3.0;
        assert!((d - expected).abs() < 1e-12);
        assert!((d - 0.422657).abs() < 1e-6);
    }

    #[test]
    fn binary_helpers_match_tabulated_values() {
        assert!((binary_entropy_bits(0.5).unwrap() - 1.0).abs() < 1e-15);
        assert!((binary_entropy_bits(0.1).unwrap() - 0.468996).abs() < 1e-6);
        assert!((binary_divergence_bits(0.1, 0.5).unwrap() - 0.531004).abs() < 1e-6);
        assert!((binary_divergence_bits(0.5, 0.1).unwrap() - 0.736966).abs() < 1e-6);
        assert_eq!(binary_divergence_bits(0.5, 0.0).unwrap(), f64::INFINITY);
        assert_eq!(binary_divergence_bits(0.0, 0.0).unwrap(), 0.0);
        assert!(binary_entropy_bits(1.2).is_err());
        assert!(binary_divergence_bits(-0.1, 0.5).is_err());
    }

    #[test]
    fn markov_and_chain_identities_for_composed_joints() {
        // U - X - Y under any composed joint: I(U;Y|X) = 0 and
        // I(U;X) = I(U;X|Y) + I(U;Y).
        let kernels = [
            Kernel::identity(3),
            Kernel::constant(3),
            Kernel::new(vec![0.6, 0.4, 0.3, 0.7, 0.5, 0.5], 3, 2).unwrap(),
        ];
        for kernel in &kernels {
            let j = compose_joint(kernel, &ternary_p_xy(0.2)).unwrap();
            assert!(cond_mutual_info_bits(&j, Axis3::X) < 1e-9);
            let i_ux = mutual_info_bits(&j.marginal_ux());
            let i_uy = mutual_info_bits(&j.marginal_uy());
            let i_ux_given_y = cond_mutual_info_bits(&j, Axis3::Y);
            assert!((i_ux - i_ux_given_y - i_uy).abs() < 1e-9);
        }
    }
}
