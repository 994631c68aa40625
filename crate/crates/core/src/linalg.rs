//! Numeric rank and nullspace with an explicit conditioning guard.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Singular values below `REL_THRESHOLD * s_max` count as zero.
pub const REL_THRESHOLD: f64 = 1e-8;
/// Minimum ratio between the smallest kept and the largest discarded
/// singular value for a rank decision to be trusted.
pub const MIN_GAP: f64 = 1e2;

pub fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

pub fn cone() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Largest entry modulus, zero for an empty matrix.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Rank decision on a set of singular values.
#[derive(Clone, Debug, PartialEq)]
pub struct RankDecision {
    pub rank: usize,
    pub threshold: f64,
    /// `s_kept_min / s_discarded_max`, or `s_min / threshold` when nothing
    /// was discarded; infinite when there is no kept value to compare.
    pub gap: f64,
}

pub fn decide_rank(singular_values: &[f64]) -> Result<RankDecision> {
    let mut sv: Vec<f64> = singular_values.to_vec();
    sv.sort_by(|a, b| b.total_cmp(a));
    let s_max = sv.first().copied().unwrap_or(0.0);
    if s_max == 0.0 {
        return Ok(RankDecision {
            rank: 0,
            threshold: 0.0,
            gap: f64::INFINITY,
        });
    }
    let threshold = REL_THRESHOLD * s_max;
    let rank = sv.iter().take_while(|&&s| s > threshold).count();
    let kept_min = sv[rank - 1];
    let gap = match sv.get(rank) {
        Some(&discarded) if discarded > 0.0 => kept_min / discarded,
        Some(_) => f64::INFINITY,
        None => kept_min / threshold,
    };
    if gap < MIN_GAP {
        return Err(Error::Indeterminate(format!(
            "singular value gap {gap:.3e} below {MIN_GAP:.0e} around threshold {threshold:.3e}"
        )));
    }
    Ok(RankDecision { rank, threshold, gap })
}

/// Orthonormal basis of the nullspace of `a`, via the SVD.
pub fn nullspace(a: &CMatrix) -> Result<Vec<CVector>> {
    let cols = a.ncols();
    if cols == 0 {
        return Ok(Vec::new());
    }
    // pad to at least square so the SVD exposes every right singular vector
    let padded = if a.nrows() < cols {
        let mut p = CMatrix::zeros(cols, cols);
        p.view_mut((0, 0), (a.nrows(), cols)).copy_from(a);
        p
    } else {
        a.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    let decision = decide_rank(&sv)?;
    let mut order: Vec<usize> = (0..sv.len()).collect();
    order.sort_by(|&x, &y| sv[y].total_cmp(&sv[x]));
    Ok(order[decision.rank..]
        .iter()
        .map(|&r| v_t.row(r).adjoint())
        .collect())
}

/// Numeric rank of a complex matrix.
pub fn rank(a: &CMatrix) -> Result<RankDecision> {
    if a.is_empty() {
        return decide_rank(&[]);
    }
    let sv: Vec<f64> = a.singular_values().iter().copied().collect();
    decide_rank(&sv)
}

/// Numeric rank of a dense real matrix given row by row.
pub fn real_rank(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> f64) -> Result<RankDecision> {
    if rows == 0 || cols == 0 {
        return decide_rank(&[]);
    }
    let m = faer::Mat::<f64>::from_fn(rows, cols, entry);
    let sv = m
        .singular_values()
        .map_err(|e| Error::Indeterminate(format!("singular value iteration failed: {e:?}")))?;
    decide_rank(&sv)
}

/// `vec(A X B) = (B^T kron A) vec(X)` with column-major `vec`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Reshapes a column-major vector into a `rows x cols` matrix.
pub fn unvec(v: &CVector, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_column_slice(rows, cols, v.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = CMatrix::from_row_slice(2, 3, &[c(1.0), c(2.0), c(3.0), c(2.0), c(4.0), c(6.0)]);
        let ns = nullspace(&a).unwrap();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!((&a * v).norm() < 1e-12);
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rank_and_gap() {
        let d = CMatrix::from_diagonal(&CVector::from_vec(vec![c(1.0), c(0.5), c(1e-14)]));
        let r = rank(&d).unwrap();
        assert_eq!(r.rank, 2);
        let ill = CMatrix::from_diagonal(&CVector::from_vec(vec![c(1.0), c(2e-8)]));
        assert!(matches!(rank(&ill), Err(Error::Indeterminate(_))));
        assert_eq!(real_rank(3, 2, |i, j| (i + j) as f64).unwrap().rank, 2);
        assert_eq!(rank(&CMatrix::zeros(2, 2)).unwrap().rank, 0);
    }

    #[test]
    fn vec_identity() {
        let a = CMatrix::from_fn(2, 2, |i, j| c((i * 2 + j) as f64 + 1.0));
        let x = CMatrix::from_fn(2, 3, |i, j| Complex64::new(i as f64, j as f64));
        let b = CMatrix::from_fn(3, 3, |i, j| c((i + 2 * j) as f64));
        let lhs = &a * &x * &b;
        let vx = CVector::from_column_slice(x.as_slice());
        let rhs = kron(&b.transpose(), &a) * vx;
        assert!((CVector::from_column_slice(lhs.as_slice()) - rhs).norm() < 1e-12);
        assert_eq!(unvec(&CVector::from_column_slice(x.as_slice()), 2, 3), x);
    }
}
