//! Dense complex linear algebra kernel.
//!
//! The one nontrivial primitive is the Hermitian eigendecomposition, realized
//! through the real-symmetric embedding of a d×d Hermitian matrix into a
//! 2d×2d real symmetric matrix. The embedding doubles every eigenvalue's
//! multiplicity; eigenvalues are recovered by averaging adjacent pairs of the
//! sorted doubled spectrum, and eigenvectors by mapping real eigenvectors
//! back to complex ones and orthonormalizing greedily.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

pub const ZERO: C64 = Complex64::new(0.0, 0.0);
pub const ONE: C64 = Complex64::new(1.0, 0.0);

/// Maximum elementwise deviation of `m` from its conjugate transpose.
pub fn hermiticity_deviation(m: &CMat) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let dev = (m[(i, j)] - m[(j, i)].conj()).norm();
            if dev > worst {
                worst = dev;
            }
        }
    }
    worst
}

/// (m + m†)/2.
pub fn symmetrize(m: &CMat) -> CMat {
    let adj = m.adjoint();
    (m + adj).map(|z| z * 0.5)
}

/// Embed the Hermitian matrix h = A + iB into [[A, -B], [B, A]], which is
/// real symmetric exactly when h is Hermitian.
fn real_embedding(h: &CMat) -> DMatrix<f64> {
    let d = h.nrows();
    let mut m = DMatrix::<f64>::zeros(2 * d, 2 * d);
    for i in 0..d {
        for j in 0..d {
            let z = h[(i, j)];
            m[(i, j)] = z.re;
            m[(i, j + d)] = -z.im;
            m[(i + d, j)] = z.im;
            m[(i + d, j + d)] = z.re;
        }
    }
    m
}

/// Eigenvalues of a Hermitian matrix, descending. The input is symmetrized
/// first so that bounded floating-point asymmetry cannot poison the solver.
pub fn hermitian_eigenvalues(m: &CMat) -> Vec<f64> {
    let d = m.nrows();
    if d == 1 {
        return vec![m[(0, 0)].re];
    }
    let h = symmetrize(m);
    let emb = real_embedding(&h);
    let mut vals: Vec<f64> = emb.symmetric_eigen().eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    // each complex eigenvalue appears twice; adjacent after sorting
    (0..d).map(|i| 0.5 * (vals[2 * i] + vals[2 * i + 1])).collect()
}

/// Full Hermitian eigendecomposition: eigenvalues descending, matching
/// orthonormal eigenvectors as columns.
pub fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let d = m.nrows();
    if d == 1 {
        return (vec![m[(0, 0)].re], CMat::identity(1, 1));
    }
    let h = symmetrize(m);
    let emb = real_embedding(&h);
    let eig = emb.symmetric_eigen();

    let mut order: Vec<usize> = (0..2 * d).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).unwrap());

    // A real eigenvector [u; v] of the embedding maps to the complex
    // eigenvector u + iv with the same eigenvalue. Each complex eigenvector
    // appears twice (its partner maps to i times the same vector), so a
    // greedy Gram-Schmidt pass over the sorted candidates selects exactly d.
    let mut values = Vec::with_capacity(d);
    let mut vectors: Vec<CVec> = Vec::with_capacity(d);
    for threshold in [1e-6, 1e-12] {
        for &k in &order {
            if vectors.len() == d {
                break;
            }
            let w = eig.eigenvectors.column(k);
            let mut z = CVec::from_fn(d, |i, _| C64::new(w[i], w[i + d]));
            for v in &vectors {
                let overlap = v.dotc(&z);
                z -= v * overlap;
            }
            let norm = z.norm();
            if norm > threshold {
                vectors.push(z.map(|c| c / norm));
                values.push(eig.eigenvalues[k]);
            }
        }
        if vectors.len() == d {
            break;
        }
    }
    assert_eq!(vectors.len(), d, "eigenvector extraction did not span the space");

    let mut columns = CMat::zeros(d, d);
    for (j, v) in vectors.iter().enumerate() {
        columns.set_column(j, v);
    }
    (values, columns)
}

/// Max elementwise deviation of V†V from the identity.
pub fn isometry_deviation(v: &CMat) -> f64 {
    let gram = v.adjoint() * v;
    let mut worst = 0.0_f64;
    for i in 0..gram.nrows() {
        for j in 0..gram.ncols() {
            let expected = if i == j { ONE } else { ZERO };
            let dev = (gram[(i, j)] - expected).norm();
            if dev > worst {
                worst = dev;
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn mat(rows: &[&[(f64, f64)]]) -> CMat {
        let r = rows.len();
        let c = rows[0].len();
        CMat::from_fn(r, c, |i, j| C64::new(rows[i][j].0, rows[i][j].1))
    }

    #[test]
    fn diagonal_matrix_spectrum() {
        let m = mat(&[
            &[(0.75, 0.0), (0.0, 0.0)],
            &[(0.0, 0.0), (0.25, 0.0)],
        ]);
        let vals = hermitian_eigenvalues(&m);
        assert_relative_eq!(vals[0], 0.75, epsilon = 1e-12);
        assert_relative_eq!(vals[1], 0.25, epsilon = 1e-12);
    }

    #[test]
    fn pauli_y_spectrum_and_vectors() {
        // genuinely complex Hermitian matrix
        let m = mat(&[&[(0.0, 0.0), (0.0, -1.0)], &[(0.0, 1.0), (0.0, 0.0)]]);
        let (vals, vecs) = hermitian_eigen(&m);
        assert_relative_eq!(vals[0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(vals[1], -1.0, epsilon = 1e-12);
        for j in 0..2 {
            let v = vecs.column(j).clone_owned();
            let mv = &m * &v;
            let res = (&mv - v.map(|c| c * vals[j])).norm();
            assert!(res < 1e-10, "residual {res}");
        }
        assert!(isometry_deviation(&vecs) < 1e-10);
    }

    #[test]
    fn degenerate_spectrum_yields_orthonormal_basis() {
        // I/2 on two qubits: fourfold degenerate eigenvalue 0.25
        let m = CMat::identity(4, 4).map(|z| z * 0.25);
        let (vals, vecs) = hermitian_eigen(&m);
        for v in &vals {
            assert_relative_eq!(*v, 0.25, epsilon = 1e-12);
        }
        assert!(isometry_deviation(&vecs) < 1e-10);
    }

    #[test]
    fn reconstruction_roundtrip() {
        // fixed non-trivial Hermitian matrix
        let g = mat(&[
            &[(0.3, 0.1), (-0.2, 0.4), (0.9, -0.3)],
            &[(0.5, -0.7), (0.1, 0.2), (0.0, 0.6)],
            &[(-0.4, 0.2), (0.8, 0.0), (0.3, -0.5)],
        ]);
        let h = &g * g.adjoint();
        let (vals, vecs) = hermitian_eigen(&h);
        let lambda = CMat::from_fn(3, 3, |i, j| {
            if i == j {
                C64::new(vals[i], 0.0)
            } else {
                ZERO
            }
        });
        let rebuilt = &vecs * lambda * vecs.adjoint();
        assert!((&rebuilt - &h).norm() < 1e-9, "roundtrip residual");
        assert!(vals.windows(2).all(|w| w[0] >= w[1] - 1e-12));
    }

    #[test]
    fn hermiticity_deviation_detects_asymmetry() {
        let mut m = CMat::identity(2, 2);
        m[(0, 1)] = C64::new(0.0, 0.5);
        m[(1, 0)] = C64::new(0.0, 0.5); // conjugate would be -0.5i
        assert!(hermiticity_deviation(&m) > 0.9);
        assert!(hermiticity_deviation(&symmetrize(&m)) < 1e-15);
    }
}
