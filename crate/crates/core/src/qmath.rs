//! Dense complex linear algebra for the handful of small Hermitian systems in
//! this crate: one system qubit and two ancilla qubits, 8x8 at most.
//!
//! Tensor ordering is fixed as `S (x) A1 (x) A2` everywhere. A basis index of
//! the three-qubit register is `i = 4*s + 2*a1 + a2`, where each bit is `0`
//! for the ground state (`sigma_z = +1`) and `1` for the excited state. The
//! system qubit is therefore the most significant bit.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Numerical tolerances shared by every module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max `|H - H^dagger|` entry accepted as input to [`hermitian_expm`].
    pub hermiticity: f64,
    /// Max `|U^dagger U - I|` entry of a collision unitary.
    pub unitarity: f64,
    /// Max `|Tr rho - 1|` of a density matrix.
    pub trace: f64,
    /// Max `|rho - rho^dagger|` entry of a density matrix.
    pub state_hermiticity: f64,
    /// Smallest eigenvalue a density matrix may have.
    pub positivity: f64,
    /// Slack on the qubit positivity bound `|c|^2 <= p(1-p)`.
    pub qubit_positivity: f64,
}

pub const TOLERANCES: Tolerances = Tolerances {
    hermiticity: 1e-10,
    unitarity: 1e-11,
    trace: 1e-12,
    state_hermiticity: 1e-12,
    positivity: 1e-10,
    qubit_positivity: 1e-12,
};

/// Row-major dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::BadShape {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Real diagonal matrix.
    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = C64::new(v, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry modulus of `self - self^dagger`.
    pub fn hermiticity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0_f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Largest entry modulus of `U^dagger U - I`.
    pub fn unitarity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        (&(&self.adjoint() * self) - &Self::identity(self.rows)).max_abs()
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `Tr[self * other]` without forming the product.
    pub fn trace_product(&self, other: &Self) -> C64 {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..self.rows {
            for k in 0..self.cols {
                acc += self[(i, k)] * other[(k, i)];
            }
        }
        acc
    }

    fn to_nalgebra(&self) -> DMatrix<C64> {
        DMatrix::from_row_slice(self.rows, self.cols, &self.data)
    }

    fn from_nalgebra(m: &DMatrix<C64>) -> Self {
        let (rows, cols) = m.shape();
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = m[(i, j)];
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "add shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "sub shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, " ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Pauli matrices and the 2x2 identity.
pub mod pauli {
    use super::{ComplexMatrix, C64};

    pub fn identity() -> ComplexMatrix {
        ComplexMatrix::identity(2)
    }

    pub fn x() -> ComplexMatrix {
        let (o, l) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0));
        ComplexMatrix {
            rows: 2,
            cols: 2,
            data: vec![o, l, l, o],
        }
    }

    pub fn y() -> ComplexMatrix {
        let o = C64::new(0.0, 0.0);
        ComplexMatrix {
            rows: 2,
            cols: 2,
            data: vec![o, C64::new(0.0, -1.0), C64::new(0.0, 1.0), o],
        }
    }

    pub fn z() -> ComplexMatrix {
        ComplexMatrix::diag(&[1.0, -1.0])
    }
}

/// Kronecker product `a (x) b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let s = a[(i, j)];
            for k in 0..b.rows {
                for l in 0..b.cols {
                    out[(i * b.rows + k, j * b.cols + l)] = s * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Kronecker product of a list of factors, left to right.
pub fn kron_all(factors: &[&ComplexMatrix]) -> ComplexMatrix {
    let mut iter = factors.iter();
    let first = iter.next().expect("kron_all needs at least one factor");
    iter.fold((*first).clone(), |acc, m| kron(&acc, m))
}

/// Eigenvalues (ascending) and eigenvectors (as columns) of a Hermitian matrix.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    check_hermitian(h)?;
    let eig = h.to_nalgebra().symmetric_eigen();
    let mut order: Vec<usize> = (0..h.rows).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut vectors = ComplexMatrix::zeros(h.rows, h.rows);
    for (col, &k) in order.iter().enumerate() {
        for row in 0..h.rows {
            vectors[(row, col)] = eig.eigenvectors[(row, k)];
        }
    }
    Ok((values, vectors))
}

/// Eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    check_hermitian(h)?;
    if h.rows == 2 {
        // closed form; this sits on the hot path of every trace distance
        let a = h[(0, 0)].re;
        let d = h[(1, 1)].re;
        let mean = 0.5 * (a + d);
        let radius = (0.5 * (a - d)).hypot(h[(0, 1)].norm());
        return Ok(vec![mean - radius, mean + radius]);
    }
    let mut values: Vec<f64> = h
        .to_nalgebra()
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

fn check_hermitian(h: &ComplexMatrix) -> Result<()> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch {
            left: h.rows,
            right: h.cols,
        });
    }
    let deviation = h.hermiticity_deviation();
    if deviation > TOLERANCES.hermiticity {
        return Err(Error::NonHermitianInput { deviation });
    }
    Ok(())
}

/// `exp(-i H t)` through the spectral decomposition `V exp(-i Lambda t) V^dagger`.
pub fn hermitian_expm(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    check_hermitian(h)?;
    let eig = h.to_nalgebra().symmetric_eigen();
    let phases = DMatrix::from_diagonal(
        &eig.eigenvalues
            .map(|lambda| C64::from_polar(1.0, -lambda * t)),
    );
    let v = &eig.eigenvectors;
    let u = v * phases * v.adjoint();
    Ok(ComplexMatrix::from_nalgebra(&u))
}

/// Qubit factor of the three-qubit register.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Site {
    System,
    Ancilla1,
    Ancilla2,
}

impl Site {
    fn position(self) -> usize {
        match self {
            Site::System => 0,
            Site::Ancilla1 => 1,
            Site::Ancilla2 => 2,
        }
    }
}

/// Partial trace keeping the listed sites.
///
/// An 8x8 input is read as `S (x) A1 (x) A2`; a 4x4 input as `S (x) A1`
/// (the intermediate after tracing out `A2`). The kept sites stay in register
/// order regardless of the order of `keep`.
pub fn partial_trace(rho: &ComplexMatrix, keep: &[Site]) -> Result<ComplexMatrix> {
    let n_qubits = match (rho.rows, rho.cols) {
        (8, 8) => 3,
        (4, 4) => 2,
        (r, c) => return Err(Error::BadFactorization { dim: r.max(c) }),
    };
    let mut kept: Vec<usize> = keep.iter().map(|s| s.position()).collect();
    kept.sort_unstable();
    kept.dedup();
    if kept.iter().any(|&p| p >= n_qubits) {
        return Err(Error::BadFactorization { dim: rho.rows });
    }
    let traced: Vec<usize> = (0..n_qubits).filter(|p| !kept.contains(p)).collect();
    let bit = |pos: usize| 1usize << (n_qubits - 1 - pos);

    // scatter the bits of a reduced index into full-register positions
    let spread = |small: usize, positions: &[usize]| -> usize {
        positions.iter().enumerate().fold(0, |acc, (k, &pos)| {
            if small & (1 << (positions.len() - 1 - k)) != 0 {
                acc | bit(pos)
            } else {
                acc
            }
        })
    };

    let out_dim = 1 << kept.len();
    let env_dim = 1 << traced.len();
    let mut out = ComplexMatrix::zeros(out_dim, out_dim);
    for i in 0..out_dim {
        let row = spread(i, &kept);
        for j in 0..out_dim {
            let col = spread(j, &kept);
            let mut acc = C64::new(0.0, 0.0);
            for e in 0..env_dim {
                let env = spread(e, &traced);
                acc += rho[(row | env, col | env)];
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        validate_state(&m)?;
        Ok(Self(m))
    }

    /// Wraps without validation; for states produced by trace-preserving maps
    /// of already validated states.
    pub(crate) fn new_unchecked(m: ComplexMatrix) -> Self {
        Self(m)
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self(ComplexMatrix::identity(dim).scale(C64::new(1.0 / dim as f64, 0.0)))
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn partial_trace(&self, keep: &[Site]) -> Result<DensityMatrix> {
        partial_trace(&self.0, keep).map(DensityMatrix)
    }
}

/// Checks the three density-matrix invariants at [`TOLERANCES`].
pub fn validate_state(m: &ComplexMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::InvalidState(format!(
            "not square: {}x{}",
            m.rows, m.cols
        )));
    }
    let herm = m.hermiticity_deviation();
    if herm > TOLERANCES.state_hermiticity {
        return Err(Error::InvalidState(format!(
            "not Hermitian: deviation {herm:e}"
        )));
    }
    let tr = m.trace();
    if (tr.re - 1.0).abs() > TOLERANCES.trace || tr.im.abs() > TOLERANCES.trace {
        return Err(Error::InvalidState(format!("trace {tr} != 1")));
    }
    let min_eig = hermitian_eigenvalues(m)?[0];
    if min_eig < -TOLERANCES.positivity {
        return Err(Error::InvalidState(format!(
            "negative eigenvalue {min_eig:e}"
        )));
    }
    Ok(())
}

/// Trace distance `1/2 sum |eig(a - b)|`.
pub fn trace_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let diff = &a.0 - &b.0;
    Ok(0.5
        * hermitian_eigenvalues(&diff)?
            .iter()
            .map(|l| l.abs())
            .sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn random_hermitian(dim: usize, seed: u64) -> ComplexMatrix {
        // small LCG so the kernel tests do not depend on the rng crates
        let mut state = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let mut h = ComplexMatrix::zeros(dim, dim);
        for i in 0..dim {
            h[(i, i)] = c(next(), 0.0);
            for j in i + 1..dim {
                let z = c(next(), next());
                h[(i, j)] = z;
                h[(j, i)] = z.conj();
            }
        }
        h
    }

    fn random_state(dim: usize, seed: u64) -> DensityMatrix {
        let a = random_hermitian(dim, seed);
        let pos = &a * &a.adjoint();
        let tr = pos.trace().re;
        DensityMatrix::new(pos.scale(c(1.0 / tr, 0.0))).unwrap()
    }

    #[test]
    fn kron_identity_and_diagonal() {
        assert_eq!(
            kron(&pauli::identity(), &pauli::identity()),
            ComplexMatrix::identity(4)
        );
        assert_eq!(
            kron(&pauli::z(), &pauli::identity()),
            ComplexMatrix::diag(&[1.0, 1.0, -1.0, -1.0])
        );
    }

    #[test]
    fn kron_xx_is_antidiagonal() {
        let xx = kron(&pauli::x(), &pauli::x());
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i + j == 3 { 1.0 } else { 0.0 };
                assert_eq!(xx[(i, j)], c(expected, 0.0), "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn expm_of_zero_is_identity() {
        let u = hermitian_expm(&ComplexMatrix::zeros(8, 8), 1.7).unwrap();
        assert!((&u - &ComplexMatrix::identity(8)).max_abs() < 1e-15);
    }

    #[test]
    fn expm_of_diagonal_generator() {
        let h = pauli::z().scale(c(1.0, 0.0)); // (omega/2) sigma_z with omega = 2
        let u = hermitian_expm(&h, PI / 2.0).unwrap();
        assert!((u[(0, 0)] - C64::from_polar(1.0, -PI / 2.0)).norm() < 1e-15);
        assert!((u[(1, 1)] - C64::from_polar(1.0, PI / 2.0)).norm() < 1e-15);
        assert!(u[(0, 1)].norm() < 1e-15 && u[(1, 0)].norm() < 1e-15);
    }

    #[test]
    fn expm_random_8x8_is_unitary_and_inverts() {
        for seed in 0..20 {
            let h = random_hermitian(8, seed).scale(c(3.0, 0.0));
            let u = hermitian_expm(&h, 0.3).unwrap();
            assert!(u.unitarity_deviation() <= TOLERANCES.unitarity);
            let back = hermitian_expm(&h, -0.3).unwrap();
            assert!((&(&u * &back) - &ComplexMatrix::identity(8)).max_abs() <= 1e-11);
        }
    }

    #[test]
    fn expm_matches_taylor_series_for_small_generator() {
        let h = random_hermitian(4, 99);
        let t = 1e-3;
        // 1 - iHt - H^2 t^2 / 2 + i H^3 t^3 / 6
        let h2 = &h * &h;
        let h3 = &h2 * &h;
        let series = &(&(&ComplexMatrix::identity(4) - &h.scale(c(0.0, t)))
            - &h2.scale(c(t * t / 2.0, 0.0)))
            + &h3.scale(c(0.0, t.powi(3) / 6.0));
        let u = hermitian_expm(&h, t).unwrap();
        assert!((&u - &series).max_abs() < 1e-12);
    }

    #[test]
    fn expm_rejects_non_hermitian() {
        let mut h = ComplexMatrix::zeros(2, 2);
        h[(0, 1)] = c(1.0, 0.0);
        assert!(matches!(
            hermitian_expm(&h, 1.0),
            Err(Error::NonHermitianInput { .. })
        ));
    }

    #[test]
    fn partial_trace_of_product_state() {
        let s = random_state(2, 1);
        let a1 = random_state(2, 2);
        let a2 = random_state(2, 3);
        let full = kron_all(&[s.matrix(), a1.matrix(), a2.matrix()]);
        let got = partial_trace(&full, &[Site::System]).unwrap();
        assert!((&got - s.matrix()).max_abs() < 1e-15);
        let a1_got = partial_trace(&full, &[Site::Ancilla1]).unwrap();
        assert!((&a1_got - a1.matrix()).max_abs() < 1e-15);
        let pair = partial_trace(&full, &[Site::System, Site::Ancilla1]).unwrap();
        assert!((&pair - &kron(s.matrix(), a1.matrix())).max_abs() < 1e-15);
        // two-stage trace through the 4x4 intermediate
        let staged = partial_trace(&pair, &[Site::System]).unwrap();
        assert!((&staged - s.matrix()).max_abs() < 1e-15);
    }

    #[test]
    fn partial_trace_of_maximally_mixed() {
        let got = DensityMatrix::maximally_mixed(8)
            .partial_trace(&[Site::System])
            .unwrap();
        assert!((got.matrix() - DensityMatrix::maximally_mixed(2).matrix()).max_abs() < 1e-15);
    }

    #[test]
    fn partial_trace_preserves_trace_and_hermiticity() {
        for seed in 0..10 {
            let rho = random_state(8, seed);
            let red = rho.partial_trace(&[Site::System]).unwrap();
            assert!((red.matrix().trace() - c(1.0, 0.0)).norm() < 1e-12);
            assert!(red.matrix().hermiticity_deviation() < 1e-12);
            validate_state(red.matrix()).unwrap();
        }
    }

    #[test]
    fn partial_trace_rejects_bad_dimensions() {
        let m = ComplexMatrix::identity(6);
        assert_eq!(
            partial_trace(&m, &[Site::System]),
            Err(Error::BadFactorization { dim: 6 })
        );
        let m4 = ComplexMatrix::identity(4);
        assert!(partial_trace(&m4, &[Site::Ancilla2]).is_err());
    }

    #[test]
    fn trace_distance_examples() {
        let a = DensityMatrix::new(ComplexMatrix::diag(&[1.0, 0.0])).unwrap();
        let b = DensityMatrix::new(ComplexMatrix::diag(&[0.0, 1.0])).unwrap();
        assert_eq!(trace_distance(&a, &a).unwrap(), 0.0);
        assert!((trace_distance(&a, &b).unwrap() - 1.0).abs() < 1e-15);
        let p = DensityMatrix::new(ComplexMatrix::diag(&[0.7, 0.3])).unwrap();
        let q = DensityMatrix::new(ComplexMatrix::diag(&[0.5, 0.5])).unwrap();
        assert!((trace_distance(&p, &q).unwrap() - 0.2).abs() < 1e-15);
        let big = DensityMatrix::maximally_mixed(4);
        assert_eq!(
            trace_distance(&p, &big),
            Err(Error::DimensionMismatch { left: 2, right: 4 })
        );
    }

    #[test]
    fn trace_distance_8x8_uses_general_eigensolver() {
        let a = random_state(8, 5);
        let b = random_state(8, 6);
        let d = trace_distance(&a, &b).unwrap();
        assert!(d > 0.0 && d <= 1.0);
        assert!((trace_distance(&b, &a).unwrap() - d).abs() < 1e-12);
    }

    #[test]
    fn validate_state_catches_each_invariant() {
        assert!(validate_state(&ComplexMatrix::diag(&[0.6, 0.6])).is_err());
        assert!(validate_state(&ComplexMatrix::diag(&[1.2, -0.2])).is_err());
        let mut m = ComplexMatrix::diag(&[0.5, 0.5]);
        m[(0, 1)] = c(0.1, 0.0);
        assert!(validate_state(&m).is_err());
        m[(1, 0)] = c(0.1, 0.0);
        assert!(validate_state(&m).is_ok());
    }

    #[test]
    fn two_by_two_eigenvalues_agree_with_general_path() {
        let h = random_hermitian(2, 17);
        let fast = hermitian_eigenvalues(&h).unwrap();
        let (slow, _) = hermitian_eigen(&h).unwrap();
        for (a, b) in fast.iter().zip(&slow) {
            assert!((a - b).abs() < 1e-14);
        }
    }
}
