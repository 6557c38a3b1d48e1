//! Labeled multi-subsystem register algebra.
//!
//! A [`RegisterLayout`] is an ordered list of labeled subsystems. The leftmost
//! label is the most significant tensor factor (row-major Kronecker
//! convention); every operation preserves that convention. States over a
//! layout come in two flavors: [`PureState`] (unit amplitude vector) and
//! [`DensityState`] (Hermitian PSD unit-trace matrix). All values are
//! immutable after construction and every operation is a pure function.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigen, hermitian_eigenvalues, hermiticity_deviation, CMat, CVec, C64, ONE, ZERO,
};

/// Max elementwise deviation tolerated for Hermiticity / trace / norm checks.
pub const STATE_TOL: f64 = 1e-10;
/// Eigenvalues below this threshold are treated as zero in entropy sums.
pub const EIGENVALUE_CLIP: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct RegisterLayout {
    subsystems: Vec<(String, usize)>,
}

impl RegisterLayout {
    pub fn new<L: Into<String>>(subsystems: Vec<(L, usize)>) -> Result<Self> {
        let subsystems: Vec<(String, usize)> =
            subsystems.into_iter().map(|(l, d)| (l.into(), d)).collect();
        let mut seen = BTreeSet::new();
        for (label, dim) in &subsystems {
            if !seen.insert(label.clone()) {
                return Err(Error::LayoutConflict(label.clone()));
            }
            if *dim == 0 {
                return Err(Error::InvalidState(format!(
                    "subsystem `{label}` has dimension 0"
                )));
            }
        }
        Ok(Self { subsystems })
    }

    /// Single-subsystem layout.
    pub fn single<L: Into<String>>(label: L, dim: usize) -> Self {
        Self {
            subsystems: vec![(label.into(), dim)],
        }
    }

    /// `n` subsystems labeled `{prefix}1..{prefix}n`, each of dimension `dim`.
    pub fn uniform(prefix: &str, n: usize, dim: usize) -> Self {
        Self {
            subsystems: (1..=n).map(|i| (format!("{prefix}{i}"), dim)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.subsystems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsystems.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.subsystems.iter().map(|(_, d)| d).product()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.subsystems.iter().map(|(l, _)| l.as_str()).collect()
    }

    pub fn subsystems(&self) -> &[(String, usize)] {
        &self.subsystems
    }

    pub fn dim_at(&self, position: usize) -> usize {
        self.subsystems[position].1
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.subsystems
            .iter()
            .position(|(l, _)| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn dim_of(&self, label: &str) -> Result<usize> {
        Ok(self.subsystems[self.position(label)?].1)
    }

    pub fn contains(&self, label: &str) -> bool {
        self.subsystems.iter().any(|(l, _)| l == label)
    }

    /// Positions of the given labels, sorted into layout order. Duplicate
    /// entries in `labels` collapse.
    pub fn positions(&self, labels: &[&str]) -> Result<Vec<usize>> {
        if labels.is_empty() {
            return Err(Error::EmptyLabelSet);
        }
        let mut set = BTreeSet::new();
        for label in labels {
            set.insert(self.position(label)?);
        }
        Ok(set.into_iter().collect())
    }

    /// Row-major strides: `strides[s]` is the weight of subsystem `s` in a
    /// flattened index (leftmost subsystem most significant).
    pub fn strides(&self) -> Vec<usize> {
        let n = self.subsystems.len();
        let mut strides = vec![1usize; n];
        for s in (0..n.saturating_sub(1)).rev() {
            strides[s] = strides[s + 1] * self.subsystems[s + 1].1;
        }
        strides
    }

    /// Concatenation; label sets must be disjoint.
    pub fn concat(&self, other: &RegisterLayout) -> Result<RegisterLayout> {
        let mut subsystems = self.subsystems.clone();
        for (label, dim) in &other.subsystems {
            if self.contains(label) {
                return Err(Error::LayoutConflict(label.clone()));
            }
            subsystems.push((label.clone(), *dim));
        }
        Ok(RegisterLayout { subsystems })
    }

    /// All full-space offsets spanned by the subsystems at `positions`:
    /// entry `k` is the flattened contribution of the `k`-th joint index over
    /// those subsystems (in layout order).
    fn offsets(&self, positions: &[usize]) -> Vec<usize> {
        let strides = self.strides();
        let dims: Vec<usize> = positions.iter().map(|&p| self.subsystems[p].1).collect();
        let total: usize = dims.iter().product();
        let mut out = vec![0usize; total.max(1)];
        for (k, slot) in out.iter_mut().enumerate() {
            let mut rest = k;
            let mut offset = 0;
            for (i, &p) in positions.iter().enumerate().rev() {
                let digit = rest % dims[i];
                rest /= dims[i];
                offset += digit * strides[p];
            }
            *slot = offset;
        }
        out
    }
}

/// Common read surface of pure and mixed states: layout access, marginals,
/// and marginal entropies. For pure states the entropy of a subset is
/// computed on the smaller side of the bipartition (the two sides share a
/// spectrum when the global state is pure).
pub trait State {
    fn layout(&self) -> &RegisterLayout;

    /// Reduced density operator of the given subsystems, in layout order.
    fn marginal(&self, labels: &[&str]) -> Result<DensityState>;

    /// Von Neumann entropy of the marginal, in bits.
    fn subset_entropy(&self, labels: &[&str]) -> Result<f64>;
}

#[derive(Debug, Clone)]
pub struct PureState {
    layout: RegisterLayout,
    amplitudes: CVec,
}

impl PureState {
    pub fn new(layout: RegisterLayout, amplitudes: CVec) -> Result<Self> {
        if amplitudes.len() != layout.total_dim() {
            return Err(Error::DimensionMismatch {
                expected: layout.total_dim(),
                actual: amplitudes.len(),
                context: "amplitude vector vs layout".into(),
            });
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > STATE_TOL {
            return Err(Error::InvalidState(format!(
                "pure state norm deviates from 1 by {:.3e}",
                (norm - 1.0).abs()
            )));
        }
        Ok(Self { layout, amplitudes })
    }

    pub(crate) fn from_parts_unchecked(layout: RegisterLayout, mut amplitudes: CVec) -> Self {
        let norm = amplitudes.norm();
        if norm > 0.0 {
            amplitudes /= C64::new(norm, 0.0);
        }
        Self { layout, amplitudes }
    }

    /// Computational basis state |index⟩.
    pub fn basis(layout: RegisterLayout, index: usize) -> Result<Self> {
        let d = layout.total_dim();
        if index >= d {
            return Err(Error::OutOfRange(format!(
                "basis index {index} out of range for dimension {d}"
            )));
        }
        let mut amplitudes = CVec::zeros(d);
        amplitudes[index] = ONE;
        Ok(Self { layout, amplitudes })
    }

    /// Maximally entangled pair (|00⟩ + |11⟩)/√2 over two qubit labels.
    pub fn bell_pair(a: &str, b: &str) -> Result<Self> {
        let layout = RegisterLayout::new(vec![(a, 2), (b, 2)])?;
        let mut amplitudes = CVec::zeros(4);
        amplitudes[0] = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        amplitudes[3] = amplitudes[0];
        Ok(Self { layout, amplitudes })
    }

    /// (|0…0⟩ + |1…1⟩)/√2 over the given qubit labels.
    pub fn ghz(labels: &[&str]) -> Result<Self> {
        let layout = RegisterLayout::new(labels.iter().map(|&l| (l, 2usize)).collect())?;
        let d = layout.total_dim();
        let mut amplitudes = CVec::zeros(d);
        amplitudes[0] = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        amplitudes[d - 1] = amplitudes[0];
        Ok(Self { layout, amplitudes })
    }

    /// Maximally entangled state between a single reference register and the
    /// given layout: Σᵢ |i⟩_ref |i⟩ / √d.
    pub fn maximally_entangled(reference: &str, system: RegisterLayout) -> Result<Self> {
        let d = system.total_dim();
        let layout = RegisterLayout::single(reference, d).concat(&system)?;
        let mut amplitudes = CVec::zeros(d * d);
        let w = C64::new(1.0 / (d as f64).sqrt(), 0.0);
        for i in 0..d {
            amplitudes[i * d + i] = w;
        }
        Ok(Self { layout, amplitudes })
    }

    pub fn amplitudes(&self) -> &CVec {
        &self.amplitudes
    }

    pub fn to_density(&self) -> DensityState {
        let matrix = CMat::from_fn(self.amplitudes.len(), self.amplitudes.len(), |i, j| {
            self.amplitudes[i] * self.amplitudes[j].conj()
        });
        DensityState {
            layout: self.layout.clone(),
            matrix,
        }
    }

    /// Tensor product; label sets must be disjoint.
    pub fn tensor(&self, other: &PureState) -> Result<PureState> {
        let layout = self.layout.concat(&other.layout)?;
        let amplitudes = self.amplitudes.kronecker(&other.amplitudes);
        Ok(PureState { layout, amplitudes })
    }

    /// Apply a unitary acting on the subspace spanned by `labels` (in layout
    /// order), identity elsewhere.
    pub fn apply_unitary(&self, labels: &[&str], op: &CMat) -> Result<PureState> {
        let positions = self.layout.positions(labels)?;
        let dims: Vec<usize> = positions.iter().map(|&p| self.layout.dim_at(p)).collect();
        let sub_dim: usize = dims.iter().product();
        if op.nrows() != sub_dim || op.ncols() != sub_dim {
            return Err(Error::DimensionMismatch {
                expected: sub_dim,
                actual: op.nrows(),
                context: "operator vs subsystem dimensions".into(),
            });
        }
        let all: Vec<usize> = (0..self.layout.len()).collect();
        let rest: Vec<usize> = all.iter().copied().filter(|p| !positions.contains(p)).collect();
        let sub_offsets = self.layout.offsets(&positions);
        let rest_offsets = self.layout.offsets(&rest);

        let mut out = CVec::zeros(self.amplitudes.len());
        for &r in &rest_offsets {
            for (i, &oi) in sub_offsets.iter().enumerate() {
                let mut acc = ZERO;
                for (j, &oj) in sub_offsets.iter().enumerate() {
                    let w = op[(i, j)];
                    if w != ZERO {
                        acc += w * self.amplitudes[r + oj];
                    }
                }
                out[r + oi] = acc;
            }
        }
        Ok(PureState {
            layout: self.layout.clone(),
            amplitudes: out,
        })
    }

    /// Reorder subsystems to the given label order (all labels exactly once).
    pub fn permute(&self, order: &[&str]) -> Result<PureState> {
        let (layout, map) = permutation_map(&self.layout, order)?;
        let mut out = CVec::zeros(self.amplitudes.len());
        for (new_idx, &old_idx) in map.iter().enumerate() {
            out[new_idx] = self.amplitudes[old_idx];
        }
        Ok(PureState {
            layout,
            amplitudes: out,
        })
    }

    /// Merge a contiguous run of subsystems into a single register with the
    /// product dimension. Amplitudes are untouched.
    pub fn merge(&self, labels: &[&str], merged: &str) -> Result<PureState> {
        let layout = merge_layout(&self.layout, labels, merged)?;
        Ok(PureState {
            layout,
            amplitudes: self.amplitudes.clone(),
        })
    }
}

impl State for PureState {
    fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    fn marginal(&self, labels: &[&str]) -> Result<DensityState> {
        let keep = self.layout.positions(labels)?;
        let traced: Vec<usize> = (0..self.layout.len()).filter(|p| !keep.contains(p)).collect();
        let keep_offsets = self.layout.offsets(&keep);
        let traced_offsets = self.layout.offsets(&traced);
        let dk = keep_offsets.len();
        let mut matrix = CMat::zeros(dk, dk);
        for (i, &oi) in keep_offsets.iter().enumerate() {
            for (j, &oj) in keep_offsets.iter().enumerate() {
                let mut acc = ZERO;
                for &t in &traced_offsets {
                    acc += self.amplitudes[oi + t] * self.amplitudes[oj + t].conj();
                }
                matrix[(i, j)] = acc;
            }
        }
        let layout = RegisterLayout {
            subsystems: keep
                .iter()
                .map(|&p| self.layout.subsystems[p].clone())
                .collect(),
        };
        Ok(DensityState { layout, matrix })
    }

    fn subset_entropy(&self, labels: &[&str]) -> Result<f64> {
        let keep = self.layout.positions(labels)?;
        let complement: Vec<&str> = self
            .layout
            .subsystems
            .iter()
            .enumerate()
            .filter(|(p, _)| !keep.contains(p))
            .map(|(_, (l, _))| l.as_str())
            .collect();
        if complement.is_empty() {
            return Ok(0.0); // globally pure
        }
        let dim_kept: usize = keep.iter().map(|&p| self.layout.dim_at(p)).product();
        let dim_comp = self.layout.total_dim() / dim_kept;
        // both sides of a pure bipartition share a spectrum; trace the big one
        if dim_kept <= dim_comp {
            Ok(self.marginal(labels)?.entropy())
        } else {
            Ok(self.marginal(&complement)?.entropy())
        }
    }
}

#[derive(Debug, Clone)]
pub struct DensityState {
    layout: RegisterLayout,
    matrix: CMat,
}

impl DensityState {
    /// Validating constructor: Hermitian within 1e−10, unit trace within
    /// 1e−10, minimum eigenvalue ≥ −1e−9.
    pub fn new(layout: RegisterLayout, matrix: CMat) -> Result<Self> {
        let d = layout.total_dim();
        if matrix.nrows() != d || matrix.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                actual: matrix.nrows(),
                context: "density matrix vs layout".into(),
            });
        }
        let herm = hermiticity_deviation(&matrix);
        if herm > STATE_TOL {
            return Err(Error::InvalidState(format!(
                "density matrix deviates from Hermiticity by {herm:.3e}"
            )));
        }
        let trace: C64 = matrix.trace();
        if (trace.re - 1.0).abs() > STATE_TOL || trace.im.abs() > STATE_TOL {
            return Err(Error::InvalidState(format!(
                "density matrix trace {trace} deviates from 1"
            )));
        }
        let eigenvalues = hermitian_eigenvalues(&matrix);
        let min = eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
        if min < -EIGENVALUE_CLIP {
            return Err(Error::InvalidState(format!(
                "density matrix has negative eigenvalue {min:.3e}"
            )));
        }
        Ok(Self { layout, matrix })
    }

    /// Trusted constructor for matrices produced by operations that preserve
    /// validity (partial traces, unitary conjugation, Kraus sums).
    pub(crate) fn from_parts_unchecked(layout: RegisterLayout, matrix: CMat) -> Self {
        Self { layout, matrix }
    }

    /// I/D over the given layout.
    pub fn maximally_mixed(layout: RegisterLayout) -> Self {
        let d = layout.total_dim();
        let matrix = CMat::identity(d, d).map(|z| z / d as f64);
        Self { layout, matrix }
    }

    /// Diagonal state with the given spectrum (must sum to 1).
    pub fn diagonal(layout: RegisterLayout, probs: &[f64]) -> Result<Self> {
        let d = layout.total_dim();
        if probs.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                actual: probs.len(),
                context: "diagonal entries vs layout".into(),
            });
        }
        let matrix = CMat::from_fn(d, d, |i, j| {
            if i == j {
                C64::new(probs[i], 0.0)
            } else {
                ZERO
            }
        });
        Self::new(layout, matrix)
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    /// Forget internal structure: same matrix over a single register.
    pub fn as_single_register(&self, label: &str) -> DensityState {
        DensityState {
            layout: RegisterLayout::single(label, self.layout.total_dim()),
            matrix: self.matrix.clone(),
        }
    }

    /// Eigenvalues, descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix)
    }

    /// Von Neumann entropy in bits.
    pub fn entropy(&self) -> f64 {
        entropy_from_spectrum(&self.eigenvalues())
    }

    /// Apply a unitary acting on the given subsystems, identity elsewhere.
    pub fn apply_unitary(&self, labels: &[&str], op: &CMat) -> Result<DensityState> {
        let full = embed_operator(&self.layout, labels, op)?;
        let matrix = &full * &self.matrix * full.adjoint();
        Ok(DensityState {
            layout: self.layout.clone(),
            matrix,
        })
    }

    pub fn permute(&self, order: &[&str]) -> Result<DensityState> {
        let (layout, map) = permutation_map(&self.layout, order)?;
        let d = self.matrix.nrows();
        let mut out = CMat::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                out[(i, j)] = self.matrix[(map[i], map[j])];
            }
        }
        Ok(DensityState {
            layout,
            matrix: out,
        })
    }
}

impl State for DensityState {
    fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    fn marginal(&self, labels: &[&str]) -> Result<DensityState> {
        partial_trace(self, labels)
    }

    fn subset_entropy(&self, labels: &[&str]) -> Result<f64> {
        let keep = self.layout.positions(labels)?;
        if keep.len() == self.layout.len() {
            return Ok(self.entropy());
        }
        Ok(self.marginal(labels)?.entropy())
    }
}

/// S = −Σ λ log₂ λ with eigenvalues below the clipping threshold treated as
/// zero and the remaining spectrum renormalized to unit sum.
pub fn entropy_from_spectrum(eigenvalues: &[f64]) -> f64 {
    let clipped: Vec<f64> = eigenvalues
        .iter()
        .map(|&l| if l < EIGENVALUE_CLIP { 0.0 } else { l })
        .collect();
    let total: f64 = clipped.iter().sum();
    if total <= 0.0 {
        return 0.0;
    }
    -clipped
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| {
            let p = l / total;
            p * p.log2()
        })
        .sum::<f64>()
}

/// Von Neumann entropy of a density state, in bits.
pub fn von_neumann_entropy(rho: &DensityState) -> f64 {
    rho.entropy()
}

/// Kronecker product of two density states; layouts concatenate.
pub fn tensor_product(a: &DensityState, b: &DensityState) -> Result<DensityState> {
    let layout = a.layout.concat(&b.layout)?;
    let matrix = a.matrix.kronecker(&b.matrix);
    Ok(DensityState { layout, matrix })
}

/// Reduced density operator over `keep`, preserving the original subsystem
/// order and the trace.
pub fn partial_trace(state: &DensityState, keep: &[&str]) -> Result<DensityState> {
    let keep_positions = state.layout.positions(keep)?;
    let traced: Vec<usize> = (0..state.layout.len())
        .filter(|p| !keep_positions.contains(p))
        .collect();
    let keep_offsets = state.layout.offsets(&keep_positions);
    let traced_offsets = state.layout.offsets(&traced);
    let dk = keep_offsets.len();
    let mut matrix = CMat::zeros(dk, dk);
    for (i, &oi) in keep_offsets.iter().enumerate() {
        for (j, &oj) in keep_offsets.iter().enumerate() {
            let mut acc = ZERO;
            for &t in &traced_offsets {
                acc += state.matrix[(oi + t, oj + t)];
            }
            matrix[(i, j)] = acc;
        }
    }
    let layout = RegisterLayout {
        subsystems: keep_positions
            .iter()
            .map(|&p| state.layout.subsystems[p].clone())
            .collect(),
    };
    Ok(DensityState { layout, matrix })
}

/// Purify `rho` against a fresh reference register of the same total
/// dimension (full-dimension convention). The returned state is over
/// (reference, original subsystems); tracing the reference out recovers
/// `rho`, and the reference marginal shares the spectrum of `rho`.
pub fn purify(rho: &DensityState, reference_label: &str) -> Result<PureState> {
    if rho.layout.contains(reference_label) {
        return Err(Error::LayoutConflict(reference_label.to_string()));
    }
    let d = rho.layout.total_dim();
    let (values, vectors) = hermitian_eigen(&rho.matrix);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    if min < -EIGENVALUE_CLIP {
        return Err(Error::InvalidState(format!(
            "cannot purify: negative eigenvalue {min:.3e}"
        )));
    }
    let layout = RegisterLayout::single(reference_label, d).concat(&rho.layout)?;
    let mut amplitudes = CVec::zeros(d * d);
    for (i, &lambda) in values.iter().enumerate() {
        if lambda <= 0.0 {
            continue;
        }
        let w = C64::new(lambda.sqrt(), 0.0);
        for q in 0..d {
            amplitudes[i * d + q] = w * vectors[(q, i)];
        }
    }
    Ok(PureState::from_parts_unchecked(layout, amplitudes))
}

/// Full-space embedding of an operator acting on the given subsystems.
pub fn embed_operator(layout: &RegisterLayout, labels: &[&str], op: &CMat) -> Result<CMat> {
    let positions = layout.positions(labels)?;
    let dims: Vec<usize> = positions.iter().map(|&p| layout.dim_at(p)).collect();
    let sub_dim: usize = dims.iter().product();
    if op.nrows() != sub_dim || op.ncols() != sub_dim {
        return Err(Error::DimensionMismatch {
            expected: sub_dim,
            actual: op.nrows(),
            context: "operator vs subsystem dimensions".into(),
        });
    }
    let rest: Vec<usize> = (0..layout.len()).filter(|p| !positions.contains(p)).collect();
    let sub_offsets = layout.offsets(&positions);
    let rest_offsets = layout.offsets(&rest);
    let d = layout.total_dim();
    let mut full = CMat::zeros(d, d);
    for &r in &rest_offsets {
        for (i, &oi) in sub_offsets.iter().enumerate() {
            for (j, &oj) in sub_offsets.iter().enumerate() {
                full[(r + oi, r + oj)] = op[(i, j)];
            }
        }
    }
    Ok(full)
}

fn permutation_map(
    layout: &RegisterLayout,
    order: &[&str],
) -> Result<(RegisterLayout, Vec<usize>)> {
    if order.len() != layout.len() {
        return Err(Error::DimensionMismatch {
            expected: layout.len(),
            actual: order.len(),
            context: "permutation must list every label exactly once".into(),
        });
    }
    let mut positions = Vec::with_capacity(order.len());
    let mut seen = BTreeSet::new();
    for label in order {
        let p = layout.position(label)?;
        if !seen.insert(p) {
            return Err(Error::OverlappingLabelSets(label.to_string()));
        }
        positions.push(p);
    }
    let new_layout = RegisterLayout {
        subsystems: positions
            .iter()
            .map(|&p| layout.subsystems[p].clone())
            .collect(),
    };
    let old_strides = layout.strides();
    let new_dims: Vec<usize> = positions.iter().map(|&p| layout.dim_at(p)).collect();
    let d = layout.total_dim();
    let mut map = vec![0usize; d];
    for (new_idx, slot) in map.iter_mut().enumerate() {
        let mut rest = new_idx;
        let mut old_idx = 0;
        for (k, &p) in positions.iter().enumerate().rev() {
            let digit = rest % new_dims[k];
            rest /= new_dims[k];
            old_idx += digit * old_strides[p];
        }
        *slot = old_idx;
    }
    Ok((new_layout, map))
}

fn merge_layout(
    layout: &RegisterLayout,
    labels: &[&str],
    merged: &str,
) -> Result<RegisterLayout> {
    let positions = layout.positions(labels)?;
    for w in positions.windows(2) {
        if w[1] != w[0] + 1 {
            return Err(Error::InvalidState(
                "merge requires a contiguous run of subsystems".into(),
            ));
        }
    }
    let merged_dim: usize = positions.iter().map(|&p| layout.dim_at(p)).product();
    let mut subsystems = Vec::new();
    for (p, entry) in layout.subsystems.iter().enumerate() {
        if p == positions[0] {
            subsystems.push((merged.to_string(), merged_dim));
        } else if !positions.contains(&p) {
            subsystems.push(entry.clone());
        }
    }
    RegisterLayout::new(subsystems)
}
