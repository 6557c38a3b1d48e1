//! Quantum channel supplemented with an amplified classical variable.
//!
//! An encoder with quantum output Q may also produce a classical record: a
//! microscopic precursor P and its macroscopic amplification C, fully
//! correlated with P in a fixed orthonormal basis. Amplification is modeled
//! as exact basis-copying (a generalized copy gate), never as a projective
//! measurement, so the global state over (R, Q, P, C) stays pure and the
//! entropic bookkeeping applies throughout.
//!
//! Amplification is lossless exactly when the precursor alone carries no
//! mutual entropy with the reference, S(R:P) = 0; then Q and C together
//! retain the full initial entanglement 2k, and the three parameters
//! k = S(R), s = S(Q), c = S(C) fix the entire (R, Q, C) entropy diagram.
//! Teleportation is the c = 2s = 2k special case.

use serde::{Deserialize, Serialize};

use crate::codes::{pattern_loss_on_state, pauli_string, EncodingIsometry, ErasureVerdict};
use crate::error::{Error, Result};
use crate::linalg::{isometry_deviation, CMat, CVec, C64, ZERO};
use crate::registers::{PureState, RegisterLayout, State};
use crate::venn::{conditional_entropy, mutual_entropy, ternary_mutual_entropy};

/// Tolerance for side-channel identities (inherits the correctability
/// tolerance: these are multi-subsystem marginal chains).
pub const SIDE_CHANNEL_TOL: f64 = 1e-7;

/// A pure state over reference, quantum output, precursor, and amplified
/// classical registers, with the classical register copied from the
/// precursor in a fixed orthonormal basis.
#[derive(Debug, Clone)]
pub struct SideChannelState {
    state: PureState,
    reference: Vec<String>,
    quantum: Vec<String>,
    precursor: String,
    classical: String,
    amplification_basis: CMat,
    /// S(R).
    k: f64,
    /// S(Q).
    s: f64,
    /// S(C) = S(P) after amplification.
    c: f64,
    /// |S(CP) − c|: zero exactly when the amplification basis diagonalizes
    /// the precursor marginal (the canonical, lossless-compatible case).
    correlation_residual: f64,
}

/// Outcome of the lossless-amplification test.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AmplificationCheck {
    /// S(R:P); zero for lossless amplification.
    pub mutual_reference_precursor: f64,
    /// S(R:QC); equals 2k for lossless amplification.
    pub mutual_reference_quantum_classical: f64,
}

/// The full (R, Q, C) entropy assignment of a lossless side-channel state,
/// after tracing the precursor out.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SideChannelDiagram {
    pub k: f64,
    pub s: f64,
    pub c: f64,
    pub s_rq: f64,
    pub s_rc: f64,
    pub s_qc: f64,
    pub s_rqc: f64,
    pub mutual_rc: f64,
    pub mutual_qc: f64,
    pub conditional_rq_given_c: f64,
    pub ternary_center: f64,
}

impl SideChannelDiagram {
    /// Residuals of the six identities that k, s, c impose on the diagram.
    pub fn identity_residuals(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("S(R:C) = 0", self.mutual_rc),
            ("S(Q:C) = s - k", self.mutual_qc - (self.s - self.k)),
            ("S(QC) = k + c", self.s_qc - (self.k + self.c)),
            ("S(RQC) = c", self.s_rqc - self.c),
            ("S(RQ|C) = 0", self.conditional_rq_given_c),
            (
                "S(R:Q:C) = s - k - c",
                self.ternary_center - (self.s - self.k - self.c),
            ),
        ]
    }
}

impl SideChannelState {
    pub fn state(&self) -> &PureState {
        &self.state
    }

    pub fn reference_labels(&self) -> Vec<&str> {
        self.reference.iter().map(String::as_str).collect()
    }

    pub fn quantum_labels(&self) -> Vec<&str> {
        self.quantum.iter().map(String::as_str).collect()
    }

    pub fn precursor_label(&self) -> &str {
        &self.precursor
    }

    pub fn classical_label(&self) -> &str {
        &self.classical
    }

    pub fn amplification_basis(&self) -> &CMat {
        &self.amplification_basis
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn correlation_residual(&self) -> f64 {
        self.correlation_residual
    }
}

/// Append a classical register that copies the precursor coefficient-wise in
/// the given orthonormal basis (columns of `basis`; `None` means the
/// computational basis). Every label of the input state must be claimed by
/// `reference`, `quantum`, or the precursor.
pub fn amplify_precursor(
    state: &PureState,
    reference: &[&str],
    quantum: &[&str],
    precursor: &str,
    basis: Option<&CMat>,
    classical_label: &str,
) -> Result<SideChannelState> {
    let layout = state.layout();
    let dim_p = layout.dim_of(precursor)?;
    if layout.contains(classical_label) {
        return Err(Error::LayoutConflict(classical_label.to_string()));
    }
    for label in layout.labels() {
        let claimed = reference.contains(&label)
            || quantum.contains(&label)
            || label == precursor;
        if !claimed {
            return Err(Error::SideChannel(format!(
                "label `{label}` is neither reference, quantum, nor precursor"
            )));
        }
    }
    let owned_basis = match basis {
        Some(b) => {
            if b.nrows() != dim_p || b.ncols() != dim_p {
                return Err(Error::DimensionMismatch {
                    expected: dim_p,
                    actual: b.nrows(),
                    context: "amplification basis vs precursor dimension".into(),
                });
            }
            let dev = isometry_deviation(b);
            if dev > 1e-10 {
                return Err(Error::NonOrthonormalBasis(dev));
            }
            b.clone()
        }
        None => CMat::identity(dim_p, dim_p),
    };

    // copy isometry: |b_j⟩_P ↦ |b_j⟩_P ⊗ |b_j⟩_C
    let pos = layout.position(precursor)?;
    let pre: usize = (0..pos).map(|p| layout.dim_at(p)).product();
    let post: usize = (pos + 1..layout.len()).map(|p| layout.dim_at(p)).product();
    let amp = state.amplitudes();
    let mut out = CVec::zeros(pre * dim_p * post * dim_p);
    for a in 0..pre {
        for b in 0..post {
            for j in 0..dim_p {
                // coefficient of |b_j⟩ in the precursor slice
                let mut coeff = ZERO;
                for p in 0..dim_p {
                    coeff += owned_basis[(p, j)].conj() * amp[(a * dim_p + p) * post + b];
                }
                if coeff == ZERO {
                    continue;
                }
                for p in 0..dim_p {
                    let w_p = owned_basis[(p, j)];
                    if w_p == ZERO {
                        continue;
                    }
                    for cc in 0..dim_p {
                        let w_c = owned_basis[(cc, j)];
                        if w_c != ZERO {
                            out[((a * dim_p + p) * post + b) * dim_p + cc] += coeff * w_p * w_c;
                        }
                    }
                }
            }
        }
    }
    let mut subsystems: Vec<(String, usize)> = layout
        .subsystems()
        .iter()
        .map(|(l, d)| (l.clone(), *d))
        .collect();
    subsystems.push((classical_label.to_string(), dim_p));
    let amplified = PureState::new(RegisterLayout::new(subsystems)?, out)?;

    let k = amplified.subset_entropy(reference)?;
    let s = amplified.subset_entropy(quantum)?;
    let c = amplified.subset_entropy(&[precursor])?;
    let s_cp = amplified.subset_entropy(&[precursor, classical_label])?;
    Ok(SideChannelState {
        state: amplified,
        reference: reference.iter().map(|s| s.to_string()).collect(),
        quantum: quantum.iter().map(|s| s.to_string()).collect(),
        precursor: precursor.to_string(),
        classical: classical_label.to_string(),
        amplification_basis: owned_basis,
        k,
        s,
        c,
        correlation_residual: (s_cp - c).abs(),
    })
}

/// Lossless ⇔ the precursor alone is independent of the reference
/// ⇔ Q and C together retain the full mutual entropy 2k.
pub fn lossless_amplification_check(scs: &SideChannelState) -> Result<AmplificationCheck> {
    let reference = scs.reference_labels();
    let mut quantum_classical = scs.quantum_labels();
    quantum_classical.push(scs.classical_label());
    Ok(AmplificationCheck {
        mutual_reference_precursor: mutual_entropy(
            &scs.state,
            &reference,
            &[scs.precursor_label()],
        )?,
        mutual_reference_quantum_classical: mutual_entropy(
            &scs.state,
            &reference,
            &quantum_classical,
        )?,
    })
}

/// Full (R, Q, C) entropy assignment. Requires a lossless state; errors name
/// the first identity that breaks otherwise.
pub fn side_channel_diagram(scs: &SideChannelState) -> Result<SideChannelDiagram> {
    let check = lossless_amplification_check(scs)?;
    if check.mutual_reference_precursor > SIDE_CHANNEL_TOL {
        return Err(Error::SideChannel(format!(
            "amplification is lossy: S(R:P) = {:.3e} exceeds {SIDE_CHANNEL_TOL:.0e}",
            check.mutual_reference_precursor
        )));
    }
    let r = scs.reference_labels();
    let q = scs.quantum_labels();
    let c_label = [scs.classical_label()];
    let rq: Vec<&str> = r.iter().chain(q.iter()).copied().collect();
    let rc: Vec<&str> = r.iter().chain(c_label.iter()).copied().collect();
    let qc: Vec<&str> = q.iter().chain(c_label.iter()).copied().collect();
    let rqc: Vec<&str> = rq.iter().chain(c_label.iter()).copied().collect();

    let diagram = SideChannelDiagram {
        k: scs.k,
        s: scs.s,
        c: scs.state.subset_entropy(&c_label)?,
        s_rq: scs.state.subset_entropy(&rq)?,
        s_rc: scs.state.subset_entropy(&rc)?,
        s_qc: scs.state.subset_entropy(&qc)?,
        s_rqc: scs.state.subset_entropy(&rqc)?,
        mutual_rc: mutual_entropy(&scs.state, &r, &c_label)?,
        mutual_qc: mutual_entropy(&scs.state, &q, &c_label)?,
        conditional_rq_given_c: conditional_entropy(&scs.state, &rq, &c_label)?,
        ternary_center: ternary_mutual_entropy(&scs.state, &r, &q, &c_label)?,
    };
    for (name, residual) in diagram.identity_residuals() {
        if residual.abs() > SIDE_CHANNEL_TOL {
            return Err(Error::SideChannel(format!(
                "identity `{name}` broke by {residual:.3e}"
            )));
        }
    }
    Ok(diagram)
}

/// Teleportation as a side-channel model: R–L and A–Q Bell pairs, a unitary
/// rotation of (L, A) from the Bell basis to the computational basis playing
/// the role of the measurement, relabeling of those two qubits as the
/// precursor, and amplification into two classical bits. Yields k = 1,
/// s = 1, c = 2.
pub fn build_teleportation_model() -> Result<SideChannelState> {
    let bell_rl = PureState::bell_pair("R", "L")?;
    let bell_aq = PureState::bell_pair("A", "Q")?;
    let state = bell_rl.tensor(&bell_aq)?;

    // Bell basis -> computational basis on (L, A): CNOT(L->A), then H on L
    let mut cnot = CMat::zeros(4, 4);
    cnot[(0, 0)] = C64::new(1.0, 0.0);
    cnot[(1, 1)] = C64::new(1.0, 0.0);
    cnot[(2, 3)] = C64::new(1.0, 0.0);
    cnot[(3, 2)] = C64::new(1.0, 0.0);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut had = CMat::zeros(2, 2);
    had[(0, 0)] = C64::new(h, 0.0);
    had[(0, 1)] = C64::new(h, 0.0);
    had[(1, 0)] = C64::new(h, 0.0);
    had[(1, 1)] = C64::new(-h, 0.0);
    let bell_rotation = had.kronecker(&CMat::identity(2, 2)) * cnot;

    let measured = state.apply_unitary(&["L", "A"], &bell_rotation)?;
    let with_precursor = measured.merge(&["L", "A"], "P")?;
    amplify_precursor(&with_precursor, &["R"], &["Q"], "P", None, "C")
}

/// Side-channel encoder on top of a code: the physical qubits carry one of
/// `frames.len()` Pauli frames, recorded in the precursor with the given
/// probabilities (uniform if `None`). Distinct frames on a code whose
/// low-weight Pauli expectations vanish give orthogonal branches, hence a
/// lossless classical record of entropy H[p].
pub fn pauli_frame_side_channel(
    code: &EncodingIsometry,
    frames: &[&str],
    probabilities: Option<&[f64]>,
) -> Result<SideChannelState> {
    if frames.is_empty() {
        return Err(Error::SideChannel("need at least one Pauli frame".into()));
    }
    for frame in frames {
        if frame.len() != code.n() {
            return Err(Error::DimensionMismatch {
                expected: code.n(),
                actual: frame.len(),
                context: format!("Pauli frame `{frame}` vs physical qubit count"),
            });
        }
    }
    let m = frames.len();
    let probs: Vec<f64> = match probabilities {
        Some(p) => {
            if p.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    actual: p.len(),
                    context: "frame probabilities vs frame count".into(),
                });
            }
            let total: f64 = p.iter().sum();
            if (total - 1.0).abs() > 1e-10 || p.iter().any(|&x| x < 0.0) {
                return Err(Error::InvalidDistribution(
                    "frame probabilities must be non-negative and sum to 1".into(),
                ));
            }
            p.to_vec()
        }
        None => vec![1.0 / m as f64; m],
    };

    let encoded = code.encode_entangled()?;
    let q_labels: Vec<String> = (1..=code.n()).map(|i| format!("Q{i}")).collect();
    let q_refs: Vec<&str> = q_labels.iter().map(String::as_str).collect();

    let base_dim = encoded.amplitudes().len();
    let mut amplitudes = CVec::zeros(base_dim * m);
    for (i, frame) in frames.iter().enumerate() {
        let framed = encoded.apply_unitary(&q_refs, &pauli_string(frame))?;
        let w = C64::new(probs[i].sqrt(), 0.0);
        for idx in 0..base_dim {
            amplitudes[idx * m + i] = w * framed.amplitudes()[idx];
        }
    }
    let layout = encoded
        .layout()
        .concat(&RegisterLayout::single("P", m))?;
    let with_precursor = PureState::new(layout, amplitudes)?;
    amplify_precursor(&with_precursor, &["R"], &q_refs, "P", None, "C")
}

/// S(R : Q_e P): mutual entropy of the reference with an erased pattern of
/// physical qubits plus the precursor. Correctable with classical help
/// exactly when this vanishes.
pub fn side_channel_erasure_check(scs: &SideChannelState, pattern: &[usize]) -> Result<f64> {
    let n = scs.quantum.len();
    for &i in pattern {
        if i == 0 || i > n {
            return Err(Error::OutOfRange(format!(
                "physical index {i} outside 1..={n}"
            )));
        }
    }
    let reference = scs.reference_labels();
    let mut erased: Vec<&str> = pattern
        .iter()
        .map(|&i| scs.quantum[i - 1].as_str())
        .collect();
    erased.push(scs.precursor_label());
    mutual_entropy(&scs.state, &reference, &erased)
}

/// Exhaustive side-channel erasure verdict over all C(n, e) patterns.
pub fn verify_side_channel_erasure(scs: &SideChannelState, erasures: usize) -> Result<ErasureVerdict> {
    use itertools::Itertools;
    let n = scs.quantum.len();
    if erasures > n {
        return Err(Error::OutOfRange(format!(
            "cannot erase {erasures} of {n} qubits"
        )));
    }
    let mut worst = 0.0_f64;
    let mut checked = 0usize;
    for pattern in (1..=n).combinations(erasures) {
        worst = worst.max(side_channel_erasure_check(scs, &pattern)?);
        checked += 1;
    }
    Ok(ErasureVerdict {
        correctable: worst <= crate::codes::CORRECTABLE_TOL,
        worst_pattern_loss: worst,
        patterns_checked: checked,
    })
}

/// Pattern loss of the underlying code ignoring the side channel entirely
/// (the c = 0 baseline).
pub fn plain_pattern_loss(
    code: &EncodingIsometry,
    pattern: &[usize],
) -> Result<crate::codes::PatternLoss> {
    let encoded = code.encode_entangled()?;
    pattern_loss_on_state(&encoded, &["R"], code.n(), pattern, 2.0 * code.k() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn trivial_precursor_amplifies_to_product() {
        // P fixed in |0⟩: c = 0, appended C independent of everything
        let bell = PureState::bell_pair("R", "Q").unwrap();
        let p0 = PureState::basis(RegisterLayout::single("P", 2), 0).unwrap();
        let state = bell.tensor(&p0).unwrap();
        let scs = amplify_precursor(&state, &["R"], &["Q"], "P", None, "C").unwrap();
        assert_relative_eq!(scs.c(), 0.0, epsilon = 1e-9);
        let check = lossless_amplification_check(&scs).unwrap();
        assert_relative_eq!(check.mutual_reference_precursor, 0.0, epsilon = 1e-9);
        assert_relative_eq!(
            check.mutual_reference_quantum_classical,
            2.0,
            epsilon = 1e-8
        );
    }

    #[test]
    fn uniform_precursor_copies_one_bit() {
        // |Ψ⟩ = (|ψ0⟩|0⟩ + |ψ1⟩|1⟩)/√2 with orthogonal branches: c = 1 and
        // the P-C pair is perfectly classically correlated
        let b0 = PureState::bell_pair("R", "Q").unwrap();
        let flip = pauli_string("X");
        let b1 = b0.apply_unitary(&["Q"], &flip).unwrap();
        let mut amplitudes = CVec::zeros(8);
        for idx in 0..4 {
            amplitudes[idx * 2] = b0.amplitudes()[idx] / C64::new(2.0_f64.sqrt(), 0.0);
            amplitudes[idx * 2 + 1] = b1.amplitudes()[idx] / C64::new(2.0_f64.sqrt(), 0.0);
        }
        let layout = RegisterLayout::new(vec![("R", 2), ("Q", 2), ("P", 2)]).unwrap();
        let state = PureState::new(layout, amplitudes).unwrap();
        let scs = amplify_precursor(&state, &["R"], &["Q"], "P", None, "C").unwrap();
        assert_relative_eq!(scs.c(), 1.0, epsilon = 1e-9);
        assert_relative_eq!(scs.correlation_residual(), 0.0, epsilon = 1e-9);
        let m_cp = mutual_entropy(scs.state(), &["C"], &["P"]).unwrap();
        assert_relative_eq!(m_cp, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn rotated_amplification_basis_is_lossy() {
        // amplifying in a basis that mixes the Schmidt branches leaks
        // reference correlations into the precursor
        let b0 = PureState::bell_pair("R", "Q").unwrap();
        let flip = pauli_string("X");
        let b1 = b0.apply_unitary(&["Q"], &flip).unwrap();
        let mut amplitudes = CVec::zeros(8);
        for idx in 0..4 {
            amplitudes[idx * 2] = b0.amplitudes()[idx] / C64::new(2.0_f64.sqrt(), 0.0);
            amplitudes[idx * 2 + 1] = b1.amplitudes()[idx] / C64::new(2.0_f64.sqrt(), 0.0);
        }
        let layout = RegisterLayout::new(vec![("R", 2), ("Q", 2), ("P", 2)]).unwrap();
        let state = PureState::new(layout, amplitudes).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut rotated = CMat::zeros(2, 2);
        rotated[(0, 0)] = C64::new(h, 0.0);
        rotated[(0, 1)] = C64::new(h, 0.0);
        rotated[(1, 0)] = C64::new(h, 0.0);
        rotated[(1, 1)] = C64::new(-h, 0.0);
        let scs =
            amplify_precursor(&state, &["R"], &["Q"], "P", Some(&rotated), "C").unwrap();
        let check = lossless_amplification_check(&scs).unwrap();
        assert!(check.mutual_reference_precursor > 0.1);
        assert!(side_channel_diagram(&scs).is_err());
    }

    #[test]
    fn non_orthonormal_basis_rejected() {
        let bell = PureState::bell_pair("R", "Q").unwrap();
        let p0 = PureState::basis(RegisterLayout::single("P", 2), 0).unwrap();
        let state = bell.tensor(&p0).unwrap();
        let skew = CMat::from_fn(2, 2, |i, j| {
            if i == 0 && j <= 1 {
                C64::new(1.0, 0.0)
            } else {
                ZERO
            }
        });
        assert!(matches!(
            amplify_precursor(&state, &["R"], &["Q"], "P", Some(&skew), "C"),
            Err(Error::NonOrthonormalBasis(_))
        ));
    }

    #[test]
    fn teleportation_model_parameters() {
        let scs = build_teleportation_model().unwrap();
        assert_relative_eq!(scs.k(), 1.0, epsilon = 1e-9);
        assert_relative_eq!(scs.s(), 1.0, epsilon = 1e-9);
        assert_relative_eq!(scs.c(), 2.0, epsilon = 1e-9);
        let check = lossless_amplification_check(&scs).unwrap();
        assert_relative_eq!(check.mutual_reference_precursor, 0.0, epsilon = 1e-7);
        assert_relative_eq!(
            check.mutual_reference_quantum_classical,
            2.0,
            epsilon = 1e-7
        );
    }

    #[test]
    fn teleportation_diagram_matches_maximal_classical_information_case() {
        let scs = build_teleportation_model().unwrap();
        let diagram = side_channel_diagram(&scs).unwrap();
        assert_relative_eq!(diagram.mutual_rc, 0.0, epsilon = 1e-7);
        assert_relative_eq!(diagram.mutual_qc, 0.0, epsilon = 1e-7);
        assert_relative_eq!(diagram.conditional_rq_given_c, 0.0, epsilon = 1e-7);
        assert_relative_eq!(diagram.ternary_center, -2.0, epsilon = 1e-7);
        assert_relative_eq!(diagram.s_rqc, 2.0, epsilon = 1e-7);
    }

    #[test]
    fn teleportation_unamplified_record_suffices() {
        // with Q erased but P and C both kept, the full entanglement with R
        // survives: S(R:PC) = 2
        let scs = build_teleportation_model().unwrap();
        let m = mutual_entropy(scs.state(), &["R"], &["P", "C"]).unwrap();
        assert_relative_eq!(m, 2.0, epsilon = 1e-7);
    }

    #[test]
    fn simultaneous_knowledge_of_r_and_q_yields_c() {
        let scs = build_teleportation_model().unwrap();
        let s_c_given_rq =
            conditional_entropy(scs.state(), &["C"], &["R", "Q"]).unwrap();
        assert_relative_eq!(s_c_given_rq, 0.0, epsilon = 1e-7);
    }

    #[test]
    fn pauli_frames_on_trivial_code_are_lossless() {
        let code = EncodingIsometry::trivial(1);
        let scs = pauli_frame_side_channel(&code, &["I", "X", "Y", "Z"], None).unwrap();
        assert_relative_eq!(scs.k(), 1.0, epsilon = 1e-9);
        assert_relative_eq!(scs.c(), 2.0, epsilon = 1e-9);
        let check = lossless_amplification_check(&scs).unwrap();
        assert!(check.mutual_reference_precursor < 1e-7);
        // this is exactly the teleportation diagram again: c = 2s = 2k
        let diagram = side_channel_diagram(&scs).unwrap();
        assert_relative_eq!(diagram.s, 1.0, epsilon = 1e-9);
        assert_relative_eq!(diagram.mutual_qc, 0.0, epsilon = 1e-7);
        assert_relative_eq!(diagram.ternary_center, -2.0, epsilon = 1e-7);
    }

    #[test]
    fn biased_frame_probabilities_shrink_c() {
        let code = EncodingIsometry::trivial(1);
        let scs =
            pauli_frame_side_channel(&code, &["I", "X"], Some(&[0.9, 0.1])).unwrap();
        assert_relative_eq!(scs.c(), crate::bounds::dyadic_entropy(0.1), epsilon = 1e-8);
    }
}
