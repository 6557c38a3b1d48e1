//! Quantum channels as Kraus sets, their Stinespring dilations, and the
//! entropic channel report.
//!
//! A channel applied to an input entangled with a reference R splits the
//! initial mutual entropy 2S into the surviving information I = S(R:Q') and
//! the loss L = S(R:E') swallowed by the environment; the noise N = S(Q':E')
//! plays the same role for the reverse channel. I + L = 2S always, and
//! I + N twice the output entropy. Channels are stored as Kraus sets; the
//! dilation with an explicit environment register is derived on demand.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{isometry_deviation, CMat, C64, ZERO};
use crate::registers::{purify, DensityState, PureState, RegisterLayout, State};
use crate::venn::mutual_entropy;

/// Completeness tolerance for Σ K†K = 1.
pub const CHANNEL_TOL: f64 = 1e-10;

/// A completely positive trace-preserving map given by Kraus operators
/// (each `output_dim × input_dim`).
#[derive(Debug, Clone)]
pub struct QuantumChannel {
    name: String,
    input_dim: usize,
    output_dim: usize,
    kraus: Vec<CMat>,
}

/// Isometric realization of a channel: V maps the input space into
/// output ⊗ environment, with the environment initially pure.
#[derive(Debug, Clone)]
pub struct StinespringIsometry {
    pub isometry: CMat,
    pub env_dim: usize,
    pub env_label: String,
}

/// The entropic balance sheet of one channel use.
///
/// `residual_info_loss` records I + L − 2S and `residual_info_noise` records
/// I + N − 2S(Q'); both identities hold up to numerical noise.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChannelReport {
    pub source_entropy: f64,
    pub information: f64,
    pub loss: f64,
    pub noise: f64,
    pub output_entropy: f64,
    pub residual_info_loss: f64,
    pub residual_info_noise: f64,
}

/// The six quantities of the chained-channel data-processing check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DataProcessingReport {
    pub l1: f64,
    pub l12: f64,
    pub i1: f64,
    pub i12: f64,
    pub n2: f64,
    pub n12: f64,
}

impl DataProcessingReport {
    /// Worst violation of the three inequalities 0 ≤ L₁ ≤ L₁₂,
    /// I₁₂ ≤ I₁, 0 ≤ N₂ ≤ N₁₂ (positive means violated).
    pub fn worst_violation(&self) -> f64 {
        [
            -self.l1,
            self.l1 - self.l12,
            self.i12 - self.i1,
            -self.n2,
            self.n2 - self.n12,
        ]
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max)
    }
}

impl QuantumChannel {
    pub fn new<N: Into<String>>(name: N, kraus: Vec<CMat>) -> Result<Self> {
        let name = name.into();
        let first = kraus
            .first()
            .ok_or_else(|| Error::InvalidChannel("channel needs at least one Kraus operator".into()))?;
        let (output_dim, input_dim) = (first.nrows(), first.ncols());
        if input_dim == 0 || output_dim == 0 {
            return Err(Error::InvalidChannel("zero-dimensional Kraus operator".into()));
        }
        for k in &kraus {
            if k.nrows() != output_dim || k.ncols() != input_dim {
                return Err(Error::InvalidChannel(
                    "Kraus operators must share a common shape".into(),
                ));
            }
        }
        let mut completeness = CMat::zeros(input_dim, input_dim);
        for k in &kraus {
            completeness += k.adjoint() * k;
        }
        let mut worst = 0.0_f64;
        for i in 0..input_dim {
            for j in 0..input_dim {
                let expected = if i == j { C64::new(1.0, 0.0) } else { ZERO };
                worst = worst.max((completeness[(i, j)] - expected).norm());
            }
        }
        if worst > CHANNEL_TOL {
            return Err(Error::InvalidChannel(format!(
                "completeness relation violated by {worst:.3e}"
            )));
        }
        Ok(Self {
            name,
            input_dim,
            output_dim,
            kraus,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn output_dim(&self) -> usize {
        self.output_dim
    }

    pub fn kraus(&self) -> &[CMat] {
        &self.kraus
    }

    /// Identity channel on a d-dimensional system.
    pub fn identity(dim: usize) -> Self {
        Self {
            name: format!("identity:{dim}"),
            input_dim: dim,
            output_dim: dim,
            kraus: vec![CMat::identity(dim, dim)],
        }
    }

    /// Single-Kraus channel given by a unitary (or isometry).
    pub fn from_unitary<N: Into<String>>(name: N, u: CMat) -> Result<Self> {
        Self::new(name, vec![u])
    }

    /// Depolarizing channel: bit flip, phase flip, or both, each with
    /// probability p/3. At p = 3/4 the output is fully randomized.
    pub fn depolarizing(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange(format!(
                "depolarizing probability {p} outside [0, 1]"
            )));
        }
        let w_id = (1.0 - p).sqrt();
        let w = (p / 3.0).sqrt();
        let id = CMat::identity(2, 2).map(|z| z * w_id);
        let mut sx = CMat::zeros(2, 2);
        sx[(0, 1)] = C64::new(w, 0.0);
        sx[(1, 0)] = C64::new(w, 0.0);
        let mut sy = CMat::zeros(2, 2);
        sy[(0, 1)] = C64::new(0.0, -w);
        sy[(1, 0)] = C64::new(0.0, w);
        let mut sz = CMat::zeros(2, 2);
        sz[(0, 0)] = C64::new(w, 0.0);
        sz[(1, 1)] = C64::new(-w, 0.0);
        Self::new(format!("depolarizing:{p}"), vec![id, sx, sy, sz])
    }

    /// Erasure channel embedding a qubit into a qutrit: with probability p
    /// the input is replaced by the distinguishable flag state |2⟩, which is
    /// measurable without disturbing the {|0⟩, |1⟩} subspace.
    pub fn erasure(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange(format!(
                "erasure probability {p} outside [0, 1]"
            )));
        }
        let keep = (1.0 - p).sqrt();
        let flag = p.sqrt();
        let mut k0 = CMat::zeros(3, 2);
        k0[(0, 0)] = C64::new(keep, 0.0);
        k0[(1, 1)] = C64::new(keep, 0.0);
        let mut k1 = CMat::zeros(3, 2);
        k1[(2, 0)] = C64::new(flag, 0.0);
        let mut k2 = CMat::zeros(3, 2);
        k2[(2, 1)] = C64::new(flag, 0.0);
        Self::new(format!("erasure:{p}"), vec![k0, k1, k2])
    }

    /// Probabilistic mixture: use `a` with probability `lambda`, else `b`.
    /// Realized as one honest channel by enlarging the environment with an
    /// orthogonal selector index (the two scaled Kraus sets are concatenated).
    pub fn mix(a: &QuantumChannel, b: &QuantumChannel, lambda: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::OutOfRange(format!(
                "mixture weight {lambda} outside [0, 1]"
            )));
        }
        if a.input_dim != b.input_dim || a.output_dim != b.output_dim {
            return Err(Error::DimensionMismatch {
                expected: a.input_dim,
                actual: b.input_dim,
                context: "mixture components must share dimensions".into(),
            });
        }
        let mut kraus = Vec::with_capacity(a.kraus.len() + b.kraus.len());
        for k in &a.kraus {
            kraus.push(k.map(|z| z * lambda.sqrt()));
        }
        for k in &b.kraus {
            kraus.push(k.map(|z| z * (1.0 - lambda).sqrt()));
        }
        Self::new(format!("mix({},{},{lambda})", a.name, b.name), kraus)
    }

    /// Serial composition: Kraus set of all products K₂ⱼ·K₁ᵢ, so the two
    /// environments merge into one.
    pub fn chain(first: &QuantumChannel, second: &QuantumChannel) -> Result<Self> {
        if second.input_dim != first.output_dim {
            return Err(Error::DimensionMismatch {
                expected: first.output_dim,
                actual: second.input_dim,
                context: "chained channel input vs first channel output".into(),
            });
        }
        let mut kraus = Vec::with_capacity(first.kraus.len() * second.kraus.len());
        for k1 in &first.kraus {
            for k2 in &second.kraus {
                kraus.push(k2 * k1);
            }
        }
        Self::new(format!("{} ∘ {}", second.name, first.name), kraus)
    }

    /// Stinespring dilation V|ψ⟩ = Σₖ (Kₖ|ψ⟩) ⊗ |k⟩ with one environment
    /// level per Kraus operator.
    pub fn dilation(&self, env_label: &str) -> StinespringIsometry {
        let ne = self.kraus.len();
        let mut isometry = CMat::zeros(self.output_dim * ne, self.input_dim);
        for (k, op) in self.kraus.iter().enumerate() {
            for i in 0..self.output_dim {
                for j in 0..self.input_dim {
                    isometry[(i * ne + k, j)] = op[(i, j)];
                }
            }
        }
        StinespringIsometry {
            isometry,
            env_dim: ne,
            env_label: env_label.to_string(),
        }
    }

    /// Kraus action Σ K ρ K† on one subsystem of a density state. The target
    /// keeps its label; its dimension becomes the channel's output dimension.
    pub fn apply(&self, state: &DensityState, target: &str) -> Result<DensityState> {
        // route through the dilation so mixed states and dimension changes
        // share one code path
        let d_target = state.layout().dim_of(target)?;
        if d_target != self.input_dim {
            return Err(Error::DimensionMismatch {
                expected: self.input_dim,
                actual: d_target,
                context: format!("channel input vs subsystem `{target}`"),
            });
        }
        let env = fresh_env_label(state.layout(), "E");
        let purified = purify(state, &fresh_env_label(state.layout(), "_ref"))?;
        let expanded = self.apply_with_environment(&purified, target, &env)?;
        let keep: Vec<&str> = state.layout().labels();
        expanded.marginal(&keep)
    }

    /// Dilated action on a pure state: the target subsystem is replaced by
    /// the channel output and a fresh environment register is appended, so
    /// global purity is preserved.
    pub fn apply_with_environment(
        &self,
        state: &PureState,
        target: &str,
        env_label: &str,
    ) -> Result<PureState> {
        let layout = state.layout();
        if layout.contains(env_label) {
            return Err(Error::LayoutConflict(env_label.to_string()));
        }
        let pos = layout.position(target)?;
        let d_in = layout.dim_at(pos);
        if d_in != self.input_dim {
            return Err(Error::DimensionMismatch {
                expected: self.input_dim,
                actual: d_in,
                context: format!("channel input vs subsystem `{target}`"),
            });
        }
        let ne = self.kraus.len();
        let d_out = self.output_dim;

        let mut subsystems: Vec<(String, usize)> = layout
            .subsystems()
            .iter()
            .map(|(l, d)| (l.clone(), *d))
            .collect();
        subsystems[pos].1 = d_out;
        subsystems.push((env_label.to_string(), ne));
        let new_layout = RegisterLayout::new(subsystems)?;

        let pre: usize = (0..pos).map(|p| layout.dim_at(p)).product();
        let post: usize = (pos + 1..layout.len()).map(|p| layout.dim_at(p)).product();
        let amp = state.amplitudes();
        let mut out = nalgebra::DVector::<C64>::zeros(pre * d_out * post * ne);
        for a in 0..pre {
            for b in 0..post {
                for (k, op) in self.kraus.iter().enumerate() {
                    for qo in 0..d_out {
                        let mut acc = ZERO;
                        for qi in 0..d_in {
                            let w = op[(qo, qi)];
                            if w != ZERO {
                                acc += w * amp[(a * d_in + qi) * post + b];
                            }
                        }
                        if acc != ZERO {
                            out[((a * d_out + qo) * post + b) * ne + k] = acc;
                        }
                    }
                }
            }
        }
        PureState::new(new_layout, out)
    }

    /// Entropic report for this channel on the given input. The input is
    /// treated as a single source system, purified against a reference of
    /// the same dimension, and pushed through the dilation.
    pub fn channel_report(&self, input: &DensityState) -> Result<ChannelReport> {
        if input.layout().total_dim() != self.input_dim {
            return Err(Error::DimensionMismatch {
                expected: self.input_dim,
                actual: input.layout().total_dim(),
                context: "channel input vs state dimension".into(),
            });
        }
        let source = input.as_single_register("Q");
        let purified = purify(&source, "R")?;
        self.report_from_purified(&purified, "Q", "E")
    }

    /// Entropic report computed from an already-purified input: every label
    /// other than `target` acts as the reference. The report is independent
    /// of which purification was chosen.
    pub fn report_from_purified(
        &self,
        purified: &PureState,
        target: &str,
        env_label: &str,
    ) -> Result<ChannelReport> {
        let source_entropy = purified.subset_entropy(&[target])?;
        let after = self.apply_with_environment(purified, target, env_label)?;
        let reference: Vec<&str> = after
            .layout()
            .labels()
            .into_iter()
            .filter(|l| *l != target && *l != env_label)
            .collect();
        let information = mutual_entropy(&after, &reference, &[target])?;
        let loss = mutual_entropy(&after, &reference, &[env_label])?;
        let noise = mutual_entropy(&after, &[target], &[env_label])?;
        let output_entropy = after.subset_entropy(&[target])?;
        Ok(ChannelReport {
            source_entropy,
            information,
            loss,
            noise,
            output_entropy,
            residual_info_loss: information + loss - 2.0 * source_entropy,
            residual_info_noise: information + noise - 2.0 * output_entropy,
        })
    }

    /// Chain `first` then `second` on the purified input with two explicit
    /// environments, reporting the per-stage and whole-chain quantities of
    /// the forward and reverse data-processing inequalities.
    pub fn data_processing_check(
        first: &QuantumChannel,
        second: &QuantumChannel,
        input: &DensityState,
    ) -> Result<DataProcessingReport> {
        if input.layout().total_dim() != first.input_dim {
            return Err(Error::DimensionMismatch {
                expected: first.input_dim,
                actual: input.layout().total_dim(),
                context: "first channel input vs state dimension".into(),
            });
        }
        let source = input.as_single_register("Q");
        let purified = purify(&source, "R")?;
        let stage1 = first.apply_with_environment(&purified, "Q", "E1")?;
        let i1 = mutual_entropy(&stage1, &["R"], &["Q"])?;
        let l1 = mutual_entropy(&stage1, &["R"], &["E1"])?;
        let stage2 = second.apply_with_environment(&stage1, "Q", "E2")?;
        let i12 = mutual_entropy(&stage2, &["R"], &["Q"])?;
        let l12 = mutual_entropy(&stage2, &["R"], &["E1", "E2"])?;
        let n2 = mutual_entropy(&stage2, &["Q"], &["E2"])?;
        let n12 = mutual_entropy(&stage2, &["Q"], &["E1", "E2"])?;
        Ok(DataProcessingReport {
            l1,
            l12,
            i1,
            i12,
            n2,
            n12,
        })
    }
}

impl StinespringIsometry {
    /// Max deviation of V†V from the identity.
    pub fn deviation(&self) -> f64 {
        isometry_deviation(&self.isometry)
    }
}

/// First label of the form `{prefix}`, `{prefix}'`, `{prefix}''`, … not
/// present in the layout.
pub fn fresh_env_label(layout: &RegisterLayout, prefix: &str) -> String {
    let mut label = prefix.to_string();
    while layout.contains(&label) {
        label.push('\'');
    }
    label
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registers::von_neumann_entropy;
    use approx::assert_relative_eq;

    fn mixed_qubit() -> DensityState {
        DensityState::maximally_mixed(RegisterLayout::single("S", 2))
    }

    #[test]
    fn identity_dilation_is_trivial() {
        let ch = QuantumChannel::identity(2);
        let dil = ch.dilation("E");
        assert_eq!(dil.env_dim, 1);
        assert!(dil.deviation() < 1e-12);
    }

    #[test]
    fn depolarizing_dilation_has_four_levels() {
        let ch = QuantumChannel::depolarizing(0.3).unwrap();
        assert_eq!(ch.kraus().len(), 4);
        let dil = ch.dilation("E");
        assert_eq!(dil.env_dim, 4);
        assert!(dil.deviation() < 1e-12);
    }

    #[test]
    fn erasure_dilation_embeds_qubit_in_qutrit() {
        let ch = QuantumChannel::erasure(0.5).unwrap();
        assert_eq!(ch.output_dim(), 3);
        let dil = ch.dilation("E");
        assert_eq!(dil.env_dim, 3);
        assert!(dil.deviation() < 1e-12);
    }

    #[test]
    fn constructors_reject_out_of_range_probability() {
        assert!(QuantumChannel::depolarizing(1.5).is_err());
        assert!(QuantumChannel::erasure(-0.1).is_err());
    }

    #[test]
    fn incomplete_kraus_set_rejected() {
        let half = CMat::identity(2, 2).map(|z| z * 0.5);
        assert!(matches!(
            QuantumChannel::new("bad", vec![half]),
            Err(Error::InvalidChannel(_))
        ));
    }

    #[test]
    fn identity_channel_leaves_bell_half_untouched() {
        let bell = PureState::bell_pair("R", "Q").unwrap();
        let out = QuantumChannel::identity(2)
            .apply_with_environment(&bell, "Q", "E")
            .unwrap();
        assert_eq!(out.layout().labels(), vec!["R", "Q", "E"]);
        let rho_rq = out.marginal(&["R", "Q"]).unwrap();
        let expected = bell.to_density();
        assert!((rho_rq.matrix() - expected.matrix()).norm() < 1e-12);
    }

    #[test]
    fn full_depolarizing_bell_half_gives_quarter_identity() {
        let bell = PureState::bell_pair("R", "Q").unwrap();
        let ch = QuantumChannel::depolarizing(0.75).unwrap();
        let out = ch.apply_with_environment(&bell, "Q", "E").unwrap();
        let rho_rq = out.marginal(&["R", "Q"]).unwrap();
        for i in 0..4 {
            assert_relative_eq!(rho_rq.matrix()[(i, i)].re, 0.25, epsilon = 1e-10);
        }
        assert_relative_eq!(rho_rq.entropy(), 2.0, epsilon = 1e-9);
    }

    #[test]
    fn werner_spectrum_from_depolarized_bell_half() {
        // closed-form spectrum {1−p, p/3, p/3, p/3}
        for p in [0.0, 0.25, 0.5, 0.75] {
            let bell = PureState::bell_pair("R", "Q").unwrap();
            let ch = QuantumChannel::depolarizing(p).unwrap();
            let out = ch.apply_with_environment(&bell, "Q", "E").unwrap();
            let eigs = out.marginal(&["R", "Q"]).unwrap().eigenvalues();
            assert_relative_eq!(eigs[0], 1.0 - p, epsilon = 1e-9);
            for e in &eigs[1..] {
                assert_relative_eq!(*e, p / 3.0, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn erasure_action_on_bell_half() {
        // Kraus-action oracle: ρ_RQ' = (1−p)|Ψ⟩⟨Ψ| + p (I/2 ⊗ |2⟩⟨2|)
        let p = 0.3;
        let bell = PureState::bell_pair("R", "Q").unwrap();
        let ch = QuantumChannel::erasure(p).unwrap();
        let out = ch.apply_with_environment(&bell, "Q", "E").unwrap();
        let rho = out.marginal(&["R", "Q"]).unwrap();
        let bell_elem = (1.0 - p) / 2.0;
        // |Ψ⟩⟨Ψ| entries live at Q' ∈ {0,1}: indices (r*3+q)
        assert_relative_eq!(rho.matrix()[(0, 0)].re, bell_elem, epsilon = 1e-10);
        assert_relative_eq!(rho.matrix()[(0, 4)].re, bell_elem, epsilon = 1e-10);
        assert_relative_eq!(rho.matrix()[(4, 4)].re, bell_elem, epsilon = 1e-10);
        // flag block: I/2 ⊗ |2⟩⟨2| at indices 2 and 5
        assert_relative_eq!(rho.matrix()[(2, 2)].re, p / 2.0, epsilon = 1e-10);
        assert_relative_eq!(rho.matrix()[(5, 5)].re, p / 2.0, epsilon = 1e-10);
    }

    #[test]
    fn identity_report_is_lossless_and_noiseless() {
        let report = QuantumChannel::identity(2)
            .channel_report(&mixed_qubit())
            .unwrap();
        assert_relative_eq!(report.source_entropy, 1.0, epsilon = 1e-9);
        assert_relative_eq!(report.information, 2.0, epsilon = 1e-8);
        assert_relative_eq!(report.loss, 0.0, epsilon = 1e-8);
        assert_relative_eq!(report.noise, 0.0, epsilon = 1e-8);
    }

    #[test]
    fn full_depolarizing_report() {
        let report = QuantumChannel::depolarizing(0.75)
            .unwrap()
            .channel_report(&mixed_qubit())
            .unwrap();
        assert_relative_eq!(report.information, 0.0, epsilon = 1e-8);
        assert_relative_eq!(report.loss, 2.0, epsilon = 1e-8);
        assert!(report.residual_info_loss.abs() < 1e-8);
        assert!(report.residual_info_noise.abs() < 1e-8);
    }

    #[test]
    fn erasure_report_closed_form() {
        // block-diagonal spectrum oracle: I = 2(1−p), L = 2p
        for p in [0.0, 0.25, 0.5, 1.0] {
            let report = QuantumChannel::erasure(p)
                .unwrap()
                .channel_report(&mixed_qubit())
                .unwrap();
            assert_relative_eq!(report.information, 2.0 * (1.0 - p), epsilon = 1e-8);
            assert_relative_eq!(report.loss, 2.0 * p, epsilon = 1e-8);
        }
    }

    #[test]
    fn chain_of_identities_is_identity() {
        let id = QuantumChannel::identity(2);
        let chained = QuantumChannel::chain(&id, &id).unwrap();
        let report = chained.channel_report(&mixed_qubit()).unwrap();
        assert_relative_eq!(report.loss, 0.0, epsilon = 1e-8);
        assert_relative_eq!(report.information, 2.0, epsilon = 1e-8);
    }

    #[test]
    fn chain_after_identity_matches_single_stage() {
        let id = QuantumChannel::identity(2);
        let dep = QuantumChannel::depolarizing(0.25).unwrap();
        let chained = QuantumChannel::chain(&id, &dep).unwrap();
        let direct = dep.channel_report(&mixed_qubit()).unwrap();
        let via_chain = chained.channel_report(&mixed_qubit()).unwrap();
        assert_relative_eq!(direct.information, via_chain.information, epsilon = 1e-8);
        assert_relative_eq!(direct.loss, via_chain.loss, epsilon = 1e-8);
        assert_relative_eq!(direct.noise, via_chain.noise, epsilon = 1e-8);
    }

    #[test]
    fn chain_rejects_dimension_mismatch() {
        let erasure = QuantumChannel::erasure(0.5).unwrap(); // 2 -> 3
        let dep = QuantumChannel::depolarizing(0.1).unwrap(); // 2 -> 2
        assert!(QuantumChannel::chain(&erasure, &dep).is_err());
    }

    #[test]
    fn data_processing_for_chained_depolarizing() {
        // dense oracle: effective parameter p₁₂ = p₁+p₂−4p₁p₂/3 = 5/12, so
        // L₁₂ = S_W(5/12) ≈ 1.640269799 > L₁ = S_W(1/4) ≈ 1.207518750
        let dep = QuantumChannel::depolarizing(0.25).unwrap();
        let report =
            QuantumChannel::data_processing_check(&dep, &dep, &mixed_qubit()).unwrap();
        assert_relative_eq!(report.l1, 1.207518749639422, epsilon = 1e-8);
        assert_relative_eq!(report.l12, 1.6402697989319384, epsilon = 1e-8);
        assert!(report.worst_violation() < 1e-8);
        assert!(report.l12 > report.l1 + 0.1);
        assert!(report.i12 < report.i1 - 0.1);
    }

    #[test]
    fn data_processing_trivial_and_noiseless_second_stage() {
        let id = QuantumChannel::identity(2);
        let all_zero =
            QuantumChannel::data_processing_check(&id, &id, &mixed_qubit()).unwrap();
        assert!(all_zero.l12.abs() < 1e-8);
        assert!(all_zero.n12.abs() < 1e-8);

        let erasure = QuantumChannel::erasure(0.25).unwrap();
        let id3 = QuantumChannel::identity(3);
        let report =
            QuantumChannel::data_processing_check(&erasure, &id3, &mixed_qubit()).unwrap();
        assert_relative_eq!(report.l1, report.l12, epsilon = 1e-8);
    }

    #[test]
    fn chained_kraus_matches_two_environment_dilation() {
        let dep = QuantumChannel::depolarizing(0.25).unwrap();
        let chained = QuantumChannel::chain(&dep, &dep).unwrap();
        let report = chained.channel_report(&mixed_qubit()).unwrap();
        let two_env =
            QuantumChannel::data_processing_check(&dep, &dep, &mixed_qubit()).unwrap();
        assert_relative_eq!(report.information, two_env.i12, epsilon = 1e-8);
        assert_relative_eq!(report.loss, two_env.l12, epsilon = 1e-8);
        assert_relative_eq!(report.noise, two_env.n12, epsilon = 1e-8);
    }

    #[test]
    fn apply_matches_dilated_marginal() {
        let p = 0.35;
        let ch = QuantumChannel::erasure(p).unwrap();
        let bell = PureState::bell_pair("R", "Q").unwrap().to_density();
        let rho_out = ch.apply(&bell, "Q").unwrap();
        assert_eq!(rho_out.layout().dim_of("Q").unwrap(), 3);
        assert_relative_eq!(rho_out.matrix().trace().re, 1.0, epsilon = 1e-10);
        let direct = von_neumann_entropy(&rho_out);
        // spectrum {1−p, p/2, p/2}
        let expected = crate::registers::entropy_from_spectrum(&[1.0 - p, p / 2.0, p / 2.0]);
        assert_relative_eq!(direct, expected, epsilon = 1e-9);
    }

    #[test]
    fn mixture_of_channels_is_single_valid_channel() {
        let id = QuantumChannel::identity(2);
        let dep = QuantumChannel::depolarizing(0.75).unwrap();
        let mixed = QuantumChannel::mix(&id, &dep, 0.5).unwrap();
        assert_eq!(mixed.kraus().len(), 5);
        let report = mixed.channel_report(&mixed_qubit()).unwrap();
        assert!(report.residual_info_loss.abs() < 1e-8);
    }
}
