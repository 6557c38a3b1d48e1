//! Erasure-code verification through entropy: a pattern of erased physical
//! qubits is correctable exactly when the erased piece carries no mutual
//! entropy with the reference, equivalently when the codeword's full
//! entanglement is concentrated in the unerased piece. Exhaustive pattern
//! checks against the quantum Singleton bound k ≤ n − 2e.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{isometry_deviation, CMat, C64, ONE, ZERO};
use crate::registers::{PureState, RegisterLayout, State};
use crate::venn::mutual_entropy;

/// Correctability tolerance on S(R:Q_e). Looser than the entropy tolerance
/// because the mutual entropy of a correctable pattern accumulates error
/// across a multi-subsystem marginal chain.
pub const CORRECTABLE_TOL: f64 = 1e-7;

/// An ((n, k)) encoding: isometry from k logical qubits into n physical ones.
#[derive(Debug, Clone)]
pub struct EncodingIsometry {
    k: usize,
    n: usize,
    matrix: CMat,
}

/// Mutual entropies of the reference with the erased and unerased pieces.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PatternLoss {
    pub mutual_erased: f64,
    pub mutual_unerased: f64,
}

/// Exhaustive verdict over all erasure patterns of a given size.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErasureVerdict {
    pub correctable: bool,
    pub worst_pattern_loss: f64,
    pub patterns_checked: usize,
}

/// Which error model a rate bound refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ErrorModel {
    Erasures,
    Errors,
}

impl EncodingIsometry {
    pub fn new(k: usize, n: usize, matrix: CMat) -> Result<Self> {
        if matrix.nrows() != 1 << n || matrix.ncols() != 1 << k {
            return Err(Error::InvalidCode(format!(
                "expected a {}x{} matrix for an (({n},{k})) code, got {}x{}",
                1 << n,
                1 << k,
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let dev = isometry_deviation(&matrix);
        if dev > 1e-10 {
            return Err(Error::InvalidCode(format!(
                "V†V deviates from the identity by {dev:.3e}"
            )));
        }
        Ok(Self { k, n, matrix })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    /// Trivial k = n = code: the identity map.
    pub fn trivial(k: usize) -> Self {
        let d = 1 << k;
        Self {
            k,
            n: k,
            matrix: CMat::identity(d, d),
        }
    }

    /// The five-qubit ((5,1)) code, built from its stabilizer generators
    /// XZZXI, IXZZX, XIXZZ, ZXIXZ: project the seeds |00000⟩ and X⊗5|00000⟩
    /// onto the code space and normalize.
    pub fn five_qubit() -> Self {
        let generators = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"];
        let dim = 32;
        let mut projector = CMat::identity(dim, dim);
        for g in generators {
            let gm = pauli_string(g);
            let sum = (CMat::identity(dim, dim) + gm).map(|z| z * 0.5);
            projector = &projector * sum;
        }
        let seed0 = {
            let mut v = nalgebra::DVector::<C64>::zeros(dim);
            v[0] = ONE;
            v
        };
        let logical_x = pauli_string("XXXXX");
        let mut v0 = &projector * seed0;
        v0 /= C64::new(v0.norm(), 0.0);
        let v1 = &logical_x * &v0;
        let mut matrix = CMat::zeros(dim, 2);
        matrix.set_column(0, &v0);
        matrix.set_column(1, &v1);
        Self::new(1, 5, matrix).expect("five-qubit encoder is an isometry")
    }

    /// The ((4,2)) erasure code with stabilizers XXXX and ZZZZ; codewords are
    /// the even-weight GHZ-type pairs.
    pub fn four_two() -> Self {
        let pairs = [
            (0b0000usize, 0b1111usize),
            (0b0011, 0b1100),
            (0b0101, 0b1010),
            (0b0110, 0b1001),
        ];
        let w = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let mut matrix = CMat::zeros(16, 4);
        for (col, (a, b)) in pairs.into_iter().enumerate() {
            matrix[(a, col)] = w;
            matrix[(b, col)] = w;
        }
        Self::new(2, 4, matrix).expect("((4,2)) encoder is an isometry")
    }

    /// Encode half of a maximally entangled state: (1_R ⊗ V)|Φ⟩ over the
    /// reference register R (dimension 2^k) and physical qubits Q1..Qn,
    /// so that S(R) = k.
    pub fn encode_entangled(&self) -> Result<PureState> {
        let dk = 1 << self.k;
        let dn = 1 << self.n;
        let physical = RegisterLayout::uniform("Q", self.n, 2);
        let layout = RegisterLayout::single("R", dk).concat(&physical)?;
        let w = 1.0 / (dk as f64).sqrt();
        let mut amplitudes = nalgebra::DVector::<C64>::zeros(dk * dn);
        for logical in 0..dk {
            for phys in 0..dn {
                let amp = self.matrix[(phys, logical)];
                if amp != ZERO {
                    amplitudes[logical * dn + phys] = amp * w;
                }
            }
        }
        PureState::new(layout, amplitudes)
    }

    /// Mutual entropies of the reference with an erased pattern (1-based
    /// physical indices) and with its complement, computed on the encoded
    /// entangled state. The pattern is correctable exactly when the erased
    /// side carries no mutual entropy, equivalently when the unerased side
    /// carries all 2k of it.
    pub fn erasure_pattern_loss(&self, pattern: &[usize]) -> Result<PatternLoss> {
        for &i in pattern {
            if i == 0 || i > self.n {
                return Err(Error::OutOfRange(format!(
                    "physical index {i} outside 1..={}",
                    self.n
                )));
            }
        }
        let encoded = self.encode_entangled()?;
        pattern_loss_on_state(&encoded, &["R"], self.n, pattern, 2.0 * self.k as f64)
    }

    /// Exhaustively check all C(n, e) erasure patterns of size e.
    pub fn verify_erasure_code(&self, erasures: usize) -> Result<ErasureVerdict> {
        if erasures > self.n {
            return Err(Error::OutOfRange(format!(
                "cannot erase {erasures} of {} qubits",
                self.n
            )));
        }
        let encoded = self.encode_entangled()?;
        let mut worst = 0.0_f64;
        let mut checked = 0usize;
        for pattern in (1..=self.n).combinations(erasures) {
            let loss =
                pattern_loss_on_state(&encoded, &["R"], self.n, &pattern, 2.0 * self.k as f64)?;
            worst = worst.max(loss.mutual_erased);
            checked += 1;
        }
        Ok(ErasureVerdict {
            correctable: worst <= CORRECTABLE_TOL,
            worst_pattern_loss: worst,
            patterns_checked: checked,
        })
    }
}

/// Shared pattern-loss computation: mutual entropy of `reference` with the
/// erased qubit set and with its complement, on any state carrying physical
/// labels Q1..Qn. An empty pattern trivially has zero erased-side mutual
/// entropy; a full pattern has zero unerased-side mutual entropy.
pub(crate) fn pattern_loss_on_state(
    state: &impl State,
    reference: &[&str],
    n: usize,
    pattern: &[usize],
    full_mutual: f64,
) -> Result<PatternLoss> {
    let erased: Vec<String> = pattern.iter().map(|i| format!("Q{i}")).collect();
    let unerased: Vec<String> = (1..=n)
        .filter(|i| !pattern.contains(i))
        .map(|i| format!("Q{i}"))
        .collect();
    let erased_refs: Vec<&str> = erased.iter().map(String::as_str).collect();
    let unerased_refs: Vec<&str> = unerased.iter().map(String::as_str).collect();
    let mutual_erased = if erased_refs.is_empty() {
        0.0
    } else {
        mutual_entropy(state, reference, &erased_refs)?
    };
    let mutual_unerased = if unerased_refs.is_empty() {
        0.0
    } else if erased_refs.is_empty() {
        full_mutual
    } else {
        mutual_entropy(state, reference, &unerased_refs)?
    };
    Ok(PatternLoss {
        mutual_erased,
        mutual_unerased,
    })
}

/// Quantum Singleton bound: the largest k an ((n, k)) code correcting e
/// erasures can have, max(n − 2e, 0).
pub fn singleton_max_k(n: usize, e: usize) -> usize {
    n.saturating_sub(2 * e)
}

/// Rate bound for a channel with a bounded fraction p of erasures (1 − 2p)
/// or of errors (1 − 4p, through the error/erasure correspondence e = 2t),
/// clamped to [0, 1].
pub fn bounded_fraction_rate_bound(p: f64, model: ErrorModel) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange(format!("fraction {p} outside [0, 1]")));
    }
    let raw = match model {
        ErrorModel::Erasures => 1.0 - 2.0 * p,
        ErrorModel::Errors => 1.0 - 4.0 * p,
    };
    Ok(raw.clamp(0.0, 1.0))
}

/// Pauli string (over I, X, Y, Z) as a dense matrix, leftmost character most
/// significant.
pub fn pauli_string(s: &str) -> CMat {
    let single = |c: char| -> CMat {
        let mut m = CMat::zeros(2, 2);
        match c {
            'I' => {
                m[(0, 0)] = ONE;
                m[(1, 1)] = ONE;
            }
            'X' => {
                m[(0, 1)] = ONE;
                m[(1, 0)] = ONE;
            }
            'Y' => {
                m[(0, 1)] = C64::new(0.0, -1.0);
                m[(1, 0)] = C64::new(0.0, 1.0);
            }
            'Z' => {
                m[(0, 0)] = ONE;
                m[(1, 1)] = C64::new(-1.0, 0.0);
            }
            other => panic!("unknown Pauli symbol `{other}`"),
        }
        m
    };
    let mut chars = s.chars();
    let first = single(chars.next().expect("nonempty Pauli string"));
    chars.fold(first, |acc, c| acc.kronecker(&single(c)))
}
