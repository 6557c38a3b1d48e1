//! The Shannon-channel mirror: information H(X:Y), loss H(X|Y), and noise
//! H(Y|X) of a noisy classical channel, with I + L = H(X), plus the joint
//! n-symbol report whose loss sandwich ΣLᵢ − M ≤ L ≤ ΣLᵢ parallels the
//! quantum one (without the factor two). All entropies are computed in
//! exact probability space.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const DISTRIBUTION_TOL: f64 = 1e-12;

/// A probability distribution over a finite alphabet.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Distribution {
    probabilities: Vec<f64>,
}

impl Distribution {
    pub fn new(probabilities: Vec<f64>) -> Result<Self> {
        if probabilities.is_empty() {
            return Err(Error::InvalidDistribution("empty distribution".into()));
        }
        if probabilities.iter().any(|&p| p < 0.0) {
            return Err(Error::InvalidDistribution(
                "negative probability".into(),
            ));
        }
        let total: f64 = probabilities.iter().sum();
        if (total - 1.0).abs() > DISTRIBUTION_TOL {
            return Err(Error::InvalidDistribution(format!(
                "probabilities sum to {total}, not 1"
            )));
        }
        Ok(Self { probabilities })
    }

    pub fn uniform(n: usize) -> Self {
        Self {
            probabilities: vec![1.0 / n as f64; n],
        }
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probabilities.is_empty()
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn entropy(&self) -> f64 {
        shannon_entropy(&self.probabilities)
    }
}

impl TryFrom<Vec<f64>> for Distribution {
    type Error = Error;
    fn try_from(v: Vec<f64>) -> Result<Self> {
        Distribution::new(v)
    }
}

impl From<Distribution> for Vec<f64> {
    fn from(d: Distribution) -> Self {
        d.probabilities
    }
}

/// H = −Σ p log₂ p over the non-zero entries (unnormalized input tolerated
/// for joint-entropy sub-sums).
pub fn shannon_entropy(probabilities: &[f64]) -> f64 {
    -probabilities
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.log2())
        .sum::<f64>()
}

/// A noisy classical channel given by its transition matrix p(y|x), one row
/// per input symbol.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassicalChannel {
    transition: Vec<Vec<f64>>,
}

impl ClassicalChannel {
    pub fn new(transition: Vec<Vec<f64>>) -> Result<Self> {
        if transition.is_empty() {
            return Err(Error::InvalidDistribution("empty transition matrix".into()));
        }
        let width = transition[0].len();
        for row in &transition {
            if row.len() != width {
                return Err(Error::InvalidDistribution(
                    "ragged transition matrix".into(),
                ));
            }
            Distribution::new(row.clone())?;
        }
        Ok(Self { transition })
    }

    /// Binary symmetric channel with crossover probability q.
    pub fn binary_symmetric(q: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::OutOfRange(format!(
                "crossover probability {q} outside [0, 1]"
            )));
        }
        Self::new(vec![vec![1.0 - q, q], vec![q, 1.0 - q]])
    }

    pub fn input_size(&self) -> usize {
        self.transition.len()
    }

    pub fn output_size(&self) -> usize {
        self.transition[0].len()
    }

    pub fn transition(&self) -> &[Vec<f64>] {
        &self.transition
    }
}

/// The (I, L, N) balance of one classical channel use; I + L = H(X).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassicalReport {
    pub information: f64,
    pub loss: f64,
    pub noise: f64,
    pub input_entropy: f64,
}

/// Joint and per-symbol quantities for n independent channels fed a joint
/// input; M = ΣH(Xᵢ) − H(X₁…Xₙ).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassicalBlockReport {
    pub n: usize,
    pub joint_information: f64,
    pub joint_loss: f64,
    pub per_symbol_information: Vec<f64>,
    pub per_symbol_loss: Vec<f64>,
    pub correlation: f64,
}

impl ClassicalBlockReport {
    pub fn sum_per_symbol_loss(&self) -> f64 {
        self.per_symbol_loss.iter().sum()
    }

    pub fn sum_per_symbol_information(&self) -> f64 {
        self.per_symbol_information.iter().sum()
    }

    /// Worst violation of ΣLᵢ − M ≤ L ≤ ΣLᵢ (positive means violated).
    pub fn sandwich_violation(&self) -> f64 {
        let upper = self.joint_loss - self.sum_per_symbol_loss();
        let lower = (self.sum_per_symbol_loss() - self.correlation) - self.joint_loss;
        upper.max(lower)
    }

    /// Averaged one-symbol information ΣIᵢ/n: the rate bound for lossless
    /// block transmission.
    pub fn rate_bound(&self) -> f64 {
        self.sum_per_symbol_information() / self.n as f64
    }
}

fn report_from_joint(joint: &[Vec<f64>]) -> ClassicalReport {
    let nx = joint.len();
    let ny = joint[0].len();
    let px: Vec<f64> = joint.iter().map(|row| row.iter().sum()).collect();
    let mut py = vec![0.0; ny];
    for row in joint {
        for (y, &p) in row.iter().enumerate() {
            py[y] += p;
        }
    }
    let flat: Vec<f64> = joint.iter().flatten().copied().collect();
    let h_x = shannon_entropy(&px);
    let h_y = shannon_entropy(&py);
    let h_xy = shannon_entropy(&flat);
    let _ = nx;
    ClassicalReport {
        information: h_x + h_y - h_xy,
        loss: h_xy - h_y,
        noise: h_xy - h_x,
        input_entropy: h_x,
    }
}

/// Information, loss, and noise of one channel use from the joint
/// distribution p(x)p(y|x).
pub fn classical_report(
    channel: &ClassicalChannel,
    input: &Distribution,
) -> Result<ClassicalReport> {
    if input.len() != channel.input_size() {
        return Err(Error::DimensionMismatch {
            expected: channel.input_size(),
            actual: input.len(),
            context: "input distribution vs channel".into(),
        });
    }
    let joint: Vec<Vec<f64>> = input
        .probabilities()
        .iter()
        .zip(channel.transition())
        .map(|(&px, row)| row.iter().map(|&pyx| px * pyx).collect())
        .collect();
    Ok(report_from_joint(&joint))
}

/// Joint block report for n independent channels and a joint input
/// distribution over the product alphabet (row-major, leftmost symbol most
/// significant).
pub fn classical_block_report(
    channels: &[ClassicalChannel],
    joint_input: &Distribution,
) -> Result<ClassicalBlockReport> {
    let n = channels.len();
    if n == 0 {
        return Err(Error::EmptyLabelSet);
    }
    let input_dims: Vec<usize> = channels.iter().map(|c| c.input_size()).collect();
    let output_dims: Vec<usize> = channels.iter().map(|c| c.output_size()).collect();
    let dx: usize = input_dims.iter().product();
    let dy: usize = output_dims.iter().product();
    if joint_input.len() != dx {
        return Err(Error::DimensionMismatch {
            expected: dx,
            actual: joint_input.len(),
            context: "joint input vs product of channel input alphabets".into(),
        });
    }

    let decode = |mut idx: usize, dims: &[usize]| -> Vec<usize> {
        let mut digits = vec![0usize; dims.len()];
        for (i, &d) in dims.iter().enumerate().rev() {
            digits[i] = idx % d;
            idx /= d;
        }
        digits
    };

    // full joint p(x⃗, y⃗) = p(x⃗) Π p(yᵢ|xᵢ)
    let mut joint = vec![vec![0.0; dy]; dx];
    for (x_idx, &px) in joint_input.probabilities().iter().enumerate() {
        if px == 0.0 {
            continue;
        }
        let xs = decode(x_idx, &input_dims);
        for (y_idx, slot) in joint[x_idx].iter_mut().enumerate() {
            let ys = decode(y_idx, &output_dims);
            let mut p = px;
            for i in 0..n {
                p *= channels[i].transition()[xs[i]][ys[i]];
            }
            *slot = p;
        }
    }

    let whole = report_from_joint(&joint);

    // per-symbol marginal joints p(xᵢ, yᵢ)
    let mut per_symbol_information = Vec::with_capacity(n);
    let mut per_symbol_loss = Vec::with_capacity(n);
    let mut marginal_entropy_sum = 0.0;
    for i in 0..n {
        let mut marginal = vec![vec![0.0; output_dims[i]]; input_dims[i]];
        for (x_idx, row) in joint.iter().enumerate() {
            let xs = decode(x_idx, &input_dims);
            for (y_idx, &p) in row.iter().enumerate() {
                if p > 0.0 {
                    let ys = decode(y_idx, &output_dims);
                    marginal[xs[i]][ys[i]] += p;
                }
            }
        }
        let report = report_from_joint(&marginal);
        marginal_entropy_sum += report.input_entropy;
        per_symbol_information.push(report.information);
        per_symbol_loss.push(report.loss);
    }

    Ok(ClassicalBlockReport {
        n,
        joint_information: whole.information,
        joint_loss: whole.loss,
        per_symbol_information,
        per_symbol_loss,
        correlation: marginal_entropy_sum - whole.input_entropy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::dyadic_entropy;
    use approx::assert_relative_eq;

    #[test]
    fn noiseless_binary_channel_is_lossless() {
        let ch = ClassicalChannel::binary_symmetric(0.0).unwrap();
        let report = classical_report(&ch, &Distribution::uniform(2)).unwrap();
        assert_relative_eq!(report.information, 1.0, epsilon = 1e-12);
        assert_relative_eq!(report.loss, 0.0, epsilon = 1e-12);
        assert_relative_eq!(report.noise, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn fully_random_bsc_loses_everything() {
        let ch = ClassicalChannel::binary_symmetric(0.5).unwrap();
        let report = classical_report(&ch, &Distribution::uniform(2)).unwrap();
        assert_relative_eq!(report.information, 0.0, epsilon = 1e-12);
        assert_relative_eq!(report.loss, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn bsc_information_matches_dyadic_entropy_oracle() {
        let ch = ClassicalChannel::binary_symmetric(0.11).unwrap();
        let report = classical_report(&ch, &Distribution::uniform(2)).unwrap();
        assert_relative_eq!(
            report.information,
            1.0 - dyadic_entropy(0.11),
            epsilon = 1e-10
        );
        assert_relative_eq!(
            report.information + report.loss,
            report.input_entropy,
            epsilon = 1e-10
        );
    }

    #[test]
    fn independent_inputs_make_block_loss_additive() {
        let ch = ClassicalChannel::binary_symmetric(0.2).unwrap();
        let input = Distribution::uniform(4); // two independent uniform bits
        let report = classical_block_report(&[ch.clone(), ch], &input).unwrap();
        assert_relative_eq!(report.correlation, 0.0, epsilon = 1e-12);
        assert_relative_eq!(
            report.joint_loss,
            report.sum_per_symbol_loss(),
            epsilon = 1e-10
        );
    }

    #[test]
    fn correlated_bits_beat_one_symbol_loss() {
        // perfectly correlated 2-bit input through two BSCs
        let ch = ClassicalChannel::binary_symmetric(0.2).unwrap();
        let input = Distribution::new(vec![0.5, 0.0, 0.0, 0.5]).unwrap();
        let report = classical_block_report(&[ch.clone(), ch], &input).unwrap();
        assert_relative_eq!(report.correlation, 1.0, epsilon = 1e-10);
        assert!(report.joint_loss < report.sum_per_symbol_loss() - 0.05);
        assert!(report.sandwich_violation() < 1e-10);
    }

    #[test]
    fn single_symbol_block_reduces_to_plain_report() {
        let ch = ClassicalChannel::binary_symmetric(0.3).unwrap();
        let input = Distribution::new(vec![0.7, 0.3]).unwrap();
        let block = classical_block_report(&[ch.clone()], &input).unwrap();
        let plain = classical_report(&ch, &input).unwrap();
        assert_relative_eq!(block.joint_information, plain.information, epsilon = 1e-12);
        assert_relative_eq!(block.joint_loss, plain.loss, epsilon = 1e-12);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let ch = ClassicalChannel::binary_symmetric(0.1).unwrap();
        assert!(classical_report(&ch, &Distribution::uniform(3)).is_err());
    }

    #[test]
    fn invalid_transition_rows_rejected() {
        assert!(ClassicalChannel::new(vec![vec![0.5, 0.4]]).is_err());
        assert!(ClassicalChannel::new(vec![vec![0.5, 0.5], vec![1.0]]).is_err());
    }
}
