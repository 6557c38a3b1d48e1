//! Joint analysis of n parallel channel uses: joint vs. per-symbol
//! information and loss, the input-correlation term M, and the resulting
//! sandwich ΣLᵢ − 2M ≤ L ≤ ΣLᵢ that makes block coding worthwhile.
//!
//! Per-symbol quantities follow the enlarged-reference convention: when
//! looking at symbol i alone, every other symbol (with its environment)
//! joins the reference, realized here by relabeling on the joint final
//! state rather than re-purifying.

use serde::{Deserialize, Serialize};

use crate::channel::QuantumChannel;
use crate::error::{Error, Result};
use crate::registers::{PureState, State};
use crate::venn::mutual_entropy;

/// Dimension cap on the symbol count; qutrit outputs and environments grow
/// the global state fast beyond this.
pub const SYMBOL_CAP: usize = 6;

/// Joint and per-symbol entropic quantities for one block of n symbols.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlockReport {
    pub n: usize,
    pub joint_information: f64,
    pub joint_loss: f64,
    pub per_symbol_information: Vec<f64>,
    pub per_symbol_loss: Vec<f64>,
    /// M = Σ S(Qᵢ) − S(Q₁…Qₙ): entanglement/correlation between the input
    /// symbols. Zero for independent symbols.
    pub correlation: f64,
    /// l = L/n.
    pub average_loss: f64,
    /// l₁ = Σ Lᵢ / n.
    pub one_symbol_loss: f64,
    /// Σ Iᵢ / (2n): upper bound on the achievable rate of lossless block
    /// transmission.
    pub rate_bound: f64,
}

impl BlockReport {
    pub fn sum_per_symbol_information(&self) -> f64 {
        self.per_symbol_information.iter().sum()
    }

    pub fn sum_per_symbol_loss(&self) -> f64 {
        self.per_symbol_loss.iter().sum()
    }

    /// Worst violation of ΣLᵢ − 2M ≤ L ≤ ΣLᵢ (positive means violated).
    pub fn sandwich_violation(&self) -> f64 {
        let upper = self.joint_loss - self.sum_per_symbol_loss();
        let lower = (self.sum_per_symbol_loss() - 2.0 * self.correlation) - self.joint_loss;
        upper.max(lower)
    }
}

/// Half the averaged one-symbol mutual entropy: an upper bound on the rate
/// S(Q₁…Qₙ)/n achievable with vanishing joint loss.
pub fn rate_bound_one_symbol(report: &BlockReport) -> f64 {
    report.rate_bound
}

fn check_block_args(
    channels: &[QuantumChannel],
    input: &PureState,
    symbols: &[&str],
) -> Result<()> {
    if channels.len() != symbols.len() {
        return Err(Error::DimensionMismatch {
            expected: symbols.len(),
            actual: channels.len(),
            context: "one channel per symbol".into(),
        });
    }
    if symbols.is_empty() {
        return Err(Error::EmptyLabelSet);
    }
    for (ch, symbol) in channels.iter().zip(symbols) {
        let dim = input.layout().dim_of(symbol)?;
        if dim != ch.input_dim() {
            return Err(Error::DimensionMismatch {
                expected: ch.input_dim(),
                actual: dim,
                context: format!("channel input vs symbol `{symbol}`"),
            });
        }
    }
    Ok(())
}

/// Environment label for symbol i of a block (1-based).
pub fn env_label(i: usize) -> String {
    format!("E{i}")
}

/// Apply each channel to its own symbol with its own fresh environment
/// `E1..En`; global purity is preserved.
pub fn parallel_apply(
    channels: &[QuantumChannel],
    input: &PureState,
    symbols: &[&str],
) -> Result<PureState> {
    check_block_args(channels, input, symbols)?;
    let mut state = input.clone();
    for (i, (ch, symbol)) in channels.iter().zip(symbols).enumerate() {
        let env = env_label(i + 1);
        if input.layout().contains(&env) {
            return Err(Error::LayoutConflict(env));
        }
        state = ch.apply_with_environment(&state, symbol, &env)?;
    }
    Ok(state)
}

/// Full block report: joint quantities over all outputs/environments,
/// per-symbol quantities with the enlarged reference, and the correlation
/// term from the input marginals.
pub fn block_report(
    channels: &[QuantumChannel],
    input: &PureState,
    symbols: &[&str],
) -> Result<BlockReport> {
    check_block_args(channels, input, symbols)?;
    let n = symbols.len();

    // correlation between input symbols, before any channel acts
    let mut marginal_sum = 0.0;
    for symbol in symbols {
        marginal_sum += input.subset_entropy(&[symbol])?;
    }
    let joint_symbol_entropy = input.subset_entropy(symbols)?;
    let correlation = marginal_sum - joint_symbol_entropy;

    let final_state = parallel_apply(channels, input, symbols)?;
    let envs: Vec<String> = (1..=n).map(env_label).collect();
    let env_refs: Vec<&str> = envs.iter().map(String::as_str).collect();
    let reference: Vec<&str> = final_state
        .layout()
        .labels()
        .into_iter()
        .filter(|l| !symbols.contains(l) && !env_refs.contains(l))
        .collect();

    let joint_information = mutual_entropy(&final_state, &reference, symbols)?;
    let joint_loss = mutual_entropy(&final_state, &reference, &env_refs)?;

    let mut per_symbol_information = Vec::with_capacity(n);
    let mut per_symbol_loss = Vec::with_capacity(n);
    for i in 0..n {
        // all other symbols and their environments join the reference
        let mut enlarged = reference.clone();
        for (j, symbol) in symbols.iter().enumerate() {
            if j != i {
                enlarged.push(symbol);
                enlarged.push(env_refs[j]);
            }
        }
        per_symbol_information.push(mutual_entropy(&final_state, &enlarged, &[symbols[i]])?);
        per_symbol_loss.push(mutual_entropy(&final_state, &enlarged, &[env_refs[i]])?);
    }

    let sum_loss: f64 = per_symbol_loss.iter().sum();
    let sum_info: f64 = per_symbol_information.iter().sum();
    Ok(BlockReport {
        n,
        joint_information,
        joint_loss,
        per_symbol_information,
        per_symbol_loss,
        correlation,
        average_loss: joint_loss / n as f64,
        one_symbol_loss: sum_loss / n as f64,
        rate_bound: sum_info / (2.0 * n as f64),
    })
}
