//! Analytic capacity machinery: the binomial-mixture decomposition of the
//! erasure and depolarizing channels, dual-channel relations, the average
//! loss lower bound, and the catalog of rate bound formulas.
//!
//! The joint n-symbol channel at probability p is a probabilistic mixture of
//! 2ⁿ pattern channels, each erasing (or randomizing) a fixed subset of
//! symbols, with binomial weights. Convexity of the mutual entropy in the
//! output then bounds the joint information by the weighted per-pattern sum.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::blockcoding::{parallel_apply, SYMBOL_CAP};
use crate::channel::QuantumChannel;
use crate::error::{Error, Result};
use crate::registers::{tensor_product, DensityState, PureState, RegisterLayout, State};
use crate::venn::mutual_entropy;

/// Dyadic Shannon entropy H(x) = −x log₂x − (1−x) log₂(1−x).
pub fn dyadic_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Noise model for mixture and dual-channel analyses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NoiseModel {
    Erasure,
    Depolarizing,
}

impl NoiseModel {
    /// Binomial weight parameter of the pattern mixture: p for erasure,
    /// 4p/3 for depolarizing (a qubit is fully randomized with that
    /// probability).
    pub fn mixture_parameter(&self, p: f64) -> f64 {
        match self {
            NoiseModel::Erasure => p,
            NoiseModel::Depolarizing => 4.0 * p / 3.0,
        }
    }

    /// Dual channel probability: 1 − p for erasure, 3/4 − p for depolarizing.
    pub fn dual_probability(&self, p: f64) -> f64 {
        match self {
            NoiseModel::Erasure => 1.0 - p,
            NoiseModel::Depolarizing => 0.75 - p,
        }
    }

    pub fn channel(&self, p: f64) -> Result<QuantumChannel> {
        match self {
            NoiseModel::Erasure => QuantumChannel::erasure(p),
            NoiseModel::Depolarizing => QuantumChannel::depolarizing(p),
        }
    }

    fn validate_probability(&self, p: f64) -> Result<()> {
        match self {
            NoiseModel::Erasure if (0.0..=1.0).contains(&p) => Ok(()),
            NoiseModel::Depolarizing if (0.0..=0.75).contains(&p) => Ok(()),
            NoiseModel::Erasure => Err(Error::OutOfRange(format!(
                "erasure probability {p} outside [0, 1]"
            ))),
            NoiseModel::Depolarizing => Err(Error::OutOfRange(format!(
                "depolarizing probability {p} outside the mixture validity range [0, 3/4]"
            ))),
        }
    }

    /// State that replaces an affected symbol: the orthogonal flag |2⟩⟨2|
    /// for erasure, the fully randomized qubit I/2 for depolarizing. Either
    /// way the replacement is independent of everything else.
    fn replacement_state(&self, label: &str) -> DensityState {
        match self {
            NoiseModel::Erasure => {
                let layout = RegisterLayout::single(label, 3);
                DensityState::diagonal(layout, &[0.0, 0.0, 1.0]).expect("valid flag state")
            }
            NoiseModel::Depolarizing => {
                DensityState::maximally_mixed(RegisterLayout::single(label, 2))
            }
        }
    }
}

/// One pattern of the binomial mixture: which symbols (1-based) are affected
/// and with what weight.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PatternWeight {
    pub pattern: Vec<usize>,
    pub weight: f64,
}

/// Binomial-mixture decomposition of the joint n-symbol channel.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MixtureAnalysis {
    pub n: usize,
    pub p: f64,
    pub model: NoiseModel,
    /// Information of the true joint product channel, S(R:Q₁'…Qₙ').
    pub joint_information: f64,
    /// Σ w_c I_c over all 2ⁿ patterns; upper-bounds the joint information.
    pub convex_bound: f64,
    pub weights: Vec<PatternWeight>,
    pub per_pattern_information: Vec<f64>,
    /// k + n(1 − 2q) with q the mixture parameter: the pattern-pairing bound
    /// on the joint information. Can exceed 2k at small p; recorded as an
    /// intermediate value without any tightness claim.
    pub paired_pattern_bound: f64,
}

/// Joint information and loss of the channel at p and at its dual
/// probability, on the same input.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DualChannelReport {
    pub p: f64,
    pub dual_p: f64,
    pub information_p: f64,
    pub information_dual: f64,
    pub loss_p: f64,
    pub loss_dual: f64,
    pub sum_information: f64,
    pub sum_loss: f64,
}

fn reference_labels<'a>(input: &'a PureState, symbols: &[&str]) -> Vec<&'a str> {
    input
        .layout()
        .labels()
        .into_iter()
        .filter(|l| !symbols.contains(l))
        .collect()
}

fn check_mixture_args(
    input: &PureState,
    symbols: &[&str],
    p: f64,
    model: NoiseModel,
) -> Result<()> {
    model.validate_probability(p)?;
    if symbols.is_empty() {
        return Err(Error::EmptyLabelSet);
    }
    if symbols.len() > SYMBOL_CAP {
        return Err(Error::SymbolCapExceeded(symbols.len(), SYMBOL_CAP));
    }
    for symbol in symbols {
        if input.layout().dim_of(symbol)? != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                actual: input.layout().dim_of(symbol)?,
                context: format!("mixture analysis expects qubit symbols, `{symbol}`"),
            });
        }
    }
    if reference_labels(input, symbols).is_empty() {
        return Err(Error::EmptyLabelSet);
    }
    Ok(())
}

/// Information of one pattern channel: the affected symbols are explicitly
/// replaced by independent flag/randomized states, then S(R : Q₁…Qₙ) is
/// computed on the composite. Nothing about the pattern's independence is
/// assumed.
fn pattern_information(
    input: &PureState,
    reference: &[&str],
    symbols: &[&str],
    pattern: &[usize],
    model: NoiseModel,
) -> Result<f64> {
    let kept: Vec<&str> = reference
        .iter()
        .copied()
        .chain(
            symbols
                .iter()
                .enumerate()
                .filter(|(i, _)| !pattern.contains(&(i + 1)))
                .map(|(_, s)| *s),
        )
        .collect();
    let mut state = input.marginal(&kept)?;
    for &i in pattern {
        let replacement = model.replacement_state(symbols[i - 1]);
        state = tensor_product(&state, &replacement)?;
    }
    mutual_entropy(&state, reference, symbols)
}

/// Decompose the joint n-symbol channel into its 2ⁿ binomial patterns and
/// compare the true joint information against the convex per-pattern bound.
pub fn binomial_mixture_analysis(
    input: &PureState,
    symbols: &[&str],
    p: f64,
    model: NoiseModel,
) -> Result<MixtureAnalysis> {
    check_mixture_args(input, symbols, p, model)?;
    let n = symbols.len();
    let reference = reference_labels(input, symbols);
    let q = model.mixture_parameter(p);

    let mut weights = Vec::with_capacity(1 << n);
    let mut per_pattern_information = Vec::with_capacity(1 << n);
    let mut convex_bound = 0.0;
    for e in 0..=n {
        for pattern in (1..=n).combinations(e) {
            let weight = q.powi(e as i32) * (1.0 - q).powi((n - e) as i32);
            let info = pattern_information(input, &reference, symbols, &pattern, model)?;
            convex_bound += weight * info;
            weights.push(PatternWeight { pattern, weight });
            per_pattern_information.push(info);
        }
    }

    let channels = vec![model.channel(p)?; n];
    let final_state = parallel_apply(&channels, input, symbols)?;
    let joint_information = mutual_entropy(&final_state, &reference, symbols)?;

    let k = input.subset_entropy(&reference)?;
    Ok(MixtureAnalysis {
        n,
        p,
        model,
        joint_information,
        convex_bound,
        weights,
        per_pattern_information,
        paired_pattern_bound: k + n as f64 * (1.0 - 2.0 * q),
    })
}

/// Joint information/loss of the channel at p and at its dual probability on
/// the same input: I(p) + I(dual) ≤ 2k and L(p) + L(dual) ≥ 2k.
pub fn dual_channel_relation(
    input: &PureState,
    symbols: &[&str],
    p: f64,
    model: NoiseModel,
) -> Result<DualChannelReport> {
    check_mixture_args(input, symbols, p, model)?;
    let dual_p = model.dual_probability(p);
    model.validate_probability(dual_p)?;
    let reference = reference_labels(input, symbols);

    let mut info = [0.0; 2];
    let mut loss = [0.0; 2];
    for (slot, prob) in [p, dual_p].into_iter().enumerate() {
        let channels = vec![model.channel(prob)?; symbols.len()];
        let final_state = parallel_apply(&channels, input, symbols)?;
        let envs: Vec<String> = (1..=symbols.len())
            .map(crate::blockcoding::env_label)
            .collect();
        let env_refs: Vec<&str> = envs.iter().map(String::as_str).collect();
        info[slot] = mutual_entropy(&final_state, &reference, symbols)?;
        loss[slot] = mutual_entropy(&final_state, &reference, &env_refs)?;
    }
    Ok(DualChannelReport {
        p,
        dual_p,
        information_p: info[0],
        information_dual: info[1],
        loss_p: loss[0],
        loss_dual: loss[1],
        sum_information: info[0] + info[1],
        sum_loss: loss[0] + loss[1],
    })
}

/// Lower bound on the average loss per symbol at rate R: max(R + 2p − 1, 0)
/// for erasure, max(R + 8p/3 − 1, 0) for depolarizing.
pub fn average_loss_lower_bound(p: f64, rate: f64, model: NoiseModel) -> Result<f64> {
    model.validate_probability(p)?;
    if !(0.0..=1.0).contains(&rate) {
        return Err(Error::OutOfRange(format!("rate {rate} outside [0, 1]")));
    }
    let raw = match model {
        NoiseModel::Erasure => rate + 2.0 * p - 1.0,
        NoiseModel::Depolarizing => rate + 8.0 * p / 3.0 - 1.0,
    };
    Ok(raw.max(0.0))
}

/// The rate bound formulas in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormulaId {
    #[serde(rename = "erasure_1_2p")]
    Erasure1_2p,
    #[serde(rename = "errors_1_4p")]
    Errors1_4p,
    #[serde(rename = "depol_8p3")]
    Depol8p3,
    #[serde(rename = "depol_cloning_4p")]
    DepolCloning4p,
    #[serde(rename = "depol_hashing_1_Hp")]
    DepolHashing1Hp,
    #[serde(rename = "stabilizer_H_bound")]
    StabilizerHBound,
}

impl FormulaId {
    pub const ALL: [FormulaId; 6] = [
        FormulaId::Erasure1_2p,
        FormulaId::Errors1_4p,
        FormulaId::Depol8p3,
        FormulaId::DepolCloning4p,
        FormulaId::DepolHashing1Hp,
        FormulaId::StabilizerHBound,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            FormulaId::Erasure1_2p => "erasure_1_2p",
            FormulaId::Errors1_4p => "errors_1_4p",
            FormulaId::Depol8p3 => "depol_8p3",
            FormulaId::DepolCloning4p => "depol_cloning_4p",
            FormulaId::DepolHashing1Hp => "depol_hashing_1_Hp",
            FormulaId::StabilizerHBound => "stabilizer_H_bound",
        }
    }

    /// Probability range over which the formula is monotone non-increasing
    /// and quoted as a meaningful bound.
    pub fn validity_range(&self) -> (f64, f64) {
        match self {
            FormulaId::Erasure1_2p | FormulaId::Errors1_4p | FormulaId::DepolCloning4p => {
                (0.0, 1.0)
            }
            FormulaId::Depol8p3 => (0.0, 0.75),
            FormulaId::DepolHashing1Hp => (0.0, 0.5),
            FormulaId::StabilizerHBound => (0.0, 0.25),
        }
    }

    pub fn validity_note(&self, p: f64) -> String {
        let (lo, hi) = self.validity_range();
        if p < lo || p > hi {
            format!("outside stated range [{lo}, {hi}]")
        } else {
            match self {
                FormulaId::Depol8p3 => "valid as a convex-mixture bound for p <= 3/4".into(),
                FormulaId::DepolHashing1Hp => "additive/stabilizer hashing bound".into(),
                FormulaId::StabilizerHBound => "additive (stabilizer) codes only".into(),
                _ => "valid".into(),
            }
        }
    }

    /// Evaluate the formula at p, clamped to [0, 1].
    pub fn evaluate(&self, p: f64) -> f64 {
        let raw = match self {
            FormulaId::Erasure1_2p => 1.0 - 2.0 * p,
            FormulaId::Errors1_4p => 1.0 - 4.0 * p,
            FormulaId::Depol8p3 => 1.0 - 8.0 * p / 3.0,
            FormulaId::DepolCloning4p => 1.0 - 4.0 * p,
            FormulaId::DepolHashing1Hp => 1.0 - dyadic_entropy(p),
            FormulaId::StabilizerHBound => {
                let arg = 2.0 * p * (1.0 - 2.0 * p);
                if arg < 0.0 {
                    0.0
                } else {
                    dyadic_entropy(0.5 + arg.sqrt())
                }
            }
        };
        raw.clamp(0.0, 1.0)
    }
}

/// A named bound formula sampled over a probability grid, with each sample
/// clamped to [0, 1].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundCurve {
    pub name: String,
    pub formula: FormulaId,
    pub samples: Vec<(f64, f64)>,
}

pub fn bound_curve(formula: FormulaId, grid: &[f64]) -> BoundCurve {
    BoundCurve {
        name: formula.id().to_string(),
        formula,
        samples: grid.iter().map(|&p| (p, formula.evaluate(p))).collect(),
    }
}

/// One catalog row: a formula evaluated at p with its validity annotation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub formula: FormulaId,
    pub r_max: f64,
    pub validity: String,
}

/// All formulas evaluated at one probability, plus the flag that general
/// nondegenerate codes have zero rate for p ≥ 1/6 (a cited threshold, not a
/// curve).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundCatalog {
    pub p: f64,
    pub entries: Vec<CatalogEntry>,
    pub nondegenerate_zero_rate: bool,
}

pub fn capacity_bound_catalog(p: f64) -> Result<BoundCatalog> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange(format!("probability {p} outside [0, 1]")));
    }
    let entries = FormulaId::ALL
        .iter()
        .map(|f| CatalogEntry {
            formula: *f,
            r_max: f.evaluate(p),
            validity: f.validity_note(p),
        })
        .collect();
    Ok(BoundCatalog {
        p,
        entries,
        nondegenerate_zero_rate: p >= 1.0 / 6.0,
    })
}
