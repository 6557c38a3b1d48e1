//! Wire formats: states, channels, and codes exchange as JSON with complex
//! entries spelled as [re, im] pairs, matrices row-major.

use serde::{Deserialize, Serialize};

use crate::channel::QuantumChannel;
use crate::codes::EncodingIsometry;
use crate::error::{Error, Result};
use crate::linalg::{CMat, CVec, C64};
use crate::registers::{DensityState, PureState, RegisterLayout, State};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LayoutEntry {
    pub label: String,
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DensityStateJson {
    pub layout: Vec<LayoutEntry>,
    /// Row-major matrix of [re, im] pairs.
    pub matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PureStateJson {
    pub layout: Vec<LayoutEntry>,
    pub amplitudes: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChannelJson {
    pub name: String,
    pub input_dim: usize,
    pub output_dim: usize,
    /// One row-major matrix of [re, im] pairs per Kraus operator.
    pub kraus: Vec<Vec<Vec<[f64; 2]>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeJson {
    pub k: usize,
    pub n: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

fn layout_to_entries(layout: &RegisterLayout) -> Vec<LayoutEntry> {
    layout
        .subsystems()
        .iter()
        .map(|(label, dim)| LayoutEntry {
            label: label.clone(),
            dim: *dim,
        })
        .collect()
}

fn entries_to_layout(entries: &[LayoutEntry]) -> Result<RegisterLayout> {
    RegisterLayout::new(entries.iter().map(|e| (e.label.clone(), e.dim)).collect())
}

fn matrix_to_rows(m: &CMat) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

fn rows_to_matrix(rows: &[Vec<[f64; 2]>]) -> Result<CMat> {
    let nrows = rows.len();
    if nrows == 0 {
        return Err(Error::Parse("empty matrix".into()));
    }
    let ncols = rows[0].len();
    if ncols == 0 || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Parse("ragged or empty matrix rows".into()));
    }
    Ok(CMat::from_fn(nrows, ncols, |i, j| {
        C64::new(rows[i][j][0], rows[i][j][1])
    }))
}

impl From<&DensityState> for DensityStateJson {
    fn from(state: &DensityState) -> Self {
        DensityStateJson {
            layout: layout_to_entries(state.layout()),
            matrix: matrix_to_rows(state.matrix()),
        }
    }
}

impl TryFrom<&DensityStateJson> for DensityState {
    type Error = Error;
    fn try_from(json: &DensityStateJson) -> Result<Self> {
        DensityState::new(entries_to_layout(&json.layout)?, rows_to_matrix(&json.matrix)?)
    }
}

impl From<&PureState> for PureStateJson {
    fn from(state: &PureState) -> Self {
        PureStateJson {
            layout: layout_to_entries(state.layout()),
            amplitudes: state.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl TryFrom<&PureStateJson> for PureState {
    type Error = Error;
    fn try_from(json: &PureStateJson) -> Result<Self> {
        let amplitudes =
            CVec::from_iterator(json.amplitudes.len(), json.amplitudes.iter().map(|p| C64::new(p[0], p[1])));
        PureState::new(entries_to_layout(&json.layout)?, amplitudes)
    }
}

impl From<&QuantumChannel> for ChannelJson {
    fn from(ch: &QuantumChannel) -> Self {
        ChannelJson {
            name: ch.name().to_string(),
            input_dim: ch.input_dim(),
            output_dim: ch.output_dim(),
            kraus: ch.kraus().iter().map(matrix_to_rows).collect(),
        }
    }
}

impl TryFrom<&ChannelJson> for QuantumChannel {
    type Error = Error;
    fn try_from(json: &ChannelJson) -> Result<Self> {
        let kraus = json
            .kraus
            .iter()
            .map(|rows| rows_to_matrix(rows))
            .collect::<Result<Vec<_>>>()?;
        let ch = QuantumChannel::new(json.name.clone(), kraus)?;
        if ch.input_dim() != json.input_dim || ch.output_dim() != json.output_dim {
            return Err(Error::DimensionMismatch {
                expected: json.input_dim,
                actual: ch.input_dim(),
                context: "declared channel dimensions vs Kraus shapes".into(),
            });
        }
        Ok(ch)
    }
}

impl From<&EncodingIsometry> for CodeJson {
    fn from(code: &EncodingIsometry) -> Self {
        CodeJson {
            k: code.k(),
            n: code.n(),
            matrix: matrix_to_rows(code.matrix()),
        }
    }
}

impl TryFrom<&CodeJson> for EncodingIsometry {
    type Error = Error;
    fn try_from(json: &CodeJson) -> Result<Self> {
        EncodingIsometry::new(json.k, json.n, rows_to_matrix(&json.matrix)?)
    }
}

pub fn density_to_json(state: &DensityState) -> String {
    serde_json::to_string_pretty(&DensityStateJson::from(state)).expect("serializable")
}

pub fn density_from_json(text: &str) -> Result<DensityState> {
    let json: DensityStateJson = serde_json::from_str(text)?;
    DensityState::try_from(&json)
}

pub fn pure_to_json(state: &PureState) -> String {
    serde_json::to_string_pretty(&PureStateJson::from(state)).expect("serializable")
}

pub fn pure_from_json(text: &str) -> Result<PureState> {
    let json: PureStateJson = serde_json::from_str(text)?;
    PureState::try_from(&json)
}

pub fn channel_to_json(ch: &QuantumChannel) -> String {
    serde_json::to_string_pretty(&ChannelJson::from(ch)).expect("serializable")
}

pub fn channel_from_json(text: &str) -> Result<QuantumChannel> {
    let json: ChannelJson = serde_json::from_str(text)?;
    QuantumChannel::try_from(&json)
}

pub fn code_to_json(code: &EncodingIsometry) -> String {
    serde_json::to_string_pretty(&CodeJson::from(code)).expect("serializable")
}

pub fn code_from_json(text: &str) -> Result<EncodingIsometry> {
    let json: CodeJson = serde_json::from_str(text)?;
    EncodingIsometry::try_from(&json)
}
