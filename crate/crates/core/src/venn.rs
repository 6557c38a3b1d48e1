//! Entropy calculus over label sets: conditional, mutual, conditional-mutual
//! and ternary-mutual entropies, plus full tripartite Venn diagrams.
//!
//! Every quantity here is an algebraic combination of marginal entropies and
//! nothing else, so the identity checks in the test suite are genuine
//! cross-checks rather than re-derivations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::registers::State;

/// Tolerance for derived entropy differences (one decade looser than the
/// eigensolver tolerance; differences of entropies lose a digit).
pub const DERIVED_TOL: f64 = 1e-8;

fn check_disjoint(sets: &[&[&str]]) -> Result<()> {
    for set in sets {
        if set.is_empty() {
            return Err(Error::EmptyLabelSet);
        }
    }
    for (i, a) in sets.iter().enumerate() {
        for b in sets.iter().skip(i + 1) {
            for label in *a {
                if b.contains(label) {
                    return Err(Error::OverlappingLabelSets(label.to_string()));
                }
            }
        }
    }
    Ok(())
}

fn union<'a>(sets: &[&[&'a str]]) -> Vec<&'a str> {
    let mut out = Vec::new();
    for set in sets {
        out.extend_from_slice(set);
    }
    out
}

/// S of the marginal over `subset`, in bits.
pub fn subset_entropy(state: &impl State, subset: &[&str]) -> Result<f64> {
    if subset.is_empty() {
        return Err(Error::EmptyLabelSet);
    }
    state.subset_entropy(subset)
}

/// S(A|B) = S(AB) − S(B). Negative values signal entanglement across the cut.
pub fn conditional_entropy(state: &impl State, a: &[&str], b: &[&str]) -> Result<f64> {
    check_disjoint(&[a, b])?;
    Ok(state.subset_entropy(&union(&[a, b]))? - state.subset_entropy(b)?)
}

/// S(A:B) = S(A) + S(B) − S(AB).
pub fn mutual_entropy(state: &impl State, a: &[&str], b: &[&str]) -> Result<f64> {
    check_disjoint(&[a, b])?;
    Ok(state.subset_entropy(a)? + state.subset_entropy(b)?
        - state.subset_entropy(&union(&[a, b]))?)
}

/// S(A:B|C) = S(AC) + S(BC) − S(C) − S(ABC). Non-negative by strong
/// subadditivity.
pub fn conditional_mutual_entropy(
    state: &impl State,
    a: &[&str],
    b: &[&str],
    given: &[&str],
) -> Result<f64> {
    check_disjoint(&[a, b, given])?;
    Ok(state.subset_entropy(&union(&[a, given]))? + state.subset_entropy(&union(&[b, given]))?
        - state.subset_entropy(given)?
        - state.subset_entropy(&union(&[a, b, given]))?)
}

/// S(A:B:C) = S(A:B) − S(A:B|C). Symmetric in its arguments; vanishes when
/// the joint state is pure.
pub fn ternary_mutual_entropy(
    state: &impl State,
    a: &[&str],
    b: &[&str],
    c: &[&str],
) -> Result<f64> {
    check_disjoint(&[a, b, c])?;
    Ok(mutual_entropy(state, a, b)? - conditional_mutual_entropy(state, a, b, c)?)
}

/// S(X:YZ) − S(X:Y) − S(X:Z|Y). Identically zero; exposed so the property
/// suite can watch the numerical residual.
pub fn chain_rule_residual(
    state: &impl State,
    x: &[&str],
    y: &[&str],
    z: &[&str],
) -> Result<f64> {
    check_disjoint(&[x, y, z])?;
    let lhs = mutual_entropy(state, x, &union(&[y, z]))?;
    Ok(lhs - mutual_entropy(state, x, y)? - conditional_mutual_entropy(state, x, z, y)?)
}

/// The seven signed regions of a tripartite entropy diagram, in bits.
///
/// `exclusive_*` are the conditional entropies S(X|YZ) etc. (possibly
/// negative), the `pair_*` regions are the conditional mutual entropies
/// (non-negative by strong subadditivity), and `center` is the ternary
/// mutual entropy. The seven regions sum to S(XYZ).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VennDiagram3 {
    pub labels: (Vec<String>, Vec<String>, Vec<String>),
    pub exclusive_x: f64,
    pub exclusive_y: f64,
    pub exclusive_z: f64,
    pub pair_xy_given_z: f64,
    pub pair_xz_given_y: f64,
    pub pair_yz_given_x: f64,
    pub center: f64,
    /// Total entropy S(XYZ) of the covered subsystems.
    pub total: f64,
}

impl VennDiagram3 {
    /// Sum of the seven regions; equals `total` up to numerical noise.
    pub fn region_sum(&self) -> f64 {
        self.exclusive_x
            + self.exclusive_y
            + self.exclusive_z
            + self.pair_xy_given_z
            + self.pair_xz_given_y
            + self.pair_yz_given_x
            + self.center
    }
}

/// Tripartite entropy diagram over three disjoint label groups, computed from
/// the seven joint marginal entropies.
pub fn venn3(state: &impl State, x: &[&str], y: &[&str], z: &[&str]) -> Result<VennDiagram3> {
    check_disjoint(&[x, y, z])?;
    let s_x = state.subset_entropy(x)?;
    let s_y = state.subset_entropy(y)?;
    let s_z = state.subset_entropy(z)?;
    let s_xy = state.subset_entropy(&union(&[x, y]))?;
    let s_xz = state.subset_entropy(&union(&[x, z]))?;
    let s_yz = state.subset_entropy(&union(&[y, z]))?;
    let s_xyz = state.subset_entropy(&union(&[x, y, z]))?;

    let pair_xy_given_z = s_xz + s_yz - s_z - s_xyz;
    let pair_xz_given_y = s_xy + s_yz - s_y - s_xyz;
    let pair_yz_given_x = s_xy + s_xz - s_x - s_xyz;
    let center = (s_x + s_y - s_xy) - pair_xy_given_z;

    Ok(VennDiagram3 {
        labels: (
            x.iter().map(|s| s.to_string()).collect(),
            y.iter().map(|s| s.to_string()).collect(),
            z.iter().map(|s| s.to_string()).collect(),
        ),
        exclusive_x: s_xyz - s_yz,
        exclusive_y: s_xyz - s_xz,
        exclusive_z: s_xyz - s_xy,
        pair_xy_given_z,
        pair_xz_given_y,
        pair_yz_given_x,
        center,
        total: s_xyz,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registers::{tensor_product, DensityState, PureState, RegisterLayout};
    use approx::assert_relative_eq;

    fn ghz() -> PureState {
        PureState::ghz(&["A", "B", "C"]).unwrap()
    }

    fn bell_with_pure_third() -> DensityState {
        let bell = PureState::bell_pair("X", "Y").unwrap().to_density();
        let pure = PureState::basis(RegisterLayout::single("Z", 2), 0)
            .unwrap()
            .to_density();
        tensor_product(&bell, &pure).unwrap()
    }

    /// (|00⟩⟨00| + |11⟩⟨11|)/2: classical correlation, no entanglement.
    fn classically_correlated() -> DensityState {
        let layout = RegisterLayout::new(vec![("A", 2), ("B", 2)]).unwrap();
        DensityState::diagonal(layout, &[0.5, 0.0, 0.0, 0.5]).unwrap()
    }

    #[test]
    fn subset_entropy_of_ghz_single_qubit() {
        let s = subset_entropy(&ghz(), &["B"]).unwrap();
        assert_relative_eq!(s, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn subset_entropy_of_full_bell_pair_is_zero() {
        let bell = PureState::bell_pair("A", "B").unwrap();
        assert_relative_eq!(
            subset_entropy(&bell, &["A", "B"]).unwrap(),
            0.0,
            epsilon = 1e-10
        );
    }

    #[test]
    fn subset_entropy_of_purified_biased_qubit() {
        let rho =
            DensityState::diagonal(RegisterLayout::single("Q", 2), &[0.75, 0.25]).unwrap();
        let psi = crate::registers::purify(&rho, "R").unwrap();
        assert_relative_eq!(
            subset_entropy(&psi, &["R"]).unwrap(),
            0.8112781244591328,
            epsilon = 1e-9
        );
    }

    #[test]
    fn conditional_entropy_of_bell_pair_is_negative() {
        let bell = PureState::bell_pair("A", "B").unwrap();
        assert_relative_eq!(
            conditional_entropy(&bell, &["A"], &["B"]).unwrap(),
            -1.0,
            epsilon = 1e-9
        );
    }

    #[test]
    fn conditional_entropy_of_independent_qubits() {
        let layout = RegisterLayout::new(vec![("A", 2), ("B", 2)]).unwrap();
        let rho = DensityState::maximally_mixed(layout);
        assert_relative_eq!(
            conditional_entropy(&rho, &["A"], &["B"]).unwrap(),
            1.0,
            epsilon = 1e-9
        );
    }

    #[test]
    fn conditional_entropy_of_ghz_given_rest() {
        assert_relative_eq!(
            conditional_entropy(&ghz(), &["A"], &["B", "C"]).unwrap(),
            -1.0,
            epsilon = 1e-9
        );
    }

    #[test]
    fn mutual_entropy_of_bell_pair_is_two() {
        let bell = PureState::bell_pair("A", "B").unwrap();
        assert_relative_eq!(
            mutual_entropy(&bell, &["A"], &["B"]).unwrap(),
            2.0,
            epsilon = 1e-9
        );
    }

    #[test]
    fn mutual_entropy_of_product_state_is_zero() {
        let a = DensityState::diagonal(RegisterLayout::single("A", 2), &[0.6, 0.4]).unwrap();
        let b = DensityState::diagonal(RegisterLayout::single("B", 2), &[0.3, 0.7]).unwrap();
        let ab = tensor_product(&a, &b).unwrap();
        assert_relative_eq!(
            mutual_entropy(&ab, &["A"], &["B"]).unwrap(),
            0.0,
            epsilon = 1e-9
        );
    }

    #[test]
    fn mutual_entropy_of_classical_correlation_is_one() {
        assert_relative_eq!(
            mutual_entropy(&classically_correlated(), &["A"], &["B"]).unwrap(),
            1.0,
            epsilon = 1e-9
        );
    }

    #[test]
    fn mutual_entropy_rejects_overlap() {
        let bell = PureState::bell_pair("A", "B").unwrap();
        assert!(matches!(
            mutual_entropy(&bell, &["A"], &["A"]),
            Err(Error::OverlappingLabelSets(_))
        ));
    }

    #[test]
    fn conditional_mutual_of_ghz() {
        // S(AC) + S(BC) − S(C) − S(ABC) = 1 + 1 − 1 − 0
        assert_relative_eq!(
            conditional_mutual_entropy(&ghz(), &["A"], &["B"], &["C"]).unwrap(),
            1.0,
            epsilon = 1e-9
        );
    }

    #[test]
    fn conditional_mutual_of_product_tripartite_is_zero() {
        let layout = RegisterLayout::new(vec![("A", 2), ("B", 2), ("C", 2)]).unwrap();
        let rho = DensityState::maximally_mixed(layout);
        assert_relative_eq!(
            conditional_mutual_entropy(&rho, &["A"], &["B"], &["C"]).unwrap(),
            0.0,
            epsilon = 1e-9
        );
    }

    #[test]
    fn conditioning_on_independent_pure_system_is_inert() {
        let state = bell_with_pure_third();
        assert_relative_eq!(
            conditional_mutual_entropy(&state, &["X"], &["Y"], &["Z"]).unwrap(),
            2.0,
            epsilon = 1e-9
        );
    }

    #[test]
    fn ternary_mutual_of_pure_tripartite_vanishes() {
        assert_relative_eq!(
            ternary_mutual_entropy(&ghz(), &["A"], &["B"], &["C"]).unwrap(),
            0.0,
            epsilon = 1e-8
        );
    }

    #[test]
    fn ternary_mutual_of_dephased_ghz_is_one() {
        // classical three-way correlation: (|000⟩⟨000| + |111⟩⟨111|)/2
        let layout = RegisterLayout::new(vec![("A", 2), ("B", 2), ("C", 2)]).unwrap();
        let mut probs = vec![0.0; 8];
        probs[0] = 0.5;
        probs[7] = 0.5;
        let rho = DensityState::diagonal(layout, &probs).unwrap();
        assert_relative_eq!(
            ternary_mutual_entropy(&rho, &["A"], &["B"], &["C"]).unwrap(),
            1.0,
            epsilon = 1e-8
        );
    }

    #[test]
    fn ternary_mutual_is_symmetric() {
        let state = bell_with_pure_third();
        let orders: [(f64, f64); 2] = [
            (
                ternary_mutual_entropy(&state, &["X"], &["Y"], &["Z"]).unwrap(),
                ternary_mutual_entropy(&state, &["Z"], &["X"], &["Y"]).unwrap(),
            ),
            (
                ternary_mutual_entropy(&state, &["Y"], &["Z"], &["X"]).unwrap(),
                ternary_mutual_entropy(&state, &["X"], &["Z"], &["Y"]).unwrap(),
            ),
        ];
        for (a, b) in orders {
            assert_relative_eq!(a, b, epsilon = 1e-8);
        }
    }

    #[test]
    fn venn3_of_ghz() {
        let diagram = venn3(&ghz(), &["A"], &["B"], &["C"]).unwrap();
        assert_relative_eq!(diagram.exclusive_x, -1.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.exclusive_y, -1.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.exclusive_z, -1.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.pair_xy_given_z, 1.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.pair_xz_given_y, 1.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.pair_yz_given_x, 1.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.center, 0.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.region_sum(), diagram.total, epsilon = 1e-8);
    }

    #[test]
    fn venn3_of_bell_with_pure_third() {
        let diagram = venn3(&bell_with_pure_third(), &["X"], &["Y"], &["Z"]).unwrap();
        assert_relative_eq!(diagram.exclusive_x, -1.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.exclusive_y, -1.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.exclusive_z, 0.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.pair_xy_given_z, 2.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.pair_xz_given_y, 0.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.pair_yz_given_x, 0.0, epsilon = 1e-8);
        assert_relative_eq!(diagram.center, 0.0, epsilon = 1e-8);
    }

    #[test]
    fn chain_rule_residual_vanishes() {
        assert_relative_eq!(
            chain_rule_residual(&ghz(), &["A"], &["B"], &["C"]).unwrap(),
            0.0,
            epsilon = 1e-8
        );
        let state = bell_with_pure_third();
        assert_relative_eq!(
            chain_rule_residual(&state, &["X"], &["Y"], &["Z"]).unwrap(),
            0.0,
            epsilon = 1e-8
        );
    }
}
