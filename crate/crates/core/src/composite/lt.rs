use serde::Serialize;

use crate::jordan::{AlgebraDescriptor, SimpleFactor};
use crate::scalar::ScalarKind;

/// Dimension bookkeeping for a matrix factor `A` of rank `k`: a tensor square
/// would be a simple factor of rank `k²` and dimension `n_A²`, while the only
/// simple factors of rank `k² ≥ 4` are `H_{k²}(R)`, `H_{k²}(C)` and
/// `H_{k²}(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessTable {
    pub required_rank: usize,
    pub required_dim: usize,
    pub candidate_real: usize,
    pub candidate_complex: usize,
    pub candidate_quaternion: usize,
    pub any_match: bool,
}

impl WitnessTable {
    pub fn for_factor(factor: &SimpleFactor) -> Self {
        let k2 = factor.rank() * factor.rank();
        let n = factor.dim();
        let candidate_real = k2 * (k2 + 1) / 2;
        let candidate_complex = k2 * k2;
        let candidate_quaternion = k2 * (2 * k2 - 1);
        let required_dim = n * n;
        WitnessTable {
            required_rank: k2,
            required_dim,
            candidate_real,
            candidate_complex,
            candidate_quaternion,
            any_match: [candidate_real, candidate_complex, candidate_quaternion].contains(&required_dim),
        }
    }

    pub fn candidates(&self) -> [usize; 3] {
        [self.candidate_real, self.candidate_complex, self.candidate_quaternion]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorAnalysis {
    pub factor: String,
    pub dim: usize,
    pub rank: usize,
    pub feasible: bool,
    pub reason: String,
    pub caveat: Option<String>,
    pub witness: Option<WitnessTable>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LtReport {
    pub spec: String,
    pub feasible: bool,
    pub factors: Vec<FactorAnalysis>,
}

fn analyze(factor: &SimpleFactor) -> FactorAnalysis {
    let (feasible, reason, caveat, witness) = match *factor {
        SimpleFactor::RealLine => (true, "classical factor; products of points".to_string(), None, None),
        SimpleFactor::Spin { .. } => (
            true,
            "spin logic is isomorphic to the logic of H(2,C); Kronecker model applies".to_string(),
            Some(
                "the logic isomorphism is not induced by an algebra isomorphism unless n = 3, and \
                 swap automorphisms give many other tensor maps"
                    .to_string(),
            ),
            None,
        ),
        SimpleFactor::Matrix {
            scalar: ScalarKind::Complex,
            k,
        } => (
            true,
            format!("self-adjoint part of a C*-algebra; target H({},C)", k * k),
            None,
            None,
        ),
        SimpleFactor::Matrix { .. } => {
            let table = WitnessTable::for_factor(factor);
            let reason = format!(
                "a tensor square needs dimension {} at rank {}; candidates are {}, {} and {}",
                table.required_dim,
                table.required_rank,
                table.candidate_real,
                table.candidate_complex,
                table.candidate_quaternion
            );
            (table.any_match, reason, None, Some(table))
        }
    };
    FactorAnalysis {
        factor: factor.to_string(),
        dim: factor.dim(),
        rank: factor.rank(),
        feasible,
        reason,
        caveat,
        witness,
    }
}

/// Local tomography is feasible iff every simple factor is the real line, a
/// spin factor, or a complex matrix factor.
pub fn lt_feasible(desc: &AlgebraDescriptor) -> LtReport {
    let factors: Vec<FactorAnalysis> = desc.factors().iter().map(analyze).collect();
    LtReport {
        spec: desc.to_string(),
        feasible: factors.iter().all(|f| f.feasible),
        factors,
    }
}
