//! Input handling: family names, JSON carrier files, and the knobs shared by
//! every command.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::semigroup::partial_bijection::PartialBijection;
use crate::semigroup::{Family, InverseSemigroup};

/// Output format of the command surface. JSON is the contract; text is a
/// stable, diff-friendly rendering of the same data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(Error::InvalidInput(format!(
                "format must be json or text, got `{other}`"
            ))),
        }
    }
}

/// Everything a command run needs besides its own arguments. All bounds are
/// positive and the seed fully determines any randomized probe.
#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    pub carrier: InverseSemigroup,
    pub truncation: u32,
    pub basis_budget: u32,
    pub seed: u64,
    pub format: Format,
}

#[derive(Deserialize)]
struct GeneratorInput {
    pairs: Vec<(u32, u32)>,
}

#[derive(Deserialize)]
struct FiniteInput {
    degree: u32,
    generators: Vec<GeneratorInput>,
    cap: usize,
}

#[derive(Deserialize, Default)]
struct FamilyParams {
    n: Option<u8>,
    kill_zero: Option<bool>,
}

#[derive(Deserialize)]
struct FamilyInput {
    family: String,
    #[serde(default)]
    params: FamilyParams,
    truncation: Option<u32>,
}

/// Builds a family carrier from its canonical name.
pub fn family_by_name(name: &str, arity: u8, kill_zero: bool) -> Result<InverseSemigroup> {
    match name {
        "chain_with_symmetry" => Ok(InverseSemigroup::chain_with_symmetry()),
        "pure_chain" => Ok(InverseSemigroup::pure_chain()),
        "bicyclic" => Ok(InverseSemigroup::bicyclic()),
        "polycyclic" => InverseSemigroup::polycyclic(arity, kill_zero),
        other => Err(Error::InvalidInput(format!(
            "unknown family `{other}` (expected chain_with_symmetry, pure_chain, bicyclic, or polycyclic)"
        ))),
    }
}

/// Reads a carrier from a JSON file holding either a finite description
/// (`degree` + `generators` + `cap`) or a family description (`family` +
/// optional `params`/`truncation`). Returns the carrier and the truncation
/// the file carried, if any.
pub fn carrier_from_file(path: &Path) -> Result<(InverseSemigroup, Option<u32>)> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&raw)
        .map_err(|e| Error::InvalidInput(format!("malformed JSON in {}: {e}", path.display())))?;
    if value.get("family").is_some() {
        let input: FamilyInput = serde_json::from_value(value)
            .map_err(|e| Error::InvalidInput(format!("bad family input: {e}")))?;
        let carrier = family_by_name(
            &input.family,
            input.params.n.unwrap_or(2),
            input.params.kill_zero.unwrap_or(false),
        )?;
        Ok((carrier, input.truncation))
    } else {
        let input: FiniteInput = serde_json::from_value(value)
            .map_err(|e| Error::InvalidInput(format!("bad finite input: {e}")))?;
        let generators: Result<Vec<PartialBijection>> = input
            .generators
            .iter()
            .map(|g| PartialBijection::new(input.degree, &g.pairs))
            .collect();
        let carrier = InverseSemigroup::from_partial_bijections(&generators?, input.cap)?;
        Ok((carrier, None))
    }
}

/// A serializable description of a carrier, echoed into every report.
pub fn describe_carrier(carrier: &InverseSemigroup) -> serde_json::Value {
    match carrier.family() {
        Some(Family::ChainWithSymmetry) => serde_json::json!({
            "kind": "family", "family": "chain_with_symmetry",
        }),
        Some(Family::PureChain) => serde_json::json!({
            "kind": "family", "family": "pure_chain",
        }),
        Some(Family::Bicyclic) => serde_json::json!({
            "kind": "family", "family": "bicyclic",
        }),
        Some(Family::Polycyclic { arity, kill_zero }) => serde_json::json!({
            "kind": "family", "family": "polycyclic", "n": arity, "kill_zero": kill_zero,
        }),
        None => serde_json::json!({
            "kind": "finite", "size": carrier.size(),
        }),
    }
}
