//! Name-based dispatch over a loaded `.lat` file: one entry point for the
//! built-in property checks and one for the theorem verifications. The CLI
//! and the C API both go through here, so they expose identical behavior.

use thiserror::Error;

use crate::algebra::{AlgebraError, CheckReport, UnaryAlgebra};
use crate::implication::{self, ImplicationError};
use crate::io::LatFile;
use crate::measures::{self, MeasureError};
use crate::residuation::{self, ResiduationError};

pub const PROPERTIES: &[&str] = &[
    "wom",
    "dwom",
    "dnl",
    "wdnl",
    "comp",
    "ortho",
    "om",
    "demorgan",
    "antitone",
    "involution",
    "lemma-bounds",
];

pub const THEOREMS: &[&str] = &[
    "d-bijection",
    "family-bijection",
    "w-bijection",
    "sasaki",
    "half-adjunction",
    "weak-dnl-residuation",
    "residuation",
    "converse",
    "measures",
    "d-properties",
    "w-properties",
];

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum WorkbenchError {
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("this operation needs a [unary '] table, which the file lacks")]
    MissingUnary,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Implication(#[from] ImplicationError),
    #[error(transparent)]
    Residuation(#[from] ResiduationError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
}

fn need_algebra(file: &LatFile) -> Result<UnaryAlgebra, WorkbenchError> {
    file.algebra().ok_or(WorkbenchError::MissingUnary)
}

/// Runs one of the built-in property checks by name.
pub fn check_property(file: &LatFile, prop: &str) -> Result<CheckReport, WorkbenchError> {
    let a = need_algebra(file)?;
    Ok(match prop {
        "wom" => a.is_weakly_orthomodular(),
        "dwom" => a.is_dually_weakly_orthomodular(),
        "dnl" => a.satisfies_double_negation(),
        "wdnl" => a.satisfies_weak_double_negation(),
        "comp" => a.is_complementation()?,
        "ortho" => a.is_orthocomplementation()?,
        "om" => a.is_orthomodular()?,
        "demorgan" => a.satisfies_de_morgan(),
        "antitone" => a.is_antitone(),
        "involution" => a.is_involution(),
        "lemma-bounds" => a.check_lemma_bounds(),
        other => return Err(WorkbenchError::UnknownProperty(other.to_string())),
    })
}

/// Runs one of the theorem verifications by name.
pub fn verify_theorem(file: &LatFile, theorem: &str) -> Result<CheckReport, WorkbenchError> {
    let lattice = &file.lattice;
    Ok(match theorem {
        "d-bijection" => implication::verify_d_bijection(lattice)?,
        "family-bijection" => implication::verify_family_bijection(lattice)?,
        "w-bijection" => implication::verify_w_bijection(lattice)?,
        "sasaki" => implication::verify_sasaki_theorem(&need_algebra(file)?)?,
        "half-adjunction" => residuation::check_half_adjunction(&need_algebra(file)?)?,
        "weak-dnl-residuation" => {
            residuation::check_weak_dnl_residuation(&need_algebra(file)?)?
        }
        "residuation" => match residuation::build_lgroupoid(&need_algebra(file)?) {
            Ok(g) => CheckReport::pass(
                "residuation",
                format!(
                    "left residuated l-groupoid verified: unit laws, adjointness over all triples, (x -> y) * x = x /\\ y, a (.) b = a iff a <= b, a -> b = b iff a' <= b (product associative: {})",
                    g.product_is_associative()
                ),
            ),
            // A broken conclusion is a refuted statement, not a usage error.
            Err(ResiduationError::InvariantFailed(detail)) => {
                CheckReport::fail("residuation", vec![], detail)
            }
            Err(e) => return Err(e.into()),
        },
        "converse" => {
            let g = residuation::build_lgroupoid(&need_algebra(file)?)?;
            residuation::verify_converse(&g)?
        }
        "measures" => measures::verify_measure_theorem(&need_algebra(file)?),
        "d-properties" => implication::d_implication_properties(&need_algebra(file)?)?,
        "w-properties" => implication::w_implication_properties(&need_algebra(file)?)?,
        other => return Err(WorkbenchError::UnknownTheorem(other.to_string())),
    })
}
