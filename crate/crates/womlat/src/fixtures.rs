//! Named example algebras: the two M3 variants, the ten-element lattice
//! with involutive non-antitone complementation, small chains and Boolean
//! algebras.
//!
//! Fixture tables are plain data. Nothing here is trusted: the test suite
//! re-checks every cataloged claim against the algebra predicates.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::UnaryAlgebra;
use crate::lattice::FiniteLattice;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FixtureError {
    #[error("unknown fixture `{0}`; known fixtures: {known}", known = FIXTURE_NAMES.join(", "))]
    UnknownFixture(String),
}

/// Catalog order is the order `fixture_names` reports.
pub const FIXTURE_NAMES: &[&str] = &["M3A", "M3B", "FIG2", "C2", "C3", "C4", "B4", "B8"];

pub fn fixture_names() -> &'static [&'static str] {
    FIXTURE_NAMES
}

fn m3_lattice() -> FiniteLattice {
    FiniteLattice::from_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )
    .expect("M3 covers form a lattice")
}

fn chain(n: usize) -> FiniteLattice {
    let names: Vec<String> = match n {
        2 => vec!["0".into(), "1".into()],
        3 => vec!["0".into(), "m".into(), "1".into()],
        _ => {
            let mut v = vec!["0".to_string()];
            v.extend((1..n - 1).map(|i| format!("m{i}")));
            v.push("1".to_string());
            v
        }
    };
    let covers: Vec<(String, String)> = (0..n - 1)
        .map(|i| (names[i].clone(), names[i + 1].clone()))
        .collect();
    FiniteLattice::from_covers(&names, &covers).expect("a chain is a lattice")
}

fn algebra(lattice: FiniteLattice, comp_pairs: &[(&str, &str)]) -> UnaryAlgebra {
    let lattice = Arc::new(lattice);
    let mut comp = vec![0usize; lattice.size()];
    for (x, cx) in comp_pairs {
        comp[lattice.element(x).expect("fixture label")] =
            lattice.element(cx).expect("fixture label");
    }
    UnaryAlgebra::new(lattice, comp).expect("fixture table is total")
}

/// Returns a cataloged algebra by name.
pub fn fixture(name: &str) -> Result<UnaryAlgebra, FixtureError> {
    match name {
        // M3 with the cyclic complementation a -> b -> c -> a.
        "M3A" => Ok(algebra(
            m3_lattice(),
            &[("0", "1"), ("a", "b"), ("b", "c"), ("c", "a"), ("1", "0")],
        )),
        // M3 with c' = b, so ' is not an involution.
        "M3B" => Ok(algebra(
            m3_lattice(),
            &[("0", "1"), ("a", "b"), ("b", "c"), ("c", "b"), ("1", "0")],
        )),
        "FIG2" => {
            let lattice = FiniteLattice::from_covers(
                &["0", "a", "b", "c", "d", "e", "f", "g", "h", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("0", "c"),
                    ("0", "d"),
                    ("a", "e"),
                    ("a", "f"),
                    ("b", "e"),
                    ("b", "g"),
                    ("c", "e"),
                    ("c", "h"),
                    ("d", "f"),
                    ("d", "g"),
                    ("d", "h"),
                    ("e", "1"),
                    ("f", "1"),
                    ("g", "1"),
                    ("h", "1"),
                ],
            )
            .expect("FIG2 covers form a lattice");
            Ok(algebra(
                lattice,
                &[
                    ("0", "1"),
                    ("a", "g"),
                    ("b", "h"),
                    ("c", "f"),
                    ("d", "e"),
                    ("e", "d"),
                    ("f", "c"),
                    ("g", "a"),
                    ("h", "b"),
                    ("1", "0"),
                ],
            ))
        }
        // Chains with the endpoints swapped and interior elements fixed.
        "C2" => Ok(algebra(chain(2), &[("0", "1"), ("1", "0")])),
        "C3" => Ok(algebra(chain(3), &[("0", "1"), ("m", "m"), ("1", "0")])),
        "C4" => Ok(algebra(
            chain(4),
            &[("0", "1"), ("m1", "m1"), ("m2", "m2"), ("1", "0")],
        )),
        "B4" => {
            let lattice = FiniteLattice::from_covers(
                &["0", "a", "b", "1"],
                &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            )
            .expect("B4 covers form a lattice");
            Ok(algebra(
                lattice,
                &[("0", "1"), ("a", "b"), ("b", "a"), ("1", "0")],
            ))
        }
        "B8" => {
            let lattice = FiniteLattice::from_covers(
                &["0", "a", "b", "c", "ab", "ac", "bc", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("0", "c"),
                    ("a", "ab"),
                    ("a", "ac"),
                    ("b", "ab"),
                    ("b", "bc"),
                    ("c", "ac"),
                    ("c", "bc"),
                    ("ab", "1"),
                    ("ac", "1"),
                    ("bc", "1"),
                ],
            )
            .expect("B8 covers form a lattice");
            Ok(algebra(
                lattice,
                &[
                    ("0", "1"),
                    ("a", "bc"),
                    ("b", "ac"),
                    ("c", "ab"),
                    ("ab", "c"),
                    ("ac", "b"),
                    ("bc", "a"),
                    ("1", "0"),
                ],
            ))
        }
        other => Err(FixtureError::UnknownFixture(other.to_string())),
    }
}
