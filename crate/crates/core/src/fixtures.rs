//! The bundled `.quiver` files.

use crate::dsl::{parse_quiver, QuiverSpec};
use crate::error::{Error, Result};
use crate::quiver::PathAlgebra;

/// `(name, contents)` for every bundled file.
pub const ALL: &[(&str, &str)] = &[
    ("kronecker1", include_str!("../fixtures/kronecker1.quiver")),
    ("kronecker2", include_str!("../fixtures/kronecker2.quiver")),
    ("kronecker3", include_str!("../fixtures/kronecker3.quiver")),
    ("kronecker4", include_str!("../fixtures/kronecker4.quiver")),
    ("S1", include_str!("../fixtures/S1.quiver")),
    ("S2", include_str!("../fixtures/S2.quiver")),
    ("S3", include_str!("../fixtures/S3.quiver")),
    ("square", include_str!("../fixtures/square.quiver")),
    ("disconnected", include_str!("../fixtures/disconnected.quiver")),
    ("a4", include_str!("../fixtures/a4.quiver")),
    ("monomial", include_str!("../fixtures/monomial.quiver")),
];

/// Files whose relations are tensor relations.
pub const TENSOR: &[&str] = &[
    "kronecker1",
    "kronecker2",
    "kronecker3",
    "kronecker4",
    "S1",
    "S2",
    "S3",
    "square",
    "disconnected",
    "a4",
];

pub fn source(name: &str) -> Result<&'static str> {
    ALL.iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| Error::Invalid(format!("no fixture named `{name}`")))
}

pub fn spec(name: &str) -> Result<QuiverSpec> {
    parse_quiver(source(name)?)
}

pub fn algebra(name: &str) -> Result<PathAlgebra> {
    spec(name)?.algebra()
}
