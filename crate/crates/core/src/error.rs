use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// The identity that a check found broken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Associativity,
    Unitality,
    LeftAssoc,
    RightAssoc,
    LeftUnital,
    RightUnital,
    CommutingActions,
    Multiplicative,
    UnitPreserving,
    Bilinearity,
    Coassoc,
    CounitLeft,
    CounitRight,
    Counit,
    ALinearity,
    BLinearity,
    LeftALinearity,
    Colinearity,
    Bicomodule,
    MeasuringLinearity,
    MeasuringUnit,
    MeasuringMultiplicative,
    CoproductBLinearity,
    DescentUnit,
    DescentCocycle,
    ChainA,
    ChainB,
    ChainC,
    CounitCompatible,
    CoproductCompatible,
}

impl Axiom {
    pub fn name(&self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Unitality => "unitality",
            Axiom::LeftAssoc => "left-assoc",
            Axiom::RightAssoc => "right-assoc",
            Axiom::LeftUnital => "left-unital",
            Axiom::RightUnital => "right-unital",
            Axiom::CommutingActions => "commuting-actions",
            Axiom::Multiplicative => "multiplicative",
            Axiom::UnitPreserving => "unit-preserving",
            Axiom::Bilinearity => "bilinearity",
            Axiom::Coassoc => "coassoc",
            Axiom::CounitLeft => "counit-left",
            Axiom::CounitRight => "counit-right",
            Axiom::Counit => "counit",
            Axiom::ALinearity => "A-linearity",
            Axiom::BLinearity => "B-linearity",
            Axiom::LeftALinearity => "left-A-linearity",
            Axiom::Colinearity => "colinearity",
            Axiom::Bicomodule => "bicomodule",
            Axiom::MeasuringLinearity => "measuring-left-linearity",
            Axiom::MeasuringUnit => "measuring-diagram-a",
            Axiom::MeasuringMultiplicative => "measuring-diagram-b",
            Axiom::CoproductBLinearity => "coproduct-B-linearity",
            Axiom::DescentUnit => "descent-unit",
            Axiom::DescentCocycle => "descent-cocycle",
            Axiom::ChainA => "diagram-a",
            Axiom::ChainB => "diagram-b",
            Axiom::ChainC => "diagram-c",
            Axiom::CounitCompatible => "counit-compatible",
            Axiom::CoproductCompatible => "coproduct-compatible",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{axiom} fails at basis {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Vec<usize> },
    #[error("size limit exceeded: {requested} > {limit}")]
    SizeLimit { requested: u128, limit: u128 },
    #[error("enumeration requires a finite prime field")]
    NonFiniteField,
    #[error("dual basis identity fails at basis element {witness}")]
    DualBasisInvalid { witness: usize },
    #[error("not a coring morphism: {axiom} fails at basis {witness:?}")]
    NotCoringMorphism { axiom: Axiom, witness: Vec<usize> },
    #[error("map is not colinear: {axiom} fails at basis {witness:?}")]
    NotColinear { axiom: Axiom, witness: Vec<usize> },
    #[error("composable extensions must share the middle coring")]
    MiddleMismatch,
    #[error("{context} does not factor through the quotient")]
    NotWellDefined { context: &'static str },
    #[error("{context} lies outside the expected subspace")]
    NotInSubspace { context: &'static str },
    #[error("objects are defined over different fields")]
    FieldMismatch,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid scalar: {0}")]
    InvalidScalar(String),
    #[error("unknown reference: {0}")]
    UnknownReference(String),
}

impl Error {
    pub(crate) fn violation(axiom: Axiom, witness: Vec<usize>) -> Error {
        Error::AxiomViolation { axiom, witness }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
