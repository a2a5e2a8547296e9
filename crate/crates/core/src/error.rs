use thiserror::Error;

use crate::exact::QuadExt;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Variants are grouped by the layer that raises them; the CLI maps each one
/// onto a flag and an exit code.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    // exact scalars
    #[error("division by zero")]
    DivisionByZero,
    #[error("quadratic extensions with different radicands {left} and {right}")]
    RadicandMismatch { left: String, right: String },

    // polynomials
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("resultant of a zero polynomial")]
    ZeroInput,
    #[error("discriminant of a constant polynomial")]
    ConstantInput,
    #[error("quadratic root reconstruction could not be certified ({partial_count} roots certified)", partial_count = partial.len())]
    ReconstructionInconclusive { partial: Vec<QuadExt> },
    #[error("numeric root finder did not converge within {iterations} iterations")]
    NonConvergence { iterations: usize },

    // Moebius maps
    #[error("singular matrix (ad - bc = 0)")]
    SingularMap,
    #[error("the identity map has no isolated fixed points")]
    IdentityMap,
    #[error("form degree {requested} is smaller than the polynomial degree {actual}")]
    DegreeTooSmall { requested: usize, actual: usize },
    #[error("value needs a square root outside its quadratic extension")]
    NotRepresentable,

    // curves
    #[error("singular model: the right-hand side has a repeated root")]
    SingularModel,
    #[error("degree {degree} polynomial does not define a curve of genus at least 2")]
    GenusTooSmall { degree: usize },
    #[error("transformation collapses the model to degree {degree} (form degree {form_degree})")]
    IllegalCollapse { degree: usize, form_degree: usize },
    #[error("curve is not an even-degree model")]
    NotEvenModel,

    // symmetry
    #[error("involution search inconclusive: {reason}")]
    SearchInconclusive { reason: String },
    #[error("involution fixes a branch point")]
    FixedBranchPoint,
    #[error("even model has a nonzero odd coefficient at degree {degree}")]
    OddTermResidue { degree: usize },

    // invariants
    #[error("even model has a zero end coefficient")]
    ZeroEndCoefficient,
    #[error("point lies on an excluded part of the {locus} locus (u2 = {u2})")]
    ExcludedLocusPoint { locus: &'static str, u2: String },
    #[error("dihedral invariants are not rational")]
    IrrationalInvariants,
    #[error("expected {expected} values, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    // moduli
    #[error("invariants are not on the two-involution locus")]
    NotOnLocus,
    #[error("u1 = 0, the model has no leading term")]
    ZeroLeading,
    #[error("the constructed model is singular (discriminant {discriminant})")]
    SingularOutput { discriminant: String },

    // oracle
    #[error("numeric matching is ambiguous at tolerance {tol:e}")]
    ToleranceAmbiguity { tol: f64 },
    #[error("reduced group of order {order} is not in the genus 2 table")]
    UnknownSignature { order: usize },
    #[error("tolerance {0:e} outside (0, 1e-4]")]
    BadTolerance(f64),
}
