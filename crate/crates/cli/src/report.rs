use hyperinv::Error;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_UNDEFINED: i32 = 3;

pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub result: Value,
    pub flags: Vec<String>,
}

impl RunReport {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "result": self.result,
            "flags": self.flags,
        })
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// A failed run: a short error name, its flag, the exit code and a message.
#[derive(Debug)]
pub struct Failure {
    pub error: &'static str,
    pub flag: &'static str,
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn malformed(message: String) -> Self {
        Self { error: "malformed input", flag: "malformed-input", code: EXIT_INVALID, message }
    }

    pub fn invalid_argument(message: String) -> Self {
        Self { error: "invalid arguments", flag: "invalid-arguments", code: EXIT_INVALID, message }
    }

    pub fn unreadable(message: String) -> Self {
        Self { error: "unreadable input", flag: "unreadable-input", code: EXIT_INVALID, message }
    }

    pub fn to_json(&self, command: &str, input_digest: &str) -> Value {
        json!({
            "command": command,
            "input_digest": input_digest,
            "error": self.error,
            "message": self.message,
            "flags": [self.flag],
        })
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        use Error::*;
        let (error, flag, code) = match &e {
            DivisionByZero => ("division by zero", "division-by-zero", EXIT_INVALID),
            RadicandMismatch { .. } => ("radicand mismatch", "radicand-mismatch", EXIT_INVALID),
            BothZero => ("zero polynomial", "both-zero", EXIT_INVALID),
            ZeroInput => ("zero polynomial", "zero-input", EXIT_INVALID),
            ConstantInput => ("constant polynomial", "constant-input", EXIT_INVALID),
            ReconstructionInconclusive { .. } => {
                ("reconstruction inconclusive", "reconstruction-inconclusive", EXIT_INCONCLUSIVE)
            }
            NonConvergence { .. } => ("root finder did not converge", "non-convergence", EXIT_INCONCLUSIVE),
            SingularMap => ("singular map", "singular-map", EXIT_INVALID),
            IdentityMap => ("identity map", "identity-map", EXIT_INVALID),
            DegreeTooSmall { .. } => ("degree too small", "degree-too-small", EXIT_INVALID),
            NotRepresentable => ("not representable", "not-representable", EXIT_INVALID),
            SingularModel => ("singular model", "singular-model", EXIT_INVALID),
            GenusTooSmall { .. } => ("genus too small", "genus-too-small", EXIT_INVALID),
            IllegalCollapse { .. } => ("illegal collapse", "illegal-collapse", EXIT_INVALID),
            NotEvenModel => ("not an even model", "not-even-model", EXIT_INVALID),
            SearchInconclusive { .. } => ("search inconclusive", "search-inconclusive", EXIT_INCONCLUSIVE),
            FixedBranchPoint => ("involution fixes a branch point", "fixed-branch-point", EXIT_INVALID),
            OddTermResidue { .. } => ("odd term residue", "odd-term-residue", EXIT_INVALID),
            ZeroEndCoefficient => ("zero end coefficient", "zero-end-coefficient", EXIT_INVALID),
            ExcludedLocusPoint { .. } => ("excluded locus point", "excluded-locus-point", EXIT_UNDEFINED),
            IrrationalInvariants => ("irrational invariants", "irrational-invariants", EXIT_INCONCLUSIVE),
            LengthMismatch { .. } => ("length mismatch", "length-mismatch", EXIT_INVALID),
            NotOnLocus => ("not on locus", "not-on-locus", EXIT_INVALID),
            ZeroLeading => ("zero leading invariant", "zero-leading", EXIT_INVALID),
            SingularOutput { .. } => ("singular output", "singular-output", EXIT_INVALID),
            ToleranceAmbiguity { .. } => ("tolerance ambiguity", "tolerance-ambiguity", EXIT_INCONCLUSIVE),
            UnknownSignature { .. } => ("unknown signature", "unknown-signature", EXIT_INCONCLUSIVE),
            BadTolerance(_) => ("bad tolerance", "bad-tolerance", EXIT_INVALID),
        };
        Self { error, flag, code, message: e.to_string() }
    }
}
