use std::path::PathBuf;

use thiserror::Error;

use crate::densmat::ProjectorMatrix;
use crate::extract::MembershipDiagnostics;
use crate::purify::PurifyTrace;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: max |A - A^T| = {defect:.3e} exceeds {tol:.0e}")]
    NotSymmetric { defect: f64, tol: f64 },

    #[error("{context}: dimension mismatch ({left} vs {right})")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },

    #[error("occupied-orbital count {n_occ} exceeds basis dimension {dim}")]
    OccupationTooLarge { n_occ: usize, dim: usize },

    #[error("vector is not normalized: |v| = {norm:.12}")]
    NotUnitVector { norm: f64 },

    #[error(
        "eigensolver failed on {dim}x{dim} matrix \
         (|A|_F = {frobenius:.3e}, max |a_ij| = {max_abs:.3e}): {reason}"
    )]
    Eigensolver {
        dim: usize,
        frobenius: f64,
        max_abs: f64,
        reason: String,
    },

    #[error(
        "purification did not converge within {max_iter} iterations \
         (last idempotency defect {defect:.3e})"
    )]
    PurifyMaxIter {
        max_iter: usize,
        defect: f64,
        trace: Box<PurifyTrace>,
    },

    #[error("purification diverging: idempotency defect rose for {window} consecutive iterations")]
    PurifyDiverging { window: usize, trace: Box<PurifyTrace> },

    #[error("purified matrix trace {trace:.12} does not match target {n_occ}")]
    TraceMismatch {
        trace: f64,
        n_occ: usize,
        trace_record: Box<PurifyTrace>,
    },

    #[error(
        "kernel subspace not extractable: min membership probability \
         {min_membership:.9} after {iterations} iterations"
    )]
    KernelNotExtractable {
        min_membership: f64,
        iterations: usize,
        diagnostics: Box<MembershipDiagnostics>,
        /// Last iterate: a valid rank-N' projector on the kernel block that
        /// does not lie inside the parent subspace.
        best_effort: Box<ProjectorMatrix>,
    },

    #[error(
        "kernel extraction infeasible: requested {n_occ} occupied orbitals \
         but the restricted block has rank {rank}"
    )]
    KernelInfeasible { n_occ: usize, rank: usize },

    #[error("overlap matrix is near-singular: smallest eigenvalue {min_eig:.3e}")]
    NearLinearDependence { min_eig: f64 },

    #[error("invalid fragment scheme: {0}")]
    InvalidScheme(String),

    #[error("{0}")]
    Validation(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error in {path} (line {line}): {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },
}

impl Error {
    /// True for failures caused by malformed or inconsistent inputs (files,
    /// schemes, dimensions) as opposed to a computation that ran and failed.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NotSquare { .. }
                | Error::NotSymmetric { .. }
                | Error::DimensionMismatch { .. }
                | Error::OccupationTooLarge { .. }
                | Error::NotUnitVector { .. }
                | Error::NearLinearDependence { .. }
                | Error::InvalidScheme(_)
                | Error::Validation(_)
                | Error::Io { .. }
                | Error::Parse { .. }
        )
    }
}
