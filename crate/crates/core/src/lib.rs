//! List decoding of primitive Reed-Solomon codes with the Guruswami-Sudan
//! algorithm, together with two received-vector modifications (re-encoding and
//! the periodicity projection) that shrink the interpolation linear system.
//!
//! Modules, bottom-up:
//!
//! * [`galois`]: GF(q) arithmetic with exp/log tables.
//! * [`spectral`]: the length `q - 1` DFT pair and cyclic convolution.
//! * [`rscode`]: frequency-domain RS encoding, membership, MDS interpolation,
//!   and a seeded error channel.
//! * [`modify`]: the re-encoding map and the periodicity projection.
//! * [`interp`]: the Hasse-derivative interpolation system, its compressed form
//!   and decompression.
//! * [`factor`]: y-root extraction and candidate lists.
//! * [`pipeline`]: the end-to-end decoder, benchmark tables and self-test.

pub mod error;
pub mod factor;
pub mod galois;
pub mod interp;
pub mod linalg;
pub mod modify;
pub mod pipeline;
pub mod poly;
pub mod rscode;
pub mod spectral;

pub use error::{Error, Result};
pub use factor::{
    brute_force_list, candidates, substitute_check, y_roots, Candidate, CandidateList,
};
pub use galois::{Elem, FieldCtx, FieldSpec};
pub use interp::{GsaParams, InterpolationSystem};
pub use linalg::Matrix;
pub use modify::{ModifiedVector, ModifyMode};
pub use pipeline::{decode, DecodeConfig, DecodeMode, DecodeReport};
pub use poly::{BivariatePoly, Poly};
pub use rscode::{Codeword, ErrorSpec, Message, RsCode};
pub use spectral::{FreqVector, TimeVector};
