//! Simulation and numeric audit of a four-party quantum secret-sharing
//! protocol over an amplitude-damping channel.
//!
//! The crate is organized around the protocol pipeline:
//!
//! - [`qmath`] — dense complex linear algebra for registers up to 16
//!   dimensions (tensor products, partial trace, spectra, fidelity, entropy).
//! - [`channels`] — Kraus-operator machinery: the amplitude-damping channel,
//!   channel application to selected qubits, and the literal post-channel
//!   state constructors used for transcription audits.
//! - [`protocol`] — the ideal (noiseless) protocol: GHZ preparation, Pauli
//!   encodings, Bell decomposition, qudit teleportation and the exhaustive
//!   decode over all operation pairs.
//! - [`discrimination`] — the noisy pipeline: generalized measurements,
//!   M1/M2 classification, inconclusive-probability bounds, POVM families
//!   with PSD feasibility scans, error rates and grid-search optimization.
//! - [`metrics`] — channel quality measures: fidelity versus noise, l1 norm
//!   of coherence and relative entropy of coherence.

pub mod channels;
pub mod discrimination;
pub mod error;
pub mod metrics;
pub mod protocol;
pub mod qmath;

pub use error::{Error, Result};
