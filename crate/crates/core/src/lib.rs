//! Calibrated multi-task classification of eviction status in clinical text.
//!
//! The library covers the full pipeline at desk scale:
//!
//! - [`taxonomy`] — canonical label sets for the two tasks (presence and
//!   period), pair validity policies, and cross-dataset label conversion.
//! - [`corpus`] — JSON Lines dataset I/O, keyword filtering, split
//!   management, and a synthetic-corpus generator with planted
//!   SBDH/label correlations.
//! - [`encoding`] — model-input construction: SBDH knowledge injection,
//!   the two-slot prompt template, the three training variants, and
//!   pluggable SBDH providers.
//! - [`model`] — trainable toy backends (bag-of-features and a one-layer
//!   attention encoder) with two softmax heads, exact analytic gradients,
//!   and a binary checkpoint format.
//! - [`calibration`] — per-task temperature scaling fitted by NLL
//!   minimization on validation logits.
//! - [`metrics`] — confusion-matrix statistics (MCC, macro/micro F1 in
//!   both the support-weighted and pooled forms), ECE, and Fleiss' kappa.
//! - [`harness`] — experiment orchestration: method comparison, data-size
//!   sweeps, per-category ablations, known-label conditioning, and the
//!   end-to-end pipeline with reproducible manifests.

pub mod calibration;
pub mod corpus;
pub mod encoding;
pub mod harness;
pub mod metrics;
pub mod model;
pub mod taxonomy;
