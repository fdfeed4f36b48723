//! Entity typing in e-commerce product titles, reformulated as textual
//! entailment.
//!
//! The pipeline classifies a marked entity in a product title as a brand,
//! product, or feature. Instead of a plain 3-way classifier, each class gets a
//! hypothesis ("<entity> is a brand" and friends); a binary entailment model
//! scores the title against each hypothesis and the highest-scoring class
//! wins. Hypotheses can be literal token phrases or continuous prompt
//! matrices tuned against a frozen backbone with a masked-language-modeling
//! objective. Two backbones are supported — a wordpiece transformer and a
//! character-CNN transformer — and their `[CLS]` vectors are fused (weighted
//! add or concat) before a small MLP head.
//!
//! Everything runs on a self-contained f64 reverse-mode autodiff tape
//! ([`tensor`]), so the whole pipeline is deterministic per seed and cheap to
//! gradient-check. Data-parallel inner loops (batch gradients, batch
//! evaluation) go through [`exec`], which uses rayon when the `parallel`
//! feature is enabled and falls back to sequential execution otherwise.

pub mod checkpoint;
pub mod config;
pub mod data;
pub mod encoder;
pub mod error;
pub mod eval;
pub mod exec;
pub mod model;
pub mod pipeline;
pub mod prompt;
pub mod rng;
pub mod tensor;
pub mod tokenize;

pub use error::Error;
pub use rng::Rng;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
