//! Sentiment analytics for outbreak-era tweet corpora.
//!
//! The crate covers the whole path from raw CSV exports to evaluated
//! classifiers: [`corpus`] ingestion, [`textprep`] normalization,
//! domain-biased [`lexicon`] labeling, [`tfidf`] features, the
//! [`classify`] models, [`metrics`], and corpus-level [`analytics`].
//! [`pipeline`] wires the stages together and [`cli`] exposes them as
//! subcommands of the `episent` binary.

pub mod analytics;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod jsonl;
pub mod lexicon;
pub mod metrics;
pub mod pipeline;
pub mod resources;
pub mod sentiment;
pub mod textprep;
pub mod tfidf;

pub use error::{Error, Result};
pub use sentiment::{Domain, SentimentLabel};
