//! Genus and feature distributions, co-occurrence, dispersion.

mod freq;
mod gini;
mod profile;

pub use freq::{
    feature_cooccurrence, feature_distribution, genus_distribution, CooccurrenceEntry, CooccurrenceTable,
    FeatureCounts, FreqEntry, FreqTable,
};
pub use gini::{gini_index, GiniError};
pub use profile::{observation_profile, ObservationProfile};

/// Default minimum pair count for co-occurrence output.
pub const DEFAULT_MIN_COOCCURRENCE: usize = 2;
