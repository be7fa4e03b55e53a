//! Maximal ascents and descents of nonperiodic words in free groups under
//! the Magnus bi-order.
//!
//! - [`word`]: reduced words, rotations, periodicity, unique positioning.
//! - [`series`]: truncated noncommutative integer power series and the Magnus map.
//! - [`magnus`]: the Magnus order as a [`order::Comparator`].
//! - [`order`]: ascents, descents, peaks and lows, maximal ascents, decompositions.
//! - [`verify`]: per-word checks, Weinbaum factorizations, and campaigns.

pub mod anomaly;
pub mod error;
pub mod magnus;
pub mod order;
pub mod series;
pub mod verify;
pub mod word;

pub use anomaly::{Anomaly, AnomalyKind};
pub use error::{DecomposeError, OrderError, SeriesError, VerifyError, WordError};
pub use magnus::{magnus_compare_words, parse_precedence, MagnusOrder, TruncationPolicy};
pub use order::{decompose, is_ascent, is_descent, maximal_ascent, prefix_profile, Algorithm, Comparator, Decomposition};
pub use series::{atom_series, compare_series, mu, Monomial, SeriesOrdering, TruncatedSeries};
pub use verify::{check_word, run_campaign, weinbaum_factorizations, CampaignConfig, CampaignReport, Dedup, WordReport};
pub use word::{overlap_between, parse_word, reduce, uniquely_positioned, Letter, Occurrence, Origin, Sign, Word};
