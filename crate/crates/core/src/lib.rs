//! Thompson's group `F` as reduced tree pair diagrams.
//!
//! * [`tree`]: binary trees, the `NEG:POS` text form and reduction.
//! * [`fordham`]: caret types and exact word length over `{x0, x1}`.
//! * [`group`]: generators, products, inverses and the rotation fast path.
//! * [`normal_form`]: normal forms in the infinite presentation.
//! * [`seesaw`]: the seesaw family `S(l, m)` and swing verification.
//! * [`geodesy`]: breadth-first balls, geodesics and synchronous distance.

pub mod error;
pub mod fordham;
pub mod geodesy;
pub mod group;
pub mod normal_form;
pub mod seesaw;
pub mod tree;

pub use error::{Error, Result};
pub use fordham::{classify, length, CaretType};
pub use group::{evaluate, generator_pair, multiply, right_multiply_generator, GenWord, Generator};
pub use normal_form::NormalForm;
pub use seesaw::{reducing_generators, seesaw_word, verify_swing, SeesawParams, SwingReport};
pub use tree::{Tree, TreePair};
