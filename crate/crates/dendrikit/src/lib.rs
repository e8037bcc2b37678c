//! Document format and reporting surface behind the `dendrikit` binary.
//!
//! The library half of the crate is the textual [`format`], shared by every
//! command input and output. The mathematics lives in the `dendriform`
//! crate; this one only moves exact structure-constant data in and out of
//! files.

pub mod format;
