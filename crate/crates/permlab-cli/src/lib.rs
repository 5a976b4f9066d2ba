//! Library side of the `permlab` command-line tool: the embedded reference
//! sequences, the verification suite they feed, output rendering, and the
//! on-disk result cache.

pub mod cache;
pub mod output;
pub mod reference;
pub mod verify;
