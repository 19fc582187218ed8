//! Document schema and renderers shared by the binary and its tests.

pub mod document;
pub mod render;
