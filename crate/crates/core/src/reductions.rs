//! Placeholder; implementation follows.
