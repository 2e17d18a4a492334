//! Bench placeholder; filled in alongside the main build.

fn main() {}
