//! Polyomino ideals, the toric ideal of a polyomino, zig-zag walks and
//! machine-checkable primality certificates.

pub mod algebra;
pub mod classify;
pub mod enumerate;
pub mod geometry;
pub mod grid;
pub mod text;
pub mod toric;
pub mod walks;
