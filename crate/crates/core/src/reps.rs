//! Unitary irrep matrices.
