//! Experiment drivers.
