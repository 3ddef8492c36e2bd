//! Direct powers K^n.
