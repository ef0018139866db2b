//! Exact arithmetic substrate: arbitrary-precision rational polynomials,
//! reduced rational functions, Sturm root counting, and Wronskians.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads without locks.

pub mod poly;
pub mod ratfun;
pub mod sturm;
pub mod wronskian;

pub use poly::Polynomial;
pub use ratfun::{log_derivative, RationalFunction};
pub use sturm::real_root_count;
pub use wronskian::{classical_hermite, wronskian};
