//! Gröbner bases over prime fields.
//!
//! * [`gvw`]: the signature-based GVW algorithm with syzygy, cover and
//!   same-signature criteria, plus recovery of module vectors and a
//!   degree-truncated enumeration cross-check.
//! * [`mmm`]: Gröbner bases of kernels of linear maps, and FGLM order change.
//! * [`buchberger`]: the classical algorithm, used as the reference oracle.

pub mod buchberger;
pub mod field;
pub mod gvw;
pub mod mmm;
pub mod poly;
pub mod problem;
pub mod sig;

pub use buchberger::{buchberger, buchberger_with, is_groebner, BuchbergerConfig, BuchbergerStats};
pub use field::{FieldElem, PrimeField};
pub use gvw::{gvw_run, GvwConfig, GvwError, GvwState, GvwStats, SelectionStrategy};
pub use mmm::{fglm, mmm_kernel_gb, LinearMap, MmmError};
pub use poly::{Monomial, MonomialOrder, PolyRing, Polynomial, VarSet};
pub use problem::{parse_problem, Problem, ProblemError};
pub use sig::{ModuleMonomial, ModuleOrder, ModuleOrderKind};
