//! Graded point functors and their counting polynomials.

pub mod chevalley;
pub mod graded;
pub mod points;
pub mod polynomial;
pub mod registry;

pub use chevalley::{
    budget_from_env, chevalley_census, chevalley_points, chevalley_points_monoid, chevalley_polynomial,
    counting_polynomial, graded_to_monoid, CensusMethod, GPoint, MonoidPoint, Variable, BUDGET_ENV,
    DEFAULT_POINT_BUDGET,
};
pub use graded::{convolve, GradedSet};
pub use points::{affine_points, binomial, e_f, gm_points, proj_points, spec_points, AffinePoint};
pub use polynomial::CountingPolynomial;
pub use registry::{naturality_check, Evaluation, Gadget, GadgetParams, GadgetPoint, GadgetRegistry};
