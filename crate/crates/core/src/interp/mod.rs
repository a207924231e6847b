//! The interpolation step: build and solve the Hasse-derivative linear system,
//! optionally in compressed form for modified received vectors.

mod compress;
mod params;
mod system;

pub use compress::{
    build_compressed_system, build_v_poly, compress_system, decompress, periodic_v_poly,
    CompressionPlan,
};
pub use params::GsaParams;
pub use system::{
    build_system, constraint_ids, hasse_eval, interpolate, poly_to_solution, q_columns,
    satisfies_constraints, solution_to_poly, solve_nullspace, ColumnId, ConstraintId,
    InterpolationSystem,
};

pub(crate) use system::powers;
