//! The correspondence between small cells of the twisted affine
//! Grassmannian and nilpotent orbits: expected table, explicit witnesses,
//! verification, fibers and dimension duality.

pub mod duality;
pub mod fiber;
pub mod table;
pub mod verify;
pub mod witness;

pub use duality::{duality_dims, DualityRow};
pub use fiber::{fiber_contains, fiber_dim_check, fiber_point, fiber_zero_profile, k_orbit_dim_by_commutant, FiberDimCheck};
pub use table::{expected_image, shape, table_rows, Branch, CellImageRow, Shape};
pub use verify::{branch_of, verify_table, Checks, Report, ReportRow, CONJUGATES_PER_ROW};
pub use witness::{non_small_witness, order2_embed, order2_standard, random_d_nilpotent, row_witnesses, witness};
