//! Posets, linear extensions, and the tableau and appendix families built on them.

mod families;
mod poset;
mod shapes;
mod transforms;

pub use families::{build_d, build_f, build_ftilde, build_r, build_u, f_closed, f_sum, family_sum, ftilde};
pub use poset::{
    count_linear_extensions, count_linear_extensions_with_limit, forest_hook_count, hook_denominators, Poset,
    DEFAULT_CAPACITY,
};
pub use shapes::{a_brute, b3_brute, b_brute, tableau_poset, WallShape, BOTTOM, MIDDLE, TOP};
pub use transforms::{
    b_by_decomposition, b_from_u, b_from_u_row, b_monster, r_brute, r_sum, u_from_b, MonsterTable,
};
