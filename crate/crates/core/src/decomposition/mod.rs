//! The structured factors of both block systems, the printed inverse tables,
//! and exact checks of the factorisations.

pub mod plus12;
pub mod pm1;

pub use plus12::{
    build_ln, build_pn, build_un, check_plus12_lu, hn_inverse_closed, ln_inverse_closed,
    un_inverse_closed, verify_plus12_lu,
};
pub use pm1::{
    build_r2n, build_u2n, check_pm1_decomposition, h2n_inverse_closed, r2n_inverse_closed,
    verify_pm1_decomposition,
};
