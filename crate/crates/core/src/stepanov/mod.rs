//! Exact symbolic machinery around the fourth-order operator `𝒟`.
//!
//! Everything symbolic runs over arbitrary-precision rationals; the
//! finite-field side (rat2/rat3, low moments) runs over `F_p`.

pub mod catalog;
pub mod mpoly;
pub mod operator;
pub mod quad;
pub mod relations;
pub mod unipoly;

pub use catalog::{identity_catalog, identity_catalog_check, CatalogEntry, CatalogId};
pub use mpoly::{falling, q, qf, MPoly, Q};
pub use operator::{
    alpha11_obstruction, d_alpha_l, d_operator, f_a, quintic_image, verify_g_zero, Alpha11Report,
    DAlphaLReport, DiffPoly, GReport,
};
pub use quad::{gamma_values, lemma13_symbolic, GammaSet, Lemma13Report, QuadElem};
pub use relations::{lemma5_lemma6_numeric, rat2_check, rat3_check, rat_all, LowMomentsReport};
pub use unipoly::{QPoly, RatFunc};
