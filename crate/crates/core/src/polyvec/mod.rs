//! Exact polynomials, f/h/γ vectors and toric g-polynomials of simple polytopes.

mod families;
mod poly;
mod probes;
mod series;
mod transforms;

pub use families::{gamma_family, h_family, toric_g_family, Family};
pub use poly::IntPoly;
pub use probes::{kk_upper_bound, kruskal_katona_ok, sturm_real_rooted};
pub use series::{
    verify_series, SeriesCheck, SeriesData, SeriesReport, TruncSeries, G0_EQUATION, G0_RECURRENCE,
    GJ_PRODUCT, G_RECURRENCE, P_EQUATION,
};
pub use transforms::{
    cnix, f_to_h, g_contrib, gamma_to_h, h_to_f, h_to_gamma, is_palindromic, narayana, peak_poly,
    toric_g_from_gamma, toric_g_hetyei, FhgVectors, PeakTable,
};
