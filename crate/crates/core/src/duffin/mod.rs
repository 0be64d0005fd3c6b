//! Möbius-series harmonic continuation of Ξ(t)/(t²+¼), its regularized
//! summation, zero finding for Ξ and the scans built on them.

pub mod cosine;
pub mod halfplane;
pub mod scan;
pub mod series;
pub mod summation;
pub mod zeros;

pub use cosine::cosine_transform_C;
pub use halfplane::{poisson_halfplane, poisson_halfplane_spectral};
pub use series::{
    duffin_harmonic, duffin_series, duffin_series_detail, DuffinValue, Normalization, NormalizationKind,
    ADJUDICATED_CONVENTION, ADJUDICATED_NORMALIZATION,
};
pub use summation::{p_summation, p_summation_detail, PSum, SummationMethod, SummationScheme};
pub use scan::{
    boundary_recovery, rh_criterion_scan, scan_scheme, second_limit_printed, verify_duffin, verify_duffin_with, verify_rh_criterion,
    verify_second_limit, Adjudication, Candidate, DEFAULT_Y_SEQ, DUFFIN_GRID, SCAN_M_MAX, SECOND_LIMIT_XS,
};
pub use zeros::{find_zeros, zero_count_main_term, ZeroEntry, ZerosTable};
