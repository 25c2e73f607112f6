//! Exact-arithmetic toolkit for normality and integral-closure questions
//! about monomial ideals, with a focus on edge ideals and cover ideals of
//! graphs and clutters. Every verdict comes with a machine-checkable
//! certificate: an LP optimum with its dual, a Hilbert-basis witness, or a
//! pair of induced odd cycles.

pub mod budget;
pub mod closure;
pub mod clutter;
pub mod cone;
pub mod error;
pub mod ideal;
pub mod lp;
pub mod verdict;

pub use budget::Budget;
pub use closure::{
    closure_generators, closure_membership, covering_vertices, disjoint_product_normality, irp_ge,
    irp_le, min_generator_test, normality_via_powers, scaled_power_law, CoveringPolyhedron,
    IrpLeReport, LpValue, MembershipVerdict, MembershipWitness, PowersReport,
};
pub use clutter::{
    duality_criterion, edge_ideal_normality_combinatorial, hochster_configurations, m_monomial,
    minor_normality_scan, necessary_condition_check, neighbor_mvc_reduction, Clutter,
    DualityReport, Graph, HochsterConfig, MinorScanReport, NecessaryConditionReport,
    ReductionReport, ReductionStep,
};
pub use cone::{
    b_set, cone_membership_lp, dual_normality, hilbert_basis, normality_via_bset,
    normality_via_rees, rees_cone, HilbertBasisReport, IntegerCone,
};
pub use error::{Error, Result};
pub use ideal::{
    divides, exp_add, exp_scale, exp_sub, power_membership, support, total_degree, Exponent,
    IdealKind, MonomialIdeal,
};
pub use lp::{
    format_rational, lp_max, lp_min, rank, rat, rat_int, LpSolution, QMatrix, QVector, Rational,
};
pub use verdict::{NormalityReport, NormalityRoute, NormalityWitness};
