//! Shared report types: every normality verdict names its route and carries
//! a re-checkable certificate.

use crate::ideal::Exponent;
use crate::lp::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalityRoute {
    /// Hilbert-basis test on the Rees cone.
    ReesCone,
    /// Hilbert-basis test on the lifted degree-2 configuration.
    DegreeTwoCone,
    /// Hochster-configuration criterion for edge ideals of graphs.
    Hochster,
    /// Zero and unit ideals are normal by convention.
    Convention,
    /// Neighborhood-cover reduction chain for cover ideals.
    CoverReduction,
}

#[derive(Debug, Clone)]
pub enum NormalityWitness {
    /// `t^exponent` lies in the closure of `I^power` but not in `I^power`;
    /// `lp_value >= power` is the LP certificate and `scaling_power` is a `p`
    /// with `(t^exponent)^p` inside `I^{p*power}`.
    Power {
        exponent: Exponent,
        power: u64,
        lp_value: Rational,
        scaling_power: Option<u64>,
    },
    /// A lattice point of the cone outside the semigroup of its generators.
    Cone { point: Vec<i64> },
    /// Two induced odd cycles with no edge between them.
    HochsterPair {
        cycle1: Vec<usize>,
        cycle2: Vec<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct NormalityReport {
    pub normal: bool,
    pub route: NormalityRoute,
    pub witness: Option<NormalityWitness>,
}

impl NormalityReport {
    pub fn by_convention(normal: bool) -> Self {
        NormalityReport {
            normal,
            route: NormalityRoute::Convention,
            witness: None,
        }
    }
}
