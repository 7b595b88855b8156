//! Identity checkers: one per convolution identity satisfied by the
//! hypergeometric Bernoulli family, each computing both sides by disjoint
//! code paths over a parameter grid and reporting exact equality or
//! counterexamples.
//!
//! Polynomial identities in `x` (or `x1, x2`) are certified by evaluation:
//! two polynomials of degree at most `d` that agree at `d + 1` distinct
//! rational points are equal, so agreement on a sufficiently large sample
//! panel is a proof, not a heuristic. Series identities are compared
//! coefficient-by-coefficient through a configured truncation order, with
//! denominators cleared by cross-multiplication so that no series with a
//! non-unit constant term is ever inverted.

mod convolution;
mod egf;
mod product_sums;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bernoulli::HbTable;
use crate::rational::{format_rational, rat, rat_int, Rational};

/// The closed set of identities the suite knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    EulerLinear,
    EulerQuadratic,
    EulerEvenQuadratic,
    ConvolutionConstancy,
    ConvolutionOddZero,
    BAtOne,
    MainMultinomial,
    M1Corollary,
    M1N2Alternating,
    M1N2Plain,
    MnEqual,
    N2Equal,
    Kamano,
    N2Even,
    N2Odd,
    PartialFractionTwo,
    PartialFractionF,
    EgfIdentity1,
    EgfIdentity2,
    EgfProductRecurrence,
    SopRecurrenceCheck,
    SopExampleP2,
    SopExampleP3,
    SopClosedFormCheck,
    PartialFractionThree,
}

impl IdentityId {
    pub const ALL: [IdentityId; 25] = [
        IdentityId::EulerLinear,
        IdentityId::EulerQuadratic,
        IdentityId::EulerEvenQuadratic,
        IdentityId::ConvolutionConstancy,
        IdentityId::ConvolutionOddZero,
        IdentityId::BAtOne,
        IdentityId::MainMultinomial,
        IdentityId::M1Corollary,
        IdentityId::M1N2Alternating,
        IdentityId::M1N2Plain,
        IdentityId::MnEqual,
        IdentityId::N2Equal,
        IdentityId::Kamano,
        IdentityId::N2Even,
        IdentityId::N2Odd,
        IdentityId::PartialFractionTwo,
        IdentityId::PartialFractionF,
        IdentityId::EgfIdentity1,
        IdentityId::EgfIdentity2,
        IdentityId::EgfProductRecurrence,
        IdentityId::SopRecurrenceCheck,
        IdentityId::SopExampleP2,
        IdentityId::SopExampleP3,
        IdentityId::SopClosedFormCheck,
        IdentityId::PartialFractionThree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::EulerLinear => "euler_linear",
            IdentityId::EulerQuadratic => "euler_quadratic",
            IdentityId::EulerEvenQuadratic => "euler_even_quadratic",
            IdentityId::ConvolutionConstancy => "convolution_constancy",
            IdentityId::ConvolutionOddZero => "convolution_odd_zero",
            IdentityId::BAtOne => "b_at_one",
            IdentityId::MainMultinomial => "main_multinomial",
            IdentityId::M1Corollary => "m1_corollary",
            IdentityId::M1N2Alternating => "m1n2_alternating",
            IdentityId::M1N2Plain => "m1n2_plain",
            IdentityId::MnEqual => "mn_equal",
            IdentityId::N2Equal => "n2_equal",
            IdentityId::Kamano => "kamano",
            IdentityId::N2Even => "n2_even",
            IdentityId::N2Odd => "n2_odd",
            IdentityId::PartialFractionTwo => "partial_fraction_two",
            IdentityId::PartialFractionF => "partial_fraction_F",
            IdentityId::EgfIdentity1 => "egf_identity_1",
            IdentityId::EgfIdentity2 => "egf_identity_2",
            IdentityId::EgfProductRecurrence => "egf_product_recurrence",
            IdentityId::SopRecurrenceCheck => "sop_recurrence_check",
            IdentityId::SopExampleP2 => "sop_example_p2",
            IdentityId::SopExampleP3 => "sop_example_p3",
            IdentityId::SopClosedFormCheck => "sop_closed_form_check",
            IdentityId::PartialFractionThree => "partial_fraction_three",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown identity id {0:?}")]
pub struct UnknownIdentity(pub String);

impl FromStr for IdentityId {
    type Err = UnknownIdentity;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| UnknownIdentity(s.to_string()))
    }
}

/// Parameter ranges swept by the checkers, plus the sample panel used to
/// certify polynomial identities. All integer ranges are inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamGrid {
    /// Range of the first family order `N`.
    pub n_orders: (u32, u32),
    /// Range of the second family order `M`.
    pub m_orders: (u32, u32),
    /// Range of the index/degree `n`.
    pub degrees: (i64, i64),
    /// Range of the product length `p`.
    pub factors: (u32, u32),
    /// Truncation order for series identities.
    pub series_order: usize,
    /// Base sample points; extended deterministically when a check needs
    /// more distinct values than are present.
    pub panel: Vec<Rational>,
}

/// The built-in sample points: exact, distinct, and including the
/// distinguished values 0 and 1.
fn panel_seeds() -> Vec<Rational> {
    vec![
        rat_int(0),
        rat_int(1),
        rat(1, 2),
        rat(-3, 7),
        rat(22, 7),
        rat_int(2),
        rat_int(-1),
        rat(3, 2),
        rat(-5, 2),
    ]
}

/// Deterministic panel of `count` distinct rationals: the seed list,
/// extended with integers 3, 4, 5, ...
pub fn default_panel(count: usize) -> Vec<Rational> {
    extend_panel(panel_seeds(), count)
}

fn extend_panel(mut panel: Vec<Rational>, count: usize) -> Vec<Rational> {
    let mut next = 3i64;
    while panel.len() < count {
        let candidate = rat_int(next);
        if !panel.contains(&candidate) {
            panel.push(candidate);
        }
        next += 1;
    }
    panel
}

impl ParamGrid {
    /// The default verification grid: orders 1..=4, degrees 0..=30,
    /// product lengths 1..=5, series order 40.
    pub fn default_verify() -> Self {
        ParamGrid::new((1, 4), (1, 4), (0, 30), (1, 5), 40)
    }

    pub fn new(
        n_orders: (u32, u32),
        m_orders: (u32, u32),
        degrees: (i64, i64),
        factors: (u32, u32),
        series_order: usize,
    ) -> Self {
        assert!(n_orders.0 >= 1 && n_orders.0 <= n_orders.1, "bad N range");
        assert!(m_orders.0 >= 1 && m_orders.0 <= m_orders.1, "bad M range");
        assert!(degrees.0 <= degrees.1, "bad n range");
        assert!(factors.0 >= 1 && factors.0 <= factors.1, "bad p range");
        let needed = (degrees.1.max(0) as usize) + 1;
        ParamGrid {
            n_orders,
            m_orders,
            degrees,
            factors,
            series_order,
            panel: default_panel(needed.max(8)),
        }
    }

    /// Replace the sample panel (values must be distinct).
    pub fn with_panel(mut self, panel: Vec<Rational>) -> Self {
        for (i, v) in panel.iter().enumerate() {
            assert!(
                !panel[..i].contains(v),
                "panel values must be distinct, {} repeats",
                format_rational(v)
            );
        }
        self.panel = panel;
        self
    }

    pub fn n_order_range(&self) -> impl Iterator<Item = u32> {
        self.n_orders.0..=self.n_orders.1
    }

    pub fn m_order_range(&self) -> impl Iterator<Item = u32> {
        self.m_orders.0..=self.m_orders.1
    }

    pub fn degree_range(&self) -> impl Iterator<Item = i64> {
        self.degrees.0..=self.degrees.1
    }

    pub fn factor_range(&self) -> impl Iterator<Item = u32> {
        self.factors.0..=self.factors.1
    }

    /// The first `count` panel points, extending deterministically past the
    /// stored values if necessary.
    pub fn panel_points(&self, count: usize) -> Vec<Rational> {
        if self.panel.len() >= count {
            self.panel[..count].to_vec()
        } else {
            extend_panel(self.panel.clone(), count)
        }
    }
}

/// One exact counterexample: the parameter assignment and both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub params: String,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Result of checking one identity over one grid.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub grid: ParamGrid,
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// Everything except the wall-clock time, for determinism comparisons.
    pub fn content(&self) -> (IdentityId, u64, &[Failure], &[String]) {
        (self.id, self.checked, &self.failures, &self.notes)
    }
}

/// Accumulates check outcomes for one identity sweep.
pub(crate) struct Recorder {
    checked: u64,
    failures: Vec<Failure>,
    notes: Vec<String>,
    started: Instant,
}

impl Recorder {
    pub(crate) fn new() -> Self {
        Recorder {
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            started: Instant::now(),
        }
    }

    /// Record one exact comparison.
    pub(crate) fn check(&mut self, params: impl FnOnce() -> String, lhs: Rational, rhs: Rational) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                params: params(),
                lhs,
                rhs,
            });
        }
    }

    pub(crate) fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    pub(crate) fn finish(self, id: IdentityId, grid: &ParamGrid) -> IdentityReport {
        IdentityReport {
            id,
            grid: grid.clone(),
            checked: self.checked,
            failures: self.failures,
            notes: self.notes,
            elapsed: self.started.elapsed(),
        }
    }
}

/// Run a single identity checker over the grid.
pub fn run_identity(id: IdentityId, grid: &ParamGrid, table: &mut HbTable) -> IdentityReport {
    match id {
        IdentityId::EulerLinear => convolution::euler_linear(grid, table),
        IdentityId::EulerQuadratic => convolution::euler_quadratic(grid, table),
        IdentityId::EulerEvenQuadratic => convolution::euler_even_quadratic(grid, table),
        IdentityId::ConvolutionConstancy => convolution::constancy(grid, table),
        IdentityId::ConvolutionOddZero => convolution::odd_zero(grid, table),
        IdentityId::BAtOne => convolution::b_at_one(grid, table),
        IdentityId::MainMultinomial => convolution::main_multinomial(grid, table),
        IdentityId::M1Corollary => convolution::m1_corollary(grid, table),
        IdentityId::M1N2Alternating => convolution::m1n2_alternating(grid, table),
        IdentityId::M1N2Plain => convolution::m1n2_plain(grid, table),
        IdentityId::MnEqual => convolution::mn_equal(grid, table),
        IdentityId::N2Equal => convolution::n2_equal(grid, table),
        IdentityId::Kamano => convolution::kamano(grid, table),
        IdentityId::N2Even => convolution::n2_even(grid, table),
        IdentityId::N2Odd => convolution::n2_odd(grid, table),
        IdentityId::PartialFractionTwo => egf::partial_fraction_two(grid, table),
        IdentityId::PartialFractionF => egf::partial_fraction_f(grid, table),
        IdentityId::EgfIdentity1 => egf::egf_identity_1(grid, table),
        IdentityId::EgfIdentity2 => egf::egf_identity_2(grid, table),
        IdentityId::EgfProductRecurrence => egf::product_recurrence(grid, table),
        IdentityId::SopRecurrenceCheck => product_sums::recurrence_check(grid, table),
        IdentityId::SopExampleP2 => product_sums::example_p2(grid, table),
        IdentityId::SopExampleP3 => product_sums::example_p3(grid, table),
        IdentityId::SopClosedFormCheck => product_sums::closed_form_check(grid, table),
        IdentityId::PartialFractionThree => egf::partial_fraction_three(grid, table),
    }
}

/// Run several checkers in order; the report order matches the input order.
pub fn run_suite(ids: &[IdentityId], grid: &ParamGrid, table: &mut HbTable) -> Vec<IdentityReport> {
    ids.iter().map(|&id| run_identity(id, grid, table)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!(
            "no_such_identity".parse::<IdentityId>(),
            Err(UnknownIdentity("no_such_identity".into()))
        );
    }

    #[test]
    fn panel_is_distinct_and_extends() {
        let p = default_panel(40);
        assert_eq!(p.len(), 40);
        for (i, v) in p.iter().enumerate() {
            assert!(!p[..i].contains(v));
        }
        // the seeds already contain 2 and -1; extension skips them
        assert!(p.contains(&rat_int(3)));
        assert!(p.contains(&rat(22, 7)));
    }

    #[test]
    fn grid_panel_points_extend_past_custom_panels() {
        let grid = ParamGrid::new((1, 2), (1, 2), (0, 5), (1, 2), 10)
            .with_panel(vec![rat(1, 3)]);
        let pts = grid.panel_points(4);
        assert_eq!(pts.len(), 4);
        assert_eq!(pts[0], rat(1, 3));
        for (i, v) in pts.iter().enumerate() {
            assert!(!pts[..i].contains(v));
        }
    }

    #[test]
    #[should_panic(expected = "distinct")]
    fn duplicate_panel_rejected() {
        let _ = ParamGrid::default_verify().with_panel(vec![rat_int(1), rat(2, 2)]);
    }
}
