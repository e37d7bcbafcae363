//! Clique/chromatic bound inequalities, each evaluated into an auditable
//! record: the bound's value, the invariant it targets, a signed slack, and
//! a holds flag. Slack is oriented so that `holds ⇔ slack ≥ -NUMERIC_TOL`
//! for every kind of bound.

use serde::{Deserialize, Serialize};

use crate::combinatorics::CombinatorialInvariants;
use crate::error::WeightError;
use crate::graph::Graph;
use crate::spectral::Spectrum;

/// Absolute tolerance applied to every bound comparison. Eigenvalues carry
/// far smaller error at the sizes in scope, and the bound expressions only
/// amplify it by bounded factors.
pub const NUMERIC_TOL: f64 = 1e-6;

/// Stable identifiers for every inequality the harness evaluates. The
/// serialized names are the public vocabulary used in report columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    Turan,
    CaroWei,
    Wilf,
    Nikiforov,
    Conjecture1,
    EdwardsElphickChi,
    AndoLinChi,
    FavaronUpper,
    WuElphickChiUpper,
    StanleyMu,
    WuElphickSplus,
    HongMu,
    ElphickSplus,
    MotzkinStraus,
}

impl BoundId {
    /// Every bound, in canonical evaluation and report order.
    pub const ALL: [BoundId; 14] = [
        BoundId::Turan,
        BoundId::CaroWei,
        BoundId::Wilf,
        BoundId::Nikiforov,
        BoundId::Conjecture1,
        BoundId::EdwardsElphickChi,
        BoundId::AndoLinChi,
        BoundId::FavaronUpper,
        BoundId::WuElphickChiUpper,
        BoundId::StanleyMu,
        BoundId::WuElphickSplus,
        BoundId::HongMu,
        BoundId::ElphickSplus,
        BoundId::MotzkinStraus,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::Turan => "turan",
            BoundId::CaroWei => "caro_wei",
            BoundId::Wilf => "wilf",
            BoundId::Nikiforov => "nikiforov",
            BoundId::Conjecture1 => "conjecture1",
            BoundId::EdwardsElphickChi => "edwards_elphick_chi",
            BoundId::AndoLinChi => "ando_lin_chi",
            BoundId::FavaronUpper => "favaron_upper",
            BoundId::WuElphickChiUpper => "wu_elphick_chi_upper",
            BoundId::StanleyMu => "stanley_mu",
            BoundId::WuElphickSplus => "wu_elphick_splus",
            BoundId::HongMu => "hong_mu",
            BoundId::ElphickSplus => "elphick_splus",
            BoundId::MotzkinStraus => "motzkin_straus",
        }
    }

    pub fn kind(self) -> BoundKind {
        match self {
            BoundId::Turan
            | BoundId::CaroWei
            | BoundId::Wilf
            | BoundId::Nikiforov
            | BoundId::Conjecture1
            | BoundId::MotzkinStraus => BoundKind::LowerOnOmega,
            BoundId::EdwardsElphickChi | BoundId::AndoLinChi => BoundKind::LowerOnChi,
            BoundId::FavaronUpper => BoundKind::UpperOnOmega,
            BoundId::WuElphickChiUpper => BoundKind::UpperOnChi,
            BoundId::StanleyMu
            | BoundId::WuElphickSplus
            | BoundId::HongMu
            | BoundId::ElphickSplus => BoundKind::EigenvalueInequality,
        }
    }

    /// Conjectural or almost-always statements: a genuine negative slack is
    /// a reportable discovery, not an implementation bug.
    pub fn is_falsifiable(self) -> bool {
        matches!(self, BoundId::Conjecture1 | BoundId::ElphickSplus)
    }
}

impl std::fmt::Display for BoundId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What an inequality constrains, and from which side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    #[serde(rename = "lower-on-omega")]
    LowerOnOmega,
    #[serde(rename = "upper-on-omega")]
    UpperOnOmega,
    #[serde(rename = "lower-on-chi")]
    LowerOnChi,
    #[serde(rename = "upper-on-chi")]
    UpperOnChi,
    #[serde(rename = "eigenvalue-inequality")]
    EigenvalueInequality,
}

impl BoundKind {
    /// True for kinds where the bound value must not exceed the target.
    fn target_dominates(self) -> bool {
        matches!(self, BoundKind::LowerOnOmega | BoundKind::LowerOnChi)
    }
}

/// Disposition of one evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EvalStatus {
    /// Value, target, slack, and holds are all present.
    #[serde(rename = "evaluated")]
    Evaluated,
    /// The bound value exists but its target invariant was not computed
    /// (for example chi was not requested), so slack and holds are absent.
    #[serde(rename = "value-only")]
    ValueOnly,
    /// The defining expression divides by zero on this graph.
    #[serde(rename = "undefined-denominator")]
    UndefinedDenominator,
    /// Preconditions fail on this graph (isolated vertices for the
    /// Hong-type checks); nothing was computed.
    #[serde(rename = "skipped")]
    Skipped,
}

/// One inequality evaluated on one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundEvaluation {
    pub id: BoundId,
    pub kind: BoundKind,
    pub status: EvalStatus,
    pub value: Option<f64>,
    pub target: Option<f64>,
    /// Margin by which the inequality holds: `target - value` for lower
    /// bounds, `value - target` otherwise. Negative means violated.
    pub slack: Option<f64>,
    pub holds: Option<bool>,
}

impl BoundEvaluation {
    fn evaluated(id: BoundId, value: f64, target: Option<f64>) -> Self {
        let kind = id.kind();
        match target {
            Some(target) => {
                let slack = if kind.target_dominates() {
                    target - value
                } else {
                    value - target
                };
                BoundEvaluation {
                    id,
                    kind,
                    status: EvalStatus::Evaluated,
                    value: Some(value),
                    target: Some(target),
                    slack: Some(slack),
                    holds: Some(slack >= -NUMERIC_TOL),
                }
            }
            None => BoundEvaluation {
                id,
                kind,
                status: EvalStatus::ValueOnly,
                value: Some(value),
                target: None,
                slack: None,
                holds: None,
            },
        }
    }

    fn undefined(id: BoundId) -> Self {
        BoundEvaluation {
            id,
            kind: id.kind(),
            status: EvalStatus::UndefinedDenominator,
            value: None,
            target: None,
            slack: None,
            holds: None,
        }
    }

    fn skipped(id: BoundId) -> Self {
        BoundEvaluation {
            id,
            kind: id.kind(),
            status: EvalStatus::Skipped,
            value: None,
            target: None,
            slack: None,
            holds: None,
        }
    }

    /// Holds with essentially zero margin.
    pub fn is_tight(&self) -> bool {
        self.status == EvalStatus::Evaluated && self.slack.is_some_and(|s| s.abs() <= NUMERIC_TOL)
    }

    pub fn is_violated(&self) -> bool {
        self.holds == Some(false)
    }
}

/// Immutable per-graph inputs that every bound evaluation reads. Building
/// this once per graph keeps each evaluation independently re-derivable
/// from the report row.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphFacts {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub average_degree: f64,
    pub regular: bool,
    pub has_isolated_vertex: bool,
    pub mu: f64,
    pub mu_min: f64,
    pub s_plus: f64,
    pub s_minus: f64,
    pub triangle_count: u64,
    /// `None` when the exact clique solve aborted on budget.
    pub omega: Option<usize>,
    /// `None` when the coloring solve was skipped or aborted.
    pub chi: Option<usize>,
}

impl GraphFacts {
    pub fn from_parts(
        g: &Graph,
        spectrum: &Spectrum,
        omega: Option<usize>,
        chi: Option<usize>,
    ) -> Self {
        let stats = g.degree_stats().expect("graphs have n >= 1");
        GraphFacts {
            n: g.vertex_count(),
            m: g.edge_count(),
            average_degree: stats.average,
            degrees: stats.degrees,
            regular: g.is_regular(),
            has_isolated_vertex: g.has_isolated_vertex(),
            mu: spectrum.mu,
            mu_min: spectrum.mu_min,
            s_plus: spectrum.s_plus,
            s_minus: spectrum.s_minus,
            triangle_count: g.triangle_count(),
            omega,
            chi,
        }
    }

    pub fn new(g: &Graph, spectrum: &Spectrum, invariants: &CombinatorialInvariants) -> Self {
        Self::from_parts(g, spectrum, Some(invariants.omega), invariants.chi)
    }

    pub fn triangle_free(&self) -> bool {
        self.triangle_count == 0
    }
}

/// `n/(n - d) <= omega` for average degree `d`.
pub fn turan_bound(n: usize, average_degree: f64, omega: Option<usize>) -> BoundEvaluation {
    assert!(
        average_degree < n as f64,
        "simple graphs have average degree below n"
    );
    let value = n as f64 / (n as f64 - average_degree);
    BoundEvaluation::evaluated(BoundId::Turan, value, omega.map(|w| w as f64))
}

/// `sum over vertices of 1/(n - d_i) <= omega`.
pub fn caro_wei_bound(degrees: &[usize], omega: Option<usize>) -> BoundEvaluation {
    let n = degrees.len();
    assert!(degrees.iter().all(|&d| d < n), "simple graphs have d_i < n");
    let value: f64 = degrees.iter().map(|&d| 1.0 / (n - d) as f64).sum();
    BoundEvaluation::evaluated(BoundId::CaroWei, value, omega.map(|w| w as f64))
}

/// `n/(n - mu) <= omega` for spectral radius `mu`.
pub fn wilf_bound(n: usize, mu: f64, omega: Option<usize>) -> BoundEvaluation {
    assert!(mu < n as f64, "spectral radius is at most n - 1");
    let value = n as f64 / (n as f64 - mu);
    BoundEvaluation::evaluated(BoundId::Wilf, value, omega.map(|w| w as f64))
}

/// `2m/(2m - mu^2) <= omega`; undefined when the denominator vanishes
/// (edgeless graphs).
pub fn nikiforov_bound(m: usize, mu: f64, omega: Option<usize>) -> BoundEvaluation {
    let two_m = 2.0 * m as f64;
    let denominator = two_m - mu * mu;
    if m == 0 || denominator <= 0.0 {
        return BoundEvaluation::undefined(BoundId::Nikiforov);
    }
    BoundEvaluation::evaluated(
        BoundId::Nikiforov,
        two_m / denominator,
        omega.map(|w| w as f64),
    )
}

/// `n/(n - sqrt(s+)) <= omega`, the conjectured strengthening of the
/// spectral-radius form. The undefined-denominator branch cannot occur for
/// simple graphs (`s+ <= 2m < n^2`), but it is kept as a tagged, reportable
/// outcome rather than a panic.
pub fn conjecture1_bound(n: usize, s_plus: f64, omega: Option<usize>) -> BoundEvaluation {
    let root = s_plus.sqrt();
    if root >= n as f64 {
        return BoundEvaluation::undefined(BoundId::Conjecture1);
    }
    let value = n as f64 / (n as f64 - root);
    BoundEvaluation::evaluated(BoundId::Conjecture1, value, omega.map(|w| w as f64))
}

/// The two chromatic lower bounds: `2m/(2m - mu^2) <= chi` and
/// `2m/(2m - s+) = 1 + s+/s- <= chi`. Both are undefined on edgeless
/// graphs. The two algebraic forms of the second must agree within
/// [`NUMERIC_TOL`]; see [`ando_lin_forms`].
pub fn chi_lower_bounds(
    m: usize,
    mu: f64,
    s_plus: f64,
    s_minus: f64,
    chi: Option<usize>,
) -> [BoundEvaluation; 2] {
    let chi_target = chi.map(|c| c as f64);
    let two_m = 2.0 * m as f64;

    let edwards_denominator = two_m - mu * mu;
    let edwards = if m == 0 || edwards_denominator <= 0.0 {
        BoundEvaluation::undefined(BoundId::EdwardsElphickChi)
    } else {
        BoundEvaluation::evaluated(
            BoundId::EdwardsElphickChi,
            two_m / edwards_denominator,
            chi_target,
        )
    };

    let ando_denominator = two_m - s_plus;
    let ando = if m == 0 || s_minus <= 0.0 || ando_denominator <= 0.0 {
        BoundEvaluation::undefined(BoundId::AndoLinChi)
    } else {
        BoundEvaluation::evaluated(BoundId::AndoLinChi, two_m / ando_denominator, chi_target)
    };

    [edwards, ando]
}

/// The two algebraically equal forms `2m/(2m - s+)` and `1 + s+/s-`; their
/// numeric disagreement is a solver health check.
pub fn ando_lin_forms(m: usize, s_plus: f64, s_minus: f64) -> Option<(f64, f64)> {
    if m == 0 || s_minus <= 0.0 {
        return None;
    }
    let two_m = 2.0 * m as f64;
    Some((two_m / (two_m - s_plus), 1.0 + s_plus / s_minus))
}

/// The upper bounds `omega <= 2m/mu` and `chi <= 2m/sqrt(s+)`; both
/// undefined on edgeless graphs.
pub fn upper_bounds(
    m: usize,
    mu: f64,
    s_plus: f64,
    omega: Option<usize>,
    chi: Option<usize>,
) -> [BoundEvaluation; 2] {
    if m == 0 {
        return [
            BoundEvaluation::undefined(BoundId::FavaronUpper),
            BoundEvaluation::undefined(BoundId::WuElphickChiUpper),
        ];
    }
    let two_m = 2.0 * m as f64;
    [
        BoundEvaluation::evaluated(BoundId::FavaronUpper, two_m / mu, omega.map(|w| w as f64)),
        BoundEvaluation::evaluated(
            BoundId::WuElphickChiUpper,
            two_m / s_plus.sqrt(),
            chi.map(|c| c as f64),
        ),
    ]
}

/// The four eigenvalue inequalities: `mu <= (sqrt(8m+1)-1)/2` and the same
/// cap on `sqrt(s+)`, plus `mu^2 <= 2m-n+1` and `s+ <= 2m-n+1`. The last
/// two assume no isolated vertices and are skipped otherwise; the `s+`
/// variant is an almost-always statistic, not a theorem.
pub fn eigenvalue_inequality_checks(
    n: usize,
    m: usize,
    mu: f64,
    s_plus: f64,
    has_isolated_vertex: bool,
) -> [BoundEvaluation; 4] {
    let stanley_cap = ((8.0 * m as f64 + 1.0).sqrt() - 1.0) / 2.0;
    let stanley = BoundEvaluation::evaluated(BoundId::StanleyMu, stanley_cap, Some(mu));
    let wu_splus =
        BoundEvaluation::evaluated(BoundId::WuElphickSplus, stanley_cap, Some(s_plus.sqrt()));

    let (hong, elphick) = if has_isolated_vertex {
        (
            BoundEvaluation::skipped(BoundId::HongMu),
            BoundEvaluation::skipped(BoundId::ElphickSplus),
        )
    } else {
        // no isolated vertices forces 2m >= n, so the cap is at least 1
        let cap = (2 * m) as f64 - n as f64 + 1.0;
        (
            BoundEvaluation::evaluated(BoundId::HongMu, cap, Some(mu * mu)),
            BoundEvaluation::evaluated(BoundId::ElphickSplus, cap, Some(s_plus)),
        )
    };
    [stanley, wu_splus, hong, elphick]
}

/// The edge-weight quadratic form `sum over edges of p_u * p_v` for a
/// probability vector `p`; it never exceeds `(omega-1)/(2*omega)`.
pub fn motzkin_straus_value(g: &Graph, weights: &[f64]) -> Result<f64, WeightError> {
    let n = g.vertex_count();
    if weights.len() != n {
        return Err(WeightError::BadLength {
            expected: n,
            got: weights.len(),
        });
    }
    for (index, &value) in weights.iter().enumerate() {
        if !value.is_finite() || value < 0.0 {
            return Err(WeightError::BadEntry { index, value });
        }
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(WeightError::BadSum { sum });
    }
    Ok(g.edges().map(|(u, v)| weights[u] * weights[v]).sum())
}

/// The quadratic-form inequality at uniform weights, recorded with the
/// form's value against the target expression `(omega-1)/(2*omega)`. At
/// uniform weights the value is `m/n^2`.
pub fn motzkin_straus_uniform(n: usize, m: usize, omega: Option<usize>) -> BoundEvaluation {
    let value = m as f64 / (n as f64 * n as f64);
    let target = omega.map(|w| (w as f64 - 1.0) / (2.0 * w as f64));
    BoundEvaluation::evaluated(BoundId::MotzkinStraus, value, target)
}

/// All fourteen inequalities on one graph, in [`BoundId::ALL`] order.
pub fn evaluate_all(facts: &GraphFacts) -> Vec<BoundEvaluation> {
    let mut out = Vec::with_capacity(BoundId::ALL.len());
    out.push(turan_bound(facts.n, facts.average_degree, facts.omega));
    out.push(caro_wei_bound(&facts.degrees, facts.omega));
    out.push(wilf_bound(facts.n, facts.mu, facts.omega));
    out.push(nikiforov_bound(facts.m, facts.mu, facts.omega));
    out.push(conjecture1_bound(facts.n, facts.s_plus, facts.omega));
    out.extend(chi_lower_bounds(
        facts.m,
        facts.mu,
        facts.s_plus,
        facts.s_minus,
        facts.chi,
    ));
    out.extend(upper_bounds(
        facts.m,
        facts.mu,
        facts.s_plus,
        facts.omega,
        facts.chi,
    ));
    out.extend(eigenvalue_inequality_checks(
        facts.n,
        facts.m,
        facts.mu,
        facts.s_plus,
        facts.has_isolated_vertex,
    ));
    out.push(motzkin_straus_uniform(facts.n, facts.m, facts.omega));
    debug_assert!(out.iter().map(|e| e.id).eq(BoundId::ALL));
    out
}

fn value_of(evaluations: &[BoundEvaluation], id: BoundId) -> Option<f64> {
    evaluations
        .iter()
        .find(|e| e.id == id)
        .and_then(|e| e.value)
}

/// Cross-checks that hold between the bound values themselves (not against
/// omega or chi). A non-empty result means the numerics are internally
/// inconsistent, which the harness treats as build-failing.
pub fn chain_consistency_failures(
    facts: &GraphFacts,
    evaluations: &[BoundEvaluation],
) -> Vec<String> {
    let mut failures = Vec::new();
    let mut require = |ok: bool, message: String| {
        if !ok {
            failures.push(message);
        }
    };

    let turan = value_of(evaluations, BoundId::Turan);
    let caro = value_of(evaluations, BoundId::CaroWei);
    let wilf = value_of(evaluations, BoundId::Wilf);
    let nikiforov = value_of(evaluations, BoundId::Nikiforov);
    let conjecture = value_of(evaluations, BoundId::Conjecture1);
    let ando = value_of(evaluations, BoundId::AndoLinChi);
    let favaron = value_of(evaluations, BoundId::FavaronUpper);
    let wu_chi = value_of(evaluations, BoundId::WuElphickChiUpper);

    if facts.m >= 1 {
        if let (Some(t), Some(w), Some(k)) = (turan, wilf, nikiforov) {
            require(t <= w + NUMERIC_TOL, format!("turan {t} exceeds wilf {w}"));
            require(
                w <= k + NUMERIC_TOL,
                format!("wilf {w} exceeds nikiforov {k}"),
            );
        }
        if let (Some(t), Some(c)) = (turan, caro) {
            require(
                t <= c + NUMERIC_TOL,
                format!("turan {t} exceeds caro_wei {c}"),
            );
        }
        if let (Some(w), Some(c)) = (wilf, conjecture) {
            require(
                w <= c + NUMERIC_TOL,
                format!("wilf {w} exceeds conjecture1 value {c}"),
            );
        }
        if let (Some(c), Some(a)) = (conjecture, ando) {
            require(
                c <= a + NUMERIC_TOL,
                format!("conjecture1 value {c} exceeds ando_lin value {a}"),
            );
        }
        if let (Some(w), Some(f)) = (wu_chi, favaron) {
            require(
                w <= f + NUMERIC_TOL,
                format!("chi upper bound {w} exceeds omega upper bound {f}"),
            );
        }
        if let Some((direct, ratio_form)) = ando_lin_forms(facts.m, facts.s_plus, facts.s_minus) {
            require(
                (direct - ratio_form).abs() <= NUMERIC_TOL,
                format!("ando_lin forms disagree: {direct} vs {ratio_form}"),
            );
        }
        if facts.regular {
            if let (Some(t), Some(w), Some(k)) = (turan, wilf, nikiforov) {
                require(
                    (t - w).abs() <= NUMERIC_TOL && (w - k).abs() <= NUMERIC_TOL,
                    format!("regular graph bounds differ: turan {t}, wilf {w}, nikiforov {k}"),
                );
            }
        }
    }

    if facts.triangle_free() {
        require(
            facts.s_minus >= facts.mu * facts.mu - NUMERIC_TOL,
            format!(
                "triangle-free graph has s- {} below mu^2 {}",
                facts.s_minus,
                facts.mu * facts.mu
            ),
        );
        require(
            facts.s_plus.sqrt() <= facts.n as f64 / 2.0 + NUMERIC_TOL,
            format!(
                "triangle-free graph has sqrt(s+) {} above n/2 {}",
                facts.s_plus.sqrt(),
                facts.n as f64 / 2.0
            ),
        );
    }

    failures
}
