//! Closed-form bounds on (maximum) average connectivity and verdicts
//! comparing them with computed values.
//!
//! Every bound is an exact [`Rational`]. A [`BoundId`] fixes the formula, the
//! relation the computed quantity must satisfy, and the quantity itself (see
//! [`Quantity`]); [`verify_graph`] computes that quantity for a concrete graph.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::connectivity::{report_graph, report_graph_with, total_connectivity, Measure};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::rational::Rational;
use crate::search::{search_branch_and_bound, SearchOptions, SearchResult};
use crate::transforms::{inflation, is_2_tree, is_maximal_outerplanar, is_minimally_2_connected, subdivision};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    /// Trees: `κ̄_max(T) > 2/9`.
    TreeLower,
    /// Trees: `κ̄_max(T) <= 1/2`.
    TreeUpper,
    /// Exact value for `K_{1,n-1}`.
    StarFormula,
    /// `κ̄_max(G) <= (n-1)/2`.
    GeneralUpper,
    /// 2-edge-connected graphs: `κ̄_max(G) >= 1`.
    RobbinsLower,
    /// `r`-regular, `r` odd: `κ̄_max(G) <= (r-1)/2 + n/(4(n-1))`.
    OddRegularUpper,
    /// `κ̄_max(I(G))` from `κ̄_max(G)` for cubic `G` with a strong optimal
    /// orientation.
    InflationFormula,
    /// Minimally 2-connected: `κ̄_max(G) <= 1 + (n-3)^2/(4n(n-1))`.
    Min2connUpper,
    /// Minimally 2-connected: `κ̄_max(G) < 5/4`.
    Min2connStrict,
    /// Minimally 2-connected: `κ̄_max(G)/κ̄(G) > 4/9`.
    Min2connRatioLower,
    /// Minimally 2-connected: `κ̄_max(G)/κ̄(G) < 5/8`.
    Min2connRatioUpper,
    /// `K(S(G)) <= 2(C(n+m,2) - C(n,2)) + K(G)`, equality iff 2-connected.
    SubdivisionIdentity,
    /// Maximal outerplanar: `κ̄(G) = 2 + (2n-6)/(n(n-1))`.
    MopAverage,
    /// Maximal outerplanar: `κ̄_max(G) <= 3/2 + (n-5)/(n(n-1))`.
    MopUpper,
    /// Maximal outerplanar, order at least 4: `κ̄_max(G) >= 19/18`.
    MopConjecture,
    /// Square of the path of order `2k`: `κ̄_max >= 3/2 - (4k-3)/(2k(2k-1))`.
    SnakeValue,
    /// 2-trees: `κ̄_max(G) >= 1 + (n-3)/(n(n-1))`.
    TwoTreeLower,
    /// `λ̄_max(G)/λ̄(G) <= 1/2`.
    EdgeRatioUpper,
    /// 2-edge-connected: `λ̄_max(G)/λ̄(G) >= 1/3`.
    #[serde(rename = "edge_ratio_lower_2ec")]
    EdgeRatioLower2ec,
}

impl BoundId {
    pub const ALL: [BoundId; 19] = [
        BoundId::TreeLower,
        BoundId::TreeUpper,
        BoundId::StarFormula,
        BoundId::GeneralUpper,
        BoundId::RobbinsLower,
        BoundId::OddRegularUpper,
        BoundId::InflationFormula,
        BoundId::Min2connUpper,
        BoundId::Min2connStrict,
        BoundId::Min2connRatioLower,
        BoundId::Min2connRatioUpper,
        BoundId::SubdivisionIdentity,
        BoundId::MopAverage,
        BoundId::MopUpper,
        BoundId::MopConjecture,
        BoundId::SnakeValue,
        BoundId::TwoTreeLower,
        BoundId::EdgeRatioUpper,
        BoundId::EdgeRatioLower2ec,
    ];

    pub fn name(self) -> &'static str {
        use BoundId::*;
        match self {
            TreeLower => "tree_lower",
            TreeUpper => "tree_upper",
            StarFormula => "star_formula",
            GeneralUpper => "general_upper",
            RobbinsLower => "robbins_lower",
            OddRegularUpper => "odd_regular_upper",
            InflationFormula => "inflation_formula",
            Min2connUpper => "min2conn_upper",
            Min2connStrict => "min2conn_strict",
            Min2connRatioLower => "min2conn_ratio_lower",
            Min2connRatioUpper => "min2conn_ratio_upper",
            SubdivisionIdentity => "subdivision_identity",
            MopAverage => "mop_average",
            MopUpper => "mop_upper",
            MopConjecture => "mop_conjecture",
            SnakeValue => "snake_value",
            TwoTreeLower => "two_tree_lower",
            EdgeRatioUpper => "edge_ratio_upper",
            EdgeRatioLower2ec => "edge_ratio_lower_2ec",
        }
    }

    /// Relation `computed REL bound` that the bound asserts.
    pub fn relation(self) -> Relation {
        use BoundId::*;
        match self {
            TreeLower | Min2connRatioLower => Relation::Gt,
            Min2connStrict | Min2connRatioUpper => Relation::Lt,
            StarFormula | InflationFormula | MopAverage => Relation::Eq,
            RobbinsLower | MopConjecture | SnakeValue | TwoTreeLower | EdgeRatioLower2ec => Relation::Ge,
            TreeUpper | GeneralUpper | OddRegularUpper | Min2connUpper | SubdivisionIdentity | MopUpper
            | EdgeRatioUpper => Relation::Le,
        }
    }

    pub fn is_conjecture(self) -> bool {
        self == BoundId::MopConjecture
    }

    /// Bounds whose sharpness is unknown; verdicts never claim tightness.
    pub fn reports_tightness(self) -> bool {
        !matches!(self, BoundId::Min2connRatioLower | BoundId::Min2connRatioUpper)
    }

    pub fn quantity(self) -> Quantity {
        use BoundId::*;
        match self {
            Min2connRatioLower | Min2connRatioUpper => Quantity::VertexRatio,
            EdgeRatioUpper | EdgeRatioLower2ec => Quantity::EdgeRatio,
            MopAverage => Quantity::Average,
            SubdivisionIdentity => Quantity::SubdivisionTotal,
            InflationFormula => Quantity::InflationMax,
            _ => Quantity::MaxAverage,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for BoundId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::param(format!("unknown bound {s:?}")))
    }
}

/// What a bound constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// `κ̄_max(G)`.
    MaxAverage,
    /// `κ̄(G)`.
    Average,
    /// `κ̄_max(G) / κ̄(G)`.
    VertexRatio,
    /// `λ̄_max(G) / λ̄(G)`.
    EdgeRatio,
    /// `K(S(G))`.
    SubdivisionTotal,
    /// `κ̄_max(I(G))`.
    InflationMax,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    pub fn holds(self, computed: &Rational, bound: &Rational) -> bool {
        match self {
            Relation::Le => computed <= bound,
            Relation::Lt => computed < bound,
            Relation::Ge => computed >= bound,
            Relation::Gt => computed > bound,
            Relation::Eq => computed == bound,
        }
    }
}

/// Formula parameters; each bound reads only the ones it needs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    pub n: Option<u64>,
    pub m: Option<u64>,
    pub r: Option<u64>,
    /// Path parameter of the snake (order `2k`).
    pub k: Option<u64>,
    /// `K(G)` for the subdivision identity.
    pub total: Option<u64>,
    /// `κ̄_max` of the base graph for the inflation formula.
    pub kbm: Option<Rational>,
}

impl BoundParams {
    pub fn order(n: u64) -> Self {
        BoundParams {
            n: Some(n),
            ..Default::default()
        }
    }
}

fn need<T: Clone>(v: &Option<T>, name: &str, id: BoundId) -> Result<T> {
    v.clone().ok_or_else(|| Error::param(format!("{id} needs parameter {name}")))
}

fn need_n(p: &BoundParams, id: BoundId, min: u64) -> Result<u64> {
    let n = need(&p.n, "n", id)?;
    if n < min {
        return Err(Error::param(format!("{id} needs n >= {min}, got {n}")));
    }
    Ok(n)
}

fn q(num: u64, den: u64) -> Rational {
    Rational::ratio(num, den)
}

fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Exact value of a bound.
pub fn eval_bound(id: BoundId, p: &BoundParams) -> Result<Rational> {
    use BoundId::*;
    Ok(match id {
        TreeLower => q(2, 9),
        TreeUpper | EdgeRatioUpper => q(1, 2),
        EdgeRatioLower2ec => q(1, 3),
        RobbinsLower => Rational::one(),
        Min2connStrict => q(5, 4),
        Min2connRatioLower => q(4, 9),
        Min2connRatioUpper => q(5, 8),
        MopConjecture => q(19, 18),
        StarFormula => {
            let n = need_n(p, id, 2)?;
            let l = n - 1;
            q((l / 2) * l.div_ceil(2) + l, n * l)
        }
        GeneralUpper => {
            let n = need_n(p, id, 2)?;
            q(n - 1, 2)
        }
        OddRegularUpper => {
            let n = need_n(p, id, 2)?;
            let r = need(&p.r, "r", id)?;
            if r < 3 || r % 2 == 0 {
                return Err(Error::param(format!("{id} needs odd r >= 3, got {r}")));
            }
            q(r - 1, 2) + q(n, 4 * (n - 1))
        }
        InflationFormula => {
            let n = need_n(p, id, 2)?;
            let kbm = need(&p.kbm, "kbm", id)?;
            let num = Rational::from_integer((4 * n * (n - 1)) as i64) * (kbm - Rational::one())
                + Rational::from_integer(2 * n as i64);
            Rational::one() + num / Rational::from_integer((3 * n * (3 * n - 1)) as i64)
        }
        Min2connUpper => {
            let n = need_n(p, id, 3)?;
            Rational::one() + q((n - 3) * (n - 3), 4 * n * (n - 1))
        }
        SubdivisionIdentity => {
            let n = need_n(p, id, 1)?;
            let m = need(&p.m, "m", id)?;
            let k = need(&p.total, "total", id)?;
            Rational::from_integer((2 * (binom2(n + m) - binom2(n)) + k) as i64)
        }
        MopAverage => {
            let n = need_n(p, id, 3)?;
            Rational::from_integer(2) + q(2 * n - 6, n * (n - 1))
        }
        MopUpper => {
            let n = need_n(p, id, 3)?;
            q(3, 2) + Rational::new(n as i64 - 5, (n * (n - 1)) as i64)
        }
        SnakeValue => {
            let k = need(&p.k, "k", id)?;
            if k < 2 {
                return Err(Error::param(format!("{id} needs k >= 2, got {k}")));
            }
            q(3, 2) - q(4 * k - 3, 2 * k * (2 * k - 1))
        }
        TwoTreeLower => {
            let n = need_n(p, id, 3)?;
            Rational::one() + q(n - 3, n * (n - 1))
        }
    })
}

/// Where the computed value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueSource {
    /// Certified optimum from an exact search.
    Certified,
    /// Computed directly (no optimization involved).
    Direct,
    /// Heuristic search; only a lower bound on a maximum.
    Heuristic,
    /// Supplied by the caller.
    Supplied,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub bound_id: BoundId,
    pub bound_value: Rational,
    pub computed_value: Rational,
    pub relation: Relation,
    pub holds: bool,
    pub tight: bool,
    pub conjecture: bool,
    pub source: ValueSource,
}

/// Compares a computed value with a bound.
pub fn check_bound(id: BoundId, bound_value: Rational, computed: Rational, source: ValueSource) -> BoundVerdict {
    let relation = id.relation();
    BoundVerdict {
        bound_id: id,
        holds: relation.holds(&computed, &bound_value),
        tight: id.reports_tightness() && computed == bound_value,
        conjecture: id.is_conjecture(),
        relation,
        bound_value,
        computed_value: computed,
        source,
    }
}

/// Evaluates the bound and checks it against a certified search result.
pub fn check_against_search(id: BoundId, p: &BoundParams, result: &SearchResult) -> Result<BoundVerdict> {
    if id.quantity() != Quantity::MaxAverage {
        return Err(Error::param(format!("{id} does not constrain the maximum average alone")));
    }
    let source = if result.certified {
        ValueSource::Certified
    } else {
        ValueSource::Heuristic
    };
    Ok(check_bound(id, eval_bound(id, p)?, result.best_average.clone(), source))
}

fn certified_max(g: &Graph, objective: Measure, opts: &SearchOptions) -> Result<SearchResult> {
    let mut o = opts.clone();
    o.objective = objective;
    search_branch_and_bound(g, &o)
}

fn require(cond: bool, id: BoundId, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::precondition(format!("{id} applies only to {what}")))
    }
}

fn is_tree(g: &Graph) -> bool {
    g.n() >= 2 && g.is_connected() && g.m() == g.n() - 1
}

/// Checks the graph class a bound is stated for, derives the formula
/// parameters from `g`, computes the constrained quantity (certifying maxima
/// by branch-and-bound) and returns the verdict.
pub fn verify_graph(id: BoundId, g: &Graph, opts: &SearchOptions) -> Result<BoundVerdict> {
    use BoundId::*;
    let n = g.n() as u64;
    if n < 2 {
        return Err(Error::TooFewVertices { n: g.n(), needed: 2 });
    }
    let mut p = BoundParams::order(n);
    match id {
        TreeLower | TreeUpper => require(is_tree(g), id, "trees")?,
        StarFormula => require(is_tree(g) && (0..g.n()).any(|v| g.degree(v) == g.n() - 1), id, "stars")?,
        RobbinsLower | EdgeRatioLower2ec => require(g.is_2_edge_connected(), id, "2-edge-connected graphs")?,
        OddRegularUpper => {
            let r = g.degree(0);
            require(r % 2 == 1 && r >= 3 && g.is_regular(r), id, "odd-regular graphs of degree >= 3")?;
            p.r = Some(r as u64);
        }
        InflationFormula => require(g.is_regular(3) && g.is_connected(), id, "connected cubic graphs")?,
        Min2connUpper | Min2connStrict | Min2connRatioLower | Min2connRatioUpper => {
            require(is_minimally_2_connected(g), id, "minimally 2-connected graphs")?
        }
        SubdivisionIdentity => {
            p.m = Some(g.m() as u64);
            p.total = Some(report_graph(g)?.total);
        }
        MopAverage | MopUpper => require(is_maximal_outerplanar(g), id, "maximal outerplanar graphs")?,
        MopConjecture => require(
            g.n() >= 4 && is_maximal_outerplanar(g),
            id,
            "maximal outerplanar graphs of order >= 4",
        )?,
        SnakeValue => {
            let k = g.n() / 2;
            require(
                g.n().is_multiple_of(2) && k >= 2 && g.is_isomorphic(&families::snake(k)?),
                id,
                "squares of even-order paths",
            )?;
            p.k = Some(k as u64);
        }
        TwoTreeLower => require(is_2_tree(g) && g.n() >= 3, id, "2-trees")?,
        GeneralUpper | EdgeRatioUpper => {}
    }
    let (computed, source) = match id.quantity() {
        Quantity::MaxAverage => {
            let r = certified_max(g, Measure::Vertex, opts)?;
            (r.best_average, ValueSource::Certified)
        }
        Quantity::Average => (report_graph(g)?.average, ValueSource::Direct),
        Quantity::VertexRatio => {
            let r = certified_max(g, Measure::Vertex, opts)?;
            let kg = report_graph(g)?.total;
            (Rational::ratio(r.best_total, 2 * kg), ValueSource::Certified)
        }
        Quantity::EdgeRatio => {
            let r = certified_max(g, Measure::Edge, opts)?;
            let lg = report_graph_with(g, Measure::Edge)?.total;
            if lg == 0 {
                return Err(Error::precondition(format!("{id}: graph has no connected pair")));
            }
            (Rational::ratio(r.best_total, 2 * lg), ValueSource::Certified)
        }
        Quantity::SubdivisionTotal => {
            let s = subdivision(g);
            (
                Rational::from_integer(report_graph(&s.graph)?.total as i64),
                ValueSource::Direct,
            )
        }
        Quantity::InflationMax => {
            let base = certified_max(g, Measure::Vertex, opts)?;
            p.kbm = Some(base.best_average.clone());
            let inf = inflation(g)?;
            let r = certified_max(&inf.graph, Measure::Vertex, opts)?;
            (r.best_average, ValueSource::Certified)
        }
    };
    Ok(check_bound(id, eval_bound(id, &p)?, computed, source))
}

/// `K` of an orientation as a verdict input, for bounds stated about a
/// specific orientation's average.
pub fn orientation_average(o: &crate::graph::Orientation) -> Rational {
    let n = o.graph().n() as u64;
    Rational::ratio(total_connectivity(o), n * (n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn formula_values() {
        let p = |n| BoundParams::order(n);
        let odd = BoundParams {
            r: Some(3),
            ..p(14)
        };
        assert_eq!(eval_bound(BoundId::OddRegularUpper, &odd).unwrap(), Rational::new(33, 26));
        assert_eq!(eval_bound(BoundId::Min2connUpper, &p(9)).unwrap(), Rational::new(9, 8));
        let inf = BoundParams {
            kbm: Some(Rational::new(4, 3)),
            ..p(4)
        };
        assert_eq!(eval_bound(BoundId::InflationFormula, &inf).unwrap(), Rational::new(13, 11));
        assert_eq!(eval_bound(BoundId::TwoTreeLower, &p(4)).unwrap(), Rational::new(13, 12));
        assert_eq!(eval_bound(BoundId::MopAverage, &p(6)).unwrap(), Rational::new(11, 5));
        assert_eq!(eval_bound(BoundId::StarFormula, &p(5)).unwrap(), Rational::new(2, 5));
        let snake = BoundParams {
            k: Some(3),
            ..Default::default()
        };
        assert_eq!(eval_bound(BoundId::SnakeValue, &snake).unwrap(), Rational::new(6, 5));
        let sub = BoundParams {
            m: Some(6),
            total: Some(18),
            ..p(4)
        };
        assert_eq!(eval_bound(BoundId::SubdivisionIdentity, &sub).unwrap(), Rational::from_integer(96));
    }

    #[test]
    fn parameter_errors() {
        let even = BoundParams {
            r: Some(4),
            ..BoundParams::order(10)
        };
        assert!(eval_bound(BoundId::OddRegularUpper, &even).is_err());
        assert!(eval_bound(BoundId::GeneralUpper, &BoundParams::default()).is_err());
        assert!(eval_bound(BoundId::Min2connUpper, &BoundParams::order(2)).is_err());
    }

    #[test]
    fn catalog_consistency() {
        for n in 4..=100 {
            let p = BoundParams::order(n);
            assert!(eval_bound(BoundId::TwoTreeLower, &p).unwrap() <= eval_bound(BoundId::MopUpper, &p).unwrap());
        }
    }

    #[test]
    fn names_round_trip() {
        for id in BoundId::ALL {
            assert_eq!(id.name().parse::<BoundId>().unwrap(), id);
            assert_eq!(serde_json::to_value(id).unwrap(), serde_json::json!(id.name()));
        }
    }

    #[test]
    fn verdicts() {
        let opts = SearchOptions::default();
        let v = verify_graph(BoundId::OddRegularUpper, &mobius_ladder(8).unwrap(), &opts).unwrap();
        assert!(v.holds && v.tight);
        assert_eq!(v.source, ValueSource::Certified);
        let v = verify_graph(BoundId::GeneralUpper, &complete(5).unwrap(), &opts).unwrap();
        assert!(v.holds && v.tight);
        let v = verify_graph(BoundId::MopUpper, &fan(6).unwrap(), &opts).unwrap();
        assert!(v.holds && !v.tight);
        let v = verify_graph(BoundId::Min2connRatioLower, &cycle(6).unwrap(), &opts).unwrap();
        assert!(v.holds && !v.tight);
        assert!(matches!(
            verify_graph(BoundId::TreeUpper, &cycle(4).unwrap(), &opts),
            Err(Error::Precondition(_))
        ));
        let s = serde_json::to_value(&v).unwrap();
        assert_eq!(s["relation"], ">");
        assert_eq!(s["bound_id"], "min2conn_ratio_lower");
    }
}
