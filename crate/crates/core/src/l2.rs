//! Decisions and exact values for ℓ²-Betti numbers of Aut(A_Γ), Out(A_Γ) and
//! the transvection quotient Q.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::conjugations;
use crate::domination::DominationStructure;
use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, VertexSet};
use crate::homology;
use crate::theta;
use crate::{automorphism, Limits};

/// Why a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Reason {
    /// Values of GL_k(ℤ) for abelian A_Γ.
    GlTable,
    /// The group is finite.
    FiniteGroup,
    /// β₀ of an infinite group.
    InfiniteGroup,
    /// Aut(A_Γ) with A_Γ ≇ ℤ²: β₁ vanishes.
    AutFirstBetti,
    /// Both transvections and non-inner partial conjugations exist.
    MixedGenerators,
    /// The only transvections are the two inside one two-element class.
    SingleTwoClass,
    /// Transvections exist but not in the single two-element pattern.
    TransvectionPattern,
    /// PSO is a RAAG A_Θ; β₁ counts the components of Θ.
    ThetaComponents,
    /// Some complement of a star has at least three components.
    ManyComponents,
    /// Disconnected Γ with A_Γ not free.
    DisconnectedClassification,
    /// Facts known about Out(F_n), n ≥ 3.
    FreeGroupFacts,
    /// ℓ²-Betti numbers of Q from the shape of Λ_Γ.
    QBettiTable,
    /// PSO is a RAAG A_Θ, finite index in Out.
    ThetaRaag,
    /// One of the graph-checkable sufficient conditions for vanishing.
    VanishingCondition(u8),
    /// No available rule determines the value.
    NotDetermined,
    /// The value is positive but the index could not be computed within caps.
    IndexCapExceeded,
}

impl Reason {
    pub fn tag(&self) -> String {
        match self {
            Reason::GlTable => "gl_table".into(),
            Reason::FiniteGroup => "finite_group".into(),
            Reason::InfiniteGroup => "infinite_group".into(),
            Reason::AutFirstBetti => "aut_first_betti".into(),
            Reason::MixedGenerators => "mixed_generators".into(),
            Reason::SingleTwoClass => "single_two_class".into(),
            Reason::TransvectionPattern => "transvection_pattern".into(),
            Reason::ThetaComponents => "theta_components".into(),
            Reason::ManyComponents => "many_components".into(),
            Reason::DisconnectedClassification => "disconnected_classification".into(),
            Reason::FreeGroupFacts => "free_group_facts".into(),
            Reason::QBettiTable => "q_betti_table".into(),
            Reason::ThetaRaag => "theta_raag".into(),
            Reason::VanishingCondition(k) => format!("vanishing_condition_{k}"),
            Reason::NotDetermined => "not_determined".into(),
            Reason::IndexCapExceeded => "index_cap_exceeded".into(),
        }
    }
}

/// Assumptions an exact value may depend on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Assumption {
    /// The finite-index subgroup used has index `2^|V| · |Aut(Γ)|` in Out(A_Γ).
    IndexRule,
}

impl Assumption {
    pub fn tag(&self) -> &'static str {
        match self {
            Assumption::IndexRule => "paper_index_rule",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum L2Status {
    Zero,
    PositiveExact {
        value: BigRational,
        assumptions: Vec<Assumption>,
    },
    PositiveOnly,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L2Verdict {
    pub status: L2Status,
    pub reason: Reason,
}

impl L2Verdict {
    pub fn zero(reason: Reason) -> Self {
        Self {
            status: L2Status::Zero,
            reason,
        }
    }

    pub fn unknown() -> Self {
        Self {
            status: L2Status::Unknown,
            reason: Reason::NotDetermined,
        }
    }

    pub fn positive_only(reason: Reason) -> Self {
        Self {
            status: L2Status::PositiveOnly,
            reason,
        }
    }

    /// Zero when `value` is zero, otherwise an exact positive value.
    pub fn exact(value: BigRational, assumptions: Vec<Assumption>, reason: Reason) -> Self {
        debug_assert!(!value.is_negative());
        if value.is_zero() {
            return Self::zero(reason);
        }
        Self {
            status: L2Status::PositiveExact { value, assumptions },
            reason,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.status == L2Status::Zero
    }

    pub fn is_positive(&self) -> bool {
        matches!(
            self.status,
            L2Status::PositiveExact { .. } | L2Status::PositiveOnly
        )
    }

    pub fn is_unknown(&self) -> bool {
        self.status == L2Status::Unknown
    }

    pub fn value(&self) -> Option<&BigRational> {
        match &self.status {
            L2Status::PositiveExact { value, .. } => Some(value),
            _ => None,
        }
    }
}

impl fmt::Display for L2Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            L2Status::Zero => write!(f, "0"),
            L2Status::PositiveExact { value, assumptions } => {
                write!(f, "{value}")?;
                for a in assumptions {
                    write!(f, " [{}]", a.tag())?;
                }
                Ok(())
            }
            L2Status::PositiveOnly => write!(f, "> 0"),
            L2Status::Unknown => write!(f, "unknown"),
        }?;
        write!(f, " ({})", self.reason.tag())
    }
}

/// Verdicts for degrees `0..degrees.len()` and one verdict for every higher
/// degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfile {
    pub degrees: Vec<L2Verdict>,
    pub rest: L2Verdict,
}

impl BettiProfile {
    pub fn degree(&self, k: usize) -> &L2Verdict {
        self.degrees.get(k).unwrap_or(&self.rest)
    }

    pub fn all_zero(reason: Reason) -> Self {
        Self {
            degrees: Vec::new(),
            rest: L2Verdict::zero(reason),
        }
    }

    /// Exact values in low degrees, zero above.
    fn from_values(values: &[BigRational], assumptions: &[Assumption], reason: Reason) -> Self {
        Self {
            degrees: values
                .iter()
                .map(|v| L2Verdict::exact(v.clone(), assumptions.to_vec(), reason))
                .collect(),
            rest: L2Verdict::zero(reason),
        }
    }

    fn scaled(values: &[BigRational], index: &Result<BigInt>, reason: Reason) -> Self {
        match index {
            Ok(idx) => {
                let scaled: Vec<BigRational> = values
                    .iter()
                    .map(|v| v / BigRational::from_integer(idx.clone()))
                    .collect();
                Self::from_values(&scaled, &[Assumption::IndexRule], reason)
            }
            Err(_) => Self {
                degrees: values
                    .iter()
                    .map(|v| {
                        if v.is_zero() {
                            L2Verdict::zero(reason)
                        } else {
                            L2Verdict::positive_only(Reason::IndexCapExceeded)
                        }
                    })
                    .collect(),
                rest: L2Verdict::zero(reason),
            },
        }
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// ℓ²-Betti numbers of GL_k(ℤ), listed up to the last nonzero degree.
pub fn gl_betti(k: usize) -> Vec<BigRational> {
    match k {
        0 => vec![BigRational::one()],
        1 => vec![rat(1, 2)],
        2 => vec![BigRational::zero(), rat(1, 24)],
        _ => vec![BigRational::zero()],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Finiteness {
    pub aut_finite: bool,
    pub out_finite: bool,
}

pub fn finiteness(g: &SimplicialGraph) -> Finiteness {
    let ds = DominationStructure::new(g);
    Finiteness {
        aut_finite: g.vertex_count() <= 1,
        out_finite: ds.transvections().is_empty() && !conjugations::has_non_inner_pc(g),
    }
}

pub fn betti1_aut(g: &SimplicialGraph) -> L2Verdict {
    if g.vertex_count() == 2 && g.is_complete() {
        L2Verdict::exact(rat(1, 24), Vec::new(), Reason::GlTable)
    } else {
        L2Verdict::zero(Reason::AutFirstBetti)
    }
}

/// `2^|V| · |Aut(Γ)|`, the index used to scale values from SOut⁰ or PSO to Out.
pub fn paper_index(g: &SimplicialGraph, limits: &Limits) -> Result<BigInt> {
    if g.is_complete() {
        return Err(Error::Abelian);
    }
    let aut = automorphism::automorphism_count(g, limits)?;
    Ok(BigInt::from(aut) << g.vertex_count())
}

/// The structure of Λ_Γ relevant to Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QStructure {
    pub class_sizes: Vec<usize>,
    pub non_loop_edges: Vec<(usize, usize)>,
}

pub fn q_structure(ds: &DominationStructure) -> QStructure {
    QStructure {
        class_sizes: ds.class_sizes(),
        non_loop_edges: ds.lambda_non_loop_edges(),
    }
}

pub fn q_betti(qs: &QStructure) -> BettiProfile {
    let reason = Reason::QBettiTable;
    if !qs.non_loop_edges.is_empty() || qs.class_sizes.iter().any(|&s| s >= 3) {
        return BettiProfile::all_zero(reason);
    }
    // Q is a product of n copies of SL_2(ℤ), each with β₁ = 1/12.
    let n = qs.class_sizes.iter().filter(|&&s| s == 2).count();
    let mut values = vec![BigRational::zero(); n + 1];
    values[n] = BigRational::one() / BigRational::from_integer(BigInt::from(12).pow(n as u32));
    BettiProfile::from_values(&values, &[], reason)
}

/// Out(A_Γ) for disconnected Γ.
pub fn out_betti_disconnected(g: &SimplicialGraph, limits: &Limits) -> Result<BettiProfile> {
    if g.components(&g.vertices()).len() < 2 {
        return Err(Error::NotDisconnected);
    }
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        if n == 2 {
            return Ok(BettiProfile::from_values(
                &gl_betti(2),
                &[],
                Reason::GlTable,
            ));
        }
        let r = Reason::FreeGroupFacts;
        let top = 2 * n - 3;
        let degrees = (0..=top)
            .map(|k| match k {
                0 | 1 => L2Verdict::zero(r),
                2 if n >= 5 => L2Verdict::zero(r),
                k if k == top => L2Verdict::positive_only(r),
                _ => L2Verdict::unknown(),
            })
            .collect();
        return Ok(BettiProfile {
            degrees,
            rest: L2Verdict::unknown(),
        });
    }
    let r = Reason::DisconnectedClassification;
    if g.disjoint_clique_sizes() == Some(vec![2, 2]) {
        let q = q_betti(&q_structure(&DominationStructure::new(g)));
        let values: Vec<BigRational> = (0..=2)
            .map(|k| q.degree(k).value().cloned().unwrap_or_default())
            .collect();
        let mut profile = BettiProfile::scaled(&values, &paper_index(g, limits), r);
        profile.degrees.iter_mut().for_each(|v| v.reason = r);
        return Ok(profile);
    }
    Ok(BettiProfile::all_zero(r))
}

pub fn betti1_out(g: &SimplicialGraph, limits: &Limits) -> L2Verdict {
    if g.is_complete() {
        let table = gl_betti(g.vertex_count());
        let v = table.get(1).cloned().unwrap_or_default();
        return L2Verdict::exact(v, Vec::new(), Reason::GlTable);
    }
    if !g.is_connected() {
        return out_betti_disconnected(g, limits)
            .expect("graph is disconnected")
            .degree(1)
            .clone();
    }
    let ds = DominationStructure::new(g);
    let transvections = ds.transvections();
    let non_inner = conjugations::has_non_inner_pc(g);
    if transvections.is_empty() && !non_inner {
        return L2Verdict::zero(Reason::FiniteGroup);
    }
    if !transvections.is_empty() && non_inner {
        return L2Verdict::zero(Reason::MixedGenerators);
    }
    let scaled = |numerator: BigRational, reason: Reason| match paper_index(g, limits) {
        Ok(idx) => L2Verdict::exact(
            numerator / BigRational::from_integer(idx),
            vec![Assumption::IndexRule],
            reason,
        ),
        Err(_) => L2Verdict::positive_only(Reason::IndexCapExceeded),
    };
    if !transvections.is_empty() {
        let single_pair = transvections.len() == 2 && {
            let (u, v) = transvections[0];
            transvections[1] == (v, u) && ds.classes()[ds.class_of(u)].len() == 2
        };
        return if single_pair {
            scaled(rat(1, 12), Reason::SingleTwoClass)
        } else {
            L2Verdict::zero(Reason::TransvectionPattern)
        };
    }
    if conjugations::max_components(g) >= 3 {
        return L2Verdict::zero(Reason::ManyComponents);
    }
    let t = theta::pso_theta(g, None);
    let comps = t.theta.components(&t.theta.vertices()).len();
    if comps >= 2 {
        scaled(
            BigRational::from_integer((comps - 1).into()),
            Reason::ThetaComponents,
        )
    } else {
        L2Verdict::zero(Reason::ThetaComponents)
    }
}

/// Graph-checkable sufficient conditions (numbered 1 to 6) for all
/// ℓ²-Betti numbers of Out(A_Γ) to vanish. Condition 6 is checked only in
/// its leaf form.
pub fn higher_vanishing_conditions(g: &SimplicialGraph) -> Vec<u8> {
    let mut out = Vec::new();
    if g.is_empty() {
        return out;
    }
    let complete = g.is_complete();
    if complete && g.vertex_count() >= 3 {
        out.push(1);
    }
    if !complete && !g.centre_vertices().is_empty() {
        out.push(2);
    }
    let ds = DominationStructure::new(g);
    let non_inner = conjugations::has_non_inner_pc(g);
    if !non_inner
        && (!ds.lambda_non_loop_edges().is_empty() || ds.class_sizes().iter().any(|&s| s >= 3))
    {
        out.push(3);
    }
    if non_inner && conjugations::sil_pairs(g).is_empty() {
        out.push(4);
    }
    let connected = g.is_connected();
    if connected && !complete && clique_links_discrete_or_connected(g) {
        out.push(5);
    }
    if connected && !complete && (0..g.vertex_count()).any(|v| g.degree(v) == 1) {
        out.push(6);
    }
    out
}

/// Every nonempty clique with nonempty link has a link that spans either no
/// edges or a connected subgraph.
fn clique_links_discrete_or_connected(g: &SimplicialGraph) -> bool {
    fn walk(g: &SimplicialGraph, link: &VertexSet, last: Option<usize>) -> bool {
        for v in link.iter().filter(|&v| last.is_none_or(|l| v > l)) {
            let next = link.intersection(g.link(v));
            // `next` is the link of the clique extended by v.
            if !next.is_empty() {
                let discrete = next.iter().all(|a| g.link(a).is_disjoint(&next));
                let connected = g.components(&next).len() == 1;
                if !discrete && !connected {
                    return false;
                }
            }
            if !walk(g, &next, Some(v)) {
                return false;
            }
        }
        true
    }
    walk(g, &g.vertices(), None)
}

/// Everything known about the ℓ²-Betti numbers of Out(A_Γ).
pub fn out_profile(g: &SimplicialGraph, limits: &Limits) -> Result<BettiProfile> {
    if g.is_empty() {
        return Ok(BettiProfile {
            degrees: vec![L2Verdict::exact(
                BigRational::one(),
                Vec::new(),
                Reason::FiniteGroup,
            )],
            rest: L2Verdict::zero(Reason::FiniteGroup),
        });
    }
    if g.is_complete() {
        return Ok(BettiProfile::from_values(
            &gl_betti(g.vertex_count()),
            &[],
            Reason::GlTable,
        ));
    }
    if !g.is_connected() {
        return out_betti_disconnected(g, limits);
    }
    let fin = finiteness(g);
    if fin.out_finite {
        return Ok(BettiProfile {
            degrees: vec![L2Verdict::positive_only(Reason::FiniteGroup)],
            rest: L2Verdict::zero(Reason::FiniteGroup),
        });
    }
    let ds = DominationStructure::new(g);
    let non_inner = conjugations::has_non_inner_pc(g);
    if !non_inner {
        // Q has finite index in Out.
        let q = q_betti(&q_structure(&ds));
        let values: Vec<BigRational> = (0..=q.degrees.len())
            .map(|k| q.degree(k).value().cloned().unwrap_or_default())
            .collect();
        return Ok(BettiProfile::scaled(
            &values,
            &paper_index(g, limits),
            Reason::QBettiTable,
        ));
    }
    if ds.transvections().is_empty() {
        let t = theta::pso_theta(g, None);
        if t.applicable {
            let values = homology::l2_betti_raag(&t.theta, limits)?;
            return Ok(BettiProfile::scaled(
                &values,
                &paper_index(g, limits),
                Reason::ThetaRaag,
            ));
        }
    }
    // Condition 5 also holds for graphs whose Out has a nonzero ℓ²-Betti
    // number (the 4-cycle, example_5_3a), so it is reported but not used.
    if let Some(&c) = higher_vanishing_conditions(g).iter().find(|&&c| c != 5) {
        return Ok(BettiProfile::all_zero(Reason::VanishingCondition(c)));
    }
    Ok(BettiProfile {
        degrees: vec![
            L2Verdict::zero(Reason::InfiniteGroup),
            betti1_out(g, limits),
        ],
        rest: L2Verdict::unknown(),
    })
}
