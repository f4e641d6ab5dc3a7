//! Algebraic fibring: Σ¹ membership for characters of PSA(A_Γ) and
//! PSO(A_Γ) via p-sets and δ-p-sets, the abelianised presentation of Q, and
//! the combined verdicts for A_Γ, PSA, PSO and Out.

use num_bigint::BigInt;

use crate::conjugations::{self, partial_conjugations, PartialConjugation};
use crate::domination::DominationStructure;
use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::linalg::{self, SparseMatrix};
use crate::{l2, theta, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GroupTarget {
    Psa,
    Pso,
}

impl GroupTarget {
    pub fn tag(&self) -> &'static str {
        match self {
            GroupTarget::Psa => "PSA",
            GroupTarget::Pso => "PSO",
        }
    }
}

/// A homomorphism to ℤ, given by its values on the partial conjugations in
/// the order of [`partial_conjugations`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub target: GroupTarget,
    pub values: Vec<i64>,
}

impl Character {
    pub fn negated(&self) -> Self {
        Self {
            target: self.target,
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&i| self.values[i] != 0)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    PSet,
    DeltaPSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibreAnswer {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Character(Character),
    /// The character sending every standard generator of A_Θ to 1.
    ThetaAllOnes,
    /// The character sending every standard generator of A_Γ to 1.
    AllOnes,
    /// The map Q → ℤ sending `E_{u,v}` to 1 and the other generators to 0.
    QElementary {
        u: usize,
        v: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreVerdict {
    pub answer: FibreAnswer,
    pub reason: &'static str,
    pub witness: Option<Witness>,
}

impl FibreVerdict {
    fn yes(reason: &'static str, witness: Option<Witness>) -> Self {
        Self {
            answer: FibreAnswer::Yes,
            reason,
            witness,
        }
    }

    fn no(reason: &'static str) -> Self {
        Self {
            answer: FibreAnswer::No,
            reason,
            witness: None,
        }
    }
}

pub fn validate_character(g: &SimplicialGraph, chi: &Character) -> Result<bool> {
    let pcs = partial_conjugations(g);
    if chi.values.len() != pcs.len() {
        return Err(Error::UnknownConjugation {
            expected: pcs.len(),
            actual: chi.values.len(),
        });
    }
    Ok(match chi.target {
        GroupTarget::Psa => true,
        GroupTarget::Pso => vertex_sums(g, &pcs, &chi.values).iter().all(|&s| s == 0),
    })
}

/// `χ(ι_v)`, the sum of the values at each vertex.
fn vertex_sums(g: &SimplicialGraph, pcs: &[PartialConjugation], values: &[i64]) -> Vec<i64> {
    let mut sums = vec![0; g.vertex_count()];
    for (p, v) in pcs.iter().zip(values) {
        sums[p.actor] += v;
    }
    sums
}

/// Whether the partition clause holds for `a` on one side and `b` on the other.
fn compatible(a: &PartialConjugation, b: &PartialConjugation, kind: SetKind) -> bool {
    let forward = b.component.contains(a.actor);
    let backward = a.component.contains(b.actor);
    match kind {
        SetKind::PSet => forward && backward,
        SetKind::DeltaPSet => forward || backward || a.component == b.component,
    }
}

fn counting_clause(
    g: &SimplicialGraph,
    pcs: &[PartialConjugation],
    set: &[usize],
    kind: SetKind,
) -> bool {
    let mut count = vec![0usize; g.vertex_count()];
    for &i in set {
        count[pcs[i].actor] += 1;
    }
    match kind {
        SetKind::PSet => count.iter().all(|&c| c <= 1),
        SetKind::DeltaPSet => count.iter().all(|&c| c == 0 || c == 2),
    }
}

/// Elements that violate the clause must share a side, so a valid
/// nontrivial bipartition exists exactly when these forced links leave the
/// set disconnected.
fn partition_exists(pcs: &[PartialConjugation], set: &[usize], kind: SetKind) -> bool {
    if set.len() < 2 {
        return false;
    }
    let mut seen = vec![false; set.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for y in 0..set.len() {
            if !seen[y] && !compatible(&pcs[set[x]], &pcs[set[y]], kind) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().any(|s| !s)
}

/// Whether the set of partial conjugations (indices into
/// [`partial_conjugations`]) is a p-set or δ-p-set.
pub fn classify_set(g: &SimplicialGraph, set: &[usize], kind: SetKind) -> bool {
    let pcs = partial_conjugations(g);
    counting_clause(g, &pcs, set, kind) && partition_exists(&pcs, set, kind)
}

/// Whether `set` is contained in some p-set (or δ-p-set).
pub fn support_extends(
    g: &SimplicialGraph,
    set: &[usize],
    kind: SetKind,
    limits: &Limits,
) -> Result<bool> {
    let pcs = partial_conjugations(g);
    if pcs.len() > limits.conjugations {
        return Err(Error::CapExceeded {
            what: "partial conjugations in a p-set search",
            limit: limits.conjugations,
            actual: pcs.len(),
        });
    }
    let mut chosen = vec![false; pcs.len()];
    for &i in set {
        chosen[i] = true;
    }
    // Per-vertex options allowed by the counting clause.
    let mut options: Vec<Vec<Vec<usize>>> = Vec::new();
    for v in 0..g.vertex_count() {
        let at_v: Vec<usize> = (0..pcs.len()).filter(|&i| pcs[i].actor == v).collect();
        let fixed: Vec<usize> = at_v.iter().copied().filter(|&i| chosen[i]).collect();
        let free: Vec<usize> = at_v.iter().copied().filter(|&i| !chosen[i]).collect();
        let opts: Vec<Vec<usize>> = match (kind, fixed.len()) {
            (SetKind::PSet, 0) => std::iter::once(Vec::new())
                .chain(free.iter().map(|&i| vec![i]))
                .collect(),
            (SetKind::PSet, 1) => vec![Vec::new()],
            (SetKind::DeltaPSet, 0) => std::iter::once(Vec::new())
                .chain(
                    (0..free.len())
                        .flat_map(|a| (a + 1..free.len()).map(move |b| (a, b)))
                        .map(|(a, b)| vec![free[a], free[b]]),
                )
                .collect(),
            (SetKind::DeltaPSet, 1) => free.iter().map(|&i| vec![i]).collect(),
            (SetKind::DeltaPSet, 2) => vec![Vec::new()],
            _ => return Ok(false),
        };
        if opts.is_empty() {
            return Ok(false);
        }
        options.push(opts);
    }
    let mut current: Vec<usize> = set.to_vec();
    Ok(search_extensions(&pcs, &options, 0, &mut current, kind))
}

fn search_extensions(
    pcs: &[PartialConjugation],
    options: &[Vec<Vec<usize>>],
    v: usize,
    current: &mut Vec<usize>,
    kind: SetKind,
) -> bool {
    if v == options.len() {
        return partition_exists(pcs, current, kind);
    }
    for opt in &options[v] {
        let before = current.len();
        current.extend_from_slice(opt);
        let found = search_extensions(pcs, options, v + 1, current, kind);
        current.truncate(before);
        if found {
            return true;
        }
    }
    false
}

/// Whether `[χ] ∈ Σ¹`.
pub fn sigma1_contains(g: &SimplicialGraph, chi: &Character, limits: &Limits) -> Result<bool> {
    if !validate_character(g, chi)? {
        return Err(Error::InvalidCharacter(
            "PSO characters must sum to zero at every vertex".into(),
        ));
    }
    let support = chi.support();
    if support.is_empty() {
        return Err(Error::InvalidCharacter("the zero character".into()));
    }
    let kind = match chi.target {
        GroupTarget::Pso => SetKind::DeltaPSet,
        GroupTarget::Psa => {
            let pcs = partial_conjugations(g);
            if vertex_sums(g, &pcs, &chi.values).iter().any(|&s| s != 0) {
                SetKind::PSet
            } else {
                SetKind::DeltaPSet
            }
        }
    };
    Ok(!support_extends(g, &support, kind, limits)?)
}

/// Γ with its central vertices removed.
fn decentred(g: &SimplicialGraph) -> SimplicialGraph {
    g.induced(&g.vertices().difference(&g.centre_vertices()))
}

pub fn fibration_witness(
    g: &SimplicialGraph,
    target: GroupTarget,
    limits: &Limits,
) -> Result<Witness> {
    let pcs = partial_conjugations(g);
    let n = g.vertex_count();
    let comps: Vec<usize> = (0..n)
        .map(|v| pcs.iter().filter(|p| p.actor == v).count())
        .collect();
    let index = |v: usize, k: usize| {
        pcs.iter()
            .enumerate()
            .filter(|(_, p)| p.actor == v)
            .nth(k)
            .map(|(i, _)| i)
            .expect("component exists")
    };
    let witness = match target {
        GroupTarget::Psa => {
            if pcs.is_empty() {
                return Err(Error::NoWitnessApplicable);
            }
            let mut values = vec![0i64; pcs.len()];
            match (0..n).find(|&v| comps[v] >= 2) {
                Some(v) => {
                    let w = (0..n)
                        .find(|&w| w != v && comps[w] > 0)
                        .ok_or(Error::NoWitnessApplicable)?;
                    values[index(v, 0)] = 1;
                    values[index(v, 1)] = -1;
                    for k in 0..comps[w] {
                        values[index(w, k)] = 1;
                    }
                }
                None => values.iter_mut().for_each(|x| *x = 1),
            }
            Witness::Character(Character { target, values })
        }
        GroupTarget::Pso => match (0..n).find(|&v| comps[v] >= 3) {
            Some(v) => {
                let mut values = vec![0i64; pcs.len()];
                values[index(v, 0)] = 1;
                values[index(v, 1)] = 1;
                values[index(v, 2)] = -2;
                Witness::Character(Character { target, values })
            }
            None => {
                let t = theta::pso_theta(g, None);
                if t.applicable && !t.theta.is_empty() && t.theta.is_connected() {
                    Witness::ThetaAllOnes
                } else {
                    return Err(Error::NoWitnessApplicable);
                }
            }
        },
    };
    if let Witness::Character(chi) = &witness {
        if !(sigma1_contains(g, chi, limits)? && sigma1_contains(g, &chi.negated(), limits)?) {
            return Err(Error::NoWitnessApplicable);
        }
    }
    Ok(witness)
}

pub fn raag_virtually_fibres(g: &SimplicialGraph) -> Result<FibreVerdict> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(if g.is_connected() {
        FibreVerdict::yes("connected_graph", Some(Witness::AllOnes))
    } else {
        FibreVerdict::no("disconnected_graph")
    })
}

pub fn psa_fibres(g: &SimplicialGraph, limits: &Limits) -> Result<FibreVerdict> {
    let core = decentred(g);
    let shape = core.disjoint_clique_sizes();
    if core.is_empty() || shape.as_ref().is_some_and(|s| s.len() == 2) {
        return Ok(FibreVerdict::no("abelian_or_two_cliques"));
    }
    let w = fibration_witness(g, GroupTarget::Psa, limits)?;
    Ok(FibreVerdict::yes("sigma1_witness", Some(w)))
}

pub fn pso_fibres(g: &SimplicialGraph, limits: &Limits) -> Result<FibreVerdict> {
    if conjugations::max_components(g) >= 3 {
        let w = fibration_witness(g, GroupTarget::Pso, limits)?;
        return Ok(FibreVerdict::yes("many_components", Some(w)));
    }
    let t = theta::pso_theta(g, None);
    if t.theta.is_empty() {
        return Ok(FibreVerdict::no("trivial_group"));
    }
    Ok(if t.theta.is_connected() {
        FibreVerdict::yes("theta_connected", Some(Witness::ThetaAllOnes))
    } else {
        FibreVerdict::no("theta_disconnected")
    })
}

/// Generators `E_{i,j}` of Q (one per transvection `(v_i, v_j)`) and the
/// rows of the abelianised relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPresentation {
    pub generators: Vec<(usize, usize)>,
    pub relations: Vec<Vec<i64>>,
}

pub fn q_presentation(ds: &DominationStructure) -> QPresentation {
    let generators = ds.transvections();
    let pos = |a: usize, b: usize| generators.iter().position(|&p| p == (a, b));
    let m = generators.len();
    let mut relations = Vec::new();
    let mut row = |entries: &[(usize, i64)]| {
        let mut r = vec![0i64; m];
        for &(k, x) in entries {
            r[k] += x;
        }
        if r.iter().any(|&x| x != 0) {
            relations.push(r);
        }
    };
    for &(i, j) in &generators {
        // [E_ij, E_jk] = E_ik kills E_ik in the abelianisation.
        for &(j2, k) in &generators {
            if j2 == j && k != i {
                row(&[(pos(i, k).expect("domination is transitive"), 1)]);
            }
        }
        if let Some(ji) = pos(j, i) {
            let ij = pos(i, j).expect("generator");
            row(&[(ij, 8), (ji, -4)]);
            if ds.classes()[ds.class_of(i)].len() == 2 {
                row(&[(ij, 1), (ji, 1)]);
            }
        }
    }
    QPresentation {
        generators,
        relations,
    }
}

/// A finitely generated abelian group `ℤ^free_rank ⊕ ⊕ ℤ/t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn is_infinite(&self) -> bool {
        self.free_rank > 0
    }
}

pub fn q_abelianization(qp: &QPresentation) -> AbelianGroup {
    let m = SparseMatrix::from_dense(&qp.relations);
    let m = SparseMatrix {
        ncols: qp.generators.len(),
        ..m
    };
    let snf = linalg::smith_normal_form(&m);
    AbelianGroup {
        free_rank: qp.generators.len() - snf.rank,
        torsion: snf.torsion(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QFibres {
    pub fibres: bool,
    pub virtually_fibres: bool,
}

pub fn q_fibres(ds: &DominationStructure) -> QFibres {
    let p = ds.properties();
    QFibres {
        fibres: p.p2(),
        virtually_fibres: p.p2() || p.p1_count() >= 2,
    }
}

pub fn out_virtually_fibres(g: &SimplicialGraph, limits: &Limits) -> Result<FibreVerdict> {
    if g.is_empty() || l2::finiteness(g).out_finite {
        return Ok(FibreVerdict::no("finite_group"));
    }
    let ds = DominationStructure::new(g);
    let props = ds.properties();
    if let Some(&(u, v)) = props.p2_witnesses.first() {
        return Ok(FibreVerdict::yes(
            "q_fibres",
            Some(Witness::QElementary { u, v }),
        ));
    }
    if props.p1_count() >= 2 {
        return Ok(FibreVerdict::yes("q_virtually_fibres", None));
    }
    if ds.transvections().is_empty() {
        let mut v = pso_fibres(g, limits)?;
        v.reason = match v.answer {
            FibreAnswer::Yes => "transvection_free_pso_fibres",
            _ => "transvection_free_pso_not_fibred",
        };
        return Ok(v);
    }
    if !conjugations::has_non_inner_pc(g) {
        return Ok(FibreVerdict::no("no_non_inner_conjugations"));
    }
    if l2::betti1_out(g, limits).is_positive() {
        return Ok(FibreVerdict::no("positive_first_betti"));
    }
    Ok(FibreVerdict {
        answer: FibreAnswer::Unknown,
        reason: "not_determined",
        witness: None,
    })
}

/// Which of the indicability conditions `1`, `2` and `3'` hold. The relation
/// `u ⪇ v` is read as `u ≤ v` with `u ≠ v`.
pub fn indicability_conditions(g: &SimplicialGraph) -> Vec<&'static str> {
    let ds = DominationStructure::new(g);
    let n = g.vertex_count();
    let below = |u: usize, v: usize| u != v && ds.leq(u, v);
    let mut out = Vec::new();
    let c1 =
        (0..n).any(|u| (0..n).any(|v| below(u, v) && !(0..n).any(|w| below(u, w) && below(w, v))));
    if c1 {
        out.push("1");
    }
    let minimal = |w: usize| !(0..n).any(|v| below(v, w));
    if (0..n).any(minimal) {
        out.push("2");
    }
    if (0..n).any(|w| minimal(w) && g.star_complement_components(w).len() >= 2) {
        out.push("3'");
    }
    out
}
