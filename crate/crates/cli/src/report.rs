//! The report model. Every section is a `serde_json::Value`; maps are
//! key-sorted, so serialization is canonical.

use std::collections::BTreeSet;

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use raag_core::conjugations::{self, partial_conjugations, support_graphs};
use raag_core::fibring::{
    self, indicability_conditions, q_abelianization, q_fibres, q_presentation, FibreVerdict,
    Witness,
};
use raag_core::homology::{bb_finiteness, l2_betti_raag, FlagComplex};
use raag_core::l2::{self, Assumption, L2Status};
use raag_core::theta::{psa_theta, pso_theta};
use raag_core::{
    automorphism_count, DominationStructure, Error, FibreAnswer, HomologyMode, L2Verdict, Limits,
    SimplicialGraph, ThetaResult, VertexSet,
};

pub const SECTIONS: &[&str] = &[
    "graph",
    "domination",
    "conjugations",
    "theta",
    "flag",
    "l2",
    "fibring",
];

pub fn rational(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

fn set(g: &SimplicialGraph, s: &VertexSet) -> Value {
    json!(g.labels_of(s))
}

fn verdict(v: &L2Verdict, used: &mut BTreeSet<&'static str>) -> Value {
    let mut m = Map::new();
    let status = match &v.status {
        L2Status::Zero => "zero",
        L2Status::PositiveExact { value, assumptions } => {
            m.insert("value".into(), rational(value));
            let tags: Vec<&str> = assumptions.iter().map(Assumption::tag).collect();
            used.extend(tags.iter().copied());
            m.insert("assumptions".into(), json!(tags));
            "positive_exact"
        }
        L2Status::PositiveOnly => "positive",
        L2Status::Unknown => "unknown",
    };
    m.insert("status".into(), json!(status));
    m.insert("reason".into(), json!(v.reason.tag()));
    Value::Object(m)
}

fn answer(a: FibreAnswer) -> &'static str {
    match a {
        FibreAnswer::Yes => "yes",
        FibreAnswer::No => "no",
        FibreAnswer::Unknown => "unknown",
    }
}

fn witness(g: &SimplicialGraph, w: &Witness) -> Value {
    match w {
        Witness::Character(chi) => {
            let pcs = partial_conjugations(g);
            let values: Vec<Value> = pcs
                .iter()
                .zip(&chi.values)
                .filter(|(_, &x)| x != 0)
                .map(|(p, &x)| {
                    json!({
                        "vertex": g.label(p.actor),
                        "component": set(g, &p.component),
                        "value": x,
                    })
                })
                .collect();
            json!({"kind": "character", "target": chi.target.tag(), "values": values})
        }
        Witness::ThetaAllOnes => json!({"kind": "theta_all_ones"}),
        Witness::AllOnes => json!({"kind": "all_ones"}),
        Witness::QElementary { u, v } => {
            json!({"kind": "q_elementary", "pair": [g.label(*u), g.label(*v)]})
        }
    }
}

fn fibre(g: &SimplicialGraph, v: &FibreVerdict) -> Value {
    json!({
        "answer": answer(v.answer),
        "reason": v.reason,
        "witness": v.witness.as_ref().map(|w| witness(g, w)),
    })
}

fn graph_section(g: &SimplicialGraph) -> Value {
    json!({
        "vertices": g.labels(),
        "edges": g.edge_labels().into_iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        "connected": g.is_connected(),
        "components": g.components(&g.vertices()).iter().map(|c| set(g, c)).collect::<Vec<_>>(),
        "centre": set(g, &g.centre_vertices()),
    })
}

fn domination_section(g: &SimplicialGraph) -> Value {
    let ds = DominationStructure::new(g);
    let p = ds.properties();
    let pair = |&(a, b): &(usize, usize)| json!([g.label(a), g.label(b)]);
    json!({
        "classes": ds.classes().iter().map(|c| set(g, c)).collect::<Vec<_>>(),
        "lambda_edges": ds.lambda_non_loop_edges(),
        "lambda_loops": ds.lambda_loops(),
        "transvections": ds.transvections().iter().map(pair).collect::<Vec<_>>(),
        "properties": {
            "property_a": p.property_a,
            "p1_classes": p.p1_classes.iter().map(pair).collect::<Vec<_>>(),
            "p2_witnesses": p.p2_witnesses.iter().map(pair).collect::<Vec<_>>(),
        },
    })
}

fn conjugations_section(g: &SimplicialGraph) -> Value {
    let (supports, summary) = support_graphs(g);
    json!({
        "partial_conjugations": partial_conjugations(g).iter().map(|p| json!({
            "vertex": g.label(p.actor),
            "component": set(g, &p.component),
            "inner": p.inner,
        })).collect::<Vec<_>>(),
        "sils": conjugations::sil_pairs(g)
            .iter()
            .map(|&(a, b)| json!([g.label(a), g.label(b)]))
            .collect::<Vec<_>>(),
        "support_graphs": supports.iter().filter(|d| !d.components.is_empty()).map(|d| json!({
            "vertex": g.label(d.base),
            "nodes": d.components.iter().map(|c| set(g, c)).collect::<Vec<_>>(),
            "edges": d.edges,
            "forest": d.is_forest(),
        })).collect::<Vec<_>>(),
        "all_forests": summary.all_forests,
        "max_components": summary.max_components,
    })
}

fn theta_json(t: &ThetaResult) -> Value {
    json!({
        "applicable": t.applicable,
        "reason": t.reason,
        "vertices": t.theta.labels(),
        "edges": t.theta.edge_labels().into_iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        "components": t.theta.components(&t.theta.vertices()).len(),
    })
}

fn theta_section(g: &SimplicialGraph) -> Value {
    json!({"psa": theta_json(&psa_theta(g)), "pso": theta_json(&pso_theta(g, None))})
}

fn flag_section(g: &SimplicialGraph, limits: &Limits) -> Result<Value, Error> {
    let fc = FlagComplex::new(g, limits)?;
    let h = fc.reduced_homology(HomologyMode::Integral);
    let torsion: Vec<Vec<String>> = h
        .torsion
        .unwrap_or_default()
        .iter()
        .map(|t| t.iter().map(ToString::to_string).collect())
        .collect();
    let l2 = if g.is_empty() {
        Value::Null
    } else {
        json!(l2_betti_raag(g, limits)?
            .iter()
            .map(rational)
            .collect::<Vec<_>>())
    };
    let bb = bb_finiteness(g, limits)?;
    Ok(json!({
        "simplex_counts": fc.counts(),
        "reduced_betti": h.ranks,
        "torsion": torsion,
        "euler_characteristic": fc.euler_characteristic(),
        "raag_l2_betti": l2,
        "bestvina_brady": {
            "applicable": bb.applicable,
            "fp_level": bb.fp_level,
            "fp": bb.fp,
        },
    }))
}

fn l2_section(
    g: &SimplicialGraph,
    limits: &Limits,
    used: &mut BTreeSet<&'static str>,
) -> Result<Value, Error> {
    let profile = l2::out_profile(g, limits)?;
    let top = profile.degrees.len().max(2);
    let degrees: Vec<Value> = (0..top).map(|k| verdict(profile.degree(k), used)).collect();
    let index = match l2::paper_index(g, limits) {
        Ok(i) => json!(i.to_string()),
        Err(Error::Abelian) => Value::Null,
        Err(e) if e.is_cap() => Value::Null,
        Err(e) => return Err(e),
    };
    let fin = l2::finiteness(g);
    let ds = DominationStructure::new(g);
    let qs = l2::q_structure(&ds);
    let aut = if g.is_empty() {
        Value::Null
    } else {
        verdict(&l2::betti1_aut(g), used)
    };
    let out1 = if g.is_empty() {
        Value::Null
    } else {
        verdict(&l2::betti1_out(g, limits), used)
    };
    Ok(json!({
        "betti1_out": out1,
        "betti1_aut": aut,
        "out_profile": {"degrees": degrees, "above": verdict(&profile.rest, used)},
        "finiteness": {"aut_finite": fin.aut_finite, "out_finite": fin.out_finite},
        "paper_index": index,
        "automorphism_count": automorphism_count(g, limits).ok().map(|c| c.to_string()),
        "vanishing_conditions": l2::higher_vanishing_conditions(g),
        "q_structure": {"class_sizes": qs.class_sizes, "lambda_edges": qs.non_loop_edges},
    }))
}

fn fibring_section(g: &SimplicialGraph, limits: &Limits) -> Result<Value, Error> {
    let ds = DominationStructure::new(g);
    let ab = q_abelianization(&q_presentation(&ds));
    let qf = q_fibres(&ds);
    let capped = |r: Result<FibreVerdict, Error>| -> Result<Value, Error> {
        match r {
            Ok(v) => Ok(fibre(g, &v)),
            Err(e) if e.is_cap() => {
                Ok(json!({"answer": "unknown", "reason": "cap_exceeded", "witness": null}))
            }
            Err(e) => Err(e),
        }
    };
    Ok(json!({
        "raag": if g.is_empty() { Value::Null } else { capped(fibring::raag_virtually_fibres(g))? },
        "psa": capped(fibring::psa_fibres(g, limits))?,
        "pso": capped(fibring::pso_fibres(g, limits))?,
        "out": capped(fibring::out_virtually_fibres(g, limits))?,
        "q_abelianization": {
            "free_rank": ab.free_rank,
            "torsion": ab.torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
        },
        "q_fibres": {"fibres": qf.fibres, "virtually_fibres": qf.virtually_fibres},
        "indicability": indicability_conditions(g),
    }))
}

/// Builds the report for the requested sections, in canonical key order.
pub fn build(g: &SimplicialGraph, sections: &[String], limits: &Limits) -> Result<Value, Error> {
    let mut used = BTreeSet::new();
    let mut out = Map::new();
    for s in sections {
        let v = match s.as_str() {
            "graph" => graph_section(g),
            "domination" => domination_section(g),
            "conjugations" => conjugations_section(g),
            "theta" => theta_section(g),
            "flag" => flag_section(g, limits)?,
            "l2" => l2_section(g, limits, &mut used)?,
            "fibring" => fibring_section(g, limits)?,
            other => unreachable!("section `{other}` was validated"),
        };
        out.insert(s.clone(), v);
    }
    Ok(json!({
        "version": env!("CARGO_PKG_VERSION"),
        "input": {"vertices": g.vertex_count(), "edges": g.edge_count()},
        "assumptions": used.into_iter().collect::<Vec<_>>(),
        "sections": out,
    }))
}

/// `path: value` lines from the JSON model, one per leaf.
pub fn to_text(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let p = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&p, x, out);
                }
            }
            Value::Array(a) if a.iter().any(|x| x.is_object()) => {
                for (i, x) in a.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), x, out);
                }
            }
            leaf => {
                out.push_str(prefix);
                out.push_str(": ");
                out.push_str(&leaf.to_string());
                out.push('\n');
            }
        }
    }
    let mut out = String::new();
    walk("", v, &mut out);
    out
}
