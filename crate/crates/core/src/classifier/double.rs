use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::mwz::{triple_outcome, TripleOutcome};
use super::summary::{summary_lookup, SummaryRow};
use crate::error::{Error, Result};
use crate::liecomb::pair::class_shape;
use crate::liecomb::{
    full_root_system, is_product_open, parabolic_root_set, stable_parabolics, theta_on_parabolic,
    weyl_elements, Composition, Family, GroupDatum, KParabolicSpec, PairKind, ParabolicSpec,
    Root, RootSet, Shape, SymmetricPairSpec, SymplecticComposition, WeylElement,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Status {
    FiniteProven,
    InfiniteProven,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::FiniteProven => "FiniteProven",
            Status::InfiniteProven => "InfiniteProven",
            Status::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_prime: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p2: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p3: Option<String>,
    /// The three flag shapes handed to the triple flag test.
    pub triple: Vec<String>,
    pub table_row: String,
    pub citation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_open: Option<bool>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = &self.p_prime {
            write!(f, "{p}; ")?;
        }
        if let (Some(a), Some(b)) = (&self.p2, &self.p3) {
            write!(f, "P2={a}, P3={b}")?;
            if let Some(o) = self.product_open {
                write!(f, " (P2 P3 {})", if o { "open" } else { "not open" })?;
            }
            f.write_str("; ")?;
        }
        write!(f, "triple ({}) -> {} [{}]", self.triple.join(" | "), self.table_row, self.citation)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleFlagVerdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl DoubleFlagVerdict {
    pub fn unknown() -> Self {
        DoubleFlagVerdict {
            status: Status::Unknown,
            witness: None,
        }
    }
}

const TRIPLE_CITATION: &str = "triple flag reduction: finite (P, θ(P), P') with Q = K ∩ P'";
const EMBEDDING_CITATION: &str = "embedding G/Q into G/P2 × G/P3 with Q = P2 ∩ P3";
const EMBEDDING_CONVERSE: &str =
    "embedding G/Q into G/P2 × G/P3 with Q = P2 ∩ P3, exact for P1 = B and P2 P3 open";

fn check_inputs(pair: &SymmetricPairSpec, p: &ParabolicSpec, q: &KParabolicSpec) -> Result<()> {
    if p.group() != pair.group() {
        return Err(Error::Mismatch(format!("{p} is not a parabolic of {}", pair.group())));
    }
    q.validate(pair)
}

/// Finite if some `θ`-stable `P'` with `K ∩ P' = Q` makes `(P, θ(P), P')`
/// a finite type triple. Never proves infiniteness.
pub fn finiteness_via_triple(
    pair: &SymmetricPairSpec,
    p: &ParabolicSpec,
    q: &KParabolicSpec,
) -> Result<DoubleFlagVerdict> {
    check_inputs(pair, p, q)?;
    let theta_p = theta_on_parabolic(pair, p)?;
    let shape_p = class_shape(p);
    let shape_tp = class_shape(&theta_p);
    let candidates: Vec<_> = stable_parabolics(pair).into_iter().filter(|s| &s.q == q).collect();
    let found = candidates
        .par_iter()
        .map(|s| -> Result<Option<Witness>> {
            let outcome = triple_outcome([&shape_p, &shape_tp, s.p_prime.shape()])?;
            Ok(outcome.row_label().map(|row| Witness {
                p_prime: Some(s.to_string()),
                p2: None,
                p3: None,
                triple: vec![shape_p.to_string(), shape_tp.to_string(), s.p_prime.shape().to_string()],
                table_row: row,
                citation: TRIPLE_CITATION.to_string(),
                product_open: None,
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(match found {
        Some(w) => DoubleFlagVerdict {
            status: Status::FiniteProven,
            witness: Some(w),
        },
        None => DoubleFlagVerdict::unknown(),
    })
}

/// Coordinates and family of each simple factor of `K`, for equal rank pairs.
fn k_factors(pair: &SymmetricPairSpec) -> Option<Vec<(Vec<usize>, Family)>> {
    let n = pair.group().n;
    match pair.kind() {
        PairKind::AIII { p, .. } => Some(vec![
            ((0..p).collect(), Family::GeneralLinear),
            ((p..n).collect(), Family::GeneralLinear),
        ]),
        PairKind::CI => Some(vec![((0..n).collect(), Family::GeneralLinear)]),
        PairKind::CII { p, .. } => Some(vec![
            ((0..p).collect(), Family::Symplectic),
            ((p..n).collect(), Family::Symplectic),
        ]),
        PairKind::AI | PairKind::AII => None,
    }
}

/// Roots of `K` with respect to the diagonal torus.
pub fn k_root_system(pair: &SymmetricPairSpec) -> Option<RootSet> {
    let factors = k_factors(pair)?;
    let all = full_root_system(pair.group());
    Some(
        all.into_iter()
            .filter(|r| {
                factors.iter().any(|(coords, family)| {
                    r.restrict(coords).is_some()
                        && (*family == Family::Symplectic || r.as_type_a_pair().is_some())
                })
            })
            .collect(),
    )
}

/// The standard shape of the parabolic subset `roots` of a type A or C root system.
fn shape_of_parabolic_subset(group: GroupDatum, roots: &RootSet) -> Shape {
    let positive = crate::liecomb::positive_roots(group);
    let simple = crate::liecomb::simple_roots(group);
    let w = weyl_elements(group)
        .into_iter()
        .find(|w: &WeylElement| positive.iter().all(|r| roots.contains(&w.inverse().act_on_root(r))))
        .expect("a parabolic subset contains a positive system");
    let moved: RootSet = roots.iter().map(|r| w.act_on_root(r)).collect();
    let missing: Vec<usize> = simple
        .iter()
        .enumerate()
        .filter(|(_, a)| !moved.contains(&a.negated()))
        .map(|(i, _)| i + 1)
        .collect();
    match group.family {
        Family::GeneralLinear => {
            let mut parts = Vec::new();
            let mut last = 0;
            for &m in missing.iter().chain(std::iter::once(&group.n)) {
                parts.push(m - last);
                last = m;
            }
            Shape::A(Composition::new(parts).expect("positive parts"))
        }
        Family::Symplectic => {
            let mut left = Vec::new();
            let mut last = 0;
            for &m in &missing {
                left.push(m - last);
                last = m;
            }
            let middle = (last < group.n).then_some(2 * (group.n - last));
            Shape::C(SymplecticComposition::new(left, middle).expect("valid symplectic shape"))
        }
    }
}

/// `Q = P2 ∩ P3` as a parabolic of `K`, if it is one.
fn intersection_in_k(
    pair: &SymmetricPairSpec,
    k_roots: &RootSet,
    r2: &RootSet,
    r3: &RootSet,
) -> Option<KParabolicSpec> {
    let r: RootSet = r2.intersection(r3).cloned().collect();
    if !r.is_subset(k_roots) {
        return None;
    }
    if !k_roots.iter().all(|a| r.contains(a) || r.contains(&a.negated())) {
        return None;
    }
    let factors = k_factors(pair)?;
    let shapes: Vec<Shape> = factors
        .iter()
        .map(|(coords, family)| {
            let g = GroupDatum {
                family: *family,
                n: coords.len(),
            };
            let local: RootSet = r.iter().filter_map(|x: &Root| x.restrict(coords)).collect();
            shape_of_parabolic_subset(g, &local)
        })
        .collect();
    Some(match (pair.kind(), shapes.as_slice()) {
        (PairKind::AIII { .. }, [Shape::A(a), Shape::A(b)]) => KParabolicSpec::Aiii(a.clone(), b.clone()),
        (PairKind::CI, [Shape::A(a)]) => KParabolicSpec::Ci(a.clone()),
        (PairKind::CII { .. }, [Shape::C(a), Shape::C(b)]) => KParabolicSpec::Cii(a.clone(), b.clone()),
        _ => unreachable!("factor shapes match the pair kind"),
    })
}

/// Standard and opposite parabolics of `G`, each once.
fn standard_and_opposite(group: GroupDatum) -> Vec<ParabolicSpec> {
    let mut out = Vec::new();
    for p in ParabolicSpec::all_standard(group) {
        let opp = p.opposite();
        let proper = p.is_proper();
        out.push(p);
        if proper {
            out.push(opp);
        }
    }
    out.sort();
    out
}

/// Searches pairs `(P2, P3)` of standard or opposite parabolics with
/// `P2 ∩ P3 = Q`. Finite if `(P1, P2, P3)` is a finite type triple; if `P1` is
/// a Borel subgroup and `P2 P3` is open the test is exact and an infinite
/// triple proves infiniteness.
pub fn finiteness_via_intersection(
    pair: &SymmetricPairSpec,
    p1: &ParabolicSpec,
    q: &KParabolicSpec,
) -> Result<DoubleFlagVerdict> {
    check_inputs(pair, p1, q)?;
    let Some(k_roots) = k_root_system(pair) else {
        // K has smaller rank than G, so no intersection of parabolics
        // containing the diagonal torus lies in K.
        return Ok(DoubleFlagVerdict::unknown());
    };
    let group = pair.group();
    let parabolics = standard_and_opposite(group);
    let roots: Vec<RootSet> = parabolics.iter().map(parabolic_root_set).collect();
    let shape1 = class_shape(p1);
    let borel = p1.is_borel();

    let pairs: Vec<(usize, usize)> = (0..parabolics.len())
        .flat_map(|i| (0..parabolics.len()).map(move |j| (i, j)))
        .collect();
    let hits: Vec<(usize, usize, TripleOutcome, bool)> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let found = intersection_in_k(pair, &k_roots, &roots[i], &roots[j])?;
            if &found != q {
                return None;
            }
            let s2 = class_shape(&parabolics[i]);
            let s3 = class_shape(&parabolics[j]);
            let outcome = triple_outcome([&shape1, &s2, &s3]).ok()?;
            let open = is_product_open(&parabolics[i], &parabolics[j]).ok()?;
            Some((i, j, outcome, open))
        })
        .collect();

    let witness = |i: usize, j: usize, outcome: &TripleOutcome, open: bool, citation: &str| Witness {
        p_prime: None,
        p2: Some(parabolics[i].to_string()),
        p3: Some(parabolics[j].to_string()),
        triple: vec![
            shape1.to_string(),
            class_shape(&parabolics[i]).to_string(),
            class_shape(&parabolics[j]).to_string(),
        ],
        table_row: outcome.row_label().unwrap_or_else(|| "no row (infinite type)".to_string()),
        citation: citation.to_string(),
        product_open: Some(open),
    };

    if let Some((i, j, outcome, open)) = hits.iter().find(|h| h.2.is_finite()) {
        let citation = if borel && *open { EMBEDDING_CONVERSE } else { EMBEDDING_CITATION };
        return Ok(DoubleFlagVerdict {
            status: Status::FiniteProven,
            witness: Some(witness(*i, *j, outcome, *open, citation)),
        });
    }
    if borel {
        if let Some((i, j, outcome, open)) = hits.iter().find(|h| h.3) {
            return Ok(DoubleFlagVerdict {
                status: Status::InfiniteProven,
                witness: Some(witness(*i, *j, outcome, *open, EMBEDDING_CONVERSE)),
            });
        }
    }
    Ok(DoubleFlagVerdict::unknown())
}

/// Both criteria and the summary tables on one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub schema: u32,
    pub pair: String,
    pub p: String,
    pub q: String,
    pub status: Status,
    /// False if one criterion proves finiteness and the other infiniteness.
    pub consistent: bool,
    pub via_triple: DoubleFlagVerdict,
    pub via_intersection: DoubleFlagVerdict,
    pub summary_rows: Vec<SummaryRow>,
}

pub fn classify(
    pair: &SymmetricPairSpec,
    p: &ParabolicSpec,
    q: &KParabolicSpec,
) -> Result<Classification> {
    let via_triple = finiteness_via_triple(pair, p, q)?;
    let via_intersection = finiteness_via_intersection(pair, p, q)?;
    let summary_rows = summary_lookup(pair, p, q)?;
    let statuses = [via_triple.status, via_intersection.status];
    let finite = statuses.contains(&Status::FiniteProven);
    let infinite = statuses.contains(&Status::InfiniteProven);
    let status = if finite {
        Status::FiniteProven
    } else if infinite {
        Status::InfiniteProven
    } else {
        Status::Unknown
    };
    Ok(Classification {
        schema: 1,
        pair: pair.to_string(),
        p: class_shape(p).to_string(),
        q: q.to_string(),
        status,
        consistent: !(finite && infinite) && !(infinite && !summary_rows.is_empty()),
        via_triple,
        via_intersection,
        summary_rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(s: &str) -> ParabolicSpec {
        ParabolicSpec::gl(s.parse().unwrap())
    }

    #[test]
    fn aiii_maximal_p_uses_d() {
        let pair = SymmetricPairSpec::aiii(2, 3).unwrap();
        for q in ["1,1;1,1,1", "2;3", "1,1;2,1"] {
            let q = KParabolicSpec::parse(&pair, q).unwrap();
            let v = finiteness_via_triple(&pair, &gl("2,3"), &q).unwrap();
            assert_eq!(v.status, Status::FiniteProven);
            assert!(v.witness.unwrap().table_row.starts_with('D') || q.is_whole());
        }
    }

    #[test]
    fn aiii_mirabolic_q_uses_s() {
        let pair = SymmetricPairSpec::aiii(3, 2).unwrap();
        let q = KParabolicSpec::parse(&pair, "1,2;2").unwrap();
        let v = finiteness_via_triple(&pair, &gl("1,1,1,1,1"), &q).unwrap();
        assert_eq!(v.status, Status::FiniteProven);
        assert!(v.witness.unwrap().table_row.starts_with("S_"));
    }

    #[test]
    fn triple_criterion_is_one_directional() {
        let pair = SymmetricPairSpec::aii(4).unwrap();
        let q = KParabolicSpec::borel(&pair);
        let v = finiteness_via_triple(&pair, &gl("1,2,1"), &q).unwrap();
        assert_eq!(v.status, Status::Unknown);
        assert!(v.witness.is_none());
    }

    #[test]
    fn intersection_exact_for_borel() {
        let pair = SymmetricPairSpec::aiii(2, 2).unwrap();
        let b = gl("1,1,1,1");
        let q = KParabolicSpec::borel(&pair);
        let v = finiteness_via_intersection(&pair, &b, &q).unwrap();
        assert_eq!(v.status, Status::InfiniteProven);
        assert_eq!(v.witness.unwrap().product_open, Some(true));
        let q = KParabolicSpec::parse(&pair, "2;1,1").unwrap();
        let v = finiteness_via_intersection(&pair, &b, &q).unwrap();
        assert_eq!(v.status, Status::FiniteProven);
    }

    #[test]
    fn hermitian_case() {
        let pair = SymmetricPairSpec::ci(2).unwrap();
        let b = ParabolicSpec::borel(pair.group());
        let v = finiteness_via_intersection(&pair, &b, &KParabolicSpec::whole(&pair)).unwrap();
        assert_eq!(v.status, Status::FiniteProven);
        let ai = SymmetricPairSpec::ai(3).unwrap();
        let v = finiteness_via_intersection(&ai, &gl("1,1,1"), &KParabolicSpec::whole(&ai)).unwrap();
        assert_eq!(v.status, Status::Unknown);
    }

    #[test]
    fn k_roots() {
        let pair = SymmetricPairSpec::aiii(2, 1).unwrap();
        assert_eq!(k_root_system(&pair).unwrap().len(), 2);
        let pair = SymmetricPairSpec::cii(1, 1).unwrap();
        assert_eq!(k_root_system(&pair).unwrap().len(), 4);
        let pair = SymmetricPairSpec::ci(3).unwrap();
        assert_eq!(k_root_system(&pair).unwrap().len(), 6);
    }
}
