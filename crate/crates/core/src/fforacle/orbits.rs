use std::fmt::{self, Write as _};

use serde::Serialize;

use super::field::Field;
use super::flags::{coordinate_flag, flag_count, flag_dims, flag_space, FlagSpace};
use super::groups::{ambient_generators, cii_coordinates, k_generators};
use super::linalg::{FlagPoint, Matrix, Subspace};
use crate::error::{Error, Result};
use crate::liecomb::pair::class_shape;
use crate::liecomb::{
    Composition, GroupDatum, KParabolicSpec, PairKind, ParabolicSpec, SymmetricPairSpec,
};
use crate::unionfind::UnionFind;

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Orbits of a group acting diagonally on a product of flag spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitTally {
    pub points: u128,
    pub orbits: u64,
    /// Orbit sizes, largest first.
    pub sizes: Vec<u64>,
}

impl OrbitTally {
    /// Whether the orbit sizes add up to the number of points.
    pub fn audit(&self) -> bool {
        self.sizes.iter().map(|&s| u128::from(s)).sum::<u128>() == self.points
    }
}

/// Counts the orbits of the group generated by `gens` on `X_1 × ... × X_k`.
/// The permutations are computed in parallel; the merging is sequential.
pub fn count_diagonal_orbits(spaces: &[&FlagSpace], gens: &[Matrix], f: Field) -> OrbitTally {
    let sizes: Vec<usize> = spaces.iter().map(|s| s.len()).collect();
    let total: usize = sizes.iter().product();
    let mut uf = UnionFind::new(total);
    for g in gens {
        let perms: Vec<Vec<u32>> = spaces.iter().map(|s| s.permutation(g, f)).collect();
        if perms.iter().all(|p| p.iter().enumerate().all(|(i, &j)| i == j as usize)) {
            continue;
        }
        let mut digits = vec![0usize; spaces.len()];
        for idx in 0..total {
            let mut image = 0usize;
            for (k, p) in perms.iter().enumerate() {
                image = image * sizes[k] + p[digits[k]] as usize;
            }
            uf.union(idx, image);
            for k in (0..digits.len()).rev() {
                digits[k] += 1;
                if digits[k] < sizes[k] {
                    break;
                }
                digits[k] = 0;
            }
        }
    }
    let mut orbit_sizes: Vec<u64> = uf.set_sizes().into_iter().map(|s| s as u64).collect();
    orbit_sizes.sort_unstable_by(|a, b| b.cmp(a));
    OrbitTally {
        points: total as u128,
        orbits: orbit_sizes.len() as u64,
        sizes: orbit_sizes,
    }
}

/// One row of an orbit count report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCount {
    pub q: u64,
    pub points: u128,
    pub orbits: u64,
}

/// A flag whose `K`-orbit is `K/Q` in the fixed realization.
pub fn k_base_flag(pair: &SymmetricPairSpec, q_spec: &KParabolicSpec, f: Field) -> Result<FlagPoint> {
    q_spec.validate(pair)?;
    let d = pair.group().dim();
    let partial = |c: &Composition| {
        let mut acc = 0;
        let mut v: Vec<usize> = c
            .parts()
            .iter()
            .map(|&a| {
                acc += a;
                acc
            })
            .collect();
        v.pop();
        v
    };
    Ok(match q_spec {
        KParabolicSpec::Aiii(q1, q2) => {
            let mut dims = partial(q1);
            let p = q1.size();
            if q2.len() > 1 {
                dims.push(p);
                dims.extend(partial(q2).into_iter().map(|k| p + k));
            }
            coordinate_flag(d, &dims, f)
        }
        KParabolicSpec::Ai(c) | KParabolicSpec::Ci(c) => coordinate_flag(d, &partial(c), f),
        KParabolicSpec::Aii(s) => coordinate_flag(d, &s.isotropic_dims(), f),
        KParabolicSpec::Cii(q1, q2) => {
            let PairKind::CII { p, q } = pair.kind() else { unreachable!() };
            let (outer, inner) = cii_coordinates(p, q);
            let mut spaces: Vec<Subspace> = q1
                .isotropic_dims()
                .into_iter()
                .map(|k| Subspace::coordinate(d, &outer[..k], f))
                .collect();
            let w1 = Subspace::coordinate(d, &outer, f);
            if q2.is_proper() {
                spaces.push(w1);
                for k in q2.isotropic_dims() {
                    let coords: Vec<usize> = outer.iter().chain(&inner[..k]).copied().collect();
                    spaces.push(Subspace::coordinate(d, &coords, f));
                }
            }
            FlagPoint::new(spaces, f).expect("nested by construction")
        }
    })
}

fn check_field(pair: &SymmetricPairSpec, f: Field) -> Result<()> {
    if pair.kind() == PairKind::AI && f.q() == 2 {
        return Err(Error::Unsupported("AI needs odd q".into()));
    }
    Ok(())
}

/// Number of `K(F_q)`-orbits on `X_P(F_q) × Z_Q(F_q)`.
pub fn count_k_orbits(
    pair: &SymmetricPairSpec,
    p: &ParabolicSpec,
    q_spec: &KParabolicSpec,
    q: u64,
    budget: u128,
) -> Result<OrbitCount> {
    let f = Field::new(q)?;
    check_field(pair, f)?;
    if p.group() != pair.group() {
        return Err(Error::Mismatch(format!("{p} is not a parabolic of {}", pair.group())));
    }
    let gens = k_generators(pair, f)?;
    let z = FlagSpace::orbit(k_base_flag(pair, q_spec, f)?, &gens, f, budget)?;
    let shape = class_shape(p);
    let x_count = flag_count(pair.group(), &shape, q)?;
    let needed = x_count * z.len() as u128;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let x = flag_space(pair.group(), &shape, f, budget)?;
    let tally = count_diagonal_orbits(&[&x, &z], &gens, f);
    debug_assert!(tally.audit());
    Ok(OrbitCount {
        q,
        points: tally.points,
        orbits: tally.orbits,
    })
}

/// Number of diagonal `G(F_q)`-orbits on `G/P_1 × ... × G/P_k`. With two
/// factors this is the Bruhat count; with three, the triple flag variety.
pub fn count_triple_orbits(group: GroupDatum, parabolics: &[ParabolicSpec], q: u64, budget: u128) -> Result<OrbitCount> {
    let f = Field::new(q)?;
    if parabolics.is_empty() {
        return Err(Error::invalid("at least one parabolic is required"));
    }
    let mut needed: u128 = 1;
    for p in parabolics {
        if p.group() != group {
            return Err(Error::Mismatch(format!("{p} is not a parabolic of {group}")));
        }
        needed = needed.saturating_mul(flag_count(group, &class_shape(p), q)?);
    }
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let spaces = parabolics
        .iter()
        .map(|p| flag_space(group, &class_shape(p), f, budget))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&FlagSpace> = spaces.iter().collect();
    let tally = count_diagonal_orbits(&refs, &ambient_generators(group, f), f);
    Ok(OrbitCount {
        q,
        points: tally.points,
        orbits: tally.orbits,
    })
}

/// How orbit counts change along the list of field sizes. This is a hint
/// about finiteness over `C`, never a proof.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GrowthHint {
    /// The same count for every `q`.
    Bounded,
    /// Strictly increasing counts.
    Growing,
    /// Neither.
    Irregular,
}

impl fmt::Display for GrowthHint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthHint::Bounded => "Bounded",
            GrowthHint::Growing => "Growing",
            GrowthHint::Irregular => "Irregular",
        })
    }
}

impl GrowthHint {
    pub fn from_counts(counts: &[OrbitCount]) -> GrowthHint {
        if counts.windows(2).all(|w| w[0].orbits == w[1].orbits) {
            GrowthHint::Bounded
        } else if counts.windows(2).all(|w| w[0].orbits < w[1].orbits) {
            GrowthHint::Growing
        } else {
            GrowthHint::Irregular
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCountReport {
    pub schema: u32,
    /// The action probed, e.g. `K(AIII:2,2) on G/P(1,1,1,1) × K/Q(1,1;1,1)`.
    pub subject: String,
    pub counts: Vec<OrbitCount>,
    pub hint: GrowthHint,
}

impl OrbitCountReport {
    pub fn new(subject: String, counts: Vec<OrbitCount>) -> Self {
        let hint = GrowthHint::from_counts(&counts);
        OrbitCountReport {
            schema: 1,
            subject,
            counts,
            hint,
        }
    }

    /// Columns `q`, `points`, `orbits`, `hint`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("q\tpoints\torbits\thint\n");
        for c in &self.counts {
            let _ = writeln!(out, "{}\t{}\t{}\t{}", c.q, c.points, c.orbits, self.hint);
        }
        out
    }
}

fn check_qlist(q_list: &[u64]) -> Result<()> {
    if q_list.is_empty() {
        return Err(Error::invalid("the list of field sizes is empty"));
    }
    if !q_list.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::invalid("field sizes must be strictly increasing"));
    }
    Ok(())
}

/// Orbit counts of `K(F_q)` on `X_P × Z_Q` for each `q` in `q_list`.
pub fn growth_probe(
    pair: &SymmetricPairSpec,
    p: &ParabolicSpec,
    q_spec: &KParabolicSpec,
    q_list: &[u64],
    budget: u128,
) -> Result<OrbitCountReport> {
    check_qlist(q_list)?;
    let counts = q_list
        .iter()
        .map(|&q| count_k_orbits(pair, p, q_spec, q, budget))
        .collect::<Result<Vec<_>>>()?;
    let subject = format!("K({pair}) on G/P({}) × K/Q({q_spec})", class_shape(p));
    Ok(OrbitCountReport::new(subject, counts))
}

/// Orbit counts of diagonal `G(F_q)` on a product of partial flag varieties.
pub fn triple_growth_probe(
    group: GroupDatum,
    parabolics: &[ParabolicSpec],
    q_list: &[u64],
    budget: u128,
) -> Result<OrbitCountReport> {
    check_qlist(q_list)?;
    let counts = q_list
        .iter()
        .map(|&q| count_triple_orbits(group, parabolics, q, budget))
        .collect::<Result<Vec<_>>>()?;
    let shapes: Vec<String> = parabolics.iter().map(|p| format!("G/P({})", class_shape(p))).collect();
    let subject = format!("{group} on {}", shapes.join(" × "));
    Ok(OrbitCountReport::new(subject, counts))
}

/// The same count as [`count_k_orbits`] but with every element of `K(F_q)`
/// used as a generator, for auditing the choice of generators.
pub fn count_k_orbits_with(
    pair: &SymmetricPairSpec,
    p: &ParabolicSpec,
    q_spec: &KParabolicSpec,
    gens: &[Matrix],
    q: u64,
    budget: u128,
) -> Result<OrbitTally> {
    let f = Field::new(q)?;
    check_field(pair, f)?;
    let z = FlagSpace::orbit(k_base_flag(pair, q_spec, f)?, gens, f, budget)?;
    let x = flag_space(pair.group(), &class_shape(p), f, budget)?;
    Ok(count_diagonal_orbits(&[&x, &z], gens, f))
}

/// Dimensions of the flags in `X_P`.
pub fn x_dims(p: &ParabolicSpec) -> Vec<usize> {
    flag_dims(&class_shape(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fforacle::groups::{group_points, MatrixGroup};

    fn gl(s: &str) -> ParabolicSpec {
        ParabolicSpec::gl(s.parse().unwrap())
    }

    #[test]
    fn k_orbit_examples() {
        let a11 = SymmetricPairSpec::aiii(1, 1).unwrap();
        let k = KParabolicSpec::whole(&a11);
        assert_eq!(count_k_orbits(&a11, &gl("1,1"), &k, 2, DEFAULT_BUDGET).unwrap().orbits, 3);
        assert_eq!(count_k_orbits(&a11, &gl("1,1"), &k, 3, DEFAULT_BUDGET).unwrap().orbits, 3);
        let a21 = SymmetricPairSpec::aiii(2, 1).unwrap();
        let k = KParabolicSpec::whole(&a21);
        assert_eq!(count_k_orbits(&a21, &gl("1,1,1"), &k, 2, DEFAULT_BUDGET).unwrap().orbits, 6);
        let b = KParabolicSpec::borel(&a11);
        assert_eq!(count_k_orbits(&a11, &gl("2"), &b, 3, DEFAULT_BUDGET).unwrap().orbits, 1);
    }

    #[test]
    fn bruhat_and_triples() {
        let g2 = GroupDatum::gl(2);
        let b = ParabolicSpec::borel(g2);
        assert_eq!(count_triple_orbits(g2, &[b.clone(), b.clone()], 2, DEFAULT_BUDGET).unwrap().orbits, 2);
        let g3 = GroupDatum::gl(3);
        for q in [2, 3] {
            let c = count_triple_orbits(g3, &[gl("2,1"), gl("1,2")], q, DEFAULT_BUDGET).unwrap();
            assert_eq!(c.orbits, 2);
        }
        let b3 = ParabolicSpec::borel(g3);
        let r = triple_growth_probe(g3, &[b3.clone(), b3.clone(), b3], &[2, 3], DEFAULT_BUDGET).unwrap();
        assert_eq!(r.hint, GrowthHint::Growing);
    }

    #[test]
    fn probe_examples() {
        let a22 = SymmetricPairSpec::aiii(2, 2).unwrap();
        let r = growth_probe(&a22, &gl("1,1,1,1"), &KParabolicSpec::borel(&a22), &[2, 3], DEFAULT_BUDGET).unwrap();
        assert_eq!(r.counts[0].points, 315 * 9);
        assert_eq!(r.counts[1].points, 2080 * 16);
        assert_eq!(r.hint, GrowthHint::Growing);
        let a12 = SymmetricPairSpec::aiii(1, 2).unwrap();
        let r = growth_probe(&a12, &gl("1,1,1"), &KParabolicSpec::borel(&a12), &[2, 3], DEFAULT_BUDGET).unwrap();
        assert_eq!(r.hint, GrowthHint::Bounded);
        assert!(r.to_tsv().starts_with("q\tpoints\torbits\thint\n"));
    }

    #[test]
    fn generator_choice_is_irrelevant() {
        let pair = SymmetricPairSpec::aiii(2, 1).unwrap();
        let q_spec = KParabolicSpec::borel(&pair);
        let p = gl("1,1,1");
        let all = group_points(MatrixGroup::K(pair), 3, DEFAULT_BUDGET).unwrap().elements.unwrap();
        let t = count_k_orbits_with(&pair, &p, &q_spec, &all, 3, DEFAULT_BUDGET).unwrap();
        assert!(t.audit());
        assert_eq!(t.orbits, count_k_orbits(&pair, &p, &q_spec, 3, DEFAULT_BUDGET).unwrap().orbits);
    }

    #[test]
    fn budget_is_enforced() {
        let a22 = SymmetricPairSpec::aiii(2, 2).unwrap();
        let e = count_k_orbits(&a22, &gl("1,1,1,1"), &KParabolicSpec::borel(&a22), 3, 1000).unwrap_err();
        assert!(matches!(e, Error::BudgetExceeded { .. }));
        let ai = SymmetricPairSpec::ai(3).unwrap();
        assert!(count_k_orbits(&ai, &gl("1,1,1"), &KParabolicSpec::borel(&ai), 2, DEFAULT_BUDGET).is_err());
    }
}
