use serde::Serialize;

use super::lr::{restrict_to_levi, tensor_decompose};
use super::partition::Partition;
use crate::error::{Error, Result};
use crate::liecomb::pair::class_shape;
use crate::liecomb::{theta_on_parabolic, Family, ParabolicSpec, Shape, SymmetricPairSpec};

/// `λ = Σ ω_s` over the break points `s` of the shape of `P`, the highest
/// weight whose line has stabilizer `P`.
pub fn highest_weight_of_parabolic(p: &ParabolicSpec) -> Result<Partition> {
    let Shape::A(c) = class_shape(p) else {
        return Err(Error::Unsupported(format!("{p} is not a parabolic of GL_n")));
    };
    let breaks = c.break_points();
    let parts = (0..c.size())
        .map(|i| breaks.iter().filter(|&&b| b > i).count() as u32)
        .collect();
    Partition::new(parts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeFailure {
    pub k: u32,
    /// The second sweep index, for the tensor probe.
    pub l: Option<u32>,
    /// The repeated constituent.
    pub constituent: String,
    pub multiplicity: u64,
}

/// Result of a truncated multiplicity-freeness sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeOutcome {
    /// Multiplicity-free at every sweep point up to the bounds.
    pub holds: bool,
    pub k_max: u32,
    pub l_max: Option<u32>,
    pub first_failure: Option<ProbeFailure>,
}

fn type_a(p: &ParabolicSpec) -> Result<usize> {
    if p.group().family != Family::GeneralLinear {
        return Err(Error::Unsupported(format!("{p} is not a parabolic of GL_n")));
    }
    Ok(p.group().n)
}

/// Whether `V_{kλ(P)}` restricts multiplicity freely to `GL_p × GL_q` for
/// every `0 <= k <= k_max`.
pub fn spherical_probe_restriction(p: &ParabolicSpec, gl_p: usize, gl_q: usize, k_max: u32) -> Result<ProbeOutcome> {
    let n = type_a(p)?;
    if gl_p + gl_q != n {
        return Err(Error::Mismatch(format!("GL_{gl_p} × GL_{gl_q} is not a Levi of GL_{n}")));
    }
    if k_max == 0 {
        return Err(Error::invalid("k_max must be at least 1"));
    }
    let lambda = highest_weight_of_parabolic(p)?;
    for k in 1..=k_max {
        let d = restrict_to_levi(&lambda.scale(k), gl_p, gl_q)?;
        if let Some((w, m)) = d.first_repeated() {
            return Ok(ProbeOutcome {
                holds: false,
                k_max,
                l_max: None,
                first_failure: Some(ProbeFailure {
                    k,
                    l: None,
                    constituent: format!("({})⊗({})", w.0, w.1),
                    multiplicity: m,
                }),
            });
        }
    }
    Ok(ProbeOutcome {
        holds: true,
        k_max,
        l_max: None,
        first_failure: None,
    })
}

/// Whether `V_{kλ} ⊗ V_{lλ^θ}` is multiplicity free for all `k <= k_max`,
/// `l <= l_max`, where `λ^θ` is the weight of `θ(P)`.
pub fn spherical_probe_tensor(p: &ParabolicSpec, pair: &SymmetricPairSpec, k_max: u32, l_max: u32) -> Result<ProbeOutcome> {
    let n = type_a(p)?;
    let lambda = highest_weight_of_parabolic(p)?;
    let lambda_theta = highest_weight_of_parabolic(&theta_on_parabolic(pair, p)?)?;
    for k in 0..=k_max {
        for l in 0..=l_max {
            if k == 0 || l == 0 {
                continue;
            }
            let d = tensor_decompose(&lambda.scale(k), &lambda_theta.scale(l), n)?;
            if let Some((w, m)) = d.first_repeated() {
                return Ok(ProbeOutcome {
                    holds: false,
                    k_max,
                    l_max: Some(l_max),
                    first_failure: Some(ProbeFailure {
                        k,
                        l: Some(l),
                        constituent: format!("({w})"),
                        multiplicity: m,
                    }),
                });
            }
        }
    }
    Ok(ProbeOutcome {
        holds: true,
        k_max,
        l_max: Some(l_max),
        first_failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(s: &str) -> ParabolicSpec {
        ParabolicSpec::gl(s.parse().unwrap())
    }

    #[test]
    fn weights() {
        assert_eq!(highest_weight_of_parabolic(&gl("2,2")).unwrap().parts(), &[1, 1]);
        assert_eq!(highest_weight_of_parabolic(&gl("1,1,1")).unwrap().parts(), &[2, 1]);
        assert_eq!(highest_weight_of_parabolic(&gl("1,3")).unwrap().parts(), &[1]);
        assert!(highest_weight_of_parabolic(&gl("4")).unwrap().is_empty());
    }

    #[test]
    fn restriction_examples() {
        assert!(spherical_probe_restriction(&gl("1,2"), 1, 2, 6).unwrap().holds);
        let r = spherical_probe_restriction(&gl("1,1,1,1"), 2, 2, 3).unwrap();
        assert!(!r.holds);
        let fail = r.first_failure.unwrap();
        assert_eq!(fail.k, 1);
        assert_eq!(fail.constituent, "(2,1)⊗(2,1)");
        assert!(spherical_probe_restriction(&gl("1,1"), 1, 1, 6).unwrap().holds);
    }

    #[test]
    fn tensor_examples() {
        let a22 = SymmetricPairSpec::aiii(2, 2).unwrap();
        assert!(spherical_probe_tensor(&gl("2,2"), &a22, 3, 3).unwrap().holds);
        let ai = SymmetricPairSpec::ai(3).unwrap();
        assert!(!spherical_probe_tensor(&gl("1,1,1"), &ai, 2, 2).unwrap().holds);
        let a14 = SymmetricPairSpec::aiii(1, 4).unwrap();
        assert!(spherical_probe_tensor(&gl("1,4"), &a14, 1, 1).unwrap().holds);
    }
}
