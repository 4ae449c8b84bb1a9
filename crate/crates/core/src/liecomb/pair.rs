use std::fmt;

use serde::{Serialize, Serializer};

use super::composition::{parse_parts, Composition, SymplecticComposition};
use super::group::{Family, GroupDatum, Orientation, ParabolicSpec, Shape};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PairKind {
    /// `GL_n ⊃ SO_n`.
    AI,
    /// `GL_2m ⊃ Sp_2m`.
    AII,
    /// `GL_{p+q} ⊃ GL_p × GL_q`.
    AIII { p: usize, q: usize },
    /// `Sp_2n ⊃ GL_n`.
    CI,
    /// `Sp_{2(p+q)} ⊃ Sp_2p × Sp_2q`.
    CII { p: usize, q: usize },
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairKind::AI => f.write_str("AI"),
            PairKind::AII => f.write_str("AII"),
            PairKind::AIII { p, q } => write!(f, "AIII:{p},{q}"),
            PairKind::CI => f.write_str("CI"),
            PairKind::CII { p, q } => write!(f, "CII:{p},{q}"),
        }
    }
}

/// A symmetric pair `(G, K)` with its fixed matrix realization.
///
/// * AIII: `θ` is conjugation by `diag(I_p, -I_q)`.
/// * AI: `θ(g) = (gᵀ)⁻¹`, the identity symmetric form.
/// * AII: `θ(g) = J (gᵀ)⁻¹ J⁻¹` for the antidiagonal symplectic form `J`.
/// * CI: `θ` is conjugation by `diag(I_n, -I_n)`, so `K` is the Siegel Levi.
/// * CII: `Sp_2p` acts on the outer coordinates `1..p, 2n+1-p..2n` and
///   `Sp_2q` on the inner ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricPairSpec {
    kind: PairKind,
    group: GroupDatum,
}

impl SymmetricPairSpec {
    pub fn new(kind: PairKind, group: GroupDatum) -> Result<Self> {
        group.validate()?;
        let family_ok = match kind {
            PairKind::AI | PairKind::AII | PairKind::AIII { .. } => {
                group.family == Family::GeneralLinear
            }
            PairKind::CI | PairKind::CII { .. } => group.family == Family::Symplectic,
        };
        if !family_ok {
            return Err(Error::Mismatch(format!("{kind} does not live on {group}")));
        }
        match kind {
            PairKind::AIII { p, q } | PairKind::CII { p, q } => {
                if p == 0 || q == 0 || p + q != group.n {
                    return Err(Error::invalid(format!(
                        "{kind} needs p, q >= 1 with p + q = {}",
                        group.n
                    )));
                }
            }
            PairKind::AII if group.n % 2 == 1 => {
                return Err(Error::invalid("AII needs an even ambient rank"));
            }
            PairKind::AI if group.n < 2 => {
                return Err(Error::invalid("AI needs n >= 2"));
            }
            _ => {}
        }
        Ok(SymmetricPairSpec { kind, group })
    }

    pub fn ai(n: usize) -> Result<Self> {
        Self::new(PairKind::AI, GroupDatum::gl(n))
    }

    /// `GL_n ⊃ Sp_n` with `n` even.
    pub fn aii(n: usize) -> Result<Self> {
        Self::new(PairKind::AII, GroupDatum::gl(n))
    }

    pub fn aiii(p: usize, q: usize) -> Result<Self> {
        Self::new(PairKind::AIII { p, q }, GroupDatum::gl(p + q))
    }

    pub fn ci(n: usize) -> Result<Self> {
        Self::new(PairKind::CI, GroupDatum::sp(n))
    }

    pub fn cii(p: usize, q: usize) -> Result<Self> {
        Self::new(PairKind::CII { p, q }, GroupDatum::sp(p + q))
    }

    /// Parses `AI`, `AII`, `AIII:p,q`, `CI`, `CII:p,q`. The rank `n` is
    /// required for the first, second and fourth forms; `AI:n` style tokens
    /// are also accepted.
    pub fn parse(token: &str, n: Option<usize>) -> Result<Self> {
        let t = token.trim();
        let (head, tail) = match t.split_once(':') {
            Some((h, rest)) => (h.trim(), Some(rest.trim())),
            None => (t, None),
        };
        let numbers = match tail {
            Some(s) => parse_parts(s).map_err(|_| Error::parse(token, "bad numeric arguments"))?,
            None => Vec::new(),
        };
        let need_n = |numbers: &[usize]| -> Result<usize> {
            match (numbers, n) {
                ([], Some(n)) => Ok(n),
                ([m], None) => Ok(*m),
                ([m], Some(n)) if *m == n => Ok(n),
                ([], None) => Err(Error::parse(token, "the rank n must be given")),
                _ => Err(Error::parse(token, "conflicting rank")),
            }
        };
        let pq = |numbers: &[usize]| -> Result<(usize, usize)> {
            match numbers {
                [p, q] => {
                    if let Some(n) = n {
                        if p + q != n {
                            return Err(Error::parse(token, format!("p + q must equal n = {n}")));
                        }
                    }
                    Ok((*p, *q))
                }
                _ => Err(Error::parse(token, "expected two integers p,q")),
            }
        };
        let built = match head.to_ascii_uppercase().as_str() {
            "AI" => Self::ai(need_n(&numbers)?),
            "AII" => Self::aii(need_n(&numbers)?),
            "AIII" => {
                let (p, q) = pq(&numbers)?;
                Self::aiii(p, q)
            }
            "CI" => Self::ci(need_n(&numbers)?),
            "CII" => {
                let (p, q) = pq(&numbers)?;
                Self::cii(p, q)
            }
            _ => return Err(Error::parse(token, "unknown symmetric pair kind")),
        };
        built.map_err(|e| Error::parse(token, e.to_string()))
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn group(&self) -> GroupDatum {
        self.group
    }

    /// Whether `θ` is inner, so that it fixes every parabolic conjugacy class.
    pub fn is_inner(&self) -> bool {
        !matches!(self.kind, PairKind::AI | PairKind::AII)
    }

    /// Rank of `K` equals rank of `G`.
    pub fn is_equal_rank(&self) -> bool {
        self.is_inner()
    }

    fn check(&self, p: &ParabolicSpec) -> Result<()> {
        if p.group() != self.group {
            return Err(Error::Mismatch(format!(
                "{p} is not a parabolic of {}",
                self.group
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SymmetricPairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PairKind::AI | PairKind::AII | PairKind::CI => {
                write!(f, "{} on {}", self.kind, self.group)
            }
            _ => self.kind.fmt(f),
        }
    }
}

impl Serialize for SymmetricPairSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A parabolic subgroup of `K`, up to conjugacy, one shape per simple factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KParabolicSpec {
    /// `Q_1 × Q_2 ⊂ GL_p × GL_q`.
    Aiii(Composition, Composition),
    /// A parabolic of `SO_n` given by the palindromic block structure of its isotropic flag.
    Ai(Composition),
    /// A parabolic of `Sp_n`.
    Aii(SymplecticComposition),
    /// A parabolic of `GL_n`.
    Ci(Composition),
    /// `Q_1 × Q_2 ⊂ Sp_2p × Sp_2q`.
    Cii(SymplecticComposition, SymplecticComposition),
}

impl KParabolicSpec {
    /// `Q = K`.
    pub fn whole(pair: &SymmetricPairSpec) -> Self {
        let n = pair.group.n;
        match pair.kind {
            PairKind::AIII { p, q } => {
                KParabolicSpec::Aiii(Composition::whole(p), Composition::whole(q))
            }
            PairKind::AI => KParabolicSpec::Ai(Composition::whole(n)),
            PairKind::AII => KParabolicSpec::Aii(SymplecticComposition::whole(n / 2)),
            PairKind::CI => KParabolicSpec::Ci(Composition::whole(n)),
            PairKind::CII { p, q } => KParabolicSpec::Cii(
                SymplecticComposition::whole(p),
                SymplecticComposition::whole(q),
            ),
        }
    }

    /// A Borel subgroup of `K`.
    pub fn borel(pair: &SymmetricPairSpec) -> Self {
        let n = pair.group.n;
        match pair.kind {
            PairKind::AIII { p, q } => {
                KParabolicSpec::Aiii(Composition::ones(p), Composition::ones(q))
            }
            PairKind::AI => KParabolicSpec::Ai(Composition::ones(n)),
            PairKind::AII => KParabolicSpec::Aii(SymplecticComposition::borel(n / 2)),
            PairKind::CI => KParabolicSpec::Ci(Composition::ones(n)),
            PairKind::CII { p, q } => KParabolicSpec::Cii(
                SymplecticComposition::borel(p),
                SymplecticComposition::borel(q),
            ),
        }
    }

    /// Parses a `K`-parabolic for `pair`. Two-factor kinds use `a;b`.
    /// The tokens `K` and `B` stand for `K` itself and its Borel subgroup.
    pub fn parse(pair: &SymmetricPairSpec, s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("k") {
            return Ok(Self::whole(pair));
        }
        if t.eq_ignore_ascii_case("b") {
            return Ok(Self::borel(pair));
        }
        let two = || -> Result<(&str, &str)> {
            t.split_once(';')
                .ok_or_else(|| Error::parse(s, "expected two factor shapes separated by ';'"))
        };
        let spec = match pair.kind {
            PairKind::AIII { .. } => {
                let (a, b) = two()?;
                KParabolicSpec::Aiii(a.parse()?, b.parse()?)
            }
            PairKind::AI => KParabolicSpec::Ai(t.parse()?),
            PairKind::AII => KParabolicSpec::Aii(t.parse()?),
            PairKind::CI => KParabolicSpec::Ci(t.parse()?),
            PairKind::CII { .. } => {
                let (a, b) = two()?;
                KParabolicSpec::Cii(a.parse()?, b.parse()?)
            }
        };
        spec.validate(pair).map_err(|e| Error::parse(s, e.to_string()))?;
        Ok(spec)
    }

    pub fn validate(&self, pair: &SymmetricPairSpec) -> Result<()> {
        let n = pair.group.n;
        let ok = match (self, pair.kind) {
            (KParabolicSpec::Aiii(a, b), PairKind::AIII { p, q }) => a.size() == p && b.size() == q,
            (KParabolicSpec::Ai(a), PairKind::AI) => a.size() == n && a.is_palindrome(),
            (KParabolicSpec::Aii(a), PairKind::AII) => a.size() == n,
            (KParabolicSpec::Ci(a), PairKind::CI) => a.size() == n,
            (KParabolicSpec::Cii(a, b), PairKind::CII { p, q }) => a.rank() == p && b.rank() == q,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Mismatch(format!("{self} is not a parabolic of K for {pair}")))
        }
    }

    /// Whether this is all of `K`.
    pub fn is_whole(&self) -> bool {
        match self {
            KParabolicSpec::Aiii(a, b) => a.len() == 1 && b.len() == 1,
            KParabolicSpec::Ai(a) | KParabolicSpec::Ci(a) => a.len() == 1,
            KParabolicSpec::Aii(a) => !a.is_proper(),
            KParabolicSpec::Cii(a, b) => !a.is_proper() && !b.is_proper(),
        }
    }
}

impl fmt::Display for KParabolicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KParabolicSpec::Aiii(a, b) => write!(f, "{a};{b}"),
            KParabolicSpec::Ai(a) | KParabolicSpec::Ci(a) => a.fmt(f),
            KParabolicSpec::Aii(a) => a.fmt(f),
            KParabolicSpec::Cii(a, b) => write!(f, "{a};{b}"),
        }
    }
}

impl Serialize for KParabolicSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The standard shape in the conjugacy class of `p`.
///
/// An opposite type A parabolic of shape `λ` is conjugate to the standard one
/// of shape `reverse(λ)`; in type C the longest Weyl element is `-1`, so the
/// shape is unchanged.
pub fn class_shape(p: &ParabolicSpec) -> Shape {
    match (p.shape(), p.orientation()) {
        (Shape::A(c), Orientation::Opposite) => Shape::A(c.reversed()),
        (s, _) => s.clone(),
    }
}

/// A standard representative of the class of `θ(P)`.
pub fn theta_on_parabolic(pair: &SymmetricPairSpec, p: &ParabolicSpec) -> Result<ParabolicSpec> {
    pair.check(p)?;
    if pair.is_inner() {
        return Ok(p.clone());
    }
    let Shape::A(c) = class_shape(p) else {
        unreachable!("outer involutions only occur in type A");
    };
    Ok(ParabolicSpec::gl(c.reversed()))
}

/// Whether the matrix group `P` itself is preserved by `θ`.
pub fn is_theta_stable(pair: &SymmetricPairSpec, p: &ParabolicSpec) -> Result<bool> {
    pair.check(p)?;
    Ok(match pair.kind {
        // θ is conjugation by a diagonal matrix and P contains the diagonal torus.
        PairKind::AIII { .. } | PairKind::CI | PairKind::CII { .. } => true,
        // Inverse transpose swaps upper and lower block triangular matrices.
        PairKind::AI => p.shape().len() == 1,
        // The flag of P is sent to its perpendicular flag, which for the
        // antidiagonal form has the partial sums n - s_i.
        PairKind::AII => p.shape().as_a().is_some_and(Composition::is_palindrome),
    })
}

/// `Q = K ∩ P` for a `θ`-stable `P` in the fixed realization.
pub fn intersect_with_k(pair: &SymmetricPairSpec, p: &ParabolicSpec) -> Result<KParabolicSpec> {
    if !is_theta_stable(pair, p)? {
        return Err(Error::NotThetaStable(format!("{p} for {pair}")));
    }
    let blocks = p.shape().blocks();
    let opposite = p.orientation() == Orientation::Opposite;
    let orient = |c: Composition| if opposite { c.reversed() } else { c };
    match pair.kind {
        PairKind::AIII { p: pp, .. } => {
            let (b, c) = split_at_coordinate(&blocks, pp);
            Ok(KParabolicSpec::Aiii(
                orient(Composition::from_nonzero(&b)?),
                orient(Composition::from_nonzero(&c)?),
            ))
        }
        PairKind::AI => Ok(KParabolicSpec::Ai(Composition::whole(pair.group.n))),
        PairKind::AII => Ok(KParabolicSpec::Aii(SymplecticComposition::from_full(&blocks)?)),
        PairKind::CI => {
            let Shape::C(s) = p.shape() else { unreachable!() };
            let n = pair.group.n;
            let mut parts = s.left().to_vec();
            parts.push(n - s.isotropic_dims().last().copied().unwrap_or(0));
            Ok(KParabolicSpec::Ci(orient(Composition::from_nonzero(&parts)?)))
        }
        PairKind::CII { p: pp, q: qq } => {
            let Shape::C(s) = p.shape() else { unreachable!() };
            // The outer factor owns the first p coordinates of the isotropic part.
            let (b, c) = split_at_coordinate(s.left(), pp);
            Ok(KParabolicSpec::Cii(
                symplectic_from_split(&b, pp)?,
                symplectic_from_split(&c, qq)?,
            ))
        }
    }
}

/// Splits consecutive blocks at coordinate `cut`: `b_i` counts coordinates
/// of block `i` below `cut`.
fn split_at_coordinate(blocks: &[usize], cut: usize) -> (Vec<usize>, Vec<usize>) {
    let mut start = 0;
    let mut b = Vec::with_capacity(blocks.len());
    let mut c = Vec::with_capacity(blocks.len());
    for &a in blocks {
        let (lo, hi) = (start, start + a);
        let below = hi.min(cut) - lo.min(cut);
        b.push(below);
        c.push(a - below);
        start += a;
    }
    (b, c)
}

fn symplectic_from_split(left: &[usize], rank: usize) -> Result<SymplecticComposition> {
    let left: Vec<usize> = left.iter().copied().filter(|&x| x > 0).collect();
    let used: usize = left.iter().sum();
    let middle = (used < rank).then_some(2 * (rank - used));
    SymplecticComposition::new(left, middle)
}

/// A `θ`-stable parabolic `P'` up to conjugacy, with `K ∩ P'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StableParabolic {
    #[serde(serialize_with = "serialize_shape")]
    pub p_prime: ParabolicSpec,
    pub q: KParabolicSpec,
    /// For each isotropic (or ordinary) block of `P'`, how many of its
    /// coordinates lie in the first and second eigenspace or factor.
    pub split: Vec<(usize, usize)>,
}

fn serialize_shape<S: Serializer>(p: &ParabolicSpec, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p.shape())
}

impl fmt::Display for StableParabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P'=({})", self.p_prime.shape())?;
        if !self.split.is_empty() {
            f.write_str(" split ")?;
            for (i, (b, c)) in self.split.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{b}+{c}")?;
            }
        }
        write!(f, " Q=({})", self.q)
    }
}

fn splits(parts: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let mut out = vec![Vec::new()];
    for &a in parts {
        let mut next = Vec::with_capacity(out.len() * (a + 1));
        for s in &out {
            for b in 0..=a {
                let mut t = s.clone();
                t.push((b, a - b));
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Every class of `θ`-stable parabolics containing a `θ`-stable maximal torus,
/// described by which eigenspace (or factor) coordinates each block uses,
/// together with `K ∩ P'`. Sorted and free of duplicates.
pub fn stable_parabolics(pair: &SymmetricPairSpec) -> Vec<StableParabolic> {
    let n = pair.group.n;
    let mut out = Vec::new();
    match pair.kind {
        PairKind::AIII { p, .. } => {
            for a in Composition::all(n) {
                for split in splits(a.parts()) {
                    if split.iter().map(|x| x.0).sum::<usize>() != p {
                        continue;
                    }
                    let b: Vec<usize> = split.iter().map(|x| x.0).collect();
                    let c: Vec<usize> = split.iter().map(|x| x.1).collect();
                    out.push(StableParabolic {
                        p_prime: ParabolicSpec::gl(a.clone()),
                        q: KParabolicSpec::Aiii(
                            Composition::from_nonzero(&b).expect("p >= 1"),
                            Composition::from_nonzero(&c).expect("q >= 1"),
                        ),
                        split,
                    });
                }
            }
        }
        PairKind::AI | PairKind::AII => {
            for a in Composition::all(n).into_iter().filter(Composition::is_palindrome) {
                let q = if pair.kind == PairKind::AI {
                    KParabolicSpec::Ai(a.clone())
                } else {
                    match SymplecticComposition::from_full(a.parts()) {
                        Ok(s) => KParabolicSpec::Aii(s),
                        Err(_) => continue,
                    }
                };
                out.push(StableParabolic {
                    p_prime: ParabolicSpec::gl(a),
                    q,
                    split: Vec::new(),
                });
            }
        }
        PairKind::CI => {
            for s in SymplecticComposition::all(n) {
                for split in splits(s.left()) {
                    let mut parts: Vec<usize> = split.iter().map(|x| x.0).collect();
                    parts.push(s.middle().unwrap_or(0) / 2);
                    parts.extend(split.iter().rev().map(|x| x.1));
                    out.push(StableParabolic {
                        p_prime: ParabolicSpec::sp(s.clone()),
                        q: KParabolicSpec::Ci(Composition::from_nonzero(&parts).expect("n >= 1")),
                        split,
                    });
                }
            }
        }
        PairKind::CII { p, q } => {
            for s in SymplecticComposition::all(n) {
                for split in splits(s.left()) {
                    let bsum: usize = split.iter().map(|x| x.0).sum();
                    let csum: usize = split.iter().map(|x| x.1).sum();
                    if bsum > p || csum > q {
                        continue;
                    }
                    let b: Vec<usize> = split.iter().map(|x| x.0).collect();
                    let c: Vec<usize> = split.iter().map(|x| x.1).collect();
                    out.push(StableParabolic {
                        p_prime: ParabolicSpec::sp(s.clone()),
                        q: KParabolicSpec::Cii(
                            symplectic_from_split(&b, p).expect("valid split"),
                            symplectic_from_split(&c, q).expect("valid split"),
                        ),
                        split,
                    });
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
