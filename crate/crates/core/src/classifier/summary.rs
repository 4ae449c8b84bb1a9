use serde::Serialize;

use crate::error::{Error, Result};
use crate::liecomb::pair::class_shape;
use crate::liecomb::{
    Composition, KParabolicSpec, PairKind, ParabolicSpec, Shape, SymmetricPairSpec,
    SymplecticComposition,
};

/// A row of the summary tables of finite type double flag varieties.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SummaryRow {
    /// Table and row, e.g. `AIII.2`.
    pub citation: String,
    pub p: &'static str,
    pub q: &'static str,
}

fn row(table: &str, index: usize, p: &'static str, q: &'static str) -> SummaryRow {
    SummaryRow {
        citation: format!("{table}.{index}"),
        p,
        q,
    }
}

/// Every summary table row covering `(P, Q)`. The tables are not exhaustive,
/// so an empty answer says nothing about infiniteness.
pub fn summary_lookup(
    pair: &SymmetricPairSpec,
    p: &ParabolicSpec,
    q: &KParabolicSpec,
) -> Result<Vec<SummaryRow>> {
    if p.group() != pair.group() {
        return Err(Error::Mismatch(format!("{p} is not a parabolic of {}", pair.group())));
    }
    q.validate(pair)?;
    let n = pair.group().n;
    let shape = class_shape(p);
    let len = shape.len();
    let mut out = Vec::new();
    match (pair.kind(), q) {
        (PairKind::AI, KParabolicSpec::Ai(qc)) if n >= 3 => {
            if len == 2 {
                out.push(row("AI", 1, "maximal", "arbitrary"));
            }
            if len == 3 && n.is_multiple_of(2) && qc.parts() == [n / 2, n / 2] {
                out.push(row("AI", 2, "(λ1,λ2,λ3)", "Siegel"));
            }
        }
        (PairKind::AII, KParabolicSpec::Aii(qc)) if n >= 4 => {
            if len == 2 {
                out.push(row("AII", 1, "maximal", "arbitrary"));
            }
            if len == 3 && qc.is_siegel() {
                out.push(row("AII", 2, "(λ1,λ2,λ3)", "Siegel"));
            }
        }
        (PairKind::AIII { p: pp, q: qq }, KParabolicSpec::Aiii(q1, q2)) => {
            let whole1 = q1.len() == 1;
            let whole2 = q2.len() == 1;
            if q1.is_mirabolic() && whole2 {
                out.push(row("AIII", 1, "arbitrary", "mirabolic × GL_q"));
            }
            if whole1 && q2.is_mirabolic() {
                out.push(row("AIII", 2, "arbitrary", "GL_p × mirabolic"));
            }
            if len == 2 {
                out.push(row("AIII", 3, "maximal", "arbitrary"));
            }
            if len == 3 && whole1 && q2.len() == 2 {
                out.push(row("AIII", 4, "(λ1,λ2,λ3)", "GL_p × maximal"));
            }
            if len == 3 && q1.len() == 2 && whole2 {
                out.push(row("AIII", 5, "(λ1,λ2,λ3)", "maximal × GL_q"));
            }
            // The last two rows are stated for the smaller factor; the pair is
            // symmetric in p and q.
            if pp == 1 || qq == 1 {
                out.push(row("AIII", 6, "arbitrary", "GL_1 × arbitrary"));
            }
            let small_two = |a: usize, qa: &Composition, qb: &Composition| {
                a == 2 && qa.len() == 1 && qb.len() == 2
            };
            if small_two(pp, q1, q2) || small_two(qq, q2, q1) {
                out.push(row("AIII", 7, "arbitrary", "GL_2 × maximal"));
            }
        }
        (PairKind::CI, KParabolicSpec::Ci(_)) if n >= 2 => {
            push_type_c_rows(&shape, n, &mut out, "CI");
        }
        (PairKind::CII { .. }, KParabolicSpec::Cii(q1, q2)) => {
            if let Shape::C(s) = &shape {
                if s.is_siegel() {
                    out.push(row("CII", 1, "Siegel", "arbitrary"));
                }
                let maximal_non_siegel = s.left().len() == 1 && s.middle().is_some();
                if maximal_non_siegel && q1.is_siegel() && q2.is_siegel() {
                    out.push(row("CII", 2, "(m,2n-2m,m)", "Siegel × Siegel"));
                }
            }
        }
        _ => {}
    }
    Ok(out)
}

fn push_type_c_rows(shape: &Shape, n: usize, out: &mut Vec<SummaryRow>, table: &str) {
    let Shape::C(s) = shape else { return };
    if s.is_siegel() {
        out.push(row(table, 1, "Siegel", "arbitrary"));
    }
    if let Ok(line) = SymplecticComposition::new(vec![1], Some(2 * n - 2)) {
        if *s == line {
            out.push(row(table, 2, "(1,2n-2,1)", "arbitrary"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(s: &str) -> ParabolicSpec {
        ParabolicSpec::gl(s.parse().unwrap())
    }

    #[test]
    fn examples() {
        let aii = SymmetricPairSpec::aii(4).unwrap();
        let rows = summary_lookup(&aii, &gl("1,3"), &KParabolicSpec::borel(&aii)).unwrap();
        assert_eq!(rows[0].citation, "AII.1");
        let ci = SymmetricPairSpec::ci(2).unwrap();
        let siegel = ParabolicSpec::sp(SymplecticComposition::siegel(2));
        let rows = summary_lookup(&ci, &siegel, &KParabolicSpec::borel(&ci)).unwrap();
        assert_eq!(rows[0].citation, "CI.1");
        let ai = SymmetricPairSpec::ai(3).unwrap();
        assert!(summary_lookup(&ai, &gl("1,1,1"), &KParabolicSpec::borel(&ai)).unwrap().is_empty());
    }

    #[test]
    fn aiii_rows() {
        let pair = SymmetricPairSpec::aiii(4, 2).unwrap();
        let q = KParabolicSpec::parse(&pair, "2,2;2").unwrap();
        let rows = summary_lookup(&pair, &gl("1,1,1,1,1,1"), &q).unwrap();
        let cites: Vec<_> = rows.iter().map(|r| r.citation.as_str()).collect();
        assert_eq!(cites, vec!["AIII.7"]);
        let pair = SymmetricPairSpec::aiii(3, 2).unwrap();
        let q = KParabolicSpec::parse(&pair, "2,1;2").unwrap();
        let rows = summary_lookup(&pair, &gl("2,2,1"), &q).unwrap();
        let cites: Vec<_> = rows.iter().map(|r| r.citation.as_str()).collect();
        assert_eq!(cites, vec!["AIII.1", "AIII.5", "AIII.7"]);
    }

    #[test]
    fn cii_rows() {
        let pair = SymmetricPairSpec::cii(2, 1).unwrap();
        let q = KParabolicSpec::parse(&pair, "2,2;1,1").unwrap();
        let p = ParabolicSpec::sp("2,2,2".parse().unwrap());
        let rows = summary_lookup(&pair, &p, &q).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].citation, "CII.2");
    }
}
