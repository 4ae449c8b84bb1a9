use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use serde::{Serialize, Serializer};

use super::partition::Partition;
use crate::error::{Error, Result};

/// Multiplicities of irreducible constituents, keyed by highest weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrDecomposition<T: Ord> {
    terms: BTreeMap<T, u64>,
}

impl<T: Ord> Default for LrDecomposition<T> {
    fn default() -> Self {
        LrDecomposition { terms: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> LrDecomposition<T> {
    pub fn terms(&self) -> &BTreeMap<T, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, target: &T) -> u64 {
        self.terms.get(target).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&m| m == 1)
    }

    /// The first constituent with multiplicity above one.
    pub fn first_repeated(&self) -> Option<(&T, u64)> {
        self.terms.iter().find(|(_, &m)| m > 1).map(|(t, &m)| (t, m))
    }

    fn add(&mut self, target: T, m: u64) {
        *self.terms.entry(target).or_insert(0) += m;
    }
}

#[derive(Serialize)]
struct Term<'a, T> {
    target: &'a T,
    multiplicity: u64,
}

impl<T: Ord + Serialize> Serialize for LrDecomposition<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(target, &multiplicity)| Term { target, multiplicity }))
    }
}

/// A pair `(μ, ν)` of highest weights for `GL_p × GL_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviWeight(pub Partition, pub Partition);

impl Serialize for LeviWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&format_args!("({})⊗({})", self.0, self.1))
    }
}

/// Enumerates Littlewood–Richardson tableaux row by row. A tableau is
/// recorded by the count `m[i][j]` of entries `j` in row `i`; rows are weakly
/// increasing, columns strictly increasing, and the reverse reading word is
/// a lattice word.
struct LrSearch<'a> {
    inner: &'a Partition,
    /// Fixed outer shape, or free with at most `max_rows` rows.
    outer: Option<&'a Partition>,
    /// Fixed content, or free with labels `1..=labels`.
    content: Option<&'a Partition>,
    labels: usize,
    max_rows: usize,
}

impl LrSearch<'_> {
    fn run(&self, mut visit: impl FnMut(&[u32], &[u32])) {
        let labels = self.content.map_or(self.labels, Partition::rows);
        let mut counts = vec![0u32; labels];
        let mut shape = Vec::new();
        let prev = vec![0u32; labels];
        self.row(0, &prev, u32::MAX, &mut counts, &mut shape, &mut visit);
    }

    fn remaining(&self, counts: &[u32]) -> u32 {
        match self.content {
            Some(c) => c.size() - counts.iter().sum::<u32>(),
            None => 0,
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn row(
        &self,
        i: usize,
        prev: &[u32],
        prev_inner: u32,
        counts: &mut Vec<u32>,
        shape: &mut Vec<u32>,
        visit: &mut impl FnMut(&[u32], &[u32]),
    ) {
        let rows_total = match self.outer {
            Some(o) => o.rows(),
            None => self.max_rows,
        };
        let a = self.inner.part(i);
        let past_inner = i >= self.inner.rows();
        let finished_free = self.outer.is_none() && past_inner && self.remaining(counts) == 0;
        if i >= rows_total || finished_free {
            if past_inner && self.remaining(counts) == 0 {
                visit(shape, counts);
            }
            return;
        }
        let target = self.outer.map(|o| o.part(i).checked_sub(a));
        if let Some(None) = target {
            return;
        }
        let target = target.flatten();
        let labels = counts.len();
        let mut m = vec![0u32; labels];
        self.fill(i, 0, a, 0, target, prev, prev_inner, &mut m, counts, shape, visit);
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        &self,
        i: usize,
        j: usize,
        a: u32,
        used: u32,
        target: Option<u32>,
        prev: &[u32],
        prev_inner: u32,
        m: &mut Vec<u32>,
        counts: &mut Vec<u32>,
        shape: &mut Vec<u32>,
        visit: &mut impl FnMut(&[u32], &[u32]),
    ) {
        let labels = m.len();
        if j == labels || j > i {
            if target.is_some_and(|t| t != used) {
                return;
            }
            for (c, &x) in counts.iter_mut().zip(m.iter()) {
                *c += x;
            }
            shape.push(a + used);
            let row_m = m.clone();
            self.row(i + 1, &row_m, a, counts, shape, visit);
            shape.pop();
            for (c, &x) in counts.iter_mut().zip(m.iter()) {
                *c -= x;
            }
            return;
        }
        let mut hi = u32::MAX;
        if let Some(t) = target {
            hi = hi.min(t - used);
        }
        if let Some(c) = self.content {
            hi = hi.min(c.part(j) - counts[j]);
        }
        if j > 0 {
            // Lattice condition on the reverse reading word.
            hi = hi.min(counts[j - 1] - counts[j]);
        }
        if i > 0 {
            // Column strictness against the row above.
            let above: u32 = prev_inner + prev[..j].iter().sum::<u32>();
            let here = a + used;
            if above < here {
                return;
            }
            hi = hi.min(above - here);
        }
        if hi == u32::MAX {
            unreachable!("unbounded row in Littlewood–Richardson search");
        }
        for x in 0..=hi {
            m[j] = x;
            self.fill(i, j + 1, a, used + x, target, prev, prev_inner, m, counts, shape, visit);
        }
        m[j] = 0;
    }
}

type LrKey = (Partition, Partition, Partition);

fn memo() -> &'static RwLock<HashMap<LrKey, u64>> {
    static MEMO: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `c^ν_{λμ}`, the number of LR tableaux of shape `ν/λ` and content `μ`.
/// Zero when the sizes do not add up.
pub fn lr_coefficient(outer: &Partition, inner1: &Partition, inner2: &Partition) -> u64 {
    if outer.size() != inner1.size() + inner2.size() || !outer.contains(inner1) || !outer.contains(inner2) {
        return 0;
    }
    let key = (outer.clone(), inner1.clone(), inner2.clone());
    if let Some(&c) = memo().read().expect("memo lock").get(&key) {
        return c;
    }
    let mut count = 0u64;
    LrSearch {
        inner: inner1,
        outer: Some(outer),
        content: Some(inner2),
        labels: 0,
        max_rows: outer.rows(),
    }
    .run(|_, _| count += 1);
    memo().write().expect("memo lock").insert(key, count);
    count
}

/// `V_λ ⊗ V_μ` for `GL_n`.
pub fn tensor_decompose(lambda: &Partition, mu: &Partition, n: usize) -> Result<LrDecomposition<Partition>> {
    lambda.check_rows(n)?;
    mu.check_rows(n)?;
    let mut out = LrDecomposition::default();
    LrSearch {
        inner: lambda,
        outer: None,
        content: Some(mu),
        labels: 0,
        max_rows: n,
    }
    .run(|shape, _| {
        let nu = Partition::new(shape.to_vec()).expect("LR shapes are partitions");
        out.add(nu, 1);
    });
    Ok(out)
}

/// `V_λ` of `GL_{p+q}` restricted to `GL_p × GL_q`.
pub fn restrict_to_levi(lambda: &Partition, p: usize, q: usize) -> Result<LrDecomposition<LeviWeight>> {
    if p == 0 || q == 0 {
        return Err(Error::invalid("both Levi factors need positive rank"));
    }
    lambda.check_rows(p + q)?;
    let mut out = LrDecomposition::default();
    for mu in lambda.subpartitions(p) {
        LrSearch {
            inner: &mu,
            outer: Some(lambda),
            content: None,
            labels: q,
            max_rows: lambda.rows(),
        }
        .run(|_, content| {
            let nu = Partition::new(content.to_vec()).expect("lattice contents are partitions");
            out.add(LeviWeight(mu.clone(), nu), 1);
        });
    }
    Ok(out)
}

/// Dimension of the `GL_n` irreducible with highest weight `λ`.
pub fn weyl_dim_gl(lambda: &Partition, n: usize) -> Result<u128> {
    lambda.check_rows(n)?;
    let l = lambda.padded(n);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            num *= u128::from(l[i] - l[j]) + (j - i) as u128;
            den *= (j - i) as u128;
        }
    }
    Ok(num / den)
}
