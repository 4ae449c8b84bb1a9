use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClanSymbol {
    Plus,
    Minus,
    /// A matched pair; labels are numbered 1, 2, ... by first occurrence.
    Pair(u32),
}

/// A clan of signature `(p, q)`: a word in `+`, `-` and matched pairs with
/// `#plus - #minus = p - q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clan {
    symbols: Vec<ClanSymbol>,
}

impl Clan {
    /// Validates a word and relabels its pairs canonically.
    pub fn new(symbols: Vec<ClanSymbol>) -> Result<Self> {
        let mut order: Vec<u32> = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        let mut out = Vec::with_capacity(symbols.len());
        for s in symbols {
            match s {
                ClanSymbol::Pair(label) => {
                    let idx = match order.iter().position(|&l| l == label) {
                        Some(i) => i,
                        None => {
                            order.push(label);
                            counts.push(0);
                            order.len() - 1
                        }
                    };
                    counts[idx] += 1;
                    out.push(ClanSymbol::Pair(idx as u32 + 1));
                }
                other => out.push(other),
            }
        }
        if counts.iter().any(|&c| c != 2) {
            return Err(Error::invalid("every clan pair label must occur exactly twice"));
        }
        Ok(Clan { symbols: out })
    }

    pub fn symbols(&self) -> &[ClanSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn pair_count(&self) -> usize {
        self.symbols
            .iter()
            .filter(|s| matches!(s, ClanSymbol::Pair(_)))
            .count()
            / 2
    }

    /// `(p, q)` with `p + q = len` and `p - q = #plus - #minus`.
    pub fn signature(&self) -> (usize, usize) {
        let plus = self.symbols.iter().filter(|&&s| s == ClanSymbol::Plus).count();
        let minus = self.symbols.iter().filter(|&&s| s == ClanSymbol::Minus).count();
        let k = self.pair_count();
        (plus + k, minus + k)
    }
}

impl fmt::Display for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match s {
                ClanSymbol::Plus => f.write_str("+")?,
                ClanSymbol::Minus => f.write_str("-")?,
                ClanSymbol::Pair(l) => write!(f, "{l}")?,
            }
        }
        f.write_str(")")
    }
}

impl Serialize for Clan {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All clans of signature `(p, q)`, sorted.
pub fn enumerate_clans(p: usize, q: usize) -> Result<Vec<Clan>> {
    let n = p + q;
    if n == 0 {
        return Err(Error::invalid("clan signature must have p + q >= 1"));
    }

    struct State {
        cur: Vec<ClanSymbol>,
        open: Vec<u32>,
        next_label: u32,
        out: Vec<Clan>,
    }

    // Positions are filled left to right: a new pair opens, an open pair
    // closes, or a sign is placed. `plus`/`minus` count signs still to place.
    fn rec(st: &mut State, n: usize, plus: usize, minus: usize) {
        let remaining = n - st.cur.len();
        if remaining == 0 {
            if st.open.is_empty() && plus == 0 && minus == 0 {
                st.out.push(Clan {
                    symbols: st.cur.clone(),
                });
            }
            return;
        }
        if plus + minus + st.open.len() > remaining {
            return;
        }
        if plus > 0 {
            st.cur.push(ClanSymbol::Plus);
            rec(st, n, plus - 1, minus);
            st.cur.pop();
        }
        if minus > 0 {
            st.cur.push(ClanSymbol::Minus);
            rec(st, n, plus, minus - 1);
            st.cur.pop();
        }
        for i in 0..st.open.len() {
            let label = st.open.remove(i);
            st.cur.push(ClanSymbol::Pair(label));
            rec(st, n, plus, minus);
            st.cur.pop();
            st.open.insert(i, label);
        }
        // Opening a pair uses one plus and one minus of the signature.
        if plus > 0 && minus > 0 {
            let label = st.next_label;
            st.next_label += 1;
            st.open.push(label);
            st.cur.push(ClanSymbol::Pair(label));
            rec(st, n, plus - 1, minus - 1);
            st.cur.pop();
            st.open.pop();
            st.next_label -= 1;
        }
    }

    let mut st = State {
        cur: Vec::with_capacity(n),
        open: Vec::new(),
        next_label: 1,
        out: Vec::new(),
    };
    rec(&mut st, n, p, q);
    let mut out = st.out;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let c11 = enumerate_clans(1, 1).unwrap();
        assert_eq!(c11.len(), 3);
        let shown: Vec<String> = c11.iter().map(ToString::to_string).collect();
        assert!(shown.contains(&"(+,-)".to_string()));
        assert!(shown.contains(&"(-,+)".to_string()));
        assert!(shown.contains(&"(1,1)".to_string()));
        assert_eq!(enumerate_clans(2, 1).unwrap().len(), 6);
        assert_eq!(enumerate_clans(1, 0).unwrap().len(), 1);
        assert_eq!(enumerate_clans(2, 2).unwrap().len(), 21);
        assert_eq!(enumerate_clans(3, 1).unwrap().len(), 10);
        assert!(enumerate_clans(0, 0).is_err());
    }

    #[test]
    fn signatures_and_labels() {
        for (p, q) in [(2, 2), (3, 2), (1, 3)] {
            for c in enumerate_clans(p, q).unwrap() {
                assert_eq!(c.signature(), (p, q));
                assert_eq!(Clan::new(c.symbols().to_vec()).unwrap(), c);
            }
        }
    }

    #[test]
    fn relabels_by_first_occurrence() {
        use ClanSymbol::*;
        let c = Clan::new(vec![Pair(7), Pair(3), Pair(7), Pair(3)]).unwrap();
        assert_eq!(c.symbols(), &[Pair(1), Pair(2), Pair(1), Pair(2)]);
        assert!(Clan::new(vec![Pair(1), Plus]).is_err());
    }
}
