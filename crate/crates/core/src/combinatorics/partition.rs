use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer partition, parts weakly decreasing and positive.
///
/// The derived order is lexicographic on the parts, which is the order used
/// for every list of partitions this crate returns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidInput(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Drop zero parts and sort; any multiset of sizes is accepted.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`, the one-row shape.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// `(1^n)`, the one-column shape.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `r` (0-based), zero beyond the last row.
    pub fn part(&self, r: usize) -> usize {
        self.0.get(r).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Boxes as `(row, col)`, 0-based, row by row.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect()
    }

    pub fn hook_length(&self, r: usize, c: usize) -> usize {
        let arm = self.part(r) - c - 1;
        let leg = self.0.iter().skip(r + 1).filter(|&&p| p > c).count();
        arm + leg + 1
    }

    /// All partitions of `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in 1..=rest.min(max) {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions obtained by removing `i` boxes, at most one per row.
    pub fn vertical_strips(&self, i: usize) -> Vec<Partition> {
        let rows = self.len();
        let mut out = Vec::new();
        if i > rows {
            return out;
        }
        let mut chosen = Vec::with_capacity(i);
        self.strip_rec(0, i, &mut chosen, &mut out);
        out.sort();
        out
    }

    fn strip_rec(&self, start: usize, left: usize, chosen: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            let mut parts = self.0.clone();
            for &r in chosen.iter() {
                parts[r] -= 1;
            }
            if parts.windows(2).all(|w| w[0] >= w[1]) {
                parts.retain(|&p| p > 0);
                out.push(Partition(parts));
            }
            return;
        }
        for r in start..self.len() {
            if self.len() - r < left {
                break;
            }
            chosen.push(r);
            self.strip_rec(r + 1, left - 1, chosen, out);
            chosen.pop();
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Validate a composition of `n`: positive parts summing to `n`.
pub fn check_composition(n: usize, parts: &[usize]) -> Result<()> {
    if parts.iter().sum::<usize>() != n || parts.iter().any(|&p| p == 0) {
        return Err(Error::InvalidComposition { n, parts: parts.to_vec() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(p("3,2,2").parts(), &[3, 2, 2]);
        assert_eq!(p("3,2,2").to_string(), "3,2,2");
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(p("∅").to_string(), "∅");
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn vertical_strip_examples() {
        assert_eq!(p("2,2").vertical_strips(1), vec![p("2,1")]);
        assert_eq!(p("2,2").vertical_strips(2), vec![p("1,1")]);
        assert!(p("3").vertical_strips(2).is_empty());
        assert_eq!(p("1,1,1").vertical_strips(3), vec![Partition::empty()]);
        assert_eq!(p("2,1").vertical_strips(1), vec![p("1,1"), p("2")]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(p("3,1").transpose(), p("2,1,1"));
    }
}
