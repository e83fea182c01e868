use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::partition::{check_composition, Partition};
use crate::error::{Error, Result};

/// Permutation of `{0, .., n-1}` in one-line notation: `w(i) = word[i]`.
///
/// Products compose as functions, `(u * v)(i) = u(v(i))`. The simple
/// reflection `s_j` (1-based, `1 <= j < n`) swaps `j-1` and `j`.
/// Displayed 1-based, e.g. `"2 1 4 3"`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// 0-based one-line word; must be a bijection.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v >= n || seen[v] {
                return Err(Error::InvalidInput(format!("{word:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    /// 1-based one-line word, as printed.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        if word.contains(&0) {
            return Err(Error::InvalidInput(format!("{word:?} is not 1-based")));
        }
        Permutation::new(word.iter().map(|v| v - 1).collect())
    }

    /// The simple reflection `s_j`.
    pub fn simple(n: usize, j: usize) -> Self {
        assert!(j >= 1 && j < n, "s_{j} is not a simple reflection of S_{n}");
        let mut w = Permutation::identity(n);
        w.0.swap(j - 1, j);
        w
    }

    /// Product `s_{a_1} s_{a_2} ... s_{a_k}` of simple reflections.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut w = Permutation::identity(n);
        for &j in word {
            w = w.mul_simple_right(j);
        }
        w
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// `s_j * self`: swap the values `j-1` and `j`.
    pub fn mul_simple_left(&self, j: usize) -> Self {
        let (a, b) = (j - 1, j);
        Permutation(
            self.0
                .iter()
                .map(|&v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// `self * s_j`: swap the positions `j-1` and `j`.
    pub fn mul_simple_right(&self, j: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(j - 1, j);
        Permutation(w)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// True when `l(s_j w) < l(w)`.
    pub fn has_left_descent(&self, j: usize) -> bool {
        let inv = self.inverse();
        inv.0[j - 1] > inv.0[j]
    }

    /// True when `l(w s_j) < l(w)`.
    pub fn has_right_descent(&self, j: usize) -> bool {
        self.0[j - 1] > self.0[j]
    }

    /// Reduced word `[a_1, .., a_l]` with `s_{a_1} ... s_{a_l} = w`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while let Some(j) = (1..w.n()).find(|&j| w.has_right_descent(j)) {
            word.push(j);
            w = w.mul_simple_right(j);
        }
        word.reverse();
        word
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All permutations of `n` letters in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    pub fn longest(n: usize) -> Self {
        Permutation((0..n).rev().collect())
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.n()];
        let mut lens = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    /// `w x 1` in `S_{n + extra}`: acts on the first letters.
    pub fn embed_front(&self, extra: usize) -> Self {
        let mut w = self.0.clone();
        w.extend(self.n()..self.n() + extra);
        Permutation(w)
    }

    /// `1 x w` in `S_{extra + n}`: acts on the last letters.
    pub fn embed_tail(&self, extra: usize) -> Self {
        let mut w: Vec<usize> = (0..extra).collect();
        w.extend(self.0.iter().map(|v| v + extra));
        Permutation(w)
    }

    /// Permutation of the coordinates of `x`: `(w x)_{w(i)} = x_i`.
    pub fn act_on<T: Clone>(&self, x: &[T]) -> Vec<T> {
        let mut out = x.to_vec();
        for (i, v) in x.iter().enumerate() {
            out[self.0[i]] = v.clone();
        }
        out
    }
}

/// Minimal length representatives of the left cosets `w S_parts`.
///
/// These are the permutations increasing on each block of consecutive
/// positions; returned in lexicographic order.
pub fn min_coset_reps(n: usize, parts: &[usize]) -> Result<Vec<Permutation>> {
    check_composition(n, parts)?;
    let starts = block_starts(parts);
    Ok(Permutation::all(n)
        .into_iter()
        .filter(|w| (1..n).filter(|j| !starts.contains(j)).all(|j| w.0[j - 1] < w.0[j]))
        .collect())
}

fn block_starts(parts: &[usize]) -> Vec<usize> {
    let mut starts = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for &p in parts {
        starts.push(acc);
        acc += p;
    }
    starts
}

/// Factor `w = u * v` with `u` a minimal coset representative and `v` in the
/// Young subgroup of `parts`; lengths add.
pub fn coset_factor(w: &Permutation, parts: &[usize]) -> (Permutation, Permutation) {
    let mut u = w.0.clone();
    let mut start = 0;
    for &p in parts {
        u[start..start + p].sort_unstable();
        start += p;
    }
    let u = Permutation(u);
    let v = u.inverse().compose(w);
    (u, v)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| (v + 1).to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(&word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
