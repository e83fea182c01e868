use std::fmt;

use super::partition::Partition;

/// Standard Young tableau; entries are `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    // position[k - 1] = (row, col) of entry k
    position: Vec<(usize, usize)>,
}

impl StandardTableau {
    /// Build from rows; `None` unless the filling is standard.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).ok()?;
        let n = shape.size();
        let mut position = vec![(usize::MAX, usize::MAX); n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n || position[v - 1].0 != usize::MAX {
                    return None;
                }
                position[v - 1] = (r, c);
                if c > 0 && row[c - 1] >= v {
                    return None;
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return None;
                }
            }
        }
        Some(StandardTableau { shape, rows, position })
    }

    /// All standard tableaux of the shape, in last-letter order: sorted by
    /// the row of `n`, then the row of `n - 1`, and so on.
    pub fn all(shape: &Partition) -> Vec<StandardTableau> {
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
        fill(shape, 1, &mut rows, &mut out);
        out.sort_by_cached_key(|t| t.last_letter_key());
        out
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.position.len()
    }

    /// `(row, col)` of entry `k`, 0-based.
    pub fn position(&self, k: usize) -> (usize, usize) {
        self.position[k - 1]
    }

    pub fn row_of(&self, k: usize) -> usize {
        self.position(k).0
    }

    /// `col - row` of the box holding `k`.
    pub fn content(&self, k: usize) -> i64 {
        let (r, c) = self.position(k);
        c as i64 - r as i64
    }

    pub fn last_letter_key(&self) -> Vec<usize> {
        (1..=self.size()).rev().map(|k| self.row_of(k)).collect()
    }

    /// Exchange `j` and `j + 1`, if the result is still standard.
    pub fn swap(&self, j: usize) -> Option<StandardTableau> {
        let (a, b) = (self.position(j), self.position(j + 1));
        if a.0 == b.0 || a.1 == b.1 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[a.0][a.1] = j + 1;
        rows[b.0][b.1] = j;
        StandardTableau::from_rows(rows)
    }
}

fn fill(shape: &Partition, next: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
    if next > shape.size() {
        out.push(StandardTableau::from_rows(rows.clone()).expect("standard by construction"));
        return;
    }
    for r in 0..rows.len() {
        let len = rows[r].len();
        let fits_row = len < shape.part(r);
        let fits_col = r == 0 || rows[r - 1].len() > len;
        if fits_row && fits_col {
            rows[r].push(next);
            fill(shape, next + 1, rows, out);
            rows[r].pop();
        }
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}
