//! Young diagrams, standard tableaux, classes and axial distances.
//!
//! Boxes are addressed `(row, column)`, both 1-based. Standard tableaux of a
//! shape are always listed in one canonical order: lexicographic in the
//! sequence of rows holding `n, n-1, ..., 2`. That order fixes the basis of
//! every representation matrix built from them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `n`, stored as weakly decreasing row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.contains(&0) {
            return Err(Error::InvalidInput("diagram rows must be positive".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "diagram rows {rows:?} are not weakly decreasing"
            )));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of boxes.
    pub fn n(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    pub fn transpose(&self) -> YoungDiagram {
        let cols = (1..=self.rows[0])
            .map(|j| self.rows.iter().filter(|&&r| r >= j).count())
            .collect();
        YoungDiagram { rows: cols }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.transpose() == *self
    }

    /// Rows (1-based) whose last box is a removable corner.
    fn corner_rows(&self) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&i| i + 1 == self.rows.len() || self.rows[i] > self.rows[i + 1])
            .map(|i| i + 1)
            .collect()
    }

    fn remove_box(&self, row: usize) -> Option<YoungDiagram> {
        let mut rows = self.rows.clone();
        rows[row - 1] -= 1;
        if rows[row - 1] == 0 {
            rows.pop();
        }
        (!rows.is_empty()).then_some(YoungDiagram { rows })
    }

    /// Diagrams obtained by removing one corner box, top corner first.
    pub fn predecessors(&self) -> Vec<YoungDiagram> {
        self.corner_rows()
            .into_iter()
            .filter_map(|r| self.remove_box(r))
            .collect()
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    /// Parses `"3,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad diagram {s:?}")))?;
        YoungDiagram::new(rows)
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn enumerate_diagrams(n: usize) -> Vec<YoungDiagram> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if rest == 0 {
            out.push(YoungDiagram { rows: prefix.clone() });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// A standard filling of a Young diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: YoungDiagram,
    /// `positions[k - 1]` is the box `(row, column)` holding `k`.
    positions: Vec<(usize, usize)>,
}

impl StandardTableau {
    /// Builds a tableau from its rows of entries, checking standardness.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = YoungDiagram::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.n();
        let mut positions = vec![(0, 0); n];
        for (i, row) in rows.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                if k == 0 || k > n || positions[k - 1] != (0, 0) {
                    return Err(Error::InvalidInput(format!("entries must be a permutation of 1..{n}")));
                }
                positions[k - 1] = (i + 1, j + 1);
            }
        }
        let t = StandardTableau { shape, positions };
        let entry = |i: usize, j: usize| rows[i - 1][j - 1];
        for (i, row) in rows.iter().enumerate() {
            for j in 1..=row.len() {
                let r = i + 1;
                if j > 1 && entry(r, j - 1) >= entry(r, j) {
                    return Err(Error::InvalidInput("rows must increase".into()));
                }
                if r > 1 && entry(r - 1, j) >= entry(r, j) {
                    return Err(Error::InvalidInput("columns must increase".into()));
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.positions.len()
    }

    /// Box `(row, column)` holding `k`.
    pub fn position(&self, k: usize) -> (usize, usize) {
        self.positions[k - 1]
    }

    /// Entry in box `(row, column)`.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.positions
            .iter()
            .position(|&p| p == (row, col))
            .map(|idx| idx + 1)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = self.shape.rows.iter().map(|&len| vec![0; len]).collect();
        for (idx, &(i, j)) in self.positions.iter().enumerate() {
            rows[i - 1][j - 1] = idx + 1;
        }
        rows
    }

    /// Class `j - i` of the box holding `k`.
    pub fn class(&self, k: usize) -> i64 {
        let (i, j) = self.position(k);
        j as i64 - i as i64
    }

    /// All classes, indexed by entry.
    pub fn classes(&self) -> Vec<i64> {
        (1..=self.n()).map(|k| self.class(k)).collect()
    }

    /// Axial distance `class(k) - class(l)`.
    pub fn axial_distance(&self, k: usize, l: usize) -> i64 {
        self.class(k) - self.class(l)
    }

    pub fn same_row(&self, k: usize, l: usize) -> bool {
        self.position(k).0 == self.position(l).0
    }

    pub fn same_column(&self, k: usize, l: usize) -> bool {
        self.position(k).1 == self.position(l).1
    }

    /// `s_i . T`: swaps the entries `i` and `i + 1`; `None` when the result
    /// is not standard (they share a row or a column).
    pub fn apply_transposition(&self, i: usize) -> Option<StandardTableau> {
        if i == 0 || i >= self.n() || self.same_row(i, i + 1) || self.same_column(i, i + 1) {
            return None;
        }
        let mut positions = self.positions.clone();
        positions.swap(i - 1, i);
        Some(StandardTableau {
            shape: self.shape.clone(),
            positions,
        })
    }

    pub fn transpose(&self) -> StandardTableau {
        StandardTableau {
            shape: self.shape.transpose(),
            positions: self.positions.iter().map(|&(i, j)| (j, i)).collect(),
        }
    }

    /// Rows of `n, n-1, ..., 2`; sorting by this key gives the canonical order.
    pub fn canonical_key(&self) -> Vec<usize> {
        self.positions.iter().skip(1).rev().map(|&(i, _)| i).collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    /// Parses `"1,2/3"`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad tableau {s:?}")))?;
        StandardTableau::from_rows(rows)
    }
}

/// All standard tableaux of shape `shape`, in canonical order.
pub fn enumerate_standard_tableaux(shape: &YoungDiagram) -> Vec<StandardTableau> {
    // place n, n-1, ... into removable corners; visiting corners by
    // increasing row yields the canonical key order directly
    fn rec(shape: &YoungDiagram, k: usize, positions: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if k == 1 {
            positions[0] = (1, 1);
            out.push(positions.clone());
            return;
        }
        for row in shape.corner_rows() {
            positions[k - 1] = (row, shape.rows[row - 1]);
            let smaller = shape.remove_box(row).expect("k > 1 leaves a box");
            rec(&smaller, k - 1, positions, out);
        }
    }
    let n = shape.n();
    let mut raw = Vec::new();
    rec(shape, n, &mut vec![(0, 0); n], &mut raw);
    raw.into_iter()
        .map(|positions| StandardTableau {
            shape: shape.clone(),
            positions,
        })
        .collect()
}

/// Lookup from tableau to its index in the canonical basis.
pub fn basis_index(basis: &[StandardTableau]) -> HashMap<StandardTableau, usize> {
    basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect()
}

/// Splits `STab(shape)` by whether 2 sits right of 1 (`plus`) or below it (`minus`).
pub fn stab_split(shape: &YoungDiagram) -> (Vec<StandardTableau>, Vec<StandardTableau>) {
    enumerate_standard_tableaux(shape)
        .into_iter()
        .partition(|t| t.n() < 2 || t.position(2) == (1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn t(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    /// Brute force: every permutation of 1..n placed in reading order, kept
    /// when standard.
    fn brute_force_count(shape: &YoungDiagram) -> usize {
        fn perms(items: Vec<usize>) -> Vec<Vec<usize>> {
            if items.len() <= 1 {
                return vec![items];
            }
            let mut out = Vec::new();
            for i in 0..items.len() {
                let mut rest = items.clone();
                let head = rest.remove(i);
                for mut p in perms(rest) {
                    p.insert(0, head);
                    out.push(p);
                }
            }
            out
        }
        let n = shape.n();
        perms((1..=n).collect())
            .into_iter()
            .filter(|p| {
                let mut it = p.iter().copied();
                let rows = shape
                    .rows()
                    .iter()
                    .map(|&len| (&mut it).take(len).collect())
                    .collect();
                StandardTableau::from_rows(rows).is_ok()
            })
            .count()
    }

    #[test]
    fn diagrams_in_reverse_lex_order() {
        assert_eq!(enumerate_diagrams(3), vec![d("3"), d("2,1"), d("1,1,1")]);
        assert_eq!(enumerate_diagrams(1), vec![d("1")]);
        // partition numbers p(1..=8)
        let p = [1, 2, 3, 5, 7, 11, 15, 22];
        for (n, &count) in (1..=8).zip(&p) {
            assert_eq!(enumerate_diagrams(n).len(), count);
        }
    }

    #[test]
    fn transposes() {
        assert_eq!(d("3,1").transpose(), d("2,1,1"));
        assert!(d("2,2").is_self_conjugate());
        assert!(!d("3,1").is_self_conjugate());
        for n in 1..=7 {
            for lam in enumerate_diagrams(n) {
                assert_eq!(lam.transpose().transpose(), lam);
                for tab in enumerate_standard_tableaux(&lam) {
                    assert_eq!(tab.transpose().transpose(), tab);
                }
            }
        }
    }

    #[test]
    fn tableau_counts_match_brute_force() {
        assert_eq!(enumerate_standard_tableaux(&d("2,1")).len(), 2);
        assert_eq!(enumerate_standard_tableaux(&d("3,2")).len(), 5);
        assert_eq!(enumerate_standard_tableaux(&d("5")).len(), 1);
        for n in 1..=6 {
            for lam in enumerate_diagrams(n) {
                assert_eq!(enumerate_standard_tableaux(&lam).len(), brute_force_count(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn canonical_order_is_sorted_and_stable() {
        for lam in enumerate_diagrams(6) {
            let a = enumerate_standard_tableaux(&lam);
            let keys: Vec<_> = a.iter().map(StandardTableau::canonical_key).collect();
            let mut sorted = keys.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(keys, sorted);
            assert_eq!(a, enumerate_standard_tableaux(&lam));
        }
        let basis = enumerate_standard_tableaux(&d("2,1"));
        assert_eq!(basis, vec![t("1,3/2"), t("1,2/3")]);
    }

    #[test]
    fn classes_and_axial_distances() {
        let row_filled = t("1,2/3");
        assert_eq!(row_filled.classes(), vec![0, 1, -1]);
        assert_eq!(row_filled.axial_distance(2, 3), 2);
        assert_eq!(row_filled.axial_distance(2, 2), 0);
        assert_eq!(row_filled.axial_distance(3, 2), -2);
        for n in 1..=6 {
            for lam in enumerate_diagrams(n) {
                for tab in enumerate_standard_tableaux(&lam) {
                    assert_eq!(tab.class(1), 0);
                    let tt = tab.transpose();
                    for i in 1..=n {
                        for j in 1..=n {
                            assert_eq!(tt.axial_distance(i, j), -tab.axial_distance(i, j));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn adjacent_axial_distances_never_vanish() {
        for n in 2..=7 {
            for lam in enumerate_diagrams(n) {
                for tab in enumerate_standard_tableaux(&lam) {
                    for k in 1..n {
                        assert_ne!(tab.axial_distance(k, k + 1), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn transposition_action() {
        let row_filled = t("1,2/3");
        assert_eq!(row_filled.apply_transposition(2), Some(t("1,3/2")));
        assert_eq!(row_filled.apply_transposition(1), None);
        for lam in enumerate_diagrams(6) {
            for tab in enumerate_standard_tableaux(&lam) {
                for i in 1..6 {
                    if let Some(s) = tab.apply_transposition(i) {
                        assert_eq!(s.apply_transposition(i).as_ref(), Some(&tab));
                        assert_eq!(s.axial_distance(i, i + 1), -tab.axial_distance(i, i + 1));
                    }
                }
            }
        }
    }

    #[test]
    fn counts_are_transpose_invariant_and_square_sum_to_factorial() {
        let mut fact = 1usize;
        for n in 1..=7 {
            fact *= n;
            let mut sum = 0;
            for lam in enumerate_diagrams(n) {
                let f = enumerate_standard_tableaux(&lam).len();
                assert_eq!(f, enumerate_standard_tableaux(&lam.transpose()).len());
                sum += f * f;
            }
            assert_eq!(sum, fact);
        }
    }

    #[test]
    fn split_by_position_of_two() {
        let (plus, minus) = stab_split(&d("2,1"));
        assert_eq!((plus.len(), minus.len()), (1, 1));
        let (plus, minus) = stab_split(&d("4"));
        assert_eq!((plus.len(), minus.len()), (1, 0));
        for n in 2..=7 {
            for lam in enumerate_diagrams(n).into_iter().filter(YoungDiagram::is_self_conjugate) {
                let (plus, minus) = stab_split(&lam);
                let mut image: Vec<_> = plus.iter().map(StandardTableau::transpose).collect();
                let mut minus = minus.clone();
                image.sort_by_key(StandardTableau::canonical_key);
                minus.sort_by_key(StandardTableau::canonical_key);
                assert_eq!(image, minus);
            }
        }
    }

    #[test]
    fn predecessors() {
        assert_eq!(d("2,2").predecessors(), vec![d("2,1")]);
        assert_eq!(d("3,1").predecessors(), vec![d("2,1"), d("3")]);
        for n in 2..=8 {
            for lam in enumerate_diagrams(n).into_iter().filter(YoungDiagram::is_self_conjugate) {
                let sc = lam.predecessors().iter().filter(|p| p.is_self_conjugate()).count();
                assert!(sc <= 1);
            }
        }
    }

    #[test]
    fn parse_errors() {
        assert!("1,3".parse::<YoungDiagram>().is_err());
        assert!("2,x".parse::<YoungDiagram>().is_err());
        assert!("2,1/3".parse::<StandardTableau>().is_err());
        assert!("1,2/2".parse::<StandardTableau>().is_err());
    }
}
