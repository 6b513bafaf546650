//! Integer partitions, their Young diagrams, and the statistics on them:
//! conjugation, odd-part counts, hook lengths and even-hook counts.
//!
//! Cells are addressed 1-based as `(row, column)`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive, found 0 at position {0}")]
    ZeroPart(usize),
    #[error("parts must be nonincreasing: {prev} is followed by {next}")]
    Increasing { prev: usize, next: usize },
    #[error("cell ({row}, {col}) is outside the Young diagram")]
    CellOutsideDiagram { row: usize, col: usize },
    #[error("cell ({row}, {col}) is not an inner corner")]
    NotInnerCorner { row: usize, col: usize },
    #[error("the empty partition has no cells")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Self { row, col }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::ZeroPart(i));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(PartitionError::Increasing {
                prev: w[0],
                next: w[1],
            });
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` for 1-based `i`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|k| self.parts.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Streams the partitions of `n` in decreasing lexicographic order, holding
/// only the current partition in memory.
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<usize>,
    started: bool,
    done: bool,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        Self {
            parts: if n == 0 { Vec::new() } else { vec![n] },
            started: false,
            done: false,
        }
    }

    /// Advances and borrows the next partition without allocating.
    pub fn next_parts(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.parts);
        }
        // strip trailing 1s, then decrement the last part > 1 and refill
        // greedily with parts no larger than it
        let mut freed = 0;
        while self.parts.last() == Some(&1) {
            self.parts.pop();
            freed += 1;
        }
        let Some(last) = self.parts.last_mut() else {
            self.done = true;
            return None;
        };
        *last -= 1;
        let cap = *last;
        freed += 1;
        while freed > 0 {
            let piece = freed.min(cap);
            self.parts.push(piece);
            freed -= piece;
        }
        Some(&self.parts)
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.next_parts().map(|p| Partition { parts: p.to_vec() })
    }
}

pub fn partitions_of(n: usize) -> Partitions {
    Partitions::new(n)
}

/// `λ'_j = #{i : λ_i >= j}`
pub fn conjugate(lambda: &Partition) -> Partition {
    Partition {
        parts: conjugate_parts(&lambda.parts),
    }
}

fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    let mut out = vec![0; width];
    for &p in parts {
        for slot in &mut out[..p] {
            *slot += 1;
        }
    }
    out
}

/// `O(λ)`, the number of odd parts.
pub fn odd_parts_count(lambda: &Partition) -> usize {
    count_odd(&lambda.parts)
}

fn count_odd(parts: &[usize]) -> usize {
    parts.iter().filter(|&&p| p % 2 == 1).count()
}

/// `O(λ')` read directly off the parts: column `j` has length `i` exactly
/// when `λ_{i+1} < j <= λ_i`.
pub fn odd_parts_conjugate_count(parts: &[usize]) -> usize {
    parts
        .iter()
        .enumerate()
        .filter(|(i, _)| i % 2 == 0)
        .map(|(i, &p)| p - parts.get(i + 1).copied().unwrap_or(0))
        .sum()
}

/// `O(λ) ≡ O(λ') (mod 4)`, computed without building the conjugate.
pub fn is_t_type_parts(parts: &[usize]) -> bool {
    (count_odd(parts) + 4 - odd_parts_conjugate_count(parts) % 4).is_multiple_of(4)
}

pub fn hook_length(lambda: &Partition, row: usize, col: usize) -> Result<usize, PartitionError> {
    let cell = Cell::new(row, col);
    if !lambda.contains_cell(cell) {
        return Err(PartitionError::CellOutsideDiagram { row, col });
    }
    let arm = lambda.part(row) - col;
    let leg = lambda.parts.iter().skip(row).take_while(|&&p| p >= col).count();
    Ok(arm + leg + 1)
}

/// Hook lengths row by row; `grid[i][j]` is the hook of cell `(i+1, j+1)`.
pub fn hook_grid(lambda: &Partition) -> Vec<Vec<usize>> {
    let conj = conjugate_parts(&lambda.parts);
    lambda
        .parts
        .iter()
        .enumerate()
        .map(|(i, &len)| (0..len).map(|j| len - j + conj[j] - i - 1).collect())
        .collect()
}

/// `H_e(λ)`, the number of cells with an even hook length.
pub fn even_hook_count(lambda: &Partition) -> usize {
    even_hooks_of_parts(&lambda.parts)
}

fn even_hooks_of_parts(parts: &[usize]) -> usize {
    let conj = conjugate_parts(parts);
    parts
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (0..len)
                .filter(|&j| (len - j + conj[j] - i - 1).is_multiple_of(2))
                .count()
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    pub odd_parts: usize,
    pub odd_parts_conjugate: usize,
    pub even_hooks: usize,
    pub is_t_type: bool,
}

pub fn classify(lambda: &Partition) -> PartitionStats {
    let odd_parts = odd_parts_count(lambda);
    let odd_parts_conjugate = odd_parts_conjugate_count(&lambda.parts);
    PartitionStats {
        odd_parts,
        odd_parts_conjugate,
        even_hooks: even_hook_count(lambda),
        is_t_type: (odd_parts + 4 - odd_parts_conjugate % 4).is_multiple_of(4),
    }
}

/// Cells `(i, λ_i)` whose removal leaves a Young diagram.
pub fn inner_corners(lambda: &Partition) -> Result<Vec<Cell>, PartitionError> {
    if lambda.is_empty() {
        return Err(PartitionError::Empty);
    }
    let l = lambda.len();
    Ok((1..=l)
        .filter(|&i| i == l || lambda.part(i) > lambda.part(i + 1))
        .map(|i| Cell::new(i, lambda.part(i)))
        .collect())
}

pub fn is_inner_corner(lambda: &Partition, cell: Cell) -> bool {
    lambda.contains_cell(cell)
        && cell.col == lambda.part(cell.row)
        && lambda.part(cell.row + 1) < cell.col
}

/// `λ` with the inner corner `cell` removed.
pub fn remove_corner(lambda: &Partition, cell: Cell) -> Result<Partition, PartitionError> {
    if !is_inner_corner(lambda, cell) {
        return Err(PartitionError::NotInnerCorner {
            row: cell.row,
            col: cell.col,
        });
    }
    let mut parts = lambda.parts.clone();
    parts[cell.row - 1] -= 1;
    if parts[cell.row - 1] == 0 {
        parts.pop();
    }
    Ok(Partition { parts })
}

/// Whether removing the inner corner `(i, j)` changes the parity of `H_e`
/// exactly when `λ_i` and `λ'_j` differ in parity.
pub fn corner_parity_check(lambda: &Partition, cell: Cell) -> Result<bool, PartitionError> {
    let smaller = remove_corner(lambda, cell)?;
    let same_he_parity = even_hook_count(lambda) % 2 == even_hook_count(&smaller) % 2;
    let row_len = lambda.part(cell.row);
    let col_len = lambda.parts.iter().take_while(|&&p| p >= cell.col).count();
    let same_len_parity = row_len % 2 == col_len % 2;
    Ok(same_he_parity == same_len_parity)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(Partition::new(vec![2, 0]), Err(PartitionError::ZeroPart(1)));
        assert_eq!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::Increasing { prev: 1, next: 2 })
        );
        assert_eq!(p(&[3, 1, 1]).n(), 5);
        assert_eq!(Partition::empty().n(), 0);
    }

    #[test]
    fn enumeration_small() {
        let zero: Vec<_> = partitions_of(0).collect();
        assert_eq!(zero, vec![Partition::empty()]);
        let four: Vec<_> = partitions_of(4).collect();
        assert_eq!(
            four,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(partitions_of(1).count(), 1);
        assert_eq!(partitions_of(10).count(), 42);
    }

    #[test]
    fn enumeration_is_strictly_decreasing_and_valid() {
        for n in 0..=18 {
            let all: Vec<_> = partitions_of(n).collect();
            for w in all.windows(2) {
                assert!(w[0] > w[1], "{} then {}", w[0], w[1]);
            }
            for lambda in &all {
                assert_eq!(lambda.n(), n);
                assert!(Partition::new(lambda.parts().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(conjugate(&p(&[3, 1])), p(&[2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&p(&[2, 1])), p(&[2, 1]));
    }

    #[test]
    fn odd_parts() {
        assert_eq!(odd_parts_count(&p(&[3, 1])), 2);
        assert_eq!(odd_parts_count(&p(&[2, 2])), 0);
        assert_eq!(odd_parts_count(&p(&[1, 1, 1, 1])), 4);
    }

    #[test]
    fn conjugate_odd_count_shortcut_matches_conjugation() {
        for n in 0..=16 {
            for lambda in partitions_of(n) {
                assert_eq!(
                    odd_parts_conjugate_count(lambda.parts()),
                    odd_parts_count(&conjugate(&lambda))
                );
            }
        }
    }

    #[test]
    fn hooks() {
        assert_eq!(hook_length(&p(&[2, 1]), 1, 1), Ok(3));
        assert_eq!(hook_length(&p(&[2, 2]), 1, 2), Ok(2));
        assert_eq!(hook_length(&p(&[1]), 1, 1), Ok(1));
        assert_eq!(
            hook_length(&p(&[2, 1]), 2, 2),
            Err(PartitionError::CellOutsideDiagram { row: 2, col: 2 })
        );
        assert!(hook_length(&p(&[2, 1]), 0, 1).is_err());
        assert!(hook_length(&Partition::empty(), 1, 1).is_err());
    }

    #[test]
    fn hook_grid_agrees_with_hook_length() {
        for n in 0..=12 {
            for lambda in partitions_of(n) {
                let grid = hook_grid(&lambda);
                for cell in lambda.cells() {
                    assert_eq!(
                        grid[cell.row - 1][cell.col - 1],
                        hook_length(&lambda, cell.row, cell.col).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn even_hooks() {
        assert_eq!(even_hook_count(&p(&[2, 1])), 0);
        assert_eq!(even_hook_count(&p(&[2, 2])), 2);
        assert_eq!(even_hook_count(&Partition::empty()), 0);
        assert_eq!(hook_grid(&p(&[2, 2])), vec![vec![3, 2], vec![2, 1]]);
    }

    #[test]
    fn classification() {
        let s = classify(&p(&[2, 1]));
        assert_eq!((s.odd_parts, s.odd_parts_conjugate, s.is_t_type), (1, 1, true));
        let s = classify(&p(&[3]));
        assert_eq!((s.odd_parts, s.odd_parts_conjugate, s.is_t_type), (1, 3, false));
        let s = classify(&p(&[1, 1, 1, 1]));
        assert_eq!((s.odd_parts, s.odd_parts_conjugate, s.is_t_type), (4, 0, true));
        assert!(is_t_type_parts(&[1, 1, 1, 1]));
        assert!(!is_t_type_parts(&[3]));
    }

    #[test]
    fn corners() {
        assert_eq!(
            inner_corners(&p(&[2, 1])).unwrap(),
            vec![Cell::new(1, 2), Cell::new(2, 1)]
        );
        assert_eq!(inner_corners(&p(&[3, 3])).unwrap(), vec![Cell::new(2, 3)]);
        assert_eq!(inner_corners(&p(&[1])).unwrap(), vec![Cell::new(1, 1)]);
        assert_eq!(inner_corners(&Partition::empty()), Err(PartitionError::Empty));
    }

    #[test]
    fn corner_removal() {
        assert_eq!(remove_corner(&p(&[2, 1]), Cell::new(2, 1)).unwrap(), p(&[2]));
        assert_eq!(remove_corner(&p(&[1]), Cell::new(1, 1)).unwrap(), Partition::empty());
        assert_eq!(
            remove_corner(&p(&[3, 3]), Cell::new(1, 3)),
            Err(PartitionError::NotInnerCorner { row: 1, col: 3 })
        );
    }

    #[test]
    fn corner_parity_examples() {
        assert_eq!(corner_parity_check(&p(&[2, 1]), Cell::new(2, 1)), Ok(true));
        assert_eq!(corner_parity_check(&p(&[1]), Cell::new(1, 1)), Ok(true));
        assert_eq!(corner_parity_check(&p(&[2, 2]), Cell::new(2, 2)), Ok(true));
        assert!(corner_parity_check(&p(&[2, 2]), Cell::new(1, 1)).is_err());
    }
}
