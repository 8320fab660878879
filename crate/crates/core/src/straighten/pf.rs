//! The PF labeling and the canonical placement it drives.

use std::fmt;

use crate::chains::{CChain, Tableau};
use crate::error::{Error, Result};

/// Labels `1..Σ n_i` on the cells of a shape, column by column, top to
/// bottom inside each column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFTable {
    pub lengths: Vec<usize>,
    /// `labels[i][j]` for row `i`, column `j`, both 0-based.
    pub labels: Vec<Vec<usize>>,
}

impl PFTable {
    pub fn label(&self, row: usize, col: usize) -> Option<usize> {
        self.labels.get(row)?.get(col).copied()
    }

    /// Cells ordered by decreasing label.
    pub fn cells_descending(&self) -> Vec<(usize, usize)> {
        let mut cells: Vec<(usize, usize, usize)> = self
            .labels
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &l)| (l, i, j)))
            .collect();
        cells.sort_unstable_by_key(|x| std::cmp::Reverse(x.0));
        cells.into_iter().map(|(_, i, j)| (i, j)).collect()
    }
}

impl fmt::Display for PFTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.labels.iter().map(|r| r.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", rows.join("\n"))
    }
}

pub fn pf_labeling(lengths: &[usize]) -> Result<PFTable> {
    if lengths.contains(&0) || lengths.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition(format!("row lengths {lengths:?} are not a shape")));
    }
    let mut labels: Vec<Vec<usize>> = lengths.iter().map(|&l| vec![0; l]).collect();
    let width = lengths.first().copied().unwrap_or(0);
    let mut counter = 0;
    for j in 0..width {
        // rows are weakly decreasing, so the rows reaching column j are a prefix
        for row in labels.iter_mut().take_while(|r| r.len() > j) {
            counter += 1;
            row[j] = counter;
        }
    }
    Ok(PFTable { lengths: lengths.to_vec(), labels })
}

/// Fills the shape with the multiset, largest values first, each into the
/// free cell of largest label that is last in its row or whose right
/// neighbour `v'` is already placed with `v + c < v'`.
pub fn canonical_placement(multiset: &[usize], lengths: &[usize], c: usize) -> Result<Tableau> {
    let table = pf_labeling(lengths)?;
    if multiset.len() != lengths.iter().sum::<usize>() {
        return Err(Error::Precondition(format!(
            "{} values for {} cells",
            multiset.len(),
            lengths.iter().sum::<usize>()
        )));
    }
    let cells = table.cells_descending();
    let mut grid: Vec<Vec<Option<usize>>> = lengths.iter().map(|&l| vec![None; l]).collect();
    let mut values = multiset.to_vec();
    values.sort_unstable_by(|a, b| b.cmp(a));
    for v in values {
        let spot = cells.iter().find(|&&(i, j)| {
            grid[i][j].is_none() && (j + 1 == lengths[i] || grid[i][j + 1].is_some_and(|right| v + c < right))
        });
        let &(i, j) = spot.ok_or(Error::Infeasible(v))?;
        grid[i][j] = Some(v);
    }
    let rows = grid.into_iter().map(|r| CChain::from_vec(r.into_iter().map(Option::unwrap).collect())).collect();
    Ok(Tableau::new(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_labeling() {
        let t = pf_labeling(&[7, 7, 4, 4, 2, 2]).unwrap();
        let expected = "1 7 13 17 21 23 25\n2 8 14 18 22 24 26\n3 9 15 19\n4 10 16 20\n5 11\n6 12";
        assert_eq!(t.to_string(), expected);
        assert_eq!(pf_labeling(&[2]).unwrap().labels, vec![vec![1, 2]]);
        assert_eq!(pf_labeling(&[2, 1]).unwrap().labels, vec![vec![1, 3], vec![2]]);
        assert!(matches!(pf_labeling(&[1, 2]), Err(Error::Precondition(_))));
    }

    #[test]
    fn placement_examples() {
        let t = canonical_placement(&[1, 4, 7, 12, 3, 10], &[4, 2], 2).unwrap();
        assert_eq!(t.to_string(), "1 4 7 12 / 3 10");
        assert_eq!(canonical_placement(&[9, 1, 5], &[3], 2).unwrap().to_string(), "1 5 9");
        // two equal values cannot share a chain of length 2
        assert!(matches!(canonical_placement(&[3, 3], &[2], 1), Err(Error::Infeasible(3))));
    }
}
