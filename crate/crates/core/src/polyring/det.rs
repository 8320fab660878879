use super::polynomial::Polynomial;
use crate::error::{Error, Result};

fn check_square(grid: &[Vec<Polynomial>]) -> Result<usize> {
    let s = grid.len();
    if s == 0 {
        return Err(Error::Dimension("empty grid".into()));
    }
    if let Some(row) = grid.iter().find(|r| r.len() != s) {
        return Err(Error::Dimension(format!("row of length {} in a {s}-row grid", row.len())));
    }
    Ok(s)
}

/// Determinant of a square grid. Cofactor expansion below size 4, Bareiss
/// elimination from size 4 on.
pub fn determinant(grid: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let s = check_square(grid)?;
    if s < 4 {
        determinant_cofactor(grid)
    } else {
        determinant_bareiss(grid)
    }
}

/// Laplace expansion along the first row.
pub fn determinant_cofactor(grid: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let s = check_square(grid)?;
    let cols: Vec<usize> = (0..s).collect();
    Ok(cofactor(grid, 0, &cols))
}

fn cofactor(grid: &[Vec<Polynomial>], row: usize, cols: &[usize]) -> Polynomial {
    if cols.len() == 1 {
        return grid[row][cols[0]].clone();
    }
    let nvars = grid[0][0].nvars();
    let order = grid[0][0].order();
    let mut acc = Polynomial::zero_in(nvars, order);
    for (pos, &j) in cols.iter().enumerate() {
        let entry = &grid[row][j];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != j).collect();
        let term = entry * &cofactor(grid, row + 1, &rest);
        acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn determinant_bareiss(grid: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let s = check_square(grid)?;
    let nvars = grid[0][0].nvars();
    let order = grid[0][0].order();
    let mut m: Vec<Vec<Polynomial>> = grid.to_vec();
    let mut negate = false;
    let mut prev = Polynomial::one(nvars).with_order(order);
    for k in 0..s - 1 {
        if m[k][k].is_zero() {
            match (k + 1..s).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Polynomial::zero_in(nvars, order)),
            }
        }
        for i in k + 1..s {
            for j in k + 1..s {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[s - 1][s - 1].clone();
    Ok(if negate { -&det } else { det })
}
