//! Dense linear algebra over F2 with rows packed into `u16`.
//!
//! Used as the independent route for counting totally even sets: a set is
//! totally even iff its characteristic vector lies in the null space of the
//! hyperplane-point incidence matrix.

use crate::error::Result;
use crate::f2geom::check_dim;

/// Hyperplane-by-point incidence matrix of PG(k-1, F2). Row `h - 1` has bit
/// `p - 1` set iff the point with encoding `p` lies on the hyperplane with
/// normal `h`.
pub fn incidence_matrix(k: u32) -> Result<Vec<u16>> {
    let dim = check_dim(k)?;
    let n = (1u16 << dim) - 1;
    Ok((1..=n)
        .map(|h| {
            (1..=n)
                .filter(|p| (h & p).count_ones() % 2 == 0)
                .fold(0u16, |row, p| row | (1 << (p - 1)))
        })
        .collect())
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[u16], ncols: usize) -> (Vec<u16>, Vec<usize>) {
    let mut m: Vec<u16> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let bit = 1u16 << c;
        let Some(found) = (r..m.len()).find(|&i| m[i] & bit != 0) else {
            continue;
        };
        m.swap(r, found);
        for i in 0..m.len() {
            if i != r && m[i] & bit != 0 {
                m[i] ^= m[r];
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[u16], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : A x = 0}`, one vector per free column.
pub fn null_space_basis(rows: &[u16], ncols: usize) -> Vec<u16> {
    let (reduced, pivots) = rref(rows, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = 1u16 << free;
            for (row, &pc) in reduced.iter().zip(&pivots) {
                if row & (1 << free) != 0 {
                    x |= 1 << pc;
                }
            }
            x
        })
        .collect()
}

/// Every vector of the span of `basis`, in Gray-code order.
pub fn span(basis: &[u16]) -> Vec<u16> {
    let mut out = Vec::with_capacity(1 << basis.len());
    let mut v = 0u16;
    out.push(v);
    for i in 1u32..(1 << basis.len()) {
        v ^= basis[i.trailing_zeros() as usize];
        out.push(v);
    }
    out
}

pub fn mul_vec(rows: &[u16], x: u16) -> u16 {
    rows.iter()
        .enumerate()
        .fold(0, |acc, (i, r)| acc | ((((r & x).count_ones() & 1) as u16) << i))
}
