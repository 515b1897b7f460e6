//! The groups GL(k, F2) for k <= 4 acting on PG(k-1, F2).
//!
//! Over F2 the scalar group is trivial, so GL(k, F2) = PGL(k, F2). Groups are
//! fully materialized (at most 20160 elements) and orbits are computed by
//! brute force.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2geom::{check_dim, F2Point, Hyperplane, PointSet};

/// An invertible k x k matrix over F2. Row `i` is a k-bit mask whose
/// most significant bit multiplies the first coordinate; it computes
/// coordinate `i` of the image.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Matrix {
    dim: u8,
    rows: [u8; 4],
}

fn parity(x: u8) -> u8 {
    (x.count_ones() & 1) as u8
}

fn rank_of(rows: &[u8]) -> usize {
    let mut m = rows.to_vec();
    let mut r = 0;
    for bit in (0..8).rev() {
        let mask = 1u8 << bit;
        let Some(p) = (r..m.len()).find(|&i| m[i] & mask != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i] & mask != 0 {
                m[i] ^= m[r];
            }
        }
        r += 1;
    }
    r
}

impl F2Matrix {
    pub fn from_rows(rows: &[u8]) -> Result<Self> {
        let dim = check_dim(rows.len() as u32)?;
        let limit = 1u8 << dim;
        if rows.iter().any(|&r| r >= limit) {
            return Err(Error::Validation(format!("row entries exceed {dim} bits")));
        }
        if rank_of(rows) != dim as usize {
            return Err(Error::Validation("matrix is singular over F2".into()));
        }
        let mut packed = [0u8; 4];
        packed[..rows.len()].copy_from_slice(rows);
        Ok(F2Matrix { dim, rows: packed })
    }

    /// Builds a matrix from 0/1 entries given row by row.
    pub fn from_entries(entries: &[&[u8]]) -> Result<Self> {
        let rows: Vec<u8> = entries
            .iter()
            .map(|r| r.iter().fold(0u8, |acc, &b| (acc << 1) | (b & 1)))
            .collect();
        if entries.iter().any(|r| r.len() != entries.len()) {
            return Err(Error::Validation("matrix is not square".into()));
        }
        Self::from_rows(&rows)
    }

    pub fn identity(k: u32) -> Result<Self> {
        let dim = check_dim(k)?;
        let rows: Vec<u8> = (0..dim).map(|i| 1 << (dim - 1 - i)).collect();
        Self::from_rows(&rows)
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn rows(&self) -> &[u8] {
        &self.rows[..self.dim as usize]
    }

    /// The rows concatenated into one integer; this is the enumeration order.
    pub fn packed(&self) -> u16 {
        self.rows()
            .iter()
            .fold(0u16, |acc, &r| (acc << self.dim) | r as u16)
    }

    fn apply_bits(&self, x: u8) -> u8 {
        let d = self.dim;
        self.rows()
            .iter()
            .enumerate()
            .fold(0u8, |acc, (i, &r)| acc | (parity(r & x) << (d as usize - 1 - i)))
    }

    pub fn apply(&self, p: &F2Point) -> Result<F2Point> {
        self.check(p.dim())?;
        F2Point::new(self.dim, self.apply_bits(p.encoding()))
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        self.check(other.dim)?;
        let d = self.dim as usize;
        // Column j of other is other applied to basis vector e_j.
        let cols: Vec<u8> = (0..d).map(|j| other.apply_bits(1 << (d - 1 - j))).collect();
        let images: Vec<u8> = cols.iter().map(|&c| self.apply_bits(c)).collect();
        let rows: Vec<u8> = (0..d)
            .map(|i| {
                images.iter().enumerate().fold(0u8, |acc, (j, &c)| {
                    acc | (((c >> (d - 1 - i)) & 1) << (d - 1 - j))
                })
            })
            .collect();
        Self::from_rows(&rows)
    }

    pub fn transpose(&self) -> F2Matrix {
        let d = self.dim as usize;
        let mut rows = [0u8; 4];
        for (i, row) in rows.iter_mut().enumerate().take(d) {
            for (j, &r) in self.rows().iter().enumerate() {
                let bit = (r >> (d - 1 - i)) & 1;
                *row |= bit << (d - 1 - j);
            }
        }
        F2Matrix { dim: self.dim, rows }
    }

    /// Permutation of point encodings induced by this matrix; index 0 is unused.
    pub fn point_map(&self) -> [u8; 16] {
        let mut map = [0u8; 16];
        for (x, slot) in map.iter_mut().enumerate().take(1 << self.dim).skip(1) {
            *slot = self.apply_bits(x as u8);
        }
        map
    }

    /// Image of a hyperplane under the point action.
    pub fn apply_hyperplane(&self, h: &Hyperplane) -> Result<Hyperplane> {
        self.check(h.dim())?;
        let image = act(self, &h.points())?;
        crate::f2geom::all_hyperplanes(self.dim as u32)?
            .into_iter()
            .find(|g| g.points() == image)
            .ok_or_else(|| Error::Inconsistent("hyperplane image is not a hyperplane".into()))
    }

    fn check(&self, dim: u8) -> Result<()> {
        if dim == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.dim, right: dim })
        }
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim as usize;
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("{:0width$b}", r, width = d))
            .collect();
        write!(f, "[{}]", rows.join(" "))
    }
}

/// All invertible k x k matrices over F2, in increasing packed order.
pub fn enumerate_gl(k: u32) -> Result<Vec<F2Matrix>> {
    let dim = check_dim(k)?;
    let d = dim as usize;
    let row_mask = (1u32 << d) - 1;
    let candidates: Vec<u32> = (0..(1u32 << (d * d))).collect();
    Ok(candidates
        .par_iter()
        .filter_map(|&packed| {
            let rows: Vec<u8> = (0..d)
                .map(|i| ((packed >> (d * (d - 1 - i))) & row_mask) as u8)
                .collect();
            (rank_of(&rows) == d).then(|| {
                let mut r = [0u8; 4];
                r[..d].copy_from_slice(&rows);
                F2Matrix { dim, rows: r }
            })
        })
        .collect())
}

fn act_with_map(map: &[u8; 16], s: &PointSet) -> u16 {
    let mut out = 0u16;
    let mut bits = s.bits();
    while bits != 0 {
        let e = bits.trailing_zeros() as usize + 1;
        out |= 1 << (map[e] - 1);
        bits &= bits - 1;
    }
    out
}

/// Image `{m p : p in s}`.
pub fn act(m: &F2Matrix, s: &PointSet) -> Result<PointSet> {
    m.check(s.dim())?;
    PointSet::from_bits(s.dim(), act_with_map(&m.point_map(), s))
}

fn check_group(group: &[F2Matrix], dim: u8) -> Result<()> {
    if group.is_empty() {
        return Err(Error::Validation("group must be nonempty".into()));
    }
    group.iter().try_for_each(|m| m.check(dim))
}

/// Lexicographically smallest image of `s` (by membership bit set).
pub fn canonical_form(s: &PointSet, group: &[F2Matrix]) -> Result<PointSet> {
    check_group(group, s.dim())?;
    let min = group
        .par_iter()
        .map(|m| act_with_map(&m.point_map(), s))
        .min()
        .expect("nonempty group");
    PointSet::from_bits(s.dim(), min)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub representative: PointSet,
    pub size: u64,
    pub stabilizer_order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitCensus {
    pub group_order: u64,
    pub orbits: Vec<Orbit>,
}

impl OrbitCensus {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Index of the orbit containing the set with the given canonical form.
    pub fn orbit_of(&self, canonical: &PointSet) -> Option<usize> {
        self.orbits.iter().position(|o| &o.representative == canonical)
    }
}

/// Partitions a family of point sets, closed under `group`, into orbits.
///
/// Orbits are listed by increasing representative, where the representative
/// is the orbit minimum (the canonical form). Fails with
/// [`Error::ClosureViolation`] if some image falls outside `sets`.
pub fn orbit_census(sets: &[PointSet], group: &[F2Matrix]) -> Result<OrbitCensus> {
    let Some(first) = sets.first() else {
        return Ok(OrbitCensus { group_order: group.len() as u64, orbits: vec![] });
    };
    let dim = first.dim();
    check_group(group, dim)?;
    let family: BTreeSet<u16> = sets
        .iter()
        .map(|s| {
            if s.dim() != dim {
                Err(Error::DimensionMismatch { left: dim, right: s.dim() })
            } else {
                Ok(s.bits())
            }
        })
        .collect::<Result<_>>()?;
    let maps: Vec<[u8; 16]> = group.par_iter().map(|m| m.point_map()).collect();
    let order = group.len() as u64;

    let mut seen: BTreeSet<u16> = BTreeSet::new();
    let mut orbits = Vec::new();
    for &bits in &family {
        if seen.contains(&bits) {
            continue;
        }
        let s = PointSet::from_bits(dim, bits)?;
        let images: Vec<u16> = maps.par_iter().map(|m| act_with_map(m, &s)).collect();
        let stabilizer = images.iter().filter(|&&b| b == bits).count() as u64;
        let orbit: BTreeSet<u16> = images.into_iter().collect();
        if let Some(&stray) = orbit.iter().find(|b| !family.contains(b)) {
            return Err(Error::ClosureViolation(PointSet::from_bits(dim, stray)?));
        }
        let size = orbit.len() as u64;
        if size * stabilizer != order {
            return Err(Error::Inconsistent(format!(
                "orbit size {size} x stabilizer {stabilizer} != group order {order}"
            )));
        }
        let representative = PointSet::from_bits(dim, *orbit.first().expect("nonempty orbit"))?;
        seen.extend(orbit);
        orbits.push(Orbit { representative, size, stabilizer_order: stabilizer });
    }
    orbits.sort_by_key(|o| o.representative.bits());
    Ok(OrbitCensus { group_order: order, orbits })
}

/// Number of orbits by Burnside's lemma: the average number of members of
/// `sets` fixed by a group element.
pub fn burnside_orbit_count(sets: &[PointSet], group: &[F2Matrix]) -> Result<u64> {
    let Some(first) = sets.first() else {
        return Ok(0);
    };
    check_group(group, first.dim())?;
    let fixed: u64 = group
        .par_iter()
        .map(|m| {
            let map = m.point_map();
            sets.iter().filter(|s| act_with_map(&map, s) == s.bits()).count() as u64
        })
        .sum();
    let order = group.len() as u64;
    if !fixed.is_multiple_of(order) {
        return Err(Error::Inconsistent(format!(
            "fixed-point total {fixed} not divisible by group order {order}"
        )));
    }
    Ok(fixed / order)
}
