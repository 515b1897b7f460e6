//! Finite projective geometry PG(k-1, F2) for k in {2, 3, 4}.
//!
//! A point is a nonzero vector of F2^k. Since the only nonzero scalar of F2
//! is 1, vectors and projective points coincide, so a point is stored as its
//! integer encoding in `1..2^k`. Coordinates are read most-significant first:
//! the point `(a1, a2, a3, a4)` has encoding `8*a1 + 4*a2 + 2*a3 + a4`, so the
//! last coordinate is the lowest bit.
//!
//! Hyperplanes use the same encoding for their normal vector, and a point lies
//! on a hyperplane iff the AND of the two encodings has even popcount.
//!
//! A [`PointSet`] is a bit set whose bit `e - 1` marks the point with encoding
//! `e`. The integer value of that bit set is the order used for canonical
//! forms elsewhere in the crate.

use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Validates a dimension parameter `k` (vector-space dimension).
pub fn check_dim(k: u32) -> Result<u8> {
    match k {
        2..=4 => Ok(k as u8),
        _ => Err(Error::UnsupportedDimension(k)),
    }
}

fn point_count(dim: u8) -> u8 {
    (1u8 << dim) - 1
}

fn encoding_to_coords(dim: u8, bits: u8) -> Vec<u8> {
    (0..dim).rev().map(|i| (bits >> i) & 1).collect()
}

fn coords_to_encoding(coords: &[u64]) -> Result<(u8, u8)> {
    let dim = coords.len();
    if !(2..=4).contains(&dim) || coords.iter().any(|&c| c > 1) {
        return Err(Error::BadCoordinates(coords.to_vec()));
    }
    let bits = coords.iter().fold(0u8, |acc, &c| (acc << 1) | c as u8);
    if bits == 0 {
        return Err(Error::ZeroVector);
    }
    Ok((dim as u8, bits))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Point {
    dim: u8,
    bits: u8,
}

impl F2Point {
    pub fn new(dim: u8, bits: u8) -> Result<Self> {
        check_dim(dim as u32)?;
        if bits == 0 {
            return Err(Error::ZeroVector);
        }
        if bits > point_count(dim) {
            return Err(Error::Validation(format!(
                "encoding {bits} out of range for k={dim}"
            )));
        }
        Ok(F2Point { dim, bits })
    }

    /// Builds a point from its coordinates, most significant first.
    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        let wide: Vec<u64> = coords.iter().map(|&c| c as u64).collect();
        let (dim, bits) = coords_to_encoding(&wide)?;
        Ok(F2Point { dim, bits })
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn encoding(&self) -> u8 {
        self.bits
    }

    pub fn coords(&self) -> Vec<u8> {
        encoding_to_coords(self.dim, self.bits)
    }

    /// Sum in F2^k, `None` when the sum is the zero vector.
    pub fn add(&self, other: &F2Point) -> Result<Option<F2Point>> {
        same_dim(self.dim, other.dim)?;
        let bits = self.bits ^ other.bits;
        Ok((bits != 0).then_some(F2Point { dim: self.dim, bits }))
    }
}

impl fmt::Debug for F2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for F2Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

/// A hyperplane `{x : <normal, x> = 0}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    dim: u8,
    normal: u8,
}

impl Hyperplane {
    pub fn new(dim: u8, normal: u8) -> Result<Self> {
        let p = F2Point::new(dim, normal)?;
        Ok(Hyperplane { dim, normal: p.bits })
    }

    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        let p = F2Point::from_coords(coords)?;
        Ok(Hyperplane { dim: p.dim, normal: p.bits })
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn normal(&self) -> u8 {
        self.normal
    }

    pub fn normal_coords(&self) -> Vec<u8> {
        encoding_to_coords(self.dim, self.normal)
    }

    pub fn contains(&self, p: &F2Point) -> Result<bool> {
        incident(p, self)
    }

    /// The set of points lying on this hyperplane.
    pub fn points(&self) -> PointSet {
        let members = (1..=point_count(self.dim))
            .filter(|&e| (e & self.normal).count_ones().is_multiple_of(2))
            .fold(0u16, |acc, e| acc | (1 << (e - 1)));
        PointSet { dim: self.dim, members }
    }
}

impl fmt::Debug for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{:?}", F2Point { dim: self.dim, bits: self.normal })
    }
}

impl Serialize for Hyperplane {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.normal_coords().serialize(s)
    }
}

fn same_dim(a: u8, b: u8) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a, right: b })
    }
}

/// All points of PG(k-1, F2) in increasing encoding order.
pub fn all_points(k: u32) -> Result<Vec<F2Point>> {
    let dim = check_dim(k)?;
    Ok((1..=point_count(dim)).map(|bits| F2Point { dim, bits }).collect())
}

/// All hyperplanes of PG(k-1, F2) in increasing normal-encoding order.
pub fn all_hyperplanes(k: u32) -> Result<Vec<Hyperplane>> {
    let dim = check_dim(k)?;
    Ok((1..=point_count(dim)).map(|normal| Hyperplane { dim, normal }).collect())
}

pub fn incident(p: &F2Point, h: &Hyperplane) -> Result<bool> {
    same_dim(p.dim, h.dim)?;
    Ok((p.bits & h.normal).count_ones().is_multiple_of(2))
}

/// Subset of the points of PG(k-1, F2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    dim: u8,
    members: u16,
}

impl PointSet {
    pub fn empty(dim: u8) -> Result<Self> {
        check_dim(dim as u32)?;
        Ok(PointSet { dim, members: 0 })
    }

    /// Whole point set of PG(k-1, F2).
    pub fn full(dim: u8) -> Result<Self> {
        check_dim(dim as u32)?;
        Ok(PointSet { dim, members: (1u16 << point_count(dim)) - 1 })
    }

    /// From the raw membership bit set (bit `e - 1` is the point with encoding `e`).
    pub fn from_bits(dim: u8, members: u16) -> Result<Self> {
        let full = Self::full(dim)?;
        if members & !full.members != 0 {
            return Err(Error::Validation(format!(
                "bit set {members:#x} has bits outside PG({}, F2)",
                dim - 1
            )));
        }
        Ok(PointSet { dim, members })
    }

    pub fn from_points<'a, I>(dim: u8, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a F2Point>,
    {
        let mut s = Self::empty(dim)?;
        for p in points {
            s.insert(p)?;
        }
        Ok(s)
    }

    pub fn from_encodings(dim: u8, encodings: &[u8]) -> Result<Self> {
        let mut s = Self::empty(dim)?;
        for &e in encodings {
            s.insert(&F2Point::new(dim, e)?)?;
        }
        Ok(s)
    }

    /// Parses a list of coordinate arrays, most significant coordinate first.
    pub fn from_coord_lists(dim: u8, lists: &[&[u8]]) -> Result<Self> {
        let mut s = Self::empty(dim)?;
        for c in lists {
            s.insert(&F2Point::from_coords(c)?)?;
        }
        Ok(s)
    }

    pub fn insert(&mut self, p: &F2Point) -> Result<()> {
        same_dim(self.dim, p.dim)?;
        self.members |= 1 << (p.bits - 1);
        Ok(())
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn bits(&self) -> u16 {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn contains(&self, p: &F2Point) -> bool {
        p.dim == self.dim && self.members & (1 << (p.bits - 1)) != 0
    }

    /// Members in increasing encoding order.
    pub fn points(&self) -> impl Iterator<Item = F2Point> + '_ {
        let dim = self.dim;
        (1..=point_count(dim))
            .filter(move |e| self.members & (1 << (e - 1)) != 0)
            .map(move |bits| F2Point { dim, bits })
    }

    pub fn encodings(&self) -> Vec<u8> {
        self.points().map(|p| p.bits).collect()
    }

    pub fn complement(&self) -> PointSet {
        let full = (1u16 << point_count(self.dim)) - 1;
        PointSet { dim: self.dim, members: full & !self.members }
    }

    pub fn symmetric_difference(&self, other: &PointSet) -> Result<PointSet> {
        same_dim(self.dim, other.dim)?;
        Ok(PointSet { dim: self.dim, members: self.members ^ other.members })
    }

    pub fn intersection_size(&self, other: &PointSet) -> Result<usize> {
        same_dim(self.dim, other.dim)?;
        Ok((self.members & other.members).count_ones() as usize)
    }

    /// XOR of all members as vectors of F2^k (0 for the empty set).
    pub fn vector_sum(&self) -> u8 {
        self.points().fold(0, |acc, p| acc ^ p.bits)
    }

    pub fn coord_lists(&self) -> Vec<Vec<u8>> {
        self.points().map(|p| p.coords()).collect()
    }

    /// Parses the JSON point-set format: an array of coordinate arrays, or an
    /// array of integer encodings. `default_dim` is used when the dimension
    /// cannot be read off the entries (integers only, or an empty array).
    pub fn from_json_value(value: &serde_json::Value, default_dim: u8) -> Result<PointSet> {
        let reprs: Vec<PointRepr> = serde_json::from_value(value.clone())?;
        PointSet::from_reprs(&reprs, default_dim)
    }

    pub(crate) fn from_reprs(reprs: &[PointRepr], default_dim: u8) -> Result<PointSet> {
        let dim = reprs
            .iter()
            .find_map(|r| match r {
                PointRepr::Coords(c) => Some(c.len() as u8),
                PointRepr::Encoding(_) => None,
            })
            .unwrap_or(default_dim);
        let mut s = PointSet::empty(dim)?;
        for r in reprs {
            s.insert(&r.to_point(dim)?)?;
        }
        Ok(s)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points()).finish()
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for p in self.points() {
            seq.serialize_element(&p.coords())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<PointRepr>::deserialize(d)?;
        PointSet::from_reprs(&reprs, 4).map_err(de::Error::custom)
    }
}

/// One entry of the JSON point format.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub(crate) enum PointRepr {
    Coords(Vec<u64>),
    Encoding(u64),
}

impl PointRepr {
    pub(crate) fn to_point(&self, dim: u8) -> Result<F2Point> {
        match self {
            PointRepr::Coords(c) => {
                let (d, bits) = coords_to_encoding(c)?;
                same_dim(dim, d)?;
                Ok(F2Point { dim, bits })
            }
            PointRepr::Encoding(e) => {
                let bits = u8::try_from(*e).map_err(|_| Error::BadCoordinates(vec![*e]))?;
                F2Point::new(dim, bits)
            }
        }
    }
}

/// Sizes `|s ∩ H|` over every hyperplane `H`, sorted in descending order.
pub fn hyperplane_profile(s: &PointSet) -> Vec<usize> {
    let mut profile: Vec<usize> = (1..=point_count(s.dim))
        .map(|normal| Hyperplane { dim: s.dim, normal }.points())
        .map(|h| (h.members & s.members).count_ones() as usize)
        .collect();
    profile.sort_unstable_by(|a, b| b.cmp(a));
    profile
}

/// True iff every hyperplane meets `s` in an even number of points.
pub fn is_totally_even(s: &PointSet) -> bool {
    hyperplane_profile(s).iter().all(|n| n % 2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn type_two() -> PointSet {
        PointSet::from_coord_lists(
            4,
            &[
                &[1, 0, 0, 0],
                &[1, 1, 0, 0],
                &[0, 1, 0, 0],
                &[1, 0, 1, 0],
                &[0, 0, 1, 0],
                &[0, 1, 1, 0],
                &[1, 1, 1, 1],
                &[0, 0, 0, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn point_enumeration() {
        let pts = all_points(2).unwrap();
        let enc: Vec<u8> = pts.iter().map(|p| p.encoding()).collect();
        assert_eq!(enc, vec![1, 2, 3]);
        assert_eq!(pts[0].coords(), vec![0, 1]);
        assert_eq!(pts[1].coords(), vec![1, 0]);
        assert_eq!(all_points(3).unwrap().len(), 7);
        assert_eq!(all_points(4).unwrap().len(), 15);
        assert!(matches!(all_points(5), Err(Error::UnsupportedDimension(5))));
        assert!(matches!(all_points(1), Err(Error::UnsupportedDimension(1))));
    }

    #[test]
    fn incidence_examples() {
        let p = F2Point::from_coords(&[1, 1, 1, 1]).unwrap();
        let h = Hyperplane::from_coords(&[1, 1, 0, 0]).unwrap();
        assert!(incident(&p, &h).unwrap());
        let p = F2Point::from_coords(&[1, 0, 0, 0]).unwrap();
        let h = Hyperplane::from_coords(&[1, 0, 0, 0]).unwrap();
        assert!(!incident(&p, &h).unwrap());
        let q = F2Point::from_coords(&[1, 0, 0]).unwrap();
        assert!(matches!(incident(&q, &h), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn every_hyperplane_is_a_fano_plane() {
        let pts = all_points(4).unwrap();
        for h in all_hyperplanes(4).unwrap() {
            let n = pts.iter().filter(|p| incident(p, &h).unwrap()).count();
            assert_eq!(n, 7);
            assert_eq!(h.points().len(), 7);
        }
        assert_eq!(all_hyperplanes(3).unwrap().len(), 7);
    }

    #[test]
    fn zero_and_out_of_range_points_rejected() {
        assert!(matches!(F2Point::new(4, 0), Err(Error::ZeroVector)));
        assert!(F2Point::new(3, 8).is_err());
        assert!(matches!(F2Point::from_coords(&[0, 0, 0]), Err(Error::ZeroVector)));
        assert!(F2Point::from_coords(&[2, 0]).is_err());
        assert!(Hyperplane::new(4, 0).is_err());
    }

    #[test]
    fn profile_of_hyperplane_complement() {
        let h0 = Hyperplane::from_coords(&[0, 0, 0, 1]).unwrap();
        let s = h0.points().complement();
        assert_eq!(s.len(), 8);
        let mut expected = vec![4; 14];
        expected.push(0);
        assert_eq!(hyperplane_profile(&s), expected);
        assert!(is_totally_even(&s));
    }

    #[test]
    fn profile_of_type_two_set() {
        let p = hyperplane_profile(&type_two());
        assert_eq!(p.iter().filter(|&&n| n == 6).count(), 1);
        assert!(p.iter().all(|&n| n == 6 || n == 4 || n == 2));
        assert_eq!(p.iter().sum::<usize>(), 7 * 8);
        assert!(is_totally_even(&type_two()));
    }

    #[test]
    fn empty_and_singletons() {
        let e = PointSet::empty(4).unwrap();
        assert_eq!(hyperplane_profile(&e), vec![0; 15]);
        assert!(is_totally_even(&e));
        for p in all_points(4).unwrap() {
            let s = PointSet::from_points(4, [&p]).unwrap();
            assert!(!is_totally_even(&s));
        }
    }

    #[test]
    fn affine_part_is_totally_even() {
        let s = PointSet::from_points(
            4,
            all_points(4).unwrap().iter().filter(|p| p.encoding() & 1 == 1),
        )
        .unwrap();
        assert_eq!(s.len(), 8);
        assert!(is_totally_even(&s));
        assert_eq!(s.vector_sum(), 0);
    }

    #[test]
    fn json_formats() {
        let s = PointSet::from_coord_lists(4, &[&[0, 0, 0, 1], &[1, 0, 0, 0]]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, "[[0,0,0,1],[1,0,0,0]]");
        let back: PointSet = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        let from_ints: PointSet = serde_json::from_str("[8, 1]").unwrap();
        assert_eq!(from_ints, s);
        let mixed: PointSet = serde_json::from_str("[[1,0,0],3]").unwrap();
        assert_eq!(mixed.dim(), 3);
        assert_eq!(mixed.encodings(), vec![3, 4]);
        assert!(serde_json::from_str::<PointSet>("[[1,0,0],[1,0]]").is_err());
        assert!(serde_json::from_str::<PointSet>("[[0,0,0,0]]").is_err());
    }
}
