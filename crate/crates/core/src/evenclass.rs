//! Totally even 8-point subsets of PG(3, F2) and their classification under
//! GL(4, F2).
//!
//! Production enumeration filters all subsets by [`is_totally_even`]; the
//! null-space route in [`crate::gf2`] is kept as the cross-check.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2geom::{all_hyperplanes, hyperplane_profile, is_totally_even, Hyperplane, PointSet};
use crate::gf2;
use crate::glgroup::{act, burnside_orbit_count, enumerate_gl, orbit_census, F2Matrix};

const DIM: u8 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "type")]
pub enum EvenSetType {
    /// Complement of a hyperplane; `witness` is the hyperplane missed by the set.
    TypeI { witness: Hyperplane },
    /// No hyperplane is disjoint from the set; `witness` is the unique
    /// hyperplane meeting it in six points.
    TypeII { witness: Hyperplane },
    NotTotallyEven,
}

impl EvenSetType {
    pub fn tag(&self) -> &'static str {
        match self {
            EvenSetType::TypeI { .. } => "TypeI",
            EvenSetType::TypeII { .. } => "TypeII",
            EvenSetType::NotTotallyEven => "NotTotallyEven",
        }
    }

    pub fn witness(&self) -> Option<Hyperplane> {
        match self {
            EvenSetType::TypeI { witness } | EvenSetType::TypeII { witness } => Some(*witness),
            EvenSetType::NotTotallyEven => None,
        }
    }
}

/// The affine part `{a4 = 1}`, the complement of the hyperplane `a4 = 0`.
pub fn type_one_example() -> PointSet {
    PointSet::from_encodings(DIM, &[1, 3, 5, 7, 9, 11, 13, 15]).expect("valid encodings")
}

/// The exceptional 8-set containing a full line of PG(3, F2).
pub fn type_two_example() -> PointSet {
    PointSet::from_coord_lists(
        DIM,
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
    .expect("valid coordinates")
}

/// All totally even subsets of PG(3, F2) of the given size, ordered by bit set.
pub fn enumerate_totally_even(size: usize) -> Result<Vec<PointSet>> {
    if size > 15 {
        return Err(Error::Validation(format!("PG(3, F2) has no {size}-point subsets")));
    }
    (0u16..1 << 15)
        .filter(|b| b.count_ones() as usize == size)
        .map(|b| PointSet::from_bits(DIM, b))
        .filter(|s| s.as_ref().map_or(true, is_totally_even))
        .collect()
}

pub fn classify_type(s: &PointSet) -> Result<EvenSetType> {
    if s.dim() != DIM {
        return Err(Error::DimensionMismatch { left: DIM, right: s.dim() });
    }
    if s.len() != 8 {
        return Err(Error::WrongSize { expected: 8, found: s.len() });
    }
    if !is_totally_even(s) {
        return Ok(EvenSetType::NotTotallyEven);
    }
    let meets: Vec<(Hyperplane, usize)> = all_hyperplanes(DIM as u32)?
        .into_iter()
        .map(|h| Ok((h, s.intersection_size(&h.points())?)))
        .collect::<Result<_>>()?;
    if let Some(&(h, _)) = meets.iter().find(|(_, n)| *n == 0) {
        return Ok(EvenSetType::TypeI { witness: h });
    }
    let sixes: Vec<Hyperplane> = meets.iter().filter(|(_, n)| *n == 6).map(|(h, _)| *h).collect();
    match sixes.as_slice() {
        [h] => Ok(EvenSetType::TypeII { witness: *h }),
        _ => Err(Error::ClassificationMismatch {
            reason: format!(
                "totally even set with no disjoint hyperplane meets {} hyperplanes in 6 points",
                sixes.len()
            ),
            set: *s,
        }),
    }
}

/// Totally even 8-sets counted through the null space of the incidence matrix.
pub fn null_space_even_sets(size: usize) -> Result<Vec<PointSet>> {
    let a = gf2::incidence_matrix(DIM as u32)?;
    let mut words: Vec<u16> = gf2::span(&gf2::null_space_basis(&a, 15))
        .into_iter()
        .filter(|w| w.count_ones() as usize == size)
        .collect();
    words.sort_unstable();
    words.into_iter().map(|w| PointSet::from_bits(DIM, w)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    #[serde(rename = "type")]
    pub kind: &'static str,
    pub size: u64,
    pub stabilizer_order: u64,
    pub representative: PointSet,
    pub profile: Vec<usize>,
}

/// Machine-checked impossible cases from the case analysis: profile shapes
/// that no totally even 8-set can have.
#[derive(Debug, Clone, Serialize)]
pub struct ExcludedCases {
    pub all_intersections_four: usize,
    pub max_four_with_a_two: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaEvReport {
    pub total_count: usize,
    pub oracle_count: usize,
    pub group_order: u64,
    pub orbit_count: usize,
    pub burnside_orbit_count: u64,
    pub orbits: Vec<OrbitReport>,
    pub type_constant_on_orbits: bool,
    pub profile_separates_types: bool,
    pub excluded_cases: ExcludedCases,
    pub listed_type_two_set_is_type_two: bool,
}

fn mismatch(reason: impl Into<String>, set: PointSet) -> Error {
    Error::ClassificationMismatch { reason: reason.into(), set }
}

/// Enumerates, classifies and orbit-partitions the totally even 8-sets,
/// failing on the first disagreement between the independent routes.
pub fn verify_lemma_ev() -> Result<LemmaEvReport> {
    let group = enumerate_gl(DIM as u32)?;
    verify_lemma_ev_with(&group)
}

pub fn verify_lemma_ev_with(group: &[F2Matrix]) -> Result<LemmaEvReport> {
    let sets = enumerate_totally_even(8)?;
    let oracle = null_space_even_sets(8)?;
    if oracle != sets {
        let first_diff = sets
            .iter()
            .zip(&oracle)
            .find(|(a, b)| a != b)
            .map(|(a, _)| *a)
            .or_else(|| sets.first().copied())
            .unwrap_or(PointSet::empty(DIM)?);
        return Err(mismatch(
            format!("filter found {} sets, null space {}", sets.len(), oracle.len()),
            first_diff,
        ));
    }

    let census = orbit_census(&sets, group)?;
    let burnside = burnside_orbit_count(&sets, group)?;
    if burnside != census.orbit_count() as u64 {
        return Err(Error::Inconsistent(format!(
            "Burnside count {burnside} != census count {}",
            census.orbit_count()
        )));
    }

    let mut orbits = Vec::new();
    for orbit in &census.orbits {
        let rep = orbit.representative;
        let kind = classify_type(&rep)?;
        let members: BTreeSet<PointSet> =
            group.iter().map(|m| act(m, &rep)).collect::<Result<_>>()?;
        for member in &members {
            if classify_type(member)?.tag() != kind.tag() {
                return Err(mismatch(format!("type differs from orbit type {}", kind.tag()), *member));
            }
        }
        orbits.push(OrbitReport {
            kind: kind.tag(),
            size: orbit.size,
            stabilizer_order: orbit.stabilizer_order,
            representative: rep,
            profile: hyperplane_profile(&rep),
        });
    }

    let mut all_four = 0;
    let mut four_two = 0;
    for s in &sets {
        let kind = classify_type(s)?;
        let profile = hyperplane_profile(s);
        let has0 = profile.contains(&0);
        let has6 = profile.contains(&6);
        let separated = match kind {
            EvenSetType::TypeI { .. } => has0 && !has6,
            EvenSetType::TypeII { .. } => has6 && !has0,
            EvenSetType::NotTotallyEven => {
                return Err(mismatch("enumerated set is not totally even", *s))
            }
        };
        if !separated {
            return Err(mismatch(format!("profile {profile:?} does not separate type"), *s));
        }
        if profile.iter().all(|&n| n == 4) {
            all_four += 1;
        }
        if profile[0] == 4 && profile.contains(&2) {
            four_two += 1;
        }
    }
    if all_four + four_two > 0 {
        return Err(Error::Inconsistent(format!(
            "excluded profile shapes occur: all-four {all_four}, max-four-with-two {four_two}"
        )));
    }

    if census.orbit_count() != 2 {
        return Err(mismatch(
            format!("expected 2 orbits, found {}", census.orbit_count()),
            census.orbits.first().map(|o| o.representative).unwrap_or(PointSet::empty(DIM)?),
        ));
    }
    let type_one = orbits
        .iter()
        .find(|o| o.kind == "TypeI")
        .ok_or_else(|| mismatch("no TypeI orbit", type_one_example()))?;
    if type_one.size != 15 {
        return Err(mismatch(
            format!("TypeI orbit has size {}", type_one.size),
            type_one.representative,
        ));
    }
    let listed = type_two_example();
    let listed_is_two = matches!(classify_type(&listed)?, EvenSetType::TypeII { .. });
    if !listed_is_two {
        return Err(mismatch("listed exceptional set is not TypeII", listed));
    }

    Ok(LemmaEvReport {
        total_count: sets.len(),
        oracle_count: oracle.len(),
        group_order: census.group_order,
        orbit_count: census.orbit_count(),
        burnside_orbit_count: burnside,
        orbits,
        type_constant_on_orbits: true,
        profile_separates_types: true,
        excluded_cases: ExcludedCases {
            all_intersections_four: all_four,
            max_four_with_a_two: four_two,
        },
        listed_type_two_set_is_type_two: listed_is_two,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sizes() {
        assert_eq!(enumerate_totally_even(0).unwrap(), vec![PointSet::empty(4).unwrap()]);
        assert!(enumerate_totally_even(1).unwrap().is_empty());
        assert!(enumerate_totally_even(16).is_err());
    }

    #[test]
    fn size_eight_contains_both_examples() {
        let sets = enumerate_totally_even(8).unwrap();
        assert!(sets.len() >= 16);
        assert!(sets.contains(&type_one_example()));
        assert!(sets.contains(&type_two_example()));
        for h in all_hyperplanes(4).unwrap() {
            assert!(sets.contains(&h.points().complement()));
        }
        assert!(sets.windows(2).all(|w| w[0].bits() < w[1].bits()));
    }

    #[test]
    fn classify_examples() {
        let a4_zero = Hyperplane::from_coords(&[0, 0, 0, 1]).unwrap();
        assert_eq!(
            classify_type(&type_one_example()).unwrap(),
            EvenSetType::TypeI { witness: a4_zero }
        );
        let t2 = classify_type(&type_two_example()).unwrap();
        assert_eq!(t2.tag(), "TypeII");
        // The six-point plane of the listed set is a4 = 0.
        assert_eq!(t2.witness(), Some(a4_zero));
    }

    #[test]
    fn classify_rejects_wrong_size_and_flags_odd_sets() {
        let s = PointSet::from_encodings(4, &[1, 2, 3]).unwrap();
        assert!(matches!(classify_type(&s), Err(Error::WrongSize { expected: 8, found: 3 })));
        // {1..8}: the first 8 encodings; the hyperplane a1 = 0 contains 7 of them.
        let s = PointSet::from_encodings(4, &[1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        assert!(!is_totally_even(&s));
        assert_eq!(classify_type(&s).unwrap(), EvenSetType::NotTotallyEven);
    }

    #[test]
    fn serialized_type_has_tag_and_witness() {
        let t = classify_type(&type_one_example()).unwrap();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"type":"TypeI","witness":[0,0,0,1]}"#
        );
    }
}
