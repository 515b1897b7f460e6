//! Labeled line arrangements in the projective plane over Q and Q(ω).
//!
//! Every incidence is computed exactly: two lines meet at the cross product
//! of their coefficient vectors, and points are grouped by their normalized
//! coordinates.

use std::collections::{BTreeMap, BTreeSet};

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evenclass::{classify_type, EvenSetType};
use crate::f2geom::{is_totally_even, F2Point, PointRepr, PointSet};
use crate::scalar::ExactScalar;

pub use crate::invariants::k2_from_heavy_points;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "Q(omega)")]
    Eisenstein,
}

type Triple = [ExactScalar; 3];

/// Scales `v` so that its first nonzero entry is 1; `None` for the zero vector.
fn normalize(v: Triple) -> Option<Triple> {
    let pivot = v.iter().find(|c| !c.is_zero())?.inv().ok()?;
    Some(v.map(|c| &c * &pivot))
}

fn cross(u: &Triple, v: &Triple) -> Triple {
    [
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

fn dot(u: &Triple, v: &Triple) -> ExactScalar {
    &(&(&u[0] * &v[0]) + &(&u[1] * &v[1])) + &(&u[2] * &v[2])
}

macro_rules! projective_type {
    ($(#[$meta:meta])* $name:ident, $what:literal) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
        #[serde(transparent)]
        pub struct $name(Triple);

        impl $name {
            pub fn new(v: Triple) -> Result<Self> {
                normalize(v)
                    .map($name)
                    .ok_or_else(|| Error::Validation(concat!("a ", $what, " needs a nonzero vector").into()))
            }

            pub fn from_ints(v: [i64; 3]) -> Result<Self> {
                Self::new(v.map(ExactScalar::from_int))
            }

            pub fn coords(&self) -> &Triple {
                &self.0
            }
        }
    };
}

projective_type!(
    /// A line `c0 x + c1 y + c2 z = 0`, normalized so the first nonzero coefficient is 1.
    ProjLine,
    "line"
);
projective_type!(
    /// A point `(x : y : z)`, normalized so the first nonzero coordinate is 1.
    ProjPoint,
    "point"
);

impl ProjLine {
    pub fn contains(&self, p: &ProjPoint) -> bool {
        dot(&self.0, &p.0).is_zero()
    }

    /// The intersection point, `None` when the lines coincide.
    pub fn meet(&self, other: &ProjLine) -> Option<ProjPoint> {
        normalize(cross(&self.0, &other.0)).map(ProjPoint)
    }
}

/// Lines with optional F2 labels. An unlabeled arrangement has an empty
/// label list and is only good for incidence computations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledArrangement {
    field: Field,
    lines: Vec<ProjLine>,
    labels: Vec<F2Point>,
}

impl LabeledArrangement {
    pub fn new(field: Field, lines: Vec<ProjLine>, labels: Vec<F2Point>) -> Result<Self> {
        let mut seen = BTreeMap::new();
        for (i, l) in lines.iter().enumerate() {
            if let Some(j) = seen.insert(l, i) {
                return Err(Error::Validation(format!("lines {j} and {i} coincide")));
            }
            if field == Field::Rational && l.0.iter().any(|c| !c.is_rational()) {
                return Err(Error::Validation(format!("line {i} has an omega component over Q")));
            }
        }
        if !labels.is_empty() {
            if labels.len() != lines.len() {
                return Err(Error::Validation(format!(
                    "{} labels for {} lines",
                    labels.len(),
                    lines.len()
                )));
            }
            if labels.iter().any(|p| p.dim() != labels[0].dim()) {
                return Err(Error::Validation("labels have mixed dimensions".into()));
            }
        }
        Ok(LabeledArrangement { field, lines, labels })
    }

    pub fn unlabeled(field: Field, lines: Vec<ProjLine>) -> Result<Self> {
        Self::new(field, lines, Vec::new())
    }

    /// Syntax errors surface as [`Error::Parse`]; well-formed input that
    /// breaks an invariant gives the specific error.
    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str::<RawArrangement>(s)?.build()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn labels(&self) -> &[F2Point] {
        &self.labels
    }

    pub fn label_dim(&self) -> Option<u8> {
        self.labels.first().map(F2Point::dim)
    }

    /// Applies `m` to every coefficient vector. This is the image of the
    /// arrangement under the point map with matrix `m^{-T}`, so incidences
    /// are preserved.
    pub fn transform(&self, m: &[Triple; 3]) -> Result<Self> {
        let det = dot(&m[0], &cross(&m[1], &m[2]));
        if det.is_zero() {
            return Err(Error::Validation("transformation matrix is singular".into()));
        }
        let field = if m.iter().flatten().all(ExactScalar::is_rational) {
            self.field
        } else {
            Field::Eisenstein
        };
        let lines = self
            .lines
            .iter()
            .map(|l| ProjLine::new([dot(&m[0], &l.0), dot(&m[1], &l.0), dot(&m[2], &l.0)]))
            .collect::<Result<_>>()?;
        Self::new(field, lines, self.labels.clone())
    }
}

#[derive(Deserialize)]
struct RawArrangement {
    #[serde(default = "default_field")]
    field: Field,
    lines: Vec<Triple>,
    #[serde(default)]
    labels: Vec<PointRepr>,
}

fn default_field() -> Field {
    Field::Rational
}

impl RawArrangement {
    fn build(self) -> Result<LabeledArrangement> {
        let lines = self.lines.into_iter().map(ProjLine::new).collect::<Result<Vec<_>>>()?;
        // Integer labels carry no dimension: seven lines mean PG(2), otherwise PG(3).
        let dim = self
            .labels
            .iter()
            .find_map(|r| match r {
                PointRepr::Coords(c) => Some(c.len() as u8),
                PointRepr::Encoding(_) => None,
            })
            .unwrap_or(if lines.len() == 7 { 3 } else { 4 });
        let labels = self.labels.iter().map(|r| r.to_point(dim)).collect::<Result<_>>()?;
        LabeledArrangement::new(self.field, lines, labels)
    }
}

impl<'de> Deserialize<'de> for LabeledArrangement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        RawArrangement::deserialize(d)?.build().map_err(de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidencePoint {
    pub point: ProjPoint,
    pub lines: Vec<usize>,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceReport {
    pub line_count: usize,
    pub points: Vec<IncidencePoint>,
    /// multiplicity -> number of points
    pub histogram: BTreeMap<usize, usize>,
}

impl IncidenceReport {
    pub fn points_of_multiplicity_at_least(&self, r: usize) -> impl Iterator<Item = &IncidencePoint> {
        self.points.iter().filter(move |p| p.multiplicity >= r)
    }

    /// No point lies on three or more lines.
    pub fn is_generic(&self) -> bool {
        self.histogram.keys().all(|&r| r <= 2)
    }
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn compute_incidences(arr: &LabeledArrangement) -> Result<IncidenceReport> {
    let lines = &arr.lines;
    let mut groups: BTreeMap<ProjPoint, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = lines[i]
                .meet(&lines[j])
                .ok_or_else(|| Error::Validation(format!("lines {i} and {j} coincide")))?;
            let entry = groups.entry(p).or_default();
            entry.insert(i);
            entry.insert(j);
        }
    }
    let mut histogram = BTreeMap::new();
    let points: Vec<IncidencePoint> = groups
        .into_iter()
        .map(|(point, on)| {
            *histogram.entry(on.len()).or_insert(0) += 1;
            IncidencePoint { point, multiplicity: on.len(), lines: on.into_iter().collect() }
        })
        .collect();

    let pairs: usize = points.iter().map(|p| choose2(p.multiplicity)).sum();
    if pairs != choose2(lines.len()) {
        return Err(Error::Inconsistent(format!(
            "incidence points account for {pairs} line pairs, expected {}",
            choose2(lines.len())
        )));
    }
    for p in &points {
        for (i, l) in lines.iter().enumerate() {
            if l.contains(&p.point) != p.lines.contains(&i) {
                return Err(Error::Inconsistent(format!("line {i} misfiled at {:?}", p.point)));
            }
        }
    }
    Ok(IncidenceReport { line_count: lines.len(), points, histogram })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "kebab-case")]
pub enum Violation {
    /// The labels are not the seven nonzero vectors of F2^3, each used once.
    Labels { missing: Vec<F2Point>, repeated: Vec<F2Point> },
    /// A point on four or more lines.
    HighMultiplicity { point: ProjPoint, lines: Vec<usize>, multiplicity: usize },
    /// A triple point whose three labels add up to zero.
    ZeroSumTriple { point: ProjPoint, lines: Vec<usize>, labels: Vec<F2Point> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampedelliReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub histogram: BTreeMap<usize, usize>,
}

/// Checks the covering data of a seven-line arrangement labeled by PG(2, F2).
pub fn check_campedelli(arr: &LabeledArrangement) -> Result<CampedelliReport> {
    if arr.lines.len() != 7 {
        return Err(Error::Validation(format!("expected 7 lines, found {}", arr.lines.len())));
    }
    if arr.label_dim() != Some(3) {
        return Err(Error::Validation("labels must be nonzero vectors of F2^3".into()));
    }
    let incid = compute_incidences(arr)?;
    let mut violations = Vec::new();

    let mut counts: BTreeMap<F2Point, usize> = BTreeMap::new();
    for p in &arr.labels {
        *counts.entry(*p).or_insert(0) += 1;
    }
    let missing: Vec<F2Point> = (1..8)
        .map(|b| F2Point::new(3, b))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| !counts.contains_key(p))
        .collect();
    let repeated: Vec<F2Point> = counts.iter().filter(|(_, &n)| n > 1).map(|(p, _)| *p).collect();
    if !missing.is_empty() || !repeated.is_empty() {
        violations.push(Violation::Labels { missing, repeated });
    }

    for p in &incid.points {
        if p.multiplicity >= 4 {
            violations.push(Violation::HighMultiplicity {
                point: p.point.clone(),
                lines: p.lines.clone(),
                multiplicity: p.multiplicity,
            });
        } else if p.multiplicity == 3 {
            let labels: Vec<F2Point> = p.lines.iter().map(|&i| arr.labels[i]).collect();
            let sum = labels.iter().fold(0u8, |acc, l| acc ^ l.encoding());
            if sum == 0 {
                violations.push(Violation::ZeroSumTriple {
                    point: p.point.clone(),
                    lines: p.lines.clone(),
                    labels,
                });
            }
        }
    }
    Ok(CampedelliReport { passed: violations.is_empty(), violations, histogram: incid.histogram })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub sum_zero: bool,
    pub totally_even: bool,
    #[serde(rename = "type")]
    pub kind: EvenSetType,
    /// No three of the eight lines are concurrent.
    pub generic: bool,
    pub histogram: BTreeMap<usize, usize>,
}

/// Label analysis for an eight-line arrangement labeled by PG(3, F2).
pub fn analyze_extension(arr: &LabeledArrangement) -> Result<ExtensionReport> {
    if arr.lines.len() != 8 {
        return Err(Error::Validation(format!("expected 8 lines, found {}", arr.lines.len())));
    }
    if arr.label_dim() != Some(4) {
        return Err(Error::Validation("labels must be nonzero vectors of F2^4".into()));
    }
    let set = PointSet::from_points(4, &arr.labels)?;
    if set.len() != arr.labels.len() {
        return Err(Error::Validation("extension labels must be pairwise distinct".into()));
    }
    let incid = compute_incidences(arr)?;
    Ok(ExtensionReport {
        sum_zero: set.vector_sum() == 0,
        totally_even: is_totally_even(&set),
        kind: classify_type(&set)?,
        generic: incid.is_generic(),
        histogram: incid.histogram,
    })
}
