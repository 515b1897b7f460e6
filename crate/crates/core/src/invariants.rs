//! Numerical invariants of surfaces and of their numerically
//! (d, m)-canonical totally ramified cyclic coverings.
//!
//! Every formula is evaluated in arbitrary-precision integers. Divisions are
//! checked: a remainder is reported as [`Error::NonIntegralInvariant`], never
//! rounded. Results are converted back to `i64` with an overflow check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(K^2, p_a, p_g, q, e)` of a smooth projective surface.
///
/// Always satisfies `p_a = p_g - q + 1` and Noether's formula
/// `K^2 + e = 12 p_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    #[serde(rename = "K2")]
    pub k2: i64,
    pub pa: i64,
    pub pg: i64,
    pub q: i64,
    pub e: i64,
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn to_i64(x: &BigInt, what: &'static str) -> Result<i64> {
    x.to_i64().ok_or(Error::Overflow(what))
}

impl SurfaceInvariants {
    pub fn new(pg: i64, q: i64, k2: i64) -> Result<Self> {
        if pg < 0 || q < 0 {
            return Err(Error::Validation(format!("p_g={pg}, q={q} must be non-negative")));
        }
        let pa = pg.checked_sub(q).and_then(|x| x.checked_add(1)).ok_or(Error::Overflow("p_a"))?;
        let e = pa
            .checked_mul(12)
            .and_then(|x| x.checked_sub(k2))
            .ok_or(Error::Overflow("e"))?;
        Ok(SurfaceInvariants { k2, pa, pg, q, e })
    }

    /// From the arithmetic genus, irregularity and `K^2`.
    pub fn from_pa(pa: i64, q: i64, k2: i64) -> Result<Self> {
        let pg = pa.checked_add(q).and_then(|x| x.checked_sub(1)).ok_or(Error::Overflow("p_g"))?;
        Self::new(pg, q, k2)
    }

    /// From the Chern numbers `K^2 = c_1^2` and `e = c_2`.
    pub fn from_chern(k2: i64, e: i64, q: i64) -> Result<Self> {
        let sum = k2.checked_add(e).ok_or(Error::Overflow("K^2 + e"))?;
        if sum % 12 != 0 {
            return Err(Error::NonIntegralInvariant(format!(
                "K^2 + e = {sum} is not divisible by 12"
            )));
        }
        Self::from_pa(sum / 12, q, k2)
    }

    /// Checks the defining identities; used after deserialization.
    pub fn validate(&self) -> Result<()> {
        if self.pa != self.pg - self.q + 1 {
            return Err(Error::Validation(format!(
                "p_a={} but p_g - q + 1 = {}",
                self.pa,
                self.pg - self.q + 1
            )));
        }
        if self.k2 + self.e != 12 * self.pa {
            return Err(Error::Validation(format!(
                "Noether fails: K^2 + e = {} but 12 p_a = {}",
                self.k2 + self.e,
                12 * self.pa
            )));
        }
        if self.pg < 0 || self.q < 0 {
            return Err(Error::Validation("p_g and q must be non-negative".into()));
        }
        Ok(())
    }

    /// `c_1^2 = 3 c_2`, the equality case of the Miyaoka-Yau inequality.
    pub fn is_miyaoka_yau(&self) -> bool {
        self.k2 > 0 && self.k2 == 3 * self.e
    }
}

/// Degree `d` and multiple `m` of a covering branched along `B ≡ d m K_X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoveringParams {
    pub d: i64,
    pub m: i64,
}

impl CoveringParams {
    pub fn new(d: i64, m: i64) -> Result<Self> {
        if d < 2 {
            return Err(Error::Validation(format!("covering degree d={d} must be >= 2")));
        }
        if m < 1 {
            return Err(Error::Validation(format!("multiple m={m} must be >= 1")));
        }
        Ok(CoveringParams { d, m })
    }

    pub fn dm(&self) -> i64 {
        self.d * self.m
    }
}

/// Invariants of a numerically (d, m)-canonical totally ramified cyclic
/// covering `Y -> X`.
///
/// `K^2_Y = d (dm - m + 1)^2 K^2_X`, `p_a(Y) = d p_a(X) + d(d-1)m((2d-1)m+3) K^2_X / 12`,
/// `e(Y) = 12 d p_a(X) + d((d-1)(dm+1)m - 1) K^2_X` and `q(Y) = q(X)`. The
/// three are evaluated independently and Noether's formula is checked on
/// the result.
pub fn covering_invariants(x: &SurfaceInvariants, c: &CoveringParams) -> Result<SurfaceInvariants> {
    x.validate()?;
    let (d, m, k2, pa) = (big(c.d), big(c.m), big(x.k2), big(x.pa));
    let one = BigInt::from(1);

    let k2_y = &d * (&d * &m - &m + &one).pow(2) * &k2;

    let numerator = &d * (&d - &one) * &m * ((big(2) * &d - &one) * &m + big(3)) * &k2;
    let (quot, rem) = numerator.div_rem(&big(12));
    if !rem.is_zero() {
        return Err(Error::NonIntegralInvariant(format!(
            "d(d-1)m((2d-1)m+3)K^2 = {numerator} is not divisible by 12 (d={}, m={}, K^2={})",
            c.d, c.m, x.k2
        )));
    }
    let pa_y = &d * &pa + quot;

    let e_y = big(12) * &d * &pa + &d * ((&d - &one) * (&d * &m + &one) * &m - &one) * &k2;

    if &k2_y + &e_y != big(12) * &pa_y {
        return Err(Error::Inconsistent(format!(
            "Noether fails on the covering: K^2={k2_y}, e={e_y}, p_a={pa_y}"
        )));
    }
    let q = x.q;
    let pg_y = &pa_y + big(q) - &one;
    Ok(SurfaceInvariants {
        k2: to_i64(&k2_y, "K^2 of the covering")?,
        pa: to_i64(&pa_y, "p_a of the covering")?,
        pg: to_i64(&pg_y, "p_g of the covering")?,
        q,
        e: to_i64(&e_y, "e of the covering")?,
    })
}

/// Genus of a smooth branch curve `B ≡ d m K_X`, from `2g - 2 = dm(dm+1) K^2`.
pub fn branch_curve_genus(k2: i64, c: &CoveringParams) -> Result<i64> {
    let n = big(c.dm());
    let twice = &n * (&n + 1) * big(k2);
    // dm(dm+1) is even, so the division is exact.
    to_i64(&(twice / 2 + 1), "branch curve genus")
}

fn require_pg0(x: &SurfaceInvariants) -> Result<()> {
    x.validate()?;
    if x.pg != 0 || x.q != 0 {
        return Err(Error::HypothesisViolation(format!(
            "requires p_g = q = 0, got p_g={}, q={}",
            x.pg, x.q
        )));
    }
    Ok(())
}

/// `1 + m(m+1)K^2/2` for a (2, m) covering, computed from the linear system
/// and compared against the general covering formula.
pub fn pg_of_double_cover_pg0(x: &SurfaceInvariants, m: i64) -> Result<i64> {
    require_pg0(x)?;
    if m < 1 {
        return Err(Error::HypothesisViolation(format!("m={m} must be >= 1")));
    }
    let direct = h0_k_plus_c(x, m)?;
    let general = covering_invariants(x, &CoveringParams::new(2, m)?)?.pg;
    if direct != general {
        return Err(Error::Inconsistent(format!(
            "p_g of the double cover: {direct} from K_X + C, {general} from p_a"
        )));
    }
    Ok(direct)
}

/// `h^0(K_X + C) = (K_X + C, C)/2 + 1 = m(m+1)K^2/2 + 1` for `C ≡ m K_X` on a
/// surface with `p_g = q = 0`.
pub fn h0_k_plus_c(x: &SurfaceInvariants, m: i64) -> Result<i64> {
    require_pg0(x)?;
    if m < 0 {
        return Err(Error::HypothesisViolation(format!("m={m} must be >= 0")));
    }
    let v = big(m) * big(m + 1) * big(x.k2) / 2 + 1;
    to_i64(&v, "h0(K + C)")
}

/// Degree of the canonical map of a double cover factoring through a map of
/// degree `base_degree` on the base.
pub fn composed_canonical_degree(base_degree: u64) -> Result<u64> {
    if base_degree == 0 {
        return Err(Error::Validation("base degree must be >= 1".into()));
    }
    base_degree.checked_mul(2).ok_or(Error::Overflow("canonical degree"))
}

/// Whether a generic member of `|dm K_X|` is known to be smooth and
/// irreducible: always when `dm >= 5`, otherwise by the small-multiple table
/// (`4K` needs `K^2 >= 2`, `3K` needs `K^2 >= 3`, `2K` needs `K^2 >= 5`).
pub fn generic_pluricanonical_smooth(d: i64, k2: i64, m: i64) -> Result<bool> {
    if d < 2 || m < 1 || k2 < 1 {
        return Err(Error::Validation(format!(
            "need d >= 2, m >= 1, K^2 >= 1 (got d={d}, m={m}, K^2={k2})"
        )));
    }
    Ok(match d * m {
        n if n >= 5 => true,
        4 => k2 >= 2,
        3 => k2 >= 3,
        2 => k2 >= 5,
        _ => false,
    })
}

/// Dimension `m(2m-1)K^2 + p_g` of a moduli component of double covers of a
/// ball quotient; requires `2m >= 5`.
pub fn moduli_dimension(m: i64, x: &SurfaceInvariants) -> Result<i64> {
    x.validate()?;
    if 2 * m < 5 {
        return Err(Error::HypothesisViolation(format!("requires 2m >= 5, got m={m}")));
    }
    let v = big(m) * big(2 * m - 1) * big(x.k2) + big(x.pg);
    to_i64(&v, "moduli dimension")
}

/// Lower bound `dm(dm-1)K^2/2 + p_g` on the dimension of the moduli component.
pub fn moduli_dimension_lower_bound(c: &CoveringParams, x: &SurfaceInvariants) -> Result<i64> {
    x.validate()?;
    let n = big(c.dm());
    let v = &n * (&n - 1) * big(x.k2) / 2 + big(x.pg);
    to_i64(&v, "moduli dimension bound")
}

/// Burniat surfaces: `K^2 = 9 - n` where `n` is the number of points of
/// multiplicity at least 3 of the branch arrangement.
pub fn k2_from_heavy_points(n_heavy: u32) -> Result<i64> {
    if n_heavy > 6 {
        return Err(Error::Validation(format!(
            "{n_heavy} heavy points is outside the Burniat range 0..=6"
        )));
    }
    Ok(9 - n_heavy as i64)
}
