//! Finite abelian groups standing in for the torsion of `H^2(X, Z)`.
//!
//! A group is a product of cyclic groups `Z/n_1 x ... x Z/n_r`, not
//! necessarily in invariant-factor form. Elements are residue vectors.
//! Torsion classes are handled directly as group elements; no separate
//! first-Chern-class map is modelled.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest group for which element-indexed tables are built.
pub const MAX_ENUMERATED_ORDER: u64 = 1 << 24;

/// Default cap on the size of a materialized automorphism group.
pub const BURNSIDE_GROUP_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
}

impl TryFrom<Vec<u64>> for FiniteAbelianGroup {
    type Error = Error;
    fn try_from(orders: Vec<u64>) -> Result<Self> {
        Self::new(orders)
    }
}

impl From<FiniteAbelianGroup> for Vec<u64> {
    fn from(g: FiniteAbelianGroup) -> Self {
        g.orders
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = orders.iter().find(|&&n| n < 2) {
            return Err(Error::Validation(format!("cyclic factor order {bad} must be >= 2")));
        }
        orders
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n))
            .ok_or(Error::Overflow("group order"))?;
        Ok(FiniteAbelianGroup { orders })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { orders: vec![] }
    }

    /// `(Z/n)^r`.
    pub fn homocyclic(n: u64, r: usize) -> Result<Self> {
        Self::new(vec![n; r])
    }

    /// Parses a comma-separated list such as `2,2,2`; empty means trivial.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Self::trivial());
        }
        let orders = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("bad cyclic order {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(orders)
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Common cyclic order when all factors agree.
    pub fn homocyclic_order(&self) -> Option<u64> {
        let first = *self.orders.first()?;
        self.orders.iter().all(|&n| n == first).then_some(first)
    }

    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::Validation(format!(
                "element has {} coordinates, group has rank {}",
                coords.len(),
                self.rank()
            )));
        }
        let coords = coords
            .iter()
            .zip(&self.orders)
            .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
            .collect();
        Ok(GroupElement { coords })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.rank()] }
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if a.coords.len() != self.rank() || a.coords.iter().zip(&self.orders).any(|(&c, &n)| c >= n) {
            return Err(Error::Validation(format!("{:?} is not an element of {:?}", a.coords, self.orders)));
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .zip(&self.orders)
            .map(|((&x, &y), &n)| (x + y) % n)
            .collect();
        GroupElement { coords }
    }

    pub fn scale(&self, k: u64, a: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(&self.orders)
            .map(|(&x, &n)| ((x as u128 * (k % n) as u128) % n as u128) as u64)
            .collect();
        GroupElement { coords }
    }

    /// Mixed-radix index; the first coordinate is the most significant.
    pub fn index_of(&self, a: &GroupElement) -> usize {
        a.coords
            .iter()
            .zip(&self.orders)
            .fold(0u64, |acc, (&c, &n)| acc * n + c) as usize
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut coords = vec![0; self.rank()];
        for (slot, &n) in coords.iter_mut().zip(&self.orders).rev() {
            *slot = (index as u64) % n;
            index /= n as usize;
        }
        GroupElement { coords }
    }

    fn enumerable_order(&self) -> Result<usize> {
        let order = self.order();
        if order > MAX_ENUMERATED_ORDER {
            return Err(Error::Validation(format!(
                "group of order {order} is too large to enumerate (limit {MAX_ENUMERATED_ORDER})"
            )));
        }
        Ok(order as usize)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }

    /// Invariant factors `d_1 | d_2 | ... | d_s` (ascending, each >= 2).
    pub fn invariant_factors(&self) -> Vec<u64> {
        let mut by_prime: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
        for &n in &self.orders {
            for (p, k) in factorize(n) {
                by_prime.entry(p).or_default().push(p.pow(k));
            }
        }
        let width = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; width];
        for powers in by_prime.values_mut() {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (i, q) in powers.iter().enumerate() {
                factors[width - 1 - i] *= q;
            }
        }
        factors
    }

    pub fn normalized(&self) -> FiniteAbelianGroup {
        FiniteAbelianGroup { orders: self.invariant_factors() }
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `|{g : d g = 0}| = prod gcd(d, n_i)`.
pub fn tor_d_order(g: &FiniteAbelianGroup, d: u64) -> Result<u64> {
    if d < 1 {
        return Err(Error::Validation("d must be >= 1".into()));
    }
    Ok(g.orders.iter().map(|&n| d.gcd(&n)).product())
}

/// Number of d-sheeted totally ramified cyclic coverings branched along a
/// fixed curve whose class is divisible by `d`: the branch data form a
/// torsor under the d-torsion.
pub fn covering_count(g: &FiniteAbelianGroup, d: u64) -> Result<u64> {
    if d < 2 {
        return Err(Error::Validation(format!("covering degree d={d} must be >= 2")));
    }
    tor_d_order(g, d)
}

/// Whether `a = d x` for some `x`; coordinatewise, `gcd(d, n_i) | a_i`.
pub fn is_divisible(g: &FiniteAbelianGroup, a: &GroupElement, d: u64) -> Result<bool> {
    if d < 1 {
        return Err(Error::Validation("d must be >= 1".into()));
    }
    g.check(a)?;
    Ok(a.coords.iter().zip(&g.orders).all(|(&c, &n)| c % d.gcd(&n) == 0))
}

/// An element `alpha` with `d alpha = 0` that is not divisible by `d`, if any.
///
/// Such an element exists iff for some factor `Z/n` with `g = gcd(d, n) > 1`,
/// `g` does not divide `n / g`; the element `n / g` in that factor is a witness.
pub fn non_divisible_torsion_witness(g: &FiniteAbelianGroup, d: u64) -> Result<Option<GroupElement>> {
    if d < 1 {
        return Err(Error::Validation("d must be >= 1".into()));
    }
    for (i, &n) in g.orders.iter().enumerate() {
        let k = d.gcd(&n);
        if k > 1 && (n / k) % k != 0 {
            let mut coords = vec![0; g.rank()];
            coords[i] = n / k;
            return Ok(Some(GroupElement { coords }));
        }
    }
    Ok(None)
}

/// Lower bound on the number of moduli components coming from the two
/// divisibility classes of the canonical class: 2 when a d-torsion class not
/// divisible by `d` exists, else 1.
pub fn theorem_mod_component_bound(g: &FiniteAbelianGroup, d: u64) -> Result<u64> {
    if d < 2 {
        return Err(Error::Validation(format!("d={d} must be >= 2")));
    }
    Ok(if non_divisible_torsion_witness(g, d)?.is_some() { 2 } else { 1 })
}

/// An automorphism of a finite abelian group, as given by the user.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AutAction {
    /// `table[i]` is the index of the image of the element with index `i`
    /// (see [`FiniteAbelianGroup::index_of`]).
    Table { table: Vec<usize> },
    /// Acts on column vectors: `phi(x)_i = sum_j matrix[i][j] x_j mod n`.
    /// Only for homocyclic groups `(Z/n)^r`.
    Matrix { matrix: Vec<Vec<i64>> },
}

impl AutAction {
    pub fn identity() -> Self {
        AutAction::Table { table: vec![] }
    }

    /// Validates against `g` and returns the induced permutation of indices.
    /// An empty table is accepted as the identity.
    pub fn permutation(&self, g: &FiniteAbelianGroup) -> Result<Vec<usize>> {
        let order = g.enumerable_order()?;
        let perm: Vec<usize> = match self {
            AutAction::Table { table } if table.is_empty() => (0..order).collect(),
            AutAction::Table { table } => {
                if table.len() != order {
                    return Err(Error::Validation(format!(
                        "table has {} entries, group has {order} elements",
                        table.len()
                    )));
                }
                table.clone()
            }
            AutAction::Matrix { matrix } => matrix_permutation(g, matrix)?,
        };
        check_automorphism(g, &perm)?;
        Ok(perm)
    }

    /// Multiplication by a unit `k` (an automorphism of every finite abelian
    /// group when `k` is prime to its exponent).
    pub fn scalar(g: &FiniteAbelianGroup, k: i64) -> Result<Self> {
        let order = g.enumerable_order()?;
        let table = (0..order)
            .map(|i| {
                let x = g.element_at(i);
                let coords: Vec<i64> = x.coords.iter().map(|&c| c as i64 * k).collect();
                Ok(g.index_of(&g.element(&coords)?))
            })
            .collect::<Result<_>>()?;
        Ok(AutAction::Table { table })
    }
}

fn matrix_permutation(g: &FiniteAbelianGroup, matrix: &[Vec<i64>]) -> Result<Vec<usize>> {
    let r = g.rank();
    let Some(n) = g.homocyclic_order() else {
        if r == 0 && matrix.is_empty() {
            return Ok(vec![0]);
        }
        return Err(Error::Validation(
            "matrix automorphisms are only accepted for homocyclic groups (Z/n)^r".into(),
        ));
    };
    if matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
        return Err(Error::Validation(format!("matrix must be {r} x {r}")));
    }
    let det = determinant_mod(matrix, n);
    if det.gcd(&n) != 1 {
        return Err(Error::Validation(format!(
            "matrix determinant {det} is not a unit mod {n}"
        )));
    }
    let ni = n as i64;
    (0..g.order() as usize)
        .map(|i| {
            let x = g.element_at(i);
            let image: Vec<i64> = matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&x.coords)
                        .map(|(&a, &c)| (a.rem_euclid(ni) as u128 * c as u128 % n as u128) as i64)
                        .sum::<i64>()
                })
                .collect();
            Ok(g.index_of(&g.element(&image)?))
        })
        .collect()
}

/// Determinant mod `n` by cofactor expansion on residues (ranks here are small).
fn determinant_mod(m: &[Vec<i64>], n: u64) -> u64 {
    let ni = n as i128;
    fn det(rows: &[Vec<i128>], ni: i128) -> i128 {
        match rows.len() {
            0 => 1,
            1 => rows[0][0].rem_euclid(ni),
            len => (0..len)
                .map(|j| {
                    let minor: Vec<Vec<i128>> = rows[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                        .collect();
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * rows[0][j] * det(&minor, ni) % ni
                })
                .sum::<i128>()
                .rem_euclid(ni),
        }
    }
    let rows: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&v| (v as i128).rem_euclid(ni)).collect())
        .collect();
    det(&rows, ni) as u64
}

/// Checks that `perm` is a bijective homomorphism. A map is additive iff it
/// is the linear extension of its values on the standard generators and
/// those values are killed by the generators' orders; both conditions are
/// checked on every element.
fn check_automorphism(g: &FiniteAbelianGroup, perm: &[usize]) -> Result<()> {
    let order = perm.len();
    let mut hit = vec![false; order];
    for &p in perm {
        if p >= order || std::mem::replace(&mut hit[p], true) {
            return Err(Error::Validation("table is not a bijection of the group".into()));
        }
    }
    let images: Vec<GroupElement> = (0..g.rank())
        .map(|i| {
            let mut coords = vec![0; g.rank()];
            coords[i] = 1;
            g.element_at(perm[g.index_of(&GroupElement { coords })])
        })
        .collect();
    for (img, &n) in images.iter().zip(&g.orders) {
        if !g.scale(n, img).is_zero() {
            return Err(Error::Validation("image of a generator has the wrong order".into()));
        }
    }
    for (i, &image) in perm.iter().enumerate() {
        let x = g.element_at(i);
        let linear = x
            .coords
            .iter()
            .zip(&images)
            .fold(g.zero(), |acc, (&c, img)| g.add(&acc, &g.scale(c, img)));
        if g.index_of(&linear) != image {
            return Err(Error::Validation(format!(
                "map is not a homomorphism at element {:?}",
                x.coords
            )));
        }
    }
    Ok(())
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller index as root so the result is order independent.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn roots(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

/// Number of orbits of the subgroup generated by `generators` on `g`,
/// by union-find over the edges `x -- phi(x)`.
pub fn orbit_count(g: &FiniteAbelianGroup, generators: &[AutAction]) -> Result<u64> {
    let order = g.enumerable_order()?;
    let perms = generators
        .iter()
        .map(|a| a.permutation(g))
        .collect::<Result<Vec<_>>>()?;
    let mut sets = DisjointSets::new(order);
    for perm in &perms {
        for (x, &y) in perm.iter().enumerate() {
            sets.union(x, y);
        }
    }
    Ok(sets.roots() as u64)
}

/// Orbit count by Burnside's lemma over the materialized generated group.
/// Fails if that group has more than `limit` elements.
pub fn orbit_count_burnside(
    g: &FiniteAbelianGroup,
    generators: &[AutAction],
    limit: usize,
) -> Result<u64> {
    let order = g.enumerable_order()?;
    let gens = generators
        .iter()
        .map(|a| a.permutation(g))
        .collect::<Result<Vec<_>>>()?;
    let identity: Vec<usize> = (0..order).collect();
    let mut seen = std::collections::HashSet::new();
    let mut frontier = vec![identity.clone()];
    seen.insert(identity);
    while let Some(p) = frontier.pop() {
        for s in &gens {
            let q: Vec<usize> = p.iter().map(|&i| s[i]).collect();
            if seen.insert(q.clone()) {
                if seen.len() > limit {
                    return Err(Error::Validation(format!(
                        "generated automorphism group exceeds {limit} elements"
                    )));
                }
                frontier.push(q);
            }
        }
    }
    let fixed: u64 = seen
        .iter()
        .map(|p| p.iter().enumerate().filter(|&(i, &j)| i == j).count() as u64)
        .sum();
    let h = seen.len() as u64;
    if !fixed.is_multiple_of(h) {
        return Err(Error::Inconsistent(format!("{fixed} fixed points over a group of order {h}")));
    }
    Ok(fixed / h)
}

/// Number of moduli components containing numerically (d, m)-canonical
/// coverings of a ball quotient: the number of automorphism orbits on
/// torsion, valid when `dm >= 5` and `gcd(d - 1, |Tor|) = 1`.
pub fn cnew_component_count(
    g: &FiniteAbelianGroup,
    generators: &[AutAction],
    d: u64,
    m: u64,
) -> Result<u64> {
    if d < 2 || m < 1 {
        return Err(Error::HypothesisViolation(format!("need d >= 2 and m >= 1 (d={d}, m={m})")));
    }
    if d * m < 5 {
        return Err(Error::HypothesisViolation(format!("dm >= 5 fails: dm = {}", d * m)));
    }
    let common = (d - 1).gcd(&g.order());
    if common != 1 {
        return Err(Error::HypothesisViolation(format!(
            "gcd(d - 1, |Tor|) = 1 fails: gcd({}, {}) = {common}",
            d - 1,
            g.order()
        )));
    }
    orbit_count(g, generators)
}

/// Components of the moduli space containing (d, m)-canonical coverings of the
/// two rigid surfaces with `K^2 = 333`, `e = 111`: three families (the first
/// surface, its conjugate, and the second surface) each contributing one
/// component per element of the `(Z/5)^6` torsion subgroup, on which
/// automorphisms act trivially.
pub fn cplus_total(d: u64, m: u64) -> Result<u64> {
    if d * m < 5 {
        return Err(Error::HypothesisViolation(format!("dm >= 5 fails: dm = {}", d * m)));
    }
    if d % 5 == 1 {
        return Err(Error::HypothesisViolation(format!("d = 1 (mod 5) excluded, d={d}")));
    }
    let torsion = FiniteAbelianGroup::homocyclic(5, 6)?;
    Ok(3 * cnew_component_count(&torsion, &[AutAction::identity()], d, m)?)
}
