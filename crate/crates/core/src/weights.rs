//! Integral weights for `sl(n)`, their singularity analysis, and the orbit of
//! Levi-regular conjugates together with the pair-deletion bijection onto the
//! regular orbit of the smaller Grassmannian.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Weight coordinate type.
pub type Coord = i64;

/// An integral weight for `sl(n)`, stored modulo the all-ones shift by
/// normalizing the last coordinate to 0 on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<Coord>,
}

impl Weight {
    /// Builds a weight from raw coordinates, normalizing so the last entry is 0.
    pub fn new(coords: Vec<Coord>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidRank(coords.len()));
        }
        let last = *coords.last().unwrap();
        let coords = coords.into_iter().map(|c| c - last).collect();
        Ok(Weight { coords })
    }

    /// Ambient rank `n`.
    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    /// True when the coordinates are non-increasing.
    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    /// The dominant conjugate: coordinates sorted descending, renormalized.
    pub fn dominant(&self) -> Weight {
        let mut coords = self.coords.clone();
        coords.sort_unstable_by(|a, b| b.cmp(a));
        Weight::new(coords).expect("rank preserved")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords.iter().join(","))
    }
}

/// The weight `rho = (n-1, n-2, ..., 1, 0)`.
pub fn rho(n: usize) -> Result<Weight> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    Weight::new((0..n).rev().map(|i| i as Coord).collect())
}

/// The singularity data of a weight relative to the `k | n-k` block decomposition:
/// positions of the repeated pairs in the dominant arrangement, the repeated
/// values `I` and the non-repeated values `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityProfile {
    n: usize,
    k: usize,
    /// S: 1-based positions `s_1 < ... < s_l` of the repeated pairs.
    positions: Vec<usize>,
    /// I: repeated values, strictly descending.
    repeated: Vec<Coord>,
    /// J: non-repeated values, strictly descending.
    nonrepeated: Vec<Coord>,
}

impl SingularityProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The order of singularity `l` (number of repeated pairs).
    pub fn order(&self) -> usize {
        self.repeated.len()
    }

    /// Size of the free part of the first block, `a = k - l`.
    pub fn a(&self) -> usize {
        self.k - self.order()
    }

    /// Size of the third group, `b = n - k`.
    pub fn b(&self) -> usize {
        self.n - self.k
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn repeated(&self) -> &[Coord] {
        &self.repeated
    }

    pub fn nonrepeated(&self) -> &[Coord] {
        &self.nonrepeated
    }

    /// The dominant coordinate list: every J-value once, every I-value twice.
    pub fn dominant_coords(&self) -> Vec<Coord> {
        let mut all: Vec<Coord> = self.nonrepeated.clone();
        all.extend(self.repeated.iter().copied());
        all.extend(self.repeated.iter().copied());
        all.sort_unstable_by(|a, b| b.cmp(a));
        all
    }
}

/// Reads off the singularity set of `mu` in its dominant arrangement.
///
/// Non-dominant input is sorted descending first (with a logged notice);
/// the positions in `S` refer to the sorted arrangement.
pub fn analyze_singularity(mu: &Weight, k: usize) -> Result<SingularityProfile> {
    let n = mu.n();
    if k < 1 || 2 * k > n {
        return Err(Error::InvalidInput(format!(
            "k must satisfy 1 <= k <= n/2; got k = {k}, n = {n}"
        )));
    }
    if !mu.is_dominant() {
        log::info!("weight {mu} is not dominant; conjugating to the dominant chamber");
    }
    let dom = mu.dominant();
    let coords = dom.coords();

    let mut positions = Vec::new();
    let mut repeated = Vec::new();
    let mut nonrepeated = Vec::new();
    let mut i = 0;
    while i < n {
        let value = coords[i];
        let run = coords[i..].iter().take_while(|&&c| c == value).count();
        match run {
            1 => nonrepeated.push(value),
            2 => {
                positions.push(i + 1);
                repeated.push(value);
            }
            count => return Err(Error::SingularityTooDeep { value, count }),
        }
        i += run;
    }
    let l = repeated.len();
    if l > k {
        return Err(Error::NoRegularConjugate { l, k });
    }
    Ok(SingularityProfile {
        n,
        k,
        positions,
        repeated,
        nonrepeated,
    })
}

/// A conjugate of the weight that is regular and dominant for the Levi
/// `S(GL(k) x GL(n-k))`: two strictly descending coordinate groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitElement {
    first: Vec<Coord>,
    second: Vec<Coord>,
}

impl OrbitElement {
    pub fn new(first: Vec<Coord>, second: Vec<Coord>) -> Result<Self> {
        if !strictly_descending(&first) || !strictly_descending(&second) {
            return Err(Error::InvalidOrbitElement(format!(
                "groups must be strictly descending: ({}|{})",
                first.iter().join(","),
                second.iter().join(","),
            )));
        }
        Ok(OrbitElement { first, second })
    }

    /// Constructor without the strict-descent check, for derived data such as
    /// rho-shifted bundle weights that may repeat values.
    pub(crate) fn new_unchecked(first: Vec<Coord>, second: Vec<Coord>) -> Self {
        OrbitElement { first, second }
    }

    pub fn first(&self) -> &[Coord] {
        &self.first
    }

    pub fn second(&self) -> &[Coord] {
        &self.second
    }
}

impl fmt::Display for OrbitElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}|{})",
            crate::render::group_string(&self.first),
            crate::render::group_string(&self.second)
        )
    }
}

pub(crate) fn strictly_descending(values: &[Coord]) -> bool {
    values.windows(2).all(|w| w[0] > w[1])
}

/// All splittings of the coordinate multiset into a strictly descending
/// `k`-group and a strictly descending `(n-k)`-group.
///
/// Each repeated value is forced to contribute one copy to each side, so the
/// orbit has `C(n-2l, k-l)` elements, indexed by the choice of J-values in
/// the first group.
pub fn compute_orbit(profile: &SingularityProfile) -> Vec<OrbitElement> {
    let a = profile.a();
    let j = profile.nonrepeated();
    let i_vals = profile.repeated();
    let mut orbit = Vec::new();
    for chosen in (0..j.len()).combinations(a) {
        let mut first: Vec<Coord> = chosen.iter().map(|&idx| j[idx]).collect();
        first.extend(i_vals.iter().copied());
        first.sort_unstable_by(|x, y| y.cmp(x));
        let mut second: Vec<Coord> = (0..j.len())
            .filter(|idx| !chosen.contains(idx))
            .map(|idx| j[idx])
            .collect();
        second.extend(i_vals.iter().copied());
        second.sort_unstable_by(|x, y| y.cmp(x));
        orbit.push(OrbitElement { first, second });
    }
    orbit
}

/// Checks that `nu` is a Levi-regular conjugate of the profile's weight.
pub fn is_in_orbit(nu: &OrbitElement, profile: &SingularityProfile) -> bool {
    if nu.first.len() != profile.k() || nu.second.len() != profile.b() {
        return false;
    }
    if !strictly_descending(&nu.first) || !strictly_descending(&nu.second) {
        return false;
    }
    let mut counts: BTreeMap<Coord, isize> = BTreeMap::new();
    for &c in nu.first.iter().chain(nu.second.iter()) {
        *counts.entry(c).or_insert(0) += 1;
    }
    for &c in profile.dominant_coords().iter() {
        *counts.entry(c).or_insert(0) -= 1;
    }
    counts.values().all(|&v| v == 0)
}

/// Removes every repeated value from both groups, landing in the regular
/// orbit for the Grassmannian `G(k-l, n-2l)` on the non-repeated values.
pub fn delete_pairs(nu: &OrbitElement, profile: &SingularityProfile) -> Result<OrbitElement> {
    if !is_in_orbit(nu, profile) {
        return Err(Error::InvalidOrbitElement(format!(
            "{nu} is not a Levi-regular conjugate of the analyzed weight"
        )));
    }
    let keep = |group: &[Coord]| -> Vec<Coord> {
        group
            .iter()
            .copied()
            .filter(|c| !profile.repeated().contains(c))
            .collect()
    };
    Ok(OrbitElement {
        first: keep(&nu.first),
        second: keep(&nu.second),
    })
}

/// Inverse of [`delete_pairs`]: inserts each repeated value into both groups
/// at the unique position preserving strict descent.
pub fn insert_pairs(nu_prime: &OrbitElement, profile: &SingularityProfile) -> Result<OrbitElement> {
    let l = profile.order();
    if nu_prime.first.len() != profile.k() - l || nu_prime.second.len() != profile.b() - l {
        return Err(Error::InvalidOrbitElement(format!(
            "{nu_prime} has the wrong group sizes for reinsertion"
        )));
    }
    let insert_all = |group: &[Coord]| -> Result<Vec<Coord>> {
        let mut out = group.to_vec();
        for &v in profile.repeated() {
            if out.contains(&v) {
                return Err(Error::Internal(format!(
                    "inserting {v} into ({}) would duplicate a value inside a group",
                    out.iter().join(",")
                )));
            }
            let pos = out.partition_point(|&c| c > v);
            out.insert(pos, v);
        }
        Ok(out)
    };
    Ok(OrbitElement {
        first: insert_all(&nu_prime.first)?,
        second: insert_all(&nu_prime.second)?,
    })
}

/// Number of cross-inversions between the two groups: pairs `(a, b)` with
/// `a` in the first group, `b` in the second, and `a < b`. This is the
/// minimal arrow count from the start of the regular Hasse diagram.
pub fn grassmannian_length(nu: &OrbitElement) -> usize {
    cross_inversions(&nu.first, &nu.second)
}

pub(crate) fn cross_inversions(first: &[Coord], second: &[Coord]) -> usize {
    first
        .iter()
        .map(|&a| second.iter().filter(|&&b| a < b).count())
        .sum()
}
