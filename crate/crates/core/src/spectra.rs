//! Characters of abelian groups and the spectra of translation graphs.
//!
//! Every character `chi_j(g) = prod exp(2 pi i j_i g_i / n_i)` is an
//! eigenvector of every Cayley graph on the group, with eigenvalue
//! `chi_j(C) = sum_{g in C} chi_j(g)`.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::connection::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::{format_tuple, AbelianGroup, GroupElement};

/// Eigenvalues are accepted as integers within this distance.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-7;

/// Index `(j_1, .., j_r)` of a character of an abelian group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterIndex {
    group: AbelianGroup,
    indices: Vec<u64>,
}

impl CharacterIndex {
    pub fn new(group: &AbelianGroup, indices: Vec<u64>) -> Result<Self> {
        // Same shape and ranges as an element.
        let e = group.element(indices)?;
        Ok(Self {
            group: group.clone(),
            indices: e.coords().to_vec(),
        })
    }

    pub fn trivial(group: &AbelianGroup) -> Self {
        Self {
            group: group.clone(),
            indices: vec![0; group.rank()],
        }
    }

    /// All `|G|` character indices in canonical order.
    pub fn all(group: &AbelianGroup) -> impl Iterator<Item = CharacterIndex> + '_ {
        group.elements().map(|e| CharacterIndex {
            group: group.clone(),
            indices: e.coords().to_vec(),
        })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    pub fn is_trivial(&self) -> bool {
        self.indices.iter().all(|&j| j == 0)
    }
}

impl fmt::Display for CharacterIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi{}", format_tuple(&self.indices))
    }
}

impl fmt::Debug for CharacterIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Roots of unity of order `lcm(n_i)`, shared by all characters of a group.
///
/// `chi_j(g) = root(sum_i j_i g_i (L / n_i) mod L)`.
pub(crate) struct PhaseTable {
    exponent: u64,
    factors: Vec<u64>,
    weights: Vec<u64>,
    roots: Vec<Complex64>,
}

impl PhaseTable {
    pub(crate) fn new(group: &AbelianGroup) -> Self {
        let exponent = group.factors().iter().fold(1u64, |acc, n| acc.lcm(n));
        let weights = group.factors().iter().map(|n| exponent / n).collect();
        let roots = (0..exponent).map(|r| root_of_unity(r, exponent)).collect();
        Self {
            exponent,
            factors: group.factors().to_vec(),
            weights,
            roots,
        }
    }

    pub(crate) fn phase(&self, j: &[u64], g: &[u64]) -> usize {
        let mut r = 0u64;
        for (((&ji, &gi), &w), &n) in j.iter().zip(g).zip(&self.weights).zip(&self.factors) {
            r = (r + (ji * gi % n) * w) % self.exponent;
        }
        r as usize
    }

    pub(crate) fn value(&self, j: &[u64], g: &[u64]) -> Complex64 {
        self.roots[self.phase(j, g)]
    }

    /// `chi_j(C)` for a set given by coordinate slices, summed in the given order.
    pub(crate) fn sum<'a>(&self, j: &[u64], set: impl IntoIterator<Item = &'a [u64]>) -> Complex64 {
        set.into_iter().map(|g| self.value(j, g)).sum()
    }
}

/// `exp(2 pi i r / n)` for `0 <= r < n`.
fn root_of_unity(r: u64, n: u64) -> Complex64 {
    // Exact values at the quarter turns keep +-1 and +-i free of rounding noise.
    if !(4 * r).is_multiple_of(n) {
        return Complex64::from_polar(1.0, TAU * r as f64 / n as f64);
    }
    match 4 * r / n {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// `chi_j(g)`.
pub fn character_value(j: &CharacterIndex, g: &GroupElement) -> Result<Complex64> {
    j.group.check_same(g.group())?;
    let exponent = j.group.factors().iter().fold(1u64, |acc, n| acc.lcm(n));
    let r = j
        .indices
        .iter()
        .zip(g.coords())
        .zip(j.group.factors())
        .fold(0u64, |r, ((&ji, &gi), &n)| (r + (ji * gi % n) * (exponent / n)) % exponent);
    Ok(root_of_unity(r, exponent))
}

/// `chi_j(C)`: the eigenvalue of `X(G, C)` on the eigenvector `chi_j`.
pub fn character_sum(j: &CharacterIndex, c: &ConnectionSet) -> Result<Complex64> {
    j.group.check_same(c.group())?;
    c.iter().map(|g| character_value(j, g)).sum()
}

/// Raw character sums for every character, in canonical character order.
pub fn character_sums(c: &ConnectionSet) -> Vec<Complex64> {
    let group = c.group();
    let table = PhaseTable::new(group);
    let coords: Vec<&[u64]> = c.iter().map(GroupElement::coords).collect();
    group
        .elements()
        .map(|j| table.sum(j.coords(), coords.iter().copied()))
        .collect()
}

/// Integer spectrum of an integral translation graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Spectrum {
    group: AbelianGroup,
    by_character: Vec<i64>,
    multiplicities: BTreeMap<i64, usize>,
}

impl Spectrum {
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    /// `(eigenvalue, multiplicity)` pairs, largest eigenvalue first.
    pub fn eigenvalues(&self) -> Vec<(i64, usize)> {
        self.multiplicities.iter().rev().map(|(&v, &m)| (v, m)).collect()
    }

    /// Distinct eigenvalues, largest first.
    pub fn distinct(&self) -> Vec<i64> {
        self.multiplicities.keys().rev().copied().collect()
    }

    pub fn multiplicity(&self, value: i64) -> usize {
        self.multiplicities.get(&value).copied().unwrap_or(0)
    }

    pub fn total_multiplicity(&self) -> usize {
        self.multiplicities.values().sum()
    }

    pub fn max(&self) -> i64 {
        *self.multiplicities.keys().next_back().expect("spectrum is never empty")
    }

    pub fn eigenvalue(&self, j: &CharacterIndex) -> i64 {
        self.by_character[self.group.index_of(&self.group.element(j.indices.clone()).expect("index in range"))]
    }

    /// `(character, eigenvalue)` in canonical character order.
    pub fn by_character(&self) -> impl Iterator<Item = (CharacterIndex, i64)> + '_ {
        CharacterIndex::all(&self.group).zip(self.by_character.iter().copied())
    }

    /// Eigenvalues indexed by canonical character position.
    pub fn values(&self) -> &[i64] {
        &self.by_character
    }

    pub fn all_odd(&self) -> bool {
        self.multiplicities.keys().all(|v| v.rem_euclid(2) == 1)
    }

    pub fn all_even(&self) -> bool {
        self.multiplicities.keys().all(|v| v.rem_euclid(2) == 0)
    }

    pub fn has_odd(&self) -> bool {
        !self.all_even()
    }

    pub fn delta(&self) -> Option<u64> {
        delta(self)
    }
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.eigenvalues()).finish()
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[i64; 2]> = self.eigenvalues().into_iter().map(|(v, m)| [v, m as i64]).collect();
        let mut st = serializer.serialize_struct("Spectrum", 1)?;
        st.serialize_field("eigenvalues", &pairs)?;
        st.end()
    }
}

/// Evaluates every character sum and rounds it to an integer.
///
/// Fails with [`Error::NonIntegral`] naming a witness character when some
/// sum is not within [`INTEGRALITY_TOLERANCE`] of an integer, which
/// happens exactly when `C` is not power-closed.
pub fn integral_spectrum(c: &ConnectionSet) -> Result<Spectrum> {
    let group = c.group();
    let mut by_character = Vec::with_capacity(group.size());
    let mut multiplicities = BTreeMap::new();
    for (idx, sum) in character_sums(c).into_iter().enumerate() {
        let rounded = sum.re.round();
        if sum.im.abs() > INTEGRALITY_TOLERANCE || (sum.re - rounded).abs() > INTEGRALITY_TOLERANCE {
            let j = group.element_at(idx);
            return Err(Error::NonIntegral {
                character: format!("chi{j}"),
                re: sum.re,
                im: sum.im,
            });
        }
        let v = rounded as i64;
        by_character.push(v);
        *multiplicities.entry(v).or_insert(0) += 1;
    }
    Ok(Spectrum {
        group: group.clone(),
        by_character,
        multiplicities,
    })
}

/// `gcd { theta_0 - theta_r }` over the distinct eigenvalues, `theta_0` the
/// largest. `None` when there is only one distinct eigenvalue.
pub fn delta(s: &Spectrum) -> Option<u64> {
    let top = s.max();
    let g = s
        .distinct()
        .into_iter()
        .skip(1)
        .fold(0u64, |acc, v| acc.gcd(&((top - v) as u64)));
    (g > 0).then_some(g)
}

pub fn odd_eigenvalue_exists(c: &ConnectionSet) -> Result<bool> {
    Ok(integral_spectrum(c)?.has_odd())
}
