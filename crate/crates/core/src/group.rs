//! Finite abelian groups presented as products of cyclic factors.
//!
//! A group is an ordered list of cyclic orders `n_1, .., n_r`; elements are
//! residue tuples bound to the group they were created in. The canonical
//! element order is lexicographic on coordinates, which is also the
//! mixed-radix index order used by every matrix in this crate.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Splits `n` into `(k, odd)` with `n = 2^k * odd`.
///
/// `n` must be positive.
pub fn two_part(n: u64) -> (u32, u64) {
    assert!(n > 0, "two_part is undefined for 0");
    let k = n.trailing_zeros();
    (k, n >> k)
}

#[derive(Debug)]
struct GroupData {
    factors: Vec<u64>,
    order: u64,
    two_adic: u32,
    odd_part: u64,
    /// Mixed-radix strides, first factor most significant.
    strides: Vec<u64>,
}

/// A finite abelian group `Z_{n_1} x .. x Z_{n_r}`.
///
/// Cloning is cheap. Two groups are equal exactly when their factor lists
/// match; isomorphic but differently presented groups are distinct.
#[derive(Clone)]
pub struct AbelianGroup {
    data: Arc<GroupData>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Parse {
                what: "group",
                input: String::new(),
                reason: "at least one cyclic factor is required".into(),
            });
        }
        if let Some(&n) = factors.iter().find(|&&n| n < 2) {
            return Err(Error::FactorTooSmall(n));
        }
        let order = factors
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n))
            .ok_or_else(|| Error::Parse {
                what: "group",
                input: format_factors(&factors),
                reason: "group order overflows u64".into(),
            })?;
        let (two_adic, odd_part) = two_part(order);
        let mut strides = vec![1u64; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1];
        }
        Ok(Self {
            data: Arc::new(GroupData {
                factors,
                order,
                two_adic,
                odd_part,
                strides,
            }),
        })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u64] {
        &self.data.factors
    }

    pub fn rank(&self) -> usize {
        self.data.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.data.order
    }

    /// Number of vertices of any Cayley graph on this group.
    pub fn size(&self) -> usize {
        self.data.order as usize
    }

    /// The exponent `d` in `|G| = 2^d m`.
    pub fn two_adic_valuation(&self) -> u32 {
        self.data.two_adic
    }

    /// The odd part `m` in `|G| = 2^d m`.
    pub fn odd_part(&self) -> u64 {
        self.data.odd_part
    }

    /// True iff the Sylow-2-subgroup is cyclic, i.e. at most one factor is even.
    pub fn has_cyclic_sylow2(&self) -> bool {
        self.factors().iter().filter(|n| *n % 2 == 0).count() <= 1
    }

    fn even_factor(&self) -> Option<usize> {
        if !self.has_cyclic_sylow2() {
            return None;
        }
        self.factors().iter().position(|n| n % 2 == 0)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            coords: vec![0; self.rank()],
        }
    }

    /// Builds an element from residues, rejecting out-of-range coordinates.
    pub fn element(&self, coords: Vec<u64>) -> Result<GroupElement> {
        if coords.len() != self.rank() || coords.iter().zip(self.factors()).any(|(c, n)| c >= n) {
            return Err(Error::NotInGroup {
                element: format_tuple(&coords),
                group: self.to_string(),
            });
        }
        Ok(GroupElement {
            group: self.clone(),
            coords,
        })
    }

    /// Like [`AbelianGroup::element`] but reduces each coordinate modulo its factor.
    pub fn element_reduced(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::NotInGroup {
                element: format!("{coords:?}"),
                group: self.to_string(),
            });
        }
        let coords = coords
            .iter()
            .zip(self.factors())
            .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
            .collect();
        Ok(GroupElement {
            group: self.clone(),
            coords,
        })
    }

    /// Position of `g` in the canonical element order.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        debug_assert!(g.group == *self);
        g.coords
            .iter()
            .zip(&self.data.strides)
            .map(|(c, s)| c * s)
            .sum::<u64>() as usize
    }

    pub fn element_at(&self, index: usize) -> GroupElement {
        assert!(index < self.size(), "index {index} out of range for {self}");
        let mut rest = index as u64;
        let coords = self
            .data
            .strides
            .iter()
            .map(|s| {
                let c = rest / s;
                rest %= s;
                c
            })
            .collect();
        GroupElement {
            group: self.clone(),
            coords,
        }
    }

    /// All elements in canonical (lexicographic) order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.size()).map(move |i| self.element_at(i))
    }

    /// Parses `(g1,g2,..)`; single-factor groups also accept a bare integer.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let err = |reason: &str| Error::Parse {
            what: "element",
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let inner = match t.strip_prefix('(') {
            Some(rest) => rest.strip_suffix(')').ok_or_else(|| err("missing ')'"))?,
            None if self.rank() == 1 => t,
            None => return Err(err("expected a parenthesized tuple")),
        };
        let coords = inner
            .split(',')
            .map(|s| s.trim().parse::<u64>().map_err(|_| err("residues must be non-negative integers")))
            .collect::<Result<Vec<_>>>()?;
        self.element(coords)
    }

    /// The unique element of order two; exists iff the Sylow-2-subgroup is
    /// cyclic and nontrivial.
    pub fn unique_involution(&self) -> Result<GroupElement> {
        match self.even_factor() {
            Some(j) => {
                let mut coords = vec![0; self.rank()];
                coords[j] = self.factors()[j] / 2;
                Ok(GroupElement {
                    group: self.clone(),
                    coords,
                })
            }
            None => Err(Error::NoInvolution {
                group: self.to_string(),
            }),
        }
    }

    /// The pair `(b, -b)` of elements of order four, smaller coordinate first.
    pub fn order_four_pair(&self) -> Result<(GroupElement, GroupElement)> {
        match self.even_factor() {
            Some(j) if self.two_adic_valuation() >= 2 => {
                let n = self.factors()[j];
                let mut b = vec![0; self.rank()];
                let mut neg_b = vec![0; self.rank()];
                b[j] = n / 4;
                neg_b[j] = 3 * n / 4;
                Ok((
                    GroupElement {
                        group: self.clone(),
                        coords: b,
                    },
                    GroupElement {
                        group: self.clone(),
                        coords: neg_b,
                    },
                ))
            }
            _ => Err(Error::NoOrderFourPair {
                group: self.to_string(),
            }),
        }
    }

    /// All generators of `<g>`.
    pub fn power_class(&self, g: &GroupElement) -> BTreeSet<GroupElement> {
        let n = g.order();
        (1..=n).filter(|t| t.gcd(&n) == 1).map(|t| g * t).collect()
    }

    /// Partition of the group into power classes, sorted by (element order, key).
    pub fn power_classes(&self) -> Vec<PowerClass> {
        let mut seen = vec![false; self.size()];
        let mut classes = Vec::new();
        for g in self.elements() {
            if seen[self.index_of(&g)] {
                continue;
            }
            let members = self.power_class(&g);
            for h in &members {
                seen[self.index_of(h)] = true;
            }
            // Elements are visited in ascending order, so `g` is the smallest member.
            classes.push(PowerClass {
                order: g.order(),
                key: g,
                members,
            });
        }
        classes.sort_by(|x, y| x.order.cmp(&y.order).then_with(|| x.key.cmp(&y.key)));
        classes
    }

    /// True iff `set` is a union of power classes.
    pub fn is_power_closed<'a>(&self, set: impl IntoIterator<Item = &'a GroupElement>) -> bool {
        let members: BTreeSet<&GroupElement> = set.into_iter().collect();
        members
            .iter()
            .all(|g| self.power_class(g).iter().all(|h| members.contains(h)))
    }

    /// The unique subgroup of order `4m`, with its relabeling as a group.
    pub fn subgroup_4m(&self) -> Result<Subgroup4m> {
        match self.even_factor() {
            Some(j) if self.two_adic_valuation() >= 2 => {
                let scale = 1u64 << (self.two_adic_valuation() - 2);
                let mut factors = self.factors().to_vec();
                factors[j] /= scale;
                Ok(Subgroup4m {
                    parent: self.clone(),
                    group: AbelianGroup::new(factors)?,
                    even_factor: j,
                    scale,
                })
            }
            _ => Err(Error::NotOrderFourM {
                group: self.to_string(),
            }),
        }
    }

    /// Writes `g = x + h` with `x` in the Sylow-2-subgroup and `h` of odd order.
    pub fn split_two_odd(&self, g: &GroupElement) -> (GroupElement, GroupElement) {
        let two_order = 1u64 << self.two_adic_valuation();
        let m = self.odd_part();
        // e ≡ 1 (mod 2^d), e ≡ 0 (mod m)
        let e = if two_order == 1 {
            0
        } else {
            let inv = (1..two_order).find(|u| (m * u) % two_order == 1).unwrap_or(1);
            (m * inv) % self.order()
        };
        let x = g * e;
        let h = g - &x;
        (x, h)
    }

    pub(crate) fn check_same(&self, other: &AbelianGroup) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl PartialEq for AbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data.factors == other.data.factors
    }
}

impl Eq for AbelianGroup {}

impl Hash for AbelianGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.data.factors.hash(state);
    }
}

impl PartialOrd for AbelianGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AbelianGroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.data.factors.cmp(&other.data.factors)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_factors(self.factors()))
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbelianGroup({self})")
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    /// Grammar: `Z<n>(x Z<n>)*`, case-insensitive, whitespace-tolerant.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "group",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
        if compact.is_empty() {
            return Err(err("empty group specification"));
        }
        let factors = compact
            .split('x')
            .map(|part| {
                let digits = part.strip_prefix('z').ok_or_else(|| err("each factor must look like Z<n>"))?;
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(err("factor order must be a decimal integer"));
                }
                digits.parse::<u64>().map_err(|_| err("factor order out of range"))
            })
            .collect::<Result<Vec<_>>>()?;
        AbelianGroup::new(factors)
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub(crate) fn format_factors(factors: &[u64]) -> String {
    factors.iter().map(|n| format!("Z{n}")).collect::<Vec<_>>().join("x")
}

pub(crate) fn format_tuple(coords: &[u64]) -> String {
    let inner: Vec<String> = coords.iter().map(u64::to_string).collect();
    format!("({})", inner.join(","))
}

/// A residue tuple bound to its group.
///
/// The arithmetic operators panic when the operands live in different
/// groups; use [`GroupElement::try_add`] for a fallible version.
#[derive(Clone)]
pub struct GroupElement {
    group: AbelianGroup,
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Least positive `k` with `k * g = 0`.
    pub fn order(&self) -> u64 {
        self.coords
            .iter()
            .zip(self.group.factors())
            .map(|(&c, &n)| n / n.gcd(&c))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    pub fn try_add(&self, other: &GroupElement) -> Result<GroupElement> {
        self.group.check_same(&other.group)?;
        Ok(self.zip_with(other, |a, b, n| (a + b) % n))
    }

    pub fn try_sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.group.check_same(&other.group)?;
        Ok(self.zip_with(other, |a, b, n| (a + n - b) % n))
    }

    fn zip_with(&self, other: &GroupElement, f: impl Fn(u64, u64, u64) -> u64) -> GroupElement {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .zip(self.group.factors())
            .map(|((&a, &b), &n)| f(a, b, n))
            .collect();
        GroupElement {
            group: self.group.clone(),
            coords,
        }
    }

    pub fn scale(&self, k: u64) -> GroupElement {
        let coords = self
            .coords
            .iter()
            .zip(self.group.factors())
            .map(|(&c, &n)| ((c as u128 * k as u128) % n as u128) as u64)
            .collect();
        GroupElement {
            group: self.group.clone(),
            coords,
        }
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.group == other.group
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group
            .cmp(&other.group)
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tuple(&self.coords))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(serializer)
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;

    fn add(self, rhs: &GroupElement) -> GroupElement {
        self.try_add(rhs).expect("cross-group addition")
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;

    fn sub(self, rhs: &GroupElement) -> GroupElement {
        self.try_sub(rhs).expect("cross-group subtraction")
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;

    fn neg(self) -> GroupElement {
        let coords = self
            .coords
            .iter()
            .zip(self.group.factors())
            .map(|(&c, &n)| (n - c) % n)
            .collect();
        GroupElement {
            group: self.group.clone(),
            coords,
        }
    }
}

impl Mul<u64> for &GroupElement {
    type Output = GroupElement;

    fn mul(self, k: u64) -> GroupElement {
        self.scale(k)
    }
}

/// `k S = { k g : g in S }`; collisions merge.
pub fn scalar_multiple_set<'a>(k: u64, set: impl IntoIterator<Item = &'a GroupElement>) -> BTreeSet<GroupElement> {
    set.into_iter().map(|g| g * k).collect()
}

/// One power class, keyed by its lexicographically smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerClass {
    pub key: GroupElement,
    pub order: u64,
    pub members: BTreeSet<GroupElement>,
}

/// The subgroup `{g : order(g) | 4m}` together with its relabeling.
///
/// The even factor's surviving coordinates are the multiples of `2^{d-2}`;
/// dividing by that scale gives the relabeled coordinate.
#[derive(Debug, Clone)]
pub struct Subgroup4m {
    parent: AbelianGroup,
    group: AbelianGroup,
    even_factor: usize,
    scale: u64,
}

impl Subgroup4m {
    pub fn parent(&self) -> &AbelianGroup {
        &self.parent
    }

    /// The subgroup presented as a group in its own right.
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.group == self.parent && g.coords[self.even_factor].is_multiple_of(self.scale)
    }

    /// The subgroup's members, as elements of the parent.
    pub fn members(&self) -> Vec<GroupElement> {
        self.parent.elements().filter(|g| self.contains(g)).collect()
    }

    /// Parent element to relabeled subgroup element.
    pub fn restrict(&self, g: &GroupElement) -> Result<GroupElement> {
        self.parent.check_same(&g.group)?;
        if !self.contains(g) {
            return Err(Error::OutsideSubgroup { element: g.to_string() });
        }
        let mut coords = g.coords.clone();
        coords[self.even_factor] /= self.scale;
        Ok(GroupElement {
            group: self.group.clone(),
            coords,
        })
    }

    /// Relabeled subgroup element back to the parent.
    pub fn embed(&self, g: &GroupElement) -> Result<GroupElement> {
        self.group.check_same(&g.group)?;
        let mut coords = g.coords.clone();
        coords[self.even_factor] *= self.scale;
        Ok(GroupElement {
            group: self.parent.clone(),
            coords,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> AbelianGroup {
        s.parse().unwrap()
    }

    #[test]
    fn parses_group_specs() {
        let z = g("Z4xZ3xZ3");
        assert_eq!(z.factors(), &[4, 3, 3]);
        assert_eq!((z.order(), z.two_adic_valuation(), z.odd_part()), (36, 2, 9));
        let z2 = g("Z2");
        assert_eq!((z2.order(), z2.two_adic_valuation(), z2.odd_part()), (2, 1, 1));
        let z5 = g("Z5");
        assert_eq!((z5.order(), z5.two_adic_valuation(), z5.odd_part()), (5, 0, 5));
        assert_eq!(g(" z4 X z3 ").factors(), &[4, 3]);
    }

    #[test]
    fn rejects_bad_group_specs() {
        assert!(matches!("Z1".parse::<AbelianGroup>(), Err(Error::FactorTooSmall(1))));
        assert!(matches!("Z0xZ3".parse::<AbelianGroup>(), Err(Error::FactorTooSmall(0))));
        for bad in ["", "Z", "4x3", "Z4xx Z3", "Z-3", "Z4*Z3", "Z4x"] {
            assert!(bad.parse::<AbelianGroup>().is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn element_orders() {
        let z = g("Z4xZ3xZ3");
        assert_eq!(z.identity().order(), 1);
        assert_eq!(z.element(vec![1, 0, 0]).unwrap().order(), 4);
        assert_eq!(z.element(vec![2, 1, 0]).unwrap().order(), 6);
    }

    #[test]
    fn two_part_examples() {
        assert_eq!(two_part(12), (2, 3));
        assert_eq!(two_part(1), (0, 1));
        assert_eq!(two_part(8), (3, 1));
    }

    #[test]
    fn sylow2_cyclicity() {
        assert!(g("Z4xZ3xZ3").has_cyclic_sylow2());
        assert!(!g("Z2xZ2").has_cyclic_sylow2());
        assert!(g("Z8xZ3").has_cyclic_sylow2());
        assert!(!g("Z6xZ10").has_cyclic_sylow2());
    }

    #[test]
    fn involution_and_order_four_pair() {
        let z = g("Z4xZ3xZ3");
        assert_eq!(z.unique_involution().unwrap().coords(), &[2, 0, 0]);
        assert_eq!(g("Z2").unique_involution().unwrap().coords(), &[1]);
        assert_eq!(g("Z6").unique_involution().unwrap().coords(), &[3]);
        assert!(g("Z5").unique_involution().is_err());
        assert!(g("Z2xZ2").unique_involution().is_err());

        let (b, nb) = z.order_four_pair().unwrap();
        assert_eq!((b.coords(), nb.coords()), (&[1u64, 0, 0][..], &[3u64, 0, 0][..]));
        let (b, nb) = g("Z4").order_four_pair().unwrap();
        assert_eq!((b.coords(), nb.coords()), (&[1u64][..], &[3u64][..]));
        let (b, nb) = g("Z8xZ5").order_four_pair().unwrap();
        assert_eq!((b.coords(), nb.coords()), (&[2u64, 0][..], &[6u64, 0][..]));
        assert!(g("Z6").order_four_pair().is_err());
    }

    #[test]
    fn involution_pair_relations() {
        for name in ["Z4", "Z8xZ3", "Z12", "Z3xZ16", "Z4xZ3xZ3"] {
            let z = g(name);
            let a = z.unique_involution().unwrap();
            let (b, nb) = z.order_four_pair().unwrap();
            assert_eq!(&b * 2, a);
            assert_eq!(&nb * 2, a);
            assert!((&a * 2).is_identity());
            assert_eq!(-&b, nb);
            assert_eq!((a.order(), b.order()), (2, 4));
        }
    }

    #[test]
    fn power_class_examples() {
        let z8 = g("Z8");
        let class: Vec<u64> = z8.power_class(&z8.element(vec![1]).unwrap()).iter().map(|e| e.coords()[0]).collect();
        assert_eq!(class, vec![1, 3, 5, 7]);
        assert_eq!(z8.power_class(&z8.identity()).len(), 1);
        let z12 = g("Z12");
        let class: Vec<u64> = z12.power_class(&z12.element(vec![2]).unwrap()).iter().map(|e| e.coords()[0]).collect();
        assert_eq!(class, vec![2, 10]);
    }

    #[test]
    fn power_class_listing() {
        let classes = g("Z2").power_classes();
        assert_eq!(classes.len(), 2);

        let z12 = g("Z12");
        let listed: Vec<Vec<u64>> = z12
            .power_classes()
            .iter()
            .map(|c| c.members.iter().map(|e| e.coords()[0]).collect())
            .collect();
        assert_eq!(
            listed,
            vec![vec![0], vec![6], vec![4, 8], vec![3, 9], vec![2, 10], vec![1, 5, 7, 11]]
        );
    }

    /// Cyclic subgroups counted by generating each `<g>` as a set.
    fn cyclic_subgroup_count(z: &AbelianGroup) -> usize {
        let subgroups: BTreeSet<BTreeSet<GroupElement>> = z
            .elements()
            .map(|e| (0..e.order()).map(|k| &e * k).collect())
            .collect();
        subgroups.len()
    }

    #[test]
    fn power_classes_match_cyclic_subgroups() {
        for name in ["Z12", "Z4xZ3xZ3", "Z2xZ2xZ2", "Z9xZ3", "Z8xZ6"] {
            let z = g(name);
            assert_eq!(z.power_classes().len(), cyclic_subgroup_count(&z), "{name}");
        }
        // Brute-force count for the worked example group: 3 cyclic subgroups
        // of Z4 times 5 of Z3xZ3.
        assert_eq!(g("Z4xZ3xZ3").power_classes().len(), 15);
    }

    #[test]
    fn power_closure() {
        let z8 = g("Z8");
        let odd: Vec<_> = [1, 3, 5, 7].iter().map(|&c| z8.element(vec![c]).unwrap()).collect();
        assert!(z8.is_power_closed(&odd));
        assert!(z8.is_power_closed(std::iter::empty::<&GroupElement>()));
        let z12 = g("Z12");
        let two = z12.element(vec![2]).unwrap();
        assert!(!z12.is_power_closed([&two]));
    }

    #[test]
    fn scalar_multiples() {
        let z = g("Z4xZ3xZ3");
        let s = [z.element(vec![1, 1, 0]).unwrap(), z.element(vec![3, 2, 0]).unwrap()];
        assert_eq!(scalar_multiple_set(1, &s), s.iter().cloned().collect());
        let got: Vec<_> = scalar_multiple_set(4, &s).into_iter().map(|e| e.coords().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1, 0], vec![0, 2, 0]]);
        let z6 = g("Z6");
        let got = scalar_multiple_set(2, &[z6.element(vec![3]).unwrap()]);
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![z6.identity()]);
    }

    #[test]
    fn subgroup_of_order_4m() {
        let z = g("Z4xZ3xZ3");
        let sub = z.subgroup_4m().unwrap();
        assert_eq!(sub.group(), &z);
        assert_eq!(sub.members().len(), 36);

        let z = g("Z8xZ3");
        let sub = z.subgroup_4m().unwrap();
        assert_eq!(sub.group().factors(), &[4, 3]);
        let members = sub.members();
        assert_eq!(members.len(), 12);
        assert!(members.iter().all(|e| e.coords()[0] % 2 == 0));

        let z = g("Z16");
        let sub = z.subgroup_4m().unwrap();
        let coords: Vec<u64> = sub.members().iter().map(|e| e.coords()[0]).collect();
        assert_eq!(coords, vec![0, 4, 8, 12]);
        assert_eq!(sub.group().factors(), &[4]);

        assert!(g("Z6").subgroup_4m().is_err());
        assert!(g("Z2xZ4").subgroup_4m().is_err());
    }

    #[test]
    fn subgroup_relabeling_round_trips_and_is_a_homomorphism() {
        for name in ["Z8xZ3", "Z3xZ16", "Z24", "Z32xZ5"] {
            let z = g(name);
            let sub = z.subgroup_4m().unwrap();
            let members = sub.members();
            assert_eq!(members.len() as u64, 4 * z.odd_part());
            for x in &members {
                assert_eq!((4 * z.odd_part()) % x.order(), 0);
                let rx = sub.restrict(x).unwrap();
                assert_eq!(&sub.embed(&rx).unwrap(), x);
                assert_eq!(rx.order(), x.order());
                for y in members.iter().take(7) {
                    let ry = sub.restrict(y).unwrap();
                    assert_eq!(sub.restrict(&(x + y)).unwrap(), &rx + &ry);
                }
            }
            let outside = z.elements().find(|e| !sub.contains(e)).unwrap();
            assert!(sub.restrict(&outside).is_err());
        }
    }

    #[test]
    fn two_odd_split() {
        for name in ["Z12", "Z4xZ3xZ3", "Z8xZ5", "Z5", "Z2xZ9"] {
            let z = g(name);
            for e in z.elements() {
                let (x, h) = z.split_two_odd(&e);
                assert_eq!(&x + &h, e);
                assert!(x.order().is_power_of_two());
                assert_eq!(h.order() % 2, 1);
            }
        }
    }

    #[test]
    fn element_literals() {
        let z = g("Z4xZ3xZ3");
        assert_eq!(z.parse_element(" (2, 0,0) ").unwrap().coords(), &[2, 0, 0]);
        assert!(z.parse_element("(4,0,0)").is_err());
        assert!(z.parse_element("(1,0)").is_err());
        assert!(z.parse_element("2").is_err());
        let z4 = g("Z4");
        assert_eq!(z4.parse_element("3").unwrap().coords(), &[3]);
        assert_eq!(z4.parse_element("(3)").unwrap().coords(), &[3]);
    }

    #[test]
    fn cross_group_arithmetic_is_an_error() {
        let x = g("Z4").element(vec![1]).unwrap();
        let y = g("Z5").element(vec![1]).unwrap();
        assert!(matches!(x.try_add(&y), Err(Error::GroupMismatch { .. })));
        assert!(x.try_sub(&y).is_err());
    }

    #[test]
    fn canonical_index_round_trip() {
        let z = g("Z4xZ3xZ3");
        for (i, e) in z.elements().enumerate() {
            assert_eq!(z.index_of(&e), i);
        }
        let all: Vec<_> = z.elements().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
