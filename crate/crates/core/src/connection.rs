//! Connection sets: inverse-closed, identity-free subsets defining Cayley graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{two_part, AbelianGroup, GroupElement, PowerClass};

/// A validated connection set of a Cayley graph `X(G, C)`.
///
/// The identity is stripped on construction (loops never affect state
/// transfer); `identity_stripped` records whether that happened.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConnectionSet {
    group: AbelianGroup,
    elements: BTreeSet<GroupElement>,
    identity_stripped: bool,
}

impl ConnectionSet {
    pub fn new(group: &AbelianGroup, elements: impl IntoIterator<Item = GroupElement>) -> Result<Self> {
        let mut set = BTreeSet::new();
        let mut identity_stripped = false;
        for g in elements {
            if g.group() != group {
                return Err(Error::NotInGroup {
                    element: g.to_string(),
                    group: group.to_string(),
                });
            }
            if g.is_identity() {
                identity_stripped = true;
            } else {
                set.insert(g);
            }
        }
        if let Some(g) = set.iter().find(|g| !set.contains(&-*g)) {
            return Err(Error::NotInverseClosed {
                element: g.to_string(),
                inverse: (-g).to_string(),
            });
        }
        Ok(Self {
            group: group.clone(),
            elements: set,
            identity_stripped,
        })
    }

    pub fn empty(group: &AbelianGroup) -> Self {
        Self {
            group: group.clone(),
            elements: BTreeSet::new(),
            identity_stripped: false,
        }
    }

    /// Union of the given power classes.
    pub fn from_classes<'a>(group: &AbelianGroup, classes: impl IntoIterator<Item = &'a PowerClass>) -> Self {
        let elements = classes.into_iter().flat_map(|c| c.members.iter().cloned());
        Self::new(group, elements).expect("power classes are inverse-closed")
    }

    /// Parses a set literal such as `{(1,0), (3,0)}`; single-factor groups
    /// accept bare integers, e.g. `{1,3}`.
    pub fn parse(group: &AbelianGroup, text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::Parse {
                what: "connection set",
                input: text.to_string(),
                reason: "expected {elem, elem, ...}".into(),
            })?;
        let elements = split_top_level(inner)
            .into_iter()
            .filter(|s| !s.trim().is_empty())
            .map(|s| group.parse_element(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, elements)
    }

    /// Parses a JSON array of element tuples, e.g. `[[1,0],[3,0]]`.
    /// Single-factor groups may use bare integers.
    pub fn from_json(group: &AbelianGroup, json: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            what: "connection set JSON",
            input: json.chars().take(80).collect(),
            reason,
        };
        let value: serde_json::Value = serde_json::from_str(json).map_err(|e| err(e.to_string()))?;
        let items = value.as_array().ok_or_else(|| err("expected a JSON array".into()))?;
        let elements = items
            .iter()
            .map(|item| {
                let coords: Vec<u64> = match item {
                    serde_json::Value::Array(xs) => xs
                        .iter()
                        .map(|x| x.as_u64().ok_or_else(|| err(format!("bad residue {x}"))))
                        .collect::<Result<_>>()?,
                    serde_json::Value::Number(n) => vec![n.as_u64().ok_or_else(|| err(format!("bad residue {n}")))?],
                    other => return Err(err(format!("bad element {other}"))),
                };
                group.element(coords)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, elements)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn elements(&self) -> &BTreeSet<GroupElement> {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = &GroupElement> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.contains(g)
    }

    pub fn identity_stripped(&self) -> bool {
        self.identity_stripped
    }

    pub fn is_power_closed(&self) -> bool {
        self.group.is_power_closed(&self.elements)
    }

    /// `C_k` for `k = 0..=d`: elements whose order has 2-adic valuation `k`.
    /// Every key is present, possibly with an empty set.
    pub fn partition_by_two_part(&self) -> BTreeMap<u32, ConnectionSet> {
        let mut parts: BTreeMap<u32, BTreeSet<GroupElement>> =
            (0..=self.group.two_adic_valuation()).map(|k| (k, BTreeSet::new())).collect();
        for g in &self.elements {
            let (k, _) = two_part(g.order());
            parts.entry(k).or_default().insert(g.clone());
        }
        parts
            .into_iter()
            .map(|(k, elements)| {
                (
                    k,
                    ConnectionSet {
                        group: self.group.clone(),
                        elements,
                        identity_stripped: false,
                    },
                )
            })
            .collect()
    }

    /// True iff `self` and `other` share no element.
    pub fn is_disjoint(&self, other: &ConnectionSet) -> bool {
        self.elements.is_disjoint(&other.elements)
    }

    pub fn union(&self, other: &ConnectionSet) -> Result<ConnectionSet> {
        self.group.check_same(&other.group)?;
        Self::new(&self.group, self.elements.union(&other.elements).cloned())
    }
}

/// Splits on commas that are not nested inside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.elements.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

impl fmt::Debug for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConnectionSet({} in {})", self, self.group)
    }
}

impl Serialize for ConnectionSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.elements)
    }
}
