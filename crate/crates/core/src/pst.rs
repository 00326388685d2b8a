//! Deciding perfect state transfer on 2-circulants.
//!
//! A 2-circulant is a Cayley graph of an abelian group whose Sylow-2-subgroup
//! is cyclic. Write `|G| = 2^d m` with `m` odd, let `a` be the unique
//! involution and `b, -b` the elements of order four, and split `C` into
//! `C_k`, the elements whose order has 2-adic valuation `k`.
//!
//! * `d = 0`: no perfect state transfer.
//! * `d = 1`: perfect state transfer iff `C = {a}` (a perfect matching).
//! * `d >= 2`: perfect state transfer iff `C` is power-closed, exactly one
//!   of `a`, `b` lies in `C`, `C_0 = 4(C_2 \ {±b})` and
//!   `C_1 \ {a} = 2(C_2 \ {±b})`.
//!
//! Whenever it happens, the transfer is from `0` to `a` at time `pi/2`.

use std::collections::BTreeSet;
use std::f64::consts::FRAC_PI_2;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::connection::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::{scalar_multiple_set, AbelianGroup, GroupElement, Subgroup4m};
use crate::json::F17;
use crate::spectra::{character_value, integral_spectrum};
use crate::walk::WalkTime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PST")]
    Pst,
    #[serde(rename = "NoPST")]
    NoPst,
    /// The group's Sylow-2-subgroup is not cyclic.
    #[serde(rename = "OutOfScope")]
    OutOfScope,
}

/// Pass/fail of each named check; `None` when the check does not apply.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Conditions {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power_closed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exactly_one_of_a_b: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c0_equals_4c2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c1_equals_2c2: Option<bool>,
    /// `C_0 = C_1* \ {0} = C_2* \ {0}` (order-4m form of the last two checks).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c0_c1star_c2star: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching_case: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_order_case: Option<bool>,
}

impl Conditions {
    fn all_pass(&self) -> bool {
        [
            self.power_closed,
            self.exactly_one_of_a_b,
            self.c0_equals_4c2,
            self.c1_equals_2c2,
            self.c0_c1star_c2star,
            self.matching_case,
            self.odd_order_case,
        ]
        .into_iter()
        .flatten()
        .all(|ok| ok)
    }
}

/// Outcome of the characterization for one `(G, C)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PstReport {
    pub verdict: Verdict,
    /// `(source, target)`, always `(0, a)` when present.
    pub pair: Option<(GroupElement, GroupElement)>,
    pub time: Option<WalkTime>,
    pub conditions: Conditions,
    pub diagnostics: Vec<String>,
}

impl PstReport {
    pub fn has_pst(&self) -> bool {
        self.verdict == Verdict::Pst
    }

    pub fn target(&self) -> Option<&GroupElement> {
        self.pair.as_ref().map(|(_, t)| t)
    }

    fn decide(group: &AbelianGroup, conditions: Conditions, diagnostics: Vec<String>) -> Self {
        if conditions.all_pass() {
            let a = group.unique_involution().expect("PST groups have an involution");
            PstReport {
                verdict: Verdict::Pst,
                pair: Some((group.identity(), a)),
                time: Some(WalkTime::HALF_PI),
                conditions,
                diagnostics,
            }
        } else {
            PstReport {
                verdict: Verdict::NoPst,
                pair: None,
                time: None,
                conditions,
                diagnostics,
            }
        }
    }
}

#[derive(Serialize)]
struct PairJson<'a> {
    source: &'a GroupElement,
    target: &'a GroupElement,
}

#[derive(Serialize)]
struct TimeJson {
    exact: String,
    value: F17,
}

impl Serialize for PstReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PstReport", 5)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field(
            "pair",
            &self.pair.as_ref().map(|(source, target)| PairJson { source, target }),
        )?;
        st.serialize_field(
            "time",
            &self.time.map(|t| TimeJson {
                exact: t.to_string(),
                value: F17(t.value()),
            }),
        )?;
        st.serialize_field("conditions", &self.conditions)?;
        st.serialize_field("diagnostics", &self.diagnostics)?;
        st.end()
    }
}

fn show(set: &BTreeSet<GroupElement>) -> String {
    let inner: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// Decides perfect state transfer on `X(G, C)` from the structure of `C`.
///
/// Never fails: groups outside the theorem's hypothesis get
/// [`Verdict::OutOfScope`].
pub fn characterize_pst(c: &ConnectionSet) -> PstReport {
    let group = c.group();
    let mut conditions = Conditions::default();
    let mut diagnostics = Vec::new();

    if !group.has_cyclic_sylow2() {
        return PstReport {
            verdict: Verdict::OutOfScope,
            pair: None,
            time: None,
            conditions,
            diagnostics: vec![format!("{group} has a non-cyclic Sylow-2-subgroup")],
        };
    }

    match group.two_adic_valuation() {
        0 => {
            conditions.odd_order_case = Some(false);
            diagnostics.push(format!("{group} has odd order; Cayley graphs of odd order have no perfect state transfer"));
        }
        1 => {
            let a = group.unique_involution().expect("d = 1 has an involution");
            let matching = c.len() == 1 && c.contains(&a);
            conditions.matching_case = Some(matching);
            if !matching {
                diagnostics.push(format!("order 2m with m odd requires C = {{{a}}} (a perfect matching), got {c}"));
            }
        }
        _ => {
            let a = group.unique_involution().expect("cyclic Sylow-2 of order >= 4");
            let (b, neg_b) = group.order_four_pair().expect("cyclic Sylow-2 of order >= 4");

            let power_closed = c.is_power_closed();
            if !power_closed {
                diagnostics.push("C is not power-closed, so X(G, C) is not integral".into());
            }
            conditions.power_closed = Some(power_closed);

            let a_in = c.contains(&a);
            let b_in = c.contains(&b) || c.contains(&neg_b);
            conditions.exactly_one_of_a_b = Some(a_in != b_in);
            if a_in == b_in {
                let which = if a_in { "both" } else { "neither" };
                diagnostics.push(format!("{which} of a = {a} and b = {b} in C; exactly one is required"));
            }

            let parts = c.partition_by_two_part();
            let mut c2_trim = parts[&2].elements().clone();
            c2_trim.remove(&b);
            c2_trim.remove(&neg_b);

            let four_c2 = scalar_multiple_set(4, &c2_trim);
            let c0 = parts[&0].elements();
            conditions.c0_equals_4c2 = Some(*c0 == four_c2);
            if *c0 != four_c2 {
                diagnostics.push(format!("C_0 = {} differs from 4(C_2 \\ {{±b}}) = {}", show(c0), show(&four_c2)));
            }

            let two_c2 = scalar_multiple_set(2, &c2_trim);
            let mut c1_trim = parts[&1].elements().clone();
            c1_trim.remove(&a);
            conditions.c1_equals_2c2 = Some(c1_trim == two_c2);
            if c1_trim != two_c2 {
                diagnostics.push(format!(
                    "C_1 \\ {{a}} = {} differs from 2(C_2 \\ {{±b}}) = {}",
                    show(&c1_trim),
                    show(&two_c2)
                ));
            }
        }
    }
    PstReport::decide(group, conditions, diagnostics)
}

/// The order-4m characterization for groups with `d = 2`, evaluated through
/// the decomposition `C_1 = {a} x C_1*`, `C_2 = {±b} x C_2*` over the
/// odd-order part.
pub fn check_4m_conditions(c: &ConnectionSet) -> Result<PstReport> {
    let group = c.group();
    if !group.has_cyclic_sylow2() || group.two_adic_valuation() != 2 {
        return Err(Error::NotOrderFourM {
            group: group.to_string(),
        });
    }
    let a = group.unique_involution()?;
    let (b, neg_b) = group.order_four_pair()?;
    let zero = group.identity();
    let mut conditions = Conditions::default();
    let mut diagnostics = Vec::new();

    let power_closed = c.is_power_closed();
    conditions.power_closed = Some(power_closed);
    if !power_closed {
        diagnostics.push("C is not power-closed".into());
    }
    let a_in = c.contains(&a);
    let b_in = c.contains(&b) || c.contains(&neg_b);
    conditions.exactly_one_of_a_b = Some(a_in != b_in);
    if a_in == b_in {
        diagnostics.push("exactly one of a and b must lie in C".into());
    }

    let mut c0 = BTreeSet::new();
    let mut c1_star = BTreeSet::new();
    let mut c2_star = BTreeSet::new();
    for g in c.iter() {
        let (x, h) = group.split_two_odd(g);
        match x.order() {
            1 => {
                c0.insert(h);
            }
            2 => {
                c1_star.insert(h);
            }
            _ => {
                c2_star.insert(h);
            }
        }
    }
    c1_star.remove(&zero);
    c2_star.remove(&zero);
    let holds = c0 == c1_star && c1_star == c2_star;
    conditions.c0_c1star_c2star = Some(holds);
    if !holds {
        diagnostics.push(format!(
            "C_0 = {}, C_1* \\ {{0}} = {}, C_2* \\ {{0}} = {} must coincide",
            show(&c0),
            show(&c1_star),
            show(&c2_star)
        ));
    }
    Ok(PstReport::decide(group, conditions, diagnostics))
}

/// `(G', G' ∩ C)` where `G'` is the subgroup of order `4m`.
pub fn reduce_to_4m(c: &ConnectionSet) -> Result<(Subgroup4m, ConnectionSet)> {
    let sub = c.group().subgroup_4m()?;
    let restricted = c
        .iter()
        .filter(|g| sub.contains(g))
        .map(|g| sub.restrict(g))
        .collect::<Result<Vec<_>>>()?;
    let reduced = ConnectionSet::new(sub.group(), restricted)?;
    Ok((sub, reduced))
}

/// Character test for transfer from `0` to `a` at time `pi/delta`:
/// `chi(a) = (-1)^((|C| - chi(C)) / delta)` for every character.
///
/// Returns `Ok(false)` for the empty graph, whose spectrum has a single
/// eigenvalue and no `delta`.
pub fn character_criterion(c: &ConnectionSet) -> Result<bool> {
    let group = c.group();
    let spectrum = integral_spectrum(c)?;
    let a = group.unique_involution()?;
    let Some(delta) = spectrum.delta() else {
        return Ok(false);
    };
    let degree = c.len() as i64;
    let delta = delta as i64;
    for (j, eigenvalue) in spectrum.by_character() {
        let diff = degree - eigenvalue;
        if diff % delta != 0 {
            return Ok(false);
        }
        let sign = if (diff / delta) % 2 == 0 { 1.0 } else { -1.0 };
        if (character_value(&j, &a)?.re - sign).abs() > 1e-9 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Parity facts about `|C_0|`, `|C_1|`, `|C_2|` for power-closed sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    /// `|C_0|` is even.
    pub c0_even: bool,
    /// `|C_2|` is even.
    pub c2_even: bool,
    /// `|C_1|` is odd iff `a` is in `C`.
    pub c1_odd_iff_a: bool,
    /// `|C_2|` is divisible by four iff `b` is not in `C`.
    pub c2_div4_iff_no_b: bool,
}

impl ParityReport {
    pub fn holds(&self) -> bool {
        self.c0_even && self.c2_even && self.c1_odd_iff_a && self.c2_div4_iff_no_b
    }
}

pub fn parity_report(c: &ConnectionSet) -> Result<ParityReport> {
    let group = c.group();
    let a = group.unique_involution()?;
    let (b, _) = group.order_four_pair()?;
    if !c.is_power_closed() {
        return Err(Error::NotPowerClosed);
    }
    let parts = c.partition_by_two_part();
    let sizes = |k: u32| parts[&k].len();
    Ok(ParityReport {
        c0_even: sizes(0) % 2 == 0,
        c2_even: sizes(2) % 2 == 0,
        c1_odd_iff_a: (sizes(1) % 2 == 1) == c.contains(&a),
        c2_div4_iff_no_b: (sizes(2) % 4 == 0) == !c.contains(&b),
    })
}

/// The PST time `pi/2` as a float, for callers that want the number.
pub const PST_TIME: f64 = FRAC_PI_2;
