//! Continuous-time quantum walks `U(t) = exp(itA)` on Cayley graphs.
//!
//! Two independent paths compute the transition matrix: the character
//! expansion `U(t)_{g,h} = |G|^{-1} sum_j exp(it chi_j(C)) chi_j(h - g)`,
//! and [`dense_expm`], which builds the adjacency matrix and evaluates the
//! exponential by scaling and squaring. The dense path shares no code with
//! the characters and serves as the oracle for the other one.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use ndarray::Array2;
use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::connection::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::json::{ComplexPair, F17};
use crate::spectra::{character_sums, PhaseTable};

/// PST detection tolerance used when none is given.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Largest group the dense oracle accepts by default.
pub const DEFAULT_DENSE_CAP: usize = 512;

const TAYLOR_TERMS: u32 = 20;

/// A walk time, kept symbolic when it is a rational multiple of pi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WalkTime {
    /// `num * pi / den`, with `den > 0` and the fraction reduced.
    PiMultiple { num: i64, den: u64 },
    Real(f64),
}

impl WalkTime {
    pub const HALF_PI: WalkTime = WalkTime::PiMultiple { num: 1, den: 2 };

    pub fn pi_multiple(num: i64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = num_integer::gcd(num.unsigned_abs(), den).max(1);
        WalkTime::PiMultiple {
            num: num / g as i64,
            den: den / g,
        }
    }

    pub fn value(&self) -> f64 {
        match *self {
            WalkTime::PiMultiple { num, den } => PI * num as f64 / den as f64,
            WalkTime::Real(t) => t,
        }
    }
}

impl fmt::Display for WalkTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WalkTime::PiMultiple { num: 0, .. } => f.write_str("0"),
            WalkTime::PiMultiple { num, den } => {
                match num {
                    1 => f.write_str("pi")?,
                    -1 => f.write_str("-pi")?,
                    n => write!(f, "{n}pi")?,
                }
                if den != 1 {
                    write!(f, "/{den}")?;
                }
                Ok(())
            }
            WalkTime::Real(t) => write!(f, "{t}"),
        }
    }
}

impl FromStr for WalkTime {
    type Err = Error;

    /// Accepts `pi/2`, `3pi/4`, `2*pi`, `-pi`, or a plain real such as `0.75`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "time",
            input: s.to_string(),
            reason: "expected a real number or a rational multiple of pi such as 3pi/4".into(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
        let Some(pos) = compact.find("pi") else {
            let t: f64 = compact.parse().map_err(|_| err())?;
            return if t.is_finite() { Ok(WalkTime::Real(t)) } else { Err(err()) };
        };
        let coeff = compact[..pos].trim_end_matches('*');
        let num: i64 = match coeff {
            "" | "+" => 1,
            "-" => -1,
            c => c.parse().map_err(|_| err())?,
        };
        let den: u64 = match &compact[pos + 2..] {
            "" => 1,
            rest => rest.strip_prefix('/').and_then(|d| d.parse().ok()).filter(|&d| d > 0).ok_or_else(err)?,
        };
        Ok(WalkTime::pi_multiple(num, den))
    }
}

/// `U(t)` as a dense matrix indexed by group elements in canonical order.
#[derive(Clone)]
pub struct TransitionMatrix {
    time: f64,
    group: AbelianGroup,
    entries: Array2<Complex64>,
}

impl TransitionMatrix {
    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn entries(&self) -> &Array2<Complex64> {
        &self.entries
    }

    pub fn entry(&self, g: &GroupElement, h: &GroupElement) -> Complex64 {
        self.entries[[self.group.index_of(g), self.group.index_of(h)]]
    }

    pub fn vertices(&self) -> Vec<GroupElement> {
        self.group.elements().collect()
    }

    /// Largest deviation of a row or column squared-norm from 1.
    pub fn unitarity_defect(&self) -> f64 {
        let rows = self.entries.rows().into_iter().map(|r| r.iter().map(|z| z.norm_sqr()).sum::<f64>());
        let cols = self.entries.columns().into_iter().map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>());
        rows.chain(cols).map(|s| (s - 1.0).abs()).fold(0.0, f64::max)
    }

    /// Largest deviation of `U(g, h)` from `U(0, h - g)`.
    pub fn circulant_defect(&self) -> f64 {
        let n = self.group.size();
        let mut worst = 0.0f64;
        for gi in 0..n {
            let g = self.group.element_at(gi);
            for hi in 0..n {
                let h = self.group.element_at(hi);
                let diff = self.group.index_of(&(&h - &g));
                worst = worst.max((self.entries[[gi, hi]] - self.entries[[0, diff]]).norm());
            }
        }
        worst
    }

    /// Largest `| |U(g,h)| - |U(h,g)| |`.
    pub fn symmetry_defect(&self) -> f64 {
        let n = self.group.size();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..i {
                worst = worst.max((self.entries[[i, j]].norm() - self.entries[[j, i]].norm()).abs());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &TransitionMatrix) -> f64 {
        assert_eq!(self.entries.dim(), other.entries.dim());
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Matrix product, for comparing `U_{A1}(t) U_{A2}(t)` against `U_{A1+A2}(t)`.
    pub fn product(&self, other: &TransitionMatrix) -> TransitionMatrix {
        TransitionMatrix {
            time: self.time,
            group: self.group.clone(),
            entries: self.entries.dot(&other.entries),
        }
    }
}

impl fmt::Debug for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TransitionMatrix(t={}, {}x{})", self.time, self.entries.nrows(), self.entries.ncols())
    }
}

impl Serialize for TransitionMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<ComplexPair>> = self
            .entries
            .rows()
            .into_iter()
            .map(|r| r.iter().map(|&z| z.into()).collect())
            .collect();
        let mut st = serializer.serialize_struct("TransitionMatrix", 3)?;
        st.serialize_field("time", &F17(self.time))?;
        st.serialize_field("vertices", &self.vertices())?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}

/// `U(t)_{0,x}` for every `x`, via the character expansion.
pub fn identity_row(c: &ConnectionSet, t: f64) -> Vec<Complex64> {
    let group = c.group();
    let n = group.size();
    let table = PhaseTable::new(group);
    let phases: Vec<Complex64> = character_sums(c)
        .into_iter()
        .map(|sum| Complex64::from_polar(1.0, t * sum.re))
        .collect();
    let characters: Vec<GroupElement> = group.elements().collect();
    let scale = 1.0 / n as f64;
    group
        .elements()
        .map(|x| {
            let total: Complex64 = characters
                .iter()
                .zip(&phases)
                .map(|(j, p)| p * table.value(j.coords(), x.coords()))
                .sum();
            total * scale
        })
        .collect()
}

/// `U(t)_{g,h}` via the character expansion.
pub fn transition_amplitude(c: &ConnectionSet, g: &GroupElement, h: &GroupElement, t: f64) -> Result<Complex64> {
    let diff = h.try_sub(g)?;
    let group = c.group();
    group.check_same(diff.group())?;
    let table = PhaseTable::new(group);
    let total: Complex64 = group
        .elements()
        .zip(character_sums(c))
        .map(|(j, sum)| Complex64::from_polar(1.0, t * sum.re) * table.value(j.coords(), diff.coords()))
        .sum();
    Ok(total / group.size() as f64)
}

/// The full transition matrix via the character expansion.
pub fn transition_matrix(c: &ConnectionSet, t: f64) -> TransitionMatrix {
    let group = c.group();
    let n = group.size();
    let row = identity_row(c, t);
    let elements: Vec<GroupElement> = group.elements().collect();
    let entries = Array2::from_shape_fn((n, n), |(i, j)| row[group.index_of(&(&elements[j] - &elements[i]))]);
    TransitionMatrix {
        time: t,
        group: group.clone(),
        entries,
    }
}

/// 0/1 adjacency matrix of `X(G, C)`: entry `(g, h)` is 1 iff `h - g` is in `C`.
pub fn adjacency_matrix(c: &ConnectionSet) -> Array2<f64> {
    let group = c.group();
    let elements: Vec<GroupElement> = group.elements().collect();
    let n = elements.len();
    Array2::from_shape_fn((n, n), |(i, j)| {
        if c.contains(&(&elements[j] - &elements[i])) {
            1.0
        } else {
            0.0
        }
    })
}

/// `exp(itA)` by scaling and squaring with [`DEFAULT_DENSE_CAP`].
pub fn dense_expm(c: &ConnectionSet, t: f64) -> Result<TransitionMatrix> {
    dense_expm_capped(c, t, DEFAULT_DENSE_CAP)
}

/// `exp(itA)` by scaling and squaring.
///
/// `A` is scaled by `2^-s` so that `degree * |t| / 2^s <= 1/2` (the degree
/// bounds the spectral radius), the exponential of the scaled matrix is a
/// 20-term Taylor polynomial, and the result is squared `s` times.
pub fn dense_expm_capped(c: &ConnectionSet, t: f64, cap: usize) -> Result<TransitionMatrix> {
    let group = c.group();
    let n = group.size();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "dense expm group",
            size: n,
            cap,
        });
    }
    let adjacency = adjacency_matrix(c);
    let bound = c.len() as f64 * t.abs();
    let mut squarings = 0u32;
    while bound / 2f64.powi(squarings as i32) > 0.5 {
        squarings += 1;
    }
    let factor = Complex64::new(0.0, t / 2f64.powi(squarings as i32));
    let x: Array2<Complex64> = adjacency.mapv(|a| factor * a);
    let identity = Array2::<Complex64>::eye(n);

    // Horner: I + X (I + X/2 (I + X/3 ( ... (I + X/N))))
    let mut acc = identity.clone();
    for k in (1..=TAYLOR_TERMS).rev() {
        acc = &identity + &(x.dot(&acc) / Complex64::new(k as f64, 0.0));
    }
    for _ in 0..squarings {
        acc = acc.dot(&acc);
    }
    Ok(TransitionMatrix {
        time: t,
        group: group.clone(),
        entries: acc,
    })
}

/// A detected perfect state transfer `source -> target` with its phase.
#[derive(Debug, Clone, PartialEq)]
pub struct StateTransfer {
    pub source: GroupElement,
    pub target: GroupElement,
    pub phase: Complex64,
}

impl Serialize for StateTransfer {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("StateTransfer", 3)?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("target", &self.target)?;
        st.serialize_field("phase", &ComplexPair::from(self.phase))?;
        st.end()
    }
}

fn check_tolerance(tol: f64) {
    assert!(tol > 0.0 && tol < 0.5, "tolerance {tol} outside (0, 0.5)");
}

/// Scans the identity row of `U(t)` for an off-diagonal entry of modulus
/// at least `1 - tol`.
///
/// Translation invariance makes the identity row representative. More
/// than one hit means `tol` is too loose and is reported as
/// [`Error::AmbiguousPst`].
///
/// Panics if `tol` is outside `(0, 0.5)`.
pub fn detect_pst_numeric(c: &ConnectionSet, t: f64, tol: f64) -> Result<Option<StateTransfer>> {
    check_tolerance(tol);
    let group = c.group();
    let row = identity_row(c, t);
    let hits: Vec<usize> = (1..row.len()).filter(|&i| row[i].norm() >= 1.0 - tol).collect();
    match hits.as_slice() {
        [] => Ok(None),
        [i] => Ok(Some(StateTransfer {
            source: group.identity(),
            target: group.element_at(*i),
            phase: row[*i],
        })),
        many => Err(Error::AmbiguousPst {
            targets: many.iter().map(|&i| group.element_at(i).to_string()).collect(),
        }),
    }
}

/// True iff `|U(t)_{0,0}| >= 1 - tol`, which by translation invariance
/// means every vertex is periodic at `t`.
///
/// Panics if `tol` is outside `(0, 0.5)`.
pub fn is_periodic_numeric(c: &ConnectionSet, t: f64, tol: f64) -> bool {
    check_tolerance(tol);
    let identity = c.group().identity();
    transition_amplitude(c, &identity, &identity, t).expect("same group").norm() >= 1.0 - tol
}
