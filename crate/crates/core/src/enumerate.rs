//! Exhaustive search over power-closed connection sets.

use rayon::prelude::*;

use crate::connection::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement, PowerClass};
use crate::pst::{characterize_pst, PstReport, Verdict};
use crate::walk::{detect_pst_numeric, DEFAULT_TOLERANCE};

pub const DEFAULT_CLASS_CAP: usize = 22;

/// Groups up to this order are cross-validated by default.
pub const CROSS_VALIDATE_MAX_ORDER: u64 = 128;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnumerateOptions {
    pub cross_validate: bool,
    /// Maximum number of non-identity power classes.
    pub class_cap: usize,
    pub tolerance: f64,
}

impl EnumerateOptions {
    pub fn for_group(group: &AbelianGroup) -> Self {
        EnumerateOptions {
            cross_validate: group.order() <= CROSS_VALIDATE_MAX_ORDER,
            class_cap: DEFAULT_CLASS_CAP,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

/// A PST-positive connection set with its report.
#[derive(Debug, Clone, PartialEq)]
pub struct CensusEntry {
    pub set: ConnectionSet,
    pub report: PstReport,
}

fn nonidentity_classes(group: &AbelianGroup, cap: usize) -> Result<Vec<PowerClass>> {
    let classes: Vec<PowerClass> = group.power_classes().into_iter().filter(|c| !c.key.is_identity()).collect();
    if classes.len() > cap {
        return Err(Error::CapExceeded {
            what: "power class count",
            size: classes.len(),
            cap,
        });
    }
    Ok(classes)
}

fn union_of(group: &AbelianGroup, classes: &[PowerClass], mask: u64) -> (Vec<GroupElement>, ConnectionSet) {
    let chosen: Vec<&PowerClass> = (0..classes.len()).filter(|i| mask >> i & 1 == 1).map(|i| &classes[i]).collect();
    let keys = chosen.iter().map(|c| c.key.clone()).collect();
    (keys, ConnectionSet::from_classes(group, chosen))
}

fn canonical_sort<T>(items: &mut [(Vec<GroupElement>, ConnectionSet, T)]) {
    items.sort_by(|x, y| (x.1.len(), &x.0).cmp(&(y.1.len(), &y.0)));
}

/// Every union of non-identity power classes, the empty set included,
/// ordered by size and then by the sorted list of class keys.
pub fn class_unions(group: &AbelianGroup, class_cap: usize) -> Result<Vec<ConnectionSet>> {
    let classes = nonidentity_classes(group, class_cap)?;
    let mut all: Vec<_> = (0..1u64 << classes.len())
        .into_par_iter()
        .map(|mask| {
            let (keys, set) = union_of(group, &classes, mask);
            (keys, set, ())
        })
        .collect();
    canonical_sort(&mut all);
    Ok(all.into_iter().map(|(_, set, _)| set).collect())
}

/// All PST-positive unions of non-identity power classes, in canonical order.
///
/// With cross-validation on, every candidate is also run through
/// [`detect_pst_numeric`] at `pi/2`; the first disagreement aborts the
/// search with [`Error::CrossValidationMismatch`].
pub fn enumerate_pst_sets(group: &AbelianGroup, options: &EnumerateOptions) -> Result<Vec<CensusEntry>> {
    if !group.has_cyclic_sylow2() {
        return Err(Error::NonCyclicSylow2 {
            group: group.to_string(),
        });
    }
    let classes = nonidentity_classes(group, options.class_cap)?;
    let found: Vec<Option<(Vec<GroupElement>, ConnectionSet, PstReport)>> = (0..1u64 << classes.len())
        .into_par_iter()
        .map(|mask| {
            let (keys, set) = union_of(group, &classes, mask);
            let report = characterize_pst(&set);
            let algebraic = report.verdict == Verdict::Pst;
            if options.cross_validate {
                let numeric = detect_pst_numeric(&set, std::f64::consts::FRAC_PI_2, options.tolerance)?;
                let agrees = match (&numeric, report.target()) {
                    (Some(hit), Some(target)) => hit.target == *target,
                    (None, None) => true,
                    _ => false,
                };
                if !agrees {
                    return Err(Error::CrossValidationMismatch {
                        set: set.to_string(),
                        algebraic,
                        numeric: numeric.is_some(),
                    });
                }
            }
            Ok(algebraic.then_some((keys, set, report)))
        })
        .collect::<Result<_>>()?;
    let mut hits: Vec<_> = found.into_iter().flatten().collect();
    canonical_sort(&mut hits);
    Ok(hits.into_iter().map(|(_, set, report)| CensusEntry { set, report }).collect())
}
