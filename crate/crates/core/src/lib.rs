//! Perfect state transfer on Cayley graphs of finite abelian groups.
//!
//! Groups are products of cyclic factors `Z_{n_1} x ... x Z_{n_r}`; a
//! connection set `C` defines the Cayley graph `X(G, C)` with `g ~ h` iff
//! `h - g` is in `C`. The crate computes spectra through characters,
//! evaluates the continuous-time quantum walk `e^{itA}` two independent
//! ways, and decides perfect state transfer exactly when the Sylow-2
//! subgroup of `G` is cyclic.
//!
//! ```
//! use cayley_pst::{characterize_pst, AbelianGroup, ConnectionSet, Verdict};
//!
//! let g: AbelianGroup = "Z4xZ3".parse().unwrap();
//! let c = ConnectionSet::parse(&g, "{(1,0),(3,0)}").unwrap();
//! let report = characterize_pst(&c);
//! assert_eq!(report.verdict, Verdict::Pst);
//! assert_eq!(report.target().unwrap().to_string(), "(2,0)");
//! ```

pub mod cli;
pub mod connection;
pub mod enumerate;
pub mod error;
pub mod export;
pub mod group;
pub mod json;
pub mod pst;
pub mod spectra;
pub mod walk;

pub use connection::ConnectionSet;
pub use enumerate::{class_unions, enumerate_pst_sets, CensusEntry, EnumerateOptions};
pub use error::{Error, Result};
pub use group::{scalar_multiple_set, AbelianGroup, GroupElement, PowerClass, Subgroup4m};
pub use pst::{
    character_criterion, characterize_pst, check_4m_conditions, parity_report, reduce_to_4m, Conditions, ParityReport,
    PstReport, Verdict,
};
pub use spectra::{character_sum, character_value, integral_spectrum, odd_eigenvalue_exists, CharacterIndex, Spectrum};
pub use walk::{
    dense_expm, detect_pst_numeric, identity_row, is_periodic_numeric, transition_amplitude, transition_matrix,
    StateTransfer, TransitionMatrix, WalkTime,
};
