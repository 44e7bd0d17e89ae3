//! Exact state complexity of chained DFA catenation.
//!
//! The library catenates a chain of complete DFAs into an epsilon-free NFA,
//! determinizes it by the accessible-subset construction, minimizes the
//! result, and measures the number of states. Alongside the pipeline it
//! computes an exact upper bound on that number by three mutually checking
//! routes (subset-tuple enumeration, a crossing recurrence, and an
//! exact-rational polynomial over integer compositions), and it builds
//! witness families of Brzozowski automata whose chains attain the bound.
//!
//! ```
//! use multicat::bounds::{recurrence_count, SizeProfile};
//! use multicat::construct::analyze_chain;
//! use multicat::witness::build_two_letter;
//!
//! let (a1, a2) = build_two_letter(3, 3).unwrap();
//! let analysis = analyze_chain(&[a1, a2]).unwrap();
//! let bound = recurrence_count(&SizeProfile::new(vec![3, 3]).unwrap());
//! assert_eq!(analysis.minimal.state_count(), 20);
//! assert_eq!(bound, 20u32.into());
//! ```
//!
//! Module map:
//!
//! * [`automata`] - DFAs, NFAs, and the state transformations (cycle,
//!   rotation, transposition, contraction, identity) used to build them;
//! * [`construct`] - catenation, determinization, minimization, exact
//!   language equivalence, and decoding of subset states;
//! * [`bounds`] - the three bound computations and the polynomial identities
//!   connecting them;
//! * [`witness`] - the bound-attaining families;
//! * [`format`] - the plain-text automaton file format;
//! * [`report`] / [`cli`] - experiment reports and the command
//!   implementations behind the `multicat` binary.

pub mod automata;
pub mod bounds;
pub mod cli;
pub mod construct;
pub mod format;
pub mod poly;
pub mod report;
pub mod set;
pub mod witness;

pub use automata::{AutomatonError, Dfa, Nfa, Transformation};
pub use bounds::{BigCount, SizeProfile};
pub use construct::{
    analyze_chain, catenate, chain_catenate, decode_state, determinize, equivalent, minimize,
    ChainLayout, ValidSequence,
};
pub use set::StateSet;
pub use witness::{FamilyKind, WitnessFamily};
