//! Coherence toolkit for the free symmetric linearly distributive category with negation.
//!
//! Formulae and arrow terms are mapped to Brauer diagrams by [`graph_of`];
//! equality of terms is decided by comparing diagrams where that is faithful
//! ([`decide`]). Terms translate into Gentzen nets ([`gentzen`]) whose cuts can
//! be eliminated ([`cutelim`]).

pub mod arrows;
pub mod batch;
pub mod brauer;
pub mod cutelim;
pub mod decide;
pub mod error;
pub mod formula;
pub mod gentzen;
pub mod graph;
pub mod random;
pub mod syntax;

pub use arrows::{ArrowTerm, Dir, System};
pub use brauer::{worked_example, BrauerArrow, Node, SplitEquivalence, Tag};
pub use cutelim::{eliminate, Complexity, TraceStep};
pub use decide::{equal_graphwise, rho_conjugate, Decision, Verdict};
pub use error::Error;
pub use formula::{Conn, Context, Formula, Path, Step};
pub use gentzen::{denote, gentzenize, identity_net, net_type, tens_net, Net, NetNode};
pub use graph::graph_of;
pub use syntax::{parse_context, parse_formula, parse_net, parse_sequent, parse_term};
