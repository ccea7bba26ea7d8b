//! Equality of arrow terms decided through their graphs.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::arrows::{derived, ArrowTerm, System};
use crate::brauer::BrauerArrow;
use crate::error::Error;
use crate::formula::{Conn, Formula};
use crate::graph::graph_of;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Equal,
    Unequal,
    /// Graphs agree but the endpoints lie outside the regimes where graphs are faithful.
    GraphEqualOnly,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::Unequal => "unequal",
            Verdict::GraphEqualOnly => "graph-equal-only",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub left: BrauerArrow,
    pub right: BrauerArrow,
}

/// The polarity under which `a` reduces, preferring `first`.
fn nice_polarity(a: &Formula, first: Conn) -> Option<Conn> {
    [first, first.dual()].into_iter().find(|&c| a.is_nice(c))
}

/// `ρ_B ∘ f ∘ ρ_A⁻¹`, with endpoints constant-free or a constant.
///
/// The source is reduced with `ρ∧` and the target with `ρ∨` when those apply,
/// otherwise with the other polarity.
pub fn rho_conjugate(f: &ArrowTerm) -> Result<ArrowTerm, Error> {
    let (a, b) = f.type_of()?;
    let cs = nice_polarity(&a, Conn::Conj).ok_or_else(|| Error::NotNice(a.to_string(), "source"))?;
    let ct = nice_polarity(&b, Conn::Disj).ok_or_else(|| Error::NotNice(b.to_string(), "target"))?;
    let pre = derived::rho_inv(cs, &a)?;
    let post = derived::rho(ct, &b)?;
    let parts: Vec<ArrowTerm> = [post, f.clone(), pre].into_iter().filter(|t| !t.is_id()).collect();
    Ok(if parts.is_empty() { f.clone() } else { ArrowTerm::chain(parts) })
}

fn letters_of(f: &ArrowTerm, into: &mut BTreeSet<String>) {
    f.for_each_formula(&mut |a| into.extend(a.letters().into_iter().map(|s| s.to_string())));
}

/// First `_z<k>` occurring in neither term.
pub fn fresh_letter(f1: &ArrowTerm, f2: &ArrowTerm) -> Formula {
    let mut used = BTreeSet::new();
    letters_of(f1, &mut used);
    letters_of(f2, &mut used);
    let k = (0..).find(|k| !used.contains(&format!("_z{k}"))).expect("unbounded");
    Formula::letter(&format!("_z{k}"))
}

/// Pads with an identity on a fresh letter when an endpoint is a constant.
fn pad(f: &ArrowTerm, p: &Formula) -> Result<ArrowTerm, Error> {
    let (a, b) = f.type_of()?;
    let conn = if a == Formula::Top || b == Formula::Top {
        Some(Conn::Conj)
    } else if a == Formula::Bot || b == Formula::Bot {
        Some(Conn::Disj)
    } else {
        None
    };
    Ok(match conn {
        Some(c) => ArrowTerm::tens(c, f.clone(), ArrowTerm::Id(p.clone())),
        None => f.clone(),
    })
}

fn in_system(f: &ArrowTerm, s: System) -> bool {
    match s {
        System::Ds => f.is_ds_term(),
        System::Pn => f.is_pn_term(),
        System::S => true,
    }
}

pub fn equal_graphwise(f1: &ArrowTerm, f2: &ArrowTerm) -> Result<Decision, Error> {
    let t1 = f1.type_of()?;
    let t2 = f2.type_of()?;
    let left = graph_of(f1)?;
    let right = graph_of(f2)?;
    let verdict = if t1 != t2 || left != right {
        Verdict::Unequal
    } else if (f1.is_pn_term() && f2.is_pn_term()) || (f1.is_ds_term() && f2.is_ds_term()) {
        Verdict::Equal
    } else {
        match (rho_conjugate(f1), rho_conjugate(f2)) {
            (Ok(c1), Ok(c2)) => {
                let p = fresh_letter(f1, f2);
                if graph_of(&pad(&c1, &p)?)? == graph_of(&pad(&c2, &p)?)? {
                    Verdict::Equal
                } else {
                    Verdict::Unequal
                }
            }
            _ => Verdict::GraphEqualOnly,
        }
    };
    Ok(Decision { verdict, left, right })
}

/// As `equal_graphwise`, after checking both terms belong to `system`.
pub fn equal_in(system: System, f1: &ArrowTerm, f2: &ArrowTerm) -> Result<Decision, Error> {
    for f in [f1, f2] {
        if !in_system(f, system) {
            return Err(Error::IllTyped(format!("{f} is not a term of {system:?}")));
        }
    }
    equal_graphwise(f1, f2)
}
