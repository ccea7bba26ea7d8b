//! Arrow terms, typing, derived arrows and the equational axiom catalog.

pub mod axioms;
pub mod derived;

use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::formula::{Conn, Formula};

pub use axioms::{catalog, rewrite, schema, AxiomSchema, Direction, Pattern, Subst, System};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    Fwd,
    Bwd,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ArrowTerm {
    Id(Formula),
    /// `A ξ (B ξ C) ⊢ (A ξ B) ξ C`
    AssocFwd(Conn, Formula, Formula, Formula),
    /// `(A ξ B) ξ C ⊢ A ξ (B ξ C)`
    AssocBwd(Conn, Formula, Formula, Formula),
    /// `A ∧ B ⊢ B ∧ A`
    SymConj(Formula, Formula),
    /// `B ∨ A ⊢ A ∨ B`
    SymDisj(Formula, Formula),
    /// `A ∧ (B ∨ C) ⊢ (A ∧ B) ∨ C`
    Dist(Formula, Formula, Formula),
    /// `DeltaConj(B, A) : A ⊢ A ∧ (¬B ∨ B)`
    DeltaConj(Formula, Formula),
    /// `SigmaDisj(B, A) : (B ∧ ¬B) ∨ A ⊢ A`
    SigmaDisj(Formula, Formula),
    /// `A ξ unit ⊢ A`
    UnitDelFwd(Conn, Formula),
    /// `A ⊢ A ξ unit`
    UnitDelBwd(Conn, Formula),
    /// `f ∘ g`
    Comp(Arc<ArrowTerm>, Arc<ArrowTerm>),
    Tens(Conn, Arc<ArrowTerm>, Arc<ArrowTerm>),
}

pub type Type = (Formula, Formula);

impl ArrowTerm {
    pub fn id(a: Formula) -> ArrowTerm {
        ArrowTerm::Id(a)
    }

    pub fn comp(f: ArrowTerm, g: ArrowTerm) -> ArrowTerm {
        ArrowTerm::Comp(Arc::new(f), Arc::new(g))
    }

    /// Right-nested composite of a nonempty chain, leftmost applied last.
    pub fn chain(fs: Vec<ArrowTerm>) -> ArrowTerm {
        let mut it = fs.into_iter().rev();
        let mut acc = it.next().expect("nonempty chain");
        for f in it {
            acc = ArrowTerm::comp(f, acc);
        }
        acc
    }

    pub fn tens(conn: Conn, f: ArrowTerm, g: ArrowTerm) -> ArrowTerm {
        ArrowTerm::Tens(conn, Arc::new(f), Arc::new(g))
    }

    pub fn assoc(conn: Conn, dir: Dir, a: Formula, b: Formula, c: Formula) -> ArrowTerm {
        match dir {
            Dir::Fwd => ArrowTerm::AssocFwd(conn, a, b, c),
            Dir::Bwd => ArrowTerm::AssocBwd(conn, a, b, c),
        }
    }

    pub fn is_generator(&self) -> bool {
        !matches!(self, ArrowTerm::Comp(..) | ArrowTerm::Tens(..))
    }

    pub fn is_id(&self) -> bool {
        matches!(self, ArrowTerm::Id(_))
    }

    /// Type of a generator; `None` on Comp and Tens.
    pub fn generator_type(&self) -> Option<Type> {
        use Formula as F;
        Some(match self {
            ArrowTerm::Id(a) => (a.clone(), a.clone()),
            ArrowTerm::AssocFwd(x, a, b, c) => (
                F::bin(*x, a.clone(), F::bin(*x, b.clone(), c.clone())),
                F::bin(*x, F::bin(*x, a.clone(), b.clone()), c.clone()),
            ),
            ArrowTerm::AssocBwd(x, a, b, c) => (
                F::bin(*x, F::bin(*x, a.clone(), b.clone()), c.clone()),
                F::bin(*x, a.clone(), F::bin(*x, b.clone(), c.clone())),
            ),
            ArrowTerm::SymConj(a, b) => (F::conj(a.clone(), b.clone()), F::conj(b.clone(), a.clone())),
            ArrowTerm::SymDisj(a, b) => (F::disj(b.clone(), a.clone()), F::disj(a.clone(), b.clone())),
            ArrowTerm::Dist(a, b, c) => {
                (F::conj(a.clone(), F::disj(b.clone(), c.clone())), F::disj(F::conj(a.clone(), b.clone()), c.clone()))
            }
            ArrowTerm::DeltaConj(b, a) => (a.clone(), F::conj(a.clone(), F::disj(F::neg(b.clone()), b.clone()))),
            ArrowTerm::SigmaDisj(b, a) => (F::disj(F::conj(b.clone(), F::neg(b.clone())), a.clone()), a.clone()),
            ArrowTerm::UnitDelFwd(x, a) => (F::bin(*x, a.clone(), x.unit()), a.clone()),
            ArrowTerm::UnitDelBwd(x, a) => (a.clone(), F::bin(*x, a.clone(), x.unit())),
            ArrowTerm::Comp(..) | ArrowTerm::Tens(..) => return None,
        })
    }

    pub fn type_of(&self) -> Result<Type, Error> {
        match self {
            ArrowTerm::Comp(f, g) => {
                let (fs, ft) = f.type_of()?;
                let (gs, gt) = g.type_of()?;
                if fs != gt {
                    return Err(Error::CompMismatch {
                        source_of_left: fs.to_string(),
                        target_of_right: gt.to_string(),
                    });
                }
                Ok((gs, ft))
            }
            ArrowTerm::Tens(x, f, g) => {
                let (fs, ft) = f.type_of()?;
                let (gs, gt) = g.type_of()?;
                Ok((Formula::bin(*x, fs, gs), Formula::bin(*x, ft, gt)))
            }
            _ => Ok(self.generator_type().expect("generator")),
        }
    }

    pub fn source(&self) -> Result<Formula, Error> {
        Ok(self.type_of()?.0)
    }

    pub fn target(&self) -> Result<Formula, Error> {
        Ok(self.type_of()?.1)
    }

    /// Calls `visit` on every formula parameter of every generator.
    pub fn for_each_formula(&self, visit: &mut dyn FnMut(&Formula)) {
        match self {
            ArrowTerm::Id(a) | ArrowTerm::UnitDelFwd(_, a) | ArrowTerm::UnitDelBwd(_, a) => visit(a),
            ArrowTerm::AssocFwd(_, a, b, c) | ArrowTerm::AssocBwd(_, a, b, c) | ArrowTerm::Dist(a, b, c) => {
                visit(a);
                visit(b);
                visit(c);
            }
            ArrowTerm::SymConj(a, b)
            | ArrowTerm::SymDisj(a, b)
            | ArrowTerm::DeltaConj(a, b)
            | ArrowTerm::SigmaDisj(a, b) => {
                visit(a);
                visit(b);
            }
            ArrowTerm::Comp(f, g) | ArrowTerm::Tens(_, f, g) => {
                f.for_each_formula(visit);
                g.for_each_formula(visit);
            }
        }
    }

    fn all_generators(&self, ok: &dyn Fn(&ArrowTerm) -> bool) -> bool {
        match self {
            ArrowTerm::Comp(f, g) | ArrowTerm::Tens(_, f, g) => f.all_generators(ok) && g.all_generators(ok),
            _ => ok(self),
        }
    }

    /// Only letters, conjunction and disjunction; no Δ, Σ or δ.
    pub fn is_ds_term(&self) -> bool {
        let mut fine = true;
        self.for_each_formula(&mut |a| fine &= a.is_conj_disj());
        fine && self.all_generators(&|g| {
            !matches!(
                g,
                ArrowTerm::DeltaConj(..)
                    | ArrowTerm::SigmaDisj(..)
                    | ArrowTerm::UnitDelFwd(..)
                    | ArrowTerm::UnitDelBwd(..)
            )
        })
    }

    /// Constant-free formulae and no δ.
    pub fn is_pn_term(&self) -> bool {
        let mut fine = true;
        self.for_each_formula(&mut |a| fine &= a.is_constant_free());
        fine && self.all_generators(&|g| !matches!(g, ArrowTerm::UnitDelFwd(..) | ArrowTerm::UnitDelBwd(..)))
    }

    /// Number of non-identity generator occurrences.
    pub fn size(&self) -> usize {
        match self {
            ArrowTerm::Comp(f, g) | ArrowTerm::Tens(_, f, g) => f.size() + g.size(),
            ArrowTerm::Id(_) => 0,
            _ => 1,
        }
    }

    pub fn subterm(&self, at: &TermPath) -> Option<&ArrowTerm> {
        let mut cur = self;
        for step in &at.0 {
            cur = match (step, cur) {
                (TermStep::Left, ArrowTerm::Comp(f, _) | ArrowTerm::Tens(_, f, _)) => f,
                (TermStep::Right, ArrowTerm::Comp(_, g) | ArrowTerm::Tens(_, _, g)) => g,
                _ => return None,
            };
        }
        Some(cur)
    }

    pub fn replace_at(&self, at: &TermPath, with: ArrowTerm) -> Option<ArrowTerm> {
        fn go(t: &ArrowTerm, steps: &[TermStep], with: ArrowTerm) -> Option<ArrowTerm> {
            let Some((first, rest)) = steps.split_first() else {
                return Some(with);
            };
            Some(match (first, t) {
                (TermStep::Left, ArrowTerm::Comp(f, g)) => ArrowTerm::Comp(Arc::new(go(f, rest, with)?), g.clone()),
                (TermStep::Right, ArrowTerm::Comp(f, g)) => ArrowTerm::Comp(f.clone(), Arc::new(go(g, rest, with)?)),
                (TermStep::Left, ArrowTerm::Tens(x, f, g)) => {
                    ArrowTerm::Tens(*x, Arc::new(go(f, rest, with)?), g.clone())
                }
                (TermStep::Right, ArrowTerm::Tens(x, f, g)) => {
                    ArrowTerm::Tens(*x, f.clone(), Arc::new(go(g, rest, with)?))
                }
                _ => return None,
            })
        }
        go(self, &at.0, with)
    }

    /// Every subterm address, in preorder.
    pub fn term_paths(&self) -> Vec<TermPath> {
        fn go(t: &ArrowTerm, here: &mut Vec<TermStep>, out: &mut Vec<TermPath>) {
            out.push(TermPath(here.clone()));
            if let ArrowTerm::Comp(f, g) | ArrowTerm::Tens(_, f, g) = t {
                here.push(TermStep::Left);
                go(f, here, out);
                here.pop();
                here.push(TermStep::Right);
                go(g, here, out);
                here.pop();
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermStep {
    Left,
    Right,
}

/// Address of a subterm through Comp and Tens nodes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TermPath(pub Vec<TermStep>);

impl TermPath {
    pub fn root() -> TermPath {
        TermPath(Vec::new())
    }
}

fn conn_suffix(x: Conn) -> &'static str {
    match x {
        Conn::Conj => "conj",
        Conn::Disj => "disj",
    }
}

impl fmt::Display for ArrowTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrowTerm::Id(a) => write!(f, "id({a})"),
            ArrowTerm::AssocFwd(x, a, b, c) => write!(f, "assoc_fwd_{}({a}, {b}, {c})", conn_suffix(*x)),
            ArrowTerm::AssocBwd(x, a, b, c) => write!(f, "assoc_bwd_{}({a}, {b}, {c})", conn_suffix(*x)),
            ArrowTerm::SymConj(a, b) => write!(f, "sym_conj({a}, {b})"),
            ArrowTerm::SymDisj(a, b) => write!(f, "sym_disj({a}, {b})"),
            ArrowTerm::Dist(a, b, c) => write!(f, "dist({a}, {b}, {c})"),
            ArrowTerm::DeltaConj(b, a) => write!(f, "delta_conj({b}, {a})"),
            ArrowTerm::SigmaDisj(b, a) => write!(f, "sigma_disj({b}, {a})"),
            ArrowTerm::UnitDelFwd(x, a) => write!(f, "unit_del_fwd_{}({a})", conn_suffix(*x)),
            ArrowTerm::UnitDelBwd(x, a) => write!(f, "unit_del_bwd_{}({a})", conn_suffix(*x)),
            ArrowTerm::Comp(g, h) => {
                if matches!(**g, ArrowTerm::Comp(..)) {
                    write!(f, "({g}) . {h}")
                } else {
                    write!(f, "{g} . {h}")
                }
            }
            ArrowTerm::Tens(x, g, h) => write!(f, "tens_{}({g}, {h})", conn_suffix(*x)),
        }
    }
}

impl fmt::Debug for ArrowTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: &str) -> Formula {
        Formula::letter(n)
    }

    #[test]
    fn generator_types() {
        let (s, t) = ArrowTerm::Dist(l("p"), l("q"), l("r")).type_of().unwrap();
        assert_eq!(s, Formula::conj(l("p"), Formula::disj(l("q"), l("r"))));
        assert_eq!(t, Formula::disj(Formula::conj(l("p"), l("q")), l("r")));
        let (s, t) = ArrowTerm::DeltaConj(l("q"), l("p")).type_of().unwrap();
        assert_eq!(s, l("p"));
        assert_eq!(t, Formula::conj(l("p"), Formula::disj(Formula::neg(l("q")), l("q"))));
    }

    #[test]
    fn comp_mismatch() {
        let e = ArrowTerm::comp(ArrowTerm::Id(l("p")), ArrowTerm::Id(l("q"))).type_of();
        assert!(matches!(e, Err(Error::CompMismatch { .. })));
    }

    #[test]
    fn sublanguages() {
        let ds = ArrowTerm::tens(Conn::Conj, ArrowTerm::Id(l("p")), ArrowTerm::SymDisj(l("q"), l("r")));
        assert!(ds.is_ds_term() && ds.is_pn_term());
        let pn = ArrowTerm::DeltaConj(l("q"), l("p"));
        assert!(!pn.is_ds_term() && pn.is_pn_term());
        let s = ArrowTerm::UnitDelFwd(Conn::Conj, l("p"));
        assert!(!s.is_pn_term());
    }

    #[test]
    fn replace_subterm() {
        let t = ArrowTerm::comp(ArrowTerm::Id(l("p")), ArrowTerm::Id(l("p")));
        let at = TermPath(vec![TermStep::Right]);
        let u = t.replace_at(&at, ArrowTerm::comp(ArrowTerm::Id(l("p")), ArrowTerm::Id(l("p")))).unwrap();
        assert_eq!(u.term_paths().len(), 5);
        assert_eq!(u.type_of().unwrap(), (l("p"), l("p")));
    }
}
