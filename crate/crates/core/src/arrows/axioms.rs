//! Equational axiom schemas, instantiation, matching and one-step rewriting.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use super::{ArrowTerm, TermPath, Type};
use crate::error::Error;
use crate::formula::{Conn, Formula};
use crate::syntax::{parse_arrow_decl, parse_pattern};

/// The smallest system whose equations include a schema.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum System {
    /// letters, conjunction, disjunction
    Ds,
    /// adds negation with Δ and Σ
    Pn,
    /// adds the constants and δ
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// lhs to rhs
    Forward,
    /// rhs to lhs
    Backward,
}

/// A term template; formula letters starting with an uppercase letter are metavariables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Var(String),
    Gen(ArrowTerm),
    Comp(Box<Pattern>, Box<Pattern>),
    Tens(Conn, Box<Pattern>, Box<Pattern>),
}

impl Pattern {
    pub fn from_term(t: &ArrowTerm) -> Pattern {
        match t {
            ArrowTerm::Comp(f, g) => Pattern::Comp(Box::new(Self::from_term(f)), Box::new(Self::from_term(g))),
            ArrowTerm::Tens(x, f, g) => Pattern::Tens(*x, Box::new(Self::from_term(f)), Box::new(Self::from_term(g))),
            g => Pattern::Gen(g.clone()),
        }
    }

    /// The term, when no arrow variables occur.
    pub fn to_term(&self) -> Option<ArrowTerm> {
        Some(match self {
            Pattern::Var(_) => return None,
            Pattern::Gen(g) => g.clone(),
            Pattern::Comp(f, g) => ArrowTerm::comp(f.to_term()?, g.to_term()?),
            Pattern::Tens(x, f, g) => ArrowTerm::tens(*x, f.to_term()?, g.to_term()?),
        })
    }

    fn collect(&self, fvars: &mut BTreeSet<String>, avars: &mut BTreeSet<String>) {
        match self {
            Pattern::Var(n) => {
                avars.insert(n.clone());
            }
            Pattern::Gen(g) => g.for_each_formula(&mut |f| meta_vars(f, fvars)),
            Pattern::Comp(f, g) | Pattern::Tens(_, f, g) => {
                f.collect(fvars, avars);
                g.collect(fvars, avars);
            }
        }
    }
}

fn is_meta(name: &str) -> bool {
    name.as_bytes().first().is_some_and(|c| c.is_ascii_uppercase())
}

fn meta_vars(f: &Formula, out: &mut BTreeSet<String>) {
    match f {
        Formula::Letter(n) if is_meta(n) => {
            out.insert(n.to_string());
        }
        Formula::Neg(a) => meta_vars(a, out),
        Formula::Conj(a, b) | Formula::Disj(a, b) => {
            meta_vars(a, out);
            meta_vars(b, out);
        }
        _ => {}
    }
}

/// Bindings for formula metavariables and arrow variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subst {
    pub formulas: BTreeMap<String, Formula>,
    pub arrows: BTreeMap<String, ArrowTerm>,
}

impl Subst {
    pub fn new() -> Subst {
        Subst::default()
    }

    pub fn formula(mut self, name: &str, f: Formula) -> Subst {
        self.formulas.insert(name.to_string(), f);
        self
    }

    pub fn arrow(mut self, name: &str, f: ArrowTerm) -> Subst {
        self.arrows.insert(name.to_string(), f);
        self
    }

    fn match_formula(&mut self, pat: &Formula, f: &Formula) -> bool {
        match (pat, f) {
            (Formula::Letter(n), _) if is_meta(n) => match self.formulas.get(&**n) {
                Some(bound) => bound == f,
                None => {
                    self.formulas.insert(n.to_string(), f.clone());
                    true
                }
            },
            (Formula::Neg(a), Formula::Neg(b)) => self.match_formula(a, b),
            (Formula::Conj(a1, b1), Formula::Conj(a2, b2)) | (Formula::Disj(a1, b1), Formula::Disj(a2, b2)) => {
                self.match_formula(a1, a2) && self.match_formula(b1, b2)
            }
            _ => pat == f,
        }
    }

    fn apply_formula(&self, pat: &Formula) -> Result<Formula, Error> {
        Ok(match pat {
            Formula::Letter(n) if is_meta(n) => {
                self.formulas.get(&**n).cloned().ok_or_else(|| Error::Unbound(n.to_string()))?
            }
            Formula::Neg(a) => Formula::neg(self.apply_formula(a)?),
            Formula::Conj(a, b) => Formula::conj(self.apply_formula(a)?, self.apply_formula(b)?),
            Formula::Disj(a, b) => Formula::disj(self.apply_formula(a)?, self.apply_formula(b)?),
            other => other.clone(),
        })
    }

    fn match_pattern(&mut self, pat: &Pattern, t: &ArrowTerm) -> bool {
        match (pat, t) {
            (Pattern::Var(n), _) => match self.arrows.get(n) {
                Some(bound) => bound == t,
                None => {
                    self.arrows.insert(n.clone(), t.clone());
                    true
                }
            },
            (Pattern::Comp(p, q), ArrowTerm::Comp(f, g)) => self.match_pattern(p, f) && self.match_pattern(q, g),
            (Pattern::Tens(x, p, q), ArrowTerm::Tens(y, f, g)) => {
                x == y && self.match_pattern(p, f) && self.match_pattern(q, g)
            }
            (Pattern::Gen(g), t) if t.is_generator() => {
                let (kp, fp) = generator_parts(g);
                let (kt, ft) = generator_parts(t);
                kp == kt && fp.iter().zip(&ft).all(|(a, b)| self.match_formula(a, b))
            }
            _ => false,
        }
    }

    fn apply_pattern(&self, pat: &Pattern) -> Result<ArrowTerm, Error> {
        Ok(match pat {
            Pattern::Var(n) => self.arrows.get(n).cloned().ok_or_else(|| Error::Unbound(n.clone()))?,
            Pattern::Gen(g) => {
                let (k, fs) = generator_parts(g);
                let fs = fs.iter().map(|f| self.apply_formula(f)).collect::<Result<Vec<_>, _>>()?;
                rebuild_generator(k, fs)
            }
            Pattern::Comp(f, g) => ArrowTerm::comp(self.apply_pattern(f)?, self.apply_pattern(g)?),
            Pattern::Tens(x, f, g) => ArrowTerm::tens(*x, self.apply_pattern(f)?, self.apply_pattern(g)?),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum GenKind {
    Id,
    AssocFwd(Conn),
    AssocBwd(Conn),
    SymConj,
    SymDisj,
    Dist,
    DeltaConj,
    SigmaDisj,
    UnitDelFwd(Conn),
    UnitDelBwd(Conn),
}

fn generator_parts(g: &ArrowTerm) -> (GenKind, Vec<Formula>) {
    use ArrowTerm as T;
    match g {
        T::Id(a) => (GenKind::Id, vec![a.clone()]),
        T::AssocFwd(x, a, b, c) => (GenKind::AssocFwd(*x), vec![a.clone(), b.clone(), c.clone()]),
        T::AssocBwd(x, a, b, c) => (GenKind::AssocBwd(*x), vec![a.clone(), b.clone(), c.clone()]),
        T::SymConj(a, b) => (GenKind::SymConj, vec![a.clone(), b.clone()]),
        T::SymDisj(a, b) => (GenKind::SymDisj, vec![a.clone(), b.clone()]),
        T::Dist(a, b, c) => (GenKind::Dist, vec![a.clone(), b.clone(), c.clone()]),
        T::DeltaConj(b, a) => (GenKind::DeltaConj, vec![b.clone(), a.clone()]),
        T::SigmaDisj(b, a) => (GenKind::SigmaDisj, vec![b.clone(), a.clone()]),
        T::UnitDelFwd(x, a) => (GenKind::UnitDelFwd(*x), vec![a.clone()]),
        T::UnitDelBwd(x, a) => (GenKind::UnitDelBwd(*x), vec![a.clone()]),
        T::Comp(..) | T::Tens(..) => unreachable!("not a generator"),
    }
}

fn rebuild_generator(k: GenKind, fs: Vec<Formula>) -> ArrowTerm {
    use ArrowTerm as T;
    let mut it = fs.into_iter();
    let mut n = || it.next().expect("arity");
    match k {
        GenKind::Id => T::Id(n()),
        GenKind::AssocFwd(x) => T::AssocFwd(x, n(), n(), n()),
        GenKind::AssocBwd(x) => T::AssocBwd(x, n(), n(), n()),
        GenKind::SymConj => T::SymConj(n(), n()),
        GenKind::SymDisj => T::SymDisj(n(), n()),
        GenKind::Dist => T::Dist(n(), n(), n()),
        GenKind::DeltaConj => T::DeltaConj(n(), n()),
        GenKind::SigmaDisj => T::SigmaDisj(n(), n()),
        GenKind::UnitDelFwd(x) => T::UnitDelFwd(x, n()),
        GenKind::UnitDelBwd(x) => T::UnitDelBwd(x, n()),
    }
}

/// Declared typing of an arrow variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowVar {
    pub name: String,
    pub source: Formula,
    pub target: Formula,
}

#[derive(Clone, Debug)]
pub struct AxiomSchema {
    pub name: String,
    pub system: System,
    pub arrow_vars: Vec<ArrowVar>,
    pub lhs: Pattern,
    pub rhs: Pattern,
    formula_vars: Vec<String>,
}

impl AxiomSchema {
    fn new(name: String, system: System, decls: &[&str], lhs: &str, rhs: &str) -> AxiomSchema {
        let lhs = parse_pattern(lhs).unwrap_or_else(|e| panic!("schema {name} lhs: {e}"));
        let rhs = parse_pattern(rhs).unwrap_or_else(|e| panic!("schema {name} rhs: {e}"));
        let arrow_vars: Vec<ArrowVar> = decls
            .iter()
            .map(|d| {
                let (name, source, target) = parse_arrow_decl(d).expect("declaration");
                ArrowVar { name, source, target }
            })
            .collect();
        let mut fvars = BTreeSet::new();
        let mut avars = BTreeSet::new();
        lhs.collect(&mut fvars, &mut avars);
        rhs.collect(&mut fvars, &mut avars);
        for v in &arrow_vars {
            meta_vars(&v.source, &mut fvars);
            meta_vars(&v.target, &mut fvars);
        }
        let declared: BTreeSet<String> = arrow_vars.iter().map(|v| v.name.clone()).collect();
        assert_eq!(avars, declared, "schema {name} declares exactly its arrow variables");
        AxiomSchema { name, system, arrow_vars, lhs, rhs, formula_vars: fvars.into_iter().collect() }
    }

    pub fn formula_vars(&self) -> &[String] {
        &self.formula_vars
    }

    fn side(&self, d: Direction) -> (&Pattern, &Pattern) {
        match d {
            Direction::Forward => (&self.lhs, &self.rhs),
            Direction::Backward => (&self.rhs, &self.lhs),
        }
    }

    /// Binds formula metavariables from the declared types of the bound arrow variables.
    fn close(&self, s: &mut Subst) -> Result<(), Error> {
        for v in &self.arrow_vars {
            if let Some(f) = s.arrows.get(&v.name).cloned() {
                let (a, b) = f.type_of()?;
                if !s.match_formula(&v.source, &a) || !s.match_formula(&v.target, &b) {
                    return Err(Error::NoMatch(format!("{} does not have the declared type in {}", v.name, self.name)));
                }
            }
        }
        Ok(())
    }

    /// Both sides under a complete substitution.
    pub fn instance(&self, subst: &Subst) -> Result<(ArrowTerm, ArrowTerm), Error> {
        let mut s = subst.clone();
        self.close(&mut s)?;
        for v in &self.arrow_vars {
            if !s.arrows.contains_key(&v.name) {
                return Err(Error::Unbound(v.name.clone()));
            }
        }
        for v in &self.formula_vars {
            if !s.formulas.contains_key(v) {
                return Err(Error::Unbound(v.clone()));
            }
        }
        let lhs = s.apply_pattern(&self.lhs)?;
        let rhs = s.apply_pattern(&self.rhs)?;
        let tl = lhs.type_of()?;
        let tr = rhs.type_of()?;
        if tl != tr {
            return Err(Error::IllTyped(format!("schema {} sides have types {tl:?} and {tr:?}", self.name)));
        }
        Ok((lhs, rhs))
    }

    /// Matches one side against `t`; returns the other side instantiated.
    pub fn apply(&self, t: &ArrowTerm, d: Direction) -> Result<ArrowTerm, Error> {
        let (from, to) = self.side(d);
        let mut s = Subst::new();
        if !s.match_pattern(from, t) {
            return Err(Error::NoMatch(format!("{} does not match {t}", self.name)));
        }
        self.close(&mut s)?;
        // Metavariables only on the other side come from the subject's type.
        let ty: Type = t.type_of()?;
        if let Some((a, b)) = pattern_type(self, from, &s) {
            if !s.match_formula(&a, &ty.0) || !s.match_formula(&b, &ty.1) {
                return Err(Error::NoMatch(format!("{} type mismatch on {t}", self.name)));
            }
        }
        let out = s.apply_pattern(to)?;
        if out.type_of()? != ty {
            return Err(Error::NoMatch(format!("{} changes the type of {t}", self.name)));
        }
        Ok(out)
    }
}

/// The type of a pattern side expressed in metavariables, when computable.
fn pattern_type(schema: &AxiomSchema, p: &Pattern, s: &Subst) -> Option<(Formula, Formula)> {
    fn go(schema: &AxiomSchema, p: &Pattern, s: &Subst) -> Option<(Formula, Formula)> {
        match p {
            Pattern::Var(n) => {
                if let Some(f) = s.arrows.get(n) {
                    return f.type_of().ok();
                }
                schema.arrow_vars.iter().find(|v| &v.name == n).map(|v| (v.source.clone(), v.target.clone()))
            }
            Pattern::Gen(g) => g.generator_type(),
            Pattern::Comp(f, g) => {
                let (_, ft) = go(schema, f, s)?;
                let (gs, _) = go(schema, g, s)?;
                Some((gs, ft))
            }
            Pattern::Tens(x, f, g) => {
                let (fs, ft) = go(schema, f, s)?;
                let (gs, gt) = go(schema, g, s)?;
                Some((Formula::bin(*x, fs, gs), Formula::bin(*x, ft, gt)))
            }
        }
    }
    go(schema, p, s)
}

/// Replaces the subterm at `at` by the other side of `schema`.
pub fn rewrite(f: &ArrowTerm, at: &TermPath, schema: &AxiomSchema, d: Direction) -> Result<ArrowTerm, Error> {
    let sub = f.subterm(at).ok_or_else(|| Error::NoMatch("no subterm at the given address".into()))?;
    let new = schema.apply(sub, d)?;
    Ok(f.replace_at(at, new).expect("address checked"))
}

pub fn catalog() -> &'static [AxiomSchema] {
    static CATALOG: OnceLock<Vec<AxiomSchema>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

pub fn schema(name: &str) -> Option<&'static AxiomSchema> {
    catalog().iter().find(|s| s.name == name)
}

fn build_catalog() -> Vec<AxiomSchema> {
    use System::{Ds, Pn, S};
    let mut out = Vec::new();
    let mut add = |name: &str, sys: System, decls: &[&str], lhs: &str, rhs: &str| {
        out.push(AxiomSchema::new(name.to_string(), sys, decls, lhs, rhs));
    };
    add("cat1_left", Ds, &["f: A |- B"], "f . id(A)", "f");
    add("cat1_right", Ds, &["f: A |- B"], "id(B) . f", "f");
    add("cat2", Ds, &["f: A |- B", "g: B |- C", "h: C |- D"], "h . (g . f)", "(h . g) . f");
    for (x, o) in [("conj", "&"), ("disj", "|")] {
        let t = |s: &str| s.replace("{x}", x).replace("{o}", o);
        add(&t("xi1_{x}"), Ds, &[], &t("tens_{x}(id(A), id(B))"), &t("id(A {o} B)"));
        add(
            &t("xi2_{x}"),
            Ds,
            &["f1: A1 |- B1", "g1: B1 |- C1", "f2: A2 |- B2", "g2: B2 |- C2"],
            &t("tens_{x}(g1 . f1, g2 . f2)"),
            &t("tens_{x}(g1, g2) . tens_{x}(f1, f2)"),
        );
        add(
            &t("b_nat_{x}"),
            Ds,
            &["f: A |- D", "g: B |- E", "h: C |- F"],
            &t("tens_{x}(tens_{x}(f, g), h) . assoc_fwd_{x}(A, B, C)"),
            &t("assoc_fwd_{x}(D, E, F) . tens_{x}(f, tens_{x}(g, h))"),
        );
        add(&t("bb1_{x}"), Ds, &[], &t("assoc_bwd_{x}(A, B, C) . assoc_fwd_{x}(A, B, C)"), &t("id(A {o} (B {o} C))"));
        add(&t("bb2_{x}"), Ds, &[], &t("assoc_fwd_{x}(A, B, C) . assoc_bwd_{x}(A, B, C)"), &t("id((A {o} B) {o} C)"));
        add(
            &t("b5_{x}"),
            Ds,
            &[],
            &t("assoc_bwd_{x}(A, B, C {o} D) . assoc_bwd_{x}(A {o} B, C, D)"),
            &t("tens_{x}(id(A), assoc_bwd_{x}(B, C, D)) . assoc_bwd_{x}(A, B {o} C, D) . tens_{x}(assoc_bwd_{x}(A, B, C), id(D))"),
        );
    }
    add(
        "c_nat_conj",
        Ds,
        &["f: A |- D", "g: B |- E"],
        "tens_conj(g, f) . sym_conj(A, B)",
        "sym_conj(D, E) . tens_conj(f, g)",
    );
    add(
        "c_nat_disj",
        Ds,
        &["f: A |- D", "g: B |- E"],
        "tens_disj(g, f) . sym_disj(B, A)",
        "sym_disj(E, D) . tens_disj(f, g)",
    );
    add(
        "d_nat",
        Ds,
        &["f: A |- D", "g: B |- E", "h: C |- F"],
        "tens_disj(tens_conj(f, g), h) . dist(A, B, C)",
        "dist(D, E, F) . tens_conj(f, tens_disj(g, h))",
    );
    add("cc_conj", Ds, &[], "sym_conj(B, A) . sym_conj(A, B)", "id(A & B)");
    add("cc_disj", Ds, &[], "sym_disj(A, B) . sym_disj(B, A)", "id(A | B)");
    add(
        "bc_conj",
        Ds,
        &[],
        "tens_conj(id(B), sym_conj(C, A)) . assoc_bwd_conj(B, C, A) . sym_conj(A, B & C) . assoc_bwd_conj(A, B, C) . tens_conj(sym_conj(B, A), id(C))",
        "assoc_bwd_conj(B, A, C)",
    );
    add(
        "bc_disj",
        Ds,
        &[],
        "tens_disj(id(B), sym_disj(A, C)) . assoc_bwd_disj(B, C, A) . sym_disj(B | C, A) . assoc_bwd_disj(A, B, C) . tens_disj(sym_disj(A, B), id(C))",
        "assoc_bwd_disj(B, A, C)",
    );
    add(
        "d_conj",
        Ds,
        &[],
        "tens_disj(assoc_bwd_conj(A, B, C), id(D)) . dist(A & B, C, D)",
        "dist(A, B & C, D) . tens_conj(id(A), dist(B, C, D)) . assoc_bwd_conj(A, B, C | D)",
    );
    add(
        "d_disj",
        Ds,
        &[],
        "dist(D, C, B | A) . tens_conj(id(D), assoc_bwd_disj(C, B, A))",
        "assoc_bwd_disj(D & C, B, A) . tens_disj(dist(D, C, B), id(A)) . dist(D, C | B, A)",
    );
    add(
        "db_conj",
        Ds,
        &[],
        "dr(A & B, C, D) . tens_conj(dist(A, B, C), id(D))",
        "dist(A, B, C & D) . tens_conj(id(A), dr(B, C, D)) . assoc_bwd_conj(A, B | C, D)",
    );
    add(
        "db_disj",
        Ds,
        &[],
        "tens_disj(id(D), dist(C, B, A)) . dr(D, C, B | A)",
        "assoc_bwd_disj(D, C & B, A) . tens_disj(dr(D, C, B), id(A)) . dist(D | C, B, A)",
    );
    add("delta_nat", Pn, &["f: A |- D"], "tens_conj(f, id(~B | B)) . delta_conj(B, A)", "delta_conj(B, D) . f");
    add("sigma_nat", Pn, &["f: A |- D"], "f . sigma_disj(B, A)", "sigma_disj(B, D) . tens_disj(id(B & ~B), f)");
    add(
        "b_delta",
        Pn,
        &[],
        "assoc_bwd_conj(A, B, ~C | C) . delta_conj(C, A & B)",
        "tens_conj(id(A), delta_conj(C, B))",
    );
    add(
        "b_sigma",
        Pn,
        &[],
        "sigma_disj(C, B | A) . assoc_bwd_disj(C & ~C, B, A)",
        "tens_disj(sigma_disj(C, B), id(A))",
    );
    add("d_sigma_conj", Pn, &[], "dist(~A | A, B, C) . sigma_conj(A, B | C)", "tens_disj(sigma_conj(A, B), id(C))");
    add("d_delta_disj", Pn, &[], "delta_disj(A, C & B) . dist(C, B, A & ~A)", "tens_conj(id(C), delta_disj(A, B))");
    add("sigma_delta", Pn, &[], "sigma_disj(A, A) . dist(A, ~A, A) . delta_conj(A, A)", "id(A)");
    add("sigma_delta_prime", Pn, &[], "sigma_prime(A, ~A) . dist(~A, A, ~A) . delta_prime(A, ~A)", "id(~A)");
    for (x, o, u) in [("conj", "&", "top"), ("disj", "|", "bot")] {
        let t = |s: &str| s.replace("{x}", x).replace("{o}", o).replace("{u}", u);
        add(
            &t("unit_nat_{x}"),
            S,
            &["f: A |- B"],
            &t("f . unit_del_fwd_{x}(A)"),
            &t("unit_del_fwd_{x}(B) . tens_{x}(f, id({u}))"),
        );
        add(&t("unit_iso1_{x}"), S, &[], &t("unit_del_fwd_{x}(A) . unit_del_bwd_{x}(A)"), &t("id(A)"));
        add(&t("unit_iso2_{x}"), S, &[], &t("unit_del_bwd_{x}(A) . unit_del_fwd_{x}(A)"), &t("id(A {o} {u})"));
        add(
            &t("b_unit_{x}"),
            S,
            &[],
            &t("assoc_bwd_{x}(A, B, {u}) . unit_del_bwd_{x}(A {o} B)"),
            &t("tens_{x}(id(A), unit_del_bwd_{x}(B))"),
        );
    }
    add("d_sigma_unit", S, &[], "dist(top, B, C) . sigma_bwd_conj(B | C)", "tens_disj(sigma_bwd_conj(B), id(C))");
    add("d_delta_unit", S, &[], "unit_del_fwd_disj(C & B) . dist(C, B, bot)", "tens_conj(id(C), unit_del_fwd_disj(B))");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_term;

    fn l(n: &str) -> Formula {
        Formula::letter(n)
    }

    #[test]
    fn catalog_parses() {
        assert!(catalog().len() >= 40);
        let names: BTreeSet<&str> = catalog().iter().map(|s| s.name.as_str()).collect();
        assert_eq!(names.len(), catalog().len());
    }

    #[test]
    fn instances() {
        let cc = schema("cc_conj").unwrap();
        let (lhs, rhs) = cc.instance(&Subst::new().formula("A", l("p")).formula("B", l("q"))).unwrap();
        assert_eq!(lhs, ArrowTerm::comp(ArrowTerm::SymConj(l("q"), l("p")), ArrowTerm::SymConj(l("p"), l("q"))));
        assert_eq!(rhs, ArrowTerm::Id(Formula::conj(l("p"), l("q"))));

        let sd = schema("sigma_delta").unwrap();
        let (lhs, rhs) = sd.instance(&Subst::new().formula("A", l("p"))).unwrap();
        assert_eq!(lhs, parse_term("sigma_disj(p, p) . dist(p, ~p, p) . delta_conj(p, p)").unwrap());
        assert_eq!(rhs, ArrowTerm::Id(l("p")));

        let xi = schema("xi1_conj").unwrap();
        let (lhs, rhs) = xi.instance(&Subst::new().formula("A", l("p")).formula("B", l("q"))).unwrap();
        assert_eq!(lhs, ArrowTerm::tens(Conn::Conj, ArrowTerm::Id(l("p")), ArrowTerm::Id(l("q"))));
        assert_eq!(rhs, ArrowTerm::Id(Formula::conj(l("p"), l("q"))));

        assert!(matches!(cc.instance(&Subst::new().formula("A", l("p"))), Err(Error::Unbound(_))));
        assert!(matches!(schema("cat1_left").unwrap().instance(&Subst::new()), Err(Error::Unbound(_))));
    }

    #[test]
    fn rewrites() {
        let t = ArrowTerm::comp(ArrowTerm::Id(l("p")), ArrowTerm::Id(l("p")));
        let r = rewrite(&t, &TermPath::root(), schema("cat1_left").unwrap(), Direction::Forward).unwrap();
        assert_eq!(r, ArrowTerm::Id(l("p")));

        let t = ArrowTerm::Id(Formula::conj(l("p"), l("q")));
        let r = rewrite(&t, &TermPath::root(), schema("cc_conj").unwrap(), Direction::Backward).unwrap();
        assert_eq!(r, ArrowTerm::comp(ArrowTerm::SymConj(l("q"), l("p")), ArrowTerm::SymConj(l("p"), l("q"))));

        let b5 = schema("b5_conj").unwrap();
        let s = Subst::new().formula("A", l("a")).formula("B", l("b")).formula("C", l("c")).formula("D", l("d"));
        let (lhs, rhs) = b5.instance(&s).unwrap();
        assert_eq!(rewrite(&lhs, &TermPath::root(), b5, Direction::Forward).unwrap(), rhs);

        let bad = ArrowTerm::SymConj(l("p"), l("q"));
        assert!(rewrite(&bad, &TermPath::root(), schema("cc_conj").unwrap(), Direction::Forward).is_err());
    }

    #[test]
    fn backward_cat1_takes_type_from_subject() {
        let f = ArrowTerm::SymConj(l("p"), l("q"));
        let r = rewrite(&f, &TermPath::root(), schema("cat1_left").unwrap(), Direction::Backward).unwrap();
        assert_eq!(r, ArrowTerm::comp(f.clone(), ArrowTerm::Id(Formula::conj(l("p"), l("q")))));
    }
}
