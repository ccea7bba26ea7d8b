//! Derived arrows, expanded into generator terms.

use super::ArrowTerm;
use crate::error::Error;
use crate::formula::{Conn, Context, Formula};

use ArrowTerm as T;
use Conn::{Conj, Disj};
use Formula as F;

fn id(a: &Formula) -> ArrowTerm {
    T::Id(a.clone())
}

fn neg(a: &Formula) -> Formula {
    F::neg(a.clone())
}

fn conj(a: &Formula, b: &Formula) -> Formula {
    F::conj(a.clone(), b.clone())
}

fn disj(a: &Formula, b: &Formula) -> Formula {
    F::disj(a.clone(), b.clone())
}

/// `(C ∨ B) ∧ A ⊢ C ∨ (B ∧ A)`
pub fn dr(c: &Formula, b: &Formula, a: &Formula) -> ArrowTerm {
    T::chain(vec![
        T::SymDisj(c.clone(), conj(b, a)),
        T::tens(Disj, T::SymConj(a.clone(), b.clone()), id(c)),
        T::Dist(a.clone(), b.clone(), c.clone()),
        T::tens(Conj, id(a), T::SymDisj(b.clone(), c.clone())),
        T::SymConj(disj(c, b), a.clone()),
    ])
}

/// `A ⊢ (¬B ∨ B) ∧ A`
pub fn sigma_conj(b: &Formula, a: &Formula) -> ArrowTerm {
    T::comp(T::SymConj(a.clone(), disj(&neg(b), b)), T::DeltaConj(b.clone(), a.clone()))
}

/// `A ∨ (B ∧ ¬B) ⊢ A`
pub fn delta_disj(b: &Formula, a: &Formula) -> ArrowTerm {
    T::comp(T::SigmaDisj(b.clone(), a.clone()), T::SymDisj(conj(b, &neg(b)), a.clone()))
}

/// `A ⊢ A ∧ (B ∨ ¬B)`
pub fn delta_prime(b: &Formula, a: &Formula) -> ArrowTerm {
    T::comp(T::tens(Conj, id(a), T::SymDisj(b.clone(), neg(b))), T::DeltaConj(b.clone(), a.clone()))
}

/// `(¬B ∧ B) ∨ A ⊢ A`
pub fn sigma_prime(b: &Formula, a: &Formula) -> ArrowTerm {
    T::comp(T::SigmaDisj(b.clone(), a.clone()), T::tens(Disj, T::SymConj(neg(b), b.clone()), id(a)))
}

/// `unit ξ A ⊢ A`
pub fn sigma_fwd(x: Conn, a: &Formula) -> ArrowTerm {
    match x {
        Conj => T::comp(T::UnitDelFwd(Conj, a.clone()), T::SymConj(F::Top, a.clone())),
        Disj => T::comp(T::UnitDelFwd(Disj, a.clone()), T::SymDisj(a.clone(), F::Bot)),
    }
}

/// `A ⊢ unit ξ A`
pub fn sigma_bwd(x: Conn, a: &Formula) -> ArrowTerm {
    match x {
        Conj => T::comp(T::SymConj(a.clone(), F::Top), T::UnitDelBwd(Conj, a.clone())),
        Disj => T::comp(T::SymDisj(F::Bot, a.clone()), T::UnitDelBwd(Disj, a.clone())),
    }
}

/// `⊤ ⊢ ¬B ∨ B`
pub fn tau_l(b: &Formula) -> ArrowTerm {
    T::comp(sigma_fwd(Conj, &disj(&neg(b), b)), T::DeltaConj(b.clone(), F::Top))
}

/// `B ∧ ¬B ⊢ ⊥`
pub fn gamma_r(b: &Formula) -> ArrowTerm {
    T::comp(T::SigmaDisj(b.clone(), F::Bot), T::UnitDelBwd(Disj, conj(b, &neg(b))))
}

/// Δ rebuilt from the unit arrows: `A ⊢ A ∧ (¬B ∨ B)`.
pub fn delta_conj_from_units(b: &Formula, a: &Formula) -> ArrowTerm {
    T::comp(T::tens(Conj, id(a), tau_l(b)), T::UnitDelBwd(Conj, a.clone()))
}

/// Σ rebuilt from the unit arrows: `(B ∧ ¬B) ∨ A ⊢ A`.
pub fn sigma_disj_from_units(b: &Formula, a: &Formula) -> ArrowTerm {
    T::comp(sigma_fwd(Disj, a), T::tens(Disj, gamma_r(b), id(a)))
}

/// `(D ∨ B) ∧ (C ∨ A) ⊢ (D ∧ C) ∨ (B ∨ A)`
pub fn eps_disj(d: &Formula, c: &Formula, b: &Formula, a: &Formula) -> ArrowTerm {
    T::chain(vec![
        T::tens(Disj, T::SymConj(c.clone(), d.clone()), id(&disj(b, a))),
        T::AssocBwd(Disj, conj(c, d), b.clone(), a.clone()),
        T::tens(Disj, T::comp(T::Dist(c.clone(), d.clone(), b.clone()), T::SymConj(disj(d, b), c.clone())), id(a)),
        T::Dist(disj(d, b), c.clone(), a.clone()),
    ])
}

/// `(A ∧ B) ∧ (C ∨ D) ⊢ (A ∧ C) ∨ (B ∧ D)`
pub fn eps_conj(a: &Formula, b: &Formula, c: &Formula, d: &Formula) -> ArrowTerm {
    T::chain(vec![
        T::Dist(a.clone(), c.clone(), conj(b, d)),
        T::tens(Conj, id(a), T::comp(T::SymDisj(c.clone(), conj(b, d)), T::Dist(b.clone(), d.clone(), c.clone()))),
        T::AssocBwd(Conj, a.clone(), b.clone(), disj(d, c)),
        T::tens(Conj, id(&conj(a, b)), T::SymDisj(d.clone(), c.clone())),
    ])
}

/// `Z(f)`: the arrow placed in the hole, identities on the sides.
pub fn ctx_arrow(z: &Context, f: ArrowTerm) -> ArrowTerm {
    match z.outer() {
        None => f,
        Some((inner, side, hole_left)) => {
            let inside = ctx_arrow(&inner, f);
            if hole_left {
                T::tens(z.conn(), inside, id(side))
            } else {
                T::tens(z.conn(), id(side), inside)
            }
        }
    }
}

fn check(z: &Context, conn: Conn) -> Result<(), Error> {
    if z.conn() != conn {
        return Err(Error::IllTyped(format!("context {z} has the wrong polarity")));
    }
    if !z.is_proper() {
        return Err(Error::HoleFrame);
    }
    Ok(())
}

/// Drops the factors wrapping an identity.
fn chain_skip_ids(fs: Vec<(ArrowTerm, bool)>) -> ArrowTerm {
    T::chain(fs.into_iter().filter(|(_, trivial)| !trivial).map(|(f, _)| f).collect())
}

/// `E_X ∧ A ⊢ X(A)` for a proper conjunctive context.
pub fn tau_conj(x: &Context, a: &Formula) -> Result<ArrowTerm, Error> {
    check(x, Conj)?;
    let (inner, side, hole_left) = x.outer().expect("proper");
    let b = side;
    Ok(match (inner.is_proper(), hole_left) {
        (false, false) => id(&conj(b, a)),
        (false, true) => T::SymConj(b.clone(), a.clone()),
        (true, false) => {
            let e = inner.frame()?;
            let t = tau_conj(&inner, a)?;
            let triv = t.is_id();
            chain_skip_ids(vec![(T::tens(Conj, id(b), t), triv), (T::AssocBwd(Conj, b.clone(), e, a.clone()), false)])
        }
        (true, true) => {
            let e = inner.frame()?;
            let t = tau_conj(&inner, a)?;
            let mut fs = Vec::new();
            if !t.is_id() {
                fs.push(T::tens(Conj, t, id(b)));
            }
            fs.push(T::AssocFwd(Conj, e.clone(), a.clone(), b.clone()));
            fs.push(T::tens(Conj, id(&e), T::SymConj(b.clone(), a.clone())));
            fs.push(T::AssocBwd(Conj, e, b.clone(), a.clone()));
            T::chain(fs)
        }
    })
}

/// `X(A) ⊢ E_X ∧ A`
pub fn tau_conj_inv(x: &Context, a: &Formula) -> Result<ArrowTerm, Error> {
    check(x, Conj)?;
    let (inner, side, hole_left) = x.outer().expect("proper");
    let b = side;
    Ok(match (inner.is_proper(), hole_left) {
        (false, false) => id(&conj(b, a)),
        (false, true) => T::SymConj(a.clone(), b.clone()),
        (true, false) => {
            let e = inner.frame()?;
            let t = tau_conj_inv(&inner, a)?;
            let triv = t.is_id();
            chain_skip_ids(vec![(T::AssocFwd(Conj, b.clone(), e, a.clone()), false), (T::tens(Conj, id(b), t), triv)])
        }
        (true, true) => {
            let e = inner.frame()?;
            let t = tau_conj_inv(&inner, a)?;
            let mut fs = vec![
                T::AssocFwd(Conj, e.clone(), b.clone(), a.clone()),
                T::tens(Conj, id(&e), T::SymConj(a.clone(), b.clone())),
                T::AssocBwd(Conj, e, a.clone(), b.clone()),
            ];
            if !t.is_id() {
                fs.push(T::tens(Conj, t, id(b)));
            }
            T::chain(fs)
        }
    })
}

/// `Y(A) ⊢ A ∨ D_Y` for a proper disjunctive context.
pub fn tau_disj(y: &Context, a: &Formula) -> Result<ArrowTerm, Error> {
    check(y, Disj)?;
    let (inner, side, hole_left) = y.outer().expect("proper");
    let b = side;
    Ok(match (inner.is_proper(), hole_left) {
        (false, true) => id(&disj(a, b)),
        (false, false) => T::SymDisj(a.clone(), b.clone()),
        (true, true) => {
            let d = inner.frame()?;
            let t = tau_disj(&inner, a)?;
            let triv = t.is_id();
            chain_skip_ids(vec![(T::AssocBwd(Disj, a.clone(), d, b.clone()), false), (T::tens(Disj, t, id(b)), triv)])
        }
        (true, false) => {
            let d = inner.frame()?;
            let t = tau_disj(&inner, a)?;
            let mut fs = vec![
                T::AssocBwd(Disj, a.clone(), b.clone(), d.clone()),
                T::tens(Disj, T::SymDisj(a.clone(), b.clone()), id(&d)),
                T::AssocFwd(Disj, b.clone(), a.clone(), d),
            ];
            if !t.is_id() {
                fs.push(T::tens(Disj, id(b), t));
            }
            T::chain(fs)
        }
    })
}

/// `A ∨ D_Y ⊢ Y(A)`
pub fn tau_disj_inv(y: &Context, a: &Formula) -> Result<ArrowTerm, Error> {
    check(y, Disj)?;
    let (inner, side, hole_left) = y.outer().expect("proper");
    let b = side;
    Ok(match (inner.is_proper(), hole_left) {
        (false, true) => id(&disj(a, b)),
        (false, false) => T::SymDisj(b.clone(), a.clone()),
        (true, true) => {
            let d = inner.frame()?;
            let t = tau_disj_inv(&inner, a)?;
            let triv = t.is_id();
            chain_skip_ids(vec![(T::tens(Disj, t, id(b)), triv), (T::AssocFwd(Disj, a.clone(), d, b.clone()), false)])
        }
        (true, false) => {
            let d = inner.frame()?;
            let t = tau_disj_inv(&inner, a)?;
            let mut fs = Vec::new();
            if !t.is_id() {
                fs.push(T::tens(Disj, id(b), t));
            }
            fs.push(T::AssocBwd(Disj, b.clone(), a.clone(), d.clone()));
            fs.push(T::tens(Disj, T::SymDisj(b.clone(), a.clone()), id(&d)));
            fs.push(T::AssocFwd(Disj, a.clone(), b.clone(), d));
            T::chain(fs)
        }
    })
}

/// `X(Y(A)) ⊢ Y(X(A))`; the identity when either context is a bare hole.
pub fn d_ctx(x: &Context, a: &Formula, y: &Context) -> Result<ArrowTerm, Error> {
    if x.conn() != Conj || y.conn() != Disj {
        return Err(Error::IllTyped("d_ctx expects a conjunctive and a disjunctive context".into()));
    }
    if !x.is_proper() || !y.is_proper() {
        return Ok(id(&x.apply(&y.apply(a))));
    }
    let e = x.frame()?;
    let d = y.frame()?;
    Ok(T::chain(vec![
        tau_disj_inv(y, &x.apply(a))?,
        T::tens(Disj, tau_conj(x, a)?, id(&d)),
        T::Dist(e.clone(), a.clone(), d),
        T::tens(Conj, id(&e), tau_disj(y, a)?),
        tau_conj_inv(x, &y.apply(a))?,
    ]))
}

/// The formula a ξ-nice formula reduces to under ρ.
pub fn rho_target(x: Conn, a: &Formula) -> Result<Formula, Error> {
    if !a.is_nice(x) {
        return Err(nice_err(x, a));
    }
    Ok(reduce(x, a))
}

fn reduce(x: Conn, a: &Formula) -> Formula {
    if a.is_constant_free() || *a == x.unit() {
        return a.clone();
    }
    let (l, r) = a.split(x).expect("nice");
    match (l.is_literate(), r.is_literate()) {
        (true, true) => F::bin(x, reduce(x, l), reduce(x, r)),
        (_, false) => reduce(x, l),
        (false, true) => reduce(x, r),
    }
}

fn nice_err(x: Conn, a: &Formula) -> Error {
    Error::NotNice(a.to_string(), if x == Conj { "conj" } else { "disj" })
}

/// `ρ^ξ_A : A ⊢ A^r`
pub fn rho(x: Conn, a: &Formula) -> Result<ArrowTerm, Error> {
    if !a.is_nice(x) {
        return Err(nice_err(x, a));
    }
    Ok(rho_rec(x, a))
}

fn rho_rec(x: Conn, a: &Formula) -> ArrowTerm {
    if a.is_constant_free() || *a == x.unit() {
        return id(a);
    }
    let (l, r) = a.split(x).expect("nice");
    let both = T::tens(x, rho_rec(x, l), rho_rec(x, r));
    match (l.is_literate(), r.is_literate()) {
        (true, true) => both,
        (_, false) => T::comp(T::UnitDelFwd(x, reduce(x, l)), both),
        (false, true) => T::comp(sigma_fwd(x, &reduce(x, r)), both),
    }
}

/// `(ρ^ξ_A)⁻¹ : A^r ⊢ A`
pub fn rho_inv(x: Conn, a: &Formula) -> Result<ArrowTerm, Error> {
    if !a.is_nice(x) {
        return Err(nice_err(x, a));
    }
    Ok(rho_inv_rec(x, a))
}

fn rho_inv_rec(x: Conn, a: &Formula) -> ArrowTerm {
    if a.is_constant_free() || *a == x.unit() {
        return id(a);
    }
    let (l, r) = a.split(x).expect("nice");
    let both = T::tens(x, rho_inv_rec(x, l), rho_inv_rec(x, r));
    match (l.is_literate(), r.is_literate()) {
        (true, true) => both,
        (_, false) => T::comp(both, T::UnitDelBwd(x, reduce(x, l))),
        (false, true) => T::comp(both, sigma_bwd(x, &reduce(x, r))),
    }
}
