//! Gentzen nets: sequent-style proof terms with context-indexed rules and cut.
//!
//! Every constructor checks its premises, so a `Net` value is always well typed
//! and carries its sequent.

use std::fmt;
use std::sync::Arc;

use crate::arrows::{derived, ArrowTerm, Dir};
use crate::error::Error;
use crate::formula::{Conn, Context, Formula, Path};

use Conn::{Conj, Disj};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum NetNode {
    Ax(Formula),
    AssocHat {
        conn: Conn,
        dir: Dir,
        ctx: Context,
        a: Formula,
        b: Formula,
        c: Formula,
        body: Arc<Net>,
    },
    /// Conclusion side shows `a ξ b`, premise side `b ξ a`.
    SymHat {
        conn: Conn,
        ctx: Context,
        a: Formula,
        b: Formula,
        body: Arc<Net>,
    },
    /// `A ⊢ B` to `⊤ ∧ A ⊢ B`
    TopFwd(Arc<Net>),
    /// `⊤ ∧ A ⊢ B` to `A ⊢ B`
    TopBwd(Arc<Net>),
    /// `B ⊢ A` to `B ⊢ A ∨ ⊥`
    BotBwd(Arc<Net>),
    /// `B ⊢ A ∨ ⊥` to `B ⊢ A`
    BotFwd(Arc<Net>),
    ConjRule(Arc<Net>, Arc<Net>),
    DisjRule(Arc<Net>, Arc<Net>),
    NegL(Arc<Net>),
    NegR(Arc<Net>),
    Cut {
        x: Context,
        y: Context,
        formula: Formula,
        f: Arc<Net>,
        g: Arc<Net>,
    },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Net {
    node: NetNode,
    source: Formula,
    target: Formula,
    cuts: usize,
}

fn rule_err(rule: &'static str, msg: String) -> Error {
    Error::rule(rule, msg)
}

impl Net {
    fn make(node: NetNode, source: Formula, target: Formula) -> Net {
        let cuts = match &node {
            NetNode::Ax(_) => 0,
            NetNode::AssocHat { body, .. } | NetNode::SymHat { body, .. } => body.cuts,
            NetNode::TopFwd(n) | NetNode::TopBwd(n) | NetNode::BotBwd(n) | NetNode::BotFwd(n) => n.cuts,
            NetNode::NegL(n) | NetNode::NegR(n) => n.cuts,
            NetNode::ConjRule(f, g) | NetNode::DisjRule(f, g) => f.cuts + g.cuts,
            NetNode::Cut { f, g, .. } => 1 + f.cuts + g.cuts,
        };
        Net { node, source, target, cuts }
    }

    pub fn node(&self) -> &NetNode {
        &self.node
    }

    pub fn source(&self) -> &Formula {
        &self.source
    }

    pub fn target(&self) -> &Formula {
        &self.target
    }

    pub fn sequent(&self) -> (Formula, Formula) {
        (self.source.clone(), self.target.clone())
    }

    pub fn cut_count(&self) -> usize {
        self.cuts
    }

    pub fn is_cut_free(&self) -> bool {
        self.cuts == 0
    }

    pub fn ax(a: Formula) -> Result<Net, Error> {
        if !a.is_atomic() {
            return Err(rule_err("ax", format!("{a} is not a letter or a constant")));
        }
        Ok(Net::make(NetNode::Ax(a.clone()), a.clone(), a))
    }

    pub fn assoc_hat(
        conn: Conn,
        dir: Dir,
        ctx: Context,
        a: Formula,
        b: Formula,
        c: Formula,
        body: Net,
    ) -> Result<Net, Error> {
        const RULE: &str = "assoc_hat";
        if ctx.conn() != conn {
            return Err(rule_err(RULE, format!("context {ctx} has the wrong polarity")));
        }
        let (s, t) = ArrowTerm::assoc(conn, dir, a.clone(), b.clone(), c.clone()).generator_type().expect("generator");
        Self::hat(RULE, conn, &ctx, s, t, body, |body| NetNode::AssocHat { conn, dir, ctx: ctx.clone(), a, b, c, body })
    }

    pub fn sym_hat(conn: Conn, ctx: Context, a: Formula, b: Formula, body: Net) -> Result<Net, Error> {
        const RULE: &str = "sym_hat";
        if ctx.conn() != conn {
            return Err(rule_err(RULE, format!("context {ctx} has the wrong polarity")));
        }
        let gen = match conn {
            Conj => ArrowTerm::SymConj(a.clone(), b.clone()),
            Disj => ArrowTerm::SymDisj(a.clone(), b.clone()),
        };
        let (s, t) = gen.generator_type().expect("generator");
        Self::hat(RULE, conn, &ctx, s, t, body, |body| NetNode::SymHat { conn, ctx: ctx.clone(), a, b, body })
    }

    fn hat(
        rule: &'static str,
        conn: Conn,
        ctx: &Context,
        s: Formula,
        t: Formula,
        body: Net,
        node: impl FnOnce(Arc<Net>) -> NetNode,
    ) -> Result<Net, Error> {
        match conn {
            Conj => {
                let premise = ctx.apply(&t);
                if body.source != premise {
                    return Err(rule_err(rule, format!("premise source {} is not {premise}", body.source)));
                }
                let target = body.target.clone();
                Ok(Net::make(node(Arc::new(body)), ctx.apply(&s), target))
            }
            Disj => {
                let premise = ctx.apply(&s);
                if body.target != premise {
                    return Err(rule_err(rule, format!("premise target {} is not {premise}", body.target)));
                }
                let source = body.source.clone();
                Ok(Net::make(node(Arc::new(body)), source, ctx.apply(&t)))
            }
        }
    }

    /// Associativity step whose hole sits at `hole` in the premise formula.
    pub fn assoc_hat_at(conn: Conn, dir: Dir, hole: &Path, body: Net) -> Result<Net, Error> {
        let side = if conn == Conj { &body.source } else { &body.target };
        let (ctx, pivot) = Context::at(side, hole, conn)?;
        let right_nested = matches!((conn, dir), (Conj, Dir::Bwd) | (Disj, Dir::Fwd));
        let bad = || rule_err("assoc_hat", format!("{pivot} has the wrong shape"));
        let (a, b, c) = if right_nested {
            let (a, bc) = pivot.split(conn).ok_or_else(bad)?;
            let (b, c) = bc.split(conn).ok_or_else(bad)?;
            (a.clone(), b.clone(), c.clone())
        } else {
            let (ab, c) = pivot.split(conn).ok_or_else(bad)?;
            let (a, b) = ab.split(conn).ok_or_else(bad)?;
            (a.clone(), b.clone(), c.clone())
        };
        Net::assoc_hat(conn, dir, ctx, a, b, c, body)
    }

    /// Swap of the two halves of the binary formula at `hole` in the premise.
    pub fn sym_hat_at(conn: Conn, hole: &Path, body: Net) -> Result<Net, Error> {
        let side = if conn == Conj { &body.source } else { &body.target };
        let (ctx, pivot) = Context::at(side, hole, conn)?;
        let (b, a) = pivot.split(conn).ok_or_else(|| rule_err("sym_hat", format!("{pivot} has the wrong shape")))?;
        let (a, b) = (a.clone(), b.clone());
        Net::sym_hat(conn, ctx, a, b, body)
    }

    pub fn top_fwd(body: Net) -> Net {
        let source = Formula::conj(Formula::Top, body.source.clone());
        let target = body.target.clone();
        Net::make(NetNode::TopFwd(Arc::new(body)), source, target)
    }

    pub fn top_bwd(body: Net) -> Result<Net, Error> {
        let source = match &body.source {
            Formula::Conj(t, a) if **t == Formula::Top => (**a).clone(),
            other => return Err(rule_err("top_bwd", format!("premise source {other} is not top & A"))),
        };
        let target = body.target.clone();
        Ok(Net::make(NetNode::TopBwd(Arc::new(body)), source, target))
    }

    pub fn bot_bwd(body: Net) -> Net {
        let source = body.source.clone();
        let target = Formula::disj(body.target.clone(), Formula::Bot);
        Net::make(NetNode::BotBwd(Arc::new(body)), source, target)
    }

    pub fn bot_fwd(body: Net) -> Result<Net, Error> {
        let target = match &body.target {
            Formula::Disj(a, b) if **b == Formula::Bot => (**a).clone(),
            other => return Err(rule_err("bot_fwd", format!("premise target {other} is not A | bot"))),
        };
        let source = body.source.clone();
        Ok(Net::make(NetNode::BotFwd(Arc::new(body)), source, target))
    }

    pub fn conj_rule(f1: Net, f2: Net) -> Result<Net, Error> {
        let (a1, c1) = f1
            .target
            .split(Disj)
            .ok_or_else(|| rule_err("conj_rule", format!("left target {} is not a disjunction", f1.target)))?;
        let (a2, c2) = f2
            .target
            .split(Disj)
            .ok_or_else(|| rule_err("conj_rule", format!("right target {} is not a disjunction", f2.target)))?;
        let source = Formula::conj(f1.source.clone(), f2.source.clone());
        let target = Formula::disj(Formula::conj(a1.clone(), a2.clone()), Formula::disj(c1.clone(), c2.clone()));
        Ok(Net::make(NetNode::ConjRule(Arc::new(f1), Arc::new(f2)), source, target))
    }

    pub fn disj_rule(f1: Net, f2: Net) -> Result<Net, Error> {
        let (c1, a1) = f1
            .source
            .split(Conj)
            .ok_or_else(|| rule_err("disj_rule", format!("left source {} is not a conjunction", f1.source)))?;
        let (c2, a2) = f2
            .source
            .split(Conj)
            .ok_or_else(|| rule_err("disj_rule", format!("right source {} is not a conjunction", f2.source)))?;
        let source = Formula::conj(Formula::conj(c1.clone(), c2.clone()), Formula::disj(a1.clone(), a2.clone()));
        let target = Formula::disj(f1.target.clone(), f2.target.clone());
        Ok(Net::make(NetNode::DisjRule(Arc::new(f1), Arc::new(f2)), source, target))
    }

    pub fn neg_l(body: Net) -> Result<Net, Error> {
        let (a, c) = body
            .target
            .split(Disj)
            .ok_or_else(|| rule_err("neg_l", format!("premise target {} is not a disjunction", body.target)))?;
        let source = Formula::conj(body.source.clone(), Formula::neg(a.clone()));
        let target = c.clone();
        Ok(Net::make(NetNode::NegL(Arc::new(body)), source, target))
    }

    pub fn neg_r(body: Net) -> Result<Net, Error> {
        let (c, a) = body
            .source
            .split(Conj)
            .ok_or_else(|| rule_err("neg_r", format!("premise source {} is not a conjunction", body.source)))?;
        let source = c.clone();
        let target = Formula::disj(Formula::neg(a.clone()), body.target.clone());
        Ok(Net::make(NetNode::NegR(Arc::new(body)), source, target))
    }

    /// `g : B ⊢ Y(A)` and `f : X(A) ⊢ C` give `X(B) ⊢ Y(C)`.
    pub fn cut(x: Context, y: Context, a: Formula, f: Net, g: Net) -> Result<Net, Error> {
        if x.conn() != Conj || y.conn() != Disj {
            return Err(rule_err("cut", "expects a conjunctive and a disjunctive context".into()));
        }
        if f.source != x.apply(&a) {
            return Err(rule_err("cut", format!("left premise source {} is not {}", f.source, x.apply(&a))));
        }
        if g.target != y.apply(&a) {
            return Err(rule_err("cut", format!("right premise target {} is not {}", g.target, y.apply(&a))));
        }
        let source = x.apply(&g.source);
        let target = y.apply(&f.target);
        Ok(Net::make(NetNode::Cut { x, y, formula: a, f: Arc::new(f), g: Arc::new(g) }, source, target))
    }

    /// Cut located by hole paths in `f`'s source and `g`'s target.
    pub fn cut_at(hx: &Path, hy: &Path, f: Net, g: Net) -> Result<Net, Error> {
        let (x, a) = Context::at(&f.source, hx, Conj)?;
        let (y, a2) = Context::at(&g.target, hy, Disj)?;
        if a != a2 {
            return Err(rule_err("cut", format!("cut formulae {a} and {a2} differ")));
        }
        Net::cut(x, y, a, f, g)
    }

    /// Immediate subnets.
    pub fn children(&self) -> Vec<&Arc<Net>> {
        match &self.node {
            NetNode::Ax(_) => vec![],
            NetNode::AssocHat { body, .. } | NetNode::SymHat { body, .. } => vec![body],
            NetNode::TopFwd(n) | NetNode::TopBwd(n) | NetNode::BotBwd(n) | NetNode::BotFwd(n) => vec![n],
            NetNode::NegL(n) | NetNode::NegR(n) => vec![n],
            NetNode::ConjRule(f, g) | NetNode::DisjRule(f, g) => vec![f, g],
            NetNode::Cut { f, g, .. } => vec![f, g],
        }
    }

    /// Number of rule applications.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    /// Rebuilds this node over new children of the same sequents.
    pub fn with_children(&self, kids: Vec<Net>) -> Result<Net, Error> {
        let mut it = kids.into_iter();
        let mut next = || it.next().ok_or_else(|| rule_err("rebuild", "too few children".into()));
        Ok(match &self.node {
            NetNode::Ax(_) => self.clone(),
            NetNode::AssocHat { conn, dir, ctx, a, b, c, .. } => {
                Net::assoc_hat(*conn, *dir, ctx.clone(), a.clone(), b.clone(), c.clone(), next()?)?
            }
            NetNode::SymHat { conn, ctx, a, b, .. } => Net::sym_hat(*conn, ctx.clone(), a.clone(), b.clone(), next()?)?,
            NetNode::TopFwd(_) => Net::top_fwd(next()?),
            NetNode::TopBwd(_) => Net::top_bwd(next()?)?,
            NetNode::BotBwd(_) => Net::bot_bwd(next()?),
            NetNode::BotFwd(_) => Net::bot_fwd(next()?)?,
            NetNode::NegL(_) => Net::neg_l(next()?)?,
            NetNode::NegR(_) => Net::neg_r(next()?)?,
            NetNode::ConjRule(..) => {
                let f = next()?;
                Net::conj_rule(f, next()?)?
            }
            NetNode::DisjRule(..) => {
                let f = next()?;
                Net::disj_rule(f, next()?)?
            }
            NetNode::Cut { x, y, formula, .. } => {
                let f = next()?;
                Net::cut(x.clone(), y.clone(), formula.clone(), f, next()?)?
            }
        })
    }
}

pub fn net_type(n: &Net) -> (Formula, Formula) {
    n.sequent()
}

pub fn identity_net(a: &Formula) -> Net {
    match a {
        Formula::Letter(_) | Formula::Top | Formula::Bot => Net::ax(a.clone()).expect("atomic"),
        Formula::Conj(l, r) => tens_net(Conj, identity_net(l), identity_net(r)),
        Formula::Disj(l, r) => tens_net(Disj, identity_net(l), identity_net(r)),
        Formula::Neg(b) => {
            let inner = Net::neg_l(Net::bot_bwd(identity_net(b))).expect("disjunctive target");
            let swapped =
                Net::sym_hat(Conj, Context::hole(Conj), a.clone(), (**b).clone(), inner).expect("premise shape");
            Net::bot_fwd(Net::neg_r(swapped).expect("conjunctive source")).expect("bot on the right")
        }
    }
}

/// Net whose denotation is `f1 ξ f2` for the denotations of the arguments.
pub fn tens_net(conn: Conn, f1: Net, f2: Net) -> Net {
    match conn {
        Conj => {
            let r = Net::conj_rule(Net::bot_bwd(f1), Net::bot_bwd(f2)).expect("disjunctive targets");
            let r = Net::assoc_hat_at(Disj, Dir::Fwd, &Path::root(), r).expect("right-nested target");
            Net::bot_fwd(Net::bot_fwd(r).expect("bot")).expect("bot")
        }
        Disj => {
            let r = Net::disj_rule(Net::top_fwd(f1), Net::top_fwd(f2)).expect("conjunctive sources");
            let r = Net::assoc_hat_at(Conj, Dir::Fwd, &Path::root(), r).expect("left-nested source");
            Net::top_bwd(Net::top_bwd(r).expect("top")).expect("top")
        }
    }
}

/// A cut-free-up-to-composition net denoting `f`.
pub fn gentzenize(f: &ArrowTerm) -> Result<Net, Error> {
    f.type_of()?;
    Ok(gz(f))
}

fn gz(f: &ArrowTerm) -> Net {
    use ArrowTerm as T;
    let hole = Path::root();
    match f {
        T::Id(a) => identity_net(a),
        T::AssocFwd(x, ..) | T::AssocBwd(x, ..) => {
            let dir = if matches!(f, T::AssocFwd(..)) { Dir::Fwd } else { Dir::Bwd };
            let (s, t) = f.generator_type().expect("generator");
            let premise = if *x == Conj { t } else { s };
            Net::assoc_hat_at(*x, dir, &hole, identity_net(&premise)).expect("premise shape")
        }
        T::SymConj(a, b) => Net::sym_hat(
            Conj,
            Context::hole(Conj),
            a.clone(),
            b.clone(),
            identity_net(&Formula::conj(b.clone(), a.clone())),
        )
        .expect("premise shape"),
        T::SymDisj(a, b) => Net::sym_hat(
            Disj,
            Context::hole(Disj),
            a.clone(),
            b.clone(),
            identity_net(&Formula::disj(b.clone(), a.clone())),
        )
        .expect("premise shape"),
        T::Dist(a, b, c) => Net::cut(
            Context::with_left(a.clone(), Context::hole(Conj)),
            Context::with_right(Context::hole(Disj), c.clone()),
            b.clone(),
            identity_net(&Formula::conj(a.clone(), b.clone())),
            identity_net(&Formula::disj(b.clone(), c.clone())),
        )
        .expect("cut shape"),
        T::DeltaConj(b, a) => {
            let right = Net::neg_r(Net::top_fwd(identity_net(b))).expect("conjunctive source");
            let t = tens_net(Conj, identity_net(a), right);
            let s = Net::sym_hat(Conj, Context::hole(Conj), Formula::Top, a.clone(), t).expect("premise shape");
            Net::top_bwd(s).expect("top")
        }
        T::SigmaDisj(b, a) => {
            let left = Net::neg_l(Net::bot_bwd(identity_net(b))).expect("disjunctive target");
            let t = tens_net(Disj, left, identity_net(a));
            let s = Net::sym_hat(Disj, Context::hole(Disj), a.clone(), Formula::Bot, t).expect("premise shape");
            Net::bot_fwd(s).expect("bot")
        }
        T::UnitDelFwd(Conj, a) => {
            Net::sym_hat(Conj, Context::hole(Conj), a.clone(), Formula::Top, Net::top_fwd(identity_net(a)))
                .expect("shape")
        }
        T::UnitDelBwd(Conj, a) => {
            let s = Net::sym_hat(
                Conj,
                Context::hole(Conj),
                Formula::Top,
                a.clone(),
                identity_net(&Formula::conj(a.clone(), Formula::Top)),
            )
            .expect("shape");
            Net::top_bwd(s).expect("top")
        }
        T::UnitDelFwd(Disj, a) => Net::bot_fwd(identity_net(&Formula::disj(a.clone(), Formula::Bot))).expect("bot"),
        T::UnitDelBwd(Disj, a) => Net::bot_bwd(identity_net(a)),
        T::Comp(g, h) => {
            let (gn, hn) = (gz(g), gz(h));
            let mid = hn.target.clone();
            Net::cut(Context::hole(Conj), Context::hole(Disj), mid, gn, hn).expect("composable")
        }
        T::Tens(x, g, h) => tens_net(*x, gz(g), gz(h)),
    }
}

/// The arrow term a net stands for.
pub fn denote(n: &Net) -> ArrowTerm {
    use ArrowTerm as T;
    match &n.node {
        NetNode::Ax(a) => T::Id(a.clone()),
        NetNode::AssocHat { conn, dir, ctx, a, b, c, body } => {
            let gen = T::assoc(*conn, *dir, a.clone(), b.clone(), c.clone());
            hat_denote(*conn, ctx, gen, denote(body))
        }
        NetNode::SymHat { conn, ctx, a, b, body } => {
            let gen = match conn {
                Conj => T::SymConj(a.clone(), b.clone()),
                Disj => T::SymDisj(a.clone(), b.clone()),
            };
            hat_denote(*conn, ctx, gen, denote(body))
        }
        NetNode::TopFwd(f) => T::comp(denote(f), derived::sigma_fwd(Conj, &f.source)),
        NetNode::TopBwd(g) => {
            let a = n.source.clone();
            T::comp(denote(g), derived::sigma_bwd(Conj, &a))
        }
        NetNode::BotBwd(f) => T::comp(T::UnitDelBwd(Disj, f.target.clone()), denote(f)),
        NetNode::BotFwd(g) => T::comp(T::UnitDelFwd(Disj, n.target.clone()), denote(g)),
        NetNode::ConjRule(f1, f2) => {
            let (a1, c1) = f1.target.split(Disj).expect("typed");
            let (a2, c2) = f2.target.split(Disj).expect("typed");
            T::comp(derived::eps_disj(a1, a2, c1, c2), T::tens(Conj, denote(f1), denote(f2)))
        }
        NetNode::DisjRule(f1, f2) => {
            let (c1, a1) = f1.source.split(Conj).expect("typed");
            let (c2, a2) = f2.source.split(Conj).expect("typed");
            T::comp(T::tens(Disj, denote(f1), denote(f2)), derived::eps_conj(c1, c2, a1, a2))
        }
        NetNode::NegL(f) => {
            let (a, c) = f.target.split(Disj).expect("typed");
            let na = Formula::neg(a.clone());
            T::chain(vec![
                derived::sigma_prime(a, c),
                T::Dist(na.clone(), a.clone(), c.clone()),
                T::SymConj(f.target.clone(), na.clone()),
                T::tens(Conj, denote(f), T::Id(na)),
            ])
        }
        NetNode::NegR(f) => {
            let (c, a) = f.source.split(Conj).expect("typed");
            let na = Formula::neg(a.clone());
            T::chain(vec![
                T::tens(Disj, T::Id(na.clone()), denote(f)),
                T::SymDisj(na.clone(), f.source.clone()),
                T::Dist(c.clone(), a.clone(), na),
                derived::delta_prime(a, c),
            ])
        }
        NetNode::Cut { x, y, formula, f, g } => {
            let mut fs = vec![derived::ctx_arrow(y, denote(f))];
            if x.is_proper() && y.is_proper() {
                fs.push(derived::d_ctx(x, formula, y).expect("proper contexts"));
            }
            fs.push(derived::ctx_arrow(x, denote(g)));
            T::chain(fs)
        }
    }
}

fn hat_denote(conn: Conn, ctx: &Context, gen: ArrowTerm, body: ArrowTerm) -> ArrowTerm {
    let lifted = derived::ctx_arrow(ctx, gen);
    match conn {
        Conj => ArrowTerm::comp(body, lifted),
        Disj => ArrowTerm::comp(lifted, body),
    }
}

fn conn_suffix(c: Conn) -> &'static str {
    match c {
        Conj => "conj",
        Disj => "disj",
    }
}

impl fmt::Display for Net {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            NetNode::Ax(a) => write!(f, "ax({a})"),
            NetNode::AssocHat { conn, dir, ctx, a, b, c, body } => {
                let d = if *dir == Dir::Fwd { "fwd" } else { "bwd" };
                write!(f, "assoc_hat_{d}_{}({ctx}, {a}, {b}, {c}, {body})", conn_suffix(*conn))
            }
            NetNode::SymHat { conn, ctx, a, b, body } => {
                write!(f, "sym_hat_{}({ctx}, {a}, {b}, {body})", conn_suffix(*conn))
            }
            NetNode::TopFwd(n) => write!(f, "top_fwd({n})"),
            NetNode::TopBwd(n) => write!(f, "top_bwd({n})"),
            NetNode::BotBwd(n) => write!(f, "bot_bwd({n})"),
            NetNode::BotFwd(n) => write!(f, "bot_fwd({n})"),
            NetNode::ConjRule(a, b) => write!(f, "conj_rule({a}, {b})"),
            NetNode::DisjRule(a, b) => write!(f, "disj_rule({a}, {b})"),
            NetNode::NegL(n) => write!(f, "neg_l({n})"),
            NetNode::NegR(n) => write!(f, "neg_r({n})"),
            NetNode::Cut { x, y, formula, f: l, g } => write!(f, "cut({x}, {y}, {formula}, {l}, {g})"),
        }
    }
}

impl fmt::Debug for Net {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::BrauerArrow;
    use crate::graph::graph_of;
    use crate::syntax::{parse_formula, parse_net};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn example_sequent() {
        let n = Net::conj_rule(identity_net(&f("p | q")), Net::bot_bwd(identity_net(&f("r")))).unwrap();
        assert_eq!(n.sequent(), (f("(p | q) & r"), f("p & r | q | bot")));
        assert_eq!(Net::ax(Formula::Top).unwrap().sequent(), (Formula::Top, Formula::Top));
        let c =
            Net::cut(Context::hole(Conj), Context::hole(Disj), f("p"), identity_net(&f("p")), identity_net(&f("p")))
                .unwrap();
        assert_eq!(c.sequent(), (f("p"), f("p")));
        assert_eq!(c.cut_count(), 1);
    }

    #[test]
    fn negation_identity_shape() {
        let n = identity_net(&f("~p"));
        assert_eq!(n.to_string(), "bot_fwd(neg_r(sym_hat_conj(_, ~p, p, neg_l(bot_bwd(ax(p))))))");
        assert_eq!(n.sequent(), (f("~p"), f("~p")));
    }

    #[test]
    fn identity_nets_have_identity_graphs() {
        for s in ["p", "p & q", "p | ~q", "~(p & q) | top", "(p | bot) & ~~r"] {
            let a = f(s);
            let n = identity_net(&a);
            assert!(n.is_cut_free());
            let d = denote(&n);
            assert_eq!(d.type_of().unwrap(), (a.clone(), a.clone()));
            assert_eq!(graph_of(&d).unwrap(), BrauerArrow::identity(a.letter_count()), "{s}");
        }
    }

    #[test]
    fn table_entries() {
        let t = crate::syntax::parse_term("dist(a, b, c)").unwrap();
        let n = gentzenize(&t).unwrap();
        assert!(matches!(n.node(), NetNode::Cut { .. }));
        assert_eq!(n.sequent(), t.type_of().unwrap());
        let sym = gentzenize(&ArrowTerm::SymConj(f("a"), f("b"))).unwrap();
        assert_eq!(denote(&sym).type_of().unwrap(), ArrowTerm::SymConj(f("a"), f("b")).type_of().unwrap());
        let delta = gentzenize(&ArrowTerm::DeltaConj(f("b"), f("a"))).unwrap();
        assert!(matches!(delta.node(), NetNode::TopBwd(_)));
        assert_eq!(gentzenize(&ArrowTerm::Id(f("p"))).unwrap(), Net::ax(f("p")).unwrap());
    }

    #[test]
    fn rejects_bad_premises() {
        assert!(Net::ax(f("p & q")).is_err());
        assert!(Net::top_bwd(identity_net(&f("p"))).is_err());
        assert!(Net::cut(
            Context::hole(Conj),
            Context::hole(Disj),
            f("q"),
            identity_net(&f("p")),
            identity_net(&f("p"))
        )
        .is_err());
    }

    #[test]
    fn net_text_roundtrip() {
        let n =
            gentzenize(&crate::syntax::parse_term("dist(a, b | c, d) . tens_conj(id(a), sym_disj(b | c, d))").unwrap())
                .unwrap();
        let back = parse_net(&n.to_string()).unwrap();
        assert_eq!(back, n);
    }
}
