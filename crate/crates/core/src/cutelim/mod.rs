//! Cut elimination for Gentzen nets.
//!
//! Cuts are removed innermost first, so the cut being reduced always has
//! cut-free premises. Each reduction step either removes the cut, splits it
//! into cuts of smaller degree, or pushes it one rule upward along the cluster
//! of the side the rank is computed from.

mod cluster;
mod rearrange;

use std::fmt;

pub use cluster::{
    check_superficial, cluster_length, cut_complexity, is_cut_free, upper, Complexity, Occurrence, Side, Upper,
};

use crate::error::Error;
use crate::formula::{Conn, Context, Formula, Path, Step};
use crate::gentzen::{denote, Net, NetNode};
use crate::graph::graph_of;
use cluster::{clusters, rank};
use rearrange::{node, rearrange, Blocks};

use Conn::{Conj, Disj};

/// Which side to push a cut into when the rank allows both.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    GSideFirst,
    FSideFirst,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub strategy: Strategy,
    /// Verify the graph of every emitted rewrite.
    pub checked: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: String,
    pub formula: Formula,
    pub before: Complexity,
    /// Complexities of the cuts this step produced.
    pub after: Vec<Complexity>,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} ->", self.rule, self.formula, self.before)?;
        if self.after.is_empty() {
            return write!(f, " done");
        }
        for c in &self.after {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

pub fn eliminate(n: &Net) -> Result<(Net, Vec<TraceStep>), Error> {
    eliminate_with(n, Options::default())
}

const STACK: usize = 256 << 20;

pub fn eliminate_with(n: &Net, opts: Options) -> Result<(Net, Vec<TraceStep>), Error> {
    if n.is_cut_free() {
        return Ok((n.clone(), Vec::new()));
    }
    // reduction depth grows with cluster lengths
    std::thread::scope(|sc| {
        std::thread::Builder::new()
            .stack_size(STACK)
            .spawn_scoped(sc, || {
                let mut e = Engine { opts, trace: Vec::new() };
                let out = e.walk(n)?;
                Ok((out, e.trace))
            })
            .expect("spawn elimination thread")
            .join()
            .expect("elimination thread panicked")
    })
}

struct Engine {
    opts: Options,
    trace: Vec<TraceStep>,
}

fn elim_err(rule: &'static str, msg: impl Into<String>) -> Error {
    Error::Elimination { rule, msg: msg.into() }
}

impl Engine {
    fn walk(&mut self, n: &Net) -> Result<Net, Error> {
        if n.is_cut_free() {
            return Ok(n.clone());
        }
        let kids = n.children().into_iter().map(|k| self.walk(k)).collect::<Result<Vec<_>, _>>()?;
        match n.node() {
            NetNode::Cut { x, y, formula, .. } => {
                let mut kids = kids.into_iter();
                let (f, g) = (kids.next().expect("two premises"), kids.next().expect("two premises"));
                self.reduce(x, y, formula, &f, &g, None)
            }
            _ => n.with_children(kids),
        }
    }

    /// Cut-free net equal to `cut_{x,y}(f, g)`.
    fn reduce(
        &mut self,
        x: &Context,
        y: &Context,
        a: &Formula,
        f: &Net,
        g: &Net,
        parent: Option<(usize, Complexity)>,
    ) -> Result<Net, Error> {
        let (hx, hy) = (x.hole_path(), y.hole_path());
        let cl = clusters(a, &hx, &hy, f, g)?;
        let cx = Complexity { degree: a.degree(), rank: rank(a, cl) };
        if let Some((idx, pc)) = parent {
            if cx >= pc {
                return Err(elim_err("complexity", format!("cut on {a} has {cx}, not below {pc}")));
            }
            self.trace[idx].after.push(cx);
        }
        let idx = self.trace.len();
        self.trace.push(TraceStep { rule: String::new(), formula: a.clone(), before: cx, after: Vec::new() });
        let me = Some((idx, cx));
        let (s, t) = (cl.s.unwrap_or(0), cl.t.unwrap_or(0));

        let (rule, out) = if cx.rank == 0 {
            match a {
                Formula::Letter(_) | Formula::Top if t == 1 => ("identity".to_string(), f.clone()),
                Formula::Letter(_) | Formula::Bot if s == 1 => ("identity".to_string(), g.clone()),
                Formula::Conj(..) => ("principal-conj".to_string(), self.principal_conj(x, f, g, me)?),
                Formula::Disj(..) => ("principal-disj".to_string(), self.principal_disj(y, f, g, me)?),
                Formula::Neg(_) => ("principal-neg".to_string(), self.principal_neg(f, g, me)?),
                _ => return Err(elim_err("identity", format!("no leaf for {a}"))),
            }
        } else {
            let f_side_ok = match a {
                Formula::Letter(_) => s < t || (s == t && self.opts.strategy == Strategy::FSideFirst),
                Formula::Neg(_) => s > 1 && (t == 1 || self.opts.strategy == Strategy::FSideFirst),
                Formula::Bot | Formula::Disj(..) => true,
                Formula::Top | Formula::Conj(..) => false,
            };
            if f_side_ok {
                self.commute_f(x, y, a, f, g, me)?
            } else {
                self.commute_g(x, y, a, f, g, me)?
            }
        };
        self.trace[idx].rule = rule.clone();

        let want = (x.apply(g.source()), y.apply(f.target()));
        if out.sequent() != want {
            return Err(elim_err(
                "type",
                format!("{rule} produced {} |- {}, expected {} |- {}", out.source(), out.target(), want.0, want.1),
            ));
        }
        if self.opts.checked {
            let before = Net::cut(x.clone(), y.clone(), a.clone(), f.clone(), g.clone())?;
            if graph_of(&denote(&before))? != graph_of(&denote(&out))? {
                return Err(elim_err("graph", format!("{rule} changed the graph of a cut on {a}")));
            }
        }
        Ok(out)
    }

    fn principal_conj(&mut self, x: &Context, f: &Net, g: &Net, me: Option<(usize, Complexity)>) -> Result<Net, Error> {
        let NetNode::ConjRule(g1, g2) = g.node() else {
            return Err(elim_err("principal-conj", "leaf is not a conjunction rule"));
        };
        let hx = x.hole_path();
        let (x1, a1) = Context::at(f.source(), &hx.child(Step::Left), Conj)?;
        let (_, c1) = g1.target().split(Disj).expect("typed");
        let y1 = Context::with_right(Context::hole(Disj), c1.clone());
        let first = self.reduce(&x1, &y1, &a1, f, g1, me)?;
        let (x2, a2) = Context::at(first.source(), &hx.child(Step::Right), Conj)?;
        let (_, c2) = g2.target().split(Disj).expect("typed");
        let y2 = Context::with_right(Context::hole(Disj), c2.clone());
        let second = self.reduce(&x2, &y2, &a2, &first, g2, me)?;
        Net::assoc_hat_at(Disj, crate::arrows::Dir::Bwd, &Path::root(), second)
    }

    fn principal_disj(&mut self, y: &Context, f: &Net, g: &Net, me: Option<(usize, Complexity)>) -> Result<Net, Error> {
        let NetNode::DisjRule(f1, f2) = f.node() else {
            return Err(elim_err("principal-disj", "leaf is not a disjunction rule"));
        };
        let hy = y.hole_path();
        let (c1, _) = f1.source().split(Conj).expect("typed");
        let (c2, _) = f2.source().split(Conj).expect("typed");
        let (y1, a1) = Context::at(g.target(), &hy.child(Step::Left), Disj)?;
        let x1 = Context::with_left(c1.clone(), Context::hole(Conj));
        let first = self.reduce(&x1, &y1, &a1, f1, g, me)?;
        let (y2, a2) = Context::at(first.target(), &hy.child(Step::Right), Disj)?;
        let x2 = Context::with_left(c2.clone(), Context::hole(Conj));
        let second = self.reduce(&x2, &y2, &a2, f2, &first, me)?;
        // C2 ∧ (C1 ∧ B)  to  (C1 ∧ C2) ∧ B
        let (_, rest) = second.source().split(Conj).expect("typed");
        let (_, b) = rest.split(Conj).expect("typed");
        let mut bl = Blocks::new(Conj);
        let (l1, l2, lb) = (bl.leaf(c1), bl.leaf(c2), bl.leaf(b));
        let from = node(l2.clone(), node(l1.clone(), lb.clone()));
        rearrange(second, &bl, &from, &node(node(l1, l2), lb))
    }

    fn principal_neg(&mut self, f: &Net, g: &Net, me: Option<(usize, Complexity)>) -> Result<Net, Error> {
        let (NetNode::NegL(f0), NetNode::NegR(g0)) = (f.node(), g.node()) else {
            return Err(elim_err("principal-neg", "leaves are not negation rules"));
        };
        let (d, a) = g0.source().split(Conj).expect("typed");
        let (_, c) = f0.target().split(Disj).expect("typed");
        let x = Context::with_left(d.clone(), Context::hole(Conj));
        let y = Context::with_right(Context::hole(Disj), c.clone());
        let inner = self.reduce(&x, &y, a, g0, f0, me)?;
        let swapped = Net::sym_hat_at(Conj, &Path::root(), inner)?;
        Net::sym_hat_at(Disj, &Path::root(), swapped)
    }

    fn commute_f(
        &mut self,
        x: &Context,
        y: &Context,
        a: &Formula,
        f: &Net,
        g: &Net,
        me: Option<(usize, Complexity)>,
    ) -> Result<(String, Net), Error> {
        let hx = x.hole_path();
        let hy = y.hole_path();
        let (i, p) = match upper(f, &Occurrence::source(hx.clone()))? {
            Upper::Param { child, at } if at.side == Side::Source => (child, at.path),
            _ => return Err(elim_err("commute", "cut occurrence is a leaf")),
        };
        let kid = f.children()[i].as_ref().clone();
        let (x2, _) = Context::at(kid.source(), &p, Conj)?;
        let h = self.reduce(&x2, y, a, &kid, g, me)?;
        let name = format!("commute-f-{}", op_name(f));
        let out = match f.node() {
            NetNode::AssocHat { conn: Conj, .. } | NetNode::SymHat { conn: Conj, .. } => rehat(f, &Path::root(), h)?,
            NetNode::AssocHat { conn: Disj, .. } | NetNode::SymHat { conn: Disj, .. } => rehat(f, &hy, h)?,
            NetNode::TopFwd(_) => Net::top_fwd(h),
            NetNode::TopBwd(_) => Net::top_bwd(h)?,
            NetNode::BotBwd(_) => {
                let c0 = h_target_inner(&h, y)?;
                let mut b = Blocks::new(Disj);
                let sk = b.skel(y);
                let (lc, lb) = (b.leaf(&c0), b.leaf(&Formula::Bot));
                let n = Net::bot_bwd(h);
                rearrange(n, &b, &node(sk.fill(lc.clone()), lb.clone()), &sk.fill(node(lc, lb)))?
            }
            NetNode::BotFwd(_) => {
                let (c0, _) = h_target_inner(&h, y)?.split(Disj).map(|(l, r)| (l.clone(), r.clone())).expect("typed");
                let mut b = Blocks::new(Disj);
                let sk = b.skel(y);
                let (lc, lb) = (b.leaf(&c0), b.leaf(&Formula::Bot));
                let n = rearrange(h, &b, &sk.fill(node(lc.clone(), lb.clone())), &node(sk.fill(lc), lb))?;
                Net::bot_fwd(n)?
            }
            NetNode::NegL(_) => {
                let inner = h_target_inner(&h, y)?;
                let (a0, c0) = inner.split(Disj).expect("typed");
                let mut b = Blocks::new(Disj);
                let sk = b.skel(y);
                let (la, lc) = (b.leaf(a0), b.leaf(c0));
                let n = rearrange(h, &b, &sk.fill(node(la.clone(), lc.clone())), &node(la, sk.fill(lc)))?;
                Net::neg_l(n)?
            }
            NetNode::NegR(f0) => {
                let (_, a0) = f0.source().split(Conj).expect("typed");
                let n = Net::neg_r(h)?;
                let b0 = f0.target().clone();
                let mut b = Blocks::new(Disj);
                let sk = b.skel(y);
                let (ln, lb) = (b.leaf(&Formula::neg(a0.clone())), b.leaf(&b0));
                rearrange(n, &b, &node(ln.clone(), sk.fill(lb.clone())), &sk.fill(node(ln, lb)))?
            }
            NetNode::ConjRule(f1, f2) => {
                let inner = h_target_inner(&h, y)?;
                let (ai, ci) = inner.split(Disj).map(|(l, r)| (l.clone(), r.clone())).expect("typed");
                let mut b = Blocks::new(Disj);
                let sk = b.skel(y);
                let (la, lc) = (b.leaf(&ai), b.leaf(&ci));
                let h = rearrange(h, &b, &sk.fill(node(la.clone(), lc.clone())), &node(la, sk.fill(lc)))?;
                let (n, other_c) = if i == 0 {
                    let n = Net::conj_rule(h, (**f2).clone())?;
                    (n, f2.target().split(Disj).expect("typed").1.clone())
                } else {
                    let n = Net::conj_rule((**f1).clone(), h)?;
                    (n, f1.target().split(Disj).expect("typed").1.clone())
                };
                let (k, _) = n.target().split(Disj).map(|(l, r)| (l.clone(), r.clone())).expect("typed");
                let mut b = Blocks::new(Disj);
                let sk = b.skel(y);
                let (lk, lc, lo) = (b.leaf(&k), b.leaf(&ci), b.leaf(&other_c));
                let (from, to) = if i == 0 {
                    (node(lk.clone(), node(sk.fill(lc.clone()), lo.clone())), sk.fill(node(lk, node(lc, lo))))
                } else {
                    (node(lk.clone(), node(lo.clone(), sk.fill(lc.clone()))), sk.fill(node(lk, node(lo, lc))))
                };
                rearrange(n, &b, &from, &to)?
            }
            NetNode::DisjRule(f1, f2) => {
                let n = if i == 0 { Net::disj_rule(h, (**f2).clone())? } else { Net::disj_rule((**f1).clone(), h)? };
                let (b1, b2) = (f1.target().clone(), f2.target().clone());
                let mut b = Blocks::new(Disj);
                let sk = b.skel(y);
                let (l1, l2) = (b.leaf(&b1), b.leaf(&b2));
                let from =
                    if i == 0 { node(sk.fill(l1.clone()), l2.clone()) } else { node(l1.clone(), sk.fill(l2.clone())) };
                rearrange(n, &b, &from, &sk.fill(node(l1, l2)))?
            }
            NetNode::Ax(_) | NetNode::Cut { .. } => return Err(elim_err("commute", "no rule to commute past")),
        };
        Ok((name, out))
    }

    fn commute_g(
        &mut self,
        x: &Context,
        y: &Context,
        a: &Formula,
        f: &Net,
        g: &Net,
        me: Option<(usize, Complexity)>,
    ) -> Result<(String, Net), Error> {
        let hx = x.hole_path();
        let hy = y.hole_path();
        let (i, p) = match upper(g, &Occurrence::target(hy.clone()))? {
            Upper::Param { child, at } if at.side == Side::Target => (child, at.path),
            _ => return Err(elim_err("commute", "cut occurrence is a leaf")),
        };
        let kid = g.children()[i].as_ref().clone();
        let (y2, _) = Context::at(kid.target(), &p, Disj)?;
        let h = self.reduce(x, &y2, a, f, &kid, me)?;
        let name = format!("commute-g-{}", op_name(g));
        let out = match g.node() {
            NetNode::AssocHat { conn: Disj, .. } | NetNode::SymHat { conn: Disj, .. } => rehat(g, &Path::root(), h)?,
            NetNode::AssocHat { conn: Conj, .. } | NetNode::SymHat { conn: Conj, .. } => rehat(g, &hx, h)?,
            NetNode::BotBwd(_) => Net::bot_bwd(h),
            NetNode::BotFwd(_) => Net::bot_fwd(h)?,
            NetNode::TopFwd(g0) => {
                let b0 = g0.source().clone();
                let n = Net::top_fwd(h);
                let mut b = Blocks::new(Conj);
                let sk = b.skel(x);
                let (lt, lb) = (b.leaf(&Formula::Top), b.leaf(&b0));
                rearrange(n, &b, &node(lt.clone(), sk.fill(lb.clone())), &sk.fill(node(lt, lb)))?
            }
            NetNode::TopBwd(_) => {
                let b0 = g.source().clone();
                let mut b = Blocks::new(Conj);
                let sk = b.skel(x);
                let (lt, lb) = (b.leaf(&Formula::Top), b.leaf(&b0));
                let n = rearrange(h, &b, &sk.fill(node(lt.clone(), lb.clone())), &node(lt, sk.fill(lb)))?;
                Net::top_bwd(n)?
            }
            NetNode::NegL(g0) => {
                let b0 = g0.source().clone();
                let n = Net::neg_l(h)?;
                let na = n.source().split(Conj).expect("typed").1.clone();
                let mut b = Blocks::new(Conj);
                let sk = b.skel(x);
                let (lb, ln) = (b.leaf(&b0), b.leaf(&na));
                rearrange(n, &b, &node(sk.fill(lb.clone()), ln.clone()), &sk.fill(node(lb, ln)))?
            }
            NetNode::NegR(g0) => {
                let (c0, a0) = g0.source().split(Conj).map(|(l, r)| (l.clone(), r.clone())).expect("typed");
                let mut b = Blocks::new(Conj);
                let sk = b.skel(x);
                let (lc, la) = (b.leaf(&c0), b.leaf(&a0));
                let n = rearrange(h, &b, &sk.fill(node(lc.clone(), la.clone())), &node(sk.fill(lc), la))?;
                Net::neg_r(n)?
            }
            NetNode::ConjRule(g1, g2) => {
                let n = if i == 0 { Net::conj_rule(h, (**g2).clone())? } else { Net::conj_rule((**g1).clone(), h)? };
                let (b1, b2) = (g1.source().clone(), g2.source().clone());
                let mut b = Blocks::new(Conj);
                let sk = b.skel(x);
                let (l1, l2) = (b.leaf(&b1), b.leaf(&b2));
                let from =
                    if i == 0 { node(sk.fill(l1.clone()), l2.clone()) } else { node(l1.clone(), sk.fill(l2.clone())) };
                rearrange(n, &b, &from, &sk.fill(node(l1, l2)))?
            }
            NetNode::DisjRule(g1, g2) => {
                let gi = if i == 0 { g1 } else { g2 };
                let (ci, ai) = gi.source().split(Conj).map(|(l, r)| (l.clone(), r.clone())).expect("typed");
                let mut b = Blocks::new(Conj);
                let sk = b.skel(x);
                let (lc, la) = (b.leaf(&ci), b.leaf(&ai));
                let h = rearrange(h, &b, &sk.fill(node(lc.clone(), la.clone())), &node(sk.fill(lc), la))?;
                let n = if i == 0 { Net::disj_rule(h, (**g2).clone())? } else { Net::disj_rule((**g1).clone(), h)? };
                let other = if i == 0 { g2 } else { g1 };
                let co = other.source().split(Conj).expect("typed").0.clone();
                let (_, rest) = n.source().split(Conj).map(|(l, r)| (l.clone(), r.clone())).expect("typed");
                let mut b = Blocks::new(Conj);
                let sk = b.skel(x);
                let (lc, lo, lr) = (b.leaf(&ci), b.leaf(&co), b.leaf(&rest));
                let (from, to) = if i == 0 {
                    (node(node(sk.fill(lc.clone()), lo.clone()), lr.clone()), sk.fill(node(node(lc, lo), lr)))
                } else {
                    (node(node(lo.clone(), sk.fill(lc.clone())), lr.clone()), sk.fill(node(node(lo, lc), lr)))
                };
                rearrange(n, &b, &from, &to)?
            }
            NetNode::Ax(_) | NetNode::Cut { .. } => return Err(elim_err("commute", "no rule to commute past")),
        };
        Ok((name, out))
    }
}

/// The formula sitting in `y`'s hole inside `h`'s target.
fn h_target_inner(h: &Net, y: &Context) -> Result<Formula, Error> {
    let (_, inner) = Context::at(h.target(), &y.hole_path(), Disj)?;
    Ok(inner)
}

/// Reapplies the structural step at the root of `n` to `body`, its hole moved under `prefix`.
fn rehat(n: &Net, prefix: &Path, body: Net) -> Result<Net, Error> {
    match n.node() {
        NetNode::AssocHat { conn, dir, ctx, .. } => {
            Net::assoc_hat_at(*conn, *dir, &prefix.join(&ctx.hole_path()), body)
        }
        NetNode::SymHat { conn, ctx, .. } => Net::sym_hat_at(*conn, &prefix.join(&ctx.hole_path()), body),
        _ => unreachable!("not a structural step"),
    }
}

fn op_name(n: &Net) -> &'static str {
    match n.node() {
        NetNode::Ax(_) => "ax",
        NetNode::AssocHat { conn: Conj, .. } => "assoc-conj",
        NetNode::AssocHat { conn: Disj, .. } => "assoc-disj",
        NetNode::SymHat { conn: Conj, .. } => "sym-conj",
        NetNode::SymHat { conn: Disj, .. } => "sym-disj",
        NetNode::TopFwd(_) => "top-fwd",
        NetNode::TopBwd(_) => "top-bwd",
        NetNode::BotBwd(_) => "bot-bwd",
        NetNode::BotFwd(_) => "bot-fwd",
        NetNode::ConjRule(..) => "conj-rule",
        NetNode::DisjRule(..) => "disj-rule",
        NetNode::NegL(_) => "neg-l",
        NetNode::NegR(_) => "neg-r",
        NetNode::Cut { .. } => "cut",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrows::ArrowTerm;
    use crate::gentzen::{gentzenize, identity_net, tens_net};
    use crate::syntax::{parse_formula, parse_term};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn check(n: &Net) -> (Net, Vec<TraceStep>) {
        let (out, trace) = eliminate_with(n, Options { checked: true, ..Options::default() }).unwrap();
        assert!(out.is_cut_free());
        assert_eq!(out.sequent(), n.sequent());
        assert_eq!(graph_of(&denote(&out)).unwrap(), graph_of(&denote(n)).unwrap());
        (out, trace)
    }

    #[test]
    fn base_case() {
        let ax = Net::ax(f("p")).unwrap();
        let c = Net::cut(Context::hole(Conj), Context::hole(Disj), f("p"), ax.clone(), ax.clone()).unwrap();
        let (out, trace) = check(&c);
        assert_eq!(out, ax);
        assert_eq!(trace.len(), 1);
        assert_eq!(trace[0].rule, "identity");
    }

    #[test]
    fn cut_free_is_untouched() {
        let n = identity_net(&f("~(p & q) | r"));
        let (out, trace) = eliminate(&n).unwrap();
        assert_eq!(out, n);
        assert!(trace.is_empty());
    }

    #[test]
    fn composite_of_identities() {
        let t = parse_term("id(p & q) . id(p & q)").unwrap();
        let (out, _) = check(&gentzenize(&t).unwrap());
        assert_eq!(out.sequent(), (f("p & q"), f("p & q")));
        assert_eq!(graph_of(&denote(&out)).unwrap(), crate::brauer::BrauerArrow::identity(2));
    }

    #[test]
    fn principal_conj_drops_degree() {
        let ax = |s: &str| Net::ax(f(s)).unwrap();
        let g = Net::conj_rule(Net::bot_bwd(ax("p")), Net::bot_bwd(ax("q"))).unwrap();
        let pq = f("p & q");
        let h = tens_net(Conj, ax("p"), ax("q"));
        let cut =
            Net::cut(Context::hole(Conj), Context::with_right(Context::hole(Disj), f("bot | bot")), pq, h, g).unwrap();
        let (_, trace) = check(&cut);
        assert_eq!(trace[0].rule, "principal-conj");
        assert_eq!(trace[0].before, Complexity { degree: 1, rank: 0 });
        assert!(trace[0].after.iter().all(|c| c.degree == 0));
    }

    #[test]
    fn gentzenized_terms() {
        for s in [
            "sym_conj(p, q) . sym_conj(q, p)",
            "dist(p, q, r) . tens_conj(id(p), sym_disj(q, r))",
            "sigma_disj(p, p) . dist(p, ~p, p) . delta_conj(p, p)",
            "dist(q, ~p, p) . delta_conj(p, q)",
            "assoc_fwd_disj(p, q, r) . tens_disj(id(p), sym_disj(q, r))",
            "unit_del_fwd_conj(p) . unit_del_bwd_conj(p)",
            "unit_del_fwd_disj(p | q) . tens_disj(sym_disj(p, q), id(bot))",
            "dist(p & q, r, s) . tens_conj(sym_conj(q, p), id(r | s))",
        ] {
            let t = parse_term(s).unwrap();
            let n = gentzenize(&t).unwrap();
            let (_, trace) = check(&n);
            assert!(!trace.is_empty(), "{s}");
        }
    }

    #[test]
    fn strategies_agree_on_graphs() {
        let t = parse_term("sigma_disj(p, p) . dist(p, ~p, p) . delta_conj(p, p)").unwrap();
        let n = gentzenize(&t).unwrap();
        let (a, _) = eliminate_with(&n, Options { strategy: Strategy::GSideFirst, checked: true }).unwrap();
        let (b, _) = eliminate_with(&n, Options { strategy: Strategy::FSideFirst, checked: true }).unwrap();
        assert_eq!(graph_of(&denote(&a)).unwrap(), graph_of(&denote(&b)).unwrap());
        assert_eq!(graph_of(&denote(&a)).unwrap(), graph_of(&t).unwrap());
        let _ = ArrowTerm::Id(f("p"));
    }
}
